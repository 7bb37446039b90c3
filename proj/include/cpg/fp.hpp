#pragma once

// Finitely presented groups.
//
// Presentation text: `< a, b | a^3 = b^2 >`. Generator names match
// [a-zA-Z][a-zA-Z0-9_]*; a word is a juxtaposition of `name^k` factors,
// parenthesized subwords `(a b)^3`, or `1`. A relation `u = v` becomes the
// relator u v^-1. Runs of letters are split greedily into the longest
// declared generator names, so `abab` reads as a b a b when a and b are
// generators.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cpg/homalg.hpp"
#include "cpg/perm.hpp"

namespace cpg {

struct Syllable {
  std::size_t generator;
  std::int64_t exponent;
  bool operator==(const Syllable&) const = default;
};

/// Freely reduced word: adjacent syllables use different generators and no
/// exponent is zero.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Syllable> syllables);  // reduces
  static Word generator(std::size_t g, std::int64_t exponent = 1);

  const std::vector<Syllable>& syllables() const noexcept { return syllables_; }
  bool empty() const noexcept { return syllables_.empty(); }
  std::uint64_t length() const;
  std::int64_t exponent_sum(std::size_t generator) const;
  /// Largest generator index used plus one.
  std::size_t generator_bound() const;

  Word inverse() const;
  Word pow(std::int64_t exponent) const;
  /// Removes matching syllables from the two ends.
  Word cyclically_reduced() const;

  /// Letters 2g (for g) and 2g+1 (for g^-1), one per unit of exponent.
  std::vector<std::uint32_t> letters() const;

  /// `a^3 b^-2`, `a b a^-1`; the empty word prints as `1`.
  std::string to_string(const std::vector<std::string>& names) const;

  friend Word operator*(const Word& a, const Word& b);
  bool operator==(const Word&) const = default;

 private:
  void reduce();
  std::vector<Syllable> syllables_;
};

class FpPresentation {
 public:
  FpPresentation() = default;
  /// Validates names and drops relators that reduce to the empty word.
  FpPresentation(std::vector<std::string> names, std::vector<Word> relators);

  const std::vector<std::string>& generator_names() const noexcept { return names_; }
  const std::vector<Word>& relators() const noexcept { return relators_; }
  std::size_t generator_count() const noexcept { return names_.size(); }
  std::optional<std::size_t> find_generator(std::string_view name) const;

  /// Parses a word in this presentation's generators.
  Word parse_word(std::string_view text) const;
  /// Comma-separated list of words; empty text yields an empty list.
  std::vector<Word> parse_word_list(std::string_view text) const;

  /// `< a, b | a^3 b^-2 >`; parse_presentation() reads it back exactly.
  std::string to_string() const;
  bool operator==(const FpPresentation&) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<Word> relators_;
};

/// Throws ParseError (with position) or InputError for unknown names.
FpPresentation parse_presentation(std::string_view text);

/// Right action of a presented group on the cosets of a subgroup. Coset 0
/// is the subgroup itself; cosets are numbered in order of first
/// appearance when the table is scanned row by row, letter by letter
/// (a, a^-1, b, b^-1, ...).
class CosetTable {
 public:
  CosetTable(FpPresentation presentation, std::vector<Word> subgroup,
             std::vector<std::vector<std::uint32_t>> rows);

  const FpPresentation& presentation() const noexcept { return presentation_; }
  const std::vector<Word>& subgroup_generators() const noexcept { return subgroup_; }
  std::size_t index() const noexcept { return rows_.size(); }
  /// Coset reached from `coset` by letter (2g or 2g+1).
  std::uint32_t act(std::uint32_t coset, std::uint32_t letter) const { return rows_[coset][letter]; }
  std::uint32_t trace(std::uint32_t coset, const Word& w) const;
  const std::vector<std::vector<std::uint32_t>>& rows() const noexcept { return rows_; }

  /// Action of each generator as a permutation of the cosets.
  std::vector<Perm> generator_permutations() const;

  /// Every relator closes at every coset, every subgroup generator closes at
  /// coset 0, inverse columns agree and numbering is standard.
  bool is_valid() const;

  /// Spanning-tree representatives: rep(0) is empty and each other coset is
  /// reached from an earlier one by a single letter.
  std::vector<Word> coset_representatives() const;
  /// Schreier generators rep(c) g rep(c g)^-1 for each edge (c, g) outside
  /// the spanning tree, ordered by coset then generator.
  std::vector<Word> schreier_generators() const;

 private:
  FpPresentation presentation_;
  std::vector<Word> subgroup_;
  std::vector<std::vector<std::uint32_t>> rows_;
};

enum class EnumerationStatus { kClosed, kBudgetExhausted };

struct EnumerationResult {
  EnumerationStatus status;
  std::optional<CosetTable> table;  // set when closed
  std::size_t cosets_defined = 0;
};

inline constexpr std::size_t kDefaultMaxCosets = 1000000;

/// Felsch-style coset enumeration with a deduction stack. Definitions fill
/// the first undefined entry (lowest coset, then letter order). Running out
/// of cosets is reported as kBudgetExhausted, meaning the index is unknown.
EnumerationResult todd_coxeter(const FpPresentation& presentation,
                               const std::vector<Word>& subgroup,
                               std::size_t max_cosets = kDefaultMaxCosets);

/// True iff every relator maps to the identity. Throws InputError on arity
/// or degree mismatch.
bool verify_hom(const FpPresentation& presentation, const std::vector<Perm>& images);

/// Evaluates a word under generator images.
Perm evaluate(const Word& w, const std::vector<Perm>& images, std::size_t degree);

/// Coset table of the kernel of generator -> image, built from the right
/// regular action of the image group. The subgroup generators recorded in
/// the table are its Schreier generators.
CosetTable kernel_coset_table(const FpPresentation& presentation,
                              const std::vector<Perm>& images,
                              std::size_t max_index = 10000);

/// Builds a standardized table from any transitive right action given on
/// integer-vector states. `act(state, generator)` must be a bijection for
/// each generator.
CosetTable coset_table_from_action(
    const FpPresentation& presentation, const std::vector<std::int64_t>& start,
    const std::function<std::vector<std::int64_t>(const std::vector<std::int64_t>&, std::size_t,
                                                  bool inverse)>& act,
    std::size_t max_index);

struct SubgroupPresentation {
  FpPresentation presentation;
  /// Each surviving generator as a word in the parent generators.
  std::vector<Word> generator_words;
  std::size_t schreier_generator_count = 0;
  std::size_t rewritten_relator_count = 0;
};

/// Reidemeister-Schreier rewriting over the table's spanning tree. The only
/// simplifications are free reduction and deleting relators of length <= 1
/// together with the generators they kill.
SubgroupPresentation reidemeister_schreier(const CosetTable& table);

/// Exponent-sum matrix: one row per relator, one column per generator.
IntMatrix relation_matrix(const FpPresentation& presentation);
AbelianStructure abelianization(const FpPresentation& presentation);

}  // namespace cpg
