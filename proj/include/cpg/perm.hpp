#pragma once

// Finite permutation groups.
//
// Points are 0-based internally; every text boundary uses 1-based cycle
// notation such as `(1 2 3)(4 5)`, with the identity written `()`.
// Products act on the right: x^(g*h) = (x^g)^h, so `g * h` applies g first.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "cpg/homalg.hpp"

namespace cpg {

using Point = std::uint16_t;
inline constexpr std::size_t kMaxPermDegree = 65535;

class Perm {
 public:
  Perm() = default;
  /// Identity on `degree` points.
  explicit Perm(std::size_t degree);
  /// `images[i]` is the image of point i; must be a bijection.
  explicit Perm(std::vector<Point> images);

  /// Parses 1-based cycle notation. The degree is the larger of `degree`
  /// and the largest point mentioned.
  static Perm parse(std::string_view text, std::size_t degree = 0);
  /// Builds from 0-based cycles.
  static Perm from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](std::size_t point) const { return images_[point]; }
  const std::vector<Point>& images() const noexcept { return images_; }

  bool is_identity() const;
  /// Smallest moved point, or degree() for the identity.
  std::size_t first_moved_point() const;
  Perm inverse() const;
  Perm pow(std::int64_t exponent) const;
  Integer order() const;
  bool is_even() const;
  /// 0-based cycles of length >= 2, each starting at its smallest point.
  std::vector<std::vector<Point>> cycles() const;
  /// Same permutation on more points, fixing the new ones.
  Perm extended(std::size_t degree) const;
  /// Shifts every point up by `offset` inside a larger degree.
  Perm shifted(std::size_t offset, std::size_t degree) const;

  std::string to_string() const;

  friend Perm operator*(const Perm& a, const Perm& b);
  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<Point> images_;
};

/// [a, b] = a b a^-1 b^-1
Perm commutator(const Perm& a, const Perm& b);
/// g^h = h^-1 g h
Perm conjugate(const Perm& g, const Perm& h);

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

struct PermLimits {
  std::size_t max_degree = 64;
  std::size_t max_index = 10000;
  std::size_t max_elements = 2000000;
};

/// A permutation group with an eagerly built stabilizer chain. After
/// construction every query is read-only, so a PermGroup can be shared
/// across threads.
class PermGroup {
 public:
  PermGroup() : PermGroup(0, {}) {}
  PermGroup(std::size_t degree, std::vector<Perm> generators);

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Perm>& generators() const noexcept { return generators_; }
  const Integer& order() const noexcept { return order_; }
  Perm identity() const { return Perm(degree_); }

  bool contains(const Perm& g) const;
  bool is_subgroup_of(const PermGroup& other) const;
  bool is_normal_in(const PermGroup& other) const;
  bool is_abelian() const;
  bool is_trivial() const { return order_ == 1; }

  /// Same group with one more generator; reuses the existing chain.
  PermGroup with_generator(const Perm& g) const;

  /// All elements in chain order. Throws BudgetExhausted past `limit`.
  std::vector<Perm> elements(std::size_t limit = PermLimits{}.max_elements) const;

  /// The unique element of the right coset (this group) * x whose base
  /// images are lexicographically smallest.
  Perm canonical_coset_representative(const Perm& x) const;

  const std::vector<Point>& base() const noexcept { return base_; }
  std::vector<std::size_t> orbit_lengths() const;

  /// Equal as subgroups of Sym(degree).
  bool operator==(const PermGroup& other) const;

 private:
  struct Level {
    Point base_point = 0;
    std::vector<Point> orbit;
    std::vector<std::int32_t> slot;  // point -> index into orbit, -1 if absent
    std::vector<Perm> transversal;   // transversal[i] maps base_point to orbit[i]
    std::vector<Perm> inverse_transversal;
    std::vector<std::size_t> generators;  // indices into strong_
  };

  void schreier_sims(std::size_t start_level);
  void refresh_level(std::size_t level);
  void append_base_point(const Perm& moving);
  /// Sifts g through levels [from, end). Returns the residue and the level
  /// at which sifting stopped (levels_.size() when it went all the way).
  std::pair<Perm, std::size_t> strip(Perm g, std::size_t from) const;
  void finish();

  std::size_t degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Perm> strong_;
  std::vector<Point> base_;
  std::vector<Level> levels_;
  Integer order_ = 1;
};

/// Throws InputError when the degree exceeds `limits.max_degree`.
Integer group_order(const PermGroup& g, const PermLimits& limits = {});
/// Throws InputError on degree mismatch.
bool membership(const PermGroup& g, const Perm& element);

PermGroup normal_closure(const PermGroup& g, const std::vector<Perm>& seeds);
PermGroup derived_subgroup(const PermGroup& g);
/// Requires h <= g.
PermGroup centralizer(const PermGroup& g, const PermGroup& h,
                      const PermLimits& limits = {});
PermGroup center(const PermGroup& g, const PermLimits& limits = {});

/// G/N realized on the right cosets of N.
struct QuotientAction {
  PermGroup group;
  std::vector<Perm> generator_images;  // image of each generator of G
  std::vector<Perm> coset_representatives;
};

/// Checks N <= G and N normal in G, then builds the action of G on the
/// cosets of N. Throws PreconditionError / InputError on misuse.
QuotientAction quotient_regular_action(const PermGroup& g, const PermGroup& n,
                                       const PermLimits& limits = {});

PermGroup direct_product(const PermGroup& g, const PermGroup& h);

// Named groups in their natural actions.
PermGroup symmetric_group(std::size_t n);
PermGroup alternating_group(std::size_t n);
PermGroup cyclic_group(std::size_t n);  // regular action
PermGroup dihedral_group(std::size_t n);  // order 2n on n points
PermGroup klein_four_group();

/// Parses a group description: a named group (`S5`, `A4`, `Z12`, `D6`,
/// `V4`, n <= 10), a comma-separated list of permutations in cycle
/// notation, or `x`-separated direct products of these.
PermGroup parse_group(std::string_view spec, const PermLimits& limits = {});

/// `S5`, `A5`, `1` or a generic `group of order N` label; always followed
/// by ` (order N)`.
std::string describe_group(const PermGroup& g);

}  // namespace cpg
