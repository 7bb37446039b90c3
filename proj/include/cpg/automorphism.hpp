#pragma once

// Multiplication tables of small groups and automorphism group search.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cpg/perm.hpp"

namespace cpg {

/// A finite group enumerated along its Cayley graph: element 0 is the
/// identity and every other element is first reached as parent * generator
/// in breadth-first order.
class GroupTable {
 public:
  using Index = std::uint32_t;

  /// Orders above max_order (and above 4096 in any case) are rejected with
  /// BudgetExhausted; the full product table is stored.
  explicit GroupTable(const PermGroup& group, std::size_t max_order = 4096);

  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t generator_count() const noexcept { return generators_.size(); }
  const Perm& element(Index i) const { return elements_[i]; }
  Index index_of(const Perm& g) const;
  /// Index of generators()[k].
  Index generator(std::size_t k) const { return generators_[k]; }

  Index multiply(Index a, Index b) const { return product_[static_cast<std::size_t>(a) * size() + b]; }
  Index inverse(Index a) const { return inverse_[a]; }
  Index conjugate(Index a, Index by) const { return multiply(multiply(inverse(by), a), by); }
  std::uint32_t element_order(Index a) const { return order_[a]; }
  /// Size of the conjugacy class of a.
  std::size_t class_size(Index a) const { return class_sizes_[class_of_[a]]; }
  std::size_t centralizer_order(Index a) const { return size() / class_size(a); }

  /// Breadth-first spanning tree: parent(e) * generator(tree_generator(e)) = e.
  Index parent(Index e) const { return parent_[e]; }
  std::size_t tree_generator(Index e) const { return tree_generator_[e]; }
  /// Word for e as a list of generator positions, read left to right.
  std::vector<std::size_t> word(Index e) const;

  const PermGroup& group() const noexcept { return group_; }

 private:
  PermGroup group_;
  std::vector<Perm> elements_;
  std::vector<Index> generators_;
  std::vector<Index> product_;
  std::vector<Index> inverse_;
  std::vector<std::uint32_t> order_;
  std::vector<std::size_t> class_of_;
  std::vector<std::size_t> class_sizes_;
  std::vector<Index> parent_;
  std::vector<std::size_t> tree_generator_;
  std::unordered_map<Perm, Index, PermHash> lookup_;
};

struct Automorphism {
  std::vector<GroupTable::Index> generator_images;
  /// The automorphism as a permutation of element indices.
  Perm action;
  bool inner = false;
};

struct AutSearchOptions {
  std::uint64_t node_budget = 10000000;
  std::size_t max_order = 1000;
  std::size_t max_generators = 3;
};

/// The automorphisms of a finite group found by backtracking over
/// generator images. `group()` is the faithful action of the found maps on
/// the element set; when `complete()` its order equals `size()`.
class AutomorphismSet {
 public:
  const GroupTable& table() const noexcept { return *table_; }
  const std::vector<Automorphism>& maps() const noexcept { return maps_; }
  std::size_t size() const noexcept { return maps_.size(); }
  /// False when the node budget ran out; the maps found are still genuine
  /// automorphisms but the list may be partial.
  bool complete() const noexcept { return complete_; }
  std::uint64_t nodes_explored() const noexcept { return nodes_; }

  const PermGroup& group() const noexcept { return group_; }
  std::size_t inner_count() const noexcept { return inner_count_; }
  /// Conjugation x -> g^-1 x g as a permutation of element indices.
  Perm conjugation_action(const Perm& g) const;
  /// The inner automorphism group as a subgroup of group().
  PermGroup inner_group() const;

  /// Closure and inner-automorphism checks; throws CertificationFailure.
  void certify() const;

 private:
  friend AutomorphismSet aut_group_search(const PermGroup&, const AutSearchOptions&);

  std::shared_ptr<const GroupTable> table_;
  std::vector<Automorphism> maps_;
  bool complete_ = true;
  std::uint64_t nodes_ = 0;
  std::size_t inner_count_ = 0;
  PermGroup group_;
};

/// Complete automorphism group of G. Candidate images are pruned by
/// (element order, centralizer order) fingerprints of single generators and
/// of pairwise generator products; every candidate is checked against the
/// Cayley-graph presentation of G. Requires |G| <= max_order and at most
/// max_generators generators.
AutomorphismSet aut_group_search(const PermGroup& g, const AutSearchOptions& options = {});

/// Z(G) = 1 and Aut(G) = Inn(G). Throws BudgetExhausted if the search is cut
/// short.
bool is_complete(const PermGroup& g, const AutSearchOptions& options = {});

}  // namespace cpg
