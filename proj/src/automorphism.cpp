#include "cpg/automorphism.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "cpg/errors.hpp"

namespace cpg {

namespace {
constexpr std::size_t kFullProductTableLimit = 4096;
}

GroupTable::GroupTable(const PermGroup& group, std::size_t max_order) : group_(group) {
  max_order = std::min(max_order, kFullProductTableLimit);
  if (group.order() > max_order)
    throw BudgetExhausted("group of order " + group.order().str() +
                          " exceeds multiplication-table cap " + std::to_string(max_order));
  const auto& gens = group.generators();
  elements_.push_back(group.identity());
  lookup_.emplace(elements_.front(), 0);
  parent_.push_back(0);
  tree_generator_.push_back(0);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Perm next = elements_[i] * gens[k];
      if (lookup_.count(next)) continue;
      lookup_.emplace(next, static_cast<Index>(elements_.size()));
      elements_.push_back(std::move(next));
      parent_.push_back(static_cast<Index>(i));
      tree_generator_.push_back(k);
    }
  }
  if (elements_.size() != group.order())
    throw CertificationFailure("Cayley enumeration disagrees with stabilizer chain order");

  for (const auto& g : gens) generators_.push_back(index_of(g));

  const std::size_t n = elements_.size();
  product_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) product_[a * n + b] = index_of(elements_[a] * elements_[b]);
  inverse_.resize(n);
  order_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    inverse_[a] = index_of(elements_[a].inverse());
    order_[a] = static_cast<std::uint32_t>(elements_[a].order());
  }

  class_of_.assign(n, n);
  for (std::size_t start = 0; start < n; ++start) {
    if (class_of_[start] != n) continue;
    const std::size_t id = class_sizes_.size();
    std::vector<Index> queue{static_cast<Index>(start)};
    class_of_[start] = id;
    for (std::size_t q = 0; q < queue.size(); ++q)
      for (Index g : generators_) {
        const Index c = conjugate(queue[q], g);
        if (class_of_[c] == n) {
          class_of_[c] = id;
          queue.push_back(c);
        }
      }
    class_sizes_.push_back(queue.size());
  }
}

GroupTable::Index GroupTable::index_of(const Perm& g) const {
  const auto it = lookup_.find(g);
  if (it == lookup_.end()) throw InputError(g.to_string() + " is not an element of the group");
  return it->second;
}

std::vector<std::size_t> GroupTable::word(Index e) const {
  std::vector<std::size_t> out;
  while (e != 0) {
    out.push_back(tree_generator_[e]);
    e = parent_[e];
  }
  std::reverse(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

Perm AutomorphismSet::conjugation_action(const Perm& g) const {
  const GroupTable& t = *table_;
  const auto gi = t.index_of(g);
  std::vector<Point> images(t.size());
  for (std::size_t e = 0; e < t.size(); ++e)
    images[e] = static_cast<Point>(t.conjugate(static_cast<GroupTable::Index>(e), gi));
  return Perm(std::move(images));
}

PermGroup AutomorphismSet::inner_group() const {
  std::vector<Perm> gens;
  for (const auto& g : table_->group().generators()) gens.push_back(conjugation_action(g));
  return PermGroup(table_->size(), std::move(gens));
}

void AutomorphismSet::certify() const {
  if (complete_ && group_.order() != maps_.size())
    throw CertificationFailure("automorphism list is not closed under composition: " +
                               std::to_string(maps_.size()) + " maps generate a group of order " +
                               group_.order().str());
  for (const auto& g : table_->group().generators())
    if (complete_ && !group_.contains(conjugation_action(g)))
      throw CertificationFailure("inner automorphism by " + g.to_string() + " was not found");
  if (complete_ && maps_.size() % inner_count_ != 0)
    throw CertificationFailure("|Inn| does not divide |Aut|");
}

AutomorphismSet aut_group_search(const PermGroup& g, const AutSearchOptions& options) {
  if (g.order() > options.max_order)
    throw InputError("automorphism search is limited to groups of order <= " +
                     std::to_string(options.max_order) + ", got " + g.order().str());
  if (g.generators().size() > options.max_generators)
    throw InputError("automorphism search needs at most " + std::to_string(options.max_generators) +
                     " generators, got " + std::to_string(g.generators().size()));

  AutomorphismSet out;
  auto table = std::make_shared<const GroupTable>(g, options.max_order);
  out.table_ = table;
  const GroupTable& t = *table;
  using Index = GroupTable::Index;
  const std::size_t n = t.size();
  const std::size_t k = t.generator_count();

  auto fingerprint = [&](Index x) { return std::pair{t.element_order(x), t.class_size(x)}; };

  std::vector<std::vector<Index>> candidates(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t x = 0; x < n; ++x)
      if (fingerprint(static_cast<Index>(x)) == fingerprint(t.generator(i)))
        candidates[i].push_back(static_cast<Index>(x));

  std::set<std::vector<Index>> inner;
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<Index> images(k);
    for (std::size_t i = 0; i < k; ++i) images[i] = t.conjugate(t.generator(i), static_cast<Index>(x));
    inner.insert(std::move(images));
  }
  out.inner_count_ = inner.size();

  // Extends generator images along the Cayley spanning tree and checks
  // every Cayley-graph edge, i.e. every relator of the table presentation.
  std::vector<Index> phi(n);
  std::vector<char> hit(n);
  auto extends_to_automorphism = [&](const std::vector<Index>& images) {
    phi[0] = 0;
    for (std::size_t e = 1; e < n; ++e) phi[e] = t.multiply(phi[t.parent(static_cast<Index>(e))], images[t.tree_generator(static_cast<Index>(e))]);
    for (std::size_t e = 0; e < n; ++e)
      for (std::size_t j = 0; j < k; ++j)
        if (phi[t.multiply(static_cast<Index>(e), t.generator(j))] != t.multiply(phi[e], images[j]))
          return false;
    std::fill(hit.begin(), hit.end(), 0);
    for (Index v : phi) {
      if (hit[v]) return false;
      hit[v] = 1;
    }
    return true;
  };

  std::vector<Index> images(k);
  bool exhausted = false;
  std::function<void(std::size_t)> search = [&](std::size_t depth) {
    if (exhausted) return;
    if (depth == k) {
      if (!extends_to_automorphism(images)) return;
      Automorphism a;
      a.generator_images = images;
      std::vector<Point> action(n);
      for (std::size_t e = 0; e < n; ++e) action[e] = static_cast<Point>(phi[e]);
      a.action = Perm(std::move(action));
      a.inner = inner.count(images) > 0;
      out.maps_.push_back(std::move(a));
      return;
    }
    for (Index c : candidates[depth]) {
      if (++out.nodes_ > options.node_budget) {
        exhausted = true;
        return;
      }
      bool consistent = true;
      for (std::size_t j = 0; j < depth && consistent; ++j)
        consistent = fingerprint(t.multiply(images[j], c)) ==
                     fingerprint(t.multiply(t.generator(j), t.generator(depth)));
      if (!consistent) continue;
      images[depth] = c;
      search(depth + 1);
      if (exhausted) return;
    }
  };
  search(0);
  out.complete_ = !exhausted;

  PermGroup acting(n, {});
  for (const auto& a : out.maps_)
    if (!acting.contains(a.action)) acting = acting.with_generator(a.action);
  out.group_ = std::move(acting);
  out.certify();
  return out;
}

bool is_complete(const PermGroup& g, const AutSearchOptions& options) {
  const AutomorphismSet aut = aut_group_search(g, options);
  if (!aut.complete())
    throw BudgetExhausted("automorphism search exhausted its node budget after " +
                          std::to_string(aut.nodes_explored()) + " nodes");
  return aut.inner_count() == aut.table().size() && aut.size() == aut.inner_count();
}

}  // namespace cpg
