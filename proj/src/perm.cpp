#include "cpg/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <unordered_map>
#include <utility>

#include "cpg/errors.hpp"

namespace cpg {

// ---------------------------------------------------------------------------
// Perm

Perm::Perm(std::size_t degree) : images_(degree) {
  if (degree > kMaxPermDegree) throw InputError("permutation degree exceeds 65535");
  std::iota(images_.begin(), images_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) throw InputError("image list is not a bijection");
    seen[p] = true;
  }
}

Perm Perm::from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  Perm out(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Point a = cycle[i];
      if (a >= degree) throw InputError("cycle point outside degree");
      if (used[a]) throw InputError("point " + std::to_string(a + 1) + " repeated in cycles");
      used[a] = true;
      out.images_[a] = cycle[(i + 1) % cycle.size()];
    }
  }
  return out;
}

Perm Perm::parse(std::string_view text, std::size_t degree) {
  std::vector<std::vector<Point>> cycles;
  std::size_t max_point = 0;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (pos == text.size()) throw ParseError("empty permutation (write () for the identity)", pos);
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '('", pos);
    ++pos;
    std::vector<Point> cycle;
    for (;;) {
      skip();
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      if (pos < text.size() && text[pos] == ',' && !cycle.empty()) {
        ++pos;
        continue;
      }
      const std::size_t start = pos;
      std::size_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (value > kMaxPermDegree) throw ParseError("point too large", start);
        ++pos;
      }
      if (pos == start) throw ParseError("expected point number", start);
      if (value == 0) throw ParseError("points are numbered from 1", start);
      max_point = std::max(max_point, value);
      cycle.push_back(static_cast<Point>(value - 1));
    }
    if (cycle.size() >= 2) cycles.push_back(std::move(cycle));
    skip();
  }
  return from_cycles(std::max(degree, max_point), cycles);
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::size_t Perm::first_moved_point() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return i;
  return images_.size();
}

Perm Perm::inverse() const {
  Perm out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[images_[i]] = static_cast<Point>(i);
  return out;
}

Perm Perm::pow(std::int64_t exponent) const {
  Perm base = exponent < 0 ? inverse() : *this;
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-(exponent + 1)) + 1
                                 : static_cast<std::uint64_t>(exponent);
  Perm result(degree());
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::vector<std::vector<Point>> Perm::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    std::vector<Point> cycle;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      cycle.push_back(static_cast<Point>(j));
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

Integer Perm::order() const {
  Integer result = 1;
  for (const auto& cycle : cycles()) result = lcm(result, Integer(cycle.size()));
  return result;
}

bool Perm::is_even() const {
  std::size_t transpositions = 0;
  for (const auto& cycle : cycles()) transpositions += cycle.size() - 1;
  return transpositions % 2 == 0;
}

Perm Perm::extended(std::size_t degree) const {
  if (degree < images_.size()) throw InputError("cannot shrink a permutation");
  Perm out(degree);
  std::copy(images_.begin(), images_.end(), out.images_.begin());
  return out;
}

Perm Perm::shifted(std::size_t offset, std::size_t degree) const {
  if (offset + images_.size() > degree) throw InputError("shifted permutation does not fit");
  Perm out(degree);
  for (std::size_t i = 0; i < images_.size(); ++i)
    out.images_[offset + i] = static_cast<Point>(offset + images_[i]);
  return out;
}

std::string Perm::to_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::string out;
  for (const auto& cycle : cs) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(cycle[i] + 1);
    }
    out += ')';
  }
  return out;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw InputError("degree mismatch in permutation product");
  Perm out;
  out.images_.resize(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) out.images_[i] = b.images_[a.images_[i]];
  return out;
}

Perm commutator(const Perm& a, const Perm& b) { return a * b * a.inverse() * b.inverse(); }

Perm conjugate(const Perm& g, const Perm& h) { return h.inverse() * g * h; }

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

// ---------------------------------------------------------------------------
// PermGroup: deterministic Schreier-Sims

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators)
    : degree_(degree), generators_(std::move(generators)) {
  if (degree_ > kMaxPermDegree) throw InputError("group degree exceeds 65535");
  for (const auto& g : generators_) {
    if (g.degree() != degree_)
      throw InputError("generator " + g.to_string() + " has degree " +
                       std::to_string(g.degree()) + ", expected " + std::to_string(degree_));
    if (g.is_identity()) continue;
    if (std::find(strong_.begin(), strong_.end(), g) != strong_.end()) continue;
    strong_.push_back(g);
  }
  for (const auto& s : strong_) {
    bool fixes_base = true;
    for (Point b : base_)
      if (s[b] != b) {
        fixes_base = false;
        break;
      }
    if (fixes_base) append_base_point(s);
  }
  for (std::size_t l = 0; l < levels_.size(); ++l) refresh_level(l);
  if (!levels_.empty()) schreier_sims(levels_.size() - 1);
  finish();
}

void PermGroup::append_base_point(const Perm& moving) {
  const std::size_t point = moving.first_moved_point();
  base_.push_back(static_cast<Point>(point));
  Level level;
  level.base_point = static_cast<Point>(point);
  levels_.push_back(std::move(level));
}

void PermGroup::refresh_level(std::size_t l) {
  Level& level = levels_[l];
  level.generators.clear();
  for (std::size_t i = 0; i < strong_.size(); ++i) {
    bool fixes = true;
    for (std::size_t j = 0; j < l; ++j)
      if (strong_[i][base_[j]] != base_[j]) {
        fixes = false;
        break;
      }
    if (fixes) level.generators.push_back(i);
  }
  level.orbit.assign(1, level.base_point);
  level.slot.assign(degree_, -1);
  level.slot[level.base_point] = 0;
  level.transversal.assign(1, Perm(degree_));
  level.inverse_transversal.assign(1, Perm(degree_));
  for (std::size_t i = 0; i < level.orbit.size(); ++i) {
    for (std::size_t gi : level.generators) {
      const Perm& s = strong_[gi];
      const Point image = s[level.orbit[i]];
      if (level.slot[image] >= 0) continue;
      level.slot[image] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(image);
      Perm u = level.transversal[i] * s;
      level.inverse_transversal.push_back(u.inverse());
      level.transversal.push_back(std::move(u));
    }
  }
}

std::pair<Perm, std::size_t> PermGroup::strip(Perm g, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const Level& level = levels_[l];
    const std::int32_t slot = level.slot[g[level.base_point]];
    if (slot < 0) return {std::move(g), l};
    g = g * level.inverse_transversal[static_cast<std::size_t>(slot)];
  }
  return {std::move(g), levels_.size()};
}

void PermGroup::schreier_sims(std::size_t start_level) {
  // Levels deeper than i are complete: their strong generators generate the
  // full pointwise stabilizer of the preceding base points.
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(start_level);
  while (i >= 0) {
    const std::size_t li = static_cast<std::size_t>(i);
    bool extended = false;
    for (std::size_t oi = 0; oi < levels_[li].orbit.size() && !extended; ++oi) {
      const std::vector<std::size_t> gens = levels_[li].generators;
      for (std::size_t gi : gens) {
        const Level& level = levels_[li];
        const Perm& s = strong_[gi];
        const Point image = s[level.orbit[oi]];
        const auto slot = static_cast<std::size_t>(level.slot[image]);
        Perm schreier = level.transversal[oi] * s * level.inverse_transversal[slot];
        if (schreier.is_identity()) continue;
        auto [residue, stop] = strip(std::move(schreier), li + 1);
        if (residue.is_identity()) continue;
        strong_.push_back(residue);
        if (stop == levels_.size()) append_base_point(residue);
        for (std::size_t l = 0; l <= stop; ++l) refresh_level(l);
        i = static_cast<std::ptrdiff_t>(stop);
        extended = true;
        break;
      }
    }
    if (!extended) --i;
  }
}

void PermGroup::finish() {
  order_ = 1;
  for (const auto& level : levels_) order_ *= level.orbit.size();
}

bool PermGroup::contains(const Perm& g) const {
  if (g.degree() != degree_)
    throw InputError("permutation degree " + std::to_string(g.degree()) +
                     " does not match group degree " + std::to_string(degree_));
  auto [residue, stop] = strip(g, 0);
  return stop == levels_.size() && residue.is_identity();
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (degree_ != other.degree_) return false;
  return std::all_of(strong_.begin(), strong_.end(),
                     [&](const Perm& g) { return other.contains(g); });
}

bool PermGroup::is_normal_in(const PermGroup& other) const {
  if (!is_subgroup_of(other)) return false;
  for (const auto& n : strong_)
    for (const auto& g : other.generators_)
      if (!contains(conjugate(n, g))) return false;
  return true;
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < strong_.size(); ++i)
    for (std::size_t j = i + 1; j < strong_.size(); ++j)
      if (strong_[i] * strong_[j] != strong_[j] * strong_[i]) return false;
  return true;
}

PermGroup PermGroup::with_generator(const Perm& g) const {
  PermGroup out = *this;
  out.generators_.push_back(g);
  if (contains(g)) return out;
  out.strong_.push_back(g);
  std::size_t fixed = 0;
  while (fixed < out.base_.size() && g[out.base_[fixed]] == out.base_[fixed]) ++fixed;
  if (fixed == out.base_.size()) out.append_base_point(g);
  for (std::size_t l = 0; l <= fixed; ++l) out.refresh_level(l);
  out.schreier_sims(fixed);
  out.finish();
  return out;
}

std::vector<Perm> PermGroup::elements(std::size_t limit) const {
  if (order_ > limit)
    throw BudgetExhausted("group of order " + order_.str() + " exceeds element limit " +
                          std::to_string(limit));
  std::vector<Perm> out;
  out.reserve(static_cast<std::size_t>(order_));
  // g = u_{k-1} ... u_1 u_0 with u_l from the level-l transversal.
  std::function<void(std::size_t, const Perm&)> walk = [&](std::size_t remaining,
                                                           const Perm& prefix) {
    if (remaining == 0) {
      out.push_back(prefix);
      return;
    }
    const Level& level = levels_[remaining - 1];
    for (const auto& u : level.transversal) walk(remaining - 1, prefix * u);
  };
  walk(levels_.size(), Perm(degree_));
  return out;
}

Perm PermGroup::canonical_coset_representative(const Perm& x) const {
  Perm current = x;
  for (const auto& level : levels_) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < level.orbit.size(); ++i)
      if (current[level.orbit[i]] < current[level.orbit[best]]) best = i;
    if (best != 0) current = level.transversal[best] * current;
  }
  return current;
}

std::vector<std::size_t> PermGroup::orbit_lengths() const {
  std::vector<std::size_t> out;
  for (const auto& level : levels_) out.push_back(level.orbit.size());
  return out;
}

bool PermGroup::operator==(const PermGroup& other) const {
  return degree_ == other.degree_ && order_ == other.order_ && other.is_subgroup_of(*this);
}

// ---------------------------------------------------------------------------
// Subgroup constructions

Integer group_order(const PermGroup& g, const PermLimits& limits) {
  if (g.degree() > limits.max_degree)
    throw InputError("degree " + std::to_string(g.degree()) + " exceeds cap " +
                     std::to_string(limits.max_degree));
  return g.order();
}

bool membership(const PermGroup& g, const Perm& element) { return g.contains(element); }

PermGroup normal_closure(const PermGroup& g, const std::vector<Perm>& seeds) {
  std::vector<Perm> start;
  for (const auto& s : seeds) {
    if (!g.contains(s)) throw PreconditionError("seed is not an element of the group", s.to_string());
    if (!s.is_identity()) start.push_back(s);
  }
  PermGroup n(g.degree(), {});
  for (const auto& s : start)
    if (!n.contains(s)) n = n.with_generator(s);
  for (std::size_t i = 0; i < n.generators().size(); ++i) {
    for (const auto& h : g.generators()) {
      Perm c = conjugate(n.generators()[i], h);
      if (!n.contains(c)) n = n.with_generator(c);
    }
  }
  return n;
}

PermGroup derived_subgroup(const PermGroup& g) {
  std::vector<Perm> commutators;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Perm c = commutator(gens[i], gens[j]);
      if (!c.is_identity()) commutators.push_back(std::move(c));
    }
  return normal_closure(g, commutators);
}

PermGroup centralizer(const PermGroup& g, const PermGroup& h, const PermLimits& limits) {
  for (const auto& x : h.generators())
    if (!g.contains(x)) throw PreconditionError("H is not a subgroup of G", x.to_string());
  PermGroup c(g.degree(), {});
  for (const auto& e : g.elements(limits.max_elements)) {
    const bool commutes = std::all_of(h.generators().begin(), h.generators().end(),
                                      [&](const Perm& x) { return e * x == x * e; });
    if (commutes && !c.contains(e)) c = c.with_generator(e);
  }
  return c;
}

PermGroup center(const PermGroup& g, const PermLimits& limits) { return centralizer(g, g, limits); }

QuotientAction quotient_regular_action(const PermGroup& g, const PermGroup& n,
                                       const PermLimits& limits) {
  if (n.degree() != g.degree()) throw InputError("N and G have different degrees");
  for (const auto& x : n.generators())
    if (!g.contains(x)) throw PreconditionError("N is not a subgroup of G", x.to_string());
  for (const auto& x : n.generators())
    for (const auto& y : g.generators())
      if (!n.contains(conjugate(x, y)))
        throw PreconditionError("N is not normal in G",
                                "conjugate of " + x.to_string() + " by " + y.to_string());
  const Integer index = g.order() / n.order();
  const std::size_t cap = std::min(limits.max_index, kMaxPermDegree);
  if (index > cap)
    throw BudgetExhausted("quotient index " + index.str() + " exceeds cap " + std::to_string(cap));

  std::unordered_map<Perm, std::size_t, PermHash> id;
  std::vector<Perm> reps;
  auto lookup = [&](const Perm& x) {
    Perm key = n.canonical_coset_representative(x);
    auto [it, inserted] = id.emplace(key, reps.size());
    if (inserted) reps.push_back(std::move(key));
    return it->second;
  };
  lookup(g.identity());
  std::vector<std::vector<Point>> images(g.generators().size());
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t k = 0; k < g.generators().size(); ++k)
      images[k].push_back(static_cast<Point>(lookup(reps[i] * g.generators()[k])));

  QuotientAction out;
  for (auto& im : images) out.generator_images.emplace_back(std::move(im));
  out.group = PermGroup(reps.size(), out.generator_images);
  out.coset_representatives = std::move(reps);
  return out;
}

PermGroup direct_product(const PermGroup& g, const PermGroup& h) {
  const std::size_t degree = g.degree() + h.degree();
  std::vector<Perm> gens;
  for (const auto& x : g.generators()) gens.push_back(x.extended(degree));
  for (const auto& y : h.generators()) gens.push_back(y.shifted(g.degree(), degree));
  return PermGroup(degree, std::move(gens));
}

// ---------------------------------------------------------------------------
// Named groups

namespace {

Perm cycle_on(std::size_t degree, std::size_t first, std::size_t last) {
  std::vector<Point> cycle;
  for (std::size_t i = first; i <= last; ++i) cycle.push_back(static_cast<Point>(i));
  return Perm::from_cycles(degree, {cycle});
}

}  // namespace

PermGroup symmetric_group(std::size_t n) {
  if (n == 0) throw InputError("S_n requires n >= 1");
  if (n == 1) return PermGroup::trivial(1);
  if (n == 2) return PermGroup(2, {cycle_on(2, 0, 1)});
  return PermGroup(n, {cycle_on(n, 0, 1), cycle_on(n, 0, n - 1)});
}

PermGroup alternating_group(std::size_t n) {
  if (n == 0) throw InputError("A_n requires n >= 1");
  if (n <= 2) return PermGroup::trivial(n);
  if (n == 3) return PermGroup(3, {cycle_on(3, 0, 2)});
  Perm long_cycle = n % 2 == 1 ? cycle_on(n, 0, n - 1) : cycle_on(n, 1, n - 1);
  return PermGroup(n, {cycle_on(n, 0, 2), long_cycle});
}

PermGroup cyclic_group(std::size_t n) {
  if (n == 0) throw InputError("Z_n requires n >= 1");
  if (n == 1) return PermGroup::trivial(1);
  return PermGroup(n, {cycle_on(n, 0, n - 1)});
}

PermGroup dihedral_group(std::size_t n) {
  if (n < 3) throw InputError("D_n requires n >= 3");
  std::vector<std::vector<Point>> reflection;
  for (std::size_t i = 0; i < n / 2; ++i)
    reflection.push_back({static_cast<Point>(i), static_cast<Point>(n - 1 - i)});
  return PermGroup(n, {cycle_on(n, 0, n - 1), Perm::from_cycles(n, reflection)});
}

PermGroup klein_four_group() {
  return PermGroup(4, {Perm::parse("(1 2)(3 4)"), Perm::parse("(1 3)(2 4)")});
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

PermGroup parse_named_group(std::string_view name) {
  if (name == "V4") return klein_four_group();
  if (name.size() < 2 || !std::isalpha(static_cast<unsigned char>(name[0])))
    throw InputError("unknown group '" + std::string(name) + "'");
  std::size_t n = 0;
  for (char c : name.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw InputError("unknown group '" + std::string(name) + "'");
    n = n * 10 + static_cast<std::size_t>(c - '0');
    if (n > 10) throw InputError("named groups are limited to n <= 10");
  }
  switch (name[0]) {
    case 'S': return symmetric_group(n);
    case 'A': return alternating_group(n);
    case 'Z': return cyclic_group(n);
    case 'C': return cyclic_group(n);
    case 'D': return dihedral_group(n);
    default: throw InputError("unknown group family '" + std::string(1, name[0]) + "'");
  }
}

PermGroup parse_generator_list(std::string_view spec) {
  std::vector<Perm> perms;
  std::size_t degree = 0;
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t comma = spec.find(',', start);
    // Commas inside a cycle separate points, not permutations.
    while (comma != std::string_view::npos) {
      const auto open = spec.rfind('(', comma);
      const auto close = spec.rfind(')', comma);
      if (open == std::string_view::npos || (close != std::string_view::npos && close > open))
        break;
      comma = spec.find(',', comma + 1);
    }
    const std::string_view piece =
        trim(spec.substr(start, comma == std::string_view::npos ? spec.npos : comma - start));
    if (!piece.empty()) {
      perms.push_back(Perm::parse(piece));
      degree = std::max(degree, perms.back().degree());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (perms.empty()) throw InputError("empty generator list");
  for (auto& p : perms) p = p.extended(degree);
  return PermGroup(degree, std::move(perms));
}

}  // namespace

PermGroup parse_group(std::string_view spec, const PermLimits& limits) {
  spec = trim(spec);
  if (spec.empty()) throw InputError("empty group description");
  PermGroup out;
  if (spec.find('(') != std::string_view::npos) {
    out = parse_generator_list(spec);
  } else {
    bool first = true;
    std::size_t start = 0;
    for (;;) {
      const std::size_t cross = spec.find('x', start);
      const std::string_view factor =
          trim(spec.substr(start, cross == std::string_view::npos ? spec.npos : cross - start));
      PermGroup g = parse_named_group(factor);
      out = first ? g : direct_product(out, g);
      first = false;
      if (cross == std::string_view::npos) break;
      start = cross + 1;
    }
  }
  if (out.degree() > limits.max_degree)
    throw InputError("degree " + std::to_string(out.degree()) + " exceeds cap " +
                     std::to_string(limits.max_degree));
  return out;
}

std::string describe_group(const PermGroup& g) {
  const std::string suffix = " (order " + g.order().str() + ")";
  if (g.is_trivial()) return "1" + suffix;
  std::vector<bool> moved(g.degree(), false);
  bool all_even = true;
  for (const auto& x : g.generators()) {
    for (std::size_t i = 0; i < g.degree(); ++i)
      if (x[i] != i) moved[i] = true;
    all_even = all_even && x.is_even();
  }
  const auto support = static_cast<std::size_t>(std::count(moved.begin(), moved.end(), true));
  Integer factorial = 1;
  for (std::size_t i = 2; i <= support; ++i) factorial *= i;
  if (g.order() == factorial) return "S" + std::to_string(support) + suffix;
  if (support >= 3 && all_even && g.order() * 2 == factorial)
    return "A" + std::to_string(support) + suffix;
  return "group" + suffix;
}

}  // namespace cpg
