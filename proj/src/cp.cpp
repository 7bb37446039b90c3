#include "cpg/cp.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "cpg/errors.hpp"

namespace cpg {

namespace {

void require_positive(const Integer& p) {
  if (p < 1) throw InputError("p must be at least 1, got " + p.str());
}

// p-th power with the exponent reduced modulo the element order.
Perm power(const Perm& g, const Integer& p) {
  Integer e = p % g.order();
  return g.pow(static_cast<std::int64_t>(e));
}

// Incremental row echelon basis of an integer lattice in Z^k.
class LatticeBasis {
 public:
  explicit LatticeBasis(std::size_t k) : k_(k), rows_(k) {}

  void insert(std::vector<Integer> v) {
    for (std::size_t i = 0; i < k_; ++i) {
      if (v[i] == 0) continue;
      if (!rows_[i]) {
        if (v[i] < 0)
          for (auto& x : v) x = -x;
        rows_[i] = std::move(v);
        return;
      }
      auto& r = *rows_[i];
      // Euclid on the pivot column, carrying both rows along.
      while (v[i] != 0) {
        Integer q = r[i] / v[i];
        for (std::size_t j = i; j < k_; ++j) r[j] -= q * v[j];
        std::swap(r, v);
      }
      if (r[i] < 0)
        for (auto& x : r) x = -x;
    }
  }

  IntMatrix matrix() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r ? 1 : 0;
    IntMatrix m(n, k_);
    std::size_t at = 0;
    for (const auto& r : rows_) {
      if (!r) continue;
      for (std::size_t j = 0; j < k_; ++j) m(at, j) = (*r)[j];
      ++at;
    }
    return m;
  }

 private:
  std::size_t k_;
  std::vector<std::optional<std::vector<Integer>>> rows_;
};

// Structure of an abelian permutation group from its generators.
AbelianStructure abelian_group_structure(const std::vector<Perm>& gens, std::size_t degree,
                                         std::size_t limit) {
  const std::size_t k = gens.size();
  if (k == 0) return AbelianStructure::trivial();
  std::unordered_map<Perm, std::size_t, PermHash> index;
  std::vector<Perm> elems{Perm(degree)};
  std::vector<std::vector<Integer>> coords{std::vector<Integer>(k, 0)};
  index.emplace(elems[0], 0);
  LatticeBasis lattice(k);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t g = 0; g < k; ++g) {
      Perm next = elems[i] * gens[g];
      std::vector<Integer> c = coords[i];
      c[g] += 1;
      auto it = index.find(next);
      if (it == index.end()) {
        if (elems.size() >= limit)
          throw BudgetExhausted("abelian quotient has more than " + std::to_string(limit) +
                                " elements");
        index.emplace(next, elems.size());
        elems.push_back(std::move(next));
        coords.push_back(std::move(c));
      } else {
        const auto& old = coords[it->second];
        bool zero = true;
        for (std::size_t j = 0; j < k; ++j) {
          c[j] -= old[j];
          zero = zero && c[j] == 0;
        }
        if (!zero) lattice.insert(std::move(c));
      }
    }
  }
  return cokernel_structure(lattice.matrix());
}

}  // namespace

PermGroup cp_subgroup(const PermGroup& g, const Integer& p) {
  require_positive(p);
  PermGroup out = derived_subgroup(g);
  for (const auto& x : g.generators()) {
    Perm y = power(x, p);
    if (!out.contains(y)) out = out.with_generator(y);
  }
  return out;
}

AbelianStructure abelian_invariants(const PermGroup& g, const PermLimits& limits) {
  QuotientAction q = quotient_regular_action(g, derived_subgroup(g), limits);
  return abelian_group_structure(q.generator_images, q.group.degree(), limits.max_index);
}

FpPresentation cayley_presentation(const GroupTable& table) {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < table.generator_count(); ++k) names.push_back("g" + std::to_string(k + 1));
  auto word_of = [&](GroupTable::Index e) {
    std::vector<Syllable> s;
    for (auto k : table.word(e)) s.push_back({k, 1});
    return Word(std::move(s));
  };
  std::vector<Word> relators;
  for (GroupTable::Index e = 0; e < table.size(); ++e)
    for (std::size_t k = 0; k < table.generator_count(); ++k) {
      auto f = table.multiply(e, table.generator(k));
      relators.push_back(word_of(e) * Word::generator(k) * word_of(f).inverse());
    }
  return FpPresentation(std::move(names), std::move(relators));
}

AbelianStructure cp_quotient_fp(const FpPresentation& presentation, const Integer& p) {
  require_positive(p);
  return tensor_with_zp(abelianization(presentation), p);
}

CpKernel cp_kernel_presentation(const FpPresentation& presentation, const Integer& p,
                                std::size_t max_index) {
  require_positive(p);
  const std::size_t n = presentation.generator_count();
  const SmithForm snf = smith_normal_form(relation_matrix(presentation));
  const std::size_t rank_bound = std::min(snf.diagonal.rows(), n);

  // Coordinates of G^ab / p G^ab in the Smith basis; generator j is row j
  // of the right transform.
  std::vector<std::size_t> axes;
  std::vector<std::int64_t> moduli;
  Integer index = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer d = i < rank_bound ? snf.diagonal(i, i) : Integer(0);
    Integer m = d == 0 ? p : Integer(boost::multiprecision::gcd(d, p));
    if (m == 1) continue;
    index *= m;
    if (index > max_index)
      throw BudgetExhausted("G/C^p(G) has more than " + std::to_string(max_index) + " elements");
    axes.push_back(i);
    moduli.push_back(static_cast<std::int64_t>(m));
  }
  std::vector<std::vector<std::int64_t>> shift(n, std::vector<std::int64_t>(axes.size()));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t a = 0; a < axes.size(); ++a) {
      Integer v = snf.right(j, axes[a]) % moduli[a];
      if (v < 0) v += moduli[a];
      shift[j][a] = static_cast<std::int64_t>(v);
    }
  auto act = [&](const std::vector<std::int64_t>& s, std::size_t g, bool inverse) {
    std::vector<std::int64_t> out(s);
    for (std::size_t a = 0; a < out.size(); ++a) {
      out[a] += inverse ? moduli[a] - shift[g][a] : shift[g][a];
      out[a] %= moduli[a];
    }
    return out;
  };
  CosetTable table = coset_table_from_action(
      presentation, std::vector<std::int64_t>(axes.size(), 0), act, max_index);
  if (table.index() != index)
    throw CertificationFailure("translation action has the wrong number of cosets");
  SubgroupPresentation sub = reidemeister_schreier(table);
  return CpKernel{std::move(table), std::move(sub), cp_quotient_fp(presentation, p)};
}

PSeriesReport derived_p_series(const FpPresentation& presentation, const Integer& p,
                               std::size_t depth, std::size_t max_index) {
  require_positive(p);
  if (depth < 1) throw InputError("depth must be at least 1");
  PSeriesReport report;
  report.p = p;
  report.depth = depth;
  FpPresentation current = presentation;
  for (std::size_t level = 1; level <= depth; ++level) {
    try {
      CpKernel k = cp_kernel_presentation(current, p, max_index);
      PSeriesLevel out;
      out.level = level;
      out.quotient = k.quotient;
      out.index = k.table.index();
      current = parse_presentation(k.subgroup.presentation.to_string());
      out.group = current.to_string();
      out.presentation = current;
      report.levels.push_back(std::move(out));
    } catch (const BudgetExhausted& e) {
      report.truncated = true;
      report.truncated_at = level;
      report.truncation_reason = e.what();
      break;
    }
  }
  return report;
}

PSeriesReport derived_p_series(const PermGroup& g, const Integer& p, std::size_t depth) {
  require_positive(p);
  if (depth < 1) throw InputError("depth must be at least 1");
  PSeriesReport report;
  report.p = p;
  report.depth = depth;
  PermGroup current = g;
  for (std::size_t level = 1; level <= depth; ++level) {
    try {
      PermGroup next = cp_subgroup(current, p);
      QuotientAction q = quotient_regular_action(current, next);
      PSeriesLevel out;
      out.level = level;
      out.quotient = abelian_group_structure(q.generator_images, q.group.degree(),
                                             PermLimits{}.max_index);
      out.index = current.order() / next.order();
      out.group = describe_group(next);
      out.subgroup = next;
      report.levels.push_back(std::move(out));
      current = std::move(next);
    } catch (const BudgetExhausted& e) {
      report.truncated = true;
      report.truncated_at = level;
      report.truncation_reason = e.what();
      break;
    }
  }
  return report;
}

std::string to_string(CpStatus status) {
  switch (status) {
    case CpStatus::kIsCpGroup: return "IS_CP_GROUP";
    case CpStatus::kNotCpGroup: return "NOT_CP_GROUP";
    case CpStatus::kInconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

std::string to_string(CpReason reason) {
  switch (reason) {
    case CpReason::kSelfWitness: return "SELF_WITNESS";
    case CpReason::kCompleteCriterion: return "COMPLETE_CRITERION";
    case CpReason::kAutCriterion: return "AUT_CRITERION";
    case CpReason::kNone: return "NONE";
  }
  return "?";
}

namespace {

// Completeness and Aut criteria once Aut(H) is known.
void apply_aut_criteria(CpVerdict& v, const PermGroup& h, const Integer& p,
                        const AutomorphismSet& aut) {
  const std::size_t order = aut.table().size();
  v.aut_order = Integer(aut.size());
  v.complete = aut.inner_count() == order && aut.size() == aut.inner_count();
  if (*v.complete) {
    v.status = CpStatus::kNotCpGroup;
    v.reason = CpReason::kCompleteCriterion;
    return;
  }
  PermGroup cp_aut = cp_subgroup(aut.group(), p);
  v.cp_aut_order = cp_aut.order();
  for (const auto& g : h.generators()) {
    if (!cp_aut.contains(aut.conjugation_action(g))) {
      v.status = CpStatus::kNotCpGroup;
      v.reason = CpReason::kAutCriterion;
      v.witness = g.to_string();
      return;
    }
  }
  v.notes.push_back("Inn(H) lies in C^p(Aut(H)); neither criterion applies");
}

}  // namespace

CpVerdict cp_group_verdict(const PermGroup& h, const Integer& p, const AutSearchOptions& options) {
  require_positive(p);
  CpVerdict v;
  v.group_order = h.order();
  PermGroup c = cp_subgroup(h, p);
  v.cp_order = c.order();
  if (c.order() == h.order()) {
    v.status = CpStatus::kIsCpGroup;
    v.reason = CpReason::kSelfWitness;
    return v;
  }
  if (h.order() > options.max_order) {
    v.notes.push_back("automorphism search skipped: order above " + std::to_string(options.max_order));
    return v;
  }
  if (h.generators().size() > options.max_generators) {
    v.notes.push_back("automorphism search skipped: more than " +
                      std::to_string(options.max_generators) + " generators");
    return v;
  }
  AutomorphismSet aut = aut_group_search(h, options);
  if (!aut.complete())
    throw BudgetExhausted("automorphism search exhausted its node budget after " +
                          std::to_string(aut.nodes_explored()) + " nodes");
  apply_aut_criteria(v, h, p, aut);
  return v;
}

ExactSequenceReport verify_exact_sequence_rob96(const PermGroup& g, const PermGroup& h,
                                                const PermLimits& limits) {
  if (g.degree() != h.degree()) throw InputError("groups have different degrees");
  for (const auto& x : h.generators())
    if (!g.contains(x)) throw PreconditionError("H is not a subgroup of G", x.to_string());
  for (const auto& x : g.generators())
    for (const auto& y : h.generators())
      if (!h.contains(conjugate(y, x)))
        throw PreconditionError("H is not normal in G", x.to_string());

  PermGroup c = centralizer(g, h, limits);
  PermGroup hc = h;
  for (const auto& x : c.generators())
    if (!hc.contains(x)) hc = hc.with_generator(x);
  // Ad_x restricted to H is inner exactly when x lies in H C_G(H).
  for (const auto& x : g.generators())
    if (!hc.contains(x))
      throw PreconditionError("conjugation does not act on H by an inner automorphism",
                              x.to_string());

  ExactSequenceReport r;
  r.group_order = g.order();
  r.subgroup_order = h.order();
  r.centralizer_order = c.order();
  PermGroup z = center(h, limits);
  r.center_order = z.order();

  if (h.order() * c.order() > limits.max_elements)
    throw BudgetExhausted("H x C_G(H) is too large to check by brute force");
  const auto hs = h.elements(limits.max_elements);
  const auto cs = c.elements(limits.max_elements);
  const auto zs = z.elements(limits.max_elements);

  // phi lands in H x C_G(H) and is injective (its first coordinate is h).
  r.phi_injective = std::all_of(zs.begin(), zs.end(), [&](const Perm& x) {
    return h.contains(x) && c.contains(x.inverse());
  });
  r.psi_homomorphism = std::all_of(cs.begin(), cs.end(), [&](const Perm& x) {
    return std::all_of(h.generators().begin(), h.generators().end(),
                       [&](const Perm& y) { return x * y == y * x; });
  });
  std::unordered_set<Perm, PermHash> image;
  std::set<std::pair<Perm, Perm>> kernel;
  for (const auto& x : hs)
    for (const auto& y : cs) {
      Perm xy = x * y;
      if (xy.is_identity()) kernel.emplace(x, y);
      image.insert(std::move(xy));
    }
  r.psi_surjective = Integer(image.size()) == g.order();
  std::set<std::pair<Perm, Perm>> phi_image;
  for (const auto& x : zs) phi_image.emplace(x, x.inverse());
  r.image_equals_kernel = phi_image == kernel;
  return r;
}

S6Report verify_s6_pipeline(const Integer& p, const AutSearchOptions& options) {
  if (p < 2 || p > 12 || p % 2 != 0)
    throw InputError("the S6 pipeline needs an even p with 2 <= p <= 12, got " + p.str());
  S6Report r;
  r.p = p;
  const PermGroup s6 = symmetric_group(6);
  const AutomorphismSet aut = aut_group_search(s6, options);
  if (!aut.complete())
    throw BudgetExhausted("automorphism search of S6 exhausted its node budget");
  r.search_nodes = aut.nodes_explored();
  const GroupTable& t = aut.table();
  r.aut_order = aut.group().order();
  PermGroup inn = aut.inner_group();
  r.inn_order = inn.order();

  PermGroup cp_aut = cp_subgroup(aut.group(), p);
  r.cp_aut_order = cp_aut.order();
  std::vector<Perm> alpha_gens;
  const PermGroup a6 = alternating_group(6);
  for (const auto& g : a6.generators()) alpha_gens.push_back(aut.conjugation_action(g));
  PermGroup alpha(t.size(), std::move(alpha_gens));
  r.alpha_order = alpha.order();
  r.cp_equals_alpha = cp_aut == alpha;

  r.inn_contained_in_cp = true;
  for (const auto& g : s6.generators())
    if (!cp_aut.contains(aut.conjugation_action(g))) {
      r.inn_contained_in_cp = false;
      r.inn_witness = g.to_string();
      break;
    }
  r.index_aut_inn = r.aut_order / r.inn_order;
  r.index_aut_cp = r.aut_order / r.cp_aut_order;
  // Under Inn <= C^p the index [Aut:Inn] = 2 would factor through [Aut:C^p].
  r.counting_identity_holds = r.index_aut_inn % r.index_aut_cp == 0;

  for (const auto& m : aut.maps()) {
    if (m.inner || m.action.order() != 10) continue;
    for (auto img : m.generator_images) r.psi_images.push_back(t.element(img).to_string());
    Perm sq = m.action * m.action;
    for (GroupTable::Index e = 0; e < t.size(); ++e) {
      bool match = true;
      for (std::size_t k = 0; k < t.generator_count() && match; ++k)
        match = t.conjugate(t.generator(k), e) == sq[t.generator(k)];
      if (match) {
        r.tau = t.element(e).to_string();
        r.tau_in_a6 = t.element(e).is_even() && t.element(e).pow(5).is_identity();
        break;
      }
    }
    break;
  }

  r.verdict.group_order = s6.order();
  r.verdict.cp_order = cp_subgroup(s6, p).order();
  r.verdict.complete = aut.inner_count() == t.size() && aut.size() == aut.inner_count();
  r.verdict.aut_order = r.aut_order;
  r.verdict.cp_aut_order = r.cp_aut_order;
  if (!r.inn_contained_in_cp) {
    r.verdict.status = CpStatus::kNotCpGroup;
    r.verdict.reason = CpReason::kAutCriterion;
    r.verdict.witness = r.inn_witness;
  }
  return r;
}

}  // namespace cpg
