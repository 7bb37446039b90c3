#include "cpg/catalog.hpp"

#include <numeric>
#include <sstream>

#include "cpg/automorphism.hpp"
#include "cpg/cp.hpp"
#include "cpg/errors.hpp"
#include "cpg/fp.hpp"
#include "cpg/homalg.hpp"
#include "cpg/knot.hpp"
#include "cpg/perm.hpp"

namespace cpg {

namespace {

// Collects failed expectations; the item passes when none failed.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok) failures_.push_back(what);
  }
  CatalogOutcome outcome() const {
    CatalogOutcome o;
    o.passed = failures_.empty();
    std::ostringstream s;
    s << (total_ - failures_.size()) << "/" << total_ << " checks";
    for (std::size_t i = 0; i < failures_.size() && i < 5; ++i) s << "; failed: " << failures_[i];
    o.detail = s.str();
    return o;
  }

 private:
  std::size_t total_ = 0;
  std::vector<std::string> failures_;
};

const char* const kFigureEight = "< x, y | x^-1 y x y^-1 x = y x^-1 y x y^-1 >";

CatalogOutcome zn_rows() {
  Checker c;
  for (int n = 2; n <= 24; ++n)
    for (int p = 1; p <= 12; ++p) {
      const int g = std::gcd(n, p);
      PermGroup zn = cyclic_group(n);
      PermGroup cp = cp_subgroup(zn, p);
      c.expect(zn.order() / cp.order() == g, "Z" + std::to_string(n) + " p=" + std::to_string(p));
      IntMatrix m(2, 1);
      m(0, 0) = n;
      m(1, 0) = p;
      c.expect(cokernel_structure(m) == AbelianStructure::cyclic(g),
               "cokernel n=" + std::to_string(n) + " p=" + std::to_string(p));
      FpPresentation pres({"a"}, {Word::generator(0, n)});
      c.expect(cp_quotient_fp(pres, p) == AbelianStructure::cyclic(g),
               "presented n=" + std::to_string(n) + " p=" + std::to_string(p));
    }
  return c.outcome();
}

CatalogOutcome symmetric_groups() {
  Checker c;
  for (int n = 3; n <= 7; ++n) {
    PermGroup sn = symmetric_group(n), an = alternating_group(n);
    for (int p = 1; p <= 6; ++p) {
      PermGroup cp = cp_subgroup(sn, p);
      const PermGroup& want = p % 2 == 1 ? sn : an;
      c.expect(cp == want, "S" + std::to_string(n) + " p=" + std::to_string(p));
    }
  }
  c.expect(describe_group(cp_subgroup(symmetric_group(5), 2)) == "A5 (order 60)", "S5 p=2 label");
  return c.outcome();
}

CatalogOutcome alternating_groups() {
  Checker c;
  for (int p = 2; p <= 8; ++p) {
    c.expect(cp_subgroup(alternating_group(3), p).is_trivial() == (p % 3 == 0),
             "A3 p=" + std::to_string(p));
    PermGroup a4 = alternating_group(4);
    PermGroup want = p % 3 == 0 ? PermGroup(4, klein_four_group().generators()) : a4;
    c.expect(cp_subgroup(a4, p) == want, "A4 p=" + std::to_string(p));
    for (int n = 5; n <= 7; ++n)
      c.expect(cp_subgroup(alternating_group(n), p) == alternating_group(n),
               "A" + std::to_string(n) + " p=" + std::to_string(p));
  }
  return c.outcome();
}

CatalogOutcome small_cp_examples() {
  Checker c;
  c.expect(cp_subgroup(symmetric_group(5), 3) == symmetric_group(5), "S5 p=3");
  c.expect(cp_subgroup(alternating_group(4), 6).order() == 4, "A4 p=6");
  PermGroup z12 = cyclic_group(12);
  PermGroup cp = cp_subgroup(z12, 8);
  c.expect(cp.order() == 3, "Z12 p=8 order");
  c.expect(abelian_invariants(quotient_regular_action(z12, cp).group) == AbelianStructure::cyclic(4),
           "Z12 p=8 quotient");
  return c.outcome();
}

CatalogOutcome verdicts() {
  Checker c;
  auto v3 = cp_group_verdict(symmetric_group(3), 3);
  c.expect(v3.status == CpStatus::kIsCpGroup && v3.reason == CpReason::kSelfWitness, "S3 p=3");
  auto v2 = cp_group_verdict(symmetric_group(3), 2);
  c.expect(v2.status == CpStatus::kNotCpGroup && v2.reason == CpReason::kCompleteCriterion, "S3 p=2");
  c.expect(is_complete(symmetric_group(3)), "S3 complete");
  c.expect(!is_complete(cyclic_group(2)), "Z2 not complete");
  return c.outcome();
}

CatalogOutcome s6_pipeline() {
  Checker c;
  for (int p : {2, 4, 6}) {
    S6Report r = verify_s6_pipeline(p);
    const std::string tag = " p=" + std::to_string(p);
    c.expect(r.aut_order == 1440, "|Aut(S6)|" + tag);
    c.expect(r.inn_order == 720, "|Inn(S6)|" + tag);
    c.expect(r.cp_aut_order == 360, "|C^p(Aut)|" + tag);
    c.expect(r.cp_equals_alpha, "C^p(Aut) = alpha(A6)" + tag);
    c.expect(!r.inn_contained_in_cp, "Inn escapes C^p" + tag);
    c.expect(!r.counting_identity_holds, "index count contradiction" + tag);
    c.expect(!r.psi_images.empty() && r.tau_in_a6, "order-10 outer automorphism" + tag);
    c.expect(r.verdict.status == CpStatus::kNotCpGroup && r.verdict.reason == CpReason::kAutCriterion,
             "verdict" + tag);
  }
  return c.outcome();
}

CatalogOutcome trefoil_obstruction() {
  Checker c;
  for (int p : {2, 4, 6}) {
    TrefoilObstruction r = trefoil_even_obstruction(p);
    bool all = r.steps.size() == 4;
    for (const auto& s : r.steps) all = all && s.passed;
    c.expect(all && r.obstructed, "steps p=" + std::to_string(p));
    c.expect(r.kernel_index == 6, "index p=" + std::to_string(p));
    c.expect(r.schreier_generator_count == 7, "Schreier count p=" + std::to_string(p));
  }
  bool rejected = false;
  try {
    trefoil_even_obstruction(3);
  } catch (const InputError&) {
    rejected = true;
  }
  c.expect(rejected, "odd p rejected");
  return c.outcome();
}

CatalogOutcome torus_grid() {
  Checker c;
  for (int m = 2; m <= 12; ++m)
    for (int n = 2; n <= 12; ++n) {
      if (std::gcd(m, n) != 1) continue;
      for (int p = 2; p <= 30; ++p) {
        const bool exists = std::gcd(m * n, p) == 1;
        const std::string tag = "(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(p) + ")";
        c.expect(torus_preimage_exists(m, n, p) == exists, "criterion " + tag);
        LensSurgeryAnswer a = chbili_q(m, n, p);
        c.expect(a.exists == exists, "q exists " + tag);
        if (!exists) continue;
        int matches = 0;
        for (int q = 1; q < p; ++q)
          if ((m - n * q) % p == 0) ++matches;
        c.expect(a.p_divides_m_minus_nq && a.q_coprime_to_p && matches == 1, "q certificate " + tag);
      }
    }
  return c.outcome();
}

CatalogOutcome chbili_examples() {
  Checker c;
  auto a = chbili_q(3, 2, 5);
  c.expect(a.exists && a.q == 4 && a.q_inverse == 4 && a.m_minus_nq == -5, "(3,2,5)");
  auto b = chbili_q(3, 2, 7);
  c.expect(b.exists && b.q == 5 && b.m_minus_nq == -7, "(3,2,7)");
  c.expect(!chbili_q(3, 2, 6).exists, "(3,2,6)");
  c.expect(torus_preimage_exists(3, 2, 5) && !torus_preimage_exists(3, 2, 2), "trefoil criterion");
  return c.outcome();
}

CatalogOutcome components() {
  Checker c;
  c.expect(preimage_component_count(6, 4) == 2, "(6,4)");
  for (int p = 1; p <= 12; ++p) {
    c.expect(preimage_component_count(p, 1) == 1, "generator p=" + std::to_string(p));
    c.expect(preimage_component_count(p, 0) == p, "zero class p=" + std::to_string(p));
  }
  return c.outcome();
}

CatalogOutcome series_check(const FpPresentation& g, int p, std::size_t depth,
                            const std::vector<AbelianStructure>& want) {
  Checker c;
  PSeriesReport r = derived_p_series(g, p, depth);
  c.expect(!r.truncated && r.levels.size() == want.size(), "depth reached");
  for (std::size_t i = 0; i < want.size() && i < r.levels.size(); ++i)
    c.expect(r.levels[i].quotient == want[i], "level " + std::to_string(i + 1) + " quotient " +
                                                  r.levels[i].quotient.to_string());
  return c.outcome();
}

CatalogOutcome series_s3() {
  Checker c;
  PSeriesReport r = derived_p_series(symmetric_group(3), 6, 2);
  c.expect(r.levels.size() == 2, "two levels");
  if (r.levels.size() == 2) {
    c.expect(r.levels[0].subgroup->order() == 3, "level 1 is A3");
    c.expect(r.levels[1].subgroup->is_trivial(), "level 2 trivial");
  }
  return c.outcome();
}

CatalogOutcome cover(int p, const AbelianStructure& want) {
  Checker c;
  CpKernel k = cp_kernel_presentation(torus_knot_group(3, 2), p);
  c.expect(k.table.index() == static_cast<std::size_t>(p), "index");
  AbelianStructure got = abelianization(k.subgroup.presentation);
  c.expect(got == want, "abelianization " + got.to_string());
  return c.outcome();
}

CatalogOutcome e2_table() {
  Checker c;
  E2Table t = lhs_e2_table(3, 2, 5, 6, 6);
  c.expect(t.at(0, 1) == AbelianStructure::cyclic(6), "(0,1)");
  c.expect(t.at(1, 0) == AbelianStructure::cyclic(5), "(1,0)");
  c.expect(t.at(2, 2).is_trivial(), "(2,2)");
  for (unsigned k = 0; k <= 6; ++k)
    c.expect(t.total(k) == cyclic_homology(30, k), "total k=" + std::to_string(k));
  FiveTermResult f = five_term_from_multiplication(30);
  c.expect(f.h2.is_trivial() && f.h1 == AbelianStructure::cyclic(30), "five-term d=30");
  return c.outcome();
}

CatalogOutcome free_abelian_quotients() {
  Checker c;
  c.expect(cp_quotient_fp(torus_knot_group(3, 2), 5) == AbelianStructure::cyclic(5), "trefoil p=5");
  c.expect(cp_quotient_fp(parse_presentation("< a, b | a^3, b^2 >"), 6) == AbelianStructure::cyclic(6),
           "Z3 * Z2 p=6");
  c.expect(cp_quotient_fp(parse_presentation("< a, b | >"), 2) ==
               AbelianStructure::from_cyclic_orders({2, 2}),
           "free rank 2 p=2");
  c.expect(tensor_with_zp(AbelianStructure::free(2), 3) == AbelianStructure::from_cyclic_orders({3, 3}),
           "Z^2 tensor Z_3");
  return c.outcome();
}

CatalogOutcome rob96() {
  Checker c;
  PermGroup s3 = symmetric_group(3);
  PermGroup g = direct_product(s3, cyclic_group(2));
  PermGroup h(5, {Perm::parse("(1 2)", 5), Perm::parse("(1 2 3)", 5)});
  c.expect(verify_exact_sequence_rob96(g, h).exact(), "S3 x Z2 over S3");
  c.expect(verify_exact_sequence_rob96(s3, s3).exact(), "S3 over S3");
  bool rejected = false;
  try {
    verify_exact_sequence_rob96(alternating_group(4), PermGroup(4, klein_four_group().generators()));
  } catch (const PreconditionError& e) {
    rejected = Perm::parse(e.witness(), 4).order() == 3;
  }
  c.expect(rejected, "A4 over V4 rejected with a 3-cycle");
  return c.outcome();
}

CatalogOutcome automorphisms() {
  Checker c;
  auto s3 = aut_group_search(symmetric_group(3));
  c.expect(s3.size() == 6 && s3.inner_count() == 6, "Aut(S3)");
  c.expect(aut_group_search(cyclic_group(2)).size() == 1, "Aut(Z2)");
  PermGroup a4 = alternating_group(4);
  auto aut = aut_group_search(a4);
  const GroupTable& t = aut.table();
  for (int p : {2, 3, 6}) {
    PermGroup cp = cp_subgroup(a4, p);
    std::vector<bool> in(t.size());
    for (GroupTable::Index e = 0; e < t.size(); ++e) in[e] = cp.contains(t.element(e));
    bool invariant = true;
    for (const auto& m : aut.maps())
      for (GroupTable::Index e = 0; e < t.size(); ++e)
        invariant = invariant && (!in[e] || in[m.action[e]]);
    c.expect(invariant, "A4 p=" + std::to_string(p) + " characteristic");
  }
  return c.outcome();
}

CatalogOutcome out_obstruction() {
  Checker c;
  bool refused = false;
  try {
    complete_group_obstruction(torus_knot_group(3, 2), false, 6);
  } catch (const InputError&) {
    refused = true;
  }
  c.expect(refused, "torus knot assumption refused");
  OutObstruction r = complete_group_obstruction(parse_presentation(kFigureEight), true, 6);
  c.expect(r.levels.size() == 5, "p = 2..6");
  for (const auto& l : r.levels) c.expect(l.obstructed, "p=" + l.p.str());
  bool not_knot = false;
  try {
    complete_group_obstruction(parse_presentation("< a, b | >"), true, 6);
  } catch (const InputError&) {
    not_knot = true;
  }
  c.expect(not_knot, "free group rejected");
  return c.outcome();
}

CatalogOutcome coset_enumeration() {
  Checker c;
  auto idx = [](const char* text, const char* sub) {
    auto p = parse_presentation(text);
    auto r = todd_coxeter(p, p.parse_word_list(sub));
    return r.table ? r.table->index() : 0;
  };
  c.expect(idx("< a | a^5 >", "") == 5, "Z5");
  c.expect(idx("< a, b | a^2, b^2, (ab)^3 >", "") == 6, "S3");
  c.expect(idx("< a, b | a^3 = b^2 >", "a, b") == 1, "whole trefoil group");
  auto t = torus_knot_group(3, 2);
  c.expect(kernel_coset_table(t, {Perm::parse("(1 2 3)", 3), Perm::parse("(1 2)", 3)}).index() == 6,
           "trefoil onto S3");
  return c.outcome();
}

std::vector<CatalogItem> build() {
  std::vector<CatalogItem> items;
  auto add = [&](std::string id, std::string description, std::function<CatalogOutcome()> run) {
    items.push_back({std::move(id), std::move(description), std::move(run)});
  };
  add("table1.zn", "Z_n / C^p(Z_n) = Z_gcd(n,p) for n <= 24, p <= 12, permutation and presented", zn_rows);
  add("cp.symmetric", "C^p(S_n) is S_n for odd p and A_n for even p, n = 3..7", symmetric_groups);
  add("cp.alternating", "C^p(A_n): trivial or V4 when 3 | p for n = 3, 4; A_n for n = 5..7",
      alternating_groups);
  add("cp.small", "C^3(S5) = S5, C^6(A4) = V4, C^8(Z12) of order 3 with quotient Z4", small_cp_examples);
  add("verdict.symmetric", "S3 is a C^3-group by self witness and not a C^2-group (complete)", verdicts);
  add("exA.s6", "Aut(S6) of order 1440, C^p(Aut(S6)) = A6 image of order 360, p = 2, 4, 6", s6_pipeline);
  add("trefoil.obstruction", "four certified steps of the even-p trefoil obstruction, p = 2, 4, 6",
      trefoil_obstruction);
  add("torus.criterion", "preimage exists iff gcd(mn, p) = 1, with a unique certified q", torus_grid);
  add("torus.chbili", "q = 4 for (3,2,5), q = 5 for (3,2,7), none for (3,2,6)", chbili_examples);
  add("knot.components", "component count gcd(c, p)", components);
  add("corB.series.trefoil.p2", "trefoil derived 2-series quotients Z2, Z2",
      [] { return series_check(torus_knot_group(3, 2), 2, 2, {AbelianStructure::cyclic(2), AbelianStructure::cyclic(2)}); });
  add("series.trefoil.p3", "trefoil derived 3-series quotients Z3, Z3",
      [] { return series_check(torus_knot_group(3, 2), 3, 2, {AbelianStructure::cyclic(3), AbelianStructure::cyclic(3)}); });
  add("series.z.p2", "Z has derived 2-series quotients Z2, Z2, Z2", [] {
    return series_check(parse_presentation("< a | >"), 2, 3,
                        {AbelianStructure::cyclic(2), AbelianStructure::cyclic(2), AbelianStructure::cyclic(2)});
  });
  add("series.s3.p6", "S3 derived 6-series: A3 then trivial", series_s3);
  add("cover.trefoil.p2", "C^2 of the trefoil group abelianizes to Z + Z3",
      [] { return cover(2, AbelianStructure::from_cyclic_orders({0, 3})); });
  add("cover.trefoil.p3", "C^3 of the trefoil group abelianizes to Z + Z2 + Z2",
      [] { return cover(3, AbelianStructure::from_cyclic_orders({0, 2, 2})); });
  add("homology.e2", "E2 table for (3,2,5) reassembles H_*(Z30); five-term sequence for 30", e2_table);
  add("cp.free_abelian", "G / C^p(G) from abelianizations", free_abelian_quotients);
  add("exact.sequence", "1 -> Z(H) -> H x C_G(H) -> G -> 1 on the reference pairs", rob96);
  add("aut.search", "Aut(S3), Aut(Z2) and invariance of C^p(A4) under Aut(A4)", automorphisms);
  add("out.obstruction", "Out-trivial obstruction: refused for torus knots, conditional otherwise",
      out_obstruction);
  add("fp.enumeration", "coset enumeration indices", coset_enumeration);
  return items;
}

}  // namespace

const std::vector<CatalogItem>& verify_catalog() {
  static const std::vector<CatalogItem> items = build();
  return items;
}

const CatalogItem* find_catalog_item(const std::string& id) {
  for (const auto& item : verify_catalog())
    if (item.id == id) return &item;
  return nullptr;
}

}  // namespace cpg
