// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "cpg/automorphism.hpp"
#include "cpg/cp.hpp"
#include "cpg/errors.hpp"
#include "cpg/knot.hpp"
#include "oracles.hpp"

using namespace cpg;

namespace {

struct Check {
  bool ok = true;
  std::string first_failure;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) first_failure = what;
    ok = ok && cond;
  }
};

bool same_subgroup(const PermGroup& a, const PermGroup& b) {
  if (a.order() != b.order()) return false;
  for (const auto& g : a.generators())
    if (!b.contains(g)) return false;
  return true;
}

Check symmetric_groups() {
  Check c;
  for (std::size_t n = 3; n <= 7; ++n) {
    const auto sn = symmetric_group(n);
    const auto an = alternating_group(n);
    for (int p : {1, 3, 5}) c.expect(same_subgroup(cp_subgroup(sn, p), sn), "S" + std::to_string(n) + " p=" + std::to_string(p));
    for (int p : {2, 4, 6}) c.expect(same_subgroup(cp_subgroup(sn, p), an), "S" + std::to_string(n) + " p=" + std::to_string(p));
  }
  return c;
}

Check alternating_groups() {
  Check c;
  for (int p = 1; p <= 12; ++p) {
    c.expect(cp_subgroup(alternating_group(3), p).is_trivial() == (p % 3 == 0), "A3 p=" + std::to_string(p));
    const auto expected = p % 3 == 0 ? klein_four_group() : alternating_group(4);
    c.expect(same_subgroup(cp_subgroup(alternating_group(4), p), expected), "A4 p=" + std::to_string(p));
  }
  for (std::size_t n = 5; n <= 7; ++n)
    for (int p = 2; p <= 8; ++p) {
      const auto an = alternating_group(n);
      c.expect(same_subgroup(cp_subgroup(an, p), an), "A" + std::to_string(n) + " p=" + std::to_string(p));
    }
  return c;
}

Check cyclic_table() {
  Check c;
  for (int n = 2; n <= 24; ++n)
    for (int p = 1; p <= 12; ++p) {
      const Integer g = std::gcd(n, p);
      const auto zn = cyclic_group(n);
      const std::string tag = "Z" + std::to_string(n) + " p=" + std::to_string(p);
      c.expect(zn.order() / cp_subgroup(zn, p).order() == g, tag + " permutation");
      c.expect(cokernel_structure(IntMatrix{{n}, {p}}) == AbelianStructure::cyclic(g), tag + " cokernel");
      auto pres = FpPresentation({"a"}, {Word::generator(0, n)});
      c.expect(cp_quotient_fp(pres, p) == AbelianStructure::cyclic(g), tag + " presented");
    }
  return c;
}

Check s6_pipeline() {
  Check c;
  for (int p : {2, 4, 6}) {
    auto r = verify_s6_pipeline(p);
    const std::string tag = "p=" + std::to_string(p);
    c.expect(r.aut_order == 1440, tag + " |Aut|");
    c.expect(r.cp_aut_order == 360, tag + " |C^p(Aut)|");
    c.expect(r.alpha_order == 360 && r.cp_equals_alpha, tag + " image of A6");
    c.expect(!r.inn_contained_in_cp, tag + " Inn not contained");
    c.expect(r.verdict.status == CpStatus::kNotCpGroup, tag + " verdict");
  }
  return c;
}

Check trefoil_steps() {
  Check c;
  for (int p : {2, 4, 6}) {
    auto r = trefoil_even_obstruction(p);
    const std::string tag = "p=" + std::to_string(p);
    c.expect(r.steps.size() == 4, tag + " four steps");
    for (const auto& s : r.steps) c.expect(s.passed, tag + " step " + s.name);
    c.expect(r.kernel_index == 6, tag + " index 6");
    c.expect(r.schreier_generator_count == 6 * 2 - 6 + 1, tag + " Schreier generators");
    c.expect(r.obstructed, tag + " obstructed");
  }
  return c;
}

Check torus_grid() {
  Check c;
  for (int m = 2; m <= 12; ++m)
    for (int n = 2; n <= 12; ++n) {
      if (std::gcd(m, n) != 1) continue;
      for (int p = 2; p <= 30; ++p) {
        const std::string tag = "(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(p) + ")";
        const bool expect = std::gcd(m * n, p) == 1;
        c.expect(torus_preimage_exists(m, n, p) == expect, tag + " criterion");
        auto a = chbili_q(m, n, p);
        c.expect(a.exists == expect, tag + " chbili exists");
        if (!expect) continue;
        int count = 0;
        for (int q = 1; q < p; ++q) count += (m - n * q) % p == 0;
        c.expect(count == 1, tag + " q unique");
        c.expect(a.q >= 1 && a.q <= p - 1, tag + " q range");
        c.expect((m - n * a.q) % p == 0, tag + " p | m - nq");
        c.expect(std::gcd(static_cast<int>(a.q), p) == 1, tag + " gcd(q, p)");
      }
    }
  return c;
}

Check derived_series() {
  Check c;
  auto trefoil = torus_knot_group(3, 2);
  for (int p : {2, 3}) {
    auto r = derived_p_series(trefoil, p, 2);
    c.expect(!r.truncated && r.levels.size() == 2, "trefoil p=" + std::to_string(p) + " depth");
    for (const auto& l : r.levels)
      c.expect(l.quotient == AbelianStructure::cyclic(p), "trefoil p=" + std::to_string(p) + " level " + std::to_string(l.level));
  }
  auto s3 = derived_p_series(symmetric_group(3), 6, 2);
  c.expect(s3.levels.size() == 2, "S3 depth");
  if (s3.levels.size() == 2) {
    c.expect(same_subgroup(*s3.levels[0].subgroup, alternating_group(3)), "S3 level 1 = A3");
    c.expect(s3.levels[1].subgroup->is_trivial(), "S3 level 2 trivial");
  }
  return c;
}

Check cover_homology() {
  // Trefoil Delta(t) = t^2 - t + 1: |Delta(-1)| = 3 for the 2-fold cover;
  // for the 3-fold cover the circulant of (1, -1, 1) has cokernel Z_2 + Z_2.
  Check c;
  const auto oracle2 = direct_sum(AbelianStructure::free(1), AbelianStructure::cyclic(3));
  const auto oracle3 = direct_sum(AbelianStructure::free(1),
                                  cokernel_structure(IntMatrix{{1, -1, 1}, {1, 1, -1}, {-1, 1, 1}}));
  c.expect(oracle3 == direct_sum(AbelianStructure::free(1), AbelianStructure::from_cyclic_orders({2, 2})),
           "oracle for p=3");
  auto trefoil = torus_knot_group(3, 2);
  c.expect(abelianization(cp_kernel_presentation(trefoil, 2).subgroup.presentation) == oracle2, "p=2");
  c.expect(abelianization(cp_kernel_presentation(trefoil, 3).subgroup.presentation) == oracle3, "p=3");
  return c;
}

Check homology_tables() {
  Check c;
  auto t = lhs_e2_table(3, 2, 5, 6, 6);
  for (unsigned k = 0; k <= 6; ++k) c.expect(t.total(k) == cyclic_homology(30, k), "degree " + std::to_string(k));
  auto f = five_term_from_multiplication(30);
  c.expect(f.h2.is_trivial() && f.h1 == AbelianStructure::cyclic(30), "five-term");
  return c;
}

Check property_suites() {
  Check c;
  const std::vector<PermGroup> parts{cyclic_group(2), cyclic_group(3), cyclic_group(4), cyclic_group(6),
                                     symmetric_group(3), symmetric_group(4), alternating_group(4)};
  for (const auto& g : parts)
    for (const auto& h : parts)
      for (int p : {2, 3, 4, 6})
        c.expect(cp_subgroup(direct_product(g, h), p) == direct_product(cp_subgroup(g, p), cp_subgroup(h, p)),
                 "product law");

  for (const auto& s : oracle::sample_surjections()) {
    PermGroup q(s.degree, s.images);
    for (int p = 1; p <= 8; ++p)
      c.expect(oracle::image_of(s.g, s.images, cp_subgroup(s.g, p), s.degree) == cp_subgroup(q, p), "functoriality");
  }

  for (const auto& g : {symmetric_group(4), alternating_group(4), dihedral_group(4), klein_four_group(),
                        parse_group("Z2 x Z4")}) {
    auto aut = aut_group_search(g);
    c.expect(aut.complete(), "aut search complete");
    const auto& t = aut.table();
    for (int p = 1; p <= 6; ++p) {
      auto cp = cp_subgroup(g, p);
      std::set<GroupTable::Index> members;
      for (GroupTable::Index e = 0; e < t.size(); ++e)
        if (cp.contains(t.element(e))) members.insert(e);
      for (const auto& m : aut.maps()) {
        std::set<GroupTable::Index> image;
        for (auto e : members) image.insert(static_cast<GroupTable::Index>(m.action[e]));
        c.expect(image == members, "characteristic");
      }
    }
  }

  const auto s3 = symmetric_group(3);
  c.expect(verify_exact_sequence_rob96(direct_product(s3, cyclic_group(2)),
                                       direct_product(s3, PermGroup::trivial(2)))
               .exact(),
           "exact sequence S3 x Z2");
  c.expect(verify_exact_sequence_rob96(s3, s3).exact(), "exact sequence S3");
  bool refused = false;
  try {
    verify_exact_sequence_rob96(alternating_group(4), klein_four_group());
  } catch (const PreconditionError& e) {
    refused = Perm::parse(e.witness(), 4).order() == 3;
  }
  c.expect(refused, "exact sequence A4 over V4 refused with a 3-cycle");

  std::mt19937_64 rng(20240617);
  std::uniform_int_distribution<int> dim(1, 5), entry(-9, 9);
  for (int trial = 0; trial < 500; ++trial) {
    IntMatrix m(dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
    c.expect(oracle::snf_matches_minors(m), "SNF oracle on " + m.to_string());
  }
  return c;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Check()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "C^p of symmetric groups S3..S7", symmetric_groups},
      {2, "C^p of alternating groups", alternating_groups},
      {3, "Z_n quotients have order gcd(n, p)", cyclic_table},
      {4, "Aut(S6) pipeline", s6_pipeline},
      {5, "trefoil obstruction for even p", trefoil_steps},
      {6, "torus criterion and lens space q grid", torus_grid},
      {7, "derived p-series", derived_series},
      {8, "cyclic cover homology", cover_homology},
      {9, "E2 totals and five-term sequence", homology_tables},
      {10, "property suites", property_suites},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Check r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.ok = false;
      r.first_failure = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2d: %s  %s (%.2fs)%s%s\n", c.id, r.ok ? "PASS" : "FAIL", c.name, s,
                r.ok ? "" : "  first failure: ", r.first_failure.c_str());
    failures += r.ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
