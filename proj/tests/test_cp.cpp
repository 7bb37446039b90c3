#include <set>

#include "doctest.h"

#include "cpg/automorphism.hpp"
#include "cpg/cp.hpp"
#include "cpg/errors.hpp"
#include "oracles.hpp"

using namespace cpg;

namespace {

std::vector<PermGroup> sample_groups() {
  return {cyclic_group(6), cyclic_group(8), symmetric_group(3), symmetric_group(4), alternating_group(4),
          dihedral_group(5), klein_four_group(), parse_group("Z2 x Z4")};
}

// |G^ab tensor Z_p| via the multiplication-table presentation, independent
// of the stabilizer chain.
Integer quotient_order_from_table(const PermGroup& g, const Integer& p) {
  GroupTable t(g);
  return tensor_with_zp(abelianization(cayley_presentation(t)), p).order();
}

}  // namespace

TEST_CASE("C^p of named groups") {
  CHECK(cp_subgroup(symmetric_group(5), 2) == alternating_group(5));
  CHECK(cp_subgroup(symmetric_group(5), 3) == symmetric_group(5));
  CHECK(cp_subgroup(alternating_group(4), 6) == klein_four_group());
  auto z12 = cp_subgroup(cyclic_group(12), 8);
  CHECK(z12.order() == 3);
  CHECK(cyclic_group(12).order() / z12.order() == 4);
  CHECK_THROWS_AS(cp_subgroup(symmetric_group(3), 0), InputError);
}

TEST_CASE("C^p structural properties") {
  for (const auto& g : sample_groups())
    for (int p = 1; p <= 8; ++p) {
      auto c = cp_subgroup(g, p);
      REQUIRE(c.is_subgroup_of(g));
      CHECK(c.is_normal_in(g));
      auto q = quotient_regular_action(g, c);
      CHECK(q.group.is_abelian());
      for (const auto& x : q.group.generators()) CHECK(p % static_cast<int>(x.order()) == 0);
      CHECK(g.order() / c.order() == quotient_order_from_table(g, p));
      CHECK(g.order() / c.order() == tensor_with_zp(abelian_invariants(g), p).order());
    }
  for (const auto& g : sample_groups()) CHECK(cp_subgroup(g, 1) == g);
}

TEST_CASE("abelian invariants of permutation groups") {
  CHECK(abelian_invariants(symmetric_group(4)) == AbelianStructure::cyclic(2));
  CHECK(abelian_invariants(alternating_group(4)) == AbelianStructure::cyclic(3));
  CHECK(abelian_invariants(klein_four_group()) == AbelianStructure::from_cyclic_orders({2, 2}));
  CHECK(abelian_invariants(parse_group("Z2 x Z4 x Z3")) == AbelianStructure::from_cyclic_orders({2, 12}));
  CHECK(abelian_invariants(alternating_group(5)).is_trivial());
}

TEST_CASE("C^p product law") {
  std::vector<PermGroup> parts{cyclic_group(2), cyclic_group(3), cyclic_group(4), symmetric_group(3),
                               symmetric_group(4), alternating_group(4)};
  for (const auto& g : parts)
    for (const auto& h : parts)
      for (int p : {2, 3, 4, 6}) {
        auto lhs = cp_subgroup(direct_product(g, h), p);
        auto rhs = direct_product(cp_subgroup(g, p), cp_subgroup(h, p));
        CHECK(lhs == rhs);
      }
}

TEST_CASE("C^p surjective functoriality") {
  for (const auto& c : oracle::sample_surjections()) {
    cpg::PermGroup q(c.degree, c.images);
    REQUIRE(q == oracle::image_of(c.g, c.images, c.g, c.degree));
    for (int p = 1; p <= 8; ++p)
      CHECK(oracle::image_of(c.g, c.images, cp_subgroup(c.g, p), c.degree) == cp_subgroup(q, p));
  }
  CHECK(PermGroup(3, oracle::sample_surjections()[0].images) == symmetric_group(3));
}

TEST_CASE("C^p is characteristic") {
  for (const auto& g : {symmetric_group(4), alternating_group(4), dihedral_group(4), parse_group("Z2 x Z4"),
                        klein_four_group()}) {
    auto aut = aut_group_search(g);
    REQUIRE(aut.complete());
    const auto& t = aut.table();
    for (int p = 1; p <= 6; ++p) {
      auto c = cp_subgroup(g, p);
      std::set<GroupTable::Index> members;
      for (GroupTable::Index e = 0; e < t.size(); ++e)
        if (c.contains(t.element(e))) members.insert(e);
      for (const auto& m : aut.maps()) {
        std::set<GroupTable::Index> image;
        for (auto e : members) image.insert(static_cast<GroupTable::Index>(m.action[e]));
        CHECK(image == members);
      }
    }
  }
}

TEST_CASE("automorphism search") {
  auto s3 = aut_group_search(symmetric_group(3));
  CHECK(s3.size() == 6);
  CHECK(s3.inner_count() == 6);
  CHECK(is_complete(symmetric_group(3)));
  CHECK(is_complete(symmetric_group(4)));
  CHECK_FALSE(is_complete(alternating_group(4)));
  CHECK(aut_group_search(alternating_group(4)).size() == 24);
  CHECK(aut_group_search(klein_four_group()).size() == 6);
  CHECK(aut_group_search(cyclic_group(12)).size() == 4);
  CHECK(aut_group_search(dihedral_group(4)).size() == 8);
  auto s6 = aut_group_search(symmetric_group(6));
  CHECK(s6.size() == 1440);
  CHECK(s6.inner_count() == 720);
  AutSearchOptions tight;
  tight.node_budget = 50;
  auto partial = aut_group_search(symmetric_group(6), tight);
  CHECK_FALSE(partial.complete());
  CHECK_THROWS_AS(is_complete(symmetric_group(6), tight), BudgetExhausted);
}

TEST_CASE("presented quotients and kernels") {
  auto trefoil = parse_presentation("< a, b | a^3 = b^2 >");
  CHECK(cp_quotient_fp(trefoil, 5) == AbelianStructure::cyclic(5));
  CHECK(cp_quotient_fp(parse_presentation("< a, b | a^3, b^2 >"), 6) == AbelianStructure::cyclic(6));
  CHECK(cp_quotient_fp(parse_presentation("< a, b | >"), 2) == AbelianStructure::from_cyclic_orders({2, 2}));
  CHECK(cp_quotient_fp(trefoil, 1).is_trivial());

  auto z = cp_kernel_presentation(parse_presentation("< a | >"), 3);
  CHECK(z.table.index() == 3);
  CHECK(abelianization(z.subgroup.presentation) == AbelianStructure::free(1));

  // Two-fold cover of the trefoil: |Delta(-1)| = |1 + 1 + 1| = 3.
  auto k2 = cp_kernel_presentation(trefoil, 2);
  CHECK(k2.table.index() == 2);
  CHECK(abelianization(k2.subgroup.presentation) ==
        direct_sum(AbelianStructure::free(1), AbelianStructure::cyclic(3)));

  CHECK_THROWS_AS(cp_kernel_presentation(parse_presentation("< a, b | >"), 101, 10000), BudgetExhausted);
}

TEST_CASE("derived p-series") {
  auto trefoil = parse_presentation("< a, b | a^3 = b^2 >");
  for (int p : {2, 3}) {
    auto r = derived_p_series(trefoil, p, 2);
    REQUIRE(r.levels.size() == 2);
    CHECK_FALSE(r.truncated);
    for (const auto& l : r.levels) CHECK(l.quotient == AbelianStructure::cyclic(p));
  }
  auto z = derived_p_series(parse_presentation("< a | >"), 2, 3);
  REQUIRE(z.levels.size() == 3);
  for (const auto& l : z.levels) CHECK(l.quotient == AbelianStructure::cyclic(2));

  auto s3 = derived_p_series(symmetric_group(3), 6, 2);
  REQUIRE(s3.levels.size() == 2);
  CHECK(*s3.levels[0].subgroup == alternating_group(3));
  CHECK(s3.levels[1].subgroup->is_trivial());

  auto cut = derived_p_series(parse_presentation("< a, b | >"), 3, 3, 20);
  CHECK(cut.truncated);
  CHECK(cut.truncated_at == 2);
  CHECK(cut.levels.size() == 1);
}

TEST_CASE("verdicts") {
  auto v = cp_group_verdict(symmetric_group(3), 3);
  CHECK(v.status == CpStatus::kIsCpGroup);
  CHECK(v.reason == CpReason::kSelfWitness);
  v = cp_group_verdict(symmetric_group(3), 2);
  CHECK(v.status == CpStatus::kNotCpGroup);
  CHECK(v.reason == CpReason::kCompleteCriterion);
  v = cp_group_verdict(symmetric_group(6), 2);
  CHECK(v.status == CpStatus::kNotCpGroup);
  CHECK(v.reason == CpReason::kAutCriterion);
  CHECK(*v.aut_order == 1440);
  CHECK(*v.cp_aut_order == 360);
  CHECK_FALSE(v.witness.empty());
  v = cp_group_verdict(cyclic_group(4), 2);
  CHECK(v.status == CpStatus::kInconclusive);
  CHECK(to_string(CpStatus::kIsCpGroup) == "IS_CP_GROUP");
  CHECK(to_string(CpReason::kAutCriterion) == "AUT_CRITERION");
}

TEST_CASE("Robinson exact sequence") {
  auto s3 = symmetric_group(3);
  auto g = direct_product(s3, cyclic_group(2));
  auto h = direct_product(s3, PermGroup::trivial(2));
  auto r = verify_exact_sequence_rob96(g, h);
  CHECK(r.exact());
  CHECK(r.center_order == 1);
  CHECK(r.centralizer_order == 2);
  CHECK(verify_exact_sequence_rob96(s3, s3).exact());
  try {
    verify_exact_sequence_rob96(alternating_group(4), klein_four_group());
    FAIL("expected a precondition error");
  } catch (const PreconditionError& e) {
    CHECK(Perm::parse(e.witness(), 4).order() == 3);
  }
  CHECK_THROWS_AS(verify_exact_sequence_rob96(symmetric_group(4), PermGroup(4, {Perm::parse("(1 2)", 4)})),
                  PreconditionError);
}

TEST_CASE("S6 pipeline") {
  for (int p : {2, 4, 6}) {
    auto r = verify_s6_pipeline(p);
    CHECK(r.aut_order == 1440);
    CHECK(r.inn_order == 720);
    CHECK(r.cp_aut_order == 360);
    CHECK(r.alpha_order == 360);
    CHECK(r.cp_equals_alpha);
    CHECK_FALSE(r.inn_contained_in_cp);
    CHECK(r.tau_in_a6);
    CHECK(r.psi_images.size() == 2);
    CHECK(r.verdict.status == CpStatus::kNotCpGroup);
  }
  CHECK_THROWS_AS(verify_s6_pipeline(3), InputError);
  CHECK_THROWS_AS(verify_s6_pipeline(14), InputError);
}
