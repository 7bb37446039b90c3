#include <set>

#include "doctest.h"

#include "cpg/automorphism.hpp"
#include "cpg/errors.hpp"
#include "cpg/perm.hpp"

using namespace cpg;

namespace {

// Naive closure under right multiplication by generators.
std::set<Perm> closure(const std::vector<Perm>& gens, std::size_t degree) {
  std::set<Perm> seen{Perm(degree)};
  std::vector<Perm> frontier{Perm(degree)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        Perm y = x * g.extended(degree);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return seen;
}

Perm P(const char* text, std::size_t degree = 0) { return Perm::parse(text, degree); }

}  // namespace

TEST_CASE("permutation arithmetic") {
  Perm a = P("(1 2 3)"), b = P("(1 2)", 3);
  CHECK((a * b).to_string() == "(2 3)");  // a first
  CHECK(a.inverse().to_string() == "(1 3 2)");
  CHECK(a.order() == 3);
  CHECK(a.pow(-1) == a.inverse());
  CHECK(a.is_even());
  CHECK_FALSE(b.is_even());
  CHECK(P("()").is_identity());
  CHECK(P("(1 2)(3 4)").to_string() == "(1 2)(3 4)");
  CHECK(commutator(a, b) == a * b * a.inverse() * b.inverse());
  CHECK(conjugate(a, b) == b.inverse() * a * b);
  CHECK_THROWS_AS(Perm::parse("(1 2 2)"), InputError);
  CHECK_THROWS_AS(Perm::parse("(1 2"), InputError);
}

TEST_CASE("orders against closure enumeration") {
  struct Case {
    std::vector<const char*> gens;
    std::size_t degree;
  };
  std::vector<Case> cases = {
      {{"(1 2)", "(1 2 3 4)"}, 4},
      {{"(1 2 3)", "(2 3 4 5 6)"}, 6},
      {{"(1 2 3 4 5)", "(1 2)"}, 5},
      {{"(1 2)(3 4)", "(1 3)(2 4)"}, 4},
      {{"(1 2 3 4 5 6 7)", "(2 3 5)(4 7 6)"}, 7},
      {{"(1 2 3)(4 5)", "(6 7)"}, 7},
  };
  for (const auto& c : cases) {
    std::vector<Perm> gens;
    for (auto s : c.gens) gens.push_back(P(s, c.degree));
    PermGroup g(c.degree, gens);
    auto elements = closure(gens, c.degree);
    CHECK(g.order() == elements.size());
    for (const auto& x : elements) CHECK(g.contains(x));
    auto listed = g.elements();
    CHECK(std::set<Perm>(listed.begin(), listed.end()) == elements);
  }
  CHECK(PermGroup(4, {P("(1 2)", 4), P("(1 2 3 4)")}).order() == 24);
  CHECK(PermGroup(6, {P("(1 2 3)", 6), P("(2 3 4 5 6)")}).order() == 360);
}

TEST_CASE("membership") {
  auto v4 = klein_four_group();
  auto a4 = alternating_group(4);
  CHECK(membership(v4, P("(1 2)(3 4)")));
  CHECK(membership(a4, P("(1 2)(3 4)")));
  CHECK_FALSE(membership(v4, P("(1 2 3)", 4)));
  CHECK_FALSE(membership(a4, P("(1 2)", 4)));
  CHECK(v4.is_subgroup_of(a4));
  CHECK(v4.is_normal_in(symmetric_group(4)));
  CHECK_THROWS_AS(membership(a4, P("(1 2 3)", 5)), InputError);
}

TEST_CASE("named groups") {
  CHECK(symmetric_group(5).order() == 120);
  CHECK(alternating_group(6).order() == 360);
  CHECK(cyclic_group(12).order() == 12);
  CHECK(dihedral_group(6).order() == 12);
  CHECK(klein_four_group().order() == 4);
  CHECK(parse_group("S5") == symmetric_group(5));
  CHECK(parse_group("Z3 x Z2").order() == 6);
  CHECK(parse_group("Z3 x Z2").is_abelian());
  CHECK(parse_group("(1 2), (1 2 3)") == symmetric_group(3));
  CHECK(describe_group(symmetric_group(5)) == "S5 (order 120)");
  CHECK(describe_group(alternating_group(5)) == "A5 (order 60)");
  CHECK(describe_group(PermGroup::trivial(3)) == "1 (order 1)");
  CHECK_THROWS_AS(parse_group("S11"), InputError);
  CHECK_THROWS_AS(parse_group("Q8"), InputError);
  PermLimits tight;
  tight.max_degree = 4;
  CHECK_THROWS_AS(group_order(symmetric_group(5), tight), InputError);
}

TEST_CASE("centralizer and center") {
  auto s3 = symmetric_group(3);
  auto z2 = cyclic_group(2);
  auto g = direct_product(s3, z2);
  auto h = direct_product(s3, PermGroup::trivial(2));
  auto c = centralizer(g, h);
  CHECK(c.order() == 2);
  for (const auto& x : c.generators())
    for (const auto& y : h.generators()) CHECK(x * y == y * x);
  CHECK(center(s3).is_trivial());
  CHECK(center(g).order() == 2);
  CHECK(center(dihedral_group(4)).order() == 2);
}

TEST_CASE("normal closure and derived subgroup") {
  auto s4 = symmetric_group(4);
  CHECK(normal_closure(s4, {P("(1 2 3)", 4)}) == alternating_group(4));
  CHECK(normal_closure(s4, {P("(1 2)", 4)}) == s4);
  CHECK(derived_subgroup(s4) == alternating_group(4));
  CHECK(derived_subgroup(alternating_group(4)) == klein_four_group());
  CHECK(derived_subgroup(cyclic_group(7)).is_trivial());
}

TEST_CASE("quotients") {
  auto q = quotient_regular_action(symmetric_group(4), klein_four_group());
  CHECK(q.group.order() == 6);
  CHECK_FALSE(q.group.is_abelian());
  auto s4 = symmetric_group(4);
  CHECK(q.coset_representatives.size() == 6);
  CHECK_THROWS_AS(quotient_regular_action(s4, PermGroup(4, {P("(1 2)", 4)})), PreconditionError);
  auto z2 = quotient_regular_action(parse_group("Z2 x Z2"), PermGroup(4, {P("(1 2)", 4)}));
  CHECK(z2.group.order() == 2);
}

TEST_CASE("canonical coset representatives") {
  auto a4 = alternating_group(4);
  auto s4 = symmetric_group(4);
  std::set<Perm> reps;
  for (const auto& x : s4.elements()) {
    Perm r = a4.canonical_coset_representative(x);
    CHECK(a4.contains(r * x.inverse()));
    reps.insert(r);
  }
  CHECK(reps.size() == 2);
}

TEST_CASE("group tables") {
  GroupTable t(symmetric_group(3));
  CHECK(t.size() == 6);
  CHECK(t.element(0).is_identity());
  for (GroupTable::Index a = 0; a < t.size(); ++a) {
    CHECK(t.multiply(a, t.inverse(a)) == 0);
    CHECK(t.element(t.multiply(a, 1)) == t.element(a) * t.element(1));
    GroupTable::Index e = 0;
    for (auto k : t.word(a)) e = t.multiply(e, t.generator(k));
    CHECK(e == a);
  }
  CHECK(t.class_size(t.index_of(Perm::parse("(1 2)", 3))) == 3);
  CHECK(t.centralizer_order(t.index_of(Perm::parse("(1 2 3)"))) == 3);
}
