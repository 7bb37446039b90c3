#include <set>

#include "doctest.h"

#include "cpg/errors.hpp"
#include "cpg/fp.hpp"
#include "cpg/perm.hpp"

using namespace cpg;

namespace {

const char* kTrefoil = "< a, b | a^3 = b^2 >";
const char* kS3 = "< a, b | a^2, b^2, (ab)^3 >";

// Closure of images, independent of Schreier-Sims.
std::size_t closure_size(const std::vector<Perm>& gens) {
  std::set<Perm> seen{Perm(gens[0].degree())};
  std::vector<Perm> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier)
      for (const auto& g : gens)
        if (seen.insert(x * g).second) next.push_back(x * g);
    frontier = std::move(next);
  }
  return seen.size();
}

}  // namespace

TEST_CASE("word arithmetic") {
  auto a = Word::generator(0), b = Word::generator(1);
  CHECK((a * a.inverse()).empty());
  CHECK((a * b * b.inverse() * a).syllables() == std::vector<Syllable>{{0, 2}});
  CHECK((a * b).pow(2).length() == 4);
  CHECK((a * b).pow(-1) == b.inverse() * a.inverse());
  CHECK((b * a * b.inverse()).cyclically_reduced() == a);
  CHECK((a * b).letters() == std::vector<std::uint32_t>{0, 2});
  CHECK(a.inverse().letters() == std::vector<std::uint32_t>{1});
  CHECK((a.pow(3) * b.pow(-2)).exponent_sum(1) == -2);
  CHECK(Word().to_string({"a"}) == "1");
  CHECK((a.pow(3) * b.pow(-2)).to_string({"a", "b"}) == "a^3 b^-2");
}

TEST_CASE("presentation parsing") {
  auto t = parse_presentation(kTrefoil);
  CHECK(t.generator_count() == 2);
  REQUIRE(t.relators().size() == 1);
  CHECK(t.to_string() == "< a, b | a^3 b^-2 >");
  CHECK(parse_presentation(t.to_string()) == t);

  auto s3 = parse_presentation(kS3);
  CHECK(s3.relators()[2].to_string(s3.generator_names()) == "a b a b a b");
  CHECK(parse_presentation("<a,b|a*b*a^-1*b^-1>") == parse_presentation("< a, b | a b a^-1 b^-1 >"));
  CHECK(parse_presentation("< x | x^(-4) >").relators()[0].exponent_sum(0) == -4);
  CHECK(parse_presentation("< a | >").relators().empty());
  CHECK(parse_presentation("< | >").generator_count() == 0);
  CHECK(parse_presentation("< a, ab | ab a >").relators()[0].length() == 2);
  CHECK(parse_presentation("< a | a a^-1 >").relators().empty());

  CHECK_THROWS_AS(parse_presentation("< a, b | a^3 b^^2 >"), ParseError);
  CHECK_THROWS_AS(parse_presentation("< a, b | c >"), InputError);
  CHECK_THROWS_AS(parse_presentation("< a, a | a >"), InputError);
  CHECK_THROWS_AS(parse_presentation("a, b | a"), ParseError);
  try {
    parse_presentation("< a | a^ >");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() > 0);
  }
  CHECK(t.parse_word_list("a^2, b a b").size() == 2);
  CHECK(t.parse_word_list("").empty());
}

TEST_CASE("coset enumeration") {
  auto s3 = parse_presentation(kS3);
  auto r = todd_coxeter(s3, {});
  REQUIRE(r.status == EnumerationStatus::kClosed);
  CHECK(r.table->index() == 6);
  CHECK(r.table->is_valid());
  CHECK(closure_size({Perm::parse("(1 2)", 3), Perm::parse("(2 3)", 3)}) == 6);

  auto h = todd_coxeter(s3, s3.parse_word_list("a"));
  CHECK(h.table->index() == 3);
  CHECK(todd_coxeter(s3, s3.parse_word_list("a b")).table->index() == 2);

  auto z = parse_presentation("< a | a^12 >");
  CHECK(todd_coxeter(z, {}).table->index() == 12);
  CHECK(todd_coxeter(z, z.parse_word_list("a^8")).table->index() == 4);

  auto a5 = parse_presentation("< a, b | a^2, b^3, (ab)^5 >");
  CHECK(todd_coxeter(a5, {}).table->index() == 60);

  auto trivial = parse_presentation("< a, b | a b a^-1 b^-2, b a b^-1 a^-2 >");
  CHECK(todd_coxeter(trivial, {}).table->index() == 1);
}

TEST_CASE("coset enumeration budget") {
  auto z = parse_presentation("< a | >");
  auto r = todd_coxeter(z, {}, 50);
  CHECK(r.status == EnumerationStatus::kBudgetExhausted);
  CHECK_FALSE(r.table.has_value());
  auto big = parse_presentation("< a, b | a^2, b^3, (ab)^5 >");
  CHECK(todd_coxeter(big, {}, 10).status == EnumerationStatus::kBudgetExhausted);
}

TEST_CASE("coset tables are deterministic and standard") {
  auto p = parse_presentation("< a, b | a^2, b^3, (ab)^4 >");
  auto x = todd_coxeter(p, {});
  auto y = todd_coxeter(p, {});
  REQUIRE(x.table);
  CHECK(x.table->index() == 24);
  CHECK(x.table->rows() == y.table->rows());
  auto perms = x.table->generator_permutations();
  CHECK(PermGroup(24, perms).order() == 24);
  auto reps = x.table->coset_representatives();
  for (std::uint32_t c = 0; c < reps.size(); ++c) CHECK(x.table->trace(0, reps[c]) == c);
}

TEST_CASE("homomorphism checks") {
  auto t = parse_presentation(kTrefoil);
  CHECK(verify_hom(t, {Perm::parse("(1 2 3)"), Perm::parse("(1 2)", 3)}));
  CHECK_FALSE(verify_hom(t, {Perm::parse("(1 2)", 3), Perm::parse("(1 2 3)")}));
  CHECK_THROWS_AS(verify_hom(t, {Perm::parse("(1 2)")}), InputError);
  CHECK(evaluate(t.relators()[0], {Perm::parse("(1 2)", 3), Perm::parse("(1 2 3)")}, 3) ==
        Perm::parse("(1 2)", 3) * Perm::parse("(1 2 3)"));
}

TEST_CASE("kernel coset tables") {
  auto z6 = parse_presentation("< a | a^6 >");
  auto k = kernel_coset_table(z6, {Perm::parse("(1 2 3)")});
  CHECK(k.index() == 3);
  CHECK(k.is_valid());

  auto t = parse_presentation(kTrefoil);
  auto phi = std::vector<Perm>{Perm::parse("(1 2 3)"), Perm::parse("(1 2)", 3)};
  auto kt = kernel_coset_table(t, phi);
  CHECK(kt.index() == 6);
  CHECK(kt.subgroup_generators().size() == 6 * 2 - 6 + 1);
  for (const auto& s : kt.subgroup_generators()) CHECK(evaluate(s, phi, 3).is_identity());
  CHECK(kt.schreier_generators() == kt.subgroup_generators());

  CHECK_THROWS_AS(kernel_coset_table(t, {Perm::parse("(1 2)", 3), Perm::parse("(1 2 3)")}),
                  PreconditionError);
}

TEST_CASE("coset tables from actions") {
  auto z = parse_presentation("< a | >");
  auto table = coset_table_from_action(
      z, {0},
      [](const std::vector<std::int64_t>& s, std::size_t, bool inverse) {
        return std::vector<std::int64_t>{(s[0] + (inverse ? 4 : 1)) % 5};
      },
      100);
  CHECK(table.index() == 5);
  CHECK(table.is_valid());
  CHECK(table.subgroup_generators().size() == 1);
  CHECK_THROWS_AS(coset_table_from_action(
                      z, {0},
                      [](const std::vector<std::int64_t>& s, std::size_t, bool inverse) {
                        return std::vector<std::int64_t>{(s[0] + (inverse ? 4 : 1)) % 5};
                      },
                      3),
                  BudgetExhausted);
}

TEST_CASE("Reidemeister-Schreier") {
  auto s3 = parse_presentation(kS3);
  auto sign = kernel_coset_table(s3, {Perm::parse("(1 2)"), Perm::parse("(1 2)")});
  CHECK(sign.index() == 2);
  auto a3 = reidemeister_schreier(sign);
  CHECK(abelianization(a3.presentation) == AbelianStructure::cyclic(3));
  CHECK(a3.schreier_generator_count == 2 * 2 - 2 + 1);

  auto t = parse_presentation(kTrefoil);
  auto cover = kernel_coset_table(t, {Perm::parse("()", 2), Perm::parse("(1 2)")});
  CHECK(cover.index() == 2);
  auto rs = reidemeister_schreier(cover);
  CHECK(abelianization(rs.presentation) == direct_sum(AbelianStructure::free(1), AbelianStructure::cyclic(3)));
  // Generator words really lie in the subgroup.
  for (const auto& w : rs.generator_words) CHECK(cover.trace(0, w) == 0);

  // Index-1 subgroup returns the group itself.
  auto whole = todd_coxeter(t, t.parse_word_list("a, b"));
  auto same = reidemeister_schreier(*whole.table);
  CHECK(abelianization(same.presentation) == AbelianStructure::free(1));

  // The printed presentation parses back to itself.
  CHECK(parse_presentation(rs.presentation.to_string()) == rs.presentation);
}

TEST_CASE("abelianization") {
  CHECK(abelianization(parse_presentation(kTrefoil)) == AbelianStructure::free(1));
  CHECK(abelianization(parse_presentation(kS3)) == AbelianStructure::cyclic(2));
  CHECK(abelianization(parse_presentation("< a, b | >")) == AbelianStructure::free(2));
  CHECK(abelianization(parse_presentation("< a, b | a^3, b^2 >")) == AbelianStructure::cyclic(6));
  CHECK(relation_matrix(parse_presentation(kTrefoil)) == IntMatrix{{3, -2}});
}
