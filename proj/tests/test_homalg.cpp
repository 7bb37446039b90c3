#include <algorithm>
#include <random>

#include "doctest.h"

#include "cpg/errors.hpp"
#include "cpg/homalg.hpp"
#include "oracles.hpp"

using namespace cpg;

namespace {

bool is_diagonal(const IntMatrix& d) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j) != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("matrix text round trip") {
  auto m = IntMatrix::parse("[[3, -2], [1, 0]]");
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 2);
  CHECK(m(0, 1) == -2);
  CHECK(m.to_string() == "[[3, -2], [1, 0]]");
  CHECK(IntMatrix::parse(m.to_string()) == m);
  CHECK_THROWS_AS(IntMatrix::parse("[[1, 2], [3]]"), InputError);
  CHECK_THROWS_AS(IntMatrix::parse("[[1, x]]"), InputError);
}

TEST_CASE("smith normal form examples") {
  auto s = smith_normal_form(IntMatrix{{3, -2}});
  CHECK(s.diagonal == IntMatrix{{1, 0}});
  CHECK(s.left * IntMatrix{{3, -2}} * s.right == s.diagonal);

  IntMatrix zero(2, 2);
  auto z = smith_normal_form(zero);
  CHECK(z.diagonal == zero);
  CHECK(z.left == IntMatrix::identity(2));
  CHECK(z.right == IntMatrix::identity(2));

  auto d = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
  CHECK(d.diagonal == IntMatrix{{1, 0}, {0, 6}});
}

TEST_CASE("smith normal form is deterministic") {
  IntMatrix m{{4, 6, 2}, {8, -3, 5}, {1, 1, 1}};
  auto a = smith_normal_form(m);
  auto b = smith_normal_form(m);
  CHECK(a.left == b.left);
  CHECK(a.right == b.right);
  CHECK(a.diagonal == b.diagonal);
}

TEST_CASE("smith normal form against the minor gcd oracle") {
  std::mt19937_64 rng(20240617);
  std::uniform_int_distribution<int> dim(1, 5), entry(-9, 9);
  for (int trial = 0; trial < 500; ++trial) {
    IntMatrix m(dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
    auto s = smith_normal_form(m);
    REQUIRE(s.left * m * s.right == s.diagonal);
    CHECK(boost::multiprecision::abs(determinant(s.left)) == 1);
    CHECK(boost::multiprecision::abs(determinant(s.right)) == 1);
    REQUIRE(is_diagonal(s.diagonal));
    const std::size_t r = std::min(m.rows(), m.cols());
    Integer product = 1;
    for (std::size_t k = 1; k <= r; ++k) {
      const Integer& dk = s.diagonal(k - 1, k - 1);
      CHECK(dk >= 0);
      if (k < r && dk != 0) CHECK(s.diagonal(k, k) % dk == 0);
      if (k < r && dk == 0) CHECK(s.diagonal(k, k) == 0);
      product *= dk;
      CHECK(product == oracle::minor_gcd(m, k));
    }
  }
}

TEST_CASE("determinant") {
  CHECK(determinant(IntMatrix{{2, 1}, {7, 4}}) == 1);
  CHECK(determinant(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}) == -3);
  CHECK(determinant(IntMatrix::identity(4)) == 1);
}

TEST_CASE("cokernel structure") {
  CHECK(cokernel_structure(IntMatrix{{3, -2}}) == AbelianStructure::free(1));
  CHECK(cokernel_structure(IntMatrix{{5}}) == AbelianStructure::cyclic(5));
  CHECK(cokernel_structure(IntMatrix{{12}, {8}}) == AbelianStructure::cyclic(4));
  CHECK(cokernel_structure(IntMatrix{{2, 0}, {0, 3}}) == AbelianStructure::cyclic(6));
  CHECK(cokernel_structure(IntMatrix(0, 2)) == AbelianStructure::free(2));
  CHECK(cokernel_structure(IntMatrix{{1, 1}}).to_string() == "Z");
}

TEST_CASE("cokernel structure is invariant under row and column operations") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-6, 6);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix m(3, 4);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = entry(rng);
    const auto base = cokernel_structure(m);
    IntMatrix a = m;
    a.swap_rows(0, 2);
    CHECK(cokernel_structure(a) == base);
    IntMatrix b = m;
    b.swap_cols(1, 3);
    CHECK(cokernel_structure(b) == base);
    IntMatrix c = m;
    c.add_row_multiple(1, 0, entry(rng));
    CHECK(cokernel_structure(c) == base);
  }
}

TEST_CASE("abelian structure canonical form") {
  auto a = AbelianStructure::from_cyclic_orders({2, 3, 0, 4, 1});
  CHECK(a.free_rank() == 1);
  CHECK(a.torsion() == std::vector<Integer>{2, 12});
  CHECK(a.to_string() == "Z + Z_2 + Z_12");
  CHECK(AbelianStructure::from_cyclic_orders({6}) == AbelianStructure::from_cyclic_orders({2, 3}));
  CHECK(AbelianStructure::trivial().to_string() == "0");
  CHECK(AbelianStructure::free(2).to_string() == "Z^2");
  CHECK(AbelianStructure::from_cyclic_orders({4, 2}).order() == 8);
  CHECK(AbelianStructure::free(1).order() == 0);
  CHECK(direct_sum(AbelianStructure::cyclic(2), AbelianStructure::cyclic(3)) == AbelianStructure::cyclic(6));
}

TEST_CASE("tensor with Z_p") {
  CHECK(tensor_with_zp(AbelianStructure::free(2), 3) == AbelianStructure::from_cyclic_orders({3, 3}));
  CHECK(tensor_with_zp(AbelianStructure::cyclic(6), 4) == AbelianStructure::cyclic(2));
  CHECK(tensor_with_zp(AbelianStructure::from_cyclic_orders({0, 5, 9}), 1).is_trivial());
  for (int n = 1; n <= 20; ++n)
    for (int p = 1; p <= 10; ++p) {
      auto t = tensor_with_zp(AbelianStructure::from_cyclic_orders({0, n, 2 * n}), p);
      CHECK(t.exponent_divides(p));
    }
  // Brute force on Z_6: p Z_6 = {0, 4, 2} for p = 4.
  for (int p = 1; p <= 12; ++p) {
    std::vector<bool> hit(6, false);
    for (int x = 0; x < 6; ++x) hit[(p * x) % 6] = true;
    const auto image = std::count(hit.begin(), hit.end(), true);
    CHECK(tensor_with_zp(AbelianStructure::cyclic(6), p).order() == 6 / image);
  }
}

TEST_CASE("cyclic homology and E2 tables") {
  CHECK(cyclic_homology(30, 0) == AbelianStructure::free(1));
  CHECK(cyclic_homology(30, 1) == AbelianStructure::cyclic(30));
  CHECK(cyclic_homology(30, 2).is_trivial());
  CHECK(cyclic_homology(7, 5) == AbelianStructure::cyclic(7));

  auto t = lhs_e2_table(3, 2, 5, 6, 6);
  CHECK(t.at(0, 0) == AbelianStructure::free(1));
  CHECK(t.at(0, 1) == AbelianStructure::cyclic(6));
  CHECK(t.at(1, 0) == AbelianStructure::cyclic(5));
  CHECK(t.at(2, 2).is_trivial());
  for (unsigned k = 0; k <= 6; ++k) CHECK(t.total(k) == cyclic_homology(30, k));

  for (std::int64_t m : {2, 3, 5, 7})
    for (std::int64_t n : {2, 3, 4, 9})
      for (std::int64_t p : {2, 3, 5, 7, 11}) {
        if (std::gcd(m, n) != 1 || std::gcd(m * n, p) != 1) continue;
        auto e = lhs_e2_table(m, n, p, 6, 6);
        for (unsigned k = 0; k <= 6; ++k) CHECK(e.total(k) == cyclic_homology(m * n * p, k));
      }
  CHECK_THROWS_AS(lhs_e2_table(3, 2, 6, 4, 4), InputError);
}

TEST_CASE("five-term sequence from multiplication") {
  auto a = five_term_from_multiplication(30);
  CHECK(a.h2.is_trivial());
  CHECK(a.h1 == AbelianStructure::cyclic(30));
  auto b = five_term_from_multiplication(1);
  CHECK(b.h2.is_trivial());
  CHECK(b.h1.is_trivial());
  auto c = five_term_from_multiplication(0);
  CHECK(c.h2 == AbelianStructure::free(1));
  CHECK(c.h1 == AbelianStructure::free(1));
  CHECK(five_term_from_multiplication(-12).h1 == AbelianStructure::cyclic(12));
}
