#pragma once

// Independent reference computations shared by the unit and acceptance tests.

#include <vector>

#include "cpg/automorphism.hpp"
#include "cpg/homalg.hpp"
#include "cpg/perm.hpp"

namespace oracle {

using cpg::Integer;

// Laplace expansion; independent of the library's Bareiss determinant.
inline Integer laplace(const std::vector<std::vector<Integer>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c] == 0) continue;
    std::vector<std::vector<Integer>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      minor.push_back(std::move(row));
    }
    Integer term = a[0][c] * laplace(minor);
    total += (c % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

/// gcd of all k x k minors.
inline Integer minor_gcd(const cpg::IntMatrix& m, std::size_t k) {
  std::vector<std::vector<std::size_t>> rs, cs;
  std::vector<std::size_t> cur;
  subsets(m.rows(), k, 0, cur, rs);
  subsets(m.cols(), k, 0, cur, cs);
  Integer g = 0;
  for (const auto& r : rs)
    for (const auto& c : cs) {
      std::vector<std::vector<Integer>> a(k, std::vector<Integer>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) a[i][j] = m(r[i], c[j]);
      g = boost::multiprecision::gcd(g, boost::multiprecision::abs(laplace(a)));
    }
  return g;
}

/// Full SNF contract check against the minor oracle.
inline bool snf_matches_minors(const cpg::IntMatrix& m) {
  auto s = cpg::smith_normal_form(m);
  if (!(s.left * m * s.right == s.diagonal)) return false;
  if (boost::multiprecision::abs(cpg::determinant(s.left)) != 1) return false;
  if (boost::multiprecision::abs(cpg::determinant(s.right)) != 1) return false;
  for (std::size_t i = 0; i < s.diagonal.rows(); ++i)
    for (std::size_t j = 0; j < s.diagonal.cols(); ++j)
      if (i != j && s.diagonal(i, j) != 0) return false;
  const std::size_t r = std::min(m.rows(), m.cols());
  Integer product = 1;
  for (std::size_t k = 1; k <= r; ++k) {
    const Integer& dk = s.diagonal(k - 1, k - 1);
    if (dk < 0) return false;
    if (k < r) {
      const Integer& next = s.diagonal(k, k);
      if (dk == 0 ? next != 0 : next % dk != 0) return false;
    }
    product *= dk;
    if (product != minor_gcd(m, k)) return false;
  }
  return true;
}

/// Image of a subgroup under the homomorphism G -> Sym(degree) given on the
/// generators of G, evaluated along the Cayley table.
inline cpg::PermGroup image_of(const cpg::PermGroup& g, const std::vector<cpg::Perm>& images,
                               const cpg::PermGroup& sub, std::size_t degree) {
  cpg::GroupTable t(g);
  std::vector<cpg::Perm> value(t.size());
  value[0] = cpg::Perm(degree);
  for (cpg::GroupTable::Index e = 1; e < t.size(); ++e)
    value[e] = value[t.parent(e)] * images[t.tree_generator(e)];
  std::vector<cpg::Perm> gens;
  for (const auto& s : sub.generators()) gens.push_back(value[t.index_of(s)]);
  return cpg::PermGroup(degree, gens);
}

struct Surjection {
  cpg::PermGroup g;
  std::vector<cpg::Perm> images;
  std::size_t degree;
};

/// S4 -> S3 on the three pairings, S4 -> Z2 by sign, Z12 -> Z4, and the
/// projection S3 x Z4 -> Z4.
inline std::vector<Surjection> sample_surjections() {
  using cpg::Perm;
  using cpg::Point;
  auto s4 = cpg::symmetric_group(4);
  // Pairings {12|34}, {13|24}, {14|23}, indexed by the partner of 1.
  auto pairing_of = [](Point a, Point b) {
    if (a > b) std::swap(a, b);
    return static_cast<Point>(a == 0 ? b - 1 : 5 - (a + b));
  };
  std::vector<Perm> to_s3, to_sign;
  for (const auto& x : s4.generators()) {
    std::vector<Point> img(3);
    for (Point i = 0; i < 3; ++i) img[i] = pairing_of(x[0], x[i + 1]);
    to_s3.push_back(Perm(img));
    to_sign.push_back(x.is_even() ? Perm(2) : Perm::parse("(1 2)"));
  }
  auto z12 = cpg::cyclic_group(12);
  std::vector<Perm> to_z4(z12.generators().size(), Perm::parse("(1 2 3 4)"));
  auto s3z4 = cpg::direct_product(cpg::symmetric_group(3), cpg::cyclic_group(4));
  std::vector<Perm> proj;
  for (const auto& x : s3z4.generators()) {
    std::vector<Point> img(4);
    for (Point i = 0; i < 4; ++i) img[i] = static_cast<Point>(x[3 + i] - 3);
    proj.push_back(Perm(img));
  }
  return {{s4, to_s3, 3}, {s4, to_sign, 2}, {z12, to_z4, 4}, {s3z4, proj, 4}};
}

}  // namespace oracle
