#pragma once

// Exact integer linear algebra and finitely generated abelian groups.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cpg {

using Integer = boost::multiprecision::cpp_int;

std::string to_string(const Integer& value);

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);

  /// Parses the bracketed row-list form `[[3, -2], [1, 0]]`. An empty
  /// matrix with a known column count is written `[]` and gets zero columns.
  static IntMatrix parse(std::string_view text);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  bool is_zero() const;
  bool operator==(const IntMatrix&) const = default;

  /// Bracketed row-list text, the inverse of parse().
  std::string to_string() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
  /// col[target] += factor * col[source]
  void add_col_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void negate_row(std::size_t r);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Exact determinant (fraction-free Bareiss elimination). Square input only.
Integer determinant(const IntMatrix& m);

struct SmithForm {
  IntMatrix left;      // U, unimodular, rows x rows
  IntMatrix diagonal;  // D = U * M * V
  IntMatrix right;     // V, unimodular, cols x cols
};

/// Smith normal form with deterministic pivoting: the pivot is the entry of
/// smallest nonzero absolute value in the active block, ties broken by
/// (row, col). Diagonal entries are nonnegative and form a divisibility chain.
SmithForm smith_normal_form(const IntMatrix& m);

/// A finitely generated abelian group Z^r + Z_{d1} + ... + Z_{dk} in
/// invariant-factor form: every d_i >= 2 and d_i | d_{i+1}. Two isomorphic
/// groups compare equal.
class AbelianStructure {
 public:
  AbelianStructure() = default;

  static AbelianStructure trivial() { return {}; }
  static AbelianStructure free(std::size_t rank);
  static AbelianStructure cyclic(const Integer& order);  // order 0 means Z
  /// Canonicalizes an arbitrary direct sum of cyclic groups; 0 stands for Z.
  static AbelianStructure from_cyclic_orders(const std::vector<Integer>& orders);

  std::size_t free_rank() const noexcept { return free_rank_; }
  const std::vector<Integer>& torsion() const noexcept { return torsion_; }

  bool is_trivial() const noexcept { return free_rank_ == 0 && torsion_.empty(); }
  bool is_finite() const noexcept { return free_rank_ == 0; }
  /// Group order; 0 when the group is infinite.
  Integer order() const;
  /// True iff every element has order dividing n.
  bool exponent_divides(const Integer& n) const;

  /// `0`, `Z`, `Z^2 + Z_3`, `Z_2 + Z_2`.
  std::string to_string() const;

  bool operator==(const AbelianStructure&) const = default;

 private:
  friend AbelianStructure cokernel_structure(const IntMatrix& relations);

  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
};

AbelianStructure direct_sum(const AbelianStructure& a, const AbelianStructure& b);

/// Z^cols modulo the row space of `relations` (rows are relators, columns
/// are generators).
AbelianStructure cokernel_structure(const IntMatrix& relations);

/// A / pA, i.e. A tensored with Z_p.
AbelianStructure tensor_with_zp(const AbelianStructure& a, const Integer& p);

/// Integral homology of the cyclic group of order n in degree k.
AbelianStructure cyclic_homology(const Integer& n, unsigned degree);

/// Second page of the Lyndon-Hochschild-Serre spectral sequence for
/// 1 -> Z_m * Z_n -> G -> Z_p -> 1 with gcd(mn, p) = 1, where every
/// differential vanishes.
class E2Table {
 public:
  E2Table(std::int64_t m, std::int64_t n, std::int64_t p, unsigned s_max, unsigned t_max);

  std::int64_t m() const noexcept { return m_; }
  std::int64_t n() const noexcept { return n_; }
  std::int64_t p() const noexcept { return p_; }
  unsigned s_max() const noexcept { return s_max_; }
  unsigned t_max() const noexcept { return t_max_; }

  const AbelianStructure& at(unsigned s, unsigned t) const;
  /// Direct sum along the anti-diagonal s + t = k. Requires k <= min(s_max, t_max).
  AbelianStructure total(unsigned k) const;

 private:
  std::int64_t m_, n_, p_;
  unsigned s_max_, t_max_;
  std::vector<AbelianStructure> entries_;  // (s_max+1) x (t_max+1), s-major
};

/// Builds the table and checks that each total through min(s_max, t_max)
/// reassembles the homology of Z_{mnp}. Throws InputError unless
/// gcd(mn, p) = 1 and m, n, p >= 2.
E2Table lhs_e2_table(std::int64_t m, std::int64_t n, std::int64_t p, unsigned s_max,
                     unsigned t_max);

struct FiveTermResult {
  AbelianStructure h2;
  AbelianStructure h1;
};

/// Resolves 0 -> H_2 -> Z --(x d)--> Z -> H_1 -> 0.
FiveTermResult five_term_from_multiplication(const Integer& d);

}  // namespace cpg
