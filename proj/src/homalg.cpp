#include "cpg/homalg.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>
#include <sstream>
#include <utility>

#include "cpg/errors.hpp"

namespace cpg {

std::string to_string(const Integer& value) { return value.str(); }

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw InputError("ragged matrix literal");
    for (long long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

namespace {

class MatrixLexer {
 public:
  explicit MatrixLexer(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }
  Integer integer() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) throw ParseError("expected integer", start);
    std::string token(text_.substr(start, pos_ - start));
    if (token[0] == '+') token.erase(0, 1);
    return Integer(token);
  }
  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }
  std::size_t position() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

IntMatrix IntMatrix::parse(std::string_view text) {
  MatrixLexer lex(text);
  std::vector<std::vector<Integer>> rows;
  lex.expect('[');
  if (!lex.peek(']')) {
    do {
      lex.expect('[');
      std::vector<Integer> row;
      if (!lex.peek(']')) {
        do {
          row.push_back(lex.integer());
        } while (lex.peek(',') && (lex.expect(','), true));
      }
      lex.expect(']');
      if (!rows.empty() && row.size() != rows.front().size())
        throw ParseError("row length differs from first row", lex.position());
      rows.push_back(std::move(row));
    } while (lex.peek(',') && (lex.expect(','), true));
  }
  lex.expect(']');
  if (!lex.at_end()) throw ParseError("trailing characters", lex.position());

  IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v == 0; });
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) out << ", ";
    out << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out << ", ";
      out << (*this)(r, c);
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(target, c) += factor * (*this)(source, c);
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, target) += factor * (*this)(r, source);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix dimension mismatch in product");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

Integer determinant(const IntMatrix& input) {
  if (input.rows() != input.cols()) throw InputError("determinant of non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix m = input;
  Integer sign = 1;
  Integer previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      m.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
    previous = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

struct Pivot {
  std::size_t row, col;
};

// Smallest nonzero |entry| in the block [t.., t..], ties by (row, col).
std::optional<Pivot> find_pivot(const IntMatrix& d, std::size_t t) {
  std::optional<Pivot> best;
  Integer best_abs;
  for (std::size_t r = t; r < d.rows(); ++r)
    for (std::size_t c = t; c < d.cols(); ++c) {
      if (d(r, c) == 0) continue;
      Integer a = abs(d(r, c));
      if (!best || a < best_abs) {
        best = Pivot{r, c};
        best_abs = std::move(a);
      }
    }
  return best;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm out{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
  IntMatrix& u = out.left;
  IntMatrix& d = out.diagonal;
  IntMatrix& v = out.right;

  const std::size_t limit = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < limit; ++t) {
    for (;;) {
      const auto pivot = find_pivot(d, t);
      if (!pivot) return out;  // remaining block is zero
      d.swap_rows(t, pivot->row);
      u.swap_rows(t, pivot->row);
      d.swap_cols(t, pivot->col);
      v.swap_cols(t, pivot->col);

      bool clean = true;
      for (std::size_t r = t + 1; r < d.rows(); ++r) {
        if (d(r, t) == 0) continue;
        const Integer q = d(r, t) / d(t, t);
        d.add_row_multiple(r, t, -q);
        u.add_row_multiple(r, t, -q);
        if (d(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < d.cols(); ++c) {
        if (d(t, c) == 0) continue;
        const Integer q = d(t, c) / d(t, t);
        d.add_col_multiple(c, t, -q);
        v.add_col_multiple(c, t, -q);
        if (d(t, c) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the rest of the block; otherwise fold the
      // offending row into row t and reduce again.
      bool divides = true;
      for (std::size_t r = t + 1; r < d.rows() && divides; ++r)
        for (std::size_t c = t + 1; c < d.cols(); ++c)
          if (d(r, c) % d(t, t) != 0) {
            d.add_row_multiple(t, r, 1);
            u.add_row_multiple(t, r, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// AbelianStructure

AbelianStructure AbelianStructure::free(std::size_t rank) {
  AbelianStructure a;
  a.free_rank_ = rank;
  return a;
}

AbelianStructure AbelianStructure::cyclic(const Integer& order) {
  return from_cyclic_orders({order});
}

AbelianStructure AbelianStructure::from_cyclic_orders(const std::vector<Integer>& orders) {
  IntMatrix diag(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) diag(i, i) = orders[i];
  return cokernel_structure(diag);
}

Integer AbelianStructure::order() const {
  if (free_rank_ > 0) return 0;
  Integer product = 1;
  for (const auto& d : torsion_) product *= d;
  return product;
}

bool AbelianStructure::exponent_divides(const Integer& n) const {
  if (free_rank_ > 0) return n == 0;
  return std::all_of(torsion_.begin(), torsion_.end(),
                     [&](const Integer& d) { return n % d == 0; });
}

std::string AbelianStructure::to_string() const {
  if (is_trivial()) return "0";
  std::vector<std::string> parts;
  if (free_rank_ == 1) parts.emplace_back("Z");
  if (free_rank_ > 1) parts.push_back("Z^" + std::to_string(free_rank_));
  for (const auto& d : torsion_) parts.push_back("Z_" + d.str());
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

AbelianStructure direct_sum(const AbelianStructure& a, const AbelianStructure& b) {
  std::vector<Integer> orders(a.free_rank() + b.free_rank(), Integer(0));
  orders.insert(orders.end(), a.torsion().begin(), a.torsion().end());
  orders.insert(orders.end(), b.torsion().begin(), b.torsion().end());
  return AbelianStructure::from_cyclic_orders(orders);
}

AbelianStructure cokernel_structure(const IntMatrix& relations) {
  const SmithForm snf = smith_normal_form(relations);
  std::vector<Integer> torsion;
  std::size_t rank = 0;
  const std::size_t limit = std::min(relations.rows(), relations.cols());
  for (std::size_t i = 0; i < limit; ++i) {
    const Integer& d = snf.diagonal(i, i);
    if (d == 0) continue;
    ++rank;
    if (d != 1) torsion.push_back(d);
  }
  // The chain d_1 | d_2 | ... already orders the factors.
  AbelianStructure out;
  out.free_rank_ = relations.cols() - rank;
  out.torsion_ = std::move(torsion);
  return out;
}

AbelianStructure tensor_with_zp(const AbelianStructure& a, const Integer& p) {
  if (p < 1) throw InputError("tensor_with_zp requires p >= 1");
  std::vector<Integer> orders(a.free_rank(), p);
  for (const auto& d : a.torsion()) orders.push_back(gcd(d, p));
  return AbelianStructure::from_cyclic_orders(orders);
}

AbelianStructure cyclic_homology(const Integer& n, unsigned degree) {
  if (n < 1) throw InputError("cyclic_homology requires n >= 1");
  if (degree == 0) return AbelianStructure::free(1);
  if (degree % 2 == 1) return AbelianStructure::cyclic(n);
  return AbelianStructure::trivial();
}

// ---------------------------------------------------------------------------
// Spectral sequence bookkeeping

E2Table::E2Table(std::int64_t m, std::int64_t n, std::int64_t p, unsigned s_max,
                 unsigned t_max)
    : m_(m), n_(n), p_(p), s_max_(s_max), t_max_(t_max) {
  entries_.reserve(static_cast<std::size_t>(s_max + 1) * (t_max + 1));
  for (unsigned s = 0; s <= s_max; ++s)
    for (unsigned t = 0; t <= t_max; ++t) {
      if (s == 0 && t == 0)
        entries_.push_back(AbelianStructure::free(1));
      else if (s == 0 && t % 2 == 1)
        entries_.push_back(AbelianStructure::cyclic(Integer(m) * n));
      else if (t == 0 && s % 2 == 1)
        entries_.push_back(AbelianStructure::cyclic(p));
      else
        entries_.push_back(AbelianStructure::trivial());
    }
}

const AbelianStructure& E2Table::at(unsigned s, unsigned t) const {
  if (s > s_max_ || t > t_max_) throw InputError("E2 entry outside the computed range");
  return entries_[static_cast<std::size_t>(s) * (t_max_ + 1) + t];
}

AbelianStructure E2Table::total(unsigned k) const {
  if (k > std::min(s_max_, t_max_))
    throw InputError("anti-diagonal " + std::to_string(k) + " is not fully tabulated");
  AbelianStructure sum;
  for (unsigned s = 0; s <= k; ++s) sum = direct_sum(sum, at(s, k - s));
  return sum;
}

E2Table lhs_e2_table(std::int64_t m, std::int64_t n, std::int64_t p, unsigned s_max,
                     unsigned t_max) {
  if (m < 2 || n < 2 || p < 2) throw InputError("E2 table requires m, n, p >= 2");
  if (std::gcd(m * n, p) != 1)
    throw InputError("E2 table formula requires gcd(mn, p) = 1, got gcd(" +
                     std::to_string(m * n) + ", " + std::to_string(p) + ") = " +
                     std::to_string(std::gcd(m * n, p)));
  E2Table table(m, n, p, s_max, t_max);
  const Integer order = Integer(m) * n * p;
  for (unsigned k = 0; k <= std::min(s_max, t_max); ++k)
    if (table.total(k) != cyclic_homology(order, k))
      throw CertificationFailure("E2 anti-diagonal " + std::to_string(k) +
                                 " does not reassemble H_k(Z_" + order.str() + ")");
  return table;
}

FiveTermResult five_term_from_multiplication(const Integer& d) {
  if (d == 0) return {AbelianStructure::free(1), AbelianStructure::free(1)};
  return {AbelianStructure::trivial(), AbelianStructure::cyclic(abs(d))};
}

}  // namespace cpg
