#include "cpg/fp.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <limits>
#include <map>
#include <unordered_map>
#include <utility>

#include "cpg/errors.hpp"

namespace cpg {

namespace {

constexpr std::uint64_t kMaxLetters = 10000000;

bool valid_name(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

// ---------------------------------------------------------------- Word

Word::Word(std::vector<Syllable> syllables) : syllables_(std::move(syllables)) { reduce(); }

Word Word::generator(std::size_t g, std::int64_t exponent) {
  return Word({Syllable{g, exponent}});
}

void Word::reduce() {
  std::vector<Syllable> out;
  out.reserve(syllables_.size());
  for (const auto& s : syllables_) {
    if (s.exponent == 0) continue;
    if (!out.empty() && out.back().generator == s.generator) {
      out.back().exponent += s.exponent;
      if (out.back().exponent == 0) out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  syllables_ = std::move(out);
}

std::uint64_t Word::length() const {
  std::uint64_t n = 0;
  for (const auto& s : syllables_) n += static_cast<std::uint64_t>(std::llabs(s.exponent));
  return n;
}

std::int64_t Word::exponent_sum(std::size_t generator) const {
  std::int64_t sum = 0;
  for (const auto& s : syllables_)
    if (s.generator == generator) sum += s.exponent;
  return sum;
}

std::size_t Word::generator_bound() const {
  std::size_t bound = 0;
  for (const auto& s : syllables_) bound = std::max(bound, s.generator + 1);
  return bound;
}

Word Word::inverse() const {
  std::vector<Syllable> out(syllables_.rbegin(), syllables_.rend());
  for (auto& s : out) s.exponent = -s.exponent;
  return Word(std::move(out));
}

Word Word::pow(std::int64_t exponent) const {
  Word base = exponent < 0 ? inverse() : *this;
  std::uint64_t k = exponent < 0 ? static_cast<std::uint64_t>(-exponent) : exponent;
  if (k != 0 && base.length() * k > kMaxLetters) throw InputError("word power too long");
  std::vector<Syllable> out;
  for (std::uint64_t i = 0; i < k; ++i)
    out.insert(out.end(), base.syllables_.begin(), base.syllables_.end());
  return Word(std::move(out));
}

Word Word::cyclically_reduced() const {
  std::vector<Syllable> s = syllables_;
  std::size_t lo = 0;
  while (s.size() - lo >= 2 && s[lo].generator == s.back().generator) {
    std::int64_t e = s[lo].exponent + s.back().exponent;
    s.pop_back();
    if (e == 0) {
      ++lo;
    } else {
      s[lo].exponent = e;
      break;
    }
  }
  return Word(std::vector<Syllable>(s.begin() + static_cast<std::ptrdiff_t>(lo), s.end()));
}

std::vector<std::uint32_t> Word::letters() const {
  if (length() > kMaxLetters) throw InputError("word too long to trace");
  std::vector<std::uint32_t> out;
  out.reserve(length());
  for (const auto& s : syllables_) {
    auto letter = static_cast<std::uint32_t>(2 * s.generator + (s.exponent < 0 ? 1 : 0));
    for (std::int64_t i = 0; i < std::llabs(s.exponent); ++i) out.push_back(letter);
  }
  return out;
}

std::string Word::to_string(const std::vector<std::string>& names) const {
  if (syllables_.empty()) return "1";
  std::string out;
  for (const auto& s : syllables_) {
    if (!out.empty()) out += ' ';
    out += s.generator < names.size() ? names[s.generator] : "x" + std::to_string(s.generator);
    if (s.exponent != 1) out += "^" + std::to_string(s.exponent);
  }
  return out;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Syllable> s = a.syllables_;
  s.insert(s.end(), b.syllables_.begin(), b.syllables_.end());
  return Word(std::move(s));
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>* names)
      : text_(text), names_(names) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_])))
      fail("expected generator name");
    while (pos_ < text_.size() && name_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::int64_t integer() {
    skip_ws();
    std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
      skip_ws();
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      pos_ = start;
      fail("expected integer exponent");
    }
    std::int64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (value > (std::numeric_limits<std::int64_t>::max() - 9) / 10) {
        pos_ = start;
        fail("exponent out of range");
      }
      value = value * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return negative ? -value : value;
  }

  std::optional<std::int64_t> exponent() {
    if (peek() != '^') return std::nullopt;
    ++pos_;
    if (peek() == '(') {
      ++pos_;
      std::int64_t e = integer();
      expect(')');
      return e;
    }
    return integer();
  }

  // Splits a run of name characters into declared generator names.
  std::vector<std::size_t> split_run(std::size_t start, std::size_t end) {
    std::vector<std::size_t> gens;
    std::size_t i = start;
    while (i < end) {
      std::size_t best_len = 0, best = 0;
      for (std::size_t g = 0; g < names_->size(); ++g) {
        const std::string& n = (*names_)[g];
        if (n.size() > best_len && n.size() <= end - i && text_.compare(i, n.size(), n) == 0) {
          best_len = n.size();
          best = g;
        }
      }
      if (best_len == 0) {
        std::size_t stop = i;
        while (stop < end && name_char(text_[stop])) ++stop;
        throw ParseError("unknown generator '" + std::string(text_.substr(i, stop - i)) + "'", i);
      }
      gens.push_back(best);
      i += best_len;
    }
    return gens;
  }

  static bool word_terminator(char c) {
    return c == '\0' || c == ',' || c == '=' || c == '>' || c == ')' || c == '|';
  }

  Word word() {
    std::vector<Syllable> out;
    bool any = false;
    while (!word_terminator(peek())) {
      char c = peek();
      if (c == '*' || c == '.') {
        if (!any) fail("expected word");
        ++pos_;
        continue;
      }
      Word factor;
      if (c == '(') {
        ++pos_;
        factor = word();
        expect(')');
        if (auto e = exponent()) factor = factor.pow(*e);
      } else if (c == '1' && (pos_ + 1 >= text_.size() || !name_char(text_[pos_ + 1]))) {
        ++pos_;
        if (auto e = exponent()) (void)e;
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        std::size_t start = pos_;
        while (pos_ < text_.size() && name_char(text_[pos_])) ++pos_;
        auto gens = split_run(start, pos_);
        std::int64_t last = exponent().value_or(1);
        for (std::size_t i = 0; i < gens.size(); ++i)
          out.push_back(Syllable{gens[i], i + 1 == gens.size() ? last : 1});
        any = true;
        continue;
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      out.insert(out.end(), factor.syllables().begin(), factor.syllables().end());
      any = true;
    }
    if (!any) fail("expected word");
    return Word(std::move(out));
  }

  Word relation() {
    Word left = word();
    if (peek() == '=') {
      ++pos_;
      Word right = word();
      return left * right.inverse();
    }
    return left;
  }

  std::vector<Word> relation_list(char terminator) {
    std::vector<Word> out;
    if (peek() == terminator) return out;
    out.push_back(relation());
    while (peek() == ',') {
      ++pos_;
      out.push_back(relation());
    }
    return out;
  }

  void set_names(const std::vector<std::string>* names) { names_ = names; }
  std::size_t position() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  const std::vector<std::string>* names_;
};

}  // namespace

FpPresentation::FpPresentation(std::vector<std::string> names, std::vector<Word> relators)
    : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!valid_name(names_[i])) throw InputError("invalid generator name '" + names_[i] + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j]) throw InputError("duplicate generator name '" + names_[i] + "'");
  }
  for (auto& r : relators) {
    if (r.generator_bound() > names_.size()) throw InputError("relator uses an undeclared generator");
    if (!r.empty()) relators_.push_back(std::move(r));
  }
}

std::optional<std::size_t> FpPresentation::find_generator(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

Word FpPresentation::parse_word(std::string_view text) const {
  Parser parser(text, &names_);
  Word w = parser.relation();
  if (!parser.at_end()) parser.fail("trailing characters");
  return w;
}

std::vector<Word> FpPresentation::parse_word_list(std::string_view text) const {
  Parser parser(text, &names_);
  if (parser.at_end()) return {};
  auto words = parser.relation_list('\0');
  if (!parser.at_end()) parser.fail("trailing characters");
  return words;
}

std::string FpPresentation::to_string() const {
  std::string out = "< ";
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (i) out += ", ";
    out += names_[i];
  }
  out += names_.empty() ? "|" : " |";
  for (std::size_t i = 0; i < relators_.size(); ++i) {
    out += i ? ", " : " ";
    out += relators_[i].to_string(names_);
  }
  out += " >";
  return out;
}

FpPresentation parse_presentation(std::string_view text) {
  std::vector<std::string> names;
  Parser parser(text, &names);
  parser.expect('<');
  if (parser.peek() != '|') {
    names.push_back(parser.identifier());
    while (parser.peek() == ',') {
      parser.expect(',');
      names.push_back(parser.identifier());
    }
  }
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (names[i] == names[j]) throw InputError("duplicate generator name '" + names[i] + "'");
  parser.expect('|');
  auto relators = parser.relation_list('>');
  parser.expect('>');
  if (!parser.at_end()) parser.fail("trailing characters");
  return FpPresentation(std::move(names), std::move(relators));
}

// ---------------------------------------------------------------- coset tables

CosetTable::CosetTable(FpPresentation presentation, std::vector<Word> subgroup,
                       std::vector<std::vector<std::uint32_t>> rows)
    : presentation_(std::move(presentation)), subgroup_(std::move(subgroup)), rows_(std::move(rows)) {
  const std::size_t letters = 2 * presentation_.generator_count();
  if (rows_.empty()) throw InputError("coset table needs at least one coset");
  for (const auto& row : rows_) {
    if (row.size() != letters) throw InputError("coset table row has the wrong width");
    for (auto c : row)
      if (c >= rows_.size()) throw InputError("coset table entry out of range");
  }
}

std::uint32_t CosetTable::trace(std::uint32_t coset, const Word& w) const {
  for (const auto& s : w.syllables()) {
    auto letter = static_cast<std::uint32_t>(2 * s.generator + (s.exponent < 0 ? 1 : 0));
    for (std::int64_t i = 0; i < std::llabs(s.exponent); ++i) coset = rows_[coset][letter];
  }
  return coset;
}

std::vector<Perm> CosetTable::generator_permutations() const {
  if (index() > kMaxPermDegree) throw BudgetExhausted("coset table too large for permutations");
  std::vector<Perm> out;
  for (std::size_t g = 0; g < presentation_.generator_count(); ++g) {
    std::vector<Point> images(index());
    for (std::size_t c = 0; c < index(); ++c) images[c] = static_cast<Point>(rows_[c][2 * g]);
    out.emplace_back(std::move(images));
  }
  return out;
}

bool CosetTable::is_valid() const {
  const std::size_t letters = 2 * presentation_.generator_count();
  for (std::uint32_t c = 0; c < index(); ++c)
    for (std::uint32_t x = 0; x < letters; ++x)
      if (rows_[rows_[c][x]][x ^ 1u] != c) return false;
  for (const auto& r : presentation_.relators())
    for (std::uint32_t c = 0; c < index(); ++c)
      if (trace(c, r) != c) return false;
  for (const auto& h : subgroup_)
    if (trace(0, h) != 0) return false;
  // Standard numbering: scanning in order meets new cosets in order.
  std::uint32_t next = 1;
  for (std::uint32_t c = 0; c < index() && next < index(); ++c) {
    if (c >= next) return false;
    for (std::uint32_t x = 0; x < letters; ++x) {
      auto d = rows_[c][x];
      if (d > next) return false;
      if (d == next) ++next;
    }
  }
  return next == index();
}

namespace {

struct SpanningTree {
  std::vector<Word> reps;
  // tree[c][g] is true when the positive edge c --g--> c g lies in the tree.
  std::vector<std::vector<bool>> tree;
};

SpanningTree spanning_tree(const CosetTable& t) {
  const std::size_t gens = t.presentation().generator_count();
  SpanningTree st;
  st.reps.assign(t.index(), Word());
  st.tree.assign(t.index(), std::vector<bool>(gens, false));
  std::vector<bool> seen(t.index(), false);
  seen[0] = true;
  std::vector<std::uint32_t> order{0};
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::uint32_t c = order[i];
    for (std::uint32_t x = 0; x < 2 * gens; ++x) {
      std::uint32_t d = t.act(c, x);
      if (seen[d]) continue;
      seen[d] = true;
      order.push_back(d);
      std::size_t g = x / 2;
      bool inverse = x & 1u;
      st.reps[d] = st.reps[c] * Word::generator(g, inverse ? -1 : 1);
      if (inverse)
        st.tree[d][g] = true;
      else
        st.tree[c][g] = true;
    }
  }
  if (order.size() != t.index()) throw CertificationFailure("coset table is not transitive");
  return st;
}

}  // namespace

std::vector<Word> CosetTable::coset_representatives() const { return spanning_tree(*this).reps; }

std::vector<Word> CosetTable::schreier_generators() const {
  auto st = spanning_tree(*this);
  std::vector<Word> out;
  for (std::uint32_t c = 0; c < index(); ++c)
    for (std::size_t g = 0; g < presentation_.generator_count(); ++g)
      if (!st.tree[c][g])
        out.push_back(st.reps[c] * Word::generator(g) * st.reps[act(c, 2 * g)].inverse());
  return out;
}

// ---------------------------------------------------------------- Todd-Coxeter

namespace {

class Felsch {
 public:
  Felsch(std::size_t letters, const std::vector<std::vector<std::uint32_t>>& relators,
         std::size_t max_cosets)
      : letters_(letters), max_cosets_(max_cosets), by_first_(letters) {
    // Every cyclic conjugate of every relator and its inverse, indexed by
    // first letter.
    for (const auto& r : relators) {
      std::vector<std::uint32_t> inv(r.rbegin(), r.rend());
      for (auto& x : inv) x ^= 1u;
      for (const std::vector<std::uint32_t>* w : {&r, static_cast<const std::vector<std::uint32_t>*>(&inv)}) {
        for (std::size_t k = 0; k < w->size(); ++k) {
          std::vector<std::uint32_t> rot(w->begin() + static_cast<std::ptrdiff_t>(k), w->end());
          rot.insert(rot.end(), w->begin(), w->begin() + static_cast<std::ptrdiff_t>(k));
          auto& bucket = by_first_[rot[0]];
          if (std::find(bucket.begin(), bucket.end(), rot) == bucket.end()) bucket.push_back(rot);
        }
      }
    }
    new_row();
  }

  bool exhausted() const { return exhausted_; }
  std::size_t defined() const { return parent_.size(); }

  bool scan_and_fill(std::uint32_t c, const std::vector<std::uint32_t>& w) {
    if (w.empty()) return true;
    std::uint32_t f = c, b = c;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    for (;;) {
      while (i <= j && at(f, w[i]) >= 0) f = static_cast<std::uint32_t>(at(f, w[i++]));
      if (i > j) {
        if (f != b) coincidence(f, b);
        return true;
      }
      while (j >= i && at(b, w[j] ^ 1u) >= 0) b = static_cast<std::uint32_t>(at(b, w[j--] ^ 1u));
      if (j < i) {
        coincidence(f, b);
        return true;
      }
      if (i == j) {
        deduce(f, w[i], b);
        return true;
      }
      if (!define(f, w[i])) return false;
    }
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      auto [c, x] = deductions_.back();
      deductions_.pop_back();
      if (!alive(c)) continue;
      for (const auto& w : by_first_[x]) {
        scan(c, w);
        if (!alive(c)) break;
      }
      if (!alive(c)) continue;
      std::int32_t d = at(c, x);
      if (d < 0) continue;
      auto dd = static_cast<std::uint32_t>(d);
      for (const auto& w : by_first_[x ^ 1u]) {
        scan(dd, w);
        if (!alive(dd)) break;
      }
    }
  }

  // Fills every hole in order; false when the coset budget runs out.
  bool complete() {
    for (std::uint32_t c = 0; c < parent_.size(); ++c) {
      for (std::uint32_t x = 0; x < letters_; ++x) {
        if (!alive(c)) break;
        if (at(c, x) >= 0) continue;
        if (!define(c, x)) return false;
        process_deductions();
      }
    }
    return true;
  }

  std::vector<std::vector<std::uint32_t>> standardized() const {
    std::vector<std::int64_t> number(parent_.size(), -1);
    std::vector<std::uint32_t> order{0};
    number[0] = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::uint32_t x = 0; x < letters_; ++x) {
        auto d = static_cast<std::uint32_t>(at(order[i], x));
        if (number[d] < 0) {
          number[d] = static_cast<std::int64_t>(order.size());
          order.push_back(d);
        }
      }
    std::vector<std::vector<std::uint32_t>> rows(order.size(), std::vector<std::uint32_t>(letters_));
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::uint32_t x = 0; x < letters_; ++x)
        rows[i][x] = static_cast<std::uint32_t>(number[static_cast<std::uint32_t>(at(order[i], x))]);
    return rows;
  }

 private:
  std::int32_t& at(std::uint32_t c, std::uint32_t x) { return table_[c * letters_ + x]; }
  std::int32_t at(std::uint32_t c, std::uint32_t x) const { return table_[c * letters_ + x]; }
  bool alive(std::uint32_t c) const { return parent_[c] == c; }

  void new_row() {
    parent_.push_back(static_cast<std::uint32_t>(parent_.size()));
    table_.resize(table_.size() + letters_, -1);
  }

  bool define(std::uint32_t c, std::uint32_t x) {
    if (parent_.size() >= max_cosets_ ||
        parent_.size() >= static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max())) {
      exhausted_ = true;
      return false;
    }
    auto d = static_cast<std::uint32_t>(parent_.size());
    new_row();
    at(c, x) = static_cast<std::int32_t>(d);
    at(d, x ^ 1u) = static_cast<std::int32_t>(c);
    deductions_.emplace_back(c, x);
    return true;
  }

  void deduce(std::uint32_t f, std::uint32_t x, std::uint32_t b) {
    at(f, x) = static_cast<std::int32_t>(b);
    at(b, x ^ 1u) = static_cast<std::int32_t>(f);
    deductions_.emplace_back(f, x);
  }

  void scan(std::uint32_t c, const std::vector<std::uint32_t>& w) {
    std::uint32_t f = c, b = c;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    while (i <= j && at(f, w[i]) >= 0) f = static_cast<std::uint32_t>(at(f, w[i++]));
    if (i > j) {
      if (f != b) coincidence(f, b);
      return;
    }
    while (j >= i && at(b, w[j] ^ 1u) >= 0) b = static_cast<std::uint32_t>(at(b, w[j--] ^ 1u));
    if (j < i)
      coincidence(f, b);
    else if (i == j)
      deduce(f, w[i], b);
  }

  std::uint32_t rep(std::uint32_t c) {
    std::uint32_t r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      std::uint32_t next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(std::uint32_t k, std::uint32_t l, std::vector<std::uint32_t>& queue) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    parent_[l] = k;
    queue.push_back(l);
  }

  void coincidence(std::uint32_t a, std::uint32_t b) {
    std::vector<std::uint32_t> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      std::uint32_t e = queue[i];
      for (std::uint32_t x = 0; x < letters_; ++x) {
        std::int32_t fi = at(e, x);
        if (fi < 0) continue;
        auto f = static_cast<std::uint32_t>(fi);
        at(f, x ^ 1u) = -1;
        std::uint32_t e1 = rep(e), f1 = rep(f);
        if (at(e1, x) >= 0) {
          merge(f1, static_cast<std::uint32_t>(at(e1, x)), queue);
        } else if (at(f1, x ^ 1u) >= 0) {
          merge(e1, static_cast<std::uint32_t>(at(f1, x ^ 1u)), queue);
        } else {
          at(e1, x) = static_cast<std::int32_t>(f1);
          at(f1, x ^ 1u) = static_cast<std::int32_t>(e1);
          deductions_.emplace_back(e1, x);
        }
      }
    }
  }

  std::size_t letters_;
  std::size_t max_cosets_;
  bool exhausted_ = false;
  std::vector<std::vector<std::vector<std::uint32_t>>> by_first_;
  std::vector<std::int32_t> table_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> deductions_;
};

}  // namespace

EnumerationResult todd_coxeter(const FpPresentation& presentation, const std::vector<Word>& subgroup,
                               std::size_t max_cosets) {
  if (max_cosets < 1) throw InputError("max_cosets must be at least 1");
  for (const auto& h : subgroup)
    if (h.generator_bound() > presentation.generator_count())
      throw InputError("subgroup word uses an undeclared generator");
  std::vector<std::vector<std::uint32_t>> relators;
  for (const auto& r : presentation.relators()) {
    auto letters = r.cyclically_reduced().letters();
    if (!letters.empty()) relators.push_back(std::move(letters));
  }
  Felsch enumerator(2 * presentation.generator_count(), relators, max_cosets);
  EnumerationResult result{EnumerationStatus::kBudgetExhausted, std::nullopt, 0};
  for (const auto& h : subgroup) {
    if (!enumerator.scan_and_fill(0, h.letters())) {
      result.cosets_defined = enumerator.defined();
      return result;
    }
    enumerator.process_deductions();
  }
  if (!enumerator.complete()) {
    result.cosets_defined = enumerator.defined();
    return result;
  }
  result.cosets_defined = enumerator.defined();
  CosetTable table(presentation, subgroup, enumerator.standardized());
  if (!table.is_valid()) throw CertificationFailure("coset enumeration produced an invalid table");
  result.status = EnumerationStatus::kClosed;
  result.table = std::move(table);
  return result;
}

// ---------------------------------------------------------------- homomorphisms

Perm evaluate(const Word& w, const std::vector<Perm>& images, std::size_t degree) {
  Perm out(degree);
  for (const auto& s : w.syllables()) {
    if (s.generator >= images.size()) throw InputError("word uses a generator without an image");
    out = out * images[s.generator].pow(s.exponent);
  }
  return out;
}

namespace {

std::size_t check_images(const FpPresentation& p, const std::vector<Perm>& images) {
  if (images.size() != p.generator_count())
    throw InputError("expected " + std::to_string(p.generator_count()) + " generator images, got " +
                     std::to_string(images.size()));
  std::size_t degree = images.empty() ? 0 : images[0].degree();
  for (const auto& g : images)
    if (g.degree() != degree) throw InputError("generator images have different degrees");
  return degree;
}

}  // namespace

bool verify_hom(const FpPresentation& presentation, const std::vector<Perm>& images) {
  std::size_t degree = check_images(presentation, images);
  for (const auto& r : presentation.relators())
    if (!evaluate(r, images, degree).is_identity()) return false;
  return true;
}

CosetTable coset_table_from_action(
    const FpPresentation& presentation, const std::vector<std::int64_t>& start,
    const std::function<std::vector<std::int64_t>(const std::vector<std::int64_t>&, std::size_t,
                                                  bool inverse)>& act,
    std::size_t max_index) {
  const std::size_t gens = presentation.generator_count();
  std::map<std::vector<std::int64_t>, std::uint32_t> id;
  std::vector<std::vector<std::int64_t>> states{start};
  id.emplace(start, 0);
  std::vector<std::vector<std::uint32_t>> rows;
  for (std::size_t i = 0; i < states.size(); ++i) {
    std::vector<std::uint32_t> row(2 * gens);
    for (std::size_t x = 0; x < 2 * gens; ++x) {
      auto next = act(states[i], x / 2, x & 1u);
      auto [it, inserted] = id.emplace(next, static_cast<std::uint32_t>(states.size()));
      if (inserted) {
        if (states.size() >= max_index)
          throw BudgetExhausted("action has more than " + std::to_string(max_index) + " points");
        states.push_back(std::move(next));
      }
      row[x] = it->second;
    }
    rows.push_back(std::move(row));
  }
  CosetTable provisional(presentation, {}, rows);
  CosetTable table(presentation, provisional.schreier_generators(), std::move(rows));
  if (!table.is_valid()) throw CertificationFailure("action does not define a coset table");
  return table;
}

CosetTable kernel_coset_table(const FpPresentation& presentation, const std::vector<Perm>& images,
                              std::size_t max_index) {
  std::size_t degree = check_images(presentation, images);
  if (!verify_hom(presentation, images)) {
    for (const auto& r : presentation.relators())
      if (!evaluate(r, images, degree).is_identity())
        throw PreconditionError("images do not define a homomorphism",
                                r.to_string(presentation.generator_names()));
  }
  std::vector<Perm> inverses;
  for (const auto& g : images) inverses.push_back(g.inverse());
  auto to_state = [](const Perm& p) {
    return std::vector<std::int64_t>(p.images().begin(), p.images().end());
  };
  auto act = [&](const std::vector<std::int64_t>& s, std::size_t g, bool inverse) {
    std::vector<Point> pts(s.begin(), s.end());
    return to_state(Perm(std::move(pts)) * (inverse ? inverses[g] : images[g]));
  };
  return coset_table_from_action(presentation, to_state(Perm(degree)), act, max_index);
}

// ---------------------------------------------------------------- Reidemeister-Schreier

SubgroupPresentation reidemeister_schreier(const CosetTable& table) {
  const FpPresentation& parent = table.presentation();
  const std::size_t gens = parent.generator_count();
  auto st = spanning_tree(table);

  std::vector<std::vector<std::int64_t>> symbol(table.index(), std::vector<std::int64_t>(gens, -1));
  std::vector<std::string> names;
  std::vector<Word> words;
  for (std::uint32_t c = 0; c < table.index(); ++c)
    for (std::size_t g = 0; g < gens; ++g)
      if (!st.tree[c][g]) {
        symbol[c][g] = static_cast<std::int64_t>(names.size());
        names.push_back(parent.generator_names()[g] + "_" + std::to_string(c + 1));
        words.push_back(st.reps[c] * Word::generator(g) *
                        st.reps[table.act(c, static_cast<std::uint32_t>(2 * g))].inverse());
      }

  std::vector<Word> relators;
  for (const auto& r : parent.relators()) {
    auto letters = r.letters();
    for (std::uint32_t c = 0; c < table.index(); ++c) {
      std::vector<Syllable> out;
      std::uint32_t cur = c;
      for (auto x : letters) {
        std::size_t g = x / 2;
        if ((x & 1u) == 0) {
          if (symbol[cur][g] >= 0) out.push_back({static_cast<std::size_t>(symbol[cur][g]), 1});
          cur = table.act(cur, x);
        } else {
          std::uint32_t f = table.act(cur, x);
          if (symbol[f][g] >= 0) out.push_back({static_cast<std::size_t>(symbol[f][g]), -1});
          cur = f;
        }
      }
      if (cur != c) throw CertificationFailure("relator does not close in coset table");
      relators.emplace_back(std::move(out));
    }
  }

  SubgroupPresentation result;
  result.schreier_generator_count = names.size();
  result.rewritten_relator_count = relators.size();

  // Drop relators of length <= 1 together with the generators they kill.
  std::vector<bool> killed(names.size(), false);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < relators.size(); ++i) {
      if (relators[i].length() != 1) continue;
      std::size_t dead = relators[i].syllables()[0].generator;
      killed[dead] = true;
      for (auto& w : relators) {
        std::vector<Syllable> kept;
        for (const auto& s : w.syllables())
          if (s.generator != dead) kept.push_back(s);
        w = Word(std::move(kept));
      }
      changed = true;
      break;
    }
  }

  std::vector<std::size_t> renumber(names.size());
  std::vector<std::string> kept_names;
  for (std::size_t s = 0; s < names.size(); ++s) {
    if (killed[s]) continue;
    renumber[s] = kept_names.size();
    kept_names.push_back(names[s]);
    result.generator_words.push_back(words[s]);
  }
  std::vector<Word> kept_relators;
  for (const auto& w : relators) {
    if (w.empty()) continue;
    std::vector<Syllable> out;
    for (const auto& s : w.syllables()) out.push_back({renumber[s.generator], s.exponent});
    kept_relators.emplace_back(std::move(out));
  }
  result.presentation = FpPresentation(std::move(kept_names), std::move(kept_relators));
  return result;
}

// ---------------------------------------------------------------- abelianization

IntMatrix relation_matrix(const FpPresentation& presentation) {
  IntMatrix m(presentation.relators().size(), presentation.generator_count());
  for (std::size_t r = 0; r < presentation.relators().size(); ++r)
    for (const auto& s : presentation.relators()[r].syllables()) m(r, s.generator) += s.exponent;
  return m;
}

AbelianStructure abelianization(const FpPresentation& presentation) {
  return cokernel_structure(relation_matrix(presentation));
}

}  // namespace cpg
