#include "cpg/knot.hpp"

#include <numeric>

#include "cpg/errors.hpp"
#include "cpg/perm.hpp"

namespace cpg {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

Integer mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  return r < 0 ? r + m : r;
}

// Inverse of a modulo m (m >= 1, gcd(a, m) = 1).
Integer inverse_mod(const Integer& a, const Integer& m) {
  if (m == 1) return 0;
  Integer r0 = m, r1 = mod(a, m), t0 = 0, t1 = 1;
  while (r1 != 0) {
    Integer q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    t0 -= q * t1;
    std::swap(t0, t1);
  }
  if (r0 != 1) throw InputError(a.str() + " is not invertible modulo " + m.str());
  return mod(t0, m);
}

bool is_cyclic_rotation(std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a == b) return true;
    std::rotate(a.begin(), a.begin() + 1, a.end());
  }
  return a.empty();
}

std::vector<std::uint32_t> inverse_letters(const Word& w) { return w.inverse().letters(); }

Word negate_exponents(const Word& w) {
  std::vector<Syllable> s = w.syllables();
  for (auto& x : s) x.exponent = -x.exponent;
  return Word(std::move(s));
}

// Recognizes a single relator a^m b^-n (up to cyclic order and inversion)
// on two generators with gcd(m, n) = 1 and |m|, |n| >= 2.
bool is_torus_form(const FpPresentation& p) {
  if (p.generator_count() != 2 || p.relators().size() != 1) return false;
  const Word reduced = p.relators()[0].cyclically_reduced();
  const auto& s = reduced.syllables();
  if (s.size() != 2 || s[0].generator == s[1].generator) return false;
  std::int64_t m = std::llabs(s[0].exponent), n = std::llabs(s[1].exponent);
  return m >= 2 && n >= 2 && std::gcd(m, n) == 1;
}

}  // namespace

TorusKnotParams TorusKnotParams::normalized(std::int64_t m, std::int64_t n) {
  if (std::llabs(m) < 2 || std::llabs(n) < 2)
    throw InputError("torus knot parameters need |m|, |n| >= 2");
  if (std::gcd(m, n) != 1)
    throw InputError("torus knot parameters must be coprime, got gcd(" + std::to_string(m) + ", " +
                     std::to_string(n) + ") = " + std::to_string(std::gcd(m, n)));
  if (std::llabs(m) < std::llabs(n)) std::swap(m, n);
  return {m, n};
}

FpPresentation torus_knot_group(std::int64_t m, std::int64_t n) {
  auto t = TorusKnotParams::normalized(m, n);
  return FpPresentation({"a", "b"}, {Word({{0, t.m}, {1, -t.n}})});
}

bool torus_preimage_exists(std::int64_t m, std::int64_t n, std::int64_t p) {
  TorusKnotParams::normalized(m, n);
  if (std::llabs(p) < 2) throw InputError("p must satisfy |p| >= 2");
  Integer mn = abs(Integer(m) * n);
  return gcd(mn, abs(Integer(p))) == 1;
}

LensSurgeryAnswer chbili_q(const Integer& m, const Integer& n, const Integer& p) {
  if (abs(m) < 2 || abs(n) < 2) throw InputError("chbili-q needs |m|, |n| >= 2");
  if (p < 2) throw InputError("chbili-q needs p >= 2");
  if (gcd(abs(m), abs(n)) != 1) throw InputError("m and n must be coprime");
  LensSurgeryAnswer a;
  a.m = m;
  a.n = n;
  a.p = p;
  if (gcd(abs(m * n), p) != 1) return a;
  a.exists = true;
  a.p_star = inverse_mod(p, abs(n));
  Integer numerator = m * (1 - p * a.p_star);
  if (numerator % n != 0) throw CertificationFailure("n does not divide m(1 - p p*)");
  a.q = mod(numerator / n, p);
  a.q_inverse = inverse_mod(a.q, p);
  a.m_minus_nq = m - n * a.q;
  a.p_divides_m_minus_nq = a.m_minus_nq % p == 0;
  a.q_coprime_to_p = gcd(a.q, p) == 1;
  if (!a.p_divides_m_minus_nq || !a.q_coprime_to_p || a.q < 1 || a.q >= p)
    throw CertificationFailure("q certificate failed for (" + m.str() + ", " + n.str() + ", " +
                               p.str() + ")");
  return a;
}

Integer preimage_component_count(const Integer& p, const Integer& c) {
  if (p < 1) throw InputError("p must be at least 1");
  Integer r = mod(c, p);
  return r == 0 ? p : Integer(gcd(r, p));
}

TrefoilObstruction trefoil_even_obstruction(const Integer& p) {
  if (p < 2 || p % 2 != 0) throw InputError("the trefoil obstruction needs an even p >= 2, got " + p.str());
  TrefoilObstruction r;
  r.p = p;
  const FpPresentation g = torus_knot_group(3, 2);
  const std::vector<Perm> phi{Perm::parse("(1 2 3)", 3), Perm::parse("(1 2)", 3)};

  auto fail = [&](const std::string& what) {
    throw CertificationFailure("trefoil obstruction step failed: " + what);
  };

  // 1. phi is a homomorphism onto S3.
  bool hom = verify_hom(g, phi);
  Integer image_order = PermGroup(3, phi).order();
  r.steps.push_back({"homomorphism", hom && image_order == 6,
                     "a -> (1 2 3), b -> (1 2); image order " + image_order.str()});
  if (!r.steps.back().passed) fail("phi is not a surjection onto S3");

  // 2. The kernel has index 6.
  CosetTable table = kernel_coset_table(g, phi);
  r.kernel_index = table.index();
  r.schreier_generator_count = table.subgroup_generators().size();
  for (const auto& s : table.subgroup_generators())
    r.schreier_generators.push_back(s.to_string(g.generator_names()));
  r.steps.push_back({"kernel", r.kernel_index == 6,
                     "index " + std::to_string(r.kernel_index) + ", " +
                         std::to_string(r.schreier_generator_count) + " Schreier generators"});
  if (!r.steps.back().passed) fail("kernel index is not 6");

  // 3. theta(a) = a^-1, theta(b) = b^-1 is an automorphism preserving the
  // kernel: it maps the relator to a cyclic conjugate of its inverse, and
  // phi(theta(s)) = 1 for every Schreier generator s.
  bool theta_ok = true;
  for (const auto& rel : g.relators()) {
    auto image = negate_exponents(rel).cyclically_reduced().letters();
    theta_ok = theta_ok && (is_cyclic_rotation(image, inverse_letters(rel.cyclically_reduced())) ||
                            is_cyclic_rotation(image, rel.cyclically_reduced().letters()));
  }
  std::size_t fixed = 0;
  for (const auto& s : table.subgroup_generators())
    if (evaluate(negate_exponents(s), phi, 3).is_identity()) ++fixed;
  r.steps.push_back({"characteristic", theta_ok && fixed == r.schreier_generator_count,
                     std::to_string(fixed) + "/" + std::to_string(r.schreier_generator_count) +
                         " Schreier generators map into the kernel under theta"});
  if (!r.steps.back().passed) fail("theta does not preserve the kernel");

  // 4. S3 is not a C^p-group.
  r.s3_verdict = cp_group_verdict(symmetric_group(3), p);
  r.steps.push_back({"s3-verdict", r.s3_verdict.status == CpStatus::kNotCpGroup,
                     to_string(r.s3_verdict.status) + " / " + to_string(r.s3_verdict.reason)});
  if (!r.steps.back().passed) fail("S3 verdict is not NOT_CP_GROUP");

  r.obstructed = true;
  r.assumptions.push_back(
      "theta generates Out(G(T_3,2)) = Z_2, so a kernel fixed by theta is characteristic");
  return r;
}

OutObstruction complete_group_obstruction(const FpPresentation& presentation,
                                          bool assert_out_trivial, const Integer& p_max) {
  if (is_torus_form(presentation))
    throw InputError(
        "refusing the Out(G) = 1 assumption: torus knot groups have Out(G(T_m,n)) = Z_2");
  if (!assert_out_trivial)
    throw InputError("this obstruction needs the caller to assert Out(G) = 1");
  if (p_max < 2) throw InputError("p_max must be at least 2");
  OutObstruction r;
  r.abelianization = abelianization(presentation);
  if (!(r.abelianization == AbelianStructure::free(1)))
    throw InputError("abelianization is " + r.abelianization.to_string() +
                     ", not Z; this is not a knot group presentation");
  for (Integer p = 2; p <= p_max; ++p) {
    OutObstructionLevel level;
    level.p = p;
    level.quotient = cp_quotient_fp(presentation, p);
    level.obstructed = level.quotient == AbelianStructure::cyclic(p);
    r.levels.push_back(std::move(level));
  }
  r.assumptions.push_back("Out(G) = 1 (asserted by the caller, not checked)");
  return r;
}

}  // namespace cpg
