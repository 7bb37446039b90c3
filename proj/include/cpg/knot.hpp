#pragma once

// Knot groups and the lens-space preimage questions built on C^p.

#include <cstdint>
#include <string>
#include <vector>

#include "cpg/cp.hpp"
#include "cpg/fp.hpp"
#include "cpg/homalg.hpp"

namespace cpg {

/// Torus knot parameters with gcd(m, n) = 1 and |m|, |n| >= 2, stored with
/// |m| >= |n|.
struct TorusKnotParams {
  std::int64_t m;
  std::int64_t n;
  /// Validates and orders the pair; throws InputError.
  static TorusKnotParams normalized(std::int64_t m, std::int64_t n);
};

/// `< a, b | a^m = b^n >` for the normalized parameters.
FpPresentation torus_knot_group(std::int64_t m, std::int64_t n);

/// gcd(mn, p) = 1. Signs of m, n and p are ignored.
bool torus_preimage_exists(std::int64_t m, std::int64_t n, std::int64_t p);

struct LensSurgeryAnswer {
  bool exists = false;
  Integer m, n, p;
  Integer p_star;     // p^-1 mod |n|
  Integer q;          // in [1, p-1]
  Integer q_inverse;  // q^-1 mod p, the other admissible class
  Integer m_minus_nq;
  bool p_divides_m_minus_nq = false;
  bool q_coprime_to_p = false;
};

/// q = m (1 - p p*) / n mod p with p p* = 1 mod n. Throws InputError unless
/// |m|, |n| >= 2, p >= 2 and gcd(m, n) = 1.
LensSurgeryAnswer chbili_q(const Integer& m, const Integer& n, const Integer& p);

/// Number of components of the preimage of a knot whose class in Z_p is c:
/// p / ord(c) = gcd(c, p).
Integer preimage_component_count(const Integer& p, const Integer& c);

struct ObstructionStep {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct TrefoilObstruction {
  Integer p;
  std::vector<ObstructionStep> steps;
  std::size_t kernel_index = 0;
  std::size_t schreier_generator_count = 0;
  std::vector<std::string> schreier_generators;
  CpVerdict s3_verdict;
  bool obstructed = false;
  std::vector<std::string> assumptions;
};

/// Certifies that G(T_{3,2}) is not a C^p-group for even p: the map
/// a -> (1 2 3), b -> (1 2) onto S3 has a kernel fixed by the automorphism
/// a -> a^-1, b -> b^-1, and S3 is not a C^p-group.
TrefoilObstruction trefoil_even_obstruction(const Integer& p);

struct OutObstructionLevel {
  Integer p;
  AbelianStructure quotient;  // G / C^p(G)
  bool obstructed = false;
};

struct OutObstruction {
  AbelianStructure abelianization;
  std::vector<OutObstructionLevel> levels;
  std::vector<std::string> assumptions;
};

/// For a knot group asserted to have trivial outer automorphism group:
/// G^ab = Z forces G/C^p(G) = Z_p for each p in [2, p_max], which rules the
/// knot out as a preimage. The assertion is mandatory and is refused for
/// torus knot presentations, whose outer automorphism group has order 2.
OutObstruction complete_group_obstruction(const FpPresentation& presentation,
                                          bool assert_out_trivial, const Integer& p_max);

}  // namespace cpg
