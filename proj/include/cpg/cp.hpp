#pragma once

// The subgroup C^p(G) generated by all commutators and all p-th powers,
// equivalently the kernel of G -> G^ab / p G^ab.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cpg/automorphism.hpp"
#include "cpg/fp.hpp"
#include "cpg/homalg.hpp"
#include "cpg/perm.hpp"

namespace cpg {

/// <[G,G], g_i^p> over the generators g_i. Throws InputError for p < 1.
PermGroup cp_subgroup(const PermGroup& g, const Integer& p);

/// Invariant factors of G^ab, read off the relation lattice of G/[G,G].
AbelianStructure abelian_invariants(const PermGroup& g, const PermLimits& limits = {});

/// Presentation on the table's generators with one relator
/// w(e) g w(e g)^-1 per element e and generator g, where w is the spanning
/// tree word. Generators are named g1, g2, ...
FpPresentation cayley_presentation(const GroupTable& table);

/// G / C^p(G) = G^ab tensor Z_p.
AbelianStructure cp_quotient_fp(const FpPresentation& presentation, const Integer& p);

struct CpKernel {
  CosetTable table;
  SubgroupPresentation subgroup;
  AbelianStructure quotient;  // G / C^p(G)
};

/// Coset table of C^p(G) from the translation action of G on G^ab / p G^ab,
/// rewritten by Reidemeister-Schreier. Throws BudgetExhausted when the
/// quotient is larger than max_index.
CpKernel cp_kernel_presentation(const FpPresentation& presentation, const Integer& p,
                                std::size_t max_index = 10000);

struct PSeriesLevel {
  std::size_t level = 0;      // n, describing G^(n)
  std::string group;          // presentation text or group description
  AbelianStructure quotient;  // G^(n-1) / G^(n)
  Integer index;              // [G^(n-1) : G^(n)]
  std::optional<FpPresentation> presentation;
  std::optional<PermGroup> subgroup;
};

struct PSeriesReport {
  Integer p;
  std::size_t depth = 0;
  std::vector<PSeriesLevel> levels;
  bool truncated = false;
  std::size_t truncated_at = 0;  // level that could not be computed
  std::string truncation_reason;
};

/// G^(0) = G, G^(n+1) = C^p(G^(n)). Each presented level is the printed
/// Reidemeister-Schreier output of the previous one, parsed back. A level
/// whose quotient exceeds max_index ends the report early.
PSeriesReport derived_p_series(const FpPresentation& presentation, const Integer& p,
                               std::size_t depth, std::size_t max_index = 10000);
PSeriesReport derived_p_series(const PermGroup& g, const Integer& p, std::size_t depth);

enum class CpStatus { kIsCpGroup, kNotCpGroup, kInconclusive };
enum class CpReason { kSelfWitness, kCompleteCriterion, kAutCriterion, kNone };

std::string to_string(CpStatus status);
std::string to_string(CpReason reason);

struct CpVerdict {
  CpStatus status = CpStatus::kInconclusive;
  CpReason reason = CpReason::kNone;
  Integer group_order;
  Integer cp_order;
  std::optional<bool> complete;  // set when the completeness test ran
  std::optional<Integer> aut_order;
  std::optional<Integer> cp_aut_order;
  /// For the Aut criterion: an element of H whose inner automorphism lies
  /// outside C^p(Aut(H)).
  std::string witness;
  std::vector<std::string> notes;
};

/// Three-valued verdict: C^p(H) = H proves H = C^p(H) is a C^p-group; a
/// complete H with C^p(H) != H is not one; neither is an H whose inner
/// automorphisms escape C^p(Aut(H)). Anything else is inconclusive.
CpVerdict cp_group_verdict(const PermGroup& h, const Integer& p,
                           const AutSearchOptions& options = {});

struct ExactSequenceReport {
  Integer group_order;
  Integer subgroup_order;
  Integer center_order;       // |Z(H)|
  Integer centralizer_order;  // |C_G(H)|
  bool phi_injective = false;
  bool psi_homomorphism = false;
  bool psi_surjective = false;
  bool image_equals_kernel = false;
  bool exact() const {
    return phi_injective && psi_homomorphism && psi_surjective && image_equals_kernel;
  }
};

/// Brute-force check of 1 -> Z(H) -> H x C_G(H) -> G -> 1 with
/// h -> (h, h^-1) and (h, c) -> h c. Requires H normal in G and every
/// generator of G to act on H by an inner automorphism; otherwise throws
/// PreconditionError naming the offending element.
ExactSequenceReport verify_exact_sequence_rob96(const PermGroup& g, const PermGroup& h,
                                                const PermLimits& limits = {});

struct S6Report {
  Integer p;
  Integer aut_order;
  Integer inn_order;
  Integer cp_aut_order;
  Integer alpha_order;             // image of A6 in Aut(S6)
  bool cp_equals_alpha = false;
  bool inn_contained_in_cp = true;
  std::string inn_witness;         // g in S6 with Ad_g outside C^p(Aut)
  Integer index_aut_inn;
  Integer index_aut_cp;
  bool counting_identity_holds = true;  // 2 = [Aut:C^p][C^p:Inn] under Inn <= C^p
  std::vector<std::string> psi_images;  // outer automorphism of order 10
  std::string tau;                       // psi^2 = Ad_tau
  bool tau_in_a6 = false;
  std::uint64_t search_nodes = 0;
  CpVerdict verdict;
};

/// Aut(S6), its C^p subgroup and the comparison with the inner A6, for even
/// p <= 12.
S6Report verify_s6_pipeline(const Integer& p, const AutSearchOptions& options = {});

}  // namespace cpg
