#pragma once

// Constructing automorphisms of order 2 of G = AB from automorphisms of a
// normal subgroup A.
//
// extend_by_lemma_211 turns an automorphism phi of A that is trivial on
// A ∩ B and commutes with every conjugation by B into ab -> (a phi) b.
// build_involution_cor212 applies it to inversion on an abelian A.
// build_involution_thm213 handles a p-group A of class at most 2: it
// decomposes A/(Z ∩ A) under B, picks companion-form bases
// b^-1 a_j b = z_j a_{j+1}, b^-1 a_n b = z_n prod a_j^{k_j} on each
// non-trivial block, and sends a_j -> zeta_j a_j^-1 with central zeta_j
// chosen so that the map commutes with b.

#include <cstdint>
#include <optional>
#include <vector>

#include "oddaut/group.hpp"
#include "oddaut/linalg_fp.hpp"

namespace oddaut {

struct ExtensionProblem {
  const Group* group = nullptr;
  Subgroup a;  // normal
  Subgroup b;
};

/// Checks A is normal in G and G = AB; throws HypothesisViolated otherwise.
ExtensionProblem make_problem(const Group& g, const Subgroup& a, const Subgroup& b);
/// For a group built by semidirect_product (or direct_product) of orders
/// |A| and |B|: A = {(a,1)}, B = {(1,b)}.
ExtensionProblem semidirect_problem(const Group& g, std::size_t a_order, std::size_t b_order);

/// B acting on V = A/(Z(G) ∩ A), a free Z/q-module with q a power of p.
struct InducedAction {
  std::uint32_t p = 0;
  std::uint64_t q = 0;  // exponent of V
  std::size_t dimension = 0;
  std::vector<Elem> center_part;  // members of Z(G) ∩ A
  std::vector<Elem> coset_basis;  // e_1..e_n lifting a basis of V
  /// Conjugation matrix of each member of B (same order as b.members()),
  /// reduced mod p.
  std::vector<FpMatrix> matrices;
  bool trivial = true;
};
/// Throws HypothesisViolated (named hypothesis), NotElementaryAbelian when V
/// is not homocyclic, ActionNotCoprime when p divides the order of the
/// action.
InducedAction induced_action(const ExtensionProblem& problem);

/// One non-trivial block with its normalized basis.
struct NormalizedBlock {
  std::size_t block_index = 0;
  Elem b = 0;                       // element of B generating the block action
  std::vector<Elem> alpha;          // alpha_{j+1} = b^-1 alpha_j b
  std::vector<std::uint64_t> k;     // b^-1 alpha_n b = prod alpha_j^{k_j} mod Z ∩ A
  Elem sigma = 0;                   // central adjuster, a_j = sigma alpha_j
  std::vector<Elem> a;              // a_j^q = 1
  std::vector<Elem> z;              // central defects of the companion relations
  std::vector<Elem> zeta;           // a_j -> zeta_j a_j^-1
};

struct NormalizedBasis {
  std::vector<NormalizedBlock> blocks;
  std::vector<Elem> trivial_representatives;  // fixed by the involution
};

/// Lifts the cyclic basis of each non-trivial block and adjusts it
/// centrally to exponent q; fills everything but zeta. Throws
/// ConditionViolated if sum k = 1 mod p, NoCentralSolution if no central
/// adjuster exists, HypothesisViolated for several blocks over q > p.
NormalizedBasis normalize_basis(const ExtensionProblem& problem, const InducedAction& action,
                                const BlockDecomposition& blocks);

struct ZetaSolution {
  std::vector<Elem> zeta;
  /// Number of solutions found by exhaustive search, when it was feasible.
  std::optional<std::size_t> exhaustive_count;
};
/// Solves zeta_j zeta_{j+1}^-1 = z_j^2 (j < n) and
/// zeta_n prod zeta_j^{-k_j} = z_n^2 (prod a_j^{-k_j})(prod a_j^{k_j})
/// inside `center_part`. Throws NoSolution or NonUniqueSolution.
ZetaSolution solve_zeta(const Group& g, const std::vector<Elem>& center_part, const std::vector<Elem>& a,
                        const std::vector<Elem>& z, const std::vector<std::uint64_t>& k);

struct InvolutionCertificate {
  Perm automorphism;  // of G
  Perm on_a;          // restriction to A, indexed by elements of G (others map to themselves)
  InducedAction action;
  BlockDecomposition blocks;
  NormalizedBasis basis;
};

/// Throws TrivialAction when B acts trivially on A/(Z ∩ A).
InvolutionCertificate build_involution_thm213(const ExtensionProblem& problem);

/// phi is indexed by elements of G and read only on A. Throws
/// NotTrivialOnIntersection, DoesNotCommuteWithAction, NotWellDefined.
Perm extend_by_lemma_211(const ExtensionProblem& problem, const Perm& phi);

/// Extends inversion on an abelian normal A with A ∩ B = 1. Throws
/// ExponentTwo when inversion is trivial, HypothesisViolated otherwise.
Perm build_involution_cor212(const ExtensionProblem& problem);

/// Checks on the table that `map` is an automorphism of order exactly 2
/// fixing Z(G) pointwise and mapping A onto A. Throws InvariantViolation.
void verify_involution(const ExtensionProblem& problem, const Perm& map);

/// An automorphism of the p-group A inducing M on the Frattini quotient
/// A/Φ(A) (in the basis of `frattini_basis`) whose order equals the order
/// of M, if one exists.
std::optional<Perm> lift_matrix(const Group& a, const FpMatrix& m);
/// Generators of A whose images form a basis of A/Φ(A), smallest indices first.
std::vector<Elem> frattini_basis(const Group& a);

}  // namespace oddaut
