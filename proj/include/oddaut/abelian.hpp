#pragma once

// Abelian-group arithmetic: invariant factors, homomorphism counts, abelian
// direct factors and central automorphisms.

#include <cstdint>
#include <optional>
#include <vector>

#include "oddaut/aut.hpp"
#include "oddaut/group.hpp"

namespace oddaut {

/// Invariant factors d_1 | d_2 | ... | d_k, each >= 2; empty for the trivial group.
struct AbelianInvariants {
  std::vector<std::uint64_t> factors;
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// Splits off a cyclic direct factor of maximal order until nothing is left.
AbelianInvariants abelian_invariants(const Group& g);

/// Invariant factors of a direct product of cyclic groups of the given orders.
AbelianInvariants invariants_from_cyclic_orders(const std::vector<std::uint64_t>& orders);

/// |Hom(A, B)| = prod over invariant factors of gcd(a_i, b_j).
BigInt hom_count(const AbelianInvariants& a, const AbelianInvariants& b);
BigInt hom_count(const Group& a, const Group& b);

/// A non-trivial abelian D with G = D x H, or nothing. Any abelian direct
/// factor is central and contains a cyclic direct factor of prime-power
/// order, so only cyclic prime-power subgroups of Z(G) are tried.
std::optional<Subgroup> abelian_direct_factor(const Group& g, std::uint64_t node_budget = 10'000'000);

struct CentralAutomorphismCount {
  /// |Hom(G/G', Z(G))|, present when G has no abelian direct factor.
  std::optional<BigInt> via_hom;
  /// Automorphisms with g^-1 g^phi in Z(G) for every g.
  BigInt via_enumeration = 0;
  /// Cent(G) ∩ Inn(G) equals Z(Inn(G)) as sets of maps.
  bool central_inner_is_center_of_inner = false;
};
/// `aut` must be the full automorphism group of g.
CentralAutomorphismCount central_automorphism_count(const Group& g, const AutGroup& aut,
                                                    std::uint64_t budget = kDefaultAutBudget);

}  // namespace oddaut
