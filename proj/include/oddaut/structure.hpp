#pragma once

// Subgroup structure: centers, commutators, normalizers, Sylow subgroups,
// complements and characteristic subgroups.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "oddaut/group.hpp"

namespace oddaut {

Subgroup center(const Group& g);
Subgroup derived_subgroup(const Group& g);
/// Centralizer of a set of elements.
Subgroup centralizer(const Group& g, std::span<const Elem> elements);
Subgroup normalizer(const Group& g, const Subgroup& s);
bool is_normal(const Group& g, const Subgroup& s);
/// Smallest normal subgroup containing the given elements.
Subgroup normal_closure(const Group& g, std::span<const Elem> elements);
/// Member set of x^-1 S x.
std::vector<Elem> conjugate_members(const Group& g, const Subgroup& s, Elem x);

/// If every non-identity member has order p, returns p; 0 otherwise (and
/// for the trivial subgroup). Elementary abelian also requires commuting.
std::uint64_t elementary_abelian_prime(const Subgroup& s);
/// If |S| is a power of a prime p, returns p; 0 for the trivial subgroup or
/// mixed orders.
std::uint64_t p_group_prime(std::size_t order);

/// Conjugacy class index per element and the class sizes.
struct ConjugacyClasses {
  std::vector<std::uint32_t> class_of;
  std::vector<std::size_t> sizes;
  std::vector<Elem> representatives;
};
ConjugacyClasses conjugacy_classes(const Group& g);

struct SylowReport {
  std::uint64_t prime = 0;
  Subgroup subgroup;
  std::size_t conjugate_count = 0;
  bool is_normal = false;
};
/// Grows a Sylow p-subgroup by normalizer ascent from the cyclic subgroup of
/// a p-element of largest order; the conjugate count is the orbit size of
/// its member set under conjugation.
SylowReport sylow(const Group& g, std::uint64_t p);

struct ComplementResult {
  std::optional<Subgroup> complement;
  bool budget_exhausted = false;
  std::uint64_t nodes = 0;
};
/// Searches for B with N ∩ B = 1 and NB = G by backtracking over coset
/// representatives. `complement` is empty with budget_exhausted false only
/// when the search proved no complement exists.
ComplementResult find_complement(const Group& g, const Subgroup& n, std::uint64_t node_budget = 10'000'000);

/// True when every listed map sends S into S.
bool is_invariant(const Subgroup& s, std::span<const Perm> maps);

/// Non-trivial elementary abelian p-subgroup invariant under every listed
/// automorphism (pass the full automorphism group or a generating set of
/// it). Smallest prime first, then smallest order.
Subgroup characteristic_elementary_abelian(const Group& g, std::span<const Perm> automorphisms);

struct CentralQuotientProfile {
  std::size_t quotient_order = 1;
  bool is_p_group = false;
  std::uint64_t prime = 0;
  bool abelian = true;
  /// Exponents alpha_1 >= alpha_2 >= ... of the cyclic factors p^alpha_i,
  /// present only when G/Z is a non-trivial abelian p-group.
  std::optional<std::vector<unsigned>> exponents;
  /// r >= 2 and alpha_1 == alpha_2; vacuously true when not applicable.
  bool rank_condition_holds = true;
};
CentralQuotientProfile central_quotient_profile(const Group& g);

/// For a p-group Q that is not elementary abelian: its center if Q is
/// non-abelian, otherwise the subgroup generated by elements of order p.
/// Checks the result is non-trivial, central, invariant under the maps and
/// of index at least p^2.
Subgroup central_characteristic_subgroup(const Group& q, std::span<const Perm> automorphisms);

}  // namespace oddaut
