#pragma once

// Automorphism groups by backtracking over generator images.
//
// The search fixes a generating sequence g_1..g_m of G and assigns images
// level by level. Assigning an image to g_i extends the partial map to
// <g_1..g_i> along a precomputed breadth-first plan and checks every
// remaining edge h -> h*g_j, so a complete assignment is a homomorphism by
// construction. Images must match per-element fingerprints, which are
// constant on Aut-orbits.
//
// |Aut(G)| is computed as a product of orbit lengths along the stabilizer
// chain of (g_1, ..., g_m); one automorphism is searched per new orbit
// point and the found maps form a strong generating set.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "oddaut/group.hpp"

namespace oddaut {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::uint64_t kDefaultAutBudget = 20'000'000;
inline constexpr std::size_t kDefaultElementLimit = 200'000;

struct SearchStats {
  std::uint64_t nodes_visited = 0;
  std::uint64_t pruned_by_order = 0;
  std::uint64_t pruned_by_class = 0;
  double wall_time_ms = 0;
};

/// Per-element invariant ids: equal ids are necessary for two elements to
/// lie in the same Aut-orbit. Built from element order, conjugacy class size
/// and the order and class size of each prime power x^q.
struct Fingerprints {
  std::vector<std::uint32_t> id;
  std::vector<std::uint32_t> order;
};
Fingerprints fingerprints(const Group& g);

/// Adds, at each step, the element whose inclusion generates the largest
/// subgroup; ties go to the smallest index.
std::vector<Elem> greedy_generating_set(const Group& g);

struct AutGroup {
  const Group* parent = nullptr;
  /// Generating sequence of G the search was run on.
  std::vector<Elem> base;
  /// Strong generators along the stabilizer chain of `base`.
  std::vector<Perm> generators;
  /// Orbit length of base[i] under the stabilizer of base[0..i-1].
  std::vector<std::size_t> orbit_lengths;
  BigInt order = 1;
  /// All elements sorted by image sequence, when order <= element_limit.
  std::vector<Perm> elements;
  bool elements_complete = false;
  SearchStats stats;
};

/// Throws BudgetExceeded when more than `budget` search nodes are needed;
/// no partial group is ever returned.
AutGroup automorphism_group(const Group& g, std::uint64_t budget = kDefaultAutBudget,
                            std::size_t element_limit = kDefaultElementLimit);

/// All automorphisms whose generator images satisfy `allowed(generator,
/// image)`, sorted. Used for restricted families (central automorphisms,
/// lifts of a prescribed linear action).
std::vector<Perm> enumerate_automorphisms(const Group& g, const std::function<bool(Elem, Elem)>& allowed,
                                          std::uint64_t budget = kDefaultAutBudget);

/// Calls `visit` on each automorphism allowed as above, in search order,
/// until it returns false.
void visit_automorphisms(const Group& g, const std::function<bool(Elem, Elem)>& allowed,
                         const std::function<bool(const Perm&)>& visit, std::uint64_t budget = kDefaultAutBudget);

/// Closure of a set of permutations, sorted. Throws BudgetExceeded past `limit`.
std::vector<Perm> close_permutations(std::size_t degree, std::span<const Perm> generators, std::size_t limit);

/// Orbit of `x` under the group generated by the maps.
std::vector<Elem> orbit(Elem x, std::span<const Perm> maps);

struct InnerAutomorphisms {
  std::vector<Perm> maps;  // distinct I_g in order of first g
  std::vector<Elem> representatives;  // one g per map
};
/// I_g : x -> g^-1 x g for every g, duplicates removed. Checks the count is |G|/|Z(G)|.
InnerAutomorphisms inner_automorphisms(const Group& g);

struct NiReport {
  bool aut_order_odd = false;
  bool no_inversion = false;
  bool trivial_group = false;
  /// Some g != 1 mapped to g^-1 by an automorphism, when one exists.
  std::optional<Elem> inverted_element;
};
/// Both N.I. criteria; for groups of odd order they are required to agree.
NiReport is_ni(const Group& g, const AutGroup& aut);

bool is_characteristic(const Subgroup& s, const AutGroup& aut);

}  // namespace oddaut
