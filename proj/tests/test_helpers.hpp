#pragma once

#include <functional>
#include <set>

#include "oddaut/error.hpp"
#include "oddaut/group.hpp"

namespace oddaut::testing {

inline bool throws_kind(ErrorKind kind, const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

/// Every subgroup generated by at most two elements (all subgroups for the
/// small groups used in tests where every subgroup is 2-generated).
inline std::set<std::vector<Elem>> two_generated_subgroups(const Group& g) {
  std::set<std::vector<Elem>> out;
  for (Elem x = 0; x < g.order(); ++x) {
    for (Elem y = x; y < g.order(); ++y) out.insert(generated_subgroup(g, {x, y}).members());
  }
  return out;
}

/// Elements commuting with everything, by exhaustive check.
inline std::vector<Elem> brute_center(const Group& g) {
  std::vector<Elem> z;
  for (Elem x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Elem y = 0; y < g.order() && central; ++y) central = g.mul(x, y) == g.mul(y, x);
    if (central) z.push_back(x);
  }
  return z;
}

/// Every bijection of G fixing 0 checked for the homomorphism law.
inline std::size_t brute_aut_count(const Group& g) {
  std::vector<Elem> perm(g.order());
  for (Elem i = 0; i < g.order(); ++i) perm[i] = i;
  std::size_t count = 0;
  do {
    bool hom = true;
    for (Elem x = 1; x < g.order() && hom; ++x) {
      for (Elem y = 1; y < g.order() && hom; ++y) hom = perm[g.mul(x, y)] == g.mul(perm[x], perm[y]);
    }
    count += hom;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return count;
}

}  // namespace oddaut::testing
