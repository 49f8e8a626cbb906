#include "oddaut/abelian.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "oddaut/numtheory.hpp"
#include "oddaut/structure.hpp"

namespace oddaut {

AbelianInvariants invariants_from_cyclic_orders(const std::vector<std::uint64_t>& orders) {
  // Primary components per prime, largest first; the k-th largest invariant
  // factor collects the k-th largest prime power of every prime.
  std::map<std::uint64_t, std::vector<std::uint64_t>> primary;
  for (std::uint64_t d : orders) {
    require(d >= 1, ErrorKind::InvalidParameter, "cyclic order 0");
    for (const auto& [p, e] : factorize(d)) primary[p].push_back(ipow(p, e));
  }
  std::size_t k = 0;
  for (auto& [p, powers] : primary) {
    std::sort(powers.rbegin(), powers.rend());
    k = std::max(k, powers.size());
  }
  std::vector<std::uint64_t> factors(k, 1);
  for (const auto& [p, powers] : primary) {
    for (std::size_t i = 0; i < powers.size(); ++i) factors[k - 1 - i] *= powers[i];
  }
  return {factors};
}

AbelianInvariants abelian_invariants(const Group& g) {
  require(g.is_abelian(), ErrorKind::NotAbelian, g.name() + " is not abelian");
  std::vector<std::uint64_t> found;  // largest first
  Group current = g;
  while (current.order() > 1) {
    Elem best = 0;
    std::size_t best_order = 1;
    for (Elem x = 1; x < current.order(); ++x) {
      const std::size_t o = current.element_order(x);
      if (o > best_order) {
        best_order = o;
        best = x;
      }
    }
    const Subgroup cyc = generated_subgroup(current, {best});
    const ComplementResult c = find_complement(current, cyc);
    require(c.complement.has_value(), ErrorKind::InvariantViolation,
            "maximal-order cyclic subgroup of an abelian group has no complement");
    found.push_back(best_order);
    current = induced_group(*c.complement).group;
  }
  AbelianInvariants inv{{found.rbegin(), found.rend()}};
  for (std::size_t i = 0; i + 1 < inv.factors.size(); ++i) {
    require(inv.factors[i + 1] % inv.factors[i] == 0, ErrorKind::InvariantViolation,
            "split cyclic factors do not form a divisibility chain");
  }
  return inv;
}

BigInt hom_count(const AbelianInvariants& a, const AbelianInvariants& b) {
  BigInt total = 1;
  for (std::uint64_t x : a.factors) {
    for (std::uint64_t y : b.factors) total *= std::gcd(x, y);
  }
  return total;
}

BigInt hom_count(const Group& a, const Group& b) { return hom_count(abelian_invariants(a), abelian_invariants(b)); }

std::optional<Subgroup> abelian_direct_factor(const Group& g, std::uint64_t node_budget) {
  const Subgroup z = center(g);
  std::set<std::vector<Elem>> tried;
  for (Elem x : z.members()) {
    if (x == 0 || prime_power_base(g.element_order(x)) == 0) continue;
    Subgroup cyc = generated_subgroup(g, {x});
    if (!tried.insert(cyc.members()).second) continue;
    const ComplementResult c = find_complement(g, cyc, node_budget);
    if (c.budget_exhausted) {
      fail(ErrorKind::SearchBudgetExceeded, "complement search for a central cyclic subgroup of " + g.name());
    }
    if (c.complement) return cyc;
  }
  return std::nullopt;
}

CentralAutomorphismCount central_automorphism_count(const Group& g, const AutGroup& aut, std::uint64_t budget) {
  CentralAutomorphismCount r;
  const Subgroup z = center(g);
  if (!abelian_direct_factor(g)) {
    const Quotient ab = quotient(g, derived_subgroup(g));
    r.via_hom = hom_count(abelian_invariants(ab.group), abelian_invariants(induced_group(z).group));
  }
  if (g.is_abelian()) {
    // Every automorphism is central and Inn(G) is trivial.
    r.via_enumeration = aut.order;
    r.central_inner_is_center_of_inner = true;
    return r;
  }
  const std::vector<Perm> cent =
      enumerate_automorphisms(g, [&](Elem x, Elem y) { return z.contains(g.mul(g.inv(x), y)); }, budget);
  r.via_enumeration = cent.size();

  const InnerAutomorphisms inn = inner_automorphisms(g);
  const std::set<Perm> cent_set(cent.begin(), cent.end());
  std::set<Perm> cent_inner;
  for (const Perm& m : inn.maps) {
    if (cent_set.count(m)) cent_inner.insert(m);
  }
  std::vector<Perm> inn_gens;
  for (Elem h : simple_generating_set(g)) {
    Perm p(g.order());
    for (Elem x = 0; x < g.order(); ++x) p[x] = g.conj(x, h);
    inn_gens.push_back(std::move(p));
  }
  std::set<Perm> center_of_inner;
  for (const Perm& m : inn.maps) {
    const bool central = std::all_of(inn_gens.begin(), inn_gens.end(),
                                     [&](const Perm& s) { return compose(m, s) == compose(s, m); });
    if (central) center_of_inner.insert(m);
  }
  r.central_inner_is_center_of_inner = cent_inner == center_of_inner;
  return r;
}

}  // namespace oddaut
