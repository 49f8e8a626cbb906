#include "oddaut/structure.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "oddaut/abelian.hpp"
#include "oddaut/numtheory.hpp"

namespace oddaut {
namespace {

const std::vector<Elem>& gens_or_members(const Subgroup& s) {
  return s.generators().empty() ? s.members() : s.generators();
}

}  // namespace

Subgroup centralizer(const Group& g, std::span<const Elem> elements) {
  std::vector<Elem> members;
  for (Elem x = 0; x < g.order(); ++x) {
    bool commutes = std::all_of(elements.begin(), elements.end(),
                                [&](Elem e) { return g.mul(x, e) == g.mul(e, x); });
    if (commutes) members.push_back(x);
  }
  return generated_subgroup(g, members);
}

Subgroup center(const Group& g) {
  const auto gens = simple_generating_set(g);
  return centralizer(g, gens);
}

Subgroup normal_closure(const Group& g, std::span<const Elem> elements) {
  const auto ggens = simple_generating_set(g);
  std::vector<Elem> gens(elements.begin(), elements.end());
  Subgroup h = generated_subgroup(g, gens);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (Elem x : ggens) {
      Elem c = g.conj(gens[i], x);
      if (!h.contains(c)) {
        gens.push_back(c);
        h = generated_subgroup(g, gens);
      }
    }
  }
  return h;
}

Subgroup derived_subgroup(const Group& g) {
  // G' is the normal closure of the commutators of any generating set.
  const auto gens = simple_generating_set(g);
  std::vector<Elem> comms;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Elem c = g.commutator(gens[i], gens[j]);
      if (c != 0) comms.push_back(c);
    }
  }
  return normal_closure(g, comms);
}

Subgroup normalizer(const Group& g, const Subgroup& s) {
  const auto& sg = gens_or_members(s);
  std::vector<Elem> members;
  for (Elem x = 0; x < g.order(); ++x) {
    bool keeps = std::all_of(sg.begin(), sg.end(), [&](Elem e) { return s.contains(g.conj(e, x)); });
    if (keeps) members.push_back(x);
  }
  return generated_subgroup(g, members);
}

bool is_normal(const Group& g, const Subgroup& s) {
  const auto& sg = gens_or_members(s);
  for (Elem x : simple_generating_set(g)) {
    for (Elem e : sg) {
      if (!s.contains(g.conj(e, x))) return false;
    }
  }
  return true;
}

std::vector<Elem> conjugate_members(const Group& g, const Subgroup& s, Elem x) {
  std::vector<Elem> out;
  out.reserve(s.size());
  for (Elem e : s.members()) out.push_back(g.conj(e, x));
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t p_group_prime(std::size_t order) { return order <= 1 ? 0 : prime_power_base(order); }

std::uint64_t elementary_abelian_prime(const Subgroup& s) {
  const std::uint64_t p = p_group_prime(s.size());
  if (p == 0) return 0;
  const Group& g = s.parent();
  for (Elem x : s.members()) {
    if (x != 0 && g.element_order(x) != p) return 0;
  }
  const auto& gens = gens_or_members(s);
  for (Elem a : gens) {
    for (Elem b : gens) {
      if (g.mul(a, b) != g.mul(b, a)) return 0;
    }
  }
  return p;
}

ConjugacyClasses conjugacy_classes(const Group& g) {
  const auto gens = simple_generating_set(g);
  ConjugacyClasses out;
  constexpr std::uint32_t unset = ~std::uint32_t{0};
  out.class_of.assign(g.order(), unset);
  for (Elem x = 0; x < g.order(); ++x) {
    if (out.class_of[x] != unset) continue;
    const auto id = static_cast<std::uint32_t>(out.sizes.size());
    std::vector<Elem> orbit{x};
    out.class_of[x] = id;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (Elem s : gens) {
        Elem y = g.conj(orbit[i], s);
        if (out.class_of[y] == unset) {
          out.class_of[y] = id;
          orbit.push_back(y);
        }
      }
    }
    out.sizes.push_back(orbit.size());
    out.representatives.push_back(x);
  }
  return out;
}

SylowReport sylow(const Group& g, std::uint64_t p) {
  if (p < 2 || !is_prime(p) || g.order() % p != 0) {
    fail(ErrorKind::PrimeDoesNotDivide, std::to_string(p) + " is not a prime dividing " + std::to_string(g.order()));
  }
  const std::uint64_t target = p_part(g.order(), p);

  Elem start = 0;
  std::size_t best = 1;
  for (Elem x = 1; x < g.order(); ++x) {
    std::size_t o = g.element_order(x);
    if (p_part(o, p) == o && o > best) {
      best = o;
      start = x;
    }
  }
  std::vector<Elem> gens{start};
  Subgroup h = generated_subgroup(g, gens);
  while (h.size() < target) {
    Subgroup n = normalizer(g, h);
    bool grown = false;
    for (Elem y : n.members()) {
      if (h.contains(y)) continue;
      // smallest m with y^m in H must be a power of p
      std::uint64_t m = 1;
      Elem z = y;
      while (!h.contains(z)) {
        z = g.mul(z, y);
        ++m;
      }
      if (p_part(m, p) != m) continue;
      gens.push_back(y);
      h = generated_subgroup(g, gens);
      grown = true;
      break;
    }
    if (!grown) fail(ErrorKind::InvariantViolation, "normalizer ascent stalled below the full p-part");
  }

  // Orbit of the member set under conjugation.
  const auto ggens = simple_generating_set(g);
  std::set<std::vector<Elem>> orbit{h.members()};
  std::deque<std::vector<Elem>> queue{h.members()};
  Subgroup scratch = h;
  while (!queue.empty()) {
    std::vector<Elem> current = std::move(queue.front());
    queue.pop_front();
    for (Elem x : ggens) {
      std::vector<Elem> next;
      next.reserve(current.size());
      for (Elem e : current) next.push_back(g.conj(e, x));
      std::sort(next.begin(), next.end());
      if (orbit.insert(next).second) queue.push_back(std::move(next));
    }
  }
  const std::size_t count = orbit.size();
  if (count * normalizer(g, h).size() != g.order()) {
    fail(ErrorKind::InvariantViolation, "conjugate count disagrees with the normalizer index");
  }
  return SylowReport{p, std::move(h), count, count == 1};
}

ComplementResult find_complement(const Group& g, const Subgroup& n, std::uint64_t node_budget) {
  if (!is_normal(g, n)) fail(ErrorKind::NotNormal, "complement search needs a normal subgroup");
  const std::size_t m = g.order() / n.size();
  const std::size_t none = m;
  std::vector<std::size_t> label(g.order(), none);
  std::vector<Elem> reps;
  for (Elem x = 0; x < g.order(); ++x) {
    if (label[x] != none) continue;
    for (Elem e : n.members()) label[g.mul(x, e)] = reps.size();
    reps.push_back(x);
  }

  ComplementResult result;
  // A subgroup meets N trivially iff it maps injectively to G/N.
  auto meets_trivially = [&](const Subgroup& h) {
    std::vector<std::uint8_t> hit(m);
    for (Elem x : h.members()) {
      if (hit[label[x]]++) return false;
    }
    return true;
  };

  std::function<bool(const std::vector<Elem>&, const Subgroup&)> search =
      [&](const std::vector<Elem>& gens, const Subgroup& h) -> bool {
    if (h.size() == m) {
      result.complement = h;
      return true;
    }
    std::vector<std::uint8_t> covered(m);
    for (Elem x : h.members()) covered[label[x]] = 1;
    std::size_t coset = 0;
    while (covered[coset]) ++coset;
    for (Elem e : n.members()) {
      if (++result.nodes > node_budget) {
        result.budget_exhausted = true;
        return false;
      }
      std::vector<Elem> next_gens = gens;
      next_gens.push_back(g.mul(reps[coset], e));
      Subgroup next = generated_subgroup(g, next_gens);
      if (m % next.size() != 0 || !meets_trivially(next)) continue;
      if (search(next_gens, next)) return true;
      if (result.budget_exhausted) return false;
    }
    return false;
  };
  search({}, trivial_subgroup(g));
  if (result.complement) {
    const Subgroup& b = *result.complement;
    if (!intersection(b, n).is_trivial() || b.size() * n.size() != g.order()) {
      fail(ErrorKind::InvariantViolation, "complement search returned a non-complement");
    }
  }
  return result;
}

bool is_invariant(const Subgroup& s, std::span<const Perm> maps) {
  const auto& sg = gens_or_members(s);
  for (const Perm& m : maps) {
    for (Elem e : sg) {
      if (!s.contains(m[e])) return false;
    }
  }
  return true;
}

Subgroup characteristic_elementary_abelian(const Group& g, std::span<const Perm> automorphisms) {
  require(g.order() > 1, ErrorKind::TrivialGroup, "the trivial group has no such subgroup");
  require(g.order() % 2 == 1, ErrorKind::NotOddOrder, "group order must be odd");
  for (std::uint64_t p : prime_divisors(g.order())) {
    std::optional<Subgroup> best;
    std::vector<std::uint8_t> done(g.order());
    for (Elem x = 1; x < g.order(); ++x) {
      if (done[x] || g.element_order(x) != p) continue;
      // Smallest invariant subgroup containing x: generated by the orbit of x.
      std::vector<Elem> orbit{x};
      std::vector<std::uint8_t> in_orbit(g.order());
      in_orbit[x] = 1;
      for (std::size_t i = 0; i < orbit.size(); ++i) {
        for (const Perm& a : automorphisms) {
          Elem y = a[orbit[i]];
          if (!in_orbit[y]) {
            in_orbit[y] = 1;
            orbit.push_back(y);
          }
        }
      }
      for (Elem y : orbit) done[y] = 1;
      Subgroup s = generated_subgroup(g, orbit);
      if (elementary_abelian_prime(s) != p) continue;
      if (!best || s.size() < best->size()) best = std::move(s);
    }
    if (best) {
      if (!is_invariant(*best, automorphisms)) {
        fail(ErrorKind::InvariantViolation, "characteristic subgroup is not invariant");
      }
      return *best;
    }
  }
  fail(ErrorKind::InvariantViolation, "no characteristic elementary abelian subgroup found");
}

CentralQuotientProfile central_quotient_profile(const Group& g) {
  CentralQuotientProfile profile;
  Subgroup z = center(g);
  profile.quotient_order = g.order() / z.size();
  if (profile.quotient_order == 1) return profile;
  Quotient q = quotient(g, z);
  profile.prime = p_group_prime(q.group.order());
  profile.is_p_group = profile.prime != 0;
  profile.abelian = q.group.is_abelian();
  if (profile.is_p_group && profile.abelian) {
    std::vector<unsigned> exps;
    for (std::uint64_t d : abelian_invariants(q.group).factors) exps.push_back(valuation(d, profile.prime));
    std::sort(exps.rbegin(), exps.rend());
    profile.rank_condition_holds = exps.size() >= 2 && exps[0] == exps[1];
    profile.exponents = std::move(exps);
  }
  return profile;
}

Subgroup central_characteristic_subgroup(const Group& q, std::span<const Perm> automorphisms) {
  const std::uint64_t p = p_group_prime(q.order());
  require(p != 0, ErrorKind::HypothesisViolated, "expected a non-trivial p-group");
  const bool abelian = q.is_abelian();
  if (abelian && q.exponent() == p) fail(ErrorKind::IsElementaryAbelian, "the quotient is elementary abelian");
  Subgroup k = [&] {
    if (!abelian) return center(q);
    std::vector<Elem> order_p;
    for (Elem x = 1; x < q.order(); ++x) {
      if (q.element_order(x) == p) order_p.push_back(x);
    }
    return generated_subgroup(q, order_p);
  }();
  Subgroup z = center(q);
  require(!k.is_trivial(), ErrorKind::InvariantViolation, "K is trivial");
  require(std::all_of(k.members().begin(), k.members().end(), [&](Elem x) { return z.contains(x); }),
          ErrorKind::InvariantViolation, "K is not central");
  require(is_invariant(k, automorphisms), ErrorKind::InvariantViolation, "K is not invariant");
  require(q.order() / k.size() >= p * p, ErrorKind::InvariantViolation, "K has index below p^2");
  return k;
}

}  // namespace oddaut
