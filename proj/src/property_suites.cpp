#include "oddaut/property_suites.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "oddaut/abelian.hpp"
#include "oddaut/numtheory.hpp"
#include "oddaut/structure.hpp"

namespace oddaut {

std::string_view to_string(PropertyStatus s) {
  switch (s) {
    case PropertyStatus::Pass: return "PASS";
    case PropertyStatus::Fail: return "FAIL";
    case PropertyStatus::Skipped: return "SKIP";
    case PropertyStatus::NotApplicable: return "N/A";
  }
  return "?";
}

std::size_t PropertyReport::count(PropertyStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [s](const PropertyResult& r) { return r.status == s; }));
}

std::vector<Subgroup> normal_subgroups(const Group& g) {
  std::set<std::vector<Elem>> seen;
  std::vector<Subgroup> out;
  auto add = [&](Subgroup s) {
    if (seen.insert(s.members()).second) out.push_back(std::move(s));
  };
  for (Elem x = 0; x < g.order(); ++x) {
    const Elem gens[] = {x};
    add(normal_closure(g, gens));
  }
  // Every normal subgroup is the join of the normal closures of its elements.
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (out.size() > 10'000) fail(ErrorKind::BudgetExceeded, "too many normal subgroups");
      add(join(out[i], out[j]));
    }
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    return std::pair(a.size(), a.members()) < std::pair(b.size(), b.members());
  });
  return out;
}

std::size_t brute_hom_count_to_abelian(const Group& g, const Group& a) {
  const std::vector<Elem> gens = simple_generating_set(g);
  std::vector<Elem> images(gens.size(), 0);
  std::size_t count = 0;
  std::vector<Elem> value(g.order());
  std::vector<std::uint8_t> known(g.order());
  const std::function<void(std::size_t)> rec = [&](std::size_t level) {
    if (level < gens.size()) {
      for (Elem y = 0; y < a.order(); ++y) {
        images[level] = y;
        rec(level + 1);
      }
      return;
    }
    std::fill(known.begin(), known.end(), 0);
    value[0] = 0;
    known[0] = 1;
    std::vector<Elem> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Elem x = queue[head];
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const Elem y = g.mul(x, gens[k]);
        const Elem v = a.mul(value[x], images[k]);
        if (known[y]) {
          if (value[y] != v) return;
        } else {
          known[y] = 1;
          value[y] = v;
          queue.push_back(y);
        }
      }
    }
    ++count;
  };
  rec(0);
  return count;
}

namespace {

using Check = std::function<PropertyResult(const CatalogEntry&, const AutGroup&)>;

PropertyResult result(const CatalogEntry& e, const char* property, PropertyStatus s, std::string detail = {}) {
  return PropertyResult{e.name, property, s, std::move(detail)};
}

std::vector<Perm> distinct_inner_maps(const Group& g) {
  std::set<Perm> maps;
  for (Elem h = 0; h < g.order(); ++h) {
    Perm m(g.order());
    for (Elem x = 0; x < g.order(); ++x) m[x] = g.conj(x, h);
    maps.insert(std::move(m));
  }
  return {maps.begin(), maps.end()};
}

PropertyResult central_inner(const CatalogEntry& e, const AutGroup& aut) {
  const Group& g = e.group;
  const Subgroup z = center(g);
  const auto inner = distinct_inner_maps(g);
  std::set<Perm> center_of_inner, central_inner;
  for (const Perm& f : inner) {
    const bool commutes = std::all_of(inner.begin(), inner.end(),
                                      [&](const Perm& h) { return compose(f, h) == compose(h, f); });
    if (commutes) center_of_inner.insert(f);
    bool central = true;
    for (Elem x = 0; x < g.order() && central; ++x) central = z.contains(g.mul(g.inv(x), f[x]));
    if (central) central_inner.insert(f);
  }
  if (center_of_inner != central_inner) {
    return result(e, "central-inner", PropertyStatus::Fail,
                  "|Z(Inn)| = " + std::to_string(center_of_inner.size()) +
                      ", |Cent ∩ Inn| = " + std::to_string(central_inner.size()));
  }
  const auto counted = central_automorphism_count(g, aut);
  if (!counted.central_inner_is_center_of_inner) {
    return result(e, "central-inner", PropertyStatus::Fail, "library check disagrees with the oracle");
  }
  return result(e, "central-inner", PropertyStatus::Pass);
}

PropertyResult central_hom_count(const CatalogEntry& e, const AutGroup& aut) {
  const Group& g = e.group;
  const auto counted = central_automorphism_count(g, aut);
  const Subgroup z = center(g);
  const auto zg = induced_group(z);
  const std::size_t brute_hom = brute_hom_count_to_abelian(g, zg.group);
  if (aut.elements_complete) {
    std::size_t brute_central = 0;
    for (const Perm& f : aut.elements) {
      bool central = true;
      for (Elem x = 0; x < g.order() && central; ++x) central = z.contains(g.mul(g.inv(x), f[x]));
      brute_central += central ? 1 : 0;
    }
    if (BigInt(brute_central) != counted.via_enumeration) {
      return result(e, "central-hom-count", PropertyStatus::Fail,
                    "enumeration " + counted.via_enumeration.str() + " vs oracle " + std::to_string(brute_central));
    }
  }
  if (!counted.via_hom) {
    return result(e, "central-hom-count", PropertyStatus::NotApplicable, "has an abelian direct factor");
  }
  if (*counted.via_hom != BigInt(brute_hom)) {
    return result(e, "central-hom-count", PropertyStatus::Fail,
                  "hom formula " + counted.via_hom->str() + " vs oracle " + std::to_string(brute_hom));
  }
  if (*counted.via_hom != counted.via_enumeration) {
    return result(e, "central-hom-count", PropertyStatus::Fail,
                  "|Hom| = " + counted.via_hom->str() + " but |Cent| = " + counted.via_enumeration.str());
  }
  return result(e, "central-hom-count", PropertyStatus::Pass);
}

PropertyResult central_quotient_rank(const CatalogEntry& e, const AutGroup&) {
  const Group& g = e.group;
  const auto profile = central_quotient_profile(g);
  const Quotient q = quotient(g, center(g));
  const std::size_t n = q.group.order();
  const std::uint64_t p = prime_power_base(n);
  const bool applicable = !g.is_abelian() && p != 0 && q.group.is_abelian();
  const bool library_applicable = !g.is_abelian() && profile.is_p_group && profile.abelian && profile.exponents;
  if (applicable != library_applicable) {
    return result(e, "central-quotient-rank", PropertyStatus::Fail, "applicability disagrees with the oracle");
  }
  if (!applicable) return result(e, "central-quotient-rank", PropertyStatus::NotApplicable);
  // Q = C_{p^a1} x ... satisfies r >= 2 and a1 = a2 exactly when at most
  // |Q| / p^2 elements have order below the exponent.
  const std::size_t below = q.group.exponent() / p;
  std::size_t small = 0;
  for (Elem x = 0; x < n; ++x) small += q.group.power(x, static_cast<long long>(below)) == 0 ? 1 : 0;
  const bool oracle = small * p * p <= n;
  if (oracle != profile.rank_condition_holds) {
    return result(e, "central-quotient-rank", PropertyStatus::Fail, "rank condition disagrees with the oracle");
  }
  if (!oracle) {
    return result(e, "central-quotient-rank", PropertyStatus::Fail, "G/Z has a cyclic factor of unique maximal order");
  }
  return result(e, "central-quotient-rank", PropertyStatus::Pass);
}

PropertyResult coprime_triviality(const CatalogEntry& e, const AutGroup& aut, std::size_t max_order) {
  const Group& g = e.group;
  if (g.order() > max_order) return result(e, "coprime-triviality", PropertyStatus::Skipped, "order above sweep limit");
  if (!aut.elements_complete) {
    return result(e, "coprime-triviality", PropertyStatus::Skipped, "automorphism list not materialized");
  }
  const auto normals = normal_subgroups(g);
  const std::size_t n = g.order();
  for (const Perm& f : aut.elements) {
    if (f == identity_perm(n) || std::gcd(perm_order(f), n) != 1) continue;
    for (const Subgroup& nsub : normals) {
      const bool fixes_n = std::all_of(nsub.members().begin(), nsub.members().end(), [&](Elem x) { return f[x] == x; });
      if (!fixes_n) continue;
      bool fixes_cosets = true;
      for (Elem x = 0; x < n && fixes_cosets; ++x) fixes_cosets = nsub.contains(g.mul(g.inv(x), f[x]));
      if (fixes_cosets) {
        return result(e, "coprime-triviality", PropertyStatus::Fail,
                      "automorphism of order " + std::to_string(perm_order(f)) + " trivial on N and G/N, |N| = " +
                          std::to_string(nsub.size()));
      }
    }
  }
  return result(e, "coprime-triviality", PropertyStatus::Pass);
}

PropertyResult sylow_congruence(const CatalogEntry& e, const AutGroup&) {
  const Group& g = e.group;
  for (std::uint64_t p : prime_divisors(g.order())) {
    const SylowReport rep = sylow(g, p);
    if (rep.subgroup.size() != p_part(g.order(), p)) {
      return result(e, "sylow-congruence", PropertyStatus::Fail, "p = " + std::to_string(p) + ": wrong order");
    }
    std::set<std::vector<Elem>> conjugates;
    for (Elem h = 0; h < g.order(); ++h) {
      std::vector<Elem> m;
      for (Elem x : rep.subgroup.members()) m.push_back(g.conj(x, h));
      std::sort(m.begin(), m.end());
      conjugates.insert(std::move(m));
    }
    if (conjugates.size() != rep.conjugate_count || rep.conjugate_count % p != 1 % p ||
        rep.is_normal != (rep.conjugate_count == 1)) {
      return result(e, "sylow-congruence", PropertyStatus::Fail,
                    "p = " + std::to_string(p) + ": count " + std::to_string(rep.conjugate_count) + ", oracle " +
                        std::to_string(conjugates.size()));
    }
  }
  return result(e, "sylow-congruence", PropertyStatus::Pass);
}

PropertyResult sylow_splitting(const CatalogEntry& e, const AutGroup&) {
  const Group& g = e.group;
  bool any = false;
  for (std::uint64_t p : prime_divisors(g.order())) {
    const SylowReport rep = sylow(g, p);
    if (!rep.is_normal) continue;
    any = true;
    const auto found = find_complement(g, rep.subgroup);
    if (!found.complement) {
      return result(e, "sylow-splitting", PropertyStatus::Fail,
                    "p = " + std::to_string(p) + (found.budget_exhausted ? ": budget exhausted" : ": no complement"));
    }
    const Subgroup& b = *found.complement;
    const auto& bm = b.members();
    bool closed = true;
    for (Elem x : bm) {
      for (Elem y : bm) closed = closed && b.contains(g.mul(x, y));
    }
    const bool meets_trivially = std::none_of(bm.begin(), bm.end(), [&](Elem x) { return x != 0 && rep.subgroup.contains(x); });
    if (!closed || !meets_trivially || b.size() * rep.subgroup.size() != g.order()) {
      return result(e, "sylow-splitting", PropertyStatus::Fail, "p = " + std::to_string(p) + ": invalid complement");
    }
  }
  return result(e, "sylow-splitting", any ? PropertyStatus::Pass : PropertyStatus::NotApplicable);
}

PropertyResult characteristic_ea(const CatalogEntry& e, const AutGroup& aut) {
  const Group& g = e.group;
  if (g.order() % 2 == 0 || g.order() == 1) return result(e, "characteristic-elementary-abelian", PropertyStatus::NotApplicable);
  const Subgroup s = characteristic_elementary_abelian(g, aut.generators);
  const auto& m = s.members();
  const std::uint64_t p = prime_divisors(s.size()).front();
  bool ok = s.size() > 1 && prime_divisors(s.size()).size() == 1;
  for (Elem x : m) {
    ok = ok && g.power(x, static_cast<long long>(p)) == 0;
    for (Elem y : m) ok = ok && g.mul(x, y) == g.mul(y, x);
  }
  const auto& maps = aut.elements_complete ? aut.elements : aut.generators;
  for (const Perm& f : maps) {
    for (Elem x : m) ok = ok && s.contains(f[x]);
  }
  return result(e, "characteristic-elementary-abelian", ok ? PropertyStatus::Pass : PropertyStatus::Fail,
                ok ? "" : "subgroup of order " + std::to_string(s.size()) + " fails the oracle");
}

}  // namespace

PropertyReport run_property_suites(const std::vector<CatalogEntry>& catalog, const PropertyOptions& options) {
  const std::vector<std::pair<const char*, Check>> checks{
      {"central-inner", central_inner},
      {"central-hom-count", central_hom_count},
      {"central-quotient-rank", central_quotient_rank},
      {"coprime-triviality",
       [&](const CatalogEntry& e, const AutGroup& a) { return coprime_triviality(e, a, options.coprime_max_order); }},
      {"sylow-congruence", sylow_congruence},
      {"sylow-splitting", sylow_splitting},
      {"characteristic-elementary-abelian", characteristic_ea},
  };
  PropertyReport report;
  for (const CatalogEntry& e : catalog) {
    std::optional<AutGroup> aut;
    std::string aut_error;
    try {
      aut = automorphism_group(e.group, options.aut_budget);
    } catch (const Error& err) {
      aut_error = err.what();
    }
    for (const auto& [name, check] : checks) {
      if (!aut) {
        report.results.push_back({e.name, name, PropertyStatus::Fail, aut_error});
        continue;
      }
      try {
        report.results.push_back(check(e, *aut));
      } catch (const Error& err) {
        report.results.push_back({e.name, name, PropertyStatus::Fail, err.what()});
      }
    }
  }
  return report;
}

}  // namespace oddaut
