#include "oddaut/aut.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <unordered_set>

#include "oddaut/numtheory.hpp"
#include "oddaut/structure.hpp"

namespace oddaut {
namespace {

constexpr Elem kUnset = ~Elem{0};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (Elem x : p) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Size of <H, extra> where `members` lists a subgroup H (closed) and
/// `gens` generates it.
std::size_t closure_size(const Group& g, std::vector<std::uint8_t>& mark, const std::vector<Elem>& members,
                         const std::vector<Elem>& gens, Elem extra, std::vector<Elem>& scratch) {
  scratch.assign(members.begin(), members.end());
  for (Elem h : members) mark[h] = 1;
  for (std::size_t i = 0; i < scratch.size(); ++i) {
    const Elem h = scratch[i];
    auto visit = [&](Elem s) {
      const Elem p = g.mul(h, s);
      if (!mark[p]) {
        mark[p] = 1;
        scratch.push_back(p);
      }
    };
    visit(extra);
    for (Elem s : gens) visit(s);
  }
  for (Elem h : scratch) mark[h] = 0;
  return scratch.size();
}

/// Backtracking state over images of a fixed generating sequence.
class Searcher {
 public:
  Searcher(const Group& g, std::vector<Elem> base, const Fingerprints& fp, std::uint64_t budget,
           SearchStats& stats)
      : g_(g), base_(std::move(base)), fp_(fp), budget_(budget), stats_(stats) {
    const std::size_t n = g.order();
    images_.assign(n, kUnset);
    used_.assign(n, 0);
    images_[0] = 0;
    used_[0] = 1;
    gen_image_.assign(base_.size(), kUnset);
    build_plan();
  }

  std::size_t depth() const noexcept { return base_.size(); }
  const std::vector<Elem>& candidates(std::size_t level) const { return levels_[level].candidates; }
  const Perm& images() const noexcept { return images_; }

  /// Extends the partial map to the next generator with image y. On
  /// failure the state is left unchanged.
  bool assign(std::size_t level, Elem y) {
    if (++stats_.nodes_visited > budget_) {
      fail(ErrorKind::BudgetExceeded, "automorphism search exceeded " + std::to_string(budget_) + " nodes");
    }
    gen_image_[level] = y;
    const Level& lv = levels_[level];
    std::size_t done = 0;
    bool ok = true;
    for (const Step& st : lv.steps) {
      const Elem img = g_.mul(images_[st.parent], gen_image_[st.gen]);
      if (used_[img]) {
        ok = false;
        break;
      }
      if (fp_.id[img] != fp_.id[st.target]) {
        if (fp_.order[img] != fp_.order[st.target]) {
          ++stats_.pruned_by_order;
        } else {
          ++stats_.pruned_by_class;
        }
        ok = false;
        break;
      }
      images_[st.target] = img;
      used_[img] = 1;
      ++done;
    }
    if (ok) {
      for (const Check& c : lv.checks) {
        if (images_[c.prod] != g_.mul(images_[c.h], gen_image_[c.gen])) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) {
      rollback(lv, done);
      gen_image_[level] = kUnset;
    }
    return ok;
  }

  void undo(std::size_t level) {
    rollback(levels_[level], levels_[level].steps.size());
    gen_image_[level] = kUnset;
  }

  void undo_from(std::size_t level) {
    for (std::size_t l = depth(); l-- > level;) undo(l);
  }

  /// Completes levels >= level; on success the assignment stays in place.
  bool extend(std::size_t level) {
    if (level == depth()) return true;
    for (Elem y : levels_[level].candidates) {
      if (!assign(level, y)) continue;
      if (extend(level + 1)) return true;
      undo(level);
    }
    return false;
  }

  /// Visits every completion of levels >= level; false once `visit` asked to stop.
  bool visit_all(std::size_t level, const std::function<bool(Elem, Elem)>& allowed,
                 const std::function<bool(const Perm&)>& visit) {
    if (level == depth()) return visit(images_);
    for (Elem y : levels_[level].candidates) {
      if (!allowed(base_[level], y)) continue;
      if (!assign(level, y)) continue;
      const bool go_on = visit_all(level + 1, allowed, visit);
      undo(level);
      if (!go_on) return false;
    }
    return true;
  }

 private:
  struct Step {
    Elem target;
    Elem parent;
    std::uint32_t gen;
  };
  struct Check {
    Elem h;
    Elem prod;
    std::uint32_t gen;
  };
  struct Level {
    std::vector<Step> steps;
    std::vector<Check> checks;
    std::vector<Elem> candidates;
  };

  void rollback(const Level& lv, std::size_t count) {
    for (std::size_t k = count; k-- > 0;) {
      const Elem t = lv.steps[k].target;
      used_[images_[t]] = 0;
      images_[t] = kUnset;
    }
  }

  // Level i closes <g_1..g_{i-1}> under right multiplication by g_1..g_i.
  // Edges leaving the old subgroup only need the new generator; edges
  // leaving new elements need every generator so far.
  void build_plan() {
    const std::size_t n = g_.order();
    std::vector<std::uint8_t> in(n, 0);
    std::vector<Elem> closure{0};
    in[0] = 1;
    levels_.resize(base_.size());
    for (std::uint32_t i = 0; i < base_.size(); ++i) {
      Level& lv = levels_[i];
      const std::size_t old_size = closure.size();
      for (std::size_t idx = 0; idx < closure.size(); ++idx) {
        const Elem h = closure[idx];
        const std::uint32_t first = idx < old_size ? i : 0;
        for (std::uint32_t j = first; j <= i; ++j) {
          const Elem p = g_.mul(h, base_[j]);
          if (!in[p]) {
            in[p] = 1;
            closure.push_back(p);
            lv.steps.push_back({p, h, j});
          } else {
            lv.checks.push_back({h, p, j});
          }
        }
      }
      const std::uint32_t want = fp_.id[base_[i]];
      for (Elem y = 0; y < n; ++y) {
        if (fp_.id[y] == want) lv.candidates.push_back(y);
      }
    }
    require(closure.size() == n, ErrorKind::InvariantViolation, "base does not generate the group");
  }

  const Group& g_;
  std::vector<Elem> base_;
  const Fingerprints& fp_;
  std::uint64_t budget_;
  SearchStats& stats_;
  std::vector<Level> levels_;
  Perm images_;
  std::vector<std::uint8_t> used_;
  std::vector<Elem> gen_image_;
};

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

Fingerprints fingerprints(const Group& g) {
  const std::size_t n = g.order();
  const ConjugacyClasses cc = conjugacy_classes(g);
  const auto primes = prime_divisors(n);
  // pow[k][x] = x^{primes[k]}, roots[k][x] = #{y : y^{primes[k]} = x}.
  std::vector<std::vector<Elem>> pow(primes.size(), std::vector<Elem>(n));
  std::vector<std::vector<std::uint32_t>> roots(primes.size(), std::vector<std::uint32_t>(n, 0));
  for (std::size_t k = 0; k < primes.size(); ++k) {
    for (Elem x = 0; x < n; ++x) {
      pow[k][x] = g.power(x, static_cast<long long>(primes[k]));
      ++roots[k][pow[k][x]];
    }
  }
  Fingerprints fp;
  fp.id.resize(n);
  fp.order.resize(n);
  std::map<std::vector<std::uint64_t>, std::uint32_t> ids;
  std::vector<std::uint64_t> key;
  for (Elem x = 0; x < n; ++x) {
    const std::size_t ord = g.element_order(x);
    fp.order[x] = static_cast<std::uint32_t>(ord);
    key.assign({ord, cc.sizes[cc.class_of[x]]});
    for (std::size_t k = 0; k < primes.size(); ++k) {
      const Elem y = pow[k][x];
      key.push_back(roots[k][x]);
      if (ord % primes[k] == 0) {
        key.push_back(cc.sizes[cc.class_of[y]]);
        key.push_back(roots[k][y]);
      }
    }
    auto [it, inserted] = ids.try_emplace(key, static_cast<std::uint32_t>(ids.size()));
    fp.id[x] = it->second;
  }
  return fp;
}

std::vector<Elem> greedy_generating_set(const Group& g) {
  const std::size_t n = g.order();
  std::vector<Elem> gens;
  std::vector<Elem> members{0};
  std::vector<std::uint8_t> in(n, 0), mark(n, 0);
  in[0] = 1;
  std::vector<Elem> scratch, best_members;
  while (members.size() < n) {
    Elem best = 0;
    std::size_t best_size = 0;
    for (Elem x = 1; x < n; ++x) {
      if (in[x]) continue;
      const std::size_t s = closure_size(g, mark, members, gens, x, scratch);
      if (s > best_size) {
        best_size = s;
        best = x;
        best_members = scratch;
        if (s == n) break;
      }
    }
    gens.push_back(best);
    members = std::move(best_members);
    for (Elem h : members) in[h] = 1;
  }
  return gens;
}

std::vector<Elem> orbit(Elem x, std::span<const Perm> maps) {
  std::vector<Elem> out{x};
  if (maps.empty()) return out;
  std::vector<std::uint8_t> seen(maps.front().size(), 0);
  seen[x] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const Perm& m : maps) {
      const Elem y = m[out[i]];
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  }
  return out;
}

std::vector<Perm> close_permutations(std::size_t degree, std::span<const Perm> generators, std::size_t limit) {
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> out;
  Perm id = identity_perm(degree);
  seen.insert(id);
  out.push_back(std::move(id));
  Perm next(degree);
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const Perm& s : generators) {
      kernels::gather(next, s, out[i]);
      if (seen.insert(next).second) {
        if (out.size() >= limit) {
          fail(ErrorKind::BudgetExceeded, "permutation closure exceeds " + std::to_string(limit) + " elements");
        }
        out.push_back(next);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

AutGroup automorphism_group(const Group& g, std::uint64_t budget, std::size_t element_limit) {
  const auto start = std::chrono::steady_clock::now();
  AutGroup aut;
  aut.parent = &g;
  const std::size_t n = g.order();
  if (n == 1) {
    aut.elements = {identity_perm(1)};
    aut.elements_complete = true;
    return aut;
  }
  aut.base = greedy_generating_set(g);
  const Fingerprints fp = fingerprints(g);
  Searcher s(g, aut.base, fp, budget, aut.stats);
  const std::size_t m = s.depth();
  for (std::size_t l = 0; l < m; ++l) {
    require(s.assign(l, aut.base[l]), ErrorKind::InvariantViolation, "identity map rejected");
  }
  aut.orbit_lengths.assign(m, 1);
  for (std::size_t i = m; i-- > 0;) {
    s.undo(i);
    std::vector<Elem> orb = orbit(aut.base[i], aut.generators);
    std::vector<std::uint8_t> in_orbit(n, 0);
    for (Elem y : orb) in_orbit[y] = 1;
    for (Elem y : s.candidates(i)) {
      if (in_orbit[y]) continue;
      if (!s.assign(i, y)) continue;
      if (s.extend(i + 1)) {
        aut.generators.push_back(s.images());
        s.undo_from(i + 1);
        orb = orbit(aut.base[i], aut.generators);
        for (Elem z : orb) in_orbit[z] = 1;
      }
      s.undo(i);
    }
    aut.orbit_lengths[i] = orb.size();
    aut.order *= orb.size();
  }
  if (aut.order <= element_limit &&
      aut.order * n <= BigInt(static_cast<std::uint64_t>(element_limit) * 256)) {
    aut.elements = close_permutations(n, aut.generators, element_limit + 1);
    require(BigInt(aut.elements.size()) == aut.order, ErrorKind::InvariantViolation,
            "closure of strong generators disagrees with orbit product");
    aut.elements_complete = true;
  }
  aut.stats.wall_time_ms = elapsed_ms(start);
  return aut;
}

void visit_automorphisms(const Group& g, const std::function<bool(Elem, Elem)>& allowed,
                         const std::function<bool(const Perm&)>& visit, std::uint64_t budget) {
  if (g.order() == 1) {
    visit(identity_perm(1));
    return;
  }
  SearchStats stats;
  const Fingerprints fp = fingerprints(g);
  Searcher s(g, greedy_generating_set(g), fp, budget, stats);
  s.visit_all(0, allowed, visit);
}

std::vector<Perm> enumerate_automorphisms(const Group& g, const std::function<bool(Elem, Elem)>& allowed,
                                          std::uint64_t budget) {
  std::vector<Perm> out;
  visit_automorphisms(
      g, allowed,
      [&](const Perm& p) {
        out.push_back(p);
        return true;
      },
      budget);
  std::sort(out.begin(), out.end());
  return out;
}

InnerAutomorphisms inner_automorphisms(const Group& g) {
  const std::size_t n = g.order();
  InnerAutomorphisms out;
  std::unordered_set<Perm, PermHash> seen;
  Perm p(n);
  for (Elem h = 0; h < n; ++h) {
    for (Elem x = 0; x < n; ++x) p[x] = g.conj(x, h);
    if (seen.insert(p).second) {
      out.maps.push_back(p);
      out.representatives.push_back(h);
    }
  }
  require(out.maps.size() * center(g).size() == n, ErrorKind::InvariantViolation,
          "|Inn(G)| differs from |G/Z(G)|");
  return out;
}

NiReport is_ni(const Group& g, const AutGroup& aut) {
  NiReport r;
  const std::size_t n = g.order();
  r.aut_order_odd = (aut.order % 2) == 1;
  if (n == 1) {
    r.trivial_group = true;
    r.no_inversion = true;
    return r;
  }
  r.no_inversion = true;
  std::vector<std::uint8_t> done(n, 0);
  for (Elem x = 1; x < n && r.no_inversion; ++x) {
    if (done[x]) continue;
    const auto orb = orbit(x, aut.generators);
    for (Elem y : orb) done[y] = 1;
    const Elem xi = g.inv(x);
    if (std::find(orb.begin(), orb.end(), xi) != orb.end()) {
      r.no_inversion = false;
      r.inverted_element = x;
    }
  }
  if (n % 2 == 1) {
    require(r.aut_order_odd == r.no_inversion, ErrorKind::InvariantViolation,
            "odd-order group: |Aut| parity disagrees with the inversion criterion");
  }
  return r;
}

bool is_characteristic(const Subgroup& s, const AutGroup& aut) { return is_invariant(s, aut.generators); }

}  // namespace oddaut
