#include "oddaut/group.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace oddaut {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorKind::NotAnAction: return "NotAnAction";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::PrimeDoesNotDivide: return "PrimeDoesNotDivide";
    case ErrorKind::NotOddOrder: return "NotOddOrder";
    case ErrorKind::TrivialGroup: return "TrivialGroup";
    case ErrorKind::IsElementaryAbelian: return "IsElementaryAbelian";
    case ErrorKind::NotAbelian: return "NotAbelian";
    case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::NotCommuting: return "NotCommuting";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::ConditionViolated: return "ConditionViolated";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotElementaryAbelian: return "NotElementaryAbelian";
    case ErrorKind::ActionNotCoprime: return "ActionNotCoprime";
    case ErrorKind::NoCentralSolution: return "NoCentralSolution";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::NonUniqueSolution: return "NonUniqueSolution";
    case ErrorKind::TrivialAction: return "TrivialAction";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::NotTrivialOnIntersection: return "NotTrivialOnIntersection";
    case ErrorKind::DoesNotCommuteWithAction: return "DoesNotCommuteWithAction";
    case ErrorKind::NotWellDefined: return "NotWellDefined";
    case ErrorKind::ExponentTwo: return "ExponentTwo";
    case ErrorKind::RuleSetIncomplete: return "RuleSetIncomplete";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

namespace {

std::atomic<std::size_t>& cap_storage() {
  static std::atomic<std::size_t> cap = [] {
    std::size_t value = 4096;
    if (const char* env = std::getenv("ODDAUT_CAP")) {
      char* end = nullptr;
      unsigned long long parsed = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && parsed > 0) value = static_cast<std::size_t>(parsed);
    }
    return value;
  }();
  return cap;
}

constexpr std::size_t kExhaustiveAssociativityLimit = 512;
constexpr std::size_t kAssociativitySamples = 100000;

void check_cap(std::size_t order, const std::string& what) {
  if (order > order_cap()) {
    fail(ErrorKind::OrderCapExceeded,
         what + " has order " + std::to_string(order) + " above the cap " + std::to_string(order_cap()));
  }
}

std::string triple(std::size_t a, std::size_t b, std::size_t c) {
  std::ostringstream out;
  out << "(" << a << "," << b << "," << c << ")";
  return out.str();
}

}  // namespace

std::size_t order_cap() { return cap_storage().load(); }
void set_order_cap(std::size_t cap) {
  require(cap > 0, ErrorKind::InvalidParameter, "order cap must be positive");
  cap_storage().store(cap);
}

// ---------------------------------------------------------------------------
// Group

Group Group::from_cayley_table(const std::vector<std::vector<Elem>>& table, std::string name) {
  const std::size_t n = table.size();
  std::vector<Elem> flat;
  flat.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (table[r].size() != n) {
      fail(ErrorKind::NotAGroup, "row " + std::to_string(r) + " has " + std::to_string(table[r].size()) +
                                     " entries, expected " + std::to_string(n));
    }
    flat.insert(flat.end(), table[r].begin(), table[r].end());
  }
  return from_flat(n, std::move(flat), std::move(name));
}

Group Group::from_flat(std::size_t n, std::vector<Elem> flat, std::string name) {
  require(n >= 1, ErrorKind::NotAGroup, "empty table");
  require(flat.size() == n * n, ErrorKind::NotAGroup, "table is not square");
  check_cap(n, "table '" + name + "'");
  for (std::size_t i = 0; i < flat.size(); ++i) {
    if (flat[i] >= n) {
      fail(ErrorKind::NotAGroup, "entry at row " + std::to_string(i / n) + " column " + std::to_string(i % n) +
                                     " is out of range");
    }
  }

  auto at = [&](std::size_t a, std::size_t b) { return flat[a * n + b]; };
  std::size_t identity = n;
  for (std::size_t e = 0; e < n && identity == n; ++e) {
    bool ok = true;
    for (std::size_t h = 0; h < n && ok; ++h) ok = at(e, h) == h && at(h, e) == h;
    if (ok) identity = e;
  }
  require(identity < n, ErrorKind::NotAGroup, "no two-sided identity element");
  if (identity != 0) {
    auto relabel = [&](Elem x) -> Elem {
      if (x == 0) return static_cast<Elem>(identity);
      if (x == identity) return 0;
      return x;
    };
    std::vector<Elem> moved(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) moved[relabel(a) * n + relabel(b)] = relabel(at(a, b));
    }
    flat = std::move(moved);
  }

  std::vector<std::uint8_t> seen(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t c = 0; c < n; ++c) {
      if (seen[flat[r * n + c]]++) fail(ErrorKind::NotAGroup, "row " + std::to_string(r) + " is not a permutation");
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t r = 0; r < n; ++r) {
      if (seen[flat[r * n + c]]++) {
        fail(ErrorKind::NotAGroup, "column " + std::to_string(c) + " is not a permutation");
      }
    }
  }

  Group g;
  g.order_ = n;
  g.table_ = std::move(flat);
  g.name_ = std::move(name);
  g.inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    auto row = g.row(static_cast<Elem>(a));
    auto it = std::find(row.begin(), row.end(), Elem{0});
    Elem x = static_cast<Elem>(it - row.begin());
    if (g.mul(x, static_cast<Elem>(a)) != 0) {
      fail(ErrorKind::NotAGroup, "element " + std::to_string(a) + " has no two-sided inverse");
    }
    g.inverse_[a] = x;
  }

  if (n <= kExhaustiveAssociativityLimit) {
    g.assoc_ = AssociativityCheck::Exhaustive;
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        Elem ab = g.mul(a, b);
        // (ab)c == a(bc) for every c
        if (!kernels::gather_equals(g.row(ab), g.row(a), g.row(b))) {
          for (Elem c = 0; c < n; ++c) {
            if (g.mul(ab, c) != g.mul(a, g.mul(b, c))) {
              fail(ErrorKind::NotAGroup, "associativity fails at " + triple(a, b, c));
            }
          }
        }
      }
    }
  } else {
    g.assoc_ = AssociativityCheck::Sampled;
    std::mt19937_64 rng(0x5eedULL ^ n);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
    for (std::size_t s = 0; s < kAssociativitySamples; ++s) {
      Elem a = pick(rng), b = pick(rng), c = pick(rng);
      if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
        fail(ErrorKind::NotAGroup, "associativity fails at " + triple(a, b, c));
      }
    }
  }
  return g;
}

Elem Group::power(Elem g, long long k) const {
  if (k < 0) {
    g = inv(g);
    k = -k;
  }
  Elem result = 0;
  Elem base = g;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::size_t Group::element_order(Elem g) const {
  std::size_t k = 1;
  for (Elem x = g; x != 0; x = mul(x, g)) ++k;
  return k;
}

std::size_t Group::exponent() const {
  std::size_t e = 1;
  for (Elem g = 0; g < order_; ++g) e = std::lcm(e, element_order(g));
  return e;
}

bool Group::is_abelian() const {
  for (Elem a = 0; a < order_; ++a) {
    for (Elem b = a + 1; b < order_; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

std::vector<std::vector<Elem>> Group::table() const {
  std::vector<std::vector<Elem>> out(order_);
  for (Elem a = 0; a < order_; ++a) out[a].assign(row(a).begin(), row(a).end());
  return out;
}

Group Group::renamed(std::string name) const {
  Group g = *this;
  g.name_ = std::move(name);
  return g;
}

// ---------------------------------------------------------------------------
// Subgroup

struct SubgroupAccess {
  static Subgroup make(const Group& parent, std::vector<Elem> members, std::vector<Elem> generators) {
    return Subgroup(parent, std::move(members), std::move(generators));
  }
};

Subgroup::Subgroup(const Group& parent, std::vector<Elem> members, std::vector<Elem> generators)
    : parent_(&parent), members_(std::move(members)), generators_(std::move(generators)), mask_(parent.order()) {
  std::sort(members_.begin(), members_.end());
  for (Elem m : members_) mask_[m] = 1;
}

namespace {

/// Keeps each member not yet in the closure of the members kept so far.
std::vector<Elem> greedy_generators(const Group& parent, const std::vector<Elem>& members) {
  std::vector<Elem> gens;
  std::vector<std::uint8_t> covered(parent.order(), 0);
  covered[0] = 1;
  std::size_t covered_count = 1;
  for (Elem x : members) {
    if (covered[x]) continue;
    gens.push_back(x);
    const Subgroup closure = generated_subgroup(parent, gens);
    for (Elem y : closure.members()) {
      covered_count += covered[y] ? 0 : 1;
      covered[y] = 1;
    }
    if (covered_count == members.size()) break;
  }
  return gens;
}

}  // namespace

Subgroup Subgroup::from_members(const Group& parent, std::vector<Elem> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  require(!members.empty() && members.front() == 0, ErrorKind::InvalidParameter, "subset lacks the identity");
  require(members.back() < parent.order(), ErrorKind::InvalidParameter, "member index out of range");
  Subgroup s(parent, std::move(members), {});
  for (Elem a : s.members_) {
    for (Elem b : s.members_) {
      require(s.contains(parent.mul(a, b)), ErrorKind::InvalidParameter, "subset is not closed under the product");
    }
  }
  require(parent.order() % s.size() == 0, ErrorKind::InvariantViolation, "subgroup order does not divide group order");
  s.generators_ = greedy_generators(parent, s.members_);
  return s;
}

Subgroup generated_subgroup(const Group& g, std::span<const Elem> gens) {
  std::vector<Elem> kept;
  for (Elem x : gens) {
    require(x < g.order(), ErrorKind::InvalidParameter, "generator index out of range");
    if (x != 0) kept.push_back(x);
  }
  std::vector<std::uint8_t> mask(g.order());
  std::vector<Elem> members{0};
  mask[0] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Elem s : kept) {
      Elem y = g.mul(members[i], s);
      if (!mask[y]) {
        mask[y] = 1;
        members.push_back(y);
      }
    }
  }
  if (g.order() % members.size() != 0) {
    fail(ErrorKind::InvariantViolation, "generated subgroup order does not divide group order");
  }
  return SubgroupAccess::make(g, std::move(members), std::move(kept));
}

Subgroup whole_group(const Group& g) {
  std::vector<Elem> all(g.order());
  std::iota(all.begin(), all.end(), Elem{0});
  return SubgroupAccess::make(g, std::move(all), simple_generating_set(g));
}

std::vector<Elem> simple_generating_set(const Group& g) {
  std::vector<Elem> gens;
  std::vector<std::uint8_t> mask(g.order());
  std::vector<Elem> members{0};
  mask[0] = 1;
  for (Elem x = 1; x < g.order() && members.size() < g.order(); ++x) {
    if (mask[x]) continue;
    gens.push_back(x);
    // Earlier members must also be multiplied by the new generator.
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (Elem s : gens) {
        Elem y = g.mul(members[i], s);
        if (!mask[y]) {
          mask[y] = 1;
          members.push_back(y);
        }
      }
    }
  }
  return gens;
}

Subgroup trivial_subgroup(const Group& g) { return SubgroupAccess::make(g, {0}, {}); }

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  std::vector<Elem> common;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                        std::back_inserter(common));
  std::vector<Elem> gens = greedy_generators(a.parent(), common);
  return SubgroupAccess::make(a.parent(), std::move(common), std::move(gens));
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  std::vector<Elem> gens = a.generators().empty() ? a.members() : a.generators();
  const auto& more = b.generators().empty() ? b.members() : b.generators();
  gens.insert(gens.end(), more.begin(), more.end());
  return generated_subgroup(a.parent(), gens);
}

// ---------------------------------------------------------------------------
// Maps

bool is_homomorphism(const Group& source, const Group& target, std::span<const Elem> images) {
  if (images.size() != source.order()) return false;
  for (Elem x : images) {
    if (x >= target.order()) return false;
  }
  for (Elem x = 0; x < source.order(); ++x) {
    // images[x*y] == images[x]*images[y] for every y
    if (!kernels::gather2_equals(images, source.row(x), target.row(images[x]), images)) return false;
  }
  return true;
}

bool is_bijection(std::span<const Elem> images) {
  std::vector<std::uint8_t> seen(images.size());
  for (Elem x : images) {
    if (x >= images.size() || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

Perm compose(std::span<const Elem> first, std::span<const Elem> second) {
  Perm out(first.size());
  kernels::gather(out, second, first);
  return out;
}

Perm inverse_perm(std::span<const Elem> p) {
  Perm out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<Elem>(i);
  return out;
}

Perm identity_perm(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), Elem{0});
  return p;
}

std::size_t perm_order(std::span<const Elem> p) {
  std::size_t result = 1;
  std::vector<std::uint8_t> seen(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

GroupMap::GroupMap(const Group& source, const Group& target, Perm images)
    : source_(&source), target_(&target), images_(std::move(images)) {
  require(images_.size() == source.order(), ErrorKind::InvalidParameter, "image sequence has the wrong length");
  require(is_homomorphism(source, target, images_), ErrorKind::InvalidParameter, "map is not a homomorphism");
}

bool GroupMap::is_bijective() const { return source_->order() == target_->order() && is_bijection(images_); }

// ---------------------------------------------------------------------------
// Actions

void ActionSpec::validate() const {
  require(acting != nullptr && acted != nullptr, ErrorKind::NotAnAction, "action has no groups attached");
  require(maps.size() == acting->order(), ErrorKind::NotAnAction, "one map per acting element is required");
  const std::size_t n = acted->order();
  for (std::size_t b = 0; b < maps.size(); ++b) {
    require(maps[b].size() == n && is_bijection(maps[b]) && is_homomorphism(*acted, *acted, maps[b]),
            ErrorKind::NotAnAction, "map for element " + std::to_string(b) + " is not an automorphism");
  }
  require(maps[0] == identity_perm(n), ErrorKind::NotAnAction, "identity does not act trivially");
  // Consistency on all b and a generating set of the acting group implies it everywhere.
  for (Elem g : simple_generating_set(*acting)) {
    for (Elem b = 0; b < acting->order(); ++b) {
      if (maps[acting->mul(b, g)] != compose(maps[b], maps[g])) {
        fail(ErrorKind::NotAnAction, "maps[" + std::to_string(b) + "*" + std::to_string(g) +
                                         "] differs from the composite of the two maps");
      }
    }
  }
}

bool ActionSpec::is_trivial() const {
  const Perm id = identity_perm(acted->order());
  return std::all_of(maps.begin(), maps.end(), [&](const Perm& m) { return m == id; });
}

ActionSpec trivial_action(const Group& acting, const Group& acted) {
  return ActionSpec{&acting, &acted, std::vector<Perm>(acting.order(), identity_perm(acted.order()))};
}

ActionSpec action_from_generators(const Group& acting, const Group& acted, std::span<const Elem> generators,
                                  const std::vector<Perm>& generator_maps) {
  require(generators.size() == generator_maps.size(), ErrorKind::NotAnAction, "one map per generator is required");
  ActionSpec spec{&acting, &acted, std::vector<Perm>(acting.order())};
  spec.maps[0] = identity_perm(acted.order());
  std::deque<Elem> queue{0};
  while (!queue.empty()) {
    Elem b = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < generators.size(); ++i) {
      Elem next = acting.mul(b, generators[i]);
      Perm map = compose(spec.maps[b], generator_maps[i]);
      if (spec.maps[next].empty()) {
        spec.maps[next] = std::move(map);
        queue.push_back(next);
      } else if (spec.maps[next] != map) {
        fail(ErrorKind::NotAnAction, "generator images violate a relation of the acting group");
      }
    }
  }
  for (const Perm& m : spec.maps) {
    require(!m.empty(), ErrorKind::NotAnAction, "generators do not generate the acting group");
  }
  spec.validate();
  return spec;
}

// ---------------------------------------------------------------------------
// Constructors

Group cyclic(std::size_t n) {
  require(n >= 1, ErrorKind::InvalidParameter, "cyclic order must be at least 1");
  check_cap(n, "cyclic group");
  std::vector<Elem> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) flat[a * n + b] = static_cast<Elem>((a + b) % n);
  }
  return Group::from_flat(n, std::move(flat), "C" + std::to_string(n));
}

Group abelian(const std::vector<std::size_t>& factors) {
  std::string name = "abelian[";
  Group g = cyclic(1);
  bool first = true;
  for (std::size_t d : factors) {
    require(d >= 2, ErrorKind::InvalidParameter, "invariant factors must be at least 2");
    g = first ? cyclic(d) : direct_product(g, cyclic(d));
    name += (first ? "" : ",") + std::to_string(d);
    first = false;
  }
  return g.renamed(name + "]");
}

Group direct_product(const Group& g, const Group& h) {
  const std::size_t m = h.order();
  const std::size_t n = g.order() * m;
  check_cap(n, "direct product " + g.name() + " x " + h.name());
  std::vector<Elem> flat(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      Elem a = g.mul(static_cast<Elem>(x / m), static_cast<Elem>(y / m));
      Elem b = h.mul(static_cast<Elem>(x % m), static_cast<Elem>(y % m));
      flat[x * n + y] = static_cast<Elem>(a * m + b);
    }
  }
  return Group::from_flat(n, std::move(flat), g.name() + "x" + h.name());
}

Group semidirect_product(const Group& a, const Group& b, const ActionSpec& action) {
  require(action.acting == &b && action.acted == &a, ErrorKind::NotAnAction,
          "action is not an action of the given groups");
  action.validate();
  const std::size_t m = b.order();
  const std::size_t n = a.order() * m;
  check_cap(n, "semidirect product " + a.name() + " : " + b.name());
  std::vector<Elem> flat(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const Elem a1 = static_cast<Elem>(x / m), b1 = static_cast<Elem>(x % m);
    const Perm& twist = action.maps[b.inv(b1)];
    for (std::size_t y = 0; y < n; ++y) {
      const Elem a2 = static_cast<Elem>(y / m), b2 = static_cast<Elem>(y % m);
      flat[x * n + y] = static_cast<Elem>(a.mul(a1, twist[a2]) * m + b.mul(b1, b2));
    }
  }
  std::string name = action.is_trivial() ? a.name() + "x" + b.name() : a.name() + ":" + b.name();
  return Group::from_flat(n, std::move(flat), name);
}

Group extraspecial(std::size_t p, bool exponent_p) {
  bool prime = p >= 3 && p % 2 == 1;
  for (std::size_t d = 3; d * d <= p && prime; d += 2) prime = p % d != 0;
  require(prime, ErrorKind::InvalidParameter, "extraspecial groups are built for odd primes only");
  if (exponent_p) {
    const std::size_t n = p * p * p;
    check_cap(n, "extraspecial group");
    std::vector<Elem> flat(n * n);
    // (x, y, z)(x', y', z') = (x + x', y + y', z + z' + x y')
    for (std::size_t u = 0; u < n; ++u) {
      std::size_t x = u / (p * p), y = (u / p) % p, z = u % p;
      for (std::size_t v = 0; v < n; ++v) {
        std::size_t x2 = v / (p * p), y2 = (v / p) % p, z2 = v % p;
        std::size_t rx = (x + x2) % p, ry = (y + y2) % p, rz = (z + z2 + x * y2) % p;
        flat[u * n + v] = static_cast<Elem>(rx * p * p + ry * p + rz);
      }
    }
    return Group::from_flat(n, std::move(flat), "He" + std::to_string(p));
  }
  Group base = cyclic(p * p);
  Group top = cyclic(p);
  std::vector<Elem> gens{1};
  ActionSpec action = action_from_generators(top, base, gens, {cyclic_power_map(p * p, p + 1)});
  return semidirect_product(base, top, action).renamed("M" + std::to_string(p * p * p));
}

Group permutation_group(std::size_t degree, const std::vector<Perm>& generators, std::string name) {
  for (const Perm& g : generators) {
    require(g.size() == degree && is_bijection(g), ErrorKind::InvalidParameter, "generator is not a permutation");
  }
  std::vector<Perm> elements{identity_perm(degree)};
  std::map<Perm, Elem> index{{elements[0], 0}};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const Perm& g : generators) {
      Perm next = compose(elements[i], g);
      if (index.emplace(next, static_cast<Elem>(elements.size())).second) {
        elements.push_back(std::move(next));
        check_cap(elements.size(), "permutation group");
      }
    }
  }
  const std::size_t n = elements.size();
  std::vector<Elem> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) flat[a * n + b] = index.at(compose(elements[a], elements[b]));
  }
  return Group::from_flat(n, std::move(flat), std::move(name));
}

Quotient quotient(const Group& g, const Subgroup& n) {
  const auto& gens = n.generators().empty() ? n.members() : n.generators();
  for (Elem x : simple_generating_set(g)) {
    for (Elem s : gens) {
      if (!n.contains(g.conj(s, x))) fail(ErrorKind::NotNormal, "subgroup is not normal");
    }
  }
  const std::size_t count = g.order() / n.size();
  Perm label(g.order(), static_cast<Elem>(count));
  std::vector<Elem> reps;
  for (Elem x = 0; x < g.order(); ++x) {
    if (label[x] != count) continue;
    Elem id = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem m : n.members()) label[g.mul(x, m)] = id;
  }
  std::vector<Elem> flat(count * count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) flat[i * count + j] = label[g.mul(reps[i], reps[j])];
  }
  Group q = Group::from_flat(count, std::move(flat), g.name() + "/N" + std::to_string(n.size()));
  return Quotient{std::move(q), std::move(label), std::move(reps)};
}

InducedGroup induced_group(const Subgroup& s, std::string name) {
  const Group& g = s.parent();
  const auto& members = s.members();
  const std::size_t k = members.size();
  std::vector<Elem> local(g.order(), 0);
  for (std::size_t i = 0; i < k; ++i) local[members[i]] = static_cast<Elem>(i);
  std::vector<Elem> flat(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) flat[i * k + j] = local[g.mul(members[i], members[j])];
  }
  if (name.empty()) name = g.name() + "|" + std::to_string(k);
  return InducedGroup{Group::from_flat(k, std::move(flat), std::move(name)), members};
}

Perm cyclic_power_map(std::size_t n, std::size_t k) {
  Perm p(n);
  for (std::size_t x = 0; x < n; ++x) p[x] = static_cast<Elem>((x * k) % n);
  return p;
}

}  // namespace oddaut
