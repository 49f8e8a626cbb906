#include "oddaut/extend.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "oddaut/aut.hpp"
#include "oddaut/numtheory.hpp"
#include "oddaut/structure.hpp"

namespace oddaut {
namespace {

constexpr Elem kUnset = ~Elem{0};
using Coords = std::vector<std::uint32_t>;

/// Coordinates modulo a central kernel K: element -> c with
/// x = e_1^{c_1} ... e_n^{c_n} k for some k in K. Entries outside the
/// spanned subgroup stay empty.
struct CoordinateTable {
  std::vector<Coords> coords;
  std::uint64_t q = 0;

  const Coords& at(Elem x) const {
    require(!coords[x].empty(), ErrorKind::InvariantViolation, "element outside the coordinate range");
    return coords[x];
  }
};

Elem product_of_powers(const Group& g, const std::vector<Elem>& basis, const Coords& c) {
  Elem x = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) x = g.mul(x, g.power(basis[i], c[i]));
  return x;
}

Elem product_of_powers(const Group& g, const std::vector<Elem>& basis, const std::vector<std::uint64_t>& c,
                       int sign) {
  Elem x = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) x = g.mul(x, g.power(basis[i], sign * static_cast<long long>(c[i])));
  return x;
}

/// Fails with `kind` unless every product of basis powers times a kernel
/// element is distinct and `expected` elements are covered.
CoordinateTable coordinate_table(const Group& g, const std::vector<Elem>& basis, std::uint64_t q,
                                 const std::vector<Elem>& kernel, std::size_t expected, ErrorKind kind) {
  CoordinateTable t;
  t.q = q;
  t.coords.assign(g.order(), {});
  Coords c(basis.size(), 0);
  std::size_t filled = 0;
  while (true) {
    const Elem x = product_of_powers(g, basis, c);
    for (Elem k : kernel) {
      const Elem y = g.mul(x, k);
      require(t.coords[y].empty(), kind, "basis elements are not independent modulo the kernel");
      t.coords[y] = c;
      ++filled;
    }
    std::size_t i = 0;
    while (i < c.size() && c[i] + 1 == q) c[i++] = 0;
    if (i == c.size()) break;
    ++c[i];
  }
  require(filled == expected, kind, "basis does not span modulo the kernel");
  return t;
}

std::vector<Elem> commutators_of(const Group& g, const std::vector<Elem>& gens) {
  std::vector<Elem> out;
  for (Elem x : gens) {
    for (Elem y : gens) out.push_back(g.commutator(x, y));
  }
  return out;
}

bool all_in(const std::vector<Elem>& xs, const Subgroup& s) {
  return std::all_of(xs.begin(), xs.end(), [&](Elem x) { return s.contains(x); });
}

std::uint64_t exponent_of(const Group& g, const std::vector<Elem>& members) {
  std::uint64_t e = 1;
  for (Elem x : members) e = std::lcm<std::uint64_t>(e, g.element_order(x));
  return e;
}

/// Elements of `pool` in index order not yet generated together with `start`,
/// until `start` plus the picks generate `target_size` elements.
std::vector<Elem> greedy_basis(const Group& g, const std::vector<Elem>& pool, std::vector<Elem> start,
                               std::size_t target_size) {
  std::vector<Elem> picked;
  Subgroup current = generated_subgroup(g, start);
  for (Elem x : pool) {
    if (current.size() == target_size) break;
    if (current.contains(x)) continue;
    picked.push_back(x);
    start.push_back(x);
    current = generated_subgroup(g, start);
  }
  require(current.size() == target_size, ErrorKind::InvariantViolation, "greedy basis does not span");
  return picked;
}

std::vector<Elem> members_of(const Group& g) {
  std::vector<Elem> all(g.order());
  for (Elem x = 0; x < g.order(); ++x) all[x] = x;
  return all;
}

Vec combine_rows(std::uint32_t p, const Vec& coeffs, const std::vector<Vec>& rows) {
  Vec out(rows.front().size(), 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    for (std::size_t j = 0; j < out.size(); ++j) {
      out[j] = static_cast<std::uint32_t>((out[j] + static_cast<std::uint64_t>(coeffs[i]) * rows[i][j]) % p);
    }
  }
  return out;
}

/// New basis of A modulo Z ∩ A: the alpha chains of the non-trivial blocks
/// followed by the trivial representatives, in block order.
std::vector<Elem> flattened_basis(const NormalizedBasis& nb, bool normalized) {
  std::vector<Elem> out;
  for (const auto& blk : nb.blocks) {
    const auto& src = normalized ? blk.a : blk.alpha;
    out.insert(out.end(), src.begin(), src.end());
  }
  out.insert(out.end(), nb.trivial_representatives.begin(), nb.trivial_representatives.end());
  return out;
}

}  // namespace

ExtensionProblem make_problem(const Group& g, const Subgroup& a, const Subgroup& b) {
  require(&a.parent() == &g && &b.parent() == &g, ErrorKind::InvalidParameter, "subgroups of another group");
  require(is_normal(g, a), ErrorKind::HypothesisViolated, "A is not normal in G");
  // |AB| = |A||B|/|A ∩ B|.
  require(a.size() * b.size() == g.order() * intersection(a, b).size(), ErrorKind::HypothesisViolated,
          "G is not the product AB");
  return {&g, a, b};
}

ExtensionProblem semidirect_problem(const Group& g, std::size_t a_order, std::size_t b_order) {
  require(a_order * b_order == g.order(), ErrorKind::InvalidParameter, "orders do not multiply to |G|");
  std::vector<Elem> am, bm;
  for (Elem x = 0; x < a_order; ++x) am.push_back(static_cast<Elem>(x * b_order));
  for (Elem y = 0; y < b_order; ++y) bm.push_back(y);
  return make_problem(g, Subgroup::from_members(g, am), Subgroup::from_members(g, bm));
}

InducedAction induced_action(const ExtensionProblem& problem) {
  const Group& g = *problem.group;
  const Subgroup& a = problem.a;
  const Subgroup& b = problem.b;
  InducedAction act;
  const std::uint64_t p = p_group_prime(a.size());
  require(p != 0, ErrorKind::HypothesisViolated, "A is not a non-trivial p-group");
  require(p != 2, ErrorKind::HypothesisViolated, "A must have odd order");
  act.p = static_cast<std::uint32_t>(p);

  const Subgroup z = center(g);
  const Subgroup za = intersection(z, a);
  act.center_part = za.members();
  const auto a_comms = commutators_of(g, a.generators());
  require(all_in(a_comms, za), ErrorKind::HypothesisViolated,
          "A/(Z ∩ A) is not abelian (A has class above 2 or commutators are not central in G)");
  require(all_in(intersection(a, b).members(), z), ErrorKind::HypothesisViolated, "A ∩ B is not central");
  require(all_in(commutators_of(g, b.generators()), z), ErrorKind::HypothesisViolated, "B/(Z ∩ B) is not abelian");

  // Exponent of V and a basis of V lifted to A.
  std::uint64_t q = 1;
  std::vector<Elem> frattini = za.members();
  for (Elem x : a.members()) {
    std::uint64_t k = 1;
    Elem y = x;
    while (!za.contains(y)) {
      y = g.mul(y, x);
      ++k;
    }
    q = std::max(q, k);
    frattini.push_back(g.power(x, static_cast<long long>(p)));
  }
  act.q = q;
  const std::vector<Elem> phi_members = generated_subgroup(g, frattini).members();
  act.coset_basis = greedy_basis(g, a.members(), phi_members, a.size());
  act.dimension = act.coset_basis.size();
  require(ipow(q, static_cast<unsigned>(act.dimension)) * za.size() == a.size(), ErrorKind::NotElementaryAbelian,
          "A/(Z ∩ A) is not homocyclic");
  const CoordinateTable table =
      coordinate_table(g, act.coset_basis, q, act.center_part, a.size(), ErrorKind::InvariantViolation);

  std::set<std::vector<std::uint32_t>> integral;
  for (Elem x : b.members()) {
    std::vector<std::uint32_t> full;
    std::vector<long long> mod_p;
    for (Elem e : act.coset_basis) {
      const Coords& c = table.at(g.conj(e, x));
      full.insert(full.end(), c.begin(), c.end());
      mod_p.insert(mod_p.end(), c.begin(), c.end());
    }
    integral.insert(full);
    act.matrices.emplace_back(act.p, act.dimension, std::move(mod_p));
  }
  act.trivial = std::all_of(act.matrices.begin(), act.matrices.end(), [](const FpMatrix& m) { return m.is_identity(); });
  require(integral.size() % p != 0, ErrorKind::ActionNotCoprime,
          "B acts on A/(Z ∩ A) through a group of order " + std::to_string(integral.size()));
  return act;
}

NormalizedBasis normalize_basis(const ExtensionProblem& problem, const InducedAction& action,
                                const BlockDecomposition& blocks) {
  const Group& g = *problem.group;
  const std::uint32_t p = action.p;
  const std::uint64_t q = action.q;
  const Subgroup za = Subgroup::from_members(g, action.center_part);
  require(q == p || blocks.blocks.size() == 1, ErrorKind::HypothesisViolated,
          "A/(Z ∩ A) of exponent above p must be a single irreducible block");
  require(blocks.blocks.size() == 0 || action.matrices.size() == problem.b.size(), ErrorKind::InvalidParameter,
          "blocks must come from the matrices of every element of B");

  auto lift = [&](const Vec& v) {
    Coords c(v.begin(), v.end());
    return product_of_powers(g, action.coset_basis, c);
  };

  NormalizedBasis nb;
  for (std::size_t bi = 0; bi < blocks.blocks.size(); ++bi) {
    const Block& blk = blocks.blocks[bi];
    if (blk.trivial) {
      for (const Vec& v : blk.basis) nb.trivial_representatives.push_back(lift(v));
      continue;
    }
    require(blk.generator_index.has_value(), ErrorKind::HypothesisViolated,
            "no single element of B generates the action on a block");
    NormalizedBlock nbk;
    nbk.block_index = bi;
    nbk.b = problem.b.members()[*blk.generator_index];
    const CyclicBasis cb = cyclic_basis(blk.restricted[*blk.generator_index]);
    Elem x = lift(combine_rows(p, cb.basis.front(), blk.basis));
    for (std::size_t j = 0; j < blk.dimension; ++j) {
      nbk.alpha.push_back(x);
      x = g.conj(x, nbk.b);
    }
    nb.blocks.push_back(std::move(nbk));
  }

  const std::vector<Elem> basis = flattened_basis(nb, false);
  const CoordinateTable table =
      coordinate_table(g, basis, q, action.center_part, problem.a.size(), ErrorKind::InvariantViolation);
  const std::uint64_t e = exponent_of(g, action.center_part);
  std::size_t offset = 0;
  for (NormalizedBlock& blk : nb.blocks) {
    const std::size_t n = blk.alpha.size();
    const Coords& c = table.at(g.conj(blk.alpha.back(), blk.b));
    for (std::size_t i = 0; i < c.size(); ++i) {
      require(c[i] == 0 || (i >= offset && i < offset + n), ErrorKind::InvariantViolation,
              "block is not invariant under its generator");
    }
    blk.k.assign(c.begin() + static_cast<long>(offset), c.begin() + static_cast<long>(offset + n));
    std::uint64_t sum = 0;
    for (auto kj : blk.k) sum += kj;
    require(sum % p != 1, ErrorKind::ConditionViolated, "companion coefficients sum to 1 mod p");

    // sigma^q = (alpha_1^q)^-1 is solved by sigma = z_n^{-u}, u = (1 - sum k)^-1.
    const Elem zn = g.mul(g.conj(blk.alpha.back(), blk.b), g.inv(product_of_powers(g, blk.alpha, blk.k, 1)));
    require(za.contains(zn), ErrorKind::InvariantViolation, "companion defect is not central");
    blk.sigma = 0;
    if (e > 1) {
      const auto m = static_cast<std::int64_t>(((1 + e * sum) - sum) % e);
      const std::int64_t u = mod_inverse(m, static_cast<std::int64_t>(e));
      blk.sigma = g.power(zn, -u);
    }
    for (Elem al : blk.alpha) blk.a.push_back(g.mul(blk.sigma, al));
    for (Elem aj : blk.a) {
      require(g.power(aj, static_cast<long long>(q)) == 0, ErrorKind::NoCentralSolution,
              "no central adjuster brings the block basis to exponent " + std::to_string(q));
    }
    for (std::size_t j = 0; j + 1 < n; ++j) blk.z.push_back(g.mul(g.conj(blk.a[j], blk.b), g.inv(blk.a[j + 1])));
    blk.z.push_back(g.mul(g.conj(blk.a.back(), blk.b), g.inv(product_of_powers(g, blk.a, blk.k, 1))));
    for (Elem zj : blk.z) require(za.contains(zj), ErrorKind::InvariantViolation, "companion defect is not central");
    offset += n;
  }
  return nb;
}

ZetaSolution solve_zeta(const Group& g, const std::vector<Elem>& center_part, const std::vector<Elem>& a,
                        const std::vector<Elem>& z, const std::vector<std::uint64_t>& k) {
  const std::size_t n = a.size();
  require(n >= 1 && z.size() == n && k.size() == n, ErrorKind::InvalidParameter, "block data of mismatched length");
  const Subgroup za = Subgroup::from_members(g, center_part);
  auto sq = [&](Elem x) { return g.mul(x, x); };

  // Correction from reordering the products in a class-2 group.
  const Elem c = g.mul(product_of_powers(g, a, k, -1), product_of_powers(g, a, k, 1));
  require(za.contains(c), ErrorKind::HypothesisViolated, "commutator correction is not central");
  const Elem r = g.mul(sq(z.back()), c);

  auto satisfies = [&](const std::vector<Elem>& zeta) {
    for (std::size_t j = 0; j + 1 < n; ++j) {
      if (g.mul(zeta[j], g.inv(zeta[j + 1])) != sq(z[j])) return false;
    }
    Elem lhs = zeta.back();
    for (std::size_t j = 0; j < n; ++j) lhs = g.mul(lhs, g.power(zeta[j], -static_cast<long long>(k[j])));
    return lhs == r;
  };

  // zeta_j = W_j zeta_n with W_j = prod_{l >= j, l < n-1} z_l^2, then
  // zeta_n^{1 - sum k} = r prod W_j^{k_j}.
  std::vector<Elem> w(n, 0);
  for (std::size_t j = n - 1; j-- > 0;) w[j] = g.mul(sq(z[j]), w[j + 1]);
  Elem rhs = r;
  std::uint64_t sum = 0;
  for (std::size_t j = 0; j < n; ++j) {
    rhs = g.mul(rhs, g.power(w[j], static_cast<long long>(k[j])));
    sum += k[j];
  }
  const std::uint64_t e = exponent_of(g, center_part);
  Elem zeta_n = 0;
  if (e > 1) {
    const auto m = static_cast<std::int64_t>(((1 + e * sum) - sum) % e);
    require(std::gcd<std::int64_t>(m, static_cast<std::int64_t>(e)) == 1, ErrorKind::NoSolution,
            "1 - sum k is not invertible on Z ∩ A");
    zeta_n = g.power(rhs, mod_inverse(m, static_cast<std::int64_t>(e)));
  }
  ZetaSolution sol;
  for (std::size_t j = 0; j < n; ++j) sol.zeta.push_back(g.mul(w[j], zeta_n));
  for (Elem x : sol.zeta) require(za.contains(x), ErrorKind::NoSolution, "solution left Z ∩ A");
  require(satisfies(sol.zeta), ErrorKind::NoSolution, "back-substitution does not solve the system");

  if (center_part.size() <= 125) {
    // Exhaustive: extend prefixes only while the chain equations hold.
    std::size_t count = 0;
    std::vector<Elem> cur(n, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
      if (j == n) {
        if (satisfies(cur)) ++count;
        return;
      }
      for (Elem x : center_part) {
        cur[j] = x;
        if (j > 0 && g.mul(cur[j - 1], g.inv(x)) != sq(z[j - 1])) continue;
        rec(j + 1);
      }
    };
    rec(0);
    sol.exhaustive_count = count;
    require(count == 1, ErrorKind::NonUniqueSolution, std::to_string(count) + " central solutions");
  }
  return sol;
}

Perm extend_by_lemma_211(const ExtensionProblem& problem, const Perm& phi) {
  const Group& g = *problem.group;
  const Subgroup& a = problem.a;
  const Subgroup& b = problem.b;
  require(phi.size() == g.order(), ErrorKind::InvalidParameter, "phi must be indexed by elements of G");
  for (Elem x : b.members()) {
    if (a.contains(x)) require(phi[x] == x, ErrorKind::NotTrivialOnIntersection, "phi moves an element of A ∩ B");
  }
  for (Elem s : b.generators()) {
    for (Elem x : a.members()) {
      require(phi[g.conj(x, s)] == g.conj(phi[x], s), ErrorKind::DoesNotCommuteWithAction,
              "phi does not commute with conjugation by an element of B");
    }
  }
  Perm out(g.order(), kUnset);
  for (Elem x : a.members()) {
    for (Elem y : b.members()) {
      const Elem gy = g.mul(x, y);
      const Elem img = g.mul(phi[x], y);
      require(out[gy] == kUnset || out[gy] == img, ErrorKind::NotWellDefined, "ab -> (a phi) b is not well defined");
      out[gy] = img;
    }
  }
  require(std::find(out.begin(), out.end(), kUnset) == out.end(), ErrorKind::HypothesisViolated, "G != AB");
  require(is_bijection(out) && is_homomorphism(g, g, out), ErrorKind::NotWellDefined,
          "extended map is not an automorphism");
  return out;
}

Perm build_involution_cor212(const ExtensionProblem& problem) {
  const Group& g = *problem.group;
  const Subgroup& a = problem.a;
  require(all_in(commutators_of(g, a.generators()), trivial_subgroup(g)), ErrorKind::HypothesisViolated,
          "A is not abelian");
  require(a.size() > 2, ErrorKind::HypothesisViolated, "|A| must exceed 2");
  require(intersection(a, problem.b).is_trivial(), ErrorKind::HypothesisViolated, "A ∩ B is not trivial");
  require(exponent_of(g, a.members()) > 2, ErrorKind::ExponentTwo, "inversion is trivial on A");
  Perm phi = identity_perm(g.order());
  for (Elem x : a.members()) phi[x] = g.inv(x);
  Perm out = extend_by_lemma_211(problem, phi);
  verify_involution(problem, out);
  return out;
}

void verify_involution(const ExtensionProblem& problem, const Perm& map) {
  const Group& g = *problem.group;
  require(is_bijection(map) && is_homomorphism(g, g, map), ErrorKind::InvariantViolation, "not an automorphism");
  const Perm id = identity_perm(g.order());
  require(map != id && compose(map, map) == id, ErrorKind::InvariantViolation, "map does not have order 2");
  const Subgroup z = center(g);
  for (Elem x : z.members()) require(map[x] == x, ErrorKind::InvariantViolation, "center is not fixed");
  for (Elem x : problem.a.members()) require(problem.a.contains(map[x]), ErrorKind::InvariantViolation, "A is moved");
}

InvolutionCertificate build_involution_thm213(const ExtensionProblem& problem) {
  const Group& g = *problem.group;
  InvolutionCertificate cert;
  cert.action = induced_action(problem);
  require(!cert.action.trivial, ErrorKind::TrivialAction, "B acts trivially on A/(Z ∩ A)");
  cert.blocks = decompose(cert.action.matrices);
  cert.basis = normalize_basis(problem, cert.action, cert.blocks);
  for (NormalizedBlock& blk : cert.basis.blocks) {
    blk.zeta = solve_zeta(g, cert.action.center_part, blk.a, blk.z, blk.k).zeta;
  }

  // The map on A in normal form x = (prod basis^c) * central.
  const std::vector<Elem> basis = flattened_basis(cert.basis, true);
  std::vector<Elem> images;
  for (const NormalizedBlock& blk : cert.basis.blocks) {
    for (std::size_t j = 0; j < blk.a.size(); ++j) images.push_back(g.mul(blk.zeta[j], g.inv(blk.a[j])));
  }
  images.insert(images.end(), cert.basis.trivial_representatives.begin(), cert.basis.trivial_representatives.end());
  const CoordinateTable table = coordinate_table(g, basis, cert.action.q, cert.action.center_part,
                                                 problem.a.size(), ErrorKind::InvariantViolation);
  cert.on_a = identity_perm(g.order());
  for (Elem x : problem.a.members()) {
    const Coords& c = table.at(x);
    const Elem central = g.mul(g.inv(product_of_powers(g, basis, c)), x);
    cert.on_a[x] = g.mul(product_of_powers(g, images, c), central);
  }
  for (Elem x : problem.a.members()) {
    for (Elem y : problem.a.members()) {
      require(cert.on_a[g.mul(x, y)] == g.mul(cert.on_a[x], cert.on_a[y]), ErrorKind::InvariantViolation,
              "constructed map is not a homomorphism of A");
    }
  }
  cert.automorphism = extend_by_lemma_211(problem, cert.on_a);
  verify_involution(problem, cert.automorphism);
  return cert;
}

std::vector<Elem> frattini_basis(const Group& a) {
  const std::uint64_t p = p_group_prime(a.order());
  require(p != 0, ErrorKind::InvalidParameter, "not a p-group");
  const auto gens = simple_generating_set(a);
  std::vector<Elem> phi = commutators_of(a, gens);
  for (Elem x = 0; x < a.order(); ++x) phi.push_back(a.power(x, static_cast<long long>(p)));
  const auto phi_members = generated_subgroup(a, phi).members();
  return greedy_basis(a, members_of(a), phi_members, a.order());
}

std::optional<Perm> lift_matrix(const Group& a, const FpMatrix& m) {
  const std::uint64_t p = p_group_prime(a.order());
  require(p == m.p(), ErrorKind::InvalidParameter, "matrix field does not match the group prime");
  const std::vector<Elem> basis = frattini_basis(a);
  require(basis.size() == m.n(), ErrorKind::InvalidParameter,
          "matrix dimension " + std::to_string(m.n()) + " differs from the Frattini rank " +
              std::to_string(basis.size()));
  std::vector<Elem> phi = commutators_of(a, simple_generating_set(a));
  for (Elem x = 0; x < a.order(); ++x) phi.push_back(a.power(x, static_cast<long long>(p)));
  const auto kernel = generated_subgroup(a, phi).members();
  const CoordinateTable table = coordinate_table(a, basis, p, kernel, a.order(), ErrorKind::InvariantViolation);
  const std::uint64_t want = matrix_order(m);
  std::optional<Perm> found;
  visit_automorphisms(
      a,
      [&](Elem x, Elem y) {
        const Coords& cx = table.at(x);
        const Vec target = apply_matrix(Vec(cx.begin(), cx.end()), m);
        return table.at(y) == Coords(target.begin(), target.end());
      },
      [&](const Perm& f) {
        if (perm_order(f) != want) return true;
        found = f;
        return false;
      });
  return found;
}

}  // namespace oddaut
