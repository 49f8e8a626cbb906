#pragma once

// Dense Cayley-table groups. Element 0 is always the identity; row g,
// column h of the table holds g*h. Groups, subgroups and maps are
// immutable once built.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "oddaut/error.hpp"
#include "oddaut/kernels.hpp"

namespace oddaut {

using Perm = std::vector<Elem>;

/// Largest order any constructor will build. Defaults to 4096; the
/// environment variable ODDAUT_CAP overrides the default at first use.
std::size_t order_cap();
void set_order_cap(std::size_t cap);

enum class AssociativityCheck { Exhaustive, Sampled };

class Group {
 public:
  /// Validates and builds a group from a square table. If the identity is
  /// not at index 0 it is swapped there.
  static Group from_cayley_table(const std::vector<std::vector<Elem>>& table, std::string name);
  /// Same as from_cayley_table for a row-major table.
  static Group from_flat(std::size_t order, std::vector<Elem> flat, std::string name);

  std::size_t order() const noexcept { return order_; }
  const std::string& name() const noexcept { return name_; }
  AssociativityCheck associativity_check() const noexcept { return assoc_; }

  Elem mul(Elem a, Elem b) const noexcept { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  Elem inv(Elem a) const noexcept { return inverse_[a]; }
  /// g^-1 x g (right conjugation).
  Elem conj(Elem x, Elem g) const noexcept { return mul(mul(inverse_[g], x), g); }
  /// x^-1 g^-1 x g.
  Elem commutator(Elem x, Elem g) const noexcept { return mul(mul(inverse_[x], inverse_[g]), mul(x, g)); }
  Elem power(Elem g, long long k) const;
  std::size_t element_order(Elem g) const;
  std::size_t exponent() const;
  bool is_abelian() const;

  std::span<const Elem> row(Elem a) const noexcept {
    return {table_.data() + static_cast<std::size_t>(a) * order_, order_};
  }
  std::span<const Elem> flat_table() const noexcept { return table_; }
  std::span<const Elem> inverses() const noexcept { return inverse_; }
  std::vector<std::vector<Elem>> table() const;

  Group renamed(std::string name) const;

 private:
  Group() = default;
  std::size_t order_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::string name_;
  AssociativityCheck assoc_ = AssociativityCheck::Exhaustive;
};

/// An element subset of a parent group closed under its product. The
/// parent is referenced, not owned, and must outlive the subgroup.
class Subgroup {
 public:
  /// Validates closure and Lagrange divisibility.
  static Subgroup from_members(const Group& parent, std::vector<Elem> members);

  const Group& parent() const noexcept { return *parent_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(Elem g) const noexcept { return mask_[g] != 0; }
  bool is_trivial() const noexcept { return members_.size() == 1; }
  const std::vector<Elem>& members() const noexcept { return members_; }
  const std::vector<Elem>& generators() const noexcept { return generators_; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }

 private:
  friend struct SubgroupAccess;
  Subgroup(const Group& parent, std::vector<Elem> members, std::vector<Elem> generators);
  const Group* parent_ = nullptr;
  std::vector<Elem> members_;
  std::vector<Elem> generators_;
  std::vector<std::uint8_t> mask_;
};

Subgroup generated_subgroup(const Group& g, std::span<const Elem> gens);
inline Subgroup generated_subgroup(const Group& g, std::initializer_list<Elem> gens) {
  return generated_subgroup(g, std::span<const Elem>(gens.begin(), gens.size()));
}
Subgroup whole_group(const Group& g);
/// Greedy: scan elements in index order, keep each one not yet generated.
std::vector<Elem> simple_generating_set(const Group& g);
Subgroup trivial_subgroup(const Group& g);
Subgroup intersection(const Subgroup& a, const Subgroup& b);
/// Subgroup generated by the union of both member sets.
Subgroup join(const Subgroup& a, const Subgroup& b);

/// Total map between groups stored as an image per source element.
class GroupMap {
 public:
  /// Checks the homomorphism law on every pair of source elements.
  GroupMap(const Group& source, const Group& target, Perm images);

  const Group& source() const noexcept { return *source_; }
  const Group& target() const noexcept { return *target_; }
  const Perm& images() const noexcept { return images_; }
  Elem operator()(Elem g) const noexcept { return images_[g]; }
  bool is_bijective() const;

 private:
  const Group* source_;
  const Group* target_;
  Perm images_;
};

/// f(x*y) == f(x)*f(y) for every x, y.
bool is_homomorphism(const Group& source, const Group& target, std::span<const Elem> images);
bool is_bijection(std::span<const Elem> images);
/// The map x -> second(first(x)).
Perm compose(std::span<const Elem> first, std::span<const Elem> second);
Perm inverse_perm(std::span<const Elem> p);
Perm identity_perm(std::size_t n);
/// Least k >= 1 with p^k = identity.
std::size_t perm_order(std::span<const Elem> p);

/// A right action of `acting` on `acted` by automorphisms: maps[b] is the
/// automorphism x -> b^-1 x b in the group being built, so
/// maps[b1*b2] = maps[b2] after maps[b1].
struct ActionSpec {
  const Group* acting = nullptr;
  const Group* acted = nullptr;
  std::vector<Perm> maps;

  /// Throws NotAnAction with the first violated condition.
  void validate() const;
  bool is_trivial() const;
};

ActionSpec trivial_action(const Group& acting, const Group& acted);
/// Extends images of generators of `acting` to an action; every element of
/// `acting` must be reachable and the result must be consistent.
ActionSpec action_from_generators(const Group& acting, const Group& acted, std::span<const Elem> generators,
                                  const std::vector<Perm>& generator_maps);

// Constructors.
Group cyclic(std::size_t n);
/// Direct product of cyclic groups of the listed orders, in list order.
Group abelian(const std::vector<std::size_t>& factors);
/// Extraspecial group of order p^3: Heisenberg (exponent p) or the
/// metacyclic one of exponent p^2.
Group extraspecial(std::size_t p, bool exponent_p);
/// Element (g, h) has index g*|H| + h.
Group direct_product(const Group& g, const Group& h);
/// Pairs (a, b) with index a*|B| + b and (a1,b1)(a2,b2) = (a1 * maps[b1^-1](a2), b1 b2),
/// so that b^-1 a b = maps[b](a) inside the product.
Group semidirect_product(const Group& a, const Group& b, const ActionSpec& action);
/// Closure of permutations of {0..degree-1}; elements are numbered in
/// breadth-first order from the identity.
Group permutation_group(std::size_t degree, const std::vector<Perm>& generators, std::string name);

struct Quotient {
  Group group;
  Perm projection;  // element of the parent -> coset index
  std::vector<Elem> representatives;  // smallest element of each coset
};
Quotient quotient(const Group& g, const Subgroup& n);

/// The subgroup as a group in its own right plus the embedding
/// (new index -> parent index). Members keep their relative order.
struct InducedGroup {
  Group group;
  std::vector<Elem> embedding;
};
InducedGroup induced_group(const Subgroup& s, std::string name = {});

/// Automorphism x -> x^k of a cyclic group built by cyclic(n).
Perm cyclic_power_map(std::size_t n, std::size_t k);

}  // namespace oddaut
