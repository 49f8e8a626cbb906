#pragma once

// Property sweeps over a group catalog. Each property is computed by the
// library and re-derived by an independent brute-force oracle; the report
// records one result per (group, property).
//
//   central-inner         Cent(G) ∩ Inn(G) = Z(Inn(G))
//   central-hom-count     |Cent(G)| = |Hom(G/G', Z(G))| without abelian direct factors
//   central-quotient-rank G/Z abelian p-group, G non-abelian => r >= 2, alpha_1 = alpha_2
//   coprime-triviality    automorphisms of order prime to |G| acting trivially on
//                         N and G/N are trivial
//   sylow-congruence      number of Sylow p-subgroups is 1 mod p
//   sylow-splitting       a normal Sylow subgroup has a complement
//   characteristic-elementary-abelian
//                         odd |G| > 1 has an Aut-invariant elementary abelian subgroup

#include <string>
#include <vector>

#include "oddaut/aut.hpp"
#include "oddaut/catalog.hpp"

namespace oddaut {

enum class PropertyStatus { Pass, Fail, Skipped, NotApplicable };
std::string_view to_string(PropertyStatus s);

struct PropertyResult {
  std::string group;
  std::string property;
  PropertyStatus status = PropertyStatus::Pass;
  std::string detail;  // counterexample or reason on Fail / Skipped
};

struct PropertyReport {
  std::vector<PropertyResult> results;
  std::size_t count(PropertyStatus s) const;
  bool ok() const { return count(PropertyStatus::Fail) == 0; }
};

struct PropertyOptions {
  std::size_t coprime_max_order = 100;
  std::uint64_t aut_budget = kDefaultAutBudget;
};

PropertyReport run_property_suites(const std::vector<CatalogEntry>& catalog, const PropertyOptions& options = {});

/// Every normal subgroup, sorted by (size, members).
std::vector<Subgroup> normal_subgroups(const Group& g);

/// |Hom(G, A)| for abelian A by trying every image of a generating set.
std::size_t brute_hom_count_to_abelian(const Group& g, const Group& a);

}  // namespace oddaut
