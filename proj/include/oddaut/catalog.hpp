#pragma once

// Built-in group collections. Every entry is produced from its construction
// spec (see group_spec.hpp); none is a census of groups up to isomorphism.

#include <string>
#include <vector>

#include "oddaut/group.hpp"

namespace oddaut {

struct CatalogEntry {
  std::string name;
  std::string spec;
  Group group;
};

/// Mixed-parity collection of at least 40 small groups: abelian, dihedral,
/// symmetric and alternating groups, Q8, extraspecial groups and several
/// semidirect and direct products.
std::vector<CatalogEntry> test_catalog();

/// Odd-order groups of order <= max_order: every abelian group, the
/// extraspecial groups of order p^3, non-abelian C_p x| C_q, and a fixed
/// list of further semidirect and direct products.
std::vector<CatalogEntry> odd_catalog(std::size_t max_order = 243);

/// One line describing what odd_catalog covers and what it omits.
std::string odd_catalog_coverage(std::size_t max_order = 243);

/// Sanitized file stem for an entry name.
std::string catalog_file_stem(const std::string& name);

}  // namespace oddaut
