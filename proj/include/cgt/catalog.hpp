#ifndef CGT_CATALOG_HPP
#define CGT_CATALOG_HPP

#include <string>
#include <vector>

#include "cgt/action.hpp"
#include "cgt/todd_coxeter.hpp"

namespace cgt {

struct CatalogEntry {
  std::string name;
  std::string presentation;
  long long expected_order = 0;
  /// Admitted above the catalog's order-16 gate (S4); never returned by
  /// catalog(max_order).
  bool oversize = false;
};

/// Every built-in entry, oversize ones included.
const std::vector<CatalogEntry>& catalog_all();

/// Entries of order <= max_order; max_order <= 16 supported.
std::vector<CatalogEntry> catalog(int max_order);

/// Enumerates an entry and checks the expected order.
EnumerationResult realize_entry(const CatalogEntry& e, long long max_cosets = kDefaultMaxCosets);

/// A shipped conjugation configuration: two normal subgroups of a catalog
/// overgroup, given by seed words in the overgroup's generators.
struct OvergroupConfig {
  std::string name;
  std::string overgroup;  // catalog entry name
  std::vector<std::string> g_seeds;
  std::vector<std::string> h_seeds;
};

const std::vector<OvergroupConfig>& overgroup_configs();

struct RealizedConfig {
  GroupRef overgroup;
  Subgroup g;
  Subgroup h;
};

RealizedConfig realize_config(const OvergroupConfig& c,
                              long long max_cosets = kDefaultMaxCosets);

}  // namespace cgt

#endif
