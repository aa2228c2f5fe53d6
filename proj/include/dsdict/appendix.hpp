#pragma once

// Replays the golden identity records stored with a catalog entry.

#include <string>
#include <vector>

#include "dsdict/catalog.hpp"

namespace dsdict {

struct GoldenResult {
  std::string id;
  std::string kind;
  bool pass = false;
  std::string detail;  // both sides on failure
};

std::vector<GoldenResult> run_golden(const CatalogEntry& entry);

/// Adds the first root vector to a named element, for fault injection.
void tamper_named(CatalogEntry& entry, const std::string& key);

/// Covector with the given values on the elements of a dual basis group.
Covector covector_from_names(const CatalogEntry& entry, const std::vector<std::string>& group,
                             const std::map<std::string, GaussScalar>& values);
/// Nonzero coordinates of xi in the dual basis of the group, keyed "NAME*".
nlohmann::json covector_in_basis(const CatalogEntry& entry, const Covector& xi, const std::vector<std::string>& group);

}  // namespace dsdict
