#pragma once

#include <map>
#include <string>
#include <vector>

#include "dsdict/catalog.hpp"

inline const std::vector<dsdict::CatalogEntry>& catalog() {
  static const auto entries = dsdict::load_catalog(dsdict::default_catalog_path());
  return entries;
}

inline const dsdict::CatalogEntry& sl2() { return dsdict::find_entry(catalog(), "sl2r"); }
inline const dsdict::CatalogEntry& sp4() { return dsdict::find_entry(catalog(), "sp4r"); }

inline dsdict::GaussScalar gs(const char* s) { return dsdict::GaussScalar::parse(s); }

/// Covector with the given values on the named elements of a basis, zero on the rest.
inline dsdict::Covector star(const dsdict::CatalogEntry& e, const std::vector<std::string>& basis,
                             const std::map<std::string, dsdict::GaussScalar>& values) {
  std::vector<dsdict::Matrix> mats;
  std::vector<dsdict::GaussScalar> v;
  for (const auto& n : basis) {
    mats.push_back(e.element(n));
    auto it = values.find(n);
    v.push_back(it == values.end() ? dsdict::GaussScalar() : it->second);
  }
  return e.lie.from_dual_coords(v, mats);
}

inline const std::vector<std::string> real_basis{"ER", "FR", "HR"};
inline const std::vector<std::string> theta_basis{"Etheta", "Ftheta", "Htheta"};
