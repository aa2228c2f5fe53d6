#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "dsdict/matrix.hpp"
#include "dsdict/realization.hpp"
#include "dsdict/roots.hpp"

namespace dsdict {

enum class Side { real_orbit, k_orbit, whittaker };

std::string side_name(Side s);
Side parse_side(const std::string& s);

struct CatalogEntry {
  std::string name;
  std::string title;
  Realization lie;
  RootDatum roots;
  Matrix symplectic_form;
  std::vector<WeylElement> wk_extra;
  std::vector<Matrix> q_representatives;
  std::vector<long> center_orders;
  std::vector<std::vector<long>> center_tau;
  std::string h1_kernel;
  std::vector<Matrix> real_unipotents;
  std::vector<Matrix> k_unipotents;
  std::map<std::string, Matrix> named;
  /// Bases of g by element name, for writing covectors as X*; the realization basis comes last.
  std::vector<std::vector<std::string>> dual_bases;
  Weight packet_base;
  std::vector<long> scaling_cocharacter;
  Matrix real_representative;
  std::map<Side, std::map<int, std::string>> label_names;
  nlohmann::json golden;

  const Matrix& element(const std::string& key) const;
  /// X_alpha for the root with the given index.
  const Matrix& root_vector(std::size_t root) const { return lie.basis(roots.root(root).basis_index); }
  const Matrix& cartan(std::size_t j) const { return lie.basis(lie.compact_cartan().at(j)); }
  /// lambda in t*, extended by zero on root spaces.
  Covector covector_of(const Weight& lambda) const;
  std::string label_name(Side side, int tag) const;
  /// First dual basis containing the element name.
  const std::vector<std::string>& dual_basis_of(const std::string& key) const;
  std::vector<Matrix> basis_matrices(const std::vector<std::string>& names) const;
};

/// Builds and validates one entry; diagnostics name the field or the violated invariant.
CatalogEntry parse_entry(const nlohmann::json& j);
std::vector<CatalogEntry> load_catalog(const std::string& path);
std::vector<CatalogEntry> load_catalog_json(const nlohmann::json& j);
const CatalogEntry& find_entry(const std::vector<CatalogEntry>& entries, const std::string& name);
std::string default_catalog_path();

Matrix matrix_from_json(const nlohmann::json& j, const std::string& field);
nlohmann::json matrix_to_json(const Matrix& m);
nlohmann::json quad_matrix_to_json(const QuadMatrix& m);
nlohmann::json covector_to_json(const Covector& xi);
nlohmann::json weight_to_json(const Weight& w);

}  // namespace dsdict
