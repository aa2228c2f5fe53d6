#include "dsdict/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "dsdict/error.hpp"

namespace dsdict {

using nlohmann::json;

std::string side_name(Side s) {
  switch (s) {
    case Side::real_orbit:
      return "real_orbit";
    case Side::k_orbit:
      return "k_orbit";
    case Side::whittaker:
      return "whittaker";
  }
  return "?";
}

Side parse_side(const std::string& s) {
  if (s == "real_orbit") return Side::real_orbit;
  if (s == "k_orbit") return Side::k_orbit;
  if (s == "whittaker") return Side::whittaker;
  throw ParseError("unknown label side '" + s + "'");
}

namespace {

const json& field(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing field '" + key + "'");
  return j.at(key);
}

GaussScalar scalar_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return GaussScalar(j.get<long>());
  if (!j.is_string()) throw ParseError(where + ": scalar must be a string");
  try {
    return GaussScalar::parse(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

Rational rational_from_json(const json& j, const std::string& where) {
  GaussScalar s = scalar_from_json(j, where);
  if (!s.is_real()) throw ParseError(where + ": expected a rational");
  return s.re();
}

bool is_real_matrix(const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_real()) return false;
  return true;
}

}  // namespace

Matrix matrix_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw ParseError(where + ": matrix must be a non-empty array of rows");
  std::size_t cols = j[0].size();
  Matrix m(j.size(), cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw ParseError(where + ": ragged row " + std::to_string(r));
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = scalar_from_json(j[r][c], where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
  }
  return m;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(row);
  }
  return rows;
}

json quad_matrix_to_json(const QuadMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(row);
  }
  return rows;
}

json covector_to_json(const Covector& xi) {
  json out = json::array();
  for (const auto& c : xi.coords) out.push_back(c.str());
  return out;
}

json weight_to_json(const Weight& w) {
  json out = json::array();
  for (const auto& c : w) out.push_back(c.get_str());
  return out;
}

const Matrix& CatalogEntry::element(const std::string& key) const {
  auto it = named.find(key);
  if (it != named.end()) return it->second;
  const auto& names = lie.basis_names();
  for (std::size_t k = 0; k < names.size(); ++k) {
    if (names[k] == key) return lie.basis(k);
  }
  throw DomainError(name + ": unknown element '" + key + "'");
}

const std::vector<std::string>& CatalogEntry::dual_basis_of(const std::string& key) const {
  for (const auto& group : dual_bases)
    if (std::find(group.begin(), group.end(), key) != group.end()) return group;
  throw DomainError(name + ": '" + key + "' belongs to no dual basis");
}

std::vector<Matrix> CatalogEntry::basis_matrices(const std::vector<std::string>& names) const {
  std::vector<Matrix> out;
  for (const auto& n : names) out.push_back(element(n));
  return out;
}

Covector CatalogEntry::covector_of(const Weight& lambda) const {
  if (lambda.size() != lie.rank()) throw DomainError("weight has wrong length");
  // lambda is determined by its values on the Cartan basis and vanishes on root spaces.
  std::vector<Matrix> frame;
  std::vector<GaussScalar> values;
  for (std::size_t j = 0; j < lie.rank(); ++j) {
    frame.push_back(cartan(j));
    values.emplace_back(lambda[j]);
  }
  for (const auto& r : roots.roots()) {
    frame.push_back(lie.basis(r.basis_index));
    values.emplace_back(0L);
  }
  return lie.from_dual_coords(values, frame);
}

std::string CatalogEntry::label_name(Side side, int tag) const {
  auto s = label_names.find(side);
  if (s != label_names.end()) {
    auto t = s->second.find(tag);
    if (t != s->second.end()) return t->second;
  }
  return side_name(side) + (tag > 0 ? ":+" : ":-");
}

CatalogEntry parse_entry(const json& j) {
  CatalogEntry e;
  e.name = field(j, "name", "entry").get<std::string>();
  const std::string where = "entry '" + e.name + "'";
  e.title = j.value("title", e.name);
  const std::size_t n = field(j, "matrix_size", where).get<std::size_t>();
  e.symplectic_form = matrix_from_json(field(j, "symplectic_form", where), where + ".symplectic_form");

  std::vector<Matrix> basis;
  std::vector<std::string> names;
  for (const auto& b : field(j, "basis", where)) {
    names.push_back(field(b, "name", where + ".basis").get<std::string>());
    basis.push_back(matrix_from_json(field(b, "matrix", where + ".basis"), where + ".basis." + names.back()));
    if (basis.back().rows() != n || basis.back().cols() != n)
      throw ValidationError(where + ": basis element " + names.back() + " is not " + std::to_string(n) + "x" +
                            std::to_string(n));
  }
  const std::size_t rank = field(j, "rank", where).get<std::size_t>();
  std::vector<std::size_t> cartan;
  for (std::size_t k = 0; k < rank; ++k) cartan.push_back(k);
  Matrix sigma = matrix_from_json(field(j, "sigma", where), where + ".sigma");
  Matrix theta = matrix_from_json(field(j, "theta", where), where + ".theta");
  e.lie = Realization(e.name, basis, names, sigma, theta, rank, cartan);

  // Matrix-level rules must agree with the coordinate involutions.
  const std::string sigma_rule = field(j, "matrix_sigma", where).get<std::string>();
  const std::string theta_rule = field(j, "matrix_theta", where).get<std::string>();
  if (sigma_rule != "conjugate") throw ValidationError(where + ": unsupported matrix_sigma '" + sigma_rule + "'");
  if (theta_rule != "negative_transpose" && theta_rule != "transpose")
    throw ValidationError(where + ": unsupported matrix_theta '" + theta_rule + "'");
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (!(e.lie.apply(Involution::sigma, basis[k]) == basis[k].conj()))
      throw ValidationError(where + ": sigma does not match entrywise conjugation on " + names[k]);
    Matrix t = theta_rule == "transpose" ? basis[k].transpose() : -basis[k].transpose();
    if (!(e.lie.apply(Involution::theta, basis[k]) == t))
      throw ValidationError(where + ": theta does not match the " + theta_rule + " rule on " + names[k]);
  }

  std::vector<Root> roots;
  std::size_t idx = rank;
  for (const auto& r : field(j, "roots", where)) {
    Root root;
    root.weight = field(r, "weight", where + ".roots").get<std::vector<long>>();
    for (const auto& c : field(r, "coroot", where + ".roots")) root.coroot.push_back(rational_from_json(c, where + ".coroot"));
    const std::string grade = field(r, "grade", where + ".roots").get<std::string>();
    if (grade != "compact" && grade != "noncompact") throw ParseError(where + ": grade must be compact or noncompact");
    root.compact = grade == "compact";
    root.basis_index = idx++;
    roots.push_back(std::move(root));
  }
  if (idx != basis.size()) throw ValidationError(where + ": basis must be the Cartan basis followed by one vector per root");
  try {
    e.roots = RootDatum(rank, roots);
  } catch (const ValidationError& err) {
    throw ValidationError(where + ": " + err.what());
  }
  for (std::size_t k = 0; k < e.roots.size(); ++k) {
    const Root& r = e.roots.root(k);
    const Matrix& x = e.lie.basis(r.basis_index);
    for (std::size_t c = 0; c < rank; ++c) {
      if (!(e.lie.bracket(e.cartan(c), x) == x * GaussScalar(r.weight[c])))
        throw ValidationError(where + ": [t, X_alpha] = alpha(t) X_alpha fails for basis element " +
                              names[r.basis_index]);
    }
    Matrix th = e.lie.apply(Involution::theta, x);
    if (!(th == (r.compact ? x : -x)))
      throw ValidationError(where + ": theta acts on root space " + names[r.basis_index] + " against its grade");
    Matrix co = e.lie.bracket(x, e.root_vector(e.roots.negative_of(k)));
    Matrix expect = Matrix::square(n);
    for (std::size_t c = 0; c < rank; ++c) expect += e.cartan(c) * GaussScalar(r.coroot[c]);
    if (!(co == expect))
      throw ValidationError(where + ": [X_alpha, X_-alpha] is not the coroot for " + names[r.basis_index]);
  }

  if (j.contains("wk_extra")) {
    for (const auto& w : j.at("wk_extra")) {
      Matrix m = matrix_from_json(w, where + ".wk_extra");
      std::vector<Rational> flat;
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) flat.push_back(m(r, c).re());
      e.wk_extra.push_back(weyl_element_from_matrix(e.roots, flat));
    }
  }
  for (const auto& q : field(j, "q_representatives", where)) {
    Matrix m = matrix_from_json(q, where + ".q_representatives");
    auto minv = inverse(m);
    if (!minv) throw ValidationError(where + ": Q representative is singular");
    for (std::size_t k = 0; k < basis.size(); ++k) {
      Matrix img = m * basis[k] * *minv;
      if (!e.lie.contains(img)) throw ValidationError(where + ": Q representative does not normalize g");
      for (Involution f : {Involution::sigma, Involution::theta}) {
        if (!(e.lie.apply(f, img) == m * e.lie.apply(f, basis[k]) * *minv))
          throw ValidationError(where + ": Q representative does not commute with the involutions");
      }
    }
    for (std::size_t c = 0; c < rank; ++c) {
      auto coords = e.lie.coords(Matrix(m * e.cartan(c) * *minv));
      for (std::size_t k = rank; k < coords.size(); ++k) {
        if (!coords[k].is_zero()) throw ValidationError(where + ": Q representative does not preserve t");
      }
    }
    e.q_representatives.push_back(std::move(m));
  }

  const json& center = field(j, "center", where);
  e.center_orders = field(center, "orders", where + ".center").get<std::vector<long>>();
  e.center_tau = field(center, "tau", where + ".center").get<std::vector<std::vector<long>>>();
  const json& kernel = field(j, "h1_kernel", where);
  e.h1_kernel = kernel.is_string() ? kernel.get<std::string>() : std::to_string(kernel.get<long>());

  for (const auto& u : field(j, "real_unipotents", where)) {
    Matrix m = matrix_from_json(u, where + ".real_unipotents");
    if (!is_real_matrix(m) || !e.lie.contains(m) || !e.lie.is_nilpotent(m))
      throw ValidationError(where + ": real unipotent generator must be a real nilpotent element of g");
    e.real_unipotents.push_back(std::move(m));
  }
  for (const auto& u : field(j, "k_unipotents", where)) {
    Matrix m = matrix_from_json(u, where + ".k_unipotents");
    if (!e.lie.contains(m) || !e.lie.is_nilpotent(m) || !(e.lie.apply(Involution::theta, m) == m))
      throw ValidationError(where + ": K unipotent generator must be a theta-fixed nilpotent element");
    e.k_unipotents.push_back(std::move(m));
  }
  for (const auto& [key, value] : field(j, "named_elements", where).items()) {
    Matrix m = matrix_from_json(value, where + ".named_elements." + key);
    if (m.rows() != n || m.cols() != n) throw ValidationError(where + ": named element " + key + " has wrong size");
    e.named.emplace(key, std::move(m));
  }
  if (j.contains("dual_bases")) {
    for (const auto& names : j.at("dual_bases")) {
      e.dual_bases.push_back(names.get<std::vector<std::string>>());
      const auto& group = e.dual_bases.back();
      if (group.size() != e.lie.dim()) throw ValidationError(where + ": dual basis must have dim g elements");
      Matrix cols(e.lie.dim(), group.size());
      for (std::size_t k = 0; k < group.size(); ++k) {
        auto c = e.lie.coords(e.element(group[k]));
        for (std::size_t r = 0; r < c.size(); ++r) cols(r, k) = c[r];
      }
      if (dsdict::rank(cols) != e.lie.dim()) throw ValidationError(where + ": dual basis elements are linearly dependent");
    }
  }
  auto sorted = [](std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  if (std::none_of(e.dual_bases.begin(), e.dual_bases.end(),
                   [&](const auto& g) { return sorted(g) == sorted(e.lie.basis_names()); }))
    e.dual_bases.push_back(e.lie.basis_names());
  for (const auto& c : field(j, "packet_base", where)) e.packet_base.push_back(rational_from_json(c, where + ".packet_base"));
  if (!is_regular(e.roots, e.packet_base)) throw ValidationError(where + ": packet_base is not regular");
  if (j.contains("scaling_cocharacter")) {
    e.scaling_cocharacter = j.at("scaling_cocharacter").get<std::vector<long>>();
    if (e.scaling_cocharacter.size() != n) throw ValidationError(where + ": scaling_cocharacter has wrong length");
  }

  const json& rep = field(j, "real_representative", where);
  e.real_representative = e.element(field(rep, "element", where).get<std::string>()) *
                          scalar_from_json(field(rep, "scale", where), where + ".real_representative.scale");
  if (!e.lie.is_regular_nilpotent(e.real_representative))
    throw ValidationError(where + ": real_representative is not principal nilpotent");
  if (!(e.lie.apply(Involution::sigma, e.real_representative) == -e.real_representative))
    throw ValidationError(where + ": real_representative is not in i g(R)");

  for (const auto& [side, tags] : field(j, "labels", where).items()) {
    Side s = parse_side(side);
    for (const auto& [tag, info] : tags.items()) {
      if (tag != "+" && tag != "-") throw ParseError(where + ": label tags are '+' or '-'");
      e.label_names[s][tag == "+" ? 1 : -1] = field(info, "name", where + ".labels").get<std::string>();
    }
  }
  e.golden = j.value("golden", json::array());
  return e;
}

std::vector<CatalogEntry> load_catalog_json(const json& j) {
  std::vector<CatalogEntry> out;
  for (const auto& e : field(j, "entries", "catalog")) out.push_back(parse_entry(e));
  return out;
}

std::vector<CatalogEntry> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open catalog '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return load_catalog_json(j);
}

const CatalogEntry& find_entry(const std::vector<CatalogEntry>& entries, const std::string& name) {
  for (const auto& e : entries) {
    if (e.name == name) return e;
  }
  throw DomainError("no catalog entry named '" + name + "'");
}

std::string default_catalog_path() {
  if (const char* env = std::getenv("DSDICT_CATALOG")) return env;
  return DSDICT_CATALOG;
}

}  // namespace dsdict
