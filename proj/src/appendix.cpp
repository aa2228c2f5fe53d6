#include "dsdict/appendix.hpp"

#include <functional>
#include <sstream>

#include "dsdict/error.hpp"
#include "dsdict/invariants.hpp"

namespace dsdict {

using nlohmann::json;

Covector covector_from_names(const CatalogEntry& entry, const std::vector<std::string>& group,
                             const std::map<std::string, GaussScalar>& values) {
  std::vector<GaussScalar> v;
  for (const auto& n : group) {
    auto it = values.find(n);
    v.push_back(it == values.end() ? GaussScalar() : it->second);
  }
  for (const auto& [k, _] : values)
    if (std::find(group.begin(), group.end(), k) == group.end())
      throw DomainError("'" + k + "' is not in the dual basis group");
  return entry.lie.from_dual_coords(v, entry.basis_matrices(group));
}

json covector_in_basis(const CatalogEntry& entry, const Covector& xi, const std::vector<std::string>& group) {
  auto c = entry.lie.dual_coords(xi, entry.basis_matrices(group));
  json out = json::object();
  for (std::size_t k = 0; k < group.size(); ++k)
    if (!c[k].is_zero()) out[group[k] + "*"] = c[k].str();
  return out;
}

void tamper_named(CatalogEntry& entry, const std::string& key) {
  auto it = entry.named.find(key);
  if (it == entry.named.end()) throw DomainError(entry.name + ": no named element '" + key + "' to tamper with");
  it->second = it->second + entry.root_vector(0);
}

namespace {

struct Failure {
  std::string detail;
};

[[noreturn]] void fail(const std::string& detail) { throw Failure{detail}; }

GaussScalar scalar_of(const json& j) {
  return j.is_number() ? GaussScalar(Rational(j.get<long>())) : GaussScalar::parse(j.get<std::string>());
}

std::map<std::string, GaussScalar> values_of(const json& j) {
  std::map<std::string, GaussScalar> out;
  for (const auto& [k, v] : j.items()) out[k] = scalar_of(v);
  return out;
}

Matrix combination(const CatalogEntry& e, const json& expect) {
  Matrix m = Matrix::square(e.lie.matrix_size());
  for (const auto& [k, v] : expect.items()) m += e.element(k) * scalar_of(v);
  return m;
}

Covector covector_of_record(const CatalogEntry& e, const json& values) {
  if (values.empty()) throw ParseError("empty covector record");
  const auto& group = e.dual_basis_of(values.begin().key());
  return covector_from_names(e, group, values_of(values));
}

void expect_equal(const Matrix& lhs, const Matrix& rhs) {
  if (!(lhs == rhs)) fail("lhs = " + lhs.str() + ", rhs = " + rhs.str());
}

void expect_equal(const GaussScalar& lhs, const GaussScalar& rhs, const std::string& what = "") {
  if (!(lhs == rhs)) fail(what + (what.empty() ? "" : ": ") + "lhs = " + lhs.str() + ", rhs = " + rhs.str());
}

void expect_equal(const CatalogEntry& e, const Covector& lhs, const Covector& rhs, const std::vector<std::string>& group) {
  if (!(lhs.coords == rhs.coords))
    fail("lhs = " + covector_in_basis(e, lhs, group).dump() + ", rhs = " + covector_in_basis(e, rhs, group).dump());
}

void expect_equal(const std::string& lhs, const std::string& rhs) {
  if (lhs != rhs) fail("lhs = " + lhs + ", rhs = " + rhs);
}

const std::vector<GaussScalar>& samples() {
  static const std::vector<GaussScalar> s = {GaussScalar(1), GaussScalar(-3), GaussScalar::parse("1/2"),
                                             GaussScalar::parse("i"), GaussScalar::parse("2-3/4 i")};
  return s;
}

std::vector<long> k_range() {
  std::vector<long> ks;
  for (long k : {1, 2, 3, 4, 5, 7, 11, 20}) {
    ks.push_back(k);
    ks.push_back(-k);
  }
  return ks;
}

const std::string& arg(const json& rec, std::size_t k) {
  const auto& args = rec.at("args");
  if (args.size() <= k) throw ParseError("record needs at least " + std::to_string(k + 1) + " arguments");
  return args.at(k).get_ref<const std::string&>();
}

std::string signed_expect(const json& rec, long k) {
  return rec.at("expect").at(k > 0 ? "positive" : "negative").get<std::string>();
}

HCParameter param(const CatalogEntry& e, long k) { return make_parameter(e.roots, {Rational(k)}); }

// lambda_z: value z on the torus element t, zero on all root vectors.
Covector torus_covector(const CatalogEntry& e, const Matrix& t, const GaussScalar& z) {
  std::vector<Matrix> other{t};
  std::vector<GaussScalar> values{z};
  for (std::size_t a = 0; a < e.roots.size(); ++a) {
    other.push_back(e.root_vector(a));
    values.emplace_back();
  }
  if (other.size() != e.lie.dim()) throw DomainError("torus covectors need a rank one entry");
  return e.lie.from_dual_coords(values, other);
}

std::size_t positive_root(const CatalogEntry& e) {
  auto pos = positive_roots(positive_system(e.roots, e.packet_base));
  if (pos.size() != 1) throw DomainError("identity needs a single positive root");
  return pos.front();
}

Matrix coroot_matrix(const CatalogEntry& e, std::size_t root) {
  Matrix m = Matrix::square(e.lie.matrix_size());
  const auto& c = e.roots.root(root).coroot;
  for (std::size_t j = 0; j < c.size(); ++j) m += e.cartan(j) * GaussScalar(c[j]);
  return m;
}

// Real scalar c with m = c x, or fail.
Rational real_multiple(const Matrix& m, const Matrix& x) {
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c)
      if (!x(r, c).is_zero()) {
        GaussScalar ratio = m(r, c) / x(r, c);
        if (!(x * ratio == m) || !ratio.is_real()) fail(m.str() + " is not a real multiple of " + x.str());
        return ratio.re();
      }
  fail("zero reference element");
}

using Handler = std::function<void(const CatalogEntry&, const json&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> h = {
      {"bracket",
       [](const CatalogEntry& e, const json& r) {
         expect_equal(e.lie.bracket(e.element(arg(r, 0)), e.element(arg(r, 1))), combination(e, r.at("expect")));
       }},
      {"sigma",
       [](const CatalogEntry& e, const json& r) {
         expect_equal(e.lie.apply(Involution::sigma, e.element(arg(r, 0))), combination(e, r.at("expect")));
       }},
      {"theta",
       [](const CatalogEntry& e, const json& r) {
         expect_equal(e.lie.apply(Involution::theta, e.element(arg(r, 0))), combination(e, r.at("expect")));
       }},
      {"combination",
       [](const CatalogEntry& e, const json& r) { expect_equal(e.element(arg(r, 0)), combination(e, r.at("expect"))); }},
      {"trace_form_torus",
       [](const CatalogEntry& e, const json& r) {
         const Matrix& t = e.element(arg(r, 0));
         GaussScalar coeff = scalar_of(r.at("expect").at("coefficient"));
         for (long c : {1, 2, 4})
           for (const auto& z : samples())
             for (const auto& w : samples())
               expect_equal(e.lie.trace_form(GaussScalar(c), t * z, t * w), coeff * GaussScalar(c) * z * w,
                            "c = " + std::to_string(c) + ", z = " + z.str() + ", w = " + w.str());
       }},
      {"killing_torus",
       [](const CatalogEntry& e, const json& r) {
         const Matrix& t = e.element(arg(r, 0));
         GaussScalar coeff = scalar_of(r.at("expect").at("coefficient"));
         for (const auto& z : samples())
           for (const auto& w : samples())
             expect_equal(e.lie.killing_form(t * z, t * w), coeff * z * w, "z = " + z.str() + ", w = " + w.str());
       }},
      {"killing_is_trace_form",
       [](const CatalogEntry& e, const json& r) {
         expect_equal(e.lie.killing_gram(), e.lie.trace_gram(scalar_of(r.at("expect").at("c"))));
       }},
      {"psi_c",
       [](const CatalogEntry& e, const json& r) {
         auto group = r.at("dual_basis").get<std::vector<std::string>>();
         auto expect = values_of(r.at("expect"));
         for (long c : {1, 2, 4}) {
           Covector lhs = e.lie.psi_with(e.lie.trace_gram(GaussScalar(c)), e.element(arg(r, 0)));
           auto scaled = expect;
           for (auto& [_, v] : scaled) v *= GaussScalar(c);
           expect_equal(e, lhs, covector_from_names(e, group, scaled), group);
         }
       }},
      {"psi_killing",
       [](const CatalogEntry& e, const json& r) {
         Covector rhs = covector_of_record(e, r.at("expect"));
         expect_equal(e, e.lie.psi(e.element(arg(r, 0))), rhs, e.dual_basis_of(r.at("expect").begin().key()));
       }},
      {"torus_point",
       [](const CatalogEntry& e, const json& r) {
         expect_equal(e.element(arg(r, 0)) * scalar_of(r.at("z")), combination(e, r.at("expect")));
       }},
      {"lambda_z",
       [](const CatalogEntry& e, const json& r) {
         const auto& group = e.dual_basis_of(r.at("expect").begin().key());
         Covector base = covector_of_record(e, r.at("expect"));
         for (const auto& z : samples())
           expect_equal(e, torus_covector(e, e.element(arg(r, 0)), z), z * base, group);
       }},
      {"lambda_ik",
       [](const CatalogEntry& e, const json& r) {
         const auto& group = e.dual_basis_of(r.at("expect").begin().key());
         Covector base = covector_of_record(e, r.at("expect"));
         for (long k : k_range()) {
           Covector lam = torus_covector(e, e.element(arg(r, 0)), GaussScalar(Rational(0), Rational(k)));
           expect_equal(e, lam, GaussScalar(k) * base, group);
           expect_equal(e, lam, e.covector_of({Rational(k)}), group);
         }
       }},
      {"coroot",
       [](const CatalogEntry& e, const json& r) {
         expect_equal(coroot_matrix(e, positive_root(e)), e.element(arg(r, 0)) * scalar_of(r.at("z")));
       }},
      {"pairing_k",
       [](const CatalogEntry& e, const json& r) {
         Matrix coroot = coroot_matrix(e, positive_root(e));
         for (long k : k_range()) {
           Covector lam = torus_covector(e, e.element(arg(r, 0)), GaussScalar(Rational(0), Rational(k)));
           expect_equal(e.lie.pair(lam, coroot), GaussScalar(k), "k = " + std::to_string(k));
         }
       }},
      {"rho",
       [](const CatalogEntry& e, const json& r) {
         Weight rh = rho(e.roots, positive_system(e.roots, e.packet_base));
         GaussScalar k = scalar_of(r.at("expect").at("k"));
         Covector lam = torus_covector(e, e.element(arg(r, 0)), GaussScalar(Rational(0), Rational(1)) * k);
         expect_equal(e, e.covector_of(rh), lam, e.lie.basis_names());
       }},
      {"ac_matrix",
       [](const CatalogEntry& e, const json& r) {
         for (long k : k_range()) {
           Matrix limit = scaling_limit(e, e.element(arg(r, 0)) * GaussScalar(k));
           Rational c = real_multiple(limit, e.element(arg(r, 1)));
           if (sgn(c) != -(k > 0 ? 1 : -1)) fail("k = " + std::to_string(k) + ": limit " + limit.str());
         }
       }},
      {"ac_covector",
       [](const CatalogEntry& e, const json& r) {
         const auto& name = arg(r, 0);
         const auto& group = e.dual_basis_of(name);
         for (long k : k_range()) {
           Covector limit = e.lie.psi(asymptotic_cone_scaling(e, param(e, k)));
           // Equal as orbits: the limit itself lies on the ray of the conjugate F_R*.
           Covector target = covector_from_names(e, group, {{name, GaussScalar(k > 0 ? -1 : 1)}});
           if (real_orbit_label(e, limit) != real_orbit_label(e, target)) fail("labels differ at k = " + std::to_string(k));
         }
       }},
      {"f_pi",
       [](const CatalogEntry& e, const json& r) {
         for (long k : k_range()) expect_equal(f_pi(e, param(e, k)), e.element(signed_expect(r, k)));
       }},
      {"av",
       [](const CatalogEntry& e, const json& r) {
         for (long k : k_range()) expect_equal(label_display(e, av_of(e, param(e, k))), signed_expect(r, k));
       }},
      {"ks_chain",
       [](const CatalogEntry& e, const json& r) {
         for (long k : k_range()) {
           QuadTriple t = ks_theta_to_real(e.lie, complete_triple_theta(e, f_pi(e, param(e, k))));
           OrbitLabel l{Side::real_orbit, real_orbit_tag(e, -t.E)};
           expect_equal(label_display(e, l), signed_expect(r, k));
         }
       }},
      {"wf",
       [](const CatalogEntry& e, const json& r) {
         for (long k : k_range()) expect_equal(label_display(e, wf_of(e, param(e, k))), signed_expect(r, k));
       }},
      {"whittaker",
       [](const CatalogEntry& e, const json& r) {
         for (long k : k_range())
           expect_equal(label_display(e, whittaker_of(e, param(e, k)).orbit), signed_expect(r, k));
       }},
      {"er_fr_conjugate",
       [](const CatalogEntry& e, const json& r) {
         const Matrix& x = e.element(arg(r, 0));
         const Matrix& y = e.element(arg(r, 1));
         ConjugacyOracle oracle(e, GroupSide::real_group, 1);
         auto found = oracle.find(x, y);
         if (!found.conjugate) fail("no conjugator found in " + std::to_string(found.words_tried) + " words");
         const auto& group = e.dual_basis_of(arg(r, 0));
         auto xs = covector_from_names(e, group, {{arg(r, 0), GaussScalar(1)}});
         auto ys = covector_from_names(e, group, {{arg(r, 1), GaussScalar(1)}});
         if (real_orbit_label(e, xs) != real_orbit_label(e, ys)) fail("dual covectors carry different labels");
       }},
      {"kostant_contains",
       [](const CatalogEntry& e, const json& r) {
         auto s = kostant_section(e, covector_of_record(e, r.at("X")));
         Covector p = covector_of_record(e, r.at("point"));
         if (!section_contains(s, p)) fail("point " + r.at("point").dump() + " is not in the section");
       }},
      {"kostant_meets",
       [](const CatalogEntry& e, const json& r) {
         auto s = kostant_section(e, covector_of_record(e, r.at("X")));
         auto meet = section_meets_orbit(e, s, param(e, r.at("k").get<long>()));
         bool want = r.at("expect").at("meets").get<std::string>() == "true";
         if (meet.meets != want) fail(std::string("meets = ") + (meet.meets ? "true" : "false"));
       }},
  };
  return h;
}

}  // namespace

std::vector<GoldenResult> run_golden(const CatalogEntry& entry) {
  std::vector<GoldenResult> out;
  for (const auto& rec : entry.golden) {
    GoldenResult res;
    res.id = rec.value("id", "?");
    res.kind = rec.value("kind", "?");
    try {
      auto it = handlers().find(res.kind);
      if (it == handlers().end()) throw ParseError("unknown identity kind '" + res.kind + "'");
      it->second(entry, rec);
      res.pass = true;
    } catch (const Failure& f) {
      res.detail = f.detail;
    } catch (const std::exception& ex) {
      res.detail = std::string("error: ") + ex.what();
    }
    out.push_back(std::move(res));
  }
  return out;
}

}  // namespace dsdict
