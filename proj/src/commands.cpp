#include "dsdict/commands.hpp"

#include <regex>
#include <sstream>

#include "dsdict/appendix.hpp"
#include "dsdict/cohomology.hpp"
#include "dsdict/error.hpp"
#include "dsdict/invariants.hpp"

namespace dsdict {

using nlohmann::json;

Weight parse_weight(const std::string& text) {
  Weight w;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    auto b = part.find_first_not_of(" \t");
    auto e = part.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError("empty weight coordinate in '" + text + "'");
    w.push_back(parse_rational(part.substr(b, e - b + 1)));
  }
  if (w.empty()) throw ParseError("empty weight");
  return w;
}

Covector parse_covector_spec(const CatalogEntry& entry, const std::string& spec) {
  if (spec.find(':') != std::string::npos) {
    OrbitLabel l = parse_label_code(spec);
    return l.side == Side::k_orbit ? k_orbit_representative(entry, l.tag) : real_orbit_representative(entry, l.tag);
  }
  static const std::regex term(R"(\s*([+-]?)\s*(\([^)]*\)|[0-9]+(?:/[0-9]+)?)?\s*([A-Za-z][^*]*)\*\s*)");
  std::map<std::string, GaussScalar> values;
  const std::vector<std::string>* group = nullptr;
  auto begin = spec.cbegin();
  std::smatch m;
  while (begin != spec.cend()) {
    if (!std::regex_search(begin, spec.cend(), m, term, std::regex_constants::match_continuous))
      throw ParseError("cannot parse covector '" + spec + "'; expected terms like -ER* or (1/2)Htheta*");
    GaussScalar c(1);
    if (m[2].matched) {
      std::string text = m[2].str();
      if (text.front() == '(') text = text.substr(1, text.size() - 2);
      c = GaussScalar::parse(text);
    }
    if (m[1].str() == "-") c = -c;
    std::string name = m[3].str();
    const auto& g = entry.dual_basis_of(name);
    if (group && group != &g) throw ParseError("terms of '" + spec + "' mix dual bases");
    group = &g;
    values[name] += c;
    begin = m[0].second;
  }
  if (!group) throw ParseError("empty covector");
  return covector_from_names(entry, *group, values);
}

json label_to_json(const CatalogEntry& entry, const OrbitLabel& l) {
  return {{"code", label_code(l)}, {"name", label_display(entry, l)}};
}

json covector_record(const CatalogEntry& entry, const Covector& xi) {
  json in = json::object();
  for (const auto& group : entry.dual_bases) {
    std::string key;
    for (const auto& n : group) key += (key.empty() ? "" : ",") + n;
    in[key] = covector_in_basis(entry, xi, group);
  }
  return {{"coords", covector_to_json(xi)}, {"dual", in}};
}

namespace {

json triple_to_json(const QuadTriple& t) {
  return {{"E", quad_matrix_to_json(t.E)},
          {"H", quad_matrix_to_json(t.H)},
          {"F", quad_matrix_to_json(t.F)},
          {"adaptation", adaptation_name(t.adaptation)}};
}

json tag_json(const std::optional<int>& t) { return t ? json(*t) : json(nullptr); }

}  // namespace

CommandResult cmd_dict(const CatalogEntry& entry, const Weight& lambda) {
  CommandResult r;
  HCParameter lam = make_parameter(entry.roots, lambda);
  WeylChamber ch = positive_system(entry.roots, lam.lambda);
  auto classes = large_classes(entry);
  auto cls = class_of(classes, ch);
  auto& out = r.output;
  out["group"] = entry.name;
  out["parameter"] = weight_to_json(lam.lambda);
  out["chamber"] = chamber_str(entry.roots, ch);
  out["is_generic"] = is_large(entry.roots, ch);
  out["chamber_class"] = cls ? json(*cls) : json(nullptr);
  if (!is_large(entry.roots, ch)) return r;

  Matrix f = f_pi(entry, lam);
  QuadTriple theta = complete_triple_theta(entry, f);
  QuadTriple real = ks_theta_to_real(entry.lie, theta);
  out["F_pi"] = matrix_to_json(f);
  out["triple"] = triple_to_json(theta);
  out["real_triple"] = triple_to_json(real);
  out["F_R"] = quad_matrix_to_json(real.F);

  WfRoutes routes = wf_routes(entry, lam, true);
  out["wf_routes"] = {{"explicit", routes.explicit_route},
                      {"ks_av", routes.ks_route},
                      {"scaling", tag_json(routes.scaling_route)},
                      {"kostant_section", tag_json(routes.cone_route)}};
  bool agree = routes.explicit_route == routes.ks_route && routes.cone_route == routes.explicit_route &&
               (!routes.scaling_route || *routes.scaling_route == routes.explicit_route);
  if (!agree) {
    out["error"] = "wave-front routes disagree";
    r.ok = false;
    return r;
  }
  OrbitLabel av = av_of(entry, lam);
  OrbitLabel wf = wf_of(entry, lam);
  WhittakerDatum wh = whittaker_of(entry, lam);
  out["av_label"] = label_to_json(entry, av);
  out["wf_label"] = label_to_json(entry, wf);
  out["whittaker_label"] = label_to_json(entry, wh.orbit);
  out["whittaker_representative"] = covector_record(entry, wh.representative);
  WhittakerPair pair = whittaker_pair(entry, wh.representative);
  json values = json::array();
  for (const auto& v : pair.values) values.push_back(v.str());
  out["whittaker_character_values"] = values;

  auto section = kostant_section(entry, wh.representative);
  SectionMeet meet = section_meets_orbit(entry, section, lam);
  if (meet.meets) {
    out["kostant_witness"] = covector_record(entry, meet.witness);
    out["kostant_point"] = matrix_to_json(meet.point);
  } else {
    out["kostant_witness"] = nullptr;
    r.ok = false;
  }
  std::size_t back = reconstruct_chamber(entry, wf, lam);
  out["reconstructed_class"] = back;
  if (!cls || back != *cls) r.ok = false;
  return r;
}

CommandResult cmd_verify_appendix(const std::vector<CatalogEntry>& entries, const std::vector<std::string>& tamper) {
  CommandResult r;
  json list = json::array();
  std::size_t total = 0;
  for (const auto& base : entries) {
    if (base.golden.empty()) continue;
    CatalogEntry e = base;
    for (const auto& key : tamper) tamper_named(e, key);
    json ids = json::array();
    std::size_t passed = 0;
    for (const auto& g : run_golden(e)) {
      json rec = {{"id", g.id}, {"kind", g.kind}, {"pass", g.pass}};
      if (!g.pass) rec["detail"] = g.detail;
      ids.push_back(rec);
      passed += g.pass;
      ++total;
    }
    if (passed != ids.size()) r.ok = false;
    list.push_back({{"entry", e.name}, {"passed", passed}, {"failed", ids.size() - passed}, {"identities", ids}});
  }
  if (total == 0) r.ok = false;
  r.output = {{"entries", list}, {"tampered", tamper}, {"pass", r.ok}};
  return r;
}

CommandResult cmd_torsor(const CatalogEntry& entry) {
  CommandResult r;
  TorsorReport rep = verify_torsor_counts(entry);
  r.output = torsor_to_json(rep);
  QGroupData q = q_group(entry);
  r.output["h1_center"] = {{"order", q.h1_z.order()}, {"invariants", q.h1_z.invariants}, {"elements", q.h1_z.elements}};
  r.output["h1_kernel_table"] = q.table;
  r.ok = rep.pass;
  return r;
}

CommandResult cmd_cone(const CatalogEntry& entry, const std::string& x_spec, const Weight& lambda, std::uint64_t seed,
                       std::size_t budget) {
  CommandResult r;
  Covector xi = parse_covector_spec(entry, x_spec);
  HCParameter lam = make_parameter(entry.roots, lambda);
  auto& out = r.output;
  out["group"] = entry.name;
  out["X"] = covector_record(entry, xi);
  out["parameter"] = weight_to_json(lam.lambda);
  OrbitLabel xl = real_orbit_label(entry, xi);
  out["X_label"] = label_to_json(entry, xl);
  auto section = kostant_section(entry, xi);
  SectionMeet meet = section_meets_orbit(entry, section, lam);
  out["meets"] = meet.meets;
  out["asymptotic_cone_member"] = asymptotic_cone_member(entry, xi, lam);
  if (out["asymptotic_cone_member"].get<bool>() != meet.meets) r.ok = false;
  out["fiber_point"] = matrix_to_json(meet.point);
  if (meet.meets) {
    out["witness"] = covector_record(entry, meet.witness);
    // Independent corroboration; "not found" is inconclusive.
    Matrix p = entry.lie.psi_inverse(entry.covector_of(lam.lambda));
    ConjugacyOracle oracle(entry, GroupSide::real_group, seed);
    OracleResult found = oracle.find(p, meet.point, budget);
    out["oracle"] = {{"result", found.conjugate ? "conjugate" : "not_found"}, {"words_tried", found.words_tried}};
  } else {
    out["witness"] = nullptr;
  }
  if (!entry.scaling_cocharacter.empty()) {
    int scaling = real_orbit_tag(entry, lift(asymptotic_cone_scaling(entry, lam)));
    out["scaling_route_meets"] = scaling == xl.tag;
    if ((scaling == xl.tag) != meet.meets) r.ok = false;
  }
  return r;
}

CommandResult cmd_qact(const CatalogEntry& entry, const std::string& code) {
  CommandResult r;
  OrbitLabel l = parse_label_code(code);
  r.output["group"] = entry.name;
  r.output["label"] = label_to_json(entry, l);
  json images = json::array();
  for (const auto& q : entry.q_representatives) {
    OrbitLabel image = q_action(entry, q, l);
    bool involutive = q_action(entry, q, image) == l;
    images.push_back({{"representative", matrix_to_json(q)},
                      {"image", label_to_json(entry, image)},
                      {"square_acts_trivially", involutive}});
    if (!involutive && q_order(entry) == 2) r.ok = false;
  }
  r.output["images"] = images;
  if (!images.empty()) r.output["image"] = images.front()["image"];
  return r;
}

CommandResult cmd_catalog_validate(const std::string& path) {
  CommandResult r;
  r.output["path"] = path;
  try {
    json list = json::array();
    for (const auto& e : load_catalog(path)) {
      list.push_back({{"name", e.name},
                      {"title", e.title},
                      {"dim", e.lie.dim()},
                      {"rank", e.lie.rank()},
                      {"roots", e.roots.size()},
                      {"large_chamber_classes", large_classes(e).size()},
                      {"golden_identities", e.golden.size()}});
    }
    r.output["entries"] = list;
    r.output["valid"] = true;
  } catch (const std::exception& ex) {
    r.output["valid"] = false;
    r.output["error"] = ex.what();
    r.ok = false;
  }
  return r;
}

std::string render_text(const std::string& command, const json& output) {
  std::ostringstream os;
  if (command == "verify-appendix" && output.contains("entries")) {
    for (const auto& e : output["entries"]) {
      for (const auto& id : e["identities"]) {
        os << (id["pass"].get<bool>() ? "PASS " : "FAIL ") << id["id"].get<std::string>();
        if (id.contains("detail")) os << "  [" << id["detail"].get<std::string>() << "]";
        os << '\n';
      }
      os << e["entry"].get<std::string>() << ": " << e["passed"] << " passed, " << e["failed"] << " failed\n";
    }
    return os.str();
  }
  for (const auto& [key, value] : output.items()) {
    os << key << ": ";
    if (value.is_string()) {
      os << value.get<std::string>();
    } else if (value.is_object() && value.contains("name") && value.contains("code")) {
      os << value["name"].get<std::string>() << " (" << value["code"].get<std::string>() << ")";
    } else {
      os << value.dump();
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace dsdict
