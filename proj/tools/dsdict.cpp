#include <iostream>

#include "CLI11.hpp"

#include "dsdict/commands.hpp"
#include "dsdict/error.hpp"

using namespace dsdict;

namespace {

std::string error_kind(const Error& ex) {
  if (dynamic_cast<const ParseError*>(&ex)) return "parse";
  if (dynamic_cast<const ValidationError*>(&ex)) return "validation";
  if (dynamic_cast<const ConsistencyError*>(&ex)) return "consistency";
  if (dynamic_cast<const DomainError*>(&ex)) return "domain";
  return "error";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact dictionary between generic discrete series and their AV, WF and Whittaker invariants"};
  app.require_subcommand(1);

  std::string catalog_path = default_catalog_path();
  std::string format = "text";
  app.add_option("--catalog", catalog_path, "catalog file");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

  std::string group;
  std::optional<long> k;
  std::string weight;
  std::uint64_t seed = 1;
  std::size_t budget = ConjugacyOracle::default_budget;
  std::string x_spec;
  std::string label;
  std::vector<std::string> tamper;

  auto add_group = [&](CLI::App* sub) { sub->add_option("--group", group, "catalog entry, e.g. sl2r or sp4r")->required(); };
  auto add_param = [&](CLI::App* sub) {
    auto* ko = sub->add_option("--k", k, "SL(2) parameter k, i.e. weight (k)");
    auto* wo = sub->add_option("--weight", weight, "weight coordinates, e.g. 3,-1");
    ko->excludes(wo);
  };

  auto* dict = app.add_subcommand("dict", "full dictionary record for one parameter");
  add_group(dict);
  add_param(dict);

  auto* verify = app.add_subcommand("verify-appendix", "replay the golden identities stored in the catalog");
  verify->add_option("--tamper", tamper, "named element to perturb before replaying (fault injection)");

  auto* torsor = app.add_subcommand("torsor", "torsor counts and Q(G)");
  add_group(torsor);

  auto* cone = app.add_subcommand("cone", "does the Kostant section of X meet the orbit of the parameter");
  add_group(cone);
  add_param(cone);
  cone->add_option("--X", x_spec, "covector, e.g. -ER* or wf:+")->required();
  cone->add_option("--seed", seed, "oracle seed");
  cone->add_option("--budget", budget, "oracle word budget");

  auto* qact = app.add_subcommand("qact", "action of the Q(G) representative on a label");
  add_group(qact);
  qact->add_option("--label", label, "label code, e.g. wf:+")->required();

  auto* validate = app.add_subcommand("catalog-validate", "load and validate the catalog");

  CLI11_PARSE(app, argc, argv);

  auto emit = [&](const std::string& name, const CommandResult& r) {
    if (format == "json") {
      std::cout << r.output.dump(2) << '\n';
    } else {
      std::cout << render_text(name, r.output);
    }
    return r.ok ? 0 : 1;
  };

  try {
    if (*validate) return emit("catalog-validate", cmd_catalog_validate(catalog_path));
    auto entries = load_catalog(catalog_path);
    if (*verify) return emit("verify-appendix", cmd_verify_appendix(entries, tamper));
    const CatalogEntry& entry = find_entry(entries, group);
    auto parameter = [&]() -> Weight {
      if (k) return {Rational(*k)};
      if (!weight.empty()) return parse_weight(weight);
      throw ParseError("give --k or --weight");
    };
    if (*dict) return emit("dict", cmd_dict(entry, parameter()));
    if (*torsor) return emit("torsor", cmd_torsor(entry));
    if (*cone) return emit("cone", cmd_cone(entry, x_spec, parameter(), seed, budget));
    if (*qact) return emit("qact", cmd_qact(entry, label));
  } catch (const Error& ex) {
    nlohmann::json err = {{"error", ex.what()}, {"type", error_kind(ex)}};
    if (format == "json") {
      std::cout << err.dump(2) << '\n';
    } else {
      std::cerr << "error: " << ex.what() << '\n';
    }
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 2;
  }
  return 1;
}
