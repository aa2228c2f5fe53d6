#pragma once

// The subcommands of the command-line tool, as functions returning JSON records.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dsdict/catalog.hpp"
#include "dsdict/orbits.hpp"

namespace dsdict {

struct CommandResult {
  nlohmann::json output;
  bool ok = true;
};

/// "3,-1" or "3/2, 1/2".
Weight parse_weight(const std::string& text);
/// A label code ("wf:-") or a sum of dual-basis terms ("-ER*", "2Htheta*", "X[1,1]*-(1/2)h1*").
Covector parse_covector_spec(const CatalogEntry& entry, const std::string& spec);

nlohmann::json label_to_json(const CatalogEntry& entry, const OrbitLabel& l);
/// Raw coordinates plus the expansion in every dual basis of the entry.
nlohmann::json covector_record(const CatalogEntry& entry, const Covector& xi);

CommandResult cmd_dict(const CatalogEntry& entry, const Weight& lambda);
CommandResult cmd_verify_appendix(const std::vector<CatalogEntry>& entries, const std::vector<std::string>& tamper);
CommandResult cmd_torsor(const CatalogEntry& entry);
CommandResult cmd_cone(const CatalogEntry& entry, const std::string& x_spec, const Weight& lambda, std::uint64_t seed,
                       std::size_t budget);
CommandResult cmd_qact(const CatalogEntry& entry, const std::string& label_code);
CommandResult cmd_catalog_validate(const std::string& path);

/// Human-readable rendering of a command record.
std::string render_text(const std::string& command, const nlohmann::json& output);

}  // namespace dsdict
