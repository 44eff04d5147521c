#pragma once
// Report documents for the command-line front end.

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rgv/blocks.hpp"
#include "rgv/center.hpp"
#include "rgv/classify.hpp"
#include "rgv/config.hpp"
#include "rgv/error.hpp"
#include "rgv/gvduality.hpp"
#include "rgv/pointed.hpp"

namespace rgv {

inline nlohmann::json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

inline nlohmann::json category_json(const PointedCategory& c) {
  const FiniteGroup& G = c.group();
  nlohmann::json d = nlohmann::json::object();
  nlohmann::json gens = nlohmann::json::array();
  for (int g : G.generators()) {
    gens.push_back(G.name(g));
    d[G.name(g)] = c.d()(g).str();
  }
  return {{"group_order", G.order()},
          {"abelian", G.is_abelian()},
          {"generators", gens},
          {"lambda_trivial", c.lambda().is_trivial()},
          {"d_on_generators", d},
          {"conductor", c.conductor()}};
}

/// Cocycle, pivotality, half braidings of all explicit simples, K and D(s), ribbon.
/// Throws on the first failure so the caller gets the violating datum.
inline nlohmann::json verify_document(const PointedCategory& c) {
  if (auto v = check_three_cocycle(c.lambda()))
    throw Error(ErrorCode::cocycle_violation, "3-cocycle check fails", v->to_json(c.group()));
  auto piv = verify_pivotality(c);
  if (!piv.ok) throw Error(ErrorCode::pivotality_violation, "pivotal structure check fails", piv.to_json(c.group()));
  GVStructure gv = gv_structure(c);
  verify_half_braiding(gv.dualizing);
  std::size_t checked = 1;
  for (const auto& s : gv.simples.items) {
    if (!s.object) continue;
    verify_half_braiding(*s.object);
    verify_half_braiding(gv_dual(*s.object));
    checked += 2;
  }
  std::string axioms = gv.ring.check_axioms();
  if (!axioms.empty()) throw Error(ErrorCode::internal, "fusion ring axioms fail", {{"reason", axioms}});
  auto ribbon = verify_ribbon(gv);
  if (!ribbon.ok) throw Error(ErrorCode::ribbon_violation, "theta_{Ds} != theta_s", ribbon.to_json());
  return {{"cocycle_ok", true},
          {"pivotality_ok", true},
          {"half_braidings_checked", checked},
          {"fusion_ring_ok", true},
          {"ribbon_ok", true}};
}

inline nlohmann::json simples_document(const GVStructure& gv) {
  const FiniteGroup& G = gv.category.group();
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t s = 0; s < gv.simples.size(); ++s) {
    const auto& item = gv.simples[s];
    rows.push_back({{"label", item.label},
                    {"dim", item.dim},
                    {"grade", G.name(item.grade)},
                    {"explicit", item.explicit_matrices()},
                    {"theta", display(gv.theta[s])},
                    {"gv_dual", gv.simples[gv.dual_of[s]].label}});
  }
  return {{"count", gv.simples.size()}, {"family", to_string(gv.simples.family)}, {"simples", rows}};
}

inline nlohmann::json spherical_document(const GVStructure& gv) {
  nlohmann::json j = sphericity_report(gv).to_json();
  j["dualizing_object"] = {{"grade", gv.category.group().name(gv.category.group().identity())},
                           {"half_braiding", [&] {
                              nlohmann::json k = nlohmann::json::object();
                              const FiniteGroup& G = gv.category.group();
                              for (int h = 0; h < G.order(); ++h) k[G.name(h)] = gv.category.kappa(h).str();
                              return k;
                            }()}};
  return j;
}

inline nlohmann::json blocks_document(const GVStructure& gv, int max_genus, int genus_bound) {
  auto table = block_table(gv, max_genus, genus_bound);
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t g = 0; g < table.size(); ++g) rows.push_back({{"genus", g}, {"dim", integer_json(table[g])}});
  return {{"engine", to_string(gv.ring.engine())}, {"table", rows}};
}

inline nlohmann::json classify_document(const GVStructure& gv) {
  BalancedFusionData b = balanced_data(gv);
  return classify(b).to_json(b.ring);
}

inline nlohmann::json run_command(const std::string& command, const SessionConfig& cfg) {
  PointedCategory c = build_category(cfg);
  nlohmann::json out = {{"command", command}, {"category", category_json(c)}};
  if (command == "verify") {
    out["verify"] = verify_document(c);
    return out;
  }
  GVStructure gv = gv_structure(c);
  if (command == "simples") {
    out["simples"] = simples_document(gv);
  } else if (command == "spherical") {
    out["spherical"] = spherical_document(gv);
  } else if (command == "blocks") {
    out["blocks"] = blocks_document(gv, cfg.genus, cfg.genus_bound);
  } else if (command == "classify") {
    out["classify"] = classify_document(gv);
  } else if (command == "report") {
    out["verify"] = verify_document(c);
    out["simples"] = simples_document(gv);
    out["spherical"] = spherical_document(gv);
    out["ribbon"] = verify_ribbon(gv).to_json();
    out["blocks"] = blocks_document(gv, cfg.genus, cfg.genus_bound);
    out["classify"] = classify_document(gv);
  } else {
    throw Error(ErrorCode::config_parse, "unknown command '" + command + "'");
  }
  return out;
}

namespace detail {

inline void flatten(const nlohmann::json& j, const std::string& prefix, std::vector<std::string>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out.push_back(prefix + ": " + (j.is_string() ? j.get<std::string>() : j.dump()));
  }
}

}  // namespace detail

/// Line-oriented rendering: "key.path: value", with the blocks table aligned.
inline std::string render_text(const nlohmann::json& doc) {
  std::vector<std::string> lines;
  nlohmann::json rest = doc;
  std::string table;
  if (doc.contains("blocks")) {
    rest.erase("blocks");
    std::ostringstream os;
    os << "blocks.engine: " << doc["blocks"]["engine"].get<std::string>() << "\n";
    std::size_t w = 3;
    for (const auto& r : doc["blocks"]["table"]) {
      std::string v = r["dim"].is_string() ? r["dim"].get<std::string>() : r["dim"].dump();
      w = std::max(w, v.size());
    }
    os << "genus  " << std::string(w - 3, ' ') << "dim\n";
    for (const auto& r : doc["blocks"]["table"]) {
      std::string g = r["genus"].dump();
      std::string v = r["dim"].is_string() ? r["dim"].get<std::string>() : r["dim"].dump();
      os << std::string(5 - std::min<std::size_t>(5, g.size()), ' ') << g << "  " << std::string(w - v.size(), ' ') << v
         << "\n";
    }
    table = os.str();
  }
  detail::flatten(rest, "", lines);
  std::string s;
  for (const auto& l : lines) s += l + "\n";
  return s + table;
}

/// Process exit status for an error code.
inline int exit_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::config_parse: return 2;
    case ErrorCode::unsupported_family: return 3;
    case ErrorCode::cap_exceeded: return 4;
    case ErrorCode::cocycle_violation:
    case ErrorCode::pivotality_violation:
    case ErrorCode::half_braiding_violation:
    case ErrorCode::ribbon_violation:
    case ErrorCode::sphericity_disagreement: return 5;
    case ErrorCode::invalid_group:
    case ErrorCode::invalid_homomorphism:
    case ErrorCode::precondition: return 6;
    case ErrorCode::internal: return 1;
  }
  return 1;
}

}  // namespace rgv
