#pragma once
// Session configuration: JSON description of (G, lambda, d) plus run options.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rgv/blocks.hpp"
#include "rgv/cocycles.hpp"
#include "rgv/error.hpp"
#include "rgv/groups.hpp"
#include "rgv/pointed.hpp"

namespace rgv {

struct SessionConfig {
  nlohmann::json group = {{"type", "cyclic"}, {"n", 1}};
  nlohmann::json lambda = {{"type", "trivial"}};
  nlohmann::json d = "trivial";
  std::string command;
  int genus = 2;
  int genus_bound = kDefaultGenusBound;
  std::string format = "json";
  int cap_group_order = kDefaultGroupOrderCap;
};

namespace detail {

template <class T>
T get_field(const nlohmann::json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw Error(ErrorCode::config_parse, where + ": missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::config_parse, where + ": bad field '" + key + "'", {{"reason", e.what()}});
  }
}

}  // namespace detail

inline FiniteGroup parse_group(const nlohmann::json& j, int cap) {
  if (!j.is_object()) throw Error(ErrorCode::config_parse, "group: expected an object", {{"value", j}});
  const auto type = detail::get_field<std::string>(j, "type", "group");
  if (type == "cyclic") return FiniteGroup::cyclic(detail::get_field<int>(j, "n", "group"), cap);
  if (type == "product") {
    auto factors = j.contains("factors") ? j.at("factors") : nlohmann::json();
    if (!factors.is_array() || factors.empty())
      throw Error(ErrorCode::config_parse, "group: product needs a non-empty 'factors' list");
    FiniteGroup g = parse_group(factors[0], cap);
    for (std::size_t i = 1; i < factors.size(); ++i) g = FiniteGroup::direct_product(g, parse_group(factors[i], cap), cap);
    return g;
  }
  if (type == "perm") {
    int degree = detail::get_field<int>(j, "degree", "group");
    auto gens = detail::get_field<std::vector<std::vector<int>>>(j, "generators", "group");
    return FiniteGroup::from_generators(degree, gens, cap);
  }
  if (type == "cayley") {
    auto table = detail::get_field<std::vector<std::vector<int>>>(j, "table", "group");
    std::vector<std::string> names;
    if (j.contains("names")) names = detail::get_field<std::vector<std::string>>(j, "names", "group");
    return FiniteGroup::from_cayley(std::move(table), std::move(names), cap);
  }
  throw Error(ErrorCode::config_parse, "group: unknown type '" + type + "'");
}

inline ThreeCocycle parse_lambda(const nlohmann::json& j, const FiniteGroup& g) {
  if (j.is_string() && j.get<std::string>() == "trivial") return ThreeCocycle::trivial(g);
  if (!j.is_object()) throw Error(ErrorCode::config_parse, "lambda: expected an object", {{"value", j}});
  const auto type = detail::get_field<std::string>(j, "type", "lambda");
  if (type == "trivial") return ThreeCocycle::trivial(g);
  if (type == "cyclic") {
    if (!g.is_cyclic())
      throw Error(ErrorCode::unsupported_family, "lambda: cyclic representative needs a cyclic group");
    return cyclic_cocycle_on(g, detail::get_field<std::int64_t>(j, "q", "lambda"));
  }
  if (type == "table") {
    auto order = detail::get_field<std::int64_t>(j, "order", "lambda");
    auto entries = detail::get_field<std::vector<std::int64_t>>(j, "entries", "lambda");
    return verify_three_cocycle(ThreeCocycle::from_exponents(g, order, std::move(entries)));
  }
  throw Error(ErrorCode::config_parse, "lambda: unknown type '" + type + "'");
}

/// "trivial", or one root of unity per canonical generator of the group.
inline GroupHom parse_d(const nlohmann::json& j, const FiniteGroup& g) {
  if (j.is_null() || (j.is_string() && j.get<std::string>() == "trivial")) return GroupHom::trivial(g);
  if (!j.is_array()) throw Error(ErrorCode::config_parse, "d: expected \"trivial\" or a list", {{"value", j}});
  std::vector<RootOfUnity> vals;
  for (const auto& v : j) vals.push_back(root_of_unity_from_json(v));
  return GroupHom::from_generator_values(g, vals);
}

inline PointedCategory build_category(const SessionConfig& cfg) {
  FiniteGroup g = parse_group(cfg.group, cfg.cap_group_order);
  ThreeCocycle lam = parse_lambda(cfg.lambda, g);
  GroupHom d = parse_d(cfg.d, g);
  return PointedCategory(g, lam, d);
}

inline SessionConfig parse_config(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::config_parse, "config: expected a JSON object");
  SessionConfig c;
  if (!j.contains("group")) throw Error(ErrorCode::config_parse, "config: missing 'group'");
  c.group = j.at("group");
  if (j.contains("lambda")) c.lambda = j.at("lambda");
  if (j.contains("d")) c.d = j.at("d");
  if (j.contains("command")) c.command = detail::get_field<std::string>(j, "command", "config");
  if (j.contains("genus")) c.genus = detail::get_field<int>(j, "genus", "config");
  if (j.contains("format")) c.format = detail::get_field<std::string>(j, "format", "config");
  if (j.contains("caps")) {
    const auto& caps = j.at("caps");
    if (caps.contains("group_order")) c.cap_group_order = detail::get_field<int>(caps, "group_order", "caps");
    if (caps.contains("genus")) c.genus_bound = detail::get_field<int>(caps, "genus", "caps");
  }
  return c;
}

inline SessionConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::config_parse, "cannot open config file", {{"path", path}});
  std::stringstream ss;
  ss << in.rdbuf();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(ss.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::config_parse, "config is not valid JSON", {{"path", path}, {"reason", e.what()}});
  }
  return parse_config(j);
}

}  // namespace rgv
