#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

namespace rgv {

/// Failure categories. The CLI maps each one onto a distinct exit status.
enum class ErrorCode {
  config_parse,
  unsupported_family,
  cap_exceeded,
  invalid_group,
  invalid_homomorphism,
  cocycle_violation,
  pivotality_violation,
  half_braiding_violation,
  ribbon_violation,
  sphericity_disagreement,
  precondition,
  internal,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::config_parse: return "config_parse";
    case ErrorCode::unsupported_family: return "unsupported_family";
    case ErrorCode::cap_exceeded: return "cap_exceeded";
    case ErrorCode::invalid_group: return "invalid_group";
    case ErrorCode::invalid_homomorphism: return "invalid_homomorphism";
    case ErrorCode::cocycle_violation: return "cocycle_violation";
    case ErrorCode::pivotality_violation: return "pivotality_violation";
    case ErrorCode::half_braiding_violation: return "half_braiding_violation";
    case ErrorCode::ribbon_violation: return "ribbon_violation";
    case ErrorCode::sphericity_disagreement: return "sphericity_disagreement";
    case ErrorCode::precondition: return "precondition";
    case ErrorCode::internal: return "internal";
  }
  return "unknown";
}

/// Exception carrying a machine-readable code and the violating datum.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, nlohmann::json detail = {})
      : std::runtime_error(message), code_(code), detail_(std::move(detail)) {}

  ErrorCode code() const noexcept { return code_; }
  const nlohmann::json& detail() const noexcept { return detail_; }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["code"] = to_string(code_);
    j["message"] = what();
    if (!detail_.is_null()) j["detail"] = detail_;
    return j;
  }

 private:
  ErrorCode code_;
  nlohmann::json detail_;
};

}  // namespace rgv
