#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

namespace swf {

/// Outcome of a library-level verification routine. A failed report
/// always names the first counterexample in `witness`.
struct VerificationReport {
  bool pass = true;
  std::optional<std::string> witness;
  nlohmann::json details = nlohmann::json::object();

  void fail(std::string w) {
    if (pass) witness = std::move(w);
    pass = false;
  }
};

inline void to_json(nlohmann::json& j, const VerificationReport& r) {
  j = {{"pass", r.pass}, {"details", r.details}};
  if (r.witness) j["witness"] = *r.witness;
}

}  // namespace swf
