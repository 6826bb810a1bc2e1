#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace swf::harness {

enum class ZPoints { consecutive, geometric };
enum class Format { json, tsv };

std::string to_string(ZPoints z);
ZPoints zpoints_from_string(const std::string& s);
std::string to_string(Format f);
Format format_from_string(const std::string& s);

/// Raised for bad user input; the CLI maps it to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unset bounds fall back to each check's own default, and the defaults
/// are the acceptance bounds. A set bound overrides every check of that
/// kind, clamped to the check's hard limit.
struct SuiteConfig {
  std::optional<int> n_min, n_max;
  std::optional<int> k_min, k_max;
  std::optional<int> degree_max;
  ZPoints z_points = ZPoints::consecutive;
  int jobs = 1;
  std::optional<std::filesystem::path> out;
  Format format = Format::json;
  bool with_timings = false;
  std::vector<std::string> only;  ///< empty = every check

  /// Throws UsageError naming the offending key.
  void validate() const;

  /// Flat JSON object, keys as the long flag names ("n-max", "jobs", ...).
  static SuiteConfig from_json(const nlohmann::json& j);
};

enum class Status { pass, fail, skipped };
std::string to_string(Status s);

struct CheckReport {
  std::string check;
  nlohmann::json params = nlohmann::json::object();
  Status status = Status::pass;
  std::optional<std::string> witness;
  double ms = 0;

  void fail(std::string w) {
    if (status != Status::fail) witness = std::move(w);
    status = Status::fail;
  }
};

nlohmann::json to_json(const CheckReport& r, bool with_timings);

struct Check {
  std::string name;
  int criterion = 0;  ///< acceptance criterion number, 0 for supporting checks
  std::string summary;
  std::function<CheckReport(const SuiteConfig&)> run;
};

class CheckRegistry {
 public:
  void add(Check c);
  /// Replaces the check with the same name; throws if absent.
  void replace(Check c);
  [[nodiscard]] const Check* find(const std::string& name) const;
  [[nodiscard]] const std::vector<Check>& checks() const noexcept { return checks_; }

 private:
  std::vector<Check> checks_;
};

/// Every built-in check, in name order.
CheckRegistry default_registry();

/// Runs the selected checks on a pool of config.jobs workers. Reports are
/// ordered by check name. When config.out is set the directory is created
/// and probed before anything runs; an unwritable path throws
/// std::filesystem::filesystem_error.
std::vector<CheckReport> run_suite(const SuiteConfig& config,
                                   const CheckRegistry& registry = default_registry());

/// reports.json or reports.tsv content; byte-stable unless timings are on.
std::string render_reports(const std::vector<CheckReport>& reports, Format format,
                           bool with_timings);

void write_reports(const std::vector<CheckReport>& reports, const SuiteConfig& config);

bool all_passed(const std::vector<CheckReport>& reports);

/// Resolves a bound: override if set (clamped to [lo, hard]) else fallback.
int bound(const std::optional<int>& override_value, int fallback, int lo, int hard);

}  // namespace swf::harness
