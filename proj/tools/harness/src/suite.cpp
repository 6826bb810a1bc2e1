#include "swfusion/harness/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

namespace swf::harness {

std::string to_string(ZPoints z) { return z == ZPoints::consecutive ? "consecutive" : "geometric"; }

ZPoints zpoints_from_string(const std::string& s) {
  if (s == "consecutive") return ZPoints::consecutive;
  if (s == "geometric") return ZPoints::geometric;
  throw UsageError("--z-points: expected consecutive or geometric, got '" + s + "'");
}

std::string to_string(Format f) { return f == Format::json ? "json" : "tsv"; }

Format format_from_string(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "tsv") return Format::tsv;
  throw UsageError("--format: expected json or tsv, got '" + s + "'");
}

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "?";
}

void SuiteConfig::validate() const {
  auto positive = [](const std::optional<int>& v, const char* flag) {
    if (v && *v < 1) throw UsageError(std::string(flag) + ": must be positive");
  };
  positive(n_min, "--n-min");
  positive(n_max, "--n-max");
  positive(k_min, "--k-min");
  positive(k_max, "--k-max");
  positive(degree_max, "--degree-max");
  if (jobs < 1) throw UsageError("--jobs: must be positive");
  if (n_min && n_max && *n_min > *n_max) throw UsageError("--n-min: exceeds --n-max");
  if (k_min && k_max && *k_min > *k_max) throw UsageError("--k-min: exceeds --k-max");
}

SuiteConfig SuiteConfig::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw UsageError("--config: expected a flat JSON object");
  SuiteConfig c;
  for (const auto& [key, v] : j.items()) {
    auto integer = [&]() {
      if (!v.is_number_integer()) throw UsageError("--config: '" + key + "' must be an integer");
      return v.get<int>();
    };
    auto text = [&]() {
      if (!v.is_string()) throw UsageError("--config: '" + key + "' must be a string");
      return v.get<std::string>();
    };
    if (key == "n-min") c.n_min = integer();
    else if (key == "n-max") c.n_max = integer();
    else if (key == "k-min") c.k_min = integer();
    else if (key == "k-max") c.k_max = integer();
    else if (key == "degree-max") c.degree_max = integer();
    else if (key == "jobs") c.jobs = integer();
    else if (key == "z-points") c.z_points = zpoints_from_string(text());
    else if (key == "format") c.format = format_from_string(text());
    else if (key == "out") c.out = text();
    else if (key == "with-timings") {
      if (!v.is_boolean()) throw UsageError("--config: 'with-timings' must be a boolean");
      c.with_timings = v.get<bool>();
    } else if (key == "only") {
      if (!v.is_array()) throw UsageError("--config: 'only' must be an array of check names");
      for (const auto& name : v) c.only.push_back(name.get<std::string>());
    } else {
      throw UsageError("--config: unknown key '" + key + "'");
    }
  }
  return c;
}

nlohmann::json to_json(const CheckReport& r, bool with_timings) {
  nlohmann::json j = {{"check", r.check}, {"params", r.params}, {"status", to_string(r.status)}};
  if (r.witness) j["witness"] = *r.witness;
  if (with_timings) j["ms"] = r.ms;
  return j;
}

void CheckRegistry::add(Check c) {
  if (find(c.name)) throw std::invalid_argument("duplicate check " + c.name);
  checks_.push_back(std::move(c));
  std::sort(checks_.begin(), checks_.end(),
            [](const Check& a, const Check& b) { return a.name < b.name; });
}

void CheckRegistry::replace(Check c) {
  for (auto& existing : checks_)
    if (existing.name == c.name) {
      existing = std::move(c);
      return;
    }
  throw std::invalid_argument("no check named " + c.name);
}

const Check* CheckRegistry::find(const std::string& name) const {
  for (const auto& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

int bound(const std::optional<int>& override_value, int fallback, int lo, int hard) {
  if (!override_value) return fallback;
  return std::clamp(*override_value, lo, hard);
}

namespace {

void probe_output_dir(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const auto probe = dir / ".swfusion-probe";
  std::ofstream f(probe);
  if (!f)
    throw std::filesystem::filesystem_error("output directory is not writable", dir,
                                            std::make_error_code(std::errc::permission_denied));
  f.close();
  std::filesystem::remove(probe);
}

CheckReport run_one(const Check& c, const SuiteConfig& config) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckReport r;
  try {
    r = c.run(config);
  } catch (const std::exception& e) {
    r = CheckReport{};
    r.fail(std::string("exception: ") + e.what());
  }
  r.check = c.name;
  if (r.status == Status::fail && !r.witness) r.witness = "unspecified";
  r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace

std::vector<CheckReport> run_suite(const SuiteConfig& config, const CheckRegistry& registry) {
  config.validate();
  if (config.out) probe_output_dir(*config.out);

  std::vector<const Check*> selected;
  if (config.only.empty()) {
    for (const auto& c : registry.checks()) selected.push_back(&c);
  } else {
    for (const auto& name : config.only) {
      const Check* c = registry.find(name);
      if (!c) throw UsageError("unknown check '" + name + "'");
      if (std::find(selected.begin(), selected.end(), c) == selected.end()) selected.push_back(c);
    }
  }

  std::vector<CheckReport> reports(selected.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < selected.size(); i = next++) reports[i] = run_one(*selected[i], config);
  };
  const auto width = std::min<std::size_t>(static_cast<std::size_t>(config.jobs), selected.size());
  if (width <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < width; ++t) pool.emplace_back(worker);
  }

  std::stable_sort(reports.begin(), reports.end(), [](const CheckReport& a, const CheckReport& b) {
    return a.check != b.check ? a.check < b.check : a.params.dump() < b.params.dump();
  });
  if (config.out) write_reports(reports, config);
  return reports;
}

std::string render_reports(const std::vector<CheckReport>& reports, Format format, bool with_timings) {
  if (format == Format::json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : reports) j.push_back(to_json(r, with_timings));
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "check\tstatus\tparams\twitness";
  if (with_timings) os << "\tms";
  os << '\n';
  for (const auto& r : reports) {
    std::string w = r.witness.value_or("");
    std::replace(w.begin(), w.end(), '\t', ' ');
    std::replace(w.begin(), w.end(), '\n', ' ');
    os << r.check << '\t' << to_string(r.status) << '\t' << r.params.dump() << '\t' << w;
    if (with_timings) os << '\t' << r.ms;
    os << '\n';
  }
  return os.str();
}

void write_reports(const std::vector<CheckReport>& reports, const SuiteConfig& config) {
  if (!config.out) return;
  const auto path = *config.out / (config.format == Format::json ? "reports.json" : "reports.tsv");
  std::ofstream f(path, std::ios::binary);
  if (!f)
    throw std::filesystem::filesystem_error("cannot write reports", path,
                                            std::make_error_code(std::errc::io_error));
  f << render_reports(reports, config.format, config.with_timings);
}

bool all_passed(const std::vector<CheckReport>& reports) {
  return std::none_of(reports.begin(), reports.end(),
                      [](const CheckReport& r) { return r.status == Status::fail; });
}

}  // namespace swf::harness
