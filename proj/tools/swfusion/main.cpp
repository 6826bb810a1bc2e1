#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "swfusion/harness/suite.hpp"
#include "swfusion/harness/tables.hpp"

namespace h = swf::harness;

namespace {

struct Flags {
  std::optional<int> n_min, n_max, k_min, k_max, degree_max, N, k, m, jobs;
  std::optional<std::string> z_points, out, format, config;
  bool with_timings = false;
  std::vector<std::string> only;
};

void add_suite_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--n-min", f.n_min, "Smallest N for N-indexed checks");
  cmd->add_option("--n-max", f.n_max, "Largest N for N-indexed checks");
  cmd->add_option("--k-min", f.k_min, "Smallest k/K for box-indexed checks");
  cmd->add_option("--k-max", f.k_max, "Largest k/K for box-indexed checks");
  cmd->add_option("--degree-max", f.degree_max, "Degree bound for operator checks");
  cmd->add_option("--z-points", f.z_points, "Evaluation points: consecutive or geometric");
  cmd->add_option("--jobs", f.jobs, "Checks run concurrently");
  cmd->add_option("--out", f.out, "Directory for the report file");
  cmd->add_option("--format", f.format, "Report format: json or tsv");
  cmd->add_option("--config", f.config, "Flat JSON file of flag values");
  cmd->add_flag("--with-timings", f.with_timings, "Include wall time in the report file");
}

h::SuiteConfig make_config(const Flags& f) {
  h::SuiteConfig c;
  if (f.config) {
    std::ifstream in(*f.config);
    if (!in) throw h::UsageError("--config: cannot read " + *f.config);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw h::UsageError(std::string("--config: ") + e.what());
    }
    c = h::SuiteConfig::from_json(j);
  }
  if (f.n_min) c.n_min = f.n_min;
  if (f.n_max) c.n_max = f.n_max;
  if (f.k_min) c.k_min = f.k_min;
  if (f.k_max) c.k_max = f.k_max;
  if (f.degree_max) c.degree_max = f.degree_max;
  if (f.N) c.n_min = c.n_max = f.N;
  if (f.k) c.k_min = c.k_max = f.k;
  if (f.z_points) c.z_points = h::zpoints_from_string(*f.z_points);
  if (f.jobs) c.jobs = *f.jobs;
  if (f.out) c.out = *f.out;
  if (f.format) c.format = h::format_from_string(*f.format);
  if (f.with_timings) c.with_timings = true;
  if (!f.only.empty()) c.only = f.only;
  c.validate();
  return c;
}

int run_checks(const h::SuiteConfig& config) {
  const auto reports = h::run_suite(config);
  for (const auto& r : reports) {
    std::cout << std::left << std::setw(8) << h::to_string(r.status) << std::setw(26) << r.check
              << r.params.dump() << "  " << std::fixed << std::setprecision(1) << r.ms << " ms\n";
    if (r.witness) std::cout << "        witness: " << *r.witness << '\n';
  }
  return h::all_passed(reports) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of two-row tableau, fusion product and Fock space identities"};
  app.require_subcommand(1);
  Flags f;

  auto* suite = app.add_subcommand("suite", "Run every registered check");
  add_suite_flags(suite, f);
  suite->add_option("--only", f.only, "Restrict to the named checks");

  std::string check_name;
  auto* verify = app.add_subcommand("verify", "Run one named check");
  verify->add_option("check", check_name, "Check name (see 'list')")->required();
  add_suite_flags(verify, f);
  verify->add_option("--N", f.N, "Run only this N");
  verify->add_option("--k", f.k, "Run only this k/K");

  std::string kind;
  auto* table = app.add_subcommand("table", "Emit a table");
  table->add_option("kind", kind, "maj-dist, kostka-foulkes, graded-char, q-binomial or gensegal-matrix")->required();
  table->add_option("--N", f.N, "Tableau length");
  table->add_option("--k", f.k, "Box size or lower entry");
  table->add_option("--m", f.m, "Upper entry of the q-binomial (default 2k)");
  table->add_option("--z-points", f.z_points, "Evaluation points: consecutive or geometric");
  table->add_option("--format", f.format, "json or tsv (default tsv)");
  table->add_option("--out", f.out, "Output file (default stdout)");

  auto* list = app.add_subcommand("list", "List registered checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*list) {
      const auto registry = h::default_registry();
      for (const auto& c : registry.checks())
        std::cout << std::left << std::setw(26) << c.name
                  << (c.criterion ? "criterion " + std::to_string(c.criterion) : std::string("supporting"))
                  << "  " << c.summary << '\n';
      return 0;
    }
    if (*suite) return run_checks(make_config(f));
    if (*verify) {
      if (!h::default_registry().find(check_name)) throw h::UsageError("unknown check '" + check_name + "'");
      Flags g = f;
      g.only = {check_name};
      return run_checks(make_config(g));
    }
    if (*table) {
      h::TableParams p;
      p.N = f.N;
      p.k = f.k;
      p.m = f.m;
      if (f.z_points) p.z_points = h::zpoints_from_string(*f.z_points);
      if (f.format) p.format = h::format_from_string(*f.format);
      const std::string body = h::emit_table(h::table_kind_from_string(kind), p);
      if (!f.out) {
        std::cout << body;
        return 0;
      }
      std::ofstream out(*f.out, std::ios::binary);
      if (!out) {
        std::cerr << "error: --out: cannot write " << *f.out << '\n';
        return 2;
      }
      out << body;
      return 0;
    }
  } catch (const h::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: --out: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
