#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "swfusion/harness/suite.hpp"
#include "swfusion/harness/tables.hpp"
#include "swfusion/qseries.hpp"

using namespace swf;
using namespace swf::harness;

namespace {

std::filesystem::path scratch_dir(const std::string& name) {
  auto d = std::filesystem::temp_directory_path() / ("swfusion-test-" + name);
  std::filesystem::remove_all(d);
  return d;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

SuiteConfig small() {
  SuiteConfig c;
  c.n_max = 2;
  c.k_max = 1;
  c.degree_max = 2;
  return c;
}

}  // namespace

TEST_CASE("registry covers every acceptance criterion") {
  const auto reg = default_registry();
  std::set<int> covered;
  for (const auto& c : reg.checks()) covered.insert(c.criterion);
  for (int i = 1; i <= 12; ++i) CHECK(covered.count(i) == 1);
  CHECK(reg.checks().size() >= 20);
  CHECK(std::is_sorted(reg.checks().begin(), reg.checks().end(),
                       [](const Check& a, const Check& b) { return a.name < b.name; }));
  CHECK(reg.find("theorem1") != nullptr);
  CHECK(reg.find("nope") == nullptr);
}

TEST_CASE("smallest bounds: every check passes") {
  const auto reports = run_suite(small());
  CHECK(reports.size() == default_registry().checks().size());
  for (const auto& r : reports) {
    INFO(r.check);
    CHECK(r.status == Status::pass);
  }
  CHECK(all_passed(reports));
}

TEST_CASE("corrupted oracle is caught with a witness") {
  auto reg = default_registry();
  reg.replace({"qhook-oracle", 3, "corrupted", [](const SuiteConfig&) {
                 CheckReport r;
                 r.params = {{"N_max", 4}};
                 for (int N = 1; N <= 4; ++N)
                   for (int b = 0; 2 * b <= N; ++b) {
                     const Partition shape{N - b, b};
                     QPoly oracle = qhook_maj_gf(shape);
                     if (shape == Partition{2, 2}) oracle += QPoly{1};
                     if (maj_gf(shape) != oracle) {
                       r.fail("shape " + shape.to_string());
                       return r;
                     }
                   }
                 return r;
               }});
  SuiteConfig c = small();
  c.only = {"qhook-oracle", "gauss-binomial-laws"};
  const auto reports = run_suite(c, reg);
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].check == "gauss-binomial-laws");
  CHECK(reports[0].status == Status::pass);
  CHECK(reports[1].status == Status::fail);
  REQUIRE(reports[1].witness);
  CHECK(*reports[1].witness == "shape (2,2)");
  CHECK_FALSE(all_passed(reports));
}

TEST_CASE("a throwing check is reported as a failure") {
  CheckRegistry reg;
  reg.add({"boom", 0, "", [](const SuiteConfig&) -> CheckReport { throw std::runtime_error("kaput"); }});
  const auto reports = run_suite({}, reg);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].status == Status::fail);
  CHECK(reports[0].witness.value_or("").find("kaput") != std::string::npos);
}

TEST_CASE("reports are byte-identical across runs and job counts") {
  SuiteConfig c;
  c.n_max = 6;
  c.k_max = 2;
  c.degree_max = 4;
  c.out = scratch_dir("determinism-a");
  run_suite(c);
  const std::string a = slurp(*c.out / "reports.json");
  c.out = scratch_dir("determinism-b");
  c.jobs = 3;
  run_suite(c);
  CHECK(slurp(*c.out / "reports.json") == a);
  CHECK(a.find("\"ms\"") == std::string::npos);
  const auto j = nlohmann::json::parse(a);
  CHECK(j.is_array());
  CHECK(j[0].contains("check"));
  CHECK(j[0].contains("params"));
  CHECK(j[0].at("status") == "pass");

  c.format = Format::tsv;
  c.with_timings = true;
  run_suite(c);
  const std::string tsv = slurp(*c.out / "reports.tsv");
  CHECK(tsv.rfind("check\tstatus\tparams\twitness\tms\n", 0) == 0);
}

TEST_CASE("unwritable output path fails before any check runs") {
  const auto blocker = scratch_dir("blocker");
  std::ofstream(blocker) << "file, not a directory";
  int ran = 0;
  CheckRegistry reg;
  reg.add({"counter", 0, "", [&ran](const SuiteConfig&) {
             ++ran;
             return CheckReport{};
           }});
  SuiteConfig c;
  c.out = blocker / "sub";
  CHECK_THROWS_AS(run_suite(c, reg), std::filesystem::filesystem_error);
  CHECK(ran == 0);
  std::filesystem::remove(blocker);
}

TEST_CASE("config validation and file format") {
  SuiteConfig bad;
  bad.jobs = 0;
  CHECK_THROWS_WITH_AS(bad.validate(), "--jobs: must be positive", UsageError);
  bad = {};
  bad.n_max = 0;
  CHECK_THROWS_AS(bad.validate(), UsageError);
  CHECK_THROWS_AS(run_suite(bad), UsageError);
  SuiteConfig unknown;
  unknown.only = {"no-such-check"};
  CHECK_THROWS_AS(run_suite(unknown), UsageError);

  const auto c = SuiteConfig::from_json(
      nlohmann::json::parse(R"({"n-max": 4, "jobs": 2, "z-points": "geometric", "format": "tsv"})"));
  CHECK(c.n_max == 4);
  CHECK(c.jobs == 2);
  CHECK(c.z_points == ZPoints::geometric);
  CHECK(c.format == Format::tsv);
  CHECK_THROWS_AS(SuiteConfig::from_json(nlohmann::json::parse(R"({"n_max": 4})")), UsageError);
  CHECK_THROWS_AS(SuiteConfig::from_json(nlohmann::json::parse(R"({"n-max": "4"})")), UsageError);
  CHECK_THROWS_AS(SuiteConfig::from_json(nlohmann::json::parse("[1]")), UsageError);
  CHECK_THROWS_AS(zpoints_from_string("random"), UsageError);
}

TEST_CASE("bounds resolve to defaults, overrides and hard limits") {
  CHECK(bound(std::nullopt, 10, 2, 12) == 10);
  CHECK(bound(4, 10, 2, 12) == 4);
  CHECK(bound(40, 10, 2, 12) == 12);
  CHECK(bound(1, 10, 2, 12) == 2);
}

TEST_CASE("tables") {
  TableParams p;
  p.N = 4;
  const std::string maj = emit_table(TableKind::maj_dist, p);
  CHECK(maj == "shape\tpolynomial\tcoefficients\n(2,2)\tq^2 + q^4\t0,0,1,0,1\n(3,1)\tq + q^2 + q^3\t0,1,1,1\n(4)\t1\t1\n");
  CHECK(emit_table(TableKind::maj_dist, p) == maj);
  const std::string kf = emit_table(TableKind::kostka_foulkes, p);
  CHECK(kf.find("(2,2)\tq^2 + q^4") != std::string::npos);
  CHECK(kf.find("(4)\tq^6") != std::string::npos);

  TableParams q;
  q.k = 3;
  q.format = Format::json;
  const auto qb = nlohmann::json::parse(emit_table(TableKind::q_binomial, q));
  CHECK(qb.at("m") == 6);
  CHECK(qb.at("coefficients").get<QPoly>() == gauss_binomial(6, 3));

  const auto gc = emit_table(TableKind::graded_char, p);
  CHECK(gc.rfind("degree\tweight\tdimension\n", 0) == 0);
  CHECK(gc.find("4\t0\t1\n") != std::string::npos);

  TableParams g;
  g.k = 2;
  const auto gs = emit_table(TableKind::gensegal_matrix, g);
  CHECK(gs.find("(2,2)\t(2,2)\t0,0\t-1/2\n") != std::string::npos);

  CHECK_THROWS_WITH_AS(emit_table(TableKind::maj_dist, TableParams{}), "--N: required for maj-dist", UsageError);
  TableParams odd;
  odd.N = 5;
  CHECK_THROWS_WITH_AS(emit_table(TableKind::graded_char, odd), "--N: must be even for graded-char", UsageError);
  TableParams m_low;
  m_low.k = 3;
  m_low.m = 2;
  CHECK_THROWS_AS(emit_table(TableKind::q_binomial, m_low), UsageError);
  CHECK_THROWS_AS(table_kind_from_string("histogram"), UsageError);
  CHECK(table_kind_from_string("gensegal-matrix") == TableKind::gensegal_matrix);
}
