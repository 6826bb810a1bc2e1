#include "swfusion/harness/tables.hpp"

#include <sstream>

#include "swfusion/fusion.hpp"
#include "swfusion/qseries.hpp"
#include "swfusion/symfunc.hpp"

namespace swf::harness {

std::string to_string(TableKind k) {
  switch (k) {
    case TableKind::maj_dist: return "maj-dist";
    case TableKind::kostka_foulkes: return "kostka-foulkes";
    case TableKind::graded_char: return "graded-char";
    case TableKind::q_binomial: return "q-binomial";
    case TableKind::gensegal_matrix: return "gensegal-matrix";
  }
  return "?";
}

TableKind table_kind_from_string(const std::string& s) {
  for (auto k : {TableKind::maj_dist, TableKind::kostka_foulkes, TableKind::graded_char, TableKind::q_binomial,
                 TableKind::gensegal_matrix})
    if (to_string(k) == s) return k;
  throw UsageError("unknown table kind '" + s +
                   "' (expected maj-dist, kostka-foulkes, graded-char, q-binomial or gensegal-matrix)");
}

namespace {

int require(const std::optional<int>& v, const char* flag, TableKind kind, int lo, int hi) {
  if (!v) throw UsageError(std::string(flag) + ": required for " + to_string(kind));
  if (*v < lo || *v > hi)
    throw UsageError(std::string(flag) + ": must lie in " + std::to_string(lo) + ".." + std::to_string(hi) +
                     " for " + to_string(kind));
  return *v;
}

std::string coefficient_list(const QPoly& p) {
  std::string s;
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) s += (i ? "," : "") + p.coefficients()[i].get_str();
  return s.empty() ? "0" : s;
}

std::string shape_table(TableKind kind, int N, Format f) {
  nlohmann::json rows = nlohmann::json::array();
  std::ostringstream tsv;
  tsv << "shape\tpolynomial\tcoefficients\n";
  for (int b = N / 2; b >= 0; --b) {
    const Partition shape{N - b, b};
    const QPoly p = kind == TableKind::maj_dist ? maj_gf(shape) : kostka_foulkes_column(shape, N);
    tsv << shape.to_string() << '\t' << p.to_string() << '\t' << coefficient_list(p) << '\n';
    rows.push_back({{"shape", shape.parts()}, {"coefficients", p}});
  }
  if (f == Format::tsv) return tsv.str();
  return nlohmann::json{{"kind", to_string(kind)}, {"N", N}, {"rows", rows}}.dump(2) + "\n";
}

std::string gensegal_table(int k, Format f) {
  nlohmann::json rows = nlohmann::json::array();
  std::ostringstream tsv;
  tsv << "nu\tmu\tword\tcoefficient\n";
  const Rational sign = (k * (k - 1) / 2) % 2 == 0 ? 1 : -1;
  for (const auto& nu : partitions_in_box(k, k))
    for (const auto& mu : partitions_of(nu.size(), k, k)) {
      const BigInt K = kostka_number(nu, mu);
      if (K == 0) continue;
      std::vector<int> word, r(static_cast<std::size_t>(k) + 1, 0);
      for (int j = 0; j < k; ++j) {
        word.push_back(k - mu[static_cast<std::size_t>(j)]);
        ++r[static_cast<std::size_t>(mu[static_cast<std::size_t>(j)])];
      }
      BigInt denom = 1;
      for (int rj : r) denom *= factorial(static_cast<unsigned>(rj));
      Rational c(K, denom);
      c.canonicalize();
      c *= sign;
      std::string w;
      for (std::size_t j = 0; j < word.size(); ++j) w += (j ? "," : "") + std::to_string(word[j]);
      tsv << nu.to_string() << '\t' << mu.to_string() << '\t' << w << '\t' << c.get_str() << '\n';
      rows.push_back({{"nu", nu.parts()}, {"mu", mu.parts()}, {"word", word},
                      {"numerator", c.get_num().get_str()}, {"denominator", c.get_den().get_str()}});
    }
  if (f == Format::tsv) return tsv.str();
  return nlohmann::json{{"kind", "gensegal-matrix"}, {"k", k}, {"rows", rows}}.dump(2) + "\n";
}

}  // namespace

std::string emit_table(TableKind kind, const TableParams& p) {
  switch (kind) {
    case TableKind::maj_dist:
    case TableKind::kostka_foulkes:
      return shape_table(kind, require(p.N, "--N", kind, 1, 20), p.format);
    case TableKind::graded_char: {
      const int N = require(p.N, "--N", kind, 2, 12);
      if (N % 2) throw UsageError("--N: must be even for graded-char");
      const auto z = p.z_points == ZPoints::consecutive ? EvaluationParams::consecutive(N)
                                                        : EvaluationParams::geometric(N);
      const auto t = build_filtration(N, z);
      if (p.format == Format::tsv) return t.to_tsv();
      return nlohmann::json(t).dump(2) + "\n";
    }
    case TableKind::q_binomial: {
      const int k = require(p.k, "--k", kind, 0, 64);
      const int m = p.m ? *p.m : 2 * k;
      if (m < k || m > 128) throw UsageError("--m: must lie in --k..128 for q-binomial");
      const QPoly g = gauss_binomial(m, k);
      if (p.format == Format::json)
        return nlohmann::json{{"kind", "q-binomial"}, {"m", m}, {"k", k}, {"coefficients", g}}.dump(2) + "\n";
      std::ostringstream os;
      os << "degree\tcoefficient\n";
      for (int d = 0; d <= g.degree(); ++d) os << d << '\t' << g.coeff(d).get_str() << '\n';
      return os.str();
    }
    case TableKind::gensegal_matrix:
      return gensegal_table(require(p.k, "--k", kind, 1, 4), p.format);
  }
  throw UsageError("unknown table kind");
}

}  // namespace swf::harness
