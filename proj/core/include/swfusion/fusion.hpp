#pragma once

// The fusion product of N copies of C^2, built by exact linear algebra on
// the t-degree filtration of (C^2)^{(x)N}.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "swfusion/numeric.hpp"
#include "swfusion/qpoly.hpp"

namespace swf {

/// Pairwise distinct evaluation points z_1..z_N.
class EvaluationParams {
 public:
  /// Throws std::domain_error if two points coincide.
  explicit EvaluationParams(std::vector<Rational> z);

  /// z_i = i.
  static EvaluationParams consecutive(int N);
  /// z_i = 2^i - 1, i.e. 1, 3, 7, 15, ...
  static EvaluationParams geometric(int N);

  [[nodiscard]] const std::vector<Rational>& points() const noexcept { return z_; }
  [[nodiscard]] int size() const noexcept { return static_cast<int>(z_.size()); }

 private:
  std::vector<Rational> z_;
};

/// Vector in (C^2)^{(x)N}; index bit i set means slot i+1 carries the
/// highest-weight vector.
struct TensorVector {
  int N = 0;
  std::vector<Rational> coeffs;

  static TensorVector lowest(int N);
  [[nodiscard]] bool is_zero() const;
  friend bool operator==(const TensorVector&, const TensorVector&) = default;
};

/// (e (x) t^j) acting on an evaluation tensor product.
TensorVector apply_e(int j, const TensorVector& v, const EvaluationParams& z);

/// dims[d][w] of gr V_N: d = t-degree, w = sl2 weight in -N..N step 2.
class GradedCharTable {
 public:
  GradedCharTable() = default;
  explicit GradedCharTable(int N);

  [[nodiscard]] int N() const noexcept { return N_; }
  [[nodiscard]] int max_degree() const noexcept { return N_ * (N_ - 1) / 2; }

  [[nodiscard]] std::int64_t dim(int degree, int weight) const;
  void set(int degree, int weight, std::int64_t value);

  [[nodiscard]] std::int64_t total() const;
  /// Sum over degrees for one weight.
  [[nodiscard]] std::int64_t weight_total(int weight) const;

  /// "degree\tweight\tdimension" header plus one row per nonzero entry,
  /// ordered by degree then weight.
  [[nodiscard]] std::string to_tsv() const;
  static GradedCharTable from_tsv(const std::string& text, int N);

  friend bool operator==(const GradedCharTable&, const GradedCharTable&) = default;

 private:
  [[nodiscard]] std::size_t index(int degree, int weight) const;
  int N_ = 0;
  std::vector<std::int64_t> dims_;
};

void to_json(nlohmann::json& j, const GradedCharTable& t);

enum class RankEngine {
  Rational,  ///< fraction-free elimination over Z; the reference path
  Modular,   ///< two independent 62-bit primes; Rational on disagreement
  Auto,      ///< Rational for N <= 10, Modular above
};

struct FiltrationOptions {
  RankEngine engine = RankEngine::Auto;
  int jobs = 1;  ///< weight blocks eliminated concurrently
};

/// Builds the filtration V^{(<=m)} from monomials e_{i_1}...e_{i_p} v_0
/// with indices in 0..N-1 and returns its graded dimensions.
GradedCharTable build_filtration(int N, const EvaluationParams& z,
                                 const FiltrationOptions& options = {});

/// k -> ch_q M_k from weight differences of the graded table.
std::map<int, QPoly> multiplicity_qcharacters_from_table(const GradedCharTable& t);

struct Theorem1Mismatch {
  int k;
  std::string z_choice;
  QPoly fusion;
  QPoly tableau;
};

struct Theorem1Report {
  int N = 0;
  bool pass = false;
  int shapes_compared = 0;
  bool z_independent = false;
  std::vector<Theorem1Mismatch> mismatches;
};

void to_json(nlohmann::json& j, const Theorem1Report& r);

/// Compares fusion multiplicity q-characters against maj_gf for both the
/// consecutive and geometric evaluation points.
Theorem1Report verify_theorem1(int N, const FiltrationOptions& options = {});

}  // namespace swf
