#include "swfusion/fusion.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "swfusion/linalg.hpp"
#include "swfusion/qseries.hpp"

namespace swf {

EvaluationParams::EvaluationParams(std::vector<Rational> z) : z_(std::move(z)) {
  for (auto& x : z_) x.canonicalize();
  for (std::size_t i = 0; i < z_.size(); ++i)
    for (std::size_t j = i + 1; j < z_.size(); ++j)
      if (z_[i] == z_[j]) throw std::domain_error("EvaluationParams: points must be distinct");
}

EvaluationParams EvaluationParams::consecutive(int N) {
  std::vector<Rational> z;
  for (int i = 1; i <= N; ++i) z.emplace_back(i);
  return EvaluationParams(std::move(z));
}

EvaluationParams EvaluationParams::geometric(int N) {
  std::vector<Rational> z;
  BigInt pw = 2;
  for (int i = 1; i <= N; ++i, pw *= 2) z.emplace_back(BigInt(pw - 1));
  return EvaluationParams(std::move(z));
}

TensorVector TensorVector::lowest(int N) {
  if (N < 0 || N > 24) throw std::domain_error("TensorVector: unsupported N");
  TensorVector v{N, std::vector<Rational>(std::size_t{1} << N)};
  v.coeffs[0] = 1;
  return v;
}

bool TensorVector::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& x) { return x == 0; });
}

TensorVector apply_e(int j, const TensorVector& v, const EvaluationParams& z) {
  if (j < 0) throw std::domain_error("apply_e: negative mode");
  if (z.size() != v.N) throw std::domain_error("apply_e: evaluation point count != N");
  std::vector<Rational> zj(static_cast<std::size_t>(v.N));
  for (int i = 0; i < v.N; ++i) {
    mpz_pow_ui(zj[static_cast<std::size_t>(i)].get_num_mpz_t(),
               z.points()[static_cast<std::size_t>(i)].get_num_mpz_t(), static_cast<unsigned>(j));
    mpz_pow_ui(zj[static_cast<std::size_t>(i)].get_den_mpz_t(),
               z.points()[static_cast<std::size_t>(i)].get_den_mpz_t(), static_cast<unsigned>(j));
  }
  TensorVector out{v.N, std::vector<Rational>(v.coeffs.size())};
  for (std::size_t b = 0; b < v.coeffs.size(); ++b) {
    if (v.coeffs[b] == 0) continue;
    for (int i = 0; i < v.N; ++i) {
      const std::size_t bit = std::size_t{1} << i;
      if (b & bit) continue;
      out.coeffs[b | bit] += zj[static_cast<std::size_t>(i)] * v.coeffs[b];
    }
  }
  return out;
}

GradedCharTable::GradedCharTable(int N) : N_(N) {
  if (N < 0) throw std::domain_error("GradedCharTable: negative N");
  dims_.assign(static_cast<std::size_t>(max_degree() + 1) * static_cast<std::size_t>(N + 1), 0);
}

std::size_t GradedCharTable::index(int degree, int weight) const {
  if (degree < 0 || degree > max_degree() || weight < -N_ || weight > N_ ||
      (weight + N_) % 2 != 0)
    throw std::out_of_range("GradedCharTable: (degree, weight) out of range");
  return static_cast<std::size_t>(degree) * static_cast<std::size_t>(N_ + 1) +
         static_cast<std::size_t>((weight + N_) / 2);
}

std::int64_t GradedCharTable::dim(int degree, int weight) const {
  if (degree < 0 || degree > max_degree() || weight < -N_ || weight > N_) return 0;
  return dims_[index(degree, weight)];
}

void GradedCharTable::set(int degree, int weight, std::int64_t value) {
  dims_[index(degree, weight)] = value;
}

std::int64_t GradedCharTable::total() const {
  std::int64_t s = 0;
  for (auto d : dims_) s += d;
  return s;
}

std::int64_t GradedCharTable::weight_total(int weight) const {
  std::int64_t s = 0;
  for (int d = 0; d <= max_degree(); ++d) s += dim(d, weight);
  return s;
}

std::string GradedCharTable::to_tsv() const {
  std::ostringstream os;
  os << "degree\tweight\tdimension\n";
  for (int d = 0; d <= max_degree(); ++d)
    for (int w = -N_; w <= N_; w += 2)
      if (const auto v = dim(d, w); v != 0) os << d << '\t' << w << '\t' << v << '\n';
  return os.str();
}

GradedCharTable GradedCharTable::from_tsv(const std::string& text, int N) {
  GradedCharTable t(N);
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line != "degree\tweight\tdimension")
    throw std::invalid_argument("GradedCharTable::from_tsv: missing header");
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    int d = 0, w = 0;
    std::int64_t v = 0;
    if (!(ls >> d >> w >> v)) throw std::invalid_argument("GradedCharTable::from_tsv: bad row");
    t.set(d, w, v);
  }
  return t;
}

void to_json(nlohmann::json& j, const GradedCharTable& t) {
  nlohmann::json entries = nlohmann::json::array();
  for (int d = 0; d <= t.max_degree(); ++d)
    for (int w = -t.N(); w <= t.N(); w += 2)
      if (const auto v = t.dim(d, w); v != 0)
        entries.push_back({{"degree", d}, {"weight", w}, {"dimension", v}});
  j = {{"N", t.N()}, {"entries", std::move(entries)}};
}

namespace {

/// Weakly decreasing index sequences of length p over 0..N-1, grouped by
/// total degree.
std::vector<std::vector<std::vector<int>>> monomials_by_degree(int N, int p) {
  std::vector<std::vector<std::vector<int>>> out(static_cast<std::size_t>(N * (N - 1) / 2 + 1));
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int max_index, int deg) {
    if (static_cast<int>(cur.size()) == p) {
      if (deg < static_cast<int>(out.size())) out[static_cast<std::size_t>(deg)].push_back(cur);
      return;
    }
    for (int i = max_index; i >= 0; --i) {
      cur.push_back(i);
      rec(i, deg + i);
      cur.pop_back();
    }
  };
  rec(N - 1, 0);
  for (auto& layer : out) std::sort(layer.begin(), layer.end());
  return out;
}

/// Masks of popcount p in increasing order.
std::vector<std::uint32_t> block_masks(int N, int p) {
  std::vector<std::uint32_t> m;
  for (std::uint32_t b = 0; b < (1u << N); ++b)
    if (std::popcount(b) == p) m.push_back(b);
  return m;
}

/// Evaluates e_{a_1}...e_{a_p} v_0 restricted to the popcount-p block by a
/// subset recurrence. Ring must provide zero/one, +, *.
template <class Ring>
struct MonomialEvaluator {
  int N;
  std::vector<std::vector<typename Ring::value_type>> powers;  // [slot][exponent]
  std::vector<typename Ring::value_type> cur, next;
  Ring ring;

  MonomialEvaluator(int n, const std::vector<typename Ring::value_type>& points, Ring r)
      : N(n), ring(r) {
    powers.resize(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) {
      auto& row = powers[static_cast<std::size_t>(i)];
      row.push_back(ring.one());
      for (int e = 1; e < N; ++e) row.push_back(ring.mul(row.back(), points[static_cast<std::size_t>(i)]));
    }
    cur.assign(std::size_t{1} << N, ring.zero());
    next.assign(std::size_t{1} << N, ring.zero());
  }

  std::vector<typename Ring::value_type> operator()(const std::vector<int>& word,
                                                    const std::vector<std::uint32_t>& masks) {
    std::fill(cur.begin(), cur.end(), ring.zero());
    cur[0] = ring.one();
    std::vector<std::uint32_t> layer{0};
    for (int exponent : word) {
      std::vector<std::uint32_t> next_layer;
      for (std::uint32_t b : layer) {
        if (ring.is_zero(cur[b])) continue;
        for (int i = 0; i < N; ++i) {
          const std::uint32_t bit = 1u << i;
          if (b & bit) continue;
          if (ring.is_zero(next[b | bit])) next_layer.push_back(b | bit);
          ring.add_mul(next[b | bit], powers[static_cast<std::size_t>(i)][static_cast<std::size_t>(exponent)], cur[b]);
        }
      }
      for (std::uint32_t b : layer) cur[b] = ring.zero();
      std::sort(next_layer.begin(), next_layer.end());
      next_layer.erase(std::unique(next_layer.begin(), next_layer.end()), next_layer.end());
      for (std::uint32_t b : next_layer) {
        cur[b] = next[b];
        next[b] = ring.zero();
      }
      layer = std::move(next_layer);
    }
    std::vector<typename Ring::value_type> out;
    out.reserve(masks.size());
    for (std::uint32_t b : masks) {
      out.push_back(cur[b]);
      cur[b] = ring.zero();
    }
    return out;
  }
};

struct IntegerRing {
  using value_type = BigInt;
  static BigInt zero() { return 0; }
  static BigInt one() { return 1; }
  static bool is_zero(const BigInt& x) { return x == 0; }
  static BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
  static void add_mul(BigInt& acc, const BigInt& a, const BigInt& b) {
    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
};

struct ModRing {
  using value_type = std::uint64_t;
  std::uint64_t p;
  static std::uint64_t zero() { return 0; }
  static std::uint64_t one() { return 1; }
  static bool is_zero(std::uint64_t x) { return x == 0; }
  [[nodiscard]] std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<UInt128>(a) * b % p);
  }
  void add_mul(std::uint64_t& acc, std::uint64_t a, std::uint64_t b) const {
    acc = static_cast<std::uint64_t>((static_cast<UInt128>(a) * b + acc) % p);
  }
};

/// Graded dimensions (by degree) of one weight block.
using BlockDims = std::vector<std::int64_t>;

BlockDims eliminate_block_integer(int N, int p, const std::vector<BigInt>& points) {
  const auto masks = block_masks(N, p);
  const auto words = monomials_by_degree(N, p);
  MonomialEvaluator<IntegerRing> eval(N, points, IntegerRing{});
  IntegerEchelon ech(masks.size());
  BlockDims dims(words.size(), 0);
  for (std::size_t d = 0; d < words.size() && ech.rank() < masks.size(); ++d)
    for (const auto& w : words[d]) {
      if (ech.insert(eval(w, masks))) ++dims[d];
      if (ech.rank() == masks.size()) break;
    }
  return dims;
}

BlockDims eliminate_block_modular(int N, int p, const std::vector<BigInt>& points,
                                  std::uint64_t prime) {
  const auto masks = block_masks(N, p);
  const auto words = monomials_by_degree(N, p);
  std::vector<std::uint64_t> pts;
  for (const auto& x : points) pts.push_back(reduce_mod(x, prime));
  MonomialEvaluator<ModRing> eval(N, pts, ModRing{prime});
  ModularEchelon ech(masks.size(), prime);
  BlockDims dims(words.size(), 0);
  for (std::size_t d = 0; d < words.size() && ech.rank() < masks.size(); ++d)
    for (const auto& w : words[d]) {
      if (ech.insert(eval(w, masks))) ++dims[d];
      if (ech.rank() == masks.size()) break;
    }
  return dims;
}

std::uint64_t prime_near(unsigned long bits, unsigned long offset) {
  BigInt start = 1;
  start <<= bits;
  start -= offset;
  BigInt p;
  mpz_nextprime(p.get_mpz_t(), start.get_mpz_t());
  return p.get_ui();
}

bool distinct_mod(const std::vector<BigInt>& pts, std::uint64_t prime) {
  std::vector<std::uint64_t> r;
  for (const auto& x : pts) r.push_back(reduce_mod(x, prime));
  std::sort(r.begin(), r.end());
  return std::adjacent_find(r.begin(), r.end()) == r.end();
}

template <class F>
std::vector<BlockDims> run_blocks(int N, int jobs, F&& block_fn) {
  std::vector<BlockDims> out(static_cast<std::size_t>(N + 1));
  const int width = std::max(1, std::min(jobs, N + 1));
  if (width == 1) {
    for (int p = 0; p <= N; ++p) out[static_cast<std::size_t>(p)] = block_fn(p);
    return out;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < width; ++t)
    pool.emplace_back([&] {
      for (int p = next++; p <= N; p = next++) out[static_cast<std::size_t>(p)] = block_fn(p);
    });
  for (auto& th : pool) th.join();
  return out;
}

GradedCharTable assemble(int N, const std::vector<BlockDims>& blocks) {
  GradedCharTable t(N);
  for (int p = 0; p <= N; ++p)
    for (std::size_t d = 0; d < blocks[static_cast<std::size_t>(p)].size(); ++d)
      t.set(static_cast<int>(d), 2 * p - N, blocks[static_cast<std::size_t>(p)][d]);
  return t;
}

}  // namespace

GradedCharTable build_filtration(int N, const EvaluationParams& z, const FiltrationOptions& options) {
  if (N < 2 || N % 2 != 0) throw std::domain_error("build_filtration: N must be even and >= 2");
  if (N > 12) throw std::domain_error("build_filtration: N above 12 is out of range");
  if (z.size() != N) throw std::domain_error("build_filtration: need exactly N evaluation points");

  // Clearing a common denominator rescales each monomial vector by a
  // nonzero constant, which leaves every span unchanged.
  BigInt den = 1;
  for (const auto& x : z.points()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  std::vector<BigInt> pts;
  for (const auto& x : z.points()) pts.emplace_back(x.get_num() * (den / x.get_den()));

  RankEngine engine = options.engine;
  if (engine == RankEngine::Auto) engine = N <= 10 ? RankEngine::Rational : RankEngine::Modular;

  if (engine == RankEngine::Modular) {
    static const std::uint64_t p1 = prime_near(62, 1u << 20);
    static const std::uint64_t p2 = prime_near(62, 1u << 30);
    if (distinct_mod(pts, p1) && distinct_mod(pts, p2)) {
      auto a = run_blocks(N, options.jobs, [&](int p) { return eliminate_block_modular(N, p, pts, p1); });
      auto b = run_blocks(N, options.jobs, [&](int p) { return eliminate_block_modular(N, p, pts, p2); });
      if (a == b) return assemble(N, a);
    }
  }
  return assemble(N, run_blocks(N, options.jobs,
                                [&](int p) { return eliminate_block_integer(N, p, pts); }));
}

std::map<int, QPoly> multiplicity_qcharacters_from_table(const GradedCharTable& t) {
  const int N = t.N();
  if (N % 2 != 0) throw std::domain_error("multiplicity_qcharacters_from_table: N must be even");
  for (int w = -N; w <= N; w += 2) {
    const BigInt expected = binomial(static_cast<unsigned>(N), static_cast<unsigned>((N + w) / 2));
    if (BigInt(static_cast<long>(t.weight_total(w))) != expected)
      throw ConsistencyError("graded table weight " + std::to_string(w) + " sums to " +
                             std::to_string(t.weight_total(w)) + ", expected " + expected.get_str());
  }
  std::map<int, QPoly> out;
  for (int k = 0; k <= N / 2; ++k) {
    std::vector<BigInt> c(static_cast<std::size_t>(t.max_degree()) + 1);
    for (int d = 0; d <= t.max_degree(); ++d) {
      const std::int64_t m = t.dim(d, 2 * k) - t.dim(d, 2 * k + 2);
      if (m < 0)
        throw ConsistencyError("negative multiplicity at degree " + std::to_string(d) +
                               ", k = " + std::to_string(k));
      c[static_cast<std::size_t>(d)] = static_cast<long>(m);
    }
    out.emplace(k, QPoly(std::move(c)));
  }
  return out;
}

void to_json(nlohmann::json& j, const Theorem1Report& r) {
  nlohmann::json mm = nlohmann::json::array();
  for (const auto& m : r.mismatches)
    mm.push_back({{"k", m.k}, {"z", m.z_choice}, {"fusion", m.fusion}, {"tableau", m.tableau}});
  j = {{"N", r.N},
       {"pass", r.pass},
       {"shapes_compared", r.shapes_compared},
       {"z_independent", r.z_independent},
       {"mismatches", std::move(mm)}};
}

Theorem1Report verify_theorem1(int N, const FiltrationOptions& options) {
  Theorem1Report rep;
  rep.N = N;
  const int n = N / 2;
  const std::pair<std::string, EvaluationParams> choices[] = {
      {"consecutive", EvaluationParams::consecutive(N)},
      {"geometric", EvaluationParams::geometric(N)}};
  std::vector<GradedCharTable> tables;
  for (const auto& [name, z] : choices) {
    tables.push_back(build_filtration(N, z, options));
    const auto chars = multiplicity_qcharacters_from_table(tables.back());
    for (int k = 0; k <= n; ++k) {
      const QPoly tab = maj_gf(Partition({n + k, n - k}));
      const QPoly& fus = chars.at(k);
      if (fus != tab) rep.mismatches.push_back({k, name, fus, tab});
    }
  }
  rep.shapes_compared = n + 1;
  rep.z_independent = tables[0] == tables[1];
  rep.pass = rep.mismatches.empty() && rep.z_independent;
  return rep;
}

}  // namespace swf
