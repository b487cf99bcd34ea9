#pragma once

#include <bit>
#include <chrono>
#include <functional>
#include <cmath>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "biscount/bigraph.hpp"
#include "biscount/contracting.hpp"
#include "biscount/dsampler.hpp"
#include "biscount/error.hpp"
#include "biscount/rational.hpp"
#include "biscount/spectral.hpp"

namespace biscount {

inline constexpr std::size_t kDefaultExactLimit = 24;

/// i(G) = sum over A ⊆ X of 2^{|Y \ N(A)|}, evaluated exactly.
inline BigInt brute_force_count(const BipartiteGraph& g, std::size_t limit = kDefaultExactLimit) {
  const std::size_t n = g.n();
  if (n > limit || n > 62)
    throw BudgetExceeded("brute_force_count: n = " + std::to_string(n) + " exceeds limit " + std::to_string(limit));
  std::vector<std::uint64_t> hood(n);
  for (std::size_t x = 0; x < n; ++x) hood[x] = g.nbr_of_x(x).words()[0];

  // by_free[w] = number of A with |Y \ N(A)| = w
  std::vector<std::uint64_t> by_free(n + 1, 0);
  auto visit = [&](auto&& self, std::size_t from, std::uint64_t covered) -> void {
    ++by_free[n - static_cast<std::size_t>(std::popcount(covered))];
    for (std::size_t x = from; x < n; ++x) self(self, x + 1, covered | hood[x]);
  };
  visit(visit, 0, 0);

  BigInt total = 0;
  for (std::size_t w = 0; w <= n; ++w) total += BigInt(by_free[w]) << static_cast<unsigned>(w);
  return total;
}

struct T0Selection {
  std::size_t t0 = 1;
  bool enumeration_regime = false;  // t0 <= d / 2^8
  bool near_cut_regime = false;     // L * t0 <= d / 256
};

inline T0Selection regime_for(std::size_t n, std::size_t d, std::size_t t0) {
  T0Selection s;
  s.t0 = t0;
  s.enumeration_regime = 256 * t0 <= d;
  if (t0 < d) {
    const std::size_t bound = n / (d - t0);
    s.near_cut_regime = 256 * bound * t0 <= d;
  }
  return s;
}

/// t0 = max(1, ceil(cConst * ln(n / eps))) together with its regime flags.
inline T0Selection select_t0(std::size_t n, std::size_t d, double eps, double c_const) {
  if (!(eps > 0 && eps <= 1)) throw InputError("select_t0: eps must lie in (0, 1]");
  const double raw = std::ceil(c_const * std::log(static_cast<double>(n) / eps));
  const std::size_t t0 = raw < 1 ? 1 : static_cast<std::size_t>(raw);
  return regime_for(n, d, t0);
}

struct Budgets {
  std::uint64_t net_points = 10'000'000;
  std::size_t family_size = 1'000'000;
  std::uint64_t samples = 100'000'000;
  std::size_t subset_cap = 40;
};

struct RunConfig {
  double epsilon = 0.25;
  std::uint64_t seed = 0;
  std::optional<std::size_t> t0_override;
  double c_const = 1.0;
  Budgets budgets;
  std::size_t brute_force_threshold = kDefaultExactLimit;
  /// Limit for the exact counter when it is used as the fallback.
  std::size_t exact_limit = kDefaultExactLimit;
  /// When false the approximation pipeline runs even outside the parameter
  /// regime its guarantees are stated for.
  bool enforce_regime = true;
  unsigned threads = 1;
  /// Optional observers for the intermediate families (debug dumps).
  std::function<void(const CutFamily&)> on_cut_family;
  std::function<void(const ContractingFamily&)> on_family;

  void validate() const {
    if (!(epsilon > 0)) throw InputError("epsilon must be positive");
    if (!(c_const > 0)) throw InputError("c-const must be positive");
    if (t0_override && *t0_override < 1) throw InputError("t0 must be at least 1");
    if (budgets.net_points == 0 || budgets.family_size == 0 || budgets.samples == 0 || budgets.subset_cap == 0)
      throw InputError("budgets must be positive");
  }
};

enum class Method { fpras, exact_fallback };

inline const char* method_name(Method m) { return m == Method::fpras ? "fpras" : "exact-fallback"; }

struct ApproxResult {
  Rational estimate;
  double log2_estimate = 0;
  double epsilon = 0;
  Method method = Method::exact_fallback;
  std::size_t t0 = 0;
  std::size_t family_size = 0;
  std::size_t threshold_rank = 0;
  std::size_t cut_family_size = 0;
  std::uint64_t seed = 0;
  std::chrono::nanoseconds wall_time{0};
  T0Selection regime;
  std::string fallback_reason;
  std::vector<CoverCountEstimate> estimates;
};

namespace detail {

inline std::string fallback_reason(const BipartiteGraph& g, const RunConfig& cfg, double eps, const T0Selection& sel) {
  const double n = static_cast<double>(g.n()), d = static_cast<double>(g.d());
  if (g.n() <= cfg.brute_force_threshold) return "n <= brute-force threshold";
  if (!cfg.enforce_regime) return {};
  if (eps <= n * std::exp(-d / (256.0 * cfg.c_const))) return "epsilon below the brute-force crossover n*exp(-d/(256C))";
  if (!sel.enumeration_regime) return "t0 > d/256";
  if (!sel.near_cut_regime) return "L*t0 > d/256 (near-cut enumeration regime empty)";
  return {};
}

}  // namespace detail

/// Relative epsilon-approximation of the number of independent sets.
///
/// Pipeline: Laplacian spectrum, cut family, contracting family at t0, one
/// cover-count estimate per component, and the exact sum of
/// D_A * 2^{|Y \ N(A)|}. Falls back to exact counting below the brute-force
/// threshold or, when enforce_regime is set, outside the valid regime.
inline ApproxResult count_bis(const BipartiteGraph& g, const RunConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  cfg.validate();
  ApproxResult res;
  res.seed = cfg.seed;
  res.epsilon = std::min(cfg.epsilon, 1.0);
  const double eps = res.epsilon;
  res.regime = cfg.t0_override ? regime_for(g.n(), g.d(), *cfg.t0_override)
                               : select_t0(g.n(), g.d(), eps, cfg.c_const);
  res.t0 = res.regime.t0;
  res.fallback_reason = detail::fallback_reason(g, cfg, eps, res.regime);

  if (!res.fallback_reason.empty()) {
    res.method = Method::exact_fallback;
    res.estimate = Rational(brute_force_count(g, cfg.exact_limit));
  } else {
    res.method = Method::fpras;
    const SpectralBasis basis = decompose(g);
    res.threshold_rank = basis.threshold_rank;
    NetConfig net;
    net.budget = cfg.budgets.net_points;
    const CutFamily cuts = build_cut_family(g, basis, net);
    res.cut_family_size = cuts.size();
    if (cfg.on_cut_family) cfg.on_cut_family(cuts);
    FamilyConfig fcfg;
    fcfg.near.subset_cap = cfg.budgets.subset_cap;
    fcfg.family_budget = cfg.budgets.family_size;
    const ContractingFamily fam = build_family(g, cuts, res.t0, fcfg);
    res.family_size = fam.size();
    if (cfg.on_family) cfg.on_family(fam);

    // Union bound over every component estimate.
    std::size_t calls = 0;
    for (const auto& a : fam.sets) calls += a.components.size();
    const double rho_poly = std::pow(static_cast<double>(g.n()) / eps, -3.0);
    const double rho_each = std::min(rho_poly, 0.25 / static_cast<double>(std::max<std::size_t>(calls, 1)));

    SamplerConfig scfg;
    scfg.sample_budget = cfg.budgets.samples;
    scfg.threads = cfg.threads;
    // Estimates keyed by (number of components, component).
    std::map<std::size_t, std::unordered_map<VertexSet, Rational, VertexSetHash>> memo;
    Rational total = 0;
    for (const ContractingSet& a : fam.sets) {
      const std::size_t parts = a.components.size();
      Rational d_a = 1;
      for (const VertexSet& comp : a.components) {
        auto& cache = memo[parts];
        auto it = cache.find(comp);
        if (it == cache.end()) {
          ContractingSet single = ContractingSet::from(g, comp);
          std::vector<CoverCountEstimate> log;
          // estimate_DA on a one-component set with (eps/parts, rho_each) gives
          // eps' = eps / (2 parts) and failure probability rho_each.
          Rational v = estimate_DA(g, single, eps / static_cast<double>(parts), rho_each, cfg.seed, scfg, &log);
          for (auto& e : log) res.estimates.push_back(std::move(e));
          it = cache.emplace(comp, std::move(v)).first;
        }
        d_a *= it->second;
      }
      total += d_a * Rational(pow2(a.weight_exponent));
    }
    res.estimate = std::move(total);
  }
  res.log2_estimate = log2_of(res.estimate);
  res.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
  return res;
}

}  // namespace biscount
