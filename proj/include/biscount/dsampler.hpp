#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "biscount/bigraph.hpp"
#include "biscount/contracting.hpp"
#include "biscount/error.hpp"
#include "biscount/rational.hpp"
#include "biscount/vertex_set.hpp"

namespace biscount {

/// A 2-linked A' ⊆ A with N(A') = N(A).
struct SmallCover {
  VertexSet cover;
};

/// Greedy: start at the smallest vertex of A, then repeatedly add the vertex
/// of A that is 2-linked to the current set and covers the most new
/// neighbours of A (ties to the smaller index).
inline SmallCover find_small_cover(const BipartiteGraph& g, const VertexSet& a) {
  detail::require_part(a, Part::X, g.n(), "find_small_cover");
  if (a.empty()) throw InputError("find_small_cover: set is empty");
  if (!is_two_linked(g, a)) throw InputError("find_small_cover: set " + a.to_string() + " is not 2-linked");

  const VertexSet target = neighbors(g, a);
  VertexSet cover = g.empty_x();
  VertexSet covered = g.empty_y();
  VertexSet reach = g.empty_x();  // vertices 2-linked to the cover
  auto add = [&](std::size_t x) {
    cover.insert(x);
    covered |= g.nbr_of_x(x);
    reach |= g.two_step(x);
  };
  add(a.first());
  while (covered != target) {
    std::size_t best = g.n(), best_gain = 0;
    (reach & a).for_each([&](std::size_t x) {
      if (cover.contains(x)) return;
      const std::size_t gain = g.nbr_of_x(x).difference_size(covered);
      if (gain > best_gain) {
        best = x;
        best_gain = gain;
      }
    });
    // A is 2-linked, so some uncovered neighbour is always reachable.
    if (best == g.n()) throw InputError("find_small_cover: greedy stalled on " + a.to_string());
    add(best);
  }
  return {std::move(cover)};
}

struct CoverCountEstimate {
  Rational value;  // hits / samples * 2^|A|
  double eps_prime = 0;
  double rho = 0;
  std::uint64_t samples = 0;
  std::uint64_t hits = 0;
  std::size_t cover_size = 0;
  std::size_t set_size = 0;
};

struct SamplerConfig {
  std::uint64_t sample_budget = 100'000'000;
  unsigned threads = 1;
};

/// m = ceil(3 ln(2/rho) / (2^-s eps'^2)).
inline std::uint64_t sample_count(std::size_t cover_size, double eps_prime, double rho) {
  const double m = 3.0 * std::log(2.0 / rho) * std::ldexp(1.0, static_cast<int>(cover_size)) / (eps_prime * eps_prime);
  if (!std::isfinite(m) || m > 1.8e19) return UINT64_MAX;
  return static_cast<std::uint64_t>(std::ceil(m));
}

namespace detail {

inline constexpr std::uint64_t kSampleChunk = 1u << 14;

inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
  return VertexSet::mix(VertexSet::mix(seed ^ 0x6a09e667f3bcc909ull) + stream);
}

// Hits over chunks first_chunk, first_chunk + stride, ...; each chunk of
// kSampleChunk draws has its own generator seeded from (seed, chunk).
inline std::uint64_t count_hits(const BipartiteGraph& g, const VertexSet& a, const VertexSet& target,
                                std::uint64_t seed, std::uint64_t samples, std::uint64_t first_chunk,
                                std::uint64_t stride) {
  const std::vector<std::size_t> members = a.indices();
  VertexSet b = g.empty_x();
  VertexSet hood = g.empty_y();
  std::uint64_t hits = 0;
  const std::uint64_t chunks = (samples + kSampleChunk - 1) / kSampleChunk;
  for (std::uint64_t chunk = first_chunk; chunk < chunks; chunk += stride) {
    std::mt19937_64 rng(stream_seed(seed, chunk));
    const std::uint64_t begin = chunk * kSampleChunk;
    const std::uint64_t end = std::min(samples, begin + kSampleChunk);
    for (std::uint64_t s = begin; s < end; ++s) {
      b.clear();
      std::uint64_t bits = 0;
      for (std::size_t i = 0; i < members.size(); ++i) {
        if (i % 64 == 0) bits = rng();
        if (bits & 1u) b.insert(members[i]);
        bits >>= 1;
      }
      hood.clear();
      b.for_each([&](std::size_t x) { hood |= g.nbr_of_x(x); });
      if (hood == target && is_two_linked(g, b)) ++hits;
    }
  }
  return hits;
}

}  // namespace detail

/// Relative eps'-approximation, with probability at least 1 - rho, of
/// #{B ⊆ A : B 2-linked, N(B) = N(A)} by uniform subset sampling.
///
/// Every B ⊇ A' (the small cover) is a hit, so the hit rate is at least
/// 2^-|A'| and the sample count follows from a multiplicative Chernoff bound.
inline CoverCountEstimate estimate_component(const BipartiteGraph& g, const VertexSet& a, double eps_prime, double rho,
                                             std::uint64_t seed, const SamplerConfig& cfg = {}) {
  if (!(eps_prime > 0 && eps_prime <= 1)) throw InputError("estimate_component: eps' must lie in (0, 1]");
  if (!(rho > 0 && rho < 1)) throw InputError("estimate_component: rho must lie in (0, 1)");
  const SmallCover cover = find_small_cover(g, a);
  if (!is_closed(g, a)) throw InputError("estimate_component: set " + a.to_string() + " is not closed");

  CoverCountEstimate est;
  est.eps_prime = eps_prime;
  est.rho = rho;
  est.cover_size = cover.cover.size();
  est.set_size = a.size();
  est.samples = sample_count(est.cover_size, eps_prime, rho);
  if (est.samples > cfg.sample_budget)
    throw BudgetExceeded("estimate_component: " + std::to_string(est.samples) + " samples needed (cover size " +
                         std::to_string(est.cover_size) + ") exceed budget " + std::to_string(cfg.sample_budget));

  const VertexSet target = neighbors(g, a);
  const unsigned threads = std::max(1u, cfg.threads);
  if (threads == 1) {
    est.hits = detail::count_hits(g, a, target, seed, est.samples, 0, 1);
  } else {
    std::vector<std::uint64_t> partial(threads, 0);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w)
      pool.emplace_back([&, w] { partial[w] = detail::count_hits(g, a, target, seed, est.samples, w, threads); });
    for (auto& t : pool) t.join();
    for (auto h : partial) est.hits += h;
  }
  est.value = Rational(BigInt(est.hits) * pow2(a.size()), BigInt(est.samples));
  return est;
}

/// Per-component seed derived from the component's members.
inline std::uint64_t component_seed(std::uint64_t seed, const VertexSet& component) {
  return detail::stream_seed(seed, component.stable_hash());
}

/// Product of component estimates with eps' = eps / (2 max(l, 1)) and
/// per-component failure probability rho / l. Exactly 1 for A = ∅.
inline Rational estimate_DA(const BipartiteGraph& g, const ContractingSet& a, double eps, double rho,
                            std::uint64_t seed, const SamplerConfig& cfg = {},
                            std::vector<CoverCountEstimate>* log = nullptr) {
  const std::size_t parts = a.components.size();
  if (parts == 0) return Rational(1);
  const double eps_prime = std::min(1.0, eps / (2.0 * static_cast<double>(parts)));
  const double rho_each = rho / static_cast<double>(parts);
  Rational product(1);
  for (const VertexSet& comp : a.components) {
    CoverCountEstimate e = estimate_component(g, comp, eps_prime, rho_each, component_seed(seed, comp), cfg);
    product *= e.value;
    if (log) log->push_back(std::move(e));
  }
  return product;
}

}  // namespace biscount
