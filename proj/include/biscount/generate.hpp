#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "biscount/bigraph.hpp"
#include "biscount/error.hpp"

namespace biscount {

inline constexpr std::size_t kGeneratorRejectionBudget = 10'000;

namespace detail {

// Fisher-Yates on raw engine output.
template <class Rng>
void shuffle_indices(std::vector<std::size_t>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng() % i]);
}

// Kuhn's augmenting-path matching on the still-unused edges, visiting
// vertices and candidate partners in random order. Returns false when no
// perfect matching exists.
template <class Rng>
bool random_perfect_matching(const std::vector<std::vector<char>>& used, Rng& rng,
                             std::vector<std::size_t>& match_of_x) {
  const std::size_t n = used.size();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::vector<std::size_t>> options(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y)
      if (!used[x][y]) options[x].push_back(y);
    shuffle_indices(options[x], rng);
  }
  std::vector<std::size_t> match_of_y(n, kNone);
  std::vector<char> visited(n);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  shuffle_indices(order, rng);

  auto augment = [&](auto&& self, std::size_t x) -> bool {
    for (std::size_t y : options[x]) {
      if (visited[y]) continue;
      visited[y] = 1;
      if (match_of_y[y] == kNone || self(self, match_of_y[y])) {
        match_of_y[y] = x;
        return true;
      }
    }
    return false;
  };
  for (std::size_t x : order) {
    std::fill(visited.begin(), visited.end(), 0);
    if (!augment(augment, x)) return false;
  }
  match_of_x.assign(n, kNone);
  for (std::size_t y = 0; y < n; ++y) match_of_x[match_of_y[y]] = y;
  return true;
}

}  // namespace detail

/// Random simple d-regular bipartite graph built as the union of d random
/// perfect matchings, each drawn among the edges not used so far.
/// Deterministic in `seed`.
///
/// After k matchings the unused edges form an (n-k)-regular bipartite graph,
/// which always has a perfect matching. Failed draws are retried up to
/// kGeneratorRejectionBudget times.
inline BipartiteGraph generate_regular(std::size_t n, std::size_t d, std::uint64_t seed) {
  if (n == 0 || d < 1 || d > n)
    throw InputError("generate_regular: need 1 <= d <= n (n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")");

  std::mt19937_64 rng(seed);
  std::vector<std::vector<char>> used(n, std::vector<char>(n, 0));
  std::vector<std::size_t> matching;
  std::size_t rejections = 0;
  for (std::size_t k = 0; k < d;) {
    if (!detail::random_perfect_matching(used, rng, matching)) {
      if (++rejections > kGeneratorRejectionBudget)
        throw BudgetExceeded("generate_regular: more than " + std::to_string(kGeneratorRejectionBudget) +
                             " rejected matchings (n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")");
      continue;
    }
    for (std::size_t x = 0; x < n; ++x) used[x][matching[x]] = 1;
    ++k;
  }

  std::vector<Edge> edges;
  edges.reserve(n * d);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (used[x][y]) edges.emplace_back(x, y);
  return BipartiteGraph(n, d, edges);
}

}  // namespace biscount
