#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "biscount/error.hpp"
#include "biscount/vertex_set.hpp"

namespace biscount {

using Edge = std::pair<std::size_t, std::size_t>;  // (x index, y index)

/// A d-regular bipartite graph on parts X and Y of n vertices each.
///
/// Immutable after construction. Besides the sorted adjacency lists it keeps
/// bitset neighbourhoods for both directions and the two-step neighbourhoods
/// N(N(x)) of every x, which the set combinatorics below are built on.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  /// Validates regularity, ranges and duplicates; throws InputError.
  BipartiteGraph(std::size_t n, std::size_t d, const std::vector<Edge>& edges) : n_(n), d_(d) {
    if (n == 0) throw InputError("graph must have at least one vertex per part");
    if (d < 1 || d > n)
      throw InputError("degree must satisfy 1 <= d <= n (n=" + std::to_string(n) +
                       ", d=" + std::to_string(d) + ")");
    if (edges.size() != n * d)
      throw InputError("expected n*d = " + std::to_string(n * d) + " edges, got " +
                       std::to_string(edges.size()));
    adj_x_.assign(n, {});
    adj_y_.assign(n, {});
    for (const auto& [u, v] : edges) {
      if (u >= n || v >= n)
        throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
      adj_x_[u].push_back(v);
      adj_y_[v].push_back(u);
    }
    for (std::size_t i = 0; i < n; ++i) {
      std::sort(adj_x_[i].begin(), adj_x_[i].end());
      std::sort(adj_y_[i].begin(), adj_y_[i].end());
      if (std::adjacent_find(adj_x_[i].begin(), adj_x_[i].end()) != adj_x_[i].end())
        throw InputError("duplicate edge at x" + std::to_string(i));
      if (adj_x_[i].size() != d)
        throw InputError("vertex x" + std::to_string(i) + " has degree " +
                         std::to_string(adj_x_[i].size()) + ", expected " + std::to_string(d));
      if (adj_y_[i].size() != d)
        throw InputError("vertex y" + std::to_string(i) + " has degree " +
                         std::to_string(adj_y_[i].size()) + ", expected " + std::to_string(d));
    }
    nbr_x_.reserve(n);
    nbr_y_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      VertexSet sx(Part::Y, n), sy(Part::X, n);
      for (std::size_t v : adj_x_[i]) sx.insert(v);
      for (std::size_t u : adj_y_[i]) sy.insert(u);
      nbr_x_.push_back(std::move(sx));
      nbr_y_.push_back(std::move(sy));
    }
    two_step_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      VertexSet s(Part::X, n);
      for (std::size_t v : adj_x_[i]) s |= nbr_y_[v];
      two_step_.push_back(std::move(s));
    }
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t d() const noexcept { return d_; }
  std::size_t edge_count() const noexcept { return n_ * d_; }

  /// Sorted neighbours in Y of x.
  const std::vector<std::size_t>& adj_x(std::size_t x) const { return adj_x_.at(x); }
  /// Sorted neighbours in X of y.
  const std::vector<std::size_t>& adj_y(std::size_t y) const { return adj_y_.at(y); }

  const VertexSet& nbr_of_x(std::size_t x) const { return nbr_x_[x]; }
  const VertexSet& nbr_of_y(std::size_t y) const { return nbr_y_[y]; }
  /// N(N(x)) as a subset of X (contains x).
  const VertexSet& two_step(std::size_t x) const { return two_step_[x]; }

  bool has_edge(std::size_t x, std::size_t y) const { return nbr_x_.at(x).contains(y); }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t y : adj_x_[x]) out.emplace_back(x, y);
    return out;
  }

  VertexSet empty_x() const { return VertexSet(Part::X, n_); }
  VertexSet empty_y() const { return VertexSet(Part::Y, n_); }
  VertexSet empty_v() const { return VertexSet(Part::V, 2 * n_); }
  VertexSet all_x() const { return VertexSet::full(Part::X, n_); }
  VertexSet all_y() const { return VertexSet::full(Part::Y, n_); }

  friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
    return a.n_ == b.n_ && a.d_ == b.d_ && a.adj_x_ == b.adj_x_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t d_ = 0;
  std::vector<std::vector<std::size_t>> adj_x_;
  std::vector<std::vector<std::size_t>> adj_y_;
  std::vector<VertexSet> nbr_x_;
  std::vector<VertexSet> nbr_y_;
  std::vector<VertexSet> two_step_;
};

/// d = floor(delta * n) for a rational delta = num/den in (0,1).
struct DeltaParam {
  std::uint64_t num = 1;
  std::uint64_t den = 2;

  bool matches(std::size_t n, std::size_t d) const { return (num * n) / den == d; }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  static DeltaParam of(const BipartiteGraph& g) { return {g.d(), g.n()}; }
};

namespace detail {

inline void require_part(const VertexSet& s, Part p, std::size_t universe, const char* what) {
  if (s.part() != p || s.universe() != universe)
    throw PartMismatch(std::string(what) + ": expected a " + part_name(p) + "-side set of universe " +
                       std::to_string(universe) + ", got " + part_name(s.part()) + "[" +
                       std::to_string(s.universe()) + "]");
}

}  // namespace detail

/// N(A) for A a subset of X.
inline VertexSet neighbors(const BipartiteGraph& g, const VertexSet& a) {
  detail::require_part(a, Part::X, g.n(), "neighbors");
  VertexSet out = g.empty_y();
  a.for_each([&](std::size_t x) { out |= g.nbr_of_x(x); });
  return out;
}

/// N(W) for W a subset of Y.
inline VertexSet neighbors_of_y(const BipartiteGraph& g, const VertexSet& w) {
  detail::require_part(w, Part::Y, g.n(), "neighbors_of_y");
  VertexSet out = g.empty_x();
  w.for_each([&](std::size_t y) { out |= g.nbr_of_y(y); });
  return out;
}

/// X_W = { x in X : N(x) subset of W }.
inline VertexSet inside_of(const BipartiteGraph& g, const VertexSet& w) {
  detail::require_part(w, Part::Y, g.n(), "inside_of");
  VertexSet out = g.empty_x();
  for (std::size_t x = 0; x < g.n(); ++x)
    if (g.nbr_of_x(x).is_subset_of(w)) out.insert(x);
  return out;
}

/// [A] = { x in X : N(x) subset of N(A) }.
inline VertexSet closure(const BipartiteGraph& g, const VertexSet& a) {
  return inside_of(g, neighbors(g, a));
}

inline bool is_closed(const BipartiteGraph& g, const VertexSet& a) { return closure(g, a) == a; }

/// |N(A)| < |[A]| + t
inline bool is_t_contracting(const BipartiteGraph& g, const VertexSet& a, std::size_t t) {
  const VertexSet w = neighbors(g, a);
  return w.size() < inside_of(g, w).size() + t;
}

/// Components of A in the square of G, ordered by smallest member.
inline std::vector<VertexSet> two_linked_components(const BipartiteGraph& g, const VertexSet& a) {
  detail::require_part(a, Part::X, g.n(), "two_linked_components");
  std::vector<VertexSet> comps;
  VertexSet rest = a;
  VertexSet frontier = g.empty_x();
  VertexSet next = g.empty_x();
  while (!rest.empty()) {
    VertexSet comp = g.empty_x();
    const std::size_t seed = rest.first();
    comp.insert(seed);
    rest.erase(seed);
    frontier.clear();
    frontier.insert(seed);
    while (!frontier.empty()) {
      next.clear();
      frontier.for_each([&](std::size_t x) { next |= g.two_step(x); });
      next &= rest;
      rest -= next;
      comp |= next;
      std::swap(frontier, next);
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

/// True when A is nonempty and connected in the square of G.
inline bool is_two_linked(const BipartiteGraph& g, const VertexSet& a) {
  detail::require_part(a, Part::X, g.n(), "is_two_linked");
  if (a.empty()) return false;
  VertexSet reached = g.empty_x();
  VertexSet frontier = g.empty_x();
  VertexSet next = g.empty_x();
  const std::size_t seed = a.first();
  reached.insert(seed);
  frontier.insert(seed);
  while (!frontier.empty()) {
    next.clear();
    frontier.for_each([&](std::size_t x) { next |= g.two_step(x); });
    next &= a;
    next -= reached;
    reached |= next;
    std::swap(frontier, next);
  }
  return reached == a;
}

/// Number of edges with exactly one endpoint in C (a subset of V).
inline std::size_t cut_value(const BipartiteGraph& g, const VertexSet& c) {
  detail::require_part(c, Part::V, 2 * g.n(), "cut_value");
  const std::size_t n = g.n();
  std::size_t cut = 0;
  for (std::size_t x = 0; x < n; ++x) {
    const bool in_x = c.contains(x);
    for (std::size_t y : g.adj_x(x))
      if (in_x != c.contains(n + y)) ++cut;
  }
  return cut;
}

/// C ∩ X as an X-side set.
inline VertexSet x_part(const VertexSet& c) {
  if (c.part() != Part::V || c.universe() % 2) throw PartMismatch("x_part: expected a V-side set");
  const std::size_t n = c.universe() / 2;
  VertexSet out(Part::X, n);
  c.for_each([&](std::size_t i) {
    if (i < n) out.insert(i);
  });
  return out;
}

/// C ∩ Y as a Y-side set.
inline VertexSet y_part(const VertexSet& c) {
  if (c.part() != Part::V || c.universe() % 2) throw PartMismatch("y_part: expected a V-side set");
  const std::size_t n = c.universe() / 2;
  VertexSet out(Part::Y, n);
  c.for_each([&](std::size_t i) {
    if (i >= n) out.insert(i - n);
  });
  return out;
}

/// A ∪ W viewed as a subset of V.
inline VertexSet join(const VertexSet& a, const VertexSet& w) {
  if (a.part() != Part::X || w.part() != Part::Y || a.universe() != w.universe())
    throw PartMismatch("join: expected an X-side and a Y-side set of equal universe");
  const std::size_t n = a.universe();
  VertexSet out(Part::V, 2 * n);
  a.for_each([&](std::size_t i) { out.insert(i); });
  w.for_each([&](std::size_t i) { out.insert(n + i); });
  return out;
}

/// Disjoint union; vertices of `b` are shifted by a.n() on both sides.
inline BipartiteGraph disjoint_union(const BipartiteGraph& a, const BipartiteGraph& b) {
  if (a.d() != b.d()) throw InputError("disjoint_union: degrees differ");
  std::vector<Edge> edges = a.edges();
  for (auto [x, y] : b.edges()) edges.emplace_back(x + a.n(), y + a.n());
  return BipartiteGraph(a.n() + b.n(), a.d(), edges);
}

inline BipartiteGraph complete_bipartite(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) edges.emplace_back(x, y);
  return BipartiteGraph(n, n, edges);
}

/// The 2m-cycle as a bipartite graph: x_i ~ y_i and x_i ~ y_{i+1 mod m}.
inline BipartiteGraph even_cycle(std::size_t m) {
  if (m < 2) throw InputError("even_cycle: need m >= 2");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i) {
    edges.emplace_back(i, i);
    edges.emplace_back(i, (i + 1) % m);
  }
  return BipartiteGraph(m, 2, edges);
}

}  // namespace biscount
