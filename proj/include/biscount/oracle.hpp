#pragma once

// Brute-force reference computations on uint64 masks built straight from
// the adjacency lists, independent of the set routines in bigraph.hpp.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "biscount/bigraph.hpp"
#include "biscount/engine.hpp"
#include "biscount/error.hpp"
#include "biscount/rational.hpp"
#include "biscount/vertex_set.hpp"

namespace biscount::oracle {

inline constexpr std::size_t kDaLimit = 20;
inline constexpr std::size_t kFamilyLimit = 8;
inline constexpr std::size_t kXiLimit = 16;

/// i(G) via the subset-sum identity over X.
inline BigInt exact_count(const BipartiteGraph& g, std::size_t limit = kDefaultExactLimit) {
  return brute_force_count(g, limit);
}

namespace detail {

using Mask = std::uint64_t;

struct Masks {
  std::size_t n = 0;
  std::vector<Mask> hood;      // x -> N(x) in Y
  std::vector<Mask> two_step;  // x -> N(N(x)) in X

  explicit Masks(const BipartiteGraph& g) : n(g.n()), hood(g.n(), 0), two_step(g.n(), 0) {
    if (n > 64) throw BudgetExceeded("oracle: n = " + std::to_string(n) + " exceeds 64");
    std::vector<Mask> back(n, 0);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y : g.adj_x(x)) {
        hood[x] |= Mask{1} << y;
        back[y] |= Mask{1} << x;
      }
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y : g.adj_x(x)) two_step[x] |= back[y];
  }

  Mask nbrs(Mask a) const {
    Mask w = 0;
    for (; a; a &= a - 1) w |= hood[static_cast<std::size_t>(std::countr_zero(a))];
    return w;
  }
  Mask closure(Mask a) const {
    const Mask w = nbrs(a);
    Mask c = 0;
    for (std::size_t x = 0; x < n; ++x)
      if ((hood[x] & ~w) == 0) c |= Mask{1} << x;
    return c;
  }
  Mask component_of(Mask a, std::size_t seed) const {
    Mask reached = Mask{1} << seed, frontier = reached;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= two_step[static_cast<std::size_t>(std::countr_zero(f))];
      next &= a & ~reached;
      reached |= next;
      frontier = next;
    }
    return reached;
  }
  bool two_linked(Mask a) const {
    return a != 0 && component_of(a, static_cast<std::size_t>(std::countr_zero(a))) == a;
  }
  std::vector<Mask> components(Mask a) const {
    std::vector<Mask> out;
    while (a) {
      const Mask c = component_of(a, static_cast<std::size_t>(std::countr_zero(a)));
      out.push_back(c);
      a &= ~c;
    }
    return out;
  }
  bool contracting(Mask a, std::size_t t) const {
    return static_cast<std::size_t>(std::popcount(nbrs(a))) < static_cast<std::size_t>(std::popcount(closure(a))) + t;
  }
};

inline Mask to_mask(const VertexSet& s) {
  if (s.part() != Part::X) throw PartMismatch("oracle: expected an X-side set");
  return s.words().empty() ? 0 : s.words()[0];
}

inline VertexSet to_set(Mask m, std::size_t n) {
  VertexSet s(Part::X, n);
  for (; m; m &= m - 1) s.insert(static_cast<std::size_t>(std::countr_zero(m)));
  return s;
}

// #{B ⊆ comp : B 2-linked, N(B) = N(comp)}
inline std::uint64_t cover_count(const Masks& mk, Mask comp) {
  std::vector<std::size_t> members;
  for (Mask m = comp; m; m &= m - 1) members.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  const Mask target = mk.nbrs(comp);
  std::uint64_t count = 0;
  const std::uint64_t total = std::uint64_t{1} << members.size();
  for (std::uint64_t pick = 1; pick < total; ++pick) {
    Mask b = 0;
    for (std::uint64_t p = pick; p; p &= p - 1) b |= Mask{1} << members[static_cast<std::size_t>(std::countr_zero(p))];
    if (mk.nbrs(b) == target && mk.two_linked(b)) ++count;
  }
  return count;
}

}  // namespace detail

/// Independent-set count by branching on the lowest free vertex of V: either
/// leave it out, or take it and drop its neighbours.
inline BigInt count_independent_sets(const BipartiteGraph& g) {
  const std::size_t n = g.n();
  if (2 * n > 64) throw BudgetExceeded("count_independent_sets: 2n exceeds 64");
  std::vector<std::uint64_t> blocked(2 * n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y : g.adj_x(x)) {
      blocked[x] |= std::uint64_t{1} << (n + y);
      blocked[n + y] |= std::uint64_t{1} << x;
    }
  auto count = [&](auto&& self, std::uint64_t free) -> std::uint64_t {
    if (!free) return 1;
    const auto v = static_cast<std::size_t>(std::countr_zero(free));
    const std::uint64_t rest = free & (free - 1);
    return self(self, rest) + self(self, rest & ~blocked[v]);
  };
  const std::uint64_t all = 2 * n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << (2 * n)) - 1;
  return BigInt(count(count, all));
}

/// D_A: product over the 2-linked components A' of A of the number of
/// 2-linked B ⊆ A' with N(B) = N(A'). Empty A gives 1.
inline BigInt exact_DA(const BipartiteGraph& g, const VertexSet& a, std::size_t limit = kDaLimit) {
  if (a.size() > limit)
    throw BudgetExceeded("exact_DA: |A| = " + std::to_string(a.size()) + " exceeds limit " + std::to_string(limit));
  const detail::Masks mk(g);
  BigInt product = 1;
  for (detail::Mask comp : mk.components(detail::to_mask(a))) product *= detail::cover_count(mk, comp);
  return product;
}

/// All A ⊆ X whose 2-linked components are each closed and t0-contracting,
/// in canonical order (∅ included).
inline std::vector<VertexSet> exact_family(const BipartiteGraph& g, std::size_t t0, std::size_t limit = kFamilyLimit) {
  if (g.n() > limit)
    throw BudgetExceeded("exact_family: n = " + std::to_string(g.n()) + " exceeds limit " + std::to_string(limit));
  const detail::Masks mk(g);
  std::vector<VertexSet> out;
  const detail::Mask total = detail::Mask{1} << g.n();
  for (detail::Mask a = 0; a < total; ++a) {
    bool ok = true;
    for (detail::Mask comp : mk.components(a)) {
      if (mk.closure(comp) != comp || !mk.contracting(comp, t0)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(detail::to_set(a, g.n()));
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

/// The polymer model left over once A is fixed.
struct PolymerModelSnapshot {
  VertexSet anchor;
  VertexSet region_x;  // X \ N(N(A))
  VertexSet region_y;  // Y \ N(A)
  std::vector<VertexSet> polymers;  // 2-linked, not t0-contracting, inside region_x
  Rational xi;
};

/// Xi_A: sum over sets of pairwise compatible (neighbourhood-disjoint)
/// polymers in X \ N(N(A)) that are not t0-contracting, each weighted
/// 2^{-|N(B)|}; the empty set contributes 1.
inline PolymerModelSnapshot polymer_model(const BipartiteGraph& g, const VertexSet& a, std::size_t t0,
                                          std::size_t limit = kXiLimit) {
  const detail::Masks mk(g);
  const detail::Mask am = detail::to_mask(a);
  const detail::Mask hood_a = mk.nbrs(am);
  detail::Mask two_hop = 0;
  for (std::size_t x = 0; x < g.n(); ++x)
    if (mk.hood[x] & hood_a) two_hop |= detail::Mask{1} << x;
  const detail::Mask full = g.n() == 64 ? ~detail::Mask{0} : (detail::Mask{1} << g.n()) - 1;
  const detail::Mask region = full & ~two_hop;

  PolymerModelSnapshot snap;
  snap.anchor = a;
  snap.region_x = detail::to_set(region, g.n());
  snap.region_y = g.all_y() - neighbors(g, a);
  if (static_cast<std::size_t>(std::popcount(region)) > limit)
    throw BudgetExceeded("exact_xi: |X_A| exceeds limit " + std::to_string(limit));

  std::vector<std::size_t> members;
  for (detail::Mask m = region; m; m &= m - 1) members.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  std::vector<detail::Mask> polymers, hoods;
  const std::uint64_t total = std::uint64_t{1} << members.size();
  for (std::uint64_t pick = 1; pick < total; ++pick) {
    detail::Mask b = 0;
    for (std::uint64_t p = pick; p; p &= p - 1)
      b |= detail::Mask{1} << members[static_cast<std::size_t>(std::countr_zero(p))];
    if (!mk.two_linked(b) || mk.contracting(b, t0)) continue;
    polymers.push_back(b);
    hoods.push_back(mk.nbrs(b));
  }
  for (detail::Mask b : polymers) snap.polymers.push_back(detail::to_set(b, g.n()));
  std::sort(snap.polymers.begin(), snap.polymers.end(), CanonicalLess{});

  // by_weight[w] = number of compatible polymer sets with total neighbourhood size w
  std::vector<BigInt> by_weight(g.n() + 1, 0);
  auto recurse = [&](auto&& self, std::size_t from, detail::Mask used) -> void {
    ++by_weight[static_cast<std::size_t>(std::popcount(used))];
    for (std::size_t i = from; i < polymers.size(); ++i)
      if (!(hoods[i] & used)) self(self, i + 1, used | hoods[i]);
  };
  recurse(recurse, 0, 0);

  Rational xi = 0;
  for (std::size_t w = 0; w <= g.n(); ++w) xi += Rational(by_weight[w], pow2(w));
  snap.xi = xi;
  return snap;
}

inline Rational exact_xi(const BipartiteGraph& g, const VertexSet& a, std::size_t t0, std::size_t limit = kXiLimit) {
  return polymer_model(g, a, t0, limit).xi;
}

/// Sum over the exact family of D_A * 2^{|Y \ N(A)|} * Xi_A; equals i(G).
inline Rational identity_sum(const BipartiteGraph& g, std::size_t t0) {
  const detail::Masks mk(g);
  Rational total = 0;
  for (const VertexSet& a : exact_family(g, t0)) {
    const std::size_t free = g.n() - static_cast<std::size_t>(std::popcount(mk.nbrs(detail::to_mask(a))));
    total += Rational(exact_DA(g, a) * pow2(free)) * exact_xi(g, a, t0);
  }
  return total;
}

/// Sum over `family` of D_A * 2^{|Y \ N(A)|}, i.e. the identity with Xi_A
/// replaced by its lower bound 1.
inline BigInt truncated_sum(const BipartiteGraph& g, const std::vector<VertexSet>& family) {
  const detail::Masks mk(g);
  BigInt total = 0;
  for (const VertexSet& a : family)
    total += exact_DA(g, a) * pow2(g.n() - static_cast<std::size_t>(std::popcount(mk.nbrs(detail::to_mask(a)))));
  return total;
}

}  // namespace biscount::oracle
