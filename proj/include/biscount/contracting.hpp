#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "biscount/bigraph.hpp"
#include "biscount/error.hpp"
#include "biscount/spectral.hpp"
#include "biscount/vertex_set.hpp"

namespace biscount {

/// An element A of the contracting family together with its cached
/// neighbourhood, closure and 2-linked components.
struct ContractingSet {
  VertexSet set;
  VertexSet neighborhood;
  VertexSet closure;
  std::vector<VertexSet> components;
  std::size_t weight_exponent = 0;  // |Y \ N(A)|

  static ContractingSet from(const BipartiteGraph& g, VertexSet a) {
    ContractingSet s;
    s.neighborhood = neighbors(g, a);
    s.closure = inside_of(g, s.neighborhood);
    s.components = two_linked_components(g, a);
    s.weight_exponent = g.n() - s.neighborhood.size();
    s.set = std::move(a);
    return s;
  }
};

/// The vertex pools a near-cut enumeration branches over, and the cut they came from.
struct NearCutWitness {
  VertexSet anchor;  // the cut C
  VertexSet s_x;     // {v in X \ A' : |N(v) \ W'| <= 3ct}
  VertexSet s_y;     // {v in W' : |N(v) ∩ A'| <= ct}
  VertexSet s_a;     // {v in A' : |N(v) ∩ W'| <= ct}, members of A' that may be dropped outright
  std::size_t t = 0;
  std::size_t c = 0;

  std::size_t branching() const { return s_x.size() + s_y.size() + s_a.size(); }
};

struct NearCutConfig {
  std::size_t c = 32;
  std::size_t subset_cap = 40;
};

inline NearCutWitness near_cut_witness(const BipartiteGraph& g, const VertexSet& cut, std::size_t t, std::size_t c) {
  detail::require_part(cut, Part::V, 2 * g.n(), "near_cut_witness");
  const VertexSet a_prime = x_part(cut);
  const VertexSet w_prime = y_part(cut);
  NearCutWitness w{cut, g.empty_x(), g.empty_y(), g.empty_x(), t, c};
  for (std::size_t x = 0; x < g.n(); ++x) {
    if (!a_prime.contains(x) && g.nbr_of_x(x).difference_size(w_prime) <= 3 * c * t) w.s_x.insert(x);
    if (a_prime.contains(x) && g.nbr_of_x(x).intersection_size(w_prime) <= c * t) w.s_a.insert(x);
  }
  w_prime.for_each([&](std::size_t y) {
    if (g.nbr_of_y(y).intersection_size(a_prime) <= c * t) w.s_y.insert(y);
  });
  return w;
}

namespace detail {

// Deduplicating store of equal-width bitsets kept in one flat buffer.
class FlatSetStore {
 public:
  explicit FlatSetStore(std::size_t words) : words_(words), index_(64, Hash{&data_, words}, Eq{&data_, words}) {}
  FlatSetStore(const FlatSetStore&) = delete;
  FlatSetStore& operator=(const FlatSetStore&) = delete;

  bool insert(std::span<const std::uint64_t> bits) {
    const std::size_t id = size();
    data_.insert(data_.end(), bits.begin(), bits.end());
    if (index_.insert(id).second) return true;
    data_.resize(data_.size() - words_);
    return false;
  }
  std::size_t size() const noexcept { return words_ ? data_.size() / words_ : index_.size(); }
  std::span<const std::uint64_t> operator[](std::size_t i) const { return {data_.data() + i * words_, words_}; }

 private:
  struct Hash {
    const std::vector<std::uint64_t>* data;
    std::size_t words;
    std::size_t operator()(std::size_t id) const noexcept {
      std::uint64_t h = 0x84222325cbf29ce4ull;
      for (std::size_t k = 0; k < words; ++k) h = VertexSet::mix(h ^ (*data)[id * words + k]);
      return static_cast<std::size_t>(h);
    }
  };
  struct Eq {
    const std::vector<std::uint64_t>* data;
    std::size_t words;
    bool operator()(std::size_t a, std::size_t b) const noexcept {
      return std::equal(data->begin() + static_cast<std::ptrdiff_t>(a * words),
                        data->begin() + static_cast<std::ptrdiff_t>((a + 1) * words),
                        data->begin() + static_cast<std::ptrdiff_t>(b * words));
    }
  };

  std::size_t words_;
  std::vector<std::uint64_t> data_;
  std::unordered_set<std::size_t, Hash, Eq> index_;
};

// Closes `store` under OR with each mask in turn: afterwards it holds
// base | (union of any subfamily of masks) for every base it started with.
inline void close_under_unions(FlatSetStore& store, const std::vector<VertexSet>& masks, std::size_t words) {
  std::vector<std::uint64_t> scratch(words);
  for (const VertexSet& m : masks) {
    const auto mw = m.words();
    const std::size_t count = store.size();
    for (std::size_t i = 0; i < count; ++i) {
      const auto s = store[i];
      bool grows = false;
      for (std::size_t k = 0; k < words; ++k) {
        scratch[k] = s[k] | mw[k];
        grows |= scratch[k] != s[k];
      }
      if (grows) store.insert(scratch);
    }
  }
}

}  // namespace detail

/// Every distinct closed set [(A' \ N(S'_Y) \ S'_A) ∪ S'_X] for S'_X ⊆ S_X,
/// S'_Y ⊆ S_Y and S'_A ⊆ S_A, where A' = C ∩ X. S_A holds the members of A'
/// with at most ct neighbours in W'; they can leave A' directly.
///
/// A closed set is fixed by its neighbourhood, so the subset product is
/// walked as union closures over neighbourhood bitsets: the forced core
/// A' \ S_A \ N(S'_Y) contributes one neighbourhood per distinct removal,
/// then any union of N(v) for v in S_A ∪ S_X is added. That yields a
/// superset of the formula's candidates, which the filters then trim.
inline std::vector<VertexSet> near_cut_candidates(const BipartiteGraph& g, const NearCutWitness& w) {
  const VertexSet a_prime = x_part(w.anchor);
  const std::size_t words = a_prime.words().size();

  // Distinct N(S'_Y) ∩ A'.
  detail::FlatSetStore removed(words);
  removed.insert(g.empty_x().words());
  std::vector<VertexSet> y_masks;
  w.s_y.for_each([&](std::size_t y) { y_masks.push_back(g.nbr_of_y(y) & a_prime); });
  detail::close_under_unions(removed, y_masks, words);

  // Distinct N(core) ∪ N(S'_X).
  detail::FlatSetStore hoods(words);
  VertexSet core = g.empty_x();
  for (std::size_t i = 0; i < removed.size(); ++i) {
    const auto r = removed[i];
    auto cw = core.words();
    const auto aw = a_prime.words();
    const auto sa = w.s_a.words();
    for (std::size_t k = 0; k < words; ++k) cw[k] = aw[k] & ~r[k] & ~sa[k];
    hoods.insert(neighbors(g, core).words());
  }
  std::vector<VertexSet> x_masks;
  (w.s_x | w.s_a).for_each([&](std::size_t x) { x_masks.push_back(g.nbr_of_x(x)); });
  detail::close_under_unions(hoods, x_masks, words);

  std::vector<VertexSet> out;
  out.reserve(hoods.size());
  VertexSet hood = g.empty_y();
  for (std::size_t i = 0; i < hoods.size(); ++i) {
    std::copy(hoods[i].begin(), hoods[i].end(), hood.words().begin());
    out.push_back(inside_of(g, hood));
  }
  return out;
}

/// A closed, t-contracting, |A △ (C∩X)| <= ct and |N(A) △ (C∩Y)| <= ct.
inline bool near_cut_accepts(const BipartiteGraph& g, const VertexSet& a, const VertexSet& cut, std::size_t t,
                             std::size_t c) {
  const VertexSet hood = neighbors(g, a);
  if (inside_of(g, hood) != a) return false;
  if (!(hood.size() < a.size() + t)) return false;
  return symmetric_difference_size(a, x_part(cut)) <= c * t && symmetric_difference_size(hood, y_part(cut)) <= c * t;
}

/// Closed t-contracting sets near the cut C. Every returned set is checked
/// against near_cut_accepts; the output is canonically ordered.
inline std::vector<VertexSet> enumerate_near_cut(const BipartiteGraph& g, const VertexSet& cut, std::size_t t,
                                                 const NearCutConfig& cfg = {}) {
  if (t < 1) throw InputError("enumerate_near_cut: t must be at least 1");
  const NearCutWitness w = near_cut_witness(g, cut, t, cfg.c);
  if (w.branching() > cfg.subset_cap)
    throw BudgetExceeded("enumerate_near_cut: |S_X|+|S_Y|+|S_A| = " + std::to_string(w.branching()) + " exceeds cap " +
                         std::to_string(cfg.subset_cap) + " (t > d/(8c) for this instance?)");
  std::vector<VertexSet> out;
  for (VertexSet& a : near_cut_candidates(g, w))
    if (near_cut_accepts(g, a, cut, t, cfg.c)) out.push_back(std::move(a));
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

/// floor(n / (d - t0)): nonempty t0-contracting sets have at least d - t0 vertices.
inline std::size_t max_components(const BipartiteGraph& g, std::size_t t0) {
  if (t0 >= g.d())
    throw InputError("max_components: t0 = " + std::to_string(t0) + " >= d = " + std::to_string(g.d()) +
                     " leaves the component bound vacuous");
  return g.n() / (g.d() - t0);
}

struct FamilyConfig {
  NearCutConfig near;
  std::size_t family_budget = 1'000'000;
};

struct ContractingFamily {
  std::vector<ContractingSet> sets;  // canonically ordered by set
  std::vector<VertexSet> pieces;     // 2-linked closed t0-contracting, canonical order
  std::size_t t0 = 0;
  std::size_t max_components = 0;
  std::size_t near_cut_calls = 0;
  std::size_t candidates_examined = 0;

  std::size_t size() const noexcept { return sets.size(); }
};

/// Component bound used when combining pieces. Falls back to n (pieces are
/// nonempty and disjoint) when t0 >= d.
inline std::size_t component_bound(const BipartiteGraph& g, std::size_t t0) {
  return t0 < g.d() ? max_components(g, t0) : g.n();
}

/// Stage one: every 2-linked closed t0-contracting piece reachable from the
/// cut family, running the near-cut enumeration at t = l*t0 for l = 1..L.
inline std::vector<VertexSet> collect_pieces(const BipartiteGraph& g, const CutFamily& cuts, std::size_t t0,
                                             const FamilyConfig& cfg, ContractingFamily* stats = nullptr) {
  if (t0 < 1) throw InputError("build_family: t0 must be at least 1");
  const std::size_t bound = component_bound(g, t0);
  std::unordered_set<VertexSet, VertexSetHash> seen;
  std::vector<VertexSet> pieces;
  std::size_t calls = 0, examined = 0;

  for (const VertexSet& cut : cuts.cuts) {
    std::vector<VertexSet> candidates;
    NearCutWitness prev;
    for (std::size_t level = 1; level <= std::max<std::size_t>(bound, 1); ++level) {
      const std::size_t t = level * t0;
      NearCutWitness w = near_cut_witness(g, cut, t, cfg.near.c);
      if (w.branching() > cfg.near.subset_cap)
        throw BudgetExceeded("build_family: |S_X|+|S_Y|+|S_A| = " + std::to_string(w.branching()) + " exceeds cap " +
                             std::to_string(cfg.near.subset_cap) + " at t = " + std::to_string(t));
      // The candidate pool depends only on the witness pools; reuse it across levels.
      if (level == 1 || !(w.s_x == prev.s_x && w.s_y == prev.s_y && w.s_a == prev.s_a)) candidates = near_cut_candidates(g, w);
      prev = std::move(w);
      ++calls;
      examined += candidates.size();
      for (const VertexSet& a : candidates) {
        if (a.empty() || !near_cut_accepts(g, a, cut, t, cfg.near.c)) continue;
        for (VertexSet& comp : two_linked_components(g, a)) {
          if (seen.contains(comp)) continue;
          if (!is_closed(g, comp) || !is_t_contracting(g, comp, t0)) continue;
          seen.insert(comp);
          pieces.push_back(std::move(comp));
        }
      }
    }
  }
  std::sort(pieces.begin(), pieces.end(), CanonicalLess{});
  if (stats) {
    stats->near_cut_calls += calls;
    stats->candidates_examined += examined;
  }
  return pieces;
}

/// Stage two: all unions of at most L pieces with pairwise disjoint
/// neighbourhoods, including the empty union.
inline std::vector<ContractingSet> combine_pieces(const BipartiteGraph& g, const std::vector<VertexSet>& pieces,
                                                  std::size_t bound, std::size_t budget) {
  std::vector<VertexSet> hoods;
  hoods.reserve(pieces.size());
  for (const VertexSet& p : pieces) hoods.push_back(neighbors(g, p));

  std::vector<VertexSet> unions;
  VertexSet acc = g.empty_x();
  VertexSet acc_hood = g.empty_y();
  auto recurse = [&](auto&& self, std::size_t from, std::size_t depth) -> void {
    if (unions.size() >= budget)
      throw BudgetExceeded("build_family: family exceeds budget of " + std::to_string(budget) + " sets");
    unions.push_back(acc);
    if (depth == bound) return;
    for (std::size_t i = from; i < pieces.size(); ++i) {
      if (hoods[i].intersects(acc_hood)) continue;
      const VertexSet saved = acc, saved_hood = acc_hood;
      acc |= pieces[i];
      acc_hood |= hoods[i];
      self(self, i + 1, depth + 1);
      acc = saved;
      acc_hood = saved_hood;
    }
  };
  recurse(recurse, 0, 0);

  std::sort(unions.begin(), unions.end(), CanonicalLess{});
  std::vector<ContractingSet> out;
  out.reserve(unions.size());
  for (VertexSet& u : unions) out.push_back(ContractingSet::from(g, std::move(u)));
  return out;
}

/// The family of all A ⊆ X whose 2-linked components are each closed and
/// t0-contracting, found through the cut family.
inline ContractingFamily build_family(const BipartiteGraph& g, const CutFamily& cuts, std::size_t t0,
                                      const FamilyConfig& cfg = {}) {
  ContractingFamily fam;
  fam.t0 = t0;
  fam.max_components = component_bound(g, t0);
  fam.pieces = collect_pieces(g, cuts, t0, cfg, &fam);
  fam.sets = combine_pieces(g, fam.pieces, fam.max_components, cfg.family_budget);
  return fam;
}

/// One line per set: members, components, |N(A)| and contraction slack |[A]| + t0 - |N(A)|.
inline void write_family(const ContractingFamily& fam, std::ostream& out) {
  for (const ContractingSet& s : fam.sets) {
    out << s.set.to_string() << " components=[";
    for (std::size_t i = 0; i < s.components.size(); ++i) out << (i ? "," : "") << s.components[i].to_string();
    out << "] |N|=" << s.neighborhood.size()
        << " slack=" << static_cast<long long>(s.closure.size() + fam.t0) - static_cast<long long>(s.neighborhood.size())
        << '\n';
  }
}

}  // namespace biscount
