#include <gtest/gtest.h>

#include <random>

#include "test_graphs.hpp"

using namespace biscount;
using namespace biscount::testing;

namespace {

// A ⊆ X closed, t-contracting and within ct of the cut on both sides.
std::vector<VertexSet> near_cut_by_scan(const BipartiteGraph& g, const VertexSet& cut, std::size_t t, std::size_t c) {
  std::vector<VertexSet> out;
  for (const auto& a : all_x_subsets(g)) {
    const auto hood = neighbors(g, a);
    if (closure(g, a) != a || hood.size() >= a.size() + t) continue;
    if (symmetric_difference_size(a, x_part(cut)) > c * t) continue;
    if (symmetric_difference_size(hood, y_part(cut)) > c * t) continue;
    out.push_back(a);
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

}  // namespace

TEST(EnumerateNearCut, Examples) {
  const auto g = k22();
  const auto full = enumerate_near_cut(g, VertexSet::full(Part::V, 4), 1);
  EXPECT_NE(std::find(full.begin(), full.end(), xs(g, {0, 1})), full.end());
  const auto empty = enumerate_near_cut(g, VertexSet(Part::V, 4), 1);
  EXPECT_NE(std::find(empty.begin(), empty.end(), g.empty_x()), empty.end());
}

TEST(EnumerateNearCut, MatchesScanOnTinyGraphs) {
  for (const auto& g : all_tiny())
    for (std::size_t t : {1, 2})
      for (const auto& cut : all_v_subsets(g))
        ASSERT_EQ(enumerate_near_cut(g, cut, t), near_cut_by_scan(g, cut, t, 32)) << cut.to_string();
}

TEST(EnumerateNearCut, SoundWithSmallC) {
  // c = 1 leaves the desk-scale saturation, so only soundness is claimed.
  std::mt19937_64 rng(2);
  for (int i = 0; i < 20; ++i) {
    const auto g = generate_regular(8, 4, i);
    NearCutConfig cfg;
    cfg.c = 1;
    for (int j = 0; j < 20; ++j) {
      const auto cut = random_subset(Part::V, 2 * g.n(), rng);
      for (const auto& a : enumerate_near_cut(g, cut, 2, cfg)) ASSERT_TRUE(near_cut_accepts(g, a, cut, 2, 1));
    }
  }
}

TEST(EnumerateNearCut, SubsetCapIsEnforced) {
  const auto g = generate_regular(30, 5, 1);
  NearCutConfig cfg;
  cfg.subset_cap = 10;
  EXPECT_THROW(enumerate_near_cut(g, VertexSet(Part::V, 60), 1, cfg), BudgetExceeded);
  EXPECT_THROW(enumerate_near_cut(g, VertexSet(Part::V, 60), 0), InputError);
}

TEST(NearCutWitness, SizeBoundInLargeDegreeRegime) {
  // With t <= d/(8c) and a cut taken from a closed contracting set, the pools stay below 2t.
  const std::size_t n = 260, d = 256;
  const auto g = generate_regular(n, d, 3);
  const auto a = g.all_x();
  const auto cut = join(a, neighbors(g, a));
  const auto w = near_cut_witness(g, cut, 1, 32);
  EXPECT_LE(w.s_x.size() + w.s_y.size(), 2u);
  EXPECT_TRUE(w.s_a.empty());
}

TEST(MaxComponents, Examples) {
  EXPECT_EQ(max_components(generate_regular(10, 5, 0), 1), 2u);
  EXPECT_EQ(max_components(k22(), 1), 2u);
  EXPECT_EQ(max_components(generate_regular(100, 50, 0), 10), 2u);
  EXPECT_THROW(max_components(k22(), 2), InputError);
}

TEST(BuildFamily, Examples) {
  auto g = k22();
  EXPECT_EQ(family_sets(family_of(g, 1)), (std::vector<VertexSet>{g.empty_x(), xs(g, {0, 1})}));
  g = k11();
  EXPECT_EQ(family_sets(family_of(g, 1)), (std::vector<VertexSet>{g.empty_x(), xs(g, {0})}));
  g = c6();
  EXPECT_EQ(family_sets(family_of(g, 1)), (std::vector<VertexSet>{g.empty_x(), g.all_x()}));
}

TEST(BuildFamily, MultiComponentMembers) {
  const auto g = two_k22();
  const auto fam = family_of(g, 1);
  EXPECT_EQ(family_sets(fam),
            (std::vector<VertexSet>{g.empty_x(), xs(g, {0, 1}), xs(g, {0, 1, 2, 3}), xs(g, {2, 3})}));
  for (const auto& a : fam.sets)
    if (a.set.size() == 4) {
      EXPECT_EQ(a.components.size(), 2u);
    }
}

TEST(BuildFamily, BudgetIsEnforced) {
  const auto g = disjoint_union(two_k22(), two_k22());
  FamilyConfig cfg;
  cfg.family_budget = 5;
  EXPECT_THROW(build_family(g, build_cut_family(g, decompose(g)), 1, cfg), BudgetExceeded);
}

TEST(ContractingProperties, FamilyMatchesOracleOnTinyGraphs) {
  for (const auto& g : all_tiny())
    for (std::size_t t0 : {1, 2, 3}) ASSERT_EQ(family_sets(family_of(g, t0)), oracle::exact_family(g, t0));
}

TEST(ContractingProperties, FamilyMatchesOracleOnSampledGraphs) {
  for (int i = 0; i < 30; ++i) {
    const std::size_t n = 5 + i % 4, d = (n + 1) / 2 + i % 2;
    const auto g = generate_regular(n, d, 100 + i);
    for (std::size_t t0 : {1, 2}) ASSERT_EQ(family_sets(family_of(g, t0)), oracle::exact_family(g, t0));
  }
}

TEST(ContractingProperties, MembersAreWellFormed) {
  for (int i = 0; i < 20; ++i) {
    const auto g = generate_regular(6 + i % 3, 3 + i % 3, i);
    const std::size_t t0 = 1 + i % 2;
    for (const auto& a : family_of(g, t0).sets) {
      VertexSet u = g.empty_x();
      for (std::size_t j = 0; j < a.components.size(); ++j) {
        const auto& c = a.components[j];
        ASSERT_TRUE(is_closed(g, c));
        ASSERT_TRUE(is_t_contracting(g, c, t0));
        ASSERT_FALSE(u.intersects(c));
        for (std::size_t k = 0; k < j; ++k)
          ASSERT_FALSE(neighbors(g, c).intersects(neighbors(g, a.components[k])));
        u |= c;
      }
      ASSERT_EQ(u, a.set);
      ASSERT_EQ(a.weight_exponent, g.n() - neighbors(g, a.set).size());
    }
  }
}

TEST(ContractingProperties, PiecesHaveSmallCutValue) {
  // A 2-linked closed t0-contracting piece has cut_value(A ∪ N(A)) = d(|N(A)| - |A|) <= t0 d.
  for (int i = 0; i < 20; ++i) {
    const auto g = generate_regular(7, 4, i);
    for (std::size_t t0 : {1, 2}) {
      const auto fam = family_of(g, t0);
      for (const auto& p : fam.pieces) {
        const auto hood = neighbors(g, p);
        ASSERT_EQ(cut_value(g, join(p, hood)), g.d() * (hood.size() - p.size()));
        ASSERT_LE(cut_value(g, join(p, hood)), t0 * g.d());
      }
    }
  }
}

TEST(ContractingProperties, FamilySizeWithinCombinationBound) {
  for (int i = 0; i < 10; ++i) {
    const auto g = generate_regular(8, 4 + i % 3, i);
    const auto cuts = build_cut_family(g, decompose(g));
    for (std::size_t t0 : {1, 2}) {
      const auto fam = build_family(g, cuts, t0);
      const double pieces_bound = static_cast<double>(cuts.size()) * std::pow(4.0, static_cast<double>(t0 * fam.max_components));
      double combos = 0, term = 1;
      for (std::size_t l = 0; l <= fam.max_components; ++l) {
        combos += term;
        term *= pieces_bound;
      }
      EXPECT_LE(static_cast<double>(fam.size()), combos);
    }
  }
}
