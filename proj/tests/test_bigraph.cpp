#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "test_graphs.hpp"

using namespace biscount;
using namespace biscount::testing;

TEST(VertexSet, SetAlgebra) {
  auto a = VertexSet::of(Part::X, 70, {0, 3, 64, 69});
  auto b = VertexSet::of(Part::X, 70, {3, 5, 69});
  EXPECT_EQ((a | b).size(), 5u);
  EXPECT_EQ((a & b), VertexSet::of(Part::X, 70, {3, 69}));
  EXPECT_EQ((a - b), VertexSet::of(Part::X, 70, {0, 64}));
  EXPECT_EQ(symmetric_difference_size(a, b), 3u);
  EXPECT_EQ(a.complement().size(), 66u);
  EXPECT_TRUE((a & b).is_subset_of(a));
  EXPECT_EQ(a.to_string(), "{0,3,64,69}");
  EXPECT_THROW(a |= VertexSet::of(Part::Y, 70, {1}), PartMismatch);
}

TEST(VertexSet, CanonicalOrderIsLexicographicOnSortedIndices) {
  auto s = [](std::initializer_list<std::size_t> m) { return VertexSet::of(Part::X, 8, m); };
  EXPECT_TRUE(canonical_less(s({}), s({0})));
  EXPECT_TRUE(canonical_less(s({0, 5}), s({1})));
  EXPECT_TRUE(canonical_less(s({0}), s({0, 1})));
  EXPECT_FALSE(canonical_less(s({2}), s({2})));
}

TEST(BipartiteGraph, RejectsBadInput) {
  EXPECT_THROW(BipartiteGraph(2, 1, {{0, 0}, {1, 0}}), InputError);
  EXPECT_THROW(BipartiteGraph(2, 1, {{0, 0}, {0, 0}}), InputError);
  EXPECT_THROW(BipartiteGraph(2, 3, {}), InputError);
  EXPECT_THROW(BipartiteGraph(2, 1, {{0, 2}, {1, 0}}), InputError);
}

TEST(DeltaParam, FloorMatchesDegree) {
  const DeltaParam half{1, 2};
  EXPECT_TRUE(half.matches(20, 10));
  EXPECT_FALSE(half.matches(21, 11));
  EXPECT_TRUE(half.matches(21, 10));
}

TEST(Neighbors, Examples) {
  const auto g = k22();
  EXPECT_EQ(neighbors(g, xs(g, {0})), ys(g, {0, 1}));
  EXPECT_EQ(neighbors(g, g.empty_x()), g.empty_y());
  const auto c = c6();
  EXPECT_EQ(neighbors(c, xs(c, {0, 2})), ys(c, {0, 1, 2}));
  EXPECT_THROW(neighbors(g, ys(g, {0})), PartMismatch);
}

TEST(Closure, Examples) {
  const auto g = k22();
  EXPECT_EQ(closure(g, xs(g, {0})), xs(g, {0, 1}));
  EXPECT_EQ(closure(g, g.empty_x()), g.empty_x());
  const auto c = c6();
  EXPECT_EQ(closure(c, xs(c, {0})), xs(c, {0}));
}

TEST(TwoLinked, Examples) {
  const auto g = k22();
  EXPECT_TRUE(two_linked_components(g, g.empty_x()).empty());
  auto comps = two_linked_components(g, xs(g, {0, 1}));
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_EQ(comps[0], xs(g, {0, 1}));
  const auto u = two_k22();
  comps = two_linked_components(u, xs(u, {0, 2}));
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0], xs(u, {0}));
  EXPECT_EQ(comps[1], xs(u, {2}));
}

TEST(CutValue, Examples) {
  const auto g = k22();
  EXPECT_EQ(cut_value(g, VertexSet(Part::V, 4)), 0u);
  EXPECT_EQ(cut_value(g, vs(g, {0, 1})), 4u);
  EXPECT_EQ(cut_value(g, vs(g, {0, 2})), 2u);
}

TEST(Contracting, Examples) {
  const auto g = k22();
  EXPECT_TRUE(is_t_contracting(g, xs(g, {0, 1}), 1));
  EXPECT_FALSE(is_closed(g, xs(g, {0})));
  EXPECT_TRUE(is_closed(g, g.empty_x()));
  EXPECT_TRUE(is_t_contracting(g, g.empty_x(), 1));
}

TEST(Generate, Examples) {
  for (std::uint64_t seed : {0, 1, 99}) {
    EXPECT_EQ(generate_regular(1, 1, seed), k11());
    EXPECT_EQ(generate_regular(4, 4, seed), complete_bipartite(4));
  }
  const auto g = generate_regular(40, 12, 7);
  EXPECT_EQ(g.n(), 40u);
  EXPECT_EQ(g.edges().size(), 480u);
  EXPECT_EQ(generate_regular(40, 12, 7), g);
  EXPECT_THROW(generate_regular(3, 4, 0), InputError);
}

TEST(GraphIo, ParsesAndRoundTrips) {
  EXPECT_EQ(parse_graph("1 1\n0 0\n"), k11());
  EXPECT_EQ(parse_graph("2 2\n0 0\n0 1\n1 0\n1 1\n"), k22());
  const auto g = generate_regular(12, 5, 3);
  std::ostringstream out;
  write_graph(g, out);
  EXPECT_EQ(parse_graph(out.str()), g);
}

TEST(GraphIo, ErrorsCarryLineNumbers) {
  auto message = [](std::string_view text) {
    try {
      parse_graph(text);
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message("2 x\n").find("line 1"), std::string::npos);
  EXPECT_NE(message("2 1\n0 0\n0 5\n").find("line 3"), std::string::npos);
  EXPECT_NE(message("2 2\n0 0\n0 1\n1 0\n0 1\n").find("line 5"), std::string::npos);
  EXPECT_NE(message("2 2\n0 0\n0 1\n1 0\n").find("regular"), std::string::npos);
}

// Properties over every graph with n <= 4 and random subsets of larger graphs.

TEST(BigraphProperties, ClosureIsExtensiveIdempotentAndPreservesNeighbourhood) {
  auto check = [](const BipartiteGraph& g, const VertexSet& a) {
    const VertexSet c = closure(g, a);
    ASSERT_TRUE(a.is_subset_of(c));
    ASSERT_EQ(closure(g, c), c);
    ASSERT_EQ(neighbors(g, c), neighbors(g, a));
  };
  for (const auto& g : all_tiny())
    for (const auto& a : all_x_subsets(g)) check(g, a);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const auto g = generate_regular(30, 3 + i % 10, i);
    for (int j = 0; j < 20; ++j) check(g, random_subset(Part::X, g.n(), rng));
  }
}

TEST(BigraphProperties, ComponentsPartitionWithDisjointNeighbourhoods) {
  auto check = [](const BipartiteGraph& g, const VertexSet& a) {
    const auto comps = two_linked_components(g, a);
    VertexSet u = g.empty_x();
    for (std::size_t i = 0; i < comps.size(); ++i) {
      ASSERT_TRUE(is_two_linked(g, comps[i]));
      ASSERT_FALSE(u.intersects(comps[i]));
      u |= comps[i];
      for (std::size_t j = 0; j < i; ++j) {
        ASSERT_FALSE(neighbors(g, comps[i]).intersects(neighbors(g, comps[j])));
        ASSERT_FALSE(is_two_linked(g, comps[i] | comps[j]));
      }
    }
    ASSERT_EQ(u, a);
  };
  for (const auto& g : all_tiny())
    for (const auto& a : all_x_subsets(g)) check(g, a);
  std::mt19937_64 rng(12);
  for (int i = 0; i < 50; ++i) {
    const auto g = generate_regular(30, 1 + i % 4, i);
    for (int j = 0; j < 20; ++j) check(g, random_subset(Part::X, g.n(), rng));
  }
}

TEST(BigraphProperties, CutValueMatchesEdgeScanAndComplement) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 40; ++i) {
    const auto g = generate_regular(16, 2 + i % 8, i);
    for (int j = 0; j < 25; ++j) {
      const VertexSet c = random_subset(Part::V, 2 * g.n(), rng);
      std::size_t scan = 0;
      for (auto [x, y] : g.edges()) scan += c.contains(x) != c.contains(g.n() + y);
      ASSERT_EQ(cut_value(g, c), scan);
      ASSERT_EQ(cut_value(g, c.complement()), scan);
    }
  }
}

TEST(BigraphProperties, GeneratorOutputIsRegularAndSimple) {
  for (std::size_t n = 1; n <= 24; ++n)
    for (std::size_t d = 1; d <= n; d += 3) {
      const auto g = generate_regular(n, d, n * 31 + d);
      std::vector<std::size_t> deg_y(n, 0);
      for (std::size_t x = 0; x < n; ++x) {
        ASSERT_EQ(g.adj_x(x).size(), d);
        for (std::size_t y : g.adj_x(x)) {
          ++deg_y[y];
          ASSERT_TRUE(g.has_edge(x, y));
          ASSERT_TRUE(g.nbr_of_y(y).contains(x));
        }
      }
      for (std::size_t y = 0; y < n; ++y) ASSERT_EQ(deg_y[y], d);
    }
}
