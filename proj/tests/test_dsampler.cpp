#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "test_graphs.hpp"

using namespace biscount;
using namespace biscount::testing;

namespace {

double ratio_log(const Rational& est, const BigInt& exact) {
  return std::abs(log2_of(est) - log2_of(exact)) * std::log(2.0);
}

// Closed 2-linked sets with |A| <= 12 from random dense graphs.
std::vector<std::pair<BipartiteGraph, VertexSet>> sample_components(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<BipartiteGraph, VertexSet>> out;
  while (out.size() < count) {
    const std::size_t n = 8 + rng() % 5, d = 2 + rng() % (n / 2);
    const auto g = generate_regular(n, d, rng());
    VertexSet a = g.empty_x();
    for (std::size_t k = 0, size = 2 + rng() % 3; k < size; ++k) a.insert(rng() % n);
    const auto comps = two_linked_components(g, closure(g, a));
    const auto& c = comps.front();
    if (c.size() >= 2 && c.size() <= 12 && is_closed(g, c)) out.emplace_back(g, c);
  }
  return out;
}

}  // namespace

TEST(SmallCover, Examples) {
  const auto g = k22();
  EXPECT_EQ(find_small_cover(g, xs(g, {0, 1})).cover, xs(g, {0}));
  EXPECT_EQ(find_small_cover(g, xs(g, {1})).cover, xs(g, {1}));
  const auto c = c6();
  const auto cover = find_small_cover(c, c.all_x()).cover;
  EXPECT_EQ(cover.size(), 2u);
  EXPECT_EQ(neighbors(c, cover), c.all_y());
  EXPECT_THROW(find_small_cover(g, g.empty_x()), InputError);
  const auto u = two_k22();
  EXPECT_THROW(find_small_cover(u, xs(u, {0, 2})), InputError);
}

TEST(SmallCover, CoverIsTwoLinkedWithFullNeighbourhood) {
  for (const auto& [g, a] : sample_components(60, 3)) {
    const auto cover = find_small_cover(g, a).cover;
    ASSERT_TRUE(cover.is_subset_of(a));
    ASSERT_TRUE(is_two_linked(g, cover));
    ASSERT_EQ(neighbors(g, cover), neighbors(g, a));
  }
}

TEST(SampleCount, Example) {
  EXPECT_EQ(sample_count(1, 0.5, 0.25), 50u);
  EXPECT_EQ(sample_count(200, 0.1, 0.1), UINT64_MAX);
}

TEST(EstimateComponent, Examples) {
  const auto g = k22();
  const auto e = estimate_component(g, xs(g, {0, 1}), 0.25, 0.01, 7);
  EXPECT_LE(ratio_log(e.value, 3), 0.25);
  EXPECT_GT(e.value, 0);
  EXPECT_GE(e.samples, 1u);
  // A closed singleton: only B = A hits, so the estimate is 2 * hits / m ≈ 1.
  const auto c = c6();
  const auto s = estimate_component(c, xs(c, {0}), 0.25, 0.01, 7);
  EXPECT_LE(std::abs(static_cast<double>(s.value) - 1.0), 0.25);
}

TEST(EstimateComponent, RejectsBadInput) {
  const auto g = k22();
  EXPECT_THROW(estimate_component(g, xs(g, {0, 1}), 0.0, 0.1, 0), InputError);
  EXPECT_THROW(estimate_component(g, xs(g, {0, 1}), 1.5, 0.1, 0), InputError);
  EXPECT_THROW(estimate_component(g, xs(g, {0, 1}), 0.5, 1.0, 0), InputError);
  const auto c = c6();
  EXPECT_THROW(estimate_component(c, xs(c, {0, 1}), 0.5, 0.1, 0), InputError);  // not closed
  SamplerConfig tight;
  tight.sample_budget = 10;
  EXPECT_THROW(estimate_component(g, xs(g, {0, 1}), 0.5, 0.1, 0, tight), BudgetExceeded);
}

TEST(EstimateDA, Examples) {
  const auto g = k22();
  EXPECT_EQ(estimate_DA(g, ContractingSet::from(g, g.empty_x()), 0.3, 0.1, 1), Rational(1));
  const auto one = ContractingSet::from(g, xs(g, {0, 1}));
  EXPECT_EQ(estimate_DA(g, one, 0.3, 0.1, 1), estimate_component(g, one.set, 0.15, 0.1, component_seed(1, one.set)).value);
  const auto u = two_k22();
  const auto two = ContractingSet::from(u, xs(u, {0, 1, 2, 3}));
  std::vector<CoverCountEstimate> log;
  const Rational v = estimate_DA(u, two, 0.3, 0.1, 1, {}, &log);
  ASSERT_EQ(log.size(), 2u);
  EXPECT_DOUBLE_EQ(log[0].eps_prime, 0.075);
  EXPECT_DOUBLE_EQ(log[0].rho, 0.05);
  EXPECT_LE(ratio_log(v, 9), 0.3);
}

TEST(DSamplerProperties, SupersetsOfTheCoverAlwaysHit) {
  for (const auto& [g, a] : sample_components(30, 5)) {
    const auto cover = find_small_cover(g, a).cover;
    const auto rest = (a - cover).indices();
    const auto target = neighbors(g, a);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << rest.size()); ++m) {
      VertexSet b = cover;
      for (std::size_t i = 0; i < rest.size(); ++i)
        if ((m >> i) & 1u) b.insert(rest[i]);
      ASSERT_EQ(neighbors(g, b), target);
      ASSERT_TRUE(is_two_linked(g, b));
    }
  }
}

TEST(DSamplerProperties, UnbiasedMean) {
  // Mean of 200 estimates within three standard errors of the exact count.
  for (const auto& [g, a] : sample_components(4, 9)) {
    const BigInt exact = oracle::exact_DA(g, a);
    std::vector<double> values;
    for (std::uint64_t seed = 0; seed < 200; ++seed)
      values.push_back(static_cast<double>(estimate_component(g, a, 1.0, 0.5, seed).value));
    double mean = 0, var = 0;
    for (double v : values) mean += v;
    mean /= 200;
    for (double v : values) var += (v - mean) * (v - mean);
    const double se = std::sqrt(var / 199 / 200);
    EXPECT_LE(std::abs(mean - static_cast<double>(exact)), 3 * se + 1e-9) << a.to_string();
  }
}

TEST(DSamplerProperties, CoverageMeetsConfidence) {
  for (const auto& [g, a] : sample_components(5, 17)) {
    const BigInt exact = oracle::exact_DA(g, a);
    int within = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed)
      within += ratio_log(estimate_component(g, a, 0.5, 0.2, seed).value, exact) <= 0.5;
    EXPECT_GE(within, 80) << a.to_string();
  }
}

TEST(DSamplerProperties, DeterministicAcrossRunsAndThreads) {
  const auto g = generate_regular(12, 6, 4);
  const auto a = g.all_x();
  SamplerConfig four;
  four.threads = 4;
  const auto e1 = estimate_component(g, a, 0.05, 0.01, 42);
  const auto e2 = estimate_component(g, a, 0.05, 0.01, 42);
  const auto e4 = estimate_component(g, a, 0.05, 0.01, 42, four);
  EXPECT_EQ(e1.value, e2.value);
  EXPECT_EQ(e1.hits, e4.hits);
  EXPECT_GT(e1.samples, detail::kSampleChunk);
}
