#include <gtest/gtest.h>

#include "kfree/cliques.hpp"
#include "kfree/generators.hpp"
#include "kfree/random.hpp"
#include "oracles.hpp"

using namespace kfree;

TEST(Cliques, Examples) {
  EXPECT_EQ(count_cliques(complete_graph(4), 3), 4U);
  EXPECT_EQ(count_cliques(cycle_graph(5), 3), 0U);
  EXPECT_EQ(count_cliques(turan_plus_matching(6, 3, 1), 4), 4U);
  EXPECT_EQ(count_cliques(complete_graph(3), 5), 0U);
  EXPECT_EQ(count_cliques(Graph(4), 1), 4U);
  for (int v = 0; v < 4; ++v) EXPECT_EQ(count_cliques_at(complete_graph(4), v, 3), 3U);
  for (int v = 0; v < 5; ++v) EXPECT_EQ(count_cliques_at(cycle_graph(5), v, 3), 0U);
  EXPECT_THROW(count_cliques(complete_graph(3), 0), PreconditionError);
}

TEST(Cliques, WideCountsUse128Bits) {
  const CliqueCount c = count_cliques(complete_graph(64), 32);
  // C(64, 32) = 1832624140942590534
  EXPECT_EQ(to_string(c), "1832624140942590534");
  EXPECT_EQ(to_string(count_cliques(complete_graph(40), 20)), "137846528820");
}

TEST(Cliques, Freeness) {
  EXPECT_TRUE(is_clique_free(cycle_graph(5), 3));
  EXPECT_TRUE(is_clique_free(turan_graph(6, 3), 4));
  EXPECT_FALSE(is_clique_free(turan_plus_matching(6, 3, 1), 4));
  EXPECT_TRUE(has_clique_within(complete_graph(5), VertexSet(0b111), 3));
  EXPECT_FALSE(has_clique_within(complete_graph(5), VertexSet(0b11), 3));
}

TEST(Cliques, AgreesWithSubsetEnumerationOnSmallGraphs) {
  for (int n = 1; n <= 6; ++n) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << pair_count(n)); ++m) {
      const Graph g = Graph::from_mask(n, m);
      const auto o = oracle::from_mask(n, m);
      for (int k = 1; k <= std::min(n, 6); ++k) {
        ASSERT_EQ(count_cliques(g, k), oracle::clique_count(o, k)) << n << " " << m << " " << k;
        ASSERT_EQ(is_clique_free(g, k), oracle::clique_count(o, k) == 0);
      }
    }
  }
}

TEST(Cliques, AgreesWithSubsetEnumerationOnRandomGraphs) {
  for (int k = 0; k < 200; ++k) {
    CounterRng rng(3, static_cast<std::uint64_t>(k));
    const int n = 2 + static_cast<int>(rng.below(11));
    const Graph g = random_graph(n, 0.3 + 0.5 * static_cast<double>(rng.below(100)) / 100.0, rng.next());
    const auto o = oracle::from_graph(g);
    for (int m = 1; m <= 6; ++m) ASSERT_EQ(count_cliques(g, m), oracle::clique_count(o, m));
  }
}

TEST(Cliques, HandshakeIdentity) {
  for (int k = 0; k < 200; ++k) {
    const Graph g = random_graph(6 + k % 20, 0.5, static_cast<std::uint64_t>(k));
    for (int m = 2; m <= 5; ++m) {
      CliqueCount sum = 0;
      for (int v = 0; v < g.order(); ++v) sum += count_cliques_at(g, v, m);
      ASSERT_EQ(sum, static_cast<CliqueCount>(m) * count_cliques(g, m));
    }
  }
}

TEST(Cliques, TuranFamilies) {
  for (int n = 1; n <= 20; ++n)
    for (int r = 1; r <= n; ++r) ASSERT_EQ(count_cliques(turan_graph(n, r), r + 1), 0U);
  for (int r : {2, 3}) {
    for (int k = 1; r * k <= 12; ++k) {
      for (int t = 0; 2 * t <= k; ++t) {
        CliqueCount expected = static_cast<CliqueCount>(t);
        for (int i = 0; i < r - 1; ++i) expected *= static_cast<CliqueCount>(k);
        ASSERT_EQ(count_cliques(turan_plus_matching(r * k, r, t), r + 1), expected);
      }
    }
  }
}

TEST(Transversal, Examples) {
  const Graph t = turan_graph(6, 3);
  const std::vector<VertexSet> parts = {VertexSet(0b000011), VertexSet(0b001100), VertexSet(0b110000)};
  const auto hit = find_transversal_clique(t, parts);
  ASSERT_TRUE(hit.has_value());
  for (std::size_t i = 0; i < parts.size(); ++i) EXPECT_TRUE(parts[i].contains((*hit)[i]));
  const std::vector<VertexSet> singles = {VertexSet::singleton(0), VertexSet::singleton(1)};
  EXPECT_FALSE(find_transversal_clique(Graph(2), singles).has_value());
  const std::vector<VertexSet> overlap = {VertexSet(0b11), VertexSet(0b10)};
  EXPECT_THROW(find_transversal_clique(t, overlap), PreconditionError);
}

TEST(Transversal, AgreesWithCartesianProduct) {
  for (int k = 0; k < 300; ++k) {
    CounterRng rng(11, static_cast<std::uint64_t>(k));
    const int n = 3 + static_cast<int>(rng.below(10));
    const int r = 2 + static_cast<int>(rng.below(3));
    const Graph g = random_graph(n, 0.55, rng.next());
    std::vector<VertexSet> parts(static_cast<std::size_t>(r));
    for (int v = 0; v < n; ++v) {
      const auto slot = rng.below(static_cast<std::uint64_t>(r) + 1);  // slot r leaves v out
      if (slot < static_cast<std::uint64_t>(r)) parts[slot] = parts[slot].with(v);
    }
    std::vector<std::vector<int>> lists;
    for (VertexSet p : parts) lists.emplace_back(p.begin(), p.end());
    const auto hit = find_transversal_clique(g, parts);
    ASSERT_EQ(hit.has_value(), oracle::has_transversal(oracle::from_graph(g), lists));
    if (hit) {
      for (int i = 0; i < r; ++i) {
        ASSERT_TRUE(parts[i].contains((*hit)[i]));
        for (int j = i + 1; j < r; ++j) ASSERT_TRUE(g.adjacent((*hit)[i], (*hit)[j]));
      }
    }
  }
}
