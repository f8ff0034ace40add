#include <gtest/gtest.h>

#include <random>

#include "graphclust/error.hpp"
#include "graphclust/generators.hpp"
#include "graphclust/louvain.hpp"
#include "graphclust/metrics.hpp"
#include "oracles.hpp"

using namespace graphclust;

TEST(LocalMoving, BarbellFindsTriangles) {
  const auto g = gen::barbell6();
  const auto [best_q, best] = oracle::best_partition(oracle::dense_matrix(g));
  EXPECT_NEAR(best_q, 5.0 / 14.0, 1e-12);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto p = local_moving_phase(g, {.seed = seed});
    EXPECT_TRUE(same_clustering(p, Partition::from_labels(best)));
    EXPECT_NEAR(modularity(g, p), 5.0 / 14.0, 1e-12);
  }
}

TEST(LocalMoving, TriangleIsOneCommunity) {
  const auto g = gen::disjoint_cliques(1, 3);
  const auto [best_q, best] = oracle::best_partition(oracle::dense_matrix(g));
  EXPECT_NEAR(best_q, 0.0, 1e-15);
  const auto p = local_moving_phase(g, {});
  EXPECT_EQ(p.community_count(), 1u);
  EXPECT_NEAR(modularity(g, p), 0.0, 1e-15);
}

TEST(LocalMoving, TwoDisjointK4) {
  const auto g = gen::disjoint_cliques(2, 4);
  const auto [best_q, best] = oracle::best_partition(oracle::dense_matrix(g));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto p = local_moving_phase(g, {.seed = seed});
    EXPECT_TRUE(same_clustering(p, Partition({0, 0, 0, 0, 1, 1, 1, 1})));
    EXPECT_NEAR(modularity(g, p), best_q, 1e-12);
  }
}

TEST(LocalMoving, NeverBelowSingletons) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = UndirectedGraph::from_edge_list(oracle::random_edges(rng, 30, 0.1, true));
    const auto p = local_moving_phase(g, {.seed = static_cast<std::uint64_t>(trial)});
    EXPECT_GE(modularity(g, p), modularity(g, Partition::singletons(g.vertex_count())) - 1e-12);
  }
}

TEST(LocalMoving, EveryMoveStrictlyIncreasesQ) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = UndirectedGraph::from_edge_list(oracle::random_edges(rng, 60 + trial * 14, 0.06));
    std::vector<CommunityId> current(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) current[v] = v;
    int moves = 0;
    const auto observer = [&](VertexId v, CommunityId from, CommunityId to, double gain) {
      ASSERT_EQ(current[v], from);
      const double before = modularity(g, Partition::from_labels(current));
      current[v] = to;
      const double after = modularity(g, Partition::from_labels(current));
      EXPECT_GT(after, before);
      EXPECT_NEAR(after - before, gain, 1e-10);
      ++moves;
    };
    const auto p = local_moving_phase(g, {.seed = static_cast<std::uint64_t>(trial)}, observer);
    EXPECT_GT(moves, 0);
    EXPECT_TRUE(same_clustering(p, Partition::from_labels(current)));
  }
}

TEST(LocalMoving, RequiresWeight) {
  EXPECT_THROW(local_moving_phase(UndirectedGraph::edgeless(4), {}), UndefinedModularityError);
  EXPECT_THROW(louvain(UndirectedGraph::edgeless(4)), UndefinedModularityError);
}

TEST(Louvain, BarbellConvergesQuickly) {
  const auto result = louvain(gen::barbell6());
  ASSERT_GE(result.levels.size(), 1u);
  EXPECT_LE(result.levels.size(), 2u);
  EXPECT_TRUE(same_clustering(result.final, Partition({0, 0, 0, 1, 1, 1})));
}

TEST(Louvain, RingOfCliquesFirstLevel) {
  const auto g = gen::ring_of_cliques(30, 5);
  std::vector<std::uint32_t> cliques(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) cliques[v] = v / 5;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto result = louvain(g, {.seed = seed});
    ASSERT_GE(result.levels.size(), 2u);
    EXPECT_EQ(result.levels[0].partition.community_count(), 30u);
    EXPECT_TRUE(same_clustering(result.levels[0].partition, Partition::from_labels(cliques)));
    for (std::size_t l = 1; l < result.levels.size(); ++l) {
      EXPECT_GT(result.levels[l].modularity, result.levels[l - 1].modularity);
    }
  }
}

TEST(Louvain, LevelsCoarsenAndMatchCoarseQ) {
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = gen::planted_partition(300, 6, 6, 2, 100 + trial);
    const auto result = louvain(g, {.seed = static_cast<std::uint64_t>(trial)});
    for (std::size_t l = 0; l < result.levels.size(); ++l) {
      const auto& level = result.levels[l];
      EXPECT_NEAR(level.modularity, modularity(g, level.partition), 1e-10);
      const auto coarse = coarsen(g, level.partition);
      EXPECT_NEAR(level.modularity, modularity(coarse, Partition::singletons(coarse.vertex_count())), 1e-10);
      if (l > 0) {
        EXPECT_TRUE(result.levels[l - 1].partition.refines(level.partition));
        EXPECT_GT(level.modularity, result.levels[l - 1].modularity);
      }
    }
    EXPECT_EQ(result.final, result.levels.back().partition);
  }
}

TEST(Louvain, DeterministicForSeed) {
  const auto g = gen::planted_partition(500, 10, 5, 2, 9);
  const auto a = louvain(g, {.seed = 17});
  const auto b = louvain(g, {.seed = 17});
  ASSERT_EQ(a.levels.size(), b.levels.size());
  for (std::size_t l = 0; l < a.levels.size(); ++l) {
    EXPECT_EQ(a.levels[l].partition, b.levels[l].partition);
    EXPECT_EQ(a.levels[l].modularity, b.levels[l].modularity);
  }
}

TEST(Louvain, MaxLevelsCaps) {
  const auto g = gen::ring_of_cliques(30, 5);
  EXPECT_EQ(louvain(g, {.max_levels = 1}).levels.size(), 1u);
}
