#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "graphclust/error.hpp"
#include "graphclust/generators.hpp"
#include "graphclust/labelprop.hpp"
#include "graphclust/metrics.hpp"
#include "graphclust/rng.hpp"
#include "oracles.hpp"

using namespace graphclust;

namespace {

// Straightforward synchronous simulation of the basic rule with ordered maps.
std::vector<Label> simulate_lpa(const UndirectedGraph& g, std::uint64_t seed, std::uint32_t max_iterations) {
  std::vector<Label> cur(g.vertex_count());
  for (VertexId v = 0; v < cur.size(); ++v) cur[v] = v;
  for (std::uint32_t step = 1; step <= max_iterations; ++step) {
    auto next = cur;
    const std::uint64_t key = tie_key(seed, step);
    for (VertexId v = 0; v < cur.size(); ++v) {
      std::map<Label, double> support;
      for (const auto& nb : g.neighbors(v)) support[cur[nb.id]] += nb.weight;
      if (support.empty()) continue;
      double best = -1.0;
      for (const auto& [label, w] : support) best = std::max(best, w);
      std::uint64_t top = 0;
      for (const auto& [label, w] : support) {
        if (w != best) continue;
        const std::uint64_t h = hash_keys(key, {label});
        if (h >= top) {
          top = h;
          next[v] = label;
        }
      }
    }
    if (next == cur) break;
    cur = std::move(next);
  }
  return cur;
}

double support_for(const UndirectedGraph& g, const std::vector<Label>& labels, VertexId v, Label l) {
  double s = 0.0;
  for (const auto& nb : g.neighbors(v)) {
    if (labels[nb.id] == l) s += nb.weight;
  }
  return s;
}

bool contiguous_blocks(const Ordering& order, const std::vector<Label>& labels) {
  std::set<Label> closed;
  const auto seq = order.sequence();
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Label l = labels[seq[i]];
    if (closed.contains(l)) return false;
    if (i + 1 < seq.size() && labels[seq[i + 1]] != l) closed.insert(l);
  }
  return true;
}

}  // namespace

TEST(LpaBasic, EdgelessKeepsLabels) {
  const auto out = lpa_basic(UndirectedGraph::edgeless(3));
  EXPECT_EQ(out.labels, (std::vector<Label>{0, 1, 2}));
  EXPECT_EQ(out.stats.supersteps_executed, 1u);
  EXPECT_TRUE(out.stats.converged);
  EXPECT_TRUE(out.scores.empty());
}

TEST(LpaBasic, TwoTrianglesGiveTwoLabels) {
  const auto g = gen::disjoint_cliques(2, 3);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto out = lpa_basic(g, {.seed = seed});
    EXPECT_EQ(out.partition().community_count(), 2u) << "seed " << seed;
    EXPECT_TRUE(out.stats.converged);
  }
}

TEST(LpaBasic, TwoK4AlwaysSettle) {
  const auto g = gen::disjoint_cliques(2, 4);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto out = lpa_basic(g, {.seed = seed});
    EXPECT_TRUE(out.stats.converged) << "seed " << seed;
    EXPECT_TRUE(same_clustering(out.partition(), Partition({0, 0, 0, 0, 1, 1, 1, 1}))) << "seed " << seed;
  }
}

TEST(LpaBasic, StarLeavesTakeCentre) {
  const auto out = lpa_basic(gen::star(3), {.max_iterations = 1});
  EXPECT_EQ(out.labels[1], 0u);
  EXPECT_EQ(out.labels[2], 0u);
  EXPECT_EQ(out.labels[3], 0u);
}

TEST(LpaBasic, MatchesSimulationOracle) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = UndirectedGraph::from_edge_list(oracle::random_edges(rng, 40, 0.08));
    const LpaConfig cfg{.max_iterations = 10, .seed = static_cast<std::uint64_t>(trial)};
    EXPECT_EQ(lpa_basic(g, cfg).labels, simulate_lpa(g, cfg.seed, cfg.max_iterations));
  }
}

TEST(LpaBasic, NoInventedLabelsAndFixpoint) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = gen::planted_partition(400, 8, 8, 1, seed);
    const auto out = lpa_basic(g, {.max_iterations = 100, .seed = seed});
    for (Label l : out.labels) EXPECT_LT(l, g.vertex_count());
    if (!out.stats.converged) continue;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (g.neighbor_count(v) == 0) continue;
      const double mine = support_for(g, out.labels, v, out.labels[v]);
      for (const auto& nb : g.neighbors(v)) EXPECT_GE(mine, support_for(g, out.labels, v, out.labels[nb.id]));
    }
  }
}

TEST(LpaBasic, IndependentOfWorkers) {
  const auto g = gen::planted_partition(3000, 30, 6, 2, 5);
  const auto reference = lpa_basic(g, {.seed = 9}, 1);
  for (unsigned w : {2u, 3u, 5u, 10u}) {
    const auto out = lpa_basic(g, {.seed = 9}, w);
    EXPECT_EQ(out.labels, reference.labels);
    EXPECT_EQ(out.stats.supersteps_executed, reference.stats.supersteps_executed);
  }
}

TEST(LpaBasic, RejectsZeroIterations) {
  EXPECT_THROW(lpa_basic(gen::path(3), {.max_iterations = 0}), ParameterError);
}

TEST(LpaScored, EdgelessKeepsScores) {
  const auto out = lpa_scored(UndirectedGraph::edgeless(4));
  EXPECT_EQ(out.labels, (std::vector<Label>{0, 1, 2, 3}));
  EXPECT_EQ(out.scores, std::vector<double>(4, 1.0));
}

TEST(LpaScored, StarLeavesAttenuate) {
  const auto out = lpa_scored(gen::star(3), {.max_iterations = 1});
  for (VertexId leaf = 1; leaf <= 3; ++leaf) {
    EXPECT_EQ(out.labels[leaf], 0u);
    EXPECT_DOUBLE_EQ(out.scores[leaf], 0.5);
  }
}

TEST(LpaScored, AttenuationHaltsEpidemicOnPath) {
  const auto g = gen::path(7);
  int takeovers = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto out = lpa_scored(g, {.max_iterations = 10, .seed = seed});
    if (out.partition().community_count() == 1) ++takeovers;
    for (double s : out.scores) {
      EXPECT_GE(s, 0.0);
      EXPECT_LE(s, 1.0);
    }
  }
  EXPECT_LT(takeovers, 50);
}

TEST(LpaScored, ZeroDeltaFollowsBasic) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = UndirectedGraph::from_edge_list(oracle::random_edges(rng, 30, 0.1));
    const LpaConfig cfg{.max_iterations = 10, .delta = 0.0, .seed = static_cast<std::uint64_t>(trial)};
    const auto scored = lpa_scored(g, cfg);
    const auto basic = lpa_basic(g, cfg);
    EXPECT_EQ(scored.labels, basic.labels);
    EXPECT_EQ(scored.stats.supersteps_executed, basic.stats.supersteps_executed);
  }
}

TEST(LpaScored, IndependentOfWorkers) {
  const auto g = gen::planted_partition(2000, 20, 6, 2, 6);
  const auto reference = lpa_scored(g, {.seed = 4}, 1);
  for (unsigned w : {2u, 7u}) {
    const auto out = lpa_scored(g, {.seed = 4}, w);
    EXPECT_EQ(out.labels, reference.labels);
    EXPECT_EQ(out.scores, reference.scores);
  }
}

TEST(LpaScored, RejectsBadDelta) {
  EXPECT_THROW(lpa_scored(gen::path(3), {.delta = 1.5}), ParameterError);
}

TEST(Apm, ZeroGammaMatchesBasicRule) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = UndirectedGraph::from_edge_list(oracle::random_edges(rng, 12, 0.3));
    const auto raw = oracle::random_labels(rng, g.vertex_count(), 4);
    const std::vector<Label> labels(raw.begin(), raw.end());
    std::vector<std::size_t> counts(4, 0);
    for (Label l : labels) ++counts[l];
    const std::uint64_t key = tie_key(trial, 1);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (g.neighbor_count(v) == 0) continue;
      const Label chosen = apm_update(g, labels, counts, 0.0, v, key);
      double best = 0.0;
      for (const auto& nb : g.neighbors(v)) best = std::max(best, support_for(g, labels, v, labels[nb.id]));
      EXPECT_DOUBLE_EQ(support_for(g, labels, v, chosen), best);
    }
  }
}

TEST(Apm, PenaltyFavoursSmallLabel) {
  // Vertex 0 sees label 1 on three neighbours and label 2 on two.
  const auto g = UndirectedGraph::from_edge_list({{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}, {0, 4, 1.0}, {0, 5, 1.0}});
  const std::vector<Label> labels{0, 1, 1, 1, 2, 2};
  const std::vector<std::size_t> counts{1, 1000, 2};
  EXPECT_EQ(apm_update(g, labels, counts, 1.0, 0, 7), 2u);
  EXPECT_EQ(apm_update(g, labels, counts, 0.0, 0, 7), 1u);
}

TEST(Apm, IsolatedVertexKeepsLabel) {
  const auto g = UndirectedGraph::from_edge_list({{1, 2, 1.0}});
  const std::vector<Label> labels{5, 1, 2};
  const std::vector<std::size_t> counts{0, 1, 1, 0, 0, 1};
  EXPECT_EQ(apm_update(g, labels, counts, 0.5, 0, 3), 5u);
}

TEST(Apm, PropagationIndependentOfWorkers) {
  const auto g = gen::planted_partition(1500, 15, 6, 2, 8);
  const auto reference = apm_propagate(g, 0.25, 10, 3, 1);
  EXPECT_EQ(apm_propagate(g, 0.25, 10, 3, 4).labels, reference.labels);
}

TEST(Llp, GammaSet) {
  EXPECT_EQ(llp_gamma_set(2), (std::vector<double>{0.0, 1.0, 0.5, 0.25}));
}

TEST(Llp, EdgelessGivesIdentity) {
  const auto out = llp(UndirectedGraph::edgeless(5), {.iterations_K = 1});
  EXPECT_EQ(out.ordering, Ordering::identity(5));
  ASSERT_EQ(out.partitions.size(), 1u);
}

TEST(Llp, BarbellLabelsAreContiguous) {
  const auto g = gen::barbell6();
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto out = llp(g, {.iterations_K = 2, .seed = seed});
    ASSERT_EQ(out.partitions.size(), 2u);
    const auto& last = out.partitions.back();
    EXPECT_TRUE(contiguous_blocks(out.ordering, std::vector<Label>(last.assignment().begin(), last.assignment().end())));
  }
}

TEST(Llp, OrderingsArePermutationsAndGammasFromSet) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = gen::planted_partition(300, 6, 5, 2, seed);
    const LlpConfig cfg{.iterations_K = 4, .seed = seed};
    const auto out = llp(g, cfg);
    std::vector<std::uint32_t> ranks = out.ordering.ranks();
    std::sort(ranks.begin(), ranks.end());
    for (std::uint32_t i = 0; i < ranks.size(); ++i) ASSERT_EQ(ranks[i], i);
    const auto allowed = llp_gamma_set(cfg.iterations_K);
    ASSERT_EQ(out.gammas.size(), cfg.iterations_K);
    for (double gamma : out.gammas) EXPECT_NE(std::find(allowed.begin(), allowed.end(), gamma), allowed.end());
    for (const auto& p : out.partitions) {
      const auto refined = ordering_refinement(p, out.ordering);
      EXPECT_TRUE(refined.refines(p));
      EXPECT_GE(variation_of_information(p, refined), 0.0);
    }
  }
}

TEST(Llp, IndependentOfWorkers) {
  const auto g = gen::planted_partition(1000, 10, 5, 2, 2);
  EXPECT_EQ(llp(g, {.seed = 5}, 1).ordering, llp(g, {.seed = 5}, 6).ordering);
}

TEST(GroupByLabel, StableFirstPositionOrder) {
  // Current order 3,1,0,2; labels put {1,2} together and {0,3} together.
  const auto order = Ordering::from_sequence({3, 1, 0, 2});
  const std::vector<Label> labels{7, 4, 4, 7};
  EXPECT_EQ(group_by_label(order, labels).sequence(), (std::vector<VertexId>{3, 0, 1, 2}));
}
