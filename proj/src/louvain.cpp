#include "graphclust/louvain.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "graphclust/error.hpp"
#include "graphclust/metrics.hpp"
#include "graphclust/rng.hpp"

namespace graphclust {

Partition local_moving_phase(const UndirectedGraph& g, const LouvainConfig& cfg, const MoveObserver& observer) {
  const double m = g.total_weight();
  if (!(m > 0.0)) throw UndefinedModularityError("local moving needs a graph with m > 0");
  if (!(cfg.min_gain > 0.0)) throw ParameterError("min_gain must be positive");

  const std::size_t n = g.vertex_count();
  CommunityState state = CommunityState::singletons(g);

  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  std::mt19937_64 rng(cfg.seed);
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<double> links(n, 0.0);
  std::vector<char> seen(n, 0);
  std::vector<CommunityId> touched;

  bool moved = true;
  while (moved) {
    moved = false;
    for (VertexId v : order) {
      const CommunityId from = state.community_of(v);
      const double k = g.k(v);

      touched.clear();
      for (const auto& nb : g.neighbors(v)) {
        const CommunityId c = state.community_of(nb.id);
        if (!seen[c]) {
          seen[c] = 1;
          touched.push_back(c);
        }
        links[c] += nb.weight;
      }

      const double stay = insertion_gain(links[from], state.sigma_tot(from) - k, k, m);
      CommunityId best = from;
      double best_gain = stay;
      for (CommunityId c : touched) {
        if (c == from) continue;
        const double gain = insertion_gain(links[c], state.sigma_tot(c), k, m);
        if (gain > best_gain || (gain == best_gain && best != from && c < best)) {
          best = c;
          best_gain = gain;
        }
      }

      if (best != from && best_gain - stay > cfg.min_gain) {
        state.move(v, best, links[from], links[best]);
        if (observer) observer(v, from, best, best_gain - stay);
        moved = true;
      }
      for (CommunityId c : touched) {
        links[c] = 0.0;
        seen[c] = 0;
      }
    }
  }
  return state.partition();
}

LouvainResult louvain(const UndirectedGraph& g, const LouvainConfig& cfg) {
  if (cfg.max_levels < 1) throw ParameterError("max_levels must be at least 1");
  const std::size_t n = g.vertex_count();
  const Partition singletons = Partition::singletons(n);
  double previous_q = modularity(g, singletons);

  LouvainResult result;
  UndirectedGraph current = g;
  std::vector<CommunityId> to_current(singletons.assignment());

  for (int level = 0; level < cfg.max_levels; ++level) {
    LouvainConfig level_cfg = cfg;
    level_cfg.seed = hash_keys(cfg.seed, {static_cast<std::uint64_t>(level)});
    const Partition moved = local_moving_phase(current, level_cfg);
    if (moved.community_count() == current.vertex_count()) break;

    std::vector<CommunityId> projected(n);
    for (std::size_t v = 0; v < n; ++v) projected[v] = moved[to_current[v]];
    Partition flat(projected);
    const double q = modularity(g, flat);
    if (q - previous_q <= cfg.min_gain) break;

    result.levels.push_back({flat, q});
    previous_q = q;
    current = coarsen(current, moved);
    to_current = std::move(projected);
  }

  if (result.levels.empty()) result.levels.push_back({singletons, previous_q});
  result.final = result.levels.back().partition;
  return result;
}

}  // namespace graphclust
