#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "graphclust/graph.hpp"

namespace graphclust {

struct LouvainConfig {
  double min_gain = 1e-9;  ///< a move (or a level) must improve Q by more than this
  int max_levels = 32;
  std::uint64_t seed = 42;
};

struct LouvainLevel {
  Partition partition;  ///< on the original vertices
  double modularity;
};

struct LouvainResult {
  std::vector<LouvainLevel> levels;
  Partition final;
};

/// Called for every accepted move with the exact modularity improvement of that move.
using MoveObserver = std::function<void(VertexId v, CommunityId from, CommunityId to, double gain)>;

/// Local moving heuristic from singletons. Vertices are visited in one seeded random order per
/// phase; each moves to the neighbouring community with the largest modularity gain (ties to the
/// smallest community id) when that beats staying by more than min_gain. Sweeps repeat until
/// a full sweep moves nothing. Throws UndefinedModularityError when m == 0.
Partition local_moving_phase(const UndirectedGraph& g, const LouvainConfig& cfg, const MoveObserver& observer = {});

/// Alternates local moving and coarsening until a level stops improving Q by more than
/// min_gain or max_levels is reached.
LouvainResult louvain(const UndirectedGraph& g, const LouvainConfig& cfg = {});

}  // namespace graphclust
