#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "graphclust/bsp.hpp"
#include "graphclust/graph.hpp"
#include "graphclust/ordering.hpp"

namespace graphclust {

using Label = std::uint32_t;

struct LpaConfig {
  std::uint32_t max_iterations = 10;
  double delta = 0.5;  ///< score attenuation per hop (score-based variant only)
  std::uint64_t seed = 42;
};

/// Per-vertex labels after a propagation run. scores is empty for the unscored variants.
struct Labeling {
  std::vector<Label> labels;
  std::vector<double> scores;
  RunStats stats;

  Partition partition() const { return Partition::from_labels(std::span<const Label>(labels)); }
};

/// Label propagation: every vertex starts with its own id and, each superstep, adopts the label
/// with the largest weight-summed support among its neighbours. Ties are broken at random by a
/// label priority drawn from (seed, superstep) and shared by all vertices of the superstep, which
/// keeps lockstep updates from oscillating on symmetric structures. Isolated vertices keep their
/// label.
Labeling lpa_basic(const UndirectedGraph& g, const LpaConfig& cfg = {}, unsigned workers = 1);

/// Score-based label propagation. Support for a label is the sum of neighbour score times edge
/// weight. A vertex that switches label takes the highest score among neighbours holding the
/// new label minus delta (clamped at 0); a vertex that keeps its label keeps its score.
Labeling lpa_scored(const UndirectedGraph& g, const LpaConfig& cfg = {}, unsigned workers = 1);

/// Absolute Potts model choice for v: argmax over neighbour labels L of
/// N_v(L) - gamma * (count(L) - N_v(L)), N_v being weight-summed support. Equal maxima go to the
/// label with the highest hash(tie_key, label). gamma == 0 reproduces the lpa_basic rule.
Label apm_update(const UndirectedGraph& g, std::span<const Label> labels, std::span<const std::size_t> label_counts,
                 double gamma, VertexId v, std::uint64_t tie_key);

/// Tie-breaking key shared by all vertices in one superstep.
std::uint64_t tie_key(std::uint64_t seed, std::uint32_t superstep) noexcept;

/// APM label propagation from singleton labels, run in supersteps until convergence or
/// max_iterations. Label counts are refreshed before every superstep.
Labeling apm_propagate(const UndirectedGraph& g, double gamma, std::uint32_t max_iterations, std::uint64_t seed,
                       unsigned workers = 1);

struct LlpConfig {
  std::uint32_t iterations_K = 5;
  std::uint32_t inner_max_iterations = 10;
  std::uint64_t seed = 42;
};

struct LlpResult {
  Ordering ordering;
  std::vector<Partition> partitions;  ///< one per iteration
  std::vector<double> gammas;         ///< resolution drawn for each iteration
};

/// Resolutions {0} U {2^-i : i = 0..K}.
std::vector<double> llp_gamma_set(std::uint32_t K);

/// Layered label propagation. Each iteration draws gamma uniformly from llp_gamma_set(K), runs
/// APM propagation and stably re-sorts the current ordering so vertices sharing a label become
/// contiguous, label blocks keyed by their first position in the current ordering.
LlpResult llp(const UndirectedGraph& g, const LlpConfig& cfg = {}, unsigned workers = 1);

/// Stable re-sort of `order` grouping vertices by label; groups keep the position of their first
/// member.
Ordering group_by_label(const Ordering& order, std::span<const Label> labels);

}  // namespace graphclust
