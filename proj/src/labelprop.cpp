#include "graphclust/labelprop.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>
#include <unordered_map>
#include <utility>

#include "graphclust/error.hpp"
#include "graphclust/rng.hpp"

namespace graphclust {

namespace {

struct Support {
  Label label;
  double weight;
  double best_score;  // highest neighbour score carrying the label (score-based variant)
};

/// Gathers (label, weight, score) contributions of v's neighbours and reduces them per label,
/// in ascending label order. The scratch buffer is per thread.
template <typename LabelOf, typename Contribution, typename ScoreOf>
const std::vector<Support>& gather(const UndirectedGraph& g, VertexId v, LabelOf label_of, Contribution contribution,
                                   ScoreOf score_of) {
  thread_local std::vector<std::tuple<Label, double, double>> raw;
  thread_local std::vector<Support> reduced;
  raw.clear();
  reduced.clear();
  for (const auto& nb : g.neighbors(v)) raw.emplace_back(label_of(nb.id), contribution(nb), score_of(nb.id));
  std::sort(raw.begin(), raw.end());
  for (const auto& [label, w, s] : raw) {
    if (!reduced.empty() && reduced.back().label == label) {
      reduced.back().weight += w;
      reduced.back().best_score = std::max(reduced.back().best_score, s);
    } else {
      reduced.push_back({label, w, s});
    }
  }
  return reduced;
}

/// Index into `candidates` maximizing objective. Ties go to the label with the highest
/// priority hash(key, label), so every vertex in a superstep ranks tied labels the same way.
template <typename Objective>
std::size_t pick(const std::vector<Support>& candidates, Objective objective, std::uint64_t key) {
  std::size_t best = 0;
  double best_value = -std::numeric_limits<double>::infinity();
  std::uint64_t best_priority = 0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const double value = objective(candidates[i]);
    if (value < best_value) continue;
    const std::uint64_t priority = hash_keys(key, {candidates[i].label});
    if (value > best_value || priority > best_priority) {
      best = i;
      best_value = value;
      best_priority = priority;
    }
  }
  return best;
}

struct ScoredLabel {
  Label label;
  double score;
  friend bool operator==(const ScoredLabel&, const ScoredLabel&) = default;
};

}  // namespace

std::uint64_t tie_key(std::uint64_t seed, std::uint32_t superstep) noexcept {
  return hash_keys(seed, {0x7469, superstep});
}

Labeling lpa_basic(const UndirectedGraph& g, const LpaConfig& cfg, unsigned workers) {
  if (cfg.max_iterations < 1) throw ParameterError("max_iterations must be at least 1");
  SuperstepProgram<Label> prog;
  prog.init = [](VertexId v) { return Label{v}; };
  prog.update = [seed = cfg.seed](VertexId v, std::span<const Label> prev, const UndirectedGraph& graph,
                                  std::uint32_t step) -> Label {
    if (graph.neighbor_count(v) == 0) return prev[v];
    const auto& support = gather(
        graph, v, [&](VertexId u) { return prev[u]; }, [](const Neighbor& nb) { return nb.weight; },
        [](VertexId) { return 0.0; });
    return support[pick(support, [](const Support& s) { return s.weight; }, tie_key(seed, step))].label;
  };
  auto run = run_supersteps(g, prog, cfg.max_iterations, workers);
  return {std::move(run.state), {}, run.stats};
}

Labeling lpa_scored(const UndirectedGraph& g, const LpaConfig& cfg, unsigned workers) {
  if (cfg.max_iterations < 1) throw ParameterError("max_iterations must be at least 1");
  if (!(cfg.delta >= 0.0 && cfg.delta <= 1.0)) throw ParameterError("delta must lie in [0, 1]");
  SuperstepProgram<ScoredLabel> prog;
  prog.init = [](VertexId v) { return ScoredLabel{v, 1.0}; };
  prog.update = [seed = cfg.seed, delta = cfg.delta](VertexId v, std::span<const ScoredLabel> prev,
                                                     const UndirectedGraph& graph, std::uint32_t step) -> ScoredLabel {
    if (graph.neighbor_count(v) == 0) return prev[v];
    const auto& support = gather(
        graph, v, [&](VertexId u) { return prev[u].label; },
        [&](const Neighbor& nb) { return prev[nb.id].score * nb.weight; }, [&](VertexId u) { return prev[u].score; });
    const Support& chosen = support[pick(support, [](const Support& s) { return s.weight; }, tie_key(seed, step))];
    if (!(chosen.weight > 0.0) || chosen.label == prev[v].label) return prev[v];
    return {chosen.label, std::max(0.0, chosen.best_score - delta)};
  };
  prog.changed = [](const ScoredLabel& a, const ScoredLabel& b) { return a.label != b.label; };
  auto run = run_supersteps(g, prog, cfg.max_iterations, workers);

  Labeling out;
  out.labels.reserve(run.state.size());
  out.scores.reserve(run.state.size());
  for (const auto& s : run.state) {
    out.labels.push_back(s.label);
    out.scores.push_back(s.score);
  }
  out.stats = run.stats;
  return out;
}

Label apm_update(const UndirectedGraph& g, std::span<const Label> labels, std::span<const std::size_t> label_counts,
                 double gamma, VertexId v, std::uint64_t tie) {
  if (g.neighbor_count(v) == 0) return labels[v];
  const auto& support = gather(
      g, v, [&](VertexId u) { return labels[u]; }, [](const Neighbor& nb) { return nb.weight; },
      [](VertexId) { return 0.0; });
  const auto objective = [&](const Support& s) {
    if (gamma == 0.0) return s.weight;
    return s.weight - gamma * (static_cast<double>(label_counts[s.label]) - s.weight);
  };
  return support[pick(support, objective, tie)].label;
}

Labeling apm_propagate(const UndirectedGraph& g, double gamma, std::uint32_t max_iterations, std::uint64_t seed,
                       unsigned workers) {
  if (!(gamma >= 0.0)) throw ParameterError("gamma must be non-negative");
  std::vector<std::size_t> counts(g.vertex_count(), 0);
  SuperstepProgram<Label> prog;
  prog.init = [](VertexId v) { return Label{v}; };
  prog.prepare = [&counts](std::span<const Label> prev, std::uint32_t) {
    std::fill(counts.begin(), counts.end(), 0);
    for (Label l : prev) ++counts[l];
  };
  prog.update = [&counts, gamma, seed](VertexId v, std::span<const Label> prev, const UndirectedGraph& graph,
                                       std::uint32_t step) {
    return apm_update(graph, prev, counts, gamma, v, tie_key(seed, step));
  };
  auto run = run_supersteps(g, prog, max_iterations, workers);
  return {std::move(run.state), {}, run.stats};
}

std::vector<double> llp_gamma_set(std::uint32_t K) {
  std::vector<double> gammas{0.0};
  for (std::uint32_t i = 0; i <= K; ++i) gammas.push_back(std::ldexp(1.0, -static_cast<int>(i)));
  return gammas;
}

Ordering group_by_label(const Ordering& order, std::span<const Label> labels) {
  auto sequence = order.sequence();
  std::unordered_map<Label, std::uint32_t> first;
  for (std::size_t pos = 0; pos < sequence.size(); ++pos) first.try_emplace(labels[sequence[pos]], static_cast<std::uint32_t>(pos));
  std::vector<std::uint32_t> key(sequence.size());
  for (VertexId v = 0; v < key.size(); ++v) key[v] = first.at(labels[v]);
  std::stable_sort(sequence.begin(), sequence.end(), [&](VertexId a, VertexId b) { return key[a] < key[b]; });
  return Ordering::from_sequence(sequence);
}

LlpResult llp(const UndirectedGraph& g, const LlpConfig& cfg, unsigned workers) {
  if (cfg.iterations_K < 1) throw ParameterError("iterations_K must be at least 1");
  if (cfg.inner_max_iterations < 1) throw ParameterError("inner_max_iterations must be at least 1");
  const auto gammas = llp_gamma_set(cfg.iterations_K);

  LlpResult out;
  out.ordering = Ordering::identity(g.vertex_count());
  for (std::uint32_t it = 0; it < cfg.iterations_K; ++it) {
    const double gamma = gammas[bounded(hash_keys(cfg.seed, {0x6a6d, it}), gammas.size())];
    const auto labeling = apm_propagate(g, gamma, cfg.inner_max_iterations, hash_keys(cfg.seed, {it}), workers);
    out.ordering = group_by_label(out.ordering, labeling.labels);
    out.partitions.push_back(labeling.partition());
    out.gammas.push_back(gamma);
  }
  return out;
}

}  // namespace graphclust
