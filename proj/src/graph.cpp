#include "graphclust/graph.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>
#include <string>

#include "graphclust/error.hpp"

namespace graphclust {

namespace {

bool close(double a, double b, double rel_tol) {
  return std::abs(a - b) <= rel_tol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

UndirectedGraph UndirectedGraph::from_edge_list(std::span<const WeightedEdge> edges) {
  struct Entry {
    VertexId lo;
    VertexId hi;
    bool reversed;
    double weight;
  };
  std::vector<Entry> entries;
  entries.reserve(edges.size());
  std::size_t n = 0;
  for (const auto& e : edges) {
    if (!std::isfinite(e.weight) || e.weight <= 0.0) {
      throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") has invalid weight " + std::to_string(e.weight));
    }
    n = std::max<std::size_t>(n, std::max(e.u, e.v) + std::size_t{1});
    entries.push_back({std::min(e.u, e.v), std::max(e.u, e.v), e.u > e.v, e.weight});
  }
  // Sorting on the full key (weights included) makes the summation order, and therefore the
  // result, independent of the input order.
  std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
    return std::tie(x.lo, x.hi, x.reversed, x.weight) < std::tie(y.lo, y.hi, y.reversed, y.weight);
  });

  std::vector<std::size_t> counts(n, 0);
  std::vector<std::tuple<VertexId, VertexId, double>> merged;
  std::vector<double> self_loops(n, 0.0);
  for (std::size_t i = 0; i < entries.size();) {
    const VertexId lo = entries[i].lo;
    const VertexId hi = entries[i].hi;
    double forward = 0.0;
    double reverse = 0.0;
    for (; i < entries.size() && entries[i].lo == lo && entries[i].hi == hi; ++i) {
      (entries[i].reversed ? reverse : forward) += entries[i].weight;
    }
    if (lo == hi) {
      self_loops[lo] = forward + reverse;
      continue;
    }
    const double weight = (forward > 0.0 && reverse > 0.0) ? std::max(forward, reverse) : forward + reverse;
    merged.emplace_back(lo, hi, weight);
    ++counts[lo];
    ++counts[hi];
  }

  std::vector<std::vector<Neighbor>> adjacency(n);
  for (std::size_t v = 0; v < n; ++v) adjacency[v].reserve(counts[v]);
  // merged is sorted by (lo, hi), so appending keeps every list sorted by neighbour id.
  for (const auto& [lo, hi, w] : merged) {
    adjacency[lo].push_back({hi, w});
    adjacency[hi].push_back({lo, w});
  }
  return from_adjacency(std::move(adjacency), std::move(self_loops));
}

UndirectedGraph UndirectedGraph::from_adjacency(std::vector<std::vector<Neighbor>> adjacency,
                                                std::vector<double> self_loops) {
  if (adjacency.size() != self_loops.size()) throw ContractError("adjacency and self-loop sizes differ");
  UndirectedGraph g;
  g.self_loops_ = std::move(self_loops);
  g.offsets_.assign(adjacency.size() + 1, 0);
  for (std::size_t v = 0; v < adjacency.size(); ++v) g.offsets_[v + 1] = g.offsets_[v] + adjacency[v].size();
  g.neighbors_.reserve(g.offsets_.back());
  for (auto& list : adjacency) g.neighbors_.insert(g.neighbors_.end(), list.begin(), list.end());
  g.finalize();
  return g;
}

UndirectedGraph UndirectedGraph::edgeless(std::size_t n) {
  return from_adjacency(std::vector<std::vector<Neighbor>>(n), std::vector<double>(n, 0.0));
}

void UndirectedGraph::finalize() {
  const std::size_t n = self_loops_.size();
  degrees_.assign(n, 0.0);
  double sum = 0.0;
  std::size_t off_diagonal = 0;
  std::size_t loops = 0;
  for (std::size_t v = 0; v < n; ++v) {
    double k = self_loops_[v];
    for (const auto& nb : neighbors(static_cast<VertexId>(v))) k += nb.weight;
    degrees_[v] = k;
    sum += k;
    off_diagonal += neighbor_count(static_cast<VertexId>(v));
    if (self_loops_[v] > 0.0) ++loops;
  }
  total_weight_ = 0.5 * sum;
  edge_count_ = off_diagonal / 2 + loops;
}

double UndirectedGraph::degree_weight(VertexId v) const {
  if (v >= vertex_count()) {
    throw IndexError("vertex " + std::to_string(v) + " out of range (n=" + std::to_string(vertex_count()) + ")");
  }
  return degrees_[v];
}

bool UndirectedGraph::check_invariants(double rel_tol) const {
  const std::size_t n = vertex_count();
  double sum = 0.0;
  for (std::size_t v = 0; v < n; ++v) {
    const auto vid = static_cast<VertexId>(v);
    if (!(self_loops_[v] >= 0.0)) return false;
    double k = self_loops_[v];
    const auto list = neighbors(vid);
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto& nb = list[i];
      if (nb.id >= n || nb.id == vid || !(nb.weight >= 0.0)) return false;
      if (i > 0 && list[i - 1].id >= nb.id) return false;
      const auto back = neighbors(nb.id);
      auto it = std::lower_bound(back.begin(), back.end(), vid,
                                 [](const Neighbor& a, VertexId id) { return a.id < id; });
      if (it == back.end() || it->id != vid || it->weight != nb.weight) return false;
      k += nb.weight;
    }
    if (!close(k, degrees_[v], rel_tol)) return false;
    sum += k;
  }
  return close(0.5 * sum, total_weight_, rel_tol);
}

UndirectedGraph coarsen(const UndirectedGraph& g, const Partition& p) {
  if (p.vertex_count() != g.vertex_count()) {
    throw ContractError("partition covers " + std::to_string(p.vertex_count()) + " vertices, graph has " +
                        std::to_string(g.vertex_count()));
  }
  const std::size_t r = p.community_count();
  std::vector<double> self_loops(r, 0.0);
  std::vector<std::vector<Neighbor>> adjacency(r);

  // Dense accumulator per community, reset through the touched list.
  std::vector<double> acc(r, 0.0);
  std::vector<char> seen(r, 0);
  std::vector<CommunityId> touched;
  const auto blocks = p.blocks();
  for (CommunityId c = 0; c < r; ++c) {
    touched.clear();
    for (VertexId v : blocks[c]) {
      self_loops[c] += g.self_loop(v);
      for (const auto& nb : g.neighbors(v)) {
        const CommunityId d = p[nb.id];
        if (d == c) {
          self_loops[c] += nb.weight;  // each internal pair is seen from both ends
        } else {
          if (!seen[d]) {
            seen[d] = 1;
            touched.push_back(d);
          }
          acc[d] += nb.weight;
        }
      }
    }
    // Only pairs c < d are kept and mirrored, so both directions carry the same bits.
    std::sort(touched.begin(), touched.end());
    for (CommunityId d : touched) {
      if (d > c) {
        adjacency[c].push_back({d, acc[d]});
        adjacency[d].push_back({c, acc[d]});
      }
      acc[d] = 0.0;
      seen[d] = 0;
    }
  }
  return UndirectedGraph::from_adjacency(std::move(adjacency), std::move(self_loops));
}

}  // namespace graphclust
