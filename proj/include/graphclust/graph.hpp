#pragma once

#include <cstddef>
#include <span>
#include <tuple>
#include <vector>

#include "graphclust/partition.hpp"

namespace graphclust {

struct Neighbor {
  VertexId id;
  double weight;
  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

struct WeightedEdge {
  VertexId u;
  VertexId v;
  double weight;
};

/// Immutable weighted undirected graph in CSR form.
///
/// The adjacency lists hold off-diagonal entries only, sorted by neighbor id. The diagonal
/// A_ii is stored separately and enters the weighted degree exactly once, so
/// k_i = sum_j A_ij and m = (1/2) sum_ij A_ij hold with the diagonal counted once.
/// Coarsening stores the doubled internal weight of a community on its diagonal, which keeps
/// modularity invariant across levels.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;

  /// Merges duplicates and turns u == v entries into diagonal weight. Weights listed for the
  /// same orientation are summed; a pair listed in both orientations is read as a symmetric
  /// listing and takes the larger of the two orientation sums.
  static UndirectedGraph from_edge_list(std::span<const WeightedEdge> edges);
  static UndirectedGraph from_edge_list(std::initializer_list<WeightedEdge> edges) {
    return from_edge_list(std::span<const WeightedEdge>(edges.begin(), edges.size()));
  }

  /// Builds from already symmetric, sorted, duplicate-free adjacency. Used by coarsening.
  static UndirectedGraph from_adjacency(std::vector<std::vector<Neighbor>> adjacency,
                                        std::vector<double> self_loops);

  static UndirectedGraph edgeless(std::size_t n);

  std::size_t vertex_count() const noexcept { return self_loops_.size(); }

  /// Number of distinct undirected edges, self-loops included.
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const Neighbor> neighbors(VertexId v) const noexcept {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  std::size_t neighbor_count(VertexId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

  double self_loop(VertexId v) const noexcept { return self_loops_[v]; }

  /// k_i. Throws IndexError when out of range.
  double degree_weight(VertexId v) const;
  /// Unchecked k_i.
  double k(VertexId v) const noexcept { return degrees_[v]; }
  std::span<const double> degrees() const noexcept { return degrees_; }

  /// m, half the sum of all entries of A.
  double total_weight() const noexcept { return total_weight_; }

  /// Recomputes the cached degrees and m from the adjacency and checks the symmetry, order
  /// and non-negativity invariants. Intended for tests.
  bool check_invariants(double rel_tol = 1e-12) const;

  friend bool operator==(const UndirectedGraph& a, const UndirectedGraph& b) {
    return a.offsets_ == b.offsets_ && a.neighbors_ == b.neighbors_ && a.self_loops_ == b.self_loops_;
  }

 private:
  void finalize();

  std::vector<std::size_t> offsets_{0};
  std::vector<Neighbor> neighbors_;
  std::vector<double> self_loops_;
  std::vector<double> degrees_;
  double total_weight_ = 0.0;
  std::size_t edge_count_ = 0;
};

inline double degree_weight(const UndirectedGraph& g, VertexId v) { return g.degree_weight(v); }
inline double total_weight(const UndirectedGraph& g) noexcept { return g.total_weight(); }

/// Collapses each community of p into one vertex. Cross-community weights are summed and the
/// diagonal of supernode c becomes sum_{i,j in c} A_ij. Throws ContractError if p does not
/// cover g.
UndirectedGraph coarsen(const UndirectedGraph& g, const Partition& p);

}  // namespace graphclust
