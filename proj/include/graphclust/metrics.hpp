#pragma once

#include <vector>

#include "graphclust/graph.hpp"

namespace graphclust {

/// Modularity Q = (1/2m) sum_ij [A_ij - k_i k_j / 2m] delta(c_i, c_j).
/// Throws UndefinedModularityError when m == 0.
double modularity(const UndirectedGraph& g, const Partition& p);

/// Per-community aggregates used by the local moving heuristic.
///
/// sigma_tot[c] is the sum of k_i over members and sigma_in[c] the doubly counted internal
/// weight sum_{i,j in c} A_ij (diagonal once). Community ids range over 0..n-1 and may be
/// empty while vertices move.
class CommunityState {
 public:
  CommunityState(const UndirectedGraph& g, const Partition& p);

  static CommunityState singletons(const UndirectedGraph& g) {
    return CommunityState(g, Partition::singletons(g.vertex_count()));
  }

  CommunityId community_of(VertexId v) const { return community_of_[v]; }
  double sigma_tot(CommunityId c) const { return sigma_tot_[c]; }
  double sigma_in(CommunityId c) const { return sigma_in_[c]; }
  std::size_t size(CommunityId c) const { return size_[c]; }
  std::size_t capacity() const noexcept { return sigma_tot_.size(); }

  /// True when v is the only member of its community.
  bool isolated(VertexId v) const { return size_[community_of_[v]] == 1; }

  /// k_{v,C}: weight between v and the members of C other than v itself.
  double link_weight(VertexId v, CommunityId c) const;

  /// Moves v into target, updating aggregates incrementally. O(deg v).
  void move(VertexId v, CommunityId target);

  /// Same as move() when the caller already knows k_{v,from} and k_{v,to}.
  void move(VertexId v, CommunityId target, double links_from, double links_to);

  /// Current assignment as a compact Partition.
  Partition partition() const;

  /// Q from the aggregates.
  double modularity() const;

  /// Rebuilds aggregates from scratch for comparison with the incremental values.
  CommunityState recomputed() const;

  const UndirectedGraph& graph() const noexcept { return *g_; }

 private:
  const UndirectedGraph* g_;
  std::vector<CommunityId> community_of_;
  std::vector<double> sigma_tot_;
  std::vector<double> sigma_in_;
  std::vector<std::size_t> size_;
};

/// Modularity change for moving the isolated vertex i into community c, evaluated literally
/// from the classic expression
///   [(S_in + k_i,in)/2m - ((S_tot + k_i)/2m)^2] - [S_in/2m - (S_tot/2m)^2 - (k_i/2m)^2].
/// Under the doubly counted S_in convention this falls short of the true change by k_i,in/2m.
/// Throws PreconditionError unless i is isolated, carries no self-loop and c != community(i).
double delta_modularity_eq3(const UndirectedGraph& g, const CommunityState& s, VertexId i, CommunityId c);

/// Exact modularity change k_i,in/m - S_tot k_i / 2m^2 for moving the isolated vertex i
/// into community c. Same preconditions as delta_modularity_eq3.
double delta_modularity_true(const UndirectedGraph& g, const CommunityState& s, VertexId i, CommunityId c);

/// Change in Q from taking i out of its community into isolation. Negation of inserting i into
/// C \ {i}; valid for any vertex, self-loops included.
double removal_gain(const CommunityState& s, VertexId i);

/// Insertion gain k_i,C/m - S_tot(C) k_i / 2m^2 without precondition checks. i must not
/// currently belong to c.
double insertion_gain(double links_to_c, double sigma_tot_c, double k_i, double m) noexcept;

/// H(U) = -sum_i (|U_i|/n) ln(|U_i|/n).
double partition_entropy(const Partition& p, std::size_t n);
inline double partition_entropy(const Partition& p) { return partition_entropy(p, p.vertex_count()); }

/// VI(base, refined) = H(refined) - H(base). Throws RefinementError unless refined refines base.
double variation_of_information(const Partition& base, const Partition& refined);

}  // namespace graphclust
