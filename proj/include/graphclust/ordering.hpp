#pragma once

#include <vector>

#include "graphclust/partition.hpp"

namespace graphclust {

/// Vertex ordering as a permutation: rank[v] is the position of vertex v.
class Ordering {
 public:
  Ordering() = default;
  /// Throws ContractError unless rank is a bijection onto 0..n-1.
  explicit Ordering(std::vector<std::uint32_t> rank);

  static Ordering identity(std::size_t n);
  /// Builds from the list of vertices in rank order.
  static Ordering from_sequence(const std::vector<VertexId>& sequence);

  std::size_t size() const noexcept { return rank_.size(); }
  std::uint32_t rank(VertexId v) const { return rank_[v]; }
  const std::vector<std::uint32_t>& ranks() const noexcept { return rank_; }
  /// Vertices listed by increasing rank.
  std::vector<VertexId> sequence() const;

  friend bool operator==(const Ordering&, const Ordering&) = default;

 private:
  std::vector<std::uint32_t> rank_;
};

/// Splits every block of p into maximal runs of consecutive ranks under the ordering.
/// The result always refines p.
Partition ordering_refinement(const Partition& p, const Ordering& order);

}  // namespace graphclust
