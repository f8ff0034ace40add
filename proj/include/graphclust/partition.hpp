#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace graphclust {

using VertexId = std::uint32_t;
using CommunityId = std::uint32_t;

/// Non-overlapping assignment of vertices to communities with dense ids 0..R-1 and no
/// empty community.
class Partition {
 public:
  Partition() = default;

  /// Validates that ids are dense and every community is non-empty; throws ContractError.
  explicit Partition(std::vector<CommunityId> assignment);

  /// Builds a partition from arbitrary labels. Label values are compacted by sorted rank,
  /// so an already-dense labeling is preserved unchanged.
  template <typename Label>
  static Partition from_labels(std::span<const Label> labels);
  static Partition from_labels(const std::vector<std::uint32_t>& labels) {
    return from_labels(std::span<const std::uint32_t>(labels));
  }

  static Partition singletons(std::size_t n);
  static Partition whole(std::size_t n);

  std::size_t vertex_count() const noexcept { return assignment_.size(); }
  std::size_t community_count() const noexcept { return block_sizes_.size(); }
  CommunityId operator[](VertexId v) const { return assignment_[v]; }
  const std::vector<CommunityId>& assignment() const noexcept { return assignment_; }
  const std::vector<std::size_t>& block_sizes() const noexcept { return block_sizes_; }

  /// Members of each community, ascending.
  std::vector<std::vector<VertexId>> blocks() const;

  /// True when every block of *this lies inside a single block of coarser.
  bool refines(const Partition& coarser) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<CommunityId> assignment_;
  std::vector<std::size_t> block_sizes_;
};

/// Equality of the induced vertex groupings, ignoring community numbering.
bool same_clustering(const Partition& a, const Partition& b);

/// Relabels communities in order of first appearance (vertex 0 gets community 0, ...).
Partition canonical(const Partition& p);

Partition compact_labels(std::span<const std::uint64_t> labels);

template <typename Label>
Partition Partition::from_labels(std::span<const Label> labels) {
  std::vector<std::uint64_t> wide(labels.begin(), labels.end());
  return compact_labels(wide);
}

}  // namespace graphclust
