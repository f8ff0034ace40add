#include "graphclust/partition.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "graphclust/error.hpp"

namespace graphclust {

Partition::Partition(std::vector<CommunityId> assignment) : assignment_(std::move(assignment)) {
  CommunityId max_id = 0;
  for (CommunityId c : assignment_) max_id = std::max(max_id, c);
  if (!assignment_.empty()) block_sizes_.assign(static_cast<std::size_t>(max_id) + 1, 0);
  for (CommunityId c : assignment_) ++block_sizes_[c];
  for (std::size_t c = 0; c < block_sizes_.size(); ++c) {
    if (block_sizes_[c] == 0) throw ContractError("partition has empty community " + std::to_string(c));
  }
}

Partition compact_labels(std::span<const std::uint64_t> labels) {
  std::vector<std::uint64_t> distinct(labels.begin(), labels.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<CommunityId> assignment(labels.size());
  for (std::size_t v = 0; v < labels.size(); ++v) {
    auto it = std::lower_bound(distinct.begin(), distinct.end(), labels[v]);
    assignment[v] = static_cast<CommunityId>(it - distinct.begin());
  }
  return Partition(std::move(assignment));
}

Partition Partition::singletons(std::size_t n) {
  std::vector<CommunityId> a(n);
  for (std::size_t v = 0; v < n; ++v) a[v] = static_cast<CommunityId>(v);
  return Partition(std::move(a));
}

Partition Partition::whole(std::size_t n) { return Partition(std::vector<CommunityId>(n, 0)); }

std::vector<std::vector<VertexId>> Partition::blocks() const {
  std::vector<std::vector<VertexId>> out(community_count());
  for (std::size_t c = 0; c < out.size(); ++c) out[c].reserve(block_sizes_[c]);
  for (std::size_t v = 0; v < assignment_.size(); ++v) out[assignment_[v]].push_back(static_cast<VertexId>(v));
  return out;
}

bool Partition::refines(const Partition& coarser) const {
  if (coarser.vertex_count() != vertex_count()) return false;
  constexpr auto unset = std::numeric_limits<CommunityId>::max();
  std::vector<CommunityId> parent(community_count(), unset);
  for (std::size_t v = 0; v < assignment_.size(); ++v) {
    CommunityId& p = parent[assignment_[v]];
    if (p == unset) {
      p = coarser[static_cast<VertexId>(v)];
    } else if (p != coarser[static_cast<VertexId>(v)]) {
      return false;
    }
  }
  return true;
}

Partition canonical(const Partition& p) {
  constexpr auto unset = std::numeric_limits<CommunityId>::max();
  std::vector<CommunityId> relabel(p.community_count(), unset);
  std::vector<CommunityId> a(p.vertex_count());
  CommunityId next = 0;
  for (std::size_t v = 0; v < a.size(); ++v) {
    CommunityId& r = relabel[p[static_cast<VertexId>(v)]];
    if (r == unset) r = next++;
    a[v] = r;
  }
  return Partition(std::move(a));
}

bool same_clustering(const Partition& a, const Partition& b) {
  return a.vertex_count() == b.vertex_count() && canonical(a) == canonical(b);
}

}  // namespace graphclust
