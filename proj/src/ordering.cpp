#include "graphclust/ordering.hpp"

#include <limits>

#include "graphclust/error.hpp"

namespace graphclust {

Ordering::Ordering(std::vector<std::uint32_t> rank) : rank_(std::move(rank)) {
  std::vector<char> seen(rank_.size(), 0);
  for (auto r : rank_) {
    if (r >= rank_.size() || seen[r]) throw ContractError("ordering is not a permutation");
    seen[r] = 1;
  }
}

Ordering Ordering::identity(std::size_t n) {
  std::vector<std::uint32_t> rank(n);
  for (std::size_t v = 0; v < n; ++v) rank[v] = static_cast<std::uint32_t>(v);
  return Ordering(std::move(rank));
}

Ordering Ordering::from_sequence(const std::vector<VertexId>& sequence) {
  std::vector<std::uint32_t> rank(sequence.size(), std::numeric_limits<std::uint32_t>::max());
  for (std::size_t pos = 0; pos < sequence.size(); ++pos) {
    if (sequence[pos] >= rank.size()) throw ContractError("ordering sequence names an unknown vertex");
    rank[sequence[pos]] = static_cast<std::uint32_t>(pos);
  }
  return Ordering(std::move(rank));
}

std::vector<VertexId> Ordering::sequence() const {
  std::vector<VertexId> seq(rank_.size());
  for (std::size_t v = 0; v < rank_.size(); ++v) seq[rank_[v]] = static_cast<VertexId>(v);
  return seq;
}

Partition ordering_refinement(const Partition& p, const Ordering& order) {
  if (p.vertex_count() != order.size()) throw ContractError("ordering and partition sizes differ");
  const auto seq = order.sequence();
  std::vector<std::uint64_t> labels(seq.size());
  std::uint64_t run = 0;
  for (std::size_t pos = 0; pos < seq.size(); ++pos) {
    if (pos > 0 && p[seq[pos]] != p[seq[pos - 1]]) ++run;
    labels[seq[pos]] = run;
  }
  return compact_labels(labels);
}

}  // namespace graphclust
