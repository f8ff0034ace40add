#include "graphclust/classic.hpp"

namespace graphclust {

bool Dendrogram::valid() const {
  if (leaf_count == 0) return merges.empty();
  if (merges.size() != leaf_count - 1) return false;
  std::vector<char> used(leaf_count + merges.size(), 0);
  double previous = 0.0;
  for (std::size_t i = 0; i < merges.size(); ++i) {
    const auto& m = merges[i];
    const std::size_t limit = leaf_count + i;
    if (m.a >= limit || m.b >= limit || m.a == m.b || used[m.a] || used[m.b]) return false;
    if (!(m.distance >= previous)) return false;
    used[m.a] = used[m.b] = 1;
    previous = m.distance;
  }
  return true;
}

Partition cut_dendrogram(const Dendrogram& d, double cut) {
  const std::size_t n = d.leaf_count;
  DisjointSets sets(n);
  std::vector<std::size_t> leaf_of(n + d.merges.size());
  std::iota(leaf_of.begin(), leaf_of.begin() + static_cast<std::ptrdiff_t>(n), std::size_t{0});
  for (std::size_t i = 0; i < d.merges.size(); ++i) {
    const auto& m = d.merges[i];
    if (m.distance <= cut) sets.unite(leaf_of[m.a], leaf_of[m.b]);
    leaf_of[n + i] = leaf_of[m.a];
  }
  std::vector<std::uint64_t> labels(n);
  for (std::size_t v = 0; v < n; ++v) labels[v] = sets.find(v);
  return canonical(compact_labels(labels));
}

}  // namespace graphclust
