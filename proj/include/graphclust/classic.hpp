#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <tuple>
#include <vector>

#include <Eigen/Dense>

#include "graphclust/error.hpp"
#include "graphclust/partition.hpp"
#include "graphclust/rng.hpp"

namespace graphclust {

/// Points are stored one per column.
template <typename Scalar>
using PointMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

struct KmeansOptions {
  std::uint64_t seed = 42;
  bool refine = true;  ///< follow the single online pass with batch reassign/recompute sweeps
  int max_refine_iters = 100;
};

template <typename Scalar>
struct KmeansResult {
  Partition partition;
  PointMatrix<Scalar> centroids;  ///< column c is the mean of community c
  Scalar wcss = 0;
  /// wcss after the online pass, then after every refinement sweep.
  std::vector<Scalar> wcss_history;
};

/// Within-cluster sum of squared distances to the given centroids.
template <typename Derived, typename CentroidDerived>
typename Derived::Scalar within_cluster_ss(const Eigen::MatrixBase<Derived>& points, const Partition& p,
                                           const Eigen::MatrixBase<CentroidDerived>& centroids) {
  typename Derived::Scalar total = 0;
  for (Eigen::Index i = 0; i < points.cols(); ++i) {
    total += (points.col(i) - centroids.col(p[static_cast<VertexId>(i)])).squaredNorm();
  }
  return total;
}

/// Column-wise means of the points in each community.
template <typename Derived>
PointMatrix<typename Derived::Scalar> cluster_means(const Eigen::MatrixBase<Derived>& points, const Partition& p) {
  using Scalar = typename Derived::Scalar;
  PointMatrix<Scalar> means = PointMatrix<Scalar>::Zero(points.rows(), static_cast<Eigen::Index>(p.community_count()));
  for (Eigen::Index i = 0; i < points.cols(); ++i) means.col(p[static_cast<VertexId>(i)]) += points.col(i);
  for (std::size_t c = 0; c < p.community_count(); ++c) {
    means.col(static_cast<Eigen::Index>(c)) /= static_cast<Scalar>(p.block_sizes()[c]);
  }
  return means;
}

namespace detail {

template <typename Derived, typename CentroidDerived>
Eigen::Index closest_centroid(const Eigen::MatrixBase<Derived>& x, const Eigen::MatrixBase<CentroidDerived>& centroids) {
  Eigen::Index best = 0;
  (centroids.colwise() - x).colwise().squaredNorm().minCoeff(&best);
  return best;
}

}  // namespace detail

/// k-means as an online pass followed by optional batch sweeps.
///
/// The online pass picks k distinct seed points uniformly at random, makes each its own cluster,
/// then visits the remaining points in index order, assigning each to the nearest centroid and
/// updating that centroid immediately. Refinement sweeps reassign every point (a point only
/// leaves its cluster for a strictly closer centroid) and recompute means, until no assignment
/// changes or max_refine_iters sweeps ran. A cluster left empty is reseeded with the point
/// farthest from its centroid among clusters of two or more points.
template <typename Derived>
KmeansResult<typename Derived::Scalar> kmeans(const Eigen::MatrixBase<Derived>& points, Eigen::Index k,
                                              const KmeansOptions& opts = {}) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = points.cols();
  if (k < 1 || k > n) throw ParameterError("k must lie in [1, number of points]");

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::mt19937_64 rng(opts.seed);
  for (Eigen::Index i = 0; i < k; ++i) {
    std::uniform_int_distribution<Eigen::Index> pick(i, n - 1);
    std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(pick(rng))]);
  }

  PointMatrix<Scalar> centroids(points.rows(), k);
  std::vector<CommunityId> assignment(static_cast<std::size_t>(n), 0);
  std::vector<std::size_t> counts(static_cast<std::size_t>(k), 1);
  std::vector<char> chosen(static_cast<std::size_t>(n), 0);
  for (Eigen::Index c = 0; c < k; ++c) {
    const Eigen::Index seed_point = order[static_cast<std::size_t>(c)];
    centroids.col(c) = points.col(seed_point);
    assignment[static_cast<std::size_t>(seed_point)] = static_cast<CommunityId>(c);
    chosen[static_cast<std::size_t>(seed_point)] = 1;
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (chosen[static_cast<std::size_t>(i)]) continue;
    const Eigen::Index c = detail::closest_centroid(points.col(i), centroids);
    assignment[static_cast<std::size_t>(i)] = static_cast<CommunityId>(c);
    const auto count = ++counts[static_cast<std::size_t>(c)];
    centroids.col(c) += (points.col(i) - centroids.col(c)) / static_cast<Scalar>(count);
  }

  KmeansResult<Scalar> result;
  result.partition = Partition(assignment);
  result.wcss_history.push_back(within_cluster_ss(points, result.partition, centroids));

  if (opts.refine) {
    for (int sweep = 0; sweep < opts.max_refine_iters; ++sweep) {
      bool changed = false;
      for (Eigen::Index i = 0; i < n; ++i) {
        auto& current = assignment[static_cast<std::size_t>(i)];
        const auto distances = (centroids.colwise() - points.col(i)).colwise().squaredNorm().eval();
        Eigen::Index best = 0;
        const Scalar best_d = distances.minCoeff(&best);
        if (static_cast<CommunityId>(best) != current && best_d < distances(current)) {
          current = static_cast<CommunityId>(best);
          changed = true;
        }
      }
      if (!changed) break;

      std::fill(counts.begin(), counts.end(), 0);
      for (auto c : assignment) ++counts[c];
      centroids.setZero();
      for (Eigen::Index i = 0; i < n; ++i) centroids.col(assignment[static_cast<std::size_t>(i)]) += points.col(i);
      for (Eigen::Index c = 0; c < k; ++c) {
        if (counts[static_cast<std::size_t>(c)] > 0) centroids.col(c) /= static_cast<Scalar>(counts[static_cast<std::size_t>(c)]);
      }
      for (Eigen::Index c = 0; c < k; ++c) {
        if (counts[static_cast<std::size_t>(c)] != 0) continue;
        Eigen::Index far = -1;
        Scalar far_d = -1;
        for (Eigen::Index i = 0; i < n; ++i) {
          const auto owner = assignment[static_cast<std::size_t>(i)];
          if (counts[owner] < 2) continue;
          const Scalar d = (points.col(i) - centroids.col(owner)).squaredNorm();
          if (d > far_d) {
            far_d = d;
            far = i;
          }
        }
        const auto donor = assignment[static_cast<std::size_t>(far)];
        const auto donor_count = counts[donor];
        centroids.col(donor) = (centroids.col(donor) * static_cast<Scalar>(donor_count) - points.col(far)) /
                               static_cast<Scalar>(donor_count - 1);
        --counts[donor];
        assignment[static_cast<std::size_t>(far)] = static_cast<CommunityId>(c);
        counts[static_cast<std::size_t>(c)] = 1;
        centroids.col(c) = points.col(far);
      }
      result.partition = Partition(assignment);
      result.wcss_history.push_back(within_cluster_ss(points, result.partition, centroids));
    }
  }

  result.centroids = std::move(centroids);
  result.wcss = result.wcss_history.back();
  return result;
}

struct KmeansSearchOptions {
  std::uint64_t seed = 42;
  /// Stop at the first doubling v -> 2v whose wcss drop is below this fraction of the k = 1 wcss.
  double min_relative_gain = 0.1;
  /// Independent seedings per k; the lowest wcss is kept.
  int restarts = 20;
  KmeansOptions kmeans{};
};

template <typename Scalar>
struct KmeansSearchResult {
  Eigen::Index k = 1;
  KmeansResult<Scalar> result;
  std::vector<std::pair<Eigen::Index, Scalar>> wcss_by_k;
};

/// Runs k-means for k = 1, 2, 4, 8, ... (capped at the point count) and returns the first v for
/// which doubling to 2v barely improves cohesion.
template <typename Derived>
KmeansSearchResult<typename Derived::Scalar> kmeans_search(const Eigen::MatrixBase<Derived>& points,
                                                           const KmeansSearchOptions& opts = {}) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = points.cols();
  if (n < 1) throw EmptyInputError("k-means search needs at least one point");
  if (opts.restarts < 1) throw ParameterError("restarts must be at least 1");

  auto best_of = [&](Eigen::Index k) {
    KmeansResult<Scalar> best;
    for (int r = 0; r < opts.restarts; ++r) {
      KmeansOptions run = opts.kmeans;
      run.seed = hash_keys(opts.seed, {static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(r)});
      auto candidate = kmeans(points, k, run);
      if (r == 0 || candidate.wcss < best.wcss) best = std::move(candidate);
    }
    return best;
  };

  KmeansSearchResult<Scalar> out;
  out.k = 1;
  out.result = best_of(1);
  out.wcss_by_k.emplace_back(1, out.result.wcss);
  const Scalar baseline = out.result.wcss;

  while (out.k < n && out.result.wcss > 0) {
    const Eigen::Index next_k = std::min(2 * out.k, n);
    auto next = best_of(next_k);
    out.wcss_by_k.emplace_back(next_k, next.wcss);
    if ((out.result.wcss - next.wcss) / baseline < static_cast<Scalar>(opts.min_relative_gain)) break;
    out.k = next_k;
    out.result = std::move(next);
  }
  return out;
}

/// One agglomeration step: clusters a and b join at the given distance. Leaves are 0..n-1 and
/// the cluster formed by merge i gets id n + i.
struct Merge {
  std::size_t a;
  std::size_t b;
  double distance;
};

struct Dendrogram {
  std::vector<Merge> merges;
  std::size_t leaf_count = 0;

  /// n - 1 merges, non-decreasing distances, every cluster id consumed exactly once.
  bool valid() const;
};

/// Union-find over dense ids with path halving.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  /// Returns false when x and y were already joined.
  bool unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent_[std::max(x, y)] = std::min(x, y);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

/// Minimum spanning tree edges of the complete Euclidean graph, found by Prim's algorithm with
/// a plain distance array (O(n) extra space, O(n^2) time). Each edge is (u, v, distance).
template <typename Derived>
std::vector<std::tuple<std::size_t, std::size_t, double>> euclidean_mst(const Eigen::MatrixBase<Derived>& points) {
  const auto n = static_cast<std::size_t>(points.cols());
  std::vector<std::tuple<std::size_t, std::size_t, double>> edges;
  if (n == 0) return edges;
  edges.reserve(n - 1);
  std::vector<double> best(n, std::numeric_limits<double>::infinity());
  std::vector<std::size_t> via(n, 0);
  std::vector<char> in_tree(n, 0);
  std::size_t current = 0;
  in_tree[0] = 1;
  for (std::size_t added = 1; added < n; ++added) {
    std::size_t next = n;
    double next_d = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      if (in_tree[j]) continue;
      const double d = static_cast<double>(
          (points.col(static_cast<Eigen::Index>(current)) - points.col(static_cast<Eigen::Index>(j))).norm());
      if (d < best[j]) {
        best[j] = d;
        via[j] = current;
      }
      if (next == n || best[j] < next_d) {
        next = j;
        next_d = best[j];
      }
    }
    in_tree[next] = 1;
    edges.emplace_back(via[next], next, next_d);
    current = next;
  }
  return edges;
}

/// Single-link hierarchy: Prim's MST, then Kruskal over the MST edges in ascending distance.
/// Throws EmptyInputError for an empty point set.
template <typename Derived>
Dendrogram single_link_dendrogram(const Eigen::MatrixBase<Derived>& points) {
  const auto n = static_cast<std::size_t>(points.cols());
  if (n == 0) throw EmptyInputError("single-link clustering needs at least one point");
  auto edges = euclidean_mst(points);
  std::stable_sort(edges.begin(), edges.end(),
                   [](const auto& x, const auto& y) { return std::get<2>(x) < std::get<2>(y); });

  Dendrogram d;
  d.leaf_count = n;
  d.merges.reserve(n - 1);
  DisjointSets sets(n);
  std::vector<std::size_t> cluster_of_root(n);
  std::iota(cluster_of_root.begin(), cluster_of_root.end(), std::size_t{0});
  for (const auto& [u, v, dist] : edges) {
    const std::size_t ru = sets.find(u);
    const std::size_t rv = sets.find(v);
    const std::size_t a = std::min(cluster_of_root[ru], cluster_of_root[rv]);
    const std::size_t b = std::max(cluster_of_root[ru], cluster_of_root[rv]);
    sets.unite(ru, rv);
    cluster_of_root[sets.find(u)] = n + d.merges.size();
    d.merges.push_back({a, b, dist});
  }
  return d;
}

/// Applies every merge whose distance is <= cut and returns the flat clustering, communities
/// numbered by first leaf.
Partition cut_dendrogram(const Dendrogram& d, double cut);

}  // namespace graphclust
