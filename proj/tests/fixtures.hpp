#pragma once

// Point-set fixtures shared by the unit tests and the acceptance runner.

#include <random>
#include <vector>

#include <Eigen/Dense>

namespace fixture {

/// Four tight blobs of `per_blob` points around the corners of a 20 x 20 square.
inline Eigen::MatrixXd four_blobs(std::uint64_t seed, Eigen::Index per_blob = 25) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> jitter(0.0, 0.5);
  const double centres[4][2] = {{0, 0}, {20, 0}, {0, 20}, {20, 20}};
  Eigen::MatrixXd pts(2, 4 * per_blob);
  for (Eigen::Index b = 0; b < 4; ++b) {
    for (Eigen::Index i = 0; i < per_blob; ++i) {
      pts(0, b * per_blob + i) = centres[b][0] + jitter(rng);
      pts(1, b * per_blob + i) = centres[b][1] + jitter(rng);
    }
  }
  return pts;
}

/// n uniform points in [0, 10)^dim.
inline Eigen::MatrixXd uniform_points(std::mt19937_64& rng, Eigen::Index n, Eigen::Index dim) {
  std::uniform_real_distribution<double> coord(0.0, 10.0);
  Eigen::MatrixXd pts(dim, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index d = 0; d < dim; ++d) pts(d, i) = coord(rng);
  }
  return pts;
}

inline std::vector<std::vector<double>> to_rows(const Eigen::MatrixXd& pts) {
  std::vector<std::vector<double>> rows(static_cast<std::size_t>(pts.cols()));
  for (Eigen::Index i = 0; i < pts.cols(); ++i) rows[static_cast<std::size_t>(i)].assign(pts.col(i).data(), pts.col(i).data() + pts.rows());
  return rows;
}

}  // namespace fixture
