#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace flt::relatedness {

// Row-major point sets: one point per row.
using Points = Eigen::MatrixXd;

struct KMeansOptions {
  std::size_t max_iters = 300;
  std::size_t restarts = 10;  // best inertia wins
  std::uint64_t seed = 0;
};

struct KMeansResult {
  Points centroids;                     // k x dim
  std::vector<int> assignment;          // per point
  double inertia = 0.0;                 // sum of squared distances to assigned centroid
  std::vector<double> inertia_history;  // after each assignment step of the winning restart
  std::size_t iterations = 0;
};

// Lloyd's algorithm with k-means++ seeding. An emptied cluster is reseeded at
// the point farthest from its centroid.
KMeansResult kmeans(const Points& points, std::size_t k, const KMeansOptions& options = {});

double inertia(const Points& points, const Points& centroids, const std::vector<int>& assignment);

}  // namespace flt::relatedness
