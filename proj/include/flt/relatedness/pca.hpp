#pragma once

#include <cstddef>

#include "flt/relatedness/kmeans.hpp"

namespace flt::relatedness {

struct PcaResult {
  Points projected;                      // n x dims
  Eigen::MatrixXd components;            // input_dim x dims, orthonormal columns
  Eigen::VectorXd explained_variance;    // per component (population variance)
  Eigen::VectorXd explained_variance_ratio;
};

// Centers and projects onto the top `dims` covariance eigenvectors. Each
// component's largest-magnitude entry is positive. Zero-variance directions
// project to zero.
PcaResult pca(const Points& points, std::size_t dims);

inline Points pca_project(const Points& points, std::size_t dims) { return pca(points, dims).projected; }

}  // namespace flt::relatedness
