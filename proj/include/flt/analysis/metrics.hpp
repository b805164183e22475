#pragma once

#include <vector>

#include <Eigen/Dense>

namespace flt::analysis {

struct AccuracyStats {
  double mean = 0.0;
  double stderr_ = 0.0;   // population std / sqrt(M)
  double variance = 0.0;  // population variance
};

AccuracyStats accuracy_stats(const std::vector<double>& per_client);

// ||W_t - W_prev||_F^2.
double optimality_gap(const Eigen::MatrixXd& W_t, const Eigen::MatrixXd& W_prev);

double adjusted_rand_index(const std::vector<int>& assignment, const std::vector<int>& truth);

}  // namespace flt::analysis
