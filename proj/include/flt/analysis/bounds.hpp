#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

namespace flt::analysis {

// Q(x) = P(N(0,1) > x).
double q_function(double x);
// Inverse of Q on (0, 1), accurate to 1e-10.
double q_inverse(double p);

// Clustering-error bound: sum over clients m, labels l and latent dims of
// exp(-(n_m^l * Qinv(p_err))^2 / 2). counts[m][l] = n_m^l.
double theorem1_bound(const std::vector<std::vector<double>>& counts, double p_err, std::size_t latent_dim);

// Spectral norm of I - A_bar.
double mixing_norm(const Eigen::MatrixXd& A_bar);

// Upper end of the step-size window: 2 / (L + L sqrt(1 + 4 ||I - A_bar||^2)).
double stepsize_window(double L_W, const Eigen::MatrixXd& A_bar);

struct BoundInputs {
  double eta = 0.0;
  double L_W = 0.0;
  double mixing_norm = 0.0;  // ||I - A_bar||
  std::size_t T = 1;
  std::size_t M = 1;
  double F_first = 0.0;  // F(W^1)
  double F_last = 0.0;   // F(W^T)
  // Extra inputs of the E-epoch bound.
  std::size_t E = 1;
  double first_dist = 0.0;    // ||W^{1,0} - W^{1,*}||^2
  double round_dist = 0.0;    // ||W^{t,0} - W^{t,*}||^2
  double optimum_drop = 0.0;  // F(W^{1,*}) - F(W^{T,*})
  // Gradient-dissimilarity constants; carried for reporting, unused by the bounds.
  double phi = 0.0;
  double psi = 0.0;
};

struct BoundValue {
  double denominator = 0.0;  // 1/(2 eta) - L/2 - (eta/2) L^2 ||I - A_bar||^2
  double value = 0.0;        // +inf when vacuous
  bool vacuous = false;      // denominator <= 0
};

// (F(W^1) - F(W^T)) / (T M denominator).
BoundValue theorem2_rhs(const BoundInputs& in);

// (first_dist + round_dist + 2 eta E optimum_drop) / (2 eta E T M denominator).
BoundValue elaborate_bound(const BoundInputs& in);

nlohmann::json bound_report(const BoundInputs& in);

}  // namespace flt::analysis
