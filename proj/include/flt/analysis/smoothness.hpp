#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "flt/data/dataset.hpp"
#include "flt/nn/model.hpp"
#include "flt/nn/train.hpp"

namespace flt::analysis {

using GradientFn = std::function<std::vector<double>(const std::vector<double>&)>;

struct SmoothnessEstimate {
  double value = 0.0;          // running max; a lower estimate of L_W
  std::vector<double> trials;  // ratio found by each trial
};

// Each trial draws a base point around `center` and a direction, refines the
// direction by power iteration on gradient differences, and records
// ||grad(w1) - grad(w2)|| / ||w1 - w2||. Trial i depends only on (seed, i),
// so the estimate is non-decreasing in `trials`.
SmoothnessEstimate estimate_smoothness(const GradientFn& grad, const std::vector<double>& center,
                                       std::size_t trials, std::uint64_t seed, double spread = 1.0,
                                       std::size_t power_steps = 20);

// Full-data loss of `model_template` (eval mode) around Glorot draws.
SmoothnessEstimate estimate_smoothness(const nn::Model& model_template, const data::Dataset& data,
                                       std::size_t trials, std::uint64_t seed,
                                       nn::Loss loss = nn::Loss::cross_entropy);

}  // namespace flt::analysis
