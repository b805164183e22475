#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "flt/data/dataset.hpp"

namespace flt::data {

// Isotropic Gaussian mixture; sample label = component index. Samples are
// ordered by component. A zero std yields copies of the mean.
Dataset gen_gaussian_mixture(std::size_t num_clusters, std::size_t dims,
                             const std::vector<std::vector<double>>& means, const std::vector<double>& stds,
                             std::size_t samples_per_cluster, std::uint64_t seed);

}  // namespace flt::data
