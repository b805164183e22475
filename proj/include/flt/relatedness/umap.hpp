#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "flt/relatedness/kmeans.hpp"

namespace flt::relatedness {

enum class UmapInit { spectral, random };

struct UmapParams {
  std::size_t n_neighbors = 15;
  std::size_t target_dim = 2;
  double min_dist = 0.1;
  double spread = 1.0;
  std::size_t epochs = 500;
  std::size_t negative_sample_rate = 5;
  double learning_rate = 1.0;
  UmapInit init = UmapInit::spectral;
  std::uint64_t seed = 0;
};

struct SmoothKnn {
  double rho = 0.0;
  double sigma = 1.0;
};

// For one point's ascending non-self neighbor distances: rho is the smallest
// positive distance and sigma solves sum_j exp(-max(0, d_j - rho) / sigma) = target.
SmoothKnn smooth_knn(const std::vector<double>& distances, double target);

// (a, b) of the low-dimensional kernel 1 / (1 + a d^{2b}) fitted to the
// min_dist / spread membership curve by least squares.
std::pair<double, double> fit_ab(double spread, double min_dist);

// Symmetric fuzzy graph as an edge list with both (i, j) and (j, i).
struct FuzzyGraph {
  std::size_t n = 0;
  std::vector<std::size_t> head, tail;
  std::vector<double> weight;
};

FuzzyGraph fuzzy_graph(const Points& points, std::size_t n_neighbors);

// Embeds the rows of `points` (same order). Deterministic per seed.
Points umap_embed(const Points& points, const UmapParams& params = {});

}  // namespace flt::relatedness
