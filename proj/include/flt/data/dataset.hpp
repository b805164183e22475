#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace flt::data {

// Labeled samples sharing one feature shape, stored row-major.
struct Dataset {
  std::vector<std::size_t> sample_shape;
  std::size_t num_classes = 0;
  std::vector<double> features;
  std::vector<int> labels;

  std::size_t size() const noexcept { return labels.size(); }
  bool empty() const noexcept { return labels.empty(); }
  std::size_t feature_size() const noexcept;
  std::span<const double> sample(std::size_t i) const;

  // Samples at `indices`, in that order.
  Dataset subset(std::span<const std::size_t> indices) const;
  void append(const Dataset& other);

  // Throws DataError if labels fall outside [0, num_classes) or sizes disagree.
  void validate() const;

  friend bool operator==(const Dataset&, const Dataset&) = default;
};

// One client's share of a partition. `p` is its fraction of all training samples.
struct ClientDataset {
  int client_id = 0;
  Dataset train;
  Dataset test;
  double p = 0.0;
  std::vector<std::size_t> train_indices;  // indices into the source dataset
  std::vector<std::size_t> test_indices;
};

struct GroundTruthClusters {
  std::vector<int> assignment;  // per client
  std::size_t num_clusters = 0;
};

// Per-label sample counts of a dataset (length num_classes).
std::vector<std::size_t> label_counts(const Dataset& data);

}  // namespace flt::data
