#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace flt::relatedness {

// One agglomeration step. Leaves are 0..M-1; the cluster formed by merge t has id M + t.
struct Merge {
  std::size_t left = 0;
  std::size_t right = 0;
  double height = 0.0;
  std::size_t size = 0;
};

using Dendrogram = std::vector<Merge>;

struct WardResult {
  Dendrogram dendrogram;
  std::vector<int> assignment;   // cluster ids in [0, num_clusters), numbered by first appearance in `order`
  std::size_t num_clusters = 0;
  std::vector<std::size_t> order;  // dendrogram leaf order; clusters are contiguous
};

// Ward linkage on a symmetric dissimilarity matrix via the Lance-Williams
// update d(k, i+j)^2 = ((n_i+n_k) d_ki^2 + (n_j+n_k) d_kj^2 - n_k d_ij^2) / (n_i+n_j+n_k).
// Ties merge the lexicographically smallest pair.
Dendrogram ward_linkage(const Eigen::MatrixXd& distances);

// Cluster ids after undoing the last C-1 merges.
std::vector<int> cut_dendrogram(const Dendrogram& dendrogram, std::size_t M, std::size_t C);

// Cluster count at the largest relative jump between consecutive merge heights;
// ties go to fewer clusters.
std::size_t auto_cluster_count(const Dendrogram& dendrogram, std::size_t M);

std::vector<std::size_t> leaf_order(const Dendrogram& dendrogram, std::size_t M);

// Cuts to C clusters when given, otherwise to auto_cluster_count.
WardResult ward_hc(const Eigen::MatrixXd& distances, std::optional<std::size_t> C = std::nullopt);

}  // namespace flt::relatedness
