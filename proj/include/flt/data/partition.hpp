#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "flt/data/dataset.hpp"

namespace flt::data {

enum class PartitionMode { pathological, overlap1, structured };

struct PartitionSpec {
  PartitionMode mode = PartitionMode::pathological;
  std::size_t M = 100;
  std::size_t C = 5;
  std::size_t labels_per_cluster = 2;
  double alpha = 20;  // structured: minimum samples per client
  double delta = 1;   // structured: power exponent
  // Pathological modes: samples per client, 0 = split every eligible sample evenly.
  std::size_t samples_per_client = 0;
  double test_fraction = 0.2;
  std::uint64_t seed = 0;
};

struct Partition {
  std::vector<ClientDataset> clients;  // ordered by client_id
  GroundTruthClusters truth;
  std::vector<std::vector<int>> cluster_labels;
};

// Clients of cluster c draw only from cluster_labels[c]. With overlap = 1,
// consecutive clusters share one label: the last label of cluster c is the
// first of cluster (c + 1) mod C (no wrap-around when C == 2).
Partition partition_pathological(const Dataset& data, std::size_t M, std::size_t C, std::size_t labels_per_cluster,
                                 int overlap, std::uint64_t seed, std::size_t samples_per_client = 0,
                                 double test_fraction = 0.2);

// Root of sum_{m=1..M_c} (alpha + exp(beta * m^delta)) = total.
double solve_beta(double alpha, double delta, std::size_t M_c, double total);

// Integer batch sizes: round-half-up of alpha + exp(beta m^delta), residual on the last client.
std::vector<std::size_t> structured_counts(double alpha, double delta, std::size_t M_c, std::size_t total);

// Power-law quantity skew within disjoint label clusters. cluster_membership[c]
// lists the client ids of cluster c in batch order; together they cover [0, M).
Partition sample_structured_noniid(const Dataset& data, const PartitionSpec& spec,
                                   const std::vector<std::vector<int>>& cluster_labels,
                                   const std::vector<std::vector<int>>& cluster_membership);

// Dispatches on spec.mode. Structured mode assigns labels and members by seeded shuffles.
Partition make_partition(const Dataset& data, const PartitionSpec& spec);

nlohmann::json partition_manifest(const Partition& partition);
Partition partition_from_manifest(const nlohmann::json& manifest, const Dataset& data);

}  // namespace flt::data
