#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "flt/relatedness/kmeans.hpp"
#include "flt/relatedness/ward.hpp"

namespace flt::relatedness {

// The k latent centroids a client transmits.
struct Signature {
  int client_id = 0;
  std::size_t k = 0;  // after clamping to the client's sample count
  Points centroids;   // k x e

  std::size_t payload_values() const noexcept { return static_cast<std::size_t>(centroids.size()); }
};

// Flat layout: client_id, k, e, then the k*e centroid values row by row.
std::vector<double> serialize_signature(const Signature& s);
Signature deserialize_signature(const std::vector<double>& flat);

struct RelatednessGraph {
  Eigen::MatrixXd A;        // min pairwise distances, zero diagonal
  Eigen::MatrixXd A_tilde;  // 1 where A <= gamma, unit diagonal
  Eigen::MatrixXd A_bar;    // row-normalized A_tilde (uniform data weights)
  double gamma = 1.0;
  std::optional<std::vector<int>> clusters;
  std::size_t num_clusters = 0;
  std::optional<std::vector<std::size_t>> order;
  Dendrogram dendrogram;

  std::size_t size() const noexcept { return static_cast<std::size_t>(A.rows()); }
};

// A_ij = min over r, s of ||groups[i].row(r) - groups[j].row(s)||.
Eigen::MatrixXd build_adjacency(const std::vector<Points>& groups);

Eigen::MatrixXd threshold(const Eigen::MatrixXd& A, double gamma);

// Abar_ij = At_ij p_j / sum_j' At_ij' p_j'. Empty p means uniform weights.
Eigen::MatrixXd row_normalize(const Eigen::MatrixXd& A_tilde, const std::vector<double>& p = {});

// M[order][:, order].
Eigen::MatrixXd reorder(const Eigen::MatrixXd& m, const std::vector<std::size_t>& order);

// Assembles A_tilde and A_bar from A and checks the graph invariants.
RelatednessGraph make_graph(Eigen::MatrixXd A, double gamma);

// Complete graph (all ones) or isolated clients (identity), for baselines and reductions.
RelatednessGraph complete_graph(std::size_t M);
RelatednessGraph identity_graph(std::size_t M);

nlohmann::json graph_to_json(const RelatednessGraph& g);
RelatednessGraph graph_from_json(const nlohmann::json& j);
std::string matrix_to_csv(const Eigen::MatrixXd& m);

}  // namespace flt::relatedness
