#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "flt/data/dataset.hpp"
#include "flt/nn/architectures.hpp"
#include "flt/nn/encoder.hpp"
#include "flt/nn/model.hpp"
#include "flt/random.hpp"
#include "flt/relatedness/fcr.hpp"
#include "flt/relatedness/graph.hpp"

namespace flt::federation {

// d x M; column m holds client m's flattened parameters.
using ParamMatrix = Eigen::MatrixXd;

enum class Method { fedavg, flt_full, flt_clustered, local };

Method parse_method(const std::string& name);
std::string method_name(Method m);

// Literal keeps the unnormalized neighbourhood and cluster weights for comparison.
enum class Normalization { row_stochastic, literal };

struct DynamicConfig {
  double lambda = 0.0;  // flag-count threshold
  std::size_t tau = 0;  // period; 0 disables the periodic trigger
};

// Exchange the datasets of clients `a` and `b` before round `round` trains.
struct DriftEvent {
  std::size_t round = 0;
  std::size_t a = 0;
  std::size_t b = 0;
};

struct FederationConfig {
  Method method = Method::flt_full;
  std::size_t T = 10;
  double rho = 0.2;
  std::size_t E = 5;
  std::size_t batch_size = 10;
  double lr = 0.01;
  Normalization normalization = Normalization::row_stochastic;
  std::optional<DynamicConfig> dynamic;
  std::optional<DriftEvent> drift;
  bool eval_train = true;
  std::size_t workers = 1;
};

void validate(const FederationConfig& config);

// Uniform sample without replacement of round(rho M) clients (at least one), sorted.
std::vector<std::size_t> select_clients(std::size_t M, double rho, Rng& rng);
std::vector<std::size_t> select_clients(std::size_t M, double rho, std::uint64_t seed, std::size_t round);

// Column i becomes sum_j A_bar(i, j) W_bar(:, j).
ParamMatrix aggregate_full(const ParamMatrix& W_bar, const Eigen::MatrixXd& A_bar);

// Column i becomes the p-weighted mean of its selected neighbours in A_tilde;
// columns without a selected neighbour are unchanged. Empty `selected` means all.
ParamMatrix aggregate_full(const ParamMatrix& W_bar, const Eigen::MatrixXd& A_tilde, const std::vector<double>& p,
                           const std::vector<std::size_t>& selected);

// Every member of cluster c receives the p-weighted mean of its selected members;
// clusters without a selected member are unchanged. Empty `selected` means all.
ParamMatrix aggregate_clustered(const ParamMatrix& W_bar, const std::vector<int>& clusters,
                                const std::vector<double>& p, const std::vector<std::size_t>& selected = {});

// Global p-weighted mean over `selected`, written to every column.
ParamMatrix aggregate_fedavg(const ParamMatrix& W_bar, const std::vector<double>& p,
                             const std::vector<std::size_t>& selected);

// Algorithm-line forms: column i = (p_i / nnz(A_tilde row i)) sum_j A_tilde(j, i) W_bar(:, j),
// and per cluster (1/|C_c|) sum_m p_m W_bar(:, m).
ParamMatrix aggregate_full_literal(const ParamMatrix& W_bar, const Eigen::MatrixXd& A_tilde,
                                   const std::vector<double>& p);
ParamMatrix aggregate_clustered_literal(const ParamMatrix& W_bar, const std::vector<int>& clusters,
                                        const std::vector<double>& p);

// Sum(delta) > lambda, or t mod tau == 0 when tau > 0.
bool dynamic_recluster_check(const std::vector<int>& delta, double lambda, std::size_t tau, std::size_t t);

struct RoundMetrics {
  std::size_t round = 0;
  Method method = Method::fedavg;
  double mean_train_acc = 0.0;
  double mean_test_acc = 0.0;
  double test_acc_stderr = 0.0;
  double test_acc_variance = 0.0;
  double optimality_gap = 0.0;
  double comm_units = 0.0;  // cumulative parameter counts
  std::optional<double> ari;
  bool reclustered = false;
  std::vector<double> test_acc;  // per client
};

inline double comm_bytes(const RoundMetrics& r) { return r.comm_units * 8.0; }

std::string metrics_csv_header();
std::string metrics_csv_row(const RoundMetrics& r);

// Inputs needed to re-run relatedness estimation when the dynamic trigger fires.
struct ReclusterContext {
  nn::EncoderHandle encoder;
  relatedness::FcrOptions fcr;
  std::optional<nn::Autoencoder> autoencoder;  // enables fine-tune mode
  std::size_t encoder_params = 0;              // W_enc, charged per client per clustering
};

struct FederationInputs {
  std::vector<data::ClientDataset> clients;
  std::optional<relatedness::RelatednessGraph> graph;  // required for flt_*
  nn::Model model_template;
  std::uint64_t seed = 0;
  std::optional<ReclusterContext> recluster;
  std::optional<std::vector<int>> truth;  // ground-truth clusters, for ARI
  // One-off communication already spent (encoder broadcast and signatures).
  double initial_comm_units = 0.0;
  // Called with the server matrix after each round's aggregation.
  std::function<void(std::size_t round, const ParamMatrix& W)> on_params;
};

struct FederationResult {
  std::vector<RoundMetrics> history;
  ParamMatrix W;  // server columns after round T
  std::optional<relatedness::RelatednessGraph> graph;
  std::vector<std::size_t> recluster_rounds;
};

using RoundCallback = std::function<void(const RoundMetrics&)>;

// Rounds 1..T: select, train each selected client from its server column,
// aggregate, evaluate every client's column. Results do not depend on
// `config.workers`.
FederationResult run_federation(const FederationConfig& config, FederationInputs inputs,
                                const RoundCallback& on_round = {});

// Parameter matrix with every column set to the template's parameters.
ParamMatrix broadcast(const nn::Model& model, std::size_t M);

}  // namespace flt::federation
