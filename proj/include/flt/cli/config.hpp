#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace flt::cli {

struct DatasetBlock {
  std::string kind = "synthetic";  // synthetic | idx
  // idx
  std::string images;
  std::string labels;
  std::size_t limit = 0;  // keep the first `limit` samples; 0 keeps all
  // synthetic
  std::size_t classes = 10;
  std::size_t dims = 8;
  std::vector<std::vector<double>> means;  // empty: drawn from the seed
  double mean_scale = 4.0;
  double std = 1.0;
  std::size_t samples_per_class = 100;

  friend bool operator==(const DatasetBlock&, const DatasetBlock&) = default;
};

struct PartitionBlock {
  std::string mode = "pathological";  // pathological | overlap1 | structured
  std::size_t M = 100;
  std::size_t C = 5;
  std::size_t labels_per_cluster = 2;
  double alpha = 20;
  double delta = 1;
  std::size_t samples_per_client = 0;
  double test_fraction = 0.2;

  friend bool operator==(const PartitionBlock&, const PartitionBlock&) = default;
};

struct ModelBlock {
  std::string architecture = "mlp";  // mlp | cnn
  std::size_t hidden = 200;
  double dropout = 0.5;

  friend bool operator==(const ModelBlock&, const ModelBlock&) = default;
};

struct EncoderBlock {
  std::string mode = "identity";         // identity | enc-pretrained | enc-finetune
  std::string architecture = "convae";   // convae | dense
  std::size_t latent_dim = 128;
  std::size_t hidden = 64;               // dense only
  std::size_t pretrain_epochs = 5;
  std::size_t finetune_epochs = 5;
  double lr = 0.01;
  std::size_t batch_size = 10;

  friend bool operator==(const EncoderBlock&, const EncoderBlock&) = default;
};

struct UmapBlock {
  std::size_t n_neighbors = 15;
  std::size_t target_dim = 2;
  double min_dist = 0.1;
  double spread = 1.0;
  std::size_t epochs = 500;
  std::size_t negative_sample_rate = 5;
  double learning_rate = 1.0;
  std::string init = "spectral";  // spectral | random

  friend bool operator==(const UmapBlock&, const UmapBlock&) = default;
};

struct FcrBlock {
  std::size_t k = 5;
  double gamma = 1.0;
  std::optional<std::size_t> C;  // absent: automatic
  bool baseline = false;         // PCA in place of UMAP
  UmapBlock umap;

  friend bool operator==(const FcrBlock&, const FcrBlock&) = default;
};

struct DynamicBlock {
  double lambda = 0.0;
  std::size_t tau = 0;
  friend bool operator==(const DynamicBlock&, const DynamicBlock&) = default;
};

struct DriftBlock {
  std::size_t round = 1;
  std::size_t a = 0;
  std::size_t b = 1;
  friend bool operator==(const DriftBlock&, const DriftBlock&) = default;
};

struct FederationBlock {
  std::vector<std::string> methods{"flt_clustered"};
  std::size_t T = 10;
  double rho = 0.2;
  std::size_t E = 5;
  std::size_t batch_size = 10;
  double lr = 0.01;
  std::string normalization = "row_stochastic";  // row_stochastic | literal
  std::optional<DynamicBlock> dynamic;
  std::optional<DriftBlock> drift;
  bool eval_train = true;
  std::size_t workers = 1;

  friend bool operator==(const FederationBlock&, const FederationBlock&) = default;
};

struct OutputBlock {
  std::string dir = "flt-output";
  bool checkpoints = true;
  bool plots = false;
  friend bool operator==(const OutputBlock&, const OutputBlock&) = default;
};

struct ScenarioConfig {
  std::uint64_t seed = 0;
  DatasetBlock dataset;
  PartitionBlock partition;
  ModelBlock model;
  EncoderBlock encoder;
  FcrBlock fcr;
  FederationBlock federation;
  OutputBlock output;

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

// Parses and validates; throws ConfigError listing every problem found.
// Relative file paths resolve against `base_dir` when it is non-empty.
ScenarioConfig parse_config(const nlohmann::json& j, const std::filesystem::path& base_dir = {});
ScenarioConfig load_config(const std::filesystem::path& path);
nlohmann::json config_to_json(const ScenarioConfig& c);

// Every validation problem, one message per entry; empty when valid.
std::vector<std::string> validate_config(const ScenarioConfig& c);

}  // namespace flt::cli
