#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "flt/cli/config.hpp"
#include "flt/data/dataset.hpp"
#include "flt/data/partition.hpp"
#include "flt/federation/federation.hpp"

namespace flt::cli {

// Output layout under the run directory:
//   metrics.csv    one row per (method, round)
//   graph.json     relatedness graph, clusters and ground truth
//   summary.json   final metrics per method
//   checkpoints/   <method>/model_<j>.ckpt plus index.json mapping clients to files
inline constexpr const char* kOutputDirEnv = "FLT_OUTPUT_DIR";

struct RunOptions {
  bool write_outputs = true;
  std::ostream* log = nullptr;
};

struct MethodOutcome {
  federation::Method method = federation::Method::fedavg;
  std::vector<federation::RoundMetrics> history;
};

struct ExperimentResult {
  std::filesystem::path output_dir;
  data::Partition partition;
  std::optional<relatedness::RelatednessGraph> graph;
  std::optional<double> ari;
  std::vector<MethodOutcome> outcomes;
  std::string metrics_csv;
  nlohmann::json summary;
};

// The configured dataset; 2-D images gain a leading channel axis.
data::Dataset load_dataset(const ScenarioConfig& config);

// Stages run in order and failures are rethrown naming the stage.
ExperimentResult run_experiment(const ScenarioConfig& config, const RunOptions& options = {});

// Resolves the output directory: FLT_OUTPUT_DIR wins over the config.
std::filesystem::path output_dir(const ScenarioConfig& config);

}  // namespace flt::cli
