#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace flt::cli {

// One method's curve from one metrics CSV.
struct Series {
  std::string source;
  std::string method;
  std::vector<double> rounds;
  std::vector<double> mean_test_acc;
  std::vector<double> test_acc_stderr;
  std::vector<double> test_acc_variance;
};

// Throws FormatError when required columns are missing or a row is malformed.
std::vector<Series> parse_metrics_csv(const std::string& text, const std::string& source = {});

// Final-round accuracy, stderr and variance per (file, method). Every file
// must share one header; otherwise FormatError.
nlohmann::json compare_report(const std::vector<std::filesystem::path>& csv_paths);

// Fixed-width table of a compare_report result.
std::string format_report(const nlohmann::json& report);

// Mean test accuracy per round, one polyline per series.
std::string curves_svg(const std::vector<Series>& series);

}  // namespace flt::cli
