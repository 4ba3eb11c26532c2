#pragma once

#include "mida/eval.hpp"
#include "mida/types.hpp"

#include <string>
#include <vector>

namespace mida {

inline constexpr const char* kVersion = "0.1.0";

enum class ReportFormat { csv, json };

struct ExperimentConfig {
  std::string data_path;
  std::string dataset_name = "custom"; // registry name or "custom"
  std::string label_column = "-1";
  bool has_header = false;
  std::vector<Method> methods;
  std::vector<int> dims;
  int folds = 10;
  unsigned seed = 0;
  int bins = 16;
  int ct_max = 10;
  NormVariant norm = NormVariant::per_feature;
  std::string out_path; // empty: no report file
  ReportFormat format = ReportFormat::csv;
};

/// Runs run_cv for every configured method on one dataset, writes the
/// machine-readable report when out_path is set, and returns the merged
/// table. Registry warnings go to stderr.
AccuracyTable run_experiment(const ExperimentConfig& config);

/// Table-2-style text grid: dims as rows, methods as columns, accuracies
/// as percentages with one decimal, "-" for skipped cells.
std::string format_grid(const AccuracyTable& table,
                        const std::vector<Method>& methods,
                        const std::vector<int>& dims);

/// One record per (method, dim, fold) plus aggregate rows (fold = -1),
/// fixed column set {dataset, method, dim, fold, accuracy, seed, bins,
/// ct_max, skipped}.
std::string format_report_csv(const AccuracyTable& table,
                              const ExperimentConfig& config);

/// Same content as the CSV plus the full config, label mapping and
/// library version.
std::string format_report_json(const AccuracyTable& table,
                               const ExperimentConfig& config,
                               const Dataset& dataset);

Dataset load_configured_dataset(const ExperimentConfig& config);

} // namespace mida
