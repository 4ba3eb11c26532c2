#include "mida/experiment.hpp"

#include "mida/csv.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace mida {

Dataset load_configured_dataset(const ExperimentConfig& config) {
  CsvSchema schema;
  schema.label_column = config.label_column;
  schema.has_header = config.has_header;
  Dataset dataset = load_csv(config.data_path, schema);
  dataset.name = config.dataset_name;
  return dataset;
}

AccuracyTable run_experiment(const ExperimentConfig& config) {
  if (config.methods.empty()) throw std::invalid_argument("no methods configured");
  if (config.dims.empty()) throw std::invalid_argument("no dims configured");
  if (config.folds < 2) throw std::invalid_argument("need at least 2 folds");

  Dataset dataset = load_configured_dataset(config);
  for (const auto& warning : registry_check(dataset))
    std::cerr << "warning: " << warning << "\n";

  CvConfig cv;
  cv.folds = config.folds;
  cv.seed = config.seed;
  cv.spec.bin_count = config.bins;
  cv.ct_max = config.ct_max;
  cv.norm = config.norm;

  AccuracyTable merged;
  for (Method method : config.methods) {
    AccuracyTable part = run_cv(dataset, method, config.dims, cv);
    merged.records.insert(merged.records.end(), part.records.begin(),
                          part.records.end());
  }
  merged.sort_canonical();

  if (!config.out_path.empty()) {
    std::ofstream out(config.out_path);
    if (!out)
      throw std::runtime_error("cannot open report file: " + config.out_path);
    out << (config.format == ReportFormat::csv
                ? format_report_csv(merged, config)
                : format_report_json(merged, config, dataset));
  }
  return merged;
}

namespace {

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

} // namespace

std::string format_report_csv(const AccuracyTable& table,
                              const ExperimentConfig& config) {
  std::ostringstream out;
  out << "dataset,method,dim,fold,accuracy,seed,bins,ct_max,skipped\n";
  const auto emit = [&](const std::string& dataset, const std::string& method,
                        int dim, int fold, double accuracy, bool skipped) {
    out << dataset << ',' << method << ',' << dim << ',' << fold << ','
        << (skipped ? "" : fmt_double(accuracy)) << ',' << config.seed << ','
        << config.bins << ',' << config.ct_max << ',' << (skipped ? 1 : 0)
        << '\n';
  };
  for (const auto& r : table.records)
    emit(r.dataset, r.method, r.dim, r.fold, r.accuracy, r.skipped);
  // aggregate rows carry fold = -1
  for (Method m : {Method::raw, Method::pca, Method::lda, Method::mida}) {
    const std::string name = method_name(m);
    std::vector<int> dims;
    for (const auto& r : table.records)
      if (r.method == name) dims.push_back(r.dim);
    std::sort(dims.begin(), dims.end());
    dims.erase(std::unique(dims.begin(), dims.end()), dims.end());
    for (int dim : dims) {
      const double mean = table.aggregate(name, dim);
      const bool skipped = std::isnan(mean);
      emit(table.records.front().dataset, name, dim, -1, mean, skipped);
    }
  }
  return out.str();
}

std::string format_report_json(const AccuracyTable& table,
                               const ExperimentConfig& config,
                               const Dataset& dataset) {
  nlohmann::ordered_json doc;
  doc["version"] = kVersion;
  doc["config"] = {
      {"data", config.data_path},
      {"name", config.dataset_name},
      {"label_column", config.label_column},
      {"has_header", config.has_header},
      {"dims", config.dims},
      {"folds", config.folds},
      {"seed", config.seed},
      {"bins", config.bins},
      {"ct_max", config.ct_max},
      {"norm", config.norm == NormVariant::per_feature ? "per-feature" : "global"},
  };
  std::vector<std::string> method_names;
  for (Method m : config.methods) method_names.push_back(method_name(m));
  doc["config"]["methods"] = method_names;
  doc["label_mapping"] = dataset.label_names;

  auto& records = doc["records"] = nlohmann::ordered_json::array();
  for (const auto& r : table.records) {
    nlohmann::ordered_json rec = {
        {"dataset", r.dataset}, {"method", r.method},   {"dim", r.dim},
        {"fold", r.fold},       {"seed", config.seed},  {"bins", config.bins},
        {"ct_max", config.ct_max}, {"skipped", r.skipped},
    };
    if (r.skipped)
      rec["accuracy"] = nullptr;
    else
      rec["accuracy"] = r.accuracy;
    records.push_back(rec);
  }
  auto& aggregates = doc["aggregates"] = nlohmann::ordered_json::array();
  for (const std::string& name : method_names) {
    for (int dim : config.dims) {
      const double mean = table.aggregate(name, dim);
      nlohmann::ordered_json agg = {{"method", name}, {"dim", dim}};
      if (std::isnan(mean))
        agg["accuracy"] = nullptr;
      else
        agg["accuracy"] = mean;
      aggregates.push_back(agg);
    }
  }
  return doc.dump(2) + "\n";
}

std::string format_grid(const AccuracyTable& table,
                        const std::vector<Method>& methods,
                        const std::vector<int>& dims) {
  std::ostringstream out;
  out << "Dim.";
  for (Method m : methods) {
    std::string name = method_name(m);
    for (auto& ch : name) ch = char(std::toupper(ch));
    out << '\t' << name;
  }
  out << '\n';
  for (int dim : dims) {
    out << dim;
    for (Method m : methods) {
      const double mean = table.aggregate(method_name(m), dim);
      if (std::isnan(mean)) {
        out << "\t-";
      } else {
        char buf[16];
        std::snprintf(buf, sizeof buf, "%.1f", 100.0 * mean);
        out << '\t' << buf;
      }
    }
    out << '\n';
  }
  return out.str();
}

} // namespace mida
