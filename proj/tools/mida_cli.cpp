// Benchmark CLI: `run` executes the cross-validated comparison and writes
// a report; `inspect` prints the MI profile and the ct search curve for a
// dataset.

#include "mida/csv.hpp"
#include "mida/eval.hpp"
#include "mida/experiment.hpp"
#include "mida/mida.hpp"
#include "mida/scatter.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

namespace {

struct CommonOpts {
  std::string data;
  std::string name = "custom";
  std::string label_col = "-1";
  bool header = false;
  int folds = 10;
  unsigned seed = 0;
  int bins = 16;
  int ct_max = 10;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--data", opts.data, "Path to a delimited dataset file")
      ->required();
  cmd->add_option("--name", opts.name,
                  "Registry name (letter, libras, wall-following, madelon, "
                  "hill-valley-noise, hill-valley-clean) or 'custom'");
  cmd->add_option("--label-col", opts.label_col,
                  "Label column: header name or index (-1 = last)");
  cmd->add_flag("--header", opts.header, "First line is a header");
  cmd->add_option("--seed", opts.seed, "Fold-shuffle seed");
  cmd->add_option("--bins", opts.bins, "Histogram bin count");
  cmd->add_option("--ct-max", opts.ct_max, "Upper end of the ct grid");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"MI discriminant analysis benchmark"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::vector<std::string> methods = {"raw", "pca", "lda", "mida"};
  std::vector<int> dims = {1, 2, 3, 4, 5, 6, 7};
  std::string norm = "per-feature";
  std::string out_path;
  std::string format = "csv";
  int inspect_t = 2;

  auto* run = app.add_subcommand("run", "Run the cross-validated comparison");
  add_common(run, opts);
  run->add_option("--methods", methods, "Subset of raw, pca, lda, mida");
  run->add_option("--dims", dims, "Extracted dimensions to evaluate");
  run->add_option("--folds", opts.folds, "Cross-validation folds");
  run->add_option("--norm", norm, "Normalization variant")
      ->check(CLI::IsMember({"per-feature", "global"}));
  run->add_option("--out", out_path, "Report file path");
  run->add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* inspect =
      app.add_subcommand("inspect", "Print the MI profile and the K curve");
  add_common(inspect, opts);
  inspect->add_option("-t,--dims", inspect_t, "Feature count for the K curve");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      mida::ExperimentConfig config;
      config.data_path = opts.data;
      config.dataset_name = opts.name;
      config.label_column = opts.label_col;
      config.has_header = opts.header;
      for (const auto& m : methods)
        config.methods.push_back(mida::method_from_name(m));
      config.dims = dims;
      config.folds = opts.folds;
      config.seed = opts.seed;
      config.bins = opts.bins;
      config.ct_max = opts.ct_max;
      config.norm = norm == "global" ? mida::NormVariant::global
                                     : mida::NormVariant::per_feature;
      config.out_path = out_path;
      config.format =
          format == "json" ? mida::ReportFormat::json : mida::ReportFormat::csv;

      const mida::AccuracyTable table = mida::run_experiment(config);
      std::cout << mida::format_grid(table, config.methods, config.dims);
      if (!out_path.empty())
        std::cout << "report written to " << out_path << "\n";
    } else {
      mida::ExperimentConfig config;
      config.data_path = opts.data;
      config.dataset_name = opts.name;
      config.label_column = opts.label_col;
      config.has_header = opts.header;
      const mida::Dataset dataset = mida::load_configured_dataset(config);
      for (const auto& warning : mida::registry_check(dataset))
        std::cerr << "warning: " << warning << "\n";

      mida::HistogramSpec spec{opts.bins};
      const mida::MIProfile profile = mida::compute_mi_profile(dataset, spec);
      std::printf("feature relevance I(f;C) [bits]\n");
      for (Eigen::Index i = 0; i < profile.relevance.size(); ++i)
        std::printf("  f%-4ld %.4f\n", long(i), profile.relevance[i]);
      std::printf("pairwise redundancy I(fi;fj) [bits]\n");
      for (Eigen::Index i = 0; i < profile.redundancy.rows(); ++i) {
        std::printf("  ");
        for (Eigen::Index j = 0; j < profile.redundancy.cols(); ++j)
          std::printf("%6.3f ", i == j ? 0.0 : profile.redundancy(i, j));
        std::printf("\n");
      }
      auto [ct_opt, curve] = mida::select_ct(
          profile, dataset, std::min<int>(inspect_t, dataset.feature_count()),
          opts.ct_max, spec);
      std::printf("K curve over ct (t=%d)\n",
                  std::min<int>(inspect_t, dataset.feature_count()));
      for (Eigen::Index ct = 0; ct < curve.size(); ++ct)
        std::printf("  ct=%-3ld K=%.4f%s\n", long(ct), curve[ct],
                    ct == ct_opt ? "  <- ct_opt" : "");
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
