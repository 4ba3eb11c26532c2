#pragma once

#include "mida/types.hpp"

#include <Eigen/Dense>

#include <string>
#include <tuple>
#include <vector>

namespace mida {

enum class Method { raw, pca, lda, mida };
enum class NormVariant { per_feature, global };

std::string method_name(Method m);
Method method_from_name(const std::string& name);

/// Stratified fold assignment: per-class seeded shuffle, round-robin
/// placement. Deterministic given (labels, seed).
struct FoldPlan {
  Eigen::VectorXi fold_assignment; // M, values in [0, k)
  unsigned seed = 0;
};

/// One CV cell. `skipped` marks dims a method cannot produce (LDA past
/// C - 1), mirroring the "-" convention of benchmark tables.
struct AccuracyRecord {
  std::string dataset;
  std::string method;
  int dim = 0;
  int fold = 0;
  double accuracy = 0.0;
  bool skipped = false;
};

struct AccuracyTable {
  std::vector<AccuracyRecord> records;
  /// Mean over folds for one (method, dim); NaN when the cell is skipped.
  double aggregate(const std::string& method, int dim) const;
  void sort_canonical();
};

/// Divides both matrices column-wise by the training absolute maximum
/// (scale 1 substituted for all-zero training columns). The global variant
/// uses one scalar scale for the whole matrix.
std::tuple<Eigen::MatrixXd, Eigen::MatrixXd, Eigen::VectorXd>
normalize_absmax(const Eigen::MatrixXd& train, const Eigen::MatrixXd& other,
                 NormVariant variant = NormVariant::per_feature);

FoldPlan stratified_folds(const Eigen::VectorXi& labels, int k, unsigned seed);

/// Brute-force k-NN with Euclidean distance; distance ties go to the
/// smallest training index.
Eigen::VectorXi knn_classify(const Eigen::MatrixXd& train,
                             const Eigen::VectorXi& train_labels,
                             const Eigen::MatrixXd& queries, int k = 1);

struct CvConfig {
  int folds = 10;
  unsigned seed = 0;
  HistogramSpec spec;
  int ct_max = 10;
  NormVariant norm = NormVariant::per_feature;
};

/// The full per-fold protocol: normalize on train, fit the extractor on
/// train only, transform both splits, classify with 1-NN, average folds.
AccuracyTable run_cv(const Dataset& dataset, Method method,
                     const std::vector<int>& dims, const CvConfig& config);

} // namespace mida
