#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace mida {

/// A labeled sample matrix: rows are samples, columns are features.
/// Labels are dense integers in [0, class_count).
struct Dataset {
  std::string name;
  Eigen::MatrixXd features;               // M x N
  Eigen::VectorXi labels;                 // M
  std::vector<std::string> feature_names; // may be empty
  std::vector<std::string> label_names;   // dense code -> original token

  Eigen::Index sample_count() const { return features.rows(); }
  Eigen::Index feature_count() const { return features.cols(); }
  int class_count() const {
    return labels.size() == 0 ? 0 : labels.maxCoeff() + 1;
  }
};

/// Equal-width binning configuration for the histogram MI estimators.
/// Edges span [min, max] of the variable being binned; values equal to the
/// max fall in the last bin.
struct HistogramSpec {
  int bin_count = 16;
};

} // namespace mida
