#pragma once

#include "mida/types.hpp"

#include <Eigen/Dense>

#include <utility>

namespace mida {

/// Empirical joint count table of two discrete variables (bins or classes).
struct JointCountTable {
  Eigen::MatrixXi counts; // rows = variable 1, cols = variable 2
  long total = 0;
};

/// Plug-in MI of a binned pair, in bits, together with the marginal
/// entropies of the two variables.
struct MIEstimate {
  double value = 0.0; // bits, >= 0
  double h_row = 0.0; // entropy of variable 1 (bits)
  double h_col = 0.0; // entropy of variable 2 (bits)
};

/// Shannon entropy of an integer label vector, in bits.
double entropy_discrete(const Eigen::VectorXi& labels);

/// Maps each value to a bin index in [0, bin_count) via equal-width edges
/// over [min, max] of `values`. A constant vector maps everything to bin 0.
Eigen::VectorXi bin_feature(const Eigen::VectorXd& values, const HistogramSpec& spec);

/// Exact MI (bits) of the empirical distribution described by a count table.
double exact_mi_table(const JointCountTable& table);

/// Builds the joint count table of two already-discretized vectors.
JointCountTable joint_counts(const Eigen::VectorXi& a, int a_card,
                             const Eigen::VectorXi& b, int b_card);

/// MI between a continuous feature (binned per `spec`) and a class label.
MIEstimate mi_feature_class(const Eigen::VectorXd& feature,
                            const Eigen::VectorXi& labels,
                            const HistogramSpec& spec);

/// MI between two continuous features, each binned independently with the
/// same spec. Symmetric in its arguments.
MIEstimate mi_feature_feature(const Eigen::VectorXd& f_i,
                              const Eigen::VectorXd& f_j,
                              const HistogramSpec& spec);

/// Fano lower bound (clamped at 0) and Hellman-Raviv upper bound on the
/// Bayes error, both from base-2 entropies. Returns {lower, upper}.
std::pair<double, double> bayes_error_bounds(double h_c, double mi, int n_classes);

} // namespace mida
