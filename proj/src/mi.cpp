#include "mida/mi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace mida {

namespace {

inline double xlog2x(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

double entropy_of_counts(const Eigen::VectorXd& counts, double total) {
  double h = 0.0;
  for (Eigen::Index i = 0; i < counts.size(); ++i)
    h -= xlog2x(counts[i] / total);
  return h;
}

} // namespace

double entropy_discrete(const Eigen::VectorXi& labels) {
  if (labels.size() == 0) throw std::invalid_argument("empty sample");
  const int card = labels.maxCoeff() + 1;
  if (labels.minCoeff() < 0) throw std::invalid_argument("negative label");
  Eigen::VectorXd counts = Eigen::VectorXd::Zero(card);
  for (Eigen::Index i = 0; i < labels.size(); ++i) counts[labels[i]] += 1.0;
  return entropy_of_counts(counts, static_cast<double>(labels.size()));
}

Eigen::VectorXi bin_feature(const Eigen::VectorXd& values, const HistogramSpec& spec) {
  if (values.size() == 0) throw std::invalid_argument("empty sample");
  if (spec.bin_count < 1) throw std::invalid_argument("bin_count must be >= 1");
  if (!values.allFinite()) throw std::invalid_argument("non-finite input");

  const double lo = values.minCoeff();
  const double hi = values.maxCoeff();
  Eigen::VectorXi bins(values.size());
  if (hi == lo) {
    bins.setZero();
    return bins;
  }
  const double width = (hi - lo) / spec.bin_count;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    int b = static_cast<int>((values[i] - lo) / width);
    if (b >= spec.bin_count) b = spec.bin_count - 1; // max falls in the last bin
    bins[i] = b;
  }
  return bins;
}

double exact_mi_table(const JointCountTable& table) {
  if (table.total <= 0) throw std::invalid_argument("empty count table");
  const double n = static_cast<double>(table.total);
  const Eigen::VectorXd row_sums = table.counts.cast<double>().rowwise().sum();
  const Eigen::VectorXd col_sums = table.counts.cast<double>().colwise().sum();
  // Cell terms are summed in sorted order so the result is bitwise
  // invariant under row/column permutations of the table.
  std::vector<double> terms;
  terms.reserve(static_cast<size_t>(table.counts.size()));
  for (Eigen::Index r = 0; r < table.counts.rows(); ++r) {
    for (Eigen::Index c = 0; c < table.counts.cols(); ++c) {
      const double cell = table.counts(r, c);
      if (cell <= 0.0) continue;
      terms.push_back((cell / n) * std::log2(cell * n / (row_sums[r] * col_sums[c])));
    }
  }
  std::sort(terms.begin(), terms.end());
  double mi = 0.0;
  for (double t : terms) mi += t;
  return mi;
}

JointCountTable joint_counts(const Eigen::VectorXi& a, int a_card,
                             const Eigen::VectorXi& b, int b_card) {
  if (a.size() != b.size()) throw std::invalid_argument("length mismatch");
  JointCountTable table;
  table.counts = Eigen::MatrixXi::Zero(a_card, b_card);
  for (Eigen::Index i = 0; i < a.size(); ++i) table.counts(a[i], b[i]) += 1;
  table.total = a.size();
  return table;
}

namespace {

MIEstimate estimate_from_table(const JointCountTable& table) {
  MIEstimate est;
  est.value = exact_mi_table(table);
  const double n = static_cast<double>(table.total);
  est.h_row = entropy_of_counts(table.counts.cast<double>().rowwise().sum(), n);
  est.h_col = entropy_of_counts(table.counts.cast<double>().colwise().sum(), n);
  return est;
}

} // namespace

MIEstimate mi_feature_class(const Eigen::VectorXd& feature,
                            const Eigen::VectorXi& labels,
                            const HistogramSpec& spec) {
  if (feature.size() != labels.size()) throw std::invalid_argument("length mismatch");
  const Eigen::VectorXi bins = bin_feature(feature, spec);
  return estimate_from_table(
      joint_counts(bins, spec.bin_count, labels, labels.maxCoeff() + 1));
}

MIEstimate mi_feature_feature(const Eigen::VectorXd& f_i,
                              const Eigen::VectorXd& f_j,
                              const HistogramSpec& spec) {
  if (f_i.size() != f_j.size()) throw std::invalid_argument("length mismatch");
  const Eigen::VectorXi bi = bin_feature(f_i, spec);
  const Eigen::VectorXi bj = bin_feature(f_j, spec);
  return estimate_from_table(joint_counts(bi, spec.bin_count, bj, spec.bin_count));
}

std::pair<double, double> bayes_error_bounds(double h_c, double mi, int n_classes) {
  if (n_classes < 2) throw std::invalid_argument("n_classes must be >= 2");
  const double upper = (h_c - mi) / 2.0;
  const double lower = std::max(0.0, (h_c - mi - 1.0) / std::log2(double(n_classes)));
  return {lower, upper};
}

} // namespace mida
