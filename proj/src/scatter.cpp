#include "mida/scatter.hpp"

#include "mida/mi.hpp"

#include <stdexcept>

namespace mida {

MIProfile compute_mi_profile(const Dataset& dataset, const HistogramSpec& spec) {
  const Eigen::Index m = dataset.sample_count();
  const Eigen::Index n = dataset.feature_count();
  if (m < 2 || n < 1) throw std::invalid_argument("dataset too small");
  if (dataset.class_count() < 2) throw std::invalid_argument("degenerate labels");

  MIProfile profile;
  profile.relevance.resize(n);
  profile.redundancy = Eigen::MatrixXd::Zero(n, n);

  // Bin each column once; relevance and redundancy reuse the same tables.
  std::vector<Eigen::VectorXi> binned(static_cast<size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i)
    binned[i] = bin_feature(dataset.features.col(i), spec);

  const int classes = dataset.class_count();
  for (Eigen::Index i = 0; i < n; ++i) {
    profile.relevance[i] = exact_mi_table(
        joint_counts(binned[i], spec.bin_count, dataset.labels, classes));
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double r = exact_mi_table(
          joint_counts(binned[i], spec.bin_count, binned[j], spec.bin_count));
      profile.redundancy(i, j) = r;
      profile.redundancy(j, i) = r;
    }
  }
  return profile;
}

ScatterPair build_scatter_pair(const MIProfile& profile, int ct) {
  if (ct < 0) throw std::invalid_argument("ct must be >= 0");
  if ((profile.relevance.array() == 0.0).all())
    throw std::invalid_argument("uninformative feature set");

  const Eigen::Index n = profile.relevance.size();
  ScatterPair pair;
  pair.ct = ct;
  pair.s_b = profile.relevance.asDiagonal();
  pair.s_w = (profile.redundancy.array() + double(ct)).matrix();
  pair.s_w.diagonal().setZero();
  return pair;
}

} // namespace mida
