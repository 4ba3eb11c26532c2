#include "mida/mida.hpp"

#include "mida/mi.hpp"

#include <stdexcept>

namespace mida {

double quality_K(const Eigen::MatrixXd& y, const Eigen::VectorXi& labels,
                 const HistogramSpec& spec) {
  const Eigen::Index t = y.cols();
  if (t < 1) throw std::invalid_argument("t must be >= 1");

  std::vector<Eigen::VectorXi> binned(static_cast<size_t>(t));
  for (Eigen::Index i = 0; i < t; ++i) binned[i] = bin_feature(y.col(i), spec);
  const int classes = labels.maxCoeff() + 1;

  double k = 0.0;
  for (Eigen::Index i = 0; i < t; ++i) {
    double term = exact_mi_table(
        joint_counts(binned[i], spec.bin_count, labels, classes));
    if (i > 0) {
      double redundancy = 0.0;
      for (Eigen::Index j = 0; j < i; ++j)
        redundancy += exact_mi_table(
            joint_counts(binned[i], spec.bin_count, binned[j], spec.bin_count));
      term -= redundancy / double(i);
    }
    k += term;
  }
  return k;
}

std::pair<int, Eigen::VectorXd> select_ct(const MIProfile& profile,
                                          const Dataset& dataset, int t,
                                          int l_max, const HistogramSpec& spec) {
  if (l_max < 0) throw std::invalid_argument("l_max must be >= 0");
  if (t > dataset.feature_count()) throw std::invalid_argument("t out of range");

  Eigen::VectorXd curve(l_max + 1);
  for (int ct = 0; ct <= l_max; ++ct) {
    const ScatterPair pair = build_scatter_pair(profile, ct);
    const EigenSolution sol = solve_fisher_rao(pair.s_b, pair.s_w, t);
    const Eigen::MatrixXd y = project(dataset.features, {sol.eigenvectors});
    curve[ct] = quality_K(y, dataset.labels, spec);
  }
  int best = 0;
  for (int ct = 1; ct <= l_max; ++ct)
    if (curve[ct] > curve[best]) best = ct; // strict: ties keep smaller ct
  return {best, curve};
}

std::pair<int, Eigen::VectorXd> select_ct(const Dataset& dataset, int t,
                                          int l_max, const HistogramSpec& spec) {
  return select_ct(compute_mi_profile(dataset, spec), dataset, t, l_max, spec);
}

MidaModel fit_mida(const MIProfile& profile, const Dataset& dataset, int t,
                   int l_max, const HistogramSpec& spec) {
  auto [ct_opt, curve] = select_ct(profile, dataset, t, l_max, spec);
  const ScatterPair pair = build_scatter_pair(profile, ct_opt);
  const EigenSolution sol = solve_fisher_rao(pair.s_b, pair.s_w, t);

  MidaModel model;
  model.w.w = sol.eigenvectors;
  model.ct_opt = ct_opt;
  model.k_curve = curve;
  model.spec = spec;
  model.t = t;
  model.regularization_shift = sol.regularization_shift;
  return model;
}

MidaModel fit_mida(const Dataset& dataset, int t, int l_max,
                   const HistogramSpec& spec) {
  return fit_mida(compute_mi_profile(dataset, spec), dataset, t, l_max, spec);
}

Eigen::MatrixXd transform(const MidaModel& model, const Eigen::MatrixXd& x) {
  return project(x, model.w);
}

} // namespace mida
