#include "mida/baselines.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace mida {

LdaScatter lda_scatter(const Dataset& dataset) {
  const Eigen::Index m = dataset.sample_count();
  const Eigen::Index n = dataset.feature_count();
  const int c = dataset.class_count();
  if (c < 2) throw std::invalid_argument("degenerate labels");

  LdaScatter s;
  s.class_means = Eigen::MatrixXd::Zero(c, n);
  s.class_counts = Eigen::VectorXi::Zero(c);
  for (Eigen::Index i = 0; i < m; ++i) {
    s.class_means.row(dataset.labels[i]) += dataset.features.row(i);
    s.class_counts[dataset.labels[i]] += 1;
  }
  for (int k = 0; k < c; ++k)
    if (s.class_counts[k] > 0) s.class_means.row(k) /= double(s.class_counts[k]);
  s.global_mean = dataset.features.colwise().mean();

  s.s_b = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < c; ++k) {
    const Eigen::VectorXd d = s.class_means.row(k).transpose() - s.global_mean;
    s.s_b += d * d.transpose();
  }
  s.s_w = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < m; ++i) {
    const Eigen::VectorXd d =
        dataset.features.row(i).transpose() -
        s.class_means.row(dataset.labels[i]).transpose();
    s.s_w += d * d.transpose();
  }
  s.s_w /= double(m);
  return s;
}

ProjectionModel fit_lda(const Dataset& dataset, int t) {
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  const int c = dataset.class_count();
  const int n = static_cast<int>(dataset.feature_count());
  const int effective = std::min({t, n, c - 1});

  const LdaScatter s = lda_scatter(dataset);
  const EigenSolution sol = solve_fisher_rao(s.s_b, s.s_w, effective);

  ProjectionModel model;
  model.w.w = sol.eigenvectors;
  model.eigenvalues = sol.eigenvalues;
  model.requested_t = t;
  model.effective_t = effective;
  model.regularization_shift = sol.regularization_shift;
  return model;
}

ProjectionModel fit_pca(const Eigen::MatrixXd& x, int t) {
  if (x.rows() < 2) throw std::invalid_argument("need at least 2 samples");
  if (t < 1 || t > x.cols()) throw std::invalid_argument("t out of range");

  const Eigen::RowVectorXd mean = x.colwise().mean();
  const Eigen::MatrixXd centered = x.rowwise() - mean;
  const Eigen::MatrixXd cov =
      centered.transpose() * centered / double(x.rows() - 1);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cov);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("covariance eigendecomposition failed");

  // Same descending order / tie and sign conventions as the Fisher-Rao
  // solver so golden tests are stable.
  const Eigen::VectorXd& vals = es.eigenvalues();
  std::vector<Eigen::Index> order(static_cast<size_t>(vals.size()));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return vals[i] > vals[j]; });

  ProjectionModel model;
  model.requested_t = t;
  model.effective_t = t;
  model.eigenvalues.resize(t);
  model.w.w.resize(x.cols(), t);
  for (int k = 0; k < t; ++k) {
    model.eigenvalues[k] = vals[order[static_cast<size_t>(k)]];
    model.w.w.col(k) = es.eigenvectors().col(order[static_cast<size_t>(k)]);
  }
  for (Eigen::Index col = 0; col < model.w.w.cols(); ++col) {
    Eigen::Index arg = 0;
    model.w.w.col(col).cwiseAbs().maxCoeff(&arg);
    if (model.w.w(arg, col) < 0.0) model.w.w.col(col) = -model.w.w.col(col);
  }
  return model;
}

} // namespace mida
