#include "mida/geneig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace mida {

namespace {

void require_symmetric(const Eigen::MatrixXd& m, double tol = 1e-10) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix not square");
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > tol)
    throw std::invalid_argument("matrix not symmetric");
}

// Flip each column so its largest-magnitude entry is positive; scale to
// unit Euclidean norm. First index wins on magnitude ties.
void canonicalize_columns(Eigen::MatrixXd& v) {
  for (Eigen::Index c = 0; c < v.cols(); ++c) {
    Eigen::Index arg = 0;
    double best = -1.0;
    for (Eigen::Index r = 0; r < v.rows(); ++r) {
      const double mag = std::abs(v(r, c));
      if (mag > best) {
        best = mag;
        arg = r;
      }
    }
    if (v(arg, c) < 0.0) v.col(c) = -v.col(c);
    const double norm = v.col(c).norm();
    if (norm > 0.0) v.col(c) /= norm;
  }
}

} // namespace

std::pair<Eigen::MatrixXd, double> regularize_spd(const Eigen::MatrixXd& b,
                                                  double epsilon_scale) {
  require_symmetric(b);
  const Eigen::Index n = b.rows();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(b, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eigendecomposition failed in regularize_spd");
  const double lambda_min = es.eigenvalues().minCoeff();
  const double eps = epsilon_scale * std::max(1.0, std::abs(b.trace()) / double(n));
  const double shift = std::max(0.0, -lambda_min) + eps;
  return {b + shift * Eigen::MatrixXd::Identity(n, n), shift};
}

EigenSolution solve_fisher_rao(const Eigen::MatrixXd& a,
                               const Eigen::MatrixXd& b, int t) {
  require_symmetric(a);
  require_symmetric(b);
  if (a.rows() != b.rows()) throw std::invalid_argument("dimension mismatch");
  if (t < 1 || t > a.rows()) throw std::invalid_argument("t out of range");

  auto [b_reg, shift] = regularize_spd(b);
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(a, b_reg);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("generalized eigensolver did not converge");

  // Ascending from the solver; reorder to descending, stable in the
  // original index on ties.
  const Eigen::VectorXd& vals = es.eigenvalues();
  std::vector<Eigen::Index> order(static_cast<size_t>(vals.size()));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return vals[i] > vals[j]; });

  EigenSolution sol;
  sol.regularization_shift = shift;
  sol.eigenvalues.resize(t);
  sol.eigenvectors.resize(a.rows(), t);
  for (int k = 0; k < t; ++k) {
    sol.eigenvalues[k] = vals[order[static_cast<size_t>(k)]];
    sol.eigenvectors.col(k) = es.eigenvectors().col(order[static_cast<size_t>(k)]);
  }
  canonicalize_columns(sol.eigenvectors);
  return sol;
}

Eigen::MatrixXd project(const Eigen::MatrixXd& x, const ProjectionMatrix& w) {
  if (x.cols() != w.w.rows()) throw std::invalid_argument("shape mismatch");
  return x * w.w;
}

} // namespace mida
