#pragma once

#include <Eigen/Dense>

#include <utility>

namespace mida {

/// Top-k eigenpairs of the symmetric-definite problem A v = lambda B' v,
/// where B' is B shifted just enough to be positive definite.
/// Eigenvalues are sorted descending (ties by original index); eigenvector
/// columns have unit Euclidean norm and a positive largest-magnitude entry.
struct EigenSolution {
  Eigen::VectorXd eigenvalues;  // k, descending
  Eigen::MatrixXd eigenvectors; // N x k
  double regularization_shift = 0.0;
};

struct ProjectionMatrix {
  Eigen::MatrixXd w; // N x t
};

/// Returns b + sigma*I with sigma = max(0, -lambda_min(b)) + eps,
/// eps = epsilon_scale * max(1, |trace(b)|/N). The result is positive
/// definite for any symmetric b.
std::pair<Eigen::MatrixXd, double> regularize_spd(const Eigen::MatrixXd& b,
                                                  double epsilon_scale = 1e-6);

/// Solves the Fisher-Rao trace-ratio problem for the top-t directions.
EigenSolution solve_fisher_rao(const Eigen::MatrixXd& a,
                               const Eigen::MatrixXd& b, int t);

/// Row-samples projection X * W.
Eigen::MatrixXd project(const Eigen::MatrixXd& x, const ProjectionMatrix& w);

} // namespace mida
