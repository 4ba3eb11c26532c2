#pragma once

#include "mida/geneig.hpp"
#include "mida/types.hpp"

#include <Eigen/Dense>

namespace mida {

/// Classical LDA scatter matrices: unweighted between-class sum of
/// mean-deviation outer products and the 1/n-scaled pooled within-class
/// scatter.
struct LdaScatter {
  Eigen::MatrixXd s_b;         // N x N
  Eigen::MatrixXd s_w;         // N x N
  Eigen::MatrixXd class_means; // C x N
  Eigen::VectorXd global_mean; // N
  Eigen::VectorXi class_counts;
};

/// Shared result type for the PCA/LDA baselines. `effective_t` may be
/// smaller than the request (LDA clamps at C - 1).
struct ProjectionModel {
  ProjectionMatrix w;
  Eigen::VectorXd eigenvalues;
  int requested_t = 0;
  int effective_t = 0;
  double regularization_shift = 0.0;
};

LdaScatter lda_scatter(const Dataset& dataset);

ProjectionModel fit_lda(const Dataset& dataset, int t);

ProjectionModel fit_pca(const Eigen::MatrixXd& x, int t);

} // namespace mida
