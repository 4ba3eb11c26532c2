#pragma once

#include "mida/types.hpp"

#include <Eigen/Dense>

namespace mida {

/// Per-feature class relevance I(f_i;C) and symmetric pairwise redundancy
/// I(f_i;f_j), both in bits. The redundancy diagonal is never consumed.
struct MIProfile {
  Eigen::VectorXd relevance;  // N
  Eigen::MatrixXd redundancy; // N x N, symmetric
};

/// MI-based scatter matrices for a given integer trade-off constant ct:
/// s_b = diag(relevance); s_w(i,j) = ct + redundancy(i,j) off the diagonal,
/// exactly zero on it.
struct ScatterPair {
  Eigen::MatrixXd s_b;
  Eigen::MatrixXd s_w;
  int ct = 0;
};

MIProfile compute_mi_profile(const Dataset& dataset, const HistogramSpec& spec);

ScatterPair build_scatter_pair(const MIProfile& profile, int ct);

} // namespace mida
