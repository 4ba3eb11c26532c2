#pragma once

#include "mida/geneig.hpp"
#include "mida/scatter.hpp"
#include "mida/types.hpp"

#include <Eigen/Dense>

#include <utility>

namespace mida {

/// Fitted MIDA projection: the transformation matrix, the selected
/// trade-off constant, the full K curve over the ct grid, and the
/// estimator configuration the fit used.
struct MidaModel {
  ProjectionMatrix w;
  int ct_opt = 0;
  Eigen::VectorXd k_curve; // length l_max + 1
  HistogramSpec spec;
  int t = 0;
  double regularization_shift = 0.0;
};

/// Quality of an extracted feature set: sum over features of class
/// relevance minus mean redundancy against earlier features. The first
/// feature contributes its relevance alone.
double quality_K(const Eigen::MatrixXd& y, const Eigen::VectorXi& labels,
                 const HistogramSpec& spec);

/// Grid search over ct in [0, l_max]: build scatters, solve, project,
/// score with K. Returns the argmax (smallest ct on ties) and the curve.
std::pair<int, Eigen::VectorXd> select_ct(const MIProfile& profile,
                                          const Dataset& dataset, int t,
                                          int l_max, const HistogramSpec& spec);
std::pair<int, Eigen::VectorXd> select_ct(const Dataset& dataset, int t,
                                          int l_max, const HistogramSpec& spec);

/// Full fit: select ct, rebuild the scatter pair at ct_opt, solve for W.
MidaModel fit_mida(const MIProfile& profile, const Dataset& dataset, int t,
                   int l_max, const HistogramSpec& spec);
MidaModel fit_mida(const Dataset& dataset, int t, int l_max,
                   const HistogramSpec& spec);

Eigen::MatrixXd transform(const MidaModel& model, const Eigen::MatrixXd& x);

} // namespace mida
