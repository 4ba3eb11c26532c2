#include "mida/eval.hpp"

#include "mida/baselines.hpp"
#include "mida/mida.hpp"
#include "mida/scatter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace mida {

std::string method_name(Method m) {
  switch (m) {
    case Method::raw: return "raw";
    case Method::pca: return "pca";
    case Method::lda: return "lda";
    case Method::mida: return "mida";
  }
  throw std::logic_error("unknown method");
}

Method method_from_name(const std::string& name) {
  if (name == "raw") return Method::raw;
  if (name == "pca") return Method::pca;
  if (name == "lda") return Method::lda;
  if (name == "mida") return Method::mida;
  throw std::invalid_argument("unknown method: " + name);
}

double AccuracyTable::aggregate(const std::string& method, int dim) const {
  double sum = 0.0;
  int count = 0;
  for (const auto& r : records) {
    if (r.method != method || r.dim != dim || r.skipped) continue;
    sum += r.accuracy;
    ++count;
  }
  return count == 0 ? std::numeric_limits<double>::quiet_NaN() : sum / count;
}

void AccuracyTable::sort_canonical() {
  std::sort(records.begin(), records.end(),
            [](const AccuracyRecord& a, const AccuracyRecord& b) {
              return std::tie(a.dataset, a.method, a.dim, a.fold) <
                     std::tie(b.dataset, b.method, b.dim, b.fold);
            });
}

std::tuple<Eigen::MatrixXd, Eigen::MatrixXd, Eigen::VectorXd>
normalize_absmax(const Eigen::MatrixXd& train, const Eigen::MatrixXd& other,
                 NormVariant variant) {
  if (train.rows() == 0) throw std::invalid_argument("empty training matrix");

  Eigen::VectorXd scale(train.cols());
  if (variant == NormVariant::per_feature) {
    for (Eigen::Index j = 0; j < train.cols(); ++j) {
      const double s = train.col(j).cwiseAbs().maxCoeff();
      scale[j] = s == 0.0 ? 1.0 : s;
    }
  } else {
    double s = train.cwiseAbs().maxCoeff();
    scale.setConstant(s == 0.0 ? 1.0 : s);
  }

  Eigen::MatrixXd train_out = train.array().rowwise() / scale.transpose().array();
  Eigen::MatrixXd other_out = other;
  if (other.rows() > 0) {
    if (other.cols() != train.cols()) throw std::invalid_argument("shape mismatch");
    other_out = other.array().rowwise() / scale.transpose().array();
  }
  return {std::move(train_out), std::move(other_out), std::move(scale)};
}

FoldPlan stratified_folds(const Eigen::VectorXi& labels, int k, unsigned seed) {
  if (k < 2) throw std::invalid_argument("need at least 2 folds");
  if (k > labels.size()) throw std::invalid_argument("more folds than samples");

  const int classes = labels.maxCoeff() + 1;
  std::vector<std::vector<int>> by_class(static_cast<size_t>(classes));
  for (Eigen::Index i = 0; i < labels.size(); ++i)
    by_class[static_cast<size_t>(labels[i])].push_back(static_cast<int>(i));

  std::mt19937 rng(seed);
  FoldPlan plan;
  plan.seed = seed;
  plan.fold_assignment.resize(labels.size());
  for (auto& members : by_class) {
    std::shuffle(members.begin(), members.end(), rng);
    for (size_t pos = 0; pos < members.size(); ++pos)
      plan.fold_assignment[members[pos]] = static_cast<int>(pos % static_cast<size_t>(k));
  }
  return plan;
}

Eigen::VectorXi knn_classify(const Eigen::MatrixXd& train,
                             const Eigen::VectorXi& train_labels,
                             const Eigen::MatrixXd& queries, int k) {
  if (train.rows() == 0) throw std::invalid_argument("empty training set");
  if (train.rows() != train_labels.size())
    throw std::invalid_argument("label count mismatch");
  if (queries.cols() != train.cols()) throw std::invalid_argument("shape mismatch");
  if (k < 1 || k > train.rows()) throw std::invalid_argument("k out of range");

  const Eigen::VectorXd train_sq = train.rowwise().squaredNorm();
  Eigen::VectorXi out(queries.rows());

  const Eigen::Index block = 256;
  for (Eigen::Index q0 = 0; q0 < queries.rows(); q0 += block) {
    const Eigen::Index qn = std::min(block, queries.rows() - q0);
    const Eigen::MatrixXd cross =
        queries.middleRows(q0, qn) * train.transpose(); // qn x M
    for (Eigen::Index qi = 0; qi < qn; ++qi) {
      if (k == 1) {
        Eigen::Index best = 0;
        double best_d = std::numeric_limits<double>::infinity();
        for (Eigen::Index i = 0; i < train.rows(); ++i) {
          const double d = train_sq[i] - 2.0 * cross(qi, i);
          if (d < best_d) { // strict: ties keep the smaller index
            best_d = d;
            best = i;
          }
        }
        out[q0 + qi] = train_labels[best];
      } else {
        std::vector<std::pair<double, Eigen::Index>> dist(
            static_cast<size_t>(train.rows()));
        for (Eigen::Index i = 0; i < train.rows(); ++i)
          dist[static_cast<size_t>(i)] = {train_sq[i] - 2.0 * cross(qi, i), i};
        std::partial_sort(dist.begin(), dist.begin() + k, dist.end());
        std::vector<int> votes(static_cast<size_t>(train_labels.maxCoeff() + 1), 0);
        for (int j = 0; j < k; ++j) votes[train_labels[dist[j].second]] += 1;
        // majority; vote ties resolved by the best-ranked neighbor
        int winner = -1;
        for (int j = 0; j < k; ++j) {
          const int label = train_labels[dist[j].second];
          if (winner < 0 || votes[label] > votes[winner]) winner = label;
        }
        out[q0 + qi] = winner;
      }
    }
  }
  return out;
}

namespace {

double accuracy_of(const Eigen::VectorXi& predicted, const Eigen::VectorXi& truth) {
  int correct = 0;
  for (Eigen::Index i = 0; i < truth.size(); ++i)
    if (predicted[i] == truth[i]) ++correct;
  return truth.size() == 0 ? 0.0 : double(correct) / double(truth.size());
}

} // namespace

AccuracyTable run_cv(const Dataset& dataset, Method method,
                     const std::vector<int>& dims, const CvConfig& config) {
  if (dims.empty()) throw std::invalid_argument("dims must be nonempty");
  const int n = static_cast<int>(dataset.feature_count());
  const int max_dim = *std::max_element(dims.begin(), dims.end());
  const int min_dim = *std::min_element(dims.begin(), dims.end());
  if (min_dim < 1 || max_dim > n) throw std::invalid_argument("dim out of range");

  const FoldPlan plan =
      stratified_folds(dataset.labels, config.folds, config.seed);
  const int lda_limit = std::min(n, dataset.class_count() - 1);

  AccuracyTable table;
  for (int fold = 0; fold < config.folds; ++fold) {
    std::vector<int> train_idx, test_idx;
    for (Eigen::Index i = 0; i < dataset.sample_count(); ++i)
      (plan.fold_assignment[i] == fold ? test_idx : train_idx)
          .push_back(static_cast<int>(i));

    Eigen::MatrixXd train_x(train_idx.size(), n), test_x(test_idx.size(), n);
    Eigen::VectorXi train_y(train_idx.size()), test_y(test_idx.size());
    for (size_t i = 0; i < train_idx.size(); ++i) {
      train_x.row(static_cast<Eigen::Index>(i)) = dataset.features.row(train_idx[i]);
      train_y[static_cast<Eigen::Index>(i)] = dataset.labels[train_idx[i]];
    }
    for (size_t i = 0; i < test_idx.size(); ++i) {
      test_x.row(static_cast<Eigen::Index>(i)) = dataset.features.row(test_idx[i]);
      test_y[static_cast<Eigen::Index>(i)] = dataset.labels[test_idx[i]];
    }

    auto [train_n, test_n, scale] = normalize_absmax(train_x, test_x, config.norm);

    Dataset train_ds;
    train_ds.name = dataset.name;
    train_ds.features = train_n;
    train_ds.labels = train_y;

    // Fit once per fold where the projection columns are nested in t.
    ProjectionModel pca_model, lda_model;
    MIProfile profile;
    if (method == Method::pca) pca_model = fit_pca(train_n, max_dim);
    if (method == Method::lda) lda_model = fit_lda(train_ds, lda_limit);
    if (method == Method::mida) profile = compute_mi_profile(train_ds, config.spec);

    for (int dim : dims) {
      AccuracyRecord rec;
      rec.dataset = dataset.name;
      rec.method = method_name(method);
      rec.dim = dim;
      rec.fold = fold;

      Eigen::MatrixXd train_p, test_p;
      switch (method) {
        case Method::raw:
          train_p = train_n.leftCols(dim);
          test_p = test_n.leftCols(dim);
          break;
        case Method::pca:
          train_p = train_n * pca_model.w.w.leftCols(dim);
          test_p = test_n * pca_model.w.w.leftCols(dim);
          break;
        case Method::lda:
          if (dim > lda_limit) {
            rec.skipped = true;
            table.records.push_back(rec);
            continue;
          }
          train_p = train_n * lda_model.w.w.leftCols(dim);
          test_p = test_n * lda_model.w.w.leftCols(dim);
          break;
        case Method::mida: {
          const MidaModel model =
              fit_mida(profile, train_ds, dim, config.ct_max, config.spec);
          train_p = transform(model, train_n);
          test_p = transform(model, test_n);
          break;
        }
      }
      rec.accuracy = accuracy_of(knn_classify(train_p, train_y, test_p, 1), test_y);
      table.records.push_back(rec);
    }
  }
  table.sort_canonical();
  return table;
}

} // namespace mida
