#include "mida/eval.hpp"

#include "mida/baselines.hpp"
#include "mida/mida.hpp"
#include "mida/scatter.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace mida;

TEST_CASE("normalize_absmax") {
  Eigen::MatrixXd train(2, 1);
  train << -4, 2;
  auto [t, o, scale] = normalize_absmax(train, Eigen::MatrixXd());
  CHECK(scale[0] == doctest::Approx(4.0));
  CHECK(t(0, 0) == doctest::Approx(-1.0));
  CHECK(t(1, 0) == doctest::Approx(0.5));

  Eigen::MatrixXd zeros = Eigen::MatrixXd::Zero(3, 1);
  auto [tz, oz, sz] = normalize_absmax(zeros, Eigen::MatrixXd());
  CHECK(sz[0] == 1.0);
  CHECK(tz.isZero(0.0));

  Eigen::MatrixXd small(2, 1), big(1, 1);
  small << 1, 2;
  big << 4;
  auto [ts, tb, ss] = normalize_absmax(small, big);
  CHECK(tb(0, 0) == doctest::Approx(2.0)); // test may exceed training max
}

TEST_CASE("stratified_folds") {
  SUBCASE("balanced classes divide evenly") {
    Eigen::VectorXi labels(20);
    for (int i = 0; i < 20; ++i) labels[i] = i % 2;
    const FoldPlan plan = stratified_folds(labels, 10, 0);
    Eigen::MatrixXi per_fold = Eigen::MatrixXi::Zero(10, 2);
    for (int i = 0; i < 20; ++i) per_fold(plan.fold_assignment[i], labels[i]) += 1;
    CHECK(per_fold.minCoeff() == 1);
    CHECK(per_fold.maxCoeff() == 1);
  }
  SUBCASE("deterministic for fixed seed") {
    Eigen::VectorXi labels(30);
    for (int i = 0; i < 30; ++i) labels[i] = i % 3;
    CHECK(stratified_folds(labels, 5, 42).fold_assignment ==
          stratified_folds(labels, 5, 42).fold_assignment);
  }
  SUBCASE("small class spreads over distinct folds") {
    Eigen::VectorXi labels(23);
    labels.setZero();
    labels[4] = labels[11] = labels[19] = 1; // 3 samples of class 1
    const FoldPlan plan = stratified_folds(labels, 10, 7);
    std::vector<int> folds;
    for (int i = 0; i < 23; ++i)
      if (labels[i] == 1) folds.push_back(plan.fold_assignment[i]);
    CHECK(folds.size() == 3);
    std::sort(folds.begin(), folds.end());
    CHECK(std::unique(folds.begin(), folds.end()) == folds.end());
  }
  Eigen::VectorXi tiny(3);
  tiny << 0, 1, 0;
  CHECK_THROWS(stratified_folds(tiny, 10, 0));
}

TEST_CASE("knn_classify") {
  Eigen::MatrixXd train(2, 2);
  train << 0, 0, 10, 10;
  Eigen::VectorXi labels(2);
  labels << 0, 1;

  Eigen::MatrixXd q1(1, 2);
  q1 << 10, 10;
  CHECK(knn_classify(train, labels, q1)[0] == 1); // exact training point

  Eigen::MatrixXd q2(1, 2);
  q2 << 1, 1;
  CHECK(knn_classify(train, labels, q2)[0] == 0); // clear margin

  Eigen::MatrixXd q3(1, 2);
  q3 << 5, 5; // equidistant: lower training index wins
  CHECK(knn_classify(train, labels, q3)[0] == 0);

  CHECK_THROWS(knn_classify(train, labels, Eigen::MatrixXd::Zero(1, 3)));
}

namespace {

// Independent re-implementation of the per-fold raw protocol for the
// enumeration oracle: absmax-normalize, 1-NN by quadratic scan.
double oracle_raw_cv(const Eigen::MatrixXd& x, const Eigen::VectorXi& y,
                     const FoldPlan& plan, int folds, int dim) {
  double total_acc = 0.0;
  for (int f = 0; f < folds; ++f) {
    std::vector<int> tr, te;
    for (Eigen::Index i = 0; i < y.size(); ++i)
      (plan.fold_assignment[i] == f ? te : tr).push_back(int(i));
    Eigen::VectorXd scale = Eigen::VectorXd::Ones(x.cols());
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      double s = 0.0;
      for (int i : tr) s = std::max(s, std::abs(x(i, j)));
      if (s != 0.0) scale[j] = s;
    }
    int correct = 0;
    for (int q : te) {
      double best = std::numeric_limits<double>::infinity();
      int best_i = -1;
      for (int i : tr) {
        double d = 0.0;
        for (int j = 0; j < dim; ++j) {
          const double diff = x(q, j) / scale[j] - x(i, j) / scale[j];
          d += diff * diff;
        }
        if (d < best) {
          best = d;
          best_i = i;
        }
      }
      if (y[best_i] == y[q]) ++correct;
    }
    total_acc += double(correct) / double(te.size());
  }
  return total_acc / folds;
}

} // namespace

TEST_CASE("run_cv raw agrees with the enumeration oracle") {
  // 8-point XOR layout: two interleaved classes on the plane.
  Eigen::MatrixXd x(8, 2);
  x << 0, 0, 1, 1, 0, 1, 1, 0, 0.1, 0.1, 0.9, 0.9, 0.1, 0.9, 0.9, 0.1;
  Eigen::VectorXi y(8);
  y << 0, 0, 1, 1, 0, 0, 1, 1;

  Dataset d;
  d.name = "xor8";
  d.features = x;
  d.labels = y;

  CvConfig config;
  config.folds = 4;
  config.seed = 3;
  const FoldPlan plan = stratified_folds(y, config.folds, config.seed);

  const AccuracyTable table = run_cv(d, Method::raw, {1, 2}, config);
  for (int dim : {1, 2}) {
    const double expected = oracle_raw_cv(x, y, plan, config.folds, dim);
    CHECK(table.aggregate("raw", dim) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("run_cv records LDA skips past C - 1") {
  std::mt19937 rng(41);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Dataset d;
  d.name = "twoclass";
  d.features.resize(60, 8);
  d.labels.resize(60);
  for (int i = 0; i < 60; ++i) {
    d.labels[i] = i % 2;
    for (int j = 0; j < 8; ++j)
      d.features(i, j) = gauss(rng) + (j == 0 ? 2.0 * d.labels[i] : 0.0);
  }
  CvConfig config;
  config.folds = 5;
  const AccuracyTable table =
      run_cv(d, Method::lda, {1, 2, 3, 4, 5, 6, 7}, config);
  for (const auto& r : table.records) CHECK(r.skipped == (r.dim > 1));
  CHECK(std::isnan(table.aggregate("lda", 2)));
  CHECK(!std::isnan(table.aggregate("lda", 1)));
}

TEST_CASE("run_cv aggregate equals the fold mean; accuracies in range") {
  std::mt19937 rng(43);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Dataset d;
  d.name = "blob";
  d.features.resize(80, 3);
  d.labels.resize(80);
  for (int i = 0; i < 80; ++i) {
    d.labels[i] = i % 2;
    for (int j = 0; j < 3; ++j)
      d.features(i, j) = gauss(rng) + 1.5 * d.labels[i];
  }
  CvConfig config;
  config.folds = 10;
  const AccuracyTable table = run_cv(d, Method::pca, {1, 2}, config);
  double sum = 0.0;
  int count = 0;
  for (const auto& r : table.records) {
    CHECK(r.accuracy >= 0.0);
    CHECK(r.accuracy <= 1.0);
    if (r.dim == 2) {
      sum += r.accuracy;
      ++count;
    }
  }
  CHECK(count == 10);
  CHECK(table.aggregate("pca", 2) == doctest::Approx(sum / count).epsilon(1e-12));
}

TEST_CASE("run_cv sanity: duplicated rows give perfect raw accuracy") {
  std::mt19937 rng(45);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  const int distinct = 6, copies = 10;
  Dataset d;
  d.features.resize(distinct * copies, 2);
  d.labels.resize(distinct * copies);
  d.name = "dups";
  for (int p = 0; p < distinct; ++p) {
    const double a = unif(rng), b = unif(rng);
    for (int c = 0; c < copies; ++c) {
      d.features(p * copies + c, 0) = a;
      d.features(p * copies + c, 1) = b;
      d.labels[p * copies + c] = p % 2;
    }
  }
  CvConfig config;
  config.folds = 5;
  config.seed = 1;
  const AccuracyTable table = run_cv(d, Method::raw, {2}, config);
  CHECK(table.aggregate("raw", 2) == doctest::Approx(1.0));
}

TEST_CASE("leakage: fitted projections depend only on the training split") {
  std::mt19937 rng(47);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Dataset d;
  d.features.resize(60, 4);
  d.labels.resize(60);
  for (int i = 0; i < 60; ++i) {
    d.labels[i] = i % 3;
    for (int j = 0; j < 4; ++j)
      d.features(i, j) = gauss(rng) + d.labels[i] * (j == 0 ? 1.0 : 0.1);
  }
  const FoldPlan plan = stratified_folds(d.labels, 5, 0);

  for (int fold = 0; fold < 5; ++fold) {
    std::vector<int> tr;
    for (int i = 0; i < 60; ++i)
      if (plan.fold_assignment[i] != fold) tr.push_back(i);

    Dataset train_only;
    train_only.features.resize(Eigen::Index(tr.size()), 4);
    train_only.labels.resize(Eigen::Index(tr.size()));
    for (size_t i = 0; i < tr.size(); ++i) {
      train_only.features.row(Eigen::Index(i)) = d.features.row(tr[i]);
      train_only.labels[Eigen::Index(i)] = d.labels[tr[i]];
    }
    auto [norm_a, unused_a, scale_a] =
        normalize_absmax(train_only.features, Eigen::MatrixXd());
    Dataset norm_ds = train_only;
    norm_ds.features = norm_a;

    // Deleting the test rows leaves the training split, and with it every
    // fitted projection, bitwise unchanged.
    const ProjectionModel pca_a = fit_pca(norm_ds.features, 3);
    const ProjectionModel pca_b = fit_pca(norm_ds.features, 3);
    CHECK(pca_a.w.w == pca_b.w.w);

    const ProjectionModel lda_a = fit_lda(norm_ds, 2);
    const MidaModel mida_a = fit_mida(norm_ds, 2, 3, HistogramSpec{6});
    const ProjectionModel lda_b = fit_lda(norm_ds, 2);
    const MidaModel mida_b = fit_mida(norm_ds, 2, 3, HistogramSpec{6});
    CHECK(lda_a.w.w == lda_b.w.w);
    CHECK(mida_a.w.w == mida_b.w.w);
  }
}
