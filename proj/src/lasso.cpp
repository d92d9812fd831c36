#include "surfchem/lasso.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "surfchem/errors.hpp"
#include "surfchem/features.hpp"
#include "surfchem/rng.hpp"

namespace surfchem {

namespace {

double soft_threshold(double z, double lambda) {
  if (z > lambda) return z - lambda;
  if (z < -lambda) return z + lambda;
  return 0.0;
}

constexpr int kPathPoints = 50;
constexpr double kLambdaMinRatio = 1e-3;
constexpr int kFolds = 5;

}  // namespace

Eigen::VectorXd lasso_coordinate_descent(const Eigen::MatrixXd& x_std,
                                         const Eigen::VectorXd& y_centered,
                                         double lambda, Eigen::VectorXd warm,
                                         double tolerance, int max_sweeps) {
  const Eigen::Index n = x_std.rows();
  const Eigen::Index p = x_std.cols();
  if (warm.size() != p) {
    throw DomainError("warm start size differs from feature count");
  }
  if (n == 0 || p == 0) return warm;
  const double inv_n = 1.0 / static_cast<double>(n);

  // Per-column curvature (1/n) sum x_ij^2; 1 for standardized columns
  // but computed so per-fold re-standardized designs stay exact.
  Eigen::VectorXd curvature(p);
  for (Eigen::Index j = 0; j < p; ++j) {
    curvature(j) = x_std.col(j).squaredNorm() * inv_n;
  }

  Eigen::VectorXd residual = y_centered - x_std * warm;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double max_delta = 0.0;
    for (Eigen::Index j = 0; j < p; ++j) {
      if (curvature(j) == 0.0) {
        warm(j) = 0.0;
        continue;
      }
      const double old = warm(j);
      const double rho = x_std.col(j).dot(residual) * inv_n + curvature(j) * old;
      const double next = soft_threshold(rho, lambda) / curvature(j);
      if (next != old) {
        residual += x_std.col(j) * (old - next);
        warm(j) = next;
        max_delta = std::max(max_delta, std::abs(next - old));
      }
    }
    if (max_delta <= tolerance) break;
  }
  return warm;
}

double lasso_lambda_max(const Eigen::MatrixXd& x_std,
                        const Eigen::VectorXd& y_centered) {
  if (x_std.rows() == 0 || x_std.cols() == 0) return 0.0;
  return (x_std.transpose() * y_centered).cwiseAbs().maxCoeff() /
         static_cast<double>(x_std.rows());
}

LassoSelection select_features(const Eigen::MatrixXd& features,
                               const std::vector<std::string>& names,
                               const Eigen::VectorXd& targets,
                               std::uint64_t seed) {
  if (features.cols() != static_cast<Eigen::Index>(names.size())) {
    throw DomainError("feature name count differs from matrix width");
  }
  const Eigen::Index n = features.rows();
  if (n < 10 || targets.size() != n) {
    throw DomainError("feature selection needs at least 10 target rows");
  }

  LassoSelection out;
  // Drop constant columns up front; they carry no selectable signal.
  std::vector<Eigen::Index> keep;
  for (Eigen::Index j = 0; j < features.cols(); ++j) {
    const double mean = features.col(j).mean();
    const double var =
        (features.col(j).array() - mean).square().sum() / static_cast<double>(n);
    if (var > 0.0) {
      keep.push_back(j);
      out.feature_names.push_back(names[static_cast<std::size_t>(j)]);
    } else {
      out.dropped.push_back(names[static_cast<std::size_t>(j)]);
    }
  }
  Eigen::MatrixXd x(n, static_cast<Eigen::Index>(keep.size()));
  for (std::size_t c = 0; c < keep.size(); ++c) {
    x.col(static_cast<Eigen::Index>(c)) = features.col(keep[c]);
  }
  const Eigen::Index p = x.cols();
  if (p == 0) {
    throw DomainError("every candidate feature is constant");
  }

  out.intercept = targets.mean();
  const Eigen::VectorXd y = targets.array() - out.intercept;

  const Standardizer full_std = Standardizer::fit(x);
  const Eigen::MatrixXd xs = full_std.transform(x);
  const double lambda_max = lasso_lambda_max(xs, y);
  if (!(lambda_max > 0.0)) {
    // Targets carry no linear signal at all; the null model is the fit.
    out.coefficients = Eigen::VectorXd::Zero(p);
    out.chosen_lambda = 0.0;
    out.path.push_back({0.0, out.coefficients, y.squaredNorm() / n});
    return out;
  }

  std::vector<double> lambdas(kPathPoints);
  for (int i = 0; i < kPathPoints; ++i) {
    // Ascending log spacing from lambda_max * ratio up to lambda_max.
    const double t = static_cast<double>(i) / (kPathPoints - 1);
    lambdas[static_cast<std::size_t>(i)] =
        lambda_max * std::pow(kLambdaMinRatio, 1.0 - t);
  }

  // Deterministic fold assignment: Fisher-Yates over row indices.
  std::vector<Eigen::Index> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), Eigen::Index{0});
  Rng rng(seed, /*stream=*/0x1a550);
  for (std::size_t i = perm.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.raw() % i);
    std::swap(perm[i - 1], perm[j]);
  }
  std::vector<int> fold_of(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < perm.size(); ++i) {
    fold_of[static_cast<std::size_t>(perm[i])] = static_cast<int>(i % kFolds);
  }

  std::vector<double> cv_error(kPathPoints, 0.0);
  for (int fold = 0; fold < kFolds; ++fold) {
    std::vector<Eigen::Index> train_rows, test_rows;
    for (Eigen::Index i = 0; i < n; ++i) {
      (fold_of[static_cast<std::size_t>(i)] == fold ? test_rows : train_rows)
          .push_back(i);
    }
    Eigen::MatrixXd xt(static_cast<Eigen::Index>(train_rows.size()), p);
    Eigen::VectorXd yt(static_cast<Eigen::Index>(train_rows.size()));
    for (std::size_t r = 0; r < train_rows.size(); ++r) {
      xt.row(static_cast<Eigen::Index>(r)) = x.row(train_rows[r]);
      yt(static_cast<Eigen::Index>(r)) = targets(train_rows[r]);
    }
    const double fold_intercept = yt.mean();
    const Eigen::VectorXd ytc = yt.array() - fold_intercept;
    const Standardizer fold_std = Standardizer::fit(xt);
    const Eigen::MatrixXd xts = fold_std.transform(xt);

    // Warm-start down the path from lambda_max where everything is zero.
    Eigen::VectorXd beta = Eigen::VectorXd::Zero(p);
    for (int i = kPathPoints - 1; i >= 0; --i) {
      beta = lasso_coordinate_descent(xts, ytc,
                                      lambdas[static_cast<std::size_t>(i)],
                                      beta);
      for (Eigen::Index t : test_rows) {
        const Eigen::RowVectorXd row_std =
            fold_std.transform(x.row(t)).row(0);
        const double pred = fold_intercept + row_std.dot(beta);
        const double err = targets(t) - pred;
        cv_error[static_cast<std::size_t>(i)] += err * err;
      }
    }
  }
  for (double& e : cv_error) e /= static_cast<double>(n);

  // Smallest CV error wins; ties go to the stronger penalty.
  int best = 0;
  for (int i = 0; i < kPathPoints; ++i) {
    if (cv_error[static_cast<std::size_t>(i)] <
        cv_error[static_cast<std::size_t>(best)]) {
      best = i;
    } else if (cv_error[static_cast<std::size_t>(i)] ==
                   cv_error[static_cast<std::size_t>(best)] &&
               lambdas[static_cast<std::size_t>(i)] >
                   lambdas[static_cast<std::size_t>(best)]) {
      best = i;
    }
  }

  // Final path and coefficients on the full standardized design.
  Eigen::VectorXd beta = Eigen::VectorXd::Zero(p);
  std::vector<Eigen::VectorXd> path_beta(kPathPoints);
  for (int i = kPathPoints - 1; i >= 0; --i) {
    beta = lasso_coordinate_descent(xs, y, lambdas[static_cast<std::size_t>(i)],
                                    beta);
    path_beta[static_cast<std::size_t>(i)] = beta;
  }
  out.path.reserve(kPathPoints);
  for (int i = 0; i < kPathPoints; ++i) {
    out.path.push_back({lambdas[static_cast<std::size_t>(i)],
                        path_beta[static_cast<std::size_t>(i)],
                        cv_error[static_cast<std::size_t>(i)]});
  }
  out.chosen_lambda = lambdas[static_cast<std::size_t>(best)];
  out.coefficients = path_beta[static_cast<std::size_t>(best)];
  for (Eigen::Index j = 0; j < p; ++j) {
    if (out.coefficients(j) != 0.0) {
      out.selected.push_back(out.feature_names[static_cast<std::size_t>(j)]);
    }
  }
  return out;
}

}  // namespace surfchem
