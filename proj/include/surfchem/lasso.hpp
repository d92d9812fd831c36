#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace surfchem {

struct LassoPathPoint {
  double lambda = 0.0;
  Eigen::VectorXd coefficients;  // standardized-feature scale
  double cv_error = 0.0;         // mean squared error across folds
};

struct LassoSelection {
  std::vector<std::string> feature_names;  // columns kept (nonconstant)
  std::vector<std::string> dropped;        // constant columns, with warning
  std::vector<std::string> selected;       // nonzero at the chosen lambda
  Eigen::VectorXd coefficients;            // at chosen lambda
  double intercept = 0.0;                  // mean of the targets
  double chosen_lambda = 0.0;
  std::vector<LassoPathPoint> path;        // ascending, ends at lambda_max
};

/// One lasso solve at fixed lambda by cyclic coordinate descent on a
/// standardized design (columns zero mean, unit population variance) and
/// centered targets. Objective: (1/2n)|y - X b|^2 + lambda |b|_1.
/// `warm` seeds the iteration; pass a zero vector when cold.
Eigen::VectorXd lasso_coordinate_descent(const Eigen::MatrixXd& x_std,
                                         const Eigen::VectorXd& y_centered,
                                         double lambda, Eigen::VectorXd warm,
                                         double tolerance = 1e-12,
                                         int max_sweeps = 100000);

/// Smallest lambda at which every coefficient is zero: max |X^T y| / n.
double lasso_lambda_max(const Eigen::MatrixXd& x_std,
                        const Eigen::VectorXd& y_centered);

/// Full selection: builds a 50-point log-spaced lambda path ending at
/// lambda_max, scores each lambda by 5-fold cross-validation (fold
/// assignment deterministically shuffled from the seed, refolded designs
/// re-standardized per fold), picks the lambda with the smallest CV
/// error, breaking ties toward the larger lambda, and refits on all data.
/// Constant feature columns are dropped and reported, not fitted.
LassoSelection select_features(const Eigen::MatrixXd& features,
                               const std::vector<std::string>& names,
                               const Eigen::VectorXd& targets,
                               std::uint64_t seed);

}  // namespace surfchem
