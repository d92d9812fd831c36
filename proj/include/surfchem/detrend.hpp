#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "surfchem/scenario.hpp"

namespace surfchem {

/// Linear trend of the pointwise log-rates over (log T, log P_total,
/// c_N). Subtracted before GP training so the GP models only residual
/// structure.
struct DetrendModel {
  double intercept = 0.0;
  Eigen::Vector3d coefficients = Eigen::Vector3d::Zero();

  /// Names of the regressors, in coefficient order.
  static const std::vector<std::string>& regressor_names();

  /// Regressor row (log T, log P_total, conc_N) for one input.
  static Eigen::Vector3d regressors(const InputVector& v);

  double evaluate(const InputVector& v) const;
};

/// Least-squares fit of targets on the three regressors plus intercept.
/// Throws CollinearDesignError naming the dependent columns when the
/// design is rank deficient, and DomainError for fewer than 4 rows.
DetrendModel fit_detrend(const std::vector<InputVector>& inputs,
                         const std::vector<double>& targets);

/// Residuals targets - trend(inputs).
std::vector<double> detrend_residuals(const DetrendModel& model,
                                      const std::vector<InputVector>& inputs,
                                      const std::vector<double>& targets);

}  // namespace surfchem
