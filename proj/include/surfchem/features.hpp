#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "surfchem/scenario.hpp"

namespace surfchem {

/// Names of the raw input-vector components, in a fixed order.
const std::vector<std::string>& raw_feature_names();

/// Value of a raw or log feature ("log_<raw name>") for one input.
/// Throws DomainError for unknown names or for a log of a non-positive
/// component.
double feature_value(const InputVector& v, const std::string& name);

/// Candidate set for feature selection: every raw component plus the log
/// of each component that is strictly positive across all inputs.
std::vector<std::string> candidate_feature_names(
    const std::vector<InputVector>& inputs);

/// Rows = inputs, columns = named features.
Eigen::MatrixXd feature_matrix(const std::vector<InputVector>& inputs,
                               const std::vector<std::string>& names);

/// Per-column affine map to zero mean and unit population variance.
/// Constant columns keep scale 1 so transform stays invertible.
struct Standardizer {
  Eigen::VectorXd mean;
  Eigen::VectorXd scale;

  static Standardizer fit(const Eigen::MatrixXd& x);
  Eigen::MatrixXd transform(const Eigen::MatrixXd& x) const;
  Eigen::MatrixXd inverse(const Eigen::MatrixXd& x_std) const;
};

}  // namespace surfchem
