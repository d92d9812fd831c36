#include "surfchem/detrend.hpp"

#include <cmath>

#include "surfchem/errors.hpp"

namespace surfchem {

const std::vector<std::string>& DetrendModel::regressor_names() {
  static const std::vector<std::string> names = {"log_temperature",
                                                 "log_total_pressure",
                                                 "conc_n"};
  return names;
}

Eigen::Vector3d DetrendModel::regressors(const InputVector& v) {
  if (!(v.temperature > 0.0) || !(v.total_pressure > 0.0)) {
    throw DomainError("detrend regressors need positive T and P");
  }
  return {std::log(v.temperature), std::log(v.total_pressure), v.conc_n};
}

double DetrendModel::evaluate(const InputVector& v) const {
  return intercept + coefficients.dot(regressors(v));
}

DetrendModel fit_detrend(const std::vector<InputVector>& inputs,
                         const std::vector<double>& targets) {
  const auto n = static_cast<Eigen::Index>(inputs.size());
  if (n < 4) {
    throw DomainError("detrend fit needs at least 4 rows");
  }
  if (inputs.size() != targets.size()) {
    throw DomainError("inputs and targets differ in length");
  }
  Eigen::MatrixXd design(n, 4);
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    design(i, 0) = 1.0;
    design.row(i).segment(1, 3) =
        DetrendModel::regressors(inputs[static_cast<std::size_t>(i)])
            .transpose();
    y(i) = targets[static_cast<std::size_t>(i)];
  }

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  // Column scales differ wildly (1 vs log P ~ 11 vs c_N ~ 1e-6), so judge
  // rank on mutually scaled pivots rather than Eigen's default.
  qr.setThreshold(1e-10);
  if (qr.rank() < 4) {
    const auto perm = qr.colsPermutation().indices();
    std::string dependent;
    for (Eigen::Index k = qr.rank(); k < 4; ++k) {
      if (!dependent.empty()) dependent += ", ";
      const Eigen::Index col = perm(k);
      dependent += col == 0 ? "intercept"
                            : DetrendModel::regressor_names()
                                  [static_cast<std::size_t>(col - 1)];
    }
    throw CollinearDesignError("detrend design is rank deficient; dependent: " +
                               dependent);
  }

  const Eigen::Vector4d beta = qr.solve(y);
  DetrendModel model;
  model.intercept = beta(0);
  model.coefficients = beta.tail(3);
  return model;
}

std::vector<double> detrend_residuals(const DetrendModel& model,
                                      const std::vector<InputVector>& inputs,
                                      const std::vector<double>& targets) {
  if (inputs.size() != targets.size()) {
    throw DomainError("inputs and targets differ in length");
  }
  std::vector<double> out(targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i) {
    out[i] = targets[i] - model.evaluate(inputs[i]);
  }
  return out;
}

}  // namespace surfchem
