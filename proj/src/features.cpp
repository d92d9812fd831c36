#include "surfchem/features.hpp"

#include <cmath>

#include "surfchem/errors.hpp"

namespace surfchem {

namespace {

double raw_component(const InputVector& v, const std::string& name) {
  if (name == "altitude_km") return v.altitude_km;
  if (name == "x_m") return v.x_m;
  if (name == "temperature") return v.temperature;
  if (name == "total_pressure") return v.total_pressure;
  if (name == "flux_o") return v.flux_o;
  if (name == "flux_n") return v.flux_n;
  if (name == "flux_o2") return v.flux_o2;
  if (name == "conc_o") return v.conc_o;
  if (name == "conc_n") return v.conc_n;
  if (name == "conc_o2") return v.conc_o2;
  throw DomainError("unknown feature '" + name + "'");
}

}  // namespace

const std::vector<std::string>& raw_feature_names() {
  static const std::vector<std::string> names = {
      "altitude_km", "x_m",    "temperature", "total_pressure", "flux_o",
      "flux_n",      "flux_o2", "conc_o",      "conc_n",          "conc_o2"};
  return names;
}

double feature_value(const InputVector& v, const std::string& name) {
  if (name.rfind("log_", 0) == 0) {
    const double raw = raw_component(v, name.substr(4));
    if (!(raw > 0.0)) {
      throw DomainError("log feature '" + name +
                        "' undefined for non-positive value");
    }
    return std::log(raw);
  }
  return raw_component(v, name);
}

std::vector<std::string> candidate_feature_names(
    const std::vector<InputVector>& inputs) {
  std::vector<std::string> names = raw_feature_names();
  for (const std::string& raw : raw_feature_names()) {
    bool positive = !inputs.empty();
    for (const InputVector& v : inputs) {
      if (!(raw_component(v, raw) > 0.0)) {
        positive = false;
        break;
      }
    }
    if (positive) names.push_back("log_" + raw);
  }
  return names;
}

Eigen::MatrixXd feature_matrix(const std::vector<InputVector>& inputs,
                               const std::vector<std::string>& names) {
  Eigen::MatrixXd x(static_cast<Eigen::Index>(inputs.size()),
                    static_cast<Eigen::Index>(names.size()));
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      x(i, j) = feature_value(inputs[static_cast<std::size_t>(i)],
                              names[static_cast<std::size_t>(j)]);
    }
  }
  return x;
}

Standardizer Standardizer::fit(const Eigen::MatrixXd& x) {
  if (x.rows() == 0) {
    throw DomainError("cannot standardize an empty matrix");
  }
  Standardizer s;
  s.mean = x.colwise().mean();
  const auto n = static_cast<double>(x.rows());
  s.scale.resize(x.cols());
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    const double var = (x.col(j).array() - s.mean(j)).square().sum() / n;
    const double sd = std::sqrt(var);
    s.scale(j) = sd > 0.0 ? sd : 1.0;
  }
  return s;
}

Eigen::MatrixXd Standardizer::transform(const Eigen::MatrixXd& x) const {
  return (x.rowwise() - mean.transpose()).array().rowwise() /
         scale.transpose().array();
}

Eigen::MatrixXd Standardizer::inverse(const Eigen::MatrixXd& x_std) const {
  return (x_std.array().rowwise() * scale.transpose().array()).matrix()
             .rowwise() +
         mean.transpose();
}

}  // namespace surfchem
