#pragma once

#include <cstdint>
#include <utility>

#include <Eigen/Dense>

#include <json.hpp>

#include "surfchem/rng.hpp"

namespace surfchem {

struct GpConfig {
  double noise_variance = 0.005;  // fixed white-noise term
  int multistarts = 5;            // first start is all-ones lengthscales
  int max_iterations = 200;       // ascent steps per start
  std::uint64_t seed = 0;         // perturbs the extra starts
};

/// Log marginal likelihood of targets under an RBF kernel with per-axis
/// lengthscales exp(theta) plus white noise, and its gradient in theta.
/// Exposed separately so tests can difference them independently.
double gp_log_marginal(const Eigen::MatrixXd& inputs,
                       const Eigen::VectorXd& targets,
                       const Eigen::VectorXd& log_lengthscales,
                       double signal_variance, double noise_variance);
Eigen::VectorXd gp_log_marginal_gradient(const Eigen::MatrixXd& inputs,
                                         const Eigen::VectorXd& targets,
                                         const Eigen::VectorXd& log_lengthscales,
                                         double signal_variance,
                                         double noise_variance);

/// Gaussian-process regressor with an anisotropic RBF kernel and a fixed
/// white-noise level. The signal variance is pinned to the empirical
/// variance of the targets; only the lengthscales are optimized, by
/// multi-start gradient ascent on the log marginal likelihood.
class GpModel {
 public:
  GpModel() = default;

  /// inputs: n x d, already standardized by the caller; targets: n.
  static GpModel train(const Eigen::MatrixXd& inputs,
                       const Eigen::VectorXd& targets, const GpConfig& config);

  /// Posterior mean and standard deviation at one point. The variance
  /// includes the white-noise term, so it never drops below that floor.
  std::pair<double, double> predict(const Eigen::RowVectorXd& x) const;

  /// Joint posterior draw over the rows of xs: returns count x m samples
  /// from the full predictive covariance (white noise on the diagonal).
  /// Jitter is escalated through fixed steps if the covariance resists
  /// factorization; FactorizationError if all fail.
  Eigen::MatrixXd sample_joint(const Eigen::MatrixXd& xs, int count,
                               Rng& rng) const;

  double log_marginal_likelihood() const { return lml_; }
  const Eigen::VectorXd& lengthscales() const { return lengthscales_; }
  double signal_variance() const { return signal_variance_; }
  double noise_variance() const { return noise_variance_; }
  Eigen::Index training_size() const { return inputs_.rows(); }

  nlohmann::json to_json() const;
  static GpModel from_json(const nlohmann::json& j);

 private:
  void factorize();

  Eigen::MatrixXd inputs_;
  Eigen::VectorXd targets_;
  Eigen::VectorXd lengthscales_;
  double signal_variance_ = 0.0;
  double noise_variance_ = 0.0;
  double lml_ = 0.0;
  Eigen::LLT<Eigen::MatrixXd> llt_;
  Eigen::VectorXd alpha_;
};

}  // namespace surfchem
