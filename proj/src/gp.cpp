#include "surfchem/gp.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "surfchem/errors.hpp"

namespace surfchem {

namespace {

// K_f(i,j) without the noise term, from precomputed per-axis squared
// distances scaled by the current lengthscales.
Eigen::MatrixXd rbf_kernel(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                           const Eigen::VectorXd& lengthscales,
                           double signal_variance) {
  Eigen::MatrixXd k(a.rows(), b.rows());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < b.rows(); ++j) {
      double q = 0.0;
      for (Eigen::Index d = 0; d < a.cols(); ++d) {
        const double diff = (a(i, d) - b(j, d)) / lengthscales(d);
        q += diff * diff;
      }
      k(i, j) = signal_variance * std::exp(-0.5 * q);
    }
  }
  return k;
}

struct MarginalParts {
  Eigen::LLT<Eigen::MatrixXd> llt;
  Eigen::VectorXd alpha;
  Eigen::MatrixXd kernel;  // without noise
  double lml = 0.0;
};

MarginalParts marginal_parts(const Eigen::MatrixXd& inputs,
                             const Eigen::VectorXd& targets,
                             const Eigen::VectorXd& lengthscales,
                             double signal_variance, double noise_variance) {
  const Eigen::Index n = inputs.rows();
  MarginalParts parts;
  parts.kernel = rbf_kernel(inputs, inputs, lengthscales, signal_variance);
  Eigen::MatrixXd k = parts.kernel;
  k.diagonal().array() += noise_variance;
  parts.llt.compute(k);
  if (parts.llt.info() != Eigen::Success) {
    throw FactorizationError("training covariance is not positive definite");
  }
  parts.alpha = parts.llt.solve(targets);
  double log_det = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    log_det += std::log(parts.llt.matrixL()(i, i));
  }
  parts.lml = -0.5 * targets.dot(parts.alpha) - log_det -
              0.5 * static_cast<double>(n) *
                  std::log(2.0 * 3.14159265358979323846);
  return parts;
}

constexpr double kMinLogLengthscale = -6.907755278982137;  // ln 1e-3
constexpr double kMaxLogLengthscale = 9.210340371976184;   // ln 1e4

Eigen::VectorXd clamp_theta(Eigen::VectorXd theta) {
  for (Eigen::Index d = 0; d < theta.size(); ++d) {
    theta(d) = std::min(std::max(theta(d), kMinLogLengthscale),
                        kMaxLogLengthscale);
  }
  return theta;
}

}  // namespace

double gp_log_marginal(const Eigen::MatrixXd& inputs,
                       const Eigen::VectorXd& targets,
                       const Eigen::VectorXd& log_lengthscales,
                       double signal_variance, double noise_variance) {
  return marginal_parts(inputs, targets, log_lengthscales.array().exp(),
                        signal_variance, noise_variance)
      .lml;
}

Eigen::VectorXd gp_log_marginal_gradient(const Eigen::MatrixXd& inputs,
                                         const Eigen::VectorXd& targets,
                                         const Eigen::VectorXd& log_lengthscales,
                                         double signal_variance,
                                         double noise_variance) {
  const Eigen::VectorXd lengthscales = log_lengthscales.array().exp();
  const MarginalParts parts = marginal_parts(inputs, targets, lengthscales,
                                             signal_variance, noise_variance);
  const Eigen::Index n = inputs.rows();
  const Eigen::Index dims = inputs.cols();
  // A = alpha alpha^T - K^{-1}; grad_d = 1/2 sum_ij A_ij dK_ij/dtheta_d
  // with dK_ij/dtheta_d = K_f(i,j) (x_id - x_jd)^2 / l_d^2.
  const Eigen::MatrixXd k_inv =
      parts.llt.solve(Eigen::MatrixXd::Identity(n, n));
  const Eigen::MatrixXd a = parts.alpha * parts.alpha.transpose() - k_inv;
  Eigen::VectorXd grad = Eigen::VectorXd::Zero(dims);
  for (Eigen::Index d = 0; d < dims; ++d) {
    const double inv_l2 = 1.0 / (lengthscales(d) * lengthscales(d));
    double g = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        const double diff = inputs(i, d) - inputs(j, d);
        g += a(i, j) * parts.kernel(i, j) * diff * diff * inv_l2;
      }
    }
    grad(d) = 0.5 * g;
  }
  return grad;
}

GpModel GpModel::train(const Eigen::MatrixXd& inputs,
                       const Eigen::VectorXd& targets,
                       const GpConfig& config) {
  const Eigen::Index n = inputs.rows();
  if (n < 1 || targets.size() != n) {
    throw DomainError("GP training needs matching nonempty inputs/targets");
  }
  if (!(config.noise_variance > 0.0)) {
    throw DomainError("noise variance must be positive");
  }

  GpModel model;
  model.inputs_ = inputs;
  model.targets_ = targets;
  model.noise_variance_ = config.noise_variance;
  const double mean = targets.mean();
  model.signal_variance_ =
      (targets.array() - mean).square().sum() / static_cast<double>(n);

  const Eigen::Index dims = inputs.cols();
  Eigen::VectorXd best_theta = Eigen::VectorXd::Zero(dims);
  if (model.signal_variance_ > 0.0) {
    // Multi-start gradient ascent; the first start sits at lengthscale 1
    // so the returned likelihood can never fall below that baseline.
    double best_lml = -std::numeric_limits<double>::infinity();
    Rng rng(config.seed, /*stream=*/0x69b);
    for (int start = 0; start < std::max(config.multistarts, 1); ++start) {
      Eigen::VectorXd theta = Eigen::VectorXd::Zero(dims);
      if (start > 0) {
        for (Eigen::Index d = 0; d < dims; ++d) {
          theta(d) = rng.uniform(-1.5, 1.5);
        }
      }
      double lml = gp_log_marginal(inputs, targets, theta,
                                   model.signal_variance_,
                                   config.noise_variance);
      double step = 0.1;
      for (int iter = 0; iter < config.max_iterations; ++iter) {
        const Eigen::VectorXd grad = gp_log_marginal_gradient(
            inputs, targets, theta, model.signal_variance_,
            config.noise_variance);
        if (grad.cwiseAbs().maxCoeff() < 1e-7) break;
        bool accepted = false;
        for (int bt = 0; bt < 40; ++bt) {
          const Eigen::VectorXd trial = clamp_theta(theta + step * grad);
          const double trial_lml = gp_log_marginal(inputs, targets, trial,
                                                   model.signal_variance_,
                                                   config.noise_variance);
          if (trial_lml > lml) {
            theta = trial;
            lml = trial_lml;
            step = std::min(step * 1.5, 1.0);
            accepted = true;
            break;
          }
          step *= 0.5;
        }
        if (!accepted || step < 1e-12) break;
      }
      if (lml > best_lml) {
        best_lml = lml;
        best_theta = theta;
      }
    }
  }
  model.lengthscales_ = best_theta.array().exp();
  model.factorize();
  return model;
}

void GpModel::factorize() {
  const MarginalParts parts = marginal_parts(
      inputs_, targets_, lengthscales_, signal_variance_, noise_variance_);
  llt_ = parts.llt;
  alpha_ = parts.alpha;
  lml_ = parts.lml;
}

std::pair<double, double> GpModel::predict(const Eigen::RowVectorXd& x) const {
  const Eigen::MatrixXd k_star =
      rbf_kernel(inputs_, x, lengthscales_, signal_variance_);
  const double mean = k_star.col(0).dot(alpha_);
  const Eigen::VectorXd v = llt_.solve(k_star.col(0));
  const double latent =
      std::max(signal_variance_ - k_star.col(0).dot(v), 0.0);
  return {mean, std::sqrt(latent + noise_variance_)};
}

Eigen::MatrixXd GpModel::sample_joint(const Eigen::MatrixXd& xs, int count,
                                      Rng& rng) const {
  if (count < 1) {
    throw DomainError("sample count must be at least 1");
  }
  const Eigen::Index m = xs.rows();
  const Eigen::MatrixXd k_star =
      rbf_kernel(inputs_, xs, lengthscales_, signal_variance_);  // n x m
  const Eigen::MatrixXd k_pred =
      rbf_kernel(xs, xs, lengthscales_, signal_variance_);  // m x m
  const Eigen::VectorXd mean = k_star.transpose() * alpha_;
  const Eigen::MatrixXd v = llt_.solve(k_star);
  Eigen::MatrixXd cov = k_pred - k_star.transpose() * v;
  cov = 0.5 * (cov + cov.transpose());  // enforce symmetry after solves
  cov.diagonal().array() += noise_variance_;

  const double scale = std::max(cov.diagonal().maxCoeff(), 1.0);
  Eigen::LLT<Eigen::MatrixXd> llt;
  bool ok = false;
  for (double jitter : {0.0, 1e-12, 1e-10, 1e-8, 1e-6}) {
    Eigen::MatrixXd attempt = cov;
    attempt.diagonal().array() += jitter * scale;
    llt.compute(attempt);
    if (llt.info() == Eigen::Success) {
      ok = true;
      break;
    }
  }
  if (!ok) {
    throw FactorizationError(
        "predictive covariance failed factorization at all jitter levels");
  }
  const Eigen::MatrixXd l = llt.matrixL();

  Eigen::MatrixXd samples(count, m);
  Eigen::VectorXd z(m);
  for (int s = 0; s < count; ++s) {
    for (Eigen::Index i = 0; i < m; ++i) z(i) = rng.normal();
    samples.row(s) = (mean + l * z).transpose();
  }
  return samples;
}

nlohmann::json GpModel::to_json() const {
  nlohmann::json j;
  j["lengthscales"] = std::vector<double>(
      lengthscales_.data(), lengthscales_.data() + lengthscales_.size());
  j["signal_variance"] = signal_variance_;
  j["noise_variance"] = noise_variance_;
  j["log_marginal_likelihood"] = lml_;
  std::vector<std::vector<double>> rows;
  rows.reserve(static_cast<std::size_t>(inputs_.rows()));
  for (Eigen::Index i = 0; i < inputs_.rows(); ++i) {
    std::vector<double> row(static_cast<std::size_t>(inputs_.cols()));
    for (Eigen::Index c = 0; c < inputs_.cols(); ++c) {
      row[static_cast<std::size_t>(c)] = inputs_(i, c);
    }
    rows.push_back(std::move(row));
  }
  j["training_inputs"] = rows;
  j["training_targets"] = std::vector<double>(
      targets_.data(), targets_.data() + targets_.size());
  return j;
}

GpModel GpModel::from_json(const nlohmann::json& j) {
  GpModel model;
  const auto ls = j.at("lengthscales").get<std::vector<double>>();
  model.lengthscales_ =
      Eigen::Map<const Eigen::VectorXd>(ls.data(),
                                        static_cast<Eigen::Index>(ls.size()));
  model.signal_variance_ = j.at("signal_variance").get<double>();
  model.noise_variance_ = j.at("noise_variance").get<double>();
  const auto rows = j.at("training_inputs").get<std::vector<std::vector<double>>>();
  const auto ys = j.at("training_targets").get<std::vector<double>>();
  if (rows.size() != ys.size() || rows.empty()) {
    throw Error("GP artifact has inconsistent training data");
  }
  model.inputs_.resize(static_cast<Eigen::Index>(rows.size()),
                       static_cast<Eigen::Index>(rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size()) {
      throw Error("GP artifact has ragged training inputs");
    }
    model.inputs_.row(static_cast<Eigen::Index>(i)) =
        Eigen::Map<const Eigen::RowVectorXd>(
            rows[i].data(), static_cast<Eigen::Index>(rows[i].size()));
  }
  model.targets_ = Eigen::Map<const Eigen::VectorXd>(
      ys.data(), static_cast<Eigen::Index>(ys.size()));
  model.factorize();
  const double stored = j.at("log_marginal_likelihood").get<double>();
  if (std::abs(stored - model.lml_) >
      1e-6 * std::max(1.0, std::abs(stored))) {
    throw Error("GP artifact likelihood does not match its training data");
  }
  return model;
}

}  // namespace surfchem
