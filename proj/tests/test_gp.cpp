#include <doctest.h>

#include <cmath>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "surfchem/errors.hpp"
#include "surfchem/gp.hpp"
#include "surfchem/rng.hpp"

using namespace surfchem;

namespace {

/// Small smooth training set on two standardized axes.
struct Dataset {
  Eigen::MatrixXd x;
  Eigen::VectorXd y;
};

Dataset smooth_dataset(int n = 24) {
  Rng rng(3141, 0);
  Eigen::MatrixXd x(n, 2);
  Eigen::VectorXd y(n);
  for (int i = 0; i < n; ++i) {
    x(i, 0) = rng.uniform(-2.0, 2.0);
    x(i, 1) = rng.uniform(-2.0, 2.0);
    y(i) = std::sin(1.3 * x(i, 0)) + 0.5 * std::cos(0.7 * x(i, 1));
  }
  y.array() -= y.mean();
  return {x, y};
}

double population_variance(const Eigen::VectorXd& y) {
  const double m = y.mean();
  return (y.array() - m).square().sum() / y.size();
}

}  // namespace

TEST_CASE("single-point posterior shrinks by the noise ratio") {
  // With one training point the posterior mean at that point is the
  // classic shrinkage y * sf2 / (sf2 + noise). The signal variance of a
  // single target is zero, so use two symmetric far-apart points instead:
  // at +-L with negligible cross-covariance each behaves like the
  // one-point case.
  Eigen::MatrixXd x(2, 1);
  x << -50.0, 50.0;
  Eigen::VectorXd y(2);
  y << -1.0, 1.0;
  GpConfig cfg;
  cfg.seed = 5;
  const GpModel gp = GpModel::train(x, y, cfg);
  const double sf2 = gp.signal_variance();
  CHECK(sf2 == doctest::Approx(population_variance(y)).epsilon(1e-14));

  const auto [mean, sd] = gp.predict(x.row(0));
  CHECK(mean == doctest::Approx(-sf2 / (sf2 + 0.005)).epsilon(1e-9));
  // Latent variance sf2 - sf2^2/(sf2+noise), plus the noise floor.
  const double latent = sf2 - sf2 * sf2 / (sf2 + 0.005);
  CHECK(sd * sd == doctest::Approx(latent + 0.005).epsilon(1e-9));
}

TEST_CASE("far from the data the prior takes over") {
  const Dataset d = smooth_dataset();
  GpConfig cfg;
  cfg.seed = 11;
  const GpModel gp = GpModel::train(d.x, d.y, cfg);
  Eigen::RowVectorXd far(2);
  far << 1e6, -1e6;
  const auto [mean, sd] = gp.predict(far);
  CHECK(std::abs(mean) <= 1e-6);
  CHECK(sd * sd == doctest::Approx(gp.signal_variance() + 0.005)
                       .epsilon(1e-6));
}

TEST_CASE("predictive variance never drops below the noise floor") {
  const Dataset d = smooth_dataset();
  GpConfig cfg;
  cfg.seed = 12;
  const GpModel gp = GpModel::train(d.x, d.y, cfg);
  for (int i = 0; i < d.x.rows(); ++i) {
    const auto [mean, sd] = gp.predict(d.x.row(i));
    CHECK(sd * sd >= 0.005 - 1e-12);
    // Near-interpolation at the training points.
    CHECK(std::abs(mean - d.y(i)) <= 3.0 * std::sqrt(0.005));
  }
}

TEST_CASE("likelihood gradient matches central differences") {
  const Dataset d = smooth_dataset(16);
  const double sf2 = population_variance(d.y);
  Eigen::VectorXd theta(2);
  theta << 0.3, -0.4;
  const Eigen::VectorXd grad =
      gp_log_marginal_gradient(d.x, d.y, theta, sf2, 0.005);
  const double h = 1e-5;
  for (int j = 0; j < 2; ++j) {
    Eigen::VectorXd tp = theta;
    Eigen::VectorXd tm = theta;
    tp(j) += h;
    tm(j) -= h;
    const double fd = (gp_log_marginal(d.x, d.y, tp, sf2, 0.005) -
                       gp_log_marginal(d.x, d.y, tm, sf2, 0.005)) /
                      (2.0 * h);
    CHECK(grad(j) == doctest::Approx(fd).epsilon(1e-5));
  }
}

TEST_CASE("optimization never loses to the all-ones start") {
  const Dataset d = smooth_dataset();
  const double sf2 = population_variance(d.y);
  const double init = gp_log_marginal(
      d.x, d.y, Eigen::VectorXd::Zero(2), sf2, 0.005);
  GpConfig cfg;
  cfg.seed = 13;
  const GpModel gp = GpModel::train(d.x, d.y, cfg);
  CHECK(gp.log_marginal_likelihood() >= init - 1e-9);
  // Lengthscales respect the clamp box (up to exp/log rounding).
  for (int j = 0; j < 2; ++j) {
    CHECK(gp.lengthscales()(j) >= 0.999999e-3);
    CHECK(gp.lengthscales()(j) <= 1.000001e4);
  }
}

TEST_CASE("training is deterministic in the seed") {
  const Dataset d = smooth_dataset();
  GpConfig cfg;
  cfg.seed = 14;
  const GpModel a = GpModel::train(d.x, d.y, cfg);
  const GpModel b = GpModel::train(d.x, d.y, cfg);
  CHECK(a.log_marginal_likelihood() == b.log_marginal_likelihood());
  CHECK((a.lengthscales() - b.lengthscales()).isZero(0.0));
}

TEST_CASE("joint sampling: determinism, mean, and noise scale") {
  const Dataset d = smooth_dataset();
  GpConfig cfg;
  cfg.seed = 15;
  const GpModel gp = GpModel::train(d.x, d.y, cfg);

  Eigen::MatrixXd xs(3, 2);
  xs << 0.1, 0.2,
        0.1, 0.2,   // duplicated row: same latent value, independent noise
        -1.0, 0.5;

  Rng r1(99, 1);
  Rng r2(99, 1);
  const Eigen::MatrixXd s1 = gp.sample_joint(xs, 4, r1);
  const Eigen::MatrixXd s2 = gp.sample_joint(xs, 4, r2);
  REQUIRE(s1.rows() == 4);
  REQUIRE(s1.cols() == 3);
  CHECK((s1 - s2).isZero(0.0));

  // Large-sample statistics: mean matches predict, duplicated rows differ
  // only by the white noise.
  const int big = 20000;
  Rng r3(99, 2);
  const Eigen::MatrixXd s = gp.sample_joint(xs, big, r3);
  const auto [mean0, sd0] = gp.predict(xs.row(0));
  const double sample_mean = s.col(0).mean();
  const double se = sd0 / std::sqrt(static_cast<double>(big));
  CHECK(std::abs(sample_mean - mean0) <= 4.0 * se);

  const Eigen::VectorXd diff = s.col(0) - s.col(1);
  const double diff_var =
      (diff.array() - diff.mean()).square().sum() / big;
  // Var of the difference of two draws sharing the latent value is twice
  // the noise. Allow a generous sampling band.
  CHECK(diff_var > 0.5 * 2.0 * 0.005);
  CHECK(diff_var < 2.0 * 2.0 * 0.005);
}

TEST_CASE("JSON round-trip preserves predictions bit for bit") {
  const Dataset d = smooth_dataset();
  GpConfig cfg;
  cfg.seed = 16;
  const GpModel gp = GpModel::train(d.x, d.y, cfg);
  const GpModel back = GpModel::from_json(gp.to_json());

  CHECK(back.log_marginal_likelihood() == gp.log_marginal_likelihood());
  CHECK((back.lengthscales() - gp.lengthscales()).isZero(0.0));
  Eigen::RowVectorXd q(2);
  q << 0.37, -0.81;
  const auto [m1, s1] = gp.predict(q);
  const auto [m2, s2] = back.predict(q);
  CHECK(m1 == m2);
  CHECK(s1 == s2);

  // Tampered targets must fail the stored-likelihood consistency check.
  nlohmann::json j = gp.to_json();
  j["training_targets"][0] =
      static_cast<double>(j["training_targets"][0]) + 0.5;
  CHECK_THROWS_AS(GpModel::from_json(j), Error);
}

TEST_CASE("degenerate targets skip optimization") {
  Eigen::MatrixXd x(5, 1);
  x << 0.0, 1.0, 2.0, 3.0, 4.0;
  Eigen::VectorXd y = Eigen::VectorXd::Zero(5);
  GpConfig cfg;
  const GpModel gp = GpModel::train(x, y, cfg);
  CHECK(gp.signal_variance() == 0.0);
  const auto [mean, sd] = gp.predict(x.row(2));
  CHECK(mean == 0.0);
  CHECK(sd * sd == doctest::Approx(0.005).epsilon(1e-12));
}

TEST_CASE("training input validation") {
  Eigen::MatrixXd x(3, 1);
  x << 0.0, 1.0, 2.0;
  Eigen::VectorXd y(2);
  y << 1.0, 2.0;
  GpConfig cfg;
  CHECK_THROWS_AS(GpModel::train(x, y, cfg), DomainError);
  Eigen::VectorXd y3(3);
  y3 << 1.0, 2.0, 3.0;
  cfg.noise_variance = 0.0;
  CHECK_THROWS_AS(GpModel::train(x, y3, cfg), DomainError);
}
