#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "surfchem/errors.hpp"
#include "surfchem/pointwise.hpp"
#include "surfchem/steady.hpp"

using namespace surfchem;

namespace {

constexpr double kB = 1e-5;

GasState hot_gas() { return make_gas_state(2400.0, 4e4, 1.6e4, 9e2, 5e3); }
GasState cold_gas() { return make_gas_state(1100.0, 8e3, 4e2, 1.2e3, 2.5e3); }

double enriched_co(const GasState& gas, double log_k3p) {
  const EnrichmentRates rates = physics_enrichment_rates(
      gas.temperature, kB, pseudo_rate_from_log(log_k3p));
  return solve_enriched(gas, kB, rates).fluxes.co;
}

InputVector input_for(const GasState& gas, double altitude) {
  InputVector v;
  v.altitude_km = altitude;
  v.x_m = 0.01;
  v.temperature = gas.temperature;
  v.total_pressure = gas.total_pressure;
  v.flux_o = gas.flux_o;
  v.flux_n = gas.flux_n;
  v.flux_o2 = gas.flux_o2;
  v.conc_o = gas.conc_o;
  v.conc_n = gas.conc_n;
  v.conc_o2 = gas.conc_o2;
  return v;
}

/// Two-stage dense grid minimizer, sharing nothing with the simplex path.
double grid_minimize(const GasState& gas, double reference_co) {
  double best_x = 0.0;
  double best_v = std::numeric_limits<double>::infinity();
  const auto scan = [&](double lo, double hi, int n) {
    for (int i = 0; i <= n; ++i) {
      const double x = lo + (hi - lo) * i / n;
      const double v = pointwise_loss(x, gas, kB, reference_co);
      if (v < best_v) {
        best_v = v;
        best_x = x;
      }
    }
  };
  scan(-5.0, 25.0, 3000);
  const double step = 30.0 / 3000;
  scan(best_x - 2.0 * step, best_x + 2.0 * step, 4000);
  return best_x;
}

}  // namespace

TEST_CASE("pseudo rate guards") {
  CHECK(pseudo_rate_from_log(0.0) == 1.0);
  CHECK(pseudo_rate_from_log(std::log(12345.0)) ==
        doctest::Approx(12345.0).epsilon(1e-12));
  CHECK(pseudo_rate_from_log(-1e9) > 0.0);
  CHECK(std::isfinite(pseudo_rate_from_log(1e9)));
}

TEST_CASE("loss vanishes exactly at a perfect match") {
  const GasState gas = hot_gas();
  const double log_true = std::log(2e5);
  const double ref = enriched_co(gas, log_true);
  REQUIRE(ref > 0.0);
  CHECK(pointwise_loss(log_true, gas, kB, ref) == 0.0);
}

TEST_CASE("a five percent flux error costs one half") {
  const GasState gas = hot_gas();
  const double log_k = std::log(5e5);
  const double f = enriched_co(gas, log_k);
  // Choose the reference so the model overshoots it by exactly 5% of the
  // reference, one sigma of the Gaussian: the loss there is 1/2 exactly.
  const double ref = f / 1.05;
  CHECK(pointwise_loss(log_k, gas, kB, ref) ==
        doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("non-positive reference flux is degenerate") {
  const GasState gas = hot_gas();
  CHECK_THROWS_AS(pointwise_loss(5.0, gas, kB, 0.0), DegenerateSigmaError);
  CHECK_THROWS_AS(pointwise_loss(5.0, gas, kB, -1.0), DegenerateSigmaError);
}

TEST_CASE("loss is unimodal along the log rate axis") {
  for (const GasState& gas : {hot_gas(), cold_gas()}) {
    const double ref = enriched_co(gas, std::log(3e5));
    std::vector<double> values;
    for (int i = 0; i <= 400; ++i) {
      values.push_back(pointwise_loss(-2.0 + 24.0 * i / 400.0, gas, kB, ref));
    }
    const auto arg =
        std::min_element(values.begin(), values.end()) - values.begin();
    CHECK(arg > 0);
    CHECK(arg < 400);
    const double eps = 1e-9;
    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
      const double slack = eps * std::max(1.0, values[i]);
      if (static_cast<long>(i) < arg) {
        CHECK(values[i + 1] <= values[i] + slack);
      } else {
        CHECK(values[i + 1] >= values[i] - slack);
      }
    }
  }
}

TEST_CASE("fit recovers a known pseudo rate") {
  const GasState gas = hot_gas();
  const double log_true = std::log(8e4);
  const double ref = enriched_co(gas, log_true);
  const PointwiseFit fit =
      fit_pointwise(input_for(gas, 30.0), gas, kB, ref);
  CHECK(fit.converged);
  CHECK(fit.log_k3p_opt == doctest::Approx(log_true).epsilon(1e-4));
  CHECK(fit.loss_at_opt < 1e-10);
  CHECK(fit.input.temperature == gas.temperature);
}

TEST_CASE("simplex minimum matches a dense grid scan") {
  struct Case {
    GasState gas;
    double log_true;
  };
  const Case cases[] = {
      {hot_gas(), std::log(5e4)},
      {hot_gas(), std::log(4e6)},
      {cold_gas(), std::log(2e5)},
      {cold_gas(), std::log(9e6)},
  };
  for (const Case& c : cases) {
    const double ref = enriched_co(c.gas, c.log_true);
    const PointwiseFit fit =
        fit_pointwise(input_for(c.gas, 25.0), c.gas, kB, ref);
    const double grid = grid_minimize(c.gas, ref);
    CHECK(std::abs(fit.log_k3p_opt - grid) <= 1e-3);
  }
}

TEST_CASE("distinct gas environments give distinct fitted rates") {
  // Same surface temperature, different composition and pressure: the
  // fitted pseudo rate must separate the two states.
  const GasState a = make_gas_state(1400.0, 3e4, 9e3, 2e2, 4e3);
  const GasState b = make_gas_state(1400.0, 6e3, 4e2, 1.5e3, 8e2);
  const double ref_a = solve_hifi(a, kB).fluxes.co;
  const double ref_b = solve_hifi(b, kB).fluxes.co;
  REQUIRE(ref_a > 0.0);
  REQUIRE(ref_b > 0.0);
  const PointwiseFit fa = fit_pointwise(input_for(a, 20.0), a, kB, ref_a);
  const PointwiseFit fb = fit_pointwise(input_for(b, 40.0), b, kB, ref_b);
  CHECK(fa.converged);
  CHECK(fb.converged);
  CHECK(std::abs(fa.log_k3p_opt - fb.log_k3p_opt) > 0.1);
}

TEST_CASE("fit determinism") {
  const GasState gas = cold_gas();
  const double ref = solve_hifi(gas, kB).fluxes.co;
  const PointwiseFit a = fit_pointwise(input_for(gas, 35.0), gas, kB, ref);
  const PointwiseFit b = fit_pointwise(input_for(gas, 35.0), gas, kB, ref);
  CHECK(a.log_k3p_opt == b.log_k3p_opt);
  CHECK(a.loss_at_opt == b.loss_at_opt);
}
