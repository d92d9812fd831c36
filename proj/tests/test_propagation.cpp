#include <doctest.h>

#include <cmath>
#include <vector>

#include "surfchem/errors.hpp"
#include "surfchem/pipeline.hpp"
#include "surfchem/propagation.hpp"
#include "surfchem/steady.hpp"
#include "surfchem/synthetic.hpp"

using namespace surfchem;

namespace {

/// One-altitude calibration reused across cases (training dominates the
/// test's runtime).
struct Fixture {
  Scenario scenario;
  CalibrationResult calibration;
};

const Fixture& fixture() {
  static const Fixture f = [] {
    PipelineConfig cfg;
    cfg.seed = 808;
    cfg.calibration_altitudes = {20.0};
    cfg.validation_altitudes = {35.0};
    Fixture out{generate_synthetic_scenario(cfg.seed, 20.0), {}};
    const std::vector<std::vector<double>> refs = {
        hifi_co_fluxes(out.scenario, cfg.site_density)};
    out.calibration =
        run_calibration({out.scenario}, refs, cfg);
    return out;
  }();
  return f;
}

}  // namespace

TEST_CASE("flux ratio is a ratio of sums") {
  // Asymmetric profile where the two definitions disagree: the pointwise
  // ratios are 0.5 and 2 (mean 1.25) but the cumulative ratio is 52/101.
  const std::vector<double> model = {1.0, 100.0};
  const std::vector<double> hifi = {2.0, 50.0};
  CHECK(flux_ratio(model, hifi) == doctest::Approx(101.0 / 52.0)
                                       .epsilon(1e-15));
  CHECK(flux_ratio(model, hifi) != doctest::Approx(1.25).epsilon(1e-3));
  CHECK(flux_ratio(hifi, hifi) == 1.0);
  CHECK(flux_ratio({0.5, 0.5}, {1.0, 1.0}) == 0.5);
}

TEST_CASE("flux ratio input validation") {
  CHECK_THROWS_AS(flux_ratio({}, {}), DomainError);
  CHECK_THROWS_AS(flux_ratio({1.0}, {1.0, 2.0}), DomainError);
  CHECK_THROWS_AS(flux_ratio({1.0, 1.0}, {0.0, 0.0}), DegenerateQoiError);
  CHECK_THROWS_AS(flux_ratio({1.0, 1.0}, {1.0, -2.0}), DegenerateQoiError);
}

TEST_CASE("propagation on the training altitude") {
  const Fixture& f = fixture();
  PropagationOptions opt;
  opt.sample_count = 40;
  opt.seed = 123;
  const FluxRatioResult r = propagate(f.scenario, f.calibration.model, opt);

  CHECK(r.altitude_km == 20.0);
  // The reference ratio against itself is exactly 1 (same sums).
  CHECK(r.ratio_hifi == 1.0);
  CHECK(r.ratio_lofi > 0.0);
  CHECK(r.failed_samples == 0);
  REQUIRE(static_cast<int>(r.ratio_enriched_samples.size()) == 40);
  REQUIRE(r.enriched_co_mean.size() == f.scenario.points.size());
  REQUIRE(r.enriched_co_q05.size() == f.scenario.points.size());
  REQUIRE(r.enriched_co_q95.size() == f.scenario.points.size());

  // Calibrated at this altitude: every ratio draw should hug 1 far more
  // tightly than the uncorrected reduction does.
  for (double ratio : r.ratio_enriched_samples) {
    CHECK(std::abs(ratio - 1.0) < std::abs(r.ratio_lofi - 1.0));
  }
  CHECK(r.summary.q1 <= r.summary.median);
  CHECK(r.summary.median <= r.summary.q3);
  for (std::size_t i = 0; i < r.enriched_co_mean.size(); ++i) {
    CHECK(r.enriched_co_q05[i] <= r.enriched_co_mean[i]);
    CHECK(r.enriched_co_mean[i] <= r.enriched_co_q95[i]);
  }
}

TEST_CASE("propagation is deterministic in the seed") {
  const Fixture& f = fixture();
  PropagationOptions opt;
  opt.sample_count = 15;
  opt.seed = 321;
  const FluxRatioResult a = propagate(f.scenario, f.calibration.model, opt);
  const FluxRatioResult b = propagate(f.scenario, f.calibration.model, opt);
  REQUIRE(a.ratio_enriched_samples.size() ==
          b.ratio_enriched_samples.size());
  for (std::size_t i = 0; i < a.ratio_enriched_samples.size(); ++i) {
    CHECK(a.ratio_enriched_samples[i] == b.ratio_enriched_samples[i]);
  }
  CHECK(a.summary.median == b.summary.median);

  PropagationOptions other = opt;
  other.seed = 322;
  const FluxRatioResult c = propagate(f.scenario, f.calibration.model, other);
  CHECK(c.ratio_enriched_samples[0] != a.ratio_enriched_samples[0]);
}

TEST_CASE("near-interpolating surrogate drives the ratio to one") {
  // With a tiny white-noise level the posterior collapses onto the
  // pointwise fits, which reproduce the reference fluxes; every draw of
  // the ratio must then sit within a fraction of a percent of 1. The
  // noise stays large enough for the unjittered training factorization.
  PipelineConfig cfg;
  cfg.seed = 555;
  cfg.calibration_altitudes = {30.0};
  cfg.validation_altitudes = {35.0};
  cfg.noise_variance = 1e-6;
  const Scenario s = generate_synthetic_scenario(cfg.seed, 30.0);
  const std::vector<std::vector<double>> refs = {
      hifi_co_fluxes(s, cfg.site_density)};
  const CalibrationResult cal = run_calibration({s}, refs, cfg);

  PropagationOptions opt;
  opt.sample_count = 10;
  opt.seed = 9;
  const FluxRatioResult r = propagate(s, cal.model, opt);
  for (double ratio : r.ratio_enriched_samples) {
    CHECK(ratio == doctest::Approx(1.0).epsilon(5e-3));
  }
}

TEST_CASE("too few samples to summarize") {
  const Fixture& f = fixture();
  PropagationOptions opt;
  opt.sample_count = 1;
  CHECK_THROWS_AS(propagate(f.scenario, f.calibration.model, opt),
                  SolverFailureError);
}
