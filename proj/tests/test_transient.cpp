#include <doctest.h>

#include <cmath>

#include "surfchem/errors.hpp"
#include "surfchem/gas_state.hpp"
#include "surfchem/transient.hpp"

using namespace surfchem;

namespace {

constexpr double kB = 1e-5;

GasState sample_gas() { return make_gas_state(1800.0, 2e4, 7e3, 4e2, 1.1e4); }

}  // namespace

TEST_CASE("relaxation reaches a stationary point") {
  const GasState gas = sample_gas();
  for (SurfaceModel model :
       {SurfaceModel::Hifi, SurfaceModel::Lofi, SurfaceModel::Enriched}) {
    const EnrichmentRates rates =
        model == SurfaceModel::Enriched
            ? physics_enrichment_rates(gas.temperature, kB, 3e5)
            : EnrichmentRates{};
    const RelaxResult r = relax_to_steady(model, gas, kB, rates);
    CHECK(r.steps > 0);
    CHECK(r.max_rate <= 1e-8 * kB);
    CHECK(r.free_sites > 0.0);
    CHECK(r.free_sites + r.coverages.sum() == doctest::Approx(kB).epsilon(1e-12));
  }
}

TEST_CASE("a bare surface under inert gas stays bare") {
  // Zero reactive partial pressures: every adsorption source vanishes, so
  // zero coverage is already stationary.
  const GasState gas = make_gas_state(1500.0, 1e4, 0.0, 0.0, 0.0);
  const RelaxResult r = relax_to_steady(SurfaceModel::Hifi, gas, kB);
  CHECK(r.coverages.weak_o == 0.0);
  CHECK(r.coverages.strong_o == 0.0);
  CHECK(r.coverages.nitrogen == 0.0);
  CHECK(r.free_sites == kB);
}

TEST_CASE("tightening the stationarity tolerance does not move the answer") {
  // The Newton polish after the march pins the answer regardless of the
  // integration exit threshold.
  const GasState gas = sample_gas();
  const RelaxResult coarse =
      relax_to_steady(SurfaceModel::Hifi, gas, kB, {}, 1e-6);
  const RelaxResult fine =
      relax_to_steady(SurfaceModel::Hifi, gas, kB, {}, 1e-8);
  CHECK(coarse.coverages.weak_o ==
        doctest::Approx(fine.coverages.weak_o).epsilon(1e-9));
  CHECK(coarse.coverages.strong_o ==
        doctest::Approx(fine.coverages.strong_o).epsilon(1e-9));
  CHECK(coarse.coverages.nitrogen ==
        doctest::Approx(fine.coverages.nitrogen).epsilon(1e-9));
}

TEST_CASE("domain and configuration errors") {
  const GasState gas = sample_gas();
  CHECK_THROWS_AS(relax_to_steady(SurfaceModel::Hifi, gas, 0.0), DomainError);
  CHECK_THROWS_AS(relax_to_steady(SurfaceModel::Hifi, gas, -1e-5),
                  DomainError);
  // Placeholder adsorption with no consumption channel has no steady
  // state: coverage grows until the surface is full.
  EnrichmentRates rates = physics_enrichment_rates(gas.temperature, kB, 0.0);
  CHECK_THROWS_AS(relax_to_steady(SurfaceModel::Enriched, gas, kB, rates),
                  SingularPlaceholderError);
}
