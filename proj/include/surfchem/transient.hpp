#pragma once

#include "surfchem/gas_state.hpp"
#include "surfchem/species.hpp"
#include "surfchem/steady.hpp"

namespace surfchem {

enum class SurfaceModel { Hifi, Lofi, Enriched };

struct RelaxResult {
  Coverages coverages;
  double free_sites = 0.0;
  int steps = 0;          // accepted time steps
  double max_rate = 0.0;  // largest |d coverage/dt| at exit, mol/(m^2 s)
};

/// Integrates the surface-species ODEs from zero coverage to
/// stationarity (max |d coverage/dt| below rate_tol_factor * site_density
/// per second, then a Newton polish of the stationary point).
///
/// The right-hand sides are written reaction term by reaction term and
/// the march is an adaptive implicit (backward Euler) integration, so
/// this path shares nothing with the closed-form coverage expressions or
/// the site-balance bisection it is used to verify.
RelaxResult relax_to_steady(SurfaceModel model, const GasState& gas,
                            double site_density,
                            const EnrichmentRates& rates = {},
                            double rate_tol_factor = 1e-8);

}  // namespace surfchem
