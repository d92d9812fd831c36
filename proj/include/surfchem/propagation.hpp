#pragma once

#include <cstdint>
#include <vector>

#include "surfchem/pipeline.hpp"
#include "surfchem/quantiles.hpp"
#include "surfchem/scenario.hpp"

namespace surfchem {

/// Cumulative CO flux ratio: sum of the model fluxes over the sum of the
/// reference fluxes (a ratio of sums, not a mean of pointwise ratios).
/// Throws DegenerateQoiError when the reference sum is not positive and
/// DomainError on mismatched or empty lists.
double flux_ratio(const std::vector<double>& model_fluxes,
                  const std::vector<double>& hifi_fluxes);

/// Distribution of the CO flux ratio at one altitude, plus per-station
/// statistics of the enriched CO flux across the same posterior draws.
struct FluxRatioResult {
  double altitude_km = 0.0;
  double ratio_hifi = 0.0;  // reference against itself, identically 1
  double ratio_lofi = 0.0;
  std::vector<double> ratio_enriched_samples;
  SampleSummary summary;
  int failed_samples = 0;  // posterior draws whose solves did not finish
  std::vector<double> enriched_co_mean;  // one entry per station
  std::vector<double> enriched_co_q05;
  std::vector<double> enriched_co_q95;
};

struct PropagationOptions {
  int sample_count = 100;
  std::uint64_t seed = 0;
  double site_density = kSiteDensity;
};

/// Monte Carlo propagation: draws joint posterior realizations of the
/// pseudo-rate over the scenario's stations, solves the enriched model
/// per station per realization, and reduces each realization to its flux
/// ratio against the full model. Deterministic given the seed. Samples
/// that fail to solve are excluded from the ratios and counted.
FluxRatioResult propagate(const Scenario& scenario, const TrainedModel& model,
                          const PropagationOptions& options = {});

}  // namespace surfchem
