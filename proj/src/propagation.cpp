#include "surfchem/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "surfchem/errors.hpp"
#include "surfchem/parallel.hpp"
#include "surfchem/steady.hpp"

namespace surfchem {

double flux_ratio(const std::vector<double>& model_fluxes,
                  const std::vector<double>& hifi_fluxes) {
  if (model_fluxes.empty() || model_fluxes.size() != hifi_fluxes.size()) {
    throw DomainError("flux lists must be nonempty and the same length");
  }
  double model_sum = 0.0;
  double hifi_sum = 0.0;
  for (std::size_t i = 0; i < model_fluxes.size(); ++i) {
    model_sum += model_fluxes[i];
    hifi_sum += hifi_fluxes[i];
  }
  if (!(hifi_sum > 0.0)) {
    throw DegenerateQoiError("reference CO flux sum is not positive");
  }
  return model_sum / hifi_sum;
}

FluxRatioResult propagate(const Scenario& scenario, const TrainedModel& model,
                          const PropagationOptions& options) {
  validate_scenario(scenario);
  if (options.sample_count < 1) {
    throw DomainError("sample count must be at least 1");
  }

  const std::size_t n = scenario.points.size();
  std::vector<InputVector> inputs(n);
  std::vector<GasState> gases;
  gases.reserve(n);
  std::vector<double> hifi_co(n);
  std::vector<double> lofi_co(n);
  for (std::size_t i = 0; i < n; ++i) {
    inputs[i] = build_input_vector(scenario.points[i]);
    gases.push_back(build_gas_state(scenario.points[i]));
    hifi_co[i] = solve_hifi(gases[i], options.site_density).fluxes.co;
    lofi_co[i] = solve_lofi(gases[i], options.site_density).fluxes.co;
  }

  FluxRatioResult result;
  result.altitude_km = scenario.altitude_km;
  result.ratio_hifi = flux_ratio(hifi_co, hifi_co);
  result.ratio_lofi = flux_ratio(lofi_co, hifi_co);

  Rng rng(options.seed, /*stream=*/scenario.seed ^ 0x40b5);
  const Eigen::MatrixXd draws =
      model.sample_log_k3p(inputs, options.sample_count, rng);

  const std::size_t count = static_cast<std::size_t>(options.sample_count);
  std::vector<double> ratios(count, 0.0);
  std::vector<char> ok(count, 0);
  std::vector<std::vector<double>> fluxes(count);
  parallel_for(count, [&](std::size_t s) {
    std::vector<double> enriched_co(n);
    try {
      for (std::size_t j = 0; j < n; ++j) {
        const double k3p =
            pseudo_rate_from_log(draws(static_cast<Eigen::Index>(s),
                                       static_cast<Eigen::Index>(j)));
        const EnrichmentRates rates = physics_enrichment_rates(
            gases[j].temperature, options.site_density, k3p);
        enriched_co[j] =
            solve_enriched(gases[j], options.site_density, rates).fluxes.co;
      }
    } catch (const SolverFailureError&) {
      return;  // leave ok[s] unset; counted below
    }
    ratios[s] = flux_ratio(enriched_co, hifi_co);
    fluxes[s] = std::move(enriched_co);
    ok[s] = 1;
  });

  for (std::size_t s = 0; s < count; ++s) {
    if (ok[s]) {
      result.ratio_enriched_samples.push_back(ratios[s]);
    } else {
      ++result.failed_samples;
    }
  }
  if (result.ratio_enriched_samples.size() < 2) {
    throw SolverFailureError(
        "too few successful posterior samples to summarize", 0.0, 0.0);
  }
  result.summary = summarize(result.ratio_enriched_samples);

  result.enriched_co_mean.resize(n);
  result.enriched_co_q05.resize(n);
  result.enriched_co_q95.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> station;
    station.reserve(count);
    for (std::size_t s = 0; s < count; ++s) {
      if (ok[s]) station.push_back(fluxes[s][j]);
    }
    std::sort(station.begin(), station.end());
    double sum = 0.0;
    for (double f : station) sum += f;
    result.enriched_co_mean[j] = sum / static_cast<double>(station.size());
    result.enriched_co_q05[j] = quantile_sorted(station, 0.05);
    result.enriched_co_q95[j] = quantile_sorted(station, 0.95);
  }
  return result;
}

}  // namespace surfchem
