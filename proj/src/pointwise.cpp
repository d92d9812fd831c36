#include "surfchem/pointwise.hpp"

#include <cmath>

#include "surfchem/errors.hpp"
#include "surfchem/nelder_mead.hpp"
#include "surfchem/steady.hpp"

namespace surfchem {

double pseudo_rate_from_log(double log_k3p) {
  // exp(690) stays below the double overflow threshold; exp(-700) stays
  // above the underflow-to-zero threshold.
  const double clamped = log_k3p > 690.0 ? 690.0
                         : log_k3p < -700.0 ? -700.0
                                            : log_k3p;
  return std::exp(clamped);
}

double pointwise_loss(double log_k3p, const GasState& gas,
                      double site_density, double reference_co) {
  if (!(reference_co > 0.0)) {
    throw DegenerateSigmaError(
        "reference CO flux must be positive to define the loss scale");
  }
  const EnrichmentRates rates = physics_enrichment_rates(
      gas.temperature, site_density, pseudo_rate_from_log(log_k3p));
  const SurfaceSolution sol = solve_enriched(gas, site_density, rates);
  const double sigma = 0.05 * reference_co;
  const double miss = (reference_co - sol.fluxes.co) / sigma;
  return 0.5 * miss * miss;
}

PointwiseFit fit_pointwise(const InputVector& input, const GasState& gas,
                           double site_density, double reference_co,
                           const PointwiseFitOptions& options) {
  NelderMeadOptions nm;
  nm.max_evaluations = options.max_evaluations;
  nm.simplex_tolerance = options.simplex_tolerance;
  const auto result = nelder_mead(
      [&](const std::vector<double>& x) {
        return pointwise_loss(x[0], gas, site_density, reference_co);
      },
      {{options.simplex_lo}, {options.simplex_hi}}, nm);

  PointwiseFit fit;
  fit.input = input;
  fit.log_k3p_opt = result.best[0];
  fit.loss_at_opt = result.best_value;
  fit.converged = result.converged;
  return fit;
}

}  // namespace surfchem
