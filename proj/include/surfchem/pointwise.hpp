#pragma once

#include <vector>

#include "surfchem/gas_state.hpp"
#include "surfchem/scenario.hpp"

namespace surfchem {

/// Result of fitting the pseudo-reaction rate at one scenario point.
struct PointwiseFit {
  InputVector input;
  double log_k3p_opt = 0.0;  // natural log of the fitted rate, 1/s units
  double loss_at_opt = 0.0;
  bool converged = false;
};

struct PointwiseFitOptions {
  double simplex_lo = 5.0;  // initial simplex vertices in log space
  double simplex_hi = 10.0;
  int max_evaluations = 500;
  double simplex_tolerance = 1e-8;
};

/// The pseudo rate evaluated from its log with overflow/underflow guards:
/// the clamp keeps exp finite and nonzero so the solver never sees the
/// singular k_3p = 0 configuration while the optimizer roams.
double pseudo_rate_from_log(double log_k3p);

/// Gaussian negative log-likelihood of the reference CO flux under the
/// enriched model: (f_ref - f_en)^2 / (2 sigma^2) with sigma = 5% of the
/// reference flux. The placeholder adsorption rates are the physical
/// ones at the gas temperature. Throws DegenerateSigmaError when the
/// reference flux is not positive.
double pointwise_loss(double log_k3p, const GasState& gas,
                      double site_density, double reference_co);

/// Minimizes pointwise_loss over log k_3p with a 1-D downhill simplex.
/// The enriched CO flux is continuous and strictly increasing in k_3p
/// (it sweeps from a placeholder-crowded surface producing nothing up to
/// the adsorption-limited ceiling), so the loss has a unique interior
/// minimum whenever the reference flux lies in that range.
PointwiseFit fit_pointwise(const InputVector& input, const GasState& gas,
                           double site_density, double reference_co,
                           const PointwiseFitOptions& options = {});

}  // namespace surfchem
