#pragma once

#include "surfchem/gas_state.hpp"
#include "surfchem/species.hpp"

namespace surfchem {

/// Rate constants of the three placeholder reactions of the enriched
/// model. k_1p and k_2p follow the adsorption law; k_3p (1/s) is the
/// externally supplied pseudo rate.
struct EnrichmentRates {
  double k_1p = 0.0;
  double k_2p = 0.0;
  double k_3p = 0.0;
};

/// Net molar production rates of the gas-phase species, mol/(m^2 s).
/// Gas-side consumption enters negatively, and the O/N/O2 balances carry
/// the incoming impingement flux as a source term.
struct SurfaceFluxes {
  double co = 0.0;
  double co2 = 0.0;
  double o = 0.0;
  double o2 = 0.0;
  double cn = 0.0;
  double n = 0.0;
  double n2 = 0.0;
};

struct SurfaceSolution {
  Coverages coverages;         // steady adsorbed-site concentrations
  double free_sites = 0.0;     // mol/m^2
  SurfaceFluxes fluxes;
  double balance_residual = 0.0;  // site balance defect at the root
  int iterations = 0;             // bisection steps
};

/// Steady state of the full 20-reaction model.
SurfaceSolution solve_hifi(const GasState& gas, double site_density);

/// Steady state of the 6-reaction reduction (strong oxygen site only).
SurfaceSolution solve_lofi(const GasState& gas, double site_density);

/// Steady state of the reduction plus the placeholder site. With
/// k_1p = k_2p = 0 this reproduces solve_lofi exactly, including the CO
/// flux bit for bit. Throws SingularPlaceholderError when k_3p = 0 while
/// placeholder adsorption is active.
SurfaceSolution solve_enriched(const GasState& gas, double site_density,
                               const EnrichmentRates& rates);

/// Placeholder adsorption rates evaluated from the enriched reaction
/// table at the given temperature, with the pseudo rate k_3p passed
/// through unchanged.
EnrichmentRates physics_enrichment_rates(double temperature,
                                         double site_density, double k_3p);

}  // namespace surfchem
