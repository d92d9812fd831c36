#pragma once

#include "surfchem/reaction.hpp"
#include "surfchem/species.hpp"

namespace surfchem {

/// Arrhenius factor exp(-e_over_r / T). Arguments below -700 return
/// exactly 0 so that deeply frozen channels cannot produce subnormal noise.
double arrhenius_factor(double e_over_r, double temperature);

/// One-sided thermal impingement speed (1/4) sqrt(8 k T / (pi m)), m/s.
double impingement_speed(Species gas, double temperature);

/// In-plane thermal speed sqrt(pi k T / (2 m)) of an adsorbed species, m/s.
double planar_thermal_speed(Species gas, double temperature);

/// Incoming molar flux P / (N_A sqrt(2 pi m k T)) in mol/(m^2 s).
/// This is the single implementation used both when building gas states
/// and as the source term of the gas-phase flux balances.
double impingement_flux(double partial_pressure, Species gas,
                        double temperature);

/// Rate constants for the four surface reaction mechanisms. site_density
/// is the areal density of active sites in mol/m^2. Each function throws
/// KindMismatchError when handed a reaction of another kind and
/// DomainError for a non-positive temperature or site density.
double rate_adsorption(const Reaction& r, double temperature,
                       double site_density);
double rate_desorption(const Reaction& r, double temperature,
                       double site_density);
double rate_eley_rideal(const Reaction& r, double temperature,
                        double site_density);
double rate_langmuir_hinshelwood(const Reaction& r, double temperature,
                                 double site_density);

/// Dispatches on r.kind. Pseudo reactions have no intrinsic rate constant
/// and are rejected with KindMismatchError.
double rate_constant(const Reaction& r, double temperature,
                     double site_density);

}  // namespace surfchem
