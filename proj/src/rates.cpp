#include "surfchem/rates.hpp"

#include <cmath>
#include <string>

#include "surfchem/constants.hpp"
#include "surfchem/errors.hpp"

namespace surfchem {

namespace {

namespace cn = constants;

void require_domain(double temperature, double site_density) {
  if (!(temperature > 0.0)) {
    throw DomainError("temperature must be positive, got " +
                      std::to_string(temperature));
  }
  if (!(site_density > 0.0)) {
    throw DomainError("site density must be positive");
  }
}

void require_kind(const Reaction& r, ReactionKind kind) {
  if (r.kind != kind) {
    throw KindMismatchError("reaction " + r.id + " is " +
                            std::string(reaction_kind_name(r.kind)) +
                            ", expected " +
                            std::string(reaction_kind_name(kind)));
  }
}

}  // namespace

double arrhenius_factor(double e_over_r, double temperature) {
  const double arg = -e_over_r / temperature;
  return arg < -700.0 ? 0.0 : std::exp(arg);
}

double impingement_speed(Species gas, double temperature) {
  return 0.25 * std::sqrt(8.0 * cn::boltzmann * temperature /
                          (cn::pi * particle_mass(gas)));
}

double planar_thermal_speed(Species gas, double temperature) {
  return std::sqrt(cn::pi * cn::boltzmann * temperature /
                   (2.0 * particle_mass(gas)));
}

double impingement_flux(double partial_pressure, Species gas,
                        double temperature) {
  return partial_pressure /
         (cn::avogadro * std::sqrt(2.0 * cn::pi * particle_mass(gas) *
                                   cn::boltzmann * temperature));
}

double rate_adsorption(const Reaction& r, double temperature,
                       double site_density) {
  require_kind(r, ReactionKind::Adsorption);
  require_domain(temperature, site_density);
  const double denom =
      r.site_order == 2 ? site_density * site_density : site_density;
  return impingement_speed(*r.gas, temperature) / denom * r.s_or_gamma *
         arrhenius_factor(r.e_over_r, temperature);
}

double rate_desorption(const Reaction& r, double temperature,
                       double site_density) {
  require_kind(r, ReactionKind::Desorption);
  require_domain(temperature, site_density);
  const double m = particle_mass(*r.gas);
  const double kT = cn::boltzmann * temperature;
  const double h3 = cn::planck * cn::planck * cn::planck;
  const double prefactor =
      2.0 * cn::pi * m * kT * kT / (cn::avogadro * site_density * h3);
  return prefactor * arrhenius_factor(r.e_over_r, temperature);
}

double rate_eley_rideal(const Reaction& r, double temperature,
                        double site_density) {
  require_kind(r, ReactionKind::EleyRideal);
  require_domain(temperature, site_density);
  if (r.fixed_prefactor) {
    // First order in the adsorbed species only; 1/s.
    return r.s_or_gamma * arrhenius_factor(r.e_over_r, temperature);
  }
  return impingement_speed(*r.gas, temperature) / site_density *
         r.s_or_gamma * arrhenius_factor(r.e_over_r, temperature);
}

double rate_langmuir_hinshelwood(const Reaction& r, double temperature,
                                 double site_density) {
  require_kind(r, ReactionKind::LangmuirHinshelwood);
  require_domain(temperature, site_density);
  return std::sqrt(cn::avogadro / site_density) *
         planar_thermal_speed(*r.gas, temperature) * r.s_or_gamma *
         arrhenius_factor(r.e_over_r, temperature);
}

double rate_constant(const Reaction& r, double temperature,
                     double site_density) {
  switch (r.kind) {
    case ReactionKind::Adsorption:
      return rate_adsorption(r, temperature, site_density);
    case ReactionKind::Desorption:
      return rate_desorption(r, temperature, site_density);
    case ReactionKind::EleyRideal:
      return rate_eley_rideal(r, temperature, site_density);
    case ReactionKind::LangmuirHinshelwood:
      return rate_langmuir_hinshelwood(r, temperature, site_density);
    case ReactionKind::Pseudo:
      break;
  }
  throw KindMismatchError("reaction " + r.id +
                          " has no intrinsic rate constant");
}

}  // namespace surfchem
