#include "surfchem/gas_state.hpp"

#include <string>

#include "surfchem/constants.hpp"
#include "surfchem/errors.hpp"
#include "surfchem/rates.hpp"

namespace surfchem {

GasState make_gas_state(double temperature, double total_pressure,
                        double pressure_o, double pressure_n,
                        double pressure_o2) {
  if (!(temperature > 0.0)) {
    throw DomainError("gas temperature must be positive, got " +
                      std::to_string(temperature));
  }
  if (!(total_pressure >= 0.0)) {
    throw DomainError("total pressure must be non-negative");
  }
  for (double p : {pressure_o, pressure_n, pressure_o2}) {
    if (!(p >= 0.0) || p > total_pressure) {
      throw DomainError("partial pressure outside [0, P_total]");
    }
  }

  GasState g;
  g.temperature = temperature;
  g.total_pressure = total_pressure;
  g.pressure_o = pressure_o;
  g.pressure_n = pressure_n;
  g.pressure_o2 = pressure_o2;
  g.flux_o = impingement_flux(pressure_o, Species::O, temperature);
  g.flux_n = impingement_flux(pressure_n, Species::N, temperature);
  g.flux_o2 = impingement_flux(pressure_o2, Species::O2, temperature);
  const double rt = constants::gas_constant * temperature;
  g.conc_o = pressure_o / rt;
  g.conc_n = pressure_n / rt;
  g.conc_o2 = pressure_o2 / rt;
  return g;
}

}  // namespace surfchem
