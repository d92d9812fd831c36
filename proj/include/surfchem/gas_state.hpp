#pragma once

namespace surfchem {

/// Gas environment at the wall, already expressed at the shifted surface
/// temperature. Only O, N and O2 react with the surface; other species
/// enter upstream through the mole-fraction split of the total pressure.
struct GasState {
  double temperature = 0.0;     // K
  double total_pressure = 0.0;  // Pa

  double pressure_o = 0.0;   // Pa
  double pressure_n = 0.0;   // Pa
  double pressure_o2 = 0.0;  // Pa

  // Incoming molar fluxes P / (N_A sqrt(2 pi m k T)), mol/(m^2 s).
  double flux_o = 0.0;
  double flux_n = 0.0;
  double flux_o2 = 0.0;

  // Molar concentrations P / (R T), mol/m^3.
  double conc_o = 0.0;
  double conc_n = 0.0;
  double conc_o2 = 0.0;
};

/// Builds a consistent GasState from partial pressures at temperature T.
/// Throws DomainError unless T > 0 and 0 <= P_i <= P_total.
GasState make_gas_state(double temperature, double total_pressure,
                        double pressure_o, double pressure_n,
                        double pressure_o2);

}  // namespace surfchem
