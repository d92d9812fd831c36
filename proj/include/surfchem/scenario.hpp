#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "surfchem/gas_state.hpp"

namespace surfchem {

/// Surface temperatures are the incoming raw values minus this shift,
/// which models the temperature drop across the reacting boundary layer.
inline constexpr double kTemperatureShift = 1000.0;

/// Number of arc-length stations per scenario.
inline constexpr int kScenarioPoints = 72;

/// Arc length of the instrumented surface, m.
inline constexpr double kSurfaceLength = 0.25;

/// Areal density of active surface sites, mol/m^2.
inline constexpr double kSiteDensity = 1e-5;

/// One station of a flow-field extraction along the surface.
struct ScenarioPoint {
  double altitude_km = 0.0;
  double x_m = 0.0;              // arc position in [0, kSurfaceLength]
  double raw_temperature = 0.0;  // K, must exceed kTemperatureShift
  double total_pressure = 0.0;   // Pa
  // Species mass densities, kg/m^3.
  double rho_o = 0.0;
  double rho_o2 = 0.0;
  double rho_n = 0.0;
  double rho_n2 = 0.0;
  double rho_no = 0.0;
};

/// A full trajectory slice: 72 stations at one altitude.
struct Scenario {
  double altitude_km = 0.0;
  std::string label;  // "calibration" or "validation"
  std::uint64_t seed = 0;
  std::vector<ScenarioPoint> points;
};

struct PartialPressures {
  double o = 0.0;
  double o2 = 0.0;
  double n = 0.0;
  double n2 = 0.0;
  double no = 0.0;

  double sum() const { return o + o2 + n + n2 + no; }
};

/// Model inputs of one station: the coordinates plus the derived fluxes
/// and concentrations of the reacting species at the shifted temperature.
struct InputVector {
  double altitude_km = 0.0;
  double x_m = 0.0;
  double temperature = 0.0;     // shifted, K
  double total_pressure = 0.0;  // Pa
  double flux_o = 0.0;
  double flux_n = 0.0;
  double flux_o2 = 0.0;
  double conc_o = 0.0;
  double conc_n = 0.0;
  double conc_o2 = 0.0;
};

/// Splits the total pressure by mole fraction: c = rho/M per species,
/// chi = c/sum(c), P = chi * P_total. The five partial pressures sum to
/// the total exactly up to rounding. Throws DegenerateMixtureError when
/// every density is zero and DomainError for negative inputs.
PartialPressures densities_to_partial_pressures(const ScenarioPoint& p);

/// Gas environment at the shifted temperature. N2 and NO enter only
/// through the mole-fraction split. Throws DomainError when the shifted
/// temperature is not positive.
GasState build_gas_state(const ScenarioPoint& p);

/// Assembles the learning inputs for one station.
InputVector build_input_vector(const ScenarioPoint& p);

/// Enforces the scenario shape: exactly kScenarioPoints stations with
/// strictly increasing x in [0, kSurfaceLength], consistent altitude,
/// temperatures above the shift, nonnegative densities and pressures.
void validate_scenario(const Scenario& s);

/// Scenario files: a CSV of stations plus a JSON sidecar
/// ("<csv path>.meta.json") carrying schema version, altitude, label and
/// generator seed. Writers refuse to overwrite unless told otherwise at
/// the call site; readers reject missing or mismatched schema versions.
void write_scenario(const Scenario& s, const std::filesystem::path& csv_path);
Scenario read_scenario(const std::filesystem::path& csv_path);

/// Minimal numeric table used by results writers: fixed header, rows of
/// doubles serialized with round-trip precision.
struct NumericTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

void write_table(const NumericTable& t, const std::filesystem::path& path);
NumericTable read_table(const std::filesystem::path& path);

}  // namespace surfchem
