#pragma once

namespace surfchem::constants {

// CODATA 2018 exact values.
inline constexpr double boltzmann = 1.380649e-23;  // J/K
inline constexpr double avogadro = 6.02214076e23;  // 1/mol
inline constexpr double planck = 6.62607015e-34;   // J s

// R = N_A * k_b holds exactly with the values above.
inline constexpr double gas_constant = avogadro * boltzmann;  // J/(mol K)

inline constexpr double pi = 3.14159265358979323846;

}  // namespace surfchem::constants
