#pragma once

// Physical constants (CODATA 2018, SI units).

namespace qndet::constants {

inline constexpr double speed_of_light = 299792458.0;           // m / s
inline constexpr double elementary_charge = 1.602176634e-19;    // C
inline constexpr double vacuum_permittivity = 8.8541878128e-12; // F / m
inline constexpr double electron_mass = 9.1093837015e-31;       // kg

}  // namespace qndet::constants
