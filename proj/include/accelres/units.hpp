#pragma once

/// Natural-unit system (hbar = c = k_B = 1) used throughout the library.
///
/// Every internal quantity is expressed in powers of eV:
///   energy        [eV]
///   length        [eV^-1]
///   acceleration  [eV]
///   temperature   [eV]
///
/// SI appears only at the boundary, through the conversion functions below.
/// All conversion constants live in this one table so that models, oracles
/// and the CLI agree bit-for-bit.

#include <cmath>
#include <stdexcept>
#include <string>

namespace accelres::units {

// ---------------------------------------------------------------------------
// Constants table (CODATA-2018)
// ---------------------------------------------------------------------------

/// hbar * c [eV m]
inline constexpr double hbar_c_ev_m = 1.9732698e-7;

/// hbar [eV s]
inline constexpr double hbar_ev_s = 6.5821196e-16;

/// speed of light [m/s]
inline constexpr double c_m_per_s = 2.99792458e8;

/// Boltzmann constant [eV/K]
inline constexpr double k_boltzmann_ev_per_k = 8.617333262e-5;

/// 1 eV in joule
inline constexpr double joule_per_ev = 1.602176634e-19;

/// fine-structure constant
inline constexpr double fine_structure = 7.2973525693e-3;

/// Bohr radius [m]
inline constexpr double bohr_radius_m = 5.29177210903e-11;

/// elementary charge in Heaviside-Lorentz natural units, e = sqrt(4 pi alpha)
double elementary_charge_hl();

/// |e a0|, the atomic dipole scale, in natural units [eV^-1]
double e_bohr_dipole();

// ---------------------------------------------------------------------------
// Role-tagged scalar
// ---------------------------------------------------------------------------

enum class Role { energy, length, acceleration, temperature };

/// A magnitude plus the unit role it carries.  The role is a tag checked at
/// API boundaries, not a dimensional-analysis system.
struct NaturalQuantity {
    double value = 0.0;
    Role role = Role::energy;
};

const char* role_name(Role role);

// ---------------------------------------------------------------------------
// SI <-> natural conversions.  Negative or non-finite input throws
// std::domain_error; outputs are always finite.
// ---------------------------------------------------------------------------

double length_si_to_natural(double meters);          ///< m -> eV^-1
double length_natural_to_si(double inv_ev);          ///< eV^-1 -> m
double acceleration_si_to_natural(double m_per_s2);  ///< m/s^2 -> eV
double acceleration_natural_to_si(double ev);        ///< eV -> m/s^2
double energy_si_to_natural(double joule);           ///< J -> eV
double energy_natural_to_si(double ev);              ///< eV -> J
double temperature_si_to_natural(double kelvin);     ///< K -> eV
double temperature_natural_to_si(double ev);         ///< eV -> K

/// Unruh temperature a/(2 pi) in eV, a in eV.
double unruh_temperature(double acceleration_ev);

/// Unruh temperature in kelvin for an acceleration given in m/s^2.
double unruh_temperature_si_kelvin(double acceleration_m_per_s2);

/// Convert a tagged quantity from SI to natural units or back.
NaturalQuantity si_to_natural(double value, Role role);
double natural_to_si(const NaturalQuantity& q);

}  // namespace accelres::units
