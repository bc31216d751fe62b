#include "accelres/units.hpp"

#include <numbers>

namespace accelres::units {

namespace {

void require_nonnegative_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw std::domain_error(std::string(what) + ": input must be finite");
    }
    if (v < 0.0) {
        throw std::domain_error(std::string(what) + ": input must be >= 0");
    }
}

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw std::domain_error(std::string(what) + ": input must be finite");
    }
}

}  // namespace

double elementary_charge_hl() {
    static const double e = std::sqrt(4.0 * std::numbers::pi * fine_structure);
    return e;
}

double e_bohr_dipole() {
    return elementary_charge_hl() * (bohr_radius_m / hbar_c_ev_m);
}

const char* role_name(Role role) {
    switch (role) {
        case Role::energy: return "energy";
        case Role::length: return "length";
        case Role::acceleration: return "acceleration";
        case Role::temperature: return "temperature";
    }
    return "unknown";
}

double length_si_to_natural(double meters) {
    require_nonnegative_finite(meters, "length_si_to_natural");
    return meters / hbar_c_ev_m;
}

double length_natural_to_si(double inv_ev) {
    require_nonnegative_finite(inv_ev, "length_natural_to_si");
    return inv_ev * hbar_c_ev_m;
}

double acceleration_si_to_natural(double m_per_s2) {
    require_nonnegative_finite(m_per_s2, "acceleration_si_to_natural");
    return m_per_s2 * (hbar_ev_s / c_m_per_s);
}

double acceleration_natural_to_si(double ev) {
    require_nonnegative_finite(ev, "acceleration_natural_to_si");
    return ev * (c_m_per_s / hbar_ev_s);
}

double energy_si_to_natural(double joule) {
    require_finite(joule, "energy_si_to_natural");
    return joule / joule_per_ev;
}

double energy_natural_to_si(double ev) {
    require_finite(ev, "energy_natural_to_si");
    return ev * joule_per_ev;
}

double temperature_si_to_natural(double kelvin) {
    require_nonnegative_finite(kelvin, "temperature_si_to_natural");
    return kelvin * k_boltzmann_ev_per_k;
}

double temperature_natural_to_si(double ev) {
    require_nonnegative_finite(ev, "temperature_natural_to_si");
    return ev / k_boltzmann_ev_per_k;
}

double unruh_temperature(double acceleration_ev) {
    require_nonnegative_finite(acceleration_ev, "unruh_temperature");
    return acceleration_ev / (2.0 * std::numbers::pi);
}

double unruh_temperature_si_kelvin(double acceleration_m_per_s2) {
    require_nonnegative_finite(acceleration_m_per_s2, "unruh_temperature_si_kelvin");
    return hbar_ev_s * acceleration_m_per_s2 /
           (2.0 * std::numbers::pi * k_boltzmann_ev_per_k * c_m_per_s);
}

NaturalQuantity si_to_natural(double value, Role role) {
    switch (role) {
        case Role::energy: return {energy_si_to_natural(value), role};
        case Role::length: return {length_si_to_natural(value), role};
        case Role::acceleration: return {acceleration_si_to_natural(value), role};
        case Role::temperature: return {temperature_si_to_natural(value), role};
    }
    throw std::domain_error("si_to_natural: unknown role");
}

double natural_to_si(const NaturalQuantity& q) {
    switch (q.role) {
        case Role::energy: return energy_natural_to_si(q.value);
        case Role::length: return length_natural_to_si(q.value);
        case Role::acceleration: return acceleration_natural_to_si(q.value);
        case Role::temperature: return temperature_natural_to_si(q.value);
    }
    throw std::domain_error("natural_to_si: unknown role");
}

}  // namespace accelres::units
