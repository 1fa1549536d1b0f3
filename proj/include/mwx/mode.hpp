#pragma once

// Constitutive constants of the matter-wave analog of Maxwell's equations.
//
// A current of interacting neutral particles oscillating at drive frequency
// nu, carried by particles of kinetic (Planck-Einstein) frequency omega,
// propagates like an electromagnetic wave with the substitutions
//
//   c   -> v0  = sqrt(2*hbar*nu/m)     (limiting velocity, a floor not a cap)
//   mu0 -> eta0 = Z0/v0
//   eps0-> xi0  = 1/(Z0*v0)
//   Z   -> Zf  = -Z0 * n/(1-n^2)       (negative real for 0 < n < 1)
//
// where Z0 = hbar/q^2 is the quantum impedance and n = v0/vm = sqrt(nu/omega)
// the refractive index, typically below unity.  All functions are pure and
// throw mwx::physics_error / mwx::singularity_error on bad input.

#include <cmath>
#include <string>

#include "mwx/constants.hpp"
#include "mwx/errors.hpp"

namespace mwx {

/// How the formal interaction charge q is assigned.  The theory leaves q
/// uninterpreted; in practice it is set to 1 (impedance per particle) or to
/// the particle mass (impedance per mass).
enum class ChargeConvention { unit_charge, mass_charge };

inline double charge_for(ChargeConvention conv, double mass) {
    return conv == ChargeConvention::unit_charge ? 1.0 : mass;
}

inline const char* to_string(ChargeConvention conv) {
    return conv == ChargeConvention::unit_charge ? "unit" : "mass";
}

/// Physical inputs of a single matter-wave mode.
struct ModeSpec {
    double mass = 0.0;                // kg
    double charge = 1.0;              // interaction-strength unit, nonzero
    double hbar = hbar_si;            // J*s
    double drive_frequency = 0.0;     // nu, rad/s
    double particle_frequency = 0.0;  // omega, rad/s

    // Rejection margin around the n = 1 pole, applied to |1 - nu/omega|.
    double eps_singular = 1e-9;

    /// Throws physics_error on non-positive inputs, singularity_error when
    /// the spec sits on the n = 1 pole.
    void validate() const {
        if (!(mass > 0.0)) throw physics_error("mode: mass must be positive");
        if (charge == 0.0) throw physics_error("mode: charge must be nonzero");
        if (!(hbar > 0.0)) throw physics_error("mode: hbar must be positive");
        if (!(drive_frequency > 0.0))
            throw physics_error("mode: drive frequency nu must be positive");
        if (!(particle_frequency > 0.0))
            throw physics_error("mode: particle frequency omega must be positive");
        if (std::abs(1.0 - drive_frequency / particle_frequency) <= eps_singular)
            throw singularity_error(
                "mode: nu/omega too close to 1 (n = 1 impedance pole, field "
                "amplitudes diverge)");
    }
};

inline ModeSpec make_mode_spec(double mass, double drive_frequency,
                               double particle_frequency,
                               ChargeConvention conv = ChargeConvention::unit_charge,
                               double hbar = hbar_si) {
    ModeSpec spec;
    spec.mass = mass;
    spec.charge = charge_for(conv, mass);
    spec.hbar = hbar;
    spec.drive_frequency = drive_frequency;
    spec.particle_frequency = particle_frequency;
    spec.validate();
    return spec;
}

/// Limiting (minimum) propagation velocity v0 = sqrt(2*hbar*nu/m).
inline double limiting_velocity(double nu, double mass, double hbar) {
    if (!(nu > 0.0) || !(mass > 0.0) || !(hbar > 0.0))
        throw physics_error("limiting_velocity: nu, mass, hbar must be positive");
    return std::sqrt(2.0 * hbar * nu / mass);
}

/// Particle group velocity vm = sqrt(2*hbar*omega/m).
inline double group_velocity(double omega, double mass, double hbar) {
    if (!(omega > 0.0) || !(mass > 0.0) || !(hbar > 0.0))
        throw physics_error("group_velocity: omega, mass, hbar must be positive");
    return std::sqrt(2.0 * hbar * omega / mass);
}

/// Refractive index n = sqrt(nu/omega) = v0/vm.
inline double refractive_index(double nu, double omega) {
    if (!(nu > 0.0) || !(omega > 0.0))
        throw physics_error("refractive_index: frequencies must be positive");
    return std::sqrt(nu / omega);
}

/// Quantum impedance Z0 = hbar/q^2.
inline double quantum_impedance(double charge, double hbar) {
    if (charge == 0.0) throw physics_error("quantum_impedance: charge must be nonzero");
    if (!(hbar > 0.0)) throw physics_error("quantum_impedance: hbar must be positive");
    return hbar / (charge * charge);
}

/// Wave impedance Zf = -Z0 * n/(1-n^2).  Negative real on 0 < n < 1; positive
/// for n > 1, which lies outside the usual matter-wave regime (the caller may
/// check ConstitutiveSet::n_above_unity).
inline double wave_impedance(double z0, double n, double eps_singular = 1e-9) {
    if (!(n > 0.0)) throw physics_error("wave_impedance: n must be positive");
    double denom = 1.0 - n * n;
    if (std::abs(denom) <= eps_singular)
        throw singularity_error(
            "wave_impedance: n = 1 pole, field amplitudes diverge");
    return -z0 * n / denom;
}

/// Every derived constant of one mode.  Built by derive_constitutive(); the
/// originating ModeSpec is kept for downstream consumers (drive frequency,
/// hbar, charge).
struct ConstitutiveSet {
    ModeSpec spec;

    double v0 = 0.0;    // limiting velocity, m/s
    double vm = 0.0;    // group velocity, m/s
    double n = 0.0;     // refractive index
    double k = 0.0;     // wavenumber of the driven wave, rad/m
    double k0 = 0.0;    // basic wavenumber nu/v0, rad/m
    double Z0 = 0.0;    // quantum impedance hbar/q^2
    double Zf = 0.0;    // wave impedance, negative real for n < 1
    double eta0 = 0.0;  // permeability dual, Z0/v0
    double eta = 0.0;   // eta0 * n^2/(1-n^2)
    double xi0 = 0.0;   // permittivity dual, 1/(Z0*v0)
    double xi = 0.0;    // xi0 * (1-n^2)

    // n > 1 means vm < v0: accepted, but flagged as outside the paper's
    // typical regime (Zf turns positive).
    bool n_above_unity = false;

    double drive_frequency() const { return spec.drive_frequency; }
    double hbar() const { return spec.hbar; }
    double charge() const { return spec.charge; }
};

inline ConstitutiveSet derive_constitutive(const ModeSpec& spec) {
    spec.validate();
    ConstitutiveSet c;
    c.spec = spec;
    c.v0 = limiting_velocity(spec.drive_frequency, spec.mass, spec.hbar);
    c.vm = group_velocity(spec.particle_frequency, spec.mass, spec.hbar);
    c.n = refractive_index(spec.drive_frequency, spec.particle_frequency);
    c.Z0 = quantum_impedance(spec.charge, spec.hbar);
    c.Zf = wave_impedance(c.Z0, c.n, spec.eps_singular);
    c.eta0 = c.Z0 / c.v0;
    c.xi0 = 1.0 / (c.Z0 * c.v0);
    c.eta = c.eta0 * c.n * c.n / (1.0 - c.n * c.n);
    c.xi = c.xi0 * (1.0 - c.n * c.n);
    c.k0 = spec.drive_frequency / c.v0;
    c.k = c.n * c.k0;
    c.n_above_unity = c.n > 1.0;
    return c;
}

}  // namespace mwx
