#pragma once

// Analytic single-frequency plane wave driven by a current amplitude J0.
//
// Phasor convention: every field is amplitude * exp(i(k x - nu t)) and the
// observable is the real part.  All +/-i signs below follow from that one
// choice.  The amplitudes come in redundant published forms; builders verify
// the routes against each other and fail loudly on disagreement.

#include <cmath>
#include <complex>
#include <tuple>
#include <utility>

#include "mwx/errors.hpp"
#include "mwx/mode.hpp"

namespace mwx {

using complexd = std::complex<double>;

/// Phasor amplitudes of one driven plane wave.
struct PlaneWaveAmplitudes {
    complexd J0;    // current density amplitude (input)
    complexd rho0;  // charge density, J0/vm
    complexd phi0;  // scalar potential
    complexd A0;    // vector potential, x component
    complexd F0;    // field dual to E
    complexd G0;    // field dual to B, as printed; a purely longitudinal 1D
                    // wave has curl A = 0, so the 1D solver reports G = 0
    double k = 0.0;
    double nu = 0.0;
};

/// rho0 = J0/vm (continuity on the plane-wave ansatz).
inline complexd charge_density_amplitude(complexd j0, double vm) {
    if (!(vm > 0.0))
        throw physics_error("charge_density_amplitude: vm must be positive");
    return j0 / vm;
}

namespace detail {

// Relative tolerance for the redundant amplitude routes; each involves a
// handful of floating operations, so 1e-12 leaves ample slack.
inline constexpr double route_tol = 1e-12;

inline void check_routes_agree(complexd primary, complexd alternate, const char* what) {
    double scale = std::max(std::abs(primary), std::abs(alternate));
    if (scale == 0.0) return;
    if (std::abs(primary - alternate) > route_tol * scale)
        throw std::logic_error(std::string("plane-wave amplitude routes disagree: ") + what);
}

}  // namespace detail

/// Potential amplitudes (phi0, A0):
///   A0   = eta0/k^2 * n^2/(n^2-1) * J0
///   phi0 = n*v0*A0, cross-checked against the Ohm's-law form Zf*J0/k0^2.
inline std::pair<complexd, complexd> potential_amplitudes(complexd j0,
                                                          const ConstitutiveSet& c) {
    complexd a0 = c.eta0 / (c.k * c.k) * (c.n * c.n / (c.n * c.n - 1.0)) * j0;
    complexd phi0 = c.n * c.v0 * a0;
    complexd phi0_ohm = c.Zf * j0 / (c.k0 * c.k0);
    detail::check_routes_agree(phi0, phi0_ohm, "phi0 vs Zf*J0/k0^2");
    return {phi0, a0};
}

/// Field amplitudes (F0, G0):
///   F0 = -i*Z0*J0/k0, cross-checked against i*nu*(1-n^2)*A0
///   G0 = -i*(1/nu)*|Zf|*J0
inline std::pair<complexd, complexd> field_amplitudes(complexd j0,
                                                      const ConstitutiveSet& c) {
    const complexd i(0.0, 1.0);
    complexd f0 = -i * c.Z0 * j0 / c.k0;
    complexd g0 = -i * std::abs(c.Zf) * j0 / c.drive_frequency();
    auto [phi0, a0] = potential_amplitudes(j0, c);
    (void)phi0;
    complexd f0_from_a = i * c.drive_frequency() * (1.0 - c.n * c.n) * a0;
    detail::check_routes_agree(f0, f0_from_a, "F0 vs i*nu*(1-n^2)*A0");
    return {f0, g0};
}

inline PlaneWaveAmplitudes make_plane_wave(complexd j0, const ConstitutiveSet& c) {
    PlaneWaveAmplitudes w;
    w.J0 = j0;
    w.rho0 = charge_density_amplitude(j0, c.vm);
    std::tie(w.phi0, w.A0) = potential_amplitudes(j0, c);
    std::tie(w.F0, w.G0) = field_amplitudes(j0, c);
    w.k = c.k;
    w.nu = c.drive_frequency();
    return w;
}

/// Complex point values of the wave at (x, t); observables are real parts.
struct WaveSample {
    complexd current;           // J
    complexd charge;            // rho
    complexd potential;         // phi
    complexd vector_potential;  // A_x
    complexd field;             // F
};

inline WaveSample evaluate_wave(const PlaneWaveAmplitudes& w, double x, double t) {
    complexd phase = std::exp(complexd(0.0, w.k * x - w.nu * t));
    return {w.J0 * phase, w.rho0 * phase, w.phi0 * phase, w.A0 * phase, w.F0 * phase};
}

}  // namespace mwx
