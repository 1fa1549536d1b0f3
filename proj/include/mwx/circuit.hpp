#pragma once

// Matter-wave circuit layer: voltage/current duals over an effective area,
// gauge-field power and particle flux, step-index reflection, and ABCD
// two-port lines.  Power convention throughout: P = Re(V * conj(I)) / 2 with
// peak (not RMS) amplitudes.
//
// The two-port algebra accepts negative-real characteristic impedances (the
// matter-wave branch) as well as positive ones (the electromagnetic analogy).

#include <array>
#include <cmath>
#include <complex>
#include <span>
#include <string>

#include "mwx/errors.hpp"
#include "mwx/mode.hpp"
#include "mwx/planewave.hpp"

namespace mwx {

/// Voltage/current duals at a port of effective transverse area S:
///   V0 = k0^2 * S * phi0,   I0 = S * J0,   V0 = Zf * I0.
struct PortQuantities {
    complexd V0;
    complexd I0;
    double area = 0.0;   // m^2
    double Zf = 0.0;
    double power = 0.0;  // gauge-field power, <= 0 for 0 < n < 1
    double flux = 0.0;   // particles/s, >= 0 when power <= 0
};

/// Gauge-field power Pf = (1/2) Zf |I0|^2.
inline double gauge_power(complexd i0, double zf) {
    return 0.5 * zf * std::norm(i0);
}

/// Particle flux recovered from gauge power, Im = -Pf/(hbar nu).
inline double flux_from_power(double pf, double nu, double hbar) {
    if (!(nu > 0.0) || !(hbar > 0.0))
        throw physics_error("flux_from_power: nu and hbar must be positive");
    return -pf / (hbar * nu);
}

/// Builds the port from a plane-wave drive; checks phi0 against the
/// Ohm's-law route Zf*J0/k0^2 and rejects inconsistent inputs.
inline PortQuantities voltage_current_duals(complexd j0, complexd phi0, double area,
                                            const ConstitutiveSet& c) {
    if (!(area > 0.0))
        throw physics_error("voltage_current_duals: area must be positive");
    complexd phi0_ohm = c.Zf * j0 / (c.k0 * c.k0);
    double scale = std::max(std::abs(phi0), std::abs(phi0_ohm));
    if (scale > 0.0 && std::abs(phi0 - phi0_ohm) > 1e-9 * scale)
        throw physics_error(
            "voltage_current_duals: phi0 inconsistent with Zf*J0/k0^2");
    PortQuantities p;
    p.area = area;
    p.Zf = c.Zf;
    p.V0 = c.k0 * c.k0 * area * phi0;
    p.I0 = area * j0;
    p.power = gauge_power(p.I0, c.Zf);
    p.flux = flux_from_power(p.power, c.drive_frequency(), c.hbar());
    return p;
}

/// Which flux-to-amplitude formula to use: the printed n << 1 limit or the
/// exact form obtained by eliminating Pf between the two power identities.
enum class FluxFormula { exact, small_n };

/// Current amplitude from steady particle flux:
///   small_n: I0 = (q/sqrt(n)) sqrt(2 Im nu)
///   exact:   I0 = q sqrt(2 Im nu (1-n^2)/n)
inline double current_from_flux(double im, double nu, double charge, double n,
                                FluxFormula mode) {
    if (im < 0.0) throw physics_error("current_from_flux: flux must be >= 0");
    if (!(nu > 0.0)) throw physics_error("current_from_flux: nu must be positive");
    if (mode == FluxFormula::exact) {
        if (!(n > 0.0 && n < 1.0))
            throw physics_error("current_from_flux: exact form requires 0 < n < 1");
        return charge * std::sqrt(2.0 * im * nu * (1.0 - n * n) / n);
    }
    if (!(n > 0.0)) throw physics_error("current_from_flux: n must be positive");
    return charge / std::sqrt(n) * std::sqrt(2.0 * im * nu);
}

/// Voltage amplitude from steady particle flux:
///   small_n: V0 = -hbar (sqrt(n)/q) sqrt(2 Im nu)
///   exact:   V0 = Zf * I0_exact = -(hbar/q) sqrt(2 Im nu n/(1-n^2))
inline double voltage_from_flux(double im, double nu, double charge, double hbar,
                                double n, FluxFormula mode) {
    if (im < 0.0) throw physics_error("voltage_from_flux: flux must be >= 0");
    if (!(nu > 0.0)) throw physics_error("voltage_from_flux: nu must be positive");
    if (mode == FluxFormula::exact) {
        if (!(n > 0.0 && n < 1.0))
            throw physics_error("voltage_from_flux: exact form requires 0 < n < 1");
        return -(hbar / charge) * std::sqrt(2.0 * im * nu * n / (1.0 - n * n));
    }
    if (!(n > 0.0)) throw physics_error("voltage_from_flux: n must be positive");
    return -hbar * std::sqrt(n) / charge * std::sqrt(2.0 * im * nu);
}

/// Amplitude and power coefficients of a step between two real wave
/// impedances of the same sign.
struct StepCoefficients {
    double r = 0.0;        // amplitude reflection (Z2-Z1)/(Z2+Z1)
    double t = 0.0;        // amplitude transmission 2 Z2/(Z1+Z2)
    double R_power = 0.0;  // r^2
    double T_power = 0.0;  // (Z1/Z2) t^2, equals 1 - R_power when lossless
};

inline StepCoefficients step_reflection(double z1, double z2) {
    if (z1 == 0.0 || z2 == 0.0)
        throw physics_error("step_reflection: impedances must be nonzero");
    if ((z1 > 0.0) != (z2 > 0.0))
        throw physics_error("step_reflection: impedances must have the same sign");
    double denom = z1 + z2;
    if (denom == 0.0) throw physics_error("step_reflection: degenerate Z1 + Z2 = 0");
    StepCoefficients s;
    s.r = (z2 - z1) / denom;
    s.t = 2.0 * z2 / denom;
    s.R_power = s.r * s.r;
    s.T_power = (z1 / z2) * s.t * s.t;
    return s;
}

/// ABCD two-port.  Lossless line segments and their cascades have unit
/// determinant.
struct TwoPort {
    std::array<complexd, 4> abcd{1.0, 0.0, 0.0, 1.0};  // row-major [[A,B],[C,D]]
    std::string descriptor = "segment";

    complexd a() const { return abcd[0]; }
    complexd b() const { return abcd[1]; }
    complexd c() const { return abcd[2]; }
    complexd d() const { return abcd[3]; }

    complexd determinant() const { return abcd[0] * abcd[3] - abcd[1] * abcd[2]; }
};

/// Lossless line segment of characteristic impedance Zc and electrical
/// length k*length: [[cos(kl), i Zc sin(kl)], [i sin(kl)/Zc, cos(kl)]].
inline TwoPort abcd_line_segment(complexd zc, double k, double length) {
    if (length < 0.0)
        throw physics_error("abcd_line_segment: length must be >= 0");
    if (zc == complexd(0.0, 0.0))
        throw physics_error("abcd_line_segment: Zc must be nonzero");
    const complexd i(0.0, 1.0);
    double kl = k * length;
    TwoPort tp;
    tp.abcd = {complexd(std::cos(kl)), i * zc * std::sin(kl),
               i * std::sin(kl) / zc, complexd(std::cos(kl))};
    return tp;
}

inline TwoPort cascade(std::span<const TwoPort> stages) {
    TwoPort out;
    out.descriptor = "cascade";
    for (const TwoPort& s : stages) {
        auto& m = out.abcd;
        const auto& p = s.abcd;
        std::array<complexd, 4> r{m[0] * p[0] + m[1] * p[2], m[0] * p[1] + m[1] * p[3],
                                  m[2] * p[0] + m[3] * p[2], m[2] * p[1] + m[3] * p[3]};
        out.abcd = r;
    }
    return out;
}

inline complexd input_impedance(const TwoPort& tp, complexd zl) {
    complexd denom = tp.c() * zl + tp.d();
    if (std::abs(denom) < 1e-300)
        throw physics_error("input_impedance: degenerate denominator");
    return (tp.a() * zl + tp.b()) / denom;
}

/// Power delivered to load ZL from a source (Vs peak, internal impedance Rs)
/// through the two-port: PL = Re(V_L conj(I_L))/2 after source division.
inline double delivered_power(complexd vs, complexd rs, const TwoPort& tp, complexd zl) {
    complexd zin = input_impedance(tp, zl);
    complexd denom = rs + zin;
    if (std::abs(denom) < 1e-300)
        throw physics_error("delivered_power: degenerate source loop");
    complexd i_in = vs / denom;
    complexd v_in = zin * i_in;
    // [V_L; I_L] = ABCD^{-1} [V_in; I_in]; for det = 1 networks the inverse
    // is [[D, -B], [-C, A]].
    complexd det = tp.determinant();
    if (std::abs(det) < 1e-300)
        throw physics_error("delivered_power: singular two-port");
    complexd v_l = (tp.d() * v_in - tp.b() * i_in) / det;
    complexd i_l = (-tp.c() * v_in + tp.a() * i_in) / det;
    return 0.5 * (v_l * std::conj(i_l)).real();
}

}  // namespace mwx
