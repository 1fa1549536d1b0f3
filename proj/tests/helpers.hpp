#pragma once

#include <complex>
#include <random>

#include "mwx/mode.hpp"

namespace test {

inline bool approx_eq(std::complex<double> a, std::complex<double> b,
                      double rel = 1e-12, double abs_floor = 0.0) {
    double scale = std::max({std::abs(a), std::abs(b), abs_floor});
    if (scale == 0.0) return true;
    return std::abs(a - b) <= rel * scale;
}

inline double log_uniform(std::mt19937& rng, double lo, double hi) {
    std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
    return std::exp(u(rng));
}

/// Valid random mode, safely away from the n = 1 pole.  Mixes natural-unit
/// and SI-flavored scales.
inline mwx::ModeSpec random_mode(std::mt19937& rng) {
    std::uniform_int_distribution<int> flavor(0, 2);
    mwx::ModeSpec m;
    switch (flavor(rng)) {
        case 0:  // natural units
            m.mass = 1.0;
            m.hbar = 1.0;
            break;
        case 1:  // Rb-ish SI
            m.mass = log_uniform(rng, 1e-26, 1e-24);
            m.hbar = mwx::hbar_si;
            break;
        default:  // arbitrary scales
            m.mass = log_uniform(rng, 1e-3, 1e3);
            m.hbar = log_uniform(rng, 1e-6, 1.0);
            break;
    }
    std::uniform_int_distribution<int> conv(0, 1);
    m.charge = conv(rng) == 0 ? 1.0 : m.mass;
    for (;;) {
        m.drive_frequency = log_uniform(rng, 1e-2, 1e2);
        m.particle_frequency = log_uniform(rng, 1e-2, 1e2);
        double ratio = m.drive_frequency / m.particle_frequency;
        if (std::abs(1.0 - ratio) > 1e-3) break;
    }
    m.validate();
    return m;
}

}  // namespace test
