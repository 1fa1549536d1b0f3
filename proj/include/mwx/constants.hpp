#pragma once

namespace mwx {

inline constexpr double pi = 3.14159265358979323846;

/// Reduced Planck constant, J*s (CODATA 2018, exact by SI definition).
inline constexpr double hbar_si = 1.054571817e-34;

}  // namespace mwx
