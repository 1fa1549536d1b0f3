#pragma once

// 1D driven wave-equation solver for the Lorenz-gauge potentials,
//
//   (-d_xx + (1/v0^2) d_tt) phi = rho/xi0
//   (-d_xx + (1/v0^2) d_tt) A   = eta0*J
//
// integrated with a plain leapfrog scheme, second order in space and time,
// phi and A co-located in time.  Boundaries use first-order characteristic
// outflow at v0.  The prescribed current is a windowed, ramped plane wave;
// its charge density comes from the analytic time integral of -d_x J, so
// continuity holds exactly at the continuous level.  F = -d_t A - d_x phi is
// derived post hoc by centered differences; G = curl A vanishes identically
// in this longitudinal geometry.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "mwx/constants.hpp"
#include "mwx/errors.hpp"
#include "mwx/mode.hpp"

namespace mwx {

struct Grid1D {
    double length = 0.0;  // m
    int nx = 0;           // cell count; nodes 0..nx
    double dx = 0.0;
    double dt = 0.0;
    int nt = 0;           // step count
    double cfl = 0.0;     // v0*dt/dx
};

inline constexpr double cfl_limit = 0.95;

inline Grid1D make_grid(double length, int nx, double v0, double dt, int nt) {
    if (!(length > 0.0) || nx < 2)
        throw physics_error("grid: need positive length and nx >= 2");
    if (!(dt > 0.0) || nt < 0)
        throw physics_error("grid: need dt > 0 and nt >= 0");
    Grid1D g;
    g.length = length;
    g.nx = nx;
    g.dx = length / nx;
    g.dt = dt;
    g.nt = nt;
    g.cfl = v0 * dt / g.dx;
    if (g.cfl > cfl_limit)
        throw physics_error("grid: cfl = " + std::to_string(g.cfl) +
                            " exceeds stability margin 0.95");
    return g;
}

/// Grid covering `periods` drive periods with dt snapped to an integer number
/// of steps per period, so steady-state projection windows line up exactly.
inline Grid1D make_grid_for_periods(double length, int nx, double v0, double nu,
                                    double cfl_target, double periods) {
    if (!(nu > 0.0) || !(cfl_target > 0.0) || !(periods >= 0.0))
        throw physics_error("grid: bad period parameters");
    double dx = length / nx;
    double period = 2.0 * pi / nu;
    int steps_per_period = std::max(3, int(std::ceil(period / (cfl_target * dx / v0))));
    double dt = period / steps_per_period;
    int nt = int(std::lround(periods * steps_per_period));
    return make_grid(length, nx, v0, dt, nt);
}

inline double points_per_wavelength(const Grid1D& g, double k) {
    return 2.0 * pi / (k * g.dx);
}

/// Windowed, ramped plane-wave drive.
struct SourceSpec {
    double J0 = 0.0;            // current-density amplitude
    double k = 0.0;             // rad/m
    double nu = 0.0;            // rad/s
    double x_lo = 0.0;          // window, m
    double x_hi = 0.0;
    double ramp_periods = 2.0;  // temporal turn-on, in drive periods
    double taper_width = -1.0;  // spatial taper per end; < 0 means half the
                                // source wavelength pi/k

    void validate() const {
        if (!(k > 0.0) || !(nu > 0.0))
            throw physics_error("source: k and nu must be positive");
        if (!(x_lo < x_hi)) throw physics_error("source: window is empty");
        if (ramp_periods < 0.0)
            throw physics_error("source: ramp_periods must be >= 0");
        double w = taper_width < 0.0 ? pi / k : taper_width;
        if (2.0 * w > (x_hi - x_lo))
            throw physics_error("source: tapers overlap; window too narrow");
    }
};

/// The current/charge pair is generated from one scalar function
/// P(x,t) = -(J0/nu) w(x) r(t) sin(kx - nu t) via J = d_t P, rho = -d_x P,
/// which satisfies continuity identically.  After the ramp (r = 1, r' = 0)
/// the current is exactly J0 w(x) cos(kx - nu t), and in the window interior
/// rho/J = k/nu pointwise.
class WindowedPlaneSource {
public:
    explicit WindowedPlaneSource(const SourceSpec& spec) : s_(spec) {
        s_.validate();
        taper_ = spec.taper_width < 0.0 ? pi / spec.k : spec.taper_width;
        ramp_time_ = spec.ramp_periods * 2.0 * pi / spec.nu;
    }

    const SourceSpec& spec() const { return s_; }
    double ramp_end_time() const { return ramp_time_; }
    double taper_width() const { return taper_; }

    // Raised-cosine spatial taper: 0 outside the window, 1 on the interior
    // plateau [x_lo + taper, x_hi - taper].
    double window(double x) const {
        if (x <= s_.x_lo || x >= s_.x_hi) return 0.0;
        if (x < s_.x_lo + taper_)
            return 0.5 * (1.0 - std::cos(pi * (x - s_.x_lo) / taper_));
        if (x > s_.x_hi - taper_)
            return 0.5 * (1.0 - std::cos(pi * (s_.x_hi - x) / taper_));
        return 1.0;
    }

    double window_deriv(double x) const {
        if (x <= s_.x_lo || x >= s_.x_hi) return 0.0;
        if (x < s_.x_lo + taper_)
            return 0.5 * pi / taper_ * std::sin(pi * (x - s_.x_lo) / taper_);
        if (x > s_.x_hi - taper_)
            return -0.5 * pi / taper_ * std::sin(pi * (s_.x_hi - x) / taper_);
        return 0.0;
    }

    double ramp(double t) const {
        if (t <= 0.0) return ramp_time_ > 0.0 ? 0.0 : 1.0;
        if (t >= ramp_time_) return 1.0;
        return 0.5 * (1.0 - std::cos(pi * t / ramp_time_));
    }

    double ramp_deriv(double t) const {
        if (t <= 0.0 || t >= ramp_time_) return 0.0;
        return 0.5 * pi / ramp_time_ * std::sin(pi * t / ramp_time_);
    }

    double current(double x, double t) const {
        double w = window(x);
        if (w == 0.0) return 0.0;
        double phase = s_.k * x - s_.nu * t;
        return s_.J0 * w * (ramp(t) * std::cos(phase) -
                            ramp_deriv(t) / s_.nu * std::sin(phase));
    }

    double charge(double x, double t) const {
        double w = window(x);
        double wd = window_deriv(x);
        if (w == 0.0 && wd == 0.0) return 0.0;
        double phase = s_.k * x - s_.nu * t;
        return s_.J0 / s_.nu * ramp(t) *
               (wd * std::sin(phase) + w * s_.k * std::cos(phase));
    }

private:
    SourceSpec s_;
    double taper_ = 0.0;
    double ramp_time_ = 0.0;
};

/// Silent source for null runs and custom-injection tests.
struct ZeroSource {
    double current(double, double) const { return 0.0; }
    double charge(double, double) const { return 0.0; }
};

/// phi and A at two consecutive time levels (levels t - dt and t).
struct FieldState {
    std::vector<double> phi_prev, phi;
    std::vector<double> a_prev, a;
    double t = 0.0;
    long step_index = 0;
};

/// Normalized identity residuals at one time level, with the normalizing
/// scale (the larger term's RMS) kept alongside: samples with negligible
/// scale carry no information and are excluded from spike detection.
struct ResidualSample {
    double t = 0.0;
    double gauss = 0.0;       // d_x F - rho/xi0
    double lorenz = 0.0;      // d_x A + (1/v0^2) d_t phi
    double continuity = 0.0;  // d_x J + d_t rho
    double gauss_scale = 0.0;
    double lorenz_scale = 0.0;
    double continuity_scale = 0.0;
};

/// Peak normalized residuals over the samples whose scale is at least 10%
/// of the run's final scale (so near-zero-field startup noise is ignored).
struct ResidualPeaks {
    double gauss = 0.0;
    double lorenz = 0.0;
    double continuity = 0.0;
    bool operator==(const ResidualPeaks&) const = default;
};

struct SimulationRecord {
    Grid1D grid;
    double source_k = 0.0;   // for demodulation of steady amplitudes
    double source_nu = 0.0;
    double ramp_end_time = 0.0;
    int stride = 1;

    std::vector<double> times;       // recorded interior time levels
    std::vector<int> probe_cells;
    std::vector<double> probe_x;
    // [probe][sample]
    std::vector<std::vector<double>> phi_probes, a_probes, f_probes;
    std::vector<ResidualSample> residuals;

    std::vector<double> phi_final, a_final;
    double t_final = 0.0;

    ResidualPeaks peaks;
    bool residual_spike = false;

    bool operator==(const SimulationRecord&) const = default;
};

inline bool operator==(const Grid1D& a, const Grid1D& b) {
    return a.length == b.length && a.nx == b.nx && a.dx == b.dx && a.dt == b.dt &&
           a.nt == b.nt && a.cfl == b.cfl;
}
inline bool operator==(const ResidualSample& a, const ResidualSample& b) {
    return a.t == b.t && a.gauss == b.gauss && a.lorenz == b.lorenz &&
           a.continuity == b.continuity && a.gauss_scale == b.gauss_scale &&
           a.lorenz_scale == b.lorenz_scale &&
           a.continuity_scale == b.continuity_scale;
}

/// F = -d_t A - d_x phi at one time level, centered differences; one-sided
/// in space at the domain edges.
inline std::vector<double> field_from_potentials(std::span<const double> phi,
                                                 std::span<const double> a_prev,
                                                 std::span<const double> a_next,
                                                 double dt, double dx) {
    size_t n = phi.size();
    std::vector<double> f(n, 0.0);
    for (size_t i = 1; i + 1 < n; ++i)
        f[i] = -(a_next[i] - a_prev[i]) / (2.0 * dt) -
               (phi[i + 1] - phi[i - 1]) / (2.0 * dx);
    if (n >= 2) {
        f[0] = -(a_next[0] - a_prev[0]) / (2.0 * dt) - (phi[1] - phi[0]) / dx;
        f[n - 1] = -(a_next[n - 1] - a_prev[n - 1]) / (2.0 * dt) -
                   (phi[n - 1] - phi[n - 2]) / dx;
    }
    return f;
}

/// F series from stored potential histories (full snapshots at consecutive
/// time levels).  Returns one row per interior level 1..nlevels-2.
inline std::vector<std::vector<double>> derive_fields(
    const std::vector<std::vector<double>>& phi_levels,
    const std::vector<std::vector<double>>& a_levels, double dt, double dx) {
    if (phi_levels.size() < 3 || a_levels.size() != phi_levels.size())
        throw std::invalid_argument("derive_fields: need >= 3 matching time levels");
    std::vector<std::vector<double>> f;
    f.reserve(phi_levels.size() - 2);
    for (size_t lvl = 1; lvl + 1 < phi_levels.size(); ++lvl)
        f.push_back(field_from_potentials(phi_levels[lvl], a_levels[lvl - 1],
                                          a_levels[lvl + 1], dt, dx));
    return f;
}

namespace detail {

inline double rms(std::span<const double> v) {
    if (v.empty()) return 0.0;
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s / double(v.size()));
}

/// RMS of (lhs - rhs) over the samples, normalized by the larger term's RMS;
/// zero fields give zero residual by convention.  Returns {residual, scale}.
inline std::pair<double, double> normalized_residual(std::span<const double> lhs,
                                                     std::span<const double> rhs) {
    double scale = std::max(rms(lhs), rms(rhs));
    if (scale < 1e-300) return {0.0, 0.0};
    double s = 0.0;
    for (size_t i = 0; i < lhs.size(); ++i) {
        double d = lhs[i] - rhs[i];
        s += d * d;
    }
    return {std::sqrt(s / double(lhs.size())) / scale, scale};
}

}  // namespace detail

/// Leapfrog integrator for the driven potential wave equations.  A Source
/// provides current(x,t) and charge(x,t); instances own their state and are
/// bit-deterministic for a fixed configuration.
template <class Source>
class WaveSolver {
public:
    WaveSolver(const Grid1D& grid, Source source, const ConstitutiveSet& consts)
        : grid_(grid), src_(std::move(source)), c_(consts) {
        size_t n = size_t(grid_.nx) + 1;
        state_.phi_prev.assign(n, 0.0);
        state_.phi.assign(n, 0.0);
        state_.a_prev.assign(n, 0.0);
        state_.a.assign(n, 0.0);
        phi_next_.assign(n, 0.0);
        a_next_.assign(n, 0.0);
        if (grid_.cfl > cfl_limit)
            throw physics_error("solver: unstable grid");
    }

    const FieldState& state() const { return state_; }
    const Grid1D& grid() const { return grid_; }
    const Source& source() const { return src_; }

    /// One leapfrog update; keeps (prev, current) levels and advances t.
    void step() {
        const double r2 = grid_.cfl * grid_.cfl;          // (v0 dt/dx)^2
        const double w2 = c_.v0 * c_.v0 * grid_.dt * grid_.dt;  // (v0 dt)^2
        const double t = state_.t;
        const int nx = grid_.nx;
        const bool first = state_.step_index == 0;

        for (int i = 1; i < nx; ++i) {
            double x = i * grid_.dx;
            double lap_phi = state_.phi[i + 1] - 2.0 * state_.phi[i] + state_.phi[i - 1];
            double lap_a = state_.a[i + 1] - 2.0 * state_.a[i] + state_.a[i - 1];
            double acc_phi = r2 * lap_phi + w2 * src_.charge(x, t) / c_.xi0;
            double acc_a = r2 * lap_a + w2 * c_.eta0 * src_.current(x, t);
            if (first) {
                // Taylor start from (u, d_t u = 0): u1 = u0 + acc/2.
                phi_next_[i] = state_.phi[i] + 0.5 * acc_phi;
                a_next_[i] = state_.a[i] + 0.5 * acc_a;
            } else {
                phi_next_[i] = 2.0 * state_.phi[i] - state_.phi_prev[i] + acc_phi;
                a_next_[i] = 2.0 * state_.a[i] - state_.a_prev[i] + acc_a;
            }
        }
        apply_outflow(phi_next_, state_.phi);
        apply_outflow(a_next_, state_.a);

        state_.phi_prev.swap(state_.phi);
        state_.phi.swap(phi_next_);
        state_.a_prev.swap(state_.a);
        state_.a.swap(a_next_);
        ++state_.step_index;
        state_.t = double(state_.step_index) * grid_.dt;
    }

    /// Runs grid.nt steps recording probes and residual diagnostics every
    /// `stride` interior levels.  Throws blowup_error on non-finite fields.
    SimulationRecord run(const std::vector<int>& probe_cells, int stride = 1) {
        if (stride < 1) throw std::invalid_argument("run: stride must be >= 1");
        SimulationRecord rec;
        rec.grid = grid_;
        rec.stride = stride;
        rec.probe_cells = probe_cells;
        for (int cell : probe_cells) {
            if (cell < 0 || cell > grid_.nx)
                throw std::invalid_argument("run: probe cell outside grid");
            rec.probe_x.push_back(cell * grid_.dx);
        }
        rec.phi_probes.assign(probe_cells.size(), {});
        rec.a_probes.assign(probe_cells.size(), {});
        rec.f_probes.assign(probe_cells.size(), {});

        // Diagnostics for level n need levels n-1 and n+1, so they lag the
        // update by one step.
        std::vector<double> phi_prev2, a_prev2, phi_mid, a_mid;
        for (long n = 0; n < grid_.nt; ++n) {
            bool record_level = n >= 1 && (n % stride == 0);
            if (record_level) {
                phi_prev2 = state_.phi_prev;  // level n-1
                a_prev2 = state_.a_prev;
                phi_mid = state_.phi;         // level n
                a_mid = state_.a;
            }
            double t_mid = state_.t;
            step();
            if (record_level || n + 1 == grid_.nt) check_finite(n + 1);
            if (!record_level) continue;

            // state_ now holds level n+1 in .phi/.a.
            rec.times.push_back(t_mid);
            std::vector<double> f = field_from_potentials(phi_mid, a_prev2, state_.a,
                                                          grid_.dt, grid_.dx);
            for (size_t p = 0; p < probe_cells.size(); ++p) {
                int cell = probe_cells[p];
                rec.phi_probes[p].push_back(phi_mid[cell]);
                rec.a_probes[p].push_back(a_mid[cell]);
                rec.f_probes[p].push_back(f[cell]);
            }
            rec.residuals.push_back(residual_sample(t_mid, a_mid, phi_prev2, f));
        }
        rec.phi_final = state_.phi;
        rec.a_final = state_.a;
        rec.t_final = state_.t;
        finalize_metadata(rec);
        return rec;
    }

private:
    // First-order characteristic outflow (discrete one-way wave equation at
    // speed v0); exact at cfl = 1, small residual reflection below.
    void apply_outflow(std::vector<double>& next, const std::vector<double>& cur) {
        const int nx = grid_.nx;
        double coef = (grid_.cfl - 1.0) / (grid_.cfl + 1.0);
        next[0] = cur[1] + coef * (next[1] - cur[0]);
        next[nx] = cur[nx - 1] + coef * (next[nx - 1] - cur[nx]);
    }

    void check_finite(long step_idx) const {
        for (double v : state_.phi)
            if (!std::isfinite(v))
                throw blowup_error("solver: non-finite phi", step_idx);
        for (double v : state_.a)
            if (!std::isfinite(v))
                throw blowup_error("solver: non-finite A", step_idx);
    }

    // Residuals at level n; relies on state_ holding level n+1 after step().
    ResidualSample residual_sample(double t, const std::vector<double>& a_mid,
                                   const std::vector<double>& phi_prev2,
                                   const std::vector<double>& f) {
        const int nx = grid_.nx;
        const double dx = grid_.dx;
        const double dt = grid_.dt;
        ResidualSample out;
        out.t = t;

        std::vector<double> lhs, rhs;
        lhs.reserve(nx);
        rhs.reserve(nx);

        // Gauss dual: d_x F = rho/xi0 (F is centered, so stay one cell in).
        for (int i = 2; i < nx - 1; ++i) {
            lhs.push_back((f[i + 1] - f[i - 1]) / (2.0 * dx));
            rhs.push_back(src_.charge(i * dx, t) / c_.xi0);
        }
        std::tie(out.gauss, out.gauss_scale) = detail::normalized_residual(lhs, rhs);

        // Lorenz gauge dual: d_x A = -(1/v0^2) d_t phi.
        lhs.clear();
        rhs.clear();
        for (int i = 1; i < nx; ++i) {
            lhs.push_back((a_mid[i + 1] - a_mid[i - 1]) / (2.0 * dx));
            rhs.push_back(-(state_.phi[i] - phi_prev2[i]) /
                          (2.0 * dt * c_.v0 * c_.v0));
        }
        std::tie(out.lorenz, out.lorenz_scale) = detail::normalized_residual(lhs, rhs);

        // Continuity of the prescribed source: d_x J = -d_t rho.
        lhs.clear();
        rhs.clear();
        for (int i = 1; i < nx; ++i) {
            double x = i * dx;
            lhs.push_back((src_.current(x + dx, t) - src_.current(x - dx, t)) /
                          (2.0 * dx));
            rhs.push_back(-(src_.charge(x, t + dt) - src_.charge(x, t - dt)) /
                          (2.0 * dt));
        }
        std::tie(out.continuity, out.continuity_scale) =
            detail::normalized_residual(lhs, rhs);
        return out;
    }

    void finalize_metadata(SimulationRecord& rec) const {
        if constexpr (requires(const Source& s) { s.spec(); }) {
            rec.source_k = src_.spec().k;
            rec.source_nu = src_.spec().nu;
            rec.ramp_end_time = src_.ramp_end_time();
        }
        if (rec.residuals.empty()) return;

        // Peaks over scale-significant samples; a peak well above the level
        // of the trailing tenth of the run marks a transient spike.
        auto assess = [&rec](auto res_of, auto scale_of, double& peak_out) {
            double final_scale = scale_of(rec.residuals.back());
            double peak = 0.0;
            for (const ResidualSample& r : rec.residuals)
                if (scale_of(r) >= 0.1 * final_scale) peak = std::max(peak, res_of(r));
            peak_out = peak;
            size_t tail = rec.residuals.size() - rec.residuals.size() / 10 - 1;
            double settled = 0.0;
            for (size_t i = tail; i < rec.residuals.size(); ++i)
                settled = std::max(settled, res_of(rec.residuals[i]));
            return settled > 0.0 && peak > 5.0 * settled;
        };
        bool spike = false;
        spike |= assess([](const ResidualSample& r) { return r.gauss; },
                        [](const ResidualSample& r) { return r.gauss_scale; },
                        rec.peaks.gauss);
        spike |= assess([](const ResidualSample& r) { return r.lorenz; },
                        [](const ResidualSample& r) { return r.lorenz_scale; },
                        rec.peaks.lorenz);
        spike |= assess([](const ResidualSample& r) { return r.continuity; },
                        [](const ResidualSample& r) { return r.continuity_scale; },
                        rec.peaks.continuity);
        rec.residual_spike = spike;
    }

    Grid1D grid_;
    Source src_;
    ConstitutiveSet c_;
    FieldState state_;
    std::vector<double> phi_next_, a_next_;
};

/// Settled residual levels: the maximum over the last half of the recorded
/// series (all-zero runs report exactly zero).
struct ResidualSummary {
    double gauss = 0.0;
    double lorenz = 0.0;
    double continuity = 0.0;
};

inline ResidualSummary residual_diagnostics(const SimulationRecord& rec) {
    ResidualSummary s;
    size_t from = rec.residuals.size() / 2;
    for (size_t i = from; i < rec.residuals.size(); ++i) {
        s.gauss = std::max(s.gauss, rec.residuals[i].gauss);
        s.lorenz = std::max(s.lorenz, rec.residuals[i].lorenz);
        s.continuity = std::max(s.continuity, rec.residuals[i].continuity);
    }
    return s;
}

/// Phasor amplitude of a sampled series against exp(i(kx - nu t)): projects
/// (2/N) sum s(t_j) exp(i nu t_j) over the trailing `periods` full periods.
/// Requires an integer number of samples per period.
inline std::complex<double> project_amplitude(std::span<const double> series,
                                              double t0, double dt, double nu,
                                              int periods) {
    if (periods < 1) throw std::invalid_argument("project_amplitude: periods >= 1");
    double period = 2.0 * pi / nu;
    double steps_per_period = period / dt;
    long spp = std::lround(steps_per_period);
    if (spp < 3 || std::abs(steps_per_period - double(spp)) > 1e-6 * steps_per_period)
        throw std::invalid_argument(
            "project_amplitude: non-integer number of samples per period");
    size_t n = size_t(spp) * size_t(periods);
    if (series.size() < n)
        throw std::invalid_argument("project_amplitude: series shorter than window");
    size_t start = series.size() - n;
    std::complex<double> acc = 0.0;
    for (size_t j = 0; j < n; ++j) {
        double t = t0 + double(start + j) * dt;
        acc += series[start + j] * std::exp(std::complex<double>(0.0, nu * t));
    }
    return 2.0 * acc / double(n);
}

/// Demodulated steady-state amplitudes averaged over the record's probes:
/// per-probe projection times exp(-i k x_p), then the mean.  With probes
/// covering an integer number of source wavelengths the homogeneous-wave
/// contamination averages out exactly.
struct SteadyAmplitudes {
    std::complex<double> phi;
    std::complex<double> a;
    std::complex<double> f;
    int periods = 0;
};

inline SteadyAmplitudes steady_state_amplitude(const SimulationRecord& rec,
                                               int periods = 8) {
    if (rec.probe_cells.empty())
        throw std::invalid_argument("steady_state_amplitude: record has no probes");
    if (rec.times.empty())
        throw std::invalid_argument("steady_state_amplitude: empty record");
    double period = 2.0 * pi / rec.source_nu;
    double t_last = rec.times.back();
    if (t_last - rec.ramp_end_time < 8.0 * period)
        throw std::invalid_argument(
            "steady_state_amplitude: record must span >= 8 periods after ramp");
    if (t_last - double(periods) * period < rec.ramp_end_time)
        throw std::invalid_argument(
            "steady_state_amplitude: projection window overlaps the ramp");

    double dt_sample = rec.grid.dt * rec.stride;
    double t0 = rec.times.front();
    SteadyAmplitudes out;
    out.periods = periods;
    for (size_t p = 0; p < rec.probe_cells.size(); ++p) {
        std::complex<double> demod =
            std::exp(std::complex<double>(0.0, -rec.source_k * rec.probe_x[p]));
        out.phi += demod * project_amplitude(rec.phi_probes[p], t0, dt_sample,
                                             rec.source_nu, periods);
        out.a += demod * project_amplitude(rec.a_probes[p], t0, dt_sample,
                                           rec.source_nu, periods);
        out.f += demod * project_amplitude(rec.f_probes[p], t0, dt_sample,
                                           rec.source_nu, periods);
    }
    double np = double(rec.probe_cells.size());
    out.phi /= np;
    out.a /= np;
    out.f /= np;
    return out;
}

/// Contiguous probe cells covering [x_lo, x_hi); with x_hi - x_lo an integer
/// multiple of the source wavelength this gives exact contamination
/// cancellation in steady_state_amplitude.
inline std::vector<int> probes_for_region(const Grid1D& g, double x_lo, double x_hi) {
    int first = int(std::lround(x_lo / g.dx));
    int last = int(std::lround(x_hi / g.dx));
    if (first < 0 || last > g.nx || first >= last)
        throw std::invalid_argument("probes_for_region: region outside grid");
    std::vector<int> cells;
    for (int i = first; i < last; ++i) cells.push_back(i);
    return cells;
}

}  // namespace mwx
