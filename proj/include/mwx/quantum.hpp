#pragma once

// Truncated Fock-space laboratory for the quantized matter-wave field.
//
// Single-mode Hamiltonians (hbar = 1 unless passed):
//   matter    H_m  =  hbar*omega * a^dag a            (spectrum >= 0)
//   matteron  H_f  = -hbar*nu * (a^dag a + 1/2)       (inverted oscillator,
//                                                      strictly negative)
//   combined  H_nu =  hbar*(omega-nu) * a^dag a - hbar*nu/2
//
// Coherent states are eigenstates of the annihilation operator; truncation
// is enforced by a tail-mass rule rather than silent renormalization.  The
// reservoir is modeled as a shallow occupation window near N_r, wide enough
// for the bookkeeping tests while N_r itself stays large.

#include <cmath>
#include <complex>
#include <string>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include "mwx/errors.hpp"

namespace mwx::quantum {

using complexd = std::complex<double>;
using OperatorMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

/// Annihilation/creation pair on an n_trunc-dimensional Fock space:
/// a[n-1, n] = sqrt(n), a_dag = conjugate transpose.
inline std::pair<OperatorMatrix, OperatorMatrix> ladder_matrices(int n_trunc) {
    if (n_trunc < 2)
        throw physics_error("ladder_matrices: need at least 2 Fock levels");
    OperatorMatrix a = OperatorMatrix::Zero(n_trunc, n_trunc);
    for (int n = 1; n < n_trunc; ++n) a(n - 1, n) = std::sqrt(double(n));
    return {a, a.adjoint()};
}

inline OperatorMatrix number_operator(int n_trunc) {
    auto [a, a_dag] = ladder_matrices(n_trunc);
    return a_dag * a;
}

inline OperatorMatrix matter_hamiltonian(double omega, int n_trunc, double hbar = 1.0) {
    if (!(omega > 0.0))
        throw physics_error("matter_hamiltonian: omega must be positive");
    return hbar * omega * number_operator(n_trunc);
}

inline OperatorMatrix matteron_hamiltonian(double nu, int n_trunc, double hbar = 1.0) {
    if (!(nu > 0.0))
        throw physics_error("matteron_hamiltonian: nu must be positive");
    int n = n_trunc;
    return -hbar * nu * (number_operator(n) +
                         0.5 * OperatorMatrix::Identity(n, n));
}

inline OperatorMatrix matterwave_hamiltonian(double omega, double nu, int n_trunc,
                                             double hbar = 1.0) {
    if (!(omega > 0.0) || !(nu > 0.0))
        throw physics_error("matterwave_hamiltonian: frequencies must be positive");
    int n = n_trunc;
    return hbar * (omega - nu) * number_operator(n) -
           0.5 * hbar * nu * OperatorMatrix::Identity(n, n);
}

/// State vector plus a human-readable label (fock N | coherent a | custom).
struct TruncatedState {
    StateVector amplitudes;
    std::string label = "custom";

    int dim() const { return int(amplitudes.size()); }
    double norm() const { return amplitudes.norm(); }
};

inline TruncatedState fock_state(int n, int n_trunc) {
    if (n < 0 || n >= n_trunc)
        throw physics_error("fock_state: occupation outside truncated space");
    TruncatedState s;
    s.amplitudes = StateVector::Zero(n_trunc);
    s.amplitudes(n) = 1.0;
    s.label = "fock " + std::to_string(n);
    return s;
}

/// Smallest truncation keeping the coherent tail mass below ~1e-12.
inline int min_truncation(complexd alpha) {
    double m = std::abs(alpha);
    return int(std::ceil(m * m + 8.0 * m + 10.0));
}

/// Coherent state c_n = exp(-|a|^2/2) a^n / sqrt(n!), built by the stable
/// recurrence c_n = c_{n-1} a / sqrt(n).
inline TruncatedState coherent_state(complexd alpha, int n_trunc) {
    int required = min_truncation(alpha);
    if (n_trunc < required)
        throw physics_error("coherent_state: truncation " + std::to_string(n_trunc) +
                            " below tail rule; need at least " +
                            std::to_string(required));
    TruncatedState s;
    s.amplitudes = StateVector::Zero(n_trunc);
    complexd c = std::exp(-0.5 * std::norm(alpha));
    s.amplitudes(0) = c;
    for (int n = 1; n < n_trunc; ++n) {
        c *= alpha / std::sqrt(double(n));
        s.amplitudes(n) = c;
    }
    s.label = "coherent";
    return s;
}

inline complexd expectation(const OperatorMatrix& op, const TruncatedState& s) {
    if (op.rows() != s.dim() || op.cols() != s.dim())
        throw physics_error("expectation: dimension mismatch");
    return s.amplitudes.dot(op * s.amplitudes);
}

/// Expectation of a Hermitian operator; rejects a non-negligible imaginary
/// residue instead of silently dropping it.
inline double real_expectation(const OperatorMatrix& op, const TruncatedState& s) {
    complexd e = expectation(op, s);
    double scale = std::max(1.0, std::abs(e));
    if (std::abs(e.imag()) > 1e-10 * scale)
        throw std::logic_error("real_expectation: imaginary residue " +
                               std::to_string(e.imag()));
    return e.real();
}

/// Both printed forms of the coherent-state energy; they agree through
/// n^2 = nu/omega.
struct CoherentEnergy {
    double via_detuning = 0.0;  // hbar (omega-nu) |a|^2 - hbar nu/2
    double via_index = 0.0;     // hbar nu (1-n^2)/n^2 |a|^2 - hbar nu/2
    double value() const { return via_detuning; }
};

inline CoherentEnergy coherent_energy_closed_form(complexd alpha, double omega,
                                                  double nu, double hbar = 1.0) {
    if (!(omega > 0.0) || !(nu > 0.0))
        throw physics_error("coherent_energy_closed_form: frequencies must be positive");
    double n2 = nu / omega;
    CoherentEnergy e;
    e.via_detuning = hbar * (omega - nu) * std::norm(alpha) - 0.5 * hbar * nu;
    e.via_index = hbar * nu * (1.0 - n2) / n2 * std::norm(alpha) - 0.5 * hbar * nu;
    double scale = std::max({std::abs(e.via_detuning), std::abs(e.via_index), 1.0});
    if (std::abs(e.via_detuning - e.via_index) > 1e-12 * scale)
        throw std::logic_error("coherent_energy_closed_form: printed forms disagree");
    return e;
}

/// Reservoir (occupation window {N_r-depth..N_r}) tensor matter-wave mode.
/// The joint raising operator c^dag = a^dag (x) b_r moves one particle from
/// the reservoir into the mode, so mode occupation always equals reservoir
/// deficit.
class JointSpace {
public:
    JointSpace(long reservoir_number, int mode_dim, int depth = 8)
        : nr_(reservoir_number),
          depth_(int(std::min<long>(depth, reservoir_number))),
          mode_dim_(mode_dim) {
        if (reservoir_number < 1)
            throw physics_error("JointSpace: reservoir needs at least one particle");
        if (mode_dim < 2)
            throw physics_error("JointSpace: mode needs at least 2 levels");
        int rd = depth_ + 1;  // reservoir window dimension
        // b on the window basis |N_r-depth+i>, i = 0..depth; lowering out of
        // the window (only possible when the window bottom is above zero
        // occupation) is excluded from the matrix and guarded in raise().
        OperatorMatrix b = OperatorMatrix::Zero(rd, rd);
        for (int i = 1; i < rd; ++i)
            b(i - 1, i) = std::sqrt(double(nr_ - depth_ + i));
        auto [a, a_dag] = ladder_matrices(mode_dim_);
        c_dag_ = Eigen::kroneckerProduct(b, a_dag);
        window_bottom_occupation_ = nr_ - depth_;
    }

    long reservoir_number() const { return nr_; }
    int depth() const { return depth_; }
    int mode_dim() const { return mode_dim_; }
    int dim() const { return (depth_ + 1) * mode_dim_; }
    const OperatorMatrix& raising() const { return c_dag_; }

    /// |N_r> (x) |mode>.
    StateVector embed(const StateVector& mode_state) const {
        if (mode_state.size() != mode_dim_)
            throw physics_error("JointSpace: mode state dimension mismatch");
        StateVector res = StateVector::Zero(depth_ + 1);
        res(depth_) = 1.0;
        return Eigen::kroneckerProduct(res, mode_state);
    }

    /// Applies c^dag once.  Throws when amplitude would be lowered past the
    /// truncation window (reservoir support on the window bottom while the
    /// bottom still holds particles).
    StateVector raise(const StateVector& joint) const {
        if (joint.size() != dim())
            throw physics_error("JointSpace: joint state dimension mismatch");
        if (window_bottom_occupation_ > 0) {
            double bottom = joint.segment(0, mode_dim_).norm();
            if (bottom > 1e-14 * std::max(1.0, joint.norm()))
                throw physics_error(
                    "JointSpace: reservoir depleted below truncation window");
        }
        return c_dag_ * joint;
    }

private:
    long nr_;
    int depth_;
    int mode_dim_;
    long window_bottom_occupation_;
    OperatorMatrix c_dag_;
};

/// One-shot form: builds |N_r>|mode> and applies the joint raising once.
inline StateVector joint_raising(long reservoir_number, const TruncatedState& mode_state,
                                 int n_trunc, int depth = 8) {
    JointSpace js(reservoir_number, n_trunc, depth);
    if (mode_state.dim() != n_trunc)
        throw physics_error("joint_raising: mode state dimension mismatch");
    return js.raise(js.embed(mode_state.amplitudes));
}

/// Energy removed from the reservoir by k matteron emissions.
inline double matteron_energy_removed(long k, double nu, double hbar = 1.0) {
    return double(k) * hbar * nu;
}

/// Emission requires the reservoir chemical potential to cover one matteron.
inline bool emission_threshold(double mu_b, double nu, double hbar = 1.0) {
    return mu_b >= hbar * nu;
}

}  // namespace mwx::quantum
