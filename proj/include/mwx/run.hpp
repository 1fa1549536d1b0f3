#pragma once

// Scenario execution: dispatches a parsed ScenarioConfig to the owning
// module, writes the output file (atomically: temp file + rename), and
// prints a one-page summary with the constitutive constants to stdout.

#include <filesystem>
#include <fstream>
#include <functional>
#include <thread>

#include "mwx/io.hpp"

namespace mwx::io {

struct RunResult {
    std::filesystem::path output_path;
    json summary;  // what was printed, for tests
};

namespace detail {

class AtomicFile {
public:
    explicit AtomicFile(const std::filesystem::path& target)
        : target_(target), tmp_(target.string() + ".tmp"), out_(tmp_, std::ios::binary) {
        if (!out_)
            throw std::runtime_error("cannot open output file " + tmp_.string());
    }

    ~AtomicFile() {
        if (!committed_) {
            out_.close();
            std::error_code ec;
            std::filesystem::remove(tmp_, ec);
        }
    }

    std::ofstream& stream() { return out_; }

    void commit() {
        out_.close();
        if (!out_)
            throw std::runtime_error("failed writing " + tmp_.string());
        std::filesystem::rename(tmp_, target_);
        committed_ = true;
    }

private:
    std::filesystem::path target_, tmp_;
    std::ofstream out_;
    bool committed_ = false;
};

inline void print_constitutive(const ConstitutiveSet& c) {
    std::printf("constitutive constants\n");
    auto row = [](const char* name, double v) {
        std::printf("  %-6s %s\n", name, format_double(v).c_str());
    };
    row("v0", c.v0);
    row("vm", c.vm);
    row("n", c.n);
    row("k", c.k);
    row("k0", c.k0);
    row("Z0", c.Z0);
    row("Zf", c.Zf);
    row("eta0", c.eta0);
    row("eta", c.eta);
    row("xi0", c.xi0);
    row("xi", c.xi);
    if (c.n_above_unity)
        std::printf("  note: n > 1 (vm < v0), outside the usual matter-wave regime\n");
}

}  // namespace detail

inline RunResult run_params(const ScenarioConfig& cfg,
                            const std::filesystem::path& out_dir) {
    ConstitutiveSet c = derive_constitutive(cfg.mode);
    json report;
    report["mode"] = to_json(cfg)["mode"];
    report["constitutive"] = constitutive_json(c);

    detail::AtomicFile file(out_dir / cfg.output.path);
    file.stream() << report.dump(2) << "\n";
    file.commit();

    detail::print_constitutive(c);
    return {out_dir / cfg.output.path, report};
}

inline RunResult run_planewave(const ScenarioConfig& cfg,
                               const std::filesystem::path& out_dir) {
    ConstitutiveSet c = derive_constitutive(cfg.mode);
    const PlanewaveConfig& pw = *cfg.planewave;
    PlaneWaveAmplitudes amps = make_plane_wave(pw.current_amplitude, c);

    detail::AtomicFile file(out_dir / cfg.output.path);
    if (cfg.output.format == OutputFormat::csv) {
        file.stream() << "x,t,J_re,J_im,rho_re,rho_im,phi_re,phi_im,A_re,A_im,F_re,F_im\n";
        for (double x : pw.sample_x)
            for (double t : pw.sample_t) {
                WaveSample s = evaluate_wave(amps, x, t);
                file.stream() << csv_row({x, t, s.current.real(), s.current.imag(),
                                          s.charge.real(), s.charge.imag(),
                                          s.potential.real(), s.potential.imag(),
                                          s.vector_potential.real(),
                                          s.vector_potential.imag(), s.field.real(),
                                          s.field.imag()});
            }
    } else {
        json report;
        report["constitutive"] = constitutive_json(c);
        report["amplitudes"] = {{"J0", complex_json(amps.J0)},
                                {"rho0", complex_json(amps.rho0)},
                                {"phi0", complex_json(amps.phi0)},
                                {"A0", complex_json(amps.A0)},
                                {"F0", complex_json(amps.F0)},
                                {"G0", complex_json(amps.G0)},
                                {"k", amps.k},
                                {"nu", amps.nu}};
        file.stream() << report.dump(2) << "\n";
    }
    file.commit();

    detail::print_constitutive(c);
    std::printf("plane-wave amplitudes (J0 = %s)\n",
                format_double(pw.current_amplitude).c_str());
    auto crow = [](const char* name, complexd z) {
        std::printf("  %-5s %s\n", name, format_complex(z).c_str());
    };
    crow("rho0", amps.rho0);
    crow("phi0", amps.phi0);
    crow("A0", amps.A0);
    crow("F0", amps.F0);
    crow("G0", amps.G0);
    return {out_dir / cfg.output.path, {}};
}

inline RunResult run_fdtd(const ScenarioConfig& cfg,
                          const std::filesystem::path& out_dir) {
    ConstitutiveSet c = derive_constitutive(cfg.mode);
    const FdtdConfig& f = *cfg.fdtd;

    Grid1D grid = make_grid_for_periods(f.length, f.nx, c.v0, c.drive_frequency(),
                                        f.cfl, f.periods);
    SourceSpec src;
    src.J0 = f.current_amplitude;
    src.k = c.k;
    src.nu = c.drive_frequency();
    src.x_lo = f.window_lo;
    src.x_hi = f.window_hi;
    src.ramp_periods = f.ramp_periods;
    src.taper_width = f.taper_width;

    WaveSolver<WindowedPlaneSource> solver(grid, WindowedPlaneSource(src), c);
    std::vector<int> probes = probes_for_region(grid, f.probe_lo, f.probe_hi);
    SimulationRecord rec = solver.run(probes, cfg.output.stride);

    detail::AtomicFile file(out_dir / cfg.output.path);
    file.stream() << "t,x,phi,A,F,gauss_res,lorenz_res,continuity_res\n";
    for (size_t s = 0; s < rec.times.size(); ++s) {
        const ResidualSample& r = rec.residuals[s];
        for (size_t p = 0; p < rec.probe_cells.size(); ++p)
            file.stream() << csv_row({rec.times[s], rec.probe_x[p],
                                      rec.phi_probes[p][s], rec.a_probes[p][s],
                                      rec.f_probes[p][s], r.gauss, r.lorenz,
                                      r.continuity});
    }
    file.commit();

    SteadyAmplitudes amp = steady_state_amplitude(rec, f.measure_periods);
    ResidualSummary res = residual_diagnostics(rec);
    PlaneWaveAmplitudes analytic = make_plane_wave(f.current_amplitude, c);

    detail::print_constitutive(c);
    std::printf("fdtd run: nx=%d dt=%s steps=%d cfl=%s\n", grid.nx,
                format_double(grid.dt).c_str(), grid.nt,
                format_double(grid.cfl).c_str());
    std::printf("  phi amplitude  %s  (analytic %s)\n",
                format_complex(amp.phi).c_str(),
                format_complex(analytic.phi0).c_str());
    std::printf("  residuals: gauss %s  lorenz %s  continuity %s%s\n",
                format_double(res.gauss).c_str(), format_double(res.lorenz).c_str(),
                format_double(res.continuity).c_str(),
                rec.residual_spike ? "  [transient spike]" : "");

    json summary;
    summary["phi_amplitude"] = complex_json(amp.phi);
    summary["phi_analytic"] = complex_json(analytic.phi0);
    summary["residuals"] = {{"gauss", res.gauss},
                            {"lorenz", res.lorenz},
                            {"continuity", res.continuity},
                            {"spike", rec.residual_spike}};
    return {out_dir / cfg.output.path, summary};
}

inline RunResult run_circuit(const ScenarioConfig& cfg,
                             const std::filesystem::path& out_dir, int jobs = 1) {
    ConstitutiveSet c = derive_constitutive(cfg.mode);
    const CircuitConfig& cc = *cfg.circuit;

    auto [phi0, a0] = potential_amplitudes(cc.current_amplitude, c);
    (void)a0;
    PortQuantities port = voltage_current_duals(cc.current_amplitude, phi0, cc.area, c);

    detail::AtomicFile file(out_dir / cfg.output.path);
    json summary;
    if (cc.sweep) {
        const SweepConfig& sw = *cc.sweep;
        TwoPort line = abcd_line_segment(sw.characteristic_impedance, 2.0 * pi,
                                         sw.line_length_wavelengths);
        std::vector<double> loads(size_t(sw.points));
        std::vector<double> powers(size_t(sw.points));
        double step = (sw.load_max - sw.load_min) / double(sw.points - 1);
        auto worker = [&](int begin, int end) {
            for (int i = begin; i < end; ++i) {
                loads[i] = sw.load_min + step * i;
                powers[i] = delivered_power(sw.source_voltage, sw.source_resistance,
                                            line, loads[i]);
            }
        };
        int n_jobs = std::max(1, jobs);
        if (n_jobs == 1) {
            worker(0, sw.points);
        } else {
            std::vector<std::thread> pool;
            int chunk = (sw.points + n_jobs - 1) / n_jobs;
            for (int j = 0; j < n_jobs; ++j)
                pool.emplace_back(worker, j * chunk,
                                  std::min(sw.points, (j + 1) * chunk));
            for (auto& th : pool) th.join();
        }
        file.stream() << "RL,PL\n";
        for (int i = 0; i < sw.points; ++i)
            file.stream() << csv_row({loads[i], powers[i]});

        size_t best = 0;
        for (size_t i = 1; i < powers.size(); ++i)
            if (powers[i] > powers[best]) best = i;
        summary["max_power_load"] = loads[best];
        summary["max_power"] = powers[best];
    } else {
        json report;
        report["constitutive"] = constitutive_json(c);
        report["port"] = {{"V0", complex_json(port.V0)},   {"I0", complex_json(port.I0)},
                          {"area", port.area},             {"Zf", port.Zf},
                          {"gauge_power", port.power},     {"particle_flux", port.flux}};
        file.stream() << report.dump(2) << "\n";
        summary = report;
    }
    file.commit();

    detail::print_constitutive(c);
    std::printf("port: V0 = %s, I0 = %s, Pf = %s, Im = %s\n",
                format_complex(port.V0).c_str(), format_complex(port.I0).c_str(),
                format_double(port.power).c_str(), format_double(port.flux).c_str());
    if (cc.sweep)
        std::printf("sweep: max PL = %s at RL = %s\n",
                    format_double(summary["max_power"].get<double>()).c_str(),
                    format_double(summary["max_power_load"].get<double>()).c_str());
    return {out_dir / cfg.output.path, summary};
}

inline RunResult run_quantum(const ScenarioConfig& cfg,
                             const std::filesystem::path& out_dir) {
    namespace q = mwx::quantum;
    ConstitutiveSet c = derive_constitutive(cfg.mode);
    const QuantumConfig& qc = *cfg.quantum;

    int n_trunc = qc.truncation >= 0 ? qc.truncation : q::min_truncation(qc.alpha);
    q::TruncatedState state = q::coherent_state(qc.alpha, n_trunc);
    auto [a, a_dag] = q::ladder_matrices(n_trunc);
    (void)a_dag;

    double omega = cfg.mode.particle_frequency;
    double nu = cfg.mode.drive_frequency;
    double hbar = cfg.mode.hbar;
    q::OperatorMatrix h_nu = q::matterwave_hamiltonian(omega, nu, n_trunc, hbar);
    q::OperatorMatrix h_f = q::matteron_hamiltonian(nu, n_trunc, hbar);

    double eigen_residual = (a * state.amplitudes - qc.alpha * state.amplitudes).norm();
    double occupation = q::real_expectation(q::number_operator(n_trunc), state);
    double energy = q::real_expectation(h_nu, state);
    q::CoherentEnergy closed = q::coherent_energy_closed_form(qc.alpha, omega, nu, hbar);

    json report;
    report["constitutive"] = constitutive_json(c);
    json amps = json::array();
    for (int n = 0; n < n_trunc; ++n)
        amps.push_back(complex_json(state.amplitudes(n)));
    report["state"] = {{"label", state.label},
                       {"alpha", complex_json(qc.alpha)},
                       {"truncation", n_trunc},
                       {"amplitudes", amps}};
    report["observables"] = {
        {"occupation", occupation},
        {"annihilation_eigen_residual", eigen_residual},
        {"energy", energy},
        {"energy_closed_form", closed.value()},
        {"matteron_ground_energy", -0.5 * hbar * nu}};
    if (qc.chemical_potential)
        report["emission_allowed"] =
            q::emission_threshold(*qc.chemical_potential, nu, hbar);

    detail::AtomicFile file(out_dir / cfg.output.path);
    file.stream() << report.dump(2) << "\n";
    file.commit();

    detail::print_constitutive(c);
    std::printf("coherent state: N=%d, <n> = %s, ||a|x> - a|x>|| = %s\n", n_trunc,
                format_double(occupation).c_str(),
                format_double(eigen_residual).c_str());
    std::printf("  <H_nu> = %s (closed form %s)\n", format_double(energy).c_str(),
                format_double(closed.value()).c_str());
    return {out_dir / cfg.output.path, report};
}

/// Dispatch; the caller maps exceptions to exit codes.
inline RunResult run_scenario(const ScenarioConfig& cfg,
                              const std::filesystem::path& out_dir, int jobs = 1) {
    std::filesystem::create_directories(out_dir);
    switch (cfg.subcommand) {
        case Subcommand::params: return run_params(cfg, out_dir);
        case Subcommand::planewave: return run_planewave(cfg, out_dir);
        case Subcommand::fdtd: return run_fdtd(cfg, out_dir);
        case Subcommand::circuit: return run_circuit(cfg, out_dir, jobs);
        case Subcommand::quantum: return run_quantum(cfg, out_dir);
    }
    throw std::logic_error("run_scenario: unreachable");
}

}  // namespace mwx::io
