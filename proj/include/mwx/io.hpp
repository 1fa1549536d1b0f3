#pragma once

// Scenario configuration and result serialization.
//
// Configs are JSON documents with a `subcommand` field, a `mode` block, at
// most one subcommand-specific block, and an optional `output` block.
// parse_config reports every problem it finds (not just the first), each
// with a JSON-pointer path, split into schema issues (structure: exit code
// 2) and physics issues (value constraints: exit code 3).  Scalar reports
// are JSON; time series and sweeps are CSV with doubles printed to 17
// significant digits so outputs are byte-reproducible and round-trip exact.

#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "mwx/circuit.hpp"
#include "mwx/errors.hpp"
#include "mwx/mode.hpp"
#include "mwx/planewave.hpp"
#include "mwx/quantum.hpp"
#include "mwx/solver.hpp"

namespace mwx::io {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Logging (MWX_LOG in {error, info, debug}; default error)

enum class LogLevel { error = 0, info = 1, debug = 2 };

inline LogLevel log_level() {
    static LogLevel level = [] {
        const char* env = std::getenv("MWX_LOG");
        if (!env) return LogLevel::error;
        std::string v(env);
        if (v == "debug") return LogLevel::debug;
        if (v == "info") return LogLevel::info;
        return LogLevel::error;
    }();
    return level;
}

inline void log(LogLevel level, const std::string& msg) {
    static const char* names[] = {"error", "info", "debug"};
    if (int(level) <= int(log_level()))
        std::fprintf(stderr, "[mwx %s] %s\n", names[int(level)], msg.c_str());
}

// ---------------------------------------------------------------------------
// Config model

enum class Subcommand { params, planewave, fdtd, circuit, quantum };

inline const char* to_string(Subcommand s) {
    switch (s) {
        case Subcommand::params: return "params";
        case Subcommand::planewave: return "planewave";
        case Subcommand::fdtd: return "fdtd";
        case Subcommand::circuit: return "circuit";
        case Subcommand::quantum: return "quantum";
    }
    return "?";
}

inline std::optional<Subcommand> subcommand_from(const std::string& name) {
    for (Subcommand s : {Subcommand::params, Subcommand::planewave, Subcommand::fdtd,
                         Subcommand::circuit, Subcommand::quantum})
        if (name == to_string(s)) return s;
    return std::nullopt;
}

enum class OutputFormat { csv, json_format };

struct OutputSpec {
    std::string path;  // relative to the --out directory
    OutputFormat format = OutputFormat::json_format;
    int stride = 1;
    bool operator==(const OutputSpec&) const = default;
};

struct PlanewaveConfig {
    double current_amplitude = 1.0;
    std::vector<double> sample_x, sample_t;  // optional evaluation grid
    bool operator==(const PlanewaveConfig&) const = default;
};

struct FdtdConfig {
    double length = 0.0;
    int nx = 0;
    double cfl = 0.45;
    double periods = 20.0;
    double current_amplitude = 1.0;
    double window_lo = 0.0, window_hi = 0.0;
    double ramp_periods = 4.0;
    double taper_width = -1.0;  // < 0: half the source wavelength
    double probe_lo = 0.0, probe_hi = 0.0;
    int measure_periods = 8;
    bool operator==(const FdtdConfig&) const = default;
};

struct SweepConfig {
    double characteristic_impedance = 0.0;
    double source_resistance = 0.0;
    double source_voltage = 1.0;
    double line_length_wavelengths = 0.25;
    double load_min = 0.0, load_max = 0.0;
    int points = 0;
    bool operator==(const SweepConfig&) const = default;
};

struct CircuitConfig {
    double area = 1.0;
    double current_amplitude = 1.0;
    std::optional<SweepConfig> sweep;
    bool operator==(const CircuitConfig&) const = default;
};

struct QuantumConfig {
    std::complex<double> alpha{0.0, 0.0};
    int truncation = -1;  // < 0: tail-mass rule minimum
    std::optional<double> chemical_potential;
    bool operator==(const QuantumConfig&) const = default;
};

struct ScenarioConfig {
    Subcommand subcommand = Subcommand::params;
    ModeSpec mode;
    std::optional<PlanewaveConfig> planewave;
    std::optional<FdtdConfig> fdtd;
    std::optional<CircuitConfig> circuit;
    std::optional<QuantumConfig> quantum;
    OutputSpec output;
};

inline bool operator==(const ModeSpec& a, const ModeSpec& b) {
    return a.mass == b.mass && a.charge == b.charge && a.hbar == b.hbar &&
           a.drive_frequency == b.drive_frequency &&
           a.particle_frequency == b.particle_frequency &&
           a.eps_singular == b.eps_singular;
}

inline bool operator==(const ScenarioConfig& a, const ScenarioConfig& b) {
    return a.subcommand == b.subcommand && a.mode == b.mode &&
           a.planewave == b.planewave && a.fdtd == b.fdtd && a.circuit == b.circuit &&
           a.quantum == b.quantum && a.output == b.output;
}

// ---------------------------------------------------------------------------
// Validation issues

struct Issue {
    std::string pointer;  // JSON pointer, e.g. /mode/mass
    std::string message;
    bool physics = false;  // false: schema/structure, true: value constraint
};

class config_error : public std::runtime_error {
public:
    explicit config_error(std::vector<Issue> issues)
        : std::runtime_error(render(issues)), issues_(std::move(issues)) {}

    const std::vector<Issue>& issues() const { return issues_; }

    bool schema_only_physics() const {
        for (const Issue& i : issues_)
            if (!i.physics) return false;
        return true;
    }

private:
    static std::string render(const std::vector<Issue>& issues) {
        std::string out = "invalid config:";
        for (const Issue& i : issues)
            out += "\n  " + (i.pointer.empty() ? std::string("/") : i.pointer) + ": " +
                   i.message + (i.physics ? " [physics]" : " [schema]");
        return out;
    }
    std::vector<Issue> issues_;
};

namespace detail {

class Validator {
public:
    std::vector<Issue> issues;

    void schema(const std::string& ptr, const std::string& msg) {
        issues.push_back({ptr, msg, false});
    }
    void physics(const std::string& ptr, const std::string& msg) {
        issues.push_back({ptr, msg, true});
    }

    void check_keys(const json& obj, const std::string& ptr,
                    std::initializer_list<const char*> allowed) {
        for (auto it = obj.begin(); it != obj.end(); ++it) {
            bool ok = false;
            for (const char* k : allowed)
                if (it.key() == k) ok = true;
            if (!ok) schema(ptr + "/" + it.key(), "unknown key");
        }
    }

    bool has(const json& obj, const char* key) const { return obj.contains(key); }

    double number(const json& obj, const char* key, const std::string& ptr,
                  std::optional<double> fallback = std::nullopt) {
        if (!obj.contains(key)) {
            if (fallback) return *fallback;
            schema(ptr + "/" + key, "missing required number");
            return 0.0;
        }
        if (!obj[key].is_number()) {
            schema(ptr + "/" + key, "expected a number");
            return fallback.value_or(0.0);
        }
        return obj[key].get<double>();
    }

    int integer(const json& obj, const char* key, const std::string& ptr,
                std::optional<int> fallback = std::nullopt) {
        if (!obj.contains(key)) {
            if (fallback) return *fallback;
            schema(ptr + "/" + key, "missing required integer");
            return 0;
        }
        if (!obj[key].is_number_integer()) {
            schema(ptr + "/" + key, "expected an integer");
            return fallback.value_or(0);
        }
        return obj[key].get<int>();
    }

    std::string text(const json& obj, const char* key, const std::string& ptr,
                     std::optional<std::string> fallback = std::nullopt) {
        if (!obj.contains(key)) {
            if (fallback) return *fallback;
            schema(ptr + "/" + key, "missing required string");
            return {};
        }
        if (!obj[key].is_string()) {
            schema(ptr + "/" + key, "expected a string");
            return fallback.value_or(std::string{});
        }
        return obj[key].get<std::string>();
    }

    // [lo, hi] pair
    std::pair<double, double> range(const json& obj, const char* key,
                                    const std::string& ptr) {
        std::string p = ptr + "/" + key;
        if (!obj.contains(key)) {
            schema(p, "missing required [lo, hi] pair");
            return {0.0, 0.0};
        }
        const json& v = obj[key];
        if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
            schema(p, "expected [lo, hi] numbers");
            return {0.0, 0.0};
        }
        return {v[0].get<double>(), v[1].get<double>()};
    }
};

inline ModeSpec parse_mode(const json& root, Validator& v) {
    ModeSpec mode;
    if (!root.contains("mode")) {
        v.schema("/mode", "missing required mode block");
        return mode;
    }
    const json& m = root["mode"];
    if (!m.is_object()) {
        v.schema("/mode", "expected an object");
        return mode;
    }
    v.check_keys(m, "/mode",
                 {"mass", "charge", "charge_convention", "hbar", "drive_frequency",
                  "particle_frequency", "eps_singular"});
    mode.mass = v.number(m, "mass", "/mode");
    mode.hbar = v.number(m, "hbar", "/mode", hbar_si);
    mode.drive_frequency = v.number(m, "drive_frequency", "/mode");
    mode.particle_frequency = v.number(m, "particle_frequency", "/mode");
    mode.eps_singular = v.number(m, "eps_singular", "/mode", 1e-9);

    if (m.contains("charge") && m.contains("charge_convention")) {
        v.schema("/mode/charge", "give charge or charge_convention, not both");
    } else if (m.contains("charge_convention")) {
        std::string conv = v.text(m, "charge_convention", "/mode");
        if (conv == "unit")
            mode.charge = 1.0;
        else if (conv == "mass")
            mode.charge = mode.mass;
        else
            v.schema("/mode/charge_convention", "expected \"unit\" or \"mass\"");
    } else {
        mode.charge = v.number(m, "charge", "/mode", 1.0);
    }

    try {
        mode.validate();
    } catch (const std::domain_error& e) {
        v.physics("/mode", e.what());
    }
    return mode;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Parsing

inline ScenarioConfig parse_config(const std::string& text) {
    detail::Validator v;
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        v.schema("", std::string("JSON syntax error: ") + e.what());
        throw config_error(std::move(v.issues));
    }
    if (!root.is_object()) {
        v.schema("", "top level must be an object");
        throw config_error(std::move(v.issues));
    }

    ScenarioConfig cfg;
    v.check_keys(root, "",
                 {"subcommand", "mode", "planewave", "fdtd", "circuit", "quantum",
                  "output"});

    std::string sub = v.text(root, "subcommand", "");
    if (auto s = subcommand_from(sub))
        cfg.subcommand = *s;
    else if (!sub.empty())
        v.schema("/subcommand",
                 "expected one of params|planewave|fdtd|circuit|quantum");

    // Exactly one subcommand block, and it must match `subcommand`
    // (params takes no block).
    int blocks = 0;
    for (const char* name : {"planewave", "fdtd", "circuit", "quantum"}) {
        if (!root.contains(name)) continue;
        ++blocks;
        if (sub != name)
            v.schema(std::string("/") + name,
                     "block does not match subcommand \"" + sub + "\"");
    }
    if (blocks > 1) v.schema("", "more than one subcommand block present");
    if (cfg.subcommand != Subcommand::params && blocks == 0 &&
        subcommand_from(sub))
        v.schema(std::string("/") + sub, "missing block for subcommand");

    cfg.mode = detail::parse_mode(root, v);

    // Derived constants are needed for several physics checks below; guard
    // against an invalid mode.
    std::optional<ConstitutiveSet> consts;
    if (v.issues.empty()) consts = derive_constitutive(cfg.mode);

    if (root.contains("planewave") && root["planewave"].is_object()) {
        const json& p = root["planewave"];
        v.check_keys(p, "/planewave", {"current_amplitude", "samples"});
        PlanewaveConfig pw;
        pw.current_amplitude = v.number(p, "current_amplitude", "/planewave", 1.0);
        if (p.contains("samples")) {
            const json& s = p["samples"];
            if (!s.is_object()) {
                v.schema("/planewave/samples", "expected an object");
            } else {
                v.check_keys(s, "/planewave/samples", {"x", "t"});
                for (const char* axis : {"x", "t"}) {
                    auto& dst = axis[0] == 'x' ? pw.sample_x : pw.sample_t;
                    if (!s.contains(axis)) {
                        v.schema(std::string("/planewave/samples/") + axis,
                                 "missing required array");
                        continue;
                    }
                    if (!s[axis].is_array()) {
                        v.schema(std::string("/planewave/samples/") + axis,
                                 "expected an array of numbers");
                        continue;
                    }
                    for (const auto& e : s[axis]) {
                        if (!e.is_number()) {
                            v.schema(std::string("/planewave/samples/") + axis,
                                     "expected an array of numbers");
                            break;
                        }
                        dst.push_back(e.get<double>());
                    }
                }
            }
        }
        cfg.planewave = pw;
    } else if (root.contains("planewave")) {
        v.schema("/planewave", "expected an object");
    }

    if (root.contains("fdtd") && root["fdtd"].is_object()) {
        const json& f = root["fdtd"];
        v.check_keys(f, "/fdtd", {"grid", "source", "probes", "measure_periods"});
        FdtdConfig fd;
        if (f.contains("grid") && f["grid"].is_object()) {
            const json& g = f["grid"];
            v.check_keys(g, "/fdtd/grid", {"length", "nx", "cfl", "periods"});
            fd.length = v.number(g, "length", "/fdtd/grid");
            fd.nx = v.integer(g, "nx", "/fdtd/grid");
            fd.cfl = v.number(g, "cfl", "/fdtd/grid", 0.45);
            fd.periods = v.number(g, "periods", "/fdtd/grid", 20.0);
        } else {
            v.schema("/fdtd/grid", "missing required grid block");
        }
        if (f.contains("source") && f["source"].is_object()) {
            const json& s = f["source"];
            v.check_keys(s, "/fdtd/source",
                         {"current_amplitude", "window", "ramp_periods", "taper_width"});
            fd.current_amplitude = v.number(s, "current_amplitude", "/fdtd/source", 1.0);
            std::tie(fd.window_lo, fd.window_hi) = v.range(s, "window", "/fdtd/source");
            fd.ramp_periods = v.number(s, "ramp_periods", "/fdtd/source", 4.0);
            fd.taper_width = v.number(s, "taper_width", "/fdtd/source", -1.0);
        } else {
            v.schema("/fdtd/source", "missing required source block");
        }
        if (f.contains("probes") && f["probes"].is_object()) {
            const json& p = f["probes"];
            v.check_keys(p, "/fdtd/probes", {"region"});
            std::tie(fd.probe_lo, fd.probe_hi) = v.range(p, "region", "/fdtd/probes");
        } else {
            v.schema("/fdtd/probes", "missing required probes block");
        }
        fd.measure_periods = v.integer(f, "measure_periods", "/fdtd", 8);

        // Physics constraints, evaluated once the structure is sound.
        if (consts && v.issues.empty()) {
            if (!(fd.length > 0.0) || fd.nx < 2)
                v.physics("/fdtd/grid", "need positive length and nx >= 2");
            else {
                if (fd.cfl <= 0.0 || fd.cfl > cfl_limit)
                    v.physics("/fdtd/grid/cfl", "cfl must lie in (0, 0.95]");
                double ppw = 2.0 * pi / (consts->k * (fd.length / fd.nx));
                if (ppw < 16.0)
                    v.physics("/fdtd/grid/nx",
                              "fewer than 16 points per source wavelength");
                if (!(fd.window_lo < fd.window_hi) || fd.window_lo < 0.0 ||
                    fd.window_hi > fd.length)
                    v.physics("/fdtd/source/window", "window must lie inside the domain");
                if (fd.ramp_periods < 2.0)
                    v.physics("/fdtd/source/ramp_periods", "must be >= 2");
                if (!(fd.probe_lo < fd.probe_hi) || fd.probe_lo < 0.0 ||
                    fd.probe_hi > fd.length)
                    v.physics("/fdtd/probes/region", "region must lie inside the domain");
                if (fd.measure_periods < 1)
                    v.physics("/fdtd/measure_periods", "must be >= 1");
                if (fd.periods < fd.ramp_periods + 8.0 + fd.measure_periods / 2.0)
                    v.physics("/fdtd/grid/periods",
                              "run too short: need ramp + 8 settled periods");
            }
        }
        cfg.fdtd = fd;
    } else if (root.contains("fdtd")) {
        v.schema("/fdtd", "expected an object");
    }

    if (root.contains("circuit") && root["circuit"].is_object()) {
        const json& c = root["circuit"];
        v.check_keys(c, "/circuit", {"area", "current_amplitude", "sweep"});
        CircuitConfig cc;
        cc.area = v.number(c, "area", "/circuit", 1.0);
        cc.current_amplitude = v.number(c, "current_amplitude", "/circuit", 1.0);
        if (cc.area <= 0.0) v.physics("/circuit/area", "must be positive");
        if (c.contains("sweep")) {
            if (!c["sweep"].is_object()) {
                v.schema("/circuit/sweep", "expected an object");
            } else {
                const json& s = c["sweep"];
                v.check_keys(s, "/circuit/sweep",
                             {"characteristic_impedance", "source_resistance",
                              "source_voltage", "line_length_wavelengths", "load_min",
                              "load_max", "points"});
                SweepConfig sw;
                sw.characteristic_impedance =
                    v.number(s, "characteristic_impedance", "/circuit/sweep");
                sw.source_resistance = v.number(s, "source_resistance", "/circuit/sweep");
                sw.source_voltage = v.number(s, "source_voltage", "/circuit/sweep", 1.0);
                sw.line_length_wavelengths =
                    v.number(s, "line_length_wavelengths", "/circuit/sweep", 0.25);
                sw.load_min = v.number(s, "load_min", "/circuit/sweep");
                sw.load_max = v.number(s, "load_max", "/circuit/sweep");
                sw.points = v.integer(s, "points", "/circuit/sweep");
                if (sw.points < 2) v.physics("/circuit/sweep/points", "need >= 2 points");
                if (!(sw.load_min < sw.load_max))
                    v.physics("/circuit/sweep/load_min", "need load_min < load_max");
                if (sw.characteristic_impedance == 0.0)
                    v.physics("/circuit/sweep/characteristic_impedance",
                              "must be nonzero");
                cc.sweep = sw;
            }
        }
        cfg.circuit = cc;
    } else if (root.contains("circuit")) {
        v.schema("/circuit", "expected an object");
    }

    if (root.contains("quantum") && root["quantum"].is_object()) {
        const json& q = root["quantum"];
        v.check_keys(q, "/quantum", {"alpha", "truncation", "chemical_potential"});
        QuantumConfig qc;
        if (!q.contains("alpha")) {
            v.schema("/quantum/alpha", "missing required alpha");
        } else if (q["alpha"].is_number()) {
            qc.alpha = {q["alpha"].get<double>(), 0.0};
        } else if (q["alpha"].is_array() && q["alpha"].size() == 2 &&
                   q["alpha"][0].is_number() && q["alpha"][1].is_number()) {
            qc.alpha = {q["alpha"][0].get<double>(), q["alpha"][1].get<double>()};
        } else {
            v.schema("/quantum/alpha", "expected a number or [re, im]");
        }
        qc.truncation = v.integer(q, "truncation", "/quantum", -1);
        if (qc.truncation >= 0 && qc.truncation < quantum::min_truncation(qc.alpha))
            v.physics("/quantum/truncation",
                      "below tail-mass rule; need >= " +
                          std::to_string(quantum::min_truncation(qc.alpha)));
        if (q.contains("chemical_potential"))
            qc.chemical_potential = v.number(q, "chemical_potential", "/quantum");
        cfg.quantum = qc;
    } else if (root.contains("quantum")) {
        v.schema("/quantum", "expected an object");
    }

    // Output block
    const char* default_ext =
        (cfg.subcommand == Subcommand::fdtd ||
         (cfg.subcommand == Subcommand::circuit && cfg.circuit && cfg.circuit->sweep) ||
         (cfg.subcommand == Subcommand::planewave && cfg.planewave &&
          !cfg.planewave->sample_x.empty()))
            ? "csv"
            : "json";
    cfg.output.format =
        std::string(default_ext) == "csv" ? OutputFormat::csv : OutputFormat::json_format;
    cfg.output.path = std::string(to_string(cfg.subcommand)) + "." + default_ext;
    if (root.contains("output")) {
        const json& o = root["output"];
        if (!o.is_object()) {
            v.schema("/output", "expected an object");
        } else {
            v.check_keys(o, "/output", {"path", "format", "stride"});
            cfg.output.path = v.text(o, "path", "/output", cfg.output.path);
            std::string fmt = v.text(o, "format", "/output", default_ext);
            if (fmt == "csv")
                cfg.output.format = OutputFormat::csv;
            else if (fmt == "json")
                cfg.output.format = OutputFormat::json_format;
            else
                v.schema("/output/format", "expected \"csv\" or \"json\"");
            cfg.output.stride = v.integer(o, "stride", "/output", 1);
            if (cfg.output.stride < 1) v.physics("/output/stride", "must be >= 1");
        }
    }

    if (!v.issues.empty()) throw config_error(std::move(v.issues));
    return cfg;
}

/// Canonical serialization; parse(to_json(cfg).dump()) == cfg.
inline json to_json(const ScenarioConfig& cfg) {
    json root;
    root["subcommand"] = to_string(cfg.subcommand);
    json m;
    m["mass"] = cfg.mode.mass;
    m["charge"] = cfg.mode.charge;
    m["hbar"] = cfg.mode.hbar;
    m["drive_frequency"] = cfg.mode.drive_frequency;
    m["particle_frequency"] = cfg.mode.particle_frequency;
    m["eps_singular"] = cfg.mode.eps_singular;
    root["mode"] = m;

    if (cfg.planewave) {
        json p;
        p["current_amplitude"] = cfg.planewave->current_amplitude;
        if (!cfg.planewave->sample_x.empty() || !cfg.planewave->sample_t.empty()) {
            p["samples"] = {{"x", cfg.planewave->sample_x},
                            {"t", cfg.planewave->sample_t}};
        }
        root["planewave"] = p;
    }
    if (cfg.fdtd) {
        const FdtdConfig& f = *cfg.fdtd;
        root["fdtd"] = {
            {"grid",
             {{"length", f.length}, {"nx", f.nx}, {"cfl", f.cfl}, {"periods", f.periods}}},
            {"source",
             {{"current_amplitude", f.current_amplitude},
              {"window", {f.window_lo, f.window_hi}},
              {"ramp_periods", f.ramp_periods},
              {"taper_width", f.taper_width}}},
            {"probes", {{"region", {f.probe_lo, f.probe_hi}}}},
            {"measure_periods", f.measure_periods}};
    }
    if (cfg.circuit) {
        json c;
        c["area"] = cfg.circuit->area;
        c["current_amplitude"] = cfg.circuit->current_amplitude;
        if (cfg.circuit->sweep) {
            const SweepConfig& s = *cfg.circuit->sweep;
            c["sweep"] = {{"characteristic_impedance", s.characteristic_impedance},
                          {"source_resistance", s.source_resistance},
                          {"source_voltage", s.source_voltage},
                          {"line_length_wavelengths", s.line_length_wavelengths},
                          {"load_min", s.load_min},
                          {"load_max", s.load_max},
                          {"points", s.points}};
        }
        root["circuit"] = c;
    }
    if (cfg.quantum) {
        json q;
        q["alpha"] = {cfg.quantum->alpha.real(), cfg.quantum->alpha.imag()};
        q["truncation"] = cfg.quantum->truncation;
        if (cfg.quantum->chemical_potential)
            q["chemical_potential"] = *cfg.quantum->chemical_potential;
        root["quantum"] = q;
    }

    root["output"] = {
        {"path", cfg.output.path},
        {"format", cfg.output.format == OutputFormat::csv ? "csv" : "json"},
        {"stride", cfg.output.stride}};
    return root;
}

// ---------------------------------------------------------------------------
// Formatting helpers

/// 17 significant digits: round-trip exact for IEEE doubles.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string format_complex(std::complex<double> z) {
    return format_double(z.real()) + (z.imag() < 0.0 ? " - " : " + ") +
           format_double(std::abs(z.imag())) + "i";
}

inline std::string csv_row(const std::vector<double>& values) {
    std::string row;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) row += ",";
        row += format_double(values[i]);
    }
    row += "\n";
    return row;
}

inline json complex_json(std::complex<double> z) {
    return json{{"re", z.real()}, {"im", z.imag()}};
}

inline json constitutive_json(const ConstitutiveSet& c) {
    return json{{"v0", c.v0},     {"vm", c.vm},   {"n", c.n},
                {"k", c.k},       {"k0", c.k0},   {"Z0", c.Z0},
                {"Zf", c.Zf},     {"eta0", c.eta0}, {"eta", c.eta},
                {"xi0", c.xi0},   {"xi", c.xi},
                {"n_above_unity", c.n_above_unity}};
}

}  // namespace mwx::io
