#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <string>

#include "mwx/io.hpp"

using mwx::io::config_error;
using mwx::io::parse_config;
using mwx::io::ScenarioConfig;
using mwx::io::Subcommand;

namespace {

bool has_issue(const config_error& e, const std::string& pointer, bool physics) {
    for (const auto& issue : e.issues())
        if (issue.pointer == pointer && issue.physics == physics) return true;
    return false;
}

const char* minimal_params = R"({
  "subcommand": "params",
  "mode": {"mass": 1.0, "drive_frequency": 1.0, "particle_frequency": 4.0}
})";

}  // namespace

TEST_CASE("minimal params config parses with defaults") {
    ScenarioConfig cfg = parse_config(minimal_params);
    CHECK(cfg.subcommand == Subcommand::params);
    CHECK(cfg.mode.mass == 1.0);
    CHECK(cfg.mode.charge == 1.0);
    CHECK(cfg.mode.hbar == mwx::hbar_si);
    CHECK(cfg.mode.eps_singular == 1e-9);
    CHECK(cfg.output.path == "params.json");
    CHECK(cfg.output.format == mwx::io::OutputFormat::json_format);
    CHECK(cfg.output.stride == 1);
}

TEST_CASE("syntax errors are schema issues") {
    try {
        parse_config("{ not json");
        FAIL("expected config_error");
    } catch (const config_error& e) {
        REQUIRE(e.issues().size() == 1);
        CHECK_FALSE(e.issues()[0].physics);
        CHECK_FALSE(e.schema_only_physics());
    }
}

TEST_CASE("nu = omega is a physics issue naming the singularity") {
    const char* text = R"({
      "subcommand": "params",
      "mode": {"mass": 1.0, "drive_frequency": 2.0, "particle_frequency": 2.0}
    })";
    try {
        parse_config(text);
        FAIL("expected config_error");
    } catch (const config_error& e) {
        REQUIRE(e.issues().size() == 1);
        CHECK(e.issues()[0].physics);
        CHECK(e.issues()[0].pointer == "/mode");
        CHECK(std::string(e.issues()[0].message).find("n = 1") != std::string::npos);
        CHECK(e.schema_only_physics());  // maps to the physics exit code
    }
}

TEST_CASE("unknown keys are reported with their JSON pointer") {
    const char* text = R"({
      "subcommand": "params",
      "mode": {"mass": 1.0, "drive_frequency": 1.0, "particle_frequency": 4.0,
               "colour": "blue"}
    })";
    try {
        parse_config(text);
        FAIL("expected config_error");
    } catch (const config_error& e) {
        CHECK(has_issue(e, "/mode/colour", false));
    }
}

TEST_CASE("all issues are collected, not just the first") {
    const char* text = R"({
      "subcommand": "params",
      "mode": {"mass": -1.0, "drive_frequency": 1.0, "particle_frequency": 4.0,
               "colour": "blue"},
      "extra": 1
    })";
    try {
        parse_config(text);
        FAIL("expected config_error");
    } catch (const config_error& e) {
        CHECK(e.issues().size() >= 3);
        CHECK(has_issue(e, "/mode/colour", false));
        CHECK(has_issue(e, "/extra", false));
        CHECK(has_issue(e, "/mode", true));
    }
}

TEST_CASE("subcommand and block must match, and only one block is allowed") {
    const char* mismatched = R"({
      "subcommand": "params",
      "mode": {"mass": 1.0, "drive_frequency": 1.0, "particle_frequency": 4.0},
      "quantum": {"alpha": 1.0}
    })";
    CHECK_THROWS_AS(parse_config(mismatched), config_error);

    const char* doubled = R"({
      "subcommand": "quantum",
      "mode": {"mass": 1.0, "drive_frequency": 1.0, "particle_frequency": 4.0},
      "quantum": {"alpha": 1.0},
      "circuit": {"area": 1.0}
    })";
    CHECK_THROWS_AS(parse_config(doubled), config_error);

    const char* missing_block = R"({
      "subcommand": "fdtd",
      "mode": {"mass": 1.0, "drive_frequency": 1.0, "particle_frequency": 4.0}
    })";
    CHECK_THROWS_AS(parse_config(missing_block), config_error);
}

TEST_CASE("charge conventions in configs") {
    const char* by_convention = R"({
      "subcommand": "params",
      "mode": {"mass": 2.5, "charge_convention": "mass",
               "drive_frequency": 1.0, "particle_frequency": 4.0}
    })";
    CHECK(parse_config(by_convention).mode.charge == 2.5);

    const char* both = R"({
      "subcommand": "params",
      "mode": {"mass": 2.5, "charge": 1.0, "charge_convention": "mass",
               "drive_frequency": 1.0, "particle_frequency": 4.0}
    })";
    CHECK_THROWS_AS(parse_config(both), config_error);
}

TEST_CASE("fdtd configs run the physics checks") {
    std::string base = R"({
      "subcommand": "fdtd",
      "mode": {"mass": 1.0, "hbar": 1.0, "drive_frequency": 1.0,
               "particle_frequency": 4.0},
      "fdtd": {
        "grid": {"length": 227.0, "nx": 512, "cfl": CFL, "periods": 20},
        "source": {"current_amplitude": 1.0, "window": [85.0, 142.0],
                   "ramp_periods": RAMP},
        "probes": {"region": [104.0, 122.0]}
      }
    })";

    auto with = [&](const std::string& cfl, const std::string& ramp) {
        std::string text = base;
        text.replace(text.find("CFL"), 3, cfl);
        text.replace(text.find("RAMP"), 4, ramp);
        return text;
    };

    CHECK(parse_config(with("0.4", "4")).fdtd.has_value());

    try {
        parse_config(with("1.2", "4"));
        FAIL("expected config_error");
    } catch (const config_error& e) {
        CHECK(has_issue(e, "/fdtd/grid/cfl", true));
        CHECK(e.schema_only_physics());
    }

    try {
        parse_config(with("0.4", "1"));
        FAIL("expected config_error");
    } catch (const config_error& e) {
        CHECK(has_issue(e, "/fdtd/source/ramp_periods", true));
    }

    // too few points per wavelength: shrink nx
    std::string coarse = with("0.4", "4");
    coarse.replace(coarse.find("\"nx\": 512"), 9, "\"nx\": 64");
    try {
        parse_config(coarse);
        FAIL("expected config_error");
    } catch (const config_error& e) {
        CHECK(has_issue(e, "/fdtd/grid/nx", true));
    }
}

TEST_CASE("quantum truncation below the tail rule is rejected") {
    const char* text = R"({
      "subcommand": "quantum",
      "mode": {"mass": 1.0, "hbar": 1.0, "drive_frequency": 1.0,
               "particle_frequency": 4.0},
      "quantum": {"alpha": 2.0, "truncation": 8}
    })";
    try {
        parse_config(text);
        FAIL("expected config_error");
    } catch (const config_error& e) {
        CHECK(has_issue(e, "/quantum/truncation", true));
    }
}

TEST_CASE("round trip: parse, serialize, parse again") {
    const char* configs[] = {
        minimal_params,
        R"({
          "subcommand": "quantum",
          "mode": {"mass": 1.0, "hbar": 1.0, "drive_frequency": 1.0,
                   "particle_frequency": 4.0},
          "quantum": {"alpha": [1.5, -0.5], "chemical_potential": 2.0},
          "output": {"path": "q.json", "format": "json", "stride": 1}
        })",
        R"({
          "subcommand": "circuit",
          "mode": {"mass": 1.0, "hbar": 1.0, "drive_frequency": 1.0,
                   "particle_frequency": 4.0},
          "circuit": {"area": 2.0, "current_amplitude": 0.5,
                      "sweep": {"characteristic_impedance": 50.0,
                                "source_resistance": 50.0,
                                "load_min": 10.0, "load_max": 150.0,
                                "points": 141}}
        })",
    };
    for (const char* text : configs) {
        ScenarioConfig once = parse_config(text);
        std::string serialized = mwx::io::to_json(once).dump(2);
        ScenarioConfig twice = parse_config(serialized);
        CHECK(once == twice);
        // canonical form is a fixed point
        CHECK(mwx::io::to_json(twice).dump(2) == serialized);
    }
}

TEST_CASE("doubles survive the 17-digit round trip") {
    for (double v : {0.1, 1.0 / 3.0, -4.0 / 3.0, 1.7e308, 5e-324, 0.0,
                     0.35355339059327373}) {
        std::string s = mwx::io::format_double(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
}
