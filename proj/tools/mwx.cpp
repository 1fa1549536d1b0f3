// mwx: matter-wave Maxwell-dual calculator and simulator.
//
// Usage: mwx <params|planewave|fdtd|circuit|quantum> --config <path>
//            [--out <dir>] [--jobs N]
//
// Exit codes: 0 success, 2 config error, 3 physics/singularity error,
// 4 numerical blowup.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "mwx.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_config = 2;
constexpr int exit_physics = 3;
constexpr int exit_blowup = 4;

int run_subcommand(mwx::io::Subcommand sub, const std::string& config_path,
                   const std::string& out_dir, int jobs) {
    std::ifstream in(config_path);
    if (!in) {
        std::cerr << "mwx: cannot read config file " << config_path << "\n";
        return exit_config;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();

    mwx::io::ScenarioConfig cfg;
    try {
        cfg = mwx::io::parse_config(buffer.str());
    } catch (const mwx::io::config_error& e) {
        std::cerr << "mwx: " << e.what() << "\n";
        return e.schema_only_physics() ? exit_physics : exit_config;
    }
    if (cfg.subcommand != sub) {
        std::cerr << "mwx: config subcommand \"" << mwx::io::to_string(cfg.subcommand)
                  << "\" does not match command line \"" << mwx::io::to_string(sub)
                  << "\"\n";
        return exit_config;
    }

    try {
        mwx::io::RunResult result = mwx::io::run_scenario(cfg, out_dir, jobs);
        mwx::io::log(mwx::io::LogLevel::info,
                     "wrote " + result.output_path.string());
    } catch (const mwx::blowup_error& e) {
        std::cerr << "mwx: numerical blowup: " << e.what() << "\n";
        return exit_blowup;
    } catch (const mwx::physics_error& e) {
        std::cerr << "mwx: " << e.what() << "\n";
        return exit_physics;
    }
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"matter-wave Maxwell duals: parameters, plane waves, 1D FDTD, "
                 "circuits, and truncated Fock-space states"};
    app.require_subcommand(1);

    struct Options {
        std::string config;
        std::string out = ".";
        int jobs = 1;
    };

    std::vector<std::pair<mwx::io::Subcommand, CLI::App*>> subs;
    Options opts;
    for (auto sub : {mwx::io::Subcommand::params, mwx::io::Subcommand::planewave,
                     mwx::io::Subcommand::fdtd, mwx::io::Subcommand::circuit,
                     mwx::io::Subcommand::quantum}) {
        CLI::App* cmd = app.add_subcommand(mwx::io::to_string(sub));
        cmd->add_option("--config", opts.config, "JSON scenario config")->required();
        cmd->add_option("--out", opts.out, "output directory");
        cmd->add_option("--jobs", opts.jobs, "worker threads for sweeps")
            ->check(CLI::PositiveNumber);
        subs.emplace_back(sub, cmd);
    }

    CLI11_PARSE(app, argc, argv);

    for (auto& [sub, cmd] : subs)
        if (cmd->parsed()) return run_subcommand(sub, opts.config, opts.out, opts.jobs);
    return exit_config;
}
