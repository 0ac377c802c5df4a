// Batch front end: load a scenario config, run the requested verification
// suite, write the human and machine reports.
//
// Exit codes: 0 all checks passed, 1 config error, 2 at least one failure.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "pns/errors.hpp"
#include "pns/report.hpp"
#include "pns/scenario.hpp"

namespace {

struct CommonArgs {
    std::string config_path;
    std::string out_dir;
    std::optional<long> seed_override;
    bool quiet = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "Scenario config (JSON)")->required();
    cmd->add_option("--out", args.out_dir, "Directory for report.json and report.txt");
    cmd->add_option("--seed", args.seed_override, "Override the config seed");
    cmd->add_flag("--quiet", args.quiet, "Suppress the human-readable report on stdout");
}

int finish(const pns::VerificationReport& report, const CommonArgs& args) {
    if (!args.out_dir.empty()) {
        std::filesystem::create_directories(args.out_dir);
        std::ofstream machine(args.out_dir + "/report.json");
        machine << report.to_json().dump(2) << "\n";
        std::ofstream human(args.out_dir + "/report.txt");
        human << report.to_text();
    }
    if (!args.quiet) std::cout << report.to_text();
    return report.passed() ? 0 : 2;
}

int run(const CommonArgs& args, const std::string& expected_mode,
        pns::VerificationReport (*runner)(const pns::ScenarioConfig&)) {
    pns::ScenarioConfig cfg;
    try {
        cfg = pns::load_scenario_file(args.config_path);
        if (args.seed_override) cfg.seed = static_cast<std::uint64_t>(*args.seed_override);
        if (cfg.mode != expected_mode)
            throw pns::ConfigError("config mode '" + cfg.mode + "' does not match the subcommand ('" +
                                   expected_mode + "')");
        return finish(runner(cfg), args);
    } catch (const pns::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        // Domain errors are turned into fail records inside the runners;
        // anything arriving here is still reported, never a crash.
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"probabilistic normed space axiom verification"};
    app.require_subcommand(1);

    CommonArgs check_args, metrize_args, embed_args, topo_args;
    CLI::App* check = app.add_subcommand("check-tnorm", "t-norm axioms and construction gates");
    add_common(check, check_args);
    CLI::App* metrize = app.add_subcommand("metrize", "construct a probabilistic norm from a filter base and verify it");
    add_common(metrize, metrize_args);
    CLI::App* embed = app.add_subcommand("embed", "classical normed-space embedding and its full axiom suite");
    add_common(embed, embed_args);
    CLI::App* topo = app.add_subcommand("topology-audit", "strong topology and uniformity consistency checks");
    add_common(topo, topo_args);

    CLI11_PARSE(app, argc, argv);

    if (check->parsed()) return run(check_args, "check-tnorm", pns::run_tnorm_checks);
    if (metrize->parsed()) return run(metrize_args, "metrize", pns::run_metrize_verification);
    if (embed->parsed()) return run(embed_args, "embed", pns::run_embed_verification);
    if (topo->parsed()) return run(topo_args, "metrize", pns::run_topology_audit);
    return 1;
}
