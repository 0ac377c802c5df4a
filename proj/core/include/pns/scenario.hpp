#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pns/metrize.hpp"
#include "pns/report.hpp"

namespace pns {

// One batch run, parsed from a JSON config document. Every rational crosses
// the interface as a "p/q" string; nothing in a config or a report is a
// float.
struct ScenarioConfig {
    std::string name = "scenario";
    std::string mode = "metrize";  // metrize | embed | check-tnorm
    int dimension = 3;
    std::string gauge = "linf";  // l1 | linf | l2sq | halfspace | seminorm_drop
    std::string norm = "l1";     // embed mode: l1 | linf | seminorm_drop
    RadiiSpec radii;
    std::string tnorm = "drastic";  // or "custom-table" with tnorm_table
    std::vector<std::array<Rat, 3>> tnorm_table;
    FamilyVariant variant = FamilyVariant::Hohle;
    Rat delta = Rat(1);
    std::uint64_t seed = 1;
    int sample_count = 200;
    int lambda_points = 20;  // lambda grid { k/lambda_points }
    Rat x_step = Rat(1, 16);
    Rat horizon = Rat(5);
    long n_lo = 1;
    long n_hi = 20;
    int pair_count = 200;
    int tnorm_grid_denominator = 64;
    bool metrization_hypotheses = false;  // check-tnorm mode
    int boundary_n = 20;                  // gauge-boundary samples for n <= boundary_n
    std::vector<Rat> t_grid;              // default when empty
};

// Throws ConfigError naming the offending field (or the parse position when
// the document itself is malformed).
ScenarioConfig parse_scenario(const nlohmann::json& doc);
ScenarioConfig load_scenario_file(const std::string& path);

// Fixed-order echo of the effective config; part of the machine report.
nlohmann::ordered_json scenario_echo(const ScenarioConfig& cfg);

TNorm scenario_tnorm(const ScenarioConfig& cfg);
Gauge scenario_gauge(const std::string& name);
VerificationGrids scenario_grids(const ScenarioConfig& cfg);
// Sample set; boundary vectors along the first axis when radii are given.
std::vector<Vector> scenario_samples(const ScenarioConfig& cfg, const RadiiSpec* boundary_radii);

// Command bodies. Domain failures become fail records, never exceptions;
// only ConfigError escapes (the caller maps it to the config exit code).
VerificationReport run_metrize_verification(const ScenarioConfig& cfg);
VerificationReport run_embed_verification(const ScenarioConfig& cfg);
VerificationReport run_tnorm_checks(const ScenarioConfig& cfg);
VerificationReport run_topology_audit(const ScenarioConfig& cfg);

}  // namespace pns
