#include "pns/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

#include "pns/errors.hpp"
#include "pns/sampler.hpp"
#include "pns/topology.hpp"
#include "pns/triangle.hpp"

namespace pns {

namespace {

Rat field_rat(const nlohmann::json& doc, const std::string& field, const Rat& fallback) {
    if (!doc.contains(field)) return fallback;
    if (!doc[field].is_string())
        throw ConfigError("field '" + field + "' must be a rational string like \"3/4\"");
    try {
        return parse_rat(doc[field].get<std::string>());
    } catch (const std::exception& e) {
        throw ConfigError("field '" + field + "': " + e.what());
    }
}

long field_int(const nlohmann::json& doc, const std::string& field, long fallback, long lo, long hi) {
    if (!doc.contains(field)) return fallback;
    if (!doc[field].is_number_integer()) throw ConfigError("field '" + field + "' must be an integer");
    long v = doc[field].get<long>();
    if (v < lo || v > hi)
        throw ConfigError("field '" + field + "' out of range [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "]");
    return v;
}

std::string field_str(const nlohmann::json& doc, const std::string& field, const std::string& fallback) {
    if (!doc.contains(field)) return fallback;
    if (!doc[field].is_string()) throw ConfigError("field '" + field + "' must be a string");
    return doc[field].get<std::string>();
}

}  // namespace

ScenarioConfig parse_scenario(const nlohmann::json& doc) {
    if (!doc.is_object()) throw ConfigError("config document must be a JSON object");
    ScenarioConfig cfg;
    cfg.name = field_str(doc, "name", cfg.name);
    cfg.mode = field_str(doc, "mode", cfg.mode);
    if (cfg.mode != "metrize" && cfg.mode != "embed" && cfg.mode != "check-tnorm")
        throw ConfigError("field 'mode' must be one of metrize | embed | check-tnorm");
    cfg.dimension = static_cast<int>(field_int(doc, "dimension", cfg.dimension, 1, 16));
    cfg.gauge = field_str(doc, "gauge", cfg.gauge);
    cfg.norm = field_str(doc, "norm", cfg.norm);

    if (doc.contains("radii")) {
        const auto& r = doc["radii"];
        if (!r.is_object()) throw ConfigError("field 'radii' must be an object");
        std::string kind = field_str(r, "kind", "one_over_n");
        if (kind == "one_over_n") {
            cfg.radii.kind = RadiiSpec::Kind::OneOverN;
        } else if (kind == "geometric") {
            cfg.radii.kind = RadiiSpec::Kind::Geometric;
            cfg.radii.ratio = field_rat(r, "ratio", cfg.radii.ratio);
            if (cfg.radii.ratio <= 0 || cfg.radii.ratio >= 1)
                throw ConfigError("field 'radii.ratio' must lie strictly between 0 and 1");
        } else {
            throw ConfigError("field 'radii.kind' must be one_over_n | geometric");
        }
        cfg.radii.n_max = field_int(r, "n_max", cfg.radii.n_max, 1, 1 << 16);
    }

    cfg.tnorm = field_str(doc, "tnorm", cfg.tnorm);
    if (doc.contains("tnorm_table")) {
        const auto& rows = doc["tnorm_table"];
        if (!rows.is_array()) throw ConfigError("field 'tnorm_table' must be an array of [x, y, value]");
        for (const auto& row : rows) {
            if (!row.is_array() || row.size() != 3)
                throw ConfigError("field 'tnorm_table': each entry must be [x, y, value]");
            std::array<Rat, 3> entry;
            for (int i = 0; i < 3; ++i) {
                if (!row[static_cast<std::size_t>(i)].is_string())
                    throw ConfigError("field 'tnorm_table': entries must be rational strings");
                try {
                    entry[static_cast<std::size_t>(i)] =
                        parse_rat(row[static_cast<std::size_t>(i)].get<std::string>());
                } catch (const std::exception& e) {
                    throw ConfigError(std::string("field 'tnorm_table': ") + e.what());
                }
            }
            cfg.tnorm_table.push_back(entry);
        }
    }

    std::string variant = field_str(doc, "variant", "hohle");
    if (variant == "hohle")
        cfg.variant = FamilyVariant::Hohle;
    else if (variant == "archimedean")
        cfg.variant = FamilyVariant::Archimedean;
    else
        throw ConfigError("field 'variant' must be hohle | archimedean");

    cfg.delta = field_rat(doc, "delta", cfg.delta);
    cfg.seed = static_cast<std::uint64_t>(field_int(doc, "seed", static_cast<long>(cfg.seed), 0,
                                                    std::numeric_limits<long>::max()));
    cfg.sample_count = static_cast<int>(field_int(doc, "sample_count", cfg.sample_count, 1, 100000));
    cfg.lambda_points = static_cast<int>(field_int(doc, "lambda_points", cfg.lambda_points, 1, 1000));
    cfg.x_step = field_rat(doc, "x_step", cfg.x_step);
    if (cfg.x_step <= 0) throw ConfigError("field 'x_step' must be positive");
    cfg.horizon = field_rat(doc, "horizon", cfg.horizon);
    if (cfg.horizon <= 0) throw ConfigError("field 'horizon' must be positive");
    if (cfg.horizon > 1000) throw ConfigError("field 'horizon' is unreasonably large (max 1000)");
    if (cfg.horizon / cfg.x_step > 100000)
        throw ConfigError("fields 'horizon'/'x_step' would create an oversized evaluation grid");

    if (doc.contains("n_range")) {
        const auto& nr = doc["n_range"];
        if (!nr.is_array() || nr.size() != 2 || !nr[0].is_number_integer() || !nr[1].is_number_integer())
            throw ConfigError("field 'n_range' must be [lo, hi] integers");
        cfg.n_lo = nr[0].get<long>();
        cfg.n_hi = nr[1].get<long>();
        if (cfg.n_lo < 1 || cfg.n_hi < cfg.n_lo) throw ConfigError("field 'n_range' must satisfy 1 <= lo <= hi");
        if (cfg.n_hi > cfg.radii.n_max) throw ConfigError("field 'n_range' exceeds radii.n_max");
    }
    cfg.pair_count = static_cast<int>(field_int(doc, "pair_count", cfg.pair_count, 1, 100000));
    cfg.tnorm_grid_denominator =
        static_cast<int>(field_int(doc, "tnorm_grid_denominator", cfg.tnorm_grid_denominator, 10, 4096));
    if (doc.contains("metrization_hypotheses")) {
        if (!doc["metrization_hypotheses"].is_boolean())
            throw ConfigError("field 'metrization_hypotheses' must be a boolean");
        cfg.metrization_hypotheses = doc["metrization_hypotheses"].get<bool>();
    }
    cfg.boundary_n = static_cast<int>(field_int(doc, "boundary_n", cfg.boundary_n, 0, 1 << 16));
    if (doc.contains("t_grid")) {
        const auto& tg = doc["t_grid"];
        if (!tg.is_array()) throw ConfigError("field 't_grid' must be an array of rational strings");
        for (const auto& v : tg) {
            if (!v.is_string()) throw ConfigError("field 't_grid' must contain rational strings");
            try {
                cfg.t_grid.push_back(parse_rat(v.get<std::string>()));
            } catch (const std::exception& e) {
                throw ConfigError(std::string("field 't_grid': ") + e.what());
            }
            if (cfg.t_grid.back() <= 0) throw ConfigError("field 't_grid' entries must be positive");
        }
    }
    return cfg;
}

ScenarioConfig load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("config parse error in " + path + ": " + e.what());
    }
    return parse_scenario(doc);
}

nlohmann::ordered_json scenario_echo(const ScenarioConfig& cfg) {
    nlohmann::ordered_json echo;
    echo["name"] = cfg.name;
    echo["mode"] = cfg.mode;
    echo["dimension"] = cfg.dimension;
    echo["gauge"] = cfg.gauge;
    echo["norm"] = cfg.norm;
    echo["radii"] = {{"kind", cfg.radii.kind == RadiiSpec::Kind::OneOverN ? "one_over_n" : "geometric"},
                     {"ratio", rat_text(cfg.radii.ratio)},
                     {"n_max", cfg.radii.n_max}};
    echo["tnorm"] = cfg.tnorm;
    if (!cfg.tnorm_table.empty()) {
        auto rows = nlohmann::ordered_json::array();
        for (const auto& e : cfg.tnorm_table)
            rows.push_back({rat_text(e[0]), rat_text(e[1]), rat_text(e[2])});
        echo["tnorm_table"] = rows;
    }
    echo["variant"] = cfg.variant == FamilyVariant::Hohle ? "hohle" : "archimedean";
    echo["delta"] = rat_text(cfg.delta);
    echo["seed"] = cfg.seed;
    echo["sample_count"] = cfg.sample_count;
    echo["lambda_points"] = cfg.lambda_points;
    echo["x_step"] = rat_text(cfg.x_step);
    echo["horizon"] = rat_text(cfg.horizon);
    echo["n_range"] = {cfg.n_lo, cfg.n_hi};
    echo["pair_count"] = cfg.pair_count;
    echo["tnorm_grid_denominator"] = cfg.tnorm_grid_denominator;
    echo["metrization_hypotheses"] = cfg.metrization_hypotheses;
    echo["boundary_n"] = cfg.boundary_n;
    auto tg = nlohmann::ordered_json::array();
    for (const Rat& t : cfg.t_grid) tg.push_back(rat_text(t));
    echo["t_grid"] = tg;
    return echo;
}

TNorm scenario_tnorm(const ScenarioConfig& cfg) {
    if (cfg.tnorm == "custom-table") {
        if (cfg.tnorm_table.empty()) throw ConfigError("tnorm 'custom-table' requires a 'tnorm_table'");
        return TNorm::from_table("custom-table", cfg.tnorm_table);
    }
    auto t = TNorm::by_name(cfg.tnorm);
    if (!t) throw ConfigError("unknown t-norm name: '" + cfg.tnorm + "'");
    return *t;
}

Gauge scenario_gauge(const std::string& name) {
    if (name == "l1") return gauge_l1();
    if (name == "linf") return gauge_linf();
    if (name == "l2sq") return gauge_l2sq();
    if (name == "halfspace") return gauge_halfspace();
    if (name == "seminorm_drop") return gauge_seminorm_drop();
    throw ConfigError("unknown gauge name: '" + name + "'");
}

VerificationGrids scenario_grids(const ScenarioConfig& cfg) {
    VerificationGrids grids;
    grids.lambda_grid.clear();
    for (int k = 0; k <= cfg.lambda_points; ++k) grids.lambda_grid.emplace_back(k, cfg.lambda_points);
    grids.x_grid.clear();
    for (Rat x(0); x <= cfg.horizon; x += cfg.x_step) grids.x_grid.push_back(x);
    grids.t_grid = cfg.t_grid.empty() ? default_t_grid() : cfg.t_grid;
    grids.horizon = cfg.horizon;
    grids.n_lo = cfg.n_lo;
    grids.n_hi = cfg.n_hi;
    grids.pair_count = cfg.pair_count;
    grids.tnorm_grid_denominator = cfg.tnorm_grid_denominator;
    grids.seed = cfg.seed;
    return grids;
}

std::vector<Vector> scenario_samples(const ScenarioConfig& cfg, const RadiiSpec* boundary_radii) {
    std::vector<Rat> boundary;
    if (boundary_radii) {
        long hi = std::min<long>(cfg.boundary_n, boundary_radii->n_max);
        for (long n = 1; n <= hi; ++n) {
            Rat r = boundary_radii->radius(n);
            boundary.push_back(r);
            boundary.push_back(r + Rat(1, 64));
        }
    }
    return sample_vectors(cfg.seed, cfg.dimension, cfg.sample_count, boundary);
}

namespace {

void add_gate_failure(VerificationReport& report, const PreconditionError& e) {
    CheckOutcome out;
    out.pass = false;
    out.instances = 1;
    out.witness = e.what();
    out.note = "failed hypothesis: " + e.hypothesis();
    report.add(make_record("gate." + e.hypothesis(), out));
}

void add_internal_failure(VerificationReport& report, const std::exception& e) {
    CheckOutcome out;
    out.pass = false;
    out.instances = 1;
    out.witness = e.what();
    report.add(make_record("internal_error", out));
}

}  // namespace

VerificationReport run_metrize_verification(const ScenarioConfig& cfg) {
    VerificationReport report;
    report.set_config_echo(scenario_echo(cfg));
    try {
        TNorm tnorm = scenario_tnorm(cfg);
        FilterBase base(scenario_gauge(cfg.gauge), cfg.radii);
        std::vector<Vector> samples = scenario_samples(cfg, &cfg.radii);
        std::vector<Rat> cert_grid = uniform_grid(cfg.tnorm_grid_denominator);
        MetrizationResult result = construct_nu(base, tnorm, cfg.variant, cfg.delta, cert_grid);
        report.merge(run_full_verification(result, base, tnorm, scenario_grids(cfg), samples));
    } catch (const ConfigError&) {
        throw;
    } catch (const PreconditionError& e) {
        add_gate_failure(report, e);
    } catch (const std::exception& e) {
        add_internal_failure(report, e);
    }
    return report;
}

VerificationReport run_embed_verification(const ScenarioConfig& cfg) {
    VerificationReport report;
    report.set_config_echo(scenario_echo(cfg));
    try {
        Gauge g = scenario_gauge(cfg.norm);
        if (g.squared) throw ConfigError("embed mode needs a plain-valued norm (l1 | linf | seminorm_drop)");
        VerificationGrids grids = scenario_grids(cfg);
        PNSpaceSpec spec = embed_normed(cfg.norm, g.value, cfg.dimension, grids.horizon,
                                        grids.lambda_grid, grids.x_grid);
        std::vector<Vector> samples = scenario_samples(cfg, nullptr);
        auto pairs = sample_pairs(samples, grids.pair_count, cfg.seed + 1);
        auto triples = sample_triples(samples, grids.pair_count, cfg.seed + 2);

        report.add(make_record("pn.N1", check_N1(spec, samples)));
        report.add(make_record("pn.N2", check_N2(spec, samples)));
        report.add(make_record("pn.N3", check_N3(spec, pairs)));
        report.add(make_record("pn.N4", check_N4(spec, samples)));

        PMSpec pm = derived_pm(spec);
        report.add(make_record("pm.M1", check_M1(pm, pairs)));
        report.add(make_record("pm.M2", check_M2(pm, pairs)));
        report.add(make_record("pm.M3", check_M3(pm, triples)));

        SerstnevOutcome ser = check_serstnev(spec, samples);
        report.add(make_record("serstnev.scaling", ser.scaling));
        report.add(make_record("serstnev.eq1", ser.eq1));
        CheckOutcome cross;
        cross.pass = ser.consistent;
        cross.instances = 1;
        if (!ser.consistent) cross.witness = "scaling and eq1 forms disagreed on the sampled instances";
        report.add(make_record("serstnev.crosscheck", cross, CheckStatus::Finding));
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        add_internal_failure(report, e);
    }
    return report;
}

VerificationReport run_tnorm_checks(const ScenarioConfig& cfg) {
    VerificationReport report;
    report.set_config_echo(scenario_echo(cfg));
    try {
        TNorm tnorm = scenario_tnorm(cfg);
        std::vector<Rat> grid = uniform_grid(cfg.tnorm_grid_denominator);

        TNormAxiomReport ax = check_tnorm_axioms(tnorm, grid);
        CheckOutcome out;
        out.pass = ax.pass;
        out.instances = ax.instances;
        if (!ax.pass) {
            const auto& v = ax.violations.front();
            out.witness = v.axiom + " fails";
            for (const Rat& p : v.point) out.values.emplace_back("point", rat_text(p));
            out.note = v.note;
        }
        report.add(make_record("tnorm.axioms", out));

        TNorm::SupDiagonal sup = tnorm.sup_diagonal(grid);
        CheckOutcome sd;
        sd.instances = 1;
        sd.pass = true;
        sd.values.emplace_back("sup_diagonal", rat_text(sup.value));
        sd.note = sup.exact ? "closed form" : "grid lower bound";
        report.add(make_record("tnorm.sup_diagonal", sd));

        if (cfg.metrization_hypotheses) {
            GateHypothesis hyp = cfg.variant == FamilyVariant::Hohle
                                     ? GateHypothesis::Subproduct
                                     : GateHypothesis::ArchimedeanNearOrigin;
            try {
                int n0 = compute_N0(tnorm, cfg.delta, hyp, grid);
                CheckOutcome gate;
                gate.instances = 1;
                gate.values.emplace_back("N0", std::to_string(n0));
                report.add(make_record("gate.N0", gate));
            } catch (const PreconditionError& e) {
                add_gate_failure(report, e);
            }
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        add_internal_failure(report, e);
    }
    return report;
}

VerificationReport run_topology_audit(const ScenarioConfig& cfg) {
    VerificationReport report;
    report.set_config_echo(scenario_echo(cfg));
    try {
        TNorm tnorm = scenario_tnorm(cfg);
        FilterBase base(scenario_gauge(cfg.gauge), cfg.radii);
        std::vector<Vector> samples = scenario_samples(cfg, &cfg.radii);
        std::vector<Rat> cert_grid = uniform_grid(cfg.tnorm_grid_denominator);
        VerificationGrids grids = scenario_grids(cfg);
        MetrizationResult result = construct_nu(base, tnorm, cfg.variant, cfg.delta, cert_grid);

        PNSpaceSpec spec;
        spec.dimension = cfg.dimension;
        spec.nu = result.nu;
        spec.tnorm = tnorm;
        spec.horizon = grids.horizon;
        spec.lambda_grid = grids.lambda_grid;
        spec.x_grid = grids.x_grid;

        // Separating a point at level L needs roughly 2 N0 (L+1) strong
        // levels, so size the base from the materialized radii, not n_hi.
        NeighborhoodBase strong = strong_base_from_pn(spec, std::max(grids.n_hi, cfg.radii.n_max));
        report.add(make_record("topology.base_nesting", check_base_nesting(strong, samples)));
        report.add(make_record("topology.frechet_separable", check_frechet_separable(strong, samples)));
        {
            CheckOutcome radial, circled;
            for (long n : {1L, 2L, 3L, 5L, 8L}) {
                SetPred level_set = [&strong, n](const Vector& q) { return strong.member(q, n); };
                RadialCircledOutcome rc = check_radial_circled(level_set, samples, grids.lambda_grid);
                radial.instances += rc.radial.instances;
                circled.instances += rc.circled.instances;
                if (!rc.radial.pass && radial.pass) {
                    radial.pass = false;
                    radial.witness = "N_theta(1/" + std::to_string(n) + "): " + rc.radial.witness;
                }
                if (!rc.circled.pass && circled.pass) {
                    circled.pass = false;
                    circled.witness = "N_theta(1/" + std::to_string(n) + "): " + rc.circled.witness;
                }
            }
            report.add(make_record("topology.strong_base_radial", radial));
            report.add(make_record("topology.strong_base_circled", circled));
        }

        std::span<const Vector> sub(samples.data(), std::min<std::size_t>(samples.size(), 24));
        report.add(make_record("topology.translation_invariance",
                               check_translation_invariance(spec, sub, grids.t_grid)));

        auto pairs = sample_pairs(samples, grids.levy_pair_cap, cfg.seed + 2);
        LevyCharacterizationOutcome levy = check_levy_characterization(spec, pairs, grids.t_grid);
        report.add(make_record("topology.levy_characterization", levy.agreement));
        if (levy.boundary_instances > 0) {
            CheckOutcome bo;
            bo.pass = false;
            bo.instances = levy.boundary_instances;
            bo.witness = levy.boundary_example;
            bo.note = "strict/non-strict boundary; the two filters differ only here";
            report.add(make_record("topology.levy_characterization.boundary", bo, CheckStatus::Finding));
        }

        // The vicinity base is closed-form, so levels cost nothing; sampled
        // pairs can differ by gauge ~1/(64 n^2) and need ~2 N0 (level+1)
        // levels before one excludes them.
        GeneralizedUniformity uniformity = uniformity_from_pn(spec, 1L << 17);
        report.add(make_record("uniformity.separation", check_uniformity_separation(uniformity, sub)));
        {
            // Sections of the PN-induced vicinities contain the strong
            // neighborhoods: strict threshold implies the non-strict one.
            CheckOutcome out;
            for (long n : {1L, 2L, 4L}) {
                SetPred section = derive_topology_section(uniformity, n, samples.front());
                SetPred neighborhood = strong_neighborhood(spec, samples.front(), Rat(1, n));
                for (const Vector& q : sub) {
                    ++out.instances;
                    if (neighborhood(q) && !section(q)) {
                        out.pass = false;
                        out.witness = "strong neighborhood point outside vicinity section, n = " +
                                      std::to_string(n) + ", q = " + q.text();
                        break;
                    }
                }
                if (!out.pass) break;
            }
            report.add(make_record("uniformity.section_contains_strong_neighborhood", out));
        }

        TopologyAxiomOutcome topo = check_topology_axiom(spec, samples, grids.t_grid,
                                                         static_cast<std::size_t>(grids.topology_center_cap));
        CheckOutcome out;
        out.pass = topo.unresolved == 0;
        out.instances = topo.satisfied + topo.unresolved;
        out.witness = topo.unresolved_example;
        out.note = std::to_string(topo.satisfied) + " satisfied, " + std::to_string(topo.unresolved) +
                   " unresolved (sampling cannot refute)";
        report.add(make_record("topology.neighborhood_nesting", out, CheckStatus::Unresolved));
    } catch (const ConfigError&) {
        throw;
    } catch (const PreconditionError& e) {
        add_gate_failure(report, e);
    } catch (const std::exception& e) {
        add_internal_failure(report, e);
    }
    return report;
}

}  // namespace pns
