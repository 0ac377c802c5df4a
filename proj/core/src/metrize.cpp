#include "pns/metrize.hpp"

#include <chrono>
#include <map>
#include <sstream>
#include <stdexcept>

#include "pns/errors.hpp"
#include "pns/sampler.hpp"
#include "pns/topology.hpp"
#include "pns/triangle.hpp"

namespace pns {

Rat RadiiSpec::radius(long n) const {
    if (n < 1) throw std::domain_error("radius index must be >= 1");
    switch (kind) {
        case Kind::OneOverN:
            return Rat(1, n);
        case Kind::Geometric: {
            if (ratio <= 0 || ratio >= 1) throw std::domain_error("geometric ratio must lie in (0,1)");
            Rat r(1);
            Rat base = ratio;
            long e = n;
            while (e > 0) {  // fast exponentiation
                if (e & 1) r *= base;
                base *= base;
                e >>= 1;
            }
            return r;
        }
    }
    throw std::logic_error("unhandled radii kind");
}

Gauge gauge_l1() { return {"l1", false, [](const Vector& p) { return norm_l1(p); }}; }
Gauge gauge_linf() { return {"linf", false, [](const Vector& p) { return norm_linf(p); }}; }
Gauge gauge_l2sq() { return {"l2sq", true, [](const Vector& p) { return norm_l2sq(p); }}; }

Gauge gauge_halfspace() {
    return {"halfspace", false, [](const Vector& p) {
                Rat c = p.coords.at(0);
                return c > 0 ? c : Rat(0);
            }};
}

Gauge gauge_seminorm_drop() {
    return {"seminorm_drop", false, [](const Vector& p) {
                Rat s(0);
                for (std::size_t i = 0; i + 1 < p.coords.size(); ++i) {
                    Rat a = p.coords[i] < 0 ? -p.coords[i] : p.coords[i];
                    if (a > s) s = a;
                }
                return s;
            }};
}

bool FilterBase::contains(const Vector& p, long n) const {
    Rat r = radii_.radius(n);
    return gauge_.value(p) <= (gauge_.squared ? r * r : r);
}

bool FilterBase::in_core(const Vector& p) const { return gauge_.value(p) == 0; }

Level FilterBase::level(const Vector& p) const {
    if (in_core(p)) return {true, 0};
    if (!contains(p, 1)) return {false, 0};
    if (radii_.kind == RadiiSpec::Kind::OneOverN) {
        // g <= 1/n  <=>  n <= floor(1/g); squared gauges compare against
        // 1/n^2, so take the integer square root of the floor.
        Int bound = rat_floor(1 / gauge_.value(p));
        if (gauge_.squared) bound = sqrt(bound);
        if (bound > kLevelCap)
            throw InsufficientDepthError("level of " + p.text() +
                                         " exceeds the materialization cap; gauge value " +
                                         rat_text(gauge_.value(p)));
        return {false, static_cast<long>(bound)};
    }
    // exponential probe, then binary search for the largest containing n;
    // never evaluates a radius far beyond the answer
    long lo = 1, hi = 2;
    while (contains(p, hi)) {
        lo = hi;
        hi *= 2;
        if (hi > kLevelCap)
            throw InsufficientDepthError("level of " + p.text() +
                                         " exceeds the materialization cap; gauge value " +
                                         rat_text(gauge_.value(p)));
    }
    while (lo + 1 < hi) {
        long mid = lo + (hi - lo) / 2;
        if (contains(p, mid))
            lo = mid;
        else
            hi = mid;
    }
    return {false, lo};
}

int compute_N0(const TNorm& t, const Rat& delta, GateHypothesis hypothesis,
               std::span<const Rat> cert_grid) {
    if (delta <= 0 || delta > 1)
        throw PreconditionError("delta", "delta must lie in (0,1], got " + rat_text(delta));

    TNorm::SupDiagonal sup = t.sup_diagonal(cert_grid);
    if (!sup.exact)
        throw PreconditionError("sup_diagonal", "sup_{x<1} T(x,x) of '" + t.name() +
                                                    "' is only grid-bounded, not exactly known");
    if (sup.value >= 1)
        throw PreconditionError("sup_diagonal", "sup_{x<1} T(x,x) = " + rat_text(sup.value) +
                                                    " for '" + t.name() + "'; the construction needs it below 1");

    if (hypothesis == GateHypothesis::Subproduct) {
        HypothesisCheck sub = check_subproduct(t, delta, cert_grid);
        if (!sub.pass) {
            std::string w = sub.witness ? " (witness x = " + rat_text((*sub.witness)[0]) + ", y = " +
                                              rat_text((*sub.witness)[1]) + ")"
                                        : "";
            throw PreconditionError("subproduct",
                                    "T(x,y) <= xy fails below delta = " + rat_text(delta) + " for '" +
                                        t.name() + "'" + w);
        }
    } else {
        HypothesisCheck arch = check_archimedean_near_origin(t, delta, cert_grid);
        if (!arch.pass) {
            std::string w = arch.witness ? " (witness x = " + rat_text((*arch.witness)[0]) + ")" : "";
            throw PreconditionError("archimedean_near_origin",
                                    "0 < T(x,x) < x fails below delta = " + rat_text(delta) + " for '" +
                                        t.name() + "'" + w);
        }
    }

    // 1 - 1/N0 >= sup  <=>  N0 >= 1/(1 - sup);  1/N0 < delta  <=>  N0 > 1/delta
    Int from_sup = rat_ceil(1 / (1 - sup.value));
    Int from_delta = rat_floor(1 / delta) + 1;
    Int n0 = from_sup > from_delta ? from_sup : from_delta;
    return static_cast<int>(n0);
}

MetrizationResult construct_nu(const FilterBase& base, const TNorm& tnorm, FamilyVariant variant,
                               const Rat& delta, std::span<const Rat> cert_grid) {
    GateHypothesis hyp = variant == FamilyVariant::Hohle ? GateHypothesis::Subproduct
                                                         : GateHypothesis::ArchimedeanNearOrigin;
    int n0 = compute_N0(tnorm, delta, hyp, cert_grid);

    MetrizationResult result;
    result.n0 = n0;
    result.variant = variant;
    result.nu.name = std::string("metrization(") + base.gauge().name + "," + tnorm.name() + "," +
                     (variant == FamilyVariant::Hohle ? "hohle" : "archimedean") + ")";
    FilterBase base_copy = base;
    TNorm t = tnorm;
    result.nu.assign = [base_copy, t, variant, n0](const Vector& p) {
        Level l = base_copy.level(p);
        if (l.infinite) return DDF::eps0();
        if (variant == FamilyVariant::Hohle) return DDF::hohle_family(l.n, n0);
        return DDF::arch_family(l.n, n0, t);
    };
    return result;
}

std::vector<std::pair<long, CheckOutcome>> verify_filter_equivalence(const MetrizationResult& result,
                                                                     const FilterBase& base,
                                                                     std::span<const Vector> samples,
                                                                     long n_lo, long n_hi) {
    if (n_lo < 1 || n_hi < n_lo) throw std::invalid_argument("bad n-range for filter equivalence");
    if (n_hi > base.radii().n_max) throw std::invalid_argument("n-range exceeds materialized n_max");
    std::vector<std::pair<long, CheckOutcome>> out;
    for (long n = n_lo; n <= n_hi; ++n) {
        CheckOutcome o;
        Rat x(1, n + 1);
        Rat threshold = 1 - Rat(Int(1), Int(result.n0) * (n + 1));
        for (const Vector& p : samples) {
            ++o.instances;
            bool in_vn = base.contains(p, n);
            bool by_nu = result.nu(p)(x) >= threshold;
            if (in_vn != by_nu) {
                o.pass = false;
                o.witness = "V_" + std::to_string(n) + " membership and nu threshold disagree at p = " +
                            p.text();
                o.values.emplace_back("gauge(p)", rat_text(base.gauge_value(p)));
                o.values.emplace_back("nu_p(1/(n+1))", rat_text(result.nu(p)(x)));
                o.values.emplace_back("threshold", rat_text(threshold));
                break;
            }
        }
        out.emplace_back(n, std::move(o));
    }
    return out;
}

N4AuditResult n4_case_audit(const TNorm& t, FamilyVariant variant, long n, int n0, const Rat& r,
                            const Rat& s, const Rat& lambda) {
    if (r <= 0 || s <= 0) throw std::domain_error("n4 audit needs positive r, s");
    (void)lambda;
    DDF f = variant == FamilyVariant::Hohle ? DDF::hohle_family(n, n0) : DDF::arch_family(n, n0, t);
    N4AuditResult res;
    res.value_r = f(r);
    res.value_s = f(s);
    res.value_sum = f(r + s);
    res.lhs = 1 - t(1 - res.value_r, 1 - res.value_s);
    res.holds = res.lhs >= res.value_sum;
    return res;
}

std::vector<Rat> default_lambda_grid() {
    std::vector<Rat> g;
    for (int k = 0; k <= 20; ++k) g.emplace_back(k, 20);
    return g;
}

std::vector<Rat> default_x_grid(const Rat& horizon) {
    std::vector<Rat> g;
    for (Int k = 0; Rat(k, 16) <= horizon; ++k) g.emplace_back(k, Int(16));
    return g;
}

std::vector<Rat> default_t_grid() {
    std::vector<Rat> g;
    for (int k = 1; k <= 12; ++k) g.emplace_back(k, 8);
    return g;
}

namespace {

CheckRecord timed(const char* id, const std::function<CheckOutcome()>& run,
                  CheckStatus status_on_violation = CheckStatus::Fail) {
    auto t0 = std::chrono::steady_clock::now();
    CheckOutcome out = run();
    auto t1 = std::chrono::steady_clock::now();
    CheckRecord rec = make_record(id, out, status_on_violation);
    rec.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return rec;
}

}  // namespace

VerificationReport run_full_verification(const MetrizationResult& result, const FilterBase& base,
                                         const TNorm& tnorm, const VerificationGrids& grids,
                                         std::span<const Vector> samples) {
    VerificationReport report;

    // t-norm axioms (grid certification) and the construction gates
    {
        std::vector<Rat> grid = uniform_grid(grids.tnorm_grid_denominator);
        TNormAxiomReport ax = check_tnorm_axioms(tnorm, grid);
        CheckOutcome out;
        out.pass = ax.pass;
        out.instances = ax.instances;
        if (!ax.pass) {
            out.witness = ax.violations.front().axiom + " fails";
            for (const Rat& v : ax.violations.front().point)
                out.values.emplace_back("point", rat_text(v));
            out.note = ax.violations.front().note;
        }
        report.add(make_record("tnorm.axioms", out));

        TNorm::SupDiagonal sup = tnorm.sup_diagonal(grid);
        CheckOutcome sd;
        sd.instances = 1;
        sd.pass = sup.exact && sup.value < 1;
        sd.values.emplace_back("sup_diagonal", rat_text(sup.value));
        sd.note = sup.exact ? "closed form" : "grid lower bound";
        report.add(make_record("tnorm.sup_diagonal", sd));

        CheckOutcome n0o;
        n0o.instances = 1;
        n0o.values.emplace_back("N0", std::to_string(result.n0));
        report.add(make_record("gate.N0", n0o));
    }

    // base geometry
    NeighborhoodBase filter_levels{
        [&base](const Vector& p, long n) { return base.contains(p, n); }, base.radii().n_max};
    report.add(timed("base.nesting", [&] { return check_base_nesting(filter_levels, samples); }));
    report.add(timed("base.frechet_separable",
                     [&] { return check_frechet_separable(filter_levels, samples); }));
    {
        CheckOutcome radial, circled;
        for (long n : {1L, 2L, 3L, 5L, 8L, 13L, std::min<long>(20, base.radii().n_max)}) {
            SetPred level_set = [&base, n](const Vector& p) { return base.contains(p, n); };
            RadialCircledOutcome rc = check_radial_circled(level_set, samples, grids.lambda_grid);
            radial.instances += rc.radial.instances;
            circled.instances += rc.circled.instances;
            if (!rc.radial.pass && radial.pass) {
                radial.pass = false;
                radial.witness = "level " + std::to_string(n) + ": " + rc.radial.witness;
            }
            if (!rc.circled.pass && circled.pass) {
                circled.pass = false;
                circled.witness = "level " + std::to_string(n) + ": " + rc.circled.witness;
            }
        }
        report.add(make_record("base.radial", radial));
        report.add(make_record("base.circled", circled));
    }

    // PN axioms
    PNSpaceSpec spec;
    spec.dimension = samples.empty() ? 0 : samples.front().dim();
    spec.nu = result.nu;
    spec.tnorm = tnorm;
    spec.horizon = grids.horizon;
    spec.lambda_grid = grids.lambda_grid;
    spec.x_grid = grids.x_grid;

    auto pairs = sample_pairs(samples, grids.pair_count, grids.seed + 1);
    report.add(timed("pn.N1", [&] { return check_N1(spec, samples); }));
    report.add(timed("pn.N2", [&] { return check_N2(spec, samples); }));
    report.add(timed("pn.N3", [&] { return check_N3(spec, pairs); }));
    report.add(timed("pn.N4", [&] { return check_N4(spec, samples); }));

    // the proof's N3 chain: tau(nu_p, nu_q)(x) <= 1 - 1/N0 <= nu_{p+q}(x)
    report.add(timed("pn.N3_chain", [&] {
        CheckOutcome out;
        Rat bound = 1 - Rat(1, result.n0);
        std::map<std::string, DDF> conv_cache;
        for (const auto& [p, q] : pairs) {
            Level lp = base.level(p), lq = base.level(q);
            if (lp.infinite || lq.infinite) continue;
            DDF fp = spec.nu(p), fq = spec.nu(q), fsum = spec.nu(p + q);
            std::string key = fp.text() + "|" + fq.text();
            auto it = conv_cache.find(key);
            if (it == conv_cache.end())
                it = conv_cache.emplace(key, tau_apply(tnorm, fp, fq, grids.horizon)).first;
            const DDF& conv = it->second;
            for (const Rat& x : grids.x_grid) {
                if (x <= 0) continue;
                ++out.instances;
                Rat tau = conv(x);
                if (!(tau <= bound && bound <= fsum(x))) {
                    out.pass = false;
                    out.witness = "chain broken at x = " + rat_text(x) + " for p, q = " + p.text() +
                                  ", " + q.text();
                    out.values.emplace_back("tau", rat_text(tau));
                    out.values.emplace_back("bound", rat_text(bound));
                    out.values.emplace_back("nu_{p+q}(x)", rat_text(fsum(x)));
                    return out;
                }
            }
        }
        return out;
    }));

    // filter equivalence, one record per n
    {
        auto t0 = std::chrono::steady_clock::now();
        auto equiv = verify_filter_equivalence(result, base, samples, grids.n_lo, grids.n_hi);
        auto t1 = std::chrono::steady_clock::now();
        long total_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        for (auto& [n, outcome] : equiv) {
            CheckRecord rec = make_record("metrize.filter_equivalence.n=" + std::to_string(n), outcome);
            rec.duration_ms = total_ms / static_cast<long>(equiv.size());
            report.add(std::move(rec));
        }
    }

    // N4 split audit across the branch-boundary case grid
    report.add(timed("metrize.n4_case_audit", [&] {
        CheckOutcome out;
        for (long n : {1L, 2L, 3L, 5L, 10L}) {
            Rat b(1, n + 1);  // first branch boundary
            std::vector<Rat> probes{b / 2, b, (b + 1) / 2, Rat(1), Rat(3, 2), Rat(2), Rat(5, 2), Rat(7, 2)};
            for (const Rat& r : probes) {
                for (const Rat& s : probes) {
                    ++out.instances;
                    N4AuditResult a = n4_case_audit(tnorm, result.variant, n, result.n0, r, s, Rat(1, 2));
                    if (!a.holds) {
                        out.pass = false;
                        out.witness = "split inequality fails at n = " + std::to_string(n) + ", r = " +
                                      rat_text(r) + ", s = " + rat_text(s);
                        out.values.emplace_back("T*(F_n(r),F_n(s))", rat_text(a.lhs));
                        out.values.emplace_back("F_n(r+s)", rat_text(a.value_sum));
                        return out;
                    }
                }
            }
        }
        return out;
    }));

    // strong-topology consistency
    report.add(timed("topology.translation_invariance", [&] {
        std::span<const Vector> sub = samples.subspan(0, std::min<std::size_t>(samples.size(), 24));
        return check_translation_invariance(spec, sub, grids.t_grid);
    }));
    {
        auto levy_pairs = sample_pairs(samples, grids.levy_pair_cap, grids.seed + 2);
        auto t0 = std::chrono::steady_clock::now();
        LevyCharacterizationOutcome levy = check_levy_characterization(spec, levy_pairs, grids.t_grid);
        auto t1 = std::chrono::steady_clock::now();
        CheckRecord rec = make_record("topology.levy_characterization", levy.agreement);
        rec.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        report.add(std::move(rec));
        if (levy.boundary_instances > 0) {
            CheckOutcome bo;
            bo.pass = false;
            bo.instances = levy.boundary_instances;
            bo.witness = levy.boundary_example;
            bo.note = "strict/non-strict boundary; the two filters differ only here";
            report.add(make_record("topology.levy_characterization.boundary", bo, CheckStatus::Finding));
        }
    }
    {
        auto t0 = std::chrono::steady_clock::now();
        TopologyAxiomOutcome topo = check_topology_axiom(spec, samples, grids.t_grid,
                                                         static_cast<std::size_t>(grids.topology_center_cap));
        auto t1 = std::chrono::steady_clock::now();
        CheckOutcome out;
        out.pass = topo.unresolved == 0;
        out.instances = topo.satisfied + topo.unresolved;
        out.witness = topo.unresolved_example;
        out.note = std::to_string(topo.satisfied) + " satisfied, " + std::to_string(topo.unresolved) +
                   " unresolved (sampling cannot refute)";
        CheckRecord rec = make_record("topology.neighborhood_nesting", out, CheckStatus::Unresolved);
        rec.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        report.add(std::move(rec));
    }

    // Serstnev condition: informational for this construction
    {
        std::span<const Vector> sub =
            samples.subspan(0, std::min<std::size_t>(samples.size(),
                                                     static_cast<std::size_t>(grids.serstnev_sample_cap)));
        auto t0 = std::chrono::steady_clock::now();
        SerstnevOutcome ser = check_serstnev(spec, sub);
        auto t1 = std::chrono::steady_clock::now();
        CheckRecord s1 = make_record("serstnev.scaling", ser.scaling, CheckStatus::Finding);
        CheckRecord s2 = make_record("serstnev.eq1", ser.eq1, CheckStatus::Finding);
        s1.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        report.add(std::move(s1));
        report.add(std::move(s2));
        CheckOutcome cross;
        cross.pass = ser.consistent;
        cross.instances = 1;
        cross.note = "scaling and eq1 forms agreed on all sampled instances";
        if (!ser.consistent) cross.witness = "scaling and eq1 forms disagreed on the sampled instances";
        report.add(make_record("serstnev.crosscheck", cross, CheckStatus::Finding));
    }

    return report;
}

}  // namespace pns
