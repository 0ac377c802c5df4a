#include <benchmark/benchmark.h>

#include "pns/metrize.hpp"
#include "pns/sampler.hpp"
#include "pns/scenario.hpp"
#include "pns/triangle.hpp"

using namespace pns;

namespace {

DDF family(long n) { return DDF::hohle_family(n, 2); }

void BM_hohle_eval(benchmark::State& state) {
    DDF f = family(state.range(0));
    Rat x(7, 3);
    for (auto _ : state) {
        Rat v = f(x);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_hohle_eval)->Arg(1)->Arg(16);

void BM_arch_eval(benchmark::State& state) {
    DDF f = DDF::arch_family(state.range(0), 2, TNorm::half_product_jump());
    Rat x(7, 2);
    for (auto _ : state) {
        Rat v = f(x);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_arch_eval)->Arg(1)->Arg(16);

void BM_level_one_over_n(benchmark::State& state) {
    FilterBase base(gauge_linf(), RadiiSpec{});
    Vector p{{Rat(1, state.range(0)), Rat(0), Rat(0)}};
    for (auto _ : state) {
        Level l = base.level(p);
        benchmark::DoNotOptimize(l.n);
    }
}
BENCHMARK(BM_level_one_over_n)->Arg(3)->Arg(160);

void BM_level_geometric(benchmark::State& state) {
    FilterBase base(gauge_linf(), RadiiSpec{RadiiSpec::Kind::Geometric, Rat(1, 2), 64});
    Vector p{{Rat(1, 1 << state.range(0)), Rat(0), Rat(0)}};
    for (auto _ : state) {
        Level l = base.level(p);
        benchmark::DoNotOptimize(l.n);
    }
}
BENCHMARK(BM_level_geometric)->Arg(3)->Arg(12);

void BM_tau_apply(benchmark::State& state) {
    TNorm t = TNorm::drastic();
    DDF f = family(2), g = family(5);
    for (auto _ : state) {
        DDF conv = tau_apply(t, f, g, Rat(5));
        benchmark::DoNotOptimize(conv);
    }
}
BENCHMARK(BM_tau_apply);

void BM_tau_star_apply(benchmark::State& state) {
    TNorm t = TNorm::half_product_jump();
    DDF f = family(2), g = family(5);
    for (auto _ : state) {
        DDF conv = tau_star_apply(t, f, g, Rat(5));
        benchmark::DoNotOptimize(conv);
    }
}
BENCHMARK(BM_tau_star_apply);

void BM_pointwise_leq(benchmark::State& state) {
    DDF f = family(2), g = family(5);
    for (auto _ : state) {
        PointwiseLeq r = pointwise_leq(f, g, Rat(5));
        benchmark::DoNotOptimize(r.holds);
    }
}
BENCHMARK(BM_pointwise_leq);

void BM_levy_to_eps0(benchmark::State& state) {
    DDF f = family(state.range(0));
    for (auto _ : state) {
        Rat d = levy_to_eps0(f);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_levy_to_eps0)->Arg(1)->Arg(16);

void BM_levy_distance(benchmark::State& state) {
    DDF f = family(1), g = family(4);
    Rat res(1, 1 << state.range(0));
    for (auto _ : state) {
        Rat d = levy_distance(f, g, res);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_levy_distance)->Arg(6)->Arg(10);

void BM_n4_case_audit(benchmark::State& state) {
    TNorm t = TNorm::half_product_jump();
    for (auto _ : state) {
        N4AuditResult a = n4_case_audit(t, FamilyVariant::Hohle, 3, 2, Rat(3, 2), Rat(5, 2), Rat(1, 2));
        benchmark::DoNotOptimize(a.holds);
    }
}
BENCHMARK(BM_n4_case_audit);

void BM_tnorm_axiom_grid(benchmark::State& state) {
    TNorm t = TNorm::half_product_jump();
    std::vector<Rat> grid = uniform_grid(state.range(0));
    for (auto _ : state) {
        TNormAxiomReport rep = check_tnorm_axioms(t, grid);
        benchmark::DoNotOptimize(rep.pass);
    }
}
BENCHMARK(BM_tnorm_axiom_grid)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_metrize_scenario(benchmark::State& state) {
    ScenarioConfig cfg;
    cfg.sample_count = 36;
    cfg.pair_count = 24;
    cfg.lambda_points = 10;
    cfg.x_step = Rat(1, 8);
    cfg.horizon = Rat(3);
    cfg.n_lo = 1;
    cfg.n_hi = 6;
    cfg.tnorm_grid_denominator = 16;
    cfg.boundary_n = 6;
    for (auto _ : state) {
        VerificationReport rep = run_metrize_verification(cfg);
        benchmark::DoNotOptimize(rep.passed());
    }
}
BENCHMARK(BM_metrize_scenario)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
