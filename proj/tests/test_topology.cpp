#include <doctest.h>

#include "pns/metrize.hpp"
#include "pns/sampler.hpp"
#include "pns/topology.hpp"

using namespace pns;

namespace {

PNSpaceSpec linf_embedding() {
    return embed_normed("linf", [](const Vector& p) { return norm_linf(p); }, 3, Rat(5),
                        default_lambda_grid(), default_x_grid(Rat(5)));
}

PNSpaceSpec drastic_metrization() {
    FilterBase base(gauge_linf(), RadiiSpec{});
    auto result = construct_nu(base, TNorm::drastic(), FamilyVariant::Hohle, Rat(1), uniform_grid(16));
    PNSpaceSpec spec;
    spec.dimension = 3;
    spec.nu = result.nu;
    spec.tnorm = TNorm::drastic();
    spec.horizon = Rat(5);
    spec.lambda_grid = default_lambda_grid();
    spec.x_grid = default_x_grid(Rat(5));
    return spec;
}

// lattice {-1, -3/4, ..., 1}^3
std::vector<Vector> lattice_quarter() {
    std::vector<Vector> out;
    for (int a = -4; a <= 4; ++a)
        for (int b = -4; b <= 4; ++b)
            out.push_back(Vector{{Rat(a, 4), Rat(b, 4), Rat(0)}});
    return out;
}

}  // namespace

TEST_CASE("strong neighborhood of the origin in the embedding") {
    PNSpaceSpec spec = linf_embedding();
    SetPred pred = strong_neighborhood(spec, Vector::zero(3), Rat(1, 2));
    for (const Vector& q : lattice_quarter()) {
        CHECK(pred(q) == (norm_linf(q) < Rat(1, 2)));
    }
    CHECK_THROWS_AS(strong_neighborhood(spec, Vector::zero(3), Rat(0)), std::domain_error);
    CHECK_THROWS_AS(strong_neighborhood(spec, Vector::zero(3), Rat(-1)), std::domain_error);
}

TEST_CASE("parameters above one swallow every sampled point") {
    PNSpaceSpec spec = linf_embedding();
    SetPred pred = strong_neighborhood(spec, Vector::unit(3, 1), Rat(3, 2));
    for (const Vector& q : lattice_quarter()) CHECK(pred(q));
}

TEST_CASE("strong neighborhoods translate") {
    for (const PNSpaceSpec& spec : {linf_embedding(), drastic_metrization()}) {
        auto samples = sample_vectors(3, 3, 24, {});
        std::vector<Rat> t_grid{Rat(1, 8), Rat(1, 2), Rat(1), Rat(5, 4)};
        CHECK(check_translation_invariance(spec, samples, t_grid).pass);
    }
}

TEST_CASE("frechet separability of a gauge base") {
    FilterBase fb(gauge_linf(), RadiiSpec{});
    NeighborhoodBase base{[&fb](const Vector& p, long n) { return fb.contains(p, n); }, 64};
    auto samples = sample_vectors(5, 3, 40, {});
    samples.push_back(Vector{{Rat(1, 10), Rat(0), Rat(0)}});
    CHECK(check_frechet_separable(base, samples).pass);

    NeighborhoodBase constant{[](const Vector&, long) { return true; }, 64};
    CheckOutcome out = check_frechet_separable(constant, samples);
    CHECK_FALSE(out.pass);
    CHECK_FALSE(out.witness.empty());
}

TEST_CASE("base nesting") {
    FilterBase fb(gauge_linf(), RadiiSpec{});
    NeighborhoodBase base{[&fb](const Vector& p, long n) { return fb.contains(p, n); }, 16};
    auto samples = sample_vectors(9, 3, 30, {});
    CHECK(check_base_nesting(base, samples).pass);

    // a level that bulges outward must be caught
    NeighborhoodBase bulged{[&fb](const Vector& p, long n) {
                                if (n == 2) return norm_linf(p) <= Rat(2);
                                return fb.contains(p, n);
                            },
                            16};
    CheckOutcome out = check_base_nesting(bulged, samples);
    CHECK_FALSE(out.pass);
}

TEST_CASE("radial and circled checks") {
    auto samples = lattice_quarter();
    std::vector<Rat> lambda_grid = default_lambda_grid();

    SetPred ball = [](const Vector& p) { return norm_linf(p) <= Rat(1, 2); };
    RadialCircledOutcome ball_out = check_radial_circled(ball, samples, lambda_grid);
    CHECK(ball_out.radial.pass);
    CHECK(ball_out.circled.pass);

    SetPred halfspace = [](const Vector& p) { return p.coords[0] <= Rat(1, 4); };
    RadialCircledOutcome half_out = check_radial_circled(halfspace, samples, lambda_grid);
    CHECK_FALSE(half_out.radial.pass);
    CHECK_FALSE(half_out.radial.witness.empty());

    Vector center{{Rat(1, 2), Rat(0), Rat(0)}};
    SetPred shifted = [center](const Vector& p) { return norm_linf(p - center) <= Rat(1, 4); };
    RadialCircledOutcome shifted_out = check_radial_circled(shifted, samples, lambda_grid);
    CHECK_FALSE(shifted_out.circled.pass);
}

TEST_CASE("uniformity from a radial base and its sections") {
    FilterBase fb(gauge_linf(), RadiiSpec{});
    NeighborhoodBase base{[&fb](const Vector& p, long n) { return fb.contains(p, n); }, 16};
    auto samples = sample_vectors(13, 3, 30, {});
    GeneralizedUniformity u = uniformity_from_theta_base(base, samples);

    // vicinities are symmetric and contain the diagonal
    for (const Vector& p : samples) {
        CHECK(u.vicinity(p, p, 3));
        for (const Vector& q : samples) CHECK(u.vicinity(p, q, 3) == u.vicinity(q, p, 3));
    }

    // the section at p is the translated base set
    Vector p = samples[4];
    SetPred section = derive_topology_section(u, 2, p);
    for (const Vector& q : samples) CHECK(section(q) == base.member(q - p, 2));

    // a non-radial base is rejected outright
    NeighborhoodBase halfspace{[](const Vector& q, long n) { return q.coords[0] <= Rat(1, n); }, 8};
    CHECK_THROWS_AS(uniformity_from_theta_base(halfspace, samples), std::invalid_argument);
}

TEST_CASE("hausdorff separation of the induced uniformity") {
    PNSpaceSpec spec = drastic_metrization();
    GeneralizedUniformity u = uniformity_from_pn(spec, 1L << 12);
    auto samples = sample_vectors(17, 3, 16, {});
    CHECK(check_uniformity_separation(u, samples).pass);
}

TEST_CASE("levy characterization agrees off the boundary") {
    for (const PNSpaceSpec& spec : {linf_embedding(), drastic_metrization()}) {
        auto samples = sample_vectors(19, 3, 30, {});
        auto pairs = sample_pairs(samples, 40, 23);
        std::vector<Rat> t_grid = default_t_grid();
        LevyCharacterizationOutcome out = check_levy_characterization(spec, pairs, t_grid);
        CHECK(out.agreement.pass);
        // step functions give open rays, so no boundary findings arise here
        CHECK(out.boundary_instances == 0);
    }
}

TEST_CASE("neighborhood nesting is fully satisfied for the metric embedding") {
    PNSpaceSpec spec = linf_embedding();
    // samples on the 1/2-lattice keep every margin at least 1/8
    std::vector<Vector> samples;
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b) samples.push_back(Vector{{Rat(a, 2), Rat(b, 2), Rat(0)}});
    std::vector<Rat> t_grid = default_t_grid();
    TopologyAxiomOutcome out = check_topology_axiom(spec, samples, t_grid, 6);
    CHECK(out.unresolved == 0);
    CHECK(out.satisfied > 0);
}

TEST_CASE("neighborhood nesting on the metrization reports instances") {
    PNSpaceSpec spec = drastic_metrization();
    auto samples = sample_vectors(29, 3, 40, {});
    std::vector<Rat> t_grid = default_t_grid();
    TopologyAxiomOutcome out = check_topology_axiom(spec, samples, t_grid, 4);
    CHECK(out.satisfied + out.unresolved > 0);
    if (out.unresolved > 0) CHECK_FALSE(out.unresolved_example.empty());
}

TEST_CASE("strong base levels from a pn space nest and separate") {
    PNSpaceSpec spec = drastic_metrization();
    NeighborhoodBase base = strong_base_from_pn(spec, 64);
    auto samples = sample_vectors(31, 3, 30, {});
    CHECK(check_base_nesting(base, samples).pass);
    CHECK(check_frechet_separable(base, samples).pass);
}
