#pragma once

#include <array>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pns/ddf.hpp"
#include "pns/report.hpp"
#include "pns/tnorm.hpp"
#include "pns/vector.hpp"

namespace pns {

// Total assignment of a d.d.f. to every carrier vector.
struct ProbNorm {
    std::string name;
    std::function<DDF(const Vector&)> assign;
    DDF operator()(const Vector& p) const { return assign(p); }
};

// A probabilistic normed space instance under test: the norm, the t-norm
// driving tau_T and tau_T*, and the grids every checker sweeps.
struct PNSpaceSpec {
    int dimension = 3;
    ProbNorm nu;
    TNorm tnorm = TNorm::min();
    Rat horizon = Rat(5);
    std::vector<Rat> lambda_grid;
    std::vector<Rat> x_grid;
};

// A probabilistic metric space instance (possibly derived from a PN space
// via F_{p,q} = nu_{p-q}).
struct PMSpec {
    int dimension = 3;
    std::function<DDF(const Vector&, const Vector&)> metric;
    TNorm tnorm = TNorm::min();
    Rat horizon = Rat(5);
};

PMSpec derived_pm(const PNSpaceSpec& spec);

// N1: nu_theta = eps_0, and for every sampled p != theta some x > 0 has
// nu_p(x) < 1. Requires theta among the samples.
CheckOutcome check_N1(const PNSpaceSpec& spec, std::span<const Vector> samples);

// N2: nu_{-p} = nu_p, exact d.d.f. equality on [0, horizon].
CheckOutcome check_N2(const PNSpaceSpec& spec, std::span<const Vector> samples);

// N3: tau_T(nu_p, nu_q) <= nu_{p+q} pointwise on [0, horizon].
CheckOutcome check_N3(const PNSpaceSpec& spec, std::span<const std::pair<Vector, Vector>> pairs);

// N4: nu_p <= tau_T*(nu_{lambda p}, nu_{(1-lambda) p}) pointwise, for every
// lambda in the spec's lambda grid.
CheckOutcome check_N4(const PNSpaceSpec& spec, std::span<const Vector> samples);

// M1: F_{p,q} = eps_0 iff p = q.   M2: F_{p,q} = F_{q,p}.
// M3: tau_T(F_{p,r}, F_{r,q}) <= F_{p,q}.
CheckOutcome check_M1(const PMSpec& spec, std::span<const std::pair<Vector, Vector>> pairs);
CheckOutcome check_M2(const PMSpec& spec, std::span<const std::pair<Vector, Vector>> pairs);
CheckOutcome check_M3(const PMSpec& spec, std::span<const std::array<Vector, 3>> triples);

// Two formulations of the Serstnev condition, checked independently:
//   scaling: nu_{lambda p}(x) = nu_p(x / |lambda|), lambda != 0
//   eq1:     nu_p = tau_min(nu_{lambda p}, nu_{(1-lambda) p}), lambda in [0,1]
// `consistent` reports whether (given N2) the two agreed on every sampled
// instance; disagreement is a finding about the sampling, not a failure.
struct SerstnevOutcome {
    CheckOutcome scaling;
    CheckOutcome eq1;
    bool consistent = true;
};
SerstnevOutcome check_serstnev(const PNSpaceSpec& spec, std::span<const Vector> samples);

// nu_p = eps_{norm(p)} with tau_min / tau_min*. Throws std::domain_error if
// the norm ever returns a negative value.
PNSpaceSpec embed_normed(std::string name, std::function<Rat(const Vector&)> norm, int dimension,
                         Rat horizon, std::vector<Rat> lambda_grid, std::vector<Rat> x_grid);

// F_{p,q} = eps_{d(p,q)} under tau_min. Symmetry and the zero diagonal are
// verified by the M-checks rather than assumed.
PMSpec embed_metric(std::function<Rat(const Vector&, const Vector&)> distance, int dimension, Rat horizon);

}  // namespace pns
