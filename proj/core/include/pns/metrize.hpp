#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pns/ddf.hpp"
#include "pns/errors.hpp"
#include "pns/report.hpp"
#include "pns/spaces.hpp"
#include "pns/tnorm.hpp"
#include "pns/vector.hpp"

namespace pns {

// Closed-form strictly decreasing radii r_1 > r_2 > ... The sequence is
// conceptually infinite; n_max only bounds the sweeps that materialize
// individual V_n.
struct RadiiSpec {
    enum class Kind { OneOverN, Geometric };
    Kind kind = Kind::OneOverN;
    Rat ratio = Rat(1, 2);  // Geometric: r_n = ratio^n
    long n_max = 64;

    Rat radius(long n) const;
};

// Nonnegative functional whose sublevel sets form the filter base. When
// `squared` the stored value is the square of the intended gauge and
// membership compares against squared radii (exact Euclidean support).
struct Gauge {
    std::string name;
    bool squared = false;
    std::function<Rat(const Vector&)> value;
};

Gauge gauge_l1();
Gauge gauge_linf();
Gauge gauge_l2sq();
// Deliberately broken gauges for negative controls.
Gauge gauge_halfspace();      // positive part of the first coordinate: not radial
Gauge gauge_seminorm_drop();  // ignores the last coordinate: not separating

// Level of p relative to the finished vector: infinite on the core.
struct Level {
    bool infinite = false;
    long n = 0;
};

// Decreasing family V_n = { p : gauge(p) <= r_n }.
class FilterBase {
public:
    FilterBase(Gauge gauge, RadiiSpec radii) : gauge_(std::move(gauge)), radii_(radii) {}

    bool contains(const Vector& p, long n) const;
    bool in_core(const Vector& p) const;  // gauge(p) == 0, i.e. p in every V_n
    Rat gauge_value(const Vector& p) const { return gauge_.value(p); }

    const Gauge& gauge() const { return gauge_; }
    const RadiiSpec& radii() const { return radii_; }

    // Largest n with p in V_n, by the closed-form radii: 0 when p is outside
    // V_1, infinite on the core. Throws InsufficientDepthError when the
    // level would exceed the materialization cap instead of truncating.
    Level level(const Vector& p) const;

    static constexpr long kLevelCap = 1L << 20;

private:
    Gauge gauge_;
    RadiiSpec radii_;
};

enum class GateHypothesis { Subproduct, ArchimedeanNearOrigin };

// Smallest N0 with 1 - 1/N0 >= sup_{x<1} T(x,x) and 1/N0 < delta. Throws
// PreconditionError naming the failed hypothesis when the sup-diagonal is
// not exactly known, is not below 1, or the requested hypothesis
// (sub-product / Archimedean near the origin) fails on [0, delta).
int compute_N0(const TNorm& t, const Rat& delta, GateHypothesis hypothesis,
               std::span<const Rat> cert_grid);

enum class FamilyVariant { Hohle, Archimedean };

struct MetrizationResult {
    int n0 = 2;
    FamilyVariant variant = FamilyVariant::Hohle;
    ProbNorm nu;
};

// The probabilistic norm of the construction:
//   nu_p = eps_0          on the core,
//   nu_p = F_{level(p)}   otherwise (F_0 outside V_1),
// with F_n the Hohle or Archimedean family for the certified N0.
MetrizationResult construct_nu(const FilterBase& base, const TNorm& tnorm, FamilyVariant variant,
                               const Rat& delta, std::span<const Rat> cert_grid);

// Exact equivalence V_n = { p : nu_p(1/(n+1)) >= 1 - 1/(N0(n+1)) } for every
// n in [n_lo, n_hi] over the samples; the topology-equivalence content of
// the construction. One outcome per n.
std::vector<std::pair<long, CheckOutcome>> verify_filter_equivalence(const MetrizationResult& result,
                                                                     const FilterBase& base,
                                                                     std::span<const Vector> samples,
                                                                     long n_lo, long n_hi);

// One instance of the N4 split inequality at worst-case level n:
// T*(F_n(r), F_n(s)) >= F_n(r+s). lambda is carried for the trace only; the
// scaled points sit at level >= n by circledness and deeper levels only make
// the left side larger.
struct N4AuditResult {
    bool holds = true;
    Rat value_r, value_s, value_sum, lhs;
};
N4AuditResult n4_case_audit(const TNorm& t, FamilyVariant variant, long n, int n0, const Rat& r,
                            const Rat& s, const Rat& lambda);

struct VerificationGrids {
    std::vector<Rat> lambda_grid;
    std::vector<Rat> x_grid;
    std::vector<Rat> t_grid;
    Rat horizon = Rat(5);
    long n_lo = 1, n_hi = 20;
    int pair_count = 200;
    int tnorm_grid_denominator = 64;
    int serstnev_sample_cap = 12;
    int topology_center_cap = 6;
    int levy_pair_cap = 60;
    std::uint64_t seed = 1;
};

std::vector<Rat> default_lambda_grid();          // { k/20 : 0 <= k <= 20 }
std::vector<Rat> default_x_grid(const Rat& horizon);  // { k/16 : 0 <= k <= 16h }
std::vector<Rat> default_t_grid();               // { k/8 : 1 <= k <= 12 }

// Full sweep: t-norm axioms and gates, base geometry, N1-N4, filter
// equivalence, N4 case audits, strong-topology consistency, and the
// Serstnev condition as an informational finding.
VerificationReport run_full_verification(const MetrizationResult& result, const FilterBase& base,
                                         const TNorm& tnorm, const VerificationGrids& grids,
                                         std::span<const Vector> samples);

}  // namespace pns
