#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pns/rational.hpp"
#include "pns/tnorm.hpp"

namespace pns {

// Distance distribution function: nondecreasing, left-continuous, 0 at 0,
// values in [0,1], 1 at infinity. All variants are step functions; the value
// stored at a jump applies strictly to the right of the jump abscissa, so
// eval(x) is the supremum of the function over [0, x).
class DDF {
public:
    struct Jump {
        Rat x;
        Rat value_after;
    };

    // eps_a: 0 on [0, a], 1 on (a, inf).
    static DDF unit_step(const Rat& a);
    static DDF eps0() { return unit_step(Rat(0)); }

    // Arbitrary step function from its jump list. Jumps must have distinct
    // nonnegative abscissae and nondecreasing values in [0,1]; no-op jumps
    // are dropped so the stored form is canonical.
    static DDF finite_step(std::vector<Jump> jumps);

    // Level family with K = N0(n+1):
    //   1 - 1/K        on (0, 1/(n+1)]
    //   1 - 1/(2K)     on (1/(n+1), 1]
    //   1 - 1/(2^{m+1}K) on (m, m+1], integer m >= 1
    static DDF hohle_family(long n, long n0);

    // Same breakpoints with z = 1/K and values 1 - z, 1 - T(z,z),
    // 1 - T^{m+1}(z,z).
    static DDF arch_family(long n, long n0, TNorm tnorm);

    // Throws std::domain_error for x < 0.
    Rat operator()(const Rat& x) const;
    Rat operator()(infinity_t) const { return Rat(1); }

    // Sorted abscissae in [0, horizon] where the value may change.
    std::vector<Rat> breakpoints_within(const Rat& horizon) const;

    std::string text() const;

private:
    struct UnitStepRep {
        Rat a;
    };
    struct FiniteStepRep {
        std::vector<Jump> jumps;
    };
    struct HohleRep {
        long n;
        long n0;
    };
    struct ArchRep {
        long n;
        long n0;
        TNorm tnorm;
    };

    using Rep = std::variant<UnitStepRep, FiniteStepRep, HohleRep, ArchRep>;
    explicit DDF(Rep rep) : rep_(std::move(rep)) {}
    Rep rep_;
};

// Maximal interval on which a DDF is constant: (lo, hi], or [lo, hi] when
// lo_closed (only the leading piece starting at 0). hi == lo with lo_closed
// marks the degenerate piece {0} in front of a jump at 0.
struct Plateau {
    Rat lo;
    bool lo_closed;
    Rat hi;
    Rat value;
};

// Pieces covering [0, horizon] exactly.
std::vector<Plateau> plateaus_within(const DDF& f, const Rat& horizon);

struct PointwiseLeq {
    bool holds = true;
    std::optional<Rat> witness;  // x with f(x) > g(x)
};

// f <= g everywhere on [0, horizon]. Exact: both functions are constant
// between consecutive breakpoints, so breakpoints, midpoints between
// consecutive breakpoints and the horizon decide the comparison.
PointwiseLeq pointwise_leq(const DDF& f, const DDF& g, const Rat& horizon);

// Pointwise equality on [0, horizon], same candidate set.
bool ddf_equal(const DDF& f, const DDF& g, const Rat& horizon);

// inf{t > 0 : f(t) > 1 - t}, the distance to eps_0 in the modified
// Levy-Sibley metric. Exact plateau scan; always in [0, 1].
Rat levy_to_eps0(const DDF& f);

// Modified Levy-Sibley distance: the infimal h > 0 such that for all x in
// (0, 1/h), g(x+h) + h >= f(x) and f(x+h) + h >= g(x). Bisection over h with
// an exact per-h verification; the result is within `resolution` of the
// infimum and exactly 0 for identical arguments.
Rat levy_distance(const DDF& f, const DDF& g, const Rat& resolution);

}  // namespace pns
