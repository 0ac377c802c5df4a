#pragma once

#include <array>
#include <span>
#include <vector>

#include "pns/ddf.hpp"
#include "pns/report.hpp"
#include "pns/tnorm.hpp"

namespace pns {

// tau_T(F,G)(x)  = sup { T (F(s), G(t)) : s + t = x, s, t >= 0 }
// tau_T*(F,G)(x) = inf { T*(F(s), G(t)) : s + t = x, s, t >= 0 }
//
// On step functions the extremum is a max/min over plateau pairs: a pair of
// pieces (A of F, B of G) admits a split of x exactly when x lies in the sum
// interval A + B, so enumerating pairs is exact. Whether the extremum sees a
// post-jump value at a split endpoint is decided by the open/closed ends of
// the sum intervals; the stored value of a jump applies strictly to its
// right, which is what makes tau_min(eps_a, eps_b) = eps_{a+b} need x > a+b.

Rat tau_eval(const TNorm& t, const DDF& f, const DDF& g, const Rat& x);
Rat tau_star_eval(const TNorm& t, const DDF& f, const DDF& g, const Rat& x);

// The finite-step restriction of tau_T(F,G) (resp. tau_T*) to [0, horizon].
// Breakpoints are sums of one F-breakpoint and one G-breakpoint (0 and
// single breakpoints included); the result agrees with tau_eval
// (tau_star_eval) at every x <= horizon.
DDF tau_apply(const TNorm& t, const DDF& f, const DDF& g, const Rat& horizon);
DDF tau_star_apply(const TNorm& t, const DDF& f, const DDF& g, const Rat& horizon);

struct TriangleAxiomReport {
    CheckOutcome commutativity;
    CheckOutcome associativity;
    CheckOutcome monotonicity;
    CheckOutcome identity;
    bool pass() const {
        return commutativity.pass && associativity.pass && monotonicity.pass && identity.pass;
    }
};

// Pointwise checks at the x-grid over the sample triples: commutativity,
// associativity via tau_apply then eval, monotonicity against a pointwise
// larger second argument, and eps_0 as identity.
TriangleAxiomReport check_triangle_axioms(const TNorm& t, bool conorm,
                                          std::span<const std::array<DDF, 3>> samples,
                                          std::span<const Rat> x_grid, const Rat& horizon);

// (1 + G)/2 above 0: a canonical pointwise-larger comparison d.d.f.
DDF raised(const DDF& g, const Rat& horizon);

}  // namespace pns
