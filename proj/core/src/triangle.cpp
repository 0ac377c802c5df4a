#include "pns/triangle.hpp"

#include <algorithm>
#include <sstream>

namespace pns {

namespace {

// x-interval on which one plateau pair admits a split, with the combined
// value of T (or T*) on that pair.
struct Piece {
    Rat lo;
    bool lo_closed;
    Rat hi;
    Rat value;
};

bool piece_contains(const Piece& p, const Rat& x) {
    if (x > p.hi) return false;
    if (x > p.lo) return true;
    return x == p.lo && p.lo_closed;
}

std::vector<Piece> sum_pieces(const TNorm& t, bool conorm, const DDF& f, const DDF& g, const Rat& horizon) {
    std::vector<Plateau> pf = plateaus_within(f, horizon);
    std::vector<Plateau> pg = plateaus_within(g, horizon);
    std::vector<Piece> pieces;
    pieces.reserve(pf.size() * pg.size());
    for (const Plateau& a : pf) {
        for (const Plateau& b : pg) {
            Piece p;
            p.lo = a.lo + b.lo;
            p.lo_closed = a.lo_closed && b.lo_closed;
            p.hi = a.hi + b.hi;
            if (p.hi < p.lo || (p.hi == p.lo && !p.lo_closed)) continue;
            p.value = conorm ? 1 - t(1 - a.value, 1 - b.value) : t(a.value, b.value);
            pieces.push_back(std::move(p));
        }
    }
    return pieces;
}

Rat reduce_at(const std::vector<Piece>& pieces, const Rat& x, bool take_min) {
    bool found = false;
    Rat best(0);
    for (const Piece& p : pieces) {
        if (!piece_contains(p, x)) continue;
        if (!found || (take_min ? p.value < best : p.value > best)) {
            best = p.value;
            found = true;
        }
    }
    if (!found) throw std::logic_error("no admissible plateau pair; split enumeration is broken");
    return best;
}

DDF apply_impl(const TNorm& t, bool conorm, const DDF& f, const DDF& g, const Rat& horizon) {
    if (horizon <= 0) throw std::domain_error("horizon must be positive");
    std::vector<Piece> pieces = sum_pieces(t, conorm, f, g, horizon);

    std::vector<Rat> cuts;
    cuts.emplace_back(0);
    cuts.push_back(horizon);
    for (const Piece& p : pieces) {
        if (p.lo >= 0 && p.lo <= horizon) cuts.push_back(p.lo);
        if (p.hi >= 0 && p.hi <= horizon) cuts.push_back(p.hi);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    // The convolution is constant on every cell (c_i, c_{i+1}]: pieces have
    // all endpoints among the cuts, so membership cannot change inside.
    std::vector<DDF::Jump> jumps;
    Rat prev(0);  // value at 0 is 0 for any pair of d.d.f.s
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        Rat v(0);
        bool found = false;
        for (const Piece& p : pieces) {
            if (p.lo <= cuts[i] && cuts[i + 1] <= p.hi) {
                if (!found || (conorm ? p.value < v : p.value > v)) {
                    v = p.value;
                    found = true;
                }
            }
        }
        if (!found) throw std::logic_error("uncovered cell; split enumeration is broken");
        if (v != prev) {
            jumps.push_back({cuts[i], v});
            prev = v;
        }
    }
    return DDF::finite_step(std::move(jumps));
}

Rat eval_impl(const TNorm& t, bool conorm, const DDF& f, const DDF& g, const Rat& x) {
    if (x < 0) throw std::domain_error("convolution evaluated at negative x");
    return reduce_at(sum_pieces(t, conorm, f, g, x), x, conorm);
}

}  // namespace

Rat tau_eval(const TNorm& t, const DDF& f, const DDF& g, const Rat& x) {
    return eval_impl(t, false, f, g, x);
}

Rat tau_star_eval(const TNorm& t, const DDF& f, const DDF& g, const Rat& x) {
    return eval_impl(t, true, f, g, x);
}

DDF tau_apply(const TNorm& t, const DDF& f, const DDF& g, const Rat& horizon) {
    return apply_impl(t, false, f, g, horizon);
}

DDF tau_star_apply(const TNorm& t, const DDF& f, const DDF& g, const Rat& horizon) {
    return apply_impl(t, true, f, g, horizon);
}

DDF raised(const DDF& g, const Rat& horizon) {
    std::vector<DDF::Jump> jumps;
    for (const Plateau& p : plateaus_within(g, horizon)) {
        if (p.hi == p.lo && !p.lo_closed) continue;
        if (p.hi == 0) continue;  // degenerate {0} piece keeps value 0
        jumps.push_back({p.lo, (1 + p.value) / 2});
    }
    return DDF::finite_step(std::move(jumps));
}

TriangleAxiomReport check_triangle_axioms(const TNorm& t, bool conorm,
                                          std::span<const std::array<DDF, 3>> samples,
                                          std::span<const Rat> x_grid, const Rat& horizon) {
    if (samples.empty()) throw std::invalid_argument("triangle axiom check needs at least one sample triple");
    TriangleAxiomReport report;
    auto eval = conorm ? tau_star_eval : tau_eval;
    auto apply = conorm ? tau_star_apply : tau_apply;
    DDF e0 = DDF::eps0();

    auto fail = [](CheckOutcome& out, std::size_t i, const Rat& x, const Rat& lhs, const Rat& rhs) {
        if (!out.pass) return;
        out.pass = false;
        std::ostringstream w;
        w << "triple #" << i << " at x = " << rat_text(x) << ": " << rat_text(lhs) << " vs " << rat_text(rhs);
        out.witness = w.str();
    };

    for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto& [f, g, h] = samples[i];
        DDF fg = apply(t, f, g, horizon);
        DDF gh = apply(t, g, h, horizon);
        DDF graised = raised(g, horizon);
        for (const Rat& x : x_grid) {
            if (x > horizon) continue;
            ++report.commutativity.instances;
            Rat a = eval(t, f, g, x);
            Rat b = eval(t, g, f, x);
            if (a != b) fail(report.commutativity, i, x, a, b);

            ++report.associativity.instances;
            Rat left = eval(t, fg, h, x);
            Rat right = eval(t, f, gh, x);
            if (left != right) fail(report.associativity, i, x, left, right);

            ++report.monotonicity.instances;
            Rat small = a;
            Rat large = eval(t, f, graised, x);
            if (small > large) fail(report.monotonicity, i, x, small, large);

            ++report.identity.instances;
            Rat ide = eval(t, f, e0, x);
            Rat fx = f(x);
            if (ide != fx) fail(report.identity, i, x, ide, fx);
        }
    }
    return report;
}

}  // namespace pns
