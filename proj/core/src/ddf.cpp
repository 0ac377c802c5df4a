#include "pns/ddf.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pns {

namespace {

void require_nonneg(const Rat& x) {
    if (x < 0) throw std::domain_error("d.d.f. evaluated at negative x = " + rat_text(x));
}

// Largest integer m with m < x, i.e. the branch index of the family tables
// for x > 1: m < x <= m+1. The exact value carries a 2^m-scale denominator,
// so refuse absurd arguments instead of exhausting memory.
long branch_index(const Rat& x) {
    Int c = rat_ceil(x);
    if (c > 1000000) throw std::domain_error("family evaluated too far out: x = " + rat_text(x));
    long m = static_cast<long>(c) - 1;
    return m;
}

Rat hohle_value(long n, long n0, const Rat& x) {
    // K = N0(n+1)
    Int k = Int(n0) * (n + 1);
    if (x == 0) return Rat(0);
    if (x <= Rat(1, n + 1)) return 1 - Rat(Int(1), k);
    if (x <= 1) return 1 - Rat(Int(1), 2 * k);
    long m = branch_index(x);
    return 1 - Rat(Int(1), (Int(1) << (m + 1)) * k);
}

// Defect sequence of the Archimedean family: w_1 = z, w_{j+1} = T(z, w_j).
// One more T-factor of z per branch keeps T(w_i, w_j) <= w_{i+j} for
// sub-product t-norms, which is what the N4 split inequality needs; the
// doubling recursion T^r would shrink the defects too fast for splits like
// r = s = 2 and break N4 for every strictly Archimedean t-norm.
Rat arch_value(long n, long n0, const TNorm& t, const Rat& x) {
    Int k = Int(n0) * (n + 1);
    Rat z(Int(1), k);
    if (x == 0) return Rat(0);
    if (x <= Rat(1, n + 1)) return 1 - z;
    long m = (x <= 1) ? 1 : branch_index(x);  // (1/(n+1), 1] carries w_2, (m, m+1] carries w_{m+1}
    Rat w = z;
    for (long j = 1; j <= m; ++j) w = t(z, w);
    return 1 - w;
}

std::vector<Rat> family_breakpoints(long n, const Rat& horizon) {
    std::vector<Rat> bp;
    bp.emplace_back(0);
    Rat first(1, n + 1);
    if (first <= horizon) bp.push_back(first);
    for (Int m = 1; Rat(m) <= horizon; ++m) bp.emplace_back(m);
    std::sort(bp.begin(), bp.end());
    bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
    return bp;
}

}  // namespace

DDF DDF::unit_step(const Rat& a) {
    if (a < 0) throw std::domain_error("unit step abscissa must be nonnegative");
    return DDF(UnitStepRep{a});
}

DDF DDF::finite_step(std::vector<Jump> jumps) {
    std::sort(jumps.begin(), jumps.end(), [](const Jump& a, const Jump& b) { return a.x < b.x; });
    std::vector<Jump> canon;
    Rat prev(0);
    for (auto& j : jumps) {
        if (j.x < 0) throw std::domain_error("jump abscissa must be nonnegative");
        if (j.value_after < 0 || j.value_after > 1) throw std::domain_error("jump value outside [0,1]");
        if (!canon.empty() && canon.back().x == j.x) throw std::domain_error("duplicate jump abscissa");
        if (j.value_after < prev) throw std::domain_error("jump values must be nondecreasing");
        if (j.value_after == prev) continue;  // no-op jump
        canon.push_back(j);
        prev = j.value_after;
    }
    return DDF(FiniteStepRep{std::move(canon)});
}

DDF DDF::hohle_family(long n, long n0) {
    if (n < 0) throw std::domain_error("family index n must be nonnegative");
    if (n0 < 2) throw std::domain_error("N0 must be >= 2");
    return DDF(HohleRep{n, n0});
}

DDF DDF::arch_family(long n, long n0, TNorm tnorm) {
    if (n < 0) throw std::domain_error("family index n must be nonnegative");
    if (n0 < 2) throw std::domain_error("N0 must be >= 2");
    return DDF(ArchRep{n, n0, std::move(tnorm)});
}

Rat DDF::operator()(const Rat& x) const {
    require_nonneg(x);
    if (const auto* u = std::get_if<UnitStepRep>(&rep_)) return x <= u->a ? Rat(0) : Rat(1);
    if (const auto* f = std::get_if<FiniteStepRep>(&rep_)) {
        // last jump strictly below x
        const auto& js = f->jumps;
        auto it = std::partition_point(js.begin(), js.end(), [&](const Jump& j) { return j.x < x; });
        if (it == js.begin()) return Rat(0);
        return std::prev(it)->value_after;
    }
    if (const auto* h = std::get_if<HohleRep>(&rep_)) return hohle_value(h->n, h->n0, x);
    const auto& a = std::get<ArchRep>(rep_);
    return arch_value(a.n, a.n0, a.tnorm, x);
}

std::vector<Rat> DDF::breakpoints_within(const Rat& horizon) const {
    if (horizon < 0) throw std::domain_error("horizon must be nonnegative");
    if (const auto* u = std::get_if<UnitStepRep>(&rep_)) {
        if (u->a <= horizon) return {u->a};
        return {};
    }
    if (const auto* f = std::get_if<FiniteStepRep>(&rep_)) {
        std::vector<Rat> bp;
        for (const auto& j : f->jumps) {
            if (j.x > horizon) break;
            bp.push_back(j.x);
        }
        return bp;
    }
    if (const auto* h = std::get_if<HohleRep>(&rep_)) return family_breakpoints(h->n, horizon);
    return family_breakpoints(std::get<ArchRep>(rep_).n, horizon);
}

std::string DDF::text() const {
    std::ostringstream out;
    if (const auto* u = std::get_if<UnitStepRep>(&rep_)) {
        out << "unit_step(" << rat_text(u->a) << ")";
    } else if (const auto* f = std::get_if<FiniteStepRep>(&rep_)) {
        out << "finite_step[";
        for (std::size_t i = 0; i < f->jumps.size(); ++i) {
            if (i) out << ",";
            out << "(" << rat_text(f->jumps[i].x) << "," << rat_text(f->jumps[i].value_after) << ")";
        }
        out << "]";
    } else if (const auto* h = std::get_if<HohleRep>(&rep_)) {
        out << "hohle_family(n=" << h->n << ",N0=" << h->n0 << ")";
    } else {
        const auto& a = std::get<ArchRep>(rep_);
        out << "arch_family(n=" << a.n << ",N0=" << a.n0 << ",T=" << a.tnorm.name() << ")";
    }
    return out.str();
}

std::vector<Plateau> plateaus_within(const DDF& f, const Rat& horizon) {
    std::vector<Rat> bp = f.breakpoints_within(horizon);
    std::vector<Plateau> out;
    Rat lo(0);
    bool lo_closed = true;
    for (const Rat& b : bp) {
        if (b > lo || (b == lo && lo_closed)) {
            out.push_back({lo, lo_closed, b, f(b)});
            lo = b;
            lo_closed = false;
        }
    }
    if (horizon > lo || (horizon == lo && lo_closed)) out.push_back({lo, lo_closed, horizon, f(horizon)});
    return out;
}

namespace {

// Breakpoints of f and g in [0, horizon], midpoints between consecutive
// ones, and the horizon. Both functions are constant between consecutive
// breakpoints, so this set decides any pointwise comparison exactly.
std::vector<Rat> comparison_points(const DDF& f, const DDF& g, const Rat& horizon) {
    std::vector<Rat> bp = f.breakpoints_within(horizon);
    std::vector<Rat> bg = g.breakpoints_within(horizon);
    bp.insert(bp.end(), bg.begin(), bg.end());
    std::sort(bp.begin(), bp.end());
    bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
    std::vector<Rat> pts = bp;
    for (std::size_t i = 0; i + 1 < bp.size(); ++i) pts.push_back((bp[i] + bp[i + 1]) / 2);
    pts.push_back(horizon);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

}  // namespace

PointwiseLeq pointwise_leq(const DDF& f, const DDF& g, const Rat& horizon) {
    if (horizon <= 0) throw std::domain_error("horizon must be positive");
    for (const Rat& x : comparison_points(f, g, horizon)) {
        if (f(x) > g(x)) return {false, x};
    }
    return {true, std::nullopt};
}

bool ddf_equal(const DDF& f, const DDF& g, const Rat& horizon) {
    if (horizon <= 0) throw std::domain_error("horizon must be positive");
    for (const Rat& x : comparison_points(f, g, horizon)) {
        if (f(x) != g(x)) return false;
    }
    return true;
}

Rat levy_to_eps0(const DDF& f) {
    // The set {t : f(t) > 1-t} is a ray because f(t) + t is strictly
    // increasing; its left endpoint is at most 1, so pieces of [0, 2]
    // suffice. A piece with value v contains qualifying t iff hi > 1 - v.
    for (const Plateau& p : plateaus_within(f, Rat(2))) {
        if (p.hi <= 0) continue;
        Rat bound = 1 - p.value;
        if (p.hi > bound) {
            Rat t = std::max(p.lo, bound);
            return t < 0 ? Rat(0) : t;
        }
    }
    return Rat(1);  // unreachable: the final piece always qualifies
}

namespace {

// One direction of the per-h test: g(x+h) + h >= f(x) for all x in (0, 1/h).
// f and the h-shift of g are constant between candidate points, and both are
// left-continuous, so values at the right endpoints of the pieces decide.
bool levy_dominates(const DDF& f, const DDF& g, const Rat& h) {
    Rat span = 1 / h;
    std::vector<Rat> pts;
    for (const Rat& b : f.breakpoints_within(span))
        if (b > 0) pts.push_back(b);
    for (const Rat& b : g.breakpoints_within(span + h)) {
        Rat x = b - h;
        if (x > 0 && x <= span) pts.push_back(x);
    }
    pts.push_back(span);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    for (const Rat& x : pts) {
        if (g(x + h) + h < f(x)) return false;
    }
    return true;
}

bool levy_ok(const DDF& f, const DDF& g, const Rat& h) {
    return levy_dominates(f, g, h) && levy_dominates(g, f, h);
}

}  // namespace

Rat levy_distance(const DDF& f, const DDF& g, const Rat& resolution) {
    if (resolution <= 0) throw std::domain_error("resolution must be positive");
    // Qualifying h form an upward-closed set and h = 1 always qualifies.
    Rat lo(0), hi(1);
    while (hi - lo > resolution) {
        Rat mid = (lo + hi) / 2;
        if (levy_ok(f, g, mid))
            hi = mid;
        else
            lo = mid;
    }
    return lo;
}

}  // namespace pns
