#include "pns/spaces.hpp"

#include <set>
#include <sstream>

#include "pns/triangle.hpp"

namespace pns {

namespace {

std::string pair_text(const Vector& p, const Vector& q) { return p.text() + ", " + q.text(); }

// First x > 0 in the comparison set of nu_p with nu_p(x) < 1: the witness
// that nu_p differs from eps_0.
std::optional<Rat> below_one_witness(const DDF& f, const Rat& horizon) {
    std::vector<Rat> pts = f.breakpoints_within(horizon);
    pts.push_back(horizon);
    std::sort(pts.begin(), pts.end());
    for (const Rat& x : pts) {
        if (x <= 0) continue;
        if (f(x) < 1) return x;
    }
    return std::nullopt;
}

}  // namespace

PMSpec derived_pm(const PNSpaceSpec& spec) {
    PMSpec pm;
    pm.dimension = spec.dimension;
    pm.tnorm = spec.tnorm;
    pm.horizon = spec.horizon;
    ProbNorm nu = spec.nu;
    pm.metric = [nu](const Vector& p, const Vector& q) { return nu(p - q); };
    return pm;
}

CheckOutcome check_N1(const PNSpaceSpec& spec, std::span<const Vector> samples) {
    CheckOutcome out;
    bool saw_theta = false;
    DDF e0 = DDF::eps0();
    for (const Vector& p : samples) {
        ++out.instances;
        DDF f = spec.nu(p);
        if (p.is_zero()) {
            saw_theta = true;
            if (!ddf_equal(f, e0, spec.horizon)) {
                out.pass = false;
                out.witness = "nu_theta != eps_0";
                out.values.emplace_back("nu_theta", f.text());
                return out;
            }
        } else {
            auto x = below_one_witness(f, spec.horizon);
            if (!x) {
                out.pass = false;
                out.witness = "nu_p = eps_0 on [0, horizon] for p = " + p.text() +
                              " (norm does not separate this point)";
                out.values.emplace_back("nu_p", f.text());
                return out;
            }
        }
    }
    if (!saw_theta) throw std::invalid_argument("N1 check requires the origin among the samples");
    return out;
}

CheckOutcome check_N2(const PNSpaceSpec& spec, std::span<const Vector> samples) {
    CheckOutcome out;
    for (const Vector& p : samples) {
        ++out.instances;
        DDF fp = spec.nu(p);
        DDF fm = spec.nu(-p);
        if (!ddf_equal(fp, fm, spec.horizon)) {
            out.pass = false;
            out.witness = "nu_{-p} != nu_p for p = " + p.text();
            out.values.emplace_back("nu_p", fp.text());
            out.values.emplace_back("nu_{-p}", fm.text());
            return out;
        }
    }
    return out;
}

CheckOutcome check_N3(const PNSpaceSpec& spec, std::span<const std::pair<Vector, Vector>> pairs) {
    CheckOutcome out;
    // Distinct d.d.f. triples repeat heavily across pairs (the metrization
    // norm takes countably many values); deduplicate exact re-checks.
    std::set<std::string> done;
    for (const auto& [p, q] : pairs) {
        ++out.instances;
        DDF fp = spec.nu(p);
        DDF fq = spec.nu(q);
        DDF sum = spec.nu(p + q);
        if (!done.insert(fp.text() + "|" + fq.text() + "|" + sum.text()).second) continue;
        DDF conv = tau_apply(spec.tnorm, fp, fq, spec.horizon);
        PointwiseLeq leq = pointwise_leq(conv, sum, spec.horizon);
        if (!leq.holds) {
            out.pass = false;
            out.witness = "tau(nu_p, nu_q) > nu_{p+q} at x = " + rat_text(*leq.witness) +
                          " for p, q = " + pair_text(p, q);
            out.values.emplace_back("tau(nu_p,nu_q)(x)", rat_text(conv(*leq.witness)));
            out.values.emplace_back("nu_{p+q}(x)", rat_text(sum(*leq.witness)));
            return out;
        }
    }
    return out;
}

CheckOutcome check_N4(const PNSpaceSpec& spec, std::span<const Vector> samples) {
    CheckOutcome out;
    std::set<std::string> done;
    for (const Vector& p : samples) {
        DDF nu_p = spec.nu(p);
        for (const Rat& lambda : spec.lambda_grid) {
            if (lambda < 0 || lambda > 1) continue;
            ++out.instances;
            DDF a = spec.nu(scale(lambda, p));
            DDF b = spec.nu(scale(1 - lambda, p));
            if (!done.insert(nu_p.text() + "|" + a.text() + "|" + b.text()).second) continue;
            DDF conv = tau_star_apply(spec.tnorm, a, b, spec.horizon);
            PointwiseLeq leq = pointwise_leq(nu_p, conv, spec.horizon);
            if (!leq.holds) {
                out.pass = false;
                out.witness = "nu_p > tau*(nu_{lp}, nu_{(1-l)p}) at x = " + rat_text(*leq.witness) +
                              " for p = " + p.text() + ", lambda = " + rat_text(lambda);
                out.values.emplace_back("nu_p(x)", rat_text(nu_p(*leq.witness)));
                out.values.emplace_back("tau*(x)", rat_text(conv(*leq.witness)));
                return out;
            }
        }
    }
    return out;
}

CheckOutcome check_M1(const PMSpec& spec, std::span<const std::pair<Vector, Vector>> pairs) {
    CheckOutcome out;
    DDF e0 = DDF::eps0();
    for (const auto& [p, q] : pairs) {
        ++out.instances;
        if (p == q) {
            if (!ddf_equal(spec.metric(p, q), e0, spec.horizon)) {
                out.pass = false;
                out.witness = "F_{p,p} != eps_0 for p = " + p.text();
                return out;
            }
        } else {
            DDF f = spec.metric(p, q);
            // distinct points must have F below 1 somewhere
            if (!below_one_witness(f, spec.horizon)) {
                out.pass = false;
                out.witness = "F_{p,q} = eps_0 on [0, horizon] for distinct " + pair_text(p, q);
                out.values.emplace_back("F_{p,q}", f.text());
                return out;
            }
        }
        // the diagonal must also be checked for every sampled p
        if (!ddf_equal(spec.metric(p, p), e0, spec.horizon)) {
            out.pass = false;
            out.witness = "F_{p,p} != eps_0 for p = " + p.text();
            return out;
        }
    }
    return out;
}

CheckOutcome check_M2(const PMSpec& spec, std::span<const std::pair<Vector, Vector>> pairs) {
    CheckOutcome out;
    for (const auto& [p, q] : pairs) {
        ++out.instances;
        DDF a = spec.metric(p, q);
        DDF b = spec.metric(q, p);
        if (!ddf_equal(a, b, spec.horizon)) {
            out.pass = false;
            out.witness = "F_{p,q} != F_{q,p} for " + pair_text(p, q);
            out.values.emplace_back("F_{p,q}", a.text());
            out.values.emplace_back("F_{q,p}", b.text());
            return out;
        }
    }
    return out;
}

CheckOutcome check_M3(const PMSpec& spec, std::span<const std::array<Vector, 3>> triples) {
    CheckOutcome out;
    for (const auto& [p, r, q] : triples) {
        ++out.instances;
        DDF conv = tau_apply(spec.tnorm, spec.metric(p, r), spec.metric(r, q), spec.horizon);
        DDF direct = spec.metric(p, q);
        PointwiseLeq leq = pointwise_leq(conv, direct, spec.horizon);
        if (!leq.holds) {
            out.pass = false;
            out.witness = "tau(F_{p,r}, F_{r,q}) > F_{p,q} at x = " + rat_text(*leq.witness) + " for p = " +
                          p.text() + ", r = " + r.text() + ", q = " + q.text();
            out.values.emplace_back("tau(...)(x)", rat_text(conv(*leq.witness)));
            out.values.emplace_back("F_{p,q}(x)", rat_text(direct(*leq.witness)));
            return out;
        }
    }
    return out;
}

SerstnevOutcome check_serstnev(const PNSpaceSpec& spec, std::span<const Vector> samples) {
    SerstnevOutcome result;
    bool scaling_holds_everywhere = true;
    bool eq1_holds_everywhere = true;

    for (const Vector& p : samples) {
        DDF nu_p = spec.nu(p);
        for (const Rat& lambda : spec.lambda_grid) {
            // scaling form, lambda and -lambda, excluding 0
            if (lambda != 0) {
                for (int sign = 0; sign < 2; ++sign) {
                    Rat l = sign ? -lambda : lambda;
                    Rat abs_l = l < 0 ? -l : l;
                    DDF nu_lp = spec.nu(scale(l, p));
                    ++result.scaling.instances;
                    for (const Rat& x : spec.x_grid) {
                        Rat lhs = nu_lp(x);
                        Rat rhs = nu_p(x / abs_l);
                        if (lhs != rhs) {
                            scaling_holds_everywhere = false;
                            if (result.scaling.pass) {
                                result.scaling.pass = false;
                                result.scaling.witness = "nu_{lp}(x) != nu_p(x/|l|) for p = " + p.text() +
                                                         ", lambda = " + rat_text(l) + ", x = " + rat_text(x);
                                result.scaling.values.emplace_back("nu_{lp}(x)", rat_text(lhs));
                                result.scaling.values.emplace_back("nu_p(x/|l|)", rat_text(rhs));
                            }
                            break;
                        }
                    }
                }
            }
            // equation form on [0, 1]
            if (lambda >= 0 && lambda <= 1) {
                ++result.eq1.instances;
                DDF conv = tau_apply(TNorm::min(), spec.nu(scale(lambda, p)), spec.nu(scale(1 - lambda, p)),
                                     spec.horizon);
                if (!ddf_equal(nu_p, conv, spec.horizon)) {
                    eq1_holds_everywhere = false;
                    if (result.eq1.pass) {
                        result.eq1.pass = false;
                        result.eq1.witness = "nu_p != tau_min(nu_{lp}, nu_{(1-l)p}) for p = " + p.text() +
                                             ", lambda = " + rat_text(lambda);
                        result.eq1.values.emplace_back("nu_p", nu_p.text());
                        result.eq1.values.emplace_back("tau_min(...)", conv.text());
                    }
                }
            }
        }
    }
    result.consistent = scaling_holds_everywhere == eq1_holds_everywhere;
    return result;
}

PNSpaceSpec embed_normed(std::string name, std::function<Rat(const Vector&)> norm, int dimension,
                         Rat horizon, std::vector<Rat> lambda_grid, std::vector<Rat> x_grid) {
    PNSpaceSpec spec;
    spec.dimension = dimension;
    spec.tnorm = TNorm::min();
    spec.horizon = std::move(horizon);
    spec.lambda_grid = std::move(lambda_grid);
    spec.x_grid = std::move(x_grid);
    spec.nu.name = "eps_norm(" + name + ")";
    spec.nu.assign = [norm = std::move(norm)](const Vector& p) {
        Rat v = norm(p);
        if (v < 0) throw std::domain_error("norm returned a negative value at " + p.text());
        return DDF::unit_step(v);
    };
    return spec;
}

PMSpec embed_metric(std::function<Rat(const Vector&, const Vector&)> distance, int dimension, Rat horizon) {
    PMSpec spec;
    spec.dimension = dimension;
    spec.tnorm = TNorm::min();
    spec.horizon = std::move(horizon);
    spec.metric = [distance = std::move(distance)](const Vector& p, const Vector& q) {
        Rat v = distance(p, q);
        if (v < 0) throw std::domain_error("distance returned a negative value");
        return DDF::unit_step(v);
    };
    return spec;
}

}  // namespace pns
