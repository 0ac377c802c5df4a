#include "pns/topology.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pns {

SetPred strong_neighborhood(const PNSpaceSpec& spec, const Vector& p, const Rat& t) {
    if (t <= 0) throw std::domain_error("strong neighborhood parameter t must be positive");
    ProbNorm nu = spec.nu;
    return [nu, p, t](const Vector& q) { return nu(p - q)(t) > 1 - t; };
}

NeighborhoodBase strong_base_from_pn(const PNSpaceSpec& spec, long n_levels) {
    ProbNorm nu = spec.nu;
    NeighborhoodBase base;
    base.n_levels = n_levels;
    base.member = [nu](const Vector& q, long n) {
        Rat t(1, n);
        return nu(-q)(t) > 1 - t;
    };
    return base;
}

GeneralizedUniformity uniformity_from_pn(const PNSpaceSpec& spec, long n_levels) {
    ProbNorm nu = spec.nu;
    GeneralizedUniformity u;
    u.n_levels = n_levels;
    u.vicinity = [nu](const Vector& p, const Vector& q, long n) {
        Rat t(1, n);
        return nu(p - q)(t) >= 1 - t;
    };
    return u;
}

GeneralizedUniformity uniformity_from_theta_base(const NeighborhoodBase& base,
                                                 std::span<const Vector> radial_samples) {
    for (long n = 1; n <= base.n_levels; ++n) {
        for (const Vector& p : radial_samples) {
            if (base.member(p, n) != base.member(-p, n))
                throw std::invalid_argument("base level " + std::to_string(n) +
                                            " is not radial at sample " + p.text() +
                                            "; vicinities would not be symmetric");
        }
    }
    auto member = base.member;
    GeneralizedUniformity u;
    u.n_levels = base.n_levels;
    u.vicinity = [member](const Vector& p, const Vector& q, long n) { return member(p - q, n); };
    return u;
}

SetPred derive_topology_section(const GeneralizedUniformity& uniformity, long n, const Vector& p) {
    auto vicinity = uniformity.vicinity;
    return [vicinity, n, p](const Vector& q) { return vicinity(p, q, n); };
}

CheckOutcome check_frechet_separable(const NeighborhoodBase& base, std::span<const Vector> samples) {
    CheckOutcome out;
    for (const Vector& q : samples) {
        if (q.is_zero()) continue;
        ++out.instances;
        bool separated = false;
        for (long n = 1; n <= base.n_levels; ++n) {
            if (!base.member(q, n)) {
                separated = true;
                break;
            }
        }
        if (!separated) {
            out.pass = false;
            out.witness = "no base level excludes q = " + q.text();
            return out;
        }
    }
    return out;
}

CheckOutcome check_base_nesting(const NeighborhoodBase& base, std::span<const Vector> samples) {
    CheckOutcome out;
    for (long n = 1; n + 1 <= base.n_levels; ++n) {
        for (const Vector& p : samples) {
            ++out.instances;
            if (base.member(p, n + 1) && !base.member(p, n)) {
                out.pass = false;
                out.witness = "B_" + std::to_string(n + 1) + " not inside B_" + std::to_string(n) +
                              " at p = " + p.text();
                return out;
            }
        }
    }
    return out;
}

RadialCircledOutcome check_radial_circled(const SetPred& set, std::span<const Vector> samples,
                                          std::span<const Rat> lambda_grid) {
    RadialCircledOutcome out;
    for (const Vector& p : samples) {
        ++out.radial.instances;
        if (set(p) != set(-p)) {
            if (out.radial.pass) {
                out.radial.pass = false;
                out.radial.witness = "membership differs between p and -p for p = " + p.text();
            }
        }
        if (!set(p)) continue;
        for (const Rat& lambda : lambda_grid) {
            if (lambda < -1 || lambda > 1) continue;
            ++out.circled.instances;
            if (!set(scale(lambda, p))) {
                if (out.circled.pass) {
                    out.circled.pass = false;
                    out.circled.witness =
                        "p in B but lambda p not, p = " + p.text() + ", lambda = " + rat_text(lambda);
                }
            }
        }
    }
    return out;
}

CheckOutcome check_uniformity_separation(const GeneralizedUniformity& uniformity,
                                         std::span<const Vector> samples) {
    CheckOutcome out;
    const long diagonal_levels = std::min<long>(uniformity.n_levels, 32);
    for (const Vector& p : samples) {
        ++out.instances;
        for (long n = 1; n <= diagonal_levels; ++n) {
            if (!uniformity.vicinity(p, p, n)) {
                out.pass = false;
                out.witness = "diagonal point (p,p) outside vicinity " + std::to_string(n) +
                              " for p = " + p.text();
                return out;
            }
        }
        for (const Vector& q : samples) {
            if (p == q) continue;
            ++out.instances;
            bool separated = false;
            for (long n = 1; n <= uniformity.n_levels; ++n) {
                if (!uniformity.vicinity(p, q, n)) {
                    separated = true;
                    break;
                }
            }
            if (!separated) {
                out.pass = false;
                out.witness = "no vicinity excludes the pair " + p.text() + ", " + q.text();
                return out;
            }
        }
    }
    return out;
}

CheckOutcome check_translation_invariance(const PNSpaceSpec& spec, std::span<const Vector> samples,
                                          std::span<const Rat> t_grid) {
    CheckOutcome out;
    for (const Rat& t : t_grid) {
        SetPred at_theta = strong_neighborhood(spec, Vector::zero(spec.dimension), t);
        for (const Vector& p : samples) {
            SetPred at_p = strong_neighborhood(spec, p, t);
            for (const Vector& q : samples) {
                ++out.instances;
                if (at_theta(q) != at_p(p + q)) {
                    out.pass = false;
                    out.witness = "q in N_theta(t) differs from p+q in N_p(t) for p = " + p.text() +
                                  ", q = " + q.text() + ", t = " + rat_text(t);
                    return out;
                }
            }
        }
    }
    return out;
}

LevyCharacterizationOutcome check_levy_characterization(const PNSpaceSpec& spec,
                                                        std::span<const std::pair<Vector, Vector>> pairs,
                                                        std::span<const Rat> t_grid) {
    LevyCharacterizationOutcome out;
    for (const auto& [p, q] : pairs) {
        DDF f = spec.nu(p - q);
        Rat dist = levy_to_eps0(f);
        for (const Rat& t : t_grid) {
            if (t <= 0) continue;
            ++out.agreement.instances;
            bool in_neighborhood = f(t) > 1 - t;
            bool below = dist < t;
            if (in_neighborhood == below) continue;
            if (dist == t) {
                ++out.boundary_instances;
                if (out.boundary_example.empty()) {
                    out.boundary_example = "boundary t = " + rat_text(t) + " for p = " + p.text() +
                                           ", q = " + q.text() + " (levy_to_eps0 = " + rat_text(dist) + ")";
                }
            } else {
                out.agreement.pass = false;
                out.agreement.witness = "characterization failed off-boundary for p = " + p.text() +
                                        ", q = " + q.text() + ", t = " + rat_text(t) +
                                        ", levy_to_eps0 = " + rat_text(dist);
                return out;
            }
        }
    }
    return out;
}

TopologyAxiomOutcome check_topology_axiom(const PNSpaceSpec& spec, std::span<const Vector> samples,
                                          std::span<const Rat> t_grid, std::size_t center_cap) {
    TopologyAxiomOutcome out;
    std::size_t centers = std::min(center_cap, samples.size());
    // the r-sweep dominates the cost; a fixed prefix keeps it deterministic
    std::span<const Vector> inner = samples.subspan(0, std::min<std::size_t>(samples.size(), 64));
    for (std::size_t pi = 0; pi < centers; ++pi) {
        const Vector& p = samples[pi];
        for (const Rat& t : t_grid) {
            if (t <= 0) continue;
            SetPred np = strong_neighborhood(spec, p, t);
            for (const Vector& q : samples) {
                if (!np(q)) continue;
                bool found = false;
                for (const Rat& tp : t_grid) {
                    if (tp <= 0) continue;
                    SetPred nq = strong_neighborhood(spec, q, tp);
                    bool contained = true;
                    for (const Vector& r : inner) {
                        if (nq(r) && !np(r)) {
                            contained = false;
                            break;
                        }
                    }
                    if (contained) {
                        found = true;
                        break;
                    }
                }
                if (found) {
                    ++out.satisfied;
                } else {
                    ++out.unresolved;
                    if (out.unresolved_example.empty()) {
                        std::ostringstream w;
                        w << "no sampled t' nests N_q(t') into N_p(t) for p = " << p.text()
                          << ", q = " << q.text() << ", t = " << rat_text(t);
                        out.unresolved_example = w.str();
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace pns
