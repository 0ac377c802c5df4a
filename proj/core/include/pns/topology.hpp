#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "pns/report.hpp"
#include "pns/spaces.hpp"
#include "pns/vector.hpp"

namespace pns {

// Sets over the carrier are membership predicates, never enumerations;
// every set-level claim below is sample-quantified with witnesses.
using SetPred = std::function<bool(const Vector&)>;

// Countable neighborhood base at the origin: level n is the n-th base set,
// levels 1..n_levels, nested downward. Neighborhoods at p are p + B_n.
struct NeighborhoodBase {
    std::function<bool(const Vector&, long)> member;
    long n_levels = 0;
};

// Countable base of vicinities over S x S, each containing the diagonal and
// symmetric (the bases built here are translation-invariant over radial
// sets, which forces symmetry).
struct GeneralizedUniformity {
    std::function<bool(const Vector&, const Vector&, long)> vicinity;
    long n_levels = 0;
};

// Strong neighborhood N_p(t) = { q : nu_{p-q}(t) > 1 - t }. Strict
// inequality; the uniformity below uses the non-strict variant, and the two
// differ pointwise at boundary parameters even though they generate the same
// filters. Throws std::domain_error for t <= 0.
SetPred strong_neighborhood(const PNSpaceSpec& spec, const Vector& p, const Rat& t);

// Base at the origin made of the strong neighborhoods N_theta(1/n).
NeighborhoodBase strong_base_from_pn(const PNSpaceSpec& spec, long n_levels);

// Vicinity base { (p,q) : nu_{p-q}(1/n) >= 1 - 1/n } induced by a PN space.
GeneralizedUniformity uniformity_from_pn(const PNSpaceSpec& spec, long n_levels);

// V_n = { (p,q) : p - q in B_n }. Rejects (throws std::invalid_argument) if
// some B_n fails the radial check on the given samples, since then the base
// would not be closed under inversion.
GeneralizedUniformity uniformity_from_theta_base(const NeighborhoodBase& base,
                                                 std::span<const Vector> radial_samples);

// Section { q : (p,q) in V_n } of a vicinity at p.
SetPred derive_topology_section(const GeneralizedUniformity& uniformity, long n, const Vector& p);

// For every sampled q != theta some level excludes q.
CheckOutcome check_frechet_separable(const NeighborhoodBase& base, std::span<const Vector> samples);

// Nesting B_{n+1} <= B_n on the samples.
CheckOutcome check_base_nesting(const NeighborhoodBase& base, std::span<const Vector> samples);

// radial: p in B iff -p in B;  circled: p in B implies lambda p in B for
// every |lambda| <= 1 in the grid.
struct RadialCircledOutcome {
    CheckOutcome radial;
    CheckOutcome circled;
};
RadialCircledOutcome check_radial_circled(const SetPred& set, std::span<const Vector> samples,
                                          std::span<const Rat> lambda_grid);

// Diagonal containment and Hausdorff separation of a vicinity base, on
// samples.
CheckOutcome check_uniformity_separation(const GeneralizedUniformity& uniformity,
                                         std::span<const Vector> samples);

// q in N_p(t) iff p + q' translation identity: N_p(t) = p + N_theta(t).
CheckOutcome check_translation_invariance(const PNSpaceSpec& spec, std::span<const Vector> samples,
                                          std::span<const Rat> t_grid);

// q in N_p(t) iff levy_to_eps0(nu_{p-q}) < t, up to instances sitting
// exactly at the boundary t (counted separately as findings).
struct LevyCharacterizationOutcome {
    CheckOutcome agreement;
    long boundary_instances = 0;
    std::string boundary_example;
};
LevyCharacterizationOutcome check_levy_characterization(const PNSpaceSpec& spec,
                                                        std::span<const std::pair<Vector, Vector>> pairs,
                                                        std::span<const Rat> t_grid);

// Neighborhood-nesting (topology) condition: for sampled p, t and q in
// N_p(t), search the t-grid for t' with N_q(t') inside N_p(t) on the sample
// set. Sampling cannot refute the condition, so instances are either
// satisfied or unresolved.
struct TopologyAxiomOutcome {
    long satisfied = 0;
    long unresolved = 0;
    std::string unresolved_example;
};
TopologyAxiomOutcome check_topology_axiom(const PNSpaceSpec& spec, std::span<const Vector> samples,
                                          std::span<const Rat> t_grid, std::size_t center_cap = 8);

}  // namespace pns
