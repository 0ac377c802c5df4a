#pragma once

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pns/rational.hpp"

namespace pns {

enum class TNormKind { Min, Product, Lukasiewicz, Drastic, HalfProductJump, Custom };

// Binary operation on [0,1]: commutative, associative, nondecreasing in each
// variable, identity 1. The five built-in kinds satisfy the axioms
// analytically; Custom evaluators are certified on grids only.
class TNorm {
public:
    static TNorm min();
    static TNorm product();
    static TNorm lukasiewicz();
    // Z: Z(x,1) = Z(1,x) = x, 0 elsewhere.
    static TNorm drastic();
    // T(x,y) = xy/2 for x,y < 1, with 1 as identity. Discontinuous at the
    // boundary; sup-diagonal 1/2, sub-product, Archimedean near the origin.
    static TNorm half_product_jump();
    static TNorm custom(std::string name, std::function<Rat(const Rat&, const Rat&)> fn);
    // Table of (x, y, value) entries, symmetric closure applied. Evaluation
    // outside the tabulated domain throws TableDomainError.
    static TNorm from_table(std::string name, const std::vector<std::array<Rat, 3>>& entries);
    static std::optional<TNorm> by_name(std::string_view name);

    // Throws std::domain_error unless x, y are in [0,1].
    Rat operator()(const Rat& x, const Rat& y) const;

    TNormKind kind() const { return kind_; }
    const std::string& name() const { return name_; }

    struct SupDiagonal {
        Rat value;
        bool exact;  // closed form vs. grid lower bound
    };
    // sup_{0 <= x < 1} T(x,x). Closed form for the built-in kinds; grid
    // maximum (exact = false) otherwise. Grid points >= 1 are ignored.
    SupDiagonal sup_diagonal(std::span<const Rat> grid = {}) const;

    // T^1(x,y) = T(x,y), T^r(x,y) = T(T^{r-1}, T^{r-1}). Requires r >= 1.
    Rat iterate(int r, const Rat& x, const Rat& y) const;

private:
    TNorm(TNormKind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

    TNormKind kind_;
    std::string name_;
    std::function<Rat(const Rat&, const Rat&)> fn_;  // Custom only
};

// T*(x,y) = 1 - T(1-x, 1-y).
struct TConorm {
    TNorm tnorm;
    Rat operator()(const Rat& x, const Rat& y) const;
};

struct TNormAxiomViolation {
    std::string axiom;  // commutativity | associativity | monotonicity | identity | range | domain
    std::vector<Rat> point;
    std::string note;
};

struct TNormAxiomReport {
    bool pass = true;
    std::vector<TNormAxiomViolation> violations;  // first counterexample per axiom
    long instances = 0;
};

// Exhaustive check over the grid. Requires the grid to contain 0, 1 and at
// least 9 interior points. Grid certification is evidence, not proof.
TNormAxiomReport check_tnorm_axioms(const TNorm& t, std::span<const Rat> grid);

struct HypothesisCheck {
    bool pass = true;
    bool exact = false;  // closed-form vs. grid evidence
    std::optional<std::array<Rat, 2>> witness;
    std::string note;
};

// T(x,y) <= xy whenever x, y < delta.
HypothesisCheck check_subproduct(const TNorm& t, const Rat& delta, std::span<const Rat> grid);

// 0 < T(x,x) < x whenever 0 < x < delta.
HypothesisCheck check_archimedean_near_origin(const TNorm& t, const Rat& delta, std::span<const Rat> grid);

// {k/denominator : 0 <= k <= denominator}
std::vector<Rat> uniform_grid(int denominator);

}  // namespace pns
