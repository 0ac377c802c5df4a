#include "pns/tnorm.hpp"

#include <algorithm>
#include <stdexcept>

#include "pns/errors.hpp"

namespace pns {

namespace {

void require_unit(const Rat& v, const char* which) {
    if (v < 0 || v > 1) throw std::domain_error(std::string(which) + " outside [0,1]: " + rat_text(v));
}

}  // namespace

TNorm TNorm::min() { return TNorm(TNormKind::Min, "min"); }
TNorm TNorm::product() { return TNorm(TNormKind::Product, "product"); }
TNorm TNorm::lukasiewicz() { return TNorm(TNormKind::Lukasiewicz, "lukasiewicz"); }
TNorm TNorm::drastic() { return TNorm(TNormKind::Drastic, "drastic"); }
TNorm TNorm::half_product_jump() { return TNorm(TNormKind::HalfProductJump, "half_product_jump"); }

TNorm TNorm::custom(std::string name, std::function<Rat(const Rat&, const Rat&)> fn) {
    TNorm t(TNormKind::Custom, std::move(name));
    t.fn_ = std::move(fn);
    return t;
}

TNorm TNorm::from_table(std::string name, const std::vector<std::array<Rat, 3>>& entries) {
    auto table = std::make_shared<std::map<std::pair<Rat, Rat>, Rat>>();
    for (const auto& [x, y, v] : entries) {
        require_unit(x, "table x");
        require_unit(y, "table y");
        require_unit(v, "table value");
        (*table)[{x, y}] = v;
        (*table)[{y, x}] = v;  // symmetric closure
    }
    std::string label = name;
    return custom(std::move(name), [table, label](const Rat& x, const Rat& y) -> Rat {
        auto it = table->find({x, y});
        if (it == table->end())
            throw TableDomainError("t-norm table '" + label + "' has no entry at (" + rat_text(x) + ", " +
                                   rat_text(y) + ")");
        return it->second;
    });
}

std::optional<TNorm> TNorm::by_name(std::string_view name) {
    if (name == "min") return min();
    if (name == "product") return product();
    if (name == "lukasiewicz") return lukasiewicz();
    if (name == "drastic" || name == "z") return drastic();
    if (name == "half_product_jump") return half_product_jump();
    return std::nullopt;
}

Rat TNorm::operator()(const Rat& x, const Rat& y) const {
    require_unit(x, "x");
    require_unit(y, "y");
    switch (kind_) {
        case TNormKind::Min:
            return x < y ? x : y;
        case TNormKind::Product:
            return x * y;
        case TNormKind::Lukasiewicz: {
            Rat v = x + y - 1;
            return v > 0 ? v : Rat(0);
        }
        case TNormKind::Drastic:
            if (x == 1) return y;
            if (y == 1) return x;
            return Rat(0);
        case TNormKind::HalfProductJump:
            if (x == 1) return y;
            if (y == 1) return x;
            return x * y / 2;
        case TNormKind::Custom: {
            Rat v = fn_(x, y);
            require_unit(v, "custom t-norm value");
            return v;
        }
    }
    throw std::logic_error("unhandled t-norm kind");
}

TNorm::SupDiagonal TNorm::sup_diagonal(std::span<const Rat> grid) const {
    switch (kind_) {
        case TNormKind::Min:
        case TNormKind::Product:
        case TNormKind::Lukasiewicz:
            return {Rat(1), true};
        case TNormKind::Drastic:
            return {Rat(0), true};
        case TNormKind::HalfProductJump:
            return {Rat(1, 2), true};
        case TNormKind::Custom: {
            Rat best(0);
            for (const Rat& x : grid) {
                if (x >= 1) continue;
                Rat v = (*this)(x, x);
                if (v > best) best = v;
            }
            return {best, false};
        }
    }
    throw std::logic_error("unhandled t-norm kind");
}

Rat TNorm::iterate(int r, const Rat& x, const Rat& y) const {
    if (r < 1) throw std::domain_error("iterate requires r >= 1");
    Rat u = (*this)(x, y);
    for (int k = 2; k <= r; ++k) u = (*this)(u, u);
    return u;
}

Rat TConorm::operator()(const Rat& x, const Rat& y) const {
    require_unit(x, "x");
    require_unit(y, "y");
    return 1 - tnorm(1 - x, 1 - y);
}

TNormAxiomReport check_tnorm_axioms(const TNorm& t, std::span<const Rat> grid) {
    if (std::find(grid.begin(), grid.end(), Rat(0)) == grid.end() ||
        std::find(grid.begin(), grid.end(), Rat(1)) == grid.end())
        throw std::invalid_argument("axiom grid must contain 0 and 1");
    long interior = 0;
    for (const Rat& g : grid)
        if (g > 0 && g < 1) ++interior;
    if (interior < 9) throw std::invalid_argument("axiom grid must contain at least 9 interior points");

    std::vector<Rat> pts(grid.begin(), grid.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    TNormAxiomReport report;
    bool comm_done = false, assoc_done = false, mono_done = false;
    auto violate = [&](const std::string& axiom, std::vector<Rat> point, std::string note) {
        report.pass = false;
        report.violations.push_back({axiom, std::move(point), std::move(note)});
    };

    // identity: T(x,1) = T(1,x) = x
    for (const Rat& x : pts) {
        ++report.instances;
        try {
            if (t(x, Rat(1)) != x || t(Rat(1), x) != x) {
                violate("identity", {x}, "T(x,1) != x");
                break;
            }
        } catch (const TableDomainError& e) {
            violate("identity", {x}, e.what());
            break;
        }
    }

    // commutativity
    for (std::size_t i = 0; i < pts.size() && !comm_done; ++i) {
        for (std::size_t j = i; j < pts.size() && !comm_done; ++j) {
            ++report.instances;
            try {
                if (t(pts[i], pts[j]) != t(pts[j], pts[i])) {
                    violate("commutativity", {pts[i], pts[j]}, "");
                    comm_done = true;
                }
            } catch (const TableDomainError& e) {
                violate("commutativity", {pts[i], pts[j]}, e.what());
                comm_done = true;
            }
        }
    }

    // monotonicity in each variable, consecutive grid points
    for (std::size_t j = 0; j < pts.size() && !mono_done; ++j) {
        for (std::size_t i = 0; i + 1 < pts.size() && !mono_done; ++i) {
            ++report.instances;
            try {
                if (t(pts[i], pts[j]) > t(pts[i + 1], pts[j])) {
                    violate("monotonicity", {pts[i], pts[i + 1], pts[j]}, "first argument");
                    mono_done = true;
                } else if (t(pts[j], pts[i]) > t(pts[j], pts[i + 1])) {
                    violate("monotonicity", {pts[j], pts[i], pts[i + 1]}, "second argument");
                    mono_done = true;
                }
            } catch (const TableDomainError& e) {
                violate("monotonicity", {pts[i], pts[j]}, e.what());
                mono_done = true;
            }
        }
    }

    // associativity over all grid triples
    for (std::size_t i = 0; i < pts.size() && !assoc_done; ++i) {
        for (std::size_t j = 0; j < pts.size() && !assoc_done; ++j) {
            for (std::size_t k = 0; k < pts.size() && !assoc_done; ++k) {
                ++report.instances;
                try {
                    if (t(t(pts[i], pts[j]), pts[k]) != t(pts[i], t(pts[j], pts[k]))) {
                        violate("associativity", {pts[i], pts[j], pts[k]}, "");
                        assoc_done = true;
                    }
                } catch (const TableDomainError& e) {
                    violate("associativity", {pts[i], pts[j], pts[k]}, e.what());
                    assoc_done = true;
                }
            }
        }
    }

    return report;
}

HypothesisCheck check_subproduct(const TNorm& t, const Rat& delta, std::span<const Rat> grid) {
    if (delta <= 0 || delta > 1) throw std::domain_error("delta must lie in (0,1]");
    switch (t.kind()) {
        case TNormKind::Drastic:
        case TNormKind::HalfProductJump:
        case TNormKind::Product:
            // 0 <= xy, xy/2 <= xy, xy <= xy on the open square below 1.
            return {true, true, std::nullopt, "closed form"};
        case TNormKind::Lukasiewicz:
            // max(x+y-1, 0) - xy = -(1-x)(1-y) when positive, so always <= xy.
            return {true, true, std::nullopt, "closed form"};
        case TNormKind::Min: {
            Rat w = delta / 2;
            return {false, true, std::array<Rat, 2>{w, w}, "min(x,x) = x > x^2 on (0,1)"};
        }
        case TNormKind::Custom: {
            for (const Rat& x : grid) {
                if (x >= delta) continue;
                for (const Rat& y : grid) {
                    if (y >= delta) continue;
                    if (t(x, y) > x * y) return {false, false, std::array<Rat, 2>{x, y}, ""};
                }
            }
            return {true, false, std::nullopt, "grid evidence only"};
        }
    }
    throw std::logic_error("unhandled t-norm kind");
}

HypothesisCheck check_archimedean_near_origin(const TNorm& t, const Rat& delta, std::span<const Rat> grid) {
    if (delta <= 0 || delta > 1) throw std::domain_error("delta must lie in (0,1]");
    switch (t.kind()) {
        case TNormKind::HalfProductJump:
        case TNormKind::Product:
            // 0 < x^2/2 < x and 0 < x^2 < x on (0,1).
            return {true, true, std::nullopt, "closed form"};
        case TNormKind::Drastic: {
            Rat w = delta / 2;
            return {false, true, std::array<Rat, 2>{w, w}, "Z(x,x) = 0 for x < 1"};
        }
        case TNormKind::Min: {
            Rat w = delta / 2;
            return {false, true, std::array<Rat, 2>{w, w}, "min(x,x) = x, not strictly below x"};
        }
        case TNormKind::Lukasiewicz: {
            // T(x,x) = 0 for x <= 1/2.
            Rat w = delta / 2 < Rat(1, 2) ? delta / 2 : Rat(1, 4);
            return {false, true, std::array<Rat, 2>{w, w}, "W(x,x) = 0 near the origin"};
        }
        case TNormKind::Custom: {
            for (const Rat& x : grid) {
                if (x <= 0 || x >= delta) continue;
                Rat v = t(x, x);
                if (!(v > 0 && v < x)) return {false, false, std::array<Rat, 2>{x, x}, ""};
            }
            return {true, false, std::nullopt, "grid evidence only"};
        }
    }
    throw std::logic_error("unhandled t-norm kind");
}

std::vector<Rat> uniform_grid(int denominator) {
    if (denominator < 1) throw std::domain_error("grid denominator must be positive");
    std::vector<Rat> grid;
    grid.reserve(denominator + 1);
    for (int k = 0; k <= denominator; ++k) grid.emplace_back(k, denominator);
    return grid;
}

}  // namespace pns
