#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pns/rational.hpp"

namespace pns {

// Point of the carrier Q^d. Exact coordinates; the carrier stands in for a
// real vector space, so every checked instance is a genuine instance.
struct Vector {
    std::vector<Rat> coords;

    static Vector zero(int dim) { return Vector{std::vector<Rat>(static_cast<std::size_t>(dim), Rat(0))}; }
    static Vector unit(int dim, int axis) {
        Vector v = zero(dim);
        v.coords[static_cast<std::size_t>(axis)] = 1;
        return v;
    }

    int dim() const { return static_cast<int>(coords.size()); }
    bool is_zero() const {
        for (const Rat& c : coords)
            if (c != 0) return false;
        return true;
    }

    std::string text() const {
        std::ostringstream out;
        out << "(";
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (i) out << ",";
            out << rat_text(coords[i]);
        }
        out << ")";
        return out.str();
    }
};

inline void require_same_dim(const Vector& a, const Vector& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("vector dimension mismatch");
}

inline Vector operator+(const Vector& a, const Vector& b) {
    require_same_dim(a, b);
    Vector r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
    return r;
}

inline Vector operator-(const Vector& a, const Vector& b) {
    require_same_dim(a, b);
    Vector r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
    return r;
}

inline Vector operator-(const Vector& a) {
    Vector r = a;
    for (Rat& c : r.coords) c = -c;
    return r;
}

inline Vector scale(const Rat& lambda, const Vector& a) {
    Vector r = a;
    for (Rat& c : r.coords) c *= lambda;
    return r;
}

inline bool operator==(const Vector& a, const Vector& b) { return a.coords == b.coords; }

inline Rat norm_l1(const Vector& v) {
    Rat s(0);
    for (const Rat& c : v.coords) s += c < 0 ? -c : c;
    return s;
}

inline Rat norm_linf(const Vector& v) {
    Rat s(0);
    for (const Rat& c : v.coords) {
        Rat a = c < 0 ? -c : c;
        if (a > s) s = a;
    }
    return s;
}

// Squared Euclidean norm; exact comparisons against squared radii.
inline Rat norm_l2sq(const Vector& v) {
    Rat s(0);
    for (const Rat& c : v.coords) s += c * c;
    return s;
}

}  // namespace pns
