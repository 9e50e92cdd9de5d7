#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "monores/checked.hpp"
#include "monores/error.hpp"

namespace monores {

/// Exponent vector a of a monomial z^a: a lattice point with non-negative
/// coordinates. Ordered lexicographically.
class Exponent {
public:
    Exponent() = default;

    explicit Exponent(std::vector<Int> coords) : coords_(std::move(coords)) {
        for (Int c : coords_)
            if (c < 0) throw InvalidInput("negative exponent entry " + std::to_string(c));
    }

    Exponent(std::initializer_list<Int> coords) : Exponent(std::vector<Int>(coords)) {}

    static Exponent zero(std::size_t n) { return Exponent(std::vector<Int>(n, 0)); }

    /// x_i^k as an exponent in dimension n.
    static Exponent pure(std::size_t n, std::size_t axis, Int power) {
        std::vector<Int> c(n, 0);
        c.at(axis) = power;
        return Exponent(std::move(c));
    }

    std::size_t dimension() const noexcept { return coords_.size(); }
    Int operator[](std::size_t i) const { return coords_[i]; }
    std::span<const Int> coords() const noexcept { return coords_; }
    const std::vector<Int>& vec() const noexcept { return coords_; }

    bool isZero() const noexcept {
        for (Int c : coords_)
            if (c != 0) return false;
        return true;
    }

    /// Index of the only nonzero coordinate, or -1 if the exponent is not a
    /// positive pure power.
    int pureAxis() const noexcept {
        int axis = -1;
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (coords_[i] == 0) continue;
            if (axis >= 0) return -1;
            axis = static_cast<int>(i);
        }
        return axis;
    }

    Int degree() const {
        Int s = 0;
        for (Int c : coords_) s = checkedAdd(s, c);
        return s;
    }

    friend auto operator<=>(const Exponent&, const Exponent&) = default;
    friend bool operator==(const Exponent&, const Exponent&) = default;

private:
    std::vector<Int> coords_;
};

inline void requireSameDimension(const Exponent& a, const Exponent& b) {
    if (a.dimension() != b.dimension()) throw DimensionMismatch(a.dimension(), b.dimension());
}

/// z^a divides z^b, i.e. a <= b componentwise.
inline bool divides(const Exponent& a, const Exponent& b) {
    requireSameDimension(a, b);
    for (std::size_t i = 0; i < a.dimension(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Exponent lcm(const Exponent& a, const Exponent& b) {
    requireSameDimension(a, b);
    std::vector<Int> c(a.dimension());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = std::max(a[i], b[i]);
    return Exponent(std::move(c));
}

inline Exponent operator+(const Exponent& a, const Exponent& b) {
    requireSameDimension(a, b);
    std::vector<Int> c(a.dimension());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = checkedAdd(a[i], b[i]);
    return Exponent(std::move(c));
}

/// Sum of a list of exponents; the list must be non-empty.
inline Exponent sum(std::span<const Exponent> pts) {
    if (pts.empty()) throw InvalidInput("sum of an empty exponent list");
    Exponent s = pts[0];
    for (std::size_t i = 1; i < pts.size(); ++i) s = s + pts[i];
    return s;
}

/// Restriction to the coordinates listed in `axes` (in that order).
inline Exponent restrictTo(const Exponent& a, std::span<const std::size_t> axes) {
    std::vector<Int> c;
    c.reserve(axes.size());
    for (std::size_t ax : axes) c.push_back(a[ax]);
    return Exponent(std::move(c));
}

/// "z1^8 z2" style text; "1" for the zero exponent.
inline std::string toMonomialString(const Exponent& a, const std::string& var = "z") {
    std::string out;
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        if (a[i] == 0) continue;
        if (!out.empty()) out += ' ';
        out += var + std::to_string(i + 1);
        if (a[i] != 1) out += '^' + std::to_string(a[i]);
    }
    return out.empty() ? "1" : out;
}

inline std::ostream& operator<<(std::ostream& os, const Exponent& a) {
    os << '(';
    for (std::size_t i = 0; i < a.dimension(); ++i) os << (i ? "," : "") << a[i];
    return os << ')';
}

}  // namespace monores
