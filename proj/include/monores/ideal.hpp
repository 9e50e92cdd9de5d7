#pragma once

// Monomial ideals as minimal generating sets of exponent vectors.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "monores/error.hpp"
#include "monores/exponent.hpp"

namespace monores {

class MonomialIdeal;
MonomialIdeal minimalize(std::size_t n, std::span<const Exponent> raw);

/// A nonzero monomial ideal (z^A) in n variables, stored by its unique minimal
/// generating set in lexicographic order. Construct through minimalize().
class MonomialIdeal {
public:
    std::size_t dimension() const noexcept { return dim_; }
    const std::vector<Exponent>& generators() const noexcept { return gens_; }
    std::size_t size() const noexcept { return gens_.size(); }

    /// The whole ring, generated by 1. Not accepted from user input but can
    /// arise as an empty intersection.
    bool isUnit() const noexcept { return gens_.size() == 1 && gens_[0].isZero(); }

    static MonomialIdeal unit(std::size_t n) {
        Exponent one = Exponent::zero(n);
        return minimalize(n, std::span<const Exponent>(&one, 1));
    }

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    friend MonomialIdeal minimalize(std::size_t n, std::span<const Exponent> raw);
    MonomialIdeal(std::size_t n, std::vector<Exponent> gens) : dim_(n), gens_(std::move(gens)) {}

    std::size_t dim_ = 0;
    std::vector<Exponent> gens_;
};

/// Unique minimal generating set of the ideal generated by `raw`.
inline MonomialIdeal minimalize(std::size_t n, std::span<const Exponent> raw) {
    if (n == 0) throw InvalidInput("ideal of dimension 0");
    if (raw.empty()) throw InvalidInput("empty generator list (zero ideal)");
    std::vector<Exponent> sorted(raw.begin(), raw.end());
    for (const auto& e : sorted)
        if (e.dimension() != n) throw DimensionMismatch(n, e.dimension());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    // a | b implies a <=lex b, so every potential divisor of an element is
    // already decided when the element is reached.
    std::vector<Exponent> kept;
    for (auto& e : sorted) {
        bool redundant = std::any_of(kept.begin(), kept.end(),
                                     [&](const Exponent& k) { return divides(k, e); });
        if (!redundant) kept.push_back(std::move(e));
    }
    return MonomialIdeal(n, std::move(kept));
}

inline MonomialIdeal minimalize(std::size_t n, const std::vector<Exponent>& raw) {
    return minimalize(n, std::span<const Exponent>(raw));
}

inline bool contains(const MonomialIdeal& I, const Exponent& e) {
    if (I.dimension() != e.dimension()) throw DimensionMismatch(I.dimension(), e.dimension());
    return std::any_of(I.generators().begin(), I.generators().end(),
                       [&](const Exponent& g) { return divides(g, e); });
}

/// J ⊆ I.
inline bool isSubideal(const MonomialIdeal& J, const MonomialIdeal& I) {
    if (I.dimension() != J.dimension()) throw DimensionMismatch(I.dimension(), J.dimension());
    return std::all_of(J.generators().begin(), J.generators().end(),
                       [&](const Exponent& g) { return contains(I, g); });
}

inline MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.dimension() != J.dimension()) throw DimensionMismatch(I.dimension(), J.dimension());
    std::vector<Exponent> lcms;
    lcms.reserve(I.size() * J.size());
    for (const auto& a : I.generators())
        for (const auto& b : J.generators()) lcms.push_back(lcm(a, b));
    return minimalize(I.dimension(), lcms);
}

inline MonomialIdeal intersectAll(std::size_t n, std::span<const MonomialIdeal> ideals) {
    MonomialIdeal acc = MonomialIdeal::unit(n);
    for (const auto& I : ideals) acc = intersect(acc, I);
    return acc;
}

inline MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.dimension() != J.dimension()) throw DimensionMismatch(I.dimension(), J.dimension());
    std::vector<Exponent> sums;
    sums.reserve(I.size() * J.size());
    for (const auto& a : I.generators())
        for (const auto& b : J.generators()) sums.push_back(a + b);
    return minimalize(I.dimension(), sums);
}

/// I^r, generated by the r-fold sumset of the generators.
inline MonomialIdeal power(const MonomialIdeal& I, Int r) {
    if (r < 1) throw InvalidInput("ideal power must be at least 1");
    MonomialIdeal acc = I;
    for (Int k = 1; k < r; ++k) acc = product(acc, I);
    return acc;
}

/// Ideal generated by x_i^{alpha_i}, one pure power per axis.
inline MonomialIdeal pureMonomialIdeal(const Exponent& alpha) {
    std::vector<Exponent> gens;
    for (std::size_t i = 0; i < alpha.dimension(); ++i)
        gens.push_back(Exponent::pure(alpha.dimension(), i, alpha[i]));
    return minimalize(alpha.dimension(), gens);
}

namespace detail {

inline std::size_t commonDimension(std::span<const Exponent> A) {
    if (A.empty()) throw InvalidInput("empty exponent list");
    const std::size_t n = A[0].dimension();
    if (n == 0) throw InvalidInput("exponents of dimension 0");
    for (const auto& a : A)
        if (a.dimension() != n) throw DimensionMismatch(n, a.dimension());
    return n;
}

}  // namespace detail

/// Checks that A is a usable generator tuple: nonempty, equal dimensions and
/// no repeated points. Returns the dimension.
inline std::size_t validateGenerators(std::span<const Exponent> A) {
    const std::size_t n = detail::commonDimension(A);
    std::set<Exponent> seen;
    for (const auto& a : A)
        if (!seen.insert(a).second) throw InvalidInput("duplicate generator in exponent list");
    return n;
}

struct Deduplicated {
    std::vector<Exponent> points;
    std::vector<std::string> warnings;
};

/// Drops repeated points, keeping the first occurrence, and records a warning
/// for each one dropped.
inline Deduplicated deduplicate(std::span<const Exponent> A) {
    Deduplicated out;
    std::set<Exponent> seen;
    for (std::size_t i = 0; i < A.size(); ++i) {
        if (seen.insert(A[i]).second) {
            out.points.push_back(A[i]);
        } else {
            out.warnings.push_back("duplicate generator " + toMonomialString(A[i]) + " at position " +
                                   std::to_string(i + 1) + " ignored");
        }
    }
    return out;
}

/// {z^A = 0} is the origin, i.e. A contains a pure power of every variable.
inline bool varietyIsOrigin(std::span<const Exponent> A) {
    const std::size_t n = detail::commonDimension(A);
    std::vector<bool> hit(n, false);
    for (const auto& a : A) {
        int ax = a.pureAxis();
        if (ax >= 0) hit[static_cast<std::size_t>(ax)] = true;
    }
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

/// codim {z^A = 0}: the smallest number of coordinates meeting the support of
/// every generator. The zero exponent (unit ideal) has an empty variety and is
/// rejected.
inline std::size_t varietyCodimension(std::span<const Exponent> A) {
    const std::size_t n = detail::commonDimension(A);
    if (n > 63) throw InvalidInput("variety codimension supports at most 63 variables");
    std::vector<std::uint64_t> supports;
    for (const auto& a : A) {
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (a[i] > 0) mask |= std::uint64_t{1} << i;
        if (mask == 0) throw InvalidInput("zero exponent: the variety is empty (unit ideal)");
        supports.push_back(mask);
    }
    std::size_t best = n;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t s = 1; s < limit; ++s) {
        auto size = static_cast<std::size_t>(std::popcount(s));
        if (size >= best) continue;
        if (std::all_of(supports.begin(), supports.end(),
                        [&](std::uint64_t m) { return (m & s) != 0; }))
            best = size;
    }
    return best;
}

/// Artinian ideals only: the minimal generators are exactly n pure powers.
inline bool isCompleteIntersection(const MonomialIdeal& I) {
    if (!varietyIsOrigin(I.generators()))
        throw PreconditionError("complete-intersection test requires an Artinian ideal");
    if (I.size() != I.dimension()) return false;
    return std::all_of(I.generators().begin(), I.generators().end(),
                       [](const Exponent& g) { return g.pureAxis() >= 0; });
}

inline std::ostream& operator<<(std::ostream& os, const MonomialIdeal& I) {
    os << '(';
    for (std::size_t i = 0; i < I.size(); ++i)
        os << (i ? ", " : "") << toMonomialString(I.generators()[i]);
    return os << ')';
}

}  // namespace monores
