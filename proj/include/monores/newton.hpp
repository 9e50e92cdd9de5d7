#pragma once

// Newton polyhedron Γ⁺(A) = conv(A) + R₊ⁿ in exact integer arithmetic.
//
// Every facet of Γ⁺ is spanned, as an affine space, by points of A lying on
// it together with the coordinate directions e_k parallel to it. Anchoring at
// the lowest-index point a_i on the facet, n-1 independent vectors can be
// picked from {a_j - a_i : j > i} ∪ {e_k}, so the facet normal appears as the
// generalized cross product of one of those (n-1)-tuples. We enumerate all of
// them, keep the non-negative primitive normals whose hyperplane supports A,
// and confirm the face has dimension n-1.

#include <algorithm>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <ostream>
#include <span>
#include <vector>

#include "monores/checked.hpp"
#include "monores/combinatorics.hpp"
#include "monores/error.hpp"
#include "monores/exponent.hpp"
#include "monores/ideal.hpp"

namespace monores {

/// Facet {x : normal·x = offset} of Γ⁺(A); Γ⁺ lies on the side normal·x >= offset.
struct Facet {
    std::vector<Int> normal;            // primitive, non-negative, nonzero
    Int offset = 0;                     // min over A of normal·a
    std::vector<std::size_t> onFacet;   // indices into A attaining the offset
    bool compact = false;               // every normal entry > 0

    bool contains(const Exponent& x) const { return checkedDot(normal, x.coords()) == offset; }

    friend bool operator==(const Facet&, const Facet&) = default;
};

struct NewtonPolyhedron {
    std::vector<Exponent> points;
    std::vector<Facet> facets;               // sorted by normal
    std::vector<std::size_t> vertexIndices;  // sorted indices into points

    std::size_t dimension() const { return points.empty() ? 0 : points[0].dimension(); }
};

namespace detail {

inline std::vector<Int> difference(const Exponent& a, const Exponent& b) {
    std::vector<Int> d(a.dimension());
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = checkedSub(a[k], b[k]);
    return d;
}

inline std::vector<Int> unitVector(std::size_t n, std::size_t k) {
    std::vector<Int> e(n, 0);
    e[k] = 1;
    return e;
}

// Orient a nonzero null vector to be non-negative; returns false when it has
// entries of both signs (such hyperplanes never support Γ⁺).
inline bool orientNonNegative(std::vector<Int>& v) {
    bool pos = false, neg = false;
    for (Int x : v) {
        pos |= x > 0;
        neg |= x < 0;
    }
    if (pos && neg) return false;
    if (neg)
        for (Int& x : v) x = -x;
    return pos || neg;
}

// Dimension of the face {ρ·x = c} ∩ Γ⁺: affine span of the points on it plus
// the coordinate directions along which ρ vanishes.
inline std::size_t faceDimension(std::span<const Exponent> A, const std::vector<Int>& normal,
                                 const std::vector<std::size_t>& onFacet) {
    const std::size_t n = normal.size();
    IntMatrix rows;
    for (std::size_t j = 1; j < onFacet.size(); ++j)
        rows.push_back(difference(A[onFacet[j]], A[onFacet[0]]));
    for (std::size_t k = 0; k < n; ++k)
        if (normal[k] == 0) rows.push_back(unitVector(n, k));
    return rank(rows);
}

inline Int ceilDiv(Int num, Int den) {
    // den > 0
    Int q = num / den;
    if (num % den != 0 && num > 0) ++q;
    return q;
}

}  // namespace detail

/// The facet of Γ⁺(A) with the given normal direction, or nothing when the
/// supporting hyperplane with that normal only touches a lower-dimensional face.
inline std::optional<Facet> facetFromNormal(std::span<const Exponent> A, std::vector<Int> normal) {
    const std::size_t n = A[0].dimension();
    normal = primitive(std::move(normal));
    if (!detail::orientNonNegative(normal)) return std::nullopt;
    Facet f;
    f.normal = std::move(normal);
    f.offset = checkedDot(f.normal, A[0].coords());
    for (std::size_t j = 1; j < A.size(); ++j) f.offset = std::min(f.offset, checkedDot(f.normal, A[j].coords()));
    for (std::size_t j = 0; j < A.size(); ++j)
        if (checkedDot(f.normal, A[j].coords()) == f.offset) f.onFacet.push_back(j);
    if (detail::faceDimension(A, f.normal, f.onFacet) + 1 != n) return std::nullopt;
    f.compact = std::all_of(f.normal.begin(), f.normal.end(), [](Int x) { return x > 0; });
    return f;
}

inline NewtonPolyhedron computeNewtonPolyhedron(std::span<const Exponent> A) {
    const std::size_t n = validateGenerators(A);
    const std::size_t m = A.size();

    std::map<std::vector<Int>, Facet> found;
    std::set<std::vector<Int>> tried;

    for (std::size_t base = 0; base < m; ++base) {
        std::vector<std::vector<Int>> dirs;
        for (std::size_t j = base + 1; j < m; ++j) dirs.push_back(detail::difference(A[j], A[base]));
        for (std::size_t k = 0; k < n; ++k) dirs.push_back(detail::unitVector(n, k));

        IntMatrix rows(n - 1);
        forEachSubset(dirs.size(), n - 1, [&](std::span<const std::size_t> pick) {
            for (std::size_t r = 0; r < pick.size(); ++r) rows[r] = dirs[pick[r]];
            std::vector<Int> v = nullVector(rows, n);
            v = primitive(std::move(v));
            if (!detail::orientNonNegative(v)) return true;
            if (!tried.insert(v).second) return true;
            if (auto f = facetFromNormal(A, v)) found.emplace(f->normal, std::move(*f));
            return true;
        });
    }

    NewtonPolyhedron P;
    P.points.assign(A.begin(), A.end());
    for (auto& [normal, f] : found) P.facets.push_back(std::move(f));

    // A point of A is a vertex iff the normals of the facets through it span Rⁿ.
    for (std::size_t i = 0; i < m; ++i) {
        IntMatrix normals;
        for (const auto& f : P.facets)
            if (std::binary_search(f.onFacet.begin(), f.onFacet.end(), i)) normals.push_back(f.normal);
        if (rank(normals) == n) P.vertexIndices.push_back(i);
    }
    return P;
}

inline std::vector<Facet> compactFacets(const NewtonPolyhedron& P) {
    std::vector<Facet> out;
    std::copy_if(P.facets.begin(), P.facets.end(), std::back_inserter(out),
                 [](const Facet& f) { return f.compact; });
    return out;
}

/// x ∈ r·Γ⁺(A).
inline bool membershipInScaled(const NewtonPolyhedron& P, Int r, const Exponent& x) {
    if (x.dimension() != P.dimension()) throw DimensionMismatch(P.dimension(), x.dimension());
    if (r < 1) throw InvalidInput("scale factor must be at least 1");
    return std::all_of(P.facets.begin(), P.facets.end(), [&](const Facet& f) {
        return checkedDot(f.normal, x.coords()) >= checkedMul(r, f.offset);
    });
}

namespace detail {

// Upper bound on the number of column scans in closure enumeration.
inline constexpr std::uint64_t kClosureScanLimit = 200'000'000;

}  // namespace detail

/// Minimal generators of the monomial ideal spanned by the lattice points of
/// r·Γ⁺(A), i.e. the integral closure of (z^A)^r.
///
/// Minimal generators lie in the box [0, r·M]ⁿ with M the largest coordinate
/// in A: if x_i > r·M then x - e_i is still in r·Γ⁺ (the convex part of x has
/// i-th coordinate at most r·M, so the recession part is at least e_i).
/// The last coordinate is not scanned: for each prefix the smallest feasible
/// value follows from the facet inequalities directly.
inline MonomialIdeal integralClosureOfPower(const NewtonPolyhedron& P, Int r) {
    if (r < 1) throw InvalidInput("closure power must be at least 1");
    const std::size_t n = P.dimension();
    Int M = 0;
    for (const auto& a : P.points)
        for (Int c : a.coords()) M = std::max(M, c);
    const Int bound = checkedMul(r, M);
    const std::size_t last = n - 1;

    std::uint64_t scans = 1;
    for (std::size_t k = 0; k < last; ++k) {
        scans *= static_cast<std::uint64_t>(bound) + 1;
        if (scans > detail::kClosureScanLimit)
            throw InvalidInput("integral closure enumeration box too large");
    }

    std::vector<Int> scaledOffset;
    for (const auto& f : P.facets) scaledOffset.push_back(checkedMul(r, f.offset));

    auto inScaled = [&](const std::vector<Int>& x) {
        for (std::size_t f = 0; f < P.facets.size(); ++f)
            if (checkedDot(P.facets[f].normal, x) < scaledOffset[f]) return false;
        return true;
    };

    std::vector<Exponent> gens;
    std::vector<Int> x(n, 0);
    while (true) {
        // Smallest last coordinate for this prefix, or none.
        bool feasible = true;
        Int need = 0;
        for (std::size_t f = 0; f < P.facets.size() && feasible; ++f) {
            const auto& rho = P.facets[f].normal;
            Int partial = 0;
            for (std::size_t k = 0; k < last; ++k) partial = checkedAdd(partial, checkedMul(rho[k], x[k]));
            Int deficit = checkedSub(scaledOffset[f], partial);
            if (rho[last] == 0) {
                feasible = deficit <= 0;
            } else {
                need = std::max(need, detail::ceilDiv(deficit, rho[last]));
            }
        }
        if (feasible && need <= bound) {
            x[last] = need;
            bool minimal = true;
            for (std::size_t k = 0; k < last && minimal; ++k) {
                if (x[k] == 0) continue;
                --x[k];
                minimal = !inScaled(x);
                ++x[k];
            }
            if (minimal) gens.emplace_back(x);
        }
        // odometer over the prefix
        std::size_t k = 0;
        while (k < last && x[k] == bound) x[k++] = 0;
        if (k == last) break;
        ++x[k];
    }
    return minimalize(n, gens);
}

inline MonomialIdeal integralClosureOfPower(std::span<const Exponent> A, Int r) {
    return integralClosureOfPower(computeNewtonPolyhedron(A), r);
}

inline MonomialIdeal integralClosure(std::span<const Exponent> A) { return integralClosureOfPower(A, 1); }

inline std::ostream& operator<<(std::ostream& os, const Facet& f) {
    os << '(';
    for (std::size_t i = 0; i < f.normal.size(); ++i) os << (i ? "," : "") << f.normal[i];
    return os << ")·x >= " << f.offset << (f.compact ? " [compact]" : "");
}

}  // namespace monores
