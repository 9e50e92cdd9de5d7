#pragma once

// Monomial ideals with positive-dimensional zero set.
//
// Outside the union V_k of the (k+1)-fold coordinate intersections, the
// degree-k part of the current splits into terms R_{B,I}, |B| = |I| = k, one
// per coordinate set I. R_{B,I} vanishes unless the projection T_I(B) is
// essential for T_I(A). When T_I(B) lies on a compact facet of Γ⁺(T_I(A)) the
// term is a nowhere-identically-zero smooth function of the remaining
// variables times ⊗_{i∈I} ∂̄[1/zᵢ^{αᵢ^B}], whose annihilator is (zᵢ^{αᵢ^B})_{i∈I}.
// Essential projections that lie only on non-compact facets are not covered,
// and are reported as unknown rather than dropped.
//
// Nothing essential is lost on V_k, so the contributions are taken at face
// value.

#include <algorithm>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "monores/checked.hpp"
#include "monores/combinatorics.hpp"
#include "monores/error.hpp"
#include "monores/exponent.hpp"
#include "monores/ideal.hpp"
#include "monores/newton.hpp"
#include "monores/residue.hpp"

namespace monores {

/// T_I(A): coordinates restricted to `axes`. Coinciding images are collapsed
/// in `distinct`; `imageOf[j]` locates the image of A[j] there.
struct Projection {
    std::vector<std::size_t> axes;
    std::vector<Exponent> images;
    std::vector<Exponent> distinct;
    std::vector<std::size_t> imageOf;
};

inline Projection projectExponents(std::span<const Exponent> A, std::span<const std::size_t> axes) {
    const std::size_t n = validateGenerators(A);
    if (axes.empty()) throw InvalidInput("projection onto an empty coordinate set");
    for (std::size_t i = 0; i < axes.size(); ++i) {
        if (axes[i] >= n) throw InvalidInput("projection axis out of range");
        if (i > 0 && axes[i] <= axes[i - 1]) throw InvalidInput("projection axes must be strictly increasing");
    }
    Projection p;
    p.axes.assign(axes.begin(), axes.end());
    for (const auto& a : A) {
        Exponent img = restrictTo(a, axes);
        auto it = std::find(p.distinct.begin(), p.distinct.end(), img);
        p.imageOf.push_back(static_cast<std::size_t>(it - p.distinct.begin()));
        if (it == p.distinct.end()) p.distinct.push_back(img);
        p.images.push_back(std::move(img));
    }
    return p;
}

enum class TermStatus { zero, known, unknown };

inline const char* toString(TermStatus s) {
    switch (s) {
        case TermStatus::zero: return "zero";
        case TermStatus::known: return "known";
        case TermStatus::unknown: return "unknown";
    }
    return "?";
}

struct ProjectedTerm {
    std::vector<std::size_t> axes;     // I, 0-based and sorted
    std::vector<std::size_t> members;  // B, sorted indices into A
    TermStatus status = TermStatus::zero;
    std::optional<MonomialIdeal> annContribution;  // present iff known
    Exponent alphaRestricted;                      // T_I(α^B)
};

inline std::vector<ProjectedTerm> enumerateProjectedTerms(std::span<const Exponent> A) {
    const std::size_t n = validateGenerators(A);
    const std::size_t lo = varietyCodimension(A);
    const std::size_t hi = std::min(A.size(), n);

    std::vector<ProjectedTerm> terms;
    for (std::size_t k = lo; k <= hi; ++k) {
        forEachSubset(n, k, [&](std::span<const std::size_t> axes) {
            const Projection proj = projectExponents(A, axes);
            const NewtonPolyhedron P = computeNewtonPolyhedron(proj.distinct);
            forEachSubset(A.size(), k, [&](std::span<const std::size_t> B) {
                ProjectedTerm t;
                t.axes.assign(axes.begin(), axes.end());
                t.members.assign(B.begin(), B.end());
                std::vector<Exponent> pts;
                for (std::size_t j : B) pts.push_back(A[j]);
                t.alphaRestricted = restrictTo(sum(pts), axes);

                std::vector<std::size_t> img;
                for (std::size_t j : B) img.push_back(proj.imageOf[j]);
                std::set<std::size_t> uniq(img.begin(), img.end());
                // Coinciding images give det 0.
                if (uniq.size() == img.size() && subsetDeterminant(proj.distinct, img) != 0) {
                    bool onAny = false, onCompact = false;
                    for (const auto& f : P.facets) {
                        bool all = std::all_of(img.begin(), img.end(), [&](std::size_t d) {
                            return std::binary_search(f.onFacet.begin(), f.onFacet.end(), d);
                        });
                        onAny |= all;
                        onCompact |= all && f.compact;
                    }
                    if (onCompact) {
                        t.status = TermStatus::known;
                        std::vector<Exponent> gens;
                        for (std::size_t i = 0; i < k; ++i)
                            gens.push_back(Exponent::pure(n, axes[i], t.alphaRestricted[i]));
                        t.annContribution = minimalize(n, gens);
                    } else if (onAny) {
                        t.status = TermStatus::unknown;
                    }
                }
                terms.push_back(std::move(t));
                return true;
            });
            return true;
        });
    }
    return terms;
}

struct PartialAnnihilatorReport {
    std::vector<ProjectedTerm> terms;
    MonomialIdeal partialAnnihilator;
    bool complete = false;
    std::size_t unknownCount = 0;
    std::size_t codim = 0;
    std::size_t mu = 0;
    std::vector<Exponent> generatorsUsed;
    std::vector<std::string> warnings;
};

struct PartialOptions {
    /// Drop generators that are multiples of others before computing terms.
    bool stripRedundant = false;
};

inline PartialAnnihilatorReport partialAnnihilator(std::span<const Exponent> input, PartialOptions opts = {}) {
    const std::size_t n = validateGenerators(input);
    const MonomialIdeal ideal = minimalize(n, input);

    std::vector<Exponent> A;
    std::vector<std::string> warnings;
    for (const auto& a : input) {
        const bool minimal = std::binary_search(ideal.generators().begin(), ideal.generators().end(), a);
        if (!minimal) {
            warnings.push_back("redundant generator " + toMonomialString(a) +
                               (opts.stripRedundant ? " stripped"
                                                    : " kept; the result depends on the choice of generators"));
            if (opts.stripRedundant) continue;
        }
        A.push_back(a);
    }

    PartialAnnihilatorReport rep{enumerateProjectedTerms(A), MonomialIdeal::unit(n), {}, {}, {}, {}, {}, {}};
    std::vector<MonomialIdeal> known;
    for (const auto& t : rep.terms) {
        if (t.status == TermStatus::known) known.push_back(*t.annContribution);
        if (t.status == TermStatus::unknown) ++rep.unknownCount;
    }
    rep.partialAnnihilator = intersectAll(n, known);
    rep.codim = varietyCodimension(A);
    rep.mu = std::min(A.size(), n);
    const bool minimalSet = A.size() == ideal.size();
    rep.complete = varietyIsOrigin(A) || (n == 2 && minimalSet && rep.unknownCount == 0);
    rep.generatorsUsed = std::move(A);
    rep.warnings = std::move(warnings);
    return rep;
}

}  // namespace monores
