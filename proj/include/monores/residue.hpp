#pragma once

// Residue currents of Artinian monomial ideals.
//
// For {z^A = 0} = {0} the Bochner–Martinelli current is a sum over n-subsets
// B ⊆ A of terms C_B ∂̄[1/z₁^{α₁}] ∧ … ∧ ∂̄[1/z_n^{α_n}] ∧ e_B with α = Σ_{a∈B} a,
// and C_B ≠ 0 exactly when B is essential: B lies on a facet of Γ⁺(A) and
// det B ≠ 0. The annihilator is therefore the intersection of the irreducible
// ideals (z₁^{α₁}, …, z_n^{α_n}) over the essential sets.

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "monores/checked.hpp"
#include "monores/combinatorics.hpp"
#include "monores/error.hpp"
#include "monores/exponent.hpp"
#include "monores/ideal.hpp"
#include "monores/newton.hpp"

namespace monores {

struct EssentialSet {
    std::vector<std::size_t> indices;  // sorted, into A
    std::size_t facetIndex = 0;        // into NewtonPolyhedron::facets
    Int determinant = 0;               // det of the points of B as columns, in index order
    Exponent alpha;                    // Σ_{a∈B} a

    friend bool operator==(const EssentialSet&, const EssentialSet&) = default;
};

/// One nonvanishing term of the current. Only the fact that C_B ≠ 0 is kept;
/// the orientation of e_B is not tracked since annihilation ignores signs.
struct ResidueTerm {
    Exponent alpha;
    std::vector<std::size_t> basisLabel;
    bool constantNonzero = true;
};

struct AnnihilatorReport {
    std::vector<EssentialSet> essentialSets;
    std::vector<ResidueTerm> terms;
    MonomialIdeal annihilator;
    bool equalsIdeal = false;
    bool completeIntersection = false;
};

inline void requireArtinian(std::span<const Exponent> A, const char* what) {
    if (!varietyIsOrigin(A))
        throw PreconditionError(std::string(what) + " requires {z^A = 0} = {0} (a pure power of every variable)");
}

inline Int subsetDeterminant(std::span<const Exponent> A, std::span<const std::size_t> B) {
    const std::size_t n = A[0].dimension();
    IntMatrix m(n, std::vector<Int>(B.size()));
    for (std::size_t c = 0; c < B.size(); ++c)
        for (std::size_t r = 0; r < n; ++r) m[r][c] = A[B[c]][r];
    return determinant(m);
}

/// n-subsets of A lying on a common facet of P with nonzero determinant,
/// searched facet by facet. Does not check the Artinian hypothesis.
inline std::vector<EssentialSet> essentialSetsOf(const NewtonPolyhedron& P) {
    const std::size_t n = P.dimension();
    std::map<std::vector<std::size_t>, EssentialSet> bySet;
    for (std::size_t fi = 0; fi < P.facets.size(); ++fi) {
        const auto& on = P.facets[fi].onFacet;
        forEachSubset(on.size(), n, [&](std::span<const std::size_t> pick) {
            std::vector<std::size_t> idx;
            for (std::size_t p : pick) idx.push_back(on[p]);
            if (bySet.contains(idx)) return true;
            Int det = subsetDeterminant(P.points, idx);
            if (det == 0) return true;
            std::vector<Exponent> pts;
            for (std::size_t i : idx) pts.push_back(P.points[i]);
            bySet.emplace(idx, EssentialSet{idx, fi, det, sum(pts)});
            return true;
        });
    }
    std::vector<EssentialSet> out;
    for (auto& [k, e] : bySet) out.push_back(std::move(e));
    return out;
}

inline std::vector<EssentialSet> enumerateEssentialSets(std::span<const Exponent> A) {
    validateGenerators(A);
    requireArtinian(A, "essential-set enumeration");
    return essentialSetsOf(computeNewtonPolyhedron(A));
}

inline AnnihilatorReport annihilator(std::span<const Exponent> A) {
    const std::size_t n = validateGenerators(A);
    requireArtinian(A, "annihilator");
    AnnihilatorReport rep{essentialSetsOf(computeNewtonPolyhedron(A)), {}, MonomialIdeal::unit(n), false, false};
    if (rep.essentialSets.empty()) throw std::logic_error("Artinian ideal without essential sets");

    std::vector<MonomialIdeal> pieces;
    for (const auto& e : rep.essentialSets) {
        rep.terms.push_back(ResidueTerm{e.alpha, e.indices, true});
        pieces.push_back(pureMonomialIdeal(e.alpha));
    }
    rep.annihilator = intersectAll(n, pieces);

    const MonomialIdeal ideal = minimalize(n, A);
    rep.equalsIdeal = rep.annihilator == ideal;
    rep.completeIntersection = isCompleteIntersection(ideal);
    if (rep.equalsIdeal != rep.completeIntersection)
        throw std::logic_error("annihilator equals the ideal but the ideal is not a complete intersection");
    return rep;
}

/// f = z₁^{n·b₁ - 1} where (b₁, 0, …, 0) is where Γ(A) meets the first axis:
/// a monomial in Ann R^{z^A} but not in the integral closure of (z^A)^n.
inline Exponent brianconSkodaWitness(std::span<const Exponent> A) {
    const std::size_t n = validateGenerators(A);
    requireArtinian(A, "Briançon–Skoda witness");
    if (n < 2) throw PreconditionError("Briançon–Skoda witness needs n >= 2; the strict inclusion fails for n = 1");
    // Γ⁺ meets the first axis only in hulls of pure z₁ powers.
    std::optional<Int> b1;
    for (const auto& a : A)
        if (a.pureAxis() == 0) b1 = b1 ? std::min(*b1, a[0]) : a[0];
    return Exponent::pure(n, 0, checkedSub(checkedMul(static_cast<Int>(n), *b1), 1));
}

/// closure((z^A)^μ) ⊆ Ann R^{z^A} ⊆ (z^A), μ = min(|A|, n).
struct ChainReport {
    Int mu = 0;
    MonomialIdeal closurePowerMu;
    MonomialIdeal annihilator;
    MonomialIdeal ideal;
    bool leftInclusion = false;
    bool rightInclusion = false;
    bool leftStrict = false;
    bool rightStrict = false;
    bool completeIntersection = false;
    std::optional<Exponent> witness;
    bool witnessInAnnihilator = false;
    bool witnessOutsideClosure = false;
};

inline ChainReport verifyChain(std::span<const Exponent> A) {
    const std::size_t n = validateGenerators(A);
    requireArtinian(A, "Briançon–Skoda chain");
    const NewtonPolyhedron P = computeNewtonPolyhedron(A);
    AnnihilatorReport ann = annihilator(A);
    const Int mu = static_cast<Int>(std::min(A.size(), n));

    ChainReport rep{mu, integralClosureOfPower(P, mu), ann.annihilator, minimalize(n, A), {}, {}, {}, {}, {}, std::nullopt};
    rep.completeIntersection = ann.completeIntersection;
    rep.leftInclusion = isSubideal(rep.closurePowerMu, rep.annihilator);
    rep.rightInclusion = isSubideal(rep.annihilator, rep.ideal);
    rep.leftStrict = rep.leftInclusion && !isSubideal(rep.annihilator, rep.closurePowerMu);
    rep.rightStrict = rep.rightInclusion && !isSubideal(rep.ideal, rep.annihilator);

    if (n >= 2) {
        rep.witness = brianconSkodaWitness(A);
        rep.witnessInAnnihilator = contains(rep.annihilator, *rep.witness);
        rep.witnessOutsideClosure = !membershipInScaled(P, static_cast<Int>(n), *rep.witness);
    }

    if (!rep.leftInclusion || !rep.rightInclusion)
        throw std::logic_error("Briançon–Skoda chain inclusion failed");
    if (rep.rightStrict == rep.completeIntersection)
        throw std::logic_error("annihilator strictness disagrees with the complete-intersection test");
    if (n >= 2 && !(rep.leftStrict && rep.witnessInAnnihilator && rep.witnessOutsideClosure))
        throw std::logic_error("closure of the n-th power is not strictly inside the annihilator");
    if (n == 1 && (rep.leftStrict || rep.rightStrict))
        throw std::logic_error("in one variable the three ideals must coincide");
    return rep;
}

}  // namespace monores
