#pragma once

// Symbolic action of tensor products of one-variable residue currents.
//
// In one variable ∫ ∂̄[1/z^p] ∧ φ dz = 2πi/(p-1)! · φ^{(p-1)}(0). Paired with a
// monomial z^k the derivative vanishes unless k = p-1, where it equals (p-1)!,
// so the value is 2πi or 0. For ⊗ᵢ ∂̄[1/zᵢ^{αᵢ}] the pairing against z^k dz is
// (2πi)^n when k = α - 1 and zero otherwise.
//
// Test functions are holomorphic polynomials only. A test factor containing
// some z̄ᵢ is killed by ∂̄[1/zᵢ^p] anyway, so nothing is lost for the question
// of annihilation.
//
// The membership oracle here finds essential sets on its own, through the
// hyperplane spanned by each n-subset, without going through facet
// enumeration.

#include <algorithm>
#include <span>
#include <stdexcept>
#include <vector>

#include "monores/checked.hpp"
#include "monores/combinatorics.hpp"
#include "monores/error.hpp"
#include "monores/exponent.hpp"
#include "monores/ideal.hpp"
#include "monores/polynomial.hpp"

namespace monores {

/// ⊗ᵢ ∂̄[1/zᵢ^{αᵢ}] with every αᵢ >= 1.
class TensorCurrent {
public:
    explicit TensorCurrent(Exponent alpha) : alpha_(std::move(alpha)) {
        for (Int a : alpha_.coords())
            if (a < 1) throw InvalidInput("current orders must be positive");
    }

    const Exponent& alpha() const noexcept { return alpha_; }
    std::size_t dimension() const noexcept { return alpha_.dimension(); }

private:
    Exponent alpha_;
};

/// coefficient · (2πi)^piPower. A zero coefficient is the zero pairing.
struct PairingValue {
    Rational coefficient{0};
    Int piPower = 0;

    bool isZero() const { return coefficient.numerator() == 0; }
    friend bool operator==(const PairingValue& a, const PairingValue& b) {
        if (a.isZero() || b.isZero()) return a.isZero() == b.isZero();
        return a.coefficient == b.coefficient && a.piPower == b.piPower;
    }
};

namespace detail {

// (1/(p-1)!) · d^{p-1}/dz^{p-1} z^k at z = 0, the factor multiplying 2πi.
inline Rational oneVariableFactor(Int p, Int k) { return k == p - 1 ? Rational(1) : Rational(0); }

inline Rational pairingCoefficient(std::span<const Int> alpha, std::span<const Int> h,
                                   std::span<const Int> test) {
    Rational c = 1;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        Rational f = oneVariableFactor(alpha[i], checkedAdd(h[i], test[i]));
        if (f.numerator() == 0) return f;
        c *= f;
    }
    return c;
}

}  // namespace detail

/// ⟨z^h · T, z^testExp dz⟩.
inline PairingValue pairMonomial(const TensorCurrent& T, const Exponent& h, const Exponent& testExp) {
    const std::size_t n = T.dimension();
    if (h.dimension() != n) throw DimensionMismatch(n, h.dimension());
    if (testExp.dimension() != n) throw DimensionMismatch(n, testExp.dimension());
    Rational c = detail::pairingCoefficient(T.alpha().coords(), h.coords(), testExp.coords());
    if (c.numerator() == 0) return {};
    return {c, static_cast<Int>(n)};
}

namespace detail {

// h·T = 0 iff the pairing vanishes against every z^t dz; only t <= α - 1 can
// contribute.
inline bool annihilatesByPairing(const TensorCurrent& T, const Polynomial& h) {
    const auto& alpha = T.alpha().coords();
    const std::size_t n = alpha.size();
    std::vector<Int> t(n, 0);
    while (true) {
        Rational total = 0;
        for (const auto& [beta, coeff] : h.terms()) total += coeff * pairingCoefficient(alpha, beta.coords(), t);
        if (total.numerator() != 0) return false;
        std::size_t k = 0;
        while (k < n && t[k] == alpha[k] - 1) t[k++] = 0;
        if (k == n) return true;
        ++t[k];
    }
}

inline bool annihilatesByDivisibility(const TensorCurrent& T, const Polynomial& h) {
    const auto& alpha = T.alpha();
    return std::all_of(h.terms().begin(), h.terms().end(), [&](const auto& term) {
        for (std::size_t i = 0; i < alpha.dimension(); ++i)
            if (term.first[i] >= alpha[i]) return true;
        return false;
    });
}

}  // namespace detail

/// h·T = 0, decided both by summing pairings and by the ideal (z₁^{α₁},…,z_n^{α_n});
/// the two must agree.
inline bool annihilatesTerm(const TensorCurrent& T, const Polynomial& h) {
    if (h.dimension() != T.dimension()) throw DimensionMismatch(T.dimension(), h.dimension());
    const bool byPairing = detail::annihilatesByPairing(T, h);
    const bool byDivisibility = detail::annihilatesByDivisibility(T, h);
    if (byPairing != byDivisibility) throw std::logic_error("pairing and divisibility disagree");
    return byPairing;
}

/// α^B for every n-subset B of A that spans a hyperplane ρ·x = c with ρ >= 0
/// supporting A. Such a B has det ≠ 0 and spans a facet of Γ⁺(A).
inline std::vector<Exponent> essentialAlphasByHyperplanes(std::span<const Exponent> A) {
    const std::size_t n = validateGenerators(A);
    std::vector<Exponent> alphas;
    IntMatrix bt(n, std::vector<Int>(n));
    forEachSubset(A.size(), n, [&](std::span<const std::size_t> B) {
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) bt[r][c] = A[B[r]][c];
        Int det = determinant(bt);
        if (det == 0) return true;
        // Cramer: ρ = det · (Bᵀ)^{-1} 1, offset det.
        std::vector<Int> rho(n);
        for (std::size_t j = 0; j < n; ++j) {
            IntMatrix mj = bt;
            for (std::size_t r = 0; r < n; ++r) mj[r][j] = 1;
            rho[j] = determinant(mj);
        }
        Int offset = det;
        if (offset < 0) {
            offset = -offset;
            for (Int& x : rho) x = -x;
        }
        if (std::any_of(rho.begin(), rho.end(), [](Int x) { return x < 0; })) return true;
        for (const auto& a : A)
            if (checkedDot(rho, a.coords()) < offset) return true;
        std::vector<Exponent> pts;
        for (std::size_t i : B) pts.push_back(A[i]);
        alphas.push_back(sum(pts));
        return true;
    });
    return alphas;
}

/// h ∈ Ann R^{z^A}, decided by letting h act on every nonvanishing term.
inline bool annihilatorMembershipOracle(std::span<const Exponent> A, const Polynomial& h) {
    validateGenerators(A);
    if (!varietyIsOrigin(A))
        throw PreconditionError("membership oracle requires {z^A = 0} = {0}");
    for (const auto& alpha : essentialAlphasByHyperplanes(A))
        if (!annihilatesTerm(TensorCurrent(alpha), h)) return false;
    return true;
}

}  // namespace monores
