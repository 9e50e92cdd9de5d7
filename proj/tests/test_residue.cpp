#include <catch_amalgamated.hpp>

#include "monores/residue.hpp"
#include "support.hpp"

using namespace monores;
using namespace monores::testing;

namespace {

using Indices = std::vector<std::size_t>;

Int det3(const Exponent& a, const Exponent& b, const Exponent& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - b[0] * (a[1] * c[2] - a[2] * c[1]) +
           c[0] * (a[1] * b[2] - a[2] * b[1]);
}

// Generators of ∩ (z₁^{α₁},…,z_n^{α_n}) by boxed membership.
Points intersectionOfIrreducibles(const Points& alphas, Int box) {
    Points inside;
    forEachInBox(alphas[0].dimension(), box, [&](const Exponent& x) {
        bool all = true;
        for (const auto& a : alphas) {
            bool some = false;
            for (std::size_t i = 0; i < a.dimension(); ++i) some |= x[i] >= a[i];
            all &= some;
        }
        if (all) inside.push_back(x);
    });
    return minimalElements(inside);
}

// Points on a compact facet of Γ⁺(A) inside the box, excluding A.
Points diagramPoints(const Points& A, const NewtonPolyhedron& P, Int box) {
    Points out;
    forEachInBox(A[0].dimension(), box, [&](const Exponent& x) {
        if (std::find(A.begin(), A.end(), x) != A.end()) return;
        if (!membershipInScaled(P, 1, x)) return;
        for (const auto& f : P.facets)
            if (f.compact && f.contains(x)) {
                out.push_back(x);
                return;
            }
    });
    return out;
}

Points interiorPoints(const Points& A, const NewtonPolyhedron& P, Int box) {
    Points out;
    forEachInBox(A[0].dimension(), box, [&](const Exponent& x) {
        for (const auto& f : P.facets)
            if (checkedDot(f.normal, x.coords()) <= f.offset) return;
        out.push_back(x);
    });
    return out;
}

}  // namespace

TEST_CASE("essential sets of the five-point plane example", "[residue]") {
    const auto E = enumerateEssentialSets(fivePointA());
    REQUIRE(E.size() == 4);
    CHECK(E[0].indices == Indices{0, 1});
    CHECK(E[1].indices == Indices{0, 2});
    CHECK(E[2].indices == Indices{1, 2});
    CHECK(E[3].indices == Indices{2, 4});
    CHECK(E[0].alpha == Exponent{14, 1});
    CHECK(E[1].alpha == Exponent{10, 3});
    CHECK(E[2].alpha == Exponent{8, 4});
    CHECK(E[3].alpha == Exponent{2, 9});
    CHECK(E[0].determinant == 8 * 1 - 6 * 0);

    const auto P = computeNewtonPolyhedron(fivePointA());
    for (const auto& e : E) {
        const auto& f = P.facets[e.facetIndex];
        CHECK(f.compact);
        CHECK(checkedDot(f.normal, e.alpha.coords()) == 2 * f.offset);
    }
}

TEST_CASE("annihilator of the five-point plane example", "[residue]") {
    const auto rep = annihilator(fivePointA());
    CHECK(rep.annihilator.generators() == Points{{0, 9}, {2, 4}, {8, 3}, {10, 1}, {14, 0}});
    CHECK_FALSE(rep.equalsIdeal);
    CHECK_FALSE(rep.completeIntersection);
    REQUIRE(rep.terms.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(rep.terms[i].basisLabel == rep.essentialSets[i].indices);
        CHECK(rep.terms[i].constantNonzero);
        for (Int a : rep.terms[i].alpha.coords()) CHECK(a > 0);
    }
}

TEST_CASE("pure powers are their own annihilator", "[residue]") {
    for (const Points& A : {Points{{3, 0}, {0, 3}}, Points{{0, 0, 4}, {2, 0, 0}, {0, 5, 0}}}) {
        const auto E = enumerateEssentialSets(A);
        REQUIRE(E.size() == 1);
        CHECK(E[0].indices.size() == A.size());
        CHECK(E[0].alpha == sum(A));
        const auto rep = annihilator(A);
        CHECK(rep.annihilator == minimalize(A[0].dimension(), A));
        CHECK(rep.equalsIdeal);
        CHECK(rep.completeIntersection);
    }
}

TEST_CASE("a flat subset on a facet is not essential", "[residue]") {
    const Points A{{3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {1, 2, 0}};
    REQUIRE(det3(A[0], A[1], A[3]) == 0);
    REQUIRE(det3(A[0], A[1], A[2]) != 0);
    REQUIRE(det3(A[0], A[2], A[3]) != 0);
    REQUIRE(det3(A[1], A[2], A[3]) != 0);
    const auto E = enumerateEssentialSets(A);
    REQUIRE(E.size() == 3);
    CHECK(E[0].indices == Indices{0, 1, 2});
    CHECK(E[1].indices == Indices{0, 2, 3});
    CHECK(E[2].indices == Indices{1, 2, 3});
    CHECK(E[1].determinant == det3(A[0], A[2], A[3]));
}

TEST_CASE("adding a lattice point on the diagram shrinks the annihilator", "[residue]") {
    const Points A{{3, 0}, {2, 1}, {0, 3}};
    const auto expected = intersectionOfIrreducibles({{5, 1}, {3, 3}, {2, 4}}, 8);
    REQUIRE(expected == Points{{0, 4}, {2, 3}, {3, 1}, {5, 0}});
    CHECK(annihilator(A).annihilator.generators() == expected);

    const auto vertexOnly = annihilator(Points{{3, 0}, {0, 3}}).annihilator;
    const auto full = annihilator(Points{{3, 0}, {2, 1}, {1, 2}, {0, 3}}).annihilator;
    CHECK(isSubideal(annihilator(A).annihilator, vertexOnly));
    CHECK(isSubideal(full, annihilator(A).annihilator));
    CHECK(full != annihilator(A).annihilator);
}

TEST_CASE("preconditions", "[residue]") {
    CHECK_THROWS_AS(enumerateEssentialSets(relativeA()), PreconditionError);
    CHECK_THROWS_AS(annihilator(lineA()), PreconditionError);
    CHECK_THROWS_AS(verifyChain(relativeA()), PreconditionError);
    CHECK_THROWS_AS(brianconSkodaWitness(Points{{3}, {5}}), PreconditionError);
    CHECK_THROWS_AS(annihilator(Points{{1, 0}, {1, 0}, {0, 1}}), InvalidInput);
}

TEST_CASE("Briançon–Skoda witness", "[residue]") {
    CHECK(brianconSkodaWitness(fivePointA()) == Exponent{15, 0});
    CHECK(brianconSkodaWitness(Points{{3, 0}, {0, 3}}) == Exponent{5, 0});
    CHECK(brianconSkodaWitness(Points{{1, 0}, {0, 1}}) == Exponent{1, 0});
    // b₁ is the smallest pure z₁ power even if larger ones are listed.
    CHECK(brianconSkodaWitness(Points{{9, 0}, {4, 0}, {0, 2}}) == Exponent{7, 0});

    const auto ann = annihilator(Points{{1, 0}, {0, 1}}).annihilator;
    const auto sq = integralClosureOfPower(Points{{1, 0}, {0, 1}}, 2);
    CHECK(contains(ann, {1, 0}));
    CHECK_FALSE(contains(sq, {1, 0}));
}

TEST_CASE("Briançon–Skoda chains", "[residue]") {
    const auto fivePoint = verifyChain(fivePointA());
    CHECK(fivePoint.mu == 2);
    CHECK(fivePoint.leftStrict);
    CHECK(fivePoint.rightStrict);
    CHECK(fivePoint.witness == Exponent{15, 0});
    CHECK(fivePoint.witnessInAnnihilator);
    CHECK(fivePoint.witnessOutsideClosure);

    const auto pure = verifyChain(Points{{4, 0, 0}, {0, 2, 0}, {0, 0, 3}});
    CHECK(pure.leftStrict);
    CHECK_FALSE(pure.rightStrict);
    CHECK(pure.annihilator == pure.ideal);

    const auto line = verifyChain(Points{{3}, {5}});
    CHECK(line.mu == 1);
    CHECK_FALSE(line.leftStrict);
    CHECK_FALSE(line.rightStrict);
    CHECK(line.ideal.generators() == Points{{3}});
    CHECK(line.annihilator == line.ideal);
    CHECK(line.closurePowerMu == line.ideal);
    CHECK_FALSE(line.witness.has_value());
}

TEST_CASE("property: annihilator invariants on random Artinian tuples", "[residue][property]") {
    Rng rng(31);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 3));
        const auto A = rng.artinian(n, static_cast<std::size_t>(rng.uniform(0, 4)), 8);
        const auto P = computeNewtonPolyhedron(A);
        const auto rep = annihilator(A);

        // Barycenter: α^B lies on n·Γ.
        for (const auto& e : rep.essentialSets) {
            const auto& f = P.facets[e.facetIndex];
            CHECK(checkedDot(f.normal, e.alpha.coords()) == static_cast<Int>(n) * f.offset);
            CHECK(e.determinant != 0);
            for (std::size_t i : e.indices) CHECK(f.contains(A[i]));
        }

        CHECK(rep.equalsIdeal == rep.completeIntersection);

        // Only the points on the diagram matter.
        Points onDiagram;
        for (std::size_t i = 0; i < A.size(); ++i)
            for (const auto& f : P.facets)
                if (f.compact && f.contains(A[i])) {
                    onDiagram.push_back(A[i]);
                    break;
                }
        CHECK(annihilator(onDiagram).annihilator == rep.annihilator);

        const auto interior = interiorPoints(A, P, 9);
        if (!interior.empty()) {
            Points bigger = A;
            const auto& x = interior[static_cast<std::size_t>(rng.uniform(0, static_cast<Int>(interior.size()) - 1))];
            if (std::find(A.begin(), A.end(), x) == A.end()) {
                bigger.push_back(x);
                CHECK(annihilator(bigger).annihilator == rep.annihilator);
            }
        }

        const auto extra = diagramPoints(A, P, 8);
        if (!extra.empty()) {
            Points bigger = A;
            bigger.push_back(extra[static_cast<std::size_t>(rng.uniform(0, static_cast<Int>(extra.size()) - 1))]);
            CHECK(isSubideal(annihilator(bigger).annihilator, rep.annihilator));
        }
    }
}

TEST_CASE("property: the annihilator depends only on the ideal", "[residue][property]") {
    Rng rng(32);
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 3));
        const auto A = rng.artinian(n, static_cast<std::size_t>(rng.uniform(0, 3)), 6);
        const auto I = minimalize(n, A);
        const auto P = computeNewtonPolyhedron(A);
        // Minimal generators plus redundant multiples that sit strictly inside Γ⁺.
        Points B = I.generators();
        for (const auto& g : I.generators()) {
            Exponent mult = g + Exponent::pure(n, static_cast<std::size_t>(rng.uniform(0, static_cast<Int>(n) - 1)), 1);
            bool strictlyInside = std::all_of(P.facets.begin(), P.facets.end(), [&](const Facet& f) {
                return checkedDot(f.normal, mult.coords()) > f.offset;
            });
            if (strictlyInside && std::find(B.begin(), B.end(), mult) == B.end()) B.push_back(mult);
        }
        CHECK(annihilator(B).annihilator == annihilator(I.generators()).annihilator);
    }
}
