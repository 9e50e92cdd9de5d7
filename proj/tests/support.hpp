#pragma once

// Shared fixtures, random generators and brute-force oracles for the test
// suites. Nothing here calls into the code paths it is used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "monores/exponent.hpp"

namespace monores::testing {

using Points = std::vector<Exponent>;

// Example ideals used throughout.
inline Points fivePointA() { return {{8, 0}, {6, 1}, {2, 3}, {1, 5}, {0, 6}}; }
inline Points relativeA() { return {{6, 1}, {3, 2}, {2, 4}}; }
inline Points lineA() { return {{1, 0, 1}, {0, 1, 1}}; }

/// Calls fn on every lattice point of [0, hi]^n.
inline void forEachInBox(std::size_t n, Int hi, const std::function<void(const Exponent&)>& fn) {
    std::vector<Int> x(n, 0);
    while (true) {
        fn(Exponent(x));
        std::size_t k = 0;
        while (k < n && x[k] == hi) x[k++] = 0;
        if (k == n) return;
        ++x[k];
    }
}

/// Membership in the staircase ∪(g + R₊ⁿ), straight from the definition.
inline bool inStaircase(const Points& gens, const Exponent& x) {
    return std::any_of(gens.begin(), gens.end(), [&](const Exponent& g) {
        for (std::size_t i = 0; i < x.dimension(); ++i)
            if (g[i] > x[i]) return false;
        return true;
    });
}

/// Minimal elements of the lattice points of an up-closed set cut to a box
/// [0, hi]^n: p is minimal iff no p - e_i is in the set.
inline Points minimalElements(const Points& pts) {
    std::set<Exponent> uniq(pts.begin(), pts.end());
    Points out;
    for (const auto& p : uniq) {
        bool minimal = true;
        std::vector<Int> c(p.coords().begin(), p.coords().end());
        for (std::size_t i = 0; i < c.size() && minimal; ++i) {
            if (c[i] == 0) continue;
            --c[i];
            minimal = !uniq.contains(Exponent(c));
            ++c[i];
        }
        if (minimal) out.push_back(p);
    }
    return out;
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    Int uniform(Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(gen_); }

    Exponent point(std::size_t n, Int hi) {
        std::vector<Int> c(n);
        for (auto& x : c) x = uniform(0, hi);
        return Exponent(c);
    }

    /// Distinct nonzero points; fewer than `count` when the box is too small.
    Points points(std::size_t n, std::size_t count, Int hi) {
        std::uint64_t available = 1;
        for (std::size_t i = 0; i < n; ++i) available *= static_cast<std::uint64_t>(hi + 1);
        count = std::min<std::size_t>(count, available - 1);
        std::set<Exponent> seen;
        Points out;
        while (out.size() < count) {
            Exponent p = point(n, hi);
            if (p.isZero() || !seen.insert(p).second) continue;
            out.push_back(p);
        }
        return out;
    }

    /// Distinct points containing a pure power of every variable, shuffled.
    Points artinian(std::size_t n, std::size_t extra, Int hi) {
        std::set<Exponent> seen;
        Points out;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Int> c(n, 0);
            c[i] = uniform(1, hi);
            out.emplace_back(c);
            seen.insert(out.back());
        }
        std::size_t guard = 0;
        while (out.size() < n + extra && guard++ < 1000) {
            Exponent p = point(n, hi);
            if (p.isZero() || !seen.insert(p).second) continue;
            out.push_back(p);
        }
        std::shuffle(out.begin(), out.end(), gen_);
        return out;
    }

    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

}  // namespace monores::testing
