#pragma once

#include <cstdint>
#include <map>

#include <boost/rational.hpp>

#include "monores/error.hpp"
#include "monores/exponent.hpp"

namespace monores {

using Rational = boost::rational<std::int64_t>;

/// Holomorphic polynomial with rational coefficients. Zero coefficients are
/// never stored, so the zero polynomial has no terms.
class Polynomial {
public:
    explicit Polynomial(std::size_t n) : dim_(n) {}

    static Polynomial monomial(const Exponent& e, Rational c = 1) {
        Polynomial p(e.dimension());
        p.addTerm(e, c);
        return p;
    }

    void addTerm(const Exponent& e, Rational c) {
        if (e.dimension() != dim_) throw DimensionMismatch(dim_, e.dimension());
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) it->second += c;
        if (it->second.numerator() == 0) terms_.erase(it);
    }

    std::size_t dimension() const noexcept { return dim_; }
    const std::map<Exponent, Rational>& terms() const noexcept { return terms_; }
    bool isZero() const noexcept { return terms_.empty(); }

    Rational coefficient(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) {
        if (a.dim_ != b.dim_) throw DimensionMismatch(a.dim_, b.dim_);
        for (const auto& [e, c] : b.terms_) a.addTerm(e, c);
        return a;
    }

private:
    std::size_t dim_;
    std::map<Exponent, Rational> terms_;
};

}  // namespace monores
