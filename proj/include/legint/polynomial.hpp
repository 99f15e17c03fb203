#pragma once

#include "legint/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace legint {

/// Dense exact univariate polynomial; coeffs_[i] multiplies x^i.
/// The highest stored coefficient is nonzero unless the polynomial is zero
/// (empty coefficient vector).
class RationalPoly {
public:
    RationalPoly() = default;

    explicit RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        trim();
    }

    static RationalPoly monomial(Rational coeff, std::size_t power) {
        if (coeff == 0) return {};
        std::vector<Rational> c(power + 1);
        c[power] = std::move(coeff);
        return RationalPoly(std::move(c));
    }

    bool is_zero() const { return coeffs_.empty(); }

    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    const Rational& coeff(std::size_t i) const {
        static const Rational zero = 0;
        return i < coeffs_.size() ? coeffs_[i] : zero;
    }

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational eval(const Rational& x) const {
        Rational result = 0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) result = result * x + coeffs_[i];
        return result;
    }

    friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
        std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
        return RationalPoly(std::move(c));
    }

    friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) {
        std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
        return RationalPoly(std::move(c));
    }

    friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return RationalPoly(std::move(c));
    }

    friend RationalPoly operator*(const Rational& s, const RationalPoly& p) {
        if (s == 0) return {};
        std::vector<Rational> c = p.coeffs_;
        for (auto& v : c) v *= s;
        return RationalPoly(std::move(c));
    }

    friend bool operator==(const RationalPoly& a, const RationalPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

}  // namespace legint
