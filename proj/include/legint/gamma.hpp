#pragma once

#include "legint/rational.hpp"

#include <stdexcept>
#include <vector>

namespace legint {

/// Exact number of the form n or n + 1/2, stored as twice its value.
/// These are the only points at which the Gamma calculus below is defined.
class HalfInteger {
public:
    HalfInteger() : twice_(0) {}
    HalfInteger(long n) : twice_(2 * BigInt(n)) {}
    HalfInteger(const BigInt& n) : twice_(2 * n) {}

    static HalfInteger from_twice(BigInt t) {
        HalfInteger h;
        h.twice_ = std::move(t);
        return h;
    }

    /// Converts an exact rational with denominator 1 or 2; anything else throws.
    explicit HalfInteger(const Rational& r) {
        const BigInt den = legint::denominator(r);
        if (den == 1)
            twice_ = 2 * legint::numerator(r);
        else if (den == 2)
            twice_ = legint::numerator(r);
        else
            throw std::domain_error("HalfInteger: denominator is neither 1 nor 2");
    }

    const BigInt& twice() const { return twice_; }
    bool is_integer() const { return twice_ % 2 == 0; }
    BigInt integer() const { return twice_ / 2; }  // pre: is_integer()
    Rational value() const { return Rational(twice_, BigInt(2)); }

    bool is_nonpositive_integer() const { return is_integer() && twice_ <= 0; }

    HalfInteger operator-() const { return from_twice(-twice_); }
    HalfInteger operator+(const HalfInteger& o) const { return from_twice(twice_ + o.twice_); }
    HalfInteger operator-(const HalfInteger& o) const { return from_twice(twice_ - o.twice_); }
    bool operator==(const HalfInteger& o) const { return twice_ == o.twice_; }
    bool operator!=(const HalfInteger& o) const { return twice_ != o.twice_; }
    bool operator<(const HalfInteger& o) const { return twice_ < o.twice_; }
    bool operator>(const HalfInteger& o) const { return twice_ > o.twice_; }
    bool operator<=(const HalfInteger& o) const { return twice_ <= o.twice_; }

private:
    BigInt twice_;
};

/// Value q * pi^(p/2) with q rational and p a signed integer, or a pole of
/// Gamma at a non-positive integer. Poles are values, not errors; a pole in
/// a denominator resolves to exact zero.
class GammaFactor {
public:
    static GammaFactor pole() {
        GammaFactor g;
        g.pole_ = true;
        return g;
    }

    static GammaFactor finite(Rational coeff, long pi_half_power = 0) {
        GammaFactor g;
        g.coeff_ = std::move(coeff);
        g.pi_half_ = (g.coeff_ == 0) ? 0 : pi_half_power;
        return g;
    }

    bool is_pole() const { return pole_; }
    bool is_zero() const { return !pole_ && coeff_ == 0; }

    const Rational& coeff() const {
        require_finite();
        return coeff_;
    }

    long pi_half_power() const {
        require_finite();
        return pi_half_;
    }

    /// Exact rational value; requires all pi^(1/2) factors to have cancelled.
    Rational as_rational() const {
        require_finite();
        if (pi_half_ != 0)
            throw std::domain_error("GammaFactor: residual pi^(1/2) factor");
        return coeff_;
    }

    friend GammaFactor operator*(const GammaFactor& a, const GammaFactor& b) {
        if (a.pole_ || b.pole_)
            throw std::domain_error("GammaFactor: product involving a pole");
        return finite(a.coeff_ * b.coeff_, a.pi_half_ + b.pi_half_);
    }

    friend GammaFactor operator/(const GammaFactor& a, const GammaFactor& b) {
        if (a.pole_)
            throw std::domain_error("indeterminate Gamma ratio");
        if (b.pole_) return finite(0);
        if (b.coeff_ == 0)
            throw std::domain_error("GammaFactor: division by zero");
        return finite(a.coeff_ / b.coeff_, a.pi_half_ - b.pi_half_);
    }

    friend bool operator==(const GammaFactor& a, const GammaFactor& b) {
        if (a.pole_ != b.pole_) return false;
        if (a.pole_) return true;
        return a.coeff_ == b.coeff_ && a.pi_half_ == b.pi_half_;
    }

private:
    void require_finite() const {
        if (pole_) throw std::domain_error("GammaFactor: pole has no finite value");
    }

    bool pole_ = false;
    Rational coeff_ = 0;
    long pi_half_ = 0;
};

inline Rational factorial(long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    BigInt result = 1;
    for (long i = 2; i <= n; ++i) result *= i;
    return Rational(result);
}

/// Rising factorial a(a+1)...(a+k-1); empty product for k = 0.
inline Rational pochhammer(const Rational& a, unsigned long k) {
    Rational result = 1;
    for (unsigned long i = 0; i < k; ++i) result *= a + BigInt(i);
    return result;
}

inline Rational pochhammer(const HalfInteger& a, unsigned long k) {
    return pochhammer(a.value(), k);
}

/// Gamma at an integer or half-integer point. Non-positive integers give a
/// Pole; half-odd arguments carry one power of pi^(1/2), reduced to
/// Gamma(1/2) = sqrt(pi) by the recursion Gamma(z) = (z-1) Gamma(z-1).
inline GammaFactor gamma_half(const HalfInteger& z) {
    if (z.is_integer()) {
        if (z.twice() <= 0) return GammaFactor::pole();
        BigInt n = z.integer();
        BigInt result = 1;
        for (BigInt i = 2; i < n; ++i) result *= i;
        return GammaFactor::finite(Rational(result));
    }
    Rational coeff = 1;
    if (z.twice() > 1) {
        // walk down: Gamma(z) = (z-1)(z-2)...(1/2) Gamma(1/2)
        for (BigInt t = z.twice() - 2; t >= 1; t -= 2) coeff *= Rational(t, BigInt(2));
    } else {
        // walk up: Gamma(z) = Gamma(1/2) / (z (z+1) ... (-1/2))
        for (BigInt t = z.twice(); t <= -1; t += 2) coeff /= Rational(t, BigInt(2));
    }
    return GammaFactor::finite(coeff, 1);
}

/// Product of numerator Gammas over denominator Gammas. Denominator poles
/// with a pole-free numerator give exact zero; a numerator pole is always an
/// error (no Pole/Pole limits are ever taken).
inline GammaFactor gamma_quotient(const std::vector<HalfInteger>& numerators,
                                  const std::vector<HalfInteger>& denominators) {
    for (const auto& z : numerators)
        if (z.is_nonpositive_integer())
            throw std::domain_error("indeterminate Gamma ratio");
    for (const auto& z : denominators)
        if (z.is_nonpositive_integer()) return GammaFactor::finite(0);
    GammaFactor result = GammaFactor::finite(1);
    for (const auto& z : numerators) result = result * gamma_half(z);
    for (const auto& z : denominators) result = result / gamma_half(z);
    return result;
}

}  // namespace legint
