#pragma once

#include "legint/gamma.hpp"
#include "legint/legendre.hpp"
#include "legint/polynomial.hpp"
#include "legint/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace legint {

/// The target integral I(b,l) = integral over [-1,1]^2 of
/// (x-y)^(2b) P_l(x) P_l(y); b is half the power, l the Legendre order.
struct IntegralSpec {
    unsigned long b;
    unsigned long l;
};

namespace detail {

/// Series coefficient (l/2-b)_k ((l+1)/2-b)_k / (k! (l+3/2)_k) of the
/// transformed hypergeometric expansion.
inline Rational series_coeff(const IntegralSpec& s, unsigned long k) {
    const BigInt b(s.b), l(s.l);
    return pochhammer(Rational(l, BigInt(2)) - b, k) *
           pochhammer(Rational(l + 1, BigInt(2)) - b, k) /
           (factorial(static_cast<long>(k)) *
            pochhammer(Rational(2 * l + 3, BigInt(2)), k));
}

/// (-2b)_l 2^(l+1) / (l+1)_(l+1), the common prefactor of the reduced forms.
inline Rational prefactor(const IntegralSpec& s) {
    const BigInt b(s.b), l(s.l);
    return pochhammer(Rational(-2 * b), s.l) * pow2(static_cast<long>(s.l) + 1) /
           pochhammer(Rational(l + 1), s.l + 1);
}

}  // namespace detail

/// Inner integral over x of (x-y)^(2b) P_l(x), as an exact polynomial in y:
/// prefactor times y^(2b-l) times the terminating series in 1/y^2. The
/// Pochhammer (-2b)_l kills it for l > 2b.
inline RationalPoly inner_integral(const IntegralSpec& s) {
    if (s.l > 2 * s.b) return {};
    const Rational pref = detail::prefactor(s);
    const unsigned long K = (2 * s.b - s.l) / 2;
    std::vector<Rational> coeffs(2 * s.b - s.l + 1);
    for (unsigned long k = 0; k <= K; ++k)
        coeffs[2 * s.b - s.l - 2 * k] = pref * detail::series_coeff(s, k);
    return RationalPoly(std::move(coeffs));
}

/// Same inner integral by binomial expansion against monomial moments,
/// the independent route.
inline RationalPoly inner_integral_oracle(const IntegralSpec& s) {
    RationalPoly result;
    for (unsigned long j = 0; j <= 2 * s.b; ++j) {
        const Rational m = full_moment(j, s.l);
        if (m == 0) continue;
        Rational c = Rational(binomial(2 * s.b, j)) * m;
        if ((2 * s.b - j) % 2 != 0) c = -c;
        result = result + RationalPoly::monomial(std::move(c), 2 * s.b - j);
    }
    return result;
}

/// Individual k-terms of the moment-sum form of I(b,l): folded prefactor
/// times series coefficient times the half-line moment of y^(2b-2k-l) P_l.
inline std::vector<Rational> moment_sum_terms(const IntegralSpec& s) {
    if (s.l > 2 * s.b) return {};
    const Rational pref = 2 * detail::prefactor(s);
    const unsigned long K = (2 * s.b - s.l) / 2;
    std::vector<Rational> terms;
    terms.reserve(K + 1);
    for (unsigned long k = 0; k <= K; ++k)
        terms.push_back(pref * detail::series_coeff(s, k) *
                        moment_closed(2 * s.b - 2 * k - s.l, s.l).as_rational());
    return terms;
}

inline Rational moment_sum(const IntegralSpec& s) {
    Rational sum = 0;
    for (const Rational& t : moment_sum_terms(s)) sum += t;
    return sum;
}

/// The Gamma-quotient form of I(b,l): prefactor (-2b)_l 2^(2l-2b+1)/(l+1)_(l+1)
/// times sqrt(pi) (2b-l)! Gamma(l+3/2) (2b+1)! over
/// (b-l)! Gamma(b+3/2)^2 (b+l+1)!. The (b-l)! denominator pole produces the
/// exact zero for b < l <= 2b; the sqrt(pi) powers must fully cancel.
inline Rational gauss_form(const IntegralSpec& s) {
    if (s.l > 2 * s.b) return 0;
    const BigInt b(s.b), l(s.l);
    const Rational pref = pochhammer(Rational(-2 * b), s.l) *
                          pow2(2 * static_cast<long>(s.l) -
                               2 * static_cast<long>(s.b) + 1) /
                          pochhammer(Rational(l + 1), s.l + 1);
    const GammaFactor q = gamma_quotient(
        {HalfInteger(BigInt(2 * b - l + 1)), HalfInteger::from_twice(BigInt(2 * l + 3)),
         HalfInteger(BigInt(2 * b + 2))},
        {HalfInteger(BigInt(b - l + 1)), HalfInteger::from_twice(BigInt(2 * b + 3)),
         HalfInteger(BigInt(b + l + 2)), HalfInteger::from_twice(BigInt(2 * b + 3))});
    return (GammaFactor::finite(pref, 1) * q).as_rational();
}

/// Closed form: (-1)^l 2^(2b+2) (b!)^2 / ((2b+1) (b-l)! (b+l+1)!) for
/// b >= l, zero otherwise.
inline Rational closed_form(const IntegralSpec& s) {
    if (s.b < s.l) return 0;
    const long b = static_cast<long>(s.b), l = static_cast<long>(s.l);
    Rational value = pow2(2 * b + 2) * factorial(b) * factorial(b) /
                     (Rational(BigInt(2 * b + 1)) * factorial(b - l) *
                      factorial(b + l + 1));
    return (l % 2 != 0) ? -value : value;
}

/// Values of I(b,l) along every stage of the reduction; a consistent trace
/// has all stages equal to the final closed form.
struct DerivationTrace {
    IntegralSpec spec;
    std::vector<std::pair<std::string, Rational>> stage_values;
    Rational final;
    bool consistent;

    /// Labels of the first differing pair, empty when consistent.
    std::string mismatch() const {
        for (std::size_t i = 1; i < stage_values.size(); ++i)
            if (stage_values[i].second != stage_values[0].second)
                return stage_values[0].first + " vs " + stage_values[i].first;
        return {};
    }
};

inline DerivationTrace derive(const IntegralSpec& s) {
    // Stage A: integrate the inner polynomial against P_l by monomial moments.
    const RationalPoly inner = inner_integral(s);
    Rational stage_a = 0;
    for (std::size_t i = 0; i < inner.coeffs().size(); ++i)
        stage_a += inner.coeff(i) * full_moment(i, s.l);

    DerivationTrace trace;
    trace.spec = s;
    trace.stage_values.emplace_back("inner-integral", std::move(stage_a));
    trace.stage_values.emplace_back("moment-sum", moment_sum(s));
    trace.stage_values.emplace_back("gauss-gamma", gauss_form(s));
    trace.stage_values.emplace_back("closed-form", closed_form(s));
    trace.final = trace.stage_values.back().second;
    trace.consistent = true;
    for (const auto& [label, value] : trace.stage_values)
        if (value != trace.final) trace.consistent = false;
    return trace;
}

}  // namespace legint
