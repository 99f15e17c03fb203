#pragma once

#include "legint/gamma.hpp"
#include "legint/rational.hpp"

#include <stdexcept>

namespace legint {

namespace detail {

inline bool is_nonpositive_integer(const Rational& r) {
    return denominator(r) == 1 && numerator(r) <= 0;
}

}  // namespace detail

/// Parameter set of a terminating Gauss series 2F1(a,b;c;z). Construction
/// rejects non-terminating parameters and lower parameters whose Pochhammer
/// vanishes within the truncation range.
struct Hyp2F1Spec {
    Rational a, b, c;
    unsigned long termination_index;

    static Hyp2F1Spec make(Rational a, Rational b, Rational c) {
        bool terminates = false;
        BigInt k_min = 0;
        for (const Rational* p : {&a, &b}) {
            if (detail::is_nonpositive_integer(*p)) {
                BigInt k = -numerator(*p);
                if (!terminates || k < k_min) k_min = k;
                terminates = true;
            }
        }
        if (!terminates)
            throw std::domain_error("series does not terminate");
        // (c)_k vanishes for some k <= K iff c is in {0,-1,...,-(K-1)}
        if (detail::is_nonpositive_integer(c) && -numerator(c) < k_min)
            throw std::domain_error("parameter pole");
        return {std::move(a), std::move(b), std::move(c),
                k_min.convert_to<unsigned long>()};
    }
};

/// Exact sum of the terminating series, accumulated by the running term
/// ratio term_{k+1} = term_k (a+k)(b+k) z / ((k+1)(c+k)).
inline Rational hyp2f1_terminating(const Hyp2F1Spec& spec, const Rational& z) {
    Rational sum = 1, term = 1;
    for (unsigned long k = 0; k < spec.termination_index; ++k) {
        const BigInt kk(k);
        term *= (spec.a + kk) * (spec.b + kk) * z;
        term /= Rational(BigInt(k + 1)) * (spec.c + kk);
        sum += term;
    }
    return sum;
}

/// Gauss summation at unit argument:
/// 2F1(a,b;c;1) = Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b)).
inline GammaFactor gauss_unit(const Rational& a, const Rational& b, const Rational& c) {
    return gamma_quotient({HalfInteger(c), HalfInteger(c - a - b)},
                          {HalfInteger(c - a), HalfInteger(c - b)});
}

/// Checks the quadratic transformation
/// 2F1(a,b;2b;z) = (1-z/2)^(-a) 2F1(a/2,(1+a)/2; b+1/2; (z/(2-z))^2)
/// for non-positive even integer a, where both sides are exact rationals.
inline bool quadratic_transform_check(const Rational& a, const Rational& b_param,
                                      const Rational& z) {
    if (!detail::is_nonpositive_integer(a) || numerator(a) % 2 != 0)
        throw std::domain_error("quadratic transform requires non-positive even integer a");
    if (z == 2)
        throw std::domain_error("transformation singularity");
    const Rational lhs =
        hyp2f1_terminating(Hyp2F1Spec::make(a, b_param, 2 * b_param), z);
    const Rational w = z / (2 - z);
    const long neg_a = (-numerator(a)).convert_to<long>();
    const Rational rhs =
        pow_rational(1 - z / 2, neg_a) *
        hyp2f1_terminating(
            Hyp2F1Spec::make(a / 2, (1 + a) / 2, b_param + Rational(1, 2)), w * w);
    return lhs == rhs;
}

}  // namespace legint
