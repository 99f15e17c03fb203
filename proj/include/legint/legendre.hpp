#pragma once

#include "legint/gamma.hpp"
#include "legint/polynomial.hpp"
#include "legint/rational.hpp"

#include <mutex>
#include <vector>

namespace legint {

/// Exact coefficients of the Legendre polynomial P_l, built with the
/// three-term recurrence (n+1) P_{n+1} = (2n+1) x P_n - n P_{n-1}.
/// The table is memoized; the fill is idempotent and guarded.
inline const RationalPoly& legendre_poly(unsigned long l) {
    static std::vector<RationalPoly> table;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    if (table.empty()) {
        table.push_back(RationalPoly::monomial(1, 0));
        table.push_back(RationalPoly::monomial(1, 1));
    }
    const RationalPoly x = RationalPoly::monomial(1, 1);
    while (table.size() <= l) {
        const unsigned long n = table.size() - 1;
        RationalPoly next = Rational(1, BigInt(n + 1)) *
            (Rational(BigInt(2 * n + 1)) * (x * table[n]) -
             Rational(BigInt(n)) * table[n - 1]);
        table.push_back(std::move(next));
    }
    return table[l];
}

/// Closed form of the half-line moment: integral over [0,1] of x^sigma P_nu,
/// equal to sqrt(pi) 2^(-sigma-1) Gamma(1+sigma) /
/// (Gamma(1+(sigma-nu)/2) Gamma((sigma+nu+3)/2)). The sqrt(pi) factors
/// always cancel; a denominator pole (sigma < nu with even difference)
/// yields exact zero.
inline GammaFactor moment_closed(unsigned long sigma, unsigned long nu) {
    const BigInt s(sigma), n(nu);
    const HalfInteger d1 = HalfInteger::from_twice(BigInt(2 + s - n));  // 1 + (sigma-nu)/2
    const HalfInteger d2 = HalfInteger::from_twice(BigInt(s + n + 3));  // (sigma+nu+3)/2
    GammaFactor q = gamma_quotient({HalfInteger(BigInt(s + 1))}, {d1, d2});
    return GammaFactor::finite(pow2(-static_cast<long>(sigma) - 1), 1) * q;
}

/// Same moment by coefficient-wise integration of P_nu, the independent route.
inline Rational moment_bruteforce(unsigned long sigma, unsigned long nu) {
    const RationalPoly& p = legendre_poly(nu);
    Rational result = 0;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        result += p.coeff(i) / Rational(BigInt(sigma + i + 1));
    return result;
}

/// Integral over [-1,1] of x^j P_l: zero for odd j-l, twice the half-line
/// moment otherwise (even integrand).
inline Rational full_moment(unsigned long j, unsigned long l) {
    if ((j + l) % 2 != 0) return 0;
    return 2 * moment_bruteforce(j, l);
}

}  // namespace legint
