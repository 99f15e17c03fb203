#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <string>

namespace legint {

using BigInt = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision fraction, always in canonical form
/// (denominator > 0, gcd(|num|, den) = 1).
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& r) {
    return boost::multiprecision::numerator(r);
}

inline BigInt denominator(const Rational& r) {
    return boost::multiprecision::denominator(r);
}

/// 2^e for any signed integer exponent.
inline Rational pow2(long e) {
    BigInt p = BigInt(1) << static_cast<unsigned long>(e < 0 ? -e : e);
    return e < 0 ? Rational(BigInt(1), p) : Rational(p);
}

/// base^e with signed integer exponent; base must be nonzero when e < 0.
inline Rational pow_rational(const Rational& base, long e) {
    if (e < 0) {
        if (base == 0)
            throw std::domain_error("pow_rational: zero base with negative exponent");
        return 1 / pow_rational(base, -e);
    }
    Rational result(1), b = base;
    unsigned long n = static_cast<unsigned long>(e);
    while (n != 0) {
        if (n & 1) result *= b;
        b *= b;
        n >>= 1;
    }
    return result;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (unsigned long i = 0; i < k; ++i) {
        result *= BigInt(n - i);
        result /= BigInt(i + 1);
    }
    return result;
}

/// "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << '/' << denominator(r);
    return os.str();
}

inline double to_double(const Rational& r) {
    return r.convert_to<double>();
}

}  // namespace legint
