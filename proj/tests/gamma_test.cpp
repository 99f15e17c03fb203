#include "legint/gamma.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace legint;

namespace {

HalfInteger half(long twice) { return HalfInteger::from_twice(BigInt(twice)); }

// Independent factorial oracle by naked iterated multiplication.
BigInt iterated_product(long n) {
    BigInt p = 1;
    for (long i = 1; i <= n; ++i) p *= i;
    return p;
}

}  // namespace

TEST_CASE("factorial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == Rational(BigInt("2432902008176640000")));
    for (long n = 0; n <= 30; ++n) CHECK(factorial(n) == Rational(iterated_product(n)));
    CHECK_THROWS_AS(factorial(-1), std::domain_error);
}

TEST_CASE("pochhammer") {
    CHECK(pochhammer(Rational(-2), 2) == 2);
    CHECK(pochhammer(Rational(-2), 3) == 0);
    CHECK(pochhammer(Rational(1, 2), 2) == Rational(3, 4));
    CHECK(pochhammer(Rational(7), 0) == 1);
    CHECK(pochhammer(half(1), 2) == Rational(3, 4));
}

TEST_CASE("gamma at integers and half-integers") {
    CHECK(gamma_half(half(1)) == GammaFactor::finite(1, 1));              // sqrt(pi)
    CHECK(gamma_half(half(5)) == GammaFactor::finite(Rational(3, 4), 1)); // (3/2)(1/2)sqrt(pi)
    CHECK(gamma_half(half(0)).is_pole());
    CHECK(gamma_half(half(-4)).is_pole());
    CHECK(gamma_half(half(2)) == GammaFactor::finite(1));
    CHECK(gamma_half(half(10)) == GammaFactor::finite(24));
    // negative half-odd points are finite: Gamma(-1/2) = -2 sqrt(pi)
    CHECK(gamma_half(half(-1)) == GammaFactor::finite(-2, 1));
    CHECK(gamma_half(half(-3)) == GammaFactor::finite(Rational(4, 3), 1));
}

TEST_CASE("gamma recursion Gamma(z+1) = z Gamma(z)") {
    for (long t = -19; t <= 40; ++t) {
        const HalfInteger z = half(t);
        const GammaFactor g = gamma_half(z), g1 = gamma_half(z + HalfInteger(1));
        if (g.is_pole() || g1.is_pole() || z.value() == 0) continue;
        CHECK(g1 == GammaFactor::finite(z.value()) * g);
    }
}

TEST_CASE("gamma_quotient") {
    CHECK(gamma_quotient({half(6)}, {half(6)}) == GammaFactor::finite(1));
    CHECK(gamma_quotient({half(4)}, {half(0)}).is_zero());
    CHECK(gamma_quotient({half(7)}, {half(1)}) == GammaFactor::finite(Rational(15, 8)));
    CHECK_THROWS_AS(gamma_quotient({half(0)}, {half(2)}), std::domain_error);
    CHECK_THROWS_AS(gamma_quotient({half(-2)}, {half(-4)}), std::domain_error);
}

TEST_CASE("pochhammer reflection: (a)_k = (-1)^k Gamma(1-a)/Gamma(1-a-k)") {
    int instances = 0;
    for (long t = -20; t <= 20; ++t) {
        for (unsigned long k = 0; k <= 20; ++k) {
            const HalfInteger a = half(t);
            const HalfInteger one_minus_a = HalfInteger(1) - a;
            if (one_minus_a.is_nonpositive_integer()) continue;  // numerator pole
            const GammaFactor q = gamma_quotient({one_minus_a}, {one_minus_a - HalfInteger(BigInt(k))});
            Rational rhs = q.is_zero() ? Rational(0) : q.as_rational();
            if (k % 2 != 0) rhs = -rhs;
            CHECK(pochhammer(a, k) == rhs);
            ++instances;
        }
    }
    CHECK(instances > 400);
}

TEST_CASE("pochhammer duplication: (a)_2k = (a/2)_k ((a+1)/2)_k 4^k") {
    for (long t = -20; t <= 20; ++t) {
        const Rational a(t, 2);
        for (unsigned long k = 0; k <= 15; ++k) {
            CHECK(pochhammer(a, 2 * k) ==
                  pochhammer(a / 2, k) * pochhammer((a + 1) / 2, k) * pow2(2 * static_cast<long>(k)));
        }
    }
    // specialization a = -2n
    for (long n = 0; n <= 10; ++n)
        for (unsigned long k = 0; k <= 10; ++k)
            CHECK(pochhammer(Rational(-2 * n), 2 * k) ==
                  pochhammer(Rational(-n), k) * pochhammer(Rational(-2 * n + 1, 2), k) *
                      pow2(2 * static_cast<long>(k)));
}

TEST_CASE("gamma duplication: Gamma(2z)/Gamma(z) = 2^(2z-1)/sqrt(pi) Gamma(z+1/2)") {
    for (long t = 1; t <= 40; ++t) {  // z = t/2 in {1/2, 1, ..., 20}
        const HalfInteger z = half(t);
        const GammaFactor lhs = gamma_quotient({half(2 * t)}, {z});
        const GammaFactor rhs = GammaFactor::finite(pow2(t - 1), -1) * gamma_half(z + half(1));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("pochhammer and factorial rewrites used by the final reduction") {
    // (-2b)_l = (-1)^l Gamma(1+2b)/Gamma(1+2b-l) for 0 <= l <= 2b <= 40
    for (long b = 0; b <= 20; ++b) {
        for (long l = 0; l <= 2 * b; ++l) {
            Rational rhs = gamma_quotient({HalfInteger(1 + 2 * b)},
                                          {HalfInteger(1 + 2 * b - l)}).as_rational();
            if (l % 2 != 0) rhs = -rhs;
            CHECK(pochhammer(Rational(-2 * b), static_cast<unsigned long>(l)) == rhs);
        }
    }
    // (2b)!/Gamma(b+3/2) = 2^(2b+1) b!/(sqrt(pi)(2b+1))
    for (long b = 0; b <= 20; ++b) {
        const GammaFactor lhs =
            gamma_quotient({HalfInteger(2 * b + 1)}, {half(2 * b + 3)});
        const GammaFactor rhs = GammaFactor::finite(
            pow2(2 * b + 1) * factorial(b) / Rational(2 * b + 1), -1);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("pi powers must cancel before extracting a rational") {
    CHECK_THROWS_AS(gamma_half(half(1)).as_rational(), std::domain_error);
    CHECK(gamma_quotient({half(1)}, {half(1)}).as_rational() == 1);
    CHECK_THROWS_AS(GammaFactor::pole().as_rational(), std::domain_error);
}
