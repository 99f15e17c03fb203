#include "legint/legendre.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace legint;

TEST_CASE("low-order coefficients") {
    CHECK(legendre_poly(0) == RationalPoly(std::vector<Rational>{1}));
    CHECK(legendre_poly(1) == RationalPoly(std::vector<Rational>{0, 1}));
    CHECK(legendre_poly(2) == RationalPoly(std::vector<Rational>{Rational(-1, 2), 0, Rational(3, 2)}));
}

TEST_CASE("structural invariants of P_l") {
    for (unsigned long l = 0; l <= 30; ++l) {
        const RationalPoly& p = legendre_poly(l);
        CHECK(p.degree() == static_cast<long>(l));
        // leading coefficient (2l)!/(2^l (l!)^2)
        const Rational lead = factorial(2 * static_cast<long>(l)) /
                              (pow2(static_cast<long>(l)) *
                               factorial(static_cast<long>(l)) *
                               factorial(static_cast<long>(l)));
        CHECK(p.coeff(l) == lead);
        // parity slots are exactly zero
        for (unsigned long i = 0; i <= l; ++i)
            if ((l - i) % 2 != 0) CHECK(p.coeff(i) == 0);
        CHECK(p.eval(1) == 1);
    }
}

TEST_CASE("evaluation") {
    CHECK(legendre_poly(3).eval(1) == 1);
    CHECK(legendre_poly(2).eval(0) == Rational(-1, 2));
    CHECK(legendre_poly(4).eval(-1) == 1);
}

TEST_CASE("parity P_l(-x) = (-1)^l P_l(x)") {
    const Rational samples[] = {0,          Rational(1, 3), Rational(-1, 3),
                                Rational(1, 2), Rational(2, 5), Rational(-7, 8),
                                1,          Rational(-9, 10), Rational(5, 7),
                                Rational(3, 11)};
    for (unsigned long l = 0; l <= 15; ++l) {
        const RationalPoly& p = legendre_poly(l);
        for (const Rational& x : samples) {
            const Rational v = p.eval(x);
            CHECK(p.eval(-x) == ((l % 2 != 0) ? -v : v));
        }
    }
}

TEST_CASE("orthogonality via exact moments") {
    for (unsigned long m = 0; m <= 15; ++m) {
        for (unsigned long l = 0; l <= 15; ++l) {
            const RationalPoly& pm = legendre_poly(m);
            Rational inner = 0;
            for (std::size_t i = 0; i < pm.coeffs().size(); ++i)
                inner += pm.coeff(i) * full_moment(i, l);
            CHECK(inner == (m == l ? Rational(2, BigInt(2 * l + 1)) : Rational(0)));
        }
    }
}

TEST_CASE("moment examples") {
    CHECK(moment_closed(1, 1).as_rational() == Rational(1, 3));
    CHECK(moment_closed(0, 0).as_rational() == 1);
    CHECK(moment_closed(0, 2).as_rational() == 0);  // denominator pole
    CHECK(moment_bruteforce(1, 1) == Rational(1, 3));
    CHECK(moment_bruteforce(2, 0) == Rational(1, 3));
    CHECK(moment_bruteforce(3, 3) == moment_closed(3, 3).as_rational());
}

TEST_CASE("closed moment formula equals brute force on the full grid") {
    for (unsigned long sigma = 0; sigma <= 30; ++sigma)
        for (unsigned long nu = 0; nu <= 30; ++nu)
            CHECK(moment_closed(sigma, nu).as_rational() ==
                  moment_bruteforce(sigma, nu));
}

TEST_CASE("full moments") {
    CHECK(full_moment(1, 0) == 0);
    CHECK(full_moment(0, 0) == 2);
    CHECK(full_moment(2, 2) == Rational(4, 15));
}
