#pragma once

#include "legint/legendre.hpp"
#include "legint/pipeline.hpp"
#include "legint/rational.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace legint {

/// Exact value of the double integral by binomial expansion:
/// sum over j of C(2b,j) (-1)^(2b-j) full_moment(j,l) full_moment(2b-j,l).
inline Rational exact_double_integral(const IntegralSpec& s) {
    Rational result = 0;
    for (unsigned long j = 0; j <= 2 * s.b; ++j) {
        Rational term = Rational(binomial(2 * s.b, j)) * full_moment(j, s.l) *
                        full_moment(2 * s.b - j, s.l);
        if ((2 * s.b - j) % 2 != 0) term = -term;
        result += term;
    }
    return result;
}

/// Gauss-Legendre rule on [-1,1], nodes ascending.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

namespace detail {

inline double legendre_value(unsigned long l, double x) {
    double p0 = 1.0, p1 = x;
    if (l == 0) return p0;
    for (unsigned long n = 1; n < l; ++n) {
        const double p2 = ((2.0 * n + 1.0) * x * p1 - n * p0) / (n + 1.0);
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

inline double legendre_derivative(unsigned long l, double x) {
    // P_l'(x) = l (x P_l - P_{l-1}) / (x^2 - 1)
    return l * (x * legendre_value(l, x) - legendre_value(l - 1, x)) /
           (x * x - 1.0);
}

}  // namespace detail

/// Nodes are the roots of P_n, found by Newton iteration from the Chebyshev
/// initial guess cos(pi (i - 1/4)/(n + 1/2)); weights 2/((1-x^2) P_n'(x)^2).
inline QuadratureRule gauss_legendre_rule(unsigned long n) {
    if (n == 0) throw std::domain_error("gauss_legendre_rule: n must be positive");
    if (n == 1) return {{0.0}, {2.0}};
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double pi = std::acos(-1.0);
    for (unsigned long i = 1; i <= n; ++i) {
        double x = std::cos(pi * (i - 0.25) / (n + 0.5));
        bool converged = false;
        for (int iter = 0; iter < 100; ++iter) {
            const double dx =
                detail::legendre_value(n, x) / detail::legendre_derivative(n, x);
            x -= dx;
            if (std::abs(dx) <= 1e-15) {
                converged = true;
                break;
            }
        }
        if (!converged) throw std::runtime_error("quadrature construction failure");
        const double dp = detail::legendre_derivative(n, x);
        rule.nodes[n - i] = x;  // guesses come out descending
        rule.weights[n - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

enum class QuadForm { XY, Theta };

struct QuadResult {
    double value;
    bool sufficient_nodes;     // rule exact for the polynomial integrand
    double max_abs_sample;     // largest |integrand| seen at the nodes
};

/// Tensor-product quadrature of the double integral. The theta form maps
/// each node through x = cos(acos(node)), exercising the original angular
/// variables with the same rule.
inline QuadResult quad_double_integral(const IntegralSpec& s,
                                       const QuadratureRule& rule, QuadForm form) {
    const std::size_t n = rule.nodes.size();
    std::vector<double> xs(n), pl(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = (form == QuadForm::Theta) ? std::cos(std::acos(rule.nodes[i]))
                                          : rule.nodes[i];
        pl[i] = detail::legendre_value(s.l, xs[i]);
    }
    double sum = 0.0, max_abs = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double f =
                std::pow(xs[i] - xs[j], 2.0 * s.b) * pl[i] * pl[j];
            max_abs = std::max(max_abs, std::abs(f));
            sum += rule.weights[i] * rule.weights[j] * f;
        }
    }
    // integrand degree per variable is 2b + l; exact when 2n-1 >= 2b + l + 1
    const bool sufficient = 2 * n >= 2 * s.b + s.l + 2;
    return {sum, sufficient, max_abs};
}

}  // namespace legint
