#pragma once

// Closed-form families tied to the recursion: the Pochhammer case g = psi_0,
// the associated Laguerre case g = psi_1, and the Pi_n factor that carries
// the largest zero of Delta_n for psi_0.

#include <stdexcept>
#include <vector>

#include "darcais/int_polynomial.hpp"
#include "darcais/poly_sequence.hpp"
#include "darcais/polynomial.hpp"
#include "darcais/rational.hpp"

namespace darcais {

/// Rising factorial x(x+1)...(x+n-1) over Z.
inline IntPolynomial rising_factorial(long n) {
    IntPolynomial prod = IntPolynomial::constant(Integer(1));
    for (long k = 0; k < n; ++k)
        prod = prod * IntPolynomial(std::vector<Integer>{Integer(k), Integer(1)});
    return prod;
}

/// (1/n!) x(x+1)...(x+n-1); equals P_n for g = psi_0.
inline Polynomial pochhammer_poly(long n) {
    if (n < 0) throw std::invalid_argument("pochhammer_poly: negative n");
    return Polynomial::from_scaled(rising_factorial(n), factorial(static_cast<unsigned long>(n)));
}

/// L_n^(alpha)(x) = sum_k binom(n+alpha, n-k) (-x)^k / k!.
inline Polynomial laguerre_poly(long n, long alpha) {
    if (n < 0) throw std::invalid_argument("laguerre_poly: negative n");
    if (n + alpha < 0) throw std::invalid_argument("laguerre_poly: n + alpha must be >= 0");
    std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
    for (long k = 0; k <= n; ++k) {
        Integer num = binomial(static_cast<unsigned long>(n + alpha), static_cast<unsigned long>(n - k));
        if (k % 2 == 1) num = -num;
        coeffs[static_cast<std::size_t>(k)] = make_rational(num, factorial(static_cast<unsigned long>(k)));
    }
    return Polynomial(std::move(coeffs));
}

/// P_n^(psi_1)(x) == (x/n) L_{n-1}^(1)(-x), as exact polynomials.
inline bool laguerre_identity_check(const PolySequence& psi1_seq, long n) {
    if (n < 1) throw std::invalid_argument("laguerre_identity_check: n must be >= 1");
    Polynomial rhs = laguerre_poly(n - 1, 1).reflected().shifted_up(1) * make_rational(1, n);
    return psi1_seq.poly(n) == rhs;
}

inline bool laguerre_identity_check(long n) {
    return laguerre_identity_check(PolySequence(ArithFn::psi(1), n), n);
}

/// Pi_n(x) = prod_{k=0}^{n-1} ((x-1)/(k+1) + 1) - ((x-1)/(n+1) + 1)^n.
/// The product collapses to the Pochhammer form, so
/// Pi_n = (1/n!) prod (x+k)  -  (x+n)^n / (n+1)^n, and Pi_n(1) = 0.
inline Polynomial pi_n_poly(long n) {
    if (n < 1) throw std::invalid_argument("pi_n_poly: n must be >= 1");
    IntPolynomial power = IntPolynomial(std::vector<Integer>{Integer(n), Integer(1)})
                              .pow(static_cast<unsigned long>(n));
    return pochhammer_poly(n) -
           Polynomial::from_scaled(power, ipow(Integer(n + 1), static_cast<unsigned long>(n)));
}

/// x^(n+1)/n^(n+1) L_{n-1}^(1)(-x)^(n+1)  >  x^n/(n+1)^n L_n^(1)(-x)^n,
/// both sides exact; agrees with delta_sign_at(psi_1, n, x) == +1.
inline bool laguerre_root_inequality(long n, const Rational& x) {
    if (n < 1) throw std::invalid_argument("laguerre_root_inequality: n must be >= 1");
    Rational minus_x = -x;
    Rational lower = laguerre_poly(n - 1, 1).eval(minus_x);
    Rational upper = laguerre_poly(n, 1).eval(minus_x);
    Rational lhs = qpow(x * lower / Rational(n), static_cast<unsigned long>(n) + 1);
    Rational rhs = qpow(x * upper / Rational(n + 1), static_cast<unsigned long>(n));
    return cmp(lhs, rhs) > 0;
}

}  // namespace darcais
