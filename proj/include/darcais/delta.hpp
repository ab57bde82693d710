#pragma once

// Delta_n(x) = P_n(x)^(n+1) - P_{n+1}(x)^n, in two regimes:
//  - full expansion (needed for root isolation; degree n(n+1)), computed
//    over Z on the scaled polynomials A_n = n! P_n:
//      (n!)^(n+1) (n+1)^n * Delta_n = (n+1)^n A_n^(n+1) - n! A_{n+1}^n
//  - exact sign at a single rational point without expansion, which stays
//    cheap far beyond the degrees where expansion is practical.

#include <stdexcept>
#include <utility>

#include "darcais/arith_function.hpp"
#include "darcais/int_polynomial.hpp"
#include "darcais/poly_sequence.hpp"
#include "darcais/polynomial.hpp"
#include "darcais/rational.hpp"

namespace darcais {

struct DeltaPolynomial {
    long n = 0;
    ArithFn g = ArithFn::sigma(1);
    /// positive_scale * Delta_n over Z; sign and roots agree with Delta_n.
    IntPolynomial scaled;
    Integer positive_scale;
    /// exact rational expansion
    Polynomial poly;
};

inline DeltaPolynomial build_delta(const PolySequence& seq, long n) {
    if (n < 1) throw std::invalid_argument("build_delta: n must be >= 1");
    if (n + 1 > seq.max_index()) throw std::out_of_range("build_delta: sequence too short");

    const auto un = static_cast<unsigned long>(n);
    Integer pow_n1 = ipow(Integer(n + 1), un);  // (n+1)^n
    Integer fact_n = factorial(un);

    IntPolynomial expanded = pow_n1 * seq.scaled(n).pow(un + 1) - fact_n * seq.scaled(n + 1).pow(un);
    Integer scale = ipow(fact_n, un + 1) * pow_n1;

    DeltaPolynomial d;
    d.n = n;
    d.g = seq.fn();
    d.poly = Polynomial::from_scaled(expanded, scale);
    d.scaled = std::move(expanded);
    d.positive_scale = std::move(scale);
    return d;
}

/// Sign of Delta_n(x), exact, without expanding the polynomial.
inline int delta_sign_at(const PolySequence& seq, long n, const Rational& x) {
    if (n < 1) throw std::invalid_argument("delta_sign_at: n must be >= 1");
    if (n + 1 > seq.max_index()) throw std::out_of_range("delta_sign_at: sequence too short");
    Rational lhs = qpow(seq.value(n, x), static_cast<unsigned long>(n) + 1);
    Rational rhs = qpow(seq.value(n + 1, x), static_cast<unsigned long>(n));
    int c = cmp(lhs, rhs);
    return (c > 0) - (c < 0);
}

/// Delta_1 in closed form, given g(2): (x/2)(x - g2).
inline Polynomial closed_delta1_values(const Integer& g2) {
    return Polynomial({Rational(0), make_rational(-g2, Integer(2)), make_rational(1, 2)});
}

inline Polynomial closed_delta1(const ArithFn& g) { return closed_delta1_values(g.value(2)); }

/// Delta_2 in closed form, given g(2) and g(3):
/// (x^2/72)(7x^4 + 15 g2 x^3 + (9 g2^2 - 8 g3) x^2 + (9 g2^3 - 24 g3 g2) x - 8 g3^2).
inline Polynomial closed_delta2_values(const Integer& g2, const Integer& g3) {
    Integer den(72);
    std::vector<Rational> coeffs(7, Rational(0));
    coeffs[2] = make_rational(Integer(-8) * g3 * g3, den);
    coeffs[3] = make_rational(Integer(9) * g2 * g2 * g2 - Integer(24) * g3 * g2, den);
    coeffs[4] = make_rational(Integer(9) * g2 * g2 - Integer(8) * g3, den);
    coeffs[5] = make_rational(Integer(15) * g2, den);
    coeffs[6] = make_rational(Integer(7), den);
    return Polynomial(std::move(coeffs));
}

inline Polynomial closed_delta2(const ArithFn& g) {
    return closed_delta2_values(g.value(2), g.value(3));
}

/// Lemma criterion: Delta_2 >= 0 on [g(2), inf) iff g(3) <= g(2)^2.
inline bool delta2_criterion(const ArithFn& g) {
    Integer g2 = g.value(2);
    return g.value(3) <= g2 * g2;
}

}  // namespace darcais
