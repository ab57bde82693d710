#pragma once

// Exact scalar layer: arbitrary-precision integers and canonical rationals
// on top of GMP. Every rational in the library is kept in canonical form
// (denominator > 0, gcd(|num|, den) = 1, zero as 0/1), which is exactly the
// invariant GMP's mpq functions maintain.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace darcais {

using Integer = mpz_class;
using Rational = mpq_class;

inline int sign_of(const Integer& z) { return mpz_sgn(z.get_mpz_t()); }
inline int sign_of(const Rational& q) { return mpq_sgn(q.get_mpq_t()); }

/// num/den with den != 0, canonicalized.
inline Rational make_rational(Integer num, Integer den) {
    if (sign_of(den) == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Integer ipow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational qpow(const Rational& base, unsigned long e) {
    Rational r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), e);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), e);
    return r;  // powers of a canonical rational are canonical
}

/// floor(v^(1/n)) for v >= 0; second member is true when the root is exact.
inline std::pair<Integer, bool> iroot(const Integer& v, unsigned long n) {
    if (sign_of(v) < 0) throw std::domain_error("iroot: negative radicand");
    Integer r;
    int exact = mpz_root(r.get_mpz_t(), v.get_mpz_t(), n);
    return {r, exact != 0};
}

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// Exact quotient; throws if b does not divide a.
inline Integer divexact(const Integer& a, const Integer& b) {
    if (sign_of(b) == 0) throw std::domain_error("divexact: division by zero");
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw std::domain_error("divexact: not divisible");
    Integer r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Accepts "p", "p/q", and decimal literals like "-1.25", "0.000001", "2e-3".
inline Rational parse_rational(std::string_view text) {
    auto fail = [&] { throw std::invalid_argument("parse_rational: bad literal '" + std::string(text) + "'"); };
    if (text.empty()) fail();

    std::string s(text);
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (num.empty() || den.empty()) fail();
        try {
            return make_rational(Integer(num, 10), Integer(den, 10));
        } catch (const std::invalid_argument&) {
            fail();
        }
    }

    // decimal form: [+-]digits[.digits][e[+-]digits]
    std::string mantissa;
    long exp10 = 0;
    size_t i = 0;
    if (s[i] == '+' || s[i] == '-') {
        if (s[i] == '-') mantissa += '-';
        ++i;
    }
    bool any_digit = false, seen_dot = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c >= '0' && c <= '9') {
            mantissa += c;
            any_digit = true;
            if (seen_dot) --exp10;
        } else if (c == '.' && !seen_dot) {
            seen_dot = true;
        } else if ((c == 'e' || c == 'E') && any_digit) {
            long e = 0;
            bool neg = false;
            ++i;
            if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = (s[i++] == '-');
            if (i >= s.size()) fail();
            for (; i < s.size(); ++i) {
                if (s[i] < '0' || s[i] > '9') fail();
                e = e * 10 + (s[i] - '0');
                if (e > 100000) fail();
            }
            exp10 += neg ? -e : e;
            break;
        } else {
            fail();
        }
    }
    if (!any_digit) fail();

    Integer num(mantissa, 10);
    Integer den(1);
    if (exp10 >= 0)
        num *= ipow(Integer(10), static_cast<unsigned long>(exp10));
    else
        den = ipow(Integer(10), static_cast<unsigned long>(-exp10));
    return make_rational(std::move(num), std::move(den));
}

}  // namespace darcais
