#pragma once

// Dense exact-rational univariate polynomials. Coefficients are stored in
// ascending degree order with no trailing zeros; every coefficient is a
// canonical rational. Heavy products run through IntPolynomial after
// clearing denominators.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "darcais/int_polynomial.hpp"
#include "darcais/rational.hpp"

namespace darcais {

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static Polynomial constant(Rational v) {
        Polynomial p;
        if (sign_of(v) != 0) p.c_.push_back(std::move(v));
        return p;
    }
    static Polynomial x() { return monomial(1); }
    static Polynomial monomial(std::size_t k, Rational v = Rational(1)) {
        Polynomial p;
        if (sign_of(v) != 0) {
            p.c_.assign(k + 1, Rational(0));
            p.c_[k] = std::move(v);
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return c_; }

    /// Coefficient of x^k (0 beyond the degree).
    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

    const Rational& leading() const {
        if (c_.empty()) throw std::domain_error("leading: zero polynomial");
        return c_.back();
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (cmp(a.c_[i], b.c_[i]) != 0) return false;
        return true;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial& operator+=(const Polynomial& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        normalize();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        normalize();
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) {
        for (auto& v : a.c_) v = -v;
        return a;
    }

    Polynomial& operator*=(const Rational& s) {
        if (sign_of(s) == 0) {
            c_.clear();
            return *this;
        }
        for (auto& v : c_) v *= s;
        return *this;
    }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        auto [ia, da] = a.cleared();
        auto [ib, db] = b.cleared();
        return from_scaled(ia * ib, da * db);
    }

    /// Multiply by x^k.
    Polynomial shifted_up(std::size_t k) const {
        if (is_zero()) return {};
        Polynomial r;
        r.c_.assign(c_.size() + k, Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
        return r;
    }

    Polynomial pow(unsigned long e) const {
        if (e == 0) return constant(Rational(1));
        if (is_zero()) return {};
        auto [ip, den] = cleared();
        return from_scaled(ip.pow(e), ipow(den, e));
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) {
            acc *= x;
            acc += c_[i];
        }
        return acc;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return {};
        Polynomial r;
        r.c_.resize(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            r.c_[i - 1] = c_[i] * Rational(static_cast<unsigned long>(i));
        r.normalize();
        return r;
    }

    /// b with b(x) = a(x + c).
    Polynomial shifted_arg(const Rational& shift) const {
        if (is_zero()) return {};
        // Horner: repeatedly multiply by (x + shift) and add the next coefficient.
        Polynomial acc = constant(c_.back());
        for (std::size_t i = c_.size() - 1; i-- > 0;) {
            acc = acc.shifted_up(1) + acc * shift;
            if (sign_of(c_[i]) != 0) acc += constant(c_[i]);
        }
        return acc;
    }

    /// a(-x).
    Polynomial reflected() const {
        Polynomial r = *this;
        for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
        return r;
    }

    /// Scale so the leading coefficient is 1.
    Polynomial monic() const {
        if (is_zero()) throw std::domain_error("monic: zero polynomial");
        Polynomial r = *this;
        Rational inv = Rational(1) / r.c_.back();
        for (auto& v : r.c_) v *= inv;
        return r;
    }

    /// (quotient, remainder) with *this = q*divisor + r, deg r < deg divisor.
    std::pair<Polynomial, Polynomial> divide(const Polynomial& divisor) const {
        if (divisor.is_zero()) throw std::domain_error("divide: zero divisor");
        Polynomial rem = *this, quot;
        const long dd = divisor.degree();
        if (rem.degree() >= dd) quot.c_.assign(static_cast<std::size_t>(rem.degree() - dd) + 1, Rational(0));
        while (!rem.is_zero() && rem.degree() >= dd) {
            const auto k = static_cast<std::size_t>(rem.degree() - dd);
            Rational f = rem.c_.back() / divisor.c_.back();
            quot.c_[k] = f;
            for (std::size_t i = 0; i < divisor.c_.size(); ++i) rem.c_[k + i] -= f * divisor.c_[i];
            rem.normalize();
        }
        quot.normalize();
        return {std::move(quot), std::move(rem)};
    }

    /// Integer image and positive denominator: *this == image / denominator.
    std::pair<IntPolynomial, Integer> cleared() const {
        Integer den(1);
        for (const auto& q : c_) den = lcm(den, q.get_den());
        std::vector<Integer> ic(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i)
            ic[i] = c_[i].get_num() * divexact(den, c_[i].get_den());
        return {IntPolynomial(std::move(ic)), std::move(den)};
    }

    static Polynomial from_scaled(const IntPolynomial& p, const Integer& den) {
        if (sign_of(den) == 0) throw std::domain_error("from_scaled: zero denominator");
        Polynomial r;
        r.c_.reserve(p.coefficients().size());
        for (const auto& v : p.coefficients()) r.c_.push_back(make_rational(v, den));
        r.normalize();
        return r;
    }

    static Polynomial from_integers(const IntPolynomial& p) { return from_scaled(p, Integer(1)); }

    /// Human-readable form, mostly for test diagnostics.
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (sign_of(c_[i]) == 0) continue;
            if (!out.empty()) out += " + ";
            out += to_string(c_[i]);
            if (i >= 1) out += "*x";
            if (i >= 2) out += "^" + std::to_string(i);
        }
        return out;
    }

private:
    std::vector<Rational> c_;

    void normalize() {
        while (!c_.empty() && sign_of(c_.back()) == 0) c_.pop_back();
    }
};

/// Monic gcd over Q, via a primitive pseudo-remainder sequence over Z.
inline Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("poly_gcd: gcd(0, 0)");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();

    IntPolynomial u = a.cleared().first.primitive_part();
    IntPolynomial v = b.cleared().first.primitive_part();
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        // pseudo-remainder of u by v
        IntPolynomial r = u;
        const long dv = v.degree();
        while (!r.is_zero() && r.degree() >= dv) {
            const auto k = static_cast<std::size_t>(r.degree() - dv);
            Integer lead_r = r.leading();
            r *= v.leading();
            r -= (v * lead_r).shifted_up(k);
        }
        u = std::move(v);
        v = r.primitive_part();
    }
    return Polynomial::from_integers(u).monic();
}

/// a / gcd(a, a'), normalized monic: same real roots as a, all simple.
inline Polynomial squarefree_part(const Polynomial& a) {
    if (a.is_zero()) throw std::domain_error("squarefree_part: zero polynomial");
    if (a.degree() == 0) return Polynomial::constant(Rational(1));
    Polynomial g = poly_gcd(a, a.derivative());
    auto [q, r] = a.divide(g);
    if (!r.is_zero()) throw std::logic_error("squarefree_part: non-exact division");
    return q.monic();
}

}  // namespace darcais
