#pragma once

// Dense univariate polynomials over the integers. This is the arithmetic
// engine behind the rational Polynomial type: products, powers and the
// transforms used by Descartes root counting all run here, where GMP integer
// operations are much cheaper than canonicalizing rationals coefficient by
// coefficient.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "darcais/rational.hpp"

namespace darcais {

class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static IntPolynomial constant(Integer v) {
        IntPolynomial p;
        if (sign_of(v) != 0) p.c_.push_back(std::move(v));
        return p;
    }
    static IntPolynomial monomial(std::size_t k, Integer v = Integer(1)) {
        IntPolynomial p;
        if (sign_of(v) != 0) {
            p.c_.assign(k + 1, Integer(0));
            p.c_[k] = std::move(v);
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Integer>& coefficients() const { return c_; }
    const Integer& operator[](std::size_t i) const { return c_[i]; }
    Integer& mutable_coeff(std::size_t i) { return c_[i]; }

    const Integer& leading() const {
        if (c_.empty()) throw std::domain_error("leading: zero polynomial");
        return c_.back();
    }

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

    IntPolynomial& operator+=(const IntPolynomial& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Integer(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        normalize();
        return *this;
    }
    IntPolynomial& operator-=(const IntPolynomial& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Integer(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        normalize();
        return *this;
    }
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator-(IntPolynomial a) {
        for (auto& v : a.c_) v = -v;
        return a;
    }

    IntPolynomial& operator*=(const Integer& s) {
        if (sign_of(s) == 0) {
            c_.clear();
            return *this;
        }
        for (auto& v : c_) v *= s;
        return *this;
    }
    friend IntPolynomial operator*(IntPolynomial a, const Integer& s) { return a *= s; }
    friend IntPolynomial operator*(const Integer& s, IntPolynomial a) { return a *= s; }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        return mul(a, b);
    }

    /// Multiply by x^k.
    IntPolynomial shifted_up(std::size_t k) const {
        if (is_zero()) return {};
        IntPolynomial r;
        r.c_.assign(c_.size() + k, Integer(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
        return r;
    }

    /// Number of leading zero coefficients, i.e. the multiplicity of the root 0.
    std::size_t trailing_zero_count() const {
        std::size_t m = 0;
        while (m < c_.size() && sign_of(c_[m]) == 0) ++m;
        return m;
    }

    /// Divide by x^k; requires the k lowest coefficients to vanish.
    IntPolynomial shifted_down(std::size_t k) const {
        if (trailing_zero_count() < std::min(k, c_.size()) && !is_zero())
            throw std::domain_error("shifted_down: nonzero low coefficients");
        if (c_.size() <= k) return {};
        IntPolynomial r;
        r.c_.assign(c_.begin() + static_cast<long>(k), c_.end());
        return r;
    }

    Integer eval(const Integer& x) const {
        Integer acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) {
            acc *= x;
            acc += c_[i];
        }
        return acc;
    }

    /// Exact value at num/den scaled by den^degree: sum c_i num^i den^(deg-i).
    /// The sign of the result equals the sign of p(num/den) when den > 0.
    Integer eval_scaled(const Integer& num, const Integer& den) const {
        if (is_zero()) return Integer(0);
        Integer acc(0);
        Integer dpow(1);
        // Horner from the top; multiply in one den per level for the lower terms.
        for (std::size_t i = c_.size(); i-- > 0;) {
            acc *= num;
            acc += c_[i] * dpow;
            if (i > 0) dpow *= den;
        }
        return acc;
    }

    Rational eval(const Rational& x) const {
        Integer scaled = eval_scaled(x.get_num(), x.get_den());
        return make_rational(std::move(scaled), ipow(x.get_den(), static_cast<unsigned long>(std::max<long>(degree(), 0))));
    }

    IntPolynomial derivative() const {
        if (c_.size() <= 1) return {};
        IntPolynomial r;
        r.c_.resize(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * Integer(static_cast<unsigned long>(i));
        r.normalize();
        return r;
    }

    /// p(x + 1), in place. Classic Pascal-triangle update, O(deg^2) additions.
    void taylor_shift_1() {
        const std::size_t n = c_.size();
        if (n < 2) return;
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t j = n - 1; j-- > i;) c_[j] += c_[j + 1];
        normalize();
    }

    /// x^deg * p(1/x).
    IntPolynomial reversed() const {
        IntPolynomial r;
        r.c_.assign(c_.rbegin(), c_.rend());
        r.normalize();
        return r;
    }

    /// p(-x).
    IntPolynomial reflected() const {
        IntPolynomial r = *this;
        for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
        return r;
    }

    /// gcd of all coefficients (non-negative); 0 for the zero polynomial.
    Integer content() const {
        Integer g(0);
        for (const auto& v : c_) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
            if (g == 1) break;
        }
        return g;
    }

    /// Divide out the content; leading coefficient keeps its sign.
    IntPolynomial primitive_part() const {
        if (is_zero()) return {};
        Integer g = content();
        if (g == 1) return *this;
        IntPolynomial r = *this;
        for (auto& v : r.c_) v = divexact(v, g);
        return r;
    }

    IntPolynomial pow(unsigned long e) const {
        IntPolynomial result = IntPolynomial::constant(Integer(1));
        if (e == 0) return result;
        IntPolynomial base = *this;
        while (true) {
            if (e & 1UL) result = mul(result, base);
            e >>= 1UL;
            if (e == 0) break;
            base = mul(base, base);
        }
        return result;
    }

    /// Strict sign alternations over the nonzero coefficients.
    int sign_variations() const {
        int v = 0, last = 0;
        for (const auto& coeff : c_) {
            int s = sign_of(coeff);
            if (s == 0) continue;
            if (last != 0 && s != last) ++v;
            last = s;
        }
        return v;
    }

private:
    std::vector<Integer> c_;  // ascending degree, no trailing zeros

    void normalize() {
        while (!c_.empty() && sign_of(c_.back()) == 0) c_.pop_back();
    }

    static IntPolynomial mul(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (std::min(a.c_.size(), b.c_.size()) >= kKaratsubaThreshold) return karatsuba(a, b);
        return school(a, b);
    }

    static IntPolynomial school(const IntPolynomial& a, const IntPolynomial& b) {
        IntPolynomial r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Integer(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (sign_of(a.c_[i]) == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                mpz_addmul(r.c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
        }
        r.normalize();
        return r;
    }

    static constexpr std::size_t kKaratsubaThreshold = 40;

    static IntPolynomial karatsuba(const IntPolynomial& a, const IntPolynomial& b) {
        const std::size_t half = (std::max(a.c_.size(), b.c_.size()) + 1) / 2;
        auto split = [half](const IntPolynomial& p) {
            IntPolynomial lo, hi;
            const std::size_t cut = std::min(half, p.c_.size());
            lo.c_.assign(p.c_.begin(), p.c_.begin() + static_cast<long>(cut));
            lo.normalize();
            if (p.c_.size() > half) {
                hi.c_.assign(p.c_.begin() + static_cast<long>(half), p.c_.end());
                hi.normalize();
            }
            return std::pair{std::move(lo), std::move(hi)};
        };
        auto [a0, a1] = split(a);
        auto [b0, b1] = split(b);
        IntPolynomial z0 = mul(a0, b0);
        IntPolynomial z2 = mul(a1, b1);
        IntPolynomial z1 = mul(a0 + a1, b0 + b1);
        z1 -= z0;
        z1 -= z2;
        IntPolynomial r = std::move(z0);
        r += z1.shifted_up(half);
        r += z2.shifted_up(2 * half);
        return r;
    }
};

}  // namespace darcais
