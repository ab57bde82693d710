#pragma once

// The generalized polynomial sequence P_n(x), defined by
//   P_0 = 1,   P_n(x) = (x/n) * sum_{k=1}^{n} g(k) P_{n-k}(x).
//
// For integer-valued g (every registered family), n! * P_n has integer
// coefficients, so generation runs entirely over Z on the scaled polynomials
//   A_n := n! * P_n,   A_n = x * sum_{k=1}^{n} g(k) (n-1)!/(n-k)! A_{n-k}.
// Exact rational coefficients are exposed at the API boundary.
//
// The sequence is immutable after construction and safe to share across
// threads.

#include <stdexcept>
#include <utility>
#include <vector>

#include "darcais/arith_function.hpp"
#include "darcais/int_polynomial.hpp"
#include "darcais/polynomial.hpp"
#include "darcais/rational.hpp"

namespace darcais {

class PolySequence {
public:
    PolySequence(ArithFn g, long max_n) : g_(std::move(g)) {
        if (max_n < 0) throw std::invalid_argument("PolySequence: negative bound");
        g_.precompute(max_n);
        scaled_.reserve(static_cast<std::size_t>(max_n) + 1);
        scaled_.push_back(IntPolynomial::constant(Integer(1)));
        for (long n = 1; n <= max_n; ++n) {
            std::vector<Integer> acc(static_cast<std::size_t>(n), Integer(0));
            Integer falling(1);  // (n-1)!/(n-k)! for the current k
            for (long k = 1; k <= n; ++k) {
                Integer w = g_.value(k) * falling;
                const auto& prev = scaled_[static_cast<std::size_t>(n - k)].coefficients();
                for (std::size_t i = 0; i < prev.size(); ++i)
                    mpz_addmul(acc[i].get_mpz_t(), w.get_mpz_t(), prev[i].get_mpz_t());
                falling *= Integer(n - k);
            }
            scaled_.push_back(IntPolynomial(std::move(acc)).shifted_up(1));
        }
        polys_.reserve(scaled_.size());
        for (long n = 0; n <= max_n; ++n)
            polys_.push_back(Polynomial::from_scaled(scaled_[static_cast<std::size_t>(n)],
                                                     factorial(static_cast<unsigned long>(n))));
    }

    const ArithFn& fn() const { return g_; }
    long max_index() const { return static_cast<long>(polys_.size()) - 1; }

    /// P_n, exact rational coefficients.
    const Polynomial& poly(long n) const {
        check_index(n);
        return polys_[static_cast<std::size_t>(n)];
    }

    /// n! * P_n over Z (internal fast path, exposed for the Delta machinery).
    const IntPolynomial& scaled(long n) const {
        check_index(n);
        return scaled_[static_cast<std::size_t>(n)];
    }

    /// P_n(x), evaluated on the scaled integer form.
    Rational value(long n, const Rational& x) const {
        check_index(n);
        Rational v = scaled_[static_cast<std::size_t>(n)].eval(x);
        return v / Rational(factorial(static_cast<unsigned long>(n)));
    }

    /// [P_0(x), ..., P_N(x)].
    std::vector<Rational> value_table(const Rational& x) const {
        std::vector<Rational> out;
        out.reserve(polys_.size());
        for (long n = 0; n <= max_index(); ++n) out.push_back(value(n, x));
        return out;
    }

private:
    ArithFn g_;
    std::vector<IntPolynomial> scaled_;
    std::vector<Polynomial> polys_;

    void check_index(long n) const {
        if (n < 0 || n > max_index()) throw std::out_of_range("PolySequence: index out of range");
    }
};

inline PolySequence generate(ArithFn g, long max_n) { return PolySequence(std::move(g), max_n); }

}  // namespace darcais
