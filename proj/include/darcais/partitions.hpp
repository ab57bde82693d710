#pragma once

// Partition enumeration, hook lengths, and the hook-length product expansion
//   sum_{lambda |- n} prod_{h in H(lambda)} (1 + (x-1)/h^2),
// which must reproduce P_n for g = sigma_1 exactly. This is the independent
// oracle for the recursion: it never touches PolySequence.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "darcais/polynomial.hpp"
#include "darcais/rational.hpp"

namespace darcais {

using Partition = std::vector<int>;

inline constexpr int kPartitionEnumerationBound = 40;
inline constexpr int kHookOracleBound = 15;

/// All partitions of n in lexicographically decreasing order: (n), ..., (1,...,1).
inline std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: negative n");
    if (n > kPartitionEnumerationBound)
        throw std::invalid_argument("enumerate_partitions: n exceeds enumeration bound");
    std::vector<Partition> out;
    Partition current;
    // Parts are chosen largest-first, which yields decreasing lex order.
    auto descend = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            self(self, remaining - part, part);
            current.pop_back();
        }
    };
    descend(descend, n, n);
    return out;
}

inline Partition conjugate(const Partition& lambda) {
    if (lambda.empty()) return {};
    Partition conj(static_cast<std::size_t>(lambda.front()), 0);
    for (int part : lambda)
        for (int j = 0; j < part; ++j) ++conj[static_cast<std::size_t>(j)];
    return conj;
}

/// Hook lengths of all cells (arm + leg + 1 via the conjugate), sorted descending.
inline std::vector<int> hook_lengths(const Partition& lambda) {
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] < 1) throw std::invalid_argument("hook_lengths: parts must be positive");
        if (i > 0 && lambda[i] > lambda[i - 1])
            throw std::invalid_argument("hook_lengths: parts must be non-increasing");
    }
    Partition conj = conjugate(lambda);
    std::vector<int> hooks;
    for (std::size_t i = 0; i < lambda.size(); ++i)
        for (int j = 0; j < lambda[i]; ++j)
            hooks.push_back((lambda[i] - j) + (conj[static_cast<std::size_t>(j)] - static_cast<int>(i)) - 1);
    std::sort(hooks.rbegin(), hooks.rend());
    return hooks;
}

/// sum over lambda |- n of prod_h (x + h^2 - 1)/h^2, as an exact Polynomial.
inline Polynomial nekrasov_okounkov_oracle(int n) {
    if (n < 0) throw std::invalid_argument("nekrasov_okounkov_oracle: negative n");
    if (n > kHookOracleBound)
        throw std::invalid_argument("nekrasov_okounkov_oracle: n exceeds oracle bound");
    Polynomial total;
    for (const Partition& lambda : enumerate_partitions(n)) {
        IntPolynomial prod = IntPolynomial::constant(Integer(1));
        Integer den(1);
        for (int h : hook_lengths(lambda)) {
            Integer h2 = Integer(h) * Integer(h);
            prod = prod * IntPolynomial(std::vector<Integer>{h2 - 1, Integer(1)});
            den *= h2;
        }
        total += Polynomial::from_scaled(prod, den);
    }
    return total;
}

}  // namespace darcais
