#pragma once

// Exact integer counting sequences and the root/quotient machinery on them.
// Every monotonicity and log-concavity decision is an integer comparison
// after cross-multiplication; decimals only appear in display strings.
//
// The value recursion a(n) = (1/n) sum_{k=1}^n w(k) a(n-k), a(0) = 1 is
// shared by all families (Wohlfahrt's recursion; for g = sigma_1 it is
// Euler's recursion for p(n)). The division by n must always be exact for
// the registered families, so a remainder is reported as an error rather
// than truncated.

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "darcais/arith_function.hpp"
#include "darcais/rational.hpp"

namespace darcais {

struct IntegerSequence {
    std::string name;
    std::vector<Integer> values;  // indexed from 0; values[0] = 1 for all families

    long max_index() const { return static_cast<long>(values.size()) - 1; }
    const Integer& at(long n) const {
        if (n < 0 || n > max_index()) throw std::out_of_range("IntegerSequence: index out of range");
        return values[static_cast<std::size_t>(n)];
    }
};

/// a(n) = (1/n) sum_{k=1}^n weight(k) a(n-k), a(0) = 1; throws on non-exact division.
inline IntegerSequence value_recursion(std::string name, const std::function<Integer(long)>& weight,
                                       long max_n) {
    if (max_n < 0) throw std::invalid_argument("value_recursion: negative bound");
    IntegerSequence seq;
    seq.name = std::move(name);
    seq.values.reserve(static_cast<std::size_t>(max_n) + 1);
    seq.values.emplace_back(1);
    std::vector<Integer> weights(1);  // weights[k] = weight(k), filled as n grows
    for (long n = 1; n <= max_n; ++n) {
        weights.push_back(weight(n));
        Integer acc(0);
        for (long k = 1; k <= n; ++k)
            mpz_addmul(acc.get_mpz_t(), weights[static_cast<std::size_t>(k)].get_mpz_t(),
                       seq.values[static_cast<std::size_t>(n - k)].get_mpz_t());
        if (!mpz_divisible_ui_p(acc.get_mpz_t(), static_cast<unsigned long>(n)))
            throw std::domain_error("value_recursion: non-integral step at n=" + std::to_string(n) +
                                    " for " + seq.name);
        Integer v;
        mpz_divexact_ui(v.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(n));
        seq.values.push_back(std::move(v));
    }
    return seq;
}

/// Wohlfahrt recursion driven by g itself (N_G when g counts subgroup indices).
inline IntegerSequence wohlfahrt_sequence(const ArithFn& g, long max_n) {
    g.precompute(max_n);
    return value_recursion(g.name(), [&g](long k) { return g.value(k); }, max_n);
}

/// p(n): g = sigma_1.
inline IntegerSequence partition_numbers(long max_n) {
    IntegerSequence s = wohlfahrt_sequence(ArithFn::sigma(1), max_n);
    s.name = "p";
    return s;
}

/// p_k(n) via weights k * sigma_1; equals P_n^sigma(k).
inline IntegerSequence colored_partitions(long k, long max_n) {
    if (k < 1) throw std::invalid_argument("colored_partitions: k must be >= 1");
    ArithFn sigma1 = ArithFn::sigma(1);
    sigma1.precompute(max_n);
    Integer factor(k);
    return value_recursion(
        "pk:" + std::to_string(k),
        [&sigma1, &factor](long m) -> Integer { return factor * sigma1.value(m); }, max_n);
}

/// pp(n): g = sigma_2.
inline IntegerSequence plane_partitions(long max_n) {
    IntegerSequence s = wohlfahrt_sequence(ArithFn::sigma(2), max_n);
    s.name = "pp";
    return s;
}

/// pbar(n) = P_n^gbar(2), via weights 2 * gbar.
inline IntegerSequence overpartitions(long max_n) {
    ArithFn gbar = ArithFn::gbar();
    gbar.precompute(max_n);
    return value_recursion(
        "pbar", [&gbar](long m) -> Integer { return Integer(2) * gbar.value(m); }, max_n);
}

/// N_ell(n): g = g_ell.
inline IntegerSequence commuting_tuple_numbers(long ell, long max_n) {
    IntegerSequence s = wohlfahrt_sequence(ArithFn::gell(static_cast<unsigned long>(ell)), max_n);
    s.name = "Nell:" + std::to_string(ell);
    return s;
}

/// Sign of a(n)^(n+1) - a(n+1)^n, i.e. the trichotomy of R(n) vs R(n+1).
inline int root_compare(const IntegerSequence& seq, long n) {
    if (n < 0) throw std::invalid_argument("root_compare: n must be >= 0");
    Integer lhs = ipow(seq.at(n), static_cast<unsigned long>(n) + 1);
    Integer rhs = ipow(seq.at(n + 1), static_cast<unsigned long>(n));
    int c = cmp(lhs, rhs);
    return (c > 0) - (c < 0);
}

/// Strict a(n)^(n+1) > a(n+1)^n by exact integer comparison.
inline bool root_decreasing_check(const IntegerSequence& seq, long n) {
    if (n < 1) throw std::invalid_argument("root_decreasing_check: n must be >= 1");
    return root_compare(seq, n) > 0;
}

/// a(n)^2 >= a(n-1) a(n+1).
inline bool logconcave_at(const IntegerSequence& seq, long n) {
    if (n < 1) throw std::invalid_argument("logconcave_at: n must be >= 1");
    return seq.at(n) * seq.at(n) >= seq.at(n - 1) * seq.at(n + 1);
}

/// Indices in [from, to] violating log-concavity.
inline std::vector<long> log_concavity_scan(const IntegerSequence& seq, long from, long to) {
    if (from < 1 || to + 1 > seq.max_index())
        throw std::out_of_range("log_concavity_scan: range outside sequence");
    std::vector<long> failures;
    for (long n = from; n <= to; ++n)
        if (!logconcave_at(seq, n)) failures.push_back(n);
    return failures;
}

/// The three comparisons R(n) > Q(n), R(n-1) > R(n), R(n-1) > Q(n) in
/// cross-multiplied integer form; returns true iff all three agree.
inline bool equivalence_property(const IntegerSequence& seq, long n) {
    if (n < 1) throw std::invalid_argument("equivalence_property: n must be >= 1");
    const Integer& prev = seq.at(n - 1);
    const Integer& cur = seq.at(n);
    const auto un = static_cast<unsigned long>(n);
    // R(n) > Q(n)   <=>  a(n) a(n-1)^n > a(n)^n
    bool c1 = cur * ipow(prev, un) > ipow(cur, un);
    // R(n-1) > R(n) <=>  a(n-1)^n > a(n)^(n-1)
    bool c2 = ipow(prev, un) > ipow(cur, un - 1);
    // R(n-1) > Q(n) <=>  a(n-1)^(n/(n-1)) > a(n)/a(n-1), same integer form
    bool c3 = ipow(prev, un - 1) * prev > ipow(cur, un - 1);
    return c1 == c2 && c2 == c3;
}

/// Fixed-decimal display of v^(1/n), rounded half-up, computed exactly:
/// r = round(10^d * v^(1/n)) via integer n-th roots, never floating point.
inline std::string nth_root_display(const Integer& v, long n, int decimals) {
    if (n < 1 || sign_of(v) <= 0 || decimals < 0)
        throw std::invalid_argument("nth_root_display: need n >= 1, v > 0, decimals >= 0");
    const auto un = static_cast<unsigned long>(n);
    Integer scaled = v * ipow(Integer(10), static_cast<unsigned long>(decimals) * un);
    auto [floor_root, exact] = iroot(scaled, un);
    Integer r = floor_root;
    if (!exact) {
        // round up iff fractional part >= 1/2  <=>  (2 floor + 1)^n <= 2^n * scaled
        Integer lhs = ipow(Integer(2) * floor_root + 1, un);
        Integer rhs = ipow(Integer(2), un) * scaled;
        if (lhs <= rhs) r += 1;
    }
    std::string digits = r.get_str();
    if (decimals == 0) return digits;
    if (digits.size() <= static_cast<std::size_t>(decimals))
        digits.insert(0, static_cast<std::size_t>(decimals) + 1 - digits.size(), '0');
    digits.insert(digits.size() - static_cast<std::size_t>(decimals), ".");
    return digits;
}

struct RootQuotientReport {
    long n = 0;
    bool root_decreasing = false;  // a(n)^(n+1) > a(n+1)^n, exact
    bool logconcave = false;       // a(n)^2 >= a(n-1) a(n+1), exact
    std::string display_root;      // decimal rendering of a(n)^(1/n), presentation only
};

inline RootQuotientReport root_quotient_report(const IntegerSequence& seq, long n, int decimals) {
    RootQuotientReport r;
    r.n = n;
    r.root_decreasing = root_decreasing_check(seq, n);
    r.logconcave = logconcave_at(seq, n);
    r.display_root = nth_root_display(seq.at(n), n, decimals);
    return r;
}

/// Two-route verification that {a(n)^(1/n)} is strictly decreasing:
/// the log-concavity + initial-condition induction, and the direct per-n
/// integer comparison. The routes must agree.
struct MonotoneRootReport {
    long n0 = 0, horizon = 0;
    bool logconcave_ok = false;            // log-concavity holds on [n0, horizon-1]
    std::vector<long> logconcave_failures;
    int initial_cmp = 0;                   // trichotomy of R(n0-1) vs R(n0)
    long induction_start = -1;             // first m >= n0 with R(m-1) > R(m); -1 if none
    bool induction_ok = false;             // induction route proves decrease on [induction_start-1, horizon]
    long direct_decreasing_from = -1;      // minimal d with R(n) > R(n+1) for all n in [d, horizon-1]
    std::vector<long> equal_indices;       // n in [1, horizon-1] with R(n) = R(n+1)
    bool routes_agree = false;

    bool ok() const { return logconcave_ok && induction_ok && routes_agree; }
};

inline MonotoneRootReport monotone_root_verify(const IntegerSequence& seq, long n0, long horizon) {
    if (n0 < 2) throw std::invalid_argument("monotone_root_verify: n0 must be >= 2");
    if (horizon <= n0 || horizon > seq.max_index())
        throw std::out_of_range("monotone_root_verify: bad horizon");
    MonotoneRootReport rep;
    rep.n0 = n0;
    rep.horizon = horizon;

    for (long n = n0; n + 1 <= horizon; ++n)
        if (!logconcave_at(seq, n)) rep.logconcave_failures.push_back(n);
    rep.logconcave_ok = rep.logconcave_failures.empty();

    rep.initial_cmp = root_compare(seq, n0 - 1);

    // direct route over [1, horizon-1]
    std::vector<int> cmps(static_cast<std::size_t>(horizon), 0);
    for (long n = 1; n + 1 <= horizon; ++n) {
        cmps[static_cast<std::size_t>(n)] = root_compare(seq, n);
        if (cmps[static_cast<std::size_t>(n)] == 0) rep.equal_indices.push_back(n);
    }
    long d = horizon;
    while (d - 1 >= 1 && cmps[static_cast<std::size_t>(d - 1)] > 0) --d;
    rep.direct_decreasing_from = (d < horizon) ? d : -1;

    // induction route: the initial comparison may sit at an equality (the
    // overpartition case); slide forward while log-concavity already holds.
    if (rep.logconcave_ok) {
        for (long m = n0; m + 1 <= horizon; ++m) {
            if (cmps[static_cast<std::size_t>(m - 1)] > 0) {
                rep.induction_start = m;
                break;
            }
        }
        rep.induction_ok = rep.induction_start >= 0;
    }

    // The induction route claims strict decrease on [induction_start-1, horizon];
    // the direct route must say exactly the same there.
    if (rep.induction_ok) {
        bool agree = true;
        for (long n = rep.induction_start - 1; n + 1 <= horizon; ++n)
            if (cmps[static_cast<std::size_t>(n)] <= 0) {
                agree = false;
                break;
            }
        rep.routes_agree = agree && rep.direct_decreasing_from >= 0 &&
                           rep.direct_decreasing_from <= rep.induction_start - 1;
    }
    return rep;
}

}  // namespace darcais
