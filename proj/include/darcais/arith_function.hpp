#pragma once

// The normalized arithmetic functions g driving the polynomial recursion:
// sigma_l (divisor power sums), psi_l(n) = n^l, gbar (overpartitions), and
// the recursively defined g_l. The registry is closed; instances are created
// by factories or parsed from spec strings like "sigma:2" or "gell:3".
//
// Values are memoized. The cache is mutex-guarded, so concurrent evaluation
// is safe; hot loops should call precompute() first and then read lock-free
// by value.

#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "darcais/rational.hpp"

namespace darcais {

/// All d with d | n, ascending. n >= 1.
inline std::vector<long> divisors(long n) {
    if (n < 1) throw std::invalid_argument("divisors: n must be >= 1");
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

class ArithFn {
public:
    enum class Kind { Sigma, Psi, GBar, GEll };

    static ArithFn sigma(unsigned long ell) { return ArithFn(Kind::Sigma, ell); }
    static ArithFn psi(unsigned long ell) { return ArithFn(Kind::Psi, ell); }
    static ArithFn gbar() { return ArithFn(Kind::GBar, 0); }
    static ArithFn gell(unsigned long ell) {
        if (ell < 1) throw std::invalid_argument("gell: ell must be >= 1");
        return ArithFn(Kind::GEll, ell);
    }

    /// Grammar: sigma:<l> | psi:<l> | gbar | gell:<l>.
    static ArithFn parse(std::string_view spec) {
        auto colon = spec.find(':');
        std::string_view head = spec.substr(0, colon);
        bool has_param = colon != std::string_view::npos;
        unsigned long ell = 0;
        if (has_param) {
            std::string_view tail = spec.substr(colon + 1);
            if (tail.empty()) throw std::invalid_argument("arith spec: missing parameter in '" + std::string(spec) + "'");
            for (char c : tail) {
                if (c < '0' || c > '9') throw std::invalid_argument("arith spec: bad parameter in '" + std::string(spec) + "'");
                ell = ell * 10 + static_cast<unsigned long>(c - '0');
                if (ell > 1000) throw std::invalid_argument("arith spec: parameter out of range in '" + std::string(spec) + "'");
            }
        }
        if (head == "sigma" && has_param) return sigma(ell);
        if (head == "psi" && has_param) return psi(ell);
        if (head == "gbar" && !has_param) return gbar();
        if (head == "gell" && has_param) return gell(ell);
        throw std::invalid_argument("arith spec: unknown function '" + std::string(spec) + "'");
    }

    Kind kind() const { return impl_->kind; }
    unsigned long ell() const { return impl_->ell; }

    std::string name() const {
        switch (impl_->kind) {
            case Kind::Sigma: return "sigma:" + std::to_string(impl_->ell);
            case Kind::Psi: return "psi:" + std::to_string(impl_->ell);
            case Kind::GBar: return "gbar";
            case Kind::GEll: return "gell:" + std::to_string(impl_->ell);
        }
        return {};
    }

    /// g(n) for n >= 1.
    Integer value(long n) const {
        if (n < 1) throw std::invalid_argument("ArithFn::value: n must be >= 1");
        std::lock_guard lock(impl_->mutex);
        ensure_locked(n);
        return impl_->cache[static_cast<std::size_t>(n)];
    }
    Integer operator()(long n) const { return value(n); }

    void precompute(long n) const {
        if (n < 1) return;
        std::lock_guard lock(impl_->mutex);
        ensure_locked(n);
    }

    friend bool operator==(const ArithFn& a, const ArithFn& b) {
        return a.impl_->kind == b.impl_->kind && a.impl_->ell == b.impl_->ell;
    }

private:
    struct Impl {
        Kind kind;
        unsigned long ell;
        mutable std::mutex mutex;
        // cache[n] = g(n); index 0 unused. For GEll, levels[j][n] = g_j(n).
        std::vector<Integer> cache;
        std::vector<std::vector<Integer>> levels;
    };

    std::shared_ptr<Impl> impl_;

    ArithFn(Kind kind, unsigned long ell) : impl_(std::make_shared<Impl>()) {
        impl_->kind = kind;
        impl_->ell = ell;
        impl_->cache.assign(1, Integer(0));
    }

    void ensure_locked(long n) const {
        auto& cache = impl_->cache;
        if (static_cast<std::size_t>(n) < cache.size()) return;
        const long lo = static_cast<long>(cache.size());
        cache.resize(static_cast<std::size_t>(n) + 1);
        switch (impl_->kind) {
            case Kind::Sigma:
                for (long m = lo; m <= n; ++m) cache[static_cast<std::size_t>(m)] = divisor_power_sum(m, impl_->ell);
                break;
            case Kind::Psi:
                for (long m = lo; m <= n; ++m) cache[static_cast<std::size_t>(m)] = ipow(Integer(m), impl_->ell);
                break;
            case Kind::GBar:
                for (long m = lo; m <= n; ++m) {
                    Integer v = divisor_power_sum(m, 1);
                    if (m % 2 == 0) v -= divisor_power_sum(m / 2, 1);
                    cache[static_cast<std::size_t>(m)] = std::move(v);
                }
                break;
            case Kind::GEll:
                ensure_gell_locked(n);
                for (long m = lo; m <= n; ++m)
                    cache[static_cast<std::size_t>(m)] = impl_->levels[impl_->ell][static_cast<std::size_t>(m)];
                break;
        }
    }

    // g_j(n) = sum_{d|n} d * g_{j-1}(d), g_0(n) = [n == 1]; fills all levels up to n.
    void ensure_gell_locked(long n) const {
        auto& levels = impl_->levels;
        if (levels.empty()) levels.assign(impl_->ell + 1, {Integer(0)});
        const long lo = static_cast<long>(levels[0].size());
        if (lo > n) return;
        for (auto& level : levels) level.resize(static_cast<std::size_t>(n) + 1);
        for (long m = lo; m <= n; ++m) levels[0][static_cast<std::size_t>(m)] = (m == 1) ? 1 : 0;
        for (unsigned long j = 1; j <= impl_->ell; ++j) {
            for (long m = lo; m <= n; ++m) {
                Integer acc(0);
                for (long d : divisors(m)) acc += Integer(d) * levels[j - 1][static_cast<std::size_t>(d)];
                levels[j][static_cast<std::size_t>(m)] = std::move(acc);
            }
        }
    }

    static Integer divisor_power_sum(long n, unsigned long ell) {
        Integer acc(0);
        for (long d : divisors(n)) acc += ipow(Integer(d), ell);
        return acc;
    }
};

/// The families exercised throughout: sigma_1, sigma_2, psi_0..2, gbar, g_3, g_4.
inline std::vector<ArithFn> standard_families() {
    return {ArithFn::sigma(1), ArithFn::sigma(2), ArithFn::psi(0), ArithFn::psi(1),
            ArithFn::psi(2),   ArithFn::gbar(),   ArithFn::gell(3), ArithFn::gell(4)};
}

}  // namespace darcais
