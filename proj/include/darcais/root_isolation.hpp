#pragma once

// Exact real-root machinery: Descartes sign-variation counts on arbitrary
// rational intervals, rightmost-root search with certified isolating
// intervals, full isolation after square-free reduction, and ray-positivity
// certificates for Delta_n beyond a threshold.
//
// All interval transforms run over Z. A variation count of 0 proves an
// interval root-free; a count of 1 proves it contains exactly one (simple)
// root. Exact rational roots are picked up by endpoint evaluation at the
// dyadic split points, which is where thresholds like g(2) land.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "darcais/delta.hpp"
#include "darcais/int_polynomial.hpp"
#include "darcais/poly_sequence.hpp"
#include "darcais/polynomial.hpp"
#include "darcais/rational.hpp"

namespace darcais {

inline const Rational& default_isolation_width() {
    static const Rational w = make_rational(1, 1000000);
    return w;
}

struct IsolatingInterval {
    Rational lo, hi;
    std::optional<Rational> exact;
    // Signs of the isolated polynomial at the endpoints (0 when exact). On a
    // certified interval these match the square-free part's signs up to one
    // global positive factor, so sign_lo * sign_hi < 0 holds for both.
    int sign_lo = 0, sign_hi = 0;

    bool is_exact() const { return exact.has_value(); }
    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }

    static IsolatingInterval at(Rational value) {
        IsolatingInterval r;
        r.lo = value;
        r.hi = value;
        r.exact = std::move(value);
        return r;
    }
};

namespace detail {

/// t with t(y) = v^deg(q) * q(y / v).
inline IntPolynomial scale_tail(const IntPolynomial& q, const Integer& v) {
    if (q.is_zero()) return {};
    std::vector<Integer> out(q.coefficients().size());
    Integer pw(1);
    for (std::size_t i = out.size(); i-- > 0;) {
        out[i] = q[i] * pw;
        pw *= v;
    }
    return IntPolynomial(std::move(out));
}

/// q(add + mul * y), by Horner.
inline IntPolynomial compose_linear(const IntPolynomial& q, const Integer& add, const Integer& mul) {
    if (q.is_zero()) return {};
    const auto& c = q.coefficients();
    std::vector<Integer> acc{c.back()};
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        acc.emplace_back(0);
        for (std::size_t j = acc.size() - 1; j >= 1; --j) {
            acc[j] *= add;
            mpz_addmul(acc[j].get_mpz_t(), acc[j - 1].get_mpz_t(), mul.get_mpz_t());
        }
        acc[0] *= add;
        acc[0] += c[i];
    }
    return IntPolynomial(std::move(acc));
}

inline int sign_at(const IntPolynomial& q, const Rational& x) {
    return sign_of(q.eval_scaled(x.get_num(), x.get_den()));
}

/// Descartes bound on the number of roots of q in the open interval (lo, hi):
/// 0 means none, 1 means exactly one simple root. Roots at the endpoints are
/// not counted.
inline int count_roots_open(const IntPolynomial& q, const Rational& lo, const Rational& hi) {
    if (q.is_zero()) throw std::domain_error("count_roots_open: zero polynomial");
    if (cmp(lo, hi) >= 0) throw std::invalid_argument("count_roots_open: empty interval");
    Integer v = lcm(lo.get_den(), hi.get_den());
    Integer alpha = lo.get_num() * divexact(v, lo.get_den());
    Integer beta = hi.get_num() * divexact(v, hi.get_den());
    IntPolynomial frame = compose_linear(scale_tail(q, v), alpha, beta - alpha);
    IntPolynomial w = frame.reversed();
    w.taylor_shift_1();
    return w.sign_variations();
}

inline Integer pow2_at_least(const Integer& v) {
    if (v <= 1) return Integer(1);
    const std::size_t bits = mpz_sizeinbase(v.get_mpz_t(), 2);
    Integer p(1);
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), bits - 1);
    if (p < v) mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), 1);
    return p;
}

/// Power-of-two upper bound for the positive roots of q: the minimum of the
/// Cauchy bound (strict) and Fujiwara's 2*max_k |a_{d-k}/a_d|^(1/k) bound
/// (roots may touch it, which callers handle by testing q at the bound).
inline Integer pow2_root_bound(const IntPolynomial& q) {
    const long d = q.degree();
    if (d <= 0) return Integer(1);
    const Integer lead = abs(q.leading());

    Integer max_abs(0);
    for (long i = 0; i < d; ++i) {
        Integer a = abs(q[static_cast<std::size_t>(i)]);
        if (a > max_abs) max_abs = std::move(a);
    }
    Integer cauchy;
    mpz_cdiv_q(cauchy.get_mpz_t(), max_abs.get_mpz_t(), lead.get_mpz_t());
    cauchy += 1;
    Integer best = pow2_at_least(cauchy);

    Integer fujiwara(1);
    for (long k = 1; k <= d; ++k) {
        Integer a = abs(q[static_cast<std::size_t>(d - k)]);
        if (sign_of(a) == 0) continue;
        Integer t;
        mpz_cdiv_q(t.get_mpz_t(), a.get_mpz_t(), lead.get_mpz_t());
        auto [r, exact] = iroot(t, static_cast<unsigned long>(k));
        if (!exact) r += 1;
        if (r > fujiwara) fujiwara = std::move(r);
    }
    Integer fb = pow2_at_least(Integer(2) * fujiwara);
    return std::min(best, fb);
}

struct SearchOptions {
    Rational width;
    // When set, intervals proven root-free are appended (they tile the
    // searched region whenever no root is returned).
    std::vector<std::pair<Rational, Rational>>* exclusions = nullptr;
    int depth_cap = 256;
};

/// Shrink a count==1 interval to the requested width by sign bisection.
inline IsolatingInterval refine_simple_root(const IntPolynomial& q, Rational lo, Rational hi,
                                            const Rational& width) {
    int s_lo = sign_at(q, lo);
    int s_hi = sign_at(q, hi);
    while (cmp(hi - lo, width) > 0 || s_lo == 0 || s_hi == 0) {
        Rational mid = (lo + hi) / 2;
        int s = sign_at(q, mid);
        if (s == 0) return IsolatingInterval::at(std::move(mid));
        if (s_lo != 0) {
            if (s != s_lo) {
                hi = std::move(mid);
                s_hi = s;
            } else {
                lo = std::move(mid);
                s_lo = s;
            }
        } else if (s_hi != 0) {
            if (s != s_hi) {
                lo = std::move(mid);
                s_lo = s;
            } else {
                hi = std::move(mid);
                s_hi = s;
            }
        } else {
            // both endpoints are roots of q outside the open interval
            if (count_roots_open(q, lo, mid) == 1) {
                hi = std::move(mid);
                s_hi = s;
            } else {
                lo = std::move(mid);
                s_lo = s;
            }
        }
    }
    IsolatingInterval r;
    r.lo = std::move(lo);
    r.hi = std::move(hi);
    r.sign_lo = s_lo;
    r.sign_hi = s_hi;
    return r;
}

/// Rightmost real root of q in the open interval (lo, hi), or nullopt if the
/// interval is root-free. q must not vanish at 0; endpoints' own roots are
/// not reported.
inline std::optional<IsolatingInterval> rightmost_root(const IntPolynomial& q, const Rational& lo,
                                                       const Rational& hi, const SearchOptions& opt,
                                                       int depth = 0) {
    int count = count_roots_open(q, lo, hi);
    if (count == 0) {
        if (opt.exclusions) opt.exclusions->emplace_back(lo, hi);
        return std::nullopt;
    }
    if (count == 1) return refine_simple_root(q, lo, hi, opt.width);
    if (depth >= opt.depth_cap)
        throw std::runtime_error("root isolation: unresolved root cluster (multiple real root?)");
    Rational mid = (lo + hi) / 2;
    bool mid_is_root = sign_at(q, mid) == 0;
    if (auto upper = rightmost_root(q, mid, hi, opt, depth + 1)) return upper;
    if (mid_is_root) return IsolatingInterval::at(std::move(mid));
    return rightmost_root(q, lo, mid, opt, depth + 1);
}

/// All roots of q in (lo, hi), ascending. Same preconditions as rightmost_root.
inline void collect_roots(const IntPolynomial& q, const Rational& lo, const Rational& hi,
                          const SearchOptions& opt, std::vector<IsolatingInterval>& out, int depth = 0) {
    int count = count_roots_open(q, lo, hi);
    if (count == 0) return;
    if (count == 1) {
        out.push_back(refine_simple_root(q, lo, hi, opt.width));
        return;
    }
    if (depth >= opt.depth_cap)
        throw std::runtime_error("root isolation: unresolved root cluster (multiple real root?)");
    Rational mid = (lo + hi) / 2;
    collect_roots(q, lo, mid, opt, out, depth + 1);
    if (sign_at(q, mid) == 0) out.push_back(IsolatingInterval::at(mid));
    collect_roots(q, mid, hi, opt, out, depth + 1);
}

/// Largest root in (0, bound], where bound comes from pow2_root_bound.
inline std::optional<IsolatingInterval> largest_positive_root(const IntPolynomial& q,
                                                              const SearchOptions& opt) {
    if (q.is_zero()) throw std::domain_error("largest_positive_root: zero polynomial");
    if (q.trailing_zero_count() > 0)
        throw std::logic_error("largest_positive_root: strip the root at 0 first");
    if (q.degree() == 0) return std::nullopt;
    Rational bound{pow2_root_bound(q)};
    if (sign_at(q, bound) == 0) return IsolatingInterval::at(bound);  // Fujiwara bound can be attained
    return rightmost_root(q, Rational(0), bound, opt);
}

}  // namespace detail

/// Disjoint certified intervals, one per distinct real root of p, ascending.
/// Runs on the square-free part, so intervals carry its endpoint signs.
inline std::vector<IsolatingInterval> isolate_real_roots(const Polynomial& p,
                                                         const Rational& width = default_isolation_width()) {
    if (p.is_zero()) throw std::domain_error("isolate_real_roots: zero polynomial");
    Polynomial sf = squarefree_part(p);
    IntPolynomial q = sf.cleared().first;  // positive leading scale: same signs as sf

    const std::size_t mult0 = q.trailing_zero_count();
    IntPolynomial stripped = q.shifted_down(mult0);

    std::vector<IsolatingInterval> out;
    detail::SearchOptions opt{width};
    if (stripped.degree() >= 1) {
        // negative roots via q(-x), mapped back
        IntPolynomial mirrored = stripped.reflected();
        std::vector<IsolatingInterval> neg;
        Rational nbound{detail::pow2_root_bound(mirrored)};
        detail::collect_roots(mirrored, Rational(0), nbound, opt, neg);
        if (detail::sign_at(mirrored, nbound) == 0) neg.push_back(IsolatingInterval::at(nbound));
        for (auto it = neg.rbegin(); it != neg.rend(); ++it) {
            IsolatingInterval m;
            if (it->is_exact()) {
                m = IsolatingInterval::at(-*it->exact);
            } else {
                m.lo = -it->hi;
                m.hi = -it->lo;
                m.sign_lo = it->sign_hi;
                m.sign_hi = it->sign_lo;
            }
            out.push_back(std::move(m));
        }
    }
    if (mult0 > 0) out.push_back(IsolatingInterval::at(Rational(0)));
    if (stripped.degree() >= 1) {
        std::vector<IsolatingInterval> pos;
        Rational pbound{detail::pow2_root_bound(stripped)};
        if (detail::sign_at(stripped, pbound) == 0) {
            detail::collect_roots(stripped, Rational(0), pbound, opt, pos);
            pos.push_back(IsolatingInterval::at(pbound));
        } else {
            detail::collect_roots(stripped, Rational(0), pbound, opt, pos);
        }
        for (auto& r : pos) out.push_back(std::move(r));
    }
    return out;
}

/// Certified largest real zero of Delta_n. Delta_n(0) = 0, so the result is
/// the largest positive root when one exists and exactly 0 otherwise.
inline IsolatingInterval largest_real_zero(const DeltaPolynomial& delta,
                                           const Rational& width = default_isolation_width()) {
    const IntPolynomial& q = delta.scaled;
    if (q.is_zero()) throw std::domain_error("largest_real_zero: zero Delta polynomial");
    const std::size_t mult0 = q.trailing_zero_count();
    if (mult0 == 0) throw std::logic_error("largest_real_zero: Delta must vanish at 0");
    IntPolynomial stripped = q.shifted_down(mult0);
    detail::SearchOptions opt{width};
    if (auto top = detail::largest_positive_root(stripped, opt)) return *top;
    return IsolatingInterval::at(Rational(0));
}

inline IsolatingInterval largest_real_zero(const PolySequence& seq, long n,
                                           const Rational& width = default_isolation_width()) {
    return largest_real_zero(build_delta(seq, n), width);
}

enum class RayMethod { ShiftedNonnegativeCoefficients, ZeroRootCount };

inline const char* ray_method_name(RayMethod m) {
    switch (m) {
        case RayMethod::ShiftedNonnegativeCoefficients: return "shifted-nonnegative-coefficients";
        case RayMethod::ZeroRootCount: return "zero-root-count";
    }
    return "?";
}

/// Machine-checkable witness that a polynomial is strictly positive on the
/// open ray (threshold, infinity).
struct RayPositivityCertificate {
    Rational threshold;
    RayMethod method = RayMethod::ZeroRootCount;
    /// positive scale * p(y + threshold) with the y^m factor stripped
    IntPolynomial shifted;
    /// root-free subintervals tiling (0, searched_bound) in shifted coordinates
    std::vector<std::pair<Rational, Rational>> exclusions;
    Rational searched_bound;

    bool check() const {
        if (shifted.is_zero() || sign_of(shifted.leading()) <= 0) return false;
        if (method == RayMethod::ShiftedNonnegativeCoefficients) {
            for (const auto& c : shifted.coefficients())
                if (sign_of(c) < 0) return false;
            return true;
        }
        if (exclusions.empty()) return shifted.sign_variations() == 0;
        if (Rational{detail::pow2_root_bound(shifted)} > searched_bound) return false;
        if (detail::sign_at(shifted, searched_bound) == 0) return false;
        Rational edge(0);
        for (const auto& [lo, hi] : exclusions) {
            if (cmp(lo, edge) != 0 || cmp(hi, lo) <= 0) return false;
            if (detail::count_roots_open(shifted, lo, hi) != 0) return false;
            edge = hi;
        }
        return cmp(edge, searched_bound) == 0;
    }
};

struct RayCheck {
    bool positive = false;
    std::optional<RayPositivityCertificate> certificate;
    /// refutation witness: a certified root of p strictly above the threshold
    std::optional<IsolatingInterval> root_above;
};

namespace detail {

inline RayCheck ray_positive_beyond_scaled(const IntPolynomial& q, const Rational& threshold,
                                           const Rational& width) {
    if (q.is_zero()) throw std::domain_error("verify_positive_beyond: zero polynomial");

    // s(y) = den^deg * q(y + threshold), an integer polynomial
    const Integer& u = threshold.get_num();
    const Integer& v = threshold.get_den();
    IntPolynomial s = compose_linear(scale_tail(q, v), u, v);
    // a root at the threshold itself does not touch the open-ray claim
    s = s.shifted_down(s.trailing_zero_count());

    RayCheck result;
    auto map_back = [&threshold](IsolatingInterval iv) {
        IsolatingInterval r;
        r.lo = iv.lo + threshold;
        r.hi = iv.hi + threshold;
        if (iv.exact) r.exact = *iv.exact + threshold;
        r.sign_lo = iv.sign_lo;
        r.sign_hi = iv.sign_hi;
        return r;
    };

    if (sign_of(s.leading()) > 0) {
        bool all_nonneg = true;
        for (const auto& c : s.coefficients())
            if (sign_of(c) < 0) {
                all_nonneg = false;
                break;
            }
        if (all_nonneg) {
            result.positive = true;
            result.certificate = RayPositivityCertificate{
                threshold, RayMethod::ShiftedNonnegativeCoefficients, std::move(s), {}, Rational(0)};
            return result;
        }
        if (s.sign_variations() == 0) {
            result.positive = true;
            result.certificate =
                RayPositivityCertificate{threshold, RayMethod::ZeroRootCount, std::move(s), {}, Rational(0)};
            return result;
        }
    }

    if (s.degree() == 0 || sign_of(s.leading()) < 0) {
        // eventually negative (or a negative constant): refuted, and when the
        // sign never crosses zero above the threshold there is no root witness
        result.positive = false;
        if (s.degree() >= 1) {
            SearchOptions opt{width};
            if (auto root = largest_positive_root(s, opt)) result.root_above = map_back(std::move(*root));
        }
        return result;
    }

    std::vector<std::pair<Rational, Rational>> exclusions;
    SearchOptions opt{width, &exclusions};
    Rational bound{pow2_root_bound(s)};
    if (sign_at(s, bound) == 0) {
        result.positive = false;
        result.root_above = map_back(IsolatingInterval::at(bound));
        return result;
    }
    if (auto root = rightmost_root(s, Rational(0), bound, opt)) {
        result.positive = false;
        result.root_above = map_back(std::move(*root));
        return result;
    }
    std::sort(exclusions.begin(), exclusions.end(),
              [](const auto& a, const auto& b) { return cmp(a.first, b.first) < 0; });
    result.positive = true;
    result.certificate = RayPositivityCertificate{threshold, RayMethod::ZeroRootCount, std::move(s),
                                                  std::move(exclusions), std::move(bound)};
    return result;
}

}  // namespace detail

/// Does p(x) > 0 hold for every x > threshold? Exact; returns either a
/// certificate or a refutation witness.
inline RayCheck verify_positive_beyond(const Polynomial& p, const Rational& threshold,
                                       const Rational& width = default_isolation_width()) {
    if (p.is_zero()) throw std::domain_error("verify_positive_beyond: zero polynomial");
    return detail::ray_positive_beyond_scaled(p.cleared().first, threshold, width);
}

inline RayCheck verify_positive_beyond(const DeltaPolynomial& delta, const Rational& threshold,
                                       const Rational& width = default_isolation_width()) {
    return detail::ray_positive_beyond_scaled(delta.scaled, threshold, width);
}

inline RayCheck verify_positive_beyond(const PolySequence& seq, long n, const Rational& threshold,
                                       const Rational& width = default_isolation_width()) {
    return verify_positive_beyond(build_delta(seq, n), threshold, width);
}

}  // namespace darcais
