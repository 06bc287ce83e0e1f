#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <string>
#include <string_view>

#include "rigorquad/errors.hpp"

namespace rq {

namespace detail {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline double next_up(double x) { return std::nextafter(x, kInf); }
inline double next_down(double x) { return std::nextafter(x, -kInf); }

// Directed rounding without switching the FPU mode: round-to-nearest results
// are corrected by the exact residual of the operation (two-sum / fma), so
// exact operations stay exact and inexact ones are correctly rounded.
// This keeps interval arithmetic thread-safe and deterministic.

inline double add_down(double a, double b) {
    double s = a + b;
    if (!std::isfinite(s)) throw OverflowError("interval addition overflow");
    double bv = s - a;
    double av = s - bv;
    double err = (a - av) + (b - bv);
    return err < 0 ? next_down(s) : s;
}

inline double add_up(double a, double b) {
    double s = a + b;
    if (!std::isfinite(s)) throw OverflowError("interval addition overflow");
    double bv = s - a;
    double av = s - bv;
    double err = (a - av) + (b - bv);
    return err > 0 ? next_up(s) : s;
}

inline double sub_down(double a, double b) { return add_down(a, -b); }
inline double sub_up(double a, double b) { return add_up(a, -b); }

inline double mul_down(double a, double b) {
    double p = a * b;
    if (!std::isfinite(p)) throw OverflowError("interval multiplication overflow");
    double err = std::fma(a, b, -p);
    return err < 0 ? next_down(p) : p;
}

inline double mul_up(double a, double b) {
    double p = a * b;
    if (!std::isfinite(p)) throw OverflowError("interval multiplication overflow");
    double err = std::fma(a, b, -p);
    return err > 0 ? next_up(p) : p;
}

// Division residual r = fma(q,b,-a) is exact; the true quotient exceeds q
// exactly when -r/b > 0.
inline double div_down(double a, double b) {
    double q = a / b;
    if (!std::isfinite(q)) throw OverflowError("interval division overflow");
    double r = std::fma(q, b, -a);
    if (r == 0) return q;
    bool true_above = (r < 0) == (b > 0);
    return true_above ? q : next_down(q);
}

inline double div_up(double a, double b) {
    double q = a / b;
    if (!std::isfinite(q)) throw OverflowError("interval division overflow");
    double r = std::fma(q, b, -a);
    if (r == 0) return q;
    bool true_above = (r < 0) == (b > 0);
    return true_above ? next_up(q) : q;
}

// libm transcendentals are not correctly rounded; glibc documents errors of
// at most a couple of ulps for sin/cos/sinh/cosh/exp, so two ulps of outward
// slack per endpoint is used. Verified empirically by the inclusion suite.
inline double lib_down(double v) { return next_down(next_down(v)); }
inline double lib_up(double v) { return next_up(next_up(v)); }

// Directed rounding of an extended-precision value to double, by comparing
// the nearest-rounded double back against the wider value. The caller must
// add any extended-precision computation error to v before rounding.
inline double ld_down(long double v) {
    double d = (double)v;
    return (long double)d <= v ? d : next_down(d);
}
inline double ld_up(long double v) {
    double d = (double)v;
    return (long double)d >= v ? d : next_up(d);
}

inline std::string shortest(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

} // namespace detail

enum class SplitStrategy { arithmetic, geometric };

/// Closed real interval with finite machine endpoints; the universal value
/// carrier of the library. All operations round outward so that the result
/// contains every pointwise true result.
class Interval {
public:
    Interval() : lo_(0), hi_(0) {}
    Interval(double point) : lo_(point), hi_(point) { validate(); } // NOLINT: implicit by design
    Interval(double lo, double hi) : lo_(lo), hi_(hi) {
        if (!(lo <= hi)) throw std::invalid_argument("Interval: lo > hi");
        validate();
    }

    double lo() const { return lo_; }
    double hi() const { return hi_; }

    /// Rigorous enclosure of the real number written in decimal.
    static Interval from_decimal(std::string_view text) {
        double v = 0;
        auto res = std::from_chars(text.data(), text.data() + text.size(), v);
        if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
            throw std::invalid_argument("Interval::from_decimal: bad literal '" + std::string(text) + "'");
        return Interval(detail::next_down(v), detail::next_up(v));
    }

    /// Which directed-rounding realization is active in this build.
    static constexpr const char* rounding_mode() { return "nextafter-eft"; }

    friend Interval operator-(const Interval& a) { return Interval(-a.hi_, -a.lo_, Raw{}); }

    friend Interval operator+(const Interval& a, const Interval& b) {
        return Interval(detail::add_down(a.lo_, b.lo_), detail::add_up(a.hi_, b.hi_), Raw{});
    }
    friend Interval operator-(const Interval& a, const Interval& b) {
        return Interval(detail::sub_down(a.lo_, b.hi_), detail::sub_up(a.hi_, b.lo_), Raw{});
    }
    friend Interval operator*(const Interval& a, const Interval& b) {
        double lo = std::min(std::min(detail::mul_down(a.lo_, b.lo_), detail::mul_down(a.lo_, b.hi_)),
                             std::min(detail::mul_down(a.hi_, b.lo_), detail::mul_down(a.hi_, b.hi_)));
        double hi = std::max(std::max(detail::mul_up(a.lo_, b.lo_), detail::mul_up(a.lo_, b.hi_)),
                             std::max(detail::mul_up(a.hi_, b.lo_), detail::mul_up(a.hi_, b.hi_)));
        return Interval(lo, hi, Raw{});
    }
    friend Interval operator/(const Interval& a, const Interval& b) {
        if (b.contains(0.0)) throw DivisionByZeroInterval();
        double lo = std::min(std::min(detail::div_down(a.lo_, b.lo_), detail::div_down(a.lo_, b.hi_)),
                             std::min(detail::div_down(a.hi_, b.lo_), detail::div_down(a.hi_, b.hi_)));
        double hi = std::max(std::max(detail::div_up(a.lo_, b.lo_), detail::div_up(a.lo_, b.hi_)),
                             std::max(detail::div_up(a.hi_, b.lo_), detail::div_up(a.hi_, b.hi_)));
        return Interval(lo, hi, Raw{});
    }

    Interval& operator+=(const Interval& o) { return *this = *this + o; }
    Interval& operator-=(const Interval& o) { return *this = *this - o; }
    Interval& operator*=(const Interval& o) { return *this = *this * o; }
    Interval& operator/=(const Interval& o) { return *this = *this / o; }

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo_ == b.lo_ && a.hi_ == b.hi_;
    }

    bool contains(double x) const { return lo_ <= x && x <= hi_; }
    bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool strictly_contains(double x) const { return lo_ < x && x < hi_; }

    /// Largest / smallest absolute value over the interval.
    double mag() const { return std::max(std::abs(lo_), std::abs(hi_)); }
    double mig() const { return contains(0.0) ? 0.0 : std::min(std::abs(lo_), std::abs(hi_)); }

    std::string str() const { return "[" + detail::shortest(lo_) + "," + detail::shortest(hi_) + "]"; }

    static Interval parse(std::string_view s) {
        if (s.size() < 5 || s.front() != '[' || s.back() != ']')
            throw std::invalid_argument("Interval::parse: expected '[lo,hi]'");
        auto comma = s.find(',');
        if (comma == std::string_view::npos) throw std::invalid_argument("Interval::parse: missing comma");
        double lo = 0, hi = 0;
        auto p1 = std::from_chars(s.data() + 1, s.data() + comma, lo);
        auto p2 = std::from_chars(s.data() + comma + 1, s.data() + s.size() - 1, hi);
        if (p1.ec != std::errc{} || p2.ec != std::errc{})
            throw std::invalid_argument("Interval::parse: bad endpoint");
        return Interval(lo, hi);
    }

private:
    struct Raw {};
    Interval(double lo, double hi, Raw) : lo_(lo), hi_(hi) {}
    void validate() const {
        if (std::isnan(lo_) || std::isnan(hi_)) throw std::invalid_argument("Interval: NaN endpoint");
    }
    double lo_, hi_;

    friend Interval make_interval_unchecked(double lo, double hi);
};

inline Interval make_interval_unchecked(double lo, double hi) { return Interval(lo, hi, Interval::Raw{}); }

inline Interval hull(const Interval& a, const Interval& b) {
    return make_interval_unchecked(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

inline Interval hull_with_zero(const Interval& a) { return hull(a, Interval(0.0)); }

/// hi - lo rounded up.
inline double width(const Interval& a) { return detail::sub_up(a.hi(), a.lo()); }

/// Some machine number inside [lo, hi].
inline double midpoint(const Interval& a) {
    if (a.lo() == a.hi()) return a.lo();
    double m = a.lo() + (a.hi() - a.lo()) / 2;
    if (!std::isfinite(m)) m = a.lo() / 2 + a.hi() / 2;
    return std::clamp(m, a.lo(), a.hi());
}

inline bool intersects(const Interval& a, const Interval& b) {
    return a.lo() <= b.hi() && b.lo() <= a.hi();
}

inline Interval intersect(const Interval& a, const Interval& b) {
    if (!intersects(a, b)) throw std::domain_error("intersect: disjoint intervals");
    return make_interval_unchecked(std::max(a.lo(), b.lo()), std::min(a.hi(), b.hi()));
}

/// Rigorous enclosure of pi (the nearest double is known to lie below pi).
inline const Interval& pi_interval() {
    static const Interval pi = [] {
        double lo = std::numbers::pi;
        Interval cand = make_interval_unchecked(lo, detail::next_up(lo));
        // Defensive: widen until the long double value is enclosed.
        long double pl = 3.141592653589793238462643383279502884L;
        while ((long double)cand.lo() > pl) cand = make_interval_unchecked(detail::next_down(cand.lo()), cand.hi());
        while ((long double)cand.hi() < pl) cand = make_interval_unchecked(cand.lo(), detail::next_up(cand.hi()));
        return cand;
    }();
    return pi;
}

inline Interval sqrt(const Interval& a) {
    if (a.lo() < 0) throw std::domain_error("sqrt of negative interval");
    // sqrt is correctly rounded, so one ulp of slack per endpoint suffices.
    return make_interval_unchecked(std::max(0.0, detail::next_down(std::sqrt(a.lo()))),
                                   detail::next_up(std::sqrt(a.hi())));
}

/// Enclosure of sqrt(3)/3, the GL2 node abscissa scale. Two ulps wide: one
/// nextafter step around the nearest double to the extended-precision value
/// (the composed interval sqrt-then-divide is several ulps wider, which the
/// node positions would amplify by f').
inline const Interval& sqrt3_over_3() {
    static const Interval s = [] {
        double v = (double)(sqrtl(3.0L) / 3.0L);
        return make_interval_unchecked(detail::next_down(v), detail::next_up(v));
    }();
    return s;
}

/// Tight integer power (n >= 0), sign-aware so even powers of
/// zero-straddling intervals get the exact lower bound 0.
inline Interval pow_i(const Interval& a, int n) {
    if (n < 0) throw std::domain_error("pow_i: negative exponent");
    if (n == 0) return Interval(1.0);
    if (n == 1) return a;
    auto mag_pow_up = [](double m, int k) {
        double r = 1;
        for (int i = 0; i < k; ++i) r = detail::mul_up(r, m);
        return r;
    };
    auto mag_pow_down = [](double m, int k) {
        double r = 1;
        for (int i = 0; i < k; ++i) r = detail::mul_down(r, m);
        return r;
    };
    bool even = n % 2 == 0;
    if (a.lo() >= 0) {
        return make_interval_unchecked(mag_pow_down(a.lo(), n), mag_pow_up(a.hi(), n));
    }
    if (a.hi() <= 0) {
        double plo = mag_pow_down(-a.hi(), n), phi = mag_pow_up(-a.lo(), n);
        return even ? make_interval_unchecked(plo, phi) : make_interval_unchecked(-phi, -plo);
    }
    // straddles zero
    if (even) return make_interval_unchecked(0.0, mag_pow_up(a.mag(), n));
    return make_interval_unchecked(-mag_pow_up(-a.lo(), n), mag_pow_up(a.hi(), n));
}

namespace detail {

// Does the interval possibly contain (k + offset) * pi?
inline bool may_contain_pi_multiple(const Interval& x, double k_plus_offset) {
    Interval p = pi_interval() * Interval(k_plus_offset);
    return intersects(x, p);
}

inline const double kTrigDomain = 2 * std::numbers::pi + 1.0 + 1e-9;

} // namespace detail

/// Enclosure of sin over the interval. Rigorous range reduction is only
/// performed for |x| <= 2*pi + 1 (all campaign arguments); wider arguments
/// return [-1, 1].
inline Interval sin(const Interval& a) {
    if (a.lo() == 0 && a.hi() == 0) return Interval(0.0);
    if (a.mag() > detail::kTrigDomain) return Interval(-1.0, 1.0);
    double lo = std::min(detail::lib_down(std::sin(a.lo())), detail::lib_down(std::sin(a.hi())));
    double hi = std::max(detail::lib_up(std::sin(a.lo())), detail::lib_up(std::sin(a.hi())));
    for (int k = -3; k <= 3; ++k) {
        if (detail::may_contain_pi_multiple(a, k + 0.5)) {
            if (k % 2 == 0) hi = 1.0;   // sin(pi/2 + 2m*pi) = 1
            else lo = -1.0;
        }
    }
    return make_interval_unchecked(std::max(lo, -1.0), std::min(hi, 1.0));
}

inline Interval cos(const Interval& a) {
    if (a.lo() == 0 && a.hi() == 0) return Interval(1.0);
    if (a.mag() > detail::kTrigDomain) return Interval(-1.0, 1.0);
    double lo = std::min(detail::lib_down(std::cos(a.lo())), detail::lib_down(std::cos(a.hi())));
    double hi = std::max(detail::lib_up(std::cos(a.lo())), detail::lib_up(std::cos(a.hi())));
    for (int k = -3; k <= 3; ++k) {
        if (detail::may_contain_pi_multiple(a, (double)k)) {
            if (k % 2 == 0) hi = 1.0;   // cos(2m*pi) = 1
            else lo = -1.0;
        }
    }
    return make_interval_unchecked(std::max(lo, -1.0), std::min(hi, 1.0));
}

inline Interval sinh(const Interval& a) {
    double lo = a.lo() == 0 ? 0.0 : detail::lib_down(std::sinh(a.lo()));
    double hi = a.hi() == 0 ? 0.0 : detail::lib_up(std::sinh(a.hi()));
    if (!std::isfinite(lo) || !std::isfinite(hi)) throw OverflowError("sinh overflow");
    return make_interval_unchecked(lo, hi);
}

inline Interval cosh(const Interval& a) {
    double m = a.mag();
    double hi = detail::lib_up(std::cosh(m));
    if (!std::isfinite(hi)) throw OverflowError("cosh overflow");
    double lo;
    if (a.contains(0.0)) lo = 1.0;
    else lo = std::max(1.0, detail::lib_down(std::cosh(a.mig())));
    return make_interval_unchecked(lo, std::max(lo, hi));
}

inline Interval exp(const Interval& a) {
    double lo = a.lo() == 0 ? 1.0 : std::max(0.0, detail::lib_down(std::exp(a.lo())));
    double hi = a.hi() == 0 ? 1.0 : detail::lib_up(std::exp(a.hi()));
    if (!std::isfinite(hi)) throw OverflowError("exp overflow");
    return make_interval_unchecked(lo, hi);
}

/// Split into two intervals covering the parent exactly. The geometric
/// strategy splits at sqrt(lo*hi)*sign and requires sign-definite endpoints.
inline std::pair<Interval, Interval> split(const Interval& a, SplitStrategy strategy) {
    if (!(width(a) > 0)) throw std::domain_error("split: zero-width interval");
    double m;
    if (strategy == SplitStrategy::geometric) {
        if (!(a.lo() > 0 || a.hi() < 0)) throw GeometricSplitUndefined();
        double s = std::sqrt(a.lo() * a.hi());
        m = a.lo() > 0 ? s : -s;
        if (!(m > a.lo() && m < a.hi())) m = midpoint(a);
    } else {
        m = midpoint(a);
    }
    if (!(m > a.lo() && m < a.hi())) throw std::domain_error("split: interval too narrow to split");
    return {make_interval_unchecked(a.lo(), m), make_interval_unchecked(m, a.hi())};
}

} // namespace rq
