#pragma once

#include <cassert>
#include <utility>
#include <vector>

#include "rigorquad/interval.hpp"

namespace rq {

// ---- scalar helpers shared by interval, jet, and plain-float evaluation ----

inline Interval zero_like(const Interval&) { return Interval(0.0); }
inline Interval one_like(const Interval&) { return Interval(1.0); }
inline Interval constant_like(const Interval&, const Interval& v) { return v; }
inline Interval scale(const Interval& x, const Interval& s) { return x * s; }
inline Interval scale_div(const Interval& x, const Interval& s) { return x / s; }

// Non-rigorous point evaluation (test oracles) reuses the same generic
// expression templates with a plain floating scalar.
inline long double zero_like(long double) { return 0.0L; }
inline long double one_like(long double) { return 1.0L; }
inline long double constant_like(long double, const Interval& v) { return (long double)midpoint(v); }
inline long double scale(long double x, const Interval& s) { return x * (long double)midpoint(s); }
inline long double scale_div(long double x, const Interval& s) { return x / (long double)midpoint(s); }

template <class T> T pow_n(const T& x, int n) {
    T r = one_like(x);
    for (int i = 0; i < n; ++i) r = r * x;
    return r;
}
inline Interval pow_n(const Interval& x, int n) { return pow_i(x, n); }
inline long double pow_n(long double x, int n) { return std::pow(x, (long double)n); }

/// Exact factorial as a point interval (n <= 18 fits a double exactly).
inline Interval factorial_interval(int n) {
    double f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return Interval(f);
}

/// Truncated Taylor series (jet) with coefficients in an arbitrary ring T.
/// Nesting Jet<Jet<Interval>> yields two-variable models; coefficient k of
/// the outer jet then holds the series in the inner variable.
/// Arithmetic truncates strictly at `order`; remainder handling is the
/// caller's job (Lagrange form via the top coefficient over the box).
template <class T>
struct Jet {
    std::vector<T> c;

    explicit Jet(std::vector<T> coeffs) : c(std::move(coeffs)) { assert(!c.empty()); }

    int order() const { return (int)c.size() - 1; }

    static Jet constant(int order, const T& v) {
        std::vector<T> cs((size_t)order + 1, zero_like(v));
        cs[0] = v;
        return Jet(std::move(cs));
    }

    /// The identity function expanded over `box`: (box, 1, 0, ...).
    static Jet variable(int order, const T& box) {
        assert(order >= 1);
        std::vector<T> cs((size_t)order + 1, zero_like(box));
        cs[0] = box;
        cs[1] = one_like(box);
        return Jet(std::move(cs));
    }
};

template <class T> Jet<T> zero_like(const Jet<T>& j) { return Jet<T>::constant(j.order(), zero_like(j.c[0])); }
template <class T> Jet<T> one_like(const Jet<T>& j) { return Jet<T>::constant(j.order(), one_like(j.c[0])); }
template <class T> Jet<T> constant_like(const Jet<T>& j, const Interval& v) {
    return Jet<T>::constant(j.order(), constant_like(j.c[0], v));
}

template <class T> Jet<T> scale(const Jet<T>& a, const Interval& s) {
    Jet<T> r = a;
    for (auto& x : r.c) x = scale(x, s);
    return r;
}
template <class T> Jet<T> scale_div(const Jet<T>& a, const Interval& s) {
    Jet<T> r = a;
    for (auto& x : r.c) x = scale_div(x, s);
    return r;
}

template <class T> Jet<T> operator-(const Jet<T>& a) {
    Jet<T> r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

template <class T> Jet<T> operator+(const Jet<T>& a, const Jet<T>& b) {
    assert(a.order() == b.order());
    Jet<T> r = a;
    for (size_t k = 0; k < r.c.size(); ++k) r.c[k] = r.c[k] + b.c[k];
    return r;
}

template <class T> Jet<T> operator-(const Jet<T>& a, const Jet<T>& b) {
    assert(a.order() == b.order());
    Jet<T> r = a;
    for (size_t k = 0; k < r.c.size(); ++k) r.c[k] = r.c[k] - b.c[k];
    return r;
}

template <class T> Jet<T> operator*(const Jet<T>& a, const Jet<T>& b) {
    assert(a.order() == b.order());
    Jet<T> r = zero_like(a);
    for (size_t k = 0; k < r.c.size(); ++k) {
        T acc = zero_like(a.c[0]);
        for (size_t i = 0; i <= k; ++i) acc = acc + a.c[i] * b.c[k - i];
        r.c[k] = acc;
    }
    return r;
}

/// Power-series division; requires the leading coefficient of b to be
/// invertible (for intervals: to exclude zero), else DivisionByZeroInterval.
template <class T> Jet<T> operator/(const Jet<T>& a, const Jet<T>& b) {
    assert(a.order() == b.order());
    Jet<T> q = zero_like(a);
    q.c[0] = a.c[0] / b.c[0];
    for (size_t k = 1; k < q.c.size(); ++k) {
        T acc = a.c[k];
        for (size_t i = 1; i <= k; ++i) acc = acc - b.c[i] * q.c[k - i];
        q.c[k] = acc / b.c[0];
    }
    return q;
}

// Coupled recurrences: with f = sin(a), g = cos(a),
//   k f_k = sum_{j=1..k} j a_j g_{k-j},  k g_k = -sum_{j=1..k} j a_j f_{k-j}.
template <class T> std::pair<Jet<T>, Jet<T>> sin_cos(const Jet<T>& a) {
    Jet<T> s = zero_like(a), c = zero_like(a);
    s.c[0] = sin(a.c[0]);
    c.c[0] = cos(a.c[0]);
    for (int k = 1; k <= a.order(); ++k) {
        T sk = zero_like(a.c[0]), ck = zero_like(a.c[0]);
        for (int j = 1; j <= k; ++j) {
            sk = sk + scale(a.c[j] * c.c[k - j], Interval((double)j));
            ck = ck - scale(a.c[j] * s.c[k - j], Interval((double)j));
        }
        s.c[k] = scale_div(sk, Interval((double)k));
        c.c[k] = scale_div(ck, Interval((double)k));
    }
    return {std::move(s), std::move(c)};
}

template <class T> std::pair<Jet<T>, Jet<T>> sinh_cosh(const Jet<T>& a) {
    Jet<T> s = zero_like(a), c = zero_like(a);
    s.c[0] = sinh(a.c[0]);
    c.c[0] = cosh(a.c[0]);
    for (int k = 1; k <= a.order(); ++k) {
        T sk = zero_like(a.c[0]), ck = zero_like(a.c[0]);
        for (int j = 1; j <= k; ++j) {
            sk = sk + scale(a.c[j] * c.c[k - j], Interval((double)j));
            ck = ck + scale(a.c[j] * s.c[k - j], Interval((double)j));
        }
        s.c[k] = scale_div(sk, Interval((double)k));
        c.c[k] = scale_div(ck, Interval((double)k));
    }
    return {std::move(s), std::move(c)};
}

template <class T> Jet<T> sin(const Jet<T>& a) { return sin_cos(a).first; }
template <class T> Jet<T> cos(const Jet<T>& a) { return sin_cos(a).second; }
template <class T> Jet<T> sinh(const Jet<T>& a) { return sinh_cosh(a).first; }
template <class T> Jet<T> cosh(const Jet<T>& a) { return sinh_cosh(a).second; }

template <class T> Jet<T> exp(const Jet<T>& a) {
    Jet<T> e = zero_like(a);
    e.c[0] = exp(a.c[0]);
    for (int k = 1; k <= a.order(); ++k) {
        T ek = zero_like(a.c[0]);
        for (int j = 1; j <= k; ++j) ek = ek + scale(a.c[j] * e.c[k - j], Interval((double)j));
        e.c[k] = scale_div(ek, Interval((double)k));
    }
    return e;
}

/// One-variable truncated model with interval coefficients.
using TaylorModel1 = Jet<Interval>;
/// Two-variable model: outer index = first variable, inner = second.
using TaylorModel2 = Jet<Jet<Interval>>;

/// Maximum supported expansion order (largest table requirement plus guard).
inline constexpr int kMaxJetOrder = 14;

inline TaylorModel1 jet_var(const Interval& box, int order) {
    return TaylorModel1::variable(order, box);
}

/// Seed the first variable of a two-variable model over box_y.
inline TaylorModel2 jet_var2_first(const Interval& box_y, const Interval& box_z, int oy, int oz) {
    Jet<Interval> inner_box = Jet<Interval>::constant(oz, box_y);
    (void)box_z;
    if (oy == 0) return TaylorModel2::constant(0, inner_box);
    return TaylorModel2::variable(oy, inner_box);
}

/// Seed the second variable of a two-variable model over box_z.
inline TaylorModel2 jet_var2_second(const Interval& box_y, const Interval& box_z, int oy, int oz) {
    (void)box_y;
    Jet<Interval> inner = oz == 0 ? Jet<Interval>::constant(0, box_z)
                                  : Jet<Interval>::variable(oz, box_z);
    return TaylorModel2::constant(oy, inner);
}

inline const Interval& jet_coeff(const TaylorModel2& m, int j, int k) { return m.c[(size_t)j].c[(size_t)k]; }

/// Encloses f^(k)(xi) for all xi in box, via jet evaluation of f.
template <class F> Interval derivative_enclosure(F&& f, const Interval& box, int k) {
    if (k == 0) return f(TaylorModel1::constant(0, box)).c[0];
    TaylorModel1 j = f(jet_var(box, k));
    return j.c[(size_t)k] * factorial_interval(k);
}

/// Encloses the mixed partial d^j/dy^j d^k/dz^k of f over box_y x box_z.
template <class F> Interval mixed_derivative_enclosure(F&& f, const Interval& box_y, const Interval& box_z,
                                                       int j, int k) {
    TaylorModel2 y = jet_var2_first(box_y, box_z, j, k);
    TaylorModel2 z = jet_var2_second(box_y, box_z, j, k);
    TaylorModel2 r = f(y, z);
    return jet_coeff(r, j, k) * factorial_interval(j) * factorial_interval(k);
}

} // namespace rq
