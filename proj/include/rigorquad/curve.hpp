#pragma once

#include "rigorquad/taylor.hpp"

namespace rq {

/// Parameters of the interface curve family
///   z1(x) = x - (1+eps) sin x,   z2(x) = A sin 2x.
struct CurveParams {
    Interval eps;
    Interval A;

    CurveParams(const Interval& eps_, const Interval& A_) : eps(eps_), A(A_) {
        // One ulp of slack: the decimal bounds are not machine numbers and
        // callers pass rigorous (outward-widened) enclosures of them.
        if (!(eps.lo() >= 0.0 && eps.hi() <= detail::next_up(1e-6)))
            throw std::invalid_argument("CurveParams: eps outside [0, 1e-6]");
        if (!(A.lo() >= detail::next_down(1.08050) && A.hi() <= detail::next_up(1.08055)))
            throw std::invalid_argument("CurveParams: A outside [1.08050, 1.08055]");
    }

    static Interval amplitude_low() { return Interval::from_decimal("1.08050"); }
    static Interval amplitude_high() { return Interval::from_decimal("1.08055"); }
    static Interval amplitude_full() { return hull(amplitude_low(), amplitude_high()); }
    static Interval eps_full() { return Interval(0.0, 1e-6); }
};

/// The curve and its x-derivatives at one argument. T is Interval, a jet
/// type, or a plain floating scalar (test oracles).
template <class T>
struct CurveVals {
    T z1, z1x, z1xx, z1xxx;
    T z2, z2x, z2xx;
};

template <class T>
CurveVals<T> curve_eval(const CurveParams& p, const T& x) {
    using std::sin;
    using std::cos;
    T ope = constant_like(x, Interval(1.0) + p.eps); // 1 + eps
    T a = constant_like(x, p.A);
    T two = constant_like(x, Interval(2.0));
    T sx = sin(x), cx = cos(x);
    // Double-angle forms keep every trig argument within the range-reduction
    // domain even when x is a difference of two angles in [-pi, pi].
    T s2x = two * sx * cx;
    T c2x = cx * cx - sx * sx;
    CurveVals<T> v{
        x - ope * sx,             // z1
        one_like(x) - ope * cx,   // z1x
        ope * sx,                 // z1xx
        ope * cx,                 // z1xxx
        a * s2x,                  // z2
        two * a * c2x,            // z2x
        -constant_like(x, Interval(4.0)) * a * s2x, // z2xx
    };
    return v;
}

/// The recurring building blocks of the integrands, formed from curve
/// differences between arguments xa and xb:
///   s1 = sin(z1(xa)-z1(xb)), c1 = cos(..), sh/ch = sinh/cosh(z2(xa)-z2(xb)),
///   u1 = z1x(xa)-z1x(xb), u2 = z2x(xa)-z2x(xb), v1/v2 second derivatives,
///   w1 = z1xxx difference, den = ch - c1, bracket = sh*u2 + s1*u1.
template <class T>
struct DiffBlocks {
    T s1, c1, sh, ch;
    T u1, u2, v1, v2, w1;
    T den, bracket;
};

/// All differences go through the half-angle product identities
///   sin a - sin b = 2 cos(s) sin(h),  cos a - cos b = -2 sin(s) sin(h)
/// with s = (a+b)/2, h = (a-b)/2, so that the smallness of a-b survives
/// interval evaluation (a plain subtraction of two O(1) enclosures loses it
/// and the denominator enclosure would spuriously contain zero). For the
/// same reason the caller must supply dd = xa - xb in a dependency-free
/// form (e.g. z for arguments -y and -y-z, where the subtraction xa - xb
/// would re-widen by twice the y box).
template <class T>
DiffBlocks<T> diff_blocks(const CurveParams& p, const T& xa, const T& xb, const T& dd) {
    using std::sin;
    using std::cos;
    using std::sinh;
    using std::cosh;
    T ope = constant_like(xa, Interval(1.0) + p.eps); // 1 + eps
    T a4 = constant_like(xa, Interval(4.0) * p.A);
    T a16 = constant_like(xa, Interval(16.0) * p.A);
    T two = constant_like(xa, Interval(2.0));
    T s = scale_div(xa + xb, Interval(2.0));
    T h = scale_div(dd, Interval(2.0));
    T ss = sin(s), cs = cos(s);
    T sh2 = sin(h), ch2 = cos(h);
    T cos2s = cs * cs - ss * ss;          // cos(a+b)
    T hh = sh2 * ch2;                     // sin(a-b)/2
    T d1 = dd - ope * (two * cs * sh2);   // z1(a) - z1(b)
    T d2 = a4 * cos2s * hh;               // z2(a) - z2(b) = 2A(sin 2a - sin 2b)/2...
    T u1 = ope * (two * ss * sh2);        // z1x(a) - z1x(b) = -(1+eps)(cos a - cos b)
    DiffBlocks<T> b{
        sin(d1), cos(d1), sinh(d2), cosh(d2),
        u1,
        -a16 * (ss * cs) * hh,            // z2x diff = 2A(cos 2a - cos 2b)
        ope * (two * cs * sh2),           // z1xx diff = (1+eps)(sin a - sin b)
        -a16 * cos2s * hh,                // z2xx diff = -4A(sin 2a - sin 2b)
        -u1,                              // z1xxx diff = (1+eps)(cos a - cos b)
        zero_like(xa), zero_like(xa),
    };
    b.den = b.ch - b.c1;
    b.bracket = b.sh * b.u2 + b.s1 * b.u1;
    return b;
}

} // namespace rq
