#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "rigorquad/taylor.hpp"

namespace rq {

enum class Method { gauss_legendre, taylor_singular };

/// Axis-aligned integration box with its subdivision policy.
struct Region {
    Interval box_y;
    std::optional<Interval> box_z; // absent for 1D
    SplitStrategy split_y = SplitStrategy::arithmetic;
    SplitStrategy split_z = SplitStrategy::arithmetic;
    int max_depth = 0;
    Method method = Method::gauss_legendre;
    std::string label; // used in diagnostics (term/region/cell)
};

struct QuadResult {
    Interval enclosure;
    long cells_evaluated = 0;
    long cells_rejected_then_split = 0;
    long fallbacks_used = 0;
    bool max_depth_reached = false;
};

/// One-variable integrand as interval-evaluable closures. `value` encloses f
/// over a box; `derivative` encloses f^(k) over a box. The num/den closures
/// provide derivative enclosures of the quotient decomposition f = num/den
/// for the singular scheme (unused by pure GL regions).
struct Fn1D {
    std::function<Interval(const Interval&)> value;
    std::function<Interval(const Interval&, int)> derivative;
    std::function<Interval(const Interval&, int)> num_derivative;
    std::function<Interval(const Interval&, int)> den_derivative;
    int num_ord = 0;
    int den_ord = 0;
};

/// Two-variable integrand; `derivative4(cy, cz, axis)` encloses the pure
/// fourth partial along axis 0 (first variable) or 1 over the box, and the
/// num/den closures enclose mixed partials over a given expansion box pair.
struct Fn2D {
    std::function<Interval(const Interval&, const Interval&)> value;
    std::function<Interval(const Interval&, const Interval&, int)> derivative4;
    std::function<Interval(const Interval&, const Interval&, int, int)> num_partial;
    std::function<Interval(const Interval&, const Interval&, int, int)> den_partial;
    int num_y = 0, num_z = 0, den_y = 0, den_z = 0;
};

// ---- Gauss-Legendre order 2 with Lagrange remainder ----

namespace detail {

/// Enclosures of the two node abscissae m -+ (b-a)/2 * sqrt(3)/3. The
/// extended-precision evaluation is accurate to well under one double ulp,
/// so one nextafter step outward encloses the exact irrational nodes; this
/// is a few ulps tighter than composing interval operations, which matters
/// because node width is amplified by f' in the integrand evaluation.
inline std::pair<Interval, Interval> gl2_nodes(const Interval& cell) {
    static const long double s3 = sqrtl(3.0L) / 3.0L;
    long double m = ((long double)cell.lo() + cell.hi()) / 2;
    long double r = ((long double)cell.hi() - cell.lo()) / 2;
    long double lo = m - r * s3, hi = m + r * s3;
    // A handful of 64-bit-mantissa operations: 1e-18 relative margin covers
    // the extended-precision error before directed rounding to double.
    long double elo = fabsl(lo) * 1e-18L, ehi = fabsl(hi) * 1e-18L;
    return {make_interval_unchecked(ld_down(lo - elo), ld_up(lo + elo)),
            make_interval_unchecked(ld_down(hi - ehi), ld_up(hi + ehi))};
}

} // namespace detail

/// Enclosure of the integral over `cell` by the two-node rule:
///   (b-a)/2 (f(m+r/sqrt3) + f(m-r/sqrt3)) + (b-a)^5/4320 f''''([a,b]).
template <class F>
Interval gl2_1d(const F& f, const Interval& cell) {
    Interval a(cell.lo()), b(cell.hi());
    Interval len = b - a;
    Interval half = len / Interval(2.0);
    auto [nlo, nhi] = detail::gl2_nodes(cell);
    Interval s = f.value(nhi) + f.value(nlo);
    Interval rem = pow_i(len, 5) / Interval(4320.0) * f.derivative(cell, 4);
    return half * s + rem;
}

/// Tensor-product GL2: four node evaluations plus one per-axis remainder
/// term, each bounding the iterated-integral error with the pure 4th partial
/// over the whole cell.
template <class F>
Interval gl2_2d(const F& f, const Interval& cell_y, const Interval& cell_z) {
    Interval ay(cell_y.lo()), by(cell_y.hi()), az(cell_z.lo()), bz(cell_z.hi());
    Interval ly = by - ay, lz = bz - az;
    Interval hy = ly / Interval(2.0), hz = lz / Interval(2.0);
    auto [ylo, yhi] = detail::gl2_nodes(cell_y);
    auto [zlo, zhi] = detail::gl2_nodes(cell_z);
    Interval s = f.value(yhi, zhi) + f.value(yhi, zlo) + f.value(ylo, zhi) + f.value(ylo, zlo);
    Interval rem_y = pow_i(ly, 5) * lz / Interval(4320.0) * f.derivative4(cell_y, cell_z, 0);
    Interval rem_z = ly * pow_i(lz, 5) / Interval(4320.0) * f.derivative4(cell_y, cell_z, 1);
    return hy * hz * s + rem_y + rem_z;
}

// ---- Taylor singular-quotient integration ----

namespace detail {

/// [x^e / e] evaluated between the cell endpoints, with interval powers so
/// the difference is rigorous for either sign of the cell.
inline Interval monomial_primitive_diff(const Interval& cell, int e) {
    Interval hi_pow = pow_i(Interval(cell.hi()), e);
    Interval lo_pow = pow_i(Interval(cell.lo()), e);
    return (hi_pow - lo_pow) / Interval((double)e);
}

} // namespace detail

/// Encloses the integral of num/den over a cell touching the singular point
/// 0, where num vanishes to order num_ord and den to order den_ord:
/// replace both by their leading interval Taylor term over A = hull({0},cell)
/// and integrate the resulting monomial ratio exactly.
template <class F>
Interval taylor_singular_1d(const F& f, const Interval& cell) {
    int ny = f.num_ord, dy = f.den_ord;
    Interval a = hull_with_zero(cell);
    Interval den = f.den_derivative(a, dy);
    if (den.contains(0.0)) throw ZeroInDenominatorCoefficient();
    Interval num = f.num_derivative(a, ny);
    Interval ratio = num / den * (factorial_interval(dy) / factorial_interval(ny));
    return ratio * detail::monomial_primitive_diff(cell, 1 + ny - dy);
}

/// Two-variable analogue. An axis whose orders are (0,0) is nonsingular in
/// that variable: its expansion box is the cell itself (no hull with zero)
/// and its monomial factor reduces to the cell length.
template <class F>
Interval taylor_singular_2d(const F& f, const Interval& cell_y, const Interval& cell_z) {
    int ny = f.num_y, nz = f.num_z, dy = f.den_y, dz = f.den_z;
    Interval a = (ny == 0 && dy == 0) ? cell_y : hull_with_zero(cell_y);
    Interval b = (nz == 0 && dz == 0) ? cell_z : hull_with_zero(cell_z);
    Interval den = f.den_partial(a, b, dy, dz);
    if (den.contains(0.0)) throw ZeroInDenominatorCoefficient();
    Interval num = f.num_partial(a, b, ny, nz);
    Interval ratio = num / den *
                     (factorial_interval(dy) * factorial_interval(dz) /
                      (factorial_interval(ny) * factorial_interval(nz)));
    return ratio * detail::monomial_primitive_diff(cell_y, 1 + ny - dy) *
           detail::monomial_primitive_diff(cell_z, 1 + nz - dz);
}

// ---- adaptive subdivision ----

namespace detail {

inline bool accept_enclosure(const Interval& e, double abs_tol, double rel_tol) {
    double w = width(e);
    return w <= abs_tol || w <= rel_tol * std::abs(midpoint(e));
}

/// Split with geometric-to-arithmetic fallback; nullopt when the interval is
/// too narrow to split at all (adjacent machine numbers).
inline std::optional<std::pair<Interval, Interval>> try_split(const Interval& a, SplitStrategy s) {
    try {
        return split(a, s);
    } catch (const GeometricSplitUndefined&) {
        try {
            return split(a, SplitStrategy::arithmetic);
        } catch (const std::domain_error&) {
            return std::nullopt;
        }
    } catch (const std::domain_error&) {
        return std::nullopt;
    }
}

template <class F>
std::optional<Interval> eval_cell_1d(const F& f, const Region& r, const Interval& cell, long& fallbacks) {
    try {
        if (r.method == Method::taylor_singular) {
            try {
                return taylor_singular_1d(f, cell);
            } catch (const ZeroInDenominatorCoefficient&) {
                ++fallbacks;
            } catch (const DivisionByZeroInterval&) {
                ++fallbacks;
            }
        }
        return gl2_1d(f, cell);
    } catch (const DivisionByZeroInterval&) {
        return std::nullopt;
    } catch (const OverflowError&) {
        return std::nullopt;
    }
}

template <class F>
std::optional<Interval> eval_cell_2d(const F& f, const Region& r, const Interval& cy, const Interval& cz,
                                     long& fallbacks) {
    try {
        if (r.method == Method::taylor_singular) {
            try {
                return taylor_singular_2d(f, cy, cz);
            } catch (const ZeroInDenominatorCoefficient&) {
                ++fallbacks;
            } catch (const DivisionByZeroInterval&) {
                ++fallbacks;
            }
        }
        return gl2_2d(f, cy, cz);
    } catch (const DivisionByZeroInterval&) {
        return std::nullopt;
    } catch (const OverflowError&) {
        return std::nullopt;
    }
}

} // namespace detail

/// Depth-first adaptive integration over a 1D region. Cells are accepted when
/// their enclosure width meets the absolute or relative tolerance, split
/// otherwise; at max_depth the (possibly wide) enclosure is accepted, and an
/// evaluation failure there raises CellUnresolvable. Traversal is low-child
/// first, so the accumulated sum order is fixed (lexicographic by cell origin)
/// and results are bit-identical across runs.
template <class F>
QuadResult adaptive_integrate(const F& f, const Region& region, double abs_tol, double rel_tol) {
    QuadResult res;
    res.enclosure = Interval(0.0);

    struct Rec {
        const F& f;
        const Region& r;
        double abs_tol, rel_tol;
        QuadResult& out;
        void go(const Interval& cell, int depth) {
            std::optional<Interval> e = detail::eval_cell_1d(f, r, cell, out.fallbacks_used);
            ++out.cells_evaluated;
            bool at_limit = depth >= r.max_depth;
            if (e && (at_limit || detail::accept_enclosure(*e, abs_tol, rel_tol))) {
                if (at_limit && !detail::accept_enclosure(*e, abs_tol, rel_tol)) out.max_depth_reached = true;
                out.enclosure += *e;
                return;
            }
            if (at_limit) throw CellUnresolvable(r.label + " y=" + cell.str());
            ++out.cells_rejected_then_split;
            auto kids = detail::try_split(cell, r.split_y);
            if (!kids) {
                // Unsplittable sliver: keep what we have or give up.
                if (e) { out.enclosure += *e; return; }
                throw CellUnresolvable(r.label + " y=" + cell.str());
            }
            go(kids->first, depth + 1);
            go(kids->second, depth + 1);
        }
    } rec{f, region, abs_tol, rel_tol, res};

    rec.go(region.box_y, 0);
    return res;
}

/// 2D variant: rejected cells split into four children (both axes), visited
/// in lexicographic order of the child origins.
template <class F>
QuadResult adaptive_integrate_2d(const F& f, const Region& region, double abs_tol, double rel_tol) {
    QuadResult res;
    res.enclosure = Interval(0.0);

    struct Rec {
        const F& f;
        const Region& r;
        double abs_tol, rel_tol;
        QuadResult& out;
        void go(const Interval& cy, const Interval& cz, int depth) {
            std::optional<Interval> e = detail::eval_cell_2d(f, r, cy, cz, out.fallbacks_used);
            ++out.cells_evaluated;
            bool at_limit = depth >= r.max_depth;
            if (e && (at_limit || detail::accept_enclosure(*e, abs_tol, rel_tol))) {
                if (at_limit && !detail::accept_enclosure(*e, abs_tol, rel_tol)) out.max_depth_reached = true;
                out.enclosure += *e;
                return;
            }
            if (at_limit) throw CellUnresolvable(r.label + " y=" + cy.str() + " z=" + cz.str());
            ++out.cells_rejected_then_split;
            auto ky = detail::try_split(cy, r.split_y);
            auto kz = detail::try_split(cz, r.split_z);
            if (!ky && !kz) {
                if (e) { out.enclosure += *e; return; }
                throw CellUnresolvable(r.label + " y=" + cy.str() + " z=" + cz.str());
            }
            if (ky && kz) {
                go(ky->first, kz->first, depth + 1);
                go(ky->first, kz->second, depth + 1);
                go(ky->second, kz->first, depth + 1);
                go(ky->second, kz->second, depth + 1);
            } else if (ky) {
                go(ky->first, cz, depth + 1);
                go(ky->second, cz, depth + 1);
            } else {
                go(cy, kz->first, depth + 1);
                go(cy, kz->second, depth + 1);
            }
        }
    } rec{f, region, abs_tol, rel_tol, res};

    rec.go(region.box_y, *region.box_z, 0);
    return res;
}

} // namespace rq
