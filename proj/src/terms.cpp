#include "rigorquad/terms.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace rq {
namespace {

// Every integrand evaluated at the origin of the outer variable has the shape
//   1D:  factor * ON(o) / o.den^p
//   2D:  factor * ON(o) / o.den^p * ( IN(i1)/i1.den^q - IN(i2)/i2.den^q )
// where o, i1, i2 are the three difference-argument block sets
//   o  = blocks(0, -y),  i1 = blocks(0, -z),  i2 = blocks(-y, -y-z)
// and ON / IN are small products of the shared blocks. The singular scheme
// needs the same function as one global quotient, so the numerator clears
// both inner denominators:
//   Num = factor * ON(o) * ( IN(i1) i2.den^q - IN(i2) i1.den^q )
//   Den = o.den^p * (i1.den i2.den)^q.

template <class T, class ON>
T value1_expr(const CurveParams& p, int factor, int pp, const ON& on, const T& y) {
    DiffBlocks<T> o = diff_blocks(p, zero_like(y), -y, y);
    return constant_like(y, Interval((double)factor)) * on(o) / pow_n(o.den, pp);
}

template <class T, class ON>
T num1_expr(const CurveParams& p, int factor, const ON& on, const T& y) {
    DiffBlocks<T> o = diff_blocks(p, zero_like(y), -y, y);
    return constant_like(y, Interval((double)factor)) * on(o);
}

template <class T>
T den1_expr(const CurveParams& p, int pp, const T& y) {
    DiffBlocks<T> o = diff_blocks(p, zero_like(y), -y, y);
    return pow_n(o.den, pp);
}

template <class T, class ON, class IN>
T value2_expr(const CurveParams& p, int factor, int pp, int qq, const ON& on, const IN& in, const T& y,
              const T& z) {
    T zero = zero_like(y);
    DiffBlocks<T> o = diff_blocks(p, zero, -y, y);
    DiffBlocks<T> i1 = diff_blocks(p, zero, -z, z);
    DiffBlocks<T> i2 = diff_blocks(p, -y, -y - z, z);
    T inner = in(i1) / pow_n(i1.den, qq) - in(i2) / pow_n(i2.den, qq);
    return constant_like(y, Interval((double)factor)) * on(o) / pow_n(o.den, pp) * inner;
}

template <class T, class ON, class IN>
T num2_expr(const CurveParams& p, int factor, int qq, const ON& on, const IN& in, const T& y, const T& z) {
    T zero = zero_like(y);
    DiffBlocks<T> o = diff_blocks(p, zero, -y, y);
    DiffBlocks<T> i1 = diff_blocks(p, zero, -z, z);
    DiffBlocks<T> i2 = diff_blocks(p, -y, -y - z, z);
    T inner = in(i1) * pow_n(i2.den, qq) - in(i2) * pow_n(i1.den, qq);
    return constant_like(y, Interval((double)factor)) * on(o) * inner;
}

template <class T>
T den2_expr(const CurveParams& p, int pp, int qq, const T& y, const T& z) {
    T zero = zero_like(y);
    DiffBlocks<T> o = diff_blocks(p, zero, -y, y);
    DiffBlocks<T> i1 = diff_blocks(p, zero, -z, z);
    DiffBlocks<T> i2 = diff_blocks(p, -y, -y - z, z);
    return pow_n(o.den, pp) * pow_n(i1.den * i2.den, qq);
}

template <class ON>
TermSpec make_term1(const char* id, int factor, int pp, int num_ord, int den_ord, ON on) {
    TermSpec t;
    t.id = id;
    t.arity = 1;
    t.factor = factor;
    t.num_y = num_ord;
    t.den_y = den_ord;
    t.outer_pow = pp;
    t.inner_pow = 0;
    t.value1 = [=](const CurveParams& p, const Interval& y) { return value1_expr(p, factor, pp, on, y); };
    t.deriv1 = [=](const CurveParams& p, const Interval& box, int k) {
        return derivative_enclosure(
            [&](const TaylorModel1& j) { return value1_expr(p, factor, pp, on, j); }, box, k);
    };
    t.num1 = [=](const CurveParams& p, const Interval& box, int k) {
        return derivative_enclosure([&](const TaylorModel1& j) { return num1_expr(p, factor, on, j); },
                                    box, k);
    };
    t.den1 = [=](const CurveParams& p, const Interval& box, int k) {
        return derivative_enclosure([&](const TaylorModel1& j) { return den1_expr(p, pp, j); }, box, k);
    };
    t.point1 = [=](const CurveParams& p, long double y) { return value1_expr(p, factor, pp, on, y); };
    return t;
}

template <class ON, class IN>
TermSpec make_term2(const char* id, int factor, int pp, int qq, int ny, int nz, int dy, int dz, ON on,
                    IN in) {
    TermSpec t;
    t.id = id;
    t.arity = 2;
    t.factor = factor;
    t.num_y = ny;
    t.num_z = nz;
    t.den_y = dy;
    t.den_z = dz;
    t.outer_pow = pp;
    t.inner_pow = qq;
    t.value2 = [=](const CurveParams& p, const Interval& y, const Interval& z) {
        return value2_expr(p, factor, pp, qq, on, in, y, z);
    };
    t.deriv4_2 = [=](const CurveParams& p, const Interval& cy, const Interval& cz, int axis) {
        TaylorModel1 jy = axis == 0 ? jet_var(cy, 4) : TaylorModel1::constant(4, cy);
        TaylorModel1 jz = axis == 1 ? jet_var(cz, 4) : TaylorModel1::constant(4, cz);
        TaylorModel1 r = value2_expr(p, factor, pp, qq, on, in, jy, jz);
        return r.c[4] * factorial_interval(4);
    };
    t.num2 = [=](const CurveParams& p, const Interval& a, const Interval& b, int j, int k) {
        return mixed_derivative_enclosure(
            [&](const TaylorModel2& yy, const TaylorModel2& zz) {
                return num2_expr(p, factor, qq, on, in, yy, zz);
            },
            a, b, j, k);
    };
    t.den2 = [=](const CurveParams& p, const Interval& a, const Interval& b, int j, int k) {
        return mixed_derivative_enclosure(
            [&](const TaylorModel2& yy, const TaylorModel2& zz) { return den2_expr(p, pp, qq, yy, zz); },
            a, b, j, k);
    };
    t.point2 = [=](const CurveParams& p, long double y, long double z) {
        return value2_expr(p, factor, pp, qq, on, in, y, z);
    };
    return t;
}

std::map<std::string, TermSpec> build_registry() {
    std::map<std::string, TermSpec> r;
    auto put = [&r](TermSpec t) { r.emplace(t.id, std::move(t)); };

    // The shared block products. Naming: s1/c1 = sin/cos of the first-curve
    // difference, sh/ch the hyperbolics of the second, u/v/w first, second and
    // third derivative differences, br = sh*u2 + s1*u1.
    auto p2 = [](const auto& x) { return x * x; };
    auto p3 = [](const auto& x) { return x * x * x; };

    // One-variable terms (the outer-derivative factor 2 is part of the
    // printed form, including the symmetry reduction to [0, pi]).
    put(make_term1("A1", 2, 1, 2, 2, [](const auto& d) { return d.s1 * d.v1; }));
    put(make_term1("A2", 2, 1, 2, 2, [p2](const auto& d) { return d.c1 * p2(d.u1); }));
    put(make_term1("A3", -2, 2, 4, 4, [](const auto& d) { return d.s1 * d.u1 * d.bracket; }));

    // Two-variable terms. Arguments: factor, p, q, num_y, num_z, den_y, den_z.
    put(make_term2("B11", -1, 1, 1, 6, 4, 2, 4, [p2](const auto& d) { return d.s1 * p2(d.u1); },
                   [](const auto& d) { return d.s1 * d.u1; }));
    put(make_term2("B12", 1, 1, 1, 2, 4, 2, 4, [](const auto& d) { return d.c1 * d.v1; },
                   [](const auto& d) { return d.s1 * d.u1; }));
    put(make_term2("B13", -1, 2, 1, 6, 4, 4, 4,
                   [](const auto& d) { return d.c1 * d.u1 * d.bracket; },
                   [](const auto& d) { return d.s1 * d.u1; }));
    put(make_term2("B14", 1, 1, 1, 3, 4, 2, 4, [](const auto& d) { return d.c1 * d.u1; },
                   [p2](const auto& d) { return d.c1 * p2(d.u1); }));
    put(make_term2("B15", 1, 1, 1, 3, 4, 2, 4, [](const auto& d) { return d.c1 * d.u1; },
                   [](const auto& d) { return d.s1 * d.v1; }));
    put(make_term2("B16", -1, 1, 2, 3, 8, 2, 8, [](const auto& d) { return d.c1 * d.u1; },
                   [](const auto& d) { return d.s1 * d.u1 * d.bracket; }));

    put(make_term2("B21", 1, 1, 1, 3, 4, 2, 4, [](const auto& d) { return d.c1 * d.u1; },
                   [p2](const auto& d) { return d.c1 * p2(d.u1); }));
    put(make_term2("B22", -1, 2, 1, 5, 4, 4, 4, [](const auto& d) { return d.s1 * d.bracket; },
                   [p2](const auto& d) { return d.c1 * p2(d.u1); }));
    put(make_term2("B23", -1, 1, 1, 2, 6, 2, 4, [](const auto& d) { return d.s1; },
                   [p3](const auto& d) { return d.s1 * p3(d.u1); }));
    put(make_term2("B24", 2, 1, 1, 2, 4, 2, 4, [](const auto& d) { return d.s1; },
                   [](const auto& d) { return d.c1 * d.v1 * d.u1; }));
    put(make_term2("B25", -1, 1, 2, 2, 8, 2, 8, [](const auto& d) { return d.s1; },
                   [p2](const auto& d) { return d.c1 * p2(d.u1) * d.bracket; }));

    put(make_term2("B31", 1, 1, 1, 3, 4, 2, 4, [](const auto& d) { return d.c1 * d.u1; },
                   [](const auto& d) { return d.s1 * d.v1; }));
    put(make_term2("B32", -1, 2, 1, 5, 4, 4, 4, [](const auto& d) { return d.s1 * d.bracket; },
                   [](const auto& d) { return d.s1 * d.v1; }));
    put(make_term2("B33", 1, 1, 1, 2, 4, 2, 4, [](const auto& d) { return d.s1; },
                   [](const auto& d) { return d.c1 * d.v1 * d.u1; }));
    put(make_term2("B34", 1, 1, 1, 2, 4, 2, 4, [](const auto& d) { return d.s1; },
                   [](const auto& d) { return d.s1 * d.w1; }));
    put(make_term2("B35", -1, 1, 2, 2, 8, 2, 8, [](const auto& d) { return d.s1; },
                   [](const auto& d) { return d.s1 * d.v1 * d.bracket; }));

    put(make_term2("B41", -1, 1, 2, 3, 8, 2, 8, [](const auto& d) { return d.c1 * d.u1; },
                   [](const auto& d) { return d.s1 * d.u1 * d.sh * d.u2; }));
    put(make_term2("B42", 1, 2, 2, 5, 8, 4, 8, [](const auto& d) { return d.s1 * d.bracket; },
                   [](const auto& d) { return d.s1 * d.u1 * d.sh * d.u2; }));
    put(make_term2("B43", -1, 1, 2, 2, 8, 2, 8, [](const auto& d) { return d.s1; },
                   [p2](const auto& d) { return d.c1 * p2(d.u1) * d.sh * d.u2; }));
    put(make_term2("B44", -1, 1, 2, 2, 8, 2, 8, [](const auto& d) { return d.s1; },
                   [](const auto& d) { return d.s1 * d.v1 * d.sh * d.u2; }));
    put(make_term2("B45", -1, 1, 2, 2, 8, 2, 8, [](const auto& d) { return d.s1; },
                   [p2](const auto& d) { return d.s1 * d.u1 * d.ch * p2(d.u2); }));
    put(make_term2("B46", -1, 1, 2, 2, 8, 2, 8, [](const auto& d) { return d.s1; },
                   [](const auto& d) { return d.s1 * d.u1 * d.sh * d.v2; }));
    put(make_term2("B47", 2, 1, 3, 2, 12, 2, 12, [](const auto& d) { return d.s1; },
                   [](const auto& d) { return d.s1 * d.u1 * d.sh * d.u2 * d.bracket; }));

    put(make_term2("B51", -1, 1, 2, 3, 8, 2, 8, [](const auto& d) { return d.c1 * d.u1; },
                   [p2](const auto& d) { return p2(d.s1) * p2(d.u1); }));
    put(make_term2("B52", 1, 2, 2, 5, 8, 4, 8, [](const auto& d) { return d.s1 * d.bracket; },
                   [p2](const auto& d) { return p2(d.s1) * p2(d.u1); }));
    put(make_term2("B53", -2, 1, 2, 2, 8, 2, 8, [](const auto& d) { return d.s1; },
                   [p3](const auto& d) { return d.s1 * d.c1 * p3(d.u1); }));
    put(make_term2("B54", -2, 1, 2, 2, 8, 2, 8, [](const auto& d) { return d.s1; },
                   [p2](const auto& d) { return p2(d.s1) * d.u1 * d.v1; }));
    put(make_term2("B55", 2, 1, 3, 2, 12, 2, 12, [](const auto& d) { return d.s1; },
                   [p2](const auto& d) { return p2(d.s1) * p2(d.u1) * d.bracket; }));

    put(make_term2("B61", -1, 2, 1, 6, 4, 4, 4,
                   [p2](const auto& d) { return d.c1 * p2(d.u1) * d.sh; },
                   [](const auto& d) { return d.s1 * d.u2; }));
    put(make_term2("B62", -1, 2, 1, 4, 4, 4, 4, [](const auto& d) { return d.s1 * d.v1 * d.sh; },
                   [](const auto& d) { return d.s1 * d.u2; }));
    put(make_term2("B63", -1, 2, 1, 6, 4, 4, 4,
                   [](const auto& d) { return d.s1 * d.u1 * d.ch * d.u2; },
                   [](const auto& d) { return d.s1 * d.u2; }));
    put(make_term2("B64", 2, 3, 1, 8, 4, 6, 4,
                   [](const auto& d) { return d.s1 * d.u1 * d.sh * d.bracket; },
                   [](const auto& d) { return d.s1 * d.u2; }));
    put(make_term2("B65", -1, 2, 1, 5, 4, 4, 4, [](const auto& d) { return d.s1 * d.u1 * d.sh; },
                   [](const auto& d) { return d.c1 * d.u1 * d.u2; }));
    put(make_term2("B66", -1, 2, 1, 5, 4, 4, 4, [](const auto& d) { return d.s1 * d.u1 * d.sh; },
                   [](const auto& d) { return d.s1 * d.v2; }));
    put(make_term2("B67", 1, 2, 2, 5, 8, 4, 8, [](const auto& d) { return d.s1 * d.u1 * d.sh; },
                   [](const auto& d) { return d.s1 * d.u2 * d.bracket; }));

    put(make_term2("B71", -2, 2, 1, 6, 4, 4, 4,
                   [p2](const auto& d) { return d.s1 * d.c1 * p2(d.u1); },
                   [](const auto& d) { return d.s1 * d.u1; }));
    put(make_term2("B72", -1, 2, 1, 4, 4, 4, 4, [p2](const auto& d) { return p2(d.s1) * d.v1; },
                   [](const auto& d) { return d.s1 * d.u1; }));
    put(make_term2("B73", 2, 3, 1, 8, 4, 6, 4,
                   [p2](const auto& d) { return p2(d.s1) * d.u1 * d.bracket; },
                   [](const auto& d) { return d.s1 * d.u1; }));
    put(make_term2("B74", -1, 2, 1, 5, 4, 4, 4, [p2](const auto& d) { return p2(d.s1) * d.u1; },
                   [p2](const auto& d) { return d.c1 * p2(d.u1); }));
    put(make_term2("B75", -1, 2, 1, 5, 4, 4, 4, [p2](const auto& d) { return p2(d.s1) * d.u1; },
                   [](const auto& d) { return d.s1 * d.v1; }));
    put(make_term2("B76", 1, 2, 2, 5, 8, 4, 8, [p2](const auto& d) { return p2(d.s1) * d.u1; },
                   [](const auto& d) { return d.s1 * d.u1 * d.bracket; }));

    return r;
}

} // namespace

const std::map<std::string, TermSpec>& registry() {
    static const std::map<std::string, TermSpec> r = build_registry();
    return r;
}

void validate_registry() {
    CurveParams p{Interval(0.0, 1e-6), Interval(1.08050, 1.08055)};
    const double h1 = 0x1p-9, h2 = 0x1p-5;
    auto check = [](const std::string& id, const char* what, int j, int k, const Interval& coeff) {
        if (!coeff.contains(0.0)) {
            std::ostringstream os;
            os << "vanishing-order violation: " << id << ' ' << what << " coefficient (" << j << ','
               << k << ") = " << coeff.str();
            throw std::logic_error(os.str());
        }
    };
    for (const auto& [id, t] : registry()) {
        if (t.arity == 1) {
            Interval box(0.0, h1);
            for (int k = 0; k < t.num_y; ++k) check(id, "num", k, 0, t.num1(p, box, k));
            for (int k = 0; k < t.den_y; ++k) check(id, "den", k, 0, t.den1(p, box, k));
        } else {
            Interval a(0.0, h2), b(-h2, h2);
            for (int j = 0; j <= t.num_y; ++j)
                for (int k = 0; k <= t.num_z; ++k)
                    if (j < t.num_y || k < t.num_z) check(id, "num", j, k, t.num2(p, a, b, j, k));
            for (int j = 0; j <= t.den_y; ++j)
                for (int k = 0; k <= t.den_z; ++k)
                    if (j < t.den_y || k < t.den_z) check(id, "den", j, k, t.den2(p, a, b, j, k));
        }
    }
}

std::string registry_manifest_json() {
    nlohmann::json out;
    out["schema"] = "rigorquad-manifest-1";
    for (const auto& [id, t] : registry()) {
        nlohmann::json e;
        e["arity"] = t.arity;
        e["factor"] = t.factor;
        e["orders"] = {t.num_y, t.num_z, t.den_y, t.den_z};
        e["outer_pow"] = t.outer_pow;
        e["inner_pow"] = t.inner_pow;
        out["terms"][id] = e;
    }
    return out.dump(2);
}

} // namespace rq
