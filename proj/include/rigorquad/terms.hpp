#pragma once

#include <functional>
#include <map>
#include <string>

#include "rigorquad/curve.hpp"

namespace rq {

/// One registered integrand: its additive-decomposition metadata plus type-erased
/// evaluators over intervals (direct values), jets (derivative enclosures),
/// and plain long double (the non-rigorous point oracle used in tests).
struct TermSpec {
    std::string id;
    int arity = 2; // 1 or 2 integration variables
    int factor = 1; // printed leading multiplier, already includes symmetry for 1D terms

    // Vanishing orders of the numerator / denominator at the singular point,
    // per variable (the z entries are zero for 1D terms).
    int num_y = 0, num_z = 0, den_y = 0, den_z = 0;
    int outer_pow = 1, inner_pow = 0; // denominator powers: den^p, (den_i1 den_i2)^q

    // 1D evaluators (first integration variable only).
    std::function<Interval(const CurveParams&, const Interval&)> value1;
    std::function<Interval(const CurveParams&, const Interval&, int)> deriv1;
    std::function<Interval(const CurveParams&, const Interval&, int)> num1;
    std::function<Interval(const CurveParams&, const Interval&, int)> den1;
    std::function<long double(const CurveParams&, long double)> point1;

    // 2D evaluators.
    std::function<Interval(const CurveParams&, const Interval&, const Interval&)> value2;
    std::function<Interval(const CurveParams&, const Interval&, const Interval&, int)> deriv4_2;
    std::function<Interval(const CurveParams&, const Interval&, const Interval&, int, int)> num2;
    std::function<Interval(const CurveParams&, const Interval&, const Interval&, int, int)> den2;
    std::function<long double(const CurveParams&, long double, long double)> point2;
};

/// All 3 one-variable and 41 two-variable integrands, keyed by id
/// (A1..A3, B11..B76). Built once; safe for concurrent reads.
const std::map<std::string, TermSpec>& registry();

/// Startup self-check: for every term, the numerator and denominator jets
/// over a tiny box at the singular point must have all coefficients below the
/// declared vanishing orders enclosing zero. Throws std::logic_error on
/// violation.
void validate_registry();

/// Machine-readable dump of the registry structure (ids, orders, factors)
/// for external audit.
std::string registry_manifest_json();

} // namespace rq
