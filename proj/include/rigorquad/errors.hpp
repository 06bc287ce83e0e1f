#pragma once

#include <stdexcept>
#include <string>

namespace rq {

/// Thrown when an interval divisor contains zero. Downstream integration
/// code treats this as the signal to subdivide or fall back to quadrature.
struct DivisionByZeroInterval : std::runtime_error {
    DivisionByZeroInterval() : std::runtime_error("interval division by zero-containing interval") {}
    explicit DivisionByZeroInterval(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an elementary function image is not finite at an endpoint.
struct OverflowError : std::runtime_error {
    explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

/// Geometric splitting requires sign-definite endpoints.
struct GeometricSplitUndefined : std::runtime_error {
    GeometricSplitUndefined() : std::runtime_error("geometric split requires sign(lo) == sign(hi) != 0") {}
};

/// The denominator's leading Taylor coefficient encloses zero, so the
/// singular-quotient formula cannot be applied on this cell.
struct ZeroInDenominatorCoefficient : std::runtime_error {
    ZeroInDenominatorCoefficient() : std::runtime_error("zero enclosed in denominator Taylor coefficient") {}
};

/// A cell at maximum subdivision depth could not be evaluated by any method.
struct CellUnresolvable : std::runtime_error {
    std::string cell;
    explicit CellUnresolvable(std::string cell_desc)
        : std::runtime_error("unresolvable cell at maximum depth: " + cell_desc), cell(std::move(cell_desc)) {}
};

struct UnknownTerm : std::runtime_error {
    explicit UnknownTerm(const std::string& id) : std::runtime_error("unknown term id: " + id) {}
};

} // namespace rq
