#pragma once

#include <map>
#include <string>

#include "rigorquad/interval.hpp"

namespace rq {

/// Decode one published enclosure cell. Two syntaxes:
///   "[lo,hi]"          — explicit endpoints, decimal or scientific;
///   "base^sup_sub"     — shorthand where the superscript and subscript each
///                        extend the shared leading digits, e.g.
///                        "-21.93^58_09" = [-21.9358, -21.9309] and
///                        "1^4.9_5.1"   = [14.9, 15.1].
/// Endpoints are widened one ulp outward so the decoded interval contains the
/// printed decimal values exactly.
Interval decode_reference_cell(const std::string& text);

/// Published per-(term, region-class) enclosures for the 41 two-variable
/// terms. Region classes: nonsingular, singular-center, singular-first,
/// singular-second.
const std::map<std::pair<std::string, std::string>, Interval>& reference_table();

/// Published enclosures of the first-derivative value at the two endpoints of
/// the curve-amplitude range (positive at the lower endpoint, negative at the
/// upper one).
Interval reference_part1_low_A();  // [0.00001, 0.00027]
Interval reference_part1_high_A(); // [-0.00028, -0.00002]

/// Published enclosure and lower bound for the second-derivative total.
Interval reference_part2_total();         // [38.706, 48.787]
double reference_part2_total_min();       // 30

} // namespace rq
