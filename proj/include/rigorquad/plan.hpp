#pragma once

#include <map>
#include <string>
#include <vector>

#include "rigorquad/quad.hpp"

namespace rq {

/// Tiling parameters. Depth is keyed by region class; entries missing from
/// `depth` fall back to the per-part defaults (including the deeper setting
/// that the two cubic-denominator terms need on the z-axis strip).
struct PlanConfig {
    double delta = 0;
    double abs_tol = 0, rel_tol = 0;
    std::map<std::string, int> depth;

    static PlanConfig part1_defaults(); // delta 2^-9, tol 1e-6, depths 18/12
    static PlanConfig part2_defaults(); // delta 2^-5, tol 1e-4, depths 10/8/8/9
};

struct PlannedRegion {
    std::string region_class;
    Region region;
};

/// Region classes: 1D terms use {"singular", "nonsingular"}; 2D terms use
/// {"nonsingular", "singular-first", "singular-second", "singular-center"}
/// (first = small-y strip, second = small-z strip).
std::vector<std::string> region_classes(int arity);

/// The reduced-domain tiling for one term: 1D covers [0, pi]; 2D covers
/// [0, pi] x [-pi, pi] (the other half is recovered by symmetry). The outer
/// pi endpoints use the upper bound of the pi enclosure so the tiling
/// overshoots rather than undershoots the true domain.
std::vector<PlannedRegion> region_plan(int arity, const std::string& term, const PlanConfig& cfg);

} // namespace rq
