#pragma once

#include <optional>
#include <vector>

#include "rigorquad/plan.hpp"
#include "rigorquad/terms.hpp"

namespace rq {

struct CampaignConfig {
    // Zero means "use the per-part default" for delta and tolerances.
    double delta = 0;
    double abs_tol = 0;
    double rel_tol = 0;
    std::map<std::string, int> depth_overrides; // keyed by region class
    int workers = 1;
    double budget_secs = 0; // 0 = unlimited; enforced at task granularity
};

struct CellOutcome {
    std::string term;
    std::string region_class;
    QuadResult result;       // meaningful only when done
    bool done = false;       // false: skipped by the time budget
    double wall_secs = 0;
};

struct CampaignOutcome {
    std::vector<CellOutcome> cells; // fixed order: (term, region class)
    Interval total;                 // sum over completed cells only
    bool complete = true;           // every requested cell finished
};

/// Resolved plan parameters for a part (1 or 2) under a config.
PlanConfig resolve_plan(int part, const CampaignConfig& cfg);

/// Bind a term's evaluators to curve parameters for a given region class
/// (which fixes the per-variable expansion orders).
Fn1D bind_term_1d(const TermSpec& t, const CurveParams& p);
Fn2D bind_term_2d(const TermSpec& t, const CurveParams& p, const std::string& region_class);

/// Integrate one term over one region class and return the value on the full
/// domain scale: 2D enclosures carry the symmetry factor 2 (only half the
/// domain is tiled), 1D terms already include it in their printed factor.
QuadResult integrate_term_region(const CurveParams& p, const std::string& term,
                                 const std::string& region_class, const CampaignConfig& cfg);

/// First-derivative campaign: the three 1D terms, both regions each.
/// total = A1 + A2 + A3.
CampaignOutcome dtx_at_zero(const CurveParams& p, const CampaignConfig& cfg);

/// Second-derivative campaign over the requested 2D terms (empty = all 41).
/// Per-cell values and the total include the symmetry factor 2.
CampaignOutcome dttx_at_zero(const CurveParams& p, const CampaignConfig& cfg,
                             std::vector<std::string> terms = {});

} // namespace rq
