#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rigorquad/campaign.hpp"

namespace rq {

struct ReportCell {
    std::string term;        // for the 1D campaign the curve amplitude is appended, e.g. "A1@1.08050"
    std::string region_class;
    std::optional<Interval> enclosure; // absent when the cell was not run (budget)
    long cells_evaluated = 0;
    long cells_rejected_then_split = 0;
    long fallbacks_used = 0;
    bool max_depth_reached = false;
    double wall_secs = 0;
    std::optional<Interval> reference;
    std::string verdict = "not-checked"; // intersects | disjoint | not-checked
};

struct EnclosureReport {
    std::string mode; // part1 | part2 | single-term | suite
    double delta = 0, abs_tol = 0, rel_tol = 0;
    std::map<std::string, int> depths;
    int workers = 1;
    double budget_secs = 0;
    std::string timestamp; // excluded from determinism comparisons
    bool reference_checked = false;
    bool complete = true;

    std::vector<ReportCell> cells;
    std::optional<Interval> total;
    // 1D campaign: headline enclosures at the two amplitude endpoints.
    std::optional<Interval> part1_low, part1_high;
    std::optional<bool> sign_change; // low strictly positive AND high strictly negative
    std::optional<bool> ge_30;       // 2D total lower bound meets the headline threshold
};

/// Run the 1D campaign at both amplitude endpoints and assemble the report.
EnclosureReport build_part1_report(const CampaignConfig& cfg, bool check_refs);

/// Run the 2D campaign over `terms` (empty = all) and assemble the report.
EnclosureReport build_part2_report(const CampaignConfig& cfg, std::vector<std::string> terms,
                                   bool check_refs);

std::string to_json(const EnclosureReport& r);
std::string to_csv(const EnclosureReport& r);

/// True if the report has a failing sign verdict / any disjoint reference.
bool sign_verdict_failed(const EnclosureReport& r);
bool any_reference_disjoint(const EnclosureReport& r);

void write_report(const EnclosureReport& r, const std::string& path, const std::string& format);

} // namespace rq
