#include "rigorquad/report.hpp"

#include <ctime>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "rigorquad/reference.hpp"

namespace rq {

namespace {

std::string iso_now() {
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

std::string intersection_verdict(const Interval& enclosure, const Interval& reference) {
    return intersects(enclosure, reference) ? "intersects" : "disjoint";
}

ReportCell cell_from_outcome(const CellOutcome& c, const std::string& term_label) {
    ReportCell rc;
    rc.term = term_label;
    rc.region_class = c.region_class;
    rc.wall_secs = c.wall_secs;
    if (c.done) {
        rc.enclosure = c.result.enclosure;
        rc.cells_evaluated = c.result.cells_evaluated;
        rc.cells_rejected_then_split = c.result.cells_rejected_then_split;
        rc.fallbacks_used = c.result.fallbacks_used;
        rc.max_depth_reached = c.result.max_depth_reached;
    }
    return rc;
}

void fill_config(EnclosureReport& r, const CampaignConfig& cfg, int part) {
    PlanConfig pc = resolve_plan(part, cfg);
    r.delta = pc.delta;
    r.abs_tol = pc.abs_tol;
    r.rel_tol = pc.rel_tol;
    r.depths = pc.depth;
    r.workers = cfg.workers;
    r.budget_secs = cfg.budget_secs;
    r.timestamp = iso_now();
}

} // namespace

EnclosureReport build_part1_report(const CampaignConfig& cfg, bool check_refs) {
    EnclosureReport r;
    r.mode = "part1";
    fill_config(r, cfg, 1);
    r.reference_checked = check_refs;

    struct Endpoint {
        const char* tag;
        Interval A;
        Interval reference;
        std::optional<Interval>* total_slot;
    };
    CampaignOutcome low, high;
    Endpoint eps[2] = {
        {"1.08050", CurveParams::amplitude_low(), reference_part1_low_A(), &r.part1_low},
        {"1.08055", CurveParams::amplitude_high(), reference_part1_high_A(), &r.part1_high},
    };
    for (Endpoint& e : eps) {
        CurveParams p{CurveParams::eps_full(), e.A};
        CampaignOutcome out = dtx_at_zero(p, cfg);
        if (!out.complete) r.complete = false;
        for (const CellOutcome& c : out.cells)
            r.cells.push_back(cell_from_outcome(c, c.term + "@" + e.tag));
        if (out.complete) {
            *e.total_slot = out.total;
            ReportCell tc;
            tc.term = std::string("total@") + e.tag;
            tc.region_class = "all";
            tc.enclosure = out.total;
            if (check_refs) {
                tc.reference = e.reference;
                tc.verdict = intersection_verdict(out.total, e.reference);
            }
            r.cells.push_back(std::move(tc));
        }
    }
    if (r.part1_low && r.part1_high)
        r.sign_change = r.part1_low->lo() > 0.0 && r.part1_high->hi() < 0.0;
    return r;
}

EnclosureReport build_part2_report(const CampaignConfig& cfg, std::vector<std::string> terms,
                                   bool check_refs) {
    EnclosureReport r;
    r.mode = "part2";
    fill_config(r, cfg, 2);
    r.reference_checked = check_refs;

    CurveParams p{CurveParams::eps_full(), CurveParams::amplitude_full()};
    bool all_terms = terms.empty();
    CampaignOutcome out = dttx_at_zero(p, cfg, std::move(terms));
    r.complete = out.complete;
    size_t n_terms = out.cells.size() / 4;
    for (const CellOutcome& c : out.cells) {
        ReportCell rc = cell_from_outcome(c, c.term);
        if (check_refs && rc.enclosure) {
            auto it = reference_table().find({c.term, c.region_class});
            if (it != reference_table().end()) {
                rc.reference = it->second;
                rc.verdict = intersection_verdict(*rc.enclosure, it->second);
            }
        }
        r.cells.push_back(std::move(rc));
    }
    if (out.complete) {
        r.total = out.total;
        if (all_terms || n_terms == 41) {
            r.ge_30 = out.total.lo() >= reference_part2_total_min();
            if (check_refs) {
                ReportCell tc;
                tc.term = "total";
                tc.region_class = "all";
                tc.enclosure = out.total;
                tc.reference = reference_part2_total();
                tc.verdict = intersection_verdict(out.total, reference_part2_total());
                r.cells.push_back(std::move(tc));
            }
        }
    }
    return r;
}

std::string to_json(const EnclosureReport& r) {
    nlohmann::json j;
    j["schema"] = "rigorquad-report-1";
    j["mode"] = r.mode;
    j["config"] = {{"delta", r.delta},       {"abs_tol", r.abs_tol},
                   {"rel_tol", r.rel_tol},   {"depths", r.depths},
                   {"workers", r.workers},   {"budget_secs", r.budget_secs}};
    j["timestamp"] = r.timestamp;
    j["reference_checked"] = r.reference_checked;
    j["complete"] = r.complete;
    auto iv = [](const Interval& x) { return x.str(); };
    nlohmann::json cells = nlohmann::json::array();
    for (const ReportCell& c : r.cells) {
        nlohmann::json e;
        e["term"] = c.term;
        e["region"] = c.region_class;
        if (c.enclosure) e["enclosure"] = iv(*c.enclosure);
        e["cells_evaluated"] = c.cells_evaluated;
        e["cells_rejected_then_split"] = c.cells_rejected_then_split;
        e["fallbacks_used"] = c.fallbacks_used;
        e["max_depth_reached"] = c.max_depth_reached;
        e["wall_secs"] = c.wall_secs;
        if (c.reference) e["reference"] = iv(*c.reference);
        e["verdict"] = c.verdict;
        cells.push_back(std::move(e));
    }
    j["cells"] = std::move(cells);
    if (r.total) j["total"] = iv(*r.total);
    if (r.part1_low) j["part1_low"] = iv(*r.part1_low);
    if (r.part1_high) j["part1_high"] = iv(*r.part1_high);
    if (r.sign_change) j["sign_change"] = *r.sign_change;
    if (r.ge_30) j["ge_30"] = *r.ge_30;
    return j.dump(2);
}

std::string to_csv(const EnclosureReport& r) {
    // One row per term, mirroring the published table layout. 1D terms have
    // only the bounded and y-axis columns populated.
    std::ostringstream os;
    os << "term,bounded-region,singularity-center,singularity-y-axis,singularity-z-axis\n";
    std::vector<std::string> order;
    std::map<std::string, std::map<std::string, std::string>> rows;
    for (const ReportCell& c : r.cells) {
        if (!rows.count(c.term)) order.push_back(c.term);
        std::string col;
        if (c.region_class == "nonsingular" || c.region_class == "all") col = "bounded-region";
        else if (c.region_class == "singular-center") col = "singularity-center";
        else if (c.region_class == "singular-first" || c.region_class == "singular")
            col = "singularity-y-axis";
        else col = "singularity-z-axis";
        rows[c.term][col] = c.enclosure ? "\"" + c.enclosure->str() + "\"" : "";
    }
    for (const std::string& term : order) {
        const auto& cols = rows[term];
        auto get = [&cols](const char* k) {
            auto it = cols.find(k);
            return it == cols.end() ? std::string() : it->second;
        };
        os << term << ',' << get("bounded-region") << ',' << get("singularity-center") << ','
           << get("singularity-y-axis") << ',' << get("singularity-z-axis") << '\n';
    }
    return os.str();
}

bool sign_verdict_failed(const EnclosureReport& r) {
    return r.mode == "part1" && (!r.sign_change.has_value() || !*r.sign_change);
}

bool any_reference_disjoint(const EnclosureReport& r) {
    for (const ReportCell& c : r.cells)
        if (c.verdict == "disjoint") return true;
    return false;
}

void write_report(const EnclosureReport& r, const std::string& path, const std::string& format) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << (format == "csv" ? to_csv(r) : to_json(r));
    if (!out) throw std::runtime_error("failed writing output file: " + path);
}

} // namespace rq
