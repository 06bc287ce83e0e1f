#include <cstdlib>
#include <ctime>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "rigorquad/report.hpp"

namespace {

// Exit codes: 0 all verdicts pass, 1 usage or IO error, 2 sign verdict
// failed, 3 some enclosure is disjoint from its reference, 4 a cell could
// not be resolved at the maximum subdivision depth.
enum ExitCode { kOk = 0, kUsage = 1, kSignFail = 2, kDisjoint = 3, kUnresolvable = 4 };

std::string iso_now() {
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

int default_workers() {
    if (const char* env = std::getenv("RIGORQUAD_WORKERS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? (int)hw : 1;
}

/// A single 1D term at both amplitude endpoints (the campaign builders only
/// cover the full three-term sum).
rq::EnclosureReport single_term_1d_report(const rq::CampaignConfig& cfg, const std::string& term) {
    rq::EnclosureReport r;
    r.mode = "single-term";
    rq::PlanConfig pc = rq::resolve_plan(1, cfg);
    r.delta = pc.delta;
    r.abs_tol = pc.abs_tol;
    r.rel_tol = pc.rel_tol;
    r.depths = pc.depth;
    r.workers = cfg.workers;
    r.budget_secs = cfg.budget_secs;
    r.timestamp = iso_now();
    for (const char* tag : {"1.08050", "1.08055"}) {
        rq::Interval A = std::string(tag) == "1.08050" ? rq::CurveParams::amplitude_low()
                                                       : rq::CurveParams::amplitude_high();
        rq::CurveParams p{rq::CurveParams::eps_full(), A};
        for (const char* cls : {"singular", "nonsingular"}) {
            rq::QuadResult q = rq::integrate_term_region(p, term, cls, cfg);
            rq::ReportCell c;
            c.term = term + ("@" + std::string(tag));
            c.region_class = cls;
            c.enclosure = q.enclosure;
            c.cells_evaluated = q.cells_evaluated;
            c.cells_rejected_then_split = q.cells_rejected_then_split;
            c.fallbacks_used = q.fallbacks_used;
            c.max_depth_reached = q.max_depth_reached;
            r.cells.push_back(std::move(c));
        }
    }
    return r;
}

void emit(const rq::EnclosureReport& r, const std::string& out, const std::string& format) {
    if (out.empty()) {
        std::cout << (format == "csv" ? rq::to_csv(r) : rq::to_json(r)) << "\n";
    } else {
        rq::write_report(r, out, format);
    }
}

int verdict_code(const std::vector<rq::EnclosureReport>& reports, bool check_refs) {
    for (const auto& r : reports)
        if (check_refs && rq::any_reference_disjoint(r)) return kDisjoint;
    for (const auto& r : reports)
        if (rq::sign_verdict_failed(r)) return kSignFail;
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rigorous enclosure campaigns for the interface-shift integrals"};
    app.set_config("--config", "", "Optional config file (TOML/INI); command-line flags win");

    std::string mode = "part1";
    rq::CampaignConfig cfg;
    cfg.workers = default_workers();
    std::vector<std::string> terms;
    std::string out, format = "json";
    bool check_refs = false;

    app.add_option("--mode", mode, "Campaign to run")
        ->check(CLI::IsMember({"part1", "part2", "single-term", "suite"}))
        ->capture_default_str();
    app.add_option("--delta", cfg.delta, "Singular-strip half-width (0 = per-mode default)");
    app.add_option("--abs-tol", cfg.abs_tol, "Absolute cell acceptance tolerance (0 = default)");
    app.add_option("--rel-tol", cfg.rel_tol, "Relative cell acceptance tolerance (0 = default)");
    for (const char* cls : {"nonsingular", "singular", "singular-first", "singular-second",
                            "singular-second-deep", "singular-center"}) {
        app.add_option("--max-depth-" + std::string(cls), cfg.depth_overrides[cls],
                       "Subdivision depth cap for the " + std::string(cls) + " region class");
    }
    app.add_option("--terms", terms, "Comma-separated term ids (part2/single-term)")->delimiter(',');
    app.add_option("--workers", cfg.workers, "Worker thread count (env RIGORQUAD_WORKERS, then core count)")
        ->capture_default_str();
    app.add_option("--budget-secs", cfg.budget_secs, "Wall-clock budget; stops between region tasks");
    app.add_option("--out", out, "Output file (default: stdout)");
    app.add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_flag("--check-refs", check_refs, "Compare enclosures against the published reference table");

    CLI11_PARSE(app, argc, argv);

    // Depth options that were never set would otherwise linger as zeroes.
    for (auto it = cfg.depth_overrides.begin(); it != cfg.depth_overrides.end();)
        it = it->second > 0 ? std::next(it) : cfg.depth_overrides.erase(it);

    try {
        rq::validate_registry();
        const auto& reg = rq::registry();
        for (const std::string& t : terms)
            if (!reg.count(t)) {
                std::cerr << "unknown term: " << t << "\n";
                return kUsage;
            }

        std::vector<rq::EnclosureReport> reports;
        if (mode == "part1") {
            reports.push_back(rq::build_part1_report(cfg, check_refs));
        } else if (mode == "part2") {
            reports.push_back(rq::build_part2_report(cfg, terms, check_refs));
        } else if (mode == "single-term") {
            if (terms.size() != 1) {
                std::cerr << "--mode single-term needs exactly one --terms entry\n";
                return kUsage;
            }
            if (reg.at(terms[0]).arity == 1) {
                reports.push_back(single_term_1d_report(cfg, terms[0]));
            } else {
                rq::EnclosureReport r = rq::build_part2_report(cfg, terms, check_refs);
                r.mode = "single-term";
                reports.push_back(std::move(r));
            }
        } else { // suite
            reports.push_back(rq::build_part1_report(cfg, check_refs));
            reports.push_back(rq::build_part2_report(cfg, terms, check_refs));
        }

        if (reports.size() == 1) {
            emit(reports[0], out, format);
        } else if (format == "json") {
            std::string joined = "[\n" + rq::to_json(reports[0]) + ",\n" + rq::to_json(reports[1]) + "\n]";
            if (out.empty()) {
                std::cout << joined << "\n";
            } else {
                std::ofstream f(out);
                if (!f) throw std::runtime_error("cannot open output file: " + out);
                f << joined;
            }
        } else {
            std::string joined = rq::to_csv(reports[0]) + rq::to_csv(reports[1]);
            if (out.empty()) {
                std::cout << joined;
            } else {
                std::ofstream f(out);
                if (!f) throw std::runtime_error("cannot open output file: " + out);
                f << joined;
            }
        }

        for (const auto& r : reports) {
            if (r.sign_change) std::cerr << "sign-change: " << (*r.sign_change ? "yes" : "no") << "\n";
            if (r.ge_30) std::cerr << "total lower bound >= 30: " << (*r.ge_30 ? "yes" : "no") << "\n";
            if (!r.complete) std::cerr << "warning: budget exhausted; report is partial\n";
        }
        return verdict_code(reports, check_refs);
    } catch (const rq::CellUnresolvable& e) {
        std::cerr << "unresolvable: " << e.what() << "\n";
        return kUnresolvable;
    } catch (const rq::UnknownTerm& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
