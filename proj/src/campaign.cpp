#include "rigorquad/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "rigorquad/errors.hpp"

namespace rq {

PlanConfig resolve_plan(int part, const CampaignConfig& cfg) {
    PlanConfig pc = part == 1 ? PlanConfig::part1_defaults() : PlanConfig::part2_defaults();
    if (cfg.delta > 0) pc.delta = cfg.delta;
    if (cfg.abs_tol > 0) pc.abs_tol = cfg.abs_tol;
    if (cfg.rel_tol > 0) pc.rel_tol = cfg.rel_tol;
    for (const auto& [k, v] : cfg.depth_overrides) pc.depth[k] = v;
    return pc;
}

Fn1D bind_term_1d(const TermSpec& t, const CurveParams& p) {
    Fn1D f;
    f.num_ord = t.num_y;
    f.den_ord = t.den_y;
    f.value = [&t, p](const Interval& y) { return t.value1(p, y); };
    f.derivative = [&t, p](const Interval& box, int k) { return t.deriv1(p, box, k); };
    f.num_derivative = [&t, p](const Interval& box, int k) { return t.num1(p, box, k); };
    f.den_derivative = [&t, p](const Interval& box, int k) { return t.den1(p, box, k); };
    return f;
}

Fn2D bind_term_2d(const TermSpec& t, const CurveParams& p, const std::string& region_class) {
    Fn2D f;
    if (region_class == "singular-center") {
        f.num_y = t.num_y, f.num_z = t.num_z, f.den_y = t.den_y, f.den_z = t.den_z;
    } else if (region_class == "singular-first") {
        f.num_y = t.num_y, f.den_y = t.den_y; // expand in y only
    } else if (region_class == "singular-second") {
        f.num_z = t.num_z, f.den_z = t.den_z; // expand in z only
    } // nonsingular: orders unused
    f.value = [&t, p](const Interval& y, const Interval& z) { return t.value2(p, y, z); };
    f.derivative4 = [&t, p](const Interval& cy, const Interval& cz, int axis) {
        return t.deriv4_2(p, cy, cz, axis);
    };
    f.num_partial = [&t, p](const Interval& a, const Interval& b, int j, int k) {
        return t.num2(p, a, b, j, k);
    };
    f.den_partial = [&t, p](const Interval& a, const Interval& b, int j, int k) {
        return t.den2(p, a, b, j, k);
    };
    return f;
}

namespace {

QuadResult merge(QuadResult acc, const QuadResult& r) {
    acc.enclosure += r.enclosure;
    acc.cells_evaluated += r.cells_evaluated;
    acc.cells_rejected_then_split += r.cells_rejected_then_split;
    acc.fallbacks_used += r.fallbacks_used;
    acc.max_depth_reached = acc.max_depth_reached || r.max_depth_reached;
    return acc;
}

QuadResult run_planned(const TermSpec& t, const CurveParams& p, const PlannedRegion& pr,
                       const PlanConfig& pc) {
    if (t.arity == 1) {
        Fn1D f = bind_term_1d(t, p);
        return adaptive_integrate(f, pr.region, pc.abs_tol, pc.rel_tol);
    }
    Fn2D f = bind_term_2d(t, p, pr.region_class);
    return adaptive_integrate_2d(f, pr.region, pc.abs_tol, pc.rel_tol);
}

struct Task {
    const TermSpec* term;
    PlannedRegion planned;
    // filled by workers:
    QuadResult result;
    std::exception_ptr error;
    bool done = false;
    double wall_secs = 0;
};

/// Run the tasks on a fixed-size pool. Scheduling order may be arbitrary;
/// results land in per-task slots so any later reduction is order-fixed and
/// the outcome is identical for every worker count.
void run_tasks(std::vector<Task>& tasks, const CurveParams& p, const PlanConfig& pc, int workers,
               double budget_secs) {
    // Longest-running tasks first for better packing.
    std::vector<size_t> order(tasks.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        auto rank = [&](size_t i) {
            const std::string& id = tasks[i].term->id;
            return (id == "B47" || id == "B55") ? 0 : 1;
        };
        return rank(a) < rank(b);
    });

    auto start = std::chrono::steady_clock::now();
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t slot = next.fetch_add(1);
            if (slot >= order.size()) return;
            Task& t = tasks[order[slot]];
            if (budget_secs > 0) {
                std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
                if (elapsed.count() > budget_secs) continue; // leave task unfinished
            }
            auto t0 = std::chrono::steady_clock::now();
            try {
                t.result = run_planned(*t.term, p, t.planned, pc);
                t.done = true;
            } catch (...) {
                t.error = std::current_exception();
            }
            t.wall_secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        }
    };
    int n = std::max(1, workers);
    if (n == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve((size_t)n);
        for (int i = 0; i < n; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (const Task& t : tasks)
        if (t.error) std::rethrow_exception(t.error);
}

CampaignOutcome reduce(const std::vector<Task>& tasks, const std::vector<const TermSpec*>& terms,
                       bool symmetry_factor) {
    CampaignOutcome out;
    out.total = Interval(0.0);
    Interval two(2.0);
    for (const TermSpec* t : terms) {
        for (const std::string& cls : region_classes(t->arity)) {
            CellOutcome cell;
            cell.term = t->id;
            cell.region_class = cls;
            cell.done = true;
            bool first = true;
            for (const Task& task : tasks) {
                if (task.term != t || task.planned.region_class != cls) continue;
                if (!task.done) {
                    cell.done = false;
                    continue;
                }
                cell.result = first ? task.result : merge(cell.result, task.result);
                cell.wall_secs += task.wall_secs;
                first = false;
            }
            if (cell.done && symmetry_factor) cell.result.enclosure *= two;
            if (cell.done) out.total += cell.result.enclosure;
            else out.complete = false;
            out.cells.push_back(std::move(cell));
        }
    }
    return out;
}

} // namespace

QuadResult integrate_term_region(const CurveParams& p, const std::string& term,
                                 const std::string& region_class, const CampaignConfig& cfg) {
    auto it = registry().find(term);
    if (it == registry().end()) throw UnknownTerm(term);
    const TermSpec& t = it->second;
    PlanConfig pc = resolve_plan(t.arity == 1 ? 1 : 2, cfg);
    QuadResult acc;
    bool first = true;
    for (const PlannedRegion& pr : region_plan(t.arity, term, pc)) {
        if (pr.region_class != region_class) continue;
        QuadResult r = run_planned(t, p, pr, pc);
        acc = first ? r : merge(acc, r);
        first = false;
    }
    if (first) throw std::invalid_argument("no region of class '" + region_class + "' for " + term);
    if (t.arity == 2) acc.enclosure *= Interval(2.0);
    return acc;
}

CampaignOutcome dtx_at_zero(const CurveParams& p, const CampaignConfig& cfg) {
    PlanConfig pc = resolve_plan(1, cfg);
    std::vector<const TermSpec*> terms;
    std::vector<Task> tasks;
    for (const char* id : {"A1", "A2", "A3"}) {
        const TermSpec& t = registry().at(id);
        terms.push_back(&t);
        for (PlannedRegion& pr : region_plan(1, id, pc)) tasks.push_back(Task{&t, std::move(pr)});
    }
    run_tasks(tasks, p, pc, cfg.workers, cfg.budget_secs);
    return reduce(tasks, terms, /*symmetry_factor=*/false);
}

CampaignOutcome dttx_at_zero(const CurveParams& p, const CampaignConfig& cfg,
                             std::vector<std::string> term_ids) {
    if (term_ids.empty()) {
        for (const auto& [id, t] : registry())
            if (t.arity == 2) term_ids.push_back(id);
    }
    std::sort(term_ids.begin(), term_ids.end());
    term_ids.erase(std::unique(term_ids.begin(), term_ids.end()), term_ids.end());
    PlanConfig pc = resolve_plan(2, cfg);
    std::vector<const TermSpec*> terms;
    std::vector<Task> tasks;
    for (const std::string& id : term_ids) {
        auto it = registry().find(id);
        if (it == registry().end() || it->second.arity != 2) throw UnknownTerm(id);
        terms.push_back(&it->second);
        for (PlannedRegion& pr : region_plan(2, id, pc)) tasks.push_back(Task{&it->second, std::move(pr)});
    }
    run_tasks(tasks, p, pc, cfg.workers, cfg.budget_secs);
    return reduce(tasks, terms, /*symmetry_factor=*/true);
}

} // namespace rq
