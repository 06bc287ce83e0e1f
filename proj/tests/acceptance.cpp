// Acceptance checks: one pass/fail line per criterion. Exit status is zero
// only when every executed criterion passes (the long-mode full campaign is
// opt-in via RIGORQUAD_FULL_CAMPAIGN=1 and reported as skipped otherwise).

#include <array>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "json.hpp"
#include "rigorquad/campaign.hpp"
#include "rigorquad/reference.hpp"
#include "rigorquad/report.hpp"

using namespace rq;

#ifndef TEST_DATA_DIR
#define TEST_DATA_DIR "tests/data"
#endif

namespace {

bool g_all_ok = true;

void line(int n, const std::string& status, const std::string& detail) {
    std::cout << "criterion " << n << ": " << status;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
}

void result(int n, bool ok, const std::string& detail) {
    if (!ok) g_all_ok = false;
    line(n, ok ? "PASS" : "FAIL", detail);
}

bool encloses(const Interval& r, long double v) {
    return (long double)r.lo() <= v && v <= (long double)r.hi();
}

double ulp(double v) {
    double a = std::fabs(v);
    return std::nextafter(a, 1e308) - a;
}

// ---------------------------------------------------------------- criterion 1

void criterion1() {
    CampaignConfig cfg; // per-part defaults
    EnclosureReport r = build_part1_report(cfg, true);
    bool ok = r.complete && r.part1_low && r.part1_high && r.sign_change && *r.sign_change &&
              intersects(*r.part1_low, reference_part1_low_A()) &&
              intersects(*r.part1_high, reference_part1_high_A());
    std::ostringstream d;
    if (r.part1_low && r.part1_high)
        d << "low=" << r.part1_low->str() << " high=" << r.part1_high->str();
    result(1, ok, d.str());
}

// ------------------------------------------------------- criteria 2 and 9

struct SpotTask {
    std::string term, region_class;
    CampaignConfig cfg;
};

std::vector<SpotTask> spot_workload() {
    std::vector<SpotTask> tasks;
    CampaignConfig center; // defaults
    for (const auto& [id, t] : registry())
        if (t.arity == 2) tasks.push_back({id, "singular-center", center});
    CampaignConfig shallow;
    shallow.depth_overrides["nonsingular"] = 7;
    for (const char* id : {"B23", "B24", "B34", "B71"})
        tasks.push_back({id, "nonsingular", shallow});
    return tasks;
}

std::vector<QuadResult> run_spot(const std::vector<SpotTask>& tasks, int workers) {
    CurveParams p(CurveParams::eps_full(), CurveParams::amplitude_full());
    std::vector<QuadResult> out(tasks.size());
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
            out[i] = integrate_term_region(p, tasks[i].term, tasks[i].region_class, tasks[i].cfg);
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    return out;
}

EnclosureReport spot_report(const std::vector<SpotTask>& tasks, const std::vector<QuadResult>& res,
                            int workers) {
    EnclosureReport r;
    r.mode = "part2";
    r.workers = workers;
    r.timestamp = "";
    r.reference_checked = true;
    for (size_t i = 0; i < tasks.size(); ++i) {
        ReportCell c;
        c.term = tasks[i].term;
        c.region_class = tasks[i].region_class;
        c.enclosure = res[i].enclosure;
        c.cells_evaluated = res[i].cells_evaluated;
        c.cells_rejected_then_split = res[i].cells_rejected_then_split;
        c.fallbacks_used = res[i].fallbacks_used;
        c.max_depth_reached = res[i].max_depth_reached;
        c.wall_secs = 0;
        const Interval& ref = reference_table().at({tasks[i].term, tasks[i].region_class});
        c.reference = ref;
        c.verdict = intersects(res[i].enclosure, ref) ? "intersects" : "disjoint";
        r.cells.push_back(std::move(c));
    }
    return r;
}

std::vector<QuadResult> criterion2() {
    auto tasks = spot_workload();
    auto res = run_spot(tasks, 1);
    int bad = 0;
    std::string first_bad;
    for (size_t i = 0; i < tasks.size(); ++i) {
        const Interval& ref = reference_table().at({tasks[i].term, tasks[i].region_class});
        if (!intersects(res[i].enclosure, ref)) {
            ++bad;
            if (first_bad.empty()) first_bad = tasks[i].term + "/" + tasks[i].region_class;
        }
    }
    std::ostringstream d;
    d << tasks.size() << " cells, " << bad << " disjoint";
    if (bad) d << ", first " << first_bad;
    result(2, bad == 0, d.str());
    return res;
}

void criterion9(const std::vector<QuadResult>& res1) {
    auto tasks = spot_workload();
    auto res8 = run_spot(tasks, 8);
    std::string j1 = to_json(spot_report(tasks, res1, 1));
    std::string j8 = to_json(spot_report(tasks, res8, 1)); // worker count is a timing-free field,
                                                           // forced equal so only enclosures differ
    result(9, j1 == j8, j1 == j8 ? "reports bit-identical" : "reports differ");
}

// ---------------------------------------------------------------- criterion 3

void criterion3() {
    const char* flag = std::getenv("RIGORQUAD_FULL_CAMPAIGN");
    if (!flag || std::string(flag) != "1") {
        line(3, "SKIPPED", "set RIGORQUAD_FULL_CAMPAIGN=1 to run the full long-mode campaign");
        return;
    }
    CampaignConfig cfg;
    EnclosureReport r = build_part2_report(cfg, {}, true);
    bool ok = r.complete && r.total && intersects(*r.total, reference_part2_total()) &&
              r.total->lo() >= reference_part2_total_min();
    result(3, ok, r.total ? "total=" + r.total->str() : "incomplete");
}

// ---------------------------------------------------------------- criterion 4

void criterion4() {
    std::mt19937_64 rng(0xACCE55);
    const int kN = 100000;
    long violations = 0;
    auto rnd = [&](double lo, double hi) {
        return lo + (hi - lo) * (double)(rng() >> 11) * 0x1p-53;
    };
    auto rnd_iv = [&](double scale) {
        double a = rnd(-scale, scale), b = rnd(-scale, scale);
        return Interval(std::min(a, b), std::max(a, b));
    };
    auto inside = [&](const Interval& x) {
        return (long double)x.lo() + ((long double)x.hi() - x.lo()) * (long double)rnd(0.0, 1.0);
    };
    // arithmetic ops
    for (int op = 0; op < 4; ++op) {
        for (int i = 0; i < kN; ++i) {
            double scale = (i % 3 == 0) ? 1.0 : (i % 3 == 1 ? 1e8 : 1e-8);
            Interval x = rnd_iv(scale), y = rnd_iv(scale);
            long double a = inside(x), b = inside(y);
            Interval r;
            long double t;
            switch (op) {
            case 0: r = x + y; t = a + b; break;
            case 1: r = x - y; t = a - b; break;
            case 2: r = x * y; t = a * b; break;
            default:
                if (y.contains(0.0)) { y = y + Interval(2.0 * scale); b += 2.0L * scale; }
                r = x / y;
                t = a / b;
                break;
            }
            if (!encloses(r, t)) ++violations;
        }
    }
    // elementary functions
    for (int fn = 0; fn < 7; ++fn) {
        for (int i = 0; i < kN; ++i) {
            Interval x = rnd_iv(fn < 2 ? 6.0 : 3.0);
            long double a = inside(x);
            Interval r;
            long double t;
            switch (fn) {
            case 0: r = sin(x); t = sinl(a); break;
            case 1: r = cos(x); t = cosl(a); break;
            case 2: r = sinh(x); t = sinhl(a); break;
            case 3: r = cosh(x); t = coshl(a); break;
            case 4: r = exp(x); t = expl(a); break;
            case 5: {
                int k = (int)(rng() % 7);
                r = pow_i(x, k);
                t = powl(a, (long double)k);
                break;
            }
            default:
                r = sqrt(Interval(0.0, x.mag()));
                t = sqrtl(fabsl(a));
                break;
            }
            if (!encloses(r, t)) ++violations;
        }
    }
    std::ostringstream d;
    d << 11 * kN << " trials, " << violations << " violations";
    result(4, violations == 0, d.str());
}

// ---------------------------------------------------------------- criterion 5

struct TightCubic {
    double a, b, c, d;
    Interval value(const Interval& x) const {
        auto f = [&](long double t) { return ((a * t + b) * t + c) * t + d; };
        long double lo = f(x.lo()), hi = f(x.hi()); // increasing on x >= 0
        long double e1 = fabsl(lo) * 1e-18L, e2 = fabsl(hi) * 1e-18L;
        return make_interval_unchecked(detail::ld_down(lo - e1), detail::ld_up(hi + e2));
    }
    Interval derivative(const Interval&, int) const { return Interval(0.0); }
    long double exact(long double lo, long double hi) const {
        auto F = [&](long double t) {
            return ((a / 4 * t + b / 3) * t + c / 2) * t * t + d * t;
        };
        return F(hi) - F(lo);
    }
};

void criterion5() {
    std::mt19937_64 rng(20260823);
    std::uniform_real_distribution<double> uc(1.0, 2.0), ux(0.0, 0.25);
    int over = 0, cases = 0;
    double worst = 0;
    while (cases < 1000) {
        TightCubic g{uc(rng), uc(rng), uc(rng), uc(rng)};
        double x1 = ux(rng), x2 = ux(rng);
        if (x1 > x2) std::swap(x1, x2);
        if (x1 == x2) continue;
        ++cases;
        Interval e = gl2_1d(g, Interval(x1, x2));
        long double exact = g.exact(x1, x2);
        double u = ulp(std::fabs((double)exact));
        double w = width(e) / u;
        worst = std::max(worst, w);
        if (!encloses(e, exact) || width(e) > 8 * u) ++over;
    }
    std::ostringstream d;
    d << cases << " cubics, worst width " << worst << " ulp, " << over << " over 8 ulp";
    result(5, over == 0, d.str());
}

// ---------------------------------------------------------------- criterion 6

void criterion6() {
    CurveParams p(CurveParams::eps_full(), CurveParams::amplitude_full());
    std::mt19937_64 rng(66);
    auto rnd = [&](double lo, double hi) {
        return lo + (hi - lo) * (double)(rng() >> 11) * 0x1p-53;
    };
    std::vector<std::string> terms2;
    for (const auto& [id, t] : registry())
        if (t.arity == 2) terms2.push_back(id);
    const double delta = 0.03125;
    int bad = 0, total = 0;
    // returns true when the cell was resolvable (oracle comparison counted)
    auto check2 = [&](const std::string& cls, Interval by, Interval bz, int depth) {
        const TermSpec& t = registry().at(terms2[rng() % terms2.size()]);
        Fn2D f = bind_term_2d(t, p, cls);
        Region r;
        r.box_y = by;
        r.box_z = bz;
        r.max_depth = depth;
        if (cls != "nonsingular") r.method = Method::taylor_singular;
        try {
            QuadResult q = adaptive_integrate_2d(f, r, 1e-5, 1e-5);
            int n = 48;
            long double hy = ((long double)by.hi() - by.lo()) / n;
            long double hz = ((long double)bz.hi() - bz.lo()) / n;
            long double s = 0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    s += t.point2(p, by.lo() + (i + 0.5L) * hy, bz.lo() + (j + 0.5L) * hz);
            s *= hy * hz;
            ++total;
            if (!((long double)q.enclosure.lo() < s && s < (long double)q.enclosure.hi())) ++bad;
            return true;
        } catch (const CellUnresolvable&) {
            // not an oracle-containment failure: the sampled term needs a
            // deeper limit on this cell, so the caller resamples
            return false;
        }
    };
    // 20 resolvable triples per 2D region class; unresolvable samples are
    // redrawn (bounded attempts so a regression cannot loop forever)
    auto fill = [&](const std::string& cls, auto make_cell, int depth) {
        int got = 0;
        for (int att = 0; got < 20 && att < 200; ++att)
            if (std::apply([&](Interval by, Interval bz) { return check2(cls, by, bz, depth); },
                           make_cell()))
                ++got;
    };
    fill("nonsingular",
         [&] {
             double y0 = rnd(0.2, 2.5), z0 = rnd(0.2, 2.5), w = rnd(0.05, 0.2);
             return std::make_pair(Interval(y0, y0 + w), Interval(z0, z0 + w));
         },
         5);
    fill("singular-first",
         [&] {
             double z1 = rnd(0.2, 2.5);
             return std::make_pair(Interval(0.0, delta), Interval(z1, z1 + rnd(0.05, 0.2)));
         },
         10);
    fill("singular-second",
         [&] {
             double y1 = rnd(0.2, 2.5);
             return std::make_pair(Interval(y1, y1 + rnd(0.05, 0.2)), Interval(0.0, delta));
         },
         10);
    fill("singular-center",
         [&] { return std::make_pair(Interval(0.0, delta), Interval(0.0, delta)); }, 10);
    // 1D region classes with the point oracle
    for (const bool sing : {false, true}) {
        int got = 0;
        for (int att = 0; got < 20 && att < 200; ++att) {
            const char* ids[3] = {"A1", "A2", "A3"};
            const TermSpec& t = registry().at(ids[rng() % 3]);
            double lo = sing ? 0.0 : rnd(0.1, 2.8);
            double hi = lo + (sing ? 0.001953125 : rnd(0.05, 0.2));
            Fn1D f = bind_term_1d(t, p);
            Region r;
            r.box_y = Interval(lo, hi);
            r.max_depth = sing ? 14 : 5;
            if (sing) r.method = Method::taylor_singular;
            try {
                QuadResult q = adaptive_integrate(f, r, 1e-7, 1e-7);
                int n = 512;
                long double h = ((long double)hi - lo) / n;
                long double s = 0;
                for (int k = 0; k < n; ++k) s += t.point1(p, lo + (k + 0.5L) * h);
                s *= h;
                ++total;
                ++got;
                if (!((long double)q.enclosure.lo() < s && s < (long double)q.enclosure.hi()))
                    ++bad;
            } catch (const CellUnresolvable&) {
            }
        }
    }
    std::ostringstream d;
    d << total << " triples, " << bad << " outside";
    result(6, bad == 0 && total == 120, d.str());
}

// ---------------------------------------------------------------- criterion 7

void criterion7() {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> ua(0.1, 1.0), uw(0.5, 2.0);
    auto expr = [](const auto& x) {
        using std::sin;
        using std::cosh;
        return sin(x) * cosh(x);
    };
    Fn1D f;
    f.value = [expr](const Interval& x) { return expr(x); };
    f.derivative = [expr](const Interval& box, int k) {
        return derivative_enclosure(expr, box, k);
    };
    int bad = 0;
    for (int i = 0; i < 10; ++i) {
        double a = ua(rng), w = uw(rng);
        Region r;
        r.box_y = Interval(a, a + w);
        double prev = -1;
        for (int depth = 3; depth <= 6; ++depth) {
            r.max_depth = depth;
            QuadResult q = adaptive_integrate(f, r, 1e-14, 1e-14);
            double wd = width(q.enclosure);
            double slack = 2.0 * ulp(q.enclosure.mag()) * (double)q.cells_evaluated;
            if (prev >= 0 && wd > prev + slack) ++bad;
            prev = wd;
        }
    }
    std::ostringstream d;
    d << "10 pairs, depths 3..6, " << bad << " monotonicity violations";
    result(7, bad == 0, d.str());
}

// ---------------------------------------------------------------- criterion 8

void criterion8() {
    bool ok = true;
    std::string detail;
    try {
        validate_registry();
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("vanishing validation: ") + e.what();
    }
    auto j = nlohmann::json::parse(registry_manifest_json());
    std::map<std::string, std::array<int, 4>> manifest;
    for (const auto& [id, e] : j["terms"].items())
        if (e["arity"] == 2)
            manifest[id] = {e["orders"][0].get<int>(), e["orders"][1].get<int>(),
                            e["orders"][2].get<int>(), e["orders"][3].get<int>()};
    std::ifstream in(std::string(TEST_DATA_DIR) + "/expected_orders.csv");
    std::string l;
    std::getline(in, l); // header
    int rows = 0, mismatches = 0;
    while (std::getline(in, l)) {
        if (l.empty()) continue;
        std::stringstream ss(l);
        std::string id, fld;
        std::getline(ss, id, ',');
        std::array<int, 4> v{};
        for (int i = 0; i < 4; ++i) {
            std::getline(ss, fld, ',');
            v[i] = std::stoi(fld);
        }
        ++rows;
        if (!manifest.count(id) || manifest[id] != v) ++mismatches;
    }
    if (rows != 41 || mismatches != 0 || manifest.size() != 41) ok = false;
    std::ostringstream d;
    d << rows << " table rows, " << mismatches << " order mismatches";
    if (!detail.empty()) d << "; " << detail;
    result(8, ok, d.str());
}

} // namespace

int main() {
    criterion1();
    std::vector<QuadResult> spot = criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9(spot);
    return g_all_ok ? 0 : 1;
}
