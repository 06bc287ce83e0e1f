#include "rigorquad/plan.hpp"

#include "rigorquad/errors.hpp"
#include "rigorquad/terms.hpp"

namespace rq {

PlanConfig PlanConfig::part1_defaults() {
    PlanConfig c;
    c.delta = 0x1p-9;
    c.abs_tol = 1e-6;
    c.rel_tol = 1e-6;
    c.depth = {{"nonsingular", 18}, {"singular", 12}};
    return c;
}

PlanConfig PlanConfig::part2_defaults() {
    PlanConfig c;
    c.delta = 0x1p-5;
    c.abs_tol = 1e-4;
    c.rel_tol = 1e-4;
    c.depth = {{"nonsingular", 10},
               {"singular-first", 8},
               {"singular-center", 8},
               {"singular-second", 9},
               {"singular-second-deep", 10}};
    return c;
}

std::vector<std::string> region_classes(int arity) {
    if (arity == 1) return {"singular", "nonsingular"};
    return {"nonsingular", "singular-center", "singular-first", "singular-second"};
}

namespace {

int depth_of(const PlanConfig& cfg, const std::string& cls, int fallback) {
    auto it = cfg.depth.find(cls);
    return it == cfg.depth.end() ? fallback : it->second;
}

Region make1(const Interval& box, SplitStrategy s, int depth, Method m, std::string label) {
    Region r;
    r.box_y = box;
    r.split_y = s;
    r.max_depth = depth;
    r.method = m;
    r.label = std::move(label);
    return r;
}

Region make2(const Interval& by, const Interval& bz, SplitStrategy sy, SplitStrategy sz, int depth,
             Method m, std::string label) {
    Region r = make1(by, sy, depth, m, std::move(label));
    r.box_z = bz;
    r.split_z = sz;
    return r;
}

} // namespace

std::vector<PlannedRegion> region_plan(int arity, const std::string& term, const PlanConfig& cfg) {
    if (registry().find(term) == registry().end()) throw UnknownTerm(term);
    const double d = cfg.delta;
    const double pi_hi = pi_interval().hi();
    const auto arith = SplitStrategy::arithmetic;
    const auto geom = SplitStrategy::geometric;
    std::vector<PlannedRegion> out;

    if (arity == 1) {
        out.push_back({"singular", make1(Interval(0.0, d), arith, depth_of(cfg, "singular", 12),
                                         Method::taylor_singular, term + "/singular")});
        out.push_back({"nonsingular", make1(Interval(d, pi_hi), arith, depth_of(cfg, "nonsingular", 18),
                                            Method::gauss_legendre, term + "/nonsingular")});
        return out;
    }

    Interval y_in(0.0, d), y_out(d, pi_hi);
    Interval z_pos(d, pi_hi), z_neg(-pi_hi, -d), z_in(-d, d);

    int dn = depth_of(cfg, "nonsingular", 10);
    out.push_back({"nonsingular", make2(y_out, z_pos, geom, geom, dn, Method::gauss_legendre,
                                        term + "/nonsingular#0")});
    out.push_back({"nonsingular", make2(y_out, z_neg, geom, geom, dn, Method::gauss_legendre,
                                        term + "/nonsingular#1")});

    int dc = depth_of(cfg, "singular-center", 8);
    out.push_back({"singular-center", make2(y_in, z_in, arith, arith, dc, Method::taylor_singular,
                                            term + "/singular-center")});

    int df = depth_of(cfg, "singular-first", 8);
    out.push_back({"singular-first", make2(y_in, z_pos, arith, arith, df, Method::taylor_singular,
                                           term + "/singular-first#0")});
    out.push_back({"singular-first", make2(y_in, z_neg, arith, arith, df, Method::taylor_singular,
                                           term + "/singular-first#1")});

    // The z-axis strip is tiled in y so the Taylor scheme stays usable; the
    // two cubic-denominator terms need a finer tiling and one more depth
    // level, with geometric y-splitting on the widest pieces.
    const bool deep = term == "B47" || term == "B55";
    struct Piece {
        double lo, hi;
        SplitStrategy sy;
    };
    std::vector<Piece> pieces;
    int ds;
    if (deep) {
        ds = depth_of(cfg, "singular-second-deep", 10);
        pieces = {{d, 0.325, arith},    {0.325, 0.65, arith}, {0.65, 0.775, arith},
                  {0.775, 0.95, arith}, {0.95, 1.5, geom},    {1.5, pi_hi, geom}};
    } else {
        ds = depth_of(cfg, "singular-second", 9);
        pieces = {{d, 0.65, arith}, {0.65, 0.95, arith}, {0.95, pi_hi, geom}};
    }
    int i = 0;
    for (const Piece& pc : pieces) {
        out.push_back({"singular-second",
                       make2(Interval(pc.lo, pc.hi), z_in, pc.sy, arith, ds, Method::taylor_singular,
                             term + "/singular-second#" + std::to_string(i++))});
    }
    return out;
}

} // namespace rq
