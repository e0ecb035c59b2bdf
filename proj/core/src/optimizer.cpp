#include "hankelkit/optimizer.hpp"

#include "hankelkit/class_maps.hpp"
#include "hankelkit/functionals.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <span>
#include <stdexcept>
#include <thread>

namespace hankelkit {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Depth = how many grid halvings a point survives; points of the coarsest
// ladder level survive all of them and share the top bucket.
constexpr int kInfDepth = 60;
constexpr int kBuckets = kInfDepth + 1;
constexpr long long kMaxGridEvals = 100'000'000;

struct Cell {
    double v = -std::numeric_limits<double>::infinity();
    long long idx = -1;
};

// "Better" ordering: larger value first, then smaller flat index (which is
// lexicographic parameter order, since axes are enumerated ascending).
bool better(const Cell& a, const Cell& b) {
    return a.v > b.v || (a.v == b.v && a.idx >= 0 && (b.idx < 0 || a.idx < b.idx));
}

struct TopK {
    int cap = 0;
    std::vector<Cell> items;  // kept sorted best-first

    void offer(const Cell& c) {
        if (cap == 0) return;
        if (static_cast<int>(items.size()) == cap && !better(c, items.back())) return;
        auto pos = std::lower_bound(items.begin(), items.end(), c,
                                    [](const Cell& a, const Cell& b) { return better(a, b); });
        items.insert(pos, c);
        if (static_cast<int>(items.size()) > cap) items.pop_back();
    }
};

struct GridSpec {
    std::vector<long long> counts;
    std::vector<double> lo;
    std::vector<double> step;
    std::vector<int> to_min;                // halvings from this grid down to the ladder floor
    std::vector<std::vector<int>> depth;    // per axis, per index
    long long total = 1;

    int dim() const { return static_cast<int>(counts.size()); }

    void params_at(long long flat, std::vector<double>& out) const {
        for (int a = dim() - 1; a >= 0; --a) {
            const long long i = flat % counts[static_cast<std::size_t>(a)];
            flat /= counts[static_cast<std::size_t>(a)];
            out[static_cast<std::size_t>(a)] = lo[static_cast<std::size_t>(a)] + step[static_cast<std::size_t>(a)] * static_cast<double>(i);
        }
    }
};

int auto_axis_count(int dim, bool periodic) {
    if (periodic) {
        if (dim <= 2) return 768;
        if (dim == 3) return 96;
        if (dim == 4) return 24;
        if (dim <= 8) return 12;
        return 6;
    }
    if (dim <= 2) return 1025;
    if (dim == 3) return 65;
    if (dim == 4) return 33;
    if (dim <= 6) return 9;
    return 3;
}

GridSpec build_grid(const Box& box, const SearchConfig& cfg) {
    GridSpec g;
    const int d = box.dim();
    g.counts.resize(static_cast<std::size_t>(d));
    g.lo.resize(static_cast<std::size_t>(d));
    g.step.resize(static_cast<std::size_t>(d));
    g.to_min.resize(static_cast<std::size_t>(d));
    g.depth.resize(static_cast<std::size_t>(d));
    for (int a = 0; a < d; ++a) {
        const Axis& ax = box.axes[static_cast<std::size_t>(a)];
        if (!(ax.hi > ax.lo)) throw InvalidParams("maximize: axis with empty range");
        int requested = cfg.grid_points_per_axis;
        if (!cfg.grid_per_axis.empty()) requested = cfg.grid_per_axis[static_cast<std::size_t>(a)];
        if (requested == 0) requested = auto_axis_count(d, ax.periodic);
        const int n = ladder_round(requested, ax.periodic);
        g.counts[static_cast<std::size_t>(a)] = n;
        g.lo[static_cast<std::size_t>(a)] = ax.lo;
        g.step[static_cast<std::size_t>(a)] = ax.periodic ? (ax.hi - ax.lo) / n : (ax.hi - ax.lo) / (n - 1);
        const auto levels = static_cast<unsigned long long>(ax.periodic ? n / 6 : n - 1);
        g.to_min[static_cast<std::size_t>(a)] = std::countr_zero(levels) - (ax.periodic ? 0 : 1);
        auto& tab = g.depth[static_cast<std::size_t>(a)];
        tab.resize(static_cast<std::size_t>(n));
        tab[0] = kInfDepth;
        for (int i = 1; i < n; ++i) {
            const int t = std::countr_zero(static_cast<unsigned long long>(i));
            tab[static_cast<std::size_t>(i)] = t >= g.to_min[static_cast<std::size_t>(a)] ? kInfDepth : t;
        }
        if (g.total > kMaxGridEvals / n) throw InvalidParams("maximize: grid too large (over 1e8 evaluations)");
        g.total *= n;
    }
    return g;
}

double axis_move(const Axis& ax, double x, double d) {
    if (ax.periodic) {
        const double span = ax.hi - ax.lo;
        double y = std::fmod(x + d - ax.lo, span);
        if (y < 0.0) y += span;
        return ax.lo + y;
    }
    return std::clamp(x + d, ax.lo, ax.hi);
}

struct Refined {
    double v = 0.0;
    std::vector<double> p;
};

Refined compass(const Objective& f, const Box& box, std::vector<double> p, const std::vector<double>& base,
                double tol, int max_iters) {
    double v = f(p);
    double scale = 1.0;
    const double maxb = *std::max_element(base.begin(), base.end());
    std::vector<double> q = p;
    for (int it = 0; it < max_iters && scale * maxb >= tol; ++it) {
        bool moved = false;
        for (int a = 0; a < box.dim(); ++a) {
            for (const double sgn : {1.0, -1.0}) {
                q = p;
                q[static_cast<std::size_t>(a)] =
                    axis_move(box.axes[static_cast<std::size_t>(a)], p[static_cast<std::size_t>(a)],
                              sgn * base[static_cast<std::size_t>(a)] * scale);
                const double vq = f(q);
                if (vq > v) {
                    v = vq;
                    p = q;
                    moved = true;
                }
            }
        }
        if (!moved) scale *= 0.5;
    }
    return {v, std::move(p)};
}

struct ScanAcc {
    Cell best;
    std::vector<TopK> buckets;
};

void scan_range(const Objective& objective, const GridSpec& g, long long beg, long long end, ScanAcc& acc) {
    const int d = g.dim();
    std::vector<double> p(static_cast<std::size_t>(d));
    for (long long flat = beg; flat < end; ++flat) {
        long long rest = flat;
        int bucket = kInfDepth;
        for (int a = d - 1; a >= 0; --a) {
            const long long i = rest % g.counts[static_cast<std::size_t>(a)];
            rest /= g.counts[static_cast<std::size_t>(a)];
            p[static_cast<std::size_t>(a)] =
                g.lo[static_cast<std::size_t>(a)] + g.step[static_cast<std::size_t>(a)] * static_cast<double>(i);
            bucket = std::min(bucket, g.depth[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)]);
        }
        const Cell c{objective(p), flat};
        if (better(c, acc.best)) acc.best = c;
        acc.buckets[static_cast<std::size_t>(bucket)].offer(c);
    }
}

}  // namespace

SearchModel SearchModel::lz(bool full_phases) {
    SearchModel m;
    m.kind = ModelKind::LZ;
    m.full_phases = full_phases;
    return m;
}

SearchModel SearchModel::herglotz(int atoms) {
    SearchModel m;
    m.kind = ModelKind::Herglotz;
    m.atoms = atoms;
    return m;
}

std::string SearchModel::label() const {
    if (kind == ModelKind::LZ) return full_phases ? "lz" : "lz-real";
    return "herglotz:" + std::to_string(atoms);
}

int ladder_round(int requested, bool periodic) {
    if (periodic) {
        int v = 6;
        while (v * 2 <= requested) v *= 2;
        return v;
    }
    int v = 3;
    while ((v - 1) * 2 + 1 <= requested) v = (v - 1) * 2 + 1;
    return v;
}

BoundReport maximize(const Objective& objective, const Box& box, const SearchConfig& cfg,
                     const std::vector<std::vector<double>>& warm_starts,
                     const std::optional<Rational>& paper_bound) {
    const int d = box.dim();
    if (d == 0) throw InvalidParams("maximize: empty box");
    if (cfg.tol <= 0.0) throw InvalidParams("maximize: tol must be > 0");
    if (cfg.restarts < 0) throw InvalidParams("maximize: restarts must be >= 0");
    if (cfg.max_refine_iters < 1) throw InvalidParams("maximize: max_refine_iters must be >= 1");
    if (cfg.grid_points_per_axis != 0 && cfg.grid_points_per_axis < 3)
        throw InvalidParams("maximize: grid_points_per_axis must be >= 3");
    if (!cfg.grid_per_axis.empty() && static_cast<int>(cfg.grid_per_axis.size()) != d)
        throw InvalidParams("maximize: grid_per_axis size must match the box dimension");

    const GridSpec g = build_grid(box, cfg);

    // Grid scan, chunked; the merge below is order-independent.
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    const int threads = static_cast<int>(std::min<long long>(hw, std::max<long long>(1, g.total / 4096)));
    std::vector<ScanAcc> accs(static_cast<std::size_t>(threads));
    for (auto& acc : accs) acc.buckets.assign(kBuckets, TopK{cfg.restarts, {}});
    if (threads == 1) {
        scan_range(objective, g, 0, g.total, accs[0]);
    } else {
        std::vector<std::thread> pool;
        const long long chunk = (g.total + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const long long beg = t * chunk;
            const long long end = std::min<long long>(g.total, beg + chunk);
            pool.emplace_back([&, beg, end, t] { scan_range(objective, g, beg, end, accs[static_cast<std::size_t>(t)]); });
        }
        for (auto& th : pool) th.join();
    }
    Cell grid_best;
    std::vector<TopK> buckets(kBuckets, TopK{cfg.restarts, {}});
    for (const auto& acc : accs) {
        if (better(acc.best, grid_best)) grid_best = acc.best;
        for (int b = 0; b < kBuckets; ++b)
            for (const Cell& c : acc.buckets[static_cast<std::size_t>(b)].items) buckets[static_cast<std::size_t>(b)].offer(c);
    }

    // Refinement starts: per-depth top cells (step = that level's spacing),
    // caller-provided warm starts, and seeded random starts.
    struct Start {
        std::vector<double> p;
        std::vector<double> base;
    };
    std::vector<Start> starts;
    for (int b = 0; b < kBuckets; ++b) {
        for (const Cell& c : buckets[static_cast<std::size_t>(b)].items) {
            Start s;
            s.p.resize(static_cast<std::size_t>(d));
            g.params_at(c.idx, s.p);
            s.base.resize(static_cast<std::size_t>(d));
            for (int a = 0; a < d; ++a)
                s.base[static_cast<std::size_t>(a)] =
                    g.step[static_cast<std::size_t>(a)] *
                    static_cast<double>(1LL << std::min(b, g.to_min[static_cast<std::size_t>(a)]));
            starts.push_back(std::move(s));
        }
    }
    std::vector<double> fixed_base(static_cast<std::size_t>(d));
    for (int a = 0; a < d; ++a)
        fixed_base[static_cast<std::size_t>(a)] =
            (box.axes[static_cast<std::size_t>(a)].hi - box.axes[static_cast<std::size_t>(a)].lo) / 64.0;
    for (const auto& w : warm_starts) {
        if (static_cast<int>(w.size()) != d) throw InvalidParams("maximize: warm start dimension mismatch");
        Start s;
        s.p.resize(static_cast<std::size_t>(d));
        for (int a = 0; a < d; ++a)
            s.p[static_cast<std::size_t>(a)] = axis_move(box.axes[static_cast<std::size_t>(a)], w[static_cast<std::size_t>(a)], 0.0);
        s.base = fixed_base;
        starts.push_back(std::move(s));
    }
    for (int i = 0; i < cfg.restarts; ++i) {
        std::mt19937_64 rng(cfg.seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(i + 1)));
        Start s;
        s.p.resize(static_cast<std::size_t>(d));
        for (int a = 0; a < d; ++a) {
            const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            const Axis& ax = box.axes[static_cast<std::size_t>(a)];
            s.p[static_cast<std::size_t>(a)] = ax.lo + u * (ax.hi - ax.lo);
        }
        s.base = fixed_base;
        starts.push_back(std::move(s));
    }

    double best_v = grid_best.v;
    std::vector<double> best_p(static_cast<std::size_t>(d));
    g.params_at(grid_best.idx, best_p);
    for (const Start& s : starts) {
        Refined r = compass(objective, box, s.p, s.base, cfg.tol, cfg.max_refine_iters);
        if (r.v > best_v || (r.v == best_v && std::lexicographical_compare(r.p.begin(), r.p.end(), best_p.begin(), best_p.end()))) {
            best_v = r.v;
            best_p = std::move(r.p);
        }
    }

    BoundReport rep;
    rep.best_modulus = best_v;
    rep.best_params = std::move(best_p);
    rep.paper_bound = paper_bound;
    rep.verdict = classify_verdict(rep.best_modulus, rep.paper_bound, cfg.tol);
    return rep;
}

Box model_box(const SearchModel& model, int c_count) {
    if (c_count < 1) throw InvalidParams("model_box: c_count must be >= 1");
    Box box;
    if (model.kind == ModelKind::LZ) {
        if (c_count > 3)
            throw ModelInsufficient("the LZ chart stops at c3; use the herglotz model for functionals needing c4+");
        const double caps[3] = {2.0, 1.0, 1.0};  // |c1|, |x|, |zeta|
        for (int j = 0; j < c_count; ++j) {
            if (model.full_phases) {
                box.axes.push_back(Axis{0.0, caps[j], false});
                box.axes.push_back(Axis{0.0, kTwoPi, true});
            } else {
                box.axes.push_back(Axis{-caps[j], caps[j], false});
            }
        }
        return box;
    }
    if (model.atoms < 1) throw InvalidParams("model_box: atoms must be >= 1");
    for (int j = 0; j < model.atoms; ++j) box.axes.push_back(Axis{0.0, 1.0, false});
    for (int j = 0; j < model.atoms; ++j) box.axes.push_back(Axis{0.0, kTwoPi, true});
    return box;
}

CSequence model_cseq(const SearchModel& model, const std::vector<double>& params, int c_count) {
    if (model.kind == ModelKind::LZ) {
        if (c_count > 3) throw ModelInsufficient("the LZ chart stops at c3");
        const int k = c_count;
        const std::size_t want = static_cast<std::size_t>(model.full_phases ? 2 * k : k);
        if (params.size() != want) throw InvalidParams("model_cseq: parameter count mismatch");
        // The chart is a valid parametrization only for real c1, so the
        // full-phase mode keeps c1 real and applies the global rotation
        // c_k -> e^{ik theta} c_k afterwards; together with the free phases
        // of x and zeta that covers every admissible triple.
        LZParams lz;
        if (model.full_phases) {
            lz.c1 = params[0];
            lz.x = k >= 2 ? std::polar(params[2], params[3]) : Complex{0.0, 0.0};
            lz.zeta = k >= 3 ? std::polar(params[4], params[5]) : Complex{0.0, 0.0};
        } else {
            lz.c1 = params[0];
            lz.x = k >= 2 ? Complex{params[1], 0.0} : Complex{0.0, 0.0};
            lz.zeta = k >= 3 ? Complex{params[2], 0.0} : Complex{0.0, 0.0};
        }
        const auto [c2, c3] = lz_expand(lz);
        CSequence cs;
        cs.c = {lz.c1};
        if (k >= 2) cs.c.push_back(c2);
        if (k >= 3) cs.c.push_back(c3);
        if (model.full_phases) {
            const double theta = params[1];
            for (std::size_t j = 0; j < cs.c.size(); ++j)
                cs.c[j] *= std::polar(1.0, theta * static_cast<double>(j + 1));
        }
        return cs;
    }
    const int m = model.atoms;
    if (params.size() != static_cast<std::size_t>(2 * m)) throw InvalidParams("model_cseq: parameter count mismatch");
    double sum = 0.0;
    for (int j = 0; j < m; ++j) sum += std::max(0.0, params[static_cast<std::size_t>(j)]);
    HerglotzMeasure meas;
    meas.atoms.resize(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        const double raw = std::max(0.0, params[static_cast<std::size_t>(j)]);
        meas.atoms[static_cast<std::size_t>(j)].weight = sum > 1e-12 ? raw / sum : 1.0 / m;
        meas.atoms[static_cast<std::size_t>(j)].angle = params[static_cast<std::size_t>(m + j)];
    }
    return herglotz_cseq(meas, c_count);
}

std::vector<std::vector<double>> candidate_measure_params(FunctionClass cls, int atoms) {
    std::vector<std::vector<double>> out;
    const auto pad = [atoms](std::vector<double> w, std::vector<double> th) {
        w.resize(static_cast<std::size_t>(atoms), 0.0);
        th.resize(static_cast<std::size_t>(atoms), 0.0);
        w.insert(w.end(), th.begin(), th.end());
        return w;
    };
    const double third = 1.0 / 3.0;
    switch (cls) {
        case FunctionClass::BoundedTurning:
        case FunctionClass::Convex:
            // Atoms at the cube roots of unity: c_k = 2 when 3 | k, else 0.
            if (atoms >= 3) out.push_back(pad({third, third, third}, {0.0, kTwoPi / 3.0, 2.0 * kTwoPi / 3.0}));
            break;
        case FunctionClass::Starlike:
            out.push_back(pad({1.0}, {0.0}));                // Koebe: c_k = 2
            out.push_back(pad({1.0}, {std::numbers::pi}));   // its half-turn rotation
            break;
    }
    return out;
}

BoundReport audit_class(FunctionClass cls, Functional fn, const SearchConfig& cfg_in) {
    SearchConfig cfg = cfg_in;
    const int c_count = functional_max_index(fn) - 1;
    const Box box = model_box(cfg.model, c_count);

    const SearchModel model = cfg.model;
    const int n = c_count + 1;
    const Objective obj = [model, cls, fn, c_count, n](const std::vector<double>& p) {
        const CSequence cs = model_cseq(model, p, c_count);
        const auto a = coeffs_for_class<Complex>(cls, std::span<const Complex>(cs.c), n, false);
        return std::abs(evaluate_functional(fn, a));
    };

    std::optional<Rational> bound;
    if (fn == Functional::H3_1)
        bound = triangle_bound(class_triangle_inputs(cls));
    else
        bound = cited_bound(cls, fn);

    std::vector<std::vector<double>> warms;
    if (cfg.model.kind == ModelKind::Herglotz) warms = candidate_measure_params(cls, cfg.model.atoms);

    BoundReport rep = maximize(obj, box, cfg, warms, bound);
    rep.class_tag = cls;
    rep.functional_name = fn;
    rep.model = cfg.model.label();
    return rep;
}

}  // namespace hankelkit
