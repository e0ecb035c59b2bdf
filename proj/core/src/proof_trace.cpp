#include "hankelkit/proof_trace.hpp"

#include <algorithm>
#include <cmath>

namespace hankelkit {

namespace {

constexpr double kRangeSlack = 1e-9;
constexpr double kMonoTol = 1e-12;
constexpr double kRefineFloor = 1e-12;
constexpr std::size_t kMaxWitnesses = 8;

void check_range(const ReductionCase& rc, double c, double rho) {
    if (c < rc.c_lo - kRangeSlack || c > rc.c_hi + kRangeSlack)
        throw OutOfRange("c outside the reduced range for this class");
    if (rho < rc.rho_lo - kRangeSlack || rho > rc.rho_hi + kRangeSlack)
        throw OutOfRange("rho outside [0,1]");
}

}  // namespace

ReductionCase ReductionCase::for_class(FunctionClass cls) {
    ReductionCase rc;
    rc.class_tag = cls;
    if (cls == FunctionClass::Starlike) {
        rc.c_lo = 0.0;
        rc.c_hi = 2.0;
    } else {
        rc.c_lo = -2.0;
        rc.c_hi = 0.0;
    }
    rc.rho_lo = 0.0;
    rc.rho_hi = 1.0;
    return rc;
}

bool ReductionCase::valid() const {
    if (rho_lo != 0.0 || rho_hi != 1.0) return false;
    if (class_tag == FunctionClass::Starlike) return c_lo == 0.0 && c_hi == 2.0;
    return c_lo == -2.0 && c_hi == 0.0;
}

double F_value(const ReductionCase& rc, double c, double rho) {
    check_range(rc, c, rho);
    const double s = 4.0 - c * c;
    switch (rc.class_tag) {
        case FunctionClass::BoundedTurning:
            return c * c * c / 48.0 + s / 8.0 + c * s * rho / 24.0 + (c - 2.0) * s * rho * rho / 16.0;
        case FunctionClass::Starlike:
            return (3.0 * c * c * c + 2.0 * s + 2.0 * c * s * rho + (c - 2.0) * s * rho * rho) / 12.0;
        case FunctionClass::Convex:
            return s / 24.0 + c * s * rho / 16.0 + (c - 2.0) * s * rho * rho / 48.0;
    }
    throw std::invalid_argument("F_value: bad class");
}

double G_value(const ReductionCase& rc, double c) {
    check_range(rc, c, 0.0);
    switch (rc.class_tag) {
        case FunctionClass::BoundedTurning:
            return c * c * c / 48.0 + (4.0 - c * c) / 8.0;
        case FunctionClass::Starlike:
            return (3.0 * c * c * c - 2.0 * c * c + 8.0) / 12.0;
        case FunctionClass::Convex:
            return (4.0 - c * c) / 24.0;
    }
    throw std::invalid_argument("G_value: bad class");
}

double F_rho_derivative(const ReductionCase& rc, double c, double rho) {
    check_range(rc, c, rho);
    const double s = 4.0 - c * c;
    switch (rc.class_tag) {
        case FunctionClass::BoundedTurning:
            return c * s / 24.0 + (c - 2.0) * s * rho / 8.0;
        case FunctionClass::Starlike:
            return (2.0 * c * s + 2.0 * (c - 2.0) * s * rho) / 12.0;
        case FunctionClass::Convex:
            return c * s / 16.0 + (c - 2.0) * s * rho / 24.0;
    }
    throw std::invalid_argument("F_rho_derivative: bad class");
}

double pre_reduction_majorant(const ReductionCase& rc, double c, double rho) {
    check_range(rc, c, rho);
    const double s = 4.0 - c * c;
    const double tail = s * (1.0 - rho * rho);
    switch (rc.class_tag) {
        case FunctionClass::BoundedTurning:
            return c * c * c / 48.0 + c * s * rho / 24.0 + c * s * rho * rho / 16.0 + tail / 8.0;
        case FunctionClass::Starlike:
            return (3.0 * c * c * c + 2.0 * c * s * rho + c * s * rho * rho + 2.0 * tail) / 12.0;
        case FunctionClass::Convex:
            return (3.0 * c * s * rho + c * s * rho * rho + 2.0 * tail) / 48.0;
    }
    throw std::invalid_argument("pre_reduction_majorant: bad class");
}

namespace {

MonotonicityClaim run_claim(const ReductionCase& rc, int n, double c_lo, double c_hi, bool half_open_hi,
                            bool increasing, std::string label) {
    MonotonicityClaim cl;
    cl.label = std::move(label);
    cl.c_lo = c_lo;
    cl.c_hi = c_hi;
    cl.half_open_hi = half_open_hi;
    cl.increasing = increasing;
    const double dc = (c_hi - c_lo) / (n - 1);
    const double dr = 1.0 / (n - 1);
    for (int i = 0; i < n; ++i) {
        const double c = (i == n - 1) ? c_hi : c_lo + i * dc;
        if (half_open_hi && c >= c_hi) continue;
        double prev = F_value(rc, c, 0.0);
        for (int j = 1; j < n; ++j) {
            const double rho = (j == n - 1) ? 1.0 : j * dr;
            const double cur = F_value(rc, c, rho);
            const double delta = cur - prev;
            const bool bad = increasing ? (delta < -kMonoTol) : (delta > kMonoTol);
            ++cl.checked;
            if (bad) {
                ++cl.violation_count;
                if (cl.witnesses.size() < kMaxWitnesses)
                    cl.witnesses.push_back({c, rho - dr, rho, delta});
            }
            prev = cur;
        }
    }
    return cl;
}

}  // namespace

MonotonicityReport monotonicity_report(const ReductionCase& rc, int grid_resolution) {
    if (grid_resolution < 2) throw InvalidParams("monotonicity_report: grid_resolution must be >= 2");
    MonotonicityReport rep;
    rep.class_tag = rc.class_tag;
    rep.resolution = grid_resolution;
    const int n = grid_resolution;
    if (rc.class_tag == FunctionClass::Starlike) {
        rep.claims.push_back(run_claim(rc, n, 1.0, 2.0, false, true,
                                       "F nondecreasing in rho for c in [1,2]"));
        rep.claims.push_back(run_claim(rc, n, 0.0, 1.0, true, false,
                                       "F nonincreasing in rho for c in [0,1)"));
    } else {
        rep.claims.push_back(run_claim(rc, n, rc.c_lo, rc.c_hi, false, false,
                                       "F nonincreasing in rho for c in [-2,0]"));
    }
    return rep;
}

ReducedMax reduced_max(const ReductionCase& rc, double tol, int grid_resolution) {
    if (tol <= 0.0) throw InvalidParams("reduced_max: tol must be > 0");
    if (grid_resolution < 3) throw InvalidParams("reduced_max: grid_resolution must be >= 3");
    const int n = grid_resolution;
    const double dc = (rc.c_hi - rc.c_lo) / (n - 1);
    const double dr = (rc.rho_hi - rc.rho_lo) / (n - 1);

    ReducedMax best;
    best.value = -1.0;
    for (int i = 0; i < n; ++i) {
        const double c = (i == n - 1) ? rc.c_hi : rc.c_lo + i * dc;
        for (int j = 0; j < n; ++j) {
            const double rho = (j == n - 1) ? rc.rho_hi : rc.rho_lo + j * dr;
            const double v = F_value(rc, c, rho);
            if (v > best.value) best = {v, c, rho};
        }
    }

    // Compass refinement; clamp to the box, move only on strict improvement.
    double step = std::max(dc, dr);
    const double floor_step = std::min(tol, kRefineFloor);
    while (step > floor_step) {
        bool moved = false;
        const double cand[4][2] = {{best.c + step, best.rho},
                                   {best.c - step, best.rho},
                                   {best.c, best.rho + step},
                                   {best.c, best.rho - step}};
        for (const auto& p : cand) {
            const double cc = std::clamp(p[0], rc.c_lo, rc.c_hi);
            const double rr = std::clamp(p[1], rc.rho_lo, rc.rho_hi);
            const double v = F_value(rc, cc, rr);
            if (v > best.value) {
                best = {v, cc, rr};
                moved = true;
            }
        }
        if (!moved) step *= 0.5;
    }
    return best;
}

}  // namespace hankelkit
