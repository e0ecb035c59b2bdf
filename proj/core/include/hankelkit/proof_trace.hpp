#pragma once

#include "hankelkit/errors.hpp"
#include "hankelkit/function_class.hpp"

#include <string>
#include <vector>

namespace hankelkit {

// The reduced box each class's |a2a3-a4| estimate lives on: c real in a
// class-specific interval, rho = |x| in [0,1].
struct ReductionCase {
    FunctionClass class_tag = FunctionClass::BoundedTurning;
    double c_lo = -2.0, c_hi = 0.0;
    double rho_lo = 0.0, rho_hi = 1.0;

    static ReductionCase for_class(FunctionClass cls);
    bool valid() const;
};

// F(c, rho): the one-variable majorant, exactly as printed per class.
double F_value(const ReductionCase& rc, double c, double rho);

// G(c) = the printed rho-eliminated form; coincides with F(c, 0).
double G_value(const ReductionCase& rc, double c);

// dF/drho computed analytically from the implemented F. (Not the printed
// derivative: the starlike one as printed drops a factor of rho from its
// second term, so we differentiate our own F.)
double F_rho_derivative(const ReductionCase& rc, double c, double rho);

// Sum of the pre-reduction expansion's terms with the printed signs dropped,
// x -> rho, |z| = 1. Identical to F for every class; for negative c the
// individual terms keep the sign of c rather than its modulus, which is why
// the independent search audits the bound from outside this reduction.
double pre_reduction_majorant(const ReductionCase& rc, double c, double rho);

struct MonotonicityViolation {
    double c = 0.0;
    double rho_lo = 0.0, rho_hi = 0.0;
    double delta = 0.0;  // F(rho_hi) - F(rho_lo)
};

// One claimed direction of F in rho over a sub-range of c.
struct MonotonicityClaim {
    std::string label;
    double c_lo = 0.0, c_hi = 0.0;
    bool half_open_hi = false;  // claim stated on [c_lo, c_hi)
    bool increasing = false;
    long long checked = 0;
    long long violation_count = 0;
    std::vector<MonotonicityViolation> witnesses;  // first few only
};

struct MonotonicityReport {
    FunctionClass class_tag = FunctionClass::BoundedTurning;
    int resolution = 0;
    std::vector<MonotonicityClaim> claims;
};

// Finite-difference check of every direction claim made for the class.
// The starlike case carries two claims; only the c in [1,2] one is true,
// the report records witnesses against the other instead of hiding them.
MonotonicityReport monotonicity_report(const ReductionCase& rc, int grid_resolution);

struct ReducedMax {
    double value = 0.0;
    double c = 0.0;
    double rho = 0.0;
};

// Dense grid over the (c, rho) box followed by compass refinement with step
// halving. Ties break toward smaller c, then smaller rho.
ReducedMax reduced_max(const ReductionCase& rc, double tol, int grid_resolution = 2001);

}  // namespace hankelkit
