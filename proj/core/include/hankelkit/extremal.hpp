#pragma once

#include "hankelkit/bound_report.hpp"
#include "hankelkit/class_maps.hpp"
#include "hankelkit/series.hpp"

#include <string>
#include <vector>

namespace hankelkit {

enum class ExtremalVariant { PaperFormula, DerivedFormula, Rotation };

// Which equality witness to expand. Rotation applies only to the starlike
// class (Koebe rotated by the given angle).
struct ExtremalSpec {
    FunctionClass class_tag = FunctionClass::Starlike;
    ExtremalVariant variant = ExtremalVariant::PaperFormula;
    double angle = 0.0;  // Rotation only

    static ExtremalSpec paper(FunctionClass cls);
    static ExtremalSpec derived(FunctionClass cls);
    static ExtremalSpec rotation(double angle);

    bool valid() const;
    std::string label() const;  // "paper" | "derived" | "rotation"
};

// Raw expansion of the witness: f.c[k] is the coefficient of z^k, exact
// rationals. `normalized` records whether f(0)=0 and f'(0)=1; the convex
// class's published formula fails that, and we keep it as printed instead
// of silently fixing it.
struct ExtremalExpansion {
    ExtremalSpec spec;
    SeriesQ f;
    bool normalized = true;

    int order() const { return f.order(); }
    Rational a(int k) const;
};

ExtremalExpansion extremal_expansion(const ExtremalSpec& spec, int order);

// Normalized expansions only; throws InvalidParams on the convex published
// formula (use extremal_expansion to inspect it).
CoeffSeqQ extremal_coeffs(const ExtremalSpec& spec, int order);

// Exact functional value on the raw expansion (works for the non-normalized
// case too, which is how its failure to attain the bound gets reported).
Rational functional_on_extremal(const ExtremalSpec& spec, Functional f, int order = 12);

struct SharpnessResult {
    BoundReport report;
    Rational exact_modulus;
    bool exact_equality = false;  // exact match with the cited bound
    bool normalized = true;
};

SharpnessResult sharpness_detail(const ExtremalSpec& spec, Functional f, int order = 12);
BoundReport sharpness_check(const ExtremalSpec& spec, Functional f, int order = 12);

// The in-class equality witnesses per class, used as floor candidates for
// the empirical H3(1) searches.
std::vector<ExtremalSpec> extremal_candidates(FunctionClass cls);

}  // namespace hankelkit
