#pragma once

#include "hankelkit/function_class.hpp"
#include "hankelkit/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hankelkit {

enum class Verdict { AttainsWithinTol, BelowBound, ExceedsBound };

std::string verdict_name(Verdict v);

// One audited bound: what was searched, the best modulus found, where, and
// how it compares to the cited value (when there is one).
struct BoundReport {
    FunctionClass class_tag = FunctionClass::BoundedTurning;
    Functional functional_name = Functional::T_a2a3_a4;
    std::string model;  // "lz", "lz-real", "herglotz:4", "extremal:paper", ...
    double best_modulus = 0.0;
    std::vector<double> best_params;
    std::optional<Rational> paper_bound;
    Verdict verdict = Verdict::BelowBound;
};

// No bound attached reads as BelowBound (nothing to attain or exceed).
Verdict classify_verdict(double best_modulus, const std::optional<Rational>& bound, double tol);

}  // namespace hankelkit
