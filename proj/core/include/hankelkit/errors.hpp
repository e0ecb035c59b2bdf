#pragma once

#include <stdexcept>
#include <string>

namespace hankelkit {

// Division by a series whose constant term is (numerically) zero.
struct ZeroConstantTerm : std::domain_error {
    explicit ZeroConstantTerm(const std::string& what) : std::domain_error(what) {}
};

// exp of a series requires a vanishing constant term.
struct NonzeroConstantTerm : std::domain_error {
    explicit NonzeroConstantTerm(const std::string& what) : std::domain_error(what) {}
};

// Parameter triple outside the admissible |c1|<=2, |x|<=1, |zeta|<=1 box.
struct InvalidParams : std::invalid_argument {
    explicit InvalidParams(const std::string& what) : std::invalid_argument(what) {}
};

// Atomic measure with negative weights or weights not summing to one.
struct InvalidMeasure : std::invalid_argument {
    explicit InvalidMeasure(const std::string& what) : std::invalid_argument(what) {}
};

// A functional or recurrence asked for coefficients past the stored range.
struct InsufficientCoefficients : std::out_of_range {
    explicit InsufficientCoefficients(const std::string& what) : std::out_of_range(what) {}
};

// Evaluation point outside the reduction's (c, rho) rectangle.
struct OutOfRange : std::domain_error {
    explicit OutOfRange(const std::string& what) : std::domain_error(what) {}
};

// Requested parametrization cannot supply enough coefficients for the functional.
struct ModelInsufficient : std::invalid_argument {
    explicit ModelInsufficient(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace hankelkit
