#pragma once

#include "hankelkit/rational.hpp"

#include <optional>
#include <string>

namespace hankelkit {

// The three normalized function classes the toolkit covers.
enum class FunctionClass { BoundedTurning, Starlike, Convex };

// Coefficient functionals on a2..a5.
enum class Functional {
    T_a2a3_a4,     // a2*a3 - a4
    FeketeSzego,   // a3 - a2^2
    SecondHankel,  // H2(2) = a2*a4 - a3^2
    H3_1,          // third Hankel determinant at n=1
};

std::string class_name(FunctionClass cls);
std::string functional_name(Functional f);

// CLI spellings: r|star|convex, t|fs|h22|h31.
std::optional<FunctionClass> parse_class(const std::string& s);
std::optional<Functional> parse_functional(const std::string& s);
std::string class_flag(FunctionClass cls);
std::string functional_flag(Functional f);

// Classwise coefficient cap |a_k| <= cap(k): 2/k, k, 1.
Rational coefficient_cap(FunctionClass cls, int k);

// Sharp bounds reported in the literature for the three-coefficient
// functionals; configured constants, not re-derived here.
Rational cited_bound(FunctionClass cls, Functional f);

// Highest a-index the functional reads.
int functional_max_index(Functional f);

}  // namespace hankelkit
