#include "hankelkit/functionals.hpp"

#include <stdexcept>

namespace hankelkit {

Rational triangle_bound(const TriangleInputs& t) {
    if (!t.valid()) throw InvalidParams("triangle_bound: all constituents must be >= 0");
    return t.cap_a3 * t.bound_h22 + t.cap_a4 * t.bound_t + t.cap_a5 * t.bound_fs;
}

TriangleInputs class_triangle_inputs(FunctionClass cls) {
    TriangleInputs t;
    t.cap_a3 = coefficient_cap(cls, 3);
    t.cap_a4 = coefficient_cap(cls, 4);
    t.cap_a5 = coefficient_cap(cls, 5);
    t.bound_h22 = cited_bound(cls, Functional::SecondHankel);
    t.bound_t = cited_bound(cls, Functional::T_a2a3_a4);
    t.bound_fs = cited_bound(cls, Functional::FeketeSzego);
    return t;
}

PrintedRational printed_h3_ceiling(FunctionClass cls) {
    switch (cls) {
        case FunctionClass::BoundedTurning: return PrintedRational{993, 1620};
        case FunctionClass::Starlike: return PrintedRational{16, 1};
        case FunctionClass::Convex: return PrintedRational{15, 24};
    }
    throw std::invalid_argument("printed_h3_ceiling: bad class");
}

}  // namespace hankelkit
