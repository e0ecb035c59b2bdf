#include "hankelkit/function_class.hpp"

#include <stdexcept>

namespace hankelkit {

std::string class_name(FunctionClass cls) {
    switch (cls) {
        case FunctionClass::BoundedTurning: return "bounded-turning";
        case FunctionClass::Starlike: return "starlike";
        case FunctionClass::Convex: return "convex";
    }
    return "?";
}

std::string functional_name(Functional f) {
    switch (f) {
        case Functional::T_a2a3_a4: return "a2a3-a4";
        case Functional::FeketeSzego: return "fekete-szego";
        case Functional::SecondHankel: return "h2(2)";
        case Functional::H3_1: return "h3(1)";
    }
    return "?";
}

std::optional<FunctionClass> parse_class(const std::string& s) {
    if (s == "r") return FunctionClass::BoundedTurning;
    if (s == "star") return FunctionClass::Starlike;
    if (s == "convex") return FunctionClass::Convex;
    return std::nullopt;
}

std::optional<Functional> parse_functional(const std::string& s) {
    if (s == "t") return Functional::T_a2a3_a4;
    if (s == "fs") return Functional::FeketeSzego;
    if (s == "h22") return Functional::SecondHankel;
    if (s == "h31") return Functional::H3_1;
    return std::nullopt;
}

std::string class_flag(FunctionClass cls) {
    switch (cls) {
        case FunctionClass::BoundedTurning: return "r";
        case FunctionClass::Starlike: return "star";
        case FunctionClass::Convex: return "convex";
    }
    return "?";
}

std::string functional_flag(Functional f) {
    switch (f) {
        case Functional::T_a2a3_a4: return "t";
        case Functional::FeketeSzego: return "fs";
        case Functional::SecondHankel: return "h22";
        case Functional::H3_1: return "h31";
    }
    return "?";
}

Rational coefficient_cap(FunctionClass cls, int k) {
    if (k < 1) throw std::invalid_argument("coefficient_cap: k must be >= 1");
    if (k == 1) return Rational(1);
    switch (cls) {
        case FunctionClass::BoundedTurning: return Rational(2, k);
        case FunctionClass::Starlike: return Rational(k);
        case FunctionClass::Convex: return Rational(1);
    }
    throw std::invalid_argument("coefficient_cap: bad class");
}

Rational cited_bound(FunctionClass cls, Functional f) {
    switch (f) {
        case Functional::T_a2a3_a4:
            switch (cls) {
                case FunctionClass::BoundedTurning: return Rational(1, 2);
                case FunctionClass::Starlike: return Rational(2);
                case FunctionClass::Convex: return Rational(1, 6);
            }
            break;
        case Functional::FeketeSzego:
            switch (cls) {
                case FunctionClass::BoundedTurning: return Rational(2, 3);
                case FunctionClass::Starlike: return Rational(1);
                case FunctionClass::Convex: return Rational(1, 3);
            }
            break;
        case Functional::SecondHankel:
            switch (cls) {
                case FunctionClass::BoundedTurning: return Rational(4, 9);
                case FunctionClass::Starlike: return Rational(1);
                case FunctionClass::Convex: return Rational(1, 8);
            }
            break;
        case Functional::H3_1:
            // No sharp value is asserted for H3(1); callers use the triangle
            // ceiling from the functionals module instead.
            throw std::invalid_argument("cited_bound: H3(1) has no asserted sharp value");
    }
    throw std::invalid_argument("cited_bound: bad class/functional");
}

int functional_max_index(Functional f) {
    switch (f) {
        case Functional::FeketeSzego: return 3;
        case Functional::SecondHankel:
        case Functional::T_a2a3_a4: return 4;
        case Functional::H3_1: return 5;
    }
    throw std::invalid_argument("functional_max_index: bad functional");
}

}  // namespace hankelkit
