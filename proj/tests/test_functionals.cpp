#include "doctest.h"

#include "hankelkit/errors.hpp"
#include "hankelkit/functionals.hpp"

#include <random>

using namespace hankelkit;

namespace {

Rational q(long long n, long long d = 1) { return Rational(n, d); }

CoeffSeqQ seq(std::vector<Rational> a) {
    CoeffSeqQ s;
    s.a = std::move(a);
    return s;
}

}  // namespace

TEST_CASE("second-order determinants match their closed forms") {
    const auto a = seq({q(1), q(2), q(3), q(4), q(5)});
    CHECK(hankel_det(a, 2, 2) == q(2) * q(4) - q(3) * q(3));  // a2 a4 - a3^2
    CHECK(hankel_det(a, 2, 1) == q(3) - q(4));                // a3 - a2^2 with a2=2: 3-4
    CHECK(hankel_det(a, 1, 3) == q(3));
    CHECK(second_hankel(a) == q(-1));
    CHECK(fekete_szego(a) == q(-1));
    CHECK(t_functional(a) == q(2) * q(3) - q(4));
}

TEST_CASE("third-order determinant expansion is the cofactor value") {
    const auto a = seq({q(1), q(1, 2), q(-2, 3), q(3, 7), q(5, 11)});
    CHECK(h3_expansion(a) == hankel_det(a, 3, 1));
}

TEST_CASE("determinant expansion equals cofactor determinant on random rationals") {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<long long> num(-9, 9);
    std::uniform_int_distribution<long long> den(1, 9);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Rational> a = {q(1)};
        for (int k = 2; k <= 5; ++k) a.push_back(q(num(rng), den(rng)));
        const auto s = seq(a);
        CHECK(h3_expansion(s) == hankel_det(s, 3, 1));
    }
}

TEST_CASE("determinants need the full coefficient window") {
    const auto a = seq({q(1), q(2), q(3)});
    CHECK_THROWS_AS(hankel_det(a, 3, 1), InsufficientCoefficients);
    CHECK_THROWS_AS(h3_expansion(a), InsufficientCoefficients);
    CHECK_THROWS_AS(hankel_det(a, 5, 1), std::invalid_argument);
    CHECK_THROWS_AS(hankel_det(a, 2, 0), std::invalid_argument);
}

TEST_CASE("functional dispatch and modulus") {
    const auto a = seq({q(1), q(2), q(3), q(4), q(5)});
    CHECK(evaluate_functional(Functional::T_a2a3_a4, a) == q(2));
    CHECK(evaluate_functional(Functional::FeketeSzego, a) == q(-1));
    CHECK(evaluate_functional(Functional::SecondHankel, a) == q(-1));
    CHECK(evaluate_functional(Functional::H3_1, a) == h3_expansion(a));
}

TEST_CASE("triangle ceiling recomputations per class") {
    CHECK(triangle_bound(class_triangle_inputs(FunctionClass::BoundedTurning)) == q(439, 540));
    CHECK(triangle_bound(class_triangle_inputs(FunctionClass::Starlike)) == q(16));
    CHECK(triangle_bound(class_triangle_inputs(FunctionClass::Convex)) == q(15, 24));
}

TEST_CASE("published ceilings: starlike and convex match, bounded-turning does not") {
    const auto pr = printed_h3_ceiling(FunctionClass::BoundedTurning);
    CHECK(pr.num == 993);
    CHECK(pr.den == 1620);
    CHECK(pr.value() != triangle_bound(class_triangle_inputs(FunctionClass::BoundedTurning)));

    CHECK(printed_h3_ceiling(FunctionClass::Starlike).value() ==
          triangle_bound(class_triangle_inputs(FunctionClass::Starlike)));
    CHECK(printed_h3_ceiling(FunctionClass::Convex).value() ==
          triangle_bound(class_triangle_inputs(FunctionClass::Convex)));
}

TEST_CASE("triangle bound is the literal positive combination") {
    TriangleInputs t;
    t.cap_a3 = q(1, 2);
    t.cap_a4 = q(1, 3);
    t.cap_a5 = q(1, 5);
    t.bound_h22 = q(2);
    t.bound_t = q(3);
    t.bound_fs = q(5);
    CHECK(triangle_bound(t) == q(1, 2) * q(2) + q(1, 3) * q(3) + q(1, 5) * q(5));
    t.cap_a3 = q(-1);
    CHECK_THROWS_AS(triangle_bound(t), InvalidParams);
}

TEST_CASE("constituent caps and cited values are wired per class") {
    CHECK(coefficient_cap(FunctionClass::BoundedTurning, 4) == q(1, 2));
    CHECK(coefficient_cap(FunctionClass::Starlike, 5) == q(5));
    CHECK(coefficient_cap(FunctionClass::Convex, 3) == q(1));
    CHECK(cited_bound(FunctionClass::BoundedTurning, Functional::T_a2a3_a4) == q(1, 2));
    CHECK(cited_bound(FunctionClass::Starlike, Functional::T_a2a3_a4) == q(2));
    CHECK(cited_bound(FunctionClass::Convex, Functional::T_a2a3_a4) == q(1, 6));
    CHECK(cited_bound(FunctionClass::BoundedTurning, Functional::FeketeSzego) == q(2, 3));
    CHECK(cited_bound(FunctionClass::Convex, Functional::SecondHankel) == q(1, 8));
    CHECK_THROWS(cited_bound(FunctionClass::Convex, Functional::H3_1));
}
