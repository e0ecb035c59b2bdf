#include "doctest.h"

#include "hankelkit/errors.hpp"
#include "hankelkit/extremal.hpp"

#include <numbers>

using namespace hankelkit;

namespace {
Rational q(long long n, long long d = 1) { return Rational(n, d); }
}  // namespace

TEST_CASE("bounded-turning witness integrates the doubled cube kernel") {
    const auto e = extremal_expansion(ExtremalSpec::paper(FunctionClass::BoundedTurning), 8);
    CHECK(e.normalized);
    CHECK(e.a(1) == q(1));
    CHECK(e.a(2) == q(0));
    CHECK(e.a(3) == q(0));
    CHECK(e.a(4) == q(1, 2));
    CHECK(e.a(5) == q(0));
    CHECK(e.a(6) == q(0));
    CHECK(e.a(7) == q(2, 7));
    CHECK(e.a(8) == q(0));
}

TEST_CASE("starlike witnesses: Koebe and its half-turn rotation") {
    const auto k = extremal_expansion(ExtremalSpec::paper(FunctionClass::Starlike), 6);
    for (int j = 1; j <= 6; ++j) CHECK(k.a(j) == q(j));

    const auto r = extremal_expansion(ExtremalSpec::rotation(std::numbers::pi), 6);
    for (int j = 1; j <= 6; ++j) CHECK(r.a(j) == (j % 2 ? q(j) : q(-j)));

    CHECK_THROWS_AS(extremal_expansion(ExtremalSpec::rotation(1.0), 6), InvalidParams);
}

TEST_CASE("convex derived witness integrates the binomial kernel") {
    const auto e = extremal_expansion(ExtremalSpec::derived(FunctionClass::Convex), 8);
    CHECK(e.normalized);
    CHECK(e.a(1) == q(1));
    CHECK(e.a(4) == q(1, 6));
    CHECK(e.a(7) == q(5, 63));
    CHECK(e.a(2) == q(0));
    CHECK(e.a(3) == q(0));
    CHECK(e.a(5) == q(0));
    CHECK(e.a(6) == q(0));
}

TEST_CASE("convex published witness stays as printed and is not normalized") {
    const auto e = extremal_expansion(ExtremalSpec::paper(FunctionClass::Convex), 8);
    CHECK_FALSE(e.normalized);
    CHECK(e.a(1) == q(0));
    CHECK(e.a(2) == q(1, 2));
    CHECK(e.a(6) == q(1, 12));
    CHECK_THROWS_AS(extremal_coeffs(ExtremalSpec::paper(FunctionClass::Convex), 8), InvalidParams);
    CHECK_NOTHROW(extremal_coeffs(ExtremalSpec::derived(FunctionClass::Convex), 8));
}

TEST_CASE("functional values on the witnesses are the recorded exact numbers") {
    const auto r = ExtremalSpec::paper(FunctionClass::BoundedTurning);
    CHECK(functional_on_extremal(r, Functional::T_a2a3_a4) == q(-1, 2));
    CHECK(functional_on_extremal(r, Functional::FeketeSzego) == q(0));
    CHECK(functional_on_extremal(r, Functional::SecondHankel) == q(0));
    CHECK(functional_on_extremal(r, Functional::H3_1) == q(-1, 4));

    const auto k = ExtremalSpec::paper(FunctionClass::Starlike);
    CHECK(functional_on_extremal(k, Functional::T_a2a3_a4) == q(2));
    CHECK(functional_on_extremal(k, Functional::FeketeSzego) == q(-1));
    CHECK(functional_on_extremal(k, Functional::SecondHankel) == q(-1));
    CHECK(functional_on_extremal(k, Functional::H3_1) == q(0));

    const auto k1 = ExtremalSpec::rotation(std::numbers::pi);
    CHECK(functional_on_extremal(k1, Functional::T_a2a3_a4) == q(-2));

    const auto c = ExtremalSpec::derived(FunctionClass::Convex);
    CHECK(functional_on_extremal(c, Functional::T_a2a3_a4) == q(-1, 6));
    CHECK(functional_on_extremal(c, Functional::H3_1) == q(-1, 36));

    // the published convex formula misses the bound entirely
    const auto cp = ExtremalSpec::paper(FunctionClass::Convex);
    CHECK(functional_on_extremal(cp, Functional::T_a2a3_a4) == q(0));
}

TEST_CASE("sharpness verdicts come from exact comparison") {
    const auto sr = sharpness_detail(ExtremalSpec::paper(FunctionClass::BoundedTurning),
                                     Functional::T_a2a3_a4);
    CHECK(sr.exact_equality);
    CHECK(sr.normalized);
    CHECK(sr.exact_modulus == q(1, 2));
    CHECK(sr.report.verdict == Verdict::AttainsWithinTol);
    CHECK(sr.report.model == "extremal:paper");

    const auto sc = sharpness_detail(ExtremalSpec::derived(FunctionClass::Convex),
                                     Functional::T_a2a3_a4);
    CHECK(sc.exact_equality);
    CHECK(sc.report.verdict == Verdict::AttainsWithinTol);

    const auto missed = sharpness_detail(ExtremalSpec::paper(FunctionClass::Convex),
                                         Functional::T_a2a3_a4);
    CHECK_FALSE(missed.exact_equality);
    CHECK_FALSE(missed.normalized);
    CHECK(missed.report.verdict == Verdict::BelowBound);

    // no cited sharp value exists for the third determinant
    const auto h = sharpness_detail(ExtremalSpec::paper(FunctionClass::Starlike), Functional::H3_1);
    CHECK_FALSE(h.report.paper_bound.has_value());
    CHECK(h.report.verdict == Verdict::BelowBound);
}

TEST_CASE("equality-witness candidate lists") {
    CHECK(extremal_candidates(FunctionClass::BoundedTurning).size() == 1);
    CHECK(extremal_candidates(FunctionClass::Starlike).size() == 2);
    CHECK(extremal_candidates(FunctionClass::Convex).size() == 1);
    for (const auto& spec : extremal_candidates(FunctionClass::Starlike)) CHECK(spec.valid());
    CHECK(extremal_candidates(FunctionClass::Convex)[0].variant == ExtremalVariant::DerivedFormula);
}

TEST_CASE("rotation witnesses are starlike-only") {
    ExtremalSpec bad = ExtremalSpec::rotation(std::numbers::pi);
    bad.class_tag = FunctionClass::Convex;
    CHECK_FALSE(bad.valid());
    CHECK_THROWS_AS(extremal_expansion(bad, 6), InvalidParams);
}
