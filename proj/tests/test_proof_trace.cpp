#include "doctest.h"

#include "hankelkit/errors.hpp"
#include "hankelkit/proof_trace.hpp"

#include <cmath>

using namespace hankelkit;

TEST_CASE("reduction rectangles per class") {
    const auto r = ReductionCase::for_class(FunctionClass::BoundedTurning);
    CHECK(r.c_lo == -2.0);
    CHECK(r.c_hi == 0.0);
    const auto s = ReductionCase::for_class(FunctionClass::Starlike);
    CHECK(s.c_lo == 0.0);
    CHECK(s.c_hi == 2.0);
    const auto c = ReductionCase::for_class(FunctionClass::Convex);
    CHECK(c.c_lo == -2.0);
    CHECK(c.c_hi == 0.0);
    CHECK(r.rho_lo == 0.0);
    CHECK(r.rho_hi == 1.0);
}

TEST_CASE("F at pinned points") {
    const auto r = ReductionCase::for_class(FunctionClass::BoundedTurning);
    CHECK(F_value(r, 0.0, 0.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(F_value(r, -2.0, 0.7) == doctest::Approx(-8.0 / 48.0).epsilon(1e-14));

    const auto s = ReductionCase::for_class(FunctionClass::Starlike);
    CHECK(F_value(s, 2.0, 0.0) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(F_value(s, 2.0, 1.0) == doctest::Approx(2.0).epsilon(1e-14));  // flat edge
    CHECK(F_value(s, 0.0, 0.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));

    const auto c = ReductionCase::for_class(FunctionClass::Convex);
    CHECK(F_value(c, 0.0, 0.0) == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
    CHECK(F_value(c, 0.0, 1.0) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("G coincides with F at rho = 0") {
    for (const FunctionClass cls :
         {FunctionClass::BoundedTurning, FunctionClass::Starlike, FunctionClass::Convex}) {
        const auto rc = ReductionCase::for_class(cls);
        for (int i = 0; i <= 40; ++i) {
            const double c = rc.c_lo + (rc.c_hi - rc.c_lo) * i / 40.0;
            CHECK(std::abs(G_value(rc, c) - F_value(rc, c, 0.0)) < 1e-14);
        }
    }
}

TEST_CASE("analytic rho-derivative matches central differences") {
    const double h = 1e-6;
    for (const FunctionClass cls :
         {FunctionClass::BoundedTurning, FunctionClass::Starlike, FunctionClass::Convex}) {
        const auto rc = ReductionCase::for_class(cls);
        for (int i = 0; i <= 20; ++i) {
            const double c = rc.c_lo + (rc.c_hi - rc.c_lo) * i / 20.0;
            for (int j = 1; j < 10; ++j) {
                const double rho = j / 10.0;
                const double fd = (F_value(rc, c, rho + h) - F_value(rc, c, rho - h)) / (2.0 * h);
                CHECK(F_rho_derivative(rc, c, rho) == doctest::Approx(fd).epsilon(1e-6));
            }
        }
    }
}

// The invariant behind the reduction: summing the expansion's terms with
// signs dropped, |x| -> rho and |z| = 1, lands exactly on F.
TEST_CASE("sign-dropped term sum reproduces F everywhere") {
    for (const FunctionClass cls :
         {FunctionClass::BoundedTurning, FunctionClass::Starlike, FunctionClass::Convex}) {
        const auto rc = ReductionCase::for_class(cls);
        for (int i = 0; i <= 50; ++i) {
            const double c = rc.c_lo + (rc.c_hi - rc.c_lo) * i / 50.0;
            for (int j = 0; j <= 50; ++j) {
                const double rho = j / 50.0;
                CHECK(std::abs(pre_reduction_majorant(rc, c, rho) - F_value(rc, c, rho)) < 1e-12);
            }
        }
    }
}

TEST_CASE("evaluation outside the rectangle throws") {
    const auto rc = ReductionCase::for_class(FunctionClass::Starlike);
    CHECK_THROWS_AS(F_value(rc, -0.5, 0.0), OutOfRange);
    CHECK_THROWS_AS(F_value(rc, 1.0, 1.5), OutOfRange);
}

TEST_CASE("reduced maxima land on the recorded values and argmaxes") {
    const auto r = reduced_max(ReductionCase::for_class(FunctionClass::BoundedTurning), 1e-8, 801);
    CHECK(r.value == doctest::Approx(0.5).epsilon(1e-8));
    CHECK(r.c == doctest::Approx(0.0).epsilon(1e-6));
    CHECK(r.rho == doctest::Approx(0.0).epsilon(1e-6));

    const auto s = reduced_max(ReductionCase::for_class(FunctionClass::Starlike), 1e-8, 801);
    CHECK(s.value == doctest::Approx(2.0).epsilon(1e-8));
    CHECK(s.c == doctest::Approx(2.0).epsilon(1e-6));
    // the c = 2 edge is flat in rho; the tie-break picks the smallest rho
    CHECK(s.rho == doctest::Approx(0.0).epsilon(1e-6));
    // the stated equality point sits on the same flat edge
    CHECK(F_value(ReductionCase::for_class(FunctionClass::Starlike), 2.0, 1.0) ==
          doctest::Approx(s.value).epsilon(1e-9));

    const auto c = reduced_max(ReductionCase::for_class(FunctionClass::Convex), 1e-8, 801);
    CHECK(c.value == doctest::Approx(1.0 / 6.0).epsilon(1e-8));
    CHECK(c.c == doctest::Approx(0.0).epsilon(1e-6));
    CHECK(c.rho == doctest::Approx(0.0).epsilon(1e-6));
}

TEST_CASE("direction claims: true ones are violation-free, the recorded false one is not") {
    const auto r = monotonicity_report(ReductionCase::for_class(FunctionClass::BoundedTurning), 501);
    REQUIRE(r.claims.size() == 1);
    CHECK(r.claims[0].violation_count == 0);
    CHECK(r.claims[0].checked > 0);

    const auto c = monotonicity_report(ReductionCase::for_class(FunctionClass::Convex), 501);
    REQUIRE(c.claims.size() == 1);
    CHECK(c.claims[0].violation_count == 0);

    const auto s = monotonicity_report(ReductionCase::for_class(FunctionClass::Starlike), 501);
    REQUIRE(s.claims.size() == 2);
    CHECK(s.claims[0].c_lo == 1.0);  // the gated claim
    CHECK(s.claims[0].increasing);
    CHECK(s.claims[0].violation_count == 0);
    // The written "nonincreasing on [0,1)" direction fails near rho = 0:
    // dF/drho at rho=0 is c(4-c^2)/6 > 0 for c in (0,1).
    CHECK(s.claims[1].violation_count > 0);
    REQUIRE(!s.claims[1].witnesses.empty());
    const auto& w = s.claims[1].witnesses.front();
    CHECK(w.delta > 0.0);
    CHECK(F_value(ReductionCase::for_class(FunctionClass::Starlike), w.c, w.rho_hi) >
          F_value(ReductionCase::for_class(FunctionClass::Starlike), w.c, w.rho_lo));
}

TEST_CASE("reduced_max rejects bad inputs") {
    const auto rc = ReductionCase::for_class(FunctionClass::BoundedTurning);
    CHECK_THROWS_AS(reduced_max(rc, -1.0, 101), InvalidParams);
    CHECK_THROWS_AS(reduced_max(rc, 1e-6, 1), InvalidParams);
}
