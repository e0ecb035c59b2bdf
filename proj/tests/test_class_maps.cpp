#include "doctest.h"

#include "hankelkit/caratheodory.hpp"
#include "hankelkit/class_maps.hpp"
#include "hankelkit/errors.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <span>
#include <vector>

using namespace hankelkit;

namespace {

Rational q(long long n, long long d = 1) { return Rational(n, d); }

std::vector<Rational> two_kernel(int count) { return std::vector<Rational>(count, q(2)); }

HerglotzMeasure random_measure(std::mt19937_64& rng, int max_atoms) {
    std::uniform_int_distribution<int> natoms(1, max_atoms);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    HerglotzMeasure m;
    m.atoms.resize(natoms(rng));
    double sum = 0.0;
    for (auto& a : m.atoms) {
        a.weight = unit(rng) + 1e-3;
        a.angle = unit(rng) * 2.0 * std::numbers::pi;
        sum += a.weight;
    }
    for (auto& a : m.atoms) a.weight /= sum;
    return m;
}

}  // namespace

TEST_CASE("half-plane kernel coefficients per class") {
    const auto c = two_kernel(4);
    const auto r = coeffs_bounded_turning<Rational>(c, 5);
    CHECK(r.at(1) == q(1));
    CHECK(r.at(2) == q(1));       // 2/2
    CHECK(r.at(3) == q(2, 3));
    CHECK(r.at(4) == q(1, 2));
    CHECK(r.at(5) == q(2, 5));

    const auto s = coeffs_starlike<Rational>(c, 5);
    for (int k = 1; k <= 5; ++k) CHECK(s.at(k) == q(k));  // Koebe

    const auto v = coeffs_convex<Rational>(c, 5);
    for (int k = 1; k <= 5; ++k) CHECK(v.at(k) == q(1));  // half-plane map
}

TEST_CASE("recurrences demand enough kernel coefficients") {
    const auto c = two_kernel(2);
    CHECK_THROWS_AS(coeffs_starlike<Rational>(std::span<const Rational>(c), 5), InsufficientCoefficients);
}

TEST_CASE("coefficient caps are enforced when checking is on") {
    std::vector<Rational> inflated = {q(3), q(0), q(0), q(0)};
    CHECK_THROWS(coeffs_for_class<Rational>(FunctionClass::Starlike, inflated, 5, true));
    CHECK_NOTHROW(coeffs_for_class<Rational>(FunctionClass::Starlike, inflated, 5, false));
}

TEST_CASE("ode expansions match the recurrences on the half-plane kernel") {
    SeriesQ p(5);
    p[0] = q(1);
    for (int k = 1; k <= 5; ++k) p[k] = q(2);
    for (const FunctionClass cls :
         {FunctionClass::BoundedTurning, FunctionClass::Starlike, FunctionClass::Convex}) {
        const auto via_ode = ode_coeffs(cls, p, 5);
        const auto c = two_kernel(4);
        const auto via_rec = coeffs_for_class<Rational>(cls, c, 5);
        for (int k = 1; k <= 5; ++k) CHECK(via_ode.at(k) == via_rec.at(k));
    }
}

TEST_CASE("ode route needs the kernel expanded far enough") {
    SeriesQ p(2);
    p[0] = q(1);
    p[1] = q(2);
    p[2] = q(2);
    CHECK_THROWS_AS(ode_coeffs(FunctionClass::Convex, p, 5), InsufficientCoefficients);
}

TEST_CASE("recurrence and ode agree on random measures, and the derivative relation holds") {
    std::mt19937_64 rng(77);
    const int n = 6;
    for (int trial = 0; trial < 100; ++trial) {
        const HerglotzMeasure m = random_measure(rng, 5);
        const CSequence cs = herglotz_cseq(m, n - 1);
        const SeriesC p = cseq_to_series(cs);
        for (const FunctionClass cls :
             {FunctionClass::BoundedTurning, FunctionClass::Starlike, FunctionClass::Convex}) {
            const auto via_rec = coeffs_for_class<Complex>(cls, std::span<const Complex>(cs.c), n, false);
            const auto via_ode = ode_coeffs(cls, p, n);
            for (int k = 1; k <= n; ++k) CHECK(std::abs(via_rec.at(k) - via_ode.at(k)) < 1e-10);
        }
        // Same kernel drives both: the convex coefficients are the starlike
        // ones divided by their index (z f' swaps the two classes).
        const auto st = coeffs_for_class<Complex>(FunctionClass::Starlike, std::span<const Complex>(cs.c), n, false);
        const auto cv = coeffs_for_class<Complex>(FunctionClass::Convex, std::span<const Complex>(cs.c), n, false);
        for (int k = 1; k <= n; ++k)
            CHECK(std::abs(cv.at(k) - st.at(k) / static_cast<double>(k)) < 1e-10);
    }
}
