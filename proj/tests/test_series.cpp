#include "doctest.h"

#include "hankelkit/errors.hpp"
#include "hankelkit/series.hpp"

#include <cmath>

using namespace hankelkit;

namespace {
Rational q(long long n, long long d = 1) { return Rational(n, d); }
}  // namespace

TEST_CASE("multiplication is the Cauchy product") {
    auto one_plus = series::add(series::one<Rational>(4), series::monomial<Rational>(1, 4));
    auto one_minus = series::sub(series::one<Rational>(4), series::monomial<Rational>(1, 4));
    auto prod = series::mul(one_plus, one_minus);
    CHECK(prod.coeff(0) == q(1));
    CHECK(prod.coeff(1) == q(0));
    CHECK(prod.coeff(2) == q(-1));
    CHECK(prod.coeff(3) == q(0));
}

TEST_CASE("geometric series inverts 1 - rz") {
    auto g = series::geometric<Rational>(q(1), 6);
    auto one_minus = series::sub(series::one<Rational>(6), series::monomial<Rational>(1, 6));
    auto prod = series::mul(g, one_minus);
    CHECK(prod.coeff(0) == q(1));
    for (int k = 1; k <= 6; ++k) CHECK(prod.coeff(k) == q(0));
}

TEST_CASE("division matches the geometric expansion") {
    auto num = series::one<Rational>(5);
    auto den = series::sub(series::one<Rational>(5), series::monomial<Rational>(1, 5));
    auto g = series::div(num, den);
    for (int k = 0; k <= 5; ++k) CHECK(g.coeff(k) == q(1));
}

TEST_CASE("division by a zero constant term throws") {
    auto num = series::one<Rational>(3);
    auto den = series::monomial<Rational>(1, 3);
    CHECK_THROWS_AS(series::div(num, den), ZeroConstantTerm);
}

TEST_CASE("derivative and integration invert each other") {
    SeriesQ f(5);
    f[0] = q(0);
    f[1] = q(1);
    f[2] = q(3, 2);
    f[3] = q(-7, 3);
    f[5] = q(2, 11);
    auto g = series::integrate_from_zero(series::derivative(f));
    for (int k = 1; k <= 5; ++k) CHECK(g.coeff(k) == f.coeff(k));
    CHECK(g.coeff(0) == q(0));
}

TEST_CASE("exp of 2z has coefficients 2^k / k!") {
    auto a = series::scale(series::monomial<Rational>(1, 6), q(2));
    auto e = series::exp_series(a);
    Rational fact = 1;
    Rational pow2 = 1;
    for (int k = 0; k <= 6; ++k) {
        if (k > 0) {
            fact *= k;
            pow2 *= 2;
        }
        CHECK(e.coeff(k) == pow2 / fact);
    }
}

TEST_CASE("exp requires a vanishing constant term") {
    CHECK_THROWS_AS(series::exp_series(series::one<Rational>(3)), NonzeroConstantTerm);
}

TEST_CASE("binomial power expands (1 - z^3)^(-2/3) exactly") {
    auto s = series::pow_binomial<Rational>(q(-2, 3), 3, 9);
    CHECK(s.coeff(0) == q(1));
    CHECK(s.coeff(1) == q(0));
    CHECK(s.coeff(2) == q(0));
    CHECK(s.coeff(3) == q(2, 3));
    CHECK(s.coeff(6) == q(5, 9));
    CHECK(s.coeff(9) == q(40, 81));
}

TEST_CASE("binomial power with exponent -2 gives the Koebe kernel") {
    auto s = series::pow_binomial<Rational>(q(-2), 1, 6);
    for (int k = 0; k <= 6; ++k) CHECK(s.coeff(k) == q(k + 1));
}

TEST_CASE("rotation scales a_k by eps^(k-1)") {
    SeriesQ f(4);
    f[1] = q(1);
    f[2] = q(2);
    f[3] = q(3);
    f[4] = q(4);
    auto r = series::rotate(f, q(-1), q(-1));
    CHECK(r.coeff(1) == q(1));
    CHECK(r.coeff(2) == q(-2));
    CHECK(r.coeff(3) == q(3));
    CHECK(r.coeff(4) == q(-4));
}

TEST_CASE("rational kernel (1+z^3)/(1-z^3) doubles every cube power") {
    const int n = 9;
    auto z3 = series::monomial<Rational>(3, n);
    auto kernel = series::div(series::add(series::one<Rational>(n), z3),
                              series::sub(series::one<Rational>(n), z3));
    CHECK(kernel.coeff(0) == q(1));
    CHECK(kernel.coeff(3) == q(2));
    CHECK(kernel.coeff(6) == q(2));
    CHECK(kernel.coeff(9) == q(2));
    CHECK(kernel.coeff(1) == q(0));
    CHECK(kernel.coeff(4) == q(0));
}

TEST_CASE("complex series agree with rational ones on a shared example") {
    auto sq = series::pow_binomial<Rational>(q(-2, 3), 3, 6);
    auto sc = series::pow_binomial<Complex>(q(-2, 3), 3, 6);
    for (int k = 0; k <= 6; ++k) {
        CHECK(std::abs(sc.coeff(k) - Complex(to_double(sq.coeff(k)), 0.0)) < 1e-15);
    }
}
