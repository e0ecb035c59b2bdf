#pragma once

#include "hankelkit/errors.hpp"
#include "hankelkit/rational.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

namespace hankelkit {

using Complex = std::complex<double>;

// Coefficient-field glue for the two modes: complex double precision for
// searches, exact rationals for extremal expansions and audits.
template <class K>
struct FieldTraits;

template <>
struct FieldTraits<Complex> {
    static Complex zero() { return {0.0, 0.0}; }
    static Complex one() { return {1.0, 0.0}; }
    static Complex from_int(long long v) { return {static_cast<double>(v), 0.0}; }
    static Complex from_ratio(const Rational& r) { return {to_double(r), 0.0}; }
    static Complex div_int(const Complex& v, long long d) { return v / static_cast<double>(d); }
    // Constant terms below double-precision trust are treated as zero.
    static bool is_negligible(const Complex& v) { return std::abs(v) < 1e-12; }
    static double abs_value(const Complex& v) { return std::abs(v); }
};

template <>
struct FieldTraits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_int(long long v) { return Rational(v); }
    static Rational from_ratio(const Rational& r) { return r; }
    static Rational div_int(const Rational& v, long long d) { return v / Rational(d); }
    static bool is_negligible(const Rational& v) { return v == 0; }
    static double abs_value(const Rational& v) { return std::abs(to_double(v)); }
};

// A power series kept to a fixed truncation order N: coeffs c[0..N], c[k]
// multiplying z^k. Arithmetic truncates to the smaller operand order; there
// is no silent padding.
template <class K>
struct TruncatedSeries {
    std::vector<K> c;

    TruncatedSeries() : c(1, FieldTraits<K>::zero()) {}
    explicit TruncatedSeries(int order) : c(static_cast<std::size_t>(order) + 1, FieldTraits<K>::zero()) {}
    explicit TruncatedSeries(std::vector<K> coeffs) : c(std::move(coeffs)) {
        if (c.empty()) c.push_back(FieldTraits<K>::zero());
    }

    int order() const { return static_cast<int>(c.size()) - 1; }

    const K& operator[](int k) const { return c[static_cast<std::size_t>(k)]; }
    K& operator[](int k) { return c[static_cast<std::size_t>(k)]; }

    // Coefficient of z^k, zero past the truncation order.
    K coeff(int k) const {
        if (k < 0 || k > order()) return FieldTraits<K>::zero();
        return c[static_cast<std::size_t>(k)];
    }
};

using SeriesC = TruncatedSeries<Complex>;
using SeriesQ = TruncatedSeries<Rational>;

namespace series {

template <class K>
TruncatedSeries<K> constant(const K& value, int order) {
    TruncatedSeries<K> s(order);
    s[0] = value;
    return s;
}

template <class K>
TruncatedSeries<K> zero(int order) {
    return TruncatedSeries<K>(order);
}

template <class K>
TruncatedSeries<K> one(int order) {
    return constant(FieldTraits<K>::one(), order);
}

// coefficient 1 at z^degree.
template <class K>
TruncatedSeries<K> monomial(int degree, int order) {
    TruncatedSeries<K> s(order);
    if (degree <= order) s[degree] = FieldTraits<K>::one();
    return s;
}

// 1 + r z + r^2 z^2 + ... to the given order.
template <class K>
TruncatedSeries<K> geometric(const K& r, int order) {
    TruncatedSeries<K> s(order);
    K p = FieldTraits<K>::one();
    for (int k = 0; k <= order; ++k) {
        s[k] = p;
        p = p * r;
    }
    return s;
}

template <class K>
TruncatedSeries<K> truncate(const TruncatedSeries<K>& a, int order) {
    TruncatedSeries<K> s(order);
    for (int k = 0; k <= order; ++k) s[k] = a.coeff(k);
    return s;
}

template <class K>
TruncatedSeries<K> add(const TruncatedSeries<K>& a, const TruncatedSeries<K>& b) {
    const int n = std::min(a.order(), b.order());
    TruncatedSeries<K> s(n);
    for (int k = 0; k <= n; ++k) s[k] = a[k] + b[k];
    return s;
}

template <class K>
TruncatedSeries<K> sub(const TruncatedSeries<K>& a, const TruncatedSeries<K>& b) {
    const int n = std::min(a.order(), b.order());
    TruncatedSeries<K> s(n);
    for (int k = 0; k <= n; ++k) s[k] = a[k] - b[k];
    return s;
}

template <class K>
TruncatedSeries<K> scale(const TruncatedSeries<K>& a, const K& factor) {
    TruncatedSeries<K> s(a.order());
    for (int k = 0; k <= a.order(); ++k) s[k] = a[k] * factor;
    return s;
}

// Cauchy product truncated to the smaller operand order.
template <class K>
TruncatedSeries<K> mul(const TruncatedSeries<K>& a, const TruncatedSeries<K>& b) {
    const int n = std::min(a.order(), b.order());
    TruncatedSeries<K> s(n);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j) s[i + j] = s[i + j] + a[i] * b[j];
    return s;
}

// Quotient by forward substitution: q_n = (a_n - sum b_k q_{n-k}) / b_0.
template <class K>
TruncatedSeries<K> div(const TruncatedSeries<K>& a, const TruncatedSeries<K>& b) {
    if (FieldTraits<K>::is_negligible(b[0]))
        throw ZeroConstantTerm("series division: divisor has (near-)zero constant term");
    const int n = std::min(a.order(), b.order());
    TruncatedSeries<K> q(n);
    for (int k = 0; k <= n; ++k) {
        K acc = a.coeff(k);
        for (int j = 1; j <= k; ++j) acc = acc - b.coeff(j) * q[k - j];
        q[k] = acc / b[0];
    }
    return q;
}

// k*c[k] shifted down one index; order drops by one (a constant maps to the
// order-0 zero series).
template <class K>
TruncatedSeries<K> derivative(const TruncatedSeries<K>& a) {
    if (a.order() == 0) return TruncatedSeries<K>(0);
    TruncatedSeries<K> s(a.order() - 1);
    for (int k = 1; k <= a.order(); ++k) s[k - 1] = FieldTraits<K>::from_int(k) * a[k];
    return s;
}

// Antiderivative vanishing at 0; order grows by one.
template <class K>
TruncatedSeries<K> integrate_from_zero(const TruncatedSeries<K>& a) {
    TruncatedSeries<K> s(a.order() + 1);
    for (int k = 0; k <= a.order(); ++k) s[k + 1] = FieldTraits<K>::div_int(a[k], k + 1);
    return s;
}

// exp of a series with vanishing constant term, by the recurrence from
// E' = a'E, E(0) = 1:  n E_n = sum_{k=1..n} k a_k E_{n-k}.
template <class K>
TruncatedSeries<K> exp_series(const TruncatedSeries<K>& a) {
    if (!FieldTraits<K>::is_negligible(a[0]))
        throw NonzeroConstantTerm("series exp: constant term must vanish");
    const int n = a.order();
    TruncatedSeries<K> e(n);
    e[0] = FieldTraits<K>::one();
    for (int m = 1; m <= n; ++m) {
        K acc = FieldTraits<K>::zero();
        for (int k = 1; k <= m; ++k) acc = acc + FieldTraits<K>::from_int(k) * a[k] * e[m - k];
        e[m] = FieldTraits<K>::div_int(acc, m);
    }
    return e;
}

// (1 - z^d)^alpha by the generalized binomial series: the z^{dk} coefficient
// is C(alpha, k) (-1)^k, built up exactly via g_k = g_{k-1} (k - 1 - alpha) / k.
template <class K>
TruncatedSeries<K> pow_binomial(const Rational& alpha, int monomial_degree, int order) {
    if (monomial_degree < 1) throw std::invalid_argument("pow_binomial: monomial degree must be >= 1");
    TruncatedSeries<K> s(order);
    Rational g(1);
    s[0] = FieldTraits<K>::one();
    for (int k = 1; static_cast<long long>(k) * monomial_degree <= order; ++k) {
        g = g * (Rational(k - 1) - alpha) / Rational(k);
        s[k * monomial_degree] = FieldTraits<K>::from_ratio(g);
    }
    return s;
}

// conj(eps) * f(eps z): coefficient a_k picks up eps^{k-1}.
template <class K>
TruncatedSeries<K> rotate(const TruncatedSeries<K>& a, const K& eps, const K& eps_conj) {
    TruncatedSeries<K> s(a.order());
    K p = eps_conj;  // eps^k * conj(eps), k = 0
    for (int k = 0; k <= a.order(); ++k) {
        s[k] = p * a[k];
        p = p * eps;
    }
    return s;
}

}  // namespace series
}  // namespace hankelkit
