#pragma once

#include "hankelkit/errors.hpp"
#include "hankelkit/function_class.hpp"
#include "hankelkit/series.hpp"

#include <span>
#include <vector>

namespace hankelkit {

// Normalized coefficients a_1..a_N (a_1 = 1) of a member of one of the three
// classes, over complex doubles or exact rationals.
template <class K>
struct CoefficientSequence {
    FunctionClass cls = FunctionClass::BoundedTurning;
    std::vector<K> a;  // a[i] holds a_{i+1}; a[0] == 1

    int max_index() const { return static_cast<int>(a.size()); }
    K at(int k) const {
        if (k < 1 || k > max_index()) throw InsufficientCoefficients("CoefficientSequence: index out of range");
        return a[static_cast<std::size_t>(k) - 1];
    }
};

using CoeffSeqC = CoefficientSequence<Complex>;
using CoeffSeqQ = CoefficientSequence<Rational>;

namespace detail {

template <class K>
void check_caps(const CoefficientSequence<K>& seq) {
    for (int k = 2; k <= seq.max_index(); ++k) {
        const double cap = to_double(coefficient_cap(seq.cls, k));
        if (FieldTraits<K>::abs_value(seq.at(k)) > cap + 1e-9)
            throw std::logic_error("coefficient cap violated for " + class_name(seq.cls) + " at k=" + std::to_string(k));
    }
}

template <class K>
std::span<const K> require_count(std::span<const K> c, int n, const char* who) {
    if (static_cast<int>(c.size()) < n - 1) throw InsufficientCoefficients(std::string(who) + ": need c_1..c_" + std::to_string(n - 1));
    return c;
}

}  // namespace detail

// c is c_1, c_2, ... of the generating positive-real-part function; results
// carry a_1..a_N.

// Re f' > 0:  f' = p  gives  k a_k = c_{k-1}.
template <class K>
CoefficientSequence<K> coeffs_bounded_turning(std::span<const K> c, int n, bool check = true) {
    detail::require_count(c, n, "coeffs_bounded_turning");
    CoefficientSequence<K> seq;
    seq.cls = FunctionClass::BoundedTurning;
    seq.a.resize(static_cast<std::size_t>(n));
    seq.a[0] = FieldTraits<K>::one();
    for (int k = 2; k <= n; ++k) seq.a[static_cast<std::size_t>(k) - 1] = FieldTraits<K>::div_int(c[static_cast<std::size_t>(k) - 2], k);
    if (check) detail::check_caps(seq);
    return seq;
}

// Re zf'/f > 0:  zf' = f p  gives  (k-1) a_k = sum_{j=1..k-1} a_j c_{k-j}.
template <class K>
CoefficientSequence<K> coeffs_starlike(std::span<const K> c, int n, bool check = true) {
    detail::require_count(c, n, "coeffs_starlike");
    CoefficientSequence<K> seq;
    seq.cls = FunctionClass::Starlike;
    seq.a.resize(static_cast<std::size_t>(n));
    seq.a[0] = FieldTraits<K>::one();
    for (int k = 2; k <= n; ++k) {
        K acc = FieldTraits<K>::zero();
        for (int j = 1; j <= k - 1; ++j) acc = acc + seq.a[static_cast<std::size_t>(j) - 1] * c[static_cast<std::size_t>(k - j) - 1];
        seq.a[static_cast<std::size_t>(k) - 1] = FieldTraits<K>::div_int(acc, k - 1);
    }
    if (check) detail::check_caps(seq);
    return seq;
}

// Re(1 + zf''/f') > 0:  (zf')' = f' p  gives  k(k-1) a_k = sum_{j=1..k-1} j a_j c_{k-j}.
template <class K>
CoefficientSequence<K> coeffs_convex(std::span<const K> c, int n, bool check = true) {
    detail::require_count(c, n, "coeffs_convex");
    CoefficientSequence<K> seq;
    seq.cls = FunctionClass::Convex;
    seq.a.resize(static_cast<std::size_t>(n));
    seq.a[0] = FieldTraits<K>::one();
    for (int k = 2; k <= n; ++k) {
        K acc = FieldTraits<K>::zero();
        for (int j = 1; j <= k - 1; ++j)
            acc = acc + FieldTraits<K>::from_int(j) * seq.a[static_cast<std::size_t>(j) - 1] * c[static_cast<std::size_t>(k - j) - 1];
        seq.a[static_cast<std::size_t>(k) - 1] = FieldTraits<K>::div_int(acc, static_cast<long long>(k) * (k - 1));
    }
    if (check) detail::check_caps(seq);
    return seq;
}

template <class K>
CoefficientSequence<K> coeffs_for_class(FunctionClass cls, std::span<const K> c, int n, bool check = true) {
    switch (cls) {
        case FunctionClass::BoundedTurning: return coeffs_bounded_turning(c, n, check);
        case FunctionClass::Starlike: return coeffs_starlike(c, n, check);
        case FunctionClass::Convex: return coeffs_convex(c, n, check);
    }
    throw std::invalid_argument("coeffs_for_class: bad class");
}

// Independent route used to cross-check the recurrences: solve the defining
// ODE with series algebra instead of coefficient comparison.
//   f' = p            ->  f = int p
//   zf'/f = p         ->  f = z exp(int (p-1)/t)
//   (zf')'/f' = p     ->  f = int exp(int (p-1)/t)
namespace detail {

// (p(z) - 1) / z integrated from zero, at working order n.
template <class K>
TruncatedSeries<K> log_transfer(const TruncatedSeries<K>& p, int n) {
    TruncatedSeries<K> shifted(n);
    for (int k = 0; k <= n; ++k) shifted[k] = p.coeff(k + 1);
    return series::integrate_from_zero(series::truncate(shifted, n - 1));
}

}  // namespace detail

template <class K>
CoefficientSequence<K> ode_coeffs(FunctionClass cls, const TruncatedSeries<K>& p, int n) {
    if (p.order() < n - 1) throw InsufficientCoefficients("ode_coeffs: p must carry c_1..c_{n-1}");
    TruncatedSeries<K> f;
    switch (cls) {
        case FunctionClass::BoundedTurning:
            f = series::integrate_from_zero(series::truncate(p, n - 1));
            break;
        case FunctionClass::Starlike: {
            const auto e = series::exp_series(detail::log_transfer(p, n));
            f = TruncatedSeries<K>(n);
            for (int k = 1; k <= n; ++k) f[k] = e.coeff(k - 1);
            break;
        }
        case FunctionClass::Convex: {
            const auto e = series::exp_series(detail::log_transfer(p, n));
            f = series::integrate_from_zero(series::truncate(e, n - 1));
            break;
        }
    }
    CoefficientSequence<K> seq;
    seq.cls = cls;
    seq.a.assign(f.c.begin() + 1, f.c.begin() + 1 + n);
    return seq;
}

}  // namespace hankelkit
