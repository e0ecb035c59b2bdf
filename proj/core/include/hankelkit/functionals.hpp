#pragma once

#include "hankelkit/class_maps.hpp"
#include "hankelkit/errors.hpp"
#include "hankelkit/function_class.hpp"

#include <string>
#include <vector>

namespace hankelkit {

// One evaluated functional: the complex value plus its modulus.
struct FunctionalValue {
    Functional name = Functional::T_a2a3_a4;
    Complex value{0.0, 0.0};
    double modulus = 0.0;
};

namespace detail {

template <class K>
K det_cofactor(const std::vector<std::vector<K>>& m) {
    const std::size_t q = m.size();
    if (q == 1) return m[0][0];
    K acc = FieldTraits<K>::zero();
    K sign = FieldTraits<K>::one();
    for (std::size_t col = 0; col < q; ++col) {
        std::vector<std::vector<K>> minor(q - 1, std::vector<K>(q - 1));
        for (std::size_t r = 1; r < q; ++r) {
            std::size_t mc = 0;
            for (std::size_t cc = 0; cc < q; ++cc) {
                if (cc == col) continue;
                minor[r - 1][mc++] = m[r][cc];
            }
        }
        acc = acc + sign * m[0][col] * det_cofactor(minor);
        sign = FieldTraits<K>::zero() - sign;
    }
    return acc;
}

}  // namespace detail

// q x q Hankel determinant with entry (i, j) = a_{n+i+j}, by exact cofactor
// expansion. Kept to q <= 4; larger determinants are out of scope.
template <class K>
K hankel_det(const CoefficientSequence<K>& a, int q, int n) {
    if (q < 1 || q > 4) throw std::invalid_argument("hankel_det: q must be in 1..4");
    if (n < 1) throw std::invalid_argument("hankel_det: n must be >= 1");
    const int top = n + 2 * (q - 1);
    if (top > a.max_index()) throw InsufficientCoefficients("hankel_det: needs a_" + std::to_string(top));
    std::vector<std::vector<K>> m(static_cast<std::size_t>(q), std::vector<K>(static_cast<std::size_t>(q)));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a.at(n + i + j);
    return detail::det_cofactor(m);
}

// The cofactor expansion of H3(1) along its first row, evaluated literally:
//   a3(a2 a4 - a3^2) - a4(a4 - a2 a3) + a5(a3 - a2^2)
template <class K>
K h3_expansion(const CoefficientSequence<K>& a) {
    if (a.max_index() < 5) throw InsufficientCoefficients("h3_expansion: needs a_2..a_5");
    const K a2 = a.at(2), a3 = a.at(3), a4 = a.at(4), a5 = a.at(5);
    return a3 * (a2 * a4 - a3 * a3) - a4 * (a4 - a2 * a3) + a5 * (a3 - a2 * a2);
}

template <class K>
K fekete_szego(const CoefficientSequence<K>& a) {
    if (a.max_index() < 3) throw InsufficientCoefficients("fekete_szego: needs a_2, a_3");
    return a.at(3) - a.at(2) * a.at(2);
}

template <class K>
K second_hankel(const CoefficientSequence<K>& a) {
    if (a.max_index() < 4) throw InsufficientCoefficients("second_hankel: needs a_2..a_4");
    return a.at(2) * a.at(4) - a.at(3) * a.at(3);
}

template <class K>
K t_functional(const CoefficientSequence<K>& a) {
    if (a.max_index() < 4) throw InsufficientCoefficients("t_functional: needs a_2..a_4");
    return a.at(2) * a.at(3) - a.at(4);
}

template <class K>
K evaluate_functional(Functional f, const CoefficientSequence<K>& a) {
    switch (f) {
        case Functional::T_a2a3_a4: return t_functional(a);
        case Functional::FeketeSzego: return fekete_szego(a);
        case Functional::SecondHankel: return second_hankel(a);
        case Functional::H3_1: return h3_expansion(a);
    }
    throw std::invalid_argument("evaluate_functional: bad functional");
}

inline FunctionalValue functional_value(Functional f, const CoeffSeqC& a) {
    const Complex v = evaluate_functional(f, a);
    return FunctionalValue{f, v, std::abs(v)};
}

// Constituents of the triangle-inequality ceiling on |H3(1)|:
//   |a3| |a2a4-a3^2| + |a4| |a2a3-a4| + |a5| |a3-a2^2|
struct TriangleInputs {
    Rational cap_a3, cap_a4, cap_a5;
    Rational bound_h22, bound_t, bound_fs;

    bool valid() const {
        return cap_a3 >= 0 && cap_a4 >= 0 && cap_a5 >= 0 && bound_h22 >= 0 && bound_t >= 0 && bound_fs >= 0;
    }
};

Rational triangle_bound(const TriangleInputs& t);

// The constituents each class uses: coefficient caps plus the cited sharp
// bounds on the three sub-functionals.
TriangleInputs class_triangle_inputs(FunctionClass cls);

// The corollary value as published for each class, kept unreduced. The
// bounded-turning value 993/1620 does not match the ceiling recomputed from
// the same constituents (439/540 = 1317/1620); the audit reports both.
PrintedRational printed_h3_ceiling(FunctionClass cls);

}  // namespace hankelkit
