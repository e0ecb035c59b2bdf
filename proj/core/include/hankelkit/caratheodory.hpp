#pragma once

#include "hankelkit/errors.hpp"
#include "hankelkit/series.hpp"

#include <complex>
#include <utility>
#include <vector>

namespace hankelkit {

// Chart parameters (c1, x, zeta) with |c1| <= 2, |x| <= 1, |zeta| <= 1 that
// generate the admissible (c2, c3) of a positive-real-part function.
struct LZParams {
    Complex c1;
    Complex x;
    Complex zeta;

    static constexpr double kSlack = 1e-12;
    bool valid() const {
        return std::abs(c1) <= 2.0 + kSlack && std::abs(x) <= 1.0 + kSlack && std::abs(zeta) <= 1.0 + kSlack;
    }
};

// (c2, c3) from the chart:
//   2 c2 = c1^2 + x (4 - c1^2)
//   4 c3 = c1^3 + 2 x c1 (4 - c1^2) - x^2 c1 (4 - c1^2) + 2 zeta (1 - |x|^2)(4 - c1^2)
std::pair<Complex, Complex> lz_expand(const LZParams& p);

// Finite atomic probability measure on the unit circle; generates a full
// positive-real-part coefficient sequence.
struct HerglotzAtom {
    double weight = 0.0;
    double angle = 0.0;  // radians
};

struct HerglotzMeasure {
    std::vector<HerglotzAtom> atoms;

    static constexpr double kSumSlack = 1e-12;
    bool valid() const;
};

// Coefficients c_1..c_N of a positive-real-part function; |c_k| <= 2 within
// membership tolerance.
struct CSequence {
    std::vector<Complex> c;  // c[i] holds c_{i+1}

    static constexpr double kTol = 1e-9;

    int count() const { return static_cast<int>(c.size()); }
    Complex at(int k) const {
        if (k < 1 || k > count()) throw InsufficientCoefficients("CSequence: index out of range");
        return c[static_cast<std::size_t>(k) - 1];
    }
};

// Throws InvalidMeasure / invariant violations surface as exceptions.
CSequence herglotz_cseq(const HerglotzMeasure& m, int n);

// Leading principal minors of the (depth+1) x (depth+1) Hermitian Toeplitz
// matrix with 2 on the diagonal and c_{k-j} above it. Minors of a member
// sequence are all nonnegative.
std::vector<double> toeplitz_minors(const CSequence& c, int depth);

// Membership test: coefficient caps plus minor nonnegativity down to -tol.
bool validate_cseq(const CSequence& c, int depth, double tol = CSequence::kTol);

// 1 + c_1 z + ... + c_N z^N as a complex series (constant term 1).
SeriesC cseq_to_series(const CSequence& c);

}  // namespace hankelkit
