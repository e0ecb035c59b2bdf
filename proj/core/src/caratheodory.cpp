#include "hankelkit/caratheodory.hpp"

#include <cmath>

namespace hankelkit {

std::pair<Complex, Complex> lz_expand(const LZParams& p) {
    if (!p.valid()) throw InvalidParams("lz_expand: parameters outside |c1|<=2, |x|<=1, |zeta|<=1");
    const Complex c1 = p.c1;
    const Complex w = 4.0 - c1 * c1;
    const double xm2 = std::norm(p.x);  // |x|^2
    const Complex c2 = (c1 * c1 + p.x * w) / 2.0;
    const Complex c3 = (c1 * c1 * c1 + 2.0 * p.x * c1 * w - p.x * p.x * c1 * w + 2.0 * p.zeta * (1.0 - xm2) * w) / 4.0;
    return {c2, c3};
}

bool HerglotzMeasure::valid() const {
    if (atoms.empty()) return false;
    double sum = 0.0;
    for (const auto& a : atoms) {
        if (a.weight < 0.0) return false;
        sum += a.weight;
    }
    return std::abs(sum - 1.0) <= kSumSlack;
}

CSequence herglotz_cseq(const HerglotzMeasure& m, int n) {
    if (n < 0) throw InvalidMeasure("herglotz_cseq: negative coefficient count");
    if (!m.valid()) throw InvalidMeasure("herglotz_cseq: weights must be nonnegative and sum to 1");
    CSequence seq;
    seq.c.resize(static_cast<std::size_t>(n));
    // c_k = 2 sum_j w_j e^{i k theta_j}; phasors advance incrementally.
    std::vector<Complex> step(m.atoms.size()), cur(m.atoms.size());
    for (std::size_t j = 0; j < m.atoms.size(); ++j) {
        step[j] = std::polar(1.0, m.atoms[j].angle);
        cur[j] = step[j];
    }
    for (int k = 1; k <= n; ++k) {
        Complex acc{0.0, 0.0};
        for (std::size_t j = 0; j < m.atoms.size(); ++j) {
            acc += m.atoms[j].weight * cur[j];
            cur[j] *= step[j];
        }
        seq.c[static_cast<std::size_t>(k) - 1] = 2.0 * acc;
    }
    return seq;
}

namespace {

// Determinant of a dense complex matrix by Gaussian elimination with partial
// pivoting. Sizes here stay tiny (<= depth+1).
double hermitian_det(std::vector<std::vector<Complex>> m) {
    const std::size_t n = m.size();
    Complex det{1.0, 0.0};
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        double best = std::abs(m[col][col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double v = std::abs(m[r][col]);
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (best == 0.0) return 0.0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            const Complex f = m[r][col] / m[col][col];
            for (std::size_t cidx = col; cidx < n; ++cidx) m[r][cidx] -= f * m[col][cidx];
        }
    }
    return det.real();  // Hermitian input: determinant is real up to rounding
}

}  // namespace

std::vector<double> toeplitz_minors(const CSequence& c, int depth) {
    if (depth < 0 || depth > c.count())
        throw InsufficientCoefficients("toeplitz_minors: depth exceeds stored coefficients");
    const int n = depth + 1;
    std::vector<std::vector<Complex>> t(static_cast<std::size_t>(n), std::vector<Complex>(static_cast<std::size_t>(n)));
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            if (j == k)
                t[j][k] = Complex{2.0, 0.0};
            else if (k > j)
                t[j][k] = c.at(k - j);
            else
                t[j][k] = std::conj(c.at(j - k));
        }
    }
    std::vector<double> minors;
    minors.reserve(static_cast<std::size_t>(n));
    for (int size = 1; size <= n; ++size) {
        std::vector<std::vector<Complex>> lead(static_cast<std::size_t>(size));
        for (int r = 0; r < size; ++r)
            lead[static_cast<std::size_t>(r)].assign(t[static_cast<std::size_t>(r)].begin(), t[static_cast<std::size_t>(r)].begin() + size);
        minors.push_back(hermitian_det(std::move(lead)));
    }
    return minors;
}

bool validate_cseq(const CSequence& c, int depth, double tol) {
    if (depth < 0 || depth > c.count()) return false;
    for (int k = 1; k <= depth; ++k)
        if (std::abs(c.at(k)) > 2.0 + tol) return false;
    for (double minor : toeplitz_minors(c, depth))
        if (minor < -tol) return false;
    return true;
}

SeriesC cseq_to_series(const CSequence& c) {
    SeriesC s(c.count());
    s[0] = Complex{1.0, 0.0};
    for (int k = 1; k <= c.count(); ++k) s[k] = c.at(k);
    return s;
}

}  // namespace hankelkit
