#include "hankelkit/bound_report.hpp"

#include <cmath>
#include <stdexcept>

namespace hankelkit {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::AttainsWithinTol: return "attains_within_tol";
        case Verdict::BelowBound: return "below_bound";
        case Verdict::ExceedsBound: return "exceeds_bound";
    }
    throw std::invalid_argument("verdict_name: bad verdict");
}

Verdict classify_verdict(double best_modulus, const std::optional<Rational>& bound, double tol) {
    if (!bound) return Verdict::BelowBound;
    const double b = to_double(*bound);
    if (std::abs(best_modulus - b) <= tol) return Verdict::AttainsWithinTol;
    return best_modulus > b ? Verdict::ExceedsBound : Verdict::BelowBound;
}

}  // namespace hankelkit
