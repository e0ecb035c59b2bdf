#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

namespace hankelkit {

// Exact rational scalar for the rational-mode series and the bound audits.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational ratio(long long num, long long den) { return Rational(num, den); }

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

inline Rational rational_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

// "p/q" for non-integers, plain "p" otherwise.
inline std::string to_string(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

// A rational kept in the exact form a source prints it (e.g. 993/1620, which
// reduces to 331/540). Comparisons go through the reduced value; printing keeps
// the original digits so audits show the number as published.
struct PrintedRational {
    long long num = 0;
    long long den = 1;

    Rational value() const { return Rational(num, den); }
    std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }
};

// num/den of a reduced rational as int64 when they fit.
struct Int64Pair {
    std::int64_t num = 0;
    std::int64_t den = 1;
};

inline std::optional<Int64Pair> to_int64_pair(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    const BigInt lo = std::numeric_limits<std::int64_t>::min();
    const BigInt hi = std::numeric_limits<std::int64_t>::max();
    if (num < lo || num > hi || den > hi) return std::nullopt;
    return Int64Pair{num.template convert_to<std::int64_t>(), den.template convert_to<std::int64_t>()};
}

}  // namespace hankelkit
