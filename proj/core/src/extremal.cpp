#include "hankelkit/extremal.hpp"

#include "hankelkit/functionals.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hankelkit {

namespace {

// (1 + z^3)/(1 - z^3), the Caratheodory function generating both the
// bounded-turning witness and the derived convex one.
SeriesQ cube_kernel(int order) {
    const SeriesQ zc = series::monomial<Rational>(3, order);
    return series::div(series::add(series::one<Rational>(order), zc),
                       series::sub(series::one<Rational>(order), zc));
}

SeriesQ koebe(int order) {
    return series::mul(series::monomial<Rational>(1, order),
                       series::pow_binomial<Rational>(Rational(-2), 1, order));
}

}  // namespace

ExtremalSpec ExtremalSpec::paper(FunctionClass cls) {
    return ExtremalSpec{cls, ExtremalVariant::PaperFormula, 0.0};
}

ExtremalSpec ExtremalSpec::derived(FunctionClass cls) {
    return ExtremalSpec{cls, ExtremalVariant::DerivedFormula, 0.0};
}

ExtremalSpec ExtremalSpec::rotation(double angle) {
    return ExtremalSpec{FunctionClass::Starlike, ExtremalVariant::Rotation, angle};
}

bool ExtremalSpec::valid() const {
    return variant != ExtremalVariant::Rotation || class_tag == FunctionClass::Starlike;
}

std::string ExtremalSpec::label() const {
    switch (variant) {
        case ExtremalVariant::PaperFormula: return "paper";
        case ExtremalVariant::DerivedFormula: return "derived";
        case ExtremalVariant::Rotation: return "rotation";
    }
    throw std::invalid_argument("ExtremalSpec::label: bad variant");
}

Rational ExtremalExpansion::a(int k) const {
    if (k < 1 || k > order()) throw InsufficientCoefficients("extremal expansion: index out of range");
    return f[k];
}

ExtremalExpansion extremal_expansion(const ExtremalSpec& spec, int order) {
    if (!spec.valid()) throw InvalidParams("rotation witnesses exist only for the starlike class");
    if (order < 5) throw InvalidParams("extremal expansion: order must be >= 5");

    ExtremalExpansion out;
    out.spec = spec;

    switch (spec.class_tag) {
        case FunctionClass::BoundedTurning:
            // f' = (1 + z^3)/(1 - z^3); same witness for both variants.
            out.f = series::integrate_from_zero(cube_kernel(order - 1));
            break;
        case FunctionClass::Starlike: {
            SeriesQ k = koebe(order);
            if (spec.variant == ExtremalVariant::Rotation) {
                // conj(eps) f(eps z); exact coefficients need eps = +-1.
                if (std::abs(std::sin(spec.angle)) > 1e-12)
                    throw InvalidParams("rotation angle must be a multiple of pi for exact coefficients");
                const Rational eps = std::cos(spec.angle) > 0.0 ? Rational(1) : Rational(-1);
                k = series::rotate(k, eps, eps);
            }
            out.f = std::move(k);
            break;
        }
        case FunctionClass::Convex:
            if (spec.variant == ExtremalVariant::PaperFormula) {
                // integral of s * exp(integral of 2t^3/(1-t^3)) -- as printed,
                // which is not normalized (the integrand vanishes at 0).
                const int qo = order - 3;
                const SeriesQ zc = series::monomial<Rational>(3, qo);
                const SeriesQ q = series::div(series::scale(zc, Rational(2)),
                                              series::sub(series::one<Rational>(qo), zc));
                const SeriesQ e = series::exp_series(series::integrate_from_zero(q));
                const SeriesQ integrand =
                    series::mul(series::monomial<Rational>(1, order - 1), series::truncate(e, order - 1));
                out.f = series::integrate_from_zero(integrand);
            } else {
                // f' = (1 - z^3)^(-2/3), the normalized solution driven by the
                // same Caratheodory function as the bounded-turning witness.
                out.f = series::integrate_from_zero(
                    series::pow_binomial<Rational>(ratio(-2, 3), 3, order - 1));
            }
            break;
    }

    out.normalized = out.f.coeff(0) == Rational(0) && out.f.coeff(1) == Rational(1);
    return out;
}

CoeffSeqQ extremal_coeffs(const ExtremalSpec& spec, int order) {
    const ExtremalExpansion e = extremal_expansion(spec, order);
    if (!e.normalized) throw InvalidParams("witness is not normalized: f'(0) != 1");
    CoeffSeqQ seq;
    seq.cls = spec.class_tag;
    seq.a.assign(e.f.c.begin() + 1, e.f.c.end());
    return seq;
}

Rational functional_on_extremal(const ExtremalSpec& spec, Functional f, int order) {
    const int need = functional_max_index(f);
    const ExtremalExpansion e = extremal_expansion(spec, std::max(order, need));
    const Rational a2 = e.a(2), a3 = e.a(3), a4 = e.a(4);
    switch (f) {
        case Functional::T_a2a3_a4: return a2 * a3 - a4;
        case Functional::FeketeSzego: return a3 - a2 * a2;
        case Functional::SecondHankel: return a2 * a4 - a3 * a3;
        case Functional::H3_1: {
            const Rational a5 = e.a(5);
            return a3 * (a2 * a4 - a3 * a3) - a4 * (a4 - a2 * a3) + a5 * (a3 - a2 * a2);
        }
    }
    throw std::invalid_argument("functional_on_extremal: bad functional");
}

SharpnessResult sharpness_detail(const ExtremalSpec& spec, Functional f, int order) {
    SharpnessResult r;
    const ExtremalExpansion e = extremal_expansion(spec, std::max(order, functional_max_index(f)));
    r.normalized = e.normalized;
    r.exact_modulus = rational_abs(functional_on_extremal(spec, f, order));

    BoundReport& rep = r.report;
    rep.class_tag = spec.class_tag;
    rep.functional_name = f;
    rep.model = "extremal:" + spec.label();
    rep.best_modulus = to_double(r.exact_modulus);
    if (f != Functional::H3_1) rep.paper_bound = cited_bound(spec.class_tag, f);

    // Verdict driven by exact comparison, not float proximity.
    if (!rep.paper_bound) {
        rep.verdict = Verdict::BelowBound;
    } else if (r.exact_modulus == *rep.paper_bound) {
        r.exact_equality = true;
        rep.verdict = Verdict::AttainsWithinTol;
    } else {
        rep.verdict = r.exact_modulus < *rep.paper_bound ? Verdict::BelowBound : Verdict::ExceedsBound;
    }
    return r;
}

BoundReport sharpness_check(const ExtremalSpec& spec, Functional f, int order) {
    return sharpness_detail(spec, f, order).report;
}

std::vector<ExtremalSpec> extremal_candidates(FunctionClass cls) {
    switch (cls) {
        case FunctionClass::BoundedTurning: return {ExtremalSpec::paper(cls)};
        case FunctionClass::Starlike:
            return {ExtremalSpec::paper(cls), ExtremalSpec::rotation(std::numbers::pi)};
        case FunctionClass::Convex: return {ExtremalSpec::derived(cls)};
    }
    throw std::invalid_argument("extremal_candidates: bad class");
}

}  // namespace hankelkit
