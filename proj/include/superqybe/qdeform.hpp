#ifndef SUPERQYBE_QDEFORM_HPP
#define SUPERQYBE_QDEFORM_HPP

#include <cmath>
#include <complex>
#include <string>

#include "superqybe/errors.hpp"

namespace superqybe {

/// Real deformation parameter q > 0, q != 1 (the q = 1 theory lives in the
/// dedicated rational code path).
struct QParams {
    double q;

    explicit QParams(double q_) : q(q_) {
        if (!(q > 0.0))
            throw DomainError("QParams: q must be positive, got q = " + std::to_string(q));
        if (q == 1.0)
            throw DomainError("QParams: q = 1 is excluded; use the rational code path");
    }

    double log_q() const { return std::log(q); }
};

enum class UnitarityClass { TypeI, TypeII };

/// TypeI for alpha > 0, TypeII for alpha < -1; the closed interval [-1, 0]
/// carries no unitary representation and is rejected.
inline UnitarityClass classify(double alpha) {
    if (alpha > 0.0) return UnitarityClass::TypeI;
    if (alpha < -1.0) return UnitarityClass::TypeII;
    throw NonUnitaryRangeError(
        "alpha = " + std::to_string(alpha) +
        " lies in the excluded interval [-1, 0]; unitary windows are alpha > 0 (type I) "
        "and alpha < -1 (type II)");
}

/// Highest-weight parameter restricted to a unitary window.
struct ReprLabel {
    double alpha;

    explicit ReprLabel(double a) : alpha(a) { (void)classify(a); }

    UnitarityClass unitarity_class() const { return classify(alpha); }
};

/// q-number [x]_q = (q^x - q^{-x})/(q - q^{-1}) = sinh(x ln q)/sinh(ln q).
/// The sinh form is the exp(x ln q) difference evaluated stably near q = 1.
inline double q_number(double x, const QParams& params) {
    const double l = params.log_q();
    return std::sinh(x * l) / std::sinh(l);
}

/// Principal-branch complex square root of [x]_q. For type-II parameters the
/// q-numbers go negative and the root is purely imaginary; products of such
/// roots are what the representation matrices and the R-matrix entries use.
inline std::complex<double> q_number_sqrt(double x, const QParams& params) {
    return std::sqrt(std::complex<double>(q_number(x, params), 0.0));
}

inline double sign_of(double x) { return x < 0.0 ? -1.0 : 1.0; }

/// sign(alpha) * sqrt([alpha+shift]_q / [alpha]_q), real in both unitary
/// windows. Throws DomainError when the radicand is negative (parameters
/// outside the unitary windows).
inline double signed_sqrt_ratio(double alpha, double shift, const QParams& params) {
    const double num = q_number(alpha + shift, params);
    const double den = q_number(alpha, params);
    if (den == 0.0)
        throw DomainError("signed_sqrt_ratio: [alpha]_q vanishes at alpha = " + std::to_string(alpha));
    const double radicand = num / den;
    if (radicand < 0.0)
        throw DomainError("signed_sqrt_ratio: radicand [alpha+" + std::to_string(shift) +
                          "]_q/[alpha]_q < 0 at alpha = " + std::to_string(alpha) +
                          "; alpha is outside the unitary windows");
    return sign_of(alpha) * std::sqrt(radicand);
}

} // namespace superqybe

#endif
