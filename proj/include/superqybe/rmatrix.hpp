#ifndef SUPERQYBE_RMATRIX_HPP
#define SUPERQYBE_RMATRIX_HPP

#include <functional>
#include <optional>
#include <utility>

#include "superqybe/intertwine.hpp"
#include "superqybe/qdeform.hpp"
#include "superqybe/repr.hpp"
#include "superqybe/superlinalg.hpp"

namespace superqybe {

/// The two representation labels acting as non-additive spectral parameters.
struct SpectralPair {
    ReprLabel alpha;
    ReprLabel beta;
    QParams params;

    SpectralPair(ReprLabel a, ReprLabel b, QParams p, bool allow_mixed = false)
        : alpha(a), beta(b), params(p) {
        if (!allow_mixed && alpha.unitarity_class() != beta.unitarity_class())
            throw DomainError("SpectralPair: labels in different unitarity classes "
                              "(pass allow_mixed to override)");
    }

    SpectralPair swapped() const { return SpectralPair(beta, alpha, params, true); }
};

enum class Construction { ClosedForm, ProjectorSum, Rational };

struct RMatrix {
    GradedOperator op;
    double alpha = 0.0;
    double beta = 0.0;
    std::optional<double> q; // absent for the rational form
    Construction construction = Construction::ClosedForm;
};

namespace detail {

/// One e_{ij} (x) e_{kl} summand; the tensor is graded.
inline void add_term(Matrix& R, const Complex& coeff, int i, int j, int k, int l) {
    static const GradedSpace F = GradedSpace::fundamental();
    GradedOperator t = graded_tensor_op(GradedOperator(eunit(i, j), F, F),
                                        GradedOperator(eunit(k, l), F, F));
    R += coeff * t.mat;
}

template <typename QNum, typename QSqrt, typename QPow>
Matrix assemble_r(double a, double b, QNum Q, QSqrt S, QPow qp, const Complex& f,
                  const Complex& qplus, const Complex& qminus) {
    // qplus = q^{1}, qminus = q^{-1}; in the rational limit both are 1 and f = 4.
    Matrix R = Matrix::Zero(16, 16);
    for (int i = 1; i <= 4; ++i) add_term(R, 1.0, i, i, i, i);

    Complex c = (qp((a + b) / 2) + qp(-(a + b) / 2)) * S(a) * S(b) / Q(a + b);
    add_term(R, c, 2, 2, 1, 1);
    add_term(R, c, 1, 1, 2, 2);
    add_term(R, c, 3, 3, 1, 1);
    add_term(R, c, 1, 1, 3, 3);

    c = f * S(a) * S(b) * S(a + 1) * S(b + 1) / (Q(a + b) * Q(a + b + 2));
    add_term(R, c, 4, 4, 1, 1);
    add_term(R, c, 1, 1, 4, 4);

    c = qminus * (f * Q(a) * Q(b) + (qp(a + b + 2) + 1.0) * Q(a + b)) /
        (Q(a + b) * Q(a + b + 2));
    add_term(R, c, 2, 2, 3, 3);
    c = qplus * (f * Q(a) * Q(b) + (qp(-a - b - 2) + 1.0) * Q(a + b)) /
        (Q(a + b) * Q(a + b + 2));
    add_term(R, c, 3, 3, 2, 2);

    c = (qp(-(a + b + 2) / 2) + qp((a + b + 2) / 2)) * S(a + 1) * S(b + 1) / Q(a + b + 2);
    add_term(R, c, 4, 4, 2, 2);
    add_term(R, c, 2, 2, 4, 4);
    add_term(R, c, 4, 4, 3, 3);
    add_term(R, c, 3, 3, 4, 4);

    c = (Q(b) - Q(a)) / Q(a + b);
    add_term(R, c, 2, 1, 1, 2);
    add_term(R, c, 1, 2, 2, 1);
    add_term(R, c, 3, 1, 1, 3);
    add_term(R, c, 1, 3, 3, 1);

    const Complex B = f * Q((a - b) / 2) / (Q(a + b) * Q(a + b + 2));
    add_term(R, B * Q((a - b - 2) / 2), 4, 1, 1, 4);
    add_term(R, B * Q((a - b + 2) / 2), 1, 4, 4, 1);
    add_term(R, B * Q((a - b) / 2), 2, 3, 3, 2);
    add_term(R, B * Q((a - b) / 2), 3, 2, 2, 3);

    c = (Q(b + 1) - Q(a + 1)) / Q(a + b + 2);
    add_term(R, c, 4, 2, 2, 4);
    add_term(R, c, 2, 4, 4, 2);
    add_term(R, c, 4, 3, 3, 4);
    add_term(R, c, 3, 4, 4, 3);

    const Complex C1 = f * Q((a - b) / 2) * S(a) * S(b + 1) / (Q(a + b) * Q(a + b + 2));
    const Complex sqm = std::sqrt(qminus), sqp = std::sqrt(qplus);
    add_term(R, C1 * sqm, 4, 2, 1, 3);
    add_term(R, -C1 * sqm, 2, 1, 3, 4);
    add_term(R, C1 * sqp, 3, 1, 2, 4);
    add_term(R, -C1 * sqp, 4, 3, 1, 2);

    const Complex C2 = f * Q((a - b) / 2) * S(a + 1) * S(b) / (Q(a + b) * Q(a + b + 2));
    add_term(R, C2 * sqm, 2, 4, 3, 1);
    add_term(R, -C2 * sqm, 1, 2, 4, 3);
    add_term(R, C2 * sqp, 1, 3, 4, 2);
    add_term(R, -C2 * sqp, 3, 4, 2, 1);
    return R;
}

} // namespace detail

/// The 36-vertex bivariate R-matrix, term by term, with
/// f = q^{a+b+1} + q^{-a-b-1} + q + q^{-1}. Square roots of q-numbers are
/// principal-branch, so type-II entries come out real with the signs the
/// projector-sum construction produces.
inline RMatrix r_closed_form(const SpectralPair& pair, const IntertwineOptions& opt = {}) {
    detail::check_pair(pair.alpha, pair.beta, pair.params,
                       IntertwineOptions{opt.fusion_floor, true});
    const double a = pair.alpha.alpha, b = pair.beta.alpha, q = pair.params.q;
    auto Q = [&](double x) { return Complex(q_number(x, pair.params), 0.0); };
    auto S = [&](double x) { return q_number_sqrt(x, pair.params); };
    auto qp = [&](double t) { return Complex(std::pow(q, t), 0.0); };
    const Complex f = qp(a + b + 1) + qp(-a - b - 1) + qp(1) + qp(-1);
    Matrix R = detail::assemble_r(a, b, Q, S, qp, f, Complex(q), Complex(1.0 / q));
    const GradedSpace VV = GradedSpace::tensor(GradedSpace::fundamental(),
                                               GradedSpace::fundamental());
    return RMatrix{GradedOperator(std::move(R), VV, VV), a, b, q, Construction::ClosedForm};
}

/// Projector-sum construction wrapped as an RMatrix.
inline RMatrix r_projector_sum(const SpectralPair& pair, const IntertwineOptions& opt = {}) {
    GradedOperator op = r_from_projectors(pair.alpha, pair.beta, pair.params, opt);
    return RMatrix{std::move(op), pair.alpha.alpha, pair.beta.alpha, pair.params.q,
                   Construction::ProjectorSum};
}

/// q -> 1 limit: q-numbers become their arguments and f -> 4.
inline RMatrix r_rational(double alpha, double beta, const IntertwineOptions& opt = {}) {
    if (!opt.allow_mixed_class && classify(alpha) != classify(beta))
        throw DomainError("r_rational: labels in different unitarity classes");
    for (double shift : {0.0, 2.0})
        if (std::abs(alpha + beta + shift) < opt.fusion_floor)
            throw SingularFusionError("r_rational: alpha+beta+" + std::to_string((int)shift) +
                                      " below floor");
    auto Q = [](double x) { return Complex(x, 0.0); };
    auto S = [](double x) { return std::sqrt(Complex(x, 0.0)); };
    auto qp = [](double) { return Complex(1.0, 0.0); };
    Matrix R = detail::assemble_r(alpha, beta, Q, S, qp, Complex(4.0), Complex(1.0), Complex(1.0));
    const GradedSpace VV = GradedSpace::tensor(GradedSpace::fundamental(),
                                               GradedSpace::fundamental());
    return RMatrix{GradedOperator(std::move(R), VV, VV), alpha, beta, std::nullopt,
                   Construction::Rational};
}

using RBuilder = std::function<Matrix(double, double)>;

inline RBuilder closed_form_builder(const QParams& params, bool allow_mixed = false) {
    return [params, allow_mixed](double a, double b) {
        return r_closed_form(SpectralPair(ReprLabel(a), ReprLabel(b), params, allow_mixed)).op.mat;
    };
}

inline RBuilder projector_builder(const QParams& params, bool allow_mixed = false) {
    return [params, allow_mixed](double a, double b) {
        IntertwineOptions opt;
        opt.allow_mixed_class = allow_mixed;
        return r_projector_sum(SpectralPair(ReprLabel(a), ReprLabel(b), params, allow_mixed), opt)
            .op.mat;
    };
}

inline RBuilder rational_builder() {
    return [](double a, double b) { return r_rational(a, b).op.mat; };
}

/// Max-abs-entry residual of the graded QYBE
///   (I(x)R(a,b))(R(a,g)(x)I)(I(x)R(b,g)) = (R(b,g)(x)I)(I(x)R(a,g))(R(a,b)(x)I)
/// on the 64-dimensional triple product. The identity paddings are even, so
/// no Koszul signs arise in the embeddings themselves.
inline double check_qybe(const RBuilder& build, double alpha, double beta, double gamma) {
    const Matrix Rab = build(alpha, beta);
    const Matrix Rag = build(alpha, gamma);
    const Matrix Rbg = build(beta, gamma);
    const Matrix I4 = Matrix::Identity(4, 4);
    const Matrix lhs = kron(I4, Rab) * kron(Rag, I4) * kron(I4, Rbg);
    const Matrix rhs = kron(Rbg, I4) * kron(I4, Rag) * kron(Rab, I4);
    return max_abs(lhs - rhs);
}

/// (regularity residual ||R(a,a) - I||_max, unitarity residual
///  ||R(a,b) R(b,a) - I||_max).
inline std::pair<double, double> check_regularity_unitarity(const SpectralPair& pair) {
    const Matrix I = Matrix::Identity(16, 16);
    const Matrix Raa = r_closed_form(SpectralPair(pair.alpha, pair.alpha, pair.params)).op.mat;
    const Matrix Rab = r_closed_form(pair).op.mat;
    const Matrix Rba = r_closed_form(pair.swapped()).op.mat;
    return {max_abs(Raa - I), max_abs(Rab * Rba - I)};
}

/// Invariance residual of the first relation fixing the R-matrix:
/// max over the seven generators of ||R(a,b) Delta^{ab}(g) - Delta^{ba}(g) R(a,b)||_max.
inline double check_invariance(const SpectralPair& pair,
                               Construction c = Construction::ClosedForm) {
    if (c == Construction::Rational)
        throw DomainError("check_invariance: the rational form has no q to build the "
                          "coproduct from; check it against the classical action instead");
    const Matrix R = (c == Construction::ProjectorSum ? r_projector_sum(pair)
                                                      : r_closed_form(pair))
                         .op.mat;
    double worst = 0.0;
    for (const auto& g : all_generators()) {
        const Matrix Dab = coproduct_action(g, pair.alpha, pair.beta, pair.params).mat;
        const Matrix Dba = coproduct_action(g, pair.beta, pair.alpha, pair.params).mat;
        worst = std::max(worst, max_abs(R * Dab - Dba * R));
    }
    return worst;
}

/// Number of structurally nonzero entries (36 for generic same-class pairs,
/// 16 on the diagonal alpha = beta).
inline int vertex_census(const RMatrix& R, double threshold = 1e-13) {
    int n = 0;
    for (int c = 0; c < R.op.mat.cols(); ++c)
        for (int r = 0; r < R.op.mat.rows(); ++r)
            if (std::abs(R.op.mat(r, c)) > threshold) ++n;
    return n;
}

} // namespace superqybe

#endif
