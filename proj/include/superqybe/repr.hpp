#ifndef SUPERQYBE_REPR_HPP
#define SUPERQYBE_REPR_HPP

#include <array>
#include <map>
#include <string>

#include "superqybe/qdeform.hpp"
#include "superqybe/superlinalg.hpp"

namespace superqybe {

/// Generator E^upper_lower of U_q(gl(2|1)). Only the seven generators that
/// appear in the representation and coproduct formulas are modeled; anything
/// else (E^1_3, E^3_1, ...) is rejected.
struct GeneratorLabel {
    int upper;
    int lower;

    GeneratorLabel(int up, int lo) : upper(up), lower(lo) {
        static constexpr std::array<std::pair<int, int>, 7> allowed = {
            {{1, 1}, {2, 2}, {3, 3}, {1, 2}, {2, 1}, {2, 3}, {3, 2}}};
        bool ok = false;
        for (auto [u, l] : allowed) ok = ok || (u == up && l == lo);
        if (!ok)
            throw UnsupportedGeneratorError("generator E^" + std::to_string(up) + "_" +
                                            std::to_string(lo) + " is not modeled");
    }

    /// [E^i_j] = ([i]+[j]) mod 2 with [1]=[2]=0, [3]=1.
    int parity() const {
        auto g = [](int i) { return i == 3 ? 1 : 0; };
        return (g(upper) + g(lower)) % 2;
    }

    bool is_cartan() const { return upper == lower; }

    bool operator<(const GeneratorLabel& o) const {
        return std::pair(upper, lower) < std::pair(o.upper, o.lower);
    }
    bool operator==(const GeneratorLabel& o) const {
        return upper == o.upper && lower == o.lower;
    }
};

inline const std::array<GeneratorLabel, 7>& all_generators() {
    static const std::array<GeneratorLabel, 7> gens = {
        GeneratorLabel(1, 1), GeneratorLabel(2, 2), GeneratorLabel(3, 3),
        GeneratorLabel(1, 2), GeneratorLabel(2, 1), GeneratorLabel(2, 3),
        GeneratorLabel(3, 2)};
    return gens;
}

/// Matrix unit e_{ij} = |i><j| on the fundamental module (1-based labels).
inline Matrix eunit(int i, int j) {
    Matrix m = Matrix::Zero(4, 4);
    m(i - 1, j - 1) = 1.0;
    return m;
}

/// The one-parameter 4-dimensional irrep with highest weight (0,0|alpha).
struct Irrep {
    ReprLabel label;
    QParams params;
    std::map<GeneratorLabel, Matrix> matrices;

    const Matrix& matrix(const GeneratorLabel& g) const {
        auto it = matrices.find(g);
        if (it == matrices.end())
            throw UnsupportedGeneratorError("generator not present in irrep");
        return it->second;
    }

    GradedOperator graded(const GeneratorLabel& g) const {
        return GradedOperator(matrix(g), GradedSpace::fundamental(), GradedSpace::fundamental());
    }
};

/// Populate all seven generator matrices. sqrt([alpha]_q), sqrt([alpha+1]_q)
/// are principal-branch complex roots: purely imaginary in the type-II
/// window, where realness of observables is a checked postcondition rather
/// than an input assumption.
inline Irrep build_irrep(const ReprLabel& label, const QParams& params) {
    const double a = label.alpha;
    const Complex sa = q_number_sqrt(a, params);
    const Complex sa1 = q_number_sqrt(a + 1.0, params);
    Irrep rep{label, params, {}};
    rep.matrices.emplace(GeneratorLabel(1, 2), eunit(2, 3));
    rep.matrices.emplace(GeneratorLabel(2, 1), eunit(3, 2));
    rep.matrices.emplace(GeneratorLabel(1, 1), -eunit(3, 3) - eunit(4, 4));
    rep.matrices.emplace(GeneratorLabel(2, 2), -eunit(2, 2) - eunit(4, 4));
    rep.matrices.emplace(GeneratorLabel(2, 3), sa * eunit(1, 2) + sa1 * eunit(3, 4));
    rep.matrices.emplace(GeneratorLabel(3, 2), sa * eunit(2, 1) + sa1 * eunit(4, 3));
    rep.matrices.emplace(GeneratorLabel(3, 3),
                         a * eunit(1, 1) + (a + 1.0) * (eunit(2, 2) + eunit(3, 3)) +
                             (a + 2.0) * eunit(4, 4));
    return rep;
}

namespace detail {

/// q^{t * D} for a real diagonal generator combination D.
inline Matrix q_power_diag(const Matrix& D, double t, const QParams& params) {
    Matrix out = Matrix::Zero(D.rows(), D.cols());
    for (int k = 0; k < D.rows(); ++k)
        out(k, k) = std::pow(params.q, t * D(k, k).real());
    return out;
}

/// The Cartan combination dressing the coproduct of g: q^{t*(E11-E22)} for
/// E^1_2 / E^2_1, q^{t*(E22+E33)} for E^2_3 / E^3_2 (the latter depends on
/// the leg's alpha through E^3_3), identity for Cartans.
inline Matrix cartan_dressing(const GeneratorLabel& g, const Irrep& rep, double t) {
    if (g.is_cartan()) return Matrix::Identity(4, 4);
    Matrix D;
    if ((g.upper == 1 && g.lower == 2) || (g.upper == 2 && g.lower == 1))
        D = rep.matrix(GeneratorLabel(1, 1)) - rep.matrix(GeneratorLabel(2, 2));
    else
        D = rep.matrix(GeneratorLabel(2, 2)) + rep.matrix(GeneratorLabel(3, 3));
    return q_power_diag(D, t, rep.params);
}

inline GradedOperator as_graded(const Matrix& m) {
    return GradedOperator(m, GradedSpace::fundamental(), GradedSpace::fundamental());
}

} // namespace detail

/// Delta^{ab}(g) = (pi_alpha (x) pi_beta) Delta(g) on the 16-dimensional
/// tensor module, assembled with the graded tensor product. Abstractly
/// Delta(g) = g (x) q^{-D/2} + q^{D/2} (x) g for the non-Cartan generators,
/// and I (x) g + g (x) I for the Cartans.
inline GradedOperator coproduct_action(const GeneratorLabel& g, const ReprLabel& alpha,
                                       const ReprLabel& beta, const QParams& params) {
    const Irrep pa = build_irrep(alpha, params);
    const Irrep pb = build_irrep(beta, params);
    using detail::as_graded;
    if (g.is_cartan()) {
        GradedOperator out = graded_tensor_op(as_graded(pa.matrix(g)),
                                              as_graded(Matrix::Identity(4, 4)));
        out.mat += graded_tensor_op(as_graded(Matrix::Identity(4, 4)),
                                    as_graded(pb.matrix(g))).mat;
        return out;
    }
    GradedOperator out = graded_tensor_op(as_graded(pa.matrix(g)),
                                          as_graded(detail::cartan_dressing(g, pb, -0.5)));
    out.mat += graded_tensor_op(as_graded(detail::cartan_dressing(g, pa, 0.5)),
                                as_graded(pb.matrix(g))).mat;
    return out;
}

/// Opposite-coproduct action Deltabar^{ba}(g) = (pi_beta (x) pi_alpha)(T Delta)(g)
/// with the graded twist T(a (x) b) = (-1)^{[a][b]} b (x) a; the twist sign is
/// +1 here because every term of Delta(g) pairs the generator with an even
/// Cartan dressing. Equals P Delta^{ab}(g) P with the graded permutation P.
inline GradedOperator opposite_coproduct_action(const GeneratorLabel& g, const ReprLabel& alpha,
                                                const ReprLabel& beta, const QParams& params) {
    const Irrep pa = build_irrep(alpha, params);
    const Irrep pb = build_irrep(beta, params);
    using detail::as_graded;
    if (g.is_cartan()) {
        GradedOperator out = graded_tensor_op(as_graded(pb.matrix(g)),
                                              as_graded(Matrix::Identity(4, 4)));
        out.mat += graded_tensor_op(as_graded(Matrix::Identity(4, 4)),
                                    as_graded(pa.matrix(g))).mat;
        return out;
    }
    GradedOperator out = graded_tensor_op(as_graded(detail::cartan_dressing(g, pb, -0.5)),
                                          as_graded(pa.matrix(g)));
    out.mat += graded_tensor_op(as_graded(pb.matrix(g)),
                                as_graded(detail::cartan_dressing(g, pa, 0.5))).mat;
    return out;
}

} // namespace superqybe

#endif
