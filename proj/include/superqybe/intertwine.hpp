#ifndef SUPERQYBE_INTERTWINE_HPP
#define SUPERQYBE_INTERTWINE_HPP

#include <array>
#include <string>
#include <vector>

#include "superqybe/qdeform.hpp"
#include "superqybe/repr.hpp"
#include "superqybe/superlinalg.hpp"

namespace superqybe {

/// Irreducible summand of V(0,0|a) (x) V(0,0|b):
///   V1 = V(0,0|a+b)    dim 4
///   V2 = V(0,-1|a+b+1) dim 8
///   V3 = V(-1,-1|a+b+2) dim 4
struct FusionLabel {
    int k; // 1, 2, 3

    explicit FusionLabel(int kk) : k(kk) {
        if (k < 1 || k > 3) throw Error("FusionLabel: k must be 1, 2 or 3");
    }
    int dim() const { return k == 2 ? 8 : 4; }
    /// Shift of the third weight label relative to a+b.
    int weight_shift() const { return k - 1; }
};

struct IntertwineOptions {
    double fusion_floor = 1e-8; // floor on |[a+b]_q|, |[a+b+1]_q|, |[a+b+2]_q|
    bool allow_mixed_class = false;
};

namespace detail {

inline void check_pair(const ReprLabel& alpha, const ReprLabel& beta, const QParams& params,
                       const IntertwineOptions& opt) {
    if (!opt.allow_mixed_class && alpha.unitarity_class() != beta.unitarity_class())
        throw DomainError(
            "mixed unitarity classes (one type-I, one type-II label) are rejected by default; "
            "hermiticity and realness guarantees only hold within a class");
    const double s = alpha.alpha + beta.alpha;
    for (double shift : {0.0, 1.0, 2.0}) {
        if (std::abs(q_number(s + shift, params)) < opt.fusion_floor)
            throw SingularFusionError("fusion denominator [alpha+beta+" + std::to_string((int)shift) +
                                      "]_q below floor at alpha+beta = " + std::to_string(s));
    }
}

} // namespace detail

/// The sixteen symmetry-adapted vectors of the decomposition, in the paper's
/// Psi-indexing: 4 for V1, 8 for V2, 4 for V3. Orthonormal under the ordinary
/// Hermitian pairing.
struct SymmetryBasis {
    ReprLabel alpha;
    ReprLabel beta;
    QParams params;
    std::array<std::vector<Vector>, 3> vectors; // index k-1

    const std::vector<Vector>& block(const FusionLabel& mu) const { return vectors[mu.k - 1]; }

    std::vector<Vector> all() const {
        std::vector<Vector> out;
        for (const auto& blk : vectors)
            for (const auto& v : blk) out.push_back(v);
        return out;
    }
};

inline SymmetryBasis build_symmetry_basis(const ReprLabel& alpha, const ReprLabel& beta,
                                          const QParams& params,
                                          const IntertwineOptions& opt = {}) {
    detail::check_pair(alpha, beta, params, opt);
    const double a = alpha.alpha, b = beta.alpha;
    auto Q = [&](double x) { return Complex(q_number(x, params), 0.0); };
    auto S = [&](double x) { return q_number_sqrt(x, params); };
    auto qp = [&](double t) { return Complex(std::pow(params.q, t), 0.0); };
    auto ket = [](int i, int j) {
        Vector v = Vector::Zero(16);
        v((i - 1) * 4 + (j - 1)) = 1.0;
        return v;
    };

    SymmetryBasis out{alpha, beta, params, {}};
    auto& V1 = out.vectors[0];
    auto& V2 = out.vectors[1];
    auto& V3 = out.vectors[2];

    V1.push_back(ket(1, 1));
    {
        const Complex n = 1.0 / S(a + b);
        V1.push_back(n * (qp(-b / 2) * S(a) * ket(2, 1) + qp(a / 2) * S(b) * ket(1, 2)));
        V1.push_back(n * (qp(-b / 2) * S(a) * ket(3, 1) + qp(a / 2) * S(b) * ket(1, 3)));
    }
    {
        const Complex n = 1.0 / (S(a + b) * S(a + b + 1));
        V1.push_back(n * (qp(-b) * S(a) * S(a + 1) * ket(4, 1) + qp(a) * S(b) * S(b + 1) * ket(1, 4) +
                          S(a) * S(b) * (qp((a - b - 1) / 2) * ket(2, 3) -
                                         qp((a - b + 1) / 2) * ket(3, 2))));
    }
    {
        const Complex n = 1.0 / S(a + b);
        V2.push_back(n * (qp(a / 2) * S(b) * ket(2, 1) - qp(-b / 2) * S(a) * ket(1, 2)));
        V2.push_back(n * (qp(a / 2) * S(b) * ket(3, 1) - qp(-b / 2) * S(a) * ket(1, 3)));
    }
    {
        const Complex n = 1.0 / (S(a + b) * S(a + b + 1));
        V2.push_back(n * (qp((a - b) / 2) * S(a + 1) * S(b) * ket(4, 1) -
                          qp((a - b) / 2) * S(a) * S(b + 1) * ket(1, 4) -
                          qp(-b - 0.5) * Q(a) * ket(2, 3) - qp(a + 0.5) * Q(b) * ket(3, 2)));
    }
    V2.push_back(ket(3, 3));
    {
        const Complex n = 1.0 / S(a + b + 2);
        V2.push_back(n * (qp(-(b + 1) / 2) * S(a + 1) * ket(4, 3) -
                          qp((a + 1) / 2) * S(b + 1) * ket(3, 4)));
        V2.push_back(n * (qp(-(b + 1) / 2) * S(a + 1) * ket(4, 2) -
                          qp((a + 1) / 2) * S(b + 1) * ket(2, 4)));
    }
    {
        const Complex n = 1.0 / (S(a + b + 1) * S(a + b + 2));
        V2.push_back(n * (qp((a - b) / 2) * S(a + 1) * S(b) * ket(4, 1) -
                          qp((a - b) / 2) * S(b + 1) * S(a) * ket(1, 4) +
                          qp(a + 0.5) * Q(b + 1) * ket(2, 3) +
                          qp(-(b + 0.5)) * Q(a + 1) * ket(3, 2)));
    }
    V2.push_back(ket(2, 2));
    {
        const Complex n = 1.0 / (S(a + b + 1) * S(a + b + 2));
        V3.push_back(n * (qp((a - b + 1) / 2) * S(b + 1) * S(a + 1) * ket(3, 2) -
                          qp((a - b - 1) / 2) * S(a + 1) * S(b + 1) * ket(2, 3) +
                          qp(a + 1) * S(b + 1) * S(b) * ket(4, 1) +
                          qp(-b - 1) * S(a + 1) * S(a) * ket(1, 4)));
    }
    {
        const Complex n = 1.0 / S(a + b + 2);
        V3.push_back(n * (qp((a + 1) / 2) * S(b + 1) * ket(4, 2) +
                          qp(-(b + 1) / 2) * S(a + 1) * ket(2, 4)));
        V3.push_back(n * (qp((a + 1) / 2) * S(b + 1) * ket(4, 3) +
                          qp(-(b + 1) / 2) * S(a + 1) * ket(3, 4)));
    }
    V3.push_back(ket(4, 4));
    return out;
}

/// Elementary intertwiner P^{ab}_mu = sum_i |e^mu_i>_{b(x)a} <e^mu_i|_{a(x)b}
/// mapping V(mu) in V_a (x) V_b onto its copy in V_b (x) V_a. The duals are
/// plain conjugate transposes of the orthonormal basis vectors.
inline GradedOperator elementary_intertwiner(const FusionLabel& mu, const ReprLabel& alpha,
                                             const ReprLabel& beta, const QParams& params,
                                             const IntertwineOptions& opt = {}) {
    const SymmetryBasis ab = build_symmetry_basis(alpha, beta, params, opt);
    const SymmetryBasis ba = build_symmetry_basis(beta, alpha, params, opt);
    Matrix P = Matrix::Zero(16, 16);
    const auto& vab = ab.block(mu);
    const auto& vba = ba.block(mu);
    for (std::size_t i = 0; i < vab.size(); ++i) P += vba[i] * vab[i].adjoint();
    const GradedSpace VV = GradedSpace::tensor(GradedSpace::fundamental(),
                                               GradedSpace::fundamental());
    return GradedOperator(std::move(P), VV, VV);
}

/// All three intertwiners for a fixed (alpha, beta); the combination
/// coefficients rho_mu are identically 1.
struct IntertwinerSet {
    GradedOperator P1, P2, P3;
};

inline IntertwinerSet build_intertwiners(const ReprLabel& alpha, const ReprLabel& beta,
                                         const QParams& params,
                                         const IntertwineOptions& opt = {}) {
    return IntertwinerSet{elementary_intertwiner(FusionLabel(1), alpha, beta, params, opt),
                          elementary_intertwiner(FusionLabel(2), alpha, beta, params, opt),
                          elementary_intertwiner(FusionLabel(3), alpha, beta, params, opt)};
}

/// Rcheck(a,b) = P1 + P2 + P3.
inline GradedOperator r_from_projectors(const ReprLabel& alpha, const ReprLabel& beta,
                                        const QParams& params,
                                        const IntertwineOptions& opt = {}) {
    IntertwinerSet s = build_intertwiners(alpha, beta, params, opt);
    GradedOperator out = s.P1;
    out.mat += s.P2.mat + s.P3.mat;
    return out;
}

} // namespace superqybe

#endif
