#ifndef SUPERQYBE_SUPERLINALG_HPP
#define SUPERQYBE_SUPERLINALG_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "superqybe/errors.hpp"

namespace superqybe {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Z2-graded vector space: dimension plus one parity bit per basis state
/// (0 = even/bosonic, 1 = odd/fermionic).
struct GradedSpace {
    int dim = 0;
    std::vector<int> parity;

    GradedSpace() = default;
    GradedSpace(int d, std::vector<int> p) : dim(d), parity(std::move(p)) {
        if (static_cast<int>(parity.size()) != dim)
            throw Error("GradedSpace: parity list length does not match dim");
    }

    /// The 4-dimensional module V(0,0|alpha): kets |1>,|2>,|3>,|4| with
    /// grading [|1>]=[|4>]=0, [|2>]=[|3>]=1.
    static GradedSpace fundamental() { return GradedSpace(4, {0, 1, 1, 0}); }

    /// Tensor space with lexicographic basis ordering (first factor major).
    static GradedSpace tensor(const GradedSpace& a, const GradedSpace& b) {
        std::vector<int> p;
        p.reserve(static_cast<std::size_t>(a.dim) * b.dim);
        for (int i = 0; i < a.dim; ++i)
            for (int j = 0; j < b.dim; ++j)
                p.push_back((a.parity[i] + b.parity[j]) % 2);
        return GradedSpace(a.dim * b.dim, std::move(p));
    }

    static GradedSpace power(const GradedSpace& a, int n) {
        GradedSpace s(1, {0});
        for (int k = 0; k < n; ++k) s = tensor(s, a);
        return s;
    }

    bool operator==(const GradedSpace& o) const { return dim == o.dim && parity == o.parity; }
    bool operator!=(const GradedSpace& o) const { return !(*this == o); }
};

struct GradedVector {
    Vector coeffs;
    GradedSpace space;

    GradedVector(Vector c, GradedSpace s) : coeffs(std::move(c)), space(std::move(s)) {
        if (coeffs.size() != space.dim)
            throw Error("GradedVector: component count does not match space dimension");
    }
};

/// Dense complex operator between graded spaces.
struct GradedOperator {
    Matrix mat;
    GradedSpace domain;
    GradedSpace codomain;

    GradedOperator() = default;
    GradedOperator(Matrix m, GradedSpace dom, GradedSpace cod)
        : mat(std::move(m)), domain(std::move(dom)), codomain(std::move(cod)) {
        if (mat.rows() != codomain.dim || mat.cols() != domain.dim)
            throw Error("GradedOperator: matrix shape does not match spaces");
    }

    static GradedOperator identity(const GradedSpace& s) {
        return GradedOperator(Matrix::Identity(s.dim, s.dim), s, s);
    }

    /// 0 (even), 1 (odd), or nullopt for a mixed-parity operator. An entry at
    /// (r, c) belongs to parity [r] xor [c]; an operator is homogeneous when
    /// all nonzero entries share one parity.
    std::optional<int> parity(double tol = 0.0) const {
        bool even = false, odd = false;
        for (int c = 0; c < mat.cols(); ++c)
            for (int r = 0; r < mat.rows(); ++r)
                if (std::abs(mat(r, c)) > tol)
                    ((codomain.parity[r] ^ domain.parity[c]) ? odd : even) = true;
        if (even && odd) return std::nullopt;
        return odd ? 1 : 0;
    }

    /// Split into (even part, odd part); entries of mismatched parity are
    /// zeroed in each part, so the parts always sum back to the operator.
    std::pair<GradedOperator, GradedOperator> parity_parts() const {
        Matrix ev = Matrix::Zero(mat.rows(), mat.cols());
        Matrix od = Matrix::Zero(mat.rows(), mat.cols());
        for (int c = 0; c < mat.cols(); ++c)
            for (int r = 0; r < mat.rows(); ++r)
                ((codomain.parity[r] ^ domain.parity[c]) ? od(r, c) : ev(r, c)) = mat(r, c);
        return {GradedOperator(std::move(ev), domain, codomain),
                GradedOperator(std::move(od), domain, codomain)};
    }
};

inline double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

inline int int_pow(int base, int exp) {
    int r = 1;
    for (int k = 0; k < exp; ++k) r *= base;
    return r;
}

/// Plain Kronecker product (no grading signs).
inline Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

/// Graded tensor product of homogeneous operators: the entry at
/// ((i,j),(k,l)) is A[i,k] B[j,l] (-1)^{[B] [k]}, so that
/// (A(x)B)(C(x)D) = (-1)^{[B][C]} (AC (x) BD).
inline GradedOperator graded_tensor_op(const GradedOperator& A, const GradedOperator& B) {
    auto pa = A.parity();
    auto pb = B.parity();
    if (!pa || !pb)
        throw ParityError("graded_tensor_op: inputs must be parity-homogeneous");
    Matrix a = A.mat;
    if (*pb == 1)
        for (int k = 0; k < a.cols(); ++k)
            if (A.domain.parity[k]) a.col(k) *= -1.0;
    return GradedOperator(kron(a, B.mat),
                          GradedSpace::tensor(A.domain, B.domain),
                          GradedSpace::tensor(A.codomain, B.codomain));
}

/// Graded permutation P(v (x) w) = (-1)^{[v][w]} w (x) v. Squares to the
/// identity and is its own transpose.
inline GradedOperator graded_permutation(const GradedSpace& V, const GradedSpace& W) {
    const int dv = V.dim, dw = W.dim;
    Matrix P = Matrix::Zero(dv * dw, dv * dw);
    for (int i = 0; i < dv; ++i)
        for (int j = 0; j < dw; ++j)
            P(j * dv + i, i * dw + j) = (V.parity[i] && W.parity[j]) ? -1.0 : 1.0;
    return GradedOperator(std::move(P), GradedSpace::tensor(V, W), GradedSpace::tensor(W, V));
}

/// Graded adjoint of a vector on V (x) W: the dual row vector whose component
/// on <x| (x) <y| is conj(c_{xy}) (-1)^{[x][y]} (antilinear, involutive up to
/// that sign). Pairing with kets is the ordinary row-times-column product.
inline Eigen::RowVectorXcd graded_adjoint(const GradedVector& v, const GradedSpace& V,
                                          const GradedSpace& W) {
    if (v.space.dim != V.dim * W.dim)
        throw Error("graded_adjoint: vector does not live on the stated tensor space");
    Eigen::RowVectorXcd dual(v.space.dim);
    for (int i = 0; i < V.dim; ++i)
        for (int j = 0; j < W.dim; ++j) {
            const int idx = i * W.dim + j;
            const double s = (V.parity[i] && W.parity[j]) ? -1.0 : 1.0;
            dual(idx) = s * std::conj(v.coeffs(idx));
        }
    return dual;
}

/// Embedded adjacent swap P_{i,i+1} on V^{(x)L} (1-based site i).
inline Matrix chain_swap(const GradedSpace& site, int i, int L) {
    const int d = site.dim;
    auto ident = [&](int n) { return Matrix::Identity(int_pow(d, n), int_pow(d, n)); };
    Matrix P = graded_permutation(site, site).mat;
    return kron(kron(ident(i - 1), P), ident(L - i - 1));
}

/// Two-site operator H on V(x)V embedded at bond (i, i+1) of a length-L
/// chain. For i = L on a periodic chain the wrap bond (L, 1) is built by
/// conjugating with the graded-permutation network that cycles site 1 to the
/// end; left identity padding of an odd part picks up Koszul signs, handled
/// by splitting into parity parts.
inline Matrix embed_two_site(const GradedOperator& H, int i, int L, bool periodic,
                             const GradedSpace& site = GradedSpace::fundamental()) {
    const int d = site.dim;
    if (H.mat.rows() != d * d || H.mat.cols() != d * d)
        throw Error("embed_two_site: operator is not two-site");
    if (i < 1 || i > L)
        throw IndexError("embed_two_site: site " + std::to_string(i) + " out of range 1.." +
                         std::to_string(L));
    if (i == L && !periodic)
        throw BoundaryError("embed_two_site: bond (L,1) requires a periodic chain");
    const int dimL = int_pow(d, L);

    auto embed_at = [&](const GradedOperator& M, int bond) {
        // I^{(x)(bond-1)} (x) M (x) I^{(x)(L-bond-1)}
        auto parts = M.parity_parts();
        Matrix out = Matrix::Zero(dimL, dimL);
        const GradedSpace left = GradedSpace::power(site, bond - 1);
        const int dr = int_pow(d, L - bond - 1);
        for (const auto* part : {&parts.first, &parts.second}) {
            if (max_abs(part->mat) == 0.0 && part != &parts.first) continue;
            GradedOperator lid = GradedOperator::identity(left);
            GradedOperator emb = graded_tensor_op(lid, *part);
            out += kron(emb.mat, Matrix::Identity(dr, dr));
        }
        return out;
    };

    if (L < 2) throw SizeError("embed_two_site: chain length must be at least 2");
    if (i < L) return embed_at(H, i);
    if (L == 2) {
        // wrap bond (2,1): conjugate the (1,2) embedding by the swap
        Matrix P = chain_swap(site, 1, 2);
        return P * H.mat * P;
    }
    // cycle site 1 to the end: S = P_{L-1,L} ... P_{1,2}
    Matrix S = Matrix::Identity(dimL, dimL);
    for (int j = 1; j < L; ++j) S = chain_swap(site, j, L) * S;
    Matrix Hlast = embed_at(H, L - 1); // acts on permuted slots (L-1, L) = original (L, 1)
    Matrix Sinv = Matrix::Identity(dimL, dimL);
    for (int j = L - 1; j >= 1; --j) Sinv = chain_swap(site, j, L) * Sinv;
    return Sinv * Hlast * S;
}

/// Partial supertrace over the auxiliary (first) slot:
/// str_0 M = sum_a (-1)^{[a]} <a|_0 M |a>_0.
inline Matrix partial_supertrace_aux(const Matrix& M, const GradedSpace& aux, int rest_dim) {
    if (M.rows() != aux.dim * rest_dim || M.cols() != aux.dim * rest_dim)
        throw Error("partial_supertrace_aux: shape mismatch");
    Matrix out = Matrix::Zero(rest_dim, rest_dim);
    for (int a = 0; a < aux.dim; ++a) {
        const double s = aux.parity[a] ? -1.0 : 1.0;
        out += s * M.block(a * rest_dim, a * rest_dim, rest_dim, rest_dim);
    }
    return out;
}

} // namespace superqybe

#endif
