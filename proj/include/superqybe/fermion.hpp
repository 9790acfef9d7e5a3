#ifndef SUPERQYBE_FERMION_HPP
#define SUPERQYBE_FERMION_HPP

#include <cmath>
#include <vector>

#include <Eigen/Eigenvalues>

#include "superqybe/qdeform.hpp"
#include "superqybe/rmatrix.hpp"
#include "superqybe/superlinalg.hpp"

namespace superqybe {

/// Physical couplings of the electron model: e^eta = q,
/// e^xi = [alpha+1]_q/[alpha]_q, U = 1/[alpha]_q.
struct FermionParams {
    double xi;
    double eta;
    double U;
};

inline FermionParams fermionic_parameters(const ReprLabel& alpha, const QParams& params) {
    const double num = q_number(alpha.alpha + 1.0, params);
    const double den = q_number(alpha.alpha, params);
    const double ratio = num / den; // positive in both unitary windows
    if (!(ratio > 0.0))
        throw DomainError("fermionic_parameters: [alpha+1]_q/[alpha]_q not positive");
    return FermionParams{std::log(ratio), params.log_q(), 1.0 / den};
}

/// q -> 1 couplings: e^{xibar} = (alpha+1)/alpha, eta = 0, Ubar = 1/alpha.
inline FermionParams rational_fermionic_parameters(double alpha) {
    (void)classify(alpha);
    return FermionParams{std::log((alpha + 1.0) / alpha), 0.0, 1.0 / alpha};
}

enum class Spin { Up, Down };

inline Spin other(Spin s) { return s == Spin::Up ? Spin::Down : Spin::Up; }
inline double spin_sign(Spin s) { return s == Spin::Up ? 1.0 : -1.0; }

/// Fixed dictionary between module kets and electron states:
/// |4> = |0>, |3> = |up>, |2> = |down>, |1> = |up,down> = c+_dn c+_up |0>.
/// The parity of each ket equals the fermion-number parity of its state.
struct StateAssignment {
    static constexpr int empty_ket = 4;
    static constexpr int up_ket = 3;
    static constexpr int down_ket = 2;
    static constexpr int double_ket = 1;

    static int fermion_count(int ket) {
        switch (ket) {
            case empty_ket: return 0;
            case up_ket:
            case down_ket: return 1;
            case double_ket: return 2;
        }
        throw Error("StateAssignment: ket index out of range");
    }
};

/// Canonical electron operators on a length-L chain as dense 4^L matrices,
/// Jordan-Wigner ordered site-major, spin-minor (down before up within a
/// site, matching |1> = c+_dn c+_up |0>).
class FermionAlgebra {
  public:
    explicit FermionAlgebra(int L) : L_(L) {
        if (L < 1) throw SizeError("FermionAlgebra: L must be >= 1");
        if (L > 6) throw SizeError("FermionAlgebra: L > 6 exceeds desk scale");
    }

    int length() const { return L_; }
    int dim() const { return int_pow(4, L_); }
    Matrix identity() const { return Matrix::Identity(dim(), dim()); }

    /// Annihilation operator c_{i,sigma} (1-based site).
    Matrix c(int site, Spin s) const {
        check_site(site);
        return string_embed(s == Spin::Up ? local_c_up() : local_c_dn(), site);
    }
    Matrix cdag(int site, Spin s) const { return c(site, s).adjoint(); }
    Matrix n(int site, Spin s) const {
        check_site(site);
        return plain_embed(s == Spin::Up ? local_n_up() : local_n_dn(), site);
    }

    /// On-site operator matrices in the module basis (|1>,|2>,|3>,|4>).
    static Matrix local_c_dn() { return eunit(3, 1) + eunit(4, 2); }
    static Matrix local_c_up() { return -eunit(2, 1) + eunit(4, 3); }
    static Matrix local_n_up() { return eunit(1, 1) + eunit(3, 3); }
    static Matrix local_n_dn() { return eunit(1, 1) + eunit(2, 2); }
    /// (-1)^{n_up + n_dn}: the Jordan-Wigner string factor, equal to the
    /// Z2 grading of the module basis.
    static Matrix local_parity() {
        Matrix F = Matrix::Zero(4, 4);
        F(0, 0) = 1.0; F(1, 1) = -1.0; F(2, 2) = -1.0; F(3, 3) = 1.0;
        return F;
    }

  private:
    void check_site(int site) const {
        if (site < 1 || site > L_)
            throw IndexError("FermionAlgebra: site " + std::to_string(site) + " out of 1.." +
                             std::to_string(L_));
    }
    Matrix string_embed(const Matrix& op, int site) const {
        Matrix out = Matrix::Identity(1, 1);
        for (int j = 1; j <= L_; ++j)
            out = kron(out, j == site ? op : (j < site ? local_parity()
                                                       : Matrix::Identity(4, 4)));
        return out;
    }
    Matrix plain_embed(const Matrix& op, int site) const {
        Matrix out = Matrix::Identity(1, 1);
        for (int j = 1; j <= L_; ++j)
            out = kron(out, j == site ? op : Matrix::Identity(4, 4));
        return out;
    }

    int L_;
};

namespace detail {

/// Eq. H12 assembled term by term (graded tensor products). No window check:
/// outside the unitary windows the sqrt coefficient goes imaginary and the
/// matrix loses hermiticity, which the tests demonstrate at alpha = -0.5.
inline Matrix h12_closed_raw(double alpha, const QParams& params) {
    const Complex iu(0.0, 1.0);
    const double qa = q_number(alpha, params);
    const double qa1 = q_number(alpha + 1.0, params);
    const Complex ratio = Complex(qa1 / qa, 0.0);
    const Complex srt = sign_of(alpha) * std::sqrt(ratio);
    const double sq = std::sqrt(params.q);

    Matrix H = Matrix::Zero(16, 16);
    add_term(H, iu * ratio, 1, 2, 2, 1);
    add_term(H, iu * ratio, 2, 1, 1, 2);
    add_term(H, iu * ratio, 1, 3, 3, 1);
    add_term(H, iu * ratio, 3, 1, 1, 3);
    add_term(H, iu / qa, 4, 1, 1, 4);
    add_term(H, -iu / qa, 1, 4, 4, 1);
    add_term(H, iu, 2, 4, 4, 2);
    add_term(H, iu, 4, 2, 2, 4);
    add_term(H, iu, 3, 4, 4, 3);
    add_term(H, iu, 4, 3, 3, 4);
    const Complex cm = iu * srt / sq;
    add_term(H, cm, 1, 2, 4, 3);
    add_term(H, cm, 2, 1, 3, 4);
    add_term(H, -cm, 4, 2, 1, 3);
    add_term(H, -cm, 2, 4, 3, 1);
    const Complex cp = iu * srt * sq;
    add_term(H, cp, 3, 4, 2, 1);
    add_term(H, cp, 4, 3, 1, 2);
    add_term(H, -cp, 1, 3, 4, 2);
    add_term(H, -cp, 3, 1, 2, 4);
    return H;
}

} // namespace detail

/// Two-site local Hamiltonian, Eq. H12 closed form (16 x 16, graded e(x)e
/// terms). DomainError outside the unitary windows.
inline GradedOperator local_hamiltonian_closed(double alpha, const QParams& params) {
    (void)classify(alpha);
    const GradedSpace VV = GradedSpace::tensor(GradedSpace::fundamental(),
                                               GradedSpace::fundamental());
    return GradedOperator(detail::h12_closed_raw(alpha, params), VV, VV);
}

/// Derivative construction
///   H = -i (q^{alpha+1} - q^{-alpha-1}) / ln(q) * d/dalpha Rcheck(alpha,beta)|_{beta=alpha},
/// central difference in the first argument with one Richardson step.
inline GradedOperator local_hamiltonian_from_r(double alpha, const QParams& params) {
    (void)classify(alpha);
    const double h = 1e-6 * std::max(1.0, std::abs(alpha));
    auto build = [&](double a) {
        return r_closed_form(SpectralPair(ReprLabel(a), ReprLabel(alpha), params, true)).op.mat;
    };
    auto central = [&](double hh) { return ((build(alpha + hh) - build(alpha - hh)) / (2.0 * hh)).eval(); };
    const Matrix D = (4.0 * central(h / 2.0) - central(h)) / 3.0;
    const Complex pref = Complex(0.0, -1.0) *
                         (std::pow(params.q, alpha + 1.0) - std::pow(params.q, -alpha - 1.0)) /
                         params.log_q();
    const GradedSpace VV = GradedSpace::tensor(GradedSpace::fundamental(),
                                               GradedSpace::fundamental());
    return GradedOperator(pref * D, VV, VV);
}

/// Eq. local-H built from canonical fermion operators on a bond (i, i+1) of a
/// length-L chain (wrapping for i = L). The bracket multiplying the hopping
/// factorizes into the exponential dressings of Eq. new-model once sign(alpha)
/// has been flipped by the particle-dressing gauge.
inline Matrix local_hamiltonian_fermionic(double alpha, const QParams& params,
                                          const FermionAlgebra& algebra, int bond = 1) {
    (void)classify(alpha);
    const int L = algebra.length();
    const int i = bond, ip1 = bond % L + 1;
    const double qa = q_number(alpha, params);
    const double ratio = q_number(alpha + 1.0, params) / qa;
    const double s = sign_of(alpha);
    const double root = std::sqrt(ratio);
    const Complex phase(0.0, -1.0); // e^{-i pi/2}
    const Matrix I = algebra.identity();

    Matrix H = Matrix::Zero(algebra.dim(), algebra.dim());
    for (Spin sp : {Spin::Up, Spin::Down}) {
        const double sg = spin_sign(sp);
        const Spin os = other(sp);
        Matrix hop = phase * algebra.cdag(i, sp) * algebra.c(ip1, sp);
        hop += hop.adjoint().eval();
        const Matrix ni = algebra.n(i, os), nj = algebra.n(ip1, os);
        Matrix bracket = I - ni * (1.0 + s * std::pow(params.q, -sg / 2.0) * root) -
                         nj * (1.0 + s * std::pow(params.q, sg / 2.0) * root) +
                         ni * nj *
                             (1.0 + ratio + s * (std::sqrt(params.q) + 1.0 / std::sqrt(params.q)) * root);
        H += -hop * bracket;
    }
    Matrix pair = phase * algebra.cdag(i, Spin::Down) * algebra.cdag(i, Spin::Up) *
                  algebra.c(ip1, Spin::Up) * algebra.c(ip1, Spin::Down);
    H += (1.0 / qa) * (pair + pair.adjoint().eval());
    return H;
}

/// Residual between an e(x)e-form two-site Hamiltonian and the fermionic
/// Eq. local-H rebuilt on L = 2 under the state assignment.
inline double fermionize_residual(const Matrix& h_eij, double alpha, const QParams& params) {
    FermionAlgebra algebra(2);
    return max_abs(h_eij - local_hamiltonian_fermionic(alpha, params, algebra, 1));
}

/// Eq. new-model on bond (i, i+1): hopping dressed by
/// exp(1/2 (xi - sigma eta) n_{i,-sigma} + 1/2 (xi + sigma eta) n_{i+1,-sigma})
/// plus U (i * pair-hop + h.c.).
inline Matrix model_local_hamiltonian(const FermionParams& fp, const FermionAlgebra& algebra,
                                      int bond = 1) {
    const int L = algebra.length();
    const int i = bond, ip1 = bond % L + 1;
    Matrix H = Matrix::Zero(algebra.dim(), algebra.dim());
    for (Spin sp : {Spin::Up, Spin::Down}) {
        const double sg = spin_sign(sp);
        const Spin os = other(sp);
        Matrix hop = algebra.cdag(i, sp) * algebra.c(ip1, sp);
        hop += hop.adjoint().eval();
        // the exponent is diagonal, so the exponential is entrywise
        Matrix expo = 0.5 * (fp.xi - sg * fp.eta) * algebra.n(i, os) +
                      0.5 * (fp.xi + sg * fp.eta) * algebra.n(ip1, os);
        Matrix dress = Matrix::Zero(algebra.dim(), algebra.dim());
        for (int k = 0; k < algebra.dim(); ++k) dress(k, k) = std::exp(expo(k, k).real());
        H += -hop * dress;
    }
    Matrix pair = Complex(0.0, 1.0) * algebra.cdag(i, Spin::Down) * algebra.cdag(i, Spin::Up) *
                  algebra.c(ip1, Spin::Up) * algebra.c(ip1, Spin::Down);
    H += fp.U * (pair + pair.adjoint().eval());
    return H;
}

/// Eq. bariev is Eq. new-model at xi = eta, U = 0.
inline Matrix bariev_local_hamiltonian(double eta, const FermionAlgebra& algebra, int bond = 1) {
    return model_local_hamiltonian(FermionParams{eta, eta, 0.0}, algebra, bond);
}

/// Unitary for c_{i,sigma} -> c_{i,sigma} (1 - 2 n_{i,-sigma}):
/// conjugation by prod_i (1 - 2 n_{i,up} n_{i,dn}). Involution; applied to
/// Eq. local-H it flips sign(alpha).
inline Matrix gauge_particle_dressing(const Matrix& H, int L) {
    Matrix v = Matrix::Identity(4, 4);
    v(0, 0) = -1.0; // the doubly occupied ket |1>
    Matrix U = Matrix::Identity(1, 1);
    for (int j = 0; j < L; ++j) U = kron(U, v);
    return U * H * U;
}

/// Unitary for the site-dependent phase c_{i,sigma} -> e^{i pi i / 2} c_{i,sigma}
/// (period 4 in the site index); maps Eq. local-H to Eq. new-model form.
inline Matrix gauge_site_phase(const Matrix& H, int L) {
    Matrix U = Matrix::Identity(1, 1);
    for (int j = 1; j <= L; ++j) {
        Matrix ph = Matrix::Zero(4, 4);
        const Complex w = std::exp(Complex(0.0, -M_PI * j / 2.0));
        ph(0, 0) = w * w; // two electrons
        ph(1, 1) = w;
        ph(2, 2) = w;
        ph(3, 3) = 1.0;
        U = kron(U, ph);
    }
    return U * H * U.adjoint();
}

/// Global Hamiltonian of the integrable chain: the R-derived local term
/// Eq. H12 summed over bonds with the graded wrap embedding. This is the
/// operator the transfer-matrix family commutes with.
inline Matrix global_hamiltonian(double alpha, const QParams& params, int L,
                                 bool periodic = true) {
    if (L < 2 || L > 6) throw SizeError("global_hamiltonian: L must be in 2..6");
    const GradedOperator H2 = local_hamiltonian_closed(alpha, params);
    const int dim = int_pow(4, L);
    Matrix H = Matrix::Zero(dim, dim);
    const int last = periodic ? L : L - 1;
    for (int i = 1; i <= last; ++i) H += embed_two_site(H2, i, L, periodic);
    return H;
}

/// Eq. new-model-global: the gauge-transformed model summed bond by bond in
/// fermion language (literal c operators, including the wrap bond).
inline Matrix model_global_hamiltonian(const FermionParams& fp, int L, bool periodic = true) {
    if (L < 2 || L > 6) throw SizeError("model_global_hamiltonian: L must be in 2..6");
    FermionAlgebra algebra(L);
    Matrix H = Matrix::Zero(algebra.dim(), algebra.dim());
    const int last = periodic ? L : L - 1;
    for (int i = 1; i <= last; ++i) H += model_local_hamiltonian(fp, algebra, i);
    return H;
}

/// Eq. limit1: the q -> 1 model with e^{xibar} = (alpha+1)/alpha and
/// Ubar = 1/alpha (eta = 0, so the hopping dressing is symmetric in the bond).
inline Matrix rational_limit_hamiltonian(double alpha, int L, bool periodic = true) {
    return model_global_hamiltonian(rational_fermionic_parameters(alpha), L, periodic);
}

/// Deviation of the model from Eq. bariev at large alpha after removing the
/// O(1/[alpha]_q) pair term.
inline double bariev_limit_check(double eta, int L, double alpha = 50.0) {
    const QParams params(std::exp(eta));
    FermionParams fp = fermionic_parameters(ReprLabel(alpha), params);
    fp.U = 0.0; // the pair term is the removed O(1/[alpha]_q) piece
    const Matrix model = model_global_hamiltonian(fp, L);
    const Matrix bariev = model_global_hamiltonian(FermionParams{eta, eta, 0.0}, L);
    return max_abs(model - bariev);
}

/// Transfer matrix t(beta) = str_0 [ RR_{0L}(beta,alpha) ... RR_{01}(beta,alpha) ]
/// with RR = P * Rcheck, homogeneous site parameter alpha, auxiliary
/// parameter beta.
inline Matrix transfer_matrix(double beta_aux, double alpha_site, const QParams& params, int L) {
    if (L < 1 || L > 4) throw SizeError("transfer_matrix: L must be in 1..4");
    const GradedSpace F = GradedSpace::fundamental();
    const Matrix Rcheck =
        r_closed_form(SpectralPair(ReprLabel(beta_aux), ReprLabel(alpha_site), params)).op.mat;
    const Matrix RR = graded_permutation(F, F).mat * Rcheck; // on V_beta (x) V_alpha
    const int chain_dim = int_pow(4, L);

    auto embed_0j = [&](int j) {
        Matrix base = kron(RR, Matrix::Identity(int_pow(4, L - 1), int_pow(4, L - 1)));
        if (j == 1) return base;
        // move chain slot j next to the auxiliary slot and back
        Matrix S = Matrix::Identity(chain_dim, chain_dim);
        for (int k = j - 1; k >= 1; --k) S = chain_swap(F, k, L) * S;
        Matrix Sinv = Matrix::Identity(chain_dim, chain_dim);
        for (int k = 1; k <= j - 1; ++k) Sinv = chain_swap(F, k, L) * Sinv;
        const Matrix I4 = Matrix::Identity(4, 4);
        return (kron(I4, Sinv) * base * kron(I4, S)).eval();
    };

    Matrix mono = Matrix::Identity(4 * chain_dim, 4 * chain_dim);
    for (int j = L; j >= 1; --j) mono = mono * embed_0j(j);
    return partial_supertrace_aux(mono, F, chain_dim);
}

/// Sorted real eigenvalues of a hermitian matrix.
inline std::vector<double> real_spectrum(const Matrix& H) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(H);
    if (solver.info() != Eigen::Success)
        throw Error("real_spectrum: eigensolver failed");
    std::vector<double> out(solver.eigenvalues().data(),
                            solver.eigenvalues().data() + solver.eigenvalues().size());
    return out;
}

} // namespace superqybe

#endif
