#ifndef SUPERQYBE_VERIFY_HPP
#define SUPERQYBE_VERIFY_HPP

#include <array>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/SVD>

#include "superqybe/fermion.hpp"
#include "superqybe/intertwine.hpp"
#include "superqybe/qdeform.hpp"
#include "superqybe/report.hpp"
#include "superqybe/repr.hpp"
#include "superqybe/rmatrix.hpp"

namespace superqybe {

enum class WindowSelection { TypeIOnly, TypeIIOnly, Both };

inline WindowSelection window_from_string(const std::string& s) {
    if (s == "type1") return WindowSelection::TypeIOnly;
    if (s == "type2") return WindowSelection::TypeIIOnly;
    if (s == "both") return WindowSelection::Both;
    throw DomainError("unknown window '" + s + "' (expected type1, type2 or both)");
}

struct SweepConfig {
    std::uint64_t seed = 1;
    int draws = 100;
    double tolerance = 1e-10;
    double q_min = 1.05;
    double q_max = 3.0;
    WindowSelection window = WindowSelection::Both;
};

inline double draw_alpha(Rng& rng, UnitarityClass w) {
    return w == UnitarityClass::TypeI ? rng.uniform(0.2, 3.0) : rng.uniform(-4.0, -1.2);
}

/// Integer weight offsets of the four kets under (E^1_1, E^2_2, E^3_3 - alpha).
inline bool position_conserves_weight(int r, int c) {
    static constexpr std::array<int, 4> w1 = {0, 0, -1, -1};
    static constexpr std::array<int, 4> w2 = {0, -1, 0, -1};
    static constexpr std::array<int, 4> w3 = {0, 1, 1, 2};
    const int i = r / 4, j = r % 4, k = c / 4, l = c % 4;
    return w1[i] + w1[j] == w1[k] + w1[l] && w2[i] + w2[j] == w2[k] + w2[l] &&
           w3[i] + w3[j] == w3[k] + w3[l];
}

/// Largest entry sitting at a weight-violating position (structural zeros).
inline double weight_violation_residual(const Matrix& R) {
    double worst = 0.0;
    for (int c = 0; c < 16; ++c)
        for (int r = 0; r < 16; ++r)
            if (!position_conserves_weight(r, c))
                worst = std::max(worst, std::abs(R(r, c)));
    return worst;
}

inline int rank_of(const Matrix& m, double tol = 1e-10) {
    Eigen::JacobiSVD<Matrix> svd(m);
    int n = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > tol) ++n;
    return n;
}

/// Fixed-parameter check set at one (q, alpha, beta, gamma) draw. Residuals
/// and tolerances mirror the acceptance thresholds.
inline void run_fixed_checks(VerificationReport& rep, double q, double a, double b, double g,
                             double tol) {
    const QParams params(q);
    const ReprLabel la(a), lb(b), lg(g);
    const SpectralPair ab(la, lb, params);
    std::vector<std::pair<std::string, double>> pqab = {{"q", q}, {"alpha", a}, {"beta", b}};
    std::vector<std::pair<std::string, double>> pqabg = {
        {"q", q}, {"alpha", a}, {"beta", b}, {"gamma", g}};
    std::vector<std::pair<std::string, double>> pqa = {{"q", q}, {"alpha", a}};

    rep.add("qybe_closed_form", pqabg, check_qybe(closed_form_builder(params), a, b, g), tol);
    rep.add("qybe_projector_sum", pqabg, check_qybe(projector_builder(params), a, b, g), tol);

    const Matrix Rc = r_closed_form(ab).op.mat;
    const Matrix Rp = r_projector_sum(ab).op.mat;
    rep.add("construction_equivalence", pqab, max_abs(Rc - Rp), tol);

    auto [reg, uni] = check_regularity_unitarity(ab);
    rep.add("regularity", pqa, reg, 1e-12);
    rep.add("unitarity", pqab, uni, tol);
    rep.add("invariance", pqab, check_invariance(ab), tol);

    // symmetry basis: ordinary Hermitian Gram = identity
    {
        const SymmetryBasis basis = build_symmetry_basis(la, lb, params);
        auto vecs = basis.all();
        Matrix V(16, 16);
        for (int i = 0; i < 16; ++i) V.col(i) = vecs[i];
        rep.add("basis_gram_identity", pqab,
                max_abs(V.adjoint() * V - Matrix::Identity(16, 16)), 1e-12);
    }

    // elementary intertwiner algebra
    {
        const IntertwinerSet Pab = build_intertwiners(la, lb, params);
        const IntertwinerSet Pba = build_intertwiners(lb, la, params);
        const std::array<const GradedOperator*, 3> pab = {&Pab.P1, &Pab.P2, &Pab.P3};
        const std::array<const GradedOperator*, 3> pba = {&Pba.P1, &Pba.P2, &Pba.P3};
        double worst = 0.0;
        Matrix sum = Matrix::Zero(16, 16);
        for (int m = 0; m < 3; ++m) {
            for (int mp = 0; mp < 3; ++mp) {
                const Matrix prod = pba[m]->mat * pab[mp]->mat;
                if (m != mp)
                    worst = std::max(worst, max_abs(prod));
                else {
                    worst = std::max(worst, max_abs(prod * prod - prod));
                    sum += prod;
                }
            }
        }
        worst = std::max(worst, max_abs(sum - Matrix::Identity(16, 16)));
        rep.add("intertwiner_orthogonality", pqab, worst, tol);

        const std::array<int, 3> expected = {4, 8, 4};
        int rank_dev = 0;
        for (int m = 0; m < 3; ++m) rank_dev += std::abs(rank_of(pab[m]->mat) - expected[m]);
        rep.add("intertwiner_ranks", pqab, static_cast<double>(rank_dev), 0.5);
    }

    rep.add("weight_structural_zeros", pqab, weight_violation_residual(Rc),
            std::numeric_limits<double>::min());
    rep.add("entry_realness", pqab, Rc.imag().cwiseAbs().maxCoeff(), 1e-12);
    rep.add("vertex_census_36", pqab,
            std::abs(vertex_census(r_closed_form(ab)) - 36.0), 0.5);

    // Hamiltonian consistency. The derivative route reproduces Eq. H12
    // directly in the type-I window; in type-II it lands on the
    // particle-dressing gauge of it (the sqrt-term sign convention).
    {
        const Matrix Hc = local_hamiltonian_closed(a, params).mat;
        const Matrix Hd = local_hamiltonian_from_r(a, params).mat;
        const Matrix Href =
            classify(a) == UnitarityClass::TypeI ? Hc : gauge_particle_dressing(Hc, 2);
        rep.add("h12_derivative_vs_closed", pqa, max_abs(Hd - Href), 1e-8);
        rep.add("h12_hermiticity", pqa, max_abs(Hc - Hc.adjoint()), 1e-8);
        rep.add("h12_fermionic_match", pqa, fermionize_residual(Hc, a, params), tol);

        Matrix gauged = Hc;
        if (classify(a) == UnitarityClass::TypeI) gauged = gauge_particle_dressing(gauged, 2);
        gauged = gauge_site_phase(gauged, 2);
        const FermionAlgebra alg2(2);
        const Matrix model =
            model_local_hamiltonian(fermionic_parameters(ReprLabel(a), params), alg2);
        rep.add("gauge_chain_to_new_model", pqa, max_abs(gauged - model), tol);
    }
}

/// Randomized sweeps over one unitarity window; each sweep contributes a
/// single row with the max residual over the draws.
inline void run_window_sweeps(VerificationReport& rep, const SweepConfig& cfg,
                              UnitarityClass window, Rng& rng) {
    const double wtag = window == UnitarityClass::TypeI ? 1.0 : 2.0;
    std::vector<std::pair<std::string, double>> ps = {
        {"window", wtag}, {"draws", static_cast<double>(cfg.draws)},
        {"seed", static_cast<double>(cfg.seed)}};
    double qybe_c = 0.0, qybe_p = 0.0, equiv = 0.0, reg = 0.0, uni = 0.0, inv = 0.0;
    for (int d = 0; d < cfg.draws; ++d) {
        const double q = rng.uniform(cfg.q_min, cfg.q_max);
        const double a = draw_alpha(rng, window);
        const double b = draw_alpha(rng, window);
        const double g = draw_alpha(rng, window);
        const QParams params(q);
        qybe_c = std::max(qybe_c, check_qybe(closed_form_builder(params), a, b, g));
        qybe_p = std::max(qybe_p, check_qybe(projector_builder(params), a, b, g));
        const SpectralPair ab{ReprLabel(a), ReprLabel(b), params};
        const Matrix Rc = r_closed_form(ab).op.mat;
        const Matrix Rp = r_projector_sum(ab).op.mat;
        equiv = std::max(equiv, max_abs(Rc - Rp));
        auto [r0, u0] = check_regularity_unitarity(ab);
        reg = std::max(reg, r0);
        uni = std::max(uni, u0);
        inv = std::max(inv, check_invariance(ab));
    }
    rep.add("sweep_qybe_closed_form", ps, qybe_c, cfg.tolerance);
    rep.add("sweep_qybe_projector_sum", ps, qybe_p, cfg.tolerance);
    rep.add("sweep_construction_equivalence", ps, equiv, cfg.tolerance);
    rep.add("sweep_regularity", ps, reg, 1e-12);
    rep.add("sweep_unitarity", ps, uni, cfg.tolerance);
    rep.add("sweep_invariance", ps, inv, cfg.tolerance);
}

inline void run_random_sweeps(VerificationReport& rep, const SweepConfig& cfg) {
    Rng rng(cfg.seed);
    if (cfg.window != WindowSelection::TypeIIOnly)
        run_window_sweeps(rep, cfg, UnitarityClass::TypeI, rng);
    if (cfg.window != WindowSelection::TypeIOnly)
        run_window_sweeps(rep, cfg, UnitarityClass::TypeII, rng);
}

/// Limit checks anchoring the rational and Bariev reductions.
inline void run_limit_checks(VerificationReport& rep, double a, double b, int L) {
    const double eps = 1e-6;
    const QParams near1(1.0 + eps);
    std::vector<std::pair<std::string, double>> pab = {{"alpha", a}, {"beta", b}};
    std::vector<std::pair<std::string, double>> pa = {{"alpha", a}, {"sites", double(L)}};

    const Matrix Rq = r_closed_form(SpectralPair(ReprLabel(a), ReprLabel(b), near1)).op.mat;
    const Matrix Rr = r_rational(a, b).op.mat;
    rep.add("rational_r_vs_q_to_1", pab, max_abs(Rq - Rr), 1e-4);
    rep.add("rational_vertex_census_36", pab, std::abs(vertex_census(r_rational(a, b)) - 36.0),
            0.5);

    const Matrix Hq = model_global_hamiltonian(fermionic_parameters(ReprLabel(a), near1), L);
    const Matrix H1 = rational_limit_hamiltonian(a, L);
    rep.add("limit1_hamiltonian_vs_q_to_1", pa, max_abs(Hq - H1), 1e-4);

    const double eta = std::log(1.2);
    rep.add("bariev_deviation_alpha_50",
            {{"eta", eta}, {"sites", double(L)}, {"alpha", 50.0}},
            bariev_limit_check(eta, L, 50.0), 1e-3);
    rep.add("bariev_pair_coupling_small", {{"q", 1.2}, {"alpha", 50.0}},
            std::abs(1.0 / q_number(50.0, QParams(1.2))), 1e-4);
}

} // namespace superqybe

#endif
