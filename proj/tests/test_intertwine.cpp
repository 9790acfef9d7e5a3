#include <catch2/catch_amalgamated.hpp>

#include <Eigen/SVD>

#include "superqybe/intertwine.hpp"
#include "superqybe/report.hpp"
#include "superqybe/rmatrix.hpp"

using namespace superqybe;
using Catch::Approx;

namespace {
const QParams Q13(1.3);
const ReprLabel A07(0.7);
const ReprLabel B19(1.9);

Matrix gram_of(const SymmetryBasis& basis) {
    auto vecs = basis.all();
    Matrix V(16, vecs.size());
    for (std::size_t i = 0; i < vecs.size(); ++i) V.col(i) = vecs[i];
    return V.adjoint() * V;
}
} // namespace

TEST_CASE("extreme basis vectors are product kets", "[intertwine]") {
    const SymmetryBasis basis = build_symmetry_basis(A07, B19, Q13);
    Vector k11 = Vector::Zero(16);
    k11(0) = 1.0;
    CHECK(max_abs(basis.block(FusionLabel(1))[0] - k11) == 0.0);
    Vector k44 = Vector::Zero(16);
    k44(15) = 1.0;
    CHECK(max_abs(basis.block(FusionLabel(3))[3] - k44) == 0.0);
    CHECK(basis.block(FusionLabel(1)).size() == 4);
    CHECK(basis.block(FusionLabel(2)).size() == 8);
    CHECK(basis.block(FusionLabel(3)).size() == 4);
}

TEST_CASE("equal-label Gram oracle", "[intertwine]") {
    // at alpha = beta = 0.7 the first V1 and V2 weight-1 vectors are
    // orthogonal unit vectors
    const SymmetryBasis basis = build_symmetry_basis(A07, A07, Q13);
    const Vector& p12 = basis.block(FusionLabel(1))[1];
    const Vector& p21 = basis.block(FusionLabel(2))[0];
    CHECK(std::abs((p12.adjoint() * p21)(0)) < 1e-14);
    CHECK(p12.norm() == Approx(1.0).margin(1e-13));
    CHECK(p21.norm() == Approx(1.0).margin(1e-13));
}

TEST_CASE("Gram matrix is the identity in both windows", "[intertwine]") {
    CHECK(max_abs(gram_of(build_symmetry_basis(A07, B19, Q13)) - Matrix::Identity(16, 16)) <
          1e-12);
    CHECK(max_abs(gram_of(build_symmetry_basis(ReprLabel(-2.1), ReprLabel(-3.4), QParams(1.2))) -
                  Matrix::Identity(16, 16)) < 1e-12);
}

TEST_CASE("basis vectors are weight vectors of Delta(E^3_3)", "[intertwine]") {
    const SymmetryBasis basis = build_symmetry_basis(A07, B19, Q13);
    const Matrix d33 = coproduct_action(GeneratorLabel(3, 3), A07, B19, Q13).mat;
    const double s = A07.alpha + B19.alpha;
    // E^3_3 eigenvalues per vector, from the fusion weight content
    const std::array<std::array<double, 8>, 3> shifts = {{{0, 1, 1, 2, 0, 0, 0, 0},
                                                          {1, 1, 2, 2, 3, 3, 2, 2},
                                                          {2, 3, 3, 4, 0, 0, 0, 0}}};
    for (int k = 1; k <= 3; ++k) {
        const auto& blk = basis.block(FusionLabel(k));
        for (std::size_t i = 0; i < blk.size(); ++i)
            CHECK(max_abs(d33 * blk[i] - (s + shifts[k - 1][i]) * blk[i]) < 1e-12);
    }
}

TEST_CASE("elementary intertwiners commute with the coproduct action", "[intertwine]") {
    const IntertwinerSet set = build_intertwiners(A07, B19, Q13);
    for (const auto& g : all_generators()) {
        const Matrix dab = coproduct_action(g, A07, B19, Q13).mat;
        const Matrix dba = coproduct_action(g, B19, A07, Q13).mat;
        for (const GradedOperator* P : {&set.P1, &set.P2, &set.P3})
            CHECK(max_abs(P->mat * dab - dba * P->mat) < 1e-10);
    }
}

TEST_CASE("projector case and ranks", "[intertwine]") {
    // alpha = beta: orthogonal projectors with rank 4 + 8 + 4 and sum I
    const IntertwinerSet proj = build_intertwiners(A07, A07, Q13);
    for (const GradedOperator* P : {&proj.P1, &proj.P2, &proj.P3}) {
        CHECK(max_abs(P->mat * P->mat - P->mat) < 1e-12);
        CHECK(max_abs(P->mat - P->mat.adjoint()) < 1e-12);
    }
    CHECK(max_abs(proj.P1.mat + proj.P2.mat + proj.P3.mat - Matrix::Identity(16, 16)) < 1e-12);

    auto rank = [](const Matrix& m) {
        Eigen::JacobiSVD<Matrix> svd(m);
        int n = 0;
        for (int i = 0; i < svd.singularValues().size(); ++i)
            if (svd.singularValues()(i) > 1e-10) ++n;
        return n;
    };
    const IntertwinerSet set = build_intertwiners(A07, B19, Q13);
    CHECK(rank(set.P1.mat) == 4);
    CHECK(rank(set.P2.mat) == 8);
    CHECK(rank(set.P3.mat) == 4);
}

TEST_CASE("orthogonality relation of the intertwiners", "[intertwine]") {
    const IntertwinerSet ab = build_intertwiners(A07, B19, Q13);
    const IntertwinerSet ba = build_intertwiners(B19, A07, Q13);
    const std::array<const GradedOperator*, 3> pab = {&ab.P1, &ab.P2, &ab.P3};
    const std::array<const GradedOperator*, 3> pba = {&ba.P1, &ba.P2, &ba.P3};
    Matrix sum = Matrix::Zero(16, 16);
    for (int m = 0; m < 3; ++m)
        for (int mp = 0; mp < 3; ++mp) {
            const Matrix prod = pba[m]->mat * pab[mp]->mat;
            if (m != mp) {
                CHECK(max_abs(prod) < 1e-10);
            } else {
                CHECK(max_abs(prod * prod - prod) < 1e-10); // a projector
                sum += prod;
            }
        }
    CHECK(max_abs(sum - Matrix::Identity(16, 16)) < 1e-10);
}

TEST_CASE("projector-sum R-matrix", "[intertwine]") {
    // regularity
    CHECK(max_abs(r_from_projectors(A07, A07, Q13).mat - Matrix::Identity(16, 16)) < 1e-12);
    // unitarity
    CHECK(max_abs(r_from_projectors(A07, B19, Q13).mat * r_from_projectors(B19, A07, Q13).mat -
                  Matrix::Identity(16, 16)) < 1e-10);
    // cross-construction equivalence on 20 seeded random draws
    Rng rng(20240901);
    for (int d = 0; d < 20; ++d) {
        const bool type2 = d % 2;
        const double a = type2 ? rng.uniform(-4.0, -1.2) : rng.uniform(0.2, 3.0);
        const double b = type2 ? rng.uniform(-4.0, -1.2) : rng.uniform(0.2, 3.0);
        const QParams params(rng.uniform(1.05, 3.0));
        const Matrix Rp = r_from_projectors(ReprLabel(a), ReprLabel(b), params).mat;
        const Matrix Rc =
            r_closed_form(SpectralPair(ReprLabel(a), ReprLabel(b), params)).op.mat;
        CHECK(max_abs(Rp - Rc) < 1e-10);
    }
}

TEST_CASE("domain guards", "[intertwine]") {
    // mixed unitarity classes rejected by default, allowed with the override
    CHECK_THROWS_AS(build_symmetry_basis(A07, ReprLabel(-2.1), Q13), DomainError);
    IntertwineOptions allow;
    allow.allow_mixed_class = true;
    CHECK_NOTHROW(build_symmetry_basis(ReprLabel(0.5), ReprLabel(-3.0), Q13, allow));
    // near-singular fusion: alpha + beta ~ 0 only reachable across classes
    CHECK_THROWS_AS(build_symmetry_basis(ReprLabel(2.0), ReprLabel(-2.0 + 1e-12), Q13, allow),
                    SingularFusionError);
}
