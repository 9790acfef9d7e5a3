#include <catch2/catch_amalgamated.hpp>

#include "superqybe/repr.hpp"

using namespace superqybe;
using Catch::Approx;

namespace {
const QParams Q13(1.3);
const ReprLabel A07(0.7);
const ReprLabel B19(1.9);
} // namespace

TEST_CASE("generator labels", "[repr]") {
    CHECK(GeneratorLabel(2, 3).parity() == 1);
    CHECK(GeneratorLabel(3, 2).parity() == 1);
    CHECK(GeneratorLabel(3, 3).parity() == 0);
    CHECK(GeneratorLabel(1, 2).parity() == 0);
    CHECK_THROWS_AS(GeneratorLabel(1, 3), UnsupportedGeneratorError);
    CHECK_THROWS_AS(GeneratorLabel(3, 1), UnsupportedGeneratorError);
    CHECK(all_generators().size() == 7);
}

TEST_CASE("irrep matrix entries", "[repr]") {
    const Irrep rep = build_irrep(A07, Q13);
    const double a = A07.alpha;

    // E^3_3 diagonal (alpha, alpha+1, alpha+1, alpha+2)
    const Matrix& e33 = rep.matrix(GeneratorLabel(3, 3));
    CHECK(e33(0, 0).real() == Approx(a));
    CHECK(e33(1, 1).real() == Approx(a + 1));
    CHECK(e33(2, 2).real() == Approx(a + 1));
    CHECK(e33(3, 3).real() == Approx(a + 2));

    // E^2_3 |2> = sqrt([alpha]_q) |1>
    const Matrix& e23 = rep.matrix(GeneratorLabel(2, 3));
    CHECK(e23(0, 1).real() == Approx(std::sqrt(q_number(a, Q13))));
    CHECK(e23(2, 3).real() == Approx(std::sqrt(q_number(a + 1, Q13))));

    // E^1_2 = |2><3| and nothing else
    const Matrix& e12 = rep.matrix(GeneratorLabel(1, 2));
    CHECK(e12(1, 2).real() == 1.0);
    CHECK(max_abs(e12 - eunit(2, 3)) == 0.0);
}

TEST_CASE("irrep unitarity in both windows", "[repr]") {
    // type I: (E^i_j)^dag = E^j_i
    {
        const Irrep rep = build_irrep(A07, Q13);
        CHECK(max_abs(rep.matrix(GeneratorLabel(2, 3)).adjoint() -
                      rep.matrix(GeneratorLabel(3, 2))) < 1e-12);
        CHECK(max_abs(rep.matrix(GeneratorLabel(1, 2)).adjoint() -
                      rep.matrix(GeneratorLabel(2, 1))) < 1e-12);
    }
    // type II: (E^i_j)^dag = (-1)^{[i]+[j]} E^j_i
    {
        const Irrep rep = build_irrep(ReprLabel(-2.1), QParams(1.2));
        CHECK(max_abs(rep.matrix(GeneratorLabel(2, 3)).adjoint() +
                      rep.matrix(GeneratorLabel(3, 2))) < 1e-12);
        CHECK(max_abs(rep.matrix(GeneratorLabel(1, 2)).adjoint() -
                      rep.matrix(GeneratorLabel(2, 1))) < 1e-12);
    }
}

TEST_CASE("even subalgebra commutator", "[repr]") {
    const Irrep rep = build_irrep(A07, Q13);
    const Matrix c = rep.matrix(GeneratorLabel(1, 2)) * rep.matrix(GeneratorLabel(2, 1)) -
                     rep.matrix(GeneratorLabel(2, 1)) * rep.matrix(GeneratorLabel(1, 2));
    // [E^1_2, E^2_1] acts as the sl(2) Cartan on the |2>,|3> doublet
    Matrix expect = Matrix::Zero(4, 4);
    expect(1, 1) = 1.0;
    expect(2, 2) = -1.0;
    CHECK(max_abs(c - expect) == 0.0);
}

TEST_CASE("coproduct of the Cartans is additive", "[repr]") {
    const GradedOperator d33 = coproduct_action(GeneratorLabel(3, 3), A07, B19, Q13);
    Vector v = Vector::Zero(16);
    v(0) = 1.0; // |1> (x) |1>
    const Vector out = d33.mat * v;
    CHECK(out(0).real() == Approx(A07.alpha + B19.alpha));
    // weight additivity on the whole diagonal
    const double wa[4] = {A07.alpha, A07.alpha + 1, A07.alpha + 1, A07.alpha + 2};
    const double wb[4] = {B19.alpha, B19.alpha + 1, B19.alpha + 1, B19.alpha + 2};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(d33.mat(i * 4 + j, i * 4 + j).real() == Approx(wa[i] + wb[j]));
}

TEST_CASE("coproduct annihilates the highest-weight product ket", "[repr]") {
    const GradedOperator d12 = coproduct_action(GeneratorLabel(1, 2), A07, B19, Q13);
    Vector v = Vector::Zero(16);
    v(0) = 1.0;
    CHECK(max_abs(d12.mat * v) == 0.0);
}

TEST_CASE("coproduct matches a hand-composed oracle", "[repr]") {
    // independent composition at q = 1.3, alpha = 0.7, beta = 1.9:
    // Delta(E^2_3) = E^2_3 (x) q^{-(E^2_2+E^3_3)/2} + q^{(E^2_2+E^3_3)/2} (x) E^2_3,
    // with the Koszul sign (-1)^{[E^2_3] [column state]} on the second term.
    const double q = 1.3, a = 0.7, b = 1.9;
    auto qn = [&](double x) { return (std::pow(q, x) - std::pow(q, -x)) / (q - 1 / q); };
    auto e23_for = [&](double al) {
        Matrix m = Matrix::Zero(4, 4);
        m(0, 1) = std::sqrt(qn(al));
        m(2, 3) = std::sqrt(qn(al + 1));
        return m;
    };
    auto dress = [&](double al, double t) {
        // E^2_2 + E^3_3 = diag(alpha, alpha, alpha+1, alpha+1)
        Matrix m = Matrix::Zero(4, 4);
        m(0, 0) = std::pow(q, t * al);
        m(1, 1) = std::pow(q, t * al);
        m(2, 2) = std::pow(q, t * (al + 1));
        m(3, 3) = std::pow(q, t * (al + 1));
        return m;
    };
    const int par[4] = {0, 1, 1, 0};
    Matrix expect = Matrix::Zero(16, 16);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 4; ++l) {
                    Complex v = e23_for(a)(i, k) * dress(b, -0.5)(j, l); // first term, even B
                    const double sign = par[k] ? -1.0 : 1.0;             // odd E^2_3 on slot 2
                    v += dress(a, 0.5)(i, k) * e23_for(b)(j, l) * sign;
                    expect(i * 4 + j, k * 4 + l) = v;
                }
    const GradedOperator got = coproduct_action(GeneratorLabel(2, 3), A07, B19, Q13);
    CHECK(max_abs(got.mat - expect) < 1e-13);

    // Delta(E^2_3)|2 (x) 1> = q^{-beta/2} sqrt([alpha]_q) |1 (x) 1>
    Vector v21 = Vector::Zero(16);
    v21(1 * 4 + 0) = 1.0;
    const Vector out = got.mat * v21;
    CHECK(out(0).real() == Approx(std::pow(q, -b / 2) * std::sqrt(qn(a))));
}

TEST_CASE("opposite coproduct", "[repr]") {
    const Matrix P = graded_permutation(GradedSpace::fundamental(),
                                        GradedSpace::fundamental()).mat;
    // Cartans: opposite = plain with swapped legs
    for (int i = 1; i <= 3; ++i) {
        const GeneratorLabel g(i, i);
        CHECK(max_abs(opposite_coproduct_action(g, A07, B19, Q13).mat -
                      coproduct_action(g, B19, A07, Q13).mat) == 0.0);
    }
    // twist-conjugation identity: Deltabar^{ba}(g) = P Delta^{ab}(g) P
    for (const auto& g : all_generators())
        CHECK(max_abs(opposite_coproduct_action(g, A07, B19, Q13).mat -
                      P * coproduct_action(g, A07, B19, Q13).mat * P) < 1e-13);
    // at alpha = beta the opposite coproduct is Delta conjugated by P
    for (const auto& g : all_generators())
        CHECK(max_abs(opposite_coproduct_action(g, A07, A07, Q13).mat -
                      P * coproduct_action(g, A07, A07, Q13).mat * P) < 1e-13);
}
