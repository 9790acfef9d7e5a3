#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "superqybe/qdeform.hpp"

using namespace superqybe;
using Catch::Approx;

TEST_CASE("QParams validates its domain", "[qdeform]") {
    CHECK_NOTHROW(QParams(1.3));
    CHECK_NOTHROW(QParams(1.0 + 1e-6));
    CHECK_THROWS_AS(QParams(0.0), DomainError);
    CHECK_THROWS_AS(QParams(-2.0), DomainError);
    CHECK_THROWS_AS(QParams(1.0), DomainError);
}

TEST_CASE("q_number basic values", "[qdeform]") {
    const QParams q2(2.0);
    CHECK(q_number(0.0, q2) == 0.0);
    CHECK(q_number(1.0, q2) == Approx(1.0).margin(1e-15));
    // (4 - 1/4)/(2 - 1/2) = 2.5
    CHECK(q_number(2.0, q2) == Approx(2.5).margin(1e-14));
}

TEST_CASE("q_number is odd and strictly increasing", "[qdeform]") {
    const QParams params(1.7);
    double prev = q_number(-10.0, params);
    for (double x = -9.75; x <= 10.0; x += 0.25) {
        const double v = q_number(x, params);
        CHECK(q_number(-x, params) == Approx(-v).margin(1e-12 * std::max(1.0, std::abs(v))));
        CHECK(v > prev);
        prev = v;
    }
}

TEST_CASE("q_number approaches x as q -> 1", "[qdeform]") {
    const QParams near1(1.0 + 1e-6);
    for (double x = -10.0; x <= 10.0; x += 0.5)
        CHECK(std::abs(q_number(x, near1) - x) < 1e-4 * std::max(1.0, std::abs(x)));
}

TEST_CASE("q_number satisfies its defining identity to machine precision", "[qdeform]") {
    for (double q : {1.05, 1.3, 2.0, 2.9}) {
        const QParams params(q);
        for (double x : {-7.3, -1.0, 0.25, 0.7, 3.9, 9.5}) {
            const double lhs = q_number(x, params) * (q - 1.0 / q);
            const double rhs = std::pow(q, x) - std::pow(q, -x);
            CHECK(lhs == Approx(rhs).margin(1e-12 * std::max(1.0, std::abs(rhs))));
        }
    }
}

TEST_CASE("classify selects the unitarity window", "[qdeform]") {
    CHECK(classify(0.7) == UnitarityClass::TypeI);
    CHECK(classify(-2.3) == UnitarityClass::TypeII);
    CHECK_THROWS_AS(classify(-0.5), NonUnitaryRangeError);
    CHECK_THROWS_AS(classify(0.0), NonUnitaryRangeError);
    CHECK_THROWS_AS(classify(-1.0), NonUnitaryRangeError);
    CHECK_THROWS_AS(ReprLabel(-0.5), NonUnitaryRangeError);
}

TEST_CASE("signed_sqrt_ratio in both windows", "[qdeform]") {
    const QParams q2(2.0);
    // [2]_2/[1]_2 = 2.5 with sign +1
    CHECK(signed_sqrt_ratio(1.0, 1.0, q2) == Approx(std::sqrt(2.5)).margin(1e-14));
    // [-1]_2/[-2]_2 = 1/2.5 with sign -1
    CHECK(signed_sqrt_ratio(-2.0, 1.0, q2) == Approx(-std::sqrt(0.4)).margin(1e-14));
    // [0.5]_q/[-0.5]_q < 0: outside the unitary windows
    CHECK_THROWS_AS(signed_sqrt_ratio(-0.5, 1.0, q2), DomainError);
}

TEST_CASE("q_number_sqrt picks the principal branch", "[qdeform]") {
    const QParams params(1.2);
    const auto r = q_number_sqrt(-2.1, params); // [-2.1]_q < 0
    CHECK(r.real() == 0.0);
    CHECK(r.imag() > 0.0);
    CHECK((r * r).real() == Approx(q_number(-2.1, params)).margin(1e-13));
}
