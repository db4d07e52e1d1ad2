#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "intsemi/linalg.hpp"

using namespace intsemi;
using Catch::Approx;

namespace {
CMatrix nilpotent_shift() {  // A = N - I
    CMatrix a(2);
    a(0, 0) = -1.0;
    a(1, 1) = -1.0;
    a(0, 1) = 1.0;
    return a;
}
}  // namespace

TEST_CASE("solve and inverse round trip", "[linalg]") {
    CMatrix a(3);
    a(0, 0) = 2.0;
    a(0, 1) = Complex{0.0, 1.0};
    a(1, 1) = 3.0;
    a(1, 2) = -1.0;
    a(2, 0) = 0.5;
    a(2, 2) = 1.0;
    const CVector b{1.0, 2.0, Complex{0.0, -1.0}};
    const CVector x = solve(a, b);
    const CVector bx = a.apply(x);
    for (int i = 0; i < 3; ++i) CHECK(std::abs(bx[i] - b[i]) < 1e-12);

    const CMatrix inv = inverse(a);
    const CMatrix eye = a * inv;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(std::abs(eye(i, j) - (i == j ? 1.0 : 0.0)) < 1e-12);
}

TEST_CASE("expm against the nilpotent closed form", "[linalg]") {
    // e^{z(N-I)} = e^{-z} (I + z N)
    const CMatrix a = nilpotent_shift();
    for (Complex z : {Complex{1.0, 0.0}, Complex{0.3, 0.7}, Complex{5.0, -2.0}}) {
        const CMatrix e = expm(a * z);
        const Complex ez = std::exp(-z);
        CHECK(std::abs(e(0, 0) - ez) < 1e-13 * std::abs(ez) + 1e-16);
        CHECK(std::abs(e(1, 1) - ez) < 1e-13 * std::abs(ez) + 1e-16);
        CHECK(std::abs(e(0, 1) - z * ez) < 1e-13 * std::abs(z * ez) + 1e-16);
        CHECK(std::abs(e(1, 0)) < 1e-15);
    }
}

TEST_CASE("expm of a diagonal matrix", "[linalg]") {
    CMatrix d(2);
    d(0, 0) = -1.0;
    d(1, 1) = -4.0;
    const CMatrix e = expm(d * Complex{2.0, 0.0});
    CHECK(std::abs(e(0, 0) - std::exp(-2.0)) < 1e-14);
    CHECK(std::abs(e(1, 1) - std::exp(-8.0)) < 1e-14);
}

TEST_CASE("matrix_power by binary exponentiation", "[linalg]") {
    const CMatrix a = nilpotent_shift();
    const CMatrix p = matrix_power(a, 5);
    // (N-I)^5 = -(I - 5N) by the binomial theorem on commuting I, N
    CHECK(std::abs(p(0, 0) + 1.0) < 1e-14);
    CHECK(std::abs(p(0, 1) - 5.0) < 1e-14);
    CHECK_THROWS_AS(matrix_power(a * Complex{1e200, 0.0}, 8), numeric_error);
}

TEST_CASE("induced norms", "[linalg]") {
    CMatrix m(2);
    m(0, 0) = 3.0;
    m(0, 1) = -4.0;
    m(1, 0) = Complex{0.0, 1.0};
    CHECK(m.norm_inf() == Approx(7.0));
    CHECK(m.norm_one() == Approx(5.0));
}

TEST_CASE("2x2 eigenvalues", "[linalg]") {
    const auto ev = eigenvalues_2x2(nilpotent_shift());
    CHECK(std::abs(ev[0] + 1.0) < 1e-14);
    CHECK(std::abs(ev[1] + 1.0) < 1e-14);
}
