#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "intsemi/special.hpp"

using namespace intsemi;
using Catch::Approx;

TEST_CASE("pochhammer and binomial basics", "[special]") {
    CHECK(log_pochhammer(0.0, 0) == 0.0);
    CHECK(log_pochhammer(0.0, 3) == -kInf);
    CHECK(std::exp(log_pochhammer(2.0, 3)) == Approx(24.0));  // 2*3*4
    CHECK(binomial(5, 2) == Approx(10.0));
    CHECK(binomial(4, 0) == Approx(1.0));
    CHECK(falling_factorial(4.0, 2) == Approx(12.0));  // 4*3
    CHECK(falling_factorial(9.0, 0) == Approx(1.0));
}

TEST_CASE("log_add_exp handles extreme scales", "[special]") {
    CHECK(log_add_exp(-kInf, 3.0) == 3.0);
    CHECK(log_add_exp(1000.0, 1000.0) == Approx(1000.0 + std::log(2.0)));
    LogSumAcc acc;
    acc.add(std::log(2.0));
    acc.add(std::log(3.0));
    CHECK(std::exp(acc.log_value()) == Approx(5.0));
}

TEST_CASE("finite-difference weights reproduce classical stencils", "[special]") {
    const auto w = fd_weights(1, 1);
    CHECK(w[0] == Approx(-0.5));
    CHECK(w[1] == Approx(0.0).margin(1e-14));
    CHECK(w[2] == Approx(0.5));

    const auto w2 = fd_weights(2, 1);
    CHECK(w2[0] == Approx(1.0));
    CHECK(w2[1] == Approx(-2.0));
    CHECK(w2[2] == Approx(1.0));
}

TEST_CASE("fd_derivative of the exponential", "[special]") {
    auto f = [](double x) { return std::exp(x); };
    for (int k = 1; k <= 4; ++k) {
        const double d = fd_derivative(f, 0.3, k, fd_step(1.0));
        CHECK(d == Approx(std::exp(0.3)).epsilon(1e-8));
    }
}

TEST_CASE("fd_derivative scales with the log-derivative", "[special]") {
    // f = e^{-10 x}: derivative scale 10
    auto f = [](double x) { return std::exp(-10.0 * x); };
    const double d3 = fd_derivative(f, 0.1, 3, fd_step(10.0));
    CHECK(d3 == Approx(-1000.0 * std::exp(-1.0)).epsilon(1e-8));
}

TEST_CASE("pairwise_sum matches sequential sum", "[special]") {
    std::vector<double> xs;
    for (int i = 1; i <= 1001; ++i) xs.push_back(1.0 / i);
    double seq = 0.0;
    for (double x : xs) seq += x;
    CHECK(pairwise_sum(xs) == Approx(seq).epsilon(1e-13));
}
