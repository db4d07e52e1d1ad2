#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "intsemi/families.hpp"
#include "intsemi/gallery.hpp"
#include "intsemi/transforms.hpp"

using namespace intsemi;
using Catch::Approx;

namespace {
// test-local oracle: S_sigma(z) for the scalar generator by power series
Complex sk_series(double a, Complex z, double sigma) {
    Complex acc{};
    for (int j = 0; j < 200; ++j) {
        const Complex term =
            std::pow(Complex{a, 0.0}, j) * std::exp((j + sigma) * std::log(z)) /
            gamma_fn(sigma + j + 1.0);
        acc += term;
        if (std::abs(term) < 1e-18 && j > 4) break;
    }
    return acc;
}

CMatrix nilpotent_shift() {
    CMatrix a(2);
    a(0, 0) = -1.0;
    a(1, 1) = -1.0;
    a(0, 1) = 1.0;
    return a;
}
}  // namespace

TEST_CASE("contour inversion of the scalar family", "[transforms][contour]") {
    const ScalarFamily fam(-1.0);
    CHECK(std::abs(contour_invert(fam, {1.0, 0.0}, 0.0) - std::exp(-1.0)) < 1e-8);
    CHECK(std::abs(contour_invert(fam, {1.0, 0.0}, 1.0) - (1.0 - std::exp(-1.0))) < 1e-8);
    // fractional and complex-time orders against the series oracle
    for (const auto& [z, sigma] :
         std::vector<std::pair<Complex, double>>{{{1.0, 0.0}, 1.5}, {{0.5, 0.3}, 2.0}, {{1.0, 0.0}, 0.5}}) {
        const Complex ref = sk_series(-1.0, z, sigma);
        CHECK(std::abs(contour_invert(fam, z, sigma) - ref) < 1e-10 * std::abs(ref) + 1e-14);
    }
}

TEST_CASE("contour inversion matches the beta closed form", "[transforms][contour]") {
    GridSpec gs;
    gs.x_min = -8.0;
    gs.x_max = 8.0;
    gs.n_points = 257;
    const BetaFamily fam(2.0, gs);
    const Complex z{0.5, 0.5};
    const auto got = contour_invert(fam, z, 0.0);
    const auto ref = fam.semigroup_op(z);
    CHECK(fam.op_norm(got - ref) / fam.op_norm(ref) < 1e-6);
}

TEST_CASE("contour shape independence", "[transforms][contour]") {
    const ScalarFamily fam(-1.0);
    const Complex z{0.8, 0.4};
    ContourSpec s1 = auto_contour(fam, z);
    ContourSpec s2 = s1;
    s2.omega_prime += 0.5;
    s2.phi *= 0.6;
    s2.tol = 1e-14;
    const Complex a = contour_invert(fam, z, 1.5, s1);
    const Complex b = contour_invert(fam, z, 1.5, s2);
    CHECK(std::abs(a - b) < 1e-9);
}

TEST_CASE("contour admissibility is enforced", "[transforms][contour]") {
    const ScalarFamily fam(-1.0);
    ContourSpec spec;
    spec.phi = 0.45;
    CHECK_THROWS_AS(contour_invert(fam, Complex{0.05, 1.0}, 0.0, spec), std::domain_error);
    // vertex left of the growth bound
    ContourSpec bad;
    bad.omega_prime = -2.0;
    CHECK_THROWS_AS(contour_invert(fam, Complex{1.0, 0.0}, 0.0, bad), std::domain_error);
}

TEST_CASE("contour reports resolvent failures on nodes", "[transforms][contour]") {
    GridSpec gs;
    gs.x_min = -2.0;
    gs.x_max = 2.0;
    gs.n_points = 65;
    const BetaFamily fam(5.0, gs);  // empty resolvent set
    CHECK_THROWS_AS(contour_invert(fam, Complex{1.0, 0.0}, 1.0), std::domain_error);
}

TEST_CASE("forward transform of closed-form traces", "[transforms][laplace]") {
    // exponential trace: int e^{-lt} e^{-t} = 1/(l+1)
    auto exp_trace = trace_from_callable<double>([](double t) { return std::exp(-t); },
                                                 graded_mesh(40.0, 4001, 2.0), 0.0, -1.0);
    const Complex got = laplace_forward(exp_trace, Complex{1.0, 0.0}, 0.0);
    CHECK(std::abs(got - 0.5) < 1e-7);

    // power-law trace t^2/Gamma(3), kappa = 2: l^2 * l^{-3} = 1/l
    auto pow_trace = trace_from_callable<double>(
        [](double t) { return t * t / gamma_fn(3.0); }, graded_mesh(60.0, 4001, 2.0), 2.0, 0.0);
    const Complex got2 = laplace_forward(pow_trace, Complex{2.0, 0.0}, 2.0);
    CHECK(std::abs(got2 - 0.5) < 2e-4);  // tail model is exact only for exponentials

    // callable form is sharper for the power law
    const Complex got3 =
        laplace_forward([](double t) { return t * t / gamma_fn(3.0); }, Complex{2.0, 0.0}, 2.0, 0.0);
    CHECK(std::abs(got3 - 0.5) < 2e-5);
}

TEST_CASE("forward transform reproduces the beta resolvent", "[transforms][laplace]") {
    GridSpec gs;
    gs.x_min = -8.0;
    gs.x_max = 8.0;
    gs.n_points = 129;
    const BetaFamily fam(2.0, gs);
    const Complex lam{3.0, 0.0};
    auto s1 = [&](double t) { return beta_s1_op(fam, Complex{t, 0.0}); };
    const auto got = laplace_forward(s1, lam, 1.0, 0.0);
    const auto ref = fam.resolvent_op(lam);
    CHECK(fam.op_norm(got - ref) / fam.op_norm(ref) < 1e-6);
}

TEST_CASE("laplace argument checks", "[transforms][laplace]") {
    auto tr = trace_from_callable<double>([](double t) { return std::exp(-t); },
                                          graded_mesh(10.0, 501, 2.0), 0.0, -1.0);
    CHECK_THROWS_AS(laplace_forward(tr, Complex{-2.0, 0.0}, 0.0), std::domain_error);
    TimeTrace<double> sparse;
    sparse.order = 0.0;
    sparse.omega = -1.0;
    sparse.times = {2.0, 3.0, 4.0};
    sparse.values = {0.1, 0.05, 0.01};
    CHECK_THROWS_AS(laplace_forward(sparse, Complex{30.0, 0.0}, 0.0), std::invalid_argument);
}

TEST_CASE("post-widder approximants", "[transforms][postwidder]") {
    const ScalarFamily fam(-1.0);
    // kappa = 0 target e^{-1}
    const double ref0 = std::exp(-1.0);
    CHECK(std::abs(post_widder(fam, 1.0, 0.0, 50) - ref0) / ref0 < 0.01);
    // kappa = 1 target 1 - e^{-1}
    const double ref1 = 1.0 - std::exp(-1.0);
    CHECK(std::abs(post_widder(fam, 1.0, 1.0, 50) - ref1) / ref1 < 0.01);
    // monotone error decay across the sweep
    double prev = kInf;
    for (int n : {10, 20, 40, 80}) {
        const double err = std::abs(post_widder(fam, 1.0, 0.0, n) - ref0);
        CHECK(err < prev);
        prev = err;
    }
    CHECK_THROWS_AS(post_widder(fam, -1.0, 0.0, 10), std::domain_error);
}

TEST_CASE("derivative ladder S_{sigma-k} = S_sigma^{(k)}", "[transforms][ladder]") {
    const ScalarFamily fam(-1.0);
    const ContourSpec spec = auto_contour(fam, Complex{1.0, 0.0});

    const auto l1 = derivative_ladder(fam, Complex{1.0, 0.0}, 1.0, 1, spec);
    CHECK(std::abs(l1.direct - std::exp(-1.0)) < 1e-9);
    CHECK(l1.discrepancy < 1e-5);

    const auto l2 = derivative_ladder(fam, Complex{1.0, 0.0}, 2.0, 2, spec);
    CHECK(std::abs(l2.direct - std::exp(-1.0)) < 1e-9);
    CHECK(l2.discrepancy < 1e-4);

    const auto l0 = derivative_ladder(fam, Complex{1.0, 0.0}, 1.0, 0, spec);
    CHECK(l0.discrepancy == 0.0);
}

TEST_CASE("integrated-semigroup identity from the contour build", "[transforms][property]") {
    // S_1(t) x - t x = int_0^t S_1(s) A x ds on the matrix family
    const MatrixFamily fam(nilpotent_shift());
    const CVector x{1.0, 0.3};
    const double t = 1.2;
    const CVector ax = fam.generator().apply(x);

    const auto s1 = [&](double s) { return contour_invert(fam, Complex{s, 0.0}, 1.0); };
    const CVector lhs_op = s1(t).apply(x);
    CVector lhs(2);
    for (int i = 0; i < 2; ++i) lhs[i] = lhs_op[i] - t * x[i];

    auto integrand = [&](double s) { return s1(s).apply(ax); };
    const CVector rhs = integrate_panels(integrand, geometric_edges(0.0, t, 16), 16);
    for (int i = 0; i < 2; ++i) CHECK(std::abs(lhs[i] - rhs[i]) < 1e-6);
}
