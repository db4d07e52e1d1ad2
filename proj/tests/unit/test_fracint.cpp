#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "intsemi/estimates.hpp"
#include "intsemi/fracint.hpp"
#include "intsemi/gallery.hpp"
#include "intsemi/transforms.hpp"

using namespace intsemi;
using Catch::Approx;

namespace {
TimeTrace<double> exp_trace(double t_max = 20.0, int n = 3001) {
    return trace_from_callable<double>([](double t) { return std::exp(-t); },
                                       graded_mesh(t_max, n, 2.0), 0.0, -1.0, 0.0,
                                       MeshKind::graded);
}
}  // namespace

TEST_CASE("time integral of order 1 recovers the antiderivative", "[fracint][time]") {
    const auto out = frac_integrate_time(exp_trace(), 1.0);
    CHECK(out.order == Approx(1.0));
    // value at t = 1 is 1 - e^{-1}
    CHECK(out.eval(1.0) == Approx(1.0 - std::exp(-1.0)).epsilon(1e-5));
    // dense quadrature value at an exact output node
    for (std::size_t i = 0; i < out.times.size(); ++i) {
        if (std::abs(out.times[i] - 1.0) > 0.05) continue;
        CHECK(out.values[i] == Approx(1.0 - std::exp(-out.times[i])).epsilon(1e-8));
    }
}

TEST_CASE("fractional integral of a power law is exact", "[fracint][time]") {
    const double kappa = 1.3, delta = 0.6;
    auto tr = trace_from_callable<double>(
        [&](double t) { return std::pow(t, kappa) / gamma_fn(kappa + 1.0); },
        graded_mesh(2.0, 4001, 2.0), kappa, 0.0, kappa, MeshKind::graded);
    const auto out = frac_integrate_time(tr, delta);
    for (double t : {0.25, 0.75, 1.5}) {
        const double expect = std::pow(t, kappa + delta) / gamma_fn(kappa + delta + 1.0);
        CHECK(out.eval(t) == Approx(expect).epsilon(2e-4));
    }
}

TEST_CASE("order-1 time integral agrees with cumulative trapezoid", "[fracint][time]") {
    const auto tr = exp_trace(5.0, 2001);
    const auto out = frac_integrate_time(tr, 1.0);
    // trapezoid on the input mesh, then compare at the output nodes
    std::vector<double> cum(tr.times.size(), 0.0);
    double acc = 0.5 * tr.times[0] * (tr.values[0] + 1.0);  // from 0, S(0) = 1
    cum[0] = acc;
    for (std::size_t i = 1; i < tr.times.size(); ++i) {
        acc += 0.5 * (tr.times[i] - tr.times[i - 1]) * (tr.values[i] + tr.values[i - 1]);
        cum[i] = acc;
    }
    TimeTrace<double> trap;
    trap.order = 1.0;
    trap.omega = -1.0;
    trap.times = tr.times;
    trap.values = cum;
    for (double t : {0.5, 1.0, 3.0}) CHECK(out.eval(t) == Approx(trap.eval(t)).margin(2e-4));
}

TEST_CASE("rejects bad orders and undersampled traces", "[fracint][time]") {
    CHECK_THROWS_AS(frac_integrate_time(exp_trace(), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(frac_integrate_time(exp_trace(), -0.5), std::invalid_argument);
    TimeTrace<double> sparse;
    sparse.order = 0.0;
    sparse.times = {0.5, 1.0, 1.5, 2.0};
    sparse.values = {1.0, 0.5, 0.3, 0.2};
    CHECK_THROWS_AS(frac_integrate_time(sparse, 0.5), std::invalid_argument);
}

TEST_CASE("beta-family operator trace raised by half an order", "[fracint][time]") {
    GridSpec gs;
    gs.x_min = 0.0;
    gs.x_max = 300.0;
    gs.n_points = 801;
    const BetaFamily fam(3.0, gs);
    auto tr = trace_from_callable<BetaOp>([&](double t) { return beta_s1_op(fam, {t, 0.0}); },
                                          graded_mesh(0.15, 400, 2.0), 1.0, 0.0, 0.5,
                                          MeshKind::graded);
    const auto s15 = frac_integrate_time(tr, 0.5, {.n_out = 120, .gl_order = 12, .levels = 20});
    NormTrace norms;
    norms.order = 1.5;
    norms.omega = 0.0;
    norms.times = s15.times;
    for (const auto& op : s15.values) norms.values.push_back(fam.op_norm(op));
    RateFitOptions ro;
    ro.window_min = 1e-4;
    ro.window_max = 0.1;
    const auto fit = fit_origin_rate(norms, 0.0, ro);
    CHECK(fit.alpha_hat == Approx(1.0).margin(0.1));  // 0.5 + (2 - beta/2)
}

TEST_CASE("lambda-side power law identity", "[fracint][lambda]") {
    LambdaFunction<double> r{[](double u) { return std::pow(u, -2.0); }, 0.0, 2.0, 1.0};
    r.validate_decay();
    const double got = frac_integrate_lambda_at(r, 0.5, 1.0);
    CHECK(got == Approx(gamma_fn(1.5) / gamma_fn(2.0)).epsilon(1e-9));  // 0.88623
    CHECK(got == Approx(0.88623).epsilon(1e-4));
}

TEST_CASE("lambda-side composition and decay bookkeeping", "[fracint][lambda]") {
    LambdaFunction<double> r{[](double u) { return std::pow(u, -2.0); }, 0.0, 2.0, 1.0};
    const auto r03 = frac_integrate_lambda(r, 0.3);
    CHECK(r03.decay_delta == Approx(1.7));
    const auto r0304 = frac_integrate_lambda(r03, 0.4);
    for (double lam : {1.0, 100.0}) {
        const double direct = frac_integrate_lambda_at(r, 0.7, lam);
        CHECK(r0304.eval(lam) == Approx(direct).epsilon(1e-8));
    }
}

TEST_CASE("derivative rule for the lambda-side integral", "[fracint][lambda]") {
    LambdaFunction<double> r{[](double u) { return std::pow(u, -2.0); }, 0.0, 2.0, 1.0};
    // (r_1.5)' = -r_0.5 via high-order finite differences
    auto r15 = [&](double lam) { return frac_integrate_lambda_at(r, 1.5, lam); };
    const double fd = fd_derivative(r15, 2.0, 1, fd_step(1.0));
    const double expect = -frac_integrate_lambda_at(r, 0.5, 2.0);
    CHECK(fd == Approx(expect).epsilon(1e-6));
}

TEST_CASE("lambda-side argument validation", "[fracint][lambda]") {
    LambdaFunction<double> r{[](double u) { return std::pow(u, -2.0); }, 0.0, 2.0, 1.0};
    CHECK_THROWS_AS(frac_integrate_lambda_at(r, 2.5, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(frac_integrate_lambda_at(r, -0.1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(frac_integrate_lambda_at(r, 1.995, 1.0), numeric_error);  // tiny decay gap

    LambdaFunction<double> lying{[](double u) { return 1.0 / std::sqrt(u); }, 0.0, 2.0, 1.0};
    CHECK_THROWS_AS(lying.validate_decay(), std::invalid_argument);
}

TEST_CASE("transform commutes with fractional time integration", "[fracint][property]") {
    // laplace(frac_time(S, delta)) = lambda^{-delta} laplace(S)
    const double delta = 0.5;
    const auto tr = exp_trace(30.0, 6001);
    const auto frac = frac_integrate_time(tr, delta, {.n_out = 6001});
    for (double lam : {1.0, 3.0}) {
        const Complex lhs = laplace_forward(frac, Complex{lam, 0.0}, 0.0);
        const Complex rhs = std::pow(lam, -delta) / (lam + 1.0);
        CHECK(std::abs(lhs - rhs) / std::abs(rhs) < 1e-7);
    }
}
