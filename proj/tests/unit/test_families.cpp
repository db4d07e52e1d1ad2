#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "intsemi/families.hpp"
#include "intsemi/gallery.hpp"
#include "intsemi/transforms.hpp"

using namespace intsemi;
using Catch::Approx;

namespace {
GridSpec line_grid(int n = 2001, double half = 8.0) {
    GridSpec g;
    g.x_min = -half;
    g.x_max = half;
    g.n_points = n;
    return g;
}

std::size_t grid_index_of(const BetaFamily& fam, double x) {
    std::size_t best = 0;
    double d = kInf;
    for (std::size_t i = 0; i < fam.grid().size(); ++i)
        if (std::abs(fam.grid()[i] - x) < d) {
            d = std::abs(fam.grid()[i] - x);
            best = i;
        }
    REQUIRE(d < 1e-9);
    return best;
}
}  // namespace

TEST_CASE("scalar family basics", "[families][scalar]") {
    const ScalarFamily fam(-1.0);
    CHECK(fam.omega() == -1.0);
    CHECK(fam.kappa_min() == 0.0);
    CHECK(fam.in_resolvent_set(Complex{0.0, 0.0}));
    CHECK_FALSE(fam.in_resolvent_set(Complex{-1.0, 0.0}));

    // T(1) 1 = e^{-1}; R(0) 1 = 1
    CHECK(std::abs(fam.apply_semigroup({1.0, 0.0}, {1.0})[0] - std::exp(-1.0)) < 1e-15);
    CHECK(std::abs(fam.resolvent_apply({0.0, 0.0}, {1.0})[0] - 1.0) < 1e-15);
    CHECK_THROWS_AS(fam.resolvent_apply({-1.0, 0.0}, {1.0}), std::domain_error);
}

TEST_CASE("scalar resolvent derivative norm closed form", "[families][scalar]") {
    const ScalarFamily fam(-1.0);
    // |d^3/dl^3 (l+1)^{-1}| at l = 1:  3!/2^4 = 0.375
    CHECK(fam.resolvent_derivative_norm(1.0, 3, 0.0) == Approx(0.375).epsilon(1e-12));
    // n = 0 reduces to the resolvent norm itself
    CHECK(fam.resolvent_derivative_norm(2.0, 0, 0.0) ==
          Approx(fam.resolvent_norm({2.0, 0.0})).epsilon(1e-13));
    CHECK(fam.resolvent_derivative_norm(2.0, 0, 1.5) ==
          Approx(fam.resolvent_norm({2.0, 0.0}) / std::pow(2.0, 1.5)).epsilon(1e-13));
}

TEST_CASE("beta family construction and metadata", "[families][beta]") {
    const BetaFamily fam(3.0, line_grid());
    CHECK(fam.kappa_min() == Approx(1.5));
    CHECK(fam.omega() == 0.0);
    CHECK(fam.e1_exponents().first == Approx(1.0));
    CHECK(fam.e1_exponents().second == Approx(0.5));

    CHECK_THROWS_AS(BetaFamily(-0.5, line_grid()), std::invalid_argument);

    const BetaFamily empty_res(5.0, line_grid(101));
    CHECK(empty_res.resolvent_set_empty());
    CHECK(empty_res.kappa_min() == kInf);
    CHECK_THROWS_AS(empty_res.resolvent_op(Complex{1.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(empty_res.resolvent_norm(Complex{10.0, 5.0}), std::domain_error);
}

TEST_CASE("beta semigroup action at x = 0 has no nilpotent part", "[families][beta]") {
    const BetaFamily fam(3.0, line_grid());
    const auto op = fam.semigroup_op(Complex{0.7, 0.0});
    const auto i0 = grid_index_of(fam, 0.0);
    CHECK(std::abs(op.diag[i0] - std::exp(-0.7)) < 1e-15);
    CHECK(std::abs(op.nilp[i0]) == 0.0);
}

TEST_CASE("beta resolvent matrix at a point", "[families][beta]") {
    // (lambda - a(x))^{-1} at lambda = 0, x = 1, beta = 4:
    // (1/2) I + (1/4) N applied to (0, 1) gives (0.25, 0.5)
    const BetaFamily fam(4.0, line_grid());
    const std::size_t m = fam.grid().size();
    CVector uv(2 * m, Complex{});
    const auto i1 = grid_index_of(fam, 1.0);
    uv[m + i1] = 1.0;
    const auto out = fam.resolvent_apply(Complex{0.0, 0.0}, uv);
    CHECK(std::abs(out[i1] - 0.25) < 1e-12);
    CHECK(std::abs(out[m + i1] - 0.5) < 1e-12);
}

TEST_CASE("beta semigroup norm sits inside the computable sandwich", "[families][beta]") {
    const BetaFamily fam(2.0, line_grid());
    const double c2 = std::exp(-1.0);  // (beta/2)^{beta/2} e^{-beta/2} at beta = 2
    const double n1 = fam.semigroup_norm(Complex{1.0, 0.0});
    // nilpotent-part lower bound and the full upper bound
    CHECK(n1 >= c2 * std::exp(-1.0) - 1e-12);
    CHECK(n1 <= 1.0 + c2 * std::exp(-1.0) + 1e-12);
}

TEST_CASE("beta = 0 is a contraction on the diagonal", "[families][beta]") {
    const BetaFamily fam(0.0, line_grid(501));
    for (double t : {0.2, 1.0, 4.0}) CHECK(fam.semigroup_norm(Complex{t, 0.0}) <= 1.0 + 1e-12);
}

TEST_CASE("beta = 3 norm blows up like (Re z)^{-3/2} near the boundary", "[families][beta]") {
    const BetaFamily fam(3.0, line_grid(4001, 40.0));
    const Complex z{0.01, 1.0};
    const double c3 = std::pow(1.5, 1.5) * std::exp(-1.5);
    const double model = c3 * std::abs(z) * std::exp(-z.real()) / std::pow(z.real(), 1.5);
    const double got = fam.semigroup_norm(z);
    CHECK(got >= 0.5 * model);
    CHECK(got <= 2.0 * model);
}

TEST_CASE("beta semigroup norm is monotone under grid refinement", "[families][beta]") {
    const BetaFamily coarse(2.5, line_grid(251));
    const BetaFamily fine(2.5, line_grid(2001));
    for (double t : {0.05, 0.3, 1.0})
        CHECK(coarse.semigroup_norm({t, 0.0}) <= fine.semigroup_norm({t, 0.0}) + 1e-12);
}

TEST_CASE("generator power identity a(x)^n", "[families][beta]") {
    const BetaFamily fam(1.5, line_grid(11));
    for (double x : {0.4, 1.2, 3.0}) {
        CMatrix a(2);
        a(0, 0) = -(1.0 + x * x);
        a(1, 1) = a(0, 0);
        a(0, 1) = std::pow(x, 1.5);
        CMatrix p = CMatrix::identity(2);
        for (int n = 1; n <= 5; ++n) {
            p = p * a;
            const auto [diag, nilp] = fam.generator_power_point(x, n);
            CHECK(std::abs(p(0, 0) - diag) < 1e-10 * std::abs(diag));
            CHECK(std::abs(p(0, 1) - nilp) < 1e-10 * std::max(1.0, std::abs(nilp)));
        }
    }
}

TEST_CASE("beta family rejects boundary times", "[families][beta]") {
    const BetaFamily fam(1.0, line_grid(101));
    CHECK_THROWS_AS(fam.semigroup_op(Complex{0.0, 1.0}), std::domain_error);
    CHECK_NOTHROW(fam.semigroup_op(Complex{0.0, 0.0}));
}

TEST_CASE("singular family action matches the pointwise formula", "[families][singular]") {
    LogGridSpec g;
    g.s_max = 50.0;
    g.n_points = 2001;
    const SingularC01Family fam(1.0, g);
    const auto ones = fam.sample([](double) { return Complex{1.0, 0.0}; });
    const auto tf = fam.apply_semigroup(Complex{1.0, 0.0}, ones);

    // independent pointwise oracle: x^t (f(x) - f(0) (-ln x)^beta)
    for (std::size_t i = 1; i < tf.size(); i += 97) {
        const double s = fam.s_grid()[i - 1];
        const Complex expect = std::exp(-s) * (1.0 - s);
        CHECK(std::abs(tf[i] - expect) < 1e-13 * std::max(1.0, std::abs(expect)));
    }
    // at s = 1 (x = 1/e) the value vanishes: f - (-ln x)^1 f(0) = 0 there
    double closest = kInf;
    std::size_t idx = 0;
    for (std::size_t i = 0; i < fam.s_grid().size(); ++i)
        if (std::abs(fam.s_grid()[i] - 1.0) < closest) {
            closest = std::abs(fam.s_grid()[i] - 1.0);
            idx = i;
        }
    CHECK(std::abs(tf[idx + 1]) < 2e-2);  // grid point nearest s = 1
    CHECK(tf[0] == Complex{});            // [Tf](0) = 0 always
}

TEST_CASE("singular resolvent equation fails at beta = 1 and holds below", "[families][singular]") {
    LogGridSpec g;
    g.s_max = 200.0;
    g.n_points = 2001;

    auto residual = [&](double beta) {
        const SingularC01Family fam(beta, g);
        const Complex lam{1.0, 0.0}, mu{2.0, 0.0};
        const auto rl = fam.candidate_resolvent_op(lam);
        const auto rm = fam.candidate_resolvent_op(mu);
        const auto lhs = rl - rm;
        const auto rhs = op_compose(rl, rm) * (mu - lam);
        return fam.op_norm(lhs - rhs);
    };
    CHECK(residual(0.5) < 1e-10);
    CHECK(residual(1.0) > 0.1);
}

TEST_CASE("resolvent pseudo-equation across families", "[families][property]") {
    const Complex lam{1.5, 0.3}, mu{3.0, -0.4};
    auto check_family = [&](const auto& fam) {
        const auto rl = fam.resolvent_op(lam);
        const auto rm = fam.resolvent_op(mu);
        const auto lhs = rl - rm;
        const auto rhs = op_compose(rl, rm) * (mu - lam);
        CHECK(fam.op_norm(lhs - rhs) < 1e-10);
    };
    check_family(ScalarFamily(-1.0));
    check_family(BetaFamily(2.0, line_grid(301)));
    CMatrix a(2);
    a(0, 0) = -1.0;
    a(1, 1) = -1.0;
    a(0, 1) = 1.0;
    check_family(MatrixFamily(a));
}

TEST_CASE("semigroup law on sampled times", "[families][property]") {
    const std::vector<std::pair<Complex, Complex>> pairs{
        {{0.3, 0.1}, {0.9, -0.2}}, {{1.0, 0.0}, {0.5, 0.5}}, {{0.05, 0.0}, {0.05, 0.0}}};

    {
        const ScalarFamily fam(-1.0);
        for (const auto& [z1, z2] : pairs) {
            const Complex lhs = fam.semigroup_op(z1) * fam.semigroup_op(z2);
            CHECK(std::abs(lhs - fam.semigroup_op(z1 + z2)) < 1e-10);
        }
    }
    {
        const BetaFamily fam(2.5, line_grid(301));
        for (const auto& [z1, z2] : pairs) {
            const auto lhs = op_compose(fam.semigroup_op(z1), fam.semigroup_op(z2));
            CHECK(fam.op_norm(lhs - fam.semigroup_op(z1 + z2)) < 1e-10);
        }
    }
    {
        LogGridSpec g;
        g.s_max = 100.0;
        g.n_points = 1001;
        const SingularC01Family fam(0.5, g);
        for (const auto& [z1, z2] : pairs) {
            const auto lhs = op_compose(fam.semigroup_op(z1), fam.semigroup_op(z2));
            CHECK(fam.op_norm(lhs - fam.semigroup_op(z1 + z2)) < 1e-10);
        }
    }
}

TEST_CASE("resolvent derivative cross-checked by three routes", "[families][beta]") {
    const BetaFamily fam(2.0, line_grid(201));
    const double lambda = 10.0;

    // analytic Leibniz evaluation
    const auto scaled = fam.resolvent_derivative_scaled(lambda, 1, 1.0);
    const double analytic = std::exp(scaled.log_scale) * fam.op_norm(scaled.op);

    // complex-step differentiation of R(l)/l at l = lambda
    const double h = 1e-20;
    const auto rstep = fam.resolvent_op(Complex{lambda, h});
    BetaOp cs(fam.grid().size());
    for (std::size_t i = 0; i < fam.grid().size(); ++i) {
        const Complex val_d = rstep.diag[i] / Complex{lambda, h};
        const Complex val_n = rstep.nilp[i] / Complex{lambda, h};
        cs.diag[i] = val_d.imag() / h;
        cs.nilp[i] = val_n.imag() / h;
    }
    const double complex_step = fam.op_norm(cs);
    CHECK(analytic == Approx(complex_step).epsilon(1e-10));

    // quadrature through the time representation with the closed-form S_1
    auto s1_op = [&](double t) { return beta_s1_op(fam, Complex{t, 0.0}); };
    const auto qval = resolvent_derivative_via_time(s1_op, lambda, 1, 0.0);
    CHECK(fam.op_norm(qval) == Approx(analytic).epsilon(1e-6));
}
