#pragma once

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "intsemi/core.hpp"
#include "intsemi/families.hpp"
#include "intsemi/quadrature.hpp"
#include "intsemi/special.hpp"

namespace intsemi {

// ---------------------------------------------------------------------------
// Euler exponential formula for k-times integrated semigroups:
//   S_k(t0) = lim_n int_0^{t0} (t0 - tau)^{k-1}/(k-1)!  F(tau/n)^n dtau,
//   F(t) = t^{-1} R(t^{-1}),
// valid when ||S_k(t)|| <= M t^alpha e^{omega t} with k-1 < alpha <= k.
// ---------------------------------------------------------------------------

struct PnkSpec {
    int n = 0;
    int k = 0;
    void validate() const {
        if (n <= k || k < 0) throw std::invalid_argument("PnkSpec: requires n > k >= 0");
    }
};

/// P_{n,k}(x) = sum_{l=0}^k (-1)^l C(k,l) x^{k-l} (n-1)!/(n-l-1)!, with the
/// factorial ratio as a falling-factorial product (no large factorials).
inline double pnk_eval(PnkSpec spec, double x) {
    spec.validate();
    double sum = 0.0, sign = 1.0;
    for (int l = 0; l <= spec.k; ++l) {
        sum += sign * binomial(spec.k, l) * std::pow(x, spec.k - l) *
               falling_factorial(spec.n - 1.0, l);
        sign = -sign;
    }
    return sum;
}

inline Complex pnk_eval(PnkSpec spec, Complex x) {
    spec.validate();
    Complex sum{};
    double sign = 1.0;
    for (int l = 0; l <= spec.k; ++l) {
        sum += sign * binomial(spec.k, l) * std::pow(x, static_cast<double>(spec.k - l)) *
               falling_factorial(spec.n - 1.0, l);
        sign = -sign;
    }
    return sum;
}

/// Relative residual of the derivative identity behind the Euler kernel
/// manipulation:
///   P_{n,k}(lambda t) lambda^{n-k-1} e^{-lambda t} = (-1)^k d^k/dlambda^k (lambda^{n-1} e^{-lambda t}).
/// The right side is produced by a high-order central difference, so the check
/// is independent of the polynomial expansion.
inline double verify_pnk_identity(PnkSpec spec, double lambda, double t) {
    spec.validate();
    if (!(lambda > 0.0) || !(t > 0.0)) throw std::invalid_argument("verify_pnk_identity: lambda, t > 0");
    const double lhs = pnk_eval(spec, lambda * t) * std::pow(lambda, spec.n - spec.k - 1.0) *
                       std::exp(-lambda * t);
    if (spec.k == 0) return 0.0;
    auto f = [&](double l) { return std::pow(l, spec.n - 1.0) * std::exp(-l * t); };
    const double scale = (spec.n - 1.0) / lambda + t;  // local log-derivative scale of f
    const double fd = fd_derivative(f, lambda, spec.k, fd_step(scale));
    const double rhs = (spec.k % 2 == 0 ? 1.0 : -1.0) * fd;
    return std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-300);
}

/// [ (n/tau) R(n/tau) ]^n.
template <class F>
typename F::Op euler_power(const F& fam, double tau, long n) {
    if (!(tau > 0.0) || n < 1) throw std::invalid_argument("euler_power: requires tau > 0, n >= 1");
    const double lambda = static_cast<double>(n) / tau;
    if (!fam.in_resolvent_set(Complex{lambda, 0.0}))
        throw std::domain_error("euler_power: n/tau outside the resolvent set");
    return fam.scaled_resolvent_power(lambda, n);
}

struct IntegratedEulerOptions {
    int gl_order = 20;
    int n_panels = 24;       // panels on the graded variable
    bool check_singularity = true;
};

/// Kernel-weighted integral of the Euler power with the tau^{alpha-k} origin
/// singularity absorbed by the grading tau = t0 v^{1/(alpha-k+1)}, under which
/// tau^{alpha-k} dtau is proportional to dv.
template <class F>
typename F::Op integrated_euler(const F& fam, double t0, int k, long n, double alpha,
                                IntegratedEulerOptions opt = {}) {
    if (!(t0 > 0.0)) throw std::invalid_argument("integrated_euler: requires t0 > 0");
    if (k < 1 || n <= k) throw std::invalid_argument("integrated_euler: requires n > k >= 1");
    if (!(alpha > k - 1.0) || !(alpha <= k))
        throw std::invalid_argument("integrated_euler: requires k-1 < alpha <= k");

    if (opt.check_singularity) {
        // empirical origin exponent of ||F(tau/n)^n||: must stay integrable
        const double t1 = 1e-3 * t0, t2 = 1e-2 * t0;
        const double n1 = fam.op_norm(euler_power(fam, t1, n));
        const double n2 = fam.op_norm(euler_power(fam, t2, n));
        const double slope = std::log(n2 / n1) / std::log(t2 / t1);
        if (slope <= -1.0)
            throw numeric_error("integrated_euler: empirical origin exponent " +
                                std::to_string(slope) + " <= -1 (stronger than declared)");
    }

    const double kfac = gamma_fn(static_cast<double>(k));
    const double q = alpha - k + 1.0;  // in (0, 1]
    auto g = [&](double v) {
        const double tau = t0 * std::pow(v, 1.0 / q);
        const double kern = std::pow(t0 - tau, k - 1.0) / kfac;
        const double jac = (t0 / q) * std::pow(v, 1.0 / q - 1.0);
        return euler_power(fam, tau, n) * (kern * jac);
    };
    return integrate_panels(g, geometric_edges(0.0, 1.0, opt.n_panels), opt.gl_order);
}

struct EulerRun {
    double t0 = 0.0;
    int k = 0;
    double alpha = 0.0;
    std::vector<long> n_list;
    std::vector<double> errors;
    std::vector<double> runtimes_ms;
    double reference_norm = 0.0;
    bool errors_decreasing = false;
    double final_error = kInf;
};

/// Convergence study against an independently computed reference for S_k(t0)
/// (closed form or contour).  Per-n errors in the family operator norm.
template <class F, class RefOp>
EulerRun euler_convergence_study(const F& fam, double t0, int k, std::vector<long> n_list,
                                 double alpha, const RefOp& reference) {
    if (n_list.size() < 2) throw std::invalid_argument("euler_convergence_study: need >= 2 orders");
    for (std::size_t i = 1; i < n_list.size(); ++i)
        if (n_list[i] <= n_list[i - 1])
            throw std::invalid_argument("euler_convergence_study: n_list must increase");

    EulerRun run;
    run.t0 = t0;
    run.k = k;
    run.alpha = alpha;
    run.n_list = n_list;
    run.reference_norm = fam.op_norm(reference);
    for (long n : n_list) {
        const auto start = std::chrono::steady_clock::now();
        const auto approx = integrated_euler(fam, t0, k, n, alpha);
        const auto stop = std::chrono::steady_clock::now();
        run.errors.push_back(fam.op_norm(approx - reference));
        run.runtimes_ms.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
    }
    run.final_error = run.errors.back();
    run.errors_decreasing = true;
    const std::size_t tail = run.errors.size() >= 3 ? run.errors.size() - 3 : 0;
    for (std::size_t i = tail + 1; i < run.errors.size(); ++i)
        if (run.errors[i] >= run.errors[i - 1]) run.errors_decreasing = false;
    return run;
}

}  // namespace intsemi
