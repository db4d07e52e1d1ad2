#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "intsemi/core.hpp"
#include "intsemi/quadrature.hpp"
#include "intsemi/special.hpp"
#include "intsemi/trace.hpp"

namespace intsemi {

// ---------------------------------------------------------------------------
// Time side: Riemann-Liouville integral of order delta,
//   F(t) = 1/Gamma(delta) int_0^t (t - tau)^{delta-1} S(tau) dtau,
// raising a trace of order sigma to order sigma + delta.
// ---------------------------------------------------------------------------

struct FracTimeOptions {
    int n_out = 0;          // output samples; 0 keeps the input count
    int gl_order = 24;
    int levels = 36;        // geometric panel depth per endpoint
};

/// Fractional time integral of a sampled trace.  The kernel singularity at
/// tau = t (for delta < 1) is removed exactly by the substitution
/// u = t - tau, u = v^{1/delta}, under which u^{delta-1} du = dv / delta.
/// Output times lie on the graded mesh t_j = T (j/N)^gamma with
/// gamma = max(1, 2/max(sigma, 1/2)), clustering where the new order's origin
/// behavior needs resolution.
template <class V>
TimeTrace<V> frac_integrate_time(const TimeTrace<V>& trace, double delta,
                                 FracTimeOptions opt = {}) {
    trace.validate();
    if (!(delta > 0.0)) throw std::invalid_argument("frac_integrate_time: requires delta > 0");
    if (trace.order < 1.0 && trace.times.front() > 1e-3 * trace.times.back())
        throw std::invalid_argument(
            "frac_integrate_time: trace of order < 1 must be sampled densely near 0");

    const int n_out = opt.n_out > 0 ? opt.n_out : static_cast<int>(trace.times.size());
    const double gamma_mesh = std::max(1.0, 2.0 / std::max(trace.order, 0.5));
    std::vector<double> out_times = graded_mesh(trace.t_max(), n_out, gamma_mesh);

    const double ginv = 1.0 / gamma_fn(delta);
    TimeTrace<V> out;
    out.order = trace.order + delta;
    out.omega = trace.omega;
    out.alpha = trace.alpha + delta;
    out.direction = trace.direction;
    out.mesh = MeshKind::graded;
    out.times = out_times;
    out.values.reserve(out_times.size());

    for (double t : out_times) {
        // int_0^t u^{delta-1} S(t-u) du, u = v^{1/delta}
        auto g = [&](double v) {
            const double u = std::pow(v, 1.0 / delta);
            return trace.eval(t - u);
        };
        const double v_max = std::pow(t, delta);
        auto val = integrate_panels(g, geometric_edges_both(0.0, v_max, opt.levels), opt.gl_order);
        out.values.push_back(val * (ginv / delta));
    }
    out.validate();
    return out;
}

// ---------------------------------------------------------------------------
// Laplace side: r_alpha(lambda) = int_lambda^inf (u-lambda)^{alpha-1}/Gamma(alpha) r(u) du
// for r with ||lambda^delta r(lambda)|| bounded, 0 < alpha < delta.
// ---------------------------------------------------------------------------

/// Function of the Laplace variable on (a, inf) with declared power decay:
/// ||lambda^decay_delta r(lambda)|| <= bound_m.
template <class V>
struct LambdaFunction {
    std::function<V(double)> eval;
    double a = 0.0;           // left endpoint of the domain
    double decay_delta = 0.0; // declared decay exponent
    double bound_m = 1.0;     // constant in the decay bound

    void validate_decay(int probes = 12, double lo_factor = 2.0, double hi_factor = 1e6) const {
        if (!(decay_delta > 0.0)) throw std::invalid_argument("LambdaFunction: decay_delta must be > 0");
        const double lo = std::max(a + 1.0, a * lo_factor + 1.0);
        double worst = 0.0;
        for (double u : log_spaced_probe(lo, lo * hi_factor, probes))
            worst = std::max(worst, std::pow(u, decay_delta) * norm_of(eval(u)));
        if (worst > 4.0 * bound_m)
            throw std::invalid_argument("LambdaFunction: sampled decay exceeds declared bound");
    }

private:
    static std::vector<double> log_spaced_probe(double lo, double hi, int n) {
        std::vector<double> v(n);
        const double llo = std::log(lo), lhi = std::log(hi);
        for (int i = 0; i < n; ++i) v[i] = std::exp(llo + (lhi - llo) * i / (n - 1));
        return v;
    }
    static double norm_of(const V& x) {
        if constexpr (std::is_same_v<V, double>) return std::abs(x);
        else if constexpr (std::is_same_v<V, Complex>) return std::abs(x);
        else return x.norm();
    }
};

struct FracLambdaOptions {
    double tail_span = 1e6;  // quadrature extends to Lambda = tail_span * lambda
    int gl_order = 24;
    int levels = 40;
    double panel_growth = 1.8;
    int tail_terms = 5;      // binomial terms of the analytic tail closure
};

/// One evaluation of r_alpha at lambda.  The endpoint singularity
/// (u - lambda)^{alpha-1} is removed by u = lambda + v^{1/alpha}; the regular
/// part runs on geometrically growing panels out to Lambda = tail_span*lambda.
/// Beyond Lambda the declared decay closes the integral analytically with
/// r(u) ~ r(Lambda) (u/Lambda)^{-delta}:
///   int_Lambda^inf (u-lambda)^{alpha-1} u^{-delta} du
///     = sum_m C(alpha-1, m) (-lambda)^m Lambda^{alpha-delta-m} / (delta-alpha+m),
/// accurate to O((lambda/Lambda)^{tail_terms}) of the (already small) tail.
template <class V>
V frac_integrate_lambda_at(const LambdaFunction<V>& r, double alpha, double lambda,
                           const FracLambdaOptions& opt = {}) {
    if (!(alpha > 0.0) || !(alpha < r.decay_delta))
        throw std::invalid_argument("frac_integrate_lambda: requires 0 < alpha < decay_delta");
    if (!(lambda > r.a)) throw std::domain_error("frac_integrate_lambda: lambda must exceed a");
    if (!(r.decay_delta - alpha > 0.01))
        throw numeric_error("frac_integrate_lambda: tail bound exceeds tolerance (decay gap " +
                            std::to_string(r.decay_delta - alpha) + " too small)");

    const double ga = gamma_fn(alpha);
    const double s0 = std::max(1.0, 0.1 * lambda);  // singular span scales with lambda

    // singular span [lambda, lambda + s0] via the power substitution
    auto g = [&](double v) { return r.eval(lambda + std::pow(v, 1.0 / alpha)); };
    const double v0 = std::pow(s0, alpha);
    auto singular = integrate_panels(g, geometric_edges(0.0, v0, opt.levels), opt.gl_order) *
                    (1.0 / (alpha * ga));

    // regular part on geometric panels up to Lambda
    const double big_lambda = std::max(lambda * opt.tail_span, lambda + 2.0 * s0);
    auto h = [&](double u) { return r.eval(u) * (std::pow(u - lambda, alpha - 1.0) / ga); };
    std::vector<double> edges{lambda + s0};
    double seg = s0;
    while (edges.back() < big_lambda) {
        edges.push_back(std::min(edges.back() + seg, big_lambda));
        seg *= opt.panel_growth;
    }
    if (edges.size() < 2) throw numeric_error("frac_integrate_lambda: degenerate tail split");
    auto regular = integrate_panels(h, edges, opt.gl_order);

    // analytic tail closure from the declared power decay
    double tail_coeff = 0.0, binom = 1.0;
    for (int m = 0; m < opt.tail_terms; ++m) {
        if (m > 0) binom *= (alpha - m) / m;  // C(alpha-1, m)
        tail_coeff += binom * std::pow(-lambda, m) *
                      std::pow(big_lambda, alpha - r.decay_delta - m) /
                      (r.decay_delta - alpha + m);
    }
    auto tail = r.eval(big_lambda) * (std::pow(big_lambda, r.decay_delta) * tail_coeff / ga);

    return singular + regular + tail;
}

/// r_alpha as a LambdaFunction with decay delta - alpha; the new bound
/// constant follows the exact power-law transfer M Gamma(delta-alpha)/Gamma(delta).
template <class V>
LambdaFunction<V> frac_integrate_lambda(const LambdaFunction<V>& r, double alpha,
                                        FracLambdaOptions opt = {}) {
    if (!(alpha > 0.0) || !(alpha < r.decay_delta))
        throw std::invalid_argument("frac_integrate_lambda: requires 0 < alpha < decay_delta");
    LambdaFunction<V> out;
    out.a = r.a;
    out.decay_delta = r.decay_delta - alpha;
    out.bound_m = r.bound_m * gamma_fn(r.decay_delta - alpha) / gamma_fn(r.decay_delta);
    out.eval = [r, alpha, opt](double lambda) {
        return frac_integrate_lambda_at(r, alpha, lambda, opt);
    };
    return out;
}

}  // namespace intsemi
