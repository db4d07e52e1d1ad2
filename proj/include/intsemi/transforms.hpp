#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "intsemi/core.hpp"
#include "intsemi/families.hpp"
#include "intsemi/quadrature.hpp"
#include "intsemi/special.hpp"
#include "intsemi/trace.hpp"

namespace intsemi {

// ---------------------------------------------------------------------------
// Contour inversion
//   S_sigma(z) = 1/(2 pi i) int_C e^{lambda z} R(lambda) / lambda^sigma dlambda
// over a V-shaped path with vertex omega_prime > 0 whose legs leave at the
// angles +-(phi + pi/2) - arg z, i.e. the standard sector path tilted by
// -arg z.  On the tilted legs |e^{(lambda - omega') z}| = e^{-rho |z| sin phi}
// uniformly, so admissibility reduces to keeping the whole path inside the
// resolvent sector: phi + |arg z| < theta.
// ---------------------------------------------------------------------------

struct ContourSpec {
    double omega_prime = 0.5;  // vertex; must exceed the spectral bound along R
    double phi = 0.35;         // leg angle above pi/2
    double tol = 1e-13;        // endpoint truncation target for |e^{lambda z}|
    int gl_order = 20;
    double osc_cap = 24.0;     // max panel width in units of 1/|z| (phase resolution)
    int vertex_levels = 34;    // geometric refinement depth toward the vertex

    void validate() const {
        if (!(phi > 0.0) || !(phi < kPi / 2.0)) throw std::invalid_argument("ContourSpec: phi in (0, pi/2)");
        if (!(tol > 0.0) || !(osc_cap > 0.0) || gl_order < 2)
            throw std::invalid_argument("ContourSpec: bad quadrature parameters");
    }

    bool admissible_for(Complex z, double theta) const {
        return std::abs(std::arg(z)) + phi < theta && std::abs(z) > 0.0;
    }

    /// Truncation radius: e^{omega' Re z} e^{-R |z| sin phi} < tol.
    double truncation_radius(Complex z) const {
        const double decay = std::abs(z) * std::sin(phi);
        return (std::max(omega_prime * z.real(), 0.0) + std::log(1.0 / tol)) / decay + 1.0;
    }
};

/// Contour for a family and target z: vertex just right of the growth bound,
/// phi at 3/4 of the admissible gap.  The vertex margin shrinks like 1/Re z
/// so that e^{omega' Re z} stays O(1) and no cancellation is introduced for
/// large real times.
template <class F>
ContourSpec auto_contour(const F& fam, Complex z) {
    ContourSpec spec;
    const double margin = std::min(0.5, 4.0 / std::max(z.real(), 1e-12));
    spec.omega_prime = std::max(fam.omega(), 0.0) + margin;
    const double gap = fam.theta() - std::abs(std::arg(z));
    if (!(gap > 0.0)) throw std::domain_error("auto_contour: z outside the holomorphy sector");
    spec.phi = std::min(0.45, 0.75 * gap);
    return spec;
}

/// Panel edges along one leg, geometric toward the vertex then capped so a
/// single panel never spans more phase of e^{i Im(lambda z)} than the rule
/// resolves.
inline std::vector<double> contour_leg_edges(double radius, double abs_z, const ContourSpec& spec) {
    const double cap = spec.osc_cap / abs_z;
    std::vector<double> edges{0.0};
    double w = std::min(radius, cap) * std::ldexp(1.0, -spec.vertex_levels);
    double x = 0.0;
    while (x < radius) {
        x = std::min(x + w, radius);
        edges.push_back(x);
        w = std::min(2.0 * w, cap);
    }
    return edges;
}

/// S_sigma(z) for any real sigma (sigma > kappa gives the sigma-times
/// integrated semigroup; sigma = 0 the associated holomorphic semigroup).
template <class F>
typename F::Op contour_invert(const F& fam, Complex z, double sigma, const ContourSpec& spec) {
    spec.validate();
    if (!spec.admissible_for(z, fam.theta()))
        throw std::domain_error("contour_invert: contour inadmissible for z (need |arg z| + phi < theta)");
    if (!(spec.omega_prime > fam.omega()))
        throw std::domain_error("contour_invert: vertex must lie right of the growth bound");

    const double psi = std::arg(z);
    const double radius = spec.truncation_radius(z);
    const auto edges = contour_leg_edges(radius, std::abs(z), spec);

    using Op = typename F::Op;
    std::vector<Op> parts;
    parts.reserve(2 * (edges.size() - 1));
    for (const double sgn : {+1.0, -1.0}) {
        const double ang = sgn * (spec.phi + kPi / 2.0) - psi;
        const Complex dir = std::exp(Complex{0.0, ang});
        auto integrand = [&](double rho) -> Op {
            const Complex lambda = spec.omega_prime + rho * dir;
            if (!fam.in_resolvent_set(lambda))
                throw std::domain_error("contour_invert: resolvent failure on a contour node");
            const Complex w = std::exp(lambda * z - sigma * std::log(lambda)) * dir * sgn;
            return fam.resolvent_op(lambda) * w;
        };
        for (std::size_t i = 0; i + 1 < edges.size(); ++i)
            parts.push_back(gl_panel(integrand, edges[i], edges[i + 1], spec.gl_order));
    }
    const Complex norm_factor = 1.0 / Complex{0.0, 2.0 * kPi};
    return pairwise_sum(std::move(parts)) * norm_factor;
}

template <class F>
typename F::Op contour_invert(const F& fam, Complex z, double sigma) {
    return contour_invert(fam, z, sigma, auto_contour(fam, z));
}

// ---------------------------------------------------------------------------
// Forward Laplace transform  lambda^kappa int_0^infty e^{-lambda t} S(t) dt
// ---------------------------------------------------------------------------

struct LaplaceOptions {
    int gl_order = 24;
    int levels = 44;       // geometric refinement toward t = 0
    double tail_eps = 1e-14;
};

/// Callable form: S evaluated directly at quadrature nodes.  The integral is
/// truncated at T with (Re lambda - omega) T > log(1/tail_eps) and closed by
/// the extrapolation S(T) e^{-lambda T}/(lambda - omega), which is exact for
/// the pure growth model S(t) ~ S(T) e^{omega (t-T)}.
template <class S>
auto laplace_forward(S&& s_of_t, Complex lambda, double kappa, double omega,
                     LaplaceOptions opt = {}) {
    if (!(lambda.real() > omega))
        throw std::domain_error("laplace_forward: requires Re lambda > omega");
    const double t_max = (std::log(1.0 / opt.tail_eps) + 6.0) / (lambda.real() - omega);
    auto f = [&](double t) { return s_of_t(t) * std::exp(-lambda * t); };
    auto integral = integrate_panels(f, geometric_edges(0.0, t_max, opt.levels), opt.gl_order);
    auto tail = s_of_t(t_max) * (std::exp(-lambda * t_max) / (lambda - omega));
    return (integral + tail) * std::exp(kappa * std::log(lambda));
}

/// Trace form: integrates the interpolated samples over their span plus the
/// same exponential tail closure beyond the last sample.
template <class V>
auto laplace_forward(const TimeTrace<V>& trace, Complex lambda, double kappa,
                     LaplaceOptions opt = {}) {
    trace.validate();
    if (!(lambda.real() > trace.omega))
        throw std::domain_error("laplace_forward: requires Re lambda > trace omega");
    if (trace.t_min() > 40.0 / std::max(lambda.real(), 1.0))
        throw std::invalid_argument("laplace_forward: trace undersampled near 0 for this lambda");
    auto f = [&](double t) { return trace.eval(t) * std::exp(-lambda * t); };
    const double t_end = trace.t_max();
    auto integral = integrate_panels(f, geometric_edges(0.0, t_end, opt.levels), opt.gl_order);
    auto tail = trace.values.back() * (std::exp(-lambda * t_end) / (lambda - trace.omega));
    return (integral + tail) * std::exp(kappa * std::log(lambda));
}

// ---------------------------------------------------------------------------
// Post-Widder inversion
//   S_kappa(t) = lim_n  (-1)^n/n! (n/t)^{n+1} (R(lambda)/lambda^kappa)^{(n)} |_{lambda = n/t}
// ---------------------------------------------------------------------------

template <class F>
typename F::Op post_widder(const F& fam, double t, double kappa, int n) {
    if (!(t > 0.0)) throw std::domain_error("post_widder: requires t > 0");
    if (n < 1) throw std::invalid_argument("post_widder: requires n >= 1");
    const double lambda = n / t;
    if (!fam.in_resolvent_set(Complex{lambda, 0.0}))
        throw std::domain_error("post_widder: lambda = n/t outside the resolvent half-line");
    const auto d = fam.resolvent_derivative_scaled(lambda, n, kappa);
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    const double log_pref = (n + 1.0) * std::log(lambda) - log_gamma(n + 1.0);
    return d.op * (sign * std::exp(log_pref + d.log_scale));
}

/// n-th derivative of R(lambda)/lambda^kappa through the time representation
///   (R(lambda)/lambda^kappa)^{(n)} = (-1)^n int_0^infty t^n e^{-lambda t} S_kappa(t) dt,
/// with S_kappa supplied as a callable.  Cross-checks the analytic evaluators.
template <class S>
auto resolvent_derivative_via_time(S&& s_kappa, double lambda, int n, double omega,
                                   double kappa_plus_alpha = 2.0, LaplaceOptions opt = {}) {
    if (!(lambda > omega) || !(lambda > 0.0))
        throw std::domain_error("resolvent_derivative_via_time: requires lambda > max(omega, 0)");
    // truncate where e^{(omega-lambda)T} T^{n+kappa+alpha} drops below tail_eps
    double t_max = 1.0;
    for (int it = 0; it < 200; ++it) {
        const double logv = (omega - lambda) * t_max + (n + kappa_plus_alpha) * std::log(t_max);
        if (logv < std::log(opt.tail_eps)) break;
        t_max *= 1.25;
    }
    auto f = [&](double t) { return s_kappa(t) * (std::pow(t, n) * std::exp(-lambda * t)); };
    auto val = integrate_panels(f, geometric_edges(0.0, t_max, opt.levels), opt.gl_order);
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    return val * sign;
}

// ---------------------------------------------------------------------------
// Derivative ladder  S_{sigma-k} = S_sigma^{(k)}
// ---------------------------------------------------------------------------

template <class Op>
struct LadderResult {
    Op direct;        // contour at order sigma - k
    Op differenced;   // k-fold finite difference of the order-sigma contour
    double discrepancy = 0.0;
};

/// Both routes to S_{sigma-k}(z): a direct contour with exponent sigma - k,
/// and central finite differencing of S_sigma along the ray through z.
template <class F>
LadderResult<typename F::Op> derivative_ladder(const F& fam, Complex z, double sigma, int k,
                                               const ContourSpec& spec) {
    if (k < 0) throw std::invalid_argument("derivative_ladder: k must be >= 0");
    LadderResult<typename F::Op> res{contour_invert(fam, z, sigma - k, spec),
                                     contour_invert(fam, z, sigma, spec), 0.0};
    if (k == 0) {
        res.discrepancy = fam.op_norm(res.direct - res.differenced);
        return res;
    }
    const Complex dir = z / std::abs(z);
    const double h = fd_step(1.0 + std::abs(fam.omega())) * std::min(1.0, std::abs(z) / 2.0);
    auto f = [&](double u) { return contour_invert(fam, z + (u - std::abs(z)) * dir, sigma, spec); };
    res.differenced = fd_derivative(f, std::abs(z), k, h);
    // d/du along the ray is dir * d/dz
    res.differenced = res.differenced * std::exp(-static_cast<double>(k) * std::log(dir));
    res.discrepancy = fam.op_norm(res.direct - res.differenced);
    return res;
}

}  // namespace intsemi
