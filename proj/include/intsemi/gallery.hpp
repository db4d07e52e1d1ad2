#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "intsemi/core.hpp"
#include "intsemi/estimates.hpp"
#include "intsemi/families.hpp"
#include "intsemi/linalg.hpp"
#include "intsemi/quadrature.hpp"
#include "intsemi/trace.hpp"

namespace intsemi {

// ---------------------------------------------------------------------------
// Gaussian semigroup e^{z Laplacian} on L^p(R^n): closed-form norm sandwich
//   2^{-n/2p} (|z|/Re z)^{n|1/p - 1/2|} <= ||T_p(z)|| <= (|z|/Re z)^{n|1/p - 1/2|}
// ---------------------------------------------------------------------------

struct GaussianBoundQuery {
    double p = 2.0;      // p = inf allowed (use infinity())
    int n_dim = 1;
    Complex z{1.0, 0.0};

    void validate() const {
        if (!(p >= 1.0)) throw std::invalid_argument("GaussianBoundQuery: requires p >= 1");
        if (n_dim < 1) throw std::invalid_argument("GaussianBoundQuery: requires n_dim >= 1");
        if (!(z.real() > 0.0)) throw std::domain_error("GaussianBoundQuery: requires Re z > 0");
    }
    double exponent() const { return n_dim * std::abs(1.0 / p - 0.5); }  // p = inf -> 1/2
};

struct GaussianBounds {
    double lower = 0.0;
    double upper = 0.0;
};

inline GaussianBounds gaussian_bounds(const GaussianBoundQuery& q) {
    q.validate();
    const double ratio = std::abs(q.z) / q.z.real();
    const double upper = std::pow(ratio, q.exponent());
    const double pref = std::isinf(q.p) ? 1.0 : std::pow(2.0, -q.n_dim / (2.0 * q.p));
    return {pref * upper, upper};
}

/// Norm evaluator (the closed-form upper envelope) for sector scans.
inline std::function<double(Complex)> gaussian_norm_evaluator(double p, int n_dim) {
    return [p, n_dim](Complex z) {
        GaussianBoundQuery q{p, n_dim, z};
        return gaussian_bounds(q).upper;
    };
}

// ---------------------------------------------------------------------------
// beta-family classification (thresholds in beta)
// ---------------------------------------------------------------------------

enum class BetaClass { c0, class_1a, abel_only, no_resolvent };

inline std::string to_string(BetaClass c) {
    switch (c) {
        case BetaClass::c0: return "C0";
        case BetaClass::class_1a: return "class-(1,A)";
        case BetaClass::abel_only: return "Abel-summable-only";
        default: return "no-resolvent";
    }
}

struct BetaFamilyReport {
    double beta = 0.0;
    BetaClass classification = BetaClass::c0;
    double c_beta = 1.0;                 // sup_y y^{beta/2} e^{-y} = (beta/2)^{beta/2} e^{-beta/2}
    double rate_once_integrated = 1.0;   // origin exponent of ||S_1(t)||; NaN when undefined
};

inline BetaFamilyReport beta_classify(double beta) {
    if (!(beta >= 0.0)) throw std::invalid_argument("beta_classify: requires beta >= 0");
    BetaFamilyReport rep;
    rep.beta = beta;
    rep.c_beta = beta == 0.0 ? 1.0 : std::pow(beta / 2.0, beta / 2.0) * std::exp(-beta / 2.0);
    if (beta < 2.0)
        rep.classification = BetaClass::c0;
    else if (beta < 4.0)
        rep.classification = BetaClass::class_1a;
    else if (beta == 4.0)
        rep.classification = BetaClass::abel_only;
    else
        rep.classification = BetaClass::no_resolvent;

    if (beta > 4.0)
        rep.rate_once_integrated = std::numeric_limits<double>::quiet_NaN();
    else if (beta <= 2.0)
        rep.rate_once_integrated = 1.0;
    else
        rep.rate_once_integrated = 2.0 - beta / 2.0;
    return rep;
}

// ---------------------------------------------------------------------------
// Closed form of the once integrated beta family
//   s_1(x,z) = (1-e^{-zc})/c I + |x|^b N [ -z e^{-zc}/c + (1-e^{-zc})/c^2 ],
//   c = 1+x^2; admits Re z = 0 whenever beta <= 2.
// ---------------------------------------------------------------------------

inline CMatrix beta_s1_closed_form(double beta, Complex z, double x) {
    if (!(beta >= 0.0)) throw std::invalid_argument("beta_s1_closed_form: requires beta >= 0");
    if (!(z.real() > 0.0) && !(z.real() == 0.0 && beta <= 2.0))
        throw std::domain_error("beta_s1_closed_form: Re z = 0 requires beta <= 2");
    const double c = 1.0 + x * x;
    const Complex ez = std::exp(-z * c);
    const Complex diag = (1.0 - ez) / c;
    const double xb = std::abs(x) == 0.0 ? (beta == 0.0 ? 1.0 : 0.0) : std::pow(std::abs(x), beta);
    const Complex nilp = xb * (-z * ez / c + (1.0 - ez) / (c * c));
    CMatrix m(2);
    m(0, 0) = diag;
    m(1, 1) = diag;
    m(0, 1) = nilp;
    return m;
}

/// sup over the grid of the pointwise l1-induced norm |diag| + |nilp|.
inline double beta_s1_norm(double beta, Complex z, const std::vector<double>& xs) {
    double best = 0.0;
    for (double x : xs) {
        const CMatrix m = beta_s1_closed_form(beta, z, x);
        best = std::max(best, std::abs(m(0, 0)) + std::abs(m(0, 1)));
    }
    return best;
}

/// Once-integrated operator value over a BetaFamily grid, from the closed form.
inline BetaOp beta_s1_op(const BetaFamily& fam, Complex z) {
    BetaOp op(fam.grid().size());
    for (std::size_t i = 0; i < fam.grid().size(); ++i) {
        const CMatrix m = beta_s1_closed_form(fam.beta(), z, fam.grid()[i]);
        op.diag[i] = m(0, 0);
        op.nilp[i] = m(0, 1);
    }
    return op;
}

/// Norm trace of ||S_1(t)|| for rate fitting: the sup is taken over the grid
/// plus a local cluster at the small-t maximizer x ~ sqrt(1/t).
inline NormTrace beta_s1_norm_trace(double beta, const std::vector<double>& times,
                                    const std::vector<double>& xs) {
    NormTrace tr;
    tr.order = 1.0;
    tr.omega = 0.0;
    tr.mesh = MeshKind::custom;
    tr.times = times;
    for (double t : times) {
        double v = beta_s1_norm(beta, Complex{t, 0.0}, xs);
        for (double x : local_cluster(std::sqrt(std::max(beta, 1.0) / (2.0 * t)), 2.0, 49))
            v = std::max(v, beta_s1_norm(beta, Complex{t, 0.0}, {x}));
        tr.values.push_back(v);
    }
    tr.validate();
    return tr;
}

// ---------------------------------------------------------------------------
// Fractional power semigroup
//   B^{-z} = 1/(2 pi i) int_Gamma lambda^{-z} R(lambda, B) dlambda,  Re z > 0,
// for B with (-inf, 0] in the resolvent set and (1-lambda)||R(lambda,B)||
// bounded on the negative half-line.  Gamma is a wedge in rho(B) separating
// the branch cut (-inf, 0] from the spectrum, with vertex at half the
// spectral distance to the cut; the slow |lambda|^{-Re z} falloff is handled
// by log-radial panels up to a relative cutoff.
// ---------------------------------------------------------------------------

struct FracPowerOptions {
    double wedge_angle = kPi / 3.0;  // leg angle against the positive axis
    double rel_tol = 1e-9;
    int gl_order = 24;
    double vertex = 0.0;             // 0: choose from the sampled spectral distance
};

template <class F>
void check_fractional_power_preconditions(const F& fam) {
    for (double lam : {0.0, -0.5, -2.0, -10.0, -100.0, -1e4}) {
        if (!fam.in_resolvent_set(Complex{lam, 0.0}))
            throw std::domain_error("fractional_power: (-inf, 0] not in the resolvent set");
        const double v = (1.0 - lam) * fam.resolvent_norm(Complex{lam, 0.0});
        if (!(v < 1e6))
            throw std::domain_error("fractional_power: (1-lambda)||R(lambda)|| unbounded on (-inf, 0]");
    }
}

template <class F>
typename F::Op fractional_power_semigroup(const F& fam, Complex z, FracPowerOptions opt = {}) {
    if (!(z.real() > 0.0)) throw std::domain_error("fractional_power: requires Re z > 0");
    check_fractional_power_preconditions(fam);

    const double vertex = opt.vertex > 0.0 ? opt.vertex : 0.5;
    if (!fam.in_resolvent_set(Complex{vertex, 0.0}))
        throw std::domain_error("fractional_power: wedge vertex lands on the spectrum");

    // truncation: the tail of |lambda|^{-Re z - 1} beyond R contributes
    // ~ R^{-Re z}/Re z relative to the leading scale
    const double big_r =
        std::pow(opt.rel_tol * z.real(), -1.0 / z.real()) + 16.0 / std::max(z.real(), 0.25);

    using Op = typename F::Op;
    std::vector<Op> parts;
    // the wedge opens rightward around the spectrum; traversed from the upper
    // leg inward to the lower leg outward it encircles it counterclockwise
    for (const double sgn : {+1.0, -1.0}) {
        const Complex dir = std::exp(Complex{0.0, sgn * opt.wedge_angle});
        auto integrand = [&](double u) -> Op {
            const double rho = std::exp(u);
            const Complex lambda = vertex + rho * dir;
            const Complex w = std::exp(-z * std::log(lambda)) * dir * rho * (-sgn);
            return fam.resolvent_op(lambda) * w;
        };
        // log-radial panels from far below the vertex scale out to big_r
        const double u_lo = std::log(vertex) - 30.0;
        const double u_hi = std::log(big_r);
        const int n_panels = std::max(24, static_cast<int>((u_hi - u_lo) / 1.5));
        for (int i = 0; i < n_panels; ++i) {
            const double a = u_lo + (u_hi - u_lo) * i / n_panels;
            const double b = u_lo + (u_hi - u_lo) * (i + 1) / n_panels;
            parts.push_back(gl_panel(integrand, a, b, opt.gl_order));
        }
    }
    const Complex norm_factor = 1.0 / Complex{0.0, 2.0 * kPi};
    return pairwise_sum(std::move(parts)) * norm_factor;
}

// ---------------------------------------------------------------------------
// Singular family diagnostics
// ---------------------------------------------------------------------------

struct RangeDefectReport {
    double beta = 0.0;
    double t = 0.0;
    bool degenerate = false;         // beta = 0: constants are annihilated
    double tail_decay = 0.0;         // sup |[T(t)f](x)| over the smallest sampled x
    double abel_defect_f0 = 0.0;     // ||lambda R(lambda) f - f|| for f == 1
    double abel_defect_vanishing = 0.0;  // same for f with f(0) = 0
    double lambda_used = 0.0;
};

/// Non-dense-range indicators: T(t)f vanishes at x -> 0+ for every f, and
/// Abel convergence lambda R(lambda) f -> f fails exactly on f(0) != 0.
inline RangeDefectReport singular_range_defect(const SingularC01Family& fam, double t,
                                               double lambda = 1e3) {
    if (!(t > 0.0)) throw std::invalid_argument("singular_range_defect: requires t > 0");
    RangeDefectReport rep;
    rep.beta = fam.beta();
    rep.t = t;
    rep.degenerate = fam.degenerate();
    rep.lambda_used = lambda;

    const auto ones = fam.sample([](double) { return Complex{1.0, 0.0}; });
    const auto vanishing = fam.sample([](double x) { return Complex{x, 0.0}; });

    const auto tf = fam.apply_semigroup(Complex{t, 0.0}, ones);
    // largest s = smallest x: the tail of the sample
    const std::size_t n = fam.s_grid().size();
    double tail = 0.0;
    for (std::size_t i = n - std::min<std::size_t>(n, 8) + 1; i <= n; ++i)
        tail = std::max(tail, std::abs(tf[i]));
    rep.tail_decay = tail;

    auto defect = [&](const CVector& f) {
        const auto rf = fam.resolvent_apply(Complex{lambda, 0.0}, f);
        double worst = 0.0;
        for (std::size_t i = 0; i < f.size(); ++i)
            worst = std::max(worst, std::abs(lambda * rf[i] - f[i]));
        return worst;
    };
    rep.abel_defect_f0 = defect(ones);
    rep.abel_defect_vanishing = defect(vanishing);
    return rep;
}

/// Norm trace of the singular semigroup in the s variable:
///   ||T(z)|| ~ sup_s e^{-Re z s} (1 + s^beta), computed on the family grid.
inline NormTrace singular_norm_trace(const SingularC01Family& fam,
                                     const std::vector<double>& times) {
    NormTrace tr;
    tr.order = 0.0;
    tr.omega = 0.0;
    tr.mesh = MeshKind::custom;
    tr.times = times;
    for (double t : times) tr.values.push_back(fam.semigroup_norm(Complex{t, 0.0}));
    tr.validate();
    return tr;
}

// ---------------------------------------------------------------------------
// Gallery manifest: one row per (family, parameter, claim)
// ---------------------------------------------------------------------------

struct GalleryRow {
    std::string family;
    double parameter = 0.0;
    std::string claim;
    double measured = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    bool expected_failure = false;
    std::string note;
};

}  // namespace intsemi
