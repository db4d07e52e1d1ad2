#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "intsemi/core.hpp"
#include "intsemi/families.hpp"
#include "intsemi/grid.hpp"
#include "intsemi/quadrature.hpp"
#include "intsemi/special.hpp"
#include "intsemi/trace.hpp"

namespace intsemi {

// ---------------------------------------------------------------------------
// Hille-Yosida sup scan over
//   v(n, lambda) = (lambda - omega)^{n+alpha+1} / Gamma(n+alpha+1)
//                  * || (R(lambda)/lambda^kappa)^{(n)} ||
// The sup over an infinite set is decided from finite evidence: the verdict
// is "bounded" when the per-n maxima plateau and no slice still grows at a
// lambda-grid edge, "growing"/"trivial-forced" otherwise.
// ---------------------------------------------------------------------------

enum class HYVerdict { bounded, growing, trivial_forced };

inline std::string to_string(HYVerdict v) {
    switch (v) {
        case HYVerdict::bounded: return "bounded";
        case HYVerdict::growing: return "growing";
        default: return "trivial-forced";
    }
}

struct HYScanParams {
    double kappa = 0.0;
    double alpha = 0.0;
    double omega = 0.0;
    double a = 0.0;           // scan base point; lambda grid lives in (a, inf)
    int n_max = 64;
    int n_lambda = 200;
    double lambda_lo = 1e-3;  // offsets from a, log spaced
    double lambda_hi = 1e4;
    bool allow_a_below_gauge = false;

    void validate() const {
        if (!(kappa >= 0.0) || !(alpha >= 0.0)) throw std::invalid_argument("hy_scan: kappa, alpha >= 0");
        if (!allow_a_below_gauge && !(a >= std::max(omega, 0.0)))
            throw std::invalid_argument("hy_scan: requires a >= max(omega, 0)");
        if (n_max < 4 || n_lambda < 8) throw std::invalid_argument("hy_scan: scan extents too small");
    }
};

struct HYReport {
    HYScanParams params;
    double sup_value = 0.0;
    int argmax_n = 0;
    double argmax_lambda = 0.0;
    HYVerdict verdict = HYVerdict::bounded;
    HYVerdict even_subset_verdict = HYVerdict::bounded;  // weaker scan over even n only
    std::vector<double> per_n_max;       // max over the lambda grid, per n
    double lambda_growth_factor = 1.0;   // max over n of v(n, lambda_hi)/v(n, lambda_lo)
    double slice_growth_min = 1.0;       // min over n of the same ratio
    double upper_edge_ratio = 1.0;       // median slice growth across the top lambda decade
    double lower_edge_ratio = 1.0;       // median slice growth toward the bottom edge
    std::vector<double> lambda_grid;
    std::string notes;

    bool bounded() const { return verdict == HYVerdict::bounded; }
};

namespace detail {
inline double median_of(std::vector<double> v) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

inline HYVerdict hy_verdict(const std::vector<double>& per_n_max, double upper_edge,
                            double lower_edge, double alpha, double kappa) {
    // plateau: per-n maxima vary < 5% across the last quarter of the n range
    const std::size_t q = per_n_max.size() - per_n_max.size() / 4;
    double lo = kInf, hi = -kInf;
    for (std::size_t i = q; i < per_n_max.size(); ++i) {
        lo = std::min(lo, per_n_max[i]);
        hi = std::max(hi, per_n_max[i]);
    }
    const bool plateau = hi <= lo * 1.05;
    // growth in n across the top half
    const std::size_t h = per_n_max.size() / 2;
    double top_growth = 0.0;
    for (std::size_t i = h; i < per_n_max.size(); ++i)
        top_growth = std::max(top_growth, per_n_max[i] / std::max(per_n_max[h], 1e-300));
    const bool n_growing = top_growth > 1.05 && per_n_max.back() > per_n_max[h];
    const bool lambda_growing = upper_edge > 1.2 || lower_edge > 1.2;

    if (!lambda_growing && (plateau || !n_growing)) return HYVerdict::bounded;
    if (alpha > kappa) return HYVerdict::trivial_forced;
    return HYVerdict::growing;
}
}  // namespace detail

template <class F>
HYReport hy_scan(const F& fam, HYScanParams p) {
    p.validate();
    HYReport rep;
    rep.params = p;
    rep.lambda_grid = log_spaced(p.lambda_lo, p.lambda_hi, p.n_lambda);
    for (auto& l : rep.lambda_grid) l += p.a;

    const int n_count = p.n_max + 1;
    std::vector<std::vector<double>> logv(n_count, std::vector<double>(p.n_lambda));
    rep.per_n_max.assign(n_count, 0.0);
    double best = -kInf;
    for (int n = 0; n <= p.n_max; ++n) {
        double row_best = -kInf;
        for (int i = 0; i < p.n_lambda; ++i) {
            const double lambda = rep.lambda_grid[i];
            const double lv = (n + p.alpha + 1.0) * std::log(lambda - p.omega) -
                              log_gamma(n + p.alpha + 1.0) +
                              fam.resolvent_derivative_log_norm(lambda, n, p.kappa);
            logv[n][i] = lv;
            if (lv > row_best) row_best = lv;
            if (lv > best) {
                best = lv;
                rep.argmax_n = n;
                rep.argmax_lambda = lambda;
            }
        }
        rep.per_n_max[n] = std::exp(row_best);
    }
    rep.sup_value = std::exp(best);

    // edge diagnostics: does any slice still grow at the grid boundary?
    const int dec = std::max(2, static_cast<int>(p.n_lambda * std::log(10.0) /
                                                 std::log(p.lambda_hi / p.lambda_lo)));
    std::vector<double> up, down, growth;
    for (int n = 0; n <= p.n_max; ++n) {
        up.push_back(std::exp(logv[n][p.n_lambda - 1] - logv[n][p.n_lambda - 1 - dec]));
        down.push_back(std::exp(logv[n][0] - logv[n][dec]));
        growth.push_back(std::exp(logv[n][p.n_lambda - 1] - logv[n][0]));
    }
    rep.upper_edge_ratio = detail::median_of(up);
    rep.lower_edge_ratio = detail::median_of(down);
    rep.lambda_growth_factor = *std::max_element(growth.begin(), growth.end());
    rep.slice_growth_min = *std::min_element(growth.begin(), growth.end());

    rep.verdict = detail::hy_verdict(rep.per_n_max, rep.upper_edge_ratio, rep.lower_edge_ratio,
                                     p.alpha, p.kappa);

    std::vector<double> even_max;
    for (int n = 0; n <= p.n_max; n += 2) even_max.push_back(rep.per_n_max[n]);
    rep.even_subset_verdict = detail::hy_verdict(even_max, rep.upper_edge_ratio,
                                                 rep.lower_edge_ratio, p.alpha, p.kappa);
    return rep;
}

// ---------------------------------------------------------------------------
// Origin-rate fit: least-squares slope of log(||S(t)|| e^{-omega t}) against
// log t over an automatically chosen window.
// ---------------------------------------------------------------------------

struct RateFit {
    double alpha_hat = 0.0;
    double t_lo = 0.0, t_hi = 0.0;
    double r_squared = 0.0;
    double residual_max = 0.0;
    double omega_used = 0.0;
    int n_points = 0;
};

struct RateFitOptions {
    double window_min = 1e-4;
    double window_max = 1e-1;
    double curvature_threshold = 0.08;  // max |second difference| of the log-log data
    int min_points = 10;
};

namespace detail {
struct LineFit {
    double slope, intercept, r2, max_resid;
};
inline LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double denom = n * sxx - sx * sx;
    LineFit f{};
    f.slope = (n * sxy - sx * sy) / denom;
    f.intercept = (sy - f.slope * sx) / n;
    double ss_res = 0, ss_tot = 0;
    const double ymean = sy / n;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - (f.slope * x[i] + f.intercept);
        ss_res += r * r;
        ss_tot += (y[i] - ymean) * (y[i] - ymean);
        f.max_resid = std::max(f.max_resid, std::abs(r));
    }
    f.r2 = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
    return f;
}
}  // namespace detail

inline RateFit fit_origin_rate(const NormTrace& trace, double omega, RateFitOptions opt = {}) {
    trace.validate();
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < trace.times.size(); ++i) {
        const double t = trace.times[i];
        if (t < opt.window_min || t > opt.window_max) continue;
        const double v = trace.values[i] * std::exp(-omega * t);
        if (!(v > 0.0)) throw std::domain_error("fit_origin_rate: nonpositive norm in window");
        lx.push_back(std::log(t));
        ly.push_back(std::log(v));
    }
    if (static_cast<int>(lx.size()) < opt.min_points)
        throw std::invalid_argument("fit_origin_rate: too few samples in the fit window");

    // dyadic windows [hi/ratio, hi], screened by log-log curvature.  The
    // exponent is an asymptotic t -> 0 quantity, so among windows whose r2
    // ties with the best (within 2e-4) the one closest to the origin wins;
    // screened windows serve only as a fallback.
    struct Candidate {
        detail::LineFit fit;
        double lo, hi;
        int n;
        bool screened;
    };
    std::vector<Candidate> cands;
    for (double hi = opt.window_max; hi > 8.0 * opt.window_min; hi *= 0.5) {
        for (double ratio : {8.0, 16.0, 32.0, 64.0, 1024.0}) {
            const double lo = std::max(hi / ratio, opt.window_min);
            std::vector<double> wx, wy;
            for (std::size_t i = 0; i < lx.size(); ++i)
                if (lx[i] >= std::log(lo) && lx[i] <= std::log(hi)) {
                    wx.push_back(lx[i]);
                    wy.push_back(ly[i]);
                }
            if (static_cast<int>(wx.size()) < opt.min_points) continue;
            double curv = 0.0;
            for (std::size_t i = 1; i + 1 < wx.size(); ++i) {
                const double d1 = (wy[i] - wy[i - 1]) / (wx[i] - wx[i - 1]);
                const double d2 = (wy[i + 1] - wy[i]) / (wx[i + 1] - wx[i]);
                curv = std::max(curv, std::abs(d2 - d1));
            }
            cands.push_back({detail::fit_line(wx, wy), std::exp(wx.front()), std::exp(wx.back()),
                             static_cast<int>(wx.size()), curv > opt.curvature_threshold});
        }
    }
    if (cands.empty()) throw numeric_error("fit_origin_rate: no usable window");

    double best_r2 = -kInf;
    bool any_clean = false;
    for (const auto& c : cands)
        if (!c.screened) {
            any_clean = true;
            best_r2 = std::max(best_r2, c.fit.r2);
        }
    const Candidate* pick = nullptr;
    for (const auto& c : cands) {
        if (any_clean && c.screened) continue;
        if (any_clean && c.fit.r2 < best_r2 - 2e-4) continue;
        if (!pick || c.hi < pick->hi || (c.hi == pick->hi && c.fit.r2 > pick->fit.r2)) pick = &c;
    }

    RateFit best;
    best.omega_used = omega;
    best.alpha_hat = pick->fit.slope;
    best.t_lo = pick->lo;
    best.t_hi = pick->hi;
    best.r_squared = pick->fit.r2;
    best.residual_max = pick->fit.max_resid;
    best.n_points = pick->n;
    return best;
}

// ---------------------------------------------------------------------------
// Sector estimates
//   (E1_{a,b})  ||T(z)||        <= M e^{w|z|} |z|^a / (Re z)^{a+b},  Re z > 0
//   (E2_{g,d})  ||S_{g+d}(z)||  <= M e^{w|z|} |z|^g,                 Re z >= 0
//   (E3_{s,g,d})||S_s(z)||      <= M e^{w|z|} |z|^g / (Re z)^{g+d-s}, Re z > 0
// Scanned on rays x radii; a point is a violation when the required constant
// still grows toward a grid edge along its ray for every omega tried.
// ---------------------------------------------------------------------------

enum class EstimateKind { E1, E2, E3 };

struct SectorGrid {
    int n_rays = 24;
    int n_radii = 40;
    double r_lo = 1e-3;
    double r_hi = 1e2;
    double angle_margin = 0.05;  // rays cover |arg z| <= pi/2 - margin
    bool include_boundary = false;  // add |arg z| = pi/2 samples (E2)

    std::vector<Complex> build() const {
        if (n_rays < 2 || n_radii < 4) throw std::invalid_argument("SectorGrid: too small");
        std::vector<Complex> pts;
        const auto radii = log_spaced(r_lo, r_hi, n_radii);
        for (int k = 0; k < n_rays; ++k) {
            const double ang = -(kPi / 2 - angle_margin) +
                               (kPi - 2 * angle_margin) * k / (n_rays - 1);
            for (double r : radii) pts.push_back(std::polar(r, ang));
        }
        if (include_boundary) {
            for (double r : radii) pts.push_back(Complex{0.0, r});
            for (double r : radii) pts.push_back(Complex{0.0, -r});
        }
        return pts;
    }
};

struct SectorViolation {
    Complex z;
    double required_m;
};

struct SectorReport {
    EstimateKind kind = EstimateKind::E1;
    std::vector<double> exponents;
    double best_m = 0.0;
    double best_omega = 0.0;
    bool pass = false;
    std::vector<SectorViolation> violations;
    std::string grid_note;
};

namespace detail {
/// log of the required constant at z for a given estimate and omega.
inline double sector_log_required(EstimateKind kind, const std::vector<double>& ex, Complex z,
                                  double log_norm, double omega) {
    const double az = std::abs(z), rez = z.real();
    switch (kind) {
        case EstimateKind::E1:
            return log_norm - omega * az - ex[0] * std::log(az) +
                   (ex[0] + ex[1]) * std::log(rez);
        case EstimateKind::E2:
            return log_norm - omega * az - ex[0] * std::log(az);
        default:  // E3 with exponents {sigma, gamma, delta}
            return log_norm - omega * az - ex[1] * std::log(az) +
                   (ex[1] + ex[2] - ex[0]) * std::log(rez);
    }
}
}  // namespace detail

/// Scan a norm evaluator against a sector estimate.  Two-pass fit: for each
/// omega on the candidate grid the constant M(omega) is the max required
/// value; the reported pair is the smallest omega whose per-ray edge slopes
/// show no residual growth, with its M.
inline SectorReport sector_scan(const std::function<double(Complex)>& norm_at, EstimateKind kind,
                                std::vector<double> exponents, const SectorGrid& grid,
                                std::vector<double> omega_grid = {0.0, 0.25, 0.5, 1.0, 2.0, 4.0}) {
    const auto pts = grid.build();
    std::vector<double> log_norms(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const double v = norm_at(pts[i]);
        log_norms[i] = v > 0.0 ? std::log(v) : -kInf;
    }

    SectorReport rep;
    rep.kind = kind;
    rep.exponents = exponents;
    rep.grid_note = std::to_string(grid.n_rays) + " rays x " + std::to_string(grid.n_radii) +
                    " radii, r in [" + std::to_string(grid.r_lo) + ", " + std::to_string(grid.r_hi) + "]";

    const int nr = grid.n_radii;
    const int edge = std::max(4, nr / 4);
    auto scan_omega = [&](double omega, std::vector<SectorViolation>& out_viol) -> double {
        double max_log_m = -kInf;
        out_viol.clear();
        std::vector<double> lr(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) {
            lr[i] = detail::sector_log_required(kind, exponents, pts[i], log_norms[i], omega);
            max_log_m = std::max(max_log_m, lr[i]);
        }
        // per-ray edge growth: slope of log(required M) vs log r over the
        // `edge` smallest / largest radii (boundary rays, if present, sit in
        // separate trailing blocks and are checked the same way)
        const std::size_t n_blocks = pts.size() / nr;
        for (std::size_t b = 0; b < n_blocks; ++b) {
            const std::size_t base = b * nr;
            std::vector<double> xs, ys;
            for (int i = 0; i < edge; ++i) {
                xs.push_back(std::log(std::abs(pts[base + i])));
                ys.push_back(lr[base + i]);
            }
            auto low = detail::fit_line(xs, ys);
            if (low.slope < -0.05) {
                for (int i = 0; i < edge; ++i)
                    out_viol.push_back({pts[base + i], std::exp(lr[base + i])});
            }
            xs.clear();
            ys.clear();
            for (int i = nr - edge; i < nr; ++i) {
                xs.push_back(std::log(std::abs(pts[base + i])));
                ys.push_back(lr[base + i]);
            }
            auto high = detail::fit_line(xs, ys);
            if (high.slope > 0.05) {
                for (int i = nr - edge; i < nr; ++i)
                    out_viol.push_back({pts[base + i], std::exp(lr[base + i])});
            }
        }
        return max_log_m;
    };

    std::sort(omega_grid.begin(), omega_grid.end());
    std::vector<SectorViolation> viol, best_viol;
    std::size_t best_count = static_cast<std::size_t>(-1);
    for (double omega : omega_grid) {
        const double log_m = scan_omega(omega, viol);
        if (viol.empty()) {
            rep.best_omega = omega;
            rep.best_m = std::exp(log_m);
            rep.pass = true;
            rep.violations.clear();
            return rep;
        }
        if (viol.size() < best_count) {
            best_count = viol.size();
            best_viol = viol;
            rep.best_omega = omega;
            rep.best_m = std::exp(log_m);
        }
    }
    rep.pass = false;
    rep.violations = std::move(best_viol);
    return rep;
}

// ---------------------------------------------------------------------------
// Boundary values by the path representation
//   S_sigma(z) = 1/Gamma(sigma) int_path (z - s)^{sigma-1} T(s) ds
// over the two-leg path: the segment [0, |z|] followed by the arc
// |z| e^{i theta}, theta from 0 to arg z.  Converges up to the imaginary axis
// provided sigma exceeds alpha + beta of the family's half-plane bound.
// ---------------------------------------------------------------------------

struct PathIntegralOptions {
    int gl_order = 20;
    int levels = 44;  // geometric refinement at singular path ends
};

template <class F>
double boundary_threshold(const F& fam) {
    const auto [alpha, beta] = fam.e1_exponents();
    return alpha + beta;
}

/// S_sigma(z) for Re z >= 0 (including z on the imaginary axis).
template <class F>
typename F::Op time_path_integrated(const F& fam, Complex z, double sigma,
                                    PathIntegralOptions opt = {}) {
    if (!(sigma > 0.0)) throw std::invalid_argument("time_path_integrated: requires sigma > 0");
    if (!(z.real() >= 0.0) || z == Complex{})
        throw std::domain_error("time_path_integrated: requires Re z >= 0, z != 0");
    const double thr = boundary_threshold(fam);
    if (z.real() == 0.0 && !(sigma > thr))
        throw std::domain_error("time_path_integrated: boundary requires sigma > alpha + beta = " +
                                std::to_string(thr));

    using Op = typename F::Op;
    const double r = std::abs(z);
    const double ginv = 1.0 / gamma_fn(sigma);
    const double psi = std::arg(z);

    // leg 1: s in (0, r]; T may blow up like s^{-beta_eff} at s -> 0
    auto leg1 = [&](double s) -> Op {
        const Complex w = std::exp((sigma - 1.0) * std::log(z - s));
        return fam.semigroup_op(Complex{s, 0.0}) * w;
    };
    Op total = integrate_panels(leg1, geometric_edges(0.0, r, opt.levels), opt.gl_order);

    if (psi != 0.0) {
        // leg 2: s = r e^{i th}, th from 0 to psi; singular at th -> psi where
        // both (z - s)^{sigma-1} and ||T(s)|| (for boundary z) degenerate
        auto leg2 = [&](double th) -> Op {
            const Complex s = std::polar(r, th);
            const Complex ds = Complex{0.0, 1.0} * s;
            const Complex w = std::exp((sigma - 1.0) * std::log(z - s)) * ds;
            return fam.semigroup_op(s) * w;
        };
        const auto edges = psi > 0.0 ? geometric_edges_right(0.0, psi, opt.levels)
                                     : geometric_edges(psi, 0.0, opt.levels);
        Op arc = integrate_panels(leg2, edges, opt.gl_order);
        total = total + arc;
    }
    return total * ginv;
}

/// Boundary trace S_sigma(i t) for real t != 0.
template <class F>
typename F::Op boundary_values(const F& fam, double t_imag, double sigma,
                               PathIntegralOptions opt = {}) {
    if (t_imag == 0.0) throw std::domain_error("boundary_values: t must be nonzero");
    return time_path_integrated(fam, Complex{0.0, t_imag}, sigma, opt);
}

// ---------------------------------------------------------------------------
// Integrated group bound on the imaginary axis:
//   ||S_sigma(it)|| <= M e^{w|t|} |t|^{sigma-delta}
// ---------------------------------------------------------------------------

struct GroupCheckReport {
    double sigma = 0.0;
    double delta = 0.0;
    double best_m = 0.0;
    double best_omega = 0.0;
    bool pass = false;
    std::vector<double> t_grid;
    std::vector<double> norms;
};

template <class F>
GroupCheckReport group_check(const F& fam, double sigma, const std::vector<double>& t_grid,
                             double delta, std::vector<double> omega_grid = {0.0, 0.5, 1.0, 2.0}) {
    GroupCheckReport rep;
    rep.sigma = sigma;
    rep.delta = delta;
    rep.t_grid = t_grid;
    for (double t : t_grid) rep.norms.push_back(fam.op_norm(boundary_values(fam, t, sigma)));

    double best = kInf;
    for (double omega : omega_grid) {
        double m = 0.0;
        for (std::size_t i = 0; i < t_grid.size(); ++i) {
            const double t = std::abs(t_grid[i]);
            m = std::max(m, rep.norms[i] * std::exp(-omega * t) / std::pow(t, sigma - delta));
        }
        if (m < best) {
            best = m;
            rep.best_omega = omega;
            rep.best_m = m;
        }
    }
    rep.pass = std::isfinite(rep.best_m);
    return rep;
}

}  // namespace intsemi
