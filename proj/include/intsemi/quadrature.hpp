#pragma once

#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

#include "intsemi/core.hpp"

namespace intsemi {

/// Gauss-Legendre rule on [-1, 1].  Nodes/weights by Newton iteration on the
/// Legendre recurrence; tables are cached per order.
struct GaussLegendreRule {
    std::vector<double> x;
    std::vector<double> w;
};

inline const GaussLegendreRule& gauss_legendre(int n) {
    static std::map<int, GaussLegendreRule> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");

    GaussLegendreRule rule;
    rule.x.resize(n);
    rule.w.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Tricomi initial guess, then Newton on P_n.
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.x[i] = -x;
        rule.x[n - 1 - i] = x;
        rule.w[i] = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.w[n - 1 - i] = rule.w[i];
    }
    return cache.emplace(n, std::move(rule)).first->second;
}

/// One Gauss-Legendre panel over [a, b].  Works for any value type closed
/// under v + v and v * double.
template <class F>
auto gl_panel(F&& f, double a, double b, int order = 24) {
    const auto& r = gauss_legendre(order);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    auto acc = f(mid + half * r.x[0]) * r.w[0];
    for (int i = 1; i < order; ++i) acc = acc + f(mid + half * r.x[i]) * r.w[i];
    return acc * half;
}

/// Composite rule over a list of panel edges, reduced pairwise for a
/// traversal-independent result.
template <class F>
auto integrate_panels(F&& f, const std::vector<double>& edges, int order = 24) {
    if (edges.size() < 2) throw std::invalid_argument("integrate_panels: need >= 2 edges");
    using V = decltype(gl_panel(f, edges[0], edges[1], order));
    std::vector<V> parts;
    parts.reserve(edges.size() - 1);
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
        parts.push_back(gl_panel(f, edges[i], edges[i + 1], order));
    return pairwise_sum(std::move(parts));
}

/// Panel edges on [a, b] refined geometrically toward `a`: the first panel has
/// width (b-a)*2^-levels and widths double moving away from the endpoint.
/// Resolves integrable endpoint singularities u^p, p > -1, to near machine
/// precision with ~levels panels.
inline std::vector<double> geometric_edges(double a, double b, int levels = 40) {
    if (!(b > a)) throw std::invalid_argument("geometric_edges: need b > a");
    std::vector<double> e;
    e.reserve(levels + 2);
    e.push_back(a);
    for (int k = levels; k >= 0; --k) e.push_back(a + (b - a) * std::ldexp(1.0, -k));
    e.back() = b;
    return e;
}

/// Same refinement toward the right endpoint `b`.
inline std::vector<double> geometric_edges_right(double a, double b, int levels = 40) {
    auto e = geometric_edges(0.0, b - a, levels);
    std::vector<double> out(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) out[i] = b - e[e.size() - 1 - i];
    out.front() = a;
    return out;
}

inline std::vector<double> geometric_edges_both(double a, double b, int levels = 40) {
    const double mid = 0.5 * (a + b);
    auto left = geometric_edges(a, mid, levels);
    auto right = geometric_edges_right(mid, b, levels);
    left.insert(left.end(), right.begin() + 1, right.end());
    return left;
}

/// Integrate f over [a, b] with a weak singularity u^{p} (p > -1) at the left
/// endpoint, via the exactness substitution u = a + v^{1/(p+1)}:
///   (u-a)^p du = dv / (p+1).
/// `f` here is the full integrand including the singular factor; `p` is the
/// singular exponent it carries.
template <class F>
auto integrate_left_singular(F&& f, double a, double b, double p, int order = 24, int levels = 40) {
    if (!(p > -1.0)) throw std::invalid_argument("integrate_left_singular: need p > -1");
    const double q = p + 1.0;
    auto g = [&](double v) {
        const double u = a + std::pow(v, 1.0 / q);
        return f(u) * (std::pow(v, 1.0 / q - 1.0) / q);
    };
    return integrate_panels(g, geometric_edges(0.0, std::pow(b - a, q), levels), order);
}

}  // namespace intsemi
