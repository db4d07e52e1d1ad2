#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "intsemi/core.hpp"

namespace intsemi {

/// Spatial sample of the multiplication variable.  `refine` adds a local
/// cluster of extra points around a distinguished abscissa.
struct GridSpec {
    double x_min = 0.0;
    double x_max = 1.0;
    int n_points = 2;
    struct Refinement {
        double x_star;
        double factor = 10.0;  // local densification factor
    };
    std::optional<Refinement> refine;

    void validate() const {
        if (!(x_min < x_max)) throw std::invalid_argument("GridSpec: requires x_min < x_max");
        if (n_points < 2) throw std::invalid_argument("GridSpec: requires n_points >= 2");
        if (!std::isfinite(x_min) || !std::isfinite(x_max))
            throw std::invalid_argument("GridSpec: endpoints must be finite");
        if (refine && (refine->x_star < x_min || refine->x_star > x_max))
            throw std::invalid_argument("GridSpec: refinement point outside [x_min, x_max]");
    }

    std::vector<double> build() const {
        validate();
        std::vector<double> xs(n_points);
        const double h = (x_max - x_min) / (n_points - 1);
        for (int i = 0; i < n_points; ++i) xs[i] = x_min + h * i;
        xs.back() = x_max;
        if (refine) {
            // Two coarse cells on each side of x_star, sampled `factor` times finer.
            const double lo = std::max(x_min, refine->x_star - 2.0 * h);
            const double hi = std::min(x_max, refine->x_star + 2.0 * h);
            const int m = std::max(2, static_cast<int>(std::ceil((hi - lo) / h * refine->factor)));
            for (int i = 0; i <= m; ++i) xs.push_back(lo + (hi - lo) * i / m);
            std::sort(xs.begin(), xs.end());
            xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
        }
        return xs;
    }
};

/// Cluster of points around x_star covering [x_star/spread, x_star*spread]
/// geometrically; used for query-time densification near a norm maximizer.
inline std::vector<double> local_cluster(double x_star, double spread = 1.5, int n = 33) {
    std::vector<double> xs;
    if (!(x_star > 0.0) || !std::isfinite(x_star)) return xs;
    xs.reserve(n);
    const double lo = std::log(x_star / spread), hi = std::log(x_star * spread);
    for (int i = 0; i < n; ++i) xs.push_back(std::exp(lo + (hi - lo) * i / (n - 1)));
    return xs;
}

/// Logarithmic grid in x near 0 for functions on (0, 1]: x = e^{-s} with s
/// uniform on [0, s_max].  Stored in the s variable so that x values far
/// below the double underflow threshold remain representable.
struct LogGridSpec {
    double s_max = 50.0;
    int n_points = 2001;

    void validate() const {
        if (!(s_max > 0.0)) throw std::invalid_argument("LogGridSpec: requires s_max > 0");
        if (n_points < 2) throw std::invalid_argument("LogGridSpec: requires n_points >= 2");
    }

    std::vector<double> build_s() const {
        validate();
        std::vector<double> s(n_points);
        for (int i = 0; i < n_points; ++i) s[i] = s_max * i / (n_points - 1);
        return s;
    }
};

inline std::vector<double> log_spaced(double lo, double hi, int n) {
    if (!(lo > 0.0) || !(hi > lo) || n < 2) throw std::invalid_argument("log_spaced: bad range");
    std::vector<double> v(n);
    const double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < n; ++i) v[i] = std::exp(llo + (lhi - llo) * i / (n - 1));
    return v;
}

inline std::vector<double> lin_spaced(double lo, double hi, int n) {
    if (n < 2) throw std::invalid_argument("lin_spaced: need n >= 2");
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1);
    return v;
}

}  // namespace intsemi
