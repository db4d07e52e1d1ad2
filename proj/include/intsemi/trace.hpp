#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "intsemi/core.hpp"

namespace intsemi {

enum class MeshKind { uniform, graded, geometric, custom };

inline std::string mesh_kind_name(MeshKind m) {
    switch (m) {
        case MeshKind::uniform: return "uniform";
        case MeshKind::graded: return "graded";
        case MeshKind::geometric: return "geometric";
        default: return "custom";
    }
}

/// Graded mesh t_j = T (j/N)^gamma, j = 1..N; clusters at the origin.
inline std::vector<double> graded_mesh(double t_max, int n, double gamma) {
    if (!(t_max > 0.0) || n < 2 || !(gamma >= 1.0)) throw std::invalid_argument("graded_mesh: bad parameters");
    std::vector<double> t(n);
    for (int j = 1; j <= n; ++j) t[j - 1] = t_max * std::pow(static_cast<double>(j) / n, gamma);
    return t;
}

/// Sampled values of an order-sigma integrated semigroup (or any operator- or
/// scalar-valued function of time) along the ray t * direction, t > 0.
/// `omega` and `alpha` record the growth model ||S(t)|| <= M t^alpha e^{omega t}
/// used by Laplace tails.
template <class V>
struct TimeTrace {
    double order = 0.0;  // sigma
    double omega = 0.0;
    double alpha = 0.0;
    Complex direction{1.0, 0.0};
    MeshKind mesh = MeshKind::custom;
    std::vector<double> times;
    std::vector<V> values;

    void validate() const {
        if (times.size() != values.size()) throw std::invalid_argument("TimeTrace: size mismatch");
        if (times.size() < 2) throw std::invalid_argument("TimeTrace: need at least 2 samples");
        if (!(order >= 0.0)) throw std::invalid_argument("TimeTrace: order must be >= 0");
        for (std::size_t i = 0; i < times.size(); ++i) {
            if (!(times[i] > 0.0) || !std::isfinite(times[i]))
                throw std::invalid_argument("TimeTrace: times must be positive and finite");
            if (i > 0 && !(times[i] > times[i - 1]))
                throw std::invalid_argument("TimeTrace: times must be strictly increasing");
        }
    }

    double t_min() const { return times.front(); }
    double t_max() const { return times.back(); }

    /// Piecewise-linear interpolation; V(t) for t below the first sample is
    /// scaled down by (t/t_0)^order to respect the origin behavior.
    V eval(double t) const {
        if (t >= times.back()) return values.back();
        if (t <= times.front()) {
            const double f = order > 0.0 ? std::pow(t / times.front(), order) : 1.0;
            return values.front() * f;
        }
        const auto it = std::upper_bound(times.begin(), times.end(), t);
        const std::size_t i = static_cast<std::size_t>(it - times.begin());
        const double w = (t - times[i - 1]) / (times[i] - times[i - 1]);
        return values[i - 1] * (1.0 - w) + values[i] * w;
    }
};

using NormTrace = TimeTrace<double>;

template <class V, class F>
TimeTrace<V> trace_from_callable(F&& f, const std::vector<double>& times, double order,
                                 double omega, double alpha = 0.0, MeshKind mesh = MeshKind::custom) {
    TimeTrace<V> tr;
    tr.order = order;
    tr.omega = omega;
    tr.alpha = alpha;
    tr.mesh = mesh;
    tr.times = times;
    tr.values.reserve(times.size());
    for (double t : times) tr.values.push_back(f(t));
    tr.validate();
    return tr;
}

/// Norm trace of a family's semigroup or closed-form integrated semigroup.
template <class F>
NormTrace norm_trace(F&& norm_at, const std::vector<double>& times, double order, double omega) {
    return trace_from_callable<double>(norm_at, times, order, omega, 0.0, MeshKind::custom);
}

}  // namespace intsemi
