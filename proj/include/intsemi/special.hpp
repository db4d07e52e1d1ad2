#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "intsemi/core.hpp"

namespace intsemi {

inline double log_gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("log_gamma: requires x > 0");
    return std::lgamma(x);
}

inline double gamma_fn(double x) { return std::tgamma(x); }

/// log of the Pochhammer symbol (a)_j = a(a+1)...(a+j-1).  (a)_0 = 1.
/// For a == 0 and j >= 1 the product vanishes: returns -inf.
inline double log_pochhammer(double a, int j) {
    if (j < 0) throw std::invalid_argument("log_pochhammer: j < 0");
    if (j == 0) return 0.0;
    if (a == 0.0) return -kInf;
    if (a < 0.0) throw std::domain_error("log_pochhammer: a < 0 unsupported");
    return std::lgamma(a + j) - std::lgamma(a);
}

inline double log_binomial(int n, int k) {
    if (k < 0 || k > n) return -kInf;
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

inline double binomial(int n, int k) { return std::exp(log_binomial(n, k)); }

/// (n-1)(n-2)...(n-j) as an exact double product (j factors, falling from n-1).
inline double falling_factorial(double n_minus_1, int j) {
    double p = 1.0;
    for (int i = 0; i < j; ++i) p *= (n_minus_1 - i);
    return p;
}

namespace detail {
/// Solve the small dense real system A w = b by Gauss elimination with
/// partial pivoting.  Used only for finite-difference stencil weights.
inline std::vector<double> solve_dense(std::vector<double> a, std::vector<double> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col])) piv = r;
        if (a[piv * n + col] == 0.0) throw numeric_error("solve_dense: singular matrix");
        if (piv != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a[col * n + c], a[piv * n + c]);
            std::swap(b[col], b[piv]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a[r * n + col] / a[col * n + col];
            for (std::size_t c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t c = i + 1; c < n; ++c) s -= a[i * n + c] * x[c];
        x[i] = s / a[i * n + i];
    }
    return x;
}
}  // namespace detail

/// Central finite-difference weights for the k-th derivative on the symmetric
/// stencil {-m..m}h: solve sum_j w_j j^p = k! [p == k] for p = 0..2m.
inline std::vector<double> fd_weights(int k, int m) {
    if (k < 0 || m < 1 || 2 * m < k) throw std::invalid_argument("fd_weights: need 2m >= k >= 0");
    const int n = 2 * m + 1;
    std::vector<double> vand(static_cast<std::size_t>(n) * n), rhs(n, 0.0);
    for (int p = 0; p < n; ++p)
        for (int j = -m; j <= m; ++j) vand[p * n + (j + m)] = std::pow(static_cast<double>(j), p);
    rhs[k] = gamma_fn(k + 1.0);
    return detail::solve_dense(std::move(vand), std::move(rhs));
}

/// k-th derivative of f at x by a high-order central stencil.  The default
/// half-width m = 5 (11 nodes) balances truncation against roundoff for the
/// derivative orders used here (k <= 4).
template <class F>
auto fd_derivative(F&& f, double x, int k, double h, int m = 5) {
    const auto w = fd_weights(k, m);
    auto acc = f(x - m * h) * w[0];
    for (int j = -m + 1; j <= m; ++j) acc = acc + f(x + j * h) * w[j + m];
    return acc * (1.0 / std::pow(h, k));
}

/// Step size for fd_derivative given the local log-derivative scale of f,
/// i.e. |f'/f| ~ scale.  h = 0.2/scale keeps (h*scale)^8 truncation and
/// cancellation roundoff both near 1e-9 for the m = 5 stencil.
inline double fd_step(double scale) { return 0.2 / std::max(scale, 1e-12); }

}  // namespace intsemi
