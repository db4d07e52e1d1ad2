#pragma once

#include <complex>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace intsemi {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Raised when a numerical guarantee cannot be met (tail bound too large,
/// quadrature depth exhausted, overflow guard tripped).
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

/// A point of the closed right half-plane used as a semigroup time argument.
/// re == 0 is the boundary case; families that lack boundary values reject it.
struct ComplexTime {
    double re = 0.0;
    double im = 0.0;

    ComplexTime() = default;
    ComplexTime(double re_, double im_ = 0.0) : re(re_), im(im_) {
        if (!(re >= 0.0))
            throw std::domain_error("ComplexTime: requires Re z >= 0, got " + std::to_string(re_));
    }
    ComplexTime(Complex z) : ComplexTime(z.real(), z.imag()) {}  // NOLINT(google-explicit-constructor)

    Complex value() const { return {re, im}; }
    operator Complex() const { return value(); }  // NOLINT(google-explicit-constructor)
    bool on_boundary() const { return re == 0.0; }
};

inline bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

/// Deterministic pairwise (tree) reduction. Used wherever many quadrature
/// contributions are combined, so results do not depend on traversal order.
template <class V>
V pairwise_sum(std::vector<V> xs) {
    if (xs.empty()) throw std::invalid_argument("pairwise_sum: empty");
    std::size_t n = xs.size();
    while (n > 1) {
        std::size_t half = n / 2;
        for (std::size_t i = 0; i < half; ++i) xs[i] = xs[2 * i] + xs[2 * i + 1];
        if (n % 2 == 1) {
            xs[half] = xs[n - 1];
            ++half;
        }
        n = half;
    }
    return xs[0];
}

/// log(exp(a) + exp(b)) without overflow; -inf acts as the additive zero.
inline double log_add_exp(double a, double b) {
    if (a == -kInf) return b;
    if (b == -kInf) return a;
    const double m = std::max(a, b);
    return m + std::log1p(std::exp(-std::abs(a - b)));
}

/// Streaming log-sum-exp accumulator for sums of positive terms given in log scale.
class LogSumAcc {
public:
    void add(double log_term) { total_ = log_add_exp(total_, log_term); }
    double log_value() const { return total_; }

private:
    double total_ = -kInf;
};

inline bool approx_rel(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({std::abs(a), std::abs(b), 1e-300});
}

}  // namespace intsemi
