#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "intsemi/core.hpp"
#include "intsemi/grid.hpp"
#include "intsemi/linalg.hpp"
#include "intsemi/special.hpp"

namespace intsemi {

/// Operator value carrying a separate log-magnitude factor, so that huge or
/// tiny derivative values never leave the representable range.  The value
/// represented is op * e^{log_scale}.
template <class Op>
struct ScaledOp {
    Op op;
    double log_scale = 0.0;
};

/// Operator composition, overloaded per operator-value type.
inline Complex op_compose(Complex a, Complex b) { return a * b; }
inline CMatrix op_compose(const CMatrix& a, const CMatrix& b) { return a * b; }

// ---------------------------------------------------------------------------
// scalar family: generator a on X = C, semigroup e^{az}, R(lambda) = 1/(lambda-a)
// ---------------------------------------------------------------------------

class ScalarFamily {
public:
    using Op = Complex;

    explicit ScalarFamily(double a) : a_(a) {
        if (!std::isfinite(a)) throw std::invalid_argument("ScalarFamily: parameter must be finite");
    }

    double generator() const { return a_; }
    double omega() const { return a_; }
    double kappa_min() const { return 0.0; }
    double theta() const { return kPi / 2.0; }
    bool has_boundary_values() const { return true; }
    /// Exponents (alpha, beta) of the half-plane norm bound
    /// ||T(z)|| <= M e^{w|z|} |z|^alpha / (Re z)^{alpha+beta}.
    std::pair<double, double> e1_exponents() const { return {0.0, 0.0}; }
    int space_dim() const { return 1; }

    bool in_resolvent_set(Complex lambda) const { return lambda != Complex{a_, 0.0}; }

    Op semigroup_op(Complex z) const {
        require_admissible_time(z);
        return std::exp(a_ * z);
    }
    double semigroup_norm(Complex z) const { return std::abs(semigroup_op(z)); }
    CVector apply_semigroup(Complex z, const CVector& v) const {
        check_vec(v);
        return {semigroup_op(z) * v[0]};
    }

    Op resolvent_op(Complex lambda) const {
        require_resolvent(lambda);
        return 1.0 / (lambda - a_);
    }
    CVector resolvent_apply(Complex lambda, const CVector& v) const {
        check_vec(v);
        return {resolvent_op(lambda) * v[0]};
    }
    double resolvent_norm(Complex lambda) const { return std::abs(resolvent_op(lambda)); }

    /// d^n/dl^n [ l^{-kappa} / (l - a) ] at l = lambda > max(a, 0), via Leibniz:
    ///   (-1)^n sum_j  n!/j! (kappa)_j lambda^{-kappa-j} (lambda-a)^{-(n-j+1)},
    /// all terms of one sign (C(n,j) (n-j)! = n!/j!).  Evaluated in log scale.
    double resolvent_derivative_log_norm(double lambda, int n, double kappa) const {
        require_halfline(lambda, n, kappa);
        LogSumAcc acc;
        const double lg_n1 = log_gamma(n + 1.0);
        for (int j = 0; j <= n; ++j) {
            const double lp = log_pochhammer(kappa, j);
            if (lp == -kInf) continue;
            acc.add(lg_n1 - log_gamma(j + 1.0) + lp - (kappa + j) * std::log(lambda) -
                    (n - j + 1.0) * std::log(lambda - a_));
        }
        return acc.log_value();
    }
    double resolvent_derivative_norm(double lambda, int n, double kappa) const {
        return std::exp(resolvent_derivative_log_norm(lambda, n, kappa));
    }
    ScaledOp<Op> resolvent_derivative_scaled(double lambda, int n, double kappa) const {
        const double ln = resolvent_derivative_log_norm(lambda, n, kappa);
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        return {Complex{sign, 0.0}, ln};
    }

    /// (lambda R(lambda))^n, stable for large n via log evaluation.
    Op scaled_resolvent_power(double lambda, long n) const {
        require_resolvent(lambda);
        return std::exp(static_cast<double>(n) * (std::log(lambda) - std::log(lambda - a_)));
    }

    Op zero_op() const { return Complex{}; }
    Op identity_op() const { return Complex{1.0, 0.0}; }
    double op_norm(const Op& v) const { return std::abs(v); }
    CVector op_apply(const Op& v, const CVector& x) const {
        check_vec(x);
        return {v * x[0]};
    }

private:
    void require_admissible_time(Complex z) const {
        if (!(z.real() >= 0.0)) throw std::domain_error("ScalarFamily: semigroup requires Re z >= 0");
    }
    void require_resolvent(Complex lambda) const {
        if (!in_resolvent_set(lambda))
            throw std::domain_error("ScalarFamily: lambda = a is in the spectrum");
    }
    void require_halfline(double lambda, int n, double kappa) const {
        if (!(lambda > std::max(a_, 0.0)))
            throw std::domain_error("ScalarFamily: derivative requires lambda > max(a, 0)");
        if (n < 0 || kappa < 0.0) throw std::invalid_argument("ScalarFamily: n, kappa must be >= 0");
    }
    void check_vec(const CVector& v) const {
        if (v.size() != 1) throw std::invalid_argument("ScalarFamily: vectors have dimension 1");
    }

    double a_;
};

// ---------------------------------------------------------------------------
// matrix family: generator A (small dense), semigroup e^{zA}
// ---------------------------------------------------------------------------

class MatrixFamily {
public:
    using Op = CMatrix;

    explicit MatrixFamily(CMatrix a, std::optional<double> omega = std::nullopt)
        : a_(std::move(a)) {
        for (int i = 0; i < a_.dim(); ++i)
            for (int j = 0; j < a_.dim(); ++j)
                if (!finite(a_(i, j))) throw std::invalid_argument("MatrixFamily: entries must be finite");
        if (a_.dim() == 2) {
            spectrum_ = eigenvalues_2x2(a_);
        } else {
            // Gershgorin upper gauge; adequate for the small test generators.
            for (int i = 0; i < a_.dim(); ++i) {
                double r = 0.0;
                for (int j = 0; j < a_.dim(); ++j)
                    if (j != i) r += std::abs(a_(i, j));
                spectrum_.push_back(a_(i, i) + r);
            }
        }
        if (omega) {
            omega_ = *omega;
        } else {
            omega_ = -kInf;
            for (const auto& ev : spectrum_) omega_ = std::max(omega_, ev.real());
        }
    }

    const CMatrix& generator() const { return a_; }
    double omega() const { return omega_; }
    double kappa_min() const { return 0.0; }
    double theta() const { return kPi / 2.0; }
    bool has_boundary_values() const { return true; }
    std::pair<double, double> e1_exponents() const { return {0.0, 0.0}; }
    int space_dim() const { return a_.dim(); }

    bool in_resolvent_set(Complex lambda) const {
        for (const auto& ev : spectrum_)
            if (std::abs(lambda - ev) < 1e-12 * std::max(1.0, std::abs(ev))) return false;
        return true;
    }

    Op semigroup_op(Complex z) const {
        if (!(z.real() >= 0.0)) throw std::domain_error("MatrixFamily: semigroup requires Re z >= 0");
        return expm(a_ * z);
    }
    double semigroup_norm(Complex z) const { return semigroup_op(z).norm_inf(); }
    CVector apply_semigroup(Complex z, const CVector& v) const { return semigroup_op(z).apply(v); }

    Op resolvent_op(Complex lambda) const {
        require_resolvent(lambda);
        CMatrix m = CMatrix::identity(a_.dim()) * lambda - a_;
        return inverse(m);
    }
    CVector resolvent_apply(Complex lambda, const CVector& v) const {
        require_resolvent(lambda);
        CMatrix m = CMatrix::identity(a_.dim()) * lambda - a_;
        return solve(m, v);
    }
    double resolvent_norm(Complex lambda) const { return resolvent_op(lambda).norm_inf(); }

    /// Leibniz sum over scaled resolvent powers; terms all carry the sign
    /// (-1)^n, so the per-term log magnitudes can be combined against a common
    /// max exponent without cancellation across terms.
    ScaledOp<Op> resolvent_derivative_scaled(double lambda, int n, double kappa) const {
        if (!(lambda > std::max(omega_, 0.0)))
            throw std::domain_error("MatrixFamily: derivative requires lambda > max(omega, 0)");
        if (n < 0 || kappa < 0.0) throw std::invalid_argument("MatrixFamily: n, kappa must be >= 0");
        // unit-scaled powers R^m = U_m e^{L_m}, m = 1..n+1
        const CMatrix r1 = resolvent_op(Complex{lambda, 0.0});
        std::vector<CMatrix> units;
        std::vector<double> logs;
        units.reserve(n + 1);
        logs.reserve(n + 1);
        CMatrix cur = r1;
        double lcur = 0.0;
        for (int m = 1; m <= n + 1; ++m) {
            const double s = cur.norm_inf();
            if (s == 0.0) throw numeric_error("MatrixFamily: vanishing resolvent power");
            cur *= Complex{1.0 / s, 0.0};
            lcur += std::log(s);
            units.push_back(cur);
            logs.push_back(lcur);
            if (m <= n) cur = cur * r1;
        }
        const double lg_n1 = log_gamma(n + 1.0);
        double lmax = -kInf;
        std::vector<double> lterm(n + 1, -kInf);
        for (int j = 0; j <= n; ++j) {
            const double lp = log_pochhammer(kappa, j);
            if (lp == -kInf) continue;
            lterm[j] = lg_n1 - log_gamma(j + 1.0) + lp - (kappa + j) * std::log(lambda) +
                       logs[n - j];
            lmax = std::max(lmax, lterm[j]);
        }
        CMatrix acc(a_.dim());
        for (int j = 0; j <= n; ++j) {
            if (lterm[j] == -kInf) continue;
            acc += units[n - j] * std::exp(lterm[j] - lmax);
        }
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        return {acc * sign, lmax};
    }
    double resolvent_derivative_log_norm(double lambda, int n, double kappa) const {
        const auto d = resolvent_derivative_scaled(lambda, n, kappa);
        return d.log_scale + std::log(d.op.norm_inf());
    }
    double resolvent_derivative_norm(double lambda, int n, double kappa) const {
        return std::exp(resolvent_derivative_log_norm(lambda, n, kappa));
    }

    Op scaled_resolvent_power(double lambda, long n) const {
        Op r = resolvent_op(Complex{lambda, 0.0}) * Complex{lambda, 0.0};
        return matrix_power(std::move(r), n);
    }

    Op zero_op() const { return CMatrix(a_.dim()); }
    Op identity_op() const { return CMatrix::identity(a_.dim()); }
    double op_norm(const Op& m) const { return m.norm_inf(); }
    CVector op_apply(const Op& m, const CVector& x) const { return m.apply(x); }

private:
    void require_resolvent(Complex lambda) const {
        if (!in_resolvent_set(lambda))
            throw std::domain_error("MatrixFamily: lambda is in the spectrum");
    }

    CMatrix a_;
    std::vector<Complex> spectrum_;
    double omega_;
};

// ---------------------------------------------------------------------------
// beta multiplication family on X = L^p(R) x L^p(R), ||(u,v)|| = ||u|| + ||v||:
//   a(x) = -(1+x^2) I + |x|^beta N,   N = [[0,1],[0,0]]
//   e^{za(x)} = e^{-z(1+x^2)} (I + z |x|^beta N)
//   (lambda - a(x))^{-1} = (lambda+1+x^2)^{-1} I + |x|^beta (lambda+1+x^2)^{-2} N
// Values are multiplication operators d(x) I + e(x) N over the sampled line;
// the operator norm proxy is sup_x (|d| + |e|), the pointwise matrix norm
// induced by the l1 sum norm on C^2 (sup-norm space model).
// ---------------------------------------------------------------------------

/// Multiplication-operator value d(x) I + e(x) N over a sampled line.
struct BetaOp {
    std::vector<Complex> diag;
    std::vector<Complex> nilp;

    BetaOp() = default;
    explicit BetaOp(std::size_t n) : diag(n, Complex{}), nilp(n, Complex{}) {}

    friend BetaOp operator+(BetaOp a, const BetaOp& b) {
        for (std::size_t i = 0; i < a.diag.size(); ++i) {
            a.diag[i] += b.diag[i];
            a.nilp[i] += b.nilp[i];
        }
        return a;
    }
    friend BetaOp operator-(BetaOp a, const BetaOp& b) {
        for (std::size_t i = 0; i < a.diag.size(); ++i) {
            a.diag[i] -= b.diag[i];
            a.nilp[i] -= b.nilp[i];
        }
        return a;
    }
    friend BetaOp operator*(BetaOp a, Complex s) {
        for (std::size_t i = 0; i < a.diag.size(); ++i) {
            a.diag[i] *= s;
            a.nilp[i] *= s;
        }
        return a;
    }
    friend BetaOp operator*(BetaOp a, double s) { return std::move(a) * Complex{s, 0.0}; }
};

/// (d1 I + e1 N)(d2 I + e2 N) = d1 d2 I + (d1 e2 + e1 d2) N, pointwise.
inline BetaOp op_compose(const BetaOp& a, const BetaOp& b) {
    BetaOp c(a.diag.size());
    for (std::size_t i = 0; i < a.diag.size(); ++i) {
        c.diag[i] = a.diag[i] * b.diag[i];
        c.nilp[i] = a.diag[i] * b.nilp[i] + a.nilp[i] * b.diag[i];
    }
    return c;
}

class BetaFamily {
public:
    using Op = BetaOp;

    BetaFamily(double beta, const GridSpec& grid) : beta_(beta), grid_spec_(grid) {
        if (!(beta >= 0.0)) throw std::invalid_argument("BetaFamily: requires beta >= 0");
        xs_ = grid.build();
    }

    double beta() const { return beta_; }
    const std::vector<double>& grid() const { return xs_; }
    const GridSpec& grid_spec() const { return grid_spec_; }

    double omega() const { return 0.0; }
    /// Smallest integration order admitting boundary values; +inf once the
    /// resolvent set is empty (beta > 4).
    double kappa_min() const { return beta_ > 4.0 ? kInf : beta_ / 2.0; }
    double theta() const { return kPi / 2.0; }
    bool has_boundary_values() const { return false; }  // the semigroup itself, for beta > 0
    std::pair<double, double> e1_exponents() const { return {1.0, std::max(0.0, beta_ / 2.0 - 1.0)}; }
    int space_dim() const { return 2 * static_cast<int>(xs_.size()); }

    bool resolvent_set_empty() const { return beta_ > 4.0; }
    bool in_resolvent_set(Complex lambda) const {
        if (resolvent_set_empty()) return false;
        return !(lambda.imag() == 0.0 && lambda.real() <= -1.0);
    }

    Op semigroup_op(Complex z) const {
        require_time(z);
        Op op(xs_.size());
        for (std::size_t i = 0; i < xs_.size(); ++i) {
            const double c = 1.0 + xs_[i] * xs_[i];
            const Complex f = std::exp(-z * c);
            op.diag[i] = f;
            op.nilp[i] = z * pow_abs_beta(xs_[i]) * f;
        }
        return op;
    }

    /// Vectors are stacked [u; v] over the grid.
    CVector apply_semigroup(Complex z, const CVector& uv) const {
        return op_apply(semigroup_op(z), uv);
    }

    /// sup_x (|d| + |e|) over the sample, densified near the maximizer of the
    /// nilpotent part, x* = sqrt(beta / (2 Re z)), which sharpens as Re z -> 0.
    double semigroup_norm(Complex z) const {
        require_time(z);
        double best = 0.0;
        auto at = [&](double x) {
            const double c = 1.0 + x * x;
            const double f = std::exp(-z.real() * c);
            return f * (1.0 + std::abs(z) * pow_abs_beta(x));
        };
        for (double x : xs_) best = std::max(best, at(x));
        if (beta_ > 0.0 && z.real() > 0.0) {
            for (double x : local_cluster(std::sqrt(beta_ / (2.0 * z.real()))))
                best = std::max(best, at(x));
        }
        return best;
    }

    Op resolvent_op(Complex lambda) const {
        require_resolvent(lambda);
        Op op(xs_.size());
        for (std::size_t i = 0; i < xs_.size(); ++i) {
            const double c = 1.0 + xs_[i] * xs_[i];
            const Complex p = 1.0 / (lambda + c);
            op.diag[i] = p;
            op.nilp[i] = pow_abs_beta(xs_[i]) * p * p;
        }
        return op;
    }
    CVector resolvent_apply(Complex lambda, const CVector& uv) const {
        return op_apply(resolvent_op(lambda), uv);
    }
    double resolvent_norm(Complex lambda) const { return op_norm(resolvent_op(lambda)); }

    /// Pointwise Leibniz derivatives of l^{-kappa}(l+c)^{-1} and
    /// l^{-kappa}|x|^b (l+c)^{-2}; all terms carry the sign (-1)^n, so both
    /// entries reduce to log-sum-exp evaluations.
    double resolvent_derivative_log_norm(double lambda, int n, double kappa) const {
        return pointwise_derivative_sup(lambda, n, kappa, xs_);
    }
    double resolvent_derivative_norm(double lambda, int n, double kappa) const {
        return std::exp(resolvent_derivative_log_norm(lambda, n, kappa));
    }
    ScaledOp<Op> resolvent_derivative_scaled(double lambda, int n, double kappa) const {
        require_halfline(lambda, n, kappa);
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        // common scale = sup over grid of the diag log magnitude
        double lmax = -kInf;
        std::vector<double> ld(xs_.size()), le(xs_.size());
        for (std::size_t i = 0; i < xs_.size(); ++i) {
            const double c = 1.0 + xs_[i] * xs_[i];
            ld[i] = log_diag_derivative(lambda, n, kappa, c);
            le[i] = log_nilp_derivative(lambda, n, kappa, xs_[i], c);
            lmax = std::max({lmax, ld[i], le[i]});
        }
        Op op(xs_.size());
        for (std::size_t i = 0; i < xs_.size(); ++i) {
            op.diag[i] = sign * std::exp(ld[i] - lmax);
            op.nilp[i] = sign * std::exp(le[i] - lmax);
        }
        return {std::move(op), lmax};
    }

    /// (lambda R(lambda))^n pointwise: (l p)^n I + n (l p)^{n-1} (l q) N with
    /// p = (l+c)^{-1}, q = |x|^b p^2; evaluated in log form for stability.
    Op scaled_resolvent_power(double lambda, long n) const {
        require_resolvent(lambda);
        if (!(lambda > 0.0))
            throw std::domain_error("BetaFamily: scaled power requires lambda > 0");
        Op op(xs_.size());
        for (std::size_t i = 0; i < xs_.size(); ++i) {
            const double c = 1.0 + xs_[i] * xs_[i];
            const double log_lp = std::log(lambda) - std::log(lambda + c);
            const double lpn = std::exp(n * log_lp);
            op.diag[i] = lpn;
            op.nilp[i] = static_cast<double>(n) * std::exp((n - 1) * log_lp) * lambda *
                         pow_abs_beta(xs_[i]) / ((lambda + c) * (lambda + c));
        }
        return op;
    }

    Op zero_op() const { return Op(xs_.size()); }
    Op identity_op() const {
        Op op(xs_.size());
        for (auto& d : op.diag) d = 1.0;
        return op;
    }
    double op_norm(const Op& op) const {
        double m = 0.0;
        for (std::size_t i = 0; i < op.diag.size(); ++i)
            m = std::max(m, std::abs(op.diag[i]) + std::abs(op.nilp[i]));
        return m;
    }
    CVector op_apply(const Op& op, const CVector& uv) const {
        const std::size_t m = xs_.size();
        if (uv.size() != 2 * m) throw std::invalid_argument("BetaFamily: vector must be [u; v] over grid");
        CVector out(2 * m);
        for (std::size_t i = 0; i < m; ++i) {
            out[i] = op.diag[i] * uv[i] + op.nilp[i] * uv[m + i];
            out[m + i] = op.diag[i] * uv[m + i];
        }
        return out;
    }

    /// a(x)^n = (-1-x^2)^n I + n (-1-x^2)^{n-1} |x|^b N at one point.
    std::pair<Complex, Complex> generator_power_point(double x, int n) const {
        const double c = -(1.0 + x * x);
        return {std::pow(c, n), static_cast<double>(n) * std::pow(c, n - 1) * pow_abs_beta(x)};
    }

private:
    double pow_abs_beta(double x) const {
        const double ax = std::abs(x);
        if (ax == 0.0) return beta_ == 0.0 ? 1.0 : 0.0;
        return std::pow(ax, beta_);
    }
    void require_time(Complex z) const {
        if (z.real() > 0.0) return;
        if (z.real() == 0.0 && (beta_ == 0.0 || z.imag() == 0.0)) return;
        throw std::domain_error(
            "BetaFamily: semigroup requires Re z > 0 (no boundary values for beta > 0)");
    }
    void require_resolvent(Complex lambda) const {
        if (resolvent_set_empty())
            throw std::domain_error("BetaFamily: resolvent set is empty for beta > 4");
        if (!in_resolvent_set(lambda))
            throw std::domain_error("BetaFamily: lambda in (-inf, -1] is in the spectrum");
    }
    void require_halfline(double lambda, int n, double kappa) const {
        require_resolvent(Complex{lambda, 0.0});
        if (!(lambda > 0.0)) throw std::domain_error("BetaFamily: derivative requires lambda > 0");
        if (n < 0 || kappa < 0.0) throw std::invalid_argument("BetaFamily: n, kappa must be >= 0");
    }

    // log |d^n/dl^n [ l^{-kappa} (l+c)^{-1} ]| = log sum_j n!/j! (k)_j l^{-k-j} (l+c)^{-(n-j+1)}
    double log_diag_derivative(double lambda, int n, double kappa, double c) const {
        LogSumAcc acc;
        const double lg_n1 = log_gamma(n + 1.0);
        for (int j = 0; j <= n; ++j) {
            const double lp = log_pochhammer(kappa, j);
            if (lp == -kInf) continue;
            acc.add(lg_n1 - log_gamma(j + 1.0) + lp - (kappa + j) * std::log(lambda) -
                    (n - j + 1.0) * std::log(lambda + c));
        }
        return acc.log_value();
    }
    // log |d^n/dl^n [ l^{-kappa} |x|^b (l+c)^{-2} ]|; d^m (l+c)^{-2} = (-1)^m (m+1)! (l+c)^{-m-2},
    // so the j-term coefficient is n!/j! (n-j+1).
    double log_nilp_derivative(double lambda, int n, double kappa, double x, double c) const {
        const double ax = std::abs(x);
        if (ax == 0.0 && beta_ > 0.0) return -kInf;
        LogSumAcc acc;
        const double lg_n1 = log_gamma(n + 1.0);
        for (int j = 0; j <= n; ++j) {
            const double lp = log_pochhammer(kappa, j);
            if (lp == -kInf) continue;
            acc.add(lg_n1 - log_gamma(j + 1.0) + lp - (kappa + j) * std::log(lambda) +
                    std::log(n - j + 1.0) - (n - j + 2.0) * std::log(lambda + c));
        }
        return acc.log_value() + beta_ * std::log(ax == 0.0 ? 1.0 : ax);
    }
    double pointwise_derivative_sup(double lambda, int n, double kappa,
                                    const std::vector<double>& xs) const {
        require_halfline(lambda, n, kappa);
        double best = -kInf;
        for (double x : xs) {
            const double c = 1.0 + x * x;
            best = std::max(best, log_add_exp(log_diag_derivative(lambda, n, kappa, c),
                                              log_nilp_derivative(lambda, n, kappa, x, c)));
        }
        return best;
    }

    double beta_;
    GridSpec grid_spec_;
    std::vector<double> xs_;
};

// ---------------------------------------------------------------------------
// singular multiplication family on X = C[0,1]:
//   [T(z) f](x) = x^z [ f(x) - f(0) (-ln x)^beta ],  [T(z) f](0) = 0.
// Sampled in s = -ln x (uniform on [0, s_max]); vectors carry an explicit
// f(0) slot at index 0 followed by the s-grid values.  Candidate resolvent:
//   [R(lambda) f](x) = (lambda - ln x)^{-1} [ f(x) - (-ln x)^beta f(0) ],
// a genuine (pseudo-)resolvent only for beta < 1.
// ---------------------------------------------------------------------------

/// Operator f |-> mult(s) f + couple(s) f(0) on the grid, with value
/// zero_coef * f(0) at x = 0.
struct C01Op {
    std::vector<Complex> mult;
    std::vector<Complex> couple;
    Complex zero_coef{};

    C01Op() = default;
    explicit C01Op(std::size_t n) : mult(n, Complex{}), couple(n, Complex{}) {}

    friend C01Op operator+(C01Op a, const C01Op& b) {
        for (std::size_t i = 0; i < a.mult.size(); ++i) {
            a.mult[i] += b.mult[i];
            a.couple[i] += b.couple[i];
        }
        a.zero_coef += b.zero_coef;
        return a;
    }
    friend C01Op operator-(C01Op a, const C01Op& b) {
        for (std::size_t i = 0; i < a.mult.size(); ++i) {
            a.mult[i] -= b.mult[i];
            a.couple[i] -= b.couple[i];
        }
        a.zero_coef -= b.zero_coef;
        return a;
    }
    friend C01Op operator*(C01Op a, Complex sc) {
        for (std::size_t i = 0; i < a.mult.size(); ++i) {
            a.mult[i] *= sc;
            a.couple[i] *= sc;
        }
        a.zero_coef *= sc;
        return a;
    }
    friend C01Op operator*(C01Op a, double sc) { return std::move(a) * Complex{sc, 0.0}; }
};

/// (T1 T2 f) = m1 (m2 f + c2 f0) + c1 (T2 f)(0) = m1 m2 f + (m1 c2 + c1 z2) f0.
inline C01Op op_compose(const C01Op& a, const C01Op& b) {
    C01Op c(a.mult.size());
    for (std::size_t i = 0; i < a.mult.size(); ++i) {
        c.mult[i] = a.mult[i] * b.mult[i];
        c.couple[i] = a.mult[i] * b.couple[i] + a.couple[i] * b.zero_coef;
    }
    c.zero_coef = a.zero_coef * b.zero_coef;
    return c;
}

class SingularC01Family {
public:
    using Op = C01Op;

    SingularC01Family(double beta, const LogGridSpec& grid) : beta_(beta), grid_spec_(grid) {
        if (!(beta >= 0.0)) throw std::invalid_argument("SingularC01Family: requires beta >= 0");
        ss_ = grid.build_s();
    }

    double beta() const { return beta_; }
    const std::vector<double>& s_grid() const { return ss_; }
    const LogGridSpec& grid_spec() const { return grid_spec_; }
    bool degenerate() const { return beta_ == 0.0; }

    double omega() const { return 0.0; }
    double kappa_min() const { return beta_ < 1.0 ? beta_ : kInf; }
    double theta() const { return kPi / 2.0; }
    bool has_boundary_values() const { return false; }
    std::pair<double, double> e1_exponents() const { return {0.0, beta_}; }
    int space_dim() const { return static_cast<int>(ss_.size()) + 1; }

    bool resolvent_set_empty() const { return beta_ >= 1.0; }
    bool in_resolvent_set(Complex lambda) const {
        if (resolvent_set_empty()) return false;
        return !(lambda.imag() == 0.0 && lambda.real() <= 0.0);
    }

    Op semigroup_op(Complex z) const {
        if (!(z.real() > 0.0))
            throw std::domain_error("SingularC01Family: semigroup requires Re z > 0");
        Op op(ss_.size());
        for (std::size_t i = 0; i < ss_.size(); ++i) {
            const Complex xz = std::exp(-z * ss_[i]);  // x^z with s = -ln x
            op.mult[i] = xz;
            op.couple[i] = -xz * pow_s_beta(ss_[i]);
        }
        op.zero_coef = 0.0;
        return op;
    }
    CVector apply_semigroup(Complex z, const CVector& f) const {
        return op_apply(semigroup_op(z), f);
    }
    double semigroup_norm(Complex z) const { return op_norm(semigroup_op(z)); }

    /// Candidate resolvent; valid only for beta < 1 but computable for
    /// beta <= 1 so the failure of the resolvent equation can be measured.
    Op candidate_resolvent_op(Complex lambda) const {
        if (beta_ > 1.0)
            throw std::domain_error("SingularC01Family: candidate resolvent unbounded for beta > 1");
        if (lambda.imag() == 0.0 && lambda.real() <= 0.0)
            throw std::domain_error("SingularC01Family: lambda in (-inf, 0] is singular");
        Op op(ss_.size());
        for (std::size_t i = 0; i < ss_.size(); ++i) {
            const Complex g = 1.0 / (lambda + ss_[i]);
            op.mult[i] = g;
            op.couple[i] = -g * pow_s_beta(ss_[i]);
        }
        // (R f)(0) = -lim s^beta/(lambda+s) f(0): 0 for beta < 1, -f(0) at beta = 1.
        op.zero_coef = (beta_ == 1.0) ? Complex{-1.0, 0.0} : Complex{0.0, 0.0};
        return op;
    }
    Op resolvent_op(Complex lambda) const {
        if (resolvent_set_empty())
            throw std::domain_error("SingularC01Family: no resolvent exists for beta >= 1");
        return candidate_resolvent_op(lambda);
    }
    CVector resolvent_apply(Complex lambda, const CVector& f) const {
        return op_apply(candidate_resolvent_op(lambda), f);
    }
    double resolvent_norm(Complex lambda) const { return op_norm(resolvent_op(lambda)); }

    double resolvent_derivative_log_norm(double lambda, int n, double kappa) const {
        if (resolvent_set_empty())
            throw std::domain_error("SingularC01Family: no resolvent exists for beta >= 1");
        if (!(lambda > 0.0))
            throw std::domain_error("SingularC01Family: derivative requires lambda > 0");
        double best = -kInf;
        const double lg_n1 = log_gamma(n + 1.0);
        for (double s : ss_) {
            LogSumAcc acc;
            for (int j = 0; j <= n; ++j) {
                const double lp = log_pochhammer(kappa, j);
                if (lp == -kInf) continue;
                acc.add(lg_n1 - log_gamma(j + 1.0) + lp - (kappa + j) * std::log(lambda) -
                        (n - j + 1.0) * std::log(lambda + s));
            }
            best = std::max(best, acc.log_value() + std::log1p(pow_s_beta(s)));
        }
        return best;
    }
    double resolvent_derivative_norm(double lambda, int n, double kappa) const {
        return std::exp(resolvent_derivative_log_norm(lambda, n, kappa));
    }

    Op scaled_resolvent_power(double lambda, long n) const {
        Op r = resolvent_op(Complex{lambda, 0.0}) * Complex{lambda, 0.0};
        // R-type operators vanish at x = 0, so powers stay multiplication-plus-coupling:
        // (lambda R)^n = m^{n-1} (m f + c f0).
        Op out(ss_.size());
        for (std::size_t i = 0; i < ss_.size(); ++i) {
            const Complex m = r.mult[i];
            const Complex mpow = std::pow(m, static_cast<double>(n - 1));
            out.mult[i] = mpow * m;
            out.couple[i] = mpow * r.couple[i];
        }
        out.zero_coef = std::pow(r.zero_coef, static_cast<double>(n));
        return out;
    }

    Op zero_op() const { return Op(ss_.size()); }
    Op identity_op() const {
        Op op(ss_.size());
        for (auto& m : op.mult) m = 1.0;
        op.zero_coef = 1.0;
        return op;
    }
    double op_norm(const Op& op) const {
        double m = std::abs(op.zero_coef);
        for (std::size_t i = 0; i < op.mult.size(); ++i)
            m = std::max(m, std::abs(op.mult[i]) + std::abs(op.couple[i]));
        return m;
    }
    /// Vector layout: [f(0); f(x(s_0)), ..., f(x(s_{n-1}))].
    CVector op_apply(const Op& op, const CVector& f) const {
        if (f.size() != ss_.size() + 1)
            throw std::invalid_argument("SingularC01Family: vector must carry the f(0) slot");
        CVector out(f.size());
        out[0] = op.zero_coef * f[0];
        for (std::size_t i = 0; i < ss_.size(); ++i)
            out[i + 1] = op.mult[i] * f[i + 1] + op.couple[i] * f[0];
        return out;
    }
    CVector sample(const std::function<Complex(double)>& f_of_x) const {
        CVector v(ss_.size() + 1);
        v[0] = f_of_x(0.0);
        for (std::size_t i = 0; i < ss_.size(); ++i) v[i + 1] = f_of_x(std::exp(-ss_[i]));
        return v;
    }

private:
    double pow_s_beta(double s) const {
        if (s == 0.0) return beta_ == 0.0 ? 1.0 : 0.0;
        return std::pow(s, beta_);
    }

    double beta_;
    LogGridSpec grid_spec_;
    std::vector<double> ss_;
};

// ---------------------------------------------------------------------------

using AnyFamily = std::variant<ScalarFamily, MatrixFamily, BetaFamily, SingularC01Family>;

inline std::string family_kind(const AnyFamily& fam) {
    switch (fam.index()) {
        case 0: return "scalar";
        case 1: return "matrix";
        case 2: return "beta_multiplication";
        default: return "singular_c01";
    }
}

inline double family_omega(const AnyFamily& f) {
    return std::visit([](const auto& g) { return g.omega(); }, f);
}
inline double family_kappa_min(const AnyFamily& f) {
    return std::visit([](const auto& g) { return g.kappa_min(); }, f);
}
inline double family_semigroup_norm(const AnyFamily& f, Complex z) {
    return std::visit([&](const auto& g) { return g.semigroup_norm(z); }, f);
}
inline double family_resolvent_derivative_norm(const AnyFamily& f, double lambda, int n,
                                               double kappa) {
    return std::visit(
        [&](const auto& g) { return g.resolvent_derivative_norm(lambda, n, kappa); }, f);
}

}  // namespace intsemi
