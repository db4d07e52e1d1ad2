#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "intsemi/core.hpp"

namespace intsemi {

using CVector = std::vector<Complex>;

inline double norm_sup(const CVector& v) {
    double m = 0.0;
    for (const auto& x : v) m = std::max(m, std::abs(x));
    return m;
}

inline CVector operator+(CVector a, const CVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}
inline CVector operator-(CVector a, const CVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}
inline CVector operator*(CVector a, Complex s) {
    for (auto& x : a) x *= s;
    return a;
}
inline CVector operator*(CVector a, double s) {
    for (auto& x : a) x *= s;
    return a;
}

/// Small dense complex matrix, row-major.  Sized for generators of a few
/// dimensions, not for large-scale linear algebra.
class CMatrix {
public:
    CMatrix() = default;
    explicit CMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, Complex{0.0, 0.0}) {
        if (n < 1) throw std::invalid_argument("CMatrix: dimension must be positive");
    }
    CMatrix(int n, std::vector<Complex> entries) : n_(n), a_(std::move(entries)) {
        if (a_.size() != static_cast<std::size_t>(n) * n)
            throw std::invalid_argument("CMatrix: entry count does not match dimension");
    }

    static CMatrix identity(int n) {
        CMatrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int dim() const { return n_; }
    Complex& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const Complex& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    CMatrix& operator+=(const CMatrix& o) {
        check_dim(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    CMatrix& operator-=(const CMatrix& o) {
        check_dim(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }
    CMatrix& operator*=(Complex s) {
        for (auto& x : a_) x *= s;
        return *this;
    }

    friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
    friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
    friend CMatrix operator*(CMatrix a, Complex s) { return a *= s; }
    friend CMatrix operator*(CMatrix a, double s) { return a *= Complex{s, 0.0}; }

    friend CMatrix operator*(const CMatrix& a, const CMatrix& b) {
        a.check_dim(b);
        const int n = a.n_;
        CMatrix c(n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                const Complex aik = a(i, k);
                if (aik == Complex{}) continue;
                for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    CVector apply(const CVector& v) const {
        if (static_cast<int>(v.size()) != n_) throw std::invalid_argument("CMatrix::apply: size mismatch");
        CVector out(n_, Complex{});
        for (int i = 0; i < n_; ++i) {
            Complex s{};
            for (int j = 0; j < n_; ++j) s += (*this)(i, j) * v[j];
            out[i] = s;
        }
        return out;
    }

    /// Induced sup-norm (max absolute row sum).
    double norm_inf() const {
        double m = 0.0;
        for (int i = 0; i < n_; ++i) {
            double s = 0.0;
            for (int j = 0; j < n_; ++j) s += std::abs((*this)(i, j));
            m = std::max(m, s);
        }
        return m;
    }
    /// Induced 1-norm (max absolute column sum).
    double norm_one() const {
        double m = 0.0;
        for (int j = 0; j < n_; ++j) {
            double s = 0.0;
            for (int i = 0; i < n_; ++i) s += std::abs((*this)(i, j));
            m = std::max(m, s);
        }
        return m;
    }

private:
    void check_dim(const CMatrix& o) const {
        if (n_ != o.n_) throw std::invalid_argument("CMatrix: dimension mismatch");
    }

    int n_ = 0;
    std::vector<Complex> a_;
};

/// Solve A x = b by Gauss elimination with partial pivoting.
inline CVector solve(CMatrix a, CVector b) {
    const int n = a.dim();
    if (static_cast<int>(b.size()) != n) throw std::invalid_argument("solve: size mismatch");
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
        if (std::abs(a(piv, col)) < 1e-300) throw numeric_error("solve: singular matrix");
        if (piv != col) {
            for (int c = 0; c < n; ++c) std::swap(a(col, c), a(piv, c));
            std::swap(b[col], b[piv]);
        }
        for (int r = col + 1; r < n; ++r) {
            const Complex f = a(r, col) / a(col, col);
            for (int c = col; c < n; ++c) a(r, c) -= f * a(col, c);
            b[r] -= f * b[col];
        }
    }
    CVector x(n);
    for (int i = n; i-- > 0;) {
        Complex s = b[i];
        for (int c = i + 1; c < n; ++c) s -= a(i, c) * x[c];
        x[i] = s / a(i, i);
    }
    return x;
}

inline CMatrix inverse(const CMatrix& a) {
    const int n = a.dim();
    CMatrix inv(n);
    for (int j = 0; j < n; ++j) {
        CVector e(n, Complex{});
        e[j] = 1.0;
        const CVector col = solve(a, e);
        for (int i = 0; i < n; ++i) inv(i, j) = col[i];
    }
    return inv;
}

/// Binary exponentiation; `overflow_cap` guards runaway intermediate norms.
inline CMatrix matrix_power(CMatrix base, long n, double overflow_cap = 1e300) {
    if (n < 0) throw std::invalid_argument("matrix_power: negative exponent");
    CMatrix acc = CMatrix::identity(base.dim());
    while (n > 0) {
        if ((n & 1) != 0) acc = acc * base;
        n >>= 1;
        if (n > 0) base = base * base;
        if (acc.norm_inf() > overflow_cap || base.norm_inf() > overflow_cap)
            throw numeric_error("matrix_power: intermediate norm exceeds overflow cap");
    }
    return acc;
}

/// Matrix exponential by Pade(13) with scaling and squaring.
inline CMatrix expm(const CMatrix& a) {
    static const double b[] = {64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
                               1187353796428800.0,  129060195264000.0,   10559470521600.0,
                               670442572800.0,      33522128640.0,       1323241920.0,
                               40840800.0,          960960.0,            16380.0,
                               182.0,               1.0};
    const int n = a.dim();
    const double theta13 = 5.371920351148152;
    int squarings = 0;
    double nrm = a.norm_inf();
    if (nrm > theta13) {
        squarings = static_cast<int>(std::ceil(std::log2(nrm / theta13)));
        nrm = std::ldexp(nrm, -squarings);
    }
    CMatrix as = a * std::ldexp(1.0, -squarings);

    const CMatrix a2 = as * as;
    const CMatrix a4 = a2 * a2;
    const CMatrix a6 = a2 * a4;
    const CMatrix eye = CMatrix::identity(n);

    CMatrix u_inner = a6 * b[13] + a4 * b[11] + a2 * b[9];
    CMatrix u = as * (a6 * u_inner + a6 * b[7] + a4 * b[5] + a2 * b[3] + eye * b[1]);
    CMatrix v_inner = a6 * b[12] + a4 * b[10] + a2 * b[8];
    CMatrix v = a6 * v_inner + a6 * b[6] + a4 * b[4] + a2 * b[2] + eye * b[0];

    // (V - U) X = (V + U)
    CMatrix lhs = v - u;
    CMatrix rhs = v + u;
    CMatrix x(n);
    for (int j = 0; j < n; ++j) {
        CVector col(n);
        for (int i = 0; i < n; ++i) col[i] = rhs(i, j);
        const CVector sol = solve(lhs, col);
        for (int i = 0; i < n; ++i) x(i, j) = sol[i];
    }
    for (int s = 0; s < squarings; ++s) x = x * x;
    return x;
}

/// Eigenvalues of a 2x2 matrix in closed form (quadratic formula).
inline std::vector<Complex> eigenvalues_2x2(const CMatrix& a) {
    if (a.dim() != 2) throw std::invalid_argument("eigenvalues_2x2: dimension must be 2");
    const Complex tr = a(0, 0) + a(1, 1);
    const Complex det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    const Complex disc = std::sqrt(tr * tr - 4.0 * det);
    return {(tr + disc) / 2.0, (tr - disc) / 2.0};
}

}  // namespace intsemi
