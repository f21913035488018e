#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "z2lab/errors.hpp"

namespace z2lab {

using cd = std::complex<double>;

// Dense complex matrix, row-major.  Shapes are tiny here (n <= a few
// hundred), so everything is plain O(n^3) loops over std::vector storage.
struct CMat {
    int rows = 0;
    int cols = 0;
    std::vector<cd> a;

    CMat() = default;
    CMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {
        if (r < 0 || c < 0) throw InputError("CMat: negative dimension");
    }

    static CMat zero(int r, int c) { return CMat(r, c); }

    static CMat identity(int n) {
        CMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    cd& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const cd& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    bool same_shape(const CMat& o) const { return rows == o.rows && cols == o.cols; }

    CMat adjoint() const {
        CMat m(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m(j, i) = std::conj((*this)(i, j));
        return m;
    }

    cd trace() const {
        cd t = 0.0;
        const int n = rows < cols ? rows : cols;
        for (int i = 0; i < n; ++i) t += (*this)(i, i);
        return t;
    }

    double frobenius() const {
        double s = 0.0;
        for (const cd& v : a) s += std::norm(v);
        return std::sqrt(s);
    }

    double max_abs() const {
        double m = 0.0;
        for (const cd& v : a) m = std::max(m, std::abs(v));
        return m;
    }

    bool finite() const {
        for (const cd& v : a)
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
        return true;
    }

    // Frobenius norm of H - H^*
    double hermitian_defect() const {
        if (rows != cols) return HUGE_VAL;
        double s = 0.0;
        for (int i = 0; i < rows; ++i)
            for (int j = i; j < cols; ++j) s += std::norm((*this)(i, j) - std::conj((*this)(j, i)));
        return std::sqrt(2.0 * s);
    }

    CMat& operator+=(const CMat& o) {
        if (!same_shape(o)) throw InputError("CMat: shape mismatch in +=");
        for (std::size_t i = 0; i < a.size(); ++i) a[i] += o.a[i];
        return *this;
    }
    CMat& operator-=(const CMat& o) {
        if (!same_shape(o)) throw InputError("CMat: shape mismatch in -=");
        for (std::size_t i = 0; i < a.size(); ++i) a[i] -= o.a[i];
        return *this;
    }
    CMat& operator*=(cd s) {
        for (auto& v : a) v *= s;
        return *this;
    }
};

inline CMat operator+(CMat x, const CMat& y) { return x += y; }
inline CMat operator-(CMat x, const CMat& y) { return x -= y; }
inline CMat operator*(cd s, CMat x) { return x *= s; }
inline CMat operator*(CMat x, cd s) { return x *= s; }

inline CMat operator*(const CMat& x, const CMat& y) {
    if (x.cols != y.rows) throw InputError("CMat: shape mismatch in *");
    CMat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i) {
        for (int k = 0; k < x.cols; ++k) {
            const cd xv = x(i, k);
            if (xv == cd{}) continue;
            for (int j = 0; j < y.cols; ++j) r(i, j) += xv * y(k, j);
        }
    }
    return r;
}

// A^* A and A A^* come up constantly; both results are Hermitian.
inline CMat gram(const CMat& x) { return x.adjoint() * x; }   // x^* x, cols x cols
inline CMat cogram(const CMat& x) { return x * x.adjoint(); } // x x^*, rows x rows

inline double frobenius_distance(const CMat& x, const CMat& y) { return (x - y).frobenius(); }

}  // namespace z2lab
