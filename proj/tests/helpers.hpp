#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "z2lab/cmat.hpp"
#include "z2lab/eig.hpp"
#include "z2lab/fourier.hpp"
#include "z2lab/rcnorms.hpp"
#include "z2lab/rng.hpp"

namespace testutil {

using z2lab::cd;
using z2lab::CMat;

inline CMat random_matrix(z2lab::Rng& rng, int rows, int cols) {
    CMat m(rows, cols);
    for (auto& v : m.a) v = rng.complex_normal();
    return m;
}

inline CMat random_hermitian(z2lab::Rng& rng, int n) {
    const CMat m = random_matrix(rng, n, n);
    CMat h(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    return h;
}

inline CMat random_unitary(z2lab::Rng& rng, int n) {
    return z2lab::hermitian_eig(random_hermitian(rng, n)).basis;
}

inline z2lab::MatrixTuple random_tuple(z2lab::Rng& rng, int d, int n) {
    z2lab::MatrixTuple t;
    for (int i = 0; i < d; ++i) t.mats.push_back(random_matrix(rng, n, n));
    return t;
}

// Uniform trapezoid sums are exact for trig polynomials once the grid beats
// the bandwidth, which makes them an independent oracle for the exact
// moment formulas: (1/N) sum_j g(j/N) = sum of Fourier coefficients of g at
// multiples of N.
inline CMat trapezoid_mean(const std::function<CMat(double)>& g, int n_points, int dim) {
    CMat acc = CMat::zero(dim, dim);
    for (int j = 0; j < n_points; ++j) {
        acc += g(static_cast<double>(j) / n_points);
    }
    acc *= 1.0 / static_cast<double>(n_points);
    return acc;
}

inline double rel_err(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace testutil
