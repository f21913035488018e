#include "z2lab/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace z2lab {

namespace {

double offdiag_mass(const CMat& h) {
    double s = 0.0;
    for (int i = 0; i < h.rows; ++i)
        for (int j = i + 1; j < h.cols; ++j) s += std::norm(h(i, j));
    return std::sqrt(2.0 * s);
}

}  // namespace

EigResult hermitian_eig(const CMat& h, double tol) {
    if (h.rows != h.cols) throw InputError("hermitian_eig: matrix not square");
    if (!h.finite()) throw InputError("hermitian_eig: non-finite entries");
    const int n = h.rows;
    const double scale = h.frobenius();
    const double gate = std::max(tol, 1e-12) * std::max(scale, 1.0);
    if (h.hermitian_defect() > gate) throw InputError("hermitian_eig: matrix not Hermitian within tolerance");

    // Work on the Hermitian part so rounding in the input cannot produce
    // complex eigenvalue drift.
    CMat a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));
    CMat v = CMat::identity(n);

    const double target = tol * std::max(scale, 1e-300);
    for (int sweep = 0; sweep < 100; ++sweep) {
        if (offdiag_mass(a) <= target) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cd apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag <= 1e-300) {
                    a(p, q) = 0.0;
                    a(q, p) = 0.0;
                    continue;
                }
                // Unitary plane rotation R with R(p,p)=R(q,q)=c,
                // R(p,q) = -s e^{i theta}, R(q,p) = s e^{-i theta},
                // where a(p,q) = mag e^{i theta}.  Annihilates a(p,q).
                const cd phase = apq / mag;
                const double alpha = a(p, p).real();
                const double delta = a(q, q).real();
                const double tau = (alpha - delta) / (2.0 * mag);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(tau * tau + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const cd se_m = s * std::conj(phase);  // s e^{-i theta}
                const cd se_p = s * phase;             // s e^{+i theta}

                a(p, p) = alpha + t * mag;
                a(q, q) = delta - t * mag;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (int r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const cd hrp = a(r, p);
                    const cd hrq = a(r, q);
                    a(r, p) = hrp * c + hrq * se_m;
                    a(r, q) = hrq * c - hrp * se_p;
                    a(p, r) = std::conj(a(r, p));
                    a(q, r) = std::conj(a(r, q));
                }
                for (int r = 0; r < n; ++r) {
                    const cd vrp = v(r, p);
                    const cd vrq = v(r, q);
                    v(r, p) = vrp * c + vrq * se_m;
                    v(r, q) = vrq * c - vrp * se_p;
                }
            }
        }
        if (sweep == 99 && offdiag_mass(a) > target)
            throw Error("hermitian_eig: Jacobi failed to converge in 100 sweeps");
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a(i, i).real() > a(j, j).real(); });

    EigResult out;
    out.spectrum.values.resize(static_cast<std::size_t>(n));
    out.basis = CMat(n, n);
    for (int j = 0; j < n; ++j) {
        out.spectrum.values[static_cast<std::size_t>(j)] = a(order[static_cast<std::size_t>(j)], order[static_cast<std::size_t>(j)]).real();
        for (int i = 0; i < n; ++i) out.basis(i, j) = v(i, order[static_cast<std::size_t>(j)]);
    }
    return out;
}

Spectrum singular_values(const CMat& m) {
    const EigResult e = hermitian_eig(gram(m));
    Spectrum s;
    s.values.reserve(e.spectrum.values.size());
    for (double lam : e.spectrum.values) s.values.push_back(std::sqrt(std::max(lam, 0.0)));
    return s;
}

double trace_norm(const CMat& m) {
    const Spectrum s = singular_values(m);
    double t = 0.0;
    for (double v : s.values) t += v;
    return t;
}

double op_norm(const CMat& m) {
    if (m.a.empty()) return 0.0;
    const Spectrum s = singular_values(m);
    return s.values.empty() ? 0.0 : s.values.front();
}

CMat matrix_abs(const CMat& m) { return psd_sqrt(gram(m), 1e-9); }

CMat psd_sqrt(const CMat& h, double tol) {
    const EigResult e = hermitian_eig(h);
    const double scale = std::max(h.frobenius(), 1.0);
    const int n = h.rows;
    for (double lam : e.spectrum.values)
        if (lam < -tol * scale) throw InputError("psd_sqrt: matrix has a negative eigenvalue");
    CMat root(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            cd acc = 0.0;
            for (int k = 0; k < n; ++k) {
                const double lam = std::max(e.spectrum.values[static_cast<std::size_t>(k)], 0.0);
                acc += e.basis(i, k) * std::sqrt(lam) * std::conj(e.basis(j, k));
            }
            root(i, j) = acc;
        }
    }
    return root;
}

bool psd_leq(const CMat& a, const CMat& b, double tol) {
    if (!a.same_shape(b) || a.rows != a.cols) throw InputError("psd_leq: shape mismatch");
    const CMat diff = b - a;
    const EigResult e = hermitian_eig(diff);
    const double lam_min = e.spectrum.values.empty() ? 0.0 : e.spectrum.values.back();
    return lam_min >= -tol;
}

}  // namespace z2lab
