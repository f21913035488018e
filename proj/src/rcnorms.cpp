#include "z2lab/rcnorms.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "z2lab/eig.hpp"
#include "z2lab/errors.hpp"
#include "z2lab/parallel.hpp"
#include "z2lab/rng.hpp"

namespace z2lab {

void MatrixTuple::validate() const {
    for (const CMat& m : mats) {
        if (m.rows != m.cols) throw InputError("MatrixTuple: matrices must be square");
        if (m.rows != dim()) throw InputError("MatrixTuple: non-uniform shapes");
        if (!m.finite()) throw InputError("MatrixTuple: non-finite entries");
    }
    if (frequencies) {
        if (static_cast<int>(frequencies->size()) != count())
            throw InputError("MatrixTuple: frequency count mismatch");
        std::set<std::int64_t> distinct(frequencies->begin(), frequencies->end());
        if (static_cast<int>(distinct.size()) != count())
            throw InputError("MatrixTuple: duplicate frequencies");
    }
}

CMat column_gram(const MatrixTuple& t) {
    CMat s = CMat::zero(t.dim(), t.dim());
    for (const CMat& c : t.mats) s += gram(c);
    return s;
}

CMat row_gram(const MatrixTuple& t) {
    CMat s = CMat::zero(t.dim(), t.dim());
    for (const CMat& c : t.mats) s += cogram(c);
    return s;
}

double sinfty_rc_norm(const MatrixTuple& t) {
    if (t.count() == 0) return 0.0;
    t.validate();
    return std::sqrt(std::max(op_norm(column_gram(t)), op_norm(row_gram(t))));
}

namespace {

double tuple_frobenius(const MatrixTuple& t) {
    double s = 0.0;
    for (const CMat& c : t.mats) s += c.frobenius() * c.frobenius();
    return std::sqrt(s);
}

MatrixTuple scaled(const MatrixTuple& t, cd factor) {
    MatrixTuple out = t;
    for (CMat& c : out.mats) c *= factor;
    return out;
}

MatrixTuple zero_like(const MatrixTuple& t) {
    MatrixTuple out;
    out.frequencies = t.frequencies;
    out.mats.assign(static_cast<std::size_t>(t.count()), CMat::zero(t.dim(), t.dim()));
    return out;
}

double sqrt_trace(const CMat& psd) {
    const EigResult e = hermitian_eig(psd);
    double s = 0.0;
    for (double lam : e.spectrum.values) s += std::sqrt(std::max(lam, 0.0));
    return s;
}

double objective(const MatrixTuple& y, const MatrixTuple& z) {
    return sqrt_trace(column_gram(y)) + sqrt_trace(row_gram(z));
}

// One alternating reweighted step: with W1 = (sum Y^*Y + eps)^(-1/2) and
// W2 = (sum ZZ^* + eps)^(-1/2), the quadratic surrogate
//   min_Y 1/2 [ Tr(sum Y_i^* Y_i W1) + Tr(W2 sum Z_i Z_i^*) ],  Z = C - Y
// has first-order condition  Y_i W1 + W2 Y_i = W2 C_i  (a Sylvester
// equation), solved in the eigenbases of W1 and W2.
MatrixTuple irls_step(const MatrixTuple& c, const MatrixTuple& y, double eps) {
    const int n = c.dim();
    CMat p = column_gram(y);
    CMat q = CMat::zero(n, n);
    for (int i = 0; i < c.count(); ++i) {
        const CMat z = c.mats[static_cast<std::size_t>(i)] - y.mats[static_cast<std::size_t>(i)];
        q += cogram(z);
    }
    for (int i = 0; i < n; ++i) {
        p(i, i) += eps;
        q(i, i) += eps;
    }
    const EigResult ep = hermitian_eig(p);
    const EigResult eq = hermitian_eig(q);
    std::vector<double> w1(static_cast<std::size_t>(n)), w2(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        w1[static_cast<std::size_t>(i)] = 1.0 / std::sqrt(std::max(ep.spectrum.values[static_cast<std::size_t>(i)], eps));
        w2[static_cast<std::size_t>(i)] = 1.0 / std::sqrt(std::max(eq.spectrum.values[static_cast<std::size_t>(i)], eps));
    }
    // W2 C_i in the (U2, U1) bases, divide by (w1_b + w2_a), map back
    MatrixTuple next = zero_like(c);
    const CMat u1 = ep.basis;
    const CMat u2 = eq.basis;
    const CMat u2h = u2.adjoint();
    for (int i = 0; i < c.count(); ++i) {
        CMat rhs = u2h * c.mats[static_cast<std::size_t>(i)] * u1;  // in rotated bases
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                const double wa = w2[static_cast<std::size_t>(a)];
                rhs(a, b) = rhs(a, b) * wa / (w1[static_cast<std::size_t>(b)] + wa);
            }
        next.mats[static_cast<std::size_t>(i)] = u2 * rhs * u1.adjoint();
    }
    return next;
}

}  // namespace

UpperResult s1_rc_upper(const MatrixTuple& t, bool refine) {
    UpperResult best;
    if (t.count() == 0) return best;  // empty tuple: norm 0 by convention
    t.validate();

    const double col_val = sqrt_trace(column_gram(t));
    const double row_val = sqrt_trace(row_gram(t));

    // candidates: all-column (Y=C), all-row (Z=C), scalar splits Y = lambda C
    best.value = col_val;
    best.y = t;
    best.z = zero_like(t);
    if (row_val < best.value) {
        best.value = row_val;
        best.y = zero_like(t);
        best.z = t;
    }
    for (int k = 1; k < 10; ++k) {
        const double lam = 0.1 * k;
        const double v = lam * col_val + (1.0 - lam) * row_val;
        if (v < best.value) {
            best.value = v;
            best.y = scaled(t, lam);
            best.z = scaled(t, 1.0 - lam);
        }
    }

    if (refine) {
        const double scale = tuple_frobenius(t);
        if (scale > 0) {
            MatrixTuple y = best.y;
            double eps = 1e-3 * scale * scale;
            for (int it = 0; it < 40; ++it) {
                y = irls_step(t, y, eps);
                MatrixTuple z = t;
                for (int i = 0; i < t.count(); ++i)
                    z.mats[static_cast<std::size_t>(i)] -= y.mats[static_cast<std::size_t>(i)];
                const double v = objective(y, z);
                if (v < best.value) {
                    best.value = v;
                    best.y = y;
                    best.z = z;
                }
                eps = std::max(eps * 0.5, 1e-12 * scale * scale);
            }
        }
    }
    return best;
}

namespace {

// |Tr sum C_i X_i| and its maximizing phase
std::pair<double, cd> pairing(const MatrixTuple& c, const MatrixTuple& x) {
    cd v = 0.0;
    for (int i = 0; i < c.count(); ++i)
        v += (c.mats[static_cast<std::size_t>(i)] * x.mats[static_cast<std::size_t>(i)]).trace();
    const double mag = std::abs(v);
    return {mag, mag > 0 ? v / mag : cd{1.0, 0.0}};
}

MatrixTuple balanced_certificate(const MatrixTuple& t, double sinfty) {
    MatrixTuple x = zero_like(t);
    const double inv = 1.0 / sinfty;
    for (int i = 0; i < t.count(); ++i)
        x.mats[static_cast<std::size_t>(i)] = inv * t.mats[static_cast<std::size_t>(i)].adjoint();
    return x;
}

void rescale_feasible(MatrixTuple& x) {
    const double s = sinfty_rc_norm(x);
    if (s > 0)
        for (CMat& m : x.mats) m *= 1.0 / s;
}

}  // namespace

LowerResult s1_rc_lower(const MatrixTuple& t, const AscentOptions& opt) {
    LowerResult best;
    if (t.count() == 0) return best;
    t.validate();
    if (opt.iterations < 1 || opt.restarts < 1) throw InputError("s1_rc_lower: iterations and restarts must be >= 1");

    const double c_inf = sinfty_rc_norm(t);
    if (c_inf == 0.0) {
        best.certificate = zero_like(t);
        return best;  // zero tuple
    }
    const MatrixTuple balanced = balanced_certificate(t, c_inf);
    best.value = pairing(t, balanced).first;
    best.certificate = balanced;
    best.restart_index = -1;

    const double scale = tuple_frobenius(t);
    const double step0 = opt.step / std::max(scale, 1e-300);
    const int n = t.dim();

    std::vector<LowerResult> runs(static_cast<std::size_t>(opt.restarts));
    parallel_for(static_cast<std::size_t>(opt.restarts), [&](std::size_t r) {
        Rng rng(derive_seed(opt.seed, r));
        MatrixTuple x = balanced;
        if (r > 0) {
            // seeded Gaussian perturbation around the balanced point
            const double sigma = 0.3 * tuple_frobenius(balanced) / std::sqrt(static_cast<double>(t.count()) * n * n);
            for (CMat& m : x.mats)
                for (cd& v : m.a) v += sigma * rng.complex_normal();
        }
        rescale_feasible(x);
        LowerResult run;
        run.certificate = x;
        run.restart_index = static_cast<int>(r);
        double step = step0;
        for (int it = 0; it < opt.iterations; ++it) {
            auto [val, phase] = pairing(t, x);
            if (val > run.value) {
                run.value = val;
                run.certificate = x;
            }
            // supergradient of |Tr sum C_i X_i| in X_i is phase * C_i^*
            for (int i = 0; i < t.count(); ++i) {
                CMat g = t.mats[static_cast<std::size_t>(i)].adjoint();
                g *= phase * step;
                x.mats[static_cast<std::size_t>(i)] += g;
            }
            rescale_feasible(x);
            step *= opt.decay;
        }
        const auto [val, phase] = pairing(t, x);
        if (val > run.value) {
            run.value = val;
            run.certificate = x;
        }
        runs[r] = std::move(run);
    });
    for (auto& run : runs)
        if (run.value > best.value) best = std::move(run);
    return best;
}

NormBracket s1_rc_norm(const MatrixTuple& t, double tol, const AscentOptions& opt) {
    if (tol <= 0) throw InputError("s1_rc_norm: tol must be > 0");
    NormBracket b;
    if (t.count() == 0) {
        b.converged = true;
        return b;
    }
    UpperResult up = s1_rc_upper(t, true);
    b.upper = up.value;
    b.primal_y = std::move(up.y);
    b.primal_z = std::move(up.z);

    const double c_inf = sinfty_rc_norm(t);
    if (c_inf == 0.0) {
        b.lower = 0.0;
        b.dual_certificate = zero_like(t);
        b.converged = b.upper <= tol;
        return b;
    }
    const MatrixTuple balanced = balanced_certificate(t, c_inf);
    b.lower = pairing(t, balanced).first;
    b.dual_certificate = balanced;
    b.restart_index = -1;
    if (b.upper - b.lower > tol * b.upper) {
        LowerResult low = s1_rc_lower(t, opt);
        if (low.value > b.lower) {
            b.lower = low.value;
            b.dual_certificate = std::move(low.certificate);
            b.restart_index = low.restart_index;
        }
    }
    b.converged = (b.upper - b.lower) <= tol * b.upper;
    return b;
}

}  // namespace z2lab
