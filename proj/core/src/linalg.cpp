#include "qfb/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qfb {

namespace {

double off_diag_fro(const CMat& a) {
    double s = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

double fro_norm(const CMat& a) {
    double s = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

}  // namespace

HermEig herm_eig(const CMat& m) {
    require_hermitian(m, 1e-12, "herm_eig");
    const int n = m.dim();
    CMat a = m;
    a.hermitize();  // remove the sub-1e-12 asymmetry before rotating
    CMat v = CMat::identity(n);

    const double scale = std::max(1.0, fro_norm(a));
    const double tol = 1e-14 * scale;
    const int max_sweeps = 64;

    int sweep = 0;
    for (; sweep < max_sweeps && off_diag_fro(a) > tol; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double abs_apq = std::abs(apq);
                if (abs_apq <= 0.1 * tol / (n * n)) continue;

                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const cplx phase = apq / abs_apq;

                // tangent of the rotation angle, smaller root
                const double tau = (aqq - app) / (2.0 * abs_apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const cplx s = phase * (t * c);

                // A <- U^dag A U with U = [[c, s], [-conj(s), c]] on (p, q)
                for (int k = 0; k < n; ++k) {
                    const cplx akp = a(k, p);
                    const cplx akq = a(k, q);
                    a(k, p) = c * akp - std::conj(s) * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const cplx apk = a(p, k);
                    const cplx aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = std::conj(s) * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();

                for (int k = 0; k < n; ++k) {
                    const cplx vkp = v(k, p);
                    const cplx vkq = v(k, q);
                    v(k, p) = c * vkp - std::conj(s) * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }
    const double resid = off_diag_fro(a);
    if (resid > tol)
        throw numeric_error("herm_eig: Jacobi sweeps did not converge, off-diagonal norm " +
                                std::to_string(resid),
                            resid);

    HermEig out;
    out.values.resize(n);
    for (int i = 0; i < n; ++i) out.values[i] = a(i, i).real();

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return out.values[i] < out.values[j]; });

    std::vector<double> w(n);
    CMat vs(n);
    for (int k = 0; k < n; ++k) {
        w[k] = out.values[order[k]];
        for (int i = 0; i < n; ++i) vs(i, k) = v(i, order[k]);
    }
    out.values = std::move(w);
    out.vectors = std::move(vs);
    return out;
}

CMat psd_sqrt(const CMat& m) {
    const HermEig eig = herm_eig(m);
    const int n = m.dim();
    for (double w : eig.values)
        if (w < -1e-10)
            throw not_psd_error("psd_sqrt: eigenvalue " + std::to_string(w) +
                                    " below the PSD tolerance",
                                w);
    CMat out(n);
    for (int k = 0; k < n; ++k) {
        const double sw = std::sqrt(std::max(eig.values[k], 0.0));
        if (sw == 0.0) continue;
        for (int i = 0; i < n; ++i) {
            const cplx vik = eig.vectors(i, k);
            if (vik == cplx(0.0)) continue;
            for (int j = 0; j < n; ++j)
                out(i, j) += sw * vik * std::conj(eig.vectors(j, k));
        }
    }
    out.hermitize();
    return out;
}

CMat kron(const CMat& a, const CMat& b) {
    const int da = a.dim(), db = b.dim();
    if (da * db > CMat::kMaxDim)
        throw contract_error("kron: product dimension exceeds the supported range");
    CMat out(da * db);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx(0.0)) continue;
            for (int k = 0; k < db; ++k)
                for (int l = 0; l < db; ++l)
                    out(i * db + k, j * db + l) = aij * b(k, l);
        }
    return out;
}

cvec solve_linear(const CMat& a, const cvec& rhs) {
    const int n = a.dim();
    if (int(rhs.size()) != n)
        throw contract_error("solve_linear: rhs length does not match matrix dimension");

    CMat lu = a;
    cvec x = rhs;
    std::vector<int> piv(n);
    std::iota(piv.begin(), piv.end(), 0);

    for (int k = 0; k < n; ++k) {
        int p = k;
        double best = std::abs(lu(k, k));
        for (int i = k + 1; i < n; ++i) {
            const double m = std::abs(lu(i, k));
            if (m > best) {
                best = m;
                p = i;
            }
        }
        if (best < 1e-14)
            throw singular_error("solve_linear: pivot magnitude " + std::to_string(best) +
                                 " below 1e-14 at column " + std::to_string(k));
        if (p != k) {
            for (int j = 0; j < n; ++j) std::swap(lu(k, j), lu(p, j));
            std::swap(x[k], x[p]);
        }
        const cplx inv_piv = 1.0 / lu(k, k);
        for (int i = k + 1; i < n; ++i) {
            const cplx f = lu(i, k) * inv_piv;
            if (f == cplx(0.0)) continue;
            lu(i, k) = f;
            for (int j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
            x[i] -= f * x[k];
        }
    }
    for (int i = n - 1; i >= 0; --i) {
        cplx s = x[i];
        for (int j = i + 1; j < n; ++j) s -= lu(i, j) * x[j];
        x[i] = s / lu(i, i);
    }
    return x;
}

cvec vec(const CMat& m) {
    const int d = m.dim();
    cvec v(size_t(d) * d);
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) v[size_t(j) * d + i] = m(i, j);
    return v;
}

CMat unvec(const cvec& v, int dim) {
    if (int(v.size()) != dim * dim)
        throw contract_error("unvec: vector length " + std::to_string(v.size()) +
                             " does not match dim^2");
    CMat m(dim);
    for (int j = 0; j < dim; ++j)
        for (int i = 0; i < dim; ++i) m(i, j) = v[size_t(j) * dim + i];
    return m;
}

cvec mat_vec(const CMat& a, const cvec& x) {
    const int n = a.dim();
    if (int(x.size()) != n) throw contract_error("mat_vec: length mismatch");
    cvec y(n);
    for (int i = 0; i < n; ++i) {
        cplx s = 0.0;
        const cplx* row = a.data() + size_t(i) * n;
        for (int j = 0; j < n; ++j) s += row[j] * x[j];
        y[i] = s;
    }
    return y;
}

double norm_inf(const cvec& v) {
    double m = 0.0;
    for (const auto& x : v) m = std::max(m, std::abs(x));
    return m;
}

double trace_distance(const CMat& a, const CMat& b) {
    CMat d = a - b;
    d.hermitize();
    const HermEig eig = herm_eig(d);
    double s = 0.0;
    for (double w : eig.values) s += std::abs(w);
    return 0.5 * s;
}

}  // namespace qfb
