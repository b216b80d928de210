#include "qfb/cmat.hpp"

#include <algorithm>
#include <cmath>

namespace qfb {

CMat::CMat(int dim, std::initializer_list<cplx> entries) : CMat(dim) {
    if (entries.size() != a_.size())
        throw contract_error("CMat: initializer has " + std::to_string(entries.size()) +
                             " entries, expected " + std::to_string(a_.size()));
    std::copy(entries.begin(), entries.end(), a_.begin());
}

CMat CMat::identity(int dim) {
    CMat m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

CMat& CMat::operator+=(const CMat& rhs) {
    if (dim_ != rhs.dim_) throw contract_error("CMat::operator+=: dimension mismatch");
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += rhs.a_[k];
    return *this;
}

CMat& CMat::operator-=(const CMat& rhs) {
    if (dim_ != rhs.dim_) throw contract_error("CMat::operator-=: dimension mismatch");
    for (size_t k = 0; k < a_.size(); ++k) a_[k] -= rhs.a_[k];
    return *this;
}

CMat& CMat::operator*=(cplx s) {
    for (auto& x : a_) x *= s;
    return *this;
}

CMat operator*(const CMat& lhs, const CMat& rhs) {
    if (lhs.dim_ != rhs.dim_) throw contract_error("CMat::operator*: dimension mismatch");
    const int n = lhs.dim_;
    CMat out(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const cplx lik = lhs(i, k);
            if (lik == cplx(0.0)) continue;
            const cplx* rrow = rhs.data() + size_t(k) * n;
            cplx* orow = out.data() + size_t(i) * n;
            for (int j = 0; j < n; ++j) orow[j] += lik * rrow[j];
        }
    }
    return out;
}

CMat CMat::adjoint() const {
    CMat out(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

CMat CMat::transpose() const {
    CMat out(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

CMat CMat::conjugate() const {
    CMat out(dim_);
    for (size_t k = 0; k < a_.size(); ++k) out.a_[k] = std::conj(a_[k]);
    return out;
}

cplx CMat::trace() const {
    cplx t = 0.0;
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double CMat::max_abs() const {
    double m = 0.0;
    for (const auto& x : a_) m = std::max(m, std::abs(x));
    return m;
}

double CMat::hermiticity_defect() const {
    double m = 0.0;
    for (int i = 0; i < dim_; ++i)
        for (int j = i; j < dim_; ++j)
            m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return m;
}

void CMat::hermitize() {
    for (int i = 0; i < dim_; ++i) {
        (*this)(i, i) = (*this)(i, i).real();
        for (int j = i + 1; j < dim_; ++j) {
            const cplx v = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
            (*this)(i, j) = v;
            (*this)(j, i) = std::conj(v);
        }
    }
}

void require_hermitian(const CMat& m, double tol, const char* who) {
    const double defect = m.hermiticity_defect();
    if (defect > tol)
        throw contract_error(std::string(who) + ": matrix is not Hermitian, max|M - M^dag| = " +
                             std::to_string(defect));
}

double max_abs_diff(const CMat& a, const CMat& b) {
    if (a.dim() != b.dim()) throw contract_error("max_abs_diff: dimension mismatch");
    double m = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

}  // namespace qfb
