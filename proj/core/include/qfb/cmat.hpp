#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace qfb {

using cplx = std::complex<double>;
using cvec = std::vector<cplx>;

/// Base class for everything this library throws.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// A caller broke a documented precondition (wrong basis, non-Hermitian
/// input, invalid parameters, dimension mismatch).
struct contract_error : error {
    using error::error;
};

/// An algorithm failed numerically (no convergence, divergence, step-size
/// breach). Carries the offending residual when one is available.
struct numeric_error : error {
    explicit numeric_error(const std::string& what, double residual = 0.0)
        : error(what), residual(residual) {}
    double residual;
};

/// Linear system is singular, or a steady state is not unique.
struct singular_error : error {
    using error::error;
};

/// A matrix required to be positive semidefinite is not.
struct not_psd_error : error {
    explicit not_psd_error(const std::string& what, double eigenvalue)
        : error(what), eigenvalue(eigenvalue) {}
    double eigenvalue;
};

/// Dense complex square matrix, the carrier for operators, density
/// matrices and superoperator matrices. Row-major storage. Dimensions are
/// small by design (the largest model here is the truncated atom+cavity
/// space); construction rejects dim = 0 and anything above kMaxDim.
class CMat {
  public:
    static constexpr int kMaxDim = 64;

    CMat() : dim_(0) {}
    explicit CMat(int dim) : dim_(check_dim(dim)), a_(size_t(dim) * dim) {}
    CMat(int dim, std::initializer_list<cplx> entries);

    static CMat identity(int dim);
    static CMat zero(int dim) { return CMat(dim); }

    int dim() const { return dim_; }
    bool empty() const { return dim_ == 0; }

    cplx& operator()(int i, int j) { return a_[size_t(i) * dim_ + j]; }
    const cplx& operator()(int i, int j) const { return a_[size_t(i) * dim_ + j]; }

    const cplx* data() const { return a_.data(); }
    cplx* data() { return a_.data(); }

    CMat& operator+=(const CMat& rhs);
    CMat& operator-=(const CMat& rhs);
    CMat& operator*=(cplx s);

    friend CMat operator+(CMat lhs, const CMat& rhs) { return lhs += rhs; }
    friend CMat operator-(CMat lhs, const CMat& rhs) { return lhs -= rhs; }
    friend CMat operator*(cplx s, CMat m) { return m *= s; }
    friend CMat operator*(CMat m, cplx s) { return m *= s; }
    friend CMat operator*(const CMat& lhs, const CMat& rhs);  // matrix product

    CMat adjoint() const;
    CMat transpose() const;
    CMat conjugate() const;

    cplx trace() const;
    /// max_ij |a_ij|
    double max_abs() const;
    /// max_ij |a_ij - conj(a_ji)|
    double hermiticity_defect() const;
    /// (m + m^dag)/2, in place
    void hermitize();

    bool is_hermitian(double tol = 1e-12) const { return hermiticity_defect() <= tol; }

  private:
    static int check_dim(int dim) {
        if (dim <= 0 || dim > kMaxDim)
            throw contract_error("CMat: dimension " + std::to_string(dim) +
                                 " outside the supported range [1, " +
                                 std::to_string(kMaxDim) + "]");
        return dim;
    }

    int dim_;
    cvec a_;
};

/// Throws contract_error unless m is Hermitian within tol (default the
/// construction contract for Hermitian-flagged values).
void require_hermitian(const CMat& m, double tol = 1e-12, const char* who = "");

/// max-entry distance between two matrices of equal dimension.
double max_abs_diff(const CMat& a, const CMat& b);

}  // namespace qfb
