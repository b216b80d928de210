#include "qfb/operators.hpp"

#include <cmath>

#include "qfb/linalg.hpp"

namespace qfb {

namespace {
const cplx kI(0.0, 1.0);
const double kSqrt2 = std::sqrt(2.0);
}  // namespace

const char* basis_name(Basis b) {
    switch (b) {
        case Basis::Dicke3: return "Dicke3";
        case Basis::Product4: return "Product4";
        case Basis::Dicke4: return "Dicke4";
        case Basis::CavityJoint: return "CavityJoint";
    }
    return "?";
}

void DensityMatrix::validate(double psd_tol) const {
    require_hermitian(mat, 1e-10, "DensityMatrix");
    const double tr_err = std::abs(mat.trace() - cplx(1.0));
    if (tr_err > 1e-10)
        throw contract_error("DensityMatrix: trace deviates from 1 by " + std::to_string(tr_err));
    CMat h = mat;
    h.hermitize();
    const HermEig eig = herm_eig(h);
    if (eig.values.front() < -psd_tol)
        throw not_psd_error("DensityMatrix: eigenvalue below -tolerance", eig.values.front());
}

DensityMatrix pure_state(const cvec& amplitudes, Basis basis) {
    const int d = int(amplitudes.size());
    double n2 = 0.0;
    for (const auto& a : amplitudes) n2 += std::norm(a);
    if (n2 <= 0.0) throw contract_error("pure_state: zero vector");
    CMat rho(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) rho(i, j) = amplitudes[i] * std::conj(amplitudes[j]) / n2;
    return DensityMatrix{std::move(rho), basis};
}

CMat sigma_minus() { return CMat(2, {0.0, 1.0, 0.0, 0.0}); }
CMat sigma_plus() { return CMat(2, {0.0, 0.0, 1.0, 0.0}); }
CMat sigma_x() { return CMat(2, {0.0, 1.0, 1.0, 0.0}); }
CMat sigma_y() { return CMat(2, {0.0, -kI, kI, 0.0}); }
CMat sigma_z() { return CMat(2, {1.0, 0.0, 0.0, -1.0}); }

CollectiveOps collective_ops(Basis basis) {
    CollectiveOps ops;
    if (basis == Basis::Dicke3) {
        // spin-1 ladder: J^- |1> = sqrt(2)|2>, J^- |2> = sqrt(2)|3>
        CMat jm(3);
        jm(1, 0) = kSqrt2;
        jm(2, 1) = kSqrt2;
        ops.Jm = jm;
        ops.Jz = CMat(3, {2.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -2.0});
    } else if (basis == Basis::Product4) {
        const CMat id2 = CMat::identity(2);
        ops.Jm = kron(sigma_minus(), id2) + kron(id2, sigma_minus());
        // excitation difference per qubit; closes [Jx, Jy] = 2i Jz
        ops.Jz = CMat(4);
        ops.Jz(0, 0) = -2.0;
        ops.Jz(3, 3) = 2.0;
    } else {
        throw contract_error(std::string("collective_ops: basis ") + basis_name(basis) +
                             " not supported; build joint operators with tensor_with_cavity");
    }
    ops.Jp = ops.Jm.adjoint();
    ops.Jx = ops.Jp + ops.Jm;
    ops.Jy = (ops.Jp - ops.Jm) * (-kI);
    return ops;
}

CMat dicke3_isometry() {
    CMat v(4);  // stored 4x4, last column unused; only the 4x3 block is read
    v(3, 0) = 1.0;
    v(1, 1) = 1.0 / kSqrt2;
    v(2, 1) = 1.0 / kSqrt2;
    v(0, 2) = 1.0;
    return v;
}

CMat dicke4_unitary() {
    CMat u = dicke3_isometry();
    u(1, 3) = 1.0 / kSqrt2;
    u(2, 3) = -1.0 / kSqrt2;
    return u;
}

DensityMatrix embed_dicke_to_product(const DensityMatrix& rho3) {
    if (rho3.basis != Basis::Dicke3)
        throw contract_error("embed_dicke_to_product: input must be in the Dicke3 basis");
    if (rho3.mat.dim() != 3) throw contract_error("embed_dicke_to_product: expected a 3x3 state");
    const CMat v = dicke3_isometry();
    CMat out(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            cplx s = 0.0;
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b)
                    s += v(i, a) * rho3.mat(a, b) * std::conj(v(j, b));
            out(i, j) = s;
        }
    return DensityMatrix{std::move(out), Basis::Product4};
}

CMat fock_annihilation(int n_fock) {
    if (n_fock < 2) throw contract_error("fock_annihilation: need at least two levels");
    CMat b(n_fock);
    for (int n = 1; n < n_fock; ++n) b(n - 1, n) = std::sqrt(double(n));
    return b;
}

CMat tensor_with_cavity(const CMat& atom_op, const CMat& cavity_op, int n_fock) {
    if (cavity_op.dim() != n_fock)
        throw contract_error("tensor_with_cavity: cavity operator dimension != n_fock");
    return kron(atom_op, cavity_op);
}

}  // namespace qfb
