#pragma once

#include "qfb/cmat.hpp"

namespace qfb {

/// Basis labels with their ordering conventions.
///
/// Dicke3:  the j=1 triplet ordered |1> = |ee>, |2> = (|ge>+|eg>)/sqrt(2),
///          |3> = |gg>.
/// Product4: two-qubit product states ordered {|gg>, |ge>, |eg>, |ee>},
///          the basis the spin-flip conjugation is taken in.
/// Dicke4:  Dicke3 extended by the singlet (|ge>-|eg>)/sqrt(2) as the
///          fourth state; used when individual decay leaves the symmetric
///          subspace.
/// CavityJoint: (atomic Dicke space) tensor (photon ladder), atom-major,
///          photon-number-minor with photon numbers 0..n_fock-1.
enum class Basis { Dicke3, Product4, Dicke4, CavityJoint };

const char* basis_name(Basis b);

/// A density matrix tagged with the basis its entries are written in.
/// Cavity-joint states carry the Fock cutoff and atomic dimension.
struct DensityMatrix {
    CMat mat;
    Basis basis = Basis::Dicke3;
    int n_fock = 0;    // CavityJoint only
    int atom_dim = 0;  // CavityJoint only: 3 or 4

    /// unit trace, Hermitian, eigenvalues >= -psd_tol
    void validate(double psd_tol = 1e-9) const;
};

DensityMatrix pure_state(const cvec& amplitudes, Basis basis);

// 2x2 qubit operators in the ordering {|g>, |e>}. sigma_minus is the
// lowering operator |g><e|; sigma_y is exactly [[0, -i], [i, 0]].
CMat sigma_minus();
CMat sigma_plus();
CMat sigma_x();
CMat sigma_y();
CMat sigma_z();

struct CollectiveOps {
    CMat Jm;  // J^- = sigma1^- + sigma2^-
    CMat Jp;  // J^+
    CMat Jx;  // J^+ + J^-   (the feedback-section convention, not /2)
    CMat Jy;  // (J^+ - J^-)/i
    CMat Jz;  // closes [Jx, Jy] = 2i Jz
};

/// Collective angular-momentum operators in Dicke3 or Product4. Other
/// bases are rejected; cavity-joint operators are built with
/// tensor_with_cavity.
CollectiveOps collective_ops(Basis basis);

/// 4x3 isometry taking Dicke3 coordinates to Product4 coordinates.
CMat dicke3_isometry();

/// 4x4 unitary taking Dicke4 coordinates (triplet + singlet) to Product4.
CMat dicke4_unitary();

/// Embed a j=1 state into the product basis. The singlet stays
/// unpopulated and the trace is preserved exactly.
DensityMatrix embed_dicke_to_product(const DensityMatrix& rho3);

/// Truncated photon annihilation operator, b|n> = sqrt(n)|n-1>, on the
/// ladder 0..n_fock-1.
CMat fock_annihilation(int n_fock);

/// atom_op tensor cavity_op in CavityJoint ordering (atom-major).
CMat tensor_with_cavity(const CMat& atom_op, const CMat& cavity_op, int n_fock);

}  // namespace qfb
