//! Values and decompositions of the parking-space class functions
//! `phi_k(w) = k^{dim V^w}`, their graded versions and the two-variable
//! `phi_hat(w) = det(1 - u w) / det(1 - q w)` for the symmetric groups,
//! `G(m,p,n)` and the dihedral groups.

mod bipoly;
mod decomposition;
mod dihedral;
mod gm1n;
mod gmpn;
mod sym;

pub use decomposition::{Basis, CharLabel, Coefficient, Decomposition, Entry};
pub use dihedral::{
    dihedral_character, dihedral_classes, dihedral_condition_check, dihedral_decomposition,
    dihedral_labels, dihedral_perm_coefficients, dihedral_perm_value, dihedral_reconstructs_phi, dihedral_reconstruction_check,
    dihedral_ungraded_decomposition, phi_dihedral, DihedralClass, DihedralClassFunction,
    DihedralLabel,
};
pub use gm1n::{
    eta_value, g_m1n_character, g_m1n_class_size, g_m1n_classes, g_m1n_hat_decomposition,
    g_m1n_hat_multiplicity, g_m1n_hat_reconstruction_check, g_m1n_reconstructs_phi, g_m1n_mult_graded_fuss,
    g_m1n_mult_ungraded, g_m1n_perm_decomposition, g_m1n_ungraded_decomposition, phi_g_m1n,
};
pub use gmpn::{
    g_mmn_proof_polynomials, g_mmn_triv_det_multiplicities, gmpn_pair_difference,
    gmpn_restricted_multiplicity, gmpn_ungraded_decomposition, shift_orbits, ProofPolynomials, ShiftOrbit,
};
pub use sym::{
    phi_hat_sym, phi_value_sym, sym_irr_decomposition, sym_irr_oracle, sym_perm_decomposition,
    PhiValue,
};
