use parkspace::characters::{
    dihedral_decomposition, dihedral_perm_coefficients, dihedral_ungraded_decomposition, g_m1n_hat_decomposition,
    g_m1n_perm_decomposition, g_m1n_ungraded_decomposition, gmpn_ungraded_decomposition, sym_irr_decomposition,
    sym_perm_decomposition, Decomposition,
};
use parkspace::groups::GroupLabel;
use parkspace::{Error, Result};

use crate::{positive, BasisArg, DecomposeArgs};

fn unsupported(what: impl Into<String>) -> Error {
    Error::Inapplicable(what.into())
}

/// Dispatch on the group family. Symbolic output (no `--k`) is available
/// where closed forms in `u` exist.
pub fn run(args: &DecomposeArgs) -> Result<Decomposition> {
    let label: GroupLabel = args.group.parse()?;
    let perm = args.basis == BasisArg::Permutation;
    let need_k = || args.k.ok_or_else(|| unsupported(format!("{label}: this decomposition needs --k")));
    if let Some(m) = label.is_dihedral() {
        return match (perm, args.k) {
            (true, Some(k)) => dihedral_perm_coefficients(m, k),
            (true, None) => Err(unsupported("dihedral permutation coefficients need --k")),
            (false, Some(k)) if !args.q => dihedral_ungraded_decomposition(m, k),
            (false, k) => dihedral_decomposition(m, k),
        };
    }
    match label {
        GroupLabel::Sym(n) => {
            let k = positive("k", need_k()?)?;
            if perm {
                if args.q {
                    return Err(unsupported("graded permutation coefficients are not available for S_n"));
                }
                sym_perm_decomposition(n, k)
            } else {
                sym_irr_decomposition(n, k, args.q)
            }
        }
        GroupLabel::Cyclic(m) => imprimitive_one(args, m as usize, 1, perm),
        GroupLabel::Imprimitive { m, p: 1, n } => imprimitive_one(args, m as usize, n, perm),
        GroupLabel::Imprimitive { m, p, n } => {
            if perm || args.q {
                return Err(unsupported(format!("{label}: only ungraded irreducible multiplicities are available")));
            }
            gmpn_ungraded_decomposition(m as usize, p, n, need_k()?)
        }
        GroupLabel::Exceptional(_) => Err(unsupported(format!("{label}: character tables of exceptional groups are not included"))),
        GroupLabel::Dihedral(_) => unreachable!("handled above"),
    }
}

fn imprimitive_one(args: &DecomposeArgs, m: usize, n: u64, perm: bool) -> Result<Decomposition> {
    match (perm, args.k) {
        (true, Some(k)) => g_m1n_perm_decomposition(m, n, k),
        (true, None) => Err(unsupported("permutation coefficients need --k")),
        (false, Some(k)) if !args.q => g_m1n_ungraded_decomposition(m, n, k),
        (false, k) => g_m1n_hat_decomposition(m, n, k),
    }
}
