//! Specializations of Schur and related symmetric functions, the gcd
//! theorems for them, and symmetric group characters.

mod gcd;
mod mn;
mod specialization;

pub use gcd::{
    gcd_int_schur, gcd_poly_schur, is_unimodal, predicted_gcd_int, predicted_gcd_poly,
    schur_quotient, unimodality_check, unimodality_of, Unimodality,
};
pub use mn::{mn_character, CharacterValueTable};
pub use specialization::{
    content_product, jacobi_trudi_oracle, spec_e, spec_h, spec_h_list, spec_m, spec_schur_ones,
    spec_schur_q, SpecValue,
};
