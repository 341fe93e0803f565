//! Irreducible complex reflection groups through their degrees and
//! codegrees, generalized q-Catalan numbers, and the congruence conditions
//! governing their polynomiality and integrality.

mod catalan;
mod conditions;
mod data;
mod residue;
mod tables;

pub use catalan::{
    catalan_at_one, catalan_q, catalan_star_at_one, catalan_star_identity_check, catalan_star_q,
    is_polynomial_value,
};
pub use conditions::{
    character_condition, integrality_condition, integrality_condition_naive, main_condition,
    q_polynomiality_condition, PolynomialityConditions, ZeroCase,
};
pub use data::{exceptional_groups, group, group_data, GroupLabel, ReflectionGroupData};
pub use residue::ResidueCondition;
pub use tables::{
    expected_cat_polynomiality, expected_integrality, family_labels, verify_tables, TableCheck,
    TableReport,
};

