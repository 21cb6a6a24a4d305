//! Classifiers for hyperideals.

pub mod checks;
pub mod expansion;
pub mod naive;
pub mod report;

pub use checks::{
    is_delta_n, is_kn_absorbing_delta_n, is_n_hyperideal, is_s_n, multiplicative_subsets, Classifier, Family,
    MultSubset,
};
pub use expansion::{expansion_apply, is_expansion, is_intersection_preserving, ExpansionFn};
pub use report::{classify_all, Row};
