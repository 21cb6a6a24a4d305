//! Finite commutative Krasner (m,n)-hyperrings: axioms, hyperideals,
//! classifiers and constructions.

pub mod classify;
pub mod constructions;
pub mod error;
pub mod harness;
pub mod ideals;
pub mod io;
pub mod ring;
pub mod set;
pub mod tuples;
pub mod validate;
pub mod verdict;

pub use error::{Error, Result, StructureError};
pub use ideals::{Hyperideal, Lattice};
pub use ring::{HyperRing, RingShape};
pub use set::{Elem, ElementSet};
pub use verdict::{Reading, Verdict, Witness};
