use thiserror::Error;

use crate::set::Elem;

/// A table or declaration that does not describe a total structure over the carrier.
///
/// These are distinct from axiom violations: a structure with a structural error
/// cannot be built at all, while an axiom violation is reported by the validator.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("carrier is empty")]
    EmptyCarrier,
    #[error("carrier has {0} elements; at most {max} are supported", max = crate::set::MAX_CARRIER)]
    CarrierTooLarge(usize),
    #[error("arity {0} is below 2")]
    ArityTooSmall(usize),
    #[error("dense table for arity {arity} over {size} elements is too large")]
    TableTooLarge { size: usize, arity: usize },
    #[error("duplicate element name `{0}`")]
    DuplicateName(String),
    #[error("{role} refers to element index {index} outside the carrier")]
    OutOfCarrier { role: String, index: Elem },
    #[error("neg map has {got} entries, expected {expected}")]
    NegLength { expected: usize, got: usize },
    #[error("{table} table has no entry for {key:?}")]
    MissingCell { table: char, key: Vec<Elem> },
    #[error("{table} entry for {key:?} is not a canonical (sorted) key")]
    NonCanonicalKey { table: char, key: Vec<Elem> },
    #[error("{table} entry for {key:?} has {got} arguments, expected {expected}")]
    KeyArity { table: char, key: Vec<Elem>, expected: usize, got: usize },
    #[error("f entry for {0:?} is the empty set")]
    EmptyValue(Vec<Elem>),
}

/// Failures of the operations on a well-formed structure.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error("operation `{0}` requires a scalar unit and the structure declares none")]
    UnitRequired(&'static str),
    #[error("input set is empty")]
    EmptySet,
    #[error("expected {expected} arguments, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("exponent {t} is neither at most n = {n} nor of the form l(n-1)+1")]
    ExponentNotRepresentable { t: usize, n: usize },
    #[error("element index {0} is outside the carrier")]
    ElementOutOfRange(Elem),
    #[error("the set is not a hyperideal: {0}")]
    NotHyperideal(String),
    #[error("the hyperideal must be proper")]
    NotProper,
    #[error("the set is not closed under multiplication: {0}")]
    NotMultiplicative(String),
    #[error("the hyperideal meets the multiplicative subset")]
    NotDisjoint,
    #[error("arities differ: ({0},{1}) vs ({2},{3})")]
    ArityMismatch(usize, usize, usize, usize),
    #[error("expansion table has no entry for the given hyperideal")]
    MissingTableEntry,
    #[error("k must be at least 2, got {0}")]
    AbsorbingOrder(usize),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("quotient construction is inconsistent: {0}")]
    QuotientInconsistent(String),
    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
