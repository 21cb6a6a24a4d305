//! Catalog, search and theorem verification.

pub mod catalog;
pub mod search;
pub mod suite;
pub mod theorems;
