//! Text formats and reports.

pub mod khr;
pub mod report;

pub use khr::{parse_document, parse_hyperring, serialize_hyperring, ParseError, ParseErrorKind, SourceDocument};
pub use report::Report;
