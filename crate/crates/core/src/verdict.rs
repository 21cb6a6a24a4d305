//! Outcomes of classification checks.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::ring::HyperRing;
use crate::set::{Elem, ElementSet};

/// How the index quantifier in the N-family definitions is read.
///
/// The definitions say "`x_i` outside the nilradical for some `i` implies the
/// `i`-th drop-product lies in the target". [`Reading::Strict`] requires the
/// conclusion for every qualifying index; [`Reading::Lax`] accepts a tuple when
/// no index qualifies or when at least one qualifying index satisfies it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Reading {
    Strict,
    Lax,
}

impl Reading {
    pub const BOTH: [Reading; 2] = [Reading::Strict, Reading::Lax];

    pub fn as_str(self) -> &'static str {
        match self {
            Reading::Strict => "strict",
            Reading::Lax => "lax",
        }
    }
}

impl fmt::Display for Reading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Reading {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "strict" => Ok(Reading::Strict),
            "lax" => Ok(Reading::Lax),
            other => Err(format!("unknown reading `{other}` (expected strict or lax)")),
        }
    }
}

/// A concrete counterexample.
///
/// `tuple` is the offending argument tuple. `positions` holds 0-based indices
/// into it when the failure concerns particular positions (the index whose
/// drop-product failed, or the designated factor subset for absorbing checks).
/// `sets` carries offending subsets for ideal-level checks.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Witness {
    pub tuple: Vec<Elem>,
    pub positions: Vec<usize>,
    pub sets: Vec<ElementSet>,
}

impl Witness {
    pub fn tuple(tuple: Vec<Elem>) -> Self {
        Witness { tuple, ..Default::default() }
    }

    pub fn at(tuple: Vec<Elem>, index: usize) -> Self {
        Witness { tuple, positions: vec![index], sets: Vec::new() }
    }

    pub fn sets(sets: Vec<ElementSet>) -> Self {
        Witness { sets, ..Default::default() }
    }

    /// Human form using element names; positions are shown 1-based.
    pub fn describe(&self, h: &HyperRing) -> String {
        let mut parts = Vec::new();
        if !self.tuple.is_empty() {
            parts.push(h.format_tuple(&self.tuple));
        }
        if !self.positions.is_empty() {
            let p: Vec<String> = self.positions.iter().map(|i| (i + 1).to_string()).collect();
            parts.push(format!("at {}", p.join(",")));
        }
        for s in &self.sets {
            parts.push(h.format_set(*s));
        }
        parts.join(" ")
    }
}

/// The result of a classification check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub holds: bool,
    /// `None` for checks with no index quantifier.
    pub reading: Option<Reading>,
    /// Present iff `holds` is false.
    pub witness: Option<Witness>,
    /// The S-element found by an S-N check; present iff that check holds.
    pub s_element: Option<Elem>,
}

impl Verdict {
    pub fn pass(reading: Option<Reading>) -> Self {
        Verdict { holds: true, reading, witness: None, s_element: None }
    }

    pub fn fail(reading: Option<Reading>, witness: Witness) -> Self {
        Verdict { holds: false, reading, witness: Some(witness), s_element: None }
    }

    pub fn from_witness(reading: Option<Reading>, witness: Option<Witness>) -> Self {
        match witness {
            None => Verdict::pass(reading),
            Some(w) => Verdict::fail(reading, w),
        }
    }
}
