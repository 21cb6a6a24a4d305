//! Hyperideal expansions.

use std::collections::BTreeMap;
use std::fmt;

use crate::constructions::QuotientRing;
use crate::error::{Error, Result};
use crate::ideals::{Hyperideal, Lattice};
use crate::ring::HyperRing;
use crate::set::ElementSet;
use crate::verdict::{Verdict, Witness};

/// An operator on the hyperideals of one structure.
#[derive(Debug, Clone)]
pub enum ExpansionFn {
    /// `δ0(I) = I`.
    Identity,
    /// `δ1(I) = √I`.
    Radical,
    /// `δH(I) = H`.
    Whole,
    /// On `H/J`: `δq(I/J) = δ(I)/J`, computed as lift, apply `base` on `H`, project.
    QuotientLift { base: Box<ExpansionFn>, quotient: Box<QuotientRing> },
    /// Explicit values keyed by hyperideal.
    Table(BTreeMap<ElementSet, ElementSet>),
    /// `outer ∘ inner`.
    Compose { outer: Box<ExpansionFn>, inner: Box<ExpansionFn> },
}

impl ExpansionFn {
    /// The three expansions every structure has, in the order d0, d1, dH.
    pub fn standard() -> [ExpansionFn; 3] {
        [ExpansionFn::Identity, ExpansionFn::Radical, ExpansionFn::Whole]
    }

    pub fn compose(outer: ExpansionFn, inner: ExpansionFn) -> ExpansionFn {
        ExpansionFn::Compose { outer: Box::new(outer), inner: Box::new(inner) }
    }

    pub fn quotient_lift(base: ExpansionFn, quotient: QuotientRing) -> ExpansionFn {
        ExpansionFn::QuotientLift { base: Box::new(base), quotient: Box::new(quotient) }
    }

    pub fn label(&self) -> String {
        match self {
            ExpansionFn::Identity => "d0".into(),
            ExpansionFn::Radical => "d1".into(),
            ExpansionFn::Whole => "dH".into(),
            ExpansionFn::QuotientLift { base, .. } => format!("{}q", base.label()),
            ExpansionFn::Table(_) => "table".into(),
            ExpansionFn::Compose { outer, inner } => format!("{}.{}", outer.label(), inner.label()),
        }
    }

    pub fn parse_standard(s: &str) -> Option<ExpansionFn> {
        match s {
            "d0" => Some(ExpansionFn::Identity),
            "d1" => Some(ExpansionFn::Radical),
            "dH" | "dh" => Some(ExpansionFn::Whole),
            _ => None,
        }
    }
}

impl fmt::Display for ExpansionFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// `δ(I)`, checked to be a hyperideal.
pub fn expansion_apply(delta: &ExpansionFn, h: &HyperRing, i: Hyperideal) -> Result<Hyperideal> {
    let lat = Lattice::new(h);
    expansion_apply_set(delta, h, &lat, i.members()).map(Hyperideal::trusted)
}

/// [`expansion_apply`] against a precomputed lattice of `h`.
pub fn expansion_apply_set(delta: &ExpansionFn, h: &HyperRing, lat: &Lattice, i: ElementSet) -> Result<ElementSet> {
    let out = match delta {
        ExpansionFn::Identity => i,
        ExpansionFn::Radical => lat.radical(i),
        ExpansionFn::Whole => h.carrier(),
        ExpansionFn::Table(t) => *t.get(&i).ok_or(Error::MissingTableEntry)?,
        ExpansionFn::Compose { outer, inner } => {
            let mid = expansion_apply_set(inner, h, lat, i)?;
            expansion_apply_set(outer, h, lat, mid)?
        }
        ExpansionFn::QuotientLift { base, quotient } => {
            if quotient.ring.size() != h.size() {
                return Err(Error::Precondition("the expansion belongs to a different quotient".into()));
            }
            let base_lat = Lattice::new(&quotient.base);
            let lifted = quotient.lift(i);
            quotient.project(expansion_apply_set(base, &quotient.base, &base_lat, lifted)?)
        }
    };
    if !lat.is_ideal(out) {
        return Err(Error::NotHyperideal(format!("{} maps {} to {}", delta, h.format_set(i), h.format_set(out))));
    }
    Ok(out)
}

/// Extensive and monotone on every hyperideal. The witness lists the
/// hyperideal (or pair) where it fails.
pub fn is_expansion(delta: &ExpansionFn, h: &HyperRing) -> Result<Verdict> {
    let lat = Lattice::new(h);
    let mut values = Vec::with_capacity(lat.ideals.len());
    for &i in &lat.ideals {
        let d = expansion_apply_set(delta, h, &lat, i)?;
        if !i.is_subset(d) {
            return Ok(Verdict::fail(None, Witness::sets(vec![i])));
        }
        values.push(d);
    }
    for (a, &i) in lat.ideals.iter().enumerate() {
        for (b, &j) in lat.ideals.iter().enumerate() {
            if i.is_subset(j) && !values[a].is_subset(values[b]) {
                return Ok(Verdict::fail(None, Witness::sets(vec![i, j])));
            }
        }
    }
    Ok(Verdict::pass(None))
}

/// `δ(I ∩ J) = δ(I) ∩ δ(J)` for every pair of hyperideals.
pub fn is_intersection_preserving(delta: &ExpansionFn, h: &HyperRing) -> Result<Verdict> {
    let lat = Lattice::new(h);
    for &i in &lat.ideals {
        for &j in &lat.ideals {
            let meet = expansion_apply_set(delta, h, &lat, i.intersection(j))?;
            let parts = expansion_apply_set(delta, h, &lat, i)?.intersection(expansion_apply_set(delta, h, &lat, j)?);
            if meet != parts {
                return Ok(Verdict::fail(None, Witness::sets(vec![i, j])));
            }
        }
    }
    Ok(Verdict::pass(None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::quotient;
    use crate::harness::catalog;

    #[test]
    fn standard_expansions() {
        let h = catalog::z12_mod_units();
        let zero = Hyperideal::zero(&h);
        assert_eq!(expansion_apply(&ExpansionFn::Identity, &h, zero).unwrap(), zero);
        assert_eq!(expansion_apply(&ExpansionFn::Whole, &h, zero).unwrap().members(), h.carrier());
        assert_eq!(
            expansion_apply(&ExpansionFn::Radical, &h, zero).unwrap().members(),
            h.set_from_names(&["c0", "c6"]).unwrap()
        );
        assert_eq!(expansion_apply(&ExpansionFn::Table(BTreeMap::new()), &h, zero), Err(Error::MissingTableEntry));
        for e in catalog::builtin_catalog() {
            for d in ExpansionFn::standard() {
                assert!(is_expansion(&d, &e.ring).unwrap().holds);
                assert!(is_intersection_preserving(&d, &e.ring).unwrap().holds, "{} {}", e.name, d);
            }
        }
    }

    #[test]
    fn table_that_shrinks_is_rejected() {
        let h = catalog::zn(4);
        let lat = Lattice::new(&h);
        let mut t: BTreeMap<ElementSet, ElementSet> = lat.ideals.iter().map(|&i| (i, i)).collect();
        t.insert(h.carrier(), ElementSet::singleton(0));
        let v = is_expansion(&ExpansionFn::Table(t), &h).unwrap();
        assert_eq!(v.witness.unwrap().sets, vec![h.carrier()]);
    }

    #[test]
    fn quotient_lift_and_compose() {
        let h = catalog::z12_mod_units();
        let j = Hyperideal::new(&h, h.set_from_names(&["c0", "c6"]).unwrap()).unwrap();
        let q = quotient(&h, j).unwrap();
        let qr = q.ring.clone();
        let dq = ExpansionFn::quotient_lift(ExpansionFn::Radical, q);
        assert!(is_expansion(&dq, &qr).unwrap().holds);
        let zero = Hyperideal::zero(&qr);
        assert_eq!(expansion_apply(&dq, &qr, zero).unwrap(), zero);
        let c = ExpansionFn::compose(ExpansionFn::Radical, ExpansionFn::Identity);
        assert_eq!(c.label(), "d1.d0");
        assert!(is_expansion(&c, &h).unwrap().holds);
    }
}
