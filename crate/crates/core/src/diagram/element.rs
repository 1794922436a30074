use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::bead::BeadDiagram;
use super::normal::NormalDiagram;
use super::stats::normalize;
use crate::error::{Error, Result};
use crate::scalar::{rat_int, Rational};

/// Linear combination of basis diagrams.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramElement {
    pub r: usize,
    pub s: usize,
    terms: BTreeMap<NormalDiagram, Rational>,
}

impl DiagramElement {
    pub fn zero(r: usize, s: usize) -> Self {
        Self {
            r,
            s,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(r: usize, s: usize) -> Self {
        Self::basis(NormalDiagram::identity(r, s))
    }

    pub fn basis(nd: NormalDiagram) -> Self {
        let mut e = Self::zero(nd.r, nd.s);
        e.terms.insert(nd, Rational::one());
        e
    }

    /// The class of an arbitrary bead diagram: (−1)^β d̃.
    pub fn from_diagram(d: &BeadDiagram) -> Self {
        let (sign, nd) = normalize(d);
        let mut e = Self::zero(d.r(), d.s());
        e.terms.insert(nd, rat_int(sign.into()));
        e
    }

    pub fn terms(&self) -> &BTreeMap<NormalDiagram, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, nd: NormalDiagram, c: Rational) {
        let slot = self.terms.entry(nd).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.r != o.r || self.s != o.s {
            return Err(Error::DimensionMismatch(
                "elements of different (r,s)".into(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let mut out = self.clone();
        for (k, v) in &o.terms {
            out.add_term(k.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.r, self.s);
        }
        Self {
            r: self.r,
            s: self.s,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.scale(&rat_int(-1)))
    }

    pub fn multiply(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let mut out = Self::zero(self.r, self.s);
        let right: Vec<(BeadDiagram, &Rational)> = o
            .terms
            .iter()
            .map(|(k, v)| (k.to_bead_diagram(), v))
            .collect();
        for (x, a) in &self.terms {
            let dx = x.to_bead_diagram();
            for (dy, b) in &right {
                if let Some(d) = dx.multiply_raw(dy)? {
                    let (sign, nd) = normalize(&d);
                    out.add_term(nd, rat_int(sign.into()) * a * *b);
                }
            }
        }
        Ok(out)
    }
}
