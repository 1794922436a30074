//! Linear relations between words in generators, checked in any model.

use serde::Serialize;

use crate::error::Result;
use crate::scalar::Scalar;

/// Σ coef·word = Σ coef·word.
#[derive(Clone, Debug)]
pub struct Relation<G> {
    pub id: String,
    pub lhs: Vec<(Scalar, Vec<G>)>,
    pub rhs: Vec<(Scalar, Vec<G>)>,
}

impl<G: Clone> Relation<G> {
    pub fn new(
        id: impl Into<String>,
        lhs: Vec<(Scalar, Vec<G>)>,
        rhs: Vec<(Scalar, Vec<G>)>,
    ) -> Self {
        Self {
            id: id.into(),
            lhs,
            rhs,
        }
    }

    /// word = word
    pub fn eq(id: impl Into<String>, lhs: Vec<G>, rhs: Vec<G>) -> Self {
        Self::new(id, vec![(Scalar::one(), lhs)], vec![(Scalar::one(), rhs)])
    }

    /// word = c·word
    pub fn scaled(id: impl Into<String>, lhs: Vec<G>, c: Scalar, rhs: Vec<G>) -> Self {
        Self::new(id, vec![(Scalar::one(), lhs)], vec![(c, rhs)])
    }

    /// word = 0
    pub fn zero(id: impl Into<String>, lhs: Vec<G>) -> Self {
        Self::new(id, vec![(Scalar::one(), lhs)], Vec::new())
    }
}

/// Applicable relations plus ids of those skipped because a generator is missing.
#[derive(Clone, Debug)]
pub struct RelationSet<G> {
    pub relations: Vec<Relation<G>>,
    pub skipped: Vec<String>,
}

impl<G> Default for RelationSet<G> {
    fn default() -> Self {
        Self {
            relations: Vec::new(),
            skipped: Vec::new(),
        }
    }
}

impl<G: Clone> RelationSet<G> {
    pub fn push_if(&mut self, ok: bool, rel: impl FnOnce() -> Relation<G>, id: impl Into<String>) {
        if ok {
            self.relations.push(rel());
        } else {
            self.skipped.push(id.into());
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Holds,
    Fails,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub id: String,
    pub status: CheckStatus,
    /// Number of nonzero terms in lhs − rhs.
    pub residual: usize,
}

/// An algebra in which words in generators of type G can be evaluated.
pub trait WordModel<G> {
    type Elem: Clone;
    fn one(&self) -> Self::Elem;
    fn generator(&self, g: &G) -> Result<Self::Elem>;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn lin_comb(&self, terms: &[(Scalar, Self::Elem)]) -> Result<Self::Elem>;
    /// Size of a − b (0 iff equal).
    fn residual(&self, a: &Self::Elem, b: &Self::Elem) -> usize;

    fn word(&self, w: &[G]) -> Result<Self::Elem> {
        let mut acc = self.one();
        for g in w {
            acc = self.mul(&acc, &self.generator(g)?);
        }
        Ok(acc)
    }
}

fn side<G, M: WordModel<G>>(m: &M, terms: &[(Scalar, Vec<G>)]) -> Result<M::Elem> {
    let evaluated = terms
        .iter()
        .map(|(c, w)| Ok((c.clone(), m.word(w)?)))
        .collect::<Result<Vec<_>>>()?;
    m.lin_comb(&evaluated)
}

pub fn check_relation<G, M: WordModel<G>>(m: &M, rel: &Relation<G>) -> Result<RelationCheck> {
    let l = side(m, &rel.lhs)?;
    let r = side(m, &rel.rhs)?;
    let residual = m.residual(&l, &r);
    Ok(RelationCheck {
        id: rel.id.clone(),
        status: if residual == 0 {
            CheckStatus::Holds
        } else {
            CheckStatus::Fails
        },
        residual,
    })
}

pub fn check_relation_set<G, M: WordModel<G>>(
    m: &M,
    set: &RelationSet<G>,
) -> Result<Vec<RelationCheck>> {
    let mut out = set
        .relations
        .iter()
        .map(|r| check_relation(m, r))
        .collect::<Result<Vec<_>>>()?;
    out.extend(set.skipped.iter().map(|id| RelationCheck {
        id: id.clone(),
        status: CheckStatus::Skipped,
        residual: 0,
    }));
    Ok(out)
}

pub fn all_hold(checks: &[RelationCheck]) -> bool {
    checks.iter().all(|c| c.status != CheckStatus::Fails)
}
