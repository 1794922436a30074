use std::fmt;
use std::str::FromStr;

use super::matrices::{cap_cup, phi, phi_t, ps_matrix, pt_st_matrix};
use crate::error::{Error, Result};
use crate::relations::{Relation, RelationSet, WordModel};
use crate::scalar::Scalar;
use crate::superlinalg::GradedOperator;

/// Generators of the quantum algebra, with formal inverses of the t's.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QGen {
    T(usize),
    TInv(usize),
    TStar(usize),
    TStarInv(usize),
    E,
    C(usize),
    CStar(usize),
}

impl fmt::Display for QGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::T(i) => write!(f, "t{i}"),
            Self::TInv(i) => write!(f, "t{i}^-1"),
            Self::TStar(i) => write!(f, "tstar{i}"),
            Self::TStarInv(i) => write!(f, "tstar{i}^-1"),
            Self::E => write!(f, "e"),
            Self::C(i) => write!(f, "c{i}"),
            Self::CStar(i) => write!(f, "cstar{i}"),
        }
    }
}

impl FromStr for QGen {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown generator '{s}'"));
        if s == "e" {
            return Ok(Self::E);
        }
        let (body, inv) = match s.strip_suffix("^-1") {
            Some(b) => (b, true),
            None => (s, false),
        };
        let (kind, num) = body
            .find(|c: char| c.is_ascii_digit())
            .map(|p| body.split_at(p))
            .ok_or_else(bad)?;
        let k: usize = num.parse().map_err(|_| bad())?;
        match (kind, inv) {
            ("t", false) => Ok(Self::T(k)),
            ("t", true) => Ok(Self::TInv(k)),
            ("tstar", false) => Ok(Self::TStar(k)),
            ("tstar", true) => Ok(Self::TStarInv(k)),
            ("c", false) => Ok(Self::C(k)),
            ("cstar", false) => Ok(Self::CStar(k)),
            _ => Err(bad()),
        }
    }
}

impl QGen {
    pub fn is_odd(&self) -> bool {
        matches!(self, Self::C(_) | Self::CStar(_))
    }

    pub fn is_valid(&self, r: usize, s: usize) -> bool {
        match *self {
            Self::T(i) | Self::TInv(i) => i >= 1 && i < r,
            Self::TStar(i) | Self::TStarInv(i) => i >= 1 && i < s,
            Self::E => r >= 1 && s >= 1,
            Self::C(i) => i >= 1 && i <= r,
            Self::CStar(i) => i >= 1 && i <= s,
        }
    }

    /// All generators (without inverses) for the shape.
    pub fn all(r: usize, s: usize) -> Vec<Self> {
        let mut g: Vec<Self> = (1..r).map(Self::T).collect();
        g.extend((1..s).map(Self::TStar));
        if r >= 1 && s >= 1 {
            g.push(Self::E);
        }
        g.extend((1..=r).map(Self::C));
        g.extend((1..=s).map(Self::CStar));
        g
    }
}

/// The operator of a generator on V_q^{⊗(r+s)}.
pub fn generator_matrix(g: QGen, n: usize, r: usize, s: usize) -> Result<GradedOperator<Scalar>> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    if !g.is_valid(r, s) {
        return Err(Error::InvalidGenerator(format!("{g} for (r,s)=({r},{s})")));
    }
    let m = r + s;
    let xi_id = || GradedOperator::identity(n, m).scale(&Scalar::xi());
    match g {
        QGen::T(i) => ps_matrix(n).embed_at(i, m),
        QGen::TStar(i) => pt_st_matrix(n).embed_at(r + i, m),
        // t⁻¹ = t − ξ from the quadratic relation
        QGen::TInv(i) => Ok(generator_matrix(QGen::T(i), n, r, s)?.sub(&xi_id())),
        QGen::TStarInv(i) => Ok(generator_matrix(QGen::TStar(i), n, r, s)?.sub(&xi_id())),
        QGen::E => cap_cup(n).embed_at(r, m),
        QGen::C(i) => phi(n).embed_at(i, m),
        QGen::CStar(i) => phi_t(n).embed_at(r + i, m),
    }
}

/// Words act by the product of generator operators in written order.
pub struct QuantumMatrixModel {
    pub n: usize,
    pub r: usize,
    pub s: usize,
}

impl WordModel<QGen> for QuantumMatrixModel {
    type Elem = GradedOperator<Scalar>;
    fn one(&self) -> Self::Elem {
        GradedOperator::identity(self.n, self.r + self.s)
    }
    fn generator(&self, g: &QGen) -> Result<Self::Elem> {
        generator_matrix(*g, self.n, self.r, self.s)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.mul(b)
    }
    fn lin_comb(&self, terms: &[(Scalar, Self::Elem)]) -> Result<Self::Elem> {
        let mut acc = GradedOperator::zero(self.n, self.r + self.s, self.r + self.s);
        for (c, x) in terms {
            acc = acc.add(&x.scale(c));
        }
        Ok(acc)
    }
    fn residual(&self, a: &Self::Elem, b: &Self::Elem) -> usize {
        a.residual(b)
    }
}

fn add(set: &mut RelationSet<QGen>, ok: bool, rel: Relation<QGen>) {
    if ok {
        set.relations.push(rel);
    } else {
        set.skipped.push(rel.id);
    }
}

/// The defining relations of the quantum algebra, plus the two relations it
/// replaces in the quantum walled Brauer presentation (ids "orig-1", "orig-2").
pub fn quantum_relations(r: usize, s: usize) -> RelationSet<QGen> {
    use QGen::{CStar, TInv, TStar, C, E, T};
    let one = Scalar::one;
    let neg = || Scalar::from_int(-1);
    let mut set = RelationSet::default();
    let has_e = r >= 1 && s >= 1;
    // Hecke part, for t (star = false) and t* (star = true)
    for (k, star) in [(r, false), (s, true)] {
        let t = |i: usize| if star { TStar(i) } else { T(i) };
        let name = if star { "tstar" } else { "t" };
        for i in 1..k {
            add(
                &mut set,
                true,
                Relation::new(
                    format!("{name}{i}^2=xi {name}{i}+1"),
                    vec![(one(), vec![t(i), t(i)])],
                    vec![(Scalar::xi(), vec![t(i)]), (one(), vec![])],
                ),
            );
            if i + 1 < k {
                add(
                    &mut set,
                    true,
                    Relation::eq(
                        format!("braid {name}{i}"),
                        vec![t(i), t(i + 1), t(i)],
                        vec![t(i + 1), t(i), t(i + 1)],
                    ),
                );
            }
            for j in i + 2..k {
                add(
                    &mut set,
                    true,
                    Relation::eq(
                        format!("{name}{i}{name}{j} commute"),
                        vec![t(i), t(j)],
                        vec![t(j), t(i)],
                    ),
                );
            }
        }
    }
    for i in 1..r {
        for j in 1..s {
            set.relations.push(Relation::eq(
                format!("t{i}tstar{j} commute"),
                vec![T(i), TStar(j)],
                vec![TStar(j), T(i)],
            ));
        }
    }
    add(&mut set, has_e, Relation::zero("e^2=0", vec![E, E]));
    add(
        &mut set,
        has_e && r >= 2,
        Relation::eq("e t(r-1) e=e", vec![E, T(r.saturating_sub(1)), E], vec![E]),
    );
    for j in 1..r.saturating_sub(1) {
        add(
            &mut set,
            has_e,
            Relation::eq(format!("e t{j}=t{j} e"), vec![E, T(j)], vec![T(j), E]),
        );
    }
    add(
        &mut set,
        has_e && s >= 2,
        Relation::eq("e tstar1 e=e", vec![E, TStar(1), E], vec![E]),
    );
    for j in 2..s {
        add(
            &mut set,
            has_e,
            Relation::eq(
                format!("e tstar{j}=tstar{j} e"),
                vec![E, TStar(j)],
                vec![TStar(j), E],
            ),
        );
    }
    let mixed = has_e && r >= 2 && s >= 2;
    let ti = TInv(r.saturating_sub(1).max(1));
    let tr = T(r.saturating_sub(1).max(1));
    let t1 = TStar(1);
    add(
        &mut set,
        mixed,
        Relation::eq(
            "mixed braid",
            vec![E, ti, t1, E, t1, ti],
            vec![ti, t1, E, t1, ti, E],
        ),
    );
    add(
        &mut set,
        mixed,
        Relation::eq("orig-1", vec![E, ti, t1, E, tr], vec![E, ti, t1, E, t1]),
    );
    add(
        &mut set,
        mixed,
        Relation::eq("orig-2", vec![tr, E, ti, t1, E], vec![t1, E, ti, t1, E]),
    );
    for i in 1..=r {
        add(
            &mut set,
            true,
            Relation::scaled(format!("c{i}^2=-1"), vec![C(i), C(i)], neg(), vec![]),
        );
        for j in i + 1..=r {
            add(
                &mut set,
                true,
                Relation::scaled(
                    format!("c{i}c{j} anticommute"),
                    vec![C(i), C(j)],
                    neg(),
                    vec![C(j), C(i)],
                ),
            );
        }
        for j in 1..=s {
            add(
                &mut set,
                true,
                Relation::scaled(
                    format!("c{i}cstar{j} anticommute"),
                    vec![C(i), CStar(j)],
                    neg(),
                    vec![CStar(j), C(i)],
                ),
            );
        }
    }
    for i in 1..=s {
        add(
            &mut set,
            true,
            Relation::scaled(
                format!("cstar{i}^2=1"),
                vec![CStar(i), CStar(i)],
                one(),
                vec![],
            ),
        );
        for j in i + 1..=s {
            add(
                &mut set,
                true,
                Relation::scaled(
                    format!("cstar{i}cstar{j} anticommute"),
                    vec![CStar(i), CStar(j)],
                    neg(),
                    vec![CStar(j), CStar(i)],
                ),
            );
        }
    }
    for (k, l, star) in [(r, s, false), (s, r, true)] {
        let t = |i: usize| if star { TStar(i) } else { T(i) };
        let c = |i: usize| if star { CStar(i) } else { C(i) };
        let co = |i: usize| if star { C(i) } else { CStar(i) };
        let (tn, cn, con) = if star {
            ("tstar", "cstar", "c")
        } else {
            ("t", "c", "cstar")
        };
        for i in 1..k {
            add(
                &mut set,
                true,
                Relation::eq(
                    format!("{tn}{i}{cn}{i}={cn}{}{tn}{i}", i + 1),
                    vec![t(i), c(i)],
                    vec![c(i + 1), t(i)],
                ),
            );
            for j in 1..=k {
                if j != i && j != i + 1 {
                    add(
                        &mut set,
                        true,
                        Relation::eq(
                            format!("{tn}{i}{cn}{j} commute"),
                            vec![t(i), c(j)],
                            vec![c(j), t(i)],
                        ),
                    );
                }
            }
            for j in 1..=l {
                add(
                    &mut set,
                    true,
                    Relation::eq(
                        format!("{tn}{i}{con}{j} commute"),
                        vec![t(i), co(j)],
                        vec![co(j), t(i)],
                    ),
                );
            }
        }
    }
    if has_e {
        add(
            &mut set,
            true,
            Relation::eq("c(r) e=cstar1 e", vec![C(r), E], vec![CStar(1), E]),
        );
        add(
            &mut set,
            true,
            Relation::eq("e c(r)=e cstar1", vec![E, C(r)], vec![E, CStar(1)]),
        );
        for j in 1..r {
            add(
                &mut set,
                true,
                Relation::eq(format!("c{j} e=e c{j}"), vec![C(j), E], vec![E, C(j)]),
            );
        }
        for j in 2..=s {
            add(
                &mut set,
                true,
                Relation::eq(
                    format!("cstar{j} e=e cstar{j}"),
                    vec![CStar(j), E],
                    vec![E, CStar(j)],
                ),
            );
        }
        add(
            &mut set,
            true,
            Relation::zero("e c(r) e=0", vec![E, C(r), E]),
        );
    } else {
        set.skipped
            .extend(["c(r) e=cstar1 e", "e c(r)=e cstar1", "e c(r) e=0"].map(String::from));
    }
    set
}
