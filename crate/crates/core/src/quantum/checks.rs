use num_traits::One;

use super::generators::{generator_matrix, quantum_relations, QGen, QuantumMatrixModel};
use super::matrices::{cap, cup, p_matrix, phi, phi_t, ps_matrix, pt_st_matrix, s_matrix, s_star};
use super::monomial::monomial_images;
use crate::diagram::{classical_relations, classical_rep_generator, ClassicalGen};
use crate::error::Result;
use crate::relations::{check_relation_set, RelationCheck, WordModel};
use crate::report::Check;
use crate::scalar::{Rational, Scalar};
use crate::superlinalg::{eval_operator, rank_exact, GradedOperator};

type Op = GradedOperator<Scalar>;

fn id(n: usize, m: usize) -> Op {
    GradedOperator::identity(n, m)
}

/// S¹²S¹³S²³ = S²³S¹³S¹².
pub fn yang_baxter(n: usize) -> Result<bool> {
    let s = s_matrix(n);
    let s12 = s.place(&[1, 2], 3)?;
    let s13 = s.place(&[1, 3], 3)?;
    let s23 = s.place(&[2, 3], 3)?;
    Ok(s12.mul(&s13).mul(&s23) == s23.mul(&s13).mul(&s12))
}

/// X² = ξX + 1.
pub fn is_hecke(x: &Op) -> bool {
    let n = x.n();
    let m = x.out_factors();
    x.mul(x) == x.scale(&Scalar::xi()).add(&id(n, m))
}

pub fn hecke_checks(n: usize) -> Vec<Check> {
    vec![
        Check::holds(format!("PS Hecke n={n}"), is_hecke(&ps_matrix(n))),
        Check::holds(format!("PtSt Hecke n={n}"), is_hecke(&pt_st_matrix(n))),
        Check::holds(
            format!("PS = P S n={n}"),
            p_matrix(n).mul(&s_matrix(n)) == ps_matrix(n),
        ),
    ]
}

/// The action of u on V ⊗ V* ⊗ V_aux: S¹³ (S*)²³.
fn mixed_action(n: usize) -> Result<Op> {
    Ok(s_matrix(n)
        .place(&[1, 3], 3)?
        .mul(&s_star(n).place(&[2, 3], 3)?))
}

/// Cap and cup are module maps, plus the contractions used for the e-relations.
pub fn cap_cup_checks(n: usize) -> Result<Vec<Check>> {
    let a = mixed_action(n)?;
    let id1 = id(n, 1);
    let cup_id = cup(n).kron(&id1);
    let cap_id = cap(n).kron(&id1);
    let id_cup = id1.kron(&cup(n));
    let id_cap = id1.kron(&cap(n));
    let zero = GradedOperator::zero(n, 0, 0);
    let phi_id = phi(n).kron(&id1);
    Ok(vec![
        Check::holds(format!("cup intertwines n={n}"), cup_id.mul(&a) == cup_id),
        Check::holds(format!("cap intertwines n={n}"), a.mul(&cap_id) == cap_id),
        Check::holds(format!("cup cap = 0 n={n}"), cup(n).mul(&cap(n)) == zero),
        Check::holds(
            format!("cup (Phi x 1) cap = 0 n={n}"),
            cup(n).mul(&phi_id).mul(&cap(n)) == zero,
        ),
        Check::holds(
            format!("(1 x cup)(PS x 1)(1 x cap) = id n={n}"),
            id_cup
                .mul(&ps_matrix(n).kron(&id1))
                .mul(&id_cap)
                .is_identity(),
        ),
        Check::holds(
            format!("(cup x 1)(1 x PtSt)(cap x 1) = id n={n}"),
            cup_id
                .mul(&id1.kron(&pt_st_matrix(n)))
                .mul(&cap_id)
                .is_identity(),
        ),
        Check::holds(
            format!("cup (1 x PhiT) = cup (Phi x 1) n={n}"),
            cup(n).mul(&id1.kron(&phi_t(n))) == cup(n).mul(&phi_id),
        ),
    ])
}

pub fn check_all_relations(n: usize, r: usize, s: usize) -> Result<Vec<RelationCheck>> {
    check_relation_set(&QuantumMatrixModel { n, r, s }, &quantum_relations(r, s))
}

/// Inverse and bead-crossing identities of the tangle calculus, as matrices.
pub fn skein_checks(n: usize, r: usize, s: usize) -> Result<Vec<Check>> {
    let g = |x: QGen| generator_matrix(x, n, r, s);
    let xi = Scalar::xi();
    let mut out = Vec::new();
    for (k, star) in [(r, false), (s, true)] {
        for i in 1..k {
            let (t, ti, c0, c1) = if star {
                (
                    g(QGen::TStar(i))?,
                    g(QGen::TStarInv(i))?,
                    g(QGen::CStar(i))?,
                    g(QGen::CStar(i + 1))?,
                )
            } else {
                (
                    g(QGen::T(i))?,
                    g(QGen::TInv(i))?,
                    g(QGen::C(i))?,
                    g(QGen::C(i + 1))?,
                )
            };
            let name = if star { "tstar" } else { "t" };
            out.push(Check::holds(
                format!("{name}{i} {name}{i}^-1 = 1"),
                t.mul(&ti).is_identity() && ti.mul(&t).is_identity(),
            ));
            let lhs = c0.mul(&t);
            let rhs = t.mul(&c1).add(&c0.sub(&c1).scale(&xi));
            out.push(Check::holds(
                format!(
                    "c{i} {name}{i} = {name}{i} c{} + xi (c{i} - c{})",
                    i + 1,
                    i + 1
                ),
                lhs == rhs,
            ));
        }
    }
    Ok(out)
}

fn to_quantum(g: ClassicalGen, r: usize) -> QGen {
    match g {
        ClassicalGen::S(i) if i < r => QGen::T(i),
        ClassicalGen::S(i) => QGen::TStar(i - r),
        ClassicalGen::E => QGen::E,
        ClassicalGen::C(i) if i <= r => QGen::C(i),
        ClassicalGen::C(i) => QGen::CStar(i - r),
    }
}

/// Classical words evaluated through the quantum operators at q = 1.
struct LimitModel {
    n: usize,
    r: usize,
    s: usize,
}

impl WordModel<ClassicalGen> for LimitModel {
    type Elem = GradedOperator<Rational>;
    fn one(&self) -> Self::Elem {
        GradedOperator::identity(self.n, self.r + self.s)
    }
    fn generator(&self, g: &ClassicalGen) -> Result<Self::Elem> {
        eval_operator(
            &generator_matrix(to_quantum(*g, self.r), self.n, self.r, self.s)?,
            &Rational::one(),
        )
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.mul(b)
    }
    fn lin_comb(&self, terms: &[(Scalar, Self::Elem)]) -> Result<Self::Elem> {
        let mut acc = GradedOperator::zero(self.n, self.r + self.s, self.r + self.s);
        for (c, x) in terms {
            acc = acc.add(&x.scale(&c.eval_at(&Rational::one())?));
        }
        Ok(acc)
    }
    fn residual(&self, a: &Self::Elem, b: &Self::Elem) -> usize {
        a.residual(b)
    }
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct ClassicalLimit {
    pub checks: Vec<Check>,
    pub relations: Vec<RelationCheck>,
    pub rank_at_one: usize,
    pub count: usize,
}

pub fn classical_limit_check(n: usize, r: usize, s: usize) -> Result<ClassicalLimit> {
    let mut checks = Vec::new();
    let mut gens = QGen::all(r, s);
    gens.extend((1..r).map(QGen::TInv));
    gens.extend((1..s).map(QGen::TStarInv));
    let one = Rational::one();
    for g in &gens {
        let m = generator_matrix(*g, n, r, s)?;
        checks.push(Check::holds(
            format!("{g} Laurent entries"),
            m.iter().all(|(_, _, v)| v.is_laurent()),
        ));
        let at1 = eval_operator(&m, &one);
        checks.push(Check::holds(format!("{g} regular at q=1"), at1.is_ok()));
        let at1 = at1?;
        let classical = match *g {
            QGen::T(i) | QGen::TInv(i) => ClassicalGen::S(i),
            QGen::TStar(i) | QGen::TStarInv(i) => ClassicalGen::S(r + i),
            QGen::E => ClassicalGen::E,
            QGen::C(i) => ClassicalGen::C(i),
            QGen::CStar(i) => ClassicalGen::C(r + i),
        };
        checks.push(Check::holds(
            format!("{g} at q=1 equals classical {classical}"),
            at1 == classical_rep_generator(classical, n, r, s)?,
        ));
    }
    let relations = check_relation_set(&LimitModel { n, r, s }, &classical_relations(r, s))?;
    let images = monomial_images(n, r, s)?;
    let at1 = images
        .iter()
        .map(|m| eval_operator(m, &one))
        .collect::<Result<Vec<_>>>()?;
    Ok(ClassicalLimit {
        checks,
        relations,
        rank_at_one: rank_exact(&at1),
        count: images.len(),
    })
}
