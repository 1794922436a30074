use std::fmt;

use num_traits::One;

use super::bead::BeadDiagram;
use super::element::DiagramElement;
use super::normal::NormalDiagram;
use crate::centralizer::{supercommutant_dim_over, CommutantProblem};
use crate::error::{Error, Result};
use crate::relations::{Relation, RelationSet, WordModel};
use crate::scalar::{rat_int, Field, Rational, Scalar};
use crate::superlinalg::{GradedOperator, IndexSet};

/// Generators of the walled Brauer-Clifford superalgebra: s_i, e = e_{r,r+1}, c_k.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassicalGen {
    S(usize),
    E,
    C(usize),
}

impl fmt::Display for ClassicalGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::S(i) => write!(f, "s{i}"),
            Self::E => write!(f, "e"),
            Self::C(k) => write!(f, "c{k}"),
        }
    }
}

impl ClassicalGen {
    pub fn is_valid(&self, r: usize, s: usize) -> bool {
        let n = r + s;
        match *self {
            Self::S(i) => i >= 1 && i < n && i != r,
            Self::E => r >= 1 && s >= 1,
            Self::C(k) => k >= 1 && k <= n,
        }
    }

    fn check(&self, r: usize, s: usize) -> Result<()> {
        if self.is_valid(r, s) {
            Ok(())
        } else {
            Err(Error::InvalidGenerator(format!(
                "{self} for (r,s)=({r},{s})"
            )))
        }
    }

    pub fn diagram(&self, r: usize, s: usize) -> Result<BeadDiagram> {
        self.check(r, s)?;
        match *self {
            Self::S(i) => {
                let mut sigma: Vec<usize> = (1..=r + s).collect();
                sigma.swap(i - 1, i);
                BeadDiagram::permutation(r, s, &sigma)
            }
            Self::E => BeadDiagram::arc(r, s, r, r + 1),
            Self::C(k) => BeadDiagram::bead(r, s, k),
        }
    }
}

/// The diagram of a word g₁⋯g_k (g₁ at the bottom); None if it vanishes.
pub fn word_diagram(word: &[ClassicalGen], r: usize, s: usize) -> Result<Option<BeadDiagram>> {
    let mut d = BeadDiagram::identity(r, s);
    for g in word {
        match d.multiply_raw(&g.diagram(r, s)?)? {
            Some(x) => d = x,
            None => return Ok(None),
        }
    }
    Ok(Some(d))
}

fn sign(p: u8) -> i64 {
    if p == 1 {
        -1
    } else {
        1
    }
}

/// J = Σ_a (E_{a,−a} − E_{−a,a}).
pub fn j_matrix<K: Field>(n: usize) -> GradedOperator<K> {
    let idx = IndexSet::new(n);
    GradedOperator::from_triplets(
        n,
        1,
        1,
        (0..2 * n).map(|p| (p, idx.neg(p), K::from_i64(sign(idx.parity(p))))),
    )
}

/// Jᵀ = Σ_i E_{i,−i}.
pub fn j_transpose<K: Field>(n: usize) -> GradedOperator<K> {
    let idx = IndexSet::new(n);
    GradedOperator::from_triplets(n, 1, 1, (0..2 * n).map(|p| (p, idx.neg(p), K::fone())))
}

/// The super flip v_a ⊗ v_b ↦ (−1)^{|a||b|} v_b ⊗ v_a.
pub fn super_flip<K: Field>(n: usize) -> GradedOperator<K> {
    let idx = IndexSet::new(n);
    GradedOperator::from_graded_units(
        n,
        2,
        (0..2 * n).flat_map(|i| {
            (0..2 * n).map(move |j| (K::from_i64(sign(idx.parity(j))), vec![(i, j), (j, i)]))
        }),
    )
}

/// Left operator R_g with x·g = R_g x for the right action on V^{r,s}.
pub fn classical_rep_generator(
    g: ClassicalGen,
    n: usize,
    r: usize,
    s: usize,
) -> Result<GradedOperator<Rational>> {
    g.check(r, s)?;
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let m = r + s;
    let idx = IndexSet::new(n);
    match g {
        ClassicalGen::S(i) => super_flip(n).embed_at(i, m),
        ClassicalGen::E => {
            let d = 2 * n;
            let e = GradedOperator::from_triplets(
                n,
                2,
                2,
                (0..d).flat_map(|i| {
                    (0..d).map(move |j| (i * d + i, j * d + j, rat_int(sign(idx.parity(j)))))
                }),
            );
            e.embed_at(r, m)
        }
        ClassicalGen::C(l) if l <= r => j_matrix(n).embed_at(l, m),
        ClassicalGen::C(l) => j_transpose(n).embed_at(l, m),
    }
}

/// Operator of the word g₁⋯g_k acting on the right: R_{g_k} ⋯ R_{g₁}.
pub fn classical_rep_word(
    word: &[ClassicalGen],
    n: usize,
    r: usize,
    s: usize,
) -> Result<GradedOperator<Rational>> {
    let mut acc = GradedOperator::identity(n, r + s);
    for g in word {
        acc = classical_rep_generator(*g, n, r, s)?.mul(&acc);
    }
    Ok(acc)
}

pub fn classical_rep_basis(nd: &NormalDiagram, n: usize) -> Result<GradedOperator<Rational>> {
    classical_rep_word(&nd.word(), n, nd.r, nd.s)
}

pub fn classical_rep_element(x: &DiagramElement, n: usize) -> Result<GradedOperator<Rational>> {
    let mut acc = GradedOperator::zero(n, x.r + x.s, x.r + x.s);
    for (nd, c) in x.terms() {
        acc = acc.add(&classical_rep_basis(nd, n)?.scale(c));
    }
    Ok(acc)
}

/// Defining relations of BC_{r,s} (those whose generators exist at this shape).
pub fn classical_relations(r: usize, s: usize) -> RelationSet<ClassicalGen> {
    use ClassicalGen::{C, E, S};
    let n = r + s;
    let vs = |i: usize| S(i).is_valid(r, s);
    let has_e = E.is_valid(r, s);
    let one = Scalar::one;
    let neg = || Scalar::from_int(-1);
    let mut set = RelationSet::default();
    for i in 1..n {
        if vs(i) {
            set.relations
                .push(Relation::eq(format!("s{i}^2=1"), vec![S(i), S(i)], vec![]));
        }
        if vs(i) && vs(i + 1) {
            set.relations.push(Relation::eq(
                format!("braid s{i}"),
                vec![S(i), S(i + 1), S(i)],
                vec![S(i + 1), S(i), S(i + 1)],
            ));
        }
        for j in i + 2..n {
            if vs(i) && vs(j) {
                set.relations.push(Relation::eq(
                    format!("s{i}s{j}=s{j}s{i}"),
                    vec![S(i), S(j)],
                    vec![S(j), S(i)],
                ));
            }
        }
    }
    set.push_if(has_e, || Relation::zero("e^2=0", vec![E, E]), "e^2=0");
    for j in 1..n {
        if vs(j) && j + 1 != r && j != r + 1 {
            set.push_if(
                has_e,
                || Relation::eq(format!("e s{j}=s{j} e"), vec![E, S(j)], vec![S(j), E]),
                format!("e s{j}=s{j} e"),
            );
        }
    }
    set.push_if(
        has_e && r >= 2,
        || Relation::eq("e=e s(r-1) e", vec![E], vec![E, S(r - 1), E]),
        "e=e s(r-1) e",
    );
    set.push_if(
        has_e && s >= 2,
        || Relation::eq("e=e s(r+1) e", vec![E], vec![E, S(r + 1), E]),
        "e=e s(r+1) e",
    );
    set.push_if(
        has_e && r >= 2 && s >= 2,
        || {
            Relation::eq(
                "mixed e braid",
                vec![S(r - 1), S(r + 1), E, S(r + 1), S(r - 1), E],
                vec![E, S(r - 1), S(r + 1), E, S(r + 1), S(r - 1)],
            )
        },
        "mixed e braid",
    );
    for i in 1..=n {
        let c = if i <= r { neg() } else { one() };
        set.relations.push(Relation::scaled(
            format!("c{i}^2"),
            vec![C(i), C(i)],
            c,
            vec![],
        ));
        for j in i + 1..=n {
            set.relations.push(Relation::scaled(
                format!("c{i}c{j}=-c{j}c{i}"),
                vec![C(i), C(j)],
                neg(),
                vec![C(j), C(i)],
            ));
        }
    }
    for i in 1..n {
        if !vs(i) {
            continue;
        }
        set.relations.push(Relation::eq(
            format!("s{i}c{i}s{i}=c{}", i + 1),
            vec![S(i), C(i), S(i)],
            vec![C(i + 1)],
        ));
        for j in 1..=n {
            if j != i && j != i + 1 {
                set.relations.push(Relation::eq(
                    format!("s{i}c{j}=c{j}s{i}"),
                    vec![S(i), C(j)],
                    vec![C(j), S(i)],
                ));
            }
        }
    }
    if has_e {
        set.relations.push(Relation::eq(
            "c(r) e=c(r+1) e",
            vec![C(r), E],
            vec![C(r + 1), E],
        ));
        set.relations.push(Relation::eq(
            "e c(r)=e c(r+1)",
            vec![E, C(r)],
            vec![E, C(r + 1)],
        ));
        set.relations
            .push(Relation::zero("e c(r) e=0", vec![E, C(r), E]));
        for j in 1..=n {
            if j != r && j != r + 1 {
                set.relations.push(Relation::eq(
                    format!("e c{j}=c{j} e"),
                    vec![E, C(j)],
                    vec![C(j), E],
                ));
            }
        }
    } else {
        set.skipped
            .extend(["c(r) e=c(r+1) e", "e c(r)=e c(r+1)", "e c(r) e=0"].map(String::from));
    }
    set
}

fn rational_coef(c: &Scalar) -> Result<Rational> {
    c.as_rational().ok_or_else(|| {
        Error::InvalidArgument(format!(
            "classical relation with non-constant coefficient {c}"
        ))
    })
}

/// The diagram algebra as a model for classical words.
pub struct DiagramModel {
    pub r: usize,
    pub s: usize,
}

impl WordModel<ClassicalGen> for DiagramModel {
    type Elem = DiagramElement;
    fn one(&self) -> DiagramElement {
        DiagramElement::one(self.r, self.s)
    }
    fn generator(&self, g: &ClassicalGen) -> Result<DiagramElement> {
        Ok(DiagramElement::from_diagram(&g.diagram(self.r, self.s)?))
    }
    fn mul(&self, a: &DiagramElement, b: &DiagramElement) -> DiagramElement {
        a.multiply(b).expect("same shape")
    }
    fn lin_comb(&self, terms: &[(Scalar, DiagramElement)]) -> Result<DiagramElement> {
        let mut acc = DiagramElement::zero(self.r, self.s);
        for (c, x) in terms {
            acc = acc.add(&x.scale(&rational_coef(c)?))?;
        }
        Ok(acc)
    }
    fn residual(&self, a: &DiagramElement, b: &DiagramElement) -> usize {
        a.sub(b).map(|d| d.len()).unwrap_or(usize::MAX)
    }
}

/// Words evaluated through the right action: g₁⋯g_k ↦ R_{g_k}⋯R_{g₁}.
pub struct ClassicalMatrixModel {
    pub n: usize,
    pub r: usize,
    pub s: usize,
}

impl WordModel<ClassicalGen> for ClassicalMatrixModel {
    type Elem = GradedOperator<Rational>;
    fn one(&self) -> Self::Elem {
        GradedOperator::identity(self.n, self.r + self.s)
    }
    fn generator(&self, g: &ClassicalGen) -> Result<Self::Elem> {
        classical_rep_generator(*g, self.n, self.r, self.s)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        b.mul(a)
    }
    fn lin_comb(&self, terms: &[(Scalar, Self::Elem)]) -> Result<Self::Elem> {
        let mut acc = GradedOperator::zero(self.n, self.r + self.s, self.r + self.s);
        for (c, x) in terms {
            acc = acc.add(&x.scale(&rational_coef(c)?));
        }
        Ok(acc)
    }
    fn residual(&self, a: &Self::Elem, b: &Self::Elem) -> usize {
        a.residual(b)
    }
}

/// Local action of g on V (dual = false) or on V* identified with V (dual = true):
/// on V* the matrix is M_{kj} = −(−1)^{|g||j|} g_{jk}.
fn local_action(g: &GradedOperator<Rational>, dual: bool) -> GradedOperator<Rational> {
    if !dual {
        return g.clone();
    }
    let n = g.n();
    let idx = IndexSet::new(n);
    let pg = g.parity().expect("homogeneous");
    GradedOperator::from_triplets(
        n,
        1,
        1,
        g.iter().map(|(j, k, v)| {
            let s = if pg & idx.parity(j) == 1 {
                v.clone()
            } else {
                -v.clone()
            };
            (k, j, s)
        }),
    )
}

/// The q(n) basis E⁰_{ab} = E_{ab} + E_{−a,−b}, E¹_{ab} = E_{a,−b} + E_{−a,b}
/// acting on V^{r,s}; diagonal E⁰_{aa} come first.
pub fn qn_action(n: usize, r: usize, s: usize) -> Result<Vec<GradedOperator<Rational>>> {
    let idx = IndexSet::new(n);
    let m = r + s;
    let mut locals = Vec::new();
    let unit = |i: i64, j: i64| -> Result<(usize, usize)> { Ok((idx.pos(i)?, idx.pos(j)?)) };
    let mut order: Vec<(i64, i64, u8)> = (1..=n as i64).map(|a| (a, a, 0)).collect();
    for a in 1..=n as i64 {
        for b in 1..=n as i64 {
            if a != b {
                order.push((a, b, 0));
            }
        }
    }
    for a in 1..=n as i64 {
        for b in 1..=n as i64 {
            order.push((a, b, 1));
        }
    }
    for (a, b, p) in order {
        let (u1, u2) = if p == 0 {
            (unit(a, b)?, unit(-a, -b)?)
        } else {
            (unit(a, -b)?, unit(-a, b)?)
        };
        locals.push(GradedOperator::from_triplets(
            n,
            1,
            1,
            [(u1.0, u1.1, Rational::one()), (u2.0, u2.1, Rational::one())],
        ));
    }
    locals
        .iter()
        .map(|g| {
            let mut acc = GradedOperator::zero(n, m, m);
            for t in 1..=m {
                acc = acc.add(&local_action(g, t > r).embed_at(t, m)?);
            }
            Ok(acc)
        })
        .collect()
}

/// Dimension of the supercommutant of q(n) on V^{r,s}, exact over Q.
pub fn classical_commutant_dim(n: usize, r: usize, s: usize) -> Result<usize> {
    let gens = qn_action(n, r, s)?;
    Ok(supercommutant_dim_over(&CommutantProblem::new(gens)?))
}
