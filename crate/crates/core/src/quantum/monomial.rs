use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use super::generators::{generator_matrix, QGen};
use crate::diagram::normal::{arrangements, combinations, inverse, permutations, subsets};
use crate::diagram::{block_word, ClassicalGen};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::superlinalg::{rank, GradedOperator, RankMode, RankReport};

/// A normal-form monomial
/// c_Ĩ (∏_k t*_{j_k}⋯t*_1 t⁻¹_{i_k}⋯t⁻¹_{r−1} e t⁻¹_{r−1}⋯t⁻¹_{i_k} t*_1⋯t*_{j_k}) c_J̃ n n*.
///
/// `n` and `n_star` are the permutations σ̃ ∈ Σ_r, σ̃* ∈ Σ_s whose block normal
/// words give the Hecke parts; J̃ uses 1..r for c's and r+1..r+s for c*'s.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct NormalMonomial {
    pub r: usize,
    pub s: usize,
    pub i: Vec<usize>,
    pub j: Vec<usize>,
    pub i_tilde: Vec<usize>,
    pub j_tilde: Vec<usize>,
    pub n: Vec<usize>,
    pub n_star: Vec<usize>,
}

impl NormalMonomial {
    pub fn identity(r: usize, s: usize) -> Self {
        Self {
            r,
            s,
            i: Vec::new(),
            j: Vec::new(),
            i_tilde: Vec::new(),
            j_tilde: Vec::new(),
            n: (1..=r).collect(),
            n_star: (1..=s).collect(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidArgument(format!("normal monomial: {m}")));
        let (r, s) = (self.r, self.s);
        let is_perm = |p: &[usize], k: usize| {
            let mut v = p.to_vec();
            v.sort_unstable();
            v == (1..=k).collect::<Vec<_>>()
        };
        if !is_perm(&self.n, r) || !is_perm(&self.n_star, s) {
            return bad("n, n* must be permutations");
        }
        if self.i.len() != self.j.len() {
            return bad("I and J differ in length");
        }
        if self.i.windows(2).any(|w| w[0] >= w[1]) || self.i.iter().any(|&x| x == 0 || x > r) {
            return bad("I must be increasing in 1..r");
        }
        let mut js = self.j.clone();
        js.sort_unstable();
        js.dedup();
        if js.len() != self.j.len() || self.j.iter().any(|&x| x >= s) {
            return bad("J must be distinct values in 0..s-1");
        }
        if self.i_tilde.windows(2).any(|w| w[0] >= w[1])
            || self.i_tilde.iter().any(|x| !self.i.contains(x))
        {
            return bad("I~ must be an increasing subset of I");
        }
        let blocked = self.blocked();
        if self.j_tilde.windows(2).any(|w| w[0] >= w[1])
            || self
                .j_tilde
                .iter()
                .any(|x| *x == 0 || *x > r + s || blocked.contains(x))
        {
            return bad("J~ must avoid r+1+j_k");
        }
        let inv = inverse(&self.n);
        if self.i.windows(2).any(|w| inv[w[0] - 1] >= inv[w[1] - 1]) {
            return bad("sigma~^-1 must be increasing on I");
        }
        Ok(())
    }

    fn blocked(&self) -> Vec<usize> {
        self.j.iter().map(|j| self.r + 1 + j).collect()
    }

    fn c(&self, l: usize) -> QGen {
        if l <= self.r {
            QGen::C(l)
        } else {
            QGen::CStar(l - self.r)
        }
    }

    pub fn word(&self) -> Vec<QGen> {
        let r = self.r;
        let mut w: Vec<QGen> = self.i_tilde.iter().map(|&l| QGen::C(l)).collect();
        for (&ik, &jk) in self.i.iter().zip(&self.j) {
            let stars: Vec<QGen> = (1..=jk).rev().map(QGen::TStar).collect();
            let invs: Vec<QGen> = (ik..r).map(QGen::TInv).collect();
            w.extend(stars.iter().copied());
            w.extend(invs.iter().copied());
            w.push(QGen::E);
            w.extend(invs.iter().rev().copied());
            w.extend(stars.iter().rev().copied());
        }
        w.extend(self.j_tilde.iter().map(|&l| self.c(l)));
        w.extend(block_word(&self.n, 0).into_iter().map(QGen::TInv));
        w.extend(block_word(&self.n_star, 0).into_iter().map(QGen::TStar));
        w
    }
}

impl fmt::Display for NormalMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.word();
        if w.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = w.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// All normal-form monomials; there are (r+s)!·2^{r+s}.
pub fn enumerate_normal_monomials(r: usize, s: usize) -> Vec<NormalMonomial> {
    let lefts: Vec<usize> = (1..=r).collect();
    let js: Vec<usize> = (0..s).collect();
    let all: Vec<usize> = (1..=r + s).collect();
    let perms_r = permutations(r);
    let perms_s = permutations(s);
    let mut out = Vec::new();
    for a in 0..=r.min(s) {
        for i in combinations(&lefts, a) {
            for j in arrangements(&js, a) {
                let blocked: Vec<usize> = j.iter().map(|x| r + 1 + x).collect();
                let free: Vec<usize> = all
                    .iter()
                    .copied()
                    .filter(|x| !blocked.contains(x))
                    .collect();
                for n in &perms_r {
                    let inv = inverse(n);
                    if i.windows(2).any(|w| inv[w[0] - 1] >= inv[w[1] - 1]) {
                        continue;
                    }
                    for it in subsets(&i) {
                        for jt in subsets(&free) {
                            for ns in &perms_s {
                                out.push(NormalMonomial {
                                    r,
                                    s,
                                    i: i.clone(),
                                    j: j.clone(),
                                    i_tilde: it.clone(),
                                    j_tilde: jt.clone(),
                                    n: n.clone(),
                                    n_star: ns.clone(),
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Evaluates words on V_q^{⊗(r+s)}, caching generator operators.
pub struct WordEvaluator {
    n: usize,
    r: usize,
    s: usize,
    cache: HashMap<QGen, GradedOperator<Scalar>>,
}

impl WordEvaluator {
    pub fn new(n: usize, r: usize, s: usize) -> Self {
        Self {
            n,
            r,
            s,
            cache: HashMap::new(),
        }
    }

    pub fn generator(&mut self, g: QGen) -> Result<&GradedOperator<Scalar>> {
        if !self.cache.contains_key(&g) {
            let m = generator_matrix(g, self.n, self.r, self.s)?;
            self.cache.insert(g, m);
        }
        Ok(&self.cache[&g])
    }

    /// Product of the generator operators in written order.
    pub fn word(&mut self, w: &[QGen]) -> Result<GradedOperator<Scalar>> {
        let mut acc = GradedOperator::identity(self.n, self.r + self.s);
        // multiply from the right end so each step is (sparse generator)·acc
        for g in w.iter().rev() {
            acc = self.generator(*g)?.mul(&acc);
        }
        Ok(acc)
    }
}

pub fn monomial_to_matrix(m: &NormalMonomial, n: usize) -> Result<GradedOperator<Scalar>> {
    WordEvaluator::new(n, m.r, m.s).word(&m.word())
}

pub fn monomial_images(n: usize, r: usize, s: usize) -> Result<Vec<GradedOperator<Scalar>>> {
    let mut ev = WordEvaluator::new(n, r, s);
    enumerate_normal_monomials(r, s)
        .iter()
        .map(|m| ev.word(&m.word()))
        .collect()
}

/// The classical word a quantum word specializes to at q = 1.
pub fn classical_word(w: &[QGen], r: usize) -> Vec<ClassicalGen> {
    w.iter()
        .map(|g| match *g {
            QGen::T(i) | QGen::TInv(i) => ClassicalGen::S(i),
            QGen::TStar(i) | QGen::TStarInv(i) => ClassicalGen::S(r + i),
            QGen::E => ClassicalGen::E,
            QGen::C(i) => ClassicalGen::C(i),
            QGen::CStar(i) => ClassicalGen::C(r + i),
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct DimensionCertificate {
    pub count: usize,
    pub rank: RankReport,
    /// rank = count, i.e. the monomial images are independent.
    pub certified: bool,
}

pub fn certify_dimension(
    n: usize,
    r: usize,
    s: usize,
    mode: RankMode,
) -> Result<DimensionCertificate> {
    let images = monomial_images(n, r, s)?;
    let report = rank(&images, mode)?;
    Ok(DimensionCertificate {
        count: images.len(),
        certified: report.rank == images.len(),
        rank: report,
    })
}
