//! Degree-two checks of the quantum matrix superalgebra A_q(n) against the
//! Hecke-Clifford and walled Brauer-Clifford centralizers it is dual to.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::centralizer::{commutant_dim, supercommutant_dim_over, CommutantProblem, Side};
use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};
use crate::superlinalg::{Echelon, GradedOperator, RankMode};

use super::matrices::{phi, ps_matrix};

type Poly = BTreeMap<usize, Scalar>;

fn par(i: i64) -> i32 {
    i32::from(i < 0)
}

fn sign(e: i32) -> Scalar {
    Scalar::from_int(if e % 2 == 0 { 1 } else { -1 })
}

fn delta(b: bool) -> i32 {
    i32::from(b)
}

fn labels(n: usize) -> Vec<i64> {
    let n = n as i64;
    (-n..=-1).chain(1..=n).collect()
}

/// Degree-one generators x_ab (0..n²) and x̄_ab (n²..2n²), with ε_ij ↦ x_ij,
/// x_{−i,−j} = x_ij and x_{−i,j} = x_{i,−j} = x̄_ij.
fn sym(n: usize, i: i64, j: i64) -> usize {
    let (a, b) = (i.unsigned_abs() as usize - 1, j.unsigned_abs() as usize - 1);
    let bar = if (i < 0) == (j < 0) { 0 } else { n * n };
    bar + a * n + b
}

fn push(p: &mut Poly, n: usize, c: Scalar, (i, j): (i64, i64), (k, l): (i64, i64)) {
    if c.is_zero() {
        return;
    }
    let m = sym(n, i, j) * 2 * n * n + sym(n, k, l);
    let v = p.entry(m).or_insert_with(Scalar::zero);
    *v = v.fadd(&c);
    if v.is_zero() {
        p.remove(&m);
    }
}

/// R(ijkl)′: the Hecke relation among products of two generators.
pub fn r_ijkl(n: usize, i: i64, j: i64, k: i64, l: i64) -> Vec<(usize, Scalar)> {
    let (pi, pj, pk, pl) = (par(i), par(j), par(k), par(l));
    let xi = Scalar::xi();
    let mut p = Poly::new();
    let e1 = delta(i.abs() == k.abs()) * (1 - 2 * pk);
    push(
        &mut p,
        n,
        Scalar::q_pow(e1).fmul(&sign((pi + pj) * pl)),
        (i, j),
        (k, l),
    );
    let e2 = delta(j.abs() == l.abs()) * (1 - 2 * pl);
    push(
        &mut p,
        n,
        Scalar::q_pow(e2).fmul(&sign((pi + pj) * pk)).fneg(),
        (k, l),
        (i, j),
    );
    let s3 = sign(pk * pi + pk * pl + pj * pl);
    let c3 = delta(k < i) - delta(j < l);
    push(
        &mut p,
        n,
        xi.fmul(&s3).fmul(&Scalar::from_int(c3.into())),
        (k, j),
        (i, l),
    );
    let s4 = sign(pk * pi + pk * pl + pj * pl + pk + pl);
    if k < -i {
        push(&mut p, n, xi.fmul(&s4), (-k, j), (-i, l));
    }
    if -j < l {
        push(&mut p, n, xi.fmul(&s4).fneg(), (k, -j), (i, -l));
    }
    p.into_iter().collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AqSpan {
    pub n: usize,
    pub free_dim: usize,
    pub relation_rank: usize,
    pub quotient_dim: usize,
}

fn relation_rank(n: usize, keep: impl Fn(i64, i64) -> bool) -> usize {
    let mut ech: Echelon<Scalar> = Echelon::new();
    let ls = labels(n);
    for &i in &ls {
        for &k in &ls {
            if !keep(i, k) {
                continue;
            }
            for &j in &ls {
                for &l in &ls {
                    ech.insert(r_ijkl(n, i, j, k, l));
                }
            }
        }
    }
    ech.rank()
}

/// Degree-r component of A_q(n) as a quotient of the free algebra on x, x̄.
pub fn aq_relation_span(n: usize, r: usize) -> Result<AqSpan> {
    if r != 2 {
        return Err(Error::InvalidArgument(format!(
            "only degree 2 is supported, got r={r}"
        )));
    }
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let free_dim = (2 * n * n).pow(2);
    let relation_rank = relation_rank(n, |i, k| 0 < i && i <= k);
    Ok(AqSpan {
        n,
        free_dim,
        relation_rank,
        quotient_dim: free_dim - relation_rank,
    })
}

/// Rank of {R(ijkl)′} over all index quadruples, not just 0 < i ≤ k.
pub fn aq_relation_rank_all(n: usize) -> usize {
    relation_rank(n, |_, _| true)
}

/// dim End_{HC_2(q)}(V_q^{⊗2}), with HC_2(q) generated by PS, Φ ⊗ 1, 1 ⊗ Φ.
pub fn hecke_clifford_commutant_dim(n: usize) -> Result<usize> {
    let gens: Vec<GradedOperator<Scalar>> =
        vec![ps_matrix(n), phi(n).embed_at(1, 2)?, phi(n).embed_at(2, 2)?];
    Ok(supercommutant_dim_over(&CommutantProblem::new(gens)?))
}

/// The walled relations in bidegree (1,1), as vectors over monomials x·x*
/// (indexed by pairs of degree-one symbols on each side).
pub fn wta_relations(n: usize) -> Vec<Vec<(usize, Scalar)>> {
    let nn = n as i64;
    let m = |a: i64, b: i64, bar: bool| {
        (if bar { n * n } else { 0 }) + (a as usize - 1) * n + (b as usize - 1)
    };
    let idx = |g: usize, h: usize| g * 2 * n * n + h;
    let mut out = Vec::new();
    let mut rel = |terms: Vec<(Scalar, usize)>| {
        let mut p = Poly::new();
        for (c, k) in terms {
            let v = p.entry(k).or_insert_with(Scalar::zero);
            *v = v.fadd(&c);
        }
        out.push(
            p.into_iter()
                .filter(|(_, v)| !v.is_zero())
                .collect::<Vec<_>>(),
        );
    };
    let one = Scalar::one;
    for b in 1..=nn {
        for d in 1..=nn {
            let mut t = Vec::new();
            let mut u = Vec::new();
            for e in 1..=nn {
                let w = Scalar::q_pow(2 * e as i32);
                t.push((w.clone(), idx(m(e, b, false), m(e, d, false))));
                t.push((w.fneg(), idx(m(e, b, true), m(e, d, true))));
                u.push((w.clone(), idx(m(e, b, false), m(e, d, true))));
                u.push((w.fneg(), idx(m(e, b, true), m(e, d, false))));
            }
            if b != d {
                rel(t);
            }
            rel(u);
        }
    }
    for a in 1..=nn {
        for c in 1..=nn {
            let mut t = Vec::new();
            let mut u = Vec::new();
            for e in 1..=nn {
                t.push((one(), idx(m(a, e, false), m(c, e, false))));
                t.push((one(), idx(m(a, e, true), m(c, e, true))));
                u.push((one(), idx(m(a, e, false), m(c, e, true))));
                u.push((one().fneg(), idx(m(a, e, true), m(c, e, false))));
            }
            if a != c {
                rel(t);
            }
            rel(u);
        }
    }
    for a in 1..=nn {
        for b in 1..=nn {
            rel(wta3_terms(n, a, b));
        }
    }
    out
}

/// Σ_e q^{2e−2b}(x_eb x*_eb − x̄_eb x̄*_eb) − Σ_e (x_ae x*_ae + x̄_ae x̄*_ae), unreduced.
pub fn wta3_terms(n: usize, a: i64, b: i64) -> Vec<(Scalar, usize)> {
    let nn = n as i64;
    let m = |a: i64, b: i64, bar: bool| {
        (if bar { n * n } else { 0 }) + (a as usize - 1) * n + (b as usize - 1)
    };
    let idx = |g: usize, h: usize| g * 2 * n * n + h;
    let mut t = Vec::new();
    for e in 1..=nn {
        let w = Scalar::q_pow((2 * e - 2 * b) as i32);
        t.push((w.clone(), idx(m(e, b, false), m(e, b, false))));
        t.push((w.fneg(), idx(m(e, b, true), m(e, b, true))));
    }
    for e in 1..=nn {
        t.push((Scalar::from_int(-1), idx(m(a, e, false), m(a, e, false))));
        t.push((Scalar::from_int(-1), idx(m(a, e, true), m(a, e, true))));
    }
    t
}

#[derive(Clone, Debug, Serialize)]
pub struct WtaReport {
    pub n: usize,
    pub free_dim: usize,
    /// Rank of the walled relations in bidegree (1,1).
    pub relation_rank: usize,
    /// Codimension of End_{BC_{1,1}(q)}(V_q^{1,1}) inside the Clifford-compatible
    /// endomorphisms, i.e. the number of constraints the cap-cup imposes.
    pub commutant_codim: usize,
    pub commutant_dim: usize,
    pub agree: bool,
}

pub fn wta_relation_check(n: usize) -> Result<WtaReport> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let free_dim = (2 * n * n).pow(2);
    let mut ech: Echelon<Scalar> = Echelon::new();
    for v in wta_relations(n) {
        ech.insert(v);
    }
    let relation_rank = ech.rank();
    // Φ ⊗ 1 and 1 ⊗ Φᵀ alone leave (2n²)² endomorphisms
    let commutant_dim = commutant_dim(n, 1, 1, Side::Bc, RankMode::Exact)?.dim;
    let commutant_codim = free_dim.saturating_sub(commutant_dim);
    Ok(WtaReport {
        n,
        free_dim,
        relation_rank,
        commutant_codim,
        commutant_dim,
        agree: relation_rank == commutant_codim,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::phi_t;

    #[test]
    fn degree_two_quotient_matches_hecke_clifford_commutant() {
        for n in 1..=2 {
            let span = aq_relation_span(n, 2).unwrap();
            assert_eq!(span.free_dim, 4 * n.pow(4));
            assert_eq!(
                span.quotient_dim,
                hecke_clifford_commutant_dim(n).unwrap(),
                "n={n}"
            );
        }
    }

    #[test]
    fn restricted_indices_span_all_relations() {
        for n in 1..=2 {
            assert_eq!(
                aq_relation_rank_all(n),
                aq_relation_span(n, 2).unwrap().relation_rank
            );
        }
    }

    #[test]
    fn only_degree_two() {
        assert!(aq_relation_span(2, 3).is_err());
    }

    #[test]
    fn clifford_compatible_endomorphisms() {
        for n in 1..=2 {
            let gens = vec![
                phi(n).embed_at(1, 2).unwrap(),
                phi_t(n).embed_at(2, 2).unwrap(),
            ];
            let d = supercommutant_dim_over(&CommutantProblem::new(gens).unwrap());
            assert_eq!(d, (2 * n * n).pow(2));
        }
    }

    #[test]
    fn walled_relations_match_commutant() {
        for n in 1..=2 {
            let rep = wta_relation_check(n).unwrap();
            assert!(rep.agree, "{rep:?}");
        }
    }

    #[test]
    fn third_relation_coefficients() {
        let n = 3;
        let nn = n as i64;
        let t = wta3_terms(n, 1, nn);
        for e in 2..=nn {
            let k = ((e - 1) as usize * n + (n - 1)) * 2 * n * n + (e - 1) as usize * n + (n - 1);
            let c = t.iter().find(|(_, m)| *m == k).unwrap().0.clone();
            assert_eq!(c, Scalar::q_pow((2 * e - 2 * nn) as i32));
        }
    }
}
