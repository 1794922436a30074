use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::{Field, Rational, Scalar};
use crate::superlinalg::{
    eval_operator, evaluation_points, seed_from_env, Echelon, GradedOperator, RankMode,
    DEFAULT_POINTS,
};

/// Homogeneous square operators whose supercommutant is sought.
#[derive(Clone, Debug)]
pub struct CommutantProblem<K: Field = Scalar> {
    generators: Vec<GradedOperator<K>>,
    parities: Vec<u8>,
    space_dim: usize,
}

impl<K: Field> CommutantProblem<K> {
    pub fn new(generators: Vec<GradedOperator<K>>) -> Result<Self> {
        let Some(first) = generators.first() else {
            return Err(Error::InvalidArgument(
                "commutant of an empty generator set".into(),
            ));
        };
        let space_dim = first.dim_out();
        let mut parities = Vec::with_capacity(generators.len());
        for g in &generators {
            if !g.is_square() || g.dim_out() != space_dim || g.n() != first.n() {
                return Err(Error::DimensionMismatch(
                    "commutant generators must be square of equal size".into(),
                ));
            }
            parities.push(g.parity().ok_or(Error::MixedParity)?);
        }
        Ok(Self {
            generators,
            parities,
            space_dim,
        })
    }

    pub fn generators(&self) -> &[GradedOperator<K>] {
        &self.generators
    }

    pub fn space_dim(&self) -> usize {
        self.space_dim
    }

    fn try_map<K2: Field>(
        &self,
        f: impl Fn(&GradedOperator<K>) -> Result<GradedOperator<K2>>,
    ) -> Result<CommutantProblem<K2>> {
        CommutantProblem::new(self.generators.iter().map(f).collect::<Result<Vec<_>>>()?)
    }
}

fn is_diagonal<K: Field>(g: &GradedOperator<K>) -> bool {
    g.iter().all(|(i, j, _)| i == j)
}

/// Dimension of {X of parity p : gX = (−1)^{|g|p} Xg for all g}.
pub fn sector_dim<K: Field>(p: &CommutantProblem<K>, parity: u8) -> usize {
    let d = p.space_dim;
    let Some(g0) = p.generators.first() else {
        return 0;
    };
    let par: Vec<u8> = (0..d).map(|i| g0.row_parity(i)).collect();
    // even diagonal generators force X_ab = 0 unless their eigenvalues agree
    let diag: Vec<Vec<K>> = p
        .generators
        .iter()
        .filter(|g| is_diagonal(g))
        .map(|g| {
            (0..d)
                .map(|i| g.get(i, i).cloned().unwrap_or_else(K::fzero))
                .collect()
        })
        .collect();
    let live: Vec<bool> = (0..d * d)
        .map(|v| {
            let (a, b) = (v / d, v % d);
            (par[a] ^ par[b]) == parity && diag.iter().all(|ev| ev[a] == ev[b])
        })
        .collect();
    let nlive = live.iter().filter(|&&x| x).count();
    let mut ech: Echelon<K> = Echelon::new();
    for (g, &pg) in p.generators.iter().zip(&p.parities) {
        if is_diagonal(g) {
            continue;
        }
        let odd = pg & parity == 1;
        let mut eqs: BTreeMap<usize, Vec<(usize, K)>> = BTreeMap::new();
        // (gX)_ij = Σ_k g_ik X_kj
        for (i, k, x) in g.iter() {
            for j in 0..d {
                if live[k * d + j] {
                    eqs.entry(i * d + j)
                        .or_default()
                        .push((k * d + j, x.clone()));
                }
            }
        }
        // −ε (Xg)_ij = −ε Σ_k X_ik g_kj
        for (k, j, x) in g.iter() {
            let c = if odd { x.clone() } else { x.fneg() };
            for i in 0..d {
                if live[i * d + k] {
                    eqs.entry(i * d + j)
                        .or_default()
                        .push((i * d + k, c.clone()));
                }
            }
        }
        for (_, eq) in eqs {
            ech.insert(eq);
            if ech.rank() == nlive {
                return 0;
            }
        }
    }
    nlive - ech.rank()
}

/// Dimension of the supercommutant over the coefficient field, summed over both parities.
pub fn supercommutant_dim_over<K: Field>(p: &CommutantProblem<K>) -> usize {
    sector_dim(p, 0) + sector_dim(p, 1)
}

#[derive(Clone, Debug, Serialize)]
pub struct CommutantReport {
    pub dim: usize,
    pub even: usize,
    pub odd: usize,
    pub mode: RankMode,
    pub points: Vec<String>,
    pub dims_at_points: Vec<usize>,
}

/// Supercommutant dimension over Q(q). Probabilistic mode returns the minimum
/// evaluated dimension, an upper bound for the generic one.
pub fn supercommutant_dim(p: &CommutantProblem<Scalar>, mode: RankMode) -> Result<CommutantReport> {
    match mode {
        RankMode::Exact => {
            let (even, odd) = (sector_dim(p, 0), sector_dim(p, 1));
            Ok(CommutantReport {
                dim: even + odd,
                even,
                odd,
                mode,
                points: Vec::new(),
                dims_at_points: Vec::new(),
            })
        }
        RankMode::Probabilistic => {
            let points = evaluation_points(DEFAULT_POINTS, seed_from_env());
            commutant_at_points(p, &points)
        }
    }
}

pub fn commutant_at_points(
    p: &CommutantProblem<Scalar>,
    points: &[Rational],
) -> Result<CommutantReport> {
    let mut best: Option<(usize, usize)> = None;
    let mut dims = Vec::new();
    for v in points {
        let e = p.try_map(|g| eval_operator(g, v))?;
        let (even, odd) = (sector_dim(&e, 0), sector_dim(&e, 1));
        dims.push(even + odd);
        if best.is_none_or(|(a, b)| even + odd < a + b) {
            best = Some((even, odd));
        }
    }
    let (even, odd) = best.unwrap_or((0, 0));
    Ok(CommutantReport {
        dim: even + odd,
        even,
        odd,
        mode: RankMode::Probabilistic,
        points: points.iter().map(ToString::to_string).collect(),
        dims_at_points: dims,
    })
}

/// Result of closing a generator set under multiplication.
#[derive(Clone, Debug, Serialize)]
pub struct SpanClosure {
    pub dim: usize,
    pub depth: usize,
    pub stabilized: bool,
}

/// Dimension of the unital algebra generated by `gens`, growing the span one
/// product length at a time until nothing new appears or `max_depth` is hit.
pub fn span_closure<K: Field>(gens: &[GradedOperator<K>], max_depth: usize) -> Result<SpanClosure> {
    let Some(g0) = gens.first() else {
        return Err(Error::InvalidArgument(
            "span closure of an empty set".into(),
        ));
    };
    let mut ech: Echelon<K> = Echelon::new();
    let id = GradedOperator::identity(g0.n(), g0.out_factors());
    ech.insert(id.flatten());
    let mut frontier = vec![id];
    for depth in 1..=max_depth {
        let mut next = Vec::new();
        for x in &frontier {
            for g in gens {
                let y = g.try_mul(x)?;
                if ech.insert(y.flatten()) {
                    next.push(y);
                }
            }
        }
        if next.is_empty() {
            return Ok(SpanClosure {
                dim: ech.rank(),
                depth: depth - 1,
                stabilized: true,
            });
        }
        frontier = next;
    }
    Ok(SpanClosure {
        dim: ech.rank(),
        depth: max_depth,
        stabilized: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat_int;

    fn q(n: usize, m: usize, t: &[(usize, usize, i64)]) -> GradedOperator<Rational> {
        GradedOperator::from_triplets(n, m, m, t.iter().map(|&(i, j, v)| (i, j, rat_int(v))))
    }

    #[test]
    fn identity_commutant_is_everything() {
        let p = CommutantProblem::new(vec![GradedOperator::<Rational>::identity(1, 2)]).unwrap();
        assert_eq!(supercommutant_dim_over(&p), 16);
    }

    #[test]
    fn odd_involution_on_one_factor() {
        // even X = diag(a,b) needs a = b; odd X = [[0,c],[d,0]] needs JX = −XJ, i.e. c = d
        let j = q(1, 1, &[(0, 1, -1), (1, 0, 1)]);
        let p = CommutantProblem::new(vec![j]).unwrap();
        assert_eq!(sector_dim(&p, 0), 1);
        assert_eq!(sector_dim(&p, 1), 1);
    }

    #[test]
    fn mixed_generator_rejected() {
        let m = q(1, 1, &[(0, 0, 1), (0, 1, 1)]);
        assert!(CommutantProblem::new(vec![m]).is_err());
    }

    #[test]
    fn closure_of_matrix_unit_pair() {
        let a = q(1, 1, &[(0, 1, 1)]);
        let b = q(1, 1, &[(1, 0, 1)]);
        let c = span_closure(&[a, b], 8).unwrap();
        assert!(c.stabilized);
        assert_eq!(c.dim, 4);
    }
}
