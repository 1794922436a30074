use serde::Serialize;

use super::commutant::{supercommutant_dim, CommutantProblem, CommutantReport};
use crate::diagram::{classical_rep_generator, qn_action, ClassicalGen};
use crate::error::{Error, Result};
use crate::quantum::{generator_matrix, s_matrix, s_star, QGen};
use crate::scalar::{Field, Scalar};
use crate::superlinalg::{GradedOperator, IndexSet, RankMode};

/// The (i, j) auxiliary block u_ij of the coproduct action on V_q^{⊗r} ⊗ W_q^{⊗s}.
#[derive(Clone, Debug)]
pub struct UqBlock {
    pub i: i64,
    pub j: i64,
    pub matrix: GradedOperator<Scalar>,
}

impl UqBlock {
    pub fn parity(&self) -> u8 {
        u8::from(self.i < 0) ^ u8::from(self.j < 0)
    }
}

/// A = A_1 ⋯ A_{r+s} on the tensor space ⊗ V_aux, with A_t = S^{t,aux} on the
/// V factors and (S*)^{t,aux} on the dual ones.
pub fn full_action(n: usize, r: usize, s: usize) -> Result<GradedOperator<Scalar>> {
    let m = r + s;
    if n == 0 || m == 0 {
        return Err(Error::InvalidArgument("need n ≥ 1 and r + s ≥ 1".into()));
    }
    let (sm, ss) = (s_matrix(n), s_star(n));
    let mut a = GradedOperator::identity(n, m + 1);
    for t in 1..=m {
        let local = if t <= r { &sm } else { &ss };
        a = a.mul(&local.place(&[t, m + 1], m + 1)?);
    }
    Ok(a)
}

/// Splits A = Σ u_ij ⊗ E_ij (graded tensor) into its blocks, all i, j.
fn split_blocks(
    a: &GradedOperator<Scalar>,
    n: usize,
    m: usize,
) -> Vec<Vec<GradedOperator<Scalar>>> {
    let d = 2 * n;
    let idx = IndexSet::new(n);
    let mut trip: Vec<Vec<Vec<(usize, usize, Scalar)>>> = vec![vec![Vec::new(); d]; d];
    for (row, col, v) in a.iter() {
        let (xr, i) = (row / d, row % d);
        let (xc, j) = (col / d, col % d);
        let odd =
            (idx.parity(i) ^ idx.parity(j)) & crate::superlinalg::tensor_parity(xc, n, m) == 1;
        trip[i][j].push((xr, xc, if odd { v.fneg() } else { v.clone() }));
    }
    trip.into_iter()
        .map(|row| {
            row.into_iter()
                .map(|t| GradedOperator::from_triplets(n, m, m, t))
                .collect()
        })
        .collect()
}

/// The generators u_ij (i ≤ j) of U_q(q(n)) acting on mixed tensor space.
pub fn build_uq_action(n: usize, r: usize, s: usize) -> Result<Vec<UqBlock>> {
    let m = r + s;
    let blocks = split_blocks(&full_action(n, r, s)?, n, m);
    let idx = IndexSet::new(n);
    let mut out = Vec::new();
    for (pi, row) in blocks.into_iter().enumerate() {
        for (pj, matrix) in row.into_iter().enumerate() {
            if pi <= pj {
                out.push(UqBlock {
                    i: idx.label(pi),
                    j: idx.label(pj),
                    matrix,
                });
            }
        }
    }
    Ok(out)
}

/// Which algebra's commutant is taken.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// End_{U_q(q(n))}: the image of BC_{r,s}(q).
    Uq,
    /// End_{BC_{r,s}(q)}: the q-Schur superalgebra.
    Bc,
    /// End_{q(n)} at q = 1: the image of BC_{r,s}.
    Classical,
}

impl std::str::FromStr for Side {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "uq" => Ok(Self::Uq),
            "bc" => Ok(Self::Bc),
            "classical" => Ok(Self::Classical),
            _ => Err(Error::InvalidArgument(format!("unknown side '{s}'"))),
        }
    }
}

pub fn uq_problem(n: usize, r: usize, s: usize) -> Result<CommutantProblem> {
    let gens = build_uq_action(n, r, s)?
        .into_iter()
        .map(|b| b.matrix)
        .filter(|m| !m.is_zero())
        .collect();
    CommutantProblem::new(gens)
}

/// Generator matrices of BC_{r,s}(q) (plus the identity, so r = s = 0 style
/// degenerate shapes still pose a problem).
pub fn bc_problem(n: usize, r: usize, s: usize) -> Result<CommutantProblem> {
    let mut gens = vec![GradedOperator::identity(n, r + s)];
    for g in QGen::all(r, s) {
        gens.push(generator_matrix(g, n, r, s)?);
    }
    CommutantProblem::new(gens)
}

/// Classical BC_{r,s} generators, for the q = 1 Schur superalgebra.
pub fn classical_bc_problem(
    n: usize,
    r: usize,
    s: usize,
) -> Result<CommutantProblem<crate::scalar::Rational>> {
    let mut gens = vec![GradedOperator::identity(n, r + s)];
    for k in 1..r + s {
        if k != r {
            gens.push(classical_rep_generator(ClassicalGen::S(k), n, r, s)?);
        }
    }
    if r >= 1 && s >= 1 {
        gens.push(classical_rep_generator(ClassicalGen::E, n, r, s)?);
    }
    for k in 1..=r + s {
        gens.push(classical_rep_generator(ClassicalGen::C(k), n, r, s)?);
    }
    CommutantProblem::new(gens)
}

pub fn commutant_dim(
    n: usize,
    r: usize,
    s: usize,
    side: Side,
    mode: RankMode,
) -> Result<CommutantReport> {
    match side {
        Side::Uq => supercommutant_dim(&uq_problem(n, r, s)?, mode),
        Side::Bc => supercommutant_dim(&bc_problem(n, r, s)?, mode),
        Side::Classical => {
            let p = CommutantProblem::new(qn_action(n, r, s)?)?;
            let (even, odd) = (super::sector_dim(&p, 0), super::sector_dim(&p, 1));
            Ok(CommutantReport {
                dim: even + odd,
                even,
                odd,
                mode: RankMode::Exact,
                points: Vec::new(),
                dims_at_points: Vec::new(),
            })
        }
    }
}

/// dim S_q(n; r, s) = dim End_{BC_{r,s}(q)}(V_q^{r,s}).
pub fn schur_dim(n: usize, r: usize, s: usize, mode: RankMode) -> Result<usize> {
    Ok(commutant_dim(n, r, s, Side::Bc, mode)?.dim)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::centralizer::{span_closure, supercommutant_dim_over};
    use crate::scalar::{rat, Rational};
    use crate::superlinalg::eval_operator;

    fn block(bs: &[UqBlock], i: i64, j: i64) -> &GradedOperator<Scalar> {
        &bs.iter().find(|b| b.i == i && b.j == j).unwrap().matrix
    }

    #[test]
    fn blocks_reassemble_the_action() {
        let (n, r, s) = (1, 1, 1);
        let a = full_action(n, r, s).unwrap();
        let blocks = split_blocks(&a, n, r + s);
        let idx = IndexSet::new(n);
        let mut sum = GradedOperator::zero(n, r + s + 1, r + s + 1);
        for (pi, row) in blocks.iter().enumerate() {
            for (pj, u) in row.iter().enumerate() {
                let e = crate::superlinalg::matrix_unit(n, idx.label(pi), idx.label(pj)).unwrap();
                sum = sum.add(&u.kron(&e));
            }
        }
        assert_eq!(sum, a);
    }

    fn unit(n: usize, i: i64, j: i64) -> GradedOperator<Scalar> {
        crate::superlinalg::matrix_unit(n, i, j).unwrap()
    }

    #[test]
    fn single_factor_blocks_are_entries_of_s() {
        // u_jj = Σ_i q^{(δ_ij + δ_i,−j)(1 − 2|j|)} E_ii, u_ij = ξ(−1)^{|i|}(E_ji + E_−j,−i) for i < j
        let n = 2;
        let labels: Vec<i64> = IndexSet::new(n).labels().collect();
        let bs = build_uq_action(n, 1, 0).unwrap();
        for b in &bs {
            let pj = i32::from(b.j < 0);
            let want = if b.i == b.j {
                labels
                    .iter()
                    .fold(GradedOperator::zero(n, 1, 1), |acc, &i| {
                        let e = i32::from(i == b.j || i == -b.j) * (1 - 2 * pj);
                        acc.add(&unit(n, i, i).scale(&Scalar::q_pow(e)))
                    })
            } else {
                let sign = if b.i < 0 { -1 } else { 1 };
                unit(n, b.j, b.i)
                    .add(&unit(n, -b.j, -b.i))
                    .scale(&Scalar::xi().scale(&rat(sign, 1)))
            };
            assert_eq!(b.matrix, want, "u_{},{}", b.i, b.j);
        }
        let dual = build_uq_action(n, 0, 1).unwrap();
        let star = split_blocks(&s_star(n), n, 1);
        let idx = IndexSet::new(n);
        for b in &dual {
            assert_eq!(
                &b.matrix,
                &star[idx.pos(b.i).unwrap()][idx.pos(b.j).unwrap()]
            );
        }
    }

    #[test]
    fn diagonal_blocks_are_inverse_pairs() {
        let (n, r, s) = (2, 1, 1);
        let bs = build_uq_action(n, r, s).unwrap();
        let full = split_blocks(&full_action(n, r, s).unwrap(), n, r + s);
        let idx = IndexSet::new(n);
        for i in 1..=n as i64 {
            let u = block(&bs, i, i);
            let v = &full[idx.pos(-i).unwrap()][idx.pos(-i).unwrap()];
            assert!(u.mul(v).is_identity(), "u_{i}{i}");
            assert!(u.iter().all(|(a, b, _)| a == b));
        }
    }

    #[test]
    fn blocks_supercommute_with_generators() {
        let (n, r, s) = (2, 1, 1);
        let bs = build_uq_action(n, r, s).unwrap();
        for g in QGen::all(r, s) {
            let rg = generator_matrix(g, n, r, s).unwrap();
            for b in &bs {
                assert!(b.matrix.is_zero() || b.matrix.parity() == Some(b.parity()));
                assert!(
                    b.matrix.supercommutator(&rg).unwrap().is_zero(),
                    "u_{},{} vs {g}",
                    b.i,
                    b.j
                );
            }
        }
    }

    #[test]
    fn uq_commutant_matches_monomial_rank() {
        let rep = commutant_dim(2, 1, 1, Side::Uq, RankMode::Exact).unwrap();
        assert_eq!(rep.dim, 8);
    }

    #[test]
    fn schur_dim_agrees_with_classical_limit() {
        let q = schur_dim(2, 1, 1, RankMode::Exact).unwrap();
        let classical = supercommutant_dim_over(&classical_bc_problem(2, 1, 1).unwrap());
        assert_eq!(q, classical);
    }

    #[test]
    fn schur_dim_one_factor_by_hand() {
        // X = [[a,b],[c,d]] with Φ = [[0,−1],[1,0]] odd:
        // even X (b = c = 0) needs a = d; odd X (a = d = 0) needs ΦX = −XΦ, i.e. b = c
        let phi = crate::quantum::phi(1);
        let mut even = 0;
        let mut odd = 0;
        for (a, b, c, d) in [
            (1, 0, 0, 1),
            (1, 0, 0, 0),
            (0, 0, 0, 1),
            (0, 1, 1, 0),
            (0, 1, 0, 0),
            (0, 0, 1, 0),
        ] {
            let x = GradedOperator::from_triplets(
                1,
                1,
                1,
                [(0, 0, a), (0, 1, b), (1, 0, c), (1, 1, d)]
                    .into_iter()
                    .map(|(i, j, v)| (i, j, Scalar::from_int(v))),
            );
            let Some(p) = x.parity() else { continue };
            if x.supercommutator(&phi).unwrap().is_zero() {
                if p == 0 {
                    even += 1
                } else {
                    odd += 1
                }
            }
        }
        assert_eq!((even, odd), (1, 1));
        assert_eq!(schur_dim(1, 1, 0, RankMode::Exact).unwrap(), even + odd);
    }

    #[test]
    fn schur_dim_equals_uq_image_without_duals() {
        let n = 2;
        let v = rat(7, 3);
        let gens: Vec<GradedOperator<Rational>> = build_uq_action(n, 2, 0)
            .unwrap()
            .iter()
            .map(|b| eval_operator(&b.matrix, &v).unwrap())
            .collect();
        let closure = span_closure(&gens, 2 * (2 * n) * (2 * n)).unwrap();
        assert!(closure.stabilized);
        let p = bc_problem(n, 2, 0).unwrap();
        let report = crate::centralizer::commutant_at_points(&p, &[v]).unwrap();
        assert_eq!(closure.dim, report.dim);
    }

    #[test]
    fn rescaled_generators_have_the_same_commutant() {
        let (n, r, s) = (2, 1, 1);
        let bs = build_uq_action(n, r, s).unwrap();
        let id = GradedOperator::identity(n, r + s);
        let rescaled: Vec<_> = bs
            .iter()
            .enumerate()
            .map(|(k, b)| {
                let c = Scalar::from_int(k as i64 + 2);
                let m = b.matrix.scale(&c);
                if b.i == b.j {
                    m.add(&id.scale(&Scalar::xi()))
                } else {
                    m
                }
            })
            .filter(|m| !m.is_zero())
            .collect();
        let a = supercommutant_dim(&uq_problem(n, r, s).unwrap(), RankMode::Probabilistic).unwrap();
        let b = supercommutant_dim(
            &CommutantProblem::new(rescaled).unwrap(),
            RankMode::Probabilistic,
        )
        .unwrap();
        assert_eq!(a.dim, b.dim);
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(12))]

        #[test]
        fn commutant_ignores_generator_scaling(c in proptest::collection::vec((1i64..=9, 1i64..=9), 10)) {
            let (n, r, s) = (1, 1, 1);
            let gens: Vec<_> = uq_problem(n, r, s).unwrap().generators().to_vec();
            let scaled: Vec<_> = gens
                .iter()
                .zip(c.iter().cycle())
                .map(|(g, &(a, b))| g.scale(&Scalar::from_rational(rat(a, b))))
                .collect();
            let a = supercommutant_dim(&CommutantProblem::new(gens).unwrap(), RankMode::Exact).unwrap();
            let b = supercommutant_dim(&CommutantProblem::new(scaled).unwrap(), RankMode::Exact).unwrap();
            proptest::prop_assert_eq!(a.dim, b.dim);
        }
    }
}
