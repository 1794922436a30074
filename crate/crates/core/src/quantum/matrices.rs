//! The local matrices on V_q and V_q ⊗ V_q used by the quantum action.

use crate::scalar::Scalar;
use crate::superlinalg::{label_parity, GradedOperator, IndexSet};

type Op = GradedOperator<Scalar>;

fn labels(n: usize) -> Vec<i64> {
    IndexSet::new(n).labels().collect()
}

fn par(i: i64) -> i64 {
    i64::from(label_parity(i))
}

fn sgn(p: i64) -> i64 {
    if p % 2 == 0 {
        1
    } else {
        -1
    }
}

fn delta(a: i64, b: i64) -> i64 {
    i64::from(a == b)
}

/// Exponent (δ_ij + δ_{i,−j})(1 − 2|j|).
fn diag_exp(i: i64, j: i64) -> i32 {
    ((delta(i, j) + delta(i, -j)) * (1 - 2 * par(j))) as i32
}

/// Exponent 2j(1 − 2|j|).
fn cup_exp(j: i64) -> i32 {
    (2 * j * (1 - 2 * par(j))) as i32
}

/// Σ coef · E_{ab} ⊗ E_{cd} given by labels, as a matrix on V ⊗ V.
fn two_factor(n: usize, terms: Vec<(Scalar, [(i64, i64); 2])>) -> Op {
    let idx = IndexSet::new(n);
    let p = |i: i64| idx.pos(i).expect("label in range");
    GradedOperator::from_graded_units(
        n,
        2,
        terms
            .into_iter()
            .map(|(c, u)| (c, u.iter().map(|&(a, b)| (p(a), p(b))).collect::<Vec<_>>())),
    )
}

fn xi_times(k: i64) -> Scalar {
    &Scalar::xi() * &Scalar::from_int(k)
}

/// S = Σ q^{(δ_ij+δ_{i,−j})(1−2|j|)} E_ii ⊗ E_jj + ξ Σ_{i<j} (−1)^{|i|} (E_ji + E_{−j,−i}) ⊗ E_ij.
pub fn s_matrix(n: usize) -> Op {
    s_like(n, 1)
}

/// S⁻¹: the same with q ↦ q⁻¹ on the diagonal and −ξ off it.
pub fn s_inverse(n: usize) -> Op {
    s_like(n, -1)
}

fn s_like(n: usize, e: i64) -> Op {
    let ls = labels(n);
    let mut t = Vec::new();
    for &i in &ls {
        for &j in &ls {
            t.push((Scalar::q_pow(e as i32 * diag_exp(i, j)), [(i, i), (j, j)]));
            if i < j {
                let c = xi_times(e * sgn(par(i)));
                t.push((c.clone(), [(j, i), (i, j)]));
                t.push((c, [(-j, -i), (i, j)]));
            }
        }
    }
    two_factor(n, t)
}

/// S* = Σ q^{−(δ_ij+δ_{i,−j})(1−2|j|)} E_ii ⊗ E_jj
///      − ξ Σ_{i<j} (−1)^{|i||j|} ((−1)^{|i|+|j|} E_ij + E_{−i,−j}) ⊗ E_ij.
pub fn s_star(n: usize) -> Op {
    let ls = labels(n);
    let mut t = Vec::new();
    for &i in &ls {
        for &j in &ls {
            t.push((Scalar::q_pow(-diag_exp(i, j)), [(i, i), (j, j)]));
            if i < j {
                let s = sgn(par(i) * par(j));
                t.push((xi_times(-s * sgn(par(i) + par(j))), [(i, j), (i, j)]));
                t.push((xi_times(-s), [(-i, -j), (i, j)]));
            }
        }
    }
    two_factor(n, t)
}

fn flip_part(n: usize) -> Vec<(Scalar, [(i64, i64); 2])> {
    let ls = labels(n);
    let mut t = Vec::new();
    for &i in &ls {
        for &j in &ls {
            let c = &Scalar::q_pow(diag_exp(i, j)) * &Scalar::from_int(sgn(par(i)));
            t.push((c, [(j, i), (i, j)]));
        }
    }
    t
}

/// PS = Σ (−1)^{|i|} q^{(δ_ij+δ_{−i,j})(1−2|j|)} E_ji ⊗ E_ij
///      + ξ Σ_{i<j} (E_ii ⊗ E_jj − (−1)^{|i|+|j|} E_{i,−i} ⊗ E_{−j,j}).
pub fn ps_matrix(n: usize) -> Op {
    let mut t = flip_part(n);
    let ls = labels(n);
    for &i in &ls {
        for &j in &ls {
            if i < j {
                t.push((Scalar::xi(), [(i, i), (j, j)]));
                t.push((xi_times(-sgn(par(i) + par(j))), [(i, -i), (-j, j)]));
            }
        }
    }
    two_factor(n, t)
}

/// PᵀSᵀ = Σ (−1)^{|i|} q^{(δ_ij+δ_{−i,j})(1−2|j|)} E_ji ⊗ E_ij
///        + ξ Σ_{j<i} (E_ii ⊗ E_jj − E_{i,−i} ⊗ E_{−j,j}).
pub fn pt_st_matrix(n: usize) -> Op {
    let mut t = flip_part(n);
    let ls = labels(n);
    for &i in &ls {
        for &j in &ls {
            if j < i {
                t.push((Scalar::xi(), [(i, i), (j, j)]));
                t.push((xi_times(-1), [(i, -i), (-j, j)]));
            }
        }
    }
    two_factor(n, t)
}

/// The super flip P = Σ (−1)^{|j|} E_ij ⊗ E_ji.
pub fn p_matrix(n: usize) -> Op {
    let ls = labels(n);
    let mut t = Vec::new();
    for &i in &ls {
        for &j in &ls {
            t.push((Scalar::from_int(sgn(par(j))), [(i, j), (j, i)]));
        }
    }
    two_factor(n, t)
}

/// Φ = Σ (−1)^{|i|} E_{i,−i}.
pub fn phi(n: usize) -> Op {
    let idx = IndexSet::new(n);
    GradedOperator::from_triplets(
        n,
        1,
        1,
        labels(n).into_iter().map(|i| {
            (
                idx.pos(i).unwrap(),
                idx.pos(-i).unwrap(),
                Scalar::from_int(sgn(par(i))),
            )
        }),
    )
}

/// Φᵀ = Σ E_{i,−i}.
pub fn phi_t(n: usize) -> Op {
    let idx = IndexSet::new(n);
    GradedOperator::from_triplets(
        n,
        1,
        1,
        labels(n)
            .into_iter()
            .map(|i| (idx.pos(i).unwrap(), idx.pos(-i).unwrap(), Scalar::one())),
    )
}

/// ∩ : 1 ↦ Σ v_i ⊗ w_i (with V* identified with V).
pub fn cap(n: usize) -> Op {
    let idx = IndexSet::new(n);
    let d = 2 * n;
    GradedOperator::from_triplets(
        n,
        2,
        0,
        labels(n).into_iter().map(|i| {
            let p = idx.pos(i).unwrap();
            (p * d + p, 0, Scalar::one())
        }),
    )
}

/// ∪ : v_i ⊗ w_j ↦ (−1)^{|i|} q^{2i(1−2|i|)−(2n+1)} δ_ij.
pub fn cup(n: usize) -> Op {
    let idx = IndexSet::new(n);
    let d = 2 * n;
    let shift = 2 * n as i32 + 1;
    GradedOperator::from_triplets(
        n,
        0,
        2,
        labels(n).into_iter().map(|i| {
            let p = idx.pos(i).unwrap();
            (
                0,
                p * d + p,
                Scalar::monomial(sgn(par(i)), cup_exp(i) - shift),
            )
        }),
    )
}

/// ∩∪ = q^{−(2n+1)} Σ (−1)^{|i||j|} q^{2j(1−2|j|)} E_ij ⊗ E_ij.
pub fn cap_cup(n: usize) -> Op {
    let ls = labels(n);
    let shift = 2 * n as i32 + 1;
    let mut t = Vec::new();
    for &i in &ls {
        for &j in &ls {
            t.push((
                Scalar::monomial(sgn(par(i) * par(j)), cup_exp(j) - shift),
                [(i, j), (i, j)],
            ));
        }
    }
    two_factor(n, t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s_diagonal_entries() {
        let n = 1;
        let s = s_matrix(n);
        let idx = IndexSet::new(n);
        let d = 2 * n;
        let at = |i: i64| {
            let p = idx.pos(i).unwrap();
            s.get(p * d + p, p * d + p).cloned().unwrap()
        };
        assert_eq!(at(1), Scalar::q());
        assert_eq!(at(-1), Scalar::q_pow(-1));
    }

    #[test]
    fn s_inverse_is_inverse() {
        for n in 1..=3 {
            assert!(s_matrix(n).mul(&s_inverse(n)).is_identity());
        }
    }

    #[test]
    fn ps_is_flip_times_s() {
        for n in 1..=2 {
            assert_eq!(p_matrix(n).mul(&s_matrix(n)), ps_matrix(n));
        }
    }

    #[test]
    fn cap_cup_is_the_composite() {
        for n in 1..=3 {
            assert_eq!(cap(n).mul(&cup(n)), cap_cup(n));
        }
    }

    #[test]
    fn cup_after_cap_vanishes() {
        for n in 1..=3 {
            assert!(cup(n).mul(&cap(n)).is_zero());
            let phi_cap = phi(n).kron(&GradedOperator::identity(n, 1)).mul(&cap(n));
            assert!(cup(n).mul(&phi_cap).is_zero());
        }
    }

    #[test]
    fn phi_transpose() {
        for n in 1..=2 {
            assert_eq!(phi(n).supertranspose().unwrap(), phi_t(n));
            assert_eq!(phi(n).mul(&phi(n)), GradedOperator::identity(n, 1).neg());
        }
    }
}
