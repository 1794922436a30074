use crate::scalar::{LaurentPoly, Scalar};

/// Fraction-free (Bareiss) rank of a dense matrix of Laurent polynomials.
///
/// Every division is exact, so all intermediate entries stay Laurent.
pub fn bareiss_rank(mut m: Vec<Vec<LaurentPoly>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut prev = LaurentPoly::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows)
            .filter(|&i| !m[i][c].is_zero())
            .min_by_key(|&i| m[i][c].len())
        else {
            continue;
        };
        m.swap(r, p);
        for i in (r + 1)..rows {
            for j in (c + 1)..cols {
                let t = &(&m[i][j] * &m[r][c]) - &(&m[i][c] * &m[r][j]);
                m[i][j] = t.exact_div(&prev).expect("Bareiss division must be exact");
            }
            m[i][c] = LaurentPoly::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

/// Clears denominators row by row and runs [`bareiss_rank`].
pub fn bareiss_rank_scalar(m: &[Vec<Scalar>]) -> usize {
    let cleared = m
        .iter()
        .map(|row| {
            let mut den = LaurentPoly::one();
            for x in row {
                if !x.den().is_one() && !den.is_divisible_by(x.den()) {
                    den = &den * x.den();
                }
            }
            row.iter()
                .map(|x| {
                    let f = den
                        .exact_div(x.den())
                        .expect("denominator divides row multiplier");
                    x.num() * &f
                })
                .collect()
        })
        .collect();
    bareiss_rank(cleared)
}
