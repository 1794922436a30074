use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::elim::rank_of_vectors;
use super::operator::GradedOperator;
use crate::error::{Error, Result};
use crate::scalar::{rat, Field, Rational, Scalar};

pub const SEED_ENV: &str = "QWALLED_SEED";
const DEFAULT_SEED: u64 = 0x5157_414c_4c45_4400;
pub const POOL_BOUND: i64 = 100;
pub const DEFAULT_POINTS: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RankMode {
    Exact,
    Probabilistic,
}

impl std::str::FromStr for RankMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Self::Exact),
            "probabilistic" => Ok(Self::Probabilistic),
            _ => Err(Error::InvalidArgument(format!("unknown mode '{s}'"))),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RankReport {
    pub rank: usize,
    pub mode: RankMode,
    /// Evaluation points (probabilistic mode only), as strings.
    pub points: Vec<String>,
    pub ranks_at_points: Vec<usize>,
}

pub fn seed_from_env() -> u64 {
    std::env::var(SEED_ENV)
        .ok()
        .and_then(|s| parse_seed(s.trim()))
        .unwrap_or(DEFAULT_SEED)
}

fn parse_seed(s: &str) -> Option<u64> {
    match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(h) => u64::from_str_radix(&h.replace('_', ""), 16).ok(),
        None => s.parse().ok(),
    }
}

/// `k` distinct random rationals a/b with 0 < |a|, b ≤ 100, excluding ±1
/// (where q − q⁻¹ vanishes).
pub fn evaluation_points(k: usize, seed: u64) -> Vec<Rational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<Rational> = Vec::with_capacity(k);
    while out.len() < k {
        let a = rng.random_range(1..=POOL_BOUND) * if rng.random_bool(0.5) { -1 } else { 1 };
        let b = rng.random_range(1..=POOL_BOUND);
        let v = rat(a, b);
        if v.abs().is_one() || out.contains(&v) {
            continue;
        }
        out.push(v);
    }
    out
}

pub fn rank_exact<K: Field>(ops: &[GradedOperator<K>]) -> usize {
    rank_of_vectors(ops.iter().map(GradedOperator::flatten))
}

pub fn eval_operator(
    op: &GradedOperator<Scalar>,
    v: &Rational,
) -> Result<GradedOperator<Rational>> {
    op.try_map(|x| x.eval_at(v))
}

/// Rank over Q(q); probabilistic mode evaluates at random points and reports
/// the maximum (a lower bound for the generic rank).
pub fn rank(ops: &[GradedOperator<Scalar>], mode: RankMode) -> Result<RankReport> {
    if let Some(first) = ops.first() {
        if ops
            .iter()
            .any(|o| o.dim_out() != first.dim_out() || o.dim_in() != first.dim_in())
        {
            return Err(Error::DimensionMismatch(
                "rank of operators of different sizes".into(),
            ));
        }
    }
    match mode {
        RankMode::Exact => Ok(RankReport {
            rank: rank_exact(ops),
            mode,
            points: Vec::new(),
            ranks_at_points: Vec::new(),
        }),
        RankMode::Probabilistic => {
            let points = evaluation_points(DEFAULT_POINTS, seed_from_env());
            rank_at_points(ops, &points)
        }
    }
}

pub fn rank_at_points(ops: &[GradedOperator<Scalar>], points: &[Rational]) -> Result<RankReport> {
    let mut ranks = Vec::with_capacity(points.len());
    for v in points {
        let evs = ops
            .iter()
            .map(|o| eval_operator(o, v))
            .collect::<Result<Vec<_>>>()?;
        ranks.push(rank_exact(&evs));
    }
    Ok(RankReport {
        rank: ranks.iter().copied().max().unwrap_or(0),
        mode: RankMode::Probabilistic,
        points: points.iter().map(ToString::to_string).collect(),
        ranks_at_points: ranks,
    })
}

#[cfg(test)]
mod tests {
    use super::parse_seed;

    #[test]
    fn seeds_parse_decimal_and_hex() {
        assert_eq!(parse_seed("42"), Some(42));
        assert_eq!(parse_seed("0x2a"), Some(42));
        assert_eq!(
            parse_seed("0x5157_414c_4c45_4400"),
            Some(0x5157_414c_4c45_4400)
        );
        assert_eq!(parse_seed("nope"), None);
    }
}
