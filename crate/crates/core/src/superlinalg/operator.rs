use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

use super::index::{digits, from_digits, tensor_parity, IndexSet};

/// Sparse matrix on tensor powers of the 2n-dimensional superspace V.
///
/// Rows index the output space (`out_factors` tensor factors) and columns the
/// input space. Each row is kept sorted by column with no stored zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedOperator<K: Field = Scalar> {
    n: usize,
    out_factors: usize,
    in_factors: usize,
    rows: Vec<Vec<(usize, K)>>,
}

fn pow(base: usize, e: usize) -> usize {
    base.pow(e as u32)
}

impl<K: Field> GradedOperator<K> {
    pub fn zero(n: usize, out_factors: usize, in_factors: usize) -> Self {
        Self {
            n,
            out_factors,
            in_factors,
            rows: vec![Vec::new(); pow(2 * n, out_factors)],
        }
    }

    pub fn identity(n: usize, factors: usize) -> Self {
        let dim = pow(2 * n, factors);
        Self {
            n,
            out_factors: factors,
            in_factors: factors,
            rows: (0..dim).map(|i| vec![(i, K::fone())]).collect(),
        }
    }

    /// Builds an operator summing duplicate (row, col) contributions.
    pub fn from_triplets<I>(n: usize, out_factors: usize, in_factors: usize, it: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, K)>,
    {
        let mut op = Self::zero(n, out_factors, in_factors);
        let mut raw: Vec<Vec<(usize, K)>> = vec![Vec::new(); op.rows.len()];
        for (r, c, v) in it {
            raw[r].push((c, v));
        }
        for (r, mut entries) in raw.into_iter().enumerate() {
            entries.sort_by_key(|e| e.0);
            let mut row: Vec<(usize, K)> = Vec::with_capacity(entries.len());
            for (c, v) in entries {
                match row.last_mut() {
                    Some((lc, lv)) if *lc == c => *lv = lv.fadd(&v),
                    _ => row.push((c, v)),
                }
            }
            row.retain(|(_, v)| !v.is_fzero());
            op.rows[r] = row;
        }
        op
    }

    /// Converts Σ coef · E_{a₁b₁} ⊗ ⋯ ⊗ E_{a_w b_w} (graded tensor product of
    /// matrix units, given as positions) into a matrix on V^{⊗w}.
    pub fn from_graded_units<I>(n: usize, w: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (K, Vec<(usize, usize)>)>,
    {
        let idx = IndexSet::new(n);
        let base = 2 * n;
        let trip = terms.into_iter().map(|(c, units)| {
            assert_eq!(units.len(), w);
            let mut sign = 0u8;
            let mut prefix = 0u8;
            for &(a, b) in &units {
                let pe = idx.parity(a) ^ idx.parity(b);
                sign ^= pe & prefix;
                prefix ^= idx.parity(b);
            }
            let row = from_digits(&units.iter().map(|u| u.0).collect::<Vec<_>>(), base);
            let col = from_digits(&units.iter().map(|u| u.1).collect::<Vec<_>>(), base);
            (row, col, if sign == 1 { c.fneg() } else { c })
        });
        Self::from_triplets(n, w, w, trip)
    }

    pub fn n(&self) -> usize {
        self.n
    }
    pub fn out_factors(&self) -> usize {
        self.out_factors
    }
    pub fn in_factors(&self) -> usize {
        self.in_factors
    }
    pub fn dim_out(&self) -> usize {
        self.rows.len()
    }
    pub fn dim_in(&self) -> usize {
        pow(2 * self.n, self.in_factors)
    }
    pub fn is_square(&self) -> bool {
        self.out_factors == self.in_factors
    }

    pub fn row(&self, i: usize) -> &[(usize, K)] {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&K> {
        let row = &self.rows[i];
        row.binary_search_by_key(&j, |e| e.0)
            .ok()
            .map(|k| &row[k].1)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &K)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn row_parity(&self, i: usize) -> u8 {
        tensor_parity(i, self.n, self.out_factors)
    }

    pub fn col_parity(&self, j: usize) -> u8 {
        tensor_parity(j, self.n, self.in_factors)
    }

    /// Some(p) if homogeneous of parity p (the zero operator counts as even).
    pub fn parity(&self) -> Option<u8> {
        let mut p = None;
        for (i, j, _) in self.iter() {
            let e = self.row_parity(i) ^ self.col_parity(j);
            match p {
                None => p = Some(e),
                Some(q) if q != e => return None,
                _ => {}
            }
        }
        Some(p.unwrap_or(0))
    }

    fn same_shape(&self, o: &Self) -> Result<()> {
        if self.n != o.n || self.out_factors != o.out_factors || self.in_factors != o.in_factors {
            return Err(Error::DimensionMismatch(format!(
                "({}, {}x{}) vs ({}, {}x{})",
                self.n, self.out_factors, self.in_factors, o.n, o.out_factors, o.in_factors
            )));
        }
        Ok(())
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        if self.n != o.n || self.in_factors != o.out_factors {
            return Err(Error::DimensionMismatch("operator product".into()));
        }
        let dim = o.dim_in();
        let mut acc: Vec<Option<K>> = vec![None; dim];
        let mut touched = Vec::new();
        let mut rows = Vec::with_capacity(self.rows.len());
        for arow in &self.rows {
            for (k, a) in arow {
                for (j, b) in &o.rows[*k] {
                    let t = a.fmul(b);
                    match &mut acc[*j] {
                        Some(v) => *v = v.fadd(&t),
                        slot @ None => {
                            *slot = Some(t);
                            touched.push(*j);
                        }
                    }
                }
            }
            touched.sort_unstable();
            let mut row = Vec::with_capacity(touched.len());
            for j in touched.drain(..) {
                let v = acc[j].take().unwrap();
                if !v.is_fzero() {
                    row.push((j, v));
                }
            }
            rows.push(row);
        }
        Ok(Self {
            n: self.n,
            out_factors: self.out_factors,
            in_factors: o.in_factors,
            rows,
        })
    }

    /// Product; panics on shape mismatch.
    pub fn mul(&self, o: &Self) -> Self {
        self.try_mul(o).expect("operator product shape mismatch")
    }

    fn merge(&self, o: &Self, sign: bool) -> Self {
        let rows = self
            .rows
            .iter()
            .zip(&o.rows)
            .map(|(a, b)| {
                let mut out = Vec::with_capacity(a.len() + b.len());
                let (mut x, mut y) = (0, 0);
                while x < a.len() || y < b.len() {
                    let ca = a.get(x).map_or(usize::MAX, |e| e.0);
                    let cb = b.get(y).map_or(usize::MAX, |e| e.0);
                    if ca < cb {
                        out.push(a[x].clone());
                        x += 1;
                    } else if cb < ca {
                        let v = if sign { b[y].1.fneg() } else { b[y].1.clone() };
                        out.push((cb, v));
                        y += 1;
                    } else {
                        let v = if sign {
                            a[x].1.fsub(&b[y].1)
                        } else {
                            a[x].1.fadd(&b[y].1)
                        };
                        if !v.is_fzero() {
                            out.push((ca, v));
                        }
                        x += 1;
                        y += 1;
                    }
                }
                out
            })
            .collect();
        Self {
            n: self.n,
            out_factors: self.out_factors,
            in_factors: self.in_factors,
            rows,
        }
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        self.same_shape(o)?;
        Ok(self.merge(o, false))
    }

    pub fn add(&self, o: &Self) -> Self {
        self.try_add(o).expect("operator sum shape mismatch")
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.same_shape(o)
            .expect("operator difference shape mismatch");
        self.merge(o, true)
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_fzero() {
            return Self::zero(self.n, self.out_factors, self.in_factors);
        }
        self.map_values(|v| v.fmul(c))
    }

    pub fn neg(&self) -> Self {
        self.map_values(|v| v.fneg())
    }

    fn map_values(&self, f: impl Fn(&K) -> K) -> Self {
        Self {
            n: self.n,
            out_factors: self.out_factors,
            in_factors: self.in_factors,
            rows: self
                .rows
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|(j, v)| (*j, f(v)))
                        .filter(|e| !e.1.is_fzero())
                        .collect()
                })
                .collect(),
        }
    }

    /// Entrywise coefficient change (e.g. evaluation at a rational q).
    pub fn try_map<K2: Field>(&self, f: impl Fn(&K) -> Result<K2>) -> Result<GradedOperator<K2>> {
        let mut rows = Vec::with_capacity(self.rows.len());
        for r in &self.rows {
            let mut row = Vec::with_capacity(r.len());
            for (j, v) in r {
                let w = f(v)?;
                if !w.is_fzero() {
                    row.push((*j, w));
                }
            }
            rows.push(row);
        }
        Ok(GradedOperator {
            n: self.n,
            out_factors: self.out_factors,
            in_factors: self.in_factors,
            rows,
        })
    }

    /// (Aᵀ)_{ji} = (−1)^{(|i|+|j|)|i|} A_{ij}.
    pub fn supertranspose(&self) -> Result<Self> {
        if self.parity().is_none() {
            return Err(Error::MixedParity);
        }
        let trip = self.iter().map(|(i, j, v)| {
            let pi = self.row_parity(i);
            let pj = self.col_parity(j);
            let v = if (pi ^ pj) & pi == 1 {
                v.fneg()
            } else {
                v.clone()
            };
            (j, i, v)
        });
        Ok(Self::from_triplets(
            self.n,
            self.in_factors,
            self.out_factors,
            trip,
        ))
    }

    /// [A, B] = AB − (−1)^{|A||B|} BA.
    pub fn supercommutator(&self, o: &Self) -> Result<Self> {
        self.same_shape(o)?;
        if !self.is_square() {
            return Err(Error::DimensionMismatch(
                "supercommutator needs square operators".into(),
            ));
        }
        let pa = self.parity().ok_or(Error::MixedParity)?;
        let pb = o.parity().ok_or(Error::MixedParity)?;
        let ab = self.mul(o);
        let ba = o.mul(self);
        Ok(if pa & pb == 1 {
            ab.add(&ba)
        } else {
            ab.sub(&ba)
        })
    }

    /// Graded tensor product: (A⊗B)(x⊗y) = (−1)^{|B||x|} Ax ⊗ By, entrywise.
    pub fn kron(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n, "kron of operators over different n");
        let bo = o.dim_out();
        let bi = o.dim_in();
        let mut trip = Vec::with_capacity(self.nnz() * o.nnz());
        for (x1, x, a) in self.iter() {
            let px = self.col_parity(x);
            for (y1, y, b) in o.iter() {
                let pb = o.row_parity(y1) ^ o.col_parity(y);
                let v = a.fmul(b);
                let v = if pb & px == 1 { v.fneg() } else { v };
                trip.push((x1 * bo + y1, x * bi + y, v));
            }
        }
        Self::from_triplets(
            self.n,
            self.out_factors + o.out_factors,
            self.in_factors + o.in_factors,
            trip,
        )
    }

    /// id^{⊗(k−1)} ⊗ A ⊗ id^{⊗(m−k−w+1)} for a square A on w factors (k is 1-based).
    pub fn embed_at(&self, k: usize, m: usize) -> Result<Self> {
        let w = self.out_factors;
        if !self.is_square() {
            return Err(Error::DimensionMismatch(
                "embed_at needs a square operator".into(),
            ));
        }
        if k == 0 || k + w - 1 > m {
            return Err(Error::OutOfRange(format!(
                "position {k} for width {w} in {m} factors"
            )));
        }
        self.place(&(k..k + w).collect::<Vec<_>>(), m)
    }

    /// Places a square operator on w factors at the given increasing 1-based
    /// positions among m factors, with Koszul signs for spectator factors.
    pub fn place(&self, positions: &[usize], m: usize) -> Result<Self> {
        let w = self.out_factors;
        if !self.is_square() || positions.len() != w {
            return Err(Error::DimensionMismatch(
                "place needs a square operator matching positions".into(),
            ));
        }
        if positions.windows(2).any(|p| p[0] >= p[1])
            || positions.first() == Some(&0)
            || positions.last().is_some_and(|p| *p > m)
        {
            return Err(Error::OutOfRange(format!(
                "positions {positions:?} in {m} factors"
            )));
        }
        let idx = IndexSet::new(self.n);
        let base = 2 * self.n;
        let spect: Vec<usize> = (1..=m).filter(|p| !positions.contains(p)).collect();
        let ns = spect.len();
        let nspect = pow(base, ns);
        // for each spectator assignment: its digits and, per placed slot, the
        // parity of spectators to its left
        let mut spec_info = Vec::with_capacity(nspect);
        for y in 0..nspect {
            let d = digits(y, base, ns);
            let before: Vec<u8> = positions
                .iter()
                .map(|&p| {
                    spect
                        .iter()
                        .zip(&d)
                        .filter(|(sp, _)| **sp < p)
                        .fold(0u8, |acc, (_, dy)| acc ^ idx.parity(*dy))
                })
                .collect();
            spec_info.push((d, before));
        }
        let mut trip = Vec::with_capacity(self.nnz() * nspect);
        let mut full_out = vec![0usize; m];
        let mut full_in = vec![0usize; m];
        for (r, c, v) in self.iter() {
            let dr = digits(r, base, w);
            let dc = digits(c, base, w);
            let ep: Vec<u8> = dr
                .iter()
                .zip(&dc)
                .map(|(a, b)| idx.parity(*a) ^ idx.parity(*b))
                .collect();
            for (d, before) in &spec_info {
                let sign = ep.iter().zip(before).fold(0u8, |acc, (e, b)| acc ^ (e & b));
                for (t, &p) in positions.iter().enumerate() {
                    full_out[p - 1] = dr[t];
                    full_in[p - 1] = dc[t];
                }
                for (t, &p) in spect.iter().enumerate() {
                    full_out[p - 1] = d[t];
                    full_in[p - 1] = d[t];
                }
                let val = if sign == 1 { v.fneg() } else { v.clone() };
                trip.push((
                    from_digits(&full_out, base),
                    from_digits(&full_in, base),
                    val,
                ));
            }
        }
        Ok(Self::from_triplets(self.n, m, m, trip))
    }

    /// Entries as a sparse vector indexed by row·dim_in + col.
    pub fn flatten(&self) -> Vec<(usize, K)> {
        let d = self.dim_in();
        self.iter()
            .map(|(i, j, v)| (i * d + j, v.clone()))
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && self
                .rows
                .iter()
                .enumerate()
                .all(|(i, r)| r.len() == 1 && r[0].0 == i && r[0].1.is_fone())
    }

    /// Number of nonzero entries of self − o.
    pub fn residual(&self, o: &Self) -> usize {
        self.sub(o).nnz()
    }
}
