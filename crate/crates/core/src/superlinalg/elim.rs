use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap, HashMap, HashSet};

use crate::scalar::Field;

/// Incremental sparse row echelon form over a field.
///
/// Each stored row is scaled so its pivot entry is 1 and contains no pivot
/// column of any earlier row, so reducing a vector against the stored rows in
/// insertion order terminates. Pivots are chosen by smallest `Field::weight`.
#[derive(Clone, Debug)]
pub struct Echelon<K: Field> {
    rows: Vec<Vec<(usize, K)>>,
    pivot_row: HashMap<usize, usize>,
    // columns forced to zero by a single-entry row
    zero_cols: HashSet<usize>,
}

impl<K: Field> Default for Echelon<K> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Field> Echelon<K> {
    pub fn new() -> Self {
        Self {
            rows: Vec::new(),
            pivot_row: HashMap::new(),
            zero_cols: HashSet::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivot_row.keys().copied()
    }

    /// Remainder of `v` after reduction by the stored rows.
    pub fn reduce(&self, v: Vec<(usize, K)>) -> BTreeMap<usize, K> {
        let mut row: BTreeMap<usize, K> = BTreeMap::new();
        for (c, x) in v {
            if x.is_fzero() || self.zero_cols.contains(&c) {
                continue;
            }
            match row.get_mut(&c) {
                Some(y) => {
                    *y = y.fadd(&x);
                    if y.is_fzero() {
                        row.remove(&c);
                    }
                }
                None => {
                    row.insert(c, x);
                }
            }
        }
        let mut heap: BinaryHeap<Reverse<usize>> = row
            .keys()
            .filter_map(|c| self.pivot_row.get(c).copied())
            .map(Reverse)
            .collect();
        let mut last = None;
        while let Some(Reverse(ri)) = heap.pop() {
            if last == Some(ri) {
                continue;
            }
            last = Some(ri);
            let prow = &self.rows[ri];
            let pc = prow[0].0;
            let Some(f) = row.remove(&pc) else { continue };
            for (c, x) in &prow[1..] {
                if self.zero_cols.contains(c) {
                    continue;
                }
                let t = f.fmul(x);
                match row.get_mut(c) {
                    Some(y) => {
                        *y = y.fsub(&t);
                        if y.is_fzero() {
                            row.remove(c);
                        }
                    }
                    None => {
                        row.insert(*c, t.fneg());
                        if let Some(&rj) = self.pivot_row.get(c) {
                            heap.push(Reverse(rj));
                        }
                    }
                }
            }
        }
        row
    }

    /// Inserts a vector; returns true if it was independent of the stored rows.
    pub fn insert(&mut self, v: Vec<(usize, K)>) -> bool {
        let row = self.reduce(v);
        if row.is_empty() {
            return false;
        }
        let (&pc, _) = row.iter().min_by_key(|(c, x)| (x.weight(), **c)).unwrap();
        let inv = row[&pc].finv();
        let mut stored = Vec::with_capacity(row.len());
        stored.push((pc, K::fone()));
        for (c, x) in row {
            if c != pc {
                stored.push((c, x.fmul(&inv)));
            }
        }
        if stored.len() == 1 {
            self.zero_cols.insert(pc);
        }
        self.pivot_row.insert(pc, self.rows.len());
        self.rows.push(stored);
        true
    }

    pub fn contains(&self, v: Vec<(usize, K)>) -> bool {
        self.reduce(v).is_empty()
    }
}

/// Rank of a family of sparse vectors.
pub fn rank_of_vectors<K: Field>(vs: impl IntoIterator<Item = Vec<(usize, K)>>) -> usize {
    let mut e = Echelon::new();
    for v in vs {
        e.insert(v);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat_int, Rational};

    fn v(entries: &[(usize, i64)]) -> Vec<(usize, Rational)> {
        entries.iter().map(|(c, x)| (*c, rat_int(*x))).collect()
    }

    #[test]
    fn basic_rank() {
        assert_eq!(rank_of_vectors::<Rational>(vec![]), 0);
        assert_eq!(
            rank_of_vectors(vec![v(&[(0, 1), (1, 2)]), v(&[(0, 2), (1, 4)])]),
            1
        );
        assert_eq!(
            rank_of_vectors(vec![
                v(&[(0, 1), (1, 1)]),
                v(&[(1, 1), (2, 1)]),
                v(&[(0, 1), (2, -1)])
            ]),
            2
        );
        assert_eq!(rank_of_vectors(vec![v(&[(5, 0)])]), 0);
    }

    #[test]
    fn zero_columns_propagate() {
        let mut e = Echelon::new();
        assert!(e.insert(v(&[(0, 1), (1, 1), (2, 1)])));
        assert!(e.insert(v(&[(1, 3)])));
        assert!(e.insert(v(&[(2, 1)])));
        assert!(e.contains(v(&[(0, 5)])));
        assert!(!e.insert(v(&[(0, 1), (2, 7)])));
        assert_eq!(e.rank(), 3);
    }
}
