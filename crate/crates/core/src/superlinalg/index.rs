use crate::error::{Error, Result};

/// The ordered index set −n < … < −1 < 1 < … < n.
///
/// Positions 0..2n enumerate it in that order; parity is 1 on negative labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct IndexSet {
    pub n: usize,
}

impl IndexSet {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "index set needs n >= 1");
        Self { n }
    }

    pub fn size(&self) -> usize {
        2 * self.n
    }

    pub fn label(&self, pos: usize) -> i64 {
        let n = self.n as i64;
        let p = pos as i64;
        if p < n {
            p - n
        } else {
            p - n + 1
        }
    }

    pub fn pos(&self, label: i64) -> Result<usize> {
        let n = self.n as i64;
        if label == 0 || label.abs() > n {
            return Err(Error::OutOfRange(format!("index {label} not in ±1..±{n}")));
        }
        Ok(if label < 0 {
            (label + n) as usize
        } else {
            (label + n - 1) as usize
        })
    }

    pub fn parity(&self, pos: usize) -> u8 {
        u8::from(pos < self.n)
    }

    /// Position of −i given the position of i.
    pub fn neg(&self, pos: usize) -> usize {
        2 * self.n - 1 - pos
    }

    pub fn labels(&self) -> impl Iterator<Item = i64> + '_ {
        (0..self.size()).map(|p| self.label(p))
    }
}

pub fn label_parity(i: i64) -> u8 {
    u8::from(i < 0)
}

/// Row-major tensor index helpers over base 2n.
pub fn digits(mut idx: usize, base: usize, factors: usize) -> Vec<usize> {
    let mut d = vec![0; factors];
    for t in (0..factors).rev() {
        d[t] = idx % base;
        idx /= base;
    }
    d
}

pub fn from_digits(d: &[usize], base: usize) -> usize {
    d.iter().fold(0, |acc, x| acc * base + x)
}

/// Parity of a tensor index: number of odd factors mod 2.
pub fn tensor_parity(mut idx: usize, n: usize, factors: usize) -> u8 {
    let base = 2 * n;
    let mut p = 0;
    for _ in 0..factors {
        if idx % base < n {
            p ^= 1;
        }
        idx /= base;
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_and_parity() {
        let s = IndexSet::new(2);
        let labels: Vec<i64> = s.labels().collect();
        assert_eq!(labels, vec![-2, -1, 1, 2]);
        for (p, l) in labels.iter().enumerate() {
            assert_eq!(s.pos(*l).unwrap(), p);
            assert_eq!(s.parity(p), label_parity(*l));
            assert_eq!(s.label(s.neg(p)), -l);
        }
        assert!(s.pos(0).is_err());
        assert!(s.pos(3).is_err());
    }

    #[test]
    fn tensor_digits() {
        let d = digits(37, 4, 3);
        assert_eq!(d, vec![2, 1, 1]);
        assert_eq!(from_digits(&d, 4), 37);
        // labels (1, -1, -1): two odd factors
        assert_eq!(tensor_parity(37, 2, 3), 0);
        assert_eq!(tensor_parity(from_digits(&[0, 2, 3], 4), 2, 3), 1);
    }
}
