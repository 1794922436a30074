use serde::Serialize;

use super::bead::BeadDiagram;
use super::normal::NormalDiagram;

/// The sign statistics of a bead diagram.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Statistics {
    pub l1: u64,
    pub l2: u64,
    pub rho1: u64,
    pub rho2: u64,
    pub p1: u64,
    pub p2: u64,
    pub c: u64,
    pub alpha: u64,
    pub beta: u64,
    pub gamma: u64,
}

impl Statistics {
    pub fn as_tuple(&self) -> [u64; 10] {
        [
            self.l1, self.l2, self.rho1, self.rho2, self.p1, self.p2, self.c, self.alpha,
            self.beta, self.gamma,
        ]
    }
}

fn inversions(seq: &[usize]) -> u64 {
    let mut k = 0;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                k += 1;
            }
        }
    }
    k
}

fn half_counts(labels: &[usize], range: std::ops::RangeInclusive<usize>) -> u64 {
    range
        .map(|i| (labels.iter().filter(|&&a| a == i).count() / 2) as u64)
        .sum()
}

pub fn statistics(d: &BeadDiagram) -> Statistics {
    let n = d.size();
    let r = d.r();
    let partner = d.partner_ids();
    // (bead number, good-vertex label) per type
    let mut type1: Vec<(u32, usize)> = Vec::new();
    let mut type2: Vec<(u32, usize)> = Vec::new();
    let (mut p1, mut p2) = (0u64, 0u64);
    for (&g, list) in d.bead_lists() {
        let bottom_arc = g >= n && partner[g] >= n;
        let label = g % n + 1;
        for (j, &b) in list.iter().enumerate() {
            // beads lying between b and the good vertex
            let before = &list[..j];
            if bottom_arc {
                type1.push((b, label));
                p1 += before.iter().filter(|&&x| x > b).count() as u64;
            } else {
                type2.push((b, label));
                p2 += before.iter().filter(|&&x| x < b).count() as u64;
            }
        }
    }
    type1.sort_unstable();
    type2.sort_unstable();
    let a: Vec<usize> = type1.iter().map(|x| x.1).collect();
    let b: Vec<usize> = type2.iter().map(|x| x.1).collect();
    let l1 = inversions(&a);
    let l2 = inversions(&b);
    let rho1 = half_counts(&a, 1..=r);
    let rho2 = half_counts(&b, 1..=r);
    let alpha = half_counts(&b, r + 1..=n);
    let c = type2
        .iter()
        .map(|(t, _)| type1.iter().filter(|(e, _)| e > t).count() as u64)
        .sum();
    let beta = l1 + l2 + rho1 + rho2 + p1 + p2 + c;
    Statistics {
        l1,
        l2,
        rho1,
        rho2,
        p1,
        p2,
        c,
        alpha,
        beta,
        gamma: beta + alpha,
    }
}

/// d = sign · d̃ in the bead diagram algebra, with d̃ in normal coordinates.
pub fn normalize(d: &BeadDiagram) -> (i8, NormalDiagram) {
    let st = statistics(d);
    let sign = if st.beta.is_multiple_of(2) { 1 } else { -1 };
    (sign, NormalDiagram::from_diagram_shape(d))
}
