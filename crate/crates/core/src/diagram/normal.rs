use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::bead::{good_of, BeadDiagram};
use super::classical::ClassicalGen;
use crate::error::{Error, Result};

/// Basis label c_P e_{p₁,q₁} ⋯ e_{p_a,q_a} σ c_Q.
///
/// `sigma[t-1] = σ(t)`; in the diagram top vertex t is joined through σ to
/// vertex σ(t) of the arc layer below.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct NormalDiagram {
    pub r: usize,
    pub s: usize,
    pub arcs: Vec<(usize, usize)>,
    pub sigma: Vec<usize>,
    pub p_set: Vec<usize>,
    pub q_set: Vec<usize>,
}

pub(crate) fn inverse(sigma: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; sigma.len()];
    for (t, &b) in sigma.iter().enumerate() {
        inv[b - 1] = t + 1;
    }
    inv
}

/// Reduced word i₁ i₂ … (meaning s_{i₁} s_{i₂} ⋯, composed as functions left to
/// right: π = π_{i₁} ∘ π_{i₂} ∘ ⋯) for a permutation of one block, in the
/// coset normal form p₁ p₂ ⋯ p_{k−1} with p_i = s_i s_{i−1} ⋯ s_j.
pub fn block_word(tau: &[usize], offset: usize) -> Vec<usize> {
    let k = tau.len();
    let mut cur = tau.to_vec();
    let mut parts: Vec<Vec<usize>> = Vec::new();
    for i in (1..k).rev() {
        let j = cur.iter().position(|&x| x == i + 1).unwrap() + 1;
        // p_i = s_i s_{i−1} ⋯ s_j; cur ← cur ∘ p_i⁻¹
        parts.push((j..=i).rev().map(|x| x + offset).collect());
        let pinv = |x: usize| -> usize {
            if x == i + 1 {
                j
            } else if x >= j && x <= i {
                x + 1
            } else {
                x
            }
        };
        cur = (1..=k).map(|x| cur[pinv(x) - 1]).collect();
    }
    parts.reverse();
    parts.concat()
}

/// Word in s_i for σ ∈ Σ_r × Σ_s.
pub fn permutation_word(sigma: &[usize], r: usize) -> Vec<usize> {
    let left: Vec<usize> = sigma[..r].to_vec();
    let right: Vec<usize> = sigma[r..].iter().map(|x| x - r).collect();
    let mut w = block_word(&left, 0);
    w.extend(block_word(&right, r));
    w
}

impl NormalDiagram {
    pub fn identity(r: usize, s: usize) -> Self {
        Self {
            r,
            s,
            arcs: Vec::new(),
            sigma: (1..=r + s).collect(),
            p_set: Vec::new(),
            q_set: Vec::new(),
        }
    }

    /// Validates all four basis constraints.
    pub fn new(
        r: usize,
        s: usize,
        arcs: Vec<(usize, usize)>,
        sigma: Vec<usize>,
        p_set: Vec<usize>,
        q_set: Vec<usize>,
    ) -> Result<Self> {
        let nd = Self {
            r,
            s,
            arcs,
            sigma,
            p_set,
            q_set,
        };
        nd.validate()?;
        Ok(nd)
    }

    pub fn validate(&self) -> Result<()> {
        let (r, s) = (self.r, self.s);
        let n = r + s;
        let bad = |m: &str| Err(Error::InvalidDiagram(m.to_string()));
        let mut sorted = self.sigma.clone();
        sorted.sort_unstable();
        if sorted != (1..=n).collect::<Vec<_>>() {
            return bad("sigma is not a permutation");
        }
        if self.sigma[..r].iter().any(|&x| x > r) {
            return bad("sigma does not preserve the wall");
        }
        if self.arcs.windows(2).any(|w| w[0].0 >= w[1].0) {
            return bad("arc left ends must increase");
        }
        let mut qs: Vec<usize> = self.arcs.iter().map(|a| a.1).collect();
        if self
            .arcs
            .iter()
            .any(|&(p, q)| p == 0 || p > r || q <= r || q > n)
        {
            return bad("arc endpoints out of range");
        }
        qs.sort_unstable();
        if qs.windows(2).any(|w| w[0] == w[1]) {
            return bad("arc right ends must be distinct");
        }
        let inv = inverse(&self.sigma);
        if self
            .arcs
            .windows(2)
            .any(|w| inv[w[0].0 - 1] >= inv[w[1].0 - 1])
        {
            return bad("sigma^-1(p_i) must increase");
        }
        let increasing = |v: &[usize]| v.windows(2).all(|w| w[0] < w[1]);
        if !increasing(&self.p_set) || !increasing(&self.q_set) {
            return bad("P and Q must be increasing");
        }
        if self
            .p_set
            .iter()
            .any(|p| !self.arcs.iter().any(|a| a.0 == *p))
        {
            return bad("P must consist of arc left ends");
        }
        if self
            .q_set
            .iter()
            .any(|q| *q == 0 || *q > n || self.arcs.iter().any(|a| inv[a.1 - 1] == *q))
        {
            return bad("Q must avoid sigma^-1(q_i)");
        }
        Ok(())
    }

    /// Reads off the normal coordinates of d̃ from any diagram d.
    pub(crate) fn from_diagram_shape(d: &BeadDiagram) -> Self {
        let (r, s) = (d.r(), d.s());
        let n = r + s;
        let partner = d.partner_ids();
        let mut bottom_arcs = Vec::new();
        let mut top_arcs = Vec::new();
        let mut sigma = vec![0; n];
        for v in 0..2 * n {
            let w = partner[v];
            if good_of(n, v, w) != v {
                continue;
            }
            match (v < n, w < n) {
                (true, true) => top_arcs.push((v + 1, w + 1)),
                (false, false) => bottom_arcs.push((v - n + 1, w - n + 1)),
                _ => sigma[v] = w - n + 1,
            }
        }
        bottom_arcs.sort_unstable();
        top_arcs.sort_unstable();
        for (t, b) in top_arcs.iter().zip(&bottom_arcs) {
            sigma[t.0 - 1] = b.0;
            sigma[t.1 - 1] = b.1;
        }
        let mut p_set = Vec::new();
        let mut q_set = Vec::new();
        for (&g, list) in d.bead_lists() {
            if list.len() % 2 == 1 {
                if g >= n {
                    p_set.push(g - n + 1);
                } else {
                    q_set.push(g + 1);
                }
            }
        }
        p_set.sort_unstable();
        q_set.sort_unstable();
        Self {
            r,
            s,
            arcs: bottom_arcs,
            sigma,
            p_set,
            q_set,
        }
    }

    /// The diagram d̃: one bead per strand of P (numbered first, left to right)
    /// and of Q (numbered next).
    pub fn to_bead_diagram(&self) -> BeadDiagram {
        let n = self.r + self.s;
        let inv = inverse(&self.sigma);
        let mut partner = vec![usize::MAX; 2 * n];
        let mut link = |a: usize, b: usize| {
            partner[a] = b;
            partner[b] = a;
        };
        for &(p, q) in &self.arcs {
            link(n + p - 1, n + q - 1);
            link(inv[p - 1] - 1, inv[q - 1] - 1);
        }
        let arc_ends: Vec<usize> = self.arcs.iter().flat_map(|a| [a.0, a.1]).collect();
        for t in 1..=n {
            let b = self.sigma[t - 1];
            if !arc_ends.contains(&b) {
                link(t - 1, n + b - 1);
            }
        }
        let mut beads = BTreeMap::new();
        let mut k = 0;
        for p in &self.p_set {
            k += 1;
            beads.insert(n + p - 1, vec![k]);
        }
        for q in &self.q_set {
            k += 1;
            beads.insert(q - 1, vec![k]);
        }
        BeadDiagram::new(self.r, self.s, partner, beads).expect("normal diagram is valid")
    }

    /// Generator word c_P e_{p₁,q₁} ⋯ σ c_Q with e_{p,q} = φ e φ⁻¹,
    /// φ = s_{q−1} ⋯ s_{r+1} s_p ⋯ s_{r−1}.
    pub fn word(&self) -> Vec<ClassicalGen> {
        let r = self.r;
        let mut w: Vec<ClassicalGen> = self.p_set.iter().map(|&p| ClassicalGen::C(p)).collect();
        for &(p, q) in &self.arcs {
            let phi: Vec<usize> = ((r + 1)..q).rev().chain(p..r).collect();
            w.extend(phi.iter().map(|&i| ClassicalGen::S(i)));
            w.push(ClassicalGen::E);
            w.extend(phi.iter().rev().map(|&i| ClassicalGen::S(i)));
        }
        w.extend(
            permutation_word(&self.sigma, r)
                .into_iter()
                .map(ClassicalGen::S),
        );
        w.extend(self.q_set.iter().map(|&q| ClassicalGen::C(q)));
        w
    }
}

impl fmt::Display for NormalDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.p_set.iter().map(|p| format!("c{p}")).collect();
        parts.extend(self.arcs.iter().map(|(p, q)| format!("e{p},{q}")));
        parts.extend(
            permutation_word(&self.sigma, self.r)
                .iter()
                .map(|i| format!("s{i}")),
        );
        parts.extend(self.q_set.iter().map(|q| format!("c{q}")));
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

pub(crate) fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k);
            out.push(q);
        }
    }
    out.sort();
    out
}

pub(crate) fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut out: Vec<Vec<usize>> = combinations(&items[1..], k - 1)
        .into_iter()
        .map(|mut c| {
            c.insert(0, items[0]);
            c
        })
        .collect();
    out.extend(combinations(&items[1..], k));
    out
}

pub(crate) fn arrangements(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    combinations(items, k)
        .into_iter()
        .flat_map(|c| {
            permutations(k)
                .into_iter()
                .map(move |p| p.iter().map(|i| c[i - 1]).collect::<Vec<_>>())
        })
        .collect()
}

pub(crate) fn subsets(items: &[usize]) -> Vec<Vec<usize>> {
    (0..1usize << items.len())
        .map(|mask| {
            items
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, x)| *x)
                .collect()
        })
        .collect()
}

/// All basis labels of the (r,s) algebra; there are 2^{r+s}(r+s)!.
pub fn enumerate_basis(r: usize, s: usize) -> Vec<NormalDiagram> {
    let n = r + s;
    let left: Vec<usize> = (1..=r).collect();
    let right: Vec<usize> = (r + 1..=n).collect();
    let sigmas: Vec<Vec<usize>> = permutations(r)
        .into_iter()
        .flat_map(|a| {
            permutations(s).into_iter().map(move |b| {
                let mut v = a.clone();
                v.extend(b.iter().map(|x| x + r));
                v
            })
        })
        .collect();
    let mut out = Vec::new();
    for a in 0..=r.min(s) {
        for ps in combinations(&left, a) {
            for qs in arrangements(&right, a) {
                let arcs: Vec<(usize, usize)> =
                    ps.iter().copied().zip(qs.iter().copied()).collect();
                for sigma in &sigmas {
                    let inv = inverse(sigma);
                    if ps.windows(2).any(|w| inv[w[0] - 1] >= inv[w[1] - 1]) {
                        continue;
                    }
                    let excluded: Vec<usize> = qs.iter().map(|q| inv[q - 1]).collect();
                    let free: Vec<usize> = (1..=n).filter(|t| !excluded.contains(t)).collect();
                    for p_set in subsets(&ps) {
                        for q_set in subsets(&free) {
                            out.push(NormalDiagram {
                                r,
                                s,
                                arcs: arcs.clone(),
                                sigma: sigma.clone(),
                                p_set: p_set.clone(),
                                q_set,
                            });
                        }
                    }
                }
            }
        }
    }
    out
}
