use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::superlinalg::SCHEMA;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Row {
    Top,
    Bottom,
}

/// A vertex of a diagram; positions are 1-based, left to right.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    pub row: Row,
    pub pos: usize,
}

impl Vertex {
    pub fn top(pos: usize) -> Self {
        Self { row: Row::Top, pos }
    }
    pub fn bottom(pos: usize) -> Self {
        Self {
            row: Row::Bottom,
            pos,
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.row {
            Row::Top => write!(f, "t{}", self.pos),
            Row::Bottom => write!(f, "b{}", self.pos),
        }
    }
}

/// An (r,s)-bead diagram: a walled matching of 2(r+s) vertices whose strands
/// carry numbered beads.
///
/// Vertex ids: top k ↦ k−1, bottom k ↦ N+k−1 with N = r+s. Bead lists are keyed
/// by the good vertex of their strand and read starting from it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BeadDiagram {
    r: usize,
    s: usize,
    partner: Vec<usize>,
    beads: BTreeMap<usize, Vec<u32>>,
    num_beads: u32,
}

pub(crate) fn good_of(n: usize, u: usize, w: usize) -> usize {
    let (tu, tw) = (u < n, w < n);
    if tu != tw {
        if tu {
            u
        } else {
            w
        }
    } else {
        u.min(w)
    }
}

impl BeadDiagram {
    pub fn new(
        r: usize,
        s: usize,
        partner: Vec<usize>,
        beads: BTreeMap<usize, Vec<u32>>,
    ) -> Result<Self> {
        let n = r + s;
        let bad = |m: String| Error::InvalidDiagram(m);
        if partner.len() != 2 * n {
            return Err(bad(format!(
                "expected {} vertices, got {}",
                2 * n,
                partner.len()
            )));
        }
        for (v, &w) in partner.iter().enumerate() {
            if w >= 2 * n || w == v || partner[w] != v {
                return Err(bad("matching is not a perfect matching".into()));
            }
            let (pv, pw) = (v % n, w % n);
            let left = |p: usize| p < r;
            let vertical = (v < n) != (w < n);
            if vertical && left(pv) != left(pw) {
                return Err(bad(format!("vertical strand {v}-{w} crosses the wall")));
            }
            if !vertical && left(pv) == left(pw) {
                return Err(bad(format!(
                    "horizontal strand {v}-{w} does not cross the wall"
                )));
            }
        }
        let mut seen = Vec::new();
        for (g, list) in &beads {
            if *g >= 2 * n || good_of(n, *g, partner[*g]) != *g {
                return Err(bad(format!("bead list keyed by a non-good vertex {g}")));
            }
            if list.is_empty() {
                return Err(bad("empty bead list".into()));
            }
            seen.extend(list.iter().copied());
        }
        seen.sort_unstable();
        if seen.iter().enumerate().any(|(i, b)| *b != i as u32 + 1) {
            return Err(bad("bead numbers must be exactly 1..m".into()));
        }
        Ok(Self {
            r,
            s,
            partner,
            beads,
            num_beads: seen.len() as u32,
        })
    }

    /// Builds a diagram from strands given as vertex pairs and bead lists keyed by
    /// any endpoint (lists are read starting from the given endpoint).
    pub fn from_strands(
        r: usize,
        s: usize,
        edges: &[(Vertex, Vertex)],
        beads: &[(Vertex, Vec<u32>)],
    ) -> Result<Self> {
        let n = r + s;
        let id = |v: Vertex| -> Result<usize> {
            if v.pos == 0 || v.pos > n {
                return Err(Error::OutOfRange(format!("vertex {v} for r+s={n}")));
            }
            Ok(match v.row {
                Row::Top => v.pos - 1,
                Row::Bottom => n + v.pos - 1,
            })
        };
        let mut partner = vec![usize::MAX; 2 * n];
        for (a, b) in edges {
            let (x, y) = (id(*a)?, id(*b)?);
            if partner[x] != usize::MAX || partner[y] != usize::MAX || x == y {
                return Err(Error::InvalidDiagram("vertex used twice".into()));
            }
            partner[x] = y;
            partner[y] = x;
        }
        if partner.contains(&usize::MAX) {
            return Err(Error::InvalidDiagram("unmatched vertex".into()));
        }
        let mut map: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
        for (v, list) in beads {
            let x = id(*v)?;
            let g = good_of(n, x, partner[x]);
            let mut l = list.clone();
            if g != x {
                l.reverse();
            }
            if map.insert(g, l).is_some() {
                return Err(Error::InvalidDiagram("two bead lists on one strand".into()));
            }
        }
        Self::new(r, s, partner, map)
    }

    pub fn identity(r: usize, s: usize) -> Self {
        Self::permutation(r, s, &(1..=r + s).collect::<Vec<_>>()).unwrap()
    }

    /// Bead-free permutation diagram joining top t to bottom σ(t).
    pub fn permutation(r: usize, s: usize, sigma: &[usize]) -> Result<Self> {
        let n = r + s;
        if sigma.len() != n {
            return Err(Error::InvalidDiagram("permutation of wrong length".into()));
        }
        let mut partner = vec![usize::MAX; 2 * n];
        for (t, &b) in sigma.iter().enumerate() {
            if b == 0 || b > n || partner[n + b - 1] != usize::MAX {
                return Err(Error::InvalidDiagram("not a permutation".into()));
            }
            partner[t] = n + b - 1;
            partner[n + b - 1] = t;
        }
        Self::new(r, s, partner, BTreeMap::new())
    }

    /// Diagram with top and bottom arcs joining p and q; vertical elsewhere.
    pub fn arc(r: usize, s: usize, p: usize, q: usize) -> Result<Self> {
        let n = r + s;
        if !(1..=r).contains(&p) || !(r + 1..=n).contains(&q) {
            return Err(Error::OutOfRange(format!(
                "arc ({p},{q}) for (r,s)=({r},{s})"
            )));
        }
        let mut partner: Vec<usize> = (0..2 * n)
            .map(|v| if v < n { v + n } else { v - n })
            .collect();
        partner[p - 1] = q - 1;
        partner[q - 1] = p - 1;
        partner[n + p - 1] = n + q - 1;
        partner[n + q - 1] = n + p - 1;
        Self::new(r, s, partner, BTreeMap::new())
    }

    /// The identity with one bead on the vertical strand at position k.
    pub fn bead(r: usize, s: usize, k: usize) -> Result<Self> {
        if k == 0 || k > r + s {
            return Err(Error::OutOfRange(format!("bead position {k}")));
        }
        let mut d = Self::identity(r, s);
        d.beads.insert(k - 1, vec![1]);
        d.num_beads = 1;
        Ok(d)
    }

    pub fn r(&self) -> usize {
        self.r
    }
    pub fn s(&self) -> usize {
        self.s
    }
    pub fn size(&self) -> usize {
        self.r + self.s
    }
    pub fn num_beads(&self) -> u32 {
        self.num_beads
    }

    pub(crate) fn partner_ids(&self) -> &[usize] {
        &self.partner
    }

    pub(crate) fn bead_lists(&self) -> &BTreeMap<usize, Vec<u32>> {
        &self.beads
    }

    pub fn vertex(&self, id: usize) -> Vertex {
        let n = self.size();
        if id < n {
            Vertex::top(id + 1)
        } else {
            Vertex::bottom(id - n + 1)
        }
    }

    /// Strands as (good vertex, other vertex, beads from the good vertex).
    pub fn strands(&self) -> Vec<(Vertex, Vertex, Vec<u32>)> {
        let n = self.size();
        (0..2 * n)
            .filter(|&v| good_of(n, v, self.partner[v]) == v)
            .map(|v| {
                (
                    self.vertex(v),
                    self.vertex(self.partner[v]),
                    self.beads.get(&v).cloned().unwrap_or_default(),
                )
            })
            .collect()
    }

    fn beads_from(&self, v: usize) -> Vec<u32> {
        let n = self.size();
        let g = good_of(n, v, self.partner[v]);
        match self.beads.get(&g) {
            None => Vec::new(),
            Some(l) if g == v => l.clone(),
            Some(l) => l.iter().rev().copied().collect(),
        }
    }

    /// Concatenation with self below `o`; None if a loop forms in the middle row.
    pub fn multiply_raw(&self, o: &Self) -> Result<Option<Self>> {
        if self.r != o.r || self.s != o.s {
            return Err(Error::DimensionMismatch(format!(
                "diagram shapes ({},{}) and ({},{})",
                self.r, self.s, o.r, o.s
            )));
        }
        let n = self.size();
        let m1 = self.num_beads;
        let mut partner = vec![usize::MAX; 2 * n];
        let mut beads = BTreeMap::new();
        let mut mid_seen = vec![false; n];
        for start in 0..2 * n {
            if partner[start] != usize::MAX {
                continue;
            }
            // upper = true: walking in `o`, else in `self`
            let (mut upper, mut v) = (start < n, start);
            let mut list = Vec::new();
            let end = loop {
                let d = if upper { o } else { self };
                let w = d.partner[v];
                let off = if upper { m1 } else { 0 };
                list.extend(d.beads_from(v).into_iter().map(|b| b + off));
                match (upper, w < n) {
                    (true, true) | (false, false) => break w,
                    (false, true) => {
                        mid_seen[w] = true;
                        upper = true;
                        v = n + w;
                    }
                    (true, false) => {
                        mid_seen[w - n] = true;
                        upper = false;
                        v = w - n;
                    }
                }
            };
            partner[start] = end;
            partner[end] = start;
            if !list.is_empty() {
                let g = good_of(n, start, end);
                if g != start {
                    list.reverse();
                }
                beads.insert(g, list);
            }
        }
        if mid_seen.iter().any(|x| !x) {
            return Ok(None);
        }
        Ok(Some(Self {
            r: self.r,
            s: self.s,
            partner,
            beads,
            num_beads: self.num_beads + o.num_beads,
        }))
    }

    pub fn to_json(&self) -> Value {
        let tag = |v: Vertex| match v.row {
            Row::Top => "t",
            Row::Bottom => "b",
        };
        let strands = self.strands();
        let edges: Vec<Value> = strands
            .iter()
            .map(|(g, o, _)| json!([tag(*g), g.pos, tag(*o), o.pos]))
            .collect();
        let beads: Vec<Value> = strands
            .iter()
            .filter(|(_, _, l)| !l.is_empty())
            .map(|(g, _, l)| json!({"strand": [tag(*g), g.pos], "order": l}))
            .collect();
        json!({"schema": SCHEMA, "r": self.r, "s": self.s, "edges": edges, "beads": beads})
    }

    /// Reads the diagram JSON format. A bead strand may be given as `["t"|"b", k]`
    /// or as a bare integer k, meaning the top vertex k when that is a good
    /// vertex and the bottom vertex k otherwise.
    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::Parse(m.to_string());
        if let Some(s) = v.get("schema") {
            if s != SCHEMA {
                return Err(Error::Parse(format!("unsupported schema {s}")));
            }
        }
        let r = v
            .get("r")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("missing r"))? as usize;
        let s = v
            .get("s")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("missing s"))? as usize;
        let vertex = |tag: &Value, pos: &Value| -> Result<Vertex> {
            let p = pos
                .as_u64()
                .ok_or_else(|| bad("vertex position must be an integer"))?
                as usize;
            match tag.as_str() {
                Some("t") => Ok(Vertex::top(p)),
                Some("b") => Ok(Vertex::bottom(p)),
                _ => Err(bad("vertex row must be \"t\" or \"b\"")),
            }
        };
        let mut edges = Vec::new();
        for e in v
            .get("edges")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing edges"))?
        {
            let a = e
                .as_array()
                .filter(|a| a.len() == 4)
                .ok_or_else(|| bad("edge must be [row, k, row, k]"))?;
            edges.push((vertex(&a[0], &a[1])?, vertex(&a[2], &a[3])?));
        }
        let plain = Self::from_strands(r, s, &edges, &[])?;
        let n = r + s;
        let mut beads = Vec::new();
        if let Some(list) = v.get("beads") {
            for b in list
                .as_array()
                .ok_or_else(|| bad("beads must be an array"))?
            {
                let strand = b
                    .get("strand")
                    .ok_or_else(|| bad("bead entry needs strand"))?;
                let at = match strand {
                    Value::Array(a) if a.len() == 2 => vertex(&a[0], &a[1])?,
                    Value::Number(k) => {
                        let k = k.as_u64().ok_or_else(|| bad("bad strand index"))? as usize;
                        if k == 0 || k > n {
                            return Err(Error::OutOfRange(format!("strand {k}")));
                        }
                        if good_of(n, k - 1, plain.partner[k - 1]) == k - 1 {
                            Vertex::top(k)
                        } else {
                            Vertex::bottom(k)
                        }
                    }
                    _ => return Err(bad("strand must be [row, k] or k")),
                };
                let order = b
                    .get("order")
                    .and_then(Value::as_array)
                    .ok_or_else(|| bad("bead entry needs order"))?
                    .iter()
                    .map(|x| {
                        x.as_u64()
                            .map(|x| x as u32)
                            .ok_or_else(|| bad("bead numbers must be integers"))
                    })
                    .collect::<Result<Vec<_>>>()?;
                beads.push((at, order));
            }
        }
        let d = Self::from_strands(r, s, &edges, &beads)?;
        // bead lists must be anchored at good vertices
        for (at, _) in &beads {
            let id = match at.row {
                Row::Top => at.pos - 1,
                Row::Bottom => n + at.pos - 1,
            };
            if good_of(n, id, d.partner[id]) != id {
                return Err(Error::InvalidDiagram(format!(
                    "strand {at} is not a good vertex"
                )));
            }
        }
        Ok(d)
    }
}
