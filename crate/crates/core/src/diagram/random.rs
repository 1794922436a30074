use rand::seq::SliceRandom;
use rand::Rng;

use super::bead::{BeadDiagram, Vertex};

/// A uniformly shaped random diagram carrying up to `max_beads` beads.
pub fn random_diagram<R: Rng + ?Sized>(
    r: usize,
    s: usize,
    max_beads: u32,
    rng: &mut R,
) -> BeadDiagram {
    let n = r + s;
    let a = rng.random_range(0..=r.min(s));
    let mut left: Vec<usize> = (1..=r).collect();
    let mut right: Vec<usize> = (r + 1..=n).collect();
    let mut edges = Vec::with_capacity(n);
    // top and bottom arcs use independent choices of endpoints
    let mut pick = |row: fn(usize) -> Vertex, rng: &mut R| {
        left.shuffle(rng);
        right.shuffle(rng);
        let arcs: Vec<(Vertex, Vertex)> = (0..a).map(|i| (row(left[i]), row(right[i]))).collect();
        let free: Vec<usize> = left[a..].iter().chain(&right[a..]).copied().collect();
        (arcs, free)
    };
    let (top_arcs, mut top_free) = pick(Vertex::top, rng);
    let (bottom_arcs, mut bottom_free) = pick(Vertex::bottom, rng);
    edges.extend(top_arcs);
    edges.extend(bottom_arcs);
    top_free.sort_unstable();
    bottom_free.sort_unstable();
    let (tl, tr): (Vec<usize>, Vec<usize>) = top_free.iter().partition(|&&x| x <= r);
    let (mut bl, mut br): (Vec<usize>, Vec<usize>) = bottom_free.iter().partition(|&&x| x <= r);
    bl.shuffle(rng);
    br.shuffle(rng);
    for (t, b) in tl.iter().zip(&bl).chain(tr.iter().zip(&br)) {
        edges.push((Vertex::top(*t), Vertex::bottom(*b)));
    }
    let m = if n == 0 {
        0
    } else {
        rng.random_range(0..=max_beads)
    };
    let mut numbers: Vec<u32> = (1..=m).collect();
    numbers.shuffle(rng);
    let mut lists: Vec<Vec<u32>> = vec![Vec::new(); edges.len()];
    for b in numbers {
        let k = rng.random_range(0..edges.len());
        lists[k].push(b);
    }
    let beads: Vec<(Vertex, Vec<u32>)> = edges
        .iter()
        .zip(lists)
        .filter(|(_, l)| !l.is_empty())
        .map(|(e, l)| (if rng.random_bool(0.5) { e.0 } else { e.1 }, l))
        .collect();
    BeadDiagram::from_strands(r, s, &edges, &beads).expect("random diagram is valid")
}
