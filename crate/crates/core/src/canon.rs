//! Canonical labelling of vertex-coloured graphs by individualisation and
//! refinement.

use crate::gf2::bits;
use crate::graph::SimpleGraph;

/// Certificate: colours in canonical order, then canonically relabelled rows.
pub type Certificate = (Vec<u32>, Vec<u64>);

/// A permutation `perm` (vertex `v` goes to `perm[v]`) such that equal
/// certificates mean isomorphic coloured graphs.
pub fn canonical_labelling(g: &SimpleGraph, colours: &[u32]) -> Vec<usize> {
    canonical(g, colours).0
}

pub fn certificate(g: &SimpleGraph, colours: &[u32]) -> Certificate {
    canonical(g, colours).1
}

pub fn canonical_form(g: &SimpleGraph) -> SimpleGraph {
    let perm = canonical_labelling(g, &vec![0; g.n()]);
    g.permute(&perm)
}

pub fn are_isomorphic(a: &SimpleGraph, b: &SimpleGraph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b)
}

/// Compact string key: vertex count then hex rows of the canonical form.
pub fn graph_key(g: &SimpleGraph) -> String {
    let c = canonical_form(g);
    let mut s = format!("{}", c.n());
    for &r in c.rows() {
        s.push(':');
        s.push_str(&format!("{r:x}"));
    }
    s
}

fn canonical(g: &SimpleGraph, colours: &[u32]) -> (Vec<usize>, Certificate) {
    let n = g.n();
    assert_eq!(colours.len(), n);
    if n == 0 {
        return (Vec::new(), (Vec::new(), Vec::new()));
    }
    // cells as an ordered list of vertex masks
    let mut palette: Vec<u32> = colours.to_vec();
    palette.sort_unstable();
    palette.dedup();
    let cells: Vec<u64> = palette
        .iter()
        .map(|&c| (0..n).filter(|&v| colours[v] == c).fold(0, |m, v| m | 1 << v))
        .collect();
    let mut sorted_colours = colours.to_vec();
    sorted_colours.sort_unstable();
    let mut best: Option<(Vec<u64>, Vec<usize>)> = None;
    search(g, refine(g, cells), &mut best);
    let (rows, perm) = best.expect("at least one leaf");
    (perm, (sorted_colours, rows))
}

/// Split cells by neighbour counts into every cell until stable. The order of
/// the resulting cells depends only on isomorphism-invariant data.
fn refine(g: &SimpleGraph, mut cells: Vec<u64>) -> Vec<u64> {
    loop {
        let mut out: Vec<u64> = Vec::with_capacity(cells.len());
        let mut changed = false;
        for &cell in &cells {
            if cell.count_ones() == 1 {
                out.push(cell);
                continue;
            }
            let mut sigs: Vec<(Vec<u32>, usize)> = bits(cell)
                .map(|v| {
                    let row = g.neighbours(v);
                    (cells.iter().map(|&c| (row & c).count_ones()).collect(), v)
                })
                .collect();
            sigs.sort();
            let mut i = 0;
            let mut parts = 0;
            while i < sigs.len() {
                let mut mask = 0u64;
                let mut j = i;
                while j < sigs.len() && sigs[j].0 == sigs[i].0 {
                    mask |= 1 << sigs[j].1;
                    j += 1;
                }
                out.push(mask);
                parts += 1;
                i = j;
            }
            if parts > 1 {
                changed = true;
            }
        }
        cells = out;
        if !changed {
            return cells;
        }
    }
}

fn search(g: &SimpleGraph, cells: Vec<u64>, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
    let target = cells
        .iter()
        .enumerate()
        .filter(|(_, c)| c.count_ones() > 1)
        .min_by_key(|(i, c)| (c.count_ones(), *i))
        .map(|(i, _)| i);
    let Some(t) = target else {
        let mut perm = vec![0; g.n()];
        for (pos, &c) in cells.iter().enumerate() {
            perm[c.trailing_zeros() as usize] = pos;
        }
        let rows = g.permute(&perm).rows().to_vec();
        if best.as_ref().is_none_or(|(b, _)| rows < *b) {
            *best = Some((rows, perm));
        }
        return;
    };
    let cell = cells[t];
    let mut explored: Vec<usize> = Vec::new();
    for v in bits(cell) {
        // Swapping twins inside the cell is an automorphism fixing the
        // current partition, so their subtrees coincide.
        if explored.iter().any(|&u| twins(g, u, v)) {
            continue;
        }
        explored.push(v);
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend_from_slice(&cells[..t]);
        next.push(1 << v);
        next.push(cell & !(1 << v));
        next.extend_from_slice(&cells[t + 1..]);
        search(g, refine(g, next), best);
    }
}

fn twins(g: &SimpleGraph, u: usize, v: usize) -> bool {
    let mask = !((1u64 << u) | (1u64 << v));
    g.neighbours(u) & mask == g.neighbours(v) & mask
}
