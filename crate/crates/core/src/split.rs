//! Splits of graphs and the prime / degenerate classification.

use crate::error::{Error, Result};
use crate::gf2::bits;
use crate::graph::SimpleGraph;

/// A bipartition `(V0, V1)` whose crossing edges are exactly `U0 × U1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Split {
    pub side0: u64,
    pub side1: u64,
    pub frontier0: u64,
    pub frontier1: u64,
}

impl Split {
    /// Check the defining property against `g`.
    pub fn is_valid(&self, g: &SimpleGraph) -> bool {
        if self.side0 & self.side1 != 0
            || self.side0 | self.side1 != g.all()
            || self.side0.count_ones() < 2
            || self.side1.count_ones() < 2
        {
            return false;
        }
        bits(self.side0).all(|v| {
            let cross = g.neighbours(v) & self.side1;
            let expected = if self.frontier0 >> v & 1 == 1 { self.frontier1 } else { 0 };
            cross == expected
        })
    }
}

/// Smallest side containing `{a, x}` and avoiding `b` across the edge `ab`.
fn closure(g: &SimpleGraph, a: usize, b: usize, x: usize) -> u64 {
    let mut side = (1u64 << a) | (1u64 << x);
    let na = g.neighbours(a);
    let nb = g.neighbours(b);
    let mut stack: Vec<usize> = vec![a, x];
    while let Some(v) = stack.pop() {
        let row = g.neighbours(v);
        // w must join the side when E(v,w) differs from E(v,b)E(w,a)
        let expected = if nb >> v & 1 == 1 { na } else { 0 };
        let forced = (row ^ expected) & g.all() & !side & !(1u64 << v);
        for w in bits(forced) {
            side |= 1 << w;
            stack.push(w);
        }
    }
    side
}

/// Some split of a connected graph, if one exists.
pub fn find_split(g: &SimpleGraph) -> Result<Option<Split>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    if n < 4 {
        return Ok(None);
    }
    for (a, b) in g.edges() {
        for (a, b) in [(a, b), (b, a)] {
            for x in 0..n {
                if x == a || x == b {
                    continue;
                }
                let side0 = closure(g, a, b, x);
                let side1 = g.all() & !side0;
                if side1.count_ones() >= 2 {
                    let frontier0 = side0 & g.neighbours(b);
                    let frontier1 = side1 & g.neighbours(a);
                    let s = Split {
                        side0,
                        side1,
                        frontier0,
                        frontier1,
                    };
                    debug_assert!(s.is_valid(g));
                    return Ok(Some(s));
                }
            }
        }
    }
    Ok(None)
}

/// Connected with at least four vertices and no split.
pub fn is_prime(g: &SimpleGraph) -> bool {
    g.n() >= 4 && g.is_connected() && matches!(find_split(g), Ok(None))
}

/// Connected clique or star.
pub fn is_degenerate(g: &SimpleGraph) -> bool {
    g.n() >= 1 && (g.is_clique() || g.is_star())
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum FactorKind {
    Clique,
    Star { centre: usize },
    Prime,
}

/// Kind of a prime or degenerate graph; cliques take precedence for `K1`, `K2`.
pub fn classify(g: &SimpleGraph) -> Option<FactorKind> {
    if g.is_clique() {
        Some(FactorKind::Clique)
    } else if let Some(centre) = g.star_center().filter(|_| g.is_star()) {
        Some(FactorKind::Star { centre })
    } else if is_prime(g) {
        Some(FactorKind::Prime)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_has_split(g: &SimpleGraph) -> bool {
        let n = g.n();
        (1u64..(1 << n) - 1).any(|side0| {
            let side1 = g.all() & !side0;
            if side0.count_ones() < 2 || side1.count_ones() < 2 {
                return false;
            }
            let frontier0 = bits(side0).filter(|&v| g.neighbours(v) & side1 != 0).fold(0, |m, v| m | 1 << v);
            let frontier1 = bits(side1).filter(|&v| g.neighbours(v) & side0 != 0).fold(0, |m, v| m | 1 << v);
            Split { side0, side1, frontier0, frontier1 }.is_valid(g)
        })
    }

    #[test]
    fn examples() {
        assert!(is_prime(&SimpleGraph::cycle(5)));
        assert!(is_prime(&SimpleGraph::cycle(7)));
        assert!(!is_prime(&SimpleGraph::cycle(4)));
        let k4 = SimpleGraph::complete(4);
        assert!(is_degenerate(&k4));
        assert!(find_split(&k4).unwrap().is_some());
        let p4 = SimpleGraph::path(4);
        let s = find_split(&p4).unwrap().unwrap();
        assert!(s.is_valid(&p4));
        assert!(matches!(find_split(&SimpleGraph::new(3)), Err(Error::Disconnected)));
        assert_eq!(classify(&SimpleGraph::star(4)), Some(FactorKind::Star { centre: 0 }));
    }

    #[test]
    fn split_search_matches_brute_force() {
        for n in 4..=7usize {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let step = if n == 7 { 37 } else { 1 };
            for mask in (0u64..1 << pairs.len()).step_by(step) {
                let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
                let g = SimpleGraph::from_edges(n, &edges).unwrap();
                if !g.is_connected() {
                    continue;
                }
                assert_eq!(find_split(&g).unwrap().is_some(), brute_has_split(&g), "{edges:?}");
            }
        }
    }
}
