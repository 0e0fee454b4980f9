//! Simple graphs on at most 64 vertices, stored as bitset adjacency rows.

use crate::error::{Error, Result};
use crate::gf2::{bits, low_mask, BitMatrix};
use serde::{Deserialize, Serialize};

pub const MAX_VERTICES: usize = 64;

/// Symmetric zero-diagonal adjacency over GF(2). Vertex `v` is bit `v`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct SimpleGraph {
    adj: Vec<u64>,
}

impl SimpleGraph {
    /// Edgeless graph. Panics beyond [`MAX_VERTICES`].
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "{n} vertices exceed {MAX_VERTICES}");
        SimpleGraph { adj: vec![0; n] }
    }

    pub fn try_new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge(n));
        }
        Ok(Self::new(n))
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::try_new(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Input(format!("edge ({u},{v}) out of range for {n} vertices")));
            }
            if u == v {
                return Err(Error::Input(format!("self-loop at {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Build from adjacency rows; rows must be symmetric with zero diagonal.
    pub fn from_rows(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(Error::TooLarge(n));
        }
        let g = SimpleGraph { adj };
        for v in 0..n {
            if g.adj[v] & !low_mask(n) != 0 || g.has_edge(v, v) {
                return Err(Error::Input("adjacency rows out of range".into()));
            }
            for u in bits(g.adj[v]) {
                if !g.has_edge(u, v) {
                    return Err(Error::Input("adjacency is not symmetric".into()));
                }
            }
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::new(n);
        for v in 0..n {
            g.adj[v] = low_mask(n) & !(1 << v);
        }
        g
    }

    /// Star with centre 0 and `n - 1` leaves.
    pub fn star(n: usize) -> Self {
        let mut g = Self::new(n);
        for v in 1..n {
            g.add_edge(0, v);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Self::new(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Self::path(n);
        if n >= 3 {
            g.add_edge(0, n - 1);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn all(&self) -> u64 {
        low_mask(self.n())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert_ne!(u, v, "self-loop");
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    pub fn set_edge(&mut self, u: usize, v: usize, on: bool) {
        if on {
            self.add_edge(u, v)
        } else {
            self.remove_edge(u, v)
        }
    }

    pub fn toggle_edge(&mut self, u: usize, v: usize) {
        assert_ne!(u, v, "self-loop");
        self.adj[u] ^= 1 << v;
        self.adj[v] ^= 1 << u;
    }

    pub fn neighbours(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            for v in bits(self.adj[u] & !low_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn adjacency(&self) -> BitMatrix {
        BitMatrix::from_rows(self.n(), self.adj.clone())
    }

    /// Induced subgraph on `vertices`, in the given order.
    pub fn induced(&self, vertices: &[usize]) -> SimpleGraph {
        let mut g = SimpleGraph::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn induced_mask(&self, mask: u64) -> SimpleGraph {
        self.induced(&bits(mask).collect::<Vec<_>>())
    }

    /// Delete `v`; vertices above it shift down by one.
    pub fn remove_vertex(&self, v: usize) -> SimpleGraph {
        let keep: Vec<usize> = (0..self.n()).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    /// Append a vertex adjacent to `neighbours`; returns its index.
    pub fn add_vertex(&mut self, neighbours: u64) -> usize {
        let v = self.n();
        assert!(v < MAX_VERTICES, "graph full");
        assert_eq!(neighbours & !low_mask(v), 0);
        self.adj.push(neighbours);
        for u in bits(neighbours) {
            self.adj[u] |= 1 << v;
        }
        v
    }

    /// Relabel: vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> SimpleGraph {
        assert_eq!(perm.len(), self.n());
        let mut g = SimpleGraph::new(self.n());
        for v in 0..self.n() {
            let mut row = 0;
            for u in bits(self.adj[v]) {
                row |= 1 << perm[u];
            }
            g.adj[perm[v]] = row;
        }
        g
    }

    pub fn component_of(&self, v: usize) -> u64 {
        self.component_within(v, self.all())
    }

    /// Connected component of `v` in the subgraph induced on `within`.
    pub fn component_within(&self, v: usize, within: u64) -> u64 {
        let mut seen = 1u64 << v;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for u in bits(frontier) {
                next |= self.adj[u];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn components(&self) -> Vec<u64> {
        let mut left = self.all();
        let mut out = Vec::new();
        while left != 0 {
            let c = self.component_of(left.trailing_zeros() as usize);
            out.push(c);
            left &= !c;
        }
        out
    }

    /// Graphs with at most one vertex count as connected.
    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.component_of(0) == self.all()
    }

    /// Complement the edges inside `mask`.
    pub fn complement_on(&self, mask: u64) -> SimpleGraph {
        let mut g = self.clone();
        for u in bits(mask) {
            g.adj[u] ^= mask & !(1 << u);
        }
        g
    }

    /// G*v: complement the subgraph induced on N(v).
    pub fn local_complement(&self, v: usize) -> SimpleGraph {
        self.complement_on(self.adj[v])
    }

    /// (G*v) minus v.
    pub fn smoothing(&self, v: usize) -> SimpleGraph {
        self.local_complement(v).remove_vertex(v)
    }

    pub fn is_clique(&self) -> bool {
        (0..self.n()).all(|v| self.adj[v] == self.all() & !(1 << v))
    }

    /// Centre of a star with at least 2 vertices (for K2, vertex 0).
    pub fn star_center(&self) -> Option<usize> {
        let n = self.n();
        if n < 2 {
            return None;
        }
        (0..n).find(|&c| {
            self.adj[c] == self.all() & !(1 << c)
                && (0..n).all(|v| v == c || self.adj[v] == 1 << c)
        })
    }

    pub fn is_star(&self) -> bool {
        self.star_center().is_some()
    }

    pub fn is_bipartite(&self) -> bool {
        let n = self.n();
        let mut side = vec![None; n];
        for s in 0..n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                let su = side[u].unwrap();
                for v in bits(self.adj[u]) {
                    match side[v] {
                        None => {
                            side[v] = Some(!su);
                            stack.push(v);
                        }
                        Some(sv) if sv == su => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    /// Disjoint union; `other`'s vertices follow `self`'s.
    pub fn disjoint_union(&self, other: &SimpleGraph) -> SimpleGraph {
        let n = self.n();
        let mut g = SimpleGraph::new(n + other.n());
        g.adj[..n].copy_from_slice(&self.adj);
        for v in 0..other.n() {
            g.adj[n + v] = other.adj[v] << n;
        }
        g
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            n: self.n(),
            labels: None,
            edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            weights: None,
        }
    }
}

/// Toric sum `(A, a_mask) ⊠ (B, b_mask)`: disjoint union plus all edges
/// between the two frontiers. `B`'s vertices follow `A`'s.
pub fn toric_sum(a: &SimpleGraph, a_frontier: u64, b: &SimpleGraph, b_frontier: u64) -> SimpleGraph {
    let mut g = a.disjoint_union(b);
    let n = a.n();
    for u in bits(a_frontier) {
        for v in bits(b_frontier) {
            g.add_edge(u, n + v);
        }
    }
    g
}

/// Graft `(A, f_a)` and `(B, f_b)`: `(A - f_a, N(f_a)) ⊠ (B - f_b, N(f_b))`.
pub fn graft_graphs(a: &SimpleGraph, fa: usize, b: &SimpleGraph, fb: usize) -> SimpleGraph {
    let drop = |g: &SimpleGraph, f: usize| {
        let nb = g.neighbours(f);
        let lo = nb & low_mask(f);
        let hi = (nb >> (f + 1)) << f;
        (g.remove_vertex(f), lo | hi)
    };
    let (ga, na) = drop(a, fa);
    let (gb, nb) = drop(b, fb);
    toric_sum(&ga, na, &gb, nb)
}

/// Simultaneous toric sum along the pattern `(G0, r0)`: every vertex `x != r0`
/// is replaced by `part - r`, joined through `N(r)` to whatever `x` saw.
/// Output vertex order: for each vertex of `G0` in order, `r0` itself or the
/// part's non-root vertices in order.
pub fn compose_graphs(g0: &SimpleGraph, r0: usize, parts: &[(SimpleGraph, usize)]) -> Result<SimpleGraph> {
    if parts.len() + 1 != g0.n() {
        return Err(Error::Arity {
            expected: g0.n().saturating_sub(1),
            got: parts.len(),
        });
    }
    // blocks[x] = (vertices in output, frontier vertices in output)
    let mut blocks: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    let mut next = 0;
    let mut pi = 0;
    for x in 0..g0.n() {
        if x == r0 {
            blocks.push((vec![next], vec![next]));
            next += 1;
        } else {
            let (p, r) = &parts[pi];
            pi += 1;
            if p.n() < 2 || *r >= p.n() {
                return Err(Error::Input("a rooted part needs its root and one more vertex".into()));
            }
            let verts: Vec<usize> = (0..p.n() - 1).map(|i| next + i).collect();
            let front: Vec<usize> = bits(p.neighbours(*r))
                .map(|u| next + if u > *r { u - 1 } else { u })
                .collect();
            next += p.n() - 1;
            blocks.push((verts, front));
        }
    }
    let mut g = SimpleGraph::try_new(next)?;
    pi = 0;
    for x in 0..g0.n() {
        if x != r0 {
            let (p, r) = &parts[pi];
            pi += 1;
            let inner = p.remove_vertex(*r);
            let base = blocks[x].0[0];
            for (u, v) in inner.edges() {
                g.add_edge(base + u, base + v);
            }
        }
    }
    for (x, y) in g0.edges() {
        for &u in &blocks[x].1 {
            for &v in &blocks[y].1 {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Komposition `(G_A, a) △ (G_B, b)`, rooted at the new vertex 0.
pub fn komposition_graph(ga: &SimpleGraph, a: usize, gb: &SimpleGraph, b: usize) -> SimpleGraph {
    compose_graphs(&SimpleGraph::complete(3), 0, &[(ga.clone(), a), (gb.clone(), b)])
        .expect("arity fixed by the tripod")
}

/// Interlace graph of a plumbing: `(G_A≍a, N(a)) ⊠ (G_B≍b, N(b))`.
pub fn plumbing_graph(ga: &SimpleGraph, a: usize, gb: &SimpleGraph, b: usize) -> SimpleGraph {
    graft_graphs(&ga.local_complement(a), a, &gb.local_complement(b), b)
}

/// JSON exchange format for graphs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<i64>>,
}

impl GraphJson {
    pub fn to_graph(&self) -> Result<SimpleGraph> {
        if let Some(labels) = &self.labels {
            if labels.len() != self.n {
                return Err(Error::Input(format!("{} labels for {} vertices", labels.len(), self.n)));
            }
        }
        if let Some(w) = &self.weights {
            if w.len() != self.n {
                return Err(Error::Input(format!("{} weights for {} vertices", w.len(), self.n)));
            }
        }
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        SimpleGraph::from_edges(self.n, &edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn local_complement_examples() {
        let k3 = SimpleGraph::complete(3);
        let s = k3.local_complement(0);
        assert_eq!(s.star_center(), Some(0));
        let mut g = SimpleGraph::path(3);
        g.add_vertex(0);
        assert_eq!(g.local_complement(3), g);
    }

    #[test]
    fn degenerate_shapes() {
        assert!(SimpleGraph::complete(4).is_clique());
        assert_eq!(SimpleGraph::star(5).star_center(), Some(0));
        assert_eq!(SimpleGraph::complete(2).star_center(), Some(0));
        assert!(!SimpleGraph::cycle(4).is_star());
        assert!(SimpleGraph::cycle(6).is_bipartite());
        assert!(!SimpleGraph::cycle(5).is_bipartite());
    }

    #[test]
    fn komposition_of_edges() {
        // (K2, 0) △ (K2, 0): root joined to both remaining vertices, which are joined.
        let k2 = SimpleGraph::complete(2);
        assert_eq!(komposition_graph(&k2, 0, &k2, 0), SimpleGraph::complete(3));
    }

    #[test]
    fn graft_two_edges() {
        let k2 = SimpleGraph::complete(2);
        assert_eq!(graft_graphs(&k2, 1, &k2, 0), SimpleGraph::complete(2));
    }

    #[test]
    fn components_and_removal() {
        let g = SimpleGraph::from_edges(5, &[(0, 1), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![0b11, 0b100, 0b11000]);
        assert!(!g.is_connected());
        let h = g.remove_vertex(2);
        assert_eq!(h.edges(), vec![(0, 1), (2, 3)]);
    }
}
