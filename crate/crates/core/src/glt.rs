//! Graph-labelled trees: accessibility graphs, the reduced (Cunningham)
//! decomposition, weights, local complementation and composition.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::canon::certificate;
use crate::error::{Error, Result};
use crate::forms::check_cl2;
use crate::gf2::bits;
use crate::graph::{toric_sum, GraphJson, SimpleGraph, MAX_VERTICES};
use crate::split::{classify, find_split, is_degenerate, FactorKind, Split};

/// Where a node-graph vertex points in the tree.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Endpoint {
    Leaf(usize),
    Node { node: usize, vertex: usize },
}

/// A node: its graph and the bijection `rho` from its vertices to its tree
/// neighbours.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GltNode {
    pub graph: SimpleGraph,
    pub rho: Vec<Endpoint>,
}

/// A graph-labelled tree with leaves `0..leaves`. A tree without nodes has at
/// most one leaf.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GraphLabelledTree {
    pub nodes: Vec<GltNode>,
    pub leaves: usize,
}

fn drop_bit(mask: u64, v: usize) -> u64 {
    let low = mask & ((1u64 << v) - 1);
    let high = if v + 1 >= 64 { 0 } else { (mask >> (v + 1)) << v };
    low | high
}

impl GraphLabelledTree {
    /// One node carrying `g`, vertex `i` attached to leaf `i`.
    pub fn single(g: SimpleGraph) -> Self {
        let n = g.n();
        if n <= 1 {
            return GraphLabelledTree { nodes: Vec::new(), leaves: n };
        }
        GraphLabelledTree {
            nodes: vec![GltNode {
                graph: g,
                rho: (0..n).map(Endpoint::Leaf).collect(),
            }],
            leaves: n,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::MalformedGlt(m.to_string()));
        if self.leaves > MAX_VERTICES {
            return Err(Error::TooLarge(self.leaves));
        }
        if self.nodes.is_empty() {
            return if self.leaves <= 1 { Ok(()) } else { bad("leaves without nodes") };
        }
        let mut seen = vec![false; self.leaves];
        let mut tree_edges = 0;
        for (x, node) in self.nodes.iter().enumerate() {
            if node.rho.len() != node.graph.n() {
                return bad("rho is not a bijection onto the node graph");
            }
            for (a, &e) in node.rho.iter().enumerate() {
                match e {
                    Endpoint::Leaf(l) => {
                        if l >= self.leaves || seen[l] {
                            return bad("leaf missing or repeated");
                        }
                        seen[l] = true;
                    }
                    Endpoint::Node { node: y, vertex: b } => {
                        if y == x || y >= self.nodes.len() || b >= self.nodes[y].rho.len() {
                            return bad("dangling tree edge");
                        }
                        if self.nodes[y].rho[b] != (Endpoint::Node { node: x, vertex: a }) {
                            return bad("tree edge not reciprocal");
                        }
                        tree_edges += 1;
                    }
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return bad("leaf missing or repeated");
        }
        if tree_edges != 2 * (self.nodes.len() - 1) {
            return bad("not a tree");
        }
        let mut reached = vec![false; self.nodes.len()];
        let mut stack = vec![0];
        reached[0] = true;
        while let Some(x) = stack.pop() {
            for e in &self.nodes[x].rho {
                if let Endpoint::Node { node: y, .. } = *e {
                    if !reached[y] {
                        reached[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        if reached.iter().any(|r| !r) {
            return bad("not a tree");
        }
        Ok(())
    }

    /// Node and vertex a leaf is attached to.
    pub fn leaf_position(&self, leaf: usize) -> Option<(usize, usize)> {
        self.nodes.iter().enumerate().find_map(|(x, node)| {
            node.rho.iter().position(|&e| e == Endpoint::Leaf(leaf)).map(|a| (x, a))
        })
    }

    /// Tree edges `((x, a), (y, b))` with `x < y`.
    pub fn tree_edges(&self) -> Vec<((usize, usize), (usize, usize))> {
        let mut out = Vec::new();
        for (x, node) in self.nodes.iter().enumerate() {
            for (a, &e) in node.rho.iter().enumerate() {
                if let Endpoint::Node { node: y, vertex: b } = e {
                    if x < y {
                        out.push(((x, a), (y, b)));
                    }
                }
            }
        }
        out
    }

    /// Leaves immediately accessible through each node vertex.
    pub fn accessible_sets(&self) -> Vec<Vec<u64>> {
        let mut memo: Vec<Vec<Option<u64>>> = self.nodes.iter().map(|n| vec![None; n.graph.n()]).collect();
        for x in 0..self.nodes.len() {
            for a in 0..self.nodes[x].graph.n() {
                self.acc(x, a, &mut memo);
            }
        }
        memo.into_iter().map(|v| v.into_iter().map(|m| m.unwrap_or(0)).collect()).collect()
    }

    fn acc(&self, x: usize, a: usize, memo: &mut Vec<Vec<Option<u64>>>) -> u64 {
        if let Some(m) = memo[x][a] {
            return m;
        }
        let m = match self.nodes[x].rho[a] {
            Endpoint::Leaf(l) => 1u64 << l,
            Endpoint::Node { node: y, vertex: b } => {
                let mut m = 0;
                for w in bits(self.nodes[y].graph.neighbours(b)) {
                    m |= self.acc(y, w, memo);
                }
                m
            }
        };
        memo[x][a] = Some(m);
        m
    }

    pub fn accessibility(&self) -> Result<SimpleGraph> {
        self.validate()?;
        let acc = self.accessible_sets();
        let mut g = SimpleGraph::new(self.leaves);
        for (x, node) in self.nodes.iter().enumerate() {
            for (a, b) in node.graph.edges() {
                for u in bits(acc[x][a]) {
                    for v in bits(acc[x][b]) {
                        g.add_edge(u, v);
                    }
                }
            }
        }
        Ok(g)
    }

    /// Number of immediately accessible leaves of every node vertex.
    pub fn weights(&self) -> Vec<Vec<usize>> {
        self.accessible_sets()
            .into_iter()
            .map(|v| v.into_iter().map(|m| m.count_ones() as usize).collect())
            .collect()
    }

    /// All leaves of the subtree behind vertex `a` of node `x`.
    pub fn leaves_behind(&self, x: usize, a: usize) -> u64 {
        match self.nodes[x].rho[a] {
            Endpoint::Leaf(l) => 1 << l,
            Endpoint::Node { node: y, vertex: b } => (0..self.nodes[y].graph.n())
                .filter(|&w| w != b)
                .fold(0, |m, w| m | self.leaves_behind(y, w)),
        }
    }

    /// The split of the accessibility graph given by each tree edge.
    pub fn edge_splits(&self) -> Vec<Split> {
        let acc = self.accessible_sets();
        self.tree_edges()
            .into_iter()
            .map(|((x, a), (y, b))| Split {
                side0: self.leaves_behind(y, b),
                side1: self.leaves_behind(x, a),
                frontier0: acc[y][b],
                frontier1: acc[x][a],
            })
            .collect()
    }

    /// Every node prime or degenerate, no clique next to a clique, no star
    /// centre next to a star extremity.
    pub fn is_reduced(&self) -> bool {
        let kinds: Vec<Option<FactorKind>> = self.nodes.iter().map(|n| classify(&n.graph)).collect();
        if kinds.iter().any(|k| k.is_none()) {
            return false;
        }
        if self.nodes.len() > 1 && self.nodes.iter().any(|n| n.graph.n() < 3) {
            return false;
        }
        self.tree_edges().into_iter().all(|((x, a), (y, b))| !fusible(&self.nodes[x].graph, a, &self.nodes[y].graph, b))
    }

    fn with_leaf_permutation(mut self, map: &[usize]) -> Self {
        for node in &mut self.nodes {
            for e in &mut node.rho {
                if let Endpoint::Leaf(l) = e {
                    *l = map[*l];
                }
            }
        }
        self
    }

    /// Canonical string; with `labelled` the leaf labels are part of it.
    pub fn canonical_form(&self, labelled: bool) -> String {
        if self.nodes.is_empty() {
            return match (self.leaves, labelled) {
                (0, _) => String::new(),
                (_, true) => "L0".to_string(),
                (_, false) => "L".to_string(),
            };
        }
        (0..self.nodes.len())
            .map(|x| self.encode(x, None, labelled, None))
            .min()
            .expect("at least one node")
    }

    fn encode(&self, x: usize, from: Option<usize>, labelled: bool, weights: Option<&[Vec<usize>]>) -> String {
        let node = &self.nodes[x];
        let labels: Vec<String> = node
            .rho
            .iter()
            .enumerate()
            .map(|(a, &e)| {
                let label = if Some(a) == from {
                    "^".to_string()
                } else {
                    match e {
                        Endpoint::Leaf(l) if labelled => format!("L{l}"),
                        Endpoint::Leaf(_) => "L".to_string(),
                        Endpoint::Node { node: y, vertex: b } => self.encode(y, Some(b), labelled, weights),
                    }
                };
                match weights {
                    Some(w) => format!("{}{label}", w[x][a]),
                    None => label,
                }
            })
            .collect();
        let palette: Vec<&String> = labels.iter().collect::<BTreeSet<_>>().into_iter().collect();
        let colours: Vec<u32> = labels
            .iter()
            .map(|s| palette.iter().position(|p| *p == s).expect("in palette") as u32)
            .collect();
        let (sorted, rows) = certificate(&node.graph, &colours);
        let mut out = String::from("(");
        for (i, p) in palette.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(p);
        }
        out.push('|');
        for c in sorted {
            let _ = write!(out, "{c}.");
        }
        out.push('|');
        for r in rows {
            let _ = write!(out, "{r:x}.");
        }
        out.push(')');
        out
    }

    pub fn to_json(&self) -> GltJson {
        GltJson {
            leaves: self.leaves,
            nodes: self
                .nodes
                .iter()
                .map(|n| GltNodeJson {
                    graph: n.graph.to_json(),
                    rho: n.rho.clone(),
                })
                .collect(),
            edges: self
                .tree_edges()
                .into_iter()
                .map(|((x, a), (y, b))| [[x, a], [y, b]])
                .collect(),
        }
    }

    /// DOT drawing: node graphs as clusters, tree edges dashed, leaves as boxes.
    pub fn to_dot(&self, weights: Option<&[Vec<usize>]>) -> String {
        let mut s = String::from("graph glt {\n  compound=true;\n");
        for (x, node) in self.nodes.iter().enumerate() {
            let _ = writeln!(s, "  subgraph cluster_{x} {{\n    label=\"{x}\";");
            for a in 0..node.graph.n() {
                match weights {
                    Some(w) => {
                        let _ = writeln!(s, "    n{x}v{a} [label=\"{a}:{}\"];", w[x][a]);
                    }
                    None => {
                        let _ = writeln!(s, "    n{x}v{a} [label=\"{a}\"];");
                    }
                }
            }
            for (a, b) in node.graph.edges() {
                let _ = writeln!(s, "    n{x}v{a} -- n{x}v{b};");
            }
            s.push_str("  }\n");
        }
        for l in 0..self.leaves {
            let _ = writeln!(s, "  l{l} [shape=box,label=\"{l}\"];");
        }
        for (x, node) in self.nodes.iter().enumerate() {
            for (a, &e) in node.rho.iter().enumerate() {
                match e {
                    Endpoint::Leaf(l) => {
                        let _ = writeln!(s, "  n{x}v{a} -- l{l} [style=dashed];");
                    }
                    Endpoint::Node { node: y, vertex: b } if x < y => {
                        let _ = writeln!(s, "  n{x}v{a} -- n{y}v{b} [style=dashed];");
                    }
                    _ => {}
                }
            }
        }
        s.push_str("}\n");
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GltNodeJson {
    pub graph: GraphJson,
    pub rho: Vec<Endpoint>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GltJson {
    pub leaves: usize,
    pub nodes: Vec<GltNodeJson>,
    pub edges: Vec<[[usize; 2]; 2]>,
}

impl GltJson {
    pub fn to_glt(&self) -> Result<GraphLabelledTree> {
        let nodes = self
            .nodes
            .iter()
            .map(|n| {
                Ok(GltNode {
                    graph: n.graph.to_graph()?,
                    rho: n.rho.clone(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let t = GraphLabelledTree {
            nodes,
            leaves: self.leaves,
        };
        t.validate()?;
        Ok(t)
    }
}

/// Clique next to clique, or a star centre next to an extremity of a star.
fn fusible(gx: &SimpleGraph, a: usize, gy: &SimpleGraph, b: usize) -> bool {
    let kx = classify(gx);
    let ky = classify(gy);
    match (kx, ky) {
        (Some(FactorKind::Clique), Some(FactorKind::Clique)) => true,
        (Some(FactorKind::Star { centre: cx }), Some(FactorKind::Star { centre: cy })) => {
            (cx == a) != (cy == b)
        }
        _ => false,
    }
}

/// Mutable tree used while decomposing; nodes may be deleted.
struct Builder {
    nodes: Vec<Option<GltNode>>,
}

impl Builder {
    fn node(&self, x: usize) -> &GltNode {
        self.nodes[x].as_ref().expect("live node")
    }

    fn relink(&mut self, e: Endpoint, to: Endpoint) {
        if let Endpoint::Node { node: y, vertex: b } = e {
            self.nodes[y].as_mut().expect("live node").rho[b] = to;
        }
    }

    fn split(&mut self, x: usize, s: &Split) {
        let old = self.nodes[x].take().expect("live node");
        let y = self.nodes.len();
        self.nodes.push(None);
        let make = |side: u64, frontier: u64, other: usize, other_marker: usize| -> GltNode {
            let vs: Vec<usize> = bits(side).collect();
            let mut g = old.graph.induced(&vs);
            let fmask = vs.iter().enumerate().filter(|(_, &v)| frontier >> v & 1 == 1).fold(0u64, |m, (i, _)| m | 1 << i);
            g.add_vertex(fmask);
            let mut rho: Vec<Endpoint> = vs.iter().map(|&v| old.rho[v]).collect();
            rho.push(Endpoint::Node { node: other, vertex: other_marker });
            GltNode { graph: g, rho }
        };
        let m0 = s.side0.count_ones() as usize;
        let m1 = s.side1.count_ones() as usize;
        let n0 = make(s.side0, s.frontier0, y, m1);
        let n1 = make(s.side1, s.frontier1, x, m0);
        self.nodes[x] = Some(n0);
        self.nodes[y] = Some(n1);
        for z in [x, y] {
            let rho = self.node(z).rho.clone();
            for (a, &e) in rho.iter().enumerate() {
                if let Endpoint::Node { node, .. } = e {
                    if node != x && node != y {
                        self.relink(e, Endpoint::Node { node: z, vertex: a });
                    }
                }
            }
        }
    }

    fn fuse(&mut self, x: usize, a: usize, y: usize, b: usize) {
        let nx = self.nodes[x].take().expect("live node");
        let ny = self.nodes[y].take().expect("live node");
        let gx = nx.graph.remove_vertex(a);
        let gy = ny.graph.remove_vertex(b);
        let fx = drop_bit(nx.graph.neighbours(a), a);
        let fy = drop_bit(ny.graph.neighbours(b), b);
        let graph = toric_sum(&gx, fx, &gy, fy);
        let mut rho: Vec<Endpoint> = nx.rho.iter().enumerate().filter(|&(i, _)| i != a).map(|(_, &e)| e).collect();
        rho.extend(ny.rho.iter().enumerate().filter(|&(i, _)| i != b).map(|(_, &e)| e));
        self.nodes[x] = Some(GltNode { graph, rho: rho.clone() });
        for (i, &e) in rho.iter().enumerate() {
            self.relink(e, Endpoint::Node { node: x, vertex: i });
        }
    }

    fn find_fusion(&self) -> Option<(usize, usize, usize, usize)> {
        for (x, node) in self.nodes.iter().enumerate() {
            let Some(node) = node else { continue };
            for (a, &e) in node.rho.iter().enumerate() {
                if let Endpoint::Node { node: y, vertex: b } = e {
                    if x < y && fusible(&node.graph, a, &self.node(y).graph, b) {
                        return Some((x, a, y, b));
                    }
                }
            }
        }
        None
    }

    fn finish(self, leaves: usize) -> GraphLabelledTree {
        let mut index = vec![usize::MAX; self.nodes.len()];
        let mut k = 0;
        for (x, n) in self.nodes.iter().enumerate() {
            if n.is_some() {
                index[x] = k;
                k += 1;
            }
        }
        let nodes = self
            .nodes
            .into_iter()
            .flatten()
            .map(|mut n| {
                for e in &mut n.rho {
                    if let Endpoint::Node { node, .. } = e {
                        *node = index[*node];
                    }
                }
                n
            })
            .collect();
        GraphLabelledTree { nodes, leaves }
    }
}

/// The reduced graph-labelled tree of a connected graph.
pub fn cunningham(g: &SimpleGraph) -> Result<GraphLabelledTree> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let start = GraphLabelledTree::single(g.clone());
    if start.nodes.is_empty() {
        return Ok(start);
    }
    let mut b = Builder {
        nodes: start.nodes.into_iter().map(Some).collect(),
    };
    let mut work = vec![0usize];
    while let Some(x) = work.pop() {
        let graph = &b.node(x).graph;
        if is_degenerate(graph) {
            continue;
        }
        if let Some(s) = find_split(graph)? {
            b.split(x, &s);
            work.push(x);
            work.push(b.nodes.len() - 1);
        }
    }
    while let Some((x, a, y, c)) = b.find_fusion() {
        b.fuse(x, a, y, c);
    }
    let t = b.finish(g.n());
    debug_assert!(t.validate().is_ok());
    Ok(t)
}

/// One reduced tree per connected component, with the component's vertices
/// (leaf `i` of the tree is vertex `vertices[i]`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphLabelledForest {
    pub n: usize,
    pub components: Vec<(Vec<usize>, GraphLabelledTree)>,
}

impl GraphLabelledForest {
    pub fn accessibility(&self) -> Result<SimpleGraph> {
        let mut g = SimpleGraph::new(self.n);
        for (vs, t) in &self.components {
            for (u, v) in t.accessibility()?.edges() {
                g.add_edge(vs[u], vs[v]);
            }
        }
        Ok(g)
    }
}

pub fn glf_decompose(g: &SimpleGraph) -> GraphLabelledForest {
    let components = g
        .components()
        .into_iter()
        .map(|c| {
            let vs: Vec<usize> = bits(c).collect();
            let t = cunningham(&g.induced(&vs)).expect("components are connected");
            (vs, t)
        })
        .collect();
    GraphLabelledForest { n: g.n(), components }
}

/// Complement every factor accessible from leaf `c` at its vertex facing `c`.
/// The accessibility graph becomes `G * c`.
pub fn glt_local_complement(t: &GraphLabelledTree, c: usize) -> Result<GraphLabelledTree> {
    if c >= t.leaves {
        return Err(Error::NotALeaf(c));
    }
    let mut out = t.clone();
    let Some((x, a)) = t.leaf_position(c) else {
        // a lone leaf: nothing to complement
        return Ok(out);
    };
    let mut stack = vec![(x, a)];
    while let Some((x, a)) = stack.pop() {
        let node = &mut out.nodes[x];
        node.graph = node.graph.local_complement(a);
        for w in bits(node.graph.neighbours(a)) {
            if let Endpoint::Node { node: y, vertex: b } = node.rho[w] {
                stack.push((y, b));
            }
        }
    }
    Ok(out)
}

/// Join `a` and `b` by identifying leaf `fa` of `a` with leaf `fb` of `b`.
/// Leaves: those of `a` except `fa`, then those of `b` except `fb`. The
/// accessibility graph is the graft of the two accessibility graphs.
pub fn graft(a: &GraphLabelledTree, fa: usize, b: &GraphLabelledTree, fb: usize) -> Result<GraphLabelledTree> {
    let (xa, va) = a.leaf_position(fa).ok_or(Error::NotALeaf(fa))?;
    let (xb, vb) = b.leaf_position(fb).ok_or(Error::NotALeaf(fb))?;
    let off = a.nodes.len();
    let mut nodes = a.nodes.clone();
    let skip = |l: usize, f: usize| if l > f { l - 1 } else { l };
    for n in &mut nodes {
        for e in &mut n.rho {
            if let Endpoint::Leaf(l) = e {
                *l = skip(*l, fa);
            }
        }
    }
    for n in &b.nodes {
        let mut n = n.clone();
        for e in &mut n.rho {
            match e {
                Endpoint::Leaf(l) => *l = a.leaves - 1 + skip(*l, fb),
                Endpoint::Node { node, .. } => *node += off,
            }
        }
        nodes.push(n);
    }
    nodes[xa].rho[va] = Endpoint::Node { node: xb + off, vertex: vb };
    nodes[xb + off].rho[vb] = Endpoint::Node { node: xa, vertex: va };
    Ok(GraphLabelledTree {
        nodes,
        leaves: a.leaves + b.leaves - 2,
    })
}

/// Graft part `j` (at its root leaf) onto the `j`-th non-root leaf of `t0`.
/// Leaf order follows [`crate::graph::compose_graphs`].
pub fn compose_glt(t0: &GraphLabelledTree, r0: usize, parts: &[(GraphLabelledTree, usize)]) -> Result<GraphLabelledTree> {
    if r0 >= t0.leaves {
        return Err(Error::NotALeaf(r0));
    }
    let slots: Vec<usize> = (0..t0.leaves).filter(|&l| l != r0).collect();
    if slots.len() != parts.len() {
        return Err(Error::Arity {
            expected: slots.len(),
            got: parts.len(),
        });
    }
    // graft one part at a time, tracking where the original leaves went
    let mut cur = t0.clone();
    // position[l] = current index of leaf l of t0
    let mut position: Vec<usize> = (0..t0.leaves).collect();
    // part_leaves[j] = current indices of the non-root leaves of part j
    let mut part_leaves: Vec<Vec<usize>> = vec![Vec::new(); parts.len()];
    for (j, (part, rj)) in parts.iter().enumerate() {
        if part.leaves < 2 {
            return Err(Error::Input("parts need at least two leaves".into()));
        }
        let f = position[slots[j]];
        let before = cur.leaves;
        cur = graft(&cur, f, part, *rj)?;
        let shift = |l: usize| if l > f { l - 1 } else { l };
        for p in position.iter_mut() {
            *p = shift(*p);
        }
        for pl in part_leaves.iter_mut() {
            for l in pl.iter_mut() {
                *l = shift(*l);
            }
        }
        part_leaves[j] = (0..part.leaves - 1).map(|i| before - 1 + i).collect();
    }
    let mut map = vec![0; cur.leaves];
    let mut next = 0;
    let mut j = 0;
    for l in 0..t0.leaves {
        if l == r0 {
            map[position[l]] = next;
            next += 1;
        } else {
            for &pl in &part_leaves[j] {
                map[pl] = next;
                next += 1;
            }
            j += 1;
        }
    }
    Ok(cur.with_leaf_permutation(&map))
}

/// A tree together with the weights of its node vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedGlt {
    pub tree: GraphLabelledTree,
    pub weights: Vec<Vec<usize>>,
}

impl WeightedGlt {
    /// Canonical string of the unlabelled tree decorated by the weights.
    pub fn canonical_form(&self) -> String {
        if self.tree.nodes.is_empty() {
            return self.tree.canonical_form(false);
        }
        (0..self.tree.nodes.len())
            .map(|x| self.tree.encode(x, None, false, Some(&self.weights)))
            .min()
            .expect("at least one node")
    }
}

pub fn compute_weights(t: &GraphLabelledTree) -> WeightedGlt {
    WeightedGlt {
        tree: t.clone(),
        weights: t.weights(),
    }
}

/// The weighted conditions on every factor: weighted degree of every
/// leaf-facing vertex even, and CL2 with the weights mod 2.
pub fn factor_conditions_hold(graph: &SimpleGraph, rho: &[Endpoint], weights: &[i64]) -> bool {
    let odd = crate::forms::odd_mask(weights);
    let en1 = (0..graph.n()).all(|a| {
        !matches!(rho[a], Endpoint::Leaf(_)) || (graph.neighbours(a) & odd).count_ones().is_multiple_of(2)
    });
    en1 && check_cl2(graph, weights)
}

/// Gaussian test on the factors of a weighted tree.
pub fn gaussian_via_glt(t: &WeightedGlt) -> Result<bool> {
    if !t.tree.accessibility()?.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(t.tree.nodes.iter().zip(&t.weights).all(|(node, w)| {
        let w: Vec<i64> = w.iter().map(|&x| x as i64).collect();
        factor_conditions_hold(&node.graph, &node.rho, &w)
    }))
}
