//! Grammatical generation of connected Gaussian graphs from CL2-weighted
//! prime and degenerate atoms, with brute-force counterparts.

use std::collections::{BTreeMap, HashMap, HashSet};

use rayon::prelude::*;

use crate::canon::{canonical_form, graph_key};
use crate::chord::{CanonFlags, FramedChordDiagram};
use crate::error::{Error, Result};
use crate::forms::{check_cl2, is_gaussian, solve_cl2};
use crate::gf2::{bits, low_mask};
use crate::glt::{graft, GraphLabelledTree, WeightedGlt};
use crate::graph::SimpleGraph;
use crate::realize::{enumerate_spheriloops, is_circle_graph};
use crate::split::{classify, FactorKind};

/// A prime or degenerate graph with one CL2 weighting mod 2.
#[derive(Clone, Debug)]
pub struct Atom {
    pub graph: SimpleGraph,
    pub weighting: Vec<usize>,
    pub glt: WeightedGlt,
}

/// A weighted tree built by bonds.
#[derive(Clone, Debug)]
pub struct Molecule {
    pub glt: WeightedGlt,
    pub gaussian: bool,
}

impl Molecule {
    pub fn new(glt: WeightedGlt) -> Self {
        let gaussian = molecule_rule(&glt);
        Molecule { glt, gaussian }
    }
}

/// Connected graphs up to isomorphism with at most `max_n` vertices, indexed
/// by vertex count, each in canonical labelling. Every connected graph has a
/// vertex whose removal keeps it connected, so extending the classes on
/// `n` vertices by one vertex reaches all classes on `n + 1`.
pub fn connected_graph_classes(max_n: usize) -> Vec<Vec<SimpleGraph>> {
    let mut out: Vec<Vec<SimpleGraph>> = vec![Vec::new(); max_n + 1];
    if max_n == 0 {
        return out;
    }
    out[1].push(SimpleGraph::new(1));
    for n in 1..max_n {
        let next: Vec<(String, SimpleGraph)> = out[n]
            .par_iter()
            .flat_map_iter(|g| {
                (1u64..1 << n).map(move |mask| {
                    let mut h = g.clone();
                    h.add_vertex(mask);
                    let c = canonical_form(&h);
                    (graph_key(&c), c)
                })
            })
            .collect();
        let mut classes: BTreeMap<String, SimpleGraph> = BTreeMap::new();
        for (k, g) in next {
            classes.entry(k).or_insert(g);
        }
        out[n + 1] = classes.into_values().collect();
    }
    out
}

/// Connected Gaussian graphs with at most `n` vertices, by direct test.
pub fn brute_force_gaussian(n: usize) -> Vec<SimpleGraph> {
    connected_graph_classes(n).into_iter().flatten().filter(is_gaussian).collect()
}

/// Weight of each vertex's neighbourhood, mod 2.
fn weighted_degrees(g: &SimpleGraph, w: &[usize]) -> Vec<usize> {
    let odd = w.iter().enumerate().filter(|(_, &x)| x % 2 == 1).fold(0u64, |m, (i, _)| m | 1 << i);
    (0..g.n()).map(|v| (g.neighbours(v) & odd).count_ones() as usize % 2).collect()
}

/// Atoms for prime and degenerate graphs with at most `max_vertices`
/// vertices, one per weighted isomorphism class. With `circle_only`, prime
/// graphs without a chord diagram are skipped.
pub fn atoms(max_vertices: usize, circle_only: bool) -> Vec<Atom> {
    let classes = connected_graph_classes(max_vertices);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for g in classes.into_iter().flatten() {
        if classify(&g).is_none() || (circle_only && !is_circle_graph(&g)) {
            continue;
        }
        let Some(space) = solve_cl2(&g) else { continue };
        for mask in space.iter() {
            let weighting: Vec<usize> = (0..g.n()).map(|v| (mask >> v & 1) as usize).collect();
            let tree = GraphLabelledTree::single(g.clone());
            let weights = if tree.nodes.is_empty() { Vec::new() } else { vec![weighting.clone()] };
            let glt = WeightedGlt { tree, weights };
            if seen.insert(atom_key(&g, &weighting)) {
                out.push(Atom { graph: g.clone(), weighting, glt });
            }
        }
    }
    out
}

fn atom_key(g: &SimpleGraph, w: &[usize]) -> String {
    let colours: Vec<u32> = w.iter().map(|&x| x as u32).collect();
    let (c, rows) = crate::canon::certificate(g, &colours);
    format!("{c:?}{rows:?}")
}

/// Node, vertex, weight and weighted degree behind leaf `f`.
fn control(t: &WeightedGlt, f: usize) -> Option<(usize, usize, usize, usize)> {
    let (x, u) = t.tree.leaf_position(f)?;
    let g = &t.tree.nodes[x].graph;
    let d = weighted_degrees(g, &t.weights[x])[u];
    Some((x, u, t.weights[x][u] % 2, d))
}

fn kind_at(t: &WeightedGlt, x: usize) -> Option<FactorKind> {
    classify(&t.tree.nodes[x].graph)
}

/// Graft `a` and `b` along leaves `fa`, `fb` when the weight of each control
/// vertex equals the weighted degree of the other, keeping the tree reduced.
pub fn bond(a: &WeightedGlt, fa: usize, b: &WeightedGlt, fb: usize) -> Option<Molecule> {
    let (xa, ua, wa, da) = control(a, fa)?;
    let (xb, ub, wb, db) = control(b, fb)?;
    if wa != db || wb != da {
        return None;
    }
    if a.tree.nodes[xa].graph.n() < 3 || b.tree.nodes[xb].graph.n() < 3 {
        return None;
    }
    match (kind_at(a, xa)?, kind_at(b, xb)?) {
        (FactorKind::Clique, FactorKind::Clique) => return None,
        (FactorKind::Star { centre: ca }, FactorKind::Star { centre: cb }) if (ca == ua) != (cb == ub) => return None,
        _ => {}
    }
    let tree = graft(&a.tree, fa, &b.tree, fb).ok()?;
    let mut weights = a.weights.clone();
    weights.extend(b.weights.iter().cloned());
    Some(Molecule::new(WeightedGlt { tree, weights }))
}

/// Every leaf sits at a vertex of odd weight and even weighted degree.
fn molecule_rule(t: &WeightedGlt) -> bool {
    if t.tree.nodes.is_empty() {
        return t.tree.leaves == 1;
    }
    (0..t.tree.leaves).all(|f| matches!(control(t, f), Some((_, _, 1, 0))))
}

fn leaf_count(t: &WeightedGlt) -> usize {
    t.tree.leaves
}

/// Result of running the grammar.
#[derive(Clone, Debug, Default)]
pub struct Generation {
    /// Gaussian accessibility graphs, canonical, sorted by size then key.
    pub graphs: Vec<SimpleGraph>,
    /// Distinct weighted trees built, atoms included.
    pub derivations: usize,
    /// Gaussian molecules whose graph was already produced by another one.
    pub collisions: usize,
}

/// Closure of the atoms under bonds, by leaf count up to `n`, keeping the
/// molecules whose rule marks them Gaussian.
pub fn generate_gaussian(n: usize) -> Generation {
    generate_from_atoms(n, &atoms(n, false))
}

/// As [`generate_gaussian`] with atoms restricted to circle graphs.
pub fn generate_gaussian_chordiagraphs(n: usize) -> Generation {
    generate_from_atoms(n, &atoms(n, true))
}

fn generate_from_atoms(n: usize, atoms: &[Atom]) -> Generation {
    let mut levels: Vec<Vec<WeightedGlt>> = vec![Vec::new(); n + 1];
    let mut keys: HashSet<String> = HashSet::new();
    let mut generation = Generation::default();
    let mut graph_keys: HashMap<String, SimpleGraph> = HashMap::new();
    let mut emit = |t: &WeightedGlt, generation: &mut Generation| {
        if !molecule_rule(t) {
            return;
        }
        let g = t.tree.accessibility().expect("valid tree");
        let key = graph_key(&g);
        if let std::collections::hash_map::Entry::Vacant(e) = graph_keys.entry(key) {
            e.insert(canonical_form(&g));
        } else {
            generation.collisions += 1;
        }
    };
    for l in 1..=n {
        let mut made: Vec<(String, WeightedGlt)> = atoms
            .iter()
            .filter(|a| a.graph.n() == l)
            .map(|a| (a.glt.canonical_form(), a.glt.clone()))
            .collect();
        // a + b - 2 = l with both sides at least 3 leaves
        let pairs: Vec<(usize, usize)> = (3..l).map(|a| (a, l + 2 - a)).filter(|&(a, b)| a <= b && b >= 3).collect();
        for (la, lb) in pairs {
            let bonded: Vec<(String, WeightedGlt)> = levels[la]
                .par_iter()
                .enumerate()
                .flat_map_iter(|(i, a)| {
                    let start = if la == lb { i } else { 0 };
                    levels[lb][start..]
                        .iter()
                        .flat_map(move |b| {
                            (0..leaf_count(a)).flat_map(move |fa| (0..leaf_count(b)).filter_map(move |fb| bond(a, fa, b, fb)))
                        })
                        .map(|m| (m.glt.canonical_form(), m.glt))
                })
                .collect();
            made.extend(bonded);
        }
        made.sort_by(|x, y| x.0.cmp(&y.0));
        for (key, t) in made {
            if keys.insert(key) {
                generation.derivations += 1;
                emit(&t, &mut generation);
                levels[l].push(t);
            }
        }
    }
    let mut graphs: Vec<(usize, String, SimpleGraph)> = graph_keys.into_iter().map(|(k, g)| (g.n(), k, g)).collect();
    graphs.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    generation.graphs = graphs.into_iter().map(|(_, _, g)| g).collect();
    generation
}

/// Attach `K3` (odd neighbour weight) or `S_{1,2}` by its centre (even) at
/// every vertex of even weight. Vertices of odd weight keep their leaf, so
/// the result is Gaussian exactly when those have even neighbour weight.
pub fn construct_gaussian_from_cl2(g0: &SimpleGraph, w: &[usize]) -> Result<(SimpleGraph, GraphLabelledTree)> {
    let n = g0.n();
    if w.len() != n {
        return Err(Error::Arity { expected: n, got: w.len() });
    }
    let wi: Vec<i64> = w.iter().map(|&x| x as i64).collect();
    if !check_cl2(g0, &wi) {
        return Err(Error::NotCl2);
    }
    let deg = weighted_degrees(g0, w);
    let mut tree = GraphLabelledTree::single(g0.clone());
    if tree.nodes.is_empty() {
        return Ok((g0.clone(), tree));
    }
    // graft from the highest vertex down so lower leaf indices stay put
    for v in (0..n).rev() {
        if w[v] % 2 == 1 {
            continue;
        }
        let part = if deg[v] == 1 { SimpleGraph::complete(3) } else { SimpleGraph::star(3) };
        tree = graft(&tree, v, &GraphLabelledTree::single(part), 0)?;
    }
    let g = tree.accessibility()?;
    if !is_gaussian(&g) {
        return Err(Error::NotGaussian);
    }
    Ok((g, tree))
}

/// Spheriloop classes per crossing number `1..=n_max`, from the grammar
/// restricted to chordiagraphs.
pub fn tabulate_spheriloops(n_max: usize) -> Vec<(usize, usize)> {
    let generation = generate_gaussian_chordiagraphs(n_max);
    let mut counts = vec![0usize; n_max + 1];
    let per_graph: Vec<(usize, usize)> = generation
        .graphs
        .par_iter()
        .map(|g| {
            let loops = enumerate_spheriloops(g).expect("generated graphs are Gaussian chordiagraphs");
            (g.n(), spheriloop_class_count(&loops))
        })
        .collect();
    for (n, k) in per_graph {
        counts[n] += k;
    }
    (1..=n_max).map(|n| (n, counts[n])).collect()
}

fn spheriloop_class_count(loops: &[FramedChordDiagram]) -> usize {
    loops.iter().map(|f| f.canonical_form(CanonFlags::ALL)).collect::<HashSet<_>>().len()
}

/// Weight 1 on the vertices of `mask`, 0 elsewhere.
pub fn weighting_from_mask(n: usize, mask: u64) -> Vec<usize> {
    bits(mask & low_mask(n)).fold(vec![0; n], |mut w, v| {
        w[v] = 1;
        w
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        let c = connected_graph_classes(6);
        let counts: Vec<usize> = c.iter().map(Vec::len).collect();
        assert_eq!(counts, vec![0, 1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn small_generation() {
        let g = generate_gaussian(3);
        let keys: Vec<String> = g.graphs.iter().map(graph_key).collect();
        assert!(keys.contains(&graph_key(&SimpleGraph::new(1))));
        assert!(keys.contains(&graph_key(&SimpleGraph::complete(3))));
        assert!(!keys.contains(&graph_key(&SimpleGraph::path(3))));
    }

    #[test]
    fn k1_bond_degenerates() {
        let k1 = atoms(1, false);
        assert_eq!(k1.len(), 2);
        assert!(bond(&k1[0].glt, 0, &k1[1].glt, 0).is_none());
    }

    #[test]
    fn cl2_small_examples() {
        let house = SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4)]).unwrap();
        assert!(solve_cl2(&house).is_none());
        let gem = SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)]).unwrap();
        assert!(solve_cl2(&gem).is_none());
        let domino = SimpleGraph::from_edges(6, &[(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)]).unwrap();
        let s = solve_cl2(&domino).unwrap();
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0]);
    }
}
