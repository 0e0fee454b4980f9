//! Chord diagrams with a prescribed interlace graph: degenerate factors by
//! formula, prime factors by search, arbitrary connected graphs by composing
//! along the reduced tree.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;

use crate::chord::{CanonFlags, ChordDiagram, FramedChordDiagram};
use crate::error::{Error, Result};
use crate::forms::{genus0_framings, is_gaussian, min_genus};
use crate::glt::{cunningham, glf_decompose, Endpoint, GraphLabelledTree};
use crate::graph::SimpleGraph;
use crate::ribbon::integrate;
use crate::split::{classify, is_prime, FactorKind};

/// `K_n`: `1 2 … n 1 2 … n`; star with centre `c`: `c l1 … lk c lk … l1`.
pub fn realize_degenerate(g: &SimpleGraph) -> Result<ChordDiagram> {
    let n = g.n() as u32;
    let word: Vec<u32> = match classify(g) {
        Some(FactorKind::Clique) => (0..n).chain(0..n).collect(),
        Some(FactorKind::Star { centre }) => {
            let c = centre as u32;
            let leaves: Vec<u32> = (0..n).filter(|&v| v != c).collect();
            let mut w = vec![c];
            w.extend(&leaves);
            w.push(c);
            w.extend(leaves.iter().rev());
            w
        }
        _ => return Err(Error::NotDegenerate),
    };
    let d = ChordDiagram::new(word)?;
    debug_assert_eq!(&d.interlace_graph(), g);
    Ok(d)
}

/// Breadth-first vertex order from vertex 0 (then any unreached vertices).
fn insertion_order(g: &SimpleGraph) -> Vec<usize> {
    let mut order = Vec::with_capacity(g.n());
    let mut seen = 0u64;
    for s in 0..g.n() {
        if seen >> s & 1 == 1 {
            continue;
        }
        seen |= 1 << s;
        let mut i = order.len();
        order.push(s);
        while i < order.len() {
            let v = order[i];
            for w in crate::gf2::bits(g.neighbours(v) & !seen) {
                seen |= 1 << w;
                order.push(w);
            }
            i += 1;
        }
    }
    order
}

/// Every labelled diagram with interlace graph `g`, one per class up to
/// rotation and reversal, found by inserting chords one at a time. `limit`
/// stops the search early.
pub fn search_realizations(g: &SimpleGraph, limit: Option<usize>) -> Vec<ChordDiagram> {
    let n = g.n();
    if n == 0 {
        return vec![ChordDiagram::empty()];
    }
    let order = insertion_order(g);
    let mut found: BTreeMap<Vec<u32>, ChordDiagram> = BTreeMap::new();
    let mut word = vec![order[0] as u32, order[0] as u32];
    search(g, &order, 1, &mut word, &mut found, limit);
    found.into_values().collect()
}

fn search(
    g: &SimpleGraph,
    order: &[usize],
    k: usize,
    word: &mut Vec<u32>,
    found: &mut BTreeMap<Vec<u32>, ChordDiagram>,
    limit: Option<usize>,
) {
    if limit.is_some_and(|l| found.len() >= l) {
        return;
    }
    if k == order.len() {
        let d = ChordDiagram::new(word.clone()).expect("complete word");
        found.entry(d.labelled_key(true)).or_insert(d);
        return;
    }
    let v = order[k];
    let target = g.neighbours(v);
    let placed: u64 = order[..k].iter().fold(0, |m, &u| m | 1 << u);
    let len = word.len();
    for i in 0..len {
        // chords with an odd count strictly between the two new occurrences
        let mut inside = 0u64;
        for j in i..len {
            if j > i {
                inside ^= 1 << word[j - 1];
            }
            if inside & placed != target & placed {
                continue;
            }
            let mut next = Vec::with_capacity(len + 2);
            next.extend_from_slice(&word[..i]);
            next.push(v as u32);
            next.extend_from_slice(&word[i..j]);
            next.push(v as u32);
            next.extend_from_slice(&word[j..]);
            std::mem::swap(word, &mut next);
            search(g, order, k + 1, word, found, limit);
            std::mem::swap(word, &mut next);
        }
    }
}

/// A realization of a connected prime graph, or `None` when it is not a
/// circle graph.
pub fn realize_prime(g: &SimpleGraph) -> Result<Option<ChordDiagram>> {
    if !is_prime(g) {
        return Err(Error::NotPrime);
    }
    Ok(search_realizations(g, Some(1)).into_iter().next())
}

/// All realizations of a prime graph up to rotation and reversal; a circle
/// prime graph has exactly one.
pub fn certify_prime(g: &SimpleGraph) -> Result<Vec<ChordDiagram>> {
    if !is_prime(g) {
        return Err(Error::NotPrime);
    }
    Ok(search_realizations(g, None))
}

type Piece = (Vec<u32>, Vec<u32>);

/// Sub-words for the subtree behind `(x, from)`, as pairs `(P, Q)` with the
/// factor read `from P from Q`, closed under the four substitution choices.
fn pieces(t: &GraphLabelledTree, reals: &[Vec<ChordDiagram>], x: usize, from: usize) -> Vec<Piece> {
    let mut out: HashSet<Piece> = HashSet::new();
    for r in &reals[x] {
        let occ = r.occurrences()[from];
        let rot = r.rotate(occ[0]);
        for word in expand(t, reals, x, rot.word(), from) {
            let pos: Vec<usize> = word.iter().enumerate().filter(|(_, &c)| c == u32::MAX).map(|(i, _)| i).collect();
            let p = word[pos[0] + 1..pos[1]].to_vec();
            let q = word[pos[1] + 1..].to_vec();
            for piece in variants(&p, &q) {
                out.insert(piece);
            }
        }
    }
    let mut v: Vec<Piece> = out.into_iter().collect();
    v.sort();
    v
}

fn variants(p: &[u32], q: &[u32]) -> [Piece; 4] {
    let rp: Vec<u32> = p.iter().rev().copied().collect();
    let rq: Vec<u32> = q.iter().rev().copied().collect();
    [
        (p.to_vec(), q.to_vec()),
        (q.to_vec(), p.to_vec()),
        (rq.clone(), rp.clone()),
        (rp, rq),
    ]
}

/// Substitute every vertex of node `x` in `word`: leaves by their label,
/// children by their pieces, `skip` by the marker `u32::MAX`.
fn expand(t: &GraphLabelledTree, reals: &[Vec<ChordDiagram>], x: usize, word: &[u32], skip: usize) -> Vec<Vec<u32>> {
    let node = &t.nodes[x];
    let n = node.graph.n();
    let child: Vec<Option<Vec<Piece>>> = (0..n)
        .map(|a| match node.rho[a] {
            Endpoint::Node { node: y, vertex: b } if a != skip => Some(pieces(t, reals, y, b)),
            _ => None,
        })
        .collect();
    let mut partial: Vec<(Vec<u32>, Vec<usize>)> = vec![(Vec::new(), vec![usize::MAX; n])];
    let mut seen_first = vec![false; n];
    for &c in word {
        let a = c as usize;
        let first = !seen_first[a];
        seen_first[a] = true;
        let mut next = Vec::new();
        for (w, choice) in partial {
            if a == skip {
                let mut w = w;
                w.push(u32::MAX);
                next.push((w, choice));
                continue;
            }
            match (&node.rho[a], &child[a]) {
                (Endpoint::Leaf(l), _) => {
                    let mut w = w;
                    w.push(*l as u32);
                    next.push((w, choice));
                }
                (_, Some(ps)) => {
                    if first {
                        for (k, (p, _)) in ps.iter().enumerate() {
                            let mut w2 = w.clone();
                            w2.extend(p);
                            let mut c2 = choice.clone();
                            c2[a] = k;
                            next.push((w2, c2));
                        }
                    } else {
                        let mut w = w;
                        w.extend(&ps[choice[a]].1);
                        next.push((w, choice));
                    }
                }
                _ => unreachable!("parent vertex handled by skip"),
            }
        }
        partial = next;
    }
    partial.into_iter().map(|(w, _)| w).collect()
}

/// All labelled chord diagrams (chord `v` = vertex `v`) with interlace graph
/// `g`, one per class up to rotation and reversal.
#[derive(Clone, Debug)]
pub struct RealizationSet {
    pub tree: GraphLabelledTree,
    pub factor_diagrams: Vec<Vec<ChordDiagram>>,
    pub diagrams: Vec<ChordDiagram>,
}

pub fn enumerate_realizations(g: &SimpleGraph) -> Result<RealizationSet> {
    let tree = cunningham(g)?;
    if tree.nodes.is_empty() {
        let d = if g.n() == 0 { ChordDiagram::empty() } else { ChordDiagram::new(vec![0, 0])? };
        return Ok(RealizationSet {
            tree,
            factor_diagrams: Vec::new(),
            diagrams: vec![d],
        });
    }
    let reals: Vec<Vec<ChordDiagram>> = tree.nodes.par_iter().map(|n| search_realizations(&n.graph, None)).collect();
    if reals.iter().any(|r| r.is_empty()) {
        return Err(Error::NotCircleGraph);
    }
    let mut found: BTreeMap<Vec<u32>, ChordDiagram> = BTreeMap::new();
    for r in &reals[0] {
        for w in expand(&tree, &reals, 0, r.word(), usize::MAX) {
            let d = ChordDiagram::new(w)?;
            debug_assert_eq!(&d.interlace_graph(), g);
            found.entry(d.labelled_key(true)).or_insert(d);
        }
    }
    Ok(RealizationSet {
        tree,
        factor_diagrams: reals,
        diagrams: found.into_values().collect(),
    })
}

/// Every component's prime factors are realizable.
pub fn is_circle_graph(g: &SimpleGraph) -> bool {
    glf_decompose(g).components.iter().all(|(_, t)| {
        t.nodes
            .iter()
            .all(|n| !matches!(classify(&n.graph), Some(FactorKind::Prime)) || !search_realizations(&n.graph, Some(1)).is_empty())
    })
}

/// Genus-0 framed diagrams with interlace graph `g`, one per labelled class
/// up to rotation and reversal.
pub fn enumerate_spheriloops(g: &SimpleGraph) -> Result<Vec<FramedChordDiagram>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !is_gaussian(g) {
        return Err(Error::NotGaussian);
    }
    let set = enumerate_realizations(g)?;
    let mut found: BTreeMap<Vec<(u32, crate::Frame)>, FramedChordDiagram> = BTreeMap::new();
    for d in &set.diagrams {
        for f in genus0_framings(d)? {
            found.entry(f.labelled_key(true)).or_insert(f);
        }
    }
    Ok(found.into_values().collect())
}

/// Classes of spheriloops up to rotation, relabelling, reversal and inversion.
pub fn spheriloop_classes(loops: &[FramedChordDiagram]) -> Vec<String> {
    let set: std::collections::BTreeSet<String> = loops.iter().map(|f| f.canonical_form(CanonFlags::ALL)).collect();
    set.into_iter().collect()
}

/// All framings of `c` of minimal genus, with that genus.
pub fn min_genus_framings(c: &ChordDiagram) -> Result<Vec<(FramedChordDiagram, usize)>> {
    let g = c.interlace_graph();
    let m = min_genus(&g)?;
    let mut out = Vec::new();
    for chi in &m.colourings {
        let (p, q) = integrate(c, chi)?;
        for f in [p, q] {
            debug_assert_eq!(f.genus(), m.genus);
            if !out.iter().any(|(o, _)| *o == f) {
                out.push((f, m.genus));
            }
        }
    }
    Ok(out)
}
