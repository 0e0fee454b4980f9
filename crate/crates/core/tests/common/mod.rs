#![allow(dead_code)]

use filoop::SimpleGraph;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> SimpleGraph {
    let mut g = SimpleGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

pub fn random_connected(rng: &mut ChaCha8Rng, lo: usize, hi: usize) -> SimpleGraph {
    loop {
        let n = rng.gen_range(lo..=hi);
        let p = rng.gen_range(0.2..0.8);
        let g = random_graph(rng, n, p);
        if g.is_connected() {
            return g;
        }
    }
}

pub fn random_perm(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    perm
}

/// Every labelled graph on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = SimpleGraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        SimpleGraph::from_edges(n, &edges).unwrap()
    })
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Chord `c` becomes chord `perm[c]`.
pub fn relabel_word(word: &[u32], perm: &[usize]) -> Vec<u32> {
    word.iter().map(|&c| perm[c as usize] as u32).collect()
}

/// Faces by walking the word: each state is an arc between consecutive
/// slots with a direction. Arriving forward at an `Inf` slot, jump to the
/// mate and go backward; at a `Zero` slot, jump and go forward. Arriving
/// backward, `Inf` sends forward and `Zero` backward.
pub fn word_rule_faces(c: &filoop::FramedChordDiagram) -> usize {
    let len = c.len();
    if len == 0 {
        return 2;
    }
    let mut mate = vec![0; len];
    for [a, b] in c.diagram().occurrences() {
        mate[a] = b;
        mate[b] = a;
    }
    // state 2*i + 0: arc i forward (slot i to i+1); 2*i + 1: backward
    let next = |state: usize| -> usize {
        let (arc, forward) = (state / 2, state.is_multiple_of(2));
        let slot = if forward { (arc + 1) % len } else { arc };
        let m = mate[slot];
        let inf = c.frame(slot).is_inf();
        let go_forward = if forward { !inf } else { inf };
        if go_forward {
            2 * m
        } else {
            2 * ((m + len - 1) % len) + 1
        }
    };
    let mut seen = vec![false; 2 * len];
    let mut faces = 0;
    for s in 0..2 * len {
        if seen[s] {
            continue;
        }
        faces += 1;
        let mut t = s;
        while !seen[t] {
            seen[t] = true;
            t = next(t);
        }
    }
    faces
}

pub fn oracle_genus(c: &filoop::FramedChordDiagram) -> usize {
    let f = word_rule_faces(c);
    let n = c.n();
    assert!((2 + n - f).is_multiple_of(2) && f <= n + 2, "odd Euler characteristic");
    (2 + n - f) / 2
}

/// Every framed diagram on `n` chords, one word per rotation class.
pub fn framed_diagrams(n: usize) -> Vec<filoop::FramedChordDiagram> {
    filoop::chord::all_normalized_words(n)
        .into_iter()
        .flat_map(|w| {
            let d = filoop::ChordDiagram::new(w).unwrap();
            filoop::FramedChordDiagram::all_framings(&d).collect::<Vec<_>>()
        })
        .collect()
}

/// Rooted framed diagrams with `lo..=hi` chords, one per class up to
/// rotation and relabelling (root marked).
pub fn rooted_classes(lo: usize, hi: usize) -> Vec<filoop::RootedDiagram> {
    use std::collections::BTreeMap;
    let mut out = BTreeMap::new();
    for n in lo..=hi {
        for f in framed_diagrams(n) {
            for r in 0..n as u32 {
                // mark the root by renaming it to the last id before canonising
                let slots: Vec<(u32, filoop::Frame)> = f
                    .slots()
                    .into_iter()
                    .map(|(c, fr)| (if c == r { 1000 } else { c }, fr))
                    .collect();
                let key = rooted_key(&slots);
                out.entry(key).or_insert_with(|| filoop::RootedDiagram::new(f.clone(), r).unwrap());
            }
        }
    }
    out.into_values().collect()
}

fn rooted_key(slots: &[(u32, filoop::Frame)]) -> Vec<(u32, bool)> {
    let len = slots.len();
    (0..len)
        .map(|k| {
            let mut ids = std::collections::HashMap::new();
            (0..len)
                .map(|i| {
                    let (c, f) = slots[(k + i) % len];
                    let id = if c == 1000 {
                        u32::MAX
                    } else {
                        let next = ids.len() as u32;
                        *ids.entry(c).or_insert(next)
                    };
                    (id, f.is_inf())
                })
                .collect::<Vec<_>>()
        })
        .min()
        .unwrap_or_default()
}

pub const SMOOTHING_STATEMENTS: [&str; 7] = [
    "1: EN1 at v => (EN1(G) <=> EN1(G'))",
    "2a: RC at v => (EN2(G) => EN2(G'))",
    "2b: EN2 on v+N(v) => (EN2(G') => EN2(G))",
    "3a: EN2 on v+N(v) => (RC(G) => RC(G'))",
    "3b: EN2 on v+N(v), RC at v => (RC(G') rel N(v) => RC(G))",
    "Gauss(G) => Gauss(G') and RC(G') rel N(v)",
    "Gauss(G'), RC(G') rel N(v), EN1+RC at v, EN2 on v+N(v) => Gauss(G)",
];

/// Failures of each smoothing statement over every connected graph class
/// with at most `max_n` vertices and every vertex `v`. With `en1_at_v`, the
/// hypotheses of 2a and 3a also require EN1 at `v`. Conditions are local to
/// the component of `v`, so connected graphs cover all graphs.
pub fn smoothing_failures(max_n: usize, en1_at_v: bool) -> [usize; 7] {
    use filoop::forms::*;
    let mut fails = [0; 7];
    for g in filoop::generate::connected_graph_classes(max_n).into_iter().flatten() {
        for v in 0..g.n() {
            let g2 = g.smoothing(v);
            let nv = g.neighbours(v);
            let shifted = (nv & ((1u64 << v) - 1)) | ((nv >> (v + 1)) << v);
            let at_v = en1_at(&g, v);
            let closed = en2_on_set(&g, nv | 1 << v);
            let rc_v = rc_at(&g, v);
            let rel = rc_relative(&g2, shifted);
            let extra = !en1_at_v || at_v;
            let ok = [
                !at_v || check_en1(&g) == check_en1(&g2),
                !(rc_v && extra) || !check_en2(&g) || check_en2(&g2),
                !closed || !check_en2(&g2) || check_en2(&g),
                !(closed && extra) || !check_rc(&g) || check_rc(&g2),
                !(closed && rc_v) || !rel || check_rc(&g),
                !is_gaussian(&g) || (is_gaussian(&g2) && rel),
                !(is_gaussian(&g2) && rel && at_v && rc_v && closed) || is_gaussian(&g),
            ];
            for (f, ok) in fails.iter_mut().zip(ok) {
                *f += usize::from(!ok);
            }
        }
    }
    fails
}
