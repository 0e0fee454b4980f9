mod common;

use std::collections::BTreeSet;

use filoop::canon::graph_key;
use filoop::chord::{all_normalized_words, CanonFlags};
use filoop::forms::{is_gaussian, solve_cl2};
use filoop::generate::*;
use filoop::realize::is_circle_graph;
use filoop::{ChordDiagram, Error, FramedChordDiagram, SimpleGraph};

fn keys(gs: &[SimpleGraph]) -> BTreeSet<String> {
    gs.iter().map(graph_key).collect()
}

#[test]
fn grammar_matches_brute_force() {
    for n in 1..=7 {
        let generation = generate_gaussian(n);
        assert_eq!(generation.collisions, 0, "n={n}");
        assert!(generation.graphs.iter().all(is_gaussian));
        assert_eq!(keys(&generation.graphs), keys(&brute_force_gaussian(n)), "n={n}");
    }
}

/// Interlace graphs of diagrams with a genus-0 framing, up to isomorphism.
fn planar_interlace_classes(n: usize) -> BTreeSet<String> {
    all_normalized_words(n)
        .into_iter()
        .map(|w| ChordDiagram::new(w).unwrap())
        .filter(|d| d.interlace_graph().is_connected())
        .filter(|d| FramedChordDiagram::all_framings(d).any(|f| f.genus() == 0))
        .map(|d| graph_key(&d.interlace_graph()))
        .collect()
}

#[test]
fn gaussian_counts_are_frozen() {
    let counts: Vec<usize> = (1..=7)
        .map(|n| brute_force_gaussian(n).iter().filter(|g| g.n() == n).count())
        .collect();
    assert_eq!(counts, vec![1, 0, 1, 1, 2, 3, 7]);
    for n in 1..=6 {
        let exact: Vec<SimpleGraph> = brute_force_gaussian(n).into_iter().filter(|g| g.n() == n).collect();
        assert_eq!(keys(&exact), planar_interlace_classes(n), "n={n}");
    }
}

#[test]
fn chordiagraph_grammar_matches_brute_force() {
    let generation = generate_gaussian_chordiagraphs(7);
    let expected: Vec<SimpleGraph> = brute_force_gaussian(7).into_iter().filter(is_circle_graph).collect();
    assert_eq!(keys(&generation.graphs), keys(&expected));
}

#[test]
fn bonds_are_symmetric_and_sound() {
    let atoms = atoms(5, false);
    let mut bonded = 0;
    for a in &atoms {
        for b in &atoms {
            for fa in 0..a.graph.n() {
                for fb in 0..b.graph.n() {
                    let ab = bond(&a.glt, fa, &b.glt, fb);
                    let ba = bond(&b.glt, fb, &a.glt, fa);
                    assert_eq!(ab.is_some(), ba.is_some());
                    if let Some(m) = ab {
                        bonded += 1;
                        let t = &m.glt.tree;
                        assert!(t.is_reduced());
                        let g = t.accessibility().unwrap();
                        if m.gaussian {
                            assert!(is_gaussian(&g));
                            assert_eq!(filoop::glt::compute_weights(t).weights.iter().flatten().map(|w| w % 2).collect::<Vec<_>>(),
                                m.glt.weights.iter().flatten().copied().collect::<Vec<_>>());
                        }
                    }
                }
            }
        }
    }
    assert!(bonded > 0);
}

#[test]
fn construction_recovers_gaussian_graphs() {
    for g in brute_force_gaussian(6) {
        let ones = vec![1; g.n()];
        let (h, _) = construct_gaussian_from_cl2(&g, &ones).unwrap();
        assert_eq!(h, g);
    }
}

#[test]
fn construction_on_c4_and_trees() {
    let c4 = SimpleGraph::cycle(4);
    let (h, t) = construct_gaussian_from_cl2(&c4, &[0; 4]).unwrap();
    assert!(is_gaussian(&h));
    assert_eq!(t.accessibility().unwrap(), h);
    assert_eq!(h.n(), 8);
    let p = SimpleGraph::path(4);
    assert!(matches!(construct_gaussian_from_cl2(&p, &[1, 1, 1, 1]), Err(Error::NotCl2)));
    let (h, _) = construct_gaussian_from_cl2(&p, &[1, 0, 0, 1]).unwrap();
    assert!(is_gaussian(&h));
    // odd weight with odd neighbour weight keeps an odd-degree leaf
    let k2 = SimpleGraph::complete(2);
    assert!(matches!(construct_gaussian_from_cl2(&k2, &[1, 1]), Err(Error::NotGaussian)));
}

#[test]
fn construction_on_bipartite_obstruction() {
    let bw3 = SimpleGraph::from_edges(7, &[(0, 1), (0, 2), (0, 3), (1, 4), (4, 2), (2, 5), (5, 3), (3, 6), (6, 1)]).unwrap();
    // zero, and one on the hub with the subdivision vertices
    let space = solve_cl2(&bw3).unwrap();
    let mut sols: Vec<u64> = space.iter().collect();
    sols.sort();
    assert_eq!(sols, vec![0, 0b111_0001]);
    let (h, _) = construct_gaussian_from_cl2(&bw3, &[0; 7]).unwrap();
    assert!(is_gaussian(&h));
    assert!(!is_circle_graph(&h));
    assert_eq!(h.n(), 14);
    let (h, _) = construct_gaussian_from_cl2(&bw3, &weighting_from_mask(7, 0b111_0001)).unwrap();
    assert!(is_gaussian(&h));
    assert!(!is_circle_graph(&h));
    assert_eq!(h.n(), 10);
}

/// Classes of genus-0 framed diagrams with connected interlace graph.
fn brute_spheriloops(n: usize) -> usize {
    let mut classes = BTreeSet::new();
    for w in all_normalized_words(n) {
        let d = ChordDiagram::new(w).unwrap();
        if !d.interlace_graph().is_connected() {
            continue;
        }
        for f in FramedChordDiagram::all_framings(&d) {
            if f.genus() == 0 {
                classes.insert(f.canonical_form(CanonFlags::ALL));
            }
        }
    }
    classes.len()
}

#[test]
fn spheriloop_table_matches_brute_force() {
    let table = tabulate_spheriloops(6);
    let brute: Vec<(usize, usize)> = (1..=6).map(|n| (n, brute_spheriloops(n))).collect();
    assert_eq!(table, brute);
    assert_eq!(table[0], (1, 1));
    assert_eq!(table[1], (2, 0));
}
