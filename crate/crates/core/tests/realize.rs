mod common;

use std::collections::{BTreeSet, HashMap, HashSet};

use filoop::canon::graph_key;
use filoop::chord::all_normalized_words;
use filoop::realize::*;
use filoop::{ChordDiagram, Error, SimpleGraph};

/// Labelled keys of every diagram whose interlace graph is exactly `g`.
fn brute_realizations(g: &SimpleGraph) -> BTreeSet<Vec<u32>> {
    let n = g.n();
    let key = graph_key(g);
    let perms = common::permutations(n);
    let mut out = BTreeSet::new();
    for w in all_normalized_words(n) {
        let d = ChordDiagram::new(w.clone()).unwrap();
        if graph_key(&d.interlace_graph()) != key {
            continue;
        }
        for p in &perms {
            let e = ChordDiagram::new(common::relabel_word(&w, p)).unwrap();
            if &e.interlace_graph() == g {
                out.insert(e.labelled_key(true));
            }
        }
    }
    out
}

#[test]
fn realizations_match_brute_force() {
    let mut checked = 0;
    for n in 1..=5 {
        for g in common::all_graphs(n).filter(|g| g.is_connected()) {
            let brute = brute_realizations(&g);
            match enumerate_realizations(&g) {
                Ok(set) => {
                    let ours: BTreeSet<Vec<u32>> = set.diagrams.iter().map(|d| d.labelled_key(true)).collect();
                    assert_eq!(ours.len(), set.diagrams.len());
                    assert_eq!(ours, brute, "{:?}", g.edges());
                }
                Err(Error::NotCircleGraph) => assert!(brute.is_empty()),
                Err(e) => panic!("{e}"),
            }
            checked += 1;
        }
    }
    assert_eq!(checked, 1 + 1 + 4 + 38 + 728);
}

#[test]
fn realizations_match_brute_force_six() {
    let mut rng = common::rng(23);
    let mut seen = HashSet::new();
    while seen.len() < 25 {
        let g = common::random_connected(&mut rng, 6, 6);
        if !seen.insert(graph_key(&g)) {
            continue;
        }
        let brute = brute_realizations(&g);
        let ours: BTreeSet<Vec<u32>> = match enumerate_realizations(&g) {
            Ok(set) => set.diagrams.iter().map(|d| d.labelled_key(true)).collect(),
            Err(Error::NotCircleGraph) => BTreeSet::new(),
            Err(e) => panic!("{e}"),
        };
        assert_eq!(ours, brute, "{:?}", g.edges());
    }
}

#[test]
fn circle_graph_recognition_up_to_six() {
    let mut circle: HashMap<usize, HashSet<String>> = HashMap::new();
    for n in 0..=6 {
        let set = circle.entry(n).or_default();
        for w in all_normalized_words(n) {
            set.insert(graph_key(&ChordDiagram::new(w).unwrap().interlace_graph()));
        }
    }
    let mut non_circle = 0;
    for n in 0..=6 {
        for g in common::all_graphs(n) {
            let expected = circle[&n].contains(&graph_key(&g));
            assert_eq!(is_circle_graph(&g), expected, "{:?}", g.edges());
            non_circle += usize::from(!expected);
        }
    }
    // W5 and its relabellings are the only 6-vertex obstructions
    assert!(non_circle > 0);
}

#[test]
fn bipartite_obstruction() {
    // hub 0, rim 1 2 3, subdivision vertices 4 5 6
    let bw3 = SimpleGraph::from_edges(7, &[(0, 1), (0, 2), (0, 3), (1, 4), (4, 2), (2, 5), (5, 3), (3, 6), (6, 1)]).unwrap();
    assert!(bw3.is_bipartite());
    assert_eq!(realize_prime(&bw3).unwrap(), None);
    assert!(!is_circle_graph(&bw3));
    assert!(matches!(enumerate_realizations(&bw3), Err(Error::NotCircleGraph)));
}

#[test]
fn prime_circle_graphs_have_one_realization() {
    let mut rng = common::rng(29);
    let mut primes = 0;
    while primes < 60 {
        let g = common::random_connected(&mut rng, 4, 9);
        if !filoop::split::is_prime(&g) {
            continue;
        }
        let all = certify_prime(&g).unwrap();
        assert!(all.len() <= 1, "{:?}", g.edges());
        assert_eq!(all.is_empty(), !is_circle_graph(&g));
        primes += 1;
    }
}

#[test]
fn realizations_of_larger_diagrams() {
    let mut rng = common::rng(31);
    for _ in 0..40 {
        let n = 7 + (rand::Rng::gen_range(&mut rng, 0..5));
        let words = random_words(&mut rng, n);
        let d = ChordDiagram::new(words).unwrap();
        let g = d.interlace_graph();
        if !g.is_connected() {
            continue;
        }
        let set = enumerate_realizations(&g).unwrap();
        assert!(set.diagrams.iter().any(|e| e.labelled_key(true) == d.labelled_key(true)));
        assert!(set.diagrams.iter().all(|e| e.interlace_graph() == g));
    }
}

fn random_words(rng: &mut rand_chacha::ChaCha8Rng, n: usize) -> Vec<u32> {
    let mut w: Vec<u32> = (0..n as u32).chain(0..n as u32).collect();
    for i in (1..w.len()).rev() {
        w.swap(i, rand::Rng::gen_range(rng, 0..=i));
    }
    w
}

#[test]
fn spheriloops_are_planar_and_have_the_graph() {
    let mut rng = common::rng(37);
    let mut count = 0;
    while count < 60 {
        let g = common::random_connected(&mut rng, 1, 8);
        match enumerate_spheriloops(&g) {
            Ok(loops) => {
                assert!(!loops.is_empty());
                for f in &loops {
                    assert_eq!(f.genus(), 0);
                    assert_eq!(&f.interlace_graph(), &g);
                }
                count += 1;
            }
            Err(Error::NotGaussian) => assert!(!filoop::forms::is_gaussian(&g)),
            Err(Error::NotCircleGraph) => panic!("Gaussian graphs are circle graphs"),
            Err(e) => panic!("{e}"),
        }
    }
}

#[test]
fn min_genus_framings_attain_min_genus() {
    let mut rng = common::rng(41);
    let mut checked = 0;
    while checked < 100 {
        let n = rand::Rng::gen_range(&mut rng, 1..8);
        let d = ChordDiagram::new(random_words(&mut rng, n)).unwrap();
        if !filoop::forms::check_en1(&d.interlace_graph()) {
            assert!(matches!(min_genus_framings(&d), Err(Error::NotBicolourable)));
            continue;
        }
        let best = filoop::FramedChordDiagram::all_framings(&d).map(|f| f.genus()).min().unwrap();
        let framings = min_genus_framings(&d).unwrap();
        assert!(!framings.is_empty());
        for (f, g) in framings {
            assert_eq!(g, best);
            assert_eq!(f.genus(), best);
        }
        checked += 1;
    }
}
