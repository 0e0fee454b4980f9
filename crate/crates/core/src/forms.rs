//! Bilinear forms of a graph over GF(2): Rosenstiehl forms, evenness and
//! cocycle conditions, minimal genus, CL2 weightings.

use rayon::prelude::*;

use crate::chord::{ChordDiagram, FramedChordDiagram};
use crate::error::{Error, Result};
use crate::gf2::{bits, solve, AffineSpace, BitMatrix, Equation};
use crate::graph::SimpleGraph;
use crate::ribbon::{integrate, Bicolouring};

/// `R = E + E²`; `R(x,x)` is the degree mod 2.
pub fn rosenstiehl(g: &SimpleGraph) -> BitMatrix {
    let e = g.adjacency();
    e.add(&e.mul(&e))
}

/// `R(x,y) = E(x,y) + W(N(x) ∩ N(y))` mod 2, i.e. `E + EWE`.
pub fn weighted_rosenstiehl(g: &SimpleGraph, w: &[i64]) -> BitMatrix {
    let odd = odd_mask(w);
    let n = g.n();
    let mut m = BitMatrix::square(n);
    for x in 0..n {
        for y in 0..n {
            let shared = (g.neighbours(x) & g.neighbours(y) & odd).count_ones() % 2 == 1;
            m.set(x, y, g.has_edge(x, y) ^ shared);
        }
    }
    m
}

pub fn odd_mask(w: &[i64]) -> u64 {
    w.iter().enumerate().filter(|(_, &x)| x.rem_euclid(2) == 1).fold(0, |m, (i, _)| m | 1 << i)
}

/// Restriction of a form to the edges of `g`.
pub fn on_edges(g: &SimpleGraph, m: &BitMatrix) -> BitMatrix {
    let rows = (0..g.n()).map(|x| m.row(x) & g.neighbours(x)).collect();
    BitMatrix::from_rows(g.n(), rows)
}

/// `-L + L²` over the integers, with `L` the Laplacian.
pub fn laplacian_form(g: &SimpleGraph) -> Vec<Vec<i64>> {
    let n = g.n();
    let lap: Vec<Vec<i64>> = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| {
                    if x == y {
                        g.degree(x) as i64
                    } else {
                        -(g.has_edge(x, y) as i64)
                    }
                })
                .collect()
        })
        .collect();
    (0..n)
        .map(|x| {
            (0..n)
                .map(|y| -lap[x][y] + (0..n).map(|k| lap[x][k] * lap[k][y]).sum::<i64>())
                .collect()
        })
        .collect()
}

/// `C(x,y) = [χ(x) ≠ χ(y)]`.
pub fn colour_form(chi: &Bicolouring) -> BitMatrix {
    let all = crate::gf2::low_mask(chi.n);
    let rows = (0..chi.n)
        .map(|x| if chi.is_black(x) { all & !chi.black } else { chi.black })
        .collect();
    BitMatrix::from_rows(chi.n, rows)
}

/// The colour coboundary `dχ`: the colour form on edges.
pub fn colour_coboundary(g: &SimpleGraph, chi: &Bicolouring) -> BitMatrix {
    on_edges(g, &colour_form(chi))
}

pub fn check_en1(g: &SimpleGraph) -> bool {
    (0..g.n()).all(|v| g.degree(v).is_multiple_of(2))
}

pub fn check_en2(g: &SimpleGraph) -> bool {
    (0..g.n()).all(|v| en2_at(g, v))
}

pub fn check_rc(g: &SimpleGraph) -> bool {
    potential(g, &rosenstiehl(g)).is_some()
}

pub fn is_gaussian(g: &SimpleGraph) -> bool {
    check_en1(g) && check_en2(g) && check_rc(g)
}

/// A spanning forest: `(parent, depth)` per vertex, roots are their own parent.
fn spanning_forest(g: &SimpleGraph) -> (Vec<usize>, Vec<usize>) {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0; n];
    for root in 0..n {
        if parent[root] != usize::MAX {
            continue;
        }
        parent[root] = root;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for y in bits(g.neighbours(x)) {
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    depth[y] = depth[x] + 1;
                    queue.push_back(y);
                }
            }
        }
    }
    (parent, depth)
}

/// A potential `p` with `p(x) + p(y) = m(x,y)` on every edge, or `None` when
/// `m` restricted to edges is not a coboundary. Bit `v` of the result is `p(v)`.
pub fn potential(g: &SimpleGraph, m: &BitMatrix) -> Option<u64> {
    let n = g.n();
    let (parent, depth) = spanning_forest(g);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| depth[v]);
    let mut p = 0u64;
    for &v in &order {
        if parent[v] != v && (p >> parent[v] & 1 == 1) ^ m.get(parent[v], v) {
            p |= 1 << v;
        }
    }
    for (x, y) in g.edges() {
        if (p >> x & 1 == 1) ^ (p >> y & 1 == 1) != m.get(x, y) {
            return None;
        }
    }
    Some(p)
}

pub fn is_coboundary(g: &SimpleGraph, m: &BitMatrix) -> bool {
    potential(g, m).is_some()
}

/// EN1 at `v`: `R(v,v) = 0`.
pub fn en1_at(g: &SimpleGraph, v: usize) -> bool {
    g.degree(v).is_multiple_of(2)
}

pub fn en1_on(g: &SimpleGraph, set: u64) -> bool {
    bits(set).all(|v| en1_at(g, v))
}

/// EN2 at `v`: non-neighbours `x ≠ v` share an even number of neighbours with `v`.
pub fn en2_at(g: &SimpleGraph, v: usize) -> bool {
    (0..g.n()).all(|x| x == v || g.has_edge(v, x) || (g.neighbours(v) & g.neighbours(x)).count_ones().is_multiple_of(2))
}

/// EN2 on a set of ordered pairs.
pub fn en2_on_pairs(g: &SimpleGraph, pairs: &[(usize, usize)]) -> bool {
    pairs
        .iter()
        .all(|&(x, y)| x == y || g.has_edge(x, y) || (g.neighbours(x) & g.neighbours(y)).count_ones().is_multiple_of(2))
}

/// EN2 on every pair with at least one end in `set`.
pub fn en2_on_set(g: &SimpleGraph, set: u64) -> bool {
    bits(set).all(|v| en2_at(g, v))
}

/// RC at `v`: `R(x,y) = R(v,x) + R(y,v)` on edges inside `N(v)`.
pub fn rc_at(g: &SimpleGraph, v: usize) -> bool {
    let r = rosenstiehl(g);
    let nv = g.neighbours(v);
    bits(nv).all(|x| bits(g.neighbours(x) & nv).all(|y| r.get(x, y) == (r.get(v, x) ^ r.get(y, v))))
}

/// RC relative to `set`: the integral of `R` vanishes along closed walks and
/// along walks joining `x, y ∈ set` with `R(x,y) = 0`.
pub fn rc_relative(g: &SimpleGraph, set: u64) -> bool {
    let r = rosenstiehl(g);
    let Some(p) = potential(g, &r) else {
        return false;
    };
    for x in bits(set) {
        let comp = g.component_of(x);
        for y in bits(set & comp) {
            if x != y && !r.get(x, y) && (p >> x & 1) != (p >> y & 1) {
                return false;
            }
        }
    }
    true
}

/// Result of the rank minimisation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinGenus {
    pub genus: usize,
    /// Minimising colourings, one per pair `{χ, χ̄}` (the last vertex white).
    pub colourings: Vec<Bicolouring>,
}

/// The form `R + dχ` with zero diagonal: `R` off edges, `R + dχ` on edges.
pub fn translated_form(g: &SimpleGraph, r: &BitMatrix, chi: &Bicolouring) -> BitMatrix {
    let mut m = r.add(&colour_coboundary(g, chi));
    m.clear_diagonal();
    m
}

/// Minimal genus over all framings of any diagram with interlace graph `g`:
/// half the minimal rank of `R + dχ` over colourings `χ`.
pub fn min_genus(g: &SimpleGraph) -> Result<MinGenus> {
    if !check_en1(g) {
        return Err(Error::NotBicolourable);
    }
    let n = g.n();
    if n == 0 {
        return Ok(MinGenus {
            genus: 0,
            colourings: vec![Bicolouring::new(0, 0)],
        });
    }
    let r = rosenstiehl(g);
    let ranks: Vec<(u64, usize)> = (0u64..1 << (n - 1))
        .into_par_iter()
        .map(|mask| {
            let chi = Bicolouring::new(n, mask);
            (mask, translated_form(g, &r, &chi).rank())
        })
        .collect();
    let best = ranks.iter().map(|&(_, k)| k).min().unwrap_or(0);
    debug_assert_eq!(best % 2, 0);
    Ok(MinGenus {
        genus: best / 2,
        colourings: ranks
            .into_iter()
            .filter(|&(_, k)| k == best)
            .map(|(m, _)| Bicolouring::new(n, m))
            .collect(),
    })
}

/// Minimal genus over the coboundaries `B¹(G)` translating the Rosenstiehl
/// cocycle; valid for EN1 and EN2 graphs. Enumerates the `2^(n-b0)` distinct
/// coboundaries.
pub fn min_genus_coboundary(g: &SimpleGraph) -> Result<usize> {
    if !check_en1(g) {
        return Err(Error::NotBicolourable);
    }
    if !check_en2(g) {
        return Err(Error::NotGaussian);
    }
    let n = g.n();
    let r = on_edges(g, &rosenstiehl(g));
    // one fixed vertex per component
    let free: Vec<usize> = g
        .components()
        .into_iter()
        .flat_map(|c| bits(c).skip(1).collect::<Vec<_>>())
        .collect();
    let best = (0u64..1 << free.len())
        .into_par_iter()
        .map(|k| {
            let delta = bits(k).fold(0u64, |m, i| m | 1 << free[i]);
            let d = colour_coboundary(g, &Bicolouring::new(n, delta));
            r.add(&d).rank()
        })
        .min()
        .unwrap_or(0);
    Ok(best / 2)
}

/// Half the minimal rank of `R + C_χ` with the full colour form (not
/// restricted to edges), diagonal cleared.
pub fn min_genus_full_colour_form(g: &SimpleGraph) -> Result<usize> {
    if !check_en1(g) {
        return Err(Error::NotBicolourable);
    }
    let n = g.n();
    if n == 0 {
        return Ok(0);
    }
    let r = rosenstiehl(g);
    let best = (0u64..1 << (n - 1))
        .into_par_iter()
        .map(|mask| {
            let mut m = r.add(&colour_form(&Bicolouring::new(n, mask)));
            m.clear_diagonal();
            m.rank()
        })
        .min()
        .unwrap_or(0);
    Ok(best.div_ceil(2))
}

/// The `2^b0` framings of genus 0 of a diagram with Gaussian interlace graph.
pub fn genus0_framings(c: &ChordDiagram) -> Result<Vec<FramedChordDiagram>> {
    let g = c.interlace_graph();
    if !is_gaussian(&g) {
        return Err(Error::NotGaussian);
    }
    let p = potential(&g, &rosenstiehl(&g)).expect("RC holds");
    let (phi, inv) = integrate(c, &Bicolouring::new(g.n(), p))?;
    let comps = g.components();
    let mut out: Vec<FramedChordDiagram> = Vec::new();
    for base in [phi, inv] {
        for k in 0u64..1 << comps.len() {
            let flip = bits(k).fold(0u64, |m, i| m | comps[i]);
            let f = flip_chords(&base, flip);
            if !out.contains(&f) {
                out.push(f);
            }
        }
    }
    debug_assert!(out.iter().all(|f| f.genus() == 0));
    Ok(out)
}

/// Swap the framing values of the chords in `mask`.
pub fn flip_chords(c: &FramedChordDiagram, mask: u64) -> FramedChordDiagram {
    let frames = c
        .word()
        .iter()
        .zip(c.frames())
        .map(|(&ch, &f)| if mask >> ch & 1 == 1 { f.flip() } else { f })
        .collect();
    FramedChordDiagram::new(c.diagram().clone(), frames).expect("flipping keeps a framing")
}

/// The linear system in `W` mod 2 for CL2: weighted EN2 on non-edges and
/// weighted RC on a fundamental cycle basis.
pub fn cl2_equations(g: &SimpleGraph) -> Vec<Equation> {
    let n = g.n();
    let mut eqs = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            if !g.has_edge(x, y) {
                let coeffs = g.neighbours(x) & g.neighbours(y);
                eqs.push(Equation { coeffs, rhs: false });
            }
        }
    }
    let (parent, depth) = spanning_forest(g);
    for (a, b) in g.edges() {
        if parent[a] == b || parent[b] == a {
            continue;
        }
        // cycle: tree path a..b closed by the edge (a,b)
        let mut coeffs = g.neighbours(a) & g.neighbours(b);
        let mut length = 1usize;
        let (mut u, mut v) = (a, b);
        while u != v {
            if depth[u] >= depth[v] {
                coeffs ^= g.neighbours(u) & g.neighbours(parent[u]);
                u = parent[u];
            } else {
                coeffs ^= g.neighbours(v) & g.neighbours(parent[v]);
                v = parent[v];
            }
            length += 1;
        }
        eqs.push(Equation { coeffs, rhs: length % 2 == 1 });
    }
    eqs
}

/// CL2 weightings mod 2, or `None` when there are none.
pub fn solve_cl2(g: &SimpleGraph) -> Option<AffineSpace> {
    solve(g.n(), &cl2_equations(g))
}

pub fn check_cl2(g: &SimpleGraph, w: &[i64]) -> bool {
    let r = weighted_rosenstiehl(g, w);
    let n = g.n();
    let en2 = (0..n).all(|x| (0..n).all(|y| x == y || g.has_edge(x, y) || !r.get(x, y)));
    en2 && potential(g, &r).is_some()
}

/// How `W(x) = 1` is read in the weighted EN1 clause.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum WeightDomain {
    /// `W(x)` equal to 1 as an integer.
    Integer,
    /// `W(x)` odd.
    #[default]
    Mod2,
}

/// Weighted EN1: `W(x) = 1` implies `W(N(x))` even.
pub fn check_weighted_en1(g: &SimpleGraph, w: &[i64], domain: WeightDomain) -> bool {
    let odd = odd_mask(w);
    (0..g.n()).all(|x| {
        let unit = match domain {
            WeightDomain::Integer => w[x] == 1,
            WeightDomain::Mod2 => w[x].rem_euclid(2) == 1,
        };
        !unit || (g.neighbours(x) & odd).count_ones().is_multiple_of(2)
    })
}

pub fn check_cl12(g: &SimpleGraph, w: &[i64], domain: WeightDomain) -> bool {
    check_weighted_en1(g, w, domain) && check_cl2(g, w)
}
