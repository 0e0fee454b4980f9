//! Faces of the ribbon graph of a framed diagram, genus, bicolourings and the
//! intersection form.

use crate::chord::{ChordDiagram, Frame, FramedChordDiagram};
use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use crate::graph::SimpleGraph;

/// Half of a boundary arc: slot `slot` left forward (`out`) or backward.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Dart {
    pub slot: usize,
    pub out: bool,
}

/// Boundary components of the ribbon surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceSet {
    pub faces: Vec<Vec<Dart>>,
    face_of: Vec<usize>,
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// Face containing a dart.
    pub fn face(&self, d: Dart) -> usize {
        self.face_of[2 * d.slot + usize::from(!d.out)]
    }

    /// Face of the corner entered after leaving along `d`.
    pub fn corner(&self, d: Dart, len: usize) -> usize {
        self.face(alpha(d, len))
    }

    /// The two sides of the arc just before slot `r` lie in distinct faces.
    pub fn cut_sides_distinct(&self, r: usize, len: usize) -> bool {
        if len == 0 {
            return true;
        }
        let before = Dart { slot: (r + len - 1) % len, out: true };
        let after = Dart { slot: r % len, out: false };
        self.face(before) != self.face(after)
    }
}

fn alpha(d: Dart, len: usize) -> Dart {
    if d.out {
        Dart { slot: (d.slot + 1) % len, out: false }
    } else {
        Dart { slot: (d.slot + len - 1) % len, out: true }
    }
}

/// Rotation at a crossing: ∞ out, 0 out, ∞ in, 0 in.
fn sigma(d: Dart, inf_zero: &[(usize, usize)], word: &[u32]) -> Dart {
    let (i, z) = inf_zero[word[d.slot] as usize];
    let cycle = [
        Dart { slot: i, out: true },
        Dart { slot: z, out: true },
        Dart { slot: i, out: false },
        Dart { slot: z, out: false },
    ];
    let k = cycle.iter().position(|&c| c == d).expect("dart at its crossing");
    cycle[(k + 1) % 4]
}

pub fn boundary_components(c: &FramedChordDiagram) -> FaceSet {
    let len = c.len();
    if len == 0 {
        return FaceSet {
            faces: vec![Vec::new(), Vec::new()],
            face_of: Vec::new(),
        };
    }
    let inf_zero = c.inf_zero();
    let word = c.word();
    let mut face_of = vec![usize::MAX; 2 * len];
    let mut faces = Vec::new();
    for start in 0..2 * len {
        if face_of[start] != usize::MAX {
            continue;
        }
        let id = faces.len();
        let mut face = Vec::new();
        let mut d = Dart { slot: start / 2, out: start % 2 == 0 };
        loop {
            let k = 2 * d.slot + usize::from(!d.out);
            if face_of[k] != usize::MAX {
                break;
            }
            face_of[k] = id;
            face.push(d);
            d = sigma(alpha(d, len), &inf_zero, word);
        }
        faces.push(face);
    }
    FaceSet { faces, face_of }
}

pub fn face_count(c: &FramedChordDiagram) -> usize {
    boundary_components(c).len()
}

/// Genus from `2 - 2g = f - n`.
pub fn genus(c: &FramedChordDiagram) -> usize {
    genus_from_faces(c.n(), face_count(c))
}

pub fn genus_from_faces(n: usize, f: usize) -> usize {
    let chi = 2 + n as i64 - f as i64;
    assert!(chi >= 0 && chi % 2 == 0, "parity violation: n={n}, f={f}");
    (chi / 2) as usize
}

impl FramedChordDiagram {
    pub fn genus(&self) -> usize {
        genus(self)
    }
}

/// Every vertex of the interlace graph has even degree.
pub fn is_bicolourable(g: &SimpleGraph) -> bool {
    (0..g.n()).all(|v| g.degree(v).is_multiple_of(2))
}

/// A colouring of the chords; bit `c` set means chord `c` is black.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Bicolouring {
    pub n: usize,
    pub black: u64,
}

impl Bicolouring {
    pub fn new(n: usize, black: u64) -> Self {
        Bicolouring {
            n,
            black: black & crate::gf2::low_mask(n),
        }
    }

    pub fn is_black(&self, c: usize) -> bool {
        self.black >> c & 1 == 1
    }

    pub fn swapped(&self) -> Self {
        Self::new(self.n, !self.black)
    }
}

/// The two colourings whose colour changes between consecutive slots exactly
/// where the framing repeats.
pub fn bicolourings(c: &FramedChordDiagram) -> Result<(Bicolouring, Bicolouring)> {
    if !is_bicolourable(&c.interlace_graph()) {
        return Err(Error::NotBicolourable);
    }
    let n = c.n();
    let word = c.word();
    let mut colour = vec![None; n];
    let mut cur = false;
    for i in 0..c.len() {
        let ch = word[i] as usize;
        match colour[ch] {
            None => colour[ch] = Some(cur),
            Some(col) => debug_assert_eq!(col, cur),
        }
        let j = (i + 1) % c.len();
        if c.frame(i) == c.frame(j) {
            cur = !cur;
        }
    }
    let black = (0..n).filter(|&ch| colour[ch] == Some(true)).fold(0u64, |m, ch| m | 1 << ch);
    let b = Bicolouring::new(n, black);
    Ok((b, b.swapped()))
}

/// The two framings of `c` whose values repeat exactly between consecutive
/// slots of different colours; the first starts with `Inf`.
pub fn integrate(c: &ChordDiagram, chi: &Bicolouring) -> Result<(FramedChordDiagram, FramedChordDiagram)> {
    if !is_bicolourable(&c.interlace_graph()) {
        return Err(Error::NotBicolourable);
    }
    let word = c.word();
    let mut frames = Vec::with_capacity(c.len());
    let mut cur = Frame::Inf;
    for i in 0..c.len() {
        frames.push(cur);
        let j = (i + 1) % c.len();
        if chi.is_black(word[i] as usize) == chi.is_black(word[j] as usize) {
            cur = cur.flip();
        }
    }
    let phi = FramedChordDiagram::new(c.clone(), frames)?;
    let inv = phi.inverted();
    Ok((phi, inv))
}

/// `I(x,y) = E(x,y) + #{z with one end in (x∞,x₀) and the other in (y∞,y₀)}`,
/// zero diagonal.
pub fn intersection_form(c: &FramedChordDiagram) -> BitMatrix {
    let n = c.n();
    let len = c.len();
    let e = c.interlace_graph();
    let occ = c.diagram().occurrences();
    let inf_zero = c.inf_zero();
    // For each x: chords whose first / second occurrence lies in (x∞, x₀).
    let mut first = vec![0u64; n];
    let mut second = vec![0u64; n];
    for (x, &(i, z)) in inf_zero.iter().enumerate() {
        let mut s = (i + 1) % len;
        while s != z {
            let ch = c.word()[s] as usize;
            if occ[ch][0] == s {
                first[x] |= 1 << ch;
            } else {
                second[x] |= 1 << ch;
            }
            s = (s + 1) % len;
        }
    }
    let mut m = BitMatrix::square(n);
    for x in 0..n {
        for y in 0..n {
            if x == y {
                continue;
            }
            let count = (first[x] & second[y]).count_ones() + (second[x] & first[y]).count_ones();
            m.set(x, y, e.has_edge(x, y) ^ (count % 2 == 1));
        }
    }
    m
}
