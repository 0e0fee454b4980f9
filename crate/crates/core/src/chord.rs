//! Cyclic double-occurrence words, framings, and the word-level operations.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, MAX_VERTICES};

/// Framing value of one occurrence. Uppercase letters are `Inf`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Frame {
    Inf,
    Zero,
}

impl Frame {
    pub fn flip(self) -> Frame {
        match self {
            Frame::Inf => Frame::Zero,
            Frame::Zero => Frame::Inf,
        }
    }

    pub fn is_inf(self) -> bool {
        self == Frame::Inf
    }
}

/// `a`..`z`, then `a1`..`z1`, and so on.
pub fn default_name(i: usize) -> String {
    let letter = (b'a' + (i % 26) as u8) as char;
    if i < 26 {
        letter.to_string()
    } else {
        format!("{letter}{}", i / 26)
    }
}

fn tokenize(text: &str) -> Result<Vec<(String, bool)>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.trim().chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if !c.is_ascii_alphabetic() {
            return Err(Error::Parse(text.to_string()));
        }
        let mut name = c.to_ascii_lowercase().to_string();
        i += 1;
        while i < chars.len() && chars[i].is_ascii_digit() {
            name.push(chars[i]);
            i += 1;
        }
        out.push((name, c.is_ascii_uppercase()));
    }
    Ok(out)
}

/// A chord diagram: each chord id in `0..n` occupies exactly two slots.
/// Equality is structural; use canonical forms for equality up to rotation.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct ChordDiagram {
    word: Vec<u32>,
    names: Vec<String>,
}

impl ChordDiagram {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(word: Vec<u32>) -> Result<Self> {
        let n = word.len() / 2;
        let names = (0..n).map(default_name).collect();
        Self::with_names(word, names)
    }

    pub fn with_names(word: Vec<u32>, names: Vec<String>) -> Result<Self> {
        let n = names.len();
        if n > MAX_VERTICES {
            return Err(Error::TooLarge(n));
        }
        let mut count = vec![0usize; n];
        for &c in &word {
            let c = c as usize;
            if c >= n {
                return Err(Error::Input(format!("chord id {c} without a name")));
            }
            count[c] += 1;
        }
        if let Some(c) = (0..n).find(|&c| count[c] != 2) {
            return Err(Error::LetterCount {
                letter: names[c].clone(),
                count: count[c],
            });
        }
        Ok(ChordDiagram { word, names })
    }

    /// Case-insensitive parse: chords are letters with optional digit suffixes.
    pub fn parse(text: &str) -> Result<Self> {
        Ok(parse_tokens(text)?.0)
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, c: u32) -> &str {
        &self.names[c as usize]
    }

    pub fn chord_by_name(&self, name: &str) -> Option<u32> {
        let name = name.to_ascii_lowercase();
        self.names.iter().position(|s| *s == name).map(|i| i as u32)
    }

    /// Slots of each chord, in increasing order.
    pub fn occurrences(&self) -> Vec<[usize; 2]> {
        let mut occ = vec![[usize::MAX; 2]; self.n()];
        for (i, &c) in self.word.iter().enumerate() {
            let o = &mut occ[c as usize];
            if o[0] == usize::MAX {
                o[0] = i;
            } else {
                o[1] = i;
            }
        }
        occ
    }

    pub fn rotate(&self, k: usize) -> ChordDiagram {
        let mut word = self.word.clone();
        if !word.is_empty() {
            word.rotate_left(k % self.len());
        }
        ChordDiagram {
            word,
            names: self.names.clone(),
        }
    }

    pub fn reversed(&self) -> ChordDiagram {
        let mut word = self.word.clone();
        word.reverse();
        ChordDiagram {
            word,
            names: self.names.clone(),
        }
    }

    /// Relabel with default names so chord ids follow first occurrence.
    pub fn normalized(&self) -> ChordDiagram {
        let (word, _) = relabel_first_occurrence(&self.word, self.n());
        ChordDiagram::new(word).expect("relabelling preserves validity")
    }

    /// Adjacency: chords whose occurrences alternate.
    pub fn interlace_graph(&self) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.n());
        for (x, [a, b]) in self.occurrences().into_iter().enumerate() {
            let mut inside = 0u64;
            for &c in &self.word[a + 1..b] {
                inside ^= 1 << c;
            }
            for y in crate::gf2::bits(inside) {
                g.add_edge(x, y);
            }
        }
        g
    }

    /// `c A c B` becomes `c A c B^-1`; the result starts at the first `c`.
    pub fn local_complement(&self, c: u32) -> Result<ChordDiagram> {
        if c as usize >= self.n() {
            return Err(Error::Root(c.to_string()));
        }
        let [a, b] = self.occurrences()[c as usize];
        let r = self.rotate(a);
        let b = b - a;
        let mut word = r.word;
        word[b + 1..].reverse();
        Ok(ChordDiagram {
            word,
            names: self.names.clone(),
        })
    }

    /// Minimal word over rotations and relabellings (and reversal if asked),
    /// printed with default names.
    pub fn canonical_form(&self, reversal: bool) -> String {
        let framed = FramedChordDiagram::unframed(self);
        let key = framed.canonical_tokens(CanonFlags {
            reversal,
            inversion: false,
        });
        key.iter().map(|&(c, _)| default_name(c as usize)).collect()
    }

    /// Minimal word over rotations (and reversal if asked), labels kept.
    pub fn labelled_key(&self, reversal: bool) -> Vec<u32> {
        let mut best = min_rotation(&self.word);
        if reversal {
            let mut r = self.word.clone();
            r.reverse();
            best = best.min(min_rotation(&r));
        }
        best
    }
}

impl fmt::Display for ChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &c in &self.word {
            f.write_str(&self.names[c as usize])?;
        }
        Ok(())
    }
}

fn min_rotation<T: Ord + Clone>(w: &[T]) -> Vec<T> {
    let mut best: Option<Vec<T>> = None;
    for k in 0..w.len().max(1) {
        let mut r = w.to_vec();
        if !r.is_empty() {
            r.rotate_left(k);
        }
        if best.as_ref().is_none_or(|b| r < *b) {
            best = Some(r);
        }
    }
    best.unwrap_or_default()
}

fn relabel_first_occurrence(word: &[u32], n: usize) -> (Vec<u32>, Vec<u32>) {
    let mut map = vec![u32::MAX; n];
    let mut next = 0;
    let out = word
        .iter()
        .map(|&c| {
            if map[c as usize] == u32::MAX {
                map[c as usize] = next;
                next += 1;
            }
            map[c as usize]
        })
        .collect();
    (out, map)
}

fn parse_tokens(text: &str) -> Result<(ChordDiagram, Vec<bool>)> {
    let tokens = tokenize(text)?;
    let mut ids: HashMap<String, u32> = HashMap::new();
    let mut names = Vec::new();
    let mut word = Vec::new();
    let mut upper = Vec::new();
    for (name, up) in tokens {
        let id = *ids.entry(name.clone()).or_insert_with(|| {
            names.push(name);
            (names.len() - 1) as u32
        });
        word.push(id);
        upper.push(up);
    }
    Ok((ChordDiagram::with_names(word, names)?, upper))
}

/// Which optional symmetries a canonical form quotients by.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct CanonFlags {
    /// Global orientation reversal of the curve.
    pub reversal: bool,
    /// Global frame inversion (mirror image).
    pub inversion: bool,
}

impl CanonFlags {
    pub const NONE: CanonFlags = CanonFlags {
        reversal: false,
        inversion: false,
    };
    pub const ALL: CanonFlags = CanonFlags {
        reversal: true,
        inversion: true,
    };
}

/// A chord diagram with a framing value per slot; the two occurrences of a
/// chord carry different values.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct FramedChordDiagram {
    diagram: ChordDiagram,
    frames: Vec<Frame>,
}

impl FramedChordDiagram {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(diagram: ChordDiagram, frames: Vec<Frame>) -> Result<Self> {
        if frames.len() != diagram.len() {
            return Err(Error::Input("one frame per slot required".into()));
        }
        for (c, [a, b]) in diagram.occurrences().into_iter().enumerate() {
            if frames[a] == frames[b] {
                return Err(Error::Framing(diagram.names[c].clone()));
            }
        }
        Ok(FramedChordDiagram { diagram, frames })
    }

    /// Build from chord ids and frames; default names.
    pub fn from_slots(slots: &[(u32, Frame)]) -> Result<Self> {
        let word = slots.iter().map(|s| s.0).collect();
        let frames = slots.iter().map(|s| s.1).collect();
        Self::new(ChordDiagram::new(word)?, frames)
    }

    /// Framing given by a chord bitmask: bit `c` set puts `Inf` on the first
    /// occurrence of chord `c`.
    pub fn with_first_inf(diagram: &ChordDiagram, mask: u64) -> Self {
        let mut frames = vec![Frame::Zero; diagram.len()];
        for (c, [a, b]) in diagram.occurrences().into_iter().enumerate() {
            if mask >> c & 1 == 1 {
                frames[a] = Frame::Inf;
            } else {
                frames[b] = Frame::Inf;
            }
        }
        FramedChordDiagram {
            diagram: diagram.clone(),
            frames,
        }
    }

    /// The framing with `Inf` on every first occurrence; used where framings
    /// do not matter.
    pub fn unframed(diagram: &ChordDiagram) -> Self {
        Self::with_first_inf(diagram, u64::MAX)
    }

    /// All `2^n` framings of a diagram.
    pub fn all_framings(diagram: &ChordDiagram) -> impl Iterator<Item = FramedChordDiagram> + '_ {
        assert!(diagram.n() < 64);
        (0u64..1 << diagram.n()).map(move |m| Self::with_first_inf(diagram, m))
    }

    /// Parse a word where uppercase encodes `Inf` and lowercase `Zero`.
    pub fn parse(text: &str) -> Result<Self> {
        let (diagram, upper) = parse_tokens(text)?;
        let frames = upper
            .into_iter()
            .map(|u| if u { Frame::Inf } else { Frame::Zero })
            .collect();
        Self::new(diagram, frames)
    }

    pub fn diagram(&self) -> &ChordDiagram {
        &self.diagram
    }

    pub fn frames(&self) -> &[Frame] {
        &self.frames
    }

    pub fn n(&self) -> usize {
        self.diagram.n()
    }

    pub fn len(&self) -> usize {
        self.diagram.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diagram.is_empty()
    }

    pub fn word(&self) -> &[u32] {
        self.diagram.word()
    }

    pub fn frame(&self, slot: usize) -> Frame {
        self.frames[slot]
    }

    pub fn slots(&self) -> Vec<(u32, Frame)> {
        self.word().iter().copied().zip(self.frames.iter().copied()).collect()
    }

    /// `(inf slot, zero slot)` of every chord.
    pub fn inf_zero(&self) -> Vec<(usize, usize)> {
        self.diagram
            .occurrences()
            .into_iter()
            .map(|[a, b]| if self.frames[a].is_inf() { (a, b) } else { (b, a) })
            .collect()
    }

    pub fn interlace_graph(&self) -> SimpleGraph {
        self.diagram.interlace_graph()
    }

    pub fn rotate(&self, k: usize) -> Self {
        let mut frames = self.frames.clone();
        let len = frames.len();
        if len > 0 {
            frames.rotate_left(k % len);
        }
        FramedChordDiagram {
            diagram: self.diagram.rotate(k),
            frames,
        }
    }

    /// Orientation reversal; each occurrence keeps its framing value.
    pub fn reversed(&self) -> Self {
        let mut frames = self.frames.clone();
        frames.reverse();
        FramedChordDiagram {
            diagram: self.diagram.reversed(),
            frames,
        }
    }

    /// Global frame inversion.
    pub fn inverted(&self) -> Self {
        FramedChordDiagram {
            diagram: self.diagram.clone(),
            frames: self.frames.iter().map(|f| f.flip()).collect(),
        }
    }

    pub fn normalized(&self) -> Self {
        FramedChordDiagram {
            diagram: self.diagram.normalized(),
            frames: self.frames.clone(),
        }
    }

    /// `(first-occurrence label, frame)` tokens of the minimal variant.
    pub fn canonical_tokens(&self, flags: CanonFlags) -> Vec<(u32, Frame)> {
        let mut variants = vec![self.clone()];
        if flags.reversal {
            variants.push(self.reversed());
        }
        if flags.inversion {
            let inv: Vec<_> = variants.iter().map(|v| v.inverted()).collect();
            variants.extend(inv);
        }
        let n = self.n();
        let mut best: Option<Vec<(u32, Frame)>> = None;
        for v in &variants {
            for k in 0..self.len().max(1) {
                let r = v.rotate(k);
                let (word, _) = relabel_first_occurrence(r.word(), n);
                let tokens: Vec<(u32, Frame)> = word.into_iter().zip(r.frames.iter().copied()).collect();
                if best.as_ref().is_none_or(|b| tokens < *b) {
                    best = Some(tokens);
                }
            }
        }
        best.unwrap_or_default()
    }

    pub fn canonical_form(&self, flags: CanonFlags) -> String {
        tokens_to_string(&self.canonical_tokens(flags))
    }

    /// Minimal `(chord, frame)` sequence over rotations (and reversal), labels kept.
    pub fn labelled_key(&self, reversal: bool) -> Vec<(u32, Frame)> {
        let mut best = min_rotation(&self.slots());
        if reversal {
            best = best.min(min_rotation(&self.reversed().slots()));
        }
        best
    }

    pub fn equivalent(&self, other: &Self, flags: CanonFlags) -> bool {
        self.n() == other.n() && self.canonical_tokens(flags) == other.canonical_tokens(flags)
    }
}

pub fn tokens_to_string(tokens: &[(u32, Frame)]) -> String {
    tokens
        .iter()
        .map(|&(c, f)| {
            let s = default_name(c as usize);
            if f.is_inf() {
                s.to_ascii_uppercase()
            } else {
                s
            }
        })
        .collect()
}

impl fmt::Display for FramedChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (&c, fr) in self.diagram.word.iter().zip(&self.frames) {
            let s = self.diagram.name(c);
            if fr.is_inf() {
                f.write_str(&s.to_ascii_uppercase())?;
            } else {
                f.write_str(s)?;
            }
        }
        Ok(())
    }
}

/// A framed diagram with a root chord; read as `a∞ U a₀ V`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RootedDiagram {
    pub diagram: FramedChordDiagram,
    pub root: u32,
}

impl RootedDiagram {
    pub fn new(diagram: FramedChordDiagram, root: u32) -> Result<Self> {
        if root as usize >= diagram.n() {
            return Err(Error::Root(root.to_string()));
        }
        Ok(RootedDiagram { diagram, root })
    }

    /// Root given by name, e.g. `("AbaB", "a")`.
    pub fn parse(word: &str, root: &str) -> Result<Self> {
        let diagram = FramedChordDiagram::parse(word)?;
        let r = diagram
            .diagram()
            .chord_by_name(root)
            .ok_or_else(|| Error::Root(root.to_string()))?;
        Self::new(diagram, r)
    }

    /// Unit for substitution: `p∞ q∞ p₀ q₀` rooted at `p`.
    pub fn unit() -> Self {
        let d = FramedChordDiagram::parse("ABab").expect("valid");
        RootedDiagram { diagram: d, root: 0 }
    }

    /// `(U, V)` with `a∞ U a₀ V`.
    pub fn parts(&self) -> (Vec<(u32, Frame)>, Vec<(u32, Frame)>) {
        let (inf, zero) = self.diagram.inf_zero()[self.root as usize];
        let r = self.diagram.rotate(inf);
        let z = (zero + self.diagram.len() - inf) % self.diagram.len();
        let s = r.slots();
        (s[1..z].to_vec(), s[z + 1..].to_vec())
    }

    /// Non-root chords in id order.
    pub fn others(&self) -> Vec<u32> {
        (0..self.diagram.n() as u32).filter(|&c| c != self.root).collect()
    }
}

/// A linear framed word: the cyclic word cut just before slot 0.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LinearChordDiagram {
    pub diagram: FramedChordDiagram,
    pub root: Option<u32>,
}

impl LinearChordDiagram {
    pub fn new(diagram: FramedChordDiagram) -> Self {
        LinearChordDiagram { diagram, root: None }
    }

    /// Based at chord `c`: the word ends with an occurrence of `c`.
    pub fn based_at(diagram: &FramedChordDiagram, slot: usize) -> Self {
        let len = diagram.len();
        let d = diagram.rotate((slot + 1) % len.max(1));
        let root = diagram.word().get(slot).copied();
        LinearChordDiagram { diagram: d, root }
    }
}

/// Renumber chords from `(side, id)` keys in order of `order`.
struct Assembler {
    ids: HashMap<(u8, u32), u32>,
}

impl Assembler {
    fn new(order: &[(u8, u32)]) -> Self {
        let ids = order.iter().enumerate().map(|(i, &k)| (k, i as u32)).collect();
        Assembler { ids }
    }

    fn map(&self, side: u8, seq: &[(u32, Frame)]) -> Vec<(u32, Frame)> {
        seq.iter().map(|&(c, f)| (self.ids[&(side, c)], f)).collect()
    }
}

fn reverse_piece(seq: &[(u32, Frame)]) -> Vec<(u32, Frame)> {
    seq.iter().rev().copied().collect()
}

/// Swap the framing values of every chord with exactly one occurrence in a
/// reversed piece.
fn fix_frames(pieces: Vec<(Vec<(u32, Frame)>, bool)>) -> Vec<(u32, Frame)> {
    let mut reversed_count: HashMap<u32, u32> = HashMap::new();
    for (p, rev) in &pieces {
        if *rev {
            for &(c, _) in p {
                *reversed_count.entry(c).or_default() += 1;
            }
        }
    }
    pieces
        .into_iter()
        .flat_map(|(p, _)| p)
        .map(|(c, f)| if reversed_count.get(&c) == Some(&1) { (c, f.flip()) } else { (c, f) })
        .collect()
}

/// `AB`: the concatenation of two linear words closed up. Chords of `A` come
/// first, then those of `B`.
pub fn spheric_sum(a: &LinearChordDiagram, b: &LinearChordDiagram) -> FramedChordDiagram {
    let na = a.diagram.n() as u32;
    let mut slots = a.diagram.slots();
    slots.extend(b.diagram.slots().into_iter().map(|(c, f)| (c + na, f)));
    FramedChordDiagram::from_slots(&slots).expect("sum of valid diagrams")
}

/// `U X⁻¹ V⁻¹ Y` for `a∞ U a₀ V` and `b∞ X b₀ Y`. Chords of `A` (minus the
/// root) come first, then those of `B`.
pub fn plumbing(a: &RootedDiagram, b: &RootedDiagram) -> FramedChordDiagram {
    let (u, v) = a.parts();
    let (x, y) = b.parts();
    let mut order: Vec<(u8, u32)> = a.others().into_iter().map(|c| (0, c)).collect();
    order.extend(b.others().into_iter().map(|c| (1, c)));
    let asm = Assembler::new(&order);
    let slots = fix_frames(vec![
        (asm.map(0, &u), false),
        (reverse_piece(&asm.map(1, &x)), true),
        (reverse_piece(&asm.map(0, &v)), true),
        (asm.map(1, &y), false),
    ]);
    FramedChordDiagram::from_slots(&slots).expect("plumbing of valid diagrams")
}

/// `c∞ U X c₀ V Y`, rooted at the new chord `c` (id 0).
pub fn komposition(a: &RootedDiagram, b: &RootedDiagram) -> RootedDiagram {
    let (u, v) = a.parts();
    let (x, y) = b.parts();
    let mut order: Vec<(u8, u32)> = vec![(2, 0)];
    order.extend(a.others().into_iter().map(|c| (0, c)));
    order.extend(b.others().into_iter().map(|c| (1, c)));
    let asm = Assembler::new(&order);
    let mut slots = vec![(0, Frame::Inf)];
    slots.extend(asm.map(0, &u));
    slots.extend(asm.map(1, &x));
    slots.push((0, Frame::Zero));
    slots.extend(asm.map(0, &v));
    slots.extend(asm.map(1, &y));
    RootedDiagram {
        diagram: FramedChordDiagram::from_slots(&slots).expect("komposition of valid diagrams"),
        root: 0,
    }
}

/// Plumbing with the 1-chord diagram: `U V⁻¹`. Remaining chords keep their
/// relative id order.
pub fn smoothing(c: &FramedChordDiagram, a: u32) -> Result<FramedChordDiagram> {
    let rooted = RootedDiagram::new(c.clone(), a)?;
    let one = RootedDiagram::new(FramedChordDiagram::parse("Aa").expect("valid"), 0)?;
    Ok(plumbing(&rooted, &one))
}

/// Substitute parts into the non-root chords of `c0` (in id order): a chord
/// `x` receives `p∞ U p₀ V` as `x∞ → U`, `x₀ → V`. Chord ids follow
/// [`crate::graph::compose_graphs`].
pub fn compose_diagrams(c0: &RootedDiagram, parts: &[RootedDiagram]) -> Result<RootedDiagram> {
    let others = c0.others();
    if others.len() != parts.len() {
        return Err(Error::Arity {
            expected: others.len(),
            got: parts.len(),
        });
    }
    let mut order: Vec<(u8, u32)> = Vec::new();
    let mut part_of = HashMap::new();
    for x in 0..c0.diagram.n() as u32 {
        if x == c0.root {
            order.push((0, x));
        } else {
            let j = part_of.len();
            part_of.insert(x, j);
            order.extend(parts[j].others().into_iter().map(|c| (1 + j as u8, c)));
        }
    }
    if parts.len() > 250 {
        return Err(Error::TooLarge(parts.len()));
    }
    let asm = Assembler::new(&order);
    let split: Vec<_> = parts.iter().map(|p| p.parts()).collect();
    let mut slots = Vec::new();
    for (x, f) in c0.diagram.slots() {
        if x == c0.root {
            slots.push((asm.ids[&(0, x)], f));
        } else {
            let j = part_of[&x];
            let piece = if f.is_inf() { &split[j].0 } else { &split[j].1 };
            slots.extend(asm.map(1 + j as u8, piece));
        }
    }
    let root = asm.ids[&(0, c0.root)];
    RootedDiagram::new(FramedChordDiagram::from_slots(&slots)?, root)
}

/// An element of the rectangular group acting on `U X V Y`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum MutationElement {
    Identity,
    /// `U Y V X`
    Swap,
    /// `U X⁻¹ V Y⁻¹`
    ReverseBoth,
    /// `U Y⁻¹ V X⁻¹`
    SwapReverse,
}

impl MutationElement {
    pub const ALL: [MutationElement; 4] = [
        MutationElement::Identity,
        MutationElement::Swap,
        MutationElement::ReverseBoth,
        MutationElement::SwapReverse,
    ];

    fn bits(self) -> (bool, bool) {
        match self {
            MutationElement::Identity => (false, false),
            MutationElement::Swap => (true, false),
            MutationElement::ReverseBoth => (false, true),
            MutationElement::SwapReverse => (true, true),
        }
    }

    pub fn compose(self, other: MutationElement) -> MutationElement {
        let (s1, r1) = self.bits();
        let (s2, r2) = other.bits();
        match (s1 ^ s2, r1 ^ r2) {
            (false, false) => MutationElement::Identity,
            (true, false) => MutationElement::Swap,
            (false, true) => MutationElement::ReverseBoth,
            (true, true) => MutationElement::SwapReverse,
        }
    }
}

/// Sub-diagram on one or two disjoint cyclic intervals `(start, len)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct IntervalPair {
    pub first: (usize, usize),
    pub second: Option<(usize, usize)>,
}

impl IntervalPair {
    fn slots(&self, len: usize) -> Vec<usize> {
        let mut out: Vec<usize> = (0..self.first.1).map(|i| (self.first.0 + i) % len).collect();
        if let Some((s, l)) = self.second {
            out.extend((0..l).map(|i| (s + i) % len));
        }
        out
    }

    fn validate(&self, d: &ChordDiagram) -> Result<()> {
        let len = d.len();
        let bad = |m: &str| Err(Error::Interval(m.to_string()));
        if len == 0 || self.first.1 == 0 || self.first.0 >= len {
            return bad("empty or out-of-range interval");
        }
        if let Some((s, l)) = self.second {
            if l == 0 || s >= len {
                return bad("empty or out-of-range interval");
            }
        }
        let slots = self.slots(len);
        let mut seen = vec![false; len];
        for &s in &slots {
            if seen[s] {
                return bad("intervals overlap");
            }
            seen[s] = true;
        }
        if let Some((s, _)) = self.second {
            // second must start after first ends, leaving a gap on both sides
            let end1 = (self.first.0 + self.first.1) % len;
            if slots.len() == len || s == end1 || (s + self.second.unwrap().1) % len == self.first.0 {
                return bad("intervals must be separated on both sides");
            }
        }
        for [a, b] in d.occurrences() {
            if seen[a] != seen[b] {
                return bad("sub-diagram is not closed under chord mates");
            }
        }
        Ok(())
    }
}

fn mutate_slots(len: usize, pair: &IntervalPair, g: MutationElement) -> Vec<(usize, bool)> {
    // Rotate so X starts at 0: X V Y U, then rearrange.
    let (xs, xl) = pair.first;
    let x: Vec<usize> = (0..xl).map(|i| (xs + i) % len).collect();
    let (swap, rev) = g.bits();
    let Some((ys, yl)) = pair.second else {
        let rest: Vec<usize> = (xl..len).map(|i| (xs + i) % len).collect();
        let mut out: Vec<(usize, bool)> = if rev {
            x.iter().rev().map(|&s| (s, true)).collect()
        } else {
            x.iter().map(|&s| (s, false)).collect()
        };
        out.extend(rest.into_iter().map(|s| (s, false)));
        return out;
    };
    let y: Vec<usize> = (0..yl).map(|i| (ys + i) % len).collect();
    let v: Vec<usize> = {
        let mut out = Vec::new();
        let mut s = (xs + xl) % len;
        while s != ys {
            out.push(s);
            s = (s + 1) % len;
        }
        out
    };
    let u: Vec<usize> = {
        let mut out = Vec::new();
        let mut s = (ys + yl) % len;
        while s != xs {
            out.push(s);
            s = (s + 1) % len;
        }
        out
    };
    let piece = |p: &[usize]| -> Vec<(usize, bool)> {
        if rev {
            p.iter().rev().map(|&s| (s, true)).collect()
        } else {
            p.iter().map(|&s| (s, false)).collect()
        }
    };
    let (p1, p2) = if swap { (&y, &x) } else { (&x, &y) };
    let mut out = piece(p1);
    out.extend(v.iter().map(|&s| (s, false)));
    out.extend(piece(p2));
    out.extend(u.iter().map(|&s| (s, false)));
    out
}

/// Apply a mutation to the sub-diagram on `pair`. The interlace graph is
/// unchanged.
pub fn mutate(c: &ChordDiagram, pair: &IntervalPair, g: MutationElement) -> Result<ChordDiagram> {
    pair.validate(c)?;
    let word = mutate_slots(c.len(), pair, g).into_iter().map(|(s, _)| c.word[s]).collect();
    Ok(ChordDiagram {
        word,
        names: c.names.clone(),
    })
}

/// Framed mutation: frames travel with their slots, and a chord with exactly
/// one occurrence in a reversed piece swaps its two framing values (the
/// plumbing rule).
pub fn mutate_framed(c: &FramedChordDiagram, pair: &IntervalPair, g: MutationElement) -> Result<FramedChordDiagram> {
    pair.validate(&c.diagram)?;
    let moved = mutate_slots(c.len(), pair, g);
    let mut reversed_count = vec![0u8; c.n()];
    for &(s, rev) in &moved {
        if rev {
            reversed_count[c.word()[s] as usize] += 1;
        }
    }
    let word: Vec<u32> = moved.iter().map(|&(s, _)| c.word()[s]).collect();
    let frames = moved
        .iter()
        .map(|&(s, _)| {
            let f = c.frames[s];
            if reversed_count[c.word()[s] as usize] == 1 { f.flip() } else { f }
        })
        .collect();
    FramedChordDiagram::new(ChordDiagram::with_names(word, c.diagram.names.clone())?, frames)
}

/// Every valid one- or two-interval sub-diagram of `c`.
pub fn interval_pairs(c: &ChordDiagram) -> Vec<IntervalPair> {
    let len = c.len();
    let mut out = Vec::new();
    for s in 0..len {
        for l in 1..=len {
            let p = IntervalPair { first: (s, l), second: None };
            if p.validate(c).is_ok() {
                out.push(p);
            }
            for s2 in 0..len {
                for l2 in 1..len {
                    let p = IntervalPair {
                        first: (s, l),
                        second: Some((s2, l2)),
                    };
                    if p.validate(c).is_ok() {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

/// All chord diagrams on `n` chords with chord 0 at slot 0 and ids in order
/// of first occurrence: one representative per rotation class of unlabelled
/// words started at a chord's first end.
pub fn all_normalized_words(n: usize) -> Vec<Vec<u32>> {
    fn rec(w: &mut Vec<u32>, n: usize, next: u32, open: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if w.len() == 2 * n {
            out.push(w.clone());
            return;
        }
        if (next as usize) < n {
            w.push(next);
            open.push(next);
            rec(w, n, next + 1, open, out);
            open.pop();
            w.pop();
        }
        for i in 0..open.len() {
            let c = open.remove(i);
            w.push(c);
            rec(w, n, next, open, out);
            w.pop();
            open.insert(i, c);
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), n, 0, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let d = FramedChordDiagram::parse("Aa").unwrap();
        assert_eq!(d.n(), 1);
        assert_eq!(d.frames(), &[Frame::Inf, Frame::Zero]);
        let d = FramedChordDiagram::parse("AbBa").unwrap();
        assert_eq!(d.interlace_graph().edge_count(), 0);
        assert!(matches!(FramedChordDiagram::parse("Aab"), Err(Error::LetterCount { .. })));
        assert!(matches!(FramedChordDiagram::parse("AA"), Err(Error::Framing(_))));
        assert!(matches!(FramedChordDiagram::parse("A-a"), Err(Error::Parse(_))));
        let long = FramedChordDiagram::parse("A1Bb a1").unwrap();
        assert_eq!(long.n(), 2);
        assert_eq!(long.to_string(), "A1Bba1");
    }

    #[test]
    fn interlace_examples() {
        assert_eq!(ChordDiagram::parse("abab").unwrap().interlace_graph(), SimpleGraph::complete(2));
        assert_eq!(ChordDiagram::parse("abcabc").unwrap().interlace_graph(), SimpleGraph::complete(3));
        assert_eq!(ChordDiagram::parse("aabb").unwrap().interlace_graph(), SimpleGraph::new(2));
    }

    #[test]
    fn canonical_examples() {
        let d = FramedChordDiagram::parse("bBaA").unwrap();
        assert_eq!(d.canonical_form(CanonFlags::NONE), "AbBa");
        assert_eq!(FramedChordDiagram::empty().canonical_form(CanonFlags::ALL), "");
        let e = FramedChordDiagram::parse("AbCaBc").unwrap();
        for k in 0..6 {
            assert_eq!(e.rotate(k).canonical_form(CanonFlags::NONE), e.canonical_form(CanonFlags::NONE));
        }
    }

    #[test]
    fn word_counts() {
        // (2n-1)!!
        let counts: Vec<usize> = (0..6).map(|n| all_normalized_words(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 3, 15, 105, 945]);
    }

    #[test]
    fn spheric_sum_example() {
        let a = LinearChordDiagram::new(FramedChordDiagram::parse("ABab").unwrap());
        let b = LinearChordDiagram::new(FramedChordDiagram::parse("ABab").unwrap());
        let s = spheric_sum(&a, &b);
        assert_eq!(s.diagram().to_string(), "ababcdcd");
        let g = s.interlace_graph();
        assert_eq!(g.edges(), vec![(0, 1), (2, 3)]);
        let e = LinearChordDiagram::new(FramedChordDiagram::empty());
        let aa = LinearChordDiagram::new(FramedChordDiagram::parse("Aa").unwrap());
        assert_eq!(spheric_sum(&e, &aa).to_string(), "Aa");
    }

    #[test]
    fn plumbing_examples() {
        let one = RootedDiagram::parse("Aa", "a").unwrap();
        assert!(plumbing(&one, &one).is_empty());
        let a = RootedDiagram::parse("AbaB", "a").unwrap();
        let b = RootedDiagram::parse("CdcD", "c").unwrap();
        // U X⁻¹ V⁻¹ Y = b d B D; b and d each have one occurrence reversed
        // so both swap frames.
        let p = plumbing(&a, &b);
        assert_eq!(p.to_string(), "ABab");
        assert!(matches!(RootedDiagram::parse("Aa", "z"), Err(Error::Root(_))));
    }

    #[test]
    fn komposition_of_trivial() {
        let a = RootedDiagram::parse("Aa", "a").unwrap();
        let b = RootedDiagram::parse("Bb", "b").unwrap();
        let k = komposition(&a, &b);
        assert_eq!(k.diagram.to_string(), "Aa");
        assert_eq!(k.root, 0);
    }

    #[test]
    fn smoothing_examples() {
        let aa = FramedChordDiagram::parse("Aa").unwrap();
        assert!(smoothing(&aa, 0).unwrap().is_empty());
        let d = FramedChordDiagram::parse("AbaB").unwrap();
        let s = smoothing(&d, 0).unwrap();
        assert_eq!(s.n(), 1);
        assert_eq!(s.canonical_form(CanonFlags::ALL), "Aa");
    }

    #[test]
    fn local_complement_examples() {
        let d = ChordDiagram::parse("abab").unwrap();
        let l = d.local_complement(0).unwrap();
        assert_eq!(l.interlace_graph(), d.interlace_graph());
        let t = ChordDiagram::parse("abcabc").unwrap();
        let l = t.local_complement(0).unwrap();
        assert_eq!(l.interlace_graph(), SimpleGraph::complete(3).local_complement(0));
    }

    #[test]
    fn composition_unit_and_arity() {
        let c0 = RootedDiagram::parse("AbCaBc", "a").unwrap();
        let parts = vec![RootedDiagram::unit(), RootedDiagram::unit()];
        let r = compose_diagrams(&c0, &parts).unwrap();
        assert_eq!(r.diagram, c0.diagram.normalized());
        assert!(matches!(compose_diagrams(&c0, &parts[..1]), Err(Error::Arity { .. })));
    }

    #[test]
    fn composition_k2_with_k2() {
        let c0 = RootedDiagram::parse("ABab", "a").unwrap();
        let part = RootedDiagram::parse("CDcd", "c").unwrap();
        let r = compose_diagrams(&c0, std::slice::from_ref(&part)).unwrap();
        let g = r.diagram.interlace_graph();
        let expect = crate::graph::compose_graphs(
            &c0.diagram.interlace_graph(),
            0,
            &[(part.diagram.interlace_graph(), 0)],
        )
        .unwrap();
        assert_eq!(g, expect);
    }

    #[test]
    fn mutation_group_law() {
        use MutationElement::*;
        for g in MutationElement::ALL {
            assert_eq!(g.compose(g), Identity);
            assert_eq!(g.compose(Identity), g);
        }
        assert_eq!(Swap.compose(ReverseBoth), SwapReverse);
    }

    #[test]
    fn mutation_rejects_open_intervals() {
        let d = ChordDiagram::parse("abab").unwrap();
        let p = IntervalPair { first: (0, 1), second: None };
        assert!(matches!(mutate(&d, &p, MutationElement::Swap), Err(Error::Interval(_))));
        let id = IntervalPair { first: (0, 2), second: Some((2, 2)) };
        assert!(mutate(&d, &id, MutationElement::Identity).is_err());
    }
}
