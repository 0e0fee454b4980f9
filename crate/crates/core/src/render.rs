//! Text and picture formats: word lines, DOT graphs, SVG chord diagrams.

use std::f64::consts::PI;
use std::fmt::{self, Write as _};

use crate::chord::{ChordDiagram, FramedChordDiagram};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::ribbon::Bicolouring;

/// One line of the word format: `AbaB` or `AbaB root=a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordLine {
    pub diagram: FramedChordDiagram,
    pub root: Option<u32>,
}

impl WordLine {
    /// Without any uppercase letter the word is unframed and gets the
    /// framing with `Inf` on first occurrences.
    pub fn parse(line: &str) -> Result<Self> {
        let mut word = String::new();
        let mut root_name = None;
        for part in line.split_whitespace() {
            if let Some(r) = part.strip_prefix("root=") {
                if root_name.replace(r.to_string()).is_some() {
                    return Err(Error::Parse(line.to_string()));
                }
            } else {
                word.push_str(part);
            }
        }
        let diagram = if word.chars().any(|c| c.is_ascii_uppercase()) {
            FramedChordDiagram::parse(&word)?
        } else {
            FramedChordDiagram::unframed(&ChordDiagram::parse(&word)?)
        };
        let root = match root_name {
            Some(r) => Some(diagram.diagram().chord_by_name(&r.to_ascii_lowercase()).ok_or(Error::Root(r))?),
            None => None,
        };
        Ok(WordLine { diagram, root })
    }
}

impl fmt::Display for WordLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.diagram)?;
        if let Some(r) = self.root {
            write!(f, " root={}", self.diagram.diagram().name(r))?;
        }
        Ok(())
    }
}

/// Parse every non-empty line not starting with `#`.
pub fn parse_word_lines(text: &str) -> Result<Vec<WordLine>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(WordLine::parse)
        .collect()
}

/// Optional vertex decorations for DOT output.
#[derive(Clone, Debug, Default)]
pub struct GraphDecor<'a> {
    pub labels: Option<&'a [String]>,
    pub weights: Option<&'a [i64]>,
    pub colouring: Option<&'a Bicolouring>,
}

pub fn graph_dot(g: &SimpleGraph, decor: &GraphDecor<'_>) -> String {
    let mut s = String::from("graph G {\n");
    for v in 0..g.n() {
        let mut label = match decor.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        };
        if let Some(w) = decor.weights {
            let _ = write!(label, ":{}", w[v]);
        }
        let _ = write!(s, "  {v} [label=\"{label}\"");
        if let Some(c) = decor.colouring {
            let fill = if c.is_black(v) { "black" } else { "white" };
            let font = if c.is_black(v) { "white" } else { "black" };
            let _ = write!(s, ",style=filled,fillcolor={fill},fontcolor={font}");
        }
        s.push_str("];\n");
    }
    for (a, b) in g.edges() {
        let _ = writeln!(s, "  {a} -- {b};");
    }
    s.push_str("}\n");
    s
}

/// Slots on a circle, chords as curves through the interior; `Inf` ends are
/// filled dots, `Zero` ends open dots.
pub fn chord_svg(c: &FramedChordDiagram) -> String {
    let size = 320.0;
    let centre = size / 2.0;
    let radius = 120.0;
    let len = c.len().max(1);
    let point = |i: usize, r: f64| {
        let t = 2.0 * PI * i as f64 / len as f64 - PI / 2.0;
        (centre + r * t.cos(), centre + r * t.sin())
    };
    let mut s = String::new();
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{size}\" height=\"{size}\" viewBox=\"0 0 {size} {size}\">"
    );
    let _ = writeln!(
        s,
        "  <circle cx=\"{centre}\" cy=\"{centre}\" r=\"{radius}\" fill=\"none\" stroke=\"black\"/>"
    );
    for [a, b] in c.diagram().occurrences() {
        let (x1, y1) = point(a, radius);
        let (x2, y2) = point(b, radius);
        // control point pulled toward the centre
        let (mx, my) = ((x1 + x2) / 2.0, (y1 + y2) / 2.0);
        let (cx, cy) = (centre + (mx - centre) * 0.3, centre + (my - centre) * 0.3);
        let _ = writeln!(
            s,
            "  <path d=\"M {x1:.2} {y1:.2} Q {cx:.2} {cy:.2} {x2:.2} {y2:.2}\" fill=\"none\" stroke=\"steelblue\"/>"
        );
    }
    for i in 0..c.len() {
        let (x, y) = point(i, radius);
        let fill = if c.frame(i).is_inf() { "black" } else { "white" };
        let _ = writeln!(
            s,
            "  <circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"4\" fill=\"{fill}\" stroke=\"black\"/>"
        );
        let (tx, ty) = point(i, radius + 16.0);
        let name = c.diagram().name(c.word()[i]);
        let name = if c.frame(i).is_inf() { name.to_ascii_uppercase() } else { name.to_string() };
        let _ = writeln!(
            s,
            "  <text x=\"{tx:.2}\" y=\"{ty:.2}\" font-size=\"12\" text-anchor=\"middle\" dominant-baseline=\"middle\">{name}</text>"
        );
    }
    s.push_str("</svg>\n");
    s
}
