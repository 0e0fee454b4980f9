use std::io::Write;

use filoop::forms::{check_en1, check_en2, check_rc, is_gaussian, min_genus, rosenstiehl, solve_cl2};
use filoop::generate::{generate_gaussian, generate_gaussian_chordiagraphs, tabulate_spheriloops};
use filoop::gf2::BitMatrix;
use filoop::glt::{compute_weights, cunningham, gaussian_via_glt};
use filoop::realize::{certify_prime, enumerate_realizations, enumerate_spheriloops, is_circle_graph, min_genus_framings, spheriloop_classes};
use filoop::render::{chord_svg, graph_dot, GraphDecor};
use filoop::ribbon::{bicolourings, face_count, intersection_form, is_bicolourable};
use filoop::{ChordDiagram, Error, FramedChordDiagram, SimpleGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::input::{self, GraphInput};
use crate::CliError;

type Res = Result<(), CliError>;

fn emit(out: &mut dyn Write, v: &Value) -> Res {
    writeln!(out, "{v}")?;
    Ok(())
}

fn rows(m: &BitMatrix) -> Vec<String> {
    (0..m.nrows())
        .map(|x| (0..m.ncols()).map(|y| if m.get(x, y) { '1' } else { '0' }).collect())
        .collect()
}

fn word_of(g: &GraphInput) -> Value {
    match &g.word {
        Some(w) => json!(w.diagram.to_string()),
        None => Value::Null,
    }
}

/// Chord `v` renamed after vertex `v` when the graph came from a word.
fn rename(d: &ChordDiagram, g: &GraphInput) -> Result<ChordDiagram, CliError> {
    match &g.word {
        Some(w) => Ok(ChordDiagram::with_names(d.word().to_vec(), w.diagram.diagram().names().to_vec())?),
        None => Ok(d.clone()),
    }
}

fn rename_framed(f: &FramedChordDiagram, g: &GraphInput) -> Result<FramedChordDiagram, CliError> {
    Ok(FramedChordDiagram::new(rename(f.diagram(), g)?, f.frames().to_vec())?)
}

fn names(g: &GraphInput, set: impl Iterator<Item = usize>) -> Vec<String> {
    set.map(|v| match &g.labels {
        Some(l) => l[v].clone(),
        None => v.to_string(),
    })
    .collect()
}

pub fn validate(arg: Option<&str>, random: Option<usize>, seed: u64, out: &mut dyn Write) -> Res {
    if arg.is_none() && random.is_none() {
        return Err(Error::Input("nothing to validate: give an input or --random N".into()).into());
    }
    if let Some(arg) = arg {
        let text = input::read_text(arg)?;
        if input::is_json(&text) {
            for g in input::graphs(&text)? {
                emit(out, &json!({"n": g.graph.n(), "edges": g.graph.edge_count(), "connected": g.graph.is_connected()}))?;
            }
        } else {
            for w in input::words(&text)? {
                let root = w.root.map(|r| w.diagram.diagram().name(r).to_string());
                emit(out, &json!({"word": w.diagram.to_string(), "n": w.diagram.n(), "root": root}))?;
            }
        }
    }
    if let Some(count) = random {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let graphs: Vec<SimpleGraph> = (0..count).map(|_| random_connected(&mut rng, 10)).collect();
        let failures: Vec<usize> = graphs
            .par_iter()
            .enumerate()
            .filter(|(_, g)| !self_check(g))
            .map(|(i, _)| i)
            .collect();
        emit(out, &json!({"seed": seed, "graphs": count, "failures": failures.len()}))?;
        if !failures.is_empty() {
            return Err(CliError::Check(format!("self-check failed on random graphs {failures:?}")));
        }
    }
    Ok(())
}

fn random_connected(rng: &mut ChaCha8Rng, max_n: usize) -> SimpleGraph {
    let n = rng.gen_range(1..=max_n);
    loop {
        let mut g = SimpleGraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.5) {
                    g.add_edge(u, v);
                }
            }
        }
        if g.is_connected() {
            return g;
        }
    }
}

/// Decomposition round trip, Gaussian test via weights, realizations.
fn self_check(g: &SimpleGraph) -> bool {
    let Ok(t) = cunningham(g) else { return false };
    if t.accessibility().ok().as_ref() != Some(g) || !t.is_reduced() {
        return false;
    }
    if gaussian_via_glt(&compute_weights(&t)).ok() != Some(is_gaussian(g)) {
        return false;
    }
    match enumerate_realizations(g) {
        Ok(set) => !set.diagrams.is_empty() && set.diagrams.iter().all(|d| &d.interlace_graph() == g),
        Err(Error::NotCircleGraph) => !is_circle_graph(g),
        Err(_) => false,
    }
}

pub fn genus(arg: &str, out: &mut dyn Write) -> Res {
    for w in input::words(&input::read_text(arg)?)? {
        let f = &w.diagram;
        emit(out, &json!({"word": f.to_string(), "n": f.n(), "f": face_count(f), "g": f.genus()}))?;
    }
    Ok(())
}

pub fn interlace(arg: &str, dot: bool, out: &mut dyn Write) -> Res {
    for g in input::graphs(&input::read_text(arg)?)? {
        if dot {
            let decor = GraphDecor { labels: g.labels.as_deref(), ..Default::default() };
            write!(out, "{}", graph_dot(&g.graph, &decor))?;
        } else {
            let mut j = g.graph.to_json();
            j.labels = g.labels.clone();
            emit(out, &serde_json::to_value(j).expect("graph JSON"))?;
        }
    }
    Ok(())
}

pub fn forms(arg: &str, out: &mut dyn Write) -> Res {
    for g in input::graphs(&input::read_text(arg)?)? {
        let graph = &g.graph;
        let cl2 = solve_cl2(graph).map(|space| {
            let examples: Vec<Vec<u8>> = space.iter().take(8).map(|w| (0..graph.n()).map(|v| (w >> v & 1) as u8).collect()).collect();
            json!({"dim": space.dim(), "weightings": examples})
        });
        let mut v = json!({
            "word": word_of(&g),
            "n": graph.n(),
            "en1": check_en1(graph),
            "en2": check_en2(graph),
            "rc": check_rc(graph),
            "gaussian": is_gaussian(graph),
            "rosenstiehl": rows(&rosenstiehl(graph)),
            "cl2": cl2,
        });
        if let Some(w) = &g.word {
            let form = is_bicolourable(graph).then(|| rows(&intersection_form(&w.diagram)));
            v["intersection_form"] = json!(form);
            v["genus"] = json!(w.diagram.genus());
        }
        emit(out, &v)?;
    }
    Ok(())
}

pub fn mingenus(arg: &str, out: &mut dyn Write) -> Res {
    for g in input::graphs(&input::read_text(arg)?)? {
        let m = min_genus(&g.graph)?;
        let colourings: Vec<Vec<String>> = m
            .colourings
            .iter()
            .map(|c| names(&g, (0..g.graph.n()).filter(|&v| c.is_black(v))))
            .collect();
        let mut v = json!({"word": word_of(&g), "genus": m.genus, "colourings": colourings});
        if let Some(w) = &g.word {
            let framings = min_genus_framings(w.diagram.diagram())?
                .into_iter()
                .map(|(f, _)| f.to_string())
                .collect::<Vec<_>>();
            v["framings"] = json!(framings);
        }
        emit(out, &v)?;
    }
    Ok(())
}

pub fn decompose(arg: &str, dot: bool, out: &mut dyn Write) -> Res {
    for g in input::graphs(&input::read_text(arg)?)? {
        let t = cunningham(&g.graph)?;
        let w = compute_weights(&t);
        if dot {
            write!(out, "{}", t.to_dot(Some(&w.weights)))?;
        } else {
            let v = json!({
                "glt": serde_json::to_value(t.to_json()).expect("GLT JSON"),
                "weights": w.weights,
                "canonical": w.canonical_form(),
                "gaussian": gaussian_via_glt(&w)?,
            });
            emit(out, &v)?;
        }
    }
    Ok(())
}

pub fn realize(arg: &str, certify_unique: bool, out: &mut dyn Write) -> Res {
    for g in input::graphs(&input::read_text(arg)?)? {
        let diagrams = if certify_unique {
            let all = certify_prime(&g.graph)?;
            match all.len() {
                0 => return Err(Error::NotCircleGraph.into()),
                1 => all,
                k => return Err(CliError::Check(format!("prime graph with {k} realizations"))),
            }
        } else {
            enumerate_realizations(&g.graph)?.diagrams
        };
        for d in &diagrams {
            writeln!(out, "{}", rename(d, &g)?)?;
        }
    }
    Ok(())
}

pub fn spheriloops(arg: &str, out: &mut dyn Write) -> Res {
    for g in input::graphs(&input::read_text(arg)?)? {
        for f in enumerate_spheriloops(&g.graph)? {
            writeln!(out, "{}", rename_framed(&f, &g)?)?;
        }
    }
    Ok(())
}

pub fn generate(max_n: usize, chordiagraphs: bool, spheriloops: bool, out: &mut dyn Write) -> Res {
    let generation = if chordiagraphs || spheriloops {
        generate_gaussian_chordiagraphs(max_n)
    } else {
        generate_gaussian(max_n)
    };
    if spheriloops {
        let classes: Vec<Vec<String>> = generation
            .graphs
            .par_iter()
            .map(|g| enumerate_spheriloops(g).map(|loops| spheriloop_classes(&loops)))
            .collect::<Result<_, _>>()?;
        for word in classes.iter().flatten() {
            writeln!(out, "{word}")?;
        }
    } else {
        for g in &generation.graphs {
            emit(out, &serde_json::to_value(g.to_json()).expect("graph JSON"))?;
        }
    }
    Ok(())
}

pub fn tabulate(max_n: usize, graphs: bool, out: &mut dyn Write) -> Res {
    writeln!(out, "n,count")?;
    let table = if graphs {
        let generation = generate_gaussian(max_n);
        (1..=max_n).map(|n| (n, generation.graphs.iter().filter(|g| g.n() == n).count())).collect()
    } else {
        tabulate_spheriloops(max_n)
    };
    for (n, count) in table {
        writeln!(out, "{n},{count}")?;
    }
    Ok(())
}

pub fn render(arg: &str, dot: bool, out: &mut dyn Write) -> Res {
    let text = input::read_text(arg)?;
    if dot {
        for g in input::graphs(&text)? {
            let colouring = g.word.as_ref().and_then(|w| bicolourings(&w.diagram).ok()).map(|(b, _)| b);
            let decor = GraphDecor {
                labels: g.labels.as_deref(),
                weights: g.weights.as_deref(),
                colouring: colouring.as_ref(),
            };
            write!(out, "{}", graph_dot(&g.graph, &decor))?;
        }
        return Ok(());
    }
    let words = input::words(&text)?;
    if words.len() != 1 {
        return Err(Error::Input(format!("render takes one diagram, got {}", words.len())).into());
    }
    write!(out, "{}", chord_svg(&words[0].diagram))?;
    Ok(())
}
