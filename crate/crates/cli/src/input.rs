use std::io::Read;
use std::path::Path;

use filoop::graph::GraphJson;
use filoop::render::{parse_word_lines, WordLine};
use filoop::{Error, SimpleGraph};

use crate::CliError;

/// `-` reads stdin, an existing path reads the file, anything else is inline.
pub fn read_text(arg: &str) -> Result<String, CliError> {
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else if Path::new(arg).is_file() {
        Ok(std::fs::read_to_string(arg)?)
    } else {
        Ok(arg.to_string())
    }
}

pub fn is_json(text: &str) -> bool {
    text.trim_start().starts_with('{')
}

pub fn words(text: &str) -> Result<Vec<WordLine>, CliError> {
    if is_json(text) {
        return Err(Error::Input("expected words, got JSON".into()).into());
    }
    let lines = parse_word_lines(text)?;
    if lines.is_empty() {
        return Err(Error::Input("no input".into()).into());
    }
    Ok(lines)
}

/// A graph with optional labels and weights, from JSON or as the interlace
/// graph of a word.
pub struct GraphInput {
    pub graph: SimpleGraph,
    pub labels: Option<Vec<String>>,
    pub weights: Option<Vec<i64>>,
    pub word: Option<WordLine>,
}

/// One JSON object, JSON lines, or word lines.
pub fn graphs(text: &str) -> Result<Vec<GraphInput>, CliError> {
    if !is_json(text) {
        return Ok(words(text)?
            .into_iter()
            .map(|w| GraphInput {
                graph: w.diagram.interlace_graph(),
                labels: Some(w.diagram.diagram().names().to_vec()),
                weights: None,
                word: Some(w),
            })
            .collect());
    }
    let docs: Vec<GraphJson> = match serde_json::from_str(text) {
        Ok(one) => vec![one],
        Err(_) => text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(serde_json::from_str)
            .collect::<Result<_, _>>()
            .map_err(|e| Error::Parse(e.to_string()))?,
    };
    docs.into_iter()
        .map(|j| {
            Ok(GraphInput {
                graph: j.to_graph()?,
                labels: j.labels,
                weights: j.weights,
                word: None,
            })
        })
        .collect()
}
