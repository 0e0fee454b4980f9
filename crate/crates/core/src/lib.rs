//! Framed chord diagrams, ribbon genus, interlace-graph forms, split
//! decomposition, realization and generation of Gaussian graphs.

pub mod canon;
pub mod chord;
pub mod error;
pub mod forms;
pub mod generate;
pub mod gf2;
pub mod glt;
pub mod graph;
pub mod realize;
pub mod render;
pub mod ribbon;
pub mod split;

pub use chord::{ChordDiagram, Frame, FramedChordDiagram, LinearChordDiagram, RootedDiagram};
pub use error::{Error, Result};
pub use generate::{Atom, Generation, Molecule};
pub use glt::{Endpoint, GraphLabelledTree, WeightedGlt};
pub use graph::SimpleGraph;
pub use realize::RealizationSet;
pub use ribbon::Bicolouring;
pub use split::{FactorKind, Split};
