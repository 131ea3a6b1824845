//! Signed tree-colorings of signed graphs.
//!
//! A signed graph carries a sign in `{+1, -1}` on every edge. A tree-coloring
//! assigns each vertex a value from the symmetric color set `M_n` so that
//! every class subgraph (vertices colored `i` or `-i`, positive edges with
//! like colors, negative edges with opposite colors) is a forest. This crate
//! provides the data model and checkers, switching and balance machinery,
//! rotation-system embeddings, constructive colorings of balanced
//! near-triangulations and clique-sums of triangulations and Wagner graphs,
//! and a brute-force vertex-arboricity oracle for cross-validation at small
//! scale.

pub mod color;
pub mod dsu;
pub mod graph;
pub mod io;
pub mod k5;
pub mod oracle;
pub mod planar;
pub mod props;
pub mod switch;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("invalid sign {0}; expected 1 or -1")]
    InvalidSign(i8),
    #[error("invalid color domain size {0}")]
    InvalidDomain(u32),
    #[error("class {0} is not representable in the color domain")]
    InvalidClass(u32),
    #[error("coloring is not total: vertex {0} is uncolored")]
    NotTotal(usize),
    #[error("malformed rotation system: {0}")]
    MalformedRotation(String),
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not planar")]
    NonPlanar,
    #[error("not a near-triangulation: {0}")]
    NotNearTriangulation(String),
    #[error("vertex {0} is not on the outer face")]
    NotOnOuterFace(usize),
    #[error("signature is not balanced")]
    NotBalanced,
    #[error("invalid list assignment: {0}")]
    InvalidLists(String),
    #[error("the precolored triangle is not itself tree-colored")]
    PrecolorInvalid,
    #[error("graph is not the canonical Wagner graph")]
    NotWagner,
    #[error("pinned pair {0},{1} is not an edge")]
    BadPin(usize, usize),
    #[error("shared subgraph is not a K2 or K3 clique: {0}")]
    SharedCliqueMismatch(String),
    #[error("colorings disagree at vertex {0}")]
    ColoringsDisagree(usize),
    #[error("not decomposable into triangulation and Wagner leaves: {0}")]
    NotDecomposable(String),
    #[error("list at vertex {0} is too small")]
    ListTooSmall(usize),
    #[error("no tree-coloring found up to n = {0}")]
    Exhausted(u32),
    #[error("instance exceeds oracle cap: {0}")]
    CapExceeded(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal defect: {0}")]
    Defect(String),
}

pub type Result<T> = std::result::Result<T, Error>;
