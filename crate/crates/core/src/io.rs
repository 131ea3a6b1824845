//! JSON formats for graphs, colorings, lists, and decomposition trees.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::color::ListAssignment;
use crate::graph::{Coloring, SignedGraph};
use crate::k5::{DecompositionTree, Join, Leaf, LeafKind};
use crate::planar::RotationSystem;
use crate::{Error, Result};

/// Graph file: `vertex_count`, `edges` as `[u, v, sign]` triples, optional
/// embedding (`rotation` cyclic neighbor lists, `outer_face` vertex cycle).
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GraphFile {
    pub vertex_count: usize,
    pub edges: Vec<(usize, usize, i8)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rotation: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub outer_face: Option<Vec<usize>>,
}

impl GraphFile {
    pub fn from_graph(g: &SignedGraph) -> Self {
        GraphFile {
            vertex_count: g.vertex_count(),
            edges: g.edges().collect(),
            rotation: None,
            outer_face: None,
        }
    }

    pub fn with_embedding(g: &SignedGraph, rs: &RotationSystem) -> Self {
        GraphFile {
            vertex_count: g.vertex_count(),
            edges: g.edges().collect(),
            rotation: Some(rs.rotation.clone()),
            outer_face: Some(rs.outer_face.clone()),
        }
    }

    pub fn to_graph(&self) -> Result<SignedGraph> {
        SignedGraph::from_edges(self.vertex_count, &self.edges)
    }

    pub fn embedding(&self) -> Result<Option<RotationSystem>> {
        let rotation = match &self.rotation {
            Some(r) => r.clone(),
            None => return Ok(None),
        };
        if rotation.len() != self.vertex_count {
            return Err(Error::MalformedRotation(format!(
                "rotation has {} entries for {} vertices",
                rotation.len(),
                self.vertex_count
            )));
        }
        let outer_face = self.outer_face.clone().unwrap_or_default();
        Ok(Some(RotationSystem {
            rotation,
            outer_face,
        }))
    }
}

/// Coloring file: the domain size `n` and `colors` indexed by vertex.
/// Uncolored vertices (outside a partial coloring's support) hold `null`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ColoringFile {
    pub n: u32,
    pub colors: Vec<Option<i32>>,
}

impl ColoringFile {
    pub fn from_coloring(c: &Coloring, vertex_count: usize) -> Self {
        let len = vertex_count.max(c.support().max().map_or(0, |v| v + 1));
        ColoringFile {
            n: c.domain().n(),
            colors: (0..len).map(|v| c.get(v)).collect(),
        }
    }

    pub fn to_coloring(&self) -> Result<Coloring> {
        let domain = crate::graph::ColorDomain::new(self.n)?;
        let mut c = Coloring::new(domain);
        for (v, col) in self.colors.iter().enumerate() {
            if let Some(col) = *col {
                if !c.domain().contains(col) {
                    return Err(Error::Parse(format!(
                        "color {} at vertex {} is outside M_{}",
                        col, v, self.n
                    )));
                }
                c.set(v, col);
            }
        }
        Ok(c)
    }
}

/// Lists file: map from vertex id to candidate colors.
pub fn lists_to_json(lists: &ListAssignment) -> BTreeMap<String, Vec<i32>> {
    lists
        .iter()
        .map(|(v, l)| (v.to_string(), l.to_vec()))
        .collect()
}

pub fn lists_from_json(map: &BTreeMap<String, Vec<i32>>) -> Result<ListAssignment> {
    let mut out = ListAssignment::new();
    for (k, l) in map {
        let v: usize = k
            .parse()
            .map_err(|_| Error::Parse(format!("bad vertex id {:?} in lists", k)))?;
        out.set(v, l.clone());
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct LeafFile {
    pub vertices: Vec<usize>,
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rotation: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub outer_face: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wagner_map: Option<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct JoinFile {
    pub left: usize,
    pub right: usize,
    pub shared: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct DecompositionFile {
    pub leaves: Vec<LeafFile>,
    pub joins: Vec<JoinFile>,
}

impl DecompositionFile {
    pub fn from_tree(t: &DecompositionTree) -> Self {
        DecompositionFile {
            leaves: t
                .leaves
                .iter()
                .map(|l| LeafFile {
                    vertices: l.vertices.clone(),
                    kind: match l.kind {
                        LeafKind::Triangulation => "triangulation".into(),
                        LeafKind::Wagner => "wagner".into(),
                    },
                    rotation: l.rotation.as_ref().map(|r| r.rotation.clone()),
                    outer_face: l.rotation.as_ref().map(|r| r.outer_face.clone()),
                    wagner_map: l.wagner_map.clone(),
                })
                .collect(),
            joins: t
                .joins
                .iter()
                .map(|j| JoinFile {
                    left: j.left,
                    right: j.right,
                    shared: j.shared.clone(),
                })
                .collect(),
        }
    }

    pub fn to_tree(&self) -> Result<DecompositionTree> {
        let mut leaves = Vec::with_capacity(self.leaves.len());
        for l in &self.leaves {
            let kind = match l.kind.as_str() {
                "triangulation" => LeafKind::Triangulation,
                "wagner" => LeafKind::Wagner,
                other => return Err(Error::Parse(format!("unknown leaf kind {:?}", other))),
            };
            let rotation = match (&l.rotation, &l.outer_face) {
                (Some(r), Some(o)) => Some(RotationSystem {
                    rotation: r.clone(),
                    outer_face: o.clone(),
                }),
                (Some(r), None) => Some(RotationSystem {
                    rotation: r.clone(),
                    outer_face: Vec::new(),
                }),
                (None, _) => None,
            };
            leaves.push(Leaf {
                vertices: l.vertices.clone(),
                kind,
                rotation,
                wagner_map: l.wagner_map.clone(),
            });
        }
        let joins = self
            .joins
            .iter()
            .map(|j| Join {
                left: j.left,
                right: j.right,
                shared: j.shared.clone(),
            })
            .collect();
        Ok(DecompositionTree { leaves, joins })
    }
}

pub fn parse_graph(text: &str) -> Result<SignedGraph> {
    let f: GraphFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    f.to_graph()
}

pub fn parse_graph_file(text: &str) -> Result<GraphFile> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn parse_coloring(text: &str) -> Result<Coloring> {
    let f: ColoringFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    f.to_coloring()
}

pub fn parse_lists(text: &str) -> Result<ListAssignment> {
    let map: BTreeMap<String, Vec<i32>> =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    lists_from_json(&map)
}

pub fn parse_decomposition(text: &str) -> Result<DecompositionTree> {
    let f: DecompositionFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    f.to_tree()
}
