//! Seeded property suites shared by the CLI `property` subcommand and the
//! acceptance tests: each runner generates instances, exercises the
//! algorithms, and certifies every output against the checkers.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::color::{combine_colorings, tree_color_near_triangulation, tree_color_wagner,
    wagner_edges, ListAssignment};
use crate::graph::{is_signed_tree_coloring, va_upper_check, SignedGraph};
use crate::io::GraphFile;
use crate::k5::{color_leaf, leaf_graph, va_signed_upper3, Leaf, LeafKind};
use crate::oracle::{generate_balanced, generate_triangulation, oracle_va, oracle_va_unsigned};
use crate::planar::{planar_embed, NearTriangulation};
use crate::switch::switching_orbit_sample;
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: String,
    pub count: usize,
    pub passed: usize,
    /// One entry per failing instance: a short reason plus the instance as a
    /// graph-file JSON string for replay.
    pub failures: Vec<(String, String)>,
    pub seed: u64,
}

impl SuiteReport {
    fn new(suite: &str, count: usize, seed: u64) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            count,
            passed: 0,
            failures: Vec::new(),
            seed,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.passed == self.count && self.failures.is_empty()
    }
}

fn record(report: &mut SuiteReport, g: &SignedGraph, outcome: Result<()>) {
    match outcome {
        Ok(()) => report.passed += 1,
        Err(e) => {
            let json = serde_json::to_string(&GraphFile::from_graph(g))
                .unwrap_or_else(|_| "<unserializable>".into());
            report.failures.push((e.to_string(), json));
        }
    }
}

fn m3_values() -> Vec<i32> {
    vec![0, 1, -1]
}

/// Balanced signed triangulations, lists M_3 with the first two outer
/// vertices pinned, colored by the near-triangulation algorithm.
pub fn suite_triangulation(count: usize, seed: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new("triangulation", count, seed);
    for _ in 0..count {
        let n = rng.gen_range(4..=14);
        let flips = rng.gen_range(0..n);
        let s1 = rng.gen::<u64>();
        let s2 = rng.gen::<u64>();
        let pin_a = *m3_values().choose(&mut rng).unwrap();
        let pin_b = *m3_values().choose(&mut rng).unwrap();
        let outcome = (|| -> Result<SignedGraph> {
            let (edges, rs) = generate_triangulation(n, flips, s1)?;
            let g = generate_balanced(n, &edges, s2)?;
            let nt = NearTriangulation::new(g.clone(), rs)?;
            let mut lists = ListAssignment::uniform_domain(n, 3)?;
            lists.set(nt.outer_face()[0], vec![pin_a]);
            lists.set(nt.outer_face()[1], vec![pin_b]);
            let c = tree_color_near_triangulation(&nt, &lists)?;
            if !va_upper_check(&g, &c, 3) {
                return Err(Error::Defect("coloring does not certify va <= 3".into()));
            }
            Ok(g)
        })();
        match outcome {
            Ok(_) => report.passed += 1,
            Err(e) => report.failures.push((e.to_string(), format!("n={} flips={} seeds=({},{})", n, flips, s1, s2))),
        }
    }
    report
}

fn random_graph(rng: &mut ChaCha8Rng, signed: bool) -> SignedGraph {
    let n = rng.gen_range(4..=8usize);
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(rng);
    let m = rng.gen_range(3..=14.min(pairs.len()));
    let mut g = SignedGraph::new(n);
    for &(u, v) in pairs.iter().take(m) {
        let s = if signed && rng.gen::<bool>() { -1 } else { 1 };
        g.add_edge(u, v, s).unwrap();
    }
    g
}

/// Switching invariance: the exact arboricity is constant across random
/// members of the switching orbit.
pub fn suite_switching(count: usize, seed: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new("switching", count, seed);
    for _ in 0..count {
        let g = random_graph(&mut rng, true);
        let orbit_seed = rng.gen::<u64>();
        let outcome = (|| -> Result<()> {
            let base = oracle_va(&g, 4).map(|r| r.va);
            for h in switching_orbit_sample(&g, 3, orbit_seed) {
                let other = oracle_va(&h, 4).map(|r| r.va);
                let same = match (&base, &other) {
                    (Ok(a), Ok(b)) => a == b,
                    (Err(Error::Exhausted(_)), Err(Error::Exhausted(_))) => true,
                    _ => false,
                };
                if !same {
                    return Err(Error::Defect(format!(
                        "orbit disagreement: {:?} vs {:?}",
                        base.as_ref().ok(),
                        other.as_ref().ok()
                    )));
                }
            }
            Ok(())
        })();
        record(&mut report, &g, outcome);
    }
    report
}

/// All-positive signatures: the signed oracle agrees with the unsigned one.
pub fn suite_allpositive(count: usize, seed: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new("allpositive", count, seed);
    for _ in 0..count {
        let g = random_graph(&mut rng, false);
        let outcome = (|| -> Result<()> {
            let signed = oracle_va(&g, 4)?.va;
            let edges: Vec<(usize, usize)> = g.edges().map(|(u, v, _)| (u, v)).collect();
            let unsigned = oracle_va_unsigned(&edges, 4)?;
            if signed != unsigned {
                return Err(Error::Defect(format!(
                    "signed {} != unsigned {}",
                    signed, unsigned
                )));
            }
            Ok(())
        })();
        record(&mut report, &g, outcome);
    }
    report
}

/// Builds a random clique-sum of triangulation and Wagner leaves, glued
/// edge-to-edge, with a balanced signature from a random potential.
fn random_clique_sum(rng: &mut ChaCha8Rng) -> Result<SignedGraph> {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut vcount: usize;

    let first_wagner = rng.gen_ratio(1, 4);
    if first_wagner {
        edges.extend(wagner_edges());
        vcount = 8;
    } else {
        let n = rng.gen_range(4..=8usize);
        let (e, _) = generate_triangulation(n, rng.gen_range(0..3), rng.gen::<u64>())?;
        edges.extend(e);
        vcount = n;
    }

    let extra_leaves = rng.gen_range(1..=3usize);
    for _ in 0..extra_leaves {
        let (a, b) = *edges.choose(&mut *rng).unwrap();
        let (leaf_edges, glue): (Vec<(usize, usize)>, (usize, usize)) = if rng.gen_ratio(1, 4) {
            (wagner_edges(), (0, 1))
        } else {
            let n = rng.gen_range(4..=8usize);
            let (e, _) = generate_triangulation(n, rng.gen_range(0..3), rng.gen::<u64>())?;
            let glue = *e.choose(&mut *rng).unwrap();
            (e, glue)
        };
        let leaf_n = leaf_edges
            .iter()
            .map(|&(u, v)| u.max(v) + 1)
            .max()
            .unwrap();
        let mut relabel = vec![usize::MAX; leaf_n];
        relabel[glue.0] = a;
        relabel[glue.1] = b;
        for slot in relabel.iter_mut() {
            if *slot == usize::MAX {
                *slot = vcount;
                vcount += 1;
            }
        }
        for &(u, v) in &leaf_edges {
            if (u, v) == glue {
                continue;
            }
            edges.push((relabel[u], relabel[v]));
        }
    }
    generate_balanced(vcount, &edges, rng.gen::<u64>())
}

/// Clique-sum bound: the pipeline produces certified
/// tree-3-colorings on random chains of triangulation/Wagner leaves.
pub fn suite_k5(count: usize, seed: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new("k5", count, seed);
    for _ in 0..count {
        match random_clique_sum(&mut rng) {
            Ok(g) => {
                let outcome = (|| -> Result<()> {
                    let c = va_signed_upper3(&g, None)?;
                    if !va_upper_check(&g, &c, 3) {
                        return Err(Error::Defect("coloring does not certify va <= 3".into()));
                    }
                    Ok(())
                })();
                record(&mut report, &g, outcome);
            }
            Err(e) => report.failures.push((e.to_string(), "<generator>".into())),
        }
    }
    report
}

/// Wagner coloring: random signature, random pinned edge with pin colors
/// from the pinned vertices' lists, random 3-element lists elsewhere.
pub fn suite_wagner(count: usize, seed: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new("wagner", count, seed);
    let palette: Vec<i32> = vec![0, 1, -1, 2, -2];
    for _ in 0..count {
        let mut g = SignedGraph::new(8);
        for (u, v) in wagner_edges() {
            let s = if rng.gen::<bool>() { 1 } else { -1 };
            g.add_edge(u, v, s).unwrap();
        }
        let pin_edge = *wagner_edges().choose(&mut rng).unwrap();
        let mut lists = ListAssignment::new();
        for v in 0..8 {
            let mut p = palette.clone();
            p.shuffle(&mut rng);
            lists.set(v, p[..3].to_vec());
        }
        let alpha = *lists.get(pin_edge.0).unwrap().choose(&mut rng).unwrap();
        let beta = *lists.get(pin_edge.1).unwrap().choose(&mut rng).unwrap();
        let outcome = (|| -> Result<()> {
            let c = tree_color_wagner(&g, (pin_edge.0, pin_edge.1, alpha, beta), &lists)?;
            for v in 0..8 {
                let got = c.get(v).ok_or(Error::NotTotal(v))?;
                if !lists.get(v).unwrap().contains(&got) {
                    return Err(Error::Defect(format!("vertex {} colored off-list", v)));
                }
            }
            if !is_signed_tree_coloring(&g, &c) {
                return Err(Error::Defect("wagner coloring failed the checker".into()));
            }
            Ok(())
        })();
        record(&mut report, &g, outcome);
    }
    report
}

/// Pairs of balanced colored graphs sharing a K2 or K3 with agreeing
/// colorings, glued by the combiner.
pub fn suite_combine(count: usize, seed: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new("combine", count, seed);
    for _ in 0..count {
        let outcome = build_combine_instance(&mut rng);
        match outcome {
            Ok(()) => report.passed += 1,
            Err(e) => report.failures.push((e.to_string(), "<constructed pair>".into())),
        }
    }
    report
}

fn build_combine_instance(rng: &mut ChaCha8Rng) -> Result<()> {
    // first piece: a triangulation
    let n1 = rng.gen_range(4..=8usize);
    let (e1, rs1) = generate_triangulation(n1, rng.gen_range(0..3), rng.gen::<u64>())?;

    // the share: a K3 (one of the first piece's faces) or a K2 (an edge)
    let share_k3 = rng.gen::<bool>();
    let shared: Vec<usize> = if share_k3 {
        let g1_plain = SignedGraph::all_positive(n1, &e1)?;
        let faces = crate::planar::trace_faces(&g1_plain, &rs1)?;
        faces.choose(&mut *rng).unwrap().clone()
    } else {
        let (a, b) = *e1.choose(&mut *rng).unwrap();
        vec![a, b]
    };

    // second piece glued on the share: a triangulation (either share size)
    // or a Wagner graph (K2 only, it has no triangles)
    let use_wagner = !share_k3 && rng.gen_ratio(1, 3);
    let mut edges: Vec<(usize, usize)> = e1.clone();
    let mut vcount = n1;
    let (leaf2_edges, glue): (Vec<(usize, usize)>, Vec<usize>) = if use_wagner {
        (wagner_edges(), vec![0, 1])
    } else {
        let n2 = rng.gen_range(4..=8usize);
        let (e2, rs2) = generate_triangulation(n2, rng.gen_range(0..3), rng.gen::<u64>())?;
        let glue = if share_k3 {
            let g2_plain = SignedGraph::all_positive(n2, &e2)?;
            let faces = crate::planar::trace_faces(&g2_plain, &rs2)?;
            faces.choose(&mut *rng).unwrap().clone()
        } else {
            let (a, b) = *e2.choose(&mut *rng).unwrap();
            vec![a, b]
        };
        (e2, glue)
    };
    let leaf2_n = leaf2_edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap();
    let mut relabel = vec![usize::MAX; leaf2_n];
    for (i, &lv) in glue.iter().enumerate() {
        relabel[lv] = shared[i];
    }
    let mut leaf2_vertices_set = BTreeSet::new();
    for slot in relabel.iter_mut() {
        if *slot == usize::MAX {
            *slot = vcount;
            vcount += 1;
        }
    }
    for &v in relabel.iter() {
        leaf2_vertices_set.insert(v);
    }
    for &(u, v) in &leaf2_edges {
        let (gu, gv) = (relabel[u].min(relabel[v]), relabel[u].max(relabel[v]));
        if !edges.contains(&(gu, gv)) {
            edges.push((gu, gv));
        }
    }

    // one balanced signature over the union keeps both pieces consistent
    let union = generate_balanced(vcount, &edges, rng.gen::<u64>())?;
    let lists = ListAssignment::uniform_domain(vcount, 3)?;

    let leaf1 = Leaf {
        vertices: (0..n1).collect(),
        kind: LeafKind::Triangulation,
        rotation: Some(rs1),
        wagner_map: None,
    };
    let leaf2_vertices: Vec<usize> = leaf2_vertices_set.into_iter().collect();
    let leaf2 = if use_wagner {
        let (local2, globals2) = union.induced(&leaf2_vertices)?;
        let map = crate::k5::wagner_isomorphism(&local2)
            .ok_or(Error::NotWagner)?;
        let _ = globals2;
        Leaf {
            vertices: leaf2_vertices,
            kind: LeafKind::Wagner,
            rotation: None,
            wagner_map: Some(map),
        }
    } else {
        let (local2, _) = union.induced(&leaf2_vertices)?;
        let rs = planar_embed(&local2)?;
        Leaf {
            vertices: leaf2_vertices,
            kind: LeafKind::Triangulation,
            rotation: Some(rs),
            wagner_map: None,
        }
    };

    let c1 = color_leaf(&union, &leaf1, &lists, &[])?;
    let pins: Vec<(usize, i32)> = shared
        .iter()
        .map(|&v| (v, c1.get(v).ok_or(Error::NotTotal(v))))
        .map(|(v, r)| r.map(|c| (v, c)))
        .collect::<Result<_>>()?;
    let c2 = color_leaf(&union, &leaf2, &lists, &pins)?;

    let g1 = leaf_graph(&union, &leaf1)?;
    let g2 = leaf_graph(&union, &leaf2)?;
    let (ug, uc) = combine_colorings(&g1, &c1, &g2, &c2)?;
    if !is_signed_tree_coloring(&ug, &uc) {
        return Err(Error::Defect("combined coloring failed the checker".into()));
    }
    Ok(())
}

/// Structural checks on generated triangulations and traced embeddings.
pub fn suite_generate(count: usize, seed: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new("generate", count, seed);
    for _ in 0..count {
        let n = rng.gen_range(4..=14usize);
        let flips = rng.gen_range(0..n);
        let s = rng.gen::<u64>();
        let outcome = (|| -> Result<()> {
            let (edges, rs) = generate_triangulation(n, flips, s)?;
            if edges.len() != 3 * n - 6 {
                return Err(Error::Defect(format!(
                    "edge count {} != 3*{} - 6",
                    edges.len(),
                    n
                )));
            }
            let g = SignedGraph::all_positive(n, &edges)?;
            if !crate::planar::is_triangulation(&g, &rs)? {
                return Err(Error::Defect("generated graph is not a triangulation".into()));
            }
            let faces = crate::planar::trace_faces(&g, &rs)?;
            let total: usize = faces.iter().map(|f| f.len()).sum();
            if total != 2 * edges.len() {
                return Err(Error::Defect("face lengths do not sum to 2|E|".into()));
            }
            Ok(())
        })();
        match outcome {
            Ok(()) => report.passed += 1,
            Err(e) => report
                .failures
                .push((e.to_string(), format!("n={} flips={} seed={}", n, flips, s))),
        }
    }
    report
}

pub fn run_suite(name: &str, count: usize, seed: u64) -> Result<SuiteReport> {
    match name {
        "triangulation" => Ok(suite_triangulation(count, seed)),
        "switching" => Ok(suite_switching(count, seed)),
        "allpositive" => Ok(suite_allpositive(count, seed)),
        "k5" => Ok(suite_k5(count, seed)),
        "wagner" => Ok(suite_wagner(count, seed)),
        "combine" => Ok(suite_combine(count, seed)),
        "generate" => Ok(suite_generate(count, seed)),
        other => Err(Error::Parse(format!("unknown suite {:?}", other))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_triangulation_suite() {
        let r = suite_triangulation(10, 1);
        assert!(r.all_passed(), "{:?}", r.failures);
    }

    #[test]
    fn small_wagner_suite() {
        let r = suite_wagner(20, 2);
        assert!(r.all_passed(), "{:?}", r.failures);
    }

    #[test]
    fn small_combine_suite() {
        let r = suite_combine(8, 3);
        assert!(r.all_passed(), "{:?}", r.failures);
    }

    #[test]
    fn small_k5_suite() {
        let r = suite_k5(6, 4);
        assert!(r.all_passed(), "{:?}", r.failures);
    }

    #[test]
    fn small_switching_suite() {
        let r = suite_switching(5, 5);
        assert!(r.all_passed(), "{:?}", r.failures);
    }

    #[test]
    fn small_allpositive_suite() {
        let r = suite_allpositive(5, 6);
        assert!(r.all_passed(), "{:?}", r.failures);
    }

    #[test]
    fn zero_count_is_a_pass() {
        assert!(run_suite("generate", 0, 0).unwrap().all_passed());
    }

    #[test]
    fn unknown_suite_rejected() {
        assert!(run_suite("nope", 1, 0).is_err());
    }
}
