//! Clique-sum decomposition into triangulation and Wagner leaves, plus the
//! coloring pipeline that walks the decomposition and glues leaf colorings
//! along the shared cliques.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::color::{
    coloring_from_map, combine_colorings, is_canonical_wagner, tree_color_near_triangulation,
    tree_color_triangle_rooted, tree_color_wagner, wagner_edges, with_outer_edge, ListAssignment,
};
use crate::graph::{is_signed_tree_coloring, Coloring, SignedGraph};
use crate::planar::{is_triangulation, planar_embed, NearTriangulation, RotationSystem};
use crate::switch::is_balanced;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LeafKind {
    Triangulation,
    Wagner,
}

/// One atom of the decomposition. `vertices` lists global vertex ids; their
/// positions are the leaf-local ids used by `rotation`. For Wagner leaves,
/// `wagner_map[i]` is the local id playing canonical vertex `v_i`.
#[derive(Clone, Debug)]
pub struct Leaf {
    pub vertices: Vec<usize>,
    pub kind: LeafKind,
    pub rotation: Option<RotationSystem>,
    pub wagner_map: Option<Vec<usize>>,
}

/// A clique-sum join between two leaves; `shared` holds global vertex ids.
#[derive(Clone, Debug)]
pub struct Join {
    pub left: usize,
    pub right: usize,
    pub shared: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct DecompositionTree {
    pub leaves: Vec<Leaf>,
    pub joins: Vec<Join>,
}

/// Splits a connected graph along K2/K3 clique separators (exhaustive
/// search, pairs before triples) until every atom is a triangulation or a
/// Wagner graph. Atoms that are neither fail with `NotDecomposable`.
pub fn decompose(g: &SignedGraph) -> Result<DecompositionTree> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut tree = DecompositionTree {
        leaves: Vec::new(),
        joins: Vec::new(),
    };
    let all: Vec<usize> = (0..g.vertex_count()).collect();
    split(g, &all, &mut tree)?;
    Ok(tree)
}

fn split(g: &SignedGraph, verts: &[usize], tree: &mut DecompositionTree) -> Result<()> {
    if let Some(sep) = find_clique_separator(g, verts) {
        let comps = components_without(g, verts, &sep);
        let mut anchor: Option<usize> = None;
        for comp in comps {
            let mut part: Vec<usize> = comp.into_iter().chain(sep.iter().copied()).collect();
            part.sort_unstable();
            let before = tree.leaves.len();
            split(g, &part, tree)?;
            let rep = (before..tree.leaves.len())
                .find(|&li| sep.iter().all(|s| tree.leaves[li].vertices.contains(s)))
                .ok_or_else(|| Error::Defect("no leaf carries the separator clique".into()))?;
            if let Some(prev) = anchor {
                tree.joins.push(Join {
                    left: prev,
                    right: rep,
                    shared: sep.clone(),
                });
            } else {
                anchor = Some(rep);
            }
        }
        Ok(())
    } else {
        tree.leaves.push(classify_atom(g, verts)?);
        Ok(())
    }
}

/// K2 before K3, lexicographic within each size; the separator must be a
/// clique and must disconnect the induced subgraph.
fn find_clique_separator(g: &SignedGraph, verts: &[usize]) -> Option<Vec<usize>> {
    let n = verts.len();
    for i in 0..n {
        for j in (i + 1)..n {
            let (u, v) = (verts[i], verts[j]);
            if g.has_edge(u, v) && disconnects(g, verts, &[u, v]) {
                return Some(vec![u, v]);
            }
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if !g.has_edge(verts[i], verts[j]) {
                continue;
            }
            for l in (j + 1)..n {
                let (u, v, w) = (verts[i], verts[j], verts[l]);
                if g.has_edge(u, w) && g.has_edge(v, w) && disconnects(g, verts, &[u, v, w]) {
                    return Some(vec![u, v, w]);
                }
            }
        }
    }
    None
}

fn disconnects(g: &SignedGraph, verts: &[usize], sep: &[usize]) -> bool {
    components_without(g, verts, sep).len() > 1
}

fn components_without(g: &SignedGraph, verts: &[usize], sep: &[usize]) -> Vec<Vec<usize>> {
    let keep: BTreeSet<usize> = verts
        .iter()
        .copied()
        .filter(|v| !sep.contains(v))
        .collect();
    let mut seen: BTreeSet<usize> = BTreeSet::new();
    let mut comps = Vec::new();
    for &start in &keep {
        if seen.contains(&start) {
            continue;
        }
        let mut comp = vec![start];
        seen.insert(start);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for u in g.neighbors(v) {
                if keep.contains(&u) && seen.insert(u) {
                    comp.push(u);
                    queue.push_back(u);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

fn classify_atom(g: &SignedGraph, verts: &[usize]) -> Result<Leaf> {
    let (local, globals) = g.induced(verts)?;
    if local.vertex_count() >= 3 {
        if let Ok(rs) = planar_embed(&local) {
            if is_triangulation(&local, &rs)? {
                return Ok(Leaf {
                    vertices: globals,
                    kind: LeafKind::Triangulation,
                    rotation: Some(rs),
                    wagner_map: None,
                });
            }
        }
    }
    if let Some(map) = wagner_isomorphism(&local) {
        return Ok(Leaf {
            vertices: globals,
            kind: LeafKind::Wagner,
            rotation: None,
            wagner_map: Some(map),
        });
    }
    Err(Error::NotDecomposable(format!(
        "atom on {:?} is neither a triangulation nor a Wagner graph",
        verts
    )))
}

/// Backtracking search for a map from canonical Wagner vertices to `g`;
/// returns `map` with `map[i]` the vertex of `g` playing `v_i`.
pub fn wagner_isomorphism(g: &SignedGraph) -> Option<Vec<usize>> {
    if g.vertex_count() != 8 || g.edge_count() != 12 {
        return None;
    }
    if (0..8).any(|v| g.degree(v) != 3) {
        return None;
    }
    let canon = wagner_edges();
    let mut map = vec![usize::MAX; 8];
    let mut used = [false; 8];

    fn rec(
        g: &SignedGraph,
        canon: &[(usize, usize)],
        map: &mut Vec<usize>,
        used: &mut [bool; 8],
        i: usize,
    ) -> bool {
        if i == 8 {
            return true;
        }
        for cand in 0..8 {
            if used[cand] {
                continue;
            }
            let ok = canon.iter().all(|&(a, b)| {
                let (a, b) = (a.min(b), a.max(b));
                if b != i {
                    return true; // both endpoints not yet placed, or checked earlier
                }
                map[a] == usize::MAX || g.has_edge(map[a], cand)
            });
            // degree counts already match, so edge-consistency suffices
            if ok {
                map[i] = cand;
                used[cand] = true;
                if rec(g, canon, map, used, i + 1) {
                    return true;
                }
                map[i] = usize::MAX;
                used[cand] = false;
            }
        }
        false
    }

    if rec(g, &canon, &mut map, &mut used, 0) {
        // non-edges must map to non-edges; same edge count plus injectivity
        // already forces this, asserted defensively
        let img_edges: BTreeSet<(usize, usize)> = canon
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (map[a], map[b]);
                (x.min(y), x.max(y))
            })
            .collect();
        if img_edges.len() == 12 {
            Some(map)
        } else {
            None
        }
    } else {
        None
    }
}

/// List tree-coloring of a balanced edge-maximal K5-minor-free signed graph
/// with lists of size at least 3, via a leaf-by-leaf walk of the clique-sum
/// decomposition.
pub fn tree_color_k5_free(
    g: &SignedGraph,
    lists: &ListAssignment,
    decomposition: Option<&DecompositionTree>,
) -> Result<Coloring> {
    if !is_balanced(g) {
        return Err(Error::NotBalanced);
    }
    for v in 0..g.vertex_count() {
        match lists.get(v) {
            Some(l) if l.len() >= 3 => {}
            _ => return Err(Error::ListTooSmall(v)),
        }
    }
    let owned;
    let tree = match decomposition {
        Some(t) => t,
        None => {
            owned = decompose(g)?;
            &owned
        }
    };
    if tree.leaves.is_empty() {
        return Err(Error::NotDecomposable("empty decomposition".into()));
    }

    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); tree.leaves.len()];
    for (ji, j) in tree.joins.iter().enumerate() {
        if j.left >= tree.leaves.len() || j.right >= tree.leaves.len() {
            return Err(Error::NotDecomposable("join references a missing leaf".into()));
        }
        incident[j.left].push(ji);
        incident[j.right].push(ji);
    }

    let mut visited = vec![false; tree.leaves.len()];
    visited[0] = true;
    let first = color_leaf(g, &tree.leaves[0], lists, &[])?;
    let mut acc_graph = leaf_graph(g, &tree.leaves[0])?;
    let mut acc_coloring = first;
    let mut queue = VecDeque::from([0usize]);
    while let Some(l) = queue.pop_front() {
        for &ji in &incident[l] {
            let j = &tree.joins[ji];
            let next = if j.left == l { j.right } else { j.left };
            if visited[next] {
                continue;
            }
            visited[next] = true;
            let pins: Vec<(usize, i32)> = j
                .shared
                .iter()
                .map(|&v| {
                    acc_coloring
                        .get(v)
                        .map(|c| (v, c))
                        .ok_or(Error::Defect(format!("shared vertex {} uncolored", v)))
                })
                .collect::<Result<_>>()?;
            let c = color_leaf(g, &tree.leaves[next], lists, &pins)?;
            let lg = leaf_graph(g, &tree.leaves[next])?;
            let (ug, uc) = combine_colorings(&acc_graph, &acc_coloring, &lg, &c)?;
            acc_graph = ug;
            acc_coloring = uc;
            queue.push_back(next);
        }
    }
    if visited.iter().any(|&v| !v) {
        return Err(Error::NotDecomposable("decomposition tree is not connected".into()));
    }
    if acc_graph.edge_count() != g.edge_count() || !acc_coloring.is_total_on(g) {
        return Err(Error::NotDecomposable(
            "leaf union does not reconstruct the input graph".into(),
        ));
    }
    if !is_signed_tree_coloring(g, &acc_coloring) {
        return Err(Error::Defect("pipeline coloring failed the checker".into()));
    }
    Ok(acc_coloring)
}

/// Tree-3-coloring from the uniform lists M_3, certifying that the signed
/// vertex arboricity is at most 3.
pub fn va_signed_upper3(
    g: &SignedGraph,
    decomposition: Option<&DecompositionTree>,
) -> Result<Coloring> {
    let lists = ListAssignment::uniform_domain(g.vertex_count(), 3)?;
    tree_color_k5_free(g, &lists, decomposition)
}

/// The leaf's induced subgraph re-expressed over global vertex ids, padded
/// to the host's vertex count so colorings stay comparable.
pub(crate) fn leaf_graph(g: &SignedGraph, leaf: &Leaf) -> Result<SignedGraph> {
    let mut out = SignedGraph::new(g.vertex_count());
    let vset: BTreeSet<usize> = leaf.vertices.iter().copied().collect();
    if vset.len() != leaf.vertices.len() {
        return Err(Error::NotDecomposable("duplicate vertex in a leaf".into()));
    }
    for &u in &vset {
        if u >= g.vertex_count() {
            return Err(Error::UnknownVertex(u));
        }
        for w in g.neighbors(u) {
            if w > u && vset.contains(&w) {
                out.add_edge(u, w, g.sign(u, w).unwrap())?;
            }
        }
    }
    Ok(out)
}

/// Colors one leaf. `pins` are already-colored global vertices (the shared
/// clique of the join bringing this leaf in, or empty for the root leaf).
pub(crate) fn color_leaf(
    g: &SignedGraph,
    leaf: &Leaf,
    lists: &ListAssignment,
    pins: &[(usize, i32)],
) -> Result<Coloring> {
    let (local, globals) = g.induced(&leaf.vertices)?;
    let local_of: BTreeMap<usize, usize> =
        globals.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut local_pins = Vec::with_capacity(pins.len());
    for &(v, c) in pins {
        let &lv = local_of
            .get(&v)
            .ok_or(Error::Defect(format!("pin {} is outside the leaf", v)))?;
        local_pins.push((lv, c));
    }

    let local_coloring = match leaf.kind {
        LeafKind::Triangulation => {
            let rs = leaf
                .rotation
                .as_ref()
                .ok_or(Error::NotDecomposable("triangulation leaf without rotation".into()))?;
            color_triangulation_leaf(&local, rs, &globals, lists, &local_pins)?
        }
        LeafKind::Wagner => {
            let map = leaf
                .wagner_map
                .as_ref()
                .ok_or(Error::NotDecomposable("wagner leaf without labeling".into()))?;
            color_wagner_leaf(&local, map, &globals, lists, &local_pins)?
        }
    };

    let mut out = BTreeMap::new();
    for (lv, c) in local_coloring.iter() {
        out.insert(globals[lv], c);
    }
    coloring_from_map(&out)
}

fn local_lists(
    local: &SignedGraph,
    globals: &[usize],
    lists: &ListAssignment,
    pinned: &BTreeMap<usize, i32>,
) -> Result<ListAssignment> {
    let mut out = ListAssignment::new();
    for lv in 0..local.vertex_count() {
        if let Some(&c) = pinned.get(&lv) {
            out.set(lv, vec![c]);
            continue;
        }
        let l = lists
            .get(globals[lv])
            .ok_or(Error::ListTooSmall(globals[lv]))?;
        out.set(lv, l.to_vec());
    }
    Ok(out)
}

fn color_triangulation_leaf(
    local: &SignedGraph,
    rs: &RotationSystem,
    globals: &[usize],
    lists: &ListAssignment,
    pins: &[(usize, i32)],
) -> Result<Coloring> {
    match pins.len() {
        0 => {
            let nt = NearTriangulation::new(local.clone(), rs.clone())?;
            let outer = nt.outer_face().to_vec();
            let mut pinned = BTreeMap::new();
            for &v in outer.iter().take(2) {
                let l = lists.get(globals[v]).ok_or(Error::ListTooSmall(globals[v]))?;
                pinned.insert(v, l[0]);
            }
            let ll = local_lists(local, globals, lists, &pinned)?;
            tree_color_near_triangulation(&nt, &ll)
        }
        2 => {
            let (a, ca) = pins[0];
            let (b, cb) = pins[1];
            let nt = with_outer_edge(local, rs, a, b)
                .or_else(|_| with_outer_edge(local, rs, b, a))?;
            let pinned: BTreeMap<usize, i32> = [(a, ca), (b, cb)].into_iter().collect();
            let ll = local_lists(local, globals, lists, &pinned)?;
            tree_color_near_triangulation(&nt, &ll)
        }
        3 => {
            let nt = NearTriangulation::new(local.clone(), rs.clone())?;
            let (x, y, z) = (pins[0].0, pins[1].0, pins[2].0);
            let pre = (pins[0].1, pins[1].1, pins[2].1);
            let ll = local_lists(local, globals, lists, &BTreeMap::new())?;
            tree_color_triangle_rooted(&nt, (x, y, z), pre, &ll)
        }
        k => Err(Error::Defect(format!("{} pins on a triangulation leaf", k))),
    }
}

fn color_wagner_leaf(
    local: &SignedGraph,
    map: &[usize],
    globals: &[usize],
    lists: &ListAssignment,
    pins: &[(usize, i32)],
) -> Result<Coloring> {
    if map.len() != 8 || local.vertex_count() != 8 {
        return Err(Error::NotWagner);
    }
    let mut canon = SignedGraph::new(8);
    for (i, j) in wagner_edges() {
        let (u, v) = (map[i], map[j]);
        let s = local
            .sign(u, v)
            .ok_or(Error::NotWagner)?;
        canon.add_edge(i, j, s)?;
    }
    if !is_canonical_wagner(&canon) || local.edge_count() != 12 {
        return Err(Error::NotWagner);
    }
    let canon_of: BTreeMap<usize, usize> = map.iter().enumerate().map(|(i, &lv)| (lv, i)).collect();

    let mut canon_lists = ListAssignment::new();
    for i in 0..8 {
        let gv = globals[map[i]];
        let l = lists.get(gv).ok_or(Error::ListTooSmall(gv))?;
        canon_lists.set(i, l.to_vec());
    }

    let pinned = match pins.len() {
        0 => {
            let a = canon_lists.get(0).unwrap()[0];
            let b = canon_lists.get(1).unwrap()[0];
            (0, 1, a, b)
        }
        2 => {
            let i = *canon_of
                .get(&pins[0].0)
                .ok_or(Error::Defect("pin outside the Wagner labeling".into()))?;
            let j = *canon_of
                .get(&pins[1].0)
                .ok_or(Error::Defect("pin outside the Wagner labeling".into()))?;
            (i, j, pins[0].1, pins[1].1)
        }
        k => {
            // the Wagner graph is triangle-free, so a K3 share is impossible
            return Err(Error::Defect(format!("{} pins on a Wagner leaf", k)));
        }
    };
    let canon_coloring = tree_color_wagner(&canon, pinned, &canon_lists)?;
    let mut out = BTreeMap::new();
    for (i, c) in canon_coloring.iter() {
        out.insert(map[i], c);
    }
    coloring_from_map(&out)
}
