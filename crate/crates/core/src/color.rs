//! Constructive signed tree-colorings: list coloring of balanced
//! near-triangulations by chord splitting and ear removal, the
//! triangle-rooted variant, Wagner-graph coloring by bounded backtracking,
//! and the clique-sum combiner.

use std::collections::{BTreeMap, BTreeSet};

use crate::graph::{
    canonical_sort, edge_in_class, is_forest, is_signed_tree_coloring,
    ColorDomain, Coloring, Sign, SignedGraph,
};
use crate::planar::{find_chord, orient_cyclic, trace_faces, trace_faces_subset, NearTriangulation};
use crate::switch::is_balanced;
use crate::{Error, Result};

/// Per-vertex candidate color sets. Values are kept sorted in canonical
/// order and deduplicated; the algorithms only remove values and pick the
/// first admissible one.
#[derive(Clone, Debug, Default)]
pub struct ListAssignment {
    lists: BTreeMap<usize, Vec<i32>>,
}

impl ListAssignment {
    pub fn new() -> Self {
        Self::default()
    }

    /// Every vertex gets the full color set `M_n`.
    pub fn uniform_domain(vertex_count: usize, n: u32) -> Result<Self> {
        let values = ColorDomain::new(n)?.values();
        let mut la = ListAssignment::new();
        for v in 0..vertex_count {
            la.set(v, values.clone());
        }
        Ok(la)
    }

    pub fn set(&mut self, v: usize, mut values: Vec<i32>) {
        canonical_sort(&mut values);
        self.lists.insert(v, values);
    }

    pub fn get(&self, v: usize) -> Option<&[i32]> {
        self.lists.get(&v).map(|l| l.as_slice())
    }

    pub fn remove_color(&mut self, v: usize, color: i32) {
        if let Some(l) = self.lists.get_mut(&v) {
            l.retain(|&c| c != color);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &[i32])> + '_ {
        self.lists.iter().map(|(&v, l)| (v, l.as_slice()))
    }
}

/// Smallest color domain containing every assigned value, then wraps the map
/// into a `Coloring`.
pub(crate) fn coloring_from_map(map: &BTreeMap<usize, i32>) -> Result<Coloring> {
    let k = map.values().map(|c| c.unsigned_abs()).max().unwrap_or(0);
    let zero = map.values().any(|&c| c == 0);
    let n = if zero || k == 0 { 2 * k + 1 } else { 2 * k };
    let mut c = Coloring::new(ColorDomain::new(n.max(1))?);
    for (&v, &col) in map {
        c.set(v, col);
    }
    Ok(c)
}

struct Ctx<'a> {
    g: &'a SignedGraph,
    rotation: &'a [Vec<usize>],
}

impl Ctx<'_> {
    fn sign(&self, u: usize, v: usize) -> Result<Sign> {
        self.g
            .sign(u, v)
            .ok_or_else(|| Error::Defect(format!("expected edge {}-{}", u, v)))
    }

    /// Neighbors of `v` within `verts`, in rotation order.
    fn filtered_rotation(&self, v: usize, verts: &BTreeSet<usize>) -> Vec<usize> {
        self.rotation[v]
            .iter()
            .copied()
            .filter(|w| verts.contains(w))
            .collect()
    }
}

fn first_admissible(list: &[i32], forbidden: i32) -> Option<i32> {
    list.iter().copied().find(|&c| c != forbidden)
}

/// Core recursion: colors the sub-near-triangulation induced by `verts` with
/// outer cycle `outer`, whose first two vertices hold singleton lists.
fn solve_near_triangulation(
    ctx: &Ctx,
    verts: &BTreeSet<usize>,
    outer: &[usize],
    lists: &BTreeMap<usize, Vec<i32>>,
    out: &mut BTreeMap<usize, i32>,
) -> Result<()> {
    if verts.len() == 2 {
        for &v in outer.iter().take(2) {
            let l = &lists[&v];
            out.insert(v, l[0]);
        }
        return Ok(());
    }
    if outer.len() < 3 {
        return Err(Error::Defect(format!(
            "outer cycle of length {} with {} vertices",
            outer.len(),
            verts.len()
        )));
    }

    if let Some((p, q)) = find_chord(outer, ctx.g) {
        return split_at_chord(ctx, verts, outer, lists, out, p, q);
    }

    // ear removal: drop the last outer vertex
    let n = outer.len();
    let v1 = outer[0];
    let vn = outer[n - 1];
    let alpha = lists[&v1][0];
    let forbidden = alpha * ctx.sign(v1, vn)? as i32;
    let gamma = first_admissible(&lists[&vn], forbidden).ok_or_else(|| {
        Error::InvalidLists(format!("list at vertex {} admits no ear color", vn))
    })?;

    let nbrs = ctx.filtered_rotation(vn, verts);
    let ordered = orient_cyclic(&nbrs, v1, outer[n - 2])?;
    let interior: Vec<usize> = ordered[1..ordered.len() - 1].to_vec();

    let mut sub_lists = lists.clone();
    for &u in &interior {
        let drop = gamma * ctx.sign(vn, u)? as i32;
        let l = sub_lists.get_mut(&u).unwrap();
        l.retain(|&c| c != drop);
        if l.is_empty() {
            return Err(Error::Defect(format!("list at {} emptied by ear removal", u)));
        }
    }
    let mut sub_outer: Vec<usize> = outer[..n - 1].to_vec();
    sub_outer.extend(interior.iter().rev());
    let mut sub_verts = verts.clone();
    sub_verts.remove(&vn);

    solve_near_triangulation(ctx, &sub_verts, &sub_outer, &sub_lists, out)?;
    out.insert(vn, gamma);
    Ok(())
}

/// Splits the instance along the chord `outer[p]-outer[q]`, solving the side
/// containing the pinned pair first and pinning the chord endpoints for the
/// other side.
fn split_at_chord(
    ctx: &Ctx,
    verts: &BTreeSet<usize>,
    outer: &[usize],
    lists: &BTreeMap<usize, Vec<i32>>,
    out: &mut BTreeMap<usize, i32>,
    p: usize,
    q: usize,
) -> Result<()> {
    let _n = outer.len();
    let outer_set: BTreeSet<usize> = outer.iter().copied().collect();
    let side_a_strict: BTreeSet<usize> = outer[p + 1..q].iter().copied().collect();

    // assign each interior component to the side its cycle attachments are on
    let interior: BTreeSet<usize> = verts.difference(&outer_set).copied().collect();
    let mut side_a_extra: BTreeSet<usize> = BTreeSet::new();
    let mut side_b_extra: BTreeSet<usize> = BTreeSet::new();
    let mut unassigned = interior.clone();
    while let Some(&start) = unassigned.iter().next() {
        let mut comp = BTreeSet::new();
        let mut attach_a = false;
        let mut attach_b = false;
        let mut stack = vec![start];
        comp.insert(start);
        unassigned.remove(&start);
        while let Some(x) = stack.pop() {
            for w in ctx.g.neighbors(x) {
                if !verts.contains(&w) {
                    continue;
                }
                if interior.contains(&w) {
                    if comp.insert(w) {
                        unassigned.remove(&w);
                        stack.push(w);
                    }
                } else if w != outer[p] && w != outer[q] {
                    if side_a_strict.contains(&w) {
                        attach_a = true;
                    } else {
                        attach_b = true;
                    }
                }
            }
        }
        match (attach_a, attach_b) {
            (true, false) => side_a_extra.extend(comp),
            (false, true) => side_b_extra.extend(comp),
            _ => {
                return Err(Error::Defect(
                    "interior component not separated by the chord".into(),
                ))
            }
        }
    }

    let mut verts_a: BTreeSet<usize> = outer[p..=q].iter().copied().collect();
    verts_a.extend(side_a_extra);
    let mut verts_b: BTreeSet<usize> = outer[q..].iter().copied().collect();
    verts_b.extend(outer[..=p].iter().copied());
    verts_b.extend(side_b_extra);

    // outer cycles, oriented so the pinned pair comes first
    let outer_a: Vec<usize> = outer[p..=q].to_vec();
    let (first_verts, first_outer, second_verts, second_outer): (
        &BTreeSet<usize>,
        Vec<usize>,
        &BTreeSet<usize>,
        Vec<usize>,
    ) = if p == 0 {
        // side A holds v1, v2; side B gets pins (v_p=outer[0], v_q)
        let mut second: Vec<usize> = vec![outer[p]];
        second.extend(outer[q..].iter().copied());
        (&verts_a, outer_a, &verts_b, second)
    } else {
        // side B holds v1, v2 (outer[0], outer[1] since p >= 1)
        let mut first: Vec<usize> = outer[..=p].to_vec();
        first.extend(outer[q..].iter().copied());
        // side A pinned at (v_q, v_p)
        let mut second: Vec<usize> = vec![outer[q], outer[p]];
        second.extend(outer[p + 1..q].iter().copied());
        (&verts_b, first, &verts_a, second)
    };

    solve_near_triangulation(ctx, first_verts, &first_outer, lists, out)?;

    let (pin1, pin2) = (second_outer[0], second_outer[1]);
    let mut second_lists = lists.clone();
    second_lists.insert(pin1, vec![out[&pin1]]);
    second_lists.insert(pin2, vec![out[&pin2]]);
    solve_near_triangulation(ctx, second_verts, &second_outer, &second_lists, out)
}

fn lists_to_map(nt: &NearTriangulation, lists: &ListAssignment) -> Result<BTreeMap<usize, Vec<i32>>> {
    let mut map = BTreeMap::new();
    for v in 0..nt.graph().vertex_count() {
        let l = lists
            .get(v)
            .ok_or_else(|| Error::InvalidLists(format!("no list for vertex {}", v)))?;
        if l.is_empty() {
            return Err(Error::InvalidLists(format!("empty list at vertex {}", v)));
        }
        map.insert(v, l.to_vec());
    }
    Ok(map)
}

fn check_near_triangulation_lists(
    nt: &NearTriangulation,
    lists: &BTreeMap<usize, Vec<i32>>,
) -> Result<()> {
    let outer = nt.outer_face();
    let outer_set: BTreeSet<usize> = outer.iter().copied().collect();
    for (i, &v) in outer.iter().enumerate() {
        let len = lists[&v].len();
        if i < 2 && len != 1 {
            return Err(Error::InvalidLists(format!(
                "pinned outer vertex {} must hold a singleton list",
                v
            )));
        }
        if i >= 2 && len < 2 {
            return Err(Error::InvalidLists(format!(
                "outer vertex {} needs at least 2 colors",
                v
            )));
        }
    }
    for v in 0..nt.graph().vertex_count() {
        if !outer_set.contains(&v) && lists[&v].len() < 3 {
            return Err(Error::InvalidLists(format!(
                "interior vertex {} needs at least 3 colors",
                v
            )));
        }
    }
    Ok(())
}

/// List tree-coloring of a balanced signed near-triangulation: the first two
/// outer vertices hold singletons, the rest of the outer cycle lists of size
/// at least 2, interior vertices lists of size at least 3. The result always
/// passes the tree-coloring checker.
pub fn tree_color_near_triangulation(
    nt: &NearTriangulation,
    lists: &ListAssignment,
) -> Result<Coloring> {
    if !is_balanced(nt.graph()) {
        return Err(Error::NotBalanced);
    }
    let map = lists_to_map(nt, lists)?;
    check_near_triangulation_lists(nt, &map)?;
    let ctx = Ctx {
        g: nt.graph(),
        rotation: &nt.embedding().rotation,
    };
    let verts: BTreeSet<usize> = (0..nt.graph().vertex_count()).collect();
    let mut out = BTreeMap::new();
    solve_near_triangulation(&ctx, &verts, nt.outer_face(), &map, &mut out)?;
    let coloring = coloring_from_map(&out)?;
    if !is_signed_tree_coloring(nt.graph(), &coloring) {
        return Err(Error::Defect(
            "near-triangulation coloring failed the checker".into(),
        ));
    }
    Ok(coloring)
}

/// Whether coloring a bare triangle with signs `(s_xy, s_yz, s_zx)` and
/// colors `(alpha, beta, gamma)` gives a tree-coloring of the triangle.
pub fn triangle_precolor_ok(signs: (Sign, Sign, Sign), colors: (i32, i32, i32)) -> bool {
    let g = match SignedGraph::from_edges(3, &[(0, 1, signs.0), (1, 2, signs.1), (0, 2, signs.2)])
    {
        Ok(g) => g,
        Err(_) => return false,
    };
    let mut map = BTreeMap::new();
    map.insert(0, colors.0);
    map.insert(1, colors.1);
    map.insert(2, colors.2);
    match coloring_from_map(&map) {
        Ok(c) => is_signed_tree_coloring(&g, &c),
        Err(_) => false,
    }
}

/// Recursion for the triangle-rooted coloring: if the triangle separates the
/// instance, solve both closed sides; otherwise the triangle bounds a face,
/// which is re-designated the outer face and reduced by removing `z`.
fn solve_triangle_rooted(
    ctx: &Ctx,
    rs: &crate::planar::RotationSystem,
    verts: &BTreeSet<usize>,
    t: (usize, usize, usize),
    precolor: (i32, i32, i32),
    lists: &BTreeMap<usize, Vec<i32>>,
    out: &mut BTreeMap<usize, i32>,
) -> Result<()> {
    let (x, y, z) = t;
    if verts.len() == 3 {
        out.insert(x, precolor.0);
        out.insert(y, precolor.1);
        out.insert(z, precolor.2);
        return Ok(());
    }

    // split the faces into the two regions bounded by T
    let faces = trace_faces_subset(rs, verts)?;
    let t_edges: BTreeSet<(usize, usize)> = [(x, y), (y, z), (x, z)]
        .iter()
        .map(|&(a, b)| if a < b { (a, b) } else { (b, a) })
        .collect();
    let mut edge_face: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (fi, face) in faces.iter().enumerate() {
        let m = face.len();
        for i in 0..m {
            edge_face.insert((face[i], face[(i + 1) % m]), fi);
        }
    }
    let mut dsu = crate::dsu::Dsu::new(faces.len());
    for (&(u, v), &fi) in &edge_face {
        if u < v {
            let key = (u, v);
            if t_edges.contains(&key) {
                continue;
            }
            if let Some(&fj) = edge_face.get(&(v, u)) {
                dsu.union(fi, fj);
            }
        }
    }
    let mut regions: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    for (fi, face) in faces.iter().enumerate() {
        let root = dsu.find(fi);
        regions.entry(root).or_default().extend(face.iter().copied());
    }
    let t_set: BTreeSet<usize> = [x, y, z].into_iter().collect();
    let rich: Vec<&BTreeSet<usize>> = regions
        .values()
        .filter(|vs| !vs.is_subset(&t_set))
        .collect();

    match rich.len() {
        2 => {
            for region in rich {
                let mut side: BTreeSet<usize> = region.clone();
                side.extend(t_set.iter().copied());
                solve_triangle_rooted(ctx, rs, &side, t, precolor, lists, out)?;
            }
            Ok(())
        }
        1 => {
            // T bounds a face; make it the outer face and remove z
            let gamma = precolor.2;
            let nbrs = ctx.filtered_rotation(z, verts);
            let ordered = orient_cyclic(&nbrs, x, y)?;
            let interior: Vec<usize> = ordered[1..ordered.len() - 1].to_vec();
            let mut sub_lists = lists.clone();
            for &u in &interior {
                let drop = gamma * ctx.sign(z, u)? as i32;
                let l = sub_lists.get_mut(&u).unwrap();
                l.retain(|&c| c != drop);
                if l.is_empty() {
                    return Err(Error::Defect(format!(
                        "list at {} emptied removing the rooted vertex",
                        u
                    )));
                }
            }
            sub_lists.insert(x, vec![precolor.0]);
            sub_lists.insert(y, vec![precolor.1]);
            let mut sub_outer = vec![x, y];
            sub_outer.extend(interior.iter().rev());
            let mut sub_verts = verts.clone();
            sub_verts.remove(&z);
            solve_near_triangulation(ctx, &sub_verts, &sub_outer, &sub_lists, out)?;
            out.insert(z, gamma);
            Ok(())
        }
        _ => Err(Error::Defect(format!(
            "triangle split produced {} regions",
            rich.len()
        ))),
    }
}

/// Triangle-rooted list tree-coloring: extends a valid precoloring of a
/// triangle `T = (x, y, z)` to the whole balanced near-triangulation, with
/// lists of size at least 3 off `T`.
pub fn tree_color_triangle_rooted(
    nt: &NearTriangulation,
    t: (usize, usize, usize),
    precolor: (i32, i32, i32),
    lists: &ListAssignment,
) -> Result<Coloring> {
    let g = nt.graph();
    if !is_balanced(g) {
        return Err(Error::NotBalanced);
    }
    let (x, y, z) = t;
    if !(g.has_edge(x, y) && g.has_edge(y, z) && g.has_edge(x, z)) {
        return Err(Error::Defect(format!(
            "rooted triple ({}, {}, {}) is not a triangle",
            x, y, z
        )));
    }
    let signs = (
        g.sign(x, y).unwrap(),
        g.sign(y, z).unwrap(),
        g.sign(x, z).unwrap(),
    );
    if !triangle_precolor_ok(signs, precolor) {
        return Err(Error::PrecolorInvalid);
    }
    let mut map = BTreeMap::new();
    for v in 0..g.vertex_count() {
        if v == x || v == y || v == z {
            continue;
        }
        let l = lists
            .get(v)
            .ok_or_else(|| Error::InvalidLists(format!("no list for vertex {}", v)))?;
        if l.len() < 3 {
            return Err(Error::ListTooSmall(v));
        }
        map.insert(v, l.to_vec());
    }
    map.insert(x, vec![precolor.0]);
    map.insert(y, vec![precolor.1]);
    map.insert(z, vec![precolor.2]);

    let ctx = Ctx {
        g,
        rotation: &nt.embedding().rotation,
    };
    let verts: BTreeSet<usize> = (0..g.vertex_count()).collect();
    let mut out = BTreeMap::new();
    solve_triangle_rooted(&ctx, nt.embedding(), &verts, t, precolor, &map, &mut out)?;
    let coloring = coloring_from_map(&out)?;
    if !is_signed_tree_coloring(g, &coloring) {
        return Err(Error::Defect(
            "triangle-rooted coloring failed the checker".into(),
        ));
    }
    Ok(coloring)
}

/// Edge set of the canonical Wagner graph: the 8-cycle `v_0..v_7` plus the
/// four main diagonals `v_i v_{i+4}`.
pub fn wagner_edges() -> Vec<(usize, usize)> {
    let mut edges: Vec<(usize, usize)> = (0..8)
        .map(|i| {
            let j = (i + 1) % 8;
            if i < j {
                (i, j)
            } else {
                (j, i)
            }
        })
        .collect();
    edges.extend((0..4).map(|i| (i, i + 4)));
    edges.sort_unstable();
    edges
}

pub(crate) fn is_canonical_wagner(g: &SignedGraph) -> bool {
    if g.vertex_count() != 8 || g.edge_count() != 12 {
        return false;
    }
    wagner_edges().iter().all(|&(u, v)| g.has_edge(u, v))
}

/// Partial-coloring forest check over the assigned vertices only.
fn partial_tree_ok(g: &SignedGraph, colors: &BTreeMap<usize, i32>) -> bool {
    let classes: BTreeSet<u32> = colors.values().map(|c| c.unsigned_abs()).collect();
    for i in classes {
        let vertices: BTreeSet<usize> = colors
            .iter()
            .filter(|(_, c)| c.unsigned_abs() == i)
            .map(|(&v, _)| v)
            .collect();
        let edges = g.edges().filter_map(|(u, v, s)| {
            match (colors.get(&u), colors.get(&v)) {
                (Some(&cu), Some(&cv)) if cu.unsigned_abs() == i && edge_in_class(cu, cv, s) => {
                    Some((u, v))
                }
                _ => None,
            }
        });
        if !is_forest(&vertices, edges) {
            return false;
        }
    }
    true
}

/// List tree-coloring of a signed Wagner graph with one pinned edge. No
/// balance assumption; realized by bounded backtracking over the lists and
/// certified by the checker.
pub fn tree_color_wagner(
    w: &SignedGraph,
    pinned: (usize, usize, i32, i32),
    lists: &ListAssignment,
) -> Result<Coloring> {
    if !is_canonical_wagner(w) {
        return Err(Error::NotWagner);
    }
    let (vi, vj, alpha, beta) = pinned;
    if !w.has_edge(vi, vj) {
        return Err(Error::BadPin(vi, vj));
    }
    let mut order = vec![vi, vj];
    order.extend((0..8).filter(|&v| v != vi && v != vj));
    let mut candidates: BTreeMap<usize, Vec<i32>> = BTreeMap::new();
    candidates.insert(vi, vec![alpha]);
    candidates.insert(vj, vec![beta]);
    for v in 0..8 {
        if v == vi || v == vj {
            continue;
        }
        let l = lists
            .get(v)
            .ok_or_else(|| Error::InvalidLists(format!("no list for vertex {}", v)))?;
        if l.len() < 3 {
            return Err(Error::ListTooSmall(v));
        }
        candidates.insert(v, l.to_vec());
    }

    fn backtrack(
        g: &SignedGraph,
        order: &[usize],
        candidates: &BTreeMap<usize, Vec<i32>>,
        depth: usize,
        colors: &mut BTreeMap<usize, i32>,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        for &c in &candidates[&v] {
            colors.insert(v, c);
            if partial_tree_ok(g, colors) && backtrack(g, order, candidates, depth + 1, colors) {
                return true;
            }
            colors.remove(&v);
        }
        false
    }

    let mut colors = BTreeMap::new();
    if !backtrack(w, &order, &candidates, 0, &mut colors) {
        return Err(Error::Defect(
            "Wagner search exhausted its lists without a coloring".into(),
        ));
    }
    let coloring = coloring_from_map(&colors)?;
    if !is_signed_tree_coloring(w, &coloring) {
        return Err(Error::Defect("Wagner coloring failed the checker".into()));
    }
    Ok(coloring)
}

/// Combines tree-colorings of two balanced signed graphs that share a K2 or
/// K3 clique and agree there. Returns the union graph and the union
/// coloring, re-verified by the checker.
pub fn combine_colorings(
    g1: &SignedGraph,
    c1: &Coloring,
    g2: &SignedGraph,
    c2: &Coloring,
) -> Result<(SignedGraph, Coloring)> {
    let n = g1.vertex_count().max(g2.vertex_count());
    let mut union = SignedGraph::new(n);
    for (u, v, s) in g1.edges() {
        union.add_edge(u, v, s)?;
    }
    for (u, v, s) in g2.edges() {
        match union.sign(u, v) {
            None => union.add_edge(u, v, s)?,
            Some(existing) if existing == s => {}
            Some(_) => {
                return Err(Error::SharedCliqueMismatch(format!(
                    "edge {}-{} carries conflicting signs",
                    u, v
                )))
            }
        }
    }

    let s1: BTreeSet<usize> = c1.support().collect();
    let s2: BTreeSet<usize> = c2.support().collect();
    let shared: Vec<usize> = s1.intersection(&s2).copied().collect();
    if shared.len() != 2 && shared.len() != 3 {
        return Err(Error::SharedCliqueMismatch(format!(
            "{} shared vertices",
            shared.len()
        )));
    }
    for i in 0..shared.len() {
        for j in (i + 1)..shared.len() {
            let (u, v) = (shared[i], shared[j]);
            if !g1.has_edge(u, v) || !g2.has_edge(u, v) {
                return Err(Error::SharedCliqueMismatch(format!(
                    "shared pair {}-{} is not an edge of both sides",
                    u, v
                )));
            }
        }
    }
    for &v in &shared {
        if c1.get(v) != c2.get(v) {
            return Err(Error::ColoringsDisagree(v));
        }
    }
    if !is_balanced(g1) || !is_balanced(g2) {
        return Err(Error::NotBalanced);
    }
    if !is_signed_tree_coloring(g1, c1) || !is_signed_tree_coloring(g2, c2) {
        return Err(Error::Defect("input coloring is not a tree-coloring".into()));
    }

    let mut map: BTreeMap<usize, i32> = c1.iter().collect();
    for (v, c) in c2.iter() {
        map.insert(v, c);
    }
    let coloring = coloring_from_map(&map)?;
    if !is_signed_tree_coloring(&union, &coloring) {
        return Err(Error::Defect("combined coloring failed the checker".into()));
    }
    Ok((union, coloring))
}

/// Builds a near-triangulation from a graph and embedding, re-designating
/// the outer face so it starts with the directed pair `(a, b)`.
pub fn with_outer_edge(
    g: &SignedGraph,
    rs: &crate::planar::RotationSystem,
    a: usize,
    b: usize,
) -> Result<NearTriangulation> {
    let faces = trace_faces(g, rs)?;
    for face in &faces {
        let m = face.len();
        for i in 0..m {
            if face[i] == a && face[(i + 1) % m] == b {
                let mut outer = Vec::with_capacity(m);
                outer.extend_from_slice(&face[i..]);
                outer.extend_from_slice(&face[..i]);
                let mut r = rs.clone();
                r.outer_face = outer;
                return NearTriangulation::new(g.clone(), r);
            }
        }
    }
    Err(Error::Defect(format!("no face bounded by edge {}-{}", a, b)))
}
