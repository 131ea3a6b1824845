//! Planar embeddings as rotation systems: face tracing, near-triangulation
//! validation, outer-cycle chord detection, cyclic neighbor queries, and a
//! quadratic face-expansion embedder for planarity at desk scale.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use crate::graph::SignedGraph;
use crate::{Error, Result};

/// A combinatorial embedding: a cyclic neighbor order per vertex plus a
/// designated outer face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationSystem {
    pub rotation: Vec<Vec<usize>>,
    pub outer_face: Vec<usize>,
}

/// A plane graph whose every face, except possibly the designated outer
/// face, is a triangle, with the outer boundary a simple cycle.
#[derive(Clone, Debug)]
pub struct NearTriangulation {
    graph: SignedGraph,
    embedding: RotationSystem,
}

impl NearTriangulation {
    /// Validates the face structure on construction.
    pub fn new(graph: SignedGraph, embedding: RotationSystem) -> Result<Self> {
        validate_near_triangulation(&graph, &embedding)?;
        Ok(NearTriangulation { graph, embedding })
    }

    pub fn graph(&self) -> &SignedGraph {
        &self.graph
    }

    pub fn embedding(&self) -> &RotationSystem {
        &self.embedding
    }

    pub fn outer_face(&self) -> &[usize] {
        &self.embedding.outer_face
    }
}

/// Traces every face of the embedding. The successor of a directed edge
/// `(u, v)` is `(v, w)` where `w` follows `u` in the rotation at `v`. Each
/// directed edge lies on exactly one face; Euler's formula is verified for
/// connected graphs.
pub fn trace_faces(g: &SignedGraph, r: &RotationSystem) -> Result<Vec<Vec<usize>>> {
    let n = g.vertex_count();
    if r.rotation.len() != n {
        return Err(Error::MalformedRotation(format!(
            "rotation has {} entries for {} vertices",
            r.rotation.len(),
            n
        )));
    }
    for v in 0..n {
        let mut listed: Vec<usize> = r.rotation[v].clone();
        listed.sort_unstable();
        let mut nbrs: Vec<usize> = g.neighbors(v).collect();
        nbrs.sort_unstable();
        if listed != nbrs {
            return Err(Error::MalformedRotation(format!(
                "rotation at vertex {} is not a permutation of its neighborhood",
                v
            )));
        }
    }
    let rot: BTreeMap<usize, Vec<usize>> = (0..n)
        .filter(|&v| !r.rotation[v].is_empty())
        .map(|v| (v, r.rotation[v].clone()))
        .collect();
    let faces = trace_from_rotation(&rot)?;
    if n >= 2 && g.is_connected() {
        let euler = n as i64 - g.edge_count() as i64 + faces.len() as i64;
        if euler != 2 {
            return Err(Error::MalformedRotation(format!(
                "Euler check failed: V - E + F = {}",
                euler
            )));
        }
    }
    Ok(faces)
}

/// Face tracing over an explicit ordered-adjacency map. The map must be
/// symmetric: `v` in `rot[u]` iff `u` in `rot[v]`.
pub(crate) fn trace_from_rotation(rot: &BTreeMap<usize, Vec<usize>>) -> Result<Vec<Vec<usize>>> {
    let mut pos: HashMap<usize, HashMap<usize, usize>> = HashMap::new();
    for (&v, list) in rot {
        let mut m = HashMap::new();
        for (i, &w) in list.iter().enumerate() {
            if m.insert(w, i).is_some() {
                return Err(Error::MalformedRotation(format!(
                    "repeated neighbor {} at vertex {}",
                    w, v
                )));
            }
        }
        pos.insert(v, m);
    }
    let mut visited: HashSet<(usize, usize)> = HashSet::new();
    let mut faces = Vec::new();
    for (&v, list) in rot {
        for &w in list {
            if visited.contains(&(v, w)) {
                continue;
            }
            let mut face = Vec::new();
            let (mut u, mut x) = (v, w);
            loop {
                visited.insert((u, x));
                face.push(u);
                let i = *pos
                    .get(&x)
                    .and_then(|m| m.get(&u))
                    .ok_or_else(|| {
                        Error::MalformedRotation(format!("rotation at {} is missing {}", x, u))
                    })?;
                let list_x = &rot[&x];
                let next = list_x[(i + 1) % list_x.len()];
                u = x;
                x = next;
                if (u, x) == (v, w) {
                    break;
                }
            }
            faces.push(face);
        }
    }
    Ok(faces)
}

/// Face tracing of the induced sub-embedding on `verts`: neighbor lists are
/// filtered to `verts`, preserving cyclic order.
pub(crate) fn trace_faces_subset(
    r: &RotationSystem,
    verts: &BTreeSet<usize>,
) -> Result<Vec<Vec<usize>>> {
    let rot: BTreeMap<usize, Vec<usize>> = verts
        .iter()
        .map(|&v| {
            (
                v,
                r.rotation[v]
                    .iter()
                    .copied()
                    .filter(|w| verts.contains(w))
                    .collect::<Vec<usize>>(),
            )
        })
        .filter(|(_, list)| !list.is_empty())
        .collect();
    trace_from_rotation(&rot)
}

fn cyclic_eq(a: &[usize], b: &[usize]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let m = a.len();
    if m == 0 {
        return true;
    }
    for shift in 0..m {
        if (0..m).all(|i| a[i] == b[(i + shift) % m]) {
            return true;
        }
        if (0..m).all(|i| a[i] == b[(m + shift - i) % m]) {
            return true;
        }
    }
    false
}

fn is_simple_cycle(face: &[usize]) -> bool {
    if face.len() < 3 {
        return false;
    }
    let set: BTreeSet<usize> = face.iter().copied().collect();
    set.len() == face.len()
}

/// Checks that every face other than the designated outer face is a triangle
/// and that the outer boundary is a simple cycle.
pub fn validate_near_triangulation(g: &SignedGraph, r: &RotationSystem) -> Result<()> {
    let faces = trace_faces(g, r)?;
    if !is_simple_cycle(&r.outer_face) {
        return Err(Error::NotNearTriangulation(
            "outer face is not a simple cycle".into(),
        ));
    }
    let outer_idx = faces
        .iter()
        .position(|f| cyclic_eq(f, &r.outer_face))
        .ok_or_else(|| {
            Error::NotNearTriangulation("designated outer face is not a traced face".into())
        })?;
    for (i, face) in faces.iter().enumerate() {
        if i == outer_idx {
            continue;
        }
        if face.len() != 3 || !is_simple_cycle(face) {
            return Err(Error::NotNearTriangulation(format!(
                "inner face {:?} is not a triangle",
                face
            )));
        }
    }
    Ok(())
}

/// True iff every face, the outer one included, is a triangle.
pub fn is_triangulation(g: &SignedGraph, r: &RotationSystem) -> Result<bool> {
    let faces = trace_faces(g, r)?;
    Ok(faces.iter().all(|f| f.len() == 3 && is_simple_cycle(f)))
}

/// Finds a chord of the outer cycle: an edge joining outer vertices at
/// positions `p < q` with `2 <= q - p <= n - 2`. Among candidates returns the
/// one minimizing `(q - p, p)`. Positions are 0-based into `outer`.
pub fn find_chord(outer: &[usize], g: &SignedGraph) -> Option<(usize, usize)> {
    let n = outer.len();
    let mut best: Option<(usize, usize)> = None;
    for p in 0..n {
        for q in (p + 2)..n {
            if q - p > n - 2 {
                break;
            }
            if g.has_edge(outer[p], outer[q]) {
                let better = match best {
                    Some((bp, bq)) => (q - p, p) < (bq - bp, bp),
                    None => true,
                };
                if better {
                    best = Some((p, q));
                }
            }
        }
    }
    best
}

/// Rotates (and reverses if needed) a cyclic list so it starts at `first`
/// and ends at `last`.
pub(crate) fn orient_cyclic(list: &[usize], first: usize, last: usize) -> Result<Vec<usize>> {
    let rotate = |l: &[usize]| -> Option<Vec<usize>> {
        let i = l.iter().position(|&x| x == first)?;
        let mut out = Vec::with_capacity(l.len());
        out.extend_from_slice(&l[i..]);
        out.extend_from_slice(&l[..i]);
        Some(out)
    };
    if let Some(r) = rotate(list) {
        if r.len() == 1 || *r.last().unwrap() == last {
            return Ok(r);
        }
        let rev: Vec<usize> = list.iter().rev().copied().collect();
        if let Some(r) = rotate(&rev) {
            if *r.last().unwrap() == last {
                return Ok(r);
            }
        }
    }
    Err(Error::MalformedRotation(format!(
        "cannot orient cyclic list {:?} from {} to {}",
        list, first, last
    )))
}

/// Neighbors of an outer vertex in rotation order, starting at its successor
/// on the outer cycle and ending at its predecessor. For the last outer
/// vertex `v_n` of `C = v_1..v_n` this is `v_1, u_1,..,u_t, v_{n-1}` with the
/// `u_i` interior.
pub fn ear_neighbors(v_n: usize, r: &RotationSystem, outer: &[usize]) -> Result<Vec<usize>> {
    let n = outer.len();
    let idx = outer
        .iter()
        .position(|&x| x == v_n)
        .ok_or(Error::NotOnOuterFace(v_n))?;
    let first = outer[(idx + 1) % n];
    let last = outer[(idx + n - 1) % n];
    orient_cyclic(&r.rotation[v_n], first, last)
}

// ---------------------------------------------------------------------------
// Planarity and embedding: biconnected decomposition plus iterative face
// expansion (embed a path of an unembedded fragment into an admissible face
// until every edge is placed).
// ---------------------------------------------------------------------------

fn biconnected_components(g: &SignedGraph) -> Vec<Vec<(usize, usize)>> {
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0usize;
    let mut stack: Vec<(usize, usize)> = Vec::new();
    let mut comps: Vec<Vec<(usize, usize)>> = Vec::new();

    fn dfs(
        g: &SignedGraph,
        v: usize,
        parent: usize,
        disc: &mut [usize],
        low: &mut [usize],
        time: &mut usize,
        stack: &mut Vec<(usize, usize)>,
        comps: &mut Vec<Vec<(usize, usize)>>,
    ) {
        disc[v] = *time;
        low[v] = *time;
        *time += 1;
        for w in g.neighbors(v) {
            if disc[w] == usize::MAX {
                stack.push((v, w));
                dfs(g, w, v, disc, low, time, stack, comps);
                low[v] = low[v].min(low[w]);
                if low[w] >= disc[v] {
                    let mut comp = Vec::new();
                    while let Some(e) = stack.pop() {
                        let done = e == (v, w);
                        comp.push(e);
                        if done {
                            break;
                        }
                    }
                    comps.push(comp);
                }
            } else if w != parent && disc[w] < disc[v] {
                stack.push((v, w));
                low[v] = low[v].min(disc[w]);
            }
        }
    }

    for v in 0..n {
        if disc[v] == usize::MAX {
            dfs(g, v, usize::MAX, &mut disc, &mut low, &mut time, &mut stack, &mut comps);
        }
    }
    comps
}

struct Fragment {
    /// Unembedded interior vertices; empty for a chord between embedded ones.
    comp: BTreeSet<usize>,
    attach: Vec<usize>,
}

fn find_cycle_in(adj: &BTreeMap<usize, Vec<usize>>) -> Option<Vec<usize>> {
    let root = *adj.keys().next()?;
    let mut parent: BTreeMap<usize, usize> = BTreeMap::new();
    let mut seen: BTreeSet<usize> = BTreeSet::new();
    let mut stack = vec![(root, usize::MAX)];
    while let Some((v, from)) = stack.pop() {
        if seen.contains(&v) {
            continue;
        }
        seen.insert(v);
        if from != usize::MAX {
            parent.insert(v, from);
        }
        for &w in &adj[&v] {
            if w == from {
                continue;
            }
            if seen.contains(&w) {
                // fundamental cycle w .. v
                let mut cyc = vec![v];
                let mut cur = v;
                while cur != w {
                    match parent.get(&cur) {
                        Some(&p) => {
                            cur = p;
                            cyc.push(cur);
                        }
                        None => break,
                    }
                }
                if *cyc.last().unwrap() == w {
                    return Some(cyc);
                }
            } else {
                stack.push((w, v));
            }
        }
    }
    None
}

/// Embeds one 2-connected component given by its edge list; returns the
/// rotation at each of its vertices, or NonPlanar.
fn embed_biconnected(edges: &[(usize, usize)]) -> Result<BTreeMap<usize, Vec<usize>>> {
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut all_edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    for &(u, v) in edges {
        let key = if u < v { (u, v) } else { (v, u) };
        if all_edges.insert(key) {
            adj.entry(u).or_default().push(v);
            adj.entry(v).or_default().push(u);
        }
    }
    for list in adj.values_mut() {
        list.sort_unstable();
    }

    let cycle = find_cycle_in(&adj)
        .ok_or_else(|| Error::Defect("biconnected component with no cycle".into()))?;
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle.iter().rev().copied().collect()];
    let mut emb_v: BTreeSet<usize> = cycle.iter().copied().collect();
    let mut emb_e: BTreeSet<(usize, usize)> = BTreeSet::new();
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        emb_e.insert(if a < b { (a, b) } else { (b, a) });
    }

    loop {
        // collect fragments
        let mut fragments: Vec<Fragment> = Vec::new();
        for &(u, v) in all_edges.iter() {
            if emb_v.contains(&u) && emb_v.contains(&v) && !emb_e.contains(&(u, v)) {
                fragments.push(Fragment {
                    comp: BTreeSet::new(),
                    attach: vec![u, v],
                });
            }
        }
        let mut assigned: BTreeSet<usize> = BTreeSet::new();
        for &v in adj.keys() {
            if emb_v.contains(&v) || assigned.contains(&v) {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut attach = BTreeSet::new();
            let mut stack = vec![v];
            comp.insert(v);
            while let Some(x) = stack.pop() {
                for &w in &adj[&x] {
                    if emb_v.contains(&w) {
                        attach.insert(w);
                    } else if comp.insert(w) {
                        stack.push(w);
                    }
                }
            }
            assigned.extend(comp.iter().copied());
            fragments.push(Fragment {
                comp,
                attach: attach.into_iter().collect(),
            });
        }
        if fragments.is_empty() {
            break;
        }

        // admissible faces per fragment
        let mut admissible: Vec<Vec<usize>> = Vec::with_capacity(fragments.len());
        for frag in &fragments {
            let mut ok = Vec::new();
            for (fi, face) in faces.iter().enumerate() {
                let set: BTreeSet<usize> = face.iter().copied().collect();
                if frag.attach.iter().all(|a| set.contains(a)) {
                    ok.push(fi);
                }
            }
            if ok.is_empty() {
                return Err(Error::NonPlanar);
            }
            admissible.push(ok);
        }
        let pick = admissible
            .iter()
            .position(|a| a.len() == 1)
            .unwrap_or(0);
        let frag = &fragments[pick];
        let face_idx = admissible[pick][0];

        // a path through the fragment between two attachments
        let path: Vec<usize> = if frag.comp.is_empty() {
            frag.attach.clone()
        } else {
            let a = frag.attach[0];
            let mut parent: BTreeMap<usize, usize> = BTreeMap::new();
            let mut seen: BTreeSet<usize> = BTreeSet::new();
            let mut queue: std::collections::VecDeque<usize> = Default::default();
            seen.insert(a);
            queue.push_back(a);
            let mut found = None;
            'bfs: while let Some(x) = queue.pop_front() {
                for &w in &adj[&x] {
                    if x == a && !frag.comp.contains(&w) {
                        continue; // leave the embedded part only into the fragment
                    }
                    if seen.contains(&w) {
                        continue;
                    }
                    if frag.comp.contains(&w) {
                        seen.insert(w);
                        parent.insert(w, x);
                        queue.push_back(w);
                    } else if frag.attach.contains(&w) && w != a {
                        parent.insert(w, x);
                        found = Some(w);
                        break 'bfs;
                    }
                }
            }
            let b = found.ok_or_else(|| {
                Error::Defect("fragment with a single attachment in a 2-connected graph".into())
            })?;
            let mut p = vec![b];
            let mut cur = b;
            while cur != a {
                cur = parent[&cur];
                p.push(cur);
            }
            p.reverse();
            p
        };

        // split the face along the path
        let face = faces[face_idx].clone();
        let m = face.len();
        let a = path[0];
        let b = *path.last().unwrap();
        let pa = face.iter().position(|&x| x == a).unwrap();
        let pb = face.iter().position(|&x| x == b).unwrap();
        let segment = |from: usize, to: usize| -> Vec<usize> {
            // vertices strictly between positions from and to, walking forward
            let mut out = Vec::new();
            let mut i = (from + 1) % m;
            while i != to {
                out.push(face[i]);
                i = (i + 1) % m;
            }
            out
        };
        let mut f1 = path.clone();
        f1.extend(segment(pb, pa));
        let mut f2: Vec<usize> = path.iter().rev().copied().collect();
        f2.extend(segment(pa, pb));
        faces[face_idx] = f1;
        faces.push(f2);

        for w in path.iter().skip(1).take(path.len().saturating_sub(2)) {
            emb_v.insert(*w);
        }
        for pair in path.windows(2) {
            let (x, y) = (pair[0], pair[1]);
            emb_e.insert(if x < y { (x, y) } else { (y, x) });
        }
    }

    // rotation from the directed face cycles
    let mut succ: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for face in &faces {
        let m = face.len();
        for t in 0..m {
            let (u, v, w) = (face[t], face[(t + 1) % m], face[(t + 2) % m]);
            if succ.insert((v, u), w).is_some() {
                return Err(Error::Defect("directed edge traced twice".into()));
            }
        }
    }
    let mut rotation = BTreeMap::new();
    for (&v, nbrs) in &adj {
        let mut order = Vec::with_capacity(nbrs.len());
        let mut cur = nbrs[0];
        for _ in 0..nbrs.len() {
            order.push(cur);
            cur = *succ
                .get(&(v, cur))
                .ok_or_else(|| Error::Defect(format!("missing successor at {}", v)))?;
        }
        if cur != nbrs[0] || order.len() != nbrs.len() {
            return Err(Error::Defect(format!("rotation at {} does not close", v)));
        }
        rotation.insert(v, order);
    }
    Ok(rotation)
}

/// Computes a rotation system for a connected planar graph; the outer face is
/// the first traced face and may be re-designated by the caller.
pub fn planar_embed(g: &SignedGraph) -> Result<RotationSystem> {
    let n = g.vertex_count();
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if n >= 3 && g.edge_count() > 3 * n - 6 {
        return Err(Error::NonPlanar);
    }
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); n];
    for comp in biconnected_components(&g) {
        if comp.len() == 1 {
            let (u, v) = comp[0];
            rotation[u].push(v);
            rotation[v].push(u);
        } else {
            for (v, order) in embed_biconnected(&comp)? {
                rotation[v].extend(order);
            }
        }
    }
    let mut rs = RotationSystem {
        rotation,
        outer_face: Vec::new(),
    };
    let faces = trace_faces(g, &rs)?;
    rs.outer_face = faces.into_iter().next().unwrap_or_default();
    Ok(rs)
}

#[cfg(test)]
pub(crate) fn octahedron_edges() -> Vec<(usize, usize)> {
    vec![
        (0, 1),
        (0, 2),
        (0, 3),
        (0, 4),
        (1, 2),
        (2, 3),
        (3, 4),
        (4, 1),
        (5, 1),
        (5, 2),
        (5, 3),
        (5, 4),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> SignedGraph {
        SignedGraph::all_positive(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn triangle_has_two_triangular_faces() {
        let g = SignedGraph::all_positive(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let r = planar_embed(&g).unwrap();
        let faces = trace_faces(&g, &r).unwrap();
        assert_eq!(faces.len(), 2);
        assert!(faces.iter().all(|f| f.len() == 3));
        assert!(is_triangulation(&g, &r).unwrap());
    }

    #[test]
    fn c4_has_two_faces_of_length_4() {
        let g = SignedGraph::all_positive(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let r = planar_embed(&g).unwrap();
        let faces = trace_faces(&g, &r).unwrap();
        assert_eq!(faces.len(), 2);
        assert!(faces.iter().all(|f| f.len() == 4));
        assert!(!is_triangulation(&g, &r).unwrap());
        assert!(validate_near_triangulation(&g, &r).is_err());
    }

    #[test]
    fn k4_embeds_with_four_triangles() {
        let g = k4();
        let r = planar_embed(&g).unwrap();
        let faces = trace_faces(&g, &r).unwrap();
        assert_eq!(faces.len(), 4);
        assert!(faces.iter().all(|f| f.len() == 3));
        assert!(validate_near_triangulation(&g, &r).is_ok());
        let total: usize = faces.iter().map(|f| f.len()).sum();
        assert_eq!(total, 2 * g.edge_count());
    }

    #[test]
    fn k5_is_nonplanar() {
        let mut edges = Vec::new();
        for u in 0..5 {
            for v in (u + 1)..5 {
                edges.push((u, v));
            }
        }
        let g = SignedGraph::all_positive(5, &edges).unwrap();
        assert!(matches!(planar_embed(&g), Err(Error::NonPlanar)));
    }

    #[test]
    fn k33_is_nonplanar() {
        let mut edges = Vec::new();
        for u in 0..3 {
            for v in 3..6 {
                edges.push((u, v));
            }
        }
        let g = SignedGraph::all_positive(6, &edges).unwrap();
        assert!(matches!(planar_embed(&g), Err(Error::NonPlanar)));
    }

    #[test]
    fn octahedron_is_a_triangulation() {
        let g = SignedGraph::all_positive(6, &octahedron_edges()).unwrap();
        let r = planar_embed(&g).unwrap();
        let faces = trace_faces(&g, &r).unwrap();
        assert_eq!(faces.len(), 8);
        assert!(is_triangulation(&g, &r).unwrap());
        assert!(validate_near_triangulation(&g, &r).is_ok());
    }

    #[test]
    fn chord_detection() {
        let g = SignedGraph::all_positive(4, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]).unwrap();
        let outer = [0, 1, 2, 3];
        assert_eq!(find_chord(&outer, &g), Some((0, 2)));
        let tri = SignedGraph::all_positive(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(find_chord(&[0, 1, 2], &tri), None);
        // wheel W5: hub 5 inside a 5-cycle; all chords would use the hub
        let wheel = SignedGraph::all_positive(
            6,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (0, 4),
                (5, 0),
                (5, 1),
                (5, 2),
                (5, 3),
                (5, 4),
            ],
        )
        .unwrap();
        assert_eq!(find_chord(&[0, 1, 2, 3, 4], &wheel), None);
    }

    #[test]
    fn ear_neighbors_fan() {
        // fan: outer v0 v1 v2(=v_n) with interior u=3; faces v2-v0-3 and v2-3-v1
        let g =
            SignedGraph::all_positive(4, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (2, 3)])
                .unwrap();
        let r = planar_embed(&g).unwrap();
        // pick outer face containing 0,1,2? K4: any triangle face. Use 0,1,2 ordering.
        let faces = trace_faces(&g, &r).unwrap();
        let outer = faces
            .iter()
            .find(|f| f.contains(&0) && f.contains(&1) && f.contains(&2))
            .unwrap()
            .clone();
        let v_n = *outer.last().unwrap();
        let ear = ear_neighbors(v_n, &r, &outer).unwrap();
        assert_eq!(ear.len(), 3);
        assert_eq!(ear[0], outer[0]);
        assert_eq!(*ear.last().unwrap(), outer[outer.len() - 2]);
        assert_eq!(ear[1], 3);
    }

    #[test]
    fn ear_neighbors_triangle() {
        let g = SignedGraph::all_positive(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let r = planar_embed(&g).unwrap();
        let outer = vec![0, 1, 2];
        let ear = ear_neighbors(2, &r, &outer).unwrap();
        assert_eq!(ear, vec![0, 1]);
        assert!(matches!(
            ear_neighbors(7, &r, &outer),
            Err(Error::NotOnOuterFace(7))
        ));
    }

    #[test]
    fn face_length_sum_is_twice_edges() {
        let g = SignedGraph::all_positive(6, &octahedron_edges()).unwrap();
        let r = planar_embed(&g).unwrap();
        let faces = trace_faces(&g, &r).unwrap();
        let total: usize = faces.iter().map(|f| f.len()).sum();
        assert_eq!(total, 2 * g.edge_count());
    }

    #[test]
    fn tree_embedding_has_one_face() {
        let g = SignedGraph::all_positive(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        let r = planar_embed(&g).unwrap();
        let faces = trace_faces(&g, &r).unwrap();
        assert_eq!(faces.len(), 1);
        assert_eq!(faces[0].len(), 6);
    }
}
