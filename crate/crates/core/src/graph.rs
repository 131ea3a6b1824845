//! Signed-graph data model: graphs with `{+1, -1}` edge signs, the symmetric
//! color set `M_n`, colorings, class subgraphs and the forest checkers.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use crate::dsu::Dsu;
use crate::{Error, Result};

pub type Sign = i8;

/// A finite simple undirected graph with a sign on every edge. Vertices are
/// `0..vertex_count`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedGraph {
    vertex_count: usize,
    adj: Vec<BTreeSet<usize>>,
    signs: BTreeMap<(usize, usize), Sign>,
}

fn edge_key(u: usize, v: usize) -> (usize, usize) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

impl SignedGraph {
    pub fn new(vertex_count: usize) -> Self {
        SignedGraph {
            vertex_count,
            adj: vec![BTreeSet::new(); vertex_count],
            signs: BTreeMap::new(),
        }
    }

    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize, Sign)]) -> Result<Self> {
        let mut g = SignedGraph::new(vertex_count);
        for &(u, v, s) in edges {
            g.add_edge(u, v, s)?;
        }
        Ok(g)
    }

    /// All-positive graph over an unsigned edge set.
    pub fn all_positive(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = SignedGraph::new(vertex_count);
        for &(u, v) in edges {
            g.add_edge(u, v, 1)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize, sign: Sign) -> Result<()> {
        if u >= self.vertex_count {
            return Err(Error::UnknownVertex(u));
        }
        if v >= self.vertex_count {
            return Err(Error::UnknownVertex(v));
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if sign != 1 && sign != -1 {
            return Err(Error::InvalidSign(sign));
        }
        let key = edge_key(u, v);
        if self.signs.contains_key(&key) {
            return Err(Error::DuplicateEdge(key.0, key.1));
        }
        self.signs.insert(key, sign);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.signs.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.signs.contains_key(&edge_key(u, v))
    }

    pub fn sign(&self, u: usize, v: usize) -> Option<Sign> {
        self.signs.get(&edge_key(u, v)).copied()
    }

    pub fn negate_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let key = edge_key(u, v);
        match self.signs.get_mut(&key) {
            Some(s) => {
                *s = -*s;
                Ok(())
            }
            None => Err(Error::Defect(format!("no edge {}-{}", u, v))),
        }
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as `(u, v, sign)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, Sign)> + '_ {
        self.signs.iter().map(|(&(u, v), &s)| (u, v, s))
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count <= 1 {
            return true;
        }
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.vertex_count
    }

    /// Induced subgraph on `verts` (ascending), relabeled to local ids
    /// `0..verts.len()`. Returns the subgraph and the local-to-global map.
    pub fn induced(&self, verts: &[usize]) -> Result<(SignedGraph, Vec<usize>)> {
        let globals: Vec<usize> = verts.to_vec();
        let mut local_of = BTreeMap::new();
        for (i, &v) in globals.iter().enumerate() {
            if v >= self.vertex_count {
                return Err(Error::UnknownVertex(v));
            }
            local_of.insert(v, i);
        }
        let mut sub = SignedGraph::new(globals.len());
        for (i, &v) in globals.iter().enumerate() {
            for &w in &self.adj[v] {
                if let Some(&j) = local_of.get(&w) {
                    if i < j {
                        sub.add_edge(i, j, self.sign(v, w).unwrap())?;
                    }
                }
            }
        }
        Ok((sub, globals))
    }
}

/// Canonical order on colors: ascending absolute value, positive before
/// negative, zero first. Fixes determinism wherever a color gets chosen.
pub fn canonical_color_cmp(a: i32, b: i32) -> Ordering {
    (a.abs(), a < 0).cmp(&(b.abs(), b < 0))
}

pub fn canonical_sort(colors: &mut Vec<i32>) {
    colors.sort_by(|&a, &b| canonical_color_cmp(a, b));
    colors.dedup();
}

/// The color set `M_n`: `{±1,…,±k}` for `n = 2k`, `{0, ±1,…,±k}` for
/// `n = 2k+1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ColorDomain {
    n: u32,
}

impl ColorDomain {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDomain(n));
        }
        Ok(ColorDomain { n })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn has_zero(&self) -> bool {
        self.n % 2 == 1
    }

    /// Largest absolute color value, `k = floor(n/2)`.
    pub fn max_class(&self) -> u32 {
        self.n / 2
    }

    /// Values in canonical order.
    pub fn values(&self) -> Vec<i32> {
        let mut out = Vec::with_capacity(self.n as usize);
        if self.has_zero() {
            out.push(0);
        }
        for i in 1..=self.max_class() as i32 {
            out.push(i);
            out.push(-i);
        }
        out
    }

    pub fn contains(&self, v: i32) -> bool {
        if v == 0 {
            self.has_zero()
        } else {
            v.unsigned_abs() <= self.max_class()
        }
    }

    /// Whether class `i` (the pair `{i, -i}`) is representable.
    pub fn representable_class(&self, i: u32) -> bool {
        if i == 0 {
            self.has_zero()
        } else {
            i <= self.max_class()
        }
    }
}

/// A vertex coloring. The assignment may be partial while a coloring is being
/// assembled from pieces; the checkers require every edge endpoint colored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    domain: ColorDomain,
    assignment: BTreeMap<usize, i32>,
}

impl Coloring {
    pub fn new(domain: ColorDomain) -> Self {
        Coloring {
            domain,
            assignment: BTreeMap::new(),
        }
    }

    pub fn from_values(n: u32, values: &[i32]) -> Result<Self> {
        let mut c = Coloring::new(ColorDomain::new(n)?);
        for (v, &x) in values.iter().enumerate() {
            c.set(v, x);
        }
        Ok(c)
    }

    pub fn domain(&self) -> ColorDomain {
        self.domain
    }

    pub fn set(&mut self, v: usize, color: i32) {
        self.assignment.insert(v, color);
    }

    pub fn get(&self, v: usize) -> Option<i32> {
        self.assignment.get(&v).copied()
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    /// Colored vertices, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.assignment.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, i32)> + '_ {
        self.assignment.iter().map(|(&v, &c)| (v, c))
    }

    pub fn is_total_on(&self, g: &SignedGraph) -> bool {
        (0..g.vertex_count()).all(|v| self.assignment.contains_key(&v))
    }

    /// True iff every assigned value lies in the declared domain.
    pub fn values_in_domain(&self) -> bool {
        self.assignment.values().all(|&c| self.domain.contains(c))
    }
}

/// The class subgraph for the color pair `{i, -i}`: vertices colored `i` or
/// `-i`; positive edges with equal endpoint colors, negative edges with
/// opposite endpoint colors (for `i = 0` both rules read: both endpoints 0).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassSubgraph {
    pub class_value: u32,
    pub vertices: BTreeSet<usize>,
    pub edges: Vec<(usize, usize)>,
}

/// Whether the edge `uv` with sign `s` belongs to the class of its endpoint
/// colors. Both endpoints must be in the same class for this to apply.
pub(crate) fn edge_in_class(cu: i32, cv: i32, s: Sign) -> bool {
    if cu.abs() != cv.abs() {
        return false;
    }
    if s == 1 {
        cu == cv
    } else {
        cu == -cv
    }
}

pub fn class_subgraph(g: &SignedGraph, c: &Coloring, i: u32) -> Result<ClassSubgraph> {
    if !c.domain().representable_class(i) {
        return Err(Error::InvalidClass(i));
    }
    let mut vertices = BTreeSet::new();
    for (v, col) in c.iter() {
        if col.unsigned_abs() == i {
            vertices.insert(v);
        }
    }
    let mut edges = Vec::new();
    for (u, v, s) in g.edges() {
        if let (Some(cu), Some(cv)) = (c.get(u), c.get(v)) {
            if cu.unsigned_abs() == i && edge_in_class(cu, cv, s) {
                edges.push((u, v));
            }
        }
    }
    Ok(ClassSubgraph {
        class_value: i,
        vertices,
        edges,
    })
}

/// Acyclicity test over an explicit vertex/edge set.
pub fn is_forest<I>(vertices: &BTreeSet<usize>, edges: I) -> bool
where
    I: IntoIterator<Item = (usize, usize)>,
{
    let ids: Vec<usize> = vertices.iter().copied().collect();
    let index: BTreeMap<usize, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut dsu = Dsu::new(ids.len());
    for (u, v) in edges {
        let (iu, iv) = match (index.get(&u), index.get(&v)) {
            (Some(&a), Some(&b)) => (a, b),
            _ => return false, // edge endpoint outside vertex set
        };
        if !dsu.union(iu, iv) {
            return false;
        }
    }
    true
}

/// Finds some cycle in the given graph, as a vertex sequence, if one exists.
pub fn find_cycle(vertices: &BTreeSet<usize>, edges: &[(usize, usize)]) -> Option<Vec<usize>> {
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &v in vertices {
        adj.entry(v).or_default();
    }
    for &(u, v) in edges {
        adj.entry(u).or_default().push(v);
        adj.entry(v).or_default().push(u);
    }
    let mut parent: BTreeMap<usize, usize> = BTreeMap::new();
    let mut seen: BTreeSet<usize> = BTreeSet::new();
    for &root in adj.keys() {
        if seen.contains(&root) {
            continue;
        }
        // DFS from root; a visited non-parent neighbor closes a cycle.
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
                    // walk v up to w
                    let mut cycle = vec![v];
                    let mut cur = v;
                    while cur != w {
                        cur = match parent.get(&cur) {
                            Some(&p) => p,
                            None => break,
                        };
                        cycle.push(cur);
                    }
                    if *cycle.last().unwrap() == w {
                        return Some(cycle);
                    }
                } else {
                    stack.push((w, v));
                }
            }
        }
    }
    None
}

/// Distinct classes `|c(v)|` used by the coloring, ascending.
pub fn used_classes(c: &Coloring) -> BTreeSet<u32> {
    c.iter().map(|(_, col)| col.unsigned_abs()).collect()
}

/// True iff every class subgraph of `(g, c)` is a forest. Requires every
/// edge endpoint colored; vertices with no incident colored edge are ignored.
pub fn is_signed_tree_coloring(g: &SignedGraph, c: &Coloring) -> bool {
    for (u, v, _) in g.edges() {
        if c.get(u).is_none() || c.get(v).is_none() {
            return false;
        }
    }
    for i in used_classes(c) {
        match class_subgraph(g, c, i) {
            Ok(sub) => {
                if !is_forest(&sub.vertices, sub.edges.iter().copied()) {
                    return false;
                }
            }
            Err(_) => return false,
        }
    }
    true
}

/// The MRS properness rule: no edge with `c(u) = sigma(uv) * c(v)`.
pub fn is_proper_signed_coloring(g: &SignedGraph, c: &Coloring) -> bool {
    for (u, v, s) in g.edges() {
        match (c.get(u), c.get(v)) {
            (Some(cu), Some(cv)) => {
                if cu == s as i32 * cv {
                    return false;
                }
            }
            _ => return false,
        }
    }
    true
}

/// Certifies `va(G, sigma) <= n`: the coloring is total, uses only `M_n`
/// values, and every class subgraph is a forest.
pub fn va_upper_check(g: &SignedGraph, c: &Coloring, n: u32) -> bool {
    let domain = match ColorDomain::new(n) {
        Ok(d) => d,
        Err(_) => return false,
    };
    if !c.is_total_on(g) {
        return false;
    }
    if !c.iter().all(|(_, col)| domain.contains(col)) {
        return false;
    }
    is_signed_tree_coloring(g, c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle(signs: [Sign; 3]) -> SignedGraph {
        // edges xy, yz, zx with x=0, y=1, z=2
        SignedGraph::from_edges(3, &[(0, 1, signs[0]), (1, 2, signs[1]), (0, 2, signs[2])])
            .unwrap()
    }

    fn coloring(n: u32, vals: &[i32]) -> Coloring {
        Coloring::from_values(n, vals).unwrap()
    }

    #[test]
    fn domain_values_canonical() {
        assert_eq!(ColorDomain::new(2).unwrap().values(), vec![1, -1]);
        assert_eq!(ColorDomain::new(3).unwrap().values(), vec![0, 1, -1]);
        assert_eq!(ColorDomain::new(4).unwrap().values(), vec![1, -1, 2, -2]);
        assert_eq!(ColorDomain::new(5).unwrap().values(), vec![0, 1, -1, 2, -2]);
    }

    #[test]
    fn class_subgraph_all_positive_triangle() {
        let g = triangle([1, 1, 1]);
        let c = coloring(2, &[1, 1, 1]);
        let sub = class_subgraph(&g, &c, 1).unwrap();
        assert_eq!(sub.vertices.len(), 3);
        assert_eq!(sub.edges.len(), 3);
    }

    #[test]
    fn class_subgraph_mixed_signs() {
        // sigma(xy)=+1, sigma(yz)=sigma(zx)=-1, all colored 1
        let g = triangle([1, -1, -1]);
        let c = coloring(2, &[1, 1, 1]);
        let sub = class_subgraph(&g, &c, 1).unwrap();
        assert_eq!(sub.vertices.len(), 3);
        assert_eq!(sub.edges, vec![(0, 1)]);
    }

    #[test]
    fn class_subgraph_positive_path_unequal_colors() {
        let g = SignedGraph::from_edges(2, &[(0, 1, 1)]).unwrap();
        let c = coloring(2, &[1, -1]);
        let sub = class_subgraph(&g, &c, 1).unwrap();
        assert_eq!(sub.vertices.len(), 2);
        assert!(sub.edges.is_empty());
    }

    #[test]
    fn class_subgraph_invalid_class() {
        let g = triangle([1, 1, 1]);
        let c = coloring(2, &[1, 1, -1]);
        assert!(matches!(class_subgraph(&g, &c, 0), Err(Error::InvalidClass(0))));
        assert!(matches!(class_subgraph(&g, &c, 2), Err(Error::InvalidClass(2))));
    }

    #[test]
    fn forest_checks() {
        let vs: BTreeSet<usize> = [0, 1, 2].into_iter().collect();
        assert!(is_forest(&vs, [(0, 1), (1, 2)]));
        assert!(!is_forest(&vs, [(0, 1), (1, 2), (0, 2)]));
        let five: BTreeSet<usize> = (0..5).collect();
        assert!(is_forest(&five, []));
    }

    #[test]
    fn tree_coloring_examples() {
        let g = triangle([1, 1, 1]);
        assert!(is_signed_tree_coloring(&g, &coloring(2, &[1, 1, -1])));
        assert!(!is_signed_tree_coloring(&g, &coloring(2, &[1, 1, 1])));
        let h = triangle([1, -1, -1]);
        assert!(is_signed_tree_coloring(&h, &coloring(2, &[1, 1, 1])));
    }

    #[test]
    fn proper_coloring_examples() {
        let pos = SignedGraph::from_edges(2, &[(0, 1, 1)]).unwrap();
        assert!(!is_proper_signed_coloring(&pos, &coloring(2, &[1, 1])));
        let neg = SignedGraph::from_edges(2, &[(0, 1, -1)]).unwrap();
        assert!(is_proper_signed_coloring(&neg, &coloring(2, &[1, 1])));
        assert!(!is_proper_signed_coloring(&neg, &coloring(3, &[0, 0])));
    }

    #[test]
    fn va_upper_examples() {
        let h = triangle([1, -1, -1]);
        assert!(va_upper_check(&h, &coloring(2, &[1, 1, 1]), 2));
        // n=1 forces 0 everywhere; every edge joins 0 to 0, giving a cycle
        assert!(!va_upper_check(&h, &coloring(1, &[0, 0, 0]), 1));
        let k1 = SignedGraph::new(1);
        assert!(va_upper_check(&k1, &coloring(1, &[0]), 1));
    }

    #[test]
    fn proper_implies_tree_coloring() {
        let g = triangle([1, -1, 1]);
        let c = coloring(3, &[0, 1, -1]);
        if is_proper_signed_coloring(&g, &c) {
            assert!(is_signed_tree_coloring(&g, &c));
        }
    }

    #[test]
    fn zero_class_includes_both_signs() {
        let g = triangle([1, -1, -1]);
        let c = coloring(1, &[0, 0, 0]);
        let sub = class_subgraph(&g, &c, 0).unwrap();
        assert_eq!(sub.edges.len(), 3);
    }

    #[test]
    fn find_cycle_reports_triangle() {
        let vs: BTreeSet<usize> = [0, 1, 2].into_iter().collect();
        let cyc = find_cycle(&vs, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(cyc.len(), 3);
        assert!(find_cycle(&vs, &[(0, 1), (1, 2)]).is_none());
    }
}
