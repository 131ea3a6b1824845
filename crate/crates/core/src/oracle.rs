//! Ground-truth brute force: exhaustive signed and unsigned vertex
//! arboricity on small instances, plus seeded instance generators.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dsu::RollbackDsu;
use crate::graph::{edge_in_class, is_signed_tree_coloring, ColorDomain, Coloring, SignedGraph};
use crate::planar::RotationSystem;
use crate::switch::{signature_from_potential, Potential};
use crate::{Error, Result};

/// Hard cap on oracle instance size; exhaustive search beyond this is
/// rejected rather than silently slow.
pub const ORACLE_VERTEX_CAP: usize = 12;

#[derive(Clone, Debug)]
pub struct OracleResult {
    pub va: u32,
    pub witness: Coloring,
    /// Number of color assignments examined across all attempted n.
    pub colorings_checked: u64,
}

/// Exhaustive signed vertex arboricity: the least `n <= n_max` admitting a
/// tree-n-coloring from `M_n`, with a witness. With pruning, partial
/// colorings that close a cycle in a class are abandoned and the first
/// vertex is restricted to non-negative colors (global-negation symmetry).
pub fn oracle_va(g: &SignedGraph, n_max: u32) -> Result<OracleResult> {
    oracle_va_opts(g, n_max, true)
}

pub fn oracle_va_opts(g: &SignedGraph, n_max: u32, prune: bool) -> Result<OracleResult> {
    if g.vertex_count() > ORACLE_VERTEX_CAP {
        return Err(Error::CapExceeded(format!(
            "{} vertices exceeds the oracle cap of {}",
            g.vertex_count(),
            ORACLE_VERTEX_CAP
        )));
    }
    let mut checked: u64 = 0;
    for n in 1..=n_max {
        if let Some(witness) = search(g, n, prune, &mut checked)? {
            return Ok(OracleResult {
                va: n,
                witness,
                colorings_checked: checked,
            });
        }
    }
    Err(Error::Exhausted(n_max))
}

fn search(g: &SignedGraph, n: u32, prune: bool, checked: &mut u64) -> Result<Option<Coloring>> {
    let domain = ColorDomain::new(n)?;
    let values = domain.values();
    let vcount = g.vertex_count();
    let mut colors: Vec<Option<i32>> = vec![None; vcount];
    let mut dsu = RollbackDsu::new(vcount);

    fn rec(
        g: &SignedGraph,
        values: &[i32],
        v: usize,
        prune: bool,
        colors: &mut Vec<Option<i32>>,
        dsu: &mut RollbackDsu,
        checked: &mut u64,
    ) -> bool {
        if v == g.vertex_count() {
            if prune {
                return true; // forests maintained incrementally
            }
            let mut map = BTreeMap::new();
            for (u, c) in colors.iter().enumerate() {
                map.insert(u, c.unwrap());
            }
            let coloring = coloring_over(values, &map);
            return is_signed_tree_coloring(g, &coloring);
        }
        for &val in values {
            if prune && v == 0 && val < 0 {
                continue;
            }
            *checked += 1;
            colors[v] = Some(val);
            if prune {
                let mark = dsu.mark();
                let mut ok = true;
                for u in g.neighbors(v) {
                    if u >= v {
                        continue;
                    }
                    let cu = colors[u].unwrap();
                    if cu.abs() == val.abs() && edge_in_class(cu, val, g.sign(u, v).unwrap()) {
                        if !dsu.union(u, v) {
                            ok = false;
                            break;
                        }
                    }
                }
                if ok && rec(g, values, v + 1, prune, colors, dsu, checked) {
                    return true;
                }
                dsu.rollback_to(mark);
            } else if rec(g, values, v + 1, prune, colors, dsu, checked) {
                return true;
            }
            colors[v] = None;
        }
        false
    }

    if rec(g, &values, 0, prune, &mut colors, &mut dsu, checked) {
        let mut c = Coloring::new(domain);
        for (v, col) in colors.iter().enumerate() {
            c.set(v, col.expect("search returned a total coloring"));
        }
        if !is_signed_tree_coloring(g, &c) {
            return Err(Error::Defect("oracle witness failed the checker".into()));
        }
        Ok(Some(c))
    } else {
        Ok(None)
    }
}

fn coloring_over(_values: &[i32], map: &BTreeMap<usize, i32>) -> Coloring {
    let k = map.values().map(|c| c.unsigned_abs()).max().unwrap_or(0);
    let zero = map.values().any(|&c| c == 0);
    let n = if zero || k == 0 { 2 * k + 1 } else { 2 * k };
    let mut c = Coloring::new(ColorDomain::new(n.max(1)).unwrap());
    for (&v, &col) in map {
        c.set(v, col);
    }
    c
}

/// Exhaustive unsigned vertex arboricity: least `k` whose color classes all
/// induce forests. Classes are interchangeable, so vertex `v` may only use
/// colors up to one past the maximum already in use.
pub fn oracle_va_unsigned(edges: &[(usize, usize)], k_max: u32) -> Result<u32> {
    let vcount = edges
        .iter()
        .map(|&(u, v)| u.max(v) + 1)
        .max()
        .unwrap_or(0);
    if vcount > ORACLE_VERTEX_CAP {
        return Err(Error::CapExceeded(format!(
            "{} vertices exceeds the oracle cap of {}",
            vcount, ORACLE_VERTEX_CAP
        )));
    }
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); vcount];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }

    fn rec(
        adj: &[Vec<usize>],
        k: u32,
        v: usize,
        max_used: u32,
        colors: &mut Vec<u32>,
        dsu: &mut RollbackDsu,
    ) -> bool {
        if v == adj.len() {
            return true;
        }
        for c in 1..=(max_used + 1).min(k) {
            colors[v] = c;
            let mark = dsu.mark();
            let mut ok = true;
            for &u in &adj[v] {
                if u < v && colors[u] == c {
                    if !dsu.union(u, v) {
                        ok = false;
                        break;
                    }
                }
            }
            if ok && rec(adj, k, v + 1, max_used.max(c), colors, dsu) {
                return true;
            }
            dsu.rollback_to(mark);
            colors[v] = 0;
        }
        false
    }

    for k in 1..=k_max {
        let mut colors = vec![0u32; vcount];
        let mut dsu = RollbackDsu::new(vcount);
        if rec(&adj, k, 0, 0, &mut colors, &mut dsu) {
            return Ok(k);
        }
    }
    Err(Error::Exhausted(k_max))
}

/// Random planar triangulation: Apollonian growth from K3 (insert a vertex
/// into a random face, joined to its three corners) followed by random
/// diagonal flips that keep the triangulation simple. Deterministic per seed.
pub fn generate_triangulation(
    vertex_count: usize,
    flips: usize,
    seed: u64,
) -> Result<(Vec<(usize, usize)>, RotationSystem)> {
    if vertex_count < 3 {
        return Err(Error::Defect("a triangulation needs at least 3 vertices".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1]];
    let mut edges: std::collections::BTreeSet<(usize, usize)> =
        [(0, 1), (1, 2), (0, 2)].into_iter().collect();
    let mut degree = vec![0usize; vertex_count];
    degree[0] = 2;
    degree[1] = 2;
    degree[2] = 2;

    for v in 3..vertex_count {
        let fi = rng.gen_range(0..faces.len());
        let [a, b, c] = faces[fi];
        faces[fi] = [a, b, v];
        faces.push([b, c, v]);
        faces.push([c, a, v]);
        for &w in &[a, b, c] {
            edges.insert(if w < v { (w, v) } else { (v, w) });
            degree[w] += 1;
        }
        degree[v] = 3;
    }

    for _ in 0..flips {
        // bounded retries per flip; an inadmissible draw is skipped
        for _attempt in 0..32 {
            let list: Vec<(usize, usize)> = edges.iter().copied().collect();
            let (u, v) = list[rng.gen_range(0..list.len())];
            if degree[u] <= 3 || degree[v] <= 3 {
                continue;
            }
            let fa = faces.iter().position(|f| has_directed(f, u, v));
            let fb = faces.iter().position(|f| has_directed(f, v, u));
            let (fa, fb) = match (fa, fb) {
                (Some(a), Some(b)) => (a, b),
                _ => continue,
            };
            let x = third(&faces[fa], u, v);
            let y = third(&faces[fb], u, v);
            if x == y || edges.contains(&key(x, y)) {
                continue;
            }
            faces[fa] = [x, u, y];
            faces[fb] = [y, v, x];
            edges.remove(&key(u, v));
            edges.insert(key(x, y));
            degree[u] -= 1;
            degree[v] -= 1;
            degree[x] += 1;
            degree[y] += 1;
            break;
        }
    }

    // rotation from the oriented faces: at v, the successor of u is w
    // whenever some face reads u, v, w
    let mut succ: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for f in &faces {
        for t in 0..3 {
            let (a, b, c) = (f[t], f[(t + 1) % 3], f[(t + 2) % 3]);
            if succ.insert((b, a), c).is_some() {
                return Err(Error::Defect("generator traced a directed edge twice".into()));
            }
        }
    }
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); vertex_count];
    for v in 0..vertex_count {
        let first = match succ.range((v, 0)..(v + 1, 0)).next() {
            Some((&(_, u), _)) => u,
            None => continue,
        };
        let mut order = Vec::with_capacity(degree[v]);
        let mut cur = first;
        for _ in 0..degree[v] {
            order.push(cur);
            cur = succ[&(v, cur)];
        }
        if cur != first {
            return Err(Error::Defect(format!("rotation at {} does not close", v)));
        }
        rotation[v] = order;
    }
    let rs = RotationSystem {
        rotation,
        outer_face: faces[0].to_vec(),
    };
    Ok((edges.into_iter().collect(), rs))
}

fn key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

fn has_directed(f: &[usize; 3], u: usize, v: usize) -> bool {
    (0..3).any(|i| f[i] == u && f[(i + 1) % 3] == v)
}

fn third(f: &[usize; 3], u: usize, v: usize) -> usize {
    *f.iter().find(|&&w| w != u && w != v).unwrap()
}

/// Draws a potential uniformly per vertex and returns the induced balanced
/// signature over the edge set.
pub fn generate_balanced(
    vertex_count: usize,
    edges: &[(usize, usize)],
    seed: u64,
) -> Result<SignedGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let theta: Vec<i8> = (0..vertex_count)
        .map(|_| if rng.gen::<bool>() { 1 } else { -1 })
        .collect();
    signature_from_potential(vertex_count, edges, &Potential::new(theta)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::va_upper_check;
    use crate::planar::is_triangulation;
    use crate::switch::is_balanced;

    #[test]
    fn oracle_base_cases() {
        let k1 = SignedGraph::new(1);
        let r = oracle_va(&k1, 2).unwrap();
        assert_eq!(r.va, 1);

        let k3 = SignedGraph::all_positive(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let r = oracle_va(&k3, 3).unwrap();
        assert_eq!(r.va, 2);
        assert!(va_upper_check(&k3, &r.witness, 2));

        let mixed = SignedGraph::from_edges(3, &[(0, 1, 1), (1, 2, -1), (0, 2, -1)]).unwrap();
        let r = oracle_va(&mixed, 3).unwrap();
        assert_eq!(r.va, 2);
    }

    #[test]
    fn oracle_pruning_agrees_with_exhaustive() {
        let mixed = SignedGraph::from_edges(4, &[(0, 1, 1), (1, 2, -1), (0, 2, -1), (2, 3, 1)])
            .unwrap();
        let pruned = oracle_va_opts(&mixed, 3, true).unwrap();
        let full = oracle_va_opts(&mixed, 3, false).unwrap();
        assert_eq!(pruned.va, full.va);
    }

    #[test]
    fn oracle_cap() {
        let big = SignedGraph::new(13);
        assert!(matches!(oracle_va(&big, 1), Err(Error::CapExceeded(_))));
    }

    #[test]
    fn unsigned_values() {
        assert_eq!(oracle_va_unsigned(&[(0, 1), (1, 2), (1, 3)], 2).unwrap(), 1);
        assert_eq!(oracle_va_unsigned(&[(0, 1), (1, 2), (0, 2)], 3).unwrap(), 2);
        let mut k5 = Vec::new();
        for u in 0..5 {
            for v in (u + 1)..5 {
                k5.push((u, v));
            }
        }
        assert_eq!(oracle_va_unsigned(&k5, 4).unwrap(), 3);
    }

    #[test]
    fn generator_small_cases() {
        let (edges, _) = generate_triangulation(3, 0, 1).unwrap();
        assert_eq!(edges.len(), 3);
        let (edges, rs) = generate_triangulation(4, 0, 1).unwrap();
        assert_eq!(edges.len(), 6); // K4
        let g = SignedGraph::all_positive(4, &edges).unwrap();
        assert!(is_triangulation(&g, &rs).unwrap());
    }

    #[test]
    fn generator_euler_counts() {
        for seed in 0..5 {
            let n = 6 + seed as usize;
            let (edges, rs) = generate_triangulation(n, 4, seed).unwrap();
            assert_eq!(edges.len(), 3 * n - 6);
            let g = SignedGraph::all_positive(n, &edges).unwrap();
            assert!(is_triangulation(&g, &rs).unwrap());
        }
    }

    #[test]
    fn balanced_generator() {
        let (edges, _) = generate_triangulation(8, 3, 42).unwrap();
        let g = generate_balanced(8, &edges, 43).unwrap();
        assert!(is_balanced(&g));
    }
}
