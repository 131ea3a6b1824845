//! Vertex and set switching, balance testing via spanning-tree sign
//! propagation, and balanced-signature synthesis from vertex potentials.

use std::collections::{BTreeSet, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Sign, SignedGraph};
use crate::{Error, Result};

/// A vertex potential `theta: V -> {+1, -1}`. When `sigma(uv) =
/// theta(u) * theta(v)` for every edge, the signature is balanced and theta
/// certifies it (Harary bipartition).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Potential {
    theta: Vec<Sign>,
}

impl Potential {
    pub fn new(theta: Vec<Sign>) -> Result<Self> {
        for &t in &theta {
            if t != 1 && t != -1 {
                return Err(Error::InvalidSign(t));
            }
        }
        Ok(Potential { theta })
    }

    pub fn uniform(vertex_count: usize, value: Sign) -> Result<Self> {
        Potential::new(vec![value; vertex_count])
    }

    pub fn get(&self, v: usize) -> Sign {
        self.theta[v]
    }

    pub fn len(&self) -> usize {
        self.theta.len()
    }

    pub fn is_empty(&self) -> bool {
        self.theta.is_empty()
    }
}

/// Outcome of a balance test: a certifying potential, or a negative cycle.
#[derive(Clone, Debug)]
pub enum Balance {
    Balanced(Potential),
    /// Vertex sequence of a cycle with an odd number of negative edges.
    Unbalanced(Vec<usize>),
}

impl Balance {
    pub fn is_balanced(&self) -> bool {
        matches!(self, Balance::Balanced(_))
    }
}

/// Negates the signs of all edges incident with `u`.
pub fn switch_vertex(g: &SignedGraph, u: usize) -> Result<SignedGraph> {
    if u >= g.vertex_count() {
        return Err(Error::UnknownVertex(u));
    }
    let mut out = g.clone();
    let nbrs: Vec<usize> = g.neighbors(u).collect();
    for v in nbrs {
        out.negate_edge(u, v)?;
    }
    Ok(out)
}

/// Negates all edges with exactly one endpoint in `s`.
pub fn switch_set(g: &SignedGraph, s: &BTreeSet<usize>) -> Result<SignedGraph> {
    for &v in s {
        if v >= g.vertex_count() {
            return Err(Error::UnknownVertex(v));
        }
    }
    let mut out = g.clone();
    for (u, v, _) in g.edges() {
        if s.contains(&u) != s.contains(&v) {
            out.negate_edge(u, v)?;
        }
    }
    Ok(out)
}

/// Decides balance by BFS sign propagation per connected component. On
/// success returns a potential with `sigma(uv) = theta(u) * theta(v)` on
/// every edge; on failure, the fundamental cycle of the first violating
/// non-tree edge in BFS order.
pub fn balance(g: &SignedGraph) -> Balance {
    let n = g.vertex_count();
    let mut theta: Vec<Sign> = vec![0; n];
    let mut parent: Vec<usize> = vec![usize::MAX; n];
    let mut depth: Vec<usize> = vec![0; n];
    for root in 0..n {
        if theta[root] != 0 {
            continue;
        }
        theta[root] = 1;
        let mut queue = VecDeque::new();
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v) {
                let s = g.sign(v, w).unwrap();
                if theta[w] == 0 {
                    theta[w] = theta[v] * s;
                    parent[w] = v;
                    depth[w] = depth[v] + 1;
                    queue.push_back(w);
                } else if w != parent[v] && theta[w] != theta[v] * s {
                    return Balance::Unbalanced(fundamental_cycle(v, w, &parent, &depth));
                }
            }
        }
    }
    Balance::Balanced(Potential { theta })
}

fn fundamental_cycle(u: usize, v: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut a, mut b) = (u, v);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    // left ends at the meet point; append right's path reversed, skipping it
    right.pop();
    left.extend(right.into_iter().rev());
    left
}

/// True iff every cycle carries an even number of negative edges.
pub fn is_balanced(g: &SignedGraph) -> bool {
    balance(g).is_balanced()
}

/// Builds the balanced signature `sigma(uv) = theta(u) * theta(v)` over an
/// unsigned edge set.
pub fn signature_from_potential(
    vertex_count: usize,
    edges: &[(usize, usize)],
    theta: &Potential,
) -> Result<SignedGraph> {
    if theta.len() < vertex_count {
        return Err(Error::Defect("potential shorter than vertex set".into()));
    }
    let mut g = SignedGraph::new(vertex_count);
    for &(u, v) in edges {
        g.add_edge(u, v, theta.get(u) * theta.get(v))?;
    }
    Ok(g)
}

/// Deterministic seeded sample of graphs switching-equivalent to `g`.
pub fn switching_orbit_sample(g: &SignedGraph, count: usize, seed: u64) -> Vec<SignedGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let s: BTreeSet<usize> = (0..g.vertex_count()).filter(|_| rng.gen::<bool>()).collect();
        out.push(switch_set(g, &s).expect("vertices in range"));
    }
    out
}
