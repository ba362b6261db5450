//! Random and exhaustive instance generators.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{EdgeId, Graph};
use crate::pattern::{contains_subgraph, PatternError, PatternSpec};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generated {
    pub graph: Graph,
    /// Edges deleted to destroy pattern copies.
    pub repairs: usize,
}

pub fn rng_from(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi graph on `0..n`.
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let p = p.clamp(0.0, 1.0);
    let mut e = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                e.push((a, b));
            }
        }
    }
    Graph::from_edges(n, &e)
}

/// Random connected graph: a random spanning tree plus each other pair with
/// probability `p`.
pub fn random_connected<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let p = p.clamp(0.0, 1.0);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut e = Vec::new();
    for i in 1..n {
        e.push((order[rng.gen_range(0..i)], order[i]));
    }
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                e.push((a, b));
            }
        }
    }
    Graph::from_edges(n, &e)
}

/// A random graph without `spec` as a subgraph: sample `G(n, density)`, then
/// while a copy exists delete one of its edges, picked by the seeded RNG.
pub fn gen_spec_free(
    spec: &PatternSpec,
    n: usize,
    density: f64,
    seed: u64,
) -> Result<Generated, PatternError> {
    if n == 0 {
        return Err(PatternError::InvalidParams("n must be >= 1".into()));
    }
    let pattern = spec.instantiate()?;
    let mut rng = rng_from(seed);
    let mut g = random_graph(n, density, &mut rng);
    let mut repairs = 0;
    while let Some(emb) = contains_subgraph(&g, spec)? {
        let edges: Vec<EdgeId> = pattern.graph.edges().collect();
        let e = edges[rng.gen_range(0..edges.len())];
        g = g.delete_edges(&[EdgeId::new(emb.image(e.u), emb.image(e.v))]);
        repairs += 1;
    }
    debug_assert!(contains_subgraph(&g, spec)?.is_none());
    Ok(Generated { graph: g, repairs })
}

/// Random connected graph with maximum degree at most 3.
pub fn random_subcubic_connected<R: Rng>(n: usize, extra: usize, rng: &mut R) -> Graph {
    let mut deg = vec![0usize; n];
    let mut e = Vec::new();
    for v in 1..n {
        let open: Vec<usize> = (0..v).filter(|&u| deg[u] < 3).collect();
        let u = open[rng.gen_range(0..open.len())];
        e.push((u, v));
        deg[u] += 1;
        deg[v] += 1;
    }
    let mut g = Graph::from_edges(n, &e);
    for _ in 0..extra {
        let open: Vec<usize> = (0..n).filter(|&v| g.degree(v) < 3).collect();
        if open.len() < 2 {
            break;
        }
        let a = open[rng.gen_range(0..open.len())];
        let b = open[rng.gen_range(0..open.len())];
        if a != b && !g.has_edge(a, b) {
            g = g.add_edges(&[EdgeId::new(a, b)]).expect("fresh edge");
        }
    }
    g
}

/// Adds a protected fan with poles `x, y` (path ends) and centre `z` from
/// `base`, and `interior` new path vertices. The poles are made adjacent to
/// the centre and non-adjacent to each other.
pub fn plant_fan(base: &Graph, x: usize, y: usize, z: usize, interior: usize) -> Graph {
    let n = base.id_bound();
    let mut e: Vec<(usize, usize)> = base
        .edges()
        .filter(|e| *e != EdgeId::new(x, y))
        .map(|e| (e.u, e.v))
        .collect();
    let path: Vec<usize> = std::iter::once(x)
        .chain(n..n + interior)
        .chain(std::iter::once(y))
        .collect();
    for w in path.windows(2) {
        e.push((w[0], w[1]));
    }
    for &q in &path {
        e.push((q, z));
    }
    Graph::from_edges(n + interior, &e)
}

/// A path `0..len` plus `extra` off-path vertices, with chords and off-path
/// edges added at random. Returns the graph and the path.
pub fn path_with_jumps<R: Rng>(
    len: usize,
    extra: usize,
    chord_p: f64,
    off_p: f64,
    rng: &mut R,
) -> (Graph, Vec<usize>) {
    let n = len + extra;
    let mut e: Vec<(usize, usize)> = (1..len).map(|i| (i - 1, i)).collect();
    for a in 0..len {
        for b in a + 2..len {
            if rng.gen_bool(chord_p) {
                e.push((a, b));
            }
        }
    }
    for a in len..n {
        for b in 0..n {
            if b != a && (b < len || b > a) && rng.gen_bool(off_p) {
                e.push((a, b));
            }
        }
    }
    (Graph::from_edges(n, &e), (0..len).collect())
}

/// `S_{2k,2k,2k}` centred at 0 whose centre gets a fourth neighbour, plus
/// `extra` random vertices and edges with probability `p`.
pub fn planted_long_star<R: Rng>(k: usize, extra: usize, p: f64, rng: &mut R) -> Graph {
    let branch = 2 * k;
    let core = 1 + 3 * branch + 1;
    let n = core + extra;
    let mut e = Vec::new();
    for b in 0..3 {
        let mut prev = 0;
        for i in 0..branch {
            let v = 1 + b * branch + i;
            e.push((prev, v));
            prev = v;
        }
    }
    e.push((0, core - 1));
    for a in 0..n {
        for b in a.max(core)..n {
            if a != b && rng.gen_bool(p) {
                e.push((a, b));
            }
        }
    }
    Graph::from_edges(n, &e)
}

/// Adjacency of a graph on `0..n` (n <= 11) packed into the bits of the
/// upper triangle.
fn code(n: usize, adj: &[u16], perm: &[usize]) -> u64 {
    let mut c = 0u64;
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if adj[perm[i]] & (1 << perm[j]) != 0 {
                c |= 1 << bit;
            }
            bit += 1;
        }
    }
    c
}

/// Canonical code: the minimum code over relabellings that order vertices by
/// a degree-based invariant.
fn canonical(n: usize, adj: &[u16]) -> u64 {
    let deg = |v: usize| adj[v].count_ones();
    let inv: Vec<(u32, Vec<u32>)> = (0..n)
        .map(|v| {
            let mut nd: Vec<u32> = (0..n)
                .filter(|&w| adj[v] & (1 << w) != 0)
                .map(deg)
                .collect();
            nd.sort_unstable();
            (deg(v), nd)
        })
        .collect();
    let mut verts: Vec<usize> = (0..n).collect();
    verts.sort_by(|&a, &b| inv[a].cmp(&inv[b]));
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for &v in &verts {
        match cells.last_mut() {
            Some(c) if inv[c[0]] == inv[v] => c.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut best = u64::MAX;
    let mut perm = Vec::with_capacity(n);
    permute_cells(&mut cells, 0, &mut perm, &mut |p| {
        best = best.min(code(n, adj, p));
    });
    best
}

fn permute_cells(
    cells: &mut [Vec<usize>],
    i: usize,
    perm: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize]),
) {
    if i == cells.len() {
        f(perm);
        return;
    }
    permute_within(cells, i, 0, perm, f);
}

fn permute_within(
    cells: &mut [Vec<usize>],
    i: usize,
    j: usize,
    perm: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize]),
) {
    let len = cells[i].len();
    if j == len {
        let base = perm.len();
        perm.extend_from_slice(&cells[i]);
        permute_cells(cells, i + 1, perm, f);
        perm.truncate(base);
        return;
    }
    for k in j..len {
        cells[i].swap(j, k);
        permute_within(cells, i, j + 1, perm, f);
        cells[i].swap(j, k);
    }
}

/// All graphs on `n <= 8` vertices up to isomorphism, by vertex extension
/// and canonical-code deduplication.
pub fn enumerate_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 8, "exhaustive enumeration is limited to 8 vertices");
    let mut level: Vec<Vec<u16>> = vec![Vec::new()];
    for size in 1..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for adj in &level {
            for nbrs in 0u16..(1 << (size - 1)) {
                let mut a = adj.clone();
                for (w, aw) in a.iter_mut().enumerate() {
                    if nbrs & (1 << w) != 0 {
                        *aw |= 1 << (size - 1);
                    }
                }
                a.push(nbrs);
                if seen.insert(canonical(size, &a)) {
                    next.push(a);
                }
            }
        }
        level = next;
    }
    level
        .into_iter()
        .map(|adj| {
            let mut e = Vec::new();
            for (v, &av) in adj.iter().enumerate() {
                for w in v + 1..n {
                    if av & (1 << w) != 0 {
                        e.push((v, w));
                    }
                }
            }
            Graph::from_edges(n, &e)
        })
        .collect()
}

pub fn enumerate_connected(n: usize) -> Vec<Graph> {
    enumerate_graphs(n)
        .into_iter()
        .filter(|g| g.is_connected())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::is_subgraph_free;

    #[test]
    fn star_free_means_subcubic() {
        let spec = PatternSpec::star(&[1, 1, 1, 1]).unwrap();
        for seed in 0..20 {
            let out = gen_spec_free(&spec, 12, 0.5, seed).unwrap();
            assert!(out.graph.max_degree().unwrap() <= 3);
            assert!(out.repairs > 0);
        }
    }

    #[test]
    fn triangle_free_and_deterministic() {
        let spec = PatternSpec::Cycle(3);
        let a = gen_spec_free(&spec, 12, 0.8, 5).unwrap();
        assert!(is_subgraph_free(&a.graph, &spec).unwrap());
        assert_eq!(a, gen_spec_free(&spec, 12, 0.8, 5).unwrap());
        assert!(gen_spec_free(&spec, 0, 0.5, 1).is_err());
    }

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| enumerate_graphs(n).len()).collect();
        assert_eq!(counts, [1, 2, 4, 11, 34]);
        let connected: Vec<usize> = (1..=5).map(|n| enumerate_connected(n).len()).collect();
        assert_eq!(connected, [1, 1, 2, 6, 21]);
    }

    #[test]
    fn connected_generator() {
        let mut rng = rng_from(3);
        for n in 1..15 {
            assert!(random_connected(n, 0.0, &mut rng).is_connected());
        }
    }
}
