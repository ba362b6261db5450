//! Forbidden-pattern families and subgraph containment.
//!
//! Patterns are small fixed graphs (subdivided stars, subdivided H-graphs,
//! fans, bicliques, paths and cycles). Containment is decided by a complete
//! backtracking search that maps pattern vertices in breadth-first order, so
//! every pattern vertex after the first is anchored at an already mapped
//! neighbour.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("invalid pattern parameters: {0}")]
    InvalidParams(String),
    #[error("cannot parse pattern spec {0:?}")]
    Parse(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}

/// A parametric pattern family member.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PatternSpec {
    /// A star with three or four subdivided branches; lengths sorted descending.
    SubdividedStar(Vec<usize>),
    /// Two hubs joined by a path of `horizontal` edges; the first hub carries
    /// branches `a, b`, the second `c, d`.
    HGraph {
        horizontal: usize,
        branches: [usize; 4],
    },
    /// A path on `n` vertices plus a centre adjacent to all of them.
    Fan(usize),
    CompleteBipartite(usize, usize),
    /// A path with the given number of edges.
    Path(usize),
    Cycle(usize),
}

impl PatternSpec {
    pub fn star(branches: &[usize]) -> Result<Self, PatternError> {
        let spec = PatternSpec::SubdividedStar(branches.to_vec());
        spec.normalised()
    }

    pub fn h_graph(horizontal: usize, branches: [usize; 4]) -> Result<Self, PatternError> {
        PatternSpec::HGraph {
            horizontal,
            branches,
        }
        .normalised()
    }

    /// `S_{1,k,k,k}`.
    pub fn s1kkk(k: usize) -> Self {
        PatternSpec::star(&[1, k, k, k]).expect("k >= 1")
    }

    /// `H_m^{1,k,k,k}`.
    pub fn h1kkk(m: usize, k: usize) -> Self {
        PatternSpec::h_graph(m, [1, k, k, k]).expect("m, k >= 1")
    }

    /// Checks parameter ranges and sorts star branches.
    pub fn normalised(self) -> Result<Self, PatternError> {
        use PatternSpec::*;
        let bad = |msg: &str| Err(PatternError::InvalidParams(msg.to_string()));
        match self {
            SubdividedStar(mut b) => {
                if !(3..=4).contains(&b.len()) || b.contains(&0) {
                    return bad("a subdivided star needs 3 or 4 branches of length >= 1");
                }
                b.sort_unstable_by(|x, y| y.cmp(x));
                Ok(SubdividedStar(b))
            }
            HGraph {
                horizontal,
                branches,
            } => {
                if horizontal == 0 || branches.contains(&0) {
                    return bad("H-graph parameters must be >= 1");
                }
                Ok(HGraph {
                    horizontal,
                    branches,
                })
            }
            Fan(n) if n < 2 => bad("fan needs at least 2 path vertices"),
            CompleteBipartite(r, s) if r == 0 || s == 0 => bad("biclique sides must be >= 1"),
            Cycle(l) if l < 3 => bad("cycle length must be >= 3"),
            other => Ok(other),
        }
    }

    pub fn instantiate(&self) -> Result<Pattern, PatternError> {
        let spec = self.clone().normalised()?;
        let mut b = Builder::default();
        let (hubs, branches, spine) = match &spec {
            PatternSpec::SubdividedStar(lengths) => {
                let c = b.vertex();
                let branches: Vec<Vec<Vertex>> = lengths.iter().map(|&l| b.chain(c, l)).collect();
                (vec![c], branches, Vec::new())
            }
            PatternSpec::HGraph {
                horizontal,
                branches,
            } => {
                let h1 = b.vertex();
                let mut spine = vec![h1];
                spine.extend(b.chain(h1, *horizontal));
                let h2 = *spine.last().unwrap();
                let arms = vec![
                    b.chain(h1, branches[0]),
                    b.chain(h1, branches[1]),
                    b.chain(h2, branches[2]),
                    b.chain(h2, branches[3]),
                ];
                (vec![h1, h2], arms, spine)
            }
            PatternSpec::Fan(n) => {
                let c = b.vertex();
                let path: Vec<Vertex> = (0..*n).map(|_| b.vertex()).collect();
                for w in path.windows(2) {
                    b.edge(w[0], w[1]);
                }
                for &p in &path {
                    b.edge(c, p);
                }
                (vec![c], Vec::new(), path)
            }
            PatternSpec::CompleteBipartite(r, s) => {
                let left: Vec<Vertex> = (0..*r).map(|_| b.vertex()).collect();
                let right: Vec<Vertex> = (0..*s).map(|_| b.vertex()).collect();
                for &x in &left {
                    for &y in &right {
                        b.edge(x, y);
                    }
                }
                (left, vec![right], Vec::new())
            }
            PatternSpec::Path(l) => {
                let start = b.vertex();
                let mut spine = vec![start];
                spine.extend(b.chain(start, *l));
                (Vec::new(), Vec::new(), spine)
            }
            PatternSpec::Cycle(l) => {
                let start = b.vertex();
                let mut spine = vec![start];
                spine.extend(b.chain(start, l - 1));
                b.edge(*spine.last().unwrap(), start);
                (Vec::new(), Vec::new(), spine)
            }
        };
        Ok(b.finish(spec, hubs, branches, spine))
    }

    /// Number of pattern vertices.
    pub fn order(&self) -> usize {
        match self {
            PatternSpec::SubdividedStar(b) => 1 + b.iter().sum::<usize>(),
            PatternSpec::HGraph {
                horizontal,
                branches,
            } => horizontal + 1 + branches.iter().sum::<usize>(),
            PatternSpec::Fan(n) => n + 1,
            PatternSpec::CompleteBipartite(r, s) => r + s,
            PatternSpec::Path(l) => l + 1,
            PatternSpec::Cycle(l) => *l,
        }
    }
}

impl fmt::Display for PatternSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[usize]| {
            xs.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        match self {
            PatternSpec::SubdividedStar(b) => {
                let mut asc = b.clone();
                asc.sort_unstable();
                write!(f, "S({})", join(&asc))
            }
            PatternSpec::HGraph {
                horizontal,
                branches,
            } => write!(f, "H({};{})", horizontal, join(branches)),
            PatternSpec::Fan(n) => write!(f, "F({n})"),
            PatternSpec::CompleteBipartite(r, s) => write!(f, "K({r},{s})"),
            PatternSpec::Path(l) => write!(f, "P({l})"),
            PatternSpec::Cycle(l) => write!(f, "C({l})"),
        }
    }
}

impl FromStr for PatternSpec {
    type Err = PatternError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || PatternError::Parse(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let open = t.find('(').ok_or_else(err)?;
        if !t.ends_with(')') {
            return Err(err());
        }
        let head = &t[..open];
        let body = &t[open + 1..t.len() - 1];
        let nums = |part: &str| -> Result<Vec<usize>, PatternError> {
            part.split(',')
                .map(|x| x.parse::<usize>().map_err(|_| err()))
                .collect()
        };
        let spec = match head {
            "S" => PatternSpec::SubdividedStar(nums(body)?),
            "H" => {
                let (h, rest) = body.split_once(';').ok_or_else(err)?;
                let horizontal = h.parse::<usize>().map_err(|_| err())?;
                let b = nums(rest)?;
                let branches: [usize; 4] = b.try_into().map_err(|_| err())?;
                PatternSpec::HGraph {
                    horizontal,
                    branches,
                }
            }
            "F" | "K" | "P" | "C" => {
                let v = nums(body)?;
                match (head, v.as_slice()) {
                    ("F", [n]) => PatternSpec::Fan(*n),
                    ("K", [r, s]) => PatternSpec::CompleteBipartite(*r, *s),
                    ("P", [l]) => PatternSpec::Path(*l),
                    ("C", [l]) => PatternSpec::Cycle(*l),
                    _ => return Err(err()),
                }
            }
            _ => return Err(err()),
        };
        spec.normalised()
    }
}

/// An instantiated pattern with role labels.
///
/// Vertices are numbered in breadth-first order from vertex 0, which is the
/// search anchor (the star centre, the first H hub, the fan centre).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pattern {
    pub spec: PatternSpec,
    pub graph: Graph,
    /// Star centre, H hubs, fan centre, or the left biclique side.
    pub hubs: Vec<Vertex>,
    /// Branch vertices listed outward from their hub (hub excluded); for a
    /// biclique the single entry is the right side.
    pub branches: Vec<Vec<Vertex>>,
    /// H horizontal path (hubs included), the fan path, or the path/cycle itself.
    pub spine: Vec<Vertex>,
}

#[derive(Default)]
struct Builder {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
}

impl Builder {
    fn vertex(&mut self) -> Vertex {
        self.n += 1;
        self.n - 1
    }

    fn edge(&mut self, a: Vertex, b: Vertex) {
        self.edges.push((a, b));
    }

    fn chain(&mut self, from: Vertex, len: usize) -> Vec<Vertex> {
        let mut prev = from;
        let mut out = Vec::with_capacity(len);
        for _ in 0..len {
            let v = self.vertex();
            self.edge(prev, v);
            out.push(v);
            prev = v;
        }
        out
    }

    fn finish(
        self,
        spec: PatternSpec,
        hubs: Vec<Vertex>,
        branches: Vec<Vec<Vertex>>,
        spine: Vec<Vertex>,
    ) -> Pattern {
        let raw = Graph::from_edges(self.n, &self.edges);
        // Relabel in BFS order from vertex 0.
        let mut order = Vec::with_capacity(self.n);
        let mut seen = vec![false; self.n];
        let mut head = 0;
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            order.push(s);
            while head < order.len() {
                let x = order[head];
                head += 1;
                for &y in raw.neighbours(x) {
                    if !seen[y] {
                        seen[y] = true;
                        order.push(y);
                    }
                }
            }
        }
        let mut new_id = vec![0; self.n];
        for (i, &v) in order.iter().enumerate() {
            new_id[v] = i;
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(a, b)| (new_id[a], new_id[b]))
            .collect();
        let relabel = |xs: Vec<Vertex>| xs.into_iter().map(|v| new_id[v]).collect::<Vec<_>>();
        Pattern {
            spec,
            graph: Graph::from_edges(self.n, &edges),
            hubs: relabel(hubs),
            branches: branches.into_iter().map(relabel).collect(),
            spine: relabel(spine),
        }
    }
}

/// Injective map from pattern vertices (by index) to host vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    pub spec: PatternSpec,
    pub map: Vec<Vertex>,
}

impl Embedding {
    /// Re-checks injectivity and that every pattern edge lands on a host edge.
    pub fn validate(&self, host: &Graph) -> bool {
        let Ok(pattern) = self.spec.instantiate() else {
            return false;
        };
        validate_map(host, &pattern.graph, &self.map)
    }

    /// Image of a pattern vertex.
    pub fn image(&self, p: Vertex) -> Vertex {
        self.map[p]
    }
}

pub fn validate_map(host: &Graph, pattern: &Graph, map: &[Vertex]) -> bool {
    if map.len() != pattern.id_bound() {
        return false;
    }
    let mut seen = std::collections::HashSet::new();
    if !map.iter().all(|&v| host.contains(v) && seen.insert(v)) {
        return false;
    }
    pattern.edges().all(|e| host.has_edge(map[e.u], map[e.v]))
}

/// Finds the lexicographically smallest embedding of `pattern` (a compact
/// graph on `0..p`) into `host`, or `None` when the host is pattern-free.
pub fn find_embedding(host: &Graph, pattern: &Graph) -> Option<Vec<Vertex>> {
    let p = pattern.id_bound();
    if p == 0 {
        return Some(Vec::new());
    }
    if p > host.vertex_count() || pattern.edge_count() > host.edge_count() {
        return None;
    }
    let earlier: Vec<Vec<Vertex>> = (0..p)
        .map(|i| {
            pattern
                .neighbours(i)
                .iter()
                .copied()
                .filter(|&j| j < i)
                .collect()
        })
        .collect();
    let host_vertices = host.vertex_list();
    let mut used = vec![false; host.id_bound()];
    let mut map = vec![usize::MAX; p];
    if extend(
        host,
        pattern,
        &earlier,
        &host_vertices,
        &mut used,
        &mut map,
        0,
    ) {
        Some(map)
    } else {
        None
    }
}

fn extend(
    host: &Graph,
    pattern: &Graph,
    earlier: &[Vec<Vertex>],
    host_vertices: &[Vertex],
    used: &mut [bool],
    map: &mut [Vertex],
    i: usize,
) -> bool {
    if i == map.len() {
        return true;
    }
    let need = pattern.degree(i);
    let candidates: &[Vertex] = match earlier[i].first() {
        Some(&parent) => host.neighbours(map[parent]),
        None => host_vertices,
    };
    for &c in candidates {
        if used[c] || host.degree(c) < need {
            continue;
        }
        if !earlier[i].iter().all(|&j| host.has_edge(map[j], c)) {
            continue;
        }
        used[c] = true;
        map[i] = c;
        if extend(host, pattern, earlier, host_vertices, used, map, i + 1) {
            return true;
        }
        used[c] = false;
    }
    map[i] = usize::MAX;
    false
}

pub fn contains_subgraph(
    host: &Graph,
    spec: &PatternSpec,
) -> Result<Option<Embedding>, PatternError> {
    let pattern = spec.instantiate()?;
    Ok(find_embedding(host, &pattern.graph).map(|map| Embedding {
        spec: pattern.spec.clone(),
        map,
    }))
}

pub fn is_subgraph_free(host: &Graph, spec: &PatternSpec) -> Result<bool, PatternError> {
    Ok(contains_subgraph(host, spec)?.is_none())
}

/// A protected fan: `G[Q]` is a fan whose non-pole vertices have all their
/// neighbours inside `Q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProtectedFan {
    pub centre: Vertex,
    /// Fan path from one end to the other.
    pub path: Vec<Vertex>,
    /// Sorted vertex set `Q`.
    pub vertices: Vec<Vertex>,
}

impl ProtectedFan {
    pub fn ends(&self) -> (Vertex, Vertex) {
        (self.path[0], *self.path.last().unwrap())
    }

    /// Path vertices other than the two ends.
    pub fn interior(&self) -> &[Vertex] {
        &self.path[1..self.path.len() - 1]
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    /// Full re-check of the definition against `g`.
    pub fn validate(&self, g: &Graph) -> bool {
        let n = self.path.len();
        if n < 2 || self.vertices.len() != n + 1 {
            return false;
        }
        let mut q: Vec<Vertex> = self.path.clone();
        q.push(self.centre);
        q.sort_unstable();
        if q != self.vertices
            || q.windows(2).any(|w| w[0] == w[1])
            || !q.iter().all(|&v| g.contains(v))
        {
            return false;
        }
        // G[Q] must be exactly path + spokes.
        let expected = (n - 1) + n;
        let h = g.induced_subgraph(&q);
        if h.edge_count() != expected {
            return false;
        }
        if !self.path.windows(2).all(|w| g.has_edge(w[0], w[1])) {
            return false;
        }
        if !self.path.iter().all(|&p| g.has_edge(self.centre, p)) {
            return false;
        }
        self.interior()
            .iter()
            .all(|&v| g.neighbours(v).iter().all(|w| q.binary_search(w).is_ok()))
    }
}

/// Finds a protected fan with `|Q| = order` (a path on `order - 1` vertices
/// plus its centre). Centres are tried in ascending order.
pub fn find_protected_fan(g: &Graph, order: usize) -> Result<Option<ProtectedFan>, PatternError> {
    if order < 3 {
        return Err(PatternError::InvalidParams(
            "protected fan order must be >= 3".into(),
        ));
    }
    let path_len = order - 1;
    for z in g.vertices() {
        if g.degree(z) < path_len {
            continue;
        }
        if let Some(fan) = fan_at_centre(g, z, path_len) {
            return Ok(Some(fan));
        }
    }
    Ok(None)
}

fn fan_at_centre(g: &Graph, z: Vertex, path_len: usize) -> Option<ProtectedFan> {
    let nz = g.neighbours(z);
    let in_nz = |v: Vertex| nz.binary_search(&v).is_ok();
    for &x in nz {
        if path_len == 2 {
            for &y in g.neighbours(x) {
                if y > x && in_nz(y) {
                    return Some(make_fan(z, vec![x, y]));
                }
            }
            continue;
        }
        for &second in g.neighbours(x) {
            if !in_nz(second) {
                continue;
            }
            // Interior vertices have exactly {z, prev, next} as neighbours,
            // which makes the walk from `second` deterministic.
            let mut path = vec![x, second];
            let mut ok = true;
            while path.len() < path_len {
                let cur = *path.last().unwrap();
                let prev = path[path.len() - 2];
                if g.degree(cur) != 3 {
                    ok = false;
                    break;
                }
                let next = g
                    .neighbours(cur)
                    .iter()
                    .copied()
                    .find(|&w| w != z && w != prev);
                match next {
                    Some(nx) if in_nz(nx) && !path.contains(&nx) && nx != z => path.push(nx),
                    _ => {
                        ok = false;
                        break;
                    }
                }
            }
            if !ok {
                continue;
            }
            let y = *path.last().unwrap();
            if x > y || g.has_edge(x, y) {
                continue;
            }
            // Interior vertices were checked on the way except their link to z
            // and the prev/next pair, which the walk guarantees.
            let interior_ok = path[1..path.len() - 1]
                .iter()
                .all(|&v| g.degree(v) == 3 && g.has_edge(v, z));
            if !interior_ok {
                continue;
            }
            let fan = make_fan(z, path);
            debug_assert!(fan.validate(g));
            return Some(fan);
        }
    }
    None
}

fn make_fan(z: Vertex, path: Vec<Vertex>) -> ProtectedFan {
    let mut vertices = path.clone();
    vertices.push(z);
    vertices.sort_unstable();
    ProtectedFan {
        centre: z,
        path,
        vertices,
    }
}

/// Vertices that are interior to some protected fan of order at least four.
///
/// Such a vertex `v` has degree three and its neighbourhood is `{z, a, b}`
/// with `z` adjacent to `a` and `b` and `a`, `b` non-adjacent.
pub fn protected_fan_interiors(g: &Graph) -> Vec<Vertex> {
    g.vertices()
        .filter(|&v| {
            let n = g.neighbours(v);
            if n.len() != 3 {
                return false;
            }
            (0..3).any(|i| {
                let z = n[i];
                let (a, b) = match i {
                    0 => (n[1], n[2]),
                    1 => (n[0], n[2]),
                    _ => (n[0], n[1]),
                };
                g.has_edge(z, a) && g.has_edge(z, b) && !g.has_edge(a, b)
            })
        })
        .collect()
}

/// Turns an `S_{2k,2k,2k}` embedding whose centre has a fourth neighbour
/// into an `S_{1,k,k,k}` embedding with the same centre.
pub fn lift_star_centre(g: &Graph, emb: &Embedding, k: usize) -> Result<Embedding, PatternError> {
    let pre = |m: &str| PatternError::PreconditionViolated(m.to_string());
    if k == 0 {
        return Err(PatternError::InvalidParams("k must be >= 1".into()));
    }
    let expected = PatternSpec::star(&[2 * k, 2 * k, 2 * k])?;
    if emb.spec != expected {
        return Err(pre("embedding is not of S_{2k,2k,2k}"));
    }
    if !emb.validate(g) {
        return Err(pre("embedding does not validate"));
    }
    let src = expected.instantiate()?;
    let x = emb.image(src.hubs[0]);
    if g.degree(x) < 4 {
        return Err(pre("centre has degree < 4"));
    }
    // f[i][j-1] = f^i_j
    let f: Vec<Vec<Vertex>> = src
        .branches
        .iter()
        .map(|br| br.iter().map(|&p| emb.image(p)).collect())
        .collect();
    let firsts = [f[0][0], f[1][0], f[2][0]];
    let extras: Vec<Vertex> = g
        .neighbours(x)
        .iter()
        .copied()
        .filter(|v| !firsts.contains(v))
        .collect();
    let near = |y: Vertex| {
        (0..3).find_map(|i| f[i][1..k].iter().position(|&v| v == y).map(|p| (i, p + 2)))
    };

    let (short, long): (Vertex, [Vec<Vertex>; 3]) =
        match extras.iter().copied().find(|&y| near(y).is_none()) {
            Some(y) => (
                y,
                [f[0][..k].to_vec(), f[1][..k].to_vec(), f[2][..k].to_vec()],
            ),
            None => {
                // Every extra neighbour sits at depth 2..=k of some branch.
                let y = extras[0];
                let (i, j) = near(y).expect("extra neighbour lies on a branch");
                let mut long: [Vec<Vertex>; 3] =
                    [f[0][..k].to_vec(), f[1][..k].to_vec(), f[2][..k].to_vec()];
                long[i] = f[i][j - 1..j - 1 + k].to_vec();
                (f[i][0], long)
            }
        };

    let target_spec = PatternSpec::star(&[1, k, k, k])?;
    let target = target_spec.instantiate()?;
    let mut map = vec![usize::MAX; target.graph.id_bound()];
    map[target.hubs[0]] = x;
    // Branches are sorted descending: three of length k, then the length-1 one.
    let (len1, lenk): (Vec<usize>, Vec<usize>) =
        (0..4).partition(|&b| target.branches[b].len() == 1 && (k > 1 || b == 3));
    debug_assert_eq!(len1.len(), 1);
    map[target.branches[len1[0]][0]] = short;
    for (slot, path) in lenk.iter().zip(long.iter()) {
        for (p, &v) in target.branches[*slot].iter().zip(path) {
            map[*p] = v;
        }
    }
    let out = Embedding {
        spec: target_spec,
        map,
    };
    if !out.validate(g) {
        return Err(pre("lifted embedding failed validation"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> PatternSpec {
        s.parse().unwrap()
    }

    #[test]
    fn instantiation_sizes() {
        let h = parse("H(1;1,1,1,1)").instantiate().unwrap();
        assert_eq!((h.graph.vertex_count(), h.graph.edge_count()), (6, 5));
        let t3 = parse("S(2,2,2,2)").instantiate().unwrap();
        assert_eq!(t3.graph.vertex_count(), 9);
        let k14 = parse("S(1,1,1,1)").instantiate().unwrap();
        assert_eq!(k14.graph.degree(0), 4);
        assert_eq!(k14.graph.vertex_count(), 5);
        let f = parse("F(5)").instantiate().unwrap();
        assert_eq!((f.graph.vertex_count(), f.graph.edge_count()), (6, 9));
        let k = parse("K(2,3)").instantiate().unwrap();
        assert_eq!(k.graph.edge_count(), 6);
        let c = parse("C(6)").instantiate().unwrap();
        assert_eq!(c.graph.edge_count(), 6);
        assert_eq!(parse("P(0)").instantiate().unwrap().graph.vertex_count(), 1);
    }

    #[test]
    fn instantiated_ids_are_bfs_ordered() {
        for s in [
            "S(1,2,3,4)",
            "H(3;1,2,2,2)",
            "F(6)",
            "K(3,4)",
            "P(7)",
            "C(7)",
            "S(2,2,2)",
        ] {
            let p = parse(s).instantiate().unwrap();
            for v in 1..p.graph.id_bound() {
                assert!(
                    p.graph.neighbours(v).iter().any(|&w| w < v),
                    "{s}: vertex {v} has no earlier neighbour"
                );
            }
        }
    }

    #[test]
    fn spec_strings_round_trip() {
        for s in [
            "S(1,2,2,2)",
            "H(3;1,2,2,2)",
            "F(8)",
            "K(4,4)",
            "P(10)",
            "C(6)",
            "S(4,4,4)",
        ] {
            assert_eq!(parse(s).to_string(), s);
        }
        assert_eq!(
            parse("S(2,1,2,2)"),
            PatternSpec::SubdividedStar(vec![2, 2, 2, 1])
        );
        for bad in [
            "S(1,2)",
            "H(0;1,1,1,1)",
            "C(2)",
            "X(3)",
            "S(1,2,2,2",
            "H(1;1,1,1)",
            "K(0,2)",
        ] {
            assert!(bad.parse::<PatternSpec>().is_err(), "{bad}");
        }
    }

    #[test]
    fn h_graph_by_subdividing_the_horizontal_edge() {
        // H_i is H_1 with the horizontal edge subdivided i-1 times.
        let h1 = parse("H(1;1,1,1,1)").instantiate().unwrap();
        let bar = crate::graph::EdgeId::new(h1.spine[0], h1.spine[1]);
        for i in 1..5 {
            let sub = h1.graph.subdivide_edge(bar, i - 1).unwrap();
            let hi = PatternSpec::h_graph(i, [1, 1, 1, 1])
                .unwrap()
                .instantiate()
                .unwrap();
            assert_eq!(sub.vertex_count(), hi.graph.vertex_count());
            assert!(find_embedding(&sub, &hi.graph).is_some());
            assert!(find_embedding(&hi.graph, &sub.compact().0).is_some());
        }
    }

    #[test]
    fn containment_examples() {
        let k5 = Graph::complete(5);
        let e = contains_subgraph(&k5, &parse("S(1,1,1,1)"))
            .unwrap()
            .unwrap();
        assert!(e.validate(&k5));
        assert!(is_subgraph_free(&Graph::cycle(6), &parse("H(1;1,1,1,1)")).unwrap());
        // H has six vertices, so K_5 cannot contain it; K_6 does.
        assert!(is_subgraph_free(&k5, &parse("H(1;1,1,1,1)")).unwrap());
        assert!(!is_subgraph_free(&Graph::complete(6), &parse("H(1;1,1,1,1)")).unwrap());
        assert!(is_subgraph_free(&Graph::path(10), &parse("S(1,1,1,1)")).unwrap());

        let t1 = parse("H(1;2,2,2,2)").instantiate().unwrap();
        let e = contains_subgraph(&t1.graph, &parse("H(1;2,2,2,2)"))
            .unwrap()
            .unwrap();
        assert_eq!(e.map, (0..t1.graph.id_bound()).collect::<Vec<_>>());
    }

    #[test]
    fn protected_fan_examples() {
        let fan = parse("F(6)").instantiate().unwrap().graph;
        let q = find_protected_fan(&fan, 7).unwrap().unwrap();
        assert_eq!(q.vertices, fan.vertex_list());
        assert!(q.validate(&fan));

        // Pendant on an interior path vertex.
        let f = parse("F(6)").instantiate().unwrap();
        let interior = f.spine[2];
        let mut edges: Vec<_> = f.graph.edges().map(|e| (e.u, e.v)).collect();
        edges.push((interior, 7));
        let g = Graph::from_edges(8, &edges);
        assert!(find_protected_fan(&g, 7).unwrap().is_none());

        // Pendant on a pole keeps the fan protected.
        let mut edges: Vec<_> = f.graph.edges().map(|e| (e.u, e.v)).collect();
        edges.push((f.spine[0], 7));
        let g = Graph::from_edges(8, &edges);
        let q = find_protected_fan(&g, 7).unwrap().unwrap();
        assert!(q.validate(&g));
        assert!(!q.vertices.contains(&7));
    }

    #[test]
    fn interiors_of_wheel_rim() {
        // Wheel with a 6-cycle rim: every rim vertex is a fan interior.
        let mut edges: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        edges.extend((0..6).map(|i| (i, 6)));
        let w = Graph::from_edges(7, &edges);
        assert_eq!(protected_fan_interiors(&w), (0..6).collect::<Vec<_>>());
        assert!(protected_fan_interiors(&Graph::complete(4)).is_empty());
    }

    fn star_host(k: usize) -> (Graph, Embedding) {
        let spec = PatternSpec::star(&[2 * k, 2 * k, 2 * k]).unwrap();
        let p = spec.instantiate().unwrap();
        let n = p.graph.id_bound();
        let map: Vec<Vertex> = (0..n).collect();
        (p.graph.clone(), Embedding { spec, map })
    }

    #[test]
    fn lift_with_fresh_neighbour() {
        let (g, emb) = star_host(1);
        let n = g.id_bound();
        let mut edges: Vec<_> = g.edges().map(|e| (e.u, e.v)).collect();
        edges.push((0, n));
        let g = Graph::from_edges(n + 1, &edges);
        let out = lift_star_centre(&g, &emb, 1).unwrap();
        assert!(out.validate(&g));
        assert!(out.map.contains(&n));
    }

    #[test]
    fn lift_with_neighbour_on_a_branch() {
        let k = 2;
        let (g, emb) = star_host(k);
        let src = emb.spec.instantiate().unwrap();
        let f12 = src.branches[0][1];
        let mut edges: Vec<_> = g.edges().map(|e| (e.u, e.v)).collect();
        edges.push((0, f12));
        let g = Graph::from_edges(g.id_bound(), &edges);
        let out = lift_star_centre(&g, &emb, k).unwrap();
        assert!(out.validate(&g));
        let tgt = out.spec.instantiate().unwrap();
        let short = tgt.branches.iter().find(|b| b.len() == 1).unwrap()[0];
        assert_eq!(out.map[short], src.branches[0][0]);
        // The re-rooted branch starts at f^1_2.
        assert!(tgt
            .branches
            .iter()
            .any(|b| b.len() == k && out.map[b[0]] == f12 && out.map[b[1]] == src.branches[0][2]));
    }

    #[test]
    fn lift_rejects_low_degree_centre() {
        let (g, emb) = star_host(1);
        assert!(matches!(
            lift_star_centre(&g, &emb, 1),
            Err(PatternError::PreconditionViolated(_))
        ));
    }
}
