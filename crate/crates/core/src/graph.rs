//! Simple undirected graphs with stable vertex ids.
//!
//! Vertex ids are dense indices. Deleting a vertex tombstones its id instead
//! of renumbering, so ids stay valid across a whole reduction trace; merging
//! two vertices allocates a fresh id at the end. [`Graph::compact`] renumbers
//! on demand.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(Vertex),
    #[error("cannot merge vertex {0} with itself")]
    SameVertex(Vertex),
    #[error("edge {0}-{1} is not in the graph")]
    MissingEdge(Vertex, Vertex),
    #[error("index {index} out of range for a path on {len} vertices")]
    IndexOutOfRange { index: isize, len: usize },
    #[error("vertex sequence is not a path: {0}")]
    NotAPath(String),
}

/// Unordered vertex pair, stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgeId {
    pub u: Vertex,
    pub v: Vertex,
}

impl EdgeId {
    pub fn new(a: Vertex, b: Vertex) -> Self {
        if a <= b {
            EdgeId { u: a, v: b }
        } else {
            EdgeId { u: b, v: a }
        }
    }

    pub fn other(&self, w: Vertex) -> Vertex {
        if w == self.u {
            self.v
        } else {
            self.u
        }
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bridge {
    pub edge: EdgeId,
    /// Neither endpoint is a leaf.
    pub proper: bool,
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    alive: Vec<bool>,
    live: usize,
    edges: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, edges=[", self.live, self.edges)?;
        for (i, e) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", e)?;
        }
        write!(f, "])")
    }
}

impl Graph {
    /// Edgeless graph on vertices `0..n`.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            alive: vec![true; n],
            live: n,
            edges: 0,
        }
    }

    pub fn new(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(a, b) in edges {
            if a >= n {
                return Err(GraphError::VertexOutOfRange(a));
            }
            if b >= n {
                return Err(GraphError::VertexOutOfRange(b));
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            if !g.insert_edge(a, b) {
                return Err(GraphError::DuplicateEdge(a.min(b), a.max(b)));
            }
        }
        Ok(g)
    }

    /// Builds a graph, silently skipping duplicates. Panics on loops or bad ids.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Self {
        let mut g = Graph::empty(n);
        for &(a, b) in edges {
            assert!(a < n && b < n && a != b, "bad edge {a}-{b}");
            g.insert_edge(a, b);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges)
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                edges.push((a, b));
            }
        }
        Graph::from_edges(n, &edges)
    }

    /// Number of live vertices.
    pub fn vertex_count(&self) -> usize {
        self.live
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    /// One past the largest id ever allocated.
    pub fn id_bound(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.live == 0
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v < self.alive.len() && self.alive[v]
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.adj.len()).filter(move |&v| self.alive[v])
    }

    pub fn vertex_list(&self) -> Vec<Vertex> {
        self.vertices().collect()
    }

    pub fn neighbours(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        a < self.adj.len() && self.adj[a].binary_search(&b).is_ok()
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.vertices().flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&&w| w > u)
                .map(move |&w| EdgeId { u, v: w })
        })
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.vertices().map(|v| self.degree(v)).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.vertices().map(|v| self.degree(v)).max()
    }

    fn check(&self, v: Vertex) -> Result<(), GraphError> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange(v))
        }
    }

    // ---- in-place edits, used by the public value-returning operations ----

    pub(crate) fn insert_edge(&mut self, a: Vertex, b: Vertex) -> bool {
        debug_assert!(a != b && self.contains(a) && self.contains(b));
        match self.adj[a].binary_search(&b) {
            Ok(_) => false,
            Err(pos) => {
                self.adj[a].insert(pos, b);
                let pos = self.adj[b].binary_search(&a).unwrap_err();
                self.adj[b].insert(pos, a);
                self.edges += 1;
                true
            }
        }
    }

    pub(crate) fn remove_edge(&mut self, a: Vertex, b: Vertex) -> bool {
        match self.adj[a].binary_search(&b) {
            Ok(pos) => {
                self.adj[a].remove(pos);
                let pos = self.adj[b].binary_search(&a).unwrap();
                self.adj[b].remove(pos);
                self.edges -= 1;
                true
            }
            Err(_) => false,
        }
    }

    pub(crate) fn remove_vertex(&mut self, v: Vertex) {
        if !self.contains(v) {
            return;
        }
        let nbrs = std::mem::take(&mut self.adj[v]);
        for w in &nbrs {
            let pos = self.adj[*w].binary_search(&v).unwrap();
            self.adj[*w].remove(pos);
        }
        self.edges -= nbrs.len();
        self.alive[v] = false;
        self.live -= 1;
    }

    pub(crate) fn push_vertex(&mut self) -> Vertex {
        self.adj.push(Vec::new());
        self.alive.push(true);
        self.live += 1;
        self.adj.len() - 1
    }

    /// Merges `a` and `b` in place into a fresh vertex; returns its id.
    pub(crate) fn merge_in_place(&mut self, a: Vertex, b: Vertex) -> Vertex {
        let mut nbrs: Vec<Vertex> = self.adj[a]
            .iter()
            .chain(self.adj[b].iter())
            .copied()
            .filter(|&x| x != a && x != b)
            .collect();
        nbrs.sort_unstable();
        nbrs.dedup();
        self.remove_vertex(a);
        self.remove_vertex(b);
        let w = self.push_vertex();
        for x in nbrs {
            self.insert_edge(w, x);
        }
        w
    }

    // ---- value-returning edits ----

    pub fn delete_vertices(&self, vs: &[Vertex]) -> Graph {
        let mut g = self.clone();
        for &v in vs {
            g.remove_vertex(v);
        }
        g
    }

    pub fn delete_edges(&self, es: &[EdgeId]) -> Graph {
        let mut g = self.clone();
        for e in es {
            g.remove_edge(e.u, e.v);
        }
        g
    }

    /// Returns a copy with the given edges added (existing ones are kept once).
    pub fn add_edges(&self, es: &[EdgeId]) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        for e in es {
            g.check(e.u)?;
            g.check(e.v)?;
            if e.u == e.v {
                return Err(GraphError::SelfLoop(e.u));
            }
            g.insert_edge(e.u, e.v);
        }
        Ok(g)
    }

    /// `G[S]`, keeping the original ids (everything outside `S` is tombstoned).
    pub fn induced_subgraph(&self, keep: &[Vertex]) -> Graph {
        let mut mask = vec![false; self.adj.len()];
        for &v in keep {
            if self.contains(v) {
                mask[v] = true;
            }
        }
        let mut g = Graph {
            adj: vec![Vec::new(); self.adj.len()],
            alive: mask.clone(),
            live: 0,
            edges: 0,
        };
        for v in 0..self.adj.len() {
            if mask[v] {
                g.live += 1;
                g.adj[v] = self.adj[v].iter().copied().filter(|&w| mask[w]).collect();
                g.edges += g.adj[v].len();
            }
        }
        g.edges /= 2;
        g
    }

    /// Identifies `u` and `v` (adjacent or not) into a new vertex `w` with
    /// `N(w) = (N(u) ∪ N(v)) \ {u, v}`. Returns the new graph and `w`.
    pub fn merge_vertices(&self, u: Vertex, v: Vertex) -> Result<(Graph, Vertex), GraphError> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(GraphError::SameVertex(u));
        }
        let mut g = self.clone();
        let w = g.merge_in_place(u, v);
        Ok((g, w))
    }

    /// Replaces edge `e` by a path with `times` fresh internal vertices.
    pub fn subdivide_edge(&self, e: EdgeId, times: usize) -> Result<Graph, GraphError> {
        if !self.has_edge(e.u, e.v) {
            return Err(GraphError::MissingEdge(e.u, e.v));
        }
        if times == 0 {
            return Ok(self.clone());
        }
        let mut g = self.clone();
        g.remove_edge(e.u, e.v);
        let mut prev = e.u;
        for _ in 0..times {
            let w = g.push_vertex();
            g.insert_edge(prev, w);
            prev = w;
        }
        g.insert_edge(prev, e.v);
        Ok(g)
    }

    /// Renumbers live vertices to `0..n` preserving order. Returns the new
    /// graph and `old_id[new_id]`.
    pub fn compact(&self) -> (Graph, Vec<Vertex>) {
        let old: Vec<Vertex> = self.vertex_list();
        let mut new_id = vec![usize::MAX; self.adj.len()];
        for (i, &v) in old.iter().enumerate() {
            new_id[v] = i;
        }
        let mut g = Graph::empty(old.len());
        for (i, &v) in old.iter().enumerate() {
            g.adj[i] = self.adj[v].iter().map(|&w| new_id[w]).collect();
        }
        g.edges = self.edges;
        (g, old)
    }

    // ---- connectivity ----

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<Vertex>> {
        self.components_avoiding(&[])
    }

    /// Components of `G - removed` without materialising the subgraph.
    pub fn components_avoiding(&self, removed: &[Vertex]) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.adj.len()];
        for &r in removed {
            if r < seen.len() {
                seen[r] = true;
            }
        }
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(x) = queue.pop_front() {
                comp.push(x);
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components_avoiding(&[]).len() <= 1
    }

    /// BFS distances from `s`; `usize::MAX` marks unreachable ids.
    pub fn bfs_distances(&self, s: Vertex) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.adj.len()];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// All bridges, found with an iterative low-link pass.
    pub fn bridges(&self) -> Vec<Bridge> {
        let n = self.adj.len();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut timer = 0;
        let mut out = Vec::new();
        for root in self.vertices() {
            if disc[root] != usize::MAX {
                continue;
            }
            // (vertex, parent, next neighbour index)
            let mut stack: Vec<(Vertex, Vertex, usize)> = vec![(root, usize::MAX, 0)];
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
                if *idx < self.adj[v].len() {
                    let w = self.adj[v][*idx];
                    *idx += 1;
                    if w == parent {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        stack.push((w, v, 0));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[v]);
                        if low[v] > disc[parent] {
                            let edge = EdgeId::new(parent, v);
                            let proper = self.degree(parent) >= 2 && self.degree(v) >= 2;
                            out.push(Bridge { edge, proper });
                        }
                    }
                }
            }
        }
        out.sort_by_key(|b| b.edge);
        out
    }

    /// Cut vertices (articulation points), sorted.
    pub fn cut_vertices(&self) -> Vec<Vertex> {
        let mut cuts: Vec<Vertex> = Vec::new();
        let blocks = self.biconnected_components();
        let mut count = vec![0usize; self.adj.len()];
        for b in &blocks {
            for &v in b {
                count[v] += 1;
            }
        }
        for v in self.vertices() {
            if count[v] > 1 {
                cuts.push(v);
            }
        }
        cuts
    }

    /// Blocks (maximal 2-connected subgraphs, bridges, isolated vertices) as
    /// sorted vertex sets. Cut vertices appear in several blocks.
    pub fn biconnected_components(&self) -> Vec<Vec<Vertex>> {
        let n = self.adj.len();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut timer = 0;
        let mut blocks: Vec<Vec<Vertex>> = Vec::new();
        let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
        for root in self.vertices() {
            if disc[root] != usize::MAX {
                continue;
            }
            if self.adj[root].is_empty() {
                disc[root] = timer;
                timer += 1;
                blocks.push(vec![root]);
                continue;
            }
            let mut stack: Vec<(Vertex, Vertex, usize)> = vec![(root, usize::MAX, 0)];
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
                if *idx < self.adj[v].len() {
                    let w = self.adj[v][*idx];
                    *idx += 1;
                    if w == parent {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        edge_stack.push((v, w));
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        stack.push((w, v, 0));
                    } else if disc[w] < disc[v] {
                        edge_stack.push((v, w));
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[v]);
                        if low[v] >= disc[parent] {
                            let mut block = Vec::new();
                            while let Some((a, b)) = edge_stack.pop() {
                                block.push(a);
                                block.push(b);
                                if (a, b) == (parent, v) {
                                    break;
                                }
                            }
                            block.sort_unstable();
                            block.dedup();
                            blocks.push(block);
                        }
                    }
                }
            }
        }
        blocks.sort();
        blocks
    }
}

/// A path `(p_1, ..., p_n)` with 1-based signed indexing: `p_{-i}` is
/// `p_{n-i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedPath {
    vertices: Vec<Vertex>,
    induced: bool,
}

impl SignedPath {
    /// Validates against `g`: distinct vertices, consecutive ones adjacent.
    pub fn new(g: &Graph, vertices: Vec<Vertex>) -> Result<Self, GraphError> {
        if vertices.is_empty() {
            return Err(GraphError::NotAPath("empty vertex list".into()));
        }
        let mut seen = std::collections::HashSet::new();
        for &v in &vertices {
            if !g.contains(v) {
                return Err(GraphError::VertexOutOfRange(v));
            }
            if !seen.insert(v) {
                return Err(GraphError::NotAPath(format!("vertex {v} repeated")));
            }
        }
        for w in vertices.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(GraphError::NotAPath(format!(
                    "{} and {} not adjacent",
                    w[0], w[1]
                )));
            }
        }
        let induced = is_induced(g, &vertices);
        Ok(SignedPath { vertices, induced })
    }

    /// Builds a path without consulting a host graph (marked not induced).
    pub fn from_vertices(vertices: Vec<Vertex>) -> Self {
        SignedPath {
            vertices,
            induced: false,
        }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<Vertex> {
        self.vertices
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Number of edges.
    pub fn length(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_induced(&self) -> bool {
        self.induced
    }

    fn normalise(&self, i: isize) -> Result<usize, GraphError> {
        let n = self.vertices.len() as isize;
        let norm = if i >= 1 { i } else { n + i + 1 };
        if i == 0 || i.abs() > n {
            return Err(GraphError::IndexOutOfRange {
                index: i,
                len: self.vertices.len(),
            });
        }
        Ok(norm as usize)
    }

    /// `p_i` for signed 1-based `i`.
    pub fn get(&self, i: isize) -> Result<Vertex, GraphError> {
        Ok(self.vertices[self.normalise(i)? - 1])
    }

    /// 1-based position of `v`.
    pub fn position(&self, v: Vertex) -> Option<usize> {
        self.vertices.iter().position(|&x| x == v).map(|p| p + 1)
    }

    /// `P[i:j]`, always returned in ascending index order.
    pub fn slice(&self, i: isize, j: isize) -> Result<SignedPath, GraphError> {
        let a = self.normalise(i)?;
        let b = self.normalise(j)?;
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        Ok(SignedPath {
            vertices: self.vertices[lo - 1..hi].to_vec(),
            induced: self.induced,
        })
    }

    /// `P[u:v]` for vertices on the path.
    pub fn slice_between(&self, u: Vertex, v: Vertex) -> Option<SignedPath> {
        let a = self.position(u)? as isize;
        let b = self.position(v)? as isize;
        self.slice(a, b).ok()
    }

    /// `P[:i]`.
    pub fn prefix(&self, i: isize) -> Result<SignedPath, GraphError> {
        self.slice(1, i)
    }

    /// `P[i:]`.
    pub fn suffix(&self, i: isize) -> Result<SignedPath, GraphError> {
        self.slice(i, -1)
    }

    /// Walk along the path from `from` to `to`, in that orientation.
    pub fn walk(&self, from: Vertex, to: Vertex) -> Option<Vec<Vertex>> {
        let a = self.position(from)?;
        let b = self.position(to)?;
        if a <= b {
            Some(self.vertices[a - 1..b].to_vec())
        } else {
            let mut seg = self.vertices[b - 1..a].to_vec();
            seg.reverse();
            Some(seg)
        }
    }

    /// `dist_P(u, v)`.
    pub fn dist(&self, u: Vertex, v: Vertex) -> Option<usize> {
        Some(self.position(u)?.abs_diff(self.position(v)?))
    }

    pub fn reversed(&self) -> SignedPath {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        SignedPath {
            vertices,
            induced: self.induced,
        }
    }
}

/// Whether the vertex sequence spans no edges beyond its consecutive pairs.
pub fn is_induced(g: &Graph, vertices: &[Vertex]) -> bool {
    for i in 0..vertices.len() {
        for j in i + 2..vertices.len() {
            if g.has_edge(vertices[i], vertices[j]) {
                return false;
            }
        }
    }
    true
}

/// Is `vertices` a simple path in `g` (distinct, consecutive vertices adjacent)?
pub fn is_path_in(g: &Graph, vertices: &[Vertex]) -> bool {
    let mut seen = std::collections::HashSet::new();
    vertices.iter().all(|&v| g.contains(v) && seen.insert(v))
        && vertices.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_triangles_bridged() -> Graph {
        Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(
            Graph::new(4, &[(0, 1), (0, 1)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::new(4, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(Graph::new(3, &[(2, 2)]), Err(GraphError::SelfLoop(2)));
        assert_eq!(
            Graph::new(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange(3))
        );
        let g = Graph::new(1, &[]).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 0));
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3, Graph::path(3));
        assert_eq!(p3.neighbours(1), &[0, 2]);
    }

    #[test]
    fn slicing_follows_signed_indices() {
        let p = SignedPath::from_vertices((1..=10).collect());
        assert_eq!(p.slice(8, -1).unwrap().vertices(), &[8, 9, 10]);
        assert_eq!(p.slice(-3, -1).unwrap(), p.slice(8, 10).unwrap());
        assert_eq!(p.slice(4, 7).unwrap().vertices(), &[4, 5, 6, 7]);
        assert_eq!(p.slice(1, 1).unwrap().vertices(), &[1]);
        assert_eq!(p.slice(7, 4).unwrap(), p.slice(4, 7).unwrap());
        assert_eq!(p.slice(1, -1).unwrap(), p);
        assert_eq!(p.prefix(3).unwrap().vertices(), &[1, 2, 3]);
        assert_eq!(p.suffix(-2).unwrap().vertices(), &[9, 10]);
        assert_eq!(p.slice_between(5, 2).unwrap().vertices(), &[2, 3, 4, 5]);
        assert!(matches!(
            p.slice(0, 3),
            Err(GraphError::IndexOutOfRange { index: 0, .. })
        ));
        assert!(p.slice(1, 11).is_err());
        assert!(p.slice(-11, 2).is_err());
        assert_eq!(p.get(-1).unwrap(), 10);
        assert_eq!(p.dist(3, 9), Some(6));
    }

    #[test]
    fn path_validation() {
        let g = Graph::cycle(5);
        let p = SignedPath::new(&g, vec![0, 1, 2]).unwrap();
        assert!(p.is_induced());
        let q = SignedPath::new(&g, vec![0, 1, 2, 3, 4]).unwrap();
        assert!(!q.is_induced());
        assert!(SignedPath::new(&g, vec![0, 2]).is_err());
        assert!(SignedPath::new(&g, vec![0, 1, 0]).is_err());
    }

    #[test]
    fn bridges_of_small_graphs() {
        let tree = Graph::from_edges(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]);
        let b = tree.bridges();
        assert_eq!(b.len(), 4);
        for br in &b {
            let leafy = tree.degree(br.edge.u) == 1 || tree.degree(br.edge.v) == 1;
            assert_eq!(br.proper, !leafy);
        }
        assert!(Graph::cycle(5).bridges().is_empty());
        let g = two_triangles_bridged();
        assert_eq!(
            g.bridges(),
            vec![Bridge {
                edge: EdgeId::new(2, 3),
                proper: true
            }]
        );
    }

    #[test]
    fn blocks_of_small_graphs() {
        let bowtie = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]);
        assert_eq!(
            bowtie.biconnected_components(),
            vec![vec![0, 1, 2], vec![2, 3, 4]]
        );
        assert_eq!(bowtie.cut_vertices(), vec![2]);
        assert_eq!(
            Graph::cycle(6).biconnected_components(),
            vec![(0..6).collect::<Vec<_>>()]
        );
    }

    #[test]
    fn merge_and_subdivide() {
        let (k2, w) = Graph::complete(3).merge_vertices(0, 1).unwrap();
        assert_eq!(k2.vertex_count(), 2);
        assert_eq!(k2.edge_count(), 1);
        assert!(k2.has_edge(w, 2));

        let (g, w) = Graph::cycle(4).merge_vertices(0, 2).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.neighbours(w), &[1, 3]);
        assert!(!g.has_edge(1, 3));
        assert_eq!(
            Graph::cycle(4).merge_vertices(1, 1),
            Err(GraphError::SameVertex(1))
        );

        let k2 = Graph::complete(2);
        let p3 = k2.subdivide_edge(EdgeId::new(0, 1), 1).unwrap();
        assert_eq!((p3.vertex_count(), p3.edge_count()), (3, 2));
        assert_eq!(p3.neighbours(2), &[0, 1]);
        assert_eq!(k2.subdivide_edge(EdgeId::new(0, 1), 0).unwrap(), k2);
        assert_eq!(
            Graph::path(3).subdivide_edge(EdgeId::new(0, 2), 1),
            Err(GraphError::MissingEdge(0, 2))
        );
    }

    #[test]
    fn ids_are_stable_across_deletion() {
        let g = Graph::path(5).delete_vertices(&[2]);
        assert_eq!(g.vertex_list(), vec![0, 1, 3, 4]);
        assert_eq!(g.connected_components(), vec![vec![0, 1], vec![3, 4]]);
        let (c, old) = g.compact();
        assert_eq!(old, vec![0, 1, 3, 4]);
        assert_eq!(c, Graph::from_edges(4, &[(0, 1), (2, 3)]));
        let h = g.induced_subgraph(&[1, 3, 4]);
        assert_eq!(h.vertex_count(), 3);
        assert_eq!(h.edge_count(), 1);
    }
}
