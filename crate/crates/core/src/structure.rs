//! Jumps and chain extensions along a host path, and T-type / L-type
//! subgraph detection.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError, SignedPath, Vertex};
use crate::treedepth::{induced_path_between, treedepth_exact, TreedepthResult};

/// Node-expansion budget for induced path searches inside L-type detection.
const INDUCED_PATH_BUDGET: u64 = 5_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("vertex {0} is not on the path")]
    NotOnPath(Vertex),
    #[error("{0} does not precede {1} on the path")]
    NotOrdered(Vertex, Vertex),
    #[error("path assembly failed: {0}")]
    AssemblyFailed(String),
    #[error("invalid parameter: {0}")]
    InvalidParams(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Positive,
    Negative,
}

/// Jump queries against a fixed path `P` in `G`.
///
/// A jump between `a, b ∈ V(P)` exists iff `ab` is an edge outside `P` or
/// some component of `G - V(P)` touches both. The concrete jump returned for
/// a pair is the BFS path found with ascending neighbour order, cached so the
/// same pair always yields the same jump.
pub struct JumpContext<'g> {
    g: &'g Graph,
    path: SignedPath,
    /// 1-based position on `P`, 0 when off the path.
    pos: Vec<usize>,
    /// Path vertices adjacent to each off-path component.
    attach: Vec<Vec<Vertex>>,
    cache: HashMap<(Vertex, Vertex), Option<Vec<Vertex>>>,
}

impl<'g> JumpContext<'g> {
    pub fn new(g: &'g Graph, path: SignedPath) -> Result<Self, StructureError> {
        let path = SignedPath::new(g, path.into_vertices())?;
        let mut pos = vec![0; g.id_bound()];
        for (i, &v) in path.vertices().iter().enumerate() {
            pos[v] = i + 1;
        }
        let mut comp = vec![usize::MAX; g.id_bound()];
        let mut attach = Vec::new();
        for s in g.vertices() {
            if pos[s] != 0 || comp[s] != usize::MAX {
                continue;
            }
            let id = attach.len();
            let mut touch = Vec::new();
            comp[s] = id;
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &w in g.neighbours(x) {
                    if pos[w] != 0 {
                        touch.push(w);
                    } else if comp[w] == usize::MAX {
                        comp[w] = id;
                        queue.push_back(w);
                    }
                }
            }
            touch.sort_unstable();
            touch.dedup();
            attach.push(touch);
        }
        Ok(JumpContext {
            g,
            path,
            pos,
            attach,
            cache: HashMap::new(),
        })
    }

    pub fn path(&self) -> &SignedPath {
        &self.path
    }

    pub fn graph(&self) -> &Graph {
        self.g
    }

    fn position(&self, v: Vertex) -> Result<usize, StructureError> {
        match self.pos.get(v) {
            Some(&p) if p != 0 => Ok(p),
            _ => Err(StructureError::NotOnPath(v)),
        }
    }

    fn is_path_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.pos[a].abs_diff(self.pos[b]) == 1
    }

    /// Whether some jump joins `a` and `b` (both on `P`, distinct).
    pub fn has_jump(&self, a: Vertex, b: Vertex) -> bool {
        if a == b {
            return false;
        }
        if self.g.has_edge(a, b) && !self.is_path_edge(a, b) {
            return true;
        }
        self.attach
            .iter()
            .any(|t| t.binary_search(&a).is_ok() && t.binary_search(&b).is_ok())
    }

    /// The fixed jump `Z^P(a, b)`, oriented from `a` to `b`.
    pub fn find_jump(
        &mut self,
        a: Vertex,
        b: Vertex,
    ) -> Result<Option<SignedPath>, StructureError> {
        self.position(a)?;
        self.position(b)?;
        if a == b {
            return Ok(None);
        }
        let key = (a.min(b), a.max(b));
        if !self.cache.contains_key(&key) {
            let found = self.search_jump(key.0, key.1);
            self.cache.insert(key, found);
        }
        Ok(self.cache[&key].as_ref().map(|vs| {
            let mut vs = vs.clone();
            if vs[0] != a {
                vs.reverse();
            }
            SignedPath::new(self.g, vs).expect("jump is a path")
        }))
    }

    fn search_jump(&self, a: Vertex, b: Vertex) -> Option<Vec<Vertex>> {
        if !self.has_jump(a, b) {
            return None;
        }
        let mut prev = vec![usize::MAX; self.g.id_bound()];
        prev[a] = a;
        let mut queue = VecDeque::from([a]);
        while let Some(x) = queue.pop_front() {
            for &w in self.g.neighbours(x) {
                if prev[w] != usize::MAX {
                    continue;
                }
                let on_path = self.pos[w] != 0;
                if on_path && (w != b || (x == a && self.is_path_edge(a, b))) {
                    continue;
                }
                prev[w] = x;
                if w == b {
                    let mut out = vec![b];
                    let mut cur = b;
                    while cur != a {
                        cur = prev[cur];
                        out.push(cur);
                    }
                    out.reverse();
                    return Some(out);
                }
                queue.push_back(w);
            }
        }
        None
    }

    fn ordered(&self, u: Vertex, v: Vertex) -> Result<(usize, usize), StructureError> {
        let (pu, pv) = (self.position(u)?, self.position(v)?);
        if pu >= pv {
            return Err(StructureError::NotOrdered(u, v));
        }
        Ok((pu, pv))
    }

    /// `(x^±(u, v), y^±(u, v))`: the outer endpoint is as far beyond the
    /// interval as possible, then the inner endpoint as close to it as
    /// possible.
    pub fn max_jump_out(
        &self,
        u: Vertex,
        v: Vertex,
        sign: Sign,
    ) -> Result<Option<(Vertex, Vertex)>, StructureError> {
        let (pu, pv) = self.ordered(u, v)?;
        let p = self.path.vertices();
        let n = p.len();
        let inner = pu + 1..pv;
        let found = match sign {
            Sign::Positive => (pv + 1..=n).rev().find_map(|pb| {
                let b = p[pb - 1];
                inner
                    .clone()
                    .rev()
                    .map(|pa| p[pa - 1])
                    .find(|&a| self.has_jump(a, b))
                    .map(|a| (a, b))
            }),
            Sign::Negative => (1..pu).find_map(|pb| {
                let b = p[pb - 1];
                inner
                    .clone()
                    .map(|pa| p[pa - 1])
                    .find(|&a| self.has_jump(a, b))
                    .map(|a| (a, b))
            }),
        };
        Ok(found)
    }

    /// All jumps out of the interval `(u, v)` with the given sign, as
    /// `(inner, outer)` pairs.
    pub fn jumps_out(
        &self,
        u: Vertex,
        v: Vertex,
        sign: Sign,
    ) -> Result<Vec<(Vertex, Vertex)>, StructureError> {
        let (pu, pv) = self.ordered(u, v)?;
        let p = self.path.vertices();
        let outer: Vec<usize> = match sign {
            Sign::Positive => (pv + 1..=p.len()).collect(),
            Sign::Negative => (1..pu).collect(),
        };
        let mut out = Vec::new();
        for pa in pu + 1..pv {
            for &pb in &outer {
                if self.has_jump(p[pa - 1], p[pb - 1]) {
                    out.push((p[pa - 1], p[pb - 1]));
                }
            }
        }
        Ok(out)
    }

    /// The maximal chain extension `T^±(u, v)`.
    pub fn chain_extension(
        &mut self,
        u: Vertex,
        v: Vertex,
        sign: Sign,
    ) -> Result<ChainExtension, StructureError> {
        self.ordered(u, v)?;
        let mut jumps = Vec::new();
        let mut next = self.max_jump_out(u, v, sign)?;
        while let Some((x, y)) = next {
            jumps.push((x, y));
            next = match sign {
                Sign::Positive => self.max_jump_out(u, y, sign)?,
                Sign::Negative => self.max_jump_out(y, v, sign)?,
            };
        }
        let mut paths = Vec::with_capacity(jumps.len());
        for &(x, y) in &jumps {
            paths.push(self.find_jump(x, y)?.expect("max jump has a path"));
        }
        Ok(ChainExtension {
            base: (u, v),
            sign,
            jumps,
            paths,
        })
    }

    /// Odd and even paths of a chain extension. The even path is `None` when
    /// the extension has a single jump.
    pub fn odd_even_paths(
        &mut self,
        t: &ChainExtension,
    ) -> Result<(SignedPath, Option<SignedPath>), StructureError> {
        if t.jumps.is_empty() {
            return Err(StructureError::InvalidParams(
                "empty chain extension".into(),
            ));
        }
        let odd: Vec<_> = t.jumps.iter().copied().step_by(2).collect();
        let even: Vec<_> = t.jumps.iter().copied().skip(1).step_by(2).collect();
        let odd_path = self.associated_path(&odd)?;
        let even_path = if even.is_empty() {
            None
        } else {
            Some(self.associated_path(&even)?)
        };
        if let Some(e) = &even_path {
            if let Some(&v) = odd_path
                .vertices()
                .iter()
                .find(|v| e.vertices().contains(v))
            {
                return Err(StructureError::AssemblyFailed(format!(
                    "odd and even paths share vertex {v}"
                )));
            }
        }
        Ok((odd_path, even_path))
    }

    /// The path associated with a jump sequence: the first jump, then for
    /// each later jump the walk along `P` from the previous outer endpoint
    /// followed by the jump itself.
    pub fn associated_path(
        &mut self,
        seq: &[(Vertex, Vertex)],
    ) -> Result<SignedPath, StructureError> {
        let mut out: Vec<Vertex> = Vec::new();
        for (i, &(x, y)) in seq.iter().enumerate() {
            if i > 0 {
                let prev_y = seq[i - 1].1;
                let walk = self.path.walk(prev_y, x).ok_or_else(|| {
                    StructureError::AssemblyFailed(format!("no walk from {prev_y} to {x}"))
                })?;
                out.extend(walk.into_iter().skip(1));
            }
            let z = self.find_jump(x, y)?.ok_or_else(|| {
                StructureError::AssemblyFailed(format!("no jump between {x} and {y}"))
            })?;
            let skip = usize::from(!out.is_empty());
            out.extend(z.into_vertices().into_iter().skip(skip));
        }
        SignedPath::new(self.g, out).map_err(|e| StructureError::AssemblyFailed(e.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainExtension {
    pub base: (Vertex, Vertex),
    pub sign: Sign,
    /// `[(x_1, y_1), ...]`.
    pub jumps: Vec<(Vertex, Vertex)>,
    /// The fixed jump path for each pair, oriented from `x_i` to `y_i`.
    #[serde(skip)]
    pub paths: Vec<SignedPath>,
}

impl ChainExtension {
    pub fn len(&self) -> usize {
        self.jumps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.jumps.is_empty()
    }

    /// Outer endpoint of the last jump, if any.
    pub fn last_y(&self) -> Option<Vertex> {
        self.jumps.last().map(|j| j.1)
    }
}

/// A T-type subgraph `G[C]` with witness set `S`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TTypeReport {
    /// Sorted vertex set `C`.
    pub vertices: Vec<Vertex>,
    /// Sorted witness set `S`.
    pub witness: Vec<Vertex>,
    /// Connected components of `G[C]`.
    pub components: Vec<Vec<Vertex>>,
    /// Treedepth bound `c`.
    pub bound: usize,
    /// Exact `td(G[C])`.
    pub treedepth: usize,
    /// No proper subset of `C` is T-type (L-type) for the same bounds.
    pub minimal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LTypeReport {
    pub t: TTypeReport,
    pub length_bound: usize,
    /// Induced path between the two witnesses inside `G[C ∪ S]`.
    pub path: Vec<Vertex>,
}

/// Checks the T-type conditions for `(C, S)` without the treedepth bound.
pub fn t_type_shape(g: &Graph, c: &[Vertex], s: &[Vertex]) -> bool {
    if c.is_empty() || s.is_empty() || s.len() > 2 {
        return false;
    }
    let in_c = |v: Vertex| c.binary_search(&v).is_ok();
    let in_s = |v: Vertex| s.contains(&v);
    if c.iter().any(|&v| in_s(v)) {
        return false;
    }
    let mut outside: Vec<Vertex> = c
        .iter()
        .flat_map(|&v| g.neighbours(v).iter().copied())
        .filter(|&w| !in_c(w))
        .collect();
    outside.sort_unstable();
    outside.dedup();
    let mut s_sorted = s.to_vec();
    s_sorted.sort_unstable();
    if outside != s_sorted {
        return false;
    }
    s.iter().all(|&v| {
        g.neighbours(v)
            .iter()
            .filter(|&&w| in_c(w) || in_s(w))
            .count()
            >= 2
    })
}

/// Full T-type check, including `td(G[C]) <= bound`.
pub fn is_t_type(g: &Graph, c: &[Vertex], s: &[Vertex], bound: usize) -> bool {
    let mut c = c.to_vec();
    c.sort_unstable();
    t_type_shape(g, &c, s)
        && treedepth_exact(&g.induced_subgraph(&c), bound)
            .value()
            .is_some()
}

/// Full L-type check; searches for the induced witness-to-witness path.
pub fn is_l_type(g: &Graph, c: &[Vertex], s: &[Vertex], bound: usize, length: usize) -> bool {
    if s.len() != 2 || !is_t_type(g, c, s, bound) {
        return false;
    }
    let mut keep = c.to_vec();
    keep.extend_from_slice(s);
    let h = g.induced_subgraph(&keep);
    induced_path_between(&h, s[0], s[1], length, INDUCED_PATH_BUDGET)
        .path
        .is_some_and(|p| p.length() >= length)
}

struct Candidate {
    comps: Vec<Vec<Vertex>>,
    witness: Vec<Vertex>,
    path: Option<Vec<Vertex>>,
}

struct Detector<'g> {
    g: &'g Graph,
    bound: usize,
    td_ok: HashMap<Vec<Vertex>, bool>,
}

impl<'g> Detector<'g> {
    fn small_td(&mut self, comp: &[Vertex]) -> bool {
        if comp.len() <= self.bound {
            return true;
        }
        let g = self.g;
        let bound = self.bound;
        *self.td_ok.entry(comp.to_vec()).or_insert_with(|| {
            treedepth_exact(&g.induced_subgraph(comp), bound)
                .value()
                .is_some()
        })
    }

    fn witness_sets(&self) -> Vec<Vec<Vertex>> {
        let vs = self.g.vertex_list();
        let mut out: Vec<Vec<Vertex>> = vs.iter().map(|&v| vec![v]).collect();
        for (i, &a) in vs.iter().enumerate() {
            for &b in &vs[i + 1..] {
                out.push(vec![a, b]);
            }
        }
        out
    }

    /// Smallest valid choice of at most three components for one witness
    /// set. `long` marks components usable as the L-type path carrier.
    fn best_for(&mut self, s: &[Vertex], length: Option<usize>) -> Option<Candidate> {
        let g = self.g;
        let mut comps: Vec<Vec<Vertex>> = g
            .components_avoiding(s)
            .into_iter()
            .filter(|k| k.iter().any(|&v| s.iter().any(|&w| g.has_edge(v, w))))
            .collect();
        comps.retain(|k| self.small_td(k));
        comps.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        if comps.is_empty() {
            return None;
        }
        // Per component: which witnesses it touches, and the number of
        // witness neighbours each witness gets from it.
        let touch: Vec<Vec<usize>> = comps
            .iter()
            .map(|k| {
                s.iter()
                    .map(|&w| {
                        g.neighbours(w)
                            .iter()
                            .filter(|x| k.binary_search(x).is_ok())
                            .count()
                    })
                    .collect()
            })
            .collect();
        let s_edge = s.len() == 2 && g.has_edge(s[0], s[1]);
        let carrier: Vec<Option<Vec<Vertex>>> = match length {
            None => vec![None; comps.len()],
            Some(l) => comps
                .iter()
                .map(|k| {
                    if s_edge {
                        return (l <= 1).then(|| s.to_vec());
                    }
                    let mut keep = k.clone();
                    keep.extend_from_slice(s);
                    let h = g.induced_subgraph(&keep);
                    induced_path_between(&h, s[0], s[1], l, INDUCED_PATH_BUDGET)
                        .path
                        .filter(|p| p.length() >= l)
                        .map(|p| p.into_vertices())
                })
                .collect(),
        };
        if length.is_some() && carrier.iter().all(|c| c.is_none()) {
            return None;
        }
        let m = comps.len();
        let mut best: Option<(usize, Vec<usize>)> = None;
        let consider = |idx: Vec<usize>, best: &mut Option<(usize, Vec<usize>)>| {
            let size: usize = idx.iter().map(|&i| comps[i].len()).sum();
            if let Some((bs, bi)) = best {
                let key_new: Vec<&Vec<Vertex>> = idx.iter().map(|&i| &comps[i]).collect();
                let key_old: Vec<&Vec<Vertex>> = bi.iter().map(|&i| &comps[i]).collect();
                if (size, union_sorted(&key_new)) >= (*bs, union_sorted(&key_old)) {
                    return;
                }
            }
            for (j, _) in s.iter().enumerate() {
                let from_c: usize = idx.iter().map(|&i| touch[i][j]).sum();
                if from_c == 0 || from_c + usize::from(s_edge) < 2 {
                    return;
                }
            }
            if length.is_some() && idx.iter().all(|&i| carrier[i].is_none()) {
                return;
            }
            *best = Some((size, idx));
        };
        for a in 0..m {
            consider(vec![a], &mut best);
            for b in a + 1..m {
                consider(vec![a, b], &mut best);
                for c in b + 1..m {
                    consider(vec![a, b, c], &mut best);
                }
            }
        }
        let (_, idx) = best?;
        let path = idx.iter().find_map(|&i| carrier[i].clone());
        Some(Candidate {
            comps: idx.into_iter().map(|i| comps[i].clone()).collect(),
            witness: s.to_vec(),
            path,
        })
    }

    fn find(&mut self, length: Option<usize>) -> Option<(TTypeReport, Option<Vec<Vertex>>)> {
        let mut best: Option<(usize, Vec<Vertex>, Vec<Vertex>, Candidate)> = None;
        for s in self.witness_sets() {
            if length.is_some() && s.len() != 2 {
                continue;
            }
            let Some(cand) = self.best_for(&s, length) else {
                continue;
            };
            let refs: Vec<&Vec<Vertex>> = cand.comps.iter().collect();
            let c = union_sorted(&refs);
            let better = match &best {
                None => true,
                Some((bs, bw, bc, _)) => (c.len(), &s, &c) < (*bs, bw, bc),
            };
            if better {
                best = Some((c.len(), s.clone(), c, cand));
            }
        }
        let (_, witness, c, cand) = best?;
        let h = self.g.induced_subgraph(&c);
        let td = match treedepth_exact(&h, self.bound) {
            TreedepthResult::Value(d, _) => d,
            TreedepthResult::ExceedsCap => {
                unreachable!("components were checked against the bound")
            }
        };
        let mut components = cand.comps;
        components.sort();
        let report = TTypeReport {
            vertices: c,
            witness,
            components,
            bound: self.bound,
            treedepth: td,
            minimal: true,
        };
        debug_assert_eq!(cand.witness, report.witness);
        Some((report, cand.path))
    }
}

fn union_sorted(parts: &[&Vec<Vertex>]) -> Vec<Vertex> {
    let mut out: Vec<Vertex> = parts.iter().flat_map(|p| p.iter().copied()).collect();
    out.sort_unstable();
    out
}

/// A minimum-cardinality T-type subgraph for treedepth bound `c`, which is in
/// particular inclusion-minimal. Witness sets have size one or two; ties are
/// broken by the witness set, then the vertex set.
pub fn find_minimal_t_type(g: &Graph, c: usize) -> Result<Option<TTypeReport>, StructureError> {
    if c == 0 {
        return Err(StructureError::InvalidParams(
            "treedepth bound must be >= 1".into(),
        ));
    }
    let mut d = Detector {
        g,
        bound: c,
        td_ok: HashMap::new(),
    };
    Ok(d.find(None).map(|(r, _)| r))
}

/// A minimum-cardinality L-type subgraph for treedepth bound `c` and length
/// bound `length`.
pub fn find_minimal_l_type(
    g: &Graph,
    c: usize,
    length: usize,
) -> Result<Option<LTypeReport>, StructureError> {
    if c == 0 || length == 0 {
        return Err(StructureError::InvalidParams("bounds must be >= 1".into()));
    }
    let mut d = Detector {
        g,
        bound: c,
        td_ok: HashMap::new(),
    };
    Ok(d.find(Some(length)).map(|(t, path)| LTypeReport {
        t,
        length_bound: length,
        path: path.expect("L-type candidates carry a path"),
    }))
}

/// Treedepth bound for the S-family: `16(2k-1)(k-1)`.
pub fn s_family_bound(k: usize) -> usize {
    16 * (2 * k).saturating_sub(1) * k.saturating_sub(1)
}

/// L-type bounds for the H-family: treedepth `(4k-3)(8k²-6k+2m+8)-1` and
/// length `m+k`.
pub fn h_family_bounds(m: usize, k: usize) -> (usize, usize) {
    let td = (4 * k).saturating_sub(3) * (8 * k * k + 2 * m + 8 - 6 * k) - 1;
    (td.max(1), m + k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig5() -> (Graph, SignedPath) {
        // p1..p10 are 0..9, q1..q4 are 10..13.
        let mut e: Vec<(usize, usize)> = (0..9).map(|i| (i, i + 1)).collect();
        e.extend([
            (4, 8),
            (3, 1),
            (4, 10),
            (10, 11),
            (11, 12),
            (12, 13),
            (13, 9),
            (5, 11),
        ]);
        let g = Graph::from_edges(14, &e);
        let p = SignedPath::new(&g, (0..10).collect()).unwrap();
        (g, p)
    }

    #[test]
    fn fig5_jumps() {
        let (g, p) = fig5();
        let mut ctx = JumpContext::new(&g, p).unwrap();
        assert!(ctx.find_jump(5, 9).unwrap().is_some());
        assert_eq!(
            ctx.max_jump_out(3, 6, Sign::Positive).unwrap(),
            Some((5, 9))
        );
        let mut all = ctx.jumps_out(3, 6, Sign::Positive).unwrap();
        all.sort();
        assert_eq!(all, vec![(4, 8), (4, 9), (5, 9)]);
        let z = ctx.find_jump(5, 9).unwrap().unwrap();
        assert_eq!(z.vertices(), &[5, 11, 12, 13, 9]);
    }

    #[test]
    fn jump_edge_cases() {
        let g = Graph::path(4);
        let mut ctx = JumpContext::new(&g, SignedPath::new(&g, vec![0, 1, 2, 3]).unwrap()).unwrap();
        assert!(ctx.find_jump(1, 2).unwrap().is_none());
        assert_eq!(ctx.max_jump_out(0, 3, Sign::Positive).unwrap(), None);

        let c = Graph::cycle(6);
        let mut ctx = JumpContext::new(&c, SignedPath::new(&c, (0..6).collect()).unwrap()).unwrap();
        assert_eq!(ctx.find_jump(0, 5).unwrap().unwrap().vertices(), &[0, 5]);
        assert_eq!(ctx.find_jump(5, 0).unwrap().unwrap().vertices(), &[5, 0]);
        assert!(matches!(
            ctx.max_jump_out(3, 1, Sign::Positive),
            Err(StructureError::NotOrdered(3, 1))
        ));
    }

    fn fig6() -> Graph {
        // p1..p12 are 0..11, q1..q6 are 12..17.
        let mut e: Vec<(usize, usize)> = (0..11).map(|i| (i, i + 1)).collect();
        e.extend([
            (1, 4),
            (2, 12),
            (12, 13),
            (13, 5),
            (4, 14),
            (14, 7),
            (6, 15),
            (15, 16),
            (16, 17),
            (17, 9),
            (8, 10),
        ]);
        Graph::from_edges(18, &e)
    }

    #[test]
    fn fig6_chain() {
        let g = fig6();
        let mut ctx =
            JumpContext::new(&g, SignedPath::new(&g, (0..12).collect()).unwrap()).unwrap();
        let t = ctx.chain_extension(0, 2, Sign::Positive).unwrap();
        assert_eq!(t.jumps, vec![(1, 4), (2, 5), (4, 7), (6, 9), (8, 10)]);
        assert_eq!(
            ctx.max_jump_out(0, t.last_y().unwrap(), Sign::Positive)
                .unwrap(),
            None
        );
        let (odd, even) = ctx.odd_even_paths(&t).unwrap();
        assert_eq!(odd.vertices(), &[1, 4, 14, 7, 8, 10]);
        assert_eq!(even.unwrap().vertices(), &[2, 12, 13, 5, 6, 15, 16, 17, 9]);
    }

    #[test]
    fn negative_chain() {
        // Mirror of the fig. 6 instance.
        let g = fig6();
        let rev: Vec<usize> = (0..12).rev().collect();
        let mut ctx = JumpContext::new(&g, SignedPath::new(&g, rev).unwrap()).unwrap();
        let t = ctx.chain_extension(11, 9, Sign::Negative);
        // On the reversed path the base (p_12, p_10) has no interior jumps.
        assert!(t.unwrap().is_empty());
        let mut ctx =
            JumpContext::new(&g, SignedPath::new(&g, (0..12).collect()).unwrap()).unwrap();
        let t = ctx.chain_extension(8, 11, Sign::Negative).unwrap();
        assert_eq!(t.jumps[0], (9, 6));
    }

    #[test]
    fn t_type_examples() {
        let k5 = Graph::complete(5);
        let r = find_minimal_t_type(&k5, 3).unwrap().unwrap();
        assert_eq!(r.vertices.len(), 3);
        assert_eq!(r.witness.len(), 2);
        assert_eq!(r.treedepth, 3);
        assert!(is_t_type(&k5, &r.vertices, &r.witness, 3));
        assert!(find_minimal_t_type(&k5, 2).unwrap().is_none());
        assert!(find_minimal_t_type(&k5, 0).is_err());
    }

    #[test]
    fn t_type_prefers_small_sets() {
        // Pendant triangle on vertex 0 of a K_4.
        let g = Graph::from_edges(
            6,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 2),
                (1, 3),
                (2, 3),
                (0, 4),
                (0, 5),
                (4, 5),
            ],
        );
        let r = find_minimal_t_type(&g, 2).unwrap().unwrap();
        assert_eq!(r.witness, vec![0, 4]);
        assert_eq!(r.vertices, vec![5]);
        // With witness {0} alone the triangle side {4, 5} also qualifies.
        assert!(is_t_type(&g, &[4, 5], &[0], 2));
        assert!(!is_t_type(&g, &[1, 2, 3], &[0], 2));
    }

    #[test]
    fn l_type_on_c10() {
        let c10 = Graph::cycle(10);
        // Antipodal witnesses: both arcs are needed, each has length 5.
        let arcs: Vec<usize> = (1..10).filter(|&v| v != 5).collect();
        assert!(is_l_type(&c10, &arcs, &[0, 5], 3, 5));
        assert!(!is_l_type(&c10, &arcs, &[0, 5], 3, 6));
        assert!(!is_l_type(&c10, &[1, 2, 3, 4], &[0, 5], 3, 5));
        // Free witnesses: {0, 2} leaves the long arc of length 8.
        let r = find_minimal_l_type(&c10, 3, 5).unwrap().unwrap();
        assert_eq!(r.t.witness, vec![0, 2]);
        assert_eq!(r.t.vertices.len(), 8);
        assert_eq!(r.path.len() - 1, 8);
        assert!(is_l_type(&c10, &r.t.vertices, &r.t.witness, 3, 8));
        assert!(find_minimal_l_type(&c10, 3, 9).unwrap().is_none());
    }

    #[test]
    fn family_bounds() {
        assert_eq!(s_family_bound(2), 48);
        assert_eq!(s_family_bound(1), 0);
        assert_eq!(h_family_bounds(1, 2), (149, 3));
    }
}
