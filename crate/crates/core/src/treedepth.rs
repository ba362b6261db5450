//! Exact treedepth with certifying elimination forests, and path witnesses.

use std::collections::HashMap;
use std::rc::Rc;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::graph::{is_induced, Graph, SignedPath, Vertex};

/// Vertex sets up to this size are memoised.
const MEMO_LIMIT: usize = 24;

/// Rooted forest over the vertices of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EliminationForest {
    /// Indexed by vertex id; `None` for roots and for ids not in the graph.
    parent: Vec<Option<Vertex>>,
    roots: Vec<Vertex>,
    height: usize,
}

impl EliminationForest {
    /// Builds a forest from `(vertex, parent)` pairs. Returns `None` if the
    /// parent structure has a cycle or dangling parent.
    pub fn from_parents(id_bound: usize, entries: &[(Vertex, Option<Vertex>)]) -> Option<Self> {
        let mut parent = vec![None; id_bound];
        let mut member = vec![false; id_bound];
        for &(v, _) in entries {
            if v >= id_bound || member[v] {
                return None;
            }
            member[v] = true;
        }
        let mut roots = Vec::new();
        for &(v, p) in entries {
            match p {
                Some(p) if p < id_bound && member[p] => parent[v] = Some(p),
                Some(_) => return None,
                None => roots.push(v),
            }
        }
        roots.sort_unstable();
        let mut f = EliminationForest {
            parent,
            roots,
            height: 0,
        };
        let mut height = 0;
        for &(v, _) in entries {
            height = height.max(f.depth_checked(v, entries.len())?);
        }
        f.height = height;
        Some(f)
    }

    /// Chain forest following `order` (first vertex is the root).
    pub fn chain(id_bound: usize, order: &[Vertex]) -> Self {
        let entries: Vec<_> = order
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, if i == 0 { None } else { Some(order[i - 1]) }))
            .collect();
        EliminationForest::from_parents(id_bound, &entries).expect("chain is acyclic")
    }

    pub fn parent(&self, v: Vertex) -> Option<Vertex> {
        self.parent.get(v).copied().flatten()
    }

    pub fn roots(&self) -> &[Vertex] {
        &self.roots
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn id_bound(&self) -> usize {
        self.parent.len()
    }

    /// Number of vertices on the path from `v` to its root, inclusive.
    pub fn depth(&self, v: Vertex) -> usize {
        self.depth_checked(v, self.parent.len())
            .unwrap_or(usize::MAX)
    }

    fn depth_checked(&self, v: Vertex, limit: usize) -> Option<usize> {
        let mut d = 1;
        let mut cur = v;
        while let Some(p) = self.parent(cur) {
            d += 1;
            if d > limit {
                return None;
            }
            cur = p;
        }
        Some(d)
    }

    /// Ancestors of `v`, nearest first, excluding `v`.
    pub fn ancestors(&self, v: Vertex) -> Vec<Vertex> {
        let mut out = Vec::new();
        let mut cur = v;
        while let Some(p) = self.parent(cur) {
            out.push(p);
            cur = p;
        }
        out
    }

    /// Children lists indexed by vertex id, each sorted.
    pub fn children(&self) -> Vec<Vec<Vertex>> {
        let mut ch = vec![Vec::new(); self.parent.len()];
        for (v, p) in self.parent.iter().enumerate() {
            if let Some(p) = p {
                ch[*p].push(v);
            }
        }
        ch
    }

    fn is_ancestor(&self, a: Vertex, b: Vertex) -> bool {
        let mut cur = b;
        loop {
            if cur == a {
                return true;
            }
            match self.parent(cur) {
                Some(p) => cur = p,
                None => return false,
            }
        }
    }

    /// Re-expresses the forest over other ids via `map[old] = new`.
    pub fn relabel(&self, map: &[Vertex], id_bound: usize) -> Self {
        let mut entries = Vec::new();
        for (v, p) in self.parent.iter().enumerate() {
            if p.is_some() || self.roots.binary_search(&v).is_ok() {
                entries.push((map[v], p.map(|p| map[p])));
            }
        }
        EliminationForest::from_parents(id_bound, &entries).expect("relabelling preserves shape")
    }
}

/// Checks that `f` spans exactly the vertices of `g` and every edge joins an
/// ancestor-descendant pair.
pub fn validate_elimination_forest(g: &Graph, f: &EliminationForest) -> bool {
    if f.id_bound() < g.id_bound() {
        return false;
    }
    let n = g.vertex_count();
    let mut count = 0;
    for v in 0..f.id_bound() {
        let in_g = g.contains(v);
        let in_f = f.parent(v).is_some() || f.roots.binary_search(&v).is_ok();
        if in_g != in_f {
            return false;
        }
        if let Some(p) = f.parent(v) {
            if !g.contains(p) {
                return false;
            }
        }
        if in_g {
            count += 1;
            if f.depth_checked(v, n).is_none() {
                return false;
            }
        }
    }
    if count != n {
        return false;
    }
    g.edges().all(|e| {
        if f.depth(e.u) < f.depth(e.v) {
            f.is_ancestor(e.u, e.v)
        } else {
            f.is_ancestor(e.v, e.u)
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TreedepthResult {
    Value(usize, EliminationForest),
    ExceedsCap,
}

impl TreedepthResult {
    pub fn value(&self) -> Option<usize> {
        match self {
            TreedepthResult::Value(d, _) => Some(*d),
            TreedepthResult::ExceedsCap => None,
        }
    }

    pub fn forest(&self) -> Option<&EliminationForest> {
        match self {
            TreedepthResult::Value(_, f) => Some(f),
            TreedepthResult::ExceedsCap => None,
        }
    }
}

/// Exact treedepth when it is at most `cap`.
pub fn treedepth_exact(g: &Graph, cap: usize) -> TreedepthResult {
    let (h, old_ids) = g.compact();
    let n = h.id_bound();
    if n <= 64 {
        return mask_treedepth(&h, cap)
            .map(|(td, local)| {
                let forest = local.relabel(&old_ids, g.id_bound());
                debug_assert!(validate_elimination_forest(g, &forest));
                TreedepthResult::Value(td, forest)
            })
            .unwrap_or(TreedepthResult::ExceedsCap);
    }
    let mut search = Search::new(&h);
    let mut entries: Vec<(Vertex, Option<Vertex>)> = Vec::with_capacity(n);
    let mut td = 0;
    for comp in h.connected_components() {
        let start = search.lower_bound(&comp).max(1);
        let mut found = None;
        for d in start..=cap {
            if let Some((height, piece)) = search.decide(&comp, d) {
                found = Some((height, piece));
                break;
            }
        }
        let Some((height, piece)) = found else {
            return TreedepthResult::ExceedsCap;
        };
        td = td.max(height);
        entries.extend(piece.iter().copied());
    }
    let local = EliminationForest::from_parents(n, &entries).expect("search builds a forest");
    let forest = local.relabel(&old_ids, g.id_bound());
    debug_assert!(validate_elimination_forest(g, &forest));
    TreedepthResult::Value(td, forest)
}

type Piece = Rc<Vec<(Vertex, Option<Vertex>)>>;

#[derive(Default)]
struct MemoEntry {
    /// td is at least this.
    lower: usize,
    best: Option<(usize, Piece)>,
}

struct Search<'a> {
    g: &'a Graph,
    memo: HashMap<FixedBitSet, MemoEntry>,
    mask: FixedBitSet,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph) -> Self {
        Search {
            g,
            memo: HashMap::new(),
            mask: FixedBitSet::with_capacity(g.id_bound()),
        }
    }

    fn key(&self, s: &[Vertex]) -> FixedBitSet {
        let mut k = FixedBitSet::with_capacity(self.g.id_bound());
        for &v in s {
            k.insert(v);
        }
        k
    }

    fn lower_bound(&mut self, s: &[Vertex]) -> usize {
        let clique = self.greedy_clique(s);
        let (path, _) = self.dfs_tree(s);
        clique.max(ceil_log2(path + 1)).max(self.degeneracy(s) + 1)
    }

    /// Degeneracy of `G[s]`, a lower bound on treewidth and so on `td - 1`.
    fn degeneracy(&self, s: &[Vertex]) -> usize {
        let mut deg: Vec<usize> = s
            .iter()
            .map(|&v| {
                self.g
                    .neighbours(v)
                    .iter()
                    .filter(|w| s.binary_search(w).is_ok())
                    .count()
            })
            .collect();
        let mut gone = vec![false; s.len()];
        let mut best = 0;
        for _ in 0..s.len() {
            let i = (0..s.len())
                .filter(|&i| !gone[i])
                .min_by_key(|&i| deg[i])
                .unwrap();
            best = best.max(deg[i]);
            gone[i] = true;
            for &w in self.g.neighbours(s[i]) {
                if let Ok(j) = s.binary_search(&w) {
                    if !gone[j] {
                        deg[j] -= 1;
                    }
                }
            }
        }
        best
    }

    fn greedy_clique(&self, s: &[Vertex]) -> usize {
        let mut best = 1;
        for &v in s {
            let mut clique = vec![v];
            for &w in self.g.neighbours(v) {
                if s.binary_search(&w).is_ok() && clique.iter().all(|&c| self.g.has_edge(c, w)) {
                    clique.push(w);
                }
            }
            best = best.max(clique.len());
        }
        best
    }

    /// DFS tree of the connected set `s` from its first vertex: returns the
    /// height and the forest entries.
    fn dfs_tree(&mut self, s: &[Vertex]) -> (usize, Vec<(Vertex, Option<Vertex>)>) {
        self.mask.clear();
        for &v in s {
            self.mask.insert(v);
        }
        let root = s[0];
        let mut entries = vec![(root, None)];
        let mut depth = HashMap::from([(root, 1usize)]);
        let mut height = 1;
        self.mask.set(root, false);
        let mut stack = vec![(root, 0usize)];
        while let Some(&mut (v, ref mut i)) = stack.last_mut() {
            let nb = self.g.neighbours(v);
            if *i < nb.len() {
                let w = nb[*i];
                *i += 1;
                if self.mask.contains(w) {
                    self.mask.set(w, false);
                    let d = depth[&v] + 1;
                    height = height.max(d);
                    depth.insert(w, d);
                    entries.push((w, Some(v)));
                    stack.push((w, 0));
                }
            } else {
                stack.pop();
            }
        }
        (height, entries)
    }

    fn components_without(&mut self, s: &[Vertex], root: Vertex) -> Vec<Vec<Vertex>> {
        self.mask.clear();
        for &v in s {
            if v != root {
                self.mask.insert(v);
            }
        }
        let mut comps = Vec::new();
        for &v in s {
            if !self.mask.contains(v) {
                continue;
            }
            self.mask.set(v, false);
            let mut comp = vec![v];
            let mut head = 0;
            while head < comp.len() {
                let x = comp[head];
                head += 1;
                for &w in self.g.neighbours(x) {
                    if self.mask.contains(w) {
                        self.mask.set(w, false);
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        comps
    }

    /// Decides `td(G[s]) <= d` for connected, sorted `s`; on success returns
    /// a forest piece of height at most `d`.
    fn decide(&mut self, s: &[Vertex], d: usize) -> Option<(usize, Piece)> {
        if s.len() <= d {
            let entries = s
                .iter()
                .enumerate()
                .map(|(i, &v)| (v, if i == 0 { None } else { Some(s[i - 1]) }))
                .collect();
            return Some((s.len(), Rc::new(entries)));
        }
        let key = (s.len() <= MEMO_LIMIT).then(|| self.key(s));
        if let Some(k) = &key {
            if let Some(e) = self.memo.get(k) {
                if let Some((h, p)) = &e.best {
                    if *h <= d {
                        return Some((*h, p.clone()));
                    }
                }
                if e.lower > d {
                    return None;
                }
            }
        }
        let result = self.branch(s, d);
        if let Some(k) = key {
            let e = self.memo.entry(k).or_default();
            match &result {
                Some((h, p)) => {
                    if e.best.as_ref().is_none_or(|(bh, _)| h < bh) {
                        e.best = Some((*h, p.clone()));
                    }
                }
                None => e.lower = e.lower.max(d + 1),
            }
        }
        result
    }

    fn branch(&mut self, s: &[Vertex], d: usize) -> Option<(usize, Piece)> {
        if d <= 1 || self.lower_bound(s) > d {
            return None;
        }
        let (h, entries) = self.dfs_tree(s);
        if h <= d {
            return Some((h, Rc::new(entries)));
        }
        let mut order: Vec<(usize, Vertex)> = s
            .iter()
            .map(|&v| {
                let deg = self
                    .g
                    .neighbours(v)
                    .iter()
                    .filter(|w| s.binary_search(w).is_ok())
                    .count();
                (deg, v)
            })
            .collect();
        order.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        // Some optimal forest has a universal vertex at the root.
        if order[0].0 + 1 == s.len() {
            order.truncate(1);
        }
        'roots: for (_, root) in order {
            let comps = self.components_without(s, root);
            let mut pieces = Vec::with_capacity(comps.len());
            for comp in &comps {
                match self.decide(comp, d - 1) {
                    Some(p) => pieces.push(p),
                    None => continue 'roots,
                }
            }
            let mut entries = vec![(root, None)];
            let mut height = 1;
            for (ph, piece) in pieces {
                height = height.max(ph + 1);
                entries.extend(piece.iter().map(|&(v, p)| (v, Some(p.unwrap_or(root)))));
            }
            return Some((height, Rc::new(entries)));
        }
        None
    }
}

/// Exact search for compact graphs on at most 64 vertices, with vertex sets
/// as bitmasks.
fn mask_treedepth(g: &Graph, cap: usize) -> Option<(usize, EliminationForest)> {
    let n = g.id_bound();
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbours(v).iter().fold(0, |m, &w| m | 1 << w))
        .collect();
    let mut search = MaskSearch {
        adj,
        memo: HashMap::new(),
    };
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut entries = Vec::with_capacity(n);
    let mut td = 0;
    for comp in search.components(all) {
        let start = search.lower_bound(comp);
        let d = (start..=cap).find(|&d| search.decide(comp, d).is_some())?;
        td = td.max(d);
        search.rebuild(comp, None, &mut entries);
    }
    let forest = EliminationForest::from_parents(n, &entries).expect("search builds a forest");
    debug_assert_eq!(forest.height(), td);
    Some((td, forest))
}

#[derive(Clone, Copy)]
enum How {
    Chain,
    Dfs,
    Root(usize),
}

#[derive(Clone, Copy)]
struct Bounds {
    lo: usize,
    hi: usize,
    how: How,
}

struct MaskSearch {
    adj: Vec<u64>,
    memo: HashMap<u64, Bounds>,
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            v
        })
    })
}

impl MaskSearch {
    fn components(&self, s: u64) -> Vec<u64> {
        let mut out = Vec::new();
        let mut rest = s;
        while rest != 0 {
            let seed = rest & rest.wrapping_neg();
            let (mut comp, mut frontier) = (seed, seed);
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let nb = self.adj[v] & s & !comp;
                comp |= nb;
                frontier |= nb;
            }
            rest &= !comp;
            out.push(comp);
        }
        out
    }

    fn degree_in(&self, v: usize, s: u64) -> usize {
        (self.adj[v] & s).count_ones() as usize
    }

    fn lower_bound(&self, s: u64) -> usize {
        let mut best = 1;
        // Degeneracy plus one.
        let mut rest = s;
        while rest != 0 {
            let v = bits(rest).min_by_key(|&v| self.degree_in(v, rest)).unwrap();
            best = best.max(self.degree_in(v, rest) + 1);
            rest &= !(1 << v);
        }
        // Greedy cliques.
        for v in bits(s) {
            let mut clique = 1u64 << v;
            for w in bits(self.adj[v] & s) {
                if clique & !self.adj[w] == 0 {
                    clique |= 1 << w;
                }
            }
            best = best.max(clique.count_ones() as usize);
        }
        let (h, _) = self.dfs(s);
        best.max(ceil_log2(h + 1))
    }

    /// DFS tree of connected `s` from its lowest vertex: height and entries.
    fn dfs(&self, s: u64) -> (usize, Vec<(Vertex, Option<Vertex>)>) {
        let root = s.trailing_zeros() as usize;
        let mut left = s & !(1 << root);
        let mut entries = vec![(root, None)];
        let mut stack = vec![root];
        let mut height = 1;
        while let Some(&v) = stack.last() {
            let nb = self.adj[v] & left;
            if nb == 0 {
                stack.pop();
                continue;
            }
            let w = nb.trailing_zeros() as usize;
            left &= !(1 << w);
            entries.push((w, Some(v)));
            stack.push(w);
            height = height.max(stack.len());
        }
        (height, entries)
    }

    fn record(&mut self, s: u64, h: usize, how: How) {
        let e = self.memo.entry(s).or_insert(Bounds {
            lo: 1,
            hi: usize::MAX,
            how,
        });
        if h < e.hi {
            e.hi = h;
            e.how = how;
        }
    }

    /// Height of a forest for connected `s` of height at most `d`, if any.
    fn decide(&mut self, s: u64, d: usize) -> Option<usize> {
        let size = s.count_ones() as usize;
        if size <= d {
            return Some(self.memo.get(&s).map_or(size, |e| e.hi.min(size)));
        }
        let lo = match self.memo.get(&s) {
            Some(e) if e.hi <= d => return Some(e.hi),
            Some(e) => e.lo,
            None => {
                let lo = self.lower_bound(s);
                self.memo.insert(
                    s,
                    Bounds {
                        lo,
                        hi: usize::MAX,
                        how: How::Chain,
                    },
                );
                lo
            }
        };
        if lo > d {
            return None;
        }
        let (h, _) = self.dfs(s);
        if h <= d {
            self.record(s, h, How::Dfs);
            return Some(h);
        }
        let mut roots: Vec<(usize, usize)> = bits(s).map(|v| (self.degree_in(v, s), v)).collect();
        roots.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        // Some optimal forest has a universal vertex at the root.
        if roots[0].0 + 1 == size {
            roots.truncate(1);
        }
        'roots: for (_, root) in roots {
            let mut comps = self.components(s & !(1 << root));
            comps.sort_by_key(|c| std::cmp::Reverse(c.count_ones()));
            let mut height = 1;
            for c in comps {
                match self.decide(c, d - 1) {
                    Some(ch) => height = height.max(ch + 1),
                    None => continue 'roots,
                }
            }
            self.record(s, height, How::Root(root));
            return Some(height);
        }
        self.memo.get_mut(&s).expect("entry inserted").lo = d + 1;
        None
    }

    fn rebuild(&self, s: u64, parent: Option<Vertex>, out: &mut Vec<(Vertex, Option<Vertex>)>) {
        let size = s.count_ones() as usize;
        let how = match self.memo.get(&s) {
            Some(e) if e.hi <= size => e.how,
            _ => How::Chain,
        };
        match how {
            How::Chain => {
                let mut p = parent;
                for v in bits(s) {
                    out.push((v, p));
                    p = Some(v);
                }
            }
            How::Dfs => {
                let (_, entries) = self.dfs(s);
                out.extend(entries.into_iter().map(|(v, p)| (v, p.or(parent))));
            }
            How::Root(r) => {
                out.push((r, parent));
                for c in self.components(s & !(1 << r)) {
                    self.rebuild(c, Some(r), out);
                }
            }
        }
    }
}

fn ceil_log2(x: usize) -> usize {
    if x <= 1 {
        0
    } else {
        (usize::BITS - (x - 1).leading_zeros()) as usize
    }
}

/// Deepest root-to-leaf branch of a DFS forest; its vertex count is at least
/// the treedepth.
pub fn long_path_witness(g: &Graph) -> Option<SignedPath> {
    let mut best: Vec<Vertex> = Vec::new();
    let mut seen = vec![false; g.id_bound()];
    let mut parent = vec![usize::MAX; g.id_bound()];
    let mut depth = vec![0usize; g.id_bound()];
    for s in g.vertices() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        depth[s] = 1;
        let mut deepest = s;
        let mut stack = vec![(s, 0usize)];
        while let Some(&mut (v, ref mut i)) = stack.last_mut() {
            let nb = g.neighbours(v);
            if *i < nb.len() {
                let w = nb[*i];
                *i += 1;
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = v;
                    depth[w] = depth[v] + 1;
                    if depth[w] > depth[deepest] {
                        deepest = w;
                    }
                    stack.push((w, 0));
                }
            } else {
                stack.pop();
            }
        }
        if depth[deepest] > best.len() {
            let mut path = vec![deepest];
            let mut cur = deepest;
            while parent[cur] != usize::MAX {
                cur = parent[cur];
                path.push(cur);
            }
            path.reverse();
            best = path;
        }
    }
    if best.is_empty() {
        return None;
    }
    Some(SignedPath::new(g, best).expect("DFS branch is a path"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedPathSearch {
    pub path: Option<SignedPath>,
    /// False when the expansion budget ran out before the search finished.
    pub complete: bool,
}

/// Longest induced path by backtracking, within `budget` node expansions.
pub fn longest_induced_path(g: &Graph, budget: u64) -> InducedPathSearch {
    let mut st = InducedSearch::new(g, budget, None, usize::MAX);
    for s in g.vertices() {
        st.grow(vec![s]);
        if st.exhausted || st.best.len() == g.vertex_count() {
            break;
        }
    }
    st.finish(g)
}

/// Searches for an induced `u`–`v` path of at least `min_len` edges in `g`,
/// returning the first one found (or the longest when none reaches `min_len`).
pub fn induced_path_between(
    g: &Graph,
    u: Vertex,
    v: Vertex,
    min_len: usize,
    budget: u64,
) -> InducedPathSearch {
    let mut st = InducedSearch::new(g, budget, Some(v), min_len + 1);
    st.grow(vec![u]);
    st.finish(g)
}

struct InducedSearch<'a> {
    g: &'a Graph,
    budget: u64,
    exhausted: bool,
    target: Option<Vertex>,
    /// Stop once a path has this many vertices.
    enough: usize,
    best: Vec<Vertex>,
    /// Number of path vertices adjacent to each vertex.
    touch: Vec<u32>,
    on_path: Vec<bool>,
}

impl<'a> InducedSearch<'a> {
    fn new(g: &'a Graph, budget: u64, target: Option<Vertex>, enough: usize) -> Self {
        InducedSearch {
            g,
            budget,
            exhausted: false,
            target,
            enough,
            best: Vec::new(),
            touch: vec![0; g.id_bound()],
            on_path: vec![false; g.id_bound()],
        }
    }

    fn done(&self) -> bool {
        self.exhausted || self.best.len() >= self.enough
    }

    fn push(&mut self, v: Vertex) {
        self.on_path[v] = true;
        for &w in self.g.neighbours(v) {
            self.touch[w] += 1;
        }
    }

    fn pop(&mut self, v: Vertex) {
        self.on_path[v] = false;
        for &w in self.g.neighbours(v) {
            self.touch[w] -= 1;
        }
    }

    fn grow(&mut self, mut path: Vec<Vertex>) {
        let first = path[0];
        self.push(first);
        self.extend(&mut path);
        self.pop(first);
    }

    fn extend(&mut self, path: &mut Vec<Vertex>) {
        if self.done() {
            return;
        }
        if self.budget == 0 {
            self.exhausted = true;
            return;
        }
        self.budget -= 1;
        let last = *path.last().unwrap();
        let record = match self.target {
            Some(t) => last == t,
            None => true,
        };
        if record && path.len() > self.best.len() {
            self.best = path.clone();
        }
        if self.target == Some(last) {
            return;
        }
        for &w in self.g.neighbours(last) {
            // w may only see `last` among path vertices.
            if self.on_path[w] || self.touch[w] != 1 {
                continue;
            }
            path.push(w);
            self.push(w);
            self.extend(path);
            self.pop(w);
            path.pop();
            if self.done() {
                return;
            }
        }
    }

    fn finish(self, g: &Graph) -> InducedPathSearch {
        let path = (!self.best.is_empty()).then(|| {
            debug_assert!(is_induced(g, &self.best));
            SignedPath::new(g, self.best).expect("search builds paths")
        });
        InducedPathSearch {
            path,
            complete: !self.exhausted,
        }
    }
}
