//! Labelling DP over an elimination forest.
//!
//! Each vertex picks a label from its candidate list; adjacent vertices must
//! carry compatible labels. Every edge joins an ancestor and a descendant, so
//! a subtree only interacts with the labels of its boundary ancestors (those
//! with a neighbour inside the subtree). Subtree results are memoised on the
//! boundary labels.
//!
//! Besides feasibility the DP tracks a small "summary" bitmask, the OR of a
//! per-label flag over all vertices, so callers can impose global conditions
//! such as "label A and label B both occur".

use std::collections::HashMap;

use crate::graph::{Graph, Vertex};
use crate::treedepth::EliminationForest;

/// Set of reachable summary masks, as a bitset over `0..8`.
type MaskSet = u8;

pub(crate) struct LabelProblem<'a> {
    pub graph: &'a Graph,
    pub forest: &'a EliminationForest,
    /// Candidate labels, indexed by vertex id.
    pub lists: &'a [Vec<u8>],
    pub compatible: &'a dyn Fn(u8, u8) -> bool,
    /// Summary bits (`< 8`) contributed by a label.
    pub flag: &'a dyn Fn(u8) -> u8,
    pub accept: &'a dyn Fn(u8) -> bool,
}

struct Dp<'p, 'a> {
    p: &'p LabelProblem<'a>,
    children: Vec<Vec<Vertex>>,
    boundary: Vec<Vec<Vertex>>,
    /// Earlier (ancestor) neighbours of each vertex.
    up: Vec<Vec<Vertex>>,
    label: Vec<Option<u8>>,
    memo: Vec<HashMap<Vec<u8>, MaskSet>>,
}

fn or_combine(a: MaskSet, b: MaskSet) -> MaskSet {
    let mut out = 0;
    for x in 0..8 {
        if a & (1 << x) == 0 {
            continue;
        }
        for y in 0..8 {
            if b & (1 << y) != 0 {
                out |= 1 << (x | y);
            }
        }
    }
    out
}

impl<'p, 'a> Dp<'p, 'a> {
    fn new(p: &'p LabelProblem<'a>) -> Self {
        let g = p.graph;
        let f = p.forest;
        let n = f.id_bound().max(g.id_bound());
        let children = f.children();
        let mut up = vec![Vec::new(); n];
        for v in g.vertices() {
            let dv = f.depth(v);
            up[v] = g
                .neighbours(v)
                .iter()
                .copied()
                .filter(|&w| f.depth(w) < dv)
                .collect();
        }
        // Boundaries bottom-up, deepest vertices first.
        let mut order: Vec<Vertex> = g.vertex_list();
        order.sort_by_key(|&v| std::cmp::Reverse(f.depth(v)));
        let mut boundary: Vec<Vec<Vertex>> = vec![Vec::new(); n];
        for &v in &order {
            let mut b: Vec<Vertex> = up[v].clone();
            for &c in &children[v] {
                b.extend(boundary[c].iter().copied().filter(|&x| x != v));
            }
            b.sort_by_key(|&x| (f.depth(x), x));
            b.dedup();
            boundary[v] = b;
        }
        Dp {
            p,
            children,
            boundary,
            up,
            label: vec![None; n],
            memo: vec![HashMap::new(); n],
        }
    }

    fn key(&self, v: Vertex) -> Vec<u8> {
        self.boundary[v]
            .iter()
            .map(|&a| self.label[a].expect("ancestor labelled"))
            .collect()
    }

    fn fits(&self, v: Vertex, l: u8) -> bool {
        self.up[v]
            .iter()
            .all(|&a| (self.p.compatible)(self.label[a].expect("ancestor labelled"), l))
    }

    /// Reachable summaries of the subtree at `v` given the ancestor labels.
    fn solve(&mut self, v: Vertex) -> MaskSet {
        let key = self.key(v);
        if let Some(&m) = self.memo[v].get(&key) {
            return m;
        }
        let mut result: MaskSet = 0;
        let lists = self.p.lists;
        for &l in &lists[v] {
            if !self.fits(v, l) {
                continue;
            }
            self.label[v] = Some(l);
            let mut acc: MaskSet = 1 << (self.p.flag)(l);
            for i in 0..self.children[v].len() {
                let c = self.children[v][i];
                acc = or_combine(acc, self.solve(c));
                if acc == 0 {
                    break;
                }
            }
            self.label[v] = None;
            result |= acc;
            if result == 0xff {
                break;
            }
        }
        self.memo[v].insert(key, result);
        result
    }

    /// Picks summary targets for `nodes` whose OR, together with `base`,
    /// equals `target`. Returns one mask per node.
    fn split(&mut self, base: u8, nodes: &[Vertex], target: u8) -> Option<Vec<u8>> {
        let sets: Vec<MaskSet> = nodes.iter().map(|&c| self.solve(c)).collect();
        // reach[i]: summaries reachable from base and the first i nodes.
        let mut reach = vec![1u8 << base];
        for &s in &sets {
            let last = *reach.last().unwrap();
            reach.push(or_combine(last, s));
        }
        if reach.last().unwrap() & (1 << target) == 0 {
            return None;
        }
        let mut out = vec![0u8; nodes.len()];
        let mut t = target;
        for i in (0..nodes.len()).rev() {
            let (m, prev) = (0..8u8)
                .flat_map(|m| (0..8u8).map(move |q| (m, q)))
                .find(|&(m, q)| sets[i] & (1 << m) != 0 && reach[i] & (1 << q) != 0 && (m | q) == t)
                .expect("reachable summary decomposes");
            out[i] = m;
            t = prev;
        }
        Some(out)
    }

    /// Fixes labels in the subtree of `v` realising summary `target`.
    fn build(&mut self, v: Vertex, target: u8, out: &mut Vec<(Vertex, u8)>) {
        let lists = self.p.lists;
        for &l in &lists[v] {
            let flag = (self.p.flag)(l);
            if flag & !target != 0 || !self.fits(v, l) {
                continue;
            }
            self.label[v] = Some(l);
            let kids = self.children[v].clone();
            if let Some(parts) = self.split(flag, &kids, target) {
                out.push((v, l));
                for (c, m) in kids.into_iter().zip(parts) {
                    self.build(c, m, out);
                }
                return;
            }
            self.label[v] = None;
        }
        unreachable!("summary {target} was reported reachable at {v}");
    }
}

/// Returns a labelling (indexed by vertex id) or `None` if none satisfies the
/// constraints and the global acceptance test.
pub(crate) fn solve_labelling(p: &LabelProblem<'_>) -> Option<Vec<Option<u8>>> {
    let mut dp = Dp::new(p);
    let roots = p.forest.roots().to_vec();
    let mut reach: MaskSet = 1;
    for &r in &roots {
        reach = or_combine(reach, dp.solve(r));
        if reach == 0 {
            return None;
        }
    }
    let target = (0..8u8).find(|&m| reach & (1 << m) != 0 && (p.accept)(m))?;
    let parts = dp.split(0, &roots, target)?;
    let mut out = Vec::new();
    for (r, m) in roots.into_iter().zip(parts) {
        dp.build(r, m, &mut out);
    }
    let mut labels = vec![None; p.graph.id_bound()];
    for (v, l) in out {
        labels[v] = Some(l);
    }
    Some(labels)
}
