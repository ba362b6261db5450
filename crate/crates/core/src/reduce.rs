//! Colouring-preserving reductions: degree-2 removal, fan contraction,
//! L-removal, T-removal and bridge stripping, with an auditable trace.

use std::collections::hash_map::DefaultHasher;
use std::fmt::{self, Write as _};
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::colouring::{precolouring_extension, Colour, Colouring};
use crate::graph::{is_induced, EdgeId, Graph, Vertex};
use crate::pattern::{find_protected_fan, ProtectedFan};
use crate::structure::{
    find_minimal_l_type, find_minimal_t_type, h_family_bounds, s_family_bound, t_type_shape,
    LTypeReport, TTypeReport,
};
use crate::treedepth::{treedepth_exact, EliminationForest, TreedepthResult};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReduceError {
    #[error("reductions need r >= 3, got {0}")]
    RangeTooSmall(Colour),
    #[error("invalid fan: {0}")]
    InvalidFan(String),
    #[error("invalid report: {0}")]
    InvalidReport(String),
    #[error("trace step {0} could not be unwound")]
    UnwindFailed(usize),
    #[error("trace does not fit the graph: {0}")]
    InvalidTrace(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StepKind {
    Degree2Removal,
    FanContract(u8),
    LRemoval(u8),
    TRemoval(u8),
    BridgeStrip,
}

impl fmt::Display for StepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StepKind::Degree2Removal => write!(f, "degree2"),
            StepKind::FanContract(t) => write!(f, "fan{t}"),
            StepKind::LRemoval(t) => write!(f, "l{t}"),
            StepKind::TRemoval(t) => write!(f, "t{t}"),
            StepKind::BridgeStrip => write!(f, "bridges"),
        }
    }
}

/// One reduction. Applying it means: delete `removed_edges`, merge the pair
/// in `merged` into a fresh vertex, delete `removed`, then add `added`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionStep {
    pub kind: StepKind,
    /// Deleted vertices (the merged pair excluded).
    pub removed: Vec<Vertex>,
    /// Witness set, fan poles `[x, y, z]`, or the neighbours of a removed
    /// low-degree vertex.
    pub anchors: Vec<Vertex>,
    pub added: Vec<EdgeId>,
    /// `(a, b, w)`: `a` and `b` replaced by the fresh vertex `w`.
    pub merged: Option<(Vertex, Vertex, Vertex)>,
    pub removed_edges: Vec<EdgeId>,
    /// Pre-step edges incident to `removed`, kept for unwinding.
    pub local_edges: Vec<EdgeId>,
}

impl ReductionStep {
    fn new(kind: StepKind, g: &Graph, removed: Vec<Vertex>, anchors: Vec<Vertex>) -> Self {
        let mut local: Vec<EdgeId> = removed
            .iter()
            .flat_map(|&v| g.neighbours(v).iter().map(move |&w| EdgeId::new(v, w)))
            .collect();
        local.sort_unstable();
        local.dedup();
        ReductionStep {
            kind,
            removed,
            anchors,
            added: Vec::new(),
            merged: None,
            removed_edges: Vec::new(),
            local_edges: local,
        }
    }

    /// Applies the step in place.
    pub(crate) fn apply_in_place(&self, g: &mut Graph) -> Result<(), ReduceError> {
        let bad = |m: String| Err(ReduceError::InvalidTrace(m));
        for e in &self.removed_edges {
            if !g.remove_edge(e.u, e.v) {
                return bad(format!("missing edge {e}"));
            }
        }
        if let Some((a, b, w)) = self.merged {
            if !g.contains(a) || !g.contains(b) || a == b {
                return bad(format!("cannot merge {a} and {b}"));
            }
            let got = g.merge_in_place(a, b);
            if got != w {
                return bad(format!("merge produced {got}, expected {w}"));
            }
        }
        for &v in &self.removed {
            if !g.contains(v) {
                return bad(format!("vertex {v} already gone"));
            }
            g.remove_vertex(v);
        }
        for e in &self.added {
            if !g.contains(e.u) || !g.contains(e.v) || e.u == e.v {
                return bad(format!("cannot add {e}"));
            }
            g.insert_edge(e.u, e.v);
        }
        Ok(())
    }

    pub fn apply(&self, g: &Graph) -> Result<Graph, ReduceError> {
        let mut h = g.clone();
        self.apply_in_place(&mut h)?;
        Ok(h)
    }

    fn to_line(&self) -> String {
        let list = |vs: &[Vertex]| {
            vs.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        let edges = |es: &[EdgeId]| {
            es.iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        let mut s = format!(
            "{} removed=[{}] anchors=[{}] added=[{}]",
            self.kind,
            list(&self.removed),
            list(&self.anchors),
            edges(&self.added)
        );
        if let Some((a, b, w)) = self.merged {
            let _ = write!(s, " merged={a},{b}->{w}");
        }
        if !self.removed_edges.is_empty() {
            let _ = write!(s, " cut=[{}]", edges(&self.removed_edges));
        }
        s
    }

    /// Graph on the removed vertices and anchors, from the stored edges.
    fn gadget(&self, id_bound: usize) -> Graph {
        let mut keep: Vec<Vertex> = self.removed.clone();
        keep.extend(self.anchors.iter().copied());
        if let Some((a, b, _)) = self.merged {
            keep.extend([a, b]);
        }
        let edges: Vec<(Vertex, Vertex)> = self.local_edges.iter().map(|e| (e.u, e.v)).collect();
        let full = Graph::from_edges(id_bound, &edges);
        keep.sort_unstable();
        keep.dedup();
        full.induced_subgraph(&keep)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTrace {
    pub initial_hash: u64,
    #[serde(skip)]
    pub initial: Graph,
    pub steps: Vec<ReductionStep>,
    #[serde(skip)]
    pub final_graph: Graph,
}

pub fn graph_hash(g: &Graph) -> u64 {
    let mut h = DefaultHasher::new();
    g.hash(&mut h);
    h.finish()
}

impl ReductionTrace {
    pub fn start(g: &Graph) -> Self {
        ReductionTrace {
            initial_hash: graph_hash(g),
            initial: g.clone(),
            steps: Vec::new(),
            final_graph: g.clone(),
        }
    }

    pub(crate) fn push(&mut self, step: ReductionStep) {
        step.apply_in_place(&mut self.final_graph)
            .expect("freshly built step applies");
        self.steps.push(step);
    }

    fn extend(&mut self, steps: Vec<ReductionStep>) {
        for s in steps {
            self.push(s);
        }
    }

    /// Re-applies every step to the initial graph.
    pub fn replay(&self) -> Result<Graph, ReduceError> {
        let mut g = self.initial.clone();
        for s in &self.steps {
            s.apply_in_place(&mut g)?;
        }
        Ok(g)
    }

    pub fn count(&self, pred: impl Fn(StepKind) -> bool) -> usize {
        self.steps.iter().filter(|s| pred(s.kind)).count()
    }

    /// One step per line.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "trace initial={:016x} steps={}\n",
            self.initial_hash,
            self.steps.len()
        );
        for s in &self.steps {
            out.push_str(&s.to_line());
            out.push('\n');
        }
        out
    }

    /// Turns an r-colouring of the final graph into one of the initial graph
    /// by undoing the steps in reverse order.
    pub fn unwind(&self, colouring: &Colouring, r: Colour) -> Result<Colouring, ReduceError> {
        let mut col = colouring.clone();
        for (i, step) in self.steps.iter().enumerate().rev() {
            unwind_step(step, &mut col, r).ok_or(ReduceError::UnwindFailed(i))?;
        }
        Ok(col)
    }
}

fn unwind_step(step: &ReductionStep, col: &mut Colouring, r: Colour) -> Option<()> {
    let bound = step
        .local_edges
        .iter()
        .map(|e| e.v + 1)
        .chain(step.removed.iter().map(|v| v + 1))
        .chain(step.merged.map(|(_, _, w)| w + 1))
        .max()
        .unwrap_or(0);
    if let Some((a, b, w)) = step.merged {
        let c = col.get(w)?;
        col.set(a, c);
        col.set(b, c);
    }
    match step.kind {
        StepKind::Degree2Removal => {
            let v = step.removed[0];
            let used: Vec<Colour> = step.anchors.iter().filter_map(|&w| col.get(w)).collect();
            let c = (1..=r).find(|c| !used.contains(c))?;
            col.set(v, c);
        }
        StepKind::BridgeStrip => {
            // Each bridge joins two components of the stripped graph; swap
            // colour names inside one side whenever the bridge clashes.
            let groups = bridge_groups(step);
            let mut fixed = vec![false; groups.len()];
            let group_of = |v: Vertex| groups.iter().position(|g| g.binary_search(&v).is_ok());
            let mut order = Vec::new();
            for start in 0..groups.len() {
                if fixed[start] {
                    continue;
                }
                fixed[start] = true;
                order.push(start);
                let mut head = order.len() - 1;
                while head < order.len() {
                    let gi = order[head];
                    head += 1;
                    for e in &step.removed_edges {
                        let (gu, gv) = (group_of(e.u)?, group_of(e.v)?);
                        let (inner, outer, og) = if gu == gi {
                            (e.u, e.v, gv)
                        } else if gv == gi {
                            (e.v, e.u, gu)
                        } else {
                            continue;
                        };
                        if fixed[og] {
                            continue;
                        }
                        fixed[og] = true;
                        let ci = col.get(inner)?;
                        if col.get(outer)? == ci {
                            let other = if ci == 1 { 2 } else { 1 };
                            col.swap_on(&groups[og], ci, other);
                        }
                        order.push(og);
                    }
                }
            }
        }
        _ => {
            let gadget = step.gadget(bound);
            let mut anchors: Vec<Vertex> = step.anchors.clone();
            if let Some((a, b, _)) = step.merged {
                anchors.extend([a, b]);
            }
            anchors.sort_unstable();
            anchors.dedup();
            let fixed: Vec<(Vertex, Colour)> = anchors
                .iter()
                .filter(|&&v| gadget.contains(v))
                .map(|&v| col.get(v).map(|c| (v, c)))
                .collect::<Option<_>>()?;
            let forest = gadget_forest(&gadget);
            let ext = precolouring_extension(&gadget, &forest, &fixed, r).ok()??;
            for &v in &step.removed {
                col.set(v, ext.get(v)?);
            }
        }
    }
    Some(())
}

fn bridge_groups(step: &ReductionStep) -> Vec<Vec<Vertex>> {
    // Bridge-strip steps store their components as `anchors` separated by
    // usize::MAX.
    step.anchors
        .split(|&v| v == usize::MAX)
        .filter(|g| !g.is_empty())
        .map(|g| g.to_vec())
        .collect()
}

fn gadget_forest(h: &Graph) -> EliminationForest {
    match treedepth_exact(h, h.vertex_count().max(1)) {
        TreedepthResult::Value(_, f) => f,
        TreedepthResult::ExceedsCap => unreachable!("cap is the vertex count"),
    }
}

fn require_r(r: Colour) -> Result<(), ReduceError> {
    if r < 3 {
        Err(ReduceError::RangeTooSmall(r))
    } else {
        Ok(())
    }
}

/// Exhaustively deletes vertices of degree at most two.
pub fn remove_degree2(g: &Graph, r: Colour) -> Result<(Graph, Vec<ReductionStep>), ReduceError> {
    require_r(r)?;
    let mut h = g.clone();
    let steps = degree2_in_place(&mut h);
    Ok((h, steps))
}

fn degree2_in_place(h: &mut Graph) -> Vec<ReductionStep> {
    let mut steps = Vec::new();
    let mut stack: Vec<Vertex> = h.vertices().filter(|&v| h.degree(v) <= 2).collect();
    stack.reverse();
    while let Some(v) = stack.pop() {
        if !h.contains(v) || h.degree(v) > 2 {
            continue;
        }
        let nbrs = h.neighbours(v).to_vec();
        let step = ReductionStep::new(StepKind::Degree2Removal, h, vec![v], nbrs.clone());
        step.apply_in_place(h).expect("vertex is present");
        steps.push(step);
        for w in nbrs.into_iter().rev() {
            if h.degree(w) <= 2 {
                stack.push(w);
            }
        }
    }
    steps
}

/// Contracts a protected fan of order `m + k + 2`.
///
/// With `r >= 4` the interior is deleted. With `r = 3` the poles `x, y` are
/// forced to differ (odd order: edge `xy` added) or to agree (even order:
/// `x, y` merged).
pub fn fan_contract(
    g: &Graph,
    fan: &ProtectedFan,
    r: Colour,
    m: usize,
    k: usize,
) -> Result<(Graph, ReductionStep), ReduceError> {
    require_r(r)?;
    let order = m + k + 2;
    if fan.order() != order {
        return Err(ReduceError::InvalidFan(format!(
            "order {} but m+k+2 = {order}",
            fan.order()
        )));
    }
    if order < 4 || !fan.validate(g) {
        return Err(ReduceError::InvalidFan(
            "not a protected fan of order >= 4".into(),
        ));
    }
    let (x, y) = fan.ends();
    let z = fan.centre;
    let interior = fan.interior().to_vec();
    let kind_type = if r >= 4 {
        1
    } else if order % 2 == 1 {
        2
    } else {
        3
    };
    let mut step = ReductionStep::new(StepKind::FanContract(kind_type), g, interior, vec![x, y, z]);
    match kind_type {
        2 => step.added.push(EdgeId::new(x, y)),
        3 => step.merged = Some((x, y, g.id_bound())),
        _ => {}
    }
    let h = step.apply(g)?;
    Ok((h, step))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Removal {
    NoInstance,
    Reduced(Graph, ReductionStep),
}

/// Removes an L-type subgraph by branching on whether its witnesses share a
/// colour.
pub fn l_remove(g: &Graph, rep: &LTypeReport, r: Colour) -> Result<Removal, ReduceError> {
    require_r(r)?;
    check_report(g, &rep.t)?;
    if rep.t.witness.len() != 2 {
        return Err(ReduceError::InvalidReport(
            "L-type witness set must have size 2".into(),
        ));
    }
    let (u, v) = (rep.t.witness[0], rep.t.witness[1]);
    let path_ok = rep.path.len() >= 2
        && {
            let ends = (rep.path[0], *rep.path.last().unwrap());
            ends == (u, v) || ends == (v, u)
        }
        && rep.path.len() > rep.length_bound
        && {
            let mut keep = rep.t.vertices.clone();
            keep.extend([u, v]);
            let h = g.induced_subgraph(&keep);
            crate::graph::is_path_in(&h, &rep.path) && is_induced(&h, &rep.path)
        };
    if !path_ok {
        return Err(ReduceError::InvalidReport(
            "witness path is not a long induced path".into(),
        ));
    }
    branch_remove(g, &rep.t, r, StepKind::LRemoval)
}

/// Removes a T-type subgraph. Witness sets of size one delete `C` after
/// checking that `G[C ∪ S]` is colourable.
pub fn t_remove(g: &Graph, rep: &TTypeReport, r: Colour) -> Result<Removal, ReduceError> {
    require_r(r)?;
    check_report(g, rep)?;
    if rep.witness.len() == 1 {
        let mut keep = rep.vertices.clone();
        keep.push(rep.witness[0]);
        let h = g.induced_subgraph(&keep);
        if precolouring_extension(&h, &gadget_forest(&h), &[], r)
            .expect("valid forest")
            .is_none()
        {
            return Ok(Removal::NoInstance);
        }
        let step = ReductionStep::new(
            StepKind::TRemoval(1),
            g,
            rep.vertices.clone(),
            rep.witness.clone(),
        );
        let out = step.apply(g)?;
        return Ok(Removal::Reduced(out, step));
    }
    branch_remove(g, rep, r, StepKind::TRemoval)
}

fn check_report(g: &Graph, rep: &TTypeReport) -> Result<(), ReduceError> {
    if !t_type_shape(g, &rep.vertices, &rep.witness) {
        return Err(ReduceError::InvalidReport(
            "C and S do not form a T-type shape".into(),
        ));
    }
    Ok(())
}

fn branch_remove(
    g: &Graph,
    rep: &TTypeReport,
    r: Colour,
    kind: fn(u8) -> StepKind,
) -> Result<Removal, ReduceError> {
    let (u, v) = (rep.witness[0], rep.witness[1]);
    let mut keep = rep.vertices.clone();
    keep.extend([u, v]);
    let h = g.induced_subgraph(&keep);
    let forest = gadget_forest(&h);
    let same = precolouring_extension(&h, &forest, &[(u, 1), (v, 1)], r)
        .expect("valid forest")
        .is_some();
    let diff = precolouring_extension(&h, &forest, &[(u, 1), (v, 2)], r)
        .expect("valid forest")
        .is_some();
    let adjacent = g.has_edge(u, v);
    let step = match (same, diff) {
        (false, false) => return Ok(Removal::NoInstance),
        (true, true) => ReductionStep::new(kind(1), g, rep.vertices.clone(), rep.witness.clone()),
        (false, true) => {
            let mut s = ReductionStep::new(kind(2), g, rep.vertices.clone(), rep.witness.clone());
            if !adjacent {
                s.added.push(EdgeId::new(u, v));
            }
            s
        }
        (true, false) => {
            if adjacent {
                return Ok(Removal::NoInstance);
            }
            let mut s = ReductionStep::new(kind(3), g, rep.vertices.clone(), rep.witness.clone());
            s.merged = Some((u, v, g.id_bound()));
            s
        }
    };
    let out = step.apply(g)?;
    Ok(Removal::Reduced(out, step))
}

/// Components of `G` minus all its bridges, with ids kept.
pub fn strip_bridges(g: &Graph) -> Vec<Graph> {
    let (h, _) = bridge_strip_step(g);
    h.connected_components()
        .iter()
        .map(|c| h.induced_subgraph(c))
        .collect()
}

/// Deletes every bridge as one trace step.
pub fn bridge_strip_step(g: &Graph) -> (Graph, Option<ReductionStep>) {
    let bridges: Vec<EdgeId> = g.bridges().into_iter().map(|b| b.edge).collect();
    if bridges.is_empty() {
        return (g.clone(), None);
    }
    let h = g.delete_edges(&bridges);
    let mut anchors = Vec::new();
    for comp in h.connected_components() {
        anchors.extend(comp);
        anchors.push(usize::MAX);
    }
    anchors.pop();
    let step = ReductionStep {
        kind: StepKind::BridgeStrip,
        removed: Vec::new(),
        anchors,
        added: Vec::new(),
        merged: None,
        removed_edges: bridges,
        local_edges: Vec::new(),
    };
    (h, Some(step))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Preprocessed {
    /// The input is not r-colourable; the trace leads to the refuting step.
    NoInstance(ReductionTrace),
    Reduced(ReductionTrace),
}

impl Preprocessed {
    pub fn trace(&self) -> &ReductionTrace {
        match self {
            Preprocessed::NoInstance(t) | Preprocessed::Reduced(t) => t,
        }
    }
}

/// Degree-2 removal, then fan contraction and L-removal alternated until no
/// protected fan of order `m + k + 2` and no L-type subgraph remains.
pub fn preprocess_h(g: &Graph, r: Colour, m: usize, k: usize) -> Result<Preprocessed, ReduceError> {
    require_r(r)?;
    if m == 0 || k == 0 {
        return Err(ReduceError::InvalidReport("m and k must be >= 1".into()));
    }
    let (c, length) = h_family_bounds(m, k);
    let mut trace = ReductionTrace::start(g);
    let mut h = g.clone();
    trace.extend(degree2_in_place(&mut h));
    loop {
        let mut changed = false;
        while let Some(fan) = find_protected_fan(&h, m + k + 2).expect("order >= 4") {
            let (_, step) = fan_contract(&h, &fan, r, m, k)?;
            step.apply_in_place(&mut h)?;
            trace.push(step);
            trace.extend(degree2_in_place(&mut h));
            changed = true;
        }
        if let Some(rep) = find_minimal_l_type(&h, c, length).expect("bounds are positive") {
            match l_remove(&h, &rep, r)? {
                Removal::NoInstance => return Ok(Preprocessed::NoInstance(trace)),
                Removal::Reduced(_, step) => {
                    step.apply_in_place(&mut h)?;
                    trace.push(step);
                    trace.extend(degree2_in_place(&mut h));
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    debug_assert_eq!(trace.final_graph, h);
    Ok(Preprocessed::Reduced(trace))
}

/// Exhaustive T-removal with treedepth bound `16(2k-1)(k-1)`. For `k = 1` the
/// bound is zero and nothing is removed.
pub fn preprocess_s(g: &Graph, r: Colour, k: usize) -> Result<Preprocessed, ReduceError> {
    require_r(r)?;
    if k == 0 {
        return Err(ReduceError::InvalidReport("k must be >= 1".into()));
    }
    let c = s_family_bound(k);
    let mut trace = ReductionTrace::start(g);
    if c == 0 {
        return Ok(Preprocessed::Reduced(trace));
    }
    let mut h = g.clone();
    while let Some(rep) = find_minimal_t_type(&h, c).expect("bound is positive") {
        match t_remove(&h, &rep, r)? {
            Removal::NoInstance => return Ok(Preprocessed::NoInstance(trace)),
            Removal::Reduced(_, step) => {
                step.apply_in_place(&mut h)?;
                trace.push(step);
            }
        }
    }
    Ok(Preprocessed::Reduced(trace))
}
