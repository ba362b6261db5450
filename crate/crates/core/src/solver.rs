//! End-to-end decision procedures for Colouring on the two pattern families
//! and for Stable Cut.

use std::collections::{BTreeMap, HashMap};
use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::colouring::dp::{solve_labelling, LabelProblem};
use crate::colouring::{
    brooks_colour, brute_force_decide, decide_small_r, list_colour_bounded_td, Colour, Colouring,
    ListAssignment,
};
use crate::graph::{Graph, Vertex};
use crate::pattern::protected_fan_interiors;
use crate::reduce::{
    bridge_strip_step, preprocess_h, preprocess_s, Preprocessed, ReduceError, ReductionTrace,
};
use crate::treedepth::{treedepth_exact, TreedepthResult};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph has fewer than 3 vertices")]
    TooSmall,
    #[error(transparent)]
    Reduce(#[from] ReduceError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolverConfig {
    pub cap: usize,
    /// Decide by brute force instead of reporting `CapExceeded`.
    pub fallback: bool,
    pub m: usize,
    pub k: usize,
    pub seed: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            cap: 25,
            fallback: false,
            m: 1,
            k: 2,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    Colouring { r: Colour, colours: Vec<Colour> },
    StableCut { vertices: Vec<Vertex> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostic {
    pub cap: usize,
    pub residual_vertices: usize,
    pub residual_edges: Vec<(Vertex, Vertex)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Yes(Certificate),
    No,
    CapExceeded(Diagnostic),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Decision {
    #[serde(flatten)]
    pub verdict: Verdict,
    pub steps: BTreeMap<String, usize>,
    pub residual_treedepth: Option<usize>,
    pub used_fallback: bool,
    pub wall_ms: f64,
    /// Reduction trace, one step per line.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<String>,
}

impl Decision {
    pub fn is_yes(&self) -> bool {
        matches!(self.verdict, Verdict::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        self.verdict == Verdict::No
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("decision serialises")
    }
}

struct Run {
    start: Instant,
    steps: BTreeMap<String, usize>,
    residual_td: Option<usize>,
    used_fallback: bool,
}

impl Run {
    fn new() -> Self {
        Run {
            start: Instant::now(),
            steps: BTreeMap::new(),
            residual_td: None,
            used_fallback: false,
        }
    }

    fn count_trace(&mut self, t: &ReductionTrace) {
        for s in &t.steps {
            *self.steps.entry(s.kind.to_string()).or_default() += 1;
        }
    }

    fn finish(self, verdict: Verdict) -> Decision {
        Decision {
            verdict,
            steps: self.steps,
            residual_treedepth: self.residual_td,
            used_fallback: self.used_fallback,
            wall_ms: self.start.elapsed().as_secs_f64() * 1e3,
            trace: None,
        }
    }
}

fn diagnostic(g: &Graph, cap: usize) -> Diagnostic {
    Diagnostic {
        cap,
        residual_vertices: g.vertex_count(),
        residual_edges: g.edges().map(|e| (e.u, e.v)).collect(),
    }
}

enum Residual {
    Colourable(Colouring),
    NotColourable,
    Cap(Diagnostic),
}

/// Decides r-colourability of a residual graph by treedepth DP, falling back
/// to brute force when allowed.
fn colour_residual(g: &Graph, r: Colour, cfg: &SolverConfig, run: &mut Run) -> Residual {
    match treedepth_exact(g, cfg.cap) {
        TreedepthResult::Value(d, forest) => {
            run.residual_td = Some(run.residual_td.map_or(d, |x| x.max(d)));
            let lists = ListAssignment::full(g, r);
            match list_colour_bounded_td(g, &forest, &lists).expect("forest from treedepth_exact") {
                Some(c) => Residual::Colourable(c),
                None => Residual::NotColourable,
            }
        }
        TreedepthResult::ExceedsCap if cfg.fallback => {
            run.used_fallback = true;
            match brute_force_decide(g, r) {
                Some(c) => Residual::Colourable(c),
                None => Residual::NotColourable,
            }
        }
        TreedepthResult::ExceedsCap => Residual::Cap(diagnostic(g, cfg.cap)),
    }
}

fn check_colouring_params(r: Colour, cfg: &SolverConfig) -> Result<(), SolverError> {
    if cfg.cap == 0 {
        return Err(SolverError::InvalidParams("cap must be positive".into()));
    }
    if r > 255 {
        return Err(SolverError::InvalidParams("r must be at most 255".into()));
    }
    Ok(())
}

fn small_r(g: &Graph, r: Colour, run: Run) -> Decision {
    let verdict = match decide_small_r(g, r) {
        Some(c) => yes_colouring(g, r, &c),
        None => Verdict::No,
    };
    run.finish(verdict)
}

fn yes_colouring(g: &Graph, r: Colour, c: &Colouring) -> Verdict {
    let mut colours = c.as_slice().to_vec();
    colours.resize(g.id_bound(), 0);
    Verdict::Yes(Certificate::Colouring { r, colours })
}

fn finish_colouring(
    g: &Graph,
    r: Colour,
    trace: &ReductionTrace,
    residual: Residual,
    run: Run,
) -> Decision {
    let verdict = match residual {
        Residual::NotColourable => Verdict::No,
        Residual::Cap(d) => Verdict::CapExceeded(d),
        Residual::Colourable(c) => {
            let full = trace.unwind(&c, r).expect("every reduction step unwinds");
            debug_assert!(full.is_proper_within(g, r));
            yes_colouring(g, r, &full)
        }
    };
    let mut d = run.finish(verdict);
    d.trace = Some(trace.to_text());
    d
}

/// Colouring for graphs excluding the H-graph with horizontal path `m` and
/// branches `1, k, k, k`.
#[allow(non_snake_case)]
pub fn solve_colouring_H(
    g: &Graph,
    r: Colour,
    cfg: &SolverConfig,
) -> Result<Decision, SolverError> {
    check_colouring_params(r, cfg)?;
    if cfg.m == 0 || cfg.k == 0 {
        return Err(SolverError::InvalidParams("m and k must be >= 1".into()));
    }
    let mut run = Run::new();
    if r <= 2 {
        return Ok(small_r(g, r, run));
    }
    let trace = match preprocess_h(g, r, cfg.m, cfg.k)? {
        Preprocessed::NoInstance(t) => {
            run.count_trace(&t);
            let mut d = run.finish(Verdict::No);
            d.trace = Some(t.to_text());
            return Ok(d);
        }
        Preprocessed::Reduced(t) => t,
    };
    run.count_trace(&trace);
    let residual = colour_residual(&trace.final_graph, r, cfg, &mut run);
    Ok(finish_colouring(g, r, &trace, residual, run))
}

/// Colouring for graphs excluding the subdivided star with branches
/// `1, k, k, k`.
#[allow(non_snake_case)]
pub fn solve_colouring_S(
    g: &Graph,
    r: Colour,
    cfg: &SolverConfig,
) -> Result<Decision, SolverError> {
    check_colouring_params(r, cfg)?;
    if cfg.k == 0 {
        return Err(SolverError::InvalidParams("k must be >= 1".into()));
    }
    let mut run = Run::new();
    if r <= 2 {
        return Ok(small_r(g, r, run));
    }
    let mut trace = match preprocess_s(g, r, cfg.k)? {
        Preprocessed::NoInstance(t) => {
            run.count_trace(&t);
            let mut d = run.finish(Verdict::No);
            d.trace = Some(t.to_text());
            return Ok(d);
        }
        Preprocessed::Reduced(t) => t,
    };
    if let (_, Some(step)) = bridge_strip_step(&trace.final_graph) {
        trace.push(step);
    }
    run.count_trace(&trace);
    let h = &trace.final_graph;
    let mut col = Colouring::new(h.id_bound());
    for comp in h.connected_components() {
        let part = h.induced_subgraph(&comp);
        let sub = if part.max_degree().unwrap_or(0) <= 3 {
            *run.steps.entry("brooks".into()).or_default() += 1;
            let c = brooks_colour(&part).expect("component is connected");
            if c.is_proper_within(&part, r) {
                Residual::Colourable(c)
            } else {
                // Only K_4 needs four colours here.
                Residual::NotColourable
            }
        } else {
            colour_residual(&part, r, cfg, &mut run)
        };
        match sub {
            Residual::Colourable(c) => {
                for &v in &comp {
                    col.set(v, c.get(v).expect("component coloured"));
                }
            }
            other => return Ok(finish_colouring(g, r, &trace, other, run)),
        }
    }
    Ok(finish_colouring(
        g,
        r,
        &trace,
        Residual::Colourable(col),
        run,
    ))
}

/// Checks a certificate against the graph it claims to solve.
pub fn verify_certificate(g: &Graph, d: &Decision) -> bool {
    match &d.verdict {
        Verdict::Yes(Certificate::Colouring { r, colours }) => {
            Colouring::from_vec(colours.clone()).is_proper_within(g, *r)
        }
        Verdict::Yes(Certificate::StableCut { vertices }) => is_stable_cut(g, vertices),
        _ => true,
    }
}

/// `cut` is a nonempty independent set of `g` and `g - cut` is disconnected.
pub fn is_stable_cut(g: &Graph, cut: &[Vertex]) -> bool {
    if cut.is_empty() || cut.iter().any(|&v| !g.contains(v)) {
        return false;
    }
    for (i, &a) in cut.iter().enumerate() {
        if cut[i + 1..].iter().any(|&b| b == a || g.has_edge(a, b)) {
            return false;
        }
    }
    g.components_avoiding(cut).len() >= 2
}

/// Exhaustive oracle: tries every independent set in increasing bitmask
/// order. Only for small graphs.
pub fn stable_cut_brute_force(g: &Graph) -> Option<Vec<Vertex>> {
    let vs = g.vertex_list();
    assert!(vs.len() < 30, "brute-force stable cut is exponential");
    let n = vs.len();
    let mut adj = vec![0u32; n];
    for (i, &v) in vs.iter().enumerate() {
        for (j, &w) in vs.iter().enumerate() {
            if g.has_edge(v, w) {
                adj[i] |= 1 << j;
            }
        }
    }
    let all = if n == 0 { 0 } else { (1u32 << n) - 1 };
    for mask in 1..=all {
        let independent = (0..n).all(|i| mask & (1 << i) == 0 || adj[i] & mask == 0);
        if !independent {
            continue;
        }
        let rest = all & !mask;
        if rest == 0 {
            continue;
        }
        // Flood from the lowest remaining vertex.
        let mut seen = rest & rest.wrapping_neg();
        loop {
            let mut next = seen;
            for i in 0..n {
                if seen & (1 << i) != 0 {
                    next |= adj[i] & rest;
                }
            }
            if next == seen {
                break;
            }
            seen = next;
        }
        if seen != rest {
            return Some(
                (0..n)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| vs[i])
                    .collect(),
            );
        }
    }
    None
}

/// Stable Cut: is there an independent set whose removal disconnects `g`?
pub fn solve_stable_cut(g: &Graph, cfg: &SolverConfig) -> Result<Decision, SolverError> {
    if cfg.cap == 0 {
        return Err(SolverError::InvalidParams("cap must be positive".into()));
    }
    if g.vertex_count() < 3 {
        return Err(SolverError::TooSmall);
    }
    if !g.is_connected() {
        return Err(SolverError::NotConnected);
    }
    let mut run = Run::new();
    let mut search = StableCutSearch {
        cfg,
        memo: HashMap::new(),
        run: &mut run,
    };
    let out = search.solve(g);
    let verdict = match out {
        Ok(Some(mut cut)) => {
            cut.sort_unstable();
            debug_assert!(is_stable_cut(g, &cut));
            Verdict::Yes(Certificate::StableCut { vertices: cut })
        }
        Ok(None) => Verdict::No,
        Err(d) => Verdict::CapExceeded(d),
    };
    Ok(run.finish(verdict))
}

struct StableCutSearch<'a> {
    cfg: &'a SolverConfig,
    memo: HashMap<Vec<Vertex>, Option<Vec<Vertex>>>,
    run: &'a mut Run,
}

impl StableCutSearch<'_> {
    /// `g` is connected.
    fn solve(&mut self, g: &Graph) -> Result<Option<Vec<Vertex>>, Diagnostic> {
        let key = g.vertex_list();
        if let Some(hit) = self.memo.get(&key) {
            return Ok(hit.clone());
        }
        let out = self.solve_uncached(g)?;
        self.memo.insert(key, out.clone());
        Ok(out)
    }

    fn solve_uncached(&mut self, g: &Graph) -> Result<Option<Vec<Vertex>>, Diagnostic> {
        if g.vertex_count() < 3 {
            return Ok(None);
        }
        if let Some(&v) = g.cut_vertices().first() {
            *self.run.steps.entry("cut_vertex".into()).or_default() += 1;
            return Ok(Some(vec![v]));
        }
        let vs = g.vertex_list();
        let mut adjacent_cut = None;
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                let comps = g.components_avoiding(&[u, v]);
                if comps.len() < 2 {
                    continue;
                }
                if !g.has_edge(u, v) {
                    *self.run.steps.entry("two_cutset".into()).or_default() += 1;
                    return Ok(Some(vec![u, v]));
                }
                if adjacent_cut.is_none() {
                    adjacent_cut = Some((u, v, comps));
                }
            }
        }
        if let Some((u, v, comps)) = adjacent_cut {
            // A clique cutset: some piece G[C ∪ {u, v}] has a stable cut iff G does.
            *self.run.steps.entry("clique_cutset".into()).or_default() += 1;
            for mut c in comps {
                c.extend([u, v]);
                let piece = g.induced_subgraph(&c);
                if let Some(cut) = self.solve(&piece)? {
                    return Ok(Some(cut));
                }
            }
            return Ok(None);
        }
        self.bounded_td(g)
    }

    /// 3-connected case: labels I (cut), A, B with no A-B edges and no I-I
    /// edges, both sides nonempty. Protected fan interiors never lie in a
    /// minimal stable cut, so they are barred from I.
    fn bounded_td(&mut self, g: &Graph) -> Result<Option<Vec<Vertex>>, Diagnostic> {
        let forest = match treedepth_exact(g, self.cfg.cap) {
            TreedepthResult::Value(d, f) => {
                self.run.residual_td = Some(self.run.residual_td.map_or(d, |x| x.max(d)));
                f
            }
            TreedepthResult::ExceedsCap if self.cfg.fallback => {
                self.run.used_fallback = true;
                return Ok(stable_cut_brute_force(g));
            }
            TreedepthResult::ExceedsCap => return Err(diagnostic(g, self.cfg.cap)),
        };
        const I: u8 = 0;
        const A: u8 = 1;
        const B: u8 = 2;
        let mut lists = vec![Vec::new(); g.id_bound()];
        for v in g.vertices() {
            lists[v] = vec![I, A, B];
        }
        let interiors = protected_fan_interiors(g);
        *self.run.steps.entry("fan_interior".into()).or_default() += interiors.len();
        for v in interiors {
            lists[v] = vec![A, B];
        }
        let problem = LabelProblem {
            graph: g,
            forest: &forest,
            lists: &lists,
            compatible: &|a, b| !(a == I && b == I) && !(a == A && b == B) && !(a == B && b == A),
            flag: &|l| match l {
                A => 1,
                B => 2,
                _ => 0,
            },
            accept: &|m| m == 3,
        };
        Ok(solve_labelling(&problem)
            .map(|labels| g.vertices().filter(|&v| labels[v] == Some(I)).collect()))
    }
}
