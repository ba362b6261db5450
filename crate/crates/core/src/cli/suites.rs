//! Property suites behind `verify-suite`. Each check draws seeded cases,
//! runs them in parallel and tallies failures; ground truth comes from an
//! [`Oracles`] implementation so tests can plug in their own.

use std::collections::BTreeMap;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::gen::{
    enumerate_connected, gen_spec_free, path_with_jumps, plant_fan, planted_long_star,
    random_connected, random_graph, random_subcubic_connected, rng_from,
};
use crate::colouring::{brooks_colour, brute_force_decide, Colour};
use crate::graph::{Graph, SignedPath, Vertex};
use crate::pattern::{
    contains_subgraph, find_embedding, find_protected_fan, lift_star_centre, validate_map,
    Embedding, PatternSpec,
};
use crate::reduce::{
    bridge_strip_step, fan_contract, l_remove, remove_degree2, t_remove, Removal, StepKind,
};
use crate::solver::{
    solve_colouring_H, solve_colouring_S, solve_stable_cut, stable_cut_brute_force, Certificate,
    Decision, SolverConfig, Verdict,
};
use crate::structure::{
    find_minimal_l_type, find_minimal_t_type, h_family_bounds, is_l_type, is_t_type,
    s_family_bound, JumpContext, Sign, TTypeReport,
};
use crate::treedepth::{treedepth_exact, TreedepthResult};

/// Ground truth for the checks.
pub trait Oracles: Sync {
    fn colourable(&self, g: &Graph, r: Colour) -> bool;
    fn has_stable_cut(&self, g: &Graph) -> bool;
    fn contains(&self, host: &Graph, pattern: &Graph) -> bool;
    fn treedepth(&self, g: &Graph) -> usize;
    fn is_embedding(&self, host: &Graph, pattern: &Graph, map: &[Vertex]) -> bool;
}

/// Oracles built from the library's own brute-force routines.
pub struct LibraryOracles;

impl Oracles for LibraryOracles {
    fn colourable(&self, g: &Graph, r: Colour) -> bool {
        brute_force_decide(g, r).is_some()
    }

    fn has_stable_cut(&self, g: &Graph) -> bool {
        stable_cut_brute_force(g).is_some()
    }

    fn contains(&self, host: &Graph, pattern: &Graph) -> bool {
        find_embedding(host, pattern).is_some()
    }

    fn treedepth(&self, g: &Graph) -> usize {
        match treedepth_exact(g, g.vertex_count().max(1)) {
            TreedepthResult::Value(d, _) => d,
            TreedepthResult::ExceedsCap => unreachable!("cap is the vertex count"),
        }
    }

    fn is_embedding(&self, host: &Graph, pattern: &Graph, map: &[Vertex]) -> bool {
        validate_map(host, pattern, map)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub target: usize,
    pub cases: usize,
    pub failures: usize,
    pub skipped: usize,
    /// Free-form counters, e.g. how often each reduction type occurred.
    pub notes: BTreeMap<String, usize>,
    pub first_failure: Option<String>,
    pub seconds: f64,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.cases >= self.target
    }

    pub fn summary(&self) -> String {
        let notes: Vec<String> = self.notes.iter().map(|(k, v)| format!("{k}={v}")).collect();
        format!(
            "{} {}: {}/{} cases, {} failures, {} skipped, {:.1}s{}{}",
            if self.passed() { "PASS" } else { "FAIL" },
            self.name,
            self.cases,
            self.target,
            self.failures,
            self.skipped,
            self.seconds,
            if notes.is_empty() {
                String::new()
            } else {
                format!(" [{}]", notes.join(" "))
            },
            self.first_failure
                .as_ref()
                .map_or(String::new(), |f| format!(" first failure: {f}")),
        )
    }
}

pub enum Outcome {
    Pass(Vec<&'static str>),
    Fail(String),
    Skip,
}

fn pass() -> Outcome {
    Outcome::Pass(Vec::new())
}

fn pass_with(note: &'static str) -> Outcome {
    Outcome::Pass(vec![note])
}

fn case_seed(seed: u64, i: u64) -> u64 {
    seed ^ (i.wrapping_add(1)).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

struct Tally {
    res: CheckResult,
}

impl Tally {
    fn new(name: &str, target: usize) -> Self {
        Tally {
            res: CheckResult {
                name: name.to_string(),
                target,
                cases: 0,
                failures: 0,
                skipped: 0,
                notes: BTreeMap::new(),
                first_failure: None,
                seconds: 0.0,
            },
        }
    }

    fn add(&mut self, o: Outcome) {
        match o {
            Outcome::Pass(notes) => {
                self.res.cases += 1;
                for n in notes {
                    *self.res.notes.entry(n.to_string()).or_default() += 1;
                }
            }
            Outcome::Fail(msg) => {
                self.res.cases += 1;
                self.res.failures += 1;
                self.res.first_failure.get_or_insert(msg);
            }
            Outcome::Skip => self.res.skipped += 1,
        }
    }
}

/// Draws seeded cases until `target` of them are applicable (not skipped).
pub fn run_cases<F>(name: &str, target: usize, seed: u64, f: F) -> CheckResult
where
    F: Fn(u64) -> Outcome + Sync,
{
    let start = Instant::now();
    let mut t = Tally::new(name, target);
    let max_attempts = (target as u64).saturating_mul(100).max(1000);
    let mut next = 0u64;
    const BATCH: u64 = 128;
    while t.res.cases < target && next < max_attempts {
        let outs: Vec<Outcome> = (next..next + BATCH)
            .into_par_iter()
            .map(|i| f(case_seed(seed, i)))
            .collect();
        next += BATCH;
        for o in outs {
            if t.res.cases >= target {
                break;
            }
            t.add(o);
        }
    }
    t.res.seconds = start.elapsed().as_secs_f64();
    t.res
}

/// Runs `f` on every item.
pub fn run_list<T, F>(name: &str, items: &[T], f: F) -> CheckResult
where
    T: Sync,
    F: Fn(&T) -> Outcome + Sync,
{
    let start = Instant::now();
    let mut t = Tally::new(name, items.len());
    let outs: Vec<Outcome> = items.par_iter().map(&f).collect();
    for o in outs {
        t.add(o);
    }
    t.res.target = t.res.cases;
    t.res.seconds = start.elapsed().as_secs_f64();
    t.res
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Family {
    H,
    S,
}

impl Family {
    /// The pattern with `m = 1, k = 2`.
    pub fn spec(self) -> PatternSpec {
        match self {
            Family::H => PatternSpec::h1kkk(1, 2),
            Family::S => PatternSpec::s1kkk(2),
        }
    }

    fn solve(self, g: &Graph, r: Colour) -> Decision {
        let cfg = SolverConfig {
            m: 1,
            k: 2,
            ..SolverConfig::default()
        };
        match self {
            Family::H => solve_colouring_H(g, r, &cfg),
            Family::S => solve_colouring_S(g, r, &cfg),
        }
        .expect("valid parameters")
    }
}

fn colouring_valid(g: &Graph, r: Colour, colours: &[Colour]) -> bool {
    let c = |v: Vertex| colours.get(v).copied().unwrap_or(0);
    g.vertices().all(|v| (1..=r).contains(&c(v))) && g.edges().all(|e| c(e.u) != c(e.v))
}

fn stable_cut_valid(g: &Graph, cut: &[Vertex]) -> bool {
    !cut.is_empty()
        && cut.iter().all(|&v| g.contains(v))
        && cut
            .iter()
            .all(|&a| cut.iter().all(|&b| a == b || !g.has_edge(a, b)))
        && g.components_avoiding(cut).len() >= 2
}

fn check_colouring_decision(g: &Graph, r: Colour, fam: Family, o: &dyn Oracles) -> Outcome {
    let d = fam.solve(g, r);
    let truth = o.colourable(g, r);
    match &d.verdict {
        Verdict::Yes(Certificate::Colouring { r: rr, colours }) => {
            if !truth {
                Outcome::Fail(format!("{fam:?} r={r}: solver Yes, oracle No on {g:?}"))
            } else if *rr != r || !colouring_valid(g, r, colours) {
                Outcome::Fail(format!("{fam:?} r={r}: invalid certificate on {g:?}"))
            } else {
                pass_with("yes")
            }
        }
        Verdict::No if truth => {
            Outcome::Fail(format!("{fam:?} r={r}: solver No, oracle Yes on {g:?}"))
        }
        Verdict::No => pass_with("no"),
        other => Outcome::Fail(format!("{fam:?} r={r}: unexpected verdict {other:?}")),
    }
}

/// Solver against oracle on every connected graph with up to `max_n`
/// vertices, both families, `r ∈ {3, 4}`. Graphs this small cannot contain
/// either pattern.
pub fn oracle_exhaustive(max_n: usize, o: &dyn Oracles) -> CheckResult {
    let mut items = Vec::new();
    for n in 1..=max_n {
        for g in enumerate_connected(n) {
            for fam in [Family::H, Family::S] {
                for r in [3, 4] {
                    items.push((g.clone(), fam, r));
                }
            }
        }
    }
    run_list(
        &format!("oracle-exhaustive-n<={max_n}"),
        &items,
        |(g, fam, r)| check_colouring_decision(g, *r, *fam, o),
    )
}

/// Solver against oracle on seeded random pattern-free graphs, `n <= 14`.
pub fn oracle_random(
    fam: Family,
    r: Colour,
    target: usize,
    seed: u64,
    o: &dyn Oracles,
) -> CheckResult {
    let spec = fam.spec();
    let pattern = spec.instantiate().expect("valid spec").graph;
    run_cases(&format!("oracle-{fam:?}-r{r}"), target, seed, |s| {
        let mut rng = rng_from(s);
        let n = rng.gen_range(1..=14);
        let density = rng.gen_range(0.1..0.7);
        let g = gen_spec_free(&spec, n, density, s)
            .expect("valid spec")
            .graph;
        if o.contains(&g, &pattern) {
            return Outcome::Fail(format!("generator output contains {spec}: {g:?}"));
        }
        check_colouring_decision(&g, r, fam, o)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ReductionKind {
    Degree2,
    /// Fan contraction of the given type (1: delete interior, 2: add an
    /// edge, 3: merge).
    Fan(u8),
    LRemoval,
    TRemoval,
    BridgeStrip,
}

impl ReductionKind {
    pub const ALL: [ReductionKind; 7] = [
        ReductionKind::Degree2,
        ReductionKind::Fan(1),
        ReductionKind::Fan(2),
        ReductionKind::Fan(3),
        ReductionKind::LRemoval,
        ReductionKind::TRemoval,
        ReductionKind::BridgeStrip,
    ];

    pub fn name(self) -> String {
        match self {
            ReductionKind::Degree2 => "degree2".into(),
            ReductionKind::Fan(t) => format!("fan{t}"),
            ReductionKind::LRemoval => "l-removal".into(),
            ReductionKind::TRemoval => "t-removal".into(),
            ReductionKind::BridgeStrip => "bridge-strip".into(),
        }
    }
}

fn step_note(kind: StepKind) -> &'static str {
    match kind {
        StepKind::LRemoval(1) | StepKind::TRemoval(1) => "type1",
        StepKind::LRemoval(2) | StepKind::TRemoval(2) => "type2",
        StepKind::LRemoval(_) | StepKind::TRemoval(_) => "type3",
        _ => "other",
    }
}

/// Before/after comparison for one reduction: colourability must agree and
/// the output must stay pattern-free.
fn compare(
    g: &Graph,
    after: &[Graph],
    r: Colour,
    pattern: &Graph,
    o: &dyn Oracles,
    note: &'static str,
) -> Outcome {
    let before = o.colourable(g, r);
    let now = after.iter().all(|h| o.colourable(h, r));
    if before != now {
        return Outcome::Fail(format!(
            "{note}: colourability changed {before} -> {now} at r={r} on {g:?}"
        ));
    }
    if after.iter().any(|h| o.contains(h, pattern)) {
        return Outcome::Fail(format!(
            "{note}: reduced graph contains the pattern; input {g:?}"
        ));
    }
    pass_with(note)
}

pub fn reduction_safety(
    kind: ReductionKind,
    target: usize,
    seed: u64,
    o: &dyn Oracles,
) -> CheckResult {
    run_cases(&format!("reduction-{}", kind.name()), target, seed, |s| {
        reduction_case(kind, s, o)
    })
}

fn reduction_case(kind: ReductionKind, s: u64, o: &dyn Oracles) -> Outcome {
    let mut rng = rng_from(s);
    let r: Colour = if rng.gen_bool(0.5) { 3 } else { 4 };
    let density = rng.gen_range(0.1..0.6);
    match kind {
        ReductionKind::Degree2 => {
            let fam = if rng.gen_bool(0.5) {
                Family::H
            } else {
                Family::S
            };
            let spec = fam.spec();
            let n = rng.gen_range(4..=14);
            let g = gen_spec_free(&spec, n, density, s)
                .expect("valid spec")
                .graph;
            if g.min_degree().is_none_or(|d| d > 2) {
                return Outcome::Skip;
            }
            let (h, _) = remove_degree2(&g, r).expect("r >= 3");
            compare(
                &g,
                &[h],
                r,
                &spec.instantiate().unwrap().graph,
                o,
                "applied",
            )
        }
        ReductionKind::Fan(ty) => {
            let (m, k) = match ty {
                1 => [(1, 1), (1, 2), (2, 2)][rng.gen_range(0..3)],
                2 => (1, 2),
                _ => [(1, 1), (2, 2)][rng.gen_range(0..2)],
            };
            let r: Colour = if ty == 1 { 4 } else { 3 };
            let order = m + k + 2;
            let interior = order - 2;
            let spec = PatternSpec::h1kkk(m, k);
            let pattern = spec.instantiate().unwrap().graph;
            let nb = rng.gen_range(3..=14 - interior);
            let base = gen_spec_free(&spec, nb, density, s)
                .expect("valid spec")
                .graph;
            let mut pick: Vec<usize> = (0..nb).collect();
            pick.shuffle(&mut rng);
            let g = plant_fan(&base, pick[0], pick[1], pick[2], interior);
            if o.contains(&g, &pattern) {
                return Outcome::Skip;
            }
            let Some(fan) = find_protected_fan(&g, order).expect("order >= 3") else {
                return Outcome::Fail(format!("planted fan of order {order} not found in {g:?}"));
            };
            let (h, step) = match fan_contract(&g, &fan, r, m, k) {
                Ok(x) => x,
                Err(e) => return Outcome::Fail(format!("fan_contract failed: {e}")),
            };
            if step.kind != StepKind::FanContract(ty) {
                return Outcome::Fail(format!("expected fan type {ty}, got {:?}", step.kind));
            }
            compare(&g, &[h], r, &pattern, o, "applied")
        }
        ReductionKind::LRemoval => {
            let spec = Family::H.spec();
            let pattern = spec.instantiate().unwrap().graph;
            let (c, len) = h_family_bounds(1, 2);
            let n = rng.gen_range(5..=14);
            let g = gen_spec_free(&spec, n, density, s)
                .expect("valid spec")
                .graph;
            let Some(rep) = find_minimal_l_type(&g, c, len).expect("positive bounds") else {
                return Outcome::Skip;
            };
            match l_remove(&g, &rep, r) {
                Ok(Removal::NoInstance) if o.colourable(&g, r) => {
                    Outcome::Fail(format!("L-removal refuted a colourable graph {g:?}"))
                }
                Ok(Removal::NoInstance) => pass_with("refuted"),
                Ok(Removal::Reduced(h, step)) => {
                    compare(&g, &[h], r, &pattern, o, step_note(step.kind))
                }
                Err(e) => Outcome::Fail(format!("l_remove rejected a detector report: {e}")),
            }
        }
        ReductionKind::TRemoval => {
            let spec = Family::S.spec();
            let pattern = spec.instantiate().unwrap().graph;
            let n = rng.gen_range(5..=14);
            let g = gen_spec_free(&spec, n, density, s)
                .expect("valid spec")
                .graph;
            let Some(rep) = find_minimal_t_type(&g, s_family_bound(2)).expect("positive bound")
            else {
                return Outcome::Skip;
            };
            match t_remove(&g, &rep, r) {
                Ok(Removal::NoInstance) if o.colourable(&g, r) => {
                    Outcome::Fail(format!("T-removal refuted a colourable graph {g:?}"))
                }
                Ok(Removal::NoInstance) => pass_with("refuted"),
                Ok(Removal::Reduced(h, step)) => {
                    let note = if rep.witness.len() == 1 {
                        "single-witness"
                    } else {
                        step_note(step.kind)
                    };
                    compare(&g, &[h], r, &pattern, o, note)
                }
                Err(e) => Outcome::Fail(format!("t_remove rejected a detector report: {e}")),
            }
        }
        ReductionKind::BridgeStrip => {
            let spec = Family::S.spec();
            let pattern = spec.instantiate().unwrap().graph;
            let n = rng.gen_range(4..=14);
            let g = gen_spec_free(&spec, n, density.min(0.35), s)
                .expect("valid spec")
                .graph;
            let (h, step) = bridge_strip_step(&g);
            if step.is_none() {
                return Outcome::Skip;
            }
            let parts: Vec<Graph> = h
                .connected_components()
                .iter()
                .map(|c| h.induced_subgraph(c))
                .collect();
            compare(&g, &parts, r, &pattern, o, "applied")
        }
    }
}

fn report_union(rep: &TTypeReport) -> Vec<Vertex> {
    let mut keep = rep.vertices.clone();
    keep.extend(rep.witness.iter().copied());
    keep
}

/// Every minimal T-type or L-type report on random graphs has at most three
/// components, each of treedepth at most `c`, and `td(G[C ∪ S]) <= 3c + 2`.
pub fn minimal_report_bounds(graphs: usize, seed: u64, o: &dyn Oracles) -> CheckResult {
    run_cases("minimal-report-treedepth", graphs, seed, |s| {
        let mut rng = rng_from(s);
        let n = rng.gen_range(4..=12);
        let g = random_graph(n, rng.gen_range(0.15..0.55), &mut rng);
        let c = rng.gen_range(1..=3);
        let len = rng.gen_range(2..=4);
        let mut notes = Vec::new();
        let t = find_minimal_t_type(&g, c).expect("c >= 1");
        let l = find_minimal_l_type(&g, c, len).expect("bounds >= 1");
        for (rep, what) in t
            .iter()
            .map(|r| (r, "t-report"))
            .chain(l.iter().map(|r| (&r.t, "l-report")))
        {
            notes.push(what);
            if rep.components.len() > 3 {
                return Outcome::Fail(format!("{what} with {} components", rep.components.len()));
            }
            if let Some(k) = rep
                .components
                .iter()
                .find(|k| o.treedepth(&g.induced_subgraph(k)) > c)
            {
                return Outcome::Fail(format!(
                    "{what} component {k:?} exceeds treedepth {c} in {g:?}"
                ));
            }
            let td = o.treedepth(&g.induced_subgraph(&report_union(rep)));
            if td > 3 * c + 2 {
                return Outcome::Fail(format!(
                    "{what}: td(G[C ∪ S]) = {td} > {} in {g:?}",
                    3 * c + 2
                ));
            }
        }
        if let Some(l) = &l {
            if !is_l_type(&g, &l.t.vertices, &l.t.witness, c, len) {
                return Outcome::Fail(format!("L-type report does not validate on {g:?}"));
            }
        }
        if let Some(t) = &t {
            if !is_t_type(&g, &t.vertices, &t.witness, c) {
                return Outcome::Fail(format!("T-type report does not validate on {g:?}"));
            }
        }
        if notes.is_empty() {
            notes.push("no-report");
        }
        Outcome::Pass(notes)
    })
}

/// Odd and even paths of chain extensions with at least two jumps are
/// vertex-disjoint paths of `G`.
pub fn chain_disjointness(target: usize, seed: u64) -> CheckResult {
    run_cases("chain-extension-disjoint", target, seed, |s| {
        let mut rng = rng_from(s);
        let len = rng.gen_range(6..=16);
        let extra = rng.gen_range(0..=5);
        let (g, p) = path_with_jumps(
            len,
            extra,
            rng.gen_range(0.0..0.2),
            rng.gen_range(0.05..0.3),
            &mut rng,
        );
        let i = rng.gen_range(0..len - 2);
        let j = rng.gen_range(i + 2..len);
        let sign = if rng.gen_bool(0.5) {
            Sign::Positive
        } else {
            Sign::Negative
        };
        let path = SignedPath::from_vertices(p.clone());
        let mut ctx = JumpContext::new(&g, path).expect("path of g");
        let t = ctx.chain_extension(p[i], p[j], sign).expect("ordered pair");
        if t.len() < 2 {
            return Outcome::Skip;
        }
        match ctx.odd_even_paths(&t) {
            Ok((odd, Some(even))) => {
                let ok_paths = crate::graph::is_path_in(&g, odd.vertices())
                    && crate::graph::is_path_in(&g, even.vertices());
                let disjoint = odd.vertices().iter().all(|v| !even.vertices().contains(v));
                if ok_paths && disjoint {
                    pass()
                } else {
                    Outcome::Fail(format!(
                        "chain {:?}: odd {:?} even {:?} (paths ok {ok_paths}, disjoint {disjoint}) in {g:?}",
                        t.jumps,
                        odd.vertices(),
                        even.vertices()
                    ))
                }
            }
            Ok((_, None)) => Outcome::Fail("two jumps but no even path".into()),
            Err(e) => Outcome::Fail(format!("chain {:?}: {e} in {g:?}", t.jumps)),
        }
    })
}

/// Lifting the centre of a planted `S_{2k,2k,2k}` with a degree-4 centre
/// yields an `S_{1,k,k,k}` embedding.
pub fn star_lifts(target: usize, seed: u64, o: &dyn Oracles) -> CheckResult {
    run_cases("star-centre-lift", target, seed, |s| {
        let mut rng = rng_from(s);
        let k = rng.gen_range(1..=3);
        let g = planted_long_star(k, rng.gen_range(0..=3), rng.gen_range(0.0..0.5), &mut rng);
        // Shuffle ids so the planted star is not laid out in order.
        let n = g.id_bound();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        let edges: Vec<(usize, usize)> = g.edges().map(|e| (perm[e.u], perm[e.v])).collect();
        let g = Graph::from_edges(n, &edges);
        let spec = PatternSpec::star(&[2 * k, 2 * k, 2 * k]).unwrap();
        let src = spec.instantiate().unwrap();
        let mut map = vec![0; src.graph.id_bound()];
        map[src.hubs[0]] = perm[0];
        for (b, branch) in src.branches.iter().enumerate() {
            for (i, &pv) in branch.iter().enumerate() {
                map[pv] = perm[1 + b * 2 * k + i];
            }
        }
        let emb = Embedding { spec, map };
        let target_spec = PatternSpec::s1kkk(k);
        let target_graph = target_spec.instantiate().unwrap().graph;
        match lift_star_centre(&g, &emb, k) {
            Ok(out) if out.spec == target_spec && o.is_embedding(&g, &target_graph, &out.map) => {
                Outcome::Pass(vec![["k1", "k2", "k3"][k - 1]])
            }
            Ok(out) => Outcome::Fail(format!(
                "invalid lift {:?} of {:?} in {g:?}",
                out.map, emb.map
            )),
            Err(e) => Outcome::Fail(format!("lift failed: {e}")),
        }
    })
}

fn is_odd_cycle(g: &Graph) -> bool {
    g.vertex_count() % 2 == 1 && g.vertices().all(|v| g.degree(v) == 2) && g.is_connected()
}

/// Brooks colouring of random connected subcubic graphs other than `K_4`
/// and odd cycles uses at most three colours.
pub fn brooks_random(target: usize, seed: u64) -> CheckResult {
    run_cases("brooks-subcubic", target, seed, |s| {
        let mut rng = rng_from(s);
        let n = rng.gen_range(2..=24);
        let g = random_subcubic_connected(n, rng.gen_range(0..=2 * n), &mut rng);
        let k4 = g.vertex_count() == 4 && g.edge_count() == 6;
        if k4 || is_odd_cycle(&g) {
            return Outcome::Skip;
        }
        match brooks_colour(&g) {
            Ok(c) if colouring_valid(&g, 3, c.as_slice()) => pass(),
            Ok(c) => Outcome::Fail(format!("bad colouring {:?} of {g:?}", c.as_slice())),
            Err(e) => Outcome::Fail(format!("{e}")),
        }
    })
}

/// `K_4` takes exactly four colours and odd cycles exactly three.
pub fn brooks_exceptions() -> CheckResult {
    let mut items = vec![Graph::complete(4)];
    items.extend((1..=15).map(|t| Graph::cycle(2 * t + 1)));
    run_list("brooks-exceptions", &items, |g| {
        let want = if g.vertex_count() == 4 { 4 } else { 3 };
        match brooks_colour(g) {
            Ok(c) if c.is_proper(g) && c.colours_used(g) == want => pass(),
            Ok(c) => Outcome::Fail(format!("{} colours on {g:?}", c.colours_used(g))),
            Err(e) => Outcome::Fail(format!("{e}")),
        }
    })
}

fn check_stable_cut(g: &Graph, o: &dyn Oracles) -> Outcome {
    let d = solve_stable_cut(g, &SolverConfig::default()).expect("connected, n >= 3");
    let truth = o.has_stable_cut(g);
    match &d.verdict {
        Verdict::Yes(Certificate::StableCut { vertices })
            if truth && stable_cut_valid(g, vertices) =>
        {
            pass_with("yes")
        }
        Verdict::Yes(_) => {
            Outcome::Fail(format!("bad Yes {:?} (oracle {truth}) on {g:?}", d.verdict))
        }
        Verdict::No if !truth => pass_with("no"),
        other => Outcome::Fail(format!(
            "verdict {other:?} but oracle says {truth} on {g:?}"
        )),
    }
}

pub fn stable_cut_exhaustive(max_n: usize, o: &dyn Oracles) -> CheckResult {
    let items: Vec<Graph> = (3..=max_n).flat_map(enumerate_connected).collect();
    run_list(&format!("stable-cut-exhaustive-n<={max_n}"), &items, |g| {
        check_stable_cut(g, o)
    })
}

pub fn stable_cut_random(target: usize, seed: u64, o: &dyn Oracles) -> CheckResult {
    run_cases("stable-cut-random", target, seed, |s| {
        let mut rng = rng_from(s);
        let n = rng.gen_range(3..=12);
        let g = random_connected(n, rng.gen_range(0.05..0.7), &mut rng);
        check_stable_cut(&g, o)
    })
}

/// Treedepth threshold beyond which the S-family structure theorem applies.
pub fn s_theorem_threshold(k: usize) -> f64 {
    let k = k as f64;
    8.0 * (7.0 * k.powi(3) + 15.0 * k * k - 4.0 * k / 9.0 + 3.0).powi(2) + 6.0
}

/// Runs the detectors on graphs meeting the structure theorems' degree and
/// bridge conditions (`k = 2`, `m = 1`) and validates whatever they report.
/// The conclusion holds on an instance if a validated fan, T/L-type subgraph
/// or pattern copy is found, or the treedepth (at most `n`) is below the
/// theorem's threshold.
pub fn counterexample_search(
    fam: Family,
    target: usize,
    seed: u64,
    o: &dyn Oracles,
) -> CheckResult {
    let spec = fam.spec();
    let pattern = spec.instantiate().unwrap().graph;
    run_cases(&format!("structure-theorem-{fam:?}"), target, seed, |s| {
        let mut rng = rng_from(s);
        let n = rng.gen_range(5..=14);
        let g = random_graph(n, rng.gen_range(0.2..0.6), &mut rng);
        let g = match fam {
            Family::H => {
                // Minimum degree at least 3: peel to the 3-core.
                let mut h = g;
                loop {
                    let low: Vec<Vertex> = h.vertices().filter(|&v| h.degree(v) < 3).collect();
                    if low.is_empty() {
                        break;
                    }
                    h = h.delete_vertices(&low);
                }
                if h.is_empty() {
                    return Outcome::Skip;
                }
                h
            }
            Family::S => {
                // No proper bridge and a vertex of degree at least 4.
                let (h, _) = bridge_strip_step(&g);
                let Some(big) = h.connected_components().into_iter().max_by_key(|c| c.len()) else {
                    return Outcome::Skip;
                };
                let h = h.induced_subgraph(&big);
                if h.max_degree().unwrap_or(0) < 4 {
                    return Outcome::Skip;
                }
                h
            }
        };
        let mut notes = Vec::new();
        let found = contains_subgraph(&g, &spec).expect("valid spec");
        if let Some(emb) = &found {
            if !o.is_embedding(&g, &pattern, &emb.map) {
                return Outcome::Fail(format!("invalid pattern embedding in {g:?}"));
            }
            notes.push("pattern");
        } else if o.contains(&g, &pattern) {
            return Outcome::Fail(format!("pattern search missed a copy in {g:?}"));
        }
        match fam {
            Family::H => {
                if let Some(fan) = find_protected_fan(&g, 5).expect("order >= 3") {
                    if !fan.validate(&g) {
                        return Outcome::Fail(format!("invalid fan {fan:?}"));
                    }
                    notes.push("fan");
                }
                let (c, len) = h_family_bounds(1, 2);
                if let Some(l) = find_minimal_l_type(&g, c, len).expect("positive bounds") {
                    if !is_l_type(&g, &l.t.vertices, &l.t.witness, c, len) {
                        return Outcome::Fail(format!("invalid L-type report on {g:?}"));
                    }
                    notes.push("l-type");
                }
            }
            Family::S => {
                let c = s_family_bound(2);
                if let Some(t) = find_minimal_t_type(&g, c).expect("positive bound") {
                    if !is_t_type(&g, &t.vertices, &t.witness, c) {
                        return Outcome::Fail(format!("invalid T-type report on {g:?}"));
                    }
                    notes.push("t-type");
                }
            }
        }
        if notes.is_empty() {
            // Treedepth is at most n, far below any threshold reachable here.
            let threshold = match fam {
                Family::H => f64::INFINITY,
                Family::S => s_theorem_threshold(2),
            };
            if (g.vertex_count() as f64) >= threshold {
                return Outcome::Fail(format!("no conclusion holds on {g:?}"));
            }
            notes.push("treedepth-below-threshold");
        }
        Outcome::Pass(notes)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Suite {
    Reductions,
    Structure,
    Oracle,
    Brooks,
    StableCut,
}

impl std::str::FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "reductions" => Ok(Suite::Reductions),
            "structure" => Ok(Suite::Structure),
            "oracle" => Ok(Suite::Oracle),
            "brooks" => Ok(Suite::Brooks),
            "stablecut" => Ok(Suite::StableCut),
            _ => Err(format!("unknown suite {s:?}")),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub seed: u64,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

/// Runs a suite with `cases` random cases per check.
pub fn run_suite(suite: Suite, cases: usize, seed: u64) -> SuiteReport {
    let o = &LibraryOracles;
    let checks = match suite {
        Suite::Oracle => {
            let mut v = vec![oracle_exhaustive(5, o)];
            for fam in [Family::H, Family::S] {
                for r in [3, 4] {
                    v.push(oracle_random(fam, r, cases, seed, o));
                }
            }
            v
        }
        Suite::Reductions => ReductionKind::ALL
            .iter()
            .map(|&k| reduction_safety(k, cases, seed, o))
            .collect(),
        Suite::Structure => vec![
            minimal_report_bounds(cases, seed, o),
            chain_disjointness(cases, seed),
            star_lifts(cases, seed, o),
            counterexample_search(Family::H, cases, seed, o),
            counterexample_search(Family::S, cases, seed, o),
        ],
        Suite::Brooks => vec![brooks_random(cases, seed), brooks_exceptions()],
        Suite::StableCut => vec![
            stable_cut_exhaustive(6, o),
            stable_cut_random(cases, seed, o),
        ],
    };
    SuiteReport {
        suite,
        seed,
        passed: checks.iter().all(|c| c.passed()),
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        for suite in [
            Suite::Oracle,
            Suite::Reductions,
            Suite::Structure,
            Suite::Brooks,
            Suite::StableCut,
        ] {
            let rep = run_suite(suite, 10, 1);
            for c in &rep.checks {
                assert!(c.passed(), "{}", c.summary());
            }
        }
    }

    #[test]
    fn suite_names() {
        assert_eq!("stablecut".parse::<Suite>(), Ok(Suite::StableCut));
        assert!("nope".parse::<Suite>().is_err());
    }
}
