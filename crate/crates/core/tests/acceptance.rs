//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails. The oracles below are written from the definitions
//! and share no code with the library's own brute-force routines.

use std::collections::HashMap;
use std::process::ExitCode;
use std::time::Instant;

use chroma_core::cli::gen::enumerate_graphs;
use chroma_core::cli::suites::{
    brooks_exceptions, brooks_random, chain_disjointness, counterexample_search,
    minimal_report_bounds, oracle_exhaustive, oracle_random, reduction_safety,
    stable_cut_exhaustive, stable_cut_random, star_lifts, CheckResult, Family, Oracles,
    ReductionKind,
};
use chroma_core::colouring::Colour;
use chroma_core::graph::{Graph, SignedPath, Vertex};
use chroma_core::structure::{JumpContext, Sign};
use chroma_core::treedepth::{treedepth_exact, validate_elimination_forest};

const SEED: u64 = 20_231_016;

/// Relabels `g` onto `0..n` as adjacency bitmasks.
fn masks(g: &Graph) -> Vec<u64> {
    let vs = g.vertex_list();
    let idx: HashMap<Vertex, usize> = vs.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    vs.iter()
        .map(|&v| g.neighbours(v).iter().fold(0u64, |m, w| m | 1 << idx[w]))
        .collect()
}

fn backtrack_colour(adj: &[u64], r: Colour, col: &mut Vec<Colour>) -> bool {
    let v = col.len();
    if v == adj.len() {
        return true;
    }
    for c in 0..r {
        if (0..v).all(|w| adj[v] & (1 << w) == 0 || col[w] != c) {
            col.push(c);
            if backtrack_colour(adj, r, col) {
                return true;
            }
            col.pop();
        }
    }
    false
}

fn reach(adj: &[u64], alive: u64, start: usize) -> u64 {
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = adj[v] & alive & !seen;
        seen |= new;
        frontier |= new;
    }
    seen
}

/// td of the subgraph induced by `set`: 0 when empty, the maximum over
/// components, else one plus the best vertex deletion.
fn td_definition(adj: &[u64], set: u64, memo: &mut HashMap<u64, usize>) -> usize {
    if set == 0 {
        return 0;
    }
    if let Some(&d) = memo.get(&set) {
        return d;
    }
    let comp = reach(adj, set, set.trailing_zeros() as usize);
    let d = if comp != set {
        td_definition(adj, comp, memo).max(td_definition(adj, set & !comp, memo))
    } else {
        let mut best = usize::MAX;
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            best = best.min(1 + td_definition(adj, set & !(1 << v), memo));
        }
        best
    };
    memo.insert(set, d);
    d
}

fn extend_embedding(host: &[u64], pat: &[u64], map: &mut Vec<usize>, used: u64) -> bool {
    let p = map.len();
    if p == pat.len() {
        return true;
    }
    for h in 0..host.len() {
        if used & (1 << h) != 0 {
            continue;
        }
        if (0..p).all(|q| pat[p] & (1 << q) == 0 || host[h] & (1 << map[q]) != 0) {
            map.push(h);
            if extend_embedding(host, pat, map, used | 1 << h) {
                return true;
            }
            map.pop();
        }
    }
    false
}

struct Reference;

impl Oracles for Reference {
    fn colourable(&self, g: &Graph, r: Colour) -> bool {
        backtrack_colour(&masks(g), r, &mut Vec::new())
    }

    fn has_stable_cut(&self, g: &Graph) -> bool {
        let adj = masks(g);
        let n = adj.len();
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        (1..=all).any(|s: u64| {
            let independent = (0..n).all(|v| s & (1 << v) == 0 || adj[v] & s == 0);
            let rest = all & !s;
            independent && rest != 0 && reach(&adj, rest, rest.trailing_zeros() as usize) != rest
        })
    }

    fn contains(&self, host: &Graph, pattern: &Graph) -> bool {
        extend_embedding(&masks(host), &masks(pattern), &mut Vec::new(), 0)
    }

    fn treedepth(&self, g: &Graph) -> usize {
        let adj = masks(g);
        let all = if adj.len() == 64 {
            u64::MAX
        } else {
            (1u64 << adj.len()) - 1
        };
        td_definition(&adj, all, &mut HashMap::new())
    }

    fn is_embedding(&self, host: &Graph, pattern: &Graph, map: &[Vertex]) -> bool {
        let p = pattern.vertex_list();
        if map.len() < pattern.id_bound() || p.iter().any(|&v| !host.contains(map[v])) {
            return false;
        }
        let distinct = p
            .iter()
            .enumerate()
            .all(|(i, &a)| p[i + 1..].iter().all(|&b| map[a] != map[b]));
        distinct && pattern.edges().all(|e| host.has_edge(map[e.u], map[e.v]))
    }
}

struct Criterion {
    id: usize,
    title: &'static str,
    checks: Vec<CheckResult>,
}

impl Criterion {
    fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }
}

fn local(
    name: &str,
    target: usize,
    cases: usize,
    failures: Vec<String>,
    start: Instant,
) -> CheckResult {
    CheckResult {
        name: name.to_string(),
        target,
        cases,
        failures: failures.len(),
        skipped: 0,
        notes: Default::default(),
        first_failure: failures.into_iter().next(),
        seconds: start.elapsed().as_secs_f64(),
    }
}

fn treedepth_checks(o: &Reference) -> Vec<CheckResult> {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut cases = 0;
    for n in 1..=7 {
        for g in enumerate_graphs(n) {
            cases += 1;
            let res = treedepth_exact(&g, n);
            let (Some(d), Some(f)) = (res.value(), res.forest()) else {
                failures.push(format!("no value for {:?}", g.edges().collect::<Vec<_>>()));
                continue;
            };
            if d != o.treedepth(&g) || f.height() != d || !validate_elimination_forest(&g, f) {
                failures.push(format!(
                    "td mismatch on {:?}",
                    g.edges().collect::<Vec<_>>()
                ));
            }
        }
    }
    let all_small = local("treedepth all graphs n<=7", cases, cases, failures, start);

    let start = Instant::now();
    let mut failures = Vec::new();
    for n in [1usize, 3, 7, 15, 31] {
        let p = Graph::path(n);
        let expect = (usize::BITS - n.leading_zeros()) as usize;
        let res = treedepth_exact(&p, 32);
        let ok = res.value() == Some(expect)
            && res
                .forest()
                .is_some_and(|f| validate_elimination_forest(&p, f));
        if !ok {
            failures.push(format!("td(P_{n}) = {:?}, expected {expect}", res.value()));
        }
    }
    vec![
        all_small,
        local("treedepth of paths", 5, 5, failures, start),
    ]
}

fn figure_checks() -> Vec<CheckResult> {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut check = |ok: bool, what: &str| {
        if !ok {
            failures.push(what.to_string());
        }
    };

    // p_1..p_10 as 1..=10.
    let p = SignedPath::from_vertices((1..=10).collect());
    let s = |i, j| p.slice(i, j).unwrap();
    check(s(8, -1).vertices() == [8, 9, 10], "P[8:-1]");
    check(
        s(8, -1) == s(-3, -1) && s(-3, -1) == s(8, 10),
        "P[8:-1] = P[-3:-1] = P[8:10]",
    );
    check(s(4, 7).vertices() == [4, 5, 6, 7], "P[p_4:p_7]");

    // Fig. 5: p_1..p_10 are 0..9, q_1..q_4 are 10..13.
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
    let g5 = Graph::from_edges(14, &e);
    let ctx = JumpContext::new(&g5, SignedPath::new(&g5, (0..10).collect()).unwrap()).unwrap();
    check(
        ctx.max_jump_out(3, 6, Sign::Positive).unwrap() == Some((5, 9)),
        "fig. 5 maximum jump (p_6, p_10)",
    );

    // Fig. 6: p_1..p_12 are 0..11, q_1..q_6 are 12..17.
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
    let g6 = Graph::from_edges(18, &e);
    let mut ctx = JumpContext::new(&g6, SignedPath::new(&g6, (0..12).collect()).unwrap()).unwrap();
    let chain = ctx.chain_extension(0, 2, Sign::Positive).unwrap();
    check(
        chain.jumps == [(1, 4), (2, 5), (4, 7), (6, 9), (8, 10)],
        "fig. 6 chain extension",
    );
    vec![local("figure fixtures", 5, 5, failures, start)]
}

fn main() -> ExitCode {
    let o = Reference;
    let mut criteria = Vec::new();
    let mut run = |id, title, checks: Vec<CheckResult>| {
        let c = Criterion { id, title, checks };
        println!(
            "{} criterion {:>2}: {}",
            if c.passed() { "PASS" } else { "FAIL" },
            c.id,
            c.title
        );
        for check in &c.checks {
            println!("      {}", check.summary());
        }
        criteria.push(c);
    };

    let mut oracle = vec![oracle_exhaustive(6, &o)];
    for fam in [Family::H, Family::S] {
        for r in [3, 4] {
            oracle.push(oracle_random(fam, r, 10_000, SEED + r as u64, &o));
        }
    }
    run(1, "solver verdicts equal brute force", oracle);

    let reductions = ReductionKind::ALL
        .iter()
        .enumerate()
        .map(|(i, &k)| reduction_safety(k, 1_000, SEED + i as u64, &o))
        .collect();
    run(
        2,
        "reductions preserve colourability and freeness",
        reductions,
    );

    run(
        3,
        "minimal T/L-type reports are shallow",
        vec![minimal_report_bounds(5_000, SEED, &o)],
    );
    run(
        4,
        "odd and even chain paths are disjoint",
        vec![chain_disjointness(1_000, SEED)],
    );
    run(5, "long star centres lift", vec![star_lifts(500, SEED, &o)]);
    run(
        6,
        "subcubic colouring",
        vec![brooks_random(1_000, SEED), brooks_exceptions()],
    );
    run(
        7,
        "stable cut verdicts equal brute force",
        vec![
            stable_cut_exhaustive(7, &o),
            stable_cut_random(5_000, SEED, &o),
        ],
    );
    run(8, "exact treedepth", treedepth_checks(&o));
    run(
        9,
        "no counterexamples to the structure theorems",
        vec![
            counterexample_search(Family::H, 10_000, SEED, &o),
            counterexample_search(Family::S, 10_000, SEED, &o),
        ],
    );
    run(10, "figure fixtures", figure_checks());

    let failed = criteria.iter().filter(|c| !c.passed()).count();
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
