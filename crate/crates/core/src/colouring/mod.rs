//! Colourings, the brute-force oracle, Brooks colouring and list colouring
//! over elimination forests.

mod brooks;
pub(crate) mod dp;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Vertex};
use crate::treedepth::{validate_elimination_forest, EliminationForest};

pub use brooks::brooks_colour;

pub type Colour = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColouringError {
    #[error("graph is not connected")]
    NotConnected,
    #[error("elimination forest does not fit the graph")]
    InvalidForest,
    #[error("fixed colour {colour} for vertex {vertex} is outside 1..={r}")]
    FixedOutOfRange {
        vertex: Vertex,
        colour: Colour,
        r: Colour,
    },
    #[error("vertex {0} has an empty or missing list")]
    EmptyList(Vertex),
    #[error("list colours must lie in 1..=255")]
    ColourTooLarge,
}

/// Colours `1..=r` by vertex id; 0 marks an uncoloured id.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Colouring {
    colours: Vec<Colour>,
}

impl Colouring {
    pub fn new(id_bound: usize) -> Self {
        Colouring {
            colours: vec![0; id_bound],
        }
    }

    pub fn from_vec(colours: Vec<Colour>) -> Self {
        Colouring { colours }
    }

    pub fn get(&self, v: Vertex) -> Option<Colour> {
        self.colours.get(v).copied().filter(|&c| c != 0)
    }

    pub fn set(&mut self, v: Vertex, c: Colour) {
        if v >= self.colours.len() {
            self.colours.resize(v + 1, 0);
        }
        self.colours[v] = c;
    }

    pub fn as_slice(&self) -> &[Colour] {
        &self.colours
    }

    /// Every vertex of `g` is coloured and no edge is monochromatic.
    pub fn is_proper(&self, g: &Graph) -> bool {
        g.vertices().all(|v| self.get(v).is_some())
            && g.edges().all(|e| self.get(e.u) != self.get(e.v))
    }

    /// Proper and uses only colours `1..=r`.
    pub fn is_proper_within(&self, g: &Graph, r: Colour) -> bool {
        self.is_proper(g) && g.vertices().all(|v| self.get(v).is_some_and(|c| c <= r))
    }

    /// Number of distinct colours on the vertices of `g`.
    pub fn colours_used(&self, g: &Graph) -> usize {
        let mut cs: Vec<Colour> = g.vertices().filter_map(|v| self.get(v)).collect();
        cs.sort_unstable();
        cs.dedup();
        cs.len()
    }

    /// Swaps colour names so that `a` becomes `b` and vice versa, on `vs`.
    pub fn swap_on(&mut self, vs: &[Vertex], a: Colour, b: Colour) {
        for &v in vs {
            if self.colours[v] == a {
                self.colours[v] = b;
            } else if self.colours[v] == b {
                self.colours[v] = a;
            }
        }
    }
}

/// Candidate colours per vertex id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListAssignment {
    lists: Vec<Vec<Colour>>,
}

impl ListAssignment {
    /// Every vertex of `g` may take any colour in `1..=r`.
    pub fn full(g: &Graph, r: Colour) -> Self {
        let mut lists = vec![Vec::new(); g.id_bound()];
        for v in g.vertices() {
            lists[v] = (1..=r).collect();
        }
        ListAssignment { lists }
    }

    pub fn from_lists(lists: Vec<Vec<Colour>>) -> Self {
        ListAssignment { lists }
    }

    pub fn set(&mut self, v: Vertex, list: Vec<Colour>) {
        if v >= self.lists.len() {
            self.lists.resize(v + 1, Vec::new());
        }
        self.lists[v] = list;
    }

    pub fn get(&self, v: Vertex) -> &[Colour] {
        self.lists.get(v).map_or(&[], |l| l.as_slice())
    }
}

/// Decides r-colourability by backtracking. The next vertex is the one with
/// the most distinct colours around it, and a fresh colour is only ever the
/// smallest unused one.
pub fn brute_force_decide(g: &Graph, r: Colour) -> Option<Colouring> {
    let n = g.id_bound();
    let verts = g.vertex_list();
    if verts.is_empty() {
        return Some(Colouring::new(n));
    }
    if r == 0 {
        return None;
    }
    let r = r as usize;
    let mut colour = vec![0usize; n];
    // seen[v][c]: coloured neighbours of v with colour c.
    let mut seen = vec![vec![0u16; r + 1]; n];
    let mut sat = vec![0usize; n];
    let ok = bt(g, r, &verts, &mut colour, &mut seen, &mut sat, 0, 0);
    ok.then(|| Colouring::from_vec(colour.into_iter().map(|c| c as Colour).collect()))
}

#[allow(clippy::too_many_arguments)]
fn bt(
    g: &Graph,
    r: usize,
    verts: &[Vertex],
    colour: &mut [usize],
    seen: &mut [Vec<u16>],
    sat: &mut [usize],
    done: usize,
    used: usize,
) -> bool {
    if done == verts.len() {
        return true;
    }
    let v = verts
        .iter()
        .copied()
        .filter(|&v| colour[v] == 0)
        .max_by_key(|&v| (sat[v], g.degree(v), std::cmp::Reverse(v)))
        .unwrap();
    let limit = r.min(used + 1);
    for c in 1..=limit {
        if seen[v][c] > 0 {
            continue;
        }
        colour[v] = c;
        for &w in g.neighbours(v) {
            if seen[w][c] == 0 {
                sat[w] += 1;
            }
            seen[w][c] += 1;
        }
        if bt(g, r, verts, colour, seen, sat, done + 1, used.max(c)) {
            return true;
        }
        for &w in g.neighbours(v) {
            seen[w][c] -= 1;
            if seen[w][c] == 0 {
                sat[w] -= 1;
            }
        }
        colour[v] = 0;
    }
    false
}

/// Decides colourability for `r <= 2` directly: no colours for the empty
/// graph, one colour for edgeless graphs, two for bipartite graphs.
pub fn decide_small_r(g: &Graph, r: Colour) -> Option<Colouring> {
    let mut col = Colouring::new(g.id_bound());
    match r {
        0 => g.is_empty().then_some(col),
        1 => {
            if g.edge_count() > 0 {
                return None;
            }
            for v in g.vertices() {
                col.set(v, 1);
            }
            Some(col)
        }
        2 => two_colour(g),
        _ => panic!("decide_small_r called with r = {r}"),
    }
}

/// BFS 2-colouring, or `None` if `g` has an odd cycle.
pub fn two_colour(g: &Graph) -> Option<Colouring> {
    let mut col = Colouring::new(g.id_bound());
    for s in g.vertices() {
        if col.get(s).is_some() {
            continue;
        }
        col.set(s, 1);
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            let cv = col.get(v).unwrap();
            for &w in g.neighbours(v) {
                match col.get(w) {
                    None => {
                        col.set(w, 3 - cv);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cv => return None,
                    _ => {}
                }
            }
        }
    }
    Some(col)
}

/// List colouring by DP over an elimination forest of `g`.
pub fn list_colour_bounded_td(
    g: &Graph,
    forest: &EliminationForest,
    lists: &ListAssignment,
) -> Result<Option<Colouring>, ColouringError> {
    if !validate_elimination_forest(g, forest) {
        return Err(ColouringError::InvalidForest);
    }
    let mut small = vec![Vec::new(); g.id_bound()];
    for v in g.vertices() {
        let l = lists.get(v);
        if l.is_empty() {
            return Err(ColouringError::EmptyList(v));
        }
        if l.iter().any(|&c| c == 0 || c > 255) {
            return Err(ColouringError::ColourTooLarge);
        }
        small[v] = l.iter().map(|&c| c as u8).collect();
    }
    let problem = dp::LabelProblem {
        graph: g,
        forest,
        lists: &small,
        compatible: &|a, b| a != b,
        flag: &|_| 0,
        accept: &|_| true,
    };
    Ok(dp::solve_labelling(&problem).map(|labels| {
        let mut col = Colouring::new(g.id_bound());
        for v in g.vertices() {
            col.set(v, labels[v].expect("every vertex labelled") as Colour);
        }
        col
    }))
}

/// Extends the partial colouring `fixed` to a proper r-colouring of `g`.
pub fn precolouring_extension(
    g: &Graph,
    forest: &EliminationForest,
    fixed: &[(Vertex, Colour)],
    r: Colour,
) -> Result<Option<Colouring>, ColouringError> {
    let mut lists = ListAssignment::full(g, r);
    for &(v, c) in fixed {
        if c == 0 || c > r {
            return Err(ColouringError::FixedOutOfRange {
                vertex: v,
                colour: c,
                r,
            });
        }
        lists.set(v, vec![c]);
    }
    list_colour_bounded_td(g, forest, &lists)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::treedepth::{treedepth_exact, TreedepthResult};

    pub(crate) fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &e)
    }

    fn forest(g: &Graph) -> EliminationForest {
        match treedepth_exact(g, 32) {
            TreedepthResult::Value(_, f) => f,
            TreedepthResult::ExceedsCap => unreachable!(),
        }
    }

    #[test]
    fn oracle_examples() {
        assert!(brute_force_decide(&Graph::complete(4), 3).is_none());
        let c = brute_force_decide(&Graph::cycle(5), 3).unwrap();
        assert!(c.is_proper_within(&Graph::cycle(5), 3));
        let p = petersen();
        assert!(brute_force_decide(&p, 3).unwrap().is_proper_within(&p, 3));
        assert!(brute_force_decide(&p, 2).is_none());
        assert!(brute_force_decide(&Graph::empty(0), 0).is_some());
        assert!(brute_force_decide(&Graph::empty(1), 0).is_none());
    }

    #[test]
    fn small_r() {
        assert!(decide_small_r(&Graph::cycle(6), 2).is_some());
        assert!(decide_small_r(&Graph::cycle(5), 2).is_none());
        assert!(decide_small_r(&Graph::empty(3), 1).is_some());
        assert!(decide_small_r(&Graph::path(2), 1).is_none());
    }

    #[test]
    fn list_dp_examples() {
        let p3 = Graph::path(3);
        let lists = ListAssignment::full(&p3, 2);
        let c = list_colour_bounded_td(&p3, &forest(&p3), &lists)
            .unwrap()
            .unwrap();
        assert!(c.is_proper_within(&p3, 2));
        let k3 = Graph::complete(3);
        assert!(
            list_colour_bounded_td(&k3, &forest(&k3), &ListAssignment::full(&k3, 2))
                .unwrap()
                .is_none()
        );
        let wrong = forest(&Graph::path(3));
        assert_eq!(
            list_colour_bounded_td(&k3, &wrong, &ListAssignment::full(&k3, 3)),
            Err(ColouringError::InvalidForest)
        );
    }

    #[test]
    fn precolouring_examples() {
        let p3 = Graph::path(3);
        let f = forest(&p3);
        let c = precolouring_extension(&p3, &f, &[(0, 1), (2, 1)], 2)
            .unwrap()
            .unwrap();
        assert_eq!(c.get(1), Some(2));
        assert!(precolouring_extension(&p3, &f, &[(0, 1), (2, 2)], 2)
            .unwrap()
            .is_none());
        assert!(matches!(
            precolouring_extension(&p3, &f, &[(0, 3)], 2),
            Err(ColouringError::FixedOutOfRange { .. })
        ));
    }

    #[test]
    fn dp_matches_oracle_on_petersen() {
        let p = petersen();
        let f = forest(&p);
        for r in 2..=3 {
            let dp = list_colour_bounded_td(&p, &f, &ListAssignment::full(&p, r)).unwrap();
            assert_eq!(dp.is_some(), brute_force_decide(&p, r).is_some());
            if let Some(c) = dp {
                assert!(c.is_proper_within(&p, r));
            }
        }
    }
}
