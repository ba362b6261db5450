//! Constructive Brooks colouring.

use std::collections::VecDeque;

use super::{two_colour, Colour, Colouring, ColouringError};
use crate::graph::{Graph, Vertex};

/// Colours a connected graph with `max(Δ, 1)` colours, or `Δ + 1` when it is
/// complete or an odd cycle.
pub fn brooks_colour(g: &Graph) -> Result<Colouring, ColouringError> {
    if !g.is_connected() {
        return Err(ColouringError::NotConnected);
    }
    let mut col = Colouring::new(g.id_bound());
    let n = g.vertex_count();
    if n == 0 {
        return Ok(col);
    }
    let delta = g.max_degree().unwrap_or(0);
    if g.edge_count() == n * (n - 1) / 2 {
        for (i, v) in g.vertices().enumerate() {
            col.set(v, i as Colour + 1);
        }
        return Ok(col);
    }
    if delta <= 2 {
        if let Some(c) = two_colour(g) {
            return Ok(c);
        }
        return Ok(odd_cycle(g));
    }
    if let Some(low) = g.vertices().find(|&v| g.degree(v) < delta) {
        greedy_towards(g, low, &[], &mut col);
        return Ok(col);
    }
    if let Some(&cut) = g.cut_vertices().first() {
        colour_around_cut(g, cut, &mut col)?;
        return Ok(col);
    }
    let (v, x, y) = regular_triple(g).expect("2-connected regular non-complete graph has a triple");
    col.set(x, 1);
    col.set(y, 1);
    greedy_towards(g, v, &[x, y], &mut col);
    Ok(col)
}

/// Greedy colouring in reverse BFS order from `root`, skipping `skip`
/// (already coloured). Each vertex other than `root` still has its BFS parent
/// uncoloured when it is coloured.
fn greedy_towards(g: &Graph, root: Vertex, skip: &[Vertex], col: &mut Colouring) {
    let mut order = vec![root];
    let mut seen = vec![false; g.id_bound()];
    seen[root] = true;
    for &s in skip {
        seen[s] = true;
    }
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for &w in g.neighbours(v) {
            if !seen[w] {
                seen[w] = true;
                order.push(w);
            }
        }
    }
    for &v in order.iter().rev() {
        let mut c = 1;
        while g.neighbours(v).iter().any(|&w| col.get(w) == Some(c)) {
            c += 1;
        }
        col.set(v, c);
    }
}

fn odd_cycle(g: &Graph) -> Colouring {
    let mut col = Colouring::new(g.id_bound());
    let start = g.vertices().next().unwrap();
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = g.neighbours(start)[0];
    while cur != start {
        order.push(cur);
        let next = g
            .neighbours(cur)
            .iter()
            .copied()
            .find(|&w| w != prev)
            .unwrap();
        prev = cur;
        cur = next;
    }
    for (i, &v) in order.iter().enumerate() {
        let c = if i + 1 == order.len() {
            3
        } else {
            1 + (i % 2) as Colour
        };
        col.set(v, c);
    }
    col
}

/// Colours each `G[C ∪ {cut}]` separately, where `C` ranges over the
/// components of `G - cut`, and aligns the colour of `cut`.
fn colour_around_cut(g: &Graph, cut: Vertex, col: &mut Colouring) -> Result<(), ColouringError> {
    for comp in g.components_avoiding(&[cut]) {
        let mut part = comp.clone();
        part.push(cut);
        let h = g.induced_subgraph(&part);
        let mut sub = Colouring::new(g.id_bound());
        // cut has neighbours outside this part, so its degree in h is below Δ.
        greedy_towards(&h, cut, &[], &mut sub);
        let c = sub.get(cut).unwrap();
        if c != 1 {
            sub.swap_on(&part, c, 1);
        }
        for &v in &comp {
            col.set(v, sub.get(v).unwrap());
        }
    }
    col.set(cut, 1);
    Ok(())
}

/// Smallest `(v, x, y)` with `x, y ∈ N(v)` non-adjacent and `G - {x, y}`
/// connected.
fn regular_triple(g: &Graph) -> Option<(Vertex, Vertex, Vertex)> {
    for v in g.vertices() {
        let nb = g.neighbours(v);
        for (i, &x) in nb.iter().enumerate() {
            for &y in &nb[i + 1..] {
                if g.has_edge(x, y) {
                    continue;
                }
                if connected_without(g, x, y) {
                    return Some((v, x, y));
                }
            }
        }
    }
    None
}

fn connected_without(g: &Graph, x: Vertex, y: Vertex) -> bool {
    let mut seen = vec![false; g.id_bound()];
    seen[x] = true;
    seen[y] = true;
    let Some(s) = g.vertices().find(|&v| !seen[v]) else {
        return true;
    };
    seen[s] = true;
    let mut queue = VecDeque::from([s]);
    let mut count = 1;
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbours(v) {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                queue.push_back(w);
            }
        }
    }
    count + 2 == g.vertex_count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(g: &Graph, expected: usize) {
        let c = brooks_colour(g).unwrap();
        assert!(c.is_proper(g));
        assert!(
            c.colours_used(g) <= expected,
            "{:?} used {}",
            g,
            c.colours_used(g)
        );
        assert!(g.vertices().all(|v| c.get(v).unwrap() as usize <= expected));
    }

    #[test]
    fn exceptions() {
        let c = brooks_colour(&Graph::complete(4)).unwrap();
        assert_eq!(c.colours_used(&Graph::complete(4)), 4);
        let c = brooks_colour(&Graph::cycle(5)).unwrap();
        assert_eq!(c.colours_used(&Graph::cycle(5)), 3);
        check(&Graph::cycle(6), 2);
        check(&Graph::path(5), 2);
        check(&Graph::empty(1), 1);
    }

    #[test]
    fn cubic_cases() {
        check(&super::super::tests::petersen(), 3);
        // K_{3,3}
        let mut e = Vec::new();
        for a in 0..3 {
            for b in 3..6 {
                e.push((a, b));
            }
        }
        check(&Graph::from_edges(6, &e), 3);
        // Prism.
        let prism = Graph::from_edges(
            6,
            &[
                (0, 1),
                (1, 2),
                (0, 2),
                (3, 4),
                (4, 5),
                (3, 5),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        );
        check(&prism, 3);
    }

    #[test]
    fn regular_with_cut_vertex() {
        // Two K_5 minus an edge, both missing edges' endpoints tied to a new
        // vertex: 4-regular with a cut vertex.
        let mut e = Vec::new();
        for off in [0, 5] {
            for a in 0..5 {
                for b in a + 1..5 {
                    if (a, b) != (0, 1) {
                        e.push((off + a, off + b));
                    }
                }
            }
            e.push((10, off));
            e.push((10, off + 1));
        }
        let g = Graph::from_edges(11, &e);
        assert!(g.vertices().all(|v| g.degree(v) == 4));
        check(&g, 4);
    }

    #[test]
    fn rejects_disconnected() {
        assert_eq!(
            brooks_colour(&Graph::empty(2)),
            Err(ColouringError::NotConnected)
        );
    }
}
