//! Brute-force ground truth: spanning-tree enumeration, exhaustive LCST
//! search, and minimum vertex cuts. Everything here is correctness-first and
//! only meant for small instances.

use crate::error::{Error, Result};
use crate::graph::{
    is_locally_connected_spanning_tree, Graph, NoReason, SpanningTree, TreeOutcome,
};

/// Oracles refuse graphs larger than this unless given an explicit bound.
pub const DEFAULT_ORACLE_BOUND: usize = 10;

#[derive(Clone, Copy)]
struct MultiEdge {
    // current endpoint labels (change under contraction)
    u: usize,
    v: usize,
    // original endpoints, what the emitted tree records
    orig: (usize, usize),
}

fn connected_with(n: usize, alive: &[bool], vcount: usize, edges: &[MultiEdge]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut parts = vcount;
    for e in edges {
        let (ru, rv) = (find(&mut parent, e.u), find(&mut parent, e.v));
        if ru != rv {
            parent[ru] = rv;
            parts -= 1;
        }
    }
    debug_assert!(alive.iter().filter(|&&a| a).count() == vcount);
    parts == 1
}

/// Contraction/deletion recursion. Returns false if the visitor stopped.
fn visit_rec(
    n: usize,
    alive: &mut Vec<bool>,
    vcount: usize,
    edges: &[MultiEdge],
    chosen: &mut Vec<(usize, usize)>,
    f: &mut impl FnMut(&[(usize, usize)]) -> bool,
) -> bool {
    if vcount == 1 {
        return f(chosen);
    }
    if edges.is_empty() {
        return true; // disconnected residue, no trees down here
    }
    let e = edges[0];

    // Branch 1: trees containing e. Contract v into u.
    let contracted: Vec<MultiEdge> = edges[1..]
        .iter()
        .filter_map(|x| {
            let mut x = *x;
            if x.u == e.v {
                x.u = e.u;
            }
            if x.v == e.v {
                x.v = e.u;
            }
            (x.u != x.v).then_some(x)
        })
        .collect();
    alive[e.v] = false;
    chosen.push(e.orig);
    let keep_going = visit_rec(n, alive, vcount - 1, &contracted, chosen, f);
    chosen.pop();
    alive[e.v] = true;
    if !keep_going {
        return false;
    }

    // Branch 2: trees avoiding e. Prune if deletion disconnects.
    let rest = &edges[1..];
    if connected_with(n, alive, vcount, rest) && !visit_rec(n, alive, vcount, rest, chosen, f) {
        return false;
    }
    true
}

/// Calls `f` once per spanning tree of `g`, each exactly once; `f` returns
/// false to stop early. Yields nothing on disconnected input.
pub fn visit_spanning_trees(g: &Graph, mut f: impl FnMut(&SpanningTree) -> bool) {
    let n = g.n();
    if n == 0 || !g.is_connected() {
        return;
    }
    let edges: Vec<MultiEdge> = g
        .edges()
        .map(|(u, v)| MultiEdge { u, v, orig: (u, v) })
        .collect();
    let mut alive = vec![true; n];
    let mut chosen = Vec::with_capacity(n.saturating_sub(1));
    visit_rec(n, &mut alive, n, &edges, &mut chosen, &mut |picked| {
        f(&SpanningTree::new(n, picked.to_vec()))
    });
}

/// Collects every spanning tree of `g`, failing once more than `cap` trees
/// appear. Disconnected graphs yield an empty list.
pub fn enumerate_spanning_trees(g: &Graph, cap: usize) -> Result<Vec<SpanningTree>> {
    let mut trees = Vec::new();
    let mut overflow = false;
    visit_spanning_trees(g, |t| {
        if trees.len() == cap {
            overflow = true;
            return false;
        }
        trees.push(t.clone());
        true
    });
    if overflow {
        return Err(Error::TreeCapExceeded { cap });
    }
    Ok(trees)
}

/// Exhaustive LCST search with the default size bound.
pub fn lcst_bruteforce(g: &Graph) -> Result<TreeOutcome> {
    lcst_bruteforce_bounded(g, DEFAULT_ORACLE_BOUND)
}

/// Exhaustive LCST search: the first enumerated spanning tree passing the
/// verifier, or an `Exhausted` refusal whose witness lists every vertex.
pub fn lcst_bruteforce_bounded(g: &Graph, bound: usize) -> Result<TreeOutcome> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > bound {
        return Err(Error::OracleBound { n, bound });
    }
    let mut found = None;
    visit_spanning_trees(g, |t| {
        if is_locally_connected_spanning_tree(g, t) {
            found = Some(t.clone());
            false
        } else {
            true
        }
    });
    Ok(match found {
        Some(t) => TreeOutcome::Tree(t),
        None => TreeOutcome::no(NoReason::Exhausted, (0..n).collect()),
    })
}

/// Size of the smallest vertex set whose removal disconnects `g`, by
/// increasing-size subset search. Disconnected graphs give 0; complete
/// graphs give n-1 by convention.
pub fn min_vertex_cut_bruteforce(g: &Graph) -> Result<usize> {
    min_vertex_cut_bounded(g, DEFAULT_ORACLE_BOUND)
}

pub fn min_vertex_cut_bounded(g: &Graph, bound: usize) -> Result<usize> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > bound {
        return Err(Error::OracleBound { n, bound });
    }
    if !g.is_connected() {
        return Ok(0);
    }
    if g.num_edges() == n * (n - 1) / 2 {
        return Ok(n.saturating_sub(1));
    }
    for size in 1..n {
        let mut subset = Vec::with_capacity(size);
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != size {
                continue;
            }
            subset.clear();
            subset.extend((0..n).filter(|&v| mask >> v & 1 == 1));
            if g.is_separating_set(&subset)? {
                return Ok(size);
            }
        }
    }
    unreachable!("non-complete connected graphs have a separating set")
}

/// Spanning-tree count via the integer matrix-tree determinant, evaluated
/// with fraction-free elimination. Independent of the enumerator.
pub fn kirchhoff_tree_count(g: &Graph) -> u128 {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    if n == 1 {
        return 1;
    }
    let d = n - 1;
    let mut m = vec![vec![0i128; d]; d];
    for v in 1..n {
        m[v - 1][v - 1] = g.degree(v) as i128;
        for &w in g.neighbors(v) {
            if w >= 1 {
                m[v - 1][w - 1] = -1;
            }
        }
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..d {
        if m[k][k] == 0 {
            let Some(swap) = (k + 1..d).find(|&r| m[r][k] != 0) else {
                return 0;
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..d {
            for j in k + 1..d {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    (sign * m[d - 1][d - 1]) as u128
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::corpus::{
        bowtie, complete as k, cycle_graph as cycle, diamond, path_graph as path, three_sun,
    };

    #[test]
    fn known_tree_counts() {
        assert_eq!(enumerate_spanning_trees(&k(3), 100).unwrap().len(), 3);
        assert_eq!(enumerate_spanning_trees(&cycle(4), 100).unwrap().len(), 4);
        assert_eq!(enumerate_spanning_trees(&k(4), 100).unwrap().len(), 16);
        assert_eq!(enumerate_spanning_trees(&diamond(), 100).unwrap().len(), 8);
    }

    #[test]
    fn enumeration_yields_each_tree_once() {
        use std::collections::BTreeSet;
        let g = diamond();
        let mut seen = BTreeSet::new();
        for t in enumerate_spanning_trees(&g, 100).unwrap() {
            let mut key: Vec<(usize, usize)> = t
                .edges()
                .iter()
                .map(|&(u, v)| (u.min(v), u.max(v)))
                .collect();
            key.sort_unstable();
            assert!(seen.insert(key), "duplicate tree");
            assert_eq!(t.edges().len(), 3);
        }
        assert_eq!(seen.len(), 8);
    }

    #[test]
    fn enumeration_edge_cases() {
        let disconnected = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(enumerate_spanning_trees(&disconnected, 10)
            .unwrap()
            .is_empty());
        assert_eq!(
            enumerate_spanning_trees(&k(4), 5),
            Err(Error::TreeCapExceeded { cap: 5 })
        );
        let single = Graph::new(1, &[]).unwrap();
        let trees = enumerate_spanning_trees(&single, 10).unwrap();
        assert_eq!(trees.len(), 1);
        assert!(trees[0].edges().is_empty());
    }

    #[test]
    fn counts_match_matrix_tree_determinant() {
        let graphs: Vec<Graph> = vec![
            k(3),
            k(4),
            k(5),
            k(6),
            cycle(4),
            cycle(7),
            diamond(),
            three_sun(),
            path(5),
            Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (1, 3)]).unwrap(),
        ];
        for g in &graphs {
            let listed = enumerate_spanning_trees(g, 2_000_000).unwrap().len() as u128;
            assert_eq!(listed, kirchhoff_tree_count(g));
        }
    }

    #[test]
    fn bruteforce_lcst_answers() {
        assert!(lcst_bruteforce(&k(4)).unwrap().is_tree());
        let c4 = lcst_bruteforce(&cycle(4)).unwrap();
        assert!(matches!(
            c4,
            TreeOutcome::No {
                reason: NoReason::Exhausted,
                ..
            }
        ));
        let d = lcst_bruteforce(&diamond()).unwrap();
        let t = d.tree().expect("diamond has an LCST");
        assert!(is_locally_connected_spanning_tree(&diamond(), t));
    }

    #[test]
    fn bruteforce_respects_bound() {
        let big = path(11);
        assert_eq!(
            lcst_bruteforce(&big),
            Err(Error::OracleBound { n: 11, bound: 10 })
        );
        assert!(lcst_bruteforce_bounded(&big, 11).is_ok());
    }

    #[test]
    fn bruteforce_tree_implies_biconnected() {
        // A graph with a locally connected spanning tree is 2-connected.
        let graphs = vec![k(3), k(4), k(5), diamond(), cycle(5), path(4), three_sun()];
        for g in graphs {
            if lcst_bruteforce(&g).unwrap().is_tree() {
                assert!(g.is_biconnected());
            }
        }
    }

    #[test]
    fn min_cut_values() {
        assert_eq!(min_vertex_cut_bruteforce(&path(3)).unwrap(), 1);
        assert_eq!(min_vertex_cut_bruteforce(&k(4)).unwrap(), 3);
        assert_eq!(min_vertex_cut_bruteforce(&cycle(4)).unwrap(), 2);
        assert_eq!(min_vertex_cut_bruteforce(&diamond()).unwrap(), 2);
        let disconnected = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(min_vertex_cut_bruteforce(&disconnected).unwrap(), 0);
    }

    #[test]
    fn biconnected_agrees_with_min_cut() {
        let graphs = vec![
            k(3),
            k(4),
            path(3),
            path(6),
            cycle(4),
            cycle(6),
            diamond(),
            three_sun(),
            bowtie(),
        ];
        for g in graphs {
            let expected =
                g.n() >= 3 && g.is_connected() && min_vertex_cut_bruteforce(&g).unwrap() >= 2;
            assert_eq!(g.is_biconnected(), expected);
        }
    }
}
