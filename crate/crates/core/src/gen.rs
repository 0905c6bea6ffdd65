//! Seeded instance generators for both graph classes, plus the small hand
//! corpus the test suites share. Generators are pure functions of their
//! config: the same config always reproduces the same instance.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::arcs::{intersection_graph, CircularArcModel};
use crate::elimination::{find_seo_naive, VertexOrder};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Deterministic generator configuration. `edge_density` is a fraction in
/// [0, 1] whose meaning is class-specific (clique spread for chordal
/// instances, arc reach for circular models, interval overlap pressure for
/// interval instances).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GenConfig {
    pub n: usize,
    pub seed: u64,
    pub edge_density: f64,
}

impl GenConfig {
    pub fn new(n: usize, seed: u64, edge_density: f64) -> GenConfig {
        GenConfig {
            n,
            seed,
            edge_density,
        }
    }
}

/// Random interval family on a line, embedded on the circle with the wrap
/// segment left uncovered, so the first-opened arc always has density 1.
/// Returns the intersection graph, the order of arcs by increasing right
/// endpoint (a strong elimination order), and the model itself.
pub fn gen_interval_graph(cfg: &GenConfig) -> (Graph, VertexOrder, CircularArcModel) {
    let n = cfg.n;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let p_open = 0.30 + 0.55 * cfg.edge_density.clamp(0.0, 1.0);
    let mut head = vec![0usize; n];
    let mut tail = vec![0usize; n];
    let mut active: Vec<usize> = Vec::new();
    let mut next_id = 0usize;
    for pos in 0..2 * n {
        let must_open = active.is_empty() && next_id < n;
        let may_open = next_id < n;
        if must_open || (may_open && rng.random_bool(p_open)) {
            head[next_id] = pos;
            active.push(next_id);
            next_id += 1;
        } else {
            let idx = rng.random_range(0..active.len());
            let id = active.swap_remove(idx);
            tail[id] = pos;
        }
    }
    debug_assert!(active.is_empty());
    let model = CircularArcModel::new(head.into_iter().zip(tail.clone()).collect());
    let (graph, _) = intersection_graph(&model).expect("generated models are valid");
    let mut by_tail: Vec<usize> = (0..n).collect();
    by_tail.sort_unstable_by_key(|&a| tail[a]);
    let order = VertexOrder::new(by_tail).expect("tails are distinct");
    (graph, order, model)
}

/// Random chordal graph: shuffle the vertices into an intended elimination
/// order, then attach each vertex (walking the order backwards) to a clique
/// chosen inside an already-placed vertex's later neighborhood. The chosen
/// sets are cliques by induction, so the shuffled order is a perfect
/// elimination order.
///
/// Half the instances keep every early vertex at two or more later
/// neighbors, which makes them 2-connected; the rest attach freely and
/// usually pick up cut vertices, so both solver answers stay exercised.
fn random_chordal(n: usize, density: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut later_clique: Vec<Vec<usize>> = vec![Vec::new(); n];
    let p = density.clamp(0.0, 1.0);
    let keep_biconnected = rng.random_bool(0.5);
    for pos in (0..n.saturating_sub(1)).rev() {
        let v = order[pos];
        let anchor_end = if keep_biconnected && pos + 2 < n {
            n - 1 // not the last vertex, so the anchor's pool is nonempty
        } else {
            n
        };
        let anchor = order[rng.random_range(pos + 1..anchor_end)];
        let pool = later_clique[anchor].clone();
        let mut clique = vec![anchor];
        if keep_biconnected && !pool.is_empty() {
            let forced = pool[rng.random_range(0..pool.len())];
            clique.push(forced);
            for &w in &pool {
                if w != forced && rng.random_bool(p) {
                    clique.push(w);
                }
            }
        } else {
            for &w in &pool {
                if rng.random_bool(p) {
                    clique.push(w);
                }
            }
        }
        for &w in &clique {
            edges.push((v, w));
        }
        later_clique[v] = clique;
    }
    Graph::new(n, &edges).expect("construction stays in range")
}

/// Rejection-sampled strongly chordal instance: random chordal graphs are
/// drawn until the naive finder certifies one with a strong elimination
/// order, which is returned with the graph. Fails with a diagnostic if the
/// attempt budget runs out; callers retry with a fresh seed.
pub fn gen_strongly_chordal(cfg: &GenConfig) -> Result<(Graph, VertexOrder)> {
    const ATTEMPTS: usize = 64;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..ATTEMPTS {
        let g = random_chordal(cfg.n, cfg.edge_density, &mut rng);
        if let Some(order) = find_seo_naive(&g) {
            return Ok((g, order));
        }
    }
    Err(Error::GenBudgetExhausted { attempts: ATTEMPTS })
}

/// Builds the proper model whose arc at head-rank `i` covers exactly the
/// next `reach[i]` heads counterclockwise. Distinct endpoints come from
/// interleaving each gap's tails longest-arc-first; the family is proper
/// whenever consecutive reaches drop by at most 1 (cyclically), which every
/// caller must guarantee.
pub fn arc_model_from_reach(reach: &[usize]) -> CircularArcModel {
    let n = reach.len();
    debug_assert!(reach.iter().all(|&c| c < n.max(1)));
    debug_assert!((0..n).all(|i| reach[(i + 1) % n] + 1 >= reach[i]));
    let mut gap_tails: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in 0..n {
        gap_tails[(i + reach[i]) % n].push(i);
    }
    for tails in &mut gap_tails {
        // at most one arc of each reach lands in a gap, so this is total
        tails.sort_unstable_by(|&a, &b| reach[b].cmp(&reach[a]));
    }
    let mut head = vec![0usize; n];
    let mut tail = vec![0usize; n];
    let mut pos = 0usize;
    for g in 0..n {
        head[g] = pos;
        pos += 1;
        for &i in &gap_tails[g] {
            tail[i] = pos;
            pos += 1;
        }
    }
    CircularArcModel::new(head.into_iter().zip(tail).collect())
}

/// Random valid proper model: heads laid out in arc-id order, each arc
/// reaching past a base number of following heads with a random extra step.
/// `edge_density` scales the base reach from disjoint-ish arcs up to
/// near-complete families.
pub fn gen_proper_circular_arc_model(cfg: &GenConfig) -> CircularArcModel {
    let n = cfg.n;
    assert!(n >= 1, "models need at least one arc");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let base = (cfg.edge_density.clamp(0.0, 1.0) * n.saturating_sub(2) as f64).round() as usize;
    let reach: Vec<usize> = (0..n)
        .map(|_| (base + usize::from(rng.random_bool(0.5))).min(n - 1))
        .collect();
    arc_model_from_reach(&reach)
}

/// Banded graph: vertex v adjacent to the next `width` vertices. This is
/// the intersection graph of unit-length intervals in a row, so the
/// identity order is a strong elimination order (right endpoints ascend
/// with the vertex id). Built in linear time for scaling runs.
pub fn banded_strongly_chordal(n: usize, width: usize) -> (Graph, VertexOrder) {
    let mut edges = Vec::with_capacity(n * width);
    for v in 0..n {
        for d in 1..=width {
            if v + d < n {
                edges.push((v, v + d));
            }
        }
    }
    let g = Graph::new(n, &edges).expect("banded edges are in range");
    (g, VertexOrder::identity(n))
}

/// Proper model with alternating reach `width`/`width+1`; all densities stay
/// at least `width + 1`. Built in linear time for scaling runs.
pub fn banded_proper_model(n: usize, width: usize) -> CircularArcModel {
    let w = width.min(n.saturating_sub(2)).max(usize::from(n > 1));
    let reach: Vec<usize> = (0..n).map(|i| (w + i % 2).min(n.saturating_sub(1))).collect();
    arc_model_from_reach(&reach)
}

/// Hand graphs shared across the suites.
pub mod corpus {
    use crate::graph::Graph;

    pub fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect();
        Graph::new(n, &edges).unwrap()
    }

    pub fn path_graph(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::new(n, &edges).unwrap()
    }

    pub fn cycle_graph(n: usize) -> Graph {
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((n - 1, 0));
        Graph::new(n, &edges).unwrap()
    }

    /// K4 minus the edge 1-3; the hub edge is 0-2.
    pub fn diamond() -> Graph {
        Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap()
    }

    /// Triangle 0,1,2 with 3 adjacent to {0,1}, 4 to {1,2}, 5 to {2,0}.
    /// Chordal, but admits no strong elimination order.
    pub fn three_sun() -> Graph {
        Graph::new(
            6,
            &[
                (0, 1),
                (1, 2),
                (2, 0),
                (3, 0),
                (3, 1),
                (4, 1),
                (4, 2),
                (5, 2),
                (5, 0),
            ],
        )
        .unwrap()
    }

    /// Two triangles sharing vertex 0.
    pub fn bowtie() -> Graph {
        Graph::new(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap()
    }

    /// Chordal graphs on up to 9 vertices, named.
    pub fn chordal_corpus() -> Vec<(&'static str, Graph)> {
        let mut list: Vec<(&'static str, Graph)> = vec![
            ("k3", complete(3)),
            ("k4", complete(4)),
            ("k5", complete(5)),
            ("k7", complete(7)),
            ("p3", path_graph(3)),
            ("p6", path_graph(6)),
            ("p9", path_graph(9)),
            ("diamond", diamond()),
            ("three-sun", three_sun()),
            ("bowtie", bowtie()),
            ("star8", Graph::new(8, &(1..8).map(|v| (0, v)).collect::<Vec<_>>()).unwrap()),
        ];
        // fan: path 1-2-...-8 plus a hub adjacent to everything
        let mut fan_edges: Vec<(usize, usize)> = (1..8).map(|v| (0, v)).collect();
        fan_edges.extend((2..8).map(|v| (v - 1, v)));
        list.push(("fan8", Graph::new(8, &fan_edges).unwrap()));
        // K5 minus one edge
        let k5e: Vec<(usize, usize)> = (0..5)
            .flat_map(|u| ((u + 1)..5).map(move |v| (u, v)))
            .filter(|&e| e != (0, 4))
            .collect();
        list.push(("k5-minus-edge", Graph::new(5, &k5e).unwrap()));
        // two K4 blocks glued on an edge
        list.push((
            "glued-k4",
            Graph::new(
                6,
                &[
                    (0, 1),
                    (0, 2),
                    (0, 3),
                    (1, 2),
                    (1, 3),
                    (2, 3),
                    (2, 4),
                    (2, 5),
                    (3, 4),
                    (3, 5),
                    (4, 5),
                ],
            )
            .unwrap(),
        ));
        list
    }
}
