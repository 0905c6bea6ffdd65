//! Acceptance suite: one test per release criterion, each printing a
//! PASS line with its measured numbers (`--nocapture` shows them).
//!
//! Run with `cargo test -p lcst-core --test acceptance -- --nocapture`.

use std::time::{Duration, Instant};

use lcst_core::gen::corpus;
use lcst_core::*;

/// Deterministic spread of strongly chordal instances; retries seeds whose
/// generation budget runs out (none do at these sizes, but the contract
/// allows it).
fn chordal_instances(
    count: usize,
    n_of: impl Fn(u64) -> usize,
    density_of: impl Fn(u64) -> f64,
) -> Vec<(Graph, VertexOrder)> {
    let mut out = Vec::with_capacity(count);
    let mut seed = 0u64;
    while out.len() < count {
        let cfg = GenConfig::new(n_of(seed), seed, density_of(seed));
        if let Ok(pair) = gen_strongly_chordal(&cfg) {
            out.push(pair);
        }
        seed += 1;
    }
    out
}

#[test]
fn criterion_1_two_connectivity_characterizes_solvability() {
    let start = Instant::now();
    let instances = chordal_instances(
        500,
        |s| 5 + (s as usize * 7) % 56,
        |s| (s % 10) as f64 / 10.0,
    );
    let mut trees = 0;
    for (g, order) in &instances {
        let outcome = lcst_strongly_chordal(g, order);
        assert_eq!(
            outcome.is_tree(),
            g.is_biconnected(),
            "solver decision must match 2-connectivity on {g:?}"
        );
        if let TreeOutcome::Tree(t) = &outcome {
            trees += 1;
            assert!(
                is_locally_connected_spanning_tree(g, t),
                "produced tree must verify on {g:?}"
            );
        }
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(10),
        "criterion 1 budget exceeded: {elapsed:?}"
    );
    println!(
        "criterion 1 PASS: 500 instances (n in 5..=60), {trees} trees, 0 mismatches, {elapsed:?}"
    );
}

#[test]
fn criterion_2_oracle_equivalence_strongly_chordal() {
    let start = Instant::now();
    let mut instances = chordal_instances(250, |s| 3 + (s as usize % 5), |s| (s % 10) as f64 / 10.0);
    // hand corpus members of the class (the 3-sun has no strong elimination
    // order, so it is not an instance of this solver)
    for (_, g) in corpus::chordal_corpus() {
        if g.n() <= 7 {
            if let Some(order) = find_seo_naive(&g) {
                instances.push((g, order));
            }
        }
    }
    let total = instances.len();
    assert!(total >= 200);
    for (g, order) in &instances {
        let fast = lcst_strongly_chordal(g, order);
        let slow = lcst_bruteforce(g).expect("instances stay under the oracle bound");
        assert_eq!(
            fast.is_tree(),
            slow.is_tree(),
            "solver and oracle disagree on {g:?} with order {:?}",
            order.as_slice()
        );
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(60),
        "criterion 2 budget exceeded: {elapsed:?}"
    );
    println!("criterion 2 PASS: {total} instances (n <= 7), 0 mismatches, {elapsed:?}");
}

#[test]
fn criterion_3_oracle_equivalence_proper_circular_arc() {
    let start = Instant::now();
    let mut trees = 0;
    let mut refusals = 0;
    for seed in 0..500u64 {
        let n = 3 + (seed as usize % 7);
        let density = ((seed / 7) % 11) as f64 / 10.0;
        let m = gen_proper_circular_arc_model(&GenConfig::new(n, seed, density));
        let (g, _) = intersection_graph(&m).unwrap();
        let fast = lcst_proper_circular_arc(&m).expect("generated models are valid");
        let slow = lcst_bruteforce(&g).expect("instances stay under the oracle bound");
        assert_eq!(
            fast.is_tree(),
            slow.is_tree(),
            "solver and oracle disagree on seed {seed}: {:?}",
            m.arcs()
        );
        match &fast {
            TreeOutcome::Tree(t) => {
                trees += 1;
                assert!(is_locally_connected_spanning_tree(&g, t), "seed {seed}");
            }
            TreeOutcome::No { reason, witness } => {
                refusals += 1;
                if *reason == NoReason::FourLowDensityArcs {
                    let d = densities(&m).unwrap();
                    assert!(
                        d.iter().filter(|&&x| x <= 2).count() >= 4,
                        "refusal witness not recomputable on seed {seed}"
                    );
                    assert!(witness.iter().all(|&a| d[a] <= 2), "seed {seed}");
                }
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(120),
        "criterion 3 budget exceeded: {elapsed:?}"
    );
    println!(
        "criterion 3 PASS: 500 models (n <= 9), {trees} trees, {refusals} refusals, 0 mismatches, {elapsed:?}"
    );
}

#[test]
fn criterion_4_residual_degrees_decide_k_connectivity() {
    let start = Instant::now();
    let mut orders_checked = 0usize;
    let mut graphs_checked = 0usize;
    for (name, g) in corpus::chordal_corpus() {
        let n = g.n();
        assert!(n <= 9, "corpus graph {name} too large for the oracle");
        graphs_checked += 1;
        let min_cut = min_vertex_cut_bruteforce(&g).unwrap();
        let mut current: Vec<usize> = Vec::with_capacity(n);
        let mut used = vec![false; n];
        // walk every permutation of the vertices
        fn visit(
            g: &Graph,
            name: &str,
            min_cut: usize,
            current: &mut Vec<usize>,
            used: &mut Vec<bool>,
            orders_checked: &mut usize,
        ) {
            let n = g.n();
            if current.len() == n {
                let order = VertexOrder::new(current.clone()).unwrap();
                if is_perfect_elimination_order(g, &order).unwrap() {
                    *orders_checked += 1;
                    for k in 1..=3.min(n - 1) {
                        let fast = chordal_k_connected(g, &order, k).unwrap();
                        assert_eq!(
                            fast,
                            min_cut >= k,
                            "{name}: k={k} order {:?}",
                            order.as_slice()
                        );
                    }
                }
                return;
            }
            for v in 0..n {
                if !used[v] {
                    used[v] = true;
                    current.push(v);
                    visit(g, name, min_cut, current, used, orders_checked);
                    current.pop();
                    used[v] = false;
                }
            }
        }
        visit(&g, name, min_cut, &mut current, &mut used, &mut orders_checked);
    }
    let elapsed = start.elapsed();
    println!(
        "criterion 4 PASS: {graphs_checked} chordal graphs, {orders_checked} valid orders x k in 1..=3, 0 mismatches, {elapsed:?}"
    );
}

#[test]
fn criterion_5_closest_neighbors_match_their_definition() {
    let start = Instant::now();
    let mut instances: Vec<(Graph, VertexOrder)> = Vec::new();
    let mut seed = 0u64;
    while instances.iter().filter(|(g, _)| g.is_connected()).count() < 500 {
        let n = 2 + (seed as usize % 29);
        let cfg = GenConfig::new(n, seed, (seed % 11) as f64 / 10.0);
        let (g, order, _) = gen_interval_graph(&cfg);
        if g.is_connected() {
            instances.push((g, order));
        } else {
            // the table is undefined here; the refusal must name a real
            // defect: a non-last vertex with no later neighbor
            let err = compute_closest_neighbors(&g, &order).unwrap_err();
            let Error::NoLaterNeighbor { vertex } = err else {
                panic!("unexpected error {err:?}");
            };
            let pos = order.position_of(vertex);
            assert!(pos < g.n() - 1);
            assert!(g
                .neighbors(vertex)
                .iter()
                .all(|&w| order.position_of(w) < pos));
        }
        seed += 1;
    }
    instances.extend(chordal_instances(
        500,
        |s| 5 + (s as usize % 21),
        |s| (s % 10) as f64 / 10.0,
    ));
    let total = instances.len();
    let mut vertices_checked = 0usize;
    for (g, order) in &instances {
        let table = compute_closest_neighbors(g, order)
            .expect("connected instances have later neighbors everywhere");
        for i in 0..g.n() {
            let v = order.vertex_at(i);
            let expected = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&w| order.position_of(w) > i)
                .map(|w| {
                    let ell = ell_bruteforce(g, order, i, order.position_of(w)).unwrap();
                    (ell, order.position_of(w), w)
                })
                .min()
                .map(|(_, _, w)| w);
            assert_eq!(
                table.closest[v],
                expected,
                "vertex {v} in {g:?} with order {:?}",
                order.as_slice()
            );
            vertices_checked += 1;
        }
    }
    let elapsed = start.elapsed();
    println!(
        "criterion 5 PASS: {total} instances, {vertices_checked} vertices against the argmin definition, 0 mismatches, {elapsed:?}"
    );
}

#[test]
fn criterion_6_solvers_scale_linearly() {
    const SIZES: [usize; 4] = [100_000, 200_000, 400_000, 800_000];
    const WIDTH: usize = 4;
    const ROUNDS: usize = 7;
    const MAX_GROWTH: f64 = 2.5;

    let chordal: Vec<_> = SIZES
        .iter()
        .map(|&n| banded_strongly_chordal(n, WIDTH))
        .collect();
    let arcs: Vec<_> = SIZES.iter().map(|&n| banded_proper_model(n, WIDTH)).collect();

    // Rounds interleave the sizes so machine drift spreads evenly and each
    // measurement starts from a uniformly evicted cache.
    let mut chordal_samples = vec![Vec::with_capacity(ROUNDS); SIZES.len()];
    let mut arc_samples = vec![Vec::with_capacity(ROUNDS); SIZES.len()];
    for round in 0..=ROUNDS {
        for (i, (g, order)) in chordal.iter().enumerate() {
            let t0 = Instant::now();
            let outcome = std::hint::black_box(lcst_strongly_chordal(g, order));
            let dt = t0.elapsed().as_nanos();
            assert!(outcome.is_tree(), "banded instances are 2-connected");
            if round > 0 {
                // round 0 is warm-up
                chordal_samples[i].push(dt);
            }
        }
        for (i, m) in arcs.iter().enumerate() {
            let t0 = Instant::now();
            let outcome = std::hint::black_box(lcst_proper_circular_arc(m)).unwrap();
            let dt = t0.elapsed().as_nanos();
            assert!(outcome.is_tree(), "banded models are solvable");
            if round > 0 {
                arc_samples[i].push(dt);
            }
        }
    }

    for (label, samples) in [("strongly-chordal", chordal_samples), ("proper-arc", arc_samples)] {
        let medians: Vec<u128> = samples
            .into_iter()
            .map(|mut s| {
                s.sort_unstable();
                s[s.len() / 2]
            })
            .collect();
        for w in medians.windows(2) {
            let growth = w[1] as f64 / w[0] as f64;
            assert!(
                growth <= MAX_GROWTH,
                "{label}: time grew by {growth:.2} on one doubling of n+m (medians {medians:?})"
            );
        }
        let largest = Duration::from_nanos(medians[SIZES.len() - 1] as u64);
        assert!(
            largest < Duration::from_secs(2),
            "{label}: largest size took {largest:?}"
        );
        let ratios: Vec<String> = medians
            .windows(2)
            .map(|w| format!("{:.2}", w[1] as f64 / w[0] as f64))
            .collect();
        println!(
            "criterion 6 PASS ({label}): medians {:?} ms at n = 1e5..8e5, growth per doubling {:?}, largest {largest:?}",
            medians.iter().map(|&x| x / 1_000_000).collect::<Vec<_>>(),
            ratios
        );
    }
}

#[test]
fn criterion_7_desk_scale_witnesses() {
    // diamond with its strong elimination order: exactly the hub star
    let diamond = corpus::diamond();
    let order = VertexOrder::new(vec![1, 3, 0, 2]).unwrap();
    match lcst_strongly_chordal(&diamond, &order) {
        TreeOutcome::Tree(t) => {
            assert_eq!(t.edges(), &[(0, 2), (3, 0), (1, 0)]);
            assert!(is_locally_connected_spanning_tree(&diamond, &t));
        }
        no => panic!("diamond must yield the hub star, got {no:?}"),
    }

    // the cycle model: five arcs, every density 2
    let c5 = CircularArcModel::new(vec![(0, 3), (2, 5), (4, 7), (6, 9), (8, 1)]);
    match lcst_proper_circular_arc(&c5).unwrap() {
        TreeOutcome::No { reason, witness } => {
            assert_eq!(reason, NoReason::FourLowDensityArcs);
            assert_eq!(witness, vec![0, 1, 2, 3]);
        }
        TreeOutcome::Tree(_) => panic!("the C5 model has no locally connected spanning tree"),
    }

    // the 3-sun admits no strong elimination order
    assert_eq!(find_seo_naive(&corpus::three_sun()), None);

    println!("criterion 7 PASS: diamond star, C5 refusal, 3-sun rejection");
}
