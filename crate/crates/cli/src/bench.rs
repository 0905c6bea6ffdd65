//! Scaling benchmark: deterministic bounded-degree instances built in linear
//! time, the solver timed alone. Parsing, construction, and verification all
//! stay outside the timed region.

use std::io::Write;
use std::time::Instant;

use lcst_core::{
    banded_proper_model, banded_strongly_chordal, intersection_graph, lcst_proper_circular_arc,
    lcst_strongly_chordal,
};

fn median(mut xs: Vec<u128>) -> u128 {
    xs.sort_unstable();
    xs[xs.len() / 2]
}

pub enum BenchClass {
    StronglyChordal,
    ProperArc,
}

/// One CSV row per size: `n,m,nanoseconds`, the time being the median of
/// `runs` solver invocations after one warm-up.
pub fn run_bench(
    class: &BenchClass,
    sizes: &[usize],
    width: usize,
    runs: usize,
    out: &mut dyn Write,
) -> std::io::Result<()> {
    writeln!(out, "n,m,nanoseconds")?;
    for &n in sizes {
        match class {
            BenchClass::StronglyChordal => {
                let (g, order) = banded_strongly_chordal(n, width);
                let mut samples = Vec::with_capacity(runs);
                let _warm = lcst_strongly_chordal(&g, &order);
                for _ in 0..runs {
                    let start = Instant::now();
                    let outcome = lcst_strongly_chordal(&g, &order);
                    samples.push(start.elapsed().as_nanos());
                    std::hint::black_box(outcome);
                }
                writeln!(out, "{},{},{}", n, g.num_edges(), median(samples))?;
            }
            BenchClass::ProperArc => {
                let m = banded_proper_model(n, width);
                let edge_count = intersection_graph(&m)
                    .expect("bench models are valid")
                    .0
                    .num_edges();
                let mut samples = Vec::with_capacity(runs);
                let _warm = lcst_proper_circular_arc(&m);
                for _ in 0..runs {
                    let start = Instant::now();
                    let outcome = lcst_proper_circular_arc(&m);
                    samples.push(start.elapsed().as_nanos());
                    std::hint::black_box(outcome.expect("bench models are valid"));
                }
                writeln!(out, "{},{},{}", n, edge_count, median(samples))?;
            }
        }
    }
    Ok(())
}
