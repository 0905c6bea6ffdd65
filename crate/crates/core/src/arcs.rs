//! Circular-arc intersection models on a discrete circle, densities, the
//! interval reduction, and the locally connected spanning tree construction
//! for proper models.
//!
//! A model with n arcs lives on a circle of 2n integer positions; every
//! position is exactly one arc endpoint. An arc `[h, t]` runs
//! counterclockwise (increasing position mod 2n) from its head to its tail
//! and contains both.

use crate::elimination::{lcst_strongly_chordal, VertexOrder};
use crate::error::{Error, Result};
use crate::graph::{Graph, NoReason, SpanningTree, TreeOutcome};

/// Family of arcs, indexed by arc id `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircularArcModel {
    arcs: Vec<(usize, usize)>,
}

impl CircularArcModel {
    /// Wraps raw `(head, tail)` pairs without judging them; run
    /// [`validate_arc_model`] to get a report on an untrusted model.
    pub fn new(arcs: Vec<(usize, usize)>) -> CircularArcModel {
        CircularArcModel { arcs }
    }

    pub fn n(&self) -> usize {
        self.arcs.len()
    }

    pub fn circle_size(&self) -> usize {
        2 * self.arcs.len()
    }

    pub fn head(&self, a: usize) -> usize {
        self.arcs[a].0
    }

    pub fn tail(&self, a: usize) -> usize {
        self.arcs[a].1
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// Counterclockwise span from head to tail. Positions are reduced mod
    /// the circle size, so this stays total on junk input; the validator is
    /// what reports out-of-range endpoints.
    fn span(&self, a: usize) -> usize {
        let c = self.circle_size();
        (self.tail(a) % c + c - self.head(a) % c) % c
    }

    /// Closed membership: reaching `x` counterclockwise from the head no
    /// later than the tail.
    pub fn contains_point(&self, a: usize, x: usize) -> bool {
        let c = self.circle_size();
        (x % c + c - self.head(a) % c) % c <= self.span(a)
    }

    /// Does arc `outer` contain arc `inner` entirely?
    pub fn arc_contains_arc(&self, outer: usize, inner: usize) -> bool {
        if outer == inner {
            return false;
        }
        let c = self.circle_size();
        let offset = (self.head(inner) + c - self.head(outer)) % c;
        offset + self.span(inner) <= self.span(outer)
    }

    /// Arcs sharing at least one point of the circle. With all endpoints
    /// distinct this is equivalent to one head lying on the other arc.
    pub fn arcs_overlap(&self, a: usize, b: usize) -> bool {
        a != b && (self.contains_point(a, self.head(b)) || self.contains_point(b, self.head(a)))
    }

    /// The same family with every endpoint shifted counterclockwise.
    pub fn rotated(&self, shift: usize) -> CircularArcModel {
        let c = self.circle_size();
        CircularArcModel {
            arcs: self
                .arcs
                .iter()
                .map(|&(h, t)| ((h + shift) % c, (t + shift) % c))
                .collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationCode {
    PositionOutOfRange,
    DuplicateEndpoint,
    FullCircle,
    Containment,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub code: ViolationCode,
    /// Arc ids involved; for containment, outer arc first.
    pub arcs: Vec<usize>,
}

/// Outcome of [`validate_arc_model`]: `violations` is empty exactly when the
/// model is both valid and proper.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelReport {
    pub valid: bool,
    pub proper: bool,
    pub violations: Vec<Violation>,
}

/// Full model check: endpoint range and distinctness, degenerate arcs, and
/// the quadratic pairwise containment scan for properness.
pub fn validate_arc_model(m: &CircularArcModel) -> ModelReport {
    let n = m.n();
    let c = m.circle_size();
    let mut violations = Vec::new();
    for a in 0..n {
        if m.head(a) >= c || m.tail(a) >= c {
            violations.push(Violation {
                code: ViolationCode::PositionOutOfRange,
                arcs: vec![a],
            });
        } else if m.head(a) == m.tail(a) {
            violations.push(Violation {
                code: ViolationCode::FullCircle,
                arcs: vec![a],
            });
        }
    }
    let mut users: Vec<Vec<usize>> = vec![Vec::new(); c];
    for a in 0..n {
        for p in [m.head(a), m.tail(a)] {
            if p < c {
                users[p].push(a);
            }
        }
    }
    for p in 0..c {
        if users[p].len() > 1 {
            violations.push(Violation {
                code: ViolationCode::DuplicateEndpoint,
                arcs: users[p].clone(),
            });
        }
    }
    let valid = violations.is_empty();
    if valid {
        for outer in 0..n {
            for inner in 0..n {
                if m.arc_contains_arc(outer, inner) {
                    violations.push(Violation {
                        code: ViolationCode::Containment,
                        arcs: vec![outer, inner],
                    });
                }
            }
        }
    }
    let proper = valid && violations.is_empty();
    ModelReport {
        valid,
        proper,
        violations,
    }
}

/// Cheap linear validity check (range, distinctness, degeneracy) used as the
/// precondition gate of the model operations. Properness is not checked
/// here.
pub fn check_basic(m: &CircularArcModel) -> Result<()> {
    let n = m.n();
    let c = m.circle_size();
    let mut used = vec![false; c];
    for a in 0..n {
        let (h, t) = (m.head(a), m.tail(a));
        if h >= c || t >= c {
            return Err(Error::InvalidModel(format!(
                "arc {a} has an endpoint outside 0..{c}"
            )));
        }
        if h == t {
            return Err(Error::InvalidModel(format!(
                "arc {a} has coinciding endpoints"
            )));
        }
        for p in [h, t] {
            if used[p] {
                return Err(Error::InvalidModel(format!(
                    "position {p} is used by more than one endpoint"
                )));
            }
            used[p] = true;
        }
    }
    Ok(())
}

const NO_ARC: u32 = u32::MAX;

/// Which arc's head sits at each position (`NO_ARC` elsewhere), for valid
/// models.
fn head_positions(m: &CircularArcModel) -> Vec<u32> {
    assert!(m.n() < NO_ARC as usize, "arc tables are 32-bit indexed");
    let mut head_at = vec![NO_ARC; m.circle_size()];
    for a in 0..m.n() {
        head_at[m.head(a)] = a as u32;
    }
    head_at
}

/// Intersection graph of the arcs: one vertex per arc id, an edge where arcs
/// share a point. The mapping from arc id to vertex id is the identity and
/// is returned alongside.
pub fn intersection_graph(m: &CircularArcModel) -> Result<(Graph, Vec<usize>)> {
    check_basic(m)?;
    let n = m.n();
    let c = m.circle_size();
    let head_at = head_positions(m);
    let mut edges = Vec::new();
    for a in 0..n {
        let h = m.head(a);
        for off in 1..=m.span(a) {
            let b = head_at[(h + off) % c];
            if b != NO_ARC {
                edges.push((a, b as usize));
            }
        }
    }
    Ok((Graph::new(n, &edges)?, (0..n).collect()))
}

/// Densities: for each arc, how many arcs of the family contain its head,
/// counting itself. One incremental coverage sweep: the count changes by +1
/// at a head and by -1 one past a tail, since every position is exactly one
/// endpoint.
pub fn densities(m: &CircularArcModel) -> Result<Vec<usize>> {
    check_basic(m)?;
    let n = m.n();
    let c = m.circle_size();
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut delta = vec![0i8; c];
    let head_at = head_positions(m);
    for a in 0..n {
        delta[m.head(a)] += 1;
        delta[(m.tail(a) + 1) % c] -= 1;
    }
    let mut d = vec![0usize; n];
    let mut cover = (0..n).filter(|&a| m.contains_point(a, 0)).count() as i64;
    if head_at[0] != NO_ARC {
        d[head_at[0] as usize] = cover as usize;
    }
    for p in 1..c {
        cover += i64::from(delta[p]);
        if head_at[p] != NO_ARC {
            d[head_at[p] as usize] = cover as usize;
        }
    }
    Ok(d)
}

/// Arc ids in the order their heads appear counterclockwise, starting at
/// `start`'s head.
pub fn head_order(m: &CircularArcModel, start: usize) -> Result<VertexOrder> {
    check_basic(m)?;
    let n = m.n();
    if start >= n {
        return Err(Error::VertexOutOfRange { id: start, n });
    }
    let c = m.circle_size();
    let head_at = head_positions(m);
    let s = m.head(start);
    let mut order = Vec::with_capacity(n);
    for off in 0..c {
        let a = head_at[(s + off) % c];
        if a != NO_ARC {
            order.push(a as usize);
        }
    }
    VertexOrder::new(order)
}

/// Families with a density-1 arc are interval families: no other arc crosses
/// that head, so cutting the circle there straightens every arc into an
/// interval. Returns the intersection graph and the order of arcs by
/// increasing cut-relative tail, which is a strong elimination order.
pub fn reduce_to_interval(m: &CircularArcModel) -> Result<(Graph, VertexOrder)> {
    let d = densities(m)?;
    let cut_arc = d.iter().position(|&x| x == 1).ok_or(Error::NoUnitDensityArc)?;
    let n = m.n();
    let c = m.circle_size();
    let cut = m.head(cut_arc);
    let shifted_tail = |a: usize| (m.tail(a) + c - cut) % c;
    debug_assert!(
        (0..n).all(|a| (m.head(a) + c - cut) % c < shifted_tail(a)),
        "no arc crosses the cut point"
    );
    let mut by_tail: Vec<usize> = (0..n).collect();
    by_tail.sort_unstable_by_key(|&a| shifted_tail(a));
    let (graph, _) = intersection_graph(m)?;
    Ok((graph, VertexOrder::new(by_tail)?))
}

/// The single other arc containing a density-2 arc's head.
fn coverer(m: &CircularArcModel, u: usize) -> usize {
    (0..m.n())
        .find(|&x| x != u && m.contains_point(x, m.head(u)))
        .expect("a density-2 head is covered by exactly one other arc")
}

/// Hamiltonian path in head order from `start`. Sound whenever every
/// density is at least 2 and at most the first two arcs in the order have
/// density 2: each vertex is then adjacent to its one or two predecessors.
fn path_tree(m: &CircularArcModel, start: usize) -> Result<TreeOutcome> {
    let n = m.n();
    let c = m.circle_size();
    let head_at = head_positions(m);
    let mut edges = Vec::with_capacity(n - 1);
    let mut prev2 = usize::MAX;
    let mut prev = start;
    let s = m.head(start);
    for off in 1..c {
        let a = head_at[(s + off) % c];
        if a == NO_ARC {
            continue;
        }
        let cur = a as usize;
        debug_assert!(m.arcs_overlap(prev, cur), "head-consecutive arcs overlap");
        debug_assert!(
            prev2 == usize::MAX || m.arcs_overlap(prev2, cur),
            "density >= 3 forces the second predecessor to overlap"
        );
        edges.push((prev, cur));
        prev2 = prev;
        prev = cur;
    }
    Ok(TreeOutcome::Tree(SpanningTree::new(n, edges)))
}

/// Exactly two density-2 arcs.
fn two_low_density(m: &CircularArcModel, u1: usize, u2: usize) -> Result<TreeOutcome> {
    if m.arcs_overlap(u1, u2) {
        let v1 = if m.contains_point(u1, m.head(u2)) { u1 } else { u2 };
        return path_tree(m, v1);
    }
    let w1 = coverer(m, u1);
    let w2 = coverer(m, u2);
    if w1 == w2 {
        // one arc crosses both low-density heads and is therefore a cut
        // vertex of the intersection graph
        return Ok(TreeOutcome::no(NoReason::CutVertex, vec![w1]));
    }
    if !m.arcs_overlap(w1, w2) {
        return Ok(TreeOutcome::no(NoReason::MissingEdge, vec![w1, w2]));
    }
    let (v1, vk) = if m.contains_point(w1, m.head(w2)) {
        (w1, w2)
    } else {
        (w2, w1)
    };
    let order = head_order(m, v1)?;
    let n = m.n();
    let k = order.position_of(vk);
    let is_nbr_of_both =
        |x: usize| m.arcs_overlap(x, v1) && m.arcs_overlap(x, vk);
    let Some(z) = (k + 1..n).find(|&p| is_nbr_of_both(order.vertex_at(p))) else {
        return Ok(TreeOutcome::no(NoReason::NoCommonNeighbor, vec![v1, vk]));
    };
    let vz = order.vertex_at(z);
    // double star: v1 carries everything up to position k plus vz, vz
    // carries the rest
    let mut edges = Vec::with_capacity(n - 1);
    for p in 1..=k {
        debug_assert!(m.arcs_overlap(v1, order.vertex_at(p)));
        edges.push((v1, order.vertex_at(p)));
    }
    edges.push((v1, vz));
    for p in k + 1..n {
        if p == z {
            continue;
        }
        debug_assert!(m.arcs_overlap(vz, order.vertex_at(p)));
        edges.push((vz, order.vertex_at(p)));
    }
    Ok(TreeOutcome::Tree(SpanningTree::new(n, edges)))
}

/// Exactly three density-2 arcs.
fn three_low_density(m: &CircularArcModel, low: &[usize]) -> Result<TreeOutcome> {
    let w: Vec<usize> = low.iter().map(|&u| coverer(m, u)).collect();
    for i in 0..3 {
        for j in i + 1..3 {
            if w[i] == w[j] {
                return Ok(TreeOutcome::no(NoReason::CutVertex, vec![w[i]]));
            }
        }
    }
    let mut pairs = [
        (w[0].min(w[1]), w[0].max(w[1])),
        (w[0].min(w[2]), w[0].max(w[2])),
        (w[1].min(w[2]), w[1].max(w[2])),
    ];
    pairs.sort_unstable();
    for &(a, b) in &pairs {
        if !m.arcs_overlap(a, b) {
            return Ok(TreeOutcome::no(NoReason::MissingEdge, vec![a, b]));
        }
    }
    // a coverer pair separates the graph unless the two heads are cyclically
    // consecutive among all heads
    let order = head_order(m, 0)?;
    let n = m.n();
    let succ = |a: usize| order.vertex_at((order.position_of(a) + 1) % n);
    let consecutive = |a: usize, b: usize| succ(a) == b || succ(b) == a;
    let Some(&(p, q)) = pairs.iter().find(|&&(a, b)| consecutive(a, b)) else {
        return Ok(TreeOutcome::no(NoReason::AllPairsSeparating, w));
    };
    let center = *w.iter().find(|&&x| x != p && x != q).expect("three coverers");
    let order = head_order(m, center)?;
    debug_assert_eq!(
        order.position_of(p).abs_diff(order.position_of(q)),
        1,
        "the chosen pair stays adjacent in the rotated order"
    );
    let mut edges = Vec::with_capacity(n - 1);
    for pos in 1..n {
        debug_assert!(m.arcs_overlap(center, order.vertex_at(pos)));
        edges.push((center, order.vertex_at(pos)));
    }
    Ok(TreeOutcome::Tree(SpanningTree::new(n, edges)))
}

/// Locally connected spanning tree of a proper circular-arc model. The model
/// must be basically valid; properness is trusted (see the validated
/// variant). Dispatch: a density-1 arc sends the instance through the
/// interval reduction to the strongly chordal solver; otherwise four or more
/// density-2 arcs force a refusal, and the 0/1, 2, and 3 density-2 cases are
/// built directly on the model in linear time.
pub fn lcst_proper_circular_arc(m: &CircularArcModel) -> Result<TreeOutcome> {
    check_basic(m)?;
    let n = m.n();
    if n < 3 {
        return Err(Error::TooFewVertices { n });
    }
    let d = densities(m)?;
    if d.contains(&1) {
        let (graph, seo) = reduce_to_interval(m)?;
        return Ok(lcst_strongly_chordal(&graph, &seo));
    }
    let low: Vec<usize> = (0..n).filter(|&a| d[a] == 2).collect();
    if low.len() >= 4 {
        return Ok(TreeOutcome::no(
            NoReason::FourLowDensityArcs,
            low[..4].to_vec(),
        ));
    }
    match low.len() {
        0 => path_tree(m, 0),
        1 => path_tree(m, coverer(m, low[0])),
        2 => two_low_density(m, low[0], low[1]),
        3 => three_low_density(m, &low),
        _ => unreachable!(),
    }
}

/// [`lcst_proper_circular_arc`] behind the full validator: an invalid or
/// improper model is an input error, distinct from the algorithmic refusal.
pub fn lcst_proper_circular_arc_validated(m: &CircularArcModel) -> Result<TreeOutcome> {
    let report = validate_arc_model(m);
    if !report.valid {
        let v = &report.violations[0];
        return Err(Error::InvalidModel(format!(
            "{:?} on arcs {:?}",
            v.code, v.arcs
        )));
    }
    if !report.proper {
        let v = report
            .violations
            .iter()
            .find(|v| v.code == ViolationCode::Containment)
            .expect("invalid-or-improper reports carry a violation");
        return Err(Error::NotProper {
            outer: v.arcs[0],
            inner: v.arcs[1],
        });
    }
    lcst_proper_circular_arc(m)
}
