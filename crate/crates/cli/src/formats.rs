//! Flat file formats: `.gr` graphs, `.ord` elimination orders, `.arc`
//! circular-arc models, and the tree output lines. All files are 1-based;
//! everything in memory is 0-based.

use lcst_core::{CircularArcModel, Graph, NoReason, SpanningTree, TreeOutcome, VertexOrder};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

fn err<T>(line: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        msg: msg.into(),
    })
}

/// `.gr` format: optional `c` comment lines, one `p lcst <n> <m>` header,
/// then exactly `m` lines `e <u> <v>` with 1-based endpoints.
pub fn parse_graph_file(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize, usize)> = None; // (n, m, line)
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = l.split_ascii_whitespace().collect();
        match fields[0] {
            "p" => {
                if header.is_some() {
                    return err(line, "duplicate p header");
                }
                if fields.len() != 4 || fields[1] != "lcst" {
                    return err(line, "malformed header, expected `p lcst <n> <m>`");
                }
                let n = fields[2]
                    .parse::<usize>()
                    .or_else(|_| err(line, "bad vertex count"))?;
                let m = fields[3]
                    .parse::<usize>()
                    .or_else(|_| err(line, "bad edge count"))?;
                header = Some((n, m, line));
            }
            "e" => {
                let Some((n, _, _)) = header else {
                    return err(line, "edge before the p header");
                };
                if fields.len() != 3 {
                    return err(line, "malformed edge, expected `e <u> <v>`");
                }
                let u = fields[1]
                    .parse::<usize>()
                    .or_else(|_| err(line, "bad endpoint"))?;
                let v = fields[2]
                    .parse::<usize>()
                    .or_else(|_| err(line, "bad endpoint"))?;
                if u == 0 || u > n {
                    return err(line, format!("id {u} out of range 1..{n}"));
                }
                if v == 0 || v > n {
                    return err(line, format!("id {v} out of range 1..{n}"));
                }
                if u == v {
                    return err(line, format!("self-loop on {u}"));
                }
                edges.push((u - 1, v - 1));
            }
            other => return err(line, format!("unknown line type `{other}`")),
        }
    }
    let Some((n, m, p_line)) = header else {
        return err(1, "missing `p lcst <n> <m>` header");
    };
    if edges.len() != m {
        return err(
            p_line,
            format!("header promises {m} edges, file has {}", edges.len()),
        );
    }
    Graph::new(n, &edges).or_else(|e| err(p_line, e.to_string()))
}

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("p lcst {} {}\n", g.n(), g.num_edges());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

/// `.ord` format: the n vertex ids 1..n, whitespace-separated, position in
/// the file giving the elimination position.
pub fn parse_order_file(text: &str) -> Result<VertexOrder, ParseError> {
    let mut order: Vec<usize> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('c') {
            continue;
        }
        for tok in l.split_ascii_whitespace() {
            let v = tok
                .parse::<usize>()
                .or_else(|_| err(line, format!("bad vertex id `{tok}`")))?;
            if v == 0 {
                return err(line, "ids are 1-based");
            }
            order.push(v - 1);
        }
    }
    VertexOrder::new(order).or_else(|e| err(1, e.to_string()))
}

pub fn serialize_order(ord: &VertexOrder) -> String {
    let ids: Vec<String> = ord.as_slice().iter().map(|v| (v + 1).to_string()).collect();
    format!("{}\n", ids.join(" "))
}

/// `.arc` format: optional comments, one `p arcs <n>` header, then one
/// `a <id> <head> <tail>` line per arc id 1..n, positions in `[0, 2n)`.
pub fn parse_arc_model_file(text: &str) -> Result<CircularArcModel, ParseError> {
    let mut header: Option<(usize, usize)> = None; // (n, line)
    let mut arcs: Vec<Option<(usize, usize)>> = Vec::new();
    let mut used: Vec<Option<usize>> = Vec::new(); // position -> line
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = l.split_ascii_whitespace().collect();
        match fields[0] {
            "p" => {
                if header.is_some() {
                    return err(line, "duplicate p header");
                }
                if fields.len() != 3 || fields[1] != "arcs" {
                    return err(line, "malformed header, expected `p arcs <n>`");
                }
                let n = fields[2]
                    .parse::<usize>()
                    .or_else(|_| err(line, "bad arc count"))?;
                header = Some((n, line));
                arcs = vec![None; n];
                used = vec![None; 2 * n];
            }
            "a" => {
                let Some((n, _)) = header else {
                    return err(line, "arc before the p header");
                };
                if fields.len() != 4 {
                    return err(line, "malformed arc, expected `a <id> <head> <tail>`");
                }
                let id = fields[1]
                    .parse::<usize>()
                    .or_else(|_| err(line, "bad arc id"))?;
                if id == 0 || id > n {
                    return err(line, format!("arc id {id} out of range 1..{n}"));
                }
                if arcs[id - 1].is_some() {
                    return err(line, format!("duplicate arc id {id}"));
                }
                let mut pos = [0usize; 2];
                for (k, f) in fields[2..4].iter().enumerate() {
                    let p = f
                        .parse::<usize>()
                        .or_else(|_| err(line, format!("bad position `{f}`")))?;
                    if p >= 2 * n {
                        return err(line, format!("position {p} outside 0..{}", 2 * n));
                    }
                    if used[p].is_some() {
                        return err(line, format!("duplicate position {p}"));
                    }
                    used[p] = Some(line);
                    pos[k] = p;
                }
                arcs[id - 1] = Some((pos[0], pos[1]));
            }
            other => return err(line, format!("unknown line type `{other}`")),
        }
    }
    let Some((n, p_line)) = header else {
        return err(1, "missing `p arcs <n>` header");
    };
    let mut list = Vec::with_capacity(n);
    for (i, a) in arcs.into_iter().enumerate() {
        match a {
            Some(pair) => list.push(pair),
            None => return err(p_line, format!("missing arc id {}", i + 1)),
        }
    }
    Ok(CircularArcModel::new(list))
}

pub fn serialize_arc_model(m: &CircularArcModel) -> String {
    let mut out = format!("p arcs {}\n", m.n());
    for (i, &(h, t)) in m.arcs().iter().enumerate() {
        out.push_str(&format!("a {} {} {}\n", i + 1, h, t));
    }
    out
}

/// Tree files hold `e <u> <v>` lines; comments and the trailing summary line
/// are ignored so solver output can be fed back in.
pub fn parse_tree_file(text: &str, n: usize) -> Result<SpanningTree, ParseError> {
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('c') || l.starts_with('s') {
            continue;
        }
        let fields: Vec<&str> = l.split_ascii_whitespace().collect();
        if fields[0] != "e" || fields.len() != 3 {
            return err(line, "expected `e <u> <v>`");
        }
        let u = fields[1]
            .parse::<usize>()
            .or_else(|_| err(line, "bad endpoint"))?;
        let v = fields[2]
            .parse::<usize>()
            .or_else(|_| err(line, "bad endpoint"))?;
        if u == 0 || v == 0 {
            return err(line, "ids are 1-based");
        }
        edges.push((u - 1, v - 1));
    }
    Ok(SpanningTree::new(n, edges))
}

/// Human-readable solver outcome: edge lines then the summary line.
pub fn format_outcome(outcome: &TreeOutcome) -> String {
    let mut out = String::new();
    match outcome {
        TreeOutcome::Tree(t) => {
            for &(u, v) in t.edges() {
                out.push_str(&format!("e {} {}\n", u + 1, v + 1));
            }
            out.push_str("s tree\n");
        }
        TreeOutcome::No { reason, witness } => {
            let ids: Vec<String> = witness.iter().map(|v| (v + 1).to_string()).collect();
            out.push_str(&format!("c witness: {}\n", ids.join(" ")));
            out.push_str(&format!("s no {}\n", reason.code()));
        }
    }
    out
}

pub fn reason_code(reason: NoReason) -> &'static str {
    reason.code()
}
