use crate::graph::Graph;
use crate::{Error, Result};

/// A connected c-cyclic graph on `a + 1` vertices with a designated
/// attachment vertex 0: a path for c = 0, a cycle for c = 1, and a cycle
/// with `c - 1` chords from vertex 0 for c >= 2.
pub fn c_cyclic_attachment(a: usize, c: usize) -> Result<Graph> {
    if a < 1 {
        return Err(Error::Parameter("attachment needs a >= 1".into()));
    }
    let n = a + 1;
    match c {
        0 => {
            let mut g = Graph::empty(n)?;
            for v in 1..n {
                g.add_edge(v - 1, v)?;
            }
            Ok(g)
        }
        _ => {
            if n < 3 {
                return Err(Error::Parameter("a cycle needs a >= 2".into()));
            }
            let mut g = Graph::empty(n)?;
            for v in 0..n {
                g.add_edge(v, (v + 1) % n)?;
            }
            // chords 0-2, 0-3, ... raise the cyclomatic number to c
            let chords = c - 1;
            if chords > n.saturating_sub(3) {
                return Err(Error::Parameter(format!("c = {c} needs a >= {}", c + 1)));
            }
            for t in 0..chords {
                g.add_edge(0, 2 + t)?;
            }
            Ok(g)
        }
    }
}

/// The family `C_omega(a, ..., a)`: one copy of a c-cyclic graph of order
/// `a + 1` identified (at its attachment vertex) with each vertex of a
/// clique `K_omega`. Order `omega (a + 1)`.
pub fn clique_with_attachments(omega: usize, a: usize, c: usize) -> Result<Graph> {
    if omega < 2 {
        return Err(Error::Parameter("needs omega >= 2".into()));
    }
    let attach = c_cyclic_attachment(a, c)?;
    let n = omega * (a + 1);
    let mut g = Graph::empty(n)?;
    for u in 0..omega {
        for v in u + 1..omega {
            g.add_edge(u, v)?;
        }
    }
    for i in 0..omega {
        // attachment vertex 0 maps to clique vertex i, the rest follow it
        let base = omega + i * a;
        let map = |v: usize| if v == 0 { i } else { base + v - 1 };
        for (u, v) in attach.edges() {
            g.add_edge(map(u), map(v))?;
        }
    }
    Ok(g)
}

/// The split-graph family of the split-family threshold theorem: a clique
/// `K_omega` whose first `omega - 1` vertices each carry `a` pendants, while
/// the last carries `a - 2` pendants and a fused cycle `C_t`.
/// Order `omega (a + 1) + t - 3`.
pub fn split_family(omega: usize, a: usize, t: usize) -> Result<Graph> {
    if omega < 2 || a < 2 || t < 3 {
        return Err(Error::Parameter(
            "split family needs omega >= 2, a >= 2, t >= 3".into(),
        ));
    }
    let n = omega * (a + 1) + t - 3;
    let mut g = Graph::empty(n)?;
    for u in 0..omega {
        for v in u + 1..omega {
            g.add_edge(u, v)?;
        }
    }
    let mut next = omega;
    for i in 0..omega - 1 {
        for _ in 0..a {
            g.add_edge(i, next)?;
            next += 1;
        }
    }
    let hub = omega - 1;
    for _ in 0..a.saturating_sub(2) {
        g.add_edge(hub, next)?;
        next += 1;
    }
    // cycle C_t through the hub
    let first = next;
    for _ in 0..t - 1 {
        next += 1;
    }
    g.add_edge(hub, first)?;
    for v in first..next - 1 {
        g.add_edge(v, v + 1)?;
    }
    g.add_edge(next - 1, hub)?;
    debug_assert_eq!(next, n);
    Ok(g)
}
