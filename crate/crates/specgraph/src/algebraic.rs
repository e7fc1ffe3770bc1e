//! Number-theoretic utilities and the algebraically defined graphs over
//! `Z_n`: power graphs and zero-divisor graphs, built both directly from
//! their definitions and through joined-union decompositions over the
//! divisor skeletons.

use crate::graph::{joined_union, Graph, JoinedUnionSpec};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// Proper divisors, totients and the divisor count of `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorData {
    pub n: u64,
    /// Proper divisors `1 < d < n`, ascending.
    pub proper_divisors: Vec<u64>,
    /// `phi(d)` for each proper divisor, same order.
    pub phi_of_divisors: Vec<u64>,
    /// Number of all positive divisors of `n`.
    pub tau: u64,
    pub phi: u64,
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Euler's totient by trial-division factorization.
pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Prime factorization as `(prime, exponent)` pairs, ascending.
pub fn factorize(n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

/// Exact divisor data for `n >= 2`.
pub fn divisor_data(n: u64) -> Result<DivisorData> {
    if n < 2 {
        return Err(Error::Parameter(format!(
            "divisor data needs n >= 2, got {n}"
        )));
    }
    let mut proper: Vec<u64> = (2..n).filter(|d| n.is_multiple_of(*d)).collect();
    proper.sort_unstable();
    let tau = factorize(n).iter().map(|&(_, e)| e as u64 + 1).product();
    Ok(DivisorData {
        n,
        phi_of_divisors: proper.iter().map(|&d| euler_phi(d)).collect(),
        proper_divisors: proper,
        tau,
        phi: euler_phi(n),
    })
}

/// Divisor graph of `n`: vertices are the proper divisors (ascending), with
/// an edge when one divides the other.
pub fn divisibility_graph(n: u64) -> Result<Graph> {
    let data = divisor_data(n)?;
    let ds = &data.proper_divisors;
    if ds.is_empty() {
        return Err(Error::Parameter(format!("{n} has no proper divisors")));
    }
    let mut g = Graph::empty(ds.len())?;
    for i in 0..ds.len() {
        for j in i + 1..ds.len() {
            if ds[j] % ds[i] == 0 {
                g.add_edge(i, j)?;
            }
        }
    }
    Ok(g)
}

/// Proper divisor graph of `n`: an edge joins `d_i` and `d_j` exactly when
/// `n` divides `d_i * d_j`.
pub fn zero_divisor_quotient_graph(n: u64) -> Result<Graph> {
    let data = divisor_data(n)?;
    let ds = &data.proper_divisors;
    if ds.is_empty() {
        return Err(Error::Parameter(format!("{n} has no proper divisors")));
    }
    let mut g = Graph::empty(ds.len())?;
    for i in 0..ds.len() {
        for j in i + 1..ds.len() {
            if (ds[i] * ds[j]) % n == 0 {
                g.add_edge(i, j)?;
            }
        }
    }
    Ok(g)
}

/// One part of a `Z_n` decomposition: a clique or co-clique on the residue
/// class attached to a divisor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZnPart {
    /// The divisor labelling this part (1 marks the identity-and-generators
    /// part of a power graph).
    pub divisor: u64,
    pub order: usize,
    pub clique: bool,
    /// The residues of `Z_n` this part stands for, ascending.
    pub members: Vec<u64>,
}

/// Joined-union decomposition of a power graph or zero-divisor graph of
/// `Z_n`: a divisor skeleton plus one clique/co-clique part per vertex.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZnDecomposition {
    pub n: u64,
    pub skeleton: Graph,
    pub parts: Vec<ZnPart>,
}

impl ZnDecomposition {
    /// Expand the decomposition into an explicit graph; part vertices are
    /// laid out consecutively in part order.
    pub fn to_graph(&self) -> Result<Graph> {
        let parts = self
            .parts
            .iter()
            .map(|p| {
                let mut g = Graph::empty(p.order)?;
                if p.clique {
                    for u in 0..p.order {
                        for v in u + 1..p.order {
                            g.add_edge(u, v)?;
                        }
                    }
                }
                Ok(g)
            })
            .collect::<Result<Vec<_>>>()?;
        joined_union(&JoinedUnionSpec::new(self.skeleton.clone(), parts)?)
    }

    pub fn to_joined_union_spec(&self) -> Result<JoinedUnionSpec> {
        let parts = self
            .parts
            .iter()
            .map(|p| {
                let mut g = Graph::empty(p.order)?;
                if p.clique {
                    for u in 0..p.order {
                        for v in u + 1..p.order {
                            g.add_edge(u, v)?;
                        }
                    }
                }
                Ok(g)
            })
            .collect::<Result<Vec<_>>>()?;
        JoinedUnionSpec::new(self.skeleton.clone(), parts)
    }

    /// The vertex relabelling that carries the direct construction onto the
    /// decomposition layout: residue `members[i][k]` maps to flattened index
    /// `offset(i) + k`.
    pub fn residue_order(&self) -> Vec<u64> {
        self.parts
            .iter()
            .flat_map(|p| p.members.iter().copied())
            .collect()
    }
}

/// Power graph of the additive cyclic group `Z_n`, plus its joined-union
/// decomposition.
///
/// Adjacency in the direct construction: `x ~ y` iff one lies in the cyclic
/// subgroup generated by the other; since `<y> = {k y mod n}` has order
/// `n / gcd(y, n)`, the membership test is `gcd(y, n) | x`.
pub fn power_graph(n: u64) -> Result<(Graph, ZnDecomposition)> {
    if n < 3 {
        return Err(Error::Parameter(format!(
            "power graph needs n >= 3, got {n}"
        )));
    }
    let mut g = Graph::empty(n as usize)?;
    for x in 0..n {
        for y in x + 1..n {
            let in_y = x % gcd(y, n) == 0;
            let in_x = y % gcd(x, n) == 0;
            if in_x || in_y {
                g.add_edge(x as usize, y as usize)?;
            }
        }
    }

    let data = divisor_data(n)?;
    // skeleton = K_1 joined to the divisibility graph: part 0 carries the
    // identity and the generators, one part per proper divisor follows
    let t = data.proper_divisors.len();
    let mut skeleton = Graph::empty(t + 1)?;
    for i in 1..=t {
        skeleton.add_edge(0, i)?;
    }
    for i in 0..t {
        for j in i + 1..t {
            if data.proper_divisors[j] % data.proper_divisors[i] == 0 {
                skeleton.add_edge(i + 1, j + 1)?;
            }
        }
    }
    let mut parts = Vec::with_capacity(t + 1);
    let mut members0: Vec<u64> = (0..n).filter(|&x| x == 0 || gcd(x, n) == 1).collect();
    members0.sort_unstable();
    parts.push(ZnPart {
        divisor: 1,
        order: members0.len(),
        clique: true,
        members: members0,
    });
    for &d in &data.proper_divisors {
        // elements of order d are the x with gcd(x, n) = n/d
        let members: Vec<u64> = (1..n).filter(|&x| gcd(x, n) == n / d).collect();
        parts.push(ZnPart {
            divisor: d,
            order: members.len(),
            clique: true,
            members,
        });
    }
    Ok((g, ZnDecomposition { n, skeleton, parts }))
}

/// Zero-divisor graph of the ring `Z_n` on the nonzero zero-divisors, plus
/// its joined-union decomposition over the proper divisor graph.
pub fn zero_divisor_graph(n: u64) -> Result<(Graph, ZnDecomposition)> {
    let data = divisor_data(n)?;
    if data.proper_divisors.is_empty() {
        return Err(Error::Parameter(format!(
            "{n} is prime; its zero-divisor graph is empty"
        )));
    }
    let vertices: Vec<u64> = (1..n).filter(|&x| gcd(x, n) > 1).collect();
    let mut g = Graph::empty(vertices.len())?;
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            if (vertices[i] * vertices[j]).is_multiple_of(n) {
                g.add_edge(i, j)?;
            }
        }
    }

    let skeleton = zero_divisor_quotient_graph(n)?;
    let parts = data
        .proper_divisors
        .iter()
        .map(|&d| {
            let members: Vec<u64> = (1..n).filter(|&x| gcd(x, n) == d).collect();
            ZnPart {
                divisor: d,
                order: members.len(),
                clique: (d * d) % n == 0,
                members,
            }
        })
        .collect();
    Ok((g, ZnDecomposition { n, skeleton, parts }))
}

/// Check that the direct construction equals the decomposition expansion
/// after the residue-class relabelling. The direct graph's vertex `k` is the
/// k-th smallest residue of its vertex set.
pub fn decomposition_matches_direct(direct: &Graph, dec: &ZnDecomposition) -> Result<bool> {
    let order = dec.residue_order();
    if direct.n() != order.len() {
        return Ok(false);
    }
    // residues carried by the direct graph, ascending = its vertex numbering
    let mut residues = order.clone();
    residues.sort_unstable();
    let mut position = std::collections::HashMap::new();
    for (idx, &r) in residues.iter().enumerate() {
        position.insert(r, idx);
    }
    // perm[direct index] = decomposition index
    let mut perm = vec![0usize; order.len()];
    for (dec_idx, &r) in order.iter().enumerate() {
        perm[position[&r]] = dec_idx;
    }
    let relabelled = direct.relabel(&perm)?;
    Ok(relabelled == dec.to_graph()?)
}
