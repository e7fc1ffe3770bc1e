use super::Graph;
use crate::{Error, Result};
use std::collections::HashSet;

/// Built-in exhaustive enumeration cap; larger corpora enter via graph6.
pub const ENUMERATION_CAP: usize = 8;

const MAX_CANONICAL_ORDER: usize = 11; // 55 upper-triangle bits fit a u64

/// Upper-triangle bit index of pair `(i, j)`, `i < j`, column-major (the
/// graph6 layout).
fn pair_index(i: usize, j: usize) -> usize {
    j * (j - 1) / 2 + i
}

/// Bits are stored from the top of the word so that integer order equals
/// lexicographic order on the bit string.
fn pair_mask(i: usize, j: usize) -> u64 {
    1u64 << (63 - pair_index(i, j))
}

/// Canonical form: the minimum adjacency encoding over all vertex
/// permutations, found by branch-and-bound placement. Only sound pruning is
/// applied, so this is the true minimum. Orders up to 11 are supported.
pub fn canonical_form(g: &Graph) -> Result<u64> {
    let n = g.n();
    if n > MAX_CANONICAL_ORDER {
        return Err(Error::EnumerationCap(n, MAX_CANONICAL_ORDER));
    }
    let adj: Vec<u16> = (0..n)
        .map(|v| {
            let mut row = 0u16;
            for &w in g.neighbors(v) {
                row |= 1 << w;
            }
            row
        })
        .collect();
    let mut search = CanonSearch {
        n,
        adj: &adj,
        chosen: Vec::with_capacity(n),
        used: 0,
        best: u64::MAX,
    };
    search.descend(0, 0);
    Ok(search.best)
}

struct CanonSearch<'a> {
    n: usize,
    adj: &'a [u16],
    chosen: Vec<usize>,
    used: u16,
    best: u64,
}

impl CanonSearch<'_> {
    fn descend(&mut self, depth: usize, prefix: u64) {
        if depth == self.n {
            if prefix < self.best {
                self.best = prefix;
            }
            return;
        }
        // bits covered after this depth: all pairs within positions 0..=depth
        let covered = depth * (depth + 1) / 2;
        let mask = if covered == 0 {
            0
        } else {
            !((1u64 << (64 - covered)) - 1)
        };
        let mut cands: Vec<(u64, usize)> = (0..self.n)
            .filter(|&v| self.used & (1 << v) == 0)
            .map(|v| {
                let mut col = 0u64;
                for (t, &c) in self.chosen.iter().enumerate() {
                    if self.adj[c] & (1 << v) != 0 {
                        col |= pair_mask(t, depth);
                    }
                }
                (col, v)
            })
            .collect();
        cands.sort_unstable();
        for (col, v) in cands {
            let next = prefix | col;
            if covered > 0 && next & mask > self.best & mask {
                // every remaining candidate at this node is at least as large
                break;
            }
            self.chosen.push(v);
            self.used |= 1 << v;
            self.descend(depth + 1, next);
            self.used &= !(1 << v);
            self.chosen.pop();
        }
    }
}

/// Rebuild a graph from a canonical (or any) encoding.
pub fn graph_from_encoding(n: usize, bits: u64) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for j in 1..n {
        for i in 0..j {
            if bits & pair_mask(i, j) != 0 {
                g.add_edge(i, j)?;
            }
        }
    }
    Ok(g)
}

/// One representative per isomorphism class of graphs on `n` vertices, in
/// ascending canonical-encoding order. Built by extending each (n-1)-vertex
/// representative with every neighbor subset for a new vertex and
/// re-canonicalizing.
pub fn enumerate_graphs(n: usize, connected_only: bool) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::Parameter("enumeration needs n >= 1".into()));
    }
    if n > ENUMERATION_CAP {
        return Err(Error::EnumerationCap(n, ENUMERATION_CAP));
    }
    let mut level: HashSet<u64> = HashSet::from([0u64]); // K_1
    for k in 1..n {
        let mut next = HashSet::new();
        for &bits in &level {
            let g = graph_from_encoding(k, bits)?;
            for subset in 0u32..(1 << k) {
                let mut h = g.clone().disjoint_union(&Graph::empty(1)?);
                for t in 0..k {
                    if subset & (1 << t) != 0 {
                        h.add_edge(t, k)?;
                    }
                }
                next.insert(canonical_form(&h)?);
            }
        }
        level = next;
    }
    let mut keys: Vec<u64> = level.into_iter().collect();
    keys.sort_unstable();
    let mut out = Vec::with_capacity(keys.len());
    for bits in keys {
        let g = graph_from_encoding(n, bits)?;
        if !connected_only || g.is_connected() {
            out.push(g);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_named, FamilySpec};

    #[test]
    fn canonical_form_is_isomorphism_invariant() {
        let g = build_named(&FamilySpec::Path { n: 6 }).unwrap();
        let perm = vec![3, 0, 5, 1, 4, 2];
        let h = g.relabel(&perm).unwrap();
        assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        // and distinguishes non-isomorphic graphs
        let s = build_named(&FamilySpec::Star { n: 6 }).unwrap();
        assert_ne!(canonical_form(&g).unwrap(), canonical_form(&s).unwrap());
    }

    #[test]
    fn tiny_counts() {
        assert_eq!(enumerate_graphs(1, false).unwrap().len(), 1);
        assert_eq!(enumerate_graphs(2, false).unwrap().len(), 2);
        assert_eq!(enumerate_graphs(3, false).unwrap().len(), 4);
        assert_eq!(enumerate_graphs(4, false).unwrap().len(), 11);
        assert_eq!(enumerate_graphs(4, true).unwrap().len(), 6);
        assert_eq!(enumerate_graphs(5, true).unwrap().len(), 21);
    }

    #[test]
    fn cap_is_reported() {
        match enumerate_graphs(9, true) {
            Err(Error::EnumerationCap(9, cap)) => assert_eq!(cap, ENUMERATION_CAP),
            other => panic!("expected capacity error, got {other:?}"),
        }
    }

    #[test]
    fn brute_force_oracle_n5() {
        // canonical dedup over every labelled graph must agree with the
        // extension-based enumerator
        let n = 5;
        let mut forms = HashSet::new();
        for bits in 0u64..(1 << (n * (n - 1) / 2)) {
            let mut g = Graph::empty(n).unwrap();
            for j in 1..n {
                for i in 0..j {
                    if bits & (1 << pair_index(i, j)) != 0 {
                        g.add_edge(i, j).unwrap();
                    }
                }
            }
            forms.insert(canonical_form(&g).unwrap());
        }
        assert_eq!(forms.len(), 34);
        assert_eq!(enumerate_graphs(5, false).unwrap().len(), 34);
    }
}
