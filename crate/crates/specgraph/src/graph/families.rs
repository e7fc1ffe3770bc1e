use super::joined::JoinedUnionSpec;
use super::Graph;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// Named graph family with its integer parameters.
///
/// Vertex ordering is canonical and documented per family: hub/center
/// vertices come first, then remaining vertices in level order (for join
/// constructions: the parts in the listed order, each part's vertices
/// consecutive). Spectra tests rely on this ordering being stable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilySpec {
    /// `P_n`, vertices 0..n along the path.
    Path { n: usize },
    /// `C_n`, vertices 0..n around the cycle.
    Cycle { n: usize },
    /// `K_n`.
    Complete { n: usize },
    /// `K_{a,b}`: side A first, then side B.
    CompleteBipartite { a: usize, b: usize },
    /// `K_{n_1,...,n_p}`: parts in the listed order.
    CompleteMultipartite { parts: Vec<usize> },
    /// Star `S_n` of order `n`: center 0, then `n-1` leaves.
    Star { n: usize },
    /// Complete split `CS_{omega,n-omega}`: clique vertices first, then the
    /// independent set.
    CompleteSplit { omega: usize, n: usize },
    /// Wheel `W_n` of order `n`: hub 0, then the cycle `C_{n-1}`.
    Wheel { n: usize },
    /// Cone `C_{a,b} = C_a join empty_b`: cycle first, then the `b` apexes.
    Cone { a: usize, b: usize },
    /// Friendship graph `F_n` of order `2n+1`: center 0, then `n` edges.
    Friendship { n: usize },
    /// Firefly `F_{p,n-p}` of order `2n-p+1`: center 0, then `p` pendant
    /// vertices, then `n-p` triangle edges.
    Firefly { p: usize, n: usize },
    /// Generalized wheel `W_{a,b}` of order `ab+1`: hub 0, then `a` copies
    /// of `C_b`.
    GeneralizedWheel { a: usize, b: usize },
    /// Double broom of diameter 3: centers 0,1; `a` pendants on 0, `b` on 1.
    DoubleBroom3 { a: usize, b: usize },
    /// Double broom of diameter 4: centers 0,2 joined through the middle
    /// vertex 1; `a` pendants on 0, `b` on 2.
    DoubleBroom4 { a: usize, b: usize },
    /// Spider `T(4;2a,2b)`: center 0 carrying `a+b` legs of length two.
    T4_2a2b { a: usize, b: usize },
    /// Diameter-4 tree `T'`: root 0, branch vertices 1..=r in level order,
    /// the first branch carrying `s1 >= 2` pendants and the rest one each.
    TPrime { r: usize, s1: usize },
    /// Diameter-4 tree `T''`: as `T'` but the first two branches carry
    /// `s1, s2 >= 2` pendants.
    TDoublePrime { r: usize, s1: usize, s2: usize },
    /// Diameter-4 star-nonstar tree: root 0 with `root_pendants` leaves and
    /// one branch per entry of `branch_pendants` (each >= 1), in level order.
    SnsTree {
        root_pendants: usize,
        branch_pendants: Vec<usize>,
    },
}

impl FamilySpec {
    /// Order of the resulting graph.
    pub fn order(&self) -> usize {
        use FamilySpec::*;
        match self {
            Path { n } | Cycle { n } | Complete { n } | Star { n } | Wheel { n } => *n,
            CompleteBipartite { a, b } => a + b,
            CompleteMultipartite { parts } => parts.iter().sum(),
            CompleteSplit { n, .. } => *n,
            Cone { a, b } => a + b,
            Friendship { n } => 2 * n + 1,
            Firefly { p, n } => 2 * n - p + 1,
            GeneralizedWheel { a, b } => a * b + 1,
            DoubleBroom3 { a, b } => a + b + 2,
            DoubleBroom4 { a, b } => a + b + 3,
            T4_2a2b { a, b } => 2 * (a + b) + 1,
            TPrime { r, s1 } => 2 * r + s1,
            TDoublePrime { r, s1, s2 } => 2 * r + s1 + s2 - 1,
            SnsTree {
                root_pendants,
                branch_pendants,
            } => 1 + root_pendants + branch_pendants.len() + branch_pendants.iter().sum::<usize>(),
        }
    }
}

/// Build the family member with its canonical vertex ordering.
pub fn build_named(spec: &FamilySpec) -> Result<Graph> {
    use FamilySpec::*;
    match spec {
        Path { n } => {
            require(*n >= 1, "path needs n >= 1")?;
            let mut g = Graph::empty(*n)?;
            for v in 1..*n {
                g.add_edge(v - 1, v)?;
            }
            Ok(g)
        }
        Cycle { n } => {
            require(*n >= 3, "cycle needs n >= 3")?;
            let mut g = Graph::empty(*n)?;
            for v in 0..*n {
                g.add_edge(v, (v + 1) % n)?;
            }
            Ok(g)
        }
        Complete { n } => {
            require(*n >= 1, "complete graph needs n >= 1")?;
            complete(*n)
        }
        CompleteBipartite { a, b } => {
            require(*a >= 1 && *b >= 1, "complete bipartite needs a,b >= 1")?;
            let mut g = Graph::empty(a + b)?;
            for u in 0..*a {
                for v in 0..*b {
                    g.add_edge(u, a + v)?;
                }
            }
            Ok(g)
        }
        CompleteMultipartite { parts } => {
            require(
                parts.len() >= 2 && parts.iter().all(|&p| p >= 1),
                "complete multipartite needs >= 2 nonempty parts",
            )?;
            let skeleton = complete(parts.len())?;
            let part_graphs: Vec<Graph> = parts
                .iter()
                .map(|&p| Graph::empty(p))
                .collect::<Result<_>>()?;
            super::joined::joined_union(&JoinedUnionSpec::new(skeleton, part_graphs)?)
        }
        Star { n } => {
            require(*n >= 2, "star needs n >= 2")?;
            let mut g = Graph::empty(*n)?;
            for v in 1..*n {
                g.add_edge(0, v)?;
            }
            Ok(g)
        }
        CompleteSplit { omega, n } => {
            require(
                *omega >= 1 && omega < n,
                "complete split needs 1 <= omega < n",
            )?;
            let mut g = complete(*omega)?.disjoint_union(&Graph::empty(n - omega)?);
            for u in 0..*omega {
                for v in *omega..*n {
                    g.add_edge(u, v)?;
                }
            }
            Ok(g)
        }
        Wheel { n } => {
            require(*n >= 4, "wheel needs n >= 4")?;
            let mut g = Graph::empty(*n)?;
            for v in 1..*n {
                g.add_edge(0, v)?;
            }
            for v in 1..*n {
                let next = if v == n - 1 { 1 } else { v + 1 };
                g.add_edge(v, next)?;
            }
            Ok(g)
        }
        Cone { a, b } => {
            require(*a >= 3 && *b >= 1, "cone needs a >= 3, b >= 1")?;
            let mut g = Graph::empty(a + b)?;
            for v in 0..*a {
                g.add_edge(v, (v + 1) % a)?;
            }
            for u in 0..*a {
                for w in 0..*b {
                    g.add_edge(u, a + w)?;
                }
            }
            Ok(g)
        }
        Friendship { n } => {
            require(*n >= 1, "friendship needs n >= 1")?;
            let mut g = Graph::empty(2 * n + 1)?;
            for k in 0..*n {
                let (u, v) = (1 + 2 * k, 2 + 2 * k);
                g.add_edge(0, u)?;
                g.add_edge(0, v)?;
                g.add_edge(u, v)?;
            }
            Ok(g)
        }
        Firefly { p, n } => {
            require(*n >= 1 && p <= n, "firefly needs 0 <= p <= n")?;
            let mut g = Graph::empty(2 * n - p + 1)?;
            for k in 0..*p {
                g.add_edge(0, 1 + k)?;
            }
            for k in 0..(n - p) {
                let (u, v) = (1 + p + 2 * k, 2 + p + 2 * k);
                g.add_edge(0, u)?;
                g.add_edge(0, v)?;
                g.add_edge(u, v)?;
            }
            Ok(g)
        }
        GeneralizedWheel { a, b } => {
            require(*a >= 1 && *b >= 3, "generalized wheel needs a >= 1, b >= 3")?;
            let mut g = Graph::empty(a * b + 1)?;
            for copy in 0..*a {
                let base = 1 + copy * b;
                for v in 0..*b {
                    g.add_edge(base + v, base + (v + 1) % b)?;
                    g.add_edge(0, base + v)?;
                }
            }
            Ok(g)
        }
        DoubleBroom3 { a, b } => {
            require(*a >= 1 && *b >= 1, "double broom needs a,b >= 1")?;
            let mut g = Graph::empty(a + b + 2)?;
            g.add_edge(0, 1)?;
            for k in 0..*a {
                g.add_edge(0, 2 + k)?;
            }
            for k in 0..*b {
                g.add_edge(1, 2 + a + k)?;
            }
            Ok(g)
        }
        DoubleBroom4 { a, b } => {
            require(*a >= 1 && *b >= 1, "double broom needs a,b >= 1")?;
            let mut g = Graph::empty(a + b + 3)?;
            g.add_edge(0, 1)?;
            g.add_edge(1, 2)?;
            for k in 0..*a {
                g.add_edge(0, 3 + k)?;
            }
            for k in 0..*b {
                g.add_edge(2, 3 + a + k)?;
            }
            Ok(g)
        }
        T4_2a2b { a, b } => {
            require(*a >= 1 && *b >= 1, "T(4;2a,2b) needs a,b >= 1")?;
            spider_with_two_level_legs(a + b, 0)
        }
        TPrime { r, s1 } => {
            require(*r >= 2 && *s1 >= 2, "T' needs r >= 2, s1 >= 2")?;
            let mut pendants = vec![*s1];
            pendants.extend(std::iter::repeat_n(1, r - 1));
            sns_tree(0, &pendants)
        }
        TDoublePrime { r, s1, s2 } => {
            require(
                *r >= 3 && *s1 >= 2 && *s2 >= 2,
                "T'' needs r >= 3, s1,s2 >= 2",
            )?;
            let mut pendants = vec![*s1, *s2];
            pendants.extend(std::iter::repeat_n(1, r - 2));
            sns_tree(0, &pendants)
        }
        SnsTree {
            root_pendants,
            branch_pendants,
        } => {
            require(
                branch_pendants.len() >= 2 && branch_pendants.iter().all(|&s| s >= 1),
                "diameter-4 SNS tree needs >= 2 branches each with >= 1 pendant",
            )?;
            sns_tree(*root_pendants, branch_pendants)
        }
    }
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Parameter(msg.into()))
    }
}

fn complete(n: usize) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// Center 0, `legs` branch vertices each carrying one pendant, plus `extra`
/// pendants directly on the center.
fn spider_with_two_level_legs(legs: usize, extra: usize) -> Result<Graph> {
    sns_tree(extra, &vec![1; legs])
}

/// Root 0 with `p` pendants, then one branch vertex per entry of `s` (level
/// order: all branch vertices, then their pendants branch by branch).
fn sns_tree(p: usize, s: &[usize]) -> Result<Graph> {
    let r = s.len();
    let n = 1 + p + r + s.iter().sum::<usize>();
    let mut g = Graph::empty(n)?;
    for k in 0..p {
        g.add_edge(0, 1 + k)?;
    }
    let mut next = 1 + p + r;
    for (i, &si) in s.iter().enumerate() {
        let branch = 1 + p + i;
        g.add_edge(0, branch)?;
        for _ in 0..si {
            g.add_edge(branch, next)?;
            next += 1;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::canonical_form;

    #[test]
    fn star_degrees() {
        let g = build_named(&FamilySpec::Star { n: 4 }).unwrap();
        let mut degs: Vec<usize> = (0..4).map(|v| g.degree(v)).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 1, 1, 3]);
    }

    #[test]
    fn friendship_two_triangles() {
        // order 2n+1, one vertex of degree 2n
        let g = build_named(&FamilySpec::Friendship { n: 2 }).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.m(), 6);
        assert_eq!(g.degree(0), 4);
        assert_eq!((1..5).filter(|&v| g.degree(v) == 2).count(), 4);
    }

    #[test]
    fn t4_11_is_p5() {
        let t = build_named(&FamilySpec::T4_2a2b { a: 1, b: 1 }).unwrap();
        let p5 = build_named(&FamilySpec::Path { n: 5 }).unwrap();
        assert_eq!(canonical_form(&t).unwrap(), canonical_form(&p5).unwrap());
    }

    #[test]
    fn orders_match_spec() {
        for spec in [
            FamilySpec::Firefly { p: 2, n: 5 },
            FamilySpec::GeneralizedWheel { a: 3, b: 4 },
            FamilySpec::TPrime { r: 3, s1: 4 },
            FamilySpec::TDoublePrime { r: 3, s1: 2, s2: 3 },
            FamilySpec::CompleteSplit { omega: 3, n: 7 },
        ] {
            let g = build_named(&spec).unwrap();
            assert_eq!(g.n(), spec.order(), "{spec:?}");
        }
    }

    #[test]
    fn invalid_parameters_error() {
        assert!(build_named(&FamilySpec::CompleteSplit { omega: 7, n: 7 }).is_err());
        assert!(build_named(&FamilySpec::Firefly { p: 6, n: 5 }).is_err());
        assert!(build_named(&FamilySpec::Cycle { n: 2 }).is_err());
    }

    #[test]
    fn diameter4_trees_are_trees() {
        for spec in [
            FamilySpec::TPrime { r: 4, s1: 3 },
            FamilySpec::TDoublePrime { r: 3, s1: 2, s2: 2 },
            FamilySpec::DoubleBroom4 { a: 3, b: 2 },
            FamilySpec::SnsTree {
                root_pendants: 2,
                branch_pendants: vec![2, 1, 3],
            },
        ] {
            assert!(build_named(&spec).unwrap().is_tree(), "{spec:?}");
        }
    }
}
