use super::Graph;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// Skeleton graph plus one part graph per skeleton vertex.
///
/// The joined union replaces skeleton vertex `i` by the part `G_i` and fully
/// joins parts whose skeleton vertices are adjacent. With a `K_2` skeleton it
/// reduces to the ordinary join.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JoinedUnionSpec {
    pub skeleton: Graph,
    pub parts: Vec<Graph>,
}

impl JoinedUnionSpec {
    pub fn new(skeleton: Graph, parts: Vec<Graph>) -> Result<Self> {
        if parts.len() != skeleton.n() {
            return Err(Error::Parameter(format!(
                "skeleton order {} != part count {}",
                skeleton.n(),
                parts.len()
            )));
        }
        Ok(JoinedUnionSpec { skeleton, parts })
    }

    /// Total order of the joined union.
    pub fn order(&self) -> usize {
        self.parts.iter().map(Graph::n).sum()
    }

    /// Start index of part `i` in the flattened vertex numbering.
    pub fn offset(&self, i: usize) -> usize {
        self.parts[..i].iter().map(Graph::n).sum()
    }
}

/// Build the joined union explicitly. Part vertices are laid out
/// consecutively in skeleton-vertex order.
pub fn joined_union(spec: &JoinedUnionSpec) -> Result<Graph> {
    let mut g = Graph::empty(spec.order())?;
    let mut offsets = Vec::with_capacity(spec.parts.len());
    let mut acc = 0;
    for part in &spec.parts {
        offsets.push(acc);
        acc += part.n();
    }
    for (i, part) in spec.parts.iter().enumerate() {
        for (u, v) in part.edges() {
            g.add_edge(offsets[i] + u, offsets[i] + v)?;
        }
    }
    for (i, j) in spec.skeleton.edges() {
        for u in 0..spec.parts[i].n() {
            for v in 0..spec.parts[j].n() {
                g.add_edge(offsets[i] + u, offsets[j] + v)?;
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_named, canonical_form, FamilySpec};

    #[test]
    fn k2_skeleton_is_the_join() {
        // K_2[empty_a, empty_b] = K_{a,b}
        let spec = JoinedUnionSpec::new(
            build_named(&FamilySpec::Complete { n: 2 }).unwrap(),
            vec![Graph::empty(3).unwrap(), Graph::empty(4).unwrap()],
        )
        .unwrap();
        let g = joined_union(&spec).unwrap();
        let kab = build_named(&FamilySpec::CompleteBipartite { a: 3, b: 4 }).unwrap();
        assert_eq!(g, kab);
    }

    #[test]
    fn p3_of_k1_k2_k3_matches_hand_built() {
        let spec = JoinedUnionSpec::new(
            build_named(&FamilySpec::Path { n: 3 }).unwrap(),
            vec![
                build_named(&FamilySpec::Complete { n: 1 }).unwrap(),
                build_named(&FamilySpec::Complete { n: 2 }).unwrap(),
                build_named(&FamilySpec::Complete { n: 3 }).unwrap(),
            ],
        )
        .unwrap();
        let g = joined_union(&spec).unwrap();
        assert_eq!(g.n(), 6);
        // 0 | 1 2 | 3 4 5; middle part joined to both sides
        let expected = Graph::from_edges(
            6,
            &[
                (1, 2),
                (3, 4),
                (3, 5),
                (4, 5),
                (0, 1),
                (0, 2),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 3),
                (2, 4),
                (2, 5),
            ],
        )
        .unwrap();
        assert_eq!(g, expected);
        assert_eq!(g.m(), 12);
    }

    #[test]
    fn friendship_via_joined_union() {
        let star3 = build_named(&FamilySpec::Star { n: 4 }).unwrap();
        let k2 = build_named(&FamilySpec::Complete { n: 2 }).unwrap();
        let spec = JoinedUnionSpec::new(
            star3,
            vec![Graph::empty(1).unwrap(), k2.clone(), k2.clone(), k2.clone()],
        )
        .unwrap();
        let g = joined_union(&spec).unwrap();
        let f3 = build_named(&FamilySpec::Friendship { n: 3 }).unwrap();
        assert_eq!(canonical_form(&g).unwrap(), canonical_form(&f3).unwrap());
    }
}
