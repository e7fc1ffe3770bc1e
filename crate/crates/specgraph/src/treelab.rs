//! Exact tree algorithms: characteristic polynomials via bottom-up rational
//! functions, congruent diagonalization with eigenvalue counting, sigma, and
//! free-tree enumeration.

use crate::graph::Graph;
use crate::linalg::{Polynomial, RationalFunction};
use crate::{Error, ExactPolynomial, Int, IntPolynomial, Rational, Result};
use num_traits::{Signed, Zero};

/// Cap for the free-tree generator.
pub const TREE_ENUMERATION_CAP: usize = 20;

/// A tree with a distinguished root and a fixed bottom-up processing order.
///
/// Children are ordered by ascending vertex index, so intermediate values of
/// the bottom-up sweeps are reproducible.
#[derive(Debug, Clone)]
pub struct RootedTree {
    graph: Graph,
    root: usize,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    post_order: Vec<usize>,
}

impl RootedTree {
    pub fn new(graph: Graph, root: usize) -> Result<Self> {
        let n = graph.n();
        if root >= n {
            return Err(Error::Parameter(format!("root {root} out of range")));
        }
        if !graph.is_tree() {
            return Err(Error::NotATree { n, m: graph.m() });
        }
        let mut parent = vec![None; n];
        let mut children = vec![Vec::new(); n];
        let mut order = Vec::with_capacity(n);
        let mut stack = vec![root];
        let mut seen = vec![false; n];
        seen[root] = true;
        while let Some(v) = stack.pop() {
            order.push(v);
            for &w in graph.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(v);
                    children[v].push(w);
                    stack.push(w);
                }
            }
        }
        for ch in &mut children {
            ch.sort_unstable();
        }
        // children come before parents when the DFS discovery order is reversed
        order.reverse();
        Ok(RootedTree {
            graph,
            root,
            parent,
            children,
            post_order: order,
        })
    }

    /// Root at vertex 0.
    pub fn from_graph(graph: Graph) -> Result<Self> {
        Self::new(graph, 0)
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    /// Every vertex after all of its children.
    pub fn post_order(&self) -> &[usize] {
        &self.post_order
    }

    /// Parent-array text format: one line of space-separated entries,
    /// `-1` marking the root.
    pub fn to_parent_array_text(&self) -> String {
        let entries: Vec<String> = (0..self.n())
            .map(|v| match self.parent[v] {
                Some(p) => p.to_string(),
                None => "-1".to_string(),
            })
            .collect();
        entries.join(" ")
    }

    pub fn from_parent_array_text(text: &str) -> Result<Self> {
        let entries: Vec<i64> = text
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| Error::Parameter(format!("bad parent entry '{t}'")))
            })
            .collect::<Result<_>>()?;
        let n = entries.len();
        let mut g = Graph::empty(n)?;
        let mut root = None;
        for (v, &p) in entries.iter().enumerate() {
            if p < 0 {
                if root.replace(v).is_some() {
                    return Err(Error::Parameter("multiple roots in parent array".into()));
                }
            } else {
                g.add_edge(v, p as usize)?;
            }
        }
        let root = root.ok_or_else(|| Error::Parameter("no root in parent array".into()))?;
        Self::new(g, root)
    }
}

/// Per-vertex rational functions of Algorithm I.
///
/// Each vertex carries `a(v) = p_v / q_v` where `q_v` is the product of the
/// children's numerators; the whole-tree product of the `a(v)` telescopes to
/// `p_root`, which is the Laplacian characteristic polynomial. Working with
/// the unreduced pairs keeps every coefficient an integer (they are sums of
/// Laplacian minors), so no polynomial gcd is ever needed.
pub fn vertex_functions(t: &RootedTree) -> Result<Vec<RationalFunction<Int>>> {
    let n = t.n();
    let x_minus = |d: usize| Polynomial::new(vec![Int::from(-(d as i64)), Int::from(1)]);
    let mut nums: Vec<Option<IntPolynomial>> = vec![None; n];
    let mut dens: Vec<Option<IntPolynomial>> = vec![None; n];
    for &v in t.post_order() {
        let ch = t.children(v);
        if ch.is_empty() {
            nums[v] = Some(x_minus(t.graph().degree(v)));
            dens[v] = Some(Polynomial::constant(Int::from(1)));
            continue;
        }
        let child_nums: Vec<&IntPolynomial> = ch
            .iter()
            .map(|&c| nums[c].as_ref().expect("post-order processed children"))
            .collect();
        for p in &child_nums {
            if p.is_zero() {
                return Err(Error::Internal(
                    "Algorithm I met a vanishing child function".into(),
                ));
            }
        }
        // prefix[i] = product of child numerators before i, suffix likewise
        let k = child_nums.len();
        let mut prefix = vec![Polynomial::constant(Int::from(1))];
        for p in &child_nums {
            let next = prefix.last().unwrap().mul(p);
            prefix.push(next);
        }
        let mut suffix = vec![Polynomial::constant(Int::from(1)); k + 1];
        for i in (0..k).rev() {
            suffix[i] = suffix[i + 1].mul(child_nums[i]);
        }
        let q_v = prefix[k].clone();
        let mut p_v = x_minus(t.graph().degree(v)).mul(&q_v);
        for (i, &c) in ch.iter().enumerate() {
            let others = prefix[i].mul(&suffix[i + 1]);
            let q_c = dens[c].as_ref().unwrap();
            p_v = p_v.sub(&q_c.mul(&others));
        }
        nums[v] = Some(p_v);
        dens[v] = Some(q_v);
    }
    Ok((0..n)
        .map(|v| RationalFunction::new(nums[v].take().unwrap(), dens[v].take().unwrap()))
        .collect())
}

/// Algorithm I: the exact characteristic polynomial of `L(T)`.
pub fn tree_charpoly(t: &RootedTree) -> Result<ExactPolynomial> {
    let funcs = vertex_functions(t)?;
    let p_root = &funcs[t.root()].num;
    if p_root.degree() != t.n() {
        return Err(Error::Internal(format!(
            "Algorithm I produced degree {} for order {}",
            p_root.degree(),
            t.n()
        )));
    }
    Ok(p_root.to_rational())
}

/// Output of Algorithm II: the diagonal congruent to `L(T) + alpha I`.
#[derive(Debug, Clone)]
pub struct DiagResult {
    /// Final `a(v)` values, indexed by vertex.
    pub values: Vec<Rational>,
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
    /// Parent edges virtually removed, as `(child, parent)` pairs.
    pub removed_edges: Vec<(usize, usize)>,
}

/// Algorithm II: congruent diagonalization of `L(T) + alpha I` with exact
/// rational arithmetic. By Sylvester inertia the positive / negative / zero
/// counts equal the numbers of Laplacian eigenvalues greater than, smaller
/// than and equal to `-alpha`.
pub fn diagonalize_tree(t: &RootedTree, alpha: &Rational) -> DiagResult {
    let n = t.n();
    let mut a: Vec<Rational> = (0..n)
        .map(|v| Rational::from_integer(Int::from(t.graph().degree(v) as i64)) + alpha.clone())
        .collect();
    let mut detached = vec![false; n];
    let mut removed = Vec::new();
    for &v in t.post_order() {
        let live: Vec<usize> = t
            .children(v)
            .iter()
            .copied()
            .filter(|&c| !detached[c])
            .collect();
        if live.is_empty() {
            continue;
        }
        if let Some(&zero_child) = live.iter().find(|&&c| a[c].is_zero()) {
            a[v] = Rational::new(Int::from(-1), Int::from(2));
            a[zero_child] = Rational::from_integer(Int::from(2));
            if let Some(p) = t.parent(v) {
                detached[v] = true;
                removed.push((v, p));
            }
        } else {
            let mut s = a[v].clone();
            for &c in &live {
                s -= a[c].recip();
            }
            a[v] = s;
        }
    }
    let positive = a.iter().filter(|x| x.is_positive()).count();
    let negative = a.iter().filter(|x| x.is_negative()).count();
    DiagResult {
        zero: n - positive - negative,
        positive,
        negative,
        values: a,
        removed_edges: removed,
    }
}

/// Exact sigma of a tree: the number of Laplacian eigenvalues `>=` the
/// average degree `2 - 2/n`, computed as `n - negatives` of the
/// diagonalization at `alpha = -(2 - 2/n)`.
pub fn sigma_tree(t: &RootedTree) -> usize {
    let n = t.n() as i64;
    let avg = Rational::new(Int::from(2 * n - 2), Int::from(n));
    let diag = diagonalize_tree(t, &-avg);
    t.n() - diag.negative
}

/// Lazy generator of one representative per free-tree isomorphism class.
///
/// Rooted level sequences are produced by the Beyer-Hedetniemi successor
/// rule; a sequence is kept when its root is the tree's centroid (for
/// bicentral trees, when the heavier canonical half sits on the root side),
/// so each free tree appears exactly once.
pub struct FreeTrees {
    levels: Option<Vec<usize>>,
}

/// Stream the free trees on `n` vertices (1 <= n <= 20), deterministic order.
pub fn enumerate_trees(n: usize) -> Result<FreeTrees> {
    if n == 0 || n > TREE_ENUMERATION_CAP {
        return Err(Error::Parameter(format!(
            "tree enumeration supports 1..={TREE_ENUMERATION_CAP}, got {n}"
        )));
    }
    Ok(FreeTrees {
        levels: Some((1..=n).collect()),
    })
}

impl Iterator for FreeTrees {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        loop {
            let levels = self.levels.as_ref()?;
            let accepted = centroid_canonical(levels).then(|| graph_from_levels(levels));
            self.levels = successor(self.levels.take().unwrap());
            if let Some(g) = accepted {
                return Some(g);
            }
        }
    }
}

/// Beyer-Hedetniemi successor of a canonical rooted level sequence.
fn successor(mut l: Vec<usize>) -> Option<Vec<usize>> {
    let p = (0..l.len()).rev().find(|&i| l[i] > 2)?;
    let q = (0..p)
        .rev()
        .find(|&i| l[i] == l[p] - 1)
        .expect("parent level exists");
    for i in p..l.len() {
        l[i] = l[i - (p - q)];
    }
    Some(l)
}

fn parents_from_levels(l: &[usize]) -> Vec<Option<usize>> {
    let mut parent = vec![None; l.len()];
    for v in 1..l.len() {
        parent[v] = (0..v).rev().find(|&u| l[u] == l[v] - 1);
    }
    parent
}

fn graph_from_levels(l: &[usize]) -> Graph {
    let mut g = Graph::empty(l.len()).expect("n >= 1");
    for (v, p) in parents_from_levels(l).into_iter().enumerate() {
        if let Some(p) = p {
            g.add_edge(v, p).expect("valid tree edge");
        }
    }
    g
}

/// Is the root of this rooted tree the canonical centroid placement?
fn centroid_canonical(l: &[usize]) -> bool {
    let n = l.len();
    if n <= 2 {
        return true;
    }
    let parent = parents_from_levels(l);
    let mut size = vec![1usize; n];
    for v in (1..n).rev() {
        let p = parent[v].expect("non-root has a parent");
        size[p] += size[v];
    }
    let mut children = vec![Vec::new(); n];
    for v in 1..n {
        children[parent[v].unwrap()].push(v);
    }
    let heavy = children[0]
        .iter()
        .copied()
        .max_by_key(|&c| size[c])
        .expect("root has a child");
    if 2 * size[heavy] > n {
        return false;
    }
    if 2 * size[heavy] < n {
        return true;
    }
    // bicentral: compare the two canonical halves
    let half_c = canonical_half(&children, heavy, None);
    let half_r = canonical_half(&children, 0, Some(heavy));
    half_c <= half_r
}

/// Uniform random recursive tree on `n` vertices for randomized tests.
#[cfg(test)]
pub(crate) fn random_tree(rng: &mut impl rand::Rng, n: usize) -> Graph {
    let mut g = Graph::empty(n).expect("n >= 1");
    for v in 1..n {
        let p = rng.gen_range(0..v);
        g.add_edge(v, p).expect("valid edge");
    }
    g
}

/// Canonical level sequence of the subtree at `v`, optionally skipping one
/// child subtree; children sequences are sorted descending so the result is
/// orientation-independent.
fn canonical_half(children: &[Vec<usize>], v: usize, skip: Option<usize>) -> Vec<usize> {
    let mut subs: Vec<Vec<usize>> = children[v]
        .iter()
        .filter(|&&c| Some(c) != skip)
        .map(|&c| canonical_half(children, c, None))
        .collect();
    subs.sort_unstable_by(|a, b| b.cmp(a));
    let mut out = vec![1];
    for sub in subs {
        out.extend(sub.into_iter().map(|x| x + 1));
    }
    out
}
