//! Equitable-partition quotient matrices, the joined-union spectral
//! shortcuts for the normalized Laplacian and the distance signless
//! Laplacian, the block-symmetry reduction, and a catalog of closed-form
//! spectra.
//!
//! The two theorem quotients are non-symmetric (off-diagonals carry the part
//! orders); eigenvalues are computed after a diagonal similarity by
//! `diag(sqrt(n_i))`, which symmetrizes them and keeps everything in real
//! arithmetic.

use crate::graph::{Graph, JoinedUnionSpec};
use crate::linalg::symmetric_eigenvalues;
use crate::spectra::{eigen, MatrixKind, Spectrum, SymmetricMatrix};
use crate::{Error, FloatMatrix, Int, Rational, RationalMatrix, Result};
use num_traits::ToPrimitive;
use serde_json::json;

/// An exact rational value or its binary64 stand-in.
#[derive(Debug, Clone, PartialEq)]
pub enum ScalarValue {
    Exact(Rational),
    Float(f64),
}

impl ScalarValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            ScalarValue::Exact(r) => r.to_f64().expect("value fits in f64"),
            ScalarValue::Float(x) => *x,
        }
    }

    pub fn as_exact(&self) -> Option<&Rational> {
        match self {
            ScalarValue::Exact(r) => Some(r),
            ScalarValue::Float(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum QEntries {
    Exact(RationalMatrix),
    Float(FloatMatrix),
}

/// Quotient of a symmetric matrix over a vertex partition: entries are the
/// average row sums of the blocks.
#[derive(Debug, Clone, PartialEq)]
pub struct QuotientMatrix {
    pub blocks: Vec<Vec<usize>>,
    pub equitable: bool,
    entries: QEntries,
}

impl QuotientMatrix {
    pub fn order(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.entries, QEntries::Exact(_))
    }

    pub fn exact(&self) -> Result<&RationalMatrix> {
        match &self.entries {
            QEntries::Exact(m) => Ok(m),
            QEntries::Float(_) => Err(Error::NotExact("quotient entries are binary64".into())),
        }
    }

    pub fn to_float(&self) -> FloatMatrix {
        match &self.entries {
            QEntries::Exact(m) => m.map(|x| x.to_f64().expect("entry fits in f64")),
            QEntries::Float(m) => m.clone(),
        }
    }

    /// Eigenvalues, descending. The quotient of a symmetric matrix is
    /// similar to a symmetric matrix under `diag(sqrt(|P_i|))`, so the
    /// symmetric solver applies after that similarity.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        let q = self.to_float();
        let s = self.order();
        let sizes: Vec<f64> = self.blocks.iter().map(|b| b.len() as f64).collect();
        let mut b = FloatMatrix::zeros(s, s);
        for i in 0..s {
            for j in 0..s {
                b[(i, j)] = q[(i, j)] * (sizes[i] / sizes[j]).sqrt();
            }
        }
        let sym = FloatMatrix::from_fn(s, s, |i, j| 0.5 * (b[(i, j)] + b[(j, i)]));
        symmetric_eigenvalues(&sym)
    }

    /// Exact characteristic polynomial of the quotient (exact entries only).
    pub fn char_poly(&self) -> Result<crate::ExactPolynomial> {
        let m = self.exact()?;
        let integral = (0..m.nrows()).all(|i| m.row(i).iter().all(|x| x.is_integer()));
        if integral {
            Ok(crate::linalg::char_poly(&m.map(|x| x.to_integer()))?.to_rational())
        } else {
            crate::linalg::char_poly(m)
        }
    }
}

/// Average-row-sum quotient of `m` over `partition`. The equitable flag is
/// set by an exact constant-row-sum test on rational inputs (a small
/// tolerance is used for binary64 inputs).
pub fn quotient_matrix(m: &SymmetricMatrix, partition: &[Vec<usize>]) -> Result<QuotientMatrix> {
    let n = m.order();
    let mut seen = vec![false; n];
    for block in partition {
        if block.is_empty() {
            return Err(Error::BadPartition);
        }
        for &v in block {
            if v >= n || seen[v] {
                return Err(Error::BadPartition);
            }
            seen[v] = true;
        }
    }
    if seen.iter().any(|&s| !s) {
        return Err(Error::BadPartition);
    }
    let s = partition.len();
    if m.is_exact() {
        let mat = m.exact()?;
        let mut q = RationalMatrix::zeros(s, s);
        let mut equitable = true;
        for (i, bi) in partition.iter().enumerate() {
            for (j, bj) in partition.iter().enumerate() {
                let mut sums: Vec<Rational> = Vec::with_capacity(bi.len());
                for &r in bi {
                    let mut acc = Rational::from_integer(Int::from(0));
                    for &c in bj {
                        acc += mat[(r, c)].clone();
                    }
                    sums.push(acc);
                }
                if sums.windows(2).any(|w| w[0] != w[1]) {
                    equitable = false;
                }
                let total: Rational = sums.into_iter().sum();
                q[(i, j)] = total / Rational::from_integer(Int::from(bi.len() as i64));
            }
        }
        Ok(QuotientMatrix {
            blocks: partition.to_vec(),
            equitable,
            entries: QEntries::Exact(q),
        })
    } else {
        let mat = m.to_float();
        let mut q = FloatMatrix::zeros(s, s);
        let mut equitable = true;
        for (i, bi) in partition.iter().enumerate() {
            for (j, bj) in partition.iter().enumerate() {
                let sums: Vec<f64> = bi
                    .iter()
                    .map(|&r| bj.iter().map(|&c| mat[(r, c)]).sum())
                    .collect();
                let first = sums[0];
                if sums
                    .iter()
                    .any(|&x| (x - first).abs() > 1e-9 * first.abs().max(1.0))
                {
                    equitable = false;
                }
                q[(i, j)] = sums.iter().sum::<f64>() / bi.len() as f64;
            }
        }
        Ok(QuotientMatrix {
            blocks: partition.to_vec(),
            equitable,
            entries: QEntries::Float(q),
        })
    }
}

/// One inherited eigenvalue family of a joined-union shortcut.
#[derive(Debug, Clone, PartialEq)]
pub struct InheritedEigen {
    /// Which part it came from.
    pub part: usize,
    /// The part adjacency eigenvalue it was built from.
    pub adjacency_eigenvalue: ScalarValue,
    pub value: ScalarValue,
    pub multiplicity: usize,
}

/// A joined-union spectrum assembled from part spectra plus the theorem's
/// quotient matrix.
#[derive(Debug, Clone)]
pub struct ShortcutSpectrum {
    pub kind: MatrixKind,
    pub inherited: Vec<InheritedEigen>,
    pub quotient: QuotientMatrix,
    pub quotient_eigenvalues: Vec<f64>,
    pub combined: Spectrum,
}

impl ShortcutSpectrum {
    /// Total multiplicity of values within `tol` of `x`, preferring exact
    /// hits on the inherited side.
    pub fn multiplicity_near(&self, x: f64, tol: f64) -> usize {
        let inh: usize = self
            .inherited
            .iter()
            .filter(|e| (e.value.to_f64() - x).abs() <= tol)
            .map(|e| e.multiplicity)
            .sum();
        inh + self
            .quotient_eigenvalues
            .iter()
            .filter(|&&v| (v - x).abs() <= tol)
            .count()
    }

    /// JSON export: inherited families, quotient entries (exact rationals as
    /// strings), quotient eigenvalues and the combined spectrum.
    pub fn to_json(&self) -> serde_json::Value {
        let inherited: Vec<_> = self
            .inherited
            .iter()
            .map(|e| {
                json!({
                    "part": e.part,
                    "adjacency_eigenvalue": scalar_json(&e.adjacency_eigenvalue),
                    "value": scalar_json(&e.value),
                    "multiplicity": e.multiplicity,
                })
            })
            .collect();
        let s = self.quotient.order();
        let rows: Vec<Vec<serde_json::Value>> = match &self.quotient.entries {
            QEntries::Exact(m) => (0..s)
                .map(|i| (0..s).map(|j| json!(m[(i, j)].to_string())).collect())
                .collect(),
            QEntries::Float(m) => (0..s)
                .map(|i| (0..s).map(|j| json!(m[(i, j)])).collect())
                .collect(),
        };
        json!({
            "kind": self.kind.as_str(),
            "inherited": inherited,
            "quotient": rows,
            "quotient_eigenvalues": self.quotient_eigenvalues,
            "spectrum": { "kind": self.kind.as_str(), "pairs": self.combined.pairs, "tol": self.combined.tol },
        })
    }
}

fn scalar_json(v: &ScalarValue) -> serde_json::Value {
    match v {
        ScalarValue::Exact(r) => json!({ "exact": r.to_string() }),
        ScalarValue::Float(x) => json!({ "float": x }),
    }
}

/// Part adjacency spectrum with one copy of the top (regular) eigenvalue
/// removed. Complete and empty parts are recognized structurally and handled
/// exactly; anything else goes through the dense solver.
fn part_rest_spectrum(g: &Graph) -> Result<Vec<(ScalarValue, usize)>> {
    let n = g.n();
    if n == 1 {
        return Ok(Vec::new());
    }
    if g.m() == 0 {
        return Ok(vec![(ScalarValue::Exact(rat_int(0)), n - 1)]);
    }
    if g.is_complete() {
        return Ok(vec![(ScalarValue::Exact(rat_int(-1)), n - 1)]);
    }
    let spec = eigen(&crate::spectra::build_matrix(
        g,
        MatrixKind::Adjacency,
        None,
    )?)?;
    let mut pairs = spec.pairs.clone();
    pairs[0].1 -= 1;
    Ok(pairs
        .into_iter()
        .filter(|&(_, m)| m > 0)
        .map(|(v, m)| (ScalarValue::Float(v), m))
        .collect())
}

fn rat_int(x: i64) -> Rational {
    Rational::from_integer(Int::from(x))
}

struct JoinedUnionData {
    sizes: Vec<usize>,
    degrees: Vec<usize>,
    rest: Vec<Vec<(ScalarValue, usize)>>,
}

fn prepare(spec: &JoinedUnionSpec) -> Result<JoinedUnionData> {
    if !spec.skeleton.is_connected() {
        return Err(Error::Parameter(
            "joined-union skeleton must be connected".into(),
        ));
    }
    let mut degrees = Vec::with_capacity(spec.parts.len());
    for (i, part) in spec.parts.iter().enumerate() {
        if !part.is_regular() {
            return Err(Error::NonRegularPart(i));
        }
        degrees.push(part.degree(0));
    }
    let rest = spec
        .parts
        .iter()
        .map(part_rest_spectrum)
        .collect::<Result<Vec<_>>>()?;
    Ok(JoinedUnionData {
        sizes: spec.parts.iter().map(Graph::n).collect(),
        degrees,
        rest,
    })
}

fn blocks_of(sizes: &[usize]) -> Vec<Vec<usize>> {
    let mut blocks = Vec::with_capacity(sizes.len());
    let mut at = 0;
    for &s in sizes {
        blocks.push((at..at + s).collect());
        at += s;
    }
    blocks
}

/// Normalized Laplacian spectrum of a joined union of regular parts.
///
/// Inherited eigenvalues are `1 - lambda / (r_i + alpha_i)` over the part
/// adjacency eigenvalues (the top one excluded), where `alpha_i` is the total
/// order of the neighboring parts; the remaining eigenvalues come from the
/// skeleton-sized quotient matrix.
pub fn nl_joined_union_spectrum(spec: &JoinedUnionSpec) -> Result<ShortcutSpectrum> {
    let data = prepare(spec)?;
    let k = spec.skeleton.n();
    let alpha: Vec<usize> = (0..k)
        .map(|i| {
            spec.skeleton
                .neighbors(i)
                .iter()
                .map(|&j| data.sizes[j])
                .sum()
        })
        .collect();
    if let Some(i) = (0..k).find(|&i| data.degrees[i] + alpha[i] == 0) {
        return Err(Error::IsolatedVertex(spec.offset(i)));
    }
    let mut inherited = Vec::new();
    for i in 0..k {
        let denom = (data.degrees[i] + alpha[i]) as i64;
        for (lam, mult) in &data.rest[i] {
            let value = match lam {
                ScalarValue::Exact(l) => {
                    ScalarValue::Exact(rat_int(1) - l.clone() / rat_int(denom))
                }
                ScalarValue::Float(l) => ScalarValue::Float(1.0 - l / denom as f64),
            };
            inherited.push(InheritedEigen {
                part: i,
                adjacency_eigenvalue: lam.clone(),
                value,
                multiplicity: *mult,
            });
        }
    }
    let mut q = FloatMatrix::zeros(k, k);
    for i in 0..k {
        q[(i, i)] = alpha[i] as f64 / (alpha[i] + data.degrees[i]) as f64;
        for &j in spec.skeleton.neighbors(i) {
            let di = (data.degrees[i] + alpha[i]) as f64;
            let dj = (data.degrees[j] + alpha[j]) as f64;
            q[(i, j)] = -(data.sizes[j] as f64) / (di * dj).sqrt();
        }
    }
    let quotient = QuotientMatrix {
        blocks: blocks_of(&data.sizes),
        equitable: true,
        entries: QEntries::Float(q),
    };
    finish(MatrixKind::NormalizedLaplacian, inherited, quotient)
}

/// Distance signless Laplacian spectrum of a joined union of regular parts.
///
/// Inherited eigenvalues are `2 n_i + n_i' - r_i - lambda - 4` with `n_i'`
/// the size-weighted skeleton transmission of part `i`; the quotient matrix
/// is integral with diagonal `4 n_i + n_i' - 2 r_i - 4` and off-diagonal
/// `n_j d(v_i, v_j)`.
pub fn dsq_joined_union_spectrum(spec: &JoinedUnionSpec) -> Result<ShortcutSpectrum> {
    let data = prepare(spec)?;
    let k = spec.skeleton.n();
    if k == 1 {
        // the joined union is the part itself; the distance model needs it complete
        if !spec.parts[0].is_complete() {
            return Err(Error::Parameter(
                "one-vertex skeleton requires a complete part for distance shortcuts".into(),
            ));
        }
    }
    let dist: Vec<Vec<usize>> = (0..k).map(|i| spec.skeleton.bfs_distances(i)).collect();
    let nprime: Vec<i64> = (0..k)
        .map(|i| (0..k).map(|j| (data.sizes[j] * dist[i][j]) as i64).sum())
        .collect();
    let mut inherited = Vec::new();
    for i in 0..k {
        let base = 2 * data.sizes[i] as i64 + nprime[i] - data.degrees[i] as i64 - 4;
        for (lam, mult) in &data.rest[i] {
            let value = match lam {
                ScalarValue::Exact(l) => ScalarValue::Exact(rat_int(base) - l.clone()),
                ScalarValue::Float(l) => ScalarValue::Float(base as f64 - l),
            };
            inherited.push(InheritedEigen {
                part: i,
                adjacency_eigenvalue: lam.clone(),
                value,
                multiplicity: *mult,
            });
        }
    }
    let mut q = RationalMatrix::zeros(k, k);
    for i in 0..k {
        q[(i, i)] = rat_int(4 * data.sizes[i] as i64 + nprime[i] - 2 * data.degrees[i] as i64 - 4);
        for j in 0..k {
            if j != i {
                q[(i, j)] = rat_int((data.sizes[j] * dist[i][j]) as i64);
            }
        }
    }
    let quotient = QuotientMatrix {
        blocks: blocks_of(&data.sizes),
        equitable: true,
        entries: QEntries::Exact(q),
    };
    finish(MatrixKind::DistanceSignlessLaplacian, inherited, quotient)
}

fn finish(
    kind: MatrixKind,
    inherited: Vec<InheritedEigen>,
    quotient: QuotientMatrix,
) -> Result<ShortcutSpectrum> {
    let quotient_eigenvalues = quotient.eigenvalues()?;
    let mut values: Vec<f64> = quotient_eigenvalues.clone();
    for e in &inherited {
        values.extend(std::iter::repeat_n(e.value.to_f64(), e.multiplicity));
    }
    Ok(ShortcutSpectrum {
        kind,
        inherited,
        quotient,
        quotient_eigenvalues,
        combined: Spectrum::from_values(kind, values),
    })
}

/// Result of the block-symmetry reduction of a matrix with `c` identical
/// diagonal blocks `B` coupled by `C`.
#[derive(Debug, Clone)]
pub struct BlockReduction {
    /// Eigenvalues of `B - C`, each entering the original spectrum with
    /// multiplicity `copies - 1`.
    pub repeated: Vec<f64>,
    pub multiplicity: usize,
    /// The reduced `(t+s) x (t+s)` matrix carrying the remaining eigenvalues.
    pub reduced: FloatMatrix,
}

/// Reduce a block-symmetric matrix: the spectrum of the original equals
/// `copies - 1` copies of `spec(B - C)` together with the spectrum of
/// `[[X, sqrt(c) beta], [sqrt(c) beta^T, B + (c-1) C]]`.
pub fn block_symmetric_reduce(
    x: &FloatMatrix,
    beta: &FloatMatrix,
    b: &FloatMatrix,
    c: &FloatMatrix,
    copies: usize,
) -> Result<BlockReduction> {
    let t = x.nrows();
    let s = b.nrows();
    if !x.is_square() || !b.is_square() || !c.is_square() || c.nrows() != s {
        return Err(Error::Dimension(
            "X, B, C must be square with B, C equal sized".into(),
        ));
    }
    if beta.nrows() != t || beta.ncols() != s {
        return Err(Error::Dimension(format!(
            "beta must be {t} x {s}, got {} x {}",
            beta.nrows(),
            beta.ncols()
        )));
    }
    if copies < 1 {
        return Err(Error::Parameter("block count must be >= 1".into()));
    }
    let repeated = if copies > 1 {
        symmetric_eigenvalues(&b.sub(c))?
    } else {
        Vec::new()
    };
    let root = (copies as f64).sqrt();
    let mut reduced = FloatMatrix::zeros(t + s, t + s);
    for i in 0..t {
        for j in 0..t {
            reduced[(i, j)] = x[(i, j)];
        }
        for j in 0..s {
            reduced[(i, t + j)] = root * beta[(i, j)];
            reduced[(t + j, i)] = root * beta[(i, j)];
        }
    }
    for i in 0..s {
        for j in 0..s {
            reduced[(t + i, t + j)] = b[(i, j)] + (copies as f64 - 1.0) * c[(i, j)];
        }
    }
    Ok(BlockReduction {
        repeated,
        multiplicity: copies - 1,
        reduced,
    })
}

/// Assemble the full block-symmetric matrix (for oracle checks).
pub fn assemble_block_matrix(
    x: &FloatMatrix,
    beta: &FloatMatrix,
    b: &FloatMatrix,
    c: &FloatMatrix,
    copies: usize,
) -> FloatMatrix {
    let t = x.nrows();
    let s = b.nrows();
    let n = t + copies * s;
    let mut m = FloatMatrix::zeros(n, n);
    for i in 0..t {
        for j in 0..t {
            m[(i, j)] = x[(i, j)];
        }
        for k in 0..copies {
            for j in 0..s {
                m[(i, t + k * s + j)] = beta[(i, j)];
                m[(t + k * s + j, i)] = beta[(i, j)];
            }
        }
    }
    for k1 in 0..copies {
        for k2 in 0..copies {
            let block = if k1 == k2 { b } else { c };
            for i in 0..s {
                for j in 0..s {
                    m[(t + k1 * s + i, t + k2 * s + j)] = block[(i, j)];
                }
            }
        }
    }
    m
}

/// Closed-form spectra from the catalog. Every entry is validated against
/// the dense oracle in the test suite; the forms below are the
/// oracle-confirmed ones.
#[derive(Debug, Clone, PartialEq)]
pub enum CatalogEntry {
    CompleteBipartiteNl { a: usize, b: usize },
    CompleteSplitNl { omega: usize, n: usize },
    ConeNl { a: usize, b: usize },
    WheelNl { n: usize },
    FriendshipNl { n: usize },
    FireflyNl { p: usize, n: usize },
    GeneralizedWheelNl { a: usize, b: usize },
    PowerPrimePowerNl { p: u64, z: u32 },
    CompleteBipartiteDsq { a: usize, b: usize },
    CompleteSplitDsq { omega: usize, n: usize },
    StarDalpha { n: usize, alpha: f64 },
    CompleteBipartiteDalpha { a: usize, n: usize, alpha: f64 },
    ZeroDivisorPqDsq { p: u64, q: u64 },
    ZeroDivisorP2qDsq { p: u64, q: u64 },
    ZeroDivisorP3Dsq { p: u64 },
    ZeroDivisorP4Dsq { p: u64 },
}

impl CatalogEntry {
    pub fn kind(&self) -> MatrixKind {
        use CatalogEntry::*;
        match self {
            CompleteBipartiteNl { .. }
            | CompleteSplitNl { .. }
            | ConeNl { .. }
            | WheelNl { .. }
            | FriendshipNl { .. }
            | FireflyNl { .. }
            | GeneralizedWheelNl { .. }
            | PowerPrimePowerNl { .. } => MatrixKind::NormalizedLaplacian,
            CompleteBipartiteDsq { .. }
            | CompleteSplitDsq { .. }
            | ZeroDivisorPqDsq { .. }
            | ZeroDivisorP2qDsq { .. }
            | ZeroDivisorP3Dsq { .. }
            | ZeroDivisorP4Dsq { .. } => MatrixKind::DistanceSignlessLaplacian,
            StarDalpha { .. } | CompleteBipartiteDalpha { .. } => MatrixKind::GeneralizedDistance,
        }
    }
}

fn is_prime(n: u64) -> bool {
    n >= 2 && crate::algebraic::factorize(n) == vec![(n, 1)]
}

fn push(values: &mut Vec<f64>, v: f64, mult: usize) {
    values.extend(std::iter::repeat_n(v, mult));
}

/// Evaluate a catalog entry numerically.
pub fn closed_form_spectrum(entry: &CatalogEntry) -> Result<Spectrum> {
    use std::f64::consts::PI;
    let mut values: Vec<f64> = Vec::new();
    match *entry {
        CatalogEntry::CompleteBipartiteNl { a, b } => {
            if a < 1 || b < 1 {
                return Err(Error::Parameter("K_{a,b} needs a,b >= 1".into()));
            }
            values.push(2.0);
            push(&mut values, 1.0, a + b - 2);
            values.push(0.0);
        }
        CatalogEntry::CompleteSplitNl { omega, n } => {
            if omega < 1 || omega >= n {
                return Err(Error::Parameter(
                    "complete split needs 1 <= omega < n".into(),
                ));
            }
            let nf = n as f64;
            // trace identity pins the simple eigenvalue at (2n - omega - 1)/(n - 1)
            values.push((2.0 * nf - omega as f64 - 1.0) / (nf - 1.0));
            push(&mut values, nf / (nf - 1.0), omega - 1);
            push(&mut values, 1.0, n - omega - 1);
            values.push(0.0);
        }
        CatalogEntry::ConeNl { a, b } => {
            if a < 3 || b < 1 {
                return Err(Error::Parameter("cone needs a >= 3, b >= 1".into()));
            }
            for k in 1..a {
                values.push(1.0 - 2.0 * (2.0 * PI * k as f64 / a as f64).cos() / (2 + b) as f64);
            }
            push(&mut values, 1.0, b - 1);
            values.push(0.0);
            values.push((2 * b + 2) as f64 / (b + 2) as f64);
        }
        CatalogEntry::WheelNl { n } => {
            if n < 4 {
                return Err(Error::Parameter("wheel needs n >= 4".into()));
            }
            return closed_form_spectrum(&CatalogEntry::ConeNl { a: n - 1, b: 1 });
        }
        CatalogEntry::FriendshipNl { n } => {
            if n < 1 {
                return Err(Error::Parameter("friendship needs n >= 1".into()));
            }
            values.push(0.0);
            push(&mut values, 0.5, n - 1);
            push(&mut values, 1.5, n + 1);
        }
        CatalogEntry::FireflyNl { p, n } => {
            if p < 1 || p + 1 > n {
                return Err(Error::Parameter(
                    "firefly closed form needs 1 <= p <= n-1".into(),
                ));
            }
            values.push(0.0);
            push(&mut values, 0.5, n - p - 1);
            push(&mut values, 1.0, p - 1);
            push(&mut values, 1.5, n - p);
            let root = ((2 * n - p) as f64).sqrt();
            let disc = ((2 * n + 7 * p) as f64).sqrt();
            values.push((5.0 * root + disc) / (4.0 * root));
            values.push((5.0 * root - disc) / (4.0 * root));
        }
        CatalogEntry::GeneralizedWheelNl { a, b } => {
            if a < 1 || b < 3 {
                return Err(Error::Parameter(
                    "generalized wheel needs a >= 1, b >= 3".into(),
                ));
            }
            values.push(0.0);
            values.push(4.0 / 3.0);
            // the statement omits the (1/3)^[a-1] family its proof derives
            push(&mut values, 1.0 / 3.0, a - 1);
            for k in 1..b {
                push(
                    &mut values,
                    1.0 - 2.0 / 3.0 * (2.0 * PI * k as f64 / b as f64).cos(),
                    a,
                );
            }
        }
        CatalogEntry::PowerPrimePowerNl { p, z } => {
            if !is_prime(p) || z < 1 {
                return Err(Error::Parameter("needs a prime p and z >= 1".into()));
            }
            let n = p.pow(z) as f64;
            values.push(0.0);
            push(&mut values, n / (n - 1.0), (n - 1.0) as usize);
        }
        CatalogEntry::CompleteBipartiteDsq { a, b } => {
            if a < 1 || b < 1 || a + b < 2 {
                return Err(Error::Parameter("K_{a,b} needs a,b >= 1".into()));
            }
            let (af, bf) = (a as f64, b as f64);
            let disc = (9.0 * (af - bf) * (af - bf) + 4.0 * af * bf).sqrt();
            values.push((5.0 * (af + bf) - 8.0 + disc) / 2.0);
            values.push((5.0 * (af + bf) - 8.0 - disc) / 2.0);
            push(&mut values, 2.0 * af + bf - 4.0, a - 1);
            push(&mut values, 2.0 * bf + af - 4.0, b - 1);
        }
        CatalogEntry::CompleteSplitDsq { omega, n } => {
            if omega < 1 || omega >= n {
                return Err(Error::Parameter(
                    "complete split needs 1 <= omega < n".into(),
                ));
            }
            let (w, nf) = (omega as f64, n as f64);
            let d = (3.0 * (2.0 * w - nf) - 2.0 * (w - 1.0)).powi(2) + 4.0 * w * (nf - w);
            values.push((5.0 * nf - 2.0 * w - 6.0 + d.sqrt()) / 2.0);
            values.push((5.0 * nf - 2.0 * w - 6.0 - d.sqrt()) / 2.0);
            push(&mut values, nf - 2.0, omega - 1);
            push(&mut values, 2.0 * nf - w - 4.0, n - omega - 1);
        }
        CatalogEntry::StarDalpha { n, alpha } => {
            if n < 4 || !(0.0..1.0).contains(&alpha) {
                return Err(Error::Parameter(
                    "star D_alpha needs n >= 4, alpha in [0,1)".into(),
                ));
            }
            let nf = n as f64;
            let k = star_dalpha_discriminant(nf, alpha);
            values.push((alpha * nf + 2.0 * nf - 4.0 + k.sqrt()) / 2.0);
            values.push((alpha * nf + 2.0 * nf - 4.0 - k.sqrt()) / 2.0);
            push(&mut values, alpha * (2.0 * nf - 1.0) - 2.0, n - 2);
        }
        CatalogEntry::CompleteBipartiteDalpha { a, n, alpha } => {
            if a < 1 || a >= n || !(0.0..1.0).contains(&alpha) {
                return Err(Error::Parameter(
                    "bipartite D_alpha needs 1 <= a < n, alpha in [0,1)".into(),
                ));
            }
            let (af, nf) = (a as f64, n as f64);
            let delta = (2.0 * af * af + nf * nf - 2.0 * nf * af) * (alpha - 2.0).powi(2)
                + 2.0 * (nf * af - af * af) * (alpha * alpha - 2.0);
            values.push((alpha * nf + 2.0 * nf - 4.0 + delta.sqrt()) / 2.0);
            values.push((alpha * nf + 2.0 * nf - 4.0 - delta.sqrt()) / 2.0);
            push(&mut values, alpha * (af + nf) - 2.0, a - 1);
            push(&mut values, alpha * (2.0 * nf - af) - 2.0, n - a - 1);
        }
        CatalogEntry::ZeroDivisorPqDsq { p, q } => {
            if !is_prime(p) || !is_prime(q) || p == q {
                return Err(Error::Parameter("needs distinct primes p, q".into()));
            }
            return closed_form_spectrum(&CatalogEntry::CompleteBipartiteDsq {
                a: (p - 1) as usize,
                b: (q - 1) as usize,
            })
            .map(|mut s| {
                s.kind = MatrixKind::DistanceSignlessLaplacian;
                s
            });
        }
        CatalogEntry::ZeroDivisorP2qDsq { p, q } => {
            if !is_prime(p) || !is_prime(q) || p == q {
                return Err(Error::Parameter("needs distinct primes p, q".into()));
            }
            let (pf, qf) = (p as f64, q as f64);
            // inherited eigenvalues of the four divisor classes, one per
            // part adjacency eigenvalue below the top
            push(
                &mut values,
                3.0 * pf * pf + 2.0 * pf * qf - 4.0 * pf - 5.0,
                ((p - 1) * (q - 1) - 1) as usize,
            );
            push(
                &mut values,
                2.0 * pf * pf + pf * qf - 2.0 * pf - 3.0,
                (p - 2) as usize,
            );
            push(
                &mut values,
                pf * pf + 2.0 * pf * qf - 2.0 * pf - 5.0,
                (q - 2) as usize,
            );
            push(
                &mut values,
                2.0 * pf * pf + 3.0 * pf * qf - 3.0 * pf - 2.0 * qf - 4.0,
                (p * p - p - 1) as usize,
            );
            let (_, dec) = crate::algebraic::zero_divisor_graph(p * p * q)?;
            let shortcut = dsq_joined_union_spectrum(&dec.to_joined_union_spec()?)?;
            values.extend(shortcut.quotient_eigenvalues.iter());
        }
        CatalogEntry::ZeroDivisorP3Dsq { p } => {
            if !is_prime(p) || p < 2 {
                return Err(Error::Parameter("needs a prime p".into()));
            }
            return closed_form_spectrum(&CatalogEntry::CompleteSplitDsq {
                omega: (p - 1) as usize,
                n: (p * p - 1) as usize,
            });
        }
        CatalogEntry::ZeroDivisorP4Dsq { p } => {
            if !is_prime(p) {
                return Err(Error::Parameter("needs a prime p".into()));
            }
            let pf = p as f64;
            let order = pf * pf * pf - 1.0;
            push(&mut values, order - 2.0, (p - 2) as usize);
            push(
                &mut values,
                2.0 * order - pf - 3.0,
                (p * p * (p - 1) - 1) as usize,
            );
            push(
                &mut values,
                2.0 * order - pf * pf - 1.0,
                (p * (p - 1) - 1) as usize,
            );
            let (_, dec) = crate::algebraic::zero_divisor_graph(p.pow(4))?;
            let shortcut = dsq_joined_union_spectrum(&dec.to_joined_union_spec()?)?;
            values.extend(shortcut.quotient_eigenvalues.iter());
        }
    }
    Ok(Spectrum::from_values(entry.kind(), values))
}

fn star_dalpha_discriminant(n: f64, alpha: f64) -> f64 {
    (n * n - 2.0 * n + 2.0) * (alpha - 2.0).powi(2) + 2.0 * (n - 1.0) * (alpha * alpha - 2.0)
}

/// Closed-form generalized distance energy of the star `S_n`.
///
/// Branch split at `alpha = 2n/(3n-2)`: below it only the spectral radius
/// exceeds the eigenvalue mean; at and above it all but the least eigenvalue
/// do. Both branches follow from the closed-form spectrum.
pub fn star_dalpha_energy(n: usize, alpha: f64) -> Result<f64> {
    if n < 4 || !(0.0..1.0).contains(&alpha) {
        return Err(Error::Parameter(
            "star energy needs n >= 4, alpha in [0,1)".into(),
        ));
    }
    let nf = n as f64;
    let k = star_dalpha_discriminant(nf, alpha).sqrt();
    if alpha < 2.0 * nf / (3.0 * nf - 2.0) {
        Ok(k + 2.0 * nf + alpha * (8.0 - 3.0 * nf) - 4.0 - 4.0 * alpha / nf)
    } else {
        Ok(k + alpha * (3.0 * nf - 8.0) + 4.0 * alpha / nf - 2.0 * nf + 4.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_named, joined_union, FamilySpec};
    use crate::spectra::build_matrix;

    #[test]
    fn laplacian_quotient_of_complete_bipartite() {
        let g = build_named(&FamilySpec::CompleteBipartite { a: 3, b: 5 }).unwrap();
        let l = build_matrix(&g, MatrixKind::Laplacian, None).unwrap();
        let partition = vec![(0..3).collect::<Vec<_>>(), (3..8).collect()];
        let q = quotient_matrix(&l, &partition).unwrap();
        assert!(q.equitable);
        let mut ev = q.eigenvalues().unwrap();
        ev.sort_by(|a, b| b.partial_cmp(a).unwrap());
        assert!((ev[0] - 8.0).abs() < 1e-10 && ev[1].abs() < 1e-10);
        // quotient eigenvalues are parent eigenvalues
        let spec = eigen(&l).unwrap();
        assert!(spec.multiplicity_near(8.0, 1e-8) >= 1);
        assert!(spec.multiplicity_near(0.0, 1e-8) >= 1);
    }

    #[test]
    fn singleton_partition_is_identity() {
        let g = build_named(&FamilySpec::Cycle { n: 4 }).unwrap();
        let l = build_matrix(&g, MatrixKind::Laplacian, None).unwrap();
        let partition: Vec<Vec<usize>> = (0..4).map(|v| vec![v]).collect();
        let q = quotient_matrix(&l, &partition).unwrap();
        assert!(q.equitable);
        assert_eq!(q.exact().unwrap(), l.exact().unwrap());
    }

    #[test]
    fn non_equitable_partition_interlaces() {
        let g = build_named(&FamilySpec::Path { n: 4 }).unwrap();
        let l = build_matrix(&g, MatrixKind::Laplacian, None).unwrap();
        let partition = vec![vec![0, 1], vec![2, 3]];
        let q = quotient_matrix(&l, &partition).unwrap();
        assert!(!q.equitable);
        let mut qs = q.eigenvalues().unwrap();
        qs.sort_by(|a, b| b.partial_cmp(a).unwrap());
        let parent = eigen(&l).unwrap().values();
        // Cauchy interlacing: parent[i] >= q[i] >= parent[i + n - s]
        for (i, &v) in qs.iter().enumerate() {
            assert!(parent[i] + 1e-9 >= v && v + 1e-9 >= parent[i + 2]);
        }
    }

    #[test]
    fn bad_partition_rejected() {
        let g = build_named(&FamilySpec::Path { n: 3 }).unwrap();
        let l = build_matrix(&g, MatrixKind::Laplacian, None).unwrap();
        assert!(quotient_matrix(&l, &[vec![0, 1]]).is_err());
        assert!(quotient_matrix(&l, &[vec![0, 1], vec![1, 2]]).is_err());
    }

    fn shortcut_matches_oracle(spec: &JoinedUnionSpec) {
        let g = joined_union(spec).unwrap();
        let nl = nl_joined_union_spectrum(spec).unwrap();
        let oracle =
            eigen(&build_matrix(&g, MatrixKind::NormalizedLaplacian, None).unwrap()).unwrap();
        assert!(nl.combined.multiset_eq(&oracle, 1e-8), "NL mismatch");
        let dsq = dsq_joined_union_spectrum(spec).unwrap();
        let oracle =
            eigen(&build_matrix(&g, MatrixKind::DistanceSignlessLaplacian, None).unwrap()).unwrap();
        assert!(dsq.combined.multiset_eq(&oracle, 1e-8), "DSQ mismatch");
    }

    #[test]
    fn shortcuts_match_oracle_on_small_specs() {
        let k2 = build_named(&FamilySpec::Complete { n: 2 }).unwrap();
        let p3 = build_named(&FamilySpec::Path { n: 3 }).unwrap();
        let c4 = build_named(&FamilySpec::Cycle { n: 4 }).unwrap();
        let k3 = build_named(&FamilySpec::Complete { n: 3 }).unwrap();
        let e2 = Graph::empty(2).unwrap();
        let e3 = Graph::empty(3).unwrap();
        shortcut_matches_oracle(
            &JoinedUnionSpec::new(k2.clone(), vec![e2.clone(), e3.clone()]).unwrap(),
        );
        shortcut_matches_oracle(
            &JoinedUnionSpec::new(p3.clone(), vec![k3.clone(), e2.clone(), c4.clone()]).unwrap(),
        );
        shortcut_matches_oracle(
            &JoinedUnionSpec::new(c4, vec![e3.clone(), k3.clone(), e2.clone(), k2.clone()])
                .unwrap(),
        );
    }

    #[test]
    fn friendship_nl_closed_form() {
        // K_{1,n}[K_1, K_2, ..., K_2] -> {0, (1/2)^[n-1], (3/2)^[n+1]}
        let n = 4;
        let star = build_named(&FamilySpec::Star { n: n + 1 }).unwrap();
        let k2 = build_named(&FamilySpec::Complete { n: 2 }).unwrap();
        let mut parts = vec![Graph::empty(1).unwrap()];
        parts.extend(std::iter::repeat_n(k2, n));
        let spec = JoinedUnionSpec::new(star, parts).unwrap();
        let sc = nl_joined_union_spectrum(&spec).unwrap();
        assert_eq!(sc.combined.multiplicity_near(0.5, 1e-8), n - 1);
        assert_eq!(sc.combined.multiplicity_near(1.5, 1e-8), n + 1);
        assert_eq!(sc.combined.multiplicity_near(0.0, 1e-8), 1);
        let formula = closed_form_spectrum(&CatalogEntry::FriendshipNl { n }).unwrap();
        assert!(sc.combined.multiset_eq(&formula, 1e-8));
    }

    #[test]
    fn non_regular_part_is_named() {
        let k2 = build_named(&FamilySpec::Complete { n: 2 }).unwrap();
        let p3 = build_named(&FamilySpec::Path { n: 3 }).unwrap();
        let spec = JoinedUnionSpec::new(k2, vec![Graph::empty(1).unwrap(), p3]).unwrap();
        match nl_joined_union_spectrum(&spec) {
            Err(Error::NonRegularPart(1)) => {}
            other => panic!("expected NonRegularPart(1), got {other:?}"),
        }
    }

    #[test]
    fn dsq_of_k22_values() {
        let k2 = build_named(&FamilySpec::Complete { n: 2 }).unwrap();
        let e2 = Graph::empty(2).unwrap();
        let spec = JoinedUnionSpec::new(k2, vec![e2.clone(), e2]).unwrap();
        let sc = dsq_joined_union_spectrum(&spec).unwrap();
        let got = sc.combined.values();
        for (g, w) in got.iter().zip([8.0, 4.0, 2.0, 2.0]) {
            assert!((g - w).abs() < 1e-9);
        }
        // matches the closed form
        let formula =
            closed_form_spectrum(&CatalogEntry::CompleteBipartiteDsq { a: 2, b: 2 }).unwrap();
        assert!(sc.combined.multiset_eq(&formula, 1e-8));
    }

    #[test]
    fn block_reduce_single_copy_is_identity() {
        let x = FloatMatrix::from_rows(vec![vec![1.0]]).unwrap();
        let beta = FloatMatrix::from_rows(vec![vec![2.0, 0.0]]).unwrap();
        let b = FloatMatrix::from_rows(vec![vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        let c = FloatMatrix::zeros(2, 2);
        let red = block_symmetric_reduce(&x, &beta, &b, &c, 1).unwrap();
        assert!(red.repeated.is_empty());
        assert_eq!(red.reduced, assemble_block_matrix(&x, &beta, &b, &c, 1));
    }

    #[test]
    fn block_reduce_matches_oracle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for copies in [2usize, 3, 4] {
            let (t, s) = (2usize, 3usize);
            let sym = |rng: &mut rand_chacha::ChaCha8Rng, k: usize| {
                let mut m = FloatMatrix::zeros(k, k);
                for i in 0..k {
                    for j in i..k {
                        let v = rng.gen_range(-3.0..3.0);
                        m[(i, j)] = v;
                        m[(j, i)] = v;
                    }
                }
                m
            };
            let x = sym(&mut rng, t);
            let b = sym(&mut rng, s);
            let c = sym(&mut rng, s);
            let beta = FloatMatrix::from_fn(t, s, |_, _| rng.gen_range(-2.0..2.0));
            let red = block_symmetric_reduce(&x, &beta, &b, &c, copies).unwrap();
            let mut assembled: Vec<f64> = Vec::new();
            for _ in 0..red.multiplicity {
                assembled.extend(red.repeated.iter());
            }
            assembled.extend(symmetric_eigenvalues(&red.reduced).unwrap());
            assembled.sort_by(|a, b| b.partial_cmp(a).unwrap());
            let full = assemble_block_matrix(&x, &beta, &b, &c, copies);
            let oracle = symmetric_eigenvalues(&full).unwrap();
            for (a, b) in assembled.iter().zip(&oracle) {
                assert!((a - b).abs() < 1e-8, "copies={copies}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn star_dalpha_example() {
        // n=4, alpha=1/2: k=12, eigenvalues {(6 +- sqrt 12)/2, 1.5^[2]}, trace 9
        let spec = closed_form_spectrum(&CatalogEntry::StarDalpha { n: 4, alpha: 0.5 }).unwrap();
        let vals = spec.values();
        let d = 12f64.sqrt();
        assert!((vals[0] - (6.0 + d) / 2.0).abs() < 1e-12);
        assert_eq!(spec.multiplicity_near(1.5, 1e-9), 2);
        let trace: f64 = vals.iter().sum();
        assert!((trace - 9.0).abs() < 1e-9);
    }

    #[test]
    fn wheel_nl_contains_zero_and_four_thirds() {
        let spec = closed_form_spectrum(&CatalogEntry::WheelNl { n: 7 }).unwrap();
        assert!(spec.multiplicity_near(0.0, 1e-9) >= 1);
        assert!(spec.multiplicity_near(4.0 / 3.0, 1e-9) >= 1);
    }

    #[test]
    fn catalog_against_oracle_spot_checks() {
        for (entry, g) in [
            (
                CatalogEntry::CompleteSplitNl { omega: 3, n: 7 },
                build_named(&FamilySpec::CompleteSplit { omega: 3, n: 7 }).unwrap(),
            ),
            (
                CatalogEntry::ConeNl { a: 5, b: 2 },
                build_named(&FamilySpec::Cone { a: 5, b: 2 }).unwrap(),
            ),
            (
                CatalogEntry::FireflyNl { p: 2, n: 5 },
                build_named(&FamilySpec::Firefly { p: 2, n: 5 }).unwrap(),
            ),
            (
                CatalogEntry::GeneralizedWheelNl { a: 3, b: 4 },
                build_named(&FamilySpec::GeneralizedWheel { a: 3, b: 4 }).unwrap(),
            ),
        ] {
            let formula = closed_form_spectrum(&entry).unwrap();
            let oracle =
                eigen(&build_matrix(&g, MatrixKind::NormalizedLaplacian, None).unwrap()).unwrap();
            assert!(formula.multiset_eq(&oracle, 1e-8), "{entry:?}");
        }
    }

    #[test]
    fn star_energy_matches_both_branches() {
        for n in [4usize, 7, 12] {
            let g = build_named(&FamilySpec::Star { n }).unwrap();
            for alpha in [0.1, 0.3, 0.5, 0.7, 0.9] {
                let closed = star_dalpha_energy(n, alpha).unwrap();
                let oracle = crate::spectra::generalized_distance_energy(&g, alpha).unwrap();
                assert!(
                    (closed - oracle).abs() < 1e-8,
                    "n={n} alpha={alpha}: {closed} vs {oracle}"
                );
            }
        }
    }
}
