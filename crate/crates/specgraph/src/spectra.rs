//! The six matrix flavors, floating-point spectra with multiplicity
//! grouping, exact characteristic polynomials, and spectral functionals
//! (S_k, Laplacian energy, generalized distance energy).

use crate::graph::{distances, Graph};
use crate::linalg::{char_poly, symmetric_eigenvalues};
use crate::{Error, ExactPolynomial, FloatMatrix, Rational, RationalMatrix, Result};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Relative multiplicity-grouping tolerance: values within
/// `GROUP_TOL * max(1, |value|)` of each other collapse into one eigenvalue.
pub const GROUP_TOL: f64 = 1e-8;

/// Which matrix a [`SymmetricMatrix`] or [`Spectrum`] refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MatrixKind {
    #[serde(rename = "a")]
    Adjacency,
    #[serde(rename = "l")]
    Laplacian,
    #[serde(rename = "nl")]
    NormalizedLaplacian,
    #[serde(rename = "q")]
    SignlessLaplacian,
    #[serde(rename = "dist")]
    Distance,
    #[serde(rename = "distl")]
    DistanceLaplacian,
    #[serde(rename = "dsq")]
    DistanceSignlessLaplacian,
    #[serde(rename = "dalpha")]
    GeneralizedDistance,
    #[serde(rename = "trdiag")]
    TransmissionDiag,
}

impl MatrixKind {
    pub fn needs_distances(self) -> bool {
        matches!(
            self,
            MatrixKind::Distance
                | MatrixKind::DistanceLaplacian
                | MatrixKind::DistanceSignlessLaplacian
                | MatrixKind::GeneralizedDistance
                | MatrixKind::TransmissionDiag
        )
    }

    pub fn needs_alpha(self) -> bool {
        matches!(self, MatrixKind::GeneralizedDistance)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            MatrixKind::Adjacency => "a",
            MatrixKind::Laplacian => "l",
            MatrixKind::NormalizedLaplacian => "nl",
            MatrixKind::SignlessLaplacian => "q",
            MatrixKind::Distance => "dist",
            MatrixKind::DistanceLaplacian => "distl",
            MatrixKind::DistanceSignlessLaplacian => "dsq",
            MatrixKind::GeneralizedDistance => "dalpha",
            MatrixKind::TransmissionDiag => "trdiag",
        }
    }
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MatrixKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "a" | "adj" => MatrixKind::Adjacency,
            "l" | "lap" => MatrixKind::Laplacian,
            "nl" => MatrixKind::NormalizedLaplacian,
            "q" => MatrixKind::SignlessLaplacian,
            "dist" | "d" => MatrixKind::Distance,
            "distl" | "dl" => MatrixKind::DistanceLaplacian,
            "dsq" | "dq" => MatrixKind::DistanceSignlessLaplacian,
            "dalpha" => MatrixKind::GeneralizedDistance,
            "trdiag" | "tr" => MatrixKind::TransmissionDiag,
            other => return Err(Error::Parameter(format!("unknown matrix kind '{other}'"))),
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Storage {
    Exact(RationalMatrix),
    Float(FloatMatrix),
}

/// A symmetric graph matrix. Entries are exact rationals for every kind
/// except the normalized Laplacian, which is inherently irrational and kept
/// in binary64.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    pub kind: MatrixKind,
    /// Present iff `kind == GeneralizedDistance`.
    pub alpha: Option<Rational>,
    storage: Storage,
}

impl SymmetricMatrix {
    pub fn order(&self) -> usize {
        match &self.storage {
            Storage::Exact(m) => m.nrows(),
            Storage::Float(m) => m.nrows(),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.storage, Storage::Exact(_))
    }

    pub fn exact(&self) -> Result<&RationalMatrix> {
        match &self.storage {
            Storage::Exact(m) => Ok(m),
            Storage::Float(_) => Err(Error::NotExact(format!(
                "{} matrix is stored in binary64",
                self.kind
            ))),
        }
    }

    /// Binary64 view (lossless for the exact kinds at desk scale).
    pub fn to_float(&self) -> FloatMatrix {
        match &self.storage {
            Storage::Exact(m) => m.map(|x| x.to_f64().expect("entry fits in f64")),
            Storage::Float(m) => m.clone(),
        }
    }

    pub fn from_exact(kind: MatrixKind, alpha: Option<Rational>, m: RationalMatrix) -> Self {
        SymmetricMatrix {
            kind,
            alpha,
            storage: Storage::Exact(m),
        }
    }

    pub fn from_float(kind: MatrixKind, m: FloatMatrix) -> Self {
        SymmetricMatrix {
            kind,
            alpha: None,
            storage: Storage::Float(m),
        }
    }
}

/// Assemble the requested matrix for `g`.
///
/// `alpha` must be supplied (in `[0, 1]`) exactly when `kind` is the
/// generalized distance matrix. Distance-based kinds require `g` connected;
/// the normalized Laplacian rejects isolated vertices.
pub fn build_matrix(
    g: &Graph,
    kind: MatrixKind,
    alpha: Option<&Rational>,
) -> Result<SymmetricMatrix> {
    let n = g.n();
    if kind.needs_alpha() != alpha.is_some() {
        return Err(Error::Parameter(
            "alpha must be given exactly for the generalized distance matrix".into(),
        ));
    }
    let int = |x: i64| Rational::from_integer(x.into());
    match kind {
        MatrixKind::Adjacency | MatrixKind::Laplacian | MatrixKind::SignlessLaplacian => {
            let mut m = RationalMatrix::zeros(n, n);
            for (u, v) in g.edges() {
                let off = match kind {
                    MatrixKind::Laplacian => int(-1),
                    _ => int(1),
                };
                m[(u, v)] = off.clone();
                m[(v, u)] = off;
            }
            if kind != MatrixKind::Adjacency {
                for v in 0..n {
                    m[(v, v)] = int(g.degree(v) as i64);
                }
            }
            Ok(SymmetricMatrix::from_exact(kind, None, m))
        }
        MatrixKind::NormalizedLaplacian => {
            if let Some(v) = (0..n).find(|&v| g.degree(v) == 0) {
                return Err(Error::IsolatedVertex(v));
            }
            let inv_sqrt: Vec<f64> = (0..n).map(|v| 1.0 / (g.degree(v) as f64).sqrt()).collect();
            let mut m = FloatMatrix::zeros(n, n);
            for v in 0..n {
                m[(v, v)] = 1.0;
            }
            for (u, v) in g.edges() {
                let w = -inv_sqrt[u] * inv_sqrt[v];
                m[(u, v)] = w;
                m[(v, u)] = w;
            }
            Ok(SymmetricMatrix::from_float(kind, m))
        }
        MatrixKind::Distance
        | MatrixKind::DistanceLaplacian
        | MatrixKind::DistanceSignlessLaplacian
        | MatrixKind::TransmissionDiag
        | MatrixKind::GeneralizedDistance => {
            let data = distances(g)?;
            let tr = &data.transmission.transmissions;
            let mut m = RationalMatrix::zeros(n, n);
            match kind {
                MatrixKind::TransmissionDiag => {
                    for v in 0..n {
                        m[(v, v)] = int(tr[v] as i64);
                    }
                }
                MatrixKind::GeneralizedDistance => {
                    let a = alpha.expect("checked above").clone();
                    if a < Rational::zero() || a > Rational::one() {
                        return Err(Error::Parameter("alpha must lie in [0, 1]".into()));
                    }
                    let b = Rational::one() - a.clone();
                    for i in 0..n {
                        m[(i, i)] = a.clone() * int(tr[i] as i64);
                        for j in i + 1..n {
                            let e = b.clone() * int(data.dist[i][j] as i64);
                            m[(i, j)] = e.clone();
                            m[(j, i)] = e;
                        }
                    }
                }
                _ => {
                    let (diag_sign, off_sign) = match kind {
                        MatrixKind::Distance => (0i64, 1i64),
                        MatrixKind::DistanceLaplacian => (1, -1),
                        _ => (1, 1), // DistanceSignlessLaplacian
                    };
                    for i in 0..n {
                        m[(i, i)] = int(diag_sign * tr[i] as i64);
                        for j in i + 1..n {
                            let e = int(off_sign * data.dist[i][j] as i64);
                            m[(i, j)] = e.clone();
                            m[(j, i)] = e;
                        }
                    }
                }
            }
            Ok(SymmetricMatrix::from_exact(kind, alpha.cloned(), m))
        }
    }
}

/// Descending eigenvalues with multiplicities, grouped at a documented
/// tolerance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub kind: MatrixKind,
    /// Descending `(value, multiplicity)` pairs.
    pub pairs: Vec<(f64, usize)>,
    /// Base relative grouping tolerance used.
    pub tol: f64,
}

impl Spectrum {
    /// Group raw eigenvalues (any order) into a spectrum.
    pub fn from_values(kind: MatrixKind, mut values: Vec<f64>) -> Spectrum {
        values.sort_by(|a, b| b.partial_cmp(a).expect("finite eigenvalues"));
        let mut pairs: Vec<(f64, usize)> = Vec::new();
        for v in values {
            match pairs.last_mut() {
                Some((rep, mult)) if (*rep - v).abs() <= GROUP_TOL * rep.abs().max(1.0) => {
                    *mult += 1;
                }
                _ => pairs.push((v, 1)),
            }
        }
        Spectrum {
            kind,
            pairs,
            tol: GROUP_TOL,
        }
    }

    pub fn order(&self) -> usize {
        self.pairs.iter().map(|&(_, m)| m).sum()
    }

    /// Eigenvalues expanded by multiplicity, descending.
    pub fn values(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.order());
        for &(v, m) in &self.pairs {
            out.extend(std::iter::repeat_n(v, m));
        }
        out
    }

    /// Multiplicity of the eigenvalue nearest `x`, 0 if none within `tol`.
    pub fn multiplicity_near(&self, x: f64, tol: f64) -> usize {
        self.pairs
            .iter()
            .filter(|(v, _)| (v - x).abs() <= tol)
            .map(|&(_, m)| m)
            .sum()
    }

    /// Multiset equality within an absolute-relative blend of `tol`.
    pub fn multiset_eq(&self, other: &Spectrum, tol: f64) -> bool {
        let a = self.values();
        let b = other.values();
        a.len() == b.len()
            && a.iter()
                .zip(&b)
                .all(|(x, y)| (x - y).abs() <= tol * x.abs().max(y.abs()).max(1.0))
    }
}

/// Full symmetric eigendecomposition with multiplicity grouping. The trace
/// identity is verified before returning.
pub fn eigen(m: &SymmetricMatrix) -> Result<Spectrum> {
    let f = m.to_float();
    let values = symmetric_eigenvalues(&f)?;
    let spec = Spectrum::from_values(m.kind, values);
    let n = m.order();
    let trace = f.trace();
    let max_entry = (0..n)
        .flat_map(|i| f.row(i).iter().map(|x| x.abs()).collect::<Vec<_>>())
        .fold(0.0f64, f64::max);
    let sum: f64 = spec.pairs.iter().map(|&(v, mult)| v * mult as f64).sum();
    if (sum - trace).abs() > 1e-8 * (n as f64) * max_entry.max(1.0) {
        return Err(Error::Internal(format!(
            "trace identity violated: sum {sum} vs trace {trace}"
        )));
    }
    Ok(spec)
}

/// Exact characteristic polynomial `det(xI - M)` of a rational matrix.
///
/// Integer matrices take a pure `BigInt` path; general rational entries run
/// the same recursion over `BigRational`.
pub fn char_poly_exact(m: &SymmetricMatrix) -> Result<ExactPolynomial> {
    let mat = m.exact()?;
    let n = mat.nrows();
    let integral = (0..n).all(|i| mat.row(i).iter().all(|x| x.is_integer()));
    if integral {
        let im = mat.map(|x| x.to_integer());
        Ok(char_poly(&im)?.to_rational())
    } else {
        char_poly(mat)
    }
}

/// Sum of the `k` largest eigenvalues counting multiplicity.
pub fn s_k(spec: &Spectrum, k: usize) -> Result<f64> {
    let n = spec.order();
    if k == 0 || k > n {
        return Err(Error::Parameter(format!("k = {k} out of range 1..={n}")));
    }
    let mut left = k;
    let mut sum = 0.0;
    for &(v, m) in &spec.pairs {
        let take = m.min(left);
        sum += v * take as f64;
        left -= take;
        if left == 0 {
            break;
        }
    }
    Ok(sum)
}

/// Laplacian energy together with sigma, the number of Laplacian eigenvalues
/// >= the average degree.
///
/// Three equivalent forms are evaluated (the absolute-deviation sum, the
/// sigma form and the max form) and cross-checked to `1e-8 * n`; the
/// absolute-deviation value is returned.
pub fn laplacian_energy(g: &Graph) -> Result<(f64, usize)> {
    let spec = eigen(&build_matrix(g, MatrixKind::Laplacian, None)?)?;
    let n = g.n() as f64;
    let avg = 2.0 * g.m() as f64 / n;
    let values = spec.values();
    let le_abs: f64 = values.iter().map(|v| (v - avg).abs()).sum();
    // sigma tie rule: count mu_i >= avg - 1e-9, one-sided guard for
    // eigenvalues that sit exactly on the rational average
    let sigma = values.iter().filter(|&&v| v >= avg - 1e-9).count();
    let head: f64 = values.iter().take(sigma).sum();
    let le_sigma = 2.0 * (head - sigma as f64 * avg);
    let mut running = 0.0;
    let mut le_max = f64::NEG_INFINITY;
    for (k, v) in values.iter().enumerate() {
        running += v;
        le_max = le_max.max(running - (k + 1) as f64 * avg);
    }
    le_max *= 2.0;
    let tol = 1e-8 * n.max(1.0);
    if (le_abs - le_sigma).abs() > tol || (le_abs - le_max).abs() > tol {
        return Err(Error::Internal(format!(
            "Laplacian energy forms disagree: {le_abs} vs {le_sigma} vs {le_max}"
        )));
    }
    Ok((le_abs, sigma))
}

/// Generalized distance energy `E^{D_alpha}`: the absolute-deviation sum
/// around `2 alpha W / n`, cross-checked against the doubled max form.
pub fn generalized_distance_energy(g: &Graph, alpha: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::Parameter("alpha must lie in [0, 1)".into()));
    }
    let ralpha = Rational::from_float(alpha)
        .ok_or_else(|| Error::Parameter("alpha is not finite".into()))?;
    let m = build_matrix(g, MatrixKind::GeneralizedDistance, Some(&ralpha))?;
    let spec = eigen(&m)?;
    let n = g.n() as f64;
    let wiener = distances(g)?.transmission.wiener as f64;
    let actual_alpha = ralpha.to_f64().unwrap();
    let avg = 2.0 * actual_alpha * wiener / n;
    let values = spec.values();
    let e_abs: f64 = values.iter().map(|v| (v - avg).abs()).sum();
    let mut running = 0.0;
    let mut e_max = f64::NEG_INFINITY;
    for (j, v) in values.iter().enumerate() {
        running += v;
        e_max = e_max.max(running - (j + 1) as f64 * avg);
    }
    e_max *= 2.0;
    let tol = 1e-8 * n.max(1.0) * avg.abs().max(1.0);
    if (e_abs - e_max).abs() > tol {
        return Err(Error::Internal(format!(
            "generalized distance energy forms disagree: {e_abs} vs {e_max}"
        )));
    }
    Ok(e_abs)
}
