use crate::{Error, Result};
use serde::Serialize;
use std::fmt;

/// Upper end of a guaranteed interval: a concrete k or the graph order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum KEnd {
    At(u64),
    N,
}

/// Integer k-intervals on which Brouwer's conjecture is guaranteed by one of
/// the threshold theorems. Real thresholds are rounded inward.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KRange {
    pub source: String,
    pub intervals: Vec<(u64, KEnd)>,
    /// Set when the hypothesis produced no guaranteed interval.
    pub reason: Option<String>,
}

impl KRange {
    fn new(source: &str) -> Self {
        KRange {
            source: source.to_string(),
            intervals: Vec::new(),
            reason: None,
        }
    }

    fn push(&mut self, lo: u64, hi: KEnd) {
        let lo = lo.max(1);
        match hi {
            KEnd::At(h) if h < lo => {}
            _ => self.intervals.push((lo, hi)),
        }
    }

    /// Does the range cover `k` for a graph of order `n`?
    pub fn contains(&self, k: u64, n: u64) -> bool {
        self.intervals.iter().any(|&(lo, hi)| {
            k >= lo
                && match hi {
                    KEnd::At(h) => k <= h.min(n),
                    KEnd::N => k <= n,
                }
        })
    }

    /// All covered k in `1..=n`.
    pub fn covered(&self, n: u64) -> Vec<u64> {
        (1..=n).filter(|&k| self.contains(k, n)).collect()
    }

    /// Whole range `[1, n]`?
    pub fn is_all(&self) -> bool {
        self.intervals
            .iter()
            .any(|&(lo, hi)| lo == 1 && hi == KEnd::N)
    }
}

impl fmt::Display for KRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.intervals.is_empty() {
            return match &self.reason {
                Some(r) => write!(f, "empty ({r})"),
                None => write!(f, "empty"),
            };
        }
        if self.intervals.len() == 1 && self.intervals[0] == (1, KEnd::N) {
            return write!(f, "all k");
        }
        let parts: Vec<String> = self
            .intervals
            .iter()
            .map(|&(lo, hi)| match hi {
                KEnd::At(h) => format!("[{lo},{h}]"),
                KEnd::N => format!("[{lo},n]"),
            })
            .collect();
        write!(f, "{}", parts.join(" u "))
    }
}

/// The guaranteed-range theorems and their parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum RangeTheorem {
    /// Clique-removal thresholds: clique number `omega`, `r` nontrivial
    /// c-cyclic components of the remainder.
    CliqueThreshold { omega: u64, r: u64, c: u64 },
    /// Balanced-biclique thresholds over `K_{s,s}`.
    BicliqueThreshold { s: u64, r: u64, c: u64 },
    /// Size restriction with `p` vertices of degree `r`.
    SizeRestriction { n: u64, m: u64, p: u64, r: u64 },
    /// Size restriction with `p` vertices of degree `r` and `q` of degree
    /// `s > r`.
    SizeRestrictionTwoDegrees {
        n: u64,
        m: u64,
        p: u64,
        r: u64,
        q: u64,
        s: u64,
    },
    /// Split-family thresholds: clique `omega` with pendant stars and one
    /// cycle `C_t` fused in.
    SplitFamily { omega: u64, t: u64 },
    /// Biregular graphs: `p` vertices of degree `r`, `q` of degree `s > r`,
    /// `p + q = n`.
    Biregular { p: u64, q: u64, r: u64, s: u64 },
}

/// Evaluate the guaranteed k-ranges of a threshold theorem; thresholds are
/// computed in exact integer arithmetic where the formulas allow and rounded
/// inward otherwise.
pub fn brouwer_guaranteed_ranges(theorem: &RangeTheorem) -> Result<KRange> {
    match *theorem {
        RangeTheorem::CliqueThreshold { omega, r, c } => {
            if omega < 2 || r < 1 || r > omega {
                return Err(Error::Hypothesis(format!(
                    "clique threshold needs omega >= 2 and 1 <= r <= omega, got omega={omega} r={r}"
                )));
            }
            let mut out = KRange::new("clique-threshold");
            // k^2 - (2w+3)k + w(w-1) - 2r(c-1) >= 0: low root gamma_1
            let rad = 16 * omega as i64 + 8 * r as i64 * (c as i64 - 1) + 9;
            let delta1 = if rad < 0 {
                // the quadratic never vanishes: the whole small-k branch holds
                omega - 2
            } else {
                let gamma1 = ((2 * omega + 3) as f64 - (rad as f64).sqrt()) / 2.0;
                (omega - 2).min(gamma1.floor().max(0.0) as u64)
            };
            out.push(1, KEnd::At(delta1));
            // k^2 - 3k - (w(w-1) + 2r(c-1)) >= 0: high root beta_1
            let rad =
                (4 * omega * omega) as i64 - 4 * omega as i64 + 8 * r as i64 * (c as i64 - 1) + 9;
            if rad >= 0 {
                let beta1 = (3.0 + (rad as f64).sqrt()) / 2.0;
                out.push(beta1.ceil() as u64, KEnd::N);
            }
            if out.intervals.is_empty() {
                out.reason = Some("thresholds leave no guaranteed k".into());
            }
            Ok(out)
        }
        RangeTheorem::BicliqueThreshold { s, r, c } => {
            if s < 2 || r < 1 {
                return Err(Error::Hypothesis(format!(
                    "biclique threshold needs s >= 2 and r >= 1, got s={s} r={r}"
                )));
            }
            let mut out = KRange::new("biclique-threshold");
            let d = 20 * s as i64 - 4 * (s * s) as i64 + 8 * r as i64 * (c as i64 - 1) + 9;
            if d <= 0 {
                out.push(1, KEnd::N);
                return Ok(out);
            }
            let root = (d as f64).sqrt();
            let y1 = ((2 * s + 3) as f64 - root) / 2.0;
            let x1 = ((2 * s + 3) as f64 + root) / 2.0;
            if y1 >= 1.0 {
                out.push(1, KEnd::At(y1.floor() as u64));
            }
            out.push(x1.ceil() as u64, KEnd::N);
            Ok(out)
        }
        RangeTheorem::SizeRestriction { n, m, p, r } => {
            if n < 4 || p < 1 || r < 1 {
                return Err(Error::Hypothesis(format!(
                    "size restriction needs n >= 4, p >= 1, r >= 1, got n={n} p={p} r={r}"
                )));
            }
            let mut out = KRange::new("size-restriction");
            if 2 * m >= (2 * n - r - 1) * r {
                out.push(1, KEnd::At(r.min(n)));
            }
            let rhs = ((n - 1) * (3 * n - 1)) as i64 - 4 * (n as i64 - 1 - 2 * r as i64) * p as i64;
            if (8 * m) as i64 >= rhs {
                if 2 * p < n {
                    out.push(r + 1, KEnd::At((n - 1) / 2));
                } else if 2 * p > n {
                    out.push((n - 1).div_ceil(2), KEnd::N);
                }
            }
            if out.intervals.is_empty() {
                out.reason = Some("size below every threshold".into());
            }
            Ok(out)
        }
        RangeTheorem::SizeRestrictionTwoDegrees { n, m, p, r, q, s } => {
            if n < 4 || p < 1 || q < 1 || r < 1 || s <= r {
                return Err(Error::Hypothesis(format!(
                    "needs n >= 4, p,q >= 1 and s > r >= 1, got n={n} p={p} q={q} r={r} s={s}"
                )));
            }
            let mut out = KRange::new("size-restriction-two-degrees");
            if 2 * m >= (2 * n - r - 1) * r {
                out.push(1, KEnd::At(r.min(n)));
            }
            let branch_a =
                2 * n > 2 * p + 2 * s + 1 && 2 * m >= s * (2 * n - 2 * p - s - 1) + 2 * p * r;
            let branch_b =
                2 * n < 2 * p + 2 * r + 3 && 2 * m >= (r + 1) * (2 * n - 2 * p - r - 2) + 2 * p * r;
            if branch_a || branch_b {
                out.push(r + 1, KEnd::At(s.min(n)));
            }
            let rhs = ((n - 1) * (3 * n - 1)) as i64
                - 4 * (n as i64 - 2 * r as i64 - 1) * p as i64
                - 4 * (n as i64 - 2 * s as i64 - 1) * q as i64;
            if (8 * m) as i64 >= rhs {
                if 2 * (p + q) < n {
                    out.push(s + 1, KEnd::At((n - 1) / 2));
                } else if 2 * (p + q) > n {
                    out.push((n - 1).div_ceil(2), KEnd::N);
                }
            }
            if out.intervals.is_empty() {
                out.reason = Some("size below every threshold".into());
            }
            Ok(out)
        }
        RangeTheorem::SplitFamily { omega, t } => {
            if omega < 2 || t < 3 {
                return Err(Error::Hypothesis(format!(
                    "split family needs omega >= 2 and t >= 3, got omega={omega} t={t}"
                )));
            }
            let mut out = KRange::new("split-family");
            let root = ((8 * t - 15) as f64).sqrt();
            let alpha = ((2 * omega - 1) as f64 - root) / 2.0;
            let beta = ((2 * omega - 1) as f64 + root) / 2.0;
            if alpha >= 1.0 {
                out.push(1, KEnd::At(alpha.floor() as u64));
            }
            out.push(beta.ceil() as u64, KEnd::N);
            Ok(out)
        }
        RangeTheorem::Biregular { p, q, r, s } => {
            if p < 1 || q < 1 || r < 1 || s <= r {
                return Err(Error::Hypothesis(format!(
                    "biregular needs p,q >= 1 and s > r >= 1, got p={p} q={q} r={r} s={s}"
                )));
            }
            if (p * r + q * s) % 2 != 0 {
                return Err(Error::Hypothesis("p*r + q*s must be even".into()));
            }
            let n = p + q;
            let mut out = KRange::new("biregular");
            if p * r + 2 * q * s <= q * s + r * (r + 1) {
                out.push(1, KEnd::At(r));
            }
            if 2 * q * s + p * r <= s * (s + 1) {
                out.push(r + 1, KEnd::At(s.min(n)));
            }
            if (p + q) * (p + q) > 4 * (p * r + q * s) {
                out.push((n - 1).div_ceil(2), KEnd::N);
            }
            if out.intervals.is_empty() {
                out.reason = Some("no condition satisfied".into());
            }
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clique_threshold_example() {
        // omega=6, r=1, c=0: beta_1 = (3 + sqrt(121))/2 = 7, gamma_1 ~ 2.57
        let r = brouwer_guaranteed_ranges(&RangeTheorem::CliqueThreshold {
            omega: 6,
            r: 1,
            c: 0,
        })
        .unwrap();
        assert_eq!(r.intervals, vec![(1, KEnd::At(2)), (7, KEnd::N)]);
        assert!(r.contains(1, 30) && r.contains(2, 30) && !r.contains(3, 30));
        assert!(r.contains(7, 30) && r.contains(30, 30));
    }

    #[test]
    fn biclique_all_k_branch() {
        // s=9, r=2, c=2: s >= (5 + sqrt(8r(c-1)+34))/2 ~ 6.04 -> all k
        let r = brouwer_guaranteed_ranges(&RangeTheorem::BicliqueThreshold { s: 9, r: 2, c: 2 })
            .unwrap();
        assert!(r.is_all());
        // s=5, r=1, c=1: d = 100-100+0+9 = 9: y1 = (13-3)/2 = 5, x1 = 8
        let r = brouwer_guaranteed_ranges(&RangeTheorem::BicliqueThreshold { s: 5, r: 1, c: 1 })
            .unwrap();
        assert_eq!(r.intervals, vec![(1, KEnd::At(5)), (8, KEnd::N)]);
    }

    #[test]
    fn split_family_excludes_omega_band() {
        // omega=5, t=3: u = 1.5: [1,3] and [6,n] -> excludes {4,5}
        let r = brouwer_guaranteed_ranges(&RangeTheorem::SplitFamily { omega: 5, t: 3 }).unwrap();
        assert!(r.contains(3, 20) && !r.contains(4, 20) && !r.contains(5, 20) && r.contains(6, 20));
        // t=4: u = sqrt(17)/2 ~ 2.06: excludes {omega-2..omega+1}
        let r = brouwer_guaranteed_ranges(&RangeTheorem::SplitFamily { omega: 5, t: 4 }).unwrap();
        for k in 3..=6 {
            assert!(!r.contains(k, 20), "k={k}");
        }
        assert!(r.contains(2, 20) && r.contains(7, 20));
    }

    #[test]
    fn size_restriction_reduces_to_pendant_form_at_r1() {
        // with r=1 the degree threshold matches the pendant-vertex theorem:
        // (n-1)(3n-1)/8 - (n-3)p/2
        let (n, p) = (11u64, 3u64);
        let pendant_threshold_times8 = (n - 1) * (3 * n - 1) - 4 * (n - 3) * p;
        for m in [20u64, 30, 40] {
            let mine = brouwer_guaranteed_ranges(&RangeTheorem::SizeRestriction { n, m, p, r: 1 })
                .unwrap();
            let manual = 8 * m >= pendant_threshold_times8;
            let has_middle = mine.intervals.iter().any(|&(lo, _)| lo == 2);
            assert_eq!(manual && 2 * p < n, has_middle, "m={m}");
        }
    }

    #[test]
    fn hypothesis_violations_error() {
        assert!(brouwer_guaranteed_ranges(&RangeTheorem::CliqueThreshold {
            omega: 1,
            r: 1,
            c: 0
        })
        .is_err());
        assert!(brouwer_guaranteed_ranges(&RangeTheorem::SplitFamily { omega: 5, t: 2 }).is_err());
        assert!(brouwer_guaranteed_ranges(&RangeTheorem::Biregular {
            p: 2,
            q: 2,
            r: 1,
            s: 1
        })
        .is_err());
    }

    #[test]
    fn display_forms() {
        let r = brouwer_guaranteed_ranges(&RangeTheorem::CliqueThreshold {
            omega: 6,
            r: 1,
            c: 0,
        })
        .unwrap();
        assert_eq!(r.to_string(), "[1,2] u [7,n]");
        let all = brouwer_guaranteed_ranges(&RangeTheorem::BicliqueThreshold { s: 9, r: 2, c: 2 })
            .unwrap();
        assert_eq!(all.to_string(), "all k");
    }
}
