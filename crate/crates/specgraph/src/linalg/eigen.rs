use super::{Matrix, Scalar};
use crate::{Error, Result};
use num_traits::Float;

/// All eigenvalues of a real symmetric matrix, descending.
///
/// Householder tridiagonalization followed by implicit-shift QL on the
/// tridiagonal pair, values only. Deterministic for identical input.
pub fn symmetric_eigenvalues<F: Float + Scalar>(m: &Matrix<F>) -> Result<Vec<F>> {
    if !m.is_square() {
        return Err(Error::Dimension(
            "eigenvalues of a non-square matrix".into(),
        ));
    }
    let n = m.nrows();
    for i in 0..n {
        for j in i + 1..n {
            let diff = (m[(i, j)] - m[(j, i)]).abs();
            let scale = m[(i, j)].abs().max(m[(j, i)].abs()).max(F::one());
            if diff > F::epsilon() * scale * F::from(64.0).unwrap() {
                return Err(Error::NotSymmetric(i, j));
            }
        }
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut a: Vec<Vec<F>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut d = vec![F::zero(); n];
    let mut e = vec![F::zero(); n];
    tridiagonalize(&mut a, &mut d, &mut e);
    ql_implicit(&mut d, &mut e)?;
    d.sort_by(|a, b| b.partial_cmp(a).expect("eigenvalues are finite"));
    Ok(d)
}

/// Householder reduction to tridiagonal form, eigenvalues-only variant:
/// on exit `d` holds the diagonal and `e[1..]` the subdiagonal.
fn tridiagonalize<F: Float>(a: &mut [Vec<F>], d: &mut [F], e: &mut [F]) {
    let n = a.len();
    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = F::zero();
        if l > 0 {
            let mut scale = F::zero();
            for k in 0..=l {
                scale = scale + a[i][k].abs();
            }
            if scale == F::zero() {
                e[i] = a[i][l];
            } else {
                for k in 0..=l {
                    a[i][k] = a[i][k] / scale;
                    h = h + a[i][k] * a[i][k];
                }
                let f = a[i][l];
                let g = if f >= F::zero() { -h.sqrt() } else { h.sqrt() };
                e[i] = scale * g;
                h = h - f * g;
                a[i][l] = f - g;
                let mut f_acc = F::zero();
                for j in 0..=l {
                    let mut g = F::zero();
                    for k in 0..=j {
                        g = g + a[j][k] * a[i][k];
                    }
                    for k in j + 1..=l {
                        g = g + a[k][j] * a[i][k];
                    }
                    e[j] = g / h;
                    f_acc = f_acc + e[j] * a[i][j];
                }
                let hh = f_acc / (h + h);
                for j in 0..=l {
                    let f = a[i][j];
                    let g = e[j] - hh * f;
                    e[j] = g;
                    for k in 0..=j {
                        let upd = f * e[k] + g * a[i][k];
                        a[j][k] = a[j][k] - upd;
                    }
                }
            }
        } else {
            e[i] = a[i][l];
        }
    }
    e[0] = F::zero();
    for i in 0..n {
        d[i] = a[i][i];
    }
}

/// QL algorithm with implicit Wilkinson shifts on a symmetric tridiagonal
/// matrix given by diagonal `d` and subdiagonal `e[1..]`.
fn ql_implicit<F: Float>(d: &mut [F], e: &mut [F]) -> Result<()> {
    let n = d.len();
    if n <= 1 {
        return Ok(());
    }
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = F::zero();
    let eps = F::epsilon();
    for l in 0..n {
        let mut iter = 0usize;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= eps * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 64 {
                return Err(Error::Internal("QL iteration failed to converge".into()));
            }
            let mut g = (d[l + 1] - d[l]) / (e[l] + e[l]);
            let mut r = g.hypot(F::one());
            let sign_r = if g >= F::zero() { r.abs() } else { -r.abs() };
            g = d[m] - d[l] + e[l] / (g + sign_r);
            let mut s = F::one();
            let mut c = F::one();
            let mut p = F::zero();
            let mut underflow = false;
            for i in (l..m).rev() {
                let mut f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == F::zero() {
                    d[i + 1] = d[i + 1] - p;
                    e[m] = F::zero();
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                f = (d[i] - g) * s + (c + c) * b;
                p = s * f;
                d[i + 1] = g + p;
                g = c * f - b;
            }
            if underflow {
                continue;
            }
            d[l] = d[l] - p;
            e[l] = g;
            e[m] = F::zero();
        }
    }
    Ok(())
}
