use super::Scalar;
use num_traits::{ToPrimitive, Zero};
use std::fmt;

/// Dense univariate polynomial, coefficients ascending by degree.
///
/// The zero polynomial has an empty coefficient vector; otherwise the leading
/// coefficient is nonzero.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> Polynomial<S> {
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: S) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Polynomial {
            coeffs: vec![S::zero(), S::one()],
        }
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, k: usize) -> S {
        self.coeffs.get(k).cloned().unwrap_or_else(S::zero)
    }

    pub fn leading(&self) -> Option<&S> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + other.coeff(k));
        }
        Self::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - other.coeff(k));
        }
        Self::new(out)
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| c.clone().neg()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![S::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a.clone() * b.clone();
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, s: &S) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }

    /// Horner evaluation in the coefficient ring.
    pub fn eval(&self, x: &S) -> S {
        let mut acc = S::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }
}

impl Polynomial<crate::Int> {
    /// Lift integer coefficients into big rationals.
    pub fn to_rational(&self) -> Polynomial<crate::Rational> {
        Polynomial {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| crate::Rational::from_integer(c.clone()))
                .collect(),
        }
    }
}

impl Polynomial<crate::Rational> {
    /// Horner evaluation after rounding coefficients to f64.
    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64().unwrap_or(f64::NAN);
        }
        acc
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

impl<S: Scalar + fmt::Display> fmt::Display for Polynomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let s = c.to_string();
            let (sign, mag) = match s.strip_prefix('-') {
                Some(rest) => ("-", rest.to_string()),
                None => ("+", s),
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag != "1" {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Quotient of two polynomials. Bottom-up tree sweeps keep these unreduced:
/// the denominator of a vertex value is the product of its children's
/// numerators, so the final whole-tree product telescopes to a polynomial
/// without any polynomial gcd work.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalFunction<S> {
    pub num: Polynomial<S>,
    pub den: Polynomial<S>,
}

impl<S: Scalar> RationalFunction<S> {
    pub fn new(num: Polynomial<S>, den: Polynomial<S>) -> Self {
        RationalFunction { num, den }
    }

    pub fn from_poly(num: Polynomial<S>) -> Self {
        RationalFunction {
            num,
            den: Polynomial::constant(S::one()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Int;

    fn ip(cs: &[i64]) -> Polynomial<Int> {
        Polynomial::new(cs.iter().map(|&c| Int::from(c)).collect())
    }

    #[test]
    fn arithmetic_and_degree() {
        let p = ip(&[1, 2]); // 1 + 2x
        let q = ip(&[-1, 2]); // -1 + 2x
        assert_eq!(p.mul(&q), ip(&[-1, 0, 4]));
        assert_eq!(p.add(&q), ip(&[0, 4]));
        assert_eq!(p.sub(&p), Polynomial::zero());
        assert_eq!(p.mul(&q).degree(), 2);
        assert_eq!(p.eval(&Int::from(3)), Int::from(7));
    }

    #[test]
    fn display_matches_convention() {
        let p = ip(&[5, 0, -3, 1]);
        assert_eq!(p.to_string(), "x^3 - 3*x^2 + 5");
    }
}
