//! Dense univariate polynomials over the rationals.
//!
//! Coefficients are stored in ascending order of degree with no trailing
//! zero, so the zero polynomial is the empty vector and `degree` of a
//! nonzero polynomial is `len - 1`. This module exists for the elimination
//! step of the ninth-base-point computation and for the resultant itself:
//! Sylvester matrices, root deflation, gcds, Lagrange interpolation.
//!
//! `resultant` uses the *actual* degrees of its arguments.
//! `resultant_formal` builds the Sylvester matrix at caller-supplied formal
//! degrees; that version is what specialization arguments need, because
//! evaluating a bivariate polynomial can drop its degree in the remaining
//! variable while the specialized resultant must still be computed at the
//! original degree for interpolation to be valid.

use num_traits::{One, Zero};

use crate::matrix::Matrix;
use crate::rational::Rational;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly(Vec<Rational>);

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Self(coeffs)
    }

    pub fn zero() -> Self {
        Self(Vec::new())
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| crate::rational::rat(c)).collect())
    }

    /// `x - r`
    pub fn linear_root(r: &Rational) -> Self {
        Self::new(vec![-r.clone(), Rational::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.0.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.0.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.0.len().max(other.0.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.0.len().max(other.0.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn scale(&self, s: &Rational) -> UniPoly {
        if s.is_zero() {
            return UniPoly::zero();
        }
        UniPoly(self.0.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    /// Euclidean division: `self = q * div + r` with `deg r < deg div`.
    pub fn div_rem(&self, div: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let Some(dd) = div.degree() else {
            return Err(Error::Shape("division by zero polynomial".into()));
        };
        let lead = div.leading().expect("nonzero divisor");
        let mut rem = self.0.clone();
        if rem.len() < dd + 1 {
            return Ok((UniPoly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let f = rem.last().expect("nonempty") / lead;
            quot[k] = f.clone();
            for i in 0..=dd {
                let s = &f * &div.0[i];
                rem[k + i] -= s;
            }
            debug_assert!(rem.last().expect("nonempty").is_zero());
            rem.pop();
            while rem.last().is_some_and(Rational::is_zero) {
                rem.pop();
            }
            if rem.len() < dd + 1 {
                break;
            }
        }
        Ok((UniPoly::new(quot), UniPoly(rem)))
    }

    /// Divide out a known root exactly; errors if `r` is not a root.
    pub fn deflate_root(&self, r: &Rational) -> Result<UniPoly> {
        let (q, rem) = self.div_rem(&UniPoly::linear_root(r))?;
        if !rem.is_zero() {
            return Err(Error::Shape(format!(
                "deflation: {} is not a root",
                crate::rational::format_rational(r)
            )));
        }
        Ok(q)
    }

    /// Monic gcd; gcd of two zero polynomials is zero.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        match a.leading() {
            None => a,
            Some(lead) => {
                let inv = Rational::one() / lead;
                a.scale(&inv)
            }
        }
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * crate::rational::rat(i as i64))
                .collect(),
        )
    }
}

/// Unique polynomial of degree `< points.len()` through the given
/// `(x, y)` pairs; the nodes must be pairwise distinct.
pub fn interpolate(points: &[(Rational, Rational)]) -> Result<UniPoly> {
    for (i, (xi, _)) in points.iter().enumerate() {
        for (xj, _) in points.iter().skip(i + 1) {
            if xi == xj {
                return Err(Error::Shape("interpolation nodes collide".into()));
            }
        }
    }
    let mut acc = UniPoly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut num = UniPoly::new(vec![Rational::one()]);
        let mut den = Rational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            num = num.mul(&UniPoly::linear_root(xj));
            den *= xi - xj;
        }
        acc = acc.add(&num.scale(&(yi / den)));
    }
    Ok(acc)
}

/// Sylvester matrix of `f` and `g` at formal degrees `df`, `dg`: the first
/// `dg` rows carry shifted coefficients of `f` (descending), the last `df`
/// rows those of `g`. Coefficients above the formal degree are taken as 0.
pub fn sylvester_matrix(f: &UniPoly, g: &UniPoly, df: usize, dg: usize) -> Matrix {
    let n = df + dg;
    let mut m = Matrix::zero(n, n);
    for row in 0..dg {
        for k in 0..=df {
            *m.at_mut(row, row + k) = f.coeff(df - k);
        }
    }
    for row in 0..df {
        for k in 0..=dg {
            *m.at_mut(dg + row, row + k) = g.coeff(dg - k);
        }
    }
    m
}

/// Resultant at the actual degrees of `f` and `g`; both must have degree
/// at least 1.
pub fn resultant(f: &UniPoly, g: &UniPoly) -> Result<Rational> {
    let df = f.degree().filter(|&d| d >= 1).ok_or(Error::DegreeTooLow)?;
    let dg = g.degree().filter(|&d| d >= 1).ok_or(Error::DegreeTooLow)?;
    sylvester_matrix(f, g, df, dg).determinant()
}

/// Resultant at prescribed formal degrees (see module docs).
pub fn resultant_formal(f: &UniPoly, g: &UniPoly, df: usize, dg: usize) -> Result<Rational> {
    debug_assert!(f.degree().is_none_or(|d| d <= df));
    debug_assert!(g.degree().is_none_or(|d| d <= dg));
    if df == 0 || dg == 0 {
        return Err(Error::DegreeTooLow);
    }
    sylvester_matrix(f, g, df, dg).determinant()
}
