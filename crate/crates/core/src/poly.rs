//! Sparse multivariate polynomials over the rationals.
//!
//! Monomials are exponent vectors with a graded lexicographic order: lower
//! total degree first, and within a degree the lexicographically *larger*
//! exponent vector first, so the degree-2 basis in three variables reads
//! x^2, xy, xz, y^2, yz, z^2. Every dense coefficient vector in the crate
//! (Veronese images, hypersurface bases, quadric models, JSON output) is
//! indexed against `monomial_basis` in exactly this order.
//!
//! Terms live in a `BTreeMap` keyed by `Monomial`, so iteration yields the
//! canonical order for free and no zero coefficients are ever stored.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_traits::Zero;

use crate::rational::{rat, Rational};
use crate::{Error, Result};

/// Exponent vector. The `Ord` instance is the serialization order described
/// in the module docs, *not* plain lexicographic order on the vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn vars(&self) -> usize {
        self.0.len()
    }

    /// x^self evaluated at the given coordinates.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        let mut acc = rat(1);
        for (e, x) in self.0.iter().zip(point) {
            for _ in 0..*e {
                acc *= x;
            }
        }
        acc
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of the given total degree, in canonical order.
pub fn monomial_basis(vars: usize, degree: u32) -> Vec<Monomial> {
    fn rec(vars: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if cur.len() + 1 == vars {
            cur.push(left);
            out.push(Monomial(cur.clone()));
            cur.pop();
            return;
        }
        for e in (0..=left).rev() {
            cur.push(e);
            rec(vars, left - e, cur, out);
            cur.pop();
        }
    }
    assert!(vars > 0, "monomial basis needs at least one variable");
    let mut out = Vec::new();
    rec(vars, degree, &mut Vec::new(), &mut out);
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    vars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(vars: usize) -> Self {
        Self {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(vars: usize, terms: Vec<(Monomial, Rational)>) -> Result<Self> {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            if m.vars() != vars {
                return Err(Error::Shape(format!(
                    "monomial has {} exponents, polynomial has {vars} variables",
                    m.vars()
                )));
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    /// Polynomial with coefficient vector `coeffs` against the degree-`d`
    /// monomial basis in canonical order.
    pub fn from_dense(vars: usize, degree: u32, coeffs: &[Rational]) -> Result<Self> {
        let basis = monomial_basis(vars, degree);
        if coeffs.len() != basis.len() {
            return Err(Error::Shape(format!(
                "dense coefficient vector has length {}, basis has {}",
                coeffs.len(),
                basis.len()
            )));
        }
        Self::from_terms(
            vars,
            basis.into_iter().zip(coeffs.iter().cloned()).collect(),
        )
    }

    /// Coefficient vector against the degree-`d` basis. Fails on terms of
    /// other degrees.
    pub fn to_dense(&self, degree: u32) -> Result<Vec<Rational>> {
        let basis = monomial_basis(self.vars, degree);
        if self.terms.keys().any(|m| m.degree() != degree) {
            return Err(Error::Shape(format!(
                "polynomial is not homogeneous of degree {degree}"
            )));
        }
        Ok(basis.iter().map(|m| self.coeff(m)).collect())
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.vars, other.vars);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &Rational) -> Polynomial {
        if s.is_zero() {
            return Polynomial::zero(self.vars);
        }
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c *= s;
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.vars, other.vars);
        let mut out = Polynomial::zero(self.vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = Monomial(ma.0.iter().zip(&mb.0).map(|(x, y)| x + y).collect());
                out.add_term(m, ca * cb);
            }
        }
        out
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        debug_assert_eq!(point.len(), self.vars);
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            acc += c * m.eval(point);
        }
        acc
    }

    /// Partial derivative with respect to variable `v`.
    pub fn partial(&self, v: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.vars);
        for (m, c) in &self.terms {
            let e = m.0[v];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[v] -= 1;
            out.add_term(Monomial(exps), c * rat(e as i64));
        }
        out
    }

    /// Iterated partial: differentiate `beta[v]` times with respect to each
    /// variable `v`.
    pub fn partial_multi(&self, beta: &[u32]) -> Polynomial {
        let mut out = self.clone();
        for (v, &k) in beta.iter().enumerate() {
            for _ in 0..k {
                out = out.partial(v);
            }
        }
        out
    }

    /// `p(Mx)`: substitute each variable `x_i` by the linear form given by
    /// row `i` of `m`. The matrix must be square of size `vars`.
    pub fn substitute_linear(&self, m: &crate::matrix::Matrix) -> Result<Polynomial> {
        if m.rows() != self.vars || m.cols() != self.vars {
            return Err(Error::Shape(format!(
                "substitution matrix is {}x{}, polynomial has {} variables",
                m.rows(),
                m.cols(),
                self.vars
            )));
        }
        let forms: Vec<Polynomial> = (0..self.vars)
            .map(|i| {
                let terms = (0..self.vars)
                    .map(|j| {
                        let mut exps = vec![0u32; self.vars];
                        exps[j] = 1;
                        (Monomial(exps), m.at(i, j).clone())
                    })
                    .collect();
                Polynomial::from_terms(self.vars, terms).expect("row form")
            })
            .collect();
        let mut out = Polynomial::zero(self.vars);
        for (mono, c) in &self.terms {
            let mut term =
                Polynomial::from_terms(self.vars, vec![(Monomial(vec![0; self.vars]), c.clone())])?;
            for (v, &e) in mono.0.iter().enumerate() {
                for _ in 0..e {
                    term = term.mul(&forms[v]);
                }
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Substitute fixed values for a subset of variables; `None` keeps the
    /// variable. The result still formally has `vars` variables.
    pub fn specialize(&self, values: &[Option<Rational>]) -> Polynomial {
        debug_assert_eq!(values.len(), self.vars);
        let mut out = Polynomial::zero(self.vars);
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut exps = m.0.clone();
            for (v, val) in values.iter().enumerate() {
                if let Some(val) = val {
                    for _ in 0..exps[v] {
                        coeff *= val;
                    }
                    exps[v] = 0;
                    if coeff.is_zero() {
                        break;
                    }
                }
            }
            out.add_term(Monomial(exps), coeff);
        }
        out
    }

    /// View a polynomial that only involves variable `v` as a univariate
    /// coefficient list (ascending powers).
    pub fn as_univariate(&self, v: usize) -> Result<Vec<Rational>> {
        let mut coeffs = vec![Rational::zero(); self.degree().map_or(0, |d| d as usize) + 1];
        for (m, c) in &self.terms {
            for (i, &e) in m.0.iter().enumerate() {
                if i != v && e > 0 {
                    return Err(Error::Shape(format!(
                        "polynomial involves variable {i}, expected only {v}"
                    )));
                }
            }
            coeffs[m.0[v] as usize] = c.clone();
        }
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Ok(coeffs)
    }
}
