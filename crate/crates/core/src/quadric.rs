//! The diagonal-quadric model attached to n+3 points on a line.
//!
//! Each point q_i of P^1 gives the hyperplane of binary quartics vanishing
//! at q_i, a row (x^4, x^3 y, x^2 y^2, x y^3, y^4) evaluated at q_i.  After
//! normalizing the first five rows to the identity, the remaining rows
//! a_{i s} cut a variety in P^{n+2}: the common zeros of the n-2 diagonal
//! quadrics y_i^2 - sum_s a_{i s} y_s^2.  Squaring the coordinates covers
//! P^4 with deck group (Z/2)^{n+2} acting by sign changes.
//!
//! Members are produced by evaluation, never by square roots: for any
//! binary quadratic Q, the tuple (Q(q_1), ..., Q(q_{n+3})) is a member,
//! because its squares are the values of the quartic Q^2.

use num_traits::{One, Zero};

use crate::matrix::Matrix;
use crate::poly::{Monomial, Polynomial};
use crate::projective::{veronese, ProjectivePoint};
use crate::rational::Rational;
use crate::{Error, Result};

/// Rows of linear forms on P^4, one per point; (n+3) x 5 with n >= 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperplaneArrangement {
    rows: Matrix,
}

impl HyperplaneArrangement {
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        if rows.len() < 5 {
            return Err(Error::ArrangementTooSmall(rows.len()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.iter().all(Rational::is_zero) {
                return Err(Error::ZeroArrangementRow(i));
            }
        }
        let rows = Matrix::from_rows(rows)?;
        if rows.cols() != 5 {
            return Err(Error::Shape(format!(
                "arrangement rows must have 5 entries, got {}",
                rows.cols()
            )));
        }
        Ok(Self { rows })
    }

    /// n such that the arrangement has n+3 rows.
    pub fn n(&self) -> usize {
        self.rows.rows() - 3
    }

    pub fn matrix(&self) -> &Matrix {
        &self.rows
    }

    pub fn is_normalized(&self) -> bool {
        (0..5).all(|i| {
            (0..5).all(|j| {
                let want = if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                };
                *self.rows.at(i, j) == want
            })
        })
    }
}

/// Row i = the degree-4 Veronese image of q_i: the condition "a binary
/// quartic vanishes at q_i" as a linear form on quartic coefficients.
pub fn hyperplanes_from_points(points: &[ProjectivePoint]) -> Result<HyperplaneArrangement> {
    if points.len() < 6 {
        return Err(Error::ArrangementTooSmall(points.len()));
    }
    let mut rows = Vec::with_capacity(points.len());
    for (i, p) in points.iter().enumerate() {
        if p.ambient_dim() != 1 {
            return Err(Error::Shape(format!(
                "point {i} lives in P^{}, expected P^1",
                p.ambient_dim()
            )));
        }
        for (j, q) in points.iter().enumerate().skip(i + 1) {
            if p == q {
                return Err(Error::CoincidentPoints(i, j));
            }
        }
        rows.push(veronese(p, 4).rational_coords());
    }
    HyperplaneArrangement::from_rows(rows)
}

/// Change coordinates on P^4 so the first five forms become the five
/// coordinates: right-multiply every row by the inverse of the top block.
pub fn normalize_arrangement(arr: &HyperplaneArrangement) -> Result<HyperplaneArrangement> {
    let top = {
        let mut t = Matrix::zero(5, 5);
        for i in 0..5 {
            for j in 0..5 {
                *t.at_mut(i, j) = arr.rows.at(i, j).clone();
            }
        }
        t
    };
    let inv = top.inverse()?;
    let rows = arr.rows.mul(&inv)?;
    for i in 0..rows.rows() {
        if (0..5).all(|j| rows.at(i, j).is_zero()) {
            return Err(Error::ZeroArrangementRow(i));
        }
    }
    Ok(HyperplaneArrangement { rows })
}

/// The complete-intersection model: n-2 diagonal quadrics in the n+3
/// homogeneous coordinates y_0, ..., y_{n+2}.
#[derive(Debug, Clone)]
pub struct QuadricModel {
    pub n: usize,
    arrangement: HyperplaneArrangement,
    pub quadrics: Vec<Polynomial>,
}

impl QuadricModel {
    /// Build from any arrangement (normalizing first).  This is also the
    /// door for deliberately degenerate arrangements, which distinct points
    /// can never produce.
    pub fn from_arrangement(arr: &HyperplaneArrangement) -> Result<Self> {
        let normalized = if arr.is_normalized() {
            arr.clone()
        } else {
            normalize_arrangement(arr)?
        };
        let n = normalized.n();
        let vars = n + 3;
        let mut quadrics = Vec::with_capacity(n.saturating_sub(2));
        for i in 5..vars {
            let mut terms = Vec::with_capacity(6);
            let mut sq = vec![0u32; vars];
            sq[i] = 2;
            terms.push((Monomial(sq), Rational::one()));
            for s in 0..5 {
                let a = normalized.rows.at(i, s);
                if a.is_zero() {
                    continue;
                }
                let mut e = vec![0u32; vars];
                e[s] = 2;
                terms.push((Monomial(e), -a.clone()));
            }
            quadrics.push(Polynomial::from_terms(vars, terms)?);
        }
        Ok(Self {
            n,
            arrangement: normalized,
            quadrics,
        })
    }

    pub fn arrangement(&self) -> &HyperplaneArrangement {
        &self.arrangement
    }

    /// The model coefficient a_{i s} for row i >= 5.
    pub fn coefficient(&self, i: usize, s: usize) -> &Rational {
        self.arrangement.rows.at(i, s)
    }
}

/// Points on P^1 to normalized model in one step.
pub fn build_model(points: &[ProjectivePoint]) -> Result<QuadricModel> {
    QuadricModel::from_arrangement(&hyperplanes_from_points(points)?)
}

fn check_ambient(model: &QuadricModel, y: &ProjectivePoint) -> Result<()> {
    if y.ambient_dim() != model.n + 2 {
        return Err(Error::Shape(format!(
            "point lives in P^{}, model in P^{}",
            y.ambient_dim(),
            model.n + 2
        )));
    }
    Ok(())
}

/// True iff every quadric vanishes at y.
pub fn membership(model: &QuadricModel, y: &ProjectivePoint) -> Result<bool> {
    check_ambient(model, y)?;
    let coords = y.rational_coords();
    Ok(model.quadrics.iter().all(|q| q.eval(&coords).is_zero()))
}

/// All 2^{n+2} sign patterns of a member, modulo the global sign (the first
/// coordinate's sign is pinned by canonicalization).  Requires every
/// coordinate nonzero: on the branch locus the orbit collapses.
pub fn sign_orbit(model: &QuadricModel, y: &ProjectivePoint) -> Result<Vec<ProjectivePoint>> {
    check_ambient(model, y)?;
    if !membership(model, y)? {
        return Err(Error::NotMember);
    }
    if let Some(i) = y.coords().iter().position(|c| c.is_zero()) {
        return Err(Error::BranchLocus(i));
    }
    let dim = model.n + 3;
    let mut orbit = Vec::with_capacity(1 << (dim - 1));
    for mask in 0u32..(1 << (dim - 1)) {
        let coords: Vec<Rational> = y
            .coords()
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let v = Rational::from_integer(c.clone());
                if i > 0 && mask >> (i - 1) & 1 == 1 {
                    -v
                } else {
                    v
                }
            })
            .collect();
        let flipped = ProjectivePoint::canonicalize(&coords)?;
        debug_assert!(membership(model, &flipped)?, "quadrics are even");
        orbit.push(flipped);
    }
    Ok(orbit)
}

/// The image (y_0^2 : ... : y_4^2) in P^4.  For members this determines all
/// remaining squares through the arrangement, which is asserted.
pub fn cover_image(model: &QuadricModel, y: &ProjectivePoint) -> Result<ProjectivePoint> {
    check_ambient(model, y)?;
    if !membership(model, y)? {
        return Err(Error::NotMember);
    }
    let squares: Vec<Rational> = y
        .coords()
        .iter()
        .map(|c| Rational::from_integer(c * c))
        .collect();
    for i in 5..model.n + 3 {
        let li: Rational = (0..5)
            .map(|s| model.arrangement.rows.at(i, s) * &squares[s])
            .sum();
        assert!(
            li == squares[i],
            "member's squares must satisfy the arrangement"
        );
    }
    ProjectivePoint::canonicalize(&squares[..5])
}

/// Jacobian rank test: smooth points of a complete intersection of n-2
/// quadrics are exactly those with Jacobian rank n-2.
pub fn is_smooth_at(model: &QuadricModel, y: &ProjectivePoint) -> Result<bool> {
    check_ambient(model, y)?;
    if !membership(model, y)? {
        return Err(Error::NotMember);
    }
    if model.quadrics.is_empty() {
        return Ok(true);
    }
    let coords = y.rational_coords();
    let vars = model.n + 3;
    let mut jac = Matrix::zero(model.quadrics.len(), vars);
    for (r, q) in model.quadrics.iter().enumerate() {
        for v in 0..vars {
            *jac.at_mut(r, v) = q.partial(v).eval(&coords);
        }
    }
    Ok(jac.rank() == model.quadrics.len())
}

/// The member (Q(q_1), ..., Q(q_{n+3})) attached to a binary quadratic
/// Q = a x^2 + b x y + c y^2; its squares are the values of the quartic
/// Q^2 at the points.  Fails only if Q vanishes at every point.
pub fn member_from_quadratic(
    points: &[ProjectivePoint],
    q: &[Rational; 3],
) -> Result<ProjectivePoint> {
    let values: Vec<Rational> = points
        .iter()
        .map(|p| {
            let c = p.coords();
            let x = Rational::from_integer(c[0].clone());
            let y = Rational::from_integer(c[1].clone());
            &q[0] * &x * &x + &q[1] * &x * &y + &q[2] * &y * &y
        })
        .collect();
    ProjectivePoint::canonicalize(&values)
}
