//! Points, configurations and maps in projective space.
//!
//! A `ProjectivePoint` is stored canonically: integer coordinates, no
//! common factor, first nonzero coordinate positive. Two points are equal
//! as projective points exactly when the representations are equal, which
//! keeps configuration comparison and JSON output deterministic.
//!
//! `frame_transform` sends the first n+2 points of a configuration to the
//! standard frame (coordinate points followed by the all-ones point); it is
//! the workhorse behind `equivalent`, which decides *ordered* projective
//! equivalence. Labels matter throughout the crate: configurations that
//! differ by a permutation are genuinely different objects here.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::matrix::Matrix;
use crate::poly::monomial_basis;
use crate::rational::Rational;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjectivePoint {
    coords: Vec<BigInt>,
}

impl ProjectivePoint {
    /// Scale to primitive integer coordinates with positive leading entry.
    pub fn canonicalize(raw: &[Rational]) -> Result<Self> {
        if raw.iter().all(Rational::is_zero) {
            return Err(Error::ZeroVector);
        }
        let mut l = BigInt::one();
        for v in raw {
            l = l.lcm(v.denom());
        }
        let mut ints: Vec<BigInt> = raw.iter().map(|v| v.numer() * (&l / v.denom())).collect();
        let mut g = BigInt::zero();
        for v in &ints {
            g = g.gcd(v);
        }
        for v in ints.iter_mut() {
            *v = &*v / &g;
        }
        if ints
            .iter()
            .find(|v| !v.is_zero())
            .is_some_and(Signed::is_negative)
        {
            for v in ints.iter_mut() {
                *v = -&*v;
            }
        }
        Ok(Self { coords: ints })
    }

    pub fn from_integers(coords: &[i64]) -> Result<Self> {
        let raw: Vec<Rational> = coords.iter().map(|&c| crate::rational::rat(c)).collect();
        Self::canonicalize(&raw)
    }

    pub fn from_bigints(coords: &[BigInt]) -> Result<Self> {
        let raw: Vec<Rational> = coords
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        Self::canonicalize(&raw)
    }

    /// Coordinate point e_i in P^n.
    pub fn coordinate_point(i: usize, n: usize) -> Self {
        let mut coords = vec![BigInt::zero(); n + 1];
        coords[i] = BigInt::one();
        Self { coords }
    }

    /// The all-ones point (1 : 1 : ... : 1) in P^n.
    pub fn unit_point(n: usize) -> Self {
        Self {
            coords: vec![BigInt::one(); n + 1],
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn rational_coords(&self) -> Vec<Rational> {
        self.coords
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect()
    }
}

impl std::fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, " : ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// An ordered, labelled tuple of pairwise distinct points in P^n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointConfiguration {
    n: usize,
    points: Vec<ProjectivePoint>,
}

impl PointConfiguration {
    pub fn new(n: usize, points: Vec<ProjectivePoint>) -> Result<Self> {
        for (i, p) in points.iter().enumerate() {
            if p.ambient_dim() != n {
                return Err(Error::Shape(format!(
                    "point {i} lives in P^{}, configuration is in P^{n}",
                    p.ambient_dim()
                )));
            }
            for (j, q) in points.iter().enumerate().skip(i + 1) {
                if p == q {
                    return Err(Error::CoincidentPoints(i, j));
                }
            }
        }
        Ok(Self { n, points })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[ProjectivePoint] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &ProjectivePoint {
        &self.points[i]
    }

    /// (n+1) x m matrix whose columns are the point coordinates.
    pub fn coordinate_matrix(&self) -> Matrix {
        let mut m = Matrix::zero(self.n + 1, self.points.len());
        for (j, p) in self.points.iter().enumerate() {
            for (i, c) in p.coords().iter().enumerate() {
                *m.at_mut(i, j) = Rational::from_integer(c.clone());
            }
        }
        m
    }

    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.points.len() {
            return Err(Error::Shape("permutation length mismatch".into()));
        }
        let points = perm.iter().map(|&i| self.points[i].clone()).collect();
        Self::new(self.n, points)
    }

    pub fn swapped(&self, i: usize, j: usize) -> Self {
        let mut points = self.points.clone();
        points.swap(i, j);
        Self { n: self.n, points }
    }
}

/// An invertible projective transformation, stored as a primitive integer
/// matrix with positive first nonzero entry (row-major scan).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectiveMap {
    matrix: Matrix,
}

impl ProjectiveMap {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if matrix.rows() != matrix.cols() {
            return Err(Error::NotSquare {
                rows: matrix.rows(),
                cols: matrix.cols(),
            });
        }
        if matrix.rank() < matrix.rows() {
            return Err(Error::Singular);
        }
        Ok(Self {
            matrix: normalize_matrix(&matrix),
        })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, p: &ProjectivePoint) -> Result<ProjectivePoint> {
        let image = self.matrix.mul_vec(&p.rational_coords())?;
        ProjectivePoint::canonicalize(&image)
    }

    pub fn apply_config(&self, c: &PointConfiguration) -> Result<PointConfiguration> {
        let points = c
            .points()
            .iter()
            .map(|p| self.apply(p))
            .collect::<Result<Vec<_>>>()?;
        PointConfiguration::new(c.n(), points)
    }

    pub fn inverse(&self) -> Result<ProjectiveMap> {
        ProjectiveMap::new(self.matrix.inverse()?)
    }

    pub fn compose(&self, inner: &ProjectiveMap) -> Result<ProjectiveMap> {
        ProjectiveMap::new(self.matrix.mul(&inner.matrix)?)
    }
}

/// Scale a rational matrix to primitive integers, first nonzero entry
/// (row-major) positive.
fn normalize_matrix(m: &Matrix) -> Matrix {
    let flat: Vec<Rational> = (0..m.rows()).flat_map(|r| m.row(r).to_vec()).collect();
    let mut l = BigInt::one();
    for v in &flat {
        l = l.lcm(v.denom());
    }
    let mut ints: Vec<BigInt> = flat.iter().map(|v| v.numer() * (&l / v.denom())).collect();
    let mut g = BigInt::zero();
    for v in &ints {
        g = g.gcd(v);
    }
    if !g.is_zero() {
        for v in ints.iter_mut() {
            *v = &*v / &g;
        }
    }
    if ints
        .iter()
        .find(|v| !v.is_zero())
        .is_some_and(Signed::is_negative)
    {
        for v in ints.iter_mut() {
            *v = -&*v;
        }
    }
    Matrix::new(
        m.rows(),
        m.cols(),
        ints.into_iter().map(Rational::from_integer).collect(),
    )
    .expect("shape preserved")
}

/// The unique (up to scale) map sending the first n+1 points of `config`
/// to the coordinate points and point n+2 to (1 : ... : 1).
///
/// Requires m >= n+2 and every (n+1)-subset of the first n+2 points to be
/// linearly independent; the error names the offending subset (0-based
/// positions within the configuration).
pub fn frame_transform(config: &PointConfiguration) -> Result<ProjectiveMap> {
    let n = config.n();
    if config.len() < n + 2 {
        return Err(Error::WrongPointCount {
            need: n + 2,
            got: config.len(),
        });
    }
    // Columns of a: the first n+1 points.
    let mut a = Matrix::zero(n + 1, n + 1);
    for j in 0..=n {
        for (i, c) in config.point(j).coords().iter().enumerate() {
            *a.at_mut(i, j) = Rational::from_integer(c.clone());
        }
    }
    let a_inv = a
        .inverse()
        .map_err(|_| Error::DegenerateSubset((0..=n).collect()))?;
    // Coefficients of point n+1 against the basis of the first n+1 points.
    let c = a_inv.mul_vec(&config.point(n + 1).rational_coords())?;
    for (i, ci) in c.iter().enumerate() {
        if ci.is_zero() {
            // Dropping point i from the first n+2 leaves a dependent set.
            let subset: Vec<usize> = (0..=(n + 1)).filter(|&j| j != i).collect();
            return Err(Error::DegenerateSubset(subset));
        }
    }
    // M = diag(c)^(-1) * a^(-1) sends point j to e_j and point n+1 to ones.
    let mut m = Matrix::zero(n + 1, n + 1);
    for (r, cr) in c.iter().enumerate() {
        for col in 0..=n {
            *m.at_mut(r, col) = a_inv.at(r, col) / cr;
        }
    }
    ProjectiveMap::new(m)
}

/// Ordered projective equivalence: both configurations are normalized by
/// their frame maps and compared point by point.
pub fn equivalent(a: &PointConfiguration, b: &PointConfiguration) -> Result<bool> {
    if a.n() != b.n() || a.len() != b.len() {
        return Ok(false);
    }
    let fa = frame_transform(a)?;
    let fb = frame_transform(b)?;
    Ok(fa.apply_config(a)? == fb.apply_config(b)?)
}

/// Cross-ratio of four pairwise distinct points on P^1: the image of the
/// fourth point under the unique map sending the first three to 0, infinity
/// and 1. Never 0, 1 or infinite for distinct points, hence a plain
/// `Rational`.
pub fn cross_ratio(points: &[ProjectivePoint; 4]) -> Result<Rational> {
    for p in points.iter() {
        if p.ambient_dim() != 1 {
            return Err(Error::Shape(format!(
                "cross-ratio needs points on P^1, got P^{}",
                p.ambient_dim()
            )));
        }
    }
    let det = |i: usize, j: usize| -> Rational {
        let (pi, pj) = (points[i].coords(), points[j].coords());
        Rational::from_integer(&pi[0] * &pj[1] - &pj[0] * &pi[1])
    };
    for i in 0..4 {
        for j in (i + 1)..4 {
            if det(i, j).is_zero() {
                return Err(Error::CoincidentPoints(i, j));
            }
        }
    }
    Ok((det(0, 3) * det(1, 2)) / (det(0, 2) * det(1, 3)))
}

/// Veronese map of the given degree: all monomials of that degree in the
/// homogeneous coordinates, in canonical (graded-lex) order. Degree k on
/// P^1 lands in P^k; degree 2 on P^2 lands in P^5.
pub fn veronese(p: &ProjectivePoint, degree: u32) -> ProjectivePoint {
    let coords = p.rational_coords();
    let raw: Vec<Rational> = monomial_basis(coords.len(), degree)
        .iter()
        .map(|m| m.eval(&coords))
        .collect();
    ProjectivePoint::canonicalize(&raw).expect("nonzero point has nonzero Veronese image")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn pt(coords: &[i64]) -> ProjectivePoint {
        ProjectivePoint::from_integers(coords).unwrap()
    }

    fn config(n: usize, pts: &[&[i64]]) -> PointConfiguration {
        PointConfiguration::new(n, pts.iter().map(|c| pt(c)).collect()).unwrap()
    }

    /// P^1 point at affine parameter t, with (1 : 0) as infinity.
    fn param(t: i64) -> ProjectivePoint {
        pt(&[1, t])
    }

    #[test]
    fn canonicalization_examples() {
        let p =
            ProjectivePoint::canonicalize(&[rat(0), Rational::new((-1).into(), 2.into()), rat(-1)])
                .unwrap();
        assert_eq!(p, pt(&[0, 1, 2]));
        assert_eq!(pt(&[2, -4, 6]), pt(&[1, -2, 3]));
        assert_eq!(pt(&[-1, 2]), pt(&[1, -2]));
        assert!(ProjectivePoint::canonicalize(&[rat(0), rat(0)]).is_err());
    }

    #[test]
    fn configurations_reject_duplicates() {
        let err = PointConfiguration::new(1, vec![pt(&[1, 2]), pt(&[2, 4])]);
        assert!(matches!(err, Err(Error::CoincidentPoints(0, 1))));
    }

    #[test]
    fn frame_transform_hits_standard_frame() {
        let c = config(
            2,
            &[&[1, 2, 3], &[0, 1, 1], &[1, 0, 2], &[1, 1, 0], &[5, 7, 1]],
        );
        let f = frame_transform(&c).unwrap();
        let image = f.apply_config(&c).unwrap();
        assert_eq!(*image.point(0), ProjectivePoint::coordinate_point(0, 2));
        assert_eq!(*image.point(1), ProjectivePoint::coordinate_point(1, 2));
        assert_eq!(*image.point(2), ProjectivePoint::coordinate_point(2, 2));
        assert_eq!(*image.point(3), ProjectivePoint::unit_point(2));
    }

    #[test]
    fn frame_transform_names_degenerate_subset() {
        // First three points collinear in P^2.
        let c = config(2, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[1, 1, 1]]);
        match frame_transform(&c) {
            Err(Error::DegenerateSubset(s)) => assert_eq!(s, vec![0, 1, 2]),
            other => panic!("expected degenerate subset error, got {other:?}"),
        }
        // Fourth point in the span of the first two.
        let c = config(2, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 0]]);
        match frame_transform(&c) {
            Err(Error::DegenerateSubset(s)) => assert_eq!(s, vec![0, 1, 3]),
            other => panic!("expected degenerate subset error, got {other:?}"),
        }
    }

    #[test]
    fn equivalence_is_invariant_under_projective_maps() {
        let c = config(
            2,
            &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1], &[2, 3, 5]],
        );
        let g = ProjectiveMap::new(Matrix::from_i64_rows(&[&[1, 2, 0], &[0, 1, 4], &[1, 0, 1]]))
            .unwrap();
        let moved = g.apply_config(&c).unwrap();
        assert!(equivalent(&c, &moved).unwrap());
        // Unrelated fifth point: not equivalent.
        let other = config(
            2,
            &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1], &[2, 3, 7]],
        );
        assert!(!equivalent(&c, &other).unwrap());
    }

    #[test]
    fn equivalence_on_p1_respects_double_transpositions() {
        // Parameters (0, inf, 1, 2) vs (1, 2, 0, inf): related by the
        // double transposition (0 2)(1 3), which preserves the cross-ratio.
        let a =
            PointConfiguration::new(1, vec![param(0), pt(&[0, 1]), param(1), param(2)]).unwrap();
        let b =
            PointConfiguration::new(1, vec![param(1), param(2), param(0), pt(&[0, 1])]).unwrap();
        assert!(equivalent(&a, &b).unwrap());
        // A single transposition changes the cross-ratio.
        let c =
            PointConfiguration::new(1, vec![pt(&[0, 1]), param(0), param(1), param(2)]).unwrap();
        assert!(!equivalent(&a, &c).unwrap());
    }

    #[test]
    fn cross_ratio_normalization() {
        // Points at parameters 0, inf, 1, t have cross-ratio t.
        // Affine parameter t is the point (1 : t); infinity is (0 : 1).
        let quad = |t: i64| {
            [
                param(0),
                ProjectivePoint::from_integers(&[0, 1]).unwrap(),
                param(1),
                param(t),
            ]
        };
        assert_eq!(cross_ratio(&quad(2)).unwrap(), rat(2));
        assert_eq!(cross_ratio(&quad(-1)).unwrap(), rat(-1));
        assert_eq!(cross_ratio(&quad(7)).unwrap(), rat(7));
    }

    #[test]
    fn cross_ratio_is_invariant_under_double_transpositions() {
        let pts = [param(3), param(-2), param(5), param(11)];
        let base = cross_ratio(&pts).unwrap();
        let swap = |a: usize, b: usize, c: usize, d: usize| {
            cross_ratio(&[
                pts[a].clone(),
                pts[b].clone(),
                pts[c].clone(),
                pts[d].clone(),
            ])
            .unwrap()
        };
        assert_eq!(swap(1, 0, 3, 2), base);
        assert_eq!(swap(2, 3, 0, 1), base);
        assert_eq!(swap(3, 2, 1, 0), base);
        assert_ne!(swap(1, 0, 2, 3), base);
    }

    #[test]
    fn cross_ratio_rejects_coincident_points() {
        let pts = [param(3), param(3), param(5), param(11)];
        assert!(matches!(
            cross_ratio(&pts),
            Err(Error::CoincidentPoints(0, 1))
        ));
    }

    #[test]
    fn veronese_degree_4_on_p1() {
        let p = pt(&[1, 2]);
        assert_eq!(veronese(&p, 4), pt(&[1, 2, 4, 8, 16]));
    }

    #[test]
    fn veronese_conics_on_p2() {
        let p = pt(&[1, 1, 1]);
        assert_eq!(veronese(&p, 2), pt(&[1, 1, 1, 1, 1, 1]));
        let q = pt(&[1, 2, 3]);
        assert_eq!(veronese(&q, 2), pt(&[1, 2, 3, 4, 6, 9]));
    }

    #[test]
    fn projective_map_rejects_singular_matrices() {
        let m = Matrix::from_i64_rows(&[&[1, 2], &[2, 4]]);
        assert!(matches!(ProjectiveMap::new(m), Err(Error::Singular)));
    }
}
