//! Linear systems of hypersurfaces with base conditions.
//!
//! A degree-d hypersurface of P^n is a vector of coefficients indexed by
//! the graded-lex monomial basis.  Passing through a point, vanishing to
//! higher order, and plane tangency are all linear in those coefficients,
//! so a system is solved by one exact nullspace computation.  A point of
//! multiplicity mu imposes only the partials of order mu-1: the Euler
//! relation chains every lower order from them, and relying on rank rather
//! than condition counting is what lets the superabundant cases come out
//! right.
//!
//! On top of `solve_system` sit the plane pipelines: the ninth base point
//! of a pencil of cubics (resultant elimination plus exact deflation by the
//! eight known roots), the quintic with a triple point tangent to eight
//! lines, and the two reformulations through association: unique elliptic
//! sextics in P^5 and membership of the Weddle locus.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::gale::associate;
use crate::matrix::Matrix;
use crate::poly::{monomial_basis, Monomial, Polynomial};
use crate::projective::{PointConfiguration, ProjectivePoint};
use crate::rational::Rational;
use crate::unipoly::{self, UniPoly};
use crate::{Error, Result};

/// One base condition: a point, a vanishing order, and optionally (in P^2)
/// a line the hypersurface must be tangent to there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseCondition {
    pub point: ProjectivePoint,
    pub multiplicity: usize,
    pub tangent_line: Option<ProjectivePoint>,
}

impl BaseCondition {
    pub fn simple(point: ProjectivePoint) -> Self {
        Self {
            point,
            multiplicity: 1,
            tangent_line: None,
        }
    }

    pub fn multiple(point: ProjectivePoint, multiplicity: usize) -> Self {
        Self {
            point,
            multiplicity,
            tangent_line: None,
        }
    }

    pub fn tangent(point: ProjectivePoint, line: ProjectivePoint) -> Result<Self> {
        let cond = Self {
            point,
            multiplicity: 1,
            tangent_line: Some(line),
        };
        cond.validate(2)?;
        Ok(cond)
    }

    fn validate(&self, n: usize) -> Result<()> {
        if self.point.ambient_dim() != n {
            return Err(Error::Shape(format!(
                "condition point lies in P^{}, system is in P^{}",
                self.point.ambient_dim(),
                n
            )));
        }
        if self.multiplicity == 0 {
            return Err(Error::Shape("multiplicity must be at least 1".into()));
        }
        if let Some(line) = &self.tangent_line {
            if n != 2 {
                return Err(Error::TangencyAmbient(n));
            }
            let dot: BigInt = line
                .coords()
                .iter()
                .zip(self.point.coords())
                .map(|(a, b)| a * b)
                .sum();
            if !dot.is_zero() {
                return Err(Error::TangentNotIncident);
            }
        }
        Ok(())
    }
}

/// A solved linear system: the canonical basis of all degree-d forms
/// satisfying the conditions, together with the condition matrix rank.
#[derive(Debug, Clone)]
pub struct HypersurfaceSystem {
    pub n: usize,
    pub degree: u32,
    pub conditions: Vec<BaseCondition>,
    pub basis: Vec<Polynomial>,
    rank: usize,
    condition_rows: usize,
}

impl HypersurfaceSystem {
    /// Vector-space dimension (projective dimension plus one).
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn condition_rows(&self) -> usize {
        self.condition_rows
    }
}

/// Evaluate the partial derivative d^alpha of the monomial x^expo at a
/// point with integer coordinates.
fn monomial_partial_at(expo: &[u32], alpha: &[u32], coords: &[BigInt]) -> BigInt {
    let mut acc = BigInt::one();
    for ((&e, &a), c) in expo.iter().zip(alpha).zip(coords) {
        if e < a {
            return BigInt::zero();
        }
        for k in 0..a {
            acc *= BigInt::from((e - k) as i64);
        }
        let rest = e - a;
        if rest > 0 {
            if c.is_zero() {
                return BigInt::zero();
            }
            acc *= c.pow(rest);
        }
        if acc.is_zero() {
            return BigInt::zero();
        }
    }
    acc
}

fn condition_matrix_rows(
    cond: &BaseCondition,
    n: usize,
    degree: u32,
    monomials: &[Monomial],
) -> Result<Vec<Vec<Rational>>> {
    cond.validate(n)?;
    let coords = cond.point.coords();
    let mut rows = Vec::new();
    // Order min(mu-1, d) suffices: by the Euler relation, every lower-order
    // partial at the point is a combination of these; and when mu-1 > d the
    // order-d partials already force the zero form.
    let order = (cond.multiplicity as u32 - 1).min(degree);
    for alpha in monomial_basis(n + 1, order) {
        let row: Vec<Rational> = monomials
            .iter()
            .map(|m| Rational::from_integer(monomial_partial_at(&m.0, &alpha.0, coords)))
            .collect();
        rows.push(row);
    }
    if let Some(line) = &cond.tangent_line {
        // Direction of the line at the point: l x q is on the line and never
        // proportional to q, so one directional derivative plus the
        // passing-through row expresses tangency.
        let l = line.coords();
        let q = coords;
        let v = [
            &l[1] * &q[2] - &l[2] * &q[1],
            &l[2] * &q[0] - &l[0] * &q[2],
            &l[0] * &q[1] - &l[1] * &q[0],
        ];
        let row: Vec<Rational> = monomials
            .iter()
            .map(|m| {
                let mut acc = BigInt::zero();
                for (i, vi) in v.iter().enumerate() {
                    if vi.is_zero() {
                        continue;
                    }
                    let mut alpha = vec![0u32; n + 1];
                    alpha[i] = 1;
                    acc += vi * monomial_partial_at(&m.0, &alpha, q);
                }
                Rational::from_integer(acc)
            })
            .collect();
        rows.push(row);
    }
    Ok(rows)
}

/// Solve the linear system of degree-d hypersurfaces in P^n satisfying the
/// conditions.  The basis is the canonical reduced nullspace basis of the
/// condition matrix, so equal inputs give identical bases.
pub fn solve_system(
    n: usize,
    degree: u32,
    conditions: Vec<BaseCondition>,
) -> Result<HypersurfaceSystem> {
    if degree == 0 {
        return Err(Error::DegreeTooLow);
    }
    let monomials = monomial_basis(n + 1, degree);
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for cond in &conditions {
        rows.extend(condition_matrix_rows(cond, n, degree, &monomials)?);
    }
    let (basis_rows, rank, row_count) = if rows.is_empty() {
        let id = Matrix::identity(monomials.len());
        (
            (0..monomials.len())
                .map(|i| id.row(i).to_vec())
                .collect::<Vec<_>>(),
            0,
            0,
        )
    } else {
        let row_count = rows.len();
        let m = Matrix::from_rows(rows)?;
        let null = m.nullspace_basis();
        // rank-nullity; a second elimination would repeat the hard work
        let rank = m.cols() - null.rows();
        let basis_rows: Vec<Vec<Rational>> =
            (0..null.rows()).map(|i| null.row(i).to_vec()).collect();
        (basis_rows, rank, row_count)
    };
    let basis = basis_rows
        .iter()
        .map(|r| Polynomial::from_dense(n + 1, degree, r))
        .collect::<Result<Vec<_>>>()?;
    Ok(HypersurfaceSystem {
        n,
        degree,
        conditions,
        basis,
        rank,
        condition_rows: row_count,
    })
}

/// (n+1)^2 - m(n-1): the expected dimension of the family of elliptic
/// normal curves in P^n through m general points.
pub fn expected_dimension(n: usize, m: usize) -> i64 {
    let n = n as i64;
    (n + 1) * (n + 1) - (m as i64) * (n - 1)
}

const TRANSFORM_ATTEMPTS: usize = 64;

/// Deterministic stream of invertible 3x3 integer coordinate changes, used
/// to put a cubic pencil in elimination position.  The identity comes
/// first so well-placed inputs are processed as given.
fn transform_candidates() -> impl Iterator<Item = Matrix> {
    let mut state = 0x243f6a8885a308d3u64;
    let mut next_small = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        (state % 7) as i64 - 3
    };
    std::iter::once(Matrix::identity(3)).chain(std::iter::from_fn(move || loop {
        let rows: Vec<[i64; 3]> = (0..3)
            .map(|_| [next_small(), next_small(), next_small()])
            .collect();
        let m = Matrix::from_i64_rows(&rows.iter().map(|r| &r[..]).collect::<Vec<_>>());
        if m.rank() == 3 {
            return Some(m);
        }
    }))
}

fn eval_at_bigints(p: &Polynomial, coords: &[BigInt]) -> Rational {
    let pt: Vec<Rational> = coords
        .iter()
        .map(|c| Rational::from_integer(c.clone()))
        .collect();
    p.eval(&pt)
}

fn specialize_to_x(p: &Polynomial, y: &Rational) -> UniPoly {
    let s = p.specialize(&[None, Some(y.clone()), Some(Rational::one())]);
    UniPoly::new(s.as_univariate(0).expect("only x remains"))
}

/// The ninth base point of the pencil of cubics through eight plane points.
///
/// The pencil must have vector dimension exactly 2.  A coordinate change is
/// chosen so both generators keep x-degree 3, every input point stays off
/// z = 0, and the inputs project to distinct y/z values; the resultant in x
/// is then a degree-9 binary form whose roots under the projection are the
/// base points.  Dividing out the eight known roots exactly leaves the
/// ninth, which is lifted back through a gcd on its fibre line.
pub fn ninth_base_point(points: &[ProjectivePoint]) -> Result<ProjectivePoint> {
    if points.len() != 8 {
        return Err(Error::WrongPointCount {
            need: 8,
            got: points.len(),
        });
    }
    let config = PointConfiguration::new(2, points.to_vec())?;
    let conditions = config
        .points()
        .iter()
        .map(|p| BaseCondition::simple(p.clone()))
        .collect();
    let sys = solve_system(2, 3, conditions)?;
    if sys.dimension() != 2 {
        return Err(Error::PencilDimension(sys.dimension()));
    }
    let f = &sys.basis[0];
    let g = &sys.basis[1];

    for mat in transform_candidates().take(TRANSFORM_ATTEMPTS) {
        // x-degree must stay 3: the x^3 coefficient of F(Mx) is F(M e_0).
        let col0: Vec<BigInt> = mat
            .col(0)
            .iter()
            .map(|c| {
                debug_assert!(c.is_integer());
                c.numer().clone()
            })
            .collect();
        if eval_at_bigints(f, &col0).is_zero() || eval_at_bigints(g, &col0).is_zero() {
            continue;
        }
        let minv = mat.inverse().expect("candidates have full rank");
        // Transformed points M^{-1} q must be affine with distinct y/z.
        let mut ratios: Vec<(Rational, Rational)> = Vec::with_capacity(8);
        let mut ok = true;
        for p in config.points() {
            let img = minv.mul_vec(&p.rational_coords())?;
            if img[2].is_zero() {
                ok = false;
                break;
            }
            let ratio = &img[1] / &img[2];
            let x_affine = &img[0] / &img[2];
            if ratios.iter().any(|(r, _)| *r == ratio) {
                ok = false;
                break;
            }
            ratios.push((ratio, x_affine));
        }
        if !ok {
            continue;
        }

        let fp = f.substitute_linear(&mat)?;
        let gp = g.substitute_linear(&mat)?;

        // Res_x as a polynomial in y, recovered by interpolation: degree at
        // most 9, so ten nodes determine it.
        let nodes: Vec<Rational> = (-4i64..=5).map(crate::rational::rat).collect();
        let mut samples = Vec::with_capacity(nodes.len());
        let mut all_zero = true;
        for y in &nodes {
            let fy = specialize_to_x(&fp, y);
            let gy = specialize_to_x(&gp, y);
            let val = unipoly::resultant_formal(&fy, &gy, 3, 3)?;
            if !val.is_zero() {
                all_zero = false;
            }
            samples.push((y.clone(), val));
        }
        if all_zero {
            // The pencil generators share a component; no coordinate change
            // can fix that.
            return Err(Error::ResultantZero);
        }
        let eliminant = unipoly::interpolate(&samples)?;
        if eliminant.degree() != Some(9) {
            continue;
        }

        let mut residual = eliminant;
        for (r, _) in &ratios {
            residual = residual
                .deflate_root(r)
                .expect("input points are base points, so their ratios are roots");
        }
        debug_assert_eq!(residual.degree(), Some(1));
        let y9 = -residual.coeff(0) / residual.coeff(1);

        let f9 = specialize_to_x(&fp, &y9);
        let g9 = specialize_to_x(&gp, &y9);
        let h = f9.gcd(&g9);
        let x9 = match h.degree() {
            Some(1) => -h.coeff(0) / h.coeff(1),
            Some(2) => {
                // The ninth point shares its fibre line with a known point;
                // split off the known root.  Two genuinely new roots would
                // mean a tenth base point, so the locus is non-reduced.
                let known = ratios.iter().find(|(r, _)| *r == y9);
                let Some((_, xk)) = known else {
                    return Err(Error::NonReducedBaseLocus);
                };
                if !h.eval(xk).is_zero() {
                    return Err(Error::NonReducedBaseLocus);
                }
                let rest = h.deflate_root(xk)?;
                let x = -rest.coeff(0) / rest.coeff(1);
                if x == *xk {
                    return Err(Error::NonReducedBaseLocus);
                }
                x
            }
            _ => return Err(Error::NonReducedBaseLocus),
        };

        let back = mat.mul_vec(&[x9, y9, Rational::one()])?;
        let ninth = ProjectivePoint::canonicalize(&back)?;
        let coords: Vec<Rational> = ninth.rational_coords();
        assert!(
            f.eval(&coords).is_zero() && g.eval(&coords).is_zero(),
            "recovered point must lie on both pencil generators"
        );
        if config.points().contains(&ninth) {
            return Err(Error::NonReducedBaseLocus);
        }
        return Ok(ninth);
    }
    Err(Error::CoordinateSearchExhausted(TRANSFORM_ATTEMPTS))
}

/// The system of plane quintics with a triple point at the last input point
/// and prescribed tangent lines through it at the other eight.  Returns the
/// vector dimension and the canonical basis.
pub fn quintic_witness(points: &[ProjectivePoint]) -> Result<(usize, Vec<Polynomial>)> {
    if points.len() != 9 {
        return Err(Error::WrongPointCount {
            need: 9,
            got: points.len(),
        });
    }
    for (i, p) in points.iter().enumerate() {
        for (j, q) in points.iter().enumerate().skip(i + 1) {
            if p == q {
                return Err(Error::CoincidentPoints(i, j));
            }
        }
    }
    let q9 = &points[8];
    let mut conditions = vec![BaseCondition::multiple(q9.clone(), 3)];
    for p in &points[..8] {
        let a = p.coords();
        let b = q9.coords();
        let line = ProjectivePoint::from_bigints(&[
            &a[1] * &b[2] - &a[2] * &b[1],
            &a[2] * &b[0] - &a[0] * &b[2],
            &a[0] * &b[1] - &a[1] * &b[0],
        ])?;
        conditions.push(BaseCondition::tangent(p.clone(), line)?);
    }
    let sys = solve_system(2, 5, conditions)?;
    Ok((sys.dimension(), sys.basis))
}

fn cubic_system_of_associated(points: &[ProjectivePoint]) -> Result<HypersurfaceSystem> {
    if points.len() != 9 {
        return Err(Error::WrongPointCount {
            need: 9,
            got: points.len(),
        });
    }
    let config = PointConfiguration::new(5, points.to_vec())?;
    let assoc = associate(&config)?;
    let conditions = assoc
        .target
        .points()
        .iter()
        .map(|p| BaseCondition::simple(p.clone()))
        .collect();
    solve_system(2, 3, conditions)
}

/// For nine points of P^5 in association-general position: the unique plane
/// cubic through their associated points, witnessing the unique elliptic
/// normal sextic through the nine.
pub fn coble_sextic_witness(points: &[ProjectivePoint]) -> Result<Polynomial> {
    let sys = cubic_system_of_associated(points)?;
    match sys.dimension() {
        1 => Ok(sys.basis.into_iter().next().expect("dimension checked")),
        // Nine conditions on ten coefficients always leave a cubic, so this
        // arm is unreachable; kept so the dimension trichotomy is total.
        0 => Err(Error::NoEllipticCurve),
        _ => Err(Error::NinthPointOnWeddle),
    }
}

/// Does p lie on the Weddle locus of the eight points?  Criterion: the
/// associated nine plane points lie on a pencil (or more) of cubics.
pub fn weddle_membership(eight: &[ProjectivePoint], p: &ProjectivePoint) -> Result<bool> {
    if eight.len() != 8 {
        return Err(Error::WrongPointCount {
            need: 8,
            got: eight.len(),
        });
    }
    let mut points = eight.to_vec();
    points.push(p.clone());
    let sys = cubic_system_of_associated(&points)?;
    Ok(sys.dimension() >= 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::ConfigGenerator;
    use crate::projective::veronese;

    fn pts(raw: &[[i64; 3]]) -> Vec<ProjectivePoint> {
        raw.iter()
            .map(|c| ProjectivePoint::from_integers(c).unwrap())
            .collect()
    }

    fn simple_conditions(points: &[ProjectivePoint]) -> Vec<BaseCondition> {
        points
            .iter()
            .map(|p| BaseCondition::simple(p.clone()))
            .collect()
    }

    #[test]
    fn expected_dimension_table() {
        assert_eq!(expected_dimension(2, 9), 0);
        assert_eq!(expected_dimension(3, 8), 0);
        assert_eq!(expected_dimension(5, 9), 0);
        for n in 2..=7 {
            assert_eq!(expected_dimension(n, n + 3), 4);
        }
        assert_eq!(expected_dimension(2, 0), 9);
    }

    #[test]
    fn line_through_two_points() {
        let points = pts(&[[1, 0, 0], [0, 1, 0]]);
        let sys = solve_system(2, 1, simple_conditions(&points)).unwrap();
        assert_eq!(sys.dimension(), 1);
        // The only line through e_0 and e_1 is z = 0.
        let dense = sys.basis[0].to_dense(1).unwrap();
        let expect: Vec<Rational> = [0, 0, 1].iter().map(|&c| crate::rational::rat(c)).collect();
        assert_eq!(dense, expect);
    }

    #[test]
    fn unique_conic_through_five_points() {
        let points = pts(&[[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1], [1, 2, 3]]);
        let sys = solve_system(2, 2, simple_conditions(&points)).unwrap();
        assert_eq!(sys.dimension(), 1);
        for p in &points {
            assert!(sys.basis[0].eval(&p.rational_coords()).is_zero());
        }
    }

    #[test]
    fn cubics_through_random_points_have_generic_dimension() {
        let mut g = ConfigGenerator::new(271, 50);
        let eight = g.config(2, 8).unwrap();
        let sys8 = solve_system(2, 3, simple_conditions(eight.points())).unwrap();
        assert_eq!(sys8.dimension(), 2);
        let nine = g.config(2, 9).unwrap();
        let sys9 = solve_system(2, 3, simple_conditions(nine.points())).unwrap();
        assert_eq!(sys9.dimension(), 1);
    }

    #[test]
    fn singular_conics_at_a_point_form_a_net() {
        let p = ProjectivePoint::from_integers(&[1, 2, 1]).unwrap();
        let sys = solve_system(2, 2, vec![BaseCondition::multiple(p.clone(), 2)]).unwrap();
        assert_eq!(sys.condition_rows(), 3);
        assert_eq!(sys.dimension(), 3);
        // Every member really is singular there: all first partials vanish.
        for b in &sys.basis {
            for v in 0..3 {
                assert!(b.partial(v).eval(&p.rational_coords()).is_zero());
            }
        }
    }

    #[test]
    fn tangency_pins_down_the_line_itself() {
        let p = ProjectivePoint::from_integers(&[1, 0, 0]).unwrap();
        let l = ProjectivePoint::from_integers(&[0, 0, 1]).unwrap();
        let sys = solve_system(2, 1, vec![BaseCondition::tangent(p, l).unwrap()]).unwrap();
        assert_eq!(sys.dimension(), 1);
        let dense = sys.basis[0].to_dense(1).unwrap();
        let expect: Vec<Rational> = [0, 0, 1].iter().map(|&c| crate::rational::rat(c)).collect();
        assert_eq!(dense, expect);
    }

    #[test]
    fn tangency_outside_the_plane_is_rejected() {
        let p = ProjectivePoint::from_integers(&[1, 0, 0, 0]).unwrap();
        let l = ProjectivePoint::from_integers(&[0, 0, 0, 1]).unwrap();
        let cond = BaseCondition {
            point: p,
            multiplicity: 1,
            tangent_line: Some(l),
        };
        assert!(matches!(
            solve_system(3, 1, vec![cond]),
            Err(Error::TangencyAmbient(3))
        ));
    }

    #[test]
    fn tangent_line_must_pass_through_the_point() {
        let p = ProjectivePoint::from_integers(&[1, 0, 0]).unwrap();
        let l = ProjectivePoint::from_integers(&[1, 1, 1]).unwrap();
        assert!(matches!(
            BaseCondition::tangent(p, l),
            Err(Error::TangentNotIncident)
        ));
    }

    #[test]
    fn empty_condition_list_gives_the_full_space() {
        let sys = solve_system(2, 2, vec![]).unwrap();
        assert_eq!(sys.dimension(), 6);
        assert_eq!(sys.rank(), 0);
    }

    #[test]
    fn half_anticanonical_dimension_in_p3() {
        let mut g = ConfigGenerator::new(314, 50);
        let config = g.config(3, 6).unwrap();
        let sys = solve_system(3, 2, simple_conditions(config.points())).unwrap();
        assert_eq!(sys.dimension(), 4);
    }

    #[test]
    fn half_anticanonical_dimension_in_p5() {
        let mut g = ConfigGenerator::new(159, 20);
        let config = g.config(5, 8).unwrap();
        let conditions = config
            .points()
            .iter()
            .map(|p| BaseCondition::multiple(p.clone(), 2))
            .collect();
        let sys = solve_system(5, 3, conditions).unwrap();
        assert_eq!(sys.condition_rows(), 48);
        assert_eq!(sys.dimension(), 8);
    }

    #[test]
    fn ninth_base_point_closes_the_pencil() {
        let mut g = ConfigGenerator::new(41, 50);
        let config = g.config(2, 8).unwrap();
        let ninth = ninth_base_point(config.points()).unwrap();
        assert!(!config.points().contains(&ninth));
        // Independent oracle: adding the ninth point does not cut the
        // system further.
        let mut all = config.points().to_vec();
        all.push(ninth);
        let sys = solve_system(2, 3, simple_conditions(&all)).unwrap();
        assert_eq!(sys.dimension(), 2);
    }

    #[test]
    fn four_collinear_points_share_a_component() {
        let points = pts(&[
            [1, 0, 0],
            [0, 1, 0],
            [1, 1, 0],
            [1, 2, 0],
            [0, 0, 1],
            [1, 1, 1],
            [1, 2, 4],
            [2, 3, 1],
        ]);
        assert!(matches!(
            ninth_base_point(&points),
            Err(Error::ResultantZero)
        ));
    }

    #[test]
    fn eight_points_on_a_conic_leave_a_net() {
        let points: Vec<ProjectivePoint> = (1..=8)
            .map(|t| ProjectivePoint::from_integers(&[1, t, t * t]).unwrap())
            .collect();
        assert!(matches!(
            ninth_base_point(&points),
            Err(Error::PencilDimension(3))
        ));
    }

    #[test]
    fn tangent_pencil_is_rejected_as_non_reduced() {
        // Intersection of the triangles xyz and M1 M2 M3 where M1, M2 meet
        // on the line x = 0: eight distinct points, one of them double, so
        // there is no reduced ninth point.
        let points = pts(&[
            [0, 1, 1],
            [0, 3, -2],
            [1, 0, 1],
            [1, 0, 2],
            [3, 0, -1],
            [1, -1, 0],
            [1, -2, 0],
            [2, -1, 0],
        ]);
        assert!(matches!(
            ninth_base_point(&points),
            Err(Error::NonReducedBaseLocus)
        ));
    }

    #[test]
    fn ninth_point_needs_exactly_eight_inputs() {
        let points = pts(&[[1, 0, 0], [0, 1, 0]]);
        assert!(matches!(
            ninth_base_point(&points),
            Err(Error::WrongPointCount { need: 8, got: 2 })
        ));
    }

    #[test]
    fn quintic_exists_exactly_on_pencil_base_points() {
        let mut g = ConfigGenerator::new(77, 50);
        let config = g.config(2, 8).unwrap();
        let ninth = ninth_base_point(config.points()).unwrap();
        let mut nine = config.points().to_vec();
        nine.push(ninth.clone());
        let (dim, basis) = quintic_witness(&nine).unwrap();
        assert_eq!(dim, 1);
        let quintic = &basis[0];
        // Second-order partials vanish at the triple point.
        for alpha in monomial_basis(3, 2) {
            assert!(quintic
                .partial_multi(&alpha.0)
                .eval(&ninth.rational_coords())
                .is_zero());
        }
        for p in config.points() {
            assert!(quintic.eval(&p.rational_coords()).is_zero());
        }

        // A generic nine-tuple admits no such quintic.
        let random = g.config(2, 9).unwrap();
        let (dim0, _) = quintic_witness(random.points()).unwrap();
        assert_eq!(dim0, 0);
    }

    #[test]
    fn quintic_rejects_coincident_points() {
        let mut g = ConfigGenerator::new(78, 50);
        let config = g.config(2, 8).unwrap();
        let mut nine = config.points().to_vec();
        nine.push(config.points()[0].clone());
        assert!(matches!(
            quintic_witness(&nine),
            Err(Error::CoincidentPoints(0, 8))
        ));
    }

    #[test]
    fn coble_witness_on_veronese_images() {
        let mut g = ConfigGenerator::new(90, 50);
        let plane = g.config(2, 9).unwrap();
        let lifted: Vec<ProjectivePoint> = plane.points().iter().map(|p| veronese(p, 2)).collect();
        let cubic = coble_sextic_witness(&lifted).unwrap();
        assert_eq!(cubic.degree(), Some(3));
        assert!(cubic.is_homogeneous());
    }

    #[test]
    fn coble_witness_needs_spanning_points() {
        // Nine points on a 3-plane of P^5 cannot span.
        let flat: Vec<ProjectivePoint> = (1..=9)
            .map(|t| ProjectivePoint::from_integers(&[1, t, t * t, t * t * t, 0, 0]).unwrap())
            .collect();
        assert!(matches!(
            coble_sextic_witness(&flat),
            Err(Error::PointsDoNotSpan)
        ));
    }

    #[test]
    fn pencil_base_points_lift_onto_the_weddle_locus() {
        let mut g = ConfigGenerator::new(101, 50);
        let config = g.config(2, 8).unwrap();
        let ninth = ninth_base_point(config.points()).unwrap();
        let eight: Vec<ProjectivePoint> = config.points().iter().map(|p| veronese(p, 2)).collect();
        let lifted_ninth = veronese(&ninth, 2);
        assert!(weddle_membership(&eight, &lifted_ninth).unwrap());
        // The pencil criterion also rejects the witness construction.
        let mut nine = eight.clone();
        nine.push(lifted_ninth);
        assert!(matches!(
            coble_sextic_witness(&nine),
            Err(Error::NinthPointOnWeddle)
        ));

        // A non-base ninth plane point fails the criterion.
        let other = veronese(&g.point(2), 2);
        if !eight.contains(&other) {
            assert!(!weddle_membership(&eight, &other).unwrap());
        }
        // So does a random point of P^5.
        let free = g.point(5);
        if !eight.contains(&free) {
            assert!(!weddle_membership(&eight, &free).unwrap());
        }
    }
}
