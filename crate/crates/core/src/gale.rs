//! Association of point configurations.
//!
//! For m labelled points spanning P^n, the coordinate matrix A is
//! (n+1) x m; its right nullspace has dimension m - n - 1, and the columns
//! of the canonical nullspace basis B are the coordinates of m labelled
//! points in P^(m-n-2), the *associated* configuration. Basis freedom moves
//! the associated points by a projective transformation only, so the
//! construction is well defined up to equivalence; with the canonical RREF
//! nullspace it is exactly reproducible, and `B` ships with the result as
//! a machine-checkable certificate (`A * B^T = 0`).
//!
//! Association is an involution up to equivalence. A configuration of
//! m = 2n+2 points is *self-associated* when it is equivalent, as an
//! ordered tuple, to its own associate; labels are not allowed to move.

use crate::matrix::Matrix;
use crate::projective::{equivalent, PointConfiguration, ProjectivePoint};
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub struct AssociationResult {
    pub source: PointConfiguration,
    pub target: PointConfiguration,
    /// Canonical nullspace basis of the source coordinate matrix, one
    /// relation per row; its columns are the target coordinates.
    pub certificate: Matrix,
}

/// Associated configuration of `config`.
///
/// Needs m >= n+3 points spanning P^n; every nullspace-basis column must be
/// nonzero (no point of the source may be in the special position that
/// forces a zero column) and the resulting points must be pairwise
/// distinct.
pub fn associate(config: &PointConfiguration) -> Result<AssociationResult> {
    let n = config.n();
    let m = config.len();
    if m < n + 3 {
        return Err(Error::WrongPointCount {
            need: n + 3,
            got: m,
        });
    }
    let a = config.coordinate_matrix();
    let b = a.nullspace_basis();
    if b.rows() != m - n - 1 {
        // nullity > m - n - 1 means rank < n + 1
        return Err(Error::PointsDoNotSpan);
    }
    debug_assert!(a.mul(&b.transpose()).expect("shapes agree").is_zero());
    let mut points = Vec::with_capacity(m);
    for j in 0..m {
        let col = b.col(j);
        let p = ProjectivePoint::canonicalize(&col).map_err(|_| Error::SpecialPosition(j))?;
        points.push(p);
    }
    for (i, p) in points.iter().enumerate() {
        for (j, q) in points.iter().enumerate().skip(i + 1) {
            if p == q {
                return Err(Error::AssociatedPointsCollide(i, j));
            }
        }
    }
    let target = PointConfiguration::new(m - n - 2, points)?;
    Ok(AssociationResult {
        source: config.clone(),
        target,
        certificate: b,
    })
}

/// Whether a configuration of 2n+2 points is equivalent, in order, to its
/// own associate.
pub fn is_self_associated(config: &PointConfiguration) -> Result<bool> {
    let n = config.n();
    if config.len() != 2 * n + 2 {
        return Err(Error::WrongPointCount {
            need: 2 * n + 2,
            got: config.len(),
        });
    }
    let assoc = associate(config)?;
    equivalent(config, &assoc.target)
}
