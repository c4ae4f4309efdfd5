//! Dense matrices over the rationals.
//!
//! Row-major, arbitrary-precision. RREF of a given matrix is unique (so the
//! elimination is free to pick pivot rows for speed), but the *nullspace
//! basis* built from it is only canonical because the free-column
//! construction is pinned down here; association certificates and suite
//! reports rely on that.
//!
//! Internally `rref` clears denominators row by row (RREF is invariant under
//! row scaling) and runs a fraction-free integer elimination: each forward
//! update is `(pivot * a[i][j] - a[i][c] * prow[j]) / prev_pivot` with the
//! division exact, applied only to rows below the pivot; the reduced rows
//! are then recovered by a fraction-free back-substitution over the free
//! columns alone, whose entries all share the final pivot as denominator.
//! Entries stay the size of minors of the input rather than doubling in
//! length at every step.
//!
//! For large matrices `nullspace_basis` first tries a certified shortcut:
//! one elimination modulo a fixed word-size prime locates the pivot columns
//! and rows, p-adic lifting against the pivot submatrix recovers the basis
//! entries in native arithmetic, and every candidate vector is then verified
//! against every row in exact integers. The prime bounds the rank from
//! below, the verified vectors bound it from above, and an echelon check on
//! the lifted entries pins the free set, so a successful run returns exactly
//! the canonical basis; any failure falls back to the elimination above.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::rational::Rational;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Result of `Matrix::rref`.
#[derive(Debug, Clone)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    /// Pivot column of each of the first `rank` rows, strictly increasing.
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "matrix data length {} != {rows}x{cols}",
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience for tests and small tables.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let data = rows
            .iter()
            .flat_map(|row| row.iter().map(|&v| crate::rational::rat(v)))
            .collect();
        Self {
            rows: rows.len(),
            cols: rows.first().map_or(0, |r| r.len()),
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Rational {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *out.at_mut(c, r) = self.at(r, c).clone();
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.at(k, c);
                    if !b.is_zero() {
                        *out.at_mut(r, c) += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .map(|(a, b)| a * b)
                    .sum::<Rational>()
            })
            .collect())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    /// `[self | other]` side by side.
    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows {
            return Err(Error::Shape("hstack: row counts differ".into()));
        }
        let mut out = Matrix::zero(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *out.at_mut(r, c) = self.at(r, c).clone();
            }
            for c in 0..other.cols {
                *out.at_mut(r, self.cols + c) = other.at(r, c).clone();
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form, rank and pivot columns.
    pub fn rref(&self) -> Rref {
        let mut a: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|r| primitive_int_row(self.row(r)))
            .collect();
        let rows = self.rows;
        let cols = self.cols;

        let exact_div = |num: BigInt, den: &BigInt| -> BigInt {
            let (q, r) = num.div_rem(den);
            debug_assert!(r.is_zero(), "fraction-free step not exact");
            q
        };

        // Forward pass: fraction-free echelon form.  Row `i` ends at level
        // `i + 1`, meaning its entries are (i+1)-minors of the input; only
        // rows below the pivot are touched.  The pivot row is the candidate
        // with the shortest pivot entry, which keeps the minors small.
        let mut prev = BigInt::one();
        let mut pivots: Vec<usize> = Vec::new();
        for col in 0..cols {
            let pr = pivots.len();
            if pr == rows {
                break;
            }
            let Some(found) = (pr..rows)
                .filter(|&r| !a[r][col].is_zero())
                .min_by_key(|&r| a[r][col].magnitude().bits())
            else {
                continue;
            };
            a.swap(pr, found);
            let pivot = a[pr][col].clone();
            let (head, tail) = a.split_at_mut(pr + 1);
            let prow = &head[pr];
            for row in tail.iter_mut() {
                let aic = std::mem::replace(&mut row[col], BigInt::zero());
                if aic.is_zero() {
                    for entry in row[col + 1..].iter_mut() {
                        if !entry.is_zero() {
                            *entry = exact_div(&pivot * &*entry, &prev);
                        }
                    }
                } else {
                    for (entry, p) in row[col + 1..].iter_mut().zip(&prow[col + 1..]) {
                        let num = if p.is_zero() {
                            if entry.is_zero() {
                                continue;
                            }
                            &pivot * &*entry
                        } else {
                            &pivot * &*entry - &aic * p
                        };
                        *entry = exact_div(num, &prev);
                    }
                }
            }
            pivots.push(col);
            prev = pivot;
        }
        let rank = pivots.len();
        debug_assert!(a[rank..].iter().all(|row| row.iter().all(Zero::is_zero)));

        // Back pass: every entry of the reduced form is a rank-minor over
        // the last pivot (Cramer), so z[i] = last_pivot * reduced_row[i] is
        // an integer row supported on the free columns and satisfies
        //   z[i] = (last_pivot * a[i] - sum_{j>i} a[i][pivot_j] * z[j]) / pivot_i
        // with exact divisions.
        let mut out = Matrix::zero(rows, cols);
        if rank > 0 {
            let free: Vec<usize> = {
                let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
                (0..cols).filter(|c| !pivot_set.contains(c)).collect()
            };
            let last = a[rank - 1][pivots[rank - 1]].clone();
            let mut z: Vec<Vec<BigInt>> = vec![Vec::new(); rank];
            for i in (0..rank).rev() {
                let mut acc: Vec<BigInt> = free.iter().map(|&f| &last * &a[i][f]).collect();
                for j in i + 1..rank {
                    let c = &a[i][pivots[j]];
                    if c.is_zero() {
                        continue;
                    }
                    for (entry, zj) in acc.iter_mut().zip(&z[j]) {
                        if !zj.is_zero() {
                            *entry -= c * zj;
                        }
                    }
                }
                let d = &a[i][pivots[i]];
                for entry in acc.iter_mut() {
                    if !entry.is_zero() {
                        *entry = exact_div(std::mem::take(entry), d);
                    }
                }
                z[i] = acc;
            }
            for i in 0..rank {
                *out.at_mut(i, pivots[i]) = Rational::one();
                for (k, &f) in free.iter().enumerate() {
                    if !z[i][k].is_zero() {
                        *out.at_mut(i, f) = Rational::new(z[i][k].clone(), last.clone());
                    }
                }
            }
        }
        Rref {
            matrix: out,
            rank,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Canonical basis of the right nullspace, one vector per row.
    ///
    /// For each free column `f` of the RREF the basis vector has a 1 in
    /// position `f`, zeros in the other free positions, and `-R[i][f]` in
    /// pivot position `pivots[i]`. Rows are ordered by increasing `f`.
    /// The result has `cols - rank` rows (possibly zero).
    pub fn nullspace_basis(&self) -> Matrix {
        if self.rows * self.cols >= LIFT_THRESHOLD {
            if let Some(m) = self.nullspace_by_lifting() {
                return m;
            }
        }
        nullspace_from_rref(&self.rref(), self.cols)
    }

    /// Nullspace via one prime elimination, p-adic lifting and exact
    /// verification. `None` means some step could not be certified (an
    /// unlucky prime, or entries too large for native arithmetic) and the
    /// caller must fall back to the fraction-free elimination.
    fn nullspace_by_lifting(&self) -> Option<Matrix> {
        // native i128 accumulators in the lifting need headroom above
        // rank * entry * digit
        const ENTRY_LIMIT: i64 = 1 << 40;
        let cols = self.cols;
        let mut int_rows: Vec<Vec<i64>> = Vec::with_capacity(self.rows);
        let mut big_rows: Vec<Vec<BigInt>> = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let row = primitive_int_row(self.row(r));
            let mut small = Vec::with_capacity(cols);
            for v in &row {
                let x = v.to_i64()?;
                if x.abs() > ENTRY_LIMIT {
                    return None;
                }
                small.push(x);
            }
            int_rows.push(small);
            big_rows.push(row);
        }

        let (pivot_cols, pivot_rows) = modp_echelon(&int_rows, cols);
        let rank = pivot_cols.len();
        let mut is_pivot = vec![false; cols];
        for &c in &pivot_cols {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..cols).filter(|&c| !is_pivot[c]).collect();
        if free.is_empty() {
            // full column rank already modulo the prime, so over Q as well
            return Some(Matrix::zero(0, cols));
        }
        if rank == 0 {
            // a primitive row vanishes modulo the prime only if it is zero
            return Some(Matrix::identity(cols));
        }

        // pivot submatrix B is invertible modulo the prime by construction,
        // hence invertible over Q; solve B X = -C for the free columns C
        let b: Vec<Vec<i64>> = pivot_rows
            .iter()
            .map(|&r| pivot_cols.iter().map(|&c| int_rows[r][c]).collect())
            .collect();
        let rhs: Vec<Vec<i64>> = pivot_rows
            .iter()
            .map(|&r| free.iter().map(|&f| -int_rows[r][f]).collect())
            .collect();
        let bmod: Vec<Vec<u64>> = b
            .iter()
            .map(|row| row.iter().map(|&v| to_mod(v)).collect())
            .collect();
        let binv = modp_inverse(&bmod)?;

        // digit count from the Hadamard bound: numerators and denominators
        // of X are determinants of submatrices of the pivot rows
        let mut bits_h = 0usize;
        for &r in &pivot_rows {
            let norm2: u128 = int_rows[r]
                .iter()
                .map(|&v| (v as i128 * v as i128) as u128)
                .sum();
            bits_h += (128 - norm2.leading_zeros() as usize) / 2 + 1;
        }
        let steps = (2 * bits_h + 2) / 61 + 2;
        let x = lift_solution(&b, &binv, &rhs, steps)?;

        // echelon check: a pivot below a free column must not contribute,
        // otherwise the prime misidentified the leftmost independent set
        for (i, &p) in pivot_cols.iter().enumerate() {
            for (k, &f) in free.iter().enumerate() {
                if p > f && !x[i][k].is_zero() {
                    return None;
                }
            }
        }

        let mut out = Matrix::zero(free.len(), cols);
        for (k, &f) in free.iter().enumerate() {
            *out.at_mut(k, f) = Rational::one();
            for (i, &p) in pivot_cols.iter().enumerate() {
                if !x[i][k].is_zero() {
                    *out.at_mut(k, p) = x[i][k].clone();
                }
            }
        }

        // exact verification against every row (not only the pivot rows)
        // certifies the result: rank >= rank mod p, and these independent
        // null vectors force rank <= cols - free
        for (k, &f) in free.iter().enumerate() {
            let mut den = BigInt::one();
            for xi in &x {
                den = den.lcm(xi[k].denom());
            }
            let mut w = vec![BigInt::zero(); cols];
            w[f] = den.clone();
            for (i, &p) in pivot_cols.iter().enumerate() {
                let e = &x[i][k];
                if !e.is_zero() {
                    w[p] = e.numer() * (&den / e.denom());
                }
            }
            for row in &big_rows {
                let mut acc = BigInt::zero();
                for (a, b) in row.iter().zip(&w) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                if !acc.is_zero() {
                    return None;
                }
            }
        }
        Some(out)
    }

    /// Exact determinant (square matrices only); fraction-free elimination
    /// with per-row scaling factored back in at the end.
    pub fn determinant(&self) -> Result<Rational> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Rational::one());
        }
        let mut scale = Rational::one();
        let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for r in 0..n {
            let (row, factor) = scaled_int_row(self.row(r));
            // row = factor * original row, so det(int) = det(self) * prod(factors)
            scale *= factor;
            a.push(row);
        }
        let mut prev = BigInt::one();
        let mut sign = 1i32;
        for k in 0..n {
            let Some(found) = (k..n).find(|&r| !a[r][k].is_zero()) else {
                return Ok(Rational::zero());
            };
            if found != k {
                a.swap(k, found);
                sign = -sign;
            }
            let pivot = a[k][k].clone();
            if k + 1 == n {
                break;
            }
            let prow = a[k].clone();
            for row in a.iter_mut().skip(k + 1) {
                let aik = std::mem::replace(&mut row[k], BigInt::zero());
                for j in (k + 1)..n {
                    let num = &pivot * &row[j] - &aik * &prow[j];
                    debug_assert!((&num % &prev).is_zero());
                    row[j] = num / &prev;
                }
            }
            prev = pivot;
        }
        let det_int = Rational::from_integer(a[n - 1][n - 1].clone());
        let det = det_int / scale;
        Ok(if sign < 0 { -det } else { det })
    }

    /// Exact inverse via RREF of `[self | I]`.
    pub fn inverse(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(n))?;
        let rref = aug.rref();
        if rref.rank < n || rref.pivots.iter().take(n).enumerate().any(|(i, &p)| p != i) {
            return Err(Error::Singular);
        }
        let mut out = Matrix::zero(n, n);
        for r in 0..n {
            for c in 0..n {
                *out.at_mut(r, c) = rref.matrix.at(r, n + c).clone();
            }
        }
        Ok(out)
    }
}

/// Canonical free-column construction from a reduced form.
fn nullspace_from_rref(rref: &Rref, cols: usize) -> Matrix {
    let pivot_set: std::collections::BTreeSet<usize> = rref.pivots.iter().copied().collect();
    let free: Vec<usize> = (0..cols).filter(|c| !pivot_set.contains(c)).collect();
    let mut out = Matrix::zero(free.len(), cols);
    for (k, &f) in free.iter().enumerate() {
        *out.at_mut(k, f) = Rational::one();
        for (i, &p) in rref.pivots.iter().enumerate() {
            let v = rref.matrix.at(i, f);
            if !v.is_zero() {
                *out.at_mut(k, p) = -v.clone();
            }
        }
    }
    out
}

/// 2^61 - 1, prime; products of two residues fit in u128.
const LIFT_PRIME: u64 = (1 << 61) - 1;
/// Entry count above which `nullspace_basis` tries the lifting path.
const LIFT_THRESHOLD: usize = 4000;

#[inline]
fn mul_mod(a: u64, b: u64) -> u64 {
    const M: u128 = (1u128 << 61) - 1;
    let p = a as u128 * b as u128;
    let s = (p & M) + (p >> 61);
    let s = (s & M) + (s >> 61);
    let r = s as u64;
    if r >= LIFT_PRIME {
        r - LIFT_PRIME
    } else {
        r
    }
}

#[inline]
fn sub_mod(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + LIFT_PRIME - b
    }
}

fn inv_mod(a: u64) -> u64 {
    // Fermat: a^(p-2)
    let mut acc = 1u64;
    let mut base = a;
    let mut e = LIFT_PRIME - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base);
        }
        base = mul_mod(base, base);
        e >>= 1;
    }
    acc
}

#[inline]
fn to_mod(v: i64) -> u64 {
    v.rem_euclid(LIFT_PRIME as i64) as u64
}

/// Echelon form modulo `LIFT_PRIME`: pivot columns plus, for each, the
/// original index of the row hosting it.
fn modp_echelon(rows: &[Vec<i64>], cols: usize) -> (Vec<usize>, Vec<usize>) {
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| to_mod(v)).collect())
        .collect();
    let mut owner: Vec<usize> = (0..rows.len()).collect();
    let mut pivot_cols = Vec::new();
    let mut pivot_rows = Vec::new();
    for col in 0..cols {
        let pr = pivot_cols.len();
        if pr == m.len() {
            break;
        }
        let Some(found) = (pr..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(pr, found);
        owner.swap(pr, found);
        let inv = inv_mod(m[pr][col]);
        for e in m[pr][col..].iter_mut() {
            *e = mul_mod(*e, inv);
        }
        let (head, tail) = m.split_at_mut(pr + 1);
        let prow = &head[pr];
        for row in tail.iter_mut() {
            let f = row[col];
            if f == 0 {
                continue;
            }
            row[col] = 0;
            for j in col + 1..cols {
                if prow[j] != 0 {
                    row[j] = sub_mod(row[j], mul_mod(f, prow[j]));
                }
            }
        }
        pivot_cols.push(col);
        pivot_rows.push(owner[pr]);
    }
    (pivot_cols, pivot_rows)
}

/// Inverse modulo `LIFT_PRIME`; `None` when singular (cannot happen for the
/// pivot submatrix selected by `modp_echelon`).
fn modp_inverse(b: &[Vec<u64>]) -> Option<Vec<Vec<u64>>> {
    let n = b.len();
    let mut a: Vec<Vec<u64>> = b
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = vec![0u64; 2 * n];
            r[..n].copy_from_slice(row);
            r[n + i] = 1;
            r
        })
        .collect();
    for col in 0..n {
        let found = (col..n).find(|&r| a[r][col] != 0)?;
        a.swap(col, found);
        let inv = inv_mod(a[col][col]);
        for e in a[col][col..].iter_mut() {
            *e = mul_mod(*e, inv);
        }
        let prow = std::mem::take(&mut a[col]);
        for (r, row) in a.iter_mut().enumerate() {
            if r == col {
                continue;
            }
            let f = row[col];
            if f == 0 {
                continue;
            }
            for j in col..2 * n {
                if prow[j] != 0 {
                    row[j] = sub_mod(row[j], mul_mod(f, prow[j]));
                }
            }
        }
        a[col] = prow;
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Exact rational solution of `B X = rhs` by p-adic lifting: per step one
/// native residual update and one multiplication by `binv` modulo the
/// prime, then a single rational reconstruction of the accumulated digits.
/// The residual entries stay below `rank * max|B|` throughout, so i128
/// arithmetic never overflows for the entry sizes the caller admits.
fn lift_solution(
    b: &[Vec<i64>],
    binv: &[Vec<u64>],
    rhs: &[Vec<i64>],
    steps: usize,
) -> Option<Vec<Vec<Rational>>> {
    let rank = b.len();
    let nf = rhs[0].len();
    let mut r: Vec<Vec<i128>> = rhs
        .iter()
        .map(|row| row.iter().map(|&v| v as i128).collect())
        .collect();
    let mut digits: Vec<Vec<u64>> = Vec::with_capacity(steps);
    for _ in 0..steps {
        if r.iter().all(|row| row.iter().all(|&v| v == 0)) {
            break;
        }
        let rm: Vec<Vec<u64>> = r
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&v| v.rem_euclid(LIFT_PRIME as i128) as u64)
                    .collect()
            })
            .collect();
        let mut d = vec![0u64; rank * nf];
        for i in 0..rank {
            let out = &mut d[i * nf..(i + 1) * nf];
            for k in 0..rank {
                let c = binv[i][k];
                if c == 0 {
                    continue;
                }
                for (cell, &v) in out.iter_mut().zip(&rm[k]) {
                    if v != 0 {
                        let s = *cell + mul_mod(c, v);
                        *cell = if s >= LIFT_PRIME { s - LIFT_PRIME } else { s };
                    }
                }
            }
        }
        for i in 0..rank {
            let mut acc = vec![0i128; nf];
            for k in 0..rank {
                let c = b[i][k] as i128;
                if c == 0 {
                    continue;
                }
                for (a, &v) in acc.iter_mut().zip(&d[k * nf..(k + 1) * nf]) {
                    *a += c * v as i128;
                }
            }
            for (rv, &a) in r[i].iter_mut().zip(&acc) {
                let num = *rv - a;
                debug_assert!(num % LIFT_PRIME as i128 == 0);
                *rv = num / LIFT_PRIME as i128;
            }
        }
        digits.push(d);
    }

    let modulus = BigInt::from(LIFT_PRIME).pow(steps as u32);
    let bound = ((&modulus - BigInt::one()) / BigInt::from(2)).sqrt();
    // entries share small denominators (all divide det B), so after the
    // first genuine reconstruction most values clear to short integers
    let mut den_acc = BigInt::one();
    let mut x = vec![vec![Rational::zero(); nf]; rank];
    for i in 0..rank {
        for k in 0..nf {
            let mut v = BigInt::zero();
            for d in digits.iter().rev() {
                v = v * LIFT_PRIME + d[i * nf + k];
            }
            let w = (&v * &den_acc) % &modulus;
            let num = if w <= bound {
                w
            } else if &modulus - &w <= bound {
                w - &modulus
            } else {
                let (n0, d0) = rat_recon(&v, &modulus, &bound)?;
                den_acc = den_acc.lcm(&d0);
                x[i][k] = Rational::new(n0, d0);
                continue;
            };
            x[i][k] = Rational::new(num, den_acc.clone());
        }
    }
    Some(x)
}

/// Rational reconstruction: the unique `n/d` with `|n|, d <= bound` and
/// `n = v d (mod m)`, by the extended Euclid run on `(m, v)`.
fn rat_recon(v: &BigInt, m: &BigInt, bound: &BigInt) -> Option<(BigInt, BigInt)> {
    let (mut r0, mut r1) = (m.clone(), v.clone());
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > *bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if t1.is_zero() || t1.abs() > *bound {
        return None;
    }
    if t1.is_negative() {
        Some((-r1, -t1))
    } else {
        Some((r1, t1))
    }
}

/// Clear denominators and divide by the content: the returned row is a
/// primitive integer multiple of the input (or zero).
fn primitive_int_row(row: &[Rational]) -> Vec<BigInt> {
    let (ints, _) = scaled_int_row(row);
    let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if g.is_zero() || g.is_one() {
        return ints;
    }
    ints.into_iter().map(|v| v / &g).collect()
}

/// Clear denominators only; returns the integer row and the factor it was
/// multiplied by (`lcm` of denominators), so callers can undo the scaling.
fn scaled_int_row(row: &[Rational]) -> (Vec<BigInt>, Rational) {
    let mut l = BigInt::one();
    for v in row {
        l = l.lcm(v.denom());
    }
    let l = l.abs();
    let ints = row.iter().map(|v| v.numer() * (&l / v.denom())).collect();
    (ints, Rational::from_integer(l))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    /// Naive rational Gauss-Jordan, used only as an oracle: RREF is unique,
    /// so the fraction-free production path must agree with it exactly.
    fn rref_naive(m: &Matrix) -> (Matrix, Vec<usize>) {
        let mut a: Vec<Vec<Rational>> = (0..m.rows()).map(|r| m.row(r).to_vec()).collect();
        let (rows, cols) = (m.rows(), m.cols());
        let mut pivots = Vec::new();
        for col in 0..cols {
            let pr = pivots.len();
            if pr == rows {
                break;
            }
            let Some(found) = (pr..rows).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(pr, found);
            let p = a[pr][col].clone();
            for v in a[pr].iter_mut() {
                *v /= p.clone();
            }
            for i in 0..rows {
                if i == pr || a[i][col].is_zero() {
                    continue;
                }
                let f = a[i][col].clone();
                let prow = a[pr].clone();
                for (dst, pv) in a[i].iter_mut().zip(&prow) {
                    let s = &f * pv;
                    *dst -= s;
                }
            }
            pivots.push(col);
        }
        (Matrix::from_rows(a).unwrap(), pivots)
    }

    fn assert_matches_naive(m: &Matrix) {
        let fast = m.rref();
        let (slow, pivots) = rref_naive(m);
        assert_eq!(fast.matrix, slow);
        assert_eq!(fast.pivots, pivots);
    }

    #[test]
    fn rref_of_worked_2x4() {
        let m = Matrix::from_i64_rows(&[&[1, 0, 1, 1], &[0, 1, 1, 2]]);
        let rref = m.rref();
        assert_eq!(rref.rank, 2);
        assert_eq!(rref.pivots, vec![0, 1]);
        assert_eq!(rref.matrix, m);
    }

    #[test]
    fn nullspace_of_worked_2x4() {
        // Hand elimination: free columns 2 and 3 give (-1,-1,1,0), (-1,-2,0,1).
        let m = Matrix::from_i64_rows(&[&[1, 0, 1, 1], &[0, 1, 1, 2]]);
        let ns = m.nullspace_basis();
        let expect = Matrix::from_i64_rows(&[&[-1, -1, 1, 0], &[-1, -2, 0, 1]]);
        assert_eq!(ns, expect);
        let prod = m.mul(&ns.transpose()).unwrap();
        assert!(prod.is_zero());
    }

    #[test]
    fn nullspace_of_full_rank_square_is_empty() {
        let m = Matrix::from_i64_rows(&[&[2, 1], &[1, 1]]);
        let ns = m.nullspace_basis();
        assert_eq!(ns.rows(), 0);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn rref_is_idempotent_and_matches_naive_on_awkward_cases() {
        let cases: Vec<Matrix> = vec![
            Matrix::from_i64_rows(&[&[0, 0, 0], &[0, 0, 0]]),
            Matrix::from_i64_rows(&[&[0, 2, 4], &[0, 1, 2], &[1, 1, 1]]),
            Matrix::from_i64_rows(&[&[1, 2], &[2, 4], &[3, 6]]),
            Matrix::from_i64_rows(&[&[5]]),
            Matrix::from_i64_rows(&[&[0, 0, 3, 1], &[0, 0, 0, 2]]),
            Matrix::from_rows(vec![
                vec![Rational::new(1.into(), 2.into()), rat(3)],
                vec![Rational::new(2.into(), 3.into()), rat(4)],
            ])
            .unwrap(),
        ];
        for m in cases {
            assert_matches_naive(&m);
            let once = m.rref().matrix;
            let twice = once.rref().matrix;
            assert_eq!(once, twice);
        }
    }

    #[test]
    fn determinant_small_cases() {
        assert_eq!(
            Matrix::from_i64_rows(&[&[1, -1], &[1, -2]])
                .determinant()
                .unwrap(),
            rat(-1)
        );
        assert_eq!(
            Matrix::from_i64_rows(&[&[2, 0], &[0, 3]])
                .determinant()
                .unwrap(),
            rat(6)
        );
        assert_eq!(
            Matrix::from_i64_rows(&[&[1, 2], &[2, 4]])
                .determinant()
                .unwrap(),
            rat(0)
        );
        // 3x3 with a swap forced by the zero leading entry; triple product
        // gives (0,1,2) . ((1,0,3) x (4,5,6)) = (0,1,2) . (-15,6,5) = 16.
        assert_eq!(
            Matrix::from_i64_rows(&[&[0, 1, 2], &[1, 0, 3], &[4, 5, 6]])
                .determinant()
                .unwrap(),
            rat(16)
        );
    }

    #[test]
    fn determinant_with_rational_entries() {
        let m = Matrix::from_rows(vec![
            vec![Rational::new(1.into(), 2.into()), rat(1)],
            vec![rat(1), Rational::new(1.into(), 3.into())],
        ])
        .unwrap();
        // 1/6 - 1 = -5/6
        assert_eq!(
            m.determinant().unwrap(),
            Rational::new((-5).into(), 6.into())
        );
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_i64_rows(&[&[1, 2, 0], &[0, 1, 4], &[1, 0, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(3));
        assert_eq!(inv.mul(&m).unwrap(), Matrix::identity(3));
        let s = Matrix::from_i64_rows(&[&[1, 2], &[2, 4]]);
        assert!(matches!(s.inverse(), Err(Error::Singular)));
    }

    #[test]
    fn lifting_agrees_with_elimination_on_large_matrices() {
        // 60 x 70 clears the size gate, so the public method takes the
        // lifting path; the fraction-free elimination is the oracle. Every
        // seventh column is zero to force free columns among the pivots.
        let mut data = Vec::with_capacity(60 * 70);
        for r in 0..60i64 {
            for c in 0..70i64 {
                let v = if c % 7 == 0 {
                    0
                } else {
                    ((r + 1) * (c * c + 3) + r * r * c) % 23 - 11
                };
                data.push(rat(v));
            }
        }
        let m = Matrix::new(60, 70, data).unwrap();
        let lifted = m.nullspace_by_lifting().expect("lifting path certifies");
        let oracle = nullspace_from_rref(&m.rref(), m.cols());
        assert_eq!(lifted, oracle);
        assert_eq!(m.nullspace_basis(), oracle);
        assert!(m.mul(&lifted.transpose()).unwrap().is_zero());
        assert_eq!(lifted.rows(), m.cols() - m.rank());
    }

    #[test]
    fn nullspace_vectors_annihilate_random_matrices() {
        // Deterministic pseudo-random integer matrices, including wide,
        // tall and rank-deficient shapes.
        let mut state = 0x2545f4914f6cdd1du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % 19) as i64 - 9
        };
        for rows in 1..6usize {
            for cols in 1..6usize {
                let m = Matrix::from_rows(
                    (0..rows)
                        .map(|_| (0..cols).map(|_| rat(next())).collect())
                        .collect(),
                )
                .unwrap();
                assert_matches_naive(&m);
                let ns = m.nullspace_basis();
                assert_eq!(ns.rows(), cols - m.rank());
                if ns.rows() > 0 {
                    assert!(m.mul(&ns.transpose()).unwrap().is_zero());
                    assert_eq!(ns.rank(), ns.rows());
                }
            }
        }
    }
}
