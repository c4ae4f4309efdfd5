//! The blow-up lattice and its reflection group.
//!
//! For m points in P^n the relevant lattice is Z^{m+1} with basis
//! e_0, e_1, ..., e_m (hyperplane class and exceptional classes), carrying
//! the diagonal pairing <e_0,e_0> = n-1, <e_i,e_i> = -1.  The group W_{n,m}
//! acts by the reflection s_0 in the root e_0 - e_1 - ... - e_{n+1} together
//! with the transpositions s_i = (e_i, e_{i+1}).  Elements are stored as
//! explicit integer matrices: every identity we care about is a pointwise
//! matrix identity, and the word problem is a non-goal.
//!
//! For m = n+3 the even subsets J of {1, ..., n+3} index an elementary
//! abelian subgroup of order 2^{n+2}, generated by conjugates of
//! s_0 composed with the transposition of the last two indices; `w_element`
//! builds its members, `d_class` the divisor classes they permute.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// An element of the blow-up lattice, stored as plain basis coefficients:
/// the class is sum(coeffs[i] * e_i).  The anticanonical class of P^2 blown
/// up in 9 points is therefore (3, -1, ..., -1), not the multiplicity
/// shorthand (3; 1, ..., 1).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DivisorClass {
    pub n: usize,
    pub m: usize,
    coeffs: Vec<BigInt>,
}

impl DivisorClass {
    pub fn new(n: usize, m: usize, coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.len() != m + 1 {
            return Err(Error::Shape(format!(
                "divisor class needs {} coefficients, got {}",
                m + 1,
                coeffs.len()
            )));
        }
        Ok(Self { n, m, coeffs })
    }

    pub fn from_i64(n: usize, m: usize, coeffs: &[i64]) -> Result<Self> {
        Self::new(n, m, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The basis class e_i (i = 0 is the hyperplane class).
    pub fn basis(n: usize, m: usize, i: usize) -> Result<Self> {
        if i > m {
            return Err(Error::Shape(format!("basis index {i} exceeds m = {m}")));
        }
        let mut coeffs = vec![BigInt::zero(); m + 1];
        coeffs[i] = BigInt::one();
        Ok(Self { n, m, coeffs })
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n || self.m != other.m {
            return Err(Error::Shape("divisor class lattice mismatch".into()));
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self {
            n: self.n,
            m: self.m,
            coeffs,
        })
    }
}

/// The invariant bilinear form diag(n-1, -1, ..., -1).  The root
/// e_0 - e_1 - ... - e_{n+1} has self-pairing -2 under it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairingForm {
    pub n: usize,
    pub m: usize,
}

impl PairingForm {
    pub fn eval(&self, a: &DivisorClass, b: &DivisorClass) -> Result<BigInt> {
        if a.m != self.m || b.m != self.m {
            return Err(Error::Shape("pairing lattice mismatch".into()));
        }
        let nn = BigInt::from(self.n as i64 - 1);
        let mut acc = nn * &a.coeffs[0] * &b.coeffs[0];
        for i in 1..=self.m {
            acc -= &a.coeffs[i] * &b.coeffs[i];
        }
        Ok(acc)
    }
}

/// Linear functional recording intersection with the proper transform of an
/// elliptic normal curve through all m points: e_0 counts n+1, each e_i one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CurveFunctional {
    pub n: usize,
    pub m: usize,
}

impl CurveFunctional {
    pub fn eval(&self, c: &DivisorClass) -> Result<BigInt> {
        if c.m != self.m {
            return Err(Error::Shape("functional lattice mismatch".into()));
        }
        let mut acc = BigInt::from(self.n as i64 + 1) * &c.coeffs[0];
        for i in 1..=self.m {
            acc += &c.coeffs[i];
        }
        Ok(acc)
    }
}

/// Intersection of a class with the elliptic normal curve class, in the
/// class's own lattice.
pub fn curve_pairing(c: &DivisorClass) -> BigInt {
    CurveFunctional { n: c.n, m: c.m }
        .eval(c)
        .expect("functional built from the class's own lattice")
}

/// A lattice automorphism, stored as an (m+1)x(m+1) integer matrix whose
/// column j is the image of e_j.  Construction checks that the matrix
/// preserves the pairing and fixes the anticanonical class; both fail only
/// on matrices that are not in the group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    pub n: usize,
    pub m: usize,
    matrix: Vec<BigInt>,
}

impl WeylElement {
    pub fn from_matrix(n: usize, m: usize, matrix: Vec<BigInt>) -> Result<Self> {
        let dim = m + 1;
        if matrix.len() != dim * dim {
            return Err(Error::Shape(format!(
                "group element needs a {dim}x{dim} matrix"
            )));
        }
        let w = Self { n, m, matrix };
        let form = PairingForm { n, m };
        let basis: Vec<DivisorClass> = (0..dim)
            .map(|i| DivisorClass::basis(n, m, i).unwrap())
            .collect();
        let images: Vec<DivisorClass> = basis.iter().map(|b| w.apply_unchecked(b)).collect();
        for i in 0..dim {
            for j in i..dim {
                if form.eval(&images[i], &images[j])? != form.eval(&basis[i], &basis[j])? {
                    return Err(Error::Shape(format!(
                        "matrix does not preserve the pairing at basis pair ({i}, {j})"
                    )));
                }
            }
        }
        let k = anticanonical(n, m);
        if w.apply_unchecked(&k) != k {
            return Err(Error::Shape("matrix moves the anticanonical class".into()));
        }
        Ok(w)
    }

    pub fn identity(n: usize, m: usize) -> Self {
        let dim = m + 1;
        let mut matrix = vec![BigInt::zero(); dim * dim];
        for i in 0..dim {
            matrix[i * dim + i] = BigInt::one();
        }
        Self { n, m, matrix }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n, self.m)
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.matrix[i * (self.m + 1) + j]
    }

    /// Row-major entries, for printing and cross-module comparison.
    pub fn entries(&self) -> &[BigInt] {
        &self.matrix
    }

    fn apply_unchecked(&self, c: &DivisorClass) -> DivisorClass {
        let dim = self.m + 1;
        let mut coeffs = vec![BigInt::zero(); dim];
        for (i, out) in coeffs.iter_mut().enumerate() {
            for j in 0..dim {
                *out += &self.matrix[i * dim + j] * &c.coeffs[j];
            }
        }
        DivisorClass {
            n: self.n,
            m: self.m,
            coeffs,
        }
    }

    pub fn apply(&self, c: &DivisorClass) -> Result<DivisorClass> {
        if c.n != self.n || c.m != self.m {
            return Err(Error::Shape(
                "element and class live in different lattices".into(),
            ));
        }
        Ok(self.apply_unchecked(c))
    }

    /// self compose other: other acts first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n != other.n || self.m != other.m {
            return Err(Error::Shape("composition across different lattices".into()));
        }
        let dim = self.m + 1;
        let mut matrix = vec![BigInt::zero(); dim * dim];
        for i in 0..dim {
            for k in 0..dim {
                let a = &self.matrix[i * dim + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..dim {
                    let b = &other.matrix[k * dim + j];
                    if !b.is_zero() {
                        matrix[i * dim + j] += a * b;
                    }
                }
            }
        }
        Ok(Self {
            n: self.n,
            m: self.m,
            matrix,
        })
    }
}

/// Coxeter generator s_i.  s_0 is the reflection in e_0 - e_1 - ... - e_{n+1};
/// s_i for i >= 1 swaps e_i and e_{i+1}.
pub fn generator(i: usize, n: usize, m: usize) -> Result<WeylElement> {
    if m < n + 2 {
        return Err(Error::Shape(format!(
            "lattice needs m >= n + 2, got n = {n}, m = {m}"
        )));
    }
    if i >= m {
        return Err(Error::LetterOutOfRange { letter: i, m });
    }
    let dim = m + 1;
    let mut matrix = vec![BigInt::zero(); dim * dim];
    let set = |mat: &mut Vec<BigInt>, r: usize, c: usize, v: i64| {
        mat[r * dim + c] = BigInt::from(v);
    };
    if i == 0 {
        // Column 0: n e_0 - (n-1)(e_1 + ... + e_{n+1}).
        set(&mut matrix, 0, 0, n as i64);
        for r in 1..=n + 1 {
            set(&mut matrix, r, 0, -(n as i64 - 1));
        }
        // Column j <= n+1: e_0 - sum of e_k, k <= n+1, k != j.
        for j in 1..=n + 1 {
            set(&mut matrix, 0, j, 1);
            for r in 1..=n + 1 {
                if r != j {
                    set(&mut matrix, r, j, -1);
                }
            }
        }
        for j in n + 2..dim {
            set(&mut matrix, j, j, 1);
        }
    } else {
        for j in 0..dim {
            set(&mut matrix, j, j, 1);
        }
        set(&mut matrix, i, i, 0);
        set(&mut matrix, i + 1, i + 1, 0);
        set(&mut matrix, i, i + 1, 1);
        set(&mut matrix, i + 1, i, 1);
    }
    WeylElement::from_matrix(n, m, matrix)
}

/// The anticanonical class (n+1) e_0 - (n-1) sum e_i, fixed by the whole group.
pub fn anticanonical(n: usize, m: usize) -> DivisorClass {
    let mut coeffs = vec![BigInt::from(-(n as i64 - 1)); m + 1];
    coeffs[0] = BigInt::from(n as i64 + 1);
    DivisorClass { n, m, coeffs }
}

fn check_subset(set: &[usize], n: usize, want_even: bool) -> Result<Vec<usize>> {
    let m = n + 3;
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != set.len() {
        return Err(Error::BadSubset(set.to_vec(), "repeated index".into()));
    }
    if sorted.iter().any(|&i| i == 0 || i > m) {
        return Err(Error::BadSubset(
            set.to_vec(),
            format!("indices must lie in 1..={m}"),
        ));
    }
    if sorted.len().is_multiple_of(2) != want_even {
        let need = if want_even { "even" } else { "odd" };
        return Err(Error::BadSubset(
            set.to_vec(),
            format!("cardinality must be {need}"),
        ));
    }
    Ok(sorted)
}

/// The class k e_0 - (k-1) sum_{i in I} e_i - k sum_{i not in I} e_i for an
/// odd subset I of {1, ..., n+3} with |I| = 2k+1.
pub fn d_class(i_set: &[usize], n: usize) -> Result<DivisorClass> {
    let sorted = check_subset(i_set, n, false)?;
    let m = n + 3;
    let k = (sorted.len() as i64 - 1) / 2;
    let mut coeffs = vec![BigInt::from(-k); m + 1];
    coeffs[0] = BigInt::from(k);
    for &i in &sorted {
        coeffs[i] = BigInt::from(-(k - 1));
    }
    DivisorClass::new(n, m, coeffs)
}

/// Closed form for the image of e_0 under w_element(J): with |J| = 2k,
/// (k(n-1)+1) e_0 - (k-1)(n-1) sum_{i in J} e_i - k(n-1) sum_{i not in J} e_i.
pub fn w_hyperplane_image(j_set: &[usize], n: usize) -> Result<DivisorClass> {
    let sorted = check_subset(j_set, n, true)?;
    let m = n + 3;
    let k = sorted.len() as i64 / 2;
    let nn = n as i64 - 1;
    let mut coeffs = vec![BigInt::from(-k * nn); m + 1];
    coeffs[0] = BigInt::from(k * nn + 1);
    for &i in &sorted {
        coeffs[i] = BigInt::from(-(k - 1) * nn);
    }
    DivisorClass::new(n, m, coeffs)
}

/// Order-preserving relabeling sending n+2 to a and n+3 to b (as a
/// permutation of {1, ..., n+3} in one-line notation, 1-based).
fn pair_relabeling(a: usize, b: usize, n: usize) -> Vec<usize> {
    let m = n + 3;
    let mut rest: Vec<usize> = (1..=m).filter(|&x| x != a && x != b).collect();
    rest.push(a);
    rest.push(b);
    rest
}

fn permutation_matrix(sigma: &[usize], n: usize) -> WeylElement {
    let m = sigma.len();
    let dim = m + 1;
    let mut matrix = vec![BigInt::zero(); dim * dim];
    matrix[0] = BigInt::one();
    for (i, &si) in sigma.iter().enumerate() {
        matrix[si * dim + (i + 1)] = BigInt::one();
    }
    WeylElement { n, m, matrix }
}

fn invert_permutation(sigma: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; sigma.len()];
    for (i, &si) in sigma.iter().enumerate() {
        inv[si - 1] = i + 1;
    }
    inv
}

/// Generator letters multiplying to the permutation (first letter acts
/// first): bubble-sorting the one-line notation with adjacent swaps yields
/// sigma = s_{t_r} compose ... compose s_{t_1} for the swaps t_1, ..., t_r
/// in the order performed.
pub fn permutation_word(sigma: &[usize]) -> Vec<usize> {
    let mut line = sigma.to_vec();
    let mut swaps = Vec::new();
    loop {
        let mut done = true;
        for j in 0..line.len().saturating_sub(1) {
            if line[j] > line[j + 1] {
                line.swap(j, j + 1);
                swaps.push(j + 1);
                done = false;
            }
        }
        if done {
            break;
        }
    }
    swaps
}

fn pair_element(a: usize, b: usize, n: usize) -> Result<WeylElement> {
    let m = n + 3;
    // s_{n+2} first, then s_0.
    let base = generator(0, n, m)?.compose(&generator(n + 2, n, m)?)?;
    let sigma = pair_relabeling(a, b, n);
    let p = permutation_matrix(&sigma, n);
    let p_inv = permutation_matrix(&invert_permutation(&sigma), n);
    p.compose(&base)?.compose(&p_inv)
}

/// The element w_J for an even subset J of {1, ..., n+3}: the product of the
/// pair elements over consecutive pairs of sorted J.  The factors commute,
/// so the pairing does not matter (tested, not assumed).
pub fn w_element(j_set: &[usize], n: usize) -> Result<WeylElement> {
    let sorted = check_subset(j_set, n, true)?;
    let m = n + 3;
    let mut w = WeylElement::identity(n, m);
    for pair in sorted.chunks(2) {
        w = w.compose(&pair_element(pair[0], pair[1], n)?)?;
    }
    Ok(w)
}

/// Generator word for w_J under the first-letter-acts-first convention, for
/// feeding the same element to the configuration-space action.
pub fn w_word(j_set: &[usize], n: usize) -> Result<Vec<usize>> {
    let sorted = check_subset(j_set, n, true)?;
    let mut word = Vec::new();
    for pair in sorted.chunks(2) {
        let sigma = pair_relabeling(pair[0], pair[1], n);
        word.extend(permutation_word(&invert_permutation(&sigma)));
        word.push(n + 2);
        word.push(0);
        word.extend(permutation_word(&sigma));
    }
    Ok(word)
}

/// Parse a generator word like "s0 s3 s0" (the s prefix is optional).
pub fn parse_word(text: &str) -> Result<Vec<usize>> {
    text.split_whitespace()
        .map(|tok| {
            let digits = tok.strip_prefix(['s', 'S']).unwrap_or(tok);
            digits
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad generator letter {tok:?}")))
        })
        .collect()
}

/// All even subsets of {1, ..., n+3}, the index set of the 2^{n+2} group.
pub fn even_subsets(n: usize) -> Vec<Vec<usize>> {
    let m = n + 3;
    let mut out = Vec::new();
    for mask in 0u32..(1 << m) {
        if mask.count_ones() % 2 == 0 {
            out.push((1..=m).filter(|&i| mask >> (i - 1) & 1 == 1).collect());
        }
    }
    out
}

/// All odd subsets of {1, ..., n+3}.
pub fn odd_subsets(n: usize) -> Vec<Vec<usize>> {
    let m = n + 3;
    let mut out = Vec::new();
    for mask in 0u32..(1 << m) {
        if mask.count_ones() % 2 == 1 {
            out.push((1..=m).filter(|&i| mask >> (i - 1) & 1 == 1).collect());
        }
    }
    out
}

pub fn symmetric_difference(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = a
        .iter()
        .filter(|x| !b.contains(x))
        .chain(b.iter().filter(|x| !a.contains(x)))
        .copied()
        .collect();
    out.sort_unstable();
    out
}
