//! Exact integer and rational linear algebra.
//!
//! Everything here works over arbitrary-precision integers. Entries in
//! Smith reductions grow quickly even for small matrices, so machine words
//! are never used for matrix entries.

mod linsolve;
mod smith;

use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use linsolve::{rank_rational, solve_rational, Solution};
pub use smith::{invariant_factors, smith_normal_form, SmithForm};

/// Exact rational number. Always normalized: positive denominator, reduced.
pub type Rational = BigRational;

/// Vector of exact rationals.
pub type RationalVec = Vec<Rational>;

/// Shorthand for the rational `num / den`.
///
/// Panics if `den` is zero.
pub fn rat(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for the integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("ZeroVector: primitivity is undefined for the zero vector")]
    ZeroVector,
    #[error("shape mismatch: {0}")]
    Shape(String),
}

/// Integer vector of fixed length.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntVec(Vec<BigInt>);

impl IntVec {
    pub fn new(entries: Vec<BigInt>) -> Self {
        IntVec(entries)
    }

    pub fn from_i64(entries: &[i64]) -> Self {
        IntVec(entries.iter().map(|&e| BigInt::from(e)).collect())
    }

    pub fn zeros(len: usize) -> Self {
        IntVec(vec![BigInt::zero(); len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, BigInt> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Gcd of the absolute values of all entries (0 for the zero vector).
    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, e| g.gcd(e))
    }

    pub fn neg(&self) -> IntVec {
        IntVec(self.0.iter().map(|e| -e).collect())
    }

    pub fn add(&self, other: &IntVec) -> IntVec {
        debug_assert_eq!(self.len(), other.len());
        IntVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: &BigInt) -> IntVec {
        IntVec(self.0.iter().map(|e| e * k).collect())
    }

    pub fn dot(&self, other: &IntVec) -> BigInt {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    /// Pairing with a rational point.
    pub fn pair(&self, x: &[Rational]) -> Rational {
        debug_assert_eq!(self.len(), x.len());
        self.0
            .iter()
            .zip(x)
            .map(|(a, b)| b * a)
            .fold(Rational::zero(), |acc, t| acc + t)
    }

    pub fn to_rational(&self) -> RationalVec {
        self.0.iter().cloned().map(Rational::from_integer).collect()
    }

    /// Concatenation `(self, other)`.
    pub fn concat(&self, other: &IntVec) -> IntVec {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        IntVec(v)
    }

    /// Reduction mod 2 packed as a bit mask (bit `k` = parity of entry `k`).
    ///
    /// Panics for vectors longer than 64 entries.
    pub fn parity_mask(&self) -> u64 {
        assert!(self.len() <= 64, "parity mask needs at most 64 entries");
        self.0
            .iter()
            .enumerate()
            .filter(|(_, e)| e.is_odd())
            .fold(0u64, |m, (k, _)| m | (1u64 << k))
    }
}

impl Index<usize> for IntVec {
    type Output = BigInt;
    fn index(&self, i: usize) -> &BigInt {
        &self.0[i]
    }
}

impl fmt::Display for IntVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// True iff the gcd of the entries is 1.
pub fn is_primitive(v: &IntVec) -> Result<bool, LatticeError> {
    if v.is_zero() {
        return Err(LatticeError::ZeroVector);
    }
    Ok(v.content().is_one())
}

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Builds a matrix from rows; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: &[IntVec]) -> Result<Self, LatticeError> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(LatticeError::Shape(format!(
                    "row {i} has length {} but {cols} columns expected",
                    r.len()
                )));
            }
            data.extend(r.iter().cloned());
        }
        Ok(IntMat {
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Convenience constructor from small literals. Panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<IntVec> = rows.iter().map(|r| IntVec::from_i64(r)).collect();
        IntMat::from_rows(cols, &rows).expect("ragged matrix literal")
    }

    pub fn diag(entries: &[i64]) -> Self {
        let mut m = IntMat::zeros(entries.len(), entries.len());
        for (i, &e) in entries.iter().enumerate() {
            m.set(i, i, BigInt::from(e));
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> IntVec {
        IntVec(self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn column(&self, j: usize) -> IntVec {
        IntVec((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn row_vectors(&self) -> Vec<IntVec> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> IntMat {
        let mut t = IntMat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = IntMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * other.get(k, j);
                    let cell = &mut out.data[i * other.cols + j];
                    *cell += prod;
                }
            }
        }
        out
    }

    /// `self · v` for an integer vector.
    pub fn apply(&self, v: &IntVec) -> IntVec {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        IntVec((0..self.rows).map(|i| self.row(i).dot(v)).collect())
    }

    /// `self · v` for a rational vector.
    pub fn apply_rational(&self, v: &[Rational]) -> RationalVec {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows).map(|i| self.row(i).pair(v)).collect()
    }

    pub fn to_rational_rows(&self) -> Vec<RationalVec> {
        (0..self.rows).map(|i| self.row(i).to_rational()).collect()
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    /// Determinant by fraction-free (Bareiss) elimination. Square only.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m: Vec<Vec<BigInt>> = (0..n).map(|i| self.row(i).0).collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(p) => {
                        m.swap(k, p);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                    m[i][j] = v;
                }
            }
            prev = m[k][k].clone();
        }
        sign * &m[n - 1][n - 1]
    }

    pub fn is_unimodular(&self) -> bool {
        self.rows == self.cols && self.det().abs().is_one()
    }

    pub fn rank(&self) -> usize {
        rank_rational(&self.to_rational_rows())
    }
}

impl fmt::Display for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

/// True iff the map `Z^rows → Z^cols`, `y ↦ Mᵀ y`, is onto.
///
/// Equivalently every Smith invariant factor of `Mᵀ` equals 1 and there are
/// `cols` of them.
pub fn is_surjective_onto_lattice(m: &IntMat) -> bool {
    let t = m.transpose();
    let factors = invariant_factors(&t);
    factors.len() == m.cols() && factors.iter().all(|f| f.is_one())
}

/// Integral basis of the kernel of `m` (as a map `Z^cols → Z^rows`).
///
/// The returned vectors generate `ker(m) ∩ Z^cols` as a lattice.
pub fn integral_kernel(m: &IntMat) -> Vec<IntVec> {
    let snf = smith_normal_form(m);
    let r = invariant_factors(m).len();
    (r..m.cols()).map(|j| snf.v.column(j)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitivity() {
        assert!(is_primitive(&IntVec::from_i64(&[1, 0])).unwrap());
        assert!(!is_primitive(&IntVec::from_i64(&[2, 4])).unwrap());
        assert!(is_primitive(&IntVec::from_i64(&[-1, -1])).unwrap());
        assert_eq!(
            is_primitive(&IntVec::from_i64(&[0, 0])),
            Err(LatticeError::ZeroVector)
        );
    }

    #[test]
    fn surjectivity_examples() {
        let m = IntMat::from_i64(&[&[1, 0], &[0, 1], &[1, 1]]);
        assert!(is_surjective_onto_lattice(&m));
        assert!(!is_surjective_onto_lattice(&IntMat::diag(&[2, 1])));
        assert!(is_surjective_onto_lattice(&IntMat::identity(4)));
        // rank deficient
        let m = IntMat::from_i64(&[&[1, 1], &[2, 2], &[3, 3]]);
        assert!(!is_surjective_onto_lattice(&m));
    }

    #[test]
    fn determinant() {
        assert_eq!(IntMat::from_i64(&[&[1, 2], &[3, 4]]).det(), BigInt::from(-2));
        assert_eq!(
            IntMat::from_i64(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 5]]).det(),
            BigInt::from(-5)
        );
        assert_eq!(IntMat::from_i64(&[&[1, 2], &[2, 4]]).det(), BigInt::zero());
    }

    #[test]
    fn kernel_of_hexagon_slice_transpose() {
        let a = IntMat::from_i64(&[&[1, 0], &[0, 1], &[1, 1]]);
        let k = integral_kernel(&a.transpose());
        assert_eq!(k.len(), 1);
        let v = &k[0];
        assert!(v == &IntVec::from_i64(&[1, 1, -1]) || v == &IntVec::from_i64(&[-1, -1, 1]));
    }

    #[test]
    fn parity_mask_packs_low_bits_first() {
        assert_eq!(IntVec::from_i64(&[-1, -1, 0, 0]).parity_mask(), 0b0011);
        assert_eq!(IntVec::from_i64(&[2, -3, 5]).parity_mask(), 0b110);
    }
}
