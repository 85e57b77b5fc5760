//! Exact linear algebra over `Z`: Smith normal form, cokernels,
//! kernels, determinants.
//!
//! A matrix is read as a homomorphism `Z^cols -> Z^rows`; each column
//! is the image of a domain basis vector. The cokernel of a matrix is
//! therefore `Z^rows` modulo the span of its columns.
//!
//! Entries are arbitrary-precision. Intermediate values in a Smith
//! reduction can outgrow any fixed-width integer even for small dense
//! inputs, so no fixed-width fast path is offered.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Index;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Dense matrix of arbitrary-precision integers, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    /// All-zero matrix. Either dimension may be zero.
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        IntMatrix {
            rows,
            cols,
            entries,
        }
    }

    /// Build from machine-integer rows. Rows must all have the same
    /// length; an empty slice gives the 0x0 matrix.
    ///
    /// # Panics
    ///
    /// Panics on ragged input.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(
            rows.iter().all(|row| row.len() == c),
            "ragged rows in matrix literal"
        );
        IntMatrix::from_fn(r, c, |i, j| BigInt::from(rows[i][j]))
    }

    /// Assemble a matrix whose columns are the given vectors, each of
    /// length `rows`. No columns gives a `rows x 0` matrix.
    ///
    /// # Panics
    ///
    /// Panics if some column has the wrong length.
    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> Self {
        assert!(
            columns.iter().all(|c| c.len() == rows),
            "column length does not match row count"
        );
        IntMatrix::from_fn(rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> IntMatrix {
        IntMatrix::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    /// Matrix product `self * other`.
    ///
    /// # Panics
    ///
    /// Panics if the inner dimensions disagree.
    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        IntMatrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = BigInt::zero();
            for k in 0..self.cols {
                acc += self.at(i, k) * other.at(k, j);
            }
            acc
        })
    }

    /// Matrix-vector product.
    ///
    /// # Panics
    ///
    /// Panics if `v.len() != self.cols()`.
    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                self.entries[i * self.cols..(i + 1) * self.cols]
                    .iter()
                    .zip(v)
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    /// Rank over `Q` (equivalently, the number of nonzero invariant
    /// factors).
    pub fn rank(&self) -> usize {
        self.snf().rank()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[i] -= q * row[j]`
    fn row_sub_mul(&mut self, i: usize, j: usize, q: &BigInt) {
        for k in 0..self.cols {
            let delta = q * self.at(j, k);
            self.entries[i * self.cols + k] -= delta;
        }
    }

    /// `col[i] -= q * col[j]`
    fn col_sub_mul(&mut self, i: usize, j: usize, q: &BigInt) {
        for k in 0..self.rows {
            let delta = q * self.at(k, j);
            self.entries[k * self.cols + i] -= delta;
        }
    }

    /// `row[i] += row[j]`
    fn row_add(&mut self, i: usize, j: usize) {
        for k in 0..self.cols {
            let v = self.at(j, k).clone();
            self.entries[i * self.cols + k] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for k in 0..self.cols {
            let v = -self.at(i, k).clone();
            self.set(i, k, v);
        }
    }

    /// Position of a nonzero entry of minimal absolute value in the
    /// trailing submatrix starting at `(t, t)`.
    fn min_abs_from(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                let e = self.at(i, j);
                if e.is_zero() {
                    continue;
                }
                match best {
                    Some((bi, bj)) if self.at(bi, bj).abs() <= e.abs() => {}
                    _ => best = Some((i, j)),
                }
            }
        }
        best
    }

    /// Smith normal form `U * self * V = D` with `U`, `V` unimodular
    /// and `D` diagonal, nonnegative, each diagonal entry dividing the
    /// next.
    ///
    /// Reduction pivots on an entry of minimal absolute value in the
    /// remaining submatrix, clears its row and column with exact
    /// division steps, and repairs any divisibility violation by
    /// folding the offending row into the pivot row; the pivot shrinks
    /// strictly on every retry, so the loop terminates.
    pub fn snf(&self) -> Snf {
        let mut d = self.clone();
        let mut u = IntMatrix::identity(self.rows);
        let mut v = IntMatrix::identity(self.cols);
        let steps = self.rows.min(self.cols);
        let mut t = 0;
        while t < steps {
            let Some((pi, pj)) = d.min_abs_from(t) else {
                break; // trailing submatrix is zero
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            // Clear column t below the pivot. A nonzero remainder is
            // strictly smaller than the pivot and becomes the next one.
            let mut column_clear = true;
            for i in t + 1..d.rows {
                if d.at(i, t).is_zero() {
                    continue;
                }
                let q = d.at(i, t) / d.at(t, t);
                if !q.is_zero() {
                    d.row_sub_mul(i, t, &q);
                    u.row_sub_mul(i, t, &q);
                }
                if !d.at(i, t).is_zero() {
                    column_clear = false;
                }
            }
            if !column_clear {
                continue;
            }

            let mut row_clear = true;
            for j in t + 1..d.cols {
                if d.at(t, j).is_zero() {
                    continue;
                }
                let q = d.at(t, j) / d.at(t, t);
                if !q.is_zero() {
                    d.col_sub_mul(j, t, &q);
                    v.col_sub_mul(j, t, &q);
                }
                if !d.at(t, j).is_zero() {
                    row_clear = false;
                }
            }
            if !row_clear {
                continue;
            }

            // Pivot must divide every remaining entry; if not, pulling
            // the offending row into row t forces a smaller pivot on
            // the next pass.
            let offender = (t + 1..d.rows)
                .find(|&i| (t + 1..d.cols).any(|j| !(d.at(i, j) % d.at(t, t)).is_zero()));
            if let Some(i) = offender {
                d.row_add(t, i);
                u.row_add(t, i);
                continue;
            }
            t += 1;
        }
        for k in 0..steps {
            if d.at(k, k).is_negative() {
                d.negate_row(k);
                u.negate_row(k);
            }
        }
        Snf { u, d, v }
    }

    /// Cokernel `Z^rows / (column span)` in canonical form.
    pub fn cokernel(&self) -> AbelianGroup {
        let snf = self.snf();
        let factors = snf.invariant_factors();
        let free_rank = self.rows - factors.len();
        let torsion = factors.into_iter().filter(|d| !d.is_one()).collect();
        AbelianGroup::new(free_rank, torsion)
    }

    /// Absolute value of the determinant, as the product of the
    /// invariant factors. Errors on non-square input.
    pub fn det_abs(&self) -> Result<BigInt, Error> {
        if !self.is_square() {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let snf = self.snf();
        let mut acc = BigInt::one();
        for k in 0..self.rows {
            if snf.d.at(k, k).is_zero() {
                return Ok(BigInt::zero());
            }
            acc *= snf.d.at(k, k);
        }
        Ok(acc)
    }

    /// Basis of the kernel sublattice, one column per basis vector.
    ///
    /// The basis comes from the columns of the Smith change-of-basis
    /// matrix `V` past the rank, so it is saturated: every integer
    /// kernel vector is an integer combination of these columns.
    pub fn kernel_basis(&self) -> IntMatrix {
        let snf = self.snf();
        let r = snf.rank();
        IntMatrix::from_fn(self.cols, self.cols - r, |i, j| snf.v.at(i, r + j).clone())
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        self.at(i, j)
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{} ", self.at(i, j))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Smith decomposition `u * a * v = d`.
#[derive(Clone, Debug)]
pub struct Snf {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl Snf {
    /// The nonzero diagonal entries of `d`, in divisibility order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let mut out = Vec::new();
        for k in 0..self.d.rows().min(self.d.cols()) {
            if self.d.at(k, k).is_zero() {
                break; // zeros trail the chain
            }
            out.push(self.d.at(k, k).clone());
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

/// Finitely generated abelian group in invariant-factor form:
/// `Z^free_rank + Z/d1 + ... + Z/dt` with `2 <= d1 | d2 | ... | dt`.
///
/// The representation is canonical, so derived equality coincides with
/// isomorphism.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AbelianGroup {
    free_rank: usize,
    torsion: Vec<BigInt>,
}

impl AbelianGroup {
    /// Normalizes the given torsion coefficients: signs are dropped,
    /// units are discarded, and the list is rewritten into a
    /// divisibility chain by pairwise gcd/lcm exchanges (which do not
    /// change the isomorphism class).
    ///
    /// # Panics
    ///
    /// Panics if a torsion coefficient is zero; a free factor must be
    /// accounted in `free_rank` instead.
    pub fn new(free_rank: usize, torsion: Vec<BigInt>) -> Self {
        let mut t: Vec<BigInt> = torsion.into_iter().map(|d| d.abs()).collect();
        assert!(
            t.iter().all(|d| !d.is_zero()),
            "zero torsion coefficient; use free_rank for free factors"
        );
        for i in 0..t.len() {
            for j in i + 1..t.len() {
                if (&t[j] % &t[i]).is_zero() {
                    continue;
                }
                let g = t[i].gcd(&t[j]);
                let l = t[i].lcm(&t[j]);
                t[i] = g;
                t[j] = l;
            }
        }
        t.retain(|d| !d.is_one());
        AbelianGroup {
            free_rank,
            torsion: t,
        }
    }

    pub fn trivial() -> Self {
        AbelianGroup {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn cyclic(order: u64) -> Self {
        AbelianGroup::new(0, vec![BigInt::from(order)])
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    /// Invariant factors of the torsion part, each at least 2, each
    /// dividing the next.
    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Number of elements, or `None` for an infinite group.
    pub fn order(&self) -> Option<BigInt> {
        if self.free_rank > 0 {
            return None;
        }
        let mut acc = BigInt::one();
        for d in &self.torsion {
            acc *= d;
        }
        Some(acc)
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut first = true;
        if self.free_rank > 0 {
            write!(f, "Z^{}", self.free_rank)?;
            first = false;
        }
        for d in &self.torsion {
            if !first {
                write!(f, " x ")?;
            }
            write!(f, "Z/{d}")?;
            first = false;
        }
        Ok(())
    }
}
