//! Shared helpers for the integration suites: reference determinant
//! and invariant-factor computations that deliberately avoid the
//! Smith-reduction code path they are used to check, plus random
//! lattice data.

#![allow(dead_code)]

use lcq_core::lattice::IntMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;

/// Fraction-free Gaussian elimination (Bareiss). Exact over `Z`,
/// cubic, no Smith reduction involved.
pub fn det_bareiss(a: &IntMatrix) -> BigInt {
    assert!(a.is_square(), "determinant of a non-square matrix");
    let n = a.rows();
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigInt>> = (0..n).map(|i| a.column(i)).collect();
    // columns vs rows is irrelevant: det is transpose-invariant
    let mut sign = 1i64;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev; // exact by Sylvester's identity
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Cofactor expansion along the first row. Exponential; only for tiny
/// matrices, where it is as direct as a definition gets.
pub fn det_cofactor(a: &IntMatrix) -> BigInt {
    assert!(a.is_square());
    let n = a.rows();
    if n == 0 {
        return BigInt::one();
    }
    if n == 1 {
        return a.at(0, 0).clone();
    }
    let mut acc = BigInt::zero();
    for j in 0..n {
        if a.at(0, j).is_zero() {
            continue;
        }
        let minor = IntMatrix::from_fn(n - 1, n - 1, |r, c| {
            a.at(r + 1, if c < j { c } else { c + 1 }).clone()
        });
        let term = a.at(0, j) * det_cofactor(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, k: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in from..n {
            cur.push(i);
            rec(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Invariant factors by determinantal divisors: `d_k = D_k / D_{k-1}`
/// where `D_k` is the gcd of all `k x k` minors. A textbook definition
/// with nothing in common with the elimination algorithm, and
/// exponential, so keep the inputs small.
pub fn minor_gcd_invariant_factors(a: &IntMatrix) -> Vec<BigInt> {
    let mut out = Vec::new();
    let mut prev = BigInt::one();
    for k in 1..=a.rows().min(a.cols()) {
        let mut gcd = BigInt::zero();
        for rows in k_subsets(a.rows(), k) {
            for cols in k_subsets(a.cols(), k) {
                let minor = IntMatrix::from_fn(k, k, |r, c| a.at(rows[r], cols[c]).clone());
                gcd = gcd.gcd(&det_cofactor(&minor));
            }
        }
        if gcd.is_zero() {
            break; // rank reached
        }
        out.push(&gcd / &prev);
        prev = gcd;
    }
    out
}

pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    IntMatrix::from_fn(rows, cols, |_, _| {
        BigInt::from(rng.gen_range(-bound..=bound))
    })
}

/// Product of random elementary row operations applied to the
/// identity: unimodular by construction.
pub fn random_unimodular(rng: &mut impl Rng, n: usize, steps: usize) -> IntMatrix {
    let mut u = IntMatrix::identity(n);
    if n == 0 {
        return u;
    }
    for _ in 0..steps {
        match rng.gen_range(0..3) {
            0 => {
                let i = rng.gen_range(0..n);
                let j = rng.gen_range(0..n);
                if i != j {
                    for k in 0..n {
                        let v = u.at(i, k).clone();
                        u.set(j, k, v.clone() + u.at(j, k));
                    }
                }
            }
            1 => {
                let i = rng.gen_range(0..n);
                let j = rng.gen_range(0..n);
                let c = BigInt::from(rng.gen_range(-3i64..=3));
                if i != j {
                    for k in 0..n {
                        let v = u.at(j, k) * &c;
                        u.set(i, k, u.at(i, k) + v);
                    }
                }
            }
            _ => {
                let i = rng.gen_range(0..n);
                for k in 0..n {
                    let v = -u.at(i, k).clone();
                    u.set(i, k, v);
                }
            }
        }
    }
    u
}

/// Whether `v` is an integer combination of the columns of `basis`,
/// decided through the Smith form of `basis`.
pub fn in_column_span(basis: &IntMatrix, v: &[BigInt]) -> bool {
    assert_eq!(v.len(), basis.rows());
    let snf = basis.snf();
    let w = snf.u.mul_vec(v);
    let steps = basis.rows().min(basis.cols());
    for (i, wi) in w.iter().enumerate() {
        if i < steps && !snf.d.at(i, i).is_zero() {
            if !(wi % snf.d.at(i, i)).is_zero() {
                return false;
            }
        } else if !wi.is_zero() {
            return false;
        }
    }
    true
}

/// `|det|` of a unimodular candidate is 1 (checked with Bareiss, not
/// with the code under test).
pub fn is_unimodular(a: &IntMatrix) -> bool {
    a.is_square() && det_bareiss(a).abs().is_one()
}
