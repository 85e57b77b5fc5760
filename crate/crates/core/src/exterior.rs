//! Integral exterior algebra on a based lattice, with the symplectic
//! bookkeeping needed for surface-like homology.
//!
//! An element of degree `k` over ambient rank `m` is a `Z`-combination
//! of basis monomials `e_{i1} ^ ... ^ e_{ik}` with strictly increasing
//! indices in `1..=m`. Only nonzero coefficients are stored, so two
//! elements are equal exactly when their coefficient tables agree.
//!
//! A symplectic basis of rank `2g` is ordered interleaved:
//! `eps_1, del_1, eps_2, del_2, ...`, so `eps_i` sits at ambient index
//! `2i - 1` and `del_i` at `2i`. The orientation class is
//! `eps_1 ^ del_1 ^ ... ^ eps_g ^ del_g` with coefficient `+1`, and
//! pairings against it are what [`pd_pair`] computes.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::lattice::IntMatrix;

/// Exterior algebra element of a fixed degree.
#[derive(Clone, Eq)]
pub struct ExtElement {
    ambient: usize,
    degree: usize,
    coeffs: BTreeMap<Vec<usize>, BigInt>,
}

impl ExtElement {
    /// The zero element. `degree` is clamped to the ambient rank, as
    /// every element above top degree is zero anyway.
    pub fn zero(ambient: usize, degree: usize) -> Self {
        ExtElement {
            ambient,
            degree: degree.min(ambient),
            coeffs: BTreeMap::new(),
        }
    }

    /// The unit of the algebra: degree 0, coefficient 1 on the empty
    /// monomial.
    pub fn unit(ambient: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(Vec::new(), BigInt::one());
        ExtElement {
            ambient,
            degree: 0,
            coeffs,
        }
    }

    /// Single basis monomial with coefficient one.
    ///
    /// # Panics
    ///
    /// Panics unless `key` is strictly increasing with entries in
    /// `1..=ambient`.
    pub fn basis(ambient: usize, key: &[usize]) -> Self {
        assert!(valid_key(ambient, key), "bad monomial index tuple");
        let mut coeffs = BTreeMap::new();
        coeffs.insert(key.to_vec(), BigInt::one());
        ExtElement {
            ambient,
            degree: key.len(),
            coeffs,
        }
    }

    /// Degree-1 basis vector `e_index`, `index` in `1..=ambient`.
    pub fn basis_vector(ambient: usize, index: usize) -> Self {
        ExtElement::basis(ambient, &[index])
    }

    /// Builds an element by summing terms; repeated keys accumulate
    /// and zero totals are dropped.
    ///
    /// # Panics
    ///
    /// Panics if some key is not a strictly increasing `degree`-tuple
    /// in `1..=ambient`.
    pub fn from_terms(
        ambient: usize,
        degree: usize,
        terms: impl IntoIterator<Item = (Vec<usize>, BigInt)>,
    ) -> Self {
        let mut coeffs: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
        for (key, c) in terms {
            assert!(
                key.len() == degree && valid_key(ambient, &key),
                "bad monomial index tuple"
            );
            let slot = coeffs.entry(key).or_insert_with(BigInt::zero);
            *slot += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        ExtElement {
            ambient,
            degree: degree.min(ambient),
            coeffs,
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of a monomial (zero when absent).
    pub fn coeff(&self, key: &[usize]) -> BigInt {
        self.coeffs.get(key).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[usize], &BigInt)> {
        self.coeffs.iter().map(|(k, c)| (k.as_slice(), c))
    }

    /// Sum of two elements of the same ambient rank and degree.
    ///
    /// # Panics
    ///
    /// Panics on ambient mismatch, or on degree mismatch between two
    /// nonzero elements.
    pub fn add(&self, other: &ExtElement) -> ExtElement {
        assert_eq!(self.ambient, other.ambient, "ambient rank mismatch");
        assert!(
            self.is_zero() || other.is_zero() || self.degree == other.degree,
            "degree mismatch in sum"
        );
        let degree = if self.is_zero() {
            other.degree
        } else {
            self.degree
        };
        let mut coeffs = self.coeffs.clone();
        for (k, c) in &other.coeffs {
            let slot = coeffs.entry(k.clone()).or_insert_with(BigInt::zero);
            *slot += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        ExtElement {
            ambient: self.ambient,
            degree,
            coeffs,
        }
    }

    pub fn neg(&self) -> ExtElement {
        self.scale(&BigInt::from(-1))
    }

    pub fn scale(&self, c: &BigInt) -> ExtElement {
        if c.is_zero() {
            return ExtElement::zero(self.ambient, self.degree);
        }
        ExtElement {
            ambient: self.ambient,
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .collect(),
        }
    }

    /// Wedge product. Signs come from counting the transpositions that
    /// interleave the two index tuples; monomials sharing an index
    /// vanish. A product past top degree is zero.
    pub fn wedge(&self, other: &ExtElement) -> Result<ExtElement, Error> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        let m = self.ambient;
        let degree = self.degree + other.degree;
        if degree > m {
            return Ok(ExtElement::zero(m, m));
        }
        let mut coeffs: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
        for (ka, ca) in &self.coeffs {
            for (kb, cb) in &other.coeffs {
                let Some((key, negative)) = merge_keys(ka, kb) else {
                    continue;
                };
                let mut c = ca * cb;
                if negative {
                    c = -c;
                }
                let slot = coeffs.entry(key).or_insert_with(BigInt::zero);
                *slot += c;
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        Ok(ExtElement {
            ambient: m,
            degree,
            coeffs,
        })
    }
}

/// Zero elements compare equal regardless of their recorded degree.
impl PartialEq for ExtElement {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient
            && self.coeffs == other.coeffs
            && (self.degree == other.degree || self.coeffs.is_empty())
    }
}

impl fmt::Debug for ExtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0 (deg {}, rank {})", self.degree, self.ambient);
        }
        let mut first = true;
        for (k, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "{c}*e{k:?}")?;
            first = false;
        }
        write!(f, " (deg {}, rank {})", self.degree, self.ambient)
    }
}

fn valid_key(ambient: usize, key: &[usize]) -> bool {
    key.windows(2).all(|w| w[0] < w[1]) && key.iter().all(|&i| i >= 1 && i <= ambient)
}

/// Interleaves two strictly increasing tuples, returning the merged
/// tuple and whether the permutation sign is negative. `None` when the
/// tuples share an index.
fn merge_keys(a: &[usize], b: &[usize]) -> Option<(Vec<usize>, bool)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut inversions = 0usize;
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] == b[j] {
            return None;
        }
        if a[i] < b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            // b[j] slides past everything left in a
            inversions += a.len() - i;
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    Some((out, inversions % 2 == 1))
}

/// Which half of a symplectic pair a basis vector is.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SymplecticKind {
    Epsilon,
    Delta,
}

/// Label of a symplectic basis vector: pair index `index` in `1..=g`
/// plus the side of the pair.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SymplecticLabel {
    pub genus: usize,
    pub index: usize,
    pub kind: SymplecticKind,
}

impl SymplecticLabel {
    /// Ambient index under the interleaved ordering: `eps_i -> 2i-1`,
    /// `del_i -> 2i`.
    pub fn ambient_index(&self) -> usize {
        match self.kind {
            SymplecticKind::Epsilon => 2 * self.index - 1,
            SymplecticKind::Delta => 2 * self.index,
        }
    }

    /// Inverse of [`ambient_index`](Self::ambient_index).
    ///
    /// # Panics
    ///
    /// Panics unless `ambient` is in `1..=2*genus`.
    pub fn from_ambient(genus: usize, ambient: usize) -> Self {
        assert!(ambient >= 1 && ambient <= 2 * genus, "index out of range");
        if ambient % 2 == 1 {
            SymplecticLabel {
                genus,
                index: ambient.div_ceil(2),
                kind: SymplecticKind::Epsilon,
            }
        } else {
            SymplecticLabel {
                genus,
                index: ambient / 2,
                kind: SymplecticKind::Delta,
            }
        }
    }

    pub fn element(&self) -> ExtElement {
        ExtElement::basis_vector(2 * self.genus, self.ambient_index())
    }
}

/// `eps_i` as a degree-1 element over rank `2g`.
pub fn epsilon(g: usize, i: usize) -> ExtElement {
    SymplecticLabel {
        genus: g,
        index: i,
        kind: SymplecticKind::Epsilon,
    }
    .element()
}

/// `del_i` as a degree-1 element over rank `2g`.
pub fn delta(g: usize, i: usize) -> ExtElement {
    SymplecticLabel {
        genus: g,
        index: i,
        kind: SymplecticKind::Delta,
    }
    .element()
}

/// The symplectic class `theta = sum_i eps_i ^ del_i` over rank `2g`.
pub fn theta(g: usize) -> ExtElement {
    ExtElement::from_terms(
        2 * g,
        2.min(2 * g),
        (1..=g).map(|i| (vec![2 * i - 1, 2 * i], BigInt::one())),
    )
}

/// The divided power `theta^k / k!`: the sum over `k`-subsets `S` of
/// `1..=g` of the wedge of the pairs indexed by `S`, every coefficient
/// `+1`. Integral by construction, with exactly `C(g, k)` terms.
/// Above top degree (`k > g`) this is zero.
pub fn theta_divided(g: usize, k: usize) -> ExtElement {
    if k > g {
        return ExtElement::zero(2 * g, 2 * g);
    }
    let terms = k_subsets(g, k).into_iter().map(|s| {
        let mut key = Vec::with_capacity(2 * k);
        for i in s {
            key.push(2 * i - 1);
            key.push(2 * i);
        }
        (key, BigInt::one())
    });
    ExtElement::from_terms(2 * g, 2 * k, terms)
}

/// Strictly increasing `k`-subsets of `1..=n`, lexicographic.
fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let needed = k - cur.len();
        for i in from..=n.saturating_sub(needed - 1) {
            cur.push(i);
            rec(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 1, &mut cur, &mut out);
    out
}

/// Pairing of two elements against the orientation: the coefficient of
/// the top monomial `e_1 ^ ... ^ e_m` in `a ^ b`. Degrees must be
/// complementary.
pub fn pd_pair(a: &ExtElement, b: &ExtElement) -> Result<BigInt, Error> {
    if a.ambient != b.ambient {
        return Err(Error::AmbientMismatch {
            left: a.ambient,
            right: b.ambient,
        });
    }
    if a.degree + b.degree != a.ambient {
        return Err(Error::DegreeMismatch {
            left: a.degree,
            right: b.degree,
            ambient: a.ambient,
        });
    }
    let top: Vec<usize> = (1..=a.ambient).collect();
    Ok(a.wedge(b)?.coeff(&top))
}

/// Lexicographically ordered index pairs `(i, j)`, `1 <= i < j <= m`:
/// the coordinate convention for everything indexed by the alternating
/// square.
pub fn alt2_basis(m: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(m * m.saturating_sub(1) / 2);
    for i in 1..=m {
        for j in i + 1..=m {
            out.push((i, j));
        }
    }
    out
}

/// Position of the pair `(i, j)` in [`alt2_basis`]`(m)`.
///
/// # Panics
///
/// Panics unless `1 <= i < j <= m`.
pub fn alt2_index(m: usize, i: usize, j: usize) -> usize {
    assert!(1 <= i && i < j && j <= m, "pair out of range");
    (i - 1) * m - i * (i - 1) / 2 + (j - i - 1)
}

/// Wedge of two vectors of length `m`, written in [`alt2_basis`]
/// coordinates: entry `(i, j)` is `u_i v_j - u_j v_i`.
///
/// # Panics
///
/// Panics if the vectors do not both have length `m`.
pub fn alt2_wedge_vec(m: usize, u: &[BigInt], v: &[BigInt]) -> Vec<BigInt> {
    assert!(u.len() == m && v.len() == m, "vector length mismatch");
    alt2_basis(m)
        .into_iter()
        .map(|(i, j)| &u[i - 1] * &v[j - 1] - &u[j - 1] * &v[i - 1])
        .collect()
}

/// The matrix a square matrix induces on the alternating square, in
/// [`alt2_basis`] coordinates on both sides: entry at pair-row
/// `(i, j)` and pair-column `(k, l)` is the `2x2` minor of `u` on rows
/// `i, j` and columns `k, l`. Functorial, and unimodular whenever `u`
/// is.
///
/// # Panics
///
/// Panics if `u` is not square.
pub fn alt2_induced(u: &IntMatrix) -> IntMatrix {
    assert!(u.is_square(), "alternating square of a non-square matrix");
    let m = u.rows();
    let pairs = alt2_basis(m);
    IntMatrix::from_fn(pairs.len(), pairs.len(), |r, c| {
        let (i, j) = pairs[r];
        let (k, l) = pairs[c];
        u.at(i - 1, k - 1) * u.at(j - 1, l - 1) - u.at(i - 1, l - 1) * u.at(j - 1, k - 1)
    })
}
