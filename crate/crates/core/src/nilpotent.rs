//! Direct group-theoretic computation of the second lower-central
//! quotient from a finite presentation, inside the free class-2
//! nilpotent group.
//!
//! The free class-2 group on `x_1, ..., x_n` has normal forms
//! `x_1^{a_1} ... x_n^{a_n} * prod_{i<j} (x_i, x_j)^{b_{ij}}`, with
//! commutators `(x, y) = x y x^-1 y^-1` central. An element is the
//! pair of its exponent vector `a` and its commutator coordinate
//! vector `b`, the latter in
//! [`alt2_basis`](crate::exterior::alt2_basis) order.
//!
//! Multiplying two normal forms only has to commute the first abelian
//! block past the second, which costs the bilinear collection
//! correction `Corr(a, a')_{(i,j)} = -a_j * a'_i`: moving `x_i^{a'_i}`
//! left past `x_j^{a_j}` (for `j > i`) emits `(x_j, x_i)^{a_j a'_i} =
//! (x_i, x_j)^{-a_j a'_i}`, and everything lands in the center where
//! order is irrelevant.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::exterior::{alt2_basis, alt2_wedge_vec};
use crate::lattice::{AbelianGroup, IntMatrix};
use crate::second_quotient::{second_lcs_quotient, SpaceData};

/// Normal form in the free class-2 nilpotent group on `n` generators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Class2Element {
    n: usize,
    abelian: Vec<BigInt>,
    commutator: Vec<BigInt>,
}

/// The collection correction picked up when the abelian block of `ay`
/// moves left through the abelian block of `ax`.
fn collection_correction(ax: &[BigInt], ay: &[BigInt]) -> Vec<BigInt> {
    let n = ax.len();
    alt2_basis(n)
        .into_iter()
        .map(|(i, j)| -(&ax[j - 1] * &ay[i - 1]))
        .collect()
}

impl Class2Element {
    pub fn identity(n: usize) -> Self {
        Class2Element {
            n,
            abelian: vec![BigInt::zero(); n],
            commutator: vec![BigInt::zero(); n * n.saturating_sub(1) / 2],
        }
    }

    /// The `i`-th generator, `i` in `1..=n`.
    pub fn generator(n: usize, i: usize) -> Result<Self, Error> {
        if i < 1 || i > n {
            return Err(Error::WordIndex {
                index: i as i64,
                generators: n,
            });
        }
        let mut e = Class2Element::identity(n);
        e.abelian[i - 1] = BigInt::one();
        Ok(e)
    }

    /// # Panics
    ///
    /// Panics if the vector lengths are not `n` and `C(n, 2)`.
    pub fn from_parts(n: usize, abelian: Vec<BigInt>, commutator: Vec<BigInt>) -> Self {
        assert_eq!(abelian.len(), n, "abelian part length");
        assert_eq!(
            commutator.len(),
            n * n.saturating_sub(1) / 2,
            "commutator part length"
        );
        Class2Element {
            n,
            abelian,
            commutator,
        }
    }

    pub fn generator_count(&self) -> usize {
        self.n
    }

    pub fn abelian_part(&self) -> &[BigInt] {
        &self.abelian
    }

    pub fn commutator_part(&self) -> &[BigInt] {
        &self.commutator
    }

    pub fn is_identity(&self) -> bool {
        self.abelian.iter().all(Zero::is_zero) && self.commutator.iter().all(Zero::is_zero)
    }

    /// Normal-form product.
    pub fn nf_mul(&self, other: &Class2Element) -> Result<Class2Element, Error> {
        if self.n != other.n {
            return Err(Error::GeneratorArity {
                left: self.n,
                right: other.n,
            });
        }
        let abelian = self
            .abelian
            .iter()
            .zip(&other.abelian)
            .map(|(a, b)| a + b)
            .collect();
        let corr = collection_correction(&self.abelian, &other.abelian);
        let commutator = self
            .commutator
            .iter()
            .zip(&other.commutator)
            .zip(corr)
            .map(|((a, b), c)| a + b + c)
            .collect();
        Ok(Class2Element {
            n: self.n,
            abelian,
            commutator,
        })
    }

    /// `(a, b)^-1 = (-a, -b + Corr(a, a))`.
    pub fn inverse(&self) -> Class2Element {
        let corr = collection_correction(&self.abelian, &self.abelian);
        Class2Element {
            n: self.n,
            abelian: self.abelian.iter().map(|a| -a).collect(),
            commutator: self
                .commutator
                .iter()
                .zip(corr)
                .map(|(b, c)| c - b)
                .collect(),
        }
    }

    /// Integer power by the closed form
    /// `z^m = (m a, m b + binom(m, 2) Corr(a, a))`, valid for negative
    /// exponents too.
    pub fn power(&self, m: &BigInt) -> Class2Element {
        let half = (m * (m - BigInt::one())) / BigInt::from(2);
        let corr = collection_correction(&self.abelian, &self.abelian);
        Class2Element {
            n: self.n,
            abelian: self.abelian.iter().map(|a| a * m).collect(),
            commutator: self
                .commutator
                .iter()
                .zip(corr)
                .map(|(b, c)| b * m + c * &half)
                .collect(),
        }
    }

    /// Group commutator `x y x^-1 y^-1`, computed by multiplication.
    /// Always central, with commutator part the wedge of the two
    /// abelian parts.
    pub fn commutator_with(&self, other: &Class2Element) -> Result<Class2Element, Error> {
        self.nf_mul(other)?
            .nf_mul(&self.inverse())?
            .nf_mul(&other.inverse())
    }
}

/// Evaluates a word in the free class-2 group. Letters are signed
/// 1-based generator indices: `3` means `x_3`, `-3` means `x_3^-1`.
/// The empty word is the identity.
pub fn eval_word(word: &[i64], n: usize) -> Result<Class2Element, Error> {
    let mut acc = Class2Element::identity(n);
    for &letter in word {
        let index = letter.unsigned_abs();
        if letter == 0 || index > n as u64 {
            return Err(Error::WordIndex {
                index: letter,
                generators: n,
            });
        }
        let g = Class2Element::generator(n, index as usize)?;
        let factor = if letter < 0 { g.inverse() } else { g };
        acc = acc.nf_mul(&factor)?;
    }
    Ok(acc)
}

/// Finite group presentation; relators are words in signed generator
/// indices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupPresentation {
    generators: usize,
    relators: Vec<Vec<i64>>,
}

impl GroupPresentation {
    /// Validates every relator letter against the generator count.
    pub fn new(generators: usize, relators: Vec<Vec<i64>>) -> Result<Self, Error> {
        for r in &relators {
            for &letter in r {
                if letter == 0 || letter.unsigned_abs() > generators as u64 {
                    return Err(Error::WordIndex {
                        index: letter,
                        generators,
                    });
                }
            }
        }
        Ok(GroupPresentation {
            generators,
            relators,
        })
    }

    pub fn free(generators: usize) -> Self {
        GroupPresentation {
            generators,
            relators: Vec::new(),
        }
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn relators(&self) -> &[Vec<i64>] {
        &self.relators
    }

    /// Abelianization, as the cokernel of the relator exponent matrix.
    pub fn abelianization(&self) -> AbelianGroup {
        self.relator_exponent_matrix().cokernel()
    }

    /// `n x r` matrix whose columns are the relators' exponent sums.
    fn relator_exponent_matrix(&self) -> IntMatrix {
        let evals = self.eval_relators();
        IntMatrix::from_fn(self.generators, self.relators.len(), |i, k| {
            evals[k].abelian[i].clone()
        })
    }

    fn eval_relators(&self) -> Vec<Class2Element> {
        self.relators
            .iter()
            .map(|r| {
                eval_word(r, self.generators).expect("relators were validated at construction")
            })
            .collect()
    }
}

/// The quotient `gamma_2 / gamma_3` of the group presented by `pres`,
/// computed inside the free class-2 group.
///
/// The center `Z^{C(n,2)}` of the free class-2 group maps onto the
/// quotient; the sublattice to divide out is spanned by
///
/// * bracket vectors `a_k ^ e_i` for every relator abelianization
///   `a_k` and every generator index `i` (commutators of relators with
///   generators, which also absorb conjugation and reordering
///   corrections), and
/// * the commutator parts of products `prod_k r_k^{c_k}` over a kernel
///   basis of the relator exponent matrix: exactly the relator
///   combinations that fall into the commutator subgroup.
pub fn gamma2_mod_gamma3(pres: &GroupPresentation) -> AbelianGroup {
    let n = pres.generators;
    let alt2 = n * n.saturating_sub(1) / 2;
    let evals = pres.eval_relators();

    let mut columns: Vec<Vec<BigInt>> = Vec::new();
    for e in &evals {
        for i in 0..n {
            let mut unit = vec![BigInt::zero(); n];
            unit[i] = BigInt::one();
            columns.push(alt2_wedge_vec(n, e.abelian_part(), &unit));
        }
    }

    let kernel = pres.relator_exponent_matrix().kernel_basis();
    for c in 0..kernel.cols() {
        let mut z = Class2Element::identity(n);
        for (k, e) in evals.iter().enumerate() {
            z = z
                .nf_mul(&e.power(kernel.at(k, c)))
                .expect("generator counts agree");
        }
        debug_assert!(z.abelian_part().iter().all(Zero::is_zero));
        columns.push(z.commutator_part().to_vec());
    }

    IntMatrix::from_columns(alt2, &columns).cokernel()
}

/// Compares the homological formula against the presentation route.
/// Only meaningful for torsion-free first homology; otherwise the
/// formula determines the quotient only up to a finite kernel and the
/// comparison is refused.
pub fn cross_validate(space: &SpaceData, pres: &GroupPresentation) -> Result<bool, Error> {
    if !space.h1_torsion_free {
        return Err(Error::TorsionNotComparable);
    }
    let formula = second_lcs_quotient(space)?;
    Ok(formula.group == gamma2_mod_gamma3(pres))
}
