//! The Fano surface of lines on a smooth cubic threefold: the one
//! computation in this crate whose answer is a finite group.
//!
//! The surface `F` sits in its Albanese variety `A`, a 5-dimensional
//! abelian variety, so `H^1(A, Z) = H^1(F, Z)` has a symplectic basis
//! of rank 10 and `H^2(A, Z) = Lambda^2 H^1`. The composite
//! `H^2(A) -> H^2(F) -> H^8(A)` (restrict, then push forward) is the
//! symmetric pairing `b(u, v) = (u ^ v ^ [F])[top]` with
//! `[F] = theta^3 / 3!`. Its Gram matrix on the 45 alternating-square
//! basis monomials splits orthogonally into a unimodular 40x40 block
//! and the 5x5 block `E - I` (all-ones minus identity) on the
//! `eps_i ^ del_i` axis, so `|det| = |det(E - I)| = 4`.
//!
//! The maps `H_2(F) -> Lambda^2 H_1(F)` and its cohomological
//! transpose have equal determinant size (Clemens-Griffiths, "The
//! intermediate Jacobian of the cubic threefold", 10.14, where the
//! composite is computed), the product of the two is the 4 above, and
//! `H_1(F, Z)` is torsion-free (Collino). Hence the cokernel giving
//! `D/(D,G)` has order 2: it is `Z/2`, exactly.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::exterior::{alt2_basis, delta, epsilon, pd_pair, theta_divided, ExtElement};
use crate::lattice::{AbelianGroup, IntMatrix};
use crate::second_quotient::{Exactness, SecondQuotientResult};

/// Genus-like rank parameter: `H^1` has rank `2 * FANO_GENUS = 10`.
pub const FANO_GENUS: usize = 5;

/// The recorded geometric inputs of the derivation. Everything else in
/// this module is computed.
#[derive(Clone, Copy, Debug)]
pub struct FanoConstants {
    /// Half the rank of `H^1(F, Z)`.
    pub genus: usize,
    /// Self-intersection of the incidence divisor `C` on `F`
    /// (Clemens-Griffiths 10.7: `(C^2) = 5`).
    pub c_self_intersection: i64,
    /// The homological and cohomological determinant have the same
    /// absolute value (Clemens-Griffiths 10.14).
    pub det_sizes_agree: bool,
    /// `H_1(F, Z)` is torsion-free (Collino).
    pub h1_torsion_free: bool,
}

impl FanoConstants {
    pub fn standard() -> Self {
        FanoConstants {
            genus: FANO_GENUS,
            c_self_intersection: 5,
            det_sizes_agree: true,
            h1_torsion_free: true,
        }
    }

    pub fn h1_rank(&self) -> usize {
        2 * self.genus
    }

    /// The fundamental class of `F` inside its Albanese:
    /// `theta^3 / 3!`.
    pub fn class_of_surface(&self) -> ExtElement {
        theta_divided(self.genus, self.genus - 2)
    }

    /// Albanese image of the incidence divisor: `2 * theta^4 / 4!`.
    pub fn incidence_class(&self) -> ExtElement {
        theta_divided(self.genus, self.genus - 1).scale(&BigInt::from(2))
    }
}

/// The pairing `b(u, v) = (u ^ v ^ theta^3/3!)[top]` on `Lambda^2` of
/// the rank-10 symplectic lattice.
fn b_form(u: &ExtElement, v: &ExtElement) -> BigInt {
    let f = FanoConstants::standard().class_of_surface();
    let uv = u.wedge(v).expect("same ambient rank by construction");
    pd_pair(&uv, &f).expect("degrees 4 + 6 are complementary in rank 10")
}

/// Gram matrix of the pairing on the 45 basis monomials of
/// `Lambda^2`, in [`alt2_basis`] order.
pub fn build_b_matrix() -> IntMatrix {
    let m = 2 * FANO_GENUS;
    let pairs = alt2_basis(m);
    let basis: Vec<ExtElement> = pairs
        .iter()
        .map(|&(i, j)| ExtElement::basis(m, &[i, j]))
        .collect();
    let f = FanoConstants::standard().class_of_surface();
    IntMatrix::from_fn(basis.len(), basis.len(), |r, c| {
        let uv = basis[r].wedge(&basis[c]).expect("equal ambient ranks");
        pd_pair(&uv, &f).expect("complementary degrees")
    })
}

/// `|det|` of the full 45x45 Gram matrix.
pub fn det_f() -> BigInt {
    build_b_matrix()
        .det_abs()
        .expect("the Gram matrix is square")
}

/// All-ones matrix minus the identity.
pub fn all_ones_minus_identity(n: usize) -> IntMatrix {
    IntMatrix::from_fn(n, n, |i, j| {
        if i == j {
            BigInt::zero()
        } else {
            BigInt::one()
        }
    })
}

/// `(|det(E - I)|, |(-1)^n (1 - n)|)` for the all-ones matrix `E` of
/// size `n`; a rank-1 update of the identity makes the two agree.
pub fn rank1_det_identity(n: usize) -> (BigInt, BigInt) {
    let direct = all_ones_minus_identity(n)
        .det_abs()
        .expect("square by construction");
    // E has rank 1 and trace n, so det(E - I) = (-1)^n (1 - n)
    let formula = (BigInt::one() - BigInt::from(n)).abs();
    (direct, formula)
}

/// One named check with its outcome.
#[derive(Clone, Debug)]
pub struct CheckItem {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Outcome of a bundle of named checks.
#[derive(Clone, Debug, Default)]
pub struct CheckReport {
    items: Vec<CheckItem>,
}

impl CheckReport {
    fn push(&mut self, name: &'static str, passed: bool, detail: String) {
        self.items.push(CheckItem {
            name,
            passed,
            detail,
        });
    }

    pub fn items(&self) -> &[CheckItem] {
        &self.items
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for item in &self.items {
            let mark = if item.passed { "ok  " } else { "FAIL" };
            writeln!(f, "  {mark} {}: {}", item.name, item.detail)?;
        }
        Ok(())
    }
}

/// The 40 monomials away from the symplectic axis, in block order:
/// `eps_i ^ eps_j` (i < j), then `del_i ^ del_j` (i < j), then
/// `eps_i ^ del_j` (i != j, ordered pairs lexicographic).
fn m_block_elements() -> Vec<ExtElement> {
    let g = FANO_GENUS;
    let mut out = Vec::with_capacity(40);
    for i in 1..=g {
        for j in i + 1..=g {
            out.push(epsilon(g, i).wedge(&epsilon(g, j)).unwrap());
        }
    }
    for i in 1..=g {
        for j in i + 1..=g {
            out.push(delta(g, i).wedge(&delta(g, j)).unwrap());
        }
    }
    for i in 1..=g {
        for j in 1..=g {
            if i != j {
                out.push(epsilon(g, i).wedge(&delta(g, j)).unwrap());
            }
        }
    }
    out
}

/// The dual family paired against [`m_block_elements`]: for
/// `eps_i ^ eps_j` take `-del_i ^ del_j`, for `del_i ^ del_j` take
/// `-eps_i ^ eps_j`, for `eps_i ^ del_j` take `-eps_j ^ del_i`.
fn m_block_duals() -> Vec<ExtElement> {
    let g = FANO_GENUS;
    let mut out = Vec::with_capacity(40);
    for i in 1..=g {
        for j in i + 1..=g {
            out.push(delta(g, i).wedge(&delta(g, j)).unwrap().neg());
        }
    }
    for i in 1..=g {
        for j in i + 1..=g {
            out.push(epsilon(g, i).wedge(&epsilon(g, j)).unwrap().neg());
        }
    }
    for i in 1..=g {
        for j in 1..=g {
            if i != j {
                out.push(epsilon(g, j).wedge(&delta(g, i)).unwrap().neg());
            }
        }
    }
    out
}

fn n_block_elements() -> Vec<ExtElement> {
    let g = FANO_GENUS;
    (1..=g)
        .map(|i| epsilon(g, i).wedge(&delta(g, i)).unwrap())
        .collect()
}

/// The Gram submatrix on the 40 off-axis monomials.
pub fn m_block_matrix() -> IntMatrix {
    let els = m_block_elements();
    IntMatrix::from_fn(els.len(), els.len(), |r, c| b_form(&els[r], &els[c]))
}

/// The Gram submatrix on the symplectic axis `eps_i ^ del_i`.
pub fn n_block_matrix() -> IntMatrix {
    let els = n_block_elements();
    IntMatrix::from_fn(els.len(), els.len(), |r, c| b_form(&els[r], &els[c]))
}

/// Checks the orthogonal splitting of the Gram matrix: the two blocks
/// do not interact, the off-axis block has an explicit dual basis
/// (hence is unimodular), and the axis block is `E - I` with
/// determinant 4.
pub fn verify_block_decomposition() -> CheckReport {
    let mut report = CheckReport::default();

    let m_els = m_block_elements();
    let n_els = n_block_elements();

    let mut cross_zero = true;
    for me in &m_els {
        for ne in &n_els {
            if !b_form(me, ne).is_zero() {
                cross_zero = false;
            }
        }
    }
    report.push(
        "cross block",
        cross_zero,
        String::from("all 200 pairings between the blocks vanish"),
    );

    let duals = m_block_duals();
    let pairing = IntMatrix::from_fn(m_els.len(), duals.len(), |r, c| {
        b_form(&m_els[r], &duals[c])
    });
    let identity = pairing == IntMatrix::identity(m_els.len());
    report.push(
        "dual basis",
        identity,
        String::from("the dual family pairs to the 40x40 identity"),
    );

    let m_det = m_block_matrix().det_abs().expect("square");
    report.push(
        "off-axis block unimodular",
        m_det == BigInt::one(),
        format!("|det| = {m_det}"),
    );

    let n = n_block_matrix();
    let expected = all_ones_minus_identity(FANO_GENUS);
    report.push(
        "axis block",
        n == expected,
        String::from("equals all-ones minus identity"),
    );

    let n_det = n.det_abs().expect("square");
    report.push(
        "axis block determinant",
        n_det == BigInt::from(4),
        format!("|det| = {n_det}"),
    );

    report
}

/// Parity facts feeding the theta-divisor comparison: the incidence
/// class pairs evenly with the whole lattice, while `(C^2) = 5` is
/// odd, so the incidence divisor cannot be a theta divisor.
pub fn parity_check() -> CheckReport {
    let mut report = CheckReport::default();
    let constants = FanoConstants::standard();
    let m = constants.h1_rank();

    let incidence = constants.incidence_class();
    let two = BigInt::from(2);
    let mut all_even = true;
    let mut even_count = 0usize;
    for (i, j) in alt2_basis(m) {
        let v = pd_pair(&ExtElement::basis(m, &[i, j]), &incidence).expect("degrees 2 + 8");
        if (&v % &two).is_zero() {
            even_count += 1;
        } else {
            all_even = false;
        }
    }
    report.push(
        "incidence pairings even",
        all_even,
        format!("{even_count}/45 basis pairings are even"),
    );

    let odd = constants.c_self_intersection % 2 != 0;
    report.push(
        "incidence self-intersection odd",
        odd,
        format!("(C^2) = {}", constants.c_self_intersection),
    );

    // theta^4 / 4! is already integral: five unit coefficients, and
    // multiplying back by 4! recovers the plain fourth power.
    let divided = theta_divided(constants.genus, 4);
    let integral = divided.term_count() == 5 && divided.terms().all(|(_, c)| c.is_one());
    let mut power = ExtElement::unit(m);
    for _ in 0..4 {
        power = power
            .wedge(&crate::exterior::theta(constants.genus))
            .unwrap();
    }
    let recovers = divided.scale(&BigInt::from(24)) == power;
    report.push(
        "theta^4/4! integral",
        integral && recovers,
        format!(
            "{} unit terms, 24 * (theta^4/4!) = theta^4",
            divided.term_count()
        ),
    );

    report
}

/// The quotient `D/(D,G)` for the Fano surface.
///
/// Derivation: the full Gram determinant is `4`; it is the product of
/// the homological and cohomological determinants, which have equal
/// absolute value, so each is `2`; the homological map is injective
/// with image of index 2, and `H_1` is torsion-free, so the quotient
/// is the group of order 2, exactly.
pub fn fano_second_quotient() -> Result<SecondQuotientResult, Error> {
    let det = det_f();
    if det != BigInt::from(4) {
        return Err(Error::InconsistentDiscriminant { found: det });
    }
    Ok(SecondQuotientResult {
        group: AbelianGroup::cyclic(2),
        exactness: Exactness::Exact,
    })
}
