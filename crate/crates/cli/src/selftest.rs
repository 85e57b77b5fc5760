//! Reduced-count property suites runnable from the command line.
//! Same invariants as the full test suites, fewer cases, fixed
//! seeds. A passing selftest is a quick health check of an installed
//! binary, not a substitute for `cargo test`.

use lcq_core::exterior::{alt2_induced, pd_pair, theta, theta_divided, ExtElement};
use lcq_core::lattice::IntMatrix;
use lcq_core::nilpotent::Class2Element;
use lcq_core::second_quotient::{ker_cup_dim, rational_rank, second_lcs_quotient, SpaceData};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct SuiteResult {
    pub name: &'static str,
    pub detail: String,
    pub failure: Option<String>,
}

/// Fraction-free determinant, used as the independent check on
/// SNF-derived quantities.
fn det_bareiss(a: &IntMatrix) -> BigInt {
    assert!(a.is_square());
    let n = a.rows();
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| a.at(i, j).clone()).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = &t / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    IntMatrix::from_fn(rows, cols, |_, _| {
        BigInt::from(rng.gen_range(-bound..=bound))
    })
}

fn random_unimodular(rng: &mut impl Rng, n: usize, steps: usize) -> IntMatrix {
    let mut m = IntMatrix::identity(n);
    if n == 0 {
        return m;
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        if i == j {
            continue;
        }
        let c = BigInt::from(rng.gen_range(-2i64..=2));
        let shear = IntMatrix::from_fn(n, n, |r, s| {
            if r == s {
                BigInt::one()
            } else if r == i && s == j {
                c.clone()
            } else {
                BigInt::zero()
            }
        });
        m = m.mul(&shear);
    }
    m
}

fn fail(name: &'static str, why: String) -> SuiteResult {
    SuiteResult {
        name,
        detail: String::new(),
        failure: Some(why),
    }
}

fn pass(name: &'static str, detail: String) -> SuiteResult {
    SuiteResult {
        name,
        detail,
        failure: None,
    }
}

pub fn snf_suite(cases: usize) -> SuiteResult {
    const NAME: &str = "snf";
    let mut rng = ChaCha8Rng::seed_from_u64(0x5e1f_0001);
    for case in 0..cases {
        let rows = rng.gen_range(0..=12);
        let cols = rng.gen_range(0..=12);
        let a = random_matrix(&mut rng, rows, cols, 9);
        let s = a.snf();
        if s.u.mul(&a).mul(&s.v) != s.d {
            return fail(NAME, format!("case {case}: U*A*V != D"));
        }
        if det_bareiss(&s.u).abs() != BigInt::one() || det_bareiss(&s.v).abs() != BigInt::one() {
            return fail(NAME, format!("case {case}: transform not unimodular"));
        }
        let factors = s.invariant_factors();
        for w in factors.windows(2) {
            if (&w[1] % &w[0]) != BigInt::zero() {
                return fail(NAME, format!("case {case}: divisibility chain broken"));
            }
        }
        if a.is_square() && a.rows() != 0 {
            let det = det_bareiss(&a).abs();
            if !det.is_zero() {
                let order = a.cokernel().order().expect("finite cokernel");
                if order != det {
                    return fail(NAME, format!("case {case}: cokernel order != |det|"));
                }
            }
        }
    }
    pass(NAME, format!("{cases} random matrices up to 12x12"))
}

pub fn exterior_suite() -> SuiteResult {
    const NAME: &str = "exterior";
    for g in 0..=5usize {
        let th = theta(g);
        let mut power = ExtElement::unit(2 * g);
        for k in 0..=g {
            // k! * (theta^k / k!) must equal the plain power
            let mut factorial = BigInt::one();
            for i in 1..=k {
                factorial *= BigInt::from(i);
            }
            if theta_divided(g, k).scale(&factorial) != power {
                return fail(NAME, format!("divided power not exact at g={g}, k={k}"));
            }
            if k < g {
                power = match power.wedge(&th) {
                    Ok(p) => p,
                    Err(e) => return fail(NAME, format!("wedge failed: {e}")),
                };
            }
        }
    }
    // graded commutativity on random small elements
    let mut rng = ChaCha8Rng::seed_from_u64(0x5e1f_0002);
    for case in 0..100 {
        let ambient = rng.gen_range(2..=5);
        let da = rng.gen_range(1..=2usize);
        let db = rng.gen_range(1..=2usize);
        let pick = |rng: &mut ChaCha8Rng, d: usize| {
            let mut key: Vec<usize> = Vec::new();
            while key.len() < d {
                let x = rng.gen_range(1..=ambient);
                if !key.contains(&x) {
                    key.push(x);
                }
            }
            key.sort_unstable();
            ExtElement::from_terms(ambient, d, [(key, BigInt::from(rng.gen_range(-3i64..=3)))])
        };
        let a = pick(&mut rng, da);
        let b = pick(&mut rng, db);
        let ab = a.wedge(&b).unwrap();
        let mut ba = b.wedge(&a).unwrap();
        if (da * db) % 2 == 1 {
            ba = ba.neg();
        }
        if ab != ba {
            return fail(NAME, format!("graded commutativity broken at case {case}"));
        }
    }
    pass(
        NAME,
        "divided powers exact for g <= 5, sign rule on 100 random wedges".to_string(),
    )
}

pub fn nilpotent_suite(cases: usize) -> SuiteResult {
    const NAME: &str = "nilpotent";
    let mut rng = ChaCha8Rng::seed_from_u64(0x5e1f_0003);
    let random_element = |rng: &mut ChaCha8Rng, n: usize| {
        let a = (0..n)
            .map(|_| BigInt::from(rng.gen_range(-3i64..=3)))
            .collect();
        let b = (0..n * (n - 1) / 2)
            .map(|_| BigInt::from(rng.gen_range(-3i64..=3)))
            .collect();
        Class2Element::from_parts(n, a, b)
    };
    for case in 0..cases {
        let n = rng.gen_range(1..=4);
        let x = random_element(&mut rng, n);
        let y = random_element(&mut rng, n);
        let z = random_element(&mut rng, n);
        let assoc_left = x.nf_mul(&y).unwrap().nf_mul(&z).unwrap();
        let assoc_right = x.nf_mul(&y.nf_mul(&z).unwrap()).unwrap();
        if assoc_left != assoc_right {
            return fail(NAME, format!("case {case}: associativity broken"));
        }
        if !x.nf_mul(&x.inverse()).unwrap().is_identity() {
            return fail(NAME, format!("case {case}: inverse broken"));
        }
        let m = rng.gen_range(-4i64..=4);
        let mut acc = Class2Element::identity(n);
        let step = if m < 0 { x.inverse() } else { x.clone() };
        for _ in 0..m.unsigned_abs() {
            acc = acc.nf_mul(&step).unwrap();
        }
        if x.power(&BigInt::from(m)) != acc {
            return fail(NAME, format!("case {case}: power formula broken at m={m}"));
        }
        let c = x.commutator_with(&y).unwrap();
        if !c.abelian_part().iter().all(Zero::is_zero) {
            return fail(NAME, format!("case {case}: commutator not in the center"));
        }
    }
    pass(NAME, format!("{cases} random triples, n <= 4"))
}

pub fn quotient_suite(cases: usize) -> SuiteResult {
    const NAME: &str = "quotient";
    let mut rng = ChaCha8Rng::seed_from_u64(0x5e1f_0004);
    for case in 0..cases {
        let h1: usize = rng.gen_range(2..=5);
        let h2 = rng.gen_range(0..=6);
        let alt2 = h1 * (h1 - 1) / 2;
        let mu = random_matrix(&mut rng, alt2, h2, 4);
        let space = SpaceData::with_mu("selftest", h1, true, h2, mu.clone());
        if rational_rank(&space) != ker_cup_dim(&space) {
            return fail(NAME, format!("case {case}: rank duality broken"));
        }
        let baseline = second_lcs_quotient(&space).unwrap().group;
        let u = random_unimodular(&mut rng, h1, 8);
        let w = random_unimodular(&mut rng, h2, 8);
        let moved = alt2_induced(&u).mul(&mu).mul(&w);
        let moved_space = SpaceData::with_mu("selftest", h1, true, h2, moved);
        if second_lcs_quotient(&moved_space).unwrap().group != baseline {
            return fail(
                NAME,
                format!("case {case}: basis change moved the quotient"),
            );
        }
    }
    pass(
        NAME,
        format!("{cases} random spaces, duality and invariance"),
    )
}

pub fn fano_suite() -> SuiteResult {
    const NAME: &str = "fano";
    let det = lcq_core::fano::det_f();
    if det != BigInt::from(4) {
        return fail(NAME, format!("det_f = {det}, want 4"));
    }
    let (lhs, rhs) = lcq_core::fano::rank1_det_identity(5);
    if lhs != rhs || lhs != BigInt::from(4) {
        return fail(NAME, format!("rank-1 identity gave {lhs} vs {rhs}"));
    }
    // theta^(a) ^ theta^(b) = C(a+b, a) theta^(a+b), so the top
    // pairing of the two halves is the binomial coefficient
    let split = pd_pair(&theta_divided(5, 2), &theta_divided(5, 3)).unwrap();
    if split != BigInt::from(10) {
        return fail(
            NAME,
            format!("theta^(2) . theta^(3) = {split}, want C(5,2) = 10"),
        );
    }
    pass(
        NAME,
        "det_f = 4, rank-1 identity, divided-power duality".to_string(),
    )
}

pub fn run_all() -> Vec<SuiteResult> {
    vec![
        snf_suite(60),
        exterior_suite(),
        nilpotent_suite(200),
        quotient_suite(30),
        fano_suite(),
    ]
}
