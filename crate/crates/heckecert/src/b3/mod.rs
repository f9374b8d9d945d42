//! Explicit irreducible representations of the three-strand braid group in
//! dimensions 2 to 4, built from the eigenvalues of the image of `s_1`, and
//! the polynomial conditions that decide when they are irreducible.
//!
//! Everything is generic over a [`Coeff`] carrier: `F_p` for numeric checks
//! and Laurent polynomials for symbolic ones. In the symbolic setting every
//! denominator is a monomial, so no fractions are needed. For `k = 4` the
//! variables are `l1, l2, l3, r` and `l4 = r^2 / (l1 l2 l3)`.

mod conjugate;
mod irreducible;

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

pub use conjugate::{conjugator_det_formula, ordered_triangular_conjugate, TriangularForm};
pub use irreducible::{brute_irreducible, common_eigenvector, generated_algebra_dim};

use crate::hecke::matrix::{self, Matrix};
use crate::hecke::{Check, Coeff, Exact, ModP};
use crate::ring::{LaurentPoly, PrimeField};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum B3Error {
    #[error("dimension {0} is not supported here")]
    Unsupported(usize),
    #[error("eigenvalue l{0} is zero")]
    ZeroEigenvalue(usize),
    #[error("dimension {0} needs a chosen root of det A")]
    MissingRoot(usize),
    #[error("the chosen root does not satisfy its defining equation")]
    RootMismatch,
    #[error("denominator {0} vanishes")]
    ZeroDenominator(&'static str),
    #[error("the conjugator is singular at this point")]
    SingularConjugator,
    #[error("F_{p} has no root of X^{e} - det A at any of {tries} draws")]
    NoRoot { p: u64, e: u32, tries: u32 },
    #[error(transparent)]
    Ring(#[from] crate::ring::RingError),
}

/// Eigenvalue data. `root` is `r` with `r^2 = det A` for `k = 4` and a
/// fifth root of `det A` for `k = 5`; unused otherwise.
#[derive(Clone, Debug, PartialEq)]
pub struct RepSpec<E> {
    pub lambdas: Vec<E>,
    pub root: Option<E>,
}

impl<E: Clone> RepSpec<E> {
    pub fn k(&self) -> usize {
        self.lambdas.len()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RepPair<E> {
    pub a: Matrix<E>,
    pub b: Matrix<E>,
}

fn product<R: Coeff>(r: &R, xs: &[R::E]) -> R::E {
    xs.iter().fold(r.one(), |acc, x| r.mul(&acc, x))
}

fn int<R: Coeff>(r: &R, n: i64) -> R::E {
    let one = r.one();
    let mut acc = r.zero();
    for _ in 0..n.unsigned_abs() {
        acc = r.add(&acc, &one);
    }
    if n < 0 {
        r.neg(&acc)
    } else {
        acc
    }
}

fn pow<R: Coeff>(r: &R, x: &R::E, e: u32) -> R::E {
    (0..e).fold(r.one(), |acc, _| r.mul(&acc, x))
}

/// Checks the invariants of a spec: count, nonzero eigenvalues, root.
pub fn validate<R: Coeff>(r: &R, spec: &RepSpec<R::E>) -> Result<(), B3Error> {
    let k = spec.k();
    if !(2..=5).contains(&k) {
        return Err(B3Error::Unsupported(k));
    }
    if let Some(i) = spec.lambdas.iter().position(|l| r.is_zero(l)) {
        return Err(B3Error::ZeroEigenvalue(i + 1));
    }
    let e = match k {
        4 => 2,
        5 => 5,
        _ => return Ok(()),
    };
    let root = spec.root.as_ref().ok_or(B3Error::MissingRoot(k))?;
    if pow(r, root, e) != product(r, &spec.lambdas) {
        return Err(B3Error::RootMismatch);
    }
    Ok(())
}

fn inv<R: Coeff>(r: &R, x: &R::E, name: &'static str) -> Result<R::E, B3Error> {
    r.unit_inverse(x).ok_or(B3Error::ZeroDenominator(name))
}

fn square<E>(rows: Vec<Vec<E>>) -> Matrix<E> {
    let n = rows.len();
    Matrix { n, data: rows.into_iter().flatten().collect() }
}

/// The matrices of `s_1` and `s_2`.
pub fn build_rep<R: Coeff>(r: &R, spec: &RepSpec<R::E>) -> Result<RepPair<R::E>, B3Error> {
    validate(r, spec)?;
    let l = &spec.lambdas;
    let (m, a, z) = (|x: &R::E, y: &R::E| r.mul(x, y), |x: &R::E, y: &R::E| r.add(x, y), r.zero());
    let neg = |x: &R::E| r.neg(x);
    match spec.k() {
        2 => {
            let (l1, l2) = (&l[0], &l[1]);
            Ok(RepPair {
                a: square(vec![vec![l1.clone(), l1.clone()], vec![z.clone(), l2.clone()]]),
                b: square(vec![vec![l2.clone(), z.clone()], vec![neg(l2), l1.clone()]]),
            })
        }
        3 => {
            let (l1, l2, l3) = (&l[0], &l[1], &l[2]);
            let c = a(&m(l1, l3), &m(l2, l2));
            let one = r.one();
            Ok(RepPair {
                a: square(vec![
                    vec![l3.clone(), z.clone(), z.clone()],
                    vec![c.clone(), l2.clone(), z.clone()],
                    vec![l2.clone(), one.clone(), l1.clone()],
                ]),
                b: square(vec![
                    vec![l1.clone(), neg(&one), l2.clone()],
                    vec![z.clone(), l2.clone(), neg(&c)],
                    vec![z.clone(), z.clone(), l3.clone()],
                ]),
            })
        }
        4 => {
            let (l1, l2, l3, l4) = (&l[0], &l[1], &l[2], &l[3]);
            let rt = spec.root.as_ref().expect("validated");
            let i1 = inv(r, l1, "l1")?;
            let i3 = inv(r, l3, "l3")?;
            let ir = inv(r, rt, "r")?;
            let i11 = m(&i1, &i1);
            let l11 = m(l1, l1);
            let l111 = m(&l11, l1);
            let l23 = m(l2, l3);
            // alpha = (r - l2 l3 - l1 l4) / l1^2
            let alpha = m(&r.sub(&r.sub(rt, &l23), &m(l1, l4)), &i11);
            let ra = m(rt, &alpha);
            let a_rows = vec![
                vec![l1.clone(), z.clone(), z.clone(), z.clone()],
                vec![m(&l11, &i3), l2.clone(), z.clone(), z.clone()],
                vec![m(&l111, &ir), m(&r.sub(&m(&m(l1, l2), l3), &m(l1, rt)), &ir), l3.clone(), z.clone()],
                vec![neg(l2), m(l2, &alpha), m(&ra, &i1), l4.clone()],
            ];
            let b_rows = vec![
                vec![l4.clone(), m(l3, &alpha), m(&m(&l23, &alpha), &i1), neg(&m(&m(&l23, l3), &ir))],
                vec![z.clone(), l3.clone(), m(&r.sub(&l23, rt), &i1), m(&m(&l11, l3), &ir)],
                vec![z.clone(), z.clone(), l2.clone(), m(&l111, &ir)],
                vec![z.clone(), z.clone(), z.clone(), l1.clone()],
            ];
            Ok(RepPair { a: square(a_rows), b: square(b_rows) })
        }
        k => Err(B3Error::Unsupported(k)),
    }
}

/// The polynomial whose nonvanishing is the irreducibility condition, with
/// the unit denominators dropped. For `k = 5` the det A exclusions are not
/// part of this value; see [`irreducibility_condition`].
pub fn condition_value<R: Coeff>(r: &R, spec: &RepSpec<R::E>) -> Result<R::E, B3Error> {
    validate(r, spec)?;
    let l = &spec.lambdas;
    let m = |x: &R::E, y: &R::E| r.mul(x, y);
    let sq = |x: &R::E| r.mul(x, x);
    Ok(match spec.k() {
        2 => r.add(&r.sub(&sq(&l[0]), &m(&l[0], &l[1])), &sq(&l[1])),
        3 => {
            let f = |i: usize, j: usize, h: usize| r.add(&sq(&l[i]), &m(&l[j], &l[h]));
            product(r, &[f(0, 1, 2), f(1, 0, 2), f(2, 0, 1)])
        }
        4 => {
            // The model built with root r is governed by the product taken
            // at the other square root, -r.
            let rt = &r.neg(spec.root.as_ref().expect("validated"));
            let mut factors = vec![r.neg(&m(&int(r, 2), rt))];
            for x in l {
                factors.push(r.add(rt, &sq(x)));
            }
            for (p, q, s, t) in PAIR_SPLITTINGS {
                factors.push(r.add(&r.add(rt, &m(&l[p], &l[q])), &m(&l[s], &l[t])));
            }
            product(r, &factors)
        }
        5 => {
            let rt = spec.root.as_ref().expect("validated");
            let r2 = sq(rt);
            let mut factors = Vec::new();
            for x in l {
                factors.push(r.add(&r.add(&r2, &m(x, rt)), &sq(x)));
            }
            for i in 0..5 {
                for j in 0..5 {
                    if i != j {
                        factors.push(r.add(&r2, &m(&l[i], &l[j])));
                    }
                }
            }
            product(r, &factors)
        }
        k => return Err(B3Error::Unsupported(k)),
    })
}

/// The three ways to split `{1, 2, 3, 4}` into two pairs, zero-based.
pub const PAIR_SPLITTINGS: [(usize, usize, usize, usize); 3] = [(0, 1, 2, 3), (0, 2, 1, 3), (0, 3, 1, 2)];

/// Whether the explicit model is irreducible according to the polynomial
/// condition. For `k = 5` this also requires `det A != -l_i^6 / l_j` for all
/// `i, j`.
pub fn irreducibility_condition<R: Coeff>(r: &R, spec: &RepSpec<R::E>) -> Result<bool, B3Error> {
    let v = condition_value(r, spec)?;
    if r.is_zero(&v) {
        return Ok(false);
    }
    if spec.k() == 5 {
        let det = product(r, &spec.lambdas);
        for li in &spec.lambdas {
            for lj in &spec.lambdas {
                // det A = -l_i^6 / l_j  <=>  det A * l_j + l_i^6 = 0
                if r.is_zero(&r.add(&r.mul(&det, lj), &pow(r, li, 6))) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Determinant by cofactor expansion; meant for the small sizes here.
pub fn det<R: Coeff>(r: &R, m: &Matrix<R::E>) -> R::E {
    fn rec<R: Coeff>(r: &R, m: &Matrix<R::E>, rows: &[usize], cols: &[usize]) -> R::E {
        if rows.is_empty() {
            return r.one();
        }
        let i = rows[0];
        let mut acc = r.zero();
        for (pos, &j) in cols.iter().enumerate() {
            let x = m.get(i, j);
            if r.is_zero(x) {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&c| c != j).collect();
            let t = r.mul(x, &rec(r, m, &rows[1..], &rest));
            acc = if pos % 2 == 0 { r.add(&acc, &t) } else { r.sub(&acc, &t) };
        }
        acc
    }
    let idx: Vec<usize> = (0..m.n).collect();
    rec(r, m, &idx, &idx)
}

fn triangular<R: Coeff>(r: &R, m: &Matrix<R::E>, lower: bool) -> bool {
    (0..m.n).all(|i| (0..m.n).all(|j| (if lower { j <= i } else { i <= j }) || r.is_zero(m.get(i, j))))
}

fn diagonal<E: Clone>(m: &Matrix<E>) -> Vec<E> {
    (0..m.n).map(|i| m.get(i, i).clone()).collect()
}

/// Same multiset, by greedy matching (entries need not be orderable).
fn same_multiset<E: PartialEq>(a: &[E], b: &[E]) -> bool {
    let mut used = vec![false; b.len()];
    a.len() == b.len()
        && a.iter().all(|x| match (0..b.len()).find(|&j| !used[j] && b[j] == *x) {
            Some(j) => {
                used[j] = true;
                true
            }
            None => false,
        })
}

/// Braid relation, spectrum, similarity and determinant checks. Both
/// matrices are triangular by construction, so the spectrum is read off
/// the diagonal once triangularity is confirmed.
pub fn verify_rep<R: Coeff>(r: &R, spec: &RepSpec<R::E>, pair: &RepPair<R::E>) -> Vec<Check> {
    let (a, b) = (&pair.a, &pair.b);
    let aba = matrix::product(r, a.n, &[a, b, a]);
    let bab = matrix::product(r, a.n, &[b, a, b]);
    let spectrum_of = |m: &Matrix<R::E>| {
        (triangular(r, m, true) || triangular(r, m, false)) && same_multiset(&diagonal(m), &spec.lambdas)
    };
    let det_a = det(r, a);
    let prod = product(r, &spec.lambdas);
    let mut checks = vec![
        Check { name: "ABA = BAB".into(), pass: matrix::equal(r, &aba, &bab) },
        Check { name: "spectrum of A".into(), pass: spectrum_of(a) },
        Check { name: "spectrum of B".into(), pass: spectrum_of(b) },
        Check { name: "det A = product of eigenvalues".into(), pass: det_a == prod },
        Check { name: "det B = det A".into(), pass: det(r, b) == det_a },
    ];
    if spec.k() == 4 {
        let rt = spec.root.as_ref().expect("k = 4 carries a root");
        checks.push(Check { name: "r^2 = det A".into(), pass: r.mul(rt, rt) == det_a });
    }
    checks
}

/// Variables and spec for the symbolic model of dimension `k` in {2, 3, 4}.
pub fn symbolic_spec(k: usize) -> Result<(Exact, RepSpec<LaurentPoly>), B3Error> {
    let names: Vec<String> = match k {
        2 | 3 => (1..=k).map(|i| format!("l{i}")).collect(),
        4 => vec!["l1".into(), "l2".into(), "l3".into(), "r".into()],
        _ => return Err(B3Error::Unsupported(k)),
    };
    let vars = Arc::new(names);
    let v = |n: &str| LaurentPoly::var(&vars, n);
    let mut lambdas = (1..=k.min(3)).map(|i| v(&format!("l{i}"))).collect::<Result<Vec<_>, _>>()?;
    let mut root = None;
    if k == 4 {
        let exps = vec![-1, -1, -1, 2];
        lambdas.push(LaurentPoly::monomial(&vars, 1, exps)?);
        root = Some(v("r")?);
    }
    Ok((Exact { vars }, RepSpec { lambdas, root }))
}

/// Root branch of a random spec: the index into the sorted roots of
/// `X^e - det A` in `F_p`.
pub type Branch = usize;

/// Draws nonzero eigenvalues from the seeded generator and, for `k = 4, 5`,
/// picks root number `branch` of `X^e - det A`, redrawing until one exists.
pub fn random_spec(field: PrimeField, k: usize, seed: u64, branch: Branch) -> Result<RepSpec<u64>, B3Error> {
    if !(2..=5).contains(&k) {
        return Err(B3Error::Unsupported(k));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = field.modulus();
    let e: u32 = match k {
        4 => 2,
        5 => 5,
        _ => 0,
    };
    const TRIES: u32 = 1000;
    for _ in 0..TRIES {
        let lambdas: Vec<u64> = (0..k).map(|_| rng.random_range(1..p)).collect();
        if e == 0 {
            return Ok(RepSpec { lambdas, root: None });
        }
        let d = lambdas.iter().fold(1, |acc, &x| field.mul(acc, x));
        let mut f = vec![0u64; e as usize + 1];
        f[0] = field.neg(d);
        f[e as usize] = 1;
        let roots = field.roots(&f);
        if let Some(&root) = roots.get(branch) {
            return Ok(RepSpec { lambdas, root: Some(root) });
        }
    }
    Err(B3Error::NoRoot { p, e, tries: TRIES })
}

/// One evaluated model, as reported by the command line tool.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct B3Record {
    pub k: usize,
    pub prime: u64,
    pub seed: u64,
    pub branch: Branch,
    pub lambdas: Vec<u64>,
    pub root: Option<u64>,
    pub condition: bool,
    /// `None` where no oracle is in scope (`k = 5`).
    pub oracle: Option<bool>,
    pub checks: Vec<Check>,
    pub a: Option<Vec<Vec<u64>>>,
    pub b: Option<Vec<Vec<u64>>>,
}

impl B3Record {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass) && self.oracle.is_none_or(|o| o == self.condition)
    }
}

fn rows(m: &Matrix<u64>) -> Vec<Vec<u64>> {
    (0..m.n).map(|i| (0..m.n).map(|j| *m.get(i, j)).collect()).collect()
}

/// Builds, checks and classifies one random model over `F_p`.
pub fn evaluate(field: PrimeField, k: usize, seed: u64, branch: Branch) -> Result<B3Record, B3Error> {
    let spec = random_spec(field, k, seed, branch)?;
    let r = ModP::over(field);
    let condition = irreducibility_condition(&r, &spec)?;
    let mut rec = B3Record {
        k,
        prime: field.modulus(),
        seed,
        branch,
        lambdas: spec.lambdas.clone(),
        root: spec.root,
        condition,
        oracle: None,
        checks: Vec::new(),
        a: None,
        b: None,
    };
    if k <= 4 {
        let pair = build_rep(&r, &spec)?;
        rec.checks = verify_rep(&r, &spec, &pair);
        rec.oracle = Some(brute_irreducible(&r, &pair));
        rec.a = Some(rows(&pair.a));
        rec.b = Some(rows(&pair.b));
    }
    Ok(rec)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn symbolic_braid_relation_k2_k3_k4() {
        for k in 2..=4 {
            let (r, spec) = symbolic_spec(k).unwrap();
            let pair = build_rep(&r, &spec).unwrap();
            for c in verify_rep(&r, &spec, &pair) {
                assert!(c.pass, "k = {k}: {}", c.name);
            }
        }
    }

    #[test]
    fn two_dimensional_condition_at_one_one() {
        let r = ModP::over(f(101));
        let spec = RepSpec { lambdas: vec![1, 1], root: None };
        assert_eq!(condition_value(&r, &spec).unwrap(), 1);
        assert!(irreducibility_condition(&r, &spec).unwrap());
    }

    #[test]
    fn sixth_root_of_unity_kills_the_two_dimensional_condition() {
        let field = f(103); // 103 = 1 mod 6
        let r = ModP::over(field);
        let omega = crate::hecke::primitive_root_of_unity(field, 6).unwrap();
        let spec = RepSpec { lambdas: vec![1, omega], root: None };
        assert!(!irreducibility_condition(&r, &spec).unwrap());
        assert!(!brute_irreducible(&r, &build_rep(&r, &spec).unwrap()));
    }

    #[test]
    fn first_factor_of_the_three_dimensional_condition() {
        let field = f(101);
        let r = ModP::over(field);
        // l1^2 = -l2 l3 with l1 = 3, l2 = 5
        let l3 = field.mul(field.neg(9), field.inv(5).unwrap());
        let spec = RepSpec { lambdas: vec![3, 5, l3], root: None };
        assert!(!irreducibility_condition(&r, &spec).unwrap());
    }

    #[test]
    fn validation_errors() {
        let r = ModP::over(f(101));
        assert_eq!(validate(&r, &RepSpec { lambdas: vec![1], root: None }), Err(B3Error::Unsupported(1)));
        assert_eq!(validate(&r, &RepSpec { lambdas: vec![1, 0], root: None }), Err(B3Error::ZeroEigenvalue(2)));
        assert_eq!(validate(&r, &RepSpec { lambdas: vec![1, 1, 1, 1], root: None }), Err(B3Error::MissingRoot(4)));
        assert_eq!(validate(&r, &RepSpec { lambdas: vec![1, 1, 1, 2], root: Some(1) }), Err(B3Error::RootMismatch));
        let five = RepSpec { lambdas: vec![1; 5], root: Some(1) };
        assert_eq!(build_rep(&r, &five), Err(B3Error::Unsupported(5)));
    }

    #[test]
    fn random_specs_carry_consistent_roots() {
        let field = f(1_000_003);
        for branch in 0..2 {
            let s = random_spec(field, 4, 7, branch).unwrap();
            let r = ModP::over(field);
            assert!(validate(&r, &s).is_ok());
        }
        let s = random_spec(field, 5, 7, 0).unwrap();
        assert!(validate(&ModP::over(field), &s).is_ok());
    }

    #[test]
    fn determinant_by_cofactors() {
        let r = ModP::over(f(101));
        let m = Matrix { n: 3, data: vec![2, 0, 1, 1, 3, 2, 1, 1, 1] };
        // 2(3 - 2) - 0 + 1(1 - 3) = 0
        assert_eq!(det(&r, &m), 0);
        let m = Matrix { n: 2, data: vec![1, 2, 3, 4] };
        assert_eq!(det(&r, &m), r.field().from_i64(-2));
    }
}
