//! Freeness certificates: closed left-multiplication matrices on a spanning
//! set, re-verified as full matrix identities.

use serde_json::json;

use super::coeff::Coeff;
use super::enumerate::{Enumerator, Relation};
use super::matrix::{self, Matrix};
use super::{eq1_coeffs, HeckeError, HeckeSpec};
use crate::presentations::{GroupId, SpanningSet, Word};

/// Default ceiling on vectors defined during one enumeration.
pub const DEFAULT_VECTOR_CAP: usize = 400_000;

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
}

#[derive(Clone, Debug)]
pub struct FreenessCertificate<E> {
    pub group: GroupId,
    pub mode: &'static str,
    pub seed: Option<u64>,
    pub prime: Option<u64>,
    pub basis: SpanningSet,
    /// Full braid word of each basis element.
    pub basis_words: Vec<Word>,
    pub generators: Vec<String>,
    /// Indexed by letter: `2g` is `L_g`, `2g + 1` is `L_{g^-1}`. Entry
    /// `(i, j)` is the coefficient of `b_i` in `g b_j`.
    pub matrices: Vec<Matrix<E>>,
    pub checks: Vec<Check>,
    pub rank: usize,
    pub vectors_defined: usize,
}

impl<E: Clone> FreenessCertificate<E> {
    pub fn n(&self) -> usize {
        self.basis.len()
    }

    /// `L_w = L_{x_1} ... L_{x_m}` for `w = x_1 ... x_m`.
    pub fn word_matrix<R: Coeff<E = E>>(&self, r: &R, w: &Word) -> Matrix<E> {
        let mats: Vec<&Matrix<E>> = w.letters().map(|(g, inv)| &self.matrices[2 * g + inv as usize]).collect();
        matrix::product(r, self.n(), &mats)
    }

    /// `w v`, applying letters right to left.
    pub fn apply_word<R: Coeff<E = E>>(&self, r: &R, w: &Word, v: &[E]) -> Vec<E> {
        let letters: Vec<usize> = w.letters().map(|(g, inv)| 2 * g + inv as usize).collect();
        let mut v = v.to_vec();
        for &x in letters.iter().rev() {
            let m = &self.matrices[x];
            v = (0..self.n())
                .map(|i| {
                    let mut s = r.zero();
                    for (j, vj) in v.iter().enumerate() {
                        let mij = m.get(i, j);
                        if !r.is_zero(mij) && !r.is_zero(vj) {
                            s = r.add(&s, &r.mul(mij, vj));
                        }
                    }
                    s
                })
                .collect();
        }
        v
    }

    /// Deterministic JSON: header, basis, sparse row-major triplets, checks.
    pub fn to_json<R: Coeff<E = E>>(&self, r: &R) -> String {
        let mats: Vec<serde_json::Value> = self
            .matrices
            .iter()
            .enumerate()
            .map(|(x, m)| {
                let mut trip = Vec::new();
                for i in 0..m.n {
                    for j in 0..m.n {
                        let v = m.get(i, j);
                        if !r.is_zero(v) {
                            trip.push(json!([i, j, r.show(v)]));
                        }
                    }
                }
                let g = &self.generators[x / 2];
                let letter = if x % 2 == 0 { g.clone() } else { format!("{g}^-1") };
                json!({ "letter": letter, "entries": trip })
            })
            .collect();
        let doc = json!({
            "group": self.group.to_string(),
            "mode": self.mode,
            "seed": self.seed,
            "prime": self.prime,
            "rank": self.rank,
            "basis": self.basis_words.iter().map(|w| w.display(&self.generators)).collect::<Vec<_>>(),
            "matrices": mats,
            "checks": self.checks,
        });
        serde_json::to_string_pretty(&doc).expect("serializable")
    }
}

fn letters(w: &Word) -> Vec<usize> {
    w.letters().map(|(g, inv)| 2 * g + inv as usize).collect()
}

fn relations<R: Coeff>(spec: &HeckeSpec, r: &R) -> Result<Vec<Relation<R::E>>, HeckeError> {
    let p = &spec.presentation;
    let mut rels = Vec::new();
    for g in 0..p.ngens() {
        rels.push(Relation::Inverse(2 * g));
        rels.push(Relation::Inverse(2 * g + 1));
    }
    for g in 0..p.ngens() {
        let a = eq1_coeffs(&spec.class_params(spec.class_of[g]));
        let coeffs = a.iter().map(|x| r.lift(x)).collect::<Result<_, _>>()?;
        rels.push(Relation::Poly { letter: 2 * g, coeffs });
    }
    for (l, rhs) in &p.relations {
        rels.push(Relation::Braid { lhs: letters(l), rhs: letters(rhs) });
    }
    Ok(rels)
}

pub fn certify_freeness<R: Coeff>(
    spec: &HeckeSpec,
    ring: &R,
    basis: &SpanningSet,
) -> Result<FreenessCertificate<R::E>, HeckeError> {
    certify_freeness_with_cap(spec, ring, basis, DEFAULT_VECTOR_CAP)
}

pub fn certify_freeness_with_cap<R: Coeff>(
    spec: &HeckeSpec,
    ring: &R,
    basis: &SpanningSet,
    cap: usize,
) -> Result<FreenessCertificate<R::E>, HeckeError> {
    let p = &spec.presentation;
    let z = &p.center_word;
    let basis_words: Vec<Word> = basis.words.iter().map(|w| w.full_word(z)).collect();
    let traced: Vec<Vec<usize>> = basis_words.iter().map(letters).collect();
    let mut e = Enumerator::new(ring, p.ngens(), relations(spec, ring)?, cap);
    let ends = e.trace(&traced)?;
    let out = e.run(&ends)?;

    let n = basis.len();
    let expected = spec.group_order as usize;
    let dimension = out.live.len();
    let deficient = |out: &super::enumerate::Enumerated<R::E>| {
        let rank = ring.rank(&dense_rows(ring, &out.traced, dimension));
        HeckeError::RankDeficient { rank, expected, dimension }
    };
    if dimension != n || n != expected {
        return Err(deficient(&out));
    }
    // Coordinates of the basis in the enumerated module, column per word.
    // When every basis vector survived this is a permutation matrix.
    let mut t = matrix::zeros(ring, n);
    for (j, v) in out.traced.iter().enumerate() {
        for (i, c) in v {
            t.set(*i as usize, j, c.clone());
        }
    }
    let Some(t_inv) = matrix::inverse(ring, &t) else {
        return Err(deficient(&out));
    };
    let mut matrices = Vec::with_capacity(2 * p.ngens());
    for imgs in &out.images {
        let mut m = matrix::zeros(ring, n);
        for (k, v) in imgs.iter().enumerate() {
            for (i, c) in v {
                m.set(*i as usize, k, c.clone());
            }
        }
        matrices.push(matrix::mul(ring, &t_inv, &matrix::mul(ring, &m, &t)));
    }
    let point = ring.point();
    let mut cert = FreenessCertificate {
        group: spec.group,
        mode: ring.mode_name(),
        seed: point.map(|pt| pt.seed),
        prime: point.map(|pt| pt.field.modulus()),
        basis: basis.clone(),
        basis_words,
        generators: p.generators.clone(),
        matrices,
        checks: Vec::new(),
        rank: n,
        vectors_defined: out.vectors_defined,
    };
    cert.checks = run_checks(spec, ring, &cert)?;
    if let Some(bad) = cert.checks.iter().find(|c| !c.pass) {
        return Err(HeckeError::CheckFailed(bad.name.clone()));
    }
    Ok(cert)
}

fn dense_rows<R: Coeff>(ring: &R, rows: &[Vec<(u32, R::E)>], dimension: usize) -> Vec<Vec<R::E>> {
    rows.iter()
        .map(|v| {
            let mut row = vec![ring.zero(); dimension];
            for (i, c) in v {
                row[*i as usize] = c.clone();
            }
            row
        })
        .collect()
}

fn run_checks<R: Coeff>(spec: &HeckeSpec, r: &R, cert: &FreenessCertificate<R::E>) -> Result<Vec<Check>, HeckeError> {
    let p = &spec.presentation;
    let n = cert.n();
    let id = matrix::identity(r, n);
    let mut checks = Vec::new();
    for g in 0..p.ngens() {
        let (a, b) = (&cert.matrices[2 * g], &cert.matrices[2 * g + 1]);
        let pass = matrix::equal(r, &matrix::mul(r, a, b), &id) && matrix::equal(r, &matrix::mul(r, b, a), &id);
        checks.push(Check { name: format!("inverse {}", p.generators[g]), pass });
    }
    for g in 0..p.ngens() {
        let a = &cert.matrices[2 * g];
        let mut prod = id.clone();
        for u in spec.class_params(spec.class_of[g]) {
            prod = matrix::mul(r, &prod, &matrix::sub_scalar(r, a, &r.lift(&u)?));
        }
        checks.push(Check { name: format!("polynomial {}", p.generators[g]), pass: matrix::is_zero(r, &prod) });
    }
    for (l, rhs) in &p.relations {
        let pass = matrix::equal(r, &cert.word_matrix(r, l), &cert.word_matrix(r, rhs));
        checks.push(Check { name: format!("braid {} = {}", p.show(l), p.show(rhs)), pass });
    }
    let lz = cert.word_matrix(r, &p.center_word);
    for g in 0..p.ngens() {
        let a = &cert.matrices[2 * g];
        let pass = matrix::equal(r, &matrix::mul(r, &lz, a), &matrix::mul(r, a, &lz));
        checks.push(Check { name: format!("center commutes with {}", p.generators[g]), pass });
    }
    checks.push(Check { name: "rank equals group order".into(), pass: n as u64 == spec.group_order });
    Ok(checks)
}

/// Dimension of the algebra at this point, by enumerating from the identity
/// alone. Informational: no basis is involved.
pub fn discover_dimension<R: Coeff>(spec: &HeckeSpec, ring: &R, cap: usize) -> Result<usize, HeckeError> {
    let p = &spec.presentation;
    let mut e = Enumerator::new(ring, p.ngens(), relations(spec, ring)?, cap);
    let ends = e.trace(&[Vec::new()])?;
    Ok(e.run(&ends)?.live.len())
}

/// Coordinates of `b_i b_j` in the basis.
pub fn structure_constants<R: Coeff>(cert: &FreenessCertificate<R::E>, r: &R, i: usize, j: usize) -> Vec<R::E> {
    let mut e = vec![r.zero(); cert.n()];
    e[j] = r.one();
    cert.apply_word(r, &cert.basis_words[i], &e)
}
