//! At roots of unity the Hecke algebra specializes to the group algebra;
//! the certificate matrices must then realize the regular representation.

use serde::{Deserialize, Serialize};

use super::coeff::{Coeff, ModP};
use super::matrix::{self, charpoly_mod_p};
use super::{certify_freeness, HeckeError, HeckeSpec};
use crate::group_engine::{CosetTable, Perm};
use crate::presentations::SpanningSet;
use crate::ring::{PrimeField, SpecPoint};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupAlgebraReport {
    pub prime: u64,
    /// `L_g^{e_g} = I` per generator.
    pub finite_order: Vec<bool>,
    /// `charpoly(L_g)` equals that of `g` acting regularly, per generator.
    pub generator_charpolys: Vec<bool>,
    /// `charpoly(L_z)` equals that of `z` acting regularly.
    pub center_charpoly: bool,
    /// Dimension of the span of the orbit of a random vector.
    pub algebra_dimension: usize,
    pub pass: bool,
}

/// `det(X I - P)` for a permutation matrix: the product of `X^l - 1` over
/// its cycles, lowest degree first.
pub fn regular_charpoly(field: PrimeField, perm: &Perm) -> Vec<u64> {
    let mut poly = vec![1u64];
    for l in perm.cycle_lengths() {
        let mut next = vec![0u64; poly.len() + l];
        for (d, &c) in poly.iter().enumerate() {
            next[d + l] = field.add(next[d + l], c);
            next[d] = field.sub(next[d], c);
        }
        poly = next;
    }
    poly
}

/// Runs the check at the roots-of-unity point of `field`.
pub fn group_algebra_check(
    spec: &HeckeSpec,
    basis: &SpanningSet,
    table: &CosetTable,
    field: PrimeField,
) -> Result<GroupAlgebraReport, HeckeError> {
    let point = spec.roots_of_unity_point(field)?;
    group_algebra_check_at(spec, basis, table, point)
}

/// Same check at an arbitrary point; off the roots of unity it must fail.
pub fn group_algebra_check_at(
    spec: &HeckeSpec,
    basis: &SpanningSet,
    table: &CosetTable,
    point: SpecPoint,
) -> Result<GroupAlgebraReport, HeckeError> {
    let field = point.field;
    let ring = ModP::new(point);
    let cert = certify_freeness(spec, &ring, basis)?;
    let n = cert.n();
    let p = &spec.presentation;
    let id = matrix::identity(&ring, n);

    let mut finite_order = Vec::new();
    let mut generator_charpolys = Vec::new();
    for g in 0..p.ngens() {
        let a = &cert.matrices[2 * g];
        let e = spec.classes[spec.class_of[g]].order as usize;
        let pw = matrix::product(&ring, n, &vec![a; e]);
        finite_order.push(matrix::equal(&ring, &pw, &id));
        generator_charpolys.push(charpoly_mod_p(&ring, a) == regular_charpoly(field, table.action(g)));
    }
    let lz = cert.word_matrix(&ring, &p.center_word);
    let center_charpoly = charpoly_mod_p(&ring, &lz) == regular_charpoly(field, &table.eval_word(&p.center_word));

    let algebra_dimension = orbit_span(&ring, &cert.matrices, n);
    let pass = finite_order.iter().all(|&b| b)
        && generator_charpolys.iter().all(|&b| b)
        && center_charpoly
        && algebra_dimension as u64 == spec.group_order;
    Ok(GroupAlgebraReport {
        prime: field.modulus(),
        finite_order,
        generator_charpolys,
        center_charpoly,
        algebra_dimension,
        pass,
    })
}

/// Dimension of the smallest subspace containing a fixed pseudo-random
/// vector and stable under all `mats`. For a representation of a group
/// algebra that is a lower bound on the dimension of the generated algebra.
fn orbit_span(r: &ModP, mats: &[matrix::Matrix<u64>], n: usize) -> usize {
    let f = r.field();
    let mut x = 0x9e37_79b9_u64;
    let start: Vec<u64> = (0..n)
        .map(|_| {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (x >> 33) % f.modulus()
        })
        .collect();
    let mut basis = matrix::Echelon::new(r);
    let mut queue = vec![start];
    while let Some(v) = queue.pop() {
        if !basis.insert(v.clone()) {
            continue;
        }
        if basis.len() == n {
            break;
        }
        for m in mats {
            let w: Vec<u64> = (0..n).map(|i| (0..n).fold(0, |s, j| r.add(&s, &r.mul(m.get(i, j), &v[j])))).collect();
            queue.push(w);
        }
    }
    basis.len()
}
