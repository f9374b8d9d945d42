//! A change of basis that puts the three-dimensional model into opposite
//! triangular forms.
//!
//! With `D` below, `D^-1 A D` is lower triangular with diagonal
//! `(l1, l2, l3)` and `D^-1 B D` is upper triangular with diagonal
//! `(l2, l3, l1)`. Shapes are checked through the adjugate, so the same code
//! runs over `F_p` and over Laurent polynomials, where `det D` is not a unit.

use super::{det, RepPair, RepSpec};
use crate::hecke::matrix::{self, Matrix};
use crate::hecke::{Check, Coeff};

/// `l1 (l1^2 + l2 l3) (l3^2 + l1 l2)^2`.
pub fn conjugator_det_formula<R: Coeff>(r: &R, l: &[R::E]) -> R::E {
    let m = |x: &R::E, y: &R::E| r.mul(x, y);
    let f1 = r.add(&m(&l[0], &l[0]), &m(&l[1], &l[2]));
    let f3 = r.add(&m(&l[2], &l[2]), &m(&l[0], &l[1]));
    m(&m(&l[0], &f1), &m(&f3, &f3))
}

fn conjugator<R: Coeff>(r: &R, l: &[R::E]) -> Matrix<R::E> {
    let (l1, l2, l3) = (&l[0], &l[1], &l[2]);
    let m = |x: &R::E, y: &R::E| r.mul(x, y);
    let s = |x: &R::E, y: &R::E| r.sub(x, y);
    let a = |x: &R::E, y: &R::E| r.add(x, y);
    let two = r.add(&r.one(), &r.one());
    let z = r.zero();
    let l3s_l12 = a(&m(l3, l3), &m(l1, l2));
    let d = vec![
        r.neg(&l3s_l12),
        m(l1, &s(l3, l1)),
        m(&s(l2, l3), &s(l3, l1)),
        m(&s(l2, l1), &l3s_l12),
        // l1 (2 l2 l1 - l1^2 + 2 l1 l3 - l3 l2)
        m(l1, &s(&a(&s(&m(&two, &m(l2, l1)), &m(l1, l1)), &m(&two, &m(l1, l3))), &m(l3, l2))),
        m(&s(l1, l3), &a(&m(l2, l2), &m(l1, l3))),
        z,
        m(l1, &s(l1, l3)),
        r.neg(&m(l3, &a(l1, l2))),
    ];
    Matrix { n: 3, data: d }
}

fn adjugate3<R: Coeff>(r: &R, d: &Matrix<R::E>) -> Matrix<R::E> {
    let mut out = matrix::zeros(r, 3);
    for i in 0..3 {
        for j in 0..3 {
            // Cofactor C_ji lands at (i, j).
            let rows: Vec<usize> = (0..3).filter(|&x| x != j).collect();
            let cols: Vec<usize> = (0..3).filter(|&x| x != i).collect();
            let minor = r.sub(
                &r.mul(d.get(rows[0], cols[0]), d.get(rows[1], cols[1])),
                &r.mul(d.get(rows[0], cols[1]), d.get(rows[1], cols[0])),
            );
            out.set(i, j, if (i + j) % 2 == 0 { minor } else { r.neg(&minor) });
        }
    }
    out
}

/// Outcome of [`ordered_triangular_conjugate`].
#[derive(Clone, Debug, PartialEq)]
pub struct TriangularForm<E> {
    pub d: Matrix<E>,
    pub checks: Vec<Check>,
}

impl<E> TriangularForm<E> {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Builds `D` for a three-dimensional model and checks `det D` against the
/// closed formula and the two triangular shapes of `D^-1 A D`, `D^-1 B D`.
pub fn ordered_triangular_conjugate<R: Coeff>(
    r: &R,
    spec: &RepSpec<R::E>,
    pair: &RepPair<R::E>,
) -> Result<TriangularForm<R::E>, super::B3Error> {
    if spec.k() != 3 {
        return Err(super::B3Error::Unsupported(spec.k()));
    }
    let l = &spec.lambdas;
    let d = conjugator(r, l);
    let det_d = det(r, &d);
    if r.is_zero(&det_d) {
        return Err(super::B3Error::SingularConjugator);
    }
    let adj = adjugate3(r, &d);
    // adj(D) M D = det(D) D^-1 M D
    let ta = matrix::product(r, 3, &[&adj, &pair.a, &d]);
    let tb = matrix::product(r, 3, &[&adj, &pair.b, &d]);
    let shaped = |t: &Matrix<R::E>, lower: bool, diag: [usize; 3]| {
        (0..3).all(|i| {
            (0..3).all(|j| {
                let off = if lower { j > i } else { j < i };
                if off {
                    r.is_zero(t.get(i, j))
                } else if i == j {
                    *t.get(i, i) == r.mul(&det_d, &l[diag[i]])
                } else {
                    true
                }
            })
        })
    };
    let checks = vec![
        Check { name: "det D formula".into(), pass: det_d == conjugator_det_formula(r, l) },
        Check { name: "D^-1 A D lower triangular, diagonal (l1, l2, l3)".into(), pass: shaped(&ta, true, [0, 1, 2]) },
        Check { name: "D^-1 B D upper triangular, diagonal (l2, l3, l1)".into(), pass: shaped(&tb, false, [1, 2, 0]) },
    ];
    Ok(TriangularForm { d, checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::b3::{build_rep, symbolic_spec, B3Error};
    use crate::hecke::ModP;
    use crate::ring::PrimeField;

    #[test]
    fn symbolic_conjugation() {
        let (r, spec) = symbolic_spec(3).unwrap();
        let pair = build_rep(&r, &spec).unwrap();
        let t = ordered_triangular_conjugate(&r, &spec, &pair).unwrap();
        for c in &t.checks {
            assert!(c.pass, "{}", c.name);
        }
    }

    #[test]
    fn singular_on_the_condition_locus() {
        let field = PrimeField::new(101).unwrap();
        let r = ModP::over(field);
        // l1^2 + l2 l3 = 0 makes det D vanish.
        let l3 = field.mul(field.neg(4), field.inv(7).unwrap());
        let spec = RepSpec { lambdas: vec![2, 7, l3], root: None };
        let pair = build_rep(&r, &spec).unwrap();
        assert_eq!(ordered_triangular_conjugate(&r, &spec, &pair), Err(B3Error::SingularConjugator));
    }
}
