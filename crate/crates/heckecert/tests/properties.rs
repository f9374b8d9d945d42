use std::sync::Arc;

use proptest::prelude::*;

use heckecert::b3::{condition_value, RepSpec};
use heckecert::hecke::matrix::{self, Matrix};
use heckecert::hecke::ModP;
use heckecert::presentations::Word;
use heckecert::ring::{specialize, LaurentPoly, PrimeField, SpecPoint, Vars};

const P: u64 = 1_000_003;

fn vars() -> Vars {
    Arc::new(vec!["x".to_string(), "y".to_string(), "z".to_string()])
}

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-5i64..=5, prop::collection::vec(-3i32..=3, 3)), 0..5).prop_map(|terms| {
        let v = vars();
        terms.into_iter().fold(LaurentPoly::zero(&v), |acc, (c, e)| &acc + &LaurentPoly::monomial(&v, c, e).unwrap())
    })
}

fn word() -> impl Strategy<Value = Word> {
    prop::collection::vec((0usize..3, -3i32..=3), 0..8).prop_map(Word::from_syllables)
}

fn field() -> PrimeField {
    PrimeField::new(P).unwrap()
}

fn modp_matrix(n: usize) -> impl Strategy<Value = Matrix<u64>> {
    prop::collection::vec(0..P, n * n).prop_map(move |data| Matrix { n, data })
}

proptest! {
    #[test]
    fn laurent_ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).exact_div(&b), Some(a));
    }

    #[test]
    fn display_parses_back(a in poly()) {
        prop_assert_eq!(LaurentPoly::parse(&a.to_string(), &vars()).unwrap(), a);
    }

    #[test]
    fn specialization_is_a_ring_map(a in poly(), b in poly(), seed in any::<u64>()) {
        let pt = SpecPoint::random(field(), seed, &vars(), &[]);
        let (sa, sb) = (specialize(&a, &pt).unwrap(), specialize(&b, &pt).unwrap());
        let f = field();
        prop_assert_eq!(specialize(&(&a * &b), &pt).unwrap().value, f.mul(sa.value, sb.value));
        prop_assert_eq!(specialize(&(&a + &b), &pt).unwrap().value, f.add(sa.value, sb.value));
    }

    #[test]
    fn word_inverse_cancels(w in word(), v in word()) {
        prop_assert!(w.concat(&w.invert()).is_identity());
        prop_assert_eq!(w.invert().invert(), w.clone());
        prop_assert_eq!(w.concat(&v).invert(), v.invert().concat(&w.invert()));
        prop_assert_eq!(w.power(3), w.concat(&w).concat(&w));
    }

    #[test]
    fn matrix_inverse_mod_p(a in modp_matrix(4)) {
        let r = ModP::over(field());
        if let Some(inv) = matrix::inverse(&r, &a) {
            prop_assert!(matrix::equal(&r, &matrix::mul(&r, &a, &inv), &matrix::identity(&r, 4)));
            prop_assert!(matrix::equal(&r, &matrix::mul(&r, &inv, &a), &matrix::identity(&r, 4)));
        }
    }

    #[test]
    fn charpoly_trace_and_determinant(a in modp_matrix(3)) {
        let r = ModP::over(field());
        let f = field();
        let cp = matrix::charpoly_mod_p(&r, &a);
        prop_assert_eq!(cp.len(), 4);
        prop_assert_eq!(cp[3], 1);
        let trace = (0..3).fold(0, |s, i| f.add(s, *a.get(i, i)));
        prop_assert_eq!(cp[2], f.neg(trace));
        // Constant term is det(-A) = -det(A) for n = 3.
        prop_assert_eq!(cp[0], f.neg(heckecert::b3::det(&r, &a)));
    }

    #[test]
    fn condition_is_symmetric(l in prop::collection::vec(1..P, 3)) {
        let r = ModP::over(field());
        let v2 = |x: Vec<u64>| condition_value(&r, &RepSpec { lambdas: x, root: None }).unwrap();
        prop_assert_eq!(v2(vec![l[0], l[1]]), v2(vec![l[1], l[0]]));
        let base = v2(l.clone());
        for perm in [[1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]] {
            prop_assert_eq!(v2(perm.iter().map(|&i| l[i]).collect()), base);
        }
    }
}
