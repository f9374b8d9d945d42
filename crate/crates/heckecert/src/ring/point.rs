//! Specialization points: seeded assignments of nonzero residues to parameters.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::field::{FieldElem, PrimeField};
use super::laurent::LaurentPoly;
use super::RingError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecPoint {
    pub field: PrimeField,
    pub seed: u64,
    /// Parameter name to nonzero residue.
    pub assignment: BTreeMap<String, u64>,
}

impl SpecPoint {
    /// Draws a uniform nonzero residue for every name. Each slice in
    /// `distinct` names a group of parameters that must be pairwise distinct;
    /// a colliding draw is simply redrawn.
    pub fn random(field: PrimeField, seed: u64, names: &[String], distinct: &[Vec<String>]) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = field.modulus();
        let mut assignment = BTreeMap::new();
        for name in names {
            let group = distinct.iter().find(|g| g.contains(name));
            loop {
                let v = rng.random_range(1..p);
                let clash =
                    group.is_some_and(|g| g.iter().any(|other| other != name && assignment.get(other) == Some(&v)));
                if !clash {
                    assignment.insert(name.clone(), v);
                    break;
                }
            }
        }
        SpecPoint { field, seed, assignment }
    }

    /// A point with explicitly chosen values (zero values are rejected).
    pub fn fixed(field: PrimeField, values: impl IntoIterator<Item = (String, u64)>) -> Result<Self, RingError> {
        let mut assignment = BTreeMap::new();
        for (k, v) in values {
            let v = v % field.modulus();
            if v == 0 {
                return Err(RingError::ZeroAssignment(k));
            }
            assignment.insert(k, v);
        }
        Ok(SpecPoint { field, seed: 0, assignment })
    }

    pub fn get(&self, name: &str) -> Option<FieldElem> {
        self.assignment.get(name).map(|&v| self.field.elem(v))
    }
}

/// Evaluates `a` at `pt`; negative exponents use field inverses.
pub fn specialize(a: &LaurentPoly, pt: &SpecPoint) -> Result<FieldElem, RingError> {
    let f = pt.field;
    let p = f.modulus();
    let mut values = Vec::with_capacity(a.vars().len());
    for name in a.vars().iter() {
        let v = *pt.assignment.get(name).ok_or_else(|| RingError::UnknownVariable(name.clone()))?;
        values.push(v);
    }
    let inverses: Vec<u64> = values.iter().map(|&v| f.inv(v).expect("assignments are nonzero")).collect();
    let mut acc = 0u64;
    for (exps, c) in a.terms() {
        let cm = (c.abs() % BigInt::from(p)).to_u64().expect("residue fits");
        let mut t = if c.is_negative() { f.neg(cm) } else { cm };
        for (k, &e) in exps.iter().enumerate() {
            if e > 0 {
                t = f.mul(t, f.pow(values[k], e as u64));
            } else if e < 0 {
                t = f.mul(t, f.pow(inverses[k], e.unsigned_abs() as u64));
            }
        }
        acc = f.add(acc, t);
    }
    Ok(f.elem(acc))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::ring::Vars;

    fn vars(names: &[&str]) -> Vars {
        Arc::new(names.iter().map(|s| s.to_string()).collect())
    }

    #[test]
    fn direct_product_mod_101() {
        let v = vars(&["u1", "u2"]);
        let a = LaurentPoly::parse("u1*u2", &v).unwrap();
        let pt = SpecPoint::fixed(PrimeField::new(101).unwrap(), [("u1".into(), 3), ("u2".into(), 5)]).unwrap();
        assert_eq!(specialize(&a, &pt).unwrap().value, 15);
    }

    #[test]
    fn inverse_mod_7() {
        let v = vars(&["u1"]);
        let a = LaurentPoly::parse("u1^-1", &v).unwrap();
        let pt = SpecPoint::fixed(PrimeField::new(7).unwrap(), [("u1".into(), 3)]).unwrap();
        assert_eq!(specialize(&a, &pt).unwrap().value, 5);
    }

    #[test]
    fn zero_assignment_rejected() {
        let f = PrimeField::new(7).unwrap();
        assert!(SpecPoint::fixed(f, [("x".into(), 14)]).is_err());
    }

    #[test]
    fn distinctness_is_enforced() {
        // A tiny field forces collisions, which must be redrawn.
        let f = PrimeField::new(5).unwrap();
        let names: Vec<String> = ["a", "b", "c", "d"].iter().map(|s| s.to_string()).collect();
        for seed in 0..50 {
            let pt = SpecPoint::random(f, seed, &names, std::slice::from_ref(&names));
            let mut vals: Vec<u64> = pt.assignment.values().copied().collect();
            vals.sort();
            vals.dedup();
            assert_eq!(vals.len(), 4);
        }
    }

    #[test]
    fn same_seed_same_point() {
        let f = PrimeField::new(crate::ring::DEFAULT_PRIME).unwrap();
        let names: Vec<String> = vec!["x".into(), "y".into()];
        assert_eq!(SpecPoint::random(f, 9, &names, &[]), SpecPoint::random(f, 9, &names, &[]));
    }
}
