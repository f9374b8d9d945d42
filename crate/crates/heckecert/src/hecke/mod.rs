//! The generic Hecke algebra of a catalog group and certificates that a
//! given spanning set is a basis of it at a specialization point.

mod certificate;
mod coeff;
mod enumerate;
mod group_algebra;
pub mod matrix;

use std::sync::Arc;

use serde::{Deserialize, Serialize};

pub use certificate::{
    certify_freeness, certify_freeness_with_cap, discover_dimension, structure_constants, Check, FreenessCertificate,
    DEFAULT_VECTOR_CAP,
};
pub use coeff::{Coeff, Exact, ModP};
pub use group_algebra::{group_algebra_check, group_algebra_check_at, regular_charpoly, GroupAlgebraReport};
pub use matrix::Matrix;

use crate::presentations::{CatalogEntry, Flavor, GroupId, Presentation};
use crate::ring::{LaurentPoly, PrimeField, RingError, SpecPoint, Vars};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HeckeError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("vector enumeration exceeded the cap of {cap} vectors")]
    EnumerationCap { cap: usize },
    #[error("a relation with {support} terms has no unit coefficient to pivot on")]
    NonUnitPivot { support: usize },
    #[error("rank deficiency: rank {} of {expected} (module dimension {dimension})", rank.map_or("?".to_string(), |r| r.to_string()))]
    RankDeficient { rank: Option<usize>, expected: usize, dimension: usize },
    #[error("certificate check failed: {0}")]
    CheckFailed(String),
    #[error("generators {a} and {b} share a class but have orders {ea} and {eb}")]
    ClassOrders { a: String, b: String, ea: u32, eb: u32 },
    #[error("{0} has no spanning recipe")]
    NoRecipe(GroupId),
    #[error("F_{p} has no primitive {e}-th root of unity")]
    NoRootOfUnity { p: u64, e: u32 },
}

/// Parameters shared by one conjugacy class of generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamClass {
    pub generators: Vec<usize>,
    /// Order `e_c` of the generators in the finite group.
    pub order: u32,
    /// `u_<first generator><i>` for `i = 1..=e_c`.
    pub params: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeSpec {
    pub group: GroupId,
    /// Braid flavor.
    pub presentation: Presentation,
    pub classes: Vec<ParamClass>,
    /// Class index of each generator.
    pub class_of: Vec<usize>,
    pub group_order: u64,
}

impl HeckeSpec {
    pub fn from_entry(entry: &CatalogEntry) -> Result<Self, HeckeError> {
        let bmr = &entry.bmr;
        let mut class_of = vec![0; bmr.ngens()];
        let mut classes = Vec::new();
        for (c, gens) in bmr.classes.iter().enumerate() {
            let first = gens[0];
            let order = bmr.orders[first];
            for &g in gens {
                if bmr.orders[g] != order {
                    return Err(HeckeError::ClassOrders {
                        a: bmr.generators[first].clone(),
                        b: bmr.generators[g].clone(),
                        ea: order,
                        eb: bmr.orders[g],
                    });
                }
                class_of[g] = c;
            }
            let params = (1..=order).map(|i| format!("u_{}{i}", bmr.generators[first])).collect();
            classes.push(ParamClass { generators: gens.clone(), order, params });
        }
        Ok(HeckeSpec {
            group: entry.group,
            presentation: entry.presentation(Flavor::Braid),
            classes,
            class_of,
            group_order: bmr.group_order,
        })
    }

    pub fn param_names(&self) -> Vec<String> {
        self.classes.iter().flat_map(|c| c.params.iter().cloned()).collect()
    }

    pub fn vars(&self) -> Vars {
        Arc::new(self.param_names())
    }

    /// Uniform nonzero parameters, pairwise distinct within each class.
    pub fn random_point(&self, field: PrimeField, seed: u64) -> SpecPoint {
        let distinct: Vec<Vec<String>> = self.classes.iter().map(|c| c.params.clone()).collect();
        SpecPoint::random(field, seed, &self.param_names(), &distinct)
    }

    /// The point at which the algebra becomes the group algebra: class `c`
    /// gets the `e_c` distinct `e_c`-th roots of unity, `1` first.
    pub fn roots_of_unity_point(&self, field: PrimeField) -> Result<SpecPoint, HeckeError> {
        let mut values = Vec::new();
        for c in &self.classes {
            let zeta = primitive_root_of_unity(field, c.order)?;
            let mut x = 1u64;
            for name in &c.params {
                values.push((name.clone(), x));
                x = field.mul(x, zeta);
            }
        }
        Ok(SpecPoint::fixed(field, values)?)
    }

    /// Exact parameters of class `c` as polynomials.
    pub fn class_params(&self, c: usize) -> Vec<LaurentPoly> {
        let vars = self.vars();
        self.classes[c].params.iter().map(|n| LaurentPoly::var(&vars, n).expect("registered")).collect()
    }
}

/// A generator of the multiplicative subgroup of order `e`.
pub fn primitive_root_of_unity(field: PrimeField, e: u32) -> Result<u64, HeckeError> {
    let p = field.modulus();
    let err = HeckeError::NoRootOfUnity { p, e };
    if e == 0 || !(p - 1).is_multiple_of(e as u64) {
        return Err(err);
    }
    let mut f = vec![0u64; e as usize + 1];
    f[0] = p - 1;
    f[e as usize] = 1;
    field.roots(&f).into_iter().find(|&z| (1..e).all(|k| field.pow(z, k as u64) != 1)).ok_or(err)
}

/// Coefficients `a_0, ..., a_{e-1}` with `g^e = sum_j a_j g^j` modulo
/// `prod_i (g - u_i)`, so `a_j = (-1)^(e-j+1) e_(e-j)(u)` in elementary
/// symmetric polynomials. Indexed by `j`.
pub fn eq1_coeffs(params: &[LaurentPoly]) -> Vec<LaurentPoly> {
    let vars = params[0].vars().clone();
    // Coefficients of prod (X - u_i), lowest degree first.
    let mut c = vec![LaurentPoly::one(&vars)];
    for u in params {
        let mut next = vec![LaurentPoly::zero(&vars); c.len() + 1];
        for (d, x) in c.iter().enumerate() {
            next[d + 1] = &next[d + 1] + x;
            next[d] = &next[d] - &(x * u);
        }
        c = next;
    }
    c.pop();
    c.iter().map(|x| x.neg()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::Catalog;

    fn vars(n: usize) -> Vars {
        Arc::new((1..=n).map(|i| format!("u{i}")).collect())
    }

    fn p(v: &Vars, s: &str) -> LaurentPoly {
        LaurentPoly::parse(s, v).unwrap()
    }

    #[test]
    fn eq1_two_parameters() {
        let v = vars(2);
        let a = eq1_coeffs(&[p(&v, "u1"), p(&v, "u2")]);
        assert_eq!(a, vec![p(&v, "-u1*u2"), p(&v, "u1 + u2")]);
    }

    #[test]
    fn eq1_three_parameters() {
        let v = vars(3);
        let a = eq1_coeffs(&[p(&v, "u1"), p(&v, "u2"), p(&v, "u3")]);
        assert_eq!(a[2], p(&v, "u1 + u2 + u3"));
        assert_eq!(a[1], p(&v, "-u1*u2 - u1*u3 - u2*u3"));
        assert_eq!(a[0], p(&v, "u1*u2*u3"));
    }

    #[test]
    fn eq1_involution() {
        let v = vars(1);
        let a = eq1_coeffs(&[LaurentPoly::one(&v), LaurentPoly::one(&v).neg()]);
        assert!(a[1].is_zero());
        assert!(a[0].is_one());
    }

    #[test]
    fn eq1_constant_term_is_a_unit() {
        let v = vars(4);
        let ps: Vec<_> = (1..=4).map(|i| p(&v, &format!("u{i}"))).collect();
        assert!(eq1_coeffs(&ps)[0].unit_inverse().is_some());
    }

    #[test]
    fn parameter_layout_follows_classes() {
        let cat = Catalog::builtin().unwrap();
        let g4 = HeckeSpec::from_entry(cat.entry(GroupId::new(4).unwrap()).unwrap()).unwrap();
        assert_eq!(g4.param_names(), vec!["u_s1", "u_s2", "u_s3"]);
        let g13 = HeckeSpec::from_entry(cat.entry(GroupId::new(13).unwrap()).unwrap()).unwrap();
        assert_eq!(g13.param_names(), vec!["u_s1", "u_s2", "u_t1", "u_t2"]);
        assert_eq!(g13.class_of, vec![0, 1, 1]);
    }

    #[test]
    fn roots_of_unity_point_is_a_full_set_of_roots() {
        let cat = Catalog::builtin().unwrap();
        let spec = HeckeSpec::from_entry(cat.entry(GroupId::new(5).unwrap()).unwrap()).unwrap();
        let f = PrimeField::new(7).unwrap();
        let pt = spec.roots_of_unity_point(f).unwrap();
        let mut vals: Vec<u64> = ["u_s1", "u_s2", "u_s3"].iter().map(|n| pt.assignment[*n]).collect();
        vals.sort();
        assert_eq!(vals, vec![1, 2, 4]);
        assert!(spec.roots_of_unity_point(PrimeField::new(11).unwrap()).is_err());
    }
}
