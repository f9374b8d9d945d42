//! The coefficient carriers the engine runs over: a prime field at a fixed
//! specialization point, or exact Laurent polynomials.

use crate::ring::{specialize, LaurentPoly, PrimeField, SpecPoint, Vars};

use super::HeckeError;

/// A commutative coefficient ring as seen by the enumerator.
pub trait Coeff: Sync {
    type E: Clone + PartialEq + std::fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    /// Inverse when `a` is a unit of the ring; every nonzero element in a field.
    fn unit_inverse(&self, a: &Self::E) -> Option<Self::E>;
    /// `Some(a / b)` when `b` divides `a`.
    fn exact_div(&self, a: &Self::E, b: &Self::E) -> Option<Self::E> {
        self.unit_inverse(b).map(|inv| self.mul(a, &inv))
    }
    /// Image of an exact parameter polynomial.
    fn lift(&self, p: &LaurentPoly) -> Result<Self::E, HeckeError>;
    fn show(&self, a: &Self::E) -> String;
    fn mode_name(&self) -> &'static str;

    /// The specialization point, if any.
    fn point(&self) -> Option<&SpecPoint> {
        None
    }

    /// Rank of `rows` when the carrier is a field.
    fn rank(&self, _rows: &[Vec<Self::E>]) -> Option<usize> {
        None
    }
}

/// `F_p` with the parameters specialized at a point.
#[derive(Clone, Debug)]
pub struct ModP {
    pub point: SpecPoint,
}

impl ModP {
    pub fn new(point: SpecPoint) -> Self {
        ModP { point }
    }

    /// Plain `F_p`, with no parameters assigned.
    pub fn over(field: PrimeField) -> Self {
        ModP { point: SpecPoint { field, seed: 0, assignment: Default::default() } }
    }

    pub fn field(&self) -> PrimeField {
        self.point.field
    }
}

impl Coeff for ModP {
    type E = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        self.point.field.add(*a, *b)
    }
    #[inline]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        self.point.field.sub(*a, *b)
    }
    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        self.point.field.mul(*a, *b)
    }
    #[inline]
    fn neg(&self, a: &u64) -> u64 {
        self.point.field.neg(*a)
    }
    #[inline]
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn unit_inverse(&self, a: &u64) -> Option<u64> {
        self.point.field.inv(*a)
    }
    fn lift(&self, p: &LaurentPoly) -> Result<u64, HeckeError> {
        Ok(specialize(p, &self.point)?.value)
    }
    fn show(&self, a: &u64) -> String {
        a.to_string()
    }
    fn mode_name(&self) -> &'static str {
        "modp"
    }
    fn point(&self) -> Option<&SpecPoint> {
        Some(&self.point)
    }
    fn rank(&self, rows: &[Vec<u64>]) -> Option<usize> {
        Some(super::matrix::rank_mod_p(self, rows))
    }
}

/// Exact Laurent polynomials in the Hecke parameters. Only monomial units
/// can serve as pivots.
#[derive(Clone, Debug)]
pub struct Exact {
    pub vars: Vars,
}

impl Coeff for Exact {
    type E = LaurentPoly;

    fn zero(&self) -> LaurentPoly {
        LaurentPoly::zero(&self.vars)
    }
    fn one(&self) -> LaurentPoly {
        LaurentPoly::one(&self.vars)
    }
    fn add(&self, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        a + b
    }
    fn sub(&self, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        a - b
    }
    fn mul(&self, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        a * b
    }
    fn neg(&self, a: &LaurentPoly) -> LaurentPoly {
        a.neg()
    }
    fn is_zero(&self, a: &LaurentPoly) -> bool {
        a.is_zero()
    }
    fn unit_inverse(&self, a: &LaurentPoly) -> Option<LaurentPoly> {
        a.unit_inverse()
    }
    fn exact_div(&self, a: &LaurentPoly, b: &LaurentPoly) -> Option<LaurentPoly> {
        a.exact_div(b)
    }
    fn lift(&self, p: &LaurentPoly) -> Result<LaurentPoly, HeckeError> {
        if p.vars() != &self.vars {
            return Err(HeckeError::Ring(crate::ring::RingError::VariableMismatch));
        }
        Ok(p.clone())
    }
    fn show(&self, a: &LaurentPoly) -> String {
        a.to_string()
    }
    fn mode_name(&self) -> &'static str {
        "exact"
    }
}
