//! Multivariate Laurent polynomials over the integers.
//!
//! A polynomial carries its variable registry (an ordered list of names) and a
//! map from dense exponent vectors to nonzero big-integer coefficients. Two
//! polynomials interact only when their registries are identical.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::RingError;

/// Largest number of terms a single arithmetic result may hold.
pub const DEFAULT_TERM_CAP: usize = 1 << 20;

/// Ordered parameter names shared by all polynomials of one algebra.
pub type Vars = Arc<Vec<String>>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    vars: Vars,
    terms: BTreeMap<Vec<i32>, BigInt>,
}

impl LaurentPoly {
    pub fn zero(vars: &Vars) -> Self {
        LaurentPoly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &Vars, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    pub fn one(vars: &Vars) -> Self {
        Self::constant(vars, 1)
    }

    /// `c * prod(var_i ^ exps_i)`.
    pub fn monomial(vars: &Vars, c: impl Into<BigInt>, exps: Vec<i32>) -> Result<Self, RingError> {
        if exps.len() != vars.len() {
            return Err(RingError::ExponentLength { expected: vars.len(), got: exps.len() });
        }
        let c = c.into();
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        Ok(p)
    }

    /// The variable named `name`, to the first power.
    pub fn var(vars: &Vars, name: &str) -> Result<Self, RingError> {
        let i = vars.iter().position(|v| v == name).ok_or_else(|| RingError::UnknownVariable(name.to_string()))?;
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Self::monomial(vars, 1, e)
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i32], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().all(|(e, c)| c.is_one() && e.iter().all(|&x| x == 0))
    }

    fn check_vars(&self, other: &Self) -> Result<(), RingError> {
        if Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars {
            Ok(())
        } else {
            Err(RingError::VariableMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, RingError> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            add_term(&mut out.terms, e, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, RingError> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, RingError> {
        self.try_mul_capped(other, DEFAULT_TERM_CAP)
    }

    pub fn try_mul_capped(&self, other: &Self, cap: usize) -> Result<Self, RingError> {
        self.check_vars(other)?;
        let mut terms = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<i32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                add_term(&mut terms, &e, ca * cb);
            }
            if terms.len() > cap {
                return Err(RingError::TermCap { cap, got: terms.len() });
            }
        }
        Ok(LaurentPoly { vars: self.vars.clone(), terms })
    }

    pub fn neg(&self) -> Self {
        LaurentPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(&self.vars);
        }
        LaurentPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect() }
    }

    /// `Some(inverse)` when `self` is a unit, i.e. a single term with
    /// coefficient +-1.
    pub fn unit_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        if !(c.is_one() || (-c).is_one()) {
            return None;
        }
        let inv: Vec<i32> = e.iter().map(|x| -x).collect();
        let mut terms = BTreeMap::new();
        terms.insert(inv, c.clone());
        Some(LaurentPoly { vars: self.vars.clone(), terms })
    }

    /// `Some(q)` with `self = q * d` when such a Laurent polynomial exists.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() || self.vars != d.vars {
            return None;
        }
        if self.is_zero() {
            return Some(self.clone());
        }
        // Shift both into Z[u] with no monomial factor; there divisibility
        // is decided by lex-order division, which terminates.
        let (mf, mut f) = self.shifted();
        let (md, dd) = d.shifted();
        let (le, lc) = dd.iter().next_back().expect("nonzero");
        let mut q = BTreeMap::new();
        while let Some((fe, fc)) = f.iter().next_back() {
            let te: Vec<i32> = fe.iter().zip(le).map(|(a, b)| a - b).collect();
            if te.iter().any(|&x| x < 0) || !(fc % lc).is_zero() {
                return None;
            }
            let tc = fc / lc;
            for (e, c) in &dd {
                let e: Vec<i32> = e.iter().zip(&te).map(|(a, b)| a + b).collect();
                add_term(&mut f, &e, -(c * &tc));
            }
            q.insert(te, tc);
        }
        let off: Vec<i32> = mf.iter().zip(&md).map(|(a, b)| a - b).collect();
        let terms = q.into_iter().map(|(e, c)| (e.iter().zip(&off).map(|(a, b)| a + b).collect(), c)).collect();
        Some(LaurentPoly { vars: self.vars.clone(), terms })
    }

    /// Per-variable minimum exponents and the terms shifted by them.
    fn shifted(&self) -> (Vec<i32>, BTreeMap<Vec<i32>, BigInt>) {
        let k = self.vars.len();
        let mins: Vec<i32> = (0..k).map(|i| self.terms.keys().map(|e| e[i]).min().unwrap_or(0)).collect();
        let terms =
            self.terms.iter().map(|(e, c)| (e.iter().zip(&mins).map(|(a, b)| a - b).collect(), c.clone())).collect();
        (mins, terms)
    }

    pub fn pow(&self, n: u32) -> Result<Self, RingError> {
        let mut acc = Self::one(&self.vars);
        for _ in 0..n {
            acc = acc.try_mul(self)?;
        }
        Ok(acc)
    }

    /// Parses the textual syntax `3*u_s1^2*u_t2^-1 - 1` against `vars`.
    pub fn parse(s: &str, vars: &Vars) -> Result<Self, RingError> {
        super::parse::parse_poly(s, vars)
    }
}

fn add_term(terms: &mut BTreeMap<Vec<i32>, BigInt>, e: &[i32], c: BigInt) {
    if c.is_zero() {
        return;
    }
    match terms.get_mut(e) {
        Some(old) => {
            *old += c;
            if old.is_zero() {
                terms.remove(e);
            }
        }
        None => {
            terms.insert(e.to_vec(), c);
        }
    }
}

/// Exact multivariate Laurent polynomials; panics only on a registry mismatch,
/// which is a programming error. Use the `try_` forms at API boundaries.
impl std::ops::Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_add(rhs).expect("variable registries differ")
    }
}

impl std::ops::Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_sub(rhs).expect("variable registries differ")
    }
}

impl std::ops::Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_mul_capped(rhs, usize::MAX).expect("variable registries differ")
    }
}

impl fmt::Display for LaurentPoly {
    /// Highest exponent vector first; the output parses back to the same value.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut factors: Vec<String> = Vec::new();
            for (name, &x) in self.vars.iter().zip(e) {
                match x {
                    0 => {}
                    1 => factors.push(name.clone()),
                    _ => factors.push(format!("{name}^{x}")),
                }
            }
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{mag}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars(names: &[&str]) -> Vars {
        Arc::new(names.iter().map(|s| s.to_string()).collect())
    }

    #[test]
    fn exact_division() {
        let v = vars(&["x", "y", "z"]);
        let p = |s: &str| LaurentPoly::parse(s, &v).unwrap();
        let d = p("x^-1 + y^-1 + z^-1");
        let f = p("x*y + x*z + y*z");
        assert_eq!(f.exact_div(&d), Some(p("x*y*z")));
        assert_eq!(p("2*x^2 - 2").exact_div(&p("x + 1")), Some(p("2*x - 2")));
        assert_eq!(p("x^2 + 1").exact_div(&p("x + 1")), None);
        assert_eq!(p("x + 1").exact_div(&p("2")), None);
        assert!(p("0").exact_div(&d).unwrap().is_zero());
    }

    #[test]
    fn unit_cancellation() {
        let v = vars(&["x"]);
        let x = LaurentPoly::var(&v, "x").unwrap();
        let xi = x.unit_inverse().unwrap();
        assert!((&x * &xi).is_one());
    }

    #[test]
    fn difference_of_squares() {
        let v = vars(&["x", "y"]);
        let x = LaurentPoly::var(&v, "x").unwrap();
        let y = LaurentPoly::var(&v, "y").unwrap();
        let lhs = &(&x + &y) * &(&x - &y);
        let rhs = &(&x * &x) - &(&y * &y);
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.num_terms(), 2);
    }

    #[test]
    fn monomial_inverse() {
        let v = vars(&["x", "y"]);
        let a = LaurentPoly::monomial(&v, -1, vec![2, -1]).unwrap();
        let b = a.unit_inverse().unwrap();
        assert_eq!(b, LaurentPoly::monomial(&v, -1, vec![-2, 1]).unwrap());
        assert!(LaurentPoly::one(&v).unit_inverse().unwrap().is_one());
    }

    #[test]
    fn two_terms_are_not_units() {
        let v = vars(&["x", "y"]);
        let s = &LaurentPoly::var(&v, "x").unwrap() + &LaurentPoly::var(&v, "y").unwrap();
        assert!(s.unit_inverse().is_none());
        assert!(LaurentPoly::constant(&v, 2).unit_inverse().is_none());
    }

    #[test]
    fn registry_mismatch_is_an_error() {
        let a = LaurentPoly::one(&vars(&["x"]));
        let b = LaurentPoly::one(&vars(&["y"]));
        assert!(matches!(a.try_add(&b), Err(RingError::VariableMismatch)));
    }

    #[test]
    fn term_cap_overflow() {
        let v = vars(&["x", "y"]);
        let x = LaurentPoly::var(&v, "x").unwrap();
        let y = LaurentPoly::var(&v, "y").unwrap();
        let s = &(&x + &y) + &LaurentPoly::one(&v);
        let sq = &s * &s;
        assert!(matches!(sq.try_mul_capped(&sq, 4), Err(RingError::TermCap { .. })));
    }

    #[test]
    fn display_is_stable() {
        let v = vars(&["u_s1", "u_t2"]);
        let p = LaurentPoly::monomial(&v, 3, vec![2, -1]).unwrap();
        let p = &p - &LaurentPoly::one(&v);
        assert_eq!(p.to_string(), "3*u_s1^2*u_t2^-1 - 1");
    }
}
