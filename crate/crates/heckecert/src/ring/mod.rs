//! Coefficient layer: exact Laurent polynomials over `Z` and their images in
//! prime fields.

mod field;
mod laurent;
mod parse;
mod point;

pub use field::{is_prime, prime_congruent_one, FieldElem, PrimeField, DEFAULT_PRIME};
pub use laurent::{LaurentPoly, Vars, DEFAULT_TERM_CAP};
pub use point::{specialize, SpecPoint};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    #[error("polynomials live over different variable registries")]
    VariableMismatch,
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("exponent vector has length {got}, registry has {expected} variables")]
    ExponentLength { expected: usize, got: usize },
    #[error("result has {got} terms, over the cap of {cap}")]
    TermCap { cap: usize, got: usize },
    #[error("{0} is not a unit (need a single term with coefficient +-1)")]
    NonUnit(String),
    #[error("cannot parse {input:?}: {msg}")]
    Parse { input: String, msg: String },
    #[error("modulus {0} is not an odd prime below 2^32")]
    BadModulus(u64),
    #[error("parameter {0} specialized to zero")]
    ZeroAssignment(String),
}

/// Which ring operation [`lp_arith`] performs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

pub fn lp_arith(a: &LaurentPoly, b: &LaurentPoly, op: ArithOp) -> Result<LaurentPoly, RingError> {
    match op {
        ArithOp::Add => a.try_add(b),
        ArithOp::Sub => a.try_sub(b),
        ArithOp::Mul => a.try_mul(b),
    }
}

pub fn lp_invert_unit(a: &LaurentPoly) -> Result<LaurentPoly, RingError> {
    a.unit_inverse().ok_or_else(|| RingError::NonUnit(a.to_string()))
}
