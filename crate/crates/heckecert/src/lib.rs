//! Freeness certificates for the Hecke algebras attached to the exceptional
//! rank-2 complex reflection groups G4 through G22.
//!
//! The crate is organised bottom up: [`ring`] supplies exact Laurent
//! polynomials and prime fields, [`presentations`] the group catalog,
//! [`group_engine`] finite group computations, [`hecke`] the certificate
//! engine and [`b3`] the small-dimensional braid group representations.

pub mod b3;
pub mod cli;
pub mod group_engine;
pub mod hecke;
pub mod presentations;
pub mod ring;
