//! Monomial ideals of block-diagonal and truncated pluri-circulant matrices.
//!
//! This crate is `no_std` (it needs `alloc`). It provides:
//!
//! * exact binomial arithmetic and the combinatorial identities the Betti
//!   formulas rest on ([`combinat`]);
//! * monomials, monomial ideals and the structural predicates used on them:
//!   stability, Borel-fixedness, linear quotients, radicals, and the
//!   Eliahou–Kervaire Betti numbers of stable ideals ([`monomial`], [`ideal`],
//!   [`betti`]);
//! * transversal ideals `I_t(D)` with their closed-form Betti numbers
//!   ([`transversal`]);
//! * the initial ideals `J_t` of generic pluri-circulant matrices
//!   ([`pluricirculant`]);
//! * the explicit minimal free resolution of `I_t(D)` together with a
//!   certificate of minimality and exactness ([`resolution`]);
//! * an independent brute-force multigraded Betti oracle built on strand
//!   (upper Koszul) simplicial homology ([`oracle`]), with exact ranks over
//!   the rationals or a prime field ([`linalg`]).
//!
//! IO, JSON, parallel drivers and the CLI live in the companion `monres` crate.

#![no_std]

extern crate alloc;

pub mod betti;
pub mod combinat;
mod error;
pub mod ideal;
pub mod linalg;
pub mod monomial;
pub mod oracle;
pub mod pluricirculant;
pub mod resolution;
pub mod transversal;

pub use betti::BettiTable;
pub use error::{Error, Result};
pub use ideal::{BorelWitness, MonomialIdeal, StabilityWitness};
pub use monomial::{Monomial, VariableSet};
pub use num_bigint::BigUint;
pub use pluricirculant::PluriShape;
pub use transversal::BlockShape;
