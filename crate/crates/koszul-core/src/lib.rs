//! Exact computational commutative algebra kernel built around the Koszul
//! complex of a finitely presented module.
//!
//! The crate provides, bottom up: multivariate polynomials over GF(p) and
//! over the rationals ([`polyring`]), Buchberger's algorithm and syzygies for
//! submodules of free modules ([`groebner`]), finitely presented modules with
//! kernels and homology ([`fpmod`]), tensor/exterior/symmetric power
//! presentations ([`multilinear`]), and the degree-n Koszul component
//! machinery with the characteristic-2 acyclicity counterexample pipeline
//! ([`koszul`]).
//!
//! Everything is exact: homology answers are yes/no facts, never
//! approximations. All values are immutable after construction and safe to
//! share across threads.

pub mod error;
pub mod fpmod;
pub mod groebner;
pub mod koszul;
pub mod multilinear;
pub mod polyring;
pub mod report;

pub use error::{Error, Result};
