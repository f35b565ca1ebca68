//! Exact computational engine for finite group actions on surfaces and
//! spheres: multiplication-table groups, coset enumeration, modular
//! character tables lifted to exact cyclotomic integers, orthogonal and
//! symplectic realizability tests, and genus-spectrum computations.
//!
//! Everything downstream of a verdict is exact arithmetic (machine integers,
//! big rationals, cyclotomic integers); no floating point is used anywhere.

pub mod bitset;
pub mod catalog;
pub mod chartab;
pub mod counting;
pub mod cyclotomic;
pub mod error;
pub mod exec;
pub mod fp;
pub mod group;
pub mod sphere;
pub mod surface;
pub mod symplectic;
pub mod verify;

pub use error::{Error, Result};
pub use group::FiniteGroup;
