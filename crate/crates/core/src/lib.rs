//! Exact algebra of singular foliations generated by polynomial vector fields on `Q^n`.
//!
//! The crate is `no_std` (it only needs `alloc`). Layers, bottom up:
//!
//! - [`poly`], [`module`], [`linalg`], [`groebner`], [`syzygy`]: polynomial and
//!   free-module arithmetic, Gröbner bases with change matrices, Schreyer
//!   syzygies and iterated free resolutions.
//! - [`vector_field`], [`foliation`], [`catalog`]: vector fields as derivations,
//!   foliation presentations, involutivity certificates, Christoffel symbols and
//!   pointwise rank/tangent data.
//! - [`isotropy`]: strong kernel, isotropy Lie algebra, linear isotropy.
//! - [`resolution`]: geometric resolutions and pointwise cohomology.
//! - [`brackets`]: almost-Lie and 2-Lie algebroids, the Koszul Lie∞ model and
//!   higher Jacobi residuals.
//! - [`blowup`]: lifts of vector fields to the charts of the blow-up at the origin.
#![cfg_attr(not(feature = "std"), no_std)]
#![allow(clippy::needless_range_loop)]

extern crate alloc;

mod error;

pub mod blowup;
pub mod brackets;
pub mod catalog;
pub mod foliation;
pub mod groebner;
pub mod isotropy;
pub mod linalg;
pub mod module;
pub mod poly;
pub mod resolution;
pub mod syzygy;
pub mod vector_field;

pub use error::Error;

/// Exact rational numbers.
pub type Rational = num_rational::BigRational;
