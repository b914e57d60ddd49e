//! Exact-arithmetic elliptic surfaces over the rational function field.
//!
//! The library models Weierstrass equations y^2 = x^3 + A x + B with A, B
//! homogeneous in the coordinates (s : t) of P^1, classifies their singular
//! fibers in Kodaira's notation, performs base change along rational
//! self-maps of the line, quadratic twists and deflation, and ships an
//! embedded catalog of extremal elliptic K3 constructions together with a
//! verification harness that recomputes every catalog entry from its base
//! surface and base change.
//!
//! Modules:
//! - [`exactalg`]: fields (Q and simple extensions) and the homogeneous
//!   polynomial kernel (gcd, squarefree decomposition, order splitting);
//! - [`weier`]: Weierstrass models, discriminant, j-invariant, minimality,
//!   rescaling, twists, equivalence;
//! - [`fibers`]: Kodaira classification and configuration bookkeeping;
//! - [`covers`]: rational self-maps of P^1, ramification, Hurwitz checks,
//!   pullback;
//! - [`catalog`]: the embedded data and the verification harness.

pub mod catalog;
pub mod covers;
pub mod error;
pub mod exactalg;
pub mod fibers;
pub mod weier;

pub use error::{Error, Result};
