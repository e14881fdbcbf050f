// SPDX-License-Identifier: Apache-2.0

//! Exact hom-polytopes of affine maps between convex polytopes.
//!
//! The crate builds `Hom(P, Q)`, the polytope of affine maps `f` with
//! `f(P) ⊆ Q`, as a labeled H-polytope, enumerates its vertex maps with an
//! exact double description method, and classifies them (rank, surjective /
//! injective factorization, deflations, face-collapses). On top of that sit
//! the regular-polygon counting pipeline and the coincidence-graph
//! determinant certificates.
//!
//! All arithmetic is exact over the rationals.

pub mod classify;
pub mod cli;
pub mod coincidence;
pub mod constructions;
pub mod error;
pub mod hom;
pub mod linalg;
pub mod poly;
pub mod polytope;
pub mod regular;

pub use error::{Error, Result};
pub use linalg::{Matrix, Scalar, Vector};
pub use polytope::{HRep, Inequality, Polytope, VRep};
