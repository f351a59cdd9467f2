//! Exact computational Lie theory for simply-laced Kac–Moody algebras.
//!
//! The crate builds, over arbitrary-precision rationals (or Gaussian
//! rationals), the combinatorial and algebraic layers needed to verify
//! double-bracket presentations against concrete Lie-algebra targets:
//!
//! * [`cartan`] — generalized Cartan matrices, diagram colorings, and
//!   finite/affine/indefinite type classification by exact minor tests;
//! * [`rootsys`] — root systems: finite enumeration, affine
//!   `nδ + α` decomposition, height-descent membership for indefinite
//!   diagrams such as E₁₀, root strings, and vanishing certificates for
//!   squared adjoint actions;
//! * [`chevalley`] — finite-type algebras in a Chevalley basis with sign
//!   cocycle structure constants, involutions, subalgebra closure, and an
//!   independent traceless-matrix oracle for type A;
//! * [`loopalg`] — loop-algebra realizations of affine algebras, ring
//!   involutions, fixed-point splits, and evaluation representations;
//! * [`berman`] — involutory-subalgebra generators from colorings and their
//!   defining relations;
//! * [`spinrep`] — finite-dimensional spin representations from Pauli
//!   strings with GF(2) symplectic bookkeeping;
//! * [`freelie`] — free Lie algebras in the Lyndon basis and graded quotient
//!   dimensions;
//! * [`qmsa`] — presentations by signed double-bracket relations
//!   (quantum minimal surface / Yang–Mills type), morphism verification and
//!   surjectivity certificates;
//! * [`scenarios`] — named end-to-end computations producing claim reports.
//!
//! There is no floating point anywhere: every comparison is exact.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod berman;
pub mod cartan;
pub mod chevalley;
pub mod error;
pub mod freelie;
pub mod linalg;
pub mod loopalg;
pub mod matrix;
pub mod qmsa;
pub mod report;
pub mod rootsys;
pub mod scalar;
pub mod scenarios;
pub mod spinrep;
pub mod target;

pub use cartan::{Coloring, Gcm, GcmInfo, Kind};
pub use error::Error;
pub use scalar::{GaussRat, Rat, Scalar};
