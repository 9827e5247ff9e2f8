//! Exact symbolic computation for the N=1 super Heisenberg–Virasoro
//! algebra, its rank-2 free modules `Ω(λ,β)`, their submodule lattice and
//! quotients, restrictions to four distinguished subalgebras, and the
//! weighting functor onto intermediate-series weight modules.
//!
//! All arithmetic is exact over `ℚ[λ,λ⁻¹]`; nothing here is numeric or
//! approximate.

pub mod algebra;
pub mod cli;
pub mod expr;
pub mod omega;
pub mod poly;
pub mod sample;
pub mod scalar;
pub mod structure;
pub mod subalgebras;
pub mod weighting;

pub use algebra::{bracket, bracket_basis, AlgebraElement, GenKind, Generator};
pub use omega::{act, OmegaParams, SuperVector};
pub use poly::{BiPoly, UniPoly};
pub use scalar::{HalfInt, Rat, Scalar};
