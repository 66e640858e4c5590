//! Exact Homflypt skein computations in the solid torus.
//!
//! The crate is organized bottom-up:
//!
//! - [`scalar`]: the coefficient field (normalized fractions of Laurent
//!   polynomials in `x`, `v`, `s` over the rationals), quantum integers.
//! - [`partition`]: Young diagrams, hooks, contents, standard tableaux.
//! - [`hecke`]: the Hecke algebras on the positive-permutation-braid basis,
//!   the symmetrizers `f_n`, `g_n`, the Young idempotents `y_lambda`, and the
//!   tableau morphisms.
//! - [`diagram`]: oriented framed link diagrams in the annulus built from
//!   slice words, and the descending-diagram skein evaluator.
//! - [`annulus`]: the skein algebra of the solid torus on the monomial basis.
//! - [`relative`]: the relative module with two boundary points, its bases,
//!   cappings and wirings.
//! - [`handle_slide`]: the 2-handle-slide relation systems for the skein
//!   module of S^1 x S^2 and the rational-function invariant.

pub mod annulus;
pub mod diagram;
pub mod error;
pub mod handle_slide;
pub mod hecke;
pub mod partition;
pub mod relative;
pub mod scalar;

pub use annulus::{AnnulusElement, MonomialKey};
pub use error::{Result, SkeinError};
pub use hecke::{BraidWord, HeckeElement, Permutation};
pub use partition::{Partition, StandardTableau};
pub use relative::{RelativeElement, RelativeKey};
pub use scalar::{LaurentPoly, Scalar};
