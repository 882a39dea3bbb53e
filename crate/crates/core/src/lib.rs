//! Exact computation of conformal-block dimensions for rank-two stable
//! bundles with c1 = Σ on the Hirzebruch surfaces F_e.
//!
//! The pipeline in [`moduli::conformal_block_dim`] identifies the moduli
//! space with Pⁿ, n = 4c + e − 3, computes the degree m of the determinant
//! line bundle attached to a curve C, and returns binom(n + m, n). Each
//! closed form is re-derived by an independent route: cohomology of line
//! bundles for n, and Grothendieck–Riemann–Roch in a truncated Chow ring
//! for m.
//!
//! ```
//! use num_bigint::BigInt;
//! use ruled_blocks::{conformal_block_dim, Divisor, RuledSurface};
//!
//! let f0 = RuledSurface::new(0).unwrap();
//! let report = conformal_block_dim(&f0, &BigInt::from(1), &Divisor::new(2, 2)).unwrap();
//! assert_eq!(report.n, BigInt::from(1));
//! assert_eq!(report.m_closed, report.m_grr);
//! assert_eq!(report.dim_blocks, 2u32.into());
//! ```

pub mod chow;
pub mod cli;
pub mod cohomology;
pub mod error;
pub mod lattice;
pub mod moduli;
pub mod render;
pub mod scan;
pub mod verify;

pub use chow::{ChowElement, FamilyChernData, LineSummand};
pub use cohomology::{chi_rr, cohomology_table, dim_extension_space, CohomologyTable};
pub use error::{Error, Result};
pub use lattice::{Divisor, RuledSurface, SmoothHint};
pub use moduli::{binom, conformal_block_dim, BlocksReport, ModuliSpec};
pub use render::OutputFormat;
