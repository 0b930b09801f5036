//! Obstructions to 0-concordance of 2-knots in the 4-sphere.
//!
//! A 2-knot is a smoothly embedded 2-sphere in S^4. Two 2-knots are
//! 0-concordant when they cobound a concordance all of whose regular level
//! sets are unions of 2-spheres. This crate computes the two invariants that
//! obstruct 0-concordance:
//!
//! * the Rochlin invariant mu (signature mod 16 of a spin 4-manifold bounded
//!   by a Seifert hypersurface of the knot), and
//! * the Heegaard Floer correction term d of the Seifert hypersurface,
//!   normalized so that it is insensitive to S^1 x S^2 stabilization.
//!
//! Everything is exact: integers, `BigRational` values, and mod-16 residues.
//! No floating point is used anywhere.
//!
//! The main entry points are [`TwoKnotExpr`] (a formal 2-knot expression),
//! [`engine::profile`] and [`engine::compare`] (invariant profiles and
//! verdicts), and the expression parser in [`expr`].

pub mod correction;
pub mod engine;
pub mod error;
pub mod expr;
pub mod knot;
pub mod linalg;
pub mod manifold;
pub mod mod16;
pub mod rational;
pub mod surgery;
pub mod twoknot;

pub use correction::{d_lens, d_manifold, d_normalized, DValue};
pub use engine::{compare, family, profile, theorem2_check, InvariantProfile, Verdict, Witness};
pub use error::{Error, Result};
pub use expr::{parse_knot, parse_manifold, parse_two_knot, ExprError};
pub use knot::{KnotExpr, QaStatus};
pub use manifold::{PrimeSummand, SpinCSelector, SpinPart, ThreeManifold};
pub use mod16::Mu;
pub use rational::Rat;
pub use surgery::SurgeryPresentation;
pub use twoknot::{seifert_hypersurface, stabilize, SeifertData, TwoKnotExpr};
