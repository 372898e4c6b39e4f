//! Exact invariants of the Seifert fibered surgeries `(K(l,m,n,p), γ)` obtained
//! from untangle surgery on the tangles `B(l,m,n,p)`.
//!
//! The crate is organised bottom-up:
//!
//! * [`exactfrac`]: rationals extended by a single `∞ = 1/0`, plus continued fractions.
//! * [`tangle`]: rational tangles, meridian lifts in the branched double cover and
//!   covering slopes.
//! * [`seifert`]: Seifert fibered spaces over the sphere, disk or Möbius band given by
//!   slot fractions, with first homology, normal forms and fibration predicates.
//! * [`family`]: the `K(l,m,n,p)` family itself (Montesinos fractions, tangle
//!   sequences, surgery slopes, torus-decomposition pieces, hypothesis lists).
//! * [`network`]: twists along seiferters and annular pairs, and the explicit path from
//!   the trefoil surgery `(T(3,2), l+5)`.
//! * [`verify`]: parallel parameter sweeps that cross-check the three independent routes
//!   to the surgery slope.
//!
//! All arithmetic is exact and arbitrary precision. Every function is pure.

pub mod error;
pub mod exactfrac;
pub mod family;
pub mod network;
pub mod seifert;
pub mod tangle;
pub mod verify;

pub use error::{Error, Result};
pub use exactfrac::{cf_eval, cf_expand, ExtFrac};
pub use family::FamilyParams;
pub use network::{Seiferter, SurgeryVertex, TwistStep, TwistTarget};
pub use seifert::{Base, FibrationCensus, H1Order, LensClass, SeifertSpace};
pub use tangle::{HomologyClass, RationalTangle};
pub use verify::{IntRange, Suite, SweepBox, VerificationReport, Verifier};

pub use num_bigint::{BigInt, BigUint};
