//! Exact local intersection theory over the rationals.
//!
//! The crate computes, at a rational point `x`, the local invariants attached
//! to an ideal `(f_0, ..., f_m)` on a pure-dimensional affine variety `X`:
//! Vogel cycles, Segre numbers `e_k(x)`, polar multiplicities `m_k(x)`, fixed
//! and moving Vogel components, proper intersection multiplicities and
//! Tworzewski products of cycles.
//!
//! Layers, bottom-up:
//!
//! * [`algebra`]: rationals, monomials, orders, polynomials, parsing.
//! * [`groebner`]: Buchberger, elimination, quotients, saturation, dimension.
//! * [`local`]: tangent cones and Hilbert–Samuel multiplicities at a point.
//! * [`vogel`]: Vogel sequences and cycles, Segre and polar numbers.
//! * [`intersect`]: divisor cuts, proper intersections, `A∘Z`, bullet products.
//! * [`problem`]: problem files, command execution and reports.
//!
//! Runnable walkthroughs live in the crate's `examples/` directory.

pub mod algebra;
pub mod error;
pub mod groebner;
pub mod intersect;
pub mod local;
pub mod problem;
pub mod vogel;

pub use algebra::{AffinePoint, Monomial, MonomialOrder, Polynomial, Rational, Ring};
pub use error::{Error, Result};
pub use groebner::{HilbertData, IdealRep};
pub use intersect::{CycleRep, ExtendedIndex};
pub use local::LocalMult;
pub use vogel::{MultiplicitySeq, TrialConfig, VogelRun, VogelSequence};
