//! Exact areal (barycentric) triangle geometry.
//!
//! `areal` builds the Miquel configuration attached to the feet of three
//! Cevian lines — the Miquel point `Q`, the circle through the second
//! Cevian intersections `U, V, W`, the three circles through `Q` and a
//! vertex-foot pair, and their second common point `R` — entirely in
//! exact arithmetic. Every closed-form construction is paired with an
//! independent generic derivation, checked with zero tolerance, and the
//! underlying identities are also proved as polynomial identities by
//! running the same fraction-free code over a symbolic scalar type.
//!
//! The crate is organized in layers:
//!
//! * [`rational`] and [`poly`] — the exact scalars: arbitrary-precision
//!   fractions and sparse multivariate polynomials.
//! * [`ring`] — the [`ring::RingScalar`] abstraction that lets one
//!   geometric code path serve both scalar types.
//! * [`geom`] — points, lines, circles and conics in homogeneous areal
//!   coordinates, with fraction-free constructions.
//! * [`miquel`] — the configuration pipeline and its cross-checks.
//! * [`verify`] — randomized exact verification and the floating-point
//!   cross-check.
//! * [`symbolic`] — polynomial identity proofs and transcription audits.
//! * [`instance`] and [`svg`] — the file format and figure rendering used
//!   by the command-line interface.

pub mod geom;
pub mod poly;
pub mod rational;
pub mod ring;

pub use geom::{Circle, Conic, GeomError, Line, Point, TriangleMetric};
pub use poly::{Bindings, Monomial, MultiPoly, Var};
pub use rational::{rat, ratio, Rational};
pub use ring::{content_normalize, det3, proportional, KernelError, RingScalar};
