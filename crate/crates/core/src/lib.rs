//! Exact-arithmetic laboratory for curves `x - a*x^p = y^p` over the rational
//! function field `K = F_p(t)`, `p > 2`.
//!
//! For `q = p^n` the distinguished family member `C_n` has coefficient
//! `A_n(t) = t + t^{q+2} + t^{2q+3} + ... + t^{(p-2)q + p-1}`. These curves
//! have absolute genus zero, yet genus `(p-1)(p-2)/2` relative to `K`: the
//! genus drops under the inseparable extension `K^{1/p}/K`. Despite the genus
//! drop (which forces `C_n(K)` to be finite) the number of rational points
//! grows without bound in `n`.
//!
//! The crate builds those points explicitly and verifies every claim by
//! independent computation:
//!
//! * [`field`] — arithmetic in `GF(p^k)` with Frobenius and p-th roots;
//! * [`poly`] / [`ratfn`] — exact sparse polynomials and reduced rational
//!   functions, including the p-th-power criterion;
//! * [`orbit`] — the index map `phi` whose orbits classify the point
//!   coefficients, via both its arithmetic and base-p digit descriptions;
//! * [`curve`] — curve construction, coefficient assignments, point
//!   enumeration and the point-count bounds;
//! * [`genus`] — relative genus by Riemann-Roch dimension counts (fast path
//!   plus an independent semilinear-kernel oracle) and the absolute-genus-zero
//!   parametrization;
//! * [`search`] — brute-force enumeration oracles (coefficient space and
//!   bounded-height point search), parallel, checkpointed, deterministic.
//!
//! Everything is exact; there are no tolerances anywhere.

pub mod curve;
pub mod error;
pub mod field;
pub mod genus;
pub mod limits;
pub mod orbit;
pub mod parse;
pub mod poly;
pub mod ratfn;
pub mod search;

pub use curve::{AffinePoint, BoundsReport, CoeffAssignment, Curve, PointDoc};
pub use error::CoreError;
pub use field::{FieldCtx, FieldElement, FieldOp};
pub use genus::{GenusDropReport, Parametrization, RRReport};
pub use limits::Limits;
pub use orbit::{IndexParams, Orbit};
pub use poly::SparsePoly;
pub use ratfn::RatFn;
pub use search::{SearchControl, SearchMode, SearchResult, SearchSpec, Survivors};

/// Result alias used across the crate.
pub type Result<T> = std::result::Result<T, CoreError>;
