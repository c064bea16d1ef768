//! Certified numerics for the area inside a circle, built so that no step
//! quietly assumes the answer.
//!
//! The crate provides, in dependency order:
//!
//! - [`interval`]: outward-rounded interval arithmetic, the containment
//!   guarantee everything else rides on;
//! - [`ctrig`]: enclosures of sin, cos, tan, sinc and two cancellation-free
//!   gap functions, from truncated alternating series with the first
//!   omitted term folded in as a remainder bound;
//! - [`squeeze`]: machine checks of the chain
//!   `1 < theta/sin theta < sec theta + tan(theta/2)` and of
//!   `sin theta < theta < tan theta` on adaptive grids, plus certified
//!   epsilon-delta witnesses for `sin theta / theta -> 1`;
//! - [`area_pi`]: a square-root-only half-angle recursion seeded at the
//!   triangle that brackets pi from both sides, polygon and
//!   trapezoid-sector area schemes, and the annulus identity — `area_pi`
//!   deliberately never calls [`ctrig`], so nothing pi-flavored leaks into
//!   the bootstrap;
//! - [`convergence`]: approximation tables, empirical order estimates, and
//!   Richardson extrapolation as a diagnostic.
//!
//! Grid verifications are data-parallel; the `parallel` feature (default)
//! runs cells under rayon, and aggregation is an ordered fold so results
//! are bit-identical with the feature off.

// Negated comparisons like `!(x > 0.0)` are the validation idiom here:
// they reject NaN along with the out-of-range values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod area_pi;
pub mod convergence;
pub mod ctrig;
pub mod error;
pub mod interval;
pub mod report;
pub mod squeeze;

pub use error::{Error, Result};
pub use interval::Interval;
