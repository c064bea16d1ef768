//! Closed f64 intervals with an outward containment guarantee.
//!
//! Rather than switch rounding modes, every endpoint is computed in the
//! default nearest rounding and then stepped one representable value
//! outward, *unless* an error-free residual proves the operation exact.
//! A nearest-rounded result sits within half an ulp of the true value, so
//! the adjacent float on the far side always brackets it; skipping the step
//! for provably exact results keeps point arithmetic (halving, small
//! integers, exact roots) width-zero.
//!
//! Residuals: addition uses the TwoSum error term, which is exact for any
//! finite operands; multiplication, division, and square root use an
//! fma-based residual, trusted only when the result magnitude is far from
//! the subnormal range (`RESIDUAL_FLOOR`), where the residual itself is
//! guaranteed representable.

use crate::error::{Error, Result};

/// Magnitude below which fma residuals may underflow and are not trusted.
const RESIDUAL_FLOOR: f64 = 1e-250;

/// Closed interval `[lo, hi]` with finite endpoints, `lo <= hi`.
///
/// The arithmetic on this type guarantees containment: for any operation
/// and any `x` in `a`, `y` in `b`, the true real result lies in the
/// computed interval. Endpoints are not tightest-possible.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

/// Largest f64 not above `a + b`.
#[inline]
fn sum_lo(a: f64, b: f64) -> f64 {
    let (s, e) = two_sum(a, b);
    if e >= 0.0 {
        s
    } else {
        s.next_down()
    }
}

/// Smallest f64 not below `a + b`.
#[inline]
fn sum_hi(a: f64, b: f64) -> f64 {
    let (s, e) = two_sum(a, b);
    if e <= 0.0 {
        s
    } else {
        s.next_up()
    }
}

/// Nearest-rounded product plus a flag that is true only when the product
/// is provably exact.
#[inline]
fn prod(a: f64, b: f64) -> (f64, bool) {
    let p = a * b;
    let exact = if p == 0.0 {
        a == 0.0 || b == 0.0
    } else if p.abs() >= RESIDUAL_FLOOR && p.is_finite() {
        a.mul_add(b, -p) == 0.0
    } else {
        false
    };
    (p, exact)
}

#[inline]
fn quot(a: f64, b: f64) -> (f64, bool) {
    let q = a / b;
    let exact = if a == 0.0 {
        true
    } else if a.abs() >= RESIDUAL_FLOOR && q.is_finite() {
        q.mul_add(b, -a) == 0.0
    } else {
        false
    };
    (q, exact)
}

/// Fold `(value, exact)` candidates keeping the minimum; ties stay exact
/// only if every candidate at that value is exact.
#[inline]
fn select_min(cands: &[(f64, bool)]) -> (f64, bool) {
    let mut best = cands[0];
    for &c in &cands[1..] {
        if c.0 < best.0 {
            best = c;
        } else if c.0 == best.0 {
            best.1 = best.1 && c.1;
        }
    }
    best
}

#[inline]
fn select_max(cands: &[(f64, bool)]) -> (f64, bool) {
    let mut best = cands[0];
    for &c in &cands[1..] {
        if c.0 > best.0 {
            best = c;
        } else if c.0 == best.0 {
            best.1 = best.1 && c.1;
        }
    }
    best
}

#[inline]
fn finish_lo((v, exact): (f64, bool)) -> f64 {
    if exact {
        v
    } else {
        v.next_down()
    }
}

#[inline]
fn finish_hi((v, exact): (f64, bool)) -> f64 {
    if exact {
        v
    } else {
        v.next_up()
    }
}

impl Interval {
    /// Exact construction; never widens. Errors unless `lo <= hi` and both
    /// endpoints are finite.
    pub fn new(lo: f64, hi: f64) -> Result<Interval> {
        if lo.is_finite() && hi.is_finite() && lo <= hi {
            Ok(Interval { lo, hi })
        } else {
            Err(Error::InvalidEndpoints { lo, hi })
        }
    }

    /// Degenerate interval `[x, x]`; the precise-input path everywhere.
    pub fn point(x: f64) -> Result<Interval> {
        Interval::new(x, x)
    }

    pub fn lo(self) -> f64 {
        self.lo
    }

    pub fn hi(self) -> f64 {
        self.hi
    }

    /// `hi - lo`, rounded up.
    pub fn width(self) -> f64 {
        sum_hi(self.hi, -self.lo)
    }

    /// A representable value inside the interval.
    pub fn midpoint(self) -> f64 {
        let m = 0.5 * (self.lo + self.hi);
        m.clamp(self.lo, self.hi)
    }

    /// Exact endpoint comparison.
    pub fn contains(self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn contains_interval(self, other: Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn overlaps(self, other: Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// max(|lo|, |hi|); bounds the magnitude of every member.
    pub fn mag(self) -> f64 {
        self.lo.abs().max(self.hi.abs())
    }

    /// Smallest interval containing both inputs.
    pub fn hull(self, other: Interval) -> Interval {
        Interval {
            lo: self.lo.min(other.lo),
            hi: self.hi.max(other.hi),
        }
    }

    /// Containment-preserving division. Errors when the divisor interval
    /// touches zero; the formulas served here never need extended intervals.
    #[allow(clippy::should_implement_trait)] // fallible, unlike ops::Div
    pub fn div(self, rhs: Interval) -> Result<Interval> {
        if rhs.lo <= 0.0 && 0.0 <= rhs.hi {
            return Err(Error::ZeroInDivisor {
                lo: rhs.lo,
                hi: rhs.hi,
            });
        }
        let cands = [
            quot(self.lo, rhs.lo),
            quot(self.lo, rhs.hi),
            quot(self.hi, rhs.lo),
            quot(self.hi, rhs.hi),
        ];
        let lo = finish_lo(select_min(&cands));
        let hi = finish_hi(select_max(&cands));
        Interval::checked(lo, hi)
    }

    /// Containment-preserving square root. Errors when the lower endpoint
    /// is negative.
    pub fn sqrt(self) -> Result<Interval> {
        if self.lo < 0.0 {
            return Err(Error::NegativeArgument { lo: self.lo });
        }
        let rl = self.lo.sqrt();
        let lo_exact =
            self.lo == 0.0 || (self.lo >= RESIDUAL_FLOOR && rl.mul_add(rl, -self.lo) == 0.0);
        let rh = self.hi.sqrt();
        let hi_exact =
            self.hi == 0.0 || (self.hi >= RESIDUAL_FLOOR && rh.mul_add(rh, -self.hi) == 0.0);
        // sqrt is nonnegative on this domain, so the lower endpoint may be
        // clamped at zero after stepping down.
        let lo = finish_lo((rl, lo_exact)).max(0.0);
        let hi = finish_hi((rh, hi_exact));
        Interval::checked(lo, hi)
    }

    fn checked(lo: f64, hi: f64) -> Result<Interval> {
        // Overflow to infinity would silently break containment; the
        // library's domains stay at most ~1e13 in magnitude, so treat it
        // as a caller error rather than saturating.
        Interval::new(lo, hi)
    }
}

impl std::ops::Neg for Interval {
    type Output = Interval;

    fn neg(self) -> Interval {
        Interval {
            lo: -self.hi,
            hi: -self.lo,
        }
    }
}

impl std::ops::Add for Interval {
    type Output = Interval;

    fn add(self, rhs: Interval) -> Interval {
        let lo = sum_lo(self.lo, rhs.lo);
        let hi = sum_hi(self.hi, rhs.hi);
        Interval::checked(lo, hi).expect("interval addition overflowed f64")
    }
}

impl std::ops::Sub for Interval {
    type Output = Interval;

    fn sub(self, rhs: Interval) -> Interval {
        let lo = sum_lo(self.lo, -rhs.hi);
        let hi = sum_hi(self.hi, -rhs.lo);
        Interval::checked(lo, hi).expect("interval subtraction overflowed f64")
    }
}

impl std::ops::Mul for Interval {
    type Output = Interval;

    // The four endpoint products with min/max; no case-split optimization.
    fn mul(self, rhs: Interval) -> Interval {
        let cands = [
            prod(self.lo, rhs.lo),
            prod(self.lo, rhs.hi),
            prod(self.hi, rhs.lo),
            prod(self.hi, rhs.hi),
        ];
        let lo = finish_lo(select_min(&cands));
        let hi = finish_hi(select_max(&cands));
        Interval::checked(lo, hi).expect("interval multiplication overflowed f64")
    }
}

impl std::fmt::Display for Interval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{:.16e}, {:.16e}]", self.lo, self.hi)
    }
}
