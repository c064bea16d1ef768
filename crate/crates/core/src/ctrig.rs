//! Enclosures of sin, cos, tan, sinc and two gap functions, from truncated
//! alternating series.
//!
//! Each point evaluation sums the series in interval arithmetic, stops when
//! the next term drops below 2^-60 or after 25 terms, and folds the first
//! omitted term in as `[-T, +T]`. On the capped domains every series has
//! term magnitudes decreasing from the truncation point on, which is what
//! makes the first omitted term a valid remainder bound.
//!
//! Wide inputs are handled by endpoint evaluation plus the monotonicity of
//! each function on its capped domain, never by interval-evaluating the
//! polynomial, so the dependency problem does not arise.
//!
//! The two gap functions exist because `x - sin_enc(x)` cancels
//! catastrophically near zero; their dedicated series keep the leading
//! `x^3` term intact, which is what makes positivity certifiable there.

use crate::error::{Error, Result};
use crate::interval::Interval;

/// Stop once the next term magnitude falls below this.
const TERM_EPS: f64 = 8.673617379884035e-19; // 2^-60

/// Hard cap on summed terms.
const MAX_TERMS: u32 = 25;

/// Domain cap for sin, cos, sinc.
pub const SIN_COS_CAP: f64 = 2.0;

/// Domain cap for tan and the gap functions; keeps cos away from zero and
/// the gap series decreasing from the first term.
pub const TAN_GAP_CAP: f64 = 1.5;

// sin is increasing up to here and decreasing from SIN_DEC_BOTTOM on;
// the sliver in between (containing pi/2) falls back to the bound sin <= 1.
// Not approximations of pi/2: they must bracket it strictly.
#[allow(clippy::approx_constant)]
const SIN_INC_TOP: f64 = 1.5707;
#[allow(clippy::approx_constant)]
const SIN_DEC_BOTTOM: f64 = 1.5708;

/// A point-series evaluation: self-contained enclosure plus diagnostics.
///
/// `remainder_bound` is the magnitude of the first omitted term; it is
/// already folded into `value`.
#[derive(Copy, Clone, Debug)]
pub struct SeriesEnclosure {
    pub value: Interval,
    pub terms_used: u32,
    pub remainder_bound: f64,
}

/// Sums `first + sum of next(i, term_i)` until the truncation rule fires,
/// then widens by the first omitted term. `next` must produce the signed
/// successor term; `i` is the 1-based position of the current last term.
fn sum_alternating(
    first: Interval,
    mut next: impl FnMut(u32, Interval) -> Interval,
) -> SeriesEnclosure {
    let mut sum = first;
    let mut term = first;
    let mut used = 1u32;
    loop {
        let candidate = next(used, term);
        let t = candidate.mag();
        if t < TERM_EPS || used == MAX_TERMS {
            let remainder = Interval::new(-t, t).expect("term magnitude is finite");
            return SeriesEnclosure {
                value: sum + remainder,
                terms_used: used,
                remainder_bound: t,
            };
        }
        sum = sum + candidate;
        term = candidate;
        used += 1;
    }
}

fn check_cap(x: Interval, cap: f64) -> Result<()> {
    if x.lo().abs() > cap || x.hi().abs() > cap {
        Err(Error::DomainExceeded {
            lo: x.lo(),
            hi: x.hi(),
            cap,
        })
    } else {
        Ok(())
    }
}

fn pt(x: f64) -> Interval {
    Interval::point(x).expect("point within a checked domain")
}

/// sin at a single point, |t| <= 2.
pub fn sin_series(t: f64) -> Result<SeriesEnclosure> {
    check_cap(pt(t), SIN_COS_CAP)?;
    let ti = pt(t);
    let t2 = ti * ti;
    Ok(sum_alternating(ti, |i, term| {
        let den = pt(-(((2 * i) * (2 * i + 1)) as f64));
        (term * t2).div(den).expect("nonzero factorial denominator")
    }))
}

/// cos at a single point, |t| <= 2.
pub fn cos_series(t: f64) -> Result<SeriesEnclosure> {
    check_cap(pt(t), SIN_COS_CAP)?;
    let ti = pt(t);
    let t2 = ti * ti;
    Ok(sum_alternating(Interval::point(1.0).unwrap(), |i, term| {
        let den = pt(-(((2 * i - 1) * (2 * i)) as f64));
        (term * t2).div(den).expect("nonzero factorial denominator")
    }))
}

/// sin(t)/t extended by 1 at t = 0, via 1 - t^2/6 + t^4/120 - ...; the
/// value formula needs no special case at zero.
pub fn sinc_series(t: f64) -> Result<SeriesEnclosure> {
    check_cap(pt(t), SIN_COS_CAP)?;
    let ti = pt(t);
    let t2 = ti * ti;
    Ok(sum_alternating(Interval::point(1.0).unwrap(), |i, term| {
        let den = pt(-(((2 * i) * (2 * i + 1)) as f64));
        (term * t2).div(den).expect("nonzero factorial denominator")
    }))
}

/// t - sin(t) via t^3/6 - t^5/120 + ..., 0 <= t <= 1.5.
pub fn gap_x_minus_sin_series(t: f64) -> Result<SeriesEnclosure> {
    if !(0.0..=TAN_GAP_CAP).contains(&t) {
        return Err(Error::DomainExceeded {
            lo: t,
            hi: t,
            cap: TAN_GAP_CAP,
        });
    }
    let ti = pt(t);
    let t2 = ti * ti;
    let first = (ti * t2).div(pt(6.0)).expect("constant divisor");
    Ok(sum_alternating(first, |i, term| {
        let den = pt(-(((2 * i + 2) * (2 * i + 3)) as f64));
        (term * t2).div(den).expect("nonzero factorial denominator")
    }))
}

/// sin(t) - t*cos(t) via t^3/3 - t^5/30 + t^7/840 - ..., 0 <= t <= 1.5.
pub fn gap_sin_minus_x_cos_series(t: f64) -> Result<SeriesEnclosure> {
    if !(0.0..=TAN_GAP_CAP).contains(&t) {
        return Err(Error::DomainExceeded {
            lo: t,
            hi: t,
            cap: TAN_GAP_CAP,
        });
    }
    let ti = pt(t);
    let t2 = ti * ti;
    let first = (ti * t2).div(pt(3.0)).expect("constant divisor");
    // term_k = 2k t^(2k+1) / (2k+1)!; i is the k of the current term
    Ok(sum_alternating(first, |i, term| {
        let num = pt((i + 1) as f64);
        let den = pt(-((i * (2 * i + 2) * (2 * i + 3)) as f64));
        (term * t2 * num).div(den).expect("nonzero denominator")
    }))
}

fn sin_nonneg(a: f64, b: f64) -> Result<Interval> {
    let ea = sin_series(a)?.value;
    let eb = sin_series(b)?.value;
    if b <= SIN_INC_TOP {
        Interval::new(ea.lo(), eb.hi())
    } else if a >= SIN_DEC_BOTTOM {
        Interval::new(eb.lo(), ea.hi())
    } else {
        // the interval may straddle the maximum at pi/2; sin <= 1 closes it
        Interval::new(ea.lo().min(eb.lo()), 1.0)
    }
}

/// Enclosure of sin over `x`, |x| <= 2 endpoint-wise.
pub fn sin_enc(x: Interval) -> Result<Interval> {
    check_cap(x, SIN_COS_CAP)?;
    if x.lo() >= 0.0 {
        sin_nonneg(x.lo(), x.hi())
    } else if x.hi() <= 0.0 {
        Ok(-sin_nonneg(-x.hi(), -x.lo())?)
    } else {
        Ok((-sin_nonneg(0.0, -x.lo())?).hull(sin_nonneg(0.0, x.hi())?))
    }
}

fn cos_nonneg(a: f64, b: f64) -> Result<Interval> {
    // cos is decreasing on [0, 2]
    let ea = cos_series(a)?.value;
    let eb = cos_series(b)?.value;
    Interval::new(eb.lo(), ea.hi())
}

/// Enclosure of cos over `x`, |x| <= 2 endpoint-wise.
pub fn cos_enc(x: Interval) -> Result<Interval> {
    check_cap(x, SIN_COS_CAP)?;
    if x.lo() >= 0.0 {
        cos_nonneg(x.lo(), x.hi())
    } else if x.hi() <= 0.0 {
        cos_nonneg(-x.hi(), -x.lo())
    } else {
        // 0 is interior, where cos attains its maximum 1
        let m = (-x.lo()).max(x.hi());
        Interval::new(cos_series(m)?.value.lo(), 1.0)
    }
}

/// Enclosure of tan over `x`, |x| <= 1.5 endpoint-wise, as sin/cos.
pub fn tan_enc(x: Interval) -> Result<Interval> {
    check_cap(x, TAN_GAP_CAP)?;
    let s = sin_enc(x)?;
    let c = cos_enc(x)?;
    if c.contains(0.0) {
        return Err(Error::CosineMayVanish);
    }
    s.div(c)
}

fn sinc_nonneg(a: f64, b: f64) -> Result<Interval> {
    // sinc is decreasing on [0, 2]: its derivative is
    // -(sin t - t cos t)/t^2, and sin t - t cos t > 0 there
    let ea = sinc_series(a)?.value;
    let eb = sinc_series(b)?.value;
    Interval::new(eb.lo(), ea.hi())
}

/// Enclosure of sin(t)/t (with value 1 at 0) over `x`, |x| <= 2.
pub fn sinc_enc(x: Interval) -> Result<Interval> {
    check_cap(x, SIN_COS_CAP)?;
    if x.lo() >= 0.0 {
        sinc_nonneg(x.lo(), x.hi())
    } else if x.hi() <= 0.0 {
        sinc_nonneg(-x.hi(), -x.lo())
    } else {
        // even, with maximum 1 attained at the interior point 0
        let m = (-x.lo()).max(x.hi());
        Interval::new(sinc_series(m)?.value.lo(), 1.0)
    }
}

/// Enclosure of theta - sin(theta) over `x`, 0 <= x.lo, x.hi <= 1.5.
///
/// Nondecreasing: it is the integral from 0 of (1 - cos t) >= 0, so the
/// endpoint evaluations bound the whole interval.
pub fn gap_theta_minus_sin(x: Interval) -> Result<Interval> {
    let ea = gap_x_minus_sin_series(x.lo())?.value;
    let eb = gap_x_minus_sin_series(x.hi())?.value;
    Interval::new(ea.lo(), eb.hi())
}

/// Enclosure of sin(theta) - theta*cos(theta) over `x`, 0 <= x.lo,
/// x.hi <= 1.5. Nondecreasing: integral from 0 of t*sin(t) >= 0.
pub fn gap_sin_minus_theta_cos(x: Interval) -> Result<Interval> {
    let ea = gap_sin_minus_x_cos_series(x.lo())?.value;
    let eb = gap_sin_minus_x_cos_series(x.hi())?.value;
    Interval::new(ea.lo(), eb.hi())
}
