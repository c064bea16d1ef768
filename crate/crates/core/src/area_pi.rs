//! A rigorous two-sided enclosure of pi and the area schemes built on it.
//!
//! The half-angle recursion here is the load-bearing choice: computing
//! sin(pi/n) through a trig library would smuggle a ready-made pi into the
//! pipeline. Instead the recursion is seeded at the 3-gon with the exact
//! algebraic values sin(pi/3) = sqrt(3)/2, cos(pi/3) = 1/2 and doubles the
//! side count using only square roots and rational arithmetic. Nothing in
//! this module calls the series trigonometry in [`crate::ctrig`].
//!
//! The pi bracket n*sin(pi/n) < pi < n*tan(pi/n) is the inequality
//! sin t < t < tan t evaluated at t = pi/n and scaled by n; inscribed areas
//! alone approach pi only from below and could never certify an upper bound.

use crate::error::{Error, Result};
use crate::interval::Interval;

/// Past this doubling index the one-ulp inflation per operation dominates
/// and enclosure widths stop shrinking in double precision.
pub const DEPTH_FLOOR: u32 = 40;

/// Smallest honestly reachable pi-enclosure width before the depth floor.
pub const MIN_TARGET_WIDTH: f64 = 1e-12;

/// State of the pi-free recursion: enclosures of sin and cos at the
/// half central angle pi/n, with n = 3 * 2^k.
#[derive(Copy, Clone, Debug)]
pub struct PolygonStage {
    k: u32,
    n: u64,
    sin: Interval,
    cos: Interval,
}

impl PolygonStage {
    /// The 3-gon seed: k = 0, n = 3, sin = sqrt(`[3,3]`)/2, cos = `[1/2, 1/2]`.
    pub fn seed() -> PolygonStage {
        let sqrt3 = Interval::point(3.0)
            .unwrap()
            .sqrt()
            .expect("sqrt of 3 is defined");
        let sin = sqrt3
            .div(Interval::point(2.0).unwrap())
            .expect("division by 2");
        PolygonStage {
            k: 0,
            n: 3,
            sin,
            cos: Interval::point(0.5).unwrap(),
        }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Side count, exactly 3 * 2^k.
    pub fn n(&self) -> u64 {
        self.n
    }

    /// Enclosure of sin(pi/n).
    pub fn sin(&self) -> Interval {
        self.sin
    }

    /// Enclosure of cos(pi/n).
    pub fn cos(&self) -> Interval {
        self.cos
    }

    /// Doubles the side count via the half-angle identities
    /// sin(t/2) = sqrt((1 - cos t)/2), cos(t/2) = sqrt((1 + cos t)/2).
    ///
    /// The sine is computed along two algebraically identical routes and
    /// the enclosures intersected: the direct (1 - cos)/2 form, exact at
    /// the early stages where cos is a clean dyadic value, and the
    /// cancellation-free sin^2/(2(1 + cos)) form, which keeps relative
    /// widths near the ulp floor once 1 - cos becomes tiny. Either alone
    /// contains the true value, so their intersection does too.
    pub fn advance(&self) -> Result<PolygonStage> {
        if self.k >= DEPTH_FLOOR {
            return Err(Error::DepthExceeded {
                k: self.k,
                floor: DEPTH_FLOOR,
            });
        }
        let one = Interval::point(1.0).unwrap();
        let two = Interval::point(2.0).unwrap();
        let one_plus = one + self.cos;

        let cos_next = one_plus.div(two)?.sqrt()?;

        let direct = (one - self.cos).div(two)?.sqrt()?;
        let guarded = (self.sin * self.sin).div(two * one_plus)?.sqrt()?;
        let lo = direct.lo().max(guarded.lo());
        let hi = direct.hi().min(guarded.hi());
        let sin_next = Interval::new(lo, hi).expect("both enclosures contain sin(pi/2n)");

        Ok(PolygonStage {
            k: self.k + 1,
            n: self.n * 2,
            sin: sin_next,
            cos: cos_next,
        })
    }
}

/// A certified two-sided enclosure of pi.
#[derive(Copy, Clone, Debug)]
pub struct PiEnclosure {
    pub value: Interval,
    pub k_used: u32,
    pub width: f64,
}

impl PiEnclosure {
    /// Side count of the stage that met the target.
    pub fn n(&self) -> u64 {
        3u64 << self.k_used
    }
}

fn check_radius(r: f64) -> Result<Interval> {
    if r > 0.0 && r.is_finite() {
        Interval::point(r)
    } else {
        Err(Error::NonpositiveRadius { value: r })
    }
}

/// Total area of the n inscribed triangles, n * (1/2) R^2 sin(2pi/n),
/// computed as n R^2 sin(pi/n) cos(pi/n) so it runs off the stage state.
pub fn inscribed_polygon_area(stage: &PolygonStage, radius: f64) -> Result<Interval> {
    let r = check_radius(radius)?;
    let n = Interval::point(stage.n as f64).unwrap();
    Ok(n * r * r * stage.sin * stage.cos)
}

fn stage_bracket(stage: &PolygonStage) -> Result<(Interval, Interval)> {
    let n = Interval::point(stage.n as f64).unwrap();
    let lower = n * stage.sin;
    let upper = lower.div(stage.cos)?;
    Ok((lower, upper))
}

/// Advances stages until hi(n tan) - lo(n sin) <= `target_width` and
/// returns `[lo(n sin), hi(n tan)]`.
pub fn pi_enclosure(target_width: f64) -> Result<PiEnclosure> {
    if !(target_width >= MIN_TARGET_WIDTH) {
        return Err(Error::TargetWidthTooSmall {
            value: target_width,
            min: MIN_TARGET_WIDTH,
        });
    }
    let mut stage = PolygonStage::seed();
    loop {
        let (lower, upper) = stage_bracket(&stage)?;
        let value =
            Interval::new(lower.lo(), upper.hi()).expect("lower bracket below upper bracket");
        let width = value.width();
        if width <= target_width {
            return Ok(PiEnclosure {
                value,
                k_used: stage.k,
                width,
            });
        }
        stage = stage.advance()?;
    }
}

/// Outputs of the stretched-sector/trapezoid scheme at one stage.
///
/// `trapezoid` is the total over all n trapezoids, computed from the
/// explicit bases 2R sin(pi/n), 2r sin(pi/n) and height (R - r) cos(pi/n)
/// with R = k_stretch * r; `c_total` = n sin(pi/n) cos(pi/n) r^2 is the
/// full-circle sector total and never depends on the stretch;
/// `between_sectors_factor` encloses k_stretch^2 - 1. Algebraically
/// trapezoid = c_total * between_sectors_factor; the enclosures agree to
/// combined rounding.
#[derive(Copy, Clone, Debug)]
pub struct TrapezoidSectorScheme {
    pub c_total: Interval,
    pub trapezoid: Interval,
    pub between_sectors_factor: Interval,
}

pub fn trapezoid_sector_scheme(
    stage: &PolygonStage,
    radius: f64,
    k_stretch: f64,
) -> Result<TrapezoidSectorScheme> {
    let r = check_radius(radius)?;
    if !(k_stretch > 1.0) || !k_stretch.is_finite() {
        return Err(Error::InvalidStretch { value: k_stretch });
    }
    let k = Interval::point(k_stretch).unwrap();
    let n = Interval::point(stage.n as f64).unwrap();
    let one = Interval::point(1.0).unwrap();
    let two = Interval::point(2.0).unwrap();
    let half = Interval::point(0.5).unwrap();

    let c_total = n * stage.sin * stage.cos * r * r;

    let big_r = k * r;
    let base_sum = two * big_r * stage.sin + two * r * stage.sin;
    let height = big_r * stage.cos - r * stage.cos;
    let trapezoid = n * (half * base_sum * height);

    let between_sectors_factor = k * k - one;

    Ok(TrapezoidSectorScheme {
        c_total,
        trapezoid,
        between_sectors_factor,
    })
}

/// The annulus area along two routes that are algebraically equal:
/// `unrolled` = (1/2)(2 pi R + 2 pi r)(R - r), `direct` = pi (R^2 - r^2).
#[derive(Copy, Clone, Debug)]
pub struct AnnulusAreas {
    pub unrolled: Interval,
    pub direct: Interval,
}

pub fn annulus_area(outer: f64, inner: f64, pi: &PiEnclosure) -> Result<AnnulusAreas> {
    if !(outer > inner && inner >= 0.0) || !outer.is_finite() {
        return Err(Error::InvalidRadii { outer, inner });
    }
    let r_out = Interval::point(outer).unwrap();
    let r_in = Interval::point(inner).unwrap();
    let two = Interval::point(2.0).unwrap();
    let half = Interval::point(0.5).unwrap();
    let two_pi = two * pi.value;

    let unrolled = half * (two_pi * r_out + two_pi * r_in) * (r_out - r_in);
    let direct = pi.value * (r_out * r_out - r_in * r_in);
    Ok(AnnulusAreas { unrolled, direct })
}

/// pi R^2 with the certified enclosure.
pub fn circle_area(radius: f64, pi: &PiEnclosure) -> Result<Interval> {
    let r = check_radius(radius)?;
    Ok(pi.value * r * r)
}

/// (1/2) theta R^2. Lives downstream of the certified pi on purpose: the
/// sector formula presupposes the circle's area, so nothing upstream may
/// use it.
pub fn sector_area(theta: f64, radius: f64, pi: &PiEnclosure) -> Result<Interval> {
    let r = check_radius(radius)?;
    let max = 2.0 * pi.value.hi() * (1.0 + 1e-15);
    if !(0.0..=max).contains(&theta) {
        return Err(Error::ThetaOutOfRange { value: theta, max });
    }
    let half = Interval::point(0.5).unwrap();
    let t = Interval::point(theta).unwrap();
    Ok(half * t * r * r)
}
