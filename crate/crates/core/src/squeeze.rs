//! Machine verification of the squeeze chain and the angle bounds, plus
//! certified epsilon-delta witnesses for sin(theta)/theta -> 1.
//!
//! Chain checks are pointwise with a width cap: the three chain members
//! share theta, and wide-interval evaluation of the whole expression would
//! blow up on the dependency problem. Dense pointwise certification plus
//! the monotonicity of the gap functions restores interval coverage.
//!
//! Cell verifications are independent and run under rayon when the
//! `parallel` feature is on; the summary is an ordered fold over the cell
//! outcomes, so results are bit-identical regardless of scheduling.

use crate::ctrig;
use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::report::fmt_f64;

/// Chain checks demand near-point inputs; wider thetas error out.
pub const POINT_WIDTH_CAP: f64 = 1e-6;

/// Domain cap shared with the gap functions.
pub const THETA_CAP: f64 = 1.5;

const DELTA_FLOOR: f64 = 1e-14;
pub const EPSILON_MIN: f64 = 1e-12;
pub const EPSILON_MAX: f64 = 0.1;

/// Outcome of one certified chain check
/// `1 < theta/sin(theta) < sec(theta) + tan(theta/2)` at a single angle.
#[derive(Copy, Clone, Debug)]
pub struct BoundsReport {
    pub theta: Interval,
    /// The constant lower member, exactly [1, 1].
    pub lower: Interval,
    /// Enclosure of theta / sin(theta).
    pub ratio: Interval,
    /// Enclosure of 1/cos + sqrt((1 - cos)/(1 + cos)).
    pub upper: Interval,
    /// True iff the members separate strictly at interval level:
    /// lower.hi < ratio.lo and ratio.hi < upper.lo.
    pub verified: bool,
    /// Minimum separation between consecutive chain members.
    pub margin: f64,
}

/// Aggregate outcome of a grid verification.
#[derive(Copy, Clone, Debug)]
pub struct VerificationSummary {
    pub domain: Interval,
    pub cells: u64,
    pub verified_cells: u64,
    pub max_refinement_depth: u32,
    /// Positive exactly when every cell verified.
    pub worst_margin: f64,
}

impl VerificationSummary {
    pub fn all_verified(&self) -> bool {
        self.verified_cells == self.cells
    }

    /// CSV fields: domain_lo, domain_hi, cells, verified_cells,
    /// max_refinement_depth, worst_margin.
    pub fn csv_fields(&self) -> Vec<String> {
        vec![
            fmt_f64(self.domain.lo()),
            fmt_f64(self.domain.hi()),
            self.cells.to_string(),
            self.verified_cells.to_string(),
            self.max_refinement_depth.to_string(),
            fmt_f64(self.worst_margin),
        ]
    }
}

#[cfg(feature = "parallel")]
fn map_indexed<T: Send>(count: u64, f: impl Fn(u64) -> T + Sync + Send) -> Vec<T> {
    use rayon::prelude::*;
    (0..count).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn map_indexed<T>(count: u64, f: impl Fn(u64) -> T + Sync) -> Vec<T> {
    (0..count).map(f).collect()
}

/// Certified evaluation of the chain at a near-point `theta`,
/// 0 < theta.lo, theta.hi <= 1.5, width <= 1e-6.
pub fn chain_bounds(theta: Interval) -> Result<BoundsReport> {
    if !(theta.lo() > 0.0) || theta.hi() > THETA_CAP {
        return Err(Error::DomainExceeded {
            lo: theta.lo(),
            hi: theta.hi(),
            cap: THETA_CAP,
        });
    }
    if theta.width() > POINT_WIDTH_CAP {
        return Err(Error::NotPointEnough {
            width: theta.width(),
            cap: POINT_WIDTH_CAP,
        });
    }
    let one = Interval::point(1.0).unwrap();
    let sin = ctrig::sin_enc(theta)?;
    let cos = ctrig::cos_enc(theta)?;

    let ratio = theta.div(sin)?;
    let sec = one.div(cos)?;
    let one_plus = one + cos;
    let root_arg = (one - cos).div(one_plus)?;
    // 1 - cos(theta) >= 0, so the enclosure may be clipped at zero before
    // the square root
    let root_arg = Interval::new(root_arg.lo().max(0.0), root_arg.hi())
        .expect("upper endpoint is nonnegative");
    let root = root_arg.sqrt()?;
    // Same quantity as sin/(1 + cos), which is cancellation-free: near 0
    // the sqrt form bottoms out at sqrt(ulp) ~ 1e-8 while the true value
    // is ~theta/2. Intersecting the two enclosures keeps containment and
    // the better width of each regime.
    let root_alt = sin.div(one_plus)?;
    let root = Interval::new(root.lo().max(root_alt.lo()), root.hi().min(root_alt.hi()))
        .expect("both enclosures contain tan(theta/2)");
    let upper = sec + root;

    let sep_low = ratio.lo() - 1.0;
    let sep_high = upper.lo() - ratio.hi();
    let verified = sep_low > 0.0 && sep_high > 0.0;
    Ok(BoundsReport {
        theta,
        lower: one,
        ratio,
        upper,
        verified,
        margin: sep_low.min(sep_high),
    })
}

/// Runs `points` chain checks on an inclusive uniform grid over `domain`,
/// 0 < domain.lo <= domain.hi <= 1.5.
pub fn verify_chain_grid(domain: Interval, points: u64) -> Result<VerificationSummary> {
    if !(domain.lo() > 0.0) || domain.hi() > THETA_CAP {
        return Err(Error::DomainExceeded {
            lo: domain.lo(),
            hi: domain.hi(),
            cap: THETA_CAP,
        });
    }
    if points < 1 {
        return Err(Error::InvalidCellCount { value: points });
    }
    let (a, b) = (domain.lo(), domain.hi());
    let outcomes = map_indexed(points, |i| {
        let t = if points == 1 {
            a
        } else {
            let frac = i as f64 / (points - 1) as f64;
            (a + frac * (b - a)).clamp(a, b)
        };
        let report = chain_bounds(Interval::point(t).expect("grid point is finite"))
            .expect("grid point satisfies the chain preconditions");
        (report.verified, report.margin)
    });
    let verified_cells = outcomes.iter().filter(|o| o.0).count() as u64;
    let worst_margin = outcomes.iter().map(|o| o.1).fold(f64::INFINITY, f64::min);
    Ok(VerificationSummary {
        domain,
        cells: points,
        verified_cells,
        max_refinement_depth: 0,
        worst_margin,
    })
}

struct CellOutcome {
    verified: bool,
    margin: f64,
    depth_used: u32,
}

/// Certifies sin t < t < tan t on the cell [a, b] by checking the two gap
/// enclosures at the left endpoint: both gaps vanish at 0 and have
/// nonnegative derivatives (1 - cos t and t sin t), i.e. each equals the
/// integral of a nonnegative integrand from 0, so positivity at `a` covers
/// every t >= a. Midpoint spot-checks certify those derivative signs:
/// cos - 1 <= 0 and sec^2 - 1 >= 0.
fn certify_cell(a: f64, b: f64, depth_left: u32) -> CellOutcome {
    let point_a = Interval::point(a).expect("cell endpoint is finite");
    let g1 = ctrig::gap_theta_minus_sin(point_a).expect("cell endpoint in gap domain");
    let g2 = ctrig::gap_sin_minus_theta_cos(point_a).expect("cell endpoint in gap domain");

    let mid = 0.5 * (a + b);
    let spot = spot_check_margin(mid);

    let margin = g1.lo().min(g2.lo()).min(spot);
    // strict throughout, so a verified summary always has positive margin
    if g1.lo() > 0.0 && g2.lo() > 0.0 && spot > 0.0 {
        return CellOutcome {
            verified: true,
            margin,
            depth_used: 0,
        };
    }
    if depth_left == 0 || !(a < mid && mid < b) {
        return CellOutcome {
            verified: false,
            margin,
            depth_used: 0,
        };
    }
    let left = certify_cell(a, mid, depth_left - 1);
    let right = certify_cell(mid, b, depth_left - 1);
    CellOutcome {
        verified: left.verified && right.verified,
        margin: left.margin.min(right.margin),
        depth_used: 1 + left.depth_used.max(right.depth_used),
    }
}

fn spot_check_margin(mid: f64) -> f64 {
    let c = ctrig::cos_enc(Interval::point(mid).expect("midpoint is finite"))
        .expect("midpoint within cos domain");
    let cos_side = 1.0 - c.hi();
    let sec2_side = match Interval::point(1.0).unwrap().div(c * c) {
        Ok(sec2) => sec2.lo() - 1.0,
        Err(_) => f64::NEG_INFINITY,
    };
    cos_side.min(sec2_side)
}

/// Partitions `domain` into `initial_cells` uniform cells and certifies
/// sin t < t < tan t on each, bisecting failed cells up to `max_depth`.
/// Preconditions: 0 <= domain.lo < domain.hi <= 1.5, initial_cells >= 1.
///
/// A cell is counted verified only if its entire extent certifies. Cells
/// whose left endpoint is 0 can never verify: the inequalities are strict
/// only for t > 0, and the gap enclosures at 0 contain 0 honestly.
pub fn verify_angle_bounds(
    domain: Interval,
    initial_cells: u64,
    max_depth: u32,
) -> Result<VerificationSummary> {
    if !(domain.lo() >= 0.0) || !(domain.lo() < domain.hi()) || domain.hi() > THETA_CAP {
        return Err(Error::DomainExceeded {
            lo: domain.lo(),
            hi: domain.hi(),
            cap: THETA_CAP,
        });
    }
    if initial_cells < 1 {
        return Err(Error::InvalidCellCount {
            value: initial_cells,
        });
    }
    let (lo, hi) = (domain.lo(), domain.hi());
    let edge = |i: u64| -> f64 {
        if i == initial_cells {
            hi
        } else {
            (lo + (i as f64 / initial_cells as f64) * (hi - lo)).clamp(lo, hi)
        }
    };
    let outcomes = map_indexed(initial_cells, |i| {
        certify_cell(edge(i), edge(i + 1), max_depth)
    });

    let mut verified_cells = 0u64;
    let mut worst_margin = f64::INFINITY;
    let mut deepest = 0u32;
    for o in &outcomes {
        if o.verified {
            verified_cells += 1;
        }
        worst_margin = worst_margin.min(o.margin);
        deepest = deepest.max(o.depth_used);
    }
    Ok(VerificationSummary {
        domain,
        cells: initial_cells,
        verified_cells,
        max_refinement_depth: deepest,
        worst_margin,
    })
}

/// A certified epsilon-delta witness: |sin(t)/t - 1| < epsilon for all
/// 0 < t <= delta.
#[derive(Copy, Clone, Debug)]
pub struct SqueezeWitness {
    pub delta: f64,
    pub certificate: BoundsReport,
}

/// Finds delta by bisection on the certified upper chain member.
///
/// The certificate at theta = delta shows upper(delta) - 1 < epsilon; the
/// chain gives 1 < t/sin(t) < upper(t), and upper is increasing on
/// (0, pi/2), so 1 - sin(t)/t < upper(delta) - 1 < epsilon for every
/// 0 < t <= delta.
///
/// The certificate's `verified` flag reports strict chain separation at
/// delta itself. Below theta ~ 1e-7 the separation ratio - 1 ~ theta^2/6
/// sinks under double-precision enclosure noise, so witnesses for
/// epsilon below ~1e-7 carry `verified = false` while the upper-bound
/// inequality they certify still holds.
pub fn sinc_squeeze_limit(epsilon: f64) -> Result<SqueezeWitness> {
    if !(EPSILON_MIN..=EPSILON_MAX).contains(&epsilon) {
        return Err(Error::EpsilonOutOfRange {
            value: epsilon,
            min: EPSILON_MIN,
            max: EPSILON_MAX,
        });
    }
    let certified = |theta: f64| -> Result<(bool, BoundsReport)> {
        let report = chain_bounds(Interval::point(theta)?)?;
        Ok((report.upper.hi() - 1.0 < epsilon, report))
    };

    let (ok_floor, floor_report) = certified(DELTA_FLOOR)?;
    if !ok_floor {
        return Err(Error::CannotCertify { floor: DELTA_FLOOR });
    }
    let mut lo = DELTA_FLOOR;
    let mut lo_report = floor_report;
    let mut hi = 0.5;
    if let (true, report) = certified(hi)? {
        // epsilon large enough that the whole bracket certifies
        return Ok(SqueezeWitness {
            delta: hi,
            certificate: report,
        });
    }
    // delta needs one significant digit, not precision
    while hi - lo >= lo / 16.0 {
        let mid = 0.5 * (lo + hi);
        let (ok, report) = certified(mid)?;
        if ok {
            lo = mid;
            lo_report = report;
        } else {
            hi = mid;
        }
    }
    Ok(SqueezeWitness {
        delta: lo,
        certificate: lo_report,
    })
}
