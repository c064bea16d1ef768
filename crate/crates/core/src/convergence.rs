//! Approximation tables, empirical convergence orders, and Richardson
//! extrapolation as a diagnostic.
//!
//! Errors are measured against the library's own certified pi enclosure
//! (outer interval distance), not a hardcoded constant, so the tables are
//! self-contained; high-precision reference constants appear only in tests.

use crate::area_pi::{self, PolygonStage};
use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::report::fmt_f64;

/// Which area sequence to tabulate. Both generate the same numbers through
/// different formulas (double-angle identity); tabulating both and
/// comparing is the point.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Scheme {
    Inscribed,
    Trapezoid,
}

/// One row of an approximation table.
#[derive(Clone, Debug)]
pub struct ConvergenceRecord {
    pub n: u64,
    pub value: Interval,
    /// Upper bound on the distance from the true scheme value to the
    /// certified reference area.
    pub abs_error_bound: f64,
    /// log2 of the previous/current error ratio; absent on the first row.
    pub local_order: Option<f64>,
}

impl ConvergenceRecord {
    /// CSV fields after the leading k column: n, value_lo, value_hi,
    /// abs_error_bound, local_order (empty when absent).
    pub fn csv_fields(&self) -> Vec<String> {
        vec![
            self.n.to_string(),
            fmt_f64(self.value.lo()),
            fmt_f64(self.value.hi()),
            fmt_f64(self.abs_error_bound),
            self.local_order.map(fmt_f64).unwrap_or_default(),
        ]
    }
}

pub const KMAX_LIMIT: u32 = 30;

/// Reference width used for error measurement throughout.
const REFERENCE_WIDTH: f64 = 1e-10;

/// The certified area pi * radius^2 every table row is measured against.
pub fn reference_area(radius: f64) -> Result<Interval> {
    let r = Interval::point(radius).map_err(|_| Error::NonpositiveRadius { value: radius })?;
    if !(radius > 0.0) {
        return Err(Error::NonpositiveRadius { value: radius });
    }
    let pi = area_pi::pi_enclosure(REFERENCE_WIDTH)?;
    Ok(pi.value * r * r)
}

/// Largest possible |a - b| with a in `value`, b in `reference`.
fn outer_distance(value: Interval, reference: Interval) -> f64 {
    let d1 = (value.hi() - reference.lo()).abs();
    let d2 = (reference.hi() - value.lo()).abs();
    d1.max(d2)
}

/// One record per stage k = 0..=k_max, errors measured against
/// [`reference_area`].
pub fn sequence_table(scheme: Scheme, k_max: u32, radius: f64) -> Result<Vec<ConvergenceRecord>> {
    if k_max > KMAX_LIMIT {
        return Err(Error::KmaxOutOfRange {
            value: k_max,
            max: KMAX_LIMIT,
        });
    }
    let reference = reference_area(radius)?;
    let mut records = Vec::with_capacity(k_max as usize + 1);
    let mut stage = PolygonStage::seed();
    let mut prev_error: Option<f64> = None;
    for k in 0..=k_max {
        let value = match scheme {
            Scheme::Inscribed => area_pi::inscribed_polygon_area(&stage, radius)?,
            // c_total is independent of the auxiliary stretch factor
            Scheme::Trapezoid => area_pi::trapezoid_sector_scheme(&stage, radius, 2.0)?.c_total,
        };
        let error = outer_distance(value, reference);
        let local_order = match prev_error {
            Some(prev) if prev > 0.0 && error > 0.0 => Some((prev / error).log2()),
            _ => None,
        };
        records.push(ConvergenceRecord {
            n: stage.n(),
            value,
            abs_error_bound: error,
            local_order,
        });
        prev_error = Some(error);
        if k < k_max {
            stage = stage.advance()?;
        }
    }
    Ok(records)
}

/// Errors below this multiple of the reference resolution count as floored
/// and are excluded from order estimates; the measured ratio collapses
/// there for reasons that have nothing to do with the scheme.
fn error_floor(records: &[ConvergenceRecord]) -> f64 {
    let scale = records
        .iter()
        .map(|r| r.value.mag())
        .fold(0.0f64, f64::max)
        .max(1e-300);
    // reference width is 1e-10 * radius^2-ish; scale/3 approximates radius^2
    10.0 * REFERENCE_WIDTH * (scale / 3.0)
}

/// Median of the local orders log2(e_k / e_{k+1}) over the last half of
/// the records, excluding pairs at the measurement floor. Needs at least
/// 4 records with strictly positive error bounds and 2 usable pairs.
pub fn estimate_order(records: &[ConvergenceRecord]) -> Result<f64> {
    let positive = records.iter().filter(|r| r.abs_error_bound > 0.0).count();
    if positive < 4 {
        return Err(Error::InsufficientData {
            found: positive,
            needed: 4,
        });
    }
    let floor = error_floor(records);
    let start = (records.len() / 2).max(1);
    let mut orders: Vec<f64> = Vec::new();
    for i in start..records.len() {
        let prev = records[i - 1].abs_error_bound;
        let cur = records[i].abs_error_bound;
        if prev > floor && cur > floor {
            orders.push((prev / cur).log2());
        }
    }
    if orders.len() < 2 {
        return Err(Error::InsufficientData {
            found: orders.len(),
            needed: 2,
        });
    }
    orders.sort_by(|a, b| a.partial_cmp(b).expect("orders are finite"));
    let mid = orders.len() / 2;
    Ok(if orders.len() % 2 == 1 {
        orders[mid]
    } else {
        0.5 * (orders[mid - 1] + orders[mid])
    })
}

/// Accelerated values (2^order * A_{2n} - A_n) / (2^order - 1) with errors
/// re-measured against `reference`; the output is indexed by the finer n
/// of each pair.
pub fn richardson(
    records: &[ConvergenceRecord],
    order: f64,
    reference: Interval,
) -> Result<Vec<ConvergenceRecord>> {
    if !(order > 0.0) {
        return Err(Error::InvalidOrder { value: order });
    }
    if records.len() < 2 {
        return Err(Error::InsufficientData {
            found: records.len(),
            needed: 2,
        });
    }
    let factor = Interval::point(order.exp2()).map_err(|_| Error::InvalidOrder { value: order })?;
    let one = Interval::point(1.0).unwrap();
    let denom = factor - one;
    let mut out = Vec::with_capacity(records.len() - 1);
    let mut prev_error: Option<f64> = None;
    for pair in records.windows(2) {
        let coarse = &pair[0];
        let fine = &pair[1];
        let value = (factor * fine.value - coarse.value).div(denom)?;
        let error = outer_distance(value, reference);
        let local_order = match prev_error {
            Some(prev) if prev > 0.0 && error > 0.0 => Some((prev / error).log2()),
            _ => None,
        };
        out.push(ConvergenceRecord {
            n: fine.n,
            value,
            abs_error_bound: error,
            local_order,
        });
        prev_error = Some(error);
    }
    Ok(out)
}

#[cfg(test)]
#[allow(clippy::approx_constant)] // frozen decimal fixtures, not stand-ins for consts
mod tests {
    use super::*;
    use picert_oracle as oracle;

    #[test]
    fn table_starts_at_the_exact_radicals() {
        let t = sequence_table(Scheme::Inscribed, 1, 1.0).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t[0].n, 3);
        assert!(t[0].value.contains(1.299038105676658));
        assert!(t[0].local_order.is_none());
        assert_eq!(t[1].n, 6);
        assert!(t[1].value.contains(2.598076211353316));
        assert!(t[1].local_order.is_some());
    }

    #[test]
    fn single_row_table() {
        let t = sequence_table(Scheme::Inscribed, 0, 1.0).unwrap();
        assert_eq!(t.len(), 1);
        assert!(t[0].local_order.is_none());
    }

    #[test]
    fn schemes_agree_row_by_row() {
        let a = sequence_table(Scheme::Inscribed, 12, 1.0).unwrap();
        let b = sequence_table(Scheme::Trapezoid, 12, 1.0).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.n, y.n);
            assert!(x.value.overlaps(y.value), "n={}", x.n);
        }
    }

    #[test]
    fn table_rejects_bad_inputs() {
        assert!(matches!(
            sequence_table(Scheme::Inscribed, 31, 1.0),
            Err(Error::KmaxOutOfRange { .. })
        ));
        assert!(matches!(
            sequence_table(Scheme::Inscribed, 3, 0.0),
            Err(Error::NonpositiveRadius { .. })
        ));
    }

    #[test]
    fn measured_order_is_two() {
        let t = sequence_table(Scheme::Inscribed, 15, 1.0).unwrap();
        let order = estimate_order(&t).unwrap();
        assert!((1.95..=2.05).contains(&order), "order = {order}");
    }

    #[test]
    fn error_times_n_squared_approaches_the_leading_constant() {
        // e_n * n^2 -> 2 pi^3 / 3 for the inscribed scheme. The error here
        // is measured against the oracle pi directly; the table's own
        // bound carries the 1e-10 reference width, which swamps the true
        // gap once n passes ~1e5.
        let p = oracle::pi();
        let constant = p.mul(p).mul(p).mul_f64(2.0).div_f64(3.0).to_f64();
        let t = sequence_table(Scheme::Inscribed, 16, 1.0).unwrap();
        for r in t.iter().filter(|r| r.n >= 3072) {
            let lo_gap = p.sub(oracle::Dd::from_f64(r.value.lo())).abs().to_f64();
            let hi_gap = p.sub(oracle::Dd::from_f64(r.value.hi())).abs().to_f64();
            let err = lo_gap.max(hi_gap);
            let scaled = err * (r.n as f64) * (r.n as f64);
            let rel = (scaled - constant).abs() / constant;
            assert!(
                rel < 0.01,
                "n={} scaled={} constant={}",
                r.n,
                scaled,
                constant
            );
        }
    }

    #[test]
    fn errors_decrease_before_the_floor() {
        let t = sequence_table(Scheme::Inscribed, 20, 1.0).unwrap();
        for pair in t.windows(2) {
            assert!(
                pair[1].abs_error_bound < pair[0].abs_error_bound,
                "n={}",
                pair[1].n
            );
        }
    }

    #[test]
    fn order_estimation_needs_usable_data() {
        let t = sequence_table(Scheme::Inscribed, 2, 1.0).unwrap();
        assert!(matches!(
            estimate_order(&t),
            Err(Error::InsufficientData { .. })
        ));

        // synthetic records parked at the floor are excluded
        let iv = Interval::new(3.14, 3.15).unwrap();
        let floored: Vec<ConvergenceRecord> = (0..6)
            .map(|i| ConvergenceRecord {
                n: 3 << i,
                value: iv,
                abs_error_bound: 1e-13,
                local_order: None,
            })
            .collect();
        assert!(matches!(
            estimate_order(&floored),
            Err(Error::InsufficientData { .. })
        ));
    }

    #[test]
    fn richardson_accelerates_by_two_orders() {
        let reference = reference_area(1.0).unwrap();
        let t = sequence_table(Scheme::Inscribed, 10, 1.0).unwrap();
        let acc = richardson(&t, 2.0, reference).unwrap();

        let raw_at = |n: u64| {
            t.iter()
                .find(|r| r.n == n)
                .map(|r| r.abs_error_bound)
                .unwrap()
        };
        let acc_at = |n: u64| {
            acc.iter()
                .find(|r| r.n == n)
                .map(|r| r.abs_error_bound)
                .unwrap()
        };
        // accelerated at n=96 already beats raw at n=1536
        assert!(acc_at(96) < raw_at(1536));

        // acceleration never worsens the error at the same n
        for r in &acc {
            assert!(r.abs_error_bound <= raw_at(r.n), "n={}", r.n);
        }

        // measured order of the accelerated sequence is at least 3.5
        let acc_order = estimate_order(&acc).unwrap();
        assert!(acc_order >= 3.5, "accelerated order = {acc_order}");
    }

    #[test]
    fn richardson_trivial_cases() {
        let reference = reference_area(1.0).unwrap();
        let t = sequence_table(Scheme::Inscribed, 0, 1.0).unwrap();
        assert!(matches!(
            richardson(&t, 2.0, reference),
            Err(Error::InsufficientData { .. })
        ));

        // identical inputs are a fixed point
        let v = Interval::new(2.0, 2.0).unwrap();
        let twin = vec![
            ConvergenceRecord {
                n: 6,
                value: v,
                abs_error_bound: 1.0,
                local_order: None,
            },
            ConvergenceRecord {
                n: 12,
                value: v,
                abs_error_bound: 1.0,
                local_order: None,
            },
        ];
        let acc = richardson(&twin, 2.0, reference).unwrap();
        assert!(acc[0].value.contains(2.0));
        assert!(acc[0].value.width() < 1e-14);

        assert!(matches!(
            richardson(&twin, 0.0, reference),
            Err(Error::InvalidOrder { .. })
        ));
    }
}
