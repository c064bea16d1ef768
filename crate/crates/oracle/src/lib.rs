//! Double-double (~31 significant digit) reference arithmetic for the test
//! suites. Everything here is deliberately independent of the interval code
//! it is used to check: plain `f64` pairs, Dekker/Knuth error-free
//! transforms, and fixed-length series.
//!
//! The oracle is test support. It makes no containment guarantees of its
//! own; its error (~1e-31 relative) is simply far below the width of any
//! enclosure it is compared against.

// Plain named methods instead of operator overloads: the oracle stays
// deliberately boring and greppable.
#![allow(clippy::should_implement_trait)]

/// A number represented as an unevaluated sum `hi + lo` with `|lo| <= ulp(hi)/2`.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let err = b - (s - a);
    (s, err)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let err = a.mul_add(b, -p);
    (p, err)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn add(self, rhs: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, rhs.hi);
        let e = e + self.lo + rhs.lo;
        let (hi, lo) = quick_two_sum(s, e);
        Dd { hi, lo }
    }

    pub fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    pub fn sub(self, rhs: Dd) -> Dd {
        self.add(rhs.neg())
    }

    pub fn mul(self, rhs: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, rhs.hi);
        let e = e + self.hi * rhs.lo + self.lo * rhs.hi;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    pub fn mul_f64(self, k: f64) -> Dd {
        let (p, e) = two_prod(self.hi, k);
        let e = e + self.lo * k;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    pub fn div(self, rhs: Dd) -> Dd {
        let q1 = self.hi / rhs.hi;
        let r = self.sub(rhs.mul_f64(q1));
        let q2 = r.hi / rhs.hi;
        let r2 = r.sub(rhs.mul_f64(q2));
        let q3 = r2.hi / rhs.hi;
        let (s, e) = two_sum(q1, q2);
        let (hi, lo) = quick_two_sum(s, e + q3);
        Dd { hi, lo }
    }

    pub fn div_f64(self, k: f64) -> Dd {
        self.div(Dd::from_f64(k))
    }

    pub fn recip(self) -> Dd {
        Dd::ONE.div(self)
    }

    /// Newton-refined square root; requires `self >= 0`.
    pub fn sqrt(self) -> Dd {
        if self.hi == 0.0 && self.lo == 0.0 {
            return Dd::ZERO;
        }
        assert!(self.hi > 0.0, "oracle sqrt of negative value");
        let a = self.hi.sqrt();
        let a_dd = Dd::from_f64(a);
        // r = (x - a^2) / (2a), correct to ~1e-33 after one step
        let r = self.sub(a_dd.mul(a_dd)).div_f64(2.0 * a);
        a_dd.add(r)
    }

    pub fn abs(self) -> Dd {
        if self.is_negative() {
            self.neg()
        } else {
            self
        }
    }

    fn is_negative(self) -> bool {
        self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0)
    }

    /// Sign of `self - x` as an ordering against a plain f64.
    pub fn cmp_f64(self, x: f64) -> std::cmp::Ordering {
        let d = self.sub(Dd::from_f64(x));
        if d.hi < 0.0 || (d.hi == 0.0 && d.lo < 0.0) {
            std::cmp::Ordering::Less
        } else if d.hi > 0.0 || (d.hi == 0.0 && d.lo > 0.0) {
            std::cmp::Ordering::Greater
        } else {
            std::cmp::Ordering::Equal
        }
    }

    pub fn ge_f64(self, x: f64) -> bool {
        self.cmp_f64(x) != std::cmp::Ordering::Less
    }

    pub fn le_f64(self, x: f64) -> bool {
        self.cmp_f64(x) != std::cmp::Ordering::Greater
    }

    /// True when this oracle value lies inside `[lo, hi]` (closed).
    pub fn within(self, lo: f64, hi: f64) -> bool {
        self.ge_f64(lo) && self.le_f64(hi)
    }
}

const SERIES_TERMS: usize = 30;

/// sin(x) by 30 Taylor terms around 0. Accurate to ~1e-31 relative for |x| <= 2.
pub fn sin(x: f64) -> Dd {
    let t = Dd::from_f64(x);
    let x2 = t.mul(t);
    let mut term = t;
    let mut sum = t;
    for k in 0..SERIES_TERMS - 1 {
        let den = ((2 * k + 2) * (2 * k + 3)) as f64;
        term = term.mul(x2).div_f64(-den);
        sum = sum.add(term);
    }
    sum
}

/// cos(x) by 30 Taylor terms around 0.
pub fn cos(x: f64) -> Dd {
    let t = Dd::from_f64(x);
    let x2 = t.mul(t);
    let mut term = Dd::ONE;
    let mut sum = Dd::ONE;
    for k in 0..SERIES_TERMS - 1 {
        let den = ((2 * k + 1) * (2 * k + 2)) as f64;
        term = term.mul(x2).div_f64(-den);
        sum = sum.add(term);
    }
    sum
}

/// tan(x) = sin(x)/cos(x); valid while cos(x) is well away from 0.
pub fn tan(x: f64) -> Dd {
    sin(x).div(cos(x))
}

/// sin(x)/x extended with value 1 at x = 0, via the series 1 - x^2/6 + x^4/120 - ...
pub fn sinc(x: f64) -> Dd {
    let t = Dd::from_f64(x);
    let x2 = t.mul(t);
    let mut term = Dd::ONE;
    let mut sum = Dd::ONE;
    for k in 0..SERIES_TERMS - 1 {
        let den = ((2 * k + 2) * (2 * k + 3)) as f64;
        term = term.mul(x2).div_f64(-den);
        sum = sum.add(term);
    }
    sum
}

/// x - sin(x) via its own series x^3/6 - x^5/120 + ..., immune to cancellation.
pub fn gap_x_minus_sin(x: f64) -> Dd {
    let t = Dd::from_f64(x);
    let x2 = t.mul(t);
    let mut term = t.mul(x2).div_f64(6.0);
    let mut sum = term;
    for k in 0..SERIES_TERMS - 1 {
        let den = ((2 * k + 4) * (2 * k + 5)) as f64;
        term = term.mul(x2).div_f64(-den);
        sum = sum.add(term);
    }
    sum
}

/// sin(x) - x*cos(x) via its series x^3/3 - x^5/30 + x^7/840 - ...
pub fn gap_sin_minus_x_cos(x: f64) -> Dd {
    let t = Dd::from_f64(x);
    let x2 = t.mul(t);
    // term_k = 2k * x^(2k+1) / (2k+1)!, starting at k = 1
    let mut term = t.mul(x2).div_f64(3.0);
    let mut sum = term;
    for k in 1..SERIES_TERMS {
        let num = (k + 1) as f64;
        let den = (k * (2 * k + 2) * (2 * k + 3)) as f64;
        term = term.mul(x2).mul_f64(num).div_f64(-den);
        sum = sum.add(term);
    }
    sum
}

/// theta / sin(theta).
pub fn ratio(x: f64) -> Dd {
    Dd::from_f64(x).div(sin(x))
}

/// sec(theta) + sqrt((1 - cos)/(1 + cos)), the chain's upper member.
pub fn chain_upper(x: f64) -> Dd {
    let c = cos(x);
    let sec = c.recip();
    let root = Dd::ONE.sub(c).div(Dd::ONE.add(c)).sqrt();
    sec.add(root)
}

fn atan_recip(n: f64) -> Dd {
    let x = Dd::ONE.div_f64(n);
    let x2 = x.mul(x);
    let mut power = x;
    let mut sum = x;
    for k in 1..60 {
        power = power.mul(x2);
        let den = (2 * k + 1) as f64;
        let contrib = if k % 2 == 1 {
            power.div_f64(-den)
        } else {
            power.div_f64(den)
        };
        sum = sum.add(contrib);
        if power.hi.abs() / den < 1e-36 {
            break;
        }
    }
    sum
}

/// pi by Machin's formula, 16*atan(1/5) - 4*atan(1/239), in double-double.
pub fn pi() -> Dd {
    atan_recip(5.0)
        .mul_f64(16.0)
        .sub(atan_recip(239.0).mul_f64(4.0))
}

#[cfg(test)]
#[allow(clippy::approx_constant)] // reference limbs are frozen literals
mod tests {
    use super::*;

    // f64(pi) and the next double-double limb of pi; standard values.
    const PI_HI: f64 = 3.141592653589793;
    const PI_LO: f64 = 1.2246467991473532e-16;

    #[test]
    fn machin_pi_matches_reference_limbs() {
        let p = pi();
        assert_eq!(p.hi, PI_HI);
        assert!((p.lo - PI_LO).abs() < 1e-30, "lo limb off: {:e}", p.lo);
    }

    #[test]
    fn series_match_f64_libm_values() {
        assert_eq!(sin(1.0).to_f64(), 0.8414709848078965);
        assert_eq!(cos(1.0).to_f64(), 0.5403023058681398);
        assert_eq!(sin(0.5).to_f64(), 0.479425538604203);
        assert_eq!(cos(0.5).to_f64(), 0.8775825618903728);
        assert_eq!(sinc(0.1).to_f64(), 0.9983341664682815);
        assert_eq!(tan(0.7853981633974483).to_f64(), 0.9999999999999999);
    }

    #[test]
    fn gap_series_agree_with_direct_subtraction() {
        for &x in &[0.25, 0.5, 1.0, 1.5] {
            let direct = Dd::from_f64(x).sub(sin(x));
            let series = gap_x_minus_sin(x);
            assert!(direct.sub(series).to_f64().abs() < 1e-28);

            let direct2 = sin(x).sub(Dd::from_f64(x).mul(cos(x)));
            let series2 = gap_sin_minus_x_cos(x);
            assert!(direct2.sub(series2).to_f64().abs() < 1e-28);
        }
    }

    #[test]
    fn sqrt_round_trips() {
        for &x in &[2.0, 3.0, 0.75, 0.25, 1e-6] {
            let r = Dd::from_f64(x).sqrt();
            let back = r.mul(r).sub(Dd::from_f64(x));
            assert!(back.to_f64().abs() < 1e-30 * x.max(1.0));
        }
        assert_eq!(Dd::from_f64(3.0).sqrt().hi, 1.7320508075688772);
    }

    #[test]
    fn pythagorean_identity_in_dd() {
        for &x in &[0.1, 0.7, 1.3, 2.0] {
            let s = sin(x);
            let c = cos(x);
            let one = s.mul(s).add(c.mul(c));
            assert!(one.sub(Dd::ONE).to_f64().abs() < 1e-30);
        }
    }

    #[test]
    fn comparisons_resolve_below_f64_ulp() {
        // pi lies strictly between f64(pi) and the next float up.
        let p = pi();
        assert!(p.cmp_f64(PI_HI) == std::cmp::Ordering::Greater);
        assert!(p.cmp_f64(PI_HI.next_up()) == std::cmp::Ordering::Less);
        assert!(p.within(PI_HI, PI_HI.next_up()));
        assert!(!p.within(0.0, PI_HI));
    }
}
