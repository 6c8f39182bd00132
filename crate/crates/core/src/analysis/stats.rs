//! Min/max/mean/SD summaries carried as exact fractions.
//!
//! Every sample is `numerator / scale` for a shared integer `scale`, so the
//! mean and variance are exact rationals and decimal rendering is exact
//! round-half-even rather than float formatting.

use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fraction {
    pub num: u128,
    pub den: u128,
}

impl Fraction {
    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// Exact decimal with `places` digits, rounded half-to-even.
    pub fn to_fixed(self, places: u32) -> String {
        let unit = 10u128.pow(places);
        let scaled = self.num * unit;
        let mut q = scaled / self.den;
        let r = scaled % self.den;
        if 2 * r > self.den || (2 * r == self.den && q % 2 == 1) {
            q += 1;
        }
        render_scaled(q, places)
    }

    /// Square root rendered with `places` digits, rounded half-to-even.
    pub fn sqrt_to_fixed(self, places: u32) -> String {
        // x = num·10^(2p)/den; round(sqrt x) compares x with (r + 1/2)².
        let unit = 10u128.pow(places);
        let scaled = self.num * unit * unit;
        let mut r = (scaled / self.den).isqrt();
        let lhs = 4 * scaled;
        let rhs = self.den * (2 * r + 1) * (2 * r + 1);
        if lhs > rhs || (lhs == rhs && r % 2 == 1) {
            r += 1;
        }
        render_scaled(r, places)
    }

    fn cross_eq(self, other: Self) -> bool {
        self.num * other.den == other.num * self.den
    }
}

fn render_scaled(q: u128, places: u32) -> String {
    if places == 0 {
        return q.to_string();
    }
    let unit = 10u128.pow(places);
    format!("{}.{:0width$}", q / unit, q % unit, width = places as usize)
}

/// Summary of a family of samples: min, max, mean and standard deviation.
///
/// SD is the population SD (divide by the sample count), optionally divided
/// by a fixed `sd_divisor` to follow a reporting convention.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyStats {
    count: u64,
    scale: u64,
    min: u64,
    max: u64,
    sum: u128,
    sum_sq: u128,
    sd_divisor: u64,
}

impl PropertyStats {
    /// Stats of `numerators[i] / scale`. Panics on an empty sample or zero scale.
    pub fn from_numerators(numerators: &[u64], scale: u64) -> Self {
        assert!(!numerators.is_empty(), "stats of an empty sample");
        assert!(scale > 0, "zero scale");
        let (mut min, mut max, mut sum, mut sum_sq) = (u64::MAX, 0u64, 0u128, 0u128);
        for &v in numerators {
            min = min.min(v);
            max = max.max(v);
            sum += u128::from(v);
            sum_sq += u128::from(v) * u128::from(v);
        }
        Self {
            count: numerators.len() as u64,
            scale,
            min,
            max,
            sum,
            sum_sq,
            sd_divisor: 1,
        }
    }

    pub fn with_sd_divisor(mut self, divisor: u64) -> Self {
        assert!(divisor > 0);
        self.sd_divisor = divisor;
        self
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    /// True when every sample is an integer (scale 1).
    pub fn is_integral(&self) -> bool {
        self.scale == 1
    }

    pub fn min_exact(&self) -> Fraction {
        Fraction {
            num: self.min.into(),
            den: self.scale.into(),
        }
    }

    pub fn max_exact(&self) -> Fraction {
        Fraction {
            num: self.max.into(),
            den: self.scale.into(),
        }
    }

    pub fn avg_exact(&self) -> Fraction {
        Fraction {
            num: self.sum,
            den: u128::from(self.count) * u128::from(self.scale),
        }
    }

    /// Reported variance, i.e. the square of [`PropertyStats::sd`].
    pub fn variance_exact(&self) -> Fraction {
        let c = u128::from(self.count);
        let s = u128::from(self.scale);
        let d = u128::from(self.sd_divisor);
        Fraction {
            num: c * self.sum_sq - self.sum * self.sum,
            den: c * c * s * s * d * d,
        }
    }

    pub fn min(&self) -> f64 {
        self.min_exact().to_f64()
    }

    pub fn max(&self) -> f64 {
        self.max_exact().to_f64()
    }

    pub fn avg(&self) -> f64 {
        self.avg_exact().to_f64()
    }

    pub fn sd(&self) -> f64 {
        self.variance_exact().to_f64().sqrt()
    }

    /// min/max as integers when integral, else with `places` decimals.
    pub fn min_text(&self, places: u32) -> String {
        self.bound_text(self.min_exact(), places)
    }

    pub fn max_text(&self, places: u32) -> String {
        self.bound_text(self.max_exact(), places)
    }

    pub fn avg_text(&self, places: u32) -> String {
        self.avg_exact().to_fixed(places)
    }

    pub fn sd_text(&self, places: u32) -> String {
        self.variance_exact().sqrt_to_fixed(places)
    }

    fn bound_text(&self, v: Fraction, places: u32) -> String {
        if self.is_integral() {
            v.num.to_string()
        } else {
            v.to_fixed(places)
        }
    }

    /// Exact equality of min, max, mean and variance.
    pub fn same_exact(&self, other: &Self) -> bool {
        self.min_exact().cross_eq(other.min_exact())
            && self.max_exact().cross_eq(other.max_exact())
            && self.avg_exact().cross_eq(other.avg_exact())
            && self.variance_exact().cross_eq(other.variance_exact())
    }
}

impl fmt::Display for PropertyStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "min={} max={} avg={} sd={}",
            self.min_text(6),
            self.max_text(6),
            self.avg_text(6),
            self.sd_text(6)
        )
    }
}
