//! Walsh–Hadamard spectrum and nonlinearity.

use std::ops::{Add, Sub};

use crate::error::{Error, Result};

use super::boolean::BooleanFunctionTable;

/// In-place unnormalised fast Walsh–Hadamard transform. Length must be a
/// power of two.
pub(crate) fn fwht_in_place<T>(v: &mut [T])
where
    T: Copy + Add<Output = T> + Sub<Output = T>,
{
    let len = v.len();
    debug_assert!(len.is_power_of_two());
    let mut h = 1;
    while h < len {
        for block in v.chunks_exact_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            }
        }
        h *= 2;
    }
}

/// `W(a) = Σ_x (-1)^{f(x) ⊕ a·x}`, indexed by mask `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalshSpectrum {
    coefficients: Vec<i32>,
}

impl WalshSpectrum {
    pub fn coefficients(&self) -> &[i32] {
        &self.coefficients
    }

    pub fn max_abs(&self) -> u32 {
        self.coefficients
            .iter()
            .map(|w| w.unsigned_abs())
            .max()
            .unwrap_or(0)
    }

    /// `Σ_a W(a)²`, which equals 4^n for every Boolean function.
    pub fn energy(&self) -> u64 {
        self.coefficients
            .iter()
            .map(|&w| (i64::from(w) * i64::from(w)) as u64)
            .sum()
    }
}

pub fn walsh_spectrum(f: &BooleanFunctionTable) -> WalshSpectrum {
    let mut coefficients: Vec<i32> = f.values().iter().map(|&b| if b { -1 } else { 1 }).collect();
    fwht_in_place(&mut coefficients);
    WalshSpectrum { coefficients }
}

/// Distance to the nearest affine function, `2^{n-1} - max_a |W(a)| / 2`,
/// the maximum running over every mask including 0.
pub fn nonlinearity(f: &BooleanFunctionTable) -> u64 {
    let half = (f.values().len() / 2) as u64;
    half - u64::from(walsh_spectrum(f).max_abs() / 2)
}

/// Highest nonlinearity of a balanced n-variable function according to the
/// Pieprzyk–Finkelstein formula:
/// odd n sums `2^{i+1}` for `(n-3)/2 ≤ i ≤ n-3`,
/// even n sums `2^{i+2}` for `(n-4)/2 ≤ i ≤ n-4`.
pub fn max_balanced_nonlinearity(n: u32) -> Result<u64> {
    if n < 3 {
        return Err(Error::BoundUndefined(n));
    }
    if n > 62 {
        return Err(Error::UnsupportedWidth(n));
    }
    let (lo, hi, shift) = if n % 2 == 1 {
        ((n - 3) / 2, n - 3, 1)
    } else {
        ((n - 4) / 2, n - 4, 2)
    };
    Ok((lo..=hi).map(|i| 1u64 << (i + shift)).sum())
}
