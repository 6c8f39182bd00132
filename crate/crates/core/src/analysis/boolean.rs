use crate::error::{Error, Result};
use crate::sbox::SBox;

use super::walsh::fwht_in_place;

/// Truth table of an n-input Boolean function, `values[x] = f(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BooleanFunctionTable {
    n: u32,
    values: Vec<bool>,
}

impl BooleanFunctionTable {
    pub fn new(values: Vec<bool>) -> Result<Self> {
        let len = values.len();
        if !len.is_power_of_two() || len.trailing_zeros() > 24 {
            return Err(Error::BadTableLength(len));
        }
        Ok(Self {
            n: len.trailing_zeros(),
            values,
        })
    }

    pub fn from_fn(n: u32, f: impl Fn(usize) -> bool) -> Self {
        Self {
            n,
            values: (0..1usize << n).map(f).collect(),
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn values(&self) -> &[bool] {
        &self.values
    }

    #[inline]
    pub fn eval(&self, x: usize) -> bool {
        self.values[x]
    }

    pub fn weight(&self) -> usize {
        self.values.iter().filter(|&&b| b).count()
    }

    pub fn is_balanced(&self) -> bool {
        2 * self.weight() == self.values.len()
    }
}

/// `x ↦ parity(S(x) & mask)`. Single-bit masks give the coordinate
/// functions; mask 0 gives the constant-zero function and is rejected.
pub fn component_function(s: &SBox, mask: u32) -> Result<BooleanFunctionTable> {
    if mask == 0 || mask >> s.n() != 0 {
        return Err(Error::InvalidMask { mask, n: s.n() });
    }
    Ok(component_unchecked(s, mask))
}

pub(crate) fn component_unchecked(s: &SBox, mask: u32) -> BooleanFunctionTable {
    BooleanFunctionTable {
        n: s.n(),
        values: s
            .table()
            .iter()
            .map(|&y| (y & mask).count_ones() & 1 == 1)
            .collect(),
    }
}

/// Bijectivity through component weights: every nonzero linear combination
/// of the output columns has weight 2^{n-1}.
///
/// All 2^n - 1 weights come from one Walsh transform of the output
/// histogram, since `Σ_y count(y)·(-1)^{a·y} = 2^n - 2·wt(a)`.
pub fn is_bijective_strict(s: &SBox) -> bool {
    let mut hist = vec![0i64; s.len()];
    for &y in s.table() {
        hist[y as usize] += 1;
    }
    fwht_in_place(&mut hist);
    hist[1..].iter().all(|&w| w == 0)
}
