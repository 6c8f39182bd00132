//! The s-box value type.

use std::fmt;

use crate::error::{Error, Result};

pub const MIN_WIDTH: u32 = 2;
pub const MAX_WIDTH: u32 = 16;

/// An n-bit lookup table with 2^n entries, each in `0..2^n`.
///
/// Tables need not be bijective: [`SBox::candidate`] accepts duplicates so
/// that arbitrary tables can be analysed. Operations that promise a
/// bijective result check for it and return [`Error::NotBijective`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SBox {
    n: u32,
    table: Vec<u32>,
}

impl SBox {
    /// Builds a bijective s-box, inferring n from the table length.
    pub fn new(table: Vec<u32>) -> Result<Self> {
        let sbox = Self::candidate(table)?;
        if !sbox.is_permutation() {
            return Err(Error::NotBijective);
        }
        Ok(sbox)
    }

    /// Builds a possibly non-bijective table. Entries must still fit in n bits.
    pub fn candidate(table: Vec<u32>) -> Result<Self> {
        let n = width_for_len(table.len())?;
        if let Some((index, &value)) = table.iter().enumerate().find(|(_, &v)| v >> n != 0) {
            return Err(Error::EntryOutOfRange {
                index,
                value: value.into(),
                n,
            });
        }
        Ok(Self { n, table })
    }

    pub fn identity(n: u32) -> Result<Self> {
        check_width(n)?;
        Ok(Self {
            n,
            table: (0..1u32 << n).collect(),
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of entries, 2^n.
    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    pub fn into_table(self) -> Vec<u32> {
        self.table
    }

    #[inline]
    pub fn get(&self, x: usize) -> u32 {
        self.table[x]
    }

    /// All-entries-distinct check. See [`crate::analysis::is_bijective_strict`]
    /// for the component-weight characterisation.
    pub fn is_permutation(&self) -> bool {
        let mut seen = vec![false; self.table.len()];
        for &v in &self.table {
            let slot = &mut seen[v as usize];
            if *slot {
                return false;
            }
            *slot = true;
        }
        true
    }

    /// Inverse table. Fails on non-bijective candidates.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_permutation() {
            return Err(Error::NotBijective);
        }
        let mut inv = vec![0u32; self.table.len()];
        for (x, &y) in self.table.iter().enumerate() {
            inv[y as usize] = x as u32;
        }
        Ok(Self {
            n: self.n,
            table: inv,
        })
    }
}

impl fmt::Debug for SBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SBox(n={}, {:?})", self.n, self.table)
    }
}

impl AsRef<[u32]> for SBox {
    fn as_ref(&self) -> &[u32] {
        &self.table
    }
}

pub(crate) fn check_width(n: u32) -> Result<()> {
    if (MIN_WIDTH..=MAX_WIDTH).contains(&n) {
        Ok(())
    } else {
        Err(Error::UnsupportedWidth(n))
    }
}

/// log2 of a table length, restricted to the supported widths.
pub fn width_for_len(len: usize) -> Result<u32> {
    if !len.is_power_of_two() {
        return Err(Error::BadTableLength(len));
    }
    let n = len.trailing_zeros();
    check_width(n).map_err(|_| Error::BadTableLength(len))?;
    Ok(n)
}
