//! Derivation of the two bit permutations from key material, through the
//! factorial number system (Lehmer codes).
//!
//! The key is read as a big-endian integer `K`. Then
//! `σ1 = decode(K mod n!)` and `σ2 = decode((K div n!) mod n!)`, so only
//! `K mod (n!)²` matters and the effective keyspace is (n!)² pairs.

use crate::error::{Error, Result};
use crate::perm::BitPermutation;

/// `n!`, or `None` if it overflows `u64` (n > 20).
pub fn factorial(n: usize) -> Option<u64> {
    (1..=n as u64).try_fold(1u64, |acc, k| acc.checked_mul(k))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KeyMaterial {
    bytes: Vec<u8>,
}

impl KeyMaterial {
    pub fn new(bytes: Vec<u8>) -> Result<Self> {
        if bytes.is_empty() {
            return Err(Error::EmptyKey);
        }
        Ok(Self { bytes })
    }

    /// Even-length, case-insensitive hex, with an optional `0x` prefix.
    pub fn from_hex(text: &str) -> Result<Self> {
        let digits = text.trim();
        let digits = digits
            .strip_prefix("0x")
            .or_else(|| digits.strip_prefix("0X"))
            .unwrap_or(digits);
        let bytes = hex::decode(digits).map_err(|e| Error::InvalidHex(e.to_string()))?;
        Self::new(bytes)
    }

    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    /// `K mod modulus`, for the big-endian integer `K`.
    pub fn reduce(&self, modulus: u128) -> u128 {
        assert!(modulus > 0 && modulus <= 1 << 120, "modulus out of range");
        self.bytes
            .iter()
            .fold(0u128, |acc, &b| ((acc << 8) | u128::from(b)) % modulus)
    }
}

/// A rank in `[0, n!)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FactoradicIndex {
    n: usize,
    index: u64,
}

impl FactoradicIndex {
    pub fn new(n: usize, index: u64) -> Result<Self> {
        let limit = factorial(n).ok_or(Error::IndexOutOfRange {
            n,
            index,
            limit: u64::MAX,
        })?;
        if index >= limit {
            return Err(Error::IndexOutOfRange { n, index, limit });
        }
        Ok(Self { n, index })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn index(&self) -> u64 {
        self.index
    }
}

/// The `idx`-th permutation of `{0..n-1}` in lexicographic order of image
/// sequences.
pub fn lehmer_decode(idx: FactoradicIndex) -> BitPermutation {
    let n = idx.n;
    let mut pool: Vec<u32> = (0..n as u32).collect();
    let mut rest = idx.index;
    let mut images = Vec::with_capacity(n);
    for k in (0..n).rev() {
        let place = factorial(k).expect("k < n <= 20");
        let digit = (rest / place) as usize;
        rest %= place;
        images.push(pool.remove(digit));
    }
    BitPermutation::from_images_unchecked(images)
}

/// Lexicographic rank of `p`; inverse of [`lehmer_decode`].
pub fn lehmer_encode(p: &BitPermutation) -> FactoradicIndex {
    let images = p.images();
    let n = images.len();
    let mut index = 0u64;
    for (pos, &v) in images.iter().enumerate() {
        let smaller_after = images[pos + 1..].iter().filter(|&&w| w < v).count() as u64;
        index += smaller_after * factorial(n - 1 - pos).expect("n <= 20");
    }
    FactoradicIndex { n, index }
}

pub fn key_to_permutations(
    key: &KeyMaterial,
    n: usize,
) -> Result<(BitPermutation, BitPermutation)> {
    crate::sbox::check_width(n as u32)?;
    let fact = u128::from(factorial(n).expect("n <= 16"));
    let k = key.reduce(fact * fact);
    let decode = |i: u128| lehmer_decode(FactoradicIndex { n, index: i as u64 });
    Ok((decode(k % fact), decode(k / fact)))
}
