//! The clone transform `NS[i] = B2(S[B1(i)])` and fixed-point removal.
//!
//! `B1` and `B2` are the bit-position permutations σ1 and σ2 acting on n-bit
//! words. In matrix terms the output is `Q1·Y·P2`, with `Y` the seed's Boolean
//! matrix, `P2` the permutation matrix of σ2 and `Q1` the 2^n × 2^n row
//! permutation satisfying `Q1·X = X·P1` for the identity matrix `X`. `Q1` is
//! never built: [`derive_row_permutation`] returns its index map.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::keys::{factorial, lehmer_decode, FactoradicIndex};
use crate::perm::BitPermutation;
use crate::sbox::SBox;

/// Moves bit `j` of `v` to position `images[j]`.
#[inline]
pub(crate) fn permute_bits(v: u32, images: &[u32]) -> u32 {
    let mut out = 0u32;
    let mut rest = v;
    while rest != 0 {
        let j = rest.trailing_zeros();
        out |= 1 << images[j as usize];
        rest &= rest - 1;
    }
    out
}

/// `Σ_j bit_j(v)·2^{sigma[j]}`.
pub fn bit_permute_value(v: u32, sigma: &BitPermutation, n: u32) -> Result<u32> {
    if sigma.size() != n as usize {
        return Err(Error::SizeMismatch {
            expected: n as usize,
            actual: sigma.size(),
        });
    }
    if n < u32::BITS && v >> n != 0 {
        return Err(Error::ValueOutOfRange { value: v.into(), n });
    }
    Ok(permute_bits(v, sigma.images()))
}

/// Index map of the row permutation induced by σ1: `P3[i]` is the decimal
/// reading of row `i` of `X·P1`. Row `i` of `Q1·Y` is row `P3[i]` of `Y`.
pub fn derive_row_permutation(sigma1: &BitPermutation, n: u32) -> Result<BitPermutation> {
    if sigma1.size() != n as usize {
        return Err(Error::SizeMismatch {
            expected: n as usize,
            actual: sigma1.size(),
        });
    }
    crate::sbox::check_width(n)?;
    Ok(BitPermutation::from_images_unchecked(word_map(sigma1)))
}

/// Full 2^n lookup table of `permute_bits`, built one lowest-set-bit at a time.
fn word_map(sigma: &BitPermutation) -> Vec<u32> {
    let size = 1usize << sigma.size();
    let mut map = vec![0u32; size];
    for i in 1..size {
        let low = i.trailing_zeros() as usize;
        map[i] = map[i & (i - 1)] | (1 << sigma.apply(low));
    }
    map
}

fn check_clone_inputs(seed: &SBox, sigma1: &BitPermutation, sigma2: &BitPermutation) -> Result<()> {
    let n = seed.n() as usize;
    for sigma in [sigma1, sigma2] {
        if sigma.size() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                actual: sigma.size(),
            });
        }
    }
    if !seed.is_permutation() {
        return Err(Error::NotBijective);
    }
    Ok(())
}

fn clone_unchecked(seed: &SBox, sigma1: &BitPermutation, sigma2: &BitPermutation) -> SBox {
    let rows = word_map(sigma1);
    let outs = word_map(sigma2);
    let table = rows
        .iter()
        .map(|&r| outs[seed.get(r as usize) as usize])
        .collect();
    SBox::candidate(table).expect("clone of a valid table stays in range")
}

/// Clone of a bijective seed under (σ1, σ2). The result is bijective.
pub fn clone_sbox(seed: &SBox, sigma1: &BitPermutation, sigma2: &BitPermutation) -> Result<SBox> {
    check_clone_inputs(seed, sigma1, sigma2)?;
    Ok(clone_unchecked(seed, sigma1, sigma2))
}

/// Indices `i` with `S(i) = i` and with `S(i) = 2^n - 1 - i`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FixedPointReport {
    pub fixed: BTreeSet<u32>,
    pub reverse_fixed: BTreeSet<u32>,
}

impl FixedPointReport {
    pub fn is_empty(&self) -> bool {
        self.fixed.is_empty() && self.reverse_fixed.is_empty()
    }
}

pub fn find_fixed_points(s: &SBox) -> FixedPointReport {
    let top = (s.len() - 1) as u32;
    let mut report = FixedPointReport::default();
    for (i, &v) in s.table().iter().enumerate() {
        let i = i as u32;
        if v == i {
            report.fixed.insert(i);
        } else if v == top - i {
            report.reverse_fixed.insert(i);
        }
    }
    report
}

fn has_fixed_points(s: &SBox) -> bool {
    let top = (s.len() - 1) as u32;
    s.table()
        .iter()
        .enumerate()
        .any(|(i, &v)| v == i as u32 || v == top - i as u32)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CloneOptions {
    pub remove_fixed_points: bool,
    /// Cap on the retry loop. `None` means (n!)², which covers every
    /// (σ1, σ2) pair once.
    pub max_attempts: Option<u128>,
}

impl CloneOptions {
    pub fn removing_fixed_points() -> Self {
        Self {
            remove_fixed_points: true,
            max_attempts: None,
        }
    }

    pub fn with_max_attempts(mut self, attempts: u128) -> Self {
        self.max_attempts = Some(attempts);
        self
    }
}

/// A generated clone together with the permutations that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CloneOutcome {
    pub sbox: SBox,
    pub sigma1: BitPermutation,
    pub sigma2: BitPermutation,
    /// Zero-based attempt that succeeded; 0 when no retry was needed.
    pub attempt: u128,
}

/// Repeats the clone with perturbed permutations until the result has no
/// fixed and no reverse fixed points.
///
/// Attempt `k` uses `σ1 · σ̄1` and `σ2 · σ̄2` (apply the caller's permutation,
/// then the perturbation), where `σ̄1 = lehmer_decode(k mod n!)` and
/// `σ̄2 = lehmer_decode((k div n!) mod n!)`. Attempt 0 is the plain clone, and
/// the first (n!)² attempts visit every permutation pair exactly once.
///
/// Bit permutations fix the all-zero and all-one words, so a seed that maps
/// either of them to 0 or 2^n - 1 has no clean clone at all; that case fails
/// immediately with [`Error::FixedPointUnavoidable`].
pub fn clone_sbox_avoiding_fixed_points(
    seed: &SBox,
    sigma1: &BitPermutation,
    sigma2: &BitPermutation,
    opts: &CloneOptions,
) -> Result<CloneOutcome> {
    check_clone_inputs(seed, sigma1, sigma2)?;
    if let Some(index) = unavoidable_fixed_point(seed) {
        return Err(Error::FixedPointUnavoidable { index });
    }
    let n = seed.n() as usize;
    let fact = factorial(n).expect("supported widths have n! < 2^64");
    let orbit = u128::from(fact) * u128::from(fact);
    let cap = match opts.max_attempts {
        Some(0) => return Err(Error::ZeroAttempts),
        Some(a) => a,
        None => orbit,
    };

    let mut attempt = 0u128;
    while attempt < cap.min(orbit) {
        let (bar1, bar2) = schedule(attempt, n, fact);
        let s1 = sigma1.then(&bar1)?;
        let s2 = sigma2.then(&bar2)?;
        let candidate = clone_unchecked(seed, &s1, &s2);
        if !has_fixed_points(&candidate) {
            return Ok(CloneOutcome {
                sbox: candidate,
                sigma1: s1,
                sigma2: s2,
                attempt,
            });
        }
        attempt += 1;
    }
    Err(Error::RemovalExhausted { attempts: attempt })
}

fn unavoidable_fixed_point(seed: &SBox) -> Option<u32> {
    let top = (seed.len() - 1) as u32;
    [0, top]
        .into_iter()
        .find(|&i| [0, top].contains(&seed.get(i as usize)))
}

fn schedule(attempt: u128, n: usize, fact: u64) -> (BitPermutation, BitPermutation) {
    let fact128 = u128::from(fact);
    let lo = (attempt % fact128) as u64;
    let hi = ((attempt / fact128) % fact128) as u64;
    let decode =
        |index| lehmer_decode(FactoradicIndex::new(n, index).expect("index reduced mod n!"));
    (decode(lo), decode(hi))
}

/// Plain clone, or the fixed-point-avoiding variant when
/// `opts.remove_fixed_points` is set.
pub fn clone_with_options(
    seed: &SBox,
    sigma1: &BitPermutation,
    sigma2: &BitPermutation,
    opts: &CloneOptions,
) -> Result<CloneOutcome> {
    if opts.remove_fixed_points {
        clone_sbox_avoiding_fixed_points(seed, sigma1, sigma2, opts)
    } else {
        Ok(CloneOutcome {
            sbox: clone_sbox(seed, sigma1, sigma2)?,
            sigma1: sigma1.clone(),
            sigma2: sigma2.clone(),
            attempt: 0,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::known;

    fn perm(v: &[u32]) -> BitPermutation {
        BitPermutation::new(v.to_vec()).unwrap()
    }

    const NS: [u32; 16] = [10, 6, 14, 13, 11, 15, 7, 12, 3, 5, 1, 0, 2, 4, 8, 9];

    #[test]
    fn bit_permute_examples() {
        assert_eq!(bit_permute_value(9, &perm(&[3, 2, 0, 1]), 4), Ok(10));
        assert_eq!(
            bit_permute_value(99, &perm(&[5, 7, 3, 4, 1, 2, 0, 6]), 8),
            Ok(165)
        );
        for v in 0..16 {
            assert_eq!(bit_permute_value(v, &BitPermutation::identity(4), 4), Ok(v));
        }
        assert!(bit_permute_value(16, &BitPermutation::identity(4), 4).is_err());
        assert!(bit_permute_value(1, &BitPermutation::identity(3), 4).is_err());
    }

    #[test]
    fn row_permutation_example() {
        let p3 = derive_row_permutation(&perm(&[1, 2, 0, 3]), 4).unwrap();
        assert_eq!(
            p3.images(),
            &[0, 2, 4, 6, 1, 3, 5, 7, 8, 10, 12, 14, 9, 11, 13, 15]
        );
        assert!(derive_row_permutation(&BitPermutation::identity(5), 5)
            .unwrap()
            .is_identity());
    }

    #[test]
    fn row_permutation_fixes_extremes() {
        let p3 = derive_row_permutation(&perm(&[4, 0, 3, 1, 2]), 5).unwrap();
        assert_eq!(p3.apply(0), 0);
        assert_eq!(p3.apply(31), 31);
    }

    #[test]
    fn clone_of_seed_matches_published_vector() {
        let ns = clone_sbox(
            &known::adams_tavares_4(),
            &perm(&[1, 2, 0, 3]),
            &perm(&[3, 2, 0, 1]),
        )
        .unwrap();
        assert_eq!(ns.table(), &NS);
    }

    #[test]
    fn identity_clone_is_seed() {
        let aes = known::aes();
        let id = BitPermutation::identity(8);
        assert_eq!(clone_sbox(&aes, &id, &id).unwrap(), aes);
    }

    #[test]
    fn clone_rejects_bad_seed() {
        let bad = SBox::candidate(vec![0, 0, 1, 2]).unwrap();
        let id = BitPermutation::identity(2);
        assert_eq!(clone_sbox(&bad, &id, &id), Err(Error::NotBijective));
        let seed = SBox::identity(2).unwrap();
        assert!(clone_sbox(&seed, &BitPermutation::identity(3), &id).is_err());
    }

    #[test]
    fn fixed_points_examples() {
        let r = find_fixed_points(&SBox::identity(4).unwrap());
        assert_eq!(r.fixed.len(), 16);
        assert!(r.reverse_fixed.is_empty());

        let r = find_fixed_points(&SBox::new(NS.to_vec()).unwrap());
        assert!(r.fixed.is_empty());
        assert_eq!(r.reverse_fixed.iter().copied().collect::<Vec<_>>(), [4]);

        assert!(find_fixed_points(&known::aes()).is_empty());
    }

    #[test]
    fn removal_retries_past_reverse_fixed_point() {
        let seed = known::adams_tavares_4();
        let out = clone_sbox_avoiding_fixed_points(
            &seed,
            &perm(&[1, 2, 0, 3]),
            &perm(&[3, 2, 0, 1]),
            &CloneOptions::removing_fixed_points(),
        )
        .unwrap();
        assert!(out.attempt >= 1);
        assert!(find_fixed_points(&out.sbox).is_empty());
        assert_eq!(
            clone_sbox(&seed, &out.sigma1, &out.sigma2).unwrap(),
            out.sbox
        );
    }

    #[test]
    fn removal_single_attempt_exhausts() {
        let opts = CloneOptions::removing_fixed_points().with_max_attempts(1);
        let err = clone_sbox_avoiding_fixed_points(
            &known::adams_tavares_4(),
            &perm(&[1, 2, 0, 3]),
            &perm(&[3, 2, 0, 1]),
            &opts,
        )
        .unwrap_err();
        assert_eq!(err, Error::RemovalExhausted { attempts: 1 });
    }

    #[test]
    fn removal_zero_attempts_rejected() {
        let opts = CloneOptions::removing_fixed_points().with_max_attempts(0);
        let id = BitPermutation::identity(4);
        assert_eq!(
            clone_sbox_avoiding_fixed_points(&known::adams_tavares_4(), &id, &id, &opts),
            Err(Error::ZeroAttempts)
        );
    }

    #[test]
    fn removal_skips_loop_when_clean() {
        let aes = known::aes();
        let s1 = perm(&[1, 2, 0, 6, 5, 7, 3, 4]);
        let s2 = perm(&[5, 7, 3, 4, 1, 2, 0, 6]);
        let plain = clone_sbox(&aes, &s1, &s2).unwrap();
        assert!(find_fixed_points(&plain).is_empty());
        let out =
            clone_sbox_avoiding_fixed_points(&aes, &s1, &s2, &CloneOptions::default()).unwrap();
        assert_eq!(out.attempt, 0);
        assert_eq!(out.sbox, plain);
        assert_eq!((out.sigma1, out.sigma2), (s1, s2));
    }

    #[test]
    fn extreme_words_block_removal() {
        let id = BitPermutation::identity(3);
        let opts = CloneOptions::removing_fixed_points();
        let err = |table: Vec<u32>| {
            clone_sbox_avoiding_fixed_points(&SBox::new(table).unwrap(), &id, &id, &opts)
                .unwrap_err()
        };
        assert_eq!(
            err((0..8).collect()),
            Error::FixedPointUnavoidable { index: 0 }
        );
        assert_eq!(
            err(vec![7, 1, 2, 3, 4, 5, 6, 0]),
            Error::FixedPointUnavoidable { index: 0 }
        );
        assert_eq!(
            err(vec![1, 2, 3, 4, 5, 6, 7, 0]),
            Error::FixedPointUnavoidable { index: 7 }
        );
    }

    #[test]
    fn exhausts_whole_orbit() {
        // Passes the extreme-word check, yet all 36 clones keep a fixed point
        // (found by exhaustive search over the orbit).
        let seed = SBox::new(vec![3, 5, 7, 2, 6, 0, 1, 4]).unwrap();
        let id = BitPermutation::identity(3);
        let err = clone_sbox_avoiding_fixed_points(
            &seed,
            &id,
            &id,
            &CloneOptions::removing_fixed_points(),
        )
        .unwrap_err();
        assert_eq!(err, Error::RemovalExhausted { attempts: 36 });
    }

    #[test]
    fn options_dispatch() {
        let seed = known::adams_tavares_4();
        let (s1, s2) = (perm(&[1, 2, 0, 3]), perm(&[3, 2, 0, 1]));
        let plain = clone_with_options(&seed, &s1, &s2, &CloneOptions::default()).unwrap();
        assert_eq!(plain.sbox.table(), &NS);
        let clean =
            clone_with_options(&seed, &s1, &s2, &CloneOptions::removing_fixed_points()).unwrap();
        assert!(find_fixed_points(&clean.sbox).is_empty());
    }
}
