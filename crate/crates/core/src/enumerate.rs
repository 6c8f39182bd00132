//! Sweeps over the (σ1, σ2) clone space of a seed, optionally checking each
//! clone's analysis report against the seed's.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::analysis::{analyze_with, compare_reports, AnalysisReport};
use crate::cloning::{clone_sbox, find_fixed_points};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::keys::{factorial, lehmer_decode, FactoradicIndex};
use crate::perm::BitPermutation;
use crate::sbox::SBox;

/// Largest width for which the full (n!)² sweep is allowed.
pub const MAX_EXHAUSTIVE_WIDTH: u32 = 4;

/// Number of leading entries kept in each row's fingerprint.
pub const PREFIX_LEN: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Plan {
    /// Every pair, σ1 rank varying fastest.
    All,
    /// `count` pairs drawn uniformly (with replacement) from a seeded ChaCha8 stream.
    Sample { count: usize, rng_seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationRow {
    pub sigma1_rank: u64,
    pub sigma2_rank: u64,
    pub sigma1: BitPermutation,
    pub sigma2: BitPermutation,
    pub prefix: Vec<u32>,
    pub hash: u64,
    pub fixed_points: usize,
    pub reverse_fixed_points: usize,
    pub bijective: bool,
    /// `None` when invariance checking was not requested.
    pub invariant: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    pub rows: Vec<EnumerationRow>,
    pub distinct: usize,
    pub passes: usize,
    pub checked: bool,
}

impl Enumeration {
    pub fn all_passed(&self) -> bool {
        !self.checked || self.passes == self.rows.len()
    }
}

/// 64-bit FNV-1a over the little-endian bytes of each entry.
pub fn table_hash(s: &SBox) -> u64 {
    const OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
    const PRIME: u64 = 0x0000_0100_0000_01b3;
    s.table()
        .iter()
        .flat_map(|v| v.to_le_bytes())
        .fold(OFFSET, |h, b| (h ^ u64::from(b)).wrapping_mul(PRIME))
}

/// The (σ1 rank, σ2 rank) pairs a plan visits, in output order.
pub fn plan_pairs(n: u32, plan: Plan) -> Result<Vec<(u64, u64)>> {
    let fact = factorial(n as usize).ok_or(Error::UnsupportedWidth(n))?;
    match plan {
        Plan::All => {
            if n > MAX_EXHAUSTIVE_WIDTH {
                return Err(Error::EnumerationTooLarge(n));
            }
            Ok((0..fact)
                .flat_map(|hi| (0..fact).map(move |lo| (lo, hi)))
                .collect())
        }
        Plan::Sample { count, rng_seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
            Ok((0..count)
                .map(|_| (rng.gen_range(0..fact), rng.gen_range(0..fact)))
                .collect())
        }
    }
}

pub fn enumerate_clones(
    seed: &SBox,
    plan: Plan,
    check_invariance: bool,
    exec: Exec,
) -> Result<Enumeration> {
    if !seed.is_permutation() {
        return Err(Error::NotBijective);
    }
    let n = seed.n();
    let pairs = plan_pairs(n, plan)?;
    let reference: Option<AnalysisReport> =
        check_invariance.then(|| analyze_with(seed, Exec::Sequential));

    let decode = |rank| lehmer_decode(FactoradicIndex::new(n as usize, rank).expect("rank < n!"));
    let results = exec.map_slice(&pairs, |&(r1, r2)| {
        let (sigma1, sigma2) = (decode(r1), decode(r2));
        let clone = clone_sbox(seed, &sigma1, &sigma2).expect("seed checked bijective");
        let fp = find_fixed_points(&clone);
        let invariant = reference.as_ref().map(|seed_report| {
            let report = analyze_with(&clone, Exec::Sequential);
            report.bijective && compare_reports(seed_report, &report).is_equal()
        });
        let row = EnumerationRow {
            sigma1_rank: r1,
            sigma2_rank: r2,
            sigma1,
            sigma2,
            prefix: clone.table().iter().take(PREFIX_LEN).copied().collect(),
            hash: table_hash(&clone),
            fixed_points: fp.fixed.len(),
            reverse_fixed_points: fp.reverse_fixed.len(),
            bijective: clone.is_permutation(),
            invariant,
        };
        (row, clone)
    });

    let mut seen = HashSet::with_capacity(results.len());
    let mut rows = Vec::with_capacity(results.len());
    for (row, clone) in results {
        seen.insert(clone.into_table());
        rows.push(row);
    }
    let passes = rows.iter().filter(|r| r.invariant == Some(true)).count();
    Ok(Enumeration {
        distinct: seen.len(),
        passes,
        checked: check_invariance,
        rows,
    })
}
