//! SAC dependence matrix and the BIC statistics.

use crate::exec::Exec;
use crate::sbox::SBox;

use super::boolean::component_unchecked;
use super::stats::PropertyStats;
use super::walsh::nonlinearity;

/// Entry `(i, j)` counts the inputs `x` for which flipping input bit `i`
/// flips output bit `j`. The probability is `count / 2^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DependenceMatrix {
    n: usize,
    counts: Vec<u64>,
}

impl DependenceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Denominator of every entry, 2^n.
    pub fn scale(&self) -> u64 {
        1 << self.n
    }

    pub fn count(&self, input_bit: usize, output_bit: usize) -> u64 {
        self.counts[input_bit * self.n + output_bit]
    }

    pub fn probability(&self, input_bit: usize, output_bit: usize) -> f64 {
        self.count(input_bit, output_bit) as f64 / self.scale() as f64
    }

    /// Row-major counts, input bit major.
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// The entries as a sorted multiset.
    pub fn sorted_counts(&self) -> Vec<u64> {
        let mut v = self.counts.clone();
        v.sort_unstable();
        v
    }
}

/// For input bit `i`, the output differences `S(x) ⊕ S(x ⊕ 2^i)` over all x.
fn output_differences(s: &SBox, i: usize) -> impl Iterator<Item = u32> + '_ {
    let flip = 1usize << i;
    s.table()
        .iter()
        .enumerate()
        .map(move |(x, &y)| y ^ s.get(x ^ flip))
}

pub fn sac_dependence_matrix(s: &SBox) -> DependenceMatrix {
    sac_dependence_matrix_with(s, Exec::Sequential)
}

pub fn sac_dependence_matrix_with(s: &SBox, exec: Exec) -> DependenceMatrix {
    let n = s.n() as usize;
    let rows = exec.map_range(0..n, |i| {
        let mut row = vec![0u64; n];
        for d in output_differences(s, i) {
            for (j, c) in row.iter_mut().enumerate() {
                *c += u64::from((d >> j) & 1);
            }
        }
        row
    });
    DependenceMatrix {
        n,
        counts: rows.concat(),
    }
}

/// Stats over the n² dependence entries. The SD is half the population SD,
/// which is the convention of the published AES and Adams–Tavares tables.
pub fn sac_stats(s: &SBox) -> PropertyStats {
    sac_stats_with(s, Exec::Sequential)
}

pub fn sac_stats_with(s: &SBox, exec: Exec) -> PropertyStats {
    let m = sac_dependence_matrix_with(s, exec);
    PropertyStats::from_numerators(m.counts(), m.scale()).with_sd_divisor(2)
}

pub(crate) fn output_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|j| (j + 1..n).map(move |k| (j, k)))
        .collect()
}

/// Nonlinearity stats over the coordinate functions `f_j`.
pub fn sbox_nonlinearity_stats(s: &SBox) -> PropertyStats {
    sbox_nonlinearity_stats_with(s, Exec::Sequential)
}

pub fn sbox_nonlinearity_stats_with(s: &SBox, exec: Exec) -> PropertyStats {
    let nls = exec.map_range(0..s.n() as usize, |j| {
        nonlinearity(&component_unchecked(s, 1 << j))
    });
    PropertyStats::from_numerators(&nls, 1)
}

/// Nonlinearity stats over `f_j ⊕ f_k` for all pairs `j < k`.
pub fn bic_nonlinearity_stats(s: &SBox) -> PropertyStats {
    bic_nonlinearity_stats_with(s, Exec::Sequential)
}

pub fn bic_nonlinearity_stats_with(s: &SBox, exec: Exec) -> PropertyStats {
    let pairs = output_pairs(s.n() as usize);
    let nls = exec.map_slice(&pairs, |&(j, k)| {
        nonlinearity(&component_unchecked(s, (1 << j) | (1 << k)))
    });
    PropertyStats::from_numerators(&nls, 1)
}

/// Avalanche of `f_j ⊕ f_k` summed over the n input-bit flips, per pair.
/// Entry `p` matches `output_pairs(n)[p]`; the probability is
/// `count / (n·2^n)`.
pub fn bic_sac_pair_counts(s: &SBox, exec: Exec) -> Vec<u64> {
    let n = s.n() as usize;
    let pairs = output_pairs(n);
    let per_flip = exec.map_range(0..n, |i| {
        let mut counts = vec![0u64; pairs.len()];
        for d in output_differences(s, i) {
            for (c, &(j, k)) in counts.iter_mut().zip(&pairs) {
                *c += u64::from(((d >> j) ^ (d >> k)) & 1);
            }
        }
        counts
    });
    (0..pairs.len())
        .map(|p| per_flip.iter().map(|row| row[p]).sum())
        .collect()
}

/// For each pair `j < k`, the avalanche probability of `f_j ⊕ f_k` averaged
/// over the n single-bit input flips; stats over the n(n-1)/2 pair values.
pub fn bic_sac_stats(s: &SBox) -> PropertyStats {
    bic_sac_stats_with(s, Exec::Sequential)
}

pub fn bic_sac_stats_with(s: &SBox, exec: Exec) -> PropertyStats {
    let n = u64::from(s.n());
    PropertyStats::from_numerators(&bic_sac_pair_counts(s, exec), n << n)
}
