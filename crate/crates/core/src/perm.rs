//! Permutations of `{0..m-1}`, used for bit positions (m = n) and for row
//! indices (m = 2^n).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation stored as its image sequence: `images[j]` is where
/// position `j` lands.
///
/// As a matrix this is the permutation matrix `R` with `R[j][images[j]] = 1`,
/// so right-multiplying a matrix by `R` moves column `j` to column
/// `images[j]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitPermutation {
    images: Vec<u32>,
}

impl BitPermutation {
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let m = images.len();
        let mut seen = vec![false; m];
        for &v in &images {
            let v = v as usize;
            if v >= m {
                return Err(Error::InvalidPermutation(format!(
                    "image {v} out of range for size {m}"
                )));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPermutation(format!("image {v} repeated")));
            }
        }
        Ok(Self { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Self::new(images.clone()).is_ok());
        Self { images }
    }

    pub fn identity(m: usize) -> Self {
        Self {
            images: (0..m as u32).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, j: usize) -> usize {
        self.images[j] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(j, &v)| j == v as usize)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.images.len()];
        for (j, &v) in self.images.iter().enumerate() {
            inv[v as usize] = j as u32;
        }
        Self { images: inv }
    }

    /// `self` first, then `next`: the result sends `j` to
    /// `next[self[j]]`. In function notation this is `next ∘ self`.
    pub fn then(&self, next: &Self) -> Result<Self> {
        if next.size() != self.size() {
            return Err(Error::SizeMismatch {
                expected: self.size(),
                actual: next.size(),
            });
        }
        Ok(Self {
            images: self
                .images
                .iter()
                .map(|&v| next.images[v as usize])
                .collect(),
        })
    }
}

impl fmt::Display for BitPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Parses `1,2,0,3`, optionally wrapped in parentheses.
impl FromStr for BitPermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let images = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidPermutation(format!("bad entry {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_permutations() {
        assert!(BitPermutation::new(vec![0, 0, 1]).is_err());
        assert!(BitPermutation::new(vec![0, 3, 1]).is_err());
        assert!(BitPermutation::new(vec![]).is_ok());
    }

    #[test]
    fn parse_and_display() {
        let p: BitPermutation = "(1, 2,0,3)".parse().unwrap();
        assert_eq!(p.images(), &[1, 2, 0, 3]);
        assert_eq!(p.to_string(), "1,2,0,3");
        assert!("1,x".parse::<BitPermutation>().is_err());
    }

    #[test]
    fn then_and_inverse() {
        let p = BitPermutation::new(vec![1, 2, 0, 3]).unwrap();
        let q = BitPermutation::new(vec![3, 2, 0, 1]).unwrap();
        let pq = p.then(&q).unwrap();
        for j in 0..4 {
            assert_eq!(pq.apply(j), q.apply(p.apply(j)));
        }
        assert!(p.then(&p.inverse()).unwrap().is_identity());
        assert!(p.inverse().then(&p).unwrap().is_identity());
        assert!(p.then(&BitPermutation::identity(3)).is_err());
    }

    #[test]
    fn composition_is_associative() {
        let a = BitPermutation::new(vec![2, 0, 1, 4, 3]).unwrap();
        let b = BitPermutation::new(vec![4, 3, 2, 1, 0]).unwrap();
        let c = BitPermutation::new(vec![1, 0, 3, 2, 4]).unwrap();
        let left = a.then(&b).unwrap().then(&c).unwrap();
        let right = a.then(&b.then(&c).unwrap()).unwrap();
        assert_eq!(left, right);
    }
}
