//! The 2^n × n Boolean-matrix view of an s-box.
//!
//! Row `i` is the binary expansion of entry `i`, least significant bit
//! first: column `j` carries the coefficient of 2^j. Under this convention
//! the identity s-box's first column alternates 0,1,0,1,…

use crate::cloning::permute_bits;
use crate::error::{Error, Result};
use crate::perm::BitPermutation;
use crate::sbox::SBox;

/// Row-major bit matrix. Each row is packed into a `u32`, bit `j` holding
/// column `j`, so at most 32 columns are representable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BooleanMatrix {
    cols: usize,
    rows: Vec<u32>,
}

impl BooleanMatrix {
    pub const MAX_COLS: usize = 32;

    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        check_cols(cols)?;
        Ok(Self {
            cols,
            rows: vec![0; rows],
        })
    }

    /// Builds from explicit rows of bits, `bits[i][j]` being row `i`, column `j`.
    pub fn from_bit_rows<R: AsRef<[bool]>>(cols: usize, bits: &[R]) -> Result<Self> {
        check_cols(cols)?;
        let rows = bits
            .iter()
            .map(|r| {
                let r = r.as_ref();
                if r.len() != cols {
                    return Err(Error::SizeMismatch {
                        expected: cols,
                        actual: r.len(),
                    });
                }
                Ok(r.iter()
                    .enumerate()
                    .fold(0u32, |acc, (j, &b)| acc | (u32::from(b) << j)))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { cols, rows })
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> bool {
        assert!(col < self.cols, "column {col} out of range");
        (self.rows[row] >> col) & 1 == 1
    }

    pub fn set(&mut self, row: usize, col: usize, bit: bool) {
        assert!(col < self.cols, "column {col} out of range");
        let mask = 1u32 << col;
        if bit {
            self.rows[row] |= mask;
        } else {
            self.rows[row] &= !mask;
        }
    }

    /// Row `i` packed LSB-first.
    pub fn row_word(&self, row: usize) -> u32 {
        self.rows[row]
    }

    /// Column `j` as a bit vector of length `row_count()`.
    pub fn column(&self, col: usize) -> Vec<bool> {
        (0..self.rows.len()).map(|i| self.get(i, col)).collect()
    }
}

fn check_cols(cols: usize) -> Result<()> {
    if cols > BooleanMatrix::MAX_COLS {
        return Err(Error::SizeMismatch {
            expected: BooleanMatrix::MAX_COLS,
            actual: cols,
        });
    }
    Ok(())
}

/// Binary representation of every entry. [`SBox`] already guarantees that
/// entries fit in n bits, so this cannot overflow.
pub fn to_boolean_matrix(s: &SBox) -> BooleanMatrix {
    BooleanMatrix {
        cols: s.n() as usize,
        rows: s.table().to_vec(),
    }
}

/// Decimal reading of each row: entry `i = Σ_j m[i][j]·2^j`.
///
/// The result may be a non-bijective candidate.
pub fn from_boolean_matrix(m: &BooleanMatrix) -> Result<SBox> {
    if m.cols >= usize::BITS as usize || m.rows.len() != 1usize << m.cols {
        return Err(Error::DimensionMismatch {
            rows: m.rows.len(),
            cols: m.cols,
        });
    }
    SBox::candidate(m.rows.clone())
}

/// Right-multiplication by the permutation matrix of `sigma`: column `j` of
/// the input becomes column `sigma[j]` of the output.
pub fn apply_column_permutation(
    m: &BooleanMatrix,
    sigma: &BitPermutation,
) -> Result<BooleanMatrix> {
    if sigma.size() != m.cols {
        return Err(Error::SizeMismatch {
            expected: m.cols,
            actual: sigma.size(),
        });
    }
    Ok(BooleanMatrix {
        cols: m.cols,
        rows: m
            .rows
            .iter()
            .map(|&r| permute_bits(r, sigma.images()))
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::known;

    #[test]
    fn first_row_of_seed_matrix() {
        let y = to_boolean_matrix(&known::adams_tavares_4());
        let row0: Vec<bool> = (0..4).map(|j| y.get(0, j)).collect();
        assert_eq!(row0, [true, false, false, true]);
    }

    #[test]
    fn identity_rows_are_lsb_first() {
        let x = to_boolean_matrix(&SBox::identity(4).unwrap());
        assert_eq!(x.column(0).iter().filter(|&&b| b).count(), 8);
        let row1: Vec<bool> = (0..4).map(|j| x.get(1, j)).collect();
        assert_eq!(row1, [true, false, false, false]);
    }

    #[test]
    fn from_matrix_reads_lsb_first() {
        let mut m = BooleanMatrix::zeros(16, 4).unwrap();
        m.set(0, 1, true);
        m.set(0, 3, true);
        assert_eq!(from_boolean_matrix(&m).unwrap().get(0), 10);
    }

    #[test]
    fn zero_matrix_is_a_candidate() {
        let m = BooleanMatrix::zeros(4, 2).unwrap();
        let s = from_boolean_matrix(&m).unwrap();
        assert_eq!(s.table(), &[0, 0, 0, 0]);
        assert!(!s.is_permutation());
    }

    #[test]
    fn dimension_mismatch() {
        let m = BooleanMatrix::zeros(8, 4).unwrap();
        assert_eq!(
            from_boolean_matrix(&m),
            Err(Error::DimensionMismatch { rows: 8, cols: 4 })
        );
    }

    #[test]
    fn column_permutation_of_identity_matrix() {
        // Columns of W1 = X·P1 for σ1 = (1,2,0,3), read off as 16-bit strings.
        let x = to_boolean_matrix(&SBox::identity(4).unwrap());
        let sigma = BitPermutation::new(vec![1, 2, 0, 3]).unwrap();
        let w1 = apply_column_permutation(&x, &sigma).unwrap();
        let render = |c: usize| -> String {
            w1.column(c)
                .iter()
                .map(|&b| if b { '1' } else { '0' })
                .collect()
        };
        assert_eq!(render(0), "0000111100001111");
        assert_eq!(render(1), "0101010101010101");
        assert_eq!(render(2), "0011001100110011");
        assert_eq!(render(3), "0000000011111111");
    }

    #[test]
    fn column_permutation_inverse_and_identity() {
        let y = to_boolean_matrix(&known::adams_tavares_4());
        let sigma = BitPermutation::new(vec![3, 2, 0, 1]).unwrap();
        let there = apply_column_permutation(&y, &sigma).unwrap();
        let back = apply_column_permutation(&there, &sigma.inverse()).unwrap();
        assert_eq!(back, y);
        assert_eq!(
            apply_column_permutation(&y, &BitPermutation::identity(4)).unwrap(),
            y
        );
        assert!(apply_column_permutation(&y, &BitPermutation::identity(3)).is_err());
    }

    #[test]
    fn from_bit_rows_checks_width() {
        assert!(BooleanMatrix::from_bit_rows(2, &[[true, false, true]]).is_err());
        let m = BooleanMatrix::from_bit_rows(2, &[[false, true]]).unwrap();
        assert_eq!(m.row_word(0), 2);
    }
}
