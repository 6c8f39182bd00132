//! Independent oracles shared by the integration tests. Nothing here calls
//! into the transform or analysis code it is used to check.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;

pub const SEED_4: [u32; 16] = [9, 13, 10, 15, 11, 14, 7, 3, 12, 8, 6, 2, 4, 1, 0, 5];
pub const CLONE_4: [u32; 16] = [10, 6, 14, 13, 11, 15, 7, 12, 3, 5, 1, 0, 2, 4, 8, 9];
pub const SIGMA1_4: [u32; 4] = [1, 2, 0, 3];
pub const SIGMA2_4: [u32; 4] = [3, 2, 0, 1];
pub const SIGMA1_8: [u32; 8] = [1, 2, 0, 6, 5, 7, 3, 4];
pub const SIGMA2_8: [u32; 8] = [5, 7, 3, 4, 1, 2, 0, 6];

/// Published clone of the AES s-box under (SIGMA1_8, SIGMA2_8).
#[rustfmt::skip]
pub const CLONE_AES: [u32; 256] = [
    165, 175, 199, 189,  31, 183, 181, 105,  48,  28, 178, 147, 224, 146, 157,  68,
    238, 226, 142, 239, 127, 140, 190,  89,  67, 212, 161, 166, 253, 247,  57, 104,
    121, 162, 187,   9,  24,  93, 234, 170, 214,  44,  26,  78,  23, 156, 204, 201,
     69, 150,  49,  12, 134, 144, 136,  27, 101,  82,  53, 216,  87,  34, 115,  74,
      6, 173, 223, 244,  32, 180, 235, 143, 131, 203,  52, 188, 182, 230, 229,  72,
     14, 109,  39,  38, 108, 103,  83,  42,  41, 128,   3, 250, 119, 191,  30,  84,
     73, 159,  13,  50, 236,  62,  59, 167,  85,  15, 177, 240, 123, 186, 126, 208,
    193,  92,  98,  77, 227, 133, 106,  55, 242, 232, 217,  20, 154, 117,  43, 251,
    209, 113, 215, 169, 192,  63,  51,  71, 163,   0,   4, 102,  99, 125,  95, 179,
      8, 164,  18,  40, 233, 225, 202, 210,  35,   1, 194,  22, 228, 248, 122, 111,
      5, 185, 132,  66,  96,  91, 148,  80,   7, 110,  17, 207, 158, 141, 160, 152,
    237, 174, 120, 153,  81,  61, 107, 116,  88, 112, 254, 129, 100,  56, 205,  21,
    124, 196,  90, 135,  75, 252,  76,  65, 149, 222, 145,  19, 241,  54,  25, 249,
    168,  64, 245, 198, 130, 197, 172,  47,  94, 211,   2, 231, 206,  36, 255, 195,
    137,  86, 219, 176, 221,  10, 155, 243,  37, 171, 200,  58,  46, 118,  97, 218,
     29,  79,  45, 220, 139, 213, 151,  16,  33,  60,  70, 246, 114, 184,  11, 138,
];

pub type Dense = Vec<Vec<u32>>;

/// Permutation matrix with `R[i][sigma[i]] = 1`.
pub fn permutation_matrix(sigma: &[u32]) -> Dense {
    let m = sigma.len();
    let mut r = vec![vec![0; m]; m];
    for (i, &s) in sigma.iter().enumerate() {
        r[i][s as usize] = 1;
    }
    r
}

/// 2^n × n matrix whose row i is the LSB-first binary expansion of table[i].
pub fn binary_matrix(table: &[u32], n: usize) -> Dense {
    table
        .iter()
        .map(|&v| (0..n).map(|j| (v / 2u32.pow(j as u32)) % 2).collect())
        .collect()
}

pub fn decimal_rows(m: &Dense) -> Vec<u32> {
    m.iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .map(|(j, &b)| b * 2u32.pow(j as u32))
                .sum()
        })
        .collect()
}

pub fn matmul(a: &Dense, b: &Dense) -> Dense {
    let inner = b.len();
    assert_eq!(a[0].len(), inner);
    let cols = b[0].len();
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|c| (0..inner).map(|k| row[k] * b[k][c]).sum())
                .collect()
        })
        .collect()
}

/// The matrix pipeline: X, W1 = X·P1, P3 = decimal(W1), Q1, W2 = Q1·Y·P2.
pub struct DensePipeline {
    pub x: Dense,
    pub w1: Dense,
    pub p3: Vec<u32>,
    pub q1: Dense,
    pub w2: Dense,
    pub output: Vec<u32>,
}

pub fn dense_pipeline(seed: &[u32], sigma1: &[u32], sigma2: &[u32]) -> DensePipeline {
    let n = sigma1.len();
    let identity: Vec<u32> = (0..1u32 << n).collect();
    let x = binary_matrix(&identity, n);
    let y = binary_matrix(seed, n);
    let w1 = matmul(&x, &permutation_matrix(sigma1));
    let p3 = decimal_rows(&w1);
    let q1 = permutation_matrix(&p3);
    let w2 = matmul(&matmul(&q1, &y), &permutation_matrix(sigma2));
    let output = decimal_rows(&w2);
    DensePipeline {
        x,
        w1,
        p3,
        q1,
        w2,
        output,
    }
}

/// `Σ_x (-1)^{f(x) ⊕ a·x}` for every a, by direct summation.
pub fn walsh_direct(f: &[bool]) -> Vec<i32> {
    let len = f.len();
    (0..len)
        .map(|a| {
            (0..len)
                .map(|x| {
                    let parity = ((a & x).count_ones() % 2 == 1) ^ f[x];
                    if parity {
                        -1
                    } else {
                        1
                    }
                })
                .sum()
        })
        .collect()
}

/// Minimum Hamming distance to all 2^{n+1} affine functions.
pub fn nonlinearity_brute(f: &[bool]) -> u64 {
    let len = f.len();
    let mut best = u64::MAX;
    for a in 0..len {
        for c in [false, true] {
            let d = (0..len)
                .filter(|&x| f[x] != (((a & x).count_ones() % 2 == 1) ^ c))
                .count() as u64;
            best = best.min(d);
        }
    }
    best
}

/// All permutations of 0..n in lexicographic order of image sequences.
pub fn lex_permutations(n: usize) -> Vec<Vec<u32>> {
    fn go(prefix: &mut Vec<u32>, used: &mut Vec<bool>, out: &mut Vec<Vec<u32>>) {
        let n = used.len();
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                prefix.push(v as u32);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Bijectivity by definition: every nonzero combination of output columns
/// has weight 2^{n-1}.
pub fn bijective_by_masks(table: &[u32], n: usize) -> bool {
    (1..1u32 << n).all(|mask| {
        let wt = table
            .iter()
            .filter(|&&y| (y & mask).count_ones() % 2 == 1)
            .count();
        wt == 1 << (n - 1)
    })
}

pub fn random_permutation<R: Rng>(rng: &mut R, m: usize) -> Vec<u32> {
    let mut v: Vec<u32> = (0..m as u32).collect();
    v.shuffle(rng);
    v
}

pub fn random_bijection<R: Rng>(rng: &mut R, n: usize) -> Vec<u32> {
    random_permutation(rng, 1 << n)
}

/// Random nonsingular n × n matrix over GF(2), rows packed LSB-first.
pub fn random_nonsingular<R: Rng>(rng: &mut R, n: usize) -> Vec<u32> {
    loop {
        let rows: Vec<u32> = (0..n).map(|_| rng.gen_range(0..1u32 << n)).collect();
        if gf2_rank(&rows, n) == n {
            return rows;
        }
    }
}

pub fn gf2_rank(rows: &[u32], n: usize) -> usize {
    let mut m = rows.to_vec();
    let mut rank = 0;
    for col in 0..n {
        let Some(p) = (rank..m.len()).find(|&r| (m[r] >> col) & 1 == 1) else {
            continue;
        };
        m.swap(rank, p);
        for r in 0..m.len() {
            if r != rank && (m[r] >> col) & 1 == 1 {
                m[r] ^= m[rank];
            }
        }
        rank += 1;
    }
    rank
}

/// Row vector x times matrix B: XOR of the rows selected by the bits of x.
pub fn vec_mat(x: usize, b: &[u32]) -> usize {
    b.iter()
        .enumerate()
        .filter(|(i, _)| (x >> i) & 1 == 1)
        .fold(0u32, |acc, (_, &row)| acc ^ row) as usize
}
