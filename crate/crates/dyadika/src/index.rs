//! Exact integer statistics of binary expansions.
//!
//! For a positive integer `n` with binary digits `n_0, n_1, ...` (least
//! significant first) this module computes the top and bottom set-bit
//! positions `|n|` and `[n]`, their gap `d(n)`, the digit variation
//! `V(n) = n_0 + sum_k |n_k - n_{k-1}|` (one padding zero above the top
//! bit, so the final fall is counted and `V(2^k) = 2`), the tails
//! `n^(i)`, and the decomposition of `n` into maximal runs of
//! consecutive ones.
//!
//! Two index conventions coexist: `n = sum_{i=1..r} 2^{n_i}` over the
//! `r = popcount(n)` set bits, and `n = sum_{i=1..s} (2^{m_i+1} - 2^{l_i})`
//! over the `s` maximal runs. `r` is always the set-bit count and `s`
//! the run count here.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IndexError {
    #[error("index statistics are undefined for n = 0")]
    Zero,
    #[error("set-bit rank {rank} out of range 1..={count}")]
    TailOutOfRange { rank: usize, count: usize },
}

/// Binary-expansion statistics of a positive integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DyadicIndex {
    value: u64,
    msb: u32,
    lsb: u32,
    variation: u32,
}

impl DyadicIndex {
    pub fn new(n: u64) -> Result<Self, IndexError> {
        if n == 0 {
            return Err(IndexError::Zero);
        }
        let msb = 63 - n.leading_zeros();
        let lsb = n.trailing_zeros();
        // V(n) = n_0 + sum_{k>=1} |n_k - n_{k-1}| over the digits padded
        // with one zero beyond the top bit. Bit k-1 of n ^ (n >> 1) is
        // exactly |n_k - n_{k-1}|, and the padding transition at the top
        // bit is already included since bit msb of n ^ (n >> 1) is 1.
        let variation = (n & 1) as u32 + (n ^ (n >> 1)).count_ones();
        Ok(Self {
            value: n,
            msb,
            lsb,
            variation,
        })
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    /// `|n|`: position of the most significant set bit.
    pub fn msb(&self) -> u32 {
        self.msb
    }

    /// `[n]`: position of the least significant set bit.
    pub fn lsb(&self) -> u32 {
        self.lsb
    }

    /// `d(n) = |n| - [n]`.
    pub fn span(&self) -> u32 {
        self.msb - self.lsb
    }

    /// `V(n)`, the digit variation.
    pub fn variation(&self) -> u32 {
        self.variation
    }

    pub fn is_power_of_two(&self) -> bool {
        self.value.is_power_of_two()
    }

    /// Digits `n_0 ..= n_{|n|}`, least significant first.
    pub fn digits(&self) -> Vec<u8> {
        (0..=self.msb).map(|k| ((self.value >> k) & 1) as u8).collect()
    }

    /// Set-bit positions `n_1 > n_2 > ... > n_r`.
    pub fn set_bits_desc(&self) -> Vec<u32> {
        let mut bits: Vec<u32> = (0..=self.msb).rev().filter(|&k| (self.value >> k) & 1 == 1).collect();
        bits.shrink_to_fit();
        bits
    }

    pub fn popcount(&self) -> u32 {
        self.value.count_ones()
    }

    /// The tail `n^(i) = 2^{n_{i+1}} + ... + 2^{n_r}`, the part of `n`
    /// strictly below its `i`-th largest set bit. `tail(r) = 0`.
    pub fn tail(&self, rank: usize) -> Result<u64, IndexError> {
        let count = self.popcount() as usize;
        if rank == 0 || rank > count {
            return Err(IndexError::TailOutOfRange { rank, count });
        }
        let bit = self.set_bits_desc()[rank - 1];
        Ok(self.value & ((1u64 << bit) - 1))
    }
}

/// One maximal run of consecutive ones: bits `low ..= high`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Block {
    pub high: u32,
    pub low: u32,
}

impl Block {
    pub fn value(&self) -> u64 {
        (1u64 << (self.high + 1)) - (1u64 << self.low)
    }
}

/// Maximal-run decomposition `n = sum_i sum_{k=l_i}^{m_i} 2^k`, runs
/// ordered most significant first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    value: u64,
    blocks: Vec<Block>,
}

impl BlockDecomposition {
    pub fn new(n: u64) -> Result<Self, IndexError> {
        if n == 0 {
            return Err(IndexError::Zero);
        }
        let mut blocks = Vec::new();
        let mut rest = n;
        while rest != 0 {
            let low = rest.trailing_zeros();
            let run = (rest >> low).trailing_ones();
            blocks.push(Block {
                high: low + run - 1,
                low,
            });
            rest &= !(((1u64 << run) - 1) << low);
        }
        blocks.reverse();
        Ok(Self { value: n, blocks })
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// `s`, the number of maximal runs.
    pub fn count(&self) -> usize {
        self.blocks.len()
    }

    pub fn reconstruct(&self) -> u64 {
        self.blocks.iter().map(Block::value).sum()
    }

    /// Whether consecutive runs satisfy `l_i - 2 >= m_{i+1}`, i.e. every
    /// gap contains at least two zero digits. The kernel lower-bound
    /// sweeps only apply to such indices.
    pub fn has_wide_gaps(&self) -> bool {
        self.blocks
            .windows(2)
            .all(|w| w[0].low >= 2 && w[0].low - 2 >= w[1].high)
    }
}

/// All statistics of `n` in one call.
pub fn index_stats(n: u64) -> Result<DyadicIndex, IndexError> {
    DyadicIndex::new(n)
}

/// Maximal-run decomposition of `n`.
pub fn block_decomposition(n: u64) -> Result<BlockDecomposition, IndexError> {
    BlockDecomposition::new(n)
}
