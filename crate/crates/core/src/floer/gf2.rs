//! Bit-packed GF(2) vectors and elimination.

/// Words needed for `bits` packed bits.
pub(crate) fn words_for(bits: usize) -> usize {
    bits.div_ceil(64)
}

/// Incremental row-echelon basis over GF(2).
///
/// Each stored row is keyed by its lowest set bit. Inserting a row reduces
/// it against existing pivots, lowest pivot first; only the words from the
/// pivot onward are touched, since a stored row has no bits below its key.
pub(crate) struct EchelonBasis {
    width: usize,
    pivots: Vec<Option<Box<[u64]>>>,
    rank: usize,
}

impl EchelonBasis {
    pub(crate) fn new(width: usize) -> Self {
        EchelonBasis {
            width,
            pivots: vec![None; width],
            rank: 0,
        }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rank
    }

    /// Adds `row` to the span. Returns true if the rank grew.
    pub(crate) fn insert(&mut self, mut row: Vec<u64>) -> bool {
        debug_assert_eq!(row.len(), words_for(self.width));
        let mut w = 0;
        while w < row.len() {
            if row[w] == 0 {
                w += 1;
                continue;
            }
            let p = w * 64 + row[w].trailing_zeros() as usize;
            match &self.pivots[p] {
                Some(basis_row) => {
                    for (a, b) in row[w..].iter_mut().zip(&basis_row[w..]) {
                        *a ^= b;
                    }
                }
                None => {
                    self.pivots[p] = Some(row.into_boxed_slice());
                    self.rank += 1;
                    return true;
                }
            }
        }
        false
    }
}

/// Rank of the `2ⁿ × 2ⁿ` matrix whose row `ε` is `generator` translated by
/// `ε` (bit `δ` of row `ε` is bit `δ ⊕ ε` of the generator).
///
/// Rows are produced one at a time, so only the echelon basis is resident.
pub(crate) fn circulant_rank(n: u32, generator: &[u64]) -> usize {
    let size = 1usize << n;
    let support: Vec<usize> = (0..size).filter(|&d| bit(generator, d)).collect();
    if support.is_empty() {
        return 0;
    }
    let mut basis = EchelonBasis::new(size);
    let mut row = vec![0u64; words_for(size)];
    for eps in 0..size {
        row.iter_mut().for_each(|w| *w = 0);
        for &d in &support {
            flip(&mut row, d ^ eps);
        }
        basis.insert(row.clone());
        if basis.rank() == size {
            break;
        }
    }
    basis.rank()
}

pub(crate) fn bit(words: &[u64], i: usize) -> bool {
    words[i / 64] >> (i % 64) & 1 == 1
}

pub(crate) fn flip(words: &mut [u64], i: usize) {
    words[i / 64] ^= 1u64 << (i % 64);
}
