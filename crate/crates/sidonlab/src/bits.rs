//! Fixed-length bit vectors and small GF(2) linear algebra on bitmask rows.

/// A fixed-length bit vector backed by `u64` words.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn new(len: usize) -> Self {
        BitVec {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i >> 6] >> (i & 63)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, v: bool) {
        debug_assert!(i < self.len);
        let w = &mut self.words[i >> 6];
        let mask = 1u64 << (i & 63);
        if v {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Indices of set bits in ascending order.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some((wi << 6) | b)
                }
            })
        })
    }
}

// ---------------------------------------------------------------------------
// GF(2) linear algebra on rows encoded as bitmasks (bit i = column i).
// ---------------------------------------------------------------------------

/// Rank of a list of vectors over GF(2).
pub fn rank(vectors: impl IntoIterator<Item = u32>) -> usize {
    let mut basis: [u32; 32] = [0; 32];
    let mut r = 0;
    for mut v in vectors {
        while v != 0 {
            let lead = 31 - v.leading_zeros() as usize;
            if basis[lead] == 0 {
                basis[lead] = v;
                r += 1;
                break;
            }
            v ^= basis[lead];
        }
    }
    r
}

/// Inverse of a square bit matrix given as `n` rows, or `None` if singular.
pub fn invert(rows: &[u32]) -> Option<Vec<u32>> {
    let n = rows.len();
    debug_assert!(n <= 32);
    let mut a: Vec<u32> = rows.to_vec();
    let mut inv: Vec<u32> = (0..n).map(|i| 1u32 << i).collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| (a[r] >> col) & 1 == 1)?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        for r in 0..n {
            if r != col && (a[r] >> col) & 1 == 1 {
                a[r] ^= a[col];
                inv[r] ^= inv[col];
            }
        }
    }
    Some(inv)
}

/// Transpose of a bit matrix with `width` columns.
pub fn transpose(rows: &[u32], width: usize) -> Vec<u32> {
    let mut out = vec![0u32; width];
    for (i, &row) in rows.iter().enumerate() {
        for (j, o) in out.iter_mut().enumerate() {
            *o |= ((row >> j) & 1) << i;
        }
    }
    out
}

/// Parity of the AND of two words: the standard bit dot product on F_2^n.
#[inline]
pub fn dot(a: u32, b: u32) -> u8 {
    ((a & b).count_ones() & 1) as u8
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bitvec_roundtrip() {
        let mut b = BitVec::new(200);
        for i in [0usize, 1, 63, 64, 65, 199] {
            b.set(i, true);
        }
        b.set(65, false);
        assert_eq!(b.count_ones(), 5);
        let ones: Vec<usize> = b.iter_ones().collect();
        assert_eq!(ones, vec![0, 1, 63, 64, 199]);
    }

    #[test]
    fn rank_and_inverse() {
        assert_eq!(rank([1u32, 2, 4]), 3);
        assert_eq!(rank([1u32, 2, 3]), 2);
        assert_eq!(rank([0u32]), 0);

        let rows = vec![0b011u32, 0b110, 0b100];
        let inv = invert(&rows).unwrap();
        // verify M * M^{-1} = I by row-times-column products
        let inv_t = transpose(&inv, 3);
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in inv_t.iter().enumerate() {
                assert_eq!(dot(r, c), u8::from(i == j));
            }
        }
        assert!(invert(&[0b01, 0b01]).is_none());
    }

    #[test]
    fn transpose_involution() {
        let rows = vec![0b101u32, 0b010, 0b110];
        assert_eq!(transpose(&transpose(&rows, 3), 3), rows);
    }
}
