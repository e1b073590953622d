//! Point sets over F_2^n and their combinatorial structure: the Sidon
//! property, exclude multiplicities, maximality, k-covers, affine geometry,
//! separability, and hyperplane restriction.
//!
//! Points are n-bit integers (bit i = coordinate i). A set is a dimension
//! plus a 2^n-bit membership vector; values are immutable once built.

use crate::bits::{self, BitVec};
use crate::error::{invalid, Result};
use crate::spectral;

/// Largest ambient dimension a `PointSet` accepts.
pub const MAX_DIM: usize = 22;

/// A subset of F_2^n.
#[derive(Clone, PartialEq, Eq)]
pub struct PointSet {
    n: usize,
    members: BitVec,
    size: usize,
}

impl std::fmt::Debug for PointSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "PointSet(dim={}, {:?})", self.n, self.points())
    }
}

impl PointSet {
    /// The empty set in F_2^n.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_DIM, "dimension {n} exceeds {MAX_DIM}");
        PointSet {
            n,
            members: BitVec::new(1 << n),
            size: 0,
        }
    }

    /// Build a set from a list of points (duplicates collapse).
    pub fn from_points(n: usize, points: &[u32]) -> Result<Self> {
        if n > MAX_DIM {
            return Err(invalid(format!("dimension {n} exceeds {MAX_DIM}")));
        }
        let mut members = BitVec::new(1 << n);
        for &p in points {
            if (p as u64) >> n != 0 {
                return Err(invalid(format!("point {p} outside F_2^{n}")));
            }
            members.set(p as usize, true);
        }
        let size = members.count_ones();
        Ok(PointSet { n, members, size })
    }

    pub(crate) fn from_bitvec(n: usize, members: BitVec) -> Self {
        debug_assert_eq!(members.len(), 1 << n);
        let size = members.count_ones();
        PointSet { n, members, size }
    }

    /// Ambient dimension n.
    #[inline]
    pub fn dim(&self) -> usize {
        self.n
    }

    /// Number of members.
    #[inline]
    pub fn len(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    #[inline]
    pub fn contains(&self, p: u32) -> bool {
        (p as u64) >> self.n == 0 && self.members.get(p as usize)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.members.iter_ones().map(|p| p as u32)
    }

    /// Members collected in ascending order.
    pub fn points(&self) -> Vec<u32> {
        self.iter().collect()
    }

    /// The complement F_2^n \ S.
    pub fn complement(&self) -> PointSet {
        let mut members = BitVec::new(1 << self.n);
        for p in 0..(1usize << self.n) {
            members.set(p, !self.members.get(p));
        }
        PointSet::from_bitvec(self.n, members)
    }

    // -----------------------------------------------------------------------
    // Sidon structure.
    // -----------------------------------------------------------------------

    /// True iff no four pairwise-distinct members XOR to zero; equivalently,
    /// all pairwise sums of distinct members are distinct. Sets of size <= 3
    /// are always Sidon.
    pub fn is_sidon(&self) -> bool {
        if self.size <= 3 {
            return true;
        }
        let pts = self.points();
        let mut seen = BitVec::new(1 << self.n);
        for (i, &a) in pts.iter().enumerate() {
            for &b in &pts[i + 1..] {
                let d = (a ^ b) as usize;
                if seen.get(d) {
                    return false;
                }
                seen.set(d, true);
            }
        }
        true
    }

    /// For every point p, the number of 3-subsets {a,b,c} of S with
    /// a^b^c = p. Index p runs over all of F_2^n, including members.
    pub fn exclude_multiplicities(&self) -> Vec<u64> {
        let space = 1usize << self.n;
        let pts = self.points();
        let s = pts.len() as u64;
        // pair_count[t] = number of unordered pairs {a,b} with a^b = t
        let mut pair_count = vec![0u32; space];
        for (i, &a) in pts.iter().enumerate() {
            for &b in &pts[i + 1..] {
                pair_count[(a ^ b) as usize] += 1;
            }
        }
        let mut out = vec![0u64; space];
        for (p, o) in out.iter_mut().enumerate() {
            let mut t: u64 = pts
                .iter()
                .map(|&c| pair_count[p ^ c as usize] as u64)
                .sum();
            if self.members.get(p) {
                // remove the degenerate (pair {x,p}, c=x) combinations
                t -= s - 1;
            }
            debug_assert_eq!(t % 3, 0);
            *o = t / 3;
        }
        out
    }

    /// Exclude multiplicity of a non-member point.
    pub fn exclude_multiplicity(&self, p: u32) -> Result<u64> {
        if (p as u64) >> self.n != 0 {
            return Err(invalid(format!("point {p} outside F_2^{}", self.n)));
        }
        if self.contains(p) {
            return Err(invalid(format!(
                "exclude multiplicity is defined on complement points; {p} is a member"
            )));
        }
        Ok(self.exclude_multiplicities()[p as usize])
    }

    /// All points expressible as a sum of three pairwise-distinct members.
    pub fn excludes(&self) -> PointSet {
        let mult = self.exclude_multiplicities();
        let mut members = BitVec::new(1 << self.n);
        for (p, &m) in mult.iter().enumerate() {
            if m > 0 {
                members.set(p, true);
            }
        }
        PointSet::from_bitvec(self.n, members)
    }

    /// A Sidon set is maximal iff every complement point has positive
    /// exclude multiplicity. Sets of size <= 1 report false by convention.
    pub fn is_maximal(&self) -> Result<bool> {
        if !self.is_sidon() {
            return Err(invalid("maximality is defined for Sidon sets"));
        }
        if self.size <= 1 {
            return Ok(false);
        }
        let mult = self.exclude_multiplicities();
        Ok((0..1usize << self.n).all(|p| self.members.get(p) || mult[p] > 0))
    }

    /// If every complement point has the same exclude multiplicity k > 0,
    /// returns k; otherwise `None`. Requires a Sidon set with
    /// 3 <= |S| < 2^n.
    pub fn kcover_value(&self) -> Result<Option<u64>> {
        if !self.is_sidon() {
            return Err(invalid("k-cover values are defined for Sidon sets"));
        }
        let s = self.size as u64;
        if s < 3 {
            return Err(invalid("k-cover values need at least 3 points"));
        }
        let space = 1u64 << self.n;
        if s == space {
            return Err(invalid("k-cover values need a nonempty complement"));
        }
        let mult = self.exclude_multiplicities();
        let mut k = None;
        for (p, &m) in mult.iter().enumerate() {
            if self.members.get(p) {
                continue;
            }
            match k {
                None => k = Some(m),
                Some(prev) if prev != m => return Ok(None),
                _ => {}
            }
        }
        let k = k.expect("complement is nonempty");
        if k == 0 {
            return Ok(None);
        }
        // the value is forced: k (2^n - s) = C(s,3)
        debug_assert_eq!(k * (space - s), s * (s - 1) * (s - 2) / 6);
        Ok(Some(k))
    }

    // -----------------------------------------------------------------------
    // Affine geometry.
    // -----------------------------------------------------------------------

    /// Rank over F_2 of {x ^ x0 : x in S} for a fixed member x0.
    pub fn affine_dimension(&self) -> Result<usize> {
        let x0 = self
            .iter()
            .next()
            .ok_or_else(|| invalid("affine dimension of the empty set"))?;
        Ok(bits::rank(self.iter().map(|p| p ^ x0)))
    }

    /// The affine span as a point set: x0 ^ rowspace{x ^ x0}.
    pub fn affine_span(&self) -> Result<PointSet> {
        let x0 = self
            .iter()
            .next()
            .ok_or_else(|| invalid("affine span of the empty set"))?;
        let mut basis: Vec<u32> = Vec::new();
        for p in self.iter() {
            let mut v = p ^ x0;
            for &b in &basis {
                v = v.min(v ^ b);
            }
            if v != 0 {
                basis.push(v);
                basis.sort_unstable_by(|a, b| b.cmp(a));
            }
        }
        let mut span = vec![0u32];
        for &b in &basis {
            let mut shifted: Vec<u32> = span.iter().map(|&x| x ^ b).collect();
            span.append(&mut shifted);
        }
        let pts: Vec<u32> = span.into_iter().map(|x| x ^ x0).collect();
        PointSet::from_points(self.n, &pts)
    }

    /// True iff some affine hyperplane contains exactly half of S,
    /// equivalently the Fourier transform of the indicator vanishes at some
    /// nonzero index.
    pub fn is_separable(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        if self.size % 2 == 1 {
            return false;
        }
        let t = spectral::fourier_indicator(self);
        t.values()[1..].contains(&0)
    }

    /// Image of the set under an affine map.
    pub fn apply_affine(&self, map: &AffineMap) -> Result<PointSet> {
        if map.dim_in() != self.n {
            return Err(invalid(format!(
                "map expects F_2^{}, set lives in F_2^{}",
                map.dim_in(),
                self.n
            )));
        }
        let pts: Vec<u32> = self.iter().map(|p| map.apply(p)).collect();
        PointSet::from_points(map.dim_out(), &pts)
    }

    /// Restrict to the hyperplane {x : a.x = c} and re-coordinatize into
    /// F_2^{n-1} by dropping the lowest set bit of `a` (the coordinate dual
    /// to `a` after completing it to a basis from the lowest pivot upward).
    /// The map is affine and injective on the hyperplane, so the Sidon
    /// property is preserved.
    pub fn hyperplane_restrict(&self, a: u32, c: u8) -> Result<PointSet> {
        if a == 0 {
            return Err(invalid("hyperplane normal must be nonzero"));
        }
        if (a as u64) >> self.n != 0 {
            return Err(invalid(format!("normal {a} outside F_2^{}", self.n)));
        }
        if c > 1 {
            return Err(invalid("hyperplane side must be 0 or 1"));
        }
        let pivot = a.trailing_zeros();
        let low_mask = (1u32 << pivot) - 1;
        let pts: Vec<u32> = self
            .iter()
            .filter(|&p| bits::dot(p, a) == c)
            .map(|p| (p & low_mask) | ((p >> (pivot + 1)) << pivot))
            .collect();
        PointSet::from_points(self.n - 1, &pts)
    }
}

/// An affine map x -> Mx + v between bit-vector spaces. Row i of the matrix
/// is a bitmask over input coordinates; output bit i is the parity of the
/// masked input, XORed with bit i of the offset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMap {
    rows: Vec<u32>,
    dim_in: usize,
    offset: u32,
}

impl AffineMap {
    pub fn new(rows: Vec<u32>, dim_in: usize, offset: u32) -> Result<Self> {
        if dim_in > MAX_DIM || rows.len() > MAX_DIM {
            return Err(invalid("affine map dimensions exceed supported range"));
        }
        if rows.iter().any(|&r| (r as u64) >> dim_in != 0) {
            return Err(invalid("matrix row has bits outside the input space"));
        }
        if (offset as u64) >> rows.len() != 0 {
            return Err(invalid("offset has bits outside the output space"));
        }
        Ok(AffineMap {
            rows,
            dim_in,
            offset,
        })
    }

    pub fn identity(n: usize) -> Self {
        AffineMap {
            rows: (0..n).map(|i| 1u32 << i).collect(),
            dim_in: n,
            offset: 0,
        }
    }

    pub fn translation(n: usize, v: u32) -> Result<Self> {
        let mut m = AffineMap::identity(n);
        if (v as u64) >> n != 0 {
            return Err(invalid("translation vector outside the space"));
        }
        m.offset = v;
        Ok(m)
    }

    pub fn dim_in(&self) -> usize {
        self.dim_in
    }

    pub fn dim_out(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn apply(&self, x: u32) -> u32 {
        let mut y = 0u32;
        for (i, &row) in self.rows.iter().enumerate() {
            y |= u32::from(bits::dot(row, x)) << i;
        }
        y ^ self.offset
    }

    /// Square maps only: invertibility as a linear-part rank check.
    pub fn is_invertible(&self) -> bool {
        self.dim_in == self.rows.len() && bits::invert(&self.rows).is_some()
    }

    /// Inverse of an invertible affine map.
    pub fn inverse(&self) -> Result<AffineMap> {
        if self.dim_in != self.rows.len() {
            return Err(invalid("only square maps can be inverted"));
        }
        // rows of M^{-1} come out of Gauss-Jordan on bitmask rows, but our
        // row encoding applies M^T; invert the transpose to compensate.
        let mt = bits::transpose(&self.rows, self.dim_in);
        let inv_t = bits::invert(&mt).ok_or_else(|| invalid("map is singular"))?;
        let inv_rows = bits::transpose(&inv_t, self.dim_in);
        let inv = AffineMap {
            rows: inv_rows,
            dim_in: self.dim_in,
            offset: 0,
        };
        let off = inv.apply(self.offset);
        Ok(AffineMap {
            offset: off,
            ..inv
        })
    }
}
