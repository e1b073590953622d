//! Exact Fourier-Hadamard machinery: indicator transforms, linearity,
//! the difference-count functions delta_S and gamma_S, representation
//! counting, the fourth-moment Sidon test, the flat-spectrum k-cover
//! characterization, and bentness.
//!
//! All arithmetic is integer-exact. The transform pairs points with the
//! standard bit dot product; every quantity exposed here (linearity,
//! value multisets, separability) is invariant under composing that choice
//! with an invertible linear reindexing.

use crate::bits::BitVec;
use crate::error::{invalid, Result};
use crate::pointset::PointSet;

/// A length-2^n vector of exact signed integers, e.g. a Fourier-Hadamard
/// transform or a function table.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpectrumVec {
    n: usize,
    values: Vec<i64>,
}

impl SpectrumVec {
    pub fn new(n: usize, values: Vec<i64>) -> Result<Self> {
        if values.len() != 1usize << n {
            return Err(invalid(format!(
                "expected 2^{n} = {} values, got {}",
                1usize << n,
                values.len()
            )));
        }
        Ok(SpectrumVec { n, values })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<i64> {
        self.values
    }
}

/// A Boolean function on F_2^n stored as a 2^n-bit table.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BooleanFn {
    n: usize,
    table: BitVec,
}

impl BooleanFn {
    pub fn zero(n: usize) -> Self {
        BooleanFn {
            n,
            table: BitVec::new(1 << n),
        }
    }

    pub fn from_support(n: usize, support: &[u32]) -> Result<Self> {
        let mut table = BitVec::new(1 << n);
        for &p in support {
            if (p as u64) >> n != 0 {
                return Err(invalid(format!("support point {p} outside F_2^{n}")));
            }
            table.set(p as usize, true);
        }
        Ok(BooleanFn { n, table })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(u32) -> bool) -> Self {
        let mut table = BitVec::new(1 << n);
        for x in 0..(1u32 << n) {
            table.set(x as usize, f(x));
        }
        BooleanFn { n, table }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn eval(&self, x: u32) -> bool {
        self.table.get(x as usize)
    }

    /// Hamming weight of the table.
    pub fn weight(&self) -> u64 {
        self.table.count_ones() as u64
    }

    /// Support points in ascending order.
    pub fn support(&self) -> Vec<u32> {
        self.table.iter_ones().map(|p| p as u32).collect()
    }

    pub(crate) fn clear_at_zero(mut self) -> Self {
        self.table.set(0, false);
        self
    }
}

// ---------------------------------------------------------------------------
// The transform kernel.
// ---------------------------------------------------------------------------

/// In-place exact Walsh-Hadamard butterfly. Applying it twice multiplies
/// every entry by the length.
pub(crate) fn fwht_in_place(vals: &mut [i64]) {
    debug_assert!(vals.len().is_power_of_two());
    let mut h = 1;
    while h < vals.len() {
        let mut i = 0;
        while i < vals.len() {
            for j in i..i + h {
                let (a, b) = (vals[j], vals[j + h]);
                vals[j] = a + b;
                vals[j + h] = a - b;
            }
            i += h * 2;
        }
        h *= 2;
    }
}

fn fwht_in_place_i128(vals: &mut [i128]) {
    debug_assert!(vals.len().is_power_of_two());
    let mut h = 1;
    while h < vals.len() {
        let mut i = 0;
        while i < vals.len() {
            for j in i..i + h {
                let (a, b) = (vals[j], vals[j + h]);
                vals[j] = a + b;
                vals[j + h] = a - b;
            }
            i += h * 2;
        }
        h *= 2;
    }
}

/// Fourier-Hadamard transform: out[a] = sum over u of (-1)^(u.a) v[u].
pub fn fwht(v: &SpectrumVec) -> SpectrumVec {
    let mut values = v.values.clone();
    fwht_in_place(&mut values);
    SpectrumVec {
        n: v.n,
        values,
    }
}

/// Transform of the 0/1 indicator of a set: out[a] = sum over x in S of
/// (-1)^(x.a). Entry 0 is |S| and every entry has the parity of |S|.
pub fn fourier_indicator(s: &PointSet) -> SpectrumVec {
    let mut values = vec![0i64; 1 << s.dim()];
    for p in s.iter() {
        values[p as usize] = 1;
    }
    fwht_in_place(&mut values);
    SpectrumVec {
        n: s.dim(),
        values,
    }
}

/// Max absolute indicator-transform value over nonzero indices.
/// Degenerate sets (|S| <= 1) report 0.
pub fn linearity(s: &PointSet) -> u64 {
    if s.len() <= 1 || s.dim() == 0 {
        return 0;
    }
    let t = fourier_indicator(s);
    t.values[1..].iter().map(|v| v.unsigned_abs()).max().unwrap()
}

/// The exact lower bound on linearity squared: an integer fraction
/// (2^n (3s - 2) - s^3) / (2^n - s), in lowest terms, plus its real root.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LinearityBound {
    pub radicand_num: i128,
    pub radicand_den: i128,
}

impl LinearityBound {
    /// The bound itself, as a float (NaN when the radicand is negative).
    pub fn value(&self) -> f64 {
        let r = self.radicand_num as f64 / self.radicand_den as f64;
        r.sqrt()
    }

    /// Does l^2 equal the radicand exactly?
    pub fn is_met_exactly_by(&self, l: u64) -> bool {
        (l as i128) * (l as i128) * self.radicand_den == self.radicand_num
    }
}

/// Evaluate the linearity lower bound for parameters (n, s).
pub fn linearity_lower_bound(n: usize, s: u64) -> Result<LinearityBound> {
    if n <= 1 {
        return Err(invalid("the linearity bound needs n > 1"));
    }
    if n > 62 {
        return Err(invalid("dimension too large"));
    }
    let space = 1i128 << n;
    let s = s as i128;
    if s == 0 || s > space {
        return Err(invalid("need 0 < s <= 2^n"));
    }
    if s == space {
        return Err(invalid("s = 2^n makes the bound denominator zero"));
    }
    let mut num = space * (3 * s - 2) - s * s * s;
    let mut den = space - s;
    let g = gcd_i128(num.unsigned_abs(), den.unsigned_abs()) as i128;
    if g > 1 {
        num /= g;
        den /= g;
    }
    Ok(LinearityBound {
        radicand_num: num,
        radicand_den: den,
    })
}

fn gcd_i128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Sum of fourth powers of the indicator transform.
pub fn fourth_moment(s: &PointSet) -> i128 {
    let t = fourier_indicator(s);
    t.values
        .iter()
        .map(|&v| {
            let v = v as i128;
            v * v * v * v
        })
        .sum()
}

/// The fourth moment meets its floor 2^n (3s^2 - 2s) exactly iff S is Sidon.
pub fn is_sidon_spectral(s: &PointSet) -> bool {
    let size = s.len() as i128;
    let floor = (1i128 << s.dim()) * (3 * size * size - 2 * size);
    fourth_moment(s) == floor
}

/// delta_S(a) = |(a + S) ∩ S|, computed as the transform of the squared
/// indicator transform scaled down by 2^n. The division is exact.
pub fn delta_fn(s: &PointSet) -> SpectrumVec {
    let t = fourier_indicator(s);
    let mut sq: Vec<i128> = t.values.iter().map(|&v| (v as i128) * (v as i128)).collect();
    fwht_in_place_i128(&mut sq);
    let space = 1i128 << s.dim();
    let values = sq
        .into_iter()
        .map(|v| {
            assert_eq!(v % space, 0, "inexact division in delta computation");
            i64::try_from(v / space).expect("delta values fit in i64")
        })
        .collect();
    SpectrumVec {
        n: s.dim(),
        values,
    }
}

/// gamma_S(a) = 1 iff a != 0 and (a + S) ∩ S is nonempty; equivalently the
/// indicator of the nonzero pairwise sums of S.
pub fn gamma_fn(s: &PointSet) -> BooleanFn {
    let mut table = BitVec::new(1 << s.dim());
    let pts = s.points();
    for (i, &a) in pts.iter().enumerate() {
        for &b in &pts[i + 1..] {
            table.set((a ^ b) as usize, true);
        }
    }
    BooleanFn {
        n: s.dim(),
        table,
    }
}

/// Number of ordered k-tuples of members XORing to `a`, for 1 <= k <= 4.
/// Computed as the transform of the k-th power of the indicator transform
/// at `a`, scaled down by 2^n; the division is exact.
pub fn count_representations(s: &PointSet, k: u32, a: u32) -> Result<u64> {
    if !(1..=4).contains(&k) {
        return Err(invalid("representation counting supports 1 <= k <= 4"));
    }
    if (a as u64) >> s.dim() != 0 {
        return Err(invalid(format!("point {a} outside F_2^{}", s.dim())));
    }
    let t = fourier_indicator(s);
    let mut powered: Vec<i128> = t
        .values
        .iter()
        .map(|&v| {
            let v = v as i128;
            let mut acc = 1i128;
            for _ in 0..k {
                acc *= v;
            }
            acc
        })
        .collect();
    fwht_in_place_i128(&mut powered);
    let space = 1i128 << s.dim();
    let raw = powered[a as usize];
    assert_eq!(raw % space, 0, "inexact division in representation count");
    let count = raw / space;
    assert!(count >= 0, "negative representation count");
    Ok(count as u64)
}

/// Flat-spectrum k-cover test: a Sidon set is a k-cover iff every nonzero
/// transform value lies in {0, +L, -L} for L the linearity. Returns the
/// forced k = C(s,3) / (2^n - s) when the test passes.
pub fn kcover_spectral_test(s: &PointSet) -> Result<Option<u64>> {
    if !s.is_sidon() {
        return Err(invalid("the spectral k-cover test is defined for Sidon sets"));
    }
    let size = s.len() as u64;
    if size < 3 || size == 1u64 << s.dim() {
        return Ok(None);
    }
    let t = fourier_indicator(s);
    let l = linearity(s) as i64;
    if !t.values[1..].iter().all(|&v| v == 0 || v.abs() == l) {
        return Ok(None);
    }
    let triples = size * (size - 1) * (size - 2) / 6;
    let complement = (1u64 << s.dim()) - size;
    assert_eq!(
        triples % complement,
        0,
        "flat spectrum forces an exact cover value"
    );
    Ok(Some(triples / complement))
}

/// Signed transform of a Boolean function: out[a] = sum over x of
/// (-1)^(f(x) + x.a).
pub fn signed_transform(f: &BooleanFn) -> SpectrumVec {
    let mut values: Vec<i64> = (0..(1usize << f.n))
        .map(|x| if f.table.get(x) { -1 } else { 1 })
        .collect();
    fwht_in_place(&mut values);
    SpectrumVec {
        n: f.n,
        values,
    }
}

/// A Boolean function on even n is bent iff its signed transform has
/// constant magnitude 2^(n/2). Odd n is never bent.
pub fn is_bent(f: &BooleanFn) -> bool {
    if f.n % 2 != 0 {
        return false;
    }
    let target = 1i64 << (f.n / 2);
    signed_transform(f).values.iter().all(|v| v.abs() == target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn set(n: usize, pts: &[u32]) -> PointSet {
        PointSet::from_points(n, pts).unwrap()
    }

    /// O(4^n) transform straight from the definition.
    fn naive_transform(v: &[i64]) -> Vec<i64> {
        let n = v.len();
        (0..n)
            .map(|a| {
                (0..n)
                    .map(|u| {
                        let sign = 1 - 2 * ((a & u).count_ones() as i64 & 1);
                        sign * v[u]
                    })
                    .sum()
            })
            .collect()
    }

    #[test]
    fn fwht_matches_naive_definition() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for n in 0..=10usize {
            let vals: Vec<i64> = (0..1 << n).map(|_| rng.gen_range(-50..=50)).collect();
            let sv = SpectrumVec::new(n, vals.clone()).unwrap();
            assert_eq!(fwht(&sv).values(), naive_transform(&vals).as_slice());
        }
    }

    #[test]
    fn fwht_involution_and_delta_at_zero() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        for n in 0..=8usize {
            let vals: Vec<i64> = (0..1 << n).map(|_| rng.gen_range(-9..=9)).collect();
            let sv = SpectrumVec::new(n, vals.clone()).unwrap();
            let twice = fwht(&fwht(&sv));
            let scaled: Vec<i64> = vals.iter().map(|&v| v << n).collect();
            assert_eq!(twice.values(), scaled.as_slice());
        }
        // indicator of {0} transforms to the all-ones vector
        let t = fourier_indicator(&set(4, &[0]));
        assert!(t.values().iter().all(|&v| v == 1));
    }

    #[test]
    fn parseval_holds_for_indicator_transforms() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..200 {
            let n = rng.gen_range(1..=9usize);
            let count = rng.gen_range(0..=1 << n);
            let pts: Vec<u32> = (0..count).map(|_| rng.gen_range(0..1u32 << n)).collect();
            let s = set(n, &pts);
            let t = fourier_indicator(&s);
            assert_eq!(t.values()[0] as u64, s.len() as u64);
            let energy: i128 = t.values().iter().map(|&v| (v as i128) * (v as i128)).sum();
            assert_eq!(energy, (1i128 << n) * s.len() as i128);
            let parity = s.len() as i64 & 1;
            assert!(t.values().iter().all(|&v| (v - parity) % 2 == 0));
        }
    }

    #[test]
    fn linearity_examples() {
        let n = 6;
        let mut pts = vec![0u32];
        pts.extend((0..n).map(|i| 1u32 << i));
        assert_eq!(linearity(&set(n, &pts)), (n - 1) as u64);

        // a set inside a proper affine subspace has linearity |S|
        let s = set(4, &[0, 2, 4, 6]);
        assert_eq!(linearity(&s), 4);

        assert_eq!(linearity(&set(4, &[])), 0);
        assert_eq!(linearity(&set(4, &[7])), 0);
    }

    #[test]
    fn linearity_bound_values() {
        let b = linearity_lower_bound(11, 24).unwrap();
        assert_eq!((b.radicand_num, b.radicand_den), (64, 1));
        assert!(b.is_met_exactly_by(8));

        let b = linearity_lower_bound(4, 6).unwrap();
        assert_eq!((b.radicand_num, b.radicand_den), (4, 1));
        assert!(b.is_met_exactly_by(2));

        let b = linearity_lower_bound(10, 32).unwrap();
        assert_eq!((b.radicand_num, b.radicand_den), (64, 1));
        assert_eq!(b.value(), 8.0);

        assert!(linearity_lower_bound(1, 1).is_err());
        assert!(linearity_lower_bound(4, 16).is_err());
        assert!(linearity_lower_bound(4, 0).is_err());
    }

    #[test]
    fn fourth_moment_examples() {
        // all of F_2^2: transform is (4,0,0,0), moment 256 > 160
        let s = set(2, &[0, 1, 2, 3]);
        assert_eq!(fourth_moment(&s), 256);
        assert!(!is_sidon_spectral(&s));

        // {0,1,2}: moment exactly 2^2 (3*9 - 6) = 84
        let s = set(2, &[0, 1, 2]);
        assert_eq!(fourth_moment(&s), 84);
        assert!(is_sidon_spectral(&s));
    }

    #[test]
    fn spectral_sidon_test_agrees_with_combinatorial() {
        let mut rng = ChaCha8Rng::seed_from_u64(24);
        for _ in 0..500 {
            let n = rng.gen_range(1..=9usize);
            let count = rng.gen_range(0..=14.min(1 << n));
            let pts: Vec<u32> = (0..count).map(|_| rng.gen_range(0..1u32 << n)).collect();
            let s = set(n, &pts);
            assert_eq!(s.is_sidon(), is_sidon_spectral(&s), "{s:?}");
        }
    }

    #[test]
    fn delta_and_gamma() {
        let mut rng = ChaCha8Rng::seed_from_u64(25);
        for _ in 0..200 {
            let n = rng.gen_range(1..=8usize);
            let count = rng.gen_range(0..=12.min(1 << n));
            let pts: Vec<u32> = (0..count).map(|_| rng.gen_range(0..1u32 << n)).collect();
            let s = set(n, &pts);
            let delta = delta_fn(&s);
            let gamma = gamma_fn(&s);
            assert_eq!(delta.values()[0] as usize, s.len());
            for a in 1..(1u32 << n) {
                // direct overlap count
                let direct = s.iter().filter(|&x| s.contains(x ^ a)).count() as i64;
                assert_eq!(delta.values()[a as usize], direct);
                assert_eq!(gamma.eval(a), direct > 0);
            }
            assert!(!gamma.eval(0));
            if s.is_sidon() {
                let k = s.len() as u64;
                assert!(delta.values()[1..].iter().all(|&v| v == 0 || v == 2));
                assert_eq!(gamma.weight(), k * (k.saturating_sub(1)) / 2);
            }
        }
    }

    #[test]
    fn representation_counts() {
        let mut rng = ChaCha8Rng::seed_from_u64(26);
        for _ in 0..100 {
            let n = rng.gen_range(2..=7usize);
            let s = crate::corpus::random_sidon_set(n, None, &mut rng);
            let delta = delta_fn(&s);
            for a in 0..(1u32 << n) {
                assert_eq!(
                    count_representations(&s, 1, a).unwrap(),
                    u64::from(s.contains(a))
                );
                assert_eq!(
                    count_representations(&s, 2, a).unwrap() as i64,
                    delta.values()[a as usize]
                );
                if !s.contains(a) {
                    // ordered triples = 6 * exclude multiplicity on a Sidon set
                    assert_eq!(
                        count_representations(&s, 3, a).unwrap(),
                        6 * s.exclude_multiplicity(a).unwrap()
                    );
                }
            }
            assert_eq!(count_representations(&s, 2, 0).unwrap(), s.len() as u64);
            let m4 = fourth_moment(&s);
            assert_eq!(
                count_representations(&s, 4, 0).unwrap() as i128,
                m4 / (1i128 << n)
            );
            assert!(count_representations(&s, 5, 0).is_err());
        }
    }

    #[test]
    fn kcover_spectral_examples() {
        assert_eq!(kcover_spectral_test(&set(2, &[0, 1, 2])).unwrap(), Some(1));

        // a 2-cover of size 6 in F_2^4 with transform values {-2, 2}
        let two_cover = set(4, &[1, 2, 4, 6, 8, 9]);
        let t = fourier_indicator(&two_cover);
        let mut vals: Vec<i64> = t.values()[1..].to_vec();
        vals.sort_unstable();
        vals.dedup();
        assert_eq!(vals, vec![-2, 2]);
        assert_eq!(kcover_spectral_test(&two_cover).unwrap(), Some(2));
        assert_eq!(two_cover.kcover_value().unwrap(), Some(2));

        // affinely independent points have intermediate transform values
        for n in 4..=7usize {
            let mut pts = vec![0u32];
            pts.extend((0..n).map(|i| 1u32 << i));
            assert_eq!(kcover_spectral_test(&set(n, &pts)).unwrap(), None);
        }

        assert!(kcover_spectral_test(&set(2, &[0, 1, 2, 3])).is_err());
    }

    #[test]
    fn bent_detection() {
        // the inner product function on F_2^2 is bent
        let f = BooleanFn::from_fn(2, |x| (x & 1 != 0) && (x & 2 != 0));
        assert!(is_bent(&f));
        // odd dimension is never bent
        let g = BooleanFn::from_fn(3, |x| x.count_ones() % 2 == 1);
        assert!(!is_bent(&g));
        // balanced-but-not-bent
        let h = BooleanFn::from_fn(2, |x| x & 1 != 0);
        assert!(!is_bent(&h));
    }
}
