//! Concrete Sidon-set families and the lower-bound pipeline: affinely
//! independent simplices, multiplicative-subgroup sets, sum-free subgroups
//! from APN power maps, the 24-point dimension-11 one-cover, graphs of power
//! maps, spectral halving, and the closed-form bound table.

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::field::{FieldCtx, FieldElem, SubfieldEmbedding};
use crate::pointset::PointSet;
use crate::spectral;

/// The 24 points of the published dimension-11 one-cover, verbatim.
/// Guarded by a checksum because this is input data, not computed output.
const DIM11_POINTS: [u32; 24] = [
    0, 1, 2, 4, 8, 16, 32, 64, 128, 231, 256, 318, 512, 760, 851, 909, 1024,
    1179, 1385, 1492, 1589, 1614, 1954, 2047,
];
const DIM11_CHECKSUM: u64 = 16376;

/// Which realization of the dimension-11 one-cover to build.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Dim11Variant {
    /// The hardcoded 24-integer list.
    Listed,
    /// {0} together with the 23rd roots of unity in GF(2^11).
    Roots23,
}

impl std::str::FromStr for Dim11Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "listed" => Ok(Dim11Variant::Listed),
            "roots23" => Ok(Dim11Variant::Roots23),
            other => Err(invalid(format!(
                "unknown dim11 variant {other:?} (expected listed | roots23)"
            ))),
        }
    }
}

/// The n+1 affinely independent points {0, e_1, ..., e_n}.
pub fn affinely_independent_set(n: usize) -> PointSet {
    assert!(n >= 1, "need n >= 1");
    let mut pts = vec![0u32];
    pts.extend((0..n).map(|i| 1u32 << i));
    PointSet::from_points(n, &pts).expect("basis points are in range")
}

/// The multiplicative subgroup of order gcd(2^j + 1, 2^n - 1) in GF(2^n),
/// verified Sidon on the way out.
pub fn subgroup_sidon(n: usize, j: u32) -> Result<PointSet> {
    if j == 0 || j > 62 {
        return Err(invalid("need 1 <= j <= 62"));
    }
    let ctx = FieldCtx::new(n)?;
    let e = gcd((1u64 << j) + 1, ctx.order());
    let set = ctx.mult_subgroup(e)?;
    if !set.is_sidon() {
        return Err(Error::ConstructionFailure(format!(
            "subgroup of order {e} in GF(2^{n}) failed the Sidon check"
        )));
    }
    Ok(set)
}

/// The multiplicative subgroup of order gcd(d - 2^j, 2^n - 1), which is a
/// sum-free Sidon set whenever x^d is APN over GF(2^n). The APN premise is
/// assumed for d = 3 (true in every dimension) and checked exhaustively by
/// a difference-count test for other exponents up to n = 12.
pub fn carlet_picek_set(n: usize, d: u64, j: u32) -> Result<PointSet> {
    if j > 62 {
        return Err(invalid("need j <= 62"));
    }
    let ctx = FieldCtx::new(n)?;
    if d != 3 {
        if n > 12 {
            return Err(invalid(
                "APN verification for d != 3 is exhaustive and limited to n <= 12",
            ));
        }
        if !power_map_is_apn(&ctx, d) {
            return Err(invalid(format!("x^{d} is not APN over GF(2^{n})")));
        }
    }
    let order = ctx.order();
    let e = gcd(
        (d as i128 - (1i128 << j)).rem_euclid(order as i128) as u64,
        order,
    );
    let set = ctx.mult_subgroup(e)?;
    if !set.is_sidon() {
        return Err(Error::ConstructionFailure(format!(
            "subgroup of order {e} in GF(2^{n}) failed the Sidon check"
        )));
    }
    // sum-free: no member is a sum of two distinct members
    let pts = set.points();
    for (i, &a) in pts.iter().enumerate() {
        for &b in &pts[i + 1..] {
            if set.contains(a ^ b) {
                return Err(Error::ConstructionFailure(format!(
                    "subgroup of order {e} in GF(2^{n}) is not sum-free"
                )));
            }
        }
    }
    Ok(set)
}

/// Exhaustive APN test for the power map x -> x^d: every nonzero direction
/// must give at most 2 solutions per output difference.
fn power_map_is_apn(ctx: &FieldCtx, d: u64) -> bool {
    let size = 1u32 << ctx.n();
    let table: Vec<u32> = (0..size).map(|x| ctx.pow(FieldElem(x), d).0).collect();
    let mut counts = vec![0u8; size as usize];
    for a in 1..size {
        for c in counts.iter_mut() {
            *c = 0;
        }
        for x in 0..size {
            let b = table[(x ^ a) as usize] ^ table[x as usize];
            counts[b as usize] += 1;
            if counts[b as usize] > 2 {
                return false;
            }
        }
    }
    true
}

/// A maximum-size one-cover in F_2^11 (24 points).
pub fn dim11_one_cover(variant: Dim11Variant) -> PointSet {
    match variant {
        Dim11Variant::Listed => {
            let sum: u64 = DIM11_POINTS.iter().map(|&p| p as u64).sum();
            assert_eq!(sum, DIM11_CHECKSUM, "stored point list is corrupt");
            PointSet::from_points(11, &DIM11_POINTS).expect("stored points are in range")
        }
        Dim11Variant::Roots23 => {
            let roots = carlet_picek_set(11, 3, 8).expect("x^3 is APN over GF(2^11)");
            let mut pts = roots.points();
            pts.push(0);
            PointSet::from_points(11, &pts).expect("points are in range")
        }
    }
}

/// The graph {(x, x^d)} of a power map over GF(2^m), encoded into F_2^{2m}
/// as x + 2^m F(x), together with the outcome of the Sidon check (which
/// holds exactly when the power map is APN).
#[derive(Clone, Debug)]
pub struct ApnPowerGraph {
    pub set: PointSet,
    pub sidon: bool,
}

pub fn apn_power_graph(m: usize, d: u64) -> Result<ApnPowerGraph> {
    if m == 0 {
        return Err(invalid("need m >= 1"));
    }
    let pts: Vec<u32> = if m == 1 {
        (0..2u32)
            .map(|x| {
                let fx = if d == 0 { 1 } else { x };
                x | (fx << 1)
            })
            .collect()
    } else {
        let ctx = FieldCtx::new(m)?;
        (0..(1u32 << m))
            .map(|x| x | (ctx.pow(FieldElem(x), d).0 << m))
            .collect()
    };
    let set = PointSet::from_points(2 * m, &pts)?;
    debug_assert_eq!(set.len(), 1 << m);
    let sidon = set.is_sidon();
    Ok(ApnPowerGraph { set, sidon })
}

/// Halve a Sidon set into one dimension lower: restrict to the majority
/// side of the hyperplane attaining the linearity. Ties break toward the
/// lexicographically smallest normal and side 0. The output has exactly
/// (|S| + L(S)) / 2 points and is verified Sidon.
pub fn halving(s: &PointSet) -> Result<PointSet> {
    if !s.is_sidon() {
        return Err(invalid("halving is defined for Sidon sets"));
    }
    if s.dim() < 2 {
        return Err(invalid("halving needs ambient dimension at least 2"));
    }
    let t = spectral::fourier_indicator(s);
    let l = spectral::linearity(s);
    // transform values share the parity of |S|, so |S| + L is always even
    assert_eq!((s.len() as u64 + l) % 2, 0);
    let a = (1..(1u32 << s.dim()))
        .find(|&a| t.values()[a as usize].unsigned_abs() == l)
        .expect("some nonzero index attains the maximum");
    let c = u8::from(t.values()[a as usize] < 0);
    let restricted = s.hyperplane_restrict(a, c)?;
    let expected = (s.len() as u64 + l) / 2;
    if restricted.len() as u64 != expected || !restricted.is_sidon() {
        return Err(Error::ConstructionFailure(format!(
            "halving produced {} points (expected {expected}) or lost the Sidon property",
            restricted.len()
        )));
    }
    Ok(restricted)
}

/// Closed-form value for the linearity of the norm-one subgroup
/// G_{2^m + 1} in F_2^{2m}, odd m >= 3: 1 + 4 * floor((2^{m/2+1} + 1) / 4),
/// with the non-integer power computed as an exact integer square root.
///
/// Caution: the formula overestimates by 2 exactly when a multiple of 4
/// falls in the window (2^{m/2+1} - 1, 2^{m/2+1} + 1]; m = 5 is the first
/// such case (formula 13, true transform maximum 11).
pub fn closed_form_subgroup_linearity(odd_m: u32) -> Result<u64> {
    if odd_m % 2 == 0 {
        return Err(invalid("the closed form is for odd m"));
    }
    if odd_m < 3 || odd_m > 60 {
        return Err(invalid("need odd m with 3 <= m <= 60"));
    }
    let b = (1u128 << (odd_m + 2)).isqrt() as u64;
    Ok(1 + 4 * ((b + 1) / 4))
}

/// Comparison of the subgroup transform against Kloosterman sums.
///
/// For S = G_{2^m+1} in F_2^{2m} the trace-paired transform satisfies
/// hat(a) = 1 - K_m(a) at embedded subfield points a != 0, and more
/// generally hat(A) = 1 - K_m(N(A)) for every nonzero A, where
/// N(A) = A^{2^m+1} is the norm onto the subfield. (K here includes the
/// y = 0 term, so K(0) = 0.)
#[derive(Clone, Debug, Serialize)]
pub struct KloostermanFourierReport {
    pub m: u32,
    pub subgroup_size: u64,
    /// Max |transform| over nonzero points, bit-dot pairing.
    pub linearity: u64,
    /// Closed-form prediction (odd m only).
    pub closed_form: Option<u64>,
    pub closed_form_matches: Option<bool>,
    /// hat(a) = 1 - K_m(a) at every nonzero embedded subfield point.
    pub subfield_identity_holds: bool,
    pub subfield_points_checked: u64,
    /// hat(A) = 1 - K_m(N(A)) at every nonzero point of the big field.
    pub norm_identity_holds: bool,
    pub norm_points_checked: u64,
    /// Bit-dot and trace pairings give the same value multiset.
    pub pairing_multisets_match: bool,
}

pub fn kloosterman_fourier_report(m: usize) -> Result<KloostermanFourierReport> {
    if !(2..=8).contains(&m) {
        return Err(invalid("the comparison supports 2 <= m <= 8"));
    }
    let big = FieldCtx::new(2 * m)?;
    let sub = FieldCtx::new(m)?;
    let emb = SubfieldEmbedding::new(&big, &sub)?;
    let subgroup = subgroup_sidon(2 * m, m as u32)?;
    debug_assert_eq!(subgroup.len() as u64, (1u64 << m) + 1);

    let members: Vec<FieldElem> = subgroup.iter().map(FieldElem).collect();
    let hat_tr = |a: FieldElem| -> i64 {
        members
            .iter()
            .map(|&c| 1 - 2 * i64::from(big.trace(big.mul(a, c))))
            .sum()
    };

    let kloosterman: Vec<i64> = (0..(1u32 << m))
        .map(|a| sub.kloosterman(FieldElem(a)))
        .collect();

    let mut subfield_ok = true;
    for a in 1..(1u32 << m) {
        let image = emb.apply(FieldElem(a));
        if hat_tr(image) != 1 - kloosterman[a as usize] {
            subfield_ok = false;
            break;
        }
    }

    let norm_exp = (1u64 << m) + 1;
    let mut norm_ok = true;
    for a in 1..(1u32 << (2 * m)) {
        let norm = big.pow(FieldElem(a), norm_exp);
        let pre = emb
            .preimage(norm)
            .expect("the norm lands in the subfield");
        if hat_tr(FieldElem(a)) != 1 - kloosterman[pre.0 as usize] {
            norm_ok = false;
            break;
        }
    }

    let linearity = spectral::linearity(&subgroup);
    let closed_form = if m % 2 == 1 && m >= 3 {
        Some(closed_form_subgroup_linearity(m as u32)?)
    } else {
        None
    };

    let mut dot_vals = spectral::fourier_indicator(&subgroup).into_values();
    let mut tr_vals: Vec<i64> = (0..(1u32 << (2 * m)))
        .map(|a| hat_tr(FieldElem(a)))
        .collect();
    dot_vals.sort_unstable();
    tr_vals.sort_unstable();

    Ok(KloostermanFourierReport {
        m: m as u32,
        subgroup_size: subgroup.len() as u64,
        linearity,
        closed_form,
        closed_form_matches: closed_form.map(|c| c == linearity),
        subfield_identity_holds: subfield_ok,
        subfield_points_checked: (1u64 << m) - 1,
        norm_identity_holds: norm_ok,
        norm_points_checked: (1u64 << (2 * m)) - 1,
        pairing_multisets_match: dot_vals == tr_vals,
    })
}

/// One row of the lower-bound table for F_2^{2n-1}, odd n.
#[derive(Clone, Debug)]
pub struct BoundRow {
    pub odd_n: u32,
    pub ambient_dim: u32,
    /// 2^{n-1} + 2 floor((2^{n/2+1} + 1) / 4).
    pub base_size: u64,
    /// Base plus one.
    pub improved_size: u64,
    /// Constructed witness (subgroup then halving), present when the field
    /// fits desk scale (2n <= 14) and witnesses were requested.
    pub witness: Option<PointSet>,
}

/// Evaluate the bound formulas for each odd n, optionally constructing and
/// verifying halving witnesses where 2n <= 14. Rows come back sorted by n.
pub fn bound_table(odd_n: &[u32], witnesses: bool) -> Result<Vec<BoundRow>> {
    let mut ns: Vec<u32> = odd_n.to_vec();
    ns.sort_unstable();
    ns.dedup();
    let mut rows = Vec::with_capacity(ns.len());
    for n in ns {
        if n % 2 == 0 || n < 5 {
            return Err(invalid(format!("bound rows need odd n >= 5, got {n}")));
        }
        if n > 60 {
            return Err(invalid("n too large"));
        }
        let b = (1u128 << (n + 2)).isqrt() as u64;
        let base_size = (1u64 << (n - 1)) + 2 * ((b + 1) / 4);
        let witness = if witnesses && 2 * n <= 14 {
            let subgroup = subgroup_sidon(2 * n as usize, n)?;
            Some(halving(&subgroup)?)
        } else {
            None
        };
        rows.push(BoundRow {
            odd_n: n,
            ambient_dim: 2 * n - 1,
            base_size,
            improved_size: base_size + 1,
            witness,
        });
    }
    Ok(rows)
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
