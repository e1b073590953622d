//! Kloosterman sums over GF(2^n): the value set is exactly the multiples of
//! 4 in the Weil window [-2^((n+2)/2) + 1, 2^((n+2)/2) + 1], and the
//! norm-one subgroup transform in F_2^{2n} takes exactly the values 1 - K.
//!
//!     cargo run --example kloosterman_values

use std::collections::BTreeMap;

use sidonlab::constructions::kloosterman_fourier_report;
use sidonlab::field::{FieldCtx, FieldElem};

fn main() {
    for n in 4..=8usize {
        let ctx = FieldCtx::new(n).unwrap();
        let mut histogram: BTreeMap<i64, u64> = BTreeMap::new();
        for a in 0..(1u32 << n) {
            *histogram.entry(ctx.kloosterman(FieldElem(a))).or_insert(0) += 1;
        }
        let desc: Vec<String> = histogram
            .iter()
            .map(|(v, c)| format!("{v}x{c}"))
            .collect();
        println!("K over GF(2^{n}): {}", desc.join(" "));
    }
    println!();
    for m in 3..=6usize {
        let r = kloosterman_fourier_report(m).unwrap();
        println!(
            "G_{} in F_2^{}: hat = 1 - K on the subfield: {}; through the norm everywhere: {}",
            (1u64 << m) + 1,
            2 * m,
            r.subfield_identity_holds,
            r.norm_identity_holds,
        );
    }
}
