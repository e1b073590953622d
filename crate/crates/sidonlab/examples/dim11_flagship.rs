//! The 24-point one-cover in F_2^11, both realizations: the stored integer
//! list and {0} plus the 23rd roots of unity in GF(2^11). Runs the whole
//! verification battery and prints the strongly-regular-graph certificate.
//!
//!     cargo run --example dim11_flagship

use sidonlab::constructions::{dim11_one_cover, Dim11Variant};
use sidonlab::verify_point_set;

fn main() {
    for variant in [Dim11Variant::Listed, Dim11Variant::Roots23] {
        let set = dim11_one_cover(variant);
        let report = verify_point_set(&set, &format!("{variant:?}"));
        println!("== {variant:?}: {} points in F_2^{}", set.len(), set.dim());
        println!("   sidon={} maximal={:?} separable={}", report.sidon, report.maximal, report.separable);
        println!(
            "   affine_dim={:?} kcover={:?} linearity={} (bound radicand {}/{})",
            report.affine_dim,
            report.kcover,
            report.linearity,
            report.linearity_bound.as_ref().unwrap().radicand_num,
            report.linearity_bound.as_ref().unwrap().radicand_den,
        );
        let spectrum: Vec<String> = report
            .spectrum
            .iter()
            .map(|e| format!("{}:{}", e.value, e.multiplicity))
            .collect();
        println!("   gamma spectrum: {}", spectrum.join(" "));
        match report.srg {
            Some(p) => println!("   strongly regular with parameters {p}"),
            None => println!("   not strongly regular"),
        }
        println!("   gamma bent: {}", report.gamma_bent);
        println!();
    }
}
