//! Graphs of cube power maps {(x, x^3)} inside F_2^{2m}: Sidon for every m,
//! and for odd m a ((2^m - 2)/6)-cover whose gamma function is bent, giving
//! a strongly regular graph with lambda = mu.
//!
//!     cargo run --example bent_gamma_graph

use sidonlab::cayley::CayleyGraph;
use sidonlab::constructions::apn_power_graph;
use sidonlab::spectral;

fn main() {
    for m in 2..=6usize {
        let graph_set = apn_power_graph(m, 3).unwrap();
        let set = graph_set.set;
        let n = set.dim();
        let kcover = set.kcover_value().unwrap();
        let graph = CayleyGraph::from_set(&set);
        let bent = spectral::is_bent(graph.connection());
        println!(
            "m={m}: {} points in F_2^{n}, sidon={}, kcover={:?}, gamma bent={}",
            set.len(),
            graph_set.sidon,
            kcover,
            bent,
        );
        if let Some(p) = graph.is_strongly_regular() {
            println!("      strongly regular {p} (lambda == mu: {})", p.lambda == p.mu);
        }
        // bentness happens exactly when the set is a cover of size 2^(n/2)
        assert_eq!(bent, kcover.is_some() && set.len() as u64 == 1u64 << (n / 2));
    }
}
