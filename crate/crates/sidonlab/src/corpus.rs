//! Seeded random generators, exhaustive Sidon-set enumeration, and the
//! classification helpers used by the scan command and the test corpora.
//!
//! Everything here is deterministic given the seed; thread splitting never
//! changes results, only wall time.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bits::BitVec;
use crate::cayley::{CayleyGraph, SrgParams};
use crate::error::{invalid, Result};
use crate::pointset::{AffineMap, PointSet};
use crate::spectral::BooleanFn;

/// Visit every Sidon subset of F_2^n (including the empty set), points in
/// ascending order. Backtracking with an incremental pairwise-sum table.
pub fn enumerate_sidon_sets(n: usize, mut visit: impl FnMut(&[u32])) {
    assert!(n <= 16, "exhaustive enumeration is for small dimensions");
    let mut state = EnumState {
        n,
        pts: Vec::new(),
        sums: BitVec::new(1 << n),
    };
    state.recurse(0, &mut visit);
}

struct EnumState {
    n: usize,
    pts: Vec<u32>,
    sums: BitVec,
}

impl EnumState {
    fn recurse(&mut self, start: u32, visit: &mut impl FnMut(&[u32])) {
        visit(&self.pts);
        for x in start..(1u32 << self.n) {
            let ok = self
                .pts
                .iter()
                .all(|&p| !self.sums.get((p ^ x) as usize));
            if !ok {
                continue;
            }
            for i in 0..self.pts.len() {
                self.sums.set((self.pts[i] ^ x) as usize, true);
            }
            self.pts.push(x);
            self.recurse(x + 1, visit);
            self.pts.pop();
            for i in 0..self.pts.len() {
                self.sums.set((self.pts[i] ^ x) as usize, false);
            }
        }
    }
}

/// A uniformly random subset with at most `max_size` points (size chosen
/// uniformly first). Mixes Sidon and non-Sidon sets.
pub fn random_subset<R: Rng>(n: usize, max_size: usize, rng: &mut R) -> PointSet {
    let cap = max_size.min(1 << n);
    let k = rng.gen_range(0..=cap);
    let idx = rand::seq::index::sample(rng, 1 << n, k);
    let pts: Vec<u32> = idx.into_iter().map(|p| p as u32).collect();
    PointSet::from_points(n, &pts).expect("sampled points are in range")
}

/// Greedy Sidon set over a shuffled point order. With `max_size = None` the
/// pass runs to completion, which makes the result a maximal Sidon set.
pub fn random_sidon_set<R: Rng>(n: usize, max_size: Option<usize>, rng: &mut R) -> PointSet {
    let mut order: Vec<u32> = (0..(1u32 << n)).collect();
    order.shuffle(rng);
    let mut sums = BitVec::new(1 << n);
    let mut pts: Vec<u32> = Vec::new();
    for x in order {
        if let Some(cap) = max_size {
            if pts.len() >= cap {
                break;
            }
        }
        if pts.iter().all(|&p| !sums.get((p ^ x) as usize)) {
            for &p in &pts {
                sums.set((p ^ x) as usize, true);
            }
            pts.push(x);
        }
    }
    PointSet::from_points(n, &pts).expect("points are in range")
}

/// A maximal Sidon set produced by a full greedy pass.
pub fn random_maximal_sidon_set<R: Rng>(n: usize, rng: &mut R) -> PointSet {
    random_sidon_set(n, None, rng)
}

/// A uniformly random invertible affine map on F_2^n.
pub fn random_invertible_affine<R: Rng>(n: usize, rng: &mut R) -> AffineMap {
    let mask = ((1u64 << n) - 1) as u32;
    loop {
        let rows: Vec<u32> = (0..n).map(|_| rng.gen::<u32>() & mask).collect();
        let offset = rng.gen::<u32>() & mask;
        if let Ok(map) = AffineMap::new(rows, n, offset) {
            if map.is_invertible() {
                return map;
            }
        }
    }
}

/// n+1 affinely independent points: a random invertible affine image of
/// {0, e_1, ..., e_n}.
pub fn random_affinely_independent_set<R: Rng>(n: usize, rng: &mut R) -> PointSet {
    let mut pts = vec![0u32];
    pts.extend((0..n).map(|i| 1u32 << i));
    let base = PointSet::from_points(n, &pts).expect("standard simplex");
    let map = random_invertible_affine(n, rng);
    base.apply_affine(&map).expect("dimensions match")
}

/// A Boolean function whose support spans a subspace of dimension exactly
/// `d` (and is zero at the origin).
pub fn random_function_with_support_rank<R: Rng>(n: usize, d: usize, rng: &mut R) -> BooleanFn {
    assert!(d <= n);
    if d == 0 {
        return BooleanFn::zero(n);
    }
    let mask = ((1u64 << n) - 1) as u32;
    let basis: Vec<u32> = loop {
        let cand: Vec<u32> = (0..d).map(|_| rng.gen::<u32>() & mask).collect();
        if crate::bits::rank(cand.iter().copied()) == d {
            break cand;
        }
    };
    let mut span = vec![0u32];
    for &b in &basis {
        let mut shifted: Vec<u32> = span.iter().map(|&x| x ^ b).collect();
        span.append(&mut shifted);
    }
    let mut support: Vec<u32> = basis.clone();
    for &x in span.iter().filter(|&&x| x != 0) {
        if rng.gen_bool(0.5) {
            support.push(x);
        }
    }
    BooleanFn::from_support(n, &support).expect("span points are in range")
}

// ---------------------------------------------------------------------------
// Classification of a single Sidon set.
// ---------------------------------------------------------------------------

/// Everything the cover/graph equivalences need to know about one Sidon set.
#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub size: u64,
    pub affine_dim: usize,
    pub separable: bool,
    /// `None` when the set is not a k-cover (or has fewer than 3 points).
    pub kcover: Option<u64>,
    pub complete_graph: bool,
    pub eigenvalue_count: usize,
    pub srg: Option<SrgParams>,
}

pub fn classify_sidon(s: &PointSet) -> Result<Classification> {
    if s.is_empty() {
        return Err(invalid("classification needs a nonempty set"));
    }
    if !s.is_sidon() {
        return Err(invalid("classification is defined for Sidon sets"));
    }
    let kcover = if s.len() >= 3 && (s.len() as u64) < (1u64 << s.dim()) {
        s.kcover_value()?
    } else {
        None
    };
    let graph = CayleyGraph::from_set(s);
    let spectrum = graph.spectrum();
    Ok(Classification {
        size: s.len() as u64,
        affine_dim: s.affine_dimension()?,
        separable: s.is_separable(),
        kcover,
        complete_graph: graph.is_complete(),
        eigenvalue_count: spectrum.len(),
        srg: graph.is_strongly_regular(),
    })
}

// ---------------------------------------------------------------------------
// Randomized cover/graph equivalence scan.
// ---------------------------------------------------------------------------

/// One set violating "k-cover iff (strongly regular and separable)".
#[derive(Clone, Debug, Serialize)]
pub struct ScanCounterexample {
    pub points: Vec<u32>,
    pub kcover: Option<u64>,
    pub srg: Option<SrgParams>,
    pub separable: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    pub n: usize,
    pub count: u64,
    pub seed: u64,
    pub threads: usize,
    /// Sets inspected (full-dimensional with at least 3 eigenvalues).
    pub eligible: u64,
    pub kcover_sets: u64,
    pub srg_graphs: u64,
    pub separable_sets: u64,
    pub counterexamples: Vec<ScanCounterexample>,
}

/// Generate `count` random maximal Sidon sets in F_2^n and test the
/// equivalence "k-cover iff (strongly regular and separable)" on every
/// full-dimensional one whose graph has at least 3 eigenvalues. The result
/// is a pure function of (n, count, seed); `threads` only splits the work.
pub fn scan_kcover_equivalence(
    n: usize,
    count: u64,
    seed: u64,
    threads: usize,
) -> Result<ScanReport> {
    if !(2..=14).contains(&n) {
        return Err(invalid("scan supports 2 <= n <= 14"));
    }
    let threads = threads.clamp(1, 64);
    let chunk = count.div_ceil(threads as u64).max(1);
    let ranges: Vec<(u64, u64)> = (0..threads as u64)
        .map(|t| (t * chunk, ((t + 1) * chunk).min(count)))
        .filter(|(lo, hi)| lo < hi)
        .collect();

    let partials: Vec<ScanReport> = std::thread::scope(|scope| {
        let handles: Vec<_> = ranges
            .iter()
            .map(|&(lo, hi)| scope.spawn(move || scan_range(n, seed, lo, hi)))
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });

    let mut report = ScanReport {
        n,
        count,
        seed,
        threads,
        eligible: 0,
        kcover_sets: 0,
        srg_graphs: 0,
        separable_sets: 0,
        counterexamples: Vec::new(),
    };
    for mut p in partials {
        report.eligible += p.eligible;
        report.kcover_sets += p.kcover_sets;
        report.srg_graphs += p.srg_graphs;
        report.separable_sets += p.separable_sets;
        report.counterexamples.append(&mut p.counterexamples);
    }
    Ok(report)
}

fn scan_range(n: usize, seed: u64, lo: u64, hi: u64) -> ScanReport {
    let mut out = ScanReport {
        n,
        count: hi - lo,
        seed,
        threads: 1,
        eligible: 0,
        kcover_sets: 0,
        srg_graphs: 0,
        separable_sets: 0,
        counterexamples: Vec::new(),
    };
    for i in lo..hi {
        let mut rng =
            ChaCha8Rng::seed_from_u64(seed ^ i.wrapping_mul(0x9E37_79B9_7F4A_7C15));
        let s = random_maximal_sidon_set(n, &mut rng);
        let class = classify_sidon(&s).expect("generated sets are Sidon and nonempty");
        if class.affine_dim != n || class.eigenvalue_count < 3 {
            continue;
        }
        out.eligible += 1;
        if class.kcover.is_some() {
            out.kcover_sets += 1;
        }
        if class.srg.is_some() {
            out.srg_graphs += 1;
        }
        if class.separable {
            out.separable_sets += 1;
        }
        if class.kcover.is_some() != (class.srg.is_some() && class.separable) {
            out.counterexamples.push(ScanCounterexample {
                points: s.points(),
                kcover: class.kcover,
                srg: class.srg,
                separable: class.separable,
            });
        }
    }
    out
}

/// Thread-count hint: the SIDONLAB_THREADS environment variable when set,
/// otherwise the machine's available parallelism. Never affects results.
pub fn thread_count_hint() -> usize {
    if let Ok(v) = std::env::var("SIDONLAB_THREADS") {
        if let Ok(t) = v.trim().parse::<usize>() {
            if t >= 1 {
                return t.min(64);
            }
        }
    }
    std::thread::available_parallelism()
        .map(|p| p.get())
        .unwrap_or(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts_are_stable() {
        // full subset counts for tiny n, frozen from an independent search
        let mut count = 0u64;
        enumerate_sidon_sets(2, |_| count += 1);
        // 16 subsets of F_2^2, of which only the full set is non-Sidon
        assert_eq!(count, 15);

        let mut full_dim = [0u64; 5];
        for n in 1..=4usize {
            enumerate_sidon_sets(n, |pts| {
                if pts.len() >= 2 {
                    let s = PointSet::from_points(n, pts).unwrap();
                    if s.affine_dimension().unwrap() == n {
                        full_dim[n] += 1;
                    }
                }
            });
        }
        assert_eq!(full_dim[1..5], [1, 4, 56, 3136]);
    }

    #[test]
    fn enumerated_sets_are_sidon_and_distinct() {
        let mut seen = std::collections::HashSet::new();
        enumerate_sidon_sets(3, |pts| {
            let s = PointSet::from_points(3, pts).unwrap();
            assert!(s.is_sidon());
            assert!(seen.insert(pts.to_vec()));
        });
    }

    #[test]
    fn greedy_sets_are_maximal_sidon() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..50 {
            let n = rng.gen_range(2..=8usize);
            let s = random_maximal_sidon_set(n, &mut rng);
            assert!(s.is_sidon());
            assert!(s.is_maximal().unwrap(), "greedy pass must be maximal");
        }
    }

    #[test]
    fn support_rank_generator_is_exact() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..50 {
            let n = rng.gen_range(1..=8usize);
            let d = rng.gen_range(0..=n);
            let f = random_function_with_support_rank(n, d, &mut rng);
            assert_eq!(crate::bits::rank(f.support()), d);
            assert!(!f.eval(0));
        }
    }

    #[test]
    fn scan_is_thread_count_invariant() {
        let a = scan_kcover_equivalence(5, 40, 7, 1).unwrap();
        let b = scan_kcover_equivalence(5, 40, 7, 4).unwrap();
        assert_eq!(a.eligible, b.eligible);
        assert_eq!(a.kcover_sets, b.kcover_sets);
        assert_eq!(a.srg_graphs, b.srg_graphs);
        assert_eq!(a.separable_sets, b.separable_sets);
        assert_eq!(a.counterexamples.len(), b.counterexamples.len());
        assert!(a.counterexamples.is_empty());
    }
}
