//! Cayley graphs of Boolean functions on F_2^n: exact spectra via the
//! Fourier-Hadamard transform, strongly-regular-graph detection and
//! prediction, regular cliques, domination, connectivity, the standardized
//! half-hypercube test, and graph export.
//!
//! Graphs stay implicit (a dimension plus a connection function); adjacency
//! matrices are never materialized outside small test oracles.

use std::collections::BTreeMap;
use std::io::Write;

use serde::Serialize;

use crate::bits;
use crate::error::{invalid, Error, Result};
use crate::pointset::{AffineMap, PointSet};
use crate::spectral::{self, BooleanFn};

/// Largest dimension for which edge lists may be exported.
pub const MAX_EXPORT_DIM: usize = 16;

/// The graph on vertex set F_2^n with u ~ v iff f(u + v) = 1. The value
/// f(0) never contributes an edge and is normalized to 0 at construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CayleyGraph {
    f: BooleanFn,
}

/// Strongly-regular-graph parameters (v, k, lambda, mu).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct SrgParams {
    pub v: u64,
    pub k: u64,
    pub lambda: u64,
    pub mu: u64,
}

impl SrgParams {
    /// The standard feasibility identity k(k - lambda - 1) = (v - k - 1) mu.
    pub fn identity_holds(&self) -> bool {
        self.k * (self.k - self.lambda - 1) == (self.v - self.k - 1) * self.mu
    }
}

impl std::fmt::Display for SrgParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {}, {})", self.v, self.k, self.lambda, self.mu)
    }
}

/// Outcome of evaluating the predicted parameter formulas for a pair (n, s).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SrgPrediction {
    Feasible(SrgParams),
    /// The formulas cannot describe a strongly regular graph for this pair.
    Infeasible(InfeasibleReason),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum InfeasibleReason {
    /// C(s,2) >= 2^n - 1 forces a complete (or impossible) graph.
    CompleteGraph,
    /// The lambda or mu formula does not divide exactly.
    InexactDivision,
    /// The parameters violate the feasibility identity.
    IdentityViolation,
}

impl CayleyGraph {
    pub fn new(f: BooleanFn) -> Self {
        CayleyGraph {
            f: f.clear_at_zero(),
        }
    }

    /// The graph of gamma_S: u ~ v iff u + v is a sum of two distinct
    /// members of S.
    pub fn from_set(s: &PointSet) -> Self {
        CayleyGraph::new(spectral::gamma_fn(s))
    }

    pub fn dim(&self) -> usize {
        self.f.dim()
    }

    pub fn vertex_count(&self) -> u64 {
        1u64 << self.f.dim()
    }

    pub fn connection(&self) -> &BooleanFn {
        &self.f
    }

    /// Every vertex has this degree.
    pub fn degree(&self) -> u64 {
        self.f.weight()
    }

    pub fn edge_count(&self) -> u64 {
        self.vertex_count() * self.degree() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        u != v && self.f.eval(u ^ v)
    }

    pub fn is_complete(&self) -> bool {
        self.degree() == self.vertex_count() - 1
    }

    /// Eigenvalue -> multiplicity map. The eigenvalues of the graph are
    /// exactly the values of the transform of the connection function.
    pub fn spectrum(&self) -> BTreeMap<i64, u64> {
        let mut table: Vec<i64> = (0..self.vertex_count())
            .map(|x| i64::from(self.f.eval(x as u32)))
            .collect();
        spectral::fwht_in_place(&mut table);
        let mut out = BTreeMap::new();
        for v in table {
            *out.entry(v).or_insert(0) += 1;
        }
        out
    }

    /// Detect a strongly regular graph: connected, regular, non-complete,
    /// with exactly three distinct eigenvalues k > alpha > beta. Lambda and
    /// mu come from the eigenvalue relations and, for n <= 11, are
    /// double-checked by a direct common-neighbor count (one vertex suffices
    /// because translations act transitively).
    pub fn is_strongly_regular(&self) -> Option<SrgParams> {
        let spec = self.spectrum();
        if spec.len() != 3 {
            return None;
        }
        if self.is_complete() || self.degree() == 0 {
            return None;
        }
        let k = self.degree() as i64;
        // for a regular graph the degree eigenvalue has multiplicity equal
        // to the number of connected components
        let (&max_val, &max_mult) = spec.iter().next_back().unwrap();
        assert_eq!(max_val, k, "degree must be the top transform value");
        if max_mult != 1 {
            return None; // disconnected
        }
        let mut it = spec.keys();
        let beta = *it.next().unwrap();
        let alpha = *it.next().unwrap();
        let mu = k + alpha * beta;
        let lambda = mu + alpha + beta;
        if mu <= 0 || lambda < 0 {
            return None;
        }
        let params = SrgParams {
            v: self.vertex_count(),
            k: k as u64,
            lambda: lambda as u64,
            mu: mu as u64,
        };
        assert!(params.identity_holds(), "eigenvalue-derived parameters");
        if self.dim() <= 11 {
            self.validate_srg_combinatorially(&params);
        }
        Some(params)
    }

    /// Common-neighbor counts seen from vertex 0 against every other vertex.
    fn validate_srg_combinatorially(&self, p: &SrgParams) {
        let support = self.f.support();
        for w in 1..self.vertex_count() as u32 {
            let common = support
                .iter()
                .filter(|&&x| self.f.eval(x ^ w))
                .count() as u64;
            let expected = if self.f.eval(w) { p.lambda } else { p.mu };
            assert_eq!(
                common, expected,
                "common-neighbor count at w={w} contradicts {p}"
            );
        }
    }

    /// Number of connected components by union-find over the edges
    /// generated from the support. Always equals 2^(n-d) where d is the
    /// linear dimension of the support.
    pub fn connected_components(&self) -> u64 {
        let size = 1usize << self.dim();
        let mut parent: Vec<u32> = (0..size as u32).collect();
        fn find(parent: &mut [u32], mut x: u32) -> u32 {
            while parent[x as usize] != x {
                parent[x as usize] = parent[parent[x as usize] as usize];
                x = parent[x as usize];
            }
            x
        }
        for s in self.f.support() {
            for x in 0..size as u32 {
                let a = find(&mut parent, x);
                let b = find(&mut parent, x ^ s);
                if a != b {
                    parent[a as usize] = b;
                }
            }
        }
        let mut count = 0u64;
        for x in 0..size as u32 {
            if find(&mut parent, x) == x {
                count += 1;
            }
        }
        debug_assert_eq!(
            count,
            1u64 << (self.dim() - bits::rank(self.f.support())),
        );
        count
    }

    /// Neighbors of p inside the vertex subset C.
    pub fn neighbor_count_in(&self, p: u32, c: &PointSet) -> u64 {
        c.iter().filter(|&x| self.has_edge(p, x)).count() as u64
    }

    /// Every vertex outside D has a neighbor in D.
    pub fn is_dominating(&self, d: &PointSet) -> bool {
        (0..self.vertex_count() as u32)
            .filter(|&p| !d.contains(p))
            .all(|p| c_nonzero(self, p, d))
    }

    /// If C is a clique and every outside vertex has the same positive
    /// number c of neighbors in C, returns c.
    pub fn is_regular_clique(&self, c: &PointSet) -> Option<u64> {
        let pts = c.points();
        for (i, &a) in pts.iter().enumerate() {
            for &b in &pts[i + 1..] {
                if !self.has_edge(a, b) {
                    return None;
                }
            }
        }
        let mut constant = None;
        for p in 0..self.vertex_count() as u32 {
            if c.contains(p) {
                continue;
            }
            let count = self.neighbor_count_in(p, c);
            match constant {
                None => constant = Some(count),
                Some(prev) if prev != count => return None,
                _ => {}
            }
        }
        constant.filter(|&c| c > 0)
    }

    /// Write the edge list: a `p <vertices> <edges>` header, then one
    /// `e <u> <v>` line per unordered edge in lexicographic order.
    pub fn export_edgelist<W: Write>(&self, sink: &mut W) -> Result<()> {
        self.export_guard()?;
        writeln!(sink, "p {} {}", self.vertex_count(), self.edge_count())?;
        self.for_each_edge_lex(|u, v| writeln!(sink, "e {u} {v}").map_err(Error::from))
    }

    /// Write DOT with decimal vertex labels.
    pub fn export_dot<W: Write>(&self, sink: &mut W) -> Result<()> {
        self.export_guard()?;
        writeln!(sink, "graph cayley {{")?;
        for v in 0..self.vertex_count() {
            writeln!(sink, "  {v};")?;
        }
        self.for_each_edge_lex(|u, v| writeln!(sink, "  {u} -- {v};").map_err(Error::from))?;
        writeln!(sink, "}}")?;
        Ok(())
    }

    fn export_guard(&self) -> Result<()> {
        if self.dim() > MAX_EXPORT_DIM {
            return Err(Error::SizeGuard(format!(
                "export supports n <= {MAX_EXPORT_DIM}, graph has n = {}",
                self.dim()
            )));
        }
        Ok(())
    }

    fn for_each_edge_lex(&self, mut emit: impl FnMut(u32, u32) -> Result<()>) -> Result<()> {
        let support = self.f.support();
        let mut neighbors = Vec::with_capacity(support.len());
        for u in 0..self.vertex_count() as u32 {
            neighbors.clear();
            neighbors.extend(support.iter().map(|&s| u ^ s).filter(|&v| v > u));
            neighbors.sort_unstable();
            for &v in &neighbors {
                emit(u, v)?;
            }
        }
        Ok(())
    }
}

fn c_nonzero(g: &CayleyGraph, p: u32, d: &PointSet) -> bool {
    d.iter().any(|x| g.has_edge(p, x))
}

/// The parameter quadruple a k-cover of size s in F_2^n would force on its
/// gamma Cayley graph, or the reason no such non-complete graph can exist.
pub fn predicted_srg_params(n: usize, s: u64) -> Result<SrgPrediction> {
    if n == 0 || n > 62 {
        return Err(invalid("dimension out of range"));
    }
    let space = 1u64 << n;
    if !(3..space as u128).contains(&(s as u128)) {
        return Err(invalid("need 3 <= s < 2^n"));
    }
    let k = s * (s - 1) / 2;
    if k >= space - 1 {
        return Ok(SrgPrediction::Infeasible(InfeasibleReason::CompleteGraph));
    }
    let s = s as i128;
    let space = space as i128;
    let den = 4 * (space - s);
    let lambda_num = (s - 2) * (s * s * s - 3 * s * s + 2 * space);
    let mu_num = s * s * (s - 1) * (s - 2);
    if lambda_num % den != 0 || mu_num % den != 0 {
        return Ok(SrgPrediction::Infeasible(InfeasibleReason::InexactDivision));
    }
    let lambda = lambda_num / den;
    let mu = mu_num / den;
    if lambda < 0 || mu <= 0 {
        return Ok(SrgPrediction::Infeasible(InfeasibleReason::IdentityViolation));
    }
    let params = SrgParams {
        v: space as u64,
        k,
        lambda: lambda as u64,
        mu: mu as u64,
    };
    if !params.identity_holds() {
        return Ok(SrgPrediction::Infeasible(InfeasibleReason::IdentityViolation));
    }
    Ok(SrgPrediction::Feasible(params))
}

/// For a set of n+1 affinely independent points, map it by the standardizing
/// affine bijection onto {0, e_1, ..., e_n} and verify that adjacency in the
/// gamma Cayley graph is exactly "Hamming weight of u + v is 1 or 2" (the
/// half hypercube on the next dimension up).
pub fn halfcube_check(s: &PointSet) -> Result<bool> {
    let n = s.dim();
    if s.len() != n + 1 {
        return Err(invalid(format!(
            "need exactly {} points in F_2^{n}",
            n + 1
        )));
    }
    let pts = s.points();
    let x0 = pts[0];
    let diffs: Vec<u32> = pts[1..].iter().map(|&p| p ^ x0).collect();
    if bits::rank(diffs.iter().copied()) != n {
        return Err(invalid("points are affinely dependent"));
    }
    // Want linear L with L(diffs[i]) = e_i; its rows are the columns of the
    // inverse of the matrix whose rows are the diffs.
    let inv = bits::invert(&diffs).expect("full-rank matrix inverts");
    let rows = bits::transpose(&inv, n);
    let linear = AffineMap::new(rows, n, 0)?;
    let translate = AffineMap::translation(n, x0)?;
    let standardized = s
        .apply_affine(&translate)
        .and_then(|t| t.apply_affine(&linear))?;
    let mut expect = vec![0u32];
    expect.extend((0..n).map(|i| 1u32 << i));
    expect.sort_unstable();
    assert_eq!(standardized.points(), expect, "standardization failed");
    let gamma = spectral::gamma_fn(&standardized);
    Ok((1..(1u32 << n)).all(|w| gamma.eval(w) == (1..=2).contains(&w.count_ones())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn set(n: usize, pts: &[u32]) -> PointSet {
        PointSet::from_points(n, pts).unwrap()
    }

    #[test]
    fn spectrum_of_edgeless_and_complete() {
        let edgeless = CayleyGraph::new(BooleanFn::zero(4));
        assert_eq!(edgeless.spectrum(), BTreeMap::from([(0, 16)]));
        assert_eq!(edgeless.connected_components(), 16);
        assert!(edgeless.is_strongly_regular().is_none());

        let complete = CayleyGraph::new(BooleanFn::from_fn(3, |x| x != 0));
        assert_eq!(complete.spectrum(), BTreeMap::from([(-1, 7), (7, 1)]));
        assert!(complete.is_strongly_regular().is_none());
        assert_eq!(complete.connected_components(), 1);
    }

    /// Characters are an eigenbasis: verify A chi_a = f_hat(a) chi_a against
    /// the explicitly materialized adjacency matrix.
    #[test]
    fn spectrum_matches_adjacency_matrix_action() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for n in 1..=6usize {
            let size = 1usize << n;
            let f = BooleanFn::from_fn(n, |x| x != 0 && rng.gen_bool(0.4));
            let g = CayleyGraph::new(f);
            let mut table: Vec<i64> = (0..size)
                .map(|x| i64::from(g.connection().eval(x as u32)))
                .collect();
            spectral::fwht_in_place(&mut table);
            for a in 0..size {
                for u in 0..size {
                    let lhs: i64 = (0..size)
                        .filter(|&v| g.has_edge(u as u32, v as u32))
                        .map(|v| 1 - 2 * ((a & v).count_ones() as i64 & 1))
                        .sum();
                    let chi_u = 1 - 2 * ((a & u).count_ones() as i64 & 1);
                    assert_eq!(lhs, table[a] * chi_u);
                }
            }
        }
    }

    #[test]
    fn gamma_graph_degree_is_pair_count() {
        let mut rng = ChaCha8Rng::seed_from_u64(32);
        for _ in 0..100 {
            let n = rng.gen_range(2..=8usize);
            let s = crate::corpus::random_sidon_set(n, None, &mut rng);
            let g = CayleyGraph::from_set(&s);
            let k = s.len() as u64;
            assert_eq!(g.degree(), k * k.saturating_sub(1) / 2);
        }
    }

    #[test]
    fn domination_iff_maximal_and_neighbor_counts() {
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        for _ in 0..60 {
            let n = rng.gen_range(2..=7usize);
            let s = crate::corpus::random_sidon_set(n, None, &mut rng);
            if s.len() < 2 {
                continue;
            }
            let g = CayleyGraph::from_set(&s);
            assert_eq!(g.is_dominating(&s), s.is_maximal().unwrap());
            let mult = s.exclude_multiplicities();
            for p in 0..(1u32 << n) {
                if !s.contains(p) {
                    assert_eq!(g.neighbor_count_in(p, &s), 3 * mult[p as usize]);
                }
            }
        }
        // the whole vertex set dominates trivially
        let s = set(3, &[0, 1]);
        let g = CayleyGraph::from_set(&s);
        let all = set(3, &[0, 1, 2, 3, 4, 5, 6, 7]);
        assert!(g.is_dominating(&all));
    }

    #[test]
    fn components_match_support_rank() {
        let mut rng = ChaCha8Rng::seed_from_u64(34);
        for _ in 0..60 {
            let n = rng.gen_range(1..=8usize);
            let d = rng.gen_range(0..=n);
            let f = crate::corpus::random_function_with_support_rank(n, d, &mut rng);
            let g = CayleyGraph::new(f);
            assert_eq!(g.connected_components(), 1u64 << (n - d));
        }
    }

    #[test]
    fn regular_clique_examples() {
        // non-maximal Sidon sets leave some vertex with zero neighbors in S
        let s = set(3, &[0, 1]);
        let g = CayleyGraph::from_set(&s);
        assert_eq!(g.is_regular_clique(&s), None);

        // {0,1,2} is a 1-cover in F_2^2, hence a 3-regular clique
        let s = set(2, &[0, 1, 2]);
        let g = CayleyGraph::from_set(&s);
        assert_eq!(g.is_regular_clique(&s), Some(3));
    }

    #[test]
    fn predicted_params_examples() {
        assert_eq!(
            predicted_srg_params(11, 24).unwrap(),
            SrgPrediction::Feasible(SrgParams {
                v: 2048,
                k: 276,
                lambda: 44,
                mu: 36
            })
        );
        assert_eq!(
            predicted_srg_params(10, 32).unwrap(),
            SrgPrediction::Feasible(SrgParams {
                v: 1024,
                k: 496,
                lambda: 240,
                mu: 240
            })
        );
        // C(6,2) = 15 = 2^4 - 1 forces a complete graph
        assert_eq!(
            predicted_srg_params(4, 6).unwrap(),
            SrgPrediction::Infeasible(InfeasibleReason::CompleteGraph)
        );
        // (5, 7): the mu formula does not divide
        assert_eq!(
            predicted_srg_params(5, 7).unwrap(),
            SrgPrediction::Infeasible(InfeasibleReason::InexactDivision)
        );
        assert!(predicted_srg_params(4, 2).is_err());
    }

    #[test]
    fn halfcube_examples() {
        assert!(halfcube_check(&set(3, &[0, 1, 2, 4])).unwrap());
        // every vertex degree is C(n+1, 2)
        let g = CayleyGraph::from_set(&set(3, &[0, 1, 2, 4]));
        assert_eq!(g.degree(), 6);

        let mut rng = ChaCha8Rng::seed_from_u64(35);
        for _ in 0..40 {
            let n = rng.gen_range(1..=6usize);
            let s = crate::corpus::random_affinely_independent_set(n, &mut rng);
            assert!(halfcube_check(&s).unwrap());
        }
        assert!(halfcube_check(&set(3, &[0, 1, 2, 3])).is_err());
        assert!(halfcube_check(&set(3, &[0, 1])).is_err());
    }

    #[test]
    fn export_formats() {
        let complete = CayleyGraph::new(BooleanFn::from_fn(2, |x| x != 0));
        let mut buf = Vec::new();
        complete.export_edgelist(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "p 4 6");
        assert_eq!(lines.len(), 7);
        assert_eq!(lines[1], "e 0 1");

        let edgeless = CayleyGraph::new(BooleanFn::zero(2));
        let mut buf = Vec::new();
        edgeless.export_edgelist(&mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "p 4 0\n");

        let mut buf = Vec::new();
        complete.export_dot(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("graph cayley {"));
        assert!(text.contains("  0 -- 1;"));
        assert!(text.trim_end().ends_with('}'));
    }
}
