//! The verification battery: run every standard check on a point set and
//! emit a structured JSON certificate, plus the assertion grammar the
//! command line exposes on top of it.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use crate::cayley::{CayleyGraph, SrgParams};
use crate::error::{invalid, Error, Result};
use crate::pointset::PointSet;
use crate::spectral;

#[derive(Clone, Debug, Serialize)]
pub struct InputDescriptor {
    pub source: String,
    pub dim: usize,
    pub size: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct LinearityBoundInfo {
    pub radicand_num: i64,
    pub radicand_den: i64,
    pub bound: f64,
    /// linearity^2 equals the radicand exactly.
    pub met_exactly: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumEntry {
    pub value: i64,
    pub multiplicity: u64,
}

/// Structured certificate of all checks run on a point set.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub input: InputDescriptor,
    pub sidon: bool,
    /// `None` when the set is not Sidon (maximality is then undefined).
    pub maximal: Option<bool>,
    pub separable: bool,
    /// `None` for the empty set.
    pub affine_dim: Option<usize>,
    /// The uniform exclude multiplicity, when the set is a k-cover.
    pub kcover: Option<u64>,
    pub linearity: u64,
    /// `None` when the bound's preconditions (n > 1, 0 < s < 2^n) fail.
    pub linearity_bound: Option<LinearityBoundInfo>,
    /// Eigenvalues of the gamma Cayley graph, descending, with multiplicities.
    pub spectrum: Vec<SpectrumEntry>,
    pub srg: Option<SrgParams>,
    pub gamma_bent: bool,
    pub timings_ms: BTreeMap<String, f64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub assertions: Vec<AssertionOutcome>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AssertionOutcome {
    pub assertion: String,
    pub passed: bool,
    pub detail: String,
}

/// Run the full battery on a set.
pub fn verify_point_set(set: &PointSet, source: &str) -> VerificationReport {
    let mut timings = BTreeMap::new();
    let mut timed = |name: &str, f: &mut dyn FnMut()| {
        let t0 = Instant::now();
        f();
        timings.insert(name.to_string(), t0.elapsed().as_secs_f64() * 1e3);
    };

    let mut sidon = false;
    timed("sidon", &mut || sidon = set.is_sidon());

    let mut maximal = None;
    timed("maximal", &mut || {
        maximal = if sidon { set.is_maximal().ok() } else { None }
    });

    let mut separable = false;
    timed("separable", &mut || separable = set.is_separable());

    let affine_dim = set.affine_dimension().ok();

    let mut kcover = None;
    timed("kcover", &mut || {
        kcover = if sidon && set.len() >= 3 && (set.len() as u64) < (1u64 << set.dim()) {
            set.kcover_value().expect("preconditions checked")
        } else {
            None
        };
    });

    let mut linearity = 0;
    timed("linearity", &mut || linearity = spectral::linearity(set));

    let linearity_bound = spectral::linearity_lower_bound(set.dim(), set.len() as u64)
        .ok()
        .map(|b| LinearityBoundInfo {
            radicand_num: i64::try_from(b.radicand_num).unwrap_or(i64::MAX),
            radicand_den: i64::try_from(b.radicand_den).unwrap_or(i64::MAX),
            bound: b.value(),
            met_exactly: b.is_met_exactly_by(linearity),
        });

    let graph = CayleyGraph::from_set(set);
    let mut spectrum_map = BTreeMap::new();
    timed("spectrum", &mut || spectrum_map = graph.spectrum());
    let spectrum: Vec<SpectrumEntry> = spectrum_map
        .iter()
        .rev()
        .map(|(&value, &multiplicity)| SpectrumEntry {
            value,
            multiplicity,
        })
        .collect();

    let mut srg = None;
    timed("srg", &mut || srg = graph.is_strongly_regular());

    let mut gamma_bent = false;
    timed("bent", &mut || {
        gamma_bent = spectral::is_bent(graph.connection())
    });

    let report = VerificationReport {
        input: InputDescriptor {
            source: source.to_string(),
            dim: set.dim(),
            size: set.len() as u64,
        },
        sidon,
        maximal,
        separable,
        affine_dim,
        kcover,
        linearity,
        linearity_bound,
        spectrum,
        srg,
        gamma_bent,
        timings_ms: timings,
        assertions: Vec::new(),
    };
    debug_assert!(report.kcover.is_none() || report.maximal == Some(true));
    debug_assert!(report.srg.is_none() || report.spectrum.len() == 3);
    report
}

/// One `--assert` clause.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Assertion {
    Sidon,
    Maximal,
    Separable,
    BentGamma,
    Kcover(u64),
    Linearity(u64),
    AffineDim(usize),
    Srg(SrgParams),
}

impl std::str::FromStr for Assertion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, value) = match s.split_once('=') {
            Some((n, v)) => (n.trim(), Some(v.trim())),
            None => (s.trim(), None),
        };
        match (name, value) {
            ("sidon", None) => Ok(Assertion::Sidon),
            ("maximal", None) => Ok(Assertion::Maximal),
            ("separable", None) => Ok(Assertion::Separable),
            ("bent-gamma", None) => Ok(Assertion::BentGamma),
            ("kcover", Some(v)) => v
                .parse()
                .map(Assertion::Kcover)
                .map_err(|_| invalid(format!("bad kcover value {v:?}"))),
            ("linearity", Some(v)) => v
                .parse()
                .map(Assertion::Linearity)
                .map_err(|_| invalid(format!("bad linearity value {v:?}"))),
            ("affine-dim", Some(v)) => v
                .parse()
                .map(Assertion::AffineDim)
                .map_err(|_| invalid(format!("bad affine-dim value {v:?}"))),
            ("srg", Some(v)) => {
                let parts: Vec<&str> = v.split(',').map(str::trim).collect();
                if parts.len() != 4 {
                    return Err(invalid("srg assertion expects v,k,lambda,mu"));
                }
                let nums: Vec<u64> = parts
                    .iter()
                    .map(|p| p.parse().map_err(|_| invalid(format!("bad srg value {p:?}"))))
                    .collect::<Result<_>>()?;
                Ok(Assertion::Srg(SrgParams {
                    v: nums[0],
                    k: nums[1],
                    lambda: nums[2],
                    mu: nums[3],
                }))
            }
            _ => Err(invalid(format!(
                "unknown assertion {s:?} (expected sidon, maximal, separable, bent-gamma, \
                 kcover=K, linearity=L, affine-dim=D, srg=v,k,l,m)"
            ))),
        }
    }
}

impl Assertion {
    /// Evaluate against a finished report.
    pub fn check(&self, report: &VerificationReport) -> AssertionOutcome {
        let (passed, detail) = match self {
            Assertion::Sidon => (report.sidon, format!("sidon={}", report.sidon)),
            Assertion::Maximal => (
                report.maximal == Some(true),
                format!("maximal={:?}", report.maximal),
            ),
            Assertion::Separable => (report.separable, format!("separable={}", report.separable)),
            Assertion::BentGamma => (report.gamma_bent, format!("gamma_bent={}", report.gamma_bent)),
            Assertion::Kcover(k) => (
                report.kcover == Some(*k),
                format!("kcover={:?}", report.kcover),
            ),
            Assertion::Linearity(l) => (
                report.linearity == *l,
                format!("linearity={}", report.linearity),
            ),
            Assertion::AffineDim(d) => (
                report.affine_dim == Some(*d),
                format!("affine_dim={:?}", report.affine_dim),
            ),
            Assertion::Srg(p) => (
                report.srg.as_ref() == Some(p),
                match &report.srg {
                    Some(q) => format!("srg={q}"),
                    None => "srg=none".to_string(),
                },
            ),
        };
        AssertionOutcome {
            assertion: self.describe(),
            passed,
            detail,
        }
    }

    fn describe(&self) -> String {
        match self {
            Assertion::Sidon => "sidon".into(),
            Assertion::Maximal => "maximal".into(),
            Assertion::Separable => "separable".into(),
            Assertion::BentGamma => "bent-gamma".into(),
            Assertion::Kcover(k) => format!("kcover={k}"),
            Assertion::Linearity(l) => format!("linearity={l}"),
            Assertion::AffineDim(d) => format!("affine-dim={d}"),
            Assertion::Srg(p) => format!("srg={},{},{},{}", p.v, p.k, p.lambda, p.mu),
        }
    }
}
