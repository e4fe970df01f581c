//! Exhaustive sweeps: every ring in a family, every ideal passing a filter,
//! every registered checker, plus the global invariants.
//!
//! Instances may be evaluated on several workers; the report is always
//! assembled in family order, then ideal order, then theorem order.

use std::fmt;
use std::str::FromStr;

use indexmap::IndexMap;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{FiniteRing, Ideal};
use crate::spec::RingSpec;
use crate::theorems::{invariant_violations, run_all_on, Instance, Status, TheoremId, VerificationOutcome};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IdealFilter {
    All,
    #[default]
    Nonzero,
    /// Every ideal other than `R` itself, `{0}` included.
    Proper,
}

impl IdealFilter {
    pub fn accepts(self, ideal: &Ideal) -> bool {
        match self {
            IdealFilter::All => true,
            IdealFilter::Nonzero => !ideal.is_zero(),
            IdealFilter::Proper => !ideal.is_full(),
        }
    }
}

impl fmt::Display for IdealFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IdealFilter::All => "all",
            IdealFilter::Nonzero => "nonzero",
            IdealFilter::Proper => "proper",
        })
    }
}

impl FromStr for IdealFilter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(IdealFilter::All),
            "nonzero" => Ok(IdealFilter::Nonzero),
            "proper" => Ok(IdealFilter::Proper),
            other => Err(Error::parse(other, "expected all, nonzero or proper")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutcomeRecord {
    pub theorem: TheoremId,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl From<&VerificationOutcome> for OutcomeRecord {
    fn from(o: &VerificationOutcome) -> Self {
        OutcomeRecord {
            theorem: o.theorem,
            status: o.status,
            witness: o.witness.clone(),
            note: o.note.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceReport {
    pub ring: String,
    pub ideal: Vec<String>,
    pub outcomes: Vec<OutcomeRecord>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    pub verified: usize,
    pub vacuous: usize,
    pub counterexample: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantViolation {
    pub ring: String,
    pub ideal: Vec<String>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub family: Vec<String>,
    pub ideal_filter: IdealFilter,
    pub instances: Vec<InstanceReport>,
    pub totals: IndexMap<TheoremId, Totals>,
    pub invariant_violations: Vec<InvariantViolation>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generated_at: Option<u64>,
}

impl SweepReport {
    pub fn counterexamples(&self) -> usize {
        self.totals.values().map(|t| t.counterexample).sum()
    }

    /// `(ring, ideal, theorem)` of every counterexample in report order.
    pub fn counterexamples_list(&self) -> Vec<(String, Vec<String>, TheoremId)> {
        self.instances
            .iter()
            .flat_map(|i| {
                i.outcomes
                    .iter()
                    .filter(|o| o.status == Status::Counterexample)
                    .map(move |o| (i.ring.clone(), i.ideal.clone(), o.theorem))
            })
            .collect()
    }

    /// Zero counterexamples and zero invariant violations.
    pub fn success(&self) -> bool {
        self.counterexamples() == 0 && self.invariant_violations.is_empty()
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// One row per `(ring, ideal, theorem)`.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
        w.write_record(["ring", "ideal", "theorem", "status", "witness", "note"])?;
        for inst in &self.instances {
            let ideal = format!("{{{}}}", inst.ideal.join(","));
            for o in &inst.outcomes {
                w.write_record([
                    inst.ring.as_str(),
                    ideal.as_str(),
                    o.theorem.as_str(),
                    &o.status.to_string(),
                    o.witness.as_deref().unwrap_or(""),
                    o.note.as_deref().unwrap_or(""),
                ])?;
            }
        }
        let bytes = w.into_inner().map_err(|e| Error::Csv(e.into_error().into()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

/// Result of evaluating one `(R, I)`.
#[derive(Clone, Debug)]
pub struct InstanceResult {
    pub ring: String,
    pub ideal: Vec<String>,
    pub outcomes: Vec<VerificationOutcome>,
    pub violations: Vec<String>,
}

pub fn evaluate_instance(ring: &FiniteRing, ideal: &Ideal) -> Result<InstanceResult> {
    let inst = Instance::new(ring, ideal)?;
    Ok(InstanceResult {
        ring: ring.spec_name().to_string(),
        ideal: ideal.labels(ring),
        outcomes: run_all_on(&inst),
        violations: invariant_violations(&inst),
    })
}

/// Parses every spec first (aborting on the first failure), then evaluates
/// `(ring, ideal)` pairs on `workers` threads (`None` = all cores).
pub fn sweep(family: &[String], filter: IdealFilter, workers: Option<usize>) -> Result<SweepReport> {
    let results = sweep_results(family, filter, workers)?;
    Ok(assemble(family, filter, &results))
}

pub fn sweep_results(
    family: &[String],
    filter: IdealFilter,
    workers: Option<usize>,
) -> Result<Vec<InstanceResult>> {
    let rings = family
        .iter()
        .map(|s| RingSpec::parse(s)?.build())
        .collect::<Result<Vec<FiniteRing>>>()?;
    let jobs: Vec<(usize, Ideal)> = rings
        .iter()
        .enumerate()
        .flat_map(|(k, r)| {
            r.all_ideals()
                .into_iter()
                .filter(|i| filter.accepts(i))
                .map(move |i| (k, i))
        })
        .collect();
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = workers {
        builder = builder.num_threads(n.max(1));
    }
    let pool = builder.build().map_err(|e| Error::Pool(e.to_string()))?;
    pool.install(|| {
        jobs.par_iter()
            .map(|(k, ideal)| evaluate_instance(&rings[*k], ideal))
            .collect::<Result<Vec<_>>>()
    })
}

pub fn assemble(family: &[String], filter: IdealFilter, results: &[InstanceResult]) -> SweepReport {
    let mut totals: IndexMap<TheoremId, Totals> =
        TheoremId::ALL.iter().map(|&t| (t, Totals::default())).collect();
    let mut instances = Vec::with_capacity(results.len());
    let mut invariant_violations = Vec::new();
    for r in results {
        for o in &r.outcomes {
            let t = totals.get_mut(&o.theorem).expect("registered theorem");
            match o.status {
                Status::Verified => t.verified += 1,
                Status::Vacuous => t.vacuous += 1,
                Status::Counterexample => t.counterexample += 1,
            }
        }
        instances.push(InstanceReport {
            ring: r.ring.clone(),
            ideal: r.ideal.clone(),
            outcomes: r.outcomes.iter().map(OutcomeRecord::from).collect(),
        });
        invariant_violations.extend(r.violations.iter().map(|d| InvariantViolation {
            ring: r.ring.clone(),
            ideal: r.ideal.clone(),
            detail: d.clone(),
        }));
    }
    SweepReport {
        family: family.to_vec(),
        ideal_filter: filter,
        instances,
        totals,
        invariant_violations,
        generated_at: None,
    }
}
