//! Executable claims: each [`PropertyId`] is checked exhaustively over the
//! lattice of a generated or loaded space.

mod generator;
mod properties;
mod search;
mod shrink;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::grid::{FuzzyPoint, FuzzySet};
use crate::io::LoadedSpace;
use crate::primal_ops::PrimalSpace;
use crate::structures::FuzzyPrimal;

pub use generator::{GeneratorConfig, PrimalRecipe, SpaceGenerator, SpaceRecipe};
pub use properties::{recheck, Context};
pub use search::{search_counterexample, Counterexample, Finding};

include!(concat!(env!("OUT_DIR"), "/property_ids.rs"));

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimKind {
    /// Expected to hold on every space.
    Asserted,
    /// A printed statement that the oracles refute; reported, never fatal.
    Erratum,
    /// An open question; failures are findings.
    Exploratory,
}

impl fmt::Display for PropertyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PropertyId {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        PropertyId::ALL
            .iter()
            .copied()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| format!("unknown property id {s:?}"))
    }
}

impl Serialize for PropertyId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// Resolves a comma-separated list. Each entry names an id exactly or is a
/// prefix followed by `_` (so `THM_4_9` selects `THM_4_9_i` ... `THM_4_9_v`).
pub fn select_ids(spec: &str) -> Result<Vec<PropertyId>, String> {
    let mut out = Vec::new();
    for entry in spec.split(',').map(str::trim).filter(|e| !e.is_empty()) {
        let matched: Vec<PropertyId> = PropertyId::ALL
            .iter()
            .copied()
            .filter(|id| {
                let name = id.as_str();
                name == entry
                    || name
                        .strip_prefix(entry)
                        .is_some_and(|rest| rest.starts_with('_'))
            })
            .collect();
        if matched.is_empty() {
            return Err(format!("no property matches {entry:?}"));
        }
        for id in matched {
            if !out.contains(&id) {
                out.push(id);
            }
        }
    }
    out.sort();
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    RefutedPaperClaim,
    CounterexampleFound,
    NotApplicable,
    Incomplete,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::RefutedPaperClaim => "refuted-paper-claim",
            Verdict::CounterexampleFound => "counterexample-found",
            Verdict::NotApplicable => "not-applicable",
            Verdict::Incomplete => "incomplete",
        }
    }

    /// Whether the verdict reports a violated instance.
    pub fn is_violation(&self) -> bool {
        matches!(
            self,
            Verdict::Fail | Verdict::RefutedPaperClaim | Verdict::CounterexampleFound
        )
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The concrete instance on which a property failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    #[serde(serialize_with = "numerator_lists")]
    pub sets: Vec<FuzzySet>,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "point_pair")]
    pub point: Option<FuzzyPoint>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

fn numerator_lists<S: Serializer>(sets: &[FuzzySet], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(sets.iter().map(|x| x.numerators()))
}

fn point_pair<S: Serializer>(p: &Option<FuzzyPoint>, s: S) -> Result<S::Ok, S::Error> {
    match p {
        Some(p) => (p.support(), p.t()).serialize(s),
        None => s.serialize_none(),
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for s in &self.sets {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            f.write_str("[")?;
            for (i, v) in s.numerators().iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("]")?;
        }
        if let Some(p) = &self.point {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "point y{}_{}", p.support(), p.t())?;
        }
        if let Some(note) = &self.note {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "({note})")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerdictReport {
    pub property: PropertyId,
    pub space_digest: String,
    pub n: usize,
    pub k: u32,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
}

/// Caps on the work done per space.
#[derive(Debug, Clone, Copy)]
pub struct Limits {
    /// Largest lattice (`(k+1)^n`) a space may have.
    pub max_lattice: usize,
    /// Largest number of instances (tuples of sets) scanned per property.
    pub max_instances: u128,
    pub record_runtime: bool,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_lattice: 4096,
            max_instances: 1 << 21,
            record_runtime: false,
        }
    }
}

/// A space to check together with a second primal for the two-primal claims.
#[derive(Debug, Clone)]
pub struct Subject {
    pub space: PrimalSpace,
    pub second: FuzzyPrimal,
}

impl Subject {
    pub fn new(space: PrimalSpace, second: FuzzyPrimal) -> Self {
        Subject { space, second }
    }

    /// A loaded document; without a second primal the trivial one is used.
    pub fn from_loaded(loaded: &LoadedSpace) -> Self {
        let second = loaded
            .second
            .clone()
            .unwrap_or_else(|| FuzzyPrimal::trivial(loaded.space.lattice()));
        Subject::new(loaded.space.clone(), second)
    }

    pub fn digest(&self) -> String {
        LoadedSpace::new(self.space.clone(), Some(self.second.clone())).digest()
    }
}

/// Evaluates `ids` on one subject, in id order.
pub fn run_subject(subject: &Subject, ids: &[PropertyId], limits: &Limits) -> Vec<VerdictReport> {
    let space = subject.space.space();
    let digest = subject.digest();
    let incomplete = |id: PropertyId| VerdictReport {
        property: id,
        space_digest: digest.clone(),
        n: space.n(),
        k: space.k(),
        verdict: Verdict::Incomplete,
        witness: None,
        runtime_ms: None,
    };
    if space.check_budget(limits.max_lattice).is_err() {
        return ids.iter().map(|&id| incomplete(id)).collect();
    }
    let ctx = Context::new(subject.clone());
    ids.iter()
        .map(|&id| {
            let start = Instant::now();
            let (verdict, witness) = properties::evaluate(id, &ctx, limits);
            VerdictReport {
                property: id,
                space_digest: digest.clone(),
                n: space.n(),
                k: space.k(),
                verdict,
                witness,
                runtime_ms: limits
                    .record_runtime
                    .then(|| start.elapsed().as_millis() as u64),
            }
        })
        .collect()
}

/// Runs `ids` on the first `spaces` recipes of `generator`. Spaces are
/// checked in parallel; the result is sorted by (digest, id) so it does not
/// depend on scheduling.
pub fn run_suite(
    generator: SpaceGenerator,
    ids: &[PropertyId],
    spaces: usize,
    limits: &Limits,
) -> Vec<VerdictReport> {
    let recipes: Vec<SpaceRecipe> = generator.take(spaces).collect();
    let mut reports: Vec<VerdictReport> = recipes
        .par_iter()
        .flat_map_iter(|recipe| match recipe.build(limits.max_lattice) {
            Ok(subject) => run_subject(&subject, ids, limits),
            Err(_) => ids
                .iter()
                .map(|&id| VerdictReport {
                    property: id,
                    space_digest: String::new(),
                    n: recipe.n,
                    k: recipe.k,
                    verdict: Verdict::Incomplete,
                    witness: None,
                    runtime_ms: None,
                })
                .collect(),
        })
        .collect();
    sort_reports(&mut reports);
    reports
}

pub fn sort_reports(reports: &mut [VerdictReport]) {
    reports.sort_by(|a, b| {
        (&a.space_digest, a.property.as_str(), a.n, a.k).cmp(&(
            &b.space_digest,
            b.property.as_str(),
            b.n,
            b.k,
        ))
    });
}

/// Whether every asserted property passed or was inapplicable.
pub fn suite_passes(reports: &[VerdictReport]) -> bool {
    !reports.iter().any(|r| r.verdict == Verdict::Fail)
}
