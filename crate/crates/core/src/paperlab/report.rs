use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::families::FamilySpec;
use crate::graph::VertexSet;
use crate::solvers::{
    is_dominating, is_independent, is_k_packing, is_minimal_dominating, is_paired_dominating,
    is_total_dominating, Certificate, Parameter,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Verified,
    Refuted,
    BoundsOnly,
    SkippedResource,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::Refuted => "refuted",
            Status::BoundsOnly => "bounds-only",
            Status::SkippedResource => "skipped-resource",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A reported number; integers stay integers in JSON.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Num {
    Int(i64),
    Real(f64),
}

impl From<usize> for Num {
    fn from(v: usize) -> Num {
        Num::Int(v as i64)
    }
}

impl From<f64> for Num {
    fn from(v: f64) -> Num {
        Num::Real(v)
    }
}

impl fmt::Display for Num {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Num::Int(v) => write!(f, "{v}"),
            Num::Real(v) => write!(f, "{v:.6}"),
        }
    }
}

/// What a witness set is claimed to be.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    Dominating,
    TotalDominating,
    PairedDominating,
    MinimalDominating,
    Independent,
    Packing,
}

impl WitnessKind {
    pub fn of(parameter: Parameter) -> WitnessKind {
        match parameter {
            Parameter::Gamma => WitnessKind::Dominating,
            Parameter::GammaT => WitnessKind::TotalDominating,
            Parameter::GammaPr => WitnessKind::PairedDominating,
            Parameter::UpperGamma => WitnessKind::MinimalDominating,
            Parameter::RhoK => WitnessKind::Packing,
            Parameter::Alpha => WitnessKind::Independent,
        }
    }
}

/// A vertex set on a graph named by its family spec, so a report can be
/// re-checked without the code that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub label: String,
    pub graph: String,
    pub kind: WitnessKind,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<usize>,
    pub set: String,
}

impl Witness {
    pub fn new(label: &str, graph: &FamilySpec, kind: WitnessKind, set: &VertexSet) -> Witness {
        Witness {
            label: label.to_string(),
            graph: graph.to_string(),
            kind,
            k: None,
            set: set.to_string(),
        }
    }

    pub fn from_certificate(label: &str, graph: &FamilySpec, c: &Certificate) -> Witness {
        Witness {
            k: c.k,
            ..Witness::new(label, graph, WitnessKind::of(c.parameter), &c.witness)
        }
    }

    /// Rebuilds the graph and checks the set against its kind.
    pub fn revalidate(&self) -> Result<bool> {
        let g: FamilySpec = self.graph.parse()?;
        let g = g.build()?;
        let idx = self
            .set
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| crate::Error::Domain(format!("bad vertex {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let s = VertexSet::from_indices(&g, idx)?;
        match self.kind {
            WitnessKind::Dominating => is_dominating(&g, &s),
            WitnessKind::TotalDominating => is_total_dominating(&g, &s),
            WitnessKind::PairedDominating => is_paired_dominating(&g, &s),
            WitnessKind::MinimalDominating => is_minimal_dominating(&g, &s),
            WitnessKind::Independent => is_independent(&g, &s),
            WitnessKind::Packing => is_k_packing(&g, &s, self.k.unwrap_or(1)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub claim_id: String,
    pub status: Status,
    pub values: BTreeMap<String, Num>,
    pub witnesses: Vec<Witness>,
    pub runtime_ms: u64,
    pub notes: String,
}

impl ClaimReport {
    pub fn new(claim_id: &str) -> ClaimReport {
        ClaimReport {
            claim_id: claim_id.to_string(),
            status: Status::Verified,
            values: BTreeMap::new(),
            witnesses: Vec::new(),
            runtime_ms: 0,
            notes: String::new(),
        }
    }

    pub fn value(&mut self, key: &str, v: impl Into<Num>) -> &mut Self {
        self.values.insert(key.to_string(), v.into());
        self
    }

    pub fn witness(&mut self, w: Witness) -> &mut Self {
        self.witnesses.push(w);
        self
    }

    pub fn note(&mut self, text: &str) -> &mut Self {
        if !self.notes.is_empty() {
            self.notes.push(' ');
        }
        self.notes.push_str(text);
        self
    }

    /// Lowers the status: refuted beats skipped-resource beats bounds-only
    /// beats verified.
    pub fn demote(&mut self, status: Status) -> &mut Self {
        let rank = |s: Status| match s {
            Status::Verified => 0,
            Status::BoundsOnly => 1,
            Status::SkippedResource => 2,
            Status::Refuted => 3,
        };
        if rank(status) > rank(self.status) {
            self.status = status;
        }
        self
    }

    pub fn get(&self, key: &str) -> Option<Num> {
        self.values.get(key).copied()
    }

    /// Every embedded witness re-checks.
    pub fn revalidate(&self) -> Result<bool> {
        for w in &self.witnesses {
            if !w.revalidate()? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// One-line summary: id, status, then `key=value` pairs.
    pub fn summary_line(&self) -> String {
        let mut line = format!("{} {}", self.claim_id, self.status);
        for (k, v) in &self.values {
            line.push_str(&format!(" {k}={v}"));
        }
        line
    }
}
