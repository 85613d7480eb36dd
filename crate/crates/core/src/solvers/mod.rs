//! Exact solvers for the domination-chain parameters, the predicate
//! checkers their certificates are validated with, and explicit witness
//! constructions.
//!
//! Every solver is deterministic: ties are broken by lowest vertex index,
//! and the only source of non-exact results is an exhausted [`Budget`].

mod constructions;
mod minimum;
mod packing;
mod predicates;
mod upper;

use std::fmt;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};

pub use constructions::{
    build_diagonal_pds, build_pendant_product_ds, diagonal_matching,
    minimal_total_dominating_sizes, pair_dominating_set, pair_pendant_product, PairedWitness,
    MINIMAL_TOTAL_CAP,
};
pub use minimum::{solve_gamma, solve_gamma_pr, solve_gamma_t, solve_minimum};
pub use packing::{maximum_independent_set, solve_alpha, solve_rho_k};
pub use predicates::{
    is_dominating, is_independent, is_k_packing, is_minimal_dominating, is_paired_dominating,
    is_total_dominating, private_neighbors,
};
pub use upper::{solve_upper_gamma, upper_gamma_exhaustive};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parameter {
    Gamma,
    GammaT,
    GammaPr,
    UpperGamma,
    RhoK,
    Alpha,
}

impl Parameter {
    pub const ALL: [Parameter; 6] = [
        Parameter::Gamma,
        Parameter::GammaT,
        Parameter::GammaPr,
        Parameter::UpperGamma,
        Parameter::RhoK,
        Parameter::Alpha,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Parameter::Gamma => "gamma",
            Parameter::GammaT => "gamma_t",
            Parameter::GammaPr => "gamma_pr",
            Parameter::UpperGamma => "upper_gamma",
            Parameter::RhoK => "rho_k",
            Parameter::Alpha => "alpha",
        }
    }

    /// Minimum-side parameters have witnesses attaining the upper end.
    pub fn is_minimum(self) -> bool {
        matches!(
            self,
            Parameter::Gamma | Parameter::GammaT | Parameter::GammaPr
        )
    }
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Parameter {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Parameter> {
        Parameter::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| crate::Error::Domain(format!("unknown parameter {s:?}")))
    }
}

/// Solves any parameter. `k` is the packing radius and is required for
/// `rho_k` only.
pub fn solve(
    g: &Graph,
    parameter: Parameter,
    k: Option<usize>,
    budget: &Budget,
) -> crate::Result<Certificate> {
    match (parameter, k) {
        (Parameter::RhoK, Some(k)) => solve_rho_k(g, k, budget),
        (Parameter::RhoK, None) => Err(crate::Error::Domain("rho_k needs a radius k".into())),
        (p, Some(_)) => Err(crate::Error::Domain(format!("{p} takes no radius"))),
        (Parameter::UpperGamma, None) => solve_upper_gamma(g, budget),
        (Parameter::Alpha, None) => solve_alpha(g, budget),
        (p, None) => solve_minimum(g, p, budget),
    }
}

/// Search limits. Exceeding either one turns the result into an interval.
///
/// Node limits are reproducible; time limits are not, so harness code
/// that must be deterministic only sets `max_nodes`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub time_limit: Option<Duration>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_nodes: Some(200_000_000),
            time_limit: None,
        }
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget {
            max_nodes: None,
            time_limit: None,
        }
    }

    pub fn nodes(max_nodes: u64) -> Self {
        Budget {
            max_nodes: Some(max_nodes),
            time_limit: None,
        }
    }

    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.time_limit = Some(limit);
        self
    }

    pub(crate) fn meter(&self) -> Meter {
        Meter {
            nodes: 0,
            max_nodes: self.max_nodes.unwrap_or(u64::MAX),
            deadline: self.time_limit.map(|d| Instant::now() + d),
            exhausted: false,
        }
    }
}

pub(crate) struct Meter {
    nodes: u64,
    max_nodes: u64,
    deadline: Option<Instant>,
    exhausted: bool,
}

impl Meter {
    /// Counts one search node; false once the budget is spent.
    #[inline]
    pub(crate) fn tick(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            self.exhausted = true;
        } else if self.nodes & 0x3ff == 0 {
            if let Some(d) = self.deadline {
                self.exhausted = Instant::now() >= d;
            }
        }
        !self.exhausted
    }

    pub(crate) fn exhausted(&self) -> bool {
        self.exhausted
    }

    pub(crate) fn nodes(&self) -> u64 {
        self.nodes
    }
}

/// A parameter value with a witness set and an exactness flag.
///
/// For minimum-side parameters the witness has size `hi`; for maximum-side
/// parameters it has size `lo`. Exact certificates have `lo == hi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub parameter: Parameter,
    pub lo: usize,
    pub hi: usize,
    pub witness: VertexSet,
    pub exact: bool,
    /// Packing radius for `rho_k`.
    pub k: Option<usize>,
    pub nodes: u64,
}

impl Certificate {
    pub(crate) fn exact(parameter: Parameter, witness: VertexSet, nodes: u64) -> Self {
        let v = witness.len();
        Certificate {
            parameter,
            lo: v,
            hi: v,
            witness,
            exact: true,
            k: None,
            nodes,
        }
    }

    pub(crate) fn bounds(
        parameter: Parameter,
        lo: usize,
        hi: usize,
        witness: VertexSet,
        nodes: u64,
    ) -> Self {
        let exact = lo == hi;
        Certificate {
            parameter,
            lo,
            hi,
            witness,
            exact,
            k: None,
            nodes,
        }
    }

    /// The value when exact.
    pub fn value(&self) -> Option<usize> {
        self.exact.then_some(self.lo)
    }

    /// Re-checks the witness against the parameter's predicate.
    pub fn witness_is_valid(&self, g: &Graph) -> bool {
        let w = &self.witness;
        let ok = match self.parameter {
            Parameter::Gamma => is_dominating(g, w),
            Parameter::GammaT => is_total_dominating(g, w),
            Parameter::GammaPr => is_paired_dominating(g, w),
            Parameter::UpperGamma => is_minimal_dominating(g, w),
            Parameter::RhoK => is_k_packing(g, w, self.k.unwrap_or(1)),
            Parameter::Alpha => is_independent(g, w),
        };
        let size = if self.parameter.is_minimum() {
            self.hi
        } else {
            self.lo
        };
        ok.unwrap_or(false) && w.len() == size && self.lo <= self.hi
    }

    pub fn record(&self) -> CertificateRecord {
        CertificateRecord {
            parameter: self.parameter,
            k: self.k,
            value: self.value(),
            lo: self.lo,
            hi: self.hi,
            exact: self.exact,
            witness: self.witness.to_string(),
            nodes: self.nodes,
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.k {
            Some(k) => write!(f, "{}[k={k}] ", self.parameter)?,
            None => write!(f, "{} ", self.parameter)?,
        }
        if self.exact {
            write!(f, "= {} (exact)", self.lo)
        } else {
            write!(f, "in [{}, {}] (bounds only)", self.lo, self.hi)
        }
    }
}

/// Serializable form of a [`Certificate`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub parameter: Parameter,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<usize>,
    pub value: Option<usize>,
    pub lo: usize,
    pub hi: usize,
    pub exact: bool,
    pub witness: String,
    pub nodes: u64,
}
