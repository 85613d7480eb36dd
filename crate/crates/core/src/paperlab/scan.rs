//! Ratio scan: γ_pr(G×H) / (γ_pr(G)·γ_pr(H)) over families of pairs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{all_tree_codes, FamilySpec};
use crate::solvers::{solve_gamma_pr, Budget};

use super::report::Status;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RatioRow {
    pub left: String,
    pub right: String,
    pub gamma_pr_left: Option<usize>,
    pub gamma_pr_right: Option<usize>,
    pub gamma_pr_product: Option<usize>,
    pub ratio: Option<f64>,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RatioScan {
    pub rows: Vec<RatioRow>,
    /// Row indices of the smallest and largest ratio; first occurrence wins.
    pub argmin: Option<usize>,
    pub argmax: Option<usize>,
}

impl RatioScan {
    pub fn min(&self) -> Option<f64> {
        self.argmin.and_then(|i| self.rows[i].ratio)
    }

    pub fn max(&self) -> Option<f64> {
        self.argmax.and_then(|i| self.rows[i].ratio)
    }

    pub fn skipped(&self) -> usize {
        self.rows.iter().filter(|r| r.ratio.is_none()).count()
    }
}

/// Scans the pairs in the given order. Pairs outside the budget or with an
/// undefined γ_pr (isolated vertices) are kept as skipped rows.
pub fn ratio_scan(pairs: &[(FamilySpec, FamilySpec)], budget: &Budget) -> Result<RatioScan> {
    let mut rows = Vec::with_capacity(pairs.len());
    for (l, r) in pairs {
        let p = FamilySpec::Direct(Box::new(l.clone()), Box::new(r.clone()));
        let solve = |s: &FamilySpec| -> Result<Option<usize>> {
            match s.build().and_then(|g| solve_gamma_pr(&g, budget)) {
                Ok(c) => Ok(c.value()),
                Err(Error::Domain(_) | Error::Resource(_)) => Ok(None),
                Err(e) => Err(e),
            }
        };
        let (a, b) = (solve(l)?, solve(r)?);
        let c = if a.is_some() && b.is_some() {
            solve(&p)?
        } else {
            None
        };
        let ratio = match (a, b, c) {
            (Some(a), Some(b), Some(c)) => Some(c as f64 / (a * b) as f64),
            _ => None,
        };
        rows.push(RatioRow {
            left: l.to_string(),
            right: r.to_string(),
            gamma_pr_left: a,
            gamma_pr_right: b,
            gamma_pr_product: c,
            ratio,
            status: if ratio.is_some() {
                Status::Verified
            } else {
                Status::SkippedResource
            },
        });
    }
    let pick = |better: fn(f64, f64) -> bool| {
        let mut best: Option<(usize, f64)> = None;
        for (i, row) in rows.iter().enumerate() {
            if let Some(x) = row.ratio {
                if best.is_none_or(|(_, b)| better(x, b)) {
                    best = Some((i, x));
                }
            }
        }
        best.map(|(i, _)| i)
    };
    let argmin = pick(|x, b| x < b);
    let argmax = pick(|x, b| x > b);
    Ok(RatioScan {
        rows,
        argmin,
        argmax,
    })
}

/// Expands a scan pattern into pairs.
///
/// * `trees`: every unordered pair of non-isomorphic trees of orders `2..=max_n`.
/// * a bare family name taking one integer, e.g. `subdivided_star`: self-pairs for `1..=max_n`.
/// * a spec containing `{n}`, e.g. `lollipop(complete:{n}):2`: self-pairs for `1..=max_n`,
///   skipping values the family rejects.
pub fn scan_pairs(pattern: &str, max_n: usize) -> Result<Vec<(FamilySpec, FamilySpec)>> {
    let pattern = pattern.trim();
    if pattern.is_empty() {
        return Err(Error::domain("empty scan pattern"));
    }
    if pattern == "trees" {
        let trees: Vec<FamilySpec> = (2..=max_n)
            .flat_map(all_tree_codes)
            .map(FamilySpec::Prufer)
            .collect();
        let mut pairs = Vec::new();
        for i in 0..trees.len() {
            for j in i..trees.len() {
                pairs.push((trees[i].clone(), trees[j].clone()));
            }
        }
        return Ok(pairs);
    }
    let template = if pattern.contains("{n}") {
        pattern.to_string()
    } else if pattern
        .chars()
        .all(|c| c.is_ascii_alphanumeric() || c == '_')
    {
        format!("{pattern}:{{n}}")
    } else {
        return Err(Error::domain(format!(
            "scan pattern {pattern:?} needs a {{n}} placeholder"
        )));
    };
    let mut pairs = Vec::new();
    for n in 1..=max_n {
        let spec: FamilySpec = template.replace("{n}", &n.to_string()).parse()?;
        if spec.build().is_ok() {
            pairs.push((spec.clone(), spec));
        }
    }
    Ok(pairs)
}
