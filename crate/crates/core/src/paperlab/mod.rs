//! Named claim checks and the ratio scanner.
//!
//! [`CLAIM_IDS`] fixes both the set of claim identifiers and the order in
//! which [`run_suite`] reports them.

mod claims;
mod report;
mod scan;

use std::time::Instant;

use crate::error::{Error, Result};
use crate::families::FamilySpec;

pub use claims::{
    check_half_inequality_on, check_half_inequality_trees, check_lollipop_monotonicity,
    check_mekis, check_mekis_additive, check_paired_complete_products, check_pendant_lemma,
    check_pendant_pairs, check_prod_pops_witness, check_rook_upper, check_tree_identity,
    check_tree_identity_on, prod_pops_bound, sample_trees, Config,
};
pub use report::{ClaimReport, Num, Status, Witness, WitnessKind};
pub use scan::{ratio_scan, scan_pairs, RatioRow, RatioScan};

pub const CLAIM_IDS: &[&str] = &[
    "lemma-mekis",
    "lemma-mekis-5-4-4",
    "mekis-additive",
    "lemma-complete-products-odd",
    "lemma-complete-products-odd-7",
    "lemma-complete-products-even",
    "pendant-product-p4-p4",
    "pendant-product-c5-k3",
    "pendant-product-k2-k2",
    "lollipop-monotone-k6-2",
    "lollipop-monotone-c5-4",
    "lollipop-monotone-k2-0",
    "lollipop-monotone-cayleypop-2-3",
    "prod-pops-witness-0-0",
    "prod-pops-witness-0-1",
    "prod-pops-witness-1-0",
    "prod-pops-witness-1-1",
    "tree-identity",
    "tree-identity-p7",
    "tree-identity-star6",
    "tree-half-inequality",
    "tree-half-p4-p4",
    "tree-half-k2-k2",
    "pendant-pairs-example",
    "pendant-pairs-k1-k1",
    "pendant-pairs-p4-c5",
    "rook-upper-n2",
    "rook-upper-n3",
    "rook-upper-n4",
    "rook-upper-n5",
    "rook-upper-n6",
    "rook-upper-n7",
    "rook-upper-n8",
    "rook-upper-n9",
    "rook-upper-n10",
    "ratio-scan-subdivided-stars",
    "ratio-scan-trees-6",
    "ratio-scan-k2",
];

fn spec(s: &str) -> FamilySpec {
    s.parse().expect("built-in spec parses")
}

fn scan_claim(id: &str, pairs: Vec<(FamilySpec, FamilySpec)>, cfg: &Config) -> Result<ClaimReport> {
    let scan = ratio_scan(&pairs, &cfg.budget)?;
    let mut rep = ClaimReport::new(id);
    rep.value("pairs", scan.rows.len())
        .value("skipped", scan.skipped());
    if scan.skipped() > 0 {
        rep.demote(Status::SkippedResource);
    }
    for (name, idx) in [("min", scan.argmin), ("max", scan.argmax)] {
        if let Some(i) = idx {
            let row = &scan.rows[i];
            rep.value(&format!("{name}_ratio"), row.ratio.expect("ratio present"))
                .note(&format!("{name}: {} x {}.", row.left, row.right));
        }
    }
    let ratios: Vec<f64> = scan.rows.iter().filter_map(|r| r.ratio).collect();
    let ok = match id {
        // tree pairs obey the half bound; subdivided stars stay above it and decrease
        "ratio-scan-subdivided-stars" => {
            ratios.iter().all(|&r| r > 0.5) && ratios.windows(2).all(|w| w[1] <= w[0])
        }
        "ratio-scan-k2" => ratios == [1.0],
        _ => ratios.iter().all(|&r| r >= 0.5),
    };
    if !ok {
        rep.demote(Status::Refuted);
    }
    Ok(rep)
}

/// Runs one claim by id. Unknown ids are a domain error.
pub fn run_claim(id: &str, cfg: &Config) -> Result<ClaimReport> {
    let mut rep = match id {
        "lemma-mekis" => check_mekis(3, &[4, 4, 4], cfg),
        "lemma-mekis-5-4-4" => check_mekis(3, &[5, 4, 4], cfg),
        "mekis-additive" => check_mekis_additive(100, 8, cfg),
        "lemma-complete-products-odd" => check_paired_complete_products(3, &[4, 4, 4], cfg),
        "lemma-complete-products-odd-7" => check_paired_complete_products(3, &[7, 7, 7], cfg),
        "lemma-complete-products-even" => check_paired_complete_products(4, &[5, 5, 5, 5], cfg),
        "pendant-product-p4-p4" => check_pendant_lemma(&spec("path:4"), &spec("path:4"), 3, cfg),
        "pendant-product-c5-k3" => {
            check_pendant_lemma(&spec("cycle:5"), &spec("complete:3"), 0, cfg)
        }
        "pendant-product-k2-k2" => {
            check_pendant_lemma(&spec("complete:2"), &spec("complete:2"), 0, cfg)
        }
        "lollipop-monotone-k6-2" => check_lollipop_monotonicity(&spec("complete:6"), 2, 0, cfg),
        "lollipop-monotone-c5-4" => check_lollipop_monotonicity(&spec("cycle:5"), 4, 0, cfg),
        "lollipop-monotone-k2-0" => check_lollipop_monotonicity(&spec("complete:2"), 0, 0, cfg),
        "lollipop-monotone-cayleypop-2-3" => {
            check_lollipop_monotonicity(&spec("cayleypop[2,3]:0"), 3, 0, cfg)
        }
        "prod-pops-witness-0-0" => check_prod_pops_witness(3, &[4, 4, 4], 0, 0, cfg),
        "prod-pops-witness-0-1" => check_prod_pops_witness(3, &[4, 4, 4], 0, 1, cfg),
        "prod-pops-witness-1-0" => check_prod_pops_witness(3, &[4, 4, 4], 1, 0, cfg),
        "prod-pops-witness-1-1" => check_prod_pops_witness(3, &[4, 4, 4], 1, 1, cfg),
        "tree-identity" => check_tree_identity(200, 12, cfg),
        "tree-identity-p7" => check_tree_identity_on(&[spec("path:7")], cfg),
        "tree-identity-star6" => check_tree_identity_on(&[spec("star:6")], cfg),
        "tree-half-inequality" => check_half_inequality_trees(50, 7, cfg),
        "tree-half-p4-p4" => check_half_inequality_on(&[(spec("path:4"), spec("path:4"))], cfg),
        "tree-half-k2-k2" => {
            check_half_inequality_on(&[(spec("complete:2"), spec("complete:2"))], cfg)
        }
        "pendant-pairs-example" => {
            check_pendant_pairs(&spec("complete:1"), &spec("complete:3"), cfg)
        }
        "pendant-pairs-k1-k1" => check_pendant_pairs(&spec("complete:1"), &spec("complete:1"), cfg),
        "pendant-pairs-p4-c5" => check_pendant_pairs(&spec("path:4"), &spec("cycle:5"), cfg),
        "ratio-scan-subdivided-stars" => scan_claim(id, scan_pairs("subdivided_star", 3)?, cfg),
        "ratio-scan-trees-6" => scan_claim(id, scan_pairs("trees", 6)?, cfg),
        "ratio-scan-k2" => scan_claim(id, vec![(spec("complete:2"), spec("complete:2"))], cfg),
        other => match other
            .strip_prefix("rook-upper-n")
            .and_then(|n| n.parse().ok())
        {
            Some(n) if CLAIM_IDS.contains(&other) => check_rook_upper(n, n == 2, cfg),
            _ => return Err(Error::Domain(format!("unknown claim id {other:?}"))),
        },
    }?;
    rep.claim_id = id.to_string();
    Ok(rep)
}

/// Runs the given claims in canonical order, duplicates removed.
/// `runtime_ms` is filled only when `timings` is set, so that reports of
/// repeated runs compare equal byte for byte.
pub fn run_suite(ids: &[&str], cfg: &Config, timings: bool) -> Result<Vec<ClaimReport>> {
    if let Some(bad) = ids.iter().find(|id| !CLAIM_IDS.contains(id)) {
        return Err(Error::Domain(format!("unknown claim id {bad:?}")));
    }
    CLAIM_IDS
        .iter()
        .filter(|id| ids.contains(id))
        .map(|id| {
            let start = Instant::now();
            let mut rep = run_claim(id, cfg)?;
            if timings {
                rep.runtime_ms = start.elapsed().as_millis() as u64;
            }
            Ok(rep)
        })
        .collect()
}
