//! Shared inputs for the solver benchmarks.

use domlab_core::{FamilySpec, Graph, Parameter};

/// A named graph together with the parameter benchmarked on it.
pub struct Case {
    pub name: &'static str,
    pub spec: &'static str,
    pub parameter: Parameter,
    pub k: Option<usize>,
}

impl Case {
    pub fn graph(&self) -> Graph {
        self.spec
            .parse::<FamilySpec>()
            .and_then(|s| s.build())
            .unwrap_or_else(|e| panic!("bench spec {}: {e}", self.spec))
    }
}

pub const CASES: &[Case] = &[
    Case {
        name: "gamma/K4^3",
        spec: "complete_product:4,4,4",
        parameter: Parameter::Gamma,
        k: None,
    },
    Case {
        name: "gamma_t/K4^3",
        spec: "complete_product:4,4,4",
        parameter: Parameter::GammaT,
        k: None,
    },
    Case {
        name: "gamma_pr/K4^3",
        spec: "complete_product:4,4,4",
        parameter: Parameter::GammaPr,
        k: None,
    },
    Case {
        name: "gamma_pr/pendant-pairs-product",
        spec: "direct(pendant_pairs(complete:1),pendant_pairs(complete:3))",
        parameter: Parameter::GammaPr,
        k: None,
    },
    Case {
        name: "gamma_pr/tree-product",
        spec: "direct(path:7,path:7)",
        parameter: Parameter::GammaPr,
        k: None,
    },
    Case {
        name: "upper_gamma/rook2xn:8",
        spec: "rook2xn:8",
        parameter: Parameter::UpperGamma,
        k: None,
    },
    Case {
        name: "upper_gamma/random-24",
        spec: "random_graph:24,0.3#5",
        parameter: Parameter::UpperGamma,
        k: None,
    },
    Case {
        name: "alpha/random-60",
        spec: "random_graph:60,0.1#3",
        parameter: Parameter::Alpha,
        k: None,
    },
    Case {
        name: "rho_3/random-tree-40",
        spec: "random_tree:40#11",
        parameter: Parameter::RhoK,
        k: Some(3),
    },
];
