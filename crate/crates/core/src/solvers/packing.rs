//! Maximum independent sets, and k-packings as independent sets of the
//! distance-k conflict graph.

use crate::bitset::Bits;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

use super::{Budget, Certificate, Meter, Parameter};

struct Mis<'a> {
    g: &'a Graph,
    best: Bits,
    meter: Meter,
}

impl Mis<'_> {
    /// Number of cliques in a greedy cover of `p`; bounds α(G[p]).
    fn clique_cover(&self, p: &Bits) -> usize {
        let mut cliques: Vec<Bits> = Vec::new();
        for v in p.iter() {
            let row = self.g.nbrs(v);
            match cliques.iter_mut().find(|c| c.is_subset(row)) {
                Some(c) => c.insert(v),
                None => cliques.push(Bits::from_indices(p.width(), [v])),
            }
        }
        cliques.len()
    }

    fn dfs(&mut self, s: &Bits, p: &Bits) {
        if !self.meter.tick() {
            return;
        }
        let mut s = s.clone();
        let mut p = p.clone();
        // vertices of degree 0 or 1 in G[p] belong to some maximum solution
        loop {
            let low = p.iter().find(|&v| self.g.nbrs(v).intersection_len(&p) <= 1);
            let Some(v) = low else { break };
            s.insert(v);
            p.remove(v);
            p.difference_with(self.g.nbrs(v));
        }
        if p.is_empty() {
            if s.len() > self.best.len() {
                self.best = s;
            }
            return;
        }
        if s.len() + self.clique_cover(&p) <= self.best.len() {
            return;
        }
        let v = p
            .iter()
            .max_by_key(|&v| (self.g.nbrs(v).intersection_len(&p), std::cmp::Reverse(v)))
            .expect("p is non-empty");
        let mut with = s.clone();
        with.insert(v);
        let mut rest = p.clone();
        rest.remove(v);
        rest.difference_with(self.g.nbrs(v));
        self.dfs(&with, &rest);
        if self.meter.exhausted() {
            return;
        }
        p.remove(v);
        self.dfs(&s, &p);
    }
}

/// Independent set chosen by repeatedly taking a minimum-degree vertex.
fn greedy(g: &Graph) -> Bits {
    let n = g.order();
    let mut s = Bits::new(n);
    let mut p = Bits::full(n);
    while let Some(v) = p
        .iter()
        .min_by_key(|&v| (g.nbrs(v).intersection_len(&p), v))
    {
        s.insert(v);
        p.remove(v);
        p.difference_with(g.nbrs(v));
    }
    s
}

fn run(g: &Graph, budget: &Budget) -> (Bits, usize, u64, bool) {
    let mut mis = Mis {
        g,
        best: greedy(g),
        meter: budget.meter(),
    };
    let root_bound = mis.clique_cover(&Bits::full(g.order()));
    mis.dfs(&Bits::new(g.order()), &Bits::full(g.order()));
    let exact = !mis.meter.exhausted();
    let nodes = mis.meter.nodes();
    (mis.best, root_bound, nodes, exact)
}

fn certificate(home: &Graph, g: &Graph, parameter: Parameter, budget: &Budget) -> Certificate {
    let (best, bound, nodes, exact) = run(g, budget);
    let witness = VertexSet::from_bits(home, best);
    if exact {
        Certificate::exact(parameter, witness, nodes)
    } else {
        let lo = witness.len();
        Certificate::bounds(parameter, lo, bound.max(lo), witness, nodes)
    }
}

/// Independence number α(G).
pub fn solve_alpha(g: &Graph, budget: &Budget) -> Result<Certificate> {
    Ok(certificate(g, g, Parameter::Alpha, budget))
}

/// Largest k-packing: pairwise distances all exceed `k` (k ≥ 1).
pub fn solve_rho_k(g: &Graph, k: usize, budget: &Budget) -> Result<Certificate> {
    if k == 0 {
        return Err(Error::domain("packing radius k must be at least 1"));
    }
    let conflict = g.distance_power_conflict_graph(k)?;
    let mut c = certificate(g, &conflict, Parameter::RhoK, budget);
    c.k = Some(k);
    Ok(c)
}

/// A maximum independent set, searched without a budget.
pub fn maximum_independent_set(g: &Graph) -> VertexSet {
    let (best, _, _, _) = run(g, &Budget::unlimited());
    VertexSet::from_bits(g, best)
}
