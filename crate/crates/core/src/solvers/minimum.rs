//! Iterative deepening branch-and-bound for γ, γ_t and γ_pr.
//!
//! Each round asks whether `k` picks suffice. A pick is a vertex (γ, γ_t)
//! or an edge of the induced matching (γ_pr, so sizes stay even and the
//! final set carries its own perfect matching). The search always branches
//! on an uncovered vertex with the fewest remaining ways to be covered;
//! once all picks covering that vertex through some candidate have been
//! tried, the candidate is excluded for the remaining siblings.
//!
//! Lower bound per node: uncovered vertices that are pairwise far apart
//! (distance ≥ 3 for single picks, ≥ 4 for edge picks) need distinct picks.

use crate::bitset::Bits;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

use super::{Budget, Certificate, Meter, Parameter};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Mode {
    Dominating,
    Total,
    Paired,
}

struct Search<'a> {
    g: &'a Graph,
    mode: Mode,
    /// What a pick of `w` covers; also the candidates covering `u` (symmetric).
    reach: Vec<Bits>,
    ball: Vec<Bits>,
    pack_order: Vec<usize>,
    max_cover: usize,
    meter: Meter,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, mode: Mode, budget: &Budget) -> Self {
        let reach = match mode {
            Mode::Total => g.rows().to_vec(),
            Mode::Dominating | Mode::Paired => g.closed_rows(),
        };
        let ball = g.balls(if mode == Mode::Paired { 3 } else { 2 });
        let mut pack_order: Vec<usize> = (0..g.order()).collect();
        pack_order.sort_by_key(|&v| (ball[v].len(), v));
        let max_cover = match mode {
            Mode::Paired => g
                .edges()
                .map(|(a, b)| reach[a].union(&reach[b]).len())
                .max()
                .unwrap_or(1),
            _ => reach.iter().map(Bits::len).max().unwrap_or(1),
        }
        .max(1);
        Search {
            g,
            mode,
            reach,
            ball,
            pack_order,
            max_cover,
            meter: budget.meter(),
        }
    }

    fn lower_bound(&self, covered: &Bits) -> usize {
        let mut pool = covered.complement();
        let counting = pool.len().div_ceil(self.max_cover);
        let mut packed = 0;
        for &u in &self.pack_order {
            if pool.contains(u) {
                packed += 1;
                pool.difference_with(&self.ball[u]);
            }
        }
        counting.max(packed)
    }

    fn pick_size(&self) -> usize {
        if self.mode == Mode::Paired {
            2
        } else {
            1
        }
    }

    /// Depth-first search for a completion with at most `remaining` picks.
    fn dfs(&mut self, s: &Bits, covered: &Bits, excluded: &Bits, remaining: usize) -> Option<Bits> {
        if !self.meter.tick() {
            return None;
        }
        if covered.is_full() {
            return Some(s.clone());
        }
        if remaining == 0 || self.lower_bound(covered) > remaining {
            return None;
        }
        let mut branch: Option<(usize, Bits)> = None;
        for u in covered.complement().iter() {
            let avail = self.reach[u].difference(excluded);
            let count = avail.len();
            if count == 0 {
                return None;
            }
            if branch.as_ref().is_none_or(|(c, _)| count < *c) {
                branch = Some((count, avail));
            }
        }
        let (_, avail) = branch.expect("some vertex is uncovered");
        let mut excl = excluded.clone();
        for w in avail.iter() {
            match self.mode {
                Mode::Dominating | Mode::Total => {
                    let mut s2 = s.clone();
                    s2.insert(w);
                    let c2 = covered.union(&self.reach[w]);
                    if let Some(sol) = self.dfs(&s2, &c2, &excl, remaining - 1) {
                        return Some(sol);
                    }
                }
                Mode::Paired => {
                    let partners = self.g.nbrs(w).difference(s).difference(&excl);
                    for x in partners.iter() {
                        let mut s2 = s.clone();
                        s2.insert(w);
                        s2.insert(x);
                        let mut c2 = covered.union(&self.reach[w]);
                        c2.union_with(&self.reach[x]);
                        if let Some(sol) = self.dfs(&s2, &c2, &excl, remaining - 1) {
                            return Some(sol);
                        }
                        if self.meter.exhausted() {
                            return None;
                        }
                    }
                }
            }
            if self.meter.exhausted() {
                return None;
            }
            excl.insert(w);
        }
        None
    }

    /// Greedy cover: repeatedly take the pick covering the most uncovered vertices.
    fn greedy(&self) -> Bits {
        let n = self.g.order();
        let mut s = Bits::new(n);
        let mut covered = Bits::new(n);
        while !covered.is_full() {
            let mut best: Option<(usize, usize, usize)> = None;
            match self.mode {
                Mode::Dominating | Mode::Total => {
                    for w in 0..n {
                        let gain = self.reach[w].difference_len(&covered);
                        if best.is_none_or(|(b, _, _)| gain > b) {
                            best = Some((gain, w, w));
                        }
                    }
                }
                Mode::Paired => {
                    for (a, b) in self.g.edges() {
                        if s.contains(a) || s.contains(b) {
                            continue;
                        }
                        let gain = self.reach[a].union(&self.reach[b]).difference_len(&covered);
                        if best.is_none_or(|(g, _, _)| gain > g) {
                            best = Some((gain, a, b));
                        }
                    }
                }
            }
            let (_, a, b) = best.expect("graph without isolated vertices always has a pick");
            s.insert(a);
            s.insert(b);
            covered.union_with(&self.reach[a]);
            covered.union_with(&self.reach[b]);
        }
        s
    }
}

fn parameter_of(mode: Mode) -> Parameter {
    match mode {
        Mode::Dominating => Parameter::Gamma,
        Mode::Total => Parameter::GammaT,
        Mode::Paired => Parameter::GammaPr,
    }
}

fn run(g: &Graph, mode: Mode, budget: &Budget) -> Result<Certificate> {
    let param = parameter_of(mode);
    if mode != Mode::Dominating && g.has_isolated_vertex() {
        return Err(Error::domain(format!(
            "{param} is undefined on graphs with isolated vertices"
        )));
    }
    let mut search = Search::new(g, mode, budget);
    let n = g.order();
    let greedy = search.greedy();
    let unit = search.pick_size();
    let ub_steps = greedy.len() / unit;
    let empty = Bits::new(n);
    let start = search.lower_bound(&empty);
    for k in start..ub_steps {
        if let Some(sol) = search.dfs(&empty, &empty, &empty, k) {
            let nodes = search.meter.nodes();
            return Ok(Certificate::exact(
                param,
                VertexSet::from_bits(g, sol),
                nodes,
            ));
        }
        if search.meter.exhausted() {
            let nodes = search.meter.nodes();
            return Ok(Certificate::bounds(
                param,
                k * unit,
                greedy.len(),
                VertexSet::from_bits(g, greedy),
                nodes,
            ));
        }
    }
    let nodes = search.meter.nodes();
    Ok(Certificate::exact(
        param,
        VertexSet::from_bits(g, greedy),
        nodes,
    ))
}

/// Minimum-side solver for `parameter` ∈ {γ, γ_t, γ_pr}.
pub fn solve_minimum(g: &Graph, parameter: Parameter, budget: &Budget) -> Result<Certificate> {
    let mode = match parameter {
        Parameter::Gamma => Mode::Dominating,
        Parameter::GammaT => Mode::Total,
        Parameter::GammaPr => Mode::Paired,
        other => {
            return Err(Error::domain(format!(
                "{other} is not a minimum-side parameter"
            )))
        }
    };
    run(g, mode, budget)
}

/// Domination number γ.
pub fn solve_gamma(g: &Graph, budget: &Budget) -> Result<Certificate> {
    run(g, Mode::Dominating, budget)
}

/// Total domination number γ_t; rejects graphs with isolated vertices.
pub fn solve_gamma_t(g: &Graph, budget: &Budget) -> Result<Certificate> {
    run(g, Mode::Total, budget)
}

/// Paired domination number γ_pr; rejects graphs with isolated vertices.
pub fn solve_gamma_pr(g: &Graph, budget: &Budget) -> Result<Certificate> {
    run(g, Mode::Paired, budget)
}
