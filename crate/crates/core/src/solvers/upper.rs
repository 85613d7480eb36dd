//! Upper domination number Γ: the largest minimal dominating set.
//!
//! The search grows a set that stays "irredundant so far": a vertex may join
//! only if every current member keeps a private neighbor afterwards. Such a
//! vertex can never become admissible again once it fails, so it is dropped
//! for the rest of the subtree. Branching is on an undominated vertex; the
//! search stops at the first dominating set on each path, which is then
//! minimal dominating.

use crate::bitset::Bits;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

use super::{Budget, Certificate, Meter, Parameter};

/// Orders up to this size fall back to full subset enumeration when the
/// node budget runs out.
const EXHAUSTIVE_ORDER: usize = 20;

struct Search {
    closed: Vec<Bits>,
    best: Bits,
    meter: Meter,
}

impl Search {
    fn admissible(&self, w: usize, s: &Bits, once: &Bits) -> bool {
        s.iter().all(|v| {
            let mut private = self.closed[v].intersection(once);
            private.difference_with(&self.closed[w]);
            !private.is_empty()
        })
    }

    /// `dom1 = N[S]`, `dom2` = vertices with at least two closed neighbors in S.
    fn dfs(&mut self, s: &Bits, dom1: &Bits, dom2: &Bits, dropped: &Bits) {
        if !self.meter.tick() {
            return;
        }
        if dom1.is_full() {
            if s.len() > self.best.len() {
                self.best = s.clone();
            }
            return;
        }
        let undominated = dom1.complement();
        let free = s.union(dropped).complement();
        let room = undominated.len().min(free.len());
        if s.len() + room <= self.best.len() {
            return;
        }
        let once = dom1.difference(dom2);
        let mut branch: Option<Vec<usize>> = None;
        for u in undominated.iter() {
            let opts: Vec<usize> = self.closed[u]
                .intersection(&free)
                .iter()
                .filter(|&w| self.admissible(w, s, &once))
                .collect();
            if opts.is_empty() {
                return;
            }
            if branch.as_ref().is_none_or(|b| opts.len() < b.len()) {
                branch = Some(opts);
            }
        }
        let mut dropped = dropped.clone();
        for w in branch.expect("some vertex is undominated") {
            let mut s2 = s.clone();
            s2.insert(w);
            let mut d2 = dom1.intersection(&self.closed[w]);
            d2.union_with(dom2);
            let d1 = dom1.union(&self.closed[w]);
            self.dfs(&s2, &d1, &d2, &dropped);
            if self.meter.exhausted() {
                return;
            }
            dropped.insert(w);
        }
    }
}

/// Lowest-index maximal independent set; always minimal dominating.
fn greedy_mis(g: &Graph) -> Bits {
    let n = g.order();
    let mut s = Bits::new(n);
    let mut blocked = Bits::new(n);
    for v in 0..n {
        if !blocked.contains(v) {
            s.insert(v);
            blocked.insert(v);
            blocked.union_with(g.nbrs(v));
        }
    }
    s
}

fn exhaustive(g: &Graph, closed: &[Bits]) -> Bits {
    let n = g.order();
    let mut best = Bits::new(n);
    for mask in 0u32..(1u32 << n) {
        if (mask.count_ones() as usize) <= best.len() {
            continue;
        }
        let s = Bits::from_indices(n, (0..n).filter(|&i| mask >> i & 1 == 1));
        let mut dom1 = Bits::new(n);
        let mut dom2 = Bits::new(n);
        for v in s.iter() {
            dom2.union_with(&dom1.intersection(&closed[v]));
            dom1.union_with(&closed[v]);
        }
        if !dom1.is_full() {
            continue;
        }
        let once = dom1.difference(&dom2);
        if s.iter().all(|v| closed[v].intersects(&once)) {
            best = s;
        }
    }
    best
}

/// A largest minimal dominating set by plain enumeration of all `2^n`
/// subsets; an independent check on the search. Orders above 20 are refused.
pub fn upper_gamma_exhaustive(g: &Graph) -> Result<VertexSet> {
    if g.order() > EXHAUSTIVE_ORDER {
        return Err(Error::resource(format!(
            "order {} exceeds the enumeration cap of {EXHAUSTIVE_ORDER}",
            g.order()
        )));
    }
    Ok(VertexSet::from_bits(g, exhaustive(g, &g.closed_rows())))
}

/// Γ(G). On budget exhaustion the interval is `[best found, n]`, except for
/// orders up to 20 where plain enumeration settles the value.
pub fn solve_upper_gamma(g: &Graph, budget: &Budget) -> Result<Certificate> {
    let n = g.order();
    let closed = g.closed_rows();
    let mut search = Search {
        closed,
        best: greedy_mis(g),
        meter: budget.meter(),
    };
    let empty = Bits::new(n);
    search.dfs(&empty, &empty, &empty, &empty);
    let nodes = search.meter.nodes();
    if !search.meter.exhausted() {
        return Ok(Certificate::exact(
            Parameter::UpperGamma,
            VertexSet::from_bits(g, search.best),
            nodes,
        ));
    }
    if n <= EXHAUSTIVE_ORDER {
        let best = exhaustive(g, &search.closed);
        return Ok(Certificate::exact(
            Parameter::UpperGamma,
            VertexSet::from_bits(g, best),
            nodes,
        ));
    }
    let lo = search.best.len();
    Ok(Certificate::bounds(
        Parameter::UpperGamma,
        lo,
        n,
        VertexSet::from_bits(g, search.best),
        nodes,
    ))
}
