//! Brute-force reference values, computed from an adjacency matrix by
//! enumerating every subset. Nothing here calls into the solvers or the
//! predicate checkers under test.
#![allow(dead_code, clippy::needless_range_loop)]

use domlab_core::Graph;

pub const MAX_ORDER: usize = 20;

#[derive(Debug, Clone)]
pub struct Oracle {
    pub n: usize,
    /// Open neighbourhoods as bit masks.
    pub adj: Vec<u32>,
}

impl Oracle {
    pub fn new(g: &Graph) -> Oracle {
        let n = g.order();
        assert!(n <= MAX_ORDER, "oracle limited to {MAX_ORDER} vertices");
        let adj = (0..n)
            .map(|u| {
                (0..n)
                    .filter(|&v| g.has_edge(u, v))
                    .fold(0, |m, v| m | 1 << v)
            })
            .collect();
        Oracle { n, adj }
    }

    pub fn from_matrix(n: usize, edge: impl Fn(usize, usize) -> bool) -> Oracle {
        let mut adj = vec![0u32; n];
        for u in 0..n {
            for v in 0..n {
                if u != v && edge(u, v) {
                    adj[u] |= 1 << v;
                }
            }
        }
        Oracle { n, adj }
    }

    pub fn full(&self) -> u32 {
        (1u32 << self.n) - 1
    }

    fn members(s: u32) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&v| s >> v & 1 == 1)
    }

    pub fn has_isolated(&self) -> bool {
        self.adj.contains(&0)
    }

    pub fn open(&self, s: u32) -> u32 {
        Self::members(s).fold(0, |m, v| m | self.adj[v])
    }

    pub fn dominating(&self, s: u32) -> bool {
        (self.open(s) | s) == self.full()
    }

    pub fn total(&self, s: u32) -> bool {
        self.open(s) == self.full()
    }

    /// The induced subgraph on `s` has a perfect matching.
    pub fn perfect_matching(&self, s: u32) -> bool {
        if s == 0 {
            return true;
        }
        let v = s.trailing_zeros() as usize;
        let rest = s & !(1 << v);
        Self::members(self.adj[v] & rest).any(|u| self.perfect_matching(rest & !(1 << u)))
    }

    pub fn paired(&self, s: u32) -> bool {
        self.dominating(s) && self.perfect_matching(s)
    }

    pub fn minimal_dominating(&self, s: u32) -> bool {
        self.dominating(s) && Self::members(s).all(|v| !self.dominating(s & !(1 << v)))
    }

    pub fn minimal_total(&self, s: u32) -> bool {
        self.total(s) && Self::members(s).all(|v| !self.total(s & !(1 << v)))
    }

    pub fn independent(&self, s: u32) -> bool {
        Self::members(s).all(|v| self.adj[v] & s == 0)
    }

    /// All-pairs distances, `usize::MAX` when disconnected.
    pub fn distances(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|src| {
                let mut d = vec![usize::MAX; self.n];
                d[src] = 0;
                let mut frontier = 1u32 << src;
                let mut seen = frontier;
                let mut k = 0;
                while frontier != 0 {
                    k += 1;
                    let next = self.open(frontier) & !seen;
                    for v in Self::members(next) {
                        d[v] = k;
                    }
                    seen |= next;
                    frontier = next;
                }
                d
            })
            .collect()
    }

    /// Pairwise distance greater than `k`.
    pub fn packing(&self, dist: &[Vec<usize>], s: u32, k: usize) -> bool {
        let vs: Vec<usize> = Self::members(s).collect();
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| dist[u][v] > k))
    }

    fn best(&self, ok: impl Fn(u32) -> bool, want_max: bool) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in 0..=self.full() {
            let c = s.count_ones() as usize;
            let better = match best {
                None => true,
                Some(b) => {
                    if want_max {
                        c > b
                    } else {
                        c < b
                    }
                }
            };
            if better && ok(s) {
                best = Some(c);
            }
        }
        best
    }

    pub fn gamma(&self) -> usize {
        self.best(|s| self.dominating(s), false).unwrap()
    }

    pub fn gamma_t(&self) -> Option<usize> {
        self.best(|s| self.total(s), false)
    }

    pub fn gamma_pr(&self) -> Option<usize> {
        self.best(|s| self.paired(s), false)
    }

    pub fn upper_gamma(&self) -> usize {
        self.best(|s| self.minimal_dominating(s), true).unwrap()
    }

    pub fn alpha(&self) -> usize {
        self.best(|s| self.independent(s), true).unwrap()
    }

    pub fn rho(&self, k: usize) -> usize {
        let d = self.distances();
        self.best(|s| self.packing(&d, s, k), true).unwrap()
    }

    pub fn minimal_total_sizes(&self) -> std::collections::BTreeSet<usize> {
        (0..=self.full())
            .filter(|&s| self.minimal_total(s))
            .map(|s| s.count_ones() as usize)
            .collect()
    }

    pub fn mask(set: &domlab_core::VertexSet) -> u32 {
        set.iter().fold(0, |m, v| m | 1 << v)
    }
}

/// Domination checks on graphs too large for bit masks.
pub mod big {
    use domlab_core::Graph;

    pub fn closed(g: &Graph, s: &[usize]) -> Vec<bool> {
        let n = g.order();
        let mut dom = vec![false; n];
        for &v in s {
            dom[v] = true;
            for u in 0..n {
                if g.has_edge(u, v) {
                    dom[u] = true;
                }
            }
        }
        dom
    }

    pub fn dominating(g: &Graph, s: &[usize]) -> bool {
        closed(g, s).into_iter().all(|x| x)
    }

    /// Every member has a private neighbour (possibly itself).
    pub fn minimal_dominating(g: &Graph, s: &[usize]) -> bool {
        let n = g.order();
        let mut count = vec![0usize; n];
        for &v in s {
            count[v] += 1;
            for u in 0..n {
                if g.has_edge(u, v) {
                    count[u] += 1;
                }
            }
        }
        count.iter().all(|&c| c > 0)
            && s.iter()
                .all(|&v| (0..n).any(|u| (u == v || g.has_edge(u, v)) && count[u] == 1))
    }

    /// `pairs` are edges, disjoint, cover exactly `s`, and `s` dominates.
    pub fn paired_by(g: &Graph, s: &[usize], pairs: &[(usize, usize)]) -> bool {
        let mut used: Vec<usize> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
        used.sort_unstable();
        let mut set = s.to_vec();
        set.sort_unstable();
        let disjoint = used.windows(2).all(|w| w[0] != w[1]);
        disjoint && used == set && pairs.iter().all(|&(a, b)| g.has_edge(a, b)) && dominating(g, s)
    }

    /// Pairwise graph distance greater than `k`, by BFS from each member.
    pub fn packing(g: &Graph, s: &[usize], k: usize) -> bool {
        let n = g.order();
        s.iter().all(|&src| {
            let mut d = vec![usize::MAX; n];
            d[src] = 0;
            let mut queue = std::collections::VecDeque::from([src]);
            while let Some(u) = queue.pop_front() {
                for v in 0..n {
                    if g.has_edge(u, v) && d[v] == usize::MAX {
                        d[v] = d[u] + 1;
                        queue.push_back(v);
                    }
                }
            }
            s.iter().all(|&t| t == src || d[t] > k)
        })
    }
}
