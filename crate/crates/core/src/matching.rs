//! Maximum-cardinality matching on general graphs (Edmonds' blossom
//! shrinking, BFS form) and the perfect-matching test built on it.

use std::collections::VecDeque;

use crate::graph::Graph;

const NONE: usize = usize::MAX;

struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.order();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.order()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, in_blossom: &mut [bool], mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            in_blossom[self.base[v]] = true;
            in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// BFS for an augmenting path from the exposed vertex `root`; returns its far end.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.order();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for to in self.g.nbrs(v).iter() {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    let mut in_blossom = vec![false; n];
                    self.mark_path(&mut in_blossom, v, cur, to);
                    self.mark_path(&mut in_blossom, to, cur, v);
                    for i in 0..n {
                        if in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    self.used[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }

    fn run(mut self) -> Vec<usize> {
        let n = self.g.order();
        // greedy start, lowest index first
        for v in 0..n {
            if self.mate[v] == NONE {
                if let Some(u) = self.g.nbrs(v).iter().find(|&u| self.mate[u] == NONE) {
                    self.mate[v] = u;
                    self.mate[u] = v;
                }
            }
        }
        for v in 0..n {
            if self.mate[v] == NONE {
                if let Some(end) = self.find_path(v) {
                    self.augment(end);
                }
            }
        }
        self.mate
    }
}

/// A maximum matching as pairs `(u, v)` with `u < v`, sorted.
pub fn maximum_matching(g: &Graph) -> Vec<(usize, usize)> {
    let mate = Blossom::new(g).run();
    mate.iter()
        .enumerate()
        .filter(|&(v, &m)| m != NONE && v < m)
        .map(|(v, &m)| (v, m))
        .collect()
}

/// A perfect matching of `g` when one exists. Odd order fails immediately;
/// the empty graph has the empty matching.
pub fn has_perfect_matching(g: &Graph) -> Option<Vec<(usize, usize)>> {
    if g.order() % 2 == 1 {
        return None;
    }
    let m = maximum_matching(g);
    (2 * m.len() == g.order()).then_some(m)
}

/// True iff `pairs` are disjoint edges of `g` covering every vertex.
pub fn is_perfect_matching(g: &Graph, pairs: &[(usize, usize)]) -> bool {
    let mut seen = vec![false; g.order()];
    for &(u, v) in pairs {
        if !g.has_edge(u, v) || seen[u] || seen[v] {
            return false;
        }
        seen[u] = true;
        seen[v] = true;
    }
    seen.into_iter().all(|s| s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, path, random_graph};
    use proptest::prelude::*;

    /// Exhaustive oracle: match the lowest unmatched vertex every possible way.
    fn brute_perfect(g: &Graph, free: u32) -> bool {
        if free == 0 {
            return true;
        }
        let v = free.trailing_zeros() as usize;
        let rest = free & !(1 << v);
        g.nbrs(v)
            .iter()
            .any(|u| rest >> u & 1 == 1 && brute_perfect(g, rest & !(1 << u)))
    }

    fn brute_max(g: &Graph, free: u32) -> usize {
        if free == 0 {
            return 0;
        }
        let v = free.trailing_zeros() as usize;
        let rest = free & !(1 << v);
        let skip = brute_max(g, rest);
        g.nbrs(v)
            .iter()
            .filter(|&u| rest >> u & 1 == 1)
            .map(|u| 1 + brute_max(g, rest & !(1 << u)))
            .fold(skip, usize::max)
    }

    #[test]
    fn examples() {
        assert!(has_perfect_matching(&path(3)).is_none());
        assert_eq!(
            has_perfect_matching(&cycle(6)),
            Some(vec![(0, 1), (2, 3), (4, 5)])
        );
        for t in [1, 3, 5, 7] {
            let k = complete(t + 1);
            let m = has_perfect_matching(&k).unwrap();
            assert!(is_perfect_matching(&k, &m));
        }
        assert_eq!(has_perfect_matching(&Graph::empty(0)), Some(vec![]));
        assert!(has_perfect_matching(&Graph::empty(2)).is_none());
    }

    #[test]
    fn blossom_needed() {
        // triangle 0-1-2 with stems 2-3 and 0-4, 1-5: perfect only through the blossom
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (2, 3), (0, 4), (1, 5)]).unwrap();
        let m = has_perfect_matching(&g).unwrap();
        assert!(is_perfect_matching(&g, &m));
    }

    #[test]
    fn agrees_with_brute_force() {
        for seed in 0..500u64 {
            let n = (seed % 8 + 1) as usize;
            let p = [0.2, 0.35, 0.5, 0.7][(seed / 8 % 4) as usize];
            let g = random_graph(n, p, seed).unwrap();
            let full = (1u32 << n) - 1;
            let got = has_perfect_matching(&g);
            assert_eq!(got.is_some(), brute_perfect(&g, full), "seed {seed}");
            if let Some(m) = got {
                assert!(is_perfect_matching(&g, &m));
            }
            assert_eq!(
                maximum_matching(&g).len(),
                brute_max(&g, full),
                "seed {seed}"
            );
        }
    }

    proptest! {
        #[test]
        fn adding_an_edge_keeps_a_perfect_matching(n in 2usize..12, seed in any::<u64>(), u in 0usize..12, v in 0usize..12) {
            let g = random_graph(n, 0.4, seed).unwrap();
            let (u, v) = (u % n, v % n);
            prop_assume!(u != v);
            if has_perfect_matching(&g).is_some() {
                let h = g.with_edges([(u, v)]).unwrap();
                prop_assert!(has_perfect_matching(&h).is_some());
            }
        }

        #[test]
        fn witness_is_valid(n in 0usize..20, seed in any::<u64>()) {
            let g = random_graph(n, 0.3, seed).unwrap();
            let m = maximum_matching(&g);
            let mut seen = vec![false; n];
            for &(a, b) in &m {
                prop_assert!(g.has_edge(a, b));
                prop_assert!(!seen[a] && !seen[b]);
                seen[a] = true;
                seen[b] = true;
            }
            if let Some(p) = has_perfect_matching(&g) {
                prop_assert!(is_perfect_matching(&g, &p));
            }
        }
    }
}
