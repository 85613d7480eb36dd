//! Simple undirected graphs over dense vertex indices `0..n`, stored as
//! per-vertex adjacency bitsets, and the vertex sets that index them.

use std::collections::VecDeque;
use std::fmt;
use std::hash::{DefaultHasher, Hash, Hasher};

use crate::bitset::Bits;
use crate::error::{Error, Result};

/// Hop distance between two vertices. `Infinite` marks disconnected pairs and
/// orders after every finite distance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => f.write_str("inf"),
        }
    }
}

/// Immutable simple graph: no loops, no multi-edges, symmetric adjacency.
#[derive(Clone)]
pub struct Graph {
    adj: Vec<Bits>,
    label: Option<String>,
    home: u64,
}

impl PartialEq for Graph {
    /// Graphs compare by labeled adjacency; the label tag is ignored.
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order())
            .field("label", &self.label)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

fn fingerprint(adj: &[Bits]) -> u64 {
    let mut h = DefaultHasher::new();
    adj.len().hash(&mut h);
    for row in adj {
        row.words().hash(&mut h);
    }
    h.finish()
}

impl Graph {
    /// Builds a graph from already-validated adjacency rows.
    pub(crate) fn from_rows(adj: Vec<Bits>) -> Graph {
        debug_assert!(adj.iter().enumerate().all(|(v, row)| {
            row.width() == adj.len() && !row.contains(v) && row.iter().all(|u| adj[u].contains(v))
        }));
        let home = fingerprint(&adj);
        Graph {
            adj,
            label: None,
            home,
        }
    }

    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Graph {
        Graph::from_rows(vec![Bits::new(n); n])
    }

    /// Builds a graph from an edge list. Repeated edges are merged; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Bits::new(n); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::Index { index: x, order: n });
                }
            }
            if u == v {
                return Err(Error::domain(format!("loop at vertex {u}")));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph::from_rows(adj))
    }

    /// Builds a graph from a symmetric adjacency predicate evaluated on `u < v`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Graph {
        let mut adj = vec![Bits::new(n); n];
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    adj[u].insert(v);
                    adj[v].insert(u);
                }
            }
        }
        Graph::from_rows(adj)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Graph {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Identity shared by every structurally identical graph; vertex sets carry it.
    pub fn home(&self) -> u64 {
        self.home
    }

    pub(crate) fn rows(&self) -> &[Bits] {
        &self.adj
    }

    /// Open neighborhood as raw bits. Panics on out-of-range `v`.
    #[inline]
    pub(crate) fn nbrs(&self, v: usize) -> &Bits {
        &self.adj[v]
    }

    pub(crate) fn closed_rows(&self) -> Vec<Bits> {
        self.adj
            .iter()
            .enumerate()
            .map(|(v, row)| {
                let mut r = row.clone();
                r.insert(v);
                r
            })
            .collect()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::Index {
                index: v,
                order: self.order(),
            })
        }
    }

    pub(crate) fn check_home(&self, s: &VertexSet) -> Result<()> {
        if s.home == self.home && s.bits.width() == self.order() {
            Ok(())
        } else {
            Err(Error::domain(format!(
                "vertex set of universe {} does not belong to this graph of order {}",
                s.bits.width(),
                self.order()
            )))
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v].len())
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Bits::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn neighbors(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(VertexSet::from_bits(self, self.adj[v].clone()))
    }

    /// `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        let mut bits = self.adj[v].clone();
        bits.insert(v);
        Ok(VertexSet::from_bits(self, bits))
    }

    /// `N[S]`, the union of the closed neighborhoods of the members of `s`.
    pub fn closed_neighborhood_set(&self, s: &VertexSet) -> Result<VertexSet> {
        self.check_home(s)?;
        Ok(VertexSet::from_bits(self, self.closed_nbhd_bits(&s.bits)))
    }

    pub(crate) fn closed_nbhd_bits(&self, s: &Bits) -> Bits {
        let mut out = s.clone();
        for v in s.iter() {
            out.union_with(&self.adj[v]);
        }
        out
    }

    /// BFS distances from `source`.
    pub fn distances_from(&self, source: usize) -> Result<Vec<Distance>> {
        self.check_vertex(source)?;
        let mut dist = vec![Distance::Infinite; self.order()];
        dist[source] = Distance::Finite(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].finite().unwrap_or(0);
            for w in self.adj[u].iter() {
                if dist[w] == Distance::Infinite {
                    dist[w] = Distance::Finite(du + 1);
                    queue.push_back(w);
                }
            }
        }
        Ok(dist)
    }

    pub fn distance_matrix(&self) -> DistanceMatrix {
        let n = self.order();
        let rows = (0..n)
            .map(|v| self.distances_from(v).expect("vertex in range"))
            .collect();
        DistanceMatrix { rows }
    }

    /// Maximum pairwise distance; `Infinite` when disconnected, 0 for K_1 and the empty graph.
    pub fn diameter(&self) -> Distance {
        self.distance_matrix()
            .rows
            .iter()
            .flatten()
            .copied()
            .max()
            .unwrap_or(Distance::Finite(0))
    }

    /// `ball[v]` is the set of vertices at distance at most `radius` from `v`.
    pub(crate) fn balls(&self, radius: usize) -> Vec<Bits> {
        let n = self.order();
        (0..n)
            .map(|v| {
                let mut reach = Bits::new(n);
                reach.insert(v);
                let mut frontier = reach.clone();
                for _ in 0..radius {
                    let mut next = Bits::new(n);
                    for u in frontier.iter() {
                        next.union_with(&self.adj[u]);
                    }
                    next.difference_with(&reach);
                    if next.is_empty() {
                        break;
                    }
                    reach.union_with(&next);
                    frontier = next;
                }
                reach
            })
            .collect()
    }

    /// Graph on the same vertices where `u ~ v` iff `1 <= d(u, v) <= k`.
    /// Independent sets of the result are exactly the k-packings of `self`.
    pub fn distance_power_conflict_graph(&self, k: usize) -> Result<Graph> {
        if k == 0 {
            return Err(Error::domain("packing radius k must be at least 1"));
        }
        let mut rows = self.balls(k);
        for (v, row) in rows.iter_mut().enumerate() {
            row.remove(v);
        }
        Ok(Graph::from_rows(rows))
    }

    /// `G[S]` together with the index maps between `G` and the subgraph.
    /// New indices follow the ascending order of `S`.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<InducedSubgraph> {
        self.check_home(s)?;
        Ok(self.induced_bits(&s.bits))
    }

    pub(crate) fn induced_bits(&self, s: &Bits) -> InducedSubgraph {
        let new_to_old: Vec<usize> = s.iter().collect();
        let mut old_to_new = vec![None; self.order()];
        for (i, &v) in new_to_old.iter().enumerate() {
            old_to_new[v] = Some(i);
        }
        let m = new_to_old.len();
        let rows = new_to_old
            .iter()
            .map(|&v| Bits::from_indices(m, self.adj[v].iter().filter_map(|u| old_to_new[u])))
            .collect();
        InducedSubgraph {
            graph: Graph::from_rows(rows),
            old_to_new,
            new_to_old,
        }
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(Bits::is_empty)
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n == 0 {
            return true;
        }
        let mut seen = Bits::new(n);
        seen.insert(0);
        let mut frontier = seen.clone();
        while !frontier.is_empty() {
            let mut next = Bits::new(n);
            for u in frontier.iter() {
                next.union_with(&self.adj[u]);
            }
            next.difference_with(&seen);
            seen.union_with(&next);
            frontier = next;
        }
        seen.is_full()
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = Bits::new(n);
        let mut out = Vec::new();
        for s in 0..n {
            if seen.contains(s) {
                continue;
            }
            let mut comp = Bits::new(n);
            comp.insert(s);
            let mut frontier = comp.clone();
            while !frontier.is_empty() {
                let mut next = Bits::new(n);
                for u in frontier.iter() {
                    next.union_with(&self.adj[u]);
                }
                next.difference_with(&comp);
                comp.union_with(&next);
                frontier = next;
            }
            seen.union_with(&comp);
            out.push(comp.iter().collect());
        }
        out
    }

    /// Copy with vertex `v` renamed to `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.order();
        let mut seen = vec![false; n];
        if perm.len() != n
            || perm
                .iter()
                .any(|&p| p >= n || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::domain(
                "relabeling is not a permutation of the vertices",
            ));
        }
        Graph::from_edges(n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    /// Copy of `self` with the extra edges added.
    pub fn with_edges<I>(&self, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Graph::from_edges(self.order(), self.edges().chain(edges))
    }
}

/// Result of [`Graph::induced_subgraph`].
#[derive(Debug, Clone)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub old_to_new: Vec<Option<usize>>,
    pub new_to_old: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    rows: Vec<Vec<Distance>>,
}

impl DistanceMatrix {
    pub fn get(&self, u: usize, v: usize) -> Distance {
        self.rows[u][v]
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, u: usize) -> &[Distance] {
        &self.rows[u]
    }
}

/// A set of vertices of one particular graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: Bits,
    home: u64,
}

impl VertexSet {
    pub(crate) fn from_bits(g: &Graph, bits: Bits) -> VertexSet {
        debug_assert_eq!(bits.width(), g.order());
        VertexSet { bits, home: g.home }
    }

    pub fn empty(g: &Graph) -> VertexSet {
        VertexSet::from_bits(g, Bits::new(g.order()))
    }

    pub fn full(g: &Graph) -> VertexSet {
        VertexSet::from_bits(g, Bits::full(g.order()))
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(g: &Graph, it: I) -> Result<VertexSet> {
        let mut bits = Bits::new(g.order());
        for v in it {
            g.check_vertex(v)?;
            bits.insert(v);
        }
        Ok(VertexSet::from_bits(g, bits))
    }

    pub(crate) fn bits(&self) -> &Bits {
        &self.bits
    }

    pub fn home(&self) -> u64 {
        self.home
    }

    /// Order of the home graph.
    pub fn universe(&self) -> usize {
        self.bits.width()
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.bits.contains(v)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.bits.iter().collect()
    }

    fn same_home(&self, other: &VertexSet) -> Result<()> {
        if self.home == other.home && self.universe() == other.universe() {
            Ok(())
        } else {
            Err(Error::domain("vertex sets belong to different graphs"))
        }
    }

    pub fn union(&self, other: &VertexSet) -> Result<VertexSet> {
        self.same_home(other)?;
        Ok(VertexSet {
            bits: self.bits.union(&other.bits),
            home: self.home,
        })
    }

    pub fn intersection(&self, other: &VertexSet) -> Result<VertexSet> {
        self.same_home(other)?;
        Ok(VertexSet {
            bits: self.bits.intersection(&other.bits),
            home: self.home,
        })
    }

    pub fn difference(&self, other: &VertexSet) -> Result<VertexSet> {
        self.same_home(other)?;
        Ok(VertexSet {
            bits: self.bits.difference(&other.bits),
            home: self.home,
        })
    }

    pub fn is_subset(&self, other: &VertexSet) -> Result<bool> {
        self.same_home(other)?;
        Ok(self.bits.is_subset(&other.bits))
    }

    /// Copy with `v` added; `v` must be in range.
    pub fn with(&self, v: usize) -> Result<VertexSet> {
        if v >= self.universe() {
            return Err(Error::Index {
                index: v,
                order: self.universe(),
            });
        }
        let mut bits = self.bits.clone();
        bits.insert(v);
        Ok(VertexSet {
            bits,
            home: self.home,
        })
    }

    pub fn without(&self, v: usize) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.remove(v);
        VertexSet {
            bits,
            home: self.home,
        }
    }
}

/// Ascending indices separated by single spaces.
impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in self.iter() {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexSet{{{self}}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, lollipop, path};
    use crate::products::multiway_direct_complete;

    fn two_k2() -> Graph {
        Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap()
    }

    fn set(g: &Graph, v: &[usize]) -> VertexSet {
        VertexSet::from_indices(g, v.iter().copied()).unwrap()
    }

    #[test]
    fn closed_neighborhood_examples() {
        assert_eq!(
            complete(3).closed_neighborhood(0).unwrap().to_vec(),
            vec![0, 1, 2]
        );
        assert_eq!(path(3).closed_neighborhood(0).unwrap().to_vec(), vec![0, 1]);
        assert_eq!(
            two_k2().closed_neighborhood(2).unwrap().to_vec(),
            vec![2, 3]
        );
        assert!(matches!(
            path(3).closed_neighborhood(3),
            Err(Error::Index { index: 3, order: 3 })
        ));
    }

    #[test]
    fn closed_neighborhood_set_examples() {
        let p3 = path(3);
        assert_eq!(
            p3.closed_neighborhood_set(&set(&p3, &[1])).unwrap().len(),
            3
        );
        let c4 = cycle(4);
        assert!(c4
            .closed_neighborhood_set(&set(&c4, &[0, 1]))
            .unwrap()
            .bits
            .is_full());
        assert!(p3
            .closed_neighborhood_set(&VertexSet::empty(&p3))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn diagonal_dominates_k4_cubed_by_scan() {
        let g = multiway_direct_complete(&[4, 4, 4]).unwrap();
        let diag = set(&g, &[0, 21, 42, 63]);
        let covered = g.closed_neighborhood_set(&diag).unwrap();
        // independent per-vertex scan: (a,b,c) is covered iff it is some (i,i,i)
        // or differs from some (i,i,i) in every coordinate
        for v in 0..64 {
            let (a, b, c) = (v / 16, v / 4 % 4, v % 4);
            let hit = (0..4).any(|i| (a == i && b == i && c == i) || (a != i && b != i && c != i));
            assert_eq!(covered.contains(v), hit, "vertex {v}");
        }
        assert_eq!(covered.len(), 64);
    }

    #[test]
    fn home_mismatch_rejected() {
        let a = path(3);
        let b = path(4);
        assert!(matches!(
            a.closed_neighborhood_set(&VertexSet::full(&b)),
            Err(Error::Domain(_))
        ));
        assert!(VertexSet::full(&a).union(&VertexSet::full(&b)).is_err());
        // structurally identical graphs share a home
        assert!(path(3)
            .closed_neighborhood_set(&VertexSet::full(&a))
            .is_ok());
    }

    #[test]
    fn distances() {
        assert_eq!(path(4).distance_matrix().get(0, 3), Distance::Finite(3));
        assert_eq!(two_k2().distance_matrix().get(0, 2), Distance::Infinite);
        let lol = lollipop(&complete(6), 2, 0).unwrap();
        assert_eq!(
            lol.distances_from(7).unwrap().into_iter().max(),
            Some(Distance::Finite(3))
        );
    }

    #[test]
    fn diameters() {
        for n in 2..7 {
            assert_eq!(complete(n).diameter(), Distance::Finite(1));
        }
        assert_eq!(
            lollipop(&complete(6), 2, 0).unwrap().diameter(),
            Distance::Finite(3)
        );
        assert_eq!(complete(1).diameter(), Distance::Finite(0));
        assert_eq!(Graph::empty(0).diameter(), Distance::Finite(0));
        assert_eq!(two_k2().diameter(), Distance::Infinite);
    }

    #[test]
    fn conflict_graph_examples() {
        let p7 = path(7);
        let c3 = p7.distance_power_conflict_graph(3).unwrap();
        assert!(!c3.has_edge(0, 4));
        assert!(c3.has_edge(0, 3));
        assert_eq!(p7.distance_power_conflict_graph(1).unwrap(), p7);
        let star = crate::families::star(5);
        let c = star.distance_power_conflict_graph(3).unwrap();
        assert_eq!(c, complete(6));
        assert!(p7.distance_power_conflict_graph(0).is_err());
    }

    #[test]
    fn induced_examples() {
        let k5 = complete(5);
        let sub = k5.induced_subgraph(&set(&k5, &[1, 3, 4])).unwrap();
        assert_eq!(sub.graph, complete(3));
        assert_eq!(sub.new_to_old, vec![1, 3, 4]);
        assert_eq!(sub.old_to_new[3], Some(1));
        let c5 = cycle(5);
        assert_eq!(
            c5.induced_subgraph(&set(&c5, &[0, 1, 2])).unwrap().graph,
            path(3)
        );
        let c4 = cycle(4);
        let sub = c4.induced_subgraph(&set(&c4, &[0, 2])).unwrap();
        assert_eq!(sub.graph, Graph::empty(2));
    }

    #[test]
    fn isolation_and_connectivity() {
        let g = two_k2();
        assert!(!g.has_isolated_vertex());
        assert!(!g.is_connected());
        assert!(complete(1).has_isolated_vertex());
        assert!(Graph::empty(0).is_connected());
        assert!(!Graph::empty(0).has_isolated_vertex());
        let fig1 = crate::families::cayleypop(&[2, 5], 3).unwrap();
        assert!(fig1.is_connected());
        assert_eq!(g.components(), vec![vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn from_edges_rejects_loops_and_range() {
        assert!(matches!(
            Graph::from_edges(3, [(1, 1)]),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::Index { .. })
        ));
    }

    #[test]
    fn display_is_ascending() {
        let g = path(10);
        assert_eq!(set(&g, &[7, 2, 9, 0]).to_string(), "0 2 7 9");
        assert_eq!(VertexSet::empty(&g).to_string(), "");
    }
}
