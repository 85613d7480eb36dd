//! Explicit witnesses: diagonal sets in products of complete graphs,
//! pendant-product extensions, and turning dominating sets into paired ones.

use std::collections::BTreeSet;

use crate::bitset::Bits;
use crate::error::{Error, Result};
use crate::families::lollipop;
use crate::graph::{Graph, VertexSet};
use crate::matching::has_perfect_matching;
use crate::products::{
    implicit_direct_domination_check, mixed_radix_index, multiway_direct_complete, ProductIndexMap,
};

/// A paired dominating set given by its pairing: disjoint edges whose
/// endpoints together dominate the graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairedWitness {
    pub pairs: Vec<(usize, usize)>,
}

impl PairedWitness {
    pub fn len(&self) -> usize {
        2 * self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Ascending vertices of the set.
    pub fn vertices(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
        v.sort_unstable();
        v
    }

    pub fn to_set(&self, g: &Graph) -> Result<VertexSet> {
        VertexSet::from_indices(g, self.vertices())
    }

    /// Pairs are disjoint edges of `g` and their endpoints dominate `g`.
    pub fn is_valid(&self, g: &Graph) -> bool {
        let n = g.order();
        let mut seen = Bits::new(n);
        for &(a, b) in &self.pairs {
            if !g.has_edge(a, b) || seen.contains(a) || seen.contains(b) {
                return false;
            }
            seen.insert(a);
            seen.insert(b);
        }
        g.closed_nbhd_bits(&seen).is_full()
    }
}

fn diagonal_guard(orders: &[usize]) -> Result<usize> {
    let t = orders.len();
    if t < 3 {
        return Err(Error::domain(format!("need t >= 3 factors, got {t}")));
    }
    if let Some(&n) = orders.iter().find(|&&n| n < t + 1) {
        return Err(Error::domain(format!(
            "factor order {n} is below t + 1 = {}",
            t + 1
        )));
    }
    Ok(t)
}

fn constant(orders: &[usize], i: usize) -> usize {
    mixed_radix_index(&vec![i; orders.len()], orders)
}

/// The proof pairing of the diagonal set: `(2i,…,2i)` with `(2i+1,…,2i+1)`,
/// and for even `t` the last diagonal vertex `(t,…,t)` with `(1,0,…,0)`.
/// Indices are mixed-radix labels of `K_{n_1} × … × K_{n_t}`.
pub fn diagonal_matching(orders: &[usize]) -> Result<Vec<(usize, usize)>> {
    let t = diagonal_guard(orders)?;
    let mut pairs: Vec<(usize, usize)> = (0..t.div_ceil(2))
        .map(|i| (constant(orders, 2 * i), constant(orders, 2 * i + 1)))
        .collect();
    if t % 2 == 0 {
        let mut extra = vec![0; t];
        extra[0] = 1;
        pairs.push((constant(orders, t), mixed_radix_index(&extra, orders)));
    }
    Ok(pairs)
}

/// `D = {(i,…,i) : 0 ≤ i ≤ t}` for odd `t`; `D ∪ {(1,0,…,0)}` for even `t`.
pub fn build_diagonal_pds(orders: &[usize]) -> Result<VertexSet> {
    let pairs = diagonal_matching(orders)?;
    let g = multiway_direct_complete(orders)?;
    PairedWitness { pairs }.to_set(&g)
}

fn check_vertex(v: usize, order: usize) -> Result<()> {
    if v < order {
        Ok(())
    } else {
        Err(Error::Index { index: v, order })
    }
}

/// True when the product vertices `s` induce a subgraph of `G × H` with a
/// perfect matching. Only `|s|` vertices are materialized.
fn product_set_has_perfect_matching(g: &Graph, h: &Graph, s: &[(usize, usize)]) -> bool {
    let edges = s.iter().enumerate().flat_map(|(i, &(a, b))| {
        s.iter()
            .enumerate()
            .skip(i + 1)
            .filter(move |&(_, &(c, d))| g.has_edge(a, c) && h.has_edge(b, d))
            .map(move |(j, _)| (i, j))
    });
    let induced = Graph::from_edges(s.len(), edges).expect("indices in range");
    has_perfect_matching(&induced).is_some()
}

/// `D ∪ ({v} × D_H)` on `G' × H`, where `G'` is `G` with a pendant vertex
/// `v' = |G|` attached at `v`. `D` must be a paired dominating set of
/// `G × H` and `D_H` one of `H`.
pub fn build_pendant_product_ds(
    g: &Graph,
    h: &Graph,
    v: usize,
    d: &[(usize, usize)],
    d_h: &VertexSet,
) -> Result<Vec<(usize, usize)>> {
    check_vertex(v, g.order())?;
    h.check_home(d_h)?;
    if d_h.is_empty() {
        return Err(Error::domain("witness on H is empty"));
    }
    if !super::is_paired_dominating(h, d_h)? {
        return Err(Error::domain("witness on H is not paired dominating"));
    }
    for &(a, b) in d {
        check_vertex(a, g.order())?;
        check_vertex(b, h.order())?;
    }
    let dset: BTreeSet<(usize, usize)> = d.iter().copied().collect();
    let dv: Vec<(usize, usize)> = dset.iter().copied().collect();
    if !implicit_direct_domination_check(g, h, &dv) || !product_set_has_perfect_matching(g, h, &dv)
    {
        return Err(Error::domain("witness on G x H is not paired dominating"));
    }
    let mut out = dset;
    out.extend(d_h.iter().map(|y| (v, y)));
    let out: Vec<(usize, usize)> = out.into_iter().collect();
    let g_prime = lollipop(g, 1, v)?;
    if !implicit_direct_domination_check(&g_prime, h, &out) {
        return Err(Error::domain("extended set fails to dominate G' x H"));
    }
    Ok(out)
}

/// Paired version of [`build_pendant_product_ds`]: each new `(v, y)` is
/// matched with `(v', m(y))`, where `m` is the pairing of `D_H`. Labels are
/// row-major on `G' × H`, which agree with those of `G × H` on the old part.
pub fn pair_pendant_product(
    g: &Graph,
    h: &Graph,
    v: usize,
    d: &PairedWitness,
    d_h: &PairedWitness,
) -> Result<PairedWitness> {
    check_vertex(v, g.order())?;
    if d_h.is_empty() {
        return Err(Error::domain("witness on H is empty"));
    }
    if !d_h.is_valid(h) {
        return Err(Error::domain("witness on H is not a valid pairing"));
    }
    let map = ProductIndexMap::new(g.order(), h.order());
    let coords: Vec<(usize, usize)> = d.vertices().into_iter().map(|x| map.pair(x)).collect();
    let disjoint_edges = {
        let mut seen = BTreeSet::new();
        d.pairs.iter().all(|&(x, y)| {
            let ((a, b), (c, e)) = (map.pair(x), map.pair(y));
            x < map.order()
                && y < map.order()
                && g.has_edge(a, c)
                && h.has_edge(b, e)
                && seen.insert(x)
                && seen.insert(y)
        })
    };
    if !disjoint_edges || !implicit_direct_domination_check(g, h, &coords) {
        return Err(Error::domain("witness on G x H is not a valid pairing"));
    }
    let g_prime = lollipop(g, 1, v)?;
    let pendant = g.order();
    let map2 = ProductIndexMap::new(g_prime.order(), h.order());
    let taken: BTreeSet<usize> = d.vertices().into_iter().collect();
    let mut pairs = d.pairs.clone();
    for &(a, b) in &d_h.pairs {
        for (y, my) in [(a, b), (b, a)] {
            let x = map2.index(v, y);
            if !taken.contains(&x) {
                pairs.push((x, map2.index(pendant, my)));
            }
        }
    }
    Ok(PairedWitness { pairs })
}

/// Turns a dominating set into a paired dominating set of at most twice the
/// size. Each member is matched, in index order, with an unused neighbor
/// from `D` if possible, otherwise with any unused neighbor; a member whose
/// neighbors are all used already is dropped, which keeps domination.
pub fn pair_dominating_set(g: &Graph, d: &VertexSet) -> Result<PairedWitness> {
    if !super::is_dominating(g, d)? {
        return Err(Error::domain("set is not dominating"));
    }
    if let Some(v) = d.iter().find(|&v| g.nbrs(v).is_empty()) {
        return Err(Error::domain(format!("vertex {v} is isolated")));
    }
    let mut used = Bits::new(g.order());
    let mut pairs = Vec::new();
    for v in d.iter() {
        if used.contains(v) {
            continue;
        }
        let free = g.nbrs(v).difference(&used);
        let partner = free.intersection(d.bits()).first().or_else(|| free.first());
        if let Some(u) = partner {
            used.insert(v);
            used.insert(u);
            pairs.push((v.min(u), v.max(u)));
        }
    }
    Ok(PairedWitness { pairs })
}

/// Largest order handled by [`minimal_total_dominating_sizes`].
pub const MINIMAL_TOTAL_CAP: usize = 16;

/// Sizes of the inclusion-minimal total dominating sets, by enumeration.
pub fn minimal_total_dominating_sizes(g: &Graph) -> Result<BTreeSet<usize>> {
    let n = g.order();
    if n > MINIMAL_TOTAL_CAP {
        return Err(Error::resource(format!(
            "order {n} exceeds the enumeration cap of {MINIMAL_TOTAL_CAP}"
        )));
    }
    if g.has_isolated_vertex() {
        return Err(Error::domain(
            "total domination needs a graph without isolated vertices",
        ));
    }
    let open: Vec<u32> = (0..n)
        .map(|v| g.nbrs(v).iter().fold(0u32, |m, u| m | 1 << u))
        .collect();
    let full = if n == 0 { 0 } else { u32::MAX >> (32 - n) };
    let total = |m: u32| {
        (0..n)
            .filter(|&v| m >> v & 1 == 1)
            .fold(0u32, |acc, v| acc | open[v])
            == full
    };
    let mut sizes = BTreeSet::new();
    for m in 0..=full {
        // total domination is closed under supersets, so single removals decide minimality
        if total(m) && (0..n).all(|v| m >> v & 1 == 0 || !total(m & !(1 << v))) {
            sizes.insert(m.count_ones() as usize);
        }
    }
    Ok(sizes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, path, rook2xn};
    use crate::products::{direct_product, mixed_radix_digits};
    use crate::solvers::{
        is_dominating, is_paired_dominating, solve_gamma, solve_gamma_pr, Budget,
    };

    #[test]
    fn diagonal_odd_and_even() {
        let g = multiway_direct_complete(&[4, 4, 4]).unwrap();
        let d = build_diagonal_pds(&[4, 4, 4]).unwrap();
        assert_eq!(d.to_vec(), vec![0, 21, 42, 63]);
        assert!(is_paired_dominating(&g, &d).unwrap());

        let orders = [5, 5, 5, 5];
        let g = multiway_direct_complete(&orders).unwrap();
        let d = build_diagonal_pds(&orders).unwrap();
        assert_eq!(d.len(), 6);
        assert!(is_paired_dominating(&g, &d).unwrap());
        let pairs = diagonal_matching(&orders).unwrap();
        assert!(PairedWitness {
            pairs: pairs.clone()
        }
        .is_valid(&g));
        let last = pairs.last().unwrap();
        assert_eq!(mixed_radix_digits(last.0, &orders), vec![4, 4, 4, 4]);
        assert_eq!(mixed_radix_digits(last.1, &orders), vec![1, 0, 0, 0]);
    }

    #[test]
    fn diagonal_guards() {
        assert!(matches!(build_diagonal_pds(&[4, 4]), Err(Error::Domain(_))));
        assert!(matches!(
            build_diagonal_pds(&[4, 3, 4]),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn pendant_product_on_cycles() {
        let c4 = cycle(4);
        let (p, map) = direct_product(&c4, &c4).unwrap();
        let d = solve_gamma_pr(&p, &Budget::default()).unwrap().witness;
        let d_pairs: Vec<_> = d.iter().map(|x| map.pair(x)).collect();
        let dh = solve_gamma_pr(&c4, &Budget::default()).unwrap().witness;
        let out = build_pendant_product_ds(&c4, &c4, 0, &d_pairs, &dh).unwrap();
        assert!(out.len() <= d.len() + dh.len());
        let gp = lollipop(&c4, 1, 0).unwrap();
        let (pp, map2) = direct_product(&gp, &c4).unwrap();
        let s = VertexSet::from_indices(&pp, out.iter().map(|&(a, b)| map2.index(a, b))).unwrap();
        assert!(is_dominating(&pp, &s).unwrap());
    }

    #[test]
    fn pendant_product_guards() {
        let c4 = cycle(4);
        let empty = VertexSet::empty(&c4);
        assert!(matches!(
            build_pendant_product_ds(&c4, &c4, 0, &[(0, 0)], &empty),
            Err(Error::Domain(_))
        ));
        let dh = VertexSet::from_indices(&c4, [0, 1]).unwrap();
        assert!(build_pendant_product_ds(&c4, &c4, 0, &[(0, 0)], &dh).is_err());
    }

    #[test]
    fn paired_pendant_product_is_valid() {
        let g = multiway_direct_complete(&[4, 4, 4]).unwrap();
        let pairs = diagonal_matching(&[4, 4, 4]).unwrap();
        let dg = PairedWitness { pairs };
        let map = ProductIndexMap::new(64, 64);
        // product of the two diagonals, paired coordinate-wise
        let dd = PairedWitness {
            pairs: dg
                .pairs
                .iter()
                .flat_map(|&(a, b)| {
                    dg.pairs.iter().flat_map(move |&(c, e)| {
                        [
                            (map.index(a, c), map.index(b, e)),
                            (map.index(a, e), map.index(b, c)),
                        ]
                    })
                })
                .collect(),
        };
        let (p, _) = direct_product(&g, &g).unwrap();
        assert!(dd.is_valid(&p));
        let out = pair_pendant_product(&g, &g, 0, &dd, &dg).unwrap();
        assert!(out.len() <= dd.len() + 2 * dg.len());
        let gp = lollipop(&g, 1, 0).unwrap();
        let (pp, _) = direct_product(&gp, &g).unwrap();
        assert!(out.is_valid(&pp));
    }

    #[test]
    fn pairing_a_dominating_set() {
        for g in [path(6), cycle(7), complete(5), rook2xn(4)] {
            let d = solve_gamma(&g, &Budget::default()).unwrap().witness;
            let p = pair_dominating_set(&g, &d).unwrap();
            assert!(p.is_valid(&g));
            assert!(p.len() <= 2 * d.len());
        }
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        let d = VertexSet::from_indices(&g, [0, 2]).unwrap();
        assert!(pair_dominating_set(&g, &d).is_err());
    }

    #[test]
    fn minimal_total_sizes() {
        for n in 2..7 {
            assert_eq!(
                minimal_total_dominating_sizes(&complete(n)).unwrap(),
                BTreeSet::from([2])
            );
        }
        assert_eq!(
            minimal_total_dominating_sizes(&path(4)).unwrap(),
            BTreeSet::from([2])
        );
        for n in 3..=7 {
            let sizes = minimal_total_dominating_sizes(&rook2xn(n)).unwrap();
            assert!(
                sizes.is_subset(&BTreeSet::from([2, 4, n])),
                "n = {n}: {sizes:?}"
            );
        }
        assert!(matches!(
            minimal_total_dominating_sizes(&path(17)),
            Err(Error::Resource(_))
        ));
        assert!(matches!(
            minimal_total_dominating_sizes(&Graph::empty(2)),
            Err(Error::Domain(_))
        ));
    }
}
