//! Direct and Cartesian products with row-major vertex labels, products of
//! complete graphs, and domination checks on products that are never built.
//!
//! Pair `(g, h)` of `G × H` is vertex `g * |H| + h`. Tuples of a multiway
//! product use the mixed-radix extension of the same rule, first
//! coordinate most significant.

use crate::bitset::Bits;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest product that will be materialized.
pub const MATERIALIZATION_CAP: usize = 20_000;

/// Row-major pairing of the vertices of two factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProductIndexMap {
    pub left_order: usize,
    pub right_order: usize,
}

impl ProductIndexMap {
    pub fn new(left_order: usize, right_order: usize) -> Self {
        ProductIndexMap {
            left_order,
            right_order,
        }
    }

    pub fn order(&self) -> usize {
        self.left_order * self.right_order
    }

    #[inline]
    pub fn index(&self, g: usize, h: usize) -> usize {
        debug_assert!(g < self.left_order && h < self.right_order);
        g * self.right_order + h
    }

    #[inline]
    pub fn pair(&self, v: usize) -> (usize, usize) {
        (v / self.right_order, v % self.right_order)
    }
}

fn check_cap(order: usize) -> Result<()> {
    if order > MATERIALIZATION_CAP {
        Err(Error::resource(format!(
            "product has {order} vertices, above the materialization cap of {MATERIALIZATION_CAP}; \
             use the implicit product checks instead"
        )))
    } else {
        Ok(())
    }
}

fn checked_order(a: usize, b: usize) -> Result<usize> {
    a.checked_mul(b)
        .ok_or_else(|| Error::resource("product order overflows"))
}

/// `G × H`: `(g, h) ~ (g', h')` iff `g ~ g'` in `G` and `h ~ h'` in `H`.
pub fn direct_product(g: &Graph, h: &Graph) -> Result<(Graph, ProductIndexMap)> {
    let map = ProductIndexMap::new(g.order(), h.order());
    check_cap(checked_order(g.order(), h.order())?)?;
    let n = map.order();
    let rows = (0..n)
        .map(|v| {
            let (a, b) = map.pair(v);
            let mut row = Bits::new(n);
            for a2 in g.nbrs(a).iter() {
                for b2 in h.nbrs(b).iter() {
                    row.insert(map.index(a2, b2));
                }
            }
            row
        })
        .collect();
    Ok((Graph::from_rows(rows), map))
}

/// `G □ H`: one coordinate equal and the other adjacent.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<(Graph, ProductIndexMap)> {
    let map = ProductIndexMap::new(g.order(), h.order());
    check_cap(checked_order(g.order(), h.order())?)?;
    let n = map.order();
    let rows = (0..n)
        .map(|v| {
            let (a, b) = map.pair(v);
            let mut row = Bits::new(n);
            for b2 in h.nbrs(b).iter() {
                row.insert(map.index(a, b2));
            }
            for a2 in g.nbrs(a).iter() {
                row.insert(map.index(a2, b));
            }
            row
        })
        .collect();
    Ok((Graph::from_rows(rows), map))
}

/// Mixed-radix digits of `v` for the given radices, most significant first.
pub fn mixed_radix_digits(mut v: usize, radices: &[usize]) -> Vec<usize> {
    let mut digits = vec![0; radices.len()];
    for (d, &r) in digits.iter_mut().zip(radices).rev() {
        *d = v % r;
        v /= r;
    }
    digits
}

/// Inverse of [`mixed_radix_digits`].
pub fn mixed_radix_index(digits: &[usize], radices: &[usize]) -> usize {
    digits
        .iter()
        .zip(radices)
        .fold(0, |acc, (&d, &r)| acc * r + d)
}

/// `K_{n_1} × … × K_{n_t}`: two tuples are adjacent iff they differ in every coordinate.
pub fn multiway_direct_complete(orders: &[usize]) -> Result<Graph> {
    if orders.is_empty() {
        return Err(Error::domain("need at least one factor"));
    }
    if let Some(&bad) = orders.iter().find(|&&n| n < 2) {
        return Err(Error::domain(format!("factor order {bad} is below 2")));
    }
    let n = orders
        .iter()
        .try_fold(1usize, |acc, &k| checked_order(acc, k))?;
    check_cap(n)?;
    let tuples: Vec<Vec<usize>> = (0..n).map(|v| mixed_radix_digits(v, orders)).collect();
    Ok(Graph::from_fn(n, |u, v| {
        tuples[u].iter().zip(&tuples[v]).all(|(a, b)| a != b)
    }))
}

/// Checks that `s` dominates `G × H` without building the product.
///
/// `(g, h)` is dominated iff it is in `s` or some `(g', h')` in `s` has
/// `g' ~ g` and `h' ~ h`. Pairs outside the factor ranges are ignored.
pub fn implicit_direct_domination_check(g: &Graph, h: &Graph, s: &[(usize, usize)]) -> bool {
    implicit_undominated(g, h, s).is_none()
}

/// First vertex of `G × H` (in row-major order) not dominated by `s`.
pub fn implicit_undominated(g: &Graph, h: &Graph, s: &[(usize, usize)]) -> Option<(usize, usize)> {
    let (ng, nh) = (g.order(), h.order());
    let pairs: Vec<(usize, usize)> = s
        .iter()
        .copied()
        .filter(|&(a, b)| a < ng && b < nh)
        .collect();
    for a in 0..ng {
        let mut covered = Bits::new(nh);
        for &(a2, b2) in &pairs {
            if a2 == a {
                covered.insert(b2);
            }
            if g.nbrs(a).contains(a2) {
                covered.union_with(h.nbrs(b2));
            }
        }
        if let Some(b) = Bits::full(nh).first_not_in(&covered) {
            return Some((a, b));
        }
    }
    None
}

/// Labels `(a, b, c, d)` of `G_n × G_n`, where `G_n = K_2 □ K_n` is labeled
/// `(a, b) ↦ a·n + b`.
pub fn rook_product_index(n: usize, a: usize, b: usize, c: usize, d: usize) -> usize {
    (a * n + b) * (2 * n) + (c * n + d)
}

pub fn rook_product_coords(n: usize, v: usize) -> (usize, usize, usize, usize) {
    let (left, right) = (v / (2 * n), v % (2 * n));
    (left / n, left % n, right / n, right % n)
}

/// The class `N_ij = {i} × Z_n × {j} × Z_n` of `G_n × G_n`.
pub fn rook_product_class(product: &Graph, n: usize, i: usize, j: usize) -> Result<VertexSet> {
    if product.order() != 4 * n * n || i > 1 || j > 1 {
        return Err(Error::domain("not a class of the rook product G_n × G_n"));
    }
    let members = (0..n).flat_map(|b| (0..n).map(move |d| rook_product_index(n, i, b, j, d)));
    VertexSet::from_indices(product, members)
}

/// Splits `d` into `D_ij = D ∩ N_ij`, returned as `[D_00, D_01, D_10, D_11]`.
pub fn rook_product_partition(n: usize, product: &Graph, d: &VertexSet) -> Result<[VertexSet; 4]> {
    if product.order() != 4 * n * n {
        return Err(Error::domain(format!(
            "graph of order {} is not G_{n} × G_{n}",
            product.order()
        )));
    }
    product.check_home(d)?;
    let mut parts: [Bits; 4] = std::array::from_fn(|_| Bits::new(product.order()));
    for v in d.iter() {
        let (a, _, c, _) = rook_product_coords(n, v);
        parts[2 * a + c].insert(v);
    }
    Ok(parts.map(|b| VertexSet::from_bits(product, b)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, path, rook2xn};

    #[test]
    fn k2_times_k2_is_two_k2() {
        let (g, _) = direct_product(&complete(2), &complete(2)).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 3), (1, 2)]);
    }

    #[test]
    fn k2_times_p3_is_two_paths() {
        let (g, map) = direct_product(&complete(2), &path(3)).unwrap();
        // brute force over the 6x6 table
        let mut expect = Vec::new();
        for u in 0..6 {
            for v in u + 1..6 {
                let ((a, b), (c, d)) = (map.pair(u), map.pair(v));
                if a != c && b.abs_diff(d) == 1 {
                    expect.push((u, v));
                }
            }
        }
        assert_eq!(g.edges().collect::<Vec<_>>(), expect);
        assert_eq!(g.components().len(), 2);
        assert!(g.components().iter().all(|c| c.len() == 3));
    }

    #[test]
    fn direct_edge_count() {
        let (g, _) = direct_product(&cycle(5), &path(4)).unwrap();
        assert_eq!(g.edge_count(), 2 * 5 * 3);
    }

    #[test]
    fn cartesian_examples() {
        let (c4, _) = cartesian_product(&complete(2), &complete(2)).unwrap();
        assert_eq!(c4.edge_count(), 4);
        assert!(c4.rows().iter().all(|r| r.len() == 2));
        assert!(c4.is_connected());
        let (grid, _) = cartesian_product(&path(2), &path(3)).unwrap();
        assert_eq!(grid.edge_count(), 7);
        for n in 2..7 {
            let g = rook2xn(n);
            assert!(g.rows().iter().all(|r| r.len() == n));
        }
    }

    #[test]
    fn cap_is_enforced() {
        let big = complete(150);
        assert!(matches!(
            direct_product(&big, &big),
            Err(Error::Resource(_))
        ));
        assert!(matches!(
            multiway_direct_complete(&[30, 30, 30]),
            Err(Error::Resource(_))
        ));
        assert!(multiway_direct_complete(&[4, 1]).is_err());
    }

    #[test]
    fn multiway_k4_cubed_is_27_regular() {
        let g = multiway_direct_complete(&[4, 4, 4]).unwrap();
        assert_eq!(g.order(), 64);
        assert!(g.rows().iter().all(|r| r.len() == 27));
    }

    #[test]
    fn multiway_two_factors_matches_direct() {
        let (d, _) = direct_product(&complete(2), &complete(5)).unwrap();
        assert_eq!(multiway_direct_complete(&[2, 5]).unwrap(), d);
    }

    #[test]
    fn implicit_examples() {
        let k2 = complete(2);
        // K_2 x K_2 is two disjoint edges; the diagonal covers only one of them
        assert!(!implicit_direct_domination_check(
            &k2,
            &k2,
            &[(0, 0), (1, 1)]
        ));
        assert!(implicit_direct_domination_check(
            &k2,
            &k2,
            &[(0, 0), (0, 1)]
        ));
        assert!(!implicit_direct_domination_check(&k2, &k2, &[(0, 0)]));
        assert_eq!(implicit_undominated(&k2, &k2, &[(0, 0)]), Some((0, 1)));
    }

    #[test]
    fn rook_labels_roundtrip() {
        let n = 4;
        for v in 0..4 * n * n {
            let (a, b, c, d) = rook_product_coords(n, v);
            assert_eq!(rook_product_index(n, a, b, c, d), v);
        }
    }

    #[test]
    fn rook_partition_examples() {
        let n = 3;
        let gn = rook2xn(n);
        let (p, _) = direct_product(&gn, &gn).unwrap();
        let n00 = rook_product_class(&p, n, 0, 0).unwrap();
        let parts = rook_product_partition(n, &p, &n00).unwrap();
        assert_eq!(parts[0], n00);
        assert!(parts[1..].iter().all(VertexSet::is_empty));
        let all = rook_product_partition(n, &p, &VertexSet::full(&p)).unwrap();
        assert!(all.iter().all(|s| s.len() == n * n));
        let wrong = path(5);
        assert!(rook_product_partition(n, &p, &VertexSet::full(&wrong)).is_err());
    }
}
