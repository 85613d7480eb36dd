use crate::bitset::Bits;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::matching::has_perfect_matching;

/// `N[S] = V(G)`.
pub fn is_dominating(g: &Graph, s: &VertexSet) -> Result<bool> {
    g.check_home(s)?;
    Ok(g.closed_nbhd_bits(s.bits()).is_full())
}

pub(crate) fn open_nbhd_bits(g: &Graph, s: &Bits) -> Bits {
    let mut out = Bits::new(g.order());
    for v in s.iter() {
        out.union_with(g.nbrs(v));
    }
    out
}

/// Dominating, and `G[S]` has no isolated vertex; equivalently `N(S) = V(G)`.
pub fn is_total_dominating(g: &Graph, s: &VertexSet) -> Result<bool> {
    g.check_home(s)?;
    Ok(open_nbhd_bits(g, s.bits()).is_full())
}

/// Dominating, and `G[S]` has a perfect matching.
pub fn is_paired_dominating(g: &Graph, s: &VertexSet) -> Result<bool> {
    if !is_dominating(g, s)? || s.len() % 2 == 1 {
        return Ok(false);
    }
    Ok(has_perfect_matching(&g.induced_bits(s.bits()).graph).is_some())
}

/// Vertices of `N[v]` outside `N[S \ {v}]`; may include `v` itself.
pub fn private_neighbors(g: &Graph, s: &VertexSet, v: usize) -> Result<VertexSet> {
    g.check_home(s)?;
    if !s.contains(v) {
        return Err(Error::domain(format!("vertex {v} is not in the set")));
    }
    let others = s.without(v);
    let covered = g.closed_nbhd_bits(others.bits());
    let mut own = g.nbrs(v).clone();
    own.insert(v);
    own.difference_with(&covered);
    Ok(VertexSet::from_bits(g, own))
}

/// Dominating, and every member has a private neighbor.
pub fn is_minimal_dominating(g: &Graph, s: &VertexSet) -> Result<bool> {
    if !is_dominating(g, s)? {
        return Ok(false);
    }
    for v in s.iter() {
        if private_neighbors(g, s, v)?.is_empty() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Pairwise distances all exceed `k`.
pub fn is_k_packing(g: &Graph, s: &VertexSet, k: usize) -> Result<bool> {
    g.check_home(s)?;
    for v in s.iter() {
        let dist = g.distances_from(v)?;
        let clash = s
            .iter()
            .any(|u| u != v && dist[u].finite().is_some_and(|d| d <= k));
        if clash {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_independent(g: &Graph, s: &VertexSet) -> Result<bool> {
    g.check_home(s)?;
    Ok(s.iter().all(|v| !g.nbrs(v).intersects(s.bits())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, path, star};
    use crate::products::{
        direct_product, multiway_direct_complete, rook_product_class, rook_product_index,
    };

    fn set(g: &Graph, v: &[usize]) -> VertexSet {
        VertexSet::from_indices(g, v.iter().copied()).unwrap()
    }

    #[test]
    fn dominating_examples() {
        for n in 1..6 {
            let k = complete(n);
            assert!(is_dominating(&k, &set(&k, &[0])).unwrap());
        }
        let p5 = path(5);
        assert!(!is_dominating(&p5, &set(&p5, &[0, 4])).unwrap());
        let g = multiway_direct_complete(&[4, 4, 4]).unwrap();
        assert!(is_dominating(&g, &set(&g, &[0, 21, 42, 63])).unwrap());
        assert!(is_dominating(&p5, &VertexSet::full(&complete(5))).is_err());
    }

    #[test]
    fn total_examples() {
        let p3 = path(3);
        assert!(!is_total_dominating(&p3, &set(&p3, &[1])).unwrap());
        assert!(is_total_dominating(&p3, &set(&p3, &[0, 1])).unwrap());
        let c6 = cycle(6);
        assert!(is_total_dominating(&c6, &set(&c6, &[0, 1, 3, 4])).unwrap());
        assert!(!is_total_dominating(&c6, &set(&c6, &[0, 3])).unwrap());
    }

    #[test]
    fn paired_examples() {
        let c4 = cycle(4);
        assert!(is_paired_dominating(&c4, &set(&c4, &[0, 1])).unwrap());
        let g = multiway_direct_complete(&[4, 4, 4]).unwrap();
        assert!(is_paired_dominating(&g, &set(&g, &[0, 21, 42, 63])).unwrap());
        let s = star(5);
        assert!(is_paired_dominating(&s, &set(&s, &[0, 3])).unwrap());
        assert!(!is_paired_dominating(&s, &set(&s, &[1, 2])).unwrap());
        // dominating, even, but the induced graph has no perfect matching
        let p4 = path(4);
        assert!(!is_paired_dominating(&p4, &set(&p4, &[0, 3])).unwrap());
    }

    #[test]
    fn minimal_examples() {
        for n in 3..7 {
            let k = complete(n);
            let s = set(&k, &[0]);
            assert!(is_minimal_dominating(&k, &s).unwrap());
            assert_eq!(private_neighbors(&k, &s, 0).unwrap().len(), n);
            let s2 = set(&k, &[0, 1]);
            assert!(!is_minimal_dominating(&k, &s2).unwrap());
            assert!(private_neighbors(&k, &s2, 0).unwrap().is_empty());
            assert!(private_neighbors(&k, &s2, 2).is_err());
        }
    }

    #[test]
    fn rook_class_is_minimal_with_corresponding_private_neighbors() {
        for n in 3..=8 {
            let gn = crate::families::rook2xn(n);
            let (p, _) = direct_product(&gn, &gn).unwrap();
            let n00 = rook_product_class(&p, n, 0, 0).unwrap();
            assert!(is_minimal_dominating(&p, &n00).unwrap(), "n = {n}");
            for b in 0..n {
                for d in 0..n {
                    let v = rook_product_index(n, 0, b, 0, d);
                    let pn = private_neighbors(&p, &n00, v).unwrap();
                    assert!(pn.contains(rook_product_index(n, 1, b, 1, d)));
                }
            }
        }
    }

    #[test]
    fn packing_examples() {
        let p7 = path(7);
        assert!(is_k_packing(&p7, &set(&p7, &[0, 4]), 3).unwrap());
        assert!(!is_k_packing(&p7, &set(&p7, &[0, 3]), 3).unwrap());
        assert!(is_k_packing(&p7, &set(&p7, &[0, 3]), 2).unwrap());
        assert!(is_independent(&p7, &set(&p7, &[0, 2, 4, 6])).unwrap());
        let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(is_k_packing(&two, &set(&two, &[0, 2]), 5).unwrap());
    }
}
