//! Constructors for the graph families used throughout the crate, seeded
//! random generators, and the textual [`FamilySpec`] naming a construction.
//!
//! Labels: `K_n`, `P_n` and `C_n` use `0..n` along the obvious order; the
//! star `K_{1,n}` has center 0; every other constructor documents its own.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::products::{cartesian_product, direct_product, multiway_direct_complete};

pub fn complete(n: usize) -> Graph {
    Graph::from_fn(n, |_, _| true)
}

pub fn path(n: usize) -> Graph {
    Graph::from_fn(n, |u, v| v == u + 1)
}

/// Panics if `n < 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    Graph::from_fn(n, |u, v| v == u + 1 || (u == 0 && v == n - 1))
}

/// `K_{1,n}`: center 0, leaves `1..=n`.
pub fn star(n: usize) -> Graph {
    Graph::from_fn(n + 1, |u, _| u == 0)
}

/// The star `K_{1,n}` with every edge subdivided once.
///
/// Center 0, midpoints `1..=n`, leaves `n+1..=2n`; leaf `i` hangs off midpoint `i - n`.
pub fn subdivided_star(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::domain("subdivided star needs n >= 1"));
    }
    let edges = (1..=n).flat_map(|i| [(0, i), (i, i + n)]);
    Graph::from_edges(2 * n + 1, edges)
}

/// `G` with a path on `ell` vertices joined to `anchor` by a bridge.
///
/// Path vertices are `n..n+ell` in order along the path; the bridge joins
/// `anchor` to `n`. `ell = 0` returns `G` unchanged.
pub fn lollipop(g: &Graph, ell: usize, anchor: usize) -> Result<Graph> {
    let n = g.order();
    if anchor >= n {
        return Err(Error::Index {
            index: anchor,
            order: n,
        });
    }
    if ell == 0 {
        return Ok(g.clone());
    }
    let tail = std::iter::once((anchor, n)).chain((n..n + ell - 1).map(|v| (v, v + 1)));
    Graph::from_edges(n + ell, g.edges().chain(tail))
}

/// Hangs a `K_2` off every vertex of `G` through a bridge.
///
/// Original vertices keep `0..n`; for each `v`, `y_v = n + 2v` is joined to
/// `v` and the new leaf `x_v = n + 2v + 1` is joined to `y_v`.
pub fn pendant_pairs(g: &Graph) -> Graph {
    let n = g.order();
    let extra = (0..n).flat_map(|v| [(v, n + 2 * v), (n + 2 * v, n + 2 * v + 1)]);
    Graph::from_edges(3 * n, g.edges().chain(extra)).expect("labels in range")
}

/// The 2 × n rook graph `K_2 □ K_n`; vertex `(a, b)` is `a·n + b`.
pub fn rook2xn(n: usize) -> Graph {
    cartesian_product(&complete(2), &complete(n))
        .expect("rook graph within cap")
        .0
}

fn is_prime(p: usize) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// `(K_{p_1} × … × K_{p_t})` with a path of `ell` vertices attached at vertex 0.
pub fn cayleypop(primes: &[usize], ell: usize) -> Result<Graph> {
    if primes.is_empty() {
        return Err(Error::domain("need at least one prime"));
    }
    let distinct: BTreeSet<_> = primes.iter().collect();
    if distinct.len() != primes.len() {
        return Err(Error::domain("cayleypop orders must be distinct primes"));
    }
    if let Some(p) = primes.iter().find(|&&p| !is_prime(p)) {
        return Err(Error::domain(format!("{p} is not prime")));
    }
    lollipop(&multiway_direct_complete(primes)?, ell, 0)
}

/// Decodes a Prüfer sequence over `0..seq.len()+2` into its labeled tree.
pub fn prufer_decode(seq: &[usize]) -> Result<Graph> {
    let n = seq.len() + 2;
    if let Some(&bad) = seq.iter().find(|&&x| x >= n) {
        return Err(Error::Index {
            index: bad,
            order: n,
        });
    }
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = leaves.pop_first().expect("a tree always has a leaf");
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.insert(x);
        }
    }
    let last: Vec<usize> = leaves.into_iter().collect();
    edges.push((last[0], last[1]));
    Graph::from_edges(n, edges)
}

/// Uniform random labeled tree on `n` vertices (uniform Prüfer sequence).
pub fn random_tree(n: usize, seed: u64) -> Graph {
    match n {
        0 | 1 => Graph::empty(n),
        2 => path(2),
        _ => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            prufer_decode(&seq).expect("sequence in range")
        }
    }
}

/// Erdős-Rényi `G(n, p)`: each pair `u < v` in lexicographic order gets one coin flip.
pub fn random_graph(n: usize, edge_prob: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&edge_prob) {
        return Err(Error::domain(format!(
            "edge probability {edge_prob} outside [0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(Graph::from_fn(n, |_, _| rng.gen_bool(edge_prob)))
}

/// Canonical string of a tree up to isomorphism (AHU encoding at the center).
pub fn tree_canonical_form(t: &Graph) -> String {
    fn encode(t: &Graph, v: usize, parent: Option<usize>) -> String {
        let mut kids: Vec<String> = t
            .nbrs(v)
            .iter()
            .filter(|&u| Some(u) != parent)
            .map(|u| encode(t, u, Some(v)))
            .collect();
        kids.sort();
        format!("({})", kids.concat())
    }
    let n = t.order();
    if n == 0 {
        return String::new();
    }
    // peel leaves to find the center(s)
    let mut degree: Vec<usize> = (0..n).map(|v| t.nbrs(v).len()).collect();
    let mut alive = n;
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut removed = vec![false; n];
    while alive > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            alive -= 1;
            for u in t.nbrs(v).iter() {
                if !removed[u] {
                    degree[u] -= 1;
                    if degree[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        layer = next;
    }
    (0..n)
        .filter(|&v| !removed[v])
        .map(|c| encode(t, c, None))
        .min()
        .unwrap_or_default()
}

/// One Prüfer code per isomorphism class of trees on `n >= 2` vertices,
/// ordered by the canonical form of the decoded tree. Practical for `n <= 9`.
pub fn all_tree_codes(n: usize) -> Vec<Vec<usize>> {
    if n <= 2 {
        return vec![Vec::new()];
    }
    let len = n - 2;
    let mut out = std::collections::BTreeMap::new();
    let mut seq = vec![0usize; len];
    loop {
        let t = prufer_decode(&seq).expect("in range");
        out.entry(tree_canonical_form(&t))
            .or_insert_with(|| seq.clone());
        let mut i = 0;
        loop {
            if i == len {
                return out.into_values().collect();
            }
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
            i += 1;
        }
    }
}

/// One representative per isomorphism class of trees on `n` vertices,
/// ordered by canonical form. Practical for `n <= 9`.
pub fn all_trees(n: usize) -> Vec<Graph> {
    if n < 2 {
        return vec![Graph::empty(n)];
    }
    all_tree_codes(n)
        .iter()
        .map(|c| prufer_decode(c).expect("in range"))
        .collect()
}

/// Declarative name of a constructed graph; see the crate README for the grammar.
#[derive(Debug, Clone, PartialEq)]
pub enum FamilySpec {
    Complete(usize),
    Path(usize),
    Cycle(usize),
    Star(usize),
    SubdividedStar(usize),
    Rook2xn(usize),
    CompleteProduct(Vec<usize>),
    Lollipop {
        base: Box<FamilySpec>,
        ell: usize,
        anchor: usize,
    },
    PendantPairs(Box<FamilySpec>),
    Cayleypop {
        primes: Vec<usize>,
        ell: usize,
    },
    RandomTree {
        n: usize,
        seed: u64,
    },
    /// Labeled tree decoded from a Prüfer code.
    Prufer(Vec<usize>),
    RandomGraph {
        n: usize,
        edge_prob: f64,
        seed: u64,
    },
    Direct(Box<FamilySpec>, Box<FamilySpec>),
    Cartesian(Box<FamilySpec>, Box<FamilySpec>),
}

impl FamilySpec {
    /// Builds the graph; its label is the canonical spec string.
    pub fn build(&self) -> Result<Graph> {
        use FamilySpec::*;
        let g = match self {
            Complete(n) => complete(*n),
            Path(n) => path(*n),
            Cycle(n) => {
                if *n < 3 {
                    return Err(Error::domain("cycle needs at least 3 vertices"));
                }
                cycle(*n)
            }
            Star(n) => star(*n),
            SubdividedStar(n) => subdivided_star(*n)?,
            Rook2xn(n) => {
                if *n < 1 {
                    return Err(Error::domain("rook2xn needs n >= 1"));
                }
                rook2xn(*n)
            }
            CompleteProduct(orders) => multiway_direct_complete(orders)?,
            Lollipop { base, ell, anchor } => lollipop(&base.build()?, *ell, *anchor)?,
            PendantPairs(base) => pendant_pairs(&base.build()?),
            Cayleypop { primes, ell } => cayleypop(primes, *ell)?,
            RandomTree { n, seed } => {
                if *n < 1 {
                    return Err(Error::domain("random_tree needs n >= 1"));
                }
                random_tree(*n, *seed)
            }
            RandomGraph { n, edge_prob, seed } => random_graph(*n, *edge_prob, *seed)?,
            Prufer(code) => prufer_decode(code)?,
            Direct(a, b) => direct_product(&a.build()?, &b.build()?)?.0,
            Cartesian(a, b) => cartesian_product(&a.build()?, &b.build()?)?.0,
        };
        Ok(g.with_label(self.to_string()))
    }

    pub fn family_name(&self) -> &'static str {
        use FamilySpec::*;
        match self {
            Complete(_) => "complete",
            Path(_) => "path",
            Cycle(_) => "cycle",
            Star(_) => "star",
            SubdividedStar(_) => "subdivided_star",
            Rook2xn(_) => "rook2xn",
            CompleteProduct(_) => "complete_product",
            Lollipop { .. } => "lollipop",
            PendantPairs(_) => "pendant_pairs",
            Cayleypop { .. } => "cayleypop",
            Prufer(_) => "prufer",
            RandomTree { .. } => "random_tree",
            RandomGraph { .. } => "random_graph",
            Direct(..) => "direct",
            Cartesian(..) => "cartesian",
        }
    }
}

fn join<T: fmt::Display>(xs: &[T]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        let name = self.family_name();
        match self {
            Complete(n) | Path(n) | Cycle(n) | Star(n) | SubdividedStar(n) | Rook2xn(n) => {
                write!(f, "{name}:{n}")
            }
            CompleteProduct(orders) => write!(f, "{name}:{}", join(orders)),
            Lollipop { base, ell, anchor } => write!(f, "{name}({base}):{ell}@{anchor}"),
            PendantPairs(base) => write!(f, "{name}({base})"),
            Cayleypop { primes, ell } => write!(f, "{name}[{}]:{ell}", join(primes)),
            Prufer(code) => write!(f, "{name}[{}]", join(code)),
            RandomTree { n, seed } => write!(f, "{name}:{n}#{seed}"),
            RandomGraph { n, edge_prob, seed } => write!(f, "{name}:{n},{edge_prob}#{seed}"),
            Direct(a, b) | Cartesian(a, b) => write!(f, "{name}({a},{b})"),
        }
    }
}

/// Raw pieces of one spec term before arity checking.
#[derive(Default)]
struct Term {
    name: String,
    args: Vec<FamilySpec>,
    list: Option<Vec<usize>>,
    params: Vec<String>,
    anchor: Option<usize>,
    seed: Option<u64>,
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::domain(format!(
            "bad family spec {:?} at offset {}: {msg}",
            self.src, self.pos
        ))
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if !pred(c) {
                break;
            }
            self.pos += c.len_utf8();
        }
        &self.src[start..self.pos]
    }

    fn int<T: FromStr>(&mut self) -> Result<T> {
        let s = self.take_while(|c| c.is_ascii_digit());
        s.parse().map_err(|_| self.err("expected an integer"))
    }

    fn ints(&mut self) -> Result<Vec<usize>> {
        let mut v = vec![self.int()?];
        while self.eat(',') {
            v.push(self.int()?);
        }
        Ok(v)
    }

    fn spec(&mut self) -> Result<FamilySpec> {
        let mut t = Term {
            name: self
                .take_while(|c| c.is_ascii_alphanumeric() || c == '_')
                .to_string(),
            ..Term::default()
        };
        if t.name.is_empty() {
            return Err(self.err("expected a family name"));
        }
        if self.eat('(') {
            t.args.push(self.spec()?);
            while self.eat(',') {
                t.args.push(self.spec()?);
            }
            if !self.eat(')') {
                return Err(self.err("expected ')'"));
            }
        }
        if self.eat('[') {
            t.list = Some(if self.peek() == Some(']') {
                Vec::new()
            } else {
                self.ints()?
            });
            if !self.eat(']') {
                return Err(self.err("expected ']'"));
            }
        }
        if self.eat(':') {
            loop {
                let p = self.take_while(|c| c.is_ascii_digit() || c == '.' || c == 'e' || c == '-');
                if p.is_empty() {
                    return Err(self.err("expected a parameter"));
                }
                t.params.push(p.to_string());
                // a comma followed by a name separates nested specs instead
                let next = self.src[self.pos..].chars().nth(1);
                if self.peek() != Some(',') || !next.is_some_and(|c| c.is_ascii_digit() || c == '.')
                {
                    break;
                }
                self.eat(',');
            }
        }
        if self.eat('@') {
            t.anchor = Some(self.int()?);
        }
        if self.eat('#') {
            t.seed = Some(self.int()?);
        }
        self.term(t)
    }

    fn term(&self, t: Term) -> Result<FamilySpec> {
        use FamilySpec::*;
        let ints = |k: usize| -> Result<Vec<usize>> {
            if t.params.len() != k {
                return Err(self.err(&format!("{} takes {k} parameter(s)", t.name)));
            }
            t.params
                .iter()
                .map(|p| {
                    p.parse()
                        .map_err(|_| self.err("expected an integer parameter"))
                })
                .collect()
        };
        let plain = |what: &str| -> Result<()> {
            let extra = !t.args.is_empty() && what != "args"
                || t.list.is_some() && what != "list"
                || t.anchor.is_some() && what != "anchor"
                || t.seed.is_some() && what != "seed";
            if extra {
                Err(self.err(&format!("unexpected modifiers for {}", t.name)))
            } else {
                Ok(())
            }
        };
        let one_arg = |k: usize| -> Result<Vec<FamilySpec>> {
            if t.args.len() != k {
                return Err(self.err(&format!("{} takes {k} nested spec(s)", t.name)));
            }
            Ok(t.args.clone())
        };
        let spec = match t.name.as_str() {
            "complete" | "path" | "cycle" | "star" | "subdivided_star" | "rook2xn" => {
                plain("")?;
                let n = ints(1)?[0];
                match t.name.as_str() {
                    "complete" => Complete(n),
                    "path" => Path(n),
                    "cycle" => Cycle(n),
                    "star" => Star(n),
                    "subdivided_star" => SubdividedStar(n),
                    _ => Rook2xn(n),
                }
            }
            "complete_product" => {
                plain("")?;
                if t.params.is_empty() {
                    return Err(self.err("complete_product needs orders"));
                }
                CompleteProduct(ints(t.params.len())?)
            }
            "lollipop" => {
                if t.list.is_some() || t.seed.is_some() {
                    return Err(self.err("unexpected modifiers for lollipop"));
                }
                let base = one_arg(1)?.remove(0);
                Lollipop {
                    base: Box::new(base),
                    ell: ints(1)?[0],
                    anchor: t.anchor.unwrap_or(0),
                }
            }
            "pendant_pairs" => {
                plain("args")?;
                ints(0)?;
                PendantPairs(Box::new(one_arg(1)?.remove(0)))
            }
            "cayleypop" => {
                plain("list")?;
                let primes = t
                    .list
                    .clone()
                    .ok_or_else(|| self.err("cayleypop needs [primes]"))?;
                let ell = if t.params.is_empty() { 0 } else { ints(1)?[0] };
                Cayleypop { primes, ell }
            }
            "prufer" => {
                plain("list")?;
                ints(0)?;
                Prufer(
                    t.list
                        .clone()
                        .ok_or_else(|| self.err("prufer needs [code]"))?,
                )
            }
            "random_tree" => {
                plain("seed")?;
                let seed = t.seed.ok_or_else(|| self.err("random_tree needs #seed"))?;
                RandomTree {
                    n: ints(1)?[0],
                    seed,
                }
            }
            "random_graph" => {
                plain("seed")?;
                let seed = t.seed.ok_or_else(|| self.err("random_graph needs #seed"))?;
                if t.params.len() != 2 {
                    return Err(self.err("random_graph takes n,p"));
                }
                let n = t.params[0]
                    .parse()
                    .map_err(|_| self.err("expected an integer order"))?;
                let edge_prob = t.params[1]
                    .parse()
                    .map_err(|_| self.err("expected an edge probability"))?;
                RandomGraph { n, edge_prob, seed }
            }
            "direct" | "cartesian" => {
                plain("args")?;
                ints(0)?;
                let mut args = one_arg(2)?;
                let b = Box::new(args.pop().expect("two args"));
                let a = Box::new(args.pop().expect("two args"));
                if t.name == "direct" {
                    Direct(a, b)
                } else {
                    Cartesian(a, b)
                }
            }
            other => return Err(self.err(&format!("unknown family {other:?}"))),
        };
        Ok(spec)
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<FamilySpec> {
        let mut p = Parser {
            src: s.trim(),
            pos: 0,
        };
        let spec = p.spec()?;
        if p.pos != p.src.len() {
            return Err(p.err("trailing input"));
        }
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Distance;

    #[test]
    fn subdivided_star_shape() {
        assert_eq!(subdivided_star(1).unwrap(), path(3));
        let s3 = subdivided_star(3).unwrap();
        let mut deg: Vec<usize> = (0..7).map(|v| s3.degree(v).unwrap()).collect();
        deg.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(deg, vec![3, 2, 2, 2, 1, 1, 1]);
        assert!(subdivided_star(0).is_err());
        for n in 1..6 {
            let s = subdivided_star(n).unwrap();
            assert!(s.is_connected());
            assert_eq!(s.edge_count(), 2 * n);
        }
    }

    #[test]
    fn lollipop_fig1_left() {
        let g = lollipop(&complete(6), 2, 0).unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.edge_count(), 15 + 2);
        assert!(g.has_edge(0, 6) && g.has_edge(6, 7));
        assert_eq!(lollipop(&complete(6), 0, 0).unwrap(), complete(6));
        assert!(matches!(
            lollipop(&complete(3), 1, 3),
            Err(Error::Index { .. })
        ));
    }

    #[test]
    fn lollipop_diameter_by_bfs() {
        for d in 1..=4 {
            let g = lollipop(&complete(5), d, 0).unwrap();
            // independent BFS from the path tip
            let tip = g.order() - 1;
            let mut dist = vec![usize::MAX; g.order()];
            dist[tip] = 0;
            let mut queue = std::collections::VecDeque::from([tip]);
            while let Some(u) = queue.pop_front() {
                for (a, b) in g.edges() {
                    for (x, y) in [(a, b), (b, a)] {
                        if x == u && dist[y] == usize::MAX {
                            dist[y] = dist[u] + 1;
                            queue.push_back(y);
                        }
                    }
                }
            }
            let ecc = *dist.iter().max().unwrap();
            assert_eq!(ecc, d + 1);
            assert_eq!(g.diameter(), Distance::Finite(d + 1));
        }
    }

    #[test]
    fn pendant_pairs_examples() {
        assert_eq!(pendant_pairs(&complete(1)), path(3));
        let h = pendant_pairs(&complete(3));
        assert_eq!(h.order(), 9);
        assert_eq!(h.edge_count(), 3 + 6);
        assert!(h.has_edge(1, 5) && h.has_edge(5, 6));
    }

    #[test]
    fn rook_small() {
        assert_eq!(rook2xn(2), cycle(4).relabeled(&[0, 1, 3, 2]).unwrap());
    }

    #[test]
    fn cayleypop_examples() {
        let fig1 = cayleypop(&[2, 5], 3).unwrap();
        assert_eq!(fig1.order(), 13);
        let k3p = cayleypop(&[3], 1).unwrap();
        assert_eq!(
            k3p,
            Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap()
        );
        assert!(cayleypop(&[3, 3], 0).is_err());
        assert!(cayleypop(&[4], 0).is_err());
    }

    #[test]
    fn cayleypop_is_unitary_cayley_graph_under_crt() {
        // vertex (a, b) of K_2 × K_3 ↔ residue x mod 6 with x ≡ a (2), x ≡ b (3)
        let g = cayleypop(&[2, 3], 0).unwrap();
        let crt = |x: usize| (x % 2) * 3 + x % 3;
        fn gcd(a: usize, b: usize) -> usize {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        for x in 0..6 {
            for y in 0..6 {
                if x != y {
                    let coprime = gcd((x + 6 - y) % 6, 6) == 1;
                    assert_eq!(g.has_edge(crt(x), crt(y)), coprime, "{x} {y}");
                }
            }
        }
    }

    #[test]
    fn random_generators() {
        for n in 1..15 {
            for seed in 0..5 {
                let t = random_tree(n, seed);
                assert_eq!(t.order(), n);
                assert_eq!(t.edge_count(), n - 1);
                assert!(t.is_connected());
                assert_eq!(t, random_tree(n, seed));
            }
        }
        assert_eq!(random_graph(8, 0.0, 3).unwrap().edge_count(), 0);
        assert_eq!(random_graph(8, 1.0, 3).unwrap(), complete(8));
        assert_eq!(
            random_graph(9, 0.4, 11).unwrap(),
            random_graph(9, 0.4, 11).unwrap()
        );
        assert!(random_graph(3, 1.5, 0).is_err());
    }

    #[test]
    fn prufer_known() {
        // sequence [3, 3, 3] on 5 vertices is the star centered at 3
        let t = prufer_decode(&[3, 3, 3]).unwrap();
        assert_eq!(t.degree(3).unwrap(), 4);
    }

    #[test]
    fn tree_counts() {
        let counts: Vec<usize> = (1..=8).map(|n| all_trees(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23]);
    }

    #[test]
    fn spec_strings() {
        for s in [
            "rook2xn:5",
            "lollipop(complete:6):2@0",
            "cayleypop[2,5]:3",
            "random_tree:9#42",
            "random_graph:10,0.35#7",
            "pendant_pairs(complete:3)",
            "complete_product:4,4,4",
            "direct(path:3,cycle:5)",
            "cartesian(complete:2,complete:4)",
            "prufer[3,3,1]",
            "prufer[]",
            "direct(prufer[],lollipop(complete_product:4,4,4):1@0)",
        ] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
            spec.build().unwrap();
        }
        assert_eq!(
            "rook2xn:5"
                .parse::<FamilySpec>()
                .unwrap()
                .build()
                .unwrap()
                .order(),
            10
        );
        for bad in [
            "",
            "rook2xn",
            "nosuch:3",
            "random_tree:9",
            "path:3#1",
            "lollipop(path:3)",
            "path:3)",
        ] {
            assert!(bad.parse::<FamilySpec>().is_err(), "{bad}");
        }
        assert!("cycle:2".parse::<FamilySpec>().unwrap().build().is_err());
    }
}
