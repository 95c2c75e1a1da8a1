//! Builders for the graph families: the iterated blow-up of `C5`, circulant
//! threshold graphs, the doubling map, random joins and the tower built on
//! the `K_{n,n} ⊕ K̄_{n,n}` example.

mod seed;

use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{check_isomorphism_witness, check_order, circulant, CirculantParam, Graph, GraphBuilder, Permutation};

pub use seed::{Seed, DEFAULT_SEED};
use seed::Coins;

/// Substream tags. A join draws its cross edges from `derive(CROSS)` and
/// builds its operands from `derive(LEFT)` and `derive(RIGHT)`.
const CROSS: u64 = 0;
const LEFT: u64 = 1;
const RIGHT: u64 = 2;

/// `C5` on `0..5` with edges `i ~ i+1 (mod 5)`.
pub fn five_cycle() -> Graph {
    Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).expect("C5")
}

/// `G_1 = C5`; `G_{k+1}` is the 5-blow-up of `G_k` with the cycle
/// `5v, 5v+1, .., 5v+4` added inside the clone class of every vertex `v`.
pub fn iterated_blowup(level: u32) -> Result<Graph> {
    if level == 0 {
        return Err(Error::InvalidParameter("blow-up level must be at least 1".into()));
    }
    check_order(5u128.checked_pow(level).unwrap_or(u128::MAX))?;
    let mut g = five_cycle();
    for _ in 1..level {
        let mut b = g.blow_up(5)?.to_builder();
        for v in 0..g.order() {
            for i in 0..5 {
                b.set(5 * v + i, 5 * v + (i + 1) % 5);
            }
        }
        g = b.build();
    }
    Ok(g)
}

/// `f(G)`: two copies `v_i = i`, `v'_i = n + i` of `G`, plus `v_i ~ v'_j`
/// for every `i != j` with `u_i`, `u_j` non-adjacent in `G`.
pub fn doubled(g: &Graph) -> Result<Graph> {
    let n = g.order();
    if n == 0 {
        return Err(Error::InvalidParameter("doubling needs at least one vertex".into()));
    }
    let mut b = GraphBuilder::new(check_order(2 * n as u128)?)?;
    b.place(g, 0);
    b.place(g, n);
    for i in 0..n {
        for j in 0..n {
            if i != j && !g.adjacent(i, j) {
                b.set(i, n + j);
            }
        }
    }
    Ok(b.build())
}

/// `G1 ⊕ G2`: disjoint union plus every cross pair `(x, y)`, visited with
/// `x` outer and `y` inner, joined on a fair coin from `seed`.
pub fn random_join(g1: &Graph, g2: &Graph, seed: Seed) -> Result<Graph> {
    let (n1, n2) = (g1.order(), g2.order());
    if n1 != n2 {
        return Err(Error::SizeMismatch { expected: n1, found: n2 });
    }
    let mut b = GraphBuilder::new(check_order((n1 + n2) as u128)?)?;
    b.place(g1, 0);
    b.place(g2, n1);
    let mut coins = Coins::new(seed);
    for x in 0..n1 {
        for y in 0..n2 {
            if coins.flip() {
                b.set(x, n1 + y);
            }
        }
    }
    Ok(b.build())
}

/// `K_{n,n}` with sides `0..n` and `n..2n`.
pub fn complete_bipartite(n: usize) -> Result<Graph> {
    Graph::complete(2)?.blow_up(n)
}

/// `K_{n,n} ⊕ K̄_{n,n}` on `4n` vertices: the bipartite block on `0..2n`,
/// two disjoint `K_n` on `2n..4n`.
pub fn cgw(n: usize, seed: Seed) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("cgw needs n >= 1".into()));
    }
    check_order(4 * n as u128)?;
    let block = complete_bipartite(n)?;
    random_join(&block, &block.complement(), seed)
}

/// `G_1 = cgw(n)`, `G_{l+1} = G_l ⊕ G_l` with independently randomised
/// operands. Block `i` occupies `2n·i .. 2n·(i+1)` and is `K_{n,n}` for even
/// `i`, its complement for odd `i`.
pub fn oplus_tower(level: u32, n: usize, seed: Seed) -> Result<Graph> {
    if level == 0 || n == 0 {
        return Err(Error::InvalidParameter("tower needs level >= 1 and n >= 1".into()));
    }
    let blocks = 1u128.checked_shl(level).filter(|&b| b <= u64::MAX as u128).unwrap_or(u128::MAX);
    check_order((2 * n as u128).saturating_mul(blocks))?;
    if level == 1 {
        return cgw(n, seed);
    }
    let left = oplus_tower(level - 1, n, seed.derive(LEFT))?;
    let right = oplus_tower(level - 1, n, seed.derive(RIGHT))?;
    random_join(&left, &right, seed.derive(CROSS))
}

/// `G(n, 1/2)`: pairs `i < j` in lexicographic order, one coin each.
pub fn random_graph(n: usize, seed: Seed) -> Result<Graph> {
    let mut b = GraphBuilder::new(n)?;
    let mut coins = Coins::new(seed);
    for i in 0..n {
        for j in i + 1..n {
            if coins.flip() {
                b.set(i, j);
            }
        }
    }
    Ok(b.build())
}

/// `G(n, p)`: pairs `i < j` in lexicographic order, each kept when a uniform
/// draw from `[0, 1)` falls below `p`.
pub fn gnp(n: usize, p: f64, seed: Seed) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("edge probability {p} outside [0, 1]")));
    }
    let mut b = GraphBuilder::new(n)?;
    let mut rng = seed.rng();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen::<f64>() < p {
                b.set(i, j);
            }
        }
    }
    Ok(b.build())
}

/// Candidate anti-isomorphism of the level-`level` blow-up: every base-5
/// digit of a vertex index is mapped by `d -> 2d mod 5`. Returns the map and
/// whether it carries the graph onto its complement.
pub fn selfcomp_witness_blowup(level: u32) -> Result<(Permutation, bool)> {
    let g = iterated_blowup(level)?;
    let image = (0..g.order())
        .map(|mut x| {
            let (mut out, mut place) = (0, 1);
            for _ in 0..level {
                out += (2 * (x % 5) % 5) * place;
                x /= 5;
                place *= 5;
            }
            out
        })
        .collect();
    let p = Permutation::new(image)?;
    let ok = check_isomorphism_witness(&g, &p, true)?;
    Ok((p, ok))
}

/// One graph family member, described declaratively.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Construction {
    IteratedBlowup { level: u32 },
    Circulant { k: usize, r: CirculantParam },
    Doubled { inner: Box<Construction> },
    RandomJoin { left: Box<Construction>, right: Box<Construction> },
    CgwBase { n: usize },
    OplusTower { level: u32, n: usize },
    /// `G(n, 1/2)`.
    Random { n: usize },
    Complete { n: usize },
}

impl Construction {
    pub fn build(&self, seed: Seed) -> Result<Graph> {
        match self {
            Construction::IteratedBlowup { level } => iterated_blowup(*level),
            Construction::Circulant { k, r } => circulant(*k, *r),
            Construction::Doubled { inner } => doubled(&inner.build(seed)?),
            Construction::RandomJoin { left, right } => random_join(
                &left.build(seed.derive(LEFT))?,
                &right.build(seed.derive(RIGHT))?,
                seed.derive(CROSS),
            ),
            Construction::CgwBase { n } => cgw(*n, seed),
            Construction::OplusTower { level, n } => oplus_tower(*level, *n, seed),
            Construction::Random { n } => random_graph(*n, seed),
            Construction::Complete { n } => Graph::complete(*n),
        }
    }

    /// Whether the built graph depends on the seed.
    pub fn is_random(&self) -> bool {
        match self {
            Construction::Doubled { inner } => inner.is_random(),
            Construction::RandomJoin { .. }
            | Construction::CgwBase { .. }
            | Construction::OplusTower { .. }
            | Construction::Random { .. } => true,
            _ => false,
        }
    }

    /// The family's size parameter (`k`, level or `n`), when it has one.
    pub fn size_parameter(&self) -> Option<u64> {
        match self {
            Construction::IteratedBlowup { level } => Some(*level as u64),
            Construction::Circulant { k, .. } => Some(*k as u64),
            Construction::Doubled { inner } => inner.size_parameter(),
            Construction::RandomJoin { .. } => None,
            Construction::CgwBase { n }
            | Construction::OplusTower { n, .. }
            | Construction::Random { n }
            | Construction::Complete { n } => Some(*n as u64),
        }
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Construction::IteratedBlowup { level } => write!(f, "blowup(level={level})"),
            Construction::Circulant { k, r } => write!(f, "circulant(k={k};r={r})"),
            Construction::Doubled { inner } => write!(f, "doubled({inner})"),
            Construction::RandomJoin { left, right } => write!(f, "join({left};{right})"),
            Construction::CgwBase { n } => write!(f, "cgw(n={n})"),
            Construction::OplusTower { level, n } => write!(f, "tower(level={level};n={n})"),
            Construction::Random { n } => write!(f, "gnp(n={n};p=1/2)"),
            Construction::Complete { n } => write!(f, "complete(n={n})"),
        }
    }
}

/// A construction together with the master seed it is built from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionSpec {
    pub construction: Construction,
    pub seed: Seed,
}

impl ConstructionSpec {
    pub fn new(construction: Construction, seed: Seed) -> Self {
        Self { construction, seed }
    }

    pub fn build(&self) -> Result<Graph> {
        self.construction.build(self.seed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("spec serialises")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidParameter(format!("construction spec: {e}")))
    }
}

impl fmt::Display for ConstructionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.construction.is_random() {
            write!(f, "{}@seed={}", self.construction, self.seed.0)
        } else {
            write!(f, "{}", self.construction)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::profile3_brute;

    /// Adjacency in the level-`level` blow-up read off base-5 digits: the
    /// most significant differing digits must be adjacent in `C5`.
    fn blowup_by_digits(level: u32) -> Graph {
        let n = 5usize.pow(level);
        let mut edges = Vec::new();
        for x in 0..n {
            for y in x + 1..n {
                let mut place = n / 5;
                while (x / place) % 5 == (y / place) % 5 {
                    place /= 5;
                }
                let diff = ((x / place) % 5 + 5 - (y / place) % 5) % 5;
                if diff == 1 || diff == 4 {
                    edges.push((x, y));
                }
            }
        }
        Graph::from_edge_list(n, &edges).unwrap()
    }

    #[test]
    fn blowup_levels() {
        assert_eq!(iterated_blowup(1).unwrap(), five_cycle());
        for level in 1..=3 {
            let g = iterated_blowup(level).unwrap();
            assert_eq!(g, blowup_by_digits(level));
            let n = g.order();
            assert_eq!(n, 5usize.pow(level));
            assert!(g.degrees().iter().all(|&d| d == n / 2));
        }
        assert!(iterated_blowup(0).is_err());
        assert!(matches!(iterated_blowup(7), Err(Error::Overflow { .. })));
    }

    #[test]
    fn doubled_examples() {
        let m = doubled(&Graph::empty(2).unwrap()).unwrap();
        assert_eq!(m, Graph::from_edge_list(4, &[(0, 3), (1, 2)]).unwrap());
        let k3 = Graph::complete(3).unwrap();
        let h = doubled(&k3).unwrap();
        assert_eq!(h.edge_count(), 6);
        assert_eq!(profile3_brute(&h).unwrap().counts[3], 2);
        let k1 = doubled(&Graph::empty(1).unwrap()).unwrap();
        assert_eq!((k1.order(), k1.edge_count()), (2, 0));
        assert!(doubled(&Graph::empty(0).unwrap()).is_err());
    }

    #[test]
    fn random_join_structure() {
        let k2 = Graph::complete(2).unwrap();
        let e2 = Graph::empty(2).unwrap();
        let a = random_join(&k2, &e2, Seed(5)).unwrap();
        assert_eq!(a, random_join(&k2, &e2, Seed(5)).unwrap());
        assert!(a.adjacent(0, 1) && !a.adjacent(2, 3));
        assert!(matches!(random_join(&k2, &Graph::empty(3).unwrap(), Seed(0)), Err(Error::SizeMismatch { .. })));
    }

    #[test]
    fn cross_edges_concentrate() {
        let n = 500;
        let g1 = Graph::empty(n).unwrap();
        for seed in [0, 1, 2] {
            let g = random_join(&g1, &g1, Seed(seed)).unwrap();
            let cross = g.edge_count() as f64;
            let sigma = n as f64 / 2.0;
            assert!((cross - (n * n) as f64 / 2.0).abs() < 4.0 * sigma, "seed {seed}: {cross}");
        }
    }

    #[test]
    fn tower_base_case_and_blocks() {
        assert_eq!(oplus_tower(1, 3, Seed(9)).unwrap(), cgw(3, Seed(9)).unwrap());
        let g = oplus_tower(2, 50, Seed(4)).unwrap();
        assert_eq!(g.order(), 400);
        let kk = complete_bipartite(50).unwrap();
        for b in 0..4 {
            let block = g
                .induced(&crate::graph::VertexSet::new((100 * b..100 * (b + 1)).collect(), 400).unwrap())
                .unwrap();
            let expected = if b % 2 == 0 { kk.clone() } else { kk.complement() };
            assert_eq!(block, expected, "block {b}");
        }
        assert!(oplus_tower(0, 3, Seed(0)).is_err());
        assert!(matches!(oplus_tower(40, 3, Seed(0)), Err(Error::Overflow { .. })));
    }

    #[test]
    fn witness_lifts() {
        for level in 1..=3 {
            let (p, ok) = selfcomp_witness_blowup(level).unwrap();
            assert_eq!(p.len(), 5usize.pow(level));
            assert!(ok, "level {level}");
        }
        let (p, _) = selfcomp_witness_blowup(1).unwrap();
        assert_eq!(p.image(), &[0, 2, 4, 1, 3]);
    }

    #[test]
    fn gnp_extremes() {
        assert_eq!(gnp(9, 0.0, Seed(4)).unwrap(), Graph::empty(9).unwrap());
        assert_eq!(gnp(9, 1.0, Seed(4)).unwrap(), Graph::complete(9).unwrap());
        assert_eq!(gnp(30, 0.3, Seed(4)).unwrap(), gnp(30, 0.3, Seed(4)).unwrap());
        assert!(gnp(3, 1.5, Seed(4)).is_err());
    }

    #[test]
    fn spec_json_round_trip() {
        let spec = ConstructionSpec::new(
            Construction::Doubled {
                inner: Box::new(Construction::Circulant { k: 100, r: CirculantParam::OPTIMAL }),
            },
            Seed(3),
        );
        let json = spec.to_json();
        assert_eq!(
            json,
            r#"{"construction":{"kind":"doubled","inner":{"kind":"circulant","k":100,"r":{"form":"surd","a":6,"b":2,"c":3}}},"seed":3}"#
        );
        assert_eq!(ConstructionSpec::from_json(&json).unwrap(), spec);
        assert_eq!(spec.build().unwrap().order(), 200);
        assert_eq!(spec.to_string(), "doubled(circulant(k=100;r=6+2sqrt3))");
        assert!(ConstructionSpec::from_json("{}").is_err());
    }
}
