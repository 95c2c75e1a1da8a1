use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::{binomial, DensityVector};
use crate::error::{Error, Result};
use crate::exec::{self, Exec};
use crate::graph::{and_count, iter_bits, Graph};

/// The eleven isomorphism classes of graphs on four vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ClassId4 {
    #[serde(rename = "E4")]
    Empty,
    #[serde(rename = "K2+2I")]
    EdgePlusTwo,
    #[serde(rename = "2K2")]
    Matching,
    #[serde(rename = "P3+I")]
    CherryPlusOne,
    #[serde(rename = "K3+I")]
    TrianglePlusOne,
    #[serde(rename = "P4")]
    Path,
    #[serde(rename = "K13")]
    Claw,
    #[serde(rename = "C4")]
    Cycle,
    #[serde(rename = "TPLUS")]
    Paw,
    #[serde(rename = "K4MINUS")]
    Diamond,
    #[serde(rename = "K4")]
    Complete,
}

impl ClassId4 {
    pub const ALL: [ClassId4; 11] = [
        ClassId4::Empty,
        ClassId4::EdgePlusTwo,
        ClassId4::Matching,
        ClassId4::CherryPlusOne,
        ClassId4::TrianglePlusOne,
        ClassId4::Path,
        ClassId4::Claw,
        ClassId4::Cycle,
        ClassId4::Paw,
        ClassId4::Diamond,
        ClassId4::Complete,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            ClassId4::Empty => "E4",
            ClassId4::EdgePlusTwo => "K2+2I",
            ClassId4::Matching => "2K2",
            ClassId4::CherryPlusOne => "P3+I",
            ClassId4::TrianglePlusOne => "K3+I",
            ClassId4::Path => "P4",
            ClassId4::Claw => "K13",
            ClassId4::Cycle => "C4",
            ClassId4::Paw => "TPLUS",
            ClassId4::Diamond => "K4MINUS",
            ClassId4::Complete => "K4",
        }
    }

    /// The class of the complement.
    pub fn complement(self) -> ClassId4 {
        use ClassId4::*;
        match self {
            Empty => Complete,
            Complete => Empty,
            EdgePlusTwo => Diamond,
            Diamond => EdgePlusTwo,
            Matching => Cycle,
            Cycle => Matching,
            CherryPlusOne => Paw,
            Paw => CherryPlusOne,
            TrianglePlusOne => Claw,
            Claw => TrianglePlusOne,
            Path => Path,
        }
    }

    /// Edges of a representative on vertices `0..4`.
    pub fn edges(self) -> &'static [(usize, usize)] {
        use ClassId4::*;
        match self {
            Empty => &[],
            EdgePlusTwo => &[(0, 1)],
            Matching => &[(0, 1), (2, 3)],
            CherryPlusOne => &[(0, 1), (1, 2)],
            TrianglePlusOne => &[(0, 1), (1, 2), (0, 2)],
            Path => &[(0, 1), (1, 2), (2, 3)],
            Claw => &[(0, 1), (0, 2), (0, 3)],
            Cycle => &[(0, 1), (1, 2), (2, 3), (0, 3)],
            Paw => &[(0, 1), (1, 2), (0, 2), (2, 3)],
            Diamond => &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)],
            Complete => &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        }
    }

    pub fn representative(self) -> Graph {
        Graph::from_edge_list(4, self.edges()).expect("valid representative")
    }
}

impl fmt::Display for ClassId4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClassId4 {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ClassId4::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown 4-vertex class {s}")))
    }
}

/// Bit of pair `(i, j)`, `i < j`, in a labelled 4-vertex mask.
#[inline]
fn pair_bit(i: usize, j: usize) -> usize {
    j * (j - 1) / 2 + i
}

/// Classifies a labelled 4-vertex graph, given as six bits in column order
/// `01, 02, 12, 03, 13, 23`, by edge count and degree sequence.
pub fn classify4(mask: u8) -> ClassId4 {
    use ClassId4::*;
    let mut deg = [0u8; 4];
    for j in 1..4 {
        for i in 0..j {
            if mask >> pair_bit(i, j) & 1 == 1 {
                deg[i] += 1;
                deg[j] += 1;
            }
        }
    }
    deg.sort_unstable();
    match (mask.count_ones(), deg) {
        (0, _) => Empty,
        (1, _) => EdgePlusTwo,
        (2, [1, 1, 1, 1]) => Matching,
        (2, _) => CherryPlusOne,
        (3, [0, 2, 2, 2]) => TrianglePlusOne,
        (3, [1, 1, 1, 3]) => Claw,
        (3, _) => Path,
        (4, [2, 2, 2, 2]) => Cycle,
        (4, _) => Paw,
        (5, _) => Diamond,
        _ => Complete,
    }
}

/// Exact counts of the eleven induced 4-vertex classes, indexed by [`ClassId4`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Census4 {
    pub counts: [u64; 11],
}

impl Census4 {
    pub fn get(&self, class: ClassId4) -> u64 {
        self.counts[class.index()]
    }

    pub fn total(&self) -> u128 {
        self.counts.iter().map(|&c| c as u128).sum()
    }

    /// The census of the complement graph.
    pub fn complement_dual(&self) -> Census4 {
        let mut counts = [0; 11];
        for c in ClassId4::ALL {
            counts[c.complement().index()] = self.get(c);
        }
        Census4 { counts }
    }

    pub fn densities(&self, n: usize) -> Result<DensityVector> {
        DensityVector::from_counts(&self.counts, n, 4)
    }
}

const BRUTE_LIMIT: usize = 120;

/// Reference census: classifies every quadruple.
pub fn census4_brute(g: &Graph) -> Result<Census4> {
    let n = g.order();
    if n > BRUTE_LIMIT {
        return Err(Error::TooLarge { order: n, limit: BRUTE_LIMIT });
    }
    let mut counts = [0u64; 11];
    for a in 0..n {
        for b in a + 1..n {
            let m1 = g.adjacent(a, b) as u8;
            for c in b + 1..n {
                let m2 = m1 | (g.adjacent(a, c) as u8) << 1 | (g.adjacent(b, c) as u8) << 2;
                for d in c + 1..n {
                    let m3 = m2
                        | (g.adjacent(a, d) as u8) << 3
                        | (g.adjacent(b, d) as u8) << 4
                        | (g.adjacent(c, d) as u8) << 5;
                    counts[classify4(m3).index()] += 1;
                }
            }
        }
    }
    Ok(Census4 { counts })
}

/// `inclusion()[h][f]`: labelled copies of class `h` spanning a fixed
/// 4-vertex graph of class `f`, found by enumerating edge subsets.
fn inclusion() -> &'static [[u128; 11]; 11] {
    static TABLE: OnceLock<[[u128; 11]; 11]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut table = [[0u128; 11]; 11];
        for f in ClassId4::ALL {
            let mask: u8 = f.edges().iter().map(|&(i, j)| 1u8 << pair_bit(i.min(j), i.max(j))).sum();
            let mut sub = mask;
            loop {
                table[classify4(sub).index()][f.index()] += 1;
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & mask;
            }
        }
        table
    })
}

#[derive(Default, Clone, Copy)]
struct VertexStats {
    /// Σ over pairs {u,v} of C(d(u,v), 2), each pair seen from both ends.
    pair_c2_twice: u128,
    /// Σ over edges of C(d(u,v), 2), seen from both ends.
    edge_c2_twice: u128,
    /// Σ over edges of (d(u)-1)(d(v)-1), seen from both ends.
    path_twice: u128,
    /// Σ_v t(v)·(d(v) - 2), where 2·t(v) = Σ_{u ~ v} d(u, v).
    paw: u128,
    /// Σ over edges of d(u,v), seen from both ends: 6·T.
    six_triangles: u128,
}

impl std::ops::Add for VertexStats {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self {
            pair_c2_twice: self.pair_c2_twice + o.pair_c2_twice,
            edge_c2_twice: self.edge_c2_twice + o.edge_c2_twice,
            path_twice: self.path_twice + o.path_twice,
            paw: self.paw + o.paw,
            six_triangles: self.six_triangles + o.six_triangles,
        }
    }
}

/// Number of `K4`s: for each edge `uv` with `u < v`, edges among common
/// neighbours above `v`.
fn k4_count(g: &Graph, exec: Exec) -> u128 {
    let words = g.row_words();
    exec::sum_u128(exec, g.order(), |u| {
        let ru = g.row(u);
        let mut common = vec![0u64; words];
        let mut total = 0u128;
        for v in iter_bits(ru).filter(|&v| v > u) {
            let rv = g.row(v);
            for (i, c) in common.iter_mut().enumerate() {
                *c = ru[i] & rv[i];
            }
            clear_through(&mut common, v);
            for w in iter_bits(&common).collect::<Vec<_>>() {
                let rw = g.row(w);
                let start = (w + 1) / 64;
                let mut count = 0;
                for i in start..words {
                    let mut x = common[i] & rw[i];
                    if i == start {
                        x &= mask_above(w);
                    }
                    count += x.count_ones() as u128;
                }
                total += count;
            }
        }
        total
    })
}

/// Bits strictly above position `w` within its word, relative to word `(w+1)/64`.
#[inline]
fn mask_above(w: usize) -> u64 {
    let b = (w + 1) % 64;
    u64::MAX << b
}

/// Clears bits `0..=v`.
fn clear_through(row: &mut [u64], v: usize) {
    for x in row.iter_mut().take(v / 64) {
        *x = 0;
    }
    let b = v % 64;
    row[v / 64] &= if b == 63 { 0 } else { u64::MAX << (b + 1) };
}

/// Accelerated census.
///
/// Counts the non-induced copies `S_H` of every 4-vertex configuration from
/// degree, co-degree and clique statistics, then recovers the induced counts
/// by inverting the subgraph-inclusion matrix, which is unitriangular when
/// classes are ordered by edge count.
pub fn census4(g: &Graph) -> Census4 {
    census4_with(g, Exec::default())
}

pub fn census4_with(g: &Graph, exec: Exec) -> Census4 {
    let n = g.order();
    if n < 4 {
        return Census4::default();
    }
    let degrees = g.degrees();
    let stats = exec::map_reduce(
        exec,
        n,
        VertexStats::default(),
        |u| {
            let ru = g.row(u);
            let du = degrees[u] as u128;
            let mut s = VertexStats::default();
            let mut two_t = 0u128;
            for v in (0..n).filter(|&v| v != u) {
                let c = and_count(ru, g.row(v)) as u128;
                let c2 = c * c.saturating_sub(1) / 2;
                s.pair_c2_twice += c2;
                if g.adjacent(u, v) {
                    s.edge_c2_twice += c2;
                    s.path_twice += (du - 1) * (degrees[v] as u128 - 1);
                    two_t += c;
                }
            }
            s.six_triangles = two_t;
            s.paw = two_t / 2 * du.saturating_sub(2);
            s
        },
        |a, b| a + b,
    );
    let n = n as u128;
    let e = g.edge_count() as u128;
    let t = stats.six_triangles / 6;
    let wedges: u128 = degrees.iter().map(|&d| binomial(d as u64, 2)).sum();
    let claws: u128 = degrees.iter().map(|&d| binomial(d as u64, 3)).sum();

    use ClassId4::*;
    let mut copies = [0u128; 11];
    copies[Empty.index()] = binomial(n as u64, 4);
    copies[EdgePlusTwo.index()] = e * binomial(n as u64 - 2, 2);
    copies[Matching.index()] = e * e.saturating_sub(1) / 2 - wedges;
    copies[CherryPlusOne.index()] = wedges * (n - 3);
    copies[TrianglePlusOne.index()] = t * (n - 3);
    copies[Path.index()] = stats.path_twice / 2 - 3 * t;
    copies[Claw.index()] = claws;
    copies[Cycle.index()] = stats.pair_c2_twice / 4;
    copies[Paw.index()] = stats.paw;
    copies[Diamond.index()] = stats.edge_c2_twice / 2;
    copies[Complete.index()] = k4_count(g, exec);

    let incl = inclusion();
    let mut induced = [0i128; 11];
    for f in ClassId4::ALL.into_iter().rev() {
        let mut d = copies[f.index()] as i128;
        for h in ClassId4::ALL.into_iter().filter(|h| h.index() > f.index()) {
            d -= incl[f.index()][h.index()] as i128 * induced[h.index()];
        }
        induced[f.index()] = d;
    }
    let mut counts = [0u64; 11];
    for (c, d) in counts.iter_mut().zip(induced) {
        *c = u64::try_from(d).expect("induced counts are non-negative and fit in 64 bits");
    }
    Census4 { counts }
}
