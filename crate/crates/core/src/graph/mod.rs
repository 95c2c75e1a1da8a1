//! Dense simple undirected graphs stored as packed adjacency bit rows.

mod circulant;
pub mod graph6;

use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use circulant::{circulant, CirculantParam, OPTIMAL_R_DIGITS};

/// Default cap on the order of any constructed graph.
pub const DEFAULT_MAX_ORDER: usize = 20_000;

static MAX_ORDER: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_ORDER);

/// Current maximum order accepted by every constructor.
pub fn max_order() -> usize {
    MAX_ORDER.load(Ordering::Relaxed)
}

/// Changes the process-wide maximum order.
pub fn set_max_order(max: usize) {
    MAX_ORDER.store(max, Ordering::Relaxed);
}

pub(crate) fn check_order(requested: u128) -> Result<usize> {
    let max = max_order();
    if requested > max as u128 {
        return Err(Error::Overflow { requested, max });
    }
    Ok(requested as usize)
}

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

/// Iterates the indices of the set bits of a packed row.
pub(crate) fn iter_bits(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(|(w, &word)| {
        let mut rest = word;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let b = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(w * 64 + b)
        })
    })
}

#[inline]
pub(crate) fn and_count(a: &[u64], b: &[u64]) -> usize {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones() as usize).sum()
}

#[inline]
pub(crate) fn and_not_count(a: &[u64], b: &[u64]) -> usize {
    a.iter().zip(b).map(|(x, y)| (x & !y).count_ones() as usize).sum()
}

/// An immutable simple undirected graph on vertices `0..n`.
///
/// Row `u` holds the neighbourhood of `u` as a bitset of width `n`. Rows are
/// symmetric, loop-free, and every padding bit past column `n - 1` is zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// The graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Result<Self> {
        Ok(GraphBuilder::new(n)?.build())
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Self> {
        Ok(Graph::empty(n)?.complement())
    }

    /// Builds a graph from an edge list; duplicate pairs are merged.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut b = GraphBuilder::new(n)?;
        for &(u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Neighbourhood of `u` as packed bits.
    #[inline]
    pub fn row(&self, u: usize) -> &[u64] {
        &self.bits[u * self.words..(u + 1) * self.words]
    }

    /// Number of 64-bit words per row.
    #[inline]
    pub fn row_words(&self) -> usize {
        self.words
    }

    /// Adjacency test. Panics if either vertex is out of range.
    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n, "vertex out of range");
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn edge_count(&self) -> u64 {
        let twice: u64 = self.bits.iter().map(|w| w.count_ones() as u64).sum();
        twice / 2
    }

    /// Number of non-adjacent pairs, `e` of the complement.
    pub fn non_edge_count(&self) -> u64 {
        let n = self.n as u64;
        n * n.saturating_sub(1) / 2 - self.edge_count()
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            iter_bits(self.row(u))
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row(u))
    }

    fn check_vertex(&self, u: usize) -> Result<()> {
        if u >= self.n {
            return Err(Error::IndexOutOfRange { vertex: u, order: self.n });
        }
        Ok(())
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SameVertex(u));
        }
        Ok(())
    }

    /// `d(u)`.
    pub fn degree(&self, u: usize) -> Result<usize> {
        self.check_vertex(u)?;
        Ok(self.deg(u))
    }

    /// `d(u, v) = |N(u) ∩ N(v)|`.
    pub fn codegree(&self, u: usize, v: usize) -> Result<usize> {
        self.check_pair(u, v)?;
        Ok(self.common(u, v))
    }

    /// `d(u, -v) = |N(u) \ N(v)|`. Counts `v` itself when `u ~ v`.
    pub fn codegree_minus(&self, u: usize, v: usize) -> Result<usize> {
        self.check_pair(u, v)?;
        Ok(and_not_count(self.row(u), self.row(v)))
    }

    #[inline]
    pub(crate) fn deg(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub(crate) fn common(&self, u: usize, v: usize) -> usize {
        and_count(self.row(u), self.row(v))
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.deg(u)).collect()
    }

    /// The complement `Ḡ`. Applying it twice returns a bit-identical graph.
    pub fn complement(&self) -> Graph {
        let mut bits: Vec<u64> = self.bits.iter().map(|w| !w).collect();
        let tail = self.n % 64;
        let tail_mask = if tail == 0 { u64::MAX } else { (1u64 << tail) - 1 };
        for u in 0..self.n {
            let row = &mut bits[u * self.words..(u + 1) * self.words];
            if let Some(last) = row.last_mut() {
                *last &= tail_mask;
            }
            row[u / 64] &= !(1u64 << (u % 64));
        }
        Graph { n: self.n, words: self.words, bits }
    }

    /// `G[S]`, relabelled by the sorted order of `S`.
    pub fn induced(&self, set: &VertexSet) -> Result<Graph> {
        if let Some(&last) = set.members().last() {
            self.check_vertex(last)?;
        }
        let members = set.members();
        let mut b = GraphBuilder::new(members.len())?;
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate().skip(i + 1) {
                if self.adjacent(u, v) {
                    b.set(i, j);
                }
            }
        }
        Ok(b.build())
    }

    /// Replaces every vertex by `t` pairwise non-adjacent clones; clones of
    /// adjacent vertices are fully joined. Clone `i` of `u` gets index `u*t + i`.
    pub fn blow_up(&self, t: usize) -> Result<Graph> {
        if t == 0 {
            return Err(Error::InvalidParameter("blow-up multiplicity must be at least 1".into()));
        }
        let order = check_order(self.n as u128 * t as u128)?;
        let mut b = GraphBuilder::new(order)?;
        for (u, v) in self.edges() {
            for i in 0..t {
                for j in 0..t {
                    b.set(u * t + i, v * t + j);
                }
            }
        }
        Ok(b.build())
    }

    /// Relabels vertex `u` as `p(u)`.
    pub fn permuted(&self, p: &Permutation) -> Result<Graph> {
        if p.len() != self.n {
            return Err(Error::SizeMismatch { expected: self.n, found: p.len() });
        }
        let mut b = GraphBuilder::new(self.n)?;
        for (u, v) in self.edges() {
            b.set(p.apply(u), p.apply(v));
        }
        Ok(b.build())
    }

    /// Mutable copy for incremental edits.
    pub fn to_builder(&self) -> GraphBuilder {
        GraphBuilder { n: self.n, words: self.words, bits: self.bits.clone() }
    }

    /// Checks the representation invariants. Used by tests and debug assertions.
    pub fn check_invariants(&self) -> bool {
        let tail = self.n % 64;
        for u in 0..self.n {
            let row = self.row(u);
            if row[u / 64] >> (u % 64) & 1 == 1 {
                return false;
            }
            if tail != 0 && row[self.words - 1] >> tail != 0 {
                return false;
            }
            if iter_bits(row).any(|v| !self.adjacent(v, u)) {
                return false;
            }
        }
        true
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.n)
            .field("edges", &self.edge_count())
            .finish()
    }
}

/// Mutable adjacency matrix; call [`GraphBuilder::build`] to freeze it.
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Result<Self> {
        check_order(n as u128)?;
        let words = words_for(n);
        Ok(Self { n, words, bits: vec![0; n * words] })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::IndexOutOfRange { vertex: w, order: self.n });
            }
        }
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        self.set(u, v);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / 64] &= !(1u64 << (v % 64));
        self.bits[v * self.words + u / 64] &= !(1u64 << (u % 64));
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Sets both bits of `{u, v}`. Caller guarantees `u != v`, both in range.
    #[inline]
    pub(crate) fn set(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.bits[u * self.words + v / 64] |= 1u64 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1u64 << (u % 64);
    }

    /// Copies `g` onto vertices `offset..offset + |g|`.
    pub(crate) fn place(&mut self, g: &Graph, offset: usize) {
        for (u, v) in g.edges() {
            self.set(offset + u, offset + v);
        }
    }

    pub fn build(self) -> Graph {
        let g = Graph { n: self.n, words: self.words, bits: self.bits };
        debug_assert!(g.check_invariants());
        g
    }
}

/// A strictly increasing list of vertex indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    /// Sorts and deduplicates `members`; every index must be below `order`.
    pub fn new(mut members: Vec<usize>, order: usize) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        if let Some(&last) = members.last() {
            if last >= order {
                return Err(Error::IndexOutOfRange { vertex: last, order });
            }
        }
        Ok(Self(members))
    }

    pub fn full(order: usize) -> Self {
        Self((0..order).collect())
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub(crate) fn from_sorted(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Self(members)
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// A bijection on `0..n`, stored as its image list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &x in &image {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidParameter(format!(
                    "image {x} breaks bijectivity on 0..{n}"
                )));
            }
        }
        Ok(Self(image))
    }

    pub fn identity(n: usize) -> Self {
        Self((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn apply(&self, u: usize) -> usize {
        self.0[u]
    }

    pub fn image(&self) -> &[usize] {
        &self.0
    }
}

/// True iff `p` maps `g` onto itself (or onto its complement when
/// `to_complement` is set): `u ~ v` in `g` exactly when `p(u) ~ p(v)` in the target.
pub fn check_isomorphism_witness(g: &Graph, p: &Permutation, to_complement: bool) -> Result<bool> {
    if p.len() != g.order() {
        return Err(Error::SizeMismatch { expected: g.order(), found: p.len() });
    }
    let n = g.order();
    for u in 0..n {
        for v in u + 1..n {
            let target = g.adjacent(p.apply(u), p.apply(v)) != to_complement;
            if g.adjacent(u, v) != target {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    #[test]
    fn edge_list_examples() {
        let k3 = Graph::from_edge_list(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3.edge_count(), 3);
        assert_eq!(k3, Graph::complete(3).unwrap());
        assert_eq!(Graph::from_edge_list(2, &[]).unwrap().edge_count(), 0);
        let c5 = cycle(5);
        assert_eq!(c5.degrees(), vec![2; 5]);
        let dup = Graph::from_edge_list(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(dup.edge_count(), 1);
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(Error::IndexOutOfRange { vertex: 3, order: 3 })
        );
        assert_eq!(Graph::from_edge_list(3, &[(1, 1)]), Err(Error::LoopEdge(1)));
    }

    #[test]
    fn complement_examples() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.complement(), Graph::empty(4).unwrap());
        let c5 = cycle(5);
        assert_eq!(c5.complement().complement(), c5);
        let doubling = Permutation::new((0..5).map(|i| 2 * i % 5).collect()).unwrap();
        assert_eq!(c5.complement().permuted(&doubling).unwrap(), c5);
        for n in [0, 1, 63, 64, 65, 130] {
            let g = Graph::empty(n).unwrap().complement();
            assert!(g.check_invariants());
            assert_eq!(g.edge_count(), (n * n.saturating_sub(1) / 2) as u64);
        }
    }

    #[test]
    fn induced_examples() {
        let c5 = cycle(5);
        let p4 = c5.induced(&VertexSet::new(vec![0, 1, 2, 3], 5).unwrap()).unwrap();
        assert_eq!(p4, Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap());
        assert_eq!(c5.induced(&VertexSet::full(5)).unwrap(), c5);
        let k4 = Graph::complete(4).unwrap();
        let k3 = k4.induced(&VertexSet::new(vec![3, 0, 2], 4).unwrap()).unwrap();
        assert_eq!(k3, Graph::complete(3).unwrap());
        assert!(VertexSet::new(vec![5], 5).is_err());
    }

    #[test]
    fn codegree_examples() {
        let c5 = cycle(5);
        assert_eq!(c5.codegree(0, 1), Ok(0));
        assert_eq!(c5.codegree(0, 2), Ok(1));
        // N(0) = {1, 4}, N(1) = {0, 2}
        assert_eq!(c5.codegree_minus(0, 1), Ok(2));
        let k4 = Graph::complete(4).unwrap();
        for u in 0..4 {
            for v in 0..4 {
                if u != v {
                    assert_eq!(k4.codegree(u, v), Ok(2));
                }
            }
        }
        assert_eq!(c5.codegree(2, 2), Err(Error::SameVertex(2)));
        assert_eq!(c5.degree(5), Err(Error::IndexOutOfRange { vertex: 5, order: 5 }));
    }

    #[test]
    fn blow_up_examples() {
        let k2 = Graph::complete(2).unwrap();
        let c4 = k2.blow_up(2).unwrap();
        // K2 blown up twice: clones {0,1} and {2,3} fully joined, i.e. K_{2,2}
        assert_eq!(c4, Graph::from_edge_list(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap());
        let c5 = cycle(5);
        assert_eq!(c5.blow_up(1).unwrap(), c5);
        let b = c5.blow_up(2).unwrap();
        assert_eq!(b.order(), 10);
        assert_eq!(b.degrees(), vec![4; 10]);
        assert!(matches!(c5.blow_up(0), Err(Error::InvalidParameter(_))));
        assert!(matches!(c5.blow_up(5000), Err(Error::Overflow { .. })));
    }

    #[test]
    fn witness_examples() {
        let c5 = cycle(5);
        let doubling = Permutation::new((0..5).map(|i| 2 * i % 5).collect()).unwrap();
        assert_eq!(check_isomorphism_witness(&c5, &doubling, true), Ok(true));
        assert_eq!(check_isomorphism_witness(&c5, &doubling, false), Ok(false));
        assert_eq!(check_isomorphism_witness(&c5, &Permutation::identity(5), false), Ok(true));
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(check_isomorphism_witness(&k3, &Permutation::identity(3), true), Ok(false));
        assert!(matches!(
            check_isomorphism_witness(&k3, &Permutation::identity(4), true),
            Err(Error::SizeMismatch { .. })
        ));
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
    }
}
