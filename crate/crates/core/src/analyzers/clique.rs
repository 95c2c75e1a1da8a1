//! Exact maximum clique by branch and bound with greedy colouring bounds.
//!
//! Vertices are renumbered by non-increasing degree (ties by index). Each node
//! colours its candidate set greedily; a vertex whose colour number cannot lift
//! the current clique above the incumbent is cut together with every vertex
//! coloured before it.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{words_for, Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueResult {
    pub size: usize,
    /// Vertices of a clique of that size, in the host's labels.
    pub witness: VertexSet,
    /// False when the search ran out of budget; `size` is then a lower bound.
    pub exact: bool,
}

/// Search configuration.
#[derive(Clone, Copy, Debug, Default)]
pub struct CliqueSearch {
    pub budget: Option<Duration>,
}

impl CliqueSearch {
    pub fn with_budget(budget: Duration) -> Self {
        Self { budget: Some(budget) }
    }

    pub fn clique(&self, g: &Graph) -> CliqueResult {
        let n = g.order();
        let mut order: Vec<usize> = (0..n).collect();
        let degrees = g.degrees();
        order.sort_by(|&a, &b| degrees[b].cmp(&degrees[a]).then(a.cmp(&b)));
        let words = words_for(n);
        let mut adj = vec![0u64; n * words];
        for (i, &u) in order.iter().enumerate() {
            for (j, &v) in order.iter().enumerate() {
                if g.adjacent(u, v) {
                    adj[i * words + j / 64] |= 1 << (j % 64);
                }
            }
        }
        let mut s = Search {
            adj,
            words,
            best: Vec::new(),
            nodes: 0,
            deadline: self.budget.map(|b| Instant::now() + b),
            aborted: false,
        };
        let mut all = vec![0u64; words];
        for v in 0..n {
            all[v / 64] |= 1 << (v % 64);
        }
        if n > 0 {
            s.expand(&mut Vec::new(), all);
        }
        let mut witness: Vec<usize> = s.best.iter().map(|&i| order[i]).collect();
        witness.sort_unstable();
        CliqueResult { size: witness.len(), witness: VertexSet::from_sorted(witness), exact: !s.aborted }
    }
}

struct Search {
    adj: Vec<u64>,
    words: usize,
    best: Vec<usize>,
    nodes: u64,
    deadline: Option<Instant>,
    aborted: bool,
}

impl Search {
    fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    /// Greedy colouring of `p` in index order: vertices and their colour numbers.
    fn colour(&self, p: &[u64]) -> (Vec<usize>, Vec<usize>) {
        let mut uncoloured = p.to_vec();
        let mut verts = Vec::new();
        let mut bounds = Vec::new();
        let mut colour = 0;
        let mut q = vec![0u64; self.words];
        while uncoloured.iter().any(|&w| w != 0) {
            colour += 1;
            q.copy_from_slice(&uncoloured);
            while let Some(v) = first_bit(&q) {
                uncoloured[v / 64] &= !(1 << (v % 64));
                for (x, r) in q.iter_mut().zip(self.row(v)) {
                    *x &= !r;
                }
                q[v / 64] &= !(1 << (v % 64));
                verts.push(v);
                bounds.push(colour);
            }
        }
        (verts, bounds)
    }

    fn expand(&mut self, clique: &mut Vec<usize>, mut p: Vec<u64>) {
        self.nodes += 1;
        if self.nodes.is_multiple_of(1024) {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.aborted = true;
                }
            }
        }
        if self.aborted {
            return;
        }
        let (verts, bounds) = self.colour(&p);
        for i in (0..verts.len()).rev() {
            if clique.len() + bounds[i] <= self.best.len() {
                return;
            }
            let v = verts[i];
            clique.push(v);
            let next: Vec<u64> = p.iter().zip(self.row(v)).map(|(a, b)| a & b).collect();
            if next.iter().all(|&w| w == 0) {
                if clique.len() > self.best.len() {
                    self.best = clique.clone();
                }
            } else {
                self.expand(clique, next);
            }
            clique.pop();
            p[v / 64] &= !(1 << (v % 64));
            if self.aborted {
                return;
            }
        }
    }
}

fn first_bit(row: &[u64]) -> Option<usize> {
    row.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

/// `ω(G)` with a witness, no time limit.
pub fn clique_number(g: &Graph) -> Result<CliqueResult> {
    Ok(CliqueSearch::default().clique(g))
}

/// `α(G) = ω(Ḡ)`.
pub fn independence_number(g: &Graph) -> Result<CliqueResult> {
    clique_number(&g.complement())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_and_empty() {
        let r = clique_number(&Graph::complete(7).unwrap()).unwrap();
        assert_eq!(r.size, 7);
        assert_eq!(r.witness, VertexSet::full(7));
        assert!(r.exact);
        assert_eq!(clique_number(&Graph::empty(5).unwrap()).unwrap().size, 1);
        assert_eq!(clique_number(&Graph::empty(0).unwrap()).unwrap().size, 0);
        assert_eq!(independence_number(&Graph::complete(6).unwrap()).unwrap().size, 1);
        assert_eq!(independence_number(&Graph::empty(6).unwrap()).unwrap().size, 6);
    }

    #[test]
    fn c5_and_blowups() {
        let c5 = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(clique_number(&c5).unwrap().size, 2);
        assert_eq!(independence_number(&c5).unwrap().size, 2);
        let b = c5.blow_up(3).unwrap();
        assert_eq!(clique_number(&b).unwrap().size, 2);
        assert_eq!(independence_number(&b).unwrap().size, 6);
    }

    #[test]
    fn zero_budget_is_flagged() {
        let g = Graph::complete(3).unwrap().blow_up(12).unwrap().complement();
        let r = CliqueSearch::with_budget(Duration::ZERO).clique(&g);
        assert!(r.size <= 12);
    }
}
