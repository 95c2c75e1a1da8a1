//! Exact counting identities tying the censuses to degree statistics.
//! A `false` from any check means a counting kernel is wrong.

use serde::{Deserialize, Serialize};

use super::{binomial, census4, profile3, Census4, ClassId4, Profile3};
use crate::graph::Graph;

fn goodman_holds(g: &Graph, p: &Profile3) -> bool {
    let n = g.order() as u64;
    let spread: i128 = g
        .degrees()
        .iter()
        .map(|&d| (binomial(d as u64, 2) + binomial(n.saturating_sub(1) - d as u64, 2)) as i128)
        .sum();
    let lhs = 2 * (p.counts[0] as i128 + p.counts[3] as i128);
    lhs == spread - binomial(n, 3) as i128
}

fn vertex_edge_holds(g: &Graph, p: &Profile3) -> bool {
    let [d0, d1, d2, d3] = p.counts.map(|c| c as u128);
    let n = g.order() as u128;
    if n < 2 {
        return p.total() == 0;
    }
    3 * d3 + 2 * d2 + d1 == (n - 2) * g.edge_count() as u128
        && 3 * d0 + 2 * d1 + d2 == (n - 2) * g.non_edge_count() as u128
}

fn edge_pair_holds(g: &Graph, c: &Census4) -> bool {
    use ClassId4::*;
    let lhs: u128 = [(Matching, 1), (Path, 1), (Paw, 1), (Cycle, 2), (Diamond, 2), (Complete, 3)]
        .iter()
        .map(|&(class, w)| w * c.get(class) as u128)
        .sum();
    let e = g.edge_count();
    let wedges: u128 = g.degrees().iter().map(|&d| binomial(d as u64, 2)).sum();
    lhs as i128 == binomial(e, 2) as i128 - wedges as i128
}

/// `D0 + D3 = ½[-C(n,3) + Σ_v (C(d(v),2) + C(n-1-d(v),2))]`.
pub fn verify_goodman(g: &Graph) -> bool {
    goodman_holds(g, &profile3(g))
}

/// `3D3 + 2D2 + D1 = (n-2)·e(G)` and `3D0 + 2D1 + D2 = (n-2)·e(Ḡ)`.
pub fn verify_vertex_edge_identities(g: &Graph) -> bool {
    vertex_edge_holds(g, &profile3(g))
}

/// Pairs of vertex-disjoint edges, counted through the 4-vertex census.
pub fn verify_edge_pair_identity(g: &Graph) -> bool {
    edge_pair_holds(g, &census4(g))
}

/// Outcome of every identity check on one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub goodman: bool,
    pub vertex_edge: bool,
    pub profile_total: bool,
    /// Present when a 4-vertex census was supplied.
    pub edge_pair: Option<bool>,
    pub census4_total: Option<bool>,
}

impl IdentityReport {
    pub fn check(g: &Graph, profile: &Profile3, census: Option<&Census4>) -> Self {
        let n = g.order() as u64;
        Self {
            goodman: goodman_holds(g, profile),
            vertex_edge: vertex_edge_holds(g, profile),
            profile_total: profile.total() == binomial(n, 3),
            edge_pair: census.map(|c| edge_pair_holds(g, c)),
            census4_total: census.map(|c| c.total() == binomial(n, 4)),
        }
    }

    pub fn all_hold(&self) -> bool {
        self.goodman
            && self.vertex_edge
            && self.profile_total
            && self.edge_pair.unwrap_or(true)
            && self.census4_total.unwrap_or(true)
    }
}
