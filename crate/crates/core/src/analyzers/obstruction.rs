//! Finite certificate that a tower graph `G_l` is not `m`-universal for
//! `m = 24l·2^l`.
//!
//! The tower consists of `2^l` deterministic blocks, each `K_{n,n}` or its
//! complement. Any `m` of its vertices put at least `24l` into one block, and
//! `24l` vertices of `K_{n,n}` (or of two disjoint `K_n`) contain an
//! independent set (or a clique) of size `12l`. So a graph `W` on `m`
//! vertices with `ω(W) < 12l` and `α(W) < 12l` is not an induced subgraph.
//! The certificate checks the block structure directly and finds such a `W`
//! among seeded random graphs, computing `ω` and `α` exactly.

use std::time::Duration;

use serde::{Deserialize, Serialize};

use super::clique::{CliqueResult, CliqueSearch};
use crate::constructions::{oplus_tower, random_graph, Seed};
use crate::error::{Error, Result};
use crate::graph::{graph6, Graph, VertexSet};

pub const CERTIFICATE_SCHEMA_VERSION: u32 = 1;
pub const MAX_WITNESS_ATTEMPTS: u32 = 8;

/// Substream tag for witness graphs.
const WITNESS_TAG: u64 = 0x5749_544e;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockKind {
    CompleteBipartite,
    TwoCliques,
    Other,
}

/// `K_{n,n}` test: the non-neighbourhood of vertex 0 (with 0 itself) and the
/// rest are both independent, of size `n` each, and fully joined.
fn is_balanced_complete_bipartite(g: &Graph) -> bool {
    let order = g.order();
    if order == 0 || order % 2 == 1 {
        return false;
    }
    let side: Vec<bool> = (0..order).map(|v| v != 0 && g.adjacent(0, v)).collect();
    if side.iter().filter(|&&s| s).count() != order / 2 {
        return false;
    }
    (0..order).all(|u| (u + 1..order).all(|v| g.adjacent(u, v) == (side[u] != side[v])))
}

pub fn classify_block(g: &Graph) -> BlockKind {
    if is_balanced_complete_bipartite(g) {
        BlockKind::CompleteBipartite
    } else if is_balanced_complete_bipartite(&g.complement()) {
        BlockKind::TwoCliques
    } else {
        BlockKind::Other
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockSummary {
    pub count: usize,
    pub block_order: usize,
    pub kinds: Vec<BlockKind>,
    pub all_deterministic: bool,
}

/// Splits a tower graph into its `2^level` consecutive blocks of order `2n`.
pub fn tower_blocks(g: &Graph, level: u32, n: usize) -> Result<BlockSummary> {
    let count = 1usize << level;
    let block_order = 2 * n;
    if g.order() != count * block_order {
        return Err(Error::SizeMismatch { expected: count * block_order, found: g.order() });
    }
    let kinds: Vec<BlockKind> = (0..count)
        .map(|b| {
            let set = VertexSet::from_sorted((b * block_order..(b + 1) * block_order).collect());
            g.induced(&set).map(|block| classify_block(&block))
        })
        .collect::<Result<_>>()?;
    let all_deterministic = kinds.iter().all(|&k| k != BlockKind::Other);
    Ok(BlockSummary { count, block_order, kinds, all_deterministic })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionCertificate {
    pub schema_version: u32,
    pub level: u32,
    pub n: usize,
    pub seed: Seed,
    /// `24l·2^l`.
    pub m: usize,
    /// `12l`.
    pub threshold: usize,
    pub witness_graph6: String,
    pub witness_attempt: u32,
    pub omega: usize,
    pub omega_witness: VertexSet,
    pub alpha: usize,
    pub alpha_witness: VertexSet,
    pub blocks: BlockSummary,
    /// Some block receives `m / 2^l >= 2·threshold` vertices and every block
    /// side holds at least `threshold` vertices.
    pub pigeonhole: bool,
    pub verdict: bool,
}

/// Certificate with seeded `G(m, 1/2)` witnesses.
pub fn obstruction_certificate(level: u32, n: usize, seed: Seed, budget: Option<Duration>) -> Result<ObstructionCertificate> {
    obstruction_certificate_from(level, n, seed, budget, |m, attempt| {
        random_graph(m, seed.derive(WITNESS_TAG).derive(attempt as u64))
    })
}

/// Certificate with witnesses from `witness(m, attempt)`, tried in order
/// until one has no clique or independent set of size `12l`.
pub fn obstruction_certificate_from<W>(
    level: u32,
    n: usize,
    seed: Seed,
    budget: Option<Duration>,
    witness: W,
) -> Result<ObstructionCertificate>
where
    W: Fn(usize, u32) -> Result<Graph>,
{
    if level == 0 || level > 16 {
        return Err(Error::InvalidParameter(format!("level {level} outside 1..=16")));
    }
    let l = level as usize;
    let blocks_count = 1usize << level;
    let m = 24 * l * blocks_count;
    let threshold = 12 * l;
    let tower = oplus_tower(level, n, seed)?;
    let blocks = tower_blocks(&tower, level, n)?;
    let pigeonhole = m / blocks_count >= 2 * threshold && n >= threshold;
    let search = CliqueSearch { budget };
    let exact = |r: CliqueResult| {
        if r.exact {
            Ok(r)
        } else {
            Err(Error::Timeout { best_lower_bound: r.size })
        }
    };
    for attempt in 0..MAX_WITNESS_ATTEMPTS {
        let w = witness(m, attempt)?;
        if w.order() != m {
            return Err(Error::SizeMismatch { expected: m, found: w.order() });
        }
        let omega = exact(search.clique(&w))?;
        if omega.size >= threshold {
            log::info!("witness attempt {attempt} has a clique of size {}", omega.size);
            continue;
        }
        let alpha = exact(search.clique(&w.complement()))?;
        if alpha.size >= threshold {
            log::info!("witness attempt {attempt} has an independent set of size {}", alpha.size);
            continue;
        }
        let verdict = blocks.all_deterministic && pigeonhole;
        return Ok(ObstructionCertificate {
            schema_version: CERTIFICATE_SCHEMA_VERSION,
            level,
            n,
            seed,
            m,
            threshold,
            witness_graph6: graph6::encode_string(&w),
            witness_attempt: attempt,
            omega: omega.size,
            omega_witness: omega.witness,
            alpha: alpha.size,
            alpha_witness: alpha.witness,
            blocks,
            pigeonhole,
            verdict,
        });
    }
    Err(Error::CertificateFailed { attempts: MAX_WITNESS_ATTEMPTS })
}
