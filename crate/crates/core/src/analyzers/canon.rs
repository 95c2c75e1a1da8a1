//! Canonical forms for graphs on at most eight vertices.
//!
//! A labelled graph on `k` vertices is a mask with bit `j(j-1)/2 + i` set for
//! each edge `{i, j}`, `i < j` (graph6 column order). The canonical code is the
//! smallest mask over all `k!` relabellings. Orders up to six are served from
//! precomputed orbit tables.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::census::ClassId4;
use crate::error::{Error, Result};
use crate::graph::{graph6, Graph, GraphBuilder};

pub const MAX_CANON_ORDER: usize = 8;
pub const MAX_TABLE_ORDER: usize = 6;

#[inline]
pub(crate) fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

/// Labelled mask of the subgraph induced by `vertices`, in the given order.
pub(crate) fn mask_of(g: &Graph, vertices: &[usize]) -> u64 {
    let mut mask = 0;
    for (j, &v) in vertices.iter().enumerate() {
        for (i, &u) in vertices[..j].iter().enumerate() {
            if g.adjacent(u, v) {
                mask |= 1 << pair_index(i, j);
            }
        }
    }
    mask
}

/// Canonical code of a graph with at most eight vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalCode {
    pub order: u8,
    pub bits: u64,
}

impl CanonicalCode {
    pub fn to_graph(self) -> Graph {
        let k = self.order as usize;
        let mut b = GraphBuilder::new(k).expect("tiny graph");
        for j in 1..k {
            for i in 0..j {
                if self.bits >> pair_index(i, j) & 1 == 1 {
                    b.set(i, j);
                }
            }
        }
        b.build()
    }

    pub fn graph6(self) -> String {
        graph6::encode_string(&self.to_graph())
    }
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..k).collect();
    let mut c = vec![0usize; k];
    out.push(p.clone());
    let mut i = 0;
    while i < k {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            out.push(p.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// For each permutation, the image of every pair index.
fn pair_maps(k: usize) -> Vec<Vec<u8>> {
    permutations(k)
        .into_iter()
        .map(|p| {
            let mut map = vec![0u8; k * k.saturating_sub(1) / 2];
            for j in 1..k {
                for i in 0..j {
                    let (a, b) = (p[i].min(p[j]), p[i].max(p[j]));
                    map[pair_index(i, j)] = pair_index(a, b) as u8;
                }
            }
            map
        })
        .collect()
}

#[inline]
fn relabel(mask: u64, map: &[u8]) -> u64 {
    let mut out = 0;
    let mut rest = mask;
    while rest != 0 {
        let b = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        out |= 1 << map[b];
    }
    out
}

/// Orbit table for one order: class of every labelled mask.
pub(crate) struct ClassTable {
    pub class_of: Vec<u16>,
    /// Canonical (minimal) mask per class, increasing.
    pub canon: Vec<u64>,
}

impl ClassTable {
    fn build(k: usize) -> Self {
        let m = k * k.saturating_sub(1) / 2;
        let maps = pair_maps(k);
        let mut class_of = vec![u16::MAX; 1 << m];
        let mut canon = Vec::new();
        for mask in 0..(1u64 << m) {
            if class_of[mask as usize] != u16::MAX {
                continue;
            }
            let id = canon.len() as u16;
            canon.push(mask);
            for map in &maps {
                class_of[relabel(mask, map) as usize] = id;
            }
        }
        Self { class_of, canon }
    }

    #[inline]
    pub fn class(&self, mask: u64) -> usize {
        self.class_of[mask as usize] as usize
    }

    pub fn len(&self) -> usize {
        self.canon.len()
    }
}

pub(crate) fn class_table(k: usize) -> &'static ClassTable {
    static TABLES: OnceLock<Vec<ClassTable>> = OnceLock::new();
    assert!(k <= MAX_TABLE_ORDER);
    &TABLES.get_or_init(|| (0..=MAX_TABLE_ORDER).map(ClassTable::build).collect())[k]
}

/// Minimal labelled mask over all relabellings; equal codes iff isomorphic.
pub fn canonical_form(g: &Graph) -> Result<CanonicalCode> {
    let k = g.order();
    if k > MAX_CANON_ORDER {
        return Err(Error::TooLarge { order: k, limit: MAX_CANON_ORDER });
    }
    let mask = mask_of(g, &(0..k).collect::<Vec<_>>());
    let bits = if k <= MAX_TABLE_ORDER {
        let t = class_table(k);
        t.canon[t.class(mask)]
    } else {
        pair_maps(k).iter().map(|map| relabel(mask, map)).min().unwrap_or(0)
    };
    Ok(CanonicalCode { order: k as u8, bits })
}

/// One representative per isomorphism class of a given order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoClassTable {
    pub order: usize,
    pub codes: Vec<CanonicalCode>,
    /// Class names, for order four only.
    pub names: Option<Vec<String>>,
}

impl IsoClassTable {
    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    pub fn position(&self, code: CanonicalCode) -> Option<usize> {
        self.codes.binary_search(&code).ok()
    }
}

/// All isomorphism classes on `order <= 6` vertices, sorted by canonical code.
pub fn enumerate_classes(order: usize) -> Result<IsoClassTable> {
    if order > MAX_TABLE_ORDER {
        return Err(Error::TooLarge { order, limit: MAX_TABLE_ORDER });
    }
    let t = class_table(order);
    let codes: Vec<CanonicalCode> =
        t.canon.iter().map(|&bits| CanonicalCode { order: order as u8, bits }).collect();
    let names = (order == 4).then(|| {
        codes
            .iter()
            .map(|&c| {
                ClassId4::ALL
                    .into_iter()
                    .find(|id| canonical_form(&id.representative()).ok() == Some(c))
                    .map(|id| id.name().to_string())
                    .unwrap_or_default()
            })
            .collect()
    });
    Ok(IsoClassTable { order, codes, names })
}
