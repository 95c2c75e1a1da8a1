use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::canon::{canonical_form, class_table, enumerate_classes, mask_of, CanonicalCode};
use super::scan::{self, ClassSet, Pruner};
use crate::census::{census4_with, profile3_with};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::graph::{Graph, VertexSet};

/// Largest host order for an exhaustive scan of `k`-subsets.
pub fn scan_limit(k: usize) -> Option<usize> {
    match k {
        0..=4 => Some(usize::MAX),
        5 => Some(300),
        6 => Some(120),
        _ => None,
    }
}

fn check_scan_size(g: &Graph, k: usize) -> Result<()> {
    match scan_limit(k) {
        Some(limit) if g.order() <= limit => Ok(()),
        Some(limit) => Err(Error::TooLarge { order: g.order(), limit }),
        None => Err(Error::TooLarge { order: k, limit: 6 }),
    }
}

/// One isomorphism class in a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassEntry {
    pub code: CanonicalCode,
    pub graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniversalityReport {
    pub order: usize,
    pub present: Vec<ClassEntry>,
    pub missing: Vec<ClassEntry>,
    pub verdict: bool,
}

impl UniversalityReport {
    pub fn is_missing(&self, h: &Graph) -> bool {
        canonical_form(h).is_ok_and(|c| self.missing.iter().any(|e| e.code == c))
    }
}

/// Classes of order `k <= 4` present in `g`, read off the exact censuses.
fn present_by_census(g: &Graph, k: usize, exec: Exec) -> ClassSet {
    let t = class_table(k);
    let mut set = ClassSet::default();
    let n = g.order();
    if n < k {
        return set;
    }
    match k {
        0 | 1 => set.insert(0),
        2 => {
            // classes of order two: no edge (mask 0), edge (mask 1)
            if g.non_edge_count() > 0 {
                set.insert(t.class(0));
            }
            if g.edge_count() > 0 {
                set.insert(t.class(1));
            }
        }
        3 => {
            let p = profile3_with(g, exec);
            for (edges, &c) in p.counts.iter().enumerate() {
                if c > 0 {
                    let mask = (1u64 << edges) - 1;
                    set.insert(t.class(mask));
                }
            }
        }
        _ => {
            let c = census4_with(g, exec);
            for id in crate::census::ClassId4::ALL {
                if c.get(id) > 0 {
                    let code = canonical_form(&id.representative()).expect("order four");
                    set.insert(t.class(code.bits));
                }
            }
        }
    }
    set
}

const PREPASS_SAMPLES: usize = 1 << 16;
const PREPASS_SEED: u64 = 0x5eed_5ca7;

/// Whether `g` contains every `k`-vertex graph as an induced subgraph.
///
/// Orders up to four are decided exactly from the censuses. Orders five and
/// six run a seeded sampling pass and then an exhaustive pruned scan for the
/// classes not yet seen.
pub fn is_l_universal(g: &Graph, k: usize) -> Result<UniversalityReport> {
    is_l_universal_with(g, k, Exec::default())
}

pub fn is_l_universal_with(g: &Graph, k: usize, exec: Exec) -> Result<UniversalityReport> {
    check_scan_size(g, k)?;
    let table = enumerate_classes(k)?;
    let classes = class_table(k);
    let present = if k <= 4 {
        present_by_census(g, k, exec)
    } else if g.order() < k {
        ClassSet::default()
    } else {
        let mut seen = ClassSet::default();
        let mut rng = ChaCha8Rng::seed_from_u64(PREPASS_SEED);
        let mut subset = Vec::with_capacity(k);
        for _ in 0..PREPASS_SAMPLES {
            subset.clear();
            subset.extend(sample(&mut rng, g.order(), k).iter());
            subset.sort_unstable();
            seen.insert(classes.class(mask_of(g, &subset)));
        }
        let mut missing = ClassSet::default();
        for c in 0..classes.len() {
            if !seen.contains(c) {
                missing.insert(c);
            }
        }
        if missing == ClassSet::default() {
            seen
        } else {
            seen.union(scan::classes_present(g, &Pruner::new(k, missing), exec))
        }
    };
    let entry = |i: usize| ClassEntry {
        code: table.codes[i],
        graph6: table.codes[i].graph6(),
        name: table.names.as_ref().map(|n| n[i].clone()),
    };
    let (p, m): (Vec<usize>, Vec<usize>) = (0..table.len()).partition(|&c| present.contains(c));
    Ok(UniversalityReport {
        order: k,
        verdict: m.is_empty(),
        present: p.into_iter().map(entry).collect(),
        missing: m.into_iter().map(entry).collect(),
    })
}

fn single_target(h: &Graph) -> Result<Pruner> {
    let k = h.order();
    if k > 6 {
        return Err(Error::TooLarge { order: k, limit: 6 });
    }
    let code = canonical_form(h)?;
    let t = class_table(k);
    let mut s = ClassSet::default();
    s.insert(t.class(code.bits));
    Ok(Pruner::new(k, s))
}

/// Whether `g` has an induced copy of `h`, with the lexicographically least
/// vertex set inducing one.
pub fn has_induced(g: &Graph, h: &Graph) -> Result<Option<VertexSet>> {
    has_induced_with(g, h, Exec::default())
}

pub fn has_induced_with(g: &Graph, h: &Graph, exec: Exec) -> Result<Option<VertexSet>> {
    let pruner = single_target(h)?;
    let k = h.order();
    if k <= 4 {
        // exact censuses settle absence without a scan
        if !present_by_census(g, k, exec).is_superset(&pruner.targets) {
            return Ok(None);
        }
    } else {
        check_scan_size(g, k)?;
    }
    Ok(scan::find_first(g, &pruner, exec).map(VertexSet::from_sorted))
}

/// Induced copies of `h` by exhaustive scan; used for `|h| >= 5`.
pub(crate) fn scan_count(g: &Graph, h: &Graph, exec: Exec) -> Result<u64> {
    check_scan_size(g, h.order())?;
    Ok(scan::count(g, &single_target(h)?, exec))
}
