//! Exhaustive scan of the `k`-subsets of a graph with prefix pruning.
//!
//! Subsets are visited in lexicographic order. The labelled mask of a partial
//! subset is extended one vertex at a time; a prefix survives only if its
//! isomorphism class occurs as an induced subgraph of some target class.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use super::canon::{class_table, mask_of, ClassTable};
use crate::exec::{self, Exec};
use crate::graph::Graph;

/// Bitset over the classes of one order (at most 156 for order six).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub(crate) struct ClassSet([u64; 3]);

impl ClassSet {
    pub fn insert(&mut self, c: usize) {
        self.0[c / 64] |= 1 << (c % 64);
    }
    pub fn contains(&self, c: usize) -> bool {
        self.0[c / 64] >> (c % 64) & 1 == 1
    }
    pub fn union(self, o: Self) -> Self {
        ClassSet([self.0[0] | o.0[0], self.0[1] | o.0[1], self.0[2] | o.0[2]])
    }
    pub fn is_superset(&self, o: &Self) -> bool {
        (0..3).all(|i| self.0[i] & o.0[i] == o.0[i])
    }
    pub fn iter(self, len: usize) -> impl Iterator<Item = usize> {
        (0..len).filter(move |&c| self.contains(c))
    }
}

/// Allowed prefix classes per depth for a target set of `order`-vertex classes.
pub(crate) struct Pruner {
    pub order: usize,
    pub targets: ClassSet,
    allowed: Vec<Vec<bool>>,
}

impl Pruner {
    pub fn new(order: usize, targets: ClassSet) -> Self {
        let top = class_table(order);
        let mut allowed_classes: Vec<ClassSet> = vec![ClassSet::default(); order];
        let mut subset = Vec::with_capacity(order);
        for c in targets.iter(top.len()) {
            let rep = super::canon::CanonicalCode { order: order as u8, bits: top.canon[c] }.to_graph();
            for bits in 0u32..(1 << order) {
                let d = bits.count_ones() as usize;
                if d >= order {
                    continue;
                }
                subset.clear();
                subset.extend((0..order).filter(|&v| bits >> v & 1 == 1));
                allowed_classes[d].insert(class_table(d).class(mask_of(&rep, &subset)));
            }
        }
        let allowed = (0..order)
            .map(|d| {
                let t = class_table(d);
                t.class_of.iter().map(|&c| allowed_classes[d].contains(c as usize)).collect()
            })
            .collect();
        Self { order, targets, allowed }
    }

    #[inline]
    fn admits(&self, depth: usize, mask: u64) -> bool {
        self.allowed[depth][mask as usize]
    }
}

struct Walker<'a, V> {
    g: &'a Graph,
    pruner: &'a Pruner,
    top: &'static ClassTable,
    chosen: Vec<usize>,
    visit: V,
}

impl<V: FnMut(&[usize], usize) -> bool> Walker<'_, V> {
    /// Returns `true` when the visitor asked to stop.
    fn descend(&mut self, mask: u64) -> bool {
        let depth = self.chosen.len();
        let k = self.pruner.order;
        let n = self.g.order();
        let next = self.chosen.last().map_or(0, |&v| v + 1);
        let base = depth * depth.saturating_sub(1) / 2;
        for v in next..=n - (k - depth) {
            let mut m = mask;
            for (i, &u) in self.chosen.iter().enumerate() {
                if self.g.adjacent(u, v) {
                    m |= 1 << (base + i);
                }
            }
            self.chosen.push(v);
            let stop = if depth + 1 == k {
                let class = self.top.class(m);
                self.pruner.targets.contains(class) && (self.visit)(&self.chosen, class)
            } else {
                self.pruner.admits(depth + 1, m) && self.descend(m)
            };
            self.chosen.pop();
            if stop {
                return true;
            }
        }
        false
    }
}

/// Runs the scan below the single root vertex `root`.
fn walk_root<V: FnMut(&[usize], usize) -> bool>(g: &Graph, pruner: &Pruner, root: usize, visit: V) {
    let k = pruner.order;
    if k == 0 || root + k > g.order() {
        return;
    }
    let mut w = Walker { g, pruner, top: class_table(k), chosen: vec![root], visit };
    if k == 1 {
        let class = w.top.class(0);
        if pruner.targets.contains(class) {
            (w.visit)(&[root], class);
        }
        return;
    }
    if pruner.admits(1, 0) {
        w.descend(0);
    }
}

/// Number of `k`-subsets whose class is a target.
pub(crate) fn count(g: &Graph, pruner: &Pruner, exec: Exec) -> u64 {
    exec::sum_u128(exec, g.order(), |root| {
        let mut c = 0u64;
        walk_root(g, pruner, root, |_, _| {
            c += 1;
            false
        });
        c as u128
    }) as u64
}

/// Lexicographically least subset whose class is a target.
pub(crate) fn find_first(g: &Graph, pruner: &Pruner, exec: Exec) -> Option<Vec<usize>> {
    exec::find_map_first(exec, g.order(), |root| {
        let mut found = None;
        walk_root(g, pruner, root, |s, _| {
            found = Some(s.to_vec());
            true
        });
        found
    })
}

/// Target classes that occur, stopping once all have been seen.
pub(crate) fn classes_present(g: &Graph, pruner: &Pruner, exec: Exec) -> ClassSet {
    let seen: [AtomicU64; 3] = Default::default();
    let done = AtomicBool::new(false);
    let snapshot = |seen: &[AtomicU64; 3]| ClassSet(std::array::from_fn(|i| seen[i].load(Ordering::Relaxed)));
    exec::map_reduce(
        exec,
        g.order(),
        (),
        |root| {
            if done.load(Ordering::Relaxed) {
                return;
            }
            walk_root(g, pruner, root, |_, class| {
                let known = seen[class / 64].load(Ordering::Relaxed) >> (class % 64) & 1 == 1;
                if !known {
                    seen[class / 64].fetch_or(1 << (class % 64), Ordering::Relaxed);
                    if snapshot(&seen).is_superset(&pruner.targets) {
                        done.store(true, Ordering::Relaxed);
                    }
                }
                done.load(Ordering::Relaxed)
            });
        },
        |_, _| (),
    );
    snapshot(&seen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analyzers::canon::canonical_form;

    fn all(order: usize) -> ClassSet {
        let mut s = ClassSet::default();
        for c in 0..class_table(order).len() {
            s.insert(c);
        }
        s
    }

    fn brute_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        (0..n)
            .flat_map(|last| {
                brute_subsets(last, k - 1).into_iter().map(move |mut s| {
                    s.push(last);
                    s
                })
            })
            .collect()
    }

    #[test]
    fn unpruned_scan_visits_every_subset() {
        let g = crate::graph::Graph::from_edge_list(9, &[(0, 1), (1, 2), (3, 4), (5, 8), (2, 7)]).unwrap();
        for k in 1..=5 {
            let p = Pruner::new(k, all(k));
            let expected = brute_subsets(9, k).len() as u64;
            assert_eq!(count(&g, &p, Exec::Sequential), expected);
            assert_eq!(count(&g, &p, Exec::Parallel), expected);
            assert_eq!(find_first(&g, &p, Exec::Parallel), Some((0..k).collect()));
        }
    }

    #[test]
    fn pruned_count_matches_classification() {
        let edges: Vec<_> = (0..12).flat_map(|i| [(i, (i + 1) % 12), (i, (i + 5) % 12)]).collect();
        let g = Graph::from_edge_list(12, &edges).unwrap();
        let t = class_table(5);
        for c in [0, 7, 20, 33] {
            let mut s = ClassSet::default();
            s.insert(c);
            let brute = brute_subsets(12, 5)
                .iter()
                .filter(|sub| {
                    let code = canonical_form(&g.induced(&crate::graph::VertexSet::new(sub.to_vec(), 12).unwrap()).unwrap()).unwrap();
                    code.bits == t.canon[c]
                })
                .count() as u64;
            assert_eq!(count(&g, &Pruner::new(5, s), Exec::Parallel), brute, "class {c}");
        }
    }
}
