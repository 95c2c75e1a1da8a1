use serde::{Deserialize, Serialize};

use super::{binomial, DensityVector};
use crate::error::{Error, Result};
use crate::exec::{self, Exec};
use crate::graph::{and_count, iter_bits, Graph};

/// Counts `(D0, D1, D2, D3)` of induced 3-vertex subgraphs by edge number.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Profile3 {
    pub counts: [u64; 4],
}

impl Profile3 {
    pub fn total(&self) -> u128 {
        self.counts.iter().map(|&c| c as u128).sum()
    }

    /// The profile of the complement.
    pub fn reversed(&self) -> Profile3 {
        let [a, b, c, d] = self.counts;
        Profile3 { counts: [d, c, b, a] }
    }

    pub fn densities(&self, n: usize) -> Result<DensityVector> {
        DensityVector::from_counts(&self.counts, n, 3)
    }
}

const BRUTE_LIMIT: usize = 400;

/// Reference census: classifies every triple.
pub fn profile3_brute(g: &Graph) -> Result<Profile3> {
    let n = g.order();
    if n > BRUTE_LIMIT {
        return Err(Error::TooLarge { order: n, limit: BRUTE_LIMIT });
    }
    let mut counts = [0u64; 4];
    for u in 0..n {
        for v in u + 1..n {
            let uv = g.adjacent(u, v) as usize;
            for w in v + 1..n {
                counts[uv + g.adjacent(u, w) as usize + g.adjacent(v, w) as usize] += 1;
            }
        }
    }
    Ok(Profile3 { counts })
}

/// Number of triangles, from co-degrees along edges.
pub fn triangle_count(g: &Graph, exec: Exec) -> u64 {
    let three_t = exec::sum_u128(exec, g.order(), |u| {
        let row = g.row(u);
        iter_bits(row)
            .filter(|&v| v > u)
            .map(|v| and_count(row, g.row(v)) as u128)
            .sum()
    });
    (three_t / 3) as u64
}

fn wedges(degrees: impl Iterator<Item = usize>) -> u128 {
    degrees.map(|d| binomial(d as u64, 2)).sum()
}

/// Accelerated census. `D3` and `D0` are the triangle counts of `G` and `Ḡ`;
/// `D2` and `D1` follow from the wedge counts, since every induced path on
/// three vertices has one wedge and every triangle three.
pub fn profile3(g: &Graph) -> Profile3 {
    profile3_with(g, Exec::default())
}

pub fn profile3_with(g: &Graph, exec: Exec) -> Profile3 {
    let n = g.order();
    let comp = g.complement();
    let d3 = triangle_count(g, exec);
    let d0 = triangle_count(&comp, exec);
    let degrees = g.degrees();
    let w = wedges(degrees.iter().copied());
    let wc = wedges(degrees.iter().map(|&d| n - 1 - d));
    let d2 = w - 3 * d3 as u128;
    let d1 = wc - 3 * d0 as u128;
    Profile3 { counts: [d0, d1 as u64, d2 as u64, d3] }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::circulant;

    fn c5() -> Graph {
        Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
    }

    #[test]
    fn brute_examples() {
        assert_eq!(profile3_brute(&c5()).unwrap().counts, [0, 5, 5, 0]);
        assert_eq!(profile3_brute(&Graph::complete(4).unwrap()).unwrap().counts, [0, 0, 0, 4]);
        assert_eq!(profile3_brute(&Graph::empty(4).unwrap()).unwrap().counts, [4, 0, 0, 0]);
        assert!(matches!(
            profile3_brute(&Graph::empty(401).unwrap()),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn accelerated_examples() {
        assert_eq!(profile3(&c5()).counts, [0, 5, 5, 0]);
        // circulant(12, 4): distances {4,5,6} joined; counts enumerated independently.
        let g = circulant(12, "4".parse().unwrap()).unwrap();
        let brute = profile3_brute(&g).unwrap();
        assert_eq!(brute.counts, [36, 72, 108, 4]);
        assert_eq!(profile3(&g), brute);
        assert_eq!(profile3_with(&g, Exec::Sequential), brute);
        for n in 0..3 {
            assert_eq!(profile3(&Graph::complete(n).unwrap()).counts, [0; 4]);
        }
    }
}
