use crate::error::{Error, Result};
use crate::exec::{self, Exec};
use crate::graph::{and_count, Graph, VertexSet};

/// Vertices with `|d(v) - n/2| >= eps·n`.
pub fn exceptional_vertices(g: &Graph, eps: f64) -> Result<VertexSet> {
    if !(eps > 0.0 && eps < 0.5) {
        return Err(Error::InvalidParameter(format!("eps = {eps} must lie in (0, 1/2)")));
    }
    let n = g.order();
    let members = (0..n)
        .filter(|&v| (2.0 * g.deg(v) as f64 - n as f64).abs() >= 2.0 * eps * n as f64)
        .collect();
    Ok(VertexSet::from_sorted(members))
}

/// `n^-3 · Σ_{u<v} |d(u,v) - n/4|` over all pairs.
pub fn quasirandom_deviation(g: &Graph) -> f64 {
    quasirandom_deviation_with(g, Exec::default())
}

pub fn quasirandom_deviation_with(g: &Graph, exec: Exec) -> f64 {
    let n = g.order();
    if n == 0 {
        return 0.0;
    }
    // Σ |4·d(u,v) - n|, kept integral
    let four_times = exec::sum_u128(exec, n, |u| {
        let ru = g.row(u);
        (u + 1..n)
            .map(|v| (4 * and_count(ru, g.row(v)) as i64 - n as i64).unsigned_abs() as u128)
            .sum()
    });
    four_times as f64 / (4.0 * (n as f64).powi(3))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exceptional_examples() {
        let kk = Graph::complete(10).unwrap();
        let bip = Graph::complete(2).unwrap().blow_up(10).unwrap();
        assert!(exceptional_vertices(&bip, 0.01).unwrap().is_empty());
        assert_eq!(exceptional_vertices(&kk, 0.1).unwrap().len(), 10);
        let star = Graph::from_edge_list(10, &(1..10).map(|v| (0, v)).collect::<Vec<_>>()).unwrap();
        assert_eq!(exceptional_vertices(&star, 0.1).unwrap(), VertexSet::full(10));
        assert!(exceptional_vertices(&star, 0.0).is_err());
        assert!(exceptional_vertices(&star, 0.5).is_err());
    }

    #[test]
    fn boundary_is_inclusive() {
        let g = Graph::complete(10).unwrap();
        assert_eq!(exceptional_vertices(&g, 0.4).unwrap().len(), 10);
        // n = 10, d = 4: |4 - 5| = 1 = 0.1·10 counts as exceptional
        let c5_twice = Graph::from_edge_list(10, &(0..10).flat_map(|i| [(i, (i + 1) % 10), (i, (i + 2) % 10)]).collect::<Vec<_>>()).unwrap();
        assert_eq!(c5_twice.degrees(), vec![4; 10]);
        assert_eq!(exceptional_vertices(&c5_twice, 0.1).unwrap().len(), 10);
        assert!(exceptional_vertices(&c5_twice, 0.11).unwrap().is_empty());
    }

    #[test]
    fn closed_forms() {
        // K_n: every co-degree is n-2
        for n in [40usize, 200] {
            let expected = (n * (n - 1) / 2) as f64 * ((n - 2) as f64 - n as f64 / 4.0) / (n as f64).powi(3);
            let got = quasirandom_deviation(&Graph::complete(n).unwrap());
            assert!((got - expected).abs() < 1e-12);
            let expected = (n * (n - 1) / 2) as f64 * (n as f64 / 4.0) / (n as f64).powi(3);
            assert!((quasirandom_deviation(&Graph::empty(n).unwrap()) - expected).abs() < 1e-12);
        }
        // limits 3/8 and 1/8 for large n
        let k = Graph::complete(2000).unwrap();
        assert!((quasirandom_deviation_with(&k, Exec::Sequential) - 0.375).abs() < 1e-3);
        assert!((quasirandom_deviation(&k.complement()) - 0.125).abs() < 1e-3);
        assert_eq!(quasirandom_deviation(&Graph::empty(0).unwrap()), 0.0);
    }
}
