use super::{binomial, census4, profile3, ClassId4};
use crate::analyzers::canon::canonical_form;
use crate::analyzers::universality::scan_count;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::graph::Graph;

/// `D_H(G)`: vertex subsets inducing a copy of `h`, for `|h| <= 6`.
///
/// Orders up to four come from the exact censuses; five and six use the
/// pruned subset scan and are limited to hosts of order 300 and 120.
pub fn induced_count(g: &Graph, h: &Graph) -> Result<u64> {
    let n = g.order() as u64;
    match h.order() {
        0 => Ok(1),
        1 => Ok(n),
        2 => Ok(if h.edge_count() == 1 { g.edge_count() } else { g.non_edge_count() }),
        3 => Ok(profile3(g).counts[h.edge_count() as usize]),
        4 => {
            let code = canonical_form(h)?;
            let id = ClassId4::ALL
                .into_iter()
                .find(|c| canonical_form(&c.representative()).ok() == Some(code))
                .expect("every 4-vertex graph has a class");
            Ok(census4(g).get(id))
        }
        5 | 6 => scan_count(g, h, Exec::default()),
        k => Err(Error::TooLarge { order: k, limit: 6 }),
    }
    .map(|c| if (h.order() as u64) > n { 0 } else { c })
    .inspect(|&c| debug_assert!(c as u128 <= binomial(n, h.order() as u64)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let c5 = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let p5 = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(induced_count(&c5, &p5).unwrap(), 0);
        assert_eq!(induced_count(&c5, &c5).unwrap(), 1);
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(induced_count(&k5, &Graph::complete(3).unwrap()).unwrap(), 10);
        assert_eq!(induced_count(&k5, &Graph::empty(2).unwrap()).unwrap(), 0);
        let p4 = Graph::from_edge_list(4, &[(3, 1), (1, 0), (0, 2)]).unwrap();
        assert_eq!(induced_count(&c5, &p4).unwrap(), 5);
        assert_eq!(induced_count(&Graph::empty(2).unwrap(), &k5).unwrap(), 0);
        assert!(induced_count(&c5, &Graph::empty(7).unwrap()).is_err());
    }
}
