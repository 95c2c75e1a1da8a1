//! Exact induced-subgraph censuses on three and four vertices.
//!
//! Each census has a brute-force enumeration, kept as the reference, and an
//! accelerated kernel built from bitset co-degree statistics. The two must
//! agree bit for bit.

mod census4;
mod identities;
mod induced;
mod profile3;
mod regularity;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use census4::{census4, census4_brute, census4_with, classify4, Census4, ClassId4};
pub use identities::{
    verify_edge_pair_identity, verify_goodman, verify_vertex_edge_identities, IdentityReport,
};
pub use induced::induced_count;
pub use profile3::{profile3, profile3_brute, profile3_with, triangle_count, Profile3};
pub use regularity::{exceptional_vertices, quasirandom_deviation, quasirandom_deviation_with};

/// `C(n, k)` as a `u128`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// An exact density `num / den`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Density {
    pub num: u64,
    pub den: u64,
}

impl Density {
    pub fn value(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl fmt::Display for Density {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.15}", self.value())
    }
}

/// Densities `p_i = D_i / C(n, size)` of one census.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DensityVector {
    pub subgraph_order: usize,
    pub values: Vec<Density>,
}

impl DensityVector {
    /// Divides `counts` by `C(n, subgraph_order)`. The counts must sum to it.
    pub fn from_counts(counts: &[u64], n: usize, subgraph_order: usize) -> Result<Self> {
        let total = binomial(n as u64, subgraph_order as u64);
        if total == 0 {
            return Err(Error::InvalidParameter(format!(
                "densities need at least {subgraph_order} vertices, got {n}"
            )));
        }
        let sum: u128 = counts.iter().map(|&c| c as u128).sum();
        if sum != total {
            return Err(Error::InvalidParameter(format!(
                "counts sum to {sum}, expected C({n},{subgraph_order}) = {total}"
            )));
        }
        let den = u64::try_from(total)
            .map_err(|_| Error::InvalidParameter("subset count exceeds 64 bits".into()))?;
        Ok(Self {
            subgraph_order,
            values: counts.iter().map(|&num| Density { num, den }).collect(),
        })
    }

    pub fn get(&self, i: usize) -> f64 {
        self.values[i].value()
    }

    pub fn to_f64s(&self) -> Vec<f64> {
        self.values.iter().map(|d| d.value()).collect()
    }
}

/// Which census to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CensusOrder {
    Three,
    Four,
}

impl FromStr for CensusOrder {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "3" => Ok(CensusOrder::Three),
            "4" => Ok(CensusOrder::Four),
            _ => Err(Error::InvalidParameter(format!("census order must be 3 or 4, got {s}"))),
        }
    }
}
