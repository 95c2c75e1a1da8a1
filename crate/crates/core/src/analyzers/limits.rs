//! Density sweeps along a family parameter.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::census::{profile3, Profile3};
use crate::constructions::{Construction, ConstructionSpec, Seed};
use crate::error::{Error, Result};
use crate::graph::CirculantParam;

/// A one-parameter family; `k` is the order-like parameter of each member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    Circulant { r: CirculantParam },
    DoubledCirculant { r: CirculantParam },
    /// `k` is the level.
    Blowup,
    /// `k` is `n`; order `4n`.
    Cgw,
    /// `k` is `n`.
    Tower { level: u32 },
    Random,
    Complete,
}

impl Family {
    pub fn member(&self, k: usize) -> Construction {
        match self {
            Family::Circulant { r } => Construction::Circulant { k, r: *r },
            Family::DoubledCirculant { r } => Construction::Doubled {
                inner: Box::new(Construction::Circulant { k, r: *r }),
            },
            Family::Blowup => Construction::IteratedBlowup { level: k as u32 },
            Family::Cgw => Construction::CgwBase { n: k },
            Family::Tower { level } => Construction::OplusTower { level: *level, n: k },
            Family::Random => Construction::Random { n: k },
            Family::Complete => Construction::Complete { n: k },
        }
    }

    /// Parses `circulant`, `doubled-circulant`, `blowup`, `cgw`, `tower:<level>`,
    /// `random` or `complete`; `r` applies to the circulant families.
    pub fn parse(name: &str, r: CirculantParam) -> Result<Self> {
        Ok(match name {
            "circulant" => Family::Circulant { r },
            "doubled-circulant" => Family::DoubledCirculant { r },
            "blowup" => Family::Blowup,
            "cgw" => Family::Cgw,
            "random" => Family::Random,
            "complete" => Family::Complete,
            other => match other.strip_prefix("tower:") {
                Some(level) => Family::Tower {
                    level: level
                        .parse()
                        .map_err(|_| Error::InvalidParameter(format!("bad tower level in {other}")))?,
                },
                None => return Err(Error::InvalidParameter(format!("unknown family {other}"))),
            },
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Circulant { r } => write!(f, "circulant(r={r})"),
            Family::DoubledCirculant { r } => write!(f, "doubled-circulant(r={r})"),
            Family::Blowup => f.write_str("blowup"),
            Family::Cgw => f.write_str("cgw"),
            Family::Tower { level } => write!(f, "tower:{level}"),
            Family::Random => f.write_str("random"),
            Family::Complete => f.write_str("complete"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::parse(s, CirculantParam::OPTIMAL)
    }
}

/// Densities of one family member and their deviations from the random-like values.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LimitRow {
    pub spec: ConstructionSpec,
    pub k: usize,
    pub order: usize,
    /// `(D0, D1, D2, D3)`.
    pub counts: [u64; 4],
    pub p: [f64; 4],
    /// `|p0 + p3 - 1/4|`.
    pub goodman_deviation: f64,
    /// `max(|p0 - 1/8|, |p3 - 1/8|)`.
    pub rl3_deviation: f64,
    /// `|p1 - 3 p3|`.
    pub lemma_p1_deviation: f64,
    /// `|p2 - 3 p0|`.
    pub lemma_p2_deviation: f64,
    pub goodman_consistent: bool,
    pub rl3_consistent: bool,
    pub lemma_consistent: bool,
}

impl LimitRow {
    pub fn new(spec: ConstructionSpec, k: usize, order: usize, profile: &Profile3, eps: f64) -> Result<Self> {
        let d = profile.densities(order)?;
        let p = [d.get(0), d.get(1), d.get(2), d.get(3)];
        let goodman_deviation = (p[0] + p[3] - 0.25).abs();
        let rl3_deviation = (p[0] - 0.125).abs().max((p[3] - 0.125).abs());
        let lemma_p1_deviation = (p[1] - 3.0 * p[3]).abs();
        let lemma_p2_deviation = (p[2] - 3.0 * p[0]).abs();
        Ok(Self {
            spec,
            k,
            order,
            counts: profile.counts,
            p,
            goodman_deviation,
            rl3_deviation,
            lemma_p1_deviation,
            lemma_p2_deviation,
            goodman_consistent: goodman_deviation < eps,
            rl3_consistent: rl3_deviation < eps,
            lemma_consistent: lemma_p1_deviation < eps && lemma_p2_deviation < eps,
        })
    }
}

/// One row per `k`, no extrapolation.
pub fn limit_table(family: &Family, ks: &[usize], eps: f64, seed: Seed) -> Result<Vec<LimitRow>> {
    if eps.is_nan() || eps <= 0.0 {
        return Err(Error::InvalidParameter(format!("eps = {eps} must be positive")));
    }
    ks.iter()
        .map(|&k| {
            let spec = ConstructionSpec::new(family.member(k), seed);
            let g = spec.build()?;
            LimitRow::new(spec, k, g.order(), &profile3(&g), eps)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graphs_are_not_goodman() {
        let rows = limit_table(&Family::Complete, &[10, 50], 0.01, Seed(1)).unwrap();
        for r in rows {
            assert_eq!(r.p, [0.0, 0.0, 0.0, 1.0]);
            assert!(!r.goodman_consistent && !r.rl3_consistent);
        }
    }

    #[test]
    fn parse_families() {
        assert_eq!(Family::parse("tower:2", CirculantParam::OPTIMAL).unwrap(), Family::Tower { level: 2 });
        assert_eq!("cgw".parse::<Family>().unwrap(), Family::Cgw);
        assert!("tower:x".parse::<Family>().is_err());
        assert!("nope".parse::<Family>().is_err());
        assert!(limit_table(&Family::Cgw, &[4], 0.0, Seed(1)).is_err());
    }

    #[test]
    fn blowup_rows() {
        let rows = limit_table(&Family::Blowup, &[1, 2], 0.01, Seed(1)).unwrap();
        assert_eq!(rows[0].order, 5);
        assert_eq!(rows[0].p, [0.0, 0.5, 0.5, 0.0]);
        assert_eq!(rows[1].order, 25);
    }
}
