//! The circulant threshold family: `i ~ j` iff the cyclic distance of `i`
//! and `j` in `Z_k` exceeds `k / r`.
//!
//! The threshold parameter is kept exact. Rational values compare by integer
//! cross-multiplication; values of the form `a + b·√c` compare by squaring.
//! No floating point enters the edge test, so every platform builds the same
//! graph.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{check_order, Graph, GraphBuilder};
use crate::error::{Error, Result};

/// Decimal expansion of `6 + 2√3`, the parameter that balances `p1 + p3 = 1/2`.
pub const OPTIMAL_R_DIGITS: &str = "9.4641016151377545870548926830117447338856105076208";

/// Exact circulant parameter `r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "form", rename_all = "snake_case")]
pub enum CirculantParam {
    /// `r = num / den`.
    Ratio { num: u64, den: u64 },
    /// `r = a + b·√c`.
    Surd { a: i64, b: u64, c: u64 },
}

impl CirculantParam {
    /// `6 + 2√3`.
    pub const OPTIMAL: CirculantParam = CirculantParam::Surd { a: 6, b: 2, c: 3 };

    pub fn ratio(num: u64, den: u64) -> Result<Self> {
        if den == 0 {
            return Err(Error::InvalidParameter("zero denominator".into()));
        }
        let g = gcd(num, den);
        Ok(CirculantParam::Ratio { num: num / g, den: den / g })
    }

    /// The exact dyadic value of a finite positive float.
    pub fn from_f64(x: f64) -> Result<Self> {
        if !x.is_finite() || x <= 0.0 {
            return Err(Error::InvalidParameter(format!("r = {x} must be finite and positive")));
        }
        let bits = x.to_bits();
        let exp = ((bits >> 52) & 0x7ff) as i32;
        let frac = bits & ((1u64 << 52) - 1);
        let (mut mant, mut e2) = if exp == 0 { (frac, -1074) } else { (frac | 1 << 52, exp - 1075) };
        while mant % 2 == 0 && e2 < 0 {
            mant /= 2;
            e2 += 1;
        }
        if e2 >= 0 {
            let num = mant
                .checked_shl(e2 as u32)
                .filter(|v| v >> e2 == mant)
                .ok_or_else(|| Error::InvalidParameter(format!("r = {x} is too large")))?;
            Self::ratio(num, 1)
        } else if -e2 < 64 {
            Self::ratio(mant, 1u64 << -e2)
        } else {
            Err(Error::InvalidParameter(format!("r = {x} is too small")))
        }
    }

    pub fn to_f64(self) -> f64 {
        match self {
            CirculantParam::Ratio { num, den } => num as f64 / den as f64,
            CirculantParam::Surd { a, b, c } => a as f64 + b as f64 * (c as f64).sqrt(),
        }
    }

    /// Compares `r` with the integer `m` exactly.
    pub fn cmp_int(self, m: i64) -> Ordering {
        match self {
            CirculantParam::Ratio { num, den } => {
                (num as i128).cmp(&(m as i128 * den as i128))
            }
            CirculantParam::Surd { a, b, c } => {
                // a + b√c vs m  <=>  b√c vs m - a
                let rhs = m as i128 - a as i128;
                if rhs < 0 {
                    return Ordering::Greater;
                }
                let lhs_sq = (b as i128) * (b as i128) * c as i128;
                lhs_sq.cmp(&(rhs * rhs))
            }
        }
    }

    /// `⌈r⌉`.
    pub fn ceil(self) -> i64 {
        let mut m = self.to_f64().ceil() as i64;
        while self.cmp_int(m) == Ordering::Greater {
            m += 1;
        }
        while self.cmp_int(m - 1) != Ordering::Greater {
            m -= 1;
        }
        m
    }

    /// Exact test `d > k / r`, i.e. `d·r > k`.
    pub fn distance_exceeds(self, d: u64, k: u64) -> bool {
        match self {
            CirculantParam::Ratio { num, den } => d as u128 * num as u128 > k as u128 * den as u128,
            CirculantParam::Surd { a, b, c } => {
                // b·d·√c > k - a·d
                let rhs = k as i128 - a as i128 * d as i128;
                if rhs < 0 {
                    return true;
                }
                let bd = b as i128 * d as i128;
                bd * bd * c as i128 > rhs * rhs
            }
        }
    }
}

impl fmt::Display for CirculantParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CirculantParam::Ratio { num, den: 1 } => write!(f, "{num}"),
            CirculantParam::Ratio { num, den } => write!(f, "{num}/{den}"),
            CirculantParam::Surd { a, b, c } => write!(f, "{a}+{b}sqrt{c}"),
        }
    }
}

impl FromStr for CirculantParam {
    type Err = Error;

    /// Accepts `opt` (for `6+2sqrt3`), `a+bsqrtc`, a fraction `p/q`, or an
    /// exact decimal such as `4.0` or `9.46`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidParameter(format!("cannot parse circulant parameter {s:?}"));
        if s.eq_ignore_ascii_case("opt") || s.eq_ignore_ascii_case("optimal") {
            return Ok(Self::OPTIMAL);
        }
        if let Some((a, rest)) = s.split_once('+') {
            let (b, c) = rest.split_once("sqrt").ok_or_else(bad)?;
            let b = if b.is_empty() { 1 } else { b.parse().map_err(|_| bad())? };
            return Ok(CirculantParam::Surd {
                a: a.parse().map_err(|_| bad())?,
                b,
                c: c.parse().map_err(|_| bad())?,
            });
        }
        if let Some((p, q)) = s.split_once('/') {
            return Self::ratio(p.parse().map_err(|_| bad())?, q.parse().map_err(|_| bad())?);
        }
        let (int, frac) = s.split_once('.').unwrap_or((s, ""));
        if int.is_empty() && frac.is_empty() || frac.len() > 18 {
            return Err(bad());
        }
        let digits = format!("{int}{frac}");
        if !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let num: u64 = digits.parse().map_err(|_| bad())?;
        Self::ratio(num, 10u64.pow(frac.len() as u32))
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

/// Builds `G_k^r` on vertices `0..k`.
///
/// `r` must be positive; `r <= 2` is accepted with a warning since the
/// threshold then exceeds every cyclic distance and the graph is empty.
pub fn circulant(k: usize, r: CirculantParam) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidParameter("circulant order must be at least 1".into()));
    }
    if r.cmp_int(0) != Ordering::Greater {
        return Err(Error::InvalidParameter(format!("r = {r} must be positive")));
    }
    if r.cmp_int(2) != Ordering::Greater {
        log::warn!("circulant parameter r = {r} <= 2 yields the empty graph");
    }
    check_order(k as u128)?;
    let joined: Vec<bool> = (0..=k / 2)
        .map(|d| d > 0 && r.distance_exceeds(d as u64, k as u64))
        .collect();
    let mut b = GraphBuilder::new(k)?;
    for i in 0..k {
        for j in i + 1..k {
            let d = (j - i).min(k - (j - i));
            if joined[d] {
                b.set(i, j);
            }
        }
    }
    Ok(b.build())
}
