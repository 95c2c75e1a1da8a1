//! The checkable claims about the random-like families, each as a runnable
//! check with pinned tolerances and a runtime budget. The acceptance test
//! and the `verify-claims` command both run this list.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::analyzers::{clique_number, is_l_universal, obstruction_certificate};
use crate::census::{
    census4, census4_brute, induced_count, profile3, profile3_brute, quasirandom_deviation, verify_edge_pair_identity,
    verify_goodman, verify_vertex_edge_identities, Profile3,
};
use crate::constructions::{
    cgw, doubled, gnp, iterated_blowup, oplus_tower, random_graph, random_join, Seed, DEFAULT_SEED,
};
use crate::error::Result;
use crate::graph::{circulant, CirculantParam, Graph};

/// Seed for every randomised claim.
pub const CLAIM_SEED: Seed = DEFAULT_SEED;

/// Order used for the circulant limit check.
pub const CIRCULANT_K: usize = 2000;
pub const CIRCULANT_P3_TOL: f64 = 0.01;
pub const CIRCULANT_P1_TOL: f64 = 0.005;
pub const CIRCULANT_SUM_TOL: f64 = 0.005;

pub const DOUBLED_K: usize = 1000;
pub const DOUBLED_RL3_TOL: f64 = 0.01;
pub const DOUBLED_LEMMA_TOL: f64 = 0.02;

pub const CLIQUE_K: usize = 100;
pub const CLIQUE_BOUND: usize = 9;

pub const CGW_N: usize = 150;
pub const CGW_TOL: f64 = 0.02;
pub const TOWER_N: usize = 75;
pub const TOWER_TOL: f64 = 0.03;

pub const QUASIRANDOM_N: usize = 500;
pub const QUASIRANDOM_MAX: f64 = 0.02;
pub const NON_QUASIRANDOM_MIN: f64 = 0.03;

/// A claim's fixed description.
#[derive(Clone, Copy, Debug)]
pub struct Claim {
    pub id: u32,
    pub title: &'static str,
    pub budget: Duration,
    check: fn() -> Result<Check>,
}

/// What a check measured.
struct Check {
    passed: bool,
    detail: String,
}

impl Check {
    fn new(passed: bool, detail: String) -> Self {
        Self { passed, detail }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Outcome {
    pub id: u32,
    pub title: String,
    /// The check held and finished within its budget.
    pub passed: bool,
    pub detail: String,
    pub elapsed_secs: f64,
    pub budget_secs: f64,
}

impl Outcome {
    /// `PASS [ 3] title (1.2s / 60s): detail`.
    pub fn line(&self) -> String {
        format!(
            "{} [{:>2}] {} ({:.1}s / {:.0}s): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.elapsed_secs,
            self.budget_secs,
            self.detail
        )
    }
}

impl Claim {
    pub fn run(&self) -> Outcome {
        let start = Instant::now();
        let result = (self.check)();
        let elapsed = start.elapsed();
        let in_budget = elapsed <= self.budget;
        let (passed, mut detail) = match result {
            Ok(c) => (c.passed && in_budget, c.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        if !in_budget {
            detail.push_str("; over budget");
        }
        Outcome {
            id: self.id,
            title: self.title.into(),
            passed,
            detail,
            elapsed_secs: elapsed.as_secs_f64(),
            budget_secs: self.budget.as_secs_f64(),
        }
    }
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

pub fn claims() -> Vec<Claim> {
    vec![
        Claim { id: 1, title: "counting identities hold exactly", budget: secs(60), check: identities },
        Claim { id: 2, title: "fast censuses match brute force", budget: secs(120), check: oracles },
        Claim { id: 3, title: "circulant densities at the optimal r", budget: secs(60), check: circulant_limits },
        Claim { id: 4, title: "doubled circulant is random-like", budget: secs(120), check: doubled_rl3 },
        Claim { id: 5, title: "circulant clique bound", budget: secs(300), check: clique_bound },
        Claim { id: 6, title: "doubling transfer identities", budget: secs(60), check: transfer },
        Claim { id: 7, title: "blow-up family: no induced P5", budget: secs(600), check: blowup_family },
        Claim { id: 8, title: "cgw and tower 3-profiles", budget: secs(180), check: cgw_profiles },
        Claim { id: 9, title: "non-universality certificate at level 1", budget: secs(600), check: obstruction },
        Claim { id: 10, title: "random-like instances are 4-universal", budget: secs(300), check: four_universal },
        Claim { id: 11, title: "random-like does not imply quasirandom", budget: secs(120), check: quasirandom },
    ]
}

pub fn run_all() -> Vec<Outcome> {
    claims().iter().map(Claim::run).collect()
}

pub fn optimal_r() -> CirculantParam {
    CirculantParam::OPTIMAL
}

/// Limits of `p3` and `p1` for the circulant with ratio `r`.
pub fn circulant_limit(r: f64) -> (f64, f64) {
    (((r - 3.0) / r).powi(2), 3.0 / (r * r))
}

fn densities(p: &Profile3, n: usize) -> Result<[f64; 4]> {
    let d = p.densities(n)?;
    Ok([d.get(0), d.get(1), d.get(2), d.get(3)])
}

/// `n` in `[lo, hi]` and an edge probability in `[0.05, 0.95]`, per index.
fn sampled_graph(i: u64, lo: usize, hi: usize) -> Result<Graph> {
    let s = CLAIM_SEED.derive(0xc1a1).derive(i);
    let span = (hi - lo + 1) as u64;
    let n = lo + (s.0 % span) as usize;
    let p = 0.05 + 0.9 * ((s.0 >> 32) as f64 / u32::MAX as f64);
    gnp(n, p, s.derive(1))
}

/// Deterministic and seeded constructions of order at most 120.
pub fn small_constructions() -> Result<Vec<(String, Graph)>> {
    let mut out = vec![];
    for level in 1..=2 {
        out.push((format!("blowup({level})"), iterated_blowup(level)?));
    }
    let rs = [optimal_r(), CirculantParam::ratio(4, 1)?, CirculantParam::ratio(5, 2)?, CirculantParam::ratio(7, 1)?];
    for k in [1, 2, 5, 12, 31, 60, 97, 120] {
        for r in rs {
            out.push((format!("circulant({k},{r})"), circulant(k, r)?));
            if 2 * k <= 120 {
                out.push((format!("doubled(circulant({k},{r}))"), doubled(&circulant(k, r)?)?));
            }
        }
    }
    for n in [1, 3, 10, 30] {
        out.push((format!("cgw({n})"), cgw(n, CLAIM_SEED)?));
    }
    for n in [1, 4, 15] {
        out.push((format!("tower(2,{n})"), oplus_tower(2, n, CLAIM_SEED)?));
    }
    out.push(("tower(3,7)".into(), oplus_tower(3, 7, CLAIM_SEED)?));
    out.push((
        "join(blowup(2),circulant(25))".into(),
        random_join(&iterated_blowup(2)?, &circulant(25, optimal_r())?, CLAIM_SEED)?,
    ));
    out.push(("gnp(120)".into(), random_graph(120, CLAIM_SEED)?));
    out.push(("doubled(blowup(2))".into(), doubled(&iterated_blowup(2)?)?));
    Ok(out)
}

fn identities() -> Result<Check> {
    let holds = |g: &Graph| verify_goodman(g) && verify_vertex_edge_identities(g) && verify_edge_pair_identity(g);
    let mut failures = vec![];
    for i in 0..1000 {
        let g = sampled_graph(i, 4, 100)?;
        if !holds(&g) {
            failures.push(format!("random #{i}"));
        }
    }
    let built = small_constructions()?;
    for (name, g) in &built {
        if !holds(g) {
            failures.push(name.clone());
        }
    }
    Ok(Check::new(
        failures.is_empty(),
        format!("1000 random graphs and {} constructions; failures: {failures:?}", built.len()),
    ))
}

fn oracles() -> Result<Check> {
    let mut failures = vec![];
    let mut check = |name: String, g: &Graph| -> Result<()> {
        if profile3(g) != profile3_brute(g)? || census4(g) != census4_brute(g)? {
            failures.push(name);
        }
        Ok(())
    };
    for i in 0..500 {
        check(format!("random #{i}"), &sampled_graph(i ^ 0x0de1, 4, 70)?)?;
    }
    let built = small_constructions()?;
    for (name, g) in &built {
        check(name.clone(), g)?;
    }
    Ok(Check::new(
        failures.is_empty(),
        format!("500 random graphs and {} constructions; mismatches: {failures:?}", built.len()),
    ))
}

fn circulant_limits() -> Result<Check> {
    let r = optimal_r();
    let g = circulant(CIRCULANT_K, r)?;
    let p = densities(&profile3(&g), g.order())?;
    let (p3_lim, p1_lim) = circulant_limit(r.to_f64());
    let ok = (p[3] - p3_lim).abs() <= CIRCULANT_P3_TOL
        && (p[1] - p1_lim).abs() <= CIRCULANT_P1_TOL
        && (p[1] + p[3] - 0.5).abs() <= CIRCULANT_SUM_TOL;
    Ok(Check::new(
        ok,
        format!("k={CIRCULANT_K}: p3={:.6} (limit {p3_lim:.6}), p1={:.6} (limit {p1_lim:.6}), p1+p3={:.6}", p[3], p[1], p[1] + p[3]),
    ))
}

fn doubled_rl3() -> Result<Check> {
    let h = doubled(&circulant(DOUBLED_K, optimal_r())?)?;
    let p = densities(&profile3(&h), h.order())?;
    let ok = (p[0] - 0.125).abs() <= DOUBLED_RL3_TOL
        && (p[3] - 0.125).abs() <= DOUBLED_RL3_TOL
        && (p[1] - 3.0 * p[3]).abs() <= DOUBLED_LEMMA_TOL
        && (p[2] - 3.0 * p[0]).abs() <= DOUBLED_LEMMA_TOL;
    Ok(Check::new(ok, format!("k={DOUBLED_K}, n={}: p=({:.6}, {:.6}, {:.6}, {:.6})", h.order(), p[0], p[1], p[2], p[3])))
}

fn clique_bound() -> Result<Check> {
    let g = circulant(CLIQUE_K, optimal_r())?;
    let h = doubled(&g)?;
    let wg = clique_number(&g)?;
    let wh = clique_number(&h)?;
    let ok = wg.exact && wh.exact && wg.size <= CLIQUE_BOUND && wh.size <= CLIQUE_BOUND;
    Ok(Check::new(ok, format!("omega(circulant)={}, omega(doubled)={} (bound {CLIQUE_BOUND})", wg.size, wh.size)))
}

fn transfer() -> Result<Check> {
    let mut failures = vec![];
    for i in 0..200 {
        let g = sampled_graph(i ^ 0x7a4f, 1, 40)?;
        let p = profile3(&g).counts;
        let q = profile3(&doubled(&g)?).counts;
        if q[3] != 2 * (p[3] + p[1]) || q[0] != 2 * (p[0] + p[2]) {
            failures.push(i);
        }
    }
    Ok(Check::new(failures.is_empty(), format!("200 random graphs, n <= 40; failures: {failures:?}")))
}

fn blowup_family() -> Result<Check> {
    let g = iterated_blowup(3)?;
    let p5 = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4)])?;
    let p5_count = induced_count(&g, &p5)?;
    let degrees = g.degrees();
    let regular = degrees.iter().all(|&d| d == 62);
    let four = is_l_universal(&g, 4)?;
    let five = is_l_universal(&g, 5)?;
    let ok = p5_count == 0 && regular && four.verdict && !five.verdict && five.is_missing(&p5);
    Ok(Check::new(
        ok,
        format!(
            "n={}, induced P5={p5_count}, 62-regular={regular}, 4-universal={}, 5-universal={} ({} of 34 classes missing, P5 missing={})",
            g.order(),
            four.verdict,
            five.verdict,
            five.missing.len(),
            five.is_missing(&p5)
        ),
    ))
}

fn cgw_profiles() -> Result<Check> {
    let target = [0.125, 0.375, 0.375, 0.125];
    let dev = |p: &[f64; 4]| p.iter().zip(target).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    let g = cgw(CGW_N, CLAIM_SEED)?;
    let pg = densities(&profile3(&g), g.order())?;
    let t = oplus_tower(2, TOWER_N, CLAIM_SEED)?;
    let pt = densities(&profile3(&t), t.order())?;
    let ok = dev(&pg) <= CGW_TOL && dev(&pt) <= TOWER_TOL;
    Ok(Check::new(
        ok,
        format!("cgw({CGW_N}) max deviation {:.6}; tower(2,{TOWER_N}) max deviation {:.6}", dev(&pg), dev(&pt)),
    ))
}

fn obstruction() -> Result<Check> {
    let cert = obstruction_certificate(1, 12, CLAIM_SEED, Some(secs(600)))?;
    let ok = cert.verdict && cert.omega <= 11 && cert.alpha <= 11;
    Ok(Check::new(
        ok,
        format!(
            "m={}, omega(W)={}, alpha(W)={}, witness attempt {}, blocks deterministic={}, verdict={}",
            cert.m, cert.omega, cert.alpha, cert.witness_attempt, cert.blocks.all_deterministic, cert.verdict
        ),
    ))
}

fn four_universal() -> Result<Check> {
    let instances = [
        ("blowup(3)", iterated_blowup(3)?),
        ("doubled(circulant(1000))", doubled(&circulant(DOUBLED_K, optimal_r())?)?),
        ("cgw(150)", cgw(CGW_N, CLAIM_SEED)?),
    ];
    let mut verdicts = vec![];
    for (name, g) in &instances {
        verdicts.push((name.to_string(), is_l_universal(g, 4)?.verdict));
    }
    let ok = verdicts.iter().all(|(_, v)| *v);
    Ok(Check::new(ok, format!("{verdicts:?}")))
}

fn quasirandom() -> Result<Check> {
    let random = quasirandom_deviation(&random_graph(QUASIRANDOM_N, CLAIM_SEED)?);
    let blowup = quasirandom_deviation(&iterated_blowup(3)?);
    let cgw_dev = quasirandom_deviation(&cgw(CGW_N, CLAIM_SEED)?);
    let ok = random < QUASIRANDOM_MAX && blowup > NON_QUASIRANDOM_MIN && cgw_dev > NON_QUASIRANDOM_MIN;
    Ok(Check::new(ok, format!("G({QUASIRANDOM_N},1/2) {random:.6}, blowup(3) {blowup:.6}, cgw({CGW_N}) {cgw_dev:.6}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn limits_formula() {
        let (p3, p1) = circulant_limit(optimal_r().to_f64());
        assert!((p3 - 0.466_506_350_946_109_7).abs() < 1e-12);
        assert!((p1 - 0.033_493_649_053_890_3).abs() < 1e-12);
        assert!((p1 + p3 - 0.5).abs() < 1e-12);
    }

    #[test]
    fn ids_are_sequential() {
        for (i, c) in claims().iter().enumerate() {
            assert_eq!(c.id as usize, i + 1);
        }
    }

    #[test]
    fn fast_claims_pass() {
        for id in [6, 11] {
            let o = claims()[id - 1].run();
            assert!(o.passed, "{}", o.line());
        }
    }
}
