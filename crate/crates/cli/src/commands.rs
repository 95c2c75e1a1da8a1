use std::fs;
use std::io::Write;
use std::path::Path;
use std::time::Duration;

use anyhow::{Context, Result};
use clap::ValueEnum;
use rlgraphs::analyzers::{is_l_universal, limit_table, obstruction_certificate, CliqueResult, CliqueSearch, Family};
use rlgraphs::claims;
use rlgraphs::constructions::{Construction, ConstructionSpec, Seed};
use rlgraphs::graph::{graph6, CirculantParam};
use rlgraphs::report::{census_csv, limits_csv, CensusTable, Envelope, Provenance, Source};
use rlgraphs::Exec;
use serde::Serialize;

use crate::source::SourceArgs;

/// Result of a command: success, or a verdict that missed `--expect`.
#[derive(Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    ExpectationFailed(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Graph6,
}

/// Writes to `out`, or stdout when absent or `-`.
pub fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) if p != Path::new("-") => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        _ => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

fn expect(enabled: bool, holds: bool, what: impl FnOnce() -> String) -> Status {
    if enabled && !holds {
        Status::ExpectationFailed(what())
    } else {
        Status::Ok
    }
}

pub fn gen(source: &SourceArgs, out: Option<&Path>) -> Result<Status> {
    let (g, src) = source.load()?;
    emit(out, &format!("{}\n", graph6::encode_string(&g)))?;
    if let Some(path) = out.filter(|p| *p != Path::new("-")) {
        let mut sidecar = path.as_os_str().to_owned();
        sidecar.push(".json");
        #[derive(Serialize)]
        struct Generated {
            order: usize,
            edges: u64,
        }
        let env = Envelope::new(Provenance::new("gen", src), Generated { order: g.order(), edges: g.edge_count() });
        fs::write(&sidecar, env.to_json()).with_context(|| format!("writing {}", Path::new(&sidecar).display()))?;
    }
    Ok(Status::Ok)
}

pub fn census(source: &SourceArgs, order: usize, format: Format, out: Option<&Path>, check: bool) -> Result<Status> {
    let (g, src) = source.load()?;
    let table = CensusTable::compute(&g, order, Exec::default())?;
    let provenance = Provenance::new("census", src);
    let text = match format {
        Format::Csv => census_csv(&provenance, &table),
        Format::Json => Envelope::new(provenance, &table).to_json(),
        Format::Graph6 => anyhow::bail!("census output is csv or json"),
    };
    emit(out, &text)?;
    Ok(expect(check, table.identities.all_hold(), || format!("identity check failed: {:?}", table.identities)))
}

pub fn universal(source: &SourceArgs, l: usize, out: Option<&Path>, check: bool) -> Result<Status> {
    let (g, src) = source.load()?;
    let report = is_l_universal(&g, l)?;
    emit(out, &Envelope::new(Provenance::new("universal", src), &report).to_json())?;
    Ok(expect(check, report.verdict, || format!("not {l}-universal: {} classes missing", report.missing.len())))
}

#[derive(Serialize)]
struct CliqueReport {
    order: usize,
    omega: CliqueResult,
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha: Option<CliqueResult>,
}

pub fn clique(
    source: &SourceArgs,
    budget: Option<Duration>,
    with_alpha: bool,
    at_most: Option<usize>,
    out: Option<&Path>,
) -> Result<Status> {
    let (g, src) = source.load()?;
    let search = CliqueSearch { budget };
    let omega = search.clique(&g);
    let alpha = with_alpha.then(|| search.clique(&g.complement()));
    let exact = omega.exact && alpha.as_ref().is_none_or(|a| a.exact);
    let report = CliqueReport { order: g.order(), omega, alpha };
    emit(out, &Envelope::new(Provenance::new("clique", src), &report).to_json())?;
    if !exact {
        log::warn!("clique search ran out of budget; sizes are lower bounds");
    }
    Ok(match at_most {
        Some(bound) => expect(true, exact && report.omega.size <= bound, || {
            format!("omega = {} (exact: {exact}), expected at most {bound}", report.omega.size)
        }),
        None => Status::Ok,
    })
}

pub fn obstruct(level: u32, n: usize, seed: u64, budget: Option<Duration>, out: Option<&Path>, check: bool) -> Result<Status> {
    let cert = obstruction_certificate(level, n, Seed(seed), budget)?;
    let spec = ConstructionSpec::new(Construction::OplusTower { level, n }, Seed(seed));
    emit(out, &Envelope::new(Provenance::new("obstruct", Source::Construction { spec }), &cert).to_json())?;
    Ok(expect(check, cert.verdict, || "certificate verdict is false".into()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Consistency {
    Goodman,
    Rl3,
    Lemma,
}

#[allow(clippy::too_many_arguments)]
pub fn limits(
    family: &str,
    r: CirculantParam,
    ks: &[usize],
    eps: f64,
    seed: u64,
    format: Format,
    out: Option<&Path>,
    expectation: Option<Consistency>,
) -> Result<Status> {
    let family = Family::parse(family, r)?;
    let rows = limit_table(&family, ks, eps, Seed(seed))?;
    let provenance = Provenance::new("limits", Source::Sweep { family, ks: ks.to_vec(), eps, seed: Seed(seed) });
    let text = match format {
        Format::Csv => limits_csv(&provenance, &rows),
        Format::Json => Envelope::new(provenance, &rows).to_json(),
        Format::Graph6 => anyhow::bail!("limits output is csv or json"),
    };
    emit(out, &text)?;
    let Some(which) = expectation else { return Ok(Status::Ok) };
    let holds = rows.iter().all(|row| match which {
        Consistency::Goodman => row.goodman_consistent,
        Consistency::Rl3 => row.rl3_consistent,
        Consistency::Lemma => row.lemma_consistent,
    });
    Ok(expect(true, holds, || format!("some rows are not {which:?}-consistent at eps = {eps}")))
}

pub fn verify_claims(only: &[u32], json: bool, out: Option<&Path>) -> Result<Status> {
    let outcomes: Vec<claims::Outcome> = claims::claims()
        .iter()
        .filter(|c| only.is_empty() || only.contains(&c.id))
        .map(|c| {
            let o = c.run();
            log::info!("{}", o.line());
            o
        })
        .collect();
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    let text = if json {
        let mut s = serde_json::to_string_pretty(&outcomes)?;
        s.push('\n');
        s
    } else {
        let mut s: String = outcomes.iter().map(|o| o.line() + "\n").collect();
        s.push_str(&format!("{} of {} claims passed\n", outcomes.len() - failed, outcomes.len()));
        s
    };
    emit(out, &text)?;
    Ok(expect(true, failed == 0, || format!("{failed} claim(s) failed")))
}
