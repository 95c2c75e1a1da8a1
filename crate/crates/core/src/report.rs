//! Serialised outputs. Every JSON document and CSV file carries a
//! [`Provenance`] record naming the tool version and the exact input, so a
//! file can be regenerated from its own header. Field order is fixed by the
//! struct definitions, which makes equal runs byte-identical.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::analyzers::{Family, LimitRow};
use crate::census::{census4_with, profile3_with, ClassId4, Density, DensityVector, IdentityReport};
use crate::constructions::{ConstructionSpec, Seed};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::graph::Graph;

pub const TOOL: &str = "rlgraphs";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
pub const REPORT_SCHEMA_VERSION: u32 = 1;

/// Where the analysed graph came from.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Source {
    Construction { spec: ConstructionSpec },
    /// Graph number `index` (from 0) of a graph6 file; `-` is stdin.
    Input { path: String, index: usize },
    Sweep { family: Family, ks: Vec<usize>, eps: f64, seed: Seed },
}

impl Source {
    /// Short label used in the `construction` column of CSV output.
    pub fn label(&self) -> String {
        match self {
            Source::Construction { spec } => spec.to_string(),
            Source::Input { path, index } if path == "-" => format!("stdin#{index}"),
            Source::Input { path, index } => format!("{path}#{index}"),
            Source::Sweep { family, .. } => family.to_string(),
        }
    }

    /// Size parameter for the `k` column.
    pub fn k(&self) -> Option<u64> {
        match self {
            Source::Construction { spec } => spec.construction.size_parameter(),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub tool: String,
    pub version: String,
    pub schema_version: u32,
    pub command: String,
    pub source: Source,
}

impl Provenance {
    pub fn new(command: &str, source: Source) -> Self {
        Self {
            tool: TOOL.into(),
            version: VERSION.into(),
            schema_version: REPORT_SCHEMA_VERSION,
            command: command.into(),
            source,
        }
    }

    /// `# rlgraphs <version> provenance <json>`, the first line of every CSV.
    pub fn csv_comment(&self) -> String {
        format!("# {TOOL} {VERSION} provenance {}", to_json_line(self))
    }
}

/// A report with its provenance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Envelope<T> {
    pub provenance: Provenance,
    pub report: T,
}

impl<T: Serialize> Envelope<T> {
    pub fn new(provenance: Provenance, report: T) -> Self {
        Self { provenance, report }
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialise");
        s.push('\n');
        s
    }
}

fn to_json_line<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("reports serialise")
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassCount {
    pub class: String,
    pub count: u64,
    /// Exact `count / C(n, k)`.
    pub density: Density,
    /// The same density as a decimal.
    pub value: f64,
}

/// Induced-subgraph census of one graph together with the identity checks.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CensusTable {
    pub subgraph_order: usize,
    pub n: usize,
    pub edges: u64,
    pub classes: Vec<ClassCount>,
    pub identities: IdentityReport,
}

/// Class names of the 3-vertex census, indexed by edge count.
pub const PROFILE3_CLASSES: [&str; 4] = ["D0", "D1", "D2", "D3"];

fn class_counts(names: impl Iterator<Item = String>, d: &DensityVector) -> Vec<ClassCount> {
    names
        .zip(&d.values)
        .map(|(class, &density)| ClassCount { class, count: density.num, density, value: density.value() })
        .collect()
}

impl CensusTable {
    /// Runs the census of the given subgraph order (3 or 4). The 3-vertex
    /// profile is always computed since the identities need it.
    pub fn compute(g: &Graph, subgraph_order: usize, exec: Exec) -> Result<Self> {
        let n = g.order();
        let profile = profile3_with(g, exec);
        let (classes, identities) = match subgraph_order {
            3 => {
                let d = profile.densities(n)?;
                let names = PROFILE3_CLASSES.iter().map(|s| s.to_string());
                (class_counts(names, &d), IdentityReport::check(g, &profile, None))
            }
            4 => {
                let census = census4_with(g, exec);
                let d = census.densities(n)?;
                let names = ClassId4::ALL.iter().map(|c| c.name().to_string());
                (class_counts(names, &d), IdentityReport::check(g, &profile, Some(&census)))
            }
            other => {
                return Err(Error::InvalidParameter(format!("census order must be 3 or 4, got {other}")));
            }
        };
        Ok(Self { subgraph_order, n, edges: g.edge_count(), classes, identities })
    }
}

fn csv_writer() -> csv::Writer<Vec<u8>> {
    csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new())
}

fn finish(header: String, w: csv::Writer<Vec<u8>>) -> String {
    let body = String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8 csv");
    let mut out = header;
    out.push('\n');
    out.push_str(&body);
    out
}

fn flag_line(table: &CensusTable) -> String {
    let id = &table.identities;
    let mut s = format!("# identities goodman={} vertex_edge={} profile_total={}", id.goodman, id.vertex_edge, id.profile_total);
    if let Some(v) = id.edge_pair {
        let _ = write!(s, " edge_pair={v}");
    }
    if let Some(v) = id.census4_total {
        let _ = write!(s, " census4_total={v}");
    }
    s
}

/// Census CSV: provenance comment, identity comment, then
/// `construction,k,n,class,count,density` rows.
pub fn census_csv(provenance: &Provenance, table: &CensusTable) -> String {
    let label = provenance.source.label();
    let k = provenance.source.k().map(|k| k.to_string()).unwrap_or_default();
    let n = table.n.to_string();
    let mut w = csv_writer();
    w.write_record(["construction", "k", "n", "class", "count", "density"]).expect("csv write");
    for c in &table.classes {
        w.write_record([&label, &k, &n, &c.class, &c.count.to_string(), &c.density.to_string()])
            .expect("csv write");
    }
    finish(format!("{}\n{}", provenance.csv_comment(), flag_line(table)), w)
}

/// Sweep CSV, one line per family member.
pub fn limits_csv(provenance: &Provenance, rows: &[LimitRow]) -> String {
    let mut w = csv_writer();
    w.write_record([
        "construction", "k", "n", "p0", "p1", "p2", "p3", "goodman_deviation", "rl3_deviation",
        "lemma_p1_deviation", "lemma_p2_deviation", "goodman", "rl3", "lemma",
    ])
    .expect("csv write");
    for r in rows {
        let mut record = vec![r.spec.to_string(), r.k.to_string(), r.order.to_string()];
        record.extend(r.p.iter().map(|p| format!("{p:.15}")));
        record.extend(
            [r.goodman_deviation, r.rl3_deviation, r.lemma_p1_deviation, r.lemma_p2_deviation]
                .iter()
                .map(|d| format!("{d:.15}")),
        );
        record.extend([r.goodman_consistent, r.rl3_consistent, r.lemma_consistent].iter().map(|b| b.to_string()));
        w.write_record(&record).expect("csv write");
    }
    finish(provenance.csv_comment(), w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{five_cycle, Construction};

    fn c5_provenance() -> Provenance {
        Provenance::new("census", Source::Input { path: "c5.g6".into(), index: 0 })
    }

    #[test]
    fn c5_census_csv() {
        let table = CensusTable::compute(&five_cycle(), 3, Exec::Sequential).unwrap();
        let counts: Vec<u64> = table.classes.iter().map(|c| c.count).collect();
        assert_eq!(counts, [0, 5, 5, 0]);
        assert!(table.identities.all_hold());
        let csv = census_csv(&c5_provenance(), &table);
        let lines: Vec<&str> = csv.lines().collect();
        assert!(lines[0].starts_with("# rlgraphs "));
        assert_eq!(lines[1], "# identities goodman=true vertex_edge=true profile_total=true");
        assert_eq!(lines[2], "construction,k,n,class,count,density");
        assert_eq!(lines[4], "c5.g6#0,,5,D1,5,0.500000000000000");
        assert_eq!(lines.len(), 7);
    }

    #[test]
    fn census4_names_and_flags() {
        let table = CensusTable::compute(&Graph::complete(4).unwrap(), 4, Exec::Sequential).unwrap();
        assert_eq!(table.classes.len(), 11);
        let k4 = table.classes.iter().find(|c| c.class == "K4").unwrap();
        assert_eq!(k4.count, 1);
        assert_eq!(table.identities.edge_pair, Some(true));
        assert!(CensusTable::compute(&five_cycle(), 5, Exec::Sequential).is_err());
    }

    #[test]
    fn construction_label_and_k() {
        let spec = ConstructionSpec::new(Construction::CgwBase { n: 3 }, Seed(2));
        let p = Provenance::new("census", Source::Construction { spec: spec.clone() });
        let table = CensusTable::compute(&spec.build().unwrap(), 3, Exec::Sequential).unwrap();
        let csv = census_csv(&p, &table);
        assert!(csv.lines().nth(3).unwrap().starts_with("cgw(n=3)@seed=2,3,12,D0,"));
    }

    #[test]
    fn envelopes_are_deterministic() {
        let table = CensusTable::compute(&five_cycle(), 3, Exec::Parallel).unwrap();
        let a = Envelope::new(c5_provenance(), table.clone()).to_json();
        let b = Envelope::new(c5_provenance(), table).to_json();
        assert_eq!(a, b);
        let first_keys: Vec<&str> = a.lines().skip(1).take(3).map(str::trim).collect();
        assert_eq!(first_keys[0], "\"provenance\": {");
        assert!(first_keys[1].starts_with("\"tool\": \"rlgraphs\""));
        let back: Envelope<CensusTable> = serde_json::from_str(&a).unwrap();
        assert_eq!(back.report.n, 5);
    }
}
