use std::fs;
use std::io::Read;

use anyhow::{bail, Context, Result};
use clap::{ArgGroup, Args};
use rlgraphs::constructions::{Construction, ConstructionSpec, Seed, DEFAULT_SEED};
use rlgraphs::graph::{graph6, CirculantParam};
use rlgraphs::report::Source;
use rlgraphs::Graph;

/// Where the graph under analysis comes from. Exactly one of the source
/// flags must be given.
#[derive(Args, Debug, Clone)]
#[command(group(
    ArgGroup::new("source")
        .required(true)
        .args(["input", "spec_json", "blowup", "circulant", "cgw", "tower", "gnp", "complete"]),
))]
pub struct SourceArgs {
    /// graph6 file, one graph per line; `-` reads stdin
    #[arg(long, value_name = "PATH")]
    pub input: Option<String>,
    /// Which graph of a multi-graph input to use, from 0
    #[arg(long, default_value_t = 0, requires = "input")]
    pub index: usize,
    /// Construction as JSON, or `@path` to read it from a file
    #[arg(long, value_name = "JSON")]
    pub spec_json: Option<String>,
    /// Iterated blow-up of C5 at this level
    #[arg(long, value_name = "LEVEL")]
    pub blowup: Option<u32>,
    /// Circulant graph on K vertices
    #[arg(long, value_name = "K")]
    pub circulant: Option<usize>,
    /// Circulant ratio: `opt` (6+2sqrt3), `a+bsqrtc`, `p/q` or a decimal
    #[arg(long, value_name = "R", default_value = "opt", requires = "circulant")]
    pub r: CirculantParam,
    /// Base cgw graph on 4N vertices
    #[arg(long, value_name = "N")]
    pub cgw: Option<usize>,
    /// Tower of random joins at this level; needs --n
    #[arg(long, value_name = "LEVEL", requires = "n")]
    pub tower: Option<u32>,
    /// Block half-size for --tower
    #[arg(long, value_name = "N")]
    pub n: Option<usize>,
    /// G(N, 1/2)
    #[arg(long, value_name = "N")]
    pub gnp: Option<usize>,
    /// Complete graph K_N
    #[arg(long, value_name = "N")]
    pub complete: Option<usize>,
    /// Apply the doubling map to the constructed graph
    #[arg(long, conflicts_with_all = ["input", "spec_json"])]
    pub doubled: bool,
    /// Master seed for randomised constructions
    #[arg(long, default_value_t = DEFAULT_SEED.0)]
    pub seed: u64,
}

/// Malformed input; reported with exit code 3.
#[derive(Debug)]
pub struct InputError(pub String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

pub fn read_text(path: &str) -> Result<Vec<u8>> {
    if path == "-" {
        let mut buf = vec![];
        std::io::stdin().read_to_end(&mut buf).context("reading stdin")?;
        Ok(buf)
    } else {
        fs::read(path).with_context(|| format!("reading {path}"))
    }
}

impl SourceArgs {
    /// The declared construction, if the source is not a file.
    pub fn construction(&self) -> Result<Option<ConstructionSpec>> {
        let seed = Seed(self.seed);
        let base = if let Some(text) = &self.spec_json {
            let text = match text.strip_prefix('@') {
                Some(path) => String::from_utf8(read_text(path)?).context("spec file is not UTF-8")?,
                None => text.clone(),
            };
            let spec = ConstructionSpec::from_json(&text).map_err(|e| InputError(e.to_string()))?;
            return Ok(Some(spec));
        } else if let Some(level) = self.blowup {
            Construction::IteratedBlowup { level }
        } else if let Some(k) = self.circulant {
            Construction::Circulant { k, r: self.r }
        } else if let Some(n) = self.cgw {
            Construction::CgwBase { n }
        } else if let Some(level) = self.tower {
            Construction::OplusTower { level, n: self.n.expect("clap enforces --n") }
        } else if let Some(n) = self.gnp {
            Construction::Random { n }
        } else if let Some(n) = self.complete {
            Construction::Complete { n }
        } else {
            return Ok(None);
        };
        let construction = if self.doubled { Construction::Doubled { inner: Box::new(base) } } else { base };
        Ok(Some(ConstructionSpec::new(construction, seed)))
    }

    pub fn load(&self) -> Result<(Graph, Source)> {
        if let Some(spec) = self.construction()? {
            let g = spec.build()?;
            return Ok((g, Source::Construction { spec }));
        }
        let Some(path) = &self.input else { bail!("no graph source given") };
        let text = read_text(path)?;
        let graphs = graph6::decode_lines(&text).map_err(|e| InputError(format!("{path}: {e}")))?;
        let count = graphs.len();
        let g = graphs
            .into_iter()
            .nth(self.index)
            .ok_or_else(|| InputError(format!("{path}: graph {} requested, {count} present", self.index)))?;
        Ok((g, Source::Input { path: path.clone(), index: self.index }))
    }
}
