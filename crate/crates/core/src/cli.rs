//! Command-line front end.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::census::{
    pair_census, ratio_report, rt_census, totient_census, vkl_census_with, CensusOptions,
    CensusRun, DEFAULT_CHECKPOINTS, LONG_RUN_CHECKPOINTS,
};
use crate::classifier::classify_2mod4;
use crate::error::{Error, MemoryBudget, Result};
use crate::output::{self, PreimageRecord};
use crate::totient::{multiplicity_oracle_with_budget, preimages_of, MultiplicityTable};

/// Directory for cached multiplicity tables.
pub const CACHE_DIR_ENV: &str = "TOTIENT_CENSUS_CACHE";

#[derive(Debug, Parser)]
#[command(name = "totient-census", version, about = "Census of Euler totients 2 mod 4")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Range limit for pairs, rt and vkl; single checkpoint for census/report.
    #[arg(long, global = true)]
    pub max: Option<u64>,
    /// Comma-separated ascending checkpoints.
    #[arg(long, global = true, value_delimiter = ',')]
    pub checkpoints: Vec<u64>,
    #[arg(long, global = true, default_value_t = 4)]
    pub gap: u64,
    #[arg(long, global = true, default_value_t = 2)]
    pub t: u32,
    #[arg(long, global = true, default_value_t = 2)]
    pub k: u64,
    #[arg(long, global = true, default_value_t = 2)]
    pub l: u32,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Output file; standard output when absent.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Memory budget in bytes; K, M and G suffixes are binary multiples.
    #[arg(long = "memory-budget", global = true, value_parser = parse_bytes)]
    pub memory_budget: Option<u64>,
    /// Include the 10^7 + 2 and 10^8 + 2 checkpoints.
    #[arg(long = "long-run", global = true)]
    pub long_run: bool,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Counts of T0, T2, T4 at each checkpoint.
    Census,
    /// Classify one m ≡ 2 (mod 4).
    Classify { m: u64 },
    /// All n with φ(n) = m, by exhaustive search.
    Preimage { m: u64 },
    /// Pairs of totients 2r, 2r + gap with r odd.
    Pairs,
    /// Totients with an odd prime power preimage of exponent > t.
    Rt,
    /// Multiplicity-k totients with a prime power preimage of exponent >= l.
    Vkl,
    /// Convergence report over checkpoints.
    Report,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Text,
}

fn parse_bytes(s: &str) -> std::result::Result<u64, String> {
    let s = s.trim();
    let (digits, shift) = match s.chars().last() {
        Some('K' | 'k') => (&s[..s.len() - 1], 10),
        Some('M' | 'm') => (&s[..s.len() - 1], 20),
        Some('G' | 'g') => (&s[..s.len() - 1], 30),
        _ => (s, 0),
    };
    let n: u64 = digits.parse().map_err(|e| format!("invalid byte count {s:?}: {e}"))?;
    n.checked_mul(1 << shift)
        .ok_or_else(|| format!("byte count {s:?} overflows"))
}

/// Validated parameters for one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub max_x: Option<u64>,
    pub checkpoints: Vec<u64>,
    pub gap: u64,
    pub t: u32,
    pub k: u64,
    pub l: u32,
    pub output_format: Format,
    pub output_path: Option<PathBuf>,
    pub threads: Option<usize>,
    pub memory_budget: MemoryBudget,
    pub long_run: bool,
}

impl PartialEq for Command {
    fn eq(&self, other: &Self) -> bool {
        use Command::*;
        match (self, other) {
            (Classify { m: a }, Classify { m: b }) | (Preimage { m: a }, Preimage { m: b }) => a == b,
            _ => std::mem::discriminant(self) == std::mem::discriminant(other),
        }
    }
}

impl Eq for Command {}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<RunConfig> {
        let cfg = RunConfig {
            command: cli.command,
            max_x: cli.max,
            checkpoints: cli.checkpoints,
            gap: cli.gap,
            t: cli.t,
            k: cli.k,
            l: cli.l,
            output_format: cli.format,
            output_path: cli.out,
            threads: cli.threads,
            memory_budget: cli.memory_budget.map_or(MemoryBudget::DEFAULT, MemoryBudget),
            long_run: cli.long_run,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.threads == Some(0) {
            return Err(Error::domain("--threads must be >= 1"));
        }
        match self.command {
            Command::Classify { m } if m % 4 != 2 => {
                return Err(Error::domain(format!("{m} is not congruent to 2 mod 4")));
            }
            Command::Preimage { m: 0 } => return Err(Error::domain("m must be >= 1")),
            Command::Census | Command::Report => {
                let cps = self.census_checkpoints();
                if cps.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(Error::domain("checkpoints must be strictly ascending"));
                }
            }
            Command::Pairs => {
                if self.gap == 0 || !self.gap.is_multiple_of(4) {
                    return Err(Error::domain("--gap must be a positive multiple of 4"));
                }
                if self.range_limit() < self.gap + 2 {
                    return Err(Error::domain("--max must be at least gap + 2"));
                }
            }
            Command::Rt => {
                if self.t == 0 {
                    return Err(Error::domain("--t must be >= 1"));
                }
                if self.range_limit() < 2 {
                    return Err(Error::domain("--max must be >= 2"));
                }
            }
            Command::Vkl => {
                if self.k == 0 || self.l < 2 {
                    return Err(Error::domain("--k must be >= 1 and --l >= 2"));
                }
                if self.range_limit() < 1 {
                    return Err(Error::domain("--max must be >= 1"));
                }
            }
            _ => {}
        }
        Ok(())
    }

    /// Checkpoints for census and report.
    pub fn census_checkpoints(&self) -> Vec<u64> {
        let mut cps = if !self.checkpoints.is_empty() {
            self.checkpoints.clone()
        } else if let Some(max) = self.max_x {
            vec![max]
        } else {
            DEFAULT_CHECKPOINTS.to_vec()
        };
        if self.long_run && self.checkpoints.is_empty() && self.max_x.is_none() {
            cps.extend(LONG_RUN_CHECKPOINTS);
        }
        cps
    }

    fn range_limit(&self) -> u64 {
        self.max_x.unwrap_or(match self.command {
            Command::Rt => 1_000_000,
            _ => 100_000,
        })
    }
}

/// Process exit code for an error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Domain(_) => 2,
        Error::Resource { .. } => 3,
        _ => 1,
    }
}

/// Runs one validated invocation and writes its artifact.
pub fn run(cfg: &RunConfig) -> Result<()> {
    let body = match cfg.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::domain(format!("thread pool: {e}")))?
            .install(|| render(cfg))?,
        None => render(cfg)?,
    };
    match &cfg.output_path {
        Some(path) => fs::write(path, body.main)?,
        None => std::io::stdout().write_all(body.main.as_bytes())?,
    }
    if let Some(plot) = body.plot {
        match &cfg.output_path {
            Some(path) => fs::write(plot_path(path), plot)?,
            None if cfg.output_format == Format::Text => {
                let mut out = std::io::stdout();
                out.write_all(b"\n")?;
                out.write_all(plot.as_bytes())?;
            }
            None => {}
        }
    }
    Ok(())
}

/// Where `report --out PATH` writes the gnuplot columns.
pub fn plot_path(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".dat");
    PathBuf::from(name)
}

/// Rendered artifacts of one run.
pub struct Rendered {
    pub main: String,
    pub plot: Option<String>,
}

pub fn render(cfg: &RunConfig) -> Result<Rendered> {
    let fmt = cfg.output_format;
    let main = match &cfg.command {
        Command::Census => {
            let run = census(cfg)?;
            match fmt {
                Format::Csv => output::census_csv(&run.rows),
                Format::Json => output::json_lines(&run.rows),
                Format::Text => output::census_text(&run.rows),
            }
        }
        Command::Report => {
            let report = ratio_report(&census(cfg)?);
            let main = match fmt {
                Format::Csv => report.to_csv(),
                Format::Json => output::json_lines(&[&report]),
                Format::Text => report.to_text(),
            };
            return Ok(Rendered {
                main,
                plot: Some(report.to_gnuplot()),
            });
        }
        Command::Classify { m } => {
            let rec = classify_2mod4(*m)?;
            match fmt {
                Format::Csv => output::record_csv(&[rec]),
                Format::Json => output::json_lines(&[rec]),
                Format::Text => output::record_text(&rec),
            }
        }
        Command::Preimage { m } => {
            let preimage = preimages_of(*m)?;
            let rec = PreimageRecord {
                m: *m,
                multiplicity: preimage.len() as u64,
                preimage,
            };
            match fmt {
                Format::Csv => output::preimage_csv(&rec),
                Format::Json => output::json_lines(&[rec]),
                Format::Text => output::preimage_text(&rec),
            }
        }
        Command::Pairs => {
            let row = pair_census(cfg.range_limit(), cfg.gap)?;
            match fmt {
                Format::Csv => output::pair_csv(&row),
                Format::Json => output::json_lines(&[row]),
                Format::Text => output::pair_text(&row),
            }
        }
        Command::Rt => {
            let row = rt_census(cfg.range_limit(), cfg.t)?;
            match fmt {
                Format::Csv => output::rt_csv(&row),
                Format::Json => output::json_lines(&[row]),
                Format::Text => output::rt_text(&row),
            }
        }
        Command::Vkl => {
            let x = cfg.range_limit();
            let table = oracle_table(x, cfg.memory_budget)?;
            let row = vkl_census_with(&table, x, cfg.k, cfg.l)?;
            match fmt {
                Format::Csv => output::vkl_csv(&row),
                Format::Json => output::json_lines(&[row]),
                Format::Text => output::vkl_text(&row),
            }
        }
    };
    Ok(Rendered { main, plot: None })
}

fn census(cfg: &RunConfig) -> Result<CensusRun> {
    totient_census(
        &cfg.census_checkpoints(),
        CensusOptions {
            budget: cfg.memory_budget,
            ..CensusOptions::default()
        },
    )
}

/// Loads the oracle table from the cache directory when configured,
/// computing and storing it on a miss.
fn oracle_table(x: u64, budget: MemoryBudget) -> Result<MultiplicityTable> {
    let Some(dir) = std::env::var_os(CACHE_DIR_ENV) else {
        return multiplicity_oracle_with_budget(x, false, budget);
    };
    let path = Path::new(&dir).join(format!("multiplicity-{x}.bin"));
    if let Ok(file) = fs::File::open(&path) {
        if let Ok(table) = MultiplicityTable::load(std::io::BufReader::new(file)) {
            if table.x() == x {
                return Ok(table);
            }
        }
    }
    let table = multiplicity_oracle_with_budget(x, false, budget)?;
    fs::create_dir_all(&dir)?;
    table.dump(std::io::BufWriter::new(fs::File::create(&path)?))?;
    Ok(table)
}
