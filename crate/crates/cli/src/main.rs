use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::Parser;

use blockscope::field::extend_field;
use blockscope::hopf::builtin;
use blockscope::input;
use blockscope::report::{self, Report, RunConfig, Task};
use blockscope::verify::Status;
use blockscope::{Error, HopfAlgebra};

mod cache;

const EXIT_ERROR: u8 = 1;
const EXIT_FAIL: u8 = 2;
const EXIT_UNSUPPORTED: u8 = 3;
const EXIT_GOLDEN_DIFF: u8 = 4;

/// Blocks, cohomology, support varieties and flat points of cocommutative
/// Hopf algebras over finite fields.
#[derive(Parser, Debug)]
#[command(name = "blockscope", version)]
struct Cli {
    /// info, blocks, cohomology, support, adjoint, hochschild, pipoints,
    /// verify:<check>, verify:all or all
    task: String,
    /// Built-in name such as kS3@p2, or a path to an algebra description file
    #[arg(long)]
    algebra: String,
    /// Cohomological degree bound
    #[arg(long, default_value_t = 10)]
    cap: usize,
    /// Sampling seed, decimal or 0x-prefixed hex
    #[arg(long, default_value = "0xB10C", value_parser = parse_seed)]
    seed: u64,
    /// Sampling budget for flat-point searches
    #[arg(long, default_value_t = blockscope::pipoints::DEFAULT_BUDGET)]
    budget: usize,
    /// Extend scalars to the field with q elements
    #[arg(long = "field", value_name = "Q")]
    field: Option<usize>,
    /// Include slow checks
    #[arg(long)]
    slow: bool,
    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Compare against a stored report; differing paths go to stderr
    #[arg(long)]
    golden: Option<PathBuf>,
    /// Neither read nor write the report cache
    #[arg(long)]
    no_cache: bool,
}

fn parse_seed(s: &str) -> Result<u64, String> {
    match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(h) => u64::from_str_radix(h, 16),
        None => s.parse(),
    }
    .map_err(|e| format!("bad seed `{s}`: {e}"))
}

fn load_algebra(spec: &str, field: Option<usize>) -> Result<HopfAlgebra, Error> {
    let path = Path::new(spec);
    let h = if path.exists() { input::load(path)? } else { builtin(spec)? };
    let Some(q) = field else { return Ok(h) };
    let base = h.field().order();
    let d = (1..=8).find(|&d| base.checked_pow(d) == Some(q)).ok_or_else(|| {
        Error::Invalid(format!("--field {q} is not a power of the algebra's field order {base}"))
    })?;
    let ext = extend_field(h.field(), d)?;
    let mut h2 = h.extend_scalars(&ext);
    h2.name = format!("{} over F{q}", h.name);
    Ok(h2)
}

fn execute(cli: &Cli) -> Result<u8, Error> {
    let task: Task = cli.task.parse()?;
    let h = load_algebra(&cli.algebra, cli.field)?;
    let cfg = RunConfig { cap: cli.cap, seed: cli.seed, budget: cli.budget, slow: cli.slow };
    cfg.validate()?;

    let store = if cli.no_cache { None } else { cache::default_root().map(cache::Cache::new) };
    let report = match store.as_ref().and_then(|c| c.get(&h, &task, &cfg)) {
        Some(r) => r,
        None => {
            let r = report::run(&h, &task, &cfg).map_err(|e| match e {
                Error::NeedsExtension(d) => {
                    let q = h.field().order();
                    Error::Invalid(format!("{} does not split over F{q}; rerun with --field {}", h.name, q.pow(d)))
                }
                e => e,
            })?;
            if let Some(c) = &store {
                if let Err(e) = c.put(&h, &task, &cfg, &r) {
                    eprintln!("warning: could not write cache: {e}");
                }
            }
            r
        }
    };

    let text = report.to_string();
    match &cli.out {
        Some(p) => std::fs::write(p, &text)?,
        None => print!("{text}"),
    }

    if let Some(g) = &cli.golden {
        if !g.exists() {
            return Err(Error::Invalid(format!("golden report {} does not exist", g.display())));
        }
        let golden = Report::parse(&std::fs::read_to_string(g)?)?;
        let changed = report::diff(&golden.0, &report.0);
        if !changed.is_empty() {
            for p in &changed {
                eprintln!("golden diff: {p}");
            }
            return Ok(EXIT_GOLDEN_DIFF);
        }
    }

    if report.status() == Status::Fail {
        for v in report.verdicts().iter().filter(|v| v["status"] == "fail") {
            eprintln!("fail: {}", v["name"].as_str().unwrap_or("?"));
        }
        return Ok(EXIT_FAIL);
    }
    if matches!(task, Task::Verify(_)) && report.all_unsupported() {
        for v in report.verdicts() {
            eprintln!("unsupported: {}", v["evidence"]["reason"].as_str().unwrap_or("no reason given"));
        }
        return Ok(EXIT_UNSUPPORTED);
    }
    if report.is_inconclusive() {
        eprintln!("inconclusive: at least one verdict could not be decided at this cap");
    }
    Ok(0)
}

fn main() -> ExitCode {
    // usage errors exit 1 so that 2 always means a failed verdict
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if e.use_stderr() => {
            let _ = e.print();
            return ExitCode::from(EXIT_ERROR);
        }
        Err(e) => e.exit(),
    };
    match execute(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
