//! `hermitian`: constructs curves, counts their points on the Hermitian curve,
//! and runs the splitting surveys and exhaustive searches.

mod output;
mod reproduce;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use hermitian_core::constructions::{construct, Family};
use hermitian_core::curvefile::CurveFile;
use hermitian_core::plane::{
    absolute_irreducibility_status, AbsoluteIrreducibility, HermitianCurve, Model, DEFAULT_BUDGET,
};
use hermitian_core::search::{exhaustive_negative_search, positive_witness_search, SEARCH_GUARD};
use hermitian_core::splitting::{
    count_splitting_a, genus_fd, ramified_place_bound, serre_split_threshold, survey_split,
};
use serde_json::json;

use output::{emit, to_record, Format, Record};

#[derive(Parser)]
#[command(name = "hermitian", version, about = "Plane curves meeting the Hermitian curve in many rational points")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Record format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Include wall-clock timings (makes output nondeterministic).
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Count the rational points of the Hermitian curve.
    HermitianPoints {
        #[arg(long)]
        q: u64,
        #[arg(long, default_value = "H2")]
        model: Model,
        #[arg(long)]
        emit_points: bool,
    },
    /// Intersect a curve file with the Hermitian curve.
    Intersect {
        #[arg(long)]
        curve: PathBuf,
        /// Must match the file's q when given.
        #[arg(long)]
        q: Option<u64>,
        /// Overrides the file's model.
        #[arg(long)]
        model: Option<Model>,
        #[arg(long)]
        emit_points: bool,
    },
    /// Build a curve from a named family and write it as a curve file.
    Construct {
        #[command(flatten)]
        spec: FamilyArgs,
    },
    /// Check a construction or curve file: intersection count and irreducibility.
    Verify {
        #[command(flatten)]
        spec: FamilyArgs,
        #[arg(long, conflicts_with_all = ["family", "q", "d"])]
        curve: Option<PathBuf>,
        /// Candidate-factor budget per degree for the irreducibility search.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
        #[arg(long)]
        emit_points: bool,
    },
    /// Count the A for which A t^d + t + 1 splits over F_q.
    SplitCount {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        d: u32,
    },
    /// N_d(q) over a range of prime powers.
    Survey {
        #[arg(long)]
        d: u32,
        #[arg(long, default_value_t = 2)]
        q_min: u64,
        #[arg(long)]
        q_max: u64,
        /// Keep only q coprime to this.
        #[arg(long)]
        gcd_filter: Option<u64>,
    },
    /// Genus, ramified-place bound, and Serre threshold for each d.
    Thresholds {
        #[arg(long, required = true, num_args = 1..)]
        d: Vec<u32>,
    },
    /// Scan every degree-d form over F_{q^2}.
    NegativeSearch {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        d: u32,
        #[arg(long, default_value = "H2")]
        model: Model,
        /// Stop after this many irreducible achievers instead of scanning everything.
        #[arg(long)]
        limit: Option<usize>,
        /// Form budget for a limited scan.
        #[arg(long, default_value_t = SEARCH_GUARD as u64, requires = "limit")]
        max_forms: u64,
        /// Directory that receives one curve file per achiever.
        #[arg(long)]
        emit_achievers: Option<PathBuf>,
    },
    /// Run the whole verification matrix.
    ReproducePaper {
        /// Claim numbers, names, or tags (d3, survey, constructions, ...).
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
    },
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long)]
    family: Option<Family>,
    #[arg(long)]
    q: Option<u64>,
    #[arg(long)]
    d: Option<u32>,
}

impl FamilyArgs {
    fn build(&self) -> Result<CurveFile> {
        let (Some(family), Some(q)) = (self.family, self.q) else {
            bail!("give --family and --q, or --curve");
        };
        Ok(CurveFile::from_construction(&construct(family, q, self.d)?))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn read_curve(path: &Path) -> Result<CurveFile> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(CurveFile::parse(&text)?)
}

/// Returns whether every verification passed.
fn run(cli: &Cli) -> Result<bool> {
    let mut sink: Box<dyn Write> = match &cli.output {
        Some(path) => Box::new(
            fs::File::create(path).with_context(|| format!("creating {}", path.display()))?,
        ),
        None => Box::new(io::stdout().lock()),
    };
    let (records, ok) = match &cli.command {
        Command::HermitianPoints { q, model, emit_points } => {
            let h = HermitianCurve::new(*q, *model)?;
            let expected = q * q * q + 1;
            let count = h.points().len() as u64;
            let mut r = to_record(&json!({
                "q": q, "model": model, "count": count, "expected": expected, "pass": count == expected,
            }));
            if *emit_points {
                let pts: Vec<_> = h.points().iter().map(|p| p.to_record(h.field())).collect();
                r.insert("points".into(), json!(pts));
            }
            (vec![r], count == expected)
        }
        Command::Intersect { curve, q, model, emit_points } => {
            let file = read_curve(curve)?;
            if let Some(q) = q {
                if *q != file.q {
                    bail!("--q {q} does not match the curve file's q = {}", file.q);
                }
            }
            let form = file.to_form()?;
            let h = HermitianCurve::new(file.q, model.unwrap_or(file.model))?;
            let report = h.intersect(&form, *emit_points)?;
            (vec![to_record(&report)], true)
        }
        Command::Construct { spec } => {
            let file = spec.build()?;
            writeln!(sink, "{}", file.to_json())?;
            return Ok(true);
        }
        Command::Verify { spec, curve, budget, emit_points } => {
            let file = match curve {
                Some(path) => read_curve(path)?,
                None => spec.build()?,
            };
            let (record, ok) = verify(&file, *budget, *emit_points)?;
            (vec![record], ok)
        }
        Command::SplitCount { q, d } => {
            let report = count_splitting_a(*q, *d)?;
            let ok = report.agree != Some(false);
            (vec![to_record(&report)], ok)
        }
        Command::Survey { d, q_min, q_max, gcd_filter } => {
            let rows = survey_split(*d, *q_min, *q_max, *gcd_filter)?;
            let records = rows
                .iter()
                .map(|r| to_record(&json!({"d": d, "q": r.q, "count": r.count})))
                .collect();
            (records, true)
        }
        Command::Thresholds { d } => {
            let mut records = Vec::new();
            for &d in d {
                records.push(to_record(&json!({
                    "d": d,
                    "genus": genus_fd(d)?,
                    "ramified_bound": ramified_place_bound(d)?,
                    "threshold": serre_split_threshold(d)?,
                })));
            }
            (records, true)
        }
        Command::NegativeSearch { q, d, model, limit, max_forms, emit_achievers } => {
            let mut report = match limit {
                Some(limit) => positive_witness_search(*q, *d, *model, *limit, *max_forms)?,
                None => exhaustive_negative_search(*q, *d, *model)?,
            };
            if !cli.timings {
                report.wallclock_ms = None;
            }
            if let Some(dir) = emit_achievers {
                fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
                for (i, g) in report.achievers.iter().enumerate() {
                    let path = dir.join(format!("q{q}-d{d}-{i:04}.json"));
                    fs::write(&path, CurveFile::from_form(*q, *model, g).to_json() + "\n")
                        .with_context(|| format!("writing {}", path.display()))?;
                }
            }
            (vec![to_record(&report)], true)
        }
        Command::ReproducePaper { only } => {
            let result = reproduce::run(only, cli.timings)?;
            (result.records, result.all_pass)
        }
    };
    emit(&records, cli.format, &mut sink)?;
    sink.flush()?;
    Ok(ok)
}

fn verify(file: &CurveFile, budget: u128, emit_points: bool) -> Result<(Record, bool)> {
    let form = file.to_form()?;
    let h = HermitianCurve::new(file.q, file.model)?;
    let label = match &file.descriptor {
        Some(d) => d.to_string(),
        None => form.to_string(),
    };
    let report = h.intersect_described(&form, &label, emit_points)?;
    let status = absolute_irreducibility_status(&form, budget)?;
    let detail = match &status {
        AbsoluteIrreducibility::Certified { smooth_point } => {
            format!("smooth point {}", json!(smooth_point.to_record(form.field())))
        }
        AbsoluteIrreducibility::Reducible { factor } => format!("factor {factor}"),
        AbsoluteIrreducibility::Undetermined { reason } => reason.clone(),
    };
    let ok = report.achieved;
    let mut r = to_record(&report);
    r.insert("irreducibility".into(), json!(status.label()));
    r.insert("irreducibility_detail".into(), json!(detail));
    Ok((r, ok))
}
