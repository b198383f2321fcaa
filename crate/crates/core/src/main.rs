use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use fuzzy_primal::compat::{equivalence_report, is_compatible_via_definition};
use fuzzy_primal::io::{parse_set_arg, parse_space, render_json, render_text, LoadedSpace};
use fuzzy_primal::structures::{validate_primal, validate_topology, FuzzyFamily};
use fuzzy_primal::verify::{
    run_subject, run_suite, search_counterexample, select_ids, suite_passes, GeneratorConfig,
    Limits, PropertyId, SpaceGenerator, Subject,
};
use fuzzy_primal::{Error, DEFAULT_LATTICE_BUDGET};

const OK: u8 = 0;
const FAILED: u8 = 1;
const USAGE: u8 = 2;
const BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "fuzzy-primal",
    version,
    about = "Fuzzy primals on finite grid lattices"
)]
struct Cli {
    /// Largest lattice (`(k+1)^n` sets) any command may enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_LATTICE_BUDGET)]
    max_lattice: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a space document; with `check primal_intersection`, also test
    /// whether the two primals intersect to a primal.
    Validate { file: PathBuf },
    /// Print the diamond of a set, given as comma-separated numerators.
    Diamond {
        file: PathBuf,
        #[arg(long)]
        set: String,
    },
    /// Print the closure `λ ∨ λ⋄` of a set.
    ClDiamond {
        file: PathBuf,
        #[arg(long)]
        set: String,
    },
    /// Print the members of the primal fuzzy topology.
    GenPtop { file: PathBuf },
    /// Print the canonical base and whether it is itself a topology.
    Base { file: PathBuf },
    /// Print the five compatibility characterizations.
    Compat { file: PathBuf },
    /// Check properties on a document or on seeded random spaces.
    Verify(VerifyArgs),
    /// Look for a space violating one property and shrink it.
    Search {
        id: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random spaces to try.
        #[arg(long, default_value_t = 500)]
        budget: usize,
        #[command(flatten)]
        ranges: Ranges,
    },
}

#[derive(clap::Args)]
struct VerifyArgs {
    #[arg(required_unless_present = "random", conflicts_with = "random")]
    file: Option<PathBuf>,
    /// Generate spaces from this seed instead of reading a file.
    #[arg(long)]
    random: Option<u64>,
    /// Comma-separated ids or id prefixes; all ids by default.
    #[arg(long)]
    ids: Option<String>,
    /// Number of random spaces.
    #[arg(long, default_value_t = 20)]
    budget: usize,
    #[command(flatten)]
    ranges: Ranges,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Record per-property runtime (makes output run-dependent).
    #[arg(long)]
    timings: bool,
}

#[derive(clap::Args)]
struct Ranges {
    #[arg(long, default_value_t = 1)]
    min_n: usize,
    #[arg(long, default_value_t = 2)]
    max_n: usize,
    #[arg(long, default_value_t = 1)]
    min_k: u32,
    #[arg(long, default_value_t = 2)]
    max_k: u32,
    #[arg(long, default_value_t = 3)]
    max_seeds: usize,
}

impl Ranges {
    fn config(&self) -> Result<GeneratorConfig, String> {
        if self.min_n == 0 || self.min_n > self.max_n || self.min_k == 0 || self.min_k > self.max_k
        {
            return Err("need 1 <= min-n <= max-n and 1 <= min-k <= max-k".into());
        }
        Ok(GeneratorConfig {
            n: (self.min_n, self.max_n),
            k: (self.min_k, self.max_k),
            max_seeds: self.max_seeds,
        })
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

enum Failure {
    Usage(String),
    Library(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

type Outcome = Result<(String, u8), Failure>;

fn load(file: &PathBuf, budget: usize) -> Result<LoadedSpace, Failure> {
    let text =
        fs::read_to_string(file).map_err(|e| Failure::Usage(format!("{}: {e}", file.display())))?;
    Ok(parse_space(&text, budget)?)
}

fn family_lines(family: &FuzzyFamily) -> String {
    family.iter().map(|s| format!("{s}\n")).collect()
}

fn validate(file: &PathBuf, budget: usize) -> Outcome {
    let loaded = load(file, budget)?;
    let space = &loaded.space;
    let mut out = format!(
        "valid space n={} k={} opens={} primal={}\n",
        space.space().n(),
        space.space().k(),
        space.topology().opens().len(),
        space.primal().members().len()
    );
    if !loaded.check_intersection {
        return Ok((out, OK));
    }
    let Some(second) = &loaded.second else {
        return Err(Failure::Usage(
            "primal_intersection check needs a second_primal".into(),
        ));
    };
    let meet = space.primal().intersection_raw(second)?;
    let report = validate_primal(&meet, space.lattice())?;
    out.push_str(&format!("primal intersection: {report}\n"));
    Ok((out, if report.is_valid() { OK } else { FAILED }))
}

fn verify(args: &VerifyArgs, max_lattice: usize) -> Outcome {
    let ids = match &args.ids {
        Some(list) => select_ids(list).map_err(Failure::Usage)?,
        None => PropertyId::ALL.to_vec(),
    };
    let limits = Limits {
        max_lattice: max_lattice.min(Limits::default().max_lattice),
        record_runtime: args.timings,
        ..Limits::default()
    };
    let reports = match (&args.file, args.random) {
        (Some(file), _) => {
            let loaded = load(file, max_lattice)?;
            loaded.space.space().check_budget(limits.max_lattice)?;
            run_subject(&Subject::from_loaded(&loaded), &ids, &limits)
        }
        (None, Some(seed)) => {
            let generator =
                SpaceGenerator::new(seed, args.ranges.config().map_err(Failure::Usage)?);
            run_suite(generator, &ids, args.budget, &limits)
        }
        (None, None) => return Err(Failure::Usage("give a file or --random".into())),
    };
    let out = match args.format {
        Format::Text => render_text(&reports),
        Format::Json => render_json(&reports),
    };
    Ok((out, if suite_passes(&reports) { OK } else { FAILED }))
}

fn search(id: &str, seed: u64, spaces: usize, ranges: &Ranges, max_lattice: usize) -> Outcome {
    let id: PropertyId = id.parse().map_err(Failure::Usage)?;
    let limits = Limits {
        max_lattice: max_lattice.min(Limits::default().max_lattice),
        ..Limits::default()
    };
    let generator = SpaceGenerator::new(seed, ranges.config().map_err(Failure::Usage)?);
    match search_counterexample(id, generator, spaces, &limits) {
        None => Ok((
            format!("no counterexample to {id} in {spaces} spaces\n"),
            OK,
        )),
        Some(found) => {
            let shrunk = &found.shrunk;
            let mut out = format!(
                "{} {id} at space #{} (shrunk from n={} k={})\n",
                shrunk.verdict, found.index, found.original.recipe.n, found.original.recipe.k
            );
            if let Some(w) = &shrunk.witness {
                out.push_str(&format!("witness: {w}\n"));
            }
            out.push_str(&shrunk.document);
            Ok((out, OK))
        }
    }
}

fn dispatch(cli: Cli) -> Outcome {
    let budget = cli.max_lattice;
    match cli.command {
        Command::Validate { file } => validate(&file, budget),
        Command::Diamond { file, set } => {
            let loaded = load(&file, budget)?;
            let set = parse_set_arg(&set, loaded.space.space())?;
            Ok((format!("{}\n", loaded.space.diamond(&set)?), OK))
        }
        Command::ClDiamond { file, set } => {
            let loaded = load(&file, budget)?;
            let set = parse_set_arg(&set, loaded.space.space())?;
            Ok((format!("{}\n", loaded.space.cl_diamond(&set)?), OK))
        }
        Command::GenPtop { file } => {
            let loaded = load(&file, budget)?;
            Ok((
                family_lines(&loaded.space.primal_topology_family(budget)?),
                OK,
            ))
        }
        Command::Base { file } => {
            let loaded = load(&file, budget)?;
            let base = loaded.space.primal_base(budget)?;
            let verdict = validate_topology(&base);
            let mut out = family_lines(&base);
            out.push_str(&format!("base is a topology: {}\n", verdict.is_valid()));
            if !verdict.is_valid() {
                out.push_str(&format!("{verdict}\n"));
            }
            Ok((out, OK))
        }
        Command::Compat { file } => {
            let loaded = load(&file, budget)?;
            let report = equivalence_report(&loaded.space, budget)?;
            let names = [
                "definition",
                "support",
                "square",
                "dense-free",
                "closed-square",
            ];
            let mut out = format!(
                "compatible: {}\n",
                is_compatible_via_definition(&loaded.space).compatible
            );
            for ((name, holds), witness) in names.iter().zip(report.clauses).zip(&report.witnesses)
            {
                out.push_str(&format!("({name}) {holds}"));
                if let Some(w) = witness {
                    out.push_str(&format!(" witness {w}"));
                }
                out.push('\n');
            }
            Ok((out, if report.all_equal() { OK } else { FAILED }))
        }
        Command::Verify(args) => verify(&args, budget),
        Command::Search {
            id,
            seed,
            budget: spaces,
            ranges,
        } => search(&id, seed, spaces, &ranges, budget),
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::BudgetExceeded { .. } => BUDGET,
        Error::Syntax { .. }
        | Error::InvalidGridValue { .. }
        | Error::InvalidSpace(_)
        | Error::SpaceMismatch { .. } => USAGE,
        _ => FAILED,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { OK });
        }
    };
    match dispatch(cli) {
        Ok((out, code)) => {
            let _ = std::io::stdout().write_all(out.as_bytes());
            ExitCode::from(code)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(USAGE)
        }
        Err(Failure::Library(e)) => {
            let code = exit_code(&e);
            if code == FAILED {
                println!("{e}");
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(code)
        }
    }
}
