use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use bousfield_core::dlframe::registry::lookup;
use bousfield_core::dlframe::{Analysis, DerivedReport, Status};
use bousfield_core::dot::{self, View};
use bousfield_core::format::{labels_of, ModelFile, ReportFile};
use bousfield_core::models::{self, LoadError};
use bousfield_core::quantale::SmashLattice;
use bousfield_core::search::{search_property, FindingsFile, LatticeSource, Mode, Only, SearchTask};

#[derive(Parser)]
#[command(name = "bousfield", version, about = "Finite models of the Bousfield lattice")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a built-in model as a model file
    Model {
        /// boolean, toy-i, nilpotent-chain or skeleton
        name: String,
        /// Size parameter for boolean and skeleton
        #[arg(long)]
        k: Option<usize>,
        /// Output path; standard output if omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Validate a model and run registry properties
    Check {
        file: PathBuf,
        /// Property ids to run (default: all)
        #[arg(long, num_args = 1.., value_delimiter = ',')]
        properties: Option<Vec<String>>,
        /// Write the full report here
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Write the derived report and optional DOT views
    Derive {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Directory for hasse.dot, dl.dot and cba.dot
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Search small quantales for a property
    Search(SearchArgs),
}

#[derive(Args)]
struct SearchArgs {
    /// `size=N`, `size=A..B`, or model files
    #[arg(long, num_args = 1.., required = true)]
    lattices: Vec<String>,
    #[arg(long)]
    property: String,
    #[arg(long, conflicts_with = "samples")]
    exhaustive: bool,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads (default: available parallelism)
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long)]
    out: PathBuf,
    #[arg(long)]
    bousfield_only: bool,
    #[arg(long)]
    require_field: bool,
    #[arg(long, value_enum, default_value_t = OnlyArg::All)]
    only: OnlyArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum OnlyArg {
    All,
    Fail,
    Pass,
}

/// Prints a line, ignoring a closed pipe.
macro_rules! say {
    ($($arg:tt)*) => {{
        let _ = writeln!(std::io::stdout().lock(), $($arg)*);
    }};
}

/// A failure that maps onto an exit code.
struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn write_atomic(path: &Path, contents: &str) -> Result<(), Failure> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let io = |e: std::io::Error| usage(format!("cannot write {}: {e}", path.display()));
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    tmp.write_all(contents.as_bytes()).map_err(io)?;
    tmp.persist(path).map_err(|e| io(e.error))?;
    Ok(())
}

fn load(path: &Path) -> Result<SmashLattice, Failure> {
    models::load_model(path).map_err(|e| {
        let mut message = format!("{}: {e}", path.display());
        if let LoadError::Validation {
            report: Some(r),
            reason,
        } = &e
        {
            if reason != &r.to_string() {
                message.push('\n');
                message.push_str(&r.to_string());
            }
        }
        usage(message)
    })
}

fn cmd_model(name: &str, k: Option<usize>, out: Option<&Path>) -> Result<u8, Failure> {
    let spec = models::build(name, k).map_err(|e| usage(e.to_string()))?;
    let text = ModelFile::from_structure(&spec.model).to_canonical_string();
    match out {
        Some(p) => write_atomic(p, &text)?,
        None => {
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
        }
    }
    Ok(0)
}

fn cmd_check(file: &Path, properties: Option<&[String]>, json: Option<&Path>) -> Result<u8, Failure> {
    let q = load(file)?;
    let an = Analysis::new(&q);
    let rep = DerivedReport::new(&an, properties).map_err(|e| usage(e.to_string()))?;
    let l = q.lattice();
    say!("model {} ({} elements)", q.name(), q.len());
    say!("bousfield-type: {}", rep.bousfield_type);
    for c in &rep.property_results {
        let field = c.field.map(|h| l.label(h));
        let mut line = format!("{:<22} {:<24} {}", c.id, c.tier.render(field), c.status);
        if let Some(w) = &c.witness {
            line.push_str(&format!(" [{}]", labels_of(l, w).join(", ")));
        }
        if !c.asserted && c.status != Status::NotApplicable {
            line.push_str(" (not asserted)");
        }
        say!("{line}");
    }
    let failures = rep.asserted_failures().count();
    say!("{failures} asserted failure(s)");
    if let Some(p) = json {
        write_atomic(p, &ReportFile::from_report(&rep, l).to_pretty_string())?;
    }
    Ok(if failures > 0 { 1 } else { 0 })
}

fn cmd_derive(file: &Path, out: &Path, dot_dir: Option<&Path>) -> Result<u8, Failure> {
    let q = load(file)?;
    let an = Analysis::new(&q);
    let rep = DerivedReport::new(&an, None).map_err(|e| usage(e.to_string()))?;
    write_atomic(out, &ReportFile::from_report(&rep, q.lattice()).to_pretty_string())?;
    if let Some(dir) = dot_dir {
        fs::create_dir_all(dir).map_err(|e| usage(format!("cannot create {}: {e}", dir.display())))?;
        for view in View::ALL {
            write_atomic(&dir.join(format!("{}.dot", view.name())), &dot::render(&an, view))?;
        }
    }
    say!("wrote {}", out.display());
    Ok(0)
}

fn parse_size(spec: &str) -> Result<(usize, usize), Failure> {
    let bad = || usage(format!("bad lattice size {spec:?}; expected size=N or size=A..B"));
    let range = spec.strip_prefix("size=").ok_or_else(bad)?;
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    match range.split_once("..") {
        Some((a, b)) => Ok((num(a)?, num(b)?)),
        None => {
            let n = num(range)?;
            Ok((n, n))
        }
    }
}

fn cmd_search(args: &SearchArgs) -> Result<u8, Failure> {
    lookup(&args.property).map_err(|e| usage(e.to_string()))?;
    let source = if args.lattices.len() == 1 && args.lattices[0].starts_with("size=") {
        let (min, max) = parse_size(&args.lattices[0])?;
        LatticeSource::Sizes { min, max }
    } else {
        if let Some(s) = args.lattices.iter().find(|s| s.starts_with("size=")) {
            return Err(usage(format!("{s} cannot be combined with other lattice sources")));
        }
        let models = args
            .lattices
            .iter()
            .map(|p| load(Path::new(p)))
            .collect::<Result<Vec<_>, _>>()?;
        LatticeSource::Models(models)
    };
    let mode = match (args.exhaustive, args.samples) {
        (_, Some(count)) => Mode::Sample { count, seed: args.seed },
        (true, None) => Mode::Exhaustive,
        (false, None) => return Err(usage("one of --exhaustive or --samples is required")),
    };
    let jobs = args
        .jobs
        .unwrap_or_else(|| std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1));
    let task = SearchTask {
        source,
        property: args.property.clone(),
        mode,
        bousfield_only: args.bousfield_only,
        require_field: args.require_field,
        only: match args.only {
            OnlyArg::All => Only::All,
            OnlyArg::Fail => Only::Fail,
            OnlyArg::Pass => Only::Pass,
        },
        jobs,
    };
    let start = Instant::now();
    let outcome = search_property(&task).map_err(|e| usage(e.to_string()))?;
    let elapsed = start.elapsed();
    let file = FindingsFile::new(&task, args.lattices.join(" "), &outcome);
    write_atomic(&args.out, &file.to_pretty_string())?;
    let s = &outcome.stats;
    say!(
        "{}: {} lattices, {} quantales, {} evaluations ({} pass, {} fail, {} not applicable)",
        task.property,
        s.lattices,
        s.quantales,
        s.evaluations,
        s.pass,
        s.fail,
        s.not_applicable
    );
    say!(
        "visited {} candidates, pruned {}; {} findings written to {} in {:.2?}",
        s.candidates_visited,
        s.pruned,
        outcome.findings.len(),
        args.out.display(),
        elapsed
    );
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Model { name, k, out } => cmd_model(name, *k, out.as_deref()),
        Command::Check { file, properties, json } => cmd_check(file, properties.as_deref(), json.as_deref()),
        Command::Derive { file, out, dot } => cmd_derive(file, out, dot.as_deref()),
        Command::Search(args) => cmd_search(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
