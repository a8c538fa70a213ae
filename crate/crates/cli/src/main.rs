use std::fs;
use std::io::{self, Write};
use std::ops::ControlFlow;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use log::{debug, info};
use mcs_core::analysis::{another_mcs, assess_mcs, count_mcs};
use mcs_core::enumerator::McsEnumerator;
use mcs_core::gen::{random_cnf3, random_hypergraph, rng};
use mcs_core::oracle::enumerate_bruteforce_capped;
use mcs_core::reductions::{
    build_hypergraph_instance, build_sat_instance, verify_bijection, verify_sat, Cnf3, Hypergraph,
    Route,
};
use mcs_core::subseq::{is_common_subsequence, is_mcs};
use mcs_core::{parse_strings_file, Error, InstanceSet, Limits, StringsFile};

#[derive(Parser)]
#[command(name = "mcs", version, about = "Maximal common subsequence toolkit")]
struct Cli {
    /// Cap on subsets walked by the brute-force oracle.
    #[arg(long, global = true, default_value_t = mcs_core::oracle::DEFAULT_MASK_CAP,
          value_parser = clap::value_parser!(u64).range(1..))]
    mask_cap: u64,

    /// Cap on unshiftable tuples built by the enumerator.
    #[arg(long, global = true, default_value_t = mcs_core::enumerator::DEFAULT_TUPLE_CAP,
          value_parser = positive_usize)]
    tuple_cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stream every MCS, one per line.
    Enumerate(Input),
    /// Print every MCS using the exhaustive oracle.
    EnumerateBruteforce(Input),
    /// Print the number of MCSs.
    Count(Input),
    /// Print MORE if there are more than z MCSs, otherwise AT_MOST.
    Assess {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        z: u64,
    },
    /// Print an MCS not listed in the known file, or NONE (exit 1).
    Another {
        #[command(flatten)]
        input: Input,
        /// Strings file holding the known MCSs.
        #[arg(long)]
        known: PathBuf,
    },
    /// Decide whether a candidate string is an MCS (exit 1 if not).
    CheckMaximal {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        candidate: String,
    },
    /// Build the MCS instance of a 3-CNF formula (DIMACS).
    GenSat {
        #[command(flatten)]
        source: SatSource,
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Also write the known MCS set to this strings file.
        #[arg(long)]
        known_out: Option<PathBuf>,
    },
    /// Build the binary MCS instance of a hypergraph.
    GenHypergraph {
        #[command(flatten)]
        source: GraphSource,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Check a reduction end to end on a DIMACS or hypergraph file.
    Verify {
        /// DIMACS (`p cnf`) or hypergraph (`p hg`) file.
        file: Option<PathBuf>,
        /// Verify a random hypergraph instead of a file.
        #[arg(long, value_enum, conflicts_with = "file")]
        random: Option<RandomKind>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 6)]
        size: usize,
        #[arg(long, default_value_t = 5)]
        count: usize,
        /// Enumeration used on the hypergraph side.
        #[arg(long, value_enum, default_value_t = RouteArg::Enumerator)]
        route: RouteArg,
    },
}

#[derive(Args)]
struct Input {
    /// Strings file.
    file: PathBuf,
}

#[derive(Args)]
struct SatSource {
    /// DIMACS file; omit together with --seed to sample a formula.
    file: Option<PathBuf>,
    #[arg(long, conflicts_with = "file")]
    seed: Option<u64>,
    #[arg(long, default_value_t = 6)]
    vars: usize,
    #[arg(long, default_value_t = 5)]
    clauses: usize,
}

#[derive(Args)]
struct GraphSource {
    /// Hypergraph file; omit together with --seed to sample one.
    file: Option<PathBuf>,
    #[arg(long, conflicts_with = "file")]
    seed: Option<u64>,
    #[arg(long, default_value_t = 6)]
    vertices: usize,
    #[arg(long, default_value_t = 4)]
    edges: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum RandomKind {
    Cnf,
    Hypergraph,
}

#[derive(Clone, Copy, ValueEnum)]
enum RouteArg {
    Oracle,
    Enumerator,
}

fn positive_usize(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

enum Failure {
    Core(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Io(_) => 2,
            Failure::Core(e) => match e {
                Error::Parse { .. }
                | Error::UnknownSymbol(_)
                | Error::EmptyInstance
                | Error::InvalidHypergraph(_) => 2,
                Error::BudgetExceeded { .. } | Error::CapacityExceeded { .. } => 3,
                Error::NotAnMcsInZ { .. } => 4,
                Error::InvalidFormula(_) | Error::UniversalVertex(_) | Error::TooFewVertices(_) => {
                    5
                }
                Error::NotAWitness(_) => 1,
            },
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Core(e) => e.fmt(f),
            Failure::Io(m) => f.write_str(m),
        }
    }
}

type Outcome = Result<u8, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn load(input: &Input) -> Result<InstanceSet, Failure> {
    let inst = parse_strings_file(&read(&input.file)?)?;
    info!(
        "loaded {} strings, |alphabet| = {}, longest = {}",
        inst.k(),
        inst.alphabet().len(),
        inst.n()
    );
    Ok(inst)
}

fn write_to(out: Option<&Path>, text: &str) -> io::Result<()> {
    match out {
        Some(p) => fs::write(p, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    }
}

/// Writes one line to stdout; a closed pipe ends the stream quietly.
fn emit(line: &str) -> ControlFlow<()> {
    let mut out = io::stdout().lock();
    match writeln!(out, "{line}") {
        Ok(()) => ControlFlow::Continue(()),
        Err(_) => ControlFlow::Break(()),
    }
}

fn enumerate(inst: &InstanceSet, limits: &Limits) -> Outcome {
    let e = McsEnumerator::with_tuple_cap(inst, limits.tuple_cap)?;
    if let Some(idx) = e.index() {
        debug!("{} unshiftable tuples", idx.len());
    }
    let stats = e.for_each(|s| emit(&inst.render(s)));
    debug!(
        "{} nodes, {} dead ends, widest gap {} nodes",
        stats.nodes, stats.dead_ends, stats.max_nodes_between_emissions
    );
    eprintln!("count: {}", stats.emitted);
    Ok(0)
}

fn enumerate_bruteforce(inst: &InstanceSet, limits: &Limits) -> Outcome {
    let set = enumerate_bruteforce_capped(inst, limits.mask_cap)?;
    for s in set.members() {
        if emit(&inst.render(s)).is_break() {
            break;
        }
    }
    eprintln!("count: {}", set.cardinality());
    Ok(0)
}

fn another(inst: &InstanceSet, known_path: &Path, limits: &Limits) -> Outcome {
    let file = StringsFile::parse(&read(known_path)?)?;
    let mut known = Vec::with_capacity(file.lines.len());
    for (index, seq) in file.seqs_in(inst).into_iter().enumerate() {
        match seq {
            Ok(s) => known.push(s),
            // A string with a foreign symbol is not even a common subsequence.
            Err(Error::UnknownSymbol(_)) => {
                return Err(Error::NotAnMcsInZ {
                    index,
                    text: file.lines[index].clone(),
                }
                .into())
            }
            Err(e) => return Err(e.into()),
        }
    }
    let out = another_mcs(inst, &known, limits)?;
    debug!("inspected {} emissions", out.inspected);
    match out.witness {
        Some(w) => {
            println!("{}", inst.render(&w));
            Ok(0)
        }
        None => {
            println!("NONE");
            Ok(1)
        }
    }
}

fn check_maximal(inst: &InstanceSet, candidate: &str) -> Outcome {
    let verdict = match inst.parse_seq(candidate) {
        Ok(x) if is_mcs(&x, inst) => "MAXIMAL",
        Ok(x) if is_common_subsequence(&x, inst) => "NOT_MAXIMAL",
        Ok(_) | Err(Error::UnknownSymbol(_)) => "NOT_COMMON",
        Err(e) => return Err(e.into()),
    };
    println!("{verdict}");
    Ok(u8::from(verdict != "MAXIMAL"))
}

fn sat_formula(src: &SatSource) -> Result<Cnf3, Failure> {
    match (&src.file, src.seed) {
        (Some(p), _) => Ok(Cnf3::parse_dimacs(&read(p)?)?),
        (None, Some(seed)) => Ok(random_cnf3(&mut rng(seed), src.vars, src.clauses)?),
        (None, None) => Err(Failure::Io("give a DIMACS file or --seed".into())),
    }
}

fn hypergraph(src: &GraphSource) -> Result<Hypergraph, Failure> {
    match (&src.file, src.seed) {
        (Some(p), _) => Ok(Hypergraph::parse(&read(p)?)?),
        (None, Some(seed)) => Ok(random_hypergraph(&mut rng(seed), src.vertices, src.edges)?),
        (None, None) => Err(Failure::Io("give a hypergraph file or --seed".into())),
    }
}

fn gen_sat(src: &SatSource, out: Option<&Path>, known_out: Option<&Path>) -> Outcome {
    let phi = sat_formula(src)?;
    let inst = build_sat_instance(&phi)?;
    write_to(out, &inst.strings.to_file_string())?;
    if let Some(p) = known_out {
        fs::write(p, inst.known_file_string())?;
    }
    Ok(0)
}

fn gen_hypergraph(src: &GraphSource, out: Option<&Path>) -> Outcome {
    let h = hypergraph(src)?;
    let inst = build_hypergraph_instance(&h)?;
    write_to(out, &inst.strings.to_file_string())?;
    Ok(0)
}

fn flag(ok: bool) -> &'static str {
    if ok {
        "yes"
    } else {
        "no"
    }
}

fn verify_cnf(phi: &Cnf3, limits: &Limits) -> Result<bool, Failure> {
    let r = verify_sat(phi, limits)?;
    let maximal = r.known_maximal.iter().filter(|&&b| b).count();
    println!("known strings maximal: {maximal}/{}", r.known_maximal.len());
    println!("satisfiable: {}", flag(r.satisfiable));
    println!("another mcs: {}", r.witness.as_deref().unwrap_or("none"));
    if let Some(a) = &r.decoded {
        let bits: String = a.iter().map(|&b| if b { '1' } else { '0' }).collect();
        println!(
            "decoded assignment: {bits} (satisfies: {})",
            flag(r.decoded_satisfies)
        );
    }
    Ok(r.passed())
}

fn verify_graph(h: &Hypergraph, route: Route, limits: &Limits) -> Result<bool, Failure> {
    let r = verify_bijection(h, route, limits)?;
    println!("mcs: {}", r.mcs_count);
    println!("maximal independent sets: {}", r.mis_count);
    println!("alternating string present: {}", flag(r.w_present));
    for s in &r.missing {
        println!("missing: {s}");
    }
    for s in &r.unexpected {
        println!("unexpected: {s}");
    }
    for s in &r.with_11 {
        println!("contains 11: {s}");
    }
    Ok(r.passed())
}

fn verify_text(text: &str, route: Route, limits: &Limits) -> Result<bool, Failure> {
    let header = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#') && !l.starts_with('c'));
    match header.map(|l| l.split_whitespace().nth(1)) {
        Some(Some("hg")) => verify_graph(&Hypergraph::parse(text)?, route, limits),
        _ => verify_cnf(&Cnf3::parse_dimacs(text)?, limits),
    }
}

fn verify(
    file: Option<&Path>,
    random: Option<RandomKind>,
    seed: u64,
    size: usize,
    count: usize,
    route: Route,
    limits: &Limits,
) -> Outcome {
    let passed = match (file, random) {
        (Some(p), _) => verify_text(&read(p)?, route, limits)?,
        (None, Some(RandomKind::Hypergraph)) => verify_graph(
            &random_hypergraph(&mut rng(seed), size, count)?,
            route,
            limits,
        )?,
        (None, Some(RandomKind::Cnf)) => {
            verify_cnf(&random_cnf3(&mut rng(seed), size, count)?, limits)?
        }
        (None, None) => return Err(Failure::Io("give an input file or --random".into())),
    };
    println!("{}", if passed { "PASS" } else { "FAIL" });
    Ok(u8::from(!passed))
}

fn run(cli: Cli) -> Outcome {
    let limits = Limits {
        mask_cap: cli.mask_cap,
        tuple_cap: cli.tuple_cap,
        ..Limits::default()
    };
    match &cli.command {
        Command::Enumerate(input) => enumerate(&load(input)?, &limits),
        Command::EnumerateBruteforce(input) => enumerate_bruteforce(&load(input)?, &limits),
        Command::Count(input) => {
            println!("{}", count_mcs(&load(input)?, &limits)?);
            Ok(0)
        }
        Command::Assess { input, z } => {
            let out = assess_mcs(&load(input)?, *z, &limits)?;
            debug!("decided after {} emissions", out.solutions_seen);
            println!("{}", if out.verdict { "MORE" } else { "AT_MOST" });
            Ok(0)
        }
        Command::Another { input, known } => another(&load(input)?, known, &limits),
        Command::CheckMaximal { input, candidate } => check_maximal(&load(input)?, candidate),
        Command::GenSat {
            source,
            out,
            known_out,
        } => gen_sat(source, out.as_deref(), known_out.as_deref()),
        Command::GenHypergraph { source, out } => gen_hypergraph(source, out.as_deref()),
        Command::Verify {
            file,
            random,
            seed,
            size,
            count,
            route,
        } => {
            let route = match route {
                RouteArg::Oracle => Route::Oracle,
                RouteArg::Enumerator => Route::Enumerator,
            };
            verify(
                file.as_deref(),
                *random,
                *seed,
                *size,
                *count,
                route,
                &limits,
            )
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("MCS_LOG", "warn"))
        .target(env_logger::Target::Stderr)
        .init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("mcs: {f}");
            ExitCode::from(f.code())
        }
    }
}
