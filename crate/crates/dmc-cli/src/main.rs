//! Command-line front end for exact weight enumeration of decreasing
//! monomial codes.

mod io;
mod render;

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use dmc_core::eval::full_weight_distribution;
use dmc_core::profile::{
    build_profile_with, count_min_weight, count_type2_census, type2_census_vectors,
    type2_family_list, verify_profile, Budgets, CheckOutcome, OracleKind, ProfileOptions,
    Type2Count,
};
use dmc_core::type1::{count_type1_total, mu_range, Type1Options};
use dmc_core::{DecreasingSet, Error, EvalVector, Monomial, OrbitSpec};

/// CLI-level failure with its exit code.
#[derive(Debug)]
pub enum CliError {
    /// Usage or input problem (exit 1).
    Input(String),
    /// Verification mismatch (exit 2).
    Mismatch,
    /// Budget exceeded under --strict (exit 3).
    Budget(String),
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        CliError::Input(format!("{err}"))
    }
}

#[derive(Parser)]
#[command(
    name = "dmc",
    about = "Exact weight enumeration and design tools for decreasing monomial codes",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a code specification and write it as JSON.
    Construct(ConstructArgs),
    /// Exact weight profile below twice the minimum distance.
    Profile(ProfileArgs),
    /// Check the closed-form profile against an oracle.
    Verify(VerifyArgs),
    /// Inspect one orbit: sizes, weights and the parameter diagram.
    Orbit(OrbitArgs),
    /// Design tools: antichains and candidate comparison.
    Design {
        #[command(subcommand)]
        sub: DesignCommand,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CodeType {
    Rm,
    MaxMonomials,
    Rows,
    Rmxpolar,
}

#[derive(Args)]
struct ConstructArgs {
    /// Construction family.
    #[arg(long = "type", value_enum)]
    code_type: CodeType,
    /// Variable count; the code length is 2^m.
    #[arg(long)]
    m: u32,
    /// Reed-Muller order (for --type rm).
    #[arg(long)]
    r: Option<u32>,
    /// Comma-separated maximal monomials (for --type max-monomials).
    #[arg(long)]
    max: Option<String>,
    /// File of generator row indices (for --type rows).
    #[arg(long)]
    rows_file: Option<String>,
    /// Maximal degree-3 monomial (for --type rmxpolar).
    #[arg(long)]
    f_max: Option<String>,
    /// Output path; '-' is standard output.
    #[arg(short, long, default_value = "-")]
    output: String,
}

#[derive(Args, Clone)]
struct BudgetArgs {
    /// Maximum vector operations per census.
    #[arg(long, default_value_t = 1u128 << 34)]
    budget_pairs: u128,
    /// Maximum distinct vectors stored by a census.
    #[arg(long, default_value_t = 1usize << 27)]
    budget_dedup: usize,
    /// Maximum parameter-space size per orbit enumeration.
    #[arg(long, default_value_t = 1u64 << 26)]
    budget_orbit: u64,
    /// Maximum dimension for full Gray-code enumeration.
    #[arg(long, default_value_t = 28)]
    cap_k: u32,
}

impl BudgetArgs {
    fn budgets(&self) -> Budgets {
        Budgets {
            pair_ops: self.budget_pairs,
            dedup: self.budget_dedup,
            orbit: self.budget_orbit,
            cap_k: self.cap_k,
        }
    }
}

#[derive(Args)]
struct ProfileArgs {
    /// Code specification path; '-' is standard input.
    spec: String,
    /// Cap on the largest mu reported.
    #[arg(long)]
    mu_max: Option<u32>,
    #[command(flatten)]
    budgets: BudgetArgs,
    /// Attach the per-case Type I ledger to the JSON output.
    #[arg(long)]
    ledger: bool,
    /// Use the unhalved B.1 product (census comparison toggle).
    #[arg(long)]
    b1_unhalved: bool,
    /// Census worker threads (budgets apply per worker).
    #[arg(long, default_value_t = default_threads())]
    threads: usize,
    /// Accept a non-decreasing monomial set with a warning.
    #[arg(long)]
    allow_non_decreasing: bool,
    /// Output path for the profile JSON; '-' is standard output.
    #[arg(short, long, default_value = "-")]
    output: String,
    /// Also write the CSV mirror here.
    #[arg(long)]
    csv: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleArg {
    Full,
    Census,
    Both,
}

#[derive(Args)]
struct VerifyArgs {
    /// Code specification path; '-' is standard input.
    spec: String,
    /// Which oracle to compare against.
    #[arg(long, value_enum, default_value_t = OracleArg::Both)]
    oracle: OracleArg,
    #[command(flatten)]
    budgets: BudgetArgs,
    /// Use the unhalved B.1 product (census comparison toggle).
    #[arg(long)]
    b1_unhalved: bool,
    /// Treat exceeded budgets as a hard error (exit 3).
    #[arg(long)]
    strict: bool,
    /// Accept a non-decreasing monomial set with a warning.
    #[arg(long)]
    allow_non_decreasing: bool,
    /// Write the report as JSON here ('-' for standard output).
    #[arg(short, long)]
    output: Option<String>,
    /// Write the full-oracle weight distribution here (.csv for the CSV
    /// mirror, anything else for JSON).
    #[arg(long)]
    distribution: Option<String>,
}

#[derive(Args)]
struct OrbitArgs {
    /// Variable count.
    #[arg(long)]
    m: u32,
    /// Context monomial f.
    #[arg(long)]
    f: String,
    /// Factored-out divisor h (the action targets f/h).
    #[arg(long, default_value = "1")]
    h: String,
    /// Partner monomial: enumerate the pair-restricted orbit.
    #[arg(long)]
    g: Option<String>,
    /// Code specification: enumerate the set-restricted orbit.
    #[arg(long)]
    code: Option<String>,
    /// Render the parameter grid as a Young diagram.
    #[arg(long)]
    young: bool,
    #[command(flatten)]
    budgets: BudgetArgs,
    /// Accept a non-decreasing monomial set with a warning.
    #[arg(long)]
    allow_non_decreasing: bool,
}

#[derive(Subcommand)]
enum DesignCommand {
    /// List an antichain of equal-index-sum monomials with scores.
    Antichain(AntichainArgs),
    /// Compare RMxPolar candidates (one row per maximal monomial).
    Compare(CompareArgs),
}

#[derive(Args)]
struct AntichainArgs {
    #[arg(long)]
    m: u32,
    /// Degree of the antichain members.
    #[arg(long)]
    r: u32,
    /// Common index sum.
    #[arg(long)]
    l: u32,
}

#[derive(Args)]
struct CompareArgs {
    #[arg(long)]
    m: u32,
    /// Comma-separated degree-3 maximal monomials.
    #[arg(long)]
    candidates: String,
    #[command(flatten)]
    budgets: BudgetArgs,
    /// Write the JSON sidecar here.
    #[arg(short, long)]
    output: Option<String>,
}

fn default_threads() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version requests are not usage errors.
            use clap::error::ErrorKind;
            let benign = matches!(
                err.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            );
            let _ = err.print();
            return if benign {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Input(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
        Err(CliError::Mismatch) => {
            eprintln!("error: verification mismatch");
            ExitCode::from(2)
        }
        Err(CliError::Budget(message)) => {
            eprintln!("error: budget exceeded: {message}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Construct(args) => construct(args),
        Command::Profile(args) => profile(args),
        Command::Verify(args) => verify(args),
        Command::Orbit(args) => orbit(args),
        Command::Design { sub } => match sub {
            DesignCommand::Antichain(args) => antichain(args),
            DesignCommand::Compare(args) => compare(args),
        },
    }
}

fn construct(args: ConstructArgs) -> Result<(), CliError> {
    io::check_m_supported(args.m)?;
    let set = match args.code_type {
        CodeType::Rm => {
            let r = args
                .r
                .ok_or_else(|| CliError::Input(String::from("--type rm needs --r")))?;
            DecreasingSet::reed_muller(r, args.m)?
        }
        CodeType::MaxMonomials => {
            let text = args.max.ok_or_else(|| {
                CliError::Input(String::from("--type max-monomials needs --max"))
            })?;
            let gens = io::parse_monomial_list(&text, args.m)?;
            DecreasingSet::closure(args.m, &gens)?
        }
        CodeType::Rows => {
            let path = args.rows_file.ok_or_else(|| {
                CliError::Input(String::from("--type rows needs --rows-file"))
            })?;
            let rows = io::parse_rows(&io::read_text(&path)?)?;
            DecreasingSet::from_rows(args.m, &rows)?
        }
        CodeType::Rmxpolar => {
            let text = args.f_max.ok_or_else(|| {
                CliError::Input(String::from("--type rmxpolar needs --f-max"))
            })?;
            let f_max = Monomial::parse(&text, args.m)
                .map_err(|e| CliError::Input(format!("--f-max: {e}")))?;
            DecreasingSet::rmxpolar(args.m, &f_max)?
        }
    };
    io::write_text(&args.output, &io::code_spec_json(&set))
}

/// Threaded Type II census: the family list is split round-robin, each
/// worker deduplicates its share, and the shares are merged by set union,
/// so the count is independent of the partitioning.
fn threaded_type2(
    set: &DecreasingSet,
    mu: u32,
    budgets: &Budgets,
    threads: usize,
) -> Type2Count {
    if threads <= 1 {
        return count_type2_census(set, mu, budgets);
    }
    if mu == 1 {
        return Type2Count::Exact(count_min_weight(set));
    }
    let families = match type2_family_list(set, mu) {
        Ok(f) => f,
        Err(err) => return Type2Count::Unavailable(format!("{err}")),
    };
    if families.is_empty() {
        return Type2Count::Exact(0);
    }
    let workers = threads.min(families.len());
    let chunks: Vec<Vec<_>> = (0..workers)
        .map(|w| {
            families
                .iter()
                .skip(w)
                .step_by(workers)
                .cloned()
                .collect()
        })
        .collect();
    let results = std::thread::scope(|scope| {
        let handles: Vec<_> = chunks
            .iter()
            .map(|chunk| scope.spawn(move || type2_census_vectors(set, mu, chunk, budgets)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("census worker panicked"))
            .collect::<Vec<_>>()
    });
    let mut union: Option<hashbrown::HashSet<EvalVector>> = None;
    for result in results {
        match result {
            Ok(share) => match union.as_mut() {
                Some(u) => u.extend(share),
                None => union = Some(share),
            },
            Err(err) => return Type2Count::Unavailable(format!("{err}")),
        }
    }
    Type2Count::Exact(union.map_or(0, |u| u.len() as u128))
}

fn profile(args: ProfileArgs) -> Result<(), CliError> {
    let set = io::read_code_spec(&args.spec, args.allow_non_decreasing)?;
    let options = ProfileOptions {
        budgets: args.budgets.budgets(),
        b1_unhalved: args.b1_unhalved,
        mu_max: args.mu_max,
    };
    let threads = args.threads.max(1);
    let profile = build_profile_with(&set, &options, |set, mu, budgets| {
        threaded_type2(set, mu, budgets, threads)
    })?;
    let ledger = if args.ledger {
        let t1_opts = Type1Options {
            b1_unhalved: args.b1_unhalved,
        };
        let mut blocks = Vec::new();
        if let Some((lo, hi)) = mu_range(set.m(), profile.r) {
            for mu in lo..=hi.min(args.mu_max.unwrap_or(hi)) {
                let (_, cases) = count_type1_total(&set, mu, t1_opts)?;
                blocks.push((mu, cases));
            }
        }
        Some(blocks)
    } else {
        None
    };
    io::write_text(&args.output, &io::profile_json(&profile, ledger.as_deref()))?;
    if let Some(csv_path) = &args.csv {
        io::write_text(csv_path, &io::profile_csv(&profile))?;
    }
    Ok(())
}

fn verify(args: VerifyArgs) -> Result<(), CliError> {
    let set = io::read_code_spec(&args.spec, args.allow_non_decreasing)?;
    let options = ProfileOptions {
        budgets: args.budgets.budgets(),
        b1_unhalved: args.b1_unhalved,
        mu_max: None,
    };
    let oracle = match args.oracle {
        OracleArg::Full => OracleKind::Full,
        OracleArg::Census => OracleKind::Census,
        OracleArg::Both => OracleKind::Both,
    };
    let report = match verify_profile(&set, oracle, &options) {
        Ok(report) => report,
        Err(err @ (Error::CapExceeded { .. } | Error::BudgetExceeded { .. })) => {
            if args.strict {
                return Err(CliError::Budget(format!("{err}")));
            }
            eprintln!("warning: oracle unavailable: {err}");
            return Ok(());
        }
        Err(err) => return Err(err.into()),
    };
    for check in &report.checks {
        match &check.outcome {
            CheckOutcome::Match => {
                println!("ok   {} = {}", check.label, check.actual)
            }
            CheckOutcome::Mismatch => println!(
                "FAIL {}: oracle {} vs formula {}",
                check.label, check.expected, check.actual
            ),
            CheckOutcome::Skipped(reason) => {
                println!("skip {} ({reason})", check.label);
                if args.strict {
                    return Err(CliError::Budget(reason.clone()));
                }
            }
        }
    }
    if let Some(path) = &args.output {
        io::write_text(path, &io::report_json(&report))?;
    }
    if let Some(path) = &args.distribution {
        let dist = match full_weight_distribution(&set, args.budgets.cap_k) {
            Ok(d) => d,
            Err(err) => {
                if args.strict {
                    return Err(CliError::Budget(format!("{err}")));
                }
                eprintln!("warning: distribution unavailable: {err}");
                BTreeMap::new()
            }
        };
        if !dist.is_empty() {
            let counts: Vec<(u64, u128)> = dist.into_iter().collect();
            let text = if path.ends_with(".csv") {
                io::distribution_csv(&counts)
            } else {
                io::distribution_json(set.m(), set.dimension(), &counts)
            };
            io::write_text(path, &text)?;
        }
    }
    if report.ok {
        Ok(())
    } else {
        Err(CliError::Mismatch)
    }
}

fn orbit(args: OrbitArgs) -> Result<(), CliError> {
    io::check_m_supported(args.m)?;
    let f = Monomial::parse(&args.f, args.m)
        .map_err(|e| CliError::Input(format!("--f: {e}")))?;
    let h = Monomial::parse(&args.h, args.m)
        .map_err(|e| CliError::Input(format!("--h: {e}")))?;
    if args.g.is_some() && args.code.is_some() {
        return Err(CliError::Input(String::from(
            "--g and --code are mutually exclusive",
        )));
    }
    let mut self_set: Option<DecreasingSet> = None;
    let spec = if let Some(gtext) = &args.g {
        let g = Monomial::parse(gtext, args.m)
            .map_err(|e| CliError::Input(format!("--g: {e}")))?;
        println!("orbit: pair-restricted action of {f} on {f}/{h} against {g}");
        OrbitSpec::restricted_pair(f, h, g)?
    } else if let Some(path) = &args.code {
        let set = io::read_code_spec(path, args.allow_non_decreasing)?;
        println!("orbit: set-restricted action of {f} on {f}/{h}");
        self_set = Some(set.clone());
        OrbitSpec::restricted_self(f, h, set)?
    } else {
        println!("orbit: full action of {f} on {f}/{h}");
        OrbitSpec::full(f, h)?
    };
    let closed = spec.closed_form_size()?;
    println!("closed-form size: {closed}");
    let evs = dmc_core::orbit::orbit_ev_vectors(&spec, args.budgets.budget_orbit)?;
    let mut distinct: std::collections::BTreeSet<&EvalVector> = Default::default();
    let mut histogram: BTreeMap<u64, u128> = BTreeMap::new();
    for v in &evs {
        if distinct.insert(v) {
            *histogram.entry(v.weight()).or_insert(0) += 1;
        }
    }
    println!("enumerated size: {}", distinct.len());
    println!("weight histogram:");
    for (w, count) in &histogram {
        println!("  {w}: {count}");
    }
    if args.young {
        print!("{}", render::young_diagram(&spec, self_set.as_ref()));
    }
    if closed != distinct.len() as u128 {
        return Err(CliError::Mismatch);
    }
    Ok(())
}

fn antichain(args: AntichainArgs) -> Result<(), CliError> {
    io::check_m_supported(args.m)?;
    let members = dmc_core::design::antichain(args.m, args.r, args.l);
    let mut rows: Vec<(Monomial, u32, u128)> = members
        .iter()
        .map(|f| {
            (
                *f,
                f.lambda_total(),
                dmc_core::design::type1_refinement_score(f),
            )
        })
        .collect();
    rows.sort_by_key(|(_, lambda, score)| (*lambda, *score));
    println!("antichain A_{{{},{}}} over m = {}:", args.l, args.r, args.m);
    for (f, lambda, score) in rows {
        println!("  {f}: |lambda| = {lambda}, type1 refinement score = {score}");
    }
    Ok(())
}

fn compare(args: CompareArgs) -> Result<(), CliError> {
    io::check_m_supported(args.m)?;
    let candidates = io::parse_monomial_list(&args.candidates, args.m)?;
    let report =
        dmc_core::design::design_compare(args.m, &candidates, &args.budgets.budgets())?;
    print!("{}", render::design_table(&report));
    if let Some(path) = &args.output {
        io::write_text(path, &render::design_json(&report))?;
    }
    Ok(())
}
