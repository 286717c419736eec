//! `evenmon`: membership, counting, enumeration and verification from the shell.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 usage or parse
//! error, 3 a budget was exceeded.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use evenmon::counting::{self, CountReport};
use evenmon::engine::{
    closure, conjecture_probe, exhaustive_rank, kernel_orbit_count, snapshot, ProbeOutcome,
    RankOutcome, DEFAULT_ELEMENT_CAP, DEFAULT_SUBSET_BUDGET,
};
use evenmon::family::{self, Oracle};
use evenmon::named::{labeled_generating_set, GeneratingFamily, GeneratingSetSpec, NamedElement};
use evenmon::syntax::parse_transformation;
use evenmon::verify::{run_suite, Suite, VerifyConfig, DEFAULT_SEED};
use evenmon::{Error, FamilySpec, FamilyTag, Transformation};

#[derive(Parser, Debug)]
#[command(name = "evenmon", version, about = "Even transformation monoids")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Largest number of elements a single closure may produce.
    #[arg(long, global = true, default_value_t = DEFAULT_ELEMENT_CAP)]
    budget: usize,
    /// Largest number of closures a rank or probe search may compute.
    #[arg(long, global = true, default_value_t = DEFAULT_SUBSET_BUDGET)]
    subset_budget: u64,
    /// Seed for every sampled check and probe.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Directory for enumeration snapshots.
    #[arg(long, global = true, env = "EVENMON_CACHE_DIR", default_value = ".evenmon-cache")]
    cache_dir: PathBuf,
    /// Cross-check every fast membership answer against the definition.
    #[arg(long, global = true)]
    paranoid: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide membership of one element, with the rule that fired.
    Member {
        family: String,
        n: usize,
        /// `[2,3,4,1]`, `(1,3)(2,4)` or a catalogue name such as `epsilon@6`.
        element: String,
    },
    /// Run a verification suite.
    Verify {
        suite: SuiteArg,
        #[arg(long)]
        max_n: Option<usize>,
        /// Drop a generator so that generation checks fail (negative control).
        #[arg(long, hide = true)]
        sabotage: bool,
    },
    /// Print the cardinality table for n = 1..=max_n.
    Table {
        max_n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Enumerate a monoid and store a snapshot.
    Enumerate {
        #[command(flatten)]
        source: Source,
    },
    /// Exhaustively compute the rank of a monoid.
    Rank {
        #[command(flatten)]
        source: Source,
        /// Largest generating-set size tried.
        #[arg(long, default_value_t = 12)]
        max: usize,
    },
    /// Write an element as a word in the catalogued generators.
    Factor {
        family: String,
        n: usize,
        element: String,
    },
    /// Count the orbits of admissible kernels under the even group.
    Orbits { n: usize },
    /// Look for a generating pair of the block group of sizes m and k.
    ProbeConjecture { m: usize, k: usize },
}

#[derive(clap::Args, Debug)]
struct Source {
    /// `<family> <n>` with family one of `gamma`, `delta`, `sigma`, `bn`,
    /// `bn'`, `gamma_oplus@m,k`; or just `<n>` together with `--gens`.
    #[arg(num_args = 1..=2, required = true)]
    target: Vec<String>,
    /// Semicolon-separated generators instead of a family.
    #[arg(long)]
    gens: Option<String>,
}

impl Source {
    fn parts(&self) -> Result<(Option<&str>, usize), Error> {
        let (family, n) = match (self.target.as_slice(), &self.gens) {
            ([f, n], None) => (Some(f.as_str()), n),
            ([n], Some(_)) => (None, n),
            _ => {
                return Err(Error::Parse {
                    position: 0,
                    message: "give either `<family> <n>` or `--gens <list> <n>`".into(),
                })
            }
        };
        let n = n.trim().parse().map_err(|_| Error::Parse {
            position: 0,
            message: format!("expected a degree, found `{n}`"),
        })?;
        Ok((family, n))
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum SuiteArg {
    PaperCore,
    PaperExtended,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Format {
    Csv,
    Json,
    Text,
}

/// A command failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExceeded { .. } => 3,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type CmdResult = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if t == 0 {
            eprintln!("error: --threads must be positive");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .expect("thread pool is configured once");
    }
    let start = Instant::now();
    let res = run(&cli);
    eprintln!("elapsed {:.2}s", start.elapsed().as_secs_f64());
    match res {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Member { family, n, element } => member(cli, family, *n, element),
        Command::Verify {
            suite,
            max_n,
            sabotage,
        } => verify(cli, *suite, *max_n, *sabotage),
        Command::Table { max_n, format } => table(*max_n, *format),
        Command::Enumerate { source } => enumerate(cli, source),
        Command::Rank { source, max } => rank(cli, source, *max),
        Command::Factor { family, n, element } => factor(cli, family, *n, element),
        Command::Orbits { n } => orbits(*n),
        Command::ProbeConjecture { m, k } => probe(cli, *m, *k),
    }
}

fn family_spec(name: &str, n: usize) -> Result<FamilySpec, Error> {
    FamilySpec::new(name.parse::<FamilyTag>()?, n)
}

fn element(text: &str, n: usize) -> Result<Transformation, Error> {
    let t = text.trim();
    let a = if t.starts_with('[') || t.starts_with('(') {
        parse_transformation(t, Some(n))?
    } else {
        t.parse::<NamedElement>()?.build()?
    };
    if a.degree() != n {
        return Err(Error::DegreeMismatch {
            left: n,
            right: a.degree(),
        });
    }
    Ok(a)
}

fn member(cli: &Cli, family: &str, n: usize, text: &str) -> CmdResult {
    let f = family_spec(family, n)?;
    let a = element(text, n)?;
    let v = family::explain(&f, &a)?;
    println!("{}: {a} in {f}", if v.member { "yes" } else { "no" });
    println!("reason: {}", v.reason);
    if cli.paranoid {
        let oracle = Oracle::new(u64::MAX, cli.budget, true);
        let slow = oracle.contains(&f, &a)?;
        if slow != v.member {
            println!("oracle: disagrees ({slow})");
            return Ok(1);
        }
        println!("oracle: agrees");
    }
    Ok(0)
}

fn verify(cli: &Cli, suite: SuiteArg, max_n: Option<usize>, sabotage: bool) -> CmdResult {
    let suite = match suite {
        SuiteArg::PaperCore => Suite::PaperCore,
        SuiteArg::PaperExtended => Suite::PaperExtended,
    };
    let default_n = match suite {
        Suite::PaperCore => 7,
        Suite::PaperExtended => 9,
    };
    let cfg = VerifyConfig {
        max_n: max_n.unwrap_or(default_n),
        element_cap: cli.budget,
        subset_budget: cli.subset_budget,
        seed: cli.seed,
        sabotage,
        ..VerifyConfig::default()
    };
    let out = run_suite(suite, &cfg);
    print!("{}", out.report());
    Ok(if out.failed() > 0 {
        1
    } else if out.skipped() > 0 {
        3
    } else {
        0
    })
}

fn table(max_n: usize, format: Format) -> CmdResult {
    let rows: Vec<CountReport> = counting::table(max_n);
    let text = match format {
        Format::Csv => counting::to_csv(&rows),
        Format::Json => counting::to_json(&rows),
        Format::Text => counting::to_text(&rows),
    };
    print!("{text}");
    if !text.ends_with('\n') {
        println!();
    }
    Ok(0)
}

fn generating_family(spec: &FamilySpec) -> Result<GeneratingSetSpec, Error> {
    let n = spec.n;
    Ok(match spec.tag {
        FamilyTag::Gamma => GeneratingSetSpec::new(GeneratingFamily::GammaGroup, n),
        FamilyTag::Delta => GeneratingSetSpec::new(GeneratingFamily::DeltaMonoid, n),
        FamilyTag::Sigma => GeneratingSetSpec::new(GeneratingFamily::SigmaMonoid, n),
        FamilyTag::Bn => GeneratingSetSpec::new(GeneratingFamily::Bn, n),
        FamilyTag::BnPrime => GeneratingSetSpec::new(GeneratingFamily::BnPrime, n),
        FamilyTag::GammaOplus(m, k) => GeneratingSetSpec::oplus(m, k),
        _ => {
            return Err(Error::UnknownName(format!(
                "{} has no catalogued generating set",
                spec.tag
            )))
        }
    })
}

/// Generators with labels, and the family they generate when named.
fn resolve(
    source: &Source,
) -> Result<(usize, Vec<(String, Transformation)>, Option<FamilySpec>), Error> {
    let (family, n) = source.parts()?;
    match (family, &source.gens) {
        (Some(name), None) => {
            let spec = family_spec(name, n)?;
            let gens = labeled_generating_set(&generating_family(&spec)?)?
                .into_iter()
                .map(|g| (g.label, g.element))
                .collect();
            Ok((n, gens, Some(spec)))
        }
        (None, Some(list)) => {
            let gens = list
                .split(';')
                .filter(|s| !s.trim().is_empty())
                .map(|s| element(s, n).map(|a| (s.trim().to_string(), a)))
                .collect::<Result<_, _>>()?;
            Ok((n, gens, None))
        }
        _ => Err(Error::Parse {
            position: 0,
            message: "give either a family name or --gens".into(),
        }),
    }
}

/// Refuses up front when the family is known to exceed the element cap.
fn precheck(spec: &Option<FamilySpec>, cap: usize) -> Result<(), Error> {
    if let Some(f) = spec {
        if let Ok(c) = counting::card(f) {
            if c > (cap as u64).into() {
                return Err(Error::BudgetExceeded {
                    reached: u64::try_from(&c).unwrap_or(u64::MAX),
                    cap: cap as u64,
                });
            }
        }
    }
    Ok(())
}

fn enumerate(cli: &Cli, source: &Source) -> CmdResult {
    let (n, gens, spec) = resolve(source)?;
    precheck(&spec, cli.budget)?;
    let elems: Vec<Transformation> = gens.into_iter().map(|(_, a)| a).collect();
    let c = snapshot::enumerate_cached(&cli.cache_dir, &elems, n, cli.budget)?;
    println!("count {}", c.count);
    println!(
        "snapshot {} ({})",
        c.path.display(),
        if c.reused { "reused" } else { "written" }
    );
    Ok(0)
}

fn rank(cli: &Cli, source: &Source, max: usize) -> CmdResult {
    let (n, gens, spec) = resolve(source)?;
    precheck(&spec, cli.budget)?;
    let elems: Vec<Transformation> = gens.into_iter().map(|(_, a)| a).collect();
    let m = closure(&elems, n, cli.budget)?;
    match exhaustive_rank(&m, max, cli.subset_budget)? {
        RankOutcome::Exact { rank, witness } => {
            println!("rank {rank}");
            for w in witness {
                println!("  {w}");
            }
            Ok(0)
        }
        RankOutcome::AboveMax { max } => {
            println!("rank > {max}");
            Ok(0)
        }
        RankOutcome::BudgetExhausted { closures } => Err(Error::BudgetExceeded {
            reached: closures,
            cap: cli.subset_budget,
        }
        .into()),
    }
}

fn factor(cli: &Cli, family: &str, n: usize, text: &str) -> CmdResult {
    let spec = family_spec(family, n)?;
    let a = element(text, n)?;
    precheck(&Some(spec), cli.budget)?;
    let gens = labeled_generating_set(&generating_family(&spec)?)?;
    let elems: Vec<Transformation> = gens.iter().map(|g| g.element.clone()).collect();
    let m = closure(&elems, n, cli.budget)?;
    let word = m.factor_word(&a)?;
    let labels: Vec<&str> = word.iter().map(|&i| gens[i].label.as_str()).collect();
    if labels.is_empty() {
        println!("{a} = identity");
    } else {
        println!("{a} = {}", labels.join(" * "));
    }
    Ok(0)
}

fn orbits(n: usize) -> CmdResult {
    let r = kernel_orbit_count(n)?;
    println!("orbits {}", r.orbit_count);
    for (k, size) in r.representatives.iter().zip(&r.orbit_sizes) {
        println!("  {k}  ({size} kernels)");
    }
    Ok(0)
}

fn probe(cli: &Cli, m: usize, k: usize) -> CmdResult {
    match conjecture_probe(m, k, cli.subset_budget, cli.seed)? {
        ProbeOutcome::RankIsTwo(a, b) => {
            println!("generating pair found");
            println!("  {a}");
            println!("  {b}");
            Ok(0)
        }
        ProbeOutcome::NoPairFound => {
            println!("no generating pair: rank is at least 3");
            Ok(0)
        }
        ProbeOutcome::BudgetExceeded { closures } => Err(Error::BudgetExceeded {
            reached: closures,
            cap: cli.subset_budget,
        }
        .into()),
    }
}
