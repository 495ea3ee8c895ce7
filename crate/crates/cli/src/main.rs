use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use spectra2ring::fixtures::{self, DEFAULT_SEED};
use spectra2ring::localization as loc;
use spectra2ring::ring::GradedRing;
use spectra2ring::spectrum::enumerate_primes;
use spectra2ring::support::SupportContext;
use spectra2ring::two_ring::TwoRing;
use spectra2ring::verify::{self, Suite};
use spectra2ring::{json, Error};

#[derive(Parser)]
#[command(name = "spectra2ring", version, about = "Spectra of finite graded commutative 2-rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the homogeneous spectrum.
    Spec {
        /// Fixture name or path to a ring file.
        #[arg(long)]
        ring: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Localize at the complement of a prime or away from a morphism.
    #[command(group(ArgGroup::new("system").required(true).args(["at", "away"])))]
    Localize {
        #[arg(long)]
        ring: String,
        /// Index of a prime in `spec` output.
        #[arg(long)]
        at: Option<usize>,
        /// Morphism such as `x:0->1`.
        #[arg(long)]
        away: Option<String>,
    },
    /// Print the table prime → ρ(σ(prime)).
    Rho {
        #[arg(long)]
        ring: String,
    },
    /// Run invariant suites; exits 1 if any check fails.
    Verify {
        /// Defaults to every fixture.
        #[arg(long)]
        ring: Option<String>,
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        /// Seed for random rings; falls back to SPECTRA2RING_SEED.
        #[arg(long)]
        seed: Option<u64>,
        /// Number of random rings to add.
        #[arg(long, default_value_t = 0)]
        random: usize,
    },
    /// Fixture listing and ring files.
    Ring {
        #[command(subcommand)]
        command: RingCommand,
    },
}

#[derive(Subcommand)]
enum RingCommand {
    /// Print fixture names.
    List,
    /// Print a ring in file format.
    Dump {
        #[arg(long)]
        ring: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Ideals,
    Loc,
    Support,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::All => Suite::All,
            SuiteArg::Ideals => Suite::Ideals,
            SuiteArg::Loc => Suite::Loc,
            SuiteArg::Support => Suite::Support,
        }
    }
}

enum Failure {
    Usage(String),
    Verification,
    Malformed(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification => 1,
            Failure::Usage(_) => 2,
            Failure::Malformed(_) => 3,
        }
    }
}

type Outcome = Result<String, Failure>;

fn load(source: &str) -> Result<GradedRing, Failure> {
    if let Some(r) = fixtures::by_name(source) {
        return Ok(r);
    }
    let path = Path::new(source);
    if !path.is_file() {
        return Err(Failure::Usage(format!("{source:?} is neither a fixture nor a file")));
    }
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Malformed(format!("{source}: {e}")))?;
    json::ring_from_json(&text).map_err(|e| Failure::Malformed(format!("{source}: {e}")))
}

fn two_ring(source: &str) -> Result<TwoRing, Failure> {
    let ring = load(source)?;
    ring.require_axioms().map_err(|e| Failure::Malformed(format!("{source}: {e}")))?;
    TwoRing::new(ring).map_err(|e| Failure::Malformed(format!("{source}: {e}")))
}

fn internal(e: Error) -> Failure {
    Failure::Malformed(e.to_string())
}

fn spec(source: &str, format: Format) -> Outcome {
    let t = two_ring(source)?;
    let s = enumerate_primes(&t);
    Ok(match format {
        Format::Json => json::spec_to_json(&t, &s),
        Format::Dot => json::emit_dot(&s),
    })
}

fn localize(source: &str, at: Option<usize>, away: Option<&str>) -> Outcome {
    let t = two_ring(source)?;
    let spec = enumerate_primes(&t);
    let (sys, label) = match (at, away) {
        (Some(i), _) => {
            let p = spec
                .primes
                .get(i)
                .ok_or_else(|| Failure::Usage(format!("prime index {i} out of range (spectrum has {})", spec.len())))?;
            (loc::prime_complement(&t, p).map_err(internal)?, format!("complement of {}", spec.keys[i]))
        }
        (None, Some(sel)) => {
            let r = json::parse_morphism(&t, sel).map_err(|e| Failure::Usage(e.to_string()))?;
            (loc::system_of(&t, &r), format!("powers of {sel}"))
        }
        (None, None) => return Err(Failure::Usage("one of --at and --away is required".into())),
    };
    let l = loc::localize(&t, &sys).map_err(internal)?;
    let sl = loc::spec_localization(&t, &spec, &sys, &l).map_err(internal)?;
    Ok(json::pretty(&json::localization_value(&t, &label, &l, &sl)))
}

fn rho(source: &str) -> Outcome {
    let t = two_ring(source)?;
    let ctx = SupportContext::new(&t);
    let v: Value = json::rho_value(&ctx).map_err(internal)?;
    Ok(json::pretty(&v))
}

fn verify_rings(source: Option<&str>, suite: Suite, seed: Option<u64>, random: usize) -> Outcome {
    let mut rings: Vec<(String, GradedRing)> = match source {
        Some(s) => vec![(s.to_string(), load(s)?)],
        None => fixtures::all().into_iter().map(|(n, r)| (n.to_string(), r)).collect(),
    };
    let seed = seed.unwrap_or_else(|| fixtures::seed_from_env(DEFAULT_SEED));
    for (i, r) in fixtures::random_rings(seed, random, 81).into_iter().enumerate() {
        rings.push((format!("random-{seed}-{i}"), r));
    }
    let mut out = String::new();
    let mut failed = 0;
    for (name, ring) in &rings {
        for c in verify::run(ring, suite) {
            if !c.passed() {
                failed += 1;
            }
            out.push_str(&format!("{name}: {c}\n"));
        }
    }
    if failed > 0 {
        print!("{out}");
        println!("{failed} check(s) failed");
        return Err(Failure::Verification);
    }
    out.push_str(&format!("all checks passed on {} ring(s)\n", rings.len()));
    Ok(out)
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Spec { ring, format } => spec(&ring, format),
        Command::Localize { ring, at, away } => localize(&ring, at, away.as_deref()),
        Command::Rho { ring } => rho(&ring),
        Command::Verify { ring, suite, seed, random } => verify_rings(ring.as_deref(), suite.into(), seed, random),
        Command::Ring { command: RingCommand::List } => Ok(fixtures::FIXTURE_NAMES.map(|n| format!("{n}\n")).concat()),
        Command::Ring { command: RingCommand::Dump { ring } } => Ok(json::ring_to_json(&load(&ring)?)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err(f) => {
            match &f {
                Failure::Usage(m) | Failure::Malformed(m) => eprintln!("error: {m}"),
                Failure::Verification => {}
            }
            ExitCode::from(f.code())
        }
    }
}
