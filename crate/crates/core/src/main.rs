use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use retla::app::{analyze, exit_code, verify_any, verify_corpus};
use retla::cartan::verify::{Claim, Status, VerificationReport, VerifyOptions, Witness};
use retla::cartan::{cartan_span, enumerate_torals, maximal_toral, DEFAULT_BUDGET};
use retla::corpus::corpus;
use retla::env::{associativity_violation, commutative_separable_check, locality, u_of, Locality, DEFAULT_U_BUDGET};
use retla::random::random_gl_subalgebra;
use retla::sstheory::Exactness;
use retla::{io, with_algebra, AnyAlgebra, F2, F3, F5, F7};

// A closed stdout (e.g. `| head`) ends the process quietly instead of panicking.
macro_rules! println {
    ($($t:tt)*) => {{
        use std::io::Write;
        if writeln!(std::io::stdout(), $($t)*).is_err() {
            std::process::exit(0);
        }
    }};
}

#[derive(Parser)]
#[command(name = "retla", version, about = "Restricted Lie algebras over F_p: torals, Cartans, radicals")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Common {
    /// Line-delimited JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// Cap on exhaustive element sweeps.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Load and validate an algebra file.
    Check { file: PathBuf },
    /// Center, series, nilpotency, radical, a maximal toral and its Cartan.
    Analyze { file: PathBuf },
    /// A certified maximal toral, its Cartan, and the span of all Cartans.
    Cartan { file: PathBuf },
    /// All maximal toral subalgebras.
    Enumerate { file: PathBuf },
    /// Check claims on one algebra or on the built-in corpus.
    Verify {
        #[arg(required_unless_present = "corpus", conflicts_with = "corpus")]
        file: Option<PathBuf>,
        #[arg(long)]
        corpus: bool,
        /// Comma-separated claim ids; all by default.
        #[arg(long, value_delimiter = ',')]
        theorems: Vec<Claim>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Include per-claim wall-clock milliseconds (makes output nondeterministic).
        #[arg(long)]
        timings: bool,
    },
    /// The restricted enveloping algebra: dimension, locality, commutativity, Frobenius.
    Env { file: PathBuf },
    /// Random restricted subalgebras of gl_n.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u32,
        #[arg(long, default_value_t = 2)]
        gens: usize,
        #[arg(long, default_value_t = 1)]
        count: u64,
        /// Directory to write `<name>.json` files into; prints to stdout otherwise.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn load(path: &Path) -> Result<AnyAlgebra, Failure> {
    match io::load(path) {
        Ok(g) => Ok(g),
        Err(io::IoError::Invalid(report)) => Err(Failure(format!("{}: invalid algebra\n{report}", path.display()))),
        Err(e) => Err(Failure(format!("{}: {e}", path.display()))),
    }
}

fn print_json(value: &impl Serialize) {
    println!("{}", serde_json::to_string(value).expect("serializable"));
}

fn show(w: &Witness) -> &str {
    &w.display
}

fn run(cli: Cli) -> Result<i32, Failure> {
    let c = cli.common;
    match cli.command {
        Command::Check { file } => check(&file, c),
        Command::Analyze { file } => {
            let g = load(&file)?;
            let a = with_algebra!(&g, g => analyze(g, c.seed, c.budget));
            if c.json {
                print_json(&a);
            } else {
                println!("{} over F_{} (dim {})", a.name, a.p, a.dim);
                println!("center: {}", show(&a.center));
                println!("derived series dims: {:?}", a.derived_series);
                println!("lower central series dims: {:?}", a.lower_central_series);
                println!("nilpotent: {}, solvable: {}", a.nilpotent, a.solvable);
                println!("p-nilpotent radical: {} ({:?})", show(&a.radical), a.radical_exactness);
                if let Some(v) = &a.radical_plain_variant {
                    println!("plain ideal variant: {}", show(v));
                }
                match (&a.maximal_toral, &a.certificate, &a.cartan) {
                    (Some(t), Some(ch), Some(cartan)) => {
                        println!("maximal toral: {}", show(t));
                        println!(
                            "certificate: centralizer nilpotent {}, central toral part equals toral {}",
                            ch.cartan_is_nilpotent, ch.central_toral_part_equals_toral
                        );
                        println!("cartan: {}", show(cartan));
                    }
                    _ => println!("maximal toral: sweep exceeds budget {}", c.budget),
                }
            }
            Ok(if a.maximal_toral.is_some() && a.radical_exactness == Exactness::Exact { 0 } else { 2 })
        }
        Command::Cartan { file } => {
            let g = load(&file)?;
            with_algebra!(&g, g => cartan(g, c))
        }
        Command::Enumerate { file } => {
            let g = load(&file)?;
            with_algebra!(&g, g => enumerate(g, c))
        }
        Command::Verify { file, corpus: use_corpus, theorems, jobs, timings } => {
            let claims = if theorems.is_empty() { Claim::ALL.to_vec() } else { theorems };
            let opts = VerifyOptions { seed: c.seed, budget: c.budget, timings };
            let reports = if use_corpus {
                verify_corpus(&corpus(), &claims, opts, jobs)
            } else {
                let path = file.expect("clap enforces file or --corpus");
                verify_any(&load(&path)?, &claims, opts)
            };
            emit(&reports, c.json);
            Ok(exit_code(reports.iter().map(|r| &r.status)))
        }
        Command::Env { file } => {
            let g = load(&file)?;
            with_algebra!(&g, g => env(g, c))
        }
        Command::Random { n, p, gens, count, out } => random(n, p, gens, count, out, c),
    }
}

fn check(file: &Path, c: Common) -> Result<i32, Failure> {
    match io::load(file) {
        Ok(g) => {
            if c.json {
                print_json(&serde_json::json!({"file": file, "name": g.name(), "p": g.p(), "dim": g.dim(), "valid": true}));
            } else {
                println!("{}: valid, {} over F_{}, dim {}", file.display(), g.name(), g.p(), g.dim());
            }
            Ok(0)
        }
        Err(io::IoError::Invalid(report)) => {
            if c.json {
                print_json(&serde_json::json!({"file": file, "valid": false, "violations": report.violations}));
            } else {
                println!("{}: invalid\n{report}", file.display());
            }
            Ok(1)
        }
        Err(e) => Err(Failure(format!("{}: {e}", file.display()))),
    }
}

fn emit(reports: &[VerificationReport], json: bool) {
    for r in reports {
        if json {
            print_json(r);
        } else {
            let status = match r.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Inconclusive => "INCONCLUSIVE",
            };
            println!("{status:<12} {:<24} {}@{}: {}", r.claim_id, r.algebra, r.p, r.summary);
            if r.status != Status::Pass {
                for w in &r.witnesses {
                    println!("    {}: {}", w.role, w.display);
                }
            }
        }
    }
}

fn cartan<F: retla::PrimeField>(g: &retla::RestrictedLieAlgebra<F>, c: Common) -> Result<i32, Failure> {
    let cert = match maximal_toral(g, c.seed, c.budget) {
        Ok(cert) => cert,
        Err(e) => {
            println!("inconclusive: {e}; partial toral {}", g.format_subspace(e.partial.space()));
            return Ok(2);
        }
    };
    let span = cartan_span(g, c.seed, c.budget);
    if c.json {
        print_json(&serde_json::json!({
            "algebra": g.name(),
            "p": F::P,
            "seed": c.seed,
            "toral": Witness::subspace(g, "maximal toral", cert.toral.space()),
            "cartan": Witness::subspace(g, "cartan", cert.cartan.space()),
            "certificate": cert.checks,
            "span_is_everything": span.is_everything(),
            "span_witnesses": span.witnesses.iter().map(|w| Witness::subspace(g, "cartan", w.space())).collect::<Vec<_>>(),
        }));
    } else {
        println!("maximal toral: {}", g.format_subspace(cert.toral.space()));
        println!("cartan: {}", g.format_subspace(cert.cartan.space()));
        println!(
            "certificate: centralizer nilpotent {}, central toral part equals toral {}",
            cert.checks.cartan_is_nilpotent, cert.checks.central_toral_part_equals_toral
        );
        println!("span of Cartans is everything: {}", span.is_everything());
        for w in &span.witnesses {
            println!("    {}", g.format_subspace(w.space()));
        }
    }
    Ok(if span.is_everything() { 0 } else if span.exhaustive { 1 } else { 2 })
}

fn enumerate<F: retla::PrimeField>(g: &retla::RestrictedLieAlgebra<F>, c: Common) -> Result<i32, Failure> {
    let e = enumerate_torals(g, c.seed, c.budget);
    if c.json {
        for t in &e.maximal {
            print_json(&Witness::subspace(g, "maximal toral", t));
        }
        print_json(&serde_json::json!({"maximal_torals": e.maximal.len(), "torals": e.torals.len(), "exactness": e.exactness}));
    } else {
        for t in &e.maximal {
            println!("{}", g.format_subspace(t));
        }
        println!("{} maximal torals among {} torals ({:?})", e.maximal.len(), e.torals.len(), e.exactness);
    }
    Ok(if e.exactness == Exactness::Exact { 0 } else { 2 })
}

fn env<F: retla::PrimeField>(g: &retla::RestrictedLieAlgebra<F>, c: Common) -> Result<i32, Failure> {
    let u = match u_of(g, DEFAULT_U_BUDGET) {
        Ok(u) => u,
        Err(e) => {
            println!("inconclusive: {e}");
            return Ok(2);
        }
    };
    let loc = locality(&u);
    let how = match &loc {
        Locality::Dense { dims } => format!("augmentation ideal power dimensions {dims:?}"),
        Locality::Filtration { weights, bound, .. } => format!("weight filtration {weights:?}, I^{bound} = 0"),
        Locality::Witness { element } => format!("{} has non-vanishing p-powers", g.format_element(element)),
    };
    let sep = commutative_separable_check(&u);
    let assoc = associativity_violation(&u, 500, c.seed);
    if c.json {
        print_json(&serde_json::json!({
            "algebra": g.name(),
            "p": F::P,
            "dim": u.dim(),
            "local": loc.is_local(),
            "evidence": how,
            "commutative": sep.commutative,
            "frobenius_bijective": sep.frobenius_bijective,
            "associativity_violation": assoc,
        }));
    } else {
        println!("dim u(g) = {}", u.dim());
        println!("local: {} ({how})", loc.is_local());
        println!("commutative: {}", sep.commutative);
        match sep.frobenius_bijective {
            Some(b) => println!("frobenius bijective: {b}"),
            None => println!("frobenius bijective: not applicable"),
        }
        println!("associativity on 500 sampled triples: {}", if assoc.is_none() { "ok" } else { "VIOLATED" });
    }
    Ok(if assoc.is_none() { 0 } else { 1 })
}

fn random(n: usize, p: u32, gens: usize, count: u64, out: Option<PathBuf>, c: Common) -> Result<i32, Failure> {
    if !(1..=4).contains(&n) {
        return Err(Failure(format!("--n must be between 1 and 4, got {n}")));
    }
    if let Some(dir) = &out {
        std::fs::create_dir_all(dir)?;
    }
    for k in 0..count {
        let seed = c.seed + k;
        let g: AnyAlgebra = match p {
            2 => random_gl_subalgebra::<F2>(n, gens, seed).algebra.into(),
            3 => random_gl_subalgebra::<F3>(n, gens, seed).algebra.into(),
            5 => random_gl_subalgebra::<F5>(n, gens, seed).algebra.into(),
            7 => random_gl_subalgebra::<F7>(n, gens, seed).algebra.into(),
            _ => return Err(Failure(format!("--p must be 2, 3, 5 or 7, got {p}"))),
        };
        match &out {
            Some(dir) => {
                let path = dir.join(format!("{}.json", g.name()));
                io::save(&g, &path)?;
                println!("{}", path.display());
            }
            None if c.json => println!("{}", serde_json::to_string(&serde_json::from_str::<serde_json::Value>(&io::to_json_string(&g))?)?),
            None => println!("{}", io::to_json_string(&g)),
        }
    }
    Ok(0)
}
