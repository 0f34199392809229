//! Command-line surface over the twisted bar engine.
//!
//! Each invocation builds one [`report::Report`] and prints it once at the
//! end, as text lines or, with `--json`, as a single JSON document whose
//! bytes are identical across runs with identical inputs.
//!
//! Exit codes: 0 pass, 1 verification failure, 2 malformed input,
//! 3 infeasible without `--force`, 4 unsupported input class.

mod report;

use clap::{Args, Parser, Subcommand, ValueEnum};
use report::{Report, Status};
use serde_json::{json, Value};
use sigmabar::cert::Certificate;
use sigmabar::error::Error;
use sigmabar::homology::oracle::{
    bar_cyclic_homology, bar_symmetric_group_3_homology, orbit_fixed_expectation,
    snf_random_cross_check,
};
use sigmabar::homology::{normalized_chains, compare_homology, AbelianGroup};
use sigmabar::monoid::{self, MonoidError, TwistedMonoid};
use sigmabar::operad::{self, EquivarianceCertificate};
use sigmabar::ordinal;
use sigmabar::simplicial::diagonal::{compare_diagonals, DiagonalBar};
use sigmabar::simplicial::maps::{eta, eta_corrupted, verify_simplicial_map, MapCertificate};
use sigmabar::simplicial::table::circle;
use sigmabar::simplicial::verify::{
    verify_conjugate_law, verify_symmetric_fixed_closure, verify_twisted_axioms,
};
use sigmabar::simplicial::{path_components, BarSigma, FixedBar, SimplicialSet, TwoSidedBar};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

/// Feasibility cap: largest level cardinality enumerated without `--force`.
const LEVEL_CAP: u64 = 1_000_000;

#[derive(Parser)]
#[command(
    name = "sigmabar",
    version,
    about = "Exact engine for twisted bar constructions over finite monoids with anti-involution",
    after_help = "Exit codes: 0 pass, 1 verification failure, 2 malformed input, \
3 infeasible without --force, 4 unsupported input class."
)]
struct Cli {
    /// Emit the report as a single JSON document on stdout.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a monoid description: table shapes, unit, associativity, and
    /// the anti-involution law tau(xy) = tau(y) tau(x).
    Validate(MonoidArgs),

    /// Integral homology of a construction over a monoid, degree by degree.
    Homology {
        #[command(flatten)]
        monoid: MonoidArgs,
        /// Simplicial construction to build over the monoid.
        #[arg(long, value_enum)]
        construction: Construction,
        /// Highest degree to report; the complex is truncated one level higher.
        #[arg(long)]
        max_degree: u64,
        /// Run even when a level exceeds the feasibility cap of 1000000 simplices.
        #[arg(long)]
        force: bool,
    },

    /// Verify the levelwise identification of involution-fixed bar simplices
    /// with the two-sided bar construction over the fixed points.
    EtaCheck {
        #[command(flatten)]
        monoid: MonoidArgs,
        /// Highest level swept.
        #[arg(long)]
        max_level: u64,
        /// Corrupt the map first; the sweep must then fail (negative control).
        #[arg(long)]
        corrupt: bool,
        /// Run even when a level exceeds the feasibility cap of 1000000 simplices.
        #[arg(long)]
        force: bool,
    },

    /// Verify operad composition laws: block-sum equivariance at the requested
    /// bounds, plus associativity capped at arity 2 and degree 2.
    OperadCheck {
        /// Highest operation arity swept (at least 1).
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_arity: u64,
        /// Highest block degree swept (at least 1).
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_degree: u64,
    },

    /// Compare first bar homology against the universal abelian group of a
    /// commutative monoid.
    GroupCompletion {
        #[command(flatten)]
        monoid: MonoidArgs,
        /// Highest degree to report; the verdict always compares degree 1.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        max_degree: u64,
        /// Run even when a level exceeds the feasibility cap of 1000000 simplices.
        #[arg(long)]
        force: bool,
    },

    /// Compare the two operator orders of the diagonal double bar of a
    /// commutative monoid.
    CompareDeloop {
        #[command(flatten)]
        monoid: MonoidArgs,
        /// Highest level swept.
        #[arg(long, default_value_t = 3)]
        max_level: u64,
        /// Run even when a level exceeds the feasibility cap of 1000000 simplices.
        #[arg(long)]
        force: bool,
    },

    /// Run the full verification suite at desk scale.
    Selftest {
        /// Seed for the randomized Smith-form cross-checks.
        #[arg(long, default_value_t = 24601)]
        seed: u64,
        /// Print per-suite timings (text output only; never in JSON).
        #[arg(long)]
        verbose: bool,
    },
}

#[derive(Args)]
struct MonoidArgs {
    /// Monoid description file (JSON).
    #[arg(value_name = "MONOID_FILE", conflicts_with = "builtin")]
    file: Option<PathBuf>,

    /// Built-in monoid instead of a file.
    #[arg(long, value_enum)]
    builtin: Option<Builtin>,
}

#[derive(ValueEnum, Clone, Copy)]
enum Builtin {
    C2,
    C3,
    C4,
    C2xc2,
    S3,
    Boolean,
    Min3,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum Construction {
    /// Bar construction with the reversal involution.
    Bar,
    /// Involution-fixed subcomplex of the edgewise subdivision of the bar.
    Fixed,
    /// Two-sided bar construction over the involution-fixed points.
    TwoSided,
}

impl Construction {
    fn as_str(self) -> &'static str {
        match self {
            Construction::Bar => "bar",
            Construction::Fixed => "fixed",
            Construction::TwoSided => "two-sided",
        }
    }
}

/// Early command termination. `Invalid` means the input parsed but fails the
/// monoid axioms: the report lists the violations and the run exits 1 like
/// any other verification failure. The other variants map onto exit codes
/// 2, 3, 4, and 1 (internal) with status `error`.
enum Abort {
    Malformed(String),
    Invalid(Vec<String>),
    Infeasible(String),
    Unsupported(String),
    Internal(String),
}

impl Abort {
    fn code(&self) -> u8 {
        match self {
            Abort::Malformed(_) => 2,
            Abort::Invalid(_) => 1,
            Abort::Infeasible(_) => 3,
            Abort::Unsupported(_) => 4,
            Abort::Internal(_) => 1,
        }
    }

    fn message(&self) -> String {
        match self {
            Abort::Malformed(m) => m.clone(),
            Abort::Invalid(v) => v.join("; "),
            Abort::Infeasible(m) => m.clone(),
            Abort::Unsupported(m) => m.clone(),
            Abort::Internal(m) => m.clone(),
        }
    }
}

impl From<Error> for Abort {
    fn from(e: Error) -> Self {
        match e {
            Error::Unsupported(m) => Abort::Unsupported(m),
            other => Abort::Internal(other.to_string()),
        }
    }
}

impl From<MonoidError> for Abort {
    fn from(e: MonoidError) -> Self {
        match e {
            MonoidError::Axioms(violations) => {
                Abort::Invalid(violations.iter().map(|v| v.to_string()).collect())
            }
            other => Abort::Malformed(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut report = Report::new(command_name(&cli.command));
    let outcome = dispatch(cli.command, &mut report);
    let code = finish(outcome, &mut report);
    let rendered = if cli.json { report.to_json() } else { report.to_text() };
    print!("{rendered}");
    ExitCode::from(code)
}

fn command_name(command: &Command) -> &'static str {
    match command {
        Command::Validate(_) => "validate",
        Command::Homology { .. } => "homology",
        Command::EtaCheck { .. } => "eta-check",
        Command::OperadCheck { .. } => "operad-check",
        Command::GroupCompletion { .. } => "group-completion",
        Command::CompareDeloop { .. } => "compare-deloop",
        Command::Selftest { .. } => "selftest",
    }
}

fn dispatch(command: Command, report: &mut Report) -> Result<(), Abort> {
    match command {
        Command::Validate(monoid) => run_validate(&monoid, report),
        Command::Homology { monoid, construction, max_degree, force } => {
            run_homology(&monoid, construction, max_degree as usize, force, report)
        }
        Command::EtaCheck { monoid, max_level, corrupt, force } => {
            run_eta_check(&monoid, max_level as usize, corrupt, force, report)
        }
        Command::OperadCheck { max_arity, max_degree } => {
            run_operad_check(max_arity as usize, max_degree as usize, report)
        }
        Command::GroupCompletion { monoid, max_degree, force } => {
            run_group_completion(&monoid, max_degree as usize, force, report)
        }
        Command::CompareDeloop { monoid, max_level, force } => {
            run_compare_deloop(&monoid, max_level as usize, force, report)
        }
        Command::Selftest { seed, verbose } => run_selftest(seed, verbose, report),
    }
}

fn finish(outcome: Result<(), Abort>, report: &mut Report) -> u8 {
    match outcome {
        Ok(()) => match report.status() {
            Status::Pass => 0,
            Status::Fail | Status::Error => 1,
        },
        Err(abort) => {
            match &abort {
                Abort::Invalid(violations) => {
                    report.set_status(Status::Fail);
                    for v in violations {
                        report.line(format!("violation: {v}"));
                    }
                    report.result_silent("axiom_violations", violations.clone());
                }
                other => {
                    report.set_status(Status::Error);
                    report.result("error", other.message());
                }
            }
            abort.code()
        }
    }
}

fn builtin_monoid(which: Builtin) -> TwistedMonoid {
    let built = match which {
        Builtin::C2 => monoid::cyclic_group(2),
        Builtin::C3 => monoid::cyclic_group(3),
        Builtin::C4 => monoid::cyclic_group(4),
        Builtin::C2xc2 => {
            let c2 = monoid::cyclic_group(2).expect("builtin tables are valid");
            monoid::direct_product(&c2, &c2)
        }
        Builtin::S3 => monoid::symmetric_group_3(),
        Builtin::Boolean => monoid::boolean_monoid(),
        Builtin::Min3 => monoid::min_monoid(3),
    };
    built.expect("builtin tables are valid")
}

fn resolve_monoid(args: &MonoidArgs, report: &mut Report) -> Result<TwistedMonoid, Abort> {
    match (&args.file, args.builtin) {
        (None, None) => Err(Abort::Malformed(
            "no monoid given: pass a JSON file or --builtin".to_string(),
        )),
        (Some(_), Some(_)) => Err(Abort::Malformed(
            "give either a monoid file or --builtin, not both".to_string(),
        )),
        (None, Some(which)) => {
            let m = builtin_monoid(which);
            report.input("monoid", m.label());
            report.input("source", "builtin");
            Ok(m)
        }
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Abort::Malformed(format!("cannot read {}: {e}", path.display())))?;
            let label = path
                .file_stem()
                .and_then(|s| s.to_str())
                .unwrap_or("monoid")
                .to_string();
            let m = monoid::from_json_str(&label, &text)?;
            report.input("monoid", m.label());
            report.input("source", path.display().to_string());
            Ok(m)
        }
    }
}

/// Refuses enumeration when any level through `top` is over the cap, unless
/// forced. Levels whose cardinality overflows u64 always count as over.
fn guard_levels<S: SimplicialSet + ?Sized>(
    s: &S,
    top: usize,
    force: bool,
    report: &mut Report,
) -> Result<(), Abort> {
    for n in 0..=top {
        let size = s.level_size(n);
        if matches!(size, Some(sz) if sz <= LEVEL_CAP) {
            continue;
        }
        let rendered = size.map_or_else(|| "more than u64 holds".to_string(), |v| v.to_string());
        if force {
            report.line(format!(
                "note: level {n} holds {rendered} simplices, over the {LEVEL_CAP} cap; \
continuing under --force"
            ));
            report.result_silent("forced", true);
            return Ok(());
        }
        return Err(Abort::Infeasible(format!(
            "level {n} of {} holds {rendered} simplices, over the {LEVEL_CAP} cap; \
rerun with --force to proceed",
            s.label()
        )));
    }
    Ok(())
}

fn record_level_sizes<S: SimplicialSet + ?Sized>(s: &S, report: &mut Report) {
    report.result("truncation", s.truncation() as u64);
    let mut sizes = Vec::new();
    let mut rendered = Vec::new();
    for n in 0..=s.truncation() {
        match s.level_size(n) {
            Some(v) => {
                sizes.push(Value::from(v));
                rendered.push(v.to_string());
            }
            None => {
                sizes.push(Value::Null);
                rendered.push("overflow".to_string());
            }
        }
    }
    report.result_silent("level_sizes", sizes);
    report.line(format!("level sizes: {}", rendered.join(", ")));
}

fn record_homology(groups: &[AbelianGroup], report: &mut Report) {
    let mut table = Vec::new();
    for (k, g) in groups.iter().enumerate() {
        report.line(format!("H_{k} = {g}"));
        table.push(json!({
            "degree": k,
            "group": g.to_string(),
            "free_rank": g.free_rank(),
            "torsion": g.torsion().iter().map(|d| d.to_string()).collect::<Vec<_>>(),
        }));
    }
    report.result_silent("homology", table);
}

fn certificate_json(c: &Certificate) -> Value {
    serde_json::to_value(c).expect("certificate serializes")
}

fn map_certificate_json(c: &MapCertificate) -> Value {
    json!({
        "label": c.label,
        "level_sizes": c.level_sizes.iter().map(|(s, t)| json!([s, t])).collect::<Vec<_>>(),
        "cases": c.cases,
        "counterexample": c.counterexample,
    })
}

fn run_validate(args: &MonoidArgs, report: &mut Report) -> Result<(), Abort> {
    let m = resolve_monoid(args, report)?;
    report.result("label", m.label());
    report.result("size", m.size() as u64);
    report.result("unit", m.name(m.unit()));
    report.result("commutative", m.is_commutative());
    report.result("group", m.is_group());
    let fixed: Vec<String> = m
        .fixed_points()
        .members()
        .iter()
        .map(|&a| m.name(a).to_string())
        .collect();
    report.line(format!("involution-fixed elements: {}", fixed.join(", ")));
    report.result_silent("fixed_points", fixed);
    report.line("all monoid and anti-involution axioms hold");
    Ok(())
}

fn run_homology(
    args: &MonoidArgs,
    construction: Construction,
    max_degree: usize,
    force: bool,
    report: &mut Report,
) -> Result<(), Abort> {
    let m = resolve_monoid(args, report)?;
    report.input("construction", construction.as_str());
    report.input("max_degree", max_degree as u64);
    report.input("force", force);
    let truncation = max_degree + 1;
    let complex: Box<dyn SimplicialSet> = match construction {
        Construction::Bar => Box::new(BarSigma::new(m.clone(), truncation)),
        Construction::Fixed => Box::new(FixedBar::new(m.clone(), truncation)),
        Construction::TwoSided => Box::new(TwoSidedBar::new(m.clone(), truncation)),
    };
    report.result("complex", complex.label());
    guard_levels(complex.as_ref(), truncation, force, report)?;
    record_level_sizes(complex.as_ref(), report);
    let chains = normalized_chains(complex.as_ref(), truncation)?;
    let groups = chains.homology_through(max_degree)?;
    record_homology(&groups, report);
    if construction != Construction::Bar {
        let pi0 = path_components(complex.as_ref())?;
        report.result("pi0", pi0 as u64);
    }
    Ok(())
}

fn run_eta_check(
    args: &MonoidArgs,
    max_level: usize,
    corrupt: bool,
    force: bool,
    report: &mut Report,
) -> Result<(), Abort> {
    let m = resolve_monoid(args, report)?;
    report.input("max_level", max_level as u64);
    report.input("corrupt", corrupt);
    report.input("force", force);
    let fixed = FixedBar::new(m.clone(), max_level);
    let two_sided = TwoSidedBar::new(m, max_level);
    guard_levels(&fixed, max_level, force, report)?;
    report.result("truncation", max_level as u64);
    let map = if corrupt {
        eta_corrupted(&fixed, &two_sided)?
    } else {
        eta(&fixed, &two_sided)?
    };
    let cert = verify_simplicial_map(&map, max_level)?;
    for (n, (src, tgt)) in cert.level_sizes.iter().enumerate() {
        report.line(format!("level {n}: {src} fixed simplices vs {tgt} two-sided simplices"));
    }
    report.line(cert.to_string());
    report.result_silent("certificate", map_certificate_json(&cert));
    if !cert.passed() {
        report.set_status(Status::Fail);
    }
    Ok(())
}

fn run_operad_check(
    max_arity: usize,
    max_degree: usize,
    report: &mut Report,
) -> Result<(), Abort> {
    report.input("max_arity", max_arity as u64);
    report.input("max_degree", max_degree as u64);
    let equivariance = operad::verify_equivariance(max_arity, max_degree);
    report.line(equivariance.to_string());
    report.result_silent(
        "equivariance",
        serde_json::to_value(&equivariance).expect("certificate serializes"),
    );
    let assoc_arity = max_arity.min(2);
    let assoc_degree = max_degree.min(2);
    let associativity = operad::verify_associativity(assoc_arity, assoc_degree);
    report.line(associativity.to_string());
    report.result_silent("associativity_bounds", vec![assoc_arity as u64, assoc_degree as u64]);
    report.result_silent("associativity", certificate_json(&associativity));
    if !equivariance.passed() || !associativity.passed() {
        report.set_status(Status::Fail);
    }
    Ok(())
}

fn run_group_completion(
    args: &MonoidArgs,
    max_degree: usize,
    force: bool,
    report: &mut Report,
) -> Result<(), Abort> {
    let m = resolve_monoid(args, report)?;
    report.input("max_degree", max_degree as u64);
    report.input("force", force);
    if !m.is_commutative() {
        return Err(Abort::Unsupported(format!(
            "{} is not commutative; group completion compares against the universal \
abelian group, which needs a commutative monoid",
            m.label()
        )));
    }
    let truncation = max_degree + 1;
    let bar = BarSigma::new(m.clone(), truncation);
    guard_levels(&bar, truncation, force, report)?;
    record_level_sizes(&bar, report);
    let chains = normalized_chains(&bar, truncation)?;
    let groups = chains.homology_through(max_degree)?;
    record_homology(&groups, report);
    let completion = m.grothendieck_group()?;
    report.line(format!("K(A) = {completion}"));
    report.result_silent("group_completion", completion.to_json());
    let matches = groups[1] == completion;
    report.line(format!(
        "H_1 = {} vs K(A) = {completion}: {}",
        groups[1],
        if matches { "match" } else { "MISMATCH" }
    ));
    report.result("match", matches);
    if !matches {
        report.set_status(Status::Fail);
    }
    Ok(())
}

fn run_compare_deloop(
    args: &MonoidArgs,
    max_level: usize,
    force: bool,
    report: &mut Report,
) -> Result<(), Abort> {
    let m = resolve_monoid(args, report)?;
    report.input("max_level", max_level as u64);
    report.input("force", force);
    if !m.is_commutative() {
        return Err(Abort::Unsupported(format!(
            "{} is not commutative; the two diagonal operator orders only both \
exist over a commutative monoid",
            m.label()
        )));
    }
    let probe = DiagonalBar::new(m.clone(), max_level, true)?;
    guard_levels(&probe, max_level, force, report)?;
    report.result("truncation", max_level as u64);
    let cert = compare_diagonals(&m, max_level)?;
    report.line(cert.to_string());
    report.result_silent("certificate", certificate_json(&cert));
    if !cert.passed() {
        report.set_status(Status::Fail);
    }
    Ok(())
}

struct Suite {
    name: &'static str,
    run: Box<dyn FnOnce() -> Result<Certificate, Error>>,
}

impl Suite {
    fn new(name: &'static str, run: impl FnOnce() -> Result<Certificate, Error> + 'static) -> Self {
        Suite { name, run: Box::new(run) }
    }
}

/// Folds a sequence of certificates under one label, keeping the combined
/// case count and the first counterexample.
fn fold_certs(
    label: &str,
    parts: impl IntoIterator<Item = Result<Certificate, Error>>,
) -> Result<Certificate, Error> {
    let mut cases = 0u64;
    for part in parts {
        let part = part?;
        cases += part.cases;
        if !part.passed() {
            return Ok(Certificate::new(label, cases, part.counterexample));
        }
    }
    Ok(Certificate::new(label, cases, None))
}

fn full_corpus() -> Vec<TwistedMonoid> {
    [
        Builtin::C2,
        Builtin::C3,
        Builtin::C4,
        Builtin::C2xc2,
        Builtin::S3,
        Builtin::Boolean,
        Builtin::Min3,
    ]
    .into_iter()
    .map(builtin_monoid)
    .collect()
}

fn eta_corpus() -> Vec<TwistedMonoid> {
    [Builtin::C2, Builtin::C4, Builtin::S3, Builtin::Boolean]
        .into_iter()
        .map(builtin_monoid)
        .collect()
}

fn commutative_corpus() -> Vec<TwistedMonoid> {
    [Builtin::Boolean, Builtin::Min3, Builtin::C2, Builtin::C3, Builtin::C4, Builtin::C2xc2]
        .into_iter()
        .map(builtin_monoid)
        .collect()
}

fn selftest_suites(seed: u64) -> Vec<Suite> {
    vec![
        Suite::new("ordinal factorization", || {
            Ok(ordinal::verify_factorization(4, 4))
        }),
        Suite::new("ordinal double bijection", || {
            Ok(ordinal::verify_double_bijection(4, 4))
        }),
        Suite::new("ordinal double functoriality", || {
            Ok(ordinal::verify_double_functorial(3))
        }),
        Suite::new("ordinal zero elimination", || {
            Ok(ordinal::verify_zero_elimination(5))
        }),
        Suite::new("operad equivariance", || {
            let c = operad::verify_equivariance(3, 3);
            Ok(equivariance_to_certificate(&c))
        }),
        Suite::new("operad associativity", || {
            Ok(operad::verify_associativity(2, 2))
        }),
        Suite::new("operad algebra action", || {
            Ok(operad::verify_algebra_equivariance(
                &builtin_monoid(Builtin::S3),
                3,
            ))
        }),
        Suite::new("twisted simplicial axioms", || {
            fold_certs(
                "twisted axioms, builtin corpus through level 4",
                full_corpus().into_iter().map(|m| {
                    let bar = BarSigma::new(m, 4);
                    verify_twisted_axioms(&bar, 4)
                }),
            )
        }),
        Suite::new("circle complex", || {
            let s = circle(4)?;
            let axioms = verify_twisted_axioms(&s, 4)?;
            if !axioms.passed() {
                return Ok(Certificate::new("circle complex", axioms.cases, axioms.counterexample));
            }
            let h = normalized_chains(&s, 3)?.homology_through(2)?;
            let expected = [AbelianGroup::free(1), AbelianGroup::free(1), AbelianGroup::free(0)];
            for (k, want) in expected.iter().enumerate() {
                if &h[k] != want {
                    return Ok(Certificate::new(
                        "circle complex",
                        axioms.cases + k as u64 + 1,
                        Some(format!("H_{k} of the circle is {} not {want}", h[k])),
                    ));
                }
            }
            Ok(Certificate::new("circle complex", axioms.cases + 3, None))
        }),
        Suite::new("fixed-point identification", || {
            fold_certs(
                "eta through level 4",
                eta_corpus().into_iter().map(|m| {
                    let fixed = FixedBar::new(m.clone(), 4);
                    let two_sided = TwoSidedBar::new(m, 4);
                    let map = eta(&fixed, &two_sided)?;
                    let c = verify_simplicial_map(&map, 4)?;
                    Ok(Certificate::new(c.label, c.cases, c.counterexample))
                }),
            )
        }),
        Suite::new("fixed vs two-sided homology", || {
            fold_certs(
                "homology comparison through degree 2",
                eta_corpus().into_iter().map(|m| {
                    let fixed = FixedBar::new(m.clone(), 3);
                    let two_sided = TwoSidedBar::new(m, 3);
                    compare_homology(&fixed, &two_sided, 2)
                }),
            )
        }),
        Suite::new("fixed homology vs orbit model", || {
            let mut cases = 0u64;
            for m in [builtin_monoid(Builtin::S3), builtin_monoid(Builtin::C4)] {
                let expect = orbit_fixed_expectation(&m)?;
                let fixed = FixedBar::new(m.clone(), 2);
                let h = normalized_chains(&fixed, 2)?.homology_through(1)?;
                cases += 2;
                if h[0] != AbelianGroup::free(expect.orbit_count) {
                    return Ok(Certificate::new(
                        "fixed homology vs orbit model",
                        cases,
                        Some(format!(
                            "H_0 of the {} fixed complex is {} but the orbit count is {}",
                            m.label(),
                            h[0],
                            expect.orbit_count
                        )),
                    ));
                }
                if h[1] != expect.h1 {
                    return Ok(Certificate::new(
                        "fixed homology vs orbit model",
                        cases,
                        Some(format!(
                            "H_1 of the {} fixed complex is {} but the orbit model gives {}",
                            m.label(),
                            h[1],
                            expect.h1
                        )),
                    ));
                }
            }
            Ok(Certificate::new("fixed homology vs orbit model", cases, None))
        }),
        Suite::new("group completion", || {
            let mut cases = 0u64;
            for m in commutative_corpus() {
                let bar = BarSigma::new(m.clone(), 2);
                let h = normalized_chains(&bar, 2)?.homology_through(1)?;
                let completion = m.grothendieck_group()?;
                cases += 1;
                if h[1] != completion {
                    return Ok(Certificate::new(
                        "group completion",
                        cases,
                        Some(format!(
                            "H_1(bar({})) = {} but the group completion is {completion}",
                            m.label(),
                            h[1]
                        )),
                    ));
                }
            }
            Ok(Certificate::new("group completion", cases, None))
        }),
        Suite::new("cyclic bar homology", || {
            let mut cases = 0u64;
            for k in [2usize, 3, 4] {
                let m = monoid::cyclic_group(k).expect("builtin tables are valid");
                let bar = BarSigma::new(m, 4);
                let h = normalized_chains(&bar, 4)?.homology_through(3)?;
                for (degree, got) in h.iter().enumerate() {
                    let want = bar_cyclic_homology(k, degree);
                    cases += 1;
                    if *got != want {
                        return Ok(Certificate::new(
                            "cyclic bar homology",
                            cases,
                            Some(format!("H_{degree}(bar(c{k})) = {got} not {want}")),
                        ));
                    }
                }
            }
            Ok(Certificate::new("cyclic bar homology", cases, None))
        }),
        Suite::new("symmetric group bar homology", || {
            let bar = BarSigma::new(builtin_monoid(Builtin::S3), 4);
            let h = normalized_chains(&bar, 4)?.homology_through(3)?;
            let mut cases = 0u64;
            for (degree, got) in h.iter().enumerate() {
                let want = bar_symmetric_group_3_homology(degree)
                    .expect("table covers degrees 0 through 3");
                cases += 1;
                if *got != want {
                    return Ok(Certificate::new(
                        "symmetric group bar homology",
                        cases,
                        Some(format!("H_{degree}(bar(s3)) = {got} not {want}")),
                    ));
                }
            }
            Ok(Certificate::new("symmetric group bar homology", cases, None))
        }),
        Suite::new("diagonal operator orders", || {
            fold_certs(
                "diagonal orders through level 3",
                [builtin_monoid(Builtin::C2), builtin_monoid(Builtin::C3)]
                    .into_iter()
                    .map(|m| compare_diagonals(&m, 3)),
            )
        }),
        Suite::new("symmetric maps fix the fixed set", || {
            fold_certs(
                "symmetric closure",
                [
                    (builtin_monoid(Builtin::C2), 5),
                    (builtin_monoid(Builtin::S3), 3),
                ]
                .into_iter()
                .map(|(m, top)| verify_symmetric_fixed_closure(&m, top)),
            )
        }),
        Suite::new("conjugate ordinal action", || {
            fold_certs(
                "conjugate law on bars",
                [builtin_monoid(Builtin::C2), builtin_monoid(Builtin::S3)]
                    .into_iter()
                    .map(|m| {
                        let bar = BarSigma::new(m, 3);
                        verify_conjugate_law(&bar, 3, 3)
                    }),
            )
        }),
        Suite::new("smith form cross-check", move || {
            Ok(snf_random_cross_check(100, seed))
        }),
        Suite::new("monoid json round trip", || {
            let mut cases = 0u64;
            for m in full_corpus() {
                let text = m.to_json_string();
                let back = monoid::from_json_str(m.label(), &text)
                    .map_err(|e| Error::domain(format!("round trip of {}: {e}", m.label())))?;
                cases += 1;
                if back != m {
                    return Ok(Certificate::new(
                        "monoid json round trip",
                        cases,
                        Some(format!("{} does not survive serialization", m.label())),
                    ));
                }
            }
            Ok(Certificate::new("monoid json round trip", cases, None))
        }),
    ]
}

fn equivariance_to_certificate(c: &EquivarianceCertificate) -> Certificate {
    Certificate::new(
        format!(
            "operad equivariance, arity <= {}, degrees <= {}",
            c.max_arity, c.max_block_degree
        ),
        c.cases,
        c.counterexample.clone(),
    )
}

fn run_selftest(seed: u64, verbose: bool, report: &mut Report) -> Result<(), Abort> {
    report.input("seed", seed);
    let total = Instant::now();
    let mut entries = Vec::new();
    let mut all_passed = true;
    let suites = selftest_suites(seed);
    let count = suites.len();
    for suite in suites {
        let started = Instant::now();
        let cert = (suite.run)()
            .map_err(|e| Abort::Internal(format!("suite '{}' failed to run: {e}", suite.name)))?;
        let elapsed = started.elapsed().as_millis();
        let passed = cert.passed();
        all_passed &= passed;
        let mut line = match &cert.counterexample {
            None => format!("ok   {} ({} cases)", suite.name, cert.cases),
            Some(c) => format!("FAIL {} after {} cases: {c}", suite.name, cert.cases),
        };
        if verbose {
            line.push_str(&format!("  [{elapsed} ms]"));
        }
        report.line(line);
        entries.push(json!({
            "name": suite.name,
            "cases": cert.cases,
            "passed": passed,
            "counterexample": cert.counterexample,
        }));
    }
    report.result_silent("suites", entries);
    report.line(format!(
        "total: {count} suites in {:.1} s",
        total.elapsed().as_secs_f64()
    ));
    if !all_passed {
        report.set_status(Status::Fail);
    }
    Ok(())
}
