//! Command-line surface: analyses, verification, potential construction,
//! discovery, integration, the built-in catalog, and a seeded self-test.
//!
//! Exit codes: 0 success, 1 verification failure, 2 parse/usage error,
//! 3 numeric failure (pole, non-finite state).

use crate::analysis::{
    divergence, field_from_one_form, find_polynomial_integrals, gradient, nambu_bracket,
    nambu_field, search_monomial_multiplier, VecField,
};
use crate::catalog;
use crate::exterior::{exterior_derivative, homotopy_operator, homotopy_potential, DiffForm};
use crate::numeric::{invariant_drift, rk4_integrate, DriftReport};
use crate::parser::{parse_expression, parse_system, render, render_laurent, SystemDef};
use crate::report::{analyze, verify, Classification};
use crate::sample;
use crate::symbolic::VARS;
use clap::{Parser, Subcommand, ValueEnum};
use rand::Rng;
use serde::Serialize;
use std::fmt::Write as _;
use std::io::Write;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;

const MAX_SEARCH_BOUND: u32 = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(
    name = "curlflow",
    about = "Exact analysis of 3D flows generated by curls of vector potentials",
    version
)]
struct Cli {
    /// Output format for reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full structural analysis of a system file or catalog entry.
    Analyze {
        system: String,
        /// Maximum total degree of the integral ansatz (≤ 6).
        #[arg(long, default_value_t = 3)]
        dmax: u32,
        /// Exponent bound of the monomial multiplier scan (≤ 6).
        #[arg(long, default_value_t = 2)]
        bound: u32,
    },
    /// Check only the declared integrals/multiplier/potential; exit 0
    /// iff all pass.
    Verify { system: String },
    /// Construct the Hamiltonian one-form via the homotopy operator and
    /// print the vector Hamiltonian equations.
    Potential { system: String },
    /// Exhaustive first-integral and multiplier search.
    Discover {
        system: String,
        #[arg(long, default_value_t = 3)]
        dmax: u32,
        /// Include ln(x_i) terms in the ansatz.
        #[arg(long)]
        logs: bool,
        #[arg(long, default_value_t = 2)]
        bound: u32,
    },
    /// Integrate the flow and report the drift of each declared
    /// integral.
    Integrate {
        system: String,
        /// Initial condition as three comma-separated reals.
        #[arg(long, default_value = "1,1,1")]
        x0: String,
        /// Final time.
        #[arg(long, default_value_t = 0.5)]
        t: f64,
        /// Fixed step size.
        #[arg(long, default_value_t = 1e-3)]
        dt: f64,
    },
    /// Built-in catalog of reference systems.
    Examples {
        #[command(subcommand)]
        action: ExamplesAction,
    },
    /// Seeded randomized property checks of the symbolic kernel.
    Selftest {
        #[arg(long, default_value_t = 20260809)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
enum ExamplesAction {
    /// List catalog entry names.
    List,
    /// Print the system file of one entry.
    Show { name: String },
    /// Analyze and verify every entry against its expected profile.
    RunAll,
}

/// Runs the CLI with explicit arguments, writing all output to `out`.
/// Returns the process exit code.
pub fn run<I, T, W>(args: I, out: &mut W) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
    W: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = write!(out, "{e}");
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(CliError { message, code }) => {
            let _ = writeln!(out, "error: {message}");
            code
        }
    }
}

struct CliError {
    message: String,
    code: i32,
}

fn usage(message: impl Into<String>) -> CliError {
    CliError {
        message: message.into(),
        code: EXIT_USAGE,
    }
}

/// Resolves a system argument: an exact catalog name first, a path
/// otherwise.
fn load_system(arg: &str) -> Result<SystemDef, CliError> {
    if let Some(def) = catalog::system(arg) {
        return Ok(def);
    }
    let src = std::fs::read_to_string(arg)
        .map_err(|e| usage(format!("cannot read '{arg}': {e} (and no catalog entry matches)")))?;
    parse_system(&src).map_err(|e| usage(format!("{arg}: {e}")))
}

fn check_bound(name: &str, value: u32) -> Result<(), CliError> {
    if value == 0 || value > MAX_SEARCH_BOUND {
        return Err(usage(format!(
            "--{name} must be between 1 and {MAX_SEARCH_BOUND}"
        )));
    }
    Ok(())
}

fn emit<W: Write, T: Serialize>(
    out: &mut W,
    format: Format,
    value: &T,
    text: &str,
) -> Result<(), CliError> {
    match format {
        Format::Text => {
            let _ = write!(out, "{text}");
        }
        Format::Json => {
            let json = serde_json::to_string_pretty(value).expect("reports serialize");
            let _ = writeln!(out, "{json}");
        }
    }
    Ok(())
}

fn dispatch<W: Write>(cli: Cli, out: &mut W) -> Result<i32, CliError> {
    match cli.command {
        Command::Analyze {
            system,
            dmax,
            bound,
        } => {
            check_bound("dmax", dmax)?;
            check_bound("bound", bound)?;
            let def = load_system(&system)?;
            let report = analyze(&def, dmax, bound);
            emit(out, cli.format, &report, &report.to_text())?;
            Ok(EXIT_OK)
        }
        Command::Verify { system } => {
            let def = load_system(&system)?;
            let report = verify(&def);
            emit(out, cli.format, &report, &report.to_text())?;
            Ok(if report.passed {
                EXIT_OK
            } else {
                EXIT_VERIFY_FAILED
            })
        }
        Command::Potential { system } => {
            let def = load_system(&system)?;
            let report = potential_report(&def);
            let ok = report.eta.is_some();
            emit(out, cli.format, &report, &report.to_text())?;
            Ok(if ok { EXIT_OK } else { EXIT_VERIFY_FAILED })
        }
        Command::Discover {
            system,
            dmax,
            logs,
            bound,
        } => {
            check_bound("dmax", dmax)?;
            check_bound("bound", bound)?;
            let def = load_system(&system)?;
            let report = discover_report(&def, dmax, logs, bound);
            emit(out, cli.format, &report, &report.to_text())?;
            Ok(EXIT_OK)
        }
        Command::Integrate { system, x0, t, dt } => {
            let def = load_system(&system)?;
            let x0 = parse_x0(&x0)?;
            if !(t > 0.0) || !(dt > 0.0) {
                return Err(usage("--t and --dt must be positive"));
            }
            let (report, code) = integrate_report(&def, x0, t, dt);
            emit(out, cli.format, &report, &report.to_text())?;
            Ok(code)
        }
        Command::Examples { action } => match action {
            ExamplesAction::List => {
                let names: Vec<&str> = catalog::ENTRIES.iter().map(|e| e.name).collect();
                emit(out, cli.format, &names, &(names.join("\n") + "\n"))?;
                Ok(EXIT_OK)
            }
            ExamplesAction::Show { name } => {
                let entry = catalog::entry(&name)
                    .ok_or_else(|| usage(format!("no catalog entry named '{name}'")))?;
                let _ = write!(out, "{}", entry.source);
                Ok(EXIT_OK)
            }
            ExamplesAction::RunAll => {
                let report = run_all_report();
                let ok = report.iter().all(|r| r.ok);
                let text: String = report.iter().map(|r| r.to_text()).collect();
                emit(out, cli.format, &report, &text)?;
                Ok(if ok { EXIT_OK } else { EXIT_VERIFY_FAILED })
            }
        },
        Command::Selftest { seed } => {
            let results = selftest(seed);
            let ok = results.iter().all(|(_, ok)| *ok);
            let mut text = String::new();
            for (label, passed) in &results {
                let _ = writeln!(text, "{} {label}", if *passed { "PASS" } else { "FAIL" });
            }
            let _ = writeln!(text, "result: {}", if ok { "PASS" } else { "FAIL" });
            let as_json: Vec<_> = results
                .iter()
                .map(|(label, passed)| serde_json::json!({"check": label, "passed": passed}))
                .collect();
            emit(out, cli.format, &as_json, &text)?;
            Ok(if ok { EXIT_OK } else { EXIT_VERIFY_FAILED })
        }
    }
}

fn parse_x0(s: &str) -> Result<[f64; VARS], CliError> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != VARS {
        return Err(usage("--x0 takes exactly three comma-separated reals"));
    }
    let mut out = [0.0; VARS];
    for (i, p) in parts.iter().enumerate() {
        out[i] = p
            .trim()
            .parse()
            .map_err(|_| usage(format!("--x0: '{p}' is not a real number")))?;
    }
    Ok(out)
}

#[derive(Debug, Serialize)]
struct PotentialReport {
    system: String,
    flux_closed: bool,
    polynomial: bool,
    /// Components of η when construction succeeds.
    eta: Option<[String; 3]>,
    equations: Option<[String; 3]>,
}

impl PotentialReport {
    fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "system: {}", self.system);
        if !self.flux_closed {
            let _ = writeln!(
                s,
                "i_v(Omega) is not closed (the divergence is nonzero); no potential exists"
            );
            return s;
        }
        if !self.polynomial {
            let _ = writeln!(
                s,
                "field has Laurent coefficients; the homotopy operator needs polynomial input"
            );
            return s;
        }
        let eta = self.eta.as_ref().expect("set when closed and polynomial");
        let eq = self.equations.as_ref().expect("set with eta");
        let _ = writeln!(s, "hamiltonian one-form eta (d eta = i_v(Omega)):");
        for (i, c) in eta.iter().enumerate() {
            let _ = writeln!(s, "  eta_{} = {c}", i + 1);
        }
        let _ = writeln!(s, "vector hamiltonian equations (field = curl eta):");
        for line in eq {
            let _ = writeln!(s, "  {line}");
        }
        s
    }
}

fn potential_report(def: &SystemDef) -> PotentialReport {
    let v = &def.field;
    let vars = &def.variables;
    let flux_closed = divergence(v).is_zero();
    let polynomial = v.is_polynomial();
    let mut eta = None;
    let mut equations = None;
    if flux_closed && polynomial {
        let eta_form = homotopy_potential(&DiffForm::flux(v)).expect("closed polynomial flux");
        let field = VecField::new([
            eta_form.component(0).clone(),
            eta_form.component(1).clone(),
            eta_form.component(2).clone(),
        ]);
        debug_assert_eq!(field_from_one_form(&field), *v);
        eta = Some([
            render_laurent(field.component(0), vars),
            render_laurent(field.component(1), vars),
            render_laurent(field.component(2), vars),
        ]);
        let recovered = field_from_one_form(&field);
        equations = Some(std::array::from_fn(|i| {
            format!(
                "{}' = {}",
                vars[i],
                render_laurent(recovered.component(i), vars)
            )
        }));
    }
    PotentialReport {
        system: def.name.clone(),
        flux_closed,
        polynomial,
        eta,
        equations,
    }
}

#[derive(Debug, Serialize)]
struct DiscoverReport {
    system: String,
    dmax: u32,
    with_logs: bool,
    bound: u32,
    integrals: Vec<String>,
    multipliers: Vec<String>,
}

impl DiscoverReport {
    fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "system: {}", self.system);
        if self.integrals.is_empty() {
            let _ = writeln!(
                s,
                "no first integrals of degree <= {} (logs: {})",
                self.dmax, self.with_logs
            );
        } else {
            let _ = writeln!(
                s,
                "first integrals (ansatz degree <= {}, logs: {}):",
                self.dmax, self.with_logs
            );
            for f in &self.integrals {
                let _ = writeln!(s, "  {f}");
            }
        }
        if self.multipliers.is_empty() {
            let _ = writeln!(s, "no monomial multipliers with exponents in [-{0}, {0}]", self.bound);
        } else {
            let _ = writeln!(
                s,
                "monomial multipliers (exponents in [-{0}, {0}]): {1}",
                self.bound,
                self.multipliers.join(", ")
            );
        }
        s
    }
}

fn discover_report(def: &SystemDef, dmax: u32, logs: bool, bound: u32) -> DiscoverReport {
    let vars = &def.variables;
    let integrals = find_polynomial_integrals(&def.field, dmax, logs)
        .expect("dmax validated")
        .iter()
        .map(|f| render(f, vars))
        .collect();
    let multipliers = search_monomial_multiplier(&def.field, bound)
        .expect("bound validated")
        .iter()
        .map(|m| render_laurent(m, vars))
        .collect();
    DiscoverReport {
        system: def.name.clone(),
        dmax,
        with_logs: logs,
        bound,
        integrals,
        multipliers,
    }
}

#[derive(Debug, Serialize)]
struct IntegrateReport {
    system: String,
    x0: [f64; 3],
    t_end: f64,
    dt: f64,
    states: Option<usize>,
    final_state: Option<[f64; 3]>,
    drifts: Vec<DriftReport>,
    error: Option<String>,
}

impl IntegrateReport {
    fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "system: {}", self.system);
        let _ = writeln!(
            s,
            "x0 = ({}, {}, {}), t_end = {}, dt = {}",
            self.x0[0], self.x0[1], self.x0[2], self.t_end, self.dt
        );
        if let Some(err) = &self.error {
            let _ = writeln!(s, "integration failed: {err}");
            return s;
        }
        let f = self.final_state.expect("set on success");
        let _ = writeln!(s, "states: {}", self.states.expect("set on success"));
        let _ = writeln!(s, "final state: ({:.12e}, {:.12e}, {:.12e})", f[0], f[1], f[2]);
        for d in &self.drifts {
            let _ = writeln!(
                s,
                "integral {}: initial {:.12e}, max |drift| {:.3e}, relative {:.3e}",
                d.integral_name, d.initial_value, d.max_abs_drift, d.relative_drift
            );
        }
        s
    }
}

fn integrate_report(def: &SystemDef, x0: [f64; 3], t_end: f64, dt: f64) -> (IntegrateReport, i32) {
    let vars = &def.variables;
    let mut report = IntegrateReport {
        system: def.name.clone(),
        x0,
        t_end,
        dt,
        states: None,
        final_state: None,
        drifts: Vec::new(),
        error: None,
    };
    let traj = match rk4_integrate(&def.field, x0, t_end, dt) {
        Ok(traj) => traj,
        Err(e) => {
            report.error = Some(e.to_string());
            return (report, EXIT_NUMERIC);
        }
    };
    report.states = Some(traj.len());
    report.final_state = Some(traj.final_state());
    for f in &def.integrals {
        match invariant_drift(&traj, f, &render(f, vars)) {
            Ok(d) => report.drifts.push(d),
            Err(e) => {
                report.error = Some(e.to_string());
                return (report, EXIT_NUMERIC);
            }
        }
    }
    (report, EXIT_OK)
}

#[derive(Debug, Serialize)]
struct RunAllEntry {
    name: String,
    classification: Classification,
    expected_classification: Classification,
    verify_passed: bool,
    expected_verify: bool,
    ok: bool,
}

impl RunAllEntry {
    fn to_text(&self) -> String {
        if self.ok {
            format!(
                "ok   {}: {} (verify {})\n",
                self.name,
                self.classification.as_str(),
                if self.verify_passed {
                    "passes"
                } else {
                    "fails as expected"
                }
            )
        } else {
            format!(
                "MISMATCH {}: classified {} (expected {}), verify {} (expected {})\n",
                self.name,
                self.classification.as_str(),
                self.expected_classification.as_str(),
                self.verify_passed,
                self.expected_verify
            )
        }
    }
}

fn run_all_report() -> Vec<RunAllEntry> {
    catalog::ENTRIES
        .iter()
        .map(|entry| {
            let def = parse_system(entry.source).expect("catalog files parse");
            let verify_passed = verify(&def).passed;
            let report = analyze(&def, 3, 2);
            let ok = verify_passed == entry.verify_passes
                && report.classification == entry.classification;
            RunAllEntry {
                name: entry.name.to_string(),
                classification: report.classification,
                expected_classification: entry.classification,
                verify_passed,
                expected_verify: entry.verify_passes,
                ok,
            }
        })
        .collect()
}

/// Seeded property batteries, mirrored by the test suite. Each returns a
/// label and whether every sampled instance passed.
fn selftest(seed: u64) -> Vec<(String, bool)> {
    let mut rng = sample::rng(seed);
    let vars: [String; 3] = ["x".into(), "y".into(), "z".into()];
    let mut results = Vec::new();

    let mut ring = true;
    for _ in 0..50 {
        let a = sample::laurent(&mut rng, 4, -2, 3);
        let b = sample::laurent(&mut rng, 4, -2, 3);
        let c = sample::laurent(&mut rng, 4, -2, 3);
        ring &= &(&a * &b) * &c == &a * &(&b * &c);
        ring &= &a * &(&b + &c) == &(&a * &b) + &(&a * &c);
        ring &= &a * &b == &b * &a;
    }
    results.push(("laurent ring axioms (50 samples)".to_string(), ring));

    let mut bracket = true;
    for _ in 0..100 {
        let f1 = sample::poly_logfunc(&mut rng, 3, 2);
        let f2 = sample::poly_logfunc(&mut rng, 3, 2);
        let f3 = sample::poly_logfunc(&mut rng, 3, 2);
        // Total antisymmetry: swapping two arguments flips the sign.
        let base = nambu_bracket(&f1, &f2, &f3);
        bracket &= nambu_bracket(&f2, &f1, &f3) == -&base;
        bracket &= nambu_bracket(&f1, &f3, &f2) == -&base;
        bracket &= nambu_bracket(&f1, &f1, &f3).is_zero();
    }
    results.push(("nambu bracket antisymmetry (100 samples)".to_string(), bracket));

    let mut leibniz = true;
    for _ in 0..100 {
        let f1 = sample::poly_logfunc(&mut rng, 2, 2);
        let f2 = sample::poly_logfunc(&mut rng, 2, 2);
        let f = sample::poly_logfunc(&mut rng, 2, 2);
        let h = sample::poly_logfunc(&mut rng, 2, 2);
        let fh = f.try_mul(&h).expect("log-free");
        let lhs = nambu_bracket(&f1, &f2, &fh);
        let rhs = &(&nambu_bracket(&f1, &f2, &f) * h.poly())
            + &(f.poly() * &nambu_bracket(&f1, &f2, &h));
        leibniz &= lhs == rhs;
    }
    results.push(("generalized leibniz identity (100 samples)".to_string(), leibniz));

    let mut fundamental = true;
    for _ in 0..100 {
        let f1 = sample::poly_logfunc(&mut rng, 2, 2);
        let f2 = sample::poly_logfunc(&mut rng, 2, 2);
        let h1 = sample::poly_logfunc(&mut rng, 2, 2);
        let h2 = sample::poly_logfunc(&mut rng, 2, 2);
        let h3 = sample::poly_logfunc(&mut rng, 2, 2);
        let wrap = |l: crate::symbolic::Laurent| crate::symbolic::LogFunc::from_laurent(l);
        let lhs = nambu_bracket(&f1, &f2, &wrap(nambu_bracket(&h1, &h2, &h3)));
        let rhs = &(&nambu_bracket(&wrap(nambu_bracket(&f1, &f2, &h1)), &h2, &h3)
            + &nambu_bracket(&h1, &wrap(nambu_bracket(&f1, &f2, &h2)), &h3))
            + &nambu_bracket(&h1, &h2, &wrap(nambu_bracket(&f1, &f2, &h3)));
        fundamental &= lhs == rhs;
    }
    results.push(("fundamental identity (100 samples)".to_string(), fundamental));

    let mut liouville = true;
    for _ in 0..100 {
        let h1 = sample::logfunc(&mut rng, 3, -2, 3);
        let h2 = sample::logfunc(&mut rng, 3, -2, 3);
        liouville &= divergence(&nambu_field(&h1, &h2)).is_zero();
    }
    results.push(("liouville divergence (100 samples)".to_string(), liouville));

    let mut homotopy = true;
    for _ in 0..30 {
        let degree = rng.gen_range(1..=3usize);
        let w = sample::poly_form(&mut rng, degree, 3, 3);
        let d_of_dw = homotopy_operator(&w).and_then(|dw| exterior_derivative(&dw));
        let reconstructed = match (d_of_dw, degree) {
            (Ok(first), 3) => Ok(first),
            (Ok(first), _) => {
                let dw = exterior_derivative(&w).expect("degree <= 2");
                homotopy_operator(&dw).map(|second| first.add(&second))
            }
            (Err(e), _) => Err(e),
        };
        homotopy &= reconstructed.map(|r| r == w).unwrap_or(false);
    }
    results.push(("homotopy identity d(Dw) + D(dw) = w (30 samples)".to_string(), homotopy));

    let mut roundtrip = true;
    for _ in 0..100 {
        let f = sample::logfunc(&mut rng, 4, -3, 3);
        let rendered = render(&f, &vars);
        let reparsed = parse_expression(&rendered, &vars, &Default::default());
        roundtrip &= reparsed.map(|g| g == f).unwrap_or(false);
    }
    results.push(("render/parse round-trip (100 samples)".to_string(), roundtrip));

    let mut grad_check = true;
    for _ in 0..50 {
        let f = sample::logfunc(&mut rng, 3, -2, 3);
        let g = gradient(&f);
        // curl grad = 0 exactly.
        grad_check &= crate::analysis::curl(&g).is_zero();
    }
    results.push(("curl of gradients vanishes (50 samples)".to_string(), grad_check));

    results
}
