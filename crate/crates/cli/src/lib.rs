//! The `aqschur` command line: scalars, actions on tensor space and the
//! verification suites, with JSON output.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use affine_schur::qcomb::{qbinom, qbinom_at_eps};
use affine_schur::scalar::{cyclotomic_polynomial, l_of, totient, CyclotomicNumber, Scalar};
use affine_schur::tensor::{OperatorExpr, Session, TensorVector};
use affine_schur::verify::{
    acceptance_plan, default_window, MergedReport, Status, SuiteConfig, SuiteRegistry, VerificationReport,
    VerifyError,
};

#[derive(Parser, Debug)]
#[command(name = "aqschur", version, about = "Exact computations on affine quantum Schur tensor space")]
struct Cli {
    /// Human-readable output instead of compact JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Write the output to this file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The Gaussian binomial [c over t], generic or at a primitive l'-th root of unity.
    Qbinom {
        #[arg(long, allow_hyphen_values = true)]
        c: i64,
        #[arg(long)]
        t: u32,
        #[arg(long)]
        lprime: Option<u32>,
    },
    /// The cyclotomic polynomial and field data for l'.
    Cyclotomic {
        #[arg(long)]
        lprime: u32,
        /// Also print eps^k in the power basis.
        #[arg(long, allow_hyphen_values = true)]
        power: Option<i64>,
    },
    /// Apply an operator expression to a tensor vector.
    Act {
        #[command(flatten)]
        session: SessionArgs,
        /// Operator JSON, or @path to read it from a file.
        #[arg(long)]
        op: String,
        /// Vector JSON file; standard input when absent or `-`.
        #[arg(long)]
        vector: Option<String>,
    },
    /// List Lambda(n, r), optionally splitting a vector into weight components.
    Weights {
        #[command(flatten)]
        session: SessionArgs,
        /// Vector JSON file to decompose (`-` for standard input).
        #[arg(long)]
        vector: Option<String>,
    },
    /// Run a verification suite by name, or `all` for the full grid.
    Verify {
        suite: String,
        #[command(flatten)]
        cfg: SuiteArgs,
    },
    /// Run the Schur-functor suite for (n, N, r).
    SchurFunctor {
        #[command(flatten)]
        cfg: SuiteArgs,
    },
    /// Merge report files into one; fails if any report fails.
    ReportMerge {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// List the registered suites.
    Suites,
}

#[derive(Args, Debug)]
struct SessionArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: usize,
    #[arg(long)]
    lprime: Option<u32>,
    #[arg(long)]
    enable_affine_node: bool,
}

#[derive(Args, Debug, Default)]
struct SuiteArgs {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long = "N")]
    big_n: Option<usize>,
    #[arg(long)]
    lprime: Option<u32>,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, allow_hyphen_values = true)]
    window_lo: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    window_hi: Option<i64>,
    #[arg(long)]
    support: Option<usize>,
    #[arg(long)]
    coeff_bound: Option<i64>,
    #[arg(long)]
    enable_affine_node: bool,
}

impl SuiteArgs {
    /// Overrides the fields that were given on the command line.
    fn apply(&self, mut cfg: SuiteConfig) -> SuiteConfig {
        if let Some(v) = self.big_n {
            cfg.big_n = Some(v);
        }
        if self.lprime.is_some() {
            cfg.lprime = self.lprime;
        }
        if let Some(v) = self.trials {
            cfg.trials = v;
        }
        if let Some(v) = self.seed {
            cfg.seed = v;
        }
        if let Some(v) = self.window_lo {
            cfg.window.0 = v;
        }
        if let Some(v) = self.window_hi {
            cfg.window.1 = v;
        }
        if let Some(v) = self.support {
            cfg.support_bound = v;
        }
        if let Some(v) = self.coeff_bound {
            cfg.coeff_bound = v;
        }
        cfg.enable_affine_node |= self.enable_affine_node;
        cfg
    }

    /// A single configuration; `n` and `r` default to 2.
    fn single(&self) -> SuiteConfig {
        let n = self.n.unwrap_or(2);
        let mut cfg = SuiteConfig::new(n, self.r.unwrap_or(2));
        cfg.window = default_window(n);
        self.apply(cfg)
    }
}

/// A failure that maps to an exit code.
enum Failure {
    Usage(String),
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<affine_schur::tensor::ActionError> for Failure {
    fn from(e: affine_schur::tensor::ActionError) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// What a command produced: text to print and the exit code.
struct Output {
    text: String,
    code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

/// Runs the command line `args` (including the program name) and returns
/// the exit code: 0 on success, 1 when a verification fails, 2 on usage or
/// input errors.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(&cli, stdin) {
        Ok(output) => {
            let mut text = output.text;
            if !text.ends_with('\n') {
                text.push('\n');
            }
            let written = match &cli.out {
                Some(path) => fs::write(path, &text).map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
            };
            match written {
                Ok(()) => output.code,
                Err(msg) => {
                    let _ = writeln!(err, "error: {msg}");
                    2
                }
            }
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn to_text(value: &impl serde::Serialize, pretty: bool) -> String {
    if pretty {
        serde_json::to_string_pretty(value).expect("serializable")
    } else {
        serde_json::to_string(value).expect("serializable")
    }
}

fn read_source(source: Option<&str>, stdin: &mut dyn Read) -> Result<String, Failure> {
    match source {
        None | Some("-") => {
            let mut s = String::new();
            stdin.read_to_string(&mut s).map_err(|e| Failure::Usage(format!("cannot read standard input: {e}")))?;
            Ok(s)
        }
        Some(path) => fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {path}: {e}"))),
    }
}

fn parse_json<T: serde::de::DeserializeOwned>(text: &str, what: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::Usage(format!("invalid {what} JSON: {e}")))
}

fn session(args: &SessionArgs) -> Result<Session, Failure> {
    Ok(Session::new(args.n, args.r, args.lprime)?.with_affine_node(args.enable_affine_node))
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<Output, Failure> {
    let pretty = cli.pretty;
    match &cli.command {
        Command::Qbinom { c, t, lprime } => {
            let value = match lprime {
                Some(0) => return Err(Failure::Usage("l' must be at least 1".into())),
                Some(l) => Scalar::Specialized(qbinom_at_eps(*c, *t, *l)),
                None => Scalar::Generic(qbinom(*c, *t)),
            };
            if pretty {
                return Ok(Output::ok(value.to_string()));
            }
            let doc = json!({ "c": c, "t": t, "lprime": lprime, "value": value, "display": value.to_string() });
            Ok(Output::ok(to_text(&doc, false)))
        }
        Command::Cyclotomic { lprime, power } => {
            if *lprime == 0 {
                return Err(Failure::Usage("l' must be at least 1".into()));
            }
            let phi: Vec<String> = cyclotomic_polynomial(*lprime).iter().map(|c| c.to_string()).collect();
            let phi: Vec<Value> =
                phi.into_iter().map(|c| c.parse::<i64>().map(Value::from).unwrap_or(Value::String(c))).collect();
            let mut doc = json!({
                "lprime": lprime,
                "l": l_of(*lprime),
                "degree": totient(*lprime),
                "phi": phi,
            });
            if let Some(k) = power {
                doc["epsilon_power"] = json!({ "k": k, "value": CyclotomicNumber::epsilon_pow(*lprime, *k) });
            }
            Ok(Output::ok(to_text(&doc, pretty)))
        }
        Command::Act { session: sargs, op, vector } => {
            let s = session(sargs)?;
            let op_text = match op.strip_prefix('@') {
                Some(path) => read_source(Some(path), stdin)?,
                None => op.clone(),
            };
            let op: OperatorExpr = parse_json(&op_text, "operator")?;
            let vec: TensorVector = parse_json(&read_source(vector.as_deref(), stdin)?, "vector")?;
            let result = s.apply_expr(&op, &vec)?;
            Ok(Output::ok(to_text(&result, pretty)))
        }
        Command::Weights { session: sargs, vector } => {
            let s = session(sargs)?;
            let lams = s.compositions();
            let mut doc = json!({
                "n": s.n(),
                "r": s.r(),
                "count": lams.len(),
                "compositions": lams.iter().map(|l| l.parts().to_vec()).collect::<Vec<_>>(),
            });
            if let Some(src) = vector {
                let vec: TensorVector = parse_json(&read_source(Some(src), stdin)?, "vector")?;
                let mut parts = Vec::new();
                for lam in &lams {
                    let piece = s.project_weight(lam, &vec)?;
                    if !piece.is_zero() {
                        parts.push(json!({ "lambda": lam.parts(), "component": piece }));
                    }
                }
                doc["components"] = Value::Array(parts);
            }
            Ok(Output::ok(to_text(&doc, pretty)))
        }
        Command::Verify { suite, cfg } => {
            let registry = SuiteRegistry::with_builtins();
            if suite == "all" {
                let reports = if cfg.n.is_none() && cfg.r.is_none() {
                    acceptance_plan()
                        .into_iter()
                        .map(|e| registry.run(e.suite, &cfg.apply(e.config)))
                        .collect::<Result<Vec<_>, _>>()?
                } else {
                    let base = cfg.single();
                    registry
                        .names()
                        .into_iter()
                        .map(|name| {
                            let mut c = base.clone();
                            if name == "schur" && c.big_n.is_none() {
                                c.big_n = Some(c.n + 1);
                            }
                            registry.run(name, &c)
                        })
                        .collect::<Result<Vec<_>, _>>()?
                };
                let merged = MergedReport::new(reports);
                let text = if pretty { merged_table(&merged) } else { to_text(&merged, false) };
                return Ok(Output { text, code: merged.exit_code() });
            }
            if registry.get(suite).is_none() {
                return Err(Failure::Usage(format!(
                    "unknown suite `{suite}`; expected one of: {}, all",
                    registry.names().join(", ")
                )));
            }
            let mut c = cfg.single();
            if suite == "schur" && c.big_n.is_none() {
                c.big_n = Some(c.n + 1);
            }
            let rep = registry.run(suite, &c)?;
            Ok(report_output(&rep, pretty))
        }
        Command::SchurFunctor { cfg } => {
            let mut c = cfg.single();
            if c.big_n.is_none() {
                c.big_n = Some(c.n + 1);
            }
            let rep = SuiteRegistry::with_builtins().run("schur", &c)?;
            Ok(report_output(&rep, pretty))
        }
        Command::ReportMerge { files } => {
            let mut reports = Vec::new();
            for path in files {
                let text = fs::read_to_string(path)
                    .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
                let value: Value = parse_json(&text, "report")?;
                // Accept single reports and previously merged files.
                if value.get("reports").is_some() {
                    let merged: MergedReport = parse_json(&text, "merged report")?;
                    reports.extend(merged.reports);
                } else {
                    reports.push(parse_json::<VerificationReport>(&text, "report")?);
                }
            }
            let merged = MergedReport::new(reports);
            let text = if pretty { merged_table(&merged) } else { to_text(&merged, false) };
            Ok(Output { text, code: merged.exit_code() })
        }
        Command::Suites => {
            let registry = SuiteRegistry::with_builtins();
            let list: Vec<Value> =
                registry.suites().map(|s| json!({ "name": s.name(), "summary": s.summary() })).collect();
            Ok(Output::ok(to_text(&list, pretty)))
        }
    }
}

fn report_output(rep: &VerificationReport, pretty: bool) -> Output {
    let text = if pretty { report_table(rep) } else { to_text(rep, false) };
    Output { text, code: rep.exit_code() }
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "FAIL",
        Status::Skipped => "skip",
    }
}

fn report_table(rep: &VerificationReport) -> String {
    let c = &rep.config;
    let mut s = format!("suite {}  n={} r={}", rep.suite, c.n, c.r);
    if let Some(big_n) = c.big_n {
        s += &format!(" N={big_n}");
    }
    s += &match c.lprime {
        Some(l) => format!(" l'={l}"),
        None => " generic".to_string(),
    };
    for label in &rep.labels {
        s += &format!("  [{label}]");
    }
    s.push('\n');
    let width = rep.results.iter().map(|r| r.id.len()).max().unwrap_or(0);
    for r in &rep.results {
        s += &format!("  {}  {:<width$}  {:>7}", status_word(r.status), r.id, r.trials);
        if let Some(obs) = &r.observation {
            s += &format!("  {obs}");
        }
        if let Some(cx) = &r.counterexample {
            s += &format!("\n        input {}\n        lhs   {}\n        rhs   {}", cx.input, cx.lhs, cx.rhs);
        }
        s.push('\n');
    }
    s += &format!(
        "  {} passed, {} failed, {} skipped\n",
        rep.count(Status::Pass),
        rep.count(Status::Fail),
        rep.count(Status::Skipped)
    );
    s
}

fn merged_table(m: &MergedReport) -> String {
    let mut s: String = m.reports.iter().map(report_table).collect();
    s += if m.passed { "ALL PASS\n" } else { "FAILURES\n" };
    s
}
