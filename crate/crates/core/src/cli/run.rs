use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value as Json};

use super::eval::{Env, ErrorKind};
use super::syntax::{parse, Span};
use super::value::{Format, Value};
use super::Error;
use crate::catalog::Catalog;
use crate::verify::{run_suite, CheckReport, Suite};

/// Exact local L-factor calculator.
#[derive(Parser, Debug)]
#[command(name = "lfac", version)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    pub format: FormatArg,
    /// Catalog data file replacing the bundled one.
    #[arg(long, global = true, value_name = "FILE")]
    pub catalog: Option<std::path::PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate an expression.
    Eval { expr: String },
    /// L-factor of a representation or parameter expression.
    Lfactor { expr: String },
    /// Pole classification.
    Poles(PolesArgs),
    /// Factorisations into regular and exceptional parts.
    Split(SplitArgs),
    /// The ideals J and K of a GSp(4) parameter.
    Ideals { pi: String },
    /// Seeded identity checks.
    Verify {
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct PolesArgs {
    /// Exceptional poles of PI x SIGMA.
    #[arg(long, num_args = 2, value_names = ["PI", "SIGMA"])]
    pub exceptional: Option<Vec<String>>,
    /// Subregular poles of PI.
    #[arg(long, value_name = "PI")]
    pub subregular: Option<String>,
    /// Classified poles of the spinor L-factor of PI.
    #[arg(long, value_name = "PI")]
    pub table: Option<String>,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct SplitArgs {
    /// L(PI x SIGMA) as (regular, exceptional).
    #[arg(long, num_args = 2, value_names = ["PI", "SIGMA"])]
    pub nov: Option<Vec<String>>,
    /// L(PI) as (exceptional, subregular, Kirillov).
    #[arg(long, value_name = "PI")]
    pub ps: Option<String>,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    Suite::parse(s).ok_or_else(|| format!("unknown suite `{s}` (lemma71, theoremA, cor62, soudry, all)"))
}

struct Failure {
    code: i32,
    kind: &'static str,
    message: String,
    span: Option<Span>,
}

impl Failure {
    fn from_error(e: Error) -> Self {
        match e {
            Error::Parse(p) => Failure {
                code: 2,
                kind: "syntax",
                message: p.msg.clone(),
                span: Some(p.span),
            },
            Error::Eval(ev) => Failure {
                code: if ev.kind == ErrorKind::Type { 2 } else { 1 },
                kind: if ev.kind == ErrorKind::Type { "type" } else { "domain" },
                message: ev.msg.clone(),
                span: Some(ev.span),
            },
        }
    }

    fn text(&self) -> String {
        let prefix = match self.kind {
            "syntax" => "syntax error",
            "type" => "type error",
            "usage" => "usage error",
            "catalog" => "catalog error",
            _ => "error",
        };
        match self.span {
            Some(sp) => format!("{prefix} at {sp}: {}", self.message),
            None => format!("{prefix}: {}", self.message),
        }
    }

    fn json(&self) -> Json {
        let mut err = json!({"kind": self.kind, "message": self.message});
        if let Some(sp) = self.span {
            err["line"] = json!(sp.line);
            err["column"] = json!(sp.col);
        }
        json!({"schema": 1, "error": err})
    }
}

fn wants_json(args: &[OsString]) -> bool {
    args.windows(2).any(|w| w[0] == "--format" && w[1] == "json") || args.iter().any(|a| a == "--format=json")
}

/// Runs the command line `args` (program name first), writing to `out`.
/// Returns the process exit code: 0 success, 1 domain error or failed
/// check, 2 usage, syntax or type error.
pub fn run<I, T>(args: I, out: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let json_mode = wants_json(&args);
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind as K;
            if matches!(e.kind(), K::DisplayHelp | K::DisplayVersion | K::DisplayHelpOnMissingArgumentOrSubcommand) {
                let _ = write!(out, "{e}");
                return if e.kind() == K::DisplayHelpOnMissingArgumentOrSubcommand { 2 } else { 0 };
            }
            let f = Failure {
                code: 2,
                kind: "usage",
                message: e.to_string().lines().next().unwrap_or("").trim_start_matches("error: ").to_string(),
                span: None,
            };
            return emit_failure(&f, json_mode, out);
        }
    };
    let format = match cli.format {
        FormatArg::Text => Format::Text,
        FormatArg::Json => Format::Json,
    };
    let catalog = match &cli.catalog {
        None => Catalog::default(),
        Some(path) => match std::fs::read_to_string(path).map_err(|e| e.to_string()).and_then(|t| Catalog::parse(&t).map_err(|e| e.to_string())) {
            Ok(c) => c,
            Err(msg) => {
                let f = Failure {
                    code: 2,
                    kind: "catalog",
                    message: format!("{}: {msg}", path.display()),
                    span: None,
                };
                return emit_failure(&f, format == Format::Json, out);
            }
        },
    };
    let env = Env::new(catalog);
    match execute(&env, &cli.command) {
        Ok(Outcome::Value(v)) => {
            let line = match format {
                Format::Text => v.to_string(),
                Format::Json => json!({"schema": 1, "kind": v.kind(), "result": v.to_json()}).to_string(),
            };
            let _ = writeln!(out, "{line}");
            0
        }
        Ok(Outcome::Report(r)) => {
            let line = match format {
                Format::Text => r.to_string(),
                Format::Json => json!({"schema": 1, "kind": "check", "result": report_json(&r)}).to_string(),
            };
            let _ = writeln!(out, "{line}");
            if r.passed() {
                0
            } else {
                1
            }
        }
        Err(f) => emit_failure(&f, format == Format::Json, out),
    }
}

fn emit_failure(f: &Failure, json_mode: bool, out: &mut impl Write) -> i32 {
    let line = if json_mode { f.json().to_string() } else { f.text() };
    let _ = writeln!(out, "{line}");
    f.code
}

fn report_json(r: &CheckReport) -> Json {
    json!({
        "identity": r.identity,
        "trials": r.trials,
        "passed": r.passed(),
        "failures": r.failures.iter().map(|f| json!({"seed": f.seed, "input": f.input, "detail": f.detail})).collect::<Vec<_>>(),
    })
}

enum Outcome {
    Value(Value),
    Report(CheckReport),
}

fn call(env: &Env, f: &str, args: &[&str]) -> Result<Outcome, Failure> {
    let mut parsed = Vec::new();
    for a in args {
        parsed.push(parse(a).map_err(|e| Failure::from_error(e.into()))?);
    }
    let sp = Span { line: 1, col: 1 };
    let e = super::syntax::Expr {
        kind: super::syntax::ExprKind::Call(f.to_string(), parsed),
        span: sp,
    };
    env.eval(&e).map(Outcome::Value).map_err(|e| Failure::from_error(e.into()))
}

fn execute(env: &Env, cmd: &Command) -> Result<Outcome, Failure> {
    match cmd {
        Command::Eval { expr } => {
            let e = parse(expr).map_err(|e| Failure::from_error(e.into()))?;
            env.eval(&e).map(Outcome::Value).map_err(|e| Failure::from_error(e.into()))
        }
        Command::Lfactor { expr } => call(env, "L", &[expr]),
        Command::Poles(p) => match (&p.exceptional, &p.subregular, &p.table) {
            (Some(v), _, _) => call(env, "poles.exceptional", &[&v[0], &v[1]]),
            (_, Some(pi), _) => call(env, "poles.subregular", &[pi]),
            (_, _, Some(pi)) => call(env, "poles.table", &[pi]),
            _ => unreachable!("clap enforces one mode"),
        },
        Command::Split(s) => match (&s.nov, &s.ps) {
            (Some(v), _) => call(env, "split.nov", &[&v[0], &v[1]]),
            (_, Some(pi)) => call(env, "split.ps", &[pi]),
            _ => unreachable!("clap enforces one mode"),
        },
        Command::Ideals { pi } => call(env, "ideals", &[pi]),
        Command::Verify { suite, trials, seed } => Ok(Outcome::Report(run_suite(*suite, *trials, *seed))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str]) -> (i32, String) {
        let mut buf = Vec::new();
        let code = run(std::iter::once("lfac").chain(args.iter().copied()), &mut buf);
        (code, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn examples() {
        assert_eq!(go(&["lfactor", "gsp4.IVa(unr(a))"]), (0, "1/(1 - a*v^-3*X)\n".into()));
        assert_eq!(go(&["poles", "--subregular", "gsp4.IIIa(unr(a),unr(b))"]), (0, "report()\n".into()));
        let (code, out) = go(&["--format", "json", "poles", "--subregular", "gsp4.IIIa(unr(a),unr(b))"]);
        assert_eq!(code, 0);
        assert_eq!(out, "{\"schema\":1,\"kind\":\"poles\",\"result\":{\"entries\":[]}}\n");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(go(&["eval", "L("]).0, 2);
        assert_eq!(go(&["eval", "1/0"]).0, 1);
        assert_eq!(go(&["eval", "nope(1)"]).0, 2);
        assert_eq!(go(&["bogus"]).0, 2);
        assert_eq!(go(&["poles"]).0, 2);
        let (code, out) = go(&["--format", "json", "eval", "L("]);
        assert_eq!(code, 2);
        assert!(out.starts_with("{\"schema\":1,\"error\":{\"kind\":\"syntax\""));
        assert!(out.contains("\"line\":1,\"column\":3"));
    }
}
