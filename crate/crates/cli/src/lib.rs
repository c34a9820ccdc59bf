//! Command-line front end for `pbt-hopf`.
//!
//! [`run`] does all the work and returns the exit code: 0 on success, 1 when
//! `verify` finds a counterexample, 2 on usage, parse or label errors.

pub mod expr;

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use pbt_hopf::coalgebra::{all_cuts, coproduct_by_cuts, cut_pair, is_admissible, primitive_basis};
use pbt_hopf::hopf::{antipode_lin, verify_hopf};
use pbt_hopf::product::star;
use pbt_hopf::tree::{catalan, enumerate};
use pbt_hopf::{Alphabet, LinComb, Tree};
use serde_json::{json, Value};

pub use expr::parse_expr;

/// Largest degree `verify` accepts on alphabets of more than two labels
/// without `--force`.
pub const DEGREE_GUARD: usize = 7;

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] pbt_hopf::Error),
    #[error(
        "refusing degree {degree} over {labels} labels (limit {DEGREE_GUARD} above two labels); pass --force to run anyway"
    )]
    DegreeGuard { degree: usize, labels: usize },
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Recursive,
    Cuts,
}

#[derive(Debug, Parser)]
#[command(
    name = "pbt-hopf",
    version,
    about = "Exact computations with decorated planar binary trees"
)]
struct Cli {
    /// Output format.
    #[arg(
        long,
        global = true,
        value_enum,
        env = "PBT_HOPF_FORMAT",
        default_value = "text"
    )]
    format: Format,

    /// Comma-separated label alphabet [default: o]. When given, labels in
    /// input expressions must belong to it.
    #[arg(long, global = true)]
    labels: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// All trees with n internal vertices, in canonical order.
    Enumerate { n: usize },
    /// Product of two expressions.
    Product { lhs: String, rhs: String },
    /// Coproduct of an expression.
    Coproduct {
        expr: String,
        #[arg(long, value_enum, default_value = "recursive")]
        method: Method,
    },
    /// Antipode of an expression.
    Antipode { expr: String },
    /// Cuts of a tree with their admissibility and (P, R) pairs.
    Cuts {
        tree: String,
        #[arg(long)]
        admissible_only: bool,
    },
    /// Basis of the primitive elements of degree n.
    Primitives { n: usize },
    /// Checks the Hopf algebra axioms on all trees up to a degree.
    Verify {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        force: bool,
    },
    /// The n-th Catalan number.
    Catalan { n: u32 },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let stream: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(stream, "{}", e.render());
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                CliError::Io(_) => 1,
                _ => 2,
            }
        }
    }
}

struct Context {
    format: Format,
    alphabet: Alphabet,
    explicit: bool,
}

impl Context {
    /// Parses an expression and checks its labels against an explicit alphabet.
    fn expr(&self, text: &str) -> Result<LinComb, CliError> {
        let x = parse_expr(text)?;
        if self.explicit {
            for t in x.keys() {
                self.check_labels(t)?;
            }
        }
        Ok(x)
    }

    fn tree(&self, text: &str) -> Result<Tree, CliError> {
        let t: Tree = text.parse()?;
        if self.explicit {
            self.check_labels(&t)?;
        }
        Ok(t)
    }

    fn check_labels(&self, t: &Tree) -> Result<(), CliError> {
        match t.labels().into_iter().find(|a| !self.alphabet.contains(a)) {
            Some(a) => Err(pbt_hopf::Error::UnknownLabel(a.clone()).into()),
            None => Ok(()),
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let ctx = Context {
        format: cli.format,
        alphabet: match &cli.labels {
            Some(list) => Alphabet::parse_list(list)?,
            None => Alphabet::undecorated(),
        },
        explicit: cli.labels.is_some(),
    };
    let json = ctx.format == Format::Json;
    let emit = |out: &mut dyn Write, text: String, value: Value| -> Result<(), CliError> {
        if json {
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&value).expect("json value")
            )?;
        } else {
            writeln!(out, "{text}")?;
        }
        Ok(())
    };

    match &cli.command {
        Command::Enumerate { n } => {
            let trees = enumerate(*n, &ctx.alphabet)?;
            let text = trees
                .iter()
                .map(Tree::to_string)
                .collect::<Vec<_>>()
                .join("\n");
            emit(out, text, json!(trees))?;
        }
        Command::Catalan { n } => {
            let c = catalan(*n);
            emit(
                out,
                c.to_string(),
                json!({ "n": n, "catalan": c.to_string() }),
            )?;
        }
        Command::Product { lhs, rhs } => {
            let p = star(&ctx.expr(lhs)?, &ctx.expr(rhs)?);
            emit(out, p.to_string(), json!(p))?;
        }
        Command::Coproduct { expr, method } => {
            let x = ctx.expr(expr)?;
            let d = match method {
                Method::Recursive => pbt_hopf::coalgebra::coproduct(&x),
                Method::Cuts => coproduct_by_cuts(&x),
            };
            emit(out, d.to_string(), json!(d))?;
        }
        Command::Antipode { expr } => {
            let s = antipode_lin(&ctx.expr(expr)?);
            emit(out, s.to_string(), json!(s))?;
        }
        Command::Cuts {
            tree,
            admissible_only,
        } => {
            let t = ctx.tree(tree)?;
            let mut lines = Vec::new();
            let mut rows = Vec::new();
            for c in all_cuts(&t) {
                let name = if c.is_total() {
                    "total".to_string()
                } else {
                    let edges: Vec<String> = c.edges.iter().map(ToString::to_string).collect();
                    format!("{{{}}}", edges.join(", "))
                };
                if is_admissible(&t, &c) {
                    let pair = cut_pair(&t, &c)?;
                    lines.push(format!("{name}: P = {}; R = {}", pair.p, pair.r));
                    let mut row = serde_json::to_value(&pair).expect("json value");
                    row["admissible"] = json!(true);
                    rows.push(row);
                } else if !admissible_only {
                    lines.push(format!("{name}: not admissible"));
                    rows.push(json!({ "edges": c.edges, "kind": c.kind, "admissible": false }));
                }
            }
            emit(out, lines.join("\n"), Value::Array(rows))?;
        }
        Command::Primitives { n } => {
            let basis = primitive_basis(*n, &ctx.alphabet)?;
            let mut text = format!("dimension {}", basis.len());
            for v in &basis {
                text.push('\n');
                text.push_str(&v.to_string());
            }
            let value = json!({
                "degree": n,
                "alphabet": ctx.alphabet.labels(),
                "dimension": basis.len(),
                "basis": basis,
            });
            emit(out, text, value)?;
        }
        Command::Verify { degree, force } => {
            if *degree > DEGREE_GUARD && ctx.alphabet.len() > 2 && !force {
                return Err(CliError::DegreeGuard {
                    degree: *degree,
                    labels: ctx.alphabet.len(),
                });
            }
            let report = verify_hopf(*degree, &ctx.alphabet)?;
            let text = report.to_string();
            emit(out, text.trim_end().to_string(), json!(report))?;
            if !report.all_pass() {
                return Ok(1);
            }
        }
    }
    Ok(0)
}
