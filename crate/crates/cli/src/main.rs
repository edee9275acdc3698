use clap::{Parser, Subcommand, ValueEnum};
use mvfn_cli::eval::{error_class, eval_str, infer_dim, EvalContext, EvalError};
use mvfn_cli::fmt::{format_json, format_text, parse_mv_with_dim};
use mvfn_core::relations::{name_matches, relation_names, run_relation, RelationReport, RelationStatus};
use mvfn_core::{Context, Multivector, PowerSide};
use rayon::prelude::*;
use std::io::{BufRead, Write};
use std::process::ExitCode;

/// Clifford multivector calculator: elementary functions of multivector
/// variables in dimensions 1-3, involution algebra in dimension 4.
#[derive(Parser)]
#[command(name = "mvfn", version, about)]
struct Cli {
    /// Relative tolerance for structural checks (default 1e-9; the GA_TOL
    /// environment variable overrides the default, this flag overrides both)
    #[arg(long, global = true)]
    tol: Option<f64>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum SideArg {
    /// M^P = exp(log(M) P)
    #[default]
    Right,
    /// M^P = exp(P log(M))
    Left,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate an expression and print the resulting multivector
    Eval {
        /// Expression, e.g. "exp(pi j/2)" or "log(2 + e1 + e23)"
        expr: String,
        /// Session dimension 1-4 (default: smallest that fits the expression)
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
        dim: Option<u8>,
        /// Emit {"dim":N,"coeffs":[...]} instead of the display form
        #[arg(long)]
        json: bool,
        /// Which side multivector exponents attach to in M^P
        #[arg(long, value_enum, default_value_t)]
        power_side: SideArg,
    },
    /// Read expressions from stdin; `let name = expr` binds variables
    Repl {
        /// Session dimension 1-4
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u8).range(1..=4))]
        dim: u8,
    },
    /// Run the registry of randomized identity checks
    CheckRelations {
        /// Only run relations whose name matches (substring, or glob with `*`)
        #[arg(long)]
        filter: Option<String>,
        /// Random samples per relation
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// Seed for reproducible runs
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Emit one JSON record per relation
        #[arg(long)]
        json: bool,
    },
    /// Solve A M + M B = Y for M
    SolveSylvester {
        /// Coefficient A (JSON record or expression)
        #[arg(long)]
        a: String,
        /// Coefficient B (JSON record or expression)
        #[arg(long)]
        b: String,
        /// Right-hand side Y (JSON record or expression)
        #[arg(long)]
        y: String,
        /// Dimension (default: smallest fitting all three inputs)
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
        dim: Option<u8>,
        /// Emit the solution as JSON
        #[arg(long)]
        json: bool,
    },
}

fn tolerance_context(flag: Option<f64>) -> Context {
    let tol = flag.or_else(|| {
        std::env::var("GA_TOL")
            .ok()
            .and_then(|s| s.parse::<f64>().ok())
    });
    match tol {
        Some(t) if t.is_finite() && t > 0.0 => Context::with_tolerance(t),
        _ => Context::default(),
    }
}

fn print_result(m: &Multivector, json: bool) {
    if json {
        println!("{}", format_json(m));
    } else {
        println!("{}", format_text(m));
    }
}

fn fail(e: &EvalError) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(error_class(e))
}

fn cmd_eval(
    expr: &str,
    dim: Option<usize>,
    json: bool,
    side: SideArg,
    ctx: Context,
) -> ExitCode {
    let dim = match dim {
        Some(d) => d,
        None => match infer_dim(expr) {
            Ok(d) => d,
            Err(e) => return fail(&e.into()),
        },
    };
    let mut ecx = match EvalContext::with_context(dim, ctx) {
        Ok(e) => e,
        Err(e) => return fail(&e),
    };
    ecx.power_side = match side {
        SideArg::Right => PowerSide::Right,
        SideArg::Left => PowerSide::Left,
    };
    match eval_str(expr, &ecx) {
        Ok(m) => {
            print_result(&m, json);
            ExitCode::SUCCESS
        }
        Err(e) => fail(&e),
    }
}

fn cmd_repl(dim: usize, ctx: Context) -> ExitCode {
    let mut ecx = match EvalContext::with_context(dim, ctx) {
        Ok(e) => e,
        Err(e) => return fail(&e),
    };
    let stdin = std::io::stdin();
    let mut out = std::io::stdout();
    for line in stdin.lock().lines() {
        let Ok(line) = line else { break };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if line == ":q" || line == ":quit" || line == "quit" {
            break;
        }
        let (target, src) = match line.strip_prefix("let ") {
            Some(rest) => match rest.split_once('=') {
                Some((name, rhs)) => (Some(name.trim().to_owned()), rhs.trim().to_owned()),
                None => {
                    eprintln!("error: expected `let name = expr`");
                    continue;
                }
            },
            None => (None, line.to_owned()),
        };
        match eval_str(&src, &ecx) {
            Ok(m) => {
                if let Some(name) = target {
                    ecx.vars.insert(name.clone(), m);
                    let _ = writeln!(out, "{name} = {m}");
                } else {
                    let _ = writeln!(out, "{m}");
                }
            }
            Err(e) => eprintln!("error: {e}"),
        }
    }
    ExitCode::SUCCESS
}

fn report_json(r: &RelationReport) -> String {
    let witnesses: Vec<serde_json::Value> = r
        .witnesses
        .iter()
        .map(|w| serde_json::json!({"input": w.input, "residual": w.residual}))
        .collect();
    serde_json::json!({
        "name": r.name,
        "samples": r.samples,
        "max_residual": r.max_residual,
        "status": if r.status == RelationStatus::Pass { "pass" } else { "fail" },
        "witnesses": witnesses,
        "note": r.note,
    })
    .to_string()
}

fn cmd_check_relations(
    filter: Option<&str>,
    samples: usize,
    seed: u64,
    json: bool,
    ctx: Context,
) -> ExitCode {
    let names: Vec<&str> = relation_names()
        .into_iter()
        .filter(|n| filter.is_none_or(|f| name_matches(f, n)))
        .collect();
    if names.is_empty() {
        eprintln!("error: no relation matches the filter");
        return ExitCode::from(2);
    }
    let mut reports: Vec<RelationReport> = names
        .par_iter()
        .map(|n| run_relation(n, samples, seed, &ctx).expect("registry names are valid"))
        .collect();
    reports.sort_by(|a, b| a.name.cmp(&b.name));
    let mut failed = 0usize;
    for r in &reports {
        if json {
            println!("{}", report_json(r));
            if r.status != RelationStatus::Pass {
                failed += 1;
            }
            continue;
        }
        let status = if r.status == RelationStatus::Pass {
            "pass"
        } else {
            failed += 1;
            "FAIL"
        };
        println!(
            "{:<28} {:>6} samples   max residual {:>9.2e}   {}",
            r.name, r.samples, r.max_residual, status
        );
        if let Some(note) = &r.note {
            println!("{:<28} note: {note}", "");
        }
        for w in &r.witnesses {
            println!("{:<28} witness ({:.2e}): {}", "", w.residual, w.input);
        }
    }
    if !json {
        println!(
            "{} relations, {} failed, {} samples each (seed {seed})",
            reports.len(),
            failed,
            samples
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn cmd_solve_sylvester(
    a: &str,
    b: &str,
    y: &str,
    dim: Option<usize>,
    json: bool,
    ctx: Context,
) -> ExitCode {
    let dim = match dim {
        Some(d) => d,
        None => {
            let mut d = 1;
            for s in [a, b, y] {
                let t = s.trim_start();
                let found = if t.starts_with('{') {
                    serde_json::from_str::<mvfn_cli::fmt::MvJson>(s)
                        .map(|r| r.dim)
                        .unwrap_or(1)
                } else {
                    infer_dim(s).unwrap_or(1)
                };
                d = d.max(found);
            }
            d.min(4)
        }
    };
    let parsed: Result<Vec<Multivector>, EvalError> = [a, b, y]
        .iter()
        .map(|s| parse_mv_with_dim(s, dim, &ctx))
        .collect();
    let [a, b, y] = match parsed {
        Ok(v) => <[Multivector; 3]>::try_from(v).expect("three inputs"),
        Err(e) => return fail(&e),
    };
    match mvfn_core::linear::sylvester_solve(&a, &b, &y, &ctx) {
        Ok(m) => {
            let back = a.gp(&m).expect("dims match") + m.gp(&b).expect("dims match");
            let residual = (back - y).norm();
            if json {
                let mut v: serde_json::Value =
                    serde_json::from_str(&format_json(&m)).expect("well-formed record");
                v["residual"] = serde_json::json!(residual);
                println!("{v}");
            } else {
                println!("{}", format_text(&m));
                println!("residual = {residual:e}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => fail(&EvalError::Algebra(e)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = tolerance_context(cli.tol);
    match cli.cmd {
        Cmd::Eval {
            expr,
            dim,
            json,
            power_side,
        } => cmd_eval(&expr, dim.map(usize::from), json, power_side, ctx),
        Cmd::Repl { dim } => cmd_repl(usize::from(dim), ctx),
        Cmd::CheckRelations {
            filter,
            samples,
            seed,
            json,
        } => cmd_check_relations(filter.as_deref(), samples, seed, json, ctx),
        Cmd::SolveSylvester { a, b, y, dim, json } => {
            cmd_solve_sylvester(&a, &b, &y, dim.map(usize::from), json, ctx)
        }
    }
}
