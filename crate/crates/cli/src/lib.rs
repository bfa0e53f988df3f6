//! Command-line front end for `eqrank-core`.
//!
//! [`run`] takes the argument list and output sink and returns the process
//! exit code: 0 on success (and for `equiv`, "equivalent"), 1 for a negative
//! `equiv` answer or a failed `verify`, 2 or more for errors.

pub mod parse;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use eqrank_core::chars::{highest_weight, irreducible_character, FormalCharacter};
use eqrank_core::dioph::solve_d;
use eqrank_core::embed::{maximal_equal_rank_subalgebras, node_deletion_subalgebras, restrict_character, EqualRankEmbedding};
use eqrank_core::equiv::{a_type_reduction, canonical_form, invariant, EquivClassInvariant};
use eqrank_core::linalg::Matrix;
use eqrank_core::metric::CharacterMetric;
use eqrank_core::oracle::rewrite_distance;
use eqrank_core::oracle::suite::run_all;
use eqrank_core::rootsys::{SemisimpleAlgebra, Weight};
use eqrank_core::Rational;
use serde_json::{json, Value};

pub use parse::{parse_algebra, parse_labels, parse_simple, ParseError};

#[derive(Debug, Parser)]
#[command(name = "eqrank", version, about = "Equal-rank subalgebra equivalence for semisimple Lie algebras")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the complete equivalence invariant.
    Invariant { algebra: String },
    /// Print the canonical representative of the equivalence class.
    Canonical { algebra: String },
    /// Decide equivalence; exits 0 if equivalent and 1 otherwise.
    Equiv {
        left: String,
        right: String,
        /// Also search for an explicit rewrite chain up to this depth.
        #[arg(long)]
        certify_depth: Option<usize>,
    },
    /// Show the reduction to an all-A algebra step by step.
    Reduce { algebra: String },
    /// List the solutions of 2 = m/(m+1) + (l-k)(k+1)/(l+1).
    SolveD,
    /// Print a formal character.
    Char {
        algebra: String,
        /// Dynkin labels, comma separated.
        #[arg(long, conflicts_with = "adjoint", required_unless_present = "adjoint")]
        highest_weight: Option<String>,
        #[arg(long)]
        adjoint: bool,
    },
    /// Print the metric induced by a character.
    Gram {
        algebra: String,
        #[arg(long, conflicts_with = "hw", required_unless_present = "hw")]
        adjoint: bool,
        /// Dynkin labels of an irreducible, comma separated.
        #[arg(long)]
        hw: Option<String>,
    },
    /// List the maximal equal-rank subalgebras of a simple algebra.
    Subalgebras {
        ambient: String,
        /// Include every single-node deletion, not only the maximal ones.
        #[arg(long)]
        all: bool,
    },
    /// Restrict a character of a simple algebra to an equal-rank subalgebra.
    Branch {
        ambient: String,
        sub: String,
        #[arg(long, conflicts_with = "hw", required_unless_present = "hw")]
        restrict_adjoint: bool,
        #[arg(long)]
        hw: Option<String>,
    },
    /// Run the end-to-end cross-check suite.
    Verify,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{input}: {source}")]
    Parse { input: String, source: ParseError },
    #[error(transparent)]
    Core(#[from] eqrank_core::Error),
    #[error("{0}")]
    Usage(String),
}

/// Text and JSON renderings of one result.
pub struct Output {
    pub text: String,
    pub json: Value,
    pub code: i32,
}

fn out(text: String, json: Value) -> Output {
    Output { text, json, code: 0 }
}

fn rat(x: &Rational) -> Value {
    Value::String(x.to_string())
}

fn weight_json(w: &Weight) -> Value {
    Value::Array(w.coords().iter().map(rat).collect())
}

fn matrix_json(m: &Matrix) -> Value {
    Value::Array((0..m.nrows()).map(|i| Value::Array(m.row(i).iter().map(rat).collect())).collect())
}

fn invariant_json(inv: &EquivClassInvariant) -> Value {
    let counts: serde_json::Map<String, Value> = inv.a_counts.iter().map(|(n, c)| (format!("A{n}"), json!(c))).collect();
    json!({ "rank": inv.rank, "a_counts": counts, "a4_parity": if inv.a4_odd { "odd" } else { "even" } })
}

fn character_json(c: &FormalCharacter) -> Value {
    json!({
        "algebra": c.algebra().to_string(),
        "dim": c.dim(),
        "weights": c.iter().map(|(w, m)| json!({ "weight": weight_json(w), "mult": m })).collect::<Vec<_>>(),
    })
}

fn character_text(c: &FormalCharacter) -> String {
    let mut s = format!("{} character, dim {}, {} distinct weights\n", c.algebra(), c.dim(), c.support_size());
    for (w, m) in c.iter() {
        s.push_str(&format!("{m} x {w}\n"));
    }
    s
}

fn algebra(s: &str) -> Result<SemisimpleAlgebra, CliError> {
    parse_algebra(s).map_err(|source| CliError::Parse {
        input: s.to_string(),
        source,
    })
}

fn labels(s: &str) -> Result<Vec<i64>, CliError> {
    parse_labels(s).map_err(|source| CliError::Parse {
        input: s.to_string(),
        source,
    })
}

fn character(g: &SemisimpleAlgebra, adjoint: bool, hw: Option<&str>) -> Result<FormalCharacter, CliError> {
    if adjoint {
        return Ok(FormalCharacter::adjoint(g));
    }
    let l = labels(hw.ok_or_else(|| CliError::Usage("a highest weight is required".into()))?)?;
    let w = highest_weight(&g.layout(), &l)?;
    Ok(irreducible_character(g, &w)?)
}

fn find_embedding(ambient: &str, sub: &str) -> Result<EqualRankEmbedding, CliError> {
    let t = parse_simple(ambient).map_err(|source| CliError::Parse {
        input: ambient.to_string(),
        source,
    })?;
    let h = algebra(sub)?;
    node_deletion_subalgebras(t)
        .into_iter()
        .find(|e| e.sub() == &h)
        .ok_or_else(|| CliError::Usage(format!("{h} is not a node-deletion subalgebra of {t}")))
}

pub fn execute(cmd: &Command) -> Result<Output, CliError> {
    Ok(match cmd {
        Command::Invariant { algebra: a } => {
            let g = algebra(a)?;
            let inv = invariant(&g);
            out(format!("{g}: {inv}\n"), json!({ "algebra": g.to_string(), "invariant": invariant_json(&inv) }))
        }
        Command::Canonical { algebra: a } => {
            let g = algebra(a)?;
            let c = canonical_form(&g);
            out(format!("{c}\n"), json!({ "algebra": g.to_string(), "canonical": c.to_string() }))
        }
        Command::Equiv {
            left,
            right,
            certify_depth,
        } => {
            let (g, h) = (algebra(left)?, algebra(right)?);
            let (ig, ih) = (invariant(&g), invariant(&h));
            let eq = ig == ih;
            let diffs = ig.differences(&ih);
            let chain = certify_depth.map(|d| rewrite_distance(&g, &h, d));
            let mut text = if eq {
                format!("{g} ~ {h}: equivalent {ig}\n")
            } else {
                format!("{g} !~ {h}: {}\n", diffs.join("; "))
            };
            if let Some(c) = chain {
                text.push_str(&match c {
                    Some(d) => format!("rewrite chain of length {d}\n"),
                    None => "no rewrite chain within the depth bound\n".to_string(),
                });
            }
            Output {
                text,
                json: json!({
                    "left": g.to_string(),
                    "right": h.to_string(),
                    "equivalent": eq,
                    "differences": diffs,
                    "rewrite_distance": chain.flatten(),
                }),
                code: if eq { 0 } else { 1 },
            }
        }
        Command::Reduce { algebra: a } => {
            let g = algebra(a)?;
            let (r, steps) = a_type_reduction(&g);
            let mut text: String = steps.iter().map(|s| format!("{s}\n")).collect();
            text.push_str(&format!("result {r}\n"));
            let js: Vec<Value> = steps
                .iter()
                .map(|s| json!({ "before": s.before.to_string(), "after": s.after.to_string(), "replaced": s.replaced.to_string(), "rule": s.rule }))
                .collect();
            out(text, json!({ "algebra": g.to_string(), "steps": js, "result": r.to_string() }))
        }
        Command::SolveD => {
            let sols = solve_d();
            let text = sols.iter().map(|s| format!("{s}\n")).collect();
            let js: Vec<Value> = sols.iter().map(|s| json!({ "m": s.m, "l": s.l, "k": s.k })).collect();
            out(text, Value::Array(js))
        }
        Command::Char {
            algebra: a,
            highest_weight,
            adjoint,
        } => {
            let g = algebra(a)?;
            let c = character(&g, *adjoint, highest_weight.as_deref())?;
            out(character_text(&c), character_json(&c))
        }
        Command::Gram { algebra: a, adjoint, hw } => {
            let g = algebra(a)?;
            let c = character(&g, *adjoint, hw.as_deref())?;
            let m = CharacterMetric::from_character(&c)?;
            let gammas: Vec<String> = m.block_scalars().iter().map(ToString::to_string).collect();
            let text = format!(
                "dual form (sum of w w^T):\n{}form:\n{}block scalars: {}\n",
                m.dual_form(),
                m.form(),
                gammas.join(", ")
            );
            out(
                text,
                json!({
                    "algebra": g.to_string(),
                    "dual_form": matrix_json(m.dual_form()),
                    "form": matrix_json(m.form()),
                    "block_scalars": m.block_scalars().iter().map(rat).collect::<Vec<_>>(),
                }),
            )
        }
        Command::Subalgebras { ambient, all } => {
            let t = parse_simple(ambient).map_err(|source| CliError::Parse {
                input: ambient.clone(),
                source,
            })?;
            let embs = if *all {
                node_deletion_subalgebras(t)
            } else {
                maximal_equal_rank_subalgebras(t)
            };
            let subs: Vec<String> = embs.iter().map(|e| e.sub().to_string()).collect();
            let text = subs.iter().map(|s| format!("{t} ⊃ {s}\n")).collect();
            out(text, json!({ "ambient": t.to_string(), "subalgebras": subs }))
        }
        Command::Branch {
            ambient,
            sub,
            restrict_adjoint,
            hw,
        } => {
            let e = find_embedding(ambient, sub)?;
            let c = character(&e.ambient_algebra(), *restrict_adjoint, hw.as_deref())?;
            let r = restrict_character(&c, &e)?;
            out(
                format!("{}{}", e.report(), character_text(&r)),
                json!({
                    "ambient": e.ambient().to_string(),
                    "sub": e.sub().to_string(),
                    "simple_roots": e.simple_roots().iter().map(weight_json).collect::<Vec<_>>(),
                    "character": character_json(&r),
                }),
            )
        }
        Command::Verify => {
            let outcomes = run_all();
            let all = outcomes.iter().all(|o| o.ok());
            let text = outcomes.iter().map(|o| format!("{}\n", o.line())).collect();
            let js: Vec<Value> = outcomes
                .iter()
                .map(|o| json!({ "id": o.id, "name": o.name, "passed": o.ok(), "detail": o.detail, "seconds": o.elapsed.as_secs_f64() }))
                .collect();
            Output {
                text,
                json: Value::Array(js),
                code: if all { 0 } else { 1 },
            }
        }
    })
}

/// Parses `args` (including the program name), runs the command and writes
/// the result to `stdout` or the error to `stderr`. Returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{e}");
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(o) => {
            let _ = match cli.format {
                Format::Text => write!(stdout, "{}", o.text),
                Format::Json => writeln!(stdout, "{}", serde_json::to_string_pretty(&o.json).expect("serializable")),
            };
            o.code
        }
        Err(e) => {
            match cli.format {
                Format::Text => {
                    let _ = writeln!(stderr, "error: {e}");
                }
                Format::Json => {
                    let _ = writeln!(stderr, "{}", json!({ "error": e.to_string() }));
                }
            }
            match e {
                CliError::Parse { .. } | CliError::Usage(_) => 2,
                CliError::Core(_) => 3,
            }
        }
    }
}
