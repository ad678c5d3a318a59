//! Argument definitions and command dispatch.

use std::collections::HashMap;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mixbraid::cabling::cable;
use mixbraid::classifier::{
    classify, cross_validate, BupVerdict, DomainSpace, Target, TripleDescriptor,
};
use mixbraid::sample::DEFAULT_SEED;
use mixbraid::surface::{SurfaceKind, SurfacePresentation};
use mixbraid::{are_equal, normal_form, BraidWord, MixedContext, Z2};
use serde_json::{json, Value};

use crate::checks::run_all;
use crate::parse::{parse_expr, BraidExpr};
use crate::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "mixbraid",
    version,
    about = "Braid words, mixed braid subgroups and Borsuk-Ulam verdicts"
)]
pub struct Cli {
    /// Emit one JSON record instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct WordArgs {
    /// Braid expression, e.g. "s1 s2^-1 (D3)^2".
    pub word: String,
    /// Number of strands; defaults to the fewest the expression needs.
    #[arg(long)]
    pub strands: Option<usize>,
}

#[derive(Debug, Args)]
pub struct BlockArgs {
    pub word: String,
    /// Block size; the word lives on 2n strands.
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the left normal form: the power of the half twist, then one permutation per factor.
    Nf(WordArgs),
    /// Exit 0 when two words are the same braid, 1 otherwise.
    Eq {
        a: String,
        b: String,
        #[arg(long)]
        strands: Option<usize>,
    },
    /// Print the induced permutation in one-line notation.
    Perm(WordArgs),
    /// Exit 0 when the braid is pure, 1 otherwise.
    Pure(WordArgs),
    /// Exit 0 when the braid preserves both blocks of n strands, 1 otherwise.
    Bnn(BlockArgs),
    /// Exit 0 when the braid preserves or swaps the two blocks, 1 otherwise.
    Bnn2(BlockArgs),
    /// Print the crossing parity epsilon of a block-preserving braid.
    Eps(BlockArgs),
    /// Print the block-swap sign of a braid that preserves or swaps the blocks.
    Pi(BlockArgs),
    /// Print the k-fold cabling of a braid.
    Cable {
        word: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        strands: Option<usize>,
    },
    /// Borsuk-Ulam property of n-valued maps.
    Bup {
        #[command(subcommand)]
        action: BupCommand,
    },
    /// Run the regression table of identities, witnesses and classifier rows.
    VerifyPaper {
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum BupCommand {
    /// Classify a triple and print the verdict with the rules that fired.
    Classify(DescriptorArgs),
    /// Classify a plane-target triple and back the verdict with explicit witnesses.
    Validate(DescriptorArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum DomainArg {
    Sphere,
    Surface,
}

#[derive(Debug, Args)]
pub struct DescriptorArgs {
    #[arg(long, value_enum)]
    pub domain: DomainArg,
    /// Orbit-space presentation: I (orientable), II (u, v, ...) or III (c, ...).
    #[arg(long)]
    pub kind: Option<String>,
    /// Number of handle pairs a1..a2m.
    #[arg(long)]
    pub m: Option<usize>,
    /// Values of theta, e.g. "u=1,v=0"; unnamed generators are 0.
    #[arg(long)]
    pub theta: Option<String>,
    /// plane, sphere, rp2, or:G or nonor:G.
    #[arg(long)]
    pub target: String,
    #[arg(long)]
    pub n: usize,
}

/// What a command prints and how it exits.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub text: String,
    pub json: Value,
}

fn record(command: &str, inputs: Value, result: Value, provenance: &[&str]) -> Value {
    json!({
        "command": command,
        "inputs": inputs,
        "result": result,
        "provenance": provenance,
    })
}

fn words(texts: &[&str], strands: Option<usize>) -> Result<(Vec<BraidWord>, usize), CliError> {
    let exprs = texts
        .iter()
        .map(|t| parse_expr(t))
        .collect::<Result<Vec<_>, _>>()?;
    let strands =
        strands.unwrap_or_else(|| exprs.iter().map(BraidExpr::min_strands).max().unwrap_or(1));
    let ws = exprs
        .iter()
        .map(|e| e.elaborate(strands))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((ws, strands))
}

fn one_word(args: &WordArgs) -> Result<(BraidWord, usize), CliError> {
    let (mut ws, strands) = words(&[&args.word], args.strands)?;
    Ok((ws.remove(0), strands))
}

fn block_word(args: &BlockArgs) -> Result<(BraidWord, MixedContext), CliError> {
    let ctx = MixedContext::new(args.n)?;
    let (mut ws, _) = words(&[&args.word], Some(ctx.strands()))?;
    Ok((ws.remove(0), ctx))
}

fn predicate(command: &str, inputs: Value, value: bool, provenance: &str) -> Outcome {
    Outcome {
        code: if value { 0 } else { 1 },
        text: format!("{value}\n"),
        json: record(command, inputs, json!(value), &[provenance]),
    }
}

fn sign(command: &str, inputs: Value, value: Z2, provenance: &str) -> Outcome {
    Outcome {
        code: 0,
        text: format!("{value}\n"),
        json: record(command, inputs, json!(value.value()), &[provenance]),
    }
}

fn surface_kind(kind: &str, m: usize) -> Result<SurfaceKind, CliError> {
    match kind {
        "I" | "i" | "1" => Ok(SurfaceKind::Orientable { m }),
        "II" | "ii" | "2" => Ok(SurfaceKind::NonOrientableEven { m }),
        "III" | "iii" | "3" => Ok(SurfaceKind::NonOrientableOdd { m }),
        other => Err(CliError::Usage(format!(
            "unknown kind {other:?}; use I, II or III"
        ))),
    }
}

fn parse_theta(text: &str) -> Result<HashMap<String, Z2>, CliError> {
    let mut out = HashMap::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (g, v) = part
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("expected g=0|1, got {part:?}")))?;
        let v = match v.trim() {
            "0" => Z2::ZERO,
            "1" => Z2::ONE,
            other => {
                return Err(CliError::Usage(format!(
                    "theta value {other:?} is not 0 or 1"
                )))
            }
        };
        if out.insert(g.trim().to_string(), v).is_some() {
            return Err(CliError::Usage(format!("theta assigns {} twice", g.trim())));
        }
    }
    Ok(out)
}

fn descriptor(args: &DescriptorArgs) -> Result<TripleDescriptor, CliError> {
    let target: Target = args.target.parse()?;
    let domain = match args.domain {
        DomainArg::Sphere => {
            if args.kind.is_some() || args.m.is_some() || args.theta.is_some() {
                return Err(CliError::Usage(
                    "--kind, --m and --theta only apply to --domain surface".into(),
                ));
            }
            DomainSpace::Sphere
        }
        DomainArg::Surface => {
            let kind = args
                .kind
                .as_deref()
                .ok_or_else(|| CliError::Usage("--domain surface needs --kind".into()))?;
            let m = args
                .m
                .ok_or_else(|| CliError::Usage("--domain surface needs --m".into()))?;
            let theta = parse_theta(args.theta.as_deref().unwrap_or(""))?;
            DomainSpace::Surface(SurfacePresentation::with_theta_map(
                surface_kind(kind, m)?,
                &theta,
            )?)
        }
    };
    Ok(TripleDescriptor::new(domain, target, args.n))
}

fn descriptor_inputs(args: &DescriptorArgs) -> Value {
    json!({
        "domain": match args.domain { DomainArg::Sphere => "sphere", DomainArg::Surface => "surface" },
        "kind": args.kind,
        "m": args.m,
        "theta": args.theta,
        "target": args.target,
        "n": args.n,
    })
}

fn verdict_json(v: &BupVerdict) -> Value {
    json!({
        "split": v.split.to_string(),
        "nonsplit": v.nonsplit.to_string(),
        "n_bup": v.has_n_bup(),
    })
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Nf(args) => {
            let (w, strands) = one_word(args)?;
            let nf = normal_form(&w);
            let factors: Vec<Value> = nf
                .factors()
                .iter()
                .map(|f| json!(f.permutation().images()))
                .collect();
            Ok(Outcome {
                code: 0,
                text: format!("{nf}\n"),
                json: record(
                    "nf",
                    json!({"word": args.word, "strands": strands}),
                    json!({"inf": nf.inf(), "factors": factors}),
                    &["left normal form"],
                ),
            })
        }
        Command::Eq { a, b, strands } => {
            let (ws, strands) = words(&[a, b], *strands)?;
            let equal = are_equal(&ws[0], &ws[1])?;
            Ok(predicate(
                "eq",
                json!({"a": a, "b": b, "strands": strands}),
                equal,
                "left normal form comparison",
            ))
        }
        Command::Perm(args) => {
            let (w, strands) = one_word(args)?;
            let p = w.permutation();
            Ok(Outcome {
                code: 0,
                text: format!("{p}\n"),
                json: record(
                    "perm",
                    json!({"word": args.word, "strands": strands}),
                    json!(p.images()),
                    &["induced permutation"],
                ),
            })
        }
        Command::Pure(args) => {
            let (w, strands) = one_word(args)?;
            Ok(predicate(
                "pure",
                json!({"word": args.word, "strands": strands}),
                w.is_pure(),
                "induced permutation is the identity",
            ))
        }
        Command::Bnn(args) => {
            let (w, ctx) = block_word(args)?;
            Ok(predicate(
                "bnn",
                json!({"word": args.word, "n": args.n}),
                ctx.in_bnn(&w)?,
                "permutation preserves both blocks",
            ))
        }
        Command::Bnn2(args) => {
            let (w, ctx) = block_word(args)?;
            Ok(predicate(
                "bnn2",
                json!({"word": args.word, "n": args.n}),
                ctx.in_bnn2(&w)?,
                "permutation preserves or swaps the blocks",
            ))
        }
        Command::Eps(args) => {
            let (w, ctx) = block_word(args)?;
            Ok(sign(
                "eps",
                json!({"word": args.word, "n": args.n}),
                ctx.epsilon(&w)?,
                "half the signed cross-block crossings per strand pair, summed mod 2",
            ))
        }
        Command::Pi(args) => {
            let (w, ctx) = block_word(args)?;
            Ok(sign(
                "pi",
                json!({"word": args.word, "n": args.n}),
                ctx.pi_sign(&w)?,
                "block swap sign of the permutation",
            ))
        }
        Command::Cable { word, k, strands } => {
            let (ws, strands) = words(&[word], *strands)?;
            let c = cable(&ws[0], *k)?;
            let printed = if c.is_empty() {
                "e".to_string()
            } else {
                BraidExpr::from_word(&c).to_string()
            };
            Ok(Outcome {
                code: 0,
                text: format!("{printed}\n"),
                json: record(
                    "cable",
                    json!({"word": word, "strands": strands, "k": k}),
                    json!({"word": printed, "strands": c.strands()}),
                    &["each crossing replaced by a crossing of k-strand ribbons"],
                ),
            })
        }
        Command::Bup { action } => match action {
            BupCommand::Classify(args) => {
                let t = descriptor(args)?;
                let v = classify(&t)?;
                Ok(Outcome {
                    code: 0,
                    text: v.to_string(),
                    json: record(
                        "bup classify",
                        descriptor_inputs(args),
                        verdict_json(&v),
                        &v.provenance,
                    ),
                })
            }
            BupCommand::Validate(args) => {
                let t = descriptor(args)?;
                let report = cross_validate(&t)?;
                let mut text = report.verdict.to_string();
                for c in &report.checks {
                    text.push_str(&format!("check: {}: {}\n", c.name, c.detail));
                }
                let checks: Vec<Value> = report
                    .checks
                    .iter()
                    .map(|c| json!({"name": c.name, "detail": c.detail}))
                    .collect();
                let mut result = verdict_json(&report.verdict);
                result["checks"] = json!(checks);
                Ok(Outcome {
                    code: 0,
                    text,
                    json: record(
                        "bup validate",
                        descriptor_inputs(args),
                        result,
                        &report.verdict.provenance,
                    ),
                })
            }
        },
        Command::VerifyPaper { max_n, seed } => {
            let results = run_all(*max_n, *seed);
            let passed = results.iter().filter(|r| r.passed).count();
            let mut text = String::new();
            for r in &results {
                let status = if r.passed { "PASS" } else { "FAIL" };
                text.push_str(&format!("{status}  {}  ({})\n", r.name, r.detail));
            }
            text.push_str(&format!("{passed}/{} checks passed\n", results.len()));
            let rows: Vec<Value> = results
                .iter()
                .map(|r| json!({"name": r.name, "passed": r.passed, "detail": r.detail}))
                .collect();
            Ok(Outcome {
                code: if passed == results.len() { 0 } else { 1 },
                text,
                json: record(
                    "verify-paper",
                    json!({"max_n": max_n, "seed": seed}),
                    json!({"passed": passed, "total": results.len(), "checks": rows}),
                    &["regression table"],
                ),
            })
        }
    }
}
