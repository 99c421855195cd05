//! Command-line front end: `ladder <command> [args] [--ell N] [--plain]`.
//!
//! Output is JSON unless `--plain` is given. Exit status is 0 on success,
//! 1 when a verification finds failures (or an internal invariant breaks),
//! and 2 for usage errors and inputs outside an operation's domain.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ladder_core::*;
use ladder_explorer::*;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "ladder", version, about = "Partition combinatorics for the classical and ladder crystals")]
struct Cli {
    /// Modulus ell (rim-hook length, number of residues).
    #[arg(long, global = true, default_value_t = 3)]
    ell: usize,

    /// Plain text instead of JSON.
    #[arg(long, global = true)]
    plain: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Everything known about one partition.
    Info { partition: Partition },
    /// Core and weight.
    Core { partition: Partition },
    /// JM partitions: test, count, list, decompose.
    Jm {
        #[command(subcommand)]
        action: JmAction,
    },
    /// Crystal graphs.
    Crystal {
        #[command(subcommand)]
        action: CrystalAction,
    },
    /// Push every box to the top of its ladder.
    Regularize { partition: Partition },
    /// Slide unlocked boxes to the bottom of their ladders.
    Deregularize { partition: Partition },
    /// All partitions with the same regularization.
    Regclass { partition: Partition },
    /// Mullineux image of a regular partition.
    Mullineux { partition: Partition },
    /// Run a verification suite.
    Suite {
        #[arg(long, value_enum, default_value_t = SuiteName::Theorems)]
        name: SuiteName,
        #[arg(long, default_value_t = 12)]
        nmax: usize,
    },
}

#[derive(Subcommand)]
enum JmAction {
    Check { partition: Partition },
    Count {
        #[arg(long)]
        core: Partition,
        #[arg(long)]
        weight: usize,
    },
    Enumerate {
        #[arg(long)]
        core: Partition,
        #[arg(long)]
        weight: usize,
    },
    Decompose { partition: Partition },
}

#[derive(Subcommand)]
enum CrystalAction {
    /// Grow the crystal from the empty partition.
    Build {
        #[arg(long, default_value_t = 10)]
        depth: usize,
        #[arg(long, value_enum, default_value_t = ModelArg::Classical)]
        model: ModelArg,
        /// Also write the graph in DOT format to this file.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Check that regularization carries one crystal onto the other.
    Verify {
        #[arg(long, default_value_t = 10)]
        depth: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Classical,
    Ladder,
}

impl From<ModelArg> for CrystalModel {
    fn from(m: ModelArg) -> Self {
        match m {
            ModelArg::Classical => CrystalModel::Classical,
            ModelArg::Ladder => CrystalModel::Ladder,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteName {
    Theorems,
    Golden,
    Equivalence,
    Regularization,
    Crystal,
    Mullineux,
}

/// What a command produced: a JSON value, its plain rendering, and whether
/// it represents a failed verification.
struct Outcome {
    json: Value,
    plain: String,
    failed: bool,
}

impl Outcome {
    fn ok(json: Value, plain: impl Into<String>) -> Self {
        Outcome { json, plain: plain.into(), failed: false }
    }

    fn report(report: &VerificationReport) -> Self {
        Outcome {
            json: serde_json::to_value(report).expect("reports serialize"),
            plain: report.to_string(),
            failed: !report.passed(),
        }
    }
}

fn list(parts: &[Partition]) -> String {
    parts.iter().map(Partition::to_string).collect::<Vec<_>>().join("\n")
}

fn info(lambda: &Partition, m: Modulus) -> Result<Outcome> {
    let core = ell_core(lambda, m);
    let hooks: Vec<Value> = removable_rim_hooks(lambda, m)
        .iter()
        .map(|h| json!({"boxes": h.boxes(), "shape": h.shape()}))
        .collect();
    let mut out = json!({
        "partition": lambda,
        "ell": m.ell(),
        "size": lambda.size(),
        "length": lambda.len(),
        "conjugate": lambda.transpose(),
        "hook_lengths": lambda.hook_grid(),
        "residue_content": residue_content(lambda, m),
        "ladder_counts": lambda.ladder_counts(m),
        "is_regular": lambda.is_regular(m),
        "core": core.core,
        "weight": core.weight,
        "is_core": is_core(lambda, m),
        "removable_rim_hooks": hooks,
        "is_ell_partition": is_ell_partition(lambda, m),
        "is_ladder_node": is_ladder_node(lambda, m),
        "regularized": regularize(lambda, m),
        "deregularized": deregularize(lambda, m)?,
    });
    let fields = out.as_object_mut().expect("object literal");
    if m.ell() >= 3 {
        fields.insert("is_jm".into(), json!(is_jm(lambda, m)?));
        fields.insert("jm_witness".into(), json!(fayers_witness(lambda, m)?));
        fields.insert("is_generalized_ell_partition".into(), json!(is_generalized_ell_partition(lambda, m)?));
        fields.insert("is_l_partition".into(), json!(is_l_partition(lambda, m)?));
        match is_weak_ell_partition(lambda, m) {
            Ok(weak) => {
                fields.insert("is_weak_ell_partition".into(), json!(weak));
            }
            Err(Error::NotRegular(_)) => {
                fields.insert("is_weak_ell_partition".into(), json!(false));
                fields.insert("note".into(), json!("not regular, so not a weak ell-partition"));
            }
            Err(e) => return Err(e),
        }
    }
    let plain = fields
        .iter()
        .map(|(k, v)| format!("{k}: {}", plain_value(v)))
        .collect::<Vec<_>>()
        .join("\n");
    Ok(Outcome::ok(out, plain))
}

fn plain_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    let m = Modulus::new(cli.ell)?;
    let outcome = match &cli.command {
        Command::Info { partition } => info(partition, m)?,
        Command::Core { partition } => {
            let result = ell_core(partition, m);
            let plain = format!("{} {}", result.core, result.weight);
            Outcome::ok(json!({"partition": partition, "ell": m.ell(), "core": result.core, "weight": result.weight}), plain)
        }
        Command::Jm { action } => match action {
            JmAction::Check { partition } => {
                let witness = fayers_witness(partition, m)?;
                let generalized = is_generalized_ell_partition(partition, m)?;
                Outcome::ok(
                    json!({
                        "partition": partition,
                        "ell": m.ell(),
                        "is_jm": witness.is_none(),
                        "witness": witness,
                        "is_generalized_ell_partition": generalized,
                    }),
                    witness.is_none().to_string(),
                )
            }
            JmAction::Count { core, weight } => {
                let count = count_jm(core, *weight, m)?;
                Outcome::ok(json!({"core": core, "weight": weight, "ell": m.ell(), "count": count}), count.to_string())
            }
            JmAction::Enumerate { core, weight } => {
                let all = enumerate_jm(core, *weight, m)?;
                Outcome::ok(json!({"core": core, "weight": weight, "ell": m.ell(), "partitions": all}), list(&all))
            }
            JmAction::Decompose { partition } => {
                let d = decompose_jm(partition, m)?;
                let plain = format!("mu={} r={} s={} rho={} sigma={}", d.mu, d.r, d.s, d.rho, d.sigma);
                Outcome::ok(json!({"partition": partition, "ell": m.ell(), "decomposition": d}), plain)
            }
        },
        Command::Crystal { action } => match action {
            CrystalAction::Build { depth, model, dot } => {
                let graph = build_crystal(m, *depth, (*model).into());
                if let Some(path) = dot {
                    fs::write(path, export_dot(&graph))
                        .map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display())))?;
                }
                let sizes = graph.level_sizes();
                let plain = graph
                    .levels
                    .iter()
                    .enumerate()
                    .map(|(n, level)| format!("{n}: {}", level.iter().map(Partition::to_string).collect::<Vec<_>>().join(" ")))
                    .collect::<Vec<_>>()
                    .join("\n");
                let mut json = serde_json::to_value(&graph).expect("graphs serialize");
                json.as_object_mut()
                    .expect("struct serializes to object")
                    .insert("level_sizes".into(), json!(sizes));
                Outcome::ok(json, plain)
            }
            CrystalAction::Verify { depth } => Outcome::report(&verify_isomorphism(m, *depth)),
        },
        Command::Regularize { partition } => {
            let reg = regularize(partition, m);
            Outcome::ok(json!({"partition": partition, "ell": m.ell(), "regularized": reg}), reg.to_string())
        }
        Command::Deregularize { partition } => {
            let low = deregularize(partition, m)?;
            let locks = lock_labels(partition, m);
            Outcome::ok(
                json!({
                    "partition": partition,
                    "ell": m.ell(),
                    "deregularized": low,
                    "locked": locks.locked_boxes(),
                    "unlocked": locks.unlocked_boxes(),
                }),
                low.to_string(),
            )
        }
        Command::Regclass { partition } => {
            let class = reg_class(partition, m)?;
            Outcome::ok(json!({"partition": partition, "ell": m.ell(), "class": class}), list(&class.members))
        }
        Command::Mullineux { partition } => {
            let image = mullineux(partition, m)?;
            Outcome::ok(json!({"partition": partition, "ell": m.ell(), "mullineux": image}), image.to_string())
        }
        Command::Suite { name, nmax } => {
            let report = match name {
                SuiteName::Theorems => theorem_suite(m, *nmax)?,
                SuiteName::Golden => golden_suite(),
                SuiteName::Equivalence => equivalence_suite(m, *nmax)?,
                SuiteName::Regularization => regularization_suite(m, *nmax),
                SuiteName::Crystal => crystal_suite(m, *nmax)?,
                SuiteName::Mullineux => mullineux_suite(m, *nmax)?,
            };
            Outcome::report(&report)
        }
    };
    Ok(outcome)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            if cli.plain {
                println!("{}", outcome.plain);
            } else {
                println!("{}", serde_json::to_string_pretty(&outcome.json).expect("values serialize"));
            }
            ExitCode::from(u8::from(outcome.failed))
        }
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::Invariant(_) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}
