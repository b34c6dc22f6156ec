use std::collections::hash_map::RandomState;
use std::hash::{BuildHasher, Hasher};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use osa_core::search::{
    check_proposition, joint_minimum, minimize_forge_count, minimize_total_gb_size, Strategy,
    EXHAUSTIVE_LIMIT,
};
use osa_core::torsion::CHECK_FIELDS;
use osa_core::{Domain, Matroid, VariableOrder};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::input::{parse_input, Format, Input};
use crate::report::{self, document, Output};

pub const DEFAULT_MAX_N: usize = 12;
const DEFAULT_SAMPLES: usize = 100;

#[derive(Debug, Parser)]
#[command(
    name = "osa",
    version,
    about = "Orlik-Solomon ideals of simple matroids: Forge bases, graded dimensions, torsion certificates"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Input file (.circuits, .matrix, .graph or a report .json)
    pub file: PathBuf,
    /// Input format, when the extension does not say
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Enumerate all n! orders (n <= 8)
    #[arg(long, conflicts_with = "samples")]
    pub exhaustive: bool,
    /// Number of random orders
    #[arg(long)]
    pub samples: Option<usize>,
    /// Seed for random orders
    #[arg(long, conflicts_with = "exhaustive")]
    pub seed: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the circuits
    Circuits {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        json: bool,
    },
    /// Forge's reduced Groebner basis for an order
    Gb {
        #[command(flatten)]
        input: InputArgs,
        /// Ground elements from smallest to largest, by label (default: input order)
        #[arg(long)]
        order: Option<String>,
        /// Coefficient field tag: q, z, f2, f3, f<p>
        #[arg(long, default_value = "q")]
        field: String,
        #[arg(long)]
        json: bool,
    },
    /// Graded dimensions over one or more fields
    Dims {
        #[command(flatten)]
        input: InputArgs,
        /// Comma-separated field tags
        #[arg(long, default_value = "q")]
        fields: String,
        #[arg(long)]
        json: bool,
    },
    /// Smith normal form torsion certificates in every degree
    Torsion {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        json: bool,
    },
    /// Search orders minimising the Forge count in a degree or the basis size
    Search {
        #[command(flatten)]
        input: InputArgs,
        /// Degree q: minimise the number of Forge circuits of size q+1
        #[arg(long)]
        degree: Option<usize>,
        /// Minimise the total reduced basis size
        #[arg(long)]
        total: bool,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long)]
        json: bool,
    },
    /// Check that the least Forge count in degree q equals dim (I/Λ⁺I)^q
    Verify {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        degree: usize,
        /// Comma-separated field tags
        #[arg(long, default_value = "q")]
        fields: String,
        #[arg(long)]
        json: bool,
    },
    /// Full report written as JSON
    Report {
        #[command(flatten)]
        input: InputArgs,
        /// Output path for the JSON report
        #[arg(long)]
        json: PathBuf,
        /// Order for the listed basis (default: input order)
        #[arg(long)]
        order: Option<String>,
        #[command(flatten)]
        search: SearchArgs,
    },
}

/// What to print and the exit status.
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

fn max_n() -> Result<usize, CliError> {
    match std::env::var("OSA_MAX_N") {
        Ok(v) => v.trim().parse().map_err(|_| {
            CliError::Input(format!("OSA_MAX_N must be a positive integer, got {v:?}"))
        }),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

fn load(args: &InputArgs) -> Result<Input, CliError> {
    let input = parse_input(&args.file, args.format)?;
    let max = max_n()?;
    if input.matroid.n() > max {
        return Err(CliError::Input(format!(
            "ground set has {} elements, above OSA_MAX_N = {max}",
            input.matroid.n()
        )));
    }
    Ok(input)
}

pub fn parse_fields(tags: &str) -> Result<Vec<Domain>, CliError> {
    let fields = tags
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<Domain>())
        .collect::<Result<Vec<_>, _>>()?;
    if fields.is_empty() {
        return Err(CliError::Input("no field tags given".into()));
    }
    if let Some(z) = fields.iter().find(|f| !f.is_field()) {
        return Err(CliError::Input(format!("{} is not a field", z.tag())));
    }
    Ok(fields)
}

fn order_for(m: &Matroid, text: Option<&str>) -> Result<VariableOrder, CliError> {
    match text {
        Some(t) => Ok(m.parse_order(t)?),
        None => Ok(VariableOrder::identity(m.n())),
    }
}

fn fresh_seed() -> u64 {
    RandomState::new().build_hasher().finish()
}

fn strategy_for(args: &SearchArgs, n: usize, json: bool) -> Result<Strategy, CliError> {
    if args.exhaustive || (args.samples.is_none() && args.seed.is_none()) {
        if n > EXHAUSTIVE_LIMIT {
            return Err(CliError::Input(format!(
                "exhaustive search needs n <= {EXHAUSTIVE_LIMIT} (n = {n}); use --samples N --seed S"
            )));
        }
        return Ok(Strategy::Exhaustive);
    }
    let seed = match (args.seed, json) {
        (Some(s), _) => s,
        (None, true) => {
            return Err(CliError::Input(
                "random search with JSON output requires an explicit --seed".into(),
            ))
        }
        (None, false) => fresh_seed(),
    };
    Ok(Strategy::Random {
        seed,
        samples: args.samples.unwrap_or(DEFAULT_SAMPLES),
    })
}

fn render(json: bool, doc: Value, text: String) -> String {
    if json {
        let mut s = serde_json::to_string_pretty(&doc).expect("serialisable");
        s.push('\n');
        s
    } else {
        text
    }
}

fn simple(command: &str, input: &Input, json: bool, out: Output) -> Outcome {
    Outcome {
        stdout: render(json, document(command, input, out.json, None), out.text),
        code: 0,
    }
}

pub fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Circuits { input, json } => {
            let input = load(&input)?;
            let out = report::circuits(&input.matroid);
            Ok(simple("circuits", &input, json, out))
        }
        Command::Gb {
            input,
            order,
            field,
            json,
        } => {
            let input = load(&input)?;
            let order = order_for(&input.matroid, order.as_deref())?;
            let field: Domain = field.parse()?;
            let out = report::gb(&input.matroid, &order, field)?;
            Ok(simple("gb", &input, json, out))
        }
        Command::Dims {
            input,
            fields,
            json,
        } => {
            let fields = parse_fields(&fields)?;
            let input = load(&input)?;
            let out = report::dims(&input.matroid, &fields)?;
            Ok(simple("dims", &input, json, out))
        }
        Command::Torsion { input, json } => {
            let input = load(&input)?;
            let out = report::torsion(&input.matroid)?;
            Ok(simple("torsion", &input, json, out))
        }
        Command::Search {
            input,
            degree,
            total,
            search,
            json,
        } => {
            if degree.is_none() && !total {
                return Err(CliError::Input(
                    "search needs --degree <q> or --total".into(),
                ));
            }
            let input = load(&input)?;
            let m = &input.matroid;
            let strategy = strategy_for(&search, m.n(), json)?;
            let mut results = Vec::new();
            let mut text = report::strategy_text(strategy);
            if let Some(q) = degree {
                let r = minimize_forge_count(m, q, strategy)?;
                text += &report::search_text(m, &r);
                results.push(report::search_json(m, &r));
            }
            if total {
                let r = minimize_total_gb_size(m, strategy)?;
                text += &report::search_text(m, &r);
                results.push(report::search_json(m, &r));
            }
            let doc = document(
                "search",
                &input,
                json!({ "searches": results }),
                Some(strategy),
            );
            Ok(Outcome {
                stdout: render(json, doc, text),
                code: 0,
            })
        }
        Command::Verify {
            input,
            degree,
            fields,
            json,
        } => {
            let fields = parse_fields(&fields)?;
            let input = load(&input)?;
            let m = &input.matroid;
            let check = check_proposition(m, degree, &fields)?;
            let doc = document(
                "verify",
                &input,
                report::verify_json(m, &check),
                Some(Strategy::Exhaustive),
            );
            Ok(Outcome {
                stdout: render(json, doc, report::verify_text(m, &check)),
                code: if check.holds() { 0 } else { 2 },
            })
        }
        Command::Report {
            input,
            json,
            order,
            search,
        } => {
            let input = load(&input)?;
            let (doc, ok) = full_report(&input, order.as_deref(), &search)?;
            let mut s = serde_json::to_string_pretty(&doc).expect("serialisable");
            s.push('\n');
            std::fs::write(&json, s)
                .map_err(|e| CliError::Input(format!("cannot write {}: {e}", json.display())))?;
            let mut text = report::circuits(&input.matroid).text;
            text += &format!("report written to {}\n", json.display());
            Ok(Outcome {
                stdout: text,
                code: if ok { 0 } else { 2 },
            })
        }
    }
}

/// Everything at once: basis, dimensions over Q and small primes, torsion,
/// order searches and per-degree verification. The flag is false when a
/// verified property failed.
pub fn full_report(
    input: &Input,
    order: Option<&str>,
    search: &SearchArgs,
) -> Result<(Value, bool), CliError> {
    let m = &input.matroid;
    let order = order_for(m, order)?;
    let strategy = strategy_for(search, m.n(), true)?;
    let gb = report::gb(m, &order, Domain::Rational)?;
    let dims = report::dims(m, &CHECK_FIELDS)?;
    let torsion = osa_core::torsion::torsion_report(m)?;
    let total = minimize_total_gb_size(m, strategy)?;
    let joint = joint_minimum(m, strategy)?;
    let degrees: Vec<usize> = joint.per_degree.keys().copied().collect();
    let per_degree = degrees
        .iter()
        .map(|&q| minimize_forge_count(m, q, strategy).map(|r| report::search_json(m, &r)))
        .collect::<Result<Vec<_>, _>>()?;
    let mut ok = torsion.torsion_free() && torsion.ranks_match_fields();
    let verification = if strategy == Strategy::Exhaustive {
        let checks = degrees
            .iter()
            .map(|&q| check_proposition(m, q, &CHECK_FIELDS))
            .collect::<Result<Vec<_>, _>>()?;
        ok &= checks.iter().all(|c| c.holds());
        Value::Array(checks.iter().map(|c| report::verify_json(m, c)).collect())
    } else {
        Value::Null
    };
    let payload = json!({
        "groebner_basis": gb.json,
        "dimensions": dims.json,
        "torsion": report::torsion_json(&torsion),
        "search": {
            "total": report::search_json(m, &total),
            "per_degree": per_degree,
            "joint_minimum": report::joint_json(m, &joint),
        },
        "verification": verification,
    });
    Ok((document("report", input, payload, Some(strategy)), ok))
}
