//! JSON payloads and plain-text renderings for each command.
//!
//! Every document is built as a `serde_json::Value`, whose maps keep keys
//! sorted, so serialisation is canonical.

use std::fmt::Write as _;

use num_bigint::BigInt;
use osa_core::osideal::{forge_basis, graded_dims, reduced_gb_oracle, GradedDims, GroebnerBasis};
use osa_core::search::{JointMinimum, PropositionCheck, SearchResult, Strategy};
use osa_core::torsion::{torsion_report, SnfResult, TorsionReport};
use osa_core::{Domain, ElementSet, Matroid, VariableOrder};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::input::{Input, Source};

pub const TOOL_NAME: &str = "osa";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// One command's result in both renderings.
pub struct Output {
    pub json: Value,
    pub text: String,
}

fn labels_of(m: &Matroid, s: ElementSet) -> Vec<&str> {
    s.iter().map(|e| m.label(e)).collect()
}

fn set_json(m: &Matroid, s: ElementSet) -> Value {
    json!({
        "indices": s.iter().map(|e| e + 1).collect::<Vec<_>>(),
        "labels": labels_of(m, s),
    })
}

fn order_labels(m: &Matroid, o: &VariableOrder) -> Vec<String> {
    o.sequence()
        .iter()
        .map(|&e| m.label(e).to_string())
        .collect()
}

fn order_text(m: &Matroid, o: &VariableOrder) -> String {
    order_labels(m, o).join(" < ")
}

fn big_json(v: &BigInt) -> Value {
    match i64::try_from(v) {
        Ok(x) => json!(x),
        Err(_) => json!(v.to_string()),
    }
}

pub fn document(command: &str, input: &Input, payload: Value, strategy: Option<Strategy>) -> Value {
    json!({
        "tool": { "name": TOOL_NAME, "version": TOOL_VERSION },
        "command": command,
        "input": input_echo(input),
        "matroid": matroid_summary(&input.matroid),
        "strategy": strategy,
        "result": payload,
    })
}

pub fn input_echo(input: &Input) -> Value {
    let m = &input.matroid;
    let mut echo = json!({
        "format": input.format.name(),
        "n": m.n(),
        "labels": m.labels(),
    });
    match &input.source {
        Source::Matrix(rows) => {
            let rows: Vec<Vec<String>> = rows
                .iter()
                .map(|r| r.iter().map(|x| x.to_string()).collect())
                .collect();
            echo["rows"] = json!(rows);
        }
        Source::Graph { vertices, edges } => {
            echo["vertices"] = json!(vertices);
            echo["edges"] = json!(edges
                .iter()
                .map(|&(a, b)| [a + 1, b + 1])
                .collect::<Vec<_>>());
        }
        Source::Circuits | Source::Report => {}
    }
    echo
}

/// `n`, rank, labels, circuit census and the circuits in (length, lex) order.
pub fn matroid_summary(m: &Matroid) -> Value {
    let census: Vec<Value> = m
        .circuit_census()
        .0
        .iter()
        .map(|(len, count)| json!({ "length": len, "count": count }))
        .collect();
    json!({
        "n": m.n(),
        "rank": m.rank(),
        "labels": m.labels(),
        "circuit_census": census,
        "circuits": m.circuits().iter().map(|&c| set_json(m, c)).collect::<Vec<_>>(),
    })
}

fn summary_text(m: &Matroid) -> String {
    let census: Vec<String> = m
        .circuit_census()
        .0
        .iter()
        .map(|(len, count)| format!("{count} of size {len}"))
        .collect();
    let census = if census.is_empty() {
        "none".to_string()
    } else {
        census.join(", ")
    };
    format!(
        "matroid: n = {}, rank = {}, labels {}\ncircuits: {} ({census})\n",
        m.n(),
        m.rank(),
        m.labels().join(" "),
        m.circuits().len()
    )
}

/// Rebuilds a matroid from the `matroid` section of a report.
pub fn matroid_from_report(doc: &Value) -> Result<Matroid, CliError> {
    let section = doc
        .get("matroid")
        .ok_or_else(|| CliError::Input("report has no \"matroid\" section".into()))?;
    let bad = |what: &str| CliError::Input(format!("report matroid section: bad {what}"));
    let n = section["n"].as_u64().ok_or_else(|| bad("n"))? as usize;
    let labels = section["labels"]
        .as_array()
        .ok_or_else(|| bad("labels"))?
        .iter()
        .map(|l| l.as_str().map(str::to_string).ok_or_else(|| bad("labels")))
        .collect::<Result<Vec<_>, _>>()?;
    let circuits = section["circuits"]
        .as_array()
        .ok_or_else(|| bad("circuits"))?
        .iter()
        .map(|c| {
            let ix = c["indices"].as_array().ok_or_else(|| bad("circuit"))?;
            let mut s = ElementSet::EMPTY;
            for i in ix {
                let i = i.as_u64().ok_or_else(|| bad("circuit index"))? as usize;
                if i == 0 || i > n || n > osa_core::bitset::MAX_ELEMENTS {
                    return Err(bad("circuit index"));
                }
                s = s.with(i - 1);
            }
            Ok(s)
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(Matroid::from_circuits(n, circuits)?.with_labels(labels)?)
}

pub fn circuits(m: &Matroid) -> Output {
    let json = json!({ "homotopy_degree": m.homotopy_degree() });
    let mut text = summary_text(m);
    for &c in m.circuits() {
        let _ = writeln!(text, "  {}", m.format_set(c));
    }
    Output { json, text }
}

fn basis_json(m: &Matroid, gb: &GroebnerBasis) -> Vec<Value> {
    let circuits = gb.circuits().unwrap_or(&[]);
    gb.elements()
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let terms: Vec<Value> = g
                .terms()
                .map(|(mono, c)| json!({ "monomial": labels_of(m, mono.set()), "coefficient": c.to_string() }))
                .collect();
            let lead = osa_core::exterior::initial_monomial(gb.order(), g).expect("nonzero");
            json!({
                "circuit": circuits.get(i).map(|&c| set_json(m, c)),
                "initial": labels_of(m, lead.set()),
                "terms": terms,
                "text": g.display_with(m.labels()).to_string(),
            })
        })
        .collect()
}

/// Forge's basis for `order` over `field`, checked against the linear-algebra
/// oracle when `field` is a field.
pub fn gb(m: &Matroid, order: &VariableOrder, field: Domain) -> Result<Output, CliError> {
    let forge = forge_basis(m, order).to_domain(field)?;
    let oracle_agrees = if field.is_field() {
        Some(forge.same_elements(&reduced_gb_oracle(m, order, field)?))
    } else {
        None
    };
    if oracle_agrees == Some(false) {
        return Err(osa_core::Error::Invariant(
            "Forge basis differs from the reduced Groebner basis".into(),
        )
        .into());
    }
    let census: Vec<Value> = m
        .forge_census(order)
        .0
        .iter()
        .map(|(len, count)| json!({ "length": len, "count": count }))
        .collect();
    let json = json!({
        "order": order_labels(m, order),
        "field": field.tag(),
        "size": forge.len(),
        "census": census,
        "oracle_agrees": oracle_agrees,
        "elements": basis_json(m, &forge),
    });
    let mut text = summary_text(m);
    let _ = writeln!(text, "order: {}", order_text(m, order));
    let _ = writeln!(text, "field: {field}");
    let check = match oracle_agrees {
        Some(_) => ", equal to the linear-algebra reduced basis",
        None => "",
    };
    let _ = writeln!(
        text,
        "reduced Groebner basis: {} elements{check}",
        forge.len()
    );
    let circuits = forge.circuits().unwrap_or(&[]);
    for (g, &c) in forge.elements().iter().zip(circuits) {
        let _ = writeln!(
            text,
            "  {}  {}",
            m.format_set(c),
            g.display_with(m.labels())
        );
    }
    Ok(Output { json, text })
}

fn dims_table_text(text: &mut String, dims: &GradedDims) {
    let _ = writeln!(text, "field {}:", dims.field);
    let _ = writeln!(
        text,
        "  {:>2} {:>6} {:>6} {:>6} {:>6} {:>6} {:>6}",
        "q", "Λ", "I", "Λ⁺I", "A", "A₊", "I/Λ⁺I"
    );
    for d in &dims.degrees {
        let _ = writeln!(
            text,
            "  {:>2} {:>6} {:>6} {:>6} {:>6} {:>6} {:>6}",
            d.degree,
            d.exterior,
            d.ideal,
            d.decomposable,
            d.algebra,
            d.decomposable_algebra,
            d.quotient
        );
    }
}

fn dims_json(dims: &GradedDims) -> Value {
    json!({ "field": dims.field.tag(), "degrees": dims.degrees })
}

pub fn dims(m: &Matroid, fields: &[Domain]) -> Result<Output, CliError> {
    let tables = fields
        .iter()
        .map(|&f| graded_dims(m, f, None))
        .collect::<Result<Vec<_>, _>>()?;
    let agree = tables.windows(2).all(|w| w[0].same_table(&w[1]));
    let json = json!({
        "tables": tables.iter().map(dims_json).collect::<Vec<_>>(),
        "fields_agree": agree,
    });
    let mut text = summary_text(m);
    for t in &tables {
        dims_table_text(&mut text, t);
    }
    let _ = writeln!(text, "tables agree across fields: {agree}");
    Ok(Output { json, text })
}

fn snf_json(snf: &SnfResult) -> Value {
    json!({
        "rows": snf.rows,
        "cols": snf.cols,
        "rank": snf.rank(),
        "unit_divisors": snf.divisors.iter().filter(|d| *d == &BigInt::from(1)).count(),
        "torsion": snf.torsion().iter().map(big_json).collect::<Vec<_>>(),
    })
}

pub fn torsion_json(report: &TorsionReport) -> Value {
    let degrees: Vec<Value> = report
        .degrees
        .iter()
        .map(|d| {
            json!({
                "degree": d.degree,
                "aplus": snf_json(&d.aplus),
                "aplus_free_rank": d.aplus_free_rank(),
                "quotient": snf_json(&d.quotient.snf),
                "quotient_free_rank": d.quotient.free_rank(),
                "ideal_rank": d.quotient.ideal_rank,
                "ideal_saturated": d.ideal_saturated,
                "torsion_free": d.torsion_free(),
            })
        })
        .collect();
    json!({
        "degrees": degrees,
        "torsion_free": report.torsion_free(),
        "ranks_match_fields": report.ranks_match_fields(),
        "fields_agree": report.fields_agree(),
        "checked_fields": report.field_dims.iter().map(|t| t.field.tag()).collect::<Vec<_>>(),
    })
}

pub fn torsion(m: &Matroid) -> Result<Output, CliError> {
    let report = torsion_report(m)?;
    let mut text = summary_text(m);
    let _ = writeln!(
        text,
        "  {:>2} {:>10} {:>8} {:>12} {:>9}",
        "q", "A₊ rank", "A₊ tors", "I/Λ⁺I rank", "I/Λ⁺I tors"
    );
    for d in &report.degrees {
        let tors = |s: &SnfResult| {
            let t = s.torsion();
            if t.is_empty() {
                "-".to_string()
            } else {
                t.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            }
        };
        let _ = writeln!(
            text,
            "  {:>2} {:>10} {:>8} {:>12} {:>9}",
            d.degree,
            d.aplus_free_rank(),
            tors(&d.aplus),
            d.quotient.free_rank(),
            tors(&d.quotient.snf)
        );
    }
    let _ = writeln!(text, "torsion free: {}", report.torsion_free());
    let _ = writeln!(
        text,
        "integer ranks match dimensions over Q, F_2, F_3, F_5: {}",
        report.ranks_match_fields()
    );
    Ok(Output {
        json: torsion_json(&report),
        text,
    })
}

pub fn search_json(m: &Matroid, r: &SearchResult) -> Value {
    let histogram: Vec<Value> = r
        .histogram
        .iter()
        .map(|(count, orders)| json!({ "count": count, "orders": orders }))
        .collect();
    json!({
        "objective": match r.degree() {
            Some(q) => json!({ "degree": q }),
            None => json!("total"),
        },
        "best_order": order_labels(m, &r.best_order),
        "best_count": r.best_count,
        "orders_examined": r.orders_examined,
        "histogram": histogram,
    })
}

pub fn search_text(m: &Matroid, r: &SearchResult) -> String {
    let what = match r.degree() {
        Some(q) => format!("Forge circuits of size {}", q + 1),
        None => "reduced Groebner basis size".to_string(),
    };
    let histogram: Vec<String> = r
        .histogram
        .iter()
        .map(|(c, k)| format!("{c}:{k}"))
        .collect();
    format!(
        "minimum {what}: {} at {}\n  orders examined: {}; histogram count:orders {}\n",
        r.best_count,
        order_text(m, &r.best_order),
        r.orders_examined,
        histogram.join(" ")
    )
}

pub fn strategy_text(s: Strategy) -> String {
    match s {
        Strategy::Exhaustive => "strategy: exhaustive\n".to_string(),
        Strategy::Random { seed, samples } => {
            format!("strategy: random, {samples} samples, seed {seed}\n")
        }
    }
}

pub fn verify_json(m: &Matroid, c: &PropositionCheck) -> Value {
    let dims: Vec<Value> = c
        .field_dims
        .iter()
        .map(|(f, d)| json!({ "field": f.tag(), "quotient_dim": d }))
        .collect();
    json!({
        "degree": c.degree,
        "search": search_json(m, &c.search),
        "field_dims": dims,
        "minimum_attains_dimension": c.minimum_attains_dimension(),
        "lower_bound_holds": c.lower_bound_holds(),
        "proposition_verified": c.holds(),
    })
}

pub fn verify_text(m: &Matroid, c: &PropositionCheck) -> String {
    let mut text = search_text(m, &c.search);
    for (f, d) in &c.field_dims {
        let _ = writeln!(text, "  dim (I/Λ⁺I)^{} over {f}: {d}", c.degree);
    }
    let _ = writeln!(
        text,
        "proposition verified in degree {}: {}",
        c.degree,
        c.holds()
    );
    text
}

pub fn joint_json(m: &Matroid, j: &JointMinimum) -> Value {
    let per: Vec<Value> = j
        .per_degree
        .iter()
        .map(|(q, min)| json!({ "degree": q, "minimum": min }))
        .collect();
    json!({
        "per_degree": per,
        "attained_by": j.attained_by.as_ref().map(|o| order_labels(m, o)),
    })
}
