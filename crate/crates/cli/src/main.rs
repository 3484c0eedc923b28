//! Command-line front end: h-vectors, Hilbert series, Gorenstein
//! classification, closed-form families, exhaustive surveys, and the
//! bundled-table audit, with text/JSON/CSV output.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use ssq_core::enumerate::{audit_appendix, appendix_table, classify_all, SurveyRow};
use ssq_core::families::{hvec_hook, hvec_onebox, hvec_v2k, hvec_v2k_square, hvec_veronese};
use ssq_core::hilbert::{direct_hf_capped, DEFAULT_WORK_CAP};
use ssq_core::verify::{run_all, VerifyConfig};
use ssq_core::{
    classify, closure, expand, hilbert_series, parse_generators, render_ascii, Diagram, Error,
    HVector, HilbertSeries, Monomial,
};

#[derive(Parser)]
#[command(name = "ssq", version, about = "h-vectors and Gorenstein classification of \
algebras generated by strongly stable sets of quadratic monomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    V2k,
    Veronese,
    V2kSquare,
    Hook,
    Onebox,
}

#[derive(Subcommand)]
enum Command {
    /// h-vector and Hilbert series of the diagram spanned by the generators
    Hvector {
        /// generators as "i,j;i,j;..." (1-based)
        #[arg(long)]
        gens: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Full Gorenstein classification report
    Classify {
        #[arg(long)]
        gens: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Closed-form Hilbert series of a named family
    Series {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        k: Option<u64>,
        /// dimension (veronese only)
        #[arg(long)]
        n: Option<u64>,
        /// square row (v2k-square only)
        #[arg(long)]
        j: Option<u64>,
        /// extra-box row (onebox only)
        #[arg(long)]
        a: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Survey of all no-free-variable diagrams of dimension n
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        gorenstein_only: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Gorenstein table for dimensions 2..2*kmax, or its audit against the bundled table
    Appendix {
        #[arg(long)]
        kmax: usize,
        #[arg(long)]
        audit: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// ASCII picture of the diagram spanned by the generators
    Render {
        #[arg(long)]
        gens: String,
    },
    /// Hilbert function values from the series expansion
    Expand {
        #[arg(long)]
        gens: String,
        #[arg(long)]
        upto: usize,
        /// cross-check each value against the direct semigroup count
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the randomized invariant suite
    Verify {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, default_value_t = 3)]
        hf_degree: usize,
        #[arg(long, default_value_t = 50)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e);
            match e {
                Error::Inconsistency(_) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn work_cap() -> Result<u64, Error> {
    match std::env::var("SSQ_WORK_CAP") {
        Ok(s) => s
            .parse()
            .map_err(|_| Error::Parse(format!("SSQ_WORK_CAP: bad value `{}`", s))),
        Err(_) => Ok(DEFAULT_WORK_CAP),
    }
}

fn diagram_from(gens: &str) -> Result<Diagram, Error> {
    closure(&parse_generators(gens)?)
}

/// "i,j;i,j" form accepted back by --gens.
fn gens_string(gens: &[Monomial]) -> String {
    gens.iter()
        .map(|m| format!("{},{}", m.row(), m.col()))
        .collect::<Vec<_>>()
        .join(";")
}

fn bracket(h: &HVector) -> String {
    let parts: Vec<String> = h.entries().iter().map(|v| v.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

/// Exact JSON: numbers up to 2^53 - 1, decimal strings beyond.
fn big_json(v: &BigUint, strings_used: &mut bool) -> Value {
    match v.to_u64() {
        Some(u) if u < (1u64 << 53) => json!(u),
        _ => {
            *strings_used = true;
            Value::String(v.to_string())
        }
    }
}

fn hvec_json(h: &HVector, strings_used: &mut bool) -> Value {
    Value::Array(h.entries().iter().map(|v| big_json(v, strings_used)).collect())
}

fn emit_json(command: &str, mut fields: serde_json::Map<String, Value>, strings_used: bool) {
    let mut obj = serde_json::Map::new();
    obj.insert("command".into(), json!(command));
    obj.insert("format".into(), json!("json"));
    obj.insert("bigints_as_strings".into(), json!(strings_used));
    obj.append(&mut fields);
    println!("{}", Value::Object(obj));
}

fn csv_rows(header: &[&str], rows: &[Vec<String>]) {
    let mut w = csv::Writer::from_writer(std::io::stdout());
    w.write_record(header).expect("stdout");
    for row in rows {
        w.write_record(row).expect("stdout");
    }
    w.flush().expect("stdout");
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Hvector { gens, format } => {
            let d = diagram_from(&gens)?;
            let series = hilbert_series(&d)?;
            let report = classify(&d)?;
            match format {
                Format::Text => {
                    println!("n: {}", d.n());
                    println!("h: {}", series.numerator);
                    println!("series: {}", series);
                    println!("gorenstein: {}", report.gorenstein);
                }
                Format::Json => {
                    let mut strings = false;
                    let mut fields = serde_json::Map::new();
                    fields.insert("gens".into(), json!(gens));
                    fields.insert("n".into(), json!(d.n()));
                    fields.insert("h".into(), hvec_json(&series.numerator, &mut strings));
                    fields.insert("gorenstein".into(), json!(report.gorenstein));
                    fields.insert(
                        "series".into(),
                        json!({
                            "numerator": hvec_json(&series.numerator, &mut strings),
                            "denom_power": series.denom_power,
                        }),
                    );
                    emit_json("hvector", fields, strings);
                }
                Format::Csv => csv_rows(
                    &["n", "h", "gorenstein"],
                    &[vec![
                        d.n().to_string(),
                        bracket(&series.numerator),
                        report.gorenstein.to_string(),
                    ]],
                ),
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Classify { gens, format } => {
            let d = diagram_from(&gens)?;
            let report = classify(&d)?;
            let failure = report.structural.failure.as_ref();
            match format {
                Format::Text => {
                    println!("gorenstein: {}", report.gorenstein);
                    println!("input_n: {}", report.input_n);
                    println!("n: {}", report.n);
                    println!("k: {}", report.k);
                    println!("method_agreement: {}", report.method_agreement);
                    println!("h: {}", report.hvector);
                    println!(
                        "extra_generators: {}",
                        if report.structural.extra_generators.is_empty() {
                            "-".into()
                        } else {
                            gens_string(&report.structural.extra_generators)
                        }
                    );
                    if let Some(f) = failure {
                        println!("structural_failure: {}", failure_text(f));
                    }
                }
                Format::Json => {
                    let mut strings = false;
                    let mut fields = serde_json::Map::new();
                    fields.insert("gens".into(), json!(gens));
                    fields.insert("gorenstein".into(), json!(report.gorenstein));
                    fields.insert("input_n".into(), json!(report.input_n));
                    fields.insert("n".into(), json!(report.n));
                    fields.insert("k".into(), json!(report.k));
                    fields.insert("method_agreement".into(), json!(report.method_agreement));
                    fields.insert("h".into(), hvec_json(&report.hvector, &mut strings));
                    fields.insert(
                        "extra_generators".into(),
                        json!(report
                            .structural
                            .extra_generators
                            .iter()
                            .map(|m| format!("{},{}", m.row(), m.col()))
                            .collect::<Vec<_>>()),
                    );
                    fields.insert(
                        "structural_failure".into(),
                        failure.map_or(Value::Null, |f| json!(failure_text(f))),
                    );
                    emit_json("classify", fields, strings);
                }
                Format::Csv => csv_rows(
                    &["gorenstein", "n", "k", "h", "extra_generators"],
                    &[vec![
                        report.gorenstein.to_string(),
                        report.n.to_string(),
                        report.k.to_string(),
                        bracket(&report.hvector),
                        gens_string(&report.structural.extra_generators),
                    ]],
                ),
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Series { family, k, n, j, a, format } => {
            let need = |opt: Option<u64>, name: &str| {
                opt.ok_or_else(|| Error::InvalidParameter(format!("--{} is required", name)))
            };
            let (h, dim) = match family {
                Family::V2k => {
                    let k = need(k, "k")?;
                    (hvec_v2k(k)?, 2 * k)
                }
                Family::Veronese => {
                    let n = need(n, "n")?;
                    (hvec_veronese(n)?, n)
                }
                Family::V2kSquare => {
                    let k = need(k, "k")?;
                    (hvec_v2k_square(k, need(j, "j")?)?, 2 * k)
                }
                Family::Hook => {
                    let k = need(k, "k")?;
                    (hvec_hook(k)?, 2 * k)
                }
                Family::Onebox => {
                    let k = need(k, "k")?;
                    (hvec_onebox(k, need(a, "a")?)?, 2 * k)
                }
            };
            let series = HilbertSeries { numerator: h, denom_power: dim as usize };
            match format {
                Format::Text => {
                    println!("numerator: {}", bracket(&series.numerator));
                    println!("denom_power: {}", series.denom_power);
                    println!("series: {}", series);
                }
                Format::Json => {
                    let mut strings = false;
                    let mut fields = serde_json::Map::new();
                    fields.insert("numerator".into(), hvec_json(&series.numerator, &mut strings));
                    fields.insert("denom_power".into(), json!(series.denom_power));
                    emit_json("series", fields, strings);
                }
                Format::Csv => csv_rows(
                    &["numerator", "denom_power"],
                    &[vec![bracket(&series.numerator), series.denom_power.to_string()]],
                ),
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Enumerate { n, gorenstein_only, format } => {
            let rows: Vec<SurveyRow> = classify_all(n)?
                .into_iter()
                .filter(|r| !gorenstein_only || r.gorenstein)
                .collect();
            match format {
                Format::Text => {
                    for r in &rows {
                        println!(
                            "gens={} h={} gorenstein={}",
                            gens_string(&r.generators),
                            r.hvector,
                            r.gorenstein
                        );
                    }
                    println!("total: {}", rows.len());
                }
                Format::Json => {
                    let mut strings = false;
                    let items: Vec<Value> = rows
                        .iter()
                        .map(|r| {
                            json!({
                                "gens": gens_string(&r.generators),
                                "extra_generators": r
                                    .extra_generators
                                    .as_ref()
                                    .map(|g| gens_string(g)),
                                "h": hvec_json(&r.hvector, &mut strings),
                                "gorenstein": r.gorenstein,
                            })
                        })
                        .collect();
                    let mut fields = serde_json::Map::new();
                    fields.insert("n".into(), json!(n));
                    fields.insert("rows".into(), Value::Array(items));
                    emit_json("enumerate", fields, strings);
                }
                Format::Csv => csv_rows(
                    &["gens", "extra_generators", "h", "gorenstein"],
                    &rows
                        .iter()
                        .map(|r| {
                            vec![
                                gens_string(&r.generators),
                                r.extra_generators
                                    .as_ref()
                                    .map(|g| gens_string(g))
                                    .unwrap_or_default(),
                                bracket(&r.hvector),
                                r.gorenstein.to_string(),
                            ]
                        })
                        .collect::<Vec<_>>(),
                ),
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Appendix { kmax, audit, format } => {
            if audit {
                let report = audit_appendix(kmax)?;
                match format {
                    Format::Text => {
                        for r in &report.rows {
                            println!(
                                "k={} label={} printed_h={} computed_h={} printed_h_found={} \
                                 label_inconsistent={}{}",
                                r.row.k,
                                if r.row.label.is_empty() {
                                    "-".into()
                                } else {
                                    gens_string(&r.row.label)
                                },
                                r.row.printed_h,
                                r.computed_h,
                                r.printed_h_found,
                                r.label_inconsistent,
                                if r.printed_h_carriers.is_empty() {
                                    String::new()
                                } else {
                                    format!(
                                        " printed_h_carriers={}",
                                        r.printed_h_carriers
                                            .iter()
                                            .map(|g| if g.is_empty() {
                                                "-".into()
                                            } else {
                                                gens_string(g)
                                            })
                                            .collect::<Vec<_>>()
                                            .join("|")
                                    )
                                },
                            );
                        }
                        for u in &report.unlisted {
                            println!(
                                "unlisted: k={} extras={} h={}",
                                u.k,
                                if u.extra_generators.is_empty() {
                                    "-".into()
                                } else {
                                    gens_string(&u.extra_generators)
                                },
                                u.hvector
                            );
                        }
                        println!("clean: {}", report.is_clean());
                    }
                    Format::Json => {
                        let mut strings = false;
                        let rows: Vec<Value> = report
                            .rows
                            .iter()
                            .map(|r| {
                                json!({
                                    "k": r.row.k,
                                    "label": gens_string(&r.row.label),
                                    "printed_h": hvec_json(&r.row.printed_h, &mut strings),
                                    "computed_h": hvec_json(&r.computed_h, &mut strings),
                                    "printed_h_found": r.printed_h_found,
                                    "label_inconsistent": r.label_inconsistent,
                                    "printed_h_carriers": r
                                        .printed_h_carriers
                                        .iter()
                                        .map(|g| gens_string(g))
                                        .collect::<Vec<_>>(),
                                })
                            })
                            .collect();
                        let unlisted: Vec<Value> = report
                            .unlisted
                            .iter()
                            .map(|u| {
                                json!({
                                    "k": u.k,
                                    "extra_generators": gens_string(&u.extra_generators),
                                    "h": hvec_json(&u.hvector, &mut strings),
                                })
                            })
                            .collect();
                        let mut fields = serde_json::Map::new();
                        fields.insert("kmax".into(), json!(report.kmax));
                        fields.insert("clean".into(), json!(report.is_clean()));
                        fields.insert("rows".into(), Value::Array(rows));
                        fields.insert("unlisted".into(), Value::Array(unlisted));
                        emit_json("appendix", fields, strings);
                    }
                    Format::Csv => csv_rows(
                        &[
                            "k",
                            "label",
                            "printed_h",
                            "computed_h",
                            "printed_h_found",
                            "label_inconsistent",
                        ],
                        &report
                            .rows
                            .iter()
                            .map(|r| {
                                vec![
                                    r.row.k.to_string(),
                                    gens_string(&r.row.label),
                                    bracket(&r.row.printed_h),
                                    bracket(&r.computed_h),
                                    r.printed_h_found.to_string(),
                                    r.label_inconsistent.to_string(),
                                ]
                            })
                            .collect::<Vec<_>>(),
                    ),
                }
            } else {
                let rows = appendix_table(kmax)?;
                match format {
                    Format::Text => {
                        for r in &rows {
                            println!(
                                "k={} extras={} h={}",
                                r.k,
                                if r.extra_generators.is_empty() {
                                    "-".into()
                                } else {
                                    gens_string(&r.extra_generators)
                                },
                                r.hvector
                            );
                        }
                        println!("total: {}", rows.len());
                    }
                    Format::Json => {
                        let mut strings = false;
                        let items: Vec<Value> = rows
                            .iter()
                            .map(|r| {
                                json!({
                                    "k": r.k,
                                    "extra_generators": gens_string(&r.extra_generators),
                                    "h": hvec_json(&r.hvector, &mut strings),
                                })
                            })
                            .collect();
                        let mut fields = serde_json::Map::new();
                        fields.insert("kmax".into(), json!(kmax));
                        fields.insert("rows".into(), Value::Array(items));
                        emit_json("appendix", fields, strings);
                    }
                    Format::Csv => csv_rows(
                        &["k", "extra_generators", "h"],
                        &rows
                            .iter()
                            .map(|r| {
                                vec![
                                    r.k.to_string(),
                                    gens_string(&r.extra_generators),
                                    bracket(&r.hvector),
                                ]
                            })
                            .collect::<Vec<_>>(),
                    ),
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Render { gens } => {
            let d = diagram_from(&gens)?;
            print!("{}", render_ascii(&d));
            Ok(ExitCode::SUCCESS)
        }

        Command::Expand { gens, upto, oracle, format } => {
            let d = diagram_from(&gens)?;
            let series = hilbert_series(&d)?;
            let values = expand(&series, upto);
            let oracle_values: Option<Vec<BigUint>> = if oracle {
                let cap = work_cap()?;
                let vals = (0..=upto)
                    .map(|i| direct_hf_capped(&d, i, cap))
                    .collect::<Result<Vec<_>, _>>()?;
                for (i, (a, b)) in values.iter().zip(&vals).enumerate() {
                    if a != b {
                        return Err(Error::Inconsistency(format!(
                            "HF({}) expansion {} != direct count {}",
                            i, a, b
                        )));
                    }
                }
                Some(vals)
            } else {
                None
            };
            match format {
                Format::Text => {
                    for (i, v) in values.iter().enumerate() {
                        println!("HF({}) = {}", i, v);
                    }
                    if oracle_values.is_some() {
                        println!("oracle: agree");
                    }
                }
                Format::Json => {
                    let mut strings = false;
                    let mut fields = serde_json::Map::new();
                    fields.insert("gens".into(), json!(gens));
                    fields.insert("upto".into(), json!(upto));
                    fields.insert(
                        "values".into(),
                        Value::Array(values.iter().map(|v| big_json(v, &mut strings)).collect()),
                    );
                    fields.insert("oracle_checked".into(), json!(oracle));
                    emit_json("expand", fields, strings);
                }
                Format::Csv => csv_rows(
                    &["i", "hf"],
                    &values
                        .iter()
                        .enumerate()
                        .map(|(i, v)| vec![i.to_string(), v.to_string()])
                        .collect::<Vec<_>>(),
                ),
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Verify { max_n, hf_degree, samples, seed } => {
            let cfg = VerifyConfig { max_n, hf_degree, samples, seed };
            let results = run_all(&cfg);
            let mut all_pass = true;
            for r in &results {
                println!(
                    "{} {} — {}",
                    if r.pass { "PASS" } else { "FAIL" },
                    r.name,
                    r.detail
                );
                all_pass &= r.pass;
            }
            Ok(if all_pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn failure_text(f: &ssq_core::gorenstein::StructuralFailure) -> String {
    use ssq_core::gorenstein::StructuralFailure::*;
    match f {
        Necessary { n, k } => format!("necessary: n={} does not contain V_{{2k}} with k={}", n, k),
        Condition1 { offending } => format!("condition1: offending generator {}", offending),
        Condition2 { first, second, shared } => format!(
            "condition2: generators {} and {} share diagonal box {}",
            first, second, shared
        ),
    }
}
