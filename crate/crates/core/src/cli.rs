//! Command-line front end: one subcommand per library operation, text and
//! JSON output, deterministic byte-for-byte across runs and thread counts.
//!
//! Exit codes: 0 success, 2 parse error, 3 bound exceeded or unsupported
//! family (a report with a warning field is still printed).

use std::io::Write;
use std::str::FromStr;

use serde_json::{json, Map, Value};

use crate::beta::{
    beta_class_bounded, psi_pcoalg_class_bounded, GrothendieckClass, DEFAULT_DEGREE_BOUND,
};
use crate::error::Error;
use crate::hochschild::{
    hh_dual_numbers_bounded, hh_inj_fin_bounded, hh_inj_gamma_bounded, tor_gamma_dim_bounded,
    HHTable,
};
use crate::lie::lie_module;
use crate::outer::{adbar_euler_bounded, ext1_dim, ext1_out_dim, omega_beta_bounded};
use crate::partition::{partitions_of, Partition};
use crate::symfunc::{char_table, lr_expand, plethysm, schur_product, SchurVector};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

struct Options {
    format: Format,
    threads: Option<usize>,
    bound: u32,
}

/// Run with the given arguments, writing the report to `out`. Returns the
/// process exit code.
pub fn run_to(args: &[String], out: &mut dyn Write) -> i32 {
    let (positional, options) = match parse_options(args) {
        Ok(v) => v,
        Err(e) => return emit_error(out, Format::Text, 2, &e.to_string()),
    };
    let format = options.format;
    if positional.is_empty() {
        return emit_error(out, format, 2, "missing subcommand");
    }
    let run_inner = || dispatch(&positional, &options);
    let result = match options.threads {
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(k).build();
            match pool {
                Ok(pool) => pool.install(run_inner),
                Err(e) => return emit_error(out, format, 2, &format!("bad thread pool: {e}")),
            }
        }
        None => run_inner(),
    };
    match result {
        Ok(report) => {
            emit(out, format, &report);
            report.code
        }
        Err(e) => {
            let code = match e {
                Error::BoundExceeded { .. } | Error::UnsupportedFamily(_) => 3,
                _ => 2,
            };
            emit_error(out, format, code, &e.to_string())
        }
    }
}

/// Same as [`run_to`] against standard output.
pub fn run(args: &[String]) -> i32 {
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    run_to(args, &mut lock)
}

fn parse_options(args: &[String]) -> Result<(Vec<String>, Options), Error> {
    let mut positional = Vec::new();
    let mut format = Format::Text;
    let mut threads = None;
    let mut bound = DEFAULT_DEGREE_BOUND;
    let mut outer_flag = false;
    let mut it = args.iter();
    while let Some(arg) = it.next() {
        match arg.as_str() {
            "--format" => {
                let v = it
                    .next()
                    .ok_or_else(|| Error::Parse("--format needs a value".into()))?;
                format = match v.as_str() {
                    "text" => Format::Text,
                    "json" => Format::Json,
                    other => {
                        return Err(Error::Parse(format!("unknown format {other:?}")));
                    }
                };
            }
            "--threads" => {
                let v = it
                    .next()
                    .ok_or_else(|| Error::Parse("--threads needs a value".into()))?;
                let k: usize = v
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad thread count {v:?}")))?;
                if k == 0 {
                    return Err(Error::Parse("--threads must be positive".into()));
                }
                threads = Some(k);
            }
            "--bound" => {
                let v = it
                    .next()
                    .ok_or_else(|| Error::Parse("--bound needs a value".into()))?;
                bound = v
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad bound {v:?}")))?;
            }
            "--outer" => outer_flag = true,
            "--help" | "-h" => positional.insert(0, "help".into()),
            other if other.starts_with("--") => {
                return Err(Error::Parse(format!("unknown flag {other:?}")));
            }
            other => positional.push(other.to_string()),
        }
    }
    if outer_flag {
        positional.push("--outer".into());
    }
    Ok((
        positional,
        Options {
            format,
            threads,
            bound,
        },
    ))
}

/// A finished report: deterministic text lines plus the JSON value. A
/// nonzero code marks degraded reports (printed, but exiting 3).
struct Report {
    text: String,
    json: Value,
    code: i32,
}

const USAGE: &str = "\
usage: grfunc SUBCOMMAND ARGS [--format text|json] [--threads K] [--bound B]

subcommands:
  chartable N              character table of the symmetric group on N letters
  lr LAMBDA MU             product expansion via the Littlewood-Richardson rule
  prod LAMBDA MU           same product through the Schur-vector engine
  plethysm LAMBDA MU       s_LAMBDA composed with s_MU
  lie N                    decomposition of Lie(N) into simples
  beta NU                  composition factors of the injective for NU
  psi D                    full isotypical table in arity D
  omega-beta NU            outer subobject / cokernel report for NU
  adbar NU                 Euler data of the coaction sequence only
  ext1 RHO NU [--outer]    extension dimension between simples
  hh-inj-gamma D R         pure homology row, arity D, rank R
  hh-inj-fin LAMBDA R      two-row isotypical homology table
  hh-dual R DMAX           dual-numbers table up to degree DMAX
  tor M N                  derived-tensor dimension in degree N-M
  dims CLASSFILE R         evaluate a class file at rank R

partitions are comma-separated weakly decreasing parts, e.g. 3,1,1; 0 is empty.
exit codes: 0 ok, 2 parse error, 3 bound exceeded / family not determined.
";

fn dispatch(positional: &[String], opts: &Options) -> Result<Report, Error> {
    let cmd = positional[0].as_str();
    let rest = &positional[1..];
    let expected_args = match cmd {
        "help" => 0,
        "chartable" | "lie" | "beta" | "psi" | "omega-beta" | "adbar" => 1,
        "lr" | "prod" | "plethysm" | "ext1" | "hh-inj-gamma" | "hh-inj-fin" | "hh-dual" | "tor"
        | "dims" => 2,
        other => return Err(Error::Parse(format!("unknown subcommand {other:?}"))),
    };
    let given = rest.iter().filter(|a| *a != "--outer").count();
    if given != expected_args {
        return Err(Error::Parse(format!(
            "{cmd} takes {expected_args} argument(s), got {given}"
        )));
    }
    match cmd {
        "help" => Ok(Report {
            text: USAGE.to_string(),
            json: json!({"usage": USAGE}),
            code: 0,
        }),
        "chartable" => {
            let n = parse_nat(arg(rest, 0, "N")?)?;
            Ok(report_chartable(n))
        }
        "lr" => {
            let lam = parse_partition(arg(rest, 0, "LAMBDA")?)?;
            let mu = parse_partition(arg(rest, 1, "MU")?)?;
            Ok(report_lr(&lam, &mu))
        }
        "prod" => {
            let lam = parse_partition(arg(rest, 0, "LAMBDA")?)?;
            let mu = parse_partition(arg(rest, 1, "MU")?)?;
            Ok(report_prod(&lam, &mu))
        }
        "plethysm" => {
            let lam = parse_partition(arg(rest, 0, "LAMBDA")?)?;
            let mu = parse_partition(arg(rest, 1, "MU")?)?;
            let result = plethysm(
                &SchurVector::basis(lam.clone()),
                &SchurVector::basis(mu.clone()),
            )?;
            Ok(report_terms("plethysm", &lam, &mu, &result))
        }
        "lie" => {
            let n = parse_nat(arg(rest, 0, "N")?)?;
            if n == 0 {
                return Err(Error::Parse("lie requires N >= 1".into()));
            }
            Ok(report_lie(n))
        }
        "beta" => {
            let nu = parse_partition(arg(rest, 0, "NU")?)?;
            let class = beta_class_bounded(&nu, opts.bound)?;
            Ok(report_class("beta", &nu, &class))
        }
        "psi" => {
            let d = parse_nat(arg(rest, 0, "D")?)?;
            Ok(report_psi(d, opts.bound)?)
        }
        "omega-beta" => {
            let nu = parse_partition(arg(rest, 0, "NU")?)?;
            Ok(report_outer(&nu, opts.bound, true)?)
        }
        "adbar" => {
            let nu = parse_partition(arg(rest, 0, "NU")?)?;
            Ok(report_outer(&nu, opts.bound, false)?)
        }
        "ext1" => {
            let rho = parse_partition(arg(rest, 0, "RHO")?)?;
            let nu = parse_partition(arg(rest, 1, "NU")?)?;
            let outer = rest.iter().any(|a| a == "--outer");
            let dim = if outer {
                ext1_out_dim(&rho, &nu)
            } else {
                ext1_dim(&rho, &nu)
            };
            Ok(report_ext1(&rho, &nu, outer, dim))
        }
        "hh-inj-gamma" => {
            let d = parse_nat(arg(rest, 0, "D")?)?;
            let r = parse_nat(arg(rest, 1, "R")?)?;
            let table = hh_inj_gamma_bounded(d, r, opts.bound)?;
            Ok(report_hh(&table, json!({"d": d, "r": r})))
        }
        "hh-inj-fin" => {
            let lam = parse_partition(arg(rest, 0, "LAMBDA")?)?;
            let r = parse_nat(arg(rest, 1, "R")?)?;
            match hh_inj_fin_bounded(&lam, r, opts.bound) {
                Ok(table) => Ok(report_hh(&table, json!({"lambda": pjson(&lam), "r": r}))),
                Err(Error::UnsupportedFamily(nu)) => {
                    // Degrade to the Euler data with a warning and exit 3.
                    let mut rep = report_outer(&nu, opts.bound, false)?;
                    let warning = format!(
                        "omega beta is not determined for nu = {nu}; reporting Euler data only"
                    );
                    if let Value::Object(map) = &mut rep.json {
                        map.insert("warning".into(), json!(warning.clone()));
                    }
                    rep.text = format!("warning: {warning}\n{}", rep.text);
                    rep.code = 3;
                    Ok(rep)
                }
                Err(e) => Err(e),
            }
        }
        "hh-dual" => {
            let r = parse_nat(arg(rest, 0, "R")?)?;
            let dmax = parse_nat(arg(rest, 1, "DMAX")?)?;
            let table = hh_dual_numbers_bounded(r, dmax, opts.bound)?;
            Ok(report_hh(&table, json!({"r": r, "dmax": dmax})))
        }
        "tor" => {
            let m = parse_nat(arg(rest, 0, "M")?)?;
            let n = parse_nat(arg(rest, 1, "N")?)?;
            if m == 0 || n == 0 {
                return Err(Error::Parse("tor requires M, N >= 1".into()));
            }
            let (deg, dim) = tor_gamma_dim_bounded(m, n, opts.bound)?;
            Ok(Report {
                text: format!("tor[{m},{n}]\ndeg {deg}  dim {dim}\n"),
                json: json!({"m": m, "n": n, "deg": deg, "dim": dim}),
                code: 0,
            })
        }
        "dims" => {
            let path = arg(rest, 0, "CLASSFILE")?;
            let r = parse_nat(arg(rest, 1, "R")?)?;
            let class = read_class_file(path)?;
            let dim = class.eval_dimension(r);
            Ok(Report {
                text: format!("dims[{path} | r={r}]\ndim {dim}\n"),
                json: json!({"file": path, "r": r, "dim": dim}),
                code: 0,
            })
        }
        other => Err(Error::Parse(format!("unknown subcommand {other:?}"))),
    }
}

fn arg<'a>(rest: &'a [String], i: usize, name: &str) -> Result<&'a str, Error> {
    rest.get(i)
        .map(|s| s.as_str())
        .filter(|s| *s != "--outer")
        .ok_or_else(|| Error::Parse(format!("missing argument {name}")))
}

fn parse_nat(s: &str) -> Result<u32, Error> {
    s.parse()
        .map_err(|_| Error::Parse(format!("bad natural number {s:?}")))
}

fn parse_partition(s: &str) -> Result<Partition, Error> {
    Partition::from_str(s)
}

/// Partition as a JSON array of parts (empty array for the empty partition).
fn pjson(p: &Partition) -> Value {
    Value::Array(p.parts().iter().map(|&x| json!(x)).collect())
}

/// Class rows in canonical order as {"p": [...], "m": k} objects; negative
/// multiplicities are flagged virtual.
fn class_rows_json(class: &GrothendieckClass) -> Value {
    Value::Array(
        class
            .rows()
            .iter()
            .map(|(lam, m)| {
                let mut obj = Map::new();
                obj.insert("p".into(), pjson(lam));
                obj.insert("m".into(), json!(m));
                if *m < 0 {
                    obj.insert("virtual".into(), json!(true));
                }
                Value::Object(obj)
            })
            .collect(),
    )
}

fn class_rows_text(class: &GrothendieckClass, indent: &str) -> String {
    if class.is_zero() {
        return format!("{indent}(zero)\n");
    }
    let rows = class.rows();
    let width = rows
        .iter()
        .map(|(lam, _)| lam.to_string().len())
        .max()
        .unwrap_or(1);
    let mut s = String::new();
    for (lam, m) in rows {
        let mark = if m < 0 { "  (virtual)" } else { "" };
        s.push_str(&format!("{indent}{:<width$}  {m}{mark}\n", lam.to_string()));
    }
    s
}

fn schur_rows(v: &SchurVector) -> GrothendieckClass {
    GrothendieckClass::from_terms(v.integer_terms())
}

fn emit(out: &mut dyn Write, format: Format, report: &Report) {
    match format {
        Format::Text => {
            let _ = out.write_all(report.text.as_bytes());
        }
        Format::Json => {
            let _ = writeln!(out, "{}", serde_json::to_string(&report.json).unwrap());
        }
    }
}

fn emit_error(out: &mut dyn Write, format: Format, code: i32, message: &str) -> i32 {
    match format {
        Format::Text => {
            let _ = writeln!(out, "error: {message}");
        }
        Format::Json => {
            let _ = writeln!(
                out,
                "{}",
                serde_json::to_string(&json!({"error": message, "code": code})).unwrap()
            );
        }
    }
    code
}

fn report_chartable(n: u32) -> Report {
    let table = char_table(n);
    let parts = table.partitions();
    let mut text = format!("chartable[{n}]\n");
    let width = parts
        .iter()
        .map(|p| p.to_string().len())
        .max()
        .unwrap_or(1)
        .max(6);
    text.push_str(&format!("{:<width$}", "lambda"));
    for mu in parts {
        text.push_str(&format!("  {:>width$}", mu.to_string()));
    }
    text.push('\n');
    let mut rows = Vec::new();
    for lam in parts {
        text.push_str(&format!("{:<width$}", lam.to_string()));
        for mu in parts {
            text.push_str(&format!("  {:>width$}", table.value(lam, mu)));
        }
        text.push('\n');
        rows.push(json!({
            "p": pjson(lam),
            "values": table.row(lam).to_vec(),
        }));
    }
    let json = json!({
        "n": n,
        "cycle_types": parts.iter().map(pjson).collect::<Vec<_>>(),
        "rows": rows,
    });
    Report {
        text,
        json,
        code: 0,
    }
}

fn report_lr(lam: &Partition, mu: &Partition) -> Report {
    let expansion = lr_expand(lam, mu);
    let class =
        GrothendieckClass::from_terms(expansion.iter().map(|(nu, c)| (nu.clone(), *c as i64)));
    let mut text = format!("lr[{lam} * {mu}]\n");
    text.push_str(&class_rows_text(&class, ""));
    Report {
        json: json!({
            "lambda": pjson(lam),
            "mu": pjson(mu),
            "terms": class_rows_json(&class),
        }),
        text,
        code: 0,
    }
}

fn report_prod(lam: &Partition, mu: &Partition) -> Report {
    let prod = schur_product(
        &SchurVector::basis(lam.clone()),
        &SchurVector::basis(mu.clone()),
    );
    report_terms("prod", lam, mu, &prod)
}

fn report_terms(cmd: &str, lam: &Partition, mu: &Partition, v: &SchurVector) -> Report {
    let class = schur_rows(v);
    let mut text = format!("{cmd}[{lam} o {mu}]\n");
    if cmd == "prod" {
        text = format!("{cmd}[{lam} * {mu}]\n");
    }
    text.push_str(&class_rows_text(&class, ""));
    Report {
        json: json!({
            "lambda": pjson(lam),
            "mu": pjson(mu),
            "terms": class_rows_json(&class),
        }),
        text,
        code: 0,
    }
}

fn report_lie(n: u32) -> Report {
    let lie = lie_module(n);
    let class = GrothendieckClass::from_terms(lie.iter().map(|(lam, m)| (lam.clone(), *m as i64)));
    let mut text = format!("lie[{n}]\n");
    text.push_str(&class_rows_text(&class, ""));
    let mult: Vec<Value> = class
        .rows()
        .iter()
        .map(|(lam, m)| json!({"p": pjson(lam), "m": m}))
        .collect();
    Report {
        json: json!({"n": n, "mult": mult}),
        text,
        code: 0,
    }
}

fn report_class(cmd: &str, nu: &Partition, class: &GrothendieckClass) -> Report {
    let mut text = format!("{cmd}[{nu}]\n");
    text.push_str(&class_rows_text(class, ""));
    Report {
        json: json!({
            "nu": pjson(nu),
            "rows": class_rows_json(class),
        }),
        text,
        code: 0,
    }
}

fn report_psi(d: u32, bound: u32) -> Result<Report, Error> {
    let psi = psi_pcoalg_class_bounded(d, bound)?;
    let mut text = format!("psi[{d}]\n");
    let mut rows = Vec::new();
    for nu in partitions_of(d) {
        let row = psi.row(&nu);
        text.push_str(&format!("nu={nu}\n"));
        text.push_str(&class_rows_text(&row, "  "));
        rows.push(json!({
            "nu": pjson(&nu),
            "factors": class_rows_json(&row),
        }));
    }
    Ok(Report {
        json: json!({"d": d, "rows": rows}),
        text,
        code: 0,
    })
}

fn report_outer(nu: &Partition, bound: u32, with_omega: bool) -> Result<Report, Error> {
    let rep = if with_omega {
        omega_beta_bounded(nu, bound)?
    } else {
        adbar_euler_bounded(nu, bound)?
    };
    let cmd = if with_omega { "omega-beta" } else { "adbar" };
    let mut text = format!("{cmd}[{nu}]\nmethod: {}\n", rep.method);
    text.push_str("beta:\n");
    text.push_str(&class_rows_text(&rep.beta, "  "));
    text.push_str("target:\n");
    text.push_str(&class_rows_text(&rep.target, "  "));
    text.push_str("euler:\n");
    text.push_str(&class_rows_text(&rep.euler_difference, "  "));
    let mut obj = Map::new();
    obj.insert("nu".into(), pjson(nu));
    obj.insert("method".into(), json!(rep.method.to_string()));
    obj.insert("beta".into(), class_rows_json(&rep.beta));
    obj.insert("target".into(), class_rows_json(&rep.target));
    obj.insert("euler".into(), class_rows_json(&rep.euler_difference));
    if with_omega {
        match (&rep.omega, &rep.coker) {
            (Some(omega), Some(coker)) => {
                text.push_str("omega:\n");
                text.push_str(&class_rows_text(omega, "  "));
                text.push_str("coker:\n");
                text.push_str(&class_rows_text(coker, "  "));
                obj.insert("omega".into(), class_rows_json(omega));
                obj.insert("coker".into(), class_rows_json(coker));
            }
            _ => {
                text.push_str("omega: (not determined)\ncoker: (not determined)\n");
                obj.insert("omega".into(), Value::Null);
                obj.insert("coker".into(), Value::Null);
            }
        }
    }
    Ok(Report {
        text,
        json: Value::Object(obj),
        code: 0,
    })
}

fn report_ext1(rho: &Partition, nu: &Partition, outer: bool, dim: u64) -> Report {
    let label = if outer { " --outer" } else { "" };
    Report {
        text: format!("ext1[{rho} -> {nu}{label}]\ndim {dim}\n"),
        json: json!({
            "rho": pjson(rho),
            "nu": pjson(nu),
            "outer": outer,
            "dim": dim,
        }),
        code: 0,
    }
}

fn report_hh(table: &HHTable, echo: Value) -> Report {
    let mut text = format!("hh {} (rank {})\n", table.coefficient, table.rank);
    let mut rows = Vec::new();
    for (deg, row) in table.rows.iter().rev() {
        text.push_str(&format!("deg {deg}  dim {}\n", row.dimension));
        text.push_str(&class_rows_text(&row.class, "  "));
        rows.push(json!({
            "deg": deg,
            "dim": row.dimension,
            "class": class_rows_json(&row.class),
        }));
    }
    let mut obj = match echo {
        Value::Object(m) => m,
        _ => Map::new(),
    };
    obj.insert("rows".into(), Value::Array(rows));
    Report {
        text,
        json: Value::Object(obj),
        code: 0,
    }
}

/// Class file: a JSON array of {"p": [parts...], "m": multiplicity} rows
/// (the same shape the class outputs use).
fn read_class_file(path: &str) -> Result<GrothendieckClass, Error> {
    let data = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {path:?}: {e}")))?;
    let value: Value = serde_json::from_str(&data)
        .map_err(|e| Error::Parse(format!("bad JSON in {path:?}: {e}")))?;
    let rows = value
        .as_array()
        .ok_or_else(|| Error::Parse(format!("{path:?}: expected a JSON array of rows")))?;
    let mut class = GrothendieckClass::zero();
    for row in rows {
        let obj = row
            .as_object()
            .ok_or_else(|| Error::Parse(format!("{path:?}: rows must be objects")))?;
        let parts: Vec<u32> = obj
            .get("p")
            .and_then(|v| v.as_array())
            .ok_or_else(|| Error::Parse(format!("{path:?}: row missing \"p\" array")))?
            .iter()
            .map(|v| {
                v.as_u64()
                    .and_then(|x| u32::try_from(x).ok())
                    .ok_or_else(|| Error::Parse(format!("{path:?}: bad part value")))
            })
            .collect::<Result<_, _>>()?;
        if !parts.windows(2).all(|w| w[0] >= w[1]) || parts.contains(&0) {
            return Err(Error::Parse(format!(
                "{path:?}: malformed partition {parts:?}"
            )));
        }
        let m = obj
            .get("m")
            .and_then(|v| v.as_i64())
            .ok_or_else(|| Error::Parse(format!("{path:?}: row missing \"m\" integer")))?;
        class.add(Partition::new(parts), m);
    }
    Ok(class)
}
