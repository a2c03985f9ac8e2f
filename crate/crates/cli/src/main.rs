//! Command-line front end for the `blanchfield` library.
//!
//! Exit codes: 0 on success (including indeterminate signature points),
//! 1 when a verified property fails, 2 on bad input.

use std::path::Path;
use std::process::ExitCode;

use blanchfield::verify::{verify_entry, verify_random, PropertyReport, VerifyConfig};
use blanchfield::{
    alexander_polynomial, basis_vector, builtin_catalog, levine_tristram_signature, load_entry, lookup_builtin,
    mk_signature, normalize_alexander, BigInt, CatalogEntry, DualSurfaceEvaluator, EntryData, Error, IntMatrix,
    LaurentPoly, MKForm, Matrix, PairingValue, PresentedPairing, SeifertData,
};
use clap::{Parser, Subcommand};
use num_complex::Complex64;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "blanchfield", version, about = "Exact Blanchfield pairings from matrix data")]
struct Cli {
    /// Emit a JSON object with keys command, input, result, diagnostics.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the built-in entries.
    List,
    /// Print an entry in the catalog text format.
    Show { entry: String },
    /// Normalized Alexander polynomial.
    Alexander { entry: String },
    /// Pairing of two vectors, or of all pairs of generators.
    Pairing {
        entry: String,
        /// First argument as comma-separated Laurent polynomials.
        #[arg(long, allow_hyphen_values = true, requires = "w")]
        v: Option<String>,
        /// Second argument as comma-separated Laurent polynomials.
        #[arg(long, allow_hyphen_values = true, requires = "v")]
        w: Option<String>,
    },
    /// The hermitian matrix M_K(t), its congruence and determinant.
    Mk { entry: String },
    /// Levine-Tristram signature at a point or along the upper half circle.
    Signature {
        entry: String,
        /// Point as `re+imi` or `theta:<radians>`.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "samples")]
        z: Option<String>,
        /// Number of equally spaced points strictly between 1 and -1.
        #[arg(long)]
        samples: Option<usize>,
        /// Also compute the signature of M_K(z) and compare.
        #[arg(long)]
        check_mk: bool,
    },
    /// Run the property suites on an entry or on random Seifert matrices.
    Verify {
        #[arg(required_unless_present = "random", conflicts_with = "random")]
        entry: Option<String>,
        /// Genus and number of random Seifert matrices.
        #[arg(long, num_args = 2, value_names = ["GENUS", "COUNT"])]
        random: Option<Vec<usize>>,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Output of one command before rendering.
struct Outcome {
    input: Value,
    result: Value,
    text: String,
    diagnostics: Vec<String>,
    code: u8,
}

impl Outcome {
    fn ok(input: Value, result: Value, text: String) -> Self {
        Outcome {
            input,
            result,
            text,
            diagnostics: Vec::new(),
            code: 0,
        }
    }
}

enum Failure {
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type CmdResult = Result<Outcome, Failure>;

fn resolve(reference: &str) -> Result<CatalogEntry, Failure> {
    let path = Path::new(reference);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{reference}: {e}")))?;
        return load_entry(&text).map_err(|e| Failure::Input(format!("{reference}: {e}")));
    }
    Ok(lookup_builtin(reference)?)
}

fn require_seifert(entry: &CatalogEntry) -> Result<&SeifertData, Failure> {
    match &entry.data {
        EntryData::Seifert(s) => Ok(s),
        _ => Err(Failure::Input(format!(
            "entry `{}` has kind {}; this command needs a seifert entry",
            entry.name,
            entry.kind()
        ))),
    }
}

fn entry_input(entry: &CatalogEntry) -> Value {
    json!({ "entry": entry.name, "kind": entry.kind().to_string() })
}

fn int_json(x: &BigInt) -> Value {
    i64::try_from(x).map(Value::from).unwrap_or_else(|_| Value::from(x.to_string()))
}

fn int_matrix_json(m: &IntMatrix) -> Value {
    Value::Array(m.row_iter().map(|row| Value::Array(row.iter().map(int_json).collect())).collect())
}

fn string_matrix_json<T: ToString>(m: &Matrix<T>) -> Value {
    Value::Array(
        m.row_iter()
            .map(|row| Value::Array(row.iter().map(|x| Value::from(x.to_string())).collect()))
            .collect(),
    )
}

fn parse_vector(text: &str) -> Result<Vec<LaurentPoly>, Failure> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<LaurentPoly>()
                .map_err(|e| Failure::Input(format!("bad vector entry `{}`: {e}", part.trim())))
        })
        .collect()
}

/// Parses `theta:<radians>` or a complex number `re+imi` (either part may be
/// omitted).
fn parse_point(text: &str) -> Result<Complex64, Failure> {
    let bad = || Failure::Input(format!("cannot parse point `{text}`; use `re+imi` or `theta:<radians>`"));
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if let Some(theta) = s.strip_prefix("theta:") {
        let theta: f64 = theta.parse().map_err(|_| bad())?;
        return Ok(Complex64::from_polar(1.0, theta));
    }
    let Some(body) = s.strip_suffix('i') else {
        return s.parse::<f64>().map(|re| Complex64::new(re, 0.0)).map_err(|_| bad());
    };
    // split before the last sign that is not a leading sign or an exponent sign
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => "1",
        "-" => "-1",
        other => other,
    };
    let re: f64 = re.parse().map_err(|_| bad())?;
    let im: f64 = im.parse().map_err(|_| bad())?;
    Ok(Complex64::new(re, im))
}

fn cmd_list() -> CmdResult {
    let entries = builtin_catalog();
    let text = entries
        .iter()
        .map(|e| format!("{:<20} {:<13} {}", e.name, e.kind().to_string(), e.notes))
        .collect::<Vec<_>>()
        .join("\n");
    let result = Value::Array(
        entries
            .iter()
            .map(|e| json!({ "name": e.name, "kind": e.kind().to_string(), "notes": e.notes }))
            .collect(),
    );
    Ok(Outcome::ok(json!({}), result, text))
}

fn cmd_show(reference: &str) -> CmdResult {
    let entry = resolve(reference)?;
    let text = entry.render();
    Ok(Outcome::ok(entry_input(&entry), json!({ "entry": text }), text.trim_end().to_string()))
}

fn cmd_alexander(reference: &str) -> CmdResult {
    let entry = resolve(reference)?;
    let mut diagnostics = Vec::new();
    let delta = match &entry.data {
        EntryData::Seifert(s) => alexander_polynomial(s),
        EntryData::Fibred(f) => {
            let det = PresentedPairing::from_fibred(f)?.presentation_det().clone();
            normalize_alexander(&det).unwrap_or_else(|| {
                diagnostics.push("determinant admits no symmetric normalization; printed as is".to_string());
                det
            })
        }
        EntryData::DualSurface(d) => {
            let det = d.mayer_vietoris_matrix().det()?;
            normalize_alexander(&det).unwrap_or_else(|| {
                diagnostics.push("determinant admits no symmetric normalization; printed as is".to_string());
                det
            })
        }
    };
    let mut out = Outcome::ok(entry_input(&entry), json!({ "alexander": delta.to_string() }), delta.to_string());
    out.diagnostics = diagnostics;
    Ok(out)
}

fn cmd_pairing(reference: &str, v: Option<&str>, w: Option<&str>) -> CmdResult {
    let entry = resolve(reference)?;
    let (form, n): (Box<dyn PairingValue>, usize) = match &entry.data {
        EntryData::Seifert(s) => (Box::new(PresentedPairing::from_seifert(s)?), s.size()),
        EntryData::Fibred(f) => (Box::new(PresentedPairing::from_fibred(f)?), f.size()),
        EntryData::DualSurface(d) => (Box::new(DualSurfaceEvaluator::new(d)?), d.iota_plus().rows()),
    };
    let value = |v: &[LaurentPoly], w: &[LaurentPoly]| form.pairing_value(v, w);
    let mut input = entry_input(&entry);
    match (v, w) {
        (Some(v), Some(w)) => {
            input["v"] = Value::from(v);
            input["w"] = Value::from(w);
            let (vv, wv) = (parse_vector(v)?, parse_vector(w)?);
            let class = value(&vv, &wv)?;
            Ok(Outcome::ok(input, json!({ "value": class.to_string() }), class.to_string()))
        }
        _ => {
            let m = Matrix::from_fn(n, n, |i, j| {
                value(&basis_vector(n, i), &basis_vector(n, j)).expect("generator dimensions")
            });
            let text = m.row_iter().map(|row| {
                row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("  |  ")
            });
            let text = if n == 0 { "[]".to_string() } else { text.collect::<Vec<_>>().join("\n") };
            Ok(Outcome::ok(input, json!({ "matrix": string_matrix_json(&m) }), text))
        }
    }
}

fn cmd_mk(reference: &str) -> CmdResult {
    let entry = resolve(reference)?;
    let s = require_seifert(&entry)?;
    let mk = MKForm::new(s)?;
    let text = format!(
        "M_K(t) = {}\nP = {}\nP A P^T = {}\ndet M_K = {}",
        mk.matrix(),
        mk.congruence(),
        mk.normalized_seifert(),
        mk.det()
    );
    let result = json!({
        "matrix": string_matrix_json(mk.matrix()),
        "congruence": int_matrix_json(mk.congruence()),
        "normalized_seifert": int_matrix_json(mk.normalized_seifert()),
        "det": mk.det().to_string(),
    });
    Ok(Outcome::ok(entry_input(&entry), result, text))
}

/// One sampled point: signature, optional M_K signature, and whether the
/// comparison failed.
fn signature_at(s: &SeifertData, mk: Option<&MKForm>, z: Complex64) -> Result<(Value, String, bool), Failure> {
    let shown = |r: &blanchfield::Result<i64>| -> Result<(Value, String), Failure> {
        match r {
            Ok(x) => Ok((Value::from(*x), x.to_string())),
            Err(Error::Indeterminate { .. }) => Ok((Value::Null, "?".to_string())),
            Err(e) => Err(Failure::Input(e.to_string())),
        }
    };
    let sigma = levine_tristram_signature(s, z);
    let (sj, st) = shown(&sigma)?;
    let Some(mk) = mk else {
        return Ok((json!({ "signature": sj }), st, false));
    };
    let mk_sigma = mk_signature(mk, z);
    let (mj, mt) = shown(&mk_sigma)?;
    let (verdict, failed) = match (&sigma, &mk_sigma) {
        (Ok(a), Ok(b)) if a == b => ("OK", false),
        (Ok(_), Ok(_)) => ("MISMATCH", true),
        _ => ("?", false),
    };
    Ok((
        json!({ "signature": sj, "mk_signature": mj, "check": verdict }),
        format!("{st} {mt} {verdict}"),
        failed,
    ))
}

fn cmd_signature(reference: &str, z: Option<&str>, samples: Option<usize>, check_mk: bool) -> CmdResult {
    let entry = resolve(reference)?;
    let s = require_seifert(&entry)?;
    let mk = if check_mk { Some(MKForm::new(s)?) } else { None };
    let mut input = entry_input(&entry);
    input["check_mk"] = Value::from(check_mk);
    let mut diagnostics = Vec::new();
    let mut failed = false;
    let (result, text) = match (z, samples) {
        (Some(zs), _) => {
            input["z"] = Value::from(zs);
            let point = parse_point(zs)?;
            let (value, text, bad) = signature_at(s, mk.as_ref(), point)?;
            failed |= bad;
            if text.starts_with('?') {
                diagnostics.push("indeterminate: the point is at or near a root of the Alexander polynomial".into());
            }
            (value, text)
        }
        (None, Some(count)) => {
            if count == 0 {
                return Err(Failure::Input("--samples must be at least 1".into()));
            }
            input["samples"] = Value::from(count);
            let mut rows = Vec::new();
            let mut lines = Vec::new();
            for j in 1..=count {
                let theta = std::f64::consts::PI * j as f64 / (count + 1) as f64;
                let (mut value, text, bad) = signature_at(s, mk.as_ref(), Complex64::from_polar(1.0, theta))?;
                failed |= bad;
                value["theta"] = Value::from(theta);
                rows.push(value);
                lines.push(format!("{theta:.6} {text}"));
            }
            let unknown = rows.iter().filter(|r| r["signature"].is_null()).count();
            if unknown > 0 {
                diagnostics.push(format!("{unknown} indeterminate sample(s) marked `?`"));
            }
            (Value::Array(rows), lines.join("\n"))
        }
        (None, None) => return Err(Failure::Input("give --z or --samples".into())),
    };
    if failed {
        diagnostics.push("sign(M_K(z)) differs from the Levine-Tristram signature".into());
    }
    Ok(Outcome {
        input,
        result,
        text,
        diagnostics,
        code: u8::from(failed),
    })
}

fn report_json(r: &PropertyReport) -> Value {
    json!({
        "property": r.property,
        "status": r.status.to_string(),
        "checks": r.checks,
        "counterexample": r.counterexample,
    })
}

fn render_reports(header: String, reports: &[PropertyReport]) -> (String, bool) {
    let mut lines = vec![header];
    let mut failed = false;
    for r in reports {
        lines.push(r.to_string());
        if r.status.is_failure() {
            failed = true;
            if let Some(c) = &r.counterexample {
                lines.push(format!("counterexample for {}:\n{}", r.property, c.trim_end()));
            }
        }
    }
    (lines.join("\n"), failed)
}

fn cmd_verify(reference: Option<&str>, random: Option<&[usize]>, trials: usize, seed: u64) -> CmdResult {
    let config = VerifyConfig { trials, seed };
    let (mut input, header, reports) = match (reference, random) {
        (_, Some(&[genus, count])) => (
            json!({ "random": { "genus": genus, "count": count } }),
            format!("random: {count} Seifert matrices of genus {genus}"),
            verify_random(genus, count, 3, config)?,
        ),
        (Some(reference), _) => {
            let entry = resolve(reference)?;
            let reports = verify_entry(&entry, config)?;
            (entry_input(&entry), format!("entry: {} ({})", entry.name, entry.kind()), reports)
        }
        _ => return Err(Failure::Input("give an entry or --random GENUS COUNT".into())),
    };
    input["trials"] = Value::from(trials);
    input["seed"] = Value::from(seed);
    let (text, failed) = render_reports(header, &reports);
    let result = Value::Array(reports.iter().map(report_json).collect());
    let mut out = Outcome::ok(input, result, text);
    if failed {
        out.diagnostics.push("property failure; counterexamples are in the catalog text format".into());
        out.code = 1;
    }
    Ok(out)
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::List => "list",
        Command::Show { .. } => "show",
        Command::Alexander { .. } => "alexander",
        Command::Pairing { .. } => "pairing",
        Command::Mk { .. } => "mk",
        Command::Signature { .. } => "signature",
        Command::Verify { .. } => "verify",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = command_name(&cli.command);
    let outcome = match &cli.command {
        Command::List => cmd_list(),
        Command::Show { entry } => cmd_show(entry),
        Command::Alexander { entry } => cmd_alexander(entry),
        Command::Pairing { entry, v, w } => cmd_pairing(entry, v.as_deref(), w.as_deref()),
        Command::Mk { entry } => cmd_mk(entry),
        Command::Signature {
            entry,
            z,
            samples,
            check_mk,
        } => cmd_signature(entry, z.as_deref(), *samples, *check_mk),
        Command::Verify {
            entry,
            random,
            trials,
            seed,
        } => cmd_verify(entry.as_deref(), random.as_deref(), *trials, *seed),
    };
    match outcome {
        Ok(out) => {
            if cli.json {
                let doc = json!({
                    "command": name,
                    "input": out.input,
                    "result": out.result,
                    "diagnostics": out.diagnostics,
                });
                println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
            } else {
                println!("{}", out.text);
                for d in &out.diagnostics {
                    eprintln!("note: {d}");
                }
            }
            ExitCode::from(out.code)
        }
        Err(Failure::Input(message)) => {
            if cli.json {
                let doc = json!({
                    "command": name,
                    "input": Value::Null,
                    "result": Value::Null,
                    "diagnostics": [message],
                });
                println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
            }
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
