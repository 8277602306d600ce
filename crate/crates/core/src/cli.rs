//! The `fs-forge` command line.
//!
//! Every subcommand prints one canonical JSON document on stdout with a
//! `status` of `ok`, `property-failed`, `input-error` or `inconclusive`.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::algebra::{
    characteristic_element, check_dual_basis, frobenius_pair, separability_idempotent, StructAlgebra,
};
use crate::coalgebra::{coseparability_form, fsmap_space};
use crate::enumerate::{classify_orbits, enumerate_fs, Filter};
use crate::error::{Error, Result};
use crate::families::{
    gen_cocycle, gen_column_idempotent, gen_group_integral, gen_idempotent_square, gen_permutation_family, gen_phi,
    gen_theta, rank_one_idempotent, theta_from_action, theta_from_group, Cocycle2, GroupTable, IdempotentMap,
};
use crate::io::{
    algebra_from_json, coalgebra_from_json, coalgebra_to_json, cocycle_from_json, group_from_json, matrix_from_json,
    matrix_to_json, phi_from_json, report_to_json, scalar_from_json, scalar_to_json, scalars_to_json, tensor_from_json,
    tensor_to_json, theta_from_json, to_canonical,
};
use crate::scalar::Field;
use crate::subalg::{build_subalgebra, certify_subalgebra, quotient_coalgebra, Verdict};
use crate::tensor::FsTensor;
use crate::verify::{check_braid, check_f_trace, check_fs, check_kz, check_qyb, check_s, CheckReport};

/// Environment variable capping the number of worker threads.
pub const WORKERS_ENV: &str = "FS_FORGE_WORKERS";

#[derive(Parser, Debug)]
#[command(name = "fs-forge", version, about = "Exact computations around the FS equation")]
pub struct Cli {
    /// Suppress timing messages on stderr.
    #[arg(long, global = true)]
    quiet: bool,
    /// Exit with status 1 when a checked property fails.
    #[arg(long, global = true)]
    strict: bool,
    #[command(flatten)]
    field: FieldArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct FieldArgs {
    /// Work over F_p.
    #[arg(long, global = true, conflicts_with = "rational")]
    p: Option<u32>,
    /// Work over the rationals.
    #[arg(long, global = true)]
    rational: bool,
}

impl FieldArgs {
    fn explicit(self) -> Result<Option<Field>> {
        match (self.p, self.rational) {
            (Some(p), _) => Field::prime(p).map(Some),
            (None, true) => Ok(Some(Field::Rational)),
            (None, false) => Ok(None),
        }
    }

    fn or_rational(self) -> Result<Field> {
        Ok(self.explicit()?.unwrap_or(Field::Rational))
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a tensor against the FS equation and its companions.
    Verify {
        #[arg(long)]
        input: PathBuf,
        /// Comma-separated list of fs, s, f, braid, qyb, kz, or all.
        #[arg(long, default_value = "all")]
        check: String,
    },
    /// Emit a tensor from one of the built-in families.
    Generate {
        #[arg(long)]
        family: String,
        #[arg(long, default_value = "")]
        params: String,
        /// Also write the bare tensor file here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List every FS solution over F_p.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "none")]
        filter: String,
        #[arg(long)]
        orbits: bool,
        /// JSON-lines file receiving one tensor per line.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The algebra A(n, R) of an FS tensor.
    Algebra {
        #[arg(long)]
        input: PathBuf,
    },
    /// The coalgebra C(R) of an FS tensor.
    Coalgebra {
        #[arg(long)]
        input: PathBuf,
    },
    /// Separability and Frobenius certificates for an algebra.
    Certify {
        #[arg(long)]
        algebra: PathBuf,
    },
    /// The space of FS-maps on a coalgebra.
    Fsmaps {
        #[arg(long)]
        coalgebra: PathBuf,
    },
}

/// What a run produced: exit code, stdout text and stderr text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Status {
    Ok,
    PropertyFailed,
    InputError,
    Inconclusive,
}

impl Status {
    fn name(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::PropertyFailed => "property-failed",
            Status::InputError => "input-error",
            Status::Inconclusive => "inconclusive",
        }
    }

    fn code(self, strict: bool) -> i32 {
        match self {
            Status::Ok => 0,
            Status::PropertyFailed => i32::from(strict),
            Status::InputError => 2,
            Status::Inconclusive => 3,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: 2,
                    stdout: to_canonical(&json!({ "status": "input-error", "error": text.trim() })),
                    stderr: text,
                },
            };
        }
    };
    let workers = std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok());
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.unwrap_or(0))
        .build()
        .expect("thread pool");
    let start = Instant::now();
    let (status, payload) = pool.install(|| match dispatch(&cli) {
        Ok(r) => r,
        Err(e) => error_payload(e),
    });
    let mut stderr = String::new();
    if let Some(err) = payload.get("error").and_then(Value::as_str) {
        stderr.push_str(&format!("error: {err}\n"));
    }
    if !cli.quiet {
        stderr.push_str(&format!("elapsed: {:.3?}\n", start.elapsed()));
    }
    let mut payload = payload;
    payload["status"] = json!(status.name());
    Outcome {
        code: status.code(cli.strict),
        stdout: to_canonical(&payload),
        stderr,
    }
}

fn error_payload(e: Error) -> (Status, Value) {
    match e {
        Error::PropertyFailed { check, report } => (
            Status::PropertyFailed,
            json!({ "check": check, "report": report_to_json(&report) }),
        ),
        Error::Inconclusive { size, cap } => (
            Status::Inconclusive,
            json!({ "error": format!("search space of {size} candidates exceeds the cap of {cap}") }),
        ),
        other => (Status::InputError, json!({ "error": other.to_string() })),
    }
}

fn read_json(path: &Path) -> Result<Value> {
    let text = fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

fn verdict_of(reports: &[(&str, CheckReport)]) -> (Status, Value) {
    let mut checks = serde_json::Map::new();
    let mut all = true;
    for (name, r) in reports {
        all &= r.passed;
        checks.insert((*name).to_string(), report_to_json(r));
    }
    let status = if all { Status::Ok } else { Status::PropertyFailed };
    (status, Value::Object(checks))
}

fn dispatch(cli: &Cli) -> Result<(Status, Value)> {
    match &cli.command {
        Command::Verify { input, check } => verify(cli, input, check),
        Command::Generate { family, params, out } => generate(cli, family, params, out.as_deref()),
        Command::Enumerate { n, filter, orbits, out } => enumerate(cli, *n, filter, *orbits, out.as_deref()),
        Command::Algebra { input } => algebra(cli, input),
        Command::Coalgebra { input } => coalgebra(cli, input),
        Command::Certify { algebra } => certify(cli, algebra),
        Command::Fsmaps { coalgebra } => fsmaps(cli, coalgebra),
    }
}

const ALL_CHECKS: [&str; 6] = ["fs", "s", "f", "braid", "qyb", "kz"];

fn verify(cli: &Cli, input: &Path, check: &str) -> Result<(Status, Value)> {
    let t = tensor_from_json(&read_json(input)?, cli.field.explicit()?)?;
    let mut names: Vec<&str> = Vec::new();
    for c in check.split(',').map(str::trim) {
        if c == "all" {
            names.extend(ALL_CHECKS);
        } else if ALL_CHECKS.contains(&c) {
            names.push(c);
        } else {
            return Err(Error::InvalidInput(format!("unknown check {c:?}")));
        }
    }
    names.sort_by_key(|c| ALL_CHECKS.iter().position(|x| x == c));
    names.dedup();
    let reports: Vec<(&str, CheckReport)> = names
        .iter()
        .map(|&c| {
            let r = match c {
                "fs" => check_fs(&t),
                "s" => check_s(&t),
                "f" => check_f_trace(&t),
                "braid" => check_braid(&t),
                "qyb" => check_qyb(&t),
                _ => check_kz(&t),
            };
            (c, r)
        })
        .collect();
    let (status, checks) = verdict_of(&reports);
    Ok((status, json!({ "n": t.n(), "field": t.field(), "checks": checks })))
}

/// `--params` accepts a file path, JSON, or a bare word such as `id(3)`.
fn parse_params(s: &str) -> Result<Value> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Value::Null);
    }
    let path = Path::new(s);
    if path.is_file() {
        return read_json(path);
    }
    Ok(serde_json::from_str(s).unwrap_or_else(|_| Value::String(s.to_string())))
}

/// `name(a, b, …)` with integer arguments.
fn shorthand(v: &Value) -> Option<(String, Vec<i64>)> {
    let s = v.as_str()?.trim();
    let Some((name, rest)) = s.split_once('(') else {
        return Some((s.to_string(), Vec::new()));
    };
    let args = rest.strip_suffix(')')?;
    let nums = args
        .split(',')
        .map(|a| a.trim().parse::<i64>().ok())
        .collect::<Option<Vec<_>>>()?;
    Some((name.trim().to_string(), nums))
}

fn bad_params(family: &str, v: &Value) -> Error {
    Error::InvalidInput(format!("cannot read parameters {v} for family {family}"))
}

fn size_param(family: &str, v: &Value, default: usize) -> Result<usize> {
    match v {
        Value::Null => Ok(default),
        Value::Number(n) => n
            .as_u64()
            .filter(|&n| n >= 1)
            .map(|n| n as usize)
            .ok_or_else(|| bad_params(family, v)),
        _ => match shorthand(v) {
            Some((_, a)) if a.len() == 1 && a[0] >= 1 => Ok(a[0] as usize),
            _ => Err(bad_params(family, v)),
        },
    }
}

fn group_param(v: &Value) -> Result<GroupTable> {
    if v.is_object() {
        return group_from_json(v);
    }
    match shorthand(v) {
        Some((name, a)) if name == "cyclic" && a.len() == 1 && a[0] >= 1 => Ok(GroupTable::cyclic(a[0] as usize)),
        Some((name, a)) if (name == "s3" || name == "symmetric") && (a.is_empty() || a == [3]) => {
            Ok(GroupTable::symmetric3())
        }
        Some((name, a)) if name == "klein" && a.is_empty() => {
            Ok(GroupTable::cyclic(2).direct_product(&GroupTable::cyclic(2)))
        }
        _ => Err(Error::InvalidInput(format!("unknown group {v}"))),
    }
}

fn generate(cli: &Cli, family: &str, params: &str, out: Option<&Path>) -> Result<(Status, Value)> {
    let f = cli.field.or_rational()?;
    let v = parse_params(params)?;
    let mut extra = serde_json::Map::new();
    let t: FsTensor = match family {
        "identity" => FsTensor::identity(size_param(family, &v, 2)?, f),
        "switch" => FsTensor::switch(size_param(family, &v, 2)?, f),
        "column-idempotent" => {
            let (n, j) = match &v {
                Value::Object(o) => (o.get("n").and_then(Value::as_u64), o.get("j").and_then(Value::as_u64)),
                Value::Array(a) if a.len() == 2 => (a[0].as_u64(), a[1].as_u64()),
                _ => (None, None),
            };
            let (Some(n), Some(j)) = (n, j) else {
                return Err(bad_params(family, &v));
            };
            gen_column_idempotent(n as usize, j as usize, f)?
        }
        "group-integral" => {
            let gi = gen_group_integral(&group_param(&v)?, f)?;
            extra.insert("central".into(), matrix_to_json(gi.central.coeffs()));
            extra.insert("eps".into(), json!(scalars_to_json(&gi.pair.eps)));
            extra.insert(
                "separability_idempotent".into(),
                gi.separability
                    .as_ref()
                    .map_or(Value::Null, |s| matrix_to_json(s.coeffs())),
            );
            gi.tensor
        }
        "cocycle" => {
            let (g, sigma) = match &v {
                Value::Object(o) if o.contains_key("group") => {
                    let g = group_param(&o["group"])?;
                    let s = match o.get("entries") {
                        Some(_) => cocycle_from_json(&json!({ "entries": o["entries"] }), &g, f)?,
                        None => Cocycle2::trivial(&g, f),
                    };
                    (g, s)
                }
                _ => {
                    let g = group_param(&v)?;
                    let s = Cocycle2::trivial(&g, f);
                    (g, s)
                }
            };
            gen_cocycle(&g, &sigma)?
        }
        "theta" => {
            let (theta, a) = match &v {
                Value::Object(o) if o.contains_key("table") => (theta_from_json(&v)?, None),
                Value::Object(o) if o.contains_key("theta") || o.contains_key("group") => {
                    let theta = match (o.get("theta"), o.get("group"), o.get("action")) {
                        (Some(t), _, _) => theta_from_json(t)?,
                        (None, Some(g), Some(act)) => {
                            let act: Vec<Vec<usize>> =
                                serde_json::from_value(act.clone()).map_err(|_| bad_params(family, &v))?;
                            theta_from_action(&group_param(g)?, &act)?
                        }
                        (None, Some(g), None) => theta_from_group(&group_param(g)?),
                        _ => return Err(bad_params(family, &v)),
                    };
                    let a = o.get("a").map(|a| scalar_from_json(f, a)).transpose()?;
                    (theta, a)
                }
                _ => (theta_from_group(&group_param(&v)?), None),
            };
            // Default weight n⁻¹, or 1 when n vanishes in the field.
            let a = a.unwrap_or_else(|| f.inverse_of_int(theta.n() as i64).unwrap_or_else(|| f.one()));
            extra.insert("a".into(), scalar_to_json(&a));
            gen_theta(&theta, &a)?
        }
        "phi" => {
            let m = match &v {
                Value::Object(_) => phi_from_json(&v)?,
                Value::Array(_) => {
                    let map: Vec<usize> = serde_json::from_value(v.clone()).map_err(|_| bad_params(family, &v))?;
                    IdempotentMap::new(map)?
                }
                _ => match shorthand(&v) {
                    Some((name, a)) if name == "id" && a.len() == 1 && a[0] >= 1 => {
                        IdempotentMap::identity(a[0] as usize)
                    }
                    _ => return Err(bad_params(family, &v)),
                },
            };
            gen_phi(&m, f)?
        }
        "permutation" => {
            let a = match &v {
                Value::Object(o) if o.contains_key("a") => matrix_from_json(f, &o["a"])?,
                _ => matrix_from_json(f, &v)?,
            };
            gen_permutation_family(&a)?
        }
        "square" => {
            let p = match shorthand(&v) {
                Some((name, a)) if name == "rank-one" && a.len() == 2 => {
                    rank_one_idempotent(&f.int(a[0]), &f.int(a[1]))
                }
                _ => matrix_from_json(f, &v)?,
            };
            gen_idempotent_square(&p)?
        }
        other => return Err(Error::InvalidInput(format!("unknown family {other:?}"))),
    };
    let reports = [("fs", check_fs(&t)), ("s", check_s(&t)), ("f", check_f_trace(&t))];
    let (_, checks) = verdict_of(&reports);
    let tensor = tensor_to_json(&t);
    if let Some(path) = out {
        fs::write(path, to_canonical(&tensor))?;
    }
    let mut payload = json!({ "family": family, "tensor": tensor, "checks": checks });
    for (k, x) in extra {
        payload[k] = x;
    }
    Ok((Status::Ok, payload))
}

fn enumerate(cli: &Cli, n: usize, filter: &str, orbits: bool, out: Option<&Path>) -> Result<(Status, Value)> {
    let p = cli
        .field
        .p
        .ok_or_else(|| Error::InvalidInput("enumerate needs --p".into()))?;
    let filter: Filter = filter.parse()?;
    let set = enumerate_fs(n, p, filter)?;
    if let Some(path) = out {
        let mut text = String::new();
        for t in set.tensors() {
            text.push_str(&serde_json::to_string(&tensor_to_json(&t))?);
            text.push('\n');
        }
        fs::write(path, text)?;
    }
    let mut payload = json!({ "n": n, "p": p, "filter": filter.name(), "count": set.count() });
    if orbits {
        let report = classify_orbits(&set)?;
        payload["orbit_count"] = json!(report.orbit_count());
        payload["orbit_sizes"] = json!(report.sizes());
    }
    Ok((Status::Ok, payload))
}

fn verdict_json(v: Verdict) -> Value {
    match v {
        Verdict::Yes => json!(true),
        Verdict::No => json!(false),
        Verdict::Inconclusive => json!("inconclusive"),
    }
}

fn algebra(cli: &Cli, input: &Path) -> Result<(Status, Value)> {
    let t = tensor_from_json(&read_json(input)?, cli.field.explicit()?)?;
    let res = build_subalgebra(&t)?;
    let cert = certify_subalgebra(&res, &t)?;
    let a = res.algebra();
    Ok((
        Status::Ok,
        json!({
            "n": t.n(),
            "field": t.field(),
            "dim": res.dim(),
            "basis": res.basis().iter().map(matrix_to_json).collect::<Vec<_>>(),
            "mul": scalars_to_json(a.mul_table()),
            "unit": scalars_to_json(res.unit_coords()),
            "r_in_basis": matrix_to_json(res.r_in_basis()),
            "certificates": {
                "central": cert.central,
                "separable": cert.separable,
                "frobenius": cert.frobenius,
                "counit": cert.counit.as_deref().map(scalars_to_json),
                "s_normalized": cert.s_normalized,
                "f_trace_normalized": cert.f_trace_normalized,
                "algebra_separable": cert.algebra_separable,
                "algebra_frobenius": verdict_json(cert.algebra_frobenius),
            },
        }),
    ))
}

fn coalgebra(cli: &Cli, input: &Path) -> Result<(Status, Value)> {
    let t = tensor_from_json(&read_json(input)?, cli.field.explicit()?)?;
    let res = build_subalgebra(&t)?;
    let q = quotient_coalgebra(&t, &res)?;
    let mut payload = coalgebra_to_json(q.coalgebra());
    payload["representatives"] = json!(q
        .representatives()
        .iter()
        .map(|&(i, j)| [i + 1, j + 1])
        .collect::<Vec<_>>());
    payload["coideal_rank"] = json!(q.generators().len());
    Ok((Status::Ok, payload))
}

fn load_algebra(cli: &Cli, path: &Path) -> Result<StructAlgebra> {
    let a = algebra_from_json(&read_json(path)?, cli.field.explicit()?)?;
    let rep = a.validate();
    if !rep.passed {
        return Err(Error::PropertyFailed {
            check: "algebra axioms".into(),
            report: Box::new(rep),
        });
    }
    Ok(a)
}

fn certify(cli: &Cli, path: &Path) -> Result<(Status, Value)> {
    let a = load_algebra(cli, path)?;
    let sep = separability_idempotent(&a)?;
    let mut payload = json!({
        "dim": a.dim(),
        "field": a.field(),
        "separable": sep.is_some(),
        "separability_idempotent": sep.as_ref().map(|e| matrix_to_json(e.coeffs())),
    });
    let status = match frobenius_pair(&a) {
        Ok(Some(pair)) => {
            let ch = characteristic_element(&a, &pair.e)?;
            payload["frobenius"] = json!(true);
            payload["pair"] = json!({
                "e": matrix_to_json(pair.e.coeffs()),
                "eps": scalars_to_json(&pair.eps),
            });
            payload["dual_basis"] = report_to_json(&check_dual_basis(&a, &pair));
            payload["characteristic"] = json!({
                "omega": scalars_to_json(&ch.omega),
                "invertible": ch.invertible,
            });
            Status::Ok
        }
        Ok(None) => {
            payload["frobenius"] = json!(false);
            payload["pair"] = Value::Null;
            Status::Ok
        }
        Err(Error::Inconclusive { size, cap }) => {
            payload["frobenius"] = json!("inconclusive");
            payload["pair"] = Value::Null;
            let msg = if matches!(a.field(), Field::Prime { .. }) {
                format!("Frobenius search over {size} forms exceeds the cap of {cap}")
            } else {
                format!("Frobenius search over Q is unbounded (cap {cap})")
            };
            payload["error"] = json!(msg);
            Status::Inconclusive
        }
        Err(e) => return Err(e),
    };
    Ok((status, payload))
}

fn fsmaps(cli: &Cli, path: &Path) -> Result<(Status, Value)> {
    let c = coalgebra_from_json(&read_json(path)?, cli.field.explicit()?)?;
    let rep = c.validate();
    if !rep.passed {
        return Err(Error::PropertyFailed {
            check: "coalgebra axioms".into(),
            report: Box::new(rep),
        });
    }
    let space = fsmap_space(&c);
    let cosep = coseparability_form(&c)?;
    Ok((
        Status::Ok,
        json!({
            "dim": c.dim(),
            "field": c.field(),
            "fsmap_dim": space.len(),
            "basis": space.iter().map(|s| matrix_to_json(&s.sigma)).collect::<Vec<_>>(),
            "coseparable": cosep.is_some(),
            "coseparability_form": cosep.as_ref().map(|s| matrix_to_json(&s.sigma)),
        }),
    ))
}
