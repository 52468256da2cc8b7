//! The `pacalc` command line: JSON in, JSON out.
//!
//! Every command prints a [`CommandResult`] envelope. Inputs may be plain
//! documents or envelopes produced by an earlier command, so commands pipe
//! into each other (`pacalc catalog show P_3_9 | pacalc check -`).

mod pretty;

use std::collections::BTreeMap;
use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::json::{from_json_str, unwrap_envelope};
use crate::algebra::{AlgebraStructure, Cochain2, Element};
use crate::catalog;
use crate::cohomology::{classical_operators, cohomology_report};
use crate::deformations::{obstructions, FormalDeformation, DEFAULT_ORDER};
use crate::error::{Error, Result};
use crate::exactnum::parse_rational;
use crate::identities::{check, Identity, PowerOptions};
use crate::structure::{
    compatible_products, lie_center, lie_type, multiplication_algebra, pierce, pierce_multi, radicals_with, split,
    RadicalOptions,
};
use crate::symalg::{build_symalg, fixtures, LiePresentation, DEFAULT_TRUNCATION};

#[derive(Debug, Parser)]
#[command(name = "pacalc", version, about = "Exact computations with admissible Poisson algebras")]
pub struct Cli {
    /// Write the result to a file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Seed for every randomized check.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Identity verdicts for an algebra.
    Check {
        input: String,
        /// Comma-separated subset of admissible, flexible, eq6, sigma3, lie,
        /// comm_assoc, leibniz, power_associative.
        #[arg(long, value_delimiter = ',')]
        identities: Vec<String>,
        /// Largest total degree for power-associativity.
        #[arg(long, default_value_t = 8)]
        degree: usize,
    },
    /// Bracket and product of an admissible algebra.
    Split { input: String },
    /// Pierce decomposition for one idempotent, or for several orthogonal ones.
    Pierce {
        input: String,
        /// Coordinates such as "0,0,1"; repeat for orthogonal families.
        #[arg(long, required = true)]
        idempotent: Vec<String>,
    },
    /// Radicals, nilalgebra test and the multiplication algebra.
    Nilradical { input: String },
    /// Cohomology dimensions and bases.
    Cohomology {
        input: String,
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=2))]
        degree: Option<u8>,
        /// Include bases.
        #[arg(long)]
        basis: bool,
        /// Cochain file whose classical operator images are also reported.
        #[arg(long)]
        operators: Option<String>,
    },
    /// Commutative associative products compatible with a Lie bracket.
    Products { input: String },
    /// Order-by-order obstructions of a truncated deformation.
    Deform {
        input: String,
        /// JSON list of cochains `[φ₁, φ₂, …]`.
        #[arg(long)]
        terms: String,
        #[arg(long)]
        order: Option<usize>,
    },
    /// Truncated symmetric algebra of a Lie algebra.
    Symalg {
        /// Lie algebra JSON, or one of lie2, diagonal3, rigid6, torus4.
        input: String,
        #[arg(long, default_value_t = DEFAULT_TRUNCATION)]
        truncation: usize,
        /// Also write the combined algebra to this file.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Named algebras.
    Catalog {
        #[command(subcommand)]
        action: CatalogCommand,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogCommand {
    List,
    Show {
        name: String,
        /// `key=value`, e.g. `alpha=1/2`.
        #[arg(long)]
        param: Vec<String>,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Recompute every recorded invariant.
    Audit,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    Error,
}

#[derive(Clone, Debug, Serialize)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Value,
    pub diagnostics: Vec<String>,
    #[serde(skip)]
    pub exit_code: i32,
}

impl CommandResult {
    fn ok(payload: Value, diagnostics: Vec<String>) -> Self {
        Self { status: Status::Ok, payload, diagnostics, exit_code: 0 }
    }

    fn error(e: &Error) -> Self {
        let exit_code = if matches!(e, Error::Invariant(_)) { 2 } else { 1 };
        Self { status: Status::Error, payload: Value::Null, diagnostics: vec![e.to_string()], exit_code }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("results serialize")
    }
}

fn read_source(path: &str, stdin: &mut dyn Read) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::InvalidData(format!("{path}: {e}")))
    }
}

fn parse_doc<T: serde::de::DeserializeOwned>(path: &str, text: &str) -> Result<T> {
    from_json_str(text).map_err(|e| Error::InvalidData(format!("{path}: {e}")))
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("results serialize")
}

fn parse_coords(text: &str) -> Result<Element> {
    let coords = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(parse_rational)
        .collect::<Result<Vec<_>>>()?;
    Ok(Element(coords))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::InvalidData(format!("{}: {e}", path.display())))
}

fn parse_terms(path: &str, text: &str) -> Result<Vec<Cochain2>> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::InvalidData(format!("{path}: {e}")))?;
    let value = match unwrap_envelope(value) {
        Value::Object(mut o) if o.contains_key("terms") => o.remove("terms").unwrap_or(Value::Null),
        v => v,
    };
    let list = match value {
        Value::Array(items) => items,
        single => vec![single],
    };
    list.into_iter()
        .map(|v| serde_json::from_value(v).map_err(|e| Error::InvalidData(format!("{path}: {e}"))))
        .collect()
}

struct Outcome {
    payload: Value,
    diagnostics: Vec<String>,
}

impl Outcome {
    fn new(payload: Value) -> Self {
        Self { payload, diagnostics: Vec::new() }
    }
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<Outcome> {
    let load = |path: &str, stdin: &mut dyn Read| -> Result<AlgebraStructure> {
        parse_doc(path, &read_source(path, stdin)?)
    };
    match &cli.command {
        Command::Check { input, identities, degree } => {
            let alg = load(input, stdin)?;
            let which = if identities.is_empty() {
                Identity::ALL.to_vec()
            } else {
                identities.iter().map(|s| s.parse()).collect::<Result<Vec<_>>>()?
            };
            let power = PowerOptions { max_total_degree: *degree, seed: cli.seed, ..PowerOptions::default() };
            let report = check(&alg, &which, power);
            let mut out = Outcome::new(to_value(&report));
            for name in &report.non_applicable {
                out.diagnostics.push(format!("{name}: hypotheses do not hold for this algebra"));
            }
            Ok(out)
        }
        Command::Split { input } => {
            let alg = load(input, stdin)?;
            let pair = split(&alg)?;
            Ok(Outcome::new(json!({
                "bracket": pair.bracket(),
                "product": pair.product(),
                "lie_type": lie_type(pair.bracket()),
                "lie_center": lie_center(&pair),
                "product_trivial": pair.product().mu().is_zero(),
            })))
        }
        Command::Pierce { input, idempotent } => {
            let alg = load(input, stdin)?;
            let es = idempotent.iter().map(|s| parse_coords(s)).collect::<Result<Vec<_>>>()?;
            if let [e] = es.as_slice() {
                Ok(Outcome::new(to_value(&pierce(&alg, e)?)))
            } else {
                let parts = pierce_multi(&alg, &es)?;
                Ok(Outcome::new(json!({ "idempotents": es, "components": parts })))
            }
        }
        Command::Nilradical { input } => {
            let alg = load(input, stdin)?;
            let opts = RadicalOptions { seed: cli.seed, ..RadicalOptions::default() };
            let report = radicals_with(&alg, opts)?;
            let ops = multiplication_algebra(&alg, opts.trials, cli.seed);
            let mut payload = to_value(&report);
            payload["multiplication_algebra"] = to_value(&ops);
            Ok(Outcome::new(payload))
        }
        Command::Cohomology { input, degree, basis, operators } => {
            let alg = load(input, stdin)?;
            let r = cohomology_report(&alg)?;
            let mut payload = match degree {
                None => {
                    let mut v = to_value(&r);
                    if !basis {
                        let o = v.as_object_mut().expect("report is an object");
                        o.remove("z2_basis");
                        o.remove("b2_basis");
                    }
                    v
                }
                Some(0) => json!({ "degree": 0, "h0": r.h0_basis, "h0_two_sided": r.h0_two_sided }),
                Some(1) => json!({ "degree": 1, "dims": r.h1_dims }),
                Some(_) => {
                    let mut v = json!({
                        "degree": 2,
                        "dims": { "cocycles": r.dim_z2, "coboundaries": r.dim_b2, "cohomology": r.dim_h2 },
                    });
                    if *basis {
                        v["z2_basis"] = to_value(&r.z2_basis);
                        v["b2_basis"] = to_value(&r.b2_basis);
                    }
                    v
                }
            };
            if let Some(path) = operators {
                let phi: Cochain2 = parse_doc(path, &read_source(path, stdin)?)?;
                payload["operators"] = to_value(&classical_operators(&split(&alg)?, &phi)?);
            }
            Ok(Outcome::new(payload))
        }
        Command::Products { input } => {
            let bracket = load(input, stdin)?;
            let p = compatible_products(&bracket)?;
            let variety = p.variety();
            let mut out = Outcome::new(json!({
                "dim": p.dim(),
                "basis": p.basis(),
                "variety": variety,
            }));
            if variety.dim.is_none() {
                out.diagnostics.push("associativity variety not determined for this dimension".into());
            }
            Ok(out)
        }
        Command::Deform { input, terms, order } => {
            let alg = load(input, stdin)?;
            let phis = parse_terms(terms, &read_source(terms, stdin)?)?;
            let k = order.unwrap_or(DEFAULT_ORDER.max(phis.len()));
            let mut out = Outcome::new(Value::Null);
            if k < phis.len() {
                out.diagnostics.push(format!("terms beyond order {k} ignored"));
            }
            let d = FormalDeformation::new(alg, phis)?.with_order(k);
            out.payload = to_value(&obstructions(&d)?);
            Ok(out)
        }
        Command::Symalg { input, truncation, emit } => {
            let g: LiePresentation = match fixtures::by_name(input) {
                Some(g) if input != "-" && !Path::new(input).exists() => g,
                _ => parse_doc(input, &read_source(input, stdin)?)?,
            };
            let s = build_symalg(&g, *truncation)?;
            let alg = s.algebra();
            if let Some(path) = emit {
                write_file(path, &to_value(&alg).to_string())?;
            }
            Ok(Outcome::new(json!({
                "basis": s.basis.labels(),
                "pair": s.pair,
                "algebra": alg,
            })))
        }
        Command::Catalog { action } => match action {
            CatalogCommand::List => Ok(Outcome::new(to_value(&catalog::list()))),
            CatalogCommand::Show { name, param, emit } => {
                let params = catalog::parse_params(param)?;
                let alg = catalog::get(name, &params)?;
                if let Some(path) = emit {
                    write_file(path, &to_value(&alg).to_string())?;
                }
                let mut out = Outcome::new(to_value(&alg));
                if name == "P_2_6" {
                    out.diagnostics.push("P_2_6 is the 2-dim non-abelian admissible algebra".into());
                }
                Ok(out)
            }
            CatalogCommand::Audit => {
                let r = catalog::audit_all()?;
                let mut out = Outcome::new(to_value(&r));
                for e in r.entries.iter().filter(|e| !e.passed()) {
                    out.diagnostics.push(format!("{}: {}", e.label, e.failures.join(", ")));
                }
                Ok(out)
            }
        },
    }
}

/// Runs a parsed command line.
pub fn run_cli(cli: &Cli, stdin: &mut dyn Read) -> CommandResult {
    match execute(cli, stdin) {
        Ok(o) => CommandResult::ok(o.payload, o.diagnostics),
        Err(e) => CommandResult::error(&e),
    }
}

/// Renders a result as the command would print it.
pub fn render(cli: &Cli, result: &CommandResult) -> String {
    if cli.pretty {
        pretty::render(&cli.command, result)
    } else {
        result.to_json()
    }
}

/// Parses `argv` (including the program name), runs it and returns the
/// result with its exit code. Parse failures become error results; help and
/// version requests are returned as text in the payload.
pub fn run<I, T>(argv: I, stdin: &mut dyn Read) -> (CommandResult, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    (CommandResult::ok(Value::String(text.clone()), Vec::new()), text)
                }
                _ => {
                    let r = CommandResult::error(&Error::InvalidParameter(text.trim_end().to_string()));
                    let json = r.to_json();
                    (r, json)
                }
            };
        }
    };
    let result = run_cli(&cli, stdin);
    let mut text = render(&cli, &result);
    if let Some(path) = &cli.out {
        if let Err(e) = write_file(path, &result.to_json()) {
            let r = CommandResult::error(&e);
            text = r.to_json();
            return (r, text);
        }
        text.clear();
    }
    (result, text)
}

/// Entry point for the binary: prints the result and returns the exit code.
pub fn main_with_args() -> i32 {
    let mut stdin = std::io::stdin();
    let (result, text) = run(std::env::args_os(), &mut stdin);
    if !text.is_empty() {
        use std::io::Write;
        let _ = writeln!(std::io::stdout().lock(), "{}", text.trim_end());
    }
    result.exit_code
}

/// Payload lookup helper used by tests and examples.
pub fn payload_field<'a>(result: &'a CommandResult, path: &[&str]) -> Option<&'a Value> {
    path.iter().try_fold(&result.payload, |v, key| v.get(*key))
}

#[doc(hidden)]
pub fn _params(items: &[String]) -> Result<BTreeMap<String, crate::exactnum::Rational>> {
    catalog::parse_params(items)
}
