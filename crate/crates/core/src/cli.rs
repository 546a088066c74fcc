//! The `mexstat` command line. [`run`] does all the work and returns the exit
//! code with captured output, so the binary is a two-line wrapper.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::identities::{
    lookup, registry, reports_to_csv, reports_to_json, reports_to_text, verify, verify_all,
    Backing, IdentityReport, DEFAULT_MAX_N_ENUM, DEFAULT_MAX_N_SERIES,
};
use crate::mexfun::{
    default_method, mex_generating_function, mex_generating_function_bar, p_mex, pbar_mex, Method,
};
use crate::partitions::{p_count, set_enumeration_cap, Partition, MAX_ENUMERATION_CAP};
use crate::series::{
    alternating_theta, euler_product, jtp_specialized, residue_product, FactorSign, Parity,
    ResidueCondition, ResidueMode, Side, TruncatedSeries,
};
use crate::statistics::{
    crank, crank_count, crank_moment, goe_count, mex, rank, rank_count, rank_moment, spt_direct,
    CountMethod, MexParams,
};
use crate::tables;

pub const DEFAULT_MAX_PRECISION: usize = 2000;
pub const MAX_PRECISION_ENV: &str = "MEXSTAT_MAX_PRECISION";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "mexstat",
    version,
    about = "Exact partition statistics around the extended mex function"
)]
pub struct Cli {
    /// Largest n for which partitions may be enumerated.
    #[arg(long, global = true, value_name = "N")]
    pub enum_cap: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute a single quantity.
    Compute(ComputeArgs),
    /// Regenerate one of the worked tables.
    Table {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=3))]
        id: u8,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Expand a generating function or product.
    Series(SeriesArgs),
    /// Run identity checks; `all` runs the whole registry.
    Verify {
        id: String,
        /// Upper end for the named check, or for enumeration-backed checks with `all`.
        #[arg(long)]
        max_n: Option<usize>,
        /// Upper end for series-backed checks with `all`.
        #[arg(long)]
        max_n_series: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
        /// Report elapsed_ms as 0 so output is byte-stable.
        #[arg(long)]
        no_timing: bool,
    },
    /// List the registered identity checks.
    ListIdentities {
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ComputeKind {
    /// p(n)
    #[value(name = "p")]
    P,
    /// p_{A,a}(n)
    #[value(name = "p_aa")]
    PAa,
    /// p̄_{A,a}(n)
    #[value(name = "pbar_aa")]
    PbarAa,
    Spt,
    /// rank of --partition
    Rank,
    /// crank of --partition
    Crank,
    /// mex_{A,a} of --partition
    Mex,
    /// N(m, n)
    #[value(name = "N")]
    N,
    /// M(m, n)
    #[value(name = "M")]
    M,
    /// k-th rank or crank moment
    Moment,
    /// partitions with rank <= -2
    Goe,
}

impl ComputeKind {
    pub fn name(self) -> &'static str {
        match self {
            Self::P => "p",
            Self::PAa => "p_aa",
            Self::PbarAa => "pbar_aa",
            Self::Spt => "spt",
            Self::Rank => "rank",
            Self::Crank => "crank",
            Self::Mex => "mex",
            Self::N => "N",
            Self::M => "M",
            Self::Moment => "moment",
            Self::Goe => "goe",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Statistic {
    Rank,
    Crank,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[arg(value_enum)]
    pub kind: ComputeKind,
    #[arg(long = "A", value_name = "A")]
    pub step: Option<u64>,
    #[arg(long = "a", value_name = "a")]
    pub base: Option<u64>,
    #[arg(long, allow_negative_numbers = true)]
    pub n: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    pub m: Option<i64>,
    #[arg(long)]
    pub k: Option<u32>,
    /// Parts separated by commas, in any order.
    #[arg(long)]
    pub partition: Option<String>,
    /// enum | series | recurrence
    #[arg(long)]
    pub method: Option<Method>,
    #[arg(long, value_enum)]
    pub of: Option<Statistic>,
    #[arg(long, value_enum, default_value_t)]
    pub format: OutputFormat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeriesExpr {
    Euler,
    #[value(name = "F")]
    F,
    #[value(name = "Fbar")]
    Fbar,
    ResidueProduct,
    Theta,
    Jtp,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    #[arg(value_enum)]
    pub expr: SeriesExpr,
    #[arg(long)]
    pub precision: usize,
    #[arg(long = "A", value_name = "A")]
    pub step: Option<u64>,
    #[arg(long = "a", value_name = "a")]
    pub base: Option<u64>,
    /// residue-product: the modulus.
    #[arg(long)]
    pub modulus: Option<u64>,
    /// residue-product: comma-separated residues.
    #[arg(long, value_delimiter = ',')]
    pub residues: Vec<u64>,
    /// residue-product: also include the negatives of the residues.
    #[arg(long)]
    pub symmetric: bool,
    /// residue-product: keep (include) or drop (exclude) the listed residues.
    #[arg(long, value_enum, default_value = "include")]
    pub mode: ModeArg,
    /// residue-product: factors (1 - q^n) or (1 + q^n).
    #[arg(long, value_enum, default_value = "minus")]
    pub sign: SignArg,
    /// theta: exponent e(n) = (alpha n^2 + beta n)/2 + gamma, summed with sign (-1)^n.
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    pub beta: Option<i64>,
    #[arg(long, allow_negative_numbers = true, default_value_t = 0)]
    pub gamma: i64,
    /// theta: first index of the sum.
    #[arg(long, allow_negative_numbers = true, default_value_t = 0)]
    pub start: i64,
    /// theta: sum over all integers instead of n >= start.
    #[arg(long)]
    pub bilateral: bool,
    /// jtp: parameters k and i.
    #[arg(long)]
    pub k: Option<u64>,
    #[arg(long)]
    pub i: Option<u64>,
    #[arg(long, value_enum, default_value = "even")]
    pub parity: ParityArg,
    #[arg(long, value_enum, default_value = "sum")]
    pub side: SideArg,
    #[arg(long, value_enum, default_value_t)]
    pub format: OutputFormat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Include,
    Exclude,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SignArg {
    Minus,
    Plus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ParityArg {
    Even,
    Odd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Sum,
    Product,
}

/// Exit code and captured streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    if let Some(cap) = cli.enum_cap {
        if cap > MAX_ENUMERATION_CAP {
            return usage_failure(Error::Usage(format!(
                "--enum-cap {cap} exceeds the hard limit {MAX_ENUMERATION_CAP}"
            )));
        }
        set_enumeration_cap(cap);
    }
    let result = match cli.command {
        Command::Compute(args) => compute(&args).map(Outcome::ok),
        Command::Table { id, format } => table(id, format).map(Outcome::ok),
        Command::Series(args) => series(&args).map(Outcome::ok),
        Command::Verify {
            id,
            max_n,
            max_n_series,
            format,
            no_timing,
        } => verify_cmd(&id, max_n, max_n_series, format, no_timing),
        Command::ListIdentities { format } => list_identities(format).map(Outcome::ok),
    };
    result.unwrap_or_else(usage_failure)
}

fn usage_failure(e: Error) -> Outcome {
    Outcome {
        code: 2,
        stdout: String::new(),
        stderr: format!("mexstat: {e}\n"),
    }
}

fn need<T>(v: Option<T>, flag: &str, kind: &str) -> Result<T> {
    v.ok_or_else(|| Error::Usage(format!("{kind} requires {flag}")))
}

struct Computed {
    kind: String,
    inputs: Vec<(String, String)>,
    value: String,
    method: String,
}

fn compute(args: &ComputeArgs) -> Result<String> {
    use ComputeKind as K;
    let kind = args.kind;
    let label = kind.name().to_string();
    let n_of = || need(args.n, "--n", &label);
    let nonneg = |n: i64| {
        usize::try_from(n).map_err(|_| Error::Usage(format!("--n must be non-negative, got {n}")))
    };
    let params = || {
        MexParams::new(
            need(args.step, "--A", &label)?,
            need(args.base, "--a", &label)?,
        )
    };
    let partition =
        || -> Result<Partition> { need(args.partition.as_deref(), "--partition", &label)?.parse() };
    let count_method = |m: Option<Method>| match m {
        None | Some(Method::Enumeration) => Ok((CountMethod::Combinatorial, "enumeration")),
        Some(Method::Series) => Ok((CountMethod::Series, "series")),
        Some(Method::Recurrence) => Err(Error::Usage(format!("{label} has no recurrence method"))),
    };
    let mut inputs = Vec::new();
    let mut put = |k: &str, v: String| inputs.push((k.to_string(), v));

    let (value, method): (BigInt, String) = match kind {
        K::P => {
            let n = n_of()?;
            put("n", n.to_string());
            (p_count(n), "recurrence".into())
        }
        K::PAa | K::PbarAa => {
            let (pm, n) = (params()?, n_of()?);
            let method = args.method.unwrap_or_else(|| default_method(n));
            put("A", pm.step().to_string());
            put("a", pm.base().to_string());
            put("n", n.to_string());
            let v = if kind == K::PAa {
                p_mex(pm, n, method)?
            } else {
                pbar_mex(pm, n, method)?
            };
            (v, method.to_string())
        }
        K::Spt => {
            let n = nonneg(n_of()?)?;
            put("n", n.to_string());
            (spt_direct(n)?, "enumeration".into())
        }
        K::Goe => {
            let n = nonneg(n_of()?)?;
            put("n", n.to_string());
            (goe_count(n)?, "enumeration".into())
        }
        K::Rank | K::Crank | K::Mex => {
            let pi = partition()?;
            put("partition", pi.to_string());
            let v: BigInt = match kind {
                K::Rank => rank(&pi).into(),
                K::Crank => crank(&pi).into(),
                _ => {
                    let pm = params()?;
                    put("A", pm.step().to_string());
                    put("a", pm.base().to_string());
                    mex(&pi, pm).into()
                }
            };
            (v, "direct".into())
        }
        K::N | K::M => {
            let (m, n) = (need(args.m, "--m", &label)?, nonneg(n_of()?)?);
            let (cm, name) = count_method(args.method)?;
            put("m", m.to_string());
            put("n", n.to_string());
            let v = if kind == K::N {
                rank_count(m, n, cm)?
            } else {
                crank_count(m, n, cm)?
            };
            (v, name.into())
        }
        K::Moment => {
            let of = need(args.of, "--of", &label)?;
            let (k, n) = (need(args.k, "--k", &label)?, nonneg(n_of()?)?);
            put("of", format!("{of:?}").to_lowercase());
            put("k", k.to_string());
            put("n", n.to_string());
            match of {
                Statistic::Rank => {
                    if args.method.is_some_and(|m| m != Method::Enumeration) {
                        return Err(Error::Usage("rank moments are enumerated".into()));
                    }
                    (rank_moment(k, n)?, "enumeration".into())
                }
                Statistic::Crank => {
                    let (cm, name) = count_method(args.method)?;
                    (crank_moment(k, n, cm)?, name.into())
                }
            }
        }
    };

    let out = Computed {
        kind: label,
        inputs,
        value: value.to_string(),
        method,
    };
    Ok(match args.format {
        OutputFormat::Text => {
            let inputs: Vec<String> = out.inputs.iter().map(|(k, v)| format!("{k}={v}")).collect();
            format!(
                "{}({}) = {}  [{}]\n",
                out.kind,
                inputs.join(", "),
                out.value,
                out.method
            )
        }
        OutputFormat::Json => {
            let inputs: serde_json::Map<String, serde_json::Value> = out
                .inputs
                .iter()
                .map(|(k, v)| (k.clone(), json!(v)))
                .collect();
            let v = json!({ "kind": out.kind, "inputs": inputs, "value": out.value, "method": out.method });
            format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
        }
        OutputFormat::Csv => format!(
            "kind,value,method\n{},{},{}\n",
            out.kind, out.value, out.method
        ),
    })
}

fn table(id: u8, format: OutputFormat) -> Result<String> {
    let t = tables::table(id)?;
    match format {
        OutputFormat::Text => Ok(t.to_text()),
        OutputFormat::Csv => t.to_csv(),
        OutputFormat::Json => Ok(t.to_json()? + "\n"),
    }
}

/// Largest precision `series` accepts, from the environment when set.
pub fn max_precision() -> Result<usize> {
    match std::env::var(MAX_PRECISION_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| {
            Error::Usage(format!(
                "{MAX_PRECISION_ENV}={v} is not a non-negative integer"
            ))
        }),
        Err(_) => Ok(DEFAULT_MAX_PRECISION),
    }
}

fn series(args: &SeriesArgs) -> Result<String> {
    let p = args.precision;
    let cap = max_precision()?;
    if p > cap {
        return Err(Error::Capacity(format!(
            "precision {p} exceeds the maximum {cap} (set {MAX_PRECISION_ENV} to raise it)"
        )));
    }
    let label = args
        .expr
        .to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string();
    let params = || {
        MexParams::new(
            need(args.step, "--A", &label)?,
            need(args.base, "--a", &label)?,
        )
    };
    let s: TruncatedSeries = match args.expr {
        SeriesExpr::Euler => euler_product(p),
        SeriesExpr::F => mex_generating_function(params()?, p),
        SeriesExpr::Fbar => mex_generating_function_bar(params()?, p),
        SeriesExpr::ResidueProduct => {
            let modulus = need(args.modulus, "--modulus", &label)?;
            let sign = match args.sign {
                SignArg::Minus => FactorSign::Minus,
                SignArg::Plus => FactorSign::Plus,
            };
            let mode = match args.mode {
                ModeArg::Include => ResidueMode::Include,
                ModeArg::Exclude => ResidueMode::Exclude,
            };
            let cond = if args.symmetric {
                ResidueCondition::symmetric(modulus, &args.residues, sign, mode)?
            } else {
                ResidueCondition::new(modulus, args.residues.iter().copied(), sign, mode)?
            };
            residue_product(&cond, p)
        }
        SeriesExpr::Theta => {
            let alpha = need(args.alpha, "--alpha", &label)?;
            let beta = need(args.beta, "--beta", &label)?;
            if alpha <= 0 || (alpha + beta) % 2 != 0 {
                return Err(Error::Usage(
                    "theta needs alpha > 0 and alpha + beta even so that every exponent is an integer"
                        .into(),
                ));
            }
            let gamma = args.gamma;
            let e = move |n: i64| (alpha * n * n + beta * n) / 2 + gamma;
            if args.bilateral {
                crate::series::bilateral_theta(e, p)?
            } else {
                alternating_theta(e, args.start, p)?
            }
        }
        SeriesExpr::Jtp => {
            let parity = match args.parity {
                ParityArg::Even => Parity::Even,
                ParityArg::Odd => Parity::Odd,
            };
            let side = match args.side {
                SideArg::Sum => Side::Sum,
                SideArg::Product => Side::Product,
            };
            jtp_specialized(
                need(args.k, "--k", &label)?,
                need(args.i, "--i", &label)?,
                parity,
                side,
                p,
            )?
        }
    };
    let coeffs = s.to_decimal_strings();
    Ok(match args.format {
        OutputFormat::Text => {
            let mut out = String::new();
            for (e, c) in coeffs.iter().enumerate() {
                let _ = writeln!(out, "{e} {c}");
            }
            out
        }
        OutputFormat::Csv => {
            let mut out = String::from("exponent,coefficient\n");
            for (e, c) in coeffs.iter().enumerate() {
                let _ = writeln!(out, "{e},{c}");
            }
            out
        }
        OutputFormat::Json => {
            let v = json!({ "expr": label, "precision": p, "coefficients": coeffs });
            format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
        }
    })
}

fn verify_cmd(
    id: &str,
    max_n: Option<usize>,
    max_n_series: Option<usize>,
    format: OutputFormat,
    no_timing: bool,
) -> Result<Outcome> {
    let (mut reports, single) = if id == "all" {
        let reports = verify_all(
            max_n.unwrap_or(DEFAULT_MAX_N_ENUM),
            max_n_series.unwrap_or(DEFAULT_MAX_N_SERIES),
        )?;
        (reports, false)
    } else {
        let check = lookup(id)?;
        let default = match check.backing {
            Backing::Enumeration => DEFAULT_MAX_N_ENUM,
            Backing::Series => DEFAULT_MAX_N_SERIES,
        };
        (vec![verify(id, max_n.unwrap_or(default) as i64)?], true)
    };
    if no_timing {
        reports = reports.iter().map(IdentityReport::without_timing).collect();
    }
    let code = if reports.iter().all(IdentityReport::passed) {
        0
    } else {
        1
    };
    let stdout = match format {
        OutputFormat::Text => reports_to_text(&reports),
        OutputFormat::Csv => reports_to_csv(&reports)?,
        OutputFormat::Json if single => {
            serde_json::to_string_pretty(&reports[0]).map_err(|e| Error::Usage(e.to_string()))?
                + "\n"
        }
        OutputFormat::Json => reports_to_json(&reports)? + "\n",
    };
    Ok(Outcome {
        code,
        stdout,
        stderr: String::new(),
    })
}

#[derive(Serialize)]
struct Listed {
    id: String,
    description: String,
    valid_from: i64,
    backing: &'static str,
    method: String,
}

fn list_identities(format: OutputFormat) -> Result<String> {
    let listed: Vec<Listed> = registry()
        .into_iter()
        .map(|c| Listed {
            backing: match c.backing {
                Backing::Enumeration => "enumeration",
                Backing::Series => "series",
            },
            id: c.id,
            description: c.description,
            valid_from: c.valid_from,
            method: c.method,
        })
        .collect();
    match format {
        OutputFormat::Text => {
            let mut out = String::new();
            for l in &listed {
                let _ = writeln!(
                    out,
                    "{:<16} n >= {:<2} {:<11} {}",
                    l.id, l.valid_from, l.backing, l.description
                );
            }
            Ok(out)
        }
        OutputFormat::Json => Ok(serde_json::to_string_pretty(&listed)
            .map_err(|e| Error::Usage(e.to_string()))?
            + "\n"),
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let err = |e: csv::Error| Error::Usage(e.to_string());
            w.write_record(["id", "valid_from", "backing", "description"])
                .map_err(err)?;
            for l in &listed {
                w.write_record([
                    l.id.as_str(),
                    &l.valid_from.to_string(),
                    l.backing,
                    &l.description,
                ])
                .map_err(err)?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Usage(e.to_string()))?;
            Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
        }
    }
}
