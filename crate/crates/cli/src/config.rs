//! Job files.
//!
//! A job file is a list of `key = value` lines. `#` starts a comment. An embedding is given
//! either by a builder call
//!
//! ```text
//! embedding = sp_in_sl(2)
//! ```
//!
//! or by descriptors and a coroot matrix, one row per simple root of the target:
//!
//! ```text
//! group = A2
//! target = A3
//! cartan_map:
//!   1 0
//!   0 1
//!   0 0
//! end
//! ```
//!
//! Optional keys: `command`, `weyl_cap`, `rep_dim_cap`, `nmax`, `output`, `format`,
//! `point` (as `mu ; muhat`, e.g. `1 0 ; 0 1 0`) and `witness` (`true`/`false`).

use std::fmt;
use std::str::FromStr;

use branchcone::{branching, Budgets, Embedding};

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Facets,
    Rays,
    Check,
    Verify,
}

impl FromStr for Command {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "facets" => Ok(Command::Facets),
            "rays" => Ok(Command::Rays),
            "check" => Ok(Command::Check),
            "verify" => Ok(Command::Verify),
            _ => Err(CliError::Parse(format!("unknown command `{s}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Tsv,
    Json,
}

impl FromStr for Format {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "tsv" => Ok(Format::Tsv),
            "json" => Ok(Format::Json),
            _ => Err(CliError::Parse(format!("unknown format `{s}`"))),
        }
    }
}

/// Where the embedding comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EmbeddingSpec {
    Builder { name: String, args: Vec<String> },
    Explicit { group: String, target: String, cartan_map: Vec<Vec<i64>> },
}

impl fmt::Display for EmbeddingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EmbeddingSpec::Builder { name, args } => write!(f, "{name}({})", args.join(", ")),
            EmbeddingSpec::Explicit { group, target, .. } => write!(f, "explicit({group}, {target})"),
        }
    }
}

impl EmbeddingSpec {
    pub fn build(&self) -> Result<Embedding, CliError> {
        match self {
            EmbeddingSpec::Explicit { group, target, cartan_map } => {
                Ok(branching::explicit(group, target, cartan_map.clone())?)
            }
            EmbeddingSpec::Builder { name, args } => {
                let arity = |n: usize| {
                    if args.len() == n {
                        Ok(())
                    } else {
                        Err(CliError::Parse(format!("{name} takes {n} argument(s), got {}", args.len())))
                    }
                };
                let int = |s: &str| s.parse::<usize>().map_err(|_| CliError::Parse(format!("`{s}` is not a number")));
                let emb = match name.as_str() {
                    "sp_in_sl" => {
                        arity(1)?;
                        branching::sp_in_sl(int(&args[0])?)?
                    }
                    "principal_sl2" => {
                        arity(1)?;
                        branching::principal_sl2(&args[0])?
                    }
                    "root_sl2" => {
                        arity(2)?;
                        branching::root_sl2(&args[0], int(&args[1])?)?
                    }
                    "diagonal" => {
                        arity(2)?;
                        branching::diagonal(&args[0], int(&args[1])?)?
                    }
                    "factor" => {
                        arity(3)?;
                        branching::factor(&args[0], &args[1], int(&args[2])?)?
                    }
                    "dynkin_sl2" => {
                        arity(2)?;
                        branching::dynkin_sl2(&args[0], &parse_ints(&args[1])?)?
                    }
                    _ => return Err(CliError::Parse(format!("unknown embedding builder `{name}`"))),
                };
                Ok(emb)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobConfig {
    pub embedding: EmbeddingSpec,
    pub command: Option<Command>,
    pub weyl_cap: usize,
    pub rep_dim_cap: u64,
    pub nmax: u32,
    pub output: Option<String>,
    pub format: Format,
    pub point: Option<(Vec<i64>, Vec<i64>)>,
    pub witness: bool,
}

impl JobConfig {
    pub fn budgets(&self) -> Budgets {
        Budgets { weyl_cap: self.weyl_cap, rep_dim_cap: self.rep_dim_cap, nmax: self.nmax }
    }
}

pub fn parse_ints(s: &str) -> Result<Vec<i64>, CliError> {
    s.split_whitespace()
        .map(|t| t.parse::<i64>().map_err(|_| CliError::Parse(format!("`{t}` is not an integer"))))
        .collect()
}

/// Parses `mu ; muhat`.
pub fn parse_point(s: &str) -> Result<(Vec<i64>, Vec<i64>), CliError> {
    let (a, b) = s.split_once(';').ok_or_else(|| CliError::Parse(format!("point `{s}` must look like `1 0 ; 0 1 0`")))?;
    Ok((parse_ints(a)?, parse_ints(b)?))
}

fn parse_builder(s: &str) -> Result<EmbeddingSpec, CliError> {
    let bad = || CliError::Parse(format!("embedding `{s}` must look like name(arg, ...)"));
    let (name, rest) = s.split_once('(').ok_or_else(bad)?;
    let inner = rest.strip_suffix(')').ok_or_else(bad)?;
    let args: Vec<String> =
        if inner.trim().is_empty() { Vec::new() } else { inner.split(',').map(|a| a.trim().to_string()).collect() };
    Ok(EmbeddingSpec::Builder { name: name.trim().to_string(), args })
}

fn positive<T: FromStr + PartialOrd + Default>(key: &str, v: &str) -> Result<T, CliError> {
    match v.parse::<T>() {
        Ok(x) if x > T::default() => Ok(x),
        _ => Err(CliError::Parse(format!("`{key}` must be a positive integer, got `{v}`"))),
    }
}

impl FromStr for JobConfig {
    type Err = CliError;

    fn from_str(text: &str) -> Result<Self, CliError> {
        let defaults = Budgets::default();
        let mut builder: Option<EmbeddingSpec> = None;
        let (mut group, mut target, mut matrix): (Option<String>, Option<String>, Option<Vec<Vec<i64>>>) = (None, None, None);
        let mut cfg = JobConfig {
            embedding: EmbeddingSpec::Builder { name: String::new(), args: Vec::new() },
            command: None,
            weyl_cap: defaults.weyl_cap,
            rep_dim_cap: defaults.rep_dim_cap,
            nmax: defaults.nmax,
            output: None,
            format: Format::Tsv,
            point: None,
            witness: false,
        };
        let mut lines = text.lines().enumerate();
        while let Some((n, raw)) = lines.next() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let at = |e: CliError| match e {
                CliError::Parse(m) => CliError::Parse(format!("line {}: {m}", n + 1)),
                other => other,
            };
            if line == "cartan_map:" {
                let mut rows = Vec::new();
                loop {
                    let Some((_, r)) = lines.next() else {
                        return Err(CliError::Parse("cartan_map block is missing `end`".into()));
                    };
                    let r = r.split('#').next().unwrap_or("").trim();
                    if r == "end" {
                        break;
                    }
                    if !r.is_empty() {
                        rows.push(parse_ints(r).map_err(at)?);
                    }
                }
                if matrix.replace(rows).is_some() {
                    return Err(at(CliError::Parse("cartan_map given twice".into())));
                }
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .map(|(k, v)| (k.trim(), v.trim()))
                .ok_or_else(|| at(CliError::Parse(format!("expected `key = value`, got `{line}`"))))?;
            match key {
                "embedding" => {
                    if builder.replace(parse_builder(value).map_err(at)?).is_some() {
                        return Err(at(CliError::Parse("embedding given twice".into())));
                    }
                }
                "group" => group = Some(value.to_string()),
                "target" => target = Some(value.to_string()),
                "command" => cfg.command = Some(value.parse().map_err(at)?),
                "weyl_cap" => cfg.weyl_cap = positive(key, value).map_err(at)?,
                "rep_dim_cap" => cfg.rep_dim_cap = positive(key, value).map_err(at)?,
                "nmax" => cfg.nmax = positive(key, value).map_err(at)?,
                "output" => cfg.output = Some(value.to_string()),
                "format" => cfg.format = value.parse().map_err(at)?,
                "point" => cfg.point = Some(parse_point(value).map_err(at)?),
                "witness" => {
                    cfg.witness = value
                        .parse()
                        .map_err(|_| at(CliError::Parse(format!("`witness` must be true or false, got `{value}`"))))?
                }
                _ => return Err(at(CliError::Parse(format!("unknown key `{key}`")))),
            }
        }
        let explicit = group.is_some() || target.is_some() || matrix.is_some();
        cfg.embedding = match (builder, explicit) {
            (Some(b), false) => b,
            (None, true) => match (group, target, matrix) {
                (Some(group), Some(target), Some(cartan_map)) => EmbeddingSpec::Explicit { group, target, cartan_map },
                _ => return Err(CliError::Parse("explicit embeddings need `group`, `target` and `cartan_map`".into())),
            },
            (Some(_), true) => return Err(CliError::Parse("give either `embedding` or an explicit embedding, not both".into())),
            (None, false) => return Err(CliError::Parse("no embedding given".into())),
        };
        Ok(cfg)
    }
}
