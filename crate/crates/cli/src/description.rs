//! System description files.
//!
//! A description is a TOML document:
//!
//! ```toml
//! [system]            # explicit dimensions; n, m, p required when modes are given
//! n = 3
//! m = 1
//! p = 1
//! q = 2
//!
//! [[modes]]           # one entry per switching signal value
//! a = ["1 2 -1", "0 1 0", "1 -4 3"]
//! b = ["1", "0", "0"]
//! c = ["0 0 1"]
//!
//! [logic]
//! k = 2
//! state_nodes = 2
//! input_nodes = 1
//! l = [1, 1, 2, 4, 4, 4, 3, 3]    # or truth_tables = [[...], ...], one per state node
//! r = [2, 2, 1, 1, 1, 2, 2, 1]    # may be omitted when q = 1
//!
//! [options]
//! numeric = "rational"            # or "float"
//! tolerance = 1e-9
//! t_max = 3
//! ```
//!
//! Matrix rows are whitespace-separated entries. Rational mode accepts
//! integers and `p/q`; decimals need `numeric = "float"`.

use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use switchlogic::logic::LogicalNetwork;
use switchlogic::model::{Mode, SwitchedLinearSystem};
use switchlogic::stp::{LogicalMatrix, Matrix, NumericMode, Rational, Scalar};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum Modes {
    /// Logic-only description.
    None,
    Rational(SwitchedLinearSystem<Rational>),
    Float(SwitchedLinearSystem<f64>),
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub numeric: Option<NumericMode>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t_max: Option<usize>,
}

impl Options {
    pub fn numeric_mode(&self) -> NumericMode {
        self.numeric.unwrap_or(NumericMode::Rational)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SystemDescription {
    pub network: LogicalNetwork,
    pub modes: Modes,
    pub options: Options,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    system: Option<RawSystem>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    modes: Vec<RawMode>,
    logic: RawLogic,
    #[serde(default)]
    options: Options,
}

#[derive(Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSystem {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    p: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    q: Option<usize>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMode {
    a: Vec<String>,
    b: Vec<String>,
    c: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLogic {
    k: usize,
    state_nodes: usize,
    input_nodes: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    l: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    truth_tables: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    r: Option<Vec<usize>>,
}

/// Hex SHA-256 of the raw file contents.
pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

pub fn load(path: &Path) -> Result<SystemDescription> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse(&text)
}

pub fn save(description: &SystemDescription, path: &Path) -> Result<()> {
    std::fs::write(path, to_toml(description)?).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn parse(text: &str) -> Result<SystemDescription> {
    let raw: RawFile = toml::from_str(text).map_err(|e| CliError::input(format!("parse error: {e}")))?;
    let mode = raw.options.numeric_mode();
    let modes = match mode {
        NumericMode::Rational => parse_modes::<Rational>(&raw)?.map_or(Modes::None, Modes::Rational),
        NumericMode::Float => parse_modes::<f64>(&raw)?.map_or(Modes::None, Modes::Float),
    };
    let q = match (&raw.system, &modes) {
        (Some(RawSystem { q: Some(q), .. }), _) => *q,
        (_, Modes::Rational(s)) => s.q(),
        (_, Modes::Float(s)) => s.q(),
        (_, Modes::None) if raw.logic.r.is_none() => 1,
        _ => return Err(CliError::input("[system] q is required when R is given without [[modes]]")),
    };
    let network = parse_logic(&raw.logic, q)?;
    if let Some(tol) = raw.options.tolerance {
        if !(tol.is_finite() && tol > 0.0) {
            return Err(CliError::input(format!("[options] tolerance must be positive, got {tol}")));
        }
    }
    if raw.options.t_max == Some(0) {
        return Err(CliError::input("[options] t_max must be at least 1"));
    }
    Ok(SystemDescription {
        network,
        modes,
        options: raw.options,
    })
}

fn parse_modes<T: Scalar>(raw: &RawFile) -> Result<Option<SwitchedLinearSystem<T>>> {
    if raw.modes.is_empty() {
        return Ok(None);
    }
    let sys = raw.system.as_ref();
    let dim = |v: Option<usize>, name: &str| {
        v.ok_or_else(|| CliError::input(format!("[system] {name} is required when [[modes]] are given")))
    };
    let n = dim(sys.and_then(|s| s.n), "n")?;
    let m = dim(sys.and_then(|s| s.m), "m")?;
    let p = dim(sys.and_then(|s| s.p), "p")?;
    let q = dim(sys.and_then(|s| s.q), "q")?;
    if q != raw.modes.len() {
        return Err(CliError::input(format!("[system] q = {q} but {} [[modes]] are given", raw.modes.len())));
    }
    let mut modes = Vec::with_capacity(q);
    for (i, rm) in raw.modes.iter().enumerate() {
        let sigma = i + 1;
        let a = parse_matrix::<T>(&rm.a, sigma, "A", (n, n), ("n", "n"))?;
        let b = parse_matrix::<T>(&rm.b, sigma, "B", (n, m), ("n", "m"))?;
        let c = parse_matrix::<T>(&rm.c, sigma, "C", (p, n), ("p", "n"))?;
        modes.push(Mode::new(a, b, c));
    }
    Ok(Some(SwitchedLinearSystem::new(modes)?))
}

fn parse_matrix<T: Scalar>(
    rows: &[String],
    sigma: usize,
    name: &str,
    (want_r, want_c): (usize, usize),
    (dim_r, dim_c): (&str, &str),
) -> Result<Matrix<T>> {
    if rows.len() != want_r {
        return Err(CliError::input(format!(
            "mode {sigma}: {name} has {} rows, [system] {dim_r} = {want_r}",
            rows.len()
        )));
    }
    let mut parsed = Vec::with_capacity(want_r);
    for (i, row) in rows.iter().enumerate() {
        let entries = row
            .split_whitespace()
            .map(T::parse_entry)
            .collect::<std::result::Result<Vec<T>, String>>()
            .map_err(|e| CliError::input(format!("mode {sigma}: {name} row {}: {e}", i + 1)))?;
        if entries.len() != want_c {
            return Err(CliError::input(format!(
                "mode {sigma}: {name} row {} has {} entries, [system] {dim_c} = {want_c}",
                i + 1,
                entries.len()
            )));
        }
        parsed.push(entries);
    }
    if want_r == 0 {
        return Ok(Matrix::zeros(0, want_c));
    }
    Ok(Matrix::from_rows(parsed)?)
}

fn check_columns(name: &str, cols: &[usize], expected: usize, range: usize, range_name: &str) -> Result<()> {
    if cols.len() != expected {
        return Err(CliError::input(format!(
            "{name} has {} columns, expected M·N = {expected}",
            cols.len()
        )));
    }
    if let Some((j, &v)) = cols.iter().enumerate().find(|&(_, &v)| v == 0 || v > range) {
        return Err(CliError::input(format!(
            "{name} entry {v} at column {} is outside 1..={range} ({range_name})",
            j + 1
        )));
    }
    Ok(())
}

fn parse_logic(raw: &RawLogic, q: usize) -> Result<LogicalNetwork> {
    let pow = |e: usize| u32::try_from(e).ok().and_then(|e| raw.k.checked_pow(e));
    let (n, m) = match (pow(raw.state_nodes), pow(raw.input_nodes)) {
        (Some(n), Some(m)) if raw.k >= 2 && raw.state_nodes >= 1 => (n, m),
        _ => {
            return Err(CliError::input(format!(
                "[logic] needs k >= 2 and at least one state node with k^nodes representable (k = {}, state_nodes = {}, input_nodes = {})",
                raw.k, raw.state_nodes, raw.input_nodes
            )))
        }
    };
    let mn = n
        .checked_mul(m)
        .ok_or_else(|| CliError::input("[logic] input-state count overflows"))?;
    let r_cols = match &raw.r {
        Some(r) => r.clone(),
        None if q == 1 => vec![1; mn],
        None => return Err(CliError::input(format!("[logic] r is required when q = {q}"))),
    };
    let r = |cols: Vec<usize>| -> Result<LogicalMatrix> {
        check_columns("R", &cols, mn, q, "signal values")?;
        Ok(LogicalMatrix::new(q, cols)?)
    };
    match (&raw.l, &raw.truth_tables) {
        (Some(l), None) => {
            check_columns("L", l, mn, n, "logical states")?;
            let r = r(r_cols)?;
            Ok(LogicalNetwork::new(raw.k, raw.state_nodes, raw.input_nodes, LogicalMatrix::new(n, l.clone())?, r)?)
        }
        (None, Some(tables)) => {
            if tables.len() != raw.state_nodes {
                return Err(CliError::input(format!(
                    "[logic] has {} truth tables, state_nodes = {}",
                    tables.len(),
                    raw.state_nodes
                )));
            }
            let r = r(r_cols)?;
            Ok(LogicalNetwork::from_truth_tables(raw.k, raw.input_nodes, tables, r)?)
        }
        (Some(_), Some(_)) => Err(CliError::input("[logic] gives both l and truth_tables; use one")),
        (None, None) => Err(CliError::input("[logic] needs either l or truth_tables")),
    }
}

fn matrix_rows<T: Scalar>(a: &Matrix<T>) -> Vec<String> {
    a.to_rows()
        .iter()
        .map(|row| row.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
        .collect()
}

fn raw_modes<T: Scalar>(sls: &SwitchedLinearSystem<T>) -> (RawSystem, Vec<RawMode>) {
    let system = RawSystem {
        n: Some(sls.n()),
        m: Some(sls.m()),
        p: Some(sls.p()),
        q: Some(sls.q()),
    };
    let modes = sls
        .modes()
        .iter()
        .map(|md| RawMode {
            a: matrix_rows(&md.a),
            b: matrix_rows(&md.b),
            c: matrix_rows(&md.c),
        })
        .collect();
    (system, modes)
}

/// Canonical text of a description: L and R as column lists.
pub fn to_toml(description: &SystemDescription) -> Result<String> {
    let net = &description.network;
    let (system, modes) = match &description.modes {
        Modes::None => (
            RawSystem {
                q: Some(net.q()),
                ..RawSystem::default()
            },
            Vec::new(),
        ),
        Modes::Rational(s) => raw_modes(s),
        Modes::Float(s) => raw_modes(s),
    };
    let raw = RawFile {
        system: Some(system),
        modes,
        logic: RawLogic {
            k: net.k(),
            state_nodes: net.state_nodes(),
            input_nodes: net.input_nodes(),
            l: Some(net.l().col_index().to_vec()),
            truth_tables: None,
            r: Some(net.r().col_index().to_vec()),
        },
        options: description.options.clone(),
    };
    toml::to_string(&raw).map_err(|e| CliError::input(format!("cannot serialize description: {e}")))
}
