//! QCA definitions loaded from TOML or JSON, plus the built-in registry.
//!
//! ```toml
//! name = "fractal"
//! dims = 1
//! qubits_per_cell = 1
//! t = "u + 1 + u^-1"          # shorthand for [[0, 1], [1, t]]
//! # matrix = ["0", "1", "1", "u + 1 + u^-1"]   # row-major, or nested rows
//! # raw = true                # allow a matrix that is not pseudo-unitary
//! ```

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::fpoly::{format_poly, parse_poly, LaurentPoly};
use crate::symplectic::PolyMatrix;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MatrixText {
    Flat(Vec<String>),
    Rows(Vec<Vec<String>>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QcaConfig {
    #[serde(default)]
    pub name: String,
    #[serde(default = "one")]
    pub dims: usize,
    #[serde(default = "one")]
    pub qubits_per_cell: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<MatrixText>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<String>,
    #[serde(default)]
    pub raw: bool,
}

fn one() -> usize {
    1
}

/// Largest accepted lattice dimension and cell size.
pub const MAX_DIMS: usize = 8;
pub const MAX_QUBITS_PER_CELL: usize = 16;

impl QcaConfig {
    pub fn from_toml_str(text: &str) -> Result<Self, Error> {
        toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn from_json_str(text: &str) -> Result<Self, Error> {
        serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    /// Picks the format from the file extension.
    pub fn load(path: &Path) -> Result<Self, Error> {
        let text = std::fs::read_to_string(path)?;
        let mut cfg = match path.extension().and_then(|e| e.to_str()) {
            Some("toml") => Self::from_toml_str(&text)?,
            Some("json") => Self::from_json_str(&text)?,
            _ => {
                return Err(Error::Config(format!(
                    "{}: expected a .toml or .json file",
                    path.display()
                )))
            }
        };
        if cfg.name.is_empty() {
            if let Some(stem) = path.file_stem().and_then(|s| s.to_str()) {
                cfg.name = stem.to_string();
            }
        }
        Ok(cfg)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("config serializes")
    }

    /// Parses and checks the matrix; see [`Qca`].
    pub fn build(&self) -> Result<Qca, Error> {
        Qca::from_config(self)
    }
}

/// A validated QCA matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Qca {
    pub name: String,
    pub dims: usize,
    pub qubits_per_cell: usize,
    pub matrix: PolyMatrix,
    /// Set when the matrix came from the `t` shorthand.
    pub palindromic_t: Option<LaurentPoly>,
    pub raw: bool,
    pub pseudo_unitary: bool,
    pub warnings: Vec<String>,
}

impl Qca {
    pub fn from_config(cfg: &QcaConfig) -> Result<Self, Error> {
        if cfg.dims == 0 || cfg.dims > MAX_DIMS {
            return Err(Error::Config(format!("dims must be in 1…{MAX_DIMS}")));
        }
        if cfg.qubits_per_cell == 0 || cfg.qubits_per_cell > MAX_QUBITS_PER_CELL {
            return Err(Error::Config(format!(
                "qubits_per_cell must be in 1…{MAX_QUBITS_PER_CELL}"
            )));
        }
        let size = 2 * cfg.qubits_per_cell;
        let parse = |text: &str, what: &str| {
            parse_poly(text, cfg.dims).map_err(|e| Error::Config(format!("{what}: {e}")))
        };
        let (matrix, palindromic_t) = match (&cfg.matrix, &cfg.t) {
            (Some(_), Some(_)) => {
                return Err(Error::Config("give either `matrix` or `t`, not both".into()))
            }
            (None, None) => return Err(Error::Config("missing `matrix` or `t`".into())),
            (None, Some(t)) => {
                if cfg.qubits_per_cell != 1 {
                    return Err(Error::Config("`t` shorthand needs qubits_per_cell = 1".into()));
                }
                let t = parse(t, "t")?;
                (PolyMatrix::palindromic_family(&t), Some(t))
            }
            (Some(text), None) => {
                let flat: Vec<&String> = match text {
                    MatrixText::Flat(v) => v.iter().collect(),
                    MatrixText::Rows(rows) => {
                        if rows.len() != size || rows.iter().any(|r| r.len() != size) {
                            return Err(Error::Config(format!("matrix must be {size}x{size}")));
                        }
                        rows.iter().flatten().collect()
                    }
                };
                if flat.len() != size * size {
                    return Err(Error::Config(format!(
                        "matrix needs {} entries for {size}x{size}, found {}",
                        size * size,
                        flat.len()
                    )));
                }
                let mut rows = Vec::with_capacity(size);
                for r in 0..size {
                    let mut row = Vec::with_capacity(size);
                    for c in 0..size {
                        row.push(parse(flat[r * size + c], &format!("matrix entry ({r},{c})"))?);
                    }
                    rows.push(row);
                }
                (PolyMatrix::from_rows(rows)?, None)
            }
        };
        let pseudo_unitary = matrix.is_pseudo_unitary();
        let mut warnings = Vec::new();
        if !pseudo_unitary {
            if !cfg.raw {
                return Err(Error::Config(
                    "matrix is not pseudo-unitary; set `raw = true` to study it as a plain CA".into(),
                ));
            }
            warnings.push(format!("{}: matrix is not pseudo-unitary (raw CA mode)", cfg.name));
        }
        Ok(Qca {
            name: cfg.name.clone(),
            dims: cfg.dims,
            qubits_per_cell: cfg.qubits_per_cell,
            matrix,
            palindromic_t,
            raw: cfg.raw,
            pseudo_unitary,
            warnings,
        })
    }
}

/// Names of the built-in examples.
pub const REGISTRY_NAMES: [&str; 7] = ["glider", "fractal", "shift", "F", "G", "double-F", "double-G"];

/// A built-in example by name.
pub fn registry(name: &str) -> Option<QcaConfig> {
    let palindromic = |t: &str| QcaConfig {
        name: name.to_string(),
        dims: 1,
        qubits_per_cell: 1,
        matrix: None,
        t: Some(t.to_string()),
        raw: false,
    };
    let explicit = |m: &PolyMatrix, raw: bool| QcaConfig {
        name: name.to_string(),
        dims: 1,
        qubits_per_cell: m.size() / 2,
        matrix: Some(MatrixText::Rows(
            m.rows().map(|r| r.iter().map(format_poly).collect()).collect(),
        )),
        t: None,
        raw,
    };
    let f = || PolyMatrix::palindromic_family(&LaurentPoly::mono(1));
    let g = || PolyMatrix::palindromic_family(&LaurentPoly::from_exponents_1d(&[0, 1]));
    match name {
        "glider" => Some(palindromic("u + u^-1")),
        "fractal" => Some(palindromic("u + 1 + u^-1")),
        "shift" => Some(explicit(&PolyMatrix::scalar(2, &LaurentPoly::mono(1)), false)),
        "F" => Some(explicit(&f(), true)),
        "G" => Some(explicit(&g(), true)),
        "double-F" => Some(explicit(&f().double().expect("det F is a unit"), false)),
        "double-G" => Some(explicit(&g().double().expect("det G is a unit"), false)),
        _ => None,
    }
}
