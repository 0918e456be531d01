//! On-disk instance schemas.
//!
//! Structure files are JSON documents with explicit basis headers and exact
//! scalars written as strings ("3/7", "-2", residues for prime fields);
//! floats are never accepted. Basis and arrow order in the file fixes the
//! matrix indexing.

use std::collections::BTreeMap;

use serde::Deserialize;
use thiserror::Error;

use ydcheck_core::{CoreError, Field, Morphism, SpaceObject};

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("parse error in {path}: {source}")]
    Parse {
        path: String,
        source: serde_json::Error,
    },
    #[error("validation error in {what}: {detail}")]
    Validation { what: String, detail: String },
    #[error(transparent)]
    Core(#[from] CoreError),
}

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum InstanceFile {
    Groupoid(GroupoidFile),
    Wbha(WbhaFile),
    YdModule(YdModuleFile),
    Projection(ProjectionFile),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupoidFile {
    pub name: String,
    pub objects: Vec<String>,
    pub arrows: Vec<ArrowFile>,
    /// object label -> identity arrow name
    pub identities: BTreeMap<String, String>,
    /// arrow name -> inverse arrow name
    pub inverses: BTreeMap<String, String>,
    /// triples [later, first, result] for each composable pair
    pub compose: Vec<[String; 3]>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowFile {
    pub name: String,
    pub src: String,
    pub tgt: String,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WbhaFile {
    pub name: String,
    pub basis: Vec<String>,
    /// column vector K → D
    pub unit: Vec<String>,
    pub mult: Vec<Vec<String>>,
    /// row vector D → K
    pub counit: Vec<String>,
    pub comult: Vec<Vec<String>>,
    pub antipode: Vec<Vec<String>>,
    /// defaults to the flip when absent (then `t_prime` and `nabla` default
    /// to the flip and the identity)
    #[serde(default)]
    pub t: Option<Vec<Vec<String>>>,
    #[serde(default)]
    pub t_prime: Option<Vec<Vec<String>>>,
    #[serde(default)]
    pub nabla: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct YdModuleFile {
    pub name: String,
    /// builtin name or path of the base instance
    pub base: String,
    pub carrier: Vec<String>,
    pub action: Vec<Vec<String>>,
    pub coaction: Vec<Vec<String>>,
    pub quadruple: QuadrupleFile,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum QuadrupleFile {
    /// the directive "flip"
    Directive(String),
    Explicit {
        r: Vec<Vec<String>>,
        r_prime: Vec<Vec<String>>,
        s: Vec<Vec<String>>,
        s_prime: Vec<Vec<String>>,
    },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProjectionFile {
    pub name: String,
    pub base: String,
    pub total: String,
    pub f: Vec<Vec<String>>,
    pub g: Vec<Vec<String>>,
}

/// Parse a dense row matrix of scalar strings into a morphism.
pub fn parse_matrix<F: Field>(
    field: &F,
    what: &str,
    rows: &[Vec<String>],
    source: &SpaceObject,
    target: &SpaceObject,
) -> Result<Morphism<F>, LoadError> {
    let mut parsed = Vec::with_capacity(rows.len());
    for row in rows {
        let mut out = Vec::with_capacity(row.len());
        for cell in row {
            out.push(field.parse(cell).map_err(|e| LoadError::Validation {
                what: what.to_string(),
                detail: e.to_string(),
            })?);
        }
        parsed.push(out);
    }
    Morphism::from_dense_rows(field.clone(), source.clone(), target.clone(), &parsed)
        .map_err(LoadError::Core)
}

/// Parse a single row (for counits) or column (for units).
pub fn parse_vector<F: Field>(
    field: &F,
    what: &str,
    cells: &[String],
) -> Result<Vec<F::Elem>, LoadError> {
    cells
        .iter()
        .map(|cell| {
            field.parse(cell).map_err(|e| LoadError::Validation {
                what: what.to_string(),
                detail: e.to_string(),
            })
        })
        .collect()
}
