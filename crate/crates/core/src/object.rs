//! Objects of the ambient strict monoidal category: finite-dimensional free
//! modules with a labelled basis.

use std::fmt;
use std::sync::Arc;

use crate::error::CoreError;

/// A finite-dimensional space with an ordered, labelled basis.
///
/// Objects compare equal when they have the same label and dimension; within a
/// corpus the label identifies the object. Tensoring is strictly associative
/// (labels concatenate) and strictly unital (tensoring with `K` is the
/// identity), which realizes strictness of the ambient category on the nose.
#[derive(Clone)]
pub struct SpaceObject(Arc<ObjectData>);

impl Eq for SpaceObject {}

struct ObjectData {
    label: String,
    basis: Vec<String>,
}

pub const UNIT_LABEL: &str = "K";

impl SpaceObject {
    pub fn new(label: impl Into<String>, basis: Vec<String>) -> Result<Self, CoreError> {
        let label = label.into();
        let mut seen = std::collections::HashSet::new();
        for b in &basis {
            if !seen.insert(b) {
                return Err(CoreError::InvalidGroupoid(format!(
                    "object {label}: duplicate basis label {b:?}"
                )));
            }
        }
        Ok(SpaceObject(Arc::new(ObjectData { label, basis })))
    }

    /// The monoidal unit `K`: one-dimensional, label `"K"`.
    pub fn unit() -> Self {
        SpaceObject(Arc::new(ObjectData {
            label: UNIT_LABEL.to_string(),
            basis: vec!["1".to_string()],
        }))
    }

    /// Basis labels `e0..e{dim-1}` when nothing better is available.
    pub fn with_dim(label: impl Into<String>, dim: usize) -> Self {
        let basis = (0..dim).map(|i| format!("e{i}")).collect();
        SpaceObject(Arc::new(ObjectData {
            label: label.into(),
            basis,
        }))
    }

    pub fn label(&self) -> &str {
        &self.0.label
    }

    pub fn dim(&self) -> usize {
        self.0.basis.len()
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.0.basis
    }

    pub fn basis_label(&self, i: usize) -> &str {
        &self.0.basis[i]
    }

    pub fn is_unit(&self) -> bool {
        self.0.label == UNIT_LABEL && self.dim() == 1
    }

    /// Strict tensor product. `e_i ⊗ e_j` of `A⊗B` sits at index
    /// `i * dim(B) + j` (row-major), making the product associative at the
    /// index level; tensoring with the unit returns the other factor itself.
    pub fn tensor(&self, other: &SpaceObject) -> SpaceObject {
        if self.is_unit() {
            return other.clone();
        }
        if other.is_unit() {
            return self.clone();
        }
        let label = format!("{}⊗{}", self.0.label, other.0.label);
        let mut basis = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.0.basis {
            for b in &other.0.basis {
                basis.push(format!("{a}⊗{b}"));
            }
        }
        SpaceObject(Arc::new(ObjectData { label, basis }))
    }

    pub fn ptr_eq(&self, other: &SpaceObject) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }
}

impl PartialEq for SpaceObject {
    fn eq(&self, other: &Self) -> bool {
        self.ptr_eq(other) || (self.dim() == other.dim() && self.0.label == other.0.label)
    }
}

impl fmt::Debug for SpaceObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.0.label, self.dim())
    }
}

impl fmt::Display for SpaceObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.label)
    }
}
