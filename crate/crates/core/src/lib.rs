//! Exact matrix realizations of weak braided Hopf algebras, weak operators
//! and the monoidal category of left-left Yetter-Drinfeld modules.
//!
//! Everything is computed over an exact field (arbitrary-precision rationals
//! by default, prime fields optionally), so every identity the library claims
//! is a literal entrywise equality of matrices. The main entry points:
//!
//! - [`morphism::Morphism`]: dense-semantics exact matrices with declared
//!   source and target objects, composition and Kronecker products.
//! - [`split::split_idempotent`]: deterministic idempotent splitting, the
//!   mechanism behind every induced object.
//! - [`groupoid::Groupoid`]: finite groupoids and their algebras, the
//!   paradigm instances.
//! - [`wbha::Wbha`]: weak braided Hopf algebras with their axiom checkers and
//!   derived-identity suites.
//! - [`weak_op::WeakOperatorQuad`] and [`yd::YdModule`]: weak operators and
//!   Yetter-Drinfeld modules, with the full monoidal-category machinery
//!   (products, unit and associativity constraints, coherence).
//! - [`projection::Projection`] and [`adjoint::AdjointData`]: the two example
//!   factories (projections with entwining structures, adjoint (co)actions).

pub mod adjoint;
pub mod algebra;
pub mod error;
pub mod field;
pub mod groupoid;
pub mod morphism;
pub mod object;
pub mod projection;
pub mod report;
pub mod split;
pub mod wbha;
pub mod weak_op;
pub mod wyb;
pub mod yd;

#[cfg(test)]
pub(crate) mod testutil;

pub use error::CoreError;
pub use field::{Field, PrimeField, Rationals};
pub use morphism::Morphism;
pub use object::SpaceObject;
pub use report::{CheckLine, Report, Status, Witness};
pub use split::{split_idempotent, SplitIdempotent};
pub use wbha::Wbha;
