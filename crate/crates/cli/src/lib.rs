//! Batch front end: load instances (builtin or from structure files), run
//! selected identity suites over an exact field, and emit deterministic
//! machine- or human-readable reports.

pub mod instance;
pub mod run;
pub mod schema;

pub use instance::{builtin_names, load_instance, InstanceKind, LoadedInstance};
pub use run::{run_suites, FieldChoice, ReportFormat, RunReport, Suite, SuiteConfig};
