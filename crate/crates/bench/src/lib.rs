//! Shared instance builders for the benchmarks.

use std::sync::Arc;

use ydcheck_core::groupoid::{groupoid_algebra, Groupoid};
use ydcheck_core::{Rationals, Wbha};

pub fn matrix_units_algebra(n: usize) -> Arc<Wbha<Rationals>> {
    Arc::new(groupoid_algebra(Rationals, &Groupoid::full(n)).unwrap())
}
