//! Shared helpers for unit tests.

use num::rational::BigRational;

use crate::field::{Field, Rationals};
use crate::morphism::Morphism;
use crate::object::SpaceObject;

pub fn from_int_rows(
    source: &SpaceObject,
    target: &SpaceObject,
    rows: &[&[i64]],
) -> Morphism<Rationals> {
    let f = Rationals;
    let rows: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| f.from_int(v)).collect())
        .collect();
    Morphism::from_dense_rows(f, source.clone(), target.clone(), &rows).unwrap()
}

/// A deterministic little xorshift generator, enough to fabricate test data
/// without dragging a dependency into the unit tests.
pub struct TinyRng(u64);

impl TinyRng {
    pub fn new(seed: u64) -> Self {
        TinyRng(seed.max(1))
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    /// Small signed integer in `-bound..=bound`.
    pub fn small_int(&mut self, bound: u64) -> i64 {
        (self.next_u64() % (2 * bound + 1)) as i64 - bound as i64
    }
}

pub fn random_int_matrix(
    rng: &mut TinyRng,
    source: &SpaceObject,
    target: &SpaceObject,
    bound: u64,
) -> Morphism<Rationals> {
    let rows: Vec<Vec<i64>> = (0..target.dim())
        .map(|_| (0..source.dim()).map(|_| rng.small_int(bound)).collect())
        .collect();
    let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    from_int_rows(source, target, &refs)
}
