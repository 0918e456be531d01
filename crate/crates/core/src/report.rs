//! Check reports.
//!
//! Identity failures are data, not errors: every suite returns a report with
//! one line per identity, carrying the first differing entry as a witness on
//! failure. Line identifiers are stable labels ("b3-1", "Eq(62)", "yd2", ...)
//! so a report doubles as a coverage map.

use serde::Serialize;

use crate::field::Field;
use crate::morphism::Morphism;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    /// Observations that do not gate the verdict either way.
    Info,
}

#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub row: usize,
    pub col: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckLine {
    pub id: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub lines: Vec<CheckLine>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckLine> {
        self.lines.iter().filter(|l| l.status == Status::Fail)
    }

    pub fn first_failure(&self) -> Option<&CheckLine> {
        self.failures().next()
    }

    pub fn line(&self, id: &str) -> Option<&CheckLine> {
        self.lines.iter().find(|l| l.id == id)
    }

    pub fn push(&mut self, line: CheckLine) {
        self.lines.push(line);
    }

    pub fn merge(&mut self, other: Report) {
        self.lines.extend(other.lines);
    }

    pub fn merge_prefixed(&mut self, prefix: &str, other: Report) {
        for mut line in other.lines {
            line.id = format!("{prefix}{}", line.id);
            self.lines.push(line);
        }
    }

    pub fn pass(&mut self, id: &str) {
        self.push(CheckLine {
            id: id.into(),
            status: Status::Pass,
            witness: None,
            note: None,
        });
    }

    pub fn fail(&mut self, id: &str, witness: Option<Witness>, note: Option<String>) {
        self.push(CheckLine {
            id: id.into(),
            status: Status::Fail,
            witness,
            note,
        });
    }

    pub fn skipped(&mut self, id: &str, why: &str) {
        self.push(CheckLine {
            id: id.into(),
            status: Status::Skipped,
            witness: None,
            note: Some(why.into()),
        });
    }

    pub fn info(&mut self, id: &str, note: impl Into<String>) {
        self.push(CheckLine {
            id: id.into(),
            status: Status::Info,
            witness: None,
            note: Some(note.into()),
        });
    }

    /// Record whether `lhs = rhs` entrywise. Boundary objects must already
    /// agree; that is part of the statement being checked.
    pub fn eq<F: Field>(&mut self, id: &str, lhs: &Morphism<F>, rhs: &Morphism<F>) -> bool {
        if lhs.source() != rhs.source() || lhs.target() != rhs.target() {
            self.fail(
                id,
                None,
                Some(format!(
                    "boundary mismatch: {:?}->{:?} vs {:?}->{:?}",
                    lhs.source(),
                    lhs.target(),
                    rhs.source(),
                    rhs.target()
                )),
            );
            return false;
        }
        match lhs.first_diff(rhs) {
            None => {
                self.pass(id);
                true
            }
            Some((row, col, l, r)) => {
                self.fail(
                    id,
                    Some(Witness {
                        row,
                        col,
                        lhs: lhs.render_entry(&l),
                        rhs: rhs.render_entry(&r),
                    }),
                    None,
                );
                false
            }
        }
    }

    /// Record whether all listed morphisms are pairwise equal (checked against
    /// the first).
    pub fn eq_all<F: Field>(&mut self, id: &str, ms: &[&Morphism<F>]) -> bool {
        let first = ms[0];
        for (k, other) in ms.iter().enumerate().skip(1) {
            if first.source() != other.source() || first.target() != other.target() {
                self.fail(
                    id,
                    None,
                    Some(format!("boundary mismatch at expression {k}")),
                );
                return false;
            }
            if let Some((row, col, l, r)) = first.first_diff(other) {
                self.fail(
                    id,
                    Some(Witness {
                        row,
                        col,
                        lhs: first.render_entry(&l),
                        rhs: first.render_entry(&r),
                    }),
                    Some(format!("expression {k} differs from expression 0")),
                );
                return false;
            }
        }
        self.pass(id);
        true
    }

    /// Record a biconditional of two already-computed truth values.
    pub fn iff(&mut self, id: &str, lhs: bool, rhs: bool) -> bool {
        if lhs == rhs {
            self.push(CheckLine {
                id: id.into(),
                status: Status::Pass,
                witness: None,
                note: Some(format!("both sides {}", if lhs { "hold" } else { "fail" })),
            });
            true
        } else {
            self.fail(id, None, Some(format!("left {lhs}, right {rhs}")));
            false
        }
    }

    pub fn counts(&self) -> (usize, usize, usize, usize) {
        let mut c = (0, 0, 0, 0);
        for l in &self.lines {
            match l.status {
                Status::Pass => c.0 += 1,
                Status::Fail => c.1 += 1,
                Status::Skipped => c.2 += 1,
                Status::Info => c.3 += 1,
            }
        }
        c
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::morphism::Morphism;
    use crate::object::SpaceObject;

    #[test]
    fn eq_records_witness_on_failure() {
        use crate::field::Field;
        let a = SpaceObject::with_dim("A", 2);
        let id = Morphism::identity(Rationals, &a);
        let mut corrupt = id.clone();
        corrupt.set_entry(1, 0, Rationals.from_int(7));
        let mut rep = Report::new();
        assert!(!rep.eq("x", &id, &corrupt));
        let w = rep.first_failure().unwrap().witness.as_ref().unwrap();
        assert_eq!((w.row, w.col), (1, 0));
        assert_eq!(w.lhs, "0");
        assert_eq!(w.rhs, "7");
        assert!(!rep.passed());
    }
}
