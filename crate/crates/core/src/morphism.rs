//! Morphisms of the ambient category: exact matrices with declared source and
//! target objects.
//!
//! Entries are stored column-sparse (sorted by row, zeros dropped), so the
//! structure maps of the larger instances, which are Kronecker products of a
//! handful of nonzeros per column, compose in time proportional to what is
//! actually there. Equality is still literal entrywise equality.

use std::ops::Mul;

use crate::error::CoreError;
use crate::field::Field;
use crate::object::SpaceObject;

#[derive(Clone, PartialEq, Eq)]
pub struct Morphism<F: Field> {
    field: F,
    source: SpaceObject,
    target: SpaceObject,
    /// `cols[j]` holds the nonzero entries of column `j`, sorted by row.
    cols: Vec<Vec<(usize, F::Elem)>>,
}

impl<F: Field> Morphism<F> {
    pub fn zero(field: F, source: SpaceObject, target: SpaceObject) -> Self {
        let cols = vec![Vec::new(); source.dim()];
        Morphism {
            field,
            source,
            target,
            cols,
        }
    }

    pub fn identity(field: F, obj: &SpaceObject) -> Self {
        let one = field.one();
        let cols = (0..obj.dim()).map(|j| vec![(j, one.clone())]).collect();
        Morphism {
            field,
            source: obj.clone(),
            target: obj.clone(),
            cols,
        }
    }

    /// Build from (row, col, value) triplets; later triplets overwrite earlier
    /// ones at the same position, zeros are dropped.
    pub fn from_triplets(
        field: F,
        source: SpaceObject,
        target: SpaceObject,
        triplets: impl IntoIterator<Item = (usize, usize, F::Elem)>,
    ) -> Result<Self, CoreError> {
        let mut m = Morphism::zero(field, source, target);
        for (r, c, v) in triplets {
            if r >= m.target.dim() || c >= m.source.dim() {
                return Err(CoreError::ShapeMismatch {
                    context: "from_triplets".into(),
                    expected: format!("{}x{}", m.target.dim(), m.source.dim()),
                    got: format!("entry at ({r},{c})"),
                });
            }
            m.set_entry(r, c, v);
        }
        Ok(m)
    }

    pub fn from_dense_rows(
        field: F,
        source: SpaceObject,
        target: SpaceObject,
        rows: &[Vec<F::Elem>],
    ) -> Result<Self, CoreError> {
        if rows.len() != target.dim() || rows.iter().any(|r| r.len() != source.dim()) {
            return Err(CoreError::ShapeMismatch {
                context: "from_dense_rows".into(),
                expected: format!("{}x{}", target.dim(), source.dim()),
                got: format!(
                    "{}x{}",
                    rows.len(),
                    rows.first().map(|r| r.len()).unwrap_or(0)
                ),
            });
        }
        let mut cols = vec![Vec::new(); source.dim()];
        for (r, row) in rows.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                if !field.is_zero(v) {
                    cols[c].push((r, v.clone()));
                }
            }
        }
        Ok(Morphism {
            field,
            source,
            target,
            cols,
        })
    }

    /// The permutation sending `e_i ⊗ e_j` of `A⊗B` to `e_j ⊗ e_i` of `B⊗A`.
    pub fn flip(field: F, a: &SpaceObject, b: &SpaceObject) -> Self {
        let (da, db) = (a.dim(), b.dim());
        let one = field.one();
        let mut cols = Vec::with_capacity(da * db);
        for i in 0..da {
            for j in 0..db {
                cols.push(vec![(j * da + i, one.clone())]);
            }
        }
        Morphism {
            field,
            source: a.tensor(b),
            target: b.tensor(a),
            cols,
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn source(&self) -> &SpaceObject {
        &self.source
    }
    pub fn target(&self) -> &SpaceObject {
        &self.target
    }
    pub fn is_endo(&self) -> bool {
        self.source == self.target
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }

    pub fn entry(&self, row: usize, col: usize) -> F::Elem {
        match self.cols[col].binary_search_by_key(&row, |e| e.0) {
            Ok(i) => self.cols[col][i].1.clone(),
            Err(_) => self.field.zero(),
        }
    }

    pub fn set_entry(&mut self, row: usize, col: usize, value: F::Elem) {
        let column = &mut self.cols[col];
        match column.binary_search_by_key(&row, |e| e.0) {
            Ok(i) => {
                if self.field.is_zero(&value) {
                    column.remove(i);
                } else {
                    column[i].1 = value;
                }
            }
            Err(i) => {
                if !self.field.is_zero(&value) {
                    column.insert(i, (row, value));
                }
            }
        }
    }

    /// Composition `self ∘ rhs`; defined only when `source(self) = target(rhs)`
    /// as objects, not merely as dimensions.
    pub fn compose(&self, rhs: &Morphism<F>) -> Result<Morphism<F>, CoreError> {
        if self.field != rhs.field {
            return Err(CoreError::FieldMismatch);
        }
        if self.source != rhs.target {
            return Err(CoreError::ObjectMismatch {
                context: "compose".into(),
                left: format!("{:?}", self.source),
                right: format!("{:?}", rhs.target),
            });
        }
        let rows = self.target.dim();
        let mut acc: Vec<F::Elem> = vec![self.field.zero(); rows];
        let mut touched: Vec<usize> = Vec::new();
        let mut cols = Vec::with_capacity(rhs.cols.len());
        for col in &rhs.cols {
            for (k, v) in col {
                for (r, w) in &self.cols[*k] {
                    if self.field.is_zero(&acc[*r]) && !touched.contains(r) {
                        touched.push(*r);
                    }
                    let prod = self.field.mul(v, w);
                    acc[*r] = self.field.add(&acc[*r], &prod);
                }
            }
            touched.sort_unstable();
            let mut out = Vec::with_capacity(touched.len());
            for r in touched.drain(..) {
                let val = std::mem::replace(&mut acc[r], self.field.zero());
                if !self.field.is_zero(&val) {
                    out.push((r, val));
                }
            }
            cols.push(out);
        }
        Ok(Morphism {
            field: self.field.clone(),
            source: rhs.source.clone(),
            target: self.target.clone(),
            cols,
        })
    }

    /// Kronecker product `self ⊗ rhs` under the row-major basis convention.
    pub fn tensor(&self, rhs: &Morphism<F>) -> Morphism<F> {
        assert!(self.field == rhs.field, "tensor over mismatched fields");
        let source = self.source.tensor(&rhs.source);
        let target = self.target.tensor(&rhs.target);
        let tg = rhs.target.dim();
        let mut cols = Vec::with_capacity(source.dim());
        for ca in &self.cols {
            for cb in &rhs.cols {
                let mut col = Vec::with_capacity(ca.len() * cb.len());
                for (ra, va) in ca {
                    for (rb, vb) in cb {
                        col.push((ra * tg + rb, self.field.mul(va, vb)));
                    }
                }
                cols.push(col);
            }
        }
        Morphism {
            field: self.field.clone(),
            source,
            target,
            cols,
        }
    }

    pub fn scaled(&self, k: &F::Elem) -> Morphism<F> {
        let mut out = self.clone();
        for col in &mut out.cols {
            col.retain_mut(|(_, v)| {
                *v = out.field.mul(v, k);
                !out.field.is_zero(v)
            });
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        if self.source.dim() != self.target.dim() {
            return false;
        }
        let one = self.field.one();
        self.cols
            .iter()
            .enumerate()
            .all(|(j, col)| col.len() == 1 && col[0].0 == j && col[0].1 == one)
    }

    pub fn is_zero_morphism(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    /// First differing entry, scanning column-major; `None` means equal
    /// matrices (boundaries are not compared here).
    pub fn first_diff(&self, other: &Morphism<F>) -> Option<(usize, usize, F::Elem, F::Elem)> {
        debug_assert_eq!(self.source.dim(), other.source.dim());
        debug_assert_eq!(self.target.dim(), other.target.dim());
        for j in 0..self.cols.len() {
            let (a, b) = (&self.cols[j], &other.cols[j]);
            let (mut ia, mut ib) = (0, 0);
            while ia < a.len() || ib < b.len() {
                match (a.get(ia), b.get(ib)) {
                    (Some((ra, va)), Some((rb, vb))) => {
                        if ra == rb {
                            if va != vb {
                                return Some((*ra, j, va.clone(), vb.clone()));
                            }
                            ia += 1;
                            ib += 1;
                        } else if ra < rb {
                            return Some((*ra, j, va.clone(), self.field.zero()));
                        } else {
                            return Some((*rb, j, self.field.zero(), vb.clone()));
                        }
                    }
                    (Some((ra, va)), None) => return Some((*ra, j, va.clone(), self.field.zero())),
                    (None, Some((rb, vb))) => return Some((*rb, j, self.field.zero(), vb.clone())),
                    (None, None) => unreachable!(),
                }
            }
        }
        None
    }

    /// Entrywise equality plus dimension agreement, ignoring object labels.
    pub fn same_entries(&self, other: &Morphism<F>) -> bool {
        self.field == other.field
            && self.source.dim() == other.source.dim()
            && self.target.dim() == other.target.dim()
            && self.cols == other.cols
    }

    pub fn to_dense_rows(&self) -> Vec<Vec<F::Elem>> {
        let mut rows = vec![vec![self.field.zero(); self.source.dim()]; self.target.dim()];
        for (j, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                rows[*r][j] = v.clone();
            }
        }
        rows
    }

    /// Exact inverse of a square morphism by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Morphism<F>, CoreError> {
        let n = self.source.dim();
        if self.target.dim() != n {
            return Err(CoreError::ShapeMismatch {
                context: "inverse".into(),
                expected: "square".into(),
                got: format!("{}x{}", self.target.dim(), n),
            });
        }
        let f = &self.field;
        let mut a = self.to_dense_rows();
        let mut inv = Morphism::identity(f.clone(), &self.source).to_dense_rows();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !f.is_zero(&a[r][col]));
            let Some(pivot) = pivot else {
                let rank = rank_of_dense(f, &self.to_dense_rows());
                return Err(CoreError::Singular { rank, dim: n });
            };
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let scale = f.inv(&a[col][col])?;
            for j in 0..n {
                a[col][j] = f.mul(&a[col][j], &scale);
                inv[col][j] = f.mul(&inv[col][j], &scale);
            }
            for r in 0..n {
                if r != col && !f.is_zero(&a[r][col]) {
                    let factor = a[r][col].clone();
                    for j in 0..n {
                        let t = f.mul(&factor, &a[col][j]);
                        a[r][j] = f.sub(&a[r][j], &t);
                        let t = f.mul(&factor, &inv[col][j]);
                        inv[r][j] = f.sub(&inv[r][j], &t);
                    }
                }
            }
        }
        // Inverse swaps source and target.
        Morphism::from_dense_rows(f.clone(), self.target.clone(), self.source.clone(), &inv)
    }

    pub fn rank(&self) -> usize {
        rank_of_dense(&self.field, &self.to_dense_rows())
    }

    pub fn render_entry(&self, e: &F::Elem) -> String {
        self.field.render(e)
    }
}

pub(crate) fn rank_of_dense<F: Field>(field: &F, rows: &[Vec<F::Elem>]) -> usize {
    let mut m: Vec<Vec<F::Elem>> = rows.to_vec();
    let nrows = m.len();
    let ncols = m.first().map(|r| r.len()).unwrap_or(0);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..nrows).find(|&r| !field.is_zero(&m[r][col])) else {
            continue;
        };
        m.swap(rank, pivot);
        let scale = field.inv(&m[rank][col]).expect("nonzero pivot");
        for cell in m[rank][col..].iter_mut() {
            *cell = field.mul(cell, &scale);
        }
        for r in 0..nrows {
            if r != rank && !field.is_zero(&m[r][col]) {
                let factor = m[r][col].clone();
                let pivot_row = m[rank].clone();
                for (cell, lead) in m[r][col..].iter_mut().zip(&pivot_row[col..]) {
                    let t = field.mul(&factor, lead);
                    *cell = field.sub(cell, &t);
                }
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

/// `g * f` is the composition `g ∘ f`; panics on a boundary mismatch, which in
/// suite code indicates a mis-stated identity rather than bad data.
impl<F: Field> Mul<&Morphism<F>> for &Morphism<F> {
    type Output = Morphism<F>;
    fn mul(self, rhs: &Morphism<F>) -> Morphism<F> {
        match self.compose(rhs) {
            Ok(m) => m,
            Err(e) => panic!("{e}"),
        }
    }
}

impl<F: Field> std::fmt::Debug for Morphism<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Morphism({:?} -> {:?}, {} nonzero)",
            self.source,
            self.target,
            self.nnz()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use num::rational::BigRational;

    use crate::testutil::from_int_rows;

    fn q() -> Rationals {
        Rationals
    }

    /// Schoolbook triple-loop product, the independent oracle for `compose`.
    fn naive_product(g: &Morphism<Rationals>, f: &Morphism<Rationals>) -> Vec<Vec<BigRational>> {
        let fld = q();
        let (gr, fc, inner) = (g.target().dim(), f.source().dim(), f.target().dim());
        let gd = g.to_dense_rows();
        let fd = f.to_dense_rows();
        let mut out = vec![vec![fld.zero(); fc]; gr];
        for i in 0..gr {
            for j in 0..fc {
                for k in 0..inner {
                    let t = fld.mul(&gd[i][k], &fd[k][j]);
                    out[i][j] = fld.add(&out[i][j], &t);
                }
            }
        }
        out
    }

    #[test]
    fn compose_identity_is_neutral() {
        let a = SpaceObject::with_dim("A", 3);
        let b = SpaceObject::with_dim("B", 2);
        let f = from_int_rows(&a, &b, &[&[1, 2, 0], &[0, -1, 3]]);
        let id_b = Morphism::identity(q(), &b);
        let id_a = Morphism::identity(q(), &a);
        assert_eq!(&id_b * &f, f);
        assert_eq!(&f * &id_a, f);
    }

    #[test]
    fn compose_matches_schoolbook_oracle() {
        // Fixed pseudo-random 3x4 · 4x2 product, cross-checked entrywise.
        let a = SpaceObject::with_dim("A", 2);
        let b = SpaceObject::with_dim("B", 4);
        let c = SpaceObject::with_dim("C", 3);
        let f = from_int_rows(&a, &b, &[&[3, -1], &[0, 2], &[-5, 7], &[1, 1]]);
        let g = from_int_rows(&b, &c, &[&[1, 0, 2, -3], &[4, -2, 0, 1], &[0, 5, -1, 2]]);
        let got = (&g * &f).to_dense_rows();
        assert_eq!(got, naive_product(&g, &f));
    }

    #[test]
    fn compose_rejects_object_mismatch() {
        // Same dimensions, different objects: composition must be rejected.
        let a = SpaceObject::with_dim("A", 2);
        let b = SpaceObject::with_dim("B", 2);
        let f = Morphism::identity(q(), &a);
        let g = Morphism::identity(q(), &b);
        assert!(matches!(
            g.compose(&f),
            Err(CoreError::ObjectMismatch { .. })
        ));
    }

    #[test]
    fn tensor_of_identities_is_identity() {
        let a = SpaceObject::with_dim("A", 2);
        let b = SpaceObject::with_dim("B", 3);
        let t = Morphism::identity(q(), &a).tensor(&Morphism::identity(q(), &b));
        assert!(t.is_identity());
        assert_eq!(t.source(), &a.tensor(&b));
    }

    #[test]
    fn tensor_interchange_law() {
        // (f⊗g)∘(f'⊗g') = (f∘f')⊗(g∘g') on fixed 2x2 factors.
        let a = SpaceObject::with_dim("A", 2);
        let f = from_int_rows(&a, &a, &[&[1, 2], &[3, 4]]);
        let fp = from_int_rows(&a, &a, &[&[0, 1], &[-2, 5]]);
        let g = from_int_rows(&a, &a, &[&[2, 0], &[1, -1]]);
        let gp = from_int_rows(&a, &a, &[&[7, -3], &[0, 2]]);
        let lhs = &f.tensor(&g) * &fp.tensor(&gp);
        let rhs = (&f * &fp).tensor(&(&g * &gp));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn tensor_strictly_associative_on_matrices() {
        let a = SpaceObject::with_dim("A", 2);
        let f = from_int_rows(&a, &a, &[&[1, 2], &[3, 4]]);
        let g = from_int_rows(&a, &a, &[&[0, -1], &[1, 1]]);
        let h = from_int_rows(&a, &a, &[&[5, 0], &[0, 2]]);
        assert_eq!(f.tensor(&g).tensor(&h), f.tensor(&g.tensor(&h)));
    }

    #[test]
    fn flip_involution_and_naturality() {
        let a = SpaceObject::with_dim("A", 3);
        let b = SpaceObject::with_dim("B", 5);
        let fl = Morphism::flip(q(), &a, &b);
        let fl_back = Morphism::flip(q(), &b, &a);
        assert!((&fl_back * &fl).is_identity());

        // (g⊗f)∘flip = flip∘(f⊗g) over the whole basis, 2x2 factors.
        let c = SpaceObject::with_dim("C", 2);
        let f = from_int_rows(&c, &c, &[&[1, -2], &[0, 3]]);
        let g = from_int_rows(&c, &c, &[&[2, 1], &[1, 1]]);
        let fl_cc = Morphism::flip(q(), &c, &c);
        assert_eq!(&g.tensor(&f) * &fl_cc, &fl_cc * &f.tensor(&g));
    }

    #[test]
    fn flip_with_unit_is_identity_matrix() {
        let k = SpaceObject::unit();
        let m = SpaceObject::with_dim("M", 4);
        assert!(Morphism::flip(q(), &k, &m).is_identity());
        assert!(Morphism::flip(q(), &m, &k).is_identity());
    }

    #[test]
    fn inverse_round_trips() {
        let a = SpaceObject::with_dim("A", 3);
        let m = from_int_rows(&a, &a, &[&[2, 1, 0], &[1, 1, 1], &[0, 3, 1]]);
        let inv = m.inverse().unwrap();
        assert!((&m * &inv).is_identity());
        assert!((&inv * &m).is_identity());
    }

    #[test]
    fn inverse_rejects_singular() {
        let a = SpaceObject::with_dim("A", 2);
        let m = from_int_rows(&a, &a, &[&[1, 2], &[2, 4]]);
        assert!(matches!(
            m.inverse(),
            Err(CoreError::Singular { rank: 1, dim: 2 })
        ));
    }

    #[test]
    fn zero_dimensional_operations_are_total() {
        let z = SpaceObject::with_dim("0", 0);
        let a = SpaceObject::with_dim("A", 2);
        let f = Morphism::zero(q(), z.clone(), a.clone());
        let g = Morphism::zero(q(), a.clone(), z.clone());
        let gz = &g * &Morphism::identity(q(), &a);
        assert_eq!(gz.source().dim(), 2);
        let e = &f * &Morphism::identity(q(), &z);
        assert_eq!(e.target().dim(), 2);
        assert!(Morphism::<Rationals>::identity(q(), &z).is_identity());
        let t = f.tensor(&g);
        assert_eq!(t.source().dim(), 0);
        assert_eq!(t.target().dim(), 0);
    }

    #[test]
    fn set_entry_keeps_canonical_form() {
        let a = SpaceObject::with_dim("A", 2);
        let mut m = Morphism::identity(q(), &a);
        m.set_entry(0, 0, q().zero());
        assert_eq!(m.nnz(), 1);
        m.set_entry(1, 0, q().from_int(5));
        assert_eq!(m.entry(1, 0), q().from_int(5));
        assert_eq!(m.first_diff(&Morphism::identity(q(), &a)).unwrap().0, 0);
    }
}
