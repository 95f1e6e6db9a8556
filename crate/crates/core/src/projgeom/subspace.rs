use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::algebra::{Field, FieldElement, Matrix};

use super::ProjGeomError;

/// A subspace of PG(n,q) held as its reduced row-echelon basis.
///
/// The RREF basis with unit leading entries is the canonical representative
/// of the row space, so `==`, `Ord` and hashing all agree with subspace
/// equality. A point is one basis row, a line two, and so on; the empty
/// subspace (projective dimension -1) has no rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjSubspace {
    ambient: usize,
    basis: Matrix,
}

impl ProjSubspace {
    /// Canonicalize the row space of `m` inside PG(ambient, q).
    pub fn from_span(ambient: usize, m: &Matrix) -> ProjSubspace {
        assert_eq!(m.cols(), ambient + 1, "basis width must be ambient+1");
        let (red, rank) = m.rref();
        let rows: Vec<Vec<FieldElement>> = (0..rank).map(|r| red.row(r).to_vec()).collect();
        let basis = Matrix::from_rows(m.field(), rows).expect("rref rows are uniform");
        ProjSubspace { ambient, basis }
    }

    pub fn point(coords: &[FieldElement]) -> ProjSubspace {
        let field = coords[0].field();
        let m = Matrix::from_rows(field, vec![coords.to_vec()]).expect("single row");
        let s = ProjSubspace::from_span(coords.len() - 1, &m);
        assert_eq!(s.pdim(), 0, "zero vector is not a projective point");
        s
    }

    pub fn point_from_ints(field: Field, coords: &[i64]) -> ProjSubspace {
        let row: Vec<FieldElement> = coords.iter().map(|&c| field.from_int(c)).collect();
        ProjSubspace::point(&row)
    }

    pub fn empty(ambient: usize, field: Field) -> ProjSubspace {
        ProjSubspace {
            ambient,
            basis: Matrix::zeros(0, ambient + 1, field),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    /// Projective dimension: points 0, lines 1, planes 2; empty is -1.
    pub fn pdim(&self) -> isize {
        self.basis.rows() as isize - 1
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    /// Coordinates of a point (single basis row).
    pub fn coords(&self) -> &[FieldElement] {
        assert_eq!(self.pdim(), 0);
        self.basis.row(0)
    }

    pub fn contains(&self, other: &ProjSubspace) -> bool {
        if other.ambient != self.ambient {
            return false;
        }
        if other.basis.rows() == 0 {
            return true;
        }
        let mut rows: Vec<Vec<FieldElement>> = Vec::new();
        for r in 0..self.basis.rows() {
            rows.push(self.basis.row(r).to_vec());
        }
        for r in 0..other.basis.rows() {
            rows.push(other.basis.row(r).to_vec());
        }
        let stacked = Matrix::from_rows(self.field(), rows).expect("uniform rows");
        stacked.rank() == self.basis.rows()
    }

    /// All points lying in this subspace, canonical order.
    pub fn points(&self) -> Vec<ProjSubspace> {
        let field = self.field();
        let k = self.basis.rows();
        let q = field.order();
        let mut out = BTreeSet::new();
        for mut combo in 1..q.pow(k as u32) {
            let mut vec = vec![field.zero(); self.ambient + 1];
            for r in 0..k {
                let coef = field.from_index(combo % q);
                combo /= q;
                if coef.is_zero() {
                    continue;
                }
                for (j, v) in vec.iter_mut().enumerate() {
                    *v = *v + coef * self.basis.get(r, j);
                }
            }
            if vec.iter().any(|e| !e.is_zero()) {
                out.insert(ProjSubspace::point(&vec));
            }
        }
        out.into_iter().collect()
    }

    fn key(&self) -> (usize, usize, Vec<u64>) {
        let flat = (0..self.basis.rows())
            .flat_map(|r| self.basis.row(r).iter().map(|e| e.index()))
            .collect();
        (self.ambient, self.basis.rows(), flat)
    }
}

impl Ord for ProjSubspace {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for ProjSubspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ProjSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.basis.rows())
            .map(|r| {
                self.basis
                    .row(r)
                    .iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(":")
            })
            .collect();
        write!(f, "[{}]", rows.join("|"))
    }
}

/// All points of PG(n,q) in lexicographic coordinate order.
pub fn enumerate_points(n: usize, field: Field) -> Vec<ProjSubspace> {
    let q = field.order();
    let total = q.pow(n as u32 + 1);
    let mut out = Vec::new();
    for mut code in 1..total {
        let mut vec = vec![field.zero(); n + 1];
        for slot in (0..=n).rev() {
            vec[slot] = field.from_index(code % q);
            code /= q;
        }
        // canonical representatives have leading coefficient 1
        if vec.iter().find(|e| !e.is_zero()).is_some_and(|e| e.is_one()) {
            out.push(ProjSubspace::point(&vec));
        }
    }
    out
}

/// All subspaces of PG(n,q) of the given projective dimension, canonical order.
pub fn enumerate_subspaces(n: usize, field: Field, pdim: usize) -> Vec<ProjSubspace> {
    let mut layer: Vec<ProjSubspace> = enumerate_points(n, field);
    let points = layer.clone();
    for _ in 0..pdim {
        let mut next = BTreeSet::new();
        for sub in &layer {
            for p in &points {
                if !sub.contains(p) {
                    let joined = span(sub, p).expect("same ambient");
                    if joined.pdim() == sub.pdim() + 1 {
                        next.insert(joined);
                    }
                }
            }
        }
        layer = next.into_iter().collect();
    }
    layer
}

/// Smallest subspace containing both arguments.
pub fn span(u: &ProjSubspace, w: &ProjSubspace) -> Result<ProjSubspace, ProjGeomError> {
    if u.ambient() != w.ambient() || u.field() != w.field() {
        return Err(ProjGeomError::AmbientMismatch);
    }
    let mut rows = Vec::new();
    for r in 0..u.basis.rows() {
        rows.push(u.basis.row(r).to_vec());
    }
    for r in 0..w.basis.rows() {
        rows.push(w.basis.row(r).to_vec());
    }
    if rows.is_empty() {
        return Ok(ProjSubspace::empty(u.ambient, u.field()));
    }
    let m = Matrix::from_rows(u.field(), rows).expect("uniform rows");
    Ok(ProjSubspace::from_span(u.ambient, &m))
}

/// Intersection, computed through double annihilators of the row spaces.
pub fn meet(u: &ProjSubspace, w: &ProjSubspace) -> Result<ProjSubspace, ProjGeomError> {
    if u.ambient() != w.ambient() || u.field() != w.field() {
        return Err(ProjGeomError::AmbientMismatch);
    }
    let ku = u.basis.kernel();
    let kw = w.basis.kernel();
    let mut rows = Vec::new();
    for r in 0..ku.rows() {
        rows.push(ku.row(r).to_vec());
    }
    for r in 0..kw.rows() {
        rows.push(kw.row(r).to_vec());
    }
    if rows.is_empty() {
        // both subspaces are the whole space
        return Ok(ProjSubspace::from_span(
            u.ambient,
            &Matrix::identity(u.ambient + 1, u.field()),
        ));
    }
    let stacked = Matrix::from_rows(u.field(), rows).expect("uniform rows");
    Ok(ProjSubspace::from_span(u.ambient, &stacked.kernel()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Field;

    #[test]
    fn point_counts() {
        let f3 = Field::prime(3).unwrap();
        assert_eq!(enumerate_points(3, f3).len(), 40);
        assert_eq!(enumerate_points(5, f3).len(), 364);
        assert_eq!(enumerate_points(1, f3).len(), 4);
        let f9 = Field::quadratic(3).unwrap();
        assert_eq!(enumerate_points(3, f9).len(), 820);
    }

    #[test]
    fn line_and_plane_counts_pg33() {
        let f3 = Field::prime(3).unwrap();
        assert_eq!(enumerate_subspaces(3, f3, 1).len(), 130);
        assert_eq!(enumerate_subspaces(3, f3, 2).len(), 40);
    }

    #[test]
    fn span_of_point_with_itself() {
        let f3 = Field::prime(3).unwrap();
        let p = ProjSubspace::point_from_ints(f3, &[1, 2, 0, 1]);
        assert_eq!(span(&p, &p).unwrap(), p);
    }

    #[test]
    fn coplanar_lines_meet_in_a_point() {
        let f3 = Field::prime(3).unwrap();
        let a = ProjSubspace::point_from_ints(f3, &[1, 0, 0, 0]);
        let b = ProjSubspace::point_from_ints(f3, &[0, 1, 0, 0]);
        let c = ProjSubspace::point_from_ints(f3, &[0, 0, 1, 0]);
        let l1 = span(&a, &b).unwrap();
        let l2 = span(&a, &c).unwrap();
        let m = meet(&l1, &l2).unwrap();
        assert_eq!(m, a);
    }

    #[test]
    fn dimension_formula_exhaustive_on_pg33() {
        let f3 = Field::prime(3).unwrap();
        let mut all: Vec<ProjSubspace> = Vec::new();
        for d in 0..=2 {
            all.extend(enumerate_subspaces(3, f3, d));
        }
        for u in all.iter().step_by(7) {
            for w in all.iter().step_by(5) {
                let s = span(u, w).unwrap();
                let m = meet(u, w).unwrap();
                assert_eq!(s.pdim() + m.pdim(), u.pdim() + w.pdim());
            }
        }
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let f3 = Field::prime(3).unwrap();
        let p3 = ProjSubspace::point_from_ints(f3, &[1, 0, 0, 0]);
        let p4 = ProjSubspace::point_from_ints(f3, &[1, 0, 0, 0, 0]);
        assert_eq!(span(&p3, &p4).unwrap_err(), ProjGeomError::AmbientMismatch);
    }

    #[test]
    fn points_of_a_line() {
        let f3 = Field::prime(3).unwrap();
        let a = ProjSubspace::point_from_ints(f3, &[1, 0, 0, 0]);
        let b = ProjSubspace::point_from_ints(f3, &[0, 1, 1, 0]);
        let l = span(&a, &b).unwrap();
        let pts = l.points();
        assert_eq!(pts.len(), 4);
        assert!(pts.iter().all(|p| l.contains(p)));
    }
}
