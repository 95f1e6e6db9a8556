use std::fmt;

use super::{AlgebraError, Field, FieldElement};

/// Dense matrix over a single field, row-major. All arithmetic is exact.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: Field,
    entries: Vec<FieldElement>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, field: Field) -> Matrix {
        Matrix {
            rows,
            cols,
            field,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(n: usize, field: Field) -> Matrix {
        let mut m = Matrix::zeros(n, n, field);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<FieldElement>>) -> Result<Matrix, AlgebraError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut entries = Vec::with_capacity(r * c);
        for row in &rows {
            if row.len() != c {
                return Err(AlgebraError::DimensionMismatch(r, c, r, row.len()));
            }
            for e in row {
                if e.field() != field {
                    return Err(AlgebraError::FieldMismatch);
                }
                entries.push(*e);
            }
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            field,
            entries,
        })
    }

    /// Convenience constructor from integer literals.
    pub fn from_ints(field: Field, rows: &[&[i64]]) -> Matrix {
        let data = rows
            .iter()
            .map(|r| r.iter().map(|&x| field.from_int(x)).collect())
            .collect();
        Matrix::from_rows(field, data).expect("ragged integer matrix")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, r: usize, c: usize) -> FieldElement {
        self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: FieldElement) {
        assert_eq!(v.field(), self.field, "field mismatch");
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix, AlgebraError> {
        if self.field != rhs.field {
            return Err(AlgebraError::FieldMismatch);
        }
        if self.cols != rhs.rows {
            return Err(AlgebraError::DimensionMismatch(
                self.rows, self.cols, rhs.rows, rhs.cols,
            ));
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols, self.field);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = out.get(i, j) + a * rhs.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows, self.field);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    /// Entrywise conjugate followed by transpose; degree-2 fields only.
    pub fn conjugate_transpose(&self) -> Result<Matrix, AlgebraError> {
        let mut out = Matrix::zeros(self.cols, self.rows, self.field);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).conjugate()?);
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form (zero rows kept at the bottom) and rank.
    pub fn rref(&self) -> (Matrix, usize) {
        let mut m = self.clone();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(r) = (pivot_row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(pivot_row, r);
            let inv = m.get(pivot_row, col).inv().expect("pivot nonzero");
            for c in 0..m.cols {
                m.set(pivot_row, c, m.get(pivot_row, c) * inv);
            }
            for r2 in 0..m.rows {
                if r2 != pivot_row && !m.get(r2, col).is_zero() {
                    let factor = m.get(r2, col);
                    for c in 0..m.cols {
                        let v = m.get(r2, c) - factor * m.get(pivot_row, c);
                        m.set(r2, c, v);
                    }
                }
            }
            pivot_row += 1;
        }
        (m, pivot_row)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    pub fn inverse(&self) -> Result<Matrix, AlgebraError> {
        if self.rows != self.cols {
            return Err(AlgebraError::NotSquare);
        }
        let n = self.rows;
        // Gauss-Jordan on [self | I]
        let mut aug = Matrix::zeros(n, 2 * n, self.field);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, self.field.one());
        }
        let (red, _) = aug.rref();
        for i in 0..n {
            for j in 0..n {
                let want = if i == j { self.field.one() } else { self.field.zero() };
                if red.get(i, j) != want {
                    return Err(AlgebraError::Singular);
                }
            }
        }
        let mut out = Matrix::zeros(n, n, self.field);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, red.get(i, n + j));
            }
        }
        Ok(out)
    }

    /// Basis of the right kernel {x : M xᵀ = 0}, one solution per row, in RREF.
    pub fn kernel(&self) -> Matrix {
        let (red, rank) = self.rref();
        let mut pivot_cols = Vec::with_capacity(rank);
        let mut lead = 0;
        for r in 0..rank {
            while lead < self.cols && red.get(r, lead).is_zero() {
                lead += 1;
            }
            pivot_cols.push(lead);
        }
        let free_cols: Vec<usize> = (0..self.cols).filter(|c| !pivot_cols.contains(c)).collect();
        if free_cols.is_empty() {
            return Matrix::zeros(0, self.cols, self.field);
        }
        let mut rows = Vec::with_capacity(free_cols.len());
        for &fc in &free_cols {
            let mut v = vec![self.field.zero(); self.cols];
            v[fc] = self.field.one();
            for (r, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -red.get(r, fc);
            }
            rows.push(v);
        }
        let m = Matrix::from_rows(self.field, rows).expect("kernel rows are uniform");
        m.rref().0
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            let (x, y) = (self.get(a, c), self.get(b, c));
            self.set(a, c, y);
            self.set(b, c, x);
        }
    }
}

/// Row vector times matrix; the workhorse of all point actions.
pub(crate) fn row_times(v: &[FieldElement], m: &Matrix) -> Vec<FieldElement> {
    assert_eq!(v.len(), m.rows());
    let f = m.field();
    let mut out = vec![f.zero(); m.cols()];
    for (i, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for j in 0..m.cols() {
            out[j] = out[j] + *x * m.get(i, j);
        }
    }
    out
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|e| e.to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf3() -> Field {
        Field::prime(3).unwrap()
    }

    #[test]
    fn identity_multiplication() {
        let f = gf3();
        let m = Matrix::from_ints(
            f,
            &[
                &[1, 2, 0, 1, 1, 2],
                &[0, 1, 0, 0, 0, 1],
                &[2, 0, 1, 0, 0, 1],
                &[0, 0, 0, 1, 0, 2],
                &[0, 0, 0, 0, 1, 1],
                &[0, 0, 0, 0, 0, 1],
            ],
        );
        let i6 = Matrix::identity(6, f);
        assert_eq!(i6.mul(&m).unwrap(), m);
        assert_eq!(m.mul(&i6).unwrap(), m);
    }

    #[test]
    fn antidiagonal_polarity_matrix_has_full_rank() {
        let f = gf3();
        let mut j = Matrix::zeros(6, 6, f);
        for (i, sign) in [1i64, 1, 1, -1, -1, -1].iter().enumerate() {
            j.set(i, 5 - i, f.from_int(*sign));
        }
        assert_eq!(j.rank(), 6);
        let ji = j.inverse().unwrap();
        assert_eq!(j.mul(&ji).unwrap(), Matrix::identity(6, f));
    }

    #[test]
    fn unitriangular_product_stays_unitriangular() {
        let f = gf3();
        // two of the one-parameter generators of the 6x6 unitriangular family
        let ga = Matrix::from_ints(
            f,
            &[
                &[1, 1, 0, 0, 0, 0],
                &[0, 1, 0, 0, 0, 0],
                &[0, 0, 1, 0, 0, 0],
                &[0, 0, 0, 1, 0, 0],
                &[0, 0, 0, 0, 1, -1],
                &[0, 0, 0, 0, 0, 1],
            ],
        );
        let gb = Matrix::from_ints(
            f,
            &[
                &[1, 0, 1, 0, 0, 0],
                &[0, 1, 0, 0, 0, 0],
                &[0, 0, 1, 0, 0, 0],
                &[0, 0, 0, 1, 0, -1],
                &[0, 0, 0, 0, 1, 0],
                &[0, 0, 0, 0, 0, 1],
            ],
        );
        let prod = ga.mul(&gb).unwrap();
        for i in 0..6 {
            assert!(prod.get(i, i).is_one());
            for j in 0..i {
                assert!(prod.get(i, j).is_zero());
            }
        }
    }

    #[test]
    fn singular_matrix_has_no_inverse() {
        let f = gf3();
        let m = Matrix::from_ints(f, &[&[1, 2], &[2, 1]]);
        // det = 1 - 4 = 0 mod 3
        assert_eq!(m.inverse().unwrap_err(), AlgebraError::Singular);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_solves_the_system() {
        let f = gf3();
        let m = Matrix::from_ints(f, &[&[1, 2, 0], &[0, 0, 1]]);
        let k = m.kernel();
        assert_eq!(k.rows(), 1);
        let prod = m.mul(&k.transpose()).unwrap();
        assert!(prod.is_zero());
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let f = gf3();
        let a = Matrix::zeros(2, 3, f);
        let b = Matrix::zeros(2, 3, f);
        assert!(matches!(
            a.mul(&b),
            Err(AlgebraError::DimensionMismatch(2, 3, 2, 3))
        ));
    }
}
