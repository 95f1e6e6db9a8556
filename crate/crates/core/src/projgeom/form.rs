use std::collections::BTreeSet;

use crate::algebra::{Field, FieldElement, Matrix};

use super::subspace::{enumerate_points, span, ProjSubspace};
use super::ProjGeomError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormKind {
    Symplectic,
    Quadratic,
    Hermitian,
}

/// A sesquilinear or quadratic form on the ambient space of PG(n,q).
///
/// Symplectic: Gram is antisymmetric with zero diagonal, nonsingular.
/// Quadratic: symmetric coefficient matrix A with Q(x) = x A xᵀ; odd
/// characteristic, nonsingular polar form. Hermitian: Gram equals its
/// conjugate transpose over GF(p²).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Form {
    kind: FormKind,
    gram: Matrix,
}

impl Form {
    pub fn symplectic(gram: Matrix) -> Result<Form, ProjGeomError> {
        if gram.rows() != gram.cols() {
            return Err(ProjGeomError::BadGram("square"));
        }
        if gram.field().characteristic() == 2 {
            return Err(ProjGeomError::EvenCharacteristic);
        }
        let n = gram.rows();
        for i in 0..n {
            if !gram.get(i, i).is_zero() {
                return Err(ProjGeomError::BadGram("alternating"));
            }
            for j in 0..n {
                if gram.get(i, j) != -gram.get(j, i) {
                    return Err(ProjGeomError::BadGram("antisymmetric"));
                }
            }
        }
        if gram.rank() != n {
            return Err(ProjGeomError::DegenerateForm);
        }
        Ok(Form {
            kind: FormKind::Symplectic,
            gram,
        })
    }

    pub fn quadratic(coeffs: Matrix) -> Result<Form, ProjGeomError> {
        if coeffs.rows() != coeffs.cols() {
            return Err(ProjGeomError::BadGram("square"));
        }
        if coeffs.field().characteristic() == 2 {
            return Err(ProjGeomError::EvenCharacteristic);
        }
        let n = coeffs.rows();
        for i in 0..n {
            for j in 0..n {
                if coeffs.get(i, j) != coeffs.get(j, i) {
                    return Err(ProjGeomError::BadGram("symmetric"));
                }
            }
        }
        if coeffs.rank() != n {
            return Err(ProjGeomError::DegenerateForm);
        }
        Ok(Form {
            kind: FormKind::Quadratic,
            gram: coeffs,
        })
    }

    pub fn hermitian(gram: Matrix) -> Result<Form, ProjGeomError> {
        if gram.rows() != gram.cols() {
            return Err(ProjGeomError::BadGram("square"));
        }
        if gram.field().degree() != 2 {
            return Err(ProjGeomError::NotQuadraticField);
        }
        if gram != gram.conjugate_transpose()? {
            return Err(ProjGeomError::BadGram("conjugate-symmetric"));
        }
        if gram.rank() != gram.rows() {
            return Err(ProjGeomError::DegenerateForm);
        }
        Ok(Form {
            kind: FormKind::Hermitian,
            gram,
        })
    }

    pub fn kind(&self) -> FormKind {
        self.kind
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn field(&self) -> Field {
        self.gram.field()
    }

    /// Ambient projective dimension this form lives on.
    pub fn ambient(&self) -> usize {
        self.gram.rows() - 1
    }

    /// The bilinear (for quadratic: polar) or sesquilinear value on vectors.
    pub fn eval(&self, x: &[FieldElement], y: &[FieldElement]) -> FieldElement {
        let f = self.field();
        let mut acc = f.zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                let yj = match self.kind {
                    FormKind::Hermitian => yj.conjugate().expect("degree-2 field"),
                    _ => *yj,
                };
                acc = acc + *xi * self.gram.get(i, j) * yj;
            }
        }
        match self.kind {
            // polar form of Q(x) = x A xᵀ is B(x,y) = 2 x A yᵀ
            FormKind::Quadratic => acc + acc,
            _ => acc,
        }
    }

    /// Q(x) for quadratic forms, φ(x,x) for Hermitian, 0 for symplectic.
    pub fn value(&self, x: &[FieldElement]) -> FieldElement {
        match self.kind {
            FormKind::Symplectic => self.field().zero(),
            FormKind::Quadratic => {
                let f = self.field();
                let mut acc = f.zero();
                for (i, xi) in x.iter().enumerate() {
                    if xi.is_zero() {
                        continue;
                    }
                    for (j, xj) in x.iter().enumerate() {
                        acc = acc + *xi * self.gram.get(i, j) * *xj;
                    }
                }
                acc
            }
            FormKind::Hermitian => self.eval(x, x),
        }
    }

    pub fn is_isotropic_point(&self, p: &ProjSubspace) -> bool {
        self.value(p.coords()).is_zero()
    }

    /// True when the form vanishes identically on the subspace.
    pub fn is_totally_isotropic(&self, s: &ProjSubspace) -> bool {
        let b = s.basis();
        for i in 0..b.rows() {
            if !self.value(b.row(i)).is_zero() {
                return false;
            }
            for j in i..b.rows() {
                if !self.eval(b.row(i), b.row(j)).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Matrix whose kernel gives orthogonality conditions: for symplectic /
    /// quadratic the Gram (polar) matrix, for Hermitian the Gram.
    fn polar_gram(&self) -> Matrix {
        self.gram.clone()
    }
}

/// Polar subspace U^⊥ with respect to a symplectic or Hermitian polarity.
pub fn perp(u: &ProjSubspace, f: &Form) -> Result<ProjSubspace, ProjGeomError> {
    if u.ambient() != f.ambient() {
        return Err(ProjGeomError::AmbientMismatch);
    }
    if f.kind() == FormKind::Quadratic {
        return Err(ProjGeomError::UnsupportedFormKind);
    }
    let prod = u.basis().mul(&f.polar_gram())?;
    let ker = prod.kernel();
    match f.kind() {
        FormKind::Hermitian => {
            // {y : x G ȳᵀ = 0} is the conjugate of the kernel of U·G
            let field = f.field();
            let mut rows = Vec::with_capacity(ker.rows());
            for r in 0..ker.rows() {
                let row: Result<Vec<FieldElement>, _> =
                    ker.row(r).iter().map(|e| e.conjugate()).collect();
                rows.push(row?);
            }
            let m = Matrix::from_rows(field, rows)?;
            Ok(ProjSubspace::from_span(u.ambient(), &m))
        }
        _ => Ok(ProjSubspace::from_span(u.ambient(), &ker)),
    }
}

/// All isotropic (for quadratic: singular) points, canonical order.
pub fn isotropic_points(f: &Form) -> Vec<ProjSubspace> {
    enumerate_points(f.ambient(), f.field())
        .into_iter()
        .filter(|p| f.is_isotropic_point(p))
        .collect()
}

/// All totally isotropic subspaces of the given projective dimension,
/// canonical order. Built by extending smaller ones inside their perps.
pub fn isotropic_subspaces(f: &Form, pdim: usize) -> Vec<ProjSubspace> {
    let mut layer = isotropic_points(f);
    for _ in 0..pdim {
        let mut next = BTreeSet::new();
        for sub in &layer {
            let candidates = orthogonal_points(f, sub);
            for p in candidates {
                if sub.contains(&p) {
                    continue;
                }
                let bigger = span(sub, &p).expect("same ambient");
                if f.is_totally_isotropic(&bigger) {
                    next.insert(bigger);
                }
            }
        }
        layer = next.into_iter().collect();
    }
    layer
}

/// Isotropic points orthogonal to every basis vector of `sub`.
fn orthogonal_points(f: &Form, sub: &ProjSubspace) -> Vec<ProjSubspace> {
    let gram = match f.kind() {
        FormKind::Hermitian => {
            return isotropic_points(f)
                .into_iter()
                .filter(|p| {
                    (0..sub.basis().rows())
                        .all(|r| f.eval(sub.basis().row(r), p.coords()).is_zero())
                })
                .collect();
        }
        _ => f.polar_gram(),
    };
    let prod = sub.basis().mul(&gram).expect("compatible dims");
    let ker = ProjSubspace::from_span(sub.ambient(), &prod.kernel());
    ker.points()
        .into_iter()
        .filter(|p| f.is_isotropic_point(p))
        .collect()
}
