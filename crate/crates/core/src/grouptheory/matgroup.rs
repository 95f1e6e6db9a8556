use std::collections::HashMap;

use crate::algebra::{Field, Matrix};
use crate::projgeom::Form;

use super::{FiniteGroup, GroupError, MAX_GROUP_ORDER};

pub const DEFAULT_CLOSURE_BOUND: usize = 1_000_000;

/// A finite matrix group: the abstract table plus the matrix realising
/// each element, aligned by index.
#[derive(Debug, Clone)]
pub struct MatrixGroup {
    pub group: FiniteGroup,
    pub matrices: Vec<Matrix>,
}

impl MatrixGroup {
    pub fn matrix_of(&self, e: u32) -> &Matrix {
        &self.matrices[e as usize]
    }
}

/// Close a set of invertible matrices under multiplication (orbit
/// algorithm) and build the multiplication table. Element 0 is the
/// identity; discovery order is breadth-first and deterministic.
pub fn group_from_matrix_generators(
    gens: &[Matrix],
    bound: usize,
) -> Result<MatrixGroup, GroupError> {
    let Some(first) = gens.first() else {
        return Err(GroupError::BadGenerators);
    };
    let dim = first.rows();
    let field = first.field();
    for g in gens {
        if g.rows() != dim || g.cols() != dim || g.field() != field {
            return Err(GroupError::BadGenerators);
        }
        if g.inverse().is_err() {
            return Err(GroupError::BadGenerators);
        }
    }

    let identity = Matrix::identity(dim, field);
    let mut index: HashMap<Matrix, u32> = HashMap::new();
    let mut elements: Vec<Matrix> = vec![identity.clone()];
    index.insert(identity, 0);
    let mut head = 0;
    while head < elements.len() {
        let current = elements[head].clone();
        head += 1;
        for g in gens {
            let next = current.mul(g)?;
            if !index.contains_key(&next) {
                if elements.len() >= bound || elements.len() >= MAX_GROUP_ORDER {
                    return Err(GroupError::ClosureBound(bound.min(MAX_GROUP_ORDER)));
                }
                index.insert(next.clone(), elements.len() as u32);
                elements.push(next);
            }
        }
    }

    let n = elements.len();
    let mut table = vec![0u32; n * n];
    for i in 0..n {
        for j in 0..n {
            let prod = elements[i].mul(&elements[j])?;
            table[i * n + j] = *index
                .get(&prod)
                .expect("closure is closed under products");
        }
    }
    let group = FiniteGroup::from_table(n, table, None)?;
    Ok(MatrixGroup {
        group,
        matrices: elements,
    })
}

/// The extraspecial group of order p⁵ and exponent p, presented by the
/// 6×6 upper unitriangular matrices
///
/// ```text
///   1 a b c d  e
///     1       d
///       1     c
///         1  -b
///           1 -a
///              1
/// ```
///
/// generated by the five one-parameter matrices. Elements are labelled by
/// their parameters (a,b,c,d,e).
pub fn extraspecial_p5(p: u64) -> Result<MatrixGroup, GroupError> {
    let field = Field::prime(p)?;
    let gens: Vec<Matrix> = (0..5)
        .map(|slot| {
            let mut params = [0i64; 5];
            params[slot] = 1;
            unitriangular(field, params)
        })
        .collect();
    let mut mg = group_from_matrix_generators(&gens, DEFAULT_CLOSURE_BOUND)?;
    let labels = mg
        .matrices
        .iter()
        .map(|m| {
            let row = m.row(0);
            let vals: Vec<String> = (1..6).map(|j| row[j].to_string()).collect();
            format!("({})", vals.join(","))
        })
        .collect();
    mg.group.set_labels(labels);
    Ok(mg)
}

fn unitriangular(field: Field, params: [i64; 5]) -> Matrix {
    let [a, b, c, d, e] = params;
    Matrix::from_ints(
        field,
        &[
            &[1, a, b, c, d, e],
            &[0, 1, 0, 0, 0, d],
            &[0, 0, 1, 0, 0, c],
            &[0, 0, 0, 1, 0, -b],
            &[0, 0, 0, 0, 1, -a],
            &[0, 0, 0, 0, 0, 1],
        ],
    )
}

/// The symplectic polarity of PG(5,p) preserved by `extraspecial_p5`:
/// antidiagonal (1,1,1,-1,-1,-1).
pub fn preserved_polarity(p: u64) -> Result<Form, GroupError> {
    let field = Field::prime(p)?;
    let mut j = Matrix::zeros(6, 6, field);
    for (i, sign) in [1i64, 1, 1, -1, -1, -1].iter().enumerate() {
        j.set(i, 5 - i, field.from_int(*sign));
    }
    Form::symplectic(j).map_err(|_| GroupError::BadGenerators)
}

/// The extraspecial group of order p³ and exponent p as 3×3 upper
/// unitriangular matrices.
pub fn heisenberg(p: u64) -> Result<MatrixGroup, GroupError> {
    let field = Field::prime(p)?;
    let a = Matrix::from_ints(field, &[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]]);
    let b = Matrix::from_ints(field, &[&[1, 0, 0], &[0, 1, 1], &[0, 0, 1]]);
    group_from_matrix_generators(&[a, b], DEFAULT_CLOSURE_BOUND)
}
