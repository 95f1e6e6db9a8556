use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::AlgebraError;

/// Descriptor of GF(p) or GF(p²).
///
/// A degree-2 field is realised as GF(p)[i] with i² = n, where n is the
/// least quadratic non-residue mod p. Elements are pairs a + b·i reduced
/// componentwise mod p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Field {
    p: u16,
    degree: u8,
    nonresidue: u16,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn new(p: u64, degree: u32) -> Result<Field, AlgebraError> {
        if !is_prime(p) {
            return Err(AlgebraError::NotPrime(p));
        }
        match degree {
            1 => Ok(Field {
                p: p as u16,
                degree: 1,
                nonresidue: 0,
            }),
            2 => {
                if p == 2 {
                    return Err(AlgebraError::EvenExtension);
                }
                let squares: Vec<u64> = (1..p).map(|x| x * x % p).collect();
                let n = (1..p)
                    .find(|m| !squares.contains(m))
                    .expect("odd prime has a non-residue");
                Ok(Field {
                    p: p as u16,
                    degree: 2,
                    nonresidue: n as u16,
                })
            }
            d => Err(AlgebraError::BadDegree(d)),
        }
    }

    pub fn prime(p: u64) -> Result<Field, AlgebraError> {
        Field::new(p, 1)
    }

    pub fn quadratic(p: u64) -> Result<Field, AlgebraError> {
        Field::new(p, 2)
    }

    pub fn characteristic(&self) -> u64 {
        self.p as u64
    }

    pub fn degree(&self) -> u32 {
        self.degree as u32
    }

    /// Number of elements, p^degree.
    pub fn order(&self) -> u64 {
        (self.p as u64).pow(self.degree as u32)
    }

    pub fn nonresidue(&self) -> Option<u64> {
        (self.degree == 2).then_some(self.nonresidue as u64)
    }

    pub fn zero(&self) -> FieldElement {
        self.element(0, 0)
    }

    pub fn one(&self) -> FieldElement {
        self.element(1, 0)
    }

    /// a + b·i, reduced mod p. b is ignored for degree 1 only if zero;
    /// passing b ≠ 0 into a prime field panics.
    pub fn element(&self, a: i64, b: i64) -> FieldElement {
        let p = self.p as i64;
        let ar = a.rem_euclid(p) as u16;
        let br = b.rem_euclid(p) as u16;
        assert!(
            self.degree == 2 || br == 0,
            "imaginary part in a prime field"
        );
        FieldElement {
            field: *self,
            a: ar,
            b: br,
        }
    }

    pub fn from_int(&self, a: i64) -> FieldElement {
        self.element(a, 0)
    }

    /// Element with index a + b·p; indices run over 0..order().
    pub fn from_index(&self, idx: u64) -> FieldElement {
        assert!(idx < self.order());
        let p = self.p as u64;
        self.element((idx % p) as i64, (idx / p) as i64)
    }

    /// All elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order()).map(move |i| self.from_index(i))
    }
}

/// An element of GF(p) or GF(p²), always reduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    field: Field,
    a: u16,
    b: u16,
}

impl FieldElement {
    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn is_one(&self) -> bool {
        self.a == 1 && self.b == 0
    }

    /// Canonical integer index a + b·p; orders the field deterministically.
    pub fn index(&self) -> u64 {
        self.a as u64 + self.b as u64 * self.field.p as u64
    }

    /// Components (a, b) of a + b·i.
    pub fn parts(&self) -> (u64, u64) {
        (self.a as u64, self.b as u64)
    }

    fn same_field(&self, rhs: &FieldElement) {
        assert_eq!(self.field, rhs.field, "field mismatch");
    }

    pub fn pow(&self, mut e: u64) -> FieldElement {
        let mut base = *self;
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self) -> Result<FieldElement, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(self.pow(self.field.order() - 2))
    }

    pub fn div(&self, rhs: &FieldElement) -> Result<FieldElement, AlgebraError> {
        self.same_field(rhs);
        Ok(*self * rhs.inv()?)
    }

    /// The involution x ↦ x^p of GF(p²); errors on prime-field input.
    pub fn conjugate(&self) -> Result<FieldElement, AlgebraError> {
        if self.field.degree != 2 {
            return Err(AlgebraError::NotQuadratic);
        }
        // i^p = -i since the defining square is a non-residue.
        Ok(FieldElement {
            field: self.field,
            a: self.a,
            b: (self.field.p - self.b) % self.field.p,
        })
    }

    /// x ↦ x^p on any supported field.
    pub fn frobenius(&self) -> FieldElement {
        self.pow(self.field.p as u64)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.degree == 1 {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{}+{}i", self.a, self.b)
        }
    }
}

impl Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: FieldElement) -> FieldElement {
        self.same_field(&rhs);
        let p = self.field.p;
        FieldElement {
            field: self.field,
            a: (self.a + rhs.a) % p,
            b: (self.b + rhs.b) % p,
        }
    }
}

impl Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: FieldElement) -> FieldElement {
        self.same_field(&rhs);
        let p = self.field.p;
        FieldElement {
            field: self.field,
            a: (self.a + p - rhs.a) % p,
            b: (self.b + p - rhs.b) % p,
        }
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: FieldElement) -> FieldElement {
        self.same_field(&rhs);
        let p = self.field.p as u32;
        let (a1, b1) = (self.a as u32, self.b as u32);
        let (a2, b2) = (rhs.a as u32, rhs.b as u32);
        // (a1 + b1 i)(a2 + b2 i) = a1 a2 + n b1 b2 + (a1 b2 + b1 a2) i
        let n = self.field.nonresidue as u32;
        let a = (a1 * a2 + n * (b1 * b2 % p)) % p;
        let b = (a1 * b2 + b1 * a2) % p;
        FieldElement {
            field: self.field,
            a: a as u16,
            b: b as u16,
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        let p = self.field.p;
        FieldElement {
            field: self.field,
            a: (p - self.a) % p,
            b: (p - self.b) % p,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked field arithmetic; reports mismatched fields and division by zero
/// as errors instead of panicking.
pub fn arith(a: &FieldElement, b: &FieldElement, op: ArithOp) -> Result<FieldElement, AlgebraError> {
    if a.field != b.field {
        return Err(AlgebraError::FieldMismatch);
    }
    match op {
        ArithOp::Add => Ok(*a + *b),
        ArithOp::Sub => Ok(*a - *b),
        ArithOp::Mul => Ok(*a * *b),
        ArithOp::Div => a.div(b),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf3_is_a_prime_field() {
        let f = Field::new(3, 1).unwrap();
        assert_eq!(f.order(), 3);
        assert_eq!(f.nonresidue(), None);
    }

    #[test]
    fn gf9_uses_least_nonresidue() {
        // squares mod 3 are 1²=1 and 2²=1, so 2 is the least non-residue
        let f = Field::new(3, 2).unwrap();
        assert_eq!(f.order(), 9);
        assert_eq!(f.nonresidue(), Some(2));
        let i = f.element(0, 1);
        assert_eq!(i * i, f.from_int(2));
    }

    #[test]
    fn non_prime_rejected() {
        assert_eq!(Field::new(4, 1).unwrap_err(), AlgebraError::NotPrime(4));
        assert_eq!(Field::new(1, 1).unwrap_err(), AlgebraError::NotPrime(1));
        assert_eq!(Field::new(2, 2).unwrap_err(), AlgebraError::EvenExtension);
        assert_eq!(Field::new(3, 3).unwrap_err(), AlgebraError::BadDegree(3));
    }

    #[test]
    fn small_arithmetic() {
        let f3 = Field::prime(3).unwrap();
        assert_eq!(f3.from_int(2) + f3.from_int(2), f3.from_int(1));
        let f5 = Field::prime(5).unwrap();
        assert_eq!(f5.from_int(2).inv().unwrap(), f5.from_int(3));
    }

    #[test]
    fn checked_arith_errors() {
        let f3 = Field::prime(3).unwrap();
        let f5 = Field::prime(5).unwrap();
        assert_eq!(
            arith(&f3.one(), &f5.one(), ArithOp::Add).unwrap_err(),
            AlgebraError::FieldMismatch
        );
        assert_eq!(
            arith(&f3.one(), &f3.zero(), ArithOp::Div).unwrap_err(),
            AlgebraError::DivisionByZero
        );
    }

    #[test]
    fn conjugate_is_frobenius_and_involution() {
        let f9 = Field::quadratic(3).unwrap();
        assert_eq!(f9.one().conjugate().unwrap(), f9.one());
        assert_eq!(f9.element(0, 1).conjugate().unwrap(), f9.element(0, 2));
        for x in f9.elements() {
            assert_eq!(x.conjugate().unwrap(), x.frobenius());
            assert_eq!(x.conjugate().unwrap().conjugate().unwrap(), x);
        }
        assert_eq!(
            Field::prime(3).unwrap().one().conjugate().unwrap_err(),
            AlgebraError::NotQuadratic
        );
    }

    #[test]
    fn field_axioms_exhaustive() {
        for p in [3u64, 5, 7] {
            for degree in [1u32, 2] {
                let f = Field::new(p, degree).unwrap();
                let els: Vec<_> = f.elements().collect();
                for x in &els {
                    assert_eq!(*x + f.zero(), *x);
                    assert_eq!(*x * f.one(), *x);
                    assert_eq!(*x + x.neg(), f.zero());
                    if !x.is_zero() {
                        assert_eq!(*x * x.inv().unwrap(), f.one());
                    }
                    for y in &els {
                        assert_eq!(*x + *y, *y + *x);
                        assert_eq!(*x * *y, *y * *x);
                        for z in &els {
                            assert_eq!((*x + *y) + *z, *x + (*y + *z));
                            assert_eq!((*x * *y) * *z, *x * (*y * *z));
                            assert_eq!(*x * (*y + *z), *x * *y + *x * *z);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_is_an_automorphism_of_gf_p2() {
        for p in [3u64, 5, 7] {
            let f = Field::quadratic(p).unwrap();
            for x in f.elements() {
                for y in f.elements() {
                    assert_eq!((x + y).frobenius(), x.frobenius() + y.frobenius());
                    assert_eq!((x * y).frobenius(), x.frobenius() * y.frobenius());
                }
            }
        }
    }
}
