//! Minimal interface for commutative unital algebras over a scalar field:
//! zero, unit, addition, multiplication, and scalar multiplication.
//!
//! Polynomial evaluation is defined against this trait, so any implementor
//! (the field itself, coordinatewise tuples, polynomials, power series,
//! quotient rings) can receive substituted arguments.

use crate::scalars::Field;

pub trait Algebra<F: Field> {
    type Elem: Clone;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scalar_mul(&self, c: &F::Elem, a: &Self::Elem) -> Self::Elem;

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}

/// A field viewed as a one-dimensional algebra over itself.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct FieldAlgebra<F: Field>(pub F);

impl<F: Field> Algebra<F> for FieldAlgebra<F> {
    type Elem = F::Elem;

    fn zero(&self) -> F::Elem {
        self.0.zero()
    }

    fn one(&self) -> F::Elem {
        self.0.one()
    }

    fn add(&self, a: &F::Elem, b: &F::Elem) -> F::Elem {
        self.0.add(a, b)
    }

    fn mul(&self, a: &F::Elem, b: &F::Elem) -> F::Elem {
        self.0.mul(a, b)
    }

    fn scalar_mul(&self, c: &F::Elem, a: &F::Elem) -> F::Elem {
        self.0.mul(c, a)
    }
}

/// k^n with coordinatewise operations.
#[derive(Clone, PartialEq, Debug)]
pub struct TupleAlgebra<F: Field> {
    pub dim: usize,
    pub field: F,
}

impl<F: Field> Algebra<F> for TupleAlgebra<F> {
    type Elem = Vec<F::Elem>;

    fn zero(&self) -> Vec<F::Elem> {
        vec![self.field.zero(); self.dim]
    }

    fn one(&self) -> Vec<F::Elem> {
        vec![self.field.one(); self.dim]
    }

    fn add(&self, a: &Vec<F::Elem>, b: &Vec<F::Elem>) -> Vec<F::Elem> {
        a.iter().zip(b).map(|(x, y)| self.field.add(x, y)).collect()
    }

    fn mul(&self, a: &Vec<F::Elem>, b: &Vec<F::Elem>) -> Vec<F::Elem> {
        a.iter().zip(b).map(|(x, y)| self.field.mul(x, y)).collect()
    }

    fn scalar_mul(&self, c: &F::Elem, a: &Vec<F::Elem>) -> Vec<F::Elem> {
        a.iter().map(|x| self.field.mul(c, x)).collect()
    }
}
