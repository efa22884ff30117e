//! Exhaustive search for solutions of `⟦r,r⟧ = 0` over a prime field.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{Field, Scalar};
use crate::tensor::Tensor2;
use crate::yang_baxter::{zybe_bracket, RMatrix};

/// Every nonzero 2-tensor on `F_p^n` in lexicographic order of its free
/// entries (the upper triangle when `symmetric`).
pub struct Tensors {
    field: Field,
    n: usize,
    symmetric: bool,
    elements: Vec<Scalar>,
    positions: Vec<(usize, usize)>,
    digits: Vec<usize>,
    done: bool,
}

impl Tensors {
    pub fn new(field: Field, n: usize, symmetric: bool) -> Result<Tensors> {
        let elements = field
            .elements()
            .ok_or_else(|| Error::Precondition("enumeration needs a prime field".into()))?;
        let positions: Vec<_> = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !symmetric || i <= j)
            .collect();
        let digits = vec![0; positions.len()];
        Ok(Tensors {
            field,
            n,
            symmetric,
            elements,
            positions,
            digits,
            done: n == 0,
        })
    }

    /// Number of tensors the iterator yields.
    pub fn total(field: Field, n: usize, symmetric: bool) -> Option<u128> {
        let p = match field {
            Field::Prime(p) => p as u128,
            Field::Rational => return None,
        };
        let free = if symmetric { n * (n + 1) / 2 } else { n * n };
        p.checked_pow(free as u32).map(|t| t - 1)
    }

    fn advance(&mut self) -> bool {
        let p = self.elements.len();
        for d in self.digits.iter_mut().rev() {
            *d += 1;
            if *d < p {
                return true;
            }
            *d = 0;
        }
        false
    }
}

impl Iterator for Tensors {
    type Item = Tensor2;

    fn next(&mut self) -> Option<Tensor2> {
        if self.done || !self.advance() {
            self.done = true;
            return None;
        }
        let mut m = Matrix::zeros(self.field, self.n, self.n);
        for (&(i, j), &d) in self.positions.iter().zip(&self.digits) {
            m.set(i, j, self.elements[d].clone());
            if self.symmetric {
                m.set(j, i, self.elements[d].clone());
            }
        }
        Some(Tensor2::new(m).expect("square"))
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SearchOptions {
    pub symmetric: bool,
    /// Stop after this many solutions.
    pub limit: Option<usize>,
    /// Keep only solutions whose skew part is invariant.
    pub quasi_triangular: bool,
}

/// Nonzero solutions of `⟦r,r⟧ = 0` on `a`, which must be over `F_p`.
pub fn search_zybe(a: &Algebra, opts: SearchOptions) -> Result<Vec<Tensor2>> {
    let mut out = Vec::new();
    for r in Tensors::new(a.field(), a.dim(), opts.symmetric)? {
        if opts.limit.is_some_and(|l| out.len() >= l) {
            break;
        }
        if !zybe_bracket(a, &r).is_zero() {
            continue;
        }
        if opts.quasi_triangular && !RMatrix::new(a.clone(), r.clone())?.is_quasi_triangular() {
            continue;
        }
        out.push(r);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts() {
        let f = Field::prime(5).unwrap();
        assert_eq!(Tensors::new(f, 2, false).unwrap().count(), 624);
        assert_eq!(Tensors::new(f, 2, true).unwrap().count(), 124);
        assert_eq!(Tensors::total(f, 2, true), Some(124));
        assert!(Tensors::new(Field::Rational, 2, false).is_err());
    }

    #[test]
    fn every_tensor_solves_on_zero_algebra() {
        let f = Field::prime(5).unwrap();
        let z = Algebra::zero("Z0", f, 2);
        let opts = SearchOptions {
            limit: Some(10),
            ..Default::default()
        };
        assert_eq!(search_zybe(&z, opts).unwrap().len(), 10);
    }
}
