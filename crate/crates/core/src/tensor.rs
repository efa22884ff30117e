//! Two- and three-fold tensors over a fixed basis, and bilinear forms.

use std::ops::{Add, Neg, Sub};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::scalar::{Field, Scalar};

/// `r = Σ r^{ij} e_i ⊗ e_j`, stored as the matrix `[r^{ij}]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Tensor2 {
    coeffs: Matrix,
}

/// Which tensor slot a contraction or operator acts on (1-based in the
/// mathematical notation).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slot {
    First,
    Second,
    Third,
}

impl Tensor2 {
    pub fn new(coeffs: Matrix) -> Result<Tensor2> {
        if !coeffs.is_square() {
            return Err(Error::dims(coeffs.rows(), coeffs.cols()));
        }
        Ok(Tensor2 { coeffs })
    }

    pub fn zeros(field: Field, n: usize) -> Tensor2 {
        Tensor2 {
            coeffs: Matrix::zeros(field, n, n),
        }
    }

    /// `e_i ⊗ e_j`.
    pub fn basis(field: Field, n: usize, i: usize, j: usize) -> Tensor2 {
        let mut t = Tensor2::zeros(field, n);
        t.coeffs.set(i, j, field.one());
        t
    }

    pub fn from_ints(field: Field, rows: &[&[i64]]) -> Tensor2 {
        Tensor2 {
            coeffs: Matrix::from_ints(field, rows),
        }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.rows()
    }

    pub fn field(&self) -> Field {
        self.coeffs.field()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.coeffs
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        self.coeffs.get(i, j)
    }

    pub fn set(&mut self, i: usize, j: usize, s: Scalar) {
        self.coeffs.set(i, j, s);
    }

    /// `σ(x⊗y) = y⊗x`.
    pub fn swap(&self) -> Tensor2 {
        Tensor2 {
            coeffs: self.coeffs.transpose(),
        }
    }

    /// `(r − σr)/2`.
    pub fn skew_part(&self) -> Tensor2 {
        let half = self.field().ratio(1, 2).expect("characteristic is not 2");
        Tensor2 {
            coeffs: (&self.coeffs - &self.coeffs.transpose()).scale(&half),
        }
    }

    /// `(r + σr)/2`.
    pub fn sym_part(&self) -> Tensor2 {
        let half = self.field().ratio(1, 2).expect("characteristic is not 2");
        Tensor2 {
            coeffs: (&self.coeffs + &self.coeffs.transpose()).scale(&half),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    pub fn is_symmetric(&self) -> bool {
        self.coeffs.is_symmetric()
    }

    pub fn is_skew(&self) -> bool {
        self.coeffs.is_skew()
    }

    /// Pair covector `ξ` with the given slot; the other slot survives.
    /// `First` gives `Σ r^{ij} ξ_i e_j`, `Second` gives `Σ r^{ij} ξ_j e_i`.
    pub fn contract(&self, xi: &Vector, slot: Slot) -> Result<Vector> {
        if xi.len() != self.dim() {
            return Err(Error::dims(self.dim(), xi.len()));
        }
        match slot {
            Slot::First => Ok(self.coeffs.transpose().apply(xi)),
            Slot::Second => Ok(self.coeffs.apply(xi)),
            Slot::Third => Err(Error::Precondition("a 2-tensor has no third slot".into())),
        }
    }

    /// `(M ⊗ N) r`, i.e. `M [r] Nᵀ`.
    pub fn apply(&self, m: &Matrix, n: &Matrix) -> Tensor2 {
        Tensor2 {
            coeffs: &(m * &self.coeffs) * &n.transpose(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Tensor2 {
        Tensor2 {
            coeffs: self.coeffs.scale(s),
        }
    }

    pub(crate) fn add_scaled(&mut self, s: &Scalar, o: &Tensor2) {
        self.coeffs.add_scaled(s, &o.coeffs);
    }

    pub fn to_field(&self, field: Field) -> Result<Tensor2> {
        let rows = (0..self.dim())
            .map(|i| (0..self.dim()).map(|j| self.get(i, j).to_field(field)).collect())
            .collect::<Result<Vec<Vec<Scalar>>>>()?;
        Tensor2::new(Matrix::from_rows(field, rows)?)
    }

    pub fn support(&self) -> usize {
        self.coeffs.support()
    }
}

impl<'a> Add<&'a Tensor2> for &'a Tensor2 {
    type Output = Tensor2;
    fn add(self, o: &Tensor2) -> Tensor2 {
        Tensor2 {
            coeffs: &self.coeffs + &o.coeffs,
        }
    }
}

impl<'a> Sub<&'a Tensor2> for &'a Tensor2 {
    type Output = Tensor2;
    fn sub(self, o: &Tensor2) -> Tensor2 {
        Tensor2 {
            coeffs: &self.coeffs - &o.coeffs,
        }
    }
}

/// `t = Σ t^{abc} e_a ⊗ e_b ⊗ e_c`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor3 {
    field: Field,
    dim: usize,
    data: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zeros(field: Field, dim: usize) -> Tensor3 {
        Tensor3 {
            field,
            dim,
            data: vec![field.zero(); dim * dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.field
    }

    fn at(&self, a: usize, b: usize, c: usize) -> usize {
        (a * self.dim + b) * self.dim + c
    }

    pub fn get(&self, a: usize, b: usize, c: usize) -> &Scalar {
        &self.data[self.at(a, b, c)]
    }

    pub fn add_at(&mut self, a: usize, b: usize, c: usize, s: &Scalar) {
        if !s.is_zero() {
            let i = self.at(a, b, c);
            self.data[i] += s;
        }
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn into_entries(self) -> Vec<Scalar> {
        self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// Number of nonzero components.
    pub fn support(&self) -> usize {
        self.data.iter().filter(|s| !s.is_zero()).count()
    }

    /// `t ⊗ v`.
    pub fn outer(t: &Tensor2, v: &Vector) -> Tensor3 {
        let n = t.dim();
        let mut out = Tensor3::zeros(t.field(), n);
        for a in 0..n {
            for b in 0..n {
                let x = t.get(a, b);
                if x.is_zero() {
                    continue;
                }
                for c in 0..n {
                    if !v[c].is_zero() {
                        out.add_at(a, b, c, &(x * &v[c]));
                    }
                }
            }
        }
        out
    }

    /// Apply `m` on one slot, identity elsewhere.
    pub fn apply_slot(&self, slot: Slot, m: &Matrix) -> Tensor3 {
        let n = self.dim;
        let mut out = Tensor3::zeros(self.field, n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let x = self.get(a, b, c);
                    if x.is_zero() {
                        continue;
                    }
                    for k in 0..n {
                        let (src, dst) = match slot {
                            Slot::First => (a, (k, b, c)),
                            Slot::Second => (b, (a, k, c)),
                            Slot::Third => (c, (a, b, k)),
                        };
                        let mk = m.get(k, src);
                        if !mk.is_zero() {
                            out.add_at(dst.0, dst.1, dst.2, &(mk * x));
                        }
                    }
                }
            }
        }
        out
    }

    /// `(M1 ⊗ M2 ⊗ M3) t`; `None` is the identity.
    pub fn apply_slotwise(&self, ops: [Option<&Matrix>; 3]) -> Tensor3 {
        let mut t = self.clone();
        for (slot, m) in [Slot::First, Slot::Second, Slot::Third].into_iter().zip(ops) {
            if let Some(m) = m {
                t = t.apply_slot(slot, m);
            }
        }
        t
    }

    /// `σ ⊗ Id`.
    pub fn swap12(&self) -> Tensor3 {
        let n = self.dim;
        let mut out = Tensor3::zeros(self.field, n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    out.data[(b * n + a) * n + c] = self.get(a, b, c).clone();
                }
            }
        }
        out
    }

    /// `t(ξ, ·, η)`: pair the first and third slots.
    pub fn contract_outer(&self, xi: &Vector, eta: &Vector) -> Vector {
        let n = self.dim;
        let mut out = Vector::zeros(self.field, n);
        for a in 0..n {
            if xi[a].is_zero() {
                continue;
            }
            for c in 0..n {
                if eta[c].is_zero() {
                    continue;
                }
                let w = &xi[a] * &eta[c];
                for b in 0..n {
                    let x = self.get(a, b, c);
                    if !x.is_zero() {
                        out[b] += &(&w * x);
                    }
                }
            }
        }
        out
    }
}

impl<'a> Add<&'a Tensor3> for &'a Tensor3 {
    type Output = Tensor3;
    fn add(self, o: &Tensor3) -> Tensor3 {
        assert_eq!(self.dim, o.dim, "tensor add: dimension mismatch");
        Tensor3 {
            field: self.field,
            dim: self.dim,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a Tensor3> for &'a Tensor3 {
    type Output = Tensor3;
    fn sub(self, o: &Tensor3) -> Tensor3 {
        assert_eq!(self.dim, o.dim, "tensor sub: dimension mismatch");
        Tensor3 {
            field: self.field,
            dim: self.dim,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Tensor3 {
    type Output = Tensor3;
    fn neg(self) -> Tensor3 {
        Tensor3 {
            field: self.field,
            dim: self.dim,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}

/// Bilinear form `ω(x, y) = xᵀ W y`, with `W[i][j] = ω(e_i, e_j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BilinearForm {
    matrix: Matrix,
}

impl BilinearForm {
    pub fn new(matrix: Matrix) -> Result<BilinearForm> {
        if !matrix.is_square() {
            return Err(Error::dims(matrix.rows(), matrix.cols()));
        }
        Ok(BilinearForm { matrix })
    }

    /// `ω(x+ξ, y+η) = ξ(y) − η(x)` on `A ⊕ A*` with basis `(e_1..e_n, e_1*..e_n*)`.
    pub fn standard(field: Field, n: usize) -> BilinearForm {
        let mut w = Matrix::zeros(field, 2 * n, 2 * n);
        for i in 0..n {
            w.set(n + i, i, field.one());
            w.set(i, n + i, field.int(-1));
        }
        BilinearForm { matrix: w }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn field(&self) -> Field {
        self.matrix.field()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn eval(&self, x: &Vector, y: &Vector) -> Scalar {
        x.dot(&self.matrix.apply(y))
    }

    pub fn is_skew(&self) -> bool {
        self.matrix.is_skew()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.matrix.is_invertible()
    }

    pub fn to_field(&self, field: Field) -> Result<BilinearForm> {
        let n = self.dim();
        let rows = (0..n)
            .map(|i| (0..n).map(|j| self.matrix.get(i, j).to_field(field)).collect())
            .collect::<Result<Vec<Vec<Scalar>>>>()?;
        BilinearForm::new(Matrix::from_rows(field, rows)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    #[test]
    fn swap_and_parts() {
        let t = Tensor2::basis(Q, 2, 0, 1);
        assert_eq!(t.swap(), Tensor2::basis(Q, 2, 1, 0));
        let half = Q.ratio(1, 2).unwrap();
        let mut expected = Tensor2::zeros(Q, 2);
        expected.set(0, 1, half.clone());
        expected.set(1, 0, -&half);
        assert_eq!(t.skew_part(), expected);
        assert_eq!(&t.skew_part() + &t.sym_part(), t);
    }

    #[test]
    fn slot_operator_on_n2() {
        let l = Matrix::from_ints(Q, &[&[0, 0], &[1, 0]]);
        let t = Tensor2::basis(Q, 2, 0, 0).apply(&l, &Matrix::identity(Q, 2));
        assert_eq!(t, Tensor2::basis(Q, 2, 1, 0));
    }

    #[test]
    fn contractions() {
        let t = Tensor2::from_ints(Q, &[&[0, 1], &[0, 0]]);
        let e1 = Vector::basis(Q, 2, 0);
        let e2 = Vector::basis(Q, 2, 1);
        assert_eq!(t.contract(&e1, Slot::First).unwrap(), e2);
        assert_eq!(t.contract(&e2, Slot::Second).unwrap(), e1);
    }

    #[test]
    fn standard_form_is_skew_and_nondegenerate() {
        let w = BilinearForm::standard(Q, 2);
        assert!(w.is_skew() && w.is_nondegenerate());
        let x = Vector::basis(Q, 4, 0);
        let xi = Vector::basis(Q, 4, 2);
        assert_eq!(w.eval(&xi, &x), Q.one());
        assert_eq!(w.eval(&x, &xi), Q.int(-1));
    }

    #[test]
    fn slot_application_matches_pairwise_rule() {
        let m = Matrix::from_ints(Q, &[&[1, 2], &[3, 4]]);
        let mut t = Tensor3::zeros(Q, 2);
        t.add_at(0, 1, 1, &Q.one());
        let u = t.apply_slot(Slot::Second, &m);
        assert_eq!(u.get(0, 0, 1), &Q.int(2));
        assert_eq!(u.get(0, 1, 1), &Q.int(4));
        assert_eq!(t.swap12().swap12(), t);
    }
}
