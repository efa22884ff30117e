//! Dense exact vectors and matrices. A matrix acting on coordinates has
//! column `j` equal to the image of the `j`-th basis vector.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{signed_coefficient, Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector {
    field: Field,
    data: Vec<Scalar>,
}

impl Vector {
    pub fn zeros(field: Field, n: usize) -> Vector {
        Vector {
            field,
            data: vec![field.zero(); n],
        }
    }

    /// The basis vector `e_{i+1}` (0-based `i`).
    pub fn basis(field: Field, n: usize, i: usize) -> Vector {
        let mut v = Vector::zeros(field, n);
        v.data[i] = field.one();
        v
    }

    pub fn new(field: Field, data: Vec<Scalar>) -> Result<Vector> {
        for s in &data {
            if s.field() != field {
                return Err(Error::FieldMismatch(field.to_string(), s.field().to_string()));
            }
        }
        Ok(Vector { field, data })
    }

    pub fn from_ints(field: Field, data: &[i64]) -> Vector {
        Vector {
            field,
            data: data.iter().map(|&x| field.int(x)).collect(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn as_slice(&self) -> &[Scalar] {
        &self.data
    }

    pub fn into_vec(self) -> Vec<Scalar> {
        self.data
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Scalar> {
        self.data.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, s: &Scalar) -> Vector {
        Vector {
            field: self.field,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn dot(&self, other: &Vector) -> Scalar {
        assert_eq!(self.len(), other.len(), "dot: length mismatch");
        let mut acc = self.field.zero();
        for (a, b) in self.data.iter().zip(&other.data) {
            if !a.is_zero() && !b.is_zero() {
                acc += &(a * b);
            }
        }
        acc
    }

    /// `self ++ other`.
    pub fn concat(&self, other: &Vector) -> Vector {
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Vector { field: self.field, data }
    }

    pub fn split(&self, at: usize) -> (Vector, Vector) {
        let (a, b) = self.data.split_at(at);
        (
            Vector { field: self.field, data: a.to_vec() },
            Vector { field: self.field, data: b.to_vec() },
        )
    }

    /// Number of nonzero coordinates.
    pub fn support(&self) -> usize {
        self.data.iter().filter(|s| !s.is_zero()).count()
    }

    /// Render as a linear combination over basis vectors `<prefix>1..`.
    pub fn combination(&self, prefix: &str) -> String {
        combination(self.data.iter().enumerate(), |i| format!("{prefix}{}", i + 1))
    }
}

pub(crate) fn combination<'a>(
    terms: impl Iterator<Item = (usize, &'a Scalar)>,
    name: impl Fn(usize) -> String,
) -> String {
    let mut out = String::new();
    for (i, c) in terms {
        if c.is_zero() {
            continue;
        }
        let (neg, mag) = signed_coefficient(c);
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if let Some(m) = mag {
            out.push_str(&m);
            out.push('*');
        }
        out.push_str(&name(i));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl std::ops::Index<usize> for Vector {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.data[i]
    }
}

impl std::ops::IndexMut<usize> for Vector {
    fn index_mut(&mut self, i: usize) -> &mut Scalar {
        &mut self.data[i]
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.combination("e"))
    }
}

impl Serialize for Vector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.data.serialize(s)
    }
}

impl<'a> Add<&'a Vector> for &'a Vector {
    type Output = Vector;
    fn add(self, o: &Vector) -> Vector {
        assert_eq!(self.len(), o.len(), "vector add: length mismatch");
        Vector {
            field: self.field,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a Vector> for &'a Vector {
    type Output = Vector;
    fn sub(self, o: &Vector) -> Vector {
        assert_eq!(self.len(), o.len(), "vector sub: length mismatch");
        Vector {
            field: self.field,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector {
            field: self.field,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}

/// Dense matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Linear maps are stored as their matrices in the fixed bases.
pub type LinearMap = Matrix;

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn scalar(field: Field, n: usize, s: &Scalar) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = s.clone();
        }
        m
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { field, rows, cols, data }
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::dims(c, row.len()));
            }
            for s in row {
                if s.field() != field {
                    return Err(Error::FieldMismatch(field.to_string(), s.field().to_string()));
                }
                data.push(s);
            }
        }
        Ok(Matrix { field, rows: r, cols: c, data })
    }

    pub fn from_ints(field: Field, rows: &[&[i64]]) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        Matrix::from_fn(field, r, c, |i, j| field.int(rows[i][j]))
    }

    pub fn from_columns(field: Field, rows: usize, cols: &[Vector]) -> Matrix {
        Matrix::from_fn(field, rows, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, s: Scalar) {
        self.data[r * self.cols + c] = s;
    }

    pub fn entry_mut(&mut self, r: usize, c: usize) -> &mut Scalar {
        &mut self.data[r * self.cols + c]
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, r: usize) -> Vector {
        Vector {
            field: self.field,
            data: self.data[r * self.cols..(r + 1) * self.cols].to_vec(),
        }
    }

    pub fn column(&self, c: usize) -> Vector {
        Vector {
            field: self.field,
            data: (0..self.rows).map(|r| self.get(r, c).clone()).collect(),
        }
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_skew(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..=i).all(|j| (self.get(i, j) + self.get(j, i)).is_zero()))
    }

    pub fn support(&self) -> usize {
        self.data.iter().filter(|s| !s.is_zero()).count()
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub(crate) fn add_scaled(&mut self, s: &Scalar, other: &Matrix) {
        if s.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a += &(s * b);
            }
        }
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix apply: dimension mismatch");
        let mut out = Vector::zeros(self.field, self.rows);
        for c in 0..self.cols {
            let x = &v[c];
            if x.is_zero() {
                continue;
            }
            for r in 0..self.rows {
                let a = self.get(r, c);
                if !a.is_zero() {
                    out.data[r] += &(a * x);
                }
            }
        }
        out
    }

    pub fn checked_apply(&self, v: &Vector) -> Result<Vector> {
        if self.cols != v.len() {
            return Err(Error::dims(self.cols, v.len()));
        }
        Ok(self.apply(v))
    }

    pub fn checked_mul(&self, o: &Matrix) -> Result<Matrix> {
        if self.cols != o.rows {
            return Err(Error::dims(self.cols, o.rows));
        }
        Ok(self * o)
    }

    /// Reduced row echelon form in place; returns pivot columns.
    fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..self.cols {
                    self.data.swap(p * self.cols + c, row * self.cols + c);
                }
            }
            let inv = self.get(row, col).inv().expect("nonzero pivot");
            for c in col..self.cols {
                let v = self.get(row, c) * &inv;
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r == row || self.get(r, col).is_zero() {
                    continue;
                }
                let f = self.get(r, col).clone();
                for c in col..self.cols {
                    if self.get(row, c).is_zero() {
                        continue;
                    }
                    let v = self.get(r, c) - &(&f * self.get(row, c));
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::dims(self.rows, self.cols));
        }
        let n = self.rows;
        let mut aug = self.hstack(&Matrix::identity(self.field, n));
        let pivots = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular(format!("{n}x{n} matrix has rank below {n}")));
        }
        Ok(Matrix::from_fn(self.field, n, n, |r, c| aug.get(r, n + c).clone()))
    }

    /// Some solution of `self * x = b`, if one exists.
    pub fn solve(&self, b: &Vector) -> Option<Vector> {
        assert_eq!(self.rows, b.len(), "solve: dimension mismatch");
        let mut aug = self.hstack(&Matrix::from_columns(self.field, self.rows, std::slice::from_ref(b)));
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = Vector::zeros(self.field, self.cols);
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug.get(r, self.cols).clone();
        }
        Some(x)
    }

    pub fn in_column_space(&self, v: &Vector) -> bool {
        self.solve(v).is_some()
    }

    pub fn hstack(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.rows, o.rows, "hstack: row mismatch");
        Matrix::from_fn(self.field, self.rows, self.cols + o.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                o.get(r, c - self.cols).clone()
            }
        })
    }

    /// Block matrix `[[a, b], [c, d]]`.
    pub fn blocks(a: &Matrix, b: &Matrix, c: &Matrix, d: &Matrix) -> Matrix {
        let (n, m) = (a.rows, a.cols);
        assert!(b.rows == n && c.cols == m && d.rows == c.rows && d.cols == b.cols);
        Matrix::from_fn(a.field, n + c.rows, m + b.cols, |r, col| match (r < n, col < m) {
            (true, true) => a.get(r, col).clone(),
            (true, false) => b.get(r, col - m).clone(),
            (false, true) => c.get(r - n, col).clone(),
            (false, false) => d.get(r - n, col - m).clone(),
        })
    }

    /// Submatrix of rows `r0..r1` and columns `c0..c1`.
    pub fn slice(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Matrix {
        Matrix::from_fn(self.field, r1 - r0, c1 - c0, |r, c| self.get(r0 + r, c0 + c).clone())
    }

    /// Rows separated by `;`, entries by spaces.
    pub fn to_row_text(&self) -> String {
        (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| self.get(r, c).to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join(" ; ")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.to_row_text())
    }
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c).to_string()).collect())
            .collect();
        rows.serialize(s)
    }
}

impl<'a> Mul<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn mul(self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows, "matrix mul: dimension mismatch");
        let mut out = Matrix::zeros(self.field, self.rows, o.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..o.cols {
                    let b = o.get(k, c);
                    if !b.is_zero() {
                        out.data[r * o.cols + c] += &(a * b);
                    }
                }
            }
        }
        out
    }
}

impl<'a> Add<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn add(self, o: &Matrix) -> Matrix {
        assert!(self.rows == o.rows && self.cols == o.cols, "matrix add: shape mismatch");
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn sub(self, o: &Matrix) -> Matrix {
        assert!(self.rows == o.rows && self.cols == o.cols, "matrix sub: shape mismatch");
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_ints(Q, &[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Matrix::identity(Q, 2));
        assert!(Matrix::from_ints(Q, &[&[1, 2], &[2, 4]]).inverse().is_err());
    }

    #[test]
    fn rank_and_membership() {
        let m = Matrix::from_ints(Q, &[&[1, 0], &[0, 0], &[0, 1]]);
        assert_eq!(m.rank(), 2);
        assert!(m.in_column_space(&Vector::from_ints(Q, &[3, 0, -1])));
        assert!(!m.in_column_space(&Vector::from_ints(Q, &[0, 1, 0])));
        let x = m.solve(&Vector::from_ints(Q, &[3, 0, -1])).unwrap();
        assert_eq!(x, Vector::from_ints(Q, &[3, -1]));
    }

    #[test]
    fn transpose_is_an_involution() {
        let m = Matrix::from_ints(Q, &[&[1, 2, 3], &[4, 5, 6]]);
        assert_eq!(m.transpose().transpose(), m);
        assert_eq!(m.transpose().rows(), 3);
    }

    #[test]
    fn apply_uses_columns_as_images() {
        let m = Matrix::from_ints(Q, &[&[0, 0], &[1, 0]]);
        assert_eq!(m.apply(&Vector::basis(Q, 2, 0)), Vector::basis(Q, 2, 1));
    }

    #[test]
    fn combination_text() {
        let v = Vector::from_ints(Q, &[1, -2, 0]);
        assert_eq!(v.to_string(), "e1 - 2*e2");
        assert_eq!(Vector::zeros(Q, 2).to_string(), "0");
    }

    #[test]
    fn prime_field_inverse() {
        let f = Field::Prime(7);
        let m = Matrix::from_ints(f, &[&[3, 1], &[2, 5]]);
        assert_eq!(&m * &m.inverse().unwrap(), Matrix::identity(f, 2));
    }
}
