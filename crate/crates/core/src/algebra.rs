//! Structure-constant algebras and their elementary identity checks.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::report::{Identity, Report, Shape, Suite};
use crate::scalar::{Field, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Flavor {
    Zinbiel,
    CommAssoc,
    Unchecked,
}

impl Flavor {
    pub fn token(&self) -> &'static str {
        match self {
            Flavor::Zinbiel => "zinbiel",
            Flavor::CommAssoc => "comm",
            Flavor::Unchecked => "unchecked",
        }
    }

    pub fn from_token(s: &str) -> Option<Flavor> {
        match s {
            "zinbiel" => Some(Flavor::Zinbiel),
            "comm" => Some(Flavor::CommAssoc),
            "unchecked" => Some(Flavor::Unchecked),
            _ => None,
        }
    }
}

/// Finite-dimensional algebra given by `e_i ∘ e_j = Σ_k c[i][j][k] e_k`.
/// Indices are 0-based in memory and 1-based in files and reports.
///
/// Equality compares field, dimension and structure constants only.
#[derive(Clone, Debug)]
pub struct Algebra {
    name: String,
    dim: usize,
    field: Field,
    flavor: Flavor,
    table: BTreeMap<(usize, usize), Vec<(usize, Scalar)>>,
    dense: Vec<Scalar>,
}

impl PartialEq for Algebra {
    fn eq(&self, o: &Algebra) -> bool {
        self.dim == o.dim && self.field == o.field && self.table == o.table
    }
}

impl Eq for Algebra {}

impl Algebra {
    /// Build an unchecked algebra from `(i, j, k, c)` entries; repeated
    /// `(i, j, k)` entries are summed.
    pub fn from_constants(
        name: impl Into<String>,
        field: Field,
        dim: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    ) -> Result<Algebra> {
        if let Field::Prime(p) = field {
            Field::prime(p)?;
        }
        if dim == 0 {
            return Err(Error::Precondition("algebra dimension must be positive".into()));
        }
        let mut dense = vec![field.zero(); dim * dim * dim];
        for (i, j, k, c) in entries {
            for idx in [i, j, k] {
                if idx >= dim {
                    return Err(Error::IndexOutOfRange { index: idx + 1, dim });
                }
            }
            if c.field() != field {
                return Err(Error::FieldMismatch(field.to_string(), c.field().to_string()));
            }
            dense[(i * dim + j) * dim + k] += &c;
        }
        Ok(Algebra::from_dense_vec(name.into(), field, dim, dense))
    }

    pub fn from_fn(
        name: impl Into<String>,
        field: Field,
        dim: usize,
        f: impl Fn(usize, usize, usize) -> Scalar,
    ) -> Algebra {
        let mut dense = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    dense.push(f(i, j, k));
                }
            }
        }
        Algebra::from_dense_vec(name.into(), field, dim, dense)
    }

    fn from_dense_vec(name: String, field: Field, dim: usize, dense: Vec<Scalar>) -> Algebra {
        let mut table = BTreeMap::new();
        for i in 0..dim {
            for j in 0..dim {
                let row: Vec<(usize, Scalar)> = (0..dim)
                    .filter_map(|k| {
                        let c = &dense[(i * dim + j) * dim + k];
                        (!c.is_zero()).then(|| (k, c.clone()))
                    })
                    .collect();
                if !row.is_empty() {
                    table.insert((i, j), row);
                }
            }
        }
        Algebra {
            name,
            dim,
            field,
            flavor: Flavor::Unchecked,
            table,
            dense,
        }
    }

    /// Build and validate a Zinbiel algebra.
    pub fn zinbiel(
        name: impl Into<String>,
        field: Field,
        dim: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    ) -> Result<Algebra> {
        Algebra::from_constants(name, field, dim, entries)?.with_flavor(Flavor::Zinbiel)
    }

    /// The zero product on `dim` dimensions.
    pub fn zero(name: impl Into<String>, field: Field, dim: usize) -> Algebra {
        let mut a = Algebra::from_dense_vec(name.into(), field, dim, vec![field.zero(); dim * dim * dim]);
        a.flavor = Flavor::Zinbiel;
        a
    }

    /// Re-tag after verifying the identities the flavor promises.
    pub fn with_flavor(mut self, flavor: Flavor) -> Result<Algebra> {
        let report = match flavor {
            Flavor::Zinbiel => self.check_zinbiel(),
            Flavor::CommAssoc => self.check_comm_assoc(),
            Flavor::Unchecked => Report::new("unchecked"),
        };
        if !report.passed {
            return Err(Error::invalid(format!("algebra `{}` as {}", self.name, flavor.token()), report));
        }
        self.flavor = flavor;
        Ok(self)
    }

    /// Tag without verifying; used for declared flavors read from files.
    pub(crate) fn declared(mut self, flavor: Flavor) -> Algebra {
        self.flavor = flavor;
        self
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Algebra {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.dense[(i * self.dim + j) * self.dim + k]
    }

    /// Nonzero `(k, c)` with `e_i ∘ e_j = Σ c e_k`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        self.table.get(&(i, j)).map_or(&[], Vec::as_slice)
    }

    /// All nonzero constants `(i, j, k, c)` in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        self.table
            .iter()
            .flat_map(|(&(i, j), row)| row.iter().map(move |(k, c)| (i, j, *k, c)))
    }

    pub fn is_trivial(&self) -> bool {
        self.table.is_empty()
    }

    pub fn basis(&self, i: usize) -> Vector {
        Vector::basis(self.field, self.dim, i)
    }

    fn check_len(&self, v: &Vector) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::dims(self.dim, v.len()));
        }
        Ok(())
    }

    /// `x ∘ y`.
    pub fn product(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(self.mul(x, y))
    }

    pub(crate) fn mul(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = Vector::zeros(self.field, self.dim);
        for (&(i, j), row) in &self.table {
            let (a, b) = (&x[i], &y[j]);
            if a.is_zero() || b.is_zero() {
                continue;
            }
            let ab = a * b;
            for (k, c) in row {
                out[*k] += &(&ab * c);
            }
        }
        out
    }

    /// `x ∗ y = x∘y + y∘x`.
    pub(crate) fn star(&self, x: &Vector, y: &Vector) -> Vector {
        &self.mul(x, y) + &self.mul(y, x)
    }

    /// `e_i ∘ v`.
    pub(crate) fn mul_basis_left(&self, i: usize, v: &Vector) -> Vector {
        let mut out = Vector::zeros(self.field, self.dim);
        for j in 0..self.dim {
            if v[j].is_zero() {
                continue;
            }
            for (k, c) in self.basis_product(i, j) {
                out[*k] += &(&v[j] * c);
            }
        }
        out
    }

    /// `v ∘ e_j`.
    pub(crate) fn mul_basis_right(&self, v: &Vector, j: usize) -> Vector {
        let mut out = Vector::zeros(self.field, self.dim);
        for i in 0..self.dim {
            if v[i].is_zero() {
                continue;
            }
            for (k, c) in self.basis_product(i, j) {
                out[*k] += &(&v[i] * c);
            }
        }
        out
    }

    pub(crate) fn basis_mul(&self, i: usize, j: usize) -> Vector {
        let mut out = Vector::zeros(self.field, self.dim);
        for (k, c) in self.basis_product(i, j) {
            out[*k] = c.clone();
        }
        out
    }

    /// Left multiplication `L_x`.
    pub fn left(&self, x: &Vector) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zeros(self.field, n, n);
        for (&(i, j), row) in &self.table {
            if x[i].is_zero() {
                continue;
            }
            for (k, c) in row {
                *m.entry_mut(*k, j) += &(&x[i] * c);
            }
        }
        m
    }

    /// Right multiplication `R_x`.
    pub fn right(&self, x: &Vector) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zeros(self.field, n, n);
        for (&(j, i), row) in &self.table {
            if x[i].is_zero() {
                continue;
            }
            for (k, c) in row {
                *m.entry_mut(*k, j) += &(&x[i] * c);
            }
        }
        m
    }

    pub fn left_basis(&self, i: usize) -> Matrix {
        self.left(&self.basis(i))
    }

    pub fn right_basis(&self, i: usize) -> Matrix {
        self.right(&self.basis(i))
    }

    /// `(L_x, R_x)`.
    pub fn mult_operators(&self, x: &Vector) -> Result<(Matrix, Matrix)> {
        self.check_len(x)?;
        Ok((self.left(x), self.right(x)))
    }

    /// The symmetrized product `c_ij^k + c_ji^k`, without checks.
    pub fn symmetrized(&self) -> Algebra {
        let n = self.dim;
        let mut a = Algebra::from_fn(format!("{}^c", self.name), self.field, n, |i, j, k| {
            self.constant(i, j, k) + self.constant(j, i, k)
        });
        if self.flavor == Flavor::Zinbiel {
            a.flavor = Flavor::CommAssoc;
        }
        a
    }

    /// Sub-adjacent commutative associative algebra; the input must be Zinbiel.
    pub fn sub_adjacent(&self) -> Result<Algebra> {
        let report = self.check_zinbiel();
        if !report.passed {
            return Err(Error::invalid(format!("algebra `{}`", self.name), report));
        }
        let mut a = self.symmetrized();
        a.flavor = Flavor::CommAssoc;
        Ok(a)
    }

    fn triple_args(&self) -> [(&'static str, usize); 3] {
        [("e", self.dim), ("e", self.dim), ("e", self.dim)]
    }

    /// `x∘(y∘z) = (x∘y + y∘x)∘z` on basis triples.
    pub fn zinbiel_suite(&self) -> Suite<'_> {
        Suite::new(format!("zinbiel identity on `{}`", self.name)).with(Identity::new(
            "zinbiel",
            &self.triple_args(),
            Shape::vector("e"),
            move |t| {
                let lhs = self.mul_basis_left(t[0], &self.basis_mul(t[1], t[2]));
                let s = &self.basis_mul(t[0], t[1]) + &self.basis_mul(t[1], t[0]);
                let rhs = self.mul_basis_right(&s, t[2]);
                (lhs.into_vec(), rhs.into_vec())
            },
        ))
    }

    pub fn check_zinbiel(&self) -> Report {
        self.zinbiel_suite().run()
    }

    /// `x∘(y∘z) = y∘(x∘z)` on basis triples.
    pub fn left_commutativity_suite(&self) -> Suite<'_> {
        Suite::new(format!("left commutativity on `{}`", self.name)).with(Identity::new(
            "left-commutativity",
            &self.triple_args(),
            Shape::vector("e"),
            move |t| {
                let lhs = self.mul_basis_left(t[0], &self.basis_mul(t[1], t[2]));
                let rhs = self.mul_basis_left(t[1], &self.basis_mul(t[0], t[2]));
                (lhs.into_vec(), rhs.into_vec())
            },
        ))
    }

    pub fn check_left_commutativity(&self) -> Report {
        self.left_commutativity_suite().run()
    }

    /// Commutativity and associativity on basis tuples.
    pub fn comm_assoc_suite(&self) -> Suite<'_> {
        let n = self.dim;
        Suite::new(format!("commutative associative identities on `{}`", self.name))
            .with(Identity::new(
                "commutativity",
                &[("e", n), ("e", n)],
                Shape::vector("e"),
                move |t| (self.basis_mul(t[0], t[1]).into_vec(), self.basis_mul(t[1], t[0]).into_vec()),
            ))
            .with(Identity::new(
                "associativity",
                &self.triple_args(),
                Shape::vector("e"),
                move |t| {
                    let lhs = self.mul_basis_right(&self.basis_mul(t[0], t[1]), t[2]);
                    let rhs = self.mul_basis_left(t[0], &self.basis_mul(t[1], t[2]));
                    (lhs.into_vec(), rhs.into_vec())
                },
            ))
    }

    pub fn check_comm_assoc(&self) -> Report {
        self.comm_assoc_suite().run()
    }

    /// Structure carried over by an isomorphism: `u∘v = φ(φ⁻¹u ∘ φ⁻¹v)`.
    pub fn transport(&self, phi: &Matrix) -> Result<Algebra> {
        if phi.rows() != self.dim || phi.cols() != self.dim {
            return Err(Error::dims(self.dim, phi.rows().max(phi.cols())));
        }
        let psi = phi.inverse()?;
        let cols: Vec<Vector> = (0..self.dim).map(|i| psi.column(i)).collect();
        let mut entries = Vec::new();
        for a in 0..self.dim {
            for b in 0..self.dim {
                let img = phi.apply(&self.mul(&cols[a], &cols[b]));
                for k in 0..self.dim {
                    if !img[k].is_zero() {
                        entries.push((a, b, k, img[k].clone()));
                    }
                }
            }
        }
        let t = Algebra::from_constants(format!("{}'", self.name), self.field, self.dim, entries)?;
        Ok(Algebra { flavor: self.flavor, ..t })
    }

    /// Reduce constants into another field (rationals modulo p).
    pub fn to_field(&self, field: Field) -> Result<Algebra> {
        let entries = self
            .entries()
            .map(|(i, j, k, c)| Ok((i, j, k, c.to_field(field)?)))
            .collect::<Result<Vec<_>>>()?;
        let a = Algebra::from_constants(self.name.clone(), field, self.dim, entries)?;
        a.with_flavor(self.flavor)
    }

    /// Direct sum `A ⊕ B` with componentwise product.
    pub fn direct_sum(&self, other: &Algebra) -> Result<Algebra> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.to_string(), other.field.to_string()));
        }
        let n = self.dim;
        let entries = self
            .entries()
            .map(|(i, j, k, c)| (i, j, k, c.clone()))
            .chain(other.entries().map(|(i, j, k, c)| (i + n, j + n, k + n, c.clone())))
            .collect::<Vec<_>>();
        let a = Algebra::from_constants(format!("{}+{}", self.name, other.name), self.field, n + other.dim, entries)?;
        if self.flavor == other.flavor {
            return Ok(Algebra { flavor: self.flavor, ..a });
        }
        Ok(a)
    }

    /// Whether the column span of `basis` is closed under the product.
    pub fn is_closed(&self, basis: &Matrix) -> bool {
        let cols: Vec<Vector> = (0..basis.cols()).map(|c| basis.column(c)).collect();
        cols.iter()
            .all(|u| cols.iter().all(|v| basis.in_column_space(&self.mul(u, v))))
    }

    /// Restriction to a closed subspace, in the coordinates of its basis columns.
    pub fn restrict(&self, basis: &Matrix, name: &str) -> Result<Algebra> {
        let m = basis.cols();
        let cols: Vec<Vector> = (0..m).map(|c| basis.column(c)).collect();
        let mut entries = Vec::new();
        for a in 0..m {
            for b in 0..m {
                let p = self.mul(&cols[a], &cols[b]);
                let coords = basis
                    .solve(&p)
                    .ok_or_else(|| Error::Precondition(format!("subspace `{name}` is not closed under the product")))?;
                for k in 0..m {
                    if !coords[k].is_zero() {
                        entries.push((a, b, k, coords[k].clone()));
                    }
                }
            }
        }
        Algebra::from_constants(name, self.field, m, entries)
    }

    /// Number of structure constants where two algebras differ.
    pub fn difference_support(&self, other: &Algebra) -> usize {
        if self.dim != other.dim || self.field != other.field {
            return usize::MAX;
        }
        self.dense.iter().zip(&other.dense).filter(|(a, b)| a != b).count()
    }
}

/// `φ(x∘y) = φ(x)∘φ(y)` for a linear map `φ: A → B` given as a matrix.
pub fn homomorphism_suite<'a>(source: &'a Algebra, target: &'a Algebra, phi: &'a Matrix) -> Suite<'a> {
    let n = source.dim();
    let cols: Vec<Vector> = (0..n).map(|i| phi.column(i)).collect();
    Suite::new(format!("homomorphism `{}` -> `{}`", source.name(), target.name())).with(Identity::new(
        "homomorphism",
        &[("e", n), ("e", n)],
        Shape::vector("e"),
        move |t| {
            let lhs = phi.apply(&source.basis_mul(t[0], t[1]));
            let rhs = target.mul(&cols[t[0]], &cols[t[1]]);
            (lhs.into_vec(), rhs.into_vec())
        },
    ))
}

pub fn check_homomorphism(source: &Algebra, target: &Algebra, phi: &Matrix) -> Result<Report> {
    if phi.cols() != source.dim() || phi.rows() != target.dim() {
        return Err(Error::dims(source.dim(), phi.cols()));
    }
    Ok(homomorphism_suite(source, target, phi).run())
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::format::write_algebra(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn n2() -> Algebra {
        Algebra::zinbiel("N2", Q, 2, [(0, 0, 1, Q.one())]).unwrap()
    }

    #[test]
    fn n2_products() {
        let a = n2();
        let e1 = a.basis(0);
        let e2 = a.basis(1);
        assert_eq!(a.product(&e1, &e1).unwrap(), e2);
        assert_eq!(a.product(&(&e1 + &e2), &e1).unwrap(), e2);
        assert!(a.product(&e1, &Vector::zeros(Q, 3)).is_err());
    }

    #[test]
    fn idempotent_line_fails_zinbiel_at_eee() {
        let a = Algebra::from_constants("E", Q, 1, [(0, 0, 0, Q.one())]).unwrap();
        let r = a.check_zinbiel();
        assert!(!r.passed);
        let w = r.first_failure().unwrap().witness.clone().unwrap();
        assert_eq!(w.at, vec!["e1", "e1", "e1"]);
        assert_eq!(w.lhs, vec![Q.int(1)]);
        assert_eq!(w.rhs, vec![Q.int(2)]);
        assert!(a.with_flavor(Flavor::Zinbiel).is_err());
    }

    #[test]
    fn multiplication_operators_of_n2() {
        let a = n2();
        let (l, r) = a.mult_operators(&a.basis(0)).unwrap();
        let expected = Matrix::from_ints(Q, &[&[0, 0], &[1, 0]]);
        assert_eq!(l, expected);
        assert_eq!(r, expected);
        let (l2, r2) = a.mult_operators(&a.basis(1)).unwrap();
        assert!(l2.is_zero() && r2.is_zero());
    }

    #[test]
    fn sub_adjacent_of_n2_doubles_the_square() {
        let c = n2().sub_adjacent().unwrap();
        assert_eq!(c.constant(0, 0, 1), &Q.int(2));
        assert_eq!(c.entries().count(), 1);
        assert!(c.check_comm_assoc().passed);
        assert_eq!(c.flavor(), Flavor::CommAssoc);
    }

    #[test]
    fn sub_adjacent_rejects_non_zinbiel() {
        let a = Algebra::from_constants("E", Q, 1, [(0, 0, 0, Q.one())]).unwrap();
        assert!(a.sub_adjacent().is_err());
    }

    #[test]
    fn left_commutative_but_not_zinbiel() {
        // e1∘e2 = e1: every x∘(y∘z) vanishes, but (e1∗e2)∘e2 = e1.
        let a = Algebra::from_constants("T", Q, 2, [(0, 1, 0, Q.one())]).unwrap();
        assert!(a.check_left_commutativity().passed);
        let r = a.check_zinbiel();
        assert_eq!(r.first_failure().unwrap().witness.as_ref().unwrap().at, vec!["e1", "e2", "e2"]);
    }

    #[test]
    fn transport_by_permutation() {
        let a = n2();
        let swap = Matrix::from_ints(Q, &[&[0, 1], &[1, 0]]);
        let b = a.transport(&swap).unwrap();
        assert_eq!(b.constant(1, 1, 0), &Q.one());
        assert!(check_homomorphism(&a, &b, &swap).unwrap().passed);
        assert!(!check_homomorphism(&a, &a, &swap).unwrap().passed);
    }

    #[test]
    fn restriction_to_subalgebra() {
        let a = n2();
        let span_e2 = Matrix::from_ints(Q, &[&[0], &[1]]);
        assert!(a.is_closed(&span_e2));
        let span_e1 = Matrix::from_ints(Q, &[&[1], &[0]]);
        assert!(!a.is_closed(&span_e1));
        assert!(a.restrict(&span_e1, "x").is_err());
    }
}
