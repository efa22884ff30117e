//! Representations `(V; ρ, μ)` of Zinbiel algebras and `(V; ζ)` of
//! commutative associative algebras.

use crate::algebra::{Algebra, Flavor};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::report::{Identity, Report, Shape, Suite};

/// Which operator family of a representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Rho,
    Mu,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    base: Algebra,
    space_dim: usize,
    rho: Vec<Matrix>,
    mu: Vec<Matrix>,
}

pub(crate) fn check_family(base: &Algebra, m: usize, ops: &[Matrix]) -> Result<()> {
    if ops.len() != base.dim() {
        return Err(Error::dims(base.dim(), ops.len()));
    }
    for op in ops {
        if op.rows() != m || op.cols() != m {
            return Err(Error::dims(m, op.rows().max(op.cols())));
        }
        if op.field() != base.field() {
            return Err(Error::FieldMismatch(base.field().to_string(), op.field().to_string()));
        }
    }
    Ok(())
}

/// `Σ x_i ops[i]`.
pub(crate) fn combine(ops: &[Matrix], x: &Vector, m: usize) -> Matrix {
    let mut out = Matrix::zeros(x.field(), m, m);
    for (i, op) in ops.iter().enumerate() {
        out.add_scaled(&x[i], op);
    }
    out
}

impl Representation {
    /// Operators are images of basis vectors: `rho[i] = ρ(e_i)`.
    pub fn new(base: Algebra, space_dim: usize, rho: Vec<Matrix>, mu: Vec<Matrix>) -> Result<Representation> {
        check_family(&base, space_dim, &rho)?;
        check_family(&base, space_dim, &mu)?;
        Ok(Representation {
            base,
            space_dim,
            rho,
            mu,
        })
    }

    /// `(A; L, R)`.
    pub fn regular(base: &Algebra) -> Representation {
        let n = base.dim();
        Representation {
            base: base.clone(),
            space_dim: n,
            rho: (0..n).map(|i| base.left_basis(i)).collect(),
            mu: (0..n).map(|i| base.right_basis(i)).collect(),
        }
    }

    /// `(A*; −L*−R*, R*)` with `L*_x = −L_xᵀ`, i.e. `((L+R)ᵀ, −Rᵀ)`.
    pub fn coregular(base: &Algebra) -> Representation {
        let n = base.dim();
        Representation {
            base: base.clone(),
            space_dim: n,
            rho: (0..n)
                .map(|i| (&base.left_basis(i) + &base.right_basis(i)).transpose())
                .collect(),
            mu: (0..n).map(|i| -&base.right_basis(i).transpose()).collect(),
        }
    }

    /// Zero operators on an `m`-dimensional space.
    pub fn trivial(base: &Algebra, m: usize) -> Representation {
        let z = Matrix::zeros(base.field(), m, m);
        Representation {
            base: base.clone(),
            space_dim: m,
            rho: vec![z.clone(); base.dim()],
            mu: vec![z; base.dim()],
        }
    }

    pub fn base(&self) -> &Algebra {
        &self.base
    }

    pub fn space_dim(&self) -> usize {
        self.space_dim
    }

    pub fn rho(&self) -> &[Matrix] {
        &self.rho
    }

    pub fn mu(&self) -> &[Matrix] {
        &self.mu
    }

    pub fn rho_of(&self, x: &Vector) -> Matrix {
        combine(&self.rho, x, self.space_dim)
    }

    pub fn mu_of(&self, x: &Vector) -> Matrix {
        combine(&self.mu, x, self.space_dim)
    }

    /// Representation axioms on basis pairs:
    /// `ρ(x)ρ(y) = ρ(x∘y) + ρ(y∘x)`, `ρ(x)μ(y) = μ(x∘y)`,
    /// `μ(x∘y) = μ(y)ρ(x) + μ(y)μ(x)`.
    pub fn suite(&self) -> Suite<'_> {
        let n = self.base.dim();
        let m = self.space_dim;
        let a = &self.base;
        let shape = Shape::Matrix { rows: m, cols: m };
        Suite::new(format!("representation of `{}` on dim {}", a.name(), m))
            .with(Identity::new("rep1", &[("e", n), ("e", n)], shape.clone(), move |t| {
                let lhs = &self.rho[t[0]] * &self.rho[t[1]];
                let s = &a.basis_mul(t[0], t[1]) + &a.basis_mul(t[1], t[0]);
                let rhs = self.rho_of(&s);
                (lhs.entries().to_vec(), rhs.entries().to_vec())
            }))
            .with(Identity::new("rep2-left", &[("e", n), ("e", n)], shape.clone(), move |t| {
                let lhs = &self.rho[t[0]] * &self.mu[t[1]];
                let rhs = self.mu_of(&a.basis_mul(t[0], t[1]));
                (lhs.entries().to_vec(), rhs.entries().to_vec())
            }))
            .with(Identity::new("rep2-right", &[("e", n), ("e", n)], shape, move |t| {
                let lhs = self.mu_of(&a.basis_mul(t[0], t[1]));
                let rhs = &self.mu[t[1]] * &(&self.rho[t[0]] + &self.mu[t[0]]);
                (lhs.entries().to_vec(), rhs.entries().to_vec())
            }))
    }

    pub fn check(&self) -> Report {
        self.suite().run()
    }

    /// `(V*; −ρ*−μ*, μ*)`, i.e. `((ρ+μ)ᵀ, −μᵀ)`. The input must be valid.
    pub fn dual(&self) -> Result<Representation> {
        let report = self.check();
        if !report.passed {
            return Err(Error::invalid("representation", report));
        }
        Ok(self.dual_unchecked())
    }

    pub(crate) fn dual_unchecked(&self) -> Representation {
        Representation {
            base: self.base.clone(),
            space_dim: self.space_dim,
            rho: self
                .rho
                .iter()
                .zip(&self.mu)
                .map(|(r, m)| (r + m).transpose())
                .collect(),
            mu: self.mu.iter().map(|m| -&m.transpose()).collect(),
        }
    }

    /// `A ⋉ V` on `A ⊕ V`: `(x+u)∘(y+v) = x∘y + ρ(x)v + μ(y)u`.
    pub fn semidirect_product(&self) -> Algebra {
        let n = self.base.dim();
        let m = self.space_dim;
        let mut entries: Vec<_> = self.base.entries().map(|(i, j, k, c)| (i, j, k, c.clone())).collect();
        for i in 0..n {
            for a in 0..m {
                for b in 0..m {
                    let r = self.rho[i].get(b, a);
                    if !r.is_zero() {
                        entries.push((i, n + a, n + b, r.clone()));
                    }
                    let u = self.mu[i].get(b, a);
                    if !u.is_zero() {
                        entries.push((n + a, i, n + b, u.clone()));
                    }
                }
            }
        }
        Algebra::from_constants(format!("{}⋉V", self.base.name()), self.base.field(), n + m, entries)
            .expect("indices in range")
    }

    /// Copy with one operator entry increased by one.
    pub fn bumped(&self, family: Family, i: usize, row: usize, col: usize) -> Representation {
        let mut out = self.clone();
        let ops = match family {
            Family::Rho => &mut out.rho,
            Family::Mu => &mut out.mu,
        };
        let one = self.base.field().one();
        *ops[i].entry_mut(row, col) += &one;
        out
    }

    /// The induced `ζ = ρ + μ` of the sub-adjacent algebra.
    pub fn sub_adjacent(&self) -> Result<CommRepresentation> {
        CommRepresentation::new(
            self.base.sub_adjacent()?,
            self.space_dim,
            self.rho.iter().zip(&self.mu).map(|(r, m)| r + m).collect(),
        )
    }
}

/// Representation `ζ` of a commutative associative algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommRepresentation {
    base: Algebra,
    space_dim: usize,
    zeta: Vec<Matrix>,
}

impl CommRepresentation {
    pub fn new(base: Algebra, space_dim: usize, zeta: Vec<Matrix>) -> Result<CommRepresentation> {
        check_family(&base, space_dim, &zeta)?;
        Ok(CommRepresentation { base, space_dim, zeta })
    }

    pub fn zero(base: &Algebra, m: usize) -> CommRepresentation {
        CommRepresentation {
            base: base.clone(),
            space_dim: m,
            zeta: vec![Matrix::zeros(base.field(), m, m); base.dim()],
        }
    }

    /// `ζ = L` on the algebra itself.
    pub fn regular(base: &Algebra) -> CommRepresentation {
        CommRepresentation {
            base: base.clone(),
            space_dim: base.dim(),
            zeta: (0..base.dim()).map(|i| base.left_basis(i)).collect(),
        }
    }

    pub fn base(&self) -> &Algebra {
        &self.base
    }

    pub fn zeta(&self) -> &[Matrix] {
        &self.zeta
    }

    pub fn zeta_of(&self, x: &Vector) -> Matrix {
        combine(&self.zeta, x, self.space_dim)
    }

    /// `ζ(x∗y) = ζ(x)ζ(y)` on basis pairs; `∗` is the base product.
    pub fn suite(&self) -> Suite<'_> {
        let n = self.base.dim();
        let m = self.space_dim;
        Suite::new(format!("commutative representation of `{}`", self.base.name())).with(Identity::new(
            "comm-rep",
            &[("e", n), ("e", n)],
            Shape::Matrix { rows: m, cols: m },
            move |t| {
                let lhs = self.zeta_of(&self.base.basis_mul(t[0], t[1]));
                let rhs = &self.zeta[t[0]] * &self.zeta[t[1]];
                (lhs.entries().to_vec(), rhs.entries().to_vec())
            },
        ))
    }

    pub fn check(&self) -> Report {
        let mut report = Report::new(format!("commutative representation of `{}`", self.base.name()));
        if self.base.flavor() != Flavor::CommAssoc {
            report.absorb("base", self.base.check_comm_assoc());
        }
        report.absorb("", self.suite().run());
        report
    }

    pub fn bumped(&self, i: usize, row: usize, col: usize) -> CommRepresentation {
        let mut out = self.clone();
        let one = self.base.field().one();
        *out.zeta[i].entry_mut(row, col) += &one;
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    const Q: Field = Field::Rational;

    fn n2() -> Algebra {
        Algebra::zinbiel("N2", Q, 2, [(0, 0, 1, Q.one())]).unwrap()
    }

    #[test]
    fn regular_and_coregular_of_n2() {
        let a = n2();
        assert!(Representation::regular(&a).check().passed);
        let co = Representation::coregular(&a);
        assert!(co.check().passed);
        assert_eq!(Representation::regular(&a).dual().unwrap(), co);
        assert!(co.dual().unwrap().check().passed);
    }

    #[test]
    fn zero_algebra_regular() {
        let z = Algebra::zero("Z0", Q, 2);
        let r = Representation::regular(&z);
        assert!(r.check().passed);
        assert!(r.dual().unwrap().rho().iter().all(Matrix::is_zero));
    }

    #[test]
    fn mutation_breaks_axioms_and_semidirect() {
        let a = n2();
        let bad = Representation::regular(&a).bumped(Family::Mu, 0, 0, 0);
        assert!(!bad.check().passed);
        assert!(!bad.semidirect_product().check_zinbiel().passed);
    }

    #[test]
    fn semidirect_of_trivial() {
        let z1 = Algebra::zero("Z0", Q, 1);
        let s = Representation::trivial(&z1, 1).semidirect_product();
        assert_eq!(s, Algebra::zero("Z0(2)", Q, 2));
        let co = Representation::coregular(&n2()).semidirect_product();
        assert_eq!(co.dim(), 4);
        assert!(co.check_zinbiel().passed);
    }

    #[test]
    fn left_multiplication_of_sub_adjacent() {
        let c = n2().sub_adjacent().unwrap();
        assert!(CommRepresentation::regular(&c).check().passed);
        assert!(CommRepresentation::zero(&c, 3).check().passed);
        assert!(!CommRepresentation::regular(&c).bumped(0, 0, 0).check().passed);
    }
}
