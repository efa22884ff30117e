//! Rota-Baxter operators, Connes cocycles, quadratic Rota-Baxter Zinbiel
//! algebras and their correspondence with factorizable r-matrices.

use crate::algebra::{homomorphism_suite, Algebra, Flavor};
use crate::bialgebra::QuadraticAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::report::{Clause, Identity, Report, Shape, Suite};
use crate::scalar::Scalar;
use crate::tensor::{BilinearForm, Tensor2};
use crate::yang_baxter::RMatrix;

/// `P(x)·P(y) = P(P(x)·y + x·P(y) + λ x·y)` where `·` is the product of the
/// base algebra (so `∗` for a commutative base).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RBOperator {
    base: Algebra,
    p: Matrix,
    weight: Scalar,
}

impl RBOperator {
    pub fn new(base: Algebra, p: Matrix, weight: Scalar) -> Result<RBOperator> {
        let n = base.dim();
        if p.rows() != n || p.cols() != n {
            return Err(Error::dims(n, p.rows().max(p.cols())));
        }
        if p.field() != base.field() || weight.field() != base.field() {
            return Err(Error::FieldMismatch(base.field().to_string(), p.field().to_string()));
        }
        Ok(RBOperator { base, p, weight })
    }

    pub fn base(&self) -> &Algebra {
        &self.base
    }

    pub fn operator(&self) -> &Matrix {
        &self.p
    }

    pub fn weight(&self) -> &Scalar {
        &self.weight
    }

    pub fn suite(&self) -> Suite<'_> {
        let a = &self.base;
        let n = a.dim();
        let p = &self.p;
        Suite::new(format!("Rota-Baxter operator on `{}`", a.name())).with(Identity::new(
            "rota-baxter",
            &[("e", n), ("e", n)],
            Shape::vector("e"),
            move |t| {
                let (px, py) = (p.column(t[0]), p.column(t[1]));
                let lhs = a.mul(&px, &py);
                let inner = &(&a.mul_basis_right(&px, t[1]) + &a.mul_basis_left(t[0], &py))
                    + &a.basis_mul(t[0], t[1]).scale(&self.weight);
                (lhs.into_vec(), p.apply(&inner).into_vec())
            },
        ))
    }

    pub fn check(&self) -> Report {
        self.suite().run()
    }

    /// `x·_P y = P(x)∘y + x∘P(y) + λ x∘y`.
    pub fn descendent(&self) -> Algebra {
        let a = &self.base;
        let n = a.dim();
        let rows: Vec<Vec<Vector>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        &(&a.mul_basis_right(&self.p.column(i), j) + &a.mul_basis_left(i, &self.p.column(j)))
                            + &a.basis_mul(i, j).scale(&self.weight)
                    })
                    .collect()
            })
            .collect();
        Algebra::from_fn(format!("{}_P", a.name()), a.field(), n, |i, j, k| rows[i][j][k].clone())
    }

    /// `P` as an algebra map from the descendent algebra to the base.
    pub fn descendent_report(&self) -> Report {
        let d = self.descendent();
        let mut report = Report::new(format!("descendent of `{}`", self.base.name()));
        report.absorb("descendent", d.check_zinbiel());
        report.absorb("", homomorphism_suite(&d, &self.base, &self.p).run());
        report
    }

    /// `P̃ = −λId − P`.
    pub fn companion(&self) -> RBOperator {
        let f = self.base.field();
        let n = self.base.dim();
        let p = &Matrix::scalar(f, n, &-&self.weight) - &self.p;
        RBOperator {
            base: self.base.clone(),
            p,
            weight: self.weight.clone(),
        }
    }

    pub fn bumped(&self, row: usize, col: usize) -> RBOperator {
        let mut out = self.clone();
        *out.p.entry_mut(row, col) += &self.base.field().one();
        out
    }
}

/// `ω(Px, y) + ω(x, Py) + λω(x, y) = 0`.
fn compatibility<'a>(a: &'a Algebra, omega: &'a BilinearForm, rb: &'a RBOperator) -> Identity<'a> {
    let n = a.dim();
    Identity::new("compatibility", &[("e", n), ("e", n)], Shape::Grid, move |t| {
        let (x, y) = (a.basis(t[0]), a.basis(t[1]));
        let p = rb.operator();
        let v = &(&omega.eval(&p.column(t[0]), &y) + &omega.eval(&x, &p.column(t[1])))
            + &(rb.weight() * &omega.eval(&x, &y));
        (vec![v], vec![a.field().zero()])
    })
}

/// A commutative associative algebra with a skew form satisfying
/// `ω(x∗y, z) + ω(y∗z, x) + ω(z∗x, y) = 0`, optionally with a compatible
/// Rota-Baxter operator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnesCommutative {
    algebra: Algebra,
    omega: BilinearForm,
    rb: Option<RBOperator>,
}

impl ConnesCommutative {
    pub fn new(algebra: Algebra, omega: BilinearForm, rb: Option<RBOperator>) -> Result<ConnesCommutative> {
        if omega.dim() != algebra.dim() {
            return Err(Error::dims(algebra.dim(), omega.dim()));
        }
        if let Some(rb) = &rb {
            if rb.base != algebra {
                return Err(Error::Precondition("operator acts on a different algebra".into()));
            }
        }
        Ok(ConnesCommutative { algebra, omega, rb })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn omega(&self) -> &BilinearForm {
        &self.omega
    }

    pub fn rb(&self) -> Option<&RBOperator> {
        self.rb.as_ref()
    }

    pub fn check(&self) -> Report {
        let a = &self.algebra;
        let w = &self.omega;
        let n = a.dim();
        let mut suite = Suite::new(format!("Connes cocycle on `{}`", a.name()));
        suite.extend(a.comm_assoc_suite());
        suite
            .fact(Clause::fact("skew", w.is_skew()))
            .fact(Clause::fact("nondegenerate", w.is_nondegenerate()));
        suite.identity(Identity::new(
            "connes-cocycle",
            &[("e", n), ("e", n), ("e", n)],
            Shape::Grid,
            move |t| {
                let (x, y, z) = (t[0], t[1], t[2]);
                let v = &(&w.eval(&a.basis_mul(x, y), &a.basis(z)) + &w.eval(&a.basis_mul(y, z), &a.basis(x)))
                    + &w.eval(&a.basis_mul(z, x), &a.basis(y));
                (vec![v], vec![a.field().zero()])
            },
        ));
        if let Some(rb) = &self.rb {
            suite.extend(rb.suite());
            suite.identity(compatibility(a, w, rb));
        }
        suite.run()
    }

    /// `x∘y = (Wᵀ)⁻¹ M_xᵀ Wᵀ y`, the unique product with `ω(x∘y, z) = ω(y, x∗z)`.
    pub fn to_zinbiel(&self) -> Result<QuadraticAlgebra> {
        let report = self.check();
        if !report.passed {
            return Err(Error::invalid("Connes cocycle", report));
        }
        let a = &self.algebra;
        let n = a.dim();
        let wt = self.omega.matrix().transpose();
        let wt_inv = wt.inverse()?;
        let maps: Vec<Matrix> = (0..n)
            .map(|i| &(&wt_inv * &a.left_basis(i).transpose()) * &wt)
            .collect();
        let z = Algebra::from_fn(format!("{}°", a.name()), a.field(), n, |i, j, k| maps[i].get(k, j).clone())
            .with_flavor(Flavor::Zinbiel)?;
        QuadraticAlgebra::new(z, self.omega.clone())
    }

    /// The Zinbiel side together with the operator.
    pub fn to_quadratic_rb(&self) -> Result<QuadraticRB> {
        let rb = self
            .rb
            .as_ref()
            .ok_or_else(|| Error::Precondition("no Rota-Baxter operator attached".into()))?;
        let q = self.to_zinbiel()?;
        QuadraticRB::new(q, rb.p.clone(), rb.weight.clone())
    }
}

/// `(A, ∗, ω)` from a quadratic Zinbiel algebra.
pub fn connes_from_zinbiel(q: &QuadraticAlgebra) -> Result<ConnesCommutative> {
    let report = q.check();
    if !report.passed {
        return Err(Error::invalid("quadratic algebra", report));
    }
    ConnesCommutative::new(q.algebra().sub_adjacent()?, q.omega().clone(), None)
}

pub fn zinbiel_from_connes(c: &ConnesCommutative) -> Result<QuadraticAlgebra> {
    c.to_zinbiel()
}

/// A quadratic Zinbiel algebra with a Rota-Baxter operator satisfying
/// `ω(Px, y) + ω(x, Py) + λω(x, y) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticRB {
    quadratic: QuadraticAlgebra,
    rb: RBOperator,
}

impl QuadraticRB {
    pub fn new(quadratic: QuadraticAlgebra, p: Matrix, weight: Scalar) -> Result<QuadraticRB> {
        let rb = RBOperator::new(quadratic.algebra().clone(), p, weight)?;
        Ok(QuadraticRB { quadratic, rb })
    }

    pub fn quadratic(&self) -> &QuadraticAlgebra {
        &self.quadratic
    }

    pub fn rb(&self) -> &RBOperator {
        &self.rb
    }

    pub fn operator(&self) -> &Matrix {
        &self.rb.p
    }

    pub fn omega(&self) -> &BilinearForm {
        self.quadratic.omega()
    }

    pub fn weight(&self) -> &Scalar {
        &self.rb.weight
    }

    fn own_suite(&self) -> Suite<'_> {
        let a = self.quadratic.algebra();
        let mut suite = self.quadratic.suite().prefixed("quadratic");
        suite.subject = format!("quadratic Rota-Baxter algebra `{}`", a.name());
        suite.extend(self.rb.suite());
        suite.identity(compatibility(a, self.quadratic.omega(), &self.rb));
        suite
    }

    /// The same `(P, ω, λ)` over the (unchecked) sub-adjacent product.
    pub fn commutative_side(&self) -> ConnesCommutative {
        let c = self.quadratic.algebra().symmetrized();
        let rb = RBOperator {
            base: c.clone(),
            p: self.rb.p.clone(),
            weight: self.rb.weight.clone(),
        };
        ConnesCommutative {
            algebra: c,
            omega: self.quadratic.omega().clone(),
            rb: Some(rb),
        }
    }

    /// The own clauses, plus agreement of the verdict with the commutative
    /// side.
    pub fn check(&self) -> Report {
        let mut report = self.own_suite().run();
        let transfer = self.commutative_side().check();
        report.push(
            Clause::fact("transfer-agrees", report.passed == transfer.passed)
                .with_note(format!("commutative side {}", if transfer.passed { "passes" } else { "fails" })),
        );
        report
    }

    pub fn bumped(&self, row: usize, col: usize) -> QuadraticRB {
        QuadraticRB {
            quadratic: self.quadratic.clone(),
            rb: self.rb.bumped(row, col),
        }
    }
}

fn nonzero(lambda: &Scalar) -> Result<()> {
    if lambda.is_zero() {
        return Err(Error::Precondition("weight must be nonzero".into()));
    }
    Ok(())
}

fn require_factorizable(r: &RMatrix) -> Result<Matrix> {
    if !r.is_factorizable() {
        return Err(Error::Precondition("r is not factorizable".into()));
    }
    r.i_map().inverse()
}

/// `P = λ r₋ I⁻¹` and `ω_I(x, y) = ⟨I⁻¹x, y⟩`.
pub fn rb_from_factorizable(r: &RMatrix, lambda: &Scalar) -> Result<QuadraticRB> {
    nonzero(lambda)?;
    let i_inv = require_factorizable(r)?;
    let p = (r.r_minus() * &i_inv).scale(lambda);
    let omega = BilinearForm::new(i_inv.transpose())?;
    let q = QuadraticAlgebra::new(r.base().clone(), omega)?;
    QuadraticRB::new(q, p, lambda.clone())
}

/// `ℐ_ω` with `⟨ℐ_ω⁻¹x, y⟩ = ω(x, y)`, i.e. `(Wᵀ)⁻¹`.
pub fn omega_map(omega: &BilinearForm) -> Result<Matrix> {
    omega.matrix().transpose().inverse()
}

/// `r₊ = (1/λ)(P + λId)ℐ_ω` and `r = r₊ᵀ`; refuses invalid input.
pub fn factorizable_from_rb(q: &QuadraticRB) -> Result<RMatrix> {
    let lambda = q.weight();
    nonzero(lambda)?;
    let report = q.check();
    if !report.passed {
        return Err(Error::invalid("quadratic Rota-Baxter algebra", report));
    }
    let a = q.quadratic().algebra();
    let f = a.field();
    let io = omega_map(q.omega())?;
    let shifted = q.operator() + &Matrix::scalar(f, a.dim(), lambda);
    let r_plus = (&shifted * &io).scale(&lambda.inv()?);
    RMatrix::new(a.clone(), Tensor2::new(r_plus.transpose())?)
}

/// `ξ·_Iη = −λI⁻¹((1/λ)Iξ ∘ (1/λ)Iη)` on `A*`.
pub fn product_i(r: &RMatrix, lambda: &Scalar) -> Result<Algebra> {
    nonzero(lambda)?;
    let i_inv = require_factorizable(r)?;
    let a = r.base();
    let n = a.dim();
    let scaled = r.i_map().scale(&lambda.inv()?);
    let back = i_inv.scale(&-lambda);
    let prods: Vec<Vec<Vector>> = (0..n)
        .map(|i| (0..n).map(|j| back.apply(&a.mul(&scaled.column(i), &scaled.column(j)))).collect())
        .collect();
    Ok(Algebra::from_fn(format!("{}*_I", a.name()), a.field(), n, |i, j, k| prods[i][j][k].clone()))
}

/// `(1/λ)I: (A*, ·_r) → (A, ·_P)` with `P = λr₋I⁻¹` and
/// `−(1/λ)I: (A*, ·_I) → (A, ∘)`, both bijective.
pub fn check_i_isomorphism(r: &RMatrix, lambda: &Scalar) -> Result<Report> {
    let q = rb_from_factorizable(r, lambda)?;
    let dot_i = product_i(r, lambda)?;
    let dot_r = r.dual_product();
    let descendent = q.rb().descendent();
    let scaled = r.i_map().scale(&lambda.inv()?);
    let neg = -&scaled;
    let mut report = Report::new(format!("isomorphisms induced by I on `{}`", r.base().name()));
    report.push(Clause::fact("i-invertible", r.i_map().is_invertible()));
    report.absorb("product-i", dot_i.check_zinbiel());
    report.absorb("to-descendent", homomorphism_suite(&dot_r, &descendent, &scaled).run());
    report.absorb("to-base", homomorphism_suite(&dot_i, r.base(), &neg).run());
    Ok(report)
}

/// `I(I⁻¹x ·_r I⁻¹y) = (r₋I⁻¹x)∘y + x∘(r₋I⁻¹y) + x∘y`.
pub fn check_factorizable_rb_identity(r: &RMatrix) -> Result<Report> {
    let i_inv = require_factorizable(r)?;
    let a = r.base();
    let n = a.dim();
    let dot_r = r.dual_product();
    let p = r.r_minus() * &i_inv;
    let i_map = r.i_map();
    let suite = Suite::new(format!("factorization identity on `{}`", a.name())).with(Identity::new(
        "factorizable-rb-identity",
        &[("e", n), ("e", n)],
        Shape::vector("e"),
        |t| {
            let (x, y) = (a.basis(t[0]), a.basis(t[1]));
            let lhs = i_map.apply(&dot_r.mul(&i_inv.column(t[0]), &i_inv.column(t[1])));
            let rhs = &(&a.mul(&p.column(t[0]), &y) + &a.mul(&x, &p.column(t[1]))) + &a.mul(&x, &y);
            (lhs.into_vec(), rhs.into_vec())
        },
    ));
    Ok(suite.run())
}
