//! The double `A ⋈ A*` of a Zinbiel bialgebra and its canonical r-matrix.

use crate::algebra::Algebra;
use crate::bialgebra::{Bialgebra, QuadraticAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::report::{Clause, Identity, Report, Shape, Suite};
use crate::tensor::{BilinearForm, Tensor2};
use crate::yang_baxter::{Classification, RMatrix};

/// Basis order `(e_1..e_n, e_1*..e_n*)`; the dual space is ordered
/// `(e_1*..e_n*, e_1..e_n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleAlgebra {
    source: Bialgebra,
    algebra: Algebra,
    canonical_r: Tensor2,
    dual_product: Algebra,
}

impl DoubleAlgebra {
    /// Refuses an invalid bialgebra.
    pub fn new(source: &Bialgebra) -> Result<DoubleAlgebra> {
        let report = source.check();
        if !report.passed {
            return Err(Error::invalid("bialgebra", report));
        }
        let n = source.dim();
        let f = source.primal().field();
        let algebra = source
            .coregular_matched_pair()
            .bowtie()
            .renamed(format!("D({})", source.primal().name()));
        let canonical_r = Tensor2::new(Matrix::from_fn(f, 2 * n, 2 * n, |i, j| {
            if i < n && j == i + n {
                f.one()
            } else {
                f.zero()
            }
        }))
        .expect("square");
        let dual_product = source
            .dual()
            .direct_sum(source.primal())?
            .renamed(format!("D({})*", source.primal().name()));
        Ok(DoubleAlgebra {
            source: source.clone(),
            algebra,
            canonical_r,
            dual_product,
        })
    }

    pub fn source(&self) -> &Bialgebra {
        &self.source
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn canonical_r(&self) -> &Tensor2 {
        &self.canonical_r
    }

    /// `(ξ,x)·(η,y) = (ξ·η, x∘y)` on the dual space.
    pub fn dual_product(&self) -> &Algebra {
        &self.dual_product
    }

    pub fn half(&self) -> usize {
        self.source.dim()
    }

    /// Copy carrying a different tensor in place of the canonical one.
    pub fn with_r(&self, r: Tensor2) -> DoubleAlgebra {
        DoubleAlgebra {
            canonical_r: r,
            ..self.clone()
        }
    }

    pub fn r_matrix(&self) -> RMatrix {
        RMatrix::new(self.algebra.clone(), self.canonical_r.clone()).expect("dimensions agree")
    }

    /// The double with `ω(x+ξ, y+η) = ξ(y) − η(x)`.
    pub fn quadratic(&self) -> QuadraticAlgebra {
        QuadraticAlgebra::new(self.algebra.clone(), BilinearForm::standard(self.algebra.field(), self.half()))
            .expect("dimensions agree")
    }

    /// `(x,ξ)·(y,η) = (x∘y − (𝓛*_ξ+𝓡*_ξ)y + 𝓡*_η x, ξ·η − (L*_x+R*_x)η + R*_y ξ)`
    /// evaluated directly from the two products.
    pub fn formula_product(&self, u: &Vector, v: &Vector) -> Vector {
        let n = self.half();
        let (a, d) = (self.source.primal(), self.source.dual());
        let (x, xi) = u.split(n);
        let (y, eta) = v.split(n);
        let lr = |alg: &Algebra, z: &Vector| (&alg.left(z) + &alg.right(z)).transpose();
        let first = &(&a.mul(&x, &y) + &lr(d, &xi).apply(&y)) - &d.right(&eta).transpose().apply(&x);
        let second = &(&d.mul(&xi, &eta) + &lr(a, &x).apply(&eta)) - &a.right(&y).transpose().apply(&xi);
        first.concat(&second)
    }

    pub fn suite(&self) -> Suite<'_> {
        let d = &self.algebra;
        let m = d.dim();
        let mut suite = Suite::new(format!("double `{}`", d.name()));
        suite.extend(d.zinbiel_suite());
        suite.identity(Identity::new("double-product", &[("d", m), ("d", m)], Shape::vector("d"), move |t| {
            let lhs = d.basis_mul(t[0], t[1]);
            let rhs = self.formula_product(&d.basis(t[0]), &d.basis(t[1]));
            (lhs.into_vec(), rhs.into_vec())
        }));
        suite
    }

    pub fn check(&self) -> Report {
        self.suite().run()
    }

    /// Every clause of the factorizability statement for the carried tensor:
    /// vanishing bracket, invariant skew part, `r₊(ξ,x) = (0,ξ)`,
    /// `r₋(ξ,x) = (x,0)`, `I(ξ,x) = (−x,ξ)`, `I` invertible, classification
    /// and the induced dual product.
    pub fn verify_factorizable(&self) -> Report {
        let n = self.half();
        let m = 2 * n;
        let rm = self.r_matrix();
        let f = self.algebra.field();
        let mut report = Report::new(format!("factorizable double `{}`", self.algebra.name()));
        let bracket = rm.bracket();
        report.push(
            Clause::fact("bracket-vanishes", bracket.is_zero())
                .with_note(format!("support {}", bracket.support())),
        );
        report.absorb("skew-part", rm.invariance_report());
        // Images of the dual basis (e_i*, then e_i) under r₊, r₋ and I.
        let expected = |which: usize, col: usize| -> Vector {
            let mut v = Vector::zeros(f, m);
            let (xi, i) = (col < n, col % n);
            match (which, xi) {
                (0, true) => v[n + i] = f.one(),
                (1, false) => v[i] = f.one(),
                (2, true) => v[n + i] = f.one(),
                (2, false) => v[i] = -&f.one(),
                _ => {}
            }
            v
        };
        let maps = [rm.r_plus(), rm.r_minus(), rm.i_map()];
        let dual = rm.dual_product();
        let target = &self.dual_product;
        let mut suite = Suite::new("");
        for (which, name) in ["r-plus", "r-minus", "i-map"].into_iter().enumerate() {
            let map = maps[which];
            suite.identity(Identity::new(name, &[("f", m)], Shape::vector("d"), move |t| {
                (map.column(t[0]).into_vec(), expected(which, t[0]).into_vec())
            }));
        }
        suite.identity(Identity::new("dual-product", &[("f", m), ("f", m)], Shape::vector("f"), |t| {
            (dual.basis_mul(t[0], t[1]).into_vec(), target.basis_mul(t[0], t[1]).into_vec())
        }));
        report.absorb("", suite.run());
        report.push(Clause::fact("i-invertible", rm.i_map().is_invertible()));
        let class = rm.classify();
        let label = match &class {
            Ok(c) => c.token().to_string(),
            Err(_) => "rejected".to_string(),
        };
        report.push(
            Clause::fact("classification", matches!(class, Ok(Classification::Factorizable))).with_note(label),
        );
        report
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::representation::Representation;
    use crate::scalar::Field;

    const Q: Field = Field::Rational;

    fn n2() -> Algebra {
        Algebra::zinbiel("N2", Q, 2, [(0, 0, 1, Q.one())]).unwrap()
    }

    #[test]
    fn double_of_line() {
        let d = DoubleAlgebra::new(&Bialgebra::trivial(&Algebra::zero("Z0", Q, 1))).unwrap();
        assert_eq!(d.algebra(), &Algebra::zero("Z0(2)", Q, 2));
        assert_eq!(d.canonical_r(), &Tensor2::basis(Q, 2, 0, 1));
        assert!(d.verify_factorizable().passed);
        assert_eq!(d.r_matrix().i_map(), &Matrix::from_ints(Q, &[&[0, -1], &[1, 0]]));
    }

    #[test]
    fn double_of_trivial_n2() {
        let d = DoubleAlgebra::new(&Bialgebra::trivial(&n2())).unwrap();
        assert_eq!(d.algebra(), &Representation::coregular(&n2()).semidirect_product());
        assert!(d.check().passed);
        let r = d.verify_factorizable();
        assert!(r.passed, "{r}");
        assert!(d.quadratic().check().passed);
        assert!(d.algebra().sub_adjacent().unwrap().check_comm_assoc().passed);
    }

    #[test]
    fn corrupted_r_fails() {
        let d = DoubleAlgebra::new(&Bialgebra::trivial(&n2())).unwrap();
        let mut r = d.canonical_r().clone();
        r.set(0, 2, Q.zero());
        let bad = d.with_r(r).verify_factorizable();
        assert!(!bad.passed);
        assert!(!bad.clause("i-invertible").unwrap().passed);
    }
}
