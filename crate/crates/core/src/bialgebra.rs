//! Quadratic Zinbiel algebras, Manin triples and Zinbiel bialgebras, with
//! the conversions between bialgebras, matched pairs and Manin triples.

use crate::algebra::{homomorphism_suite, Algebra, Flavor};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::matched_pair::MatchedPair;
use crate::report::{Clause, Identity, Report, Shape, Suite};
use crate::tensor::{BilinearForm, Tensor2};

/// A Zinbiel algebra with a skew form `ω` satisfying
/// `ω(x∘y, z) = ω(y, x∘z + z∘x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticAlgebra {
    algebra: Algebra,
    omega: BilinearForm,
}

impl QuadraticAlgebra {
    pub fn new(algebra: Algebra, omega: BilinearForm) -> Result<QuadraticAlgebra> {
        if omega.dim() != algebra.dim() {
            return Err(Error::dims(algebra.dim(), omega.dim()));
        }
        if omega.field() != algebra.field() {
            return Err(Error::FieldMismatch(algebra.field().to_string(), omega.field().to_string()));
        }
        Ok(QuadraticAlgebra { algebra, omega })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn omega(&self) -> &BilinearForm {
        &self.omega
    }

    pub fn suite(&self) -> Suite<'_> {
        let a = &self.algebra;
        let w = &self.omega;
        let n = a.dim();
        let mut suite = Suite::new(format!("quadratic algebra `{}`", a.name()));
        suite.extend(a.zinbiel_suite());
        suite
            .fact(Clause::fact("skew", w.is_skew()))
            .fact(Clause::fact("nondegenerate", w.is_nondegenerate()));
        let args = [("e", n), ("e", n), ("e", n)];
        suite.identity(Identity::new("invariance", &args, Shape::Grid, move |t| {
            let (x, y, z) = (a.basis(t[0]), a.basis(t[1]), a.basis(t[2]));
            let lhs = w.eval(&a.basis_mul(t[0], t[1]), &z);
            let rhs = w.eval(&y, &a.star(&x, &z));
            (vec![lhs], vec![rhs])
        }));
        suite.identity(Identity::new("derived-symmetry", &args, Shape::Grid, move |t| {
            let lhs = w.eval(&a.basis_mul(t[0], t[1]), &a.basis(t[2]));
            let rhs = w.eval(&a.basis_mul(t[2], t[1]), &a.basis(t[0]));
            (vec![lhs], vec![rhs])
        }));
        suite
    }

    pub fn check(&self) -> Report {
        self.suite().run()
    }
}

/// A quadratic algebra split into two subspaces, each given by basis columns
/// in ambient coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManinTriple {
    ambient: QuadraticAlgebra,
    first: Matrix,
    second: Matrix,
}

impl ManinTriple {
    pub fn new(ambient: QuadraticAlgebra, first: Matrix, second: Matrix) -> Result<ManinTriple> {
        let d = ambient.algebra().dim();
        for m in [&first, &second] {
            if m.rows() != d {
                return Err(Error::dims(d, m.rows()));
            }
        }
        Ok(ManinTriple { ambient, first, second })
    }

    pub fn ambient(&self) -> &QuadraticAlgebra {
        &self.ambient
    }

    pub fn first(&self) -> &Matrix {
        &self.first
    }

    pub fn second(&self) -> &Matrix {
        &self.second
    }

    /// The same triple with the two subspaces exchanged.
    pub fn swapped(&self) -> ManinTriple {
        ManinTriple {
            ambient: self.ambient.clone(),
            first: self.second.clone(),
            second: self.first.clone(),
        }
    }

    pub fn check(&self) -> Report {
        let a = self.ambient.algebra();
        let w = self.ambient.omega();
        let mut suite = self.ambient.suite().prefixed("quadratic");
        suite.subject = format!("Manin triple on `{}`", a.name());
        let both = self.first.hstack(&self.second);
        suite.fact(Clause::fact("spanning", both.is_square() && both.is_invertible()));
        suite.fact(Clause::fact("closure-1", a.is_closed(&self.first)));
        suite.fact(Clause::fact("closure-2", a.is_closed(&self.second)));
        for (name, m) in [("isotropy-1", &self.first), ("isotropy-2", &self.second)] {
            let k = m.cols();
            suite.identity(Identity::new(name, &[("u", k), ("u", k)], Shape::Grid, move |t| {
                let v = w.eval(&m.column(t[0]), &m.column(t[1]));
                (vec![v], vec![w.field().zero()])
            }));
        }
        suite.run()
    }
}

/// A Zinbiel algebra `A` and a Zinbiel product on `A*` in the dual basis.
/// The cobracket `α: A → A⊗A` is read off the dual product and
/// `β: A* → A*⊗A*` off the primal one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bialgebra {
    primal: Algebra,
    dual: Algebra,
}

impl Bialgebra {
    pub fn new(primal: Algebra, dual: Algebra) -> Result<Bialgebra> {
        if primal.dim() != dual.dim() {
            return Err(Error::dims(primal.dim(), dual.dim()));
        }
        if primal.field() != dual.field() {
            return Err(Error::FieldMismatch(primal.field().to_string(), dual.field().to_string()));
        }
        Ok(Bialgebra { primal, dual })
    }

    /// `(A, A*, 0, β)` with the zero product on `A*`.
    pub fn trivial(primal: &Algebra) -> Bialgebra {
        let dual = Algebra::zero(format!("{}*", primal.name()), primal.field(), primal.dim());
        Bialgebra {
            primal: primal.clone(),
            dual,
        }
    }

    pub fn primal(&self) -> &Algebra {
        &self.primal
    }

    pub fn dual(&self) -> &Algebra {
        &self.dual
    }

    pub fn dim(&self) -> usize {
        self.primal.dim()
    }

    /// `α(e_k)`, whose `(i, j)` coefficient is the `e_k`-coordinate of `e_i*·e_j*`.
    pub fn alpha(&self, k: usize) -> Tensor2 {
        cobracket(&self.dual, k)
    }

    /// `β(e_k*)`, whose `(i, j)` coefficient is `c_ij^k`.
    pub fn beta(&self, k: usize) -> Tensor2 {
        cobracket(&self.primal, k)
    }

    pub fn suite(&self) -> Suite<'_> {
        let mut suite = Suite::new(format!("bialgebra `{}` / `{}`", self.primal.name(), self.dual.name()));
        suite.extend(self.primal.zinbiel_suite().prefixed("primal"));
        suite.extend(self.dual.zinbiel_suite().prefixed("dual"));
        suite.identity(cocycle("alpha-cocycle", &self.primal, &self.dual, "e"));
        suite.identity(cocycle("beta-cocycle", &self.dual, &self.primal, "f"));
        suite
    }

    pub fn check(&self) -> Report {
        self.suite().run()
    }

    /// `(A*, A, β, α)`.
    pub fn dual_bialgebra(&self) -> Bialgebra {
        Bialgebra {
            primal: self.dual.clone(),
            dual: self.primal.clone(),
        }
    }

    /// Carry the structure along an invertible `φ: A → B`: the primal product
    /// by `φ`, the dual product by `(φᵀ)⁻¹`.
    pub fn transport(&self, phi: &Matrix) -> Result<Bialgebra> {
        let primal = self.primal.transport(phi)?;
        let dual = self.dual.transport(&phi.transpose().inverse()?)?;
        Bialgebra::new(primal, dual)
    }

    /// `(A, A*; −L*−R*, R*, −𝓛*−𝓡*, 𝓡*)` without validating.
    pub fn coregular_matched_pair(&self) -> MatchedPair {
        MatchedPair::coregular(&self.primal, &self.dual).expect("dimensions agree")
    }

    /// `A ⋈ A*` with `ω(x+ξ, y+η) = ξ(y) − η(x)`, `A` and `A*` as the two
    /// coordinate halves. No validation.
    pub fn standard_manin_triple(&self) -> ManinTriple {
        let n = self.dim();
        let f = self.primal.field();
        let algebra = self
            .coregular_matched_pair()
            .bowtie()
            .renamed(format!("{}⋈{}", self.primal.name(), self.dual.name()));
        let ambient = QuadraticAlgebra {
            algebra,
            omega: BilinearForm::standard(f, n),
        };
        let unit = |shift: usize| Matrix::from_fn(f, 2 * n, n, |r, c| if r == c + shift { f.one() } else { f.zero() });
        ManinTriple {
            ambient,
            first: unit(0),
            second: unit(n),
        }
    }

    fn require_valid(&self) -> Result<()> {
        let report = self.check();
        if !report.passed {
            return Err(Error::invalid("bialgebra", report));
        }
        Ok(())
    }

    /// The equivalent matched pair; refuses an invalid bialgebra.
    pub fn to_matched_pair(&self) -> Result<MatchedPair> {
        self.require_valid()?;
        Ok(self.coregular_matched_pair())
    }

    /// The equivalent Manin triple; refuses an invalid bialgebra.
    pub fn to_manin(&self) -> Result<ManinTriple> {
        self.require_valid()?;
        Ok(self.standard_manin_triple())
    }

    /// Read `A₁` and `A₂ ≅ A₁*` (paired by `ω`) back off a valid Manin triple.
    pub fn from_manin(triple: &ManinTriple) -> Result<Bialgebra> {
        let report = triple.check();
        if !report.passed {
            return Err(Error::invalid("Manin triple", report));
        }
        let a = triple.ambient.algebra();
        let w = triple.ambient.omega().matrix();
        let (u, v) = (&triple.first, &triple.second);
        // G[a][b] = ω(v_a, u_b); the columns of V(G⁻¹)ᵀ are dual to those of U.
        let g = &(&v.transpose() * w) * u;
        let v_dual = v * &g.inverse()?.transpose();
        let primal = a.restrict(u, &format!("{}₁", a.name()))?.with_flavor(Flavor::Zinbiel)?;
        let dual = a.restrict(&v_dual, &format!("{}₂", a.name()))?.with_flavor(Flavor::Zinbiel)?;
        Bialgebra::new(primal, dual)
    }

    /// Raw view of a matched pair of the coregular form as a bialgebra.
    pub fn from_matched_pair(pair: &MatchedPair) -> Result<Bialgebra> {
        let report = pair.check();
        if !report.passed {
            return Err(Error::invalid("matched pair", report));
        }
        let b = Bialgebra::new(pair.a().clone(), pair.b().clone())?;
        if b.coregular_matched_pair() != *pair {
            return Err(Error::Precondition("matched pair is not of the coregular form".into()));
        }
        Ok(b)
    }
}

fn cobracket(source: &Algebra, k: usize) -> Tensor2 {
    let n = source.dim();
    let f = source.field();
    Tensor2::new(Matrix::from_fn(f, n, n, |i, j| source.constant(i, j, k).clone())).expect("square")
}

/// `δ(x∗y) = (L_x⊗Id)δ(y) + (Id⊗(L_y+R_y))δ(x)`, where `δ` is the cobracket
/// read off `co` and `L`, `R` are taken in `base`.
fn cocycle<'a>(name: &str, base: &'a Algebra, co: &'a Algebra, label: &str) -> Identity<'a> {
    let n = base.dim();
    let id = Matrix::identity(base.field(), n);
    Identity::new(name, &[(label, n), (label, n)], Shape::Matrix { rows: n, cols: n }, move |t| {
        let (x, y) = (t[0], t[1]);
        let s = base.star(&base.basis(x), &base.basis(y));
        let mut lhs = Tensor2::zeros(base.field(), n);
        for (k, c) in s.iter().enumerate() {
            if !c.is_zero() {
                lhs.add_scaled(c, &cobracket(co, k));
            }
        }
        let ly = &base.left_basis(y) + &base.right_basis(y);
        let rhs = &cobracket(co, y).apply(&base.left_basis(x), &id) + &cobracket(co, x).apply(&id, &ly);
        (lhs.matrix().entries().to_vec(), rhs.matrix().entries().to_vec())
    })
}

/// `φ: A → B` as a bialgebra morphism: an algebra map with
/// `(φ⊗φ)α_A = α_B φ` and `(φ*⊗φ*)β_B = β_A φ*`.
pub fn check_bialgebra_hom(source: &Bialgebra, target: &Bialgebra, phi: &Matrix) -> Result<Report> {
    let (n, m) = (source.dim(), target.dim());
    if phi.cols() != n || phi.rows() != m {
        return Err(Error::dims(n, phi.cols()));
    }
    let f = source.primal.field();
    let mut suite = homomorphism_suite(&source.primal, &target.primal, phi);
    suite.subject = format!("bialgebra morphism `{}` -> `{}`", source.primal.name(), target.primal.name());
    suite.identity(Identity::new("alpha-compatibility", &[("e", n)], Shape::Matrix { rows: m, cols: m }, move |t| {
        let lhs = source.alpha(t[0]).apply(phi, phi);
        let mut rhs = Tensor2::zeros(f, m);
        for l in 0..m {
            rhs.add_scaled(phi.get(l, t[0]), &target.alpha(l));
        }
        (lhs.matrix().entries().to_vec(), rhs.matrix().entries().to_vec())
    }));
    let phit = phi.transpose();
    suite.identity(Identity::new("beta-compatibility", &[("f", m)], Shape::Matrix { rows: n, cols: n }, move |t| {
        let lhs = target.beta(t[0]).apply(&phit, &phit);
        let mut rhs = Tensor2::zeros(f, n);
        for k in 0..n {
            rhs.add_scaled(phi.get(t[0], k), &source.beta(k));
        }
        (lhs.matrix().entries().to_vec(), rhs.matrix().entries().to_vec())
    }));
    Ok(suite.run())
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
    fn trivial_bialgebra_on_n2() {
        let b = Bialgebra::trivial(&n2());
        assert!(b.check().passed);
        assert!(b.alpha(0).is_zero());
        assert_eq!(b.beta(1), Tensor2::basis(Q, 2, 0, 0));
        assert!(b.dual_bialgebra().check().passed);
        let mt = b.to_manin().unwrap();
        assert!(mt.check().passed);
        assert!(mt.swapped().check().passed);
        assert_eq!(Bialgebra::from_manin(&mt).unwrap(), b);
        assert_eq!(Bialgebra::from_matched_pair(&b.to_matched_pair().unwrap()).unwrap(), b);
    }

    #[test]
    fn quadratic_zero_algebra() {
        let z = Algebra::zero("Z0", Q, 2);
        let w = BilinearForm::new(Matrix::from_ints(Q, &[&[0, 1], &[-1, 0]])).unwrap();
        assert!(QuadraticAlgebra::new(z.clone(), w).unwrap().check().passed);
        let deg = BilinearForm::new(Matrix::zeros(Q, 2, 2)).unwrap();
        let r = QuadraticAlgebra::new(z, deg).unwrap().check();
        assert!(!r.clause("nondegenerate").unwrap().passed);
    }

    #[test]
    fn graph_subspace_breaks_closure() {
        let mt = Bialgebra::trivial(&n2()).standard_manin_triple();
        // Graph of e1 ↦ e2*: (e1+e4)∘(e1+e4) = e2 + e3 leaves span{e1 + e4, e2}.
        let first = Matrix::from_ints(Q, &[&[1, 0], &[0, 1], &[0, 0], &[1, 0]]);
        let bad = ManinTriple::new(mt.ambient().clone(), first, mt.second().clone()).unwrap();
        let r = bad.check();
        assert!(!r.passed);
        assert!(!r.clause("closure-1").unwrap().passed);
    }

    #[test]
    fn transport_by_permutation() {
        let b = Bialgebra::trivial(&n2());
        let phi = Matrix::from_ints(Q, &[&[0, 1], &[1, 0]]);
        let t = b.transport(&phi).unwrap();
        assert!(t.check().passed);
        assert_eq!(t.primal().constant(1, 1, 0), &Q.one());
        assert!(check_bialgebra_hom(&b, &t, &phi).unwrap().passed);
        assert!(!check_bialgebra_hom(&b, &b, &phi).unwrap().passed);
        assert_eq!(b.transport(&Matrix::identity(Q, 2)).unwrap(), b);
    }

    #[test]
    fn converters_refuse_invalid_input() {
        let bad_dual = Algebra::from_constants("idem", Q, 2, [(0, 0, 0, Q.one())]).unwrap();
        let b = Bialgebra::new(n2(), bad_dual).unwrap();
        assert!(!b.check().passed);
        assert!(b.to_manin().is_err());
        assert!(b.to_matched_pair().is_err());
        assert!(!b.coregular_matched_pair().check().passed);
        assert!(!b.standard_manin_triple().check().passed);
    }
}
